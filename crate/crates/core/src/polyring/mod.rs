//! Exact sparse Laurent polynomials over the integers in a fixed alphabet of
//! variables, with rational functions, substitution, numerical evaluation
//! and resultants.

mod json;
mod laurent;
mod ratfunc;
mod resultant;
mod var;

pub use json::{PolyJson, TermJson};
pub use laurent::{cst, var, LaurentPoly, Monomial};
pub use ratfunc::{ratfunc_eq, RatFunc};
pub use resultant::{determinant, resultant, sylvester_matrix, unit_multiple};
pub use var::{Var, NVARS};

use std::collections::BTreeMap;

/// Build a binding map from `(var, value)` pairs.
pub fn bindings<T: Clone>(pairs: &[(Var, T)]) -> BTreeMap<Var, T> {
    pairs.iter().cloned().collect()
}

/// `x + x^{-1}`
pub fn sym(v: Var) -> LaurentPoly {
    LaurentPoly::var(v) + LaurentPoly::var_pow(v, -1)
}

/// `x - x^{-1}`
pub fn antisym(v: Var) -> LaurentPoly {
    LaurentPoly::var(v) - LaurentPoly::var_pow(v, -1)
}
