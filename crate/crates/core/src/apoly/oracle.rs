//! Independent derivation of the canonical factor by eliminating `z`.
//!
//! On the boundary `s2 = ε = ±1` the canonical component is cut out by
//! `P₁(z; M) = 0` (the canonical polynomial at `x = M + M⁻¹`, `y = 2ε`) and
//! the longitude eigenvalue is read off `w₁₁`:
//!
//! ```text
//! w₁₁ = (−1 − s2² + s1 s2 z) / (s1 + s1 s2² − s2 z)
//! ```
//!
//! with `L = w₁₁/M` for odd `k` and `L M² = w₁₁/M` for even `k`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::polyring::{cst, resultant, sym, var, LaurentPoly, Var};
use crate::riley::canonical_form_at;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Component {
    A,
    B,
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Component::A => "a",
            Component::B => "b",
        })
    }
}

impl FromStr for Component {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "a" | "A" => Ok(Component::A),
            "b" | "B" => Ok(Component::B),
            _ => Err(Error::InvalidArgument(format!("unknown component `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OracleOutput {
    pub k: u32,
    pub component: Component,
    pub epsilon: i8,
    /// The resultant as computed.
    pub raw: LaurentPoly,
    /// Primitive part of `raw` with the boundary binomials divided out.
    pub reduced: LaurentPoly,
    /// Boundary binomials removed from `raw`, with multiplicities.
    pub stripped: Vec<(LaurentPoly, u32)>,
}

/// `M ± 1`, `L ± 1`, `LM² ± 1`.
pub fn boundary_factors() -> Vec<LaurentPoly> {
    let m = var(Var::M);
    let l = var(Var::L);
    let lm2 = &l * &m.pow(2);
    vec![
        &m - &cst(1),
        &m + &cst(1),
        &l - &cst(1),
        &l + &cst(1),
        &lm2 - &cst(1),
        &lm2 + &cst(1),
    ]
}

/// Divide out every boundary binomial as often as it divides `p`.
pub fn strip_boundary_factors(p: &LaurentPoly) -> (LaurentPoly, Vec<(LaurentPoly, u32)>) {
    let mut rest = p.clone();
    let mut stripped = Vec::new();
    for f in boundary_factors() {
        let mut mult = 0;
        while let Ok(q) = rest.exact_div(&f) {
            if q.is_zero() {
                break;
            }
            rest = q;
            mult += 1;
        }
        if mult > 0 {
            stripped.push((f, mult));
        }
    }
    (rest, stripped)
}

/// `Res_z(P₁, P₂)` on the boundary `s_other = ε`.
pub fn elimination_resultant(k: u32, component: Component, epsilon: i8) -> Result<LaurentPoly> {
    if k == 0 {
        return Err(Error::NotHyperbolic(0));
    }
    if epsilon != 1 && epsilon != -1 {
        return Err(Error::InvalidArgument(format!("ε must be ±1, got {epsilon}")));
    }
    let e = cst(epsilon as i64);
    let meridian = sym(Var::M);
    let boundary = cst(2 * epsilon as i64);
    let z = var(Var::Z);
    let p1 = match component {
        Component::A => canonical_form_at(k, &meridian, &boundary, &z),
        Component::B => canonical_form_at(k, &boundary, &meridian, &z),
    };
    let m = var(Var::M);
    let l = var(Var::L);
    // w₁₁ = num/den with the meridian of the chosen component as s1
    let num = &(&(&e * &m) * &z) - &cst(2);
    let den = &cst(2) * &m - &(&e * &z);
    let framing = if k % 2 == 1 { 1 } else { 3 };
    let p2 = &(&l * &LaurentPoly::var_pow(Var::M, framing)) * &den - num;
    let res = resultant(&p1, &p2, Var::Z)?;
    if res.is_zero() {
        return Err(Error::Degenerate(format!(
            "resultant vanishes identically for k = {k}, component {component}, ε = {epsilon}"
        )));
    }
    Ok(res)
}

pub fn elimination_oracle_with(k: u32, component: Component, epsilon: i8) -> Result<OracleOutput> {
    let raw = elimination_resultant(k, component, epsilon)?;
    let (rest, stripped) = strip_boundary_factors(&raw.primitive_part()?);
    Ok(OracleOutput {
        k,
        component,
        epsilon,
        raw,
        reduced: rest.primitive_part()?,
        stripped,
    })
}

/// Oracle on the boundary `s2 = 1` (component `a`) or `s1 = 1` (component
/// `b`).
pub fn elimination_oracle(k: u32, component: Component) -> Result<OracleOutput> {
    elimination_oracle_with(k, component, 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::apoly::apoly_closed_form;

    #[test]
    fn k1_matches_fixture() {
        let out = elimination_oracle(1, Component::A).unwrap();
        assert_eq!(out.reduced.to_string(), "M^4*L^2 - M^4*L + 4*M^2*L - L + 1");
        assert_eq!(out.reduced, apoly_closed_form(1).unwrap().canonical_factor);
    }

    #[test]
    fn both_signs_and_components_agree_small_k() {
        for k in 1..=3 {
            let want = apoly_closed_form(k).unwrap().canonical_factor;
            for c in [Component::A, Component::B] {
                for eps in [1, -1] {
                    let out = elimination_oracle_with(k, c, eps).unwrap();
                    assert_eq!(out.reduced, want, "k = {k}, {c}, ε = {eps}");
                }
            }
        }
    }

    #[test]
    fn stripping_counts_multiplicity() {
        let m = var(Var::M);
        let l = var(Var::L);
        let core = &(&l * &m) + &cst(3);
        let p = &(&core * &(&l - &cst(1)).pow(2)) * &(&m + &cst(1));
        let (rest, stripped) = strip_boundary_factors(&p);
        assert_eq!(rest, core);
        assert_eq!(stripped, vec![(&m + &cst(1), 1), (&l - &cst(1), 2)]);
    }

    #[test]
    fn zero_is_rejected() {
        assert!(elimination_oracle(0, Component::A).is_err());
        assert!(elimination_resultant(1, Component::A, 0).is_err());
    }
}
