//! Nonabelian representations of two-bridge link groups and the Riley
//! polynomials of the twisted Whitehead links.
//!
//! Up to conjugation a nonabelian representation sends the meridians to
//!
//! ```text
//! ρ(a) = [[s1, 1], [0, 1/s1]]      ρ(b) = [[s2, 0], [u, 1/s2]]
//! ```
//!
//! and `ρ(aw) = ρ(wa)` reduces to the single equation `w'₂₁ = 0` where
//! `ρ(w)₂₁ = u·w'₂₁`.

mod word;

use std::collections::BTreeMap;

use nalgebra::Matrix2;
use num_complex::Complex64;
use serde::Serialize;

pub use word::{build_relator, build_word, epsilon_sequence, GroupWord, Letter, LinkSpec, Relator};

use crate::chebyshev::{cheb_at, mat_power};
use crate::error::{Error, Result};
pub use crate::mat2::Mat2;
use crate::polyring::{antisym, cst, sym, var, LaurentPoly, Monomial, Var};

pub fn rho_letter(l: Letter) -> Mat2 {
    let s1 = var(Var::S1);
    let s1i = LaurentPoly::var_pow(Var::S1, -1);
    let s2 = var(Var::S2);
    let s2i = LaurentPoly::var_pow(Var::S2, -1);
    let u = var(Var::U);
    match l {
        Letter::A => Mat2::new(s1, cst(1), cst(0), s1i),
        Letter::AInv => Mat2::new(s1i, cst(-1), cst(0), s1),
        Letter::B => Mat2::new(s2, cst(0), u, s2i),
        Letter::BInv => Mat2::new(s2i, cst(0), -u, s2),
    }
}

/// `ρ(word)` by straight multiplication.
pub fn rho(word: &GroupWord) -> Mat2 {
    word.letters()
        .iter()
        .fold(Mat2::identity(), |acc, &l| &acc * &rho_letter(l))
}

/// `ρ(w)`, using `V^n = S_{n-1}(v)V - S_{n-2}(v)` for the `c^n`, `d^n`
/// blocks.
pub fn rho_relator(rel: &Relator) -> Mat2 {
    match rel {
        Relator::Plain(w) => rho(w),
        Relator::Blocks { n, middle } => {
            let c = rho(&Relator::c());
            let d = rho(&Relator::d());
            let v = c.trace();
            let cn = mat_power(&c, *n as i64, &v);
            let dn = mat_power(&d, *n as i64, &v);
            &(&cn * &rho(middle)) * &dn
        }
    }
}

/// `x ↦ s1 + 1/s1`, `y ↦ s2 + 1/s2`, `z ↦ u + s1 s2 + 1/(s1 s2)`.
pub fn trace_bindings() -> BTreeMap<Var, LaurentPoly> {
    let z = var(Var::U)
        + LaurentPoly::monomial(1, Monomial::from_pairs(&[(Var::S1, 1), (Var::S2, 1)]))
        + LaurentPoly::monomial(1, Monomial::from_pairs(&[(Var::S1, -1), (Var::S2, -1)]));
    [(Var::X, sym(Var::S1)), (Var::Y, sym(Var::S2)), (Var::Z, z)]
        .into_iter()
        .collect()
}

/// `x² + y² + z² − xyz − 2`, the trace of `ρ(bab⁻¹a⁻¹)`.
pub fn v_of(x: &LaurentPoly, y: &LaurentPoly, z: &LaurentPoly) -> LaurentPoly {
    x * x + y * y + z * z - &(x * y) * z - cst(2)
}

/// Riley polynomial computed from the matrices: `ρ(w)₂₁ / u`.
pub fn riley_from_matrices(spec: &LinkSpec) -> Result<LaurentPoly> {
    let w = rho_relator(&build_relator(spec)?);
    w.m21
        .exact_div(&var(Var::U))
        .map_err(|_| Error::Degenerate(format!("ρ(w)₂₁ of {spec} is not divisible by u")))
}

/// `r₂₂ − r₁₁ + (s1 − 1/s1) r₁₂ + (s2 − 1/s2) r'₂₁`, which vanishes for
/// palindromic words of odd length with these matrix conventions.
pub fn palindromic_defect(r: &Mat2) -> Result<LaurentPoly> {
    let r21 = r.m21.exact_div(&var(Var::U))?;
    Ok(&r.m22 - &r.m11 + &antisym(Var::S1) * &r.m12 + &antisym(Var::S2) * &r21)
}

fn parity(k: u32) -> (bool, i64) {
    if k % 2 == 1 {
        (true, (k as i64 + 1) / 2)
    } else {
        (false, k as i64 / 2)
    }
}

/// The canonical-component polynomial with arbitrary values for the trace
/// coordinates. No hyperbolicity check; `k = 0` gives `z`.
pub fn canonical_form_at(k: u32, x: &LaurentPoly, y: &LaurentPoly, z: &LaurentPoly) -> LaurentPoly {
    let v = v_of(x, y, z);
    let xy = x * y;
    let (odd, n) = parity(k);
    if odd {
        // (xy − vz) S_{n−1}(v) − (xy − 2z) S_{n−2}(v)
        let (s1, s2) = crate::chebyshev::cheb_pair_at(n - 1, &v);
        (&xy - &(&v * z)) * s1 - (&xy - &(cst(2) * z)) * s2
    } else {
        // z S_n(v) − (xy − z) S_{n−1}(v)
        let (sn, sn1) = crate::chebyshev::cheb_pair_at(n, &v);
        z * &sn - (&xy - z) * sn1
    }
}

/// Canonical-component polynomial of `W_k` in `x, y, z` with `v` expanded.
pub fn canonical_poly(k: u32) -> Result<LaurentPoly> {
    if k == 0 {
        return Err(Error::NotHyperbolic(0));
    }
    Ok(canonical_form_at(k, &var(Var::X), &var(Var::Y), &var(Var::Z)))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FactorKind {
    Canonical,
    /// A Chebyshev factor in `v`; it splits over the reals as
    /// `∏ (v − root)`.
    Chebyshev { v_roots: Vec<f64> },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RileyFactor {
    pub poly: LaurentPoly,
    #[serde(flatten)]
    pub kind: FactorKind,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RileyData {
    pub k: u32,
    #[serde(skip)]
    pub riley_uform: LaurentPoly,
    pub riley_xyz: LaurentPoly,
    pub factors: Vec<RileyFactor>,
}

/// Values `v` where the Chebyshev factor of `W_k`'s Riley polynomial
/// vanishes: `2cos(jπ/n)` for `k = 2n−1`, `2cos((2j−1)π/(2n+1))` for
/// `k = 2n`.
pub fn chebyshev_v_roots(k: u32) -> Vec<f64> {
    use std::f64::consts::PI;
    let (odd, n) = parity(k);
    if odd {
        (1..n).map(|j| 2.0 * (j as f64 * PI / n as f64).cos()).collect()
    } else {
        (1..=n)
            .map(|j| 2.0 * ((2 * j - 1) as f64 * PI / (2 * n + 1) as f64).cos())
            .collect()
    }
}

/// Closed-form Riley polynomial of `W_k`, factored as canonical factor
/// times a Chebyshev factor.
pub fn riley_closed_form(k: u32) -> Result<RileyData> {
    let (x, y, z) = (var(Var::X), var(Var::Y), var(Var::Z));
    let v = v_of(&x, &y, &z);
    let canonical = canonical_form_at(k, &x, &y, &z);
    let (odd, n) = parity(k);
    let cheb_factor = if odd {
        cheb_at(n - 1, &v)
    } else {
        cheb_at(n, &v) - cheb_at(n - 1, &v)
    };
    let riley_xyz = &canonical * &cheb_factor;
    let riley_uform = riley_xyz.substitute_poly(&trace_bindings())?;
    Ok(RileyData {
        k,
        riley_uform,
        riley_xyz,
        factors: vec![
            RileyFactor {
                poly: canonical,
                kind: FactorKind::Canonical,
            },
            RileyFactor {
                poly: cheb_factor,
                kind: FactorKind::Chebyshev {
                    v_roots: chebyshev_v_roots(k),
                },
            },
        ],
    })
}

/// Equality up to `±` a monomial.
pub fn equal_up_to_unit(a: &LaurentPoly, b: &LaurentPoly) -> bool {
    crate::polyring::unit_multiple(a, b).is_some() || (a.is_zero() && b.is_zero())
}

pub type CMat2 = Matrix2<Complex64>;

pub fn rho_letter_numeric(l: Letter, s1: Complex64, s2: Complex64, u: Complex64) -> CMat2 {
    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    match l {
        Letter::A => CMat2::new(s1, one, zero, one / s1),
        Letter::AInv => CMat2::new(one / s1, -one, zero, s1),
        Letter::B => CMat2::new(s2, zero, u, one / s2),
        Letter::BInv => CMat2::new(one / s2, zero, -u, s2),
    }
}

/// Numerical `ρ(word)` at a point `(s1, s2, u)`.
pub fn rho_numeric(word: &GroupWord, s1: Complex64, s2: Complex64, u: Complex64) -> CMat2 {
    word.letters()
        .iter()
        .fold(CMat2::identity(), |acc, &l| acc * rho_letter_numeric(l, s1, s2, u))
}
