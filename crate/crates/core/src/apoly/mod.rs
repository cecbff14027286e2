//! The A-polynomial 2-tuple of `W_k`.
//!
//! For `k = 2n−1` the canonical factor is `F(M, L)`, a polynomial in
//! `M ± M⁻¹` and `T = (L−1)/(L+1)`; for `k = 2n` it is `G(M, L)` with
//! `T = (LM²−1)/(LM²+1)`. Both are cleared of denominators and normalized
//! to primitive integer polynomials here.

mod newton;
mod oracle;
mod witness;

use num_bigint::BigInt;
use serde::Serialize;

pub use newton::{newton_polygon, NewtonPolygon, Slope};
pub use oracle::{
    boundary_factors, elimination_oracle, elimination_oracle_with, elimination_resultant,
    strip_boundary_factors, Component,
    OracleOutput,
};
pub use witness::{numeric_witness, NonCanonicalTrial, WitnessReport, WitnessTrial};

use crate::chebyshev::binom;
use crate::error::{Error, Result};
use crate::polyring::{antisym, cst, sym, unit_multiple, var, LaurentPoly, Var};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct APolyTuple {
    pub k: u32,
    #[serde(rename = "A1")]
    pub a1: LaurentPoly,
    #[serde(rename = "A2")]
    pub a2: LaurentPoly,
    pub nonhyp_factor: LaurentPoly,
    pub canonical_factor: LaurentPoly,
}

/// Coefficients of `F` for `k = 2n−1`: the even sum
/// `C(n+1+i, 2i+1) − C(n−1+i, 2i+1)`, `0 <= i <= n`, and the odd sum
/// `C(n+i, 2i+1)`, `0 <= i <= n−1`.
pub fn f_coefficients(n: i64) -> (Vec<BigInt>, Vec<BigInt>) {
    let even = (0..=n)
        .map(|i| binom(n + 1 + i, 2 * i + 1) - binom(n - 1 + i, 2 * i + 1))
        .collect();
    let odd = (0..n).map(|i| binom(n + i, 2 * i + 1)).collect();
    (even, odd)
}

/// Coefficients of `G` for `k = 2n`: the odd-power sum
/// `C(n+1+i, 2i+1) + C(n+i, 2i+1)` and the even-power sum `C(n+i, 2i)`,
/// both for `0 <= i <= n`.
pub fn g_coefficients(n: i64) -> (Vec<BigInt>, Vec<BigInt>) {
    let odd = (0..=n)
        .map(|i| binom(n + 1 + i, 2 * i + 1) + binom(n + i, 2 * i + 1))
        .collect();
    let even = (0..=n).map(|i| binom(n + i, 2 * i)).collect();
    (odd, even)
}

/// The boundary variable `T = num/den` in which `F` or `G` is written.
fn t_parts(odd: bool) -> (LaurentPoly, LaurentPoly) {
    let base = if odd {
        var(Var::L)
    } else {
        var(Var::L) * var(Var::M).pow(2)
    };
    (&base - &cst(1), &base + &cst(1))
}

/// `sum_j c_j (M − M⁻¹)^j [M + M⁻¹] T^j`, multiplied through by
/// `M^deg · den^deg`.
fn cleared_sum(terms: &[(BigInt, u32, bool)], deg: u32, odd: bool) -> LaurentPoly {
    let (tn, td) = t_parts(odd);
    let a = antisym(Var::M);
    let b = sym(Var::M);
    let mut acc = LaurentPoly::zero();
    for (c, j, with_b) in terms {
        let mut t = a.pow(*j).scale(c) * tn.pow(*j) * td.pow(deg - j);
        if *with_b {
            t = t * &b;
        }
        acc += &t;
    }
    acc * LaurentPoly::var_pow(Var::M, deg as i32)
}

/// `F` (odd `k`) or `G` (even `k`) cleared by `M^{2n}(L+1)^{2n}` or
/// `M^{2n+1}(LM²+1)^{2n+1}`, before normalization.
pub fn cleared_canonical(k: u32) -> Result<LaurentPoly> {
    if k == 0 {
        return Err(Error::NotHyperbolic(0));
    }
    let mut terms = Vec::new();
    if k % 2 == 1 {
        let n = (k as i64 + 1) / 2;
        let (even, odd) = f_coefficients(n);
        for (i, c) in even.into_iter().enumerate() {
            terms.push((c, 2 * i as u32, false));
        }
        for (i, c) in odd.into_iter().enumerate() {
            terms.push((c, 2 * i as u32 + 1, true));
        }
        Ok(cleared_sum(&terms, 2 * n as u32, true))
    } else {
        let n = k as i64 / 2;
        let (odd, even) = g_coefficients(n);
        for (i, c) in odd.into_iter().enumerate() {
            terms.push((c, 2 * i as u32 + 1, false));
        }
        for (i, c) in even.into_iter().enumerate() {
            terms.push((c, 2 * i as u32, true));
        }
        Ok(cleared_sum(&terms, 2 * n as u32 + 1, false))
    }
}

/// `L − 1` for odd `k`, `LM² − 1` for even `k`.
pub fn nonhyperbolic_factor(k: u32) -> LaurentPoly {
    t_parts(k % 2 == 1).0
}

pub fn apoly_closed_form(k: u32) -> Result<APolyTuple> {
    let canonical_factor = cleared_canonical(k)?.primitive_part()?;
    let nonhyp_factor = nonhyperbolic_factor(k);
    let a1 = &nonhyp_factor * &canonical_factor;
    Ok(APolyTuple {
        k,
        a2: a1.clone(),
        a1,
        nonhyp_factor,
        canonical_factor,
    })
}

/// `p(M⁻¹, L⁻¹) = ±(monomial)·p(M, L)`.
pub fn is_reciprocal(p: &LaurentPoly) -> bool {
    unit_multiple(&p.invert_vars(&[Var::M, Var::L]), p).is_some()
}

/// At least three monomials and at least two distinct boundary slopes.
pub fn has_two_boundary_slopes(p: &LaurentPoly) -> bool {
    if p.num_terms() < 3 {
        return false;
    }
    newton_polygon(p).is_ok_and(|np| np.slopes.len() >= 2)
}

/// Whether the closed-form canonical factor of `W_k` passes the
/// Newton-polygon test that distinguishes it from `L−1` and `LM²−1`.
pub fn canonical_check(k: u32) -> Result<bool> {
    Ok(has_two_boundary_slopes(&apoly_closed_form(k)?.canonical_factor))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::Monomial;
    use Var::*;

    fn k1_fixture() -> LaurentPoly {
        LaurentPoly::from_terms([
            (Monomial::from_pairs(&[(M, 4), (L, 2)]), 1),
            (Monomial::from_pairs(&[(M, 4), (L, 1)]), -1),
            (Monomial::from_pairs(&[(M, 2), (L, 1)]), 4),
            (Monomial::var(L, 1), -1),
            (Monomial::one(), 1),
        ])
    }

    #[test]
    fn coefficients_small_n() {
        let b = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        assert_eq!(f_coefficients(1), (b(&[2, 1]), b(&[1])));
        assert_eq!(g_coefficients(1), (b(&[3, 1]), b(&[1, 1])));
    }

    #[test]
    fn k1_canonical_factor() {
        let t = apoly_closed_form(1).unwrap();
        assert_eq!(t.canonical_factor, k1_fixture());
        assert_eq!(t.nonhyp_factor, var(L) - cst(1));
        assert_eq!(t.a1, t.a2);
        assert_eq!(t.a1, (var(L) - cst(1)) * k1_fixture());
    }

    #[test]
    fn k1_hand_expansion() {
        // 2M²(L+1)² + (M²−1)²(L−1)² + (M⁴−1)(L²−1), content 2
        let (m, l) = (var(M), var(L));
        let hand = cst(2) * m.pow(2) * (&l + &cst(1)).pow(2)
            + (m.pow(2) - cst(1)).pow(2) * (&l - &cst(1)).pow(2)
            + (m.pow(4) - cst(1)) * (l.pow(2) - cst(1));
        assert_eq!(hand.content(), BigInt::from(2));
        assert_eq!(hand.primitive_part().unwrap(), k1_fixture());
        assert_eq!(cleared_canonical(1).unwrap(), hand);
    }

    #[test]
    fn zero_is_rejected() {
        assert_eq!(apoly_closed_form(0), Err(Error::NotHyperbolic(0)));
        assert!(canonical_check(0).is_err());
    }

    #[test]
    fn reciprocity_and_slopes() {
        for k in 1..=6 {
            let c = apoly_closed_form(k).unwrap().canonical_factor;
            assert!(is_reciprocal(&c), "k = {k}");
            assert!(canonical_check(k).unwrap(), "k = {k}");
        }
        assert!(!has_two_boundary_slopes(&(var(L) - cst(1))));
        assert!(!has_two_boundary_slopes(&(var(L) * var(M).pow(2) - cst(1))));
    }
}
