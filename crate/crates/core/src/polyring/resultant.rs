use super::laurent::{LaurentPoly, Monomial};
use super::var::Var;
use crate::error::{Error, Result};

/// Coefficients of `p` as a polynomial in `elim`, lowest degree first.
///
/// A negative lowest exponent is cleared by multiplying with a power of
/// `elim`; nonnegative exponents are kept as they are.
fn coefficient_list(p: &LaurentPoly, elim: Var) -> Vec<LaurentPoly> {
    let groups = p.coeffs_in(elim);
    let Some(&lo) = groups.keys().next() else {
        return vec![LaurentPoly::zero()];
    };
    let shift = lo.min(0);
    let hi = *groups.keys().next_back().unwrap();
    let mut out = vec![LaurentPoly::zero(); (hi - shift) as usize + 1];
    for (e, c) in groups {
        out[(e - shift) as usize] = c;
    }
    out
}

/// Sylvester matrix of `p` and `r` with respect to `elim`. The first
/// `deg r` rows carry `p`'s coefficients, highest degree first.
pub fn sylvester_matrix(p: &LaurentPoly, r: &LaurentPoly, elim: Var) -> Vec<Vec<LaurentPoly>> {
    let a = coefficient_list(p, elim);
    let b = coefficient_list(r, elim);
    let m = a.len() - 1;
    let n = b.len() - 1;
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for (coeffs, shifts) in [(&a, n), (&b, m)] {
        for i in 0..shifts {
            let mut row = vec![LaurentPoly::zero(); size];
            for (j, c) in coeffs.iter().rev().enumerate() {
                row[i + j] = c.clone();
            }
            rows.push(row);
        }
    }
    rows
}

/// Determinant by fraction-free (Bareiss) elimination with exact division.
pub fn determinant(mut m: Vec<Vec<LaurentPoly>>) -> Result<LaurentPoly> {
    let n = m.len();
    if n == 0 {
        return Ok(LaurentPoly::one());
    }
    let mut negate = false;
    let mut prev = LaurentPoly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            // Smallest nonzero pivot keeps the intermediate entries small.
            let swap = (k + 1..n)
                .filter(|&i| !m[i][k].is_zero())
                .min_by_key(|&i| m[i][k].num_terms());
            match swap {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return Ok(LaurentPoly::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = t.exact_div(&prev)?;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if negate { -det } else { det })
}

/// Resultant of `p` and `r` with respect to `elim`: the Sylvester
/// determinant with `p`'s coefficients in the first block of rows.
pub fn resultant(p: &LaurentPoly, r: &LaurentPoly, elim: Var) -> Result<LaurentPoly> {
    let dp = p.degree_in(elim).unwrap_or(0) - p.min_degree_in(elim).unwrap_or(0).min(0);
    let dr = r.degree_in(elim).unwrap_or(0) - r.min_degree_in(elim).unwrap_or(0).min(0);
    if dp <= 0 && dr <= 0 {
        return Err(Error::NothingToEliminate(elim));
    }
    determinant(sylvester_matrix(p, r, elim))
}

/// `true` when `a = ±m·b` for a monomial `m`; returns the sign and `m`.
pub fn unit_multiple(a: &LaurentPoly, b: &LaurentPoly) -> Option<(i8, Monomial)> {
    let (am, ac) = a.leading_term()?;
    let (bm, bc) = b.leading_term()?;
    let sign: i8 = if ac == bc {
        1
    } else if *ac == -bc {
        -1
    } else {
        return None;
    };
    if a.num_terms() != b.num_terms() {
        return None;
    }
    let m = am.div(bm);
    let scaled = b.mul_monomial(&m);
    let ok = if sign == 1 { scaled == *a } else { -scaled == *a };
    ok.then_some((sign, m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{cst, var};
    use Var::*;

    #[test]
    fn common_root_gives_zero() {
        let p = var(Z) - cst(3);
        assert!(resultant(&p, &p, Z).unwrap().is_zero());
    }

    #[test]
    fn linear_case_sign() {
        // det [[1, -a], [1, -b]] = a - b
        let r = resultant(&(var(Z) - var(X)), &(var(Z) - var(Y)), Z).unwrap();
        assert_eq!(r, var(X) - var(Y));
    }

    #[test]
    fn quadratic_against_linear() {
        let r = resultant(&(var(Z).pow(2) - var(V)), &(var(Z) - cst(1)), Z).unwrap();
        assert!(r == cst(1) - var(V) || r == var(V) - cst(1));
    }

    #[test]
    fn degree_zero_inputs_rejected() {
        assert_eq!(resultant(&var(X), &cst(2), Z), Err(Error::NothingToEliminate(Z)));
        // one side constant: resultant is a power of it
        assert_eq!(resultant(&(var(Z).pow(2) + cst(1)), &cst(3), Z).unwrap(), cst(9));
    }

    #[test]
    fn laurent_exponents_are_cleared() {
        let p = var(Z) - LaurentPoly::var_pow(Z, -1); // (z^2 - 1)/z
        let r = resultant(&p, &(var(Z) - cst(1)), Z).unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn determinant_with_pivoting() {
        let m = vec![
            vec![cst(0), cst(1), cst(2)],
            vec![cst(1), cst(0), cst(3)],
            vec![cst(4), cst(-3), cst(8)],
        ];
        assert_eq!(determinant(m).unwrap(), cst(-2));
    }

    #[test]
    fn unit_multiples() {
        let b = var(L) - cst(1);
        let a = -(&b * &LaurentPoly::var_pow(M, 3));
        let (s, m) = unit_multiple(&a, &b).unwrap();
        assert_eq!(s, -1);
        assert_eq!(m, Monomial::var(M, 3));
        assert!(unit_multiple(&(var(L) + cst(1)), &b).is_none());
    }
}
