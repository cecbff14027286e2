//! Chebyshev polynomials of the second kind, `S_0 = 1`, `S_1 = v`,
//! `S_k = v S_{k-1} - S_{k-2}` for every integer `k`.
//!
//! The recurrence is the source of truth; the closed forms are provided for
//! cross-checking.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::mat2::Mat2;
use crate::polyring::{LaurentPoly, Monomial, Var};

/// Binomial coefficient with `C(a, b) = 0` unless `0 <= b <= a`.
pub fn binom(a: i64, b: i64) -> BigInt {
    if b < 0 || a < 0 || b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for i in 0..b {
        acc = acc * BigInt::from(a - i) / BigInt::from(i + 1);
    }
    acc
}

/// `(S_k(v), S_{k-1}(v))` for an arbitrary ring element `v`.
pub fn cheb_pair_at(k: i64, v: &LaurentPoly) -> (LaurentPoly, LaurentPoly) {
    if k >= 0 {
        // (S_{-1}, S_0) -> step up
        let (mut prev, mut cur) = (LaurentPoly::zero(), LaurentPoly::one());
        for _ in 0..k {
            let next = v * &cur - &prev;
            prev = std::mem::replace(&mut cur, next);
        }
        (cur, prev)
    } else {
        // S_{k-1} = v S_k - S_{k+1}, walking down from (S_0, S_{-1})
        let (mut cur, mut prev) = (LaurentPoly::one(), LaurentPoly::zero());
        // invariant: cur = S_j, prev = S_{j-1}; start j = 0
        for _ in 0..(-k) {
            let lower = v * &prev - &cur;
            cur = std::mem::replace(&mut prev, lower);
        }
        (cur, prev)
    }
}

/// `S_k(v)` evaluated at a ring element.
pub fn cheb_at(k: i64, v: &LaurentPoly) -> LaurentPoly {
    cheb_pair_at(k, v).0
}

fn memo() -> &'static Mutex<HashMap<i64, LaurentPoly>> {
    static MEMO: OnceLock<Mutex<HashMap<i64, LaurentPoly>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `S_k(v)` as a polynomial in the variable `v`.
pub fn cheb(k: i64) -> LaurentPoly {
    if let Some(p) = memo().lock().unwrap().get(&k) {
        return p.clone();
    }
    let p = cheb_at(k, &LaurentPoly::var(Var::V));
    memo().lock().unwrap().insert(k, p.clone());
    p
}

/// `S_k(v) = sum_{0 <= i <= k/2} (-1)^i C(k-i, k-2i) v^{k-2i}`.
pub fn cheb_closed_form(k: i64) -> Result<LaurentPoly> {
    if k < 0 {
        return Err(Error::NegativeIndex(k));
    }
    Ok(LaurentPoly::from_terms((0..=k / 2).map(|i| {
        let c = binom(k - i, k - 2 * i);
        let c = if i % 2 == 1 { -c } else { c };
        (Monomial::var(Var::V, (k - 2 * i) as i32), c)
    })))
}

/// `S_k(2 + q) = sum_{i=0}^{k} C(k+1+i, 2i+1) q^i`.
pub fn cheb_shifted(k: i64) -> Result<LaurentPoly> {
    if k < 0 {
        return Err(Error::NegativeIndex(k));
    }
    Ok(LaurentPoly::from_terms(
        (0..=k).map(|i| (Monomial::var(Var::Q, i as i32), binom(k + 1 + i, 2 * i + 1))),
    ))
}

/// `V^k = S_{k-1}(v) V - S_{k-2}(v) 1` for `det V = 1`, `v = tr V`.
pub fn mat_power(m: &Mat2, k: i64, v: &LaurentPoly) -> Mat2 {
    let (a, b) = cheb_pair_at(k - 1, v);
    m.scale(&a).sub(&Mat2::scalar(b))
}
