use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_integer::Integer;
use num_traits::Signed;

use super::laurent::LaurentPoly;
use super::var::Var;
use crate::error::{Error, Result};

/// Quotient of two Laurent polynomials. Reduction happens only in
/// [`normalize`](RatFunc::normalize).
#[derive(Clone, PartialEq, Eq)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFunc {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(RatFunc { num, den })
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn inv(&self) -> Result<Self> {
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, e: i32) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let e = e.unsigned_abs();
        Ok(RatFunc {
            num: base.num.pow(e),
            den: base.den.pow(e),
        })
    }

    /// Cancels the integer content, normalizes the denominator's monomial
    /// shift and sign, and cancels the denominator (or numerator) when one
    /// divides the other exactly. Shared factors of any other shape survive;
    /// use [`normalize_with`](Self::normalize_with) to cancel known factors.
    pub fn normalize(&self) -> Self {
        self.normalize_with(&[])
    }

    /// [`normalize`](Self::normalize) plus repeated trial division of both
    /// sides by each candidate factor.
    pub fn normalize_with(&self, candidates: &[LaurentPoly]) -> Self {
        if self.num.is_zero() {
            return RatFunc::from(LaurentPoly::zero());
        }
        if let Ok(q) = self.num.exact_div(&self.den) {
            return RatFunc::from(q);
        }
        let mut num = self.num.clone();
        let mut den = self.den.clone();
        for c in candidates {
            if c.is_zero() || c.constant_value().is_some() {
                continue;
            }
            loop {
                match (num.exact_div(c), den.exact_div(c)) {
                    (Ok(a), Ok(b)) => {
                        num = a;
                        den = b;
                    }
                    _ => break,
                }
            }
        }
        if let Ok(q) = den.exact_div(&num) {
            den = q;
            num = LaurentPoly::one();
        }
        let mut g = num.content().gcd(&den.content());
        if den.leading_term().unwrap().1.is_negative() {
            g = -g;
        }
        let shift = den.min_monomial().inverse();
        let num = num.div_integer(&g).unwrap().mul_monomial(&shift);
        let den = den.div_integer(&g).unwrap().mul_monomial(&shift);
        RatFunc { num, den }
    }

    /// The Laurent polynomial this function equals, if the denominator
    /// divides the numerator exactly.
    pub fn into_laurent(self) -> Result<LaurentPoly> {
        if self.den.is_one() {
            return Ok(self.num);
        }
        self.num.exact_div(&self.den)
    }

    pub fn eval_complex(&self, point: &BTreeMap<Var, Complex64>) -> Result<Complex64> {
        let d = self.den.eval_complex(point)?;
        if d.norm() == 0.0 {
            return Err(Error::ZeroDenominator);
        }
        Ok(self.num.eval_complex(point)? / d)
    }
}

impl From<LaurentPoly> for RatFunc {
    fn from(p: LaurentPoly) -> Self {
        RatFunc {
            num: p,
            den: LaurentPoly::one(),
        }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.den == rhs.den {
            return RatFunc {
                num: &self.num + &rhs.num,
                den: self.den.clone(),
            };
        }
        RatFunc {
            num: &self.num * &rhs.den + &rhs.num * &self.den,
            den: &self.den * &rhs.den,
        }
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc {
            num: &self.num * &rhs.num,
            den: if self.den.is_one() {
                rhs.den.clone()
            } else if rhs.den.is_one() {
                self.den.clone()
            } else {
                &self.den * &rhs.den
            },
        }
    }
}

impl PartialEq<LaurentPoly> for RatFunc {
    fn eq(&self, other: &LaurentPoly) -> bool {
        &self.den * other == self.num
    }
}

/// Cross-multiplied equality, independent of representation.
pub fn ratfunc_eq(a: &RatFunc, b: &RatFunc) -> bool {
    &a.num * &b.den == &b.num * &a.den
}
