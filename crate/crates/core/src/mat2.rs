use std::fmt;
use std::ops::Mul;

use crate::polyring::LaurentPoly;

/// 2×2 matrix over the Laurent polynomial ring.
#[derive(Clone, PartialEq, Eq)]
pub struct Mat2 {
    pub m11: LaurentPoly,
    pub m12: LaurentPoly,
    pub m21: LaurentPoly,
    pub m22: LaurentPoly,
}

impl Mat2 {
    pub fn new(m11: LaurentPoly, m12: LaurentPoly, m21: LaurentPoly, m22: LaurentPoly) -> Self {
        Mat2 { m11, m12, m21, m22 }
    }

    pub fn identity() -> Self {
        Self::scalar(LaurentPoly::one())
    }

    pub fn scalar(c: LaurentPoly) -> Self {
        Mat2::new(c.clone(), LaurentPoly::zero(), LaurentPoly::zero(), c)
    }

    pub fn trace(&self) -> LaurentPoly {
        &self.m11 + &self.m22
    }

    pub fn det(&self) -> LaurentPoly {
        &self.m11 * &self.m22 - &self.m12 * &self.m21
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        Mat2::new(&self.m11 * c, &self.m12 * c, &self.m21 * c, &self.m22 * c)
    }

    pub fn sub(&self, other: &Mat2) -> Self {
        Mat2::new(
            &self.m11 - &other.m11,
            &self.m12 - &other.m12,
            &self.m21 - &other.m21,
            &self.m22 - &other.m22,
        )
    }

    /// Inverse of a determinant-one matrix (the adjugate).
    pub fn inverse_unimodular(&self) -> Self {
        Mat2::new(self.m22.clone(), -&self.m12, -&self.m21, self.m11.clone())
    }

    pub fn entries(&self) -> [&LaurentPoly; 4] {
        [&self.m11, &self.m12, &self.m21, &self.m22]
    }
}

impl Mul for &Mat2 {
    type Output = Mat2;
    fn mul(self, b: &Mat2) -> Mat2 {
        Mat2::new(
            &self.m11 * &b.m11 + &self.m12 * &b.m21,
            &self.m11 * &b.m12 + &self.m12 * &b.m22,
            &self.m21 * &b.m11 + &self.m22 * &b.m21,
            &self.m21 * &b.m12 + &self.m22 * &b.m22,
        )
    }
}

impl fmt::Debug for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.m11, self.m12, self.m21, self.m22)
    }
}
