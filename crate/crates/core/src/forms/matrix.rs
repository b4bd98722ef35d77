//! Integer 2×2 matrices and the `PSL(2,ℤ)` representation used for the
//! Γ-action on forms and the upper half-plane.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::Mul;

use super::FormsError;

/// Plain integer 2×2 matrix `((a,b),(c,d))` with no determinant constraint.
/// Companion matrices `N_Q` (determinant `−D`) live here.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mat2 {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

impl Mat2 {
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Self {
        Mat2 {
            a: a.into(),
            b: b.into(),
            c: c.into(),
            d: d.into(),
        }
    }

    pub fn identity() -> Self {
        Mat2::new(1, 0, 0, 1)
    }

    pub fn det(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn trace(&self) -> BigInt {
        &self.a + &self.d
    }

    pub fn neg(&self) -> Self {
        Mat2::new(-&self.a, -&self.b, -&self.c, -&self.d)
    }

    /// Entries as `f64` row-major, for Möbius numerics.
    pub fn to_f64(&self) -> [[f64; 2]; 2] {
        use num_traits::ToPrimitive;
        [
            [
                self.a.to_f64().unwrap_or(f64::NAN),
                self.b.to_f64().unwrap_or(f64::NAN),
            ],
            [
                self.c.to_f64().unwrap_or(f64::NAN),
                self.d.to_f64().unwrap_or(f64::NAN),
            ],
        ]
    }
}

impl Mul for &Mat2 {
    type Output = Mat2;
    fn mul(self, rhs: &Mat2) -> Mat2 {
        Mat2 {
            a: &self.a * &rhs.a + &self.b * &rhs.c,
            b: &self.a * &rhs.b + &self.b * &rhs.d,
            c: &self.c * &rhs.a + &self.d * &rhs.c,
            d: &self.c * &rhs.b + &self.d * &rhs.d,
        }
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(({},{}),({},{}))", self.a, self.b, self.c, self.d)
    }
}

/// Element of `PSL(2,ℤ)`: determinant 1, stored sign-normalized so that
/// `c > 0`, or `c = 0` and `d > 0`. Equality is therefore equality in `PSL`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UnimodularMatrix(Mat2);

impl UnimodularMatrix {
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Result<Self, FormsError> {
        Self::from_mat(Mat2::new(a, b, c, d))
    }

    pub fn from_mat(m: Mat2) -> Result<Self, FormsError> {
        if !m.det().is_one() {
            return Err(FormsError::NotUnimodular(m.det()));
        }
        Ok(UnimodularMatrix(normalize_sign(m)))
    }

    pub fn identity() -> Self {
        UnimodularMatrix(Mat2::identity())
    }

    /// The translation `T = ((1,1),(0,1))`.
    pub fn translation() -> Self {
        UnimodularMatrix(Mat2::new(1, 1, 0, 1))
    }

    /// The inversion `S = ((0,−1),(1,0))`.
    pub fn inversion() -> Self {
        UnimodularMatrix(Mat2::new(0, -1, 1, 0))
    }

    /// The minus-continued-fraction step `M(m) = ((m,−1),(1,0))`.
    pub fn cf_step(m: impl Into<BigInt>) -> Self {
        UnimodularMatrix(normalize_sign(Mat2::new(m, -1, 1, 0)))
    }

    pub fn mat(&self) -> &Mat2 {
        &self.0
    }

    pub fn inverse(&self) -> Self {
        let m = &self.0;
        UnimodularMatrix(normalize_sign(Mat2 {
            a: m.d.clone(),
            b: -&m.b,
            c: -&m.c,
            d: m.a.clone(),
        }))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = UnimodularMatrix::identity();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// PSL equality against a raw matrix (up to global sign).
    pub fn eq_up_to_sign(&self, m: &Mat2) -> bool {
        self.0 == normalize_sign(m.clone())
    }
}

fn normalize_sign(m: Mat2) -> Mat2 {
    let flip = m.c.is_negative() || (m.c.is_zero() && m.d.is_negative());
    if flip {
        m.neg()
    } else {
        m
    }
}

impl Mul for &UnimodularMatrix {
    type Output = UnimodularMatrix;
    fn mul(self, rhs: &UnimodularMatrix) -> UnimodularMatrix {
        UnimodularMatrix(normalize_sign(&self.0 * &rhs.0))
    }
}

impl fmt::Display for UnimodularMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinant_and_product() {
        let s = UnimodularMatrix::inversion();
        let t = UnimodularMatrix::translation();
        assert!(s.mat().det().is_one());
        let st = &s * &t;
        assert!(st.mat().det().is_one());
        // S² = −I = I in PSL
        let s2 = &s * &s;
        assert_eq!(s2, UnimodularMatrix::identity());
    }

    #[test]
    fn psl_sign_normalization() {
        let m = UnimodularMatrix::new(-1, 0, 0, -1).unwrap();
        assert_eq!(m, UnimodularMatrix::identity());
        let a = UnimodularMatrix::new(-2, -1, -1, -1).unwrap();
        let b = UnimodularMatrix::new(2, 1, 1, 1).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn inverse_round_trip() {
        let g = UnimodularMatrix::new(10, -7, 3, -2).unwrap();
        assert_eq!(&g * &g.inverse(), UnimodularMatrix::identity());
    }

    #[test]
    fn non_unimodular_rejected() {
        assert!(UnimodularMatrix::new(2, 0, 0, 2).is_err());
        // determinant −1 is not in PSL(2,ℤ) either
        assert!(UnimodularMatrix::new(0, 1, 1, 0).is_err());
    }
}
