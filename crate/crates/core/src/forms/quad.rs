//! Exact elements `(p + q√D)/r` of a real quadratic field.
//!
//! The radicand is normalized to its squarefree kernel (so `(12+√60)/6`
//! is stored as `(6+√15)/3`), the denominator is positive and
//! `gcd(p,q,r) = 1`. Every comparison is decided by integer arithmetic;
//! no floating point enters sign, floor or ceiling computations.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::FormsError;

/// `(p + q√D)/r` with `D` squarefree, `r > 0`, `gcd(p,q,r) = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadExact {
    p: BigInt,
    q: BigInt,
    r: BigInt,
    d: u64,
}

/// Split `n = d₀·k²` with `d₀` squarefree; returns `(d₀, k)`.
pub fn squarefree_split(n: u64) -> (u64, u64) {
    let mut d = n;
    let mut k = 1u64;
    let mut m = 2u64;
    while m * m <= d {
        while d % (m * m) == 0 {
            d /= m * m;
            k *= m;
        }
        m += 1;
    }
    (d, k)
}

/// Integer square root of a nonnegative `BigInt`.
pub fn isqrt(n: &BigInt) -> BigInt {
    assert!(!n.is_negative(), "isqrt of negative value");
    n.sqrt()
}

/// True if `n` is a perfect square.
pub fn is_perfect_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &r * &r == *n
}

impl QuadExact {
    /// Build `(p + q√d)/r`, normalizing radicand, sign of `r` and gcd.
    ///
    /// `d` may carry a square factor; it is folded into `q`. `d` must not
    /// itself be a perfect square (use [`QuadExact::integer`] for rationals
    /// with a context radicand).
    pub fn new(
        p: impl Into<BigInt>,
        q: impl Into<BigInt>,
        r: impl Into<BigInt>,
        d: u64,
    ) -> Result<Self, FormsError> {
        let (d0, k) = squarefree_split(d);
        if d0 == 1 || d == 0 {
            return Err(FormsError::SquareRadicand(d));
        }
        let mut p: BigInt = p.into();
        let mut q: BigInt = q.into() * BigInt::from(k);
        let mut r: BigInt = r.into();
        if r.is_zero() {
            return Err(FormsError::ZeroDenominator);
        }
        if r.is_negative() {
            p = -p;
            q = -q;
            r = -r;
        }
        let g = p.gcd(&q).gcd(&r);
        if !g.is_one() && !g.is_zero() {
            p /= &g;
            q /= &g;
            r /= &g;
        }
        Ok(QuadExact { p, q, r, d: d0 })
    }

    /// A rational integer carried in the field of radicand `d`.
    pub fn integer(n: impl Into<BigInt>, d: u64) -> Self {
        QuadExact::new(n, 0, 1, d).expect("integer element")
    }

    /// A rational `n/m` carried in the field of radicand `d`.
    pub fn rational(n: impl Into<BigInt>, m: impl Into<BigInt>, d: u64) -> Self {
        QuadExact::new(n, 0, m, d).expect("rational element")
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }
    pub fn q(&self) -> &BigInt {
        &self.q
    }
    pub fn r(&self) -> &BigInt {
        &self.r
    }

    /// The squarefree radicand.
    pub fn radicand(&self) -> u64 {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    /// True if the element is rational (`q = 0`).
    pub fn is_rational(&self) -> bool {
        self.q.is_zero()
    }

    fn check_same_field(&self, other: &Self) -> Result<(), FormsError> {
        // rational values are compatible with any radicand
        if self.d == other.d || self.is_rational() || other.is_rational() {
            Ok(())
        } else {
            Err(FormsError::MixedRadicands(self.d, other.d))
        }
    }

    fn join_field(&self, other: &Self) -> u64 {
        if self.is_rational() {
            other.d
        } else {
            self.d
        }
    }

    /// Checked addition; errors on mixed radicands.
    pub fn try_add(&self, other: &Self) -> Result<Self, FormsError> {
        self.check_same_field(other)?;
        QuadExact::new(
            &self.p * &other.r + &other.p * &self.r,
            &self.q * &other.r + &other.q * &self.r,
            &self.r * &other.r,
            self.join_field(other),
        )
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, FormsError> {
        self.try_add(&(-other.clone()))
    }

    /// Checked multiplication; errors on mixed radicands.
    pub fn try_mul(&self, other: &Self) -> Result<Self, FormsError> {
        self.check_same_field(other)?;
        let d = BigInt::from(self.join_field(other));
        QuadExact::new(
            &self.p * &other.p + &self.q * &other.q * &d,
            &self.p * &other.q + &self.q * &other.p,
            &self.r * &other.r,
            self.join_field(other),
        )
    }

    /// Multiplicative inverse: `r(p − q√D)/(p² − q²D)`.
    pub fn try_inv(&self) -> Result<Self, FormsError> {
        if self.is_zero() {
            return Err(FormsError::DivisionByZero);
        }
        let d = BigInt::from(self.d);
        let n = &self.p * &self.p - &self.q * &self.q * &d;
        debug_assert!(!n.is_zero(), "nonzero element with zero norm");
        QuadExact::new(&self.r * &self.p, -(&self.r * &self.q), n, self.d)
    }

    pub fn try_div(&self, other: &Self) -> Result<Self, FormsError> {
        self.try_mul(&other.try_inv()?)
    }

    /// Galois conjugate `(p − q√D)/r`.
    pub fn conj(&self) -> Self {
        QuadExact {
            p: self.p.clone(),
            q: -&self.q,
            r: self.r.clone(),
            d: self.d,
        }
    }

    /// Field norm `x·x′ = (p² − q²D)/r²`, a rational.
    pub fn norm(&self) -> BigRational {
        let d = BigInt::from(self.d);
        BigRational::new(
            &self.p * &self.p - &self.q * &self.q * &d,
            &self.r * &self.r,
        )
    }

    /// Trace `x + x′ = 2p/r`, a rational.
    pub fn trace(&self) -> BigRational {
        BigRational::new(2 * &self.p, self.r.clone())
    }

    /// Exact sign of the real value: −1, 0 or +1.
    pub fn sign(&self) -> i32 {
        let (sp, sq) = (sign_of(&self.p), sign_of(&self.q));
        match (sp >= 0, sq >= 0) {
            (true, true) => {
                if sp == 0 && sq == 0 {
                    0
                } else {
                    1
                }
            }
            (false, false) => -1,
            _ => {
                // p and q of opposite signs: compare p² with q²D
                let lhs = &self.p * &self.p;
                let rhs = &self.q * &self.q * BigInt::from(self.d);
                let c = lhs.cmp(&rhs);
                if sp > 0 {
                    if c == Ordering::Greater {
                        1
                    } else {
                        -1
                    } // p² = q²D impossible for q≠0, D nonsquare
                } else if c == Ordering::Less {
                    1
                } else {
                    -1
                }
            }
        }
    }

    /// Exact floor. For irrational values `⌊q√D⌋ = ±⌊√(q²D)⌋` reduces this
    /// to one integer square root and a Euclidean division.
    pub fn floor(&self) -> BigInt {
        if self.q.is_zero() {
            return self.p.div_floor(&self.r);
        }
        let t = &self.q * &self.q * BigInt::from(self.d);
        let root = isqrt(&t);
        // q√D irrational: floor is ⌊√t⌋ for q > 0, −⌊√t⌋ − 1 for q < 0
        let fs = if self.q.is_positive() { root } else { -root - 1 };
        (&self.p + fs).div_floor(&self.r)
    }

    /// Exact ceiling: `floor + 1` for irrational values.
    pub fn ceil(&self) -> BigInt {
        if self.q.is_zero() {
            return -((-&self.p).div_floor(&self.r));
        }
        self.floor() + 1
    }

    /// Exact comparison against an integer.
    pub fn cmp_int(&self, n: i64) -> Ordering {
        let diff = QuadExact {
            p: &self.p - BigInt::from(n) * &self.r,
            q: self.q.clone(),
            r: self.r.clone(),
            d: self.d,
        };
        diff.sign().cmp(&0)
    }

    /// `f64` approximation (for numerics only; never used in exact decisions).
    pub fn to_f64(&self) -> f64 {
        let p = self.p.to_f64().unwrap_or(f64::NAN);
        let q = self.q.to_f64().unwrap_or(f64::NAN);
        let r = self.r.to_f64().unwrap_or(f64::NAN);
        (p + q * (self.d as f64).sqrt()) / r
    }

    /// Exact integer power by repeated squaring (`n ≥ 0`).
    pub fn pow(&self, n: u32) -> Self {
        let mut acc = QuadExact::integer(1, self.d);
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.try_mul(&base).expect("same field");
            }
            base = base.try_mul(&base).expect("same field");
            e >>= 1;
        }
        acc
    }
}

fn sign_of(n: &BigInt) -> i32 {
    if n.is_positive() {
        1
    } else if n.is_negative() {
        -1
    } else {
        0
    }
}

impl PartialOrd for QuadExact {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        let diff = self.try_sub(other).ok()?;
        Some(diff.sign().cmp(&0))
    }
}

impl Add for &QuadExact {
    type Output = QuadExact;
    fn add(self, rhs: &QuadExact) -> QuadExact {
        self.try_add(rhs).expect("mixed radicands in +")
    }
}

impl Sub for &QuadExact {
    type Output = QuadExact;
    fn sub(self, rhs: &QuadExact) -> QuadExact {
        self.try_sub(rhs).expect("mixed radicands in -")
    }
}

impl Mul for &QuadExact {
    type Output = QuadExact;
    fn mul(self, rhs: &QuadExact) -> QuadExact {
        self.try_mul(rhs).expect("mixed radicands in *")
    }
}

impl Neg for QuadExact {
    type Output = QuadExact;
    fn neg(self) -> QuadExact {
        QuadExact {
            p: -self.p,
            q: -self.q,
            r: self.r,
            d: self.d,
        }
    }
}

impl fmt::Display for QuadExact {
    /// Renders as `(p+q*sqrt(D))/r`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}{:+}*sqrt({}))/{}", self.p, self.q, self.d, self.r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qx(p: i64, q: i64, r: i64, d: u64) -> QuadExact {
        QuadExact::new(p, q, r, d).unwrap()
    }

    #[test]
    fn conjugate_sum_is_rational() {
        // (1+√5)/2 + (1−√5)/2 = 1
        let a = qx(1, 1, 2, 5);
        let b = qx(1, -1, 2, 5);
        assert_eq!(a.try_add(&b).unwrap(), QuadExact::integer(1, 5));
    }

    #[test]
    fn pell_unit_norm_product() {
        // (4+√15)(4−√15) = 16 − 15 = 1, the D=60 Pell unit times its conjugate
        let a = qx(4, 1, 1, 15);
        assert_eq!(a.try_mul(&a.conj()).unwrap(), QuadExact::integer(1, 15));
        assert_eq!(a.norm(), BigRational::from_integer(1.into()));
    }

    #[test]
    fn inverse_of_unit() {
        // inv((3+√5)/2) = (3−√5)/2 since its norm is (9−5)/4 = 1
        let a = qx(3, 1, 2, 5);
        assert_eq!(a.try_inv().unwrap(), qx(3, -1, 2, 5));
    }

    #[test]
    fn golden_ratio_conj_norm_trace() {
        let a = qx(1, 1, 2, 5);
        assert_eq!(a.conj(), qx(1, -1, 2, 5));
        assert_eq!(a.norm(), BigRational::from_integer((-1).into()));
        assert_eq!(a.trace(), BigRational::from_integer(1.into()));
    }

    #[test]
    fn rational_element_conj_norm_trace() {
        let a = QuadExact::integer(7, 5);
        assert_eq!(a.conj(), a);
        assert_eq!(a.norm(), BigRational::from_integer(49.into()));
        assert_eq!(a.trace(), BigRational::from_integer(14.into()));
    }

    #[test]
    fn ceil_of_cycle_roots() {
        // x₀ = (6+√15)/3 ≈ 3.291 → 4
        assert_eq!(qx(6, 1, 3, 15).ceil(), BigInt::from(4));
        // (3+√5)/2 ≈ 2.618 → 3
        assert_eq!(qx(3, 1, 2, 5).ceil(), BigInt::from(3));
        // exact integer stays put
        assert_eq!(QuadExact::integer(2, 5).ceil(), BigInt::from(2));
    }

    #[test]
    fn floor_negative_values() {
        // −√15 ≈ −3.873 → floor −4, ceil −3
        let a = qx(0, -1, 1, 15);
        assert_eq!(a.floor(), BigInt::from(-4));
        assert_eq!(a.ceil(), BigInt::from(-3));
        // −7/2 → floor −4, ceil −3
        let b = QuadExact::rational(-7, 2, 15);
        assert_eq!(b.floor(), BigInt::from(-4));
        assert_eq!(b.ceil(), BigInt::from(-3));
    }

    #[test]
    fn radicand_is_normalized_squarefree() {
        // (12+√60)/6 = (6+√15)/3
        let a = qx(12, 1, 6, 60);
        assert_eq!(a, qx(6, 1, 3, 15));
        assert_eq!(a.radicand(), 15);
        assert_eq!(a.to_string(), "(6+1*sqrt(15))/3");
    }

    #[test]
    fn mixed_radicands_rejected() {
        let a = qx(1, 1, 1, 5);
        let b = qx(1, 1, 1, 3);
        assert!(matches!(
            a.try_add(&b),
            Err(FormsError::MixedRadicands(5, 3))
        ));
        // but rationals are compatible with anything
        assert!(a.try_add(&QuadExact::integer(2, 3)).is_ok());
    }

    #[test]
    fn division_by_zero_rejected() {
        let a = qx(1, 1, 1, 5);
        let z = QuadExact::integer(0, 5);
        assert!(matches!(a.try_div(&z), Err(FormsError::DivisionByZero)));
    }

    #[test]
    fn exact_ordering() {
        // 0 < 4−√15 < 1 < 4+√15
        let small = qx(4, -1, 1, 15);
        let big = qx(4, 1, 1, 15);
        assert_eq!(small.sign(), 1);
        assert_eq!(small.cmp_int(1), Ordering::Less);
        assert_eq!(big.cmp_int(1), Ordering::Greater);
        assert!(small < big);
    }

    #[test]
    fn pow_matches_repeated_mul() {
        let a = qx(3, 1, 2, 5);
        let a3 = a.try_mul(&a).unwrap().try_mul(&a).unwrap();
        assert_eq!(a.pow(3), a3);
        assert_eq!(a.pow(0), QuadExact::integer(1, 5));
    }
}
