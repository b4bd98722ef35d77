//! Integral indefinite binary quadratic forms `[A,B,C]` and the degenerate
//! real-coefficient companion used by geodesic and analytic internals.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use std::fmt;
use std::str::FromStr;

use super::matrix::{Mat2, UnimodularMatrix};
use super::quad::{is_perfect_square, QuadExact};
use super::FormsError;

/// Primitive integral form `Ax² + Bxy + Cy²` with `D = B² − 4AC > 0`
/// nonsquare. `A ≠ 0` follows from `D` nonsquare.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Form {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    disc: BigInt,
}

impl Form {
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
    ) -> Result<Self, FormsError> {
        let a: BigInt = a.into();
        let b: BigInt = b.into();
        let c: BigInt = c.into();
        let disc: BigInt = &b * &b - 4 * &a * &c;
        if !disc.is_positive() {
            return Err(FormsError::NonPositiveDiscriminant(disc));
        }
        if is_perfect_square(&disc) {
            return Err(FormsError::SquareDiscriminant(disc));
        }
        let g = a.gcd(&b).gcd(&c);
        if g != BigInt::from(1) {
            return Err(FormsError::Imprimitive(g));
        }
        Ok(Form { a, b, c, disc })
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }
    pub fn b(&self) -> &BigInt {
        &self.b
    }
    pub fn c(&self) -> &BigInt {
        &self.c
    }

    /// `B² − 4AC`, cached at construction.
    pub fn discriminant(&self) -> &BigInt {
        &self.disc
    }

    /// Discriminant as `u64` (all supported discriminants are desk-scale).
    pub fn disc_u64(&self) -> u64 {
        self.disc.to_u64().expect("discriminant fits u64")
    }

    /// `[−A,−B,−C]`, the same discriminant with orientation reversed.
    pub fn negated(&self) -> Form {
        Form {
            a: -&self.a,
            b: -&self.b,
            c: -&self.c,
            disc: self.disc.clone(),
        }
    }

    /// Evaluate `Q(x,y) = Ax² + Bxy + Cy²` on integers.
    pub fn eval(&self, x: &BigInt, y: &BigInt) -> BigInt {
        &self.a * x * x + &self.b * x * y + &self.c * y * y
    }

    /// Right action `Q|g(x,y) = Q(ax+by, cx+dy)`; preserves the discriminant.
    pub fn transform(&self, g: &UnimodularMatrix) -> Form {
        let m = g.mat();
        let (a, b, c, d) = (&m.a, &m.b, &m.c, &m.d);
        let na = self.eval(a, c);
        let nb = 2 * &self.a * a * b + &self.b * (a * d + b * c) + 2 * &self.c * c * d;
        let nc = self.eval(b, d);
        debug_assert_eq!(&nb * &nb - 4 * &na * &nc, self.disc);
        Form {
            a: na,
            b: nb,
            c: nc,
            disc: self.disc.clone(),
        }
    }

    /// The left action `gQ = Q|g⁻¹`.
    pub fn left_act(&self, g: &UnimodularMatrix) -> Form {
        self.transform(&g.inverse())
    }

    /// Exact roots `(x′, x)` of `Q(z,1) = 0` with `x′ < x`.
    pub fn roots(&self) -> (QuadExact, QuadExact) {
        let d = self.disc_u64();
        let two_a: BigInt = 2 * &self.a;
        let minus = QuadExact::new(-&self.b, -1, two_a.clone(), d).expect("root");
        let plus = QuadExact::new(-&self.b, 1, two_a, d).expect("root");
        if self.a.is_positive() {
            (minus, plus)
        } else {
            (plus, minus)
        }
    }

    /// Companion matrix `N_Q = ((−B,−2C),(2A,B))`: `det N_Q = −D`,
    /// `N_Q² = D·I`, and `g N_Q g⁻¹ = N_{gQ}`.
    pub fn companion(&self) -> Mat2 {
        Mat2::new(-&self.b, -2 * &self.c, 2 * &self.a, self.b.clone())
    }

    /// True iff `A > 0` and `0 < x′ < 1 < x`, decided exactly. Implies
    /// `C > 0` and `B < 0`.
    pub fn is_reduced(&self) -> bool {
        if !self.a.is_positive() {
            return false;
        }
        let (xp, x) = self.roots();
        xp.sign() > 0 && xp.cmp_int(1).is_lt() && x.cmp_int(1).is_gt()
    }

    /// Coefficients as `f64`.
    pub fn to_real(&self) -> RealForm {
        RealForm {
            a: self.a.to_f64().unwrap_or(f64::NAN),
            b: self.b.to_f64().unwrap_or(f64::NAN),
            c: self.c.to_f64().unwrap_or(f64::NAN),
        }
    }
}

impl fmt::Display for Form {
    /// Literal format `A,B,C`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.a, self.b, self.c)
    }
}

impl FromStr for Form {
    type Err = FormsError;

    fn from_str(s: &str) -> Result<Self, FormsError> {
        let parts: Vec<&str> = s.split(',').collect();
        if parts.len() != 3 {
            return Err(FormsError::BadFormLiteral(s.to_string()));
        }
        let mut nums = Vec::with_capacity(3);
        for p in parts {
            nums.push(
                BigInt::from_str(p.trim())
                    .map_err(|_| FormsError::BadFormLiteral(s.to_string()))?,
            );
        }
        Form::new(nums[0].clone(), nums[1].clone(), nums[2].clone())
    }
}

impl From<&Form> for RealForm {
    fn from(q: &Form) -> RealForm {
        q.to_real()
    }
}

/// Real-coefficient form with no integrality or nonsquare-discriminant
/// invariants. Used for internals like `Q_z` (definite, discriminant −4)
/// and square-discriminant helpers like `[1,0,−1]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RealForm {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl RealForm {
    pub fn new(a: f64, b: f64, c: f64) -> Self {
        RealForm { a, b, c }
    }

    pub fn discriminant(&self) -> f64 {
        self.b * self.b - 4.0 * self.a * self.c
    }

    /// `Q(z) = Az² + Bz + C`.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        (self.a * z + self.b) * z + self.c
    }

    /// `Q′(z) = 2Az + B`.
    pub fn derivative(&self, z: Complex64) -> Complex64 {
        2.0 * self.a * z + self.b
    }

    /// Real roots `(x′, x)` with `x′ < x`; requires positive discriminant.
    pub fn roots(&self) -> (f64, f64) {
        let sd = self.discriminant().sqrt();
        let r1 = (-self.b - sd) / (2.0 * self.a);
        let r2 = (-self.b + sd) / (2.0 * self.a);
        if r1 < r2 {
            (r1, r2)
        } else {
            (r2, r1)
        }
    }

    /// Companion `N_Q` over the reals.
    pub fn companion(&self) -> [[f64; 2]; 2] {
        [[-self.b, -2.0 * self.c], [2.0 * self.a, self.b]]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn form(a: i64, b: i64, c: i64) -> Form {
        Form::new(a, b, c).unwrap()
    }

    #[test]
    fn discriminants() {
        assert_eq!(form(3, -12, 7).discriminant(), &BigInt::from(60));
        assert_eq!(form(1, -3, 1).discriminant(), &BigInt::from(5));
    }

    #[test]
    fn constructor_rejects_degenerate_input() {
        // square discriminant
        assert!(matches!(
            Form::new(1, 0, -1),
            Err(FormsError::SquareDiscriminant(_))
        ));
        // definite
        assert!(matches!(
            Form::new(1, 0, 1),
            Err(FormsError::NonPositiveDiscriminant(_))
        ));
        // imprimitive
        assert!(matches!(Form::new(2, -6, 2), Err(FormsError::Imprimitive(_))));
    }

    #[test]
    fn transform_by_cf_step() {
        // [3,−12,7]|M(4) = [7,−12,3]: expand 3(4x−y)² − 12(4x−y)x + 7x²
        let q = form(3, -12, 7);
        let m4 = UnimodularMatrix::cf_step(4);
        assert_eq!(q.transform(&m4), form(7, -12, 3));
        // identity fixes everything
        assert_eq!(q.transform(&UnimodularMatrix::identity()), q);
        // D=12 fixed point of the reduction step
        let q12 = form(1, -4, 1);
        assert_eq!(q12.transform(&UnimodularMatrix::cf_step(4)), q12);
    }

    #[test]
    fn roots_match_hand_values() {
        // [3,−12,7] → ((6−√15)/3, (6+√15)/3)
        let (xp, x) = form(3, -12, 7).roots();
        assert_eq!(xp, QuadExact::new(6, -1, 3, 15).unwrap());
        assert_eq!(x, QuadExact::new(6, 1, 3, 15).unwrap());
        // [1,−3,1] → ((3−√5)/2, (3+√5)/2)
        let (xp, x) = form(1, -3, 1).roots();
        assert_eq!(xp, QuadExact::new(3, -1, 2, 5).unwrap());
        assert_eq!(x, QuadExact::new(3, 1, 2, 5).unwrap());
        // [7,−16,7] → ((8−√15)/7, (8+√15)/7)
        let (xp, x) = form(7, -16, 7).roots();
        assert_eq!(xp, QuadExact::new(8, -1, 7, 15).unwrap());
        assert_eq!(x, QuadExact::new(8, 1, 7, 15).unwrap());
    }

    #[test]
    fn roots_ordered_for_negative_leading_coefficient() {
        let (xp, x) = form(-3, 12, -7).roots();
        assert!(xp < x);
        assert_eq!(x, QuadExact::new(6, 1, 3, 15).unwrap());
    }

    #[test]
    fn companion_entries_and_det() {
        // [3,−12,7] → ((12,−14),(6,−12)) with det −60
        let n = form(3, -12, 7).companion();
        assert_eq!(n, Mat2::new(12, -14, 6, -12));
        assert_eq!(n.det(), BigInt::from(-60));
        // N_Q² = D·I for [1,0,−15]
        let q = form(1, 0, -15);
        let n = q.companion();
        assert_eq!(n, Mat2::new(0, 30, 2, 0));
        let sq = &n * &n;
        assert_eq!(sq, Mat2::new(60, 0, 0, 60));
    }

    #[test]
    fn reducedness() {
        assert!(form(3, -12, 7).is_reduced());
        assert!(!form(1, 0, -15).is_reduced()); // x′ = −√15 < 0
        assert!(form(1, -4, 1).is_reduced()); // roots 2±√3
        assert!(!form(-3, 12, -7).is_reduced()); // A < 0
    }

    #[test]
    fn form_literal_round_trip() {
        let q: Form = "3,-12,7".parse().unwrap();
        assert_eq!(q, form(3, -12, 7));
        assert_eq!(q.to_string(), "3,-12,7");
        assert!("3,-12".parse::<Form>().is_err());
        assert!("a,b,c".parse::<Form>().is_err());
    }
}
