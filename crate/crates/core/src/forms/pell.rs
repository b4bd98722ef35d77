//! Pell equation `v² − Du² = 4`, fundamental units, and form stabilizers.
//!
//! The smallest positive Pell solution is read off the cycle of the
//! principal reduced form: the cycle matrix product generates the
//! stabilizer `Γ_Q = ⟨γ_Q⟩`, and `γ_Q = (v/2)I + (u/2)N_Q` exposes `(v,u)`
//! through its trace and lower-left entry. This stays exact for the
//! discriminants (like 409) whose fundamental solutions have dozens of
//! digits, where a direct search over `u` is hopeless.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use super::form::Form;
use super::matrix::{Mat2, UnimodularMatrix};
use super::quad::{is_perfect_square, isqrt, squarefree_split, QuadExact};
use super::reduce::{cycle_of, reduce};
use super::FormsError;

/// A valid (form) discriminant: positive, nonsquare, `≡ 0 or 1 (mod 4)`.
pub fn validate_discriminant(d: u64) -> Result<(), FormsError> {
    let db = BigInt::from(d);
    if d == 0 || d % 4 == 2 || d % 4 == 3 {
        return Err(FormsError::InvalidDiscriminant(d));
    }
    if is_perfect_square(&db) {
        return Err(FormsError::InvalidDiscriminant(d));
    }
    Ok(())
}

/// True for fundamental discriminants: `D ≡ 1 (mod 4)` squarefree, or
/// `D = 4m` with `m ≡ 2,3 (mod 4)` squarefree.
pub fn is_fundamental_discriminant(d: u64) -> bool {
    if validate_discriminant(d).is_err() {
        return false;
    }
    if d % 4 == 1 {
        let (_, k) = squarefree_split(d);
        k == 1
    } else {
        let m = d / 4;
        let (_, k) = squarefree_split(m);
        k == 1 && (m % 4 == 2 || m % 4 == 3)
    }
}

/// The reduced principal form of discriminant `D`.
pub fn principal_form(d: u64) -> Result<Form, FormsError> {
    validate_discriminant(d)?;
    let b0 = BigInt::from(d % 2);
    let c0 = (&b0 * &b0 - BigInt::from(d)) / 4;
    let q = Form::new(1, b0, c0)?;
    Ok(reduce(&q)?.reduced)
}

/// Smallest positive solution of `v² − Du² = 4`.
pub fn pell_fundamental(d: u64) -> Result<(BigInt, BigInt), FormsError> {
    let q = principal_form(d)?;
    let cyc = cycle_of(&q)?;
    let m = cyc.matrix_product().mat();
    // ±γ_Q = ((v−Bu)/2, −Cu, Au, (v+Bu)/2)
    let v = m.trace().abs();
    let (c, a) = (m.c.abs(), q.a().abs());
    debug_assert!((&c % &a).is_zero());
    let u = c / a;
    debug_assert_eq!(&v * &v - BigInt::from(d) * &u * &u, BigInt::from(4));
    Ok((v, u))
}

/// The Pell unit `ε = (v + u√D)/2` as an exact field element.
pub fn pell_unit(d: u64) -> Result<QuadExact, FormsError> {
    let (v, u) = pell_fundamental(d)?;
    QuadExact::new(v, u, 2, d)
}

/// Fundamental unit data: the smallest unit `> 1` of the maximal order,
/// its norm sign, and the exponent `f` with `ε_Pell = ε_fund^f`.
#[derive(Debug, Clone)]
pub struct FundamentalUnit {
    pub eps: QuadExact,
    /// `(v, u)` with `ε_fund = (v + u√D)/2` and `v² − Du² = ±4`.
    pub vu: (BigInt, BigInt),
    pub norm_sign: i32,
    pub f: u8,
}

/// Compute the fundamental unit of the maximal order of `ℚ(√D)`.
///
/// Requires a fundamental discriminant. A norm −1 unit exists iff
/// `ε_Pell = η²` with `η = (w + t√D)/2` solving `w² − Dt² = −4`; in that
/// case `v = w² + 2` and `u = w·t`, which is checked exactly.
pub fn fundamental_unit(d: u64) -> Result<FundamentalUnit, FormsError> {
    if !is_fundamental_discriminant(d) {
        return Err(FormsError::NotFundamental(d));
    }
    let (v, u) = pell_fundamental(d)?;
    let w2 = &v - BigInt::from(2);
    if w2.is_positive() && is_perfect_square(&w2) {
        let w = isqrt(&w2);
        if !w.is_zero() && (&u % &w).is_zero() {
            let t = &u / &w;
            if &w * &w - BigInt::from(d) * &t * &t == BigInt::from(-4) {
                return Ok(FundamentalUnit {
                    eps: QuadExact::new(w.clone(), t.clone(), 2, d)?,
                    vu: (w, t),
                    norm_sign: -1,
                    f: 2,
                });
            }
        }
    }
    Ok(FundamentalUnit {
        eps: QuadExact::new(v.clone(), u.clone(), 2, d)?,
        vu: (v, u),
        norm_sign: 1,
        f: 1,
    })
}

/// The matrix `(v/2)I + (u/2)N_Q` attached to a Pell solution `(v,u)`.
/// Integral because `v ≡ Bu (mod 2)`.
pub fn unit_matrix(q: &Form, v: &BigInt, u: &BigInt) -> Mat2 {
    let a = (v - q.b() * u) / 2;
    let d = (v + q.b() * u) / 2;
    Mat2 {
        a,
        b: -(q.c() * u),
        c: q.a() * u,
        d,
    }
}

/// Generator `γ_Q` of the stabilizer of `Q` in `PSL(2,ℤ)`, from the
/// smallest positive Pell solution.
pub fn stabilizer_generator(q: &Form) -> Result<UnimodularMatrix, FormsError> {
    let (v, u) = pell_fundamental(q.disc_u64())?;
    let m = unit_matrix(q, &v, &u);
    debug_assert!(m.det() == BigInt::from(1));
    let g = UnimodularMatrix::from_mat(m)?;
    debug_assert_eq!(q.transform(&g), *q);
    Ok(g)
}
