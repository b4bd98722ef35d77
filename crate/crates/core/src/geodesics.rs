//! The semicircle `C_Q`, its unit-speed hyperbolic parametrization, shift
//! matrices, and the holomorphic length differential.
//!
//! For `Q = [A,B,C]` with roots `x′ < x`, the circle `A|z|² + B·Re z + C = 0`
//! is parametrized by hyperbolic arclength as
//! `z_t = (x e^t + x′ e^{−t})/(e^t + e^{−t}) + i (x − x′)/(e^t + e^{−t})`,
//! and on `C_Q` the differential satisfies `−√D dz/Q(z) = sign(A) dt`.

use num_complex::Complex64;

use crate::forms::{pell_fundamental, Form, RealForm};

/// Point on a geodesic: the arclength parameter and its image in the upper
/// half-plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeodesicPoint {
    pub t: f64,
    pub z: Complex64,
}

/// An arc of the geodesic of `Q` between two arclength parameters.
#[derive(Debug, Clone)]
pub struct ArcSpec {
    pub q: Form,
    pub t0: f64,
    pub t1: f64,
}

/// Arclength values beyond this are clamped: `e^60` already collapses the
/// parametrization onto the endpoints at f64 precision.
pub const T_CLAMP: f64 = 60.0;

/// Center `−B/(2A)` and radius `√D/(2|A|)` of `C_Q`.
pub fn circle_of(q: impl Into<RealForm>) -> (f64, f64) {
    let q = q.into();
    let center = -q.b / (2.0 * q.a);
    let radius = q.discriminant().sqrt() / (2.0 * q.a.abs());
    (center, radius)
}

fn clamp_t(t: f64) -> f64 {
    t.clamp(-T_CLAMP, T_CLAMP)
}

/// The point `z_t` on `C_Q` at hyperbolic distance `t` from the apex
/// `z_0 = (x+x′)/2 + i(x−x′)/2`.
pub fn point_at(q: impl Into<RealForm>, t: f64) -> GeodesicPoint {
    let rf = q.into();
    let (xp, x) = rf.roots();
    let tc = clamp_t(t);
    let (et, emt) = (tc.exp(), (-tc).exp());
    let den = et + emt;
    GeodesicPoint {
        t,
        z: Complex64::new((x * et + xp * emt) / den, (x - xp) / den),
    }
}

/// Analytic derivative `dz_t/dt` of the parametrization.
pub fn velocity_at(q: impl Into<RealForm>, t: f64) -> Complex64 {
    let rf = q.into();
    let (xp, x) = rf.roots();
    let tc = clamp_t(t);
    let (et, emt) = (tc.exp(), (-tc).exp());
    let den = et + emt;
    let dden = et - emt;
    let num = Complex64::new(x * et + xp * emt, x - xp);
    let dnum = Complex64::new(x * et - xp * emt, 0.0);
    (dnum * den - num * dden) / (den * den)
}

/// The real shift matrix `M_t = cosh(t/2) I + sinh(t/2) N_Q/√D`; a
/// hyperbolic shift by `t` along `C_Q` (from `x′` toward `x` when `A > 0`).
pub fn shift_matrix(q: impl Into<RealForm>, t: f64) -> [[f64; 2]; 2] {
    let rf = q.into();
    let (ch, sh) = ((t / 2.0).cosh(), (t / 2.0).sinh());
    let sd = rf.discriminant().sqrt();
    let n = rf.companion();
    [
        [ch + sh * n[0][0] / sd, sh * n[0][1] / sd],
        [sh * n[1][0] / sd, ch + sh * n[1][1] / sd],
    ]
}

/// Full period `2 log ε_Pell` of the closed geodesic of discriminant `D(Q)`.
pub fn period_length(q: &Form) -> f64 {
    let d = q.disc_u64();
    let (v, u) = pell_fundamental(d).expect("valid discriminant on a Form");
    let eps = big_to_f64(&v) / 2.0 + big_to_f64(&u) / 2.0 * (d as f64).sqrt();
    2.0 * eps.ln()
}

fn big_to_f64(n: &num_bigint::BigInt) -> f64 {
    use num_traits::ToPrimitive;
    n.to_f64().unwrap_or(f64::NAN)
}

/// Möbius action `(az+b)/(cz+d)` of a real matrix with positive determinant.
pub fn mobius(g: &[[f64; 2]; 2], z: Complex64) -> Complex64 {
    (g[0][0] * z + g[0][1]) / (g[1][0] * z + g[1][1])
}

/// Möbius action of an integer matrix.
pub fn mobius_int(g: &crate::forms::UnimodularMatrix, z: Complex64) -> Complex64 {
    mobius(&g.mat().to_f64(), z)
}

/// `|(−√D/Q(z_t))·(dz_t/dt) − sign(A)|`; the length-differential identity
/// says this vanishes on `C_Q`.
pub fn length_differential_residual(q: impl Into<RealForm>, t: f64) -> f64 {
    let rf = q.into();
    let sd = rf.discriminant().sqrt();
    let z = point_at(rf, t).z;
    let dz = velocity_at(rf, t);
    let lhs = -sd * dz / rf.eval(z);
    (lhs - Complex64::new(rf.a.signum(), 0.0)).norm()
}

/// Hyperbolic distance `arccosh(1 + |z₁−z₂|²/(2 Im z₁ Im z₂))`.
pub fn hyperbolic_distance(z1: Complex64, z2: Complex64) -> f64 {
    (1.0 + (z1 - z2).norm_sqr() / (2.0 * z1.im * z2.im)).acosh()
}
