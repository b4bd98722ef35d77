//! Indefinite binary quadratic forms, the closed geodesics they span on the
//! modular surface, a holomorphic lift of the nonholomorphic Eisenstein
//! series, and the Hecke integral identity tying hyperbolic periods to
//! narrow-ideal-class zeta functions of real quadratic fields.
//!
//! The crate is organized around five subsystems:
//!
//! * [`forms`] — exact arithmetic in real quadratic fields ([`forms::QuadExact`]),
//!   integral forms `[A,B,C]` with `D = B² − 4AC > 0` nonsquare, the
//!   `PSL(2,ℤ)` action, minus-continued-fraction reduction and cycles, Pell
//!   solutions, stabilizers and narrow/wide class tables.
//! * [`geodesics`] — the semicircle `C_Q`, its unit-speed parametrization
//!   `z_t`, hyperbolic shift matrices and the holomorphic length differential
//!   `−√D dz/Q(z) = sign(A) dt`.
//! * [`analytic`] — principal-branch powers, `φ(z,Q) = Q(z)/Q′(z)`, the
//!   Eisenstein lattice sum `E(s,z)`, its holomorphic lift `F_Q(s,z)` and the
//!   scalar special functions `ζ`, `Γ`, `c(s)`.
//! * [`periods`] — hyperbolic period integrals of Γ-invariant kernels along
//!   closed geodesics, the cusp decomposition over a reduced cycle, the exact
//!   unit product identity `ε² = ∏ xⱼ/xⱼ′` and the regularized sum `Φ_Q(s)`.
//! * [`heckezeta`] — ideal bases `b = ℤ + xℤ` from reduced forms, partial
//!   ideal-class zeta functions via the λ-lattice sum, and verification of
//!   the identity `Σ_β Φ_β(s) = 4 c(s) (i√D)^s ζ(α,s)/ζ(2s)`.
//!
//! All arithmetic that decides an identity (root ordering, reducedness,
//! cycle closure, unit products, λ-domain membership) is exact over
//! arbitrary-precision integers; series, quadrature and special functions
//! use `f64` with documented truncation bounds.

pub mod analytic;
pub mod forms;
pub mod geodesics;
pub mod heckezeta;
pub mod periods;

pub use num_complex::Complex64;
