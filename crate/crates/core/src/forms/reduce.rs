//! Minus-continued-fraction reduction and cycles of reduced forms.
//!
//! The cycle step is `Q_j = Q_{j−1}|M(m_j)` with `M(m) = ((m,−1),(1,0))`
//! and `m_j = ⌈x_{j−1}⌉` for the larger root `x`. Reduction iterates the
//! same step from an arbitrary form, taking the ceiling of the root
//! `(−B+√D)/(2A)` (the larger root when `A > 0`, the smaller when `A < 0`;
//! the latter flips the sign of `A` within a few steps). Postconditions are
//! verified exactly, so the termination guard can only abort, never corrupt.

use num_bigint::BigInt;
use num_traits::Signed;

use super::form::Form;
use super::matrix::UnimodularMatrix;
use super::quad::QuadExact;
use super::FormsError;

/// Result of reducing a form: the reduced representative, the accumulated
/// transformation with `transform(Q, g) = R`, and the step count.
#[derive(Debug, Clone)]
pub struct Reduction {
    pub reduced: Form,
    pub g: UnimodularMatrix,
    pub steps: usize,
}

fn guard_bound(q: &Form) -> usize {
    let bits = q
        .a()
        .abs()
        .max(q.b().abs())
        .max(q.c().abs())
        .bits();
    64 + 8 * bits as usize
}

/// The expansion point of the reduction step: `(−B+√D)/(2A)`.
fn reduction_root(q: &Form) -> QuadExact {
    QuadExact::new(-q.b(), 1, 2 * q.a(), q.disc_u64()).expect("reduction root")
}

/// Reduce `Q` by iterated minus-continued-fraction steps.
pub fn reduce(q: &Form) -> Result<Reduction, FormsError> {
    let guard = guard_bound(q);
    let mut cur = q.clone();
    let mut g = UnimodularMatrix::identity();
    let mut steps = 0;
    while !cur.is_reduced() {
        if steps >= guard {
            return Err(FormsError::ReductionGuard(q.to_string(), guard));
        }
        let m = reduction_root(&cur).ceil();
        let step = UnimodularMatrix::cf_step(m);
        cur = cur.transform(&step);
        g = &g * &step;
        steps += 1;
    }
    debug_assert_eq!(q.transform(&g), cur);
    Ok(Reduction {
        reduced: cur,
        g,
        steps,
    })
}

/// The cycle of reduced forms through `Q`, with its partial quotients and
/// the product `M(m₁)⋯M(m_r)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cycle {
    forms: Vec<Form>,
    quotients: Vec<BigInt>,
    product: UnimodularMatrix,
}

impl Cycle {
    pub fn forms(&self) -> &[Form] {
        &self.forms
    }

    pub fn quotients(&self) -> &[BigInt] {
        &self.quotients
    }

    /// `M(m₁)⋯M(m_r)`, equal to `±γ_Q` for the base form.
    pub fn matrix_product(&self) -> &UnimodularMatrix {
        &self.product
    }

    pub fn len(&self) -> usize {
        self.forms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forms.is_empty()
    }

    pub fn contains(&self, q: &Form) -> bool {
        self.forms.contains(q)
    }
}

/// Walk the cycle from a reduced form until first return.
pub fn cycle_of(q: &Form) -> Result<Cycle, FormsError> {
    if !q.is_reduced() {
        return Err(FormsError::NotReduced(q.to_string()));
    }
    let mut forms = vec![q.clone()];
    let mut quotients = Vec::new();
    let mut product = UnimodularMatrix::identity();
    let mut cur = q.clone();
    // a cycle of discriminant D has length O(√D log D); 10⁶ is far beyond
    // anything reachable at desk scale
    let guard = 1_000_000usize;
    loop {
        let (_, x) = cur.roots();
        let m = x.ceil();
        let step = UnimodularMatrix::cf_step(m.clone());
        cur = cur.transform(&step);
        product = &product * &step;
        quotients.push(m);
        if cur == *q {
            break;
        }
        debug_assert!(cur.is_reduced());
        forms.push(cur.clone());
        if forms.len() > guard {
            return Err(FormsError::ReductionGuard(q.to_string(), guard));
        }
    }
    Ok(Cycle {
        forms,
        quotients,
        product,
    })
}
