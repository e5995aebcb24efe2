//! Exact computer algebra for rings of symmetric, supersymmetric and
//! Laurent supersymmetric polynomials.
//!
//! The library works with sparse multivariate Laurent polynomials over
//! arbitrary-precision integers in two groups of variables `x1..xm` and
//! `y1..yn`. On top of that substrate it builds the classical generator
//! families (complete homogeneous `h_k`, their star images `h*_k`, the
//! coefficients `h_k^(inf)` of the expansion at infinity, and the universal
//! family `H_k = h_k - h_k^(inf)`), alternants and Euler characters,
//! determinantal identities of Jacobi-Trudi type, Kac characters, and
//! windowed verification of the basis and presentation theorems for the
//! four rings involved (polynomial, partially polynomial, Laurent symmetric
//! and Laurent supersymmetric).
//!
//! Everything is exact: coefficients are `BigInt`, linear algebra for rank
//! and expansion runs over `BigRational`. With the default `parallel`
//! feature the alternation sum and the verification sweeps fan out over
//! rayon; without it the same code runs sequentially.

pub mod alternant;
pub mod context;
pub mod dets;
pub mod error;
pub mod genfun;
pub mod monomial;
pub(crate) mod parallel;
pub mod poly;
pub mod rings;
pub mod rng;
pub mod series;
pub mod verify;

pub use context::{RingContext, Sector, Var};
pub use error::{Error, Result};
pub use monomial::Monomial;
pub use poly::LaurentPoly;

/// Default cap on the size `m! * n!` of the alternation group.
pub const DEFAULT_PERMUTATION_BUDGET: u64 = 10_000_000;

use std::sync::atomic::{AtomicU64, Ordering};

static PERMUTATION_BUDGET: AtomicU64 = AtomicU64::new(DEFAULT_PERMUTATION_BUDGET);

/// Overrides the process-wide permutation budget (the CLI wires the
/// `SUPERSCHUR_BUDGET` environment variable to this).
pub fn set_permutation_budget(budget: u64) {
    PERMUTATION_BUDGET.store(budget, Ordering::Relaxed);
}

pub fn permutation_budget() -> u64 {
    PERMUTATION_BUDGET.load(Ordering::Relaxed)
}
