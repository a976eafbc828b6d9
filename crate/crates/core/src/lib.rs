//! Exact solver and bound calculator for dissociation sets (vertex sets
//! inducing maximum degree at most one) in Kneser graphs `K(n,k)`.
//!
//! - [`subset`] and [`graph`] build `K(n,k)` with one-word vertex masks.
//! - [`bounds`] evaluates the closed-form bounds with exact integer
//!   arithmetic over any [`bounds::ExactInt`] backend.
//! - [`solver`] finds exact maxima by branch and bound, for any degree limit.
//! - [`certify`] checks certificates and the counting facts behind the bounds.

pub mod bounds;
pub mod certificate;
pub mod certify;
pub mod error;
pub mod graph;
pub mod io;
pub mod solver;
pub mod subset;

pub use certificate::{Certificate, Provenance};
pub use error::{Error, Result};
pub use graph::{GenericGraph, KneserGraph, VertexSet};
pub use subset::KSubset;

/// Default word-sized backend for bound evaluation.
pub type Int = u128;

/// Arbitrary-precision backend.
pub type BigInt = num_bigint::BigUint;

/// Bound report over machine words.
pub type BoundReport = bounds::BoundReport<Int>;

/// Bound report over arbitrary-precision integers.
pub type BigBoundReport = bounds::BoundReport<BigInt>;

/// `C(n, k)` over [`Int`].
pub fn binom(n: u32, k: u32) -> Result<Int> {
    bounds::binom(n, k)
}

/// Every bound for `(n, k)` over [`Int`].
pub fn report(n: u32, k: u32) -> Result<BoundReport> {
    bounds::report(n, k)
}

/// Every bound for `(n, k)` over [`BigInt`].
pub fn big_report(n: u32, k: u32) -> Result<BigBoundReport> {
    bounds::report(n, k)
}
