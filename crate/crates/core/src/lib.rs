//! Exact bounds and exhaustive search for partial t-spreads in `F_q^n`.
//!
//! A partial t-spread is a collection of t-dimensional subspaces of `F_q^n`
//! that pairwise intersect only in the zero vector; `A_q(n, 2t; t)` denotes
//! the maximum number of members. This crate computes lower and upper bounds
//! on `A_q(n, 2t; t)` in exact arbitrary-precision arithmetic, emits
//! human-readable certificates for every bound, and cross-validates the
//! counting machinery against a brute-force search oracle over small finite
//! vector spaces.
//!
//! Module map:
//! - [`exactmath`]: big-integer q-analogs, integer square roots, and the
//!   exact ceiling term used by the quadratic upper bound.
//! - [`bounds`]: the bound pipeline (construction lower bound, packing,
//!   the two parametric upper-bound theorems, and their aggregation).
//! - [`vsp`]: vector-space-partition machinery (hole types, the tau
//!   quadratic test, hyperplane congruences, hole descent).
//! - [`galois`]: table-driven small fields `F_q` for q in {2,...,9},
//!   projective point indexing, and subspace enumeration.
//! - [`oracle`]: exact maximum partial-spread search and empirical lemma
//!   verification on real partitions.

pub mod bounds;
pub mod error;
pub mod exactmath;
pub mod galois;
pub mod oracle;
pub mod vsp;

pub use error::Error;
pub use exactmath::{Int, Natural};
