//! Crate-wide error type.
//!
//! Violations of *internal* arithmetic invariants (inexact division where
//! exactness is guaranteed, congruences the counting lemmas promise) panic
//! instead: a nonzero remainder there is a caller bug, never data.

use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("q = {0} is not a prime power in {{2,3,4,5,7,8,9}}")]
    InvalidPrimePower(u32),

    #[error("spread dimension t must be at least 1")]
    ZeroSpreadDimension,

    #[error("ambient dimension n = {n} must be at least t = {t}")]
    DimensionOrder { n: u32, t: u32 },

    #[error("hole-type requires t >= s >= 2, got t = {t}, s = {s}")]
    InvalidHoleType { t: u32, s: u32 },

    #[error("hole-type lives in F_q^n with n > t, got n = {n}, t = {t}")]
    AmbientNotAboveT { n: u32, t: u32 },

    #[error("quadratic hyperplane test needs n - 2 >= 2(s - 1), got n = {n}, s = {s}")]
    AmbientTooSmall { n: u32, s: u32 },

    #[error("descent step j = {j} outside the legal range 0..={max}")]
    DescentRange { j: u32, max: i64 },

    #[error("descent increment c + [j]_q (x - 1) = {value} is not divisible by q^{j}")]
    DescentNotIntegral { value: BigInt, j: u32 },

    #[error("hole bound preconditions violated: {0}")]
    HoleBoundPrecondition(String),

    #[error("projective space has {points} points, exceeding the limit {limit}")]
    Capacity { points: u64, limit: u64 },

    #[error("subspace dimension d = {d} outside 1..={n}")]
    SubspaceDimension { d: u32, n: u32 },

    #[error("zero vector has no projective point index")]
    ZeroVector,

    #[error("congruence verification needs at least one spread member")]
    EmptySpread,

    #[error("invalid partial spread: {0}")]
    InvalidSpread(String),

    #[error("witness parse error: {0}")]
    WitnessParse(String),
}
