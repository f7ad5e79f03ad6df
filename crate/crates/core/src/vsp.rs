//! Vector-space-partition machinery.
//!
//! A vector space partition of `F_q^n` covers every nonzero vector exactly
//! once; its 1-dimensional members are *holes*. A partition of hole-type
//! `(t, s, c)` has maximum member dimension t, minimum non-hole dimension s,
//! and c holes. This module implements the counting consequences used by the
//! bound pipeline:
//!
//! - [`tau`]: the quadratic form whose negativity (after scaling) contradicts
//!   the hyperplane double-counting identities, certifying that a hole-type
//!   cannot occur;
//! - [`exclude_hole_type`]: the complete two-point probe of that quadratic;
//! - [`excluded_hole_counts`]: the arithmetic-progression family of hole counts
//!   excluded for every ambient dimension;
//! - [`hyperplane_congruence`] / [`descend_holes`]: the residue class every
//!   hyperplane's hole count must satisfy and the averaging descent to
//!   smaller subspaces;
//! - [`spread_hole_bound`]: the specialization to partial t-spreads, which
//!   produces the hole-count bound `L <= (z + y - 1) q^y + w` feeding the
//!   upper-bound theorems.
//!
//! All operations are pure functions over immutable values and produce
//! plain-string certificate traces.

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::Error;
use crate::exactmath::{q_bracket, q_pow, valuation, Int, Natural};

/// Shape descriptor of a vector space partition: maximum member dimension
/// `t`, minimum non-hole dimension `s`, and hole count `c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HoleType {
    t: u32,
    s: u32,
    c: Natural,
}

impl HoleType {
    /// Requires `t >= s >= 2`.
    pub fn new(t: u32, s: u32, c: Natural) -> Result<Self, Error> {
        if s < 2 || t < s {
            return Err(Error::InvalidHoleType { t, s });
        }
        Ok(HoleType { t, s, c })
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn holes(&self) -> &Natural {
        &self.c
    }
}

/// Verdict of [`exclude_hole_type`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExclusionStatus {
    /// The hole-type cannot occur; `f_value = F(witness_m) < 0` certifies it.
    Excluded { witness_m: Int, f_value: Int },
    /// The quadratic test does not rule the hole-type out.
    Undecided,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FeasibilityVerdict {
    pub status: ExclusionStatus,
    pub trace: Vec<String>,
}

impl FeasibilityVerdict {
    pub fn is_excluded(&self) -> bool {
        matches!(self.status, ExclusionStatus::Excluded { .. })
    }
}

/// The quadratic form
/// `tau_q(c, Delta, m) = m(m-1) Delta^2 q^2 - c(2m-1)(q-1) Delta q + c(q-1)(c(q-1) + 1)`.
///
/// `Delta` is `q^{s-1}` for the hole-type under test; `m` ranges over all
/// integers (including negatives).
pub fn tau(q: u32, c: &Int, delta: &Natural, m: &Int) -> Int {
    let q = Int::from(q);
    let delta = Int::from(delta.clone());
    let qm1 = &q - 1;
    let first = m * (m - 1) * &delta * &delta * &q * &q;
    let second = c * (m * 2 - 1) * &qm1 * &delta * &q;
    let c_qm1 = c * &qm1;
    let third = &c_qm1 * (&c_qm1 + 1);
    first - second + third
}

/// The scaled test value `F(m) = tau_q(c, Delta, m) * q^{n-2}/Delta^2 - m(m-1)`.
///
/// For any vector space partition of the given hole-type in `F_q^n` the value
/// is non-negative for every integer m, so a negative return certifies that
/// the hole-type cannot occur. Requires `n > t` and `n - 2 >= 2(s - 1)` so
/// that the scale factor `q^{n-2}/Delta^2 = q^{n-2s}` is integral.
pub fn quadratic_test_value(q: u32, n: u32, hole_type: &HoleType, m: &Int) -> Result<Int, Error> {
    if n <= hole_type.t {
        return Err(Error::AmbientNotAboveT { n, t: hole_type.t });
    }
    if n < 2 * hole_type.s {
        return Err(Error::AmbientTooSmall { n, s: hole_type.s });
    }
    let scale = Int::from(q_pow(q, n - 2 * hole_type.s));
    let delta = q_pow(q, hole_type.s - 1);
    let c = Int::from(hole_type.c.clone());
    Ok(tau(q, &c, &delta, m) * scale - m * (m - 1i32))
}

/// Decides feasibility of a hole-type via the quadratic test.
///
/// `F(m)` is a convex quadratic in m (leading coefficient `q^n - 1 > 0`), so
/// its integer minimum is attained at one of the two integers bracketing the
/// exact rational vertex; probing those two points is complete. Returns the
/// first probed m with `F(m) < 0`, or `Undecided` when both are non-negative.
pub fn exclude_hole_type(
    q: u32,
    n: u32,
    hole_type: &HoleType,
) -> Result<FeasibilityVerdict, Error> {
    // F(m) = A m^2 + B m + C with A = Delta^2 q^2 P - 1 = q^n - 1 > 0 and
    // B = -Delta^2 q^2 P - 2 c (q-1) Delta q P + 1, where P = q^{n-2s}.
    if n <= hole_type.t {
        return Err(Error::AmbientNotAboveT { n, t: hole_type.t });
    }
    if n < 2 * hole_type.s {
        return Err(Error::AmbientTooSmall { n, s: hole_type.s });
    }
    let s = hole_type.s;
    let delta = q_pow(q, s - 1);
    let p = Int::from(q_pow(q, n - 2 * s));
    let c = Int::from(hole_type.c.clone());
    let d2q2p = Int::from(&delta * &delta) * q * q * &p;
    let a = &d2q2p - 1;
    let b = -&d2q2p - &c * 2i32 * (q - 1) * Int::from(delta.clone()) * q * &p + 1i32;

    // Vertex at m* = -B / 2A; probe floor(m*) and floor(m*) + 1.
    let m_lo = (-&b).div_floor(&(&a * 2i32));
    let mut trace = vec![
        format!(
            "hole-type (t={}, s={}, c={}) in F_{}^{}",
            hole_type.t, s, hole_type.c, q, n
        ),
        format!("Delta = q^(s-1) = {delta}, scale = q^(n-2s) = {p}"),
        format!(
            "F(m) = tau_q(c, Delta, m) * scale - m(m-1) is convex; vertex between m = {} and m = {}",
            m_lo,
            &m_lo + 1
        ),
    ];
    for m in [m_lo.clone(), &m_lo + 1] {
        let f = quadratic_test_value(q, n, hole_type, &m)?;
        if f.is_negative() {
            trace.push(format!(
                "F({m}) = {f} < 0: no partition of this hole-type exists"
            ));
            return Ok(FeasibilityVerdict {
                status: ExclusionStatus::Excluded {
                    witness_m: m,
                    f_value: f,
                },
                trace,
            });
        }
        trace.push(format!("F({m}) = {f} >= 0"));
    }
    trace.push("quadratic test inconclusive".to_string());
    Ok(FeasibilityVerdict {
        status: ExclusionStatus::Undecided,
        trace,
    })
}

/// The excluded arithmetic-progression hole counts: for `t >= s >= 2` no
/// vector space partition of hole-type `(t, s, c)` exists with
/// `c = i q^s - [s]_q + s - 1`, `1 <= i <= s - 1`. Returns the `(i, c)` pairs.
pub fn excluded_hole_counts(q: u32, t: u32, s: u32) -> Vec<(u32, Natural)> {
    assert!(
        t >= s && s >= 2,
        "excluded_hole_counts requires t >= s >= 2"
    );
    let qs = q_pow(q, s);
    let bracket_s = q_bracket(s, q);
    (1..s)
        .map(|i| {
            let c = Int::from(&qs * i) - Int::from(bracket_s.clone()) + (s - 1);
            let c = c.to_biguint().expect("excluded hole counts are positive");
            (i, c)
        })
        .collect()
}

/// The residue class every hyperplane hole count must lie in: for a
/// partition of hole-type `(t, s, m1)` with `sum m_i = l q^s + x` members of
/// dimension >= s, each hyperplane contains `(m1 + x - 1)/q mod q^{s-1}`
/// holes modulo `q^{s-1}`.
///
/// Panics when `q` does not divide `m1 + x - 1`: the counting argument
/// guarantees divisibility for every real partition, so a violation is a
/// caller bug.
pub fn hyperplane_congruence(m1: &Natural, x: &Natural, q: u32, s: u32) -> Natural {
    let numerator = Int::from(m1.clone()) + Int::from(x.clone()) - 1i32;
    let numerator = numerator
        .to_biguint()
        .expect("m1 + x - 1 >= 0 required (m1 >= 1 or x >= 1)");
    let (quot, rem) = numerator.div_rem(&Natural::from(q));
    assert!(
        rem.is_zero(),
        "hyperplane_congruence: q = {q} does not divide m1 + x - 1 = {numerator} (caller bug)"
    );
    quot % q_pow(q, s - 1)
}

/// Result of one application of the hole descent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DescentStep {
    pub b_new: Int,
    pub c_new: Int,
    /// Residue modulus `q^{s-j}` for the descended hole count.
    pub residue_mod: Natural,
    /// Upper bound `(b - j) q^{s-j} + c_new` on the descended hole count.
    pub l_max: Int,
}

/// Averaging descent: from a partition with `m1 = b q^s + c >= 1` holes and
/// `x >= 1`, j descent steps reach an `(n-j)`-dimensional subspace with at
/// most `(b - j) q^{s-j} + c_new` holes, where
/// `c_new = (c + [j]_q (x - 1)) / q^j`, and hole count congruent to `c_new`
/// modulo `q^{s-j}`.
///
/// The legal range is `0 <= j <= s - max(1, f)` where `q^f` exactly divides
/// c; `c = 0` is treated as valuation 0. The division defining `c_new` must
/// be exact.
pub fn descend_holes(
    b: &Int,
    c: &Int,
    x: &Natural,
    q: u32,
    s: u32,
    j: u32,
) -> Result<DescentStep, Error> {
    assert!(!x.is_zero(), "descend_holes requires x >= 1");
    let f = valuation(&c.abs().to_biguint().expect("|c|"), q);
    let max_j = s as i64 - f.max(1) as i64;
    if (j as i64) > max_j {
        return Err(Error::DescentRange { j, max: max_j });
    }
    let x_minus_1 = Int::from(x.clone()) - 1i32;
    let increment = c + Int::from(q_bracket(j, q)) * &x_minus_1;
    let qj = Int::from(q_pow(q, j));
    let (c_new, rem) = increment.div_rem(&qj);
    if !rem.is_zero() {
        return Err(Error::DescentNotIntegral {
            value: increment,
            j,
        });
    }
    let b_new = b - j;
    let residue_mod = q_pow(q, s - j);
    let l_max = &b_new * Int::from(residue_mod.clone()) + &c_new;
    Ok(DescentStep {
        b_new,
        c_new,
        residue_mod,
        l_max,
    })
}

/// Hole-count bound for a hypothetical partial t-spread, with its
/// certificate trace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HoleBoundTrace {
    /// Total holes of the hypothetical spread: `[r]_q q^t - [t]_q (x - 1)`.
    pub m1: Int,
    pub x: Natural,
    pub y: u32,
    /// `w = -(x - 1) [y]_q`.
    pub w: Int,
    /// `w` normalized into `[0, q^y)`.
    pub w_residue: Int,
    /// `(z + y - 1) q^y + w`.
    pub l_max: Int,
    /// Dimension `n - t + y` of the subspace carrying at most `l_max` holes.
    pub subspace_dim: u32,
    pub steps: Vec<String>,
}

/// Specializes the descent to a partial t-spread in `F_q^n` with
/// `m_t = l q^t + x` members: some `(n - t + y)`-dimensional subspace
/// contains `L <= (z + y - 1) q^y + w` holes with `L = w (mod q^y)`, where
/// `w = -(x - 1) [y]_q`.
///
/// Preconditions: `t = [r]_q + 1 - z + u > r`, `x >= 2`, and
/// `max(1, f) <= y <= t` where `q^f` exactly divides `x - 1`. This is the
/// descent applied with `s = t`, `j = t - y`, `b = [r]_q`.
#[allow(clippy::too_many_arguments)]
pub fn spread_hole_bound(
    q: u32,
    n: u32,
    t: u32,
    r: u32,
    z: &Natural,
    u: &Natural,
    x: &Natural,
    y: u32,
) -> Result<HoleBoundTrace, Error> {
    let bracket_r = q_bracket(r, q);
    let t_expected = Int::from(bracket_r.clone()) + 1 - Int::from(z.clone()) + Int::from(u.clone());
    if t_expected != Int::from(t) {
        return Err(Error::HoleBoundPrecondition(format!(
            "t = {t} but [r]_q + 1 - z + u = {t_expected}"
        )));
    }
    if t <= r {
        return Err(Error::HoleBoundPrecondition(format!(
            "t = {t} must exceed r = {r}"
        )));
    }
    if n < t || !(n - r).is_multiple_of(t) {
        return Err(Error::HoleBoundPrecondition(format!(
            "n = {n} is not of the form k*{t} + {r}"
        )));
    }
    if x < &Natural::from(2u32) {
        return Err(Error::HoleBoundPrecondition(format!(
            "x = {x} must be at least 2"
        )));
    }
    let x_minus_1 = x - 1u32;
    let f = valuation(&x_minus_1, q);
    if y < f.max(1) || y > t {
        return Err(Error::HoleBoundPrecondition(format!(
            "y = {y} outside max(1, f)..=t with f = {f}, t = {t}"
        )));
    }

    let x_minus_1 = Int::from(x_minus_1);
    let m1 = Int::from(&bracket_r * q_pow(q, t)) - Int::from(q_bracket(t, q)) * &x_minus_1;
    let w = -&x_minus_1 * Int::from(q_bracket(y, q));
    let qy = Int::from(q_pow(q, y));
    let zy1 = Int::from(z.clone()) + y - 1;
    let l_max = &zy1 * &qy + &w;
    let w_residue = w.mod_floor(&qy);
    let j = t - y;
    let steps = vec![
        format!(
            "partial {t}-spread in F_{q}^{n} with l q^t + x members (x = {x}): \
             m1 = [r]_q q^t - [t]_q (x-1) = {m1} holes"
        ),
        format!(
            "descend j = t - y = {j} steps with s = t, b = [r]_q = {bracket_r}: \
             some {}-dimensional subspace has L holes",
            n - t + y
        ),
        format!("w = -(x-1)[y]_q = {w}; L = {w_residue} (mod q^y = {qy})"),
        format!("L <= (z + y - 1) q^y + w = {zy1} * {qy} + {w} = {l_max}"),
    ];
    Ok(HoleBoundTrace {
        m1,
        x: x.clone(),
        y,
        w,
        w_residue,
        l_max,
        subspace_dim: n - t + y,
        steps,
    })
}
