//! Lower and upper bounds on the maximum partial t-spread size `A_q(n, 2t; t)`.
//!
//! Writing `n = k t + r` with `0 <= r <= t - 1`, the pipeline computes
//!
//! - the construction lower bound `l q^t + 1` with
//!   `l = (q^{n-t} - q^r)/(q^t - 1)`;
//! - the packing upper bound `floor([n]_q / [t]_q)`;
//! - theorem 1: `A <= l q^t + 1 + z(q-1)` for the minimal feasible z in the
//!   `t = [r]_q + 1 - z + u` parameterization (tight for `t > [r]_q`);
//! - theorem 2: `A <= l q^t + ceil(lambda - 1/2 - sqrt(d)/2)` minimized over
//!   the window parameter y, where `lambda = q^y` and
//!   `d = 1 + 4 lambda (lambda - (z+y-1)(q-1) - 1)`;
//! - the y = t specialization of theorem 2 (the Drake-Freeman bound), kept
//!   as a separate method tag for comparison tables.
//!
//! Every bound carries a certificate: an ordered list of human-readable
//! steps tracing the value back to the hole-count descent and the excluded
//! hole-type family implemented in [`crate::vsp`].

use num_traits::{One, ToPrimitive, Zero};

use crate::error::Error;
use crate::exactmath::{ceil_bound_term, exact_div, q_bracket, q_pow, valuation, Int, Natural};
use crate::vsp;

/// The prime powers supported by the engine.
pub const VALID_Q: [u32; 7] = [2, 3, 4, 5, 7, 8, 9];

/// A bound query `(q, n, t)` together with its derived decomposition
/// `n = k t + r` and `l = (q^{n-t} - q^r)/(q^t - 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpreadInstance {
    q: u32,
    n: u32,
    t: u32,
    k: u32,
    r: u32,
    l: Natural,
}

/// Decomposes a query into a [`SpreadInstance`].
///
/// Rejects q outside the supported prime powers and n < t. The division
/// defining l is exact for every valid decomposition and is asserted.
pub fn decompose(q: u32, n: u32, t: u32) -> Result<SpreadInstance, Error> {
    if !VALID_Q.contains(&q) {
        return Err(Error::InvalidPrimePower(q));
    }
    if t == 0 {
        return Err(Error::ZeroSpreadDimension);
    }
    if n < t {
        return Err(Error::DimensionOrder { n, t });
    }
    let k = n / t;
    let r = n % t;
    let l = exact_div(&(q_pow(q, n - t) - q_pow(q, r)), &(q_pow(q, t) - 1u32));
    Ok(SpreadInstance { q, n, t, k, r, l })
}

impl SpreadInstance {
    pub fn q(&self) -> u32 {
        self.q
    }
    pub fn n(&self) -> u32 {
        self.n
    }
    pub fn t(&self) -> u32 {
        self.t
    }
    pub fn k(&self) -> u32 {
        self.k
    }
    pub fn r(&self) -> u32 {
        self.r
    }
    pub fn l(&self) -> &Natural {
        &self.l
    }

    /// `l q^t`, the member count of the known constructions minus one.
    pub fn l_qt(&self) -> Natural {
        &self.l * q_pow(self.q, self.t)
    }

    /// t divides n: a perfect spread exists.
    pub fn is_spread_case(&self) -> bool {
        self.r == 0
    }

    /// n < 2t (equivalently k = 1): any two t-subspaces intersect
    /// nontrivially, so the maximum is a single member.
    pub fn is_degenerate(&self) -> bool {
        self.k == 1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundDirection {
    Lower,
    Upper,
}

/// Which rule produced a bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundMethod {
    Construction,
    Packing,
    Theorem1,
    Theorem2,
    DrakeFreeman,
    Oracle,
}

impl BoundMethod {
    pub fn name(&self) -> &'static str {
        match self {
            BoundMethod::Construction => "Construction",
            BoundMethod::Packing => "Packing",
            BoundMethod::Theorem1 => "Theorem1",
            BoundMethod::Theorem2 => "Theorem2",
            BoundMethod::DrakeFreeman => "DrakeFreeman",
            BoundMethod::Oracle => "Oracle",
        }
    }

    /// Preference order for equal upper-bound values.
    fn tie_rank(&self) -> u8 {
        match self {
            BoundMethod::Theorem1 => 0,
            BoundMethod::Theorem2 => 1,
            BoundMethod::Packing => 2,
            BoundMethod::DrakeFreeman => 3,
            BoundMethod::Construction => 4,
            BoundMethod::Oracle => 5,
        }
    }
}

/// Parameter witness attached to a bound value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParamWitness {
    /// Theorem 1: the chosen `z` and the slack `u = t - ([r]_q + 1 - z)`.
    ZU { z: Natural, u: Natural },
    /// Theorem 2 / Drake-Freeman: forced `z`, minimizing `y`, and the
    /// smallest contradicted member count offset `x` (bound = `l q^t + x - 1`).
    ZYX { z: Natural, y: u32, x: Natural },
    /// Oracle: identifier of the witness spread.
    Witness { id: String },
}

/// One bound value with provenance: the method that produced it, the
/// parameter witness, and a human-readable certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundResult {
    pub value: Natural,
    pub direction: BoundDirection,
    pub method: BoundMethod,
    pub params: Option<ParamWitness>,
    pub certificate: Vec<String>,
}

impl BoundResult {
    /// Checks that the params variant matches the method.
    pub fn params_consistent(&self) -> bool {
        match self.method {
            BoundMethod::Theorem1 => matches!(self.params, Some(ParamWitness::ZU { .. })),
            BoundMethod::Theorem2 | BoundMethod::DrakeFreeman => {
                matches!(self.params, Some(ParamWitness::ZYX { .. }))
            }
            BoundMethod::Oracle => matches!(self.params, Some(ParamWitness::Witness { .. })),
            BoundMethod::Construction | BoundMethod::Packing => self.params.is_none(),
        }
    }
}

fn decomposition_line(inst: &SpreadInstance) -> String {
    format!(
        "n = {} = {}*{} + {} (k={}, r={}), l = (q^(n-t) - q^r)/(q^t - 1) = {}",
        inst.n, inst.k, inst.t, inst.r, inst.k, inst.r, inst.l
    )
}

/// The construction lower bound `l q^t + 1`.
///
/// For r = 0 this equals the perfect spread size `(q^n - 1)/(q^t - 1)`; for
/// n < 2t it degenerates to 1 (two t-subspaces of `F_q^n` must meet).
pub fn lower_bound_construction(inst: &SpreadInstance) -> BoundResult {
    let value = inst.l_qt() + 1u32;
    let mut certificate = vec![decomposition_line(inst)];
    if inst.is_degenerate() {
        certificate.push(format!(
            "n = {} < 2t = {}: any two t-subspaces intersect; the single-subspace spread gives 1",
            inst.n,
            2 * inst.t
        ));
    } else if inst.is_spread_case() {
        certificate.push(format!(
            "t divides n: a perfect spread partitions all points, size (q^n - 1)/(q^t - 1) = {value}"
        ));
    } else {
        certificate.push(format!(
            "known constructions reach l q^t + 1 = {value} members"
        ));
    }
    BoundResult {
        value,
        direction: BoundDirection::Lower,
        method: BoundMethod::Construction,
        params: None,
        certificate,
    }
}

/// The packing upper bound `floor([n]_q / [t]_q)`: each member covers
/// `[t]_q` of the `[n]_q` projective points.
pub fn packing_bound(inst: &SpreadInstance) -> BoundResult {
    let points = q_bracket(inst.n, inst.q);
    let per_member = q_bracket(inst.t, inst.q);
    let value = &points / &per_member;
    BoundResult {
        value: value.clone(),
        direction: BoundDirection::Upper,
        method: BoundMethod::Packing,
        params: None,
        certificate: vec![
            decomposition_line(inst),
            format!(
                "[n]_q = {points} points, each member covers [t]_q = {per_member}: at most floor({points}/{per_member}) = {value}"
            ),
        ],
    }
}

/// Theorem 1: `A_q(n, 2t; t) <= l q^t + 1 + z(q-1)` for any
/// `0 <= z <= [r]_q / 2` with `t = [r]_q + 1 - z + u > r` and `u >= 0`.
///
/// The bound is increasing in z, so the minimal feasible
/// `z* = max(0, [r]_q + 1 - t)` is chosen. Returns `None` when the
/// preconditions fail (k < 2, r = 0, t <= r) or `2 z* > [r]_q`.
pub fn theorem1_bound(inst: &SpreadInstance) -> Option<BoundResult> {
    if inst.k < 2 || inst.r < 1 || inst.t <= inst.r {
        return None;
    }
    let (q, t, r) = (inst.q, inst.t, inst.r);
    let bracket_r = q_bracket(r, q);
    let z = (Int::from(bracket_r.clone()) + 1i32 - Int::from(t))
        .max(Int::zero())
        .to_biguint()
        .expect("max with zero");
    if &z * 2u32 > bracket_r {
        return None;
    }
    let u = (Int::from(t) - Int::from(bracket_r.clone()) - 1i32 + Int::from(z.clone()))
        .to_biguint()
        .expect("u >= 0 by choice of z");
    let value = inst.l_qt() + 1u32 + &z * (q - 1);

    let mut certificate = vec![
        decomposition_line(inst),
        format!(
            "minimal z with u = t - ([r]_q + 1 - z) >= 0: z = {z}, u = {u}; feasible since 2z <= [r]_q = {bracket_r}"
        ),
    ];
    // Contradiction story: a spread of size l q^t + x with x = 2 + z(q-1)
    // forces, after descending to a (n-t+y)-subspace with y = z+1, a hole
    // count that is either negative (z = 0) or a member of the excluded
    // arithmetic-progression family (z >= 1).
    let x = Natural::from(2u32) + &z * (q - 1);
    if let Some(y) = (&z + 1u32).to_u32() {
        if let Ok(trace) = vsp::spread_hole_bound(q, inst.n, t, r, &z, &u, &x, y) {
            certificate.push(format!(
                "suppose {} more members than the construction: x = 2 + z(q-1) = {x}",
                &x - 1u32
            ));
            certificate.extend(trace.steps.iter().cloned());
            if z.is_zero() {
                certificate.push(format!(
                    "L <= {} < 0 is impossible: no such spread",
                    trace.l_max
                ));
            } else {
                let family: Vec<String> = vsp::excluded_hole_counts(q, t, y)
                    .iter()
                    .map(|(_, c)| c.to_string())
                    .collect();
                let listing = if family.len() <= 8 {
                    format!("{{{}}}", family.join(", "))
                } else {
                    format!("{{i q^y - [y]_q + y - 1 : 1 <= i <= {}}}", family.len())
                };
                certificate.push(format!(
                    "feasible hole counts L >= 0 in that class all lie in the excluded family {listing}: no such spread"
                ));
            }
            certificate.push(format!("hence A <= l q^t + x - 1 = {value}"));
        }
    }

    Some(BoundResult {
        value,
        direction: BoundDirection::Upper,
        method: BoundMethod::Theorem1,
        params: Some(ParamWitness::ZU { z, u }),
        certificate,
    })
}

/// One row of the theorem 2 scan over y. `term` is absent when the
/// discriminant is below 1 (the square root is undefined; that y is skipped,
/// not an error).
struct YScan {
    y: u32,
    term: Option<Int>,
    line: String,
}

/// Scans `y` over the given range, computing the ceiling term
/// `ceil(lambda - 1/2 - sqrt(d)/2)` with `lambda = q^y` and
/// `d = 1 + 4 lambda (lambda - (z+y-1)(q-1) - 1)`.
fn theorem2_scan(
    inst: &SpreadInstance,
    z: &Natural,
    y_range: impl Iterator<Item = u32>,
) -> Vec<YScan> {
    let q = inst.q;
    let mut rows = Vec::new();
    for y in y_range {
        let lambda = q_pow(q, y);
        let inner = Int::from(lambda.clone()) - (Int::from(z.clone()) + y - 1i32) * (q - 1) - 1i32;
        let d = Int::from(&lambda * 4u32) * &inner + 1i32;
        if d < Int::one() {
            rows.push(YScan {
                y,
                term: None,
                line: format!("y = {y}: lambda = {lambda}, d = {d} < 1, skipped"),
            });
            continue;
        }
        let d = d.to_biguint().expect("d >= 1");
        let term = ceil_bound_term(&lambda, &d);
        rows.push(YScan {
            y,
            line: format!(
                "y = {y}: lambda = {lambda}, d = 1 + 4 lambda (lambda - (z+y-1)(q-1) - 1) = {d}, ceil term = {term}"
            ),
            term: Some(term),
        });
    }
    rows
}

fn theorem2_from_scan(
    inst: &SpreadInstance,
    z: &Natural,
    rows: Vec<YScan>,
    all_lines: Vec<String>,
    method: BoundMethod,
) -> Option<BoundResult> {
    let best = rows
        .into_iter()
        .filter(|row| row.term.is_some())
        .min_by(|a, b| a.term.cmp(&b.term).then(a.y.cmp(&b.y)))?;
    let term = best
        .term
        .expect("skipped rows filtered")
        .to_biguint()
        .expect("ceiling term is positive whenever z + y - 1 >= 1");
    let x = &term + 1u32;
    // Internal guarantees: x >= 2 and the valuation of x - 1 stays within y.
    assert!(x >= Natural::from(2u32), "theorem 2 produced x = {x} < 2");
    assert!(
        valuation(&term, inst.q) <= best.y,
        "valuation of x - 1 exceeds y"
    );
    let value = inst.l_qt() + &term;

    let mut certificate = vec![
        decomposition_line(inst),
        format!("forced z = [r]_q + 1 - t = {z}"),
    ];
    certificate.extend(all_lines);
    certificate.push(format!(
        "minimum ceil term {term} at y = {}: a spread of size l q^t + x with x = {x} forces an excluded hole-type; A <= l q^t + {term} = {value}",
        best.y
    ));
    Some(BoundResult {
        value,
        direction: BoundDirection::Upper,
        method,
        params: Some(ParamWitness::ZYX {
            z: z.clone(),
            y: best.y,
            x,
        }),
        certificate,
    })
}

/// Common gate for theorem 2 and its y = t specialization: requires k >= 2,
/// 1 <= r < t, and a non-negative forced `z = [r]_q + 1 - t`.
fn theorem2_gate(inst: &SpreadInstance) -> Option<Natural> {
    if inst.k < 2 || inst.r < 1 || inst.t <= inst.r {
        return None;
    }
    (Int::from(q_bracket(inst.r, inst.q)) + 1i32 - Int::from(inst.t)).to_biguint()
}

/// Theorem 2: `A_q(n, 2t; t) <= l q^t + min_y ceil(lambda - 1/2 - sqrt(d)/2)`
/// over `max(r, 2) <= y <= t`, with `z = [r]_q + 1 - t >= 0` forced.
///
/// Ties between y values are broken toward the smallest y. Returns `None`
/// when the preconditions fail or every y has d < 1.
pub fn theorem2_bound(inst: &SpreadInstance) -> Option<BoundResult> {
    let z = theorem2_gate(inst)?;
    let y_lo = inst.r.max(2);
    let rows = theorem2_scan(inst, &z, y_lo..=inst.t);
    let lines = rows.iter().map(|r| r.line.clone()).collect();
    theorem2_from_scan(inst, &z, rows, lines, BoundMethod::Theorem2)
}

/// The y = t specialization of theorem 2 (the previously best general upper
/// bound); reported separately for comparison tables.
pub fn drake_freeman_bound(inst: &SpreadInstance) -> Option<BoundResult> {
    let z = theorem2_gate(inst)?;
    let rows = theorem2_scan(inst, &z, std::iter::once(inst.t));
    let lines = rows.iter().map(|r| r.line.clone()).collect();
    theorem2_from_scan(inst, &z, rows, lines, BoundMethod::DrakeFreeman)
}

/// Aggregated best bounds for an instance.
#[derive(Debug, Clone)]
pub struct BestBounds {
    pub instance: SpreadInstance,
    pub lower: BoundResult,
    pub upper: BoundResult,
    pub exact: bool,
}

/// Computes the best lower and upper bound for `(q, n, t)`.
///
/// The upper bound is the minimum value among packing, theorem 1, and
/// theorem 2 (Drake-Freeman is dominated by theorem 2 and reported only on
/// request); ties prefer Theorem1, then Theorem2, then Packing. For n < 2t
/// the exact value 1 short-circuits; for r = 0 the packing bound already
/// equals the perfect spread size. `lower <= upper` is asserted.
pub fn best_bounds(q: u32, n: u32, t: u32) -> Result<BestBounds, Error> {
    let inst = decompose(q, n, t)?;
    Ok(best_bounds_for(&inst))
}

/// [`best_bounds`] on an already-decomposed instance.
pub fn best_bounds_for(inst: &SpreadInstance) -> BestBounds {
    let lower = lower_bound_construction(inst);
    let upper = if inst.is_degenerate() {
        BoundResult {
            value: Natural::one(),
            direction: BoundDirection::Upper,
            method: BoundMethod::Packing,
            params: None,
            certificate: vec![
                decomposition_line(inst),
                format!(
                    "n = {} < 2t = {}: two t-subspaces meet in dimension >= 2t - n >= 1, so at most one member",
                    inst.n,
                    2 * inst.t
                ),
            ],
        }
    } else {
        let mut candidates = vec![packing_bound(inst)];
        candidates.extend(theorem1_bound(inst));
        candidates.extend(theorem2_bound(inst));
        candidates
            .into_iter()
            .min_by(|a, b| {
                a.value
                    .cmp(&b.value)
                    .then(a.method.tie_rank().cmp(&b.method.tie_rank()))
            })
            .expect("packing bound always present")
    };
    assert!(
        lower.value <= upper.value,
        "lower bound {} exceeds upper bound {} for q={} n={} t={}",
        lower.value,
        upper.value,
        inst.q,
        inst.n,
        inst.t
    );
    let exact = lower.value == upper.value;
    BestBounds {
        instance: inst.clone(),
        lower,
        upper,
        exact,
    }
}

/// All method rows for an instance, in a fixed display order; absent
/// methods are omitted.
pub fn all_method_bounds(inst: &SpreadInstance) -> Vec<BoundResult> {
    let mut rows = vec![lower_bound_construction(inst), packing_bound(inst)];
    rows.extend(theorem1_bound(inst));
    rows.extend(theorem2_bound(inst));
    rows.extend(drake_freeman_bound(inst));
    rows
}
