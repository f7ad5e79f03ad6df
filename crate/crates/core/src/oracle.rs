//! Exact maximum partial-spread search at desk scale, plus empirical
//! verification of the counting lemmas on real partitions.
//!
//! The search is an exact-cover-flavored branch and bound: branch on the
//! lowest-index point not yet covered or declared a hole, trying every
//! disjoint t-subspace through it and finally the "declare hole" branch.
//! Pruning uses the bound pipeline's best upper bound and the remaining
//! point count; symmetry reduction is limited to fixing the first member to
//! the subspace spanned by the first t unit vectors (the general linear
//! group is transitive on t-subspaces, so this is safe for maximum-size
//! search).

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::{Duration, Instant};

use num_traits::ToPrimitive;

use crate::bounds::{best_bounds_for, decompose, BestBounds, SpreadInstance};
use crate::error::Error;
use crate::exactmath::{q_bracket, q_pow, Int, Natural};
use crate::galois::{
    bracket_usize, enumerate_subspaces_with_limit, hyperplanes_with_limit, make_field, FieldSpec,
    PointSet, Subspace, DEFAULT_POINT_LIMIT,
};
use crate::vsp::{excluded_hole_counts, hyperplane_congruence};

/// Search mode: exhaustive branch and bound, or a single greedy pass.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    Exact,
    Greedy,
}

/// Resource limits for the search.
#[derive(Debug, Clone)]
pub struct SearchBudget {
    pub max_nodes: u64,
    pub max_seconds: Duration,
    pub mode: SearchMode,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_nodes: 10_000_000,
            max_seconds: Duration::from_secs(60),
            mode: SearchMode::Exact,
        }
    }
}

/// A pairwise-trivially-intersecting collection of t-subspaces plus its
/// hole set (uncovered projective points).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialSpread {
    instance: SpreadInstance,
    members: Vec<Subspace>,
    holes: PointSet,
}

impl PartialSpread {
    /// Validates and assembles a partial spread: members must be
    /// t-dimensional and pairwise disjoint as point sets; the hole set is
    /// the complement of their union.
    pub fn new(instance: SpreadInstance, members: Vec<Subspace>) -> Result<Self, Error> {
        let total = bracket_usize(instance.n(), instance.q());
        let mut covered = PointSet::empty(total);
        for (i, m) in members.iter().enumerate() {
            if m.dim() != instance.t() {
                return Err(Error::InvalidSpread(format!(
                    "member {i} has dimension {} instead of t = {}",
                    m.dim(),
                    instance.t()
                )));
            }
            if !covered.is_disjoint(m.points()) {
                return Err(Error::InvalidSpread(format!(
                    "member {i} overlaps an earlier member"
                )));
            }
            covered.union_with(m.points());
        }
        let holes = covered.complement();
        let spread = PartialSpread {
            instance,
            members,
            holes,
        };
        debug_assert_eq!(
            spread.holes.count(),
            total - spread.members.len() * bracket_usize(spread.instance.t(), spread.instance.q())
        );
        Ok(spread)
    }

    pub fn instance(&self) -> &SpreadInstance {
        &self.instance
    }
    pub fn members(&self) -> &[Subspace] {
        &self.members
    }
    pub fn holes(&self) -> &PointSet {
        &self.holes
    }
    pub fn size(&self) -> usize {
        self.members.len()
    }
    pub fn hole_count(&self) -> usize {
        self.holes.count()
    }

    /// Serializes to the witness text format: '#' comment lines, then one
    /// member per line as its RREF basis rows, each row a string of n field
    /// element digits, rows separated by single spaces.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "# partial spread witness: q={} n={} t={} size={} holes={}",
            self.instance.q(),
            self.instance.n(),
            self.instance.t(),
            self.size(),
            self.hole_count()
        );
        for m in &self.members {
            let line: Vec<String> = m
                .basis()
                .iter()
                .map(|row| row.iter().map(|d| d.to_string()).collect::<String>())
                .collect();
            let _ = writeln!(out, "{}", line.join(" "));
        }
        out
    }

    /// Parses the witness text format; validates dimensions, RREF canonical
    /// form (via reduction), and pairwise disjointness.
    pub fn parse_text(q: u32, n: u32, t: u32, text: &str) -> Result<Self, Error> {
        let instance = decompose(q, n, t)?;
        let field = make_field(q)?;
        let mut members = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let rows: Result<Vec<Vec<u8>>, Error> = line
                .split_whitespace()
                .map(|token| parse_row(&field, n, token, lineno))
                .collect();
            let rows = rows?;
            if rows.len() != t as usize {
                return Err(Error::WitnessParse(format!(
                    "line {}: expected {} basis rows, found {}",
                    lineno + 1,
                    t,
                    rows.len()
                )));
            }
            let sub = Subspace::from_basis(&field, n, &rows)?;
            if sub.dim() != t {
                return Err(Error::WitnessParse(format!(
                    "line {}: rows span dimension {} instead of {}",
                    lineno + 1,
                    sub.dim(),
                    t
                )));
            }
            members.push(sub);
        }
        PartialSpread::new(instance, members)
    }

    /// Short deterministic identifier for certificates and reports.
    pub fn witness_id(&self) -> String {
        let mut hash: u64 = 0xcbf29ce484222325;
        for byte in self.to_text().bytes() {
            hash ^= byte as u64;
            hash = hash.wrapping_mul(0x100000001b3);
        }
        format!(
            "q{}n{}t{}s{}-{hash:016x}",
            self.instance.q(),
            self.instance.n(),
            self.instance.t(),
            self.size()
        )
    }
}

fn parse_row(field: &FieldSpec, n: u32, token: &str, lineno: usize) -> Result<Vec<u8>, Error> {
    if token.len() != n as usize {
        return Err(Error::WitnessParse(format!(
            "line {}: row '{token}' has {} digits, expected {n}",
            lineno + 1,
            token.len()
        )));
    }
    token
        .chars()
        .map(|ch| {
            let d = ch.to_digit(16).ok_or_else(|| {
                Error::WitnessParse(format!("line {}: bad digit '{ch}'", lineno + 1))
            })?;
            if d >= field.q() {
                return Err(Error::WitnessParse(format!(
                    "line {}: digit {d} outside F_{}",
                    lineno + 1,
                    field.q()
                )));
            }
            Ok(d as u8)
        })
        .collect()
}

/// Result of [`max_partial_spread`].
#[derive(Debug, Clone)]
pub struct SearchOutcome {
    pub size: u64,
    pub witness: PartialSpread,
    /// True iff the search tree was exhausted (or the theoretical upper
    /// bound was attained) within the budget.
    pub proven_optimal: bool,
    pub nodes: u64,
}

/// splitmix64; deterministic shuffling without an RNG dependency.
fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e3779b97f4a7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

fn shuffled(len: usize, seed: u64) -> Vec<u32> {
    let mut order: Vec<u32> = (0..len as u32).collect();
    let mut state = seed;
    for i in (1..len).rev() {
        let j = (splitmix64(&mut state) % (i as u64 + 1)) as usize;
        order.swap(i, j);
    }
    order
}

fn greedy_indices(subspaces: &[Subspace], order: &[u32], total: usize) -> Vec<u32> {
    let mut covered = PointSet::empty(total);
    let mut picked = Vec::new();
    for &i in order {
        let s = &subspaces[i as usize];
        if covered.is_disjoint(s.points()) {
            covered.union_with(s.points());
            picked.push(i);
        }
    }
    picked
}

/// A random greedy partial spread (valid but usually not maximum), for
/// fuzzing the lemma verifiers. Deterministic in the seed.
pub fn greedy_partial_spread(
    q: u32,
    n: u32,
    t: u32,
    seed: u64,
    point_limit: usize,
) -> Result<PartialSpread, Error> {
    let instance = decompose(q, n, t)?;
    let field = make_field(q)?;
    let subspaces = enumerate_subspaces_with_limit(&field, n, t, point_limit)?;
    let total = bracket_usize(n, q);
    let order = shuffled(subspaces.len(), seed);
    let picked = greedy_indices(&subspaces, &order, total);
    let members = picked
        .iter()
        .map(|&i| subspaces[i as usize].clone())
        .collect();
    PartialSpread::new(instance, members)
}

struct SearchCtx<'a> {
    subspaces: &'a [Subspace],
    by_point: Vec<Vec<u32>>,
    members_per_point: usize,
    theory_ub: u64,
    budget: &'a SearchBudget,
    started: Instant,
    nodes: u64,
    aborted: bool,
    done: bool,
    best_size: u64,
    best_members: Vec<u32>,
}

impl SearchCtx<'_> {
    fn record(&mut self, members: &[u32]) {
        if members.len() as u64 > self.best_size {
            self.best_size = members.len() as u64;
            self.best_members = members.to_vec();
            if self.best_size >= self.theory_ub {
                self.done = true;
            }
        }
    }

    fn dfs(&mut self, decided: &mut PointSet, undecided: usize, members: &mut Vec<u32>) {
        self.nodes += 1;
        if self.nodes > self.budget.max_nodes
            || (self.nodes.is_multiple_of(1024) && self.started.elapsed() > self.budget.max_seconds)
        {
            self.aborted = true;
            return;
        }
        self.record(members);
        if self.done || self.aborted {
            return;
        }
        let Some(p) = decided.complement().first() else {
            return;
        };
        // Can this subtree still beat the incumbent?
        if members.len() as u64 + (undecided / self.members_per_point) as u64 <= self.best_size {
            return;
        }

        // Cover p with each compatible subspace.
        let candidates = self.by_point[p].clone();
        for ci in candidates {
            let mask = self.subspaces[ci as usize].points().clone();
            if !decided.is_disjoint(&mask) {
                continue;
            }
            decided.union_with(&mask);
            members.push(ci);
            self.dfs(decided, undecided - mask.count(), members);
            members.pop();
            decided.difference_with(&mask);
            if self.done || self.aborted {
                return;
            }
        }

        // Or declare p a hole.
        decided.set(p);
        self.dfs(decided, undecided - 1, members);
        decided.clear(p);
    }
}

/// Exact (or greedy) search for a maximum partial t-spread in `F_q^n`.
///
/// Prunes with the bound pipeline's best upper bound and the remaining
/// point count. `proven_optimal` is true iff the tree was exhausted within
/// budget or the incumbent met the theoretical upper bound; exceeding the
/// node or time budget is reported, not an error.
pub fn max_partial_spread(
    q: u32,
    n: u32,
    t: u32,
    budget: &SearchBudget,
) -> Result<SearchOutcome, Error> {
    let instance = decompose(q, n, t)?;
    let field = make_field(q)?;
    let subspaces = enumerate_subspaces_with_limit(&field, n, t, DEFAULT_POINT_LIMIT)?;
    let total = bracket_usize(n, q);
    let theory = best_bounds_for(&instance);
    let theory_ub = theory.upper.value.to_u64().unwrap_or(u64::MAX);

    // Greedy passes seed the incumbent: lexicographic order first, then a
    // few deterministic shuffles.
    let lex: Vec<u32> = (0..subspaces.len() as u32).collect();
    let mut best: Vec<u32> = greedy_indices(&subspaces, &lex, total);
    for seed in 1..=8u64 {
        let picked = greedy_indices(&subspaces, &shuffled(subspaces.len(), seed), total);
        if picked.len() > best.len() {
            best = picked;
        }
    }

    if budget.mode == SearchMode::Greedy {
        let members = best
            .iter()
            .map(|&i| subspaces[i as usize].clone())
            .collect();
        let witness = PartialSpread::new(instance, members)?;
        return Ok(SearchOutcome {
            size: witness.size() as u64,
            // A greedy spread that meets the theoretical bound is maximum.
            proven_optimal: witness.size() as u64 >= theory_ub,
            witness,
            nodes: 0,
        });
    }

    let mut by_point = vec![Vec::new(); total];
    for (i, s) in subspaces.iter().enumerate() {
        for p in s.points().ones() {
            by_point[p].push(i as u32);
        }
    }

    let mut ctx = SearchCtx {
        subspaces: &subspaces,
        by_point,
        members_per_point: bracket_usize(t, q),
        theory_ub,
        budget,
        started: Instant::now(),
        nodes: 0,
        aborted: false,
        done: false,
        best_size: best.len() as u64,
        best_members: best,
    };

    if ctx.best_size < theory_ub {
        // Fix the first member: the span of the first t unit vectors.
        let canonical: Vec<Vec<u8>> = (0..t as usize)
            .map(|i| {
                let mut row = vec![0u8; n as usize];
                row[i] = 1;
                row
            })
            .collect();
        let first = subspaces
            .iter()
            .position(|s| s.basis() == canonical.as_slice())
            .expect("canonical subspace is enumerated") as u32;
        let mut decided = subspaces[first as usize].points().clone();
        let covered = decided.count();
        let mut members = vec![first];
        ctx.dfs(&mut decided, total - covered, &mut members);
    }

    let proven_optimal = !ctx.aborted;
    let members = ctx
        .best_members
        .iter()
        .map(|&i| subspaces[i as usize].clone())
        .collect();
    let witness = PartialSpread::new(instance, members)?;
    assert!(
        witness.size() as u64 <= theory_ub,
        "oracle found {} members, exceeding the theoretical upper bound {theory_ub}",
        witness.size()
    );
    Ok(SearchOutcome {
        size: witness.size() as u64,
        witness,
        proven_optimal,
        nodes: ctx.nodes,
    })
}

/// Hyperplane hole distribution: `a[i]` counts hyperplanes containing
/// exactly i holes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HoleDistribution {
    pub a: BTreeMap<u64, u64>,
    /// Total hole count.
    pub c: u64,
    pub n: u32,
    pub q: u32,
}

/// Counts, for every hyperplane of `F_q^n`, how many holes of the spread it
/// contains.
pub fn hole_distribution(spread: &PartialSpread) -> HoleDistribution {
    let inst = spread.instance();
    let field = make_field(inst.q()).expect("instance q is valid");
    let total = bracket_usize(inst.n(), inst.q());
    let hyperplanes =
        hyperplanes_with_limit(&field, inst.n(), total).expect("same space as the spread");
    let mut a = BTreeMap::new();
    for h in &hyperplanes {
        let holes_in_h = spread.holes().intersection_count(h.points()) as u64;
        *a.entry(holes_in_h).or_insert(0) += 1;
    }
    HoleDistribution {
        a,
        c: spread.hole_count() as u64,
        n: inst.n(),
        q: inst.q(),
    }
}

/// Residuals of the three double-counting identities
/// (`sum a_i = [n]_q`, `sum i a_i = c [n-1]_q`, `sum i(i-1) a_i = c(c-1) [n-2]_q`),
/// each as computed-minus-expected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquationsReport {
    pub residuals: [Int; 3],
}

impl EquationsReport {
    pub fn holds(&self) -> bool {
        self.residuals.iter().all(|r| r == &Int::from(0))
    }
}

/// Checks the three identities exactly; all residuals must vanish.
pub fn verify_standard_equations(dist: &HoleDistribution) -> EquationsReport {
    let (n, q) = (dist.n, dist.q);
    let count: u64 = dist.a.values().sum();
    let weighted: u64 = dist.a.iter().map(|(i, a)| i * a).sum();
    let pairs: u128 = dist
        .a
        .iter()
        .map(|(i, a)| (i * i.saturating_sub(1)) as u128 * *a as u128)
        .sum();
    let c = Int::from(dist.c);
    let residuals = [
        Int::from(count) - Int::from(q_bracket(n, q)),
        Int::from(weighted) - &c * Int::from(q_bracket(n - 1, q)),
        Int::from(pairs)
            - &c * (&c - 1i32)
                * Int::from(if n >= 2 {
                    q_bracket(n - 2, q)
                } else {
                    Natural::from(0u32)
                }),
    ];
    EquationsReport { residuals }
}

/// Report of [`verify_hyperplane_congruences`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceReport {
    /// The member-count decomposition `m_t = l q^t + x` used.
    pub l_used: Natural,
    pub x_used: Natural,
    pub expected_residue: Natural,
    pub modulus: Natural,
    /// `(hyperplane index, hole count)` for each violation.
    pub violations: Vec<(usize, u64)>,
}

impl CongruenceReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Verifies that every hyperplane's hole count lies in the residue class
/// `(m1 + x - 1)/q mod q^{t-1}` predicted by the congruence machinery, with
/// s = t and `m_t = l q^t + x`.
///
/// Uses the instance's l when the spread has at least `l q^t` members;
/// otherwise falls back to the floor decomposition `l' = floor(m_t / q^t)`.
/// Requires at least one member.
pub fn verify_hyperplane_congruences(spread: &PartialSpread) -> Result<CongruenceReport, Error> {
    if spread.members().is_empty() {
        return Err(Error::EmptySpread);
    }
    let inst = spread.instance();
    let (q, n, t) = (inst.q(), inst.n(), inst.t());
    let m_t = Natural::from(spread.size() as u64);
    let qt = q_pow(q, t);
    let l_qt = inst.l_qt();
    let (l_used, x_used) = if m_t >= l_qt {
        (inst.l().clone(), &m_t - &l_qt)
    } else {
        (&m_t / &qt, &m_t % &qt)
    };
    let m1 = Natural::from(spread.hole_count() as u64);
    let expected = hyperplane_congruence(&m1, &x_used, q, t);
    let modulus = q_pow(q, t - 1);

    let field = make_field(q)?;
    let total = bracket_usize(n, q);
    let hyperplanes = hyperplanes_with_limit(&field, n, total)?;
    let modulus_u = modulus.to_u64().unwrap_or(u64::MAX);
    let expected_u = expected.to_u64().unwrap_or(u64::MAX);
    let violations = hyperplanes
        .iter()
        .enumerate()
        .filter_map(|(i, h)| {
            let holes_in_h = spread.holes().intersection_count(h.points()) as u64;
            (holes_in_h % modulus_u != expected_u % modulus_u).then_some((i, holes_in_h))
        })
        .collect();
    Ok(CongruenceReport {
        l_used,
        x_used,
        expected_residue: expected,
        modulus,
        violations,
    })
}

/// Cross-validation of the search oracle against the bound pipeline and the
/// partition lemmas.
#[derive(Debug, Clone)]
pub struct CrossCheckReport {
    pub outcome: SearchOutcome,
    pub bounds: BestBounds,
    /// lower <= size <= upper.
    pub within_bounds: bool,
    /// When the search proved optimality and the bounds are exact: does the
    /// oracle value match?
    pub exact_agreement: Option<bool>,
    /// The witness hole count avoids every excluded family member for
    /// hole-type (t, t, c).
    pub excluded_family_clear: bool,
    pub equations_ok: bool,
    pub congruences_ok: bool,
}

impl CrossCheckReport {
    pub fn passed(&self) -> bool {
        self.within_bounds
            && self.exact_agreement.unwrap_or(true)
            && self.excluded_family_clear
            && self.equations_ok
            && self.congruences_ok
    }

    /// The oracle result as a bound row: an explicit spread is a
    /// constructive lower bound on the maximum size.
    pub fn oracle_bound(&self) -> crate::bounds::BoundResult {
        use crate::bounds::{BoundDirection, BoundMethod, BoundResult, ParamWitness};
        let w = &self.outcome.witness;
        BoundResult {
            value: Natural::from(self.outcome.size),
            direction: BoundDirection::Lower,
            method: BoundMethod::Oracle,
            params: Some(ParamWitness::Witness { id: w.witness_id() }),
            certificate: vec![
                format!(
                    "search found {} pairwise disjoint {}-subspaces in F_{}^{} ({} holes){}",
                    self.outcome.size,
                    w.instance().t(),
                    w.instance().q(),
                    w.instance().n(),
                    w.hole_count(),
                    if self.outcome.proven_optimal {
                        "; tree exhausted, size is maximum"
                    } else {
                        "; budget exhausted, size is a lower bound"
                    }
                ),
                format!("witness {}", w.witness_id()),
            ],
        }
    }
}

/// Runs the oracle and checks its result against the theory: the size lies
/// within the computed bounds, proven-optimal sizes match exact bounds, the
/// witness's hole count avoids the excluded family, and the double-counting
/// identities and hyperplane congruence hold on the witness. A failure here
/// indicates a bug in the bounds or the oracle.
pub fn cross_check(
    q: u32,
    n: u32,
    t: u32,
    budget: &SearchBudget,
) -> Result<CrossCheckReport, Error> {
    let outcome = max_partial_spread(q, n, t, budget)?;
    let bounds = best_bounds_for(outcome.witness.instance());
    let size = Natural::from(outcome.size);
    let within_bounds = bounds.lower.value <= size && size <= bounds.upper.value;
    let exact_agreement =
        (outcome.proven_optimal && bounds.exact).then(|| size == bounds.upper.value);

    let excluded_family_clear = if t >= 2 && n > t {
        let c = Natural::from(outcome.witness.hole_count() as u64);
        excluded_hole_counts(q, t, t)
            .iter()
            .all(|(_, bad)| bad != &c)
    } else {
        true
    };

    let equations_ok = verify_standard_equations(&hole_distribution(&outcome.witness)).holds();
    let congruences_ok = if outcome.witness.members().is_empty() {
        true
    } else {
        verify_hyperplane_congruences(&outcome.witness)?.holds()
    };

    Ok(CrossCheckReport {
        outcome,
        bounds,
        within_bounds,
        exact_agreement,
        excluded_family_clear,
        equations_ok,
        congruences_ok,
    })
}
