//! Small finite fields and subspace enumeration for the search oracle.
//!
//! Fields `F_q` for q in {2,3,4,5,7,8,9} are fully table-driven: prime
//! fields use mod-p arithmetic, the extensions F_4, F_8, F_9 are built from
//! the fixed irreducible (Conway) polynomials `x^2+x+1`, `x^3+x+1`,
//! `x^2+2x+2`. Construction verifies the field axioms exhaustively (q <= 9
//! keeps that at a few hundred triples).
//!
//! Projective points of `F_q^n` are indexed 0..`[n]_q` via the canonical
//! representative whose first nonzero coordinate is 1, in lexicographic
//! order. Subspaces are identified by their unique reduced-row-echelon
//! basis and carry their point set as a bitmask for O(words) disjointness
//! tests.

use crate::error::Error;

/// Largest projective point count enumerated by default. Desk-scale cap;
/// callers may raise it explicitly.
pub const DEFAULT_POINT_LIMIT: usize = 127;

/// A fully tabulated finite field of order q <= 9.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldSpec {
    q: u32,
    p: u32,
    e: u32,
    /// Coefficients (constant first) of the reduction polynomial over F_p;
    /// empty for prime fields.
    reduction: Vec<u8>,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

/// Builds `F_q`; rejects q outside {2,3,4,5,7,8,9}.
pub fn make_field(q: u32) -> Result<FieldSpec, Error> {
    let (p, e, reduction): (u32, u32, Vec<u8>) = match q {
        2 | 3 | 5 | 7 => (q, 1, vec![]),
        4 => (2, 2, vec![1, 1, 1]),    // x^2 + x + 1
        8 => (2, 3, vec![1, 1, 0, 1]), // x^3 + x + 1
        9 => (3, 2, vec![2, 2, 1]),    // x^2 + 2x + 2
        _ => return Err(Error::InvalidPrimePower(q)),
    };
    let qs = q as usize;

    // Elements are base-p digit vectors packed as integers 0..q.
    let digits = |v: u32| -> Vec<u32> {
        let mut v = v;
        (0..e)
            .map(|_| {
                let d = v % p;
                v /= p;
                d
            })
            .collect()
    };
    let pack = |ds: &[u32]| -> u8 {
        ds.iter()
            .rev()
            .fold(0u32, |acc, &d| acc * p + d)
            .try_into()
            .unwrap()
    };

    let mut add = vec![0u8; qs * qs];
    let mut mul = vec![0u8; qs * qs];
    for a in 0..q {
        for b in 0..q {
            let (da, db) = (digits(a), digits(b));
            let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
            add[(a as usize) * qs + b as usize] = pack(&sum);

            // Polynomial product reduced by the reduction polynomial.
            let mut prod = vec![0u32; (2 * e - 1) as usize];
            for (i, &x) in da.iter().enumerate() {
                for (j, &y) in db.iter().enumerate() {
                    prod[i + j] = (prod[i + j] + x * y) % p;
                }
            }
            for i in (e as usize..prod.len()).rev() {
                let coeff = prod[i];
                if coeff == 0 {
                    continue;
                }
                prod[i] = 0;
                for (j, &rc) in reduction.iter().enumerate().take(e as usize) {
                    // x^e = -(reduction minus leading term)
                    let idx = i - e as usize + j;
                    prod[idx] = (prod[idx] + coeff * (p - rc as u32 % p) % p) % p;
                }
            }
            mul[(a as usize) * qs + b as usize] = pack(&prod[..e as usize]);
        }
    }

    let mut neg = vec![0u8; qs];
    let mut inv = vec![0u8; qs];
    for a in 0..qs {
        neg[a] = (0..qs as u8)
            .find(|&b| add[a * qs + b as usize] == 0)
            .unwrap();
        if a != 0 {
            inv[a] = (1..qs as u8)
                .find(|&b| mul[a * qs + b as usize] == 1)
                .unwrap();
        }
    }

    let field = FieldSpec {
        q,
        p,
        e,
        reduction,
        add,
        mul,
        neg,
        inv,
    };
    field.verify_axioms();
    Ok(field)
}

impl FieldSpec {
    pub fn q(&self) -> u32 {
        self.q
    }
    pub fn characteristic(&self) -> u32 {
        self.p
    }
    pub fn extension_degree(&self) -> u32 {
        self.e
    }
    /// Reduction polynomial coefficients, constant term first (empty for
    /// prime fields).
    pub fn reduction_polynomial(&self) -> &[u8] {
        &self.reduction
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.q as usize + b as usize]
    }
    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.q as usize + b as usize]
    }
    #[inline]
    pub fn neg(&self, a: u8) -> u8 {
        self.neg[a as usize]
    }
    #[inline]
    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }
    /// Multiplicative inverse; panics on zero.
    #[inline]
    pub fn inv(&self, a: u8) -> u8 {
        assert!(a != 0, "zero has no inverse");
        self.inv[a as usize]
    }

    /// The residue class of x for extensions (the element with digit vector
    /// (0, 1, ...)); equal to p as a packed element.
    pub fn generator(&self) -> u8 {
        debug_assert!(self.e > 1);
        self.p as u8
    }

    /// Full axiom check: associativity, commutativity, distributivity,
    /// identities, and inverses over all of F_q.
    fn verify_axioms(&self) {
        let q = self.q as u8;
        for a in 0..q {
            assert_eq!(self.add(a, 0), a);
            assert_eq!(self.mul(a, 1), a);
            assert_eq!(self.mul(a, 0), 0);
            assert_eq!(self.add(a, self.neg(a)), 0);
            if a != 0 {
                assert_eq!(self.mul(a, self.inv(a)), 1);
            }
            for b in 0..q {
                assert_eq!(self.add(a, b), self.add(b, a));
                assert_eq!(self.mul(a, b), self.mul(b, a));
                for c in 0..q {
                    assert_eq!(self.add(self.add(a, b), c), self.add(a, self.add(b, c)));
                    assert_eq!(self.mul(self.mul(a, b), c), self.mul(a, self.mul(b, c)));
                    assert_eq!(
                        self.mul(a, self.add(b, c)),
                        self.add(self.mul(a, b), self.mul(a, c))
                    );
                }
            }
        }
    }
}

/// `[a]_q` as a machine integer; callers stay within the point limit.
pub fn bracket_usize(a: u32, q: u32) -> usize {
    let mut acc = 0usize;
    let mut pw = 1usize;
    for _ in 0..a {
        acc += pw;
        pw *= q as usize;
    }
    acc
}

/// Scales a nonzero vector so its first nonzero coordinate is 1.
pub fn canonicalize(field: &FieldSpec, v: &[u8]) -> Result<Vec<u8>, Error> {
    let first = v.iter().position(|&c| c != 0).ok_or(Error::ZeroVector)?;
    let scale = field.inv(v[first]);
    Ok(v.iter().map(|&c| field.mul(c, scale)).collect())
}

/// Index of the projective point spanned by a nonzero vector.
///
/// Canonical representatives are ordered lexicographically (coordinates
/// compared left to right), which groups them by the position of the first
/// nonzero coordinate: representatives with first nonzero at position i
/// occupy the contiguous block starting at `[n-1-i]_q`.
pub fn point_index(field: &FieldSpec, v: &[u8]) -> Result<usize, Error> {
    let rep = canonicalize(field, v)?;
    let n = rep.len();
    let first = rep.iter().position(|&c| c != 0).unwrap();
    let block_start = bracket_usize((n - 1 - first) as u32, field.q());
    let mut suffix = 0usize;
    for &c in &rep[first + 1..] {
        suffix = suffix * field.q() as usize + c as usize;
    }
    Ok(block_start + suffix)
}

/// Inverse of [`point_index`]: the canonical representative of a point.
pub fn point_rep(field: &FieldSpec, n: u32, index: usize) -> Vec<u8> {
    let q = field.q();
    debug_assert!(index < bracket_usize(n, q));
    // Find the block: first nonzero at position i iff
    // [n-1-i]_q <= index < [n-i]_q.
    let mut i = n as usize - 1;
    while bracket_usize((n as usize - i) as u32, q) <= index {
        i -= 1;
    }
    let mut rep = vec![0u8; n as usize];
    rep[i] = 1;
    let mut suffix = index - bracket_usize(n - 1 - i as u32, q);
    for j in (i + 1..n as usize).rev() {
        rep[j] = (suffix % q as usize) as u8;
        suffix /= q as usize;
    }
    rep
}

/// Fixed-width bitmask over projective point indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSet {
    words: Vec<u64>,
    len: usize,
}

impl PointSet {
    pub fn empty(len: usize) -> Self {
        PointSet {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    /// Universe size (number of indexable points), not the popcount.
    pub fn universe(&self) -> usize {
        self.len
    }

    pub fn set(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn clear(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / 64] &= !(1 << (i % 64));
    }

    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_disjoint(&self, other: &PointSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    /// Popcount of the intersection.
    pub fn intersection_count(&self, other: &PointSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn union_with(&mut self, other: &PointSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn difference_with(&mut self, other: &PointSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    /// Complement within the universe.
    pub fn complement(&self) -> PointSet {
        let mut words: Vec<u64> = self.words.iter().map(|w| !w).collect();
        let tail = self.len % 64;
        if tail != 0 {
            if let Some(last) = words.last_mut() {
                *last &= (1u64 << tail) - 1;
            }
        }
        PointSet {
            words,
            len: self.len,
        }
    }

    /// Lowest set index, if any.
    pub fn first(&self) -> Option<usize> {
        for (wi, w) in self.words.iter().enumerate() {
            if *w != 0 {
                return Some(wi * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(|&i| self.contains(i))
    }
}

/// A d-dimensional subspace of `F_q^n` in canonical form: the unique
/// reduced-row-echelon basis plus the bitmask of covered projective points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    dim: u32,
    basis: Vec<Vec<u8>>,
    points: PointSet,
}

impl Subspace {
    pub fn dim(&self) -> u32 {
        self.dim
    }
    pub fn basis(&self) -> &[Vec<u8>] {
        &self.basis
    }
    pub fn points(&self) -> &PointSet {
        &self.points
    }

    /// Builds a subspace from rows already in reduced row echelon form.
    fn from_rref(field: &FieldSpec, n: u32, basis: Vec<Vec<u8>>) -> Self {
        let dim = basis.len() as u32;
        let points = span_points(field, n, &basis);
        debug_assert_eq!(points.count(), bracket_usize(dim, field.q()));
        Subspace { dim, basis, points }
    }

    /// Builds a subspace from an arbitrary spanning set, reducing it to the
    /// canonical RREF basis. Rejects an empty span.
    pub fn from_basis(field: &FieldSpec, n: u32, rows: &[Vec<u8>]) -> Result<Self, Error> {
        let basis = rref(field, n, rows);
        if basis.is_empty() {
            return Err(Error::InvalidSpread("subspace with empty span".into()));
        }
        Ok(Self::from_rref(field, n, basis))
    }
}

/// All nonzero linear combinations of the basis rows, as a point mask.
fn span_points(field: &FieldSpec, n: u32, basis: &[Vec<u8>]) -> PointSet {
    let q = field.q() as usize;
    let d = basis.len();
    let mut points = PointSet::empty(bracket_usize(n, field.q()));
    let mut coeffs = vec![0u8; d];
    loop {
        // Advance the coefficient odometer.
        let mut pos = 0;
        while pos < d {
            coeffs[pos] += 1;
            if (coeffs[pos] as usize) < q {
                break;
            }
            coeffs[pos] = 0;
            pos += 1;
        }
        if pos == d {
            break;
        }
        let mut v = vec![0u8; n as usize];
        for (c, row) in coeffs.iter().zip(basis) {
            if *c == 0 {
                continue;
            }
            for (vi, &ri) in v.iter_mut().zip(row) {
                *vi = field.add(*vi, field.mul(*c, ri));
            }
        }
        points.set(point_index(field, &v).expect("nonzero combination"));
    }
    points
}

/// Gaussian elimination to the unique reduced row echelon basis (zero rows
/// dropped).
pub fn rref(field: &FieldSpec, n: u32, rows: &[Vec<u8>]) -> Vec<Vec<u8>> {
    let mut m: Vec<Vec<u8>> = rows.to_vec();
    let mut pivot_row = 0usize;
    for col in 0..n as usize {
        let Some(src) = (pivot_row..m.len()).find(|&ri| m[ri][col] != 0) else {
            continue;
        };
        m.swap(pivot_row, src);
        let scale = field.inv(m[pivot_row][col]);
        for entry in m[pivot_row].iter_mut() {
            *entry = field.mul(*entry, scale);
        }
        let pivot = m[pivot_row].clone();
        for (ri, row) in m.iter_mut().enumerate() {
            if ri != pivot_row && row[col] != 0 {
                let factor = row[col];
                for (entry, &p) in row.iter_mut().zip(&pivot) {
                    let delta = field.mul(factor, p);
                    *entry = field.sub(*entry, delta);
                }
            }
        }
        pivot_row += 1;
        if pivot_row == m.len() {
            break;
        }
    }
    m.truncate(pivot_row);
    m
}

/// Enumerates all d-dimensional subspaces of `F_q^n` with the default point
/// limit. Deterministic order: pivot-column sets lexicographically, then
/// free entries in odometer order.
pub fn enumerate_subspaces(field: &FieldSpec, n: u32, d: u32) -> Result<Vec<Subspace>, Error> {
    enumerate_subspaces_with_limit(field, n, d, DEFAULT_POINT_LIMIT)
}

/// [`enumerate_subspaces`] with an explicit point limit.
pub fn enumerate_subspaces_with_limit(
    field: &FieldSpec,
    n: u32,
    d: u32,
    limit: usize,
) -> Result<Vec<Subspace>, Error> {
    if d == 0 || d > n {
        return Err(Error::SubspaceDimension { d, n });
    }
    let points = bracket_usize(n, field.q());
    if points > limit {
        return Err(Error::Capacity {
            points: points as u64,
            limit: limit as u64,
        });
    }
    let q = field.q() as usize;
    let mut out = Vec::new();
    let mut pivots: Vec<usize> = (0..d as usize).collect();
    loop {
        // Free cells of the RREF shape for this pivot set, row-major:
        // (row i, col j) with j > pivots[i] and j not a pivot column.
        let is_pivot = {
            let mut mask = vec![false; n as usize];
            for &p in &pivots {
                mask[p] = true;
            }
            mask
        };
        let free: Vec<(usize, usize)> = (0..d as usize)
            .flat_map(|i| {
                let is_pivot = &is_pivot;
                let pivots = &pivots;
                (0..n as usize)
                    .filter_map(move |j| (j > pivots[i] && !is_pivot[j]).then_some((i, j)))
            })
            .collect();

        let mut values = vec![0u8; free.len()];
        loop {
            let mut basis = vec![vec![0u8; n as usize]; d as usize];
            for (i, &p) in pivots.iter().enumerate() {
                basis[i][p] = 1;
            }
            for (&(i, j), &v) in free.iter().zip(&values) {
                basis[i][j] = v;
            }
            out.push(Subspace::from_rref(field, n, basis));

            // Advance the free-entry odometer.
            let mut pos = 0;
            while pos < values.len() {
                values[pos] += 1;
                if (values[pos] as usize) < q {
                    break;
                }
                values[pos] = 0;
                pos += 1;
            }
            if pos == values.len() {
                break;
            }
        }

        // Next pivot combination in lexicographic order.
        let mut i = d as usize;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            if pivots[i] < n as usize - (d as usize - i) {
                pivots[i] += 1;
                for j in i + 1..d as usize {
                    pivots[j] = pivots[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// The `[n]_q` hyperplanes of `F_q^n`, as (n-1)-dimensional subspaces.
pub fn hyperplanes(field: &FieldSpec, n: u32) -> Result<Vec<Subspace>, Error> {
    hyperplanes_with_limit(field, n, DEFAULT_POINT_LIMIT)
}

/// [`hyperplanes`] with an explicit point limit.
pub fn hyperplanes_with_limit(
    field: &FieldSpec,
    n: u32,
    limit: usize,
) -> Result<Vec<Subspace>, Error> {
    enumerate_subspaces_with_limit(field, n, n - 1, limit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::gaussian_binomial;
    use num_traits::ToPrimitive;
    use std::collections::HashSet;

    #[test]
    fn prime_field_arithmetic() {
        let f2 = make_field(2).unwrap();
        assert_eq!(f2.add(1, 1), 0);
        let f5 = make_field(5).unwrap();
        assert_eq!(f5.add(3, 4), 2);
        assert_eq!(f5.mul(3, 4), 2);
        assert_eq!(f5.inv(3), 2);
    }

    #[test]
    fn extension_field_generators() {
        // F_4: x^2 = x + 1.
        let f4 = make_field(4).unwrap();
        let x = f4.generator();
        assert_eq!(f4.mul(x, x), f4.add(x, 1));

        // F_8: x^3 = x + 1.
        let f8 = make_field(8).unwrap();
        let x = f8.generator();
        assert_eq!(f8.mul(f8.mul(x, x), x), f8.add(x, 1));

        // F_9: x^2 = x + 1 (reduction x^2 + 2x + 2 over F_3).
        let f9 = make_field(9).unwrap();
        let x = f9.generator();
        assert_eq!(f9.mul(x, x), f9.add(x, 1));
    }

    #[test]
    fn make_field_rejects_non_prime_powers() {
        assert_eq!(make_field(6).unwrap_err(), Error::InvalidPrimePower(6));
        assert_eq!(make_field(10).unwrap_err(), Error::InvalidPrimePower(10));
    }

    #[test]
    fn point_index_lex_example() {
        // q=2, n=2: canonical reps (0,1), (1,0), (1,1) in lex order.
        let f = make_field(2).unwrap();
        assert_eq!(point_index(&f, &[0, 1]).unwrap(), 0);
        assert_eq!(point_index(&f, &[1, 0]).unwrap(), 1);
        assert_eq!(point_index(&f, &[1, 1]).unwrap(), 2);
    }

    #[test]
    fn point_index_rejects_zero() {
        let f = make_field(3).unwrap();
        assert_eq!(point_index(&f, &[0, 0, 0]).unwrap_err(), Error::ZeroVector);
    }

    #[test]
    fn point_index_scaling_invariance() {
        let f = make_field(9).unwrap();
        let v = [3u8, 0, 7, 1];
        let base = point_index(&f, &v).unwrap();
        for alpha in 1..9u8 {
            let scaled: Vec<u8> = v.iter().map(|&c| f.mul(c, alpha)).collect();
            assert_eq!(point_index(&f, &scaled).unwrap(), base);
        }
    }

    #[test]
    fn point_index_round_trip_bijection() {
        for q in [2u32, 3, 4, 5, 7, 8, 9] {
            let f = make_field(q).unwrap();
            let n = if q <= 3 { 4 } else { 2 };
            let total = bracket_usize(n, q);
            if q == 3 {
                assert_eq!(bracket_usize(2, 3), 4); // q=3, n=2: 4 points
            }
            let mut seen = HashSet::new();
            for idx in 0..total {
                let rep = point_rep(&f, n, idx);
                assert_eq!(point_index(&f, &rep).unwrap(), idx);
                assert!(seen.insert(rep));
            }
        }
    }

    #[test]
    fn enumerate_counts_match_gaussian_binomial() {
        for (q, n, d) in [
            (2u32, 4u32, 2u32),
            (2, 5, 2),
            (2, 6, 3),
            (3, 4, 2),
            (4, 3, 2),
            (5, 3, 1),
        ] {
            let f = make_field(q).unwrap();
            let subs = enumerate_subspaces(&f, n, d).unwrap();
            let expected = gaussian_binomial(n, d, q).to_usize().unwrap();
            assert_eq!(subs.len(), expected, "q={q} n={n} d={d}");
            // All distinct.
            let keys: HashSet<Vec<Vec<u8>>> = subs.iter().map(|s| s.basis().to_vec()).collect();
            assert_eq!(keys.len(), expected);
        }
        // (F_3, 4, 2) -> 130 = 80*26/16.
        let f3 = make_field(3).unwrap();
        assert_eq!(enumerate_subspaces(&f3, 4, 2).unwrap().len(), 130);
        // whole space
        let f2 = make_field(2).unwrap();
        assert_eq!(enumerate_subspaces(&f2, 4, 4).unwrap().len(), 1);
    }

    /// Independent count of 2-subspaces of F_2^4 by brute force over point
    /// pairs: 35 distinct spans.
    #[test]
    fn brute_force_span_count_f2_4() {
        let f = make_field(2).unwrap();
        let total = bracket_usize(4, 2);
        let mut spans = HashSet::new();
        for a in 0..total {
            for b in 0..total {
                if a == b {
                    continue;
                }
                let sub = Subspace::from_basis(&f, 4, &[point_rep(&f, 4, a), point_rep(&f, 4, b)])
                    .unwrap();
                if sub.dim() == 2 {
                    spans.insert(sub.basis().to_vec());
                }
            }
        }
        assert_eq!(spans.len(), 35);
    }

    #[test]
    fn subspace_point_counts_and_span_closure() {
        let f = make_field(3).unwrap();
        for sub in enumerate_subspaces(&f, 4, 2).unwrap() {
            assert_eq!(sub.points().count(), bracket_usize(2, 3));
            // Closure: the span of any two distinct points stays inside.
            let pts: Vec<usize> = sub.points().ones().collect();
            for &a in &pts {
                for &b in &pts {
                    if a == b {
                        continue;
                    }
                    let span =
                        Subspace::from_basis(&f, 4, &[point_rep(&f, 4, a), point_rep(&f, 4, b)])
                            .unwrap();
                    for p in span.points().ones() {
                        assert!(sub.points().contains(p));
                    }
                }
            }
        }
    }

    #[test]
    fn hyperplane_counts() {
        let f2 = make_field(2).unwrap();
        assert_eq!(hyperplanes(&f2, 5).unwrap().len(), 31);
        assert_eq!(hyperplanes(&f2, 2).unwrap().len(), 3);
        let f3 = make_field(3).unwrap();
        assert_eq!(hyperplanes(&f3, 3).unwrap().len(), 13);
    }

    #[test]
    fn capacity_error_beyond_limit() {
        let f3 = make_field(3).unwrap();
        // [6]_3 = 364 > 127
        assert!(matches!(
            enumerate_subspaces(&f3, 6, 2),
            Err(Error::Capacity {
                points: 364,
                limit: 127
            })
        ));
        // but fine with an explicit higher limit
        assert!(enumerate_subspaces_with_limit(&f3, 6, 1, 512).is_ok());
    }

    #[test]
    fn rref_produces_canonical_basis() {
        let f = make_field(2).unwrap();
        // Two spanning sets of the same plane reduce to the same basis.
        let a = Subspace::from_basis(&f, 4, &[vec![1, 1, 0, 0], vec![0, 0, 1, 1]]).unwrap();
        let b = Subspace::from_basis(&f, 4, &[vec![1, 1, 1, 1], vec![0, 0, 1, 1]]).unwrap();
        assert_eq!(a, b);
        // Dependent rows collapse.
        let c = Subspace::from_basis(&f, 4, &[vec![1, 1, 0, 0], vec![1, 1, 0, 0]]).unwrap();
        assert_eq!(c.dim(), 1);
    }

    #[test]
    fn point_set_operations() {
        let mut a = PointSet::empty(130);
        let mut b = PointSet::empty(130);
        a.set(0);
        a.set(64);
        a.set(129);
        b.set(64);
        assert_eq!(a.count(), 3);
        assert!(!a.is_disjoint(&b));
        assert_eq!(a.intersection_count(&b), 1);
        assert_eq!(a.first(), Some(0));
        assert_eq!(a.complement().count(), 127);
        b.difference_with(&a);
        assert_eq!(b.count(), 0);
        assert!(a.is_disjoint(&b));
    }
}
