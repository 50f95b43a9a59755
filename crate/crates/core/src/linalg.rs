//! Exact sparse linear algebra over `Q(v)`.
//!
//! Vectors are finitely supported maps from an ordered key type to
//! [`RatScalar`]. A [`SpanBasis`] keeps its vectors in reduced echelon form
//! with the pivot of each vector at its smallest key.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::laurent::RatScalar;

/// A sparse vector; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SparseVec<K: Ord> {
    entries: BTreeMap<K, RatScalar>,
}

impl<K: Ord> Default for SparseVec<K> {
    fn default() -> Self {
        Self {
            entries: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> SparseVec<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn unit(k: K) -> Self {
        let mut v = Self::new();
        v.entries.insert(k, RatScalar::one());
        v
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, k: &K) -> Option<&RatScalar> {
        self.entries.get(k)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &RatScalar)> {
        self.entries.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.entries.keys()
    }

    /// Smallest key with nonzero coefficient.
    pub fn leading(&self) -> Option<(&K, &RatScalar)> {
        self.entries.iter().next()
    }

    pub fn add_term(&mut self, k: K, c: &RatScalar) {
        if c.is_zero() {
            return;
        }
        match self.entries.entry(k) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    /// `self += c * other`.
    pub fn axpy(&mut self, c: &RatScalar, other: &SparseVec<K>) {
        if c.is_zero() {
            return;
        }
        for (k, x) in &other.entries {
            self.add_term(k.clone(), &(c * x));
        }
    }

    pub fn scale(&self, c: &RatScalar) -> SparseVec<K> {
        if c.is_zero() {
            return Self::new();
        }
        Self {
            entries: self
                .entries
                .iter()
                .map(|(k, x)| (k.clone(), x * c))
                .collect(),
        }
    }

    pub fn add(&self, other: &SparseVec<K>) -> SparseVec<K> {
        let mut out = self.clone();
        out.axpy(&RatScalar::one(), other);
        out
    }

    pub fn sub(&self, other: &SparseVec<K>) -> SparseVec<K> {
        let mut out = self.clone();
        out.axpy(&RatScalar::from_int(-1), other);
        out
    }

    /// Keeps only the entries whose key satisfies `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&K) -> bool) -> SparseVec<K> {
        Self {
            entries: self
                .entries
                .iter()
                .filter(|(k, _)| keep(k))
                .map(|(k, x)| (k.clone(), x.clone()))
                .collect(),
        }
    }
}

impl<K: Ord + Clone> FromIterator<(K, RatScalar)> for SparseVec<K> {
    fn from_iter<I: IntoIterator<Item = (K, RatScalar)>>(iter: I) -> Self {
        let mut v = Self::new();
        for (k, c) in iter {
            v.add_term(k, &c);
        }
        v
    }
}

/// A reduced echelon basis of a subspace.
#[derive(Clone, Debug)]
pub struct SpanBasis<K: Ord> {
    vectors: Vec<SparseVec<K>>,
    pivots: BTreeMap<K, usize>,
}

impl<K: Ord> Default for SpanBasis<K> {
    fn default() -> Self {
        Self {
            vectors: Vec::new(),
            pivots: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> SpanBasis<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    /// Basis vectors, sorted by pivot.
    pub fn vectors(&self) -> &[SparseVec<K>] {
        &self.vectors
    }

    pub fn pivots(&self) -> impl Iterator<Item = &K> {
        self.pivots.keys()
    }

    /// Eliminates every pivot coordinate from `x`.
    pub fn reduce(&self, x: &SparseVec<K>) -> SparseVec<K> {
        let mut r = x.clone();
        for (k, &pos) in &self.pivots {
            if let Some(c) = r.get(k).cloned() {
                r.axpy(&-c, &self.vectors[pos]);
            }
        }
        r
    }

    pub fn contains(&self, x: &SparseVec<K>) -> bool {
        self.reduce(x).is_zero()
    }

    /// Adds `x` to the span. Returns true when the dimension grew.
    pub fn insert(&mut self, x: &SparseVec<K>) -> bool {
        let r = self.reduce(x);
        let Some((lead, c)) = r.leading() else {
            return false;
        };
        let lead = lead.clone();
        let r = r.scale(&c.inv());
        for v in self.vectors.iter_mut() {
            if let Some(c) = v.get(&lead).cloned() {
                v.axpy(&-c, &r);
            }
        }
        let pos = self
            .vectors
            .partition_point(|v| v.leading().unwrap().0 < &lead);
        self.vectors.insert(pos, r);
        self.pivots.clear();
        for (i, v) in self.vectors.iter().enumerate() {
            self.pivots.insert(v.leading().unwrap().0.clone(), i);
        }
        true
    }

    /// Coordinates of `x` against [`Self::vectors`], or `None` if `x` is outside the span.
    pub fn coords(&self, x: &SparseVec<K>) -> Option<Vec<RatScalar>> {
        let coords: Vec<RatScalar> = self
            .vectors
            .iter()
            .map(|v| x.get(v.leading().unwrap().0).cloned().unwrap_or_default())
            .collect();
        let mut r = x.clone();
        for (c, v) in coords.iter().zip(&self.vectors) {
            r.axpy(&-c, v);
        }
        r.is_zero().then_some(coords)
    }

    /// True when both bases span the same subspace.
    pub fn same_span(&self, other: &SpanBasis<K>) -> bool {
        self.dim() == other.dim() && other.vectors.iter().all(|v| self.contains(v))
    }
}

/// Reduced echelon basis of the span of `vs`.
pub fn echelonize<'a, K: Ord + Clone + 'a>(
    vs: impl IntoIterator<Item = &'a SparseVec<K>>,
) -> SpanBasis<K> {
    let mut b = SpanBasis::new();
    for v in vs {
        b.insert(v);
    }
    b
}

pub fn coords_in_span<K: Ord + Clone>(
    x: &SparseVec<K>,
    b: &SpanBasis<K>,
) -> Option<Vec<RatScalar>> {
    b.coords(x)
}

/// Echelon form of a generating list that remembers how each row was built,
/// so targets can be written in the original generators.
#[derive(Clone, Debug)]
pub struct Solver<K: Ord> {
    m: usize,
    rows: Vec<(SparseVec<K>, SparseVec<usize>)>,
    pivots: BTreeMap<K, usize>,
}

impl<K: Ord + Clone> Solver<K> {
    pub fn new(gens: &[SparseVec<K>]) -> Self {
        let mut rows: Vec<(SparseVec<K>, SparseVec<usize>)> = Vec::new();
        let mut pivots: BTreeMap<K, usize> = BTreeMap::new();
        for (i, g) in gens.iter().enumerate() {
            let (v, hist) = Self::reduce_with(&rows, &pivots, g.clone(), SparseVec::unit(i));
            if let Some((lead, c)) = v.leading() {
                let lead = lead.clone();
                let inv = c.inv();
                rows.push((v.scale(&inv), hist.scale(&inv)));
                pivots.insert(lead, rows.len() - 1);
            }
        }
        Self {
            m: gens.len(),
            rows,
            pivots,
        }
    }

    /// Rank of the generating list.
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    // Pivots are visited in increasing order and every row is supported at
    // or above its pivot, so each pivot column is cleared exactly once.
    fn reduce_with(
        rows: &[(SparseVec<K>, SparseVec<usize>)],
        pivots: &BTreeMap<K, usize>,
        mut v: SparseVec<K>,
        mut hist: SparseVec<usize>,
    ) -> (SparseVec<K>, SparseVec<usize>) {
        for (k, &p) in pivots {
            if let Some(c) = v.get(k).cloned() {
                let (rv, rh) = &rows[p];
                v.axpy(&-c.clone(), rv);
                hist.axpy(&-c, rh);
            }
        }
        (v, hist)
    }

    /// Coefficients `c` with `sum c_i gens_i = target`, or `None` outside the span.
    pub fn solve(&self, target: &SparseVec<K>) -> Option<Vec<RatScalar>> {
        let (r, h) = Self::reduce_with(&self.rows, &self.pivots, target.clone(), SparseVec::new());
        if !r.is_zero() {
            return None;
        }
        Some(
            (0..self.m)
                .map(|i| h.get(&i).map(|c| -c).unwrap_or_default())
                .collect(),
        )
    }
}

/// A basis of `{c : sum c_i images_i = 0}`, as coefficient vectors indexed by position.
pub fn kernel<K: Ord + Clone>(images: &[SparseVec<K>]) -> Vec<SparseVec<usize>> {
    let mut rows: Vec<(SparseVec<K>, SparseVec<usize>)> = Vec::new();
    let mut pivots: BTreeMap<K, usize> = BTreeMap::new();
    let mut out = Vec::new();
    for (i, g) in images.iter().enumerate() {
        let (v, hist) = Solver::reduce_with(&rows, &pivots, g.clone(), SparseVec::unit(i));
        match v.leading() {
            Some((lead, c)) => {
                let lead = lead.clone();
                let inv = c.inv();
                rows.push((v.scale(&inv), hist.scale(&inv)));
                pivots.insert(lead, rows.len() - 1);
            }
            None => out.push(hist),
        }
    }
    out
}

/// Expresses `target` as a combination of `gens`.
///
/// Returns `None` when `target` is outside their span. When `gens` is
/// dependent the returned combination is one of several.
pub fn solve_combination<K: Ord + Clone>(
    gens: &[SparseVec<K>],
    target: &SparseVec<K>,
) -> Option<Vec<RatScalar>> {
    Solver::new(gens).solve(target)
}

/// Outcome of a direct-sum check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DirectSumCertificate {
    pub part_dims: Vec<usize>,
    pub whole_dim: usize,
    pub concat_dim: usize,
    pub all_contained: bool,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

/// Checks that `whole` is the internal direct sum of `parts`.
pub fn certify_direct_sum<K: Ord + Clone + std::fmt::Debug>(
    parts: &[SpanBasis<K>],
    whole: &SpanBasis<K>,
) -> DirectSumCertificate {
    let part_dims: Vec<usize> = parts.iter().map(|p| p.dim()).collect();
    let total: usize = part_dims.iter().sum();
    let concat = echelonize(parts.iter().flat_map(|p| p.vectors()));
    let mut witness = None;
    let mut all_contained = true;
    'outer: for (i, p) in parts.iter().enumerate() {
        for v in p.vectors() {
            if !whole.contains(v) {
                all_contained = false;
                witness = Some(format!(
                    "part {i} vector with pivot {:?} is not in the whole space",
                    v.leading().map(|l| l.0)
                ));
                break 'outer;
            }
        }
    }
    if witness.is_none() && concat.dim() != total {
        witness = Some(format!(
            "parts have total dimension {total} but span only {}",
            concat.dim()
        ));
    }
    if witness.is_none() && total != whole.dim() {
        witness = Some(format!(
            "parts have total dimension {total}, whole space has {}",
            whole.dim()
        ));
    }
    DirectSumCertificate {
        part_dims,
        whole_dim: whole.dim(),
        concat_dim: concat.dim(),
        all_contained,
        pass: witness.is_none(),
        witness,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vec_of(entries: &[(u32, i64)]) -> SparseVec<u32> {
        entries
            .iter()
            .map(|&(k, c)| (k, RatScalar::from_int(c)))
            .collect()
    }

    #[test]
    fn kernel_of_dependent_list() {
        let a = vec_of(&[(0, 1), (1, 2)]);
        let b = vec_of(&[(1, 1)]);
        let c = vec_of(&[(0, 1)]);
        let k = kernel(&[a.clone(), b.clone(), c.clone()]);
        assert_eq!(k.len(), 1);
        let mut sum = SparseVec::new();
        for (i, v) in [a, b, c].iter().enumerate() {
            sum.axpy(&k[0].get(&i).cloned().unwrap_or_default(), v);
        }
        assert!(sum.is_zero());
        assert!(kernel(&[vec_of(&[(0, 1)])]).is_empty());
    }

    #[test]
    fn echelon_basics() {
        let v = vec_of(&[(1, 2), (3, 1)]);
        let b = echelonize([&v, &v.scale(&RatScalar::from_int(2))]);
        assert_eq!(b.dim(), 1);
        assert!(b.vectors()[0].get(&1).unwrap().is_one());
        let empty: Vec<SparseVec<u32>> = vec![];
        assert_eq!(echelonize(&empty).dim(), 0);
    }

    #[test]
    fn reduced_form() {
        let b = echelonize([&vec_of(&[(0, 1), (1, 1)]), &vec_of(&[(1, 1), (2, 1)])]);
        assert_eq!(b.dim(), 2);
        // pivot 1 column cleared from the first vector
        assert!(b.vectors()[0].get(&1).is_none());
        assert_eq!(b.vectors()[0].get(&2), Some(&RatScalar::from_int(-1)));
    }

    #[test]
    fn coordinates() {
        let b = echelonize([&vec_of(&[(0, 1), (1, 1)]), &vec_of(&[(2, 1)])]);
        assert_eq!(
            b.coords(&SparseVec::new()).unwrap(),
            vec![RatScalar::zero(), RatScalar::zero()]
        );
        assert_eq!(
            b.coords(&b.vectors()[0].clone()).unwrap(),
            vec![RatScalar::one(), RatScalar::zero()]
        );
        assert!(b.coords(&vec_of(&[(1, 1)])).is_none());
    }

    #[test]
    fn solve_in_generators() {
        let g = vec![
            vec_of(&[(0, 1), (1, 1)]),
            vec_of(&[(1, 1)]),
            vec_of(&[(1, 2), (0, 2)]),
        ];
        let t = vec_of(&[(0, 3), (1, 5)]);
        let c = solve_combination(&g, &t).unwrap();
        let mut back = SparseVec::new();
        for (ci, gi) in c.iter().zip(&g) {
            back.axpy(ci, gi);
        }
        assert_eq!(back, t);
        assert!(solve_combination(&g, &vec_of(&[(4, 1)])).is_none());
    }

    #[test]
    fn direct_sums() {
        let a = echelonize([&vec_of(&[(0, 1)])]);
        let b = echelonize([&vec_of(&[(1, 1)])]);
        let whole = echelonize([&vec_of(&[(0, 1)]), &vec_of(&[(1, 1)])]);
        assert!(certify_direct_sum(&[a.clone(), b], &whole).pass);
        assert!(certify_direct_sum(std::slice::from_ref(&whole), &whole).pass);
        let c = certify_direct_sum(&[a.clone(), a], &whole);
        assert!(!c.pass);
        assert!(c.witness.is_some());
    }
}
