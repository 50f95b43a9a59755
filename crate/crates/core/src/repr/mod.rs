//! The regular module of the algebra: weight spaces, highest weight
//! vectors, generated submodules and the block decomposition.

mod complete;
mod decompose;
mod relations;
mod structure;

use std::collections::{BTreeMap, HashMap, VecDeque};

use crate::combinat::{enumerate_basis, Composition, SuperMatrixIndex};
use crate::exec::par_map;
use crate::laurent::RatScalar;
use crate::linalg::{echelonize, SpanBasis, SparseVec};
use crate::qschur::{act, AlgebraElement, Generator};

pub use complete::{
    cartan_closure, extra_summands, highest_weight_dims, joint_kernel, split_cartan, CartanPiece,
    ExtraSummand,
};
pub use decompose::{
    build_block, decompose_block, decompose_module, seed_index, BlockChecks, DecomposeOptions,
    DecompositionCertificate, ModuleCertificate, Summand, DEFAULT_SEED,
};
pub use relations::{
    check_relations, relation_instances, FamilyTally, RelationFailure, RelationFamily,
    RelationInstance, RelationReport,
};
pub use structure::{
    check_divided_powers, check_f_reordering, check_gauss_integrality, check_hw_dims, check_kappa,
    check_kbar_eigenvalues, check_kbar_square, divided_f, divided_power_coefficient,
    verify_structure_props, StructureCheck, StructureReport,
};

/// Generator images of every basis vector, computed once.
///
/// Generators missing from the table are applied with [`act`].
pub struct ActionTable {
    n: usize,
    r: u32,
    images: HashMap<Generator, BTreeMap<SuperMatrixIndex, AlgebraElement>>,
}

impl ActionTable {
    /// Tabulates every generator on all of `M(n, r)`.
    pub fn new(n: usize, r: u32) -> Self {
        Self::with_generators(n, r, &Generator::full_set(n))
    }

    pub fn with_generators(n: usize, r: u32, gens: &[Generator]) -> Self {
        let basis = enumerate_basis(n, r);
        let rows = par_map(&basis, |a| {
            let x = AlgebraElement::basis(a);
            gens.iter().map(|&g| act(g, &x)).collect::<Vec<_>>()
        });
        let mut images: HashMap<Generator, BTreeMap<_, _>> = HashMap::new();
        for (a, row) in basis.iter().zip(rows) {
            for (&g, img) in gens.iter().zip(row) {
                images.entry(g).or_default().insert(a.clone(), img);
            }
        }
        Self { n, r, images }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn apply(&self, g: Generator, x: &AlgebraElement) -> AlgebraElement {
        let Some(table) = self.images.get(&g) else {
            return act(g, x);
        };
        let mut out = AlgebraElement::zero(self.n, self.r);
        for (a, c) in x.terms() {
            out.axpy(c, &table[a]);
        }
        out
    }

    /// Applies `word[0] .. word[last]`, rightmost first.
    pub fn apply_word(&self, word: &[Generator], x: &AlgebraElement) -> AlgebraElement {
        word.iter()
            .rev()
            .fold(x.clone(), |acc, &g| self.apply(g, &acc))
    }

    /// `sum_i c_i w_i (x)`.
    pub fn apply_combination(
        &self,
        terms: &[(RatScalar, Vec<Generator>)],
        x: &AlgebraElement,
    ) -> AlgebraElement {
        let mut out = AlgebraElement::zero(self.n, self.r);
        for (c, w) in terms {
            out.axpy(c, &self.apply_word(w, x));
        }
        out
    }
}

/// Splits `x` into its weight components.
pub fn weight_components(x: &AlgebraElement) -> BTreeMap<Composition, SparseVec<SuperMatrixIndex>> {
    let mut out: BTreeMap<Composition, SparseVec<SuperMatrixIndex>> = BTreeMap::new();
    for (a, c) in x.terms() {
        out.entry(a.ro()).or_default().add_term(a.clone(), c);
    }
    out
}

/// A subspace of the regular module that is a sum of its weight spaces.
#[derive(Clone, Debug)]
pub struct Submodule {
    n: usize,
    r: u32,
    weights: BTreeMap<Composition, SpanBasis<SuperMatrixIndex>>,
}

impl Submodule {
    pub fn empty(n: usize, r: u32) -> Self {
        Self {
            n,
            r,
            weights: BTreeMap::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn dim(&self) -> usize {
        self.weights.values().map(|b| b.dim()).sum()
    }

    /// Weights with a nonzero weight space, with their dimensions.
    pub fn weight_dims(&self) -> BTreeMap<Composition, usize> {
        self.weights
            .iter()
            .filter(|(_, b)| b.dim() > 0)
            .map(|(w, b)| (w.clone(), b.dim()))
            .collect()
    }

    pub fn weight_space(&self, w: &Composition) -> Option<&SpanBasis<SuperMatrixIndex>> {
        self.weights.get(w).filter(|b| b.dim() > 0)
    }

    pub fn weight_dim(&self, w: &Composition) -> usize {
        self.weight_space(w).map_or(0, |b| b.dim())
    }

    /// Basis vectors of one weight space.
    pub fn weight_vectors(&self, w: &Composition) -> Vec<AlgebraElement> {
        self.weight_space(w)
            .map(|b| {
                b.vectors()
                    .iter()
                    .map(|v| AlgebraElement::from_vec(self.n, self.r, v.clone()))
                    .collect()
            })
            .unwrap_or_default()
    }

    /// Basis vectors of every weight space, in weight order.
    pub fn vectors(&self) -> Vec<AlgebraElement> {
        self.weights
            .keys()
            .flat_map(|w| self.weight_vectors(w))
            .collect()
    }

    /// The subspace as a single echelon basis.
    pub fn span(&self) -> SpanBasis<SuperMatrixIndex> {
        echelonize(self.weights.values().flat_map(|b| b.vectors()))
    }

    /// Adds a weight vector. Returns true when the dimension grew.
    fn insert_weight_vector(&mut self, w: Composition, v: &SparseVec<SuperMatrixIndex>) -> bool {
        self.weights.entry(w).or_default().insert(v)
    }

    pub fn contains(&self, x: &AlgebraElement) -> bool {
        weight_components(x)
            .iter()
            .all(|(w, v)| self.weights.get(w).is_some_and(|b| b.contains(v)))
    }

    /// Same subspace of the same module.
    pub fn same_span(&self, other: &Submodule) -> bool {
        self.weight_dims() == other.weight_dims()
            && self
                .weights
                .iter()
                .filter(|(_, b)| b.dim() > 0)
                .all(|(w, b)| other.weights.get(w).is_some_and(|o| o.same_span(b)))
    }

    /// The span of a set of basis indices.
    pub fn from_indices<'a>(
        n: usize,
        r: u32,
        indices: impl IntoIterator<Item = &'a SuperMatrixIndex>,
    ) -> Self {
        let mut sub = Self::empty(n, r);
        for a in indices {
            sub.insert_weight_vector(a.ro(), &SparseVec::unit(a.clone()));
        }
        sub
    }

    /// True when every generator in `gens` maps the subspace into itself.
    pub fn is_closed(&self, table: &ActionTable, gens: &[Generator]) -> bool {
        let vs = self.vectors();
        let ok = par_map(&vs, |x| {
            gens.iter().all(|&g| self.contains(&table.apply(g, x)))
        });
        ok.into_iter().all(|b| b)
    }
}

/// Generators used for closure: `E_h`, `F_h`, `Kbar_n`, and with
/// `include_derived` also `Ebar_j`, `Fbar_j`, `Kbar_j`.
///
/// The `K_i^{+-1}` act diagonally on weight vectors and are left out.
pub fn closure_generators(n: usize, include_derived: bool) -> Vec<Generator> {
    let mut out: Vec<Generator> = (1..n)
        .flat_map(|h| [Generator::E(h), Generator::F(h)])
        .collect();
    out.push(Generator::KBar(n));
    if include_derived {
        for j in 1..n {
            out.extend([Generator::EBar(j), Generator::FBar(j), Generator::KBar(j)]);
        }
    }
    out
}

/// The smallest subspace containing `seeds` and closed under `gens`.
///
/// Seeds are split into weight components first; a weight module contains
/// the components of each of its vectors.
pub fn generate_submodule(
    table: &ActionTable,
    seeds: &[AlgebraElement],
    gens: &[Generator],
) -> Submodule {
    let mut sub = Submodule::empty(table.n(), table.r());
    let mut queue: VecDeque<AlgebraElement> = VecDeque::new();
    let offer = |sub: &mut Submodule, queue: &mut VecDeque<AlgebraElement>, x: &AlgebraElement| {
        for (w, v) in weight_components(x) {
            if sub.insert_weight_vector(w, &v) {
                queue.push_back(AlgebraElement::from_vec(table.n(), table.r(), v));
            }
        }
    };
    for s in seeds {
        offer(&mut sub, &mut queue, s);
    }
    while let Some(x) = queue.pop_front() {
        for &g in gens {
            let y = table.apply(g, &x);
            if !y.is_zero() {
                offer(&mut sub, &mut queue, &y);
            }
        }
    }
    sub
}

/// Largest index, 1-based, of a nonzero row sum among the terms of `x`.
pub fn psi(x: &AlgebraElement) -> usize {
    x.terms()
        .filter_map(|(a, _)| a.ro().0.iter().rposition(|&p| p > 0))
        .max()
        .map_or(0, |i| i + 1)
}

/// Result of [`raise_to_highest`].
#[derive(Clone, Debug)]
pub struct Raised {
    pub vector: AlgebraElement,
    pub steps: Vec<Generator>,
}

/// Raises `x` to a vector killed by every `E_j` and `Ebar_j`.
///
/// Each step applies `E_{t-1}` with `t = psi`, falling back to the other
/// raising operators when that one kills the current vector.
///
/// # Panics
/// If `x` is zero.
pub fn raise_to_highest(table: &ActionTable, x: &AlgebraElement) -> Raised {
    assert!(!x.is_zero(), "cannot raise the zero vector");
    let n = table.n();
    let mut m = x.clone();
    let mut steps = Vec::new();
    loop {
        let t = psi(&m);
        let mut order: Vec<Generator> = Vec::new();
        if t > 1 {
            order.push(Generator::E(t - 1));
        }
        order.extend((1..n).rev().map(Generator::E));
        order.extend((1..n).rev().map(Generator::EBar));
        let next = order.into_iter().find_map(|g| {
            let y = table.apply(g, &m);
            (!y.is_zero()).then_some((g, y))
        });
        match next {
            Some((g, y)) => {
                steps.push(g);
                m = y;
            }
            None => break,
        }
    }
    Raised { vector: m, steps }
}

/// `(r, 0, .., 0)`.
pub fn top_weight(n: usize, r: u32) -> Composition {
    let mut parts = vec![0; n];
    parts[0] = r;
    Composition(parts)
}

/// `(v^{2r} - v^{-2r}) / (v^2 - v^{-2})`, the square of `Kbar_1` on weight `(r, 0, .., 0)`.
pub fn kbar_square_scalar(r: u32) -> RatScalar {
    let r = r as i64;
    let num = crate::laurent::LaurentPoly::from_terms([(2 * r, 1), (-2 * r, -1)]);
    let den = crate::laurent::LaurentPoly::from_terms([(2, 1), (-2, -1)]);
    RatScalar::new(num, den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::SuperMatrixIndex;

    fn idx(s: &str) -> SuperMatrixIndex {
        s.parse().unwrap()
    }

    #[test]
    fn raising_one_step() {
        let t = ActionTable::new(2, 1);
        let out = raise_to_highest(&t, &AlgebraElement::basis(&idx("(0,0;1,0|0,0;0,0)")));
        assert_eq!(out.steps, vec![Generator::E(1)]);
        assert_eq!(out.vector.weight(), Some(Composition(vec![1, 0])));
        assert_eq!(out.vector.len(), 1);
        assert!(out.vector.coeff(&idx("(1,0;0,0|0,0;0,0)")).is_one());
    }

    #[test]
    fn raising_top_weight_is_identity() {
        let t = ActionTable::new(2, 2);
        let x = AlgebraElement::basis(&idx("(1,1;0,0|0,0;0,0)"));
        let out = raise_to_highest(&t, &x);
        assert!(out.steps.is_empty());
        assert_eq!(out.vector, x);
    }

    #[test]
    fn psi_of_terms() {
        assert_eq!(psi(&AlgebraElement::basis(&idx("(0,0;1,0|0,0;0,0)"))), 2);
        assert_eq!(psi(&AlgebraElement::basis(&idx("(1,0;0,0|0,0;0,0)"))), 1);
    }

    #[test]
    fn whole_block_is_closed() {
        let t = ActionTable::new(2, 2);
        let mu = Composition(vec![1, 1]);
        let basis: Vec<_> = enumerate_basis(2, 2)
            .into_iter()
            .filter(|a| a.co() == mu)
            .collect();
        let seeds: Vec<_> = basis.iter().map(AlgebraElement::basis).collect();
        let sub = generate_submodule(&t, &seeds, &closure_generators(2, false));
        assert_eq!(sub.dim(), 16);
        assert!(sub.is_closed(&t, &Generator::full_set(2)));
    }

    #[test]
    fn kbar_square_values() {
        assert!(kbar_square_scalar(1).is_one());
        assert_eq!(kbar_square_scalar(2).render(), "1*v^2 + 1*v^-2");
    }
}
