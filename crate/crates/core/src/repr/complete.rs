//! Highest weight vectors away from the top weight and the summands they generate.
//!
//! The seeded summands of a block all have highest weight `(r, 0, .., 0)`.
//! Once `r >= 3` a block can also contain irreducible summands of other highest weights.
//! They are found here from the joint kernel of the raising operators.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::combinat::{Composition, SuperMatrixIndex};
use crate::linalg::{echelonize, kernel, SpanBasis, SparseVec};
use crate::qschur::{AlgebraElement, Generator};

use super::{generate_submodule, ActionTable, Submodule};

fn raising(n: usize) -> Vec<Generator> {
    (1..n)
        .flat_map(|j| [Generator::E(j), Generator::EBar(j)])
        .collect()
}

/// Vectors of `module` of weight `w` killed by every `E_j` and `Ebar_j`.
pub fn joint_kernel(
    table: &ActionTable,
    module: &Submodule,
    w: &Composition,
) -> Vec<AlgebraElement> {
    let vs = module.weight_vectors(w);
    let ops = raising(table.n());
    let images: Vec<SparseVec<(usize, SuperMatrixIndex)>> = vs
        .iter()
        .map(|x| {
            let mut out = SparseVec::new();
            for (k, &g) in ops.iter().enumerate() {
                for (a, c) in table.apply(g, x).terms() {
                    out.add_term((k, a.clone()), c);
                }
            }
            out
        })
        .collect();
    kernel(&images)
        .into_iter()
        .map(|coeffs| {
            let mut x = AlgebraElement::zero(table.n(), table.r());
            for (i, c) in coeffs.iter() {
                x.axpy(c, &vs[*i]);
            }
            x
        })
        .collect()
}

/// Dimensions of the joint kernel at every weight of `module`.
pub fn highest_weight_dims(
    table: &ActionTable,
    module: &Submodule,
) -> BTreeMap<Composition, usize> {
    module
        .weight_dims()
        .keys()
        .map(|w| (w.clone(), joint_kernel(table, module, w).len()))
        .filter(|(_, d)| *d > 0)
        .collect()
}

fn span(vs: &[AlgebraElement]) -> SpanBasis<SuperMatrixIndex> {
    echelonize(vs.iter().map(|x| x.as_vec()))
}

fn to_elements(n: usize, r: u32, b: &SpanBasis<SuperMatrixIndex>) -> Vec<AlgebraElement> {
    b.vectors()
        .iter()
        .map(|v| AlgebraElement::from_vec(n, r, v.clone()))
        .collect()
}

/// The span of `seeds` closed under every `Kbar_i`.
pub fn cartan_closure(
    table: &ActionTable,
    seeds: &[AlgebraElement],
) -> SpanBasis<SuperMatrixIndex> {
    let mut b = span(seeds);
    let mut queue = to_elements(table.n(), table.r(), &b);
    while let Some(x) = queue.pop() {
        for i in 1..=table.n() {
            let y = table.apply(Generator::KBar(i), &x);
            if b.insert(y.as_vec()) {
                queue.push(y);
            }
        }
    }
    b
}

/// A `Kbar`-stable piece of a highest weight space.
#[derive(Clone, Debug)]
pub struct CartanPiece {
    pub vectors: Vec<AlgebraElement>,
    /// Certified to have no proper nonzero `Kbar`-stable subspace.
    pub irreducible: bool,
}

/// Splits a `Kbar`-stable space of weight `w` into irreducible pieces.
///
/// Uses some `i` with `w_i = 1`, where `Kbar_i^2 = 1`. Each piece is
/// generated by one `+1` eigenvector of `Kbar_i`. It is certified
/// irreducible when that eigenspace is a line and some other `Kbar_j` with
/// `w_j > 0` swaps the two eigenspaces.
pub fn split_cartan(
    table: &ActionTable,
    space: &[AlgebraElement],
    w: &Composition,
) -> Vec<CartanPiece> {
    let (n, r) = (table.n(), table.r());
    let whole = span(space);
    let Some(i) = w.0.iter().position(|&p| p == 1).map(|i| i + 1) else {
        return vec![CartanPiece {
            vectors: to_elements(n, r, &whole),
            irreducible: false,
        }];
    };
    let swapper = (1..=n).any(|j| j != i && w.0[j - 1] > 0);
    let plus = |x: &AlgebraElement| x.add(&table.apply(Generator::KBar(i), x));
    let plus_space = span(
        &whole
            .vectors()
            .iter()
            .map(|v| plus(&AlgebraElement::from_vec(n, r, v.clone())))
            .collect::<Vec<_>>(),
    );

    let mut acc: SpanBasis<SuperMatrixIndex> = SpanBasis::new();
    let mut pieces = Vec::new();
    for u in plus_space.vectors() {
        if acc.contains(u) {
            continue;
        }
        let piece = cartan_closure(table, &[AlgebraElement::from_vec(n, r, u.clone())]);
        let elems = to_elements(n, r, &piece);
        let plus_dim = span(&elems.iter().map(&plus).collect::<Vec<_>>()).dim();
        for v in piece.vectors() {
            acc.insert(v);
        }
        pieces.push(CartanPiece {
            vectors: elems,
            irreducible: plus_dim == 1 && swapper,
        });
    }
    if acc.dim() < whole.dim() {
        let rest: Vec<AlgebraElement> = whole
            .vectors()
            .iter()
            .filter(|v| !acc.contains(v))
            .map(|v| AlgebraElement::from_vec(n, r, v.clone()))
            .collect();
        pieces.push(CartanPiece {
            vectors: rest,
            irreducible: false,
        });
    }
    pieces
}

/// A summand of highest weight other than `(r, 0, .., 0)`.
#[derive(Clone, Debug, Serialize)]
pub struct ExtraSummand {
    pub highest_weight: Vec<u32>,
    pub dim: usize,
    pub hw_dim: usize,
    pub weight_dims: BTreeMap<String, usize>,
    pub closed: bool,
    /// The joint kernel of the raising operators is exactly the generating piece.
    pub joint_kernel_exact: bool,
    pub hw_irreducible: bool,
    #[serde(skip)]
    pub module: Submodule,
}

impl ExtraSummand {
    pub fn pass(&self) -> bool {
        self.closed && self.joint_kernel_exact && self.hw_irreducible
    }
}

/// Summands of `block` generated by its highest weight vectors of weight other than `top`.
pub fn extra_summands(
    table: &ActionTable,
    block: &Submodule,
    top: &Composition,
    gens: &[Generator],
) -> Vec<ExtraSummand> {
    let full = Generator::full_set(table.n());
    let mut out = Vec::new();
    for w in block.weight_dims().keys().filter(|w| *w != top) {
        let hw = joint_kernel(table, block, w);
        if hw.is_empty() {
            continue;
        }
        for piece in split_cartan(table, &hw, w) {
            let module = generate_submodule(table, &piece.vectors, gens);
            let hw_dims = highest_weight_dims(table, &module);
            let piece_dim = piece.vectors.len();
            out.push(ExtraSummand {
                highest_weight: w.0.clone(),
                dim: module.dim(),
                hw_dim: piece_dim,
                weight_dims: module
                    .weight_dims()
                    .into_iter()
                    .map(|(w, d)| (w.to_string(), d))
                    .collect(),
                closed: module.is_closed(table, &full),
                joint_kernel_exact: hw_dims.len() == 1 && hw_dims.get(w) == Some(&piece_dim),
                hw_irreducible: piece.irreducible,
                module,
            });
        }
    }
    out
}
