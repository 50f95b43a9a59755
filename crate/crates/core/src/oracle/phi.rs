//! The elements `T_{A*}` of the Hecke-Clifford algebra and composition of
//! the endomorphisms `Phi_{A*}` they define.

use std::collections::BTreeMap;

use crate::combinat::{enumerate_basis, Composition, SuperMatrixIndex};
use crate::error::{Error, Result};
use crate::exec::par_map;
use crate::laurent::{LaurentPoly, RatScalar};
use crate::linalg::{Solver, SparseVec};
use crate::qschur::{generator_image, AlgebraElement, Generator};

use super::hecke_clifford::{q, HcElement};
use super::perm::{blocks, distinguished_right, young_subgroup, Perm};

/// Default bound on `r` for oracle computations.
pub const DEFAULT_MAX_R: u32 = 4;

/// `x_lambda = sum_{w in S_lambda} T_w`.
pub fn x_lambda(parts: &[u32]) -> HcElement {
    let r: usize = parts.iter().map(|&p| p as usize).sum();
    let mut out = HcElement::zero(r);
    for w in young_subgroup(parts) {
        out.add_term(w, 0, LaurentPoly::one());
    }
    out
}

/// `c_{q,i,j} = q^{j-i} c_i + .. + c_j`, or the primed `c_i + q c_{i+1} + .. + q^{j-i} c_j`.
///
/// Positions are 0-based and inclusive.
pub fn c_q(r: usize, i: usize, j: usize, primed: bool) -> HcElement {
    assert!(i <= j && j < r, "bad Clifford range {i}..={j} for r = {r}");
    let mut out = HcElement::zero(r);
    for k in i..=j {
        let e = if primed { k - i } else { j - k };
        out.add_term(Perm::identity(r), 1 << k, LaurentPoly::v_pow(2 * e as i64));
    }
    out
}

/// The composition `(a_11, .., a_n1, a_12, .., a_nn)` read down the columns.
pub fn column_reading(a: &SuperMatrixIndex) -> Vec<u32> {
    let n = a.n();
    let mut out = Vec::with_capacity(n * n);
    for j in 0..n {
        for i in 0..n {
            out.push(a.entry(i, j));
        }
    }
    out
}

/// The minimal double coset representative attached to `A`.
///
/// Column block `j` of `co(A)` is cut into consecutive pieces of sizes
/// `a_1j, .., a_nj`; the piece `(i, j)` is sent increasingly onto the
/// `j`-th piece of row block `i` of `ro(A)`, whose pieces have sizes
/// `a_i1, .., a_in`.
pub fn double_coset_rep(a: &SuperMatrixIndex) -> Perm {
    let r = a.size() as usize;
    let rows = blocks(a.ro().parts());
    let cols = blocks(a.co().parts());
    let mut img = vec![0u8; r];
    let mut row_fill: Vec<usize> = rows.iter().map(|b| b.0).collect();
    for (j, col) in cols.iter().enumerate() {
        let mut src = col.0;
        for (i, fill) in row_fill.iter_mut().enumerate() {
            for _ in 0..a.entry(i, j) {
                img[src] = *fill as u8;
                src += 1;
                *fill += 1;
            }
        }
    }
    Perm::from_images(img)
}

/// `c_{A*}`: one factor `c_{q,start,end}` for every segment of the column
/// reading whose odd entry is 1, in increasing position order.
pub fn clifford_factor(a: &SuperMatrixIndex) -> HcElement {
    let n = a.n();
    let r = a.size() as usize;
    let mut out = HcElement::one(r);
    let mut start = 0usize;
    for j in 0..n {
        for i in 0..n {
            let len = a.entry(i, j) as usize;
            if a.odd(i, j) == 1 {
                out = out.mul(&c_q(r, start, start + len - 1, false));
            }
            start += len;
        }
    }
    out
}

/// `h_A = T_{d_A} c_{A*} sum_{sigma in D_nu cap S_mu} T_sigma`, so that `T_{A*} = x_lambda h_A`.
pub fn right_factor(a: &SuperMatrixIndex) -> HcElement {
    let r = a.size() as usize;
    let d = double_coset_rep(a);
    let nu = column_reading(a);
    let s_mu = young_subgroup(a.co().parts());
    let mut sym = HcElement::zero(r);
    for s in distinguished_right(&nu, &s_mu) {
        sym.add_term(s, 0, LaurentPoly::one());
    }
    HcElement::t(d).mul(&clifford_factor(a)).mul(&sym)
}

/// `T_{A*} = x_{ro(A)} h_A`.
pub fn t_element(a: &SuperMatrixIndex) -> HcElement {
    x_lambda(a.ro().parts()).mul(&right_factor(a))
}

fn to_sparse(h: &HcElement) -> SparseVec<(Perm, u32)> {
    h.terms()
        .map(|(k, c)| (k.clone(), RatScalar::from_laurent(c.clone())))
        .collect()
}

/// Precomputed `T_{A*}` and `h_A` for all of `M(n, r)`.
pub struct Oracle {
    n: usize,
    r: u32,
    t: BTreeMap<SuperMatrixIndex, HcElement>,
    h: BTreeMap<SuperMatrixIndex, HcElement>,
    by_shape: BTreeMap<(Composition, Composition), Vec<SuperMatrixIndex>>,
    solvers: BTreeMap<(Composition, Composition), Solver<(Perm, u32)>>,
}

impl Oracle {
    /// Builds the oracle, refusing when `r > max_r`.
    pub fn new(n: usize, r: u32, max_r: u32) -> Result<Self> {
        if r > max_r {
            return Err(Error::OracleGuard { r, max: max_r });
        }
        let basis = enumerate_basis(n, r);
        let pairs = par_map(&basis, |a| {
            let h = right_factor(a);
            let t = x_lambda(a.ro().parts()).mul(&h);
            (t, h)
        });
        let mut t = BTreeMap::new();
        let mut h = BTreeMap::new();
        let mut by_shape: BTreeMap<_, Vec<_>> = BTreeMap::new();
        for (a, (ta, ha)) in basis.into_iter().zip(pairs) {
            by_shape
                .entry((a.ro(), a.co()))
                .or_default()
                .push(a.clone());
            t.insert(a.clone(), ta);
            h.insert(a, ha);
        }
        let shapes: Vec<_> = by_shape.iter().collect();
        let built = par_map(&shapes, |(_, idxs)| {
            let gens: Vec<_> = idxs.iter().map(|c| to_sparse(&t[c])).collect();
            Solver::new(&gens)
        });
        let solvers = shapes
            .iter()
            .map(|(k, _)| (*k).clone())
            .zip(built)
            .collect();
        Ok(Self {
            n,
            r,
            t,
            h,
            by_shape,
            solvers,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn t(&self, a: &SuperMatrixIndex) -> &HcElement {
        &self.t[a]
    }

    pub fn h(&self, a: &SuperMatrixIndex) -> &HcElement {
        &self.h[a]
    }

    /// True when the `T_{C*}` of every shape are linearly independent.
    pub fn shapes_independent(&self) -> bool {
        self.by_shape
            .iter()
            .all(|(k, v)| self.solvers[k].rank() == v.len())
    }

    /// Indices with the given row and column sums.
    pub fn shape(&self, ro: &Composition, co: &Composition) -> &[SuperMatrixIndex] {
        self.by_shape
            .get(&(ro.clone(), co.clone()))
            .map(|v| v.as_slice())
            .unwrap_or(&[])
    }

    /// Writes an element of `x_ro H` that is right-invariant under `S_co`
    /// as a combination of the `T_{C*}` with that shape.
    pub fn express(
        &self,
        ro: &Composition,
        co: &Composition,
        target: &HcElement,
    ) -> Result<AlgebraElement> {
        let inconsistent = || Error::OracleInconsistent {
            context: format!("shape ro={ro} co={co}"),
        };
        let cands = self.shape(ro, co);
        let coeffs = match self.solvers.get(&(ro.clone(), co.clone())) {
            Some(s) => s.solve(&to_sparse(target)).ok_or_else(inconsistent)?,
            None if target.is_zero() => Vec::new(),
            None => return Err(inconsistent()),
        };
        let mut out = AlgebraElement::zero(self.n, self.r);
        for (c, k) in coeffs.iter().zip(cands) {
            out.add_term(k.clone(), c);
        }
        Ok(out)
    }

    /// `Phi_B o Phi_A` in the `Phi` basis.
    pub fn compose_basis(
        &self,
        b: &SuperMatrixIndex,
        a: &SuperMatrixIndex,
    ) -> Result<AlgebraElement> {
        if b.co() != a.ro() {
            return Ok(AlgebraElement::zero(self.n, self.r));
        }
        let mut prod = self.t[b].mul(&self.h[a]);
        if b.parity() * a.parity() == 1 {
            prod = prod.scale(&LaurentPoly::constant(-1));
        }
        self.express(&b.ro(), &a.co(), &prod)
            .map_err(|_| Error::OracleInconsistent {
                context: format!("Phi{b} o Phi{a}"),
            })
    }

    /// The product `x * y` computed by composing endomorphisms.
    pub fn compose(&self, x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
        let mut out = AlgebraElement::zero(self.n, self.r);
        for (b, cb) in x.terms() {
            for (a, ca) in y.terms() {
                let p = self.compose_basis(b, a)?;
                out.axpy(&(cb * ca), &p);
            }
        }
        Ok(out)
    }

    /// The action of a generator on `Phi_{A*}`, computed in the Hecke-Clifford model.
    pub fn act_generator(&self, g: Generator, a: &SuperMatrixIndex) -> Result<AlgebraElement> {
        let img = generator_image(g, self.n, self.r)?;
        self.compose(&img, &AlgebraElement::basis(a))
    }

    /// The action of a generator on an arbitrary element.
    pub fn act(&self, g: Generator, x: &AlgebraElement) -> Result<AlgebraElement> {
        let img = generator_image(g, self.n, self.r)?;
        self.compose(&img, x)
    }
}

/// Checks `T_{A*} T_i = q T_{A*}` for every `s_i` in `S_{co(A)}`.
pub fn is_right_invariant(a: &SuperMatrixIndex, t: &HcElement) -> bool {
    let co = a.co();
    let qq = q();
    blocks(co.parts())
        .into_iter()
        .all(|(s, e)| (s..e.saturating_sub(1)).all(|i| t.mul_t(i) == t.scale(&qq)))
}

/// Checks `T_i T_{A*} = q T_{A*}` for every `s_i` in `S_{ro(A)}`.
pub fn is_left_invariant(a: &SuperMatrixIndex, t: &HcElement) -> bool {
    let ro = a.ro();
    let r = a.size() as usize;
    let qq = q();
    blocks(ro.parts()).into_iter().all(|(s, e)| {
        (s..e.saturating_sub(1))
            .all(|i| HcElement::t(Perm::identity(r).times_simple(i)).mul(t) == t.scale(&qq))
    })
}
