//! Elements of the q-Schur superalgebra as combinations of `Phi_{A*}`, the
//! supergroup generators, and the long elements realizing them.

mod action;
pub mod coeffs;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combinat::{enumerate_compositions, Composition, SuperMatrixIndex};
use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, RatScalar};
use crate::linalg::SparseVec;

pub use action::{
    act, act_derived, act_generator, act_generator_with, apply_word, divided_power_f,
};

/// A generator of the quantum queer supergroup, with its 1-based index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    K(usize),
    KInv(usize),
    KBar(usize),
    E(usize),
    EBar(usize),
    F(usize),
    FBar(usize),
}

impl Generator {
    pub fn index(&self) -> usize {
        match *self {
            Generator::K(i)
            | Generator::KInv(i)
            | Generator::KBar(i)
            | Generator::E(i)
            | Generator::EBar(i)
            | Generator::F(i)
            | Generator::FBar(i) => i,
        }
    }

    pub fn parity(&self) -> u8 {
        match self {
            Generator::KBar(_) | Generator::EBar(_) | Generator::FBar(_) => 1,
            _ => 0,
        }
    }

    /// Checks the index against the rank `n`.
    pub fn validate(&self, n: usize) -> Result<()> {
        let i = self.index();
        let ok = match self {
            Generator::K(_) | Generator::KInv(_) | Generator::KBar(_) => (1..=n).contains(&i),
            _ => i >= 1 && i < n,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::GeneratorOutOfRange(self.to_string(), n))
        }
    }

    /// The generators acted on by closed formulas.
    pub fn is_primitive(&self, n: usize) -> bool {
        match self {
            Generator::K(_) | Generator::KInv(_) | Generator::E(_) | Generator::F(_) => true,
            Generator::KBar(i) => *i == n,
            _ => false,
        }
    }

    /// `{K_i^{+-1}, E_h, F_h, Kbar_n}` for rank `n`.
    pub fn primitive_set(n: usize) -> Vec<Generator> {
        let mut out = Vec::new();
        for i in 1..=n {
            out.push(Generator::K(i));
            out.push(Generator::KInv(i));
        }
        for h in 1..n {
            out.push(Generator::E(h));
            out.push(Generator::F(h));
        }
        out.push(Generator::KBar(n));
        out
    }

    /// Every generator of rank `n`.
    pub fn full_set(n: usize) -> Vec<Generator> {
        let mut out = Vec::new();
        for i in 1..=n {
            out.extend([Generator::K(i), Generator::KInv(i), Generator::KBar(i)]);
        }
        for j in 1..n {
            out.extend([
                Generator::E(j),
                Generator::EBar(j),
                Generator::F(j),
                Generator::FBar(j),
            ]);
        }
        out
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::K(i) => write!(f, "K{i}"),
            Generator::KInv(i) => write!(f, "K{i}^-1"),
            Generator::KBar(i) => write!(f, "Kbar{i}"),
            Generator::E(i) => write!(f, "E{i}"),
            Generator::EBar(i) => write!(f, "Ebar{i}"),
            Generator::F(i) => write!(f, "F{i}"),
            Generator::FBar(i) => write!(f, "Fbar{i}"),
        }
    }
}

impl std::str::FromStr for Generator {
    type Err = Error;

    /// Parses `K1`, `K1^-1`, `Kbar1`, `E1`, `Ebar1`, `F1`, `Fbar1`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadGenerator(s.to_string());
        let t = s.trim();
        let (name, rest) = t.split_at(t.find(|c: char| c.is_ascii_digit()).ok_or_else(bad)?);
        let (num, inv) = match rest.strip_suffix("^-1") {
            Some(x) => (x, true),
            None => (rest, false),
        };
        let i: usize = num.parse().map_err(|_| bad())?;
        Ok(match (name, inv) {
            ("K", false) => Generator::K(i),
            ("K", true) => Generator::KInv(i),
            ("Kbar", false) => Generator::KBar(i),
            ("E", false) => Generator::E(i),
            ("Ebar", false) => Generator::EBar(i),
            ("F", false) => Generator::F(i),
            ("Fbar", false) => Generator::FBar(i),
            _ => return Err(bad()),
        })
    }
}

/// A finite combination of basis elements `Phi_{A*}` of `Q(n, r)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgebraElement {
    n: usize,
    r: u32,
    vec: SparseVec<SuperMatrixIndex>,
}

impl AlgebraElement {
    pub fn zero(n: usize, r: u32) -> Self {
        Self {
            n,
            r,
            vec: SparseVec::new(),
        }
    }

    /// The basis element `Phi_{A*}`.
    pub fn basis(a: &SuperMatrixIndex) -> Self {
        Self {
            n: a.n(),
            r: a.size(),
            vec: SparseVec::unit(a.clone()),
        }
    }

    pub fn from_vec(n: usize, r: u32, vec: SparseVec<SuperMatrixIndex>) -> Self {
        debug_assert!(vec.keys().all(|k| k.n() == n && k.size() == r));
        Self { n, r, vec }
    }

    /// The unit `sum_lambda Phi_{(diag lambda | O)}`.
    pub fn unit(n: usize, r: u32) -> Self {
        long_element(&SuperMatrixIndex::zero(n), &vec![0; n], r)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn as_vec(&self) -> &SparseVec<SuperMatrixIndex> {
        &self.vec
    }

    pub fn into_vec(self) -> SparseVec<SuperMatrixIndex> {
        self.vec
    }

    pub fn is_zero(&self) -> bool {
        self.vec.is_zero()
    }

    pub fn len(&self) -> usize {
        self.vec.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vec.is_empty()
    }

    pub fn coeff(&self, a: &SuperMatrixIndex) -> RatScalar {
        self.vec.get(a).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SuperMatrixIndex, &RatScalar)> {
        self.vec.iter()
    }

    pub fn add_term(&mut self, a: SuperMatrixIndex, c: &RatScalar) {
        assert!(
            a.n() == self.n && a.size() == self.r,
            "index {a} is outside M({}, {})",
            self.n,
            self.r
        );
        self.vec.add_term(a, c);
    }

    fn check_rank(&self, other: &AlgebraElement) {
        assert!(
            self.n == other.n && self.r == other.r,
            "mixed-rank operands: ({}, {}) vs ({}, {})",
            self.n,
            self.r,
            other.n,
            other.r
        );
    }

    pub fn add(&self, other: &AlgebraElement) -> AlgebraElement {
        self.check_rank(other);
        Self::from_vec(self.n, self.r, self.vec.add(&other.vec))
    }

    pub fn sub(&self, other: &AlgebraElement) -> AlgebraElement {
        self.check_rank(other);
        Self::from_vec(self.n, self.r, self.vec.sub(&other.vec))
    }

    /// `self += c * other`.
    pub fn axpy(&mut self, c: &RatScalar, other: &AlgebraElement) {
        self.check_rank(other);
        self.vec.axpy(c, &other.vec);
    }

    pub fn scale(&self, c: &RatScalar) -> AlgebraElement {
        Self::from_vec(self.n, self.r, self.vec.scale(c))
    }

    /// `Some(p)` when every term has parity `p`; `None` for inhomogeneous or zero elements.
    pub fn parity(&self) -> Option<u8> {
        let mut it = self.vec.keys().map(|k| k.parity());
        let first = it.next()?;
        it.all(|p| p == first).then_some(first)
    }

    /// Row sums shared by every term, if any.
    pub fn weight(&self) -> Option<Composition> {
        let mut it = self.vec.keys().map(|k| k.ro());
        let first = it.next()?;
        it.all(|w| w == first).then_some(first)
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    index: SuperMatrixIndex,
    coeff: RatScalar,
}

impl Serialize for AlgebraElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<TermJson> = self
            .vec
            .iter()
            .map(|(k, c)| TermJson {
                index: k.clone(),
                coeff: c.clone(),
            })
            .collect();
        terms.serialize(s)
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .vec
            .iter()
            .map(|(k, c)| format!("[{c}]*Phi{k}"))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// `sum_{lambda in Lambda(n, r - |A*|)} v^{lambda . j} v^{-delta} Phi_{(A0 + lambda | A1)}`.
///
/// Panics if `astar` has a nonzero even diagonal.
pub fn long_element(astar: &SuperMatrixIndex, j: &[i64], r: u32) -> AlgebraElement {
    let n = astar.n();
    assert_eq!(j.len(), n, "weight vector length must be n");
    assert!(
        astar.has_zero_even_diagonal(),
        "long elements need a zero even diagonal"
    );
    let mut out = AlgebraElement::zero(n, r);
    let size = astar.size();
    if size > r {
        return out;
    }
    for lam in enumerate_compositions(n, r - size) {
        let idx = astar.plus_diagonal(lam.parts());
        let dot: i64 = lam.parts().iter().zip(j).map(|(&l, &x)| l as i64 * x).sum();
        let exp = dot - idx.delta() as i64;
        out.add_term(idx, &RatScalar::v_pow(exp));
    }
    out
}

/// The image of a generator in `Q(n, r)`.
pub fn generator_image(g: Generator, n: usize, r: u32) -> Result<AlgebraElement> {
    g.validate(n)?;
    let zero = SuperMatrixIndex::zero(n);
    let eps = |i: usize, s: i64| {
        let mut v = vec![0i64; n];
        v[i - 1] = s;
        v
    };
    let off = |row: usize, col: usize, odd: bool| {
        let mut m = SuperMatrixIndex::zero(n);
        if odd {
            m.set_odd(row - 1, col - 1, 1);
        } else {
            m.set_even(row - 1, col - 1, 1);
        }
        m
    };
    let nul = vec![0i64; n];
    Ok(match g {
        Generator::K(i) => long_element(&zero, &eps(i, 1), r),
        Generator::KInv(i) => long_element(&zero, &eps(i, -1), r),
        Generator::KBar(i) => long_element(&off(i, i, true), &nul, r),
        Generator::E(j) => long_element(&off(j, j + 1, false), &nul, r),
        Generator::EBar(j) => long_element(&off(j, j + 1, true), &nul, r),
        Generator::F(j) => long_element(&off(j + 1, j, false), &nul, r),
        Generator::FBar(j) => long_element(&off(j + 1, j, true), &nul, r),
    })
}

/// `[K; k] = sum_{lambda >= k} prod_i gauss_binom(lambda_i + 1, k_i) Phi_{(lambda | O)}`.
pub fn kappa(k: &[u32], r: u32) -> AlgebraElement {
    let n = k.len();
    let mut out = AlgebraElement::zero(n, r);
    for lam in enumerate_compositions(n, r) {
        if lam.parts().iter().zip(k).any(|(l, ki)| l < ki) {
            continue;
        }
        let c = lam
            .parts()
            .iter()
            .zip(k)
            .fold(LaurentPoly::one(), |acc, (&l, &ki)| {
                &acc * &crate::laurent::gauss_binom(l + 1, ki)
            });
        out.add_term(
            SuperMatrixIndex::diagonal(lam.parts()),
            &RatScalar::from_laurent(c),
        );
    }
    out
}
