//! Compositions, super matrix indices and the statistics attached to them.
//!
//! Matrix entries are addressed with 0-based `(row, col)` pairs. A
//! [`SuperMatrixIndex`] orders lexicographically on its even entries
//! (row-major) followed by its odd entries, which is the canonical basis
//! order used everywhere else in the crate.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An `n`-tuple of naturals. Membership in `Lambda(n, r)` means the parts sum to `r`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition(pub Vec<u32>);

impl Composition {
    pub fn new(parts: Vec<u32>) -> Self {
        Self(parts)
    }

    pub fn zero(n: usize) -> Self {
        Self(vec![0; n])
    }

    /// Checks that `parts` lies in `Lambda(n, r)`.
    pub fn checked(parts: Vec<u32>, n: usize, r: u32) -> Result<Self> {
        if parts.len() != n || parts.iter().sum::<u32>() != r {
            return Err(Error::BadComposition { parts, n, r });
        }
        Ok(Self(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn support_size(&self) -> usize {
        self.0.iter().filter(|&&p| p > 0).count()
    }

    pub fn to_weight(&self) -> WeightExponent {
        WeightExponent(self.0.iter().map(|&p| p as i64).collect())
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All compositions of `r` into `n` parts, in lexicographic order.
pub fn enumerate_compositions(n: usize, r: u32) -> Vec<Composition> {
    assert!(n >= 1, "compositions need at least one part");
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    fn rec(pos: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Composition>) {
        if pos + 1 == cur.len() {
            cur[pos] = left;
            out.push(Composition(cur.clone()));
            return;
        }
        for p in 0..=left {
            cur[pos] = p;
            rec(pos + 1, left - p, cur, out);
        }
    }
    rec(0, r, &mut cur, &mut out);
    out
}

/// A basis label `(A0 | A1)`: an `n x n` natural matrix and an `n x n` bit matrix.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SuperMatrixIndex {
    n: usize,
    even: Vec<u32>,
    odd: Vec<u8>,
}

impl SuperMatrixIndex {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            even: vec![0; n * n],
            odd: vec![0; n * n],
        }
    }

    /// Builds an index from row lists; odd entries must be 0 or 1.
    pub fn from_rows(even: &[Vec<u32>], odd: &[Vec<u8>]) -> Result<Self> {
        let n = even.len();
        let bad = || Error::BadIndex(format!("{even:?}|{odd:?}"));
        if odd.len() != n || even.iter().any(|r| r.len() != n) {
            return Err(bad());
        }
        if odd.iter().any(|r| r.len() != n || r.iter().any(|&b| b > 1)) {
            return Err(bad());
        }
        Ok(Self {
            n,
            even: even.iter().flatten().copied().collect(),
            odd: odd.iter().flatten().copied().collect(),
        })
    }

    /// The even diagonal matrix `diag(parts)` with zero odd part.
    pub fn diagonal(parts: &[u32]) -> Self {
        let n = parts.len();
        let mut m = Self::zero(n);
        for (i, &p) in parts.iter().enumerate() {
            m.even[i * n + i] = p;
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn even(&self, i: usize, j: usize) -> u32 {
        self.even[i * self.n + j]
    }

    pub fn odd(&self, i: usize, j: usize) -> u8 {
        self.odd[i * self.n + j]
    }

    /// Entry of `A = A0 + A1`.
    pub fn entry(&self, i: usize, j: usize) -> u32 {
        self.even(i, j) + self.odd(i, j) as u32
    }

    pub fn set_even(&mut self, i: usize, j: usize, val: u32) {
        self.even[i * self.n + j] = val;
    }

    pub fn set_odd(&mut self, i: usize, j: usize, bit: u8) {
        assert!(bit <= 1, "odd entries are bits");
        self.odd[i * self.n + j] = bit;
    }

    /// A copy with `delta` added to an even entry; `None` if it would go negative.
    pub fn shift_even(&self, i: usize, j: usize, delta: i64) -> Option<Self> {
        let v = self.even(i, j) as i64 + delta;
        if v < 0 {
            return None;
        }
        let mut out = self.clone();
        out.set_even(i, j, v as u32);
        Some(out)
    }

    /// A copy with `delta` added to an odd entry; `None` unless the result is a bit.
    pub fn shift_odd(&self, i: usize, j: usize, delta: i64) -> Option<Self> {
        let v = self.odd(i, j) as i64 + delta;
        if !(0..=1).contains(&v) {
            return None;
        }
        let mut out = self.clone();
        out.set_odd(i, j, v as u8);
        Some(out)
    }

    pub fn even_rows(&self) -> Vec<Vec<u32>> {
        self.even
            .chunks(self.n.max(1))
            .map(|r| r.to_vec())
            .collect()
    }

    pub fn odd_rows(&self) -> Vec<Vec<u8>> {
        self.odd.chunks(self.n.max(1)).map(|r| r.to_vec()).collect()
    }

    /// `|A*| = sum A0 + sum A1`.
    pub fn size(&self) -> u32 {
        self.even.iter().sum::<u32>() + self.odd.iter().map(|&b| b as u32).sum::<u32>()
    }

    /// Parity: the number of odd entries mod 2.
    pub fn parity(&self) -> u8 {
        (self.odd.iter().map(|&b| b as u32).sum::<u32>() % 2) as u8
    }

    /// Row sums of `A0 + A1`.
    pub fn ro(&self) -> Composition {
        Composition(
            (0..self.n)
                .map(|i| (0..self.n).map(|j| self.entry(i, j)).sum())
                .collect(),
        )
    }

    /// Column sums of `A0 + A1`.
    pub fn co(&self) -> Composition {
        Composition(
            (0..self.n)
                .map(|j| (0..self.n).map(|i| self.entry(i, j)).sum())
                .collect(),
        )
    }

    pub fn has_zero_even_diagonal(&self) -> bool {
        (0..self.n).all(|i| self.even(i, i) == 0)
    }

    /// Adds `diag(parts)` to the even part.
    pub fn plus_diagonal(&self, parts: &[u32]) -> Self {
        let mut out = self.clone();
        for (i, &p) in parts.iter().enumerate() {
            out.even[i * self.n + i] += p;
        }
        out
    }

    /// The standard-element exponent:
    /// `sum_{i>=k, j<l} a_ij a_kl + sum_{i,j} a1_ij a0_ij`.
    pub fn delta(&self) -> u64 {
        let n = self.n;
        let mut s = 0u64;
        for i in 0..n {
            for j in 0..n {
                let a = self.entry(i, j) as u64;
                if a == 0 {
                    continue;
                }
                for k in 0..=i {
                    for l in (j + 1)..n {
                        s += a * self.entry(k, l) as u64;
                    }
                }
            }
        }
        for (e, o) in self.even.iter().zip(&self.odd) {
            s += (*e as u64) * (*o as u64);
        }
        s
    }
}

impl fmt::Debug for SuperMatrixIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for SuperMatrixIndex {
    /// Rows separated by `;`, entries by `,`, the two halves by `|`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows = |v: Vec<String>| v.join(";");
        let even = rows(
            self.even_rows()
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|x| x.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                })
                .collect(),
        );
        let odd = rows(
            self.odd_rows()
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|x| x.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                })
                .collect(),
        );
        write!(f, "({even}|{odd})")
    }
}

impl std::str::FromStr for SuperMatrixIndex {
    type Err = Error;

    /// Parses the `Display` form, e.g. `(1,0;0,0|0,0;0,1)`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadIndex(s.to_string());
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(bad)?;
        let (e, o) = inner.split_once('|').ok_or_else(bad)?;
        let parse_rows = |t: &str| -> Result<Vec<Vec<u32>>> {
            t.split(';')
                .map(|row| {
                    row.split(',')
                        .map(|x| x.trim().parse::<u32>().map_err(|_| bad()))
                        .collect()
                })
                .collect()
        };
        let even = parse_rows(e)?;
        let odd: Vec<Vec<u8>> = parse_rows(o)?
            .into_iter()
            .map(|r| r.into_iter().map(|x| x.min(255) as u8).collect())
            .collect();
        Self::from_rows(&even, &odd).map_err(|_| bad())
    }
}

#[derive(Serialize, Deserialize)]
struct IndexJson {
    even: Vec<Vec<u32>>,
    odd: Vec<Vec<u8>>,
}

impl Serialize for SuperMatrixIndex {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        IndexJson {
            even: self.even_rows(),
            odd: self.odd_rows(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SuperMatrixIndex {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = IndexJson::deserialize(d)?;
        SuperMatrixIndex::from_rows(&j.even, &j.odd).map_err(serde::de::Error::custom)
    }
}

/// Every `(A0 | A1)` with `|A0 + A1| = r`, in canonical order.
pub fn enumerate_basis(n: usize, r: u32) -> Vec<SuperMatrixIndex> {
    assert!(n >= 1, "matrix size must be positive");
    let cells = n * n;
    let mut out = Vec::new();
    let mut cur = SuperMatrixIndex::zero(n);
    fn rec(
        cell: usize,
        left: u32,
        cells: usize,
        cur: &mut SuperMatrixIndex,
        out: &mut Vec<SuperMatrixIndex>,
    ) {
        if cell == cells {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for bit in 0..=1u8 {
            if bit as u32 > left {
                continue;
            }
            cur.odd[cell] = bit;
            for e in 0..=(left - bit as u32) {
                cur.even[cell] = e;
                rec(cell + 1, left - bit as u32 - e, cells, cur, out);
            }
        }
        cur.odd[cell] = 0;
        cur.even[cell] = 0;
    }
    rec(0, r, cells, &mut cur, &mut out);
    out.sort();
    out
}

/// A super composition `(lambda0 | lambda1)` with `lambda1` a bit vector.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SuperComposition {
    pub even: Vec<u32>,
    pub odd: Vec<u8>,
}

impl SuperComposition {
    pub fn parity(&self) -> u8 {
        (self.odd.iter().map(|&b| b as u32).sum::<u32>() % 2) as u8
    }

    /// `lambda0 + lambda1`.
    pub fn total(&self) -> Composition {
        Composition(
            self.even
                .iter()
                .zip(&self.odd)
                .map(|(&e, &o)| e + o as u32)
                .collect(),
        )
    }
}

/// All `(lambda0 | lambda1)` with `lambda0 + lambda1 = mu`; `2^{d(mu)}` of them.
///
/// Ordered by the odd part read as a binary counter, first position lowest.
pub fn j_mu(mu: &Composition) -> Vec<SuperComposition> {
    let support: Vec<usize> = (0..mu.len()).filter(|&i| mu.0[i] > 0).collect();
    (0..(1u64 << support.len()))
        .map(|mask| {
            let mut odd = vec![0u8; mu.len()];
            for (b, &i) in support.iter().enumerate() {
                if mask >> b & 1 == 1 {
                    odd[i] = 1;
                }
            }
            let even = mu.0.iter().zip(&odd).map(|(&m, &o)| m - o as u32).collect();
            SuperComposition { even, odd }
        })
        .collect()
}

/// A weight `v^lambda`, stored by its exponent vector.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightExponent(pub Vec<i64>);

impl WeightExponent {
    /// The simple root `alpha_j = e_j - e_{j+1}` (0-based `j`).
    pub fn simple_root(n: usize, j: usize) -> Self {
        let mut v = vec![0; n];
        v[j] = 1;
        v[j + 1] = -1;
        Self(v)
    }

    pub fn plus(&self, other: &WeightExponent) -> WeightExponent {
        WeightExponent(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn minus(&self, other: &WeightExponent) -> WeightExponent {
        WeightExponent(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

/// `gamma <= omega`: `omega - gamma` is a nonnegative integer combination of simple roots.
pub fn weight_leq(gamma: &WeightExponent, omega: &WeightExponent) -> bool {
    assert_eq!(gamma.0.len(), omega.0.len(), "weights of different rank");
    let mut prefix = 0i64;
    for (w, g) in omega.0.iter().zip(&gamma.0) {
        prefix += w - g;
        if prefix < 0 {
            return false;
        }
    }
    prefix == 0
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(even: &[&[u32]], odd: &[&[u8]]) -> SuperMatrixIndex {
        SuperMatrixIndex::from_rows(
            &even.iter().map(|r| r.to_vec()).collect::<Vec<_>>(),
            &odd.iter().map(|r| r.to_vec()).collect::<Vec<_>>(),
        )
        .unwrap()
    }

    #[test]
    fn compositions() {
        let c = enumerate_compositions(2, 2);
        assert_eq!(
            c,
            vec![
                Composition(vec![0, 2]),
                Composition(vec![1, 1]),
                Composition(vec![2, 0])
            ]
        );
        assert_eq!(enumerate_compositions(1, 5), vec![Composition(vec![5])]);
        assert_eq!(enumerate_compositions(3, 1).len(), 3);
        assert_eq!(
            enumerate_compositions(3, 0),
            vec![Composition(vec![0, 0, 0])]
        );
    }

    #[test]
    fn basis_counts_and_order() {
        let b = enumerate_basis(1, 1);
        assert_eq!(b, vec![m(&[&[0]], &[&[1]]), m(&[&[1]], &[&[0]])]);
        assert_eq!(enumerate_basis(2, 1).len(), 8);
        assert_eq!(enumerate_basis(2, 2).len(), 32);
        let b = enumerate_basis(2, 3);
        assert!(b.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn delta_examples() {
        assert_eq!(m(&[&[0, 1], &[0, 0]], &[&[0, 0], &[0, 0]]).delta(), 0);
        assert_eq!(m(&[&[0, 1], &[1, 0]], &[&[0, 0], &[0, 0]]).delta(), 1);
        assert_eq!(m(&[&[1, 0], &[0, 0]], &[&[1, 0], &[0, 0]]).delta(), 1);
    }

    #[test]
    fn statistics() {
        let a = m(&[&[1, 2], &[0, 0]], &[&[0, 1], &[1, 0]]);
        assert_eq!(a.ro(), Composition(vec![4, 1]));
        assert_eq!(a.co(), Composition(vec![2, 3]));
        assert_eq!(a.size(), 5);
        assert_eq!(a.parity(), 0);
    }

    #[test]
    fn j_mu_examples() {
        let j = j_mu(&Composition(vec![1, 1]));
        assert_eq!(j.len(), 4);
        assert_eq!(j[0].even, vec![1, 1]);
        assert_eq!(j[1].odd, vec![1, 0]);
        assert_eq!(j[2].odd, vec![0, 1]);
        assert_eq!(j[3].even, vec![0, 0]);
        assert_eq!(j_mu(&Composition(vec![2, 0])).len(), 2);
        assert_eq!(j_mu(&Composition(vec![0, 0])).len(), 1);
    }

    #[test]
    fn weight_order() {
        let w = |v: &[i64]| WeightExponent(v.to_vec());
        assert!(weight_leq(&w(&[1, 1]), &w(&[2, 0])));
        assert!(weight_leq(&w(&[1, 1]), &w(&[1, 1])));
        assert!(!weight_leq(&w(&[2, 0]), &w(&[1, 1])));
    }

    #[test]
    fn display_roundtrip() {
        let a = m(&[&[1, 2], &[0, 0]], &[&[0, 1], &[1, 0]]);
        assert_eq!(a.to_string(), "(1,2;0,0|0,1;1,0)");
        assert_eq!(a.to_string().parse::<SuperMatrixIndex>().unwrap(), a);
        let j = serde_json::to_string(&a).unwrap();
        assert_eq!(j, r#"{"even":[[1,2],[0,0]],"odd":[[0,1],[1,0]]}"#);
        assert_eq!(serde_json::from_str::<SuperMatrixIndex>(&j).unwrap(), a);
    }
}
