//! Permutations of `{0, .., r-1}` in one-line notation.

use std::fmt;

/// `w` is stored as `[w(0), .., w(r-1)]`. Products compose right to left:
/// `(u * w)(i) = u(w(i))`, so right multiplication by `s_i` swaps the
/// entries at positions `i` and `i + 1`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm(Vec<u8>);

impl Perm {
    pub fn identity(r: usize) -> Self {
        Self((0..r as u8).collect())
    }

    /// Panics unless `images` is a permutation of `0..len`.
    pub fn from_images(images: Vec<u8>) -> Self {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            assert!(
                (x as usize) < images.len() && !seen[x as usize],
                "not a permutation: {images:?}"
            );
            seen[x as usize] = true;
        }
        Self(images)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[u8] {
        &self.0
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// `self * other`.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&i| self.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut out = vec![0u8; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            out[x as usize] = i as u8;
        }
        Perm(out)
    }

    /// Coxeter length: the number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.0;
        let mut l = 0;
        for i in 0..w.len() {
            for j in (i + 1)..w.len() {
                if w[i] > w[j] {
                    l += 1;
                }
            }
        }
        l
    }

    /// `self * s_i`.
    pub fn times_simple(&self, i: usize) -> Perm {
        let mut w = self.0.clone();
        w.swap(i, i + 1);
        Perm(w)
    }

    /// `l(self * s_i) < l(self)`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.0[i] > self.0[i + 1]
    }

    /// `l(s_i * self) < l(self)`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        let inv = self.inverse();
        inv.0[i] > inv.0[i + 1]
    }

    /// A reduced word `[i1, .., ik]` with `self = s_{i1} .. s_{ik}`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut word = Vec::new();
        'outer: loop {
            for i in 0..w.degree().saturating_sub(1) {
                if w.has_right_descent(i) {
                    word.push(i);
                    w = w.times_simple(i);
                    continue 'outer;
                }
            }
            break;
        }
        word.reverse();
        word
    }

    /// All permutations of `r` letters, sorted.
    pub fn all(r: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut cur: Vec<u8> = (0..r as u8).collect();
        permute(&mut cur, 0, &mut out);
        out.sort();
        out
    }
}

fn permute(cur: &mut Vec<u8>, k: usize, out: &mut Vec<Perm>) {
    if k == cur.len() {
        out.push(Perm(cur.clone()));
        return;
    }
    for i in k..cur.len() {
        cur.swap(k, i);
        permute(cur, k + 1, out);
        cur.swap(k, i);
    }
}

/// Consecutive position blocks `[start, end)` for a composition.
pub fn blocks(parts: &[u32]) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(parts.len());
    let mut start = 0usize;
    for &p in parts {
        out.push((start, start + p as usize));
        start += p as usize;
    }
    out
}

/// Block label of every position.
pub fn block_of(parts: &[u32]) -> Vec<usize> {
    let mut out = Vec::new();
    for (b, &p) in parts.iter().enumerate() {
        out.extend(std::iter::repeat_n(b, p as usize));
    }
    out
}

/// The Young subgroup permuting each block of `parts` among itself.
pub fn young_subgroup(parts: &[u32]) -> Vec<Perm> {
    let r: usize = parts.iter().map(|&p| p as usize).sum();
    let label = block_of(parts);
    Perm::all(r)
        .into_iter()
        .filter(|w| (0..r).all(|i| label[w.apply(i)] == label[i]))
        .collect()
}

/// Minimal-length representatives of the right cosets `S_nu w`.
pub fn distinguished_right(nu: &[u32], within: &[Perm]) -> Vec<Perm> {
    let label = block_of(nu);
    within
        .iter()
        .filter(|w| {
            (0..label.len().saturating_sub(1))
                .all(|i| label[i] != label[i + 1] || !w.has_left_descent(i))
        })
        .cloned()
        .collect()
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|x| (x + 1).to_string()).collect();
        write!(f, "[{}]", s.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_words_multiply_back() {
        for w in Perm::all(4) {
            let word = w.reduced_word();
            assert_eq!(word.len(), w.length());
            let mut x = Perm::identity(4);
            for &i in &word {
                x = x.times_simple(i);
            }
            assert_eq!(x, w);
        }
    }

    #[test]
    fn composition_and_inverse() {
        let a = Perm::from_images(vec![1, 2, 0]);
        let b = Perm::from_images(vec![0, 2, 1]);
        assert_eq!(a.compose(&b).images(), &[1, 0, 2]);
        assert!(a.compose(&a.inverse()).is_identity());
    }

    #[test]
    fn young_and_cosets() {
        assert_eq!(young_subgroup(&[2, 1]).len(), 2);
        assert_eq!(young_subgroup(&[1, 1, 1]).len(), 1);
        let s3 = Perm::all(3);
        assert_eq!(distinguished_right(&[2, 1], &s3).len(), 3);
        assert_eq!(distinguished_right(&[1, 1, 1], &s3).len(), 6);
    }
}
