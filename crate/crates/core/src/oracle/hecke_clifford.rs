//! Arithmetic in the Hecke-Clifford superalgebra in the normal form `T_w c^beta`.
//!
//! Coefficients are Laurent polynomials in `v` with `q = v^2`. The Clifford
//! monomial `c^beta = c_1^{b_1} .. c_r^{b_r}` is encoded as the bitmask `beta`
//! (bit `i` for the 0-based generator `c_i`).

use std::collections::BTreeMap;

use crate::laurent::LaurentPoly;

use super::perm::Perm;

/// `q = v^2`.
pub fn q() -> LaurentPoly {
    LaurentPoly::v_pow(2)
}

fn q_minus_one() -> LaurentPoly {
    LaurentPoly::from_terms([(2, 1), (0, -1)])
}

/// `c^a * c^b = sign * c^{a xor b}`.
pub fn clifford_mono_mul(a: u32, b: u32) -> (i64, u32) {
    let mut swaps = 0u32;
    let mut rest = b;
    while rest != 0 {
        let j = rest.trailing_zeros();
        swaps += (a >> (j + 1)).count_ones();
        rest &= rest - 1;
    }
    swaps += (a & b).count_ones();
    (if swaps.is_multiple_of(2) { 1 } else { -1 }, a ^ b)
}

/// An element of the Clifford algebra.
pub type CliffordElement = BTreeMap<u32, LaurentPoly>;

fn cliff_add(out: &mut CliffordElement, mask: u32, c: LaurentPoly) {
    if c.is_zero() {
        return;
    }
    let e = out.entry(mask).or_default();
    *e += &c;
    if e.is_zero() {
        out.remove(&mask);
    }
}

fn cliff_mul(a: &CliffordElement, b: &CliffordElement) -> CliffordElement {
    let mut out = CliffordElement::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            let (s, m) = clifford_mono_mul(*ma, *mb);
            cliff_add(
                &mut out,
                m,
                (ca * cb).scale(&num_rational::BigRational::from_integer(s.into())),
            );
        }
    }
    out
}

/// The automorphism swapping `c_i` and `c_{i+1}`, on a monomial.
fn sigma_mono(mask: u32, i: usize) -> (i64, u32) {
    let bi = mask >> i & 1;
    let bj = mask >> (i + 1) & 1;
    let swapped = (mask & !(0b11 << i)) | (bi << (i + 1)) | (bj << i);
    (if bi == 1 && bj == 1 { -1 } else { 1 }, swapped)
}

/// The correction term `D_i(c^mask)` in `c^mask T_i = T_i sigma_i(c^mask) + D_i(c^mask)`.
fn crossing_defect(mask: u32, i: usize) -> CliffordElement {
    if mask >> i & 1 == 0 {
        return CliffordElement::new();
    }
    let prefix = mask & ((1u32 << i) - 1);
    let suffix = mask & !((1u32 << (i + 1)) - 1);
    let mut left = CliffordElement::new();
    left.insert(prefix, LaurentPoly::one());
    let mut mid = CliffordElement::new();
    mid.insert(1 << i, q_minus_one());
    mid.insert(1 << (i + 1), -q_minus_one());
    let (s, sm) = sigma_mono(suffix, i);
    let mut right = CliffordElement::new();
    right.insert(sm, LaurentPoly::constant(s));
    cliff_mul(&cliff_mul(&left, &mid), &right)
}

/// An element `sum coeff * T_w c^beta`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HcElement {
    r: usize,
    terms: BTreeMap<(Perm, u32), LaurentPoly>,
}

impl HcElement {
    pub fn zero(r: usize) -> Self {
        Self {
            r,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(r: usize) -> Self {
        Self::basis(Perm::identity(r), 0)
    }

    /// `T_w c^mask`.
    pub fn basis(w: Perm, mask: u32) -> Self {
        let r = w.degree();
        let mut e = Self::zero(r);
        e.add_term(w, mask, LaurentPoly::one());
        e
    }

    pub fn t(w: Perm) -> Self {
        Self::basis(w, 0)
    }

    /// The Clifford generator `c_i` (0-based).
    pub fn c(r: usize, i: usize) -> Self {
        Self::basis(Perm::identity(r), 1 << i)
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Perm, u32), &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, w: Perm, mask: u32, c: LaurentPoly) {
        if c.is_zero() {
            return;
        }
        let key = (w, mask);
        if let Some(e) = self.terms.get_mut(&key) {
            *e += &c;
            if e.is_zero() {
                self.terms.remove(&key);
            }
        } else {
            self.terms.insert(key, c);
        }
    }

    pub fn add(&self, other: &HcElement) -> HcElement {
        let mut out = self.clone();
        for ((w, m), c) in &other.terms {
            out.add_term(w.clone(), *m, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &LaurentPoly) -> HcElement {
        let mut out = HcElement::zero(self.r);
        for ((w, m), x) in &self.terms {
            out.add_term(w.clone(), *m, x * c);
        }
        out
    }

    /// `Some(p)` when every term has Clifford degree of parity `p`.
    pub fn parity(&self) -> Option<u8> {
        let mut it = self.terms.keys().map(|(_, m)| (m.count_ones() % 2) as u8);
        let first = it.next().unwrap_or(0);
        it.all(|p| p == first).then_some(first)
    }

    /// `self * T_i`.
    pub fn mul_t(&self, i: usize) -> HcElement {
        let mut out = HcElement::zero(self.r);
        for ((w, m), c) in &self.terms {
            let (s, sm) = sigma_mono(*m, i);
            let cs = c.scale(&num_rational::BigRational::from_integer(s.into()));
            let ws = w.times_simple(i);
            if w.has_right_descent(i) {
                out.add_term(ws, sm, &cs * &q());
                out.add_term(w.clone(), sm, &cs * &q_minus_one());
            } else {
                out.add_term(ws, sm, cs);
            }
            for (dm, dc) in crossing_defect(*m, i) {
                out.add_term(w.clone(), dm, c * &dc);
            }
        }
        out
    }

    /// `self * T_w`.
    pub fn mul_t_perm(&self, w: &Perm) -> HcElement {
        w.reduced_word()
            .into_iter()
            .fold(self.clone(), |acc, i| acc.mul_t(i))
    }

    /// `self * c^mask`.
    pub fn mul_clifford(&self, mask: u32) -> HcElement {
        let mut out = HcElement::zero(self.r);
        for ((w, m), c) in &self.terms {
            let (s, nm) = clifford_mono_mul(*m, mask);
            out.add_term(
                w.clone(),
                nm,
                c.scale(&num_rational::BigRational::from_integer(s.into())),
            );
        }
        out
    }

    pub fn mul(&self, other: &HcElement) -> HcElement {
        assert_eq!(self.r, other.r, "Hecke-Clifford elements of different rank");
        let mut out = HcElement::zero(self.r);
        let mut cached: Option<(&Perm, HcElement)> = None;
        for ((u, m), c) in &other.terms {
            let prod = match &cached {
                Some((cu, p)) if *cu == u => p.clone(),
                _ => {
                    let p = self.mul_t_perm(u);
                    cached = Some((u, p.clone()));
                    p
                }
            };
            for ((w, mm), x) in &prod.mul_clifford(*m).scale(c).terms {
                out.add_term(w.clone(), *mm, x.clone());
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(r: usize, i: usize) -> HcElement {
        HcElement::t(Perm::identity(r).times_simple(i))
    }

    #[test]
    fn quadratic_relation() {
        let t = s(2, 0);
        let lhs = t.mul(&t);
        let rhs = t.scale(&q_minus_one()).add(&HcElement::one(2).scale(&q()));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn clifford_relations() {
        let c1 = HcElement::c(2, 0);
        let c2 = HcElement::c(2, 1);
        assert_eq!(
            c1.mul(&c1),
            HcElement::one(2).scale(&LaurentPoly::constant(-1))
        );
        assert_eq!(c1.mul(&c2), c2.mul(&c1).scale(&LaurentPoly::constant(-1)));
    }

    #[test]
    fn crossing_relations() {
        let t = s(2, 0);
        let c1 = HcElement::c(2, 0);
        let c2 = HcElement::c(2, 1);
        assert_eq!(t.mul(&c1), c2.mul(&t));
        let rhs = c1.mul(&t).add(
            &c1.add(&c2.scale(&LaurentPoly::constant(-1)))
                .scale(&-q_minus_one()),
        );
        assert_eq!(t.mul(&c2), rhs);
    }

    #[test]
    fn braid_relation() {
        let a = s(3, 0);
        let b = s(3, 1);
        assert_eq!(a.mul(&b).mul(&a), b.mul(&a).mul(&b));
    }

    #[test]
    fn associativity_exhaustive_r2() {
        let mut basis = Vec::new();
        for w in Perm::all(2) {
            for m in 0..4u32 {
                basis.push(HcElement::basis(w.clone(), m));
            }
        }
        for a in &basis {
            for b in &basis {
                for c in &basis {
                    assert_eq!(a.mul(b).mul(c), a.mul(&b.mul(c)));
                }
            }
        }
    }
}
