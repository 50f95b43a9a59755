//! Exact scalars in `v`: Laurent polynomials with rational coefficients and
//! reduced rational functions, plus the quantum integers used throughout.
//!
//! A [`LaurentPoly`] is stored sparsely, keyed by exponent. A [`RatScalar`]
//! is a fraction of two Laurent polynomials kept in a canonical form:
//! numerator and denominator are coprime, the denominator has `v`-valuation
//! zero and constant term `1`. Equality of scalars is therefore structural.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::ParseScalarError;

/// Rational coefficient type.
pub type Coeff = BigRational;

/// A Laurent polynomial in `v` with rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Coeff>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c * v^exp`.
    pub fn monomial(c: i64, exp: i64) -> Self {
        Self::monomial_q(Coeff::from_integer(BigInt::from(c)), exp)
    }

    pub fn monomial_q(c: Coeff, exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    /// `v^exp`.
    pub fn v_pow(exp: i64) -> Self {
        Self::monomial(1, exp)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(c, 0)
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, merging repeats.
    pub fn from_terms<I: IntoIterator<Item = (i64, i64)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in it {
            p.add_term(e, Coeff::from_integer(BigInt::from(c)));
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn coeff(&self, exp: i64) -> Coeff {
        self.terms.get(&exp).cloned().unwrap_or_else(Coeff::zero)
    }

    /// Iterates `(exponent, coefficient)` in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &Coeff)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Lowest exponent with nonzero coefficient.
    pub fn valuation(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// Highest exponent with nonzero coefficient.
    pub fn degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// `Some((c, e))` when the polynomial is the single term `c v^e`.
    pub fn as_monomial(&self) -> Option<(&Coeff, i64)> {
        if self.terms.len() == 1 {
            let (e, c) = self.terms.iter().next().unwrap();
            Some((c, *e))
        } else {
            None
        }
    }

    /// True when every coefficient is an integer, i.e. the value lies in `Z[v, v^-1]`.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn add_term(&mut self, exp: i64, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Multiplies by `v^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    /// Substitutes `v -> v^-1`.
    pub fn bar(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Dense ascending coefficients after dividing out `v^valuation`.
    fn to_dense(&self) -> (i64, Vec<Coeff>) {
        let Some(lo) = self.valuation() else {
            return (0, Vec::new());
        };
        let hi = self.degree().unwrap();
        let mut out = vec![Coeff::zero(); (hi - lo + 1) as usize];
        for (e, c) in &self.terms {
            out[(e - lo) as usize] = c.clone();
        }
        (lo, out)
    }

    fn from_dense(shift: i64, coeffs: &[Coeff]) -> Self {
        let mut terms = BTreeMap::new();
        for (i, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                terms.insert(shift + i as i64, c.clone());
            }
        }
        Self { terms }
    }

    /// Exact division; `None` when `rhs` does not divide `self`.
    pub fn exact_div(&self, rhs: &LaurentPoly) -> Option<LaurentPoly> {
        assert!(!rhs.is_zero(), "division by zero Laurent polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (sa, a) = self.to_dense();
        let (sb, b) = rhs.to_dense();
        let (q, r) = poly_divrem(&a, &b);
        if r.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_dense(sa - sb, &q))
    }

    /// Gcd of the `v`-valuation-free parts, made monic in the top coefficient.
    pub fn gcd(&self, rhs: &LaurentPoly) -> LaurentPoly {
        let (_, a) = self.to_dense();
        let (_, b) = rhs.to_dense();
        Self::from_dense(0, &poly_gcd(a, b))
    }

    /// Exact square root in `Q[v, v^-1]`, if one exists.
    pub fn sqrt(&self) -> Option<LaurentPoly> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        let lo = self.valuation().unwrap();
        let hi = self.degree().unwrap();
        if lo % 2 != 0 || hi % 2 != 0 {
            return None;
        }
        // Square-root by descending coefficient matching.
        let lead = self.coeff(hi);
        let root_lead = rational_sqrt(&lead)?;
        let half_hi = hi / 2;
        let half_lo = lo / 2;
        let mut root = LaurentPoly::monomial_q(root_lead.clone(), half_hi);
        let two_lead = &root_lead * Coeff::from_integer(BigInt::from(2));
        let mut e = half_hi - 1;
        while e >= half_lo {
            let rem = self - &(&root * &root);
            let target = rem.coeff(half_hi + e);
            if !target.is_zero() {
                root.add_term(e, &target / &two_lead);
            }
            e -= 1;
        }
        if &(&root * &root) == self {
            Some(root)
        } else {
            None
        }
    }

    /// Renders in the canonical text form `c*v^k + ...`, highest exponent first.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            out.push_str(&format!("{}*v^{}", c.abs(), e));
        }
        out
    }
}

fn rational_sqrt(c: &Coeff) -> Option<Coeff> {
    if c.is_negative() {
        return None;
    }
    let n = c.numer().sqrt();
    let d = c.denom().sqrt();
    if &(&n * &n) == c.numer() && &(&d * &d) == c.denom() {
        Some(Coeff::new(n, d))
    } else {
        None
    }
}

fn trim(p: &mut Vec<Coeff>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn poly_divrem(a: &[Coeff], b: &[Coeff]) -> (Vec<Coeff>, Vec<Coeff>) {
    let mut r = a.to_vec();
    trim(&mut r);
    let mut b = b.to_vec();
    trim(&mut b);
    assert!(!b.is_empty(), "polynomial division by zero");
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let lead = b.last().unwrap().clone();
    let mut q = vec![Coeff::zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let f = r.last().unwrap() / &lead;
        for (i, bc) in b.iter().enumerate() {
            let t = bc * &f;
            r[shift + i] -= t;
        }
        q[shift] = f;
        trim(&mut r);
        if r.is_empty() {
            break;
        }
    }
    (q, r)
}

fn poly_gcd(mut a: Vec<Coeff>, mut b: Vec<Coeff>) -> Vec<Coeff> {
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let (_, r) = poly_divrem(&a, &b);
        a = b;
        b = r;
    }
    if let Some(lead) = a.last().cloned() {
        for c in a.iter_mut() {
            *c = &*c / &lead;
        }
    }
    a
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c.clone());
        }
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($ty:ty, $tr:ident, $m:ident) => {
        impl $tr<$ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&$ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: &$ty) -> $ty {
                (&self).$m(rhs)
            }
        }
        impl $tr<$ty> for &$ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(LaurentPoly, Add, add);
forward_owned!(LaurentPoly, Sub, sub);
forward_owned!(LaurentPoly, Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

/// `[t] = v^{t-1} + v^{t-3} + ... + v^{1-t}`, with the convention `[0] = 1`.
pub fn qint(t: u32) -> LaurentPoly {
    if t == 0 {
        return LaurentPoly::one();
    }
    let t = t as i64;
    LaurentPoly::from_terms((0..t).map(|k| (t - 1 - 2 * k, 1)))
}

/// `[t]! = [t][t-1]...[1]`, with `[0]! = 1`.
pub fn qfactorial(t: u32) -> LaurentPoly {
    (1..=t).fold(LaurentPoly::one(), |acc, k| &acc * &qint(k))
}

/// `[[k]]_x = 1 + x + ... + x^{k-1}` at `x = v^step`; zero for `k = 0`.
pub fn bracket_geom(k: u32, step: i64) -> LaurentPoly {
    LaurentPoly::from_terms((0..k as i64).map(|i| (i * step, 1)))
}

/// `prod_{t=1}^{u} (v^{p-t} - v^{t-p}) / (v^t - v^{-t})`.
///
/// Zero for `1 <= p <= u`, where the factor `t = p` vanishes. For `p > u`
/// the product is a Laurent polynomial with integer coefficients.
pub fn gauss_binom(p: u32, u: u32) -> LaurentPoly {
    let mut num = LaurentPoly::one();
    let mut den = LaurentPoly::one();
    for t in 1..=u as i64 {
        let p = p as i64;
        num = &num * &(&LaurentPoly::v_pow(p - t) - &LaurentPoly::v_pow(t - p));
        if num.is_zero() {
            return num;
        }
        den = &den * &(&LaurentPoly::v_pow(t) - &LaurentPoly::v_pow(-t));
    }
    num.exact_div(&den)
        .expect("quantum binomial quotient is always exact")
}

/// An element of `Q(v)` in canonical reduced form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatScalar {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl Default for RatScalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl RatScalar {
    pub fn zero() -> Self {
        Self {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_laurent(LaurentPoly::one())
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_laurent(LaurentPoly::constant(c))
    }

    pub fn v_pow(k: i64) -> Self {
        Self::from_laurent(LaurentPoly::v_pow(k))
    }

    pub fn from_laurent(num: LaurentPoly) -> Self {
        Self {
            num,
            den: LaurentPoly::one(),
        }
    }

    /// `num / den`, reduced. Panics on a zero denominator.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        Self::normalized(num, den)
    }

    pub fn numer(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denom(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The value as a Laurent polynomial when the denominator is trivial.
    pub fn as_laurent(&self) -> Option<&LaurentPoly> {
        self.den.is_one().then_some(&self.num)
    }

    /// True when the value lies in `Z[v, v^-1]`.
    pub fn is_integral_laurent(&self) -> bool {
        self.as_laurent().is_some_and(|p| p.is_integral())
    }

    fn normalized(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if let Some((c, e)) = den.as_monomial() {
            let inv = c.recip();
            return Self {
                num: num.shift(-e).scale(&inv),
                den: LaurentPoly::one(),
            };
        }
        let dv = den.valuation().unwrap();
        let mut num = num.shift(-dv);
        let mut den = den.shift(-dv);
        let g = num.gcd(&den);
        if g.degree() != Some(0) {
            num = num.exact_div(&g).expect("gcd divides numerator");
            den = den.exact_div(&g).expect("gcd divides denominator");
            let dv = den.valuation().unwrap();
            num = num.shift(-dv);
            den = den.shift(-dv);
        }
        let lead = den.coeff(0);
        if !lead.is_one() {
            let inv = lead.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        if let Some((c, e)) = den.as_monomial() {
            debug_assert_eq!(e, 0);
            debug_assert!(c.is_one());
            return Self { num, den };
        }
        Self { num, den }
    }

    pub fn inv(&self) -> RatScalar {
        assert!(!self.is_zero(), "inverse of zero");
        Self::normalized(self.den.clone(), self.num.clone())
    }

    pub fn bar(&self) -> RatScalar {
        Self::normalized(self.num.bar(), self.den.bar())
    }

    pub fn pow(&self, k: u32) -> RatScalar {
        let mut acc = RatScalar::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn scale_int(&self, c: i64) -> RatScalar {
        if c == 0 {
            return RatScalar::zero();
        }
        Self {
            num: self.num.scale(&Coeff::from_integer(BigInt::from(c))),
            den: self.den.clone(),
        }
    }

    /// Multiplies by `v^k` without renormalizing the fraction.
    pub fn shift(&self, k: i64) -> RatScalar {
        Self {
            num: self.num.shift(k),
            den: self.den.clone(),
        }
    }

    /// Canonical text form: the Laurent rendering, or `(num)/(den)`.
    pub fn render(&self) -> String {
        if self.den.is_one() {
            self.num.render()
        } else {
            format!("({})/({})", self.num.render(), self.den.render())
        }
    }
}

impl From<LaurentPoly> for RatScalar {
    fn from(p: LaurentPoly) -> Self {
        RatScalar::from_laurent(p)
    }
}

impl fmt::Debug for RatScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Display for RatScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Add<&RatScalar> for &RatScalar {
    type Output = RatScalar;
    fn add(self, rhs: &RatScalar) -> RatScalar {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        if self.den == rhs.den {
            if self.den.is_one() {
                return RatScalar::from_laurent(&self.num + &rhs.num);
            }
            return RatScalar::normalized(&self.num + &rhs.num, self.den.clone());
        }
        RatScalar::normalized(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub<&RatScalar> for &RatScalar {
    type Output = RatScalar;
    fn sub(self, rhs: &RatScalar) -> RatScalar {
        self + &(-rhs)
    }
}

impl Mul<&RatScalar> for &RatScalar {
    type Output = RatScalar;
    fn mul(self, rhs: &RatScalar) -> RatScalar {
        if self.is_zero() || rhs.is_zero() {
            return RatScalar::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatScalar::from_laurent(&self.num * &rhs.num);
        }
        RatScalar::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div<&RatScalar> for &RatScalar {
    type Output = RatScalar;
    fn div(self, rhs: &RatScalar) -> RatScalar {
        assert!(!rhs.is_zero(), "division by zero scalar");
        if self.is_zero() {
            return RatScalar::zero();
        }
        RatScalar::normalized(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Neg for &RatScalar {
    type Output = RatScalar;
    fn neg(self) -> RatScalar {
        RatScalar {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RatScalar {
    type Output = RatScalar;
    fn neg(self) -> RatScalar {
        -&self
    }
}

forward_owned!(RatScalar, Add, add);
forward_owned!(RatScalar, Sub, sub);
forward_owned!(RatScalar, Mul, mul);
forward_owned!(RatScalar, Div, div);

impl AddAssign<&RatScalar> for RatScalar {
    fn add_assign(&mut self, rhs: &RatScalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&RatScalar> for RatScalar {
    fn sub_assign(&mut self, rhs: &RatScalar) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&RatScalar> for RatScalar {
    fn mul_assign(&mut self, rhs: &RatScalar) {
        *self = &*self * rhs;
    }
}

impl PartialOrd for LaurentPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Total order used only to make collections of polynomials deterministic.
impl Ord for LaurentPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.terms.iter().cmp(other.terms.iter())
    }
}

impl FromStr for LaurentPoly {
    type Err = ParseScalarError;

    /// Parses the canonical rendering produced by [`LaurentPoly::render`].
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "0" {
            return Ok(LaurentPoly::zero());
        }
        let err = || ParseScalarError(s.to_string());
        let mut out = LaurentPoly::zero();
        let mut rest = s;
        let mut sign = 1i64;
        if let Some(r) = rest.strip_prefix('-') {
            sign = -1;
            rest = r;
        }
        loop {
            let (term, tail, next_sign) = match (rest.find(" + "), rest.find(" - ")) {
                (None, None) => (rest, "", 1),
                (Some(a), None) => (&rest[..a], &rest[a + 3..], 1),
                (None, Some(b)) => (&rest[..b], &rest[b + 3..], -1),
                (Some(a), Some(b)) if a < b => (&rest[..a], &rest[a + 3..], 1),
                (_, Some(b)) => (&rest[..b], &rest[b + 3..], -1),
            };
            let (c, e) = term.split_once("*v^").ok_or_else(err)?;
            let c: BigRational = c.parse().map_err(|_| err())?;
            let e: i64 = e.parse().map_err(|_| err())?;
            out.add_term(e, c * BigRational::from_integer(BigInt::from(sign)));
            if tail.is_empty() {
                break;
            }
            sign = next_sign;
            rest = tail;
        }
        Ok(out)
    }
}

impl FromStr for RatScalar {
    type Err = ParseScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if let Some(inner) = s.strip_prefix('(') {
            let (num, den) = inner
                .split_once(")/(")
                .ok_or_else(|| ParseScalarError(s.to_string()))?;
            let den = den
                .strip_suffix(')')
                .ok_or_else(|| ParseScalarError(s.to_string()))?;
            let den: LaurentPoly = den.parse()?;
            if den.is_zero() {
                return Err(ParseScalarError(s.to_string()));
            }
            return Ok(RatScalar::new(num.parse()?, den));
        }
        Ok(RatScalar::from_laurent(s.parse()?))
    }
}

impl serde::Serialize for RatScalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.render())
    }
}

impl<'de> serde::Deserialize<'de> for RatScalar {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn qint_values() {
        assert_eq!(qint(0), LaurentPoly::one());
        assert_eq!(qint(1), LaurentPoly::one());
        assert_eq!(qint(3), lp(&[(2, 1), (0, 1), (-2, 1)]));
    }

    #[test]
    fn qfactorial_values() {
        assert_eq!(qfactorial(0), LaurentPoly::one());
        assert_eq!(qfactorial(2), lp(&[(1, 1), (-1, 1)]));
        assert_eq!(
            qfactorial(3),
            lp(&[(2, 1), (0, 1), (-2, 1)]) * lp(&[(1, 1), (-1, 1)])
        );
    }

    #[test]
    fn bracket_geom_values() {
        assert!(bracket_geom(0, 2).is_zero());
        assert_eq!(bracket_geom(3, 2), lp(&[(0, 1), (2, 1), (4, 1)]));
        assert_eq!(bracket_geom(2, -2), lp(&[(0, 1), (-2, 1)]));
    }

    #[test]
    fn gauss_binom_values() {
        assert_eq!(gauss_binom(4, 2), lp(&[(2, 1), (0, 1), (-2, 1)]));
        assert!(gauss_binom(2, 2).is_zero());
        assert_eq!(gauss_binom(5, 1), lp(&[(3, 1), (1, 1), (-1, 1), (-3, 1)]));
        assert!(gauss_binom(0, 0).is_one());
    }

    #[test]
    fn rational_reduction_is_canonical() {
        // (v^2 - 1) / (v^4 - 1) = 1 / (v^2 + 1)
        let a = RatScalar::new(lp(&[(2, 1), (0, -1)]), lp(&[(4, 1), (0, -1)]));
        let b = RatScalar::new(LaurentPoly::one(), lp(&[(2, 1), (0, 1)]));
        assert_eq!(a, b);
        // Denominator normalization: valuation zero, constant term one.
        let c = RatScalar::new(LaurentPoly::one(), lp(&[(3, 2), (1, 4)]));
        assert_eq!(c.denom().valuation(), Some(0));
        assert!(c.denom().coeff(0).is_one());
        assert_eq!(
            &c * &RatScalar::new(lp(&[(3, 2), (1, 4)]), LaurentPoly::one()),
            RatScalar::one()
        );
    }

    #[test]
    fn render_and_parse() {
        let a = RatScalar::new(lp(&[(2, 1), (-2, -3)]), lp(&[(2, 1), (0, 1)]));
        let s = a.render();
        assert_eq!(s, "(1*v^2 - 3*v^-2)/(1*v^2 + 1*v^0)");
        assert_eq!(s.parse::<RatScalar>().unwrap(), a);
        assert_eq!("0".parse::<RatScalar>().unwrap(), RatScalar::zero());
        assert!("v^2".parse::<RatScalar>().is_err());
    }

    #[test]
    fn sqrt_detects_squares() {
        let p = lp(&[(1, 1), (-1, 1)]);
        assert_eq!((&p * &p).sqrt().unwrap(), p);
        assert!(lp(&[(2, 1), (-2, 1)]).sqrt().is_none());
        assert!(qint(3).sqrt().is_none());
    }
}
