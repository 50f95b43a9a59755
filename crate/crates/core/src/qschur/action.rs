//! Closed formulas for the generator actions on the `Phi` basis.

use crate::combinat::SuperMatrixIndex;
use crate::laurent::{qfactorial, LaurentPoly, RatScalar};

use super::coeffs::CoefficientTable;
use super::{AlgebraElement, Generator};

fn push(
    out: &mut AlgebraElement,
    target: Option<SuperMatrixIndex>,
    coeff: LaurentPoly,
    scale: &RatScalar,
) {
    if let Some(t) = target {
        if !coeff.is_zero() {
            out.add_term(t, &(scale * &RatScalar::from_laurent(coeff)));
        }
    }
}

fn row_sum_after(a: &SuperMatrixIndex, h: usize, k: usize) -> i64 {
    (k + 1..a.n()).map(|j| a.entry(h, j) as i64).sum()
}

fn row_sum_before(a: &SuperMatrixIndex, h: usize, k: usize) -> i64 {
    (0..k).map(|u| a.entry(h, u) as i64).sum()
}

/// Odd entries preceding `(n, k)` in column-major order.
fn odd_prefix_before_bottom(a: &SuperMatrixIndex, k: usize) -> u32 {
    let n = a.n();
    let left: u32 = (0..k)
        .flat_map(|j| (0..n).map(move |i| (i, j)))
        .map(|(i, j)| a.odd(i, j) as u32)
        .sum();
    let above: u32 = (0..n - 1).map(|i| a.odd(i, k) as u32).sum();
    left + above
}

fn e_on_basis(
    t: &CoefficientTable,
    h: usize,
    a: &SuperMatrixIndex,
    c: &RatScalar,
    out: &mut AlgebraElement,
) {
    let lam_h = a.ro().0[h] as i64;
    for k in 0..a.n() {
        let b = row_sum_after(a, h, k);
        let shift = a
            .shift_even(h + 1, k, -1)
            .and_then(|x| x.shift_even(h, k, 1));
        let e1 = -lam_h + 2 * b + 2 * a.odd(h + 1, k) as i64;
        push(out, shift, t.even_shift.eval(a.even(h, k) + 1).shift(e1), c);

        let odd_move = a.shift_odd(h + 1, k, -1).and_then(|x| x.shift_odd(h, k, 1));
        push(out, odd_move, LaurentPoly::v_pow(-lam_h + 2 * b), c);

        let merge = a
            .shift_even(h, k, 2)
            .and_then(|x| x.shift_odd(h, k, -1))
            .and_then(|x| x.shift_odd(h + 1, k, -1));
        let e3 = -lam_h + 2 * b - 2;
        push(
            out,
            merge,
            t.e_odd_merge.eval(a.entry(h, k) + 1).shift(e3),
            c,
        );
    }
}

fn f_on_basis(
    t: &CoefficientTable,
    h: usize,
    a: &SuperMatrixIndex,
    c: &RatScalar,
    out: &mut AlgebraElement,
) {
    let lam = a.ro().0[h + 1] as i64;
    for k in 0..a.n() {
        let b = row_sum_before(a, h + 1, k);
        let above = a.entry(h, k) as i64;
        let shift = a
            .shift_even(h, k, -1)
            .and_then(|x| x.shift_even(h + 1, k, 1));
        push(
            out,
            shift,
            t.even_shift.eval(a.even(h + 1, k) + 1).shift(-lam + 2 * b),
            c,
        );

        let odd_move = a.shift_odd(h, k, -1).and_then(|x| x.shift_odd(h + 1, k, 1));
        push(
            out,
            odd_move,
            LaurentPoly::v_pow(-lam + 2 * b + 2 * above - 2),
            c,
        );

        let merge = a
            .shift_even(h + 1, k, 2)
            .and_then(|x| x.shift_odd(h, k, -1))
            .and_then(|x| x.shift_odd(h + 1, k, -1));
        let e3 = -lam + 2 * b + 2 * above - 4;
        push(
            out,
            merge,
            -t.f_odd_merge.eval(a.entry(h + 1, k) + 1).shift(e3),
            c,
        );
    }
}

fn kbar_last_on_basis(
    t: &CoefficientTable,
    a: &SuperMatrixIndex,
    c: &RatScalar,
    out: &mut AlgebraElement,
) {
    let m = a.n() - 1;
    let pre = -(a.ro().0[m] as i64) + 1;
    for k in 0..a.n() {
        let b = row_sum_after(a, m, k);
        let sign = if (odd_prefix_before_bottom(a, k) + a.parity() as u32).is_multiple_of(2) {
            1
        } else {
            -1
        };
        let to_odd = a.shift_even(m, k, -1).and_then(|x| x.shift_odd(m, k, 1));
        push(out, to_odd, LaurentPoly::monomial(sign, pre + 2 * b), c);

        let to_even = a.shift_even(m, k, 1).and_then(|x| x.shift_odd(m, k, -1));
        let coeff =
            &t.kbar_even.eval(a.entry(m, k)).shift(pre + 2 * b) * &LaurentPoly::constant(-sign);
        push(out, to_even, coeff, c);
    }
}

/// Applies one of `K_h^{+-1}`, `E_h`, `F_h`, `Kbar_n` using the given bracket table.
pub fn act_generator_with(
    table: &CoefficientTable,
    g: Generator,
    x: &AlgebraElement,
) -> AlgebraElement {
    let n = x.n();
    g.validate(n).expect("generator out of range");
    assert!(
        g.is_primitive(n),
        "{g} has no closed formula; use act_derived"
    );
    let mut out = AlgebraElement::zero(n, x.r());
    for (a, c) in x.terms() {
        match g {
            Generator::K(i) => {
                out.add_term(a.clone(), &(c * &RatScalar::v_pow(a.ro().0[i - 1] as i64)))
            }
            Generator::KInv(i) => out.add_term(
                a.clone(),
                &(c * &RatScalar::v_pow(-(a.ro().0[i - 1] as i64))),
            ),
            Generator::E(h) => e_on_basis(table, h - 1, a, c, &mut out),
            Generator::F(h) => f_on_basis(table, h - 1, a, c, &mut out),
            Generator::KBar(_) => kbar_last_on_basis(table, a, c, &mut out),
            _ => unreachable!(),
        }
    }
    out
}

/// Applies one of `K_h^{+-1}`, `E_h`, `F_h`, `Kbar_n`.
pub fn act_generator(g: Generator, x: &AlgebraElement) -> AlgebraElement {
    act_generator_with(&CoefficientTable::frozen(), g, x)
}

fn lin(terms: &[(RatScalar, AlgebraElement)], n: usize, r: u32) -> AlgebraElement {
    let mut out = AlgebraElement::zero(n, r);
    for (c, x) in terms {
        out.axpy(c, x);
    }
    out
}

/// Applies `Ebar_j`, `Fbar_j` or `Kbar_j` (`j < n`) by expressing it through
/// the even generators and `Kbar_{j+1}`.
pub fn act_derived(g: Generator, x: &AlgebraElement) -> AlgebraElement {
    let (n, r) = (x.n(), x.r());
    g.validate(n).expect("generator out of range");
    let v = RatScalar::v_pow(1);
    let vi = RatScalar::v_pow(-1);
    let w = |word: &[Generator]| apply_word(word, x);
    use Generator::*;
    match g {
        EBar(j) => lin(
            &[
                (-&v, w(&[K(j + 1), KBar(j + 1), E(j)])),
                (vi, w(&[E(j), K(j + 1), KBar(j + 1)])),
            ],
            n,
            r,
        ),
        FBar(j) => lin(
            &[
                (v.clone(), w(&[KInv(j + 1), KBar(j + 1), F(j)])),
                (-&vi, w(&[F(j), KInv(j + 1), KBar(j + 1)])),
            ],
            n,
            r,
        ),
        KBar(j) if j < n => lin(
            &[
                (
                    v.clone(),
                    w(&[E(j), KInv(j + 1), KBar(j + 1), F(j), K(j + 1)]),
                ),
                (-&vi, w(&[E(j), F(j), KInv(j + 1), KBar(j + 1), K(j + 1)])),
                (-&v, w(&[KInv(j + 1), KBar(j + 1), F(j), E(j), K(j + 1)])),
                (vi, w(&[F(j), KInv(j + 1), KBar(j + 1), E(j), K(j + 1)])),
                (RatScalar::one(), w(&[KInv(j), KBar(j + 1), K(j + 1)])),
            ],
            n,
            r,
        ),
        _ => panic!("{g} is acted on by act_generator"),
    }
}

/// Applies any generator.
pub fn act(g: Generator, x: &AlgebraElement) -> AlgebraElement {
    if g.is_primitive(x.n()) {
        act_generator(g, x)
    } else {
        act_derived(g, x)
    }
}

/// Applies `word[0] .. word[last]` to `x`, rightmost first.
pub fn apply_word(word: &[Generator], x: &AlgebraElement) -> AlgebraElement {
    word.iter().rev().fold(x.clone(), |acc, &g| act(g, &acc))
}

/// `F_j^{(p)} x = F_j^p x / [p]!`.
pub fn divided_power_f(j: usize, p: u32, x: &AlgebraElement) -> AlgebraElement {
    let mut y = x.clone();
    for _ in 0..p {
        y = act_generator(Generator::F(j), &y);
    }
    y.scale(&RatScalar::from_laurent(qfactorial(p)).inv())
}
