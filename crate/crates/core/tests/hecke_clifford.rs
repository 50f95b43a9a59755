use proptest::prelude::*;
use queer_schur::laurent::LaurentPoly;
use queer_schur::oracle::hecke_clifford::q;
use queer_schur::oracle::{HcElement, Perm};

const R: usize = 3;

fn element() -> impl Strategy<Value = HcElement> {
    let perms = Perm::all(R);
    prop::collection::vec((0..perms.len(), 0u32..(1 << R), -2i64..=2, -1i64..=1), 0..4).prop_map(
        move |terms| {
            let mut x = HcElement::zero(R);
            for (w, mask, c, e) in terms {
                x.add_term(perms[w].clone(), mask, LaurentPoly::monomial(c, e));
            }
            x
        },
    )
}

proptest! {
    #[test]
    fn multiplication_is_associative(a in element(), b in element(), c in element()) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn multiplication_distributes(a in element(), b in element(), c in element()) {
        prop_assert_eq!(a.add(&b).mul(&c), a.mul(&c).add(&b.mul(&c)));
    }
}

#[test]
fn length_additive_products() {
    for w in Perm::all(R) {
        for i in 0..R - 1 {
            if !w.has_right_descent(i) {
                let tw = HcElement::t(w.clone());
                assert_eq!(tw.mul_t(i), HcElement::t(w.times_simple(i)));
            }
        }
    }
}

#[test]
fn hecke_quadratic_relation() {
    for i in 0..R - 1 {
        let t = HcElement::one(R).mul_t(i);
        let lhs = t.mul(&t);
        let rhs = t
            .scale(&(&q() - &LaurentPoly::one()))
            .add(&HcElement::one(R).scale(&q()));
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn clifford_generators_square_to_minus_one_and_anticommute() {
    let minus = HcElement::one(R).scale(&LaurentPoly::constant(-1));
    for i in 0..R {
        let ci = HcElement::c(R, i);
        assert_eq!(ci.mul(&ci), minus);
        for j in (i + 1)..R {
            let cj = HcElement::c(R, j);
            assert!(ci.mul(&cj).add(&cj.mul(&ci)).is_zero());
        }
    }
}
