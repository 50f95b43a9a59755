use proptest::prelude::*;
use queer_schur::laurent::{LaurentPoly, RatScalar};
use queer_schur::linalg::{certify_direct_sum, echelonize, kernel, solve_combination, SparseVec};

fn scalar() -> impl Strategy<Value = RatScalar> {
    prop::collection::vec((-2i64..=2, -2i64..=2), 0..3)
        .prop_map(|t| RatScalar::from_laurent(LaurentPoly::from_terms(t)))
}

fn vector() -> impl Strategy<Value = SparseVec<u8>> {
    prop::collection::vec((0u8..6, scalar()), 0..5).prop_map(|terms| {
        let mut v = SparseVec::new();
        for (k, c) in terms {
            v.add_term(k, &c);
        }
        v
    })
}

fn combine(vs: &[SparseVec<u8>], cs: &[RatScalar]) -> SparseVec<u8> {
    let mut out = SparseVec::new();
    for (v, c) in vs.iter().zip(cs) {
        out.axpy(c, v);
    }
    out
}

proptest! {
    #[test]
    fn echelon_span_contains_inputs(vs in prop::collection::vec(vector(), 0..6)) {
        let b = echelonize(&vs);
        prop_assert!(b.dim() <= vs.len().min(6));
        for v in &vs {
            prop_assert!(b.contains(v));
        }
    }

    #[test]
    fn kernel_vectors_vanish(vs in prop::collection::vec(vector(), 0..7)) {
        let ker = kernel(&vs);
        prop_assert_eq!(ker.len() + echelonize(&vs).dim(), vs.len());
        for k in &ker {
            let cs: Vec<RatScalar> = (0..vs.len()).map(|i| k.get(&i).cloned().unwrap_or_default()).collect();
            prop_assert!(combine(&vs, &cs).is_zero());
        }
    }

    #[test]
    fn solve_recovers_targets(vs in prop::collection::vec(vector(), 1..5), cs in prop::collection::vec(scalar(), 5)) {
        let target = combine(&vs, &cs);
        let found = solve_combination(&vs, &target).expect("target lies in the span");
        prop_assert_eq!(combine(&vs, &found), target);
    }

    #[test]
    fn coordinate_blocks_sum_directly(split in 1u8..5) {
        let units = |r: std::ops::Range<u8>| echelonize(&r.map(SparseVec::unit).collect::<Vec<_>>());
        let cert = certify_direct_sum(&[units(0..split), units(split..6)], &units(0..6));
        prop_assert!(cert.pass);
        let overlap = certify_direct_sum(&[units(0..split + 1), units(split..6)], &units(0..6));
        prop_assert!(!overlap.pass);
    }
}
