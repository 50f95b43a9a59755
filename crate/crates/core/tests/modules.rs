use std::sync::OnceLock;

use proptest::prelude::*;
use queer_schur::combinat::{enumerate_basis, Composition};
use queer_schur::exec::set_parallel;
use queer_schur::laurent::RatScalar;
use queer_schur::qschur::{AlgebraElement, Generator};
use queer_schur::repr::{
    build_block, decompose_block, decompose_module, generate_submodule, raise_to_highest,
    top_weight, ActionTable, DecomposeOptions,
};

fn table_2_2() -> &'static ActionTable {
    static T: OnceLock<ActionTable> = OnceLock::new();
    T.get_or_init(|| ActionTable::new(2, 2))
}

fn table_2_3() -> &'static ActionTable {
    static T: OnceLock<ActionTable> = OnceLock::new();
    T.get_or_init(|| ActionTable::new(2, 3))
}

fn random_vector(n: usize, r: u32) -> impl Strategy<Value = AlgebraElement> {
    let basis = enumerate_basis(n, r);
    let len = basis.len();
    prop::collection::vec((0..len, -3i64..=3), 1..6)
        .prop_map(move |terms| {
            let mut x = AlgebraElement::zero(n, r);
            for (i, c) in terms {
                x.add_term(basis[i].clone(), &RatScalar::from_int(c));
            }
            x
        })
        .prop_filter("nonzero", |x| !x.is_zero())
}

fn raising(n: usize) -> Vec<Generator> {
    (1..n)
        .flat_map(|j| [Generator::E(j), Generator::EBar(j)])
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn raising_reaches_the_top_weight(x in random_vector(2, 2)) {
        let t = table_2_2();
        let out = raise_to_highest(t, &x).vector;
        prop_assert!(!out.is_zero());
        for g in raising(2) {
            prop_assert!(t.apply(g, &out).is_zero());
        }
        prop_assert!(out.terms().all(|(a, _)| a.ro() == top_weight(2, 2)));
    }

    #[test]
    fn raising_ends_on_highest_weight_vectors(x in random_vector(2, 3)) {
        let t = table_2_3();
        let out = raise_to_highest(t, &x).vector;
        prop_assert!(!out.is_zero());
        for g in raising(2) {
            prop_assert!(t.apply(g, &out).is_zero());
        }
    }

    #[test]
    fn generated_submodules_are_closed(x in random_vector(2, 2)) {
        let t = table_2_2();
        let m = generate_submodule(t, &[x], &Generator::primitive_set(2));
        prop_assert!(m.is_closed(t, &Generator::full_set(2)));
        let dims: usize = m.weight_dims().values().sum();
        prop_assert_eq!(dims, m.dim());
    }
}

#[test]
fn derived_generators_do_not_change_closures() {
    let t = table_2_3();
    let block = build_block(2, 3, &Composition(vec![2, 1]));
    for x in block.vectors().iter().step_by(5) {
        let a = generate_submodule(t, std::slice::from_ref(x), &Generator::primitive_set(2));
        let b = generate_submodule(t, std::slice::from_ref(x), &Generator::full_set(2));
        assert_eq!(a.dim(), b.dim());
        assert!(a.span().same_span(&b.span()));
    }
}

#[test]
fn certificates_do_not_depend_on_parallelism() {
    let t = table_2_2();
    set_parallel(false);
    let seq = serde_json::to_string(&decompose_module(t, DecomposeOptions::default())).unwrap();
    set_parallel(true);
    let par = serde_json::to_string(&decompose_module(t, DecomposeOptions::default())).unwrap();
    assert_eq!(seq, par);
}

#[test]
fn certificate_json_shape() {
    let cert = decompose_block(
        table_2_2(),
        &Composition(vec![1, 1]),
        DecomposeOptions::default(),
    );
    let v = serde_json::to_value(&cert).unwrap();
    assert_eq!(v["mu"], serde_json::json!([1, 1]));
    assert_eq!(v["r"], 2);
    assert_eq!(v["direct_sum"], true);
    assert_eq!(v["seed"], 20_240_601);
    let summands = v["summands"].as_array().unwrap();
    assert_eq!(summands.len(), 2);
    for s in summands {
        for key in ["seed", "dim", "hw_dim", "parity"] {
            assert!(s.get(key).is_some(), "missing {key}");
        }
        assert_eq!(s["dim"], 8);
        assert_eq!(s["hw_dim"], 2);
    }
    assert!(v["checks"].is_object());
}

#[test]
fn extra_summands_at_rank_three() {
    let cert = decompose_block(
        table_2_3(),
        &Composition(vec![1, 2]),
        DecomposeOptions::default(),
    );
    assert!(!cert.pass);
    assert!(cert.complete);
    assert_eq!(
        cert.summands.iter().map(|s| s.dim).collect::<Vec<_>>(),
        vec![12, 12]
    );
    assert_eq!(cert.extra_summands.len(), 2);
    for e in &cert.extra_summands {
        assert_eq!(
            (e.highest_weight.as_slice(), e.dim, e.hw_dim),
            ([2, 1].as_slice(), 4, 2)
        );
    }
}
