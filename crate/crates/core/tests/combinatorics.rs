use queer_schur::combinat::{enumerate_basis, enumerate_compositions, j_mu, SuperMatrixIndex};

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn composition_counts() {
    for n in 1..=4usize {
        for r in 0..=4u32 {
            let c = enumerate_compositions(n, r);
            assert_eq!(c.len() as u64, binomial(r as u64 + n as u64 - 1, r as u64));
            assert!(c.iter().all(|x| x.total() == r));
        }
    }
}

#[test]
fn basis_sizes() {
    assert_eq!(enumerate_basis(2, 1).len(), 8);
    assert_eq!(enumerate_basis(2, 2).len(), 32);
    assert_eq!(enumerate_basis(2, 3).len(), 88);
    assert_eq!(enumerate_basis(3, 2).len(), 162);
}

#[test]
fn basis_is_sorted_unique_and_sized() {
    let b = enumerate_basis(3, 2);
    let unique: std::collections::BTreeSet<_> = b.iter().collect();
    assert_eq!(unique.len(), b.len());
    assert!(b
        .iter()
        .all(|a| a.size() == 2 && a.ro().total() == 2 && a.co().total() == 2));
}

#[test]
fn index_text_round_trips() {
    for a in enumerate_basis(3, 2) {
        assert_eq!(a.to_string().parse::<SuperMatrixIndex>().unwrap(), a);
    }
}

#[test]
fn j_mu_has_two_to_the_support_size() {
    for mu in enumerate_compositions(3, 3) {
        let j = j_mu(&mu);
        assert_eq!(j.len(), 1 << mu.support_size());
        assert!(j.iter().all(|l| l.total() == mu));
        let even = j.iter().filter(|l| l.parity() == 0).count();
        assert_eq!(even * 2, j.len());
    }
}
