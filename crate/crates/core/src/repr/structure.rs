//! Structural properties of the regular module checked at fixed `(n, r)`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::combinat::{enumerate_basis, enumerate_compositions, Composition, SuperMatrixIndex};
use crate::laurent::{gauss_binom, qfactorial, LaurentPoly, RatScalar};
use crate::qschur::{kappa, AlgebraElement, Generator};

use super::decompose::{decompose_module, DecomposeOptions, ModuleCertificate};
use super::{kbar_square_scalar, top_weight, ActionTable};

const GAUSS_RANGE: u32 = 12;

/// One named property with its failures.
#[derive(Clone, Debug, Serialize)]
pub struct StructureCheck {
    pub name: &'static str,
    pub instances: usize,
    pub failures: Vec<String>,
}

impl StructureCheck {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            instances: 0,
            failures: Vec::new(),
        }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct StructureReport {
    pub n: usize,
    pub r: u32,
    pub checks: Vec<StructureCheck>,
}

impl StructureReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass())
    }
}

fn vectors_of_weight(n: usize, r: u32, w: &Composition) -> Vec<SuperMatrixIndex> {
    enumerate_basis(n, r)
        .into_iter()
        .filter(|a| &a.ro() == w)
        .collect()
}

fn f_power(table: &ActionTable, i: usize, p: u32, x: &AlgebraElement) -> AlgebraElement {
    (0..p).fold(x.clone(), |y, _| table.apply(Generator::F(i), &y))
}

/// `F_i^{(p)} x`.
pub fn divided_f(table: &ActionTable, i: usize, p: u32, x: &AlgebraElement) -> AlgebraElement {
    f_power(table, i, p, x).scale(&RatScalar::from_laurent(qfactorial(p)).inv())
}

/// `(v^{d+1-p} - v^{-d-1+p}) / (v - v^{-1})` for `d = lambda_i - lambda_{i+1}`.
pub fn divided_power_coefficient(d: i64, p: u32) -> RatScalar {
    let e = d + 1 - p as i64;
    RatScalar::new(
        LaurentPoly::from_terms([(e, 1), (-e, -1)]),
        LaurentPoly::from_terms([(1, 1), (-1, -1)]),
    )
}

/// `E_i F_i^{(p)} m = c F_i^{(p-1)} m` on the top weight space, for `1 <= p <= r + 1`.
pub fn check_divided_powers(table: &ActionTable) -> StructureCheck {
    let (n, r) = (table.n(), table.r());
    let top = top_weight(n, r);
    let mut out = StructureCheck::new("divided-power-recursion");
    for a in vectors_of_weight(n, r, &top) {
        let m = AlgebraElement::basis(&a);
        for i in 1..n {
            let d = top.0[i - 1] as i64 - top.0[i] as i64;
            for p in 1..=r + 1 {
                let lhs = table.apply(Generator::E(i), &divided_f(table, i, p, &m));
                let rhs = divided_f(table, i, p - 1, &m).scale(&divided_power_coefficient(d, p));
                out.record(lhs == rhs, || format!("E{i} F{i}^({p}) on Phi{a}"));
            }
        }
    }
    out
}

fn proportional(lhs: &AlgebraElement, rhs: &AlgebraElement) -> bool {
    let Some((a, c)) = rhs.terms().next() else {
        return lhs.is_zero();
    };
    let t = &lhs.coeff(a) / c;
    *lhs == rhs.scale(&t)
}

/// `F_i F_{i+1}^p F_i^k m` is a multiple of `F_{i+1}^p F_i^{k+1} m` for
/// weight vectors `m` of weight `lambda` with `lambda_{i+1} = 0`,
/// `1 <= p <= k <= lambda_i`.
///
/// Each weight space contributes its basis vectors and, when it has
/// dimension above one, one pseudorandom combination per block.
pub fn check_f_reordering(table: &ActionTable, seed: u64) -> StructureCheck {
    let (n, r) = (table.n(), table.r());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = StructureCheck::new("f-reordering");
    for lambda in enumerate_compositions(n, r) {
        for i in 1..n.saturating_sub(1) {
            if lambda.0[i] != 0 || lambda.0[i - 1] == 0 {
                continue;
            }
            let idxs = vectors_of_weight(n, r, &lambda);
            let mut ms: Vec<(String, AlgebraElement)> = idxs
                .iter()
                .map(|a| (format!("Phi{a}"), AlgebraElement::basis(a)))
                .collect();
            for mu in enumerate_compositions(n, r) {
                let block: Vec<_> = idxs.iter().filter(|a| a.co() == mu).collect();
                if block.len() > 1 {
                    let mut x = AlgebraElement::zero(n, r);
                    for a in &block {
                        x.add_term((*a).clone(), &RatScalar::from_int(rng.gen_range(1..=5)));
                    }
                    ms.push((format!("random vector in block {mu}"), x));
                }
            }
            for (label, m) in &ms {
                for k in 1..=lambda.0[i - 1] {
                    let fik = f_power(table, i, k, m);
                    let fik1 = table.apply(Generator::F(i), &fik);
                    for p in 1..=k {
                        let lhs = table.apply(Generator::F(i), &f_power(table, i + 1, p, &fik));
                        let rhs = f_power(table, i + 1, p, &fik1);
                        out.record(proportional(&lhs, &rhs), || {
                            format!("i={i} p={p} k={k} weight {lambda} on {label}")
                        });
                    }
                }
            }
        }
    }
    out
}

/// At `r = 1`: `Kbar_1` has eigenvalues exactly `+1` and `-1` on the top
/// weight space of every block.
pub fn check_kbar_eigenvalues(table: &ActionTable) -> StructureCheck {
    let (n, r) = (table.n(), table.r());
    let mut out = StructureCheck::new("kbar-eigenvalues");
    if r != 1 {
        return out;
    }
    for a in vectors_of_weight(n, r, &top_weight(n, r)) {
        if a.parity() != 0 {
            continue;
        }
        let m = AlgebraElement::basis(&a);
        let km = table.apply(Generator::KBar(1), &m);
        for t in [1i64, -1] {
            let u = m.add(&km.scale(&RatScalar::from_int(t)));
            let ku = table.apply(Generator::KBar(1), &u);
            out.record(
                !u.is_zero() && ku == u.scale(&RatScalar::from_int(t)),
                || format!("eigenvalue {t} at Phi{a}"),
            );
        }
    }
    out
}

/// `Kbar_1^2` acts on the top weight space as `(v^{2r} - v^{-2r}) / (v^2 - v^{-2})`.
pub fn check_kbar_square(table: &ActionTable) -> StructureCheck {
    let (n, r) = (table.n(), table.r());
    let s = kbar_square_scalar(r);
    let mut out = StructureCheck::new("kbar-square");
    for a in vectors_of_weight(n, r, &top_weight(n, r)) {
        let m = AlgebraElement::basis(&a);
        let k2 = table.apply_word(&[Generator::KBar(1), Generator::KBar(1)], &m);
        out.record(k2 == m.scale(&s), || format!("Kbar1^2 on Phi{a}"));
    }
    out
}

/// Every summand of a certified decomposition has the expected top weight dimension.
pub fn check_hw_dims(cert: &ModuleCertificate) -> StructureCheck {
    let expected = if cert.r >= 2 { 2 } else { 1 };
    let mut out = StructureCheck::new("highest-weight-dims");
    for b in &cert.blocks {
        for s in &b.summands {
            out.record(s.hw_dim == expected, || {
                format!("block {:?} seed {} has hw_dim {}", b.mu, s.seed, s.hw_dim)
            });
        }
    }
    out
}

/// `[K; alpha] = Phi_{(alpha | O)}` for every `alpha`, `[K; 0] = 1` and
/// every `[K; k]` with `|k| <= r` has coefficients in `Z[v, v^-1]`.
pub fn check_kappa(n: usize, r: u32) -> StructureCheck {
    let mut out = StructureCheck::new("kappa-identities");
    for alpha in enumerate_compositions(n, r) {
        let got = kappa(alpha.parts(), r);
        out.record(
            got == AlgebraElement::basis(&SuperMatrixIndex::diagonal(alpha.parts())),
            || format!("[K;{alpha}] differs from Phi of its diagonal"),
        );
    }
    out.record(kappa(&vec![0; n], r) == AlgebraElement::unit(n, r), || {
        "[K;0] is not the unit".into()
    });
    for total in 0..=r {
        for k in enumerate_compositions(n, total) {
            let integral = kappa(k.parts(), r)
                .terms()
                .all(|(_, c)| c.is_integral_laurent());
            out.record(integral, || {
                format!("[K;{k}] has a non-integral coefficient")
            });
        }
    }
    out
}

/// `gauss_binom(p, u)` is in `Z[v, v^-1]` for `u < p <= max_p` and vanishes for `1 <= p <= u`.
pub fn check_gauss_integrality(max_p: u32) -> StructureCheck {
    let mut out = StructureCheck::new("gauss-integrality");
    for p in 1..=max_p {
        for u in 0..=max_p {
            let g = gauss_binom(p, u);
            let ok = if u < p { g.is_integral() } else { g.is_zero() };
            out.record(ok, || format!("gauss_binom({p},{u}) = {}", g.render()));
        }
    }
    out
}

/// All structural checks, including a full decomposition for the dimension count.
pub fn verify_structure_props(table: &ActionTable, opts: DecomposeOptions) -> StructureReport {
    let cert = decompose_module(table, opts);
    StructureReport {
        n: table.n(),
        r: table.r(),
        checks: vec![
            check_divided_powers(table),
            check_f_reordering(table, opts.seed),
            check_kbar_eigenvalues(table),
            check_hw_dims(&cert),
            check_kbar_square(table),
            check_kappa(table.n(), table.r()),
            check_gauss_integrality(GAUSS_RANGE),
        ],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coefficient_is_a_quantum_integer() {
        assert_eq!(
            divided_power_coefficient(3, 1).render(),
            "1*v^2 + 1*v^0 + 1*v^-2"
        );
        assert!(divided_power_coefficient(3, 4).is_zero());
    }

    #[test]
    fn small_structure_report() {
        let t = ActionTable::new(2, 2);
        let report = verify_structure_props(&t, DecomposeOptions::default());
        for c in &report.checks {
            assert!(c.pass(), "{}: {:?}", c.name, c.failures);
        }
    }

    #[test]
    fn kappa_and_gauss() {
        assert!(check_kappa(3, 2).pass());
        let g = check_gauss_integrality(6);
        assert!(g.pass() && g.instances == 42);
    }

    #[test]
    fn eigenvalues_at_rank_one() {
        let c = check_kbar_eigenvalues(&ActionTable::new(2, 1));
        assert!(c.pass() && c.instances == 4, "{c:?}");
    }
}
