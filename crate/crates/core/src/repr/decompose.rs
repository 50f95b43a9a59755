//! Block decomposition of the regular module into irreducible summands.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::combinat::{
    enumerate_basis, enumerate_compositions, j_mu, Composition, SuperComposition, SuperMatrixIndex,
};
use crate::exec::par_map;
use crate::laurent::RatScalar;
use crate::linalg::{certify_direct_sum, echelonize, DirectSumCertificate, SpanBasis};
use crate::qschur::{AlgebraElement, Generator};

use super::complete::{cartan_closure, extra_summands, highest_weight_dims, ExtraSummand};
use super::{
    closure_generators, generate_submodule, kbar_square_scalar, raise_to_highest, top_weight,
    ActionTable, Submodule,
};

/// Seed of the pseudorandom sample vectors unless one is given.
pub const DEFAULT_SEED: u64 = 20_240_601;

const DETERMINISTIC_SAMPLE: usize = 8;
const RANDOM_SAMPLE: usize = 16;

/// The block `Q^mu`: the span of all `Phi_{A*}` with `co(A) = mu`.
pub fn build_block(n: usize, r: u32, mu: &Composition) -> Submodule {
    let basis = enumerate_basis(n, r);
    Submodule::from_indices(n, r, basis.iter().filter(|a| &a.co() == mu))
}

/// `A_lambda = (sum lambda0_i E_{1,i} | sum lambda1_i E_{1,i})`.
pub fn seed_index(lambda: &SuperComposition) -> SuperMatrixIndex {
    let n = lambda.even.len();
    let mut even = vec![vec![0u32; n]; n];
    let mut odd = vec![vec![0u8; n]; n];
    even[0].clone_from(&lambda.even);
    odd[0].clone_from(&lambda.odd);
    SuperMatrixIndex::from_rows(&even, &odd).expect("seed rows are well formed")
}

/// One summand of a block.
#[derive(Clone, Debug, Serialize)]
pub struct Summand {
    /// `A_lambda`; at `r = 1` the summand is generated by `Phi_{A} + sign * Kbar_1 Phi_{A}`.
    pub seed: SuperMatrixIndex,
    pub lambda: SuperComposition,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sign: Option<i8>,
    pub dim: usize,
    pub hw_dim: usize,
    pub parity: u8,
    pub weight_dims: BTreeMap<String, usize>,
    /// Closed under every generator, derived ones included.
    pub closed: bool,
    /// Outside the top weight, no nonzero vector is killed by all raising operators.
    pub joint_kernel_trivial: bool,
    /// The top weight space has no proper nonzero `Kbar_1`-stable subspace.
    pub hw_irreducible: bool,
    /// Raising each sample vector and regenerating gives back the summand.
    pub regenerated: bool,
    pub samples: usize,
    /// `F_i M_lambda = M_{lambda - alpha_i}` whenever both are weights.
    pub f_spans_next: bool,
    /// The same with `F_i M_lambda` closed under every `Kbar_j` first.
    pub cartan_f_spans_next: bool,
    /// `Kbar_1` eigenvalue on the top weight line at `r = 1`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kbar_eigenvalue: Option<i8>,
    #[serde(skip)]
    pub module: Submodule,
}

impl Summand {
    pub fn pass(&self, expected_hw_dim: usize) -> bool {
        self.closed
            && self.joint_kernel_trivial
            && self.hw_irreducible
            && self.regenerated
            && self.hw_dim == expected_hw_dim
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BlockChecks {
    /// The block is closed under every generator.
    pub block_closed: bool,
    pub summand_count: usize,
    pub expected_summand_count: usize,
    pub block_hw_dim: usize,
    pub expected_block_hw_dim: usize,
    pub expected_hw_dim: usize,
    pub summands_pass: bool,
    pub f_spans_next: bool,
    pub cartan_f_spans_next: bool,
    /// At `r = 1`: the `Kbar_1` eigenvalues are exactly `{+1, -1}`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eigenvalues_pm_one: Option<bool>,
}

/// Decomposition of one block with everything needed to re-check it.
#[derive(Clone, Debug, Serialize)]
pub struct DecompositionCertificate {
    pub n: usize,
    pub mu: Vec<u32>,
    pub r: u32,
    pub block_dim: usize,
    pub summands: Vec<Summand>,
    pub direct_sum: bool,
    pub direct_sum_detail: DirectSumCertificate,
    pub checks: BlockChecks,
    /// Joint kernel dimensions of the raising operators at weights other than the top one.
    pub extra_highest_weights: BTreeMap<String, usize>,
    /// Summands generated by those vectors.
    pub extra_summands: Vec<ExtraSummand>,
    /// Seeded and extra summands together.
    pub complete_direct_sum: DirectSumCertificate,
    /// Every summand certified irreducible and all of them summing directly to the block.
    pub complete: bool,
    pub seed: u64,
    pub pass: bool,
}

/// Options shared by [`decompose_block`] and [`decompose_module`].
#[derive(Clone, Copy, Debug)]
pub struct DecomposeOptions {
    pub seed: u64,
    pub include_derived: bool,
}

impl Default for DecomposeOptions {
    fn default() -> Self {
        Self {
            seed: DEFAULT_SEED,
            include_derived: false,
        }
    }
}

fn expected_summands(mu: &Composition, r: u32) -> usize {
    match r {
        0 => 1,
        1 => 2,
        _ => 1 << (mu.support_size() - 1),
    }
}

fn expected_hw_dim(r: u32) -> usize {
    if r >= 2 {
        2
    } else {
        1
    }
}

fn joint_kernel_trivial(table: &ActionTable, module: &Submodule, top: &Composition) -> bool {
    highest_weight_dims(table, module).keys().all(|w| w == top)
}

fn hw_irreducible(table: &ActionTable, module: &Submodule, top: &Composition) -> bool {
    let r = table.r();
    let hw = module.weight_vectors(top);
    if r < 2 {
        return hw.len() == 1;
    }
    if hw.len() != 2 {
        return false;
    }
    let s = kbar_square_scalar(r);
    let stable = hw
        .iter()
        .all(|x| module.contains(&table.apply(Generator::KBar(1), x)));
    let squares = hw
        .iter()
        .all(|x| table.apply_word(&[Generator::KBar(1), Generator::KBar(1)], x) == x.scale(&s));
    let no_root = s.as_laurent().is_some_and(|p| p.sqrt().is_none());
    stable && squares && no_root
}

/// `F_i M_lambda = M_{lambda - alpha_i}` for all weights where both sides are nonzero.
/// With `saturate`, the left side is first closed under the `Kbar_j`.
fn lowering_spans(table: &ActionTable, module: &Submodule, saturate: bool) -> bool {
    let n = table.n();
    module.weight_dims().keys().all(|w| {
        (0..n.saturating_sub(1)).all(|i| {
            if w.0[i] == 0 {
                return true;
            }
            let mut lower = w.0.clone();
            lower[i] -= 1;
            lower[i + 1] += 1;
            let Some(target) = module.weight_space(&Composition(lower)) else {
                return true;
            };
            let images: Vec<AlgebraElement> = module
                .weight_vectors(w)
                .iter()
                .map(|x| table.apply(Generator::F(i + 1), x))
                .collect();
            let got = if saturate {
                cartan_closure(table, &images)
            } else {
                echelonize(images.iter().map(|x| x.as_vec()))
            };
            got.same_span(target)
        })
    })
}

fn stream_id(mu: &Composition, k: usize) -> u64 {
    mu.0.iter().fold(k as u64, |h, &p| {
        h.wrapping_mul(1_000_003).wrapping_add(p as u64 + 1)
    })
}

fn sample_vectors(module: &Submodule, rng: &mut ChaCha8Rng) -> Vec<AlgebraElement> {
    let basis = module.vectors();
    let step = basis.len().div_ceil(DETERMINISTIC_SAMPLE).max(1);
    let mut out: Vec<AlgebraElement> = basis.iter().step_by(step).cloned().collect();
    if basis.is_empty() {
        return out;
    }
    while out.len() < basis.len().min(DETERMINISTIC_SAMPLE) + RANDOM_SAMPLE {
        let mut x = AlgebraElement::zero(module.n(), module.r());
        for b in &basis {
            x.axpy(&RatScalar::from_int(rng.gen_range(-3..=3)), b);
        }
        if !x.is_zero() {
            out.push(x);
        }
    }
    out
}

fn regenerated(
    table: &ActionTable,
    module: &Submodule,
    gens: &[Generator],
    top: &Composition,
    rng: &mut ChaCha8Rng,
) -> (bool, usize) {
    let samples = sample_vectors(module, rng);
    let ok = par_map(&samples, |x| {
        let raised = raise_to_highest(table, x).vector;
        raised.terms().all(|(a, _)| &a.ro() == top)
            && generate_submodule(table, &[raised], gens).same_span(module)
    });
    (ok.iter().all(|&b| b), samples.len())
}

struct SeedSpec {
    index: SuperMatrixIndex,
    lambda: SuperComposition,
    sign: Option<i8>,
    vector: AlgebraElement,
}

fn seeds_for(table: &ActionTable, mu: &Composition) -> Vec<SeedSpec> {
    let r = table.r();
    let lambdas = j_mu(mu);
    if r == 1 {
        let lambda = lambdas
            .into_iter()
            .find(|l| l.parity() == 0)
            .expect("J_mu has an even member");
        let index = seed_index(&lambda);
        let m = AlgebraElement::basis(&index);
        let km = table.apply(Generator::KBar(1), &m);
        return [1i8, -1]
            .into_iter()
            .map(|sign| SeedSpec {
                index: index.clone(),
                lambda: lambda.clone(),
                sign: Some(sign),
                vector: m.add(&km.scale(&RatScalar::from_int(sign as i64))),
            })
            .collect();
    }
    lambdas
        .into_iter()
        .filter(|l| l.parity() == 0)
        .map(|lambda| {
            let index = seed_index(&lambda);
            SeedSpec {
                vector: AlgebraElement::basis(&index),
                index,
                lambda,
                sign: None,
            }
        })
        .collect()
}

fn kbar_eigenvalue(table: &ActionTable, x: &AlgebraElement) -> Option<i8> {
    let y = table.apply(Generator::KBar(1), x);
    [1i8, -1]
        .into_iter()
        .find(|&t| y == x.scale(&RatScalar::from_int(t as i64)))
}

/// Decomposes the block `Q^mu` into the submodules generated by its seeds
/// and certifies the result.
pub fn decompose_block(
    table: &ActionTable,
    mu: &Composition,
    opts: DecomposeOptions,
) -> DecompositionCertificate {
    let (n, r) = (table.n(), table.r());
    let block = build_block(n, r, mu);
    let top = top_weight(n, r);
    let gens = closure_generators(n, opts.include_derived);
    let full = Generator::full_set(n);
    let seeds = seeds_for(table, mu);

    let summands: Vec<Summand> =
        par_map(&seeds.iter().enumerate().collect::<Vec<_>>(), |&(k, s)| {
            let module = generate_submodule(table, std::slice::from_ref(&s.vector), &gens);
            let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
            rng.set_stream(stream_id(mu, k));
            let (regen, samples) = regenerated(table, &module, &gens, &top, &mut rng);
            Summand {
                seed: s.index.clone(),
                lambda: s.lambda.clone(),
                sign: s.sign,
                dim: module.dim(),
                hw_dim: module.weight_dim(&top),
                parity: s.lambda.parity(),
                weight_dims: module
                    .weight_dims()
                    .into_iter()
                    .map(|(w, d)| (w.to_string(), d))
                    .collect(),
                closed: module.is_closed(table, &full),
                joint_kernel_trivial: joint_kernel_trivial(table, &module, &top),
                hw_irreducible: hw_irreducible(table, &module, &top),
                regenerated: regen,
                samples,
                f_spans_next: lowering_spans(table, &module, false),
                cartan_f_spans_next: lowering_spans(table, &module, true),
                kbar_eigenvalue: if r == 1 {
                    kbar_eigenvalue(table, &s.vector)
                } else {
                    None
                },
                module,
            }
        });

    let block_span = block.span();
    let spans: Vec<SpanBasis<SuperMatrixIndex>> =
        summands.iter().map(|s| s.module.span()).collect();
    let direct = certify_direct_sum(&spans, &block_span);
    let extra_highest_weights: BTreeMap<String, usize> = highest_weight_dims(table, &block)
        .into_iter()
        .filter(|(w, _)| w != &top)
        .map(|(w, d)| (w.to_string(), d))
        .collect();
    let extras = if extra_highest_weights.is_empty() {
        Vec::new()
    } else {
        extra_summands(table, &block, &top, &gens)
    };
    let all_spans: Vec<_> = spans
        .iter()
        .cloned()
        .chain(extras.iter().map(|e| e.module.span()))
        .collect();
    let complete_direct_sum = certify_direct_sum(&all_spans, &block_span);
    let hw = expected_hw_dim(r);
    let eigenvalues_pm_one = (r == 1).then(|| {
        let mut evs: Vec<Option<i8>> = summands.iter().map(|s| s.kbar_eigenvalue).collect();
        evs.sort();
        evs == vec![Some(-1), Some(1)]
    });
    let checks = BlockChecks {
        block_closed: block.is_closed(table, &full),
        summand_count: summands.len(),
        expected_summand_count: expected_summands(mu, r),
        block_hw_dim: block.weight_dim(&top),
        expected_block_hw_dim: if r == 0 { 1 } else { 1 << mu.support_size() },
        expected_hw_dim: hw,
        summands_pass: summands.iter().all(|s| s.pass(hw)),
        f_spans_next: summands.iter().all(|s| s.f_spans_next),
        cartan_f_spans_next: summands.iter().all(|s| s.cartan_f_spans_next),
        eigenvalues_pm_one,
    };
    let pass = direct.pass
        && checks.block_closed
        && checks.summand_count == checks.expected_summand_count
        && checks.block_hw_dim == checks.expected_block_hw_dim
        && checks.summands_pass
        && eigenvalues_pm_one.unwrap_or(true);
    let complete = complete_direct_sum.pass
        && checks.block_closed
        && summands.iter().all(|s| s.pass(hw))
        && extras.iter().all(|e| e.pass());
    DecompositionCertificate {
        n,
        mu: mu.0.clone(),
        r,
        block_dim: block.dim(),
        summands,
        direct_sum: direct.pass,
        direct_sum_detail: direct,
        checks,
        extra_highest_weights,
        extra_summands: extras,
        complete_direct_sum,
        complete,
        seed: opts.seed,
        pass,
    }
}

/// Decomposition of the whole regular module, block by block.
#[derive(Clone, Debug, Serialize)]
pub struct ModuleCertificate {
    pub n: usize,
    pub r: u32,
    pub basis_size: usize,
    pub total_block_dim: usize,
    pub summand_count: usize,
    pub expected_summand_count: usize,
    pub direct_sum: bool,
    pub direct_sum_detail: DirectSumCertificate,
    /// Seeded plus extra summands over all blocks.
    pub complete_summand_count: usize,
    pub complete: bool,
    pub blocks: Vec<DecompositionCertificate>,
    pub seed: u64,
    pub pass: bool,
}

pub fn decompose_module(table: &ActionTable, opts: DecomposeOptions) -> ModuleCertificate {
    let (n, r) = (table.n(), table.r());
    let mus = enumerate_compositions(n, r);
    let blocks = par_map(&mus, |mu| decompose_block(table, mu, opts));
    let basis = enumerate_basis(n, r);
    let whole = Submodule::from_indices(n, r, basis.iter()).span();
    let spans: Vec<_> = blocks
        .iter()
        .flat_map(|b| b.summands.iter().map(|s| s.module.span()))
        .collect();
    let direct = certify_direct_sum(&spans, &whole);
    let summand_count = spans.len();
    let expected_summand_count = mus.iter().map(|mu| expected_summands(mu, r)).sum();
    let total_block_dim = blocks.iter().map(|b| b.block_dim).sum();
    let pass = direct.pass
        && blocks.iter().all(|b| b.pass)
        && summand_count == expected_summand_count
        && total_block_dim == basis.len();
    let complete_summand_count =
        summand_count + blocks.iter().map(|b| b.extra_summands.len()).sum::<usize>();
    let complete = blocks.iter().all(|b| b.complete) && total_block_dim == basis.len();
    ModuleCertificate {
        n,
        r,
        basis_size: basis.len(),
        total_block_dim,
        summand_count,
        expected_summand_count,
        direct_sum: direct.pass,
        direct_sum_detail: direct,
        complete_summand_count,
        complete,
        blocks,
        seed: opts.seed,
        pass,
    }
}
