//! Comparison of the closed action formulas with the oracle.

use serde::Serialize;

use crate::combinat::{enumerate_basis, SuperMatrixIndex};
use crate::error::Result;
use crate::exec::par_map;
use crate::qschur::{act, AlgebraElement, Generator};

use super::Oracle;

#[derive(Clone, Debug, Serialize)]
pub struct Mismatch {
    pub generator: String,
    pub basis: SuperMatrixIndex,
    pub formula: AlgebraElement,
    pub oracle: AlgebraElement,
}

#[derive(Clone, Debug, Serialize)]
pub struct OracleReport {
    pub n: usize,
    pub r: u32,
    pub generators: Vec<String>,
    pub basis_size: usize,
    pub comparisons: usize,
    pub mismatches: Vec<Mismatch>,
}

impl OracleReport {
    pub fn pass(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares every generator in `gens` on every basis vector.
pub fn compare_actions(oracle: &Oracle, gens: &[Generator]) -> Result<OracleReport> {
    let basis = enumerate_basis(oracle.n(), oracle.r());
    let jobs: Vec<(Generator, SuperMatrixIndex)> = gens
        .iter()
        .flat_map(|&g| basis.iter().map(move |a| (g, a.clone())))
        .collect();
    let results = par_map(&jobs, |(g, a)| -> Result<Option<Mismatch>> {
        let formula = act(*g, &AlgebraElement::basis(a));
        let expected = oracle.act_generator(*g, a)?;
        Ok((formula != expected).then(|| Mismatch {
            generator: g.to_string(),
            basis: a.clone(),
            formula,
            oracle: expected,
        }))
    });
    let mut mismatches = Vec::new();
    for m in results {
        mismatches.extend(m?);
    }
    Ok(OracleReport {
        n: oracle.n(),
        r: oracle.r(),
        generators: gens.iter().map(|g| g.to_string()).collect(),
        basis_size: basis.len(),
        comparisons: jobs.len(),
        mismatches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn agreement_at_2_1() {
        let o = Oracle::new(2, 1, 4).unwrap();
        let rep = compare_actions(&o, &Generator::full_set(2)).unwrap();
        assert!(rep.pass(), "{:?}", rep.mismatches);
        assert_eq!((rep.basis_size, rep.comparisons), (8, 80));
    }
}
