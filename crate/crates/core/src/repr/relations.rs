//! The defining relations of the quantum queer supergroup, checked as
//! operator identities on the regular module.

use std::fmt;

use serde::Serialize;

use crate::combinat::{enumerate_basis, SuperMatrixIndex};
use crate::exec::par_map;
use crate::laurent::{LaurentPoly, RatScalar};
use crate::qschur::{AlgebraElement, Generator};

use super::ActionTable;

use Generator::{EBar, FBar, KBar, KInv, E, F, K};

/// The six groups of defining relations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RelationFamily {
    /// `K_i`, `K_i^{-1}` and `Kbar_i` among themselves.
    Cartan,
    /// `K_i` against the raising and lowering generators.
    Weight,
    /// `Kbar_i` against the raising and lowering generators.
    OddCartan,
    /// Commutators of raising with lowering generators.
    Commutator,
    /// Quadratic relations among raising, or among lowering, generators.
    Quadratic,
    Serre,
}

impl RelationFamily {
    pub const ALL: [RelationFamily; 6] = [
        RelationFamily::Cartan,
        RelationFamily::Weight,
        RelationFamily::OddCartan,
        RelationFamily::Commutator,
        RelationFamily::Quadratic,
        RelationFamily::Serre,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            RelationFamily::Cartan => "cartan",
            RelationFamily::Weight => "weight",
            RelationFamily::OddCartan => "odd-cartan",
            RelationFamily::Commutator => "commutator",
            RelationFamily::Quadratic => "quadratic",
            RelationFamily::Serre => "serre",
        }
    }
}

impl fmt::Display for RelationFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `sum_i c_i w_i = 0`, with words applied rightmost first.
#[derive(Clone, Debug)]
pub struct RelationInstance {
    pub family: RelationFamily,
    pub terms: Vec<(RatScalar, Vec<Generator>)>,
}

impl fmt::Display for RelationInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (c, w)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            let word = if w.is_empty() {
                "1".to_string()
            } else {
                w.iter()
                    .map(|g| g.to_string())
                    .collect::<Vec<_>>()
                    .join("*")
            };
            write!(f, "({c})*{word}")?;
        }
        f.write_str(" = 0")
    }
}

struct Builder {
    family: RelationFamily,
    out: Vec<RelationInstance>,
}

impl Builder {
    fn push(&mut self, terms: Vec<(RatScalar, Vec<Generator>)>) {
        self.out.push(RelationInstance {
            family: self.family,
            terms,
        });
    }
}

fn int(c: i64) -> RatScalar {
    RatScalar::from_int(c)
}

fn vp(k: i64) -> RatScalar {
    RatScalar::v_pow(k)
}

fn ratio(num: &[(i64, i64)], den: &[(i64, i64)]) -> RatScalar {
    RatScalar::new(
        LaurentPoly::from_terms(num.iter().copied()),
        LaurentPoly::from_terms(den.iter().copied()),
    )
}

/// `1 / (v - v^{-1})`.
fn inv_v_diff() -> RatScalar {
    ratio(&[(0, 1)], &[(1, 1), (-1, -1)])
}

/// `(v - v^{-1}) / (v + v^{-1})`.
fn odd_square_ratio() -> RatScalar {
    ratio(&[(1, 1), (-1, -1)], &[(1, 1), (-1, 1)])
}

/// `x y - c y x`.
fn twisted(x: Generator, y: Generator, c: RatScalar) -> Vec<(RatScalar, Vec<Generator>)> {
    vec![(int(1), vec![x, y]), (-c, vec![y, x])]
}

/// Every relation instance for rank `n`.
pub fn relation_instances(n: usize) -> Vec<RelationInstance> {
    let mut all = Vec::new();
    let one = int(1);

    let mut b = Builder {
        family: RelationFamily::Cartan,
        out: Vec::new(),
    };
    for i in 1..=n {
        b.push(vec![(one.clone(), vec![K(i), KInv(i)]), (-&one, vec![])]);
        b.push(vec![(one.clone(), vec![KInv(i), K(i)]), (-&one, vec![])]);
        for j in i + 1..=n {
            b.push(twisted(K(i), K(j), one.clone()));
        }
        for j in 1..=n {
            b.push(twisted(K(i), KBar(j), one.clone()));
        }
        for j in i..=n {
            let mut t = vec![
                (one.clone(), vec![KBar(i), KBar(j)]),
                (one.clone(), vec![KBar(j), KBar(i)]),
            ];
            if i == j {
                let c = ratio(&[(0, 2)], &[(2, 1), (-2, -1)]);
                t.push((-&c, vec![K(i), K(i)]));
                t.push((c, vec![KInv(i), KInv(i)]));
            }
            b.push(t);
        }
    }
    all.append(&mut b.out);

    b.family = RelationFamily::Weight;
    for i in 1..=n {
        for j in 1..n {
            let e = (i == j) as i64 - (i == j + 1) as i64;
            b.push(twisted(K(i), E(j), vp(e)));
            b.push(twisted(K(i), EBar(j), vp(e)));
            b.push(twisted(K(i), F(j), vp(-e)));
            b.push(twisted(K(i), FBar(j), vp(-e)));
        }
    }
    all.append(&mut b.out);

    b.family = RelationFamily::OddCartan;
    let v = vp(1);
    for i in 1..=n {
        if i < n {
            let mut t = twisted(KBar(i), E(i), v.clone());
            t.push((-&one, vec![EBar(i), KInv(i)]));
            b.push(t);
            let mut t = twisted(KBar(i), F(i), v.clone());
            t.push((one.clone(), vec![FBar(i), K(i)]));
            b.push(t);
            let mut t = twisted(KBar(i), EBar(i), -&v);
            t.push((-&one, vec![E(i), KInv(i)]));
            b.push(t);
            let mut t = twisted(KBar(i), FBar(i), -&v);
            t.push((-&one, vec![F(i), K(i)]));
            b.push(t);
        }
        if i > 1 {
            let h = i - 1;
            b.push(vec![
                (v.clone(), vec![KBar(i), E(h)]),
                (-&one, vec![E(h), KBar(i)]),
                (one.clone(), vec![KInv(i), EBar(h)]),
            ]);
            b.push(vec![
                (v.clone(), vec![KBar(i), F(h)]),
                (-&one, vec![F(h), KBar(i)]),
                (-&one, vec![K(i), FBar(h)]),
            ]);
            b.push(vec![
                (v.clone(), vec![KBar(i), EBar(h)]),
                (one.clone(), vec![EBar(h), KBar(i)]),
                (-&one, vec![KInv(i), E(h)]),
            ]);
            b.push(vec![
                (v.clone(), vec![KBar(i), FBar(h)]),
                (one.clone(), vec![FBar(h), KBar(i)]),
                (-&one, vec![K(i), F(h)]),
            ]);
        }
        for j in (1..n).filter(|&j| j != i && j + 1 != i) {
            b.push(twisted(KBar(i), E(j), one.clone()));
            b.push(twisted(KBar(i), F(j), one.clone()));
            b.push(twisted(KBar(i), EBar(j), -&one));
            b.push(twisted(KBar(i), FBar(j), -&one));
        }
    }
    all.append(&mut b.out);

    b.family = RelationFamily::Commutator;
    let d = inv_v_diff();
    let vd = &vp(1) - &vp(-1);
    for i in 1..n {
        for j in 1..n {
            let mut t = twisted(E(i), F(j), one.clone());
            if i == j {
                t.push((-&d, vec![K(i), KInv(i + 1)]));
                t.push((d.clone(), vec![KInv(i), K(i + 1)]));
            }
            b.push(t);
            let mut t = twisted(EBar(i), FBar(j), -&one);
            if i == j {
                t.push((-&d, vec![K(i), K(i + 1)]));
                t.push((d.clone(), vec![KInv(i), KInv(i + 1)]));
                t.push((-&vd, vec![KBar(i), KBar(i + 1)]));
            }
            b.push(t);
            let mut t = twisted(E(i), FBar(j), one.clone());
            if i == j {
                t.push((-&one, vec![KInv(i + 1), KBar(i)]));
                t.push((one.clone(), vec![KBar(i + 1), KInv(i)]));
            }
            b.push(t);
            let mut t = twisted(EBar(i), F(j), one.clone());
            if i == j {
                t.push((-&one, vec![K(i + 1), KBar(i)]));
                t.push((one.clone(), vec![KBar(i + 1), K(i)]));
            }
            b.push(t);
        }
    }
    all.append(&mut b.out);

    b.family = RelationFamily::Quadratic;
    let s = odd_square_ratio();
    for i in 1..n {
        b.push(vec![
            (one.clone(), vec![EBar(i), EBar(i)]),
            (s.clone(), vec![E(i), E(i)]),
        ]);
        b.push(vec![
            (one.clone(), vec![FBar(i), FBar(i)]),
            (-&s, vec![F(i), F(i)]),
        ]);
        for j in 1..n {
            let gap = i.abs_diff(j);
            if gap != 1 {
                b.push(twisted(E(i), EBar(j), one.clone()));
                b.push(twisted(F(i), FBar(j), one.clone()));
            }
            if gap > 1 && i < j {
                b.push(twisted(E(i), E(j), one.clone()));
                b.push(twisted(F(i), F(j), one.clone()));
                b.push(twisted(EBar(i), EBar(j), -&one));
                b.push(twisted(FBar(i), FBar(j), -&one));
            }
        }
        if i + 1 < n {
            let k = i + 1;
            let mut t = twisted(E(i), E(k), v.clone());
            t.extend([
                (-&one, vec![EBar(i), EBar(k)]),
                (-&v, vec![EBar(k), EBar(i)]),
            ]);
            b.push(t);
            let mut t = twisted(E(i), EBar(k), v.clone());
            t.extend([
                (-&one, vec![EBar(i), E(k)]),
                (v.clone(), vec![E(k), EBar(i)]),
            ]);
            b.push(t);
            let mut t = twisted(F(i), F(k), v.clone());
            t.extend([
                (one.clone(), vec![FBar(i), FBar(k)]),
                (v.clone(), vec![FBar(k), FBar(i)]),
            ]);
            b.push(t);
            let mut t = twisted(F(i), FBar(k), v.clone());
            t.extend([
                (-&one, vec![FBar(i), F(k)]),
                (v.clone(), vec![F(k), FBar(i)]),
            ]);
            b.push(t);
        }
    }
    all.append(&mut b.out);

    b.family = RelationFamily::Serre;
    let vs = &vp(1) + &vp(-1);
    for i in 1..n {
        for j in [i.wrapping_sub(1), i + 1] {
            if !(1..n).contains(&j) {
                continue;
            }
            for (x, y) in [(E(i), E(j)), (F(i), F(j)), (E(i), EBar(j)), (F(i), FBar(j))] {
                b.push(vec![
                    (one.clone(), vec![x, x, y]),
                    (-&vs, vec![x, y, x]),
                    (one.clone(), vec![y, x, x]),
                ]);
            }
        }
    }
    all.append(&mut b.out);
    all
}

/// A relation that fails on one basis vector.
#[derive(Clone, Debug, Serialize)]
pub struct RelationFailure {
    pub family: RelationFamily,
    pub relation: String,
    pub basis: SuperMatrixIndex,
    pub residual: AlgebraElement,
}

#[derive(Clone, Debug, Serialize)]
pub struct FamilyTally {
    pub family: RelationFamily,
    pub instances: usize,
    pub failures: usize,
}

/// Outcome of [`check_relations`].
#[derive(Clone, Debug, Serialize)]
pub struct RelationReport {
    pub n: usize,
    pub r: u32,
    pub basis_size: usize,
    pub families: Vec<FamilyTally>,
    pub failures: Vec<RelationFailure>,
}

impl RelationReport {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn instances(&self) -> usize {
        self.families.iter().map(|f| f.instances).sum()
    }
}

/// Applies both sides of every relation instance to every basis vector.
pub fn check_relations(table: &ActionTable) -> RelationReport {
    let (n, r) = (table.n(), table.r());
    let basis = enumerate_basis(n, r);
    let instances = relation_instances(n);
    let per_instance = par_map(&instances, |rel| {
        basis
            .iter()
            .filter_map(|a| {
                let res = table.apply_combination(&rel.terms, &AlgebraElement::basis(a));
                (!res.is_zero()).then(|| RelationFailure {
                    family: rel.family,
                    relation: rel.to_string(),
                    basis: a.clone(),
                    residual: res,
                })
            })
            .collect::<Vec<_>>()
    });
    let families = RelationFamily::ALL
        .iter()
        .map(|&fam| {
            let mine: Vec<_> = instances
                .iter()
                .zip(&per_instance)
                .filter(|(rel, _)| rel.family == fam)
                .collect();
            FamilyTally {
                family: fam,
                instances: mine.len(),
                failures: mine.iter().filter(|(_, f)| !f.is_empty()).count(),
            }
        })
        .collect();
    RelationReport {
        n,
        r,
        basis_size: basis.len(),
        families,
        failures: per_instance.into_iter().flatten().collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_family_has_instances_at_rank_three() {
        let rels = relation_instances(3);
        for fam in RelationFamily::ALL {
            assert!(rels.iter().any(|r| r.family == fam), "{fam}");
        }
    }

    #[test]
    fn rank_one_has_only_cartan_relations() {
        let rels = relation_instances(1);
        assert!(rels.iter().all(|r| r.family == RelationFamily::Cartan));
        assert_eq!(rels.len(), 4);
    }

    #[test]
    fn relations_hold_at_2_1() {
        let report = check_relations(&ActionTable::new(2, 1));
        assert!(report.pass(), "{:?}", report.failures.first());
    }
}
