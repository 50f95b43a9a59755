//! Acceptance criteria, one line each.

use std::process::ExitCode;
use std::time::Instant;

use queer_schur::oracle::{compare_actions, Oracle, DEFAULT_MAX_R};
use queer_schur::qschur::Generator;
use queer_schur::repr::{
    check_divided_powers, check_f_reordering, check_gauss_integrality, check_kappa,
    check_kbar_eigenvalues, check_relations, decompose_module, ActionTable, DecomposeOptions,
    ModuleCertificate, DEFAULT_SEED,
};

struct Outcome {
    pass: bool,
    detail: String,
}

fn tables(sizes: &[(usize, u32)]) -> Vec<ActionTable> {
    sizes.iter().map(|&(n, r)| ActionTable::new(n, r)).collect()
}

fn relations() -> Outcome {
    let mut detail = Vec::new();
    let mut pass = true;
    for t in tables(&[(2, 1), (2, 2), (2, 3), (3, 2)]) {
        let rep = check_relations(&t);
        pass &= rep.pass();
        detail.push(format!(
            "({},{}) {} instances {} failures",
            t.n(),
            t.r(),
            rep.instances(),
            rep.failures.len()
        ));
    }
    Outcome {
        pass,
        detail: detail.join("; "),
    }
}

fn oracle_equivalence() -> Outcome {
    let mut detail = Vec::new();
    let mut pass = true;
    for (n, r) in [(2, 1), (2, 2), (2, 3)] {
        let oracle = Oracle::new(n, r, DEFAULT_MAX_R).expect("within the guard");
        let rep = compare_actions(&oracle, &Generator::full_set(n)).expect("oracle is consistent");
        pass &= rep.pass() && oracle.shapes_independent();
        detail.push(format!(
            "({n},{r}) {} comparisons {} mismatches",
            rep.comparisons,
            rep.mismatches.len()
        ));
    }
    Outcome {
        pass,
        detail: detail.join("; "),
    }
}

fn certificates() -> Vec<ModuleCertificate> {
    tables(&[(2, 1), (2, 2), (2, 3), (3, 2)])
        .iter()
        .map(|t| decompose_module(t, DecomposeOptions::default()))
        .collect()
}

fn decomposition(certs: &[ModuleCertificate]) -> Outcome {
    let mut detail = Vec::new();
    let mut pass = true;
    for c in certs {
        pass &= c.pass;
        let mut line = format!(
            "({},{}) {} {}/{} summands dim {}/{}",
            c.n,
            c.r,
            if c.pass { "ok" } else { "FAIL" },
            c.summand_count,
            c.expected_summand_count,
            c.total_block_dim,
            c.basis_size
        );
        if !c.pass {
            let extra: Vec<String> = c
                .blocks
                .iter()
                .filter(|b| !b.extra_highest_weights.is_empty())
                .map(|b| {
                    format!(
                        "block {:?} has highest weights {:?}",
                        b.mu, b.extra_highest_weights
                    )
                })
                .collect();
            line += &format!(
                " [{}; complete decomposition with {} certified summands: {}]",
                extra.join(", "),
                c.complete_summand_count,
                c.complete
            );
        }
        detail.push(line);
    }
    Outcome {
        pass,
        detail: detail.join("; "),
    }
}

fn hw_dims(certs: &[ModuleCertificate]) -> Outcome {
    let mut pass = true;
    let mut checked = 0;
    for c in certs {
        let expected = if c.r >= 2 { 2 } else { 1 };
        for b in &c.blocks {
            for s in &b.summands {
                checked += 1;
                pass &= s.hw_dim == expected && s.hw_irreducible;
            }
            for e in &b.extra_summands {
                checked += 1;
                pass &= e.hw_dim == expected;
            }
        }
    }
    let eig = check_kbar_eigenvalues(&ActionTable::new(2, 1));
    pass &= eig.pass() && eig.instances > 0;
    Outcome {
        pass,
        detail: format!(
            "{checked} summands; Kbar1 eigenvalues +-1 at (2,1): {}",
            eig.pass()
        ),
    }
}

fn kappa() -> Outcome {
    let a = check_kappa(2, 3);
    let b = check_kappa(3, 3);
    Outcome {
        pass: a.pass() && b.pass(),
        detail: format!(
            "(2,3) {} checks, (3,3) {} checks, {} failures",
            a.instances,
            b.instances,
            a.failures.len() + b.failures.len()
        ),
    }
}

fn gauss() -> Outcome {
    let g = check_gauss_integrality(12);
    Outcome {
        pass: g.pass(),
        detail: format!("{} values, {} failures", g.instances, g.failures.len()),
    }
}

fn divided_powers() -> Outcome {
    let c = check_divided_powers(&ActionTable::new(2, 3));
    Outcome {
        pass: c.pass(),
        detail: format!(
            "(2,3) {} identities, {} failures",
            c.instances,
            c.failures.len()
        ),
    }
}

fn f_reordering() -> Outcome {
    let c = check_f_reordering(&ActionTable::new(3, 3), DEFAULT_SEED);
    Outcome {
        pass: c.pass() && c.instances > 0,
        detail: format!(
            "(3,3) {} instances, {} failures",
            c.instances,
            c.failures.len()
        ),
    }
}

fn lowering(certs: &[ModuleCertificate]) -> Outcome {
    let mut pass = true;
    let mut detail = Vec::new();
    for c in certs.iter().filter(|c| c.n == 2 && c.r >= 2) {
        let summands: Vec<_> = c.blocks.iter().flat_map(|b| &b.summands).collect();
        let literal = summands.iter().filter(|s| s.f_spans_next).count();
        let saturated = summands.iter().filter(|s| s.cartan_f_spans_next).count();
        pass &= literal == summands.len();
        detail.push(format!(
            "({},{}) F_i M_l = M_(l-a_i) in {literal}/{n} summands, after Kbar closure in {saturated}/{n}",
            c.n,
            c.r,
            n = summands.len()
        ));
    }
    Outcome {
        pass,
        detail: detail.join("; "),
    }
}

fn main() -> ExitCode {
    let start = Instant::now();
    let certs = certificates();
    type Criterion<'a> = (&'a str, Box<dyn Fn() -> Outcome + 'a>);
    let criteria: Vec<Criterion> = vec![
        ("relation suite", Box::new(relations)),
        ("oracle equivalence", Box::new(oracle_equivalence)),
        (
            "regular module decomposition",
            Box::new(|| decomposition(&certs)),
        ),
        (
            "highest weight space dimensions",
            Box::new(|| hw_dims(&certs)),
        ),
        ("kappa identities", Box::new(kappa)),
        ("gaussian integrality", Box::new(gauss)),
        ("divided power recursion", Box::new(divided_powers)),
        ("F reordering", Box::new(f_reordering)),
        ("lowering spans next weight", Box::new(|| lowering(&certs))),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let o = run();
        if !o.pass {
            failed += 1;
        }
        println!(
            "criterion {} {:<32} {} ({:.1}s) {}",
            k + 1,
            name,
            if o.pass { "PASS" } else { "FAIL" },
            t.elapsed().as_secs_f64(),
            o.detail
        );
    }
    println!(
        "{} of {} criteria pass in {:.1}s",
        criteria.len() - failed,
        criteria.len(),
        start.elapsed().as_secs_f64()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
