//! Subcommand implementations. Each returns the rendered output and whether it passed.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::json;

use queer_schur::combinat::{
    enumerate_basis, enumerate_compositions, Composition, SuperMatrixIndex,
};
use queer_schur::oracle::{compare_actions, Oracle};
use queer_schur::qschur::{apply_word, AlgebraElement, Generator};
use queer_schur::repr::{
    build_block, check_relations, decompose_block, decompose_module, top_weight,
    verify_structure_props, ActionTable, DecomposeOptions, DecompositionCertificate,
};

use crate::error::CliError;
use crate::{Cli, Command, Format};

type Outcome = Result<(String, bool), CliError>;

pub fn run(cli: &Cli) -> Outcome {
    if cli.n == 0 {
        return Err(CliError::Usage("--n must be at least 1".into()));
    }
    match &cli.command {
        Command::Basis => basis(cli),
        Command::Act { basis, word } => act(cli, basis, word),
        Command::Verify => verify(cli),
        Command::OracleCheck => oracle_check(cli),
        Command::Decompose => decompose(cli),
        Command::Report => report(cli),
    }
}

fn options(cli: &Cli) -> DecomposeOptions {
    DecomposeOptions {
        seed: cli.seed,
        include_derived: cli.include_derived_generators,
    }
}

fn parse_mu(cli: &Cli) -> Result<Option<Composition>, CliError> {
    let Some(text) = &cli.mu else {
        return Ok(None);
    };
    let parts = text
        .split(',')
        .map(|p| p.trim().parse::<u32>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| CliError::Usage(format!("cannot parse --mu `{text}`")))?;
    Ok(Some(Composition::checked(parts, cli.n, cli.r)?))
}

fn json_text<T: Serialize>(value: &T) -> Result<String, CliError> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn csv_text(
    header: &[&str],
    rows: impl IntoIterator<Item = Vec<String>>,
) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).map_err(std::io::Error::from)?;
    for row in rows {
        w.write_record(&row).map_err(std::io::Error::from)?;
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn basis(cli: &Cli) -> Outcome {
    let basis = enumerate_basis(cli.n, cli.r);
    let row = |a: &SuperMatrixIndex| {
        vec![
            a.to_string(),
            a.ro().to_string(),
            a.co().to_string(),
            a.parity().to_string(),
        ]
    };
    let body = match cli.format {
        Format::Json => json_text(
            &basis
                .iter()
                .map(|a| json!({"index": a, "ro": a.ro().0, "co": a.co().0, "parity": a.parity()}))
                .collect::<Vec<_>>(),
        )?,
        Format::Csv => csv_text(&["index", "ro", "co", "parity"], basis.iter().map(row))?,
        Format::Text => basis.iter().map(|a| row(a).join(" ") + "\n").collect(),
    };
    Ok((body, true))
}

fn act(cli: &Cli, basis: &str, word: &str) -> Outcome {
    let a: SuperMatrixIndex = basis.parse()?;
    if a.n() != cli.n || a.size() != cli.r {
        return Err(CliError::Usage(format!(
            "{a} is not an index of M({},{})",
            cli.n, cli.r
        )));
    }
    let gens = word
        .split(',')
        .filter(|w| !w.trim().is_empty())
        .map(|w| {
            let g: Generator = w.parse()?;
            g.validate(cli.n)?;
            Ok(g)
        })
        .collect::<Result<Vec<_>, queer_schur::Error>>()?;
    let result = apply_word(&gens, &AlgebraElement::basis(&a));
    let body = match cli.format {
        Format::Json => json_text(&json!({
            "n": cli.n,
            "r": cli.r,
            "basis": a,
            "word": gens.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
            "result": result,
        }))?,
        Format::Csv => csv_text(
            &["index", "coefficient"],
            result.terms().map(|(k, c)| vec![k.to_string(), c.render()]),
        )?,
        Format::Text => format!("{result}\n"),
    };
    Ok((body, true))
}

fn verify(cli: &Cli) -> Outcome {
    let table = ActionTable::new(cli.n, cli.r);
    let relations = check_relations(&table);
    let structure = verify_structure_props(&table, options(cli));
    let pass = relations.pass() && structure.pass();
    let body = match cli.format {
        Format::Json => json_text(&json!({
            "n": cli.n,
            "r": cli.r,
            "relations": relations,
            "structure": structure,
            "pass": pass,
        }))?,
        Format::Csv => csv_text(
            &["check", "instances", "failures"],
            relations
                .families
                .iter()
                .map(|f| {
                    vec![
                        f.family.to_string(),
                        f.instances.to_string(),
                        f.failures.to_string(),
                    ]
                })
                .chain(structure.checks.iter().map(|c| {
                    vec![
                        c.name.to_string(),
                        c.instances.to_string(),
                        c.failures.len().to_string(),
                    ]
                })),
        )?,
        Format::Text => {
            let mut s = String::new();
            for f in &relations.families {
                let _ = writeln!(
                    s,
                    "{:<28} {:>6} instances {:>4} failures",
                    f.family.name(),
                    f.instances,
                    f.failures
                );
            }
            for c in &structure.checks {
                let _ = writeln!(
                    s,
                    "{:<28} {:>6} instances {:>4} failures",
                    c.name,
                    c.instances,
                    c.failures.len()
                );
            }
            for f in &relations.failures {
                let _ = writeln!(
                    s,
                    "failure: {} on Phi{}: residual {}",
                    f.relation, f.basis, f.residual
                );
            }
            for c in &structure.checks {
                for f in &c.failures {
                    let _ = writeln!(s, "failure: {}: {f}", c.name);
                }
            }
            let _ = writeln!(s, "{}", if pass { "pass" } else { "FAIL" });
            s
        }
    };
    Ok((body, pass))
}

fn oracle_check(cli: &Cli) -> Outcome {
    let oracle = Oracle::new(cli.n, cli.r, cli.oracle_max_r)?;
    let report = compare_actions(&oracle, &Generator::full_set(cli.n))?;
    let pass = report.pass() && oracle.shapes_independent();
    let body = match cli.format {
        Format::Json => json_text(&report)?,
        Format::Csv => csv_text(
            &["generator", "index", "formula", "oracle"],
            report.mismatches.iter().map(|m| {
                vec![
                    m.generator.clone(),
                    m.basis.to_string(),
                    m.formula.to_string(),
                    m.oracle.to_string(),
                ]
            }),
        )?,
        Format::Text => {
            let mut s = format!(
                "{} generators on {} basis vectors: {} comparisons, {} mismatches\n",
                report.generators.len(),
                report.basis_size,
                report.comparisons,
                report.mismatches.len()
            );
            for m in &report.mismatches {
                let _ = writeln!(
                    s,
                    "{} on Phi{}: formula {} oracle {}",
                    m.generator, m.basis, m.formula, m.oracle
                );
            }
            s
        }
    };
    Ok((body, pass))
}

fn summand_rows(b: &DecompositionCertificate) -> Vec<Vec<String>> {
    let mu = Composition(b.mu.clone()).to_string();
    let seeded = b.summands.iter().map(|s| {
        vec![
            mu.clone(),
            "seeded".into(),
            s.seed.to_string(),
            top_weight(b.n, b.r).to_string(),
            s.dim.to_string(),
            s.hw_dim.to_string(),
            s.pass(b.checks.expected_hw_dim).to_string(),
        ]
    });
    let extra = b.extra_summands.iter().map(|e| {
        vec![
            mu.clone(),
            "extra".into(),
            String::new(),
            Composition(e.highest_weight.clone()).to_string(),
            e.dim.to_string(),
            e.hw_dim.to_string(),
            e.pass().to_string(),
        ]
    });
    seeded.chain(extra).collect()
}

const SUMMAND_HEADER: [&str; 7] = [
    "mu",
    "kind",
    "seed",
    "highest_weight",
    "dim",
    "hw_dim",
    "certified",
];

fn block_text(b: &DecompositionCertificate) -> String {
    let mut s = format!(
        "block {} dim {}: {} of {} expected summands, direct sum {}, pass {}\n",
        Composition(b.mu.clone()),
        b.block_dim,
        b.summands.len(),
        b.checks.expected_summand_count,
        b.direct_sum,
        b.pass
    );
    for row in summand_rows(b) {
        let _ = writeln!(
            s,
            "  {} seed {} highest weight {} dim {} hw_dim {} certified {}",
            row[1], row[2], row[3], row[4], row[5], row[6]
        );
    }
    if !b.extra_summands.is_empty() {
        let _ = writeln!(
            s,
            "  with extra summands: direct sum {}, complete {}",
            b.complete_direct_sum.pass, b.complete
        );
    }
    s
}

fn decompose(cli: &Cli) -> Outcome {
    let table = ActionTable::new(cli.n, cli.r);
    if let Some(mu) = parse_mu(cli)? {
        let cert = decompose_block(&table, &mu, options(cli));
        let body = match cli.format {
            Format::Json => json_text(&cert)?,
            Format::Csv => csv_text(&SUMMAND_HEADER, summand_rows(&cert))?,
            Format::Text => block_text(&cert),
        };
        return Ok((body, cert.pass));
    }
    let cert = decompose_module(&table, options(cli));
    let body = match cli.format {
        Format::Json => json_text(&cert)?,
        Format::Csv => csv_text(&SUMMAND_HEADER, cert.blocks.iter().flat_map(summand_rows))?,
        Format::Text => {
            let mut s: String = cert.blocks.iter().map(block_text).collect();
            let _ = writeln!(
                s,
                "module dim {}: {} of {} expected summands, pass {}; with extra summands {}, complete {}",
                cert.basis_size,
                cert.summand_count,
                cert.expected_summand_count,
                cert.pass,
                cert.complete_summand_count,
                cert.complete
            );
            s
        }
    };
    Ok((body, cert.pass))
}

#[derive(Serialize)]
struct BlockRow {
    mu: Vec<u32>,
    dim: usize,
    weight_dims: Vec<(Vec<u32>, usize)>,
    expected_summands: usize,
    seeded_summands: usize,
    extra_summands: usize,
}

fn report(cli: &Cli) -> Outcome {
    let table = ActionTable::new(cli.n, cli.r);
    let cert = decompose_module(&table, options(cli));
    let only = parse_mu(cli)?;
    let rows: Vec<BlockRow> = enumerate_compositions(cli.n, cli.r)
        .into_iter()
        .filter(|mu| only.as_ref().is_none_or(|m| m == mu))
        .map(|mu| {
            let block = build_block(cli.n, cli.r, &mu);
            let b = cert
                .blocks
                .iter()
                .find(|b| b.mu == mu.0)
                .expect("every block is decomposed");
            BlockRow {
                mu: mu.0.clone(),
                dim: block.dim(),
                weight_dims: block
                    .weight_dims()
                    .into_iter()
                    .map(|(w, d)| (w.0, d))
                    .collect(),
                expected_summands: b.checks.expected_summand_count,
                seeded_summands: b.summands.len(),
                extra_summands: b.extra_summands.len(),
            }
        })
        .collect();
    let body = match cli.format {
        Format::Json => json_text(&json!({
            "n": cli.n,
            "r": cli.r,
            "basis_size": cert.basis_size,
            "blocks": rows,
        }))?,
        Format::Csv => csv_text(
            &["mu", "weight", "dim"],
            rows.iter().flat_map(|b| {
                let mu = Composition(b.mu.clone()).to_string();
                std::iter::once(vec![mu.clone(), "all".into(), b.dim.to_string()]).chain(
                    b.weight_dims.iter().map(move |(w, d)| {
                        vec![
                            mu.clone(),
                            Composition(w.clone()).to_string(),
                            d.to_string(),
                        ]
                    }),
                )
            }),
        )?,
        Format::Text => {
            let mut s = format!("M({},{}) has dimension {}\n", cli.n, cli.r, cert.basis_size);
            for b in &rows {
                let weights: Vec<String> = b
                    .weight_dims
                    .iter()
                    .map(|(w, d)| format!("{}:{d}", Composition(w.clone())))
                    .collect();
                let _ = writeln!(
                    s,
                    "block {} dim {} weights {} summands {} expected {} extra {}",
                    Composition(b.mu.clone()),
                    b.dim,
                    weights.join(" "),
                    b.seeded_summands,
                    b.expected_summands,
                    b.extra_summands
                );
            }
            s
        }
    };
    Ok((body, true))
}

#[cfg(test)]
mod tests {
    use clap::Parser;

    use super::*;

    fn cli(args: &[&str]) -> Cli {
        Cli::parse_from(std::iter::once("qschur").chain(args.iter().copied()))
    }

    #[test]
    fn mu_parsing() {
        assert_eq!(
            parse_mu(&cli(&["basis", "--n", "2", "--r", "2", "--mu", "1, 1"])).unwrap(),
            Some(Composition(vec![1, 1]))
        );
        assert_eq!(parse_mu(&cli(&["basis"])).unwrap(), None);
        assert!(matches!(
            parse_mu(&cli(&["basis", "--mu", "a"])),
            Err(CliError::Usage(_))
        ));
        assert!(parse_mu(&cli(&["basis", "--n", "2", "--r", "2", "--mu", "1,1,0"])).is_err());
    }

    #[test]
    fn csv_quotes_indices() {
        let out = csv_text(&["a", "b"], [vec!["(1,0)".to_string(), "x".to_string()]]).unwrap();
        assert_eq!(out, "a,b\n\"(1,0)\",x\n");
    }

    #[test]
    fn empty_word_is_identity() {
        let (body, ok) = run(&cli(&[
            "act",
            "--n",
            "2",
            "--r",
            "1",
            "--basis",
            "(1,0;0,0|0,0;0,0)",
            "--word",
            "",
            "--format",
            "text",
        ]))
        .unwrap();
        assert!(ok);
        assert_eq!(body.trim(), "[1*v^0]*Phi(1,0;0,0|0,0;0,0)");
    }
}
