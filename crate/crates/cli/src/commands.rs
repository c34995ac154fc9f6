use std::fmt::Write;

use serde_json::{json, Value};

use cqca_core::automaton::{complete_generator, AutomatonDoc};
use cqca_core::factorize::decompose;
use cqca_core::oracle::{joint_eigenspace_dim_with_limit, stabilizer_generators};
use cqca_core::phasespace::isotropy_verdict;
use cqca_core::torus::{
    gamma_from_adjacency, graph_state_automaton, parse_adjacency, torus_complete_with_limit,
    torus_stabilizer_verdict_with_limit, TorusLattice, TorusPoly, TorusVector,
};
use cqca_core::{Cqca, Error, PauliProduct};

use crate::args::{Cli, Command, TorusArgs};
use crate::input::{self, load, Shape};
use crate::CliError;

/// What a subcommand produced; `negative` selects exit code 1.
pub struct Report {
    pub text: String,
    pub json: Value,
    pub negative: bool,
}

impl Report {
    fn ok(text: String, json: Value) -> Self {
        Report {
            text,
            json,
            negative: false,
        }
    }
}

fn center_text(a: &[i64]) -> String {
    match a {
        [x] => x.to_string(),
        _ => format!("({})", a.iter().map(i64::to_string).collect::<Vec<_>>().join(",")),
    }
}

fn pass(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "fail"
    }
}

fn doc_value(c: &Cqca) -> Value {
    serde_json::to_value(AutomatonDoc::from_cqca(c)).expect("plain data serializes")
}

fn automaton_report(c: &Cqca) -> Report {
    Report::ok(format!("{}\n", AutomatonDoc::from_cqca(c).to_json()), doc_value(c))
}

pub fn run(cli: &Cli) -> Result<Report, CliError> {
    let (p, s) = (cli.p, cli.s);
    match &cli.command {
        Command::Validate { automaton } => {
            let (t, _, _) = input::matrix(&load(automaton)?, p, s)?;
            let v = t.validate();
            let center = v.center.as_deref().map_or("none".to_string(), center_text);
            let mut text = format!("center={center} det={}\n", t.det());
            writeln!(text, "columns: {}", pass(v.columns_ok)).unwrap();
            writeln!(text, "determinant: {}", pass(v.determinant_ok)).unwrap();
            if let Some(why) = &v.failure {
                writeln!(text, "failed: {why}").unwrap();
            }
            writeln!(text, "valid: {}", v.ok).unwrap();
            let json = json!({
                "valid": v.ok,
                "center": v.center,
                "det": t.det().to_string(),
                "columns": v.columns_ok,
                "determinant": v.determinant_ok,
                "failure": v.failure,
            });
            Ok(Report {
                text,
                json,
                negative: !v.ok,
            })
        }
        Command::Center { automaton } => {
            let (c, _) = input::automaton(&load(automaton)?, p, s)?;
            let a = c.matrix().center()?;
            let centered = Cqca::new(c.matrix().centered()?, c.phases())?;
            let text = format!(
                "center={}\n{}\n",
                center_text(&a),
                AutomatonDoc::from_cqca(&centered).to_json()
            );
            Ok(Report::ok(text, json!({ "center": a, "automaton": doc_value(&centered) })))
        }
        Command::Compose { first, second } => {
            let (a, sa) = input::automaton(&load(first)?, p, s)?;
            let (b, _) = input::automaton(&load(second)?, Some(sa.p), Some(sa.s))?;
            Ok(automaton_report(&a.compose(&b)?))
        }
        Command::Invert { automaton } => {
            let (c, _) = input::automaton(&load(automaton)?, p, s)?;
            Ok(automaton_report(&c.inverse()?))
        }
        Command::Evolve {
            automaton,
            pauli,
            steps,
        } => {
            let (c, shape) = input::automaton(&load(automaton)?, p, s)?;
            let step = if *steps < 0 { c.inverse()? } else { c };
            let mut a = input::pauli(&load(pauli)?, shape)?;
            for _ in 0..steps.unsigned_abs() {
                a = step.apply_pauli(&a)?;
            }
            Ok(Report::ok(format!("{a}\n"), json!({ "steps": steps, "result": a.to_string() })))
        }
        Command::Factorize { automaton } => {
            let (t, _, _) = input::matrix(&load(automaton)?, p, s)?;
            if t.rank() != 1 {
                return Err(CliError::Usage("factorize only supports s = 1".into()));
            }
            if let Some(why) = t.validate().failure {
                return Err(Error::InvalidAutomaton(why).into());
            }
            let seq = decompose(&t)?;
            let verified = seq.product() == t;
            if !verified {
                return Err(Error::Internal("factor product differs from the input".into()).into());
            }
            let text = format!("{seq}verified: product equals input\n");
            let factors: Vec<String> = seq.factors().iter().map(ToString::to_string).collect();
            Ok(Report::ok(text, json!({ "factors": factors, "verified": verified })))
        }
        Command::Stabilizer {
            input: arg,
            torus,
            complete,
            oracle,
        } => {
            let text = load(arg)?;
            match input::torus(torus, p, s)? {
                Some((lattice, shape)) => {
                    let xi = input::vector(&text, shape)?;
                    let xi = TorusVector::from_phase_vector(&xi, &lattice)?;
                    torus_stabilizer(cli, &xi, *complete, *oracle)
                }
                None if *oracle => Err(CliError::Usage("--oracle needs --torus or --basis".into())),
                None => {
                    let shape = Shape::from_flags(p, s);
                    line_stabilizer(&input::vector(&text, shape)?, *complete)
                }
            }
        }
        Command::TorusInvert { poly, torus } => {
            let (lattice, shape) = require_torus(torus, p, s)?;
            let f = TorusPoly::parse(&load(poly)?, shape.p, &lattice)?;
            Ok(match f.invert_with_limit(cli.site_limit)? {
                Some(g) => Report::ok(format!("{g}\n"), json!({ "invertible": true, "inverse": g.to_string() })),
                None => Report {
                    text: "not invertible\n".into(),
                    json: json!({ "invertible": false }),
                    negative: true,
                },
            })
        }
        Command::GraphState {
            adjacency,
            gamma,
            torus,
            oracle,
        } => {
            let (lattice, shape) = require_torus(torus, p, s)?;
            let gamma = match (adjacency, gamma) {
                (Some(adj), None) => gamma_from_adjacency(&parse_adjacency(&load(adj)?)?, shape.p, &lattice)?,
                (None, Some(g)) => TorusPoly::parse(&load(g)?, shape.p, &lattice)?,
                _ => return Err(CliError::Usage("give exactly one of --adjacency and --gamma".into())),
            };
            let t = graph_state_automaton(&gamma)?;
            let valid = t.validation_failure().is_none();
            let mut text = format!("gamma={gamma}\nautomaton: {t}\nvalid: {valid}\n");
            let mut json = json!({ "gamma": gamma.to_string(), "automaton": t.to_string(), "valid": valid });
            if *oracle {
                let dim = oracle_dim(cli, &t.column(1), &lattice)?;
                writeln!(text, "oracle eigenspace dim: {dim}").unwrap();
                json["oracle_dim"] = json!(dim);
            }
            Ok(Report {
                text,
                json,
                negative: !valid,
            })
        }
        Command::OracleEigdim {
            generators,
            sites,
            vector,
            torus,
        } => {
            let dim = match vector {
                Some(v) => {
                    let (lattice, shape) = require_torus(torus, p, s)?;
                    let xi = input::vector(&load(v)?, shape)?;
                    oracle_dim(cli, &TorusVector::from_phase_vector(&xi, &lattice)?, &lattice)?
                }
                None => {
                    let n = sites.ok_or_else(|| CliError::Usage("--sites is required with generators".into()))?;
                    if s.is_some_and(|s| s != 1) {
                        return Err(CliError::Usage("the oracle works on a chain of sites (s = 1)".into()));
                    }
                    let shape = Shape::from_flags(p, Some(1));
                    let gens = generators
                        .iter()
                        .map(|g| input::pauli(&load(g)?, shape))
                        .collect::<Result<Vec<PauliProduct>, _>>()?;
                    joint_eigenspace_dim_with_limit(&gens, n, cli.dim_limit)?
                }
            };
            Ok(Report::ok(format!("dim: {dim}\n"), json!({ "dim": dim })))
        }
    }
}

fn require_torus(
    args: &TorusArgs,
    p: Option<u32>,
    s: Option<usize>,
) -> Result<(std::sync::Arc<TorusLattice>, Shape), CliError> {
    input::torus(args, p, s)?.ok_or_else(|| CliError::Usage("--torus or --basis is required".into()))
}

fn oracle_dim(cli: &Cli, xi: &TorusVector, lattice: &TorusLattice) -> Result<usize, CliError> {
    Ok(joint_eigenspace_dim_with_limit(
        &stabilizer_generators(xi),
        lattice.sites(),
        cli.dim_limit,
    )?)
}

fn line_stabilizer(xi: &cqca_core::PhaseVector, complete: bool) -> Result<Report, CliError> {
    let v = isotropy_verdict(xi)?;
    let completion = complete_generator(xi);
    let mut text = format!("isotropic: {}\n", v.isotropic);
    match &v.reflection_center {
        Some(a) => writeln!(text, "reflection invariant: true (center {a})").unwrap(),
        None => writeln!(text, "reflection invariant: false").unwrap(),
    }
    match &v.common_divisor {
        Some(d) => writeln!(text, "coprime: false (common divisor {d})").unwrap(),
        None => writeln!(text, "coprime: {}", !matches!(v.maximal, cqca_core::phasespace::Maximality::Unknown)).unwrap(),
    }
    match &completion {
        Ok(_) => writeln!(text, "completion: true").unwrap(),
        Err(e) => writeln!(text, "completion: false ({e})").unwrap(),
    }
    writeln!(text, "maximal: {}", v.maximal).unwrap();
    let mut json = json!({
        "isotropic": v.isotropic,
        "reflection_center": v.reflection_center.as_ref().map(ToString::to_string),
        "common_divisor": v.common_divisor.as_ref().map(ToString::to_string),
        "completion": completion.is_ok(),
        "maximal": v.maximal.to_string(),
    });
    if complete {
        let t = completion?;
        let c = Cqca::with_default_phases(t)?;
        writeln!(text, "automaton:\n{}", AutomatonDoc::from_cqca(&c).to_json()).unwrap();
        json["automaton"] = doc_value(&c);
    }
    Ok(Report {
        text,
        json,
        negative: !v.maximal.is_maximal(),
    })
}

fn torus_stabilizer(cli: &Cli, xi: &TorusVector, complete: bool, oracle: bool) -> Result<Report, CliError> {
    let v = torus_stabilizer_verdict_with_limit(xi, cli.site_limit)?;
    let mut text = format!("maximal: {}\nrank: {}\nsites: {}\n", v.maximal, v.rank, v.sites);
    let mut json = json!({ "maximal": v.maximal, "rank": v.rank, "sites": v.sites });
    if oracle {
        let dim = oracle_dim(cli, xi, xi.lattice())?;
        if (dim == 1) != v.maximal {
            return Err(Error::Internal(format!("oracle dimension {dim} contradicts the verdict")).into());
        }
        writeln!(text, "oracle eigenspace dim: {dim}").unwrap();
        json["oracle_dim"] = json!(dim);
    }
    if complete && v.maximal {
        let t = torus_complete_with_limit(xi, cli.site_limit)?;
        writeln!(text, "automaton: {t}").unwrap();
        json["automaton"] = json!(t.to_string());
    }
    Ok(Report {
        text,
        json,
        negative: !v.maximal,
    })
}
