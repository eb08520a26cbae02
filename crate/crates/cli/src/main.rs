use std::path::{Path, PathBuf};
use std::process::ExitCode;

use beitoric::edge_ideals::{
    binomial_edge_ideal, decide_toric, edge_ideal_groebner_basis, edge_ideal_names,
    equivalence_report, toric_ideal_of_graph, verify_lattice_with, EdgeIdealError,
    InferredPrimality,
};
use beitoric::poly::{ideal_equal, saturate_all, MonomialOrder, VarNames};
use beitoric::sweep::sweep;
use beitoric::Graph;
use clap::{Parser, Subcommand, ValueEnum};

mod report;

const MAX_VERTICES: usize = 64;
const SWEEP_CAP: usize = 5;

#[derive(Parser)]
#[command(
    name = "beitoric",
    version,
    about = "Toricness of binomial edge ideals"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Lex,
    Grevlex,
}

impl OrderArg {
    fn order(self, num_vars: usize) -> MonomialOrder {
        match self {
            OrderArg::Lex => MonomialOrder::lex(num_vars),
            OrderArg::Grevlex => MonomialOrder::grevlex(num_vars),
        }
    }

    fn name(self) -> &'static str {
        match self {
            OrderArg::Lex => "lex",
            OrderArg::Grevlex => "grevlex",
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether J_G is toric, optionally confirming by saturation
    Check {
        path: PathBuf,
        #[arg(long)]
        verify: bool,
        #[arg(long, value_enum, default_value = "grevlex")]
        order: OrderArg,
        #[arg(long)]
        json: bool,
    },
    /// Print the reduced Gröbner basis of J_G
    Gb {
        path: PathBuf,
        #[arg(long, value_enum, default_value = "grevlex")]
        order: OrderArg,
        #[arg(long)]
        json: bool,
    },
    /// Print the saturation of J_G by all variables
    Saturate {
        path: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Compare the binomial edge ideals of two graphs
    Equal {
        first: PathBuf,
        second: PathBuf,
        #[arg(long, value_enum, default_value = "grevlex")]
        order: OrderArg,
        #[arg(long)]
        json: bool,
    },
    /// Print the toric ideal of a graph in its edge variables
    ToricGraph {
        path: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Compare the decision with saturation on every labeled graph up to --max-n
    Sweep {
        #[arg(long, default_value_t = SWEEP_CAP)]
        max_n: usize,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long)]
        json: bool,
    },
}

enum Failure {
    Input(String),
    Internal(String),
}

impl From<EdgeIdealError> for Failure {
    fn from(e: EdgeIdealError) -> Failure {
        Failure::Internal(e.to_string())
    }
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let g = Graph::parse(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    if g.n() > MAX_VERTICES {
        return Err(Failure::Input(format!(
            "{}: {} vertices exceeds the limit of {MAX_VERTICES}",
            path.display(),
            g.n()
        )));
    }
    Ok(g)
}

fn sweep_cap() -> Result<usize, Failure> {
    match std::env::var("BEITORIC_MAX_N") {
        Ok(s) => s
            .trim()
            .parse::<usize>()
            .map(|v| v.min(SWEEP_CAP))
            .map_err(|_| Failure::Input(format!("BEITORIC_MAX_N={s} is not a number"))),
        Err(_) => Ok(SWEEP_CAP),
    }
}

fn run(cli: Cli) -> Result<String, Failure> {
    match cli.command {
        Command::Check {
            path,
            verify,
            order,
            json,
        } => {
            let g = read_graph(&path)?;
            let mut r = decide_toric(&g);
            let mut equivalence = None;
            if verify {
                let verified = verify_lattice_with(&g, &order.order(2 * g.n()))?;
                r = r.with_verification(verified)?;
                equivalence = Some(equivalence_report(&g)?);
            }
            if json {
                return Ok(report::pretty(&report::toricness_json(&r)));
            }
            let mut out = report::toricness_text(&r);
            if let Some(e) = equivalence {
                out.push_str(&format!(
                    "locally complete: {}\ncomponents complete: {}\nlattice: {}\ntoric sum: {}\nprime: {} (inferred, not computed)\n",
                    e.locally_complete,
                    e.components_complete,
                    e.lattice,
                    e.toric_sum,
                    e.prime == InferredPrimality::InferredPrime
                ));
            }
            Ok(out)
        }
        Command::Gb { path, order, json } => {
            let g = read_graph(&path)?;
            let basis = edge_ideal_groebner_basis(&g, &order.order(2 * g.n()))?;
            let lines: Vec<String> = basis
                .iter()
                .map(|b| b.render(&edge_ideal_names(g.n())))
                .collect();
            if json {
                return Ok(report::pretty(&serde_json::json!({
                    "order": order.name(),
                    "generators": lines,
                })));
            }
            Ok(report::lines(&lines))
        }
        Command::Saturate { path, json } => {
            let g = read_graph(&path)?;
            let j = binomial_edge_ideal(&g);
            let sat = saturate_all(&j).map_err(EdgeIdealError::from)?;
            let is_lattice = ideal_equal(&sat, &j, &MonomialOrder::grevlex(2 * g.n()))
                .map_err(EdgeIdealError::from)?;
            let lines = sat.render(&edge_ideal_names(g.n()));
            if json {
                return Ok(report::pretty(&serde_json::json!({
                    "generators": lines,
                    "is_lattice": is_lattice,
                })));
            }
            Ok(report::lines(&lines))
        }
        Command::Equal {
            first,
            second,
            order,
            json,
        } => {
            let (a, b) = (read_graph(&first)?, read_graph(&second)?);
            if a.n() != b.n() {
                return Err(Failure::Input(format!(
                    "vertex counts differ: {} vs {}",
                    a.n(),
                    b.n()
                )));
            }
            let equal = ideal_equal(
                &binomial_edge_ideal(&a),
                &binomial_edge_ideal(&b),
                &order.order(2 * a.n()),
            )
            .map_err(EdgeIdealError::from)?;
            if json {
                return Ok(report::pretty(&serde_json::json!({ "equal": equal })));
            }
            Ok(format!("{equal}\n"))
        }
        Command::ToricGraph { path, json } => {
            let g = read_graph(&path)?;
            let toric = toric_ideal_of_graph(&g)?;
            let lines = toric.render(&VarNames::Edge);
            if json {
                let edges: Vec<[usize; 2]> = g.edges().map(|(u, v)| [u, v]).collect();
                return Ok(report::pretty(&serde_json::json!({
                    "edges": edges,
                    "generators": lines,
                })));
            }
            let mut out = String::new();
            for (idx, (u, v)) in g.edges().enumerate() {
                out.push_str(&format!("t{} = {{{u},{v}}}\n", idx + 1));
            }
            out.push_str(&report::lines(&lines));
            Ok(out)
        }
        Command::Sweep { max_n, jobs, json } => {
            let cap = sweep_cap()?;
            if max_n == 0 || max_n > cap {
                return Err(Failure::Input(format!("--max-n must be in 1..={cap}")));
            }
            let summary = sweep(max_n, jobs).map_err(|e| Failure::Input(e.to_string()))?;
            let out = if json {
                report::pretty(&report::sweep_json(&summary))
            } else {
                report::sweep_text(&summary)
            };
            if !summary.mismatches.is_empty() {
                print!("{out}");
                return Err(Failure::Internal(format!(
                    "{} mismatches between criterion and saturation",
                    summary.mismatches.len()
                )));
            }
            Ok(out)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(3)
        }
    }
}
