mod certificate;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand};
use serde::Serialize;

use degseq::analysis::{chromatic_number, clique_number, verify_witness};
use degseq::format::{from_graph6, to_dot, to_graph6};
use degseq::hajos::{build_basic_witness, check_bounds, witness_pipeline};
use degseq::oracle::{chi_of_sequence, h1_of_sequence, parse_checks, sweep};
use degseq::realize::{
    realize_any, realize_bipartite_with_matching, realize_tree, realize_with_clique,
};
use degseq::sequence::Stat;
use degseq::{
    classify_basic_profile, is_graphic, omega_of_sequence, parse_sequence, DegreeSequence, Error,
    Limits, Method, SequenceStats, SimpleGraph,
};

use certificate::{Certificate, Input};

const LIMIT_ENV: &str = "DEGSEQ_ORACLE_LIMIT";

#[derive(Parser)]
#[command(
    name = "degseq",
    version,
    about = "Degree sequences, cliques and chromatic bounds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Graphicality, ω(D) and profile of a sequence; χ(D) and h1(D) with --oracle.
    Check {
        sequence: String,
        #[arg(long)]
        oracle: bool,
        /// Largest length the oracle may enumerate [env: DEGSEQ_ORACLE_LIMIT].
        #[arg(long)]
        max_n: Option<usize>,
        /// Allow --max-n above the default caps.
        #[arg(long)]
        force: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print a realization as graph6.
    #[command(group(ArgGroup::new("mode").args(["tree", "clique", "bipartite"])))]
    Realize {
        /// The degree sequence, or part A with --bipartite.
        sequence: String,
        #[arg(long)]
        tree: bool,
        /// Force a clique on the k largest degrees.
        #[arg(long, value_name = "K")]
        clique: Option<usize>,
        /// Part B; vertices 0..n are part A, n..n+m part B.
        #[arg(long, value_name = "B")]
        bipartite: Option<String>,
        /// Also print DOT.
        #[arg(long)]
        dot: bool,
    },
    /// Realization with a star-subdivided clique witness.
    Hajos {
        /// A sequence with a nontrivial basic profile, or graph6 with --pipeline.
        input: String,
        /// Treat the input as a graph6 graph and run the join-decomposition pipeline.
        #[arg(long)]
        pipeline: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exhaustive checks over all graphic sequences up to a length.
    Sweep {
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        /// Comma-separated: hajos, sf, reed, hajos2, rao_vs_oracle, eg_vs_oracle, largecl_vs_rao, or all.
        #[arg(long, default_value = "all")]
        checks: String,
        /// Lift the default caps.
        #[arg(long)]
        force: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } => 2,
            Error::Resource { .. } => 3,
            Error::Argument(_) | Error::Bipartite(_) | Error::Domain(_) | Error::Infeasible(_) => 4,
            Error::Internal(_) => 5,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn internal(message: String) -> Failure {
    Failure { code: 5, message }
}

type Outcome = Result<ExitCode, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Check {
            sequence,
            oracle,
            max_n,
            force,
            out,
        } => check(&sequence, oracle, max_n, force, out),
        Command::Realize {
            sequence,
            tree,
            clique,
            bipartite,
            dot,
        } => realize(&sequence, tree, clique, bipartite.as_deref(), dot),
        Command::Hajos {
            input,
            pipeline,
            out,
        } => hajos(&input, pipeline, out),
        Command::Sweep {
            max_n,
            checks,
            force,
            out,
        } => run_sweep(max_n, &checks, force, out),
    };
    outcome.unwrap_or_else(|f| {
        eprintln!("degseq: {}", f.message);
        ExitCode::from(f.code)
    })
}

fn oracle_limits(max_n: Option<usize>, force: bool) -> Result<Limits, Failure> {
    let defaults = Limits::default();
    let from_env = match std::env::var(LIMIT_ENV) {
        Ok(v) => Some(v.trim().parse::<usize>().map_err(|_| Failure {
            code: 2,
            message: format!("{LIMIT_ENV}={v:?} is not a non-negative integer"),
        })?),
        Err(_) => None,
    };
    // A cap set in the environment counts as an explicit acknowledgment.
    let (n, force) = match (max_n, from_env) {
        (Some(n), _) => (n, force),
        (None, Some(n)) => (n, true),
        (None, None) => return Ok(defaults),
    };
    if n > defaults.sequence_chi && !force {
        return Err(Failure {
            code: 3,
            message: format!(
                "oracle cap {n} exceeds the default of {}; pass --force to accept the cost",
                defaults.sequence_chi
            ),
        });
    }
    Ok(Limits {
        realizations: n,
        sequence_chi: n,
        sequence_omega: n.max(defaults.sequence_omega),
        graph_chi: n.max(defaults.graph_chi),
        h1: n.max(defaults.h1),
    })
}

fn emit<T: Serialize>(value: &T, out: Option<PathBuf>) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(value).map_err(|e| internal(e.to_string()))?;
    match out {
        Some(path) => std::fs::write(&path, text + "\n").map_err(|e| Failure {
            code: 4,
            message: format!("cannot write {}: {e}", path.display()),
        }),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn check(
    text: &str,
    oracle: bool,
    max_n: Option<usize>,
    force: bool,
    out: Option<PathBuf>,
) -> Outcome {
    let seq = parse_sequence(text)?;
    let limits = oracle_limits(max_n, force)?;
    let mut cert = Certificate::new(Input {
        sequence: Some(seq.degrees().to_vec()),
        graph6: None,
    });
    cert.verdicts.graphic = is_graphic(&seq);
    if cert.verdicts.graphic {
        let omega = omega_of_sequence(&seq)?;
        let mut stats =
            SequenceStats::new(seq.max_degree() as usize).with_omega(omega, Method::RaoExact);
        if oracle {
            stats = stats
                .with_chi(chi_of_sequence(&seq, &limits)?, Method::OracleEnumeration)
                .with_h1(h1_of_sequence(&seq, &limits)?, Method::OracleEnumeration);
        }
        let g = realize_with_clique(&seq, omega)?;
        if g.degrees() != seq.degrees() || clique_number(&g) < omega {
            return Err(internal(format!(
                "clique realization of {seq} failed its self-check"
            )));
        }
        cert.artifacts.realization = Some(to_graph6(&g));
        cert.verdicts.omega = stats.omega;
        cert.verdicts.chi = stats.chi;
        cert.verdicts.h1 = stats.h1;
        cert.verdicts.profile = Some(classify_basic_profile(&seq)?);
        cert.verdicts.bounds = Some(check_bounds(&stats));
    }
    emit(&cert, out)?;
    Ok(ExitCode::SUCCESS)
}

/// Tokens in input order; the bipartite realizer checks the ordering itself.
fn parse_list(text: &str) -> Result<Vec<u32>, Error> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse().map_err(|_| Error::Parse {
                token: t.to_string(),
            })
        })
        .collect()
}

fn realize(
    text: &str,
    tree: bool,
    clique: Option<usize>,
    part_b: Option<&str>,
    dot: bool,
) -> Outcome {
    let g = if let Some(b) = part_b {
        let a = parse_list(text)?;
        let b = parse_list(b)?;
        let r = realize_bipartite_with_matching(&a, &b)?;
        if !r.satisfies(&a, &b) {
            return Err(internal(
                "bipartite realization failed its self-check".into(),
            ));
        }
        let pairs: Vec<String> = r.matching.iter().map(|(u, v)| format!("{u}-{v}")).collect();
        eprintln!("matching: {}", pairs.join(" "));
        r.graph
    } else {
        let seq = parse_sequence(text)?;
        let g = match clique {
            Some(k) => {
                let g = realize_with_clique(&seq, k)?;
                let certified = (0..k).all(|u| (u + 1..k).all(|v| g.has_edge(u, v)));
                if !certified {
                    return Err(internal(format!(
                        "vertices 0..{k} of the realization are not a clique"
                    )));
                }
                eprintln!(
                    "clique: {}",
                    (0..k).map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
                );
                g
            }
            None if tree => realize_tree(&seq)?,
            None => realize_any(&seq)?,
        };
        if g.degrees() != seq.degrees() {
            return Err(internal(format!(
                "realization of {seq} has the wrong degrees"
            )));
        }
        g
    };
    println!("{}", to_graph6(&g));
    if dot {
        print!("{}", to_dot(&g, "G"));
    }
    Ok(ExitCode::SUCCESS)
}

fn hajos(input: &str, pipeline: bool, out: Option<PathBuf>) -> Outcome {
    let limits = Limits::default();
    let mut cert;
    let (graph, witness) = if pipeline {
        let g: SimpleGraph = from_graph6(input.trim())?;
        let r = witness_pipeline(&g, &limits)?;
        let chi = chromatic_number(&g, &limits)?;
        if r.witness.order < chi {
            return Err(internal(format!(
                "pipeline witness of order {} is below chi = {chi}",
                r.witness.order
            )));
        }
        let sub = r.decomposition.subgraph.degree_sequence();
        cert = Certificate::new(Input {
            sequence: None,
            graph6: Some(to_graph6(&g)),
        });
        cert.verdicts.graphic = true;
        cert.verdicts.omega = Some(Stat::new(omega_of_sequence(&sub)?, Method::RaoExact));
        cert.artifacts.sequence = Some(sub.degrees().to_vec());
        cert.artifacts.decomposition = Some(r.decomposition);
        (r.graph, r.witness)
    } else {
        let seq: DegreeSequence = parse_sequence(input)?;
        let b = build_basic_witness(&seq)?;
        cert = Certificate::new(Input {
            sequence: Some(seq.degrees().to_vec()),
            graph6: None,
        });
        cert.verdicts.graphic = true;
        cert.verdicts.omega = Some(Stat::new(omega_of_sequence(&seq)?, Method::RaoExact));
        cert.verdicts.profile = Some(classify_basic_profile(&seq)?);
        cert.artifacts.plan = Some(b.plan);
        (b.graph, b.witness)
    };
    verify_witness(&graph, &witness).map_err(|d| internal(format!("witness rejected: {d}")))?;
    cert.verdicts.h1 = Some(Stat::new(witness.order, Method::WitnessLowerBound));
    cert.artifacts.graph = Some(to_graph6(&graph));
    cert.artifacts.witness = Some(witness);
    emit(&cert, out)?;
    Ok(ExitCode::SUCCESS)
}

fn run_sweep(max_n: usize, checks: &str, force: bool, out: Option<PathBuf>) -> Outcome {
    let checks = parse_checks(checks)?;
    let limits = if force {
        Limits::unbounded()
    } else {
        Limits::default()
    };
    let report = sweep(max_n, &checks, &limits)?;
    print!("{}", report.summary_table());
    if out.is_some() {
        emit(&report, out)?;
    }
    Ok(if report.is_clean() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
