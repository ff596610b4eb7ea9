//! Command-line front end: adjacency queries, graph export, independence
//! invariants, torus censuses and the verification suite.

mod output;

use std::process::ExitCode;
use std::sync::mpsc;
use std::thread;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use primegraph::refdata::tables::{table_numbers, verify_tables};
use primegraph::torus::{census_rows, classical_envelope, oracle_envelope, ENVELOPE_Q};
use primegraph::{
    adjacent, build_graph, cross_validate, enumerate_torus_orders, max_independent_set, parse_spec, Budget, Error,
};

const EXIT_MISMATCH: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(name = "primegraph", version, about = "Prime graphs of finite simple groups")]
struct Cli {
    /// Factorization effort per call, in Pollard-rho iterations.
    #[arg(long, global = true, env = "PRIMEGRAPH_BUDGET", default_value_t = Budget::DEFAULT_STEPS)]
    budget: u64,
    /// Wall-clock limit in seconds; exceeding it exits with status 3.
    #[arg(long, global = true)]
    timeout: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether r and s are adjacent in GK(G).
    Adjacent { group: String, r: String, s: String },
    /// Print GK(G).
    Graph {
        group: String,
        #[arg(long, value_enum, default_value_t = GraphFormat::Plain)]
        format: GraphFormat,
    },
    /// Independence number and a maximum independent set.
    Indep {
        group: String,
        /// Require the set to contain this prime (repeatable).
        #[arg(long)]
        contains: Vec<String>,
        #[arg(long, value_enum, default_value_t = ReportFormat::Plain)]
        format: ReportFormat,
    },
    /// Check the result tables and the torus oracle.
    Verify {
        /// A table number (2-9) or "all".
        #[arg(long)]
        tables: Option<String>,
        /// Cross-validate adjacency against the torus oracle.
        #[arg(long)]
        oracle: bool,
        /// Largest classical rank in the oracle envelope.
        #[arg(long)]
        max_rank: Option<u32>,
        /// Field orders of the oracle envelope, comma separated.
        #[arg(long, value_delimiter = ',')]
        q: Option<Vec<u64>>,
        #[arg(long, value_enum, default_value_t = ReportFormat::Plain)]
        format: ReportFormat,
    },
    /// Maximal-torus orders of a group of Lie type.
    Census {
        group: String,
        #[arg(long, value_enum, default_value_t = CensusFormat::Csv)]
        format: CensusFormat,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Plain,
    Json,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Plain,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum CensusFormat {
    Csv,
    Json,
}

/// A finished command: text for standard output and the exit status.
struct Outcome {
    stdout: String,
    status: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Outcome {
        Outcome { stdout, status: 0 }
    }
}

fn prime_arg(s: &str) -> Result<BigUint, Error> {
    s.trim().parse::<BigUint>().map_err(|_| Error::Parse(format!("{s:?} is not a non-negative integer")))
}

fn run(cmd: Command, budget: Budget) -> Result<Outcome, Error> {
    match cmd {
        Command::Adjacent { group, r, s } => {
            let g = parse_spec(&group)?;
            let d = adjacent(&g, &prime_arg(&r)?, &prime_arg(&s)?, budget)?;
            let word = if d.adjacent { "adjacent" } else { "non-adjacent" };
            Ok(Outcome::ok(format!("{word} ({})\n", d.tag)))
        }
        Command::Graph { group, format } => {
            let graph = build_graph(&parse_spec(&group)?, budget)?;
            Ok(Outcome::ok(match format {
                GraphFormat::Plain => output::graph_plain(&graph),
                GraphFormat::Json => output::pretty(&output::graph_json(&graph)),
                GraphFormat::Dot => output::graph_dot(&graph),
            }))
        }
        Command::Indep { group, contains, format } => {
            let graph = build_graph(&parse_spec(&group)?, budget)?;
            let forced = contains.iter().map(|s| prime_arg(s)).collect::<Result<Vec<_>, _>>()?;
            let res = max_independent_set(&graph, &forced)?;
            Ok(Outcome::ok(match format {
                ReportFormat::Plain => output::indep_plain(&res),
                ReportFormat::Json => output::pretty(&output::indep_json(&graph, &res)),
            }))
        }
        Command::Verify { tables, oracle, max_rank, q, format } => {
            let envelope_given = max_rank.is_some() || q.is_some();
            let (run_tables, run_oracle) = match (&tables, oracle || envelope_given) {
                (None, false) => (Some("all".to_string()), true),
                (t, o) => (t.clone(), o),
            };
            let table_reports = match run_tables.as_deref() {
                None => None,
                Some("all") => Some(verify_tables(None, budget)?),
                Some(t) => {
                    let n: u8 = t.parse().map_err(|_| Error::Parse(format!("bad table number {t:?}")))?;
                    if !table_numbers().contains(&n) {
                        return Err(Error::Domain(format!("no table {n}; tables are 2-9")));
                    }
                    Some(verify_tables(Some(n), budget)?)
                }
            };
            let oracle_reports = if run_oracle {
                let groups = if envelope_given {
                    classical_envelope(max_rank.unwrap_or(6), q.as_deref().unwrap_or(&ENVELOPE_Q))
                } else {
                    oracle_envelope()
                };
                Some(groups.iter().map(|g| cross_validate(g, budget)).collect::<Result<Vec<_>, _>>()?)
            } else {
                None
            };
            let summary = output::VerifySummary::new(table_reports, oracle_reports);
            let status = if summary.mismatch_count() == 0 { 0 } else { EXIT_MISMATCH };
            let stdout = match format {
                ReportFormat::Plain => summary.plain(),
                ReportFormat::Json => output::pretty(&summary.json()),
            };
            Ok(Outcome { stdout, status })
        }
        Command::Census { group, format } => {
            let g = parse_spec(&group)?;
            let census = enumerate_torus_orders(&g, budget)?;
            let rows = census_rows(&census, budget)?;
            Ok(Outcome::ok(match format {
                CensusFormat::Csv => output::census_csv(&rows),
                CensusFormat::Json => output::pretty(&output::census_json(&g, &rows)),
            }))
        }
    }
}

/// Stable error code printed with every failure.
fn error_code(e: &Error) -> &'static str {
    match e {
        Error::BudgetExceeded { .. } => "budget",
        Error::Domain(_) => "domain",
        Error::Parse(_) => "parse",
        Error::NotSimple { .. } => "not-simple",
        Error::VertexNotInGroup { .. } => "vertex",
        Error::UnsupportedFamily(_) => "unsupported",
        Error::CharacteristicNotSupported(_) => "characteristic",
        Error::ForcedSetNotIndependent => "forced-adjacent",
        Error::ForcedVertexMissing(_) => "forced-missing",
        Error::UnknownName(_) => "unknown-name",
        Error::NoMatchingInstances(_) => "no-instances",
        Error::Data(_) => "data",
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let budget = Budget::new(cli.budget);
    let (tx, rx) = mpsc::channel();
    let command = cli.command;
    thread::spawn(move || {
        let _ = tx.send(run(command, budget));
    });
    let result = match cli.timeout {
        Some(secs) => match rx.recv_timeout(Duration::from_secs(secs)) {
            Ok(r) => r,
            Err(_) => {
                eprintln!("error[timeout]: no result within {secs} s");
                return ExitCode::from(EXIT_BUDGET);
            }
        },
        None => rx.recv().expect("worker thread finished"),
    };
    match result {
        Ok(out) => {
            print!("{}", out.stdout);
            ExitCode::from(out.status)
        }
        Err(e) => {
            eprintln!("error[{}]: {e}", error_code(&e));
            ExitCode::from(if matches!(e, Error::BudgetExceeded { .. }) { EXIT_BUDGET } else { EXIT_USAGE })
        }
    }
}
