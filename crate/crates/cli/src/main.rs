//! `adjvol`: normalized volumes of PQ-type adjacency polytopes.
//!
//! Exit status: 0 when everything requested succeeded and every comparison
//! agreed, 1 on a failed comparison or other error, 2 on unparsable input,
//! 3 when a resource cap was hit.

mod load;
mod report;

use std::fs::OpenOptions;
use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use adjvol_core::draconian::{Enumerator, TABLE_MAX_N};
use adjvol_core::harness::{self, ScanConfig, ScanTarget, Suite, VerifyConfig};
use adjvol_core::recurrence::{Planner, Strategy};
use adjvol_core::Error;
use clap::{Args, Parser, Subcommand};

use report::Report;

#[derive(Parser, Debug)]
#[command(
    name = "adjvol",
    version,
    about = "Normalized volumes of PQ-type adjacency polytopes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct EnumOpts {
    /// Worker threads for enumeration.
    #[arg(long, default_value_t = 1)]
    workers: usize,
    /// Refuse to enumerate graphs with more vertices.
    #[arg(long, default_value_t = 22)]
    max_n: usize,
}

impl EnumOpts {
    fn enumerator(&self) -> Enumerator {
        Enumerator {
            max_n: self.max_n.min(TABLE_MAX_N),
            workers: self.workers.max(1),
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Normalized volume of one graph.
    Nvol {
        /// `family:params` (e.g. `cycle:5`, `kmm:6,2`) or an edge-list file.
        graph: String,
        #[arg(long, default_value = "auto")]
        strategy: Strategy,
        /// Print the derivation tree.
        #[arg(long)]
        trace: bool,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        opts: EnumOpts,
    },
    /// List every draconian sequence, one per line, then a count footer.
    Enum {
        graph: String,
        #[command(flatten)]
        opts: EnumOpts,
    },
    /// Run a verification suite.
    Verify {
        suite: Suite,
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long)]
        json: bool,
    },
    /// Compare a conjectured formula with enumeration over many graphs.
    Scan {
        target: ScanTarget,
        #[arg(long, default_value_t = 9)]
        n_max: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        /// Append records to this file.
        #[arg(long)]
        out: Option<std::path::PathBuf>,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug)]
pub enum CliError {
    Parse(String),
    Cap(String),
    Failed(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::InvalidParams { .. } => CliError::Parse(e.to_string()),
            _ if e.is_resource_cap() => CliError::Cap(e.to_string()),
            _ => CliError::Failed(e.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Failed(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut stdout = std::io::stdout().lock();
    match run(cli.command, &mut stdout) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(err) => {
            let (code, msg) = match err {
                CliError::Parse(m) => (2, m),
                CliError::Cap(m) => (3, m),
                CliError::Failed(m) => (1, m),
            };
            eprintln!("adjvol: {msg}");
            ExitCode::from(code)
        }
    }
}

/// Returns whether every comparison passed.
fn run(command: Command, out: &mut impl Write) -> Result<bool, CliError> {
    let start = Instant::now();
    match command {
        Command::Nvol {
            graph,
            strategy,
            trace,
            json,
            opts,
        } => {
            let g = load::load_graph(&graph)?;
            let planner = Planner::new(opts.enumerator());
            let result = planner.nvol(&g, strategy)?;
            let mut rep = Report::new(format!(
                "nvol {graph} --strategy {}",
                strategy_name(strategy)
            ));
            rep.field("fingerprint", g.fingerprint());
            rep.field("n", g.n());
            rep.field("m", g.edge_count());
            rep.field("value", &result.value);
            if json {
                let doc = serde_json::json!({
                    "graph": graph,
                    "fingerprint": g.fingerprint(),
                    "n": g.n(),
                    "m": g.edge_count(),
                    "strategy": strategy_name(strategy),
                    "value": result.value.to_string(),
                    "trace": trace.then_some(&result.trace),
                });
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&doc).expect("serializable")
                )?;
            } else {
                if trace {
                    rep.section("trace", result.trace.to_text());
                }
                rep.finish(out, start)?;
            }
            Ok(true)
        }
        Command::Enum { graph, opts } => {
            let g = load::load_graph(&graph)?;
            let set = opts.enumerator().enumerate(&g)?;
            out.write_all(set.to_text().as_bytes())?;
            writeln!(out, "# count={}", set.count)?;
            Ok(true)
        }
        Command::Verify {
            suite,
            n_max,
            seed,
            samples,
            workers,
            json,
        } => {
            let defaults = VerifyConfig::defaults(suite);
            let cfg = VerifyConfig {
                n_max: n_max.unwrap_or(defaults.n_max),
                seed,
                samples: samples.unwrap_or(defaults.samples),
                workers: workers.max(1),
            };
            let result = harness::run_suite(suite, &cfg)?;
            if json {
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&result).expect("serializable")
                )?;
            } else {
                let mut rep = Report::new(format!(
                    "verify {suite} --n-max {} --seed {} --samples {}",
                    cfg.n_max, cfg.seed, cfg.samples
                ));
                for c in &result.cases {
                    rep.line(report::case_line(c));
                }
                rep.field(
                    "summary",
                    format!(
                        "pass={} fail={} info={}",
                        result.count(harness::Status::Pass),
                        result.count(harness::Status::Fail),
                        result.count(harness::Status::Info)
                    ),
                );
                rep.finish(out, start)?;
            }
            Ok(result.passed())
        }
        Command::Scan {
            target,
            n_max,
            seed,
            samples,
            out: path,
            workers,
            json,
        } => {
            let cfg = ScanConfig {
                n_max,
                seed,
                samples,
                workers: workers.max(1),
            };
            let records = harness::run_scan(target, &cfg)?;
            let echo = format!("scan {target} --n-max {n_max} --seed {seed} --samples {samples}");
            if let Some(path) = &path {
                let mut file = OpenOptions::new().create(true).append(true).open(path)?;
                writeln!(file, "# {echo}")?;
                for r in &records {
                    writeln!(file, "{}", r.to_line())?;
                }
            }
            let all_agree = records.iter().all(|r| r.agree);
            if json {
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&records).expect("serializable")
                )?;
            } else {
                let mut rep = Report::new(echo);
                for r in &records {
                    rep.line(format!("record {}", r.to_line()));
                }
                let theorem = records.iter().filter(|r| !r.conjectural).count();
                let theorem_agree = records.iter().filter(|r| !r.conjectural && r.agree).count();
                let conj = records.len() - theorem;
                let conj_agree = records.iter().filter(|r| r.conjectural && r.agree).count();
                rep.field(
                    "summary",
                    format!(
                        "records={} theorem={theorem} theorem-agree={theorem_agree} conjecture={conj} conjecture-agree={conj_agree}",
                        records.len()
                    ),
                );
                for r in records.iter().filter(|r| !r.agree) {
                    rep.section("COUNTEREXAMPLE", report::counterexample(r));
                }
                rep.finish(out, start)?;
            }
            Ok(all_agree)
        }
    }
}

fn strategy_name(s: Strategy) -> &'static str {
    match s {
        Strategy::Auto => "auto",
        Strategy::Enumerate => "enumerate",
    }
}
