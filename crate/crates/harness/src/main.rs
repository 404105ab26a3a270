use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::ops::ControlFlow;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use ktdom::domination::enumerate_minimal_ktds_with;
use ktdom::graph::{parse_graph, serialize_graph};
use ktdom::hypergraph::{open_neighborhood_hypergraph, serialize_hypergraph};
use ktdom::{ClaimId, FamilySpec, Quantity, Strategy};
use ktdom_harness::ledger::witness_text;
use ktdom_harness::{
    run_scan, run_solve, run_verify, write_rows, CorpusSpec, DetailedRow, Format, IntRange,
    Outcome, RunOptions, ScanConfig, SolveConfig, Source, VerifyConfig,
};

/// Exact k-tuple total domination numbers, claim checks and conjecture scans.
#[derive(Debug, Parser)]
#[command(name = "ktdom", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute gamma, Gamma, tau or upsilon for one instance.
    Solve {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long)]
        k: usize,
        /// gamma, Gamma, tau or upsilon.
        #[arg(long, default_value = "Gamma")]
        quantity: Quantity,
        /// `ong`: solve on the open neighbourhood hypergraph of the input graph.
        #[arg(long, value_name = "ong")]
        as_hypergraph: Option<String>,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Check claims over parameter grids.
    Verify {
        /// Comma-separated claim ids, or `all`.
        #[arg(long, default_value = "all")]
        claims: String,
        /// Range of orders (or part-size totals, or n of K_n), e.g. 2..12.
        #[arg(long)]
        n: Option<IntRange>,
        /// Range of k, e.g. 1..3.
        #[arg(long)]
        k: Option<IntRange>,
        /// Graph corpus for single-graph claims: connected:<=N or all:<=N.
        #[arg(long)]
        corpus: Option<CorpusSpec>,
        /// Comma-separated family specs replacing the default instances.
        #[arg(long)]
        families: Option<String>,
        /// Largest product (or corpus graph) order to build [default: 16, 25 for C15-C17].
        #[arg(long)]
        max_order: Option<usize>,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Scan Cartesian products for the product conjecture and K_n x K_m points.
    Scan {
        #[arg(long, default_value = "K3,K4,C4,C5,multipartite:2-2")]
        families: String,
        #[arg(long, default_value = "2..3")]
        k: IntRange,
        /// Range of n and m for the K_n x K_m points.
        #[arg(long, default_value = "2..5")]
        question_n: IntRange,
        /// Skip the K_n x K_m points.
        #[arg(long)]
        no_question: bool,
        #[arg(long, default_value_t = 16)]
        max_order: usize,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Write a family member in the graph (or hypergraph) text format.
    Gen {
        #[arg(long)]
        family: FamilySpec,
        #[arg(long, value_name = "ong")]
        as_hypergraph: Option<String>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// List every minimal kTDS, one 1-based member list per line.
    Enumerate {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long)]
        k: usize,
        /// Stop after this many sets.
        #[arg(long)]
        limit: Option<usize>,
        #[command(flatten)]
        common: CommonArgs,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct SourceArgs {
    /// Family spec such as cycle:5, rook:4,4 or cart(K3,C4).
    #[arg(long)]
    family: Option<FamilySpec>,
    /// Graph file (`p n m` / `e u v`), or a hypergraph file for tau/upsilon.
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct CommonArgs {
    /// Worker threads.
    #[arg(long, default_value_t = default_workers())]
    workers: usize,
    /// Per-instance time budget in seconds.
    #[arg(long)]
    budget: Option<f64>,
    /// auto, exhaustive or bnb.
    #[arg(long, default_value = "auto")]
    strategy: Strategy,
    #[arg(long, default_value = "csv")]
    format: Format,
    #[arg(long)]
    output: Option<PathBuf>,
    /// Fill the elapsed_ms column.
    #[arg(long)]
    timings: bool,
}

fn default_workers() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

fn max_n_from_env() -> Result<usize> {
    match std::env::var("KTDOM_MAX_N") {
        Err(_) => Ok(ktdom::DEFAULT_MAX_N),
        Ok(v) => {
            let n: usize = v
                .parse()
                .with_context(|| format!("KTDOM_MAX_N={v:?} is not a number"))?;
            if !(1..=64).contains(&n) {
                bail!("KTDOM_MAX_N must be between 1 and 64");
            }
            Ok(n)
        }
    }
}

impl CommonArgs {
    fn options(&self) -> Result<RunOptions> {
        let budget = match self.budget {
            Some(s) if !(s.is_finite() && s > 0.0) => {
                bail!("--budget must be a positive number of seconds")
            }
            Some(s) => Some(Duration::from_secs_f64(s)),
            None => None,
        };
        let opts = RunOptions {
            workers: self.workers,
            budget,
            strategy: self.strategy,
            max_n: max_n_from_env()?,
            timings: self.timings,
        };
        opts.validate()?;
        Ok(opts)
    }
}

impl SourceArgs {
    fn source(&self) -> Source {
        match (&self.family, &self.input) {
            (Some(f), _) => Source::Family(f.clone()),
            (None, Some(p)) => Source::File(p.clone()),
            (None, None) => unreachable!("clap requires one source"),
        }
    }

    fn graph(&self) -> Result<(String, ktdom::Graph)> {
        match self.source() {
            Source::Family(f) => Ok((f.to_string(), f.generate()?)),
            Source::File(p) => {
                let text = std::fs::read_to_string(&p)
                    .with_context(|| format!("reading {}", p.display()))?;
                Ok((p.display().to_string(), parse_graph(&text)?))
            }
        }
    }
}

fn check_ong(flag: &Option<String>) -> Result<bool> {
    match flag.as_deref() {
        None => Ok(false),
        Some("ong") => Ok(true),
        Some(other) => bail!("unknown hypergraph construction {other:?}, only `ong` is supported"),
    }
}

fn open_output(path: &Option<PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).with_context(|| format!("creating {}", p.display()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

/// Writes the ledger and the summary; the summary goes to stdout when the
/// ledger goes to a file, and to stderr otherwise.
fn finish(outcome: &Outcome, common: &CommonArgs, show_points_of: &[ClaimId]) -> Result<ExitCode> {
    let rows: Vec<DetailedRow> = outcome.rows(common.timings);
    let mut out = open_output(&common.output)?;
    write_rows(&rows, common.format, &mut out)?;
    out.flush()?;
    drop(out);
    let summary = outcome.summary(show_points_of);
    if common.output.is_some() {
        println!("{summary}");
    } else {
        eprintln!("{summary}");
    }
    Ok(if outcome.failures() > 0 {
        ExitCode::from(2)
    } else {
        ExitCode::SUCCESS
    })
}

fn parse_claims(list: &str) -> Result<Vec<ClaimId>> {
    if list == "all" {
        return Ok(ClaimId::all().collect());
    }
    list.split(',')
        .map(|s| Ok(s.trim().parse::<ClaimId>()?))
        .collect()
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Solve {
            source,
            k,
            quantity,
            as_hypergraph,
            common,
        } => {
            let cfg = SolveConfig {
                source: source.source(),
                k,
                quantity,
                as_hypergraph: check_ong(&as_hypergraph)?,
            };
            let rows = run_solve(&cfg, &common.options()?)?;
            let rows: Vec<_> = rows.into_iter().map(DetailedRow::plain).collect();
            let mut out = open_output(&common.output)?;
            write_rows(&rows, common.format, &mut out)?;
            out.flush()?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            claims,
            n,
            k,
            corpus,
            families,
            max_order,
            common,
        } => {
            let cfg = VerifyConfig {
                claims: parse_claims(&claims)?,
                n,
                k,
                corpus,
                families,
                max_order,
            };
            let outcome = run_verify(&cfg, &common.options()?)?;
            finish(&outcome, &common, &[])
        }
        Command::Scan {
            families,
            k,
            question_n,
            no_question,
            max_order,
            common,
        } => {
            let cfg = ScanConfig {
                families,
                k,
                question_n: (!no_question).then_some(question_n),
                max_order,
            };
            let outcome = run_scan(&cfg, &common.options()?)?;
            let points = [ClaimId::new(14)?, ClaimId::new(21)?];
            finish(&outcome, &common, &points)
        }
        Command::Gen {
            family,
            as_hypergraph,
            output,
        } => {
            let g = family.generate()?;
            let text = if check_ong(&as_hypergraph)? {
                serialize_hypergraph(&open_neighborhood_hypergraph(&g)?)
            } else {
                serialize_graph(&g)
            };
            let mut out = open_output(&output)?;
            out.write_all(text.as_bytes())?;
            out.flush()?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate {
            source,
            k,
            limit,
            common,
        } => {
            let (name, g) = source.graph()?;
            let opts = common.options()?;
            let solve_opts = ktdom::SolveOptions {
                strategy: opts.strategy,
                workers: 1,
                max_n: opts.max_n,
                deadline: opts.budget.map(|b| std::time::Instant::now() + b),
            };
            let mut out = open_output(&common.output)?;
            let mut write_err = None;
            let mut seen = 0;
            let count = enumerate_minimal_ktds_with(&g, k, &solve_opts, |s| {
                if let Err(e) = writeln!(out, "{}", witness_text(s)) {
                    write_err = Some(e);
                    return ControlFlow::Break(());
                }
                seen += 1;
                if limit.is_some_and(|l| seen >= l) {
                    ControlFlow::Break(())
                } else {
                    ControlFlow::Continue(())
                }
            });
            if let Some(e) = write_err {
                return Err(e.into());
            }
            let count = count?;
            out.flush()?;
            eprintln!("{count} minimal {k}TDS of {name}");
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn error_kind(e: &anyhow::Error) -> &'static str {
    if let Some(k) = e.downcast_ref::<ktdom::Error>() {
        return k.kind();
    }
    if e.downcast_ref::<io::Error>().is_some() {
        return "io";
    }
    "usage"
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            let msg = serde_json::json!({ "error": error_kind(&e), "message": format!("{e:#}") });
            eprintln!("{msg}");
            ExitCode::from(1)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn cli_definition_is_consistent() {
        Cli::command().debug_assert();
    }
}
