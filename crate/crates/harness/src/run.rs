//! The solve, verify and scan runners behind the command-line interface.

use std::path::PathBuf;
use std::time::Duration;

use anyhow::{bail, Context, Result};
use ktdom::claims::{check_claim_with, Instance};
use ktdom::domination::{gamma_ktt_with, upper_gamma_ktt_with};
use ktdom::graph::parse_graph;
use ktdom::hypergraph::{
    open_neighborhood_hypergraph, parse_hypergraph, tau_k_with, upsilon_k_with, Hypergraph,
};
use ktdom::{
    ClaimId, ClaimKind, ClaimParams, ClaimReport, Error, FamilySpec, Quantity, SolveOptions,
    Strategy, Verdict,
};
use rayon::prelude::*;

use crate::grid::{parse_families, partitions, CorpusSpec, IntRange};
use crate::ledger::{DetailedRow, LedgerRow};

/// Settings shared by every command.
#[derive(Debug, Clone)]
pub struct RunOptions {
    pub workers: usize,
    /// Per-instance time budget.
    pub budget: Option<Duration>,
    pub strategy: Strategy,
    pub max_n: usize,
    pub timings: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        Self {
            workers: 1,
            budget: None,
            strategy: Strategy::Auto,
            max_n: ktdom::DEFAULT_MAX_N,
            timings: false,
        }
    }
}

impl RunOptions {
    pub fn validate(&self) -> Result<()> {
        if self.workers == 0 {
            bail!("worker count must be positive");
        }
        if self.budget.is_some_and(|b| b.is_zero()) {
            bail!("time budget must be positive");
        }
        Ok(())
    }

    /// Solver options for one instance; the budget clock starts now.
    fn solver(&self, workers: usize) -> SolveOptions {
        let opts = SolveOptions {
            strategy: self.strategy,
            workers,
            max_n: self.max_n,
            deadline: None,
        };
        match self.budget {
            Some(b) => opts.with_budget(b),
            None => opts,
        }
    }

    fn pool(&self) -> Result<rayon::ThreadPool> {
        Ok(rayon::ThreadPoolBuilder::new()
            .num_threads(self.workers)
            .build()?)
    }
}

/// Where a solve reads its instance from.
#[derive(Debug, Clone)]
pub enum Source {
    Family(FamilySpec),
    File(PathBuf),
}

#[derive(Debug, Clone)]
pub struct SolveConfig {
    pub source: Source,
    pub k: usize,
    pub quantity: Quantity,
    /// Read the input as a graph and solve on its open neighbourhood
    /// hypergraph.
    pub as_hypergraph: bool,
}

enum Loaded {
    Graph(String, ktdom::Graph),
    Hyper(String, Hypergraph, usize),
}

fn load(cfg: &SolveConfig) -> Result<Loaded> {
    let (name, graph_text) = match &cfg.source {
        Source::Family(spec) => {
            let g = spec.generate()?;
            if cfg.quantity.is_hypergraph() {
                let delta = g.min_degree();
                return Ok(Loaded::Hyper(
                    format!("H({spec})"),
                    open_neighborhood_hypergraph(&g)?,
                    delta,
                ));
            }
            return Ok(Loaded::Graph(spec.to_string(), g));
        }
        Source::File(path) => {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))?;
            (path.display().to_string(), text)
        }
    };
    if !cfg.quantity.is_hypergraph() {
        if cfg.as_hypergraph {
            bail!("--as-hypergraph only applies to tau and upsilon");
        }
        return Ok(Loaded::Graph(name, parse_graph(&graph_text)?));
    }
    if cfg.as_hypergraph {
        let g = parse_graph(&graph_text)?;
        let delta = g.min_degree();
        Ok(Loaded::Hyper(
            format!("H({name})"),
            open_neighborhood_hypergraph(&g)?,
            delta,
        ))
    } else {
        let h = parse_hypergraph(&graph_text)?;
        let min_edge = h.min_edge().unwrap_or(0);
        Ok(Loaded::Hyper(name, h, min_edge))
    }
}

/// Solves one instance. For hypergraphs the `delta` column holds the
/// smallest edge size.
pub fn run_solve(cfg: &SolveConfig, run: &RunOptions) -> Result<Vec<LedgerRow>> {
    run.validate()?;
    let opts = run.solver(run.workers);
    let row = match load(cfg)? {
        Loaded::Graph(name, g) => {
            let r = match cfg.quantity {
                Quantity::Gamma => gamma_ktt_with(&g, cfg.k, &opts)?,
                Quantity::UpperGamma => upper_gamma_ktt_with(&g, cfg.k, &opts)?,
                _ => unreachable!("hypergraph quantities load hypergraphs"),
            };
            LedgerRow::solved(
                &name,
                g.n(),
                g.min_degree(),
                cfg.k,
                cfg.quantity,
                &r,
                run.timings,
            )
        }
        Loaded::Hyper(name, h, delta) => {
            let r = match cfg.quantity {
                Quantity::Tau => tau_k_with(&h, cfg.k, &opts)?,
                Quantity::Upsilon => upsilon_k_with(&h, cfg.k, &opts)?,
                _ => unreachable!("graph quantities load graphs"),
            };
            LedgerRow::solved(&name, h.n(), delta, cfg.k, cfg.quantity, &r, run.timings)
        }
    };
    assert_eq!(
        row.value,
        row.witness.as_ref().map(|w| w.split_whitespace().count())
    );
    Ok(vec![row])
}

#[derive(Debug, Clone, Default)]
pub struct VerifyConfig {
    pub claims: Vec<ClaimId>,
    /// Orders, part-size totals or `n` of `K_n`, depending on the claim.
    pub n: Option<IntRange>,
    pub k: Option<IntRange>,
    pub corpus: Option<CorpusSpec>,
    pub families: Option<String>,
    /// Largest product or corpus graph to build; 25 for C15–C17 and 16
    /// otherwise when unset.
    pub max_order: Option<usize>,
}

impl VerifyConfig {
    fn order_cap(&self, claim: ClaimId) -> usize {
        self.max_order
            .unwrap_or(if (15..=17).contains(&claim.number()) {
                25
            } else {
                16
            })
    }
}

/// Outcome of evaluating one (claim, parameters) task.
#[derive(Debug, Clone)]
pub enum TaskOutcome {
    Report(ClaimReport),
    /// The solver gave up: `timed-out` or `too-large`.
    Skipped {
        claim: ClaimId,
        params: String,
        status: &'static str,
    },
}

impl TaskOutcome {
    pub fn claim(&self) -> ClaimId {
        match self {
            TaskOutcome::Report(r) => r.claim,
            TaskOutcome::Skipped { claim, .. } => *claim,
        }
    }

    pub fn status(&self) -> String {
        match self {
            TaskOutcome::Report(r) => r.verdict.to_string(),
            TaskOutcome::Skipped { status, .. } => status.to_string(),
        }
    }

    pub fn is_failure(&self) -> bool {
        matches!(self, TaskOutcome::Report(r) if r.is_failure())
    }

    pub fn row(&self, timings: bool) -> DetailedRow {
        match self {
            TaskOutcome::Report(r) => DetailedRow::from_report(r, timings),
            TaskOutcome::Skipped {
                claim,
                params,
                status,
            } => {
                let mut d =
                    DetailedRow::plain(LedgerRow::unevaluated(&claim.to_string(), params, status));
                d.params = Some(params.clone());
                d
            }
        }
    }
}

#[derive(Debug, Clone)]
pub struct Outcome {
    pub tasks: Vec<TaskOutcome>,
}

impl Outcome {
    pub fn rows(&self, timings: bool) -> Vec<DetailedRow> {
        self.tasks.iter().map(|t| t.row(timings)).collect()
    }

    pub fn failures(&self) -> usize {
        self.tasks.iter().filter(|t| t.is_failure()).count()
    }

    /// Per-claim verdict counts plus one line per noteworthy task.
    pub fn summary(&self, all_points_of: &[ClaimId]) -> String {
        use std::collections::BTreeMap;
        use std::fmt::Write as _;
        let mut counts: BTreeMap<ClaimId, BTreeMap<String, usize>> = BTreeMap::new();
        for t in &self.tasks {
            *counts
                .entry(t.claim())
                .or_default()
                .entry(t.status())
                .or_default() += 1;
        }
        let mut out = String::new();
        writeln!(
            out,
            "{:<5} {:<10} {:>6} {:>9} {:>13} {:>11} {:>10}",
            "claim", "kind", "holds", "violated", "inapplicable", "unresolved", "skipped"
        )
        .unwrap();
        for (claim, c) in &counts {
            let get = |k: &str| c.get(k).copied().unwrap_or(0);
            let kind = match claim.kind() {
                ClaimKind::Theorem => "theorem",
                ClaimKind::Conjecture => "conjecture",
                ClaimKind::Question => "question",
            };
            writeln!(
                out,
                "{:<5} {:<10} {:>6} {:>9} {:>13} {:>11} {:>10}",
                claim.to_string(),
                kind,
                get("holds"),
                get("violated"),
                get("inapplicable"),
                get("unresolved"),
                get("timed-out") + get("too-large"),
            )
            .unwrap();
        }
        for t in &self.tasks {
            let show = match t {
                TaskOutcome::Report(r) => {
                    matches!(r.verdict, Verdict::Violated | Verdict::Unresolved)
                        || (all_points_of.contains(&r.claim) && r.verdict != Verdict::Inapplicable)
                }
                TaskOutcome::Skipped { .. } => true,
            };
            if !show {
                continue;
            }
            match t {
                TaskOutcome::Report(r) => writeln!(
                    out,
                    "{} [{}] {}: expected {}, observed {}",
                    r.claim, r.verdict, r.params, r.expected, r.observed
                ),
                TaskOutcome::Skipped {
                    claim,
                    params,
                    status,
                } => writeln!(out, "{claim} [{status}] {params}"),
            }
            .unwrap();
        }
        write!(out, "{} proved-claim violation(s)", self.failures()).unwrap();
        out
    }
}

const PAIR_FAMILIES: &str = "K3,K4,C4,C5,multipartite:2-2";
const CROSS_FAMILIES: &str = "K2,K3,C4,K4";
/// Small graphs that are Gamma-external for some k, so C15–C17 get applicable points.
const EXTERNAL_FAMILIES: &str = "join(K1,P4),rook:2,3,C4,P4,K3,multipartite:2-3";
const DEFAULT_CORPUS: CorpusSpec = CorpusSpec {
    connected: true,
    max_n: 6,
};

fn levels(range: Option<IntRange>, default: IntRange) -> Vec<usize> {
    range.unwrap_or(default).iter().collect()
}

/// Levels `k` for a graph: the given range, or `1..=δ`.
fn graph_levels(range: Option<IntRange>, delta: usize) -> Vec<usize> {
    match range {
        Some(r) => r.iter().collect(),
        None => (1..=delta).collect(),
    }
}

fn product_fits(g: &Instance, h: &Instance, max_order: usize) -> bool {
    g.graph.n() * h.graph.n() <= max_order
}

/// The default parameter grid of `claim` under the overrides in `cfg`.
pub fn grid(claim: ClaimId, cfg: &VerifyConfig) -> Result<Vec<ClaimParams>> {
    let mut out = Vec::new();
    let family_list = |default: &str| parse_families(cfg.families.as_deref().unwrap_or(default));
    let max_order = cfg.order_cap(claim);
    match claim.number() {
        1..=4 | 10 | 11 | 23..=26 => {
            let graphs = match (&cfg.families, cfg.corpus) {
                (Some(list), _) => parse_families(list)?,
                (None, corpus) => corpus.unwrap_or(DEFAULT_CORPUS).instances(cfg.n)?,
            };
            for g in graphs {
                if g.graph.n() > max_order {
                    continue;
                }
                for k in graph_levels(cfg.k, g.graph.min_degree()) {
                    out.push(ClaimParams::Graph { g: g.clone(), k });
                }
            }
        }
        5 | 6 => {
            for n in levels(cfg.n, IntRange::new(2, 12)) {
                out.push(ClaimParams::Order { n });
            }
        }
        7..=9 => {
            for total in levels(cfg.n, IntRange::new(2, 10)) {
                for parts in partitions(total) {
                    let delta = total - parts[parts.len() - 1];
                    for k in graph_levels(cfg.k, delta) {
                        out.push(ClaimParams::Parts {
                            parts: parts.clone(),
                            k,
                        });
                    }
                }
            }
        }
        12 => {
            for n in levels(cfg.n, IntRange::new(3, 8)) {
                for m in 3..=n {
                    if n * m > max_order {
                        continue;
                    }
                    for k in graph_levels(cfg.k, m - 1).into_iter().filter(|&k| k >= 2) {
                        out.push(ClaimParams::Rook { n, m, k });
                    }
                }
            }
        }
        13 => {
            for k in levels(cfg.k, IntRange::new(1, 3)) {
                out.push(ClaimParams::Level { k });
            }
        }
        14..=17 | 19 => {
            let fams = family_list(if (15..=17).contains(&claim.number()) {
                EXTERNAL_FAMILIES
            } else {
                PAIR_FAMILIES
            })?;
            let lowest = if matches!(claim.number(), 14..=16) {
                2
            } else {
                1
            };
            for g in &fams {
                for h in &fams {
                    if !product_fits(g, h, max_order) {
                        continue;
                    }
                    for k in levels(cfg.k, IntRange::new(lowest, 3)) {
                        out.push(ClaimParams::Pair {
                            g: g.clone(),
                            h: h.clone(),
                            k,
                        });
                    }
                }
            }
        }
        18 => {
            let fams = family_list(CROSS_FAMILIES)?;
            for g in &fams {
                for h in &fams {
                    if !product_fits(g, h, max_order) {
                        continue;
                    }
                    for k in graph_levels(cfg.k, g.graph.min_degree()) {
                        for l in graph_levels(cfg.k, h.graph.min_degree()) {
                            out.push(ClaimParams::CrossPair {
                                g: g.clone(),
                                h: h.clone(),
                                k,
                                l,
                            });
                        }
                    }
                }
            }
        }
        20 => {
            for n in levels(cfg.n, IntRange::new(2, 8)) {
                if 2 * n > max_order {
                    continue;
                }
                for k in graph_levels(cfg.k, n - 1) {
                    out.push(ClaimParams::CompleteCross { n, m: 2, k });
                }
            }
        }
        21 => {
            for n in levels(cfg.n, IntRange::new(2, 5)) {
                for m in 2..=n {
                    if n * m > max_order {
                        continue;
                    }
                    for k in graph_levels(cfg.k, (n - 1) * (m - 1)) {
                        out.push(ClaimParams::CompleteCross { n, m, k });
                    }
                }
            }
        }
        22 => {
            let totals = levels(cfg.n, IntRange::new(2, max_order / 2));
            for &a in &totals {
                for &b in &totals {
                    if a * b > max_order {
                        continue;
                    }
                    for t in partitions(a) {
                        for s in partitions(b) {
                            let delta = (a - t[t.len() - 1]) * (b - s[s.len() - 1]);
                            for k in graph_levels(cfg.k, delta) {
                                out.push(ClaimParams::PartsPair {
                                    t: t.clone(),
                                    s: s.clone(),
                                    k,
                                });
                            }
                        }
                    }
                }
            }
        }
        _ => unreachable!(),
    }
    Ok(out)
}

/// Evaluates `tasks` in parallel; results keep the task order.
pub fn evaluate(tasks: &[(ClaimId, ClaimParams)], run: &RunOptions) -> Result<Outcome> {
    run.validate()?;
    let results: Vec<Result<TaskOutcome>> = run.pool()?.install(|| {
        tasks
            .par_iter()
            .map(|(claim, params)| {
                let opts = run.solver(1);
                match check_claim_with(*claim, params, &opts) {
                    Ok(r) => Ok(TaskOutcome::Report(r)),
                    Err(Error::Timeout { .. }) => Ok(TaskOutcome::Skipped {
                        claim: *claim,
                        params: params.to_string(),
                        status: "timed-out",
                    }),
                    Err(Error::Resource(_)) => Ok(TaskOutcome::Skipped {
                        claim: *claim,
                        params: params.to_string(),
                        status: "too-large",
                    }),
                    Err(e) => Err(anyhow::Error::new(e).context(format!("{claim} at {params}"))),
                }
            })
            .collect()
    });
    Ok(Outcome {
        tasks: results.into_iter().collect::<Result<_>>()?,
    })
}

/// Runs every requested claim over its grid.
pub fn run_verify(cfg: &VerifyConfig, run: &RunOptions) -> Result<Outcome> {
    if cfg.claims.is_empty() {
        bail!("no claims selected");
    }
    let mut tasks = Vec::new();
    for &claim in &cfg.claims {
        for params in grid(claim, cfg)? {
            tasks.push((claim, params));
        }
    }
    evaluate(&tasks, run)
}

#[derive(Debug, Clone)]
pub struct ScanConfig {
    pub families: String,
    pub k: IntRange,
    /// Orders `n`, `m` of the `K_n × K_m` points; `None` skips them.
    pub question_n: Option<IntRange>,
    pub max_order: usize,
}

impl Default for ScanConfig {
    fn default() -> Self {
        Self {
            families: PAIR_FAMILIES.to_string(),
            k: IntRange::new(2, 3),
            question_n: Some(IntRange::new(2, 5)),
            max_order: 16,
        }
    }
}

/// Scans Cartesian products of family pairs for the product conjecture,
/// alongside the proved product bounds, and records `K_n × K_m` data points.
pub fn run_scan(cfg: &ScanConfig, run: &RunOptions) -> Result<Outcome> {
    let fams = parse_families(&cfg.families)?;
    let id = |n| ClaimId::new(n).expect("registered claim");
    let mut tasks = Vec::new();
    for g in &fams {
        for h in &fams {
            if !product_fits(g, h, cfg.max_order) {
                continue;
            }
            for k in cfg.k.iter() {
                if g.graph.min_degree() < k || h.graph.min_degree() < k {
                    continue;
                }
                let pair = ClaimParams::Pair {
                    g: g.clone(),
                    h: h.clone(),
                    k,
                };
                tasks.push((id(14), pair.clone()));
                let product = Instance::new(
                    format!("cart({},{})", g.name, h.name),
                    ktdom::graph::cartesian_product(&g.graph, &h.graph),
                );
                tasks.push((id(1), ClaimParams::Graph { g: product, k }));
                for c in [15, 16, 17] {
                    tasks.push((id(c), pair.clone()));
                }
            }
        }
    }
    if let Some(range) = cfg.question_n {
        for n in range.iter() {
            for m in range.lo..=n {
                if n * m > cfg.max_order || m < 2 {
                    continue;
                }
                for k in cfg.k.iter() {
                    tasks.push((id(21), ClaimParams::CompleteCross { n, m, k }));
                }
            }
        }
    }
    evaluate(&tasks, run)
}
