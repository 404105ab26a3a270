use std::cell::Cell;
use std::ops::ControlFlow;
use std::time::Instant;

use super::search::{iter_bits, MaskGraph, MinimalSearch, Node};
use super::{is_minimal_ktds, require_min_degree};
use crate::error::Result;
use crate::graph::Graph;
use crate::solve::{scan_submasks, Best, Budget, SolveOptions, SolveResult};
use crate::vertex_set::VertexSet;

/// `γ×k,t(g)`: the minimum size of a kTDS, with the lexicographically least
/// minimum set as witness.
pub fn gamma_ktt(g: &Graph, k: usize) -> Result<SolveResult> {
    gamma_ktt_with(g, k, &SolveOptions::default())
}

/// `Γ×k,t(g)`: the maximum size of a minimal kTDS, with the lexicographically
/// least such set as witness.
pub fn upper_gamma_ktt(g: &Graph, k: usize) -> Result<SolveResult> {
    upper_gamma_ktt_with(g, k, &SolveOptions::default())
}

pub fn gamma_ktt_with(g: &Graph, k: usize, opts: &SolveOptions) -> Result<SolveResult> {
    solve(g, k, opts, false)
}

pub fn upper_gamma_ktt_with(g: &Graph, k: usize, opts: &SolveOptions) -> Result<SolveResult> {
    solve(g, k, opts, true)
}

fn solve(g: &Graph, k: usize, opts: &SolveOptions, upper: bool) -> Result<SolveResult> {
    require_min_degree(g, k)?;
    opts.check_order(g.n())?;
    let start = Instant::now();

    // Both numbers are additive over connected components, and the union of
    // per-component lexicographic optima is the global lexicographic optimum.
    let mut value = 0;
    let mut witness = VertexSet::empty(g.n());
    let mut nodes = 0;
    for comp in g.components() {
        let sub = g.induced(&comp);
        let mg = MaskGraph::new(&sub, k);
        let (size, mask, explored) = if opts.use_exhaustive(sub.n()) {
            scan(&mg, upper, opts)?
        } else if upper {
            branch_upper(&mg, opts)?
        } else {
            branch_lower(&mg, opts)?
        };
        debug_assert_eq!(mask & mg.forced, mg.forced);
        value += size;
        nodes += explored;
        for i in iter_bits(mask) {
            witness.insert(comp[i]);
        }
    }

    assert_eq!(witness.len(), value);
    assert!(value <= g.n());
    debug_assert!(is_minimal_ktds(g, &witness, k));
    Ok(SolveResult {
        value,
        witness,
        nodes_explored: nodes,
        elapsed: start.elapsed(),
    })
}

/// Scans every superset of the forced vertices.
fn scan(mg: &MaskGraph, upper: bool, opts: &SolveOptions) -> Result<(usize, u64, u64)> {
    let free = mg.all() & !mg.forced;
    let (best, nodes) = scan_submasks(
        mg.forced,
        free,
        opts.workers,
        opts.deadline,
        || Best::new(upper),
        |best: &mut Best, s| {
            let size = s.count_ones() as usize;
            if let Some((b, _)) = best.found {
                if (upper && size < b) || (!upper && size > b) {
                    return;
                }
            }
            let ok = if upper {
                mg.is_minimal(s)
            } else {
                mg.is_ktds(s)
            };
            if ok {
                best.offer(size, s);
            }
        },
        Best::merge,
    )?;
    let (size, mask) = best
        .found
        .expect("the full vertex set is a kTDS when δ ≥ k");
    Ok((size, mask, nodes))
}

/// Maximum minimal kTDS by include-first branch and bound.
///
/// Leaves arrive in lexicographic order, so keeping only strict improvements
/// yields the least optimal set. When `δ ≥ k+1` no minimal kTDS exceeds
/// `n − δ + k`, and reaching that value ends the search.
fn branch_upper(mg: &MaskGraph, opts: &SolveOptions) -> Result<(usize, u64, u64)> {
    let delta = mg.adj.iter().map(|a| a.count_ones()).min().unwrap_or(0) as usize;
    let k = mg.k as usize;
    let cap = if delta > k { mg.n - delta + k } else { mg.n };

    let mut best: Option<(usize, u64)> = None;
    // size of the best set so far; zero until a leaf is found
    let best_size = Cell::new(0);
    let mut search = MinimalSearch::new(mg, Budget::new(opts.deadline));
    search.run(
        &mut |chosen, undecided| {
            let reach = (chosen.count_ones() + undecided.count_ones()) as usize;
            if reach <= best_size.get() {
                Node::Cut
            } else {
                Node::Continue
            }
        },
        &mut |s| {
            let size = s.count_ones() as usize;
            if best.is_none_or(|(b, _)| size > b) {
                best = Some((size, s));
                best_size.set(size);
            }
            if size >= cap {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        },
    )?;
    let (size, mask) = best.expect("a minimal kTDS exists when δ ≥ k");
    Ok((size, mask, search.budget.nodes))
}

/// Minimum kTDS by exclude-first branch and bound.
fn branch_lower(mg: &MaskGraph, opts: &SolveOptions) -> Result<(usize, u64, u64)> {
    let mut state = Lower {
        mg,
        chosen: mg.forced,
        undecided: mg.all() & !mg.forced,
        count: mg
            .adj
            .iter()
            .map(|a| (a & mg.forced).count_ones())
            .collect(),
        avail: vec![0; mg.n],
        best: Best::new(false),
        budget: Budget::new(opts.deadline),
    };
    for x in 0..mg.n {
        state.avail[x] = (mg.adj[x] & state.undecided).count_ones();
    }
    if (0..mg.n).all(|x| state.count[x] + state.avail[x] >= mg.k) {
        state.descend()?;
    }
    let (size, mask) = state
        .best
        .found
        .expect("the full vertex set is a kTDS when δ ≥ k");
    Ok((size, mask, state.budget.nodes))
}

struct Lower<'a> {
    mg: &'a MaskGraph,
    chosen: u64,
    undecided: u64,
    count: Vec<u32>,
    avail: Vec<u32>,
    best: Best,
    budget: Budget,
}

impl Lower<'_> {
    fn descend(&mut self) -> Result<()> {
        self.budget.tick()?;
        let k = self.mg.k;
        // every vertex still needs `k - count` more chosen neighbours
        let deficit = self
            .count
            .iter()
            .map(|&c| k.saturating_sub(c))
            .max()
            .unwrap_or(0);
        let lower = self.chosen.count_ones() + deficit;
        if let Some((b, _)) = self.best.found {
            // ties are kept: a later leaf of equal size may be lexicographically smaller
            if lower as usize > b {
                return Ok(());
            }
        }
        if deficit == 0 {
            self.best
                .offer(self.chosen.count_ones() as usize, self.chosen);
            // adding vertices only grows the set
            return Ok(());
        }
        if self.undecided == 0 {
            return Ok(());
        }
        let v = self.undecided.trailing_zeros() as usize;
        let bit = 1u64 << v;
        let nbrs = self.mg.adj[v];
        self.undecided &= !bit;
        for x in iter_bits(nbrs) {
            self.avail[x] -= 1;
        }

        // exclude v
        if iter_bits(nbrs).all(|x| self.count[x] + self.avail[x] >= k) {
            self.descend()?;
        }

        // include v
        self.chosen |= bit;
        for x in iter_bits(nbrs) {
            self.count[x] += 1;
        }
        self.descend()?;
        for x in iter_bits(nbrs) {
            self.count[x] -= 1;
            self.avail[x] += 1;
        }
        self.chosen &= !bit;
        self.undecided |= bit;
        Ok(())
    }
}
