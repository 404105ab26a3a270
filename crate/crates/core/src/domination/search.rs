//! Bit-mask search over vertex subsets for graphs with at most 64 vertices.

use std::ops::ControlFlow;

use crate::error::Result;
use crate::graph::Graph;
use crate::solve::Budget;

/// Neighbourhood masks plus the vertices every kTDS must contain.
pub(crate) struct MaskGraph {
    pub n: usize,
    pub adj: Vec<u64>,
    pub k: u32,
    pub forced: u64,
}

impl MaskGraph {
    /// Caller guarantees `g.n() <= 64`.
    pub fn new(g: &Graph, k: usize) -> Self {
        let adj = g
            .adjacency_masks()
            .expect("graph too large for mask search");
        let forced = adj
            .iter()
            .filter(|a| a.count_ones() as usize == k)
            .fold(0, |acc, a| acc | a);
        Self {
            n: g.n(),
            adj,
            k: k as u32,
            forced,
        }
    }

    pub fn all(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    pub fn is_ktds(&self, s: u64) -> bool {
        self.adj.iter().all(|&a| (a & s).count_ones() >= self.k)
    }

    /// For a kTDS `s`, the union of neighbourhoods of vertices seeing exactly
    /// `k` members; `None` if `s` is not a kTDS.
    pub fn tight_cover(&self, s: u64) -> Option<u64> {
        let mut cover = 0;
        for &a in &self.adj {
            let c = (a & s).count_ones();
            if c < self.k {
                return None;
            }
            if c == self.k {
                cover |= a;
            }
        }
        Some(cover)
    }

    pub fn is_minimal(&self, s: u64) -> bool {
        self.tight_cover(s).is_some_and(|cover| s & !cover == 0)
    }

    /// Members of `s` with a private neighbour outside `s`.
    pub fn externally_witnessed(&self, s: u64) -> u64 {
        let mut cover = 0;
        for (x, &a) in self.adj.iter().enumerate() {
            if s >> x & 1 == 0 && (a & s).count_ones() == self.k {
                cover |= a;
            }
        }
        cover & s
    }
}

/// What a bound hook may ask of the search at an inner node.
pub(crate) enum Node {
    Continue,
    Cut,
}

/// Include-first depth-first search over vertices `0..n` for minimal kTDS.
///
/// Leaves are reached in lexicographic order of their member lists. Inner
/// nodes are cut when some vertex can no longer reach `k` chosen neighbours,
/// or when some chosen vertex has lost every candidate private neighbour
/// (a vertex seeing more than `k` chosen vertices never sees exactly `k`
/// again).
pub(crate) struct MinimalSearch<'a> {
    g: &'a MaskGraph,
    chosen: u64,
    undecided: u64,
    count: Vec<u32>,
    avail: Vec<u32>,
    pub budget: Budget,
}

impl<'a> MinimalSearch<'a> {
    pub fn new(g: &'a MaskGraph, budget: Budget) -> Self {
        let undecided = g.all() & !g.forced;
        let count = g.adj.iter().map(|a| (a & g.forced).count_ones()).collect();
        let avail = g.adj.iter().map(|a| (a & undecided).count_ones()).collect();
        Self {
            g,
            chosen: g.forced,
            undecided,
            count,
            avail,
            budget,
        }
    }

    /// Runs the search. `bound(chosen, undecided)` may cut a subtree;
    /// `leaf(set)` receives each minimal kTDS and may stop the search.
    pub fn run<B, L>(&mut self, bound: &mut B, leaf: &mut L) -> Result<()>
    where
        B: FnMut(u64, u64) -> Node,
        L: FnMut(u64) -> ControlFlow<()>,
    {
        if self.feasible_everywhere() && self.witnesses_possible() {
            let _ = self.descend(bound, leaf)?;
        }
        Ok(())
    }

    fn feasible_everywhere(&self) -> bool {
        (0..self.g.n).all(|x| self.count[x] + self.avail[x] >= self.g.k)
    }

    fn witnesses_possible(&self) -> bool {
        let mut cover = 0;
        for x in 0..self.g.n {
            if self.count[x] <= self.g.k {
                cover |= self.g.adj[x];
            }
        }
        self.chosen & !cover == 0
    }

    fn descend<B, L>(&mut self, bound: &mut B, leaf: &mut L) -> Result<ControlFlow<()>>
    where
        B: FnMut(u64, u64) -> Node,
        L: FnMut(u64) -> ControlFlow<()>,
    {
        self.budget.tick()?;
        if matches!(bound(self.chosen, self.undecided), Node::Cut) {
            return Ok(ControlFlow::Continue(()));
        }
        if self.undecided == 0 {
            debug_assert!(self.g.is_ktds(self.chosen));
            if self.g.is_minimal(self.chosen) {
                return Ok(leaf(self.chosen));
            }
            return Ok(ControlFlow::Continue(()));
        }
        let v = self.undecided.trailing_zeros() as usize;
        let bit = 1u64 << v;
        let nbrs = self.g.adj[v];
        self.undecided &= !bit;

        // include v
        self.chosen |= bit;
        let mut newly_saturated = false;
        for x in iter_bits(nbrs) {
            self.count[x] += 1;
            self.avail[x] -= 1;
            newly_saturated |= self.count[x] == self.g.k + 1;
        }
        let ok = !newly_saturated || self.witnesses_possible();
        let flow = if ok && self.g.has_cover_for(v, &self.count) {
            self.descend(bound, leaf)?
        } else {
            ControlFlow::Continue(())
        };
        for x in iter_bits(nbrs) {
            self.count[x] -= 1;
        }
        self.chosen &= !bit;
        if flow.is_break() {
            for x in iter_bits(nbrs) {
                self.avail[x] += 1;
            }
            self.undecided |= bit;
            return Ok(flow);
        }

        // exclude v
        let feasible = iter_bits(nbrs).all(|x| self.count[x] + self.avail[x] >= self.g.k);
        let flow = if feasible {
            self.descend(bound, leaf)?
        } else {
            ControlFlow::Continue(())
        };
        for x in iter_bits(nbrs) {
            self.avail[x] += 1;
        }
        self.undecided |= bit;
        Ok(flow)
    }
}

impl MaskGraph {
    /// A newly chosen `v` needs some neighbour that still sees at most `k`.
    fn has_cover_for(&self, v: usize, count: &[u32]) -> bool {
        iter_bits(self.adj[v]).any(|x| count[x] <= self.k)
    }
}

pub(crate) fn iter_bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(b)
        }
    })
}
