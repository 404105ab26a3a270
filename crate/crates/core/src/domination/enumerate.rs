use std::ops::ControlFlow;

use super::search::{MaskGraph, MinimalSearch, Node};
use super::{is_minimal_ktds_by_deletion, require_min_degree, solver};
use crate::error::Result;
use crate::graph::Graph;
use crate::solve::{Budget, SolveOptions};
use crate::vertex_set::VertexSet;

/// Visits every minimal kTDS of `g` once, in lexicographic order of member
/// lists, until `visit` breaks. Returns the number of sets visited.
pub fn enumerate_minimal_ktds<F>(g: &Graph, k: usize, visit: F) -> Result<usize>
where
    F: FnMut(&VertexSet) -> ControlFlow<()>,
{
    enumerate_minimal_ktds_with(g, k, &SolveOptions::default(), visit)
}

pub fn enumerate_minimal_ktds_with<F>(
    g: &Graph,
    k: usize,
    opts: &SolveOptions,
    mut visit: F,
) -> Result<usize>
where
    F: FnMut(&VertexSet) -> ControlFlow<()>,
{
    require_min_degree(g, k)?;
    opts.check_order(g.n())?;
    let mg = MaskGraph::new(g, k);
    let mut visited = 0;
    MinimalSearch::new(&mg, Budget::new(opts.deadline)).run(
        &mut |_, _| Node::Continue,
        &mut |s| {
            let set = VertexSet::from_mask(g.n(), s);
            debug_assert!(is_minimal_ktds_by_deletion(g, &set, k));
            visited += 1;
            visit(&set)
        },
    )?;
    Ok(visited)
}

/// Number of minimal kTDS; zero when `δ(g) < k` since then no kTDS exists.
pub fn count_minimal_ktds(g: &Graph, k: usize) -> Result<usize> {
    if k >= 1 && g.n() > 0 && g.min_degree() < k {
        return Ok(0);
    }
    enumerate_minimal_ktds(g, k, |_| ControlFlow::Continue(()))
}

/// A `Γ×k,t`-set in which every member has a k-open private neighbour outside
/// the set, if one exists; the lexicographically least such set.
pub fn is_gamma_external(g: &Graph, k: usize) -> Result<Option<VertexSet>> {
    is_gamma_external_with(g, k, &SolveOptions::default())
}

pub fn is_gamma_external_with(
    g: &Graph,
    k: usize,
    opts: &SolveOptions,
) -> Result<Option<VertexSet>> {
    let target = solver::upper_gamma_ktt_with(g, k, opts)?.value;
    let mg = MaskGraph::new(g, k);
    let mut found = None;
    MinimalSearch::new(&mg, Budget::new(opts.deadline)).run(
        &mut |chosen, undecided| {
            let lo = chosen.count_ones() as usize;
            let hi = lo + undecided.count_ones() as usize;
            if lo > target || hi < target {
                Node::Cut
            } else {
                Node::Continue
            }
        },
        &mut |s| {
            if s.count_ones() as usize == target && mg.externally_witnessed(s) == s {
                found = Some(VertexSet::from_mask(g.n(), s));
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        },
    )?;
    Ok(found)
}
