//! Exhaustive corpora of small graphs, one representative per isomorphism
//! class.
//!
//! Classes are identified by a canonical adjacency code: vertices are first
//! split into colour classes by iterated degree refinement (an
//! isomorphism-invariant ordered partition), then the code is minimised over
//! every ordering compatible with that partition.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order the corpus generator accepts.
pub const MAX_CORPUS_ORDER: usize = 9;

/// All graphs on `n` vertices up to isomorphism, in a fixed order.
pub fn all_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > MAX_CORPUS_ORDER {
        return Err(Error::Resource(format!(
            "graph corpus is limited to {MAX_CORPUS_ORDER} vertices, asked for {n}"
        )));
    }
    let mut level: Vec<Graph> = vec![Graph::empty(0)];
    for order in 1..=n {
        let mut next: BTreeMap<(Vec<usize>, u64), Graph> = BTreeMap::new();
        for g in &level {
            for attach in 0u64..(1 << (order - 1)) {
                let h = extend(g, attach);
                next.entry(canonical_code(&h)).or_insert(h);
            }
        }
        level = next.into_values().collect();
    }
    Ok(level)
}

/// Connected graphs on `n` vertices up to isomorphism.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    Ok(all_graphs(n)?
        .into_iter()
        .filter(Graph::is_connected)
        .collect())
}

fn extend(g: &Graph, attach: u64) -> Graph {
    let n = g.n();
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    edges.extend((0..n).filter(|&v| attach >> v & 1 == 1).map(|v| (v, n)));
    Graph::from_edges(n + 1, edges).expect("extension of a simple graph is simple")
}

/// Canonical form: the ordered colour-class sizes and the least upper-triangle
/// adjacency code over all class-respecting vertex orders. Two graphs get the
/// same form exactly when they are isomorphic.
pub fn canonical_code(g: &Graph) -> (Vec<usize>, u64) {
    let n = g.n();
    assert!(n <= 11, "adjacency code needs n(n-1)/2 <= 64 bits");
    let colours = refine(g);
    let classes = colours.iter().copied().max().map_or(0, |c| c + 1);
    let mut cells: Vec<Vec<usize>> = vec![Vec::new(); classes];
    for (v, &c) in colours.iter().enumerate() {
        cells[c].push(v);
    }
    let sizes = cells.iter().map(Vec::len).collect();

    let mut order = Vec::with_capacity(n);
    let mut best = u64::MAX;
    permute_cells(g, &mut cells, 0, &mut order, &mut best);
    (sizes, best)
}

/// Iterated degree refinement. Colours are ranks of signatures, so the
/// numbering of colour classes does not depend on the vertex numbering.
fn refine(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut colour: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut classes = usize::MAX;
    loop {
        let signature: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut around: Vec<usize> = g.neighbors(v).iter().map(|u| colour[u]).collect();
                around.sort_unstable();
                (colour[v], around)
            })
            .collect();
        let mut distinct = signature.clone();
        distinct.sort();
        distinct.dedup();
        colour = signature
            .iter()
            .map(|s| distinct.binary_search(s).expect("present"))
            .collect();
        if distinct.len() == classes {
            return colour;
        }
        classes = distinct.len();
    }
}

fn permute_cells(
    g: &Graph,
    cells: &mut [Vec<usize>],
    cell: usize,
    order: &mut Vec<usize>,
    best: &mut u64,
) {
    if cell == cells.len() {
        let code = adjacency_code(g, order);
        *best = (*best).min(code);
        return;
    }
    let len = cells[cell].len();
    permute_within(g, cells, cell, 0, len, order, best);
}

fn permute_within(
    g: &Graph,
    cells: &mut [Vec<usize>],
    cell: usize,
    fixed: usize,
    len: usize,
    order: &mut Vec<usize>,
    best: &mut u64,
) {
    if fixed == len {
        permute_cells(g, cells, cell + 1, order, best);
        return;
    }
    for i in fixed..len {
        cells[cell].swap(fixed, i);
        order.push(cells[cell][fixed]);
        permute_within(g, cells, cell, fixed + 1, len, order, best);
        order.pop();
        cells[cell].swap(fixed, i);
    }
}

fn adjacency_code(g: &Graph, order: &[usize]) -> u64 {
    let mut code = 0u64;
    let mut bit = 0;
    for i in 0..order.len() {
        for j in i + 1..order.len() {
            if g.has_edge(order[i], order[j]) {
                code |= 1 << bit;
            }
            bit += 1;
        }
    }
    code
}
