//! Simple undirected graphs, the families and products built from them, and
//! the edge-list file format.

mod family;
pub(crate) mod io;
mod ops;

pub use family::FamilySpec;
pub use io::{parse_graph, serialize_graph};
pub use ops::{cartesian_product, cross_product, disjoint_union, join, k_join, k_join_with};

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// A finite simple undirected graph on the vertices `0..n`.
///
/// Graphs are immutable once built; every constructor checks symmetry and the
/// absence of loops.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self {
            adj: (0..n).map(|_| VertexSet::empty(n)).collect(),
        }
    }

    /// Builds a graph from 0-based edges. Loops, duplicates and out-of-range
    /// endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Parameter(format!("edge {u}-{v} outside 0..{n}")));
            }
            if u == v {
                return Err(Error::Parameter(format!("loop at vertex {u}")));
            }
            if !g.adj[u].insert(v) {
                return Err(Error::Parameter(format!("duplicate edge {u}-{v}")));
            }
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    /// Builds a graph from a symmetric adjacency predicate evaluated on every
    /// unordered pair.
    pub(crate) fn from_fn(n: usize, adjacent: impl Fn(usize, usize) -> bool) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if adjacent(u, v) {
                    g.adj[u].insert(v);
                    g.adj[v].insert(u);
                }
            }
        }
        g
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// Minimum degree; `0` for the graph on no vertices.
    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(VertexSet::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(VertexSet::len).max().unwrap_or(0)
    }

    pub fn is_regular(&self, d: usize) -> bool {
        self.adj.iter().all(|a| a.len() == d)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, a)| a.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Neighbourhoods as bit masks, available when `n <= 64`.
    pub fn adjacency_masks(&self) -> Option<Vec<u64>> {
        self.adj.iter().map(VertexSet::to_mask).collect()
    }

    /// Subgraph induced by `keep`, with vertices renumbered in increasing order.
    pub fn induced(&self, keep: &[usize]) -> Graph {
        Graph::from_fn(keep.len(), |a, b| self.has_edge(keep[a], keep[b]))
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for w in self.adj[u].iter() {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Checks the representation invariants. Every constructor upholds them;
    /// this exists for tests and for graphs assembled by hand.
    pub fn validate(&self) -> Result<()> {
        let n = self.n();
        for (v, a) in self.adj.iter().enumerate() {
            if a.host_size() != n {
                return Err(Error::Parameter(format!(
                    "vertex {v}: neighbour set over wrong host"
                )));
            }
            if a.contains(v) {
                return Err(Error::Parameter(format!("loop at vertex {v}")));
            }
            for u in a.iter() {
                if !self.adj[u].contains(v) {
                    return Err(Error::Parameter(format!("asymmetric edge {v}-{u}")));
                }
            }
        }
        Ok(())
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n())?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        f.write_str("])")
    }
}
