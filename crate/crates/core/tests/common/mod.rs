//! Naive reference implementations: adjacency matrices and plain subset
//! enumeration, nothing shared with the library's search code.

#![allow(dead_code)]

use ktdom::{Graph, VertexSet};

pub struct Naive {
    pub n: usize,
    pub adj: Vec<Vec<bool>>,
}

impl Naive {
    pub fn new(g: &Graph) -> Self {
        let n = g.n();
        let mut adj = vec![vec![false; n]; n];
        for (u, v) in g.edges() {
            adj[u][v] = true;
            adj[v][u] = true;
        }
        Self { n, adj }
    }

    pub fn min_degree(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.iter().filter(|&&b| b).count())
            .min()
            .unwrap_or(0)
    }

    pub fn seen(&self, x: usize, s: &[usize]) -> usize {
        s.iter().filter(|&&v| self.adj[x][v]).count()
    }

    pub fn is_ktds(&self, s: &[usize], k: usize) -> bool {
        (0..self.n).all(|x| self.seen(x, s) >= k)
    }

    pub fn is_minimal(&self, s: &[usize], k: usize) -> bool {
        self.is_ktds(s, k)
            && (0..s.len()).all(|i| {
                let mut t = s.to_vec();
                t.remove(i);
                !self.is_ktds(&t, k)
            })
    }

    /// Every subset as a sorted member list.
    pub fn subsets(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        (0u64..1 << self.n).map(|m| (0..self.n).filter(|&v| m >> v & 1 == 1).collect())
    }

    /// All minimal kTDS in lexicographic order of member lists.
    pub fn minimal_sets(&self, k: usize) -> Vec<Vec<usize>> {
        let mut out: Vec<_> = self.subsets().filter(|s| self.is_minimal(s, k)).collect();
        out.sort();
        out
    }

    /// (γ, lex-least γ-set, Γ, lex-least Γ-set)
    pub fn numbers(&self, k: usize) -> (usize, Vec<usize>, usize, Vec<usize>) {
        let all = self.minimal_sets(k);
        let lo = all.iter().map(Vec::len).min().unwrap();
        let hi = all.iter().map(Vec::len).max().unwrap();
        let lo_set = all.iter().find(|s| s.len() == lo).unwrap().clone();
        let hi_set = all.iter().find(|s| s.len() == hi).unwrap().clone();
        (lo, lo_set, hi, hi_set)
    }

    pub fn upper(&self, k: usize) -> usize {
        self.numbers(k).2
    }
}

pub fn members(s: &VertexSet) -> Vec<usize> {
    s.iter().collect()
}

pub fn graph(spec: &str) -> Graph {
    spec.parse::<ktdom::FamilySpec>()
        .unwrap()
        .generate()
        .unwrap()
}

/// Graph from the bits of `code` over the pairs `(u, v)`, `u < v`, in order.
pub fn graph_from_code(n: usize, code: u64) -> Graph {
    let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    let edges: Vec<_> = pairs
        .enumerate()
        .filter(|(i, _)| code >> i & 1 == 1)
        .map(|(_, p)| p)
        .collect();
    Graph::from_edges(n, edges).unwrap()
}
