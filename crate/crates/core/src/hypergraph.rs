//! Hypergraphs, open neighbourhood hypergraphs and exact k-transversal
//! numbers.
//!
//! A k-transversal meets every edge in at least `k` vertices. `tau_k` is the
//! smallest size of one and `upsilon_k` the largest size of an
//! inclusion-minimal one. The solvers here work directly on edge lists and
//! test minimality by deletion; they share no search code with the
//! domination solvers, so agreement between `Γ×k,t(G)` and `Υ_k(H_G)` is a
//! real cross-check.

use std::fmt::Write as _;
use std::time::Instant;

use crate::error::{Error, Result};
use crate::graph::io::{content_lines, parse_error, parse_header, parse_vertex};
use crate::graph::Graph;
use crate::solve::{scan_submasks, Best, Budget, SolveOptions, SolveResult};
use crate::vertex_set::VertexSet;

/// Vertices `0..n` with a multiset of non-empty edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<VertexSet>,
}

impl Hypergraph {
    pub fn new(n: usize, edges: Vec<VertexSet>) -> Result<Self> {
        for (i, e) in edges.iter().enumerate() {
            if e.host_size() != n {
                return Err(Error::Argument(format!(
                    "edge {i} is over a host of {} vertices",
                    e.host_size()
                )));
            }
            if e.is_empty() {
                return Err(Error::Argument(format!("edge {i} is empty")));
            }
        }
        Ok(Self { n, edges })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    /// Smallest edge size, `None` without edges.
    pub fn min_edge(&self) -> Option<usize> {
        self.edges.iter().map(VertexSet::len).min()
    }

    pub fn is_uniform(&self, r: usize) -> bool {
        self.edges.iter().all(|e| e.len() == r)
    }
}

/// `H_G`: one edge `N(v)` per vertex `v`, duplicates kept.
pub fn open_neighborhood_hypergraph(g: &Graph) -> Result<Hypergraph> {
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) == 0) {
        return Err(Error::Domain(format!(
            "vertex {v} is isolated, its neighbourhood edge would be empty"
        )));
    }
    Hypergraph::new(g.n(), (0..g.n()).map(|v| g.neighbors(v).clone()).collect())
}

pub fn is_k_transversal(h: &Hypergraph, s: &VertexSet, k: usize) -> bool {
    s.host_size() == h.n && h.edges.iter().all(|e| e.intersection_len(s) >= k)
}

/// No proper subset of `s` is a k-transversal. Single deletions suffice
/// because the property is closed under supersets.
pub fn is_minimal_k_transversal(h: &Hypergraph, s: &VertexSet, k: usize) -> bool {
    is_k_transversal(h, s, k)
        && s.iter().all(|v| {
            let mut t = s.clone();
            t.remove(v);
            !is_k_transversal(h, &t, k)
        })
}

pub fn tau_k(h: &Hypergraph, k: usize) -> Result<SolveResult> {
    tau_k_with(h, k, &SolveOptions::default())
}

pub fn upsilon_k(h: &Hypergraph, k: usize) -> Result<SolveResult> {
    upsilon_k_with(h, k, &SolveOptions::default())
}

pub fn tau_k_with(h: &Hypergraph, k: usize, opts: &SolveOptions) -> Result<SolveResult> {
    solve(h, k, opts, false)
}

pub fn upsilon_k_with(h: &Hypergraph, k: usize, opts: &SolveOptions) -> Result<SolveResult> {
    solve(h, k, opts, true)
}

struct EdgeMasks {
    n: usize,
    edges: Vec<u64>,
    k: u32,
}

impl EdgeMasks {
    fn is_transversal(&self, s: u64) -> bool {
        self.edges.iter().all(|&e| (e & s).count_ones() >= self.k)
    }

    fn is_minimal(&self, s: u64) -> bool {
        if !self.is_transversal(s) {
            return false;
        }
        let mut rest = s;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            rest &= rest - 1;
            if self.is_transversal(s & !bit) {
                return false;
            }
        }
        true
    }

    fn all(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }
}

fn solve(h: &Hypergraph, k: usize, opts: &SolveOptions, upper: bool) -> Result<SolveResult> {
    if k == 0 {
        return Err(Error::Argument("k must be at least 1".into()));
    }
    if let Some((i, e)) = h.edges.iter().enumerate().find(|(_, e)| e.len() < k) {
        return Err(Error::Domain(format!(
            "edge {i} has {} vertices, fewer than k = {k}: no k-transversal exists",
            e.len()
        )));
    }
    opts.check_order(h.n)?;
    let start = Instant::now();
    let em = EdgeMasks {
        n: h.n,
        edges: h
            .edges
            .iter()
            .map(|e| e.to_mask().expect("order checked"))
            .collect(),
        k: k as u32,
    };
    let (size, mask, nodes) = if opts.use_exhaustive(h.n) {
        scan(&em, upper, opts)?
    } else {
        branch(&em, upper, opts)?
    };
    let witness = VertexSet::from_mask(h.n, mask);
    assert_eq!(witness.len(), size);
    debug_assert!(is_minimal_k_transversal(h, &witness, k));
    Ok(SolveResult {
        value: size,
        witness,
        nodes_explored: nodes,
        elapsed: start.elapsed(),
    })
}

fn scan(em: &EdgeMasks, upper: bool, opts: &SolveOptions) -> Result<(usize, u64, u64)> {
    let (best, nodes) = scan_submasks(
        0,
        em.all(),
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
                em.is_minimal(s)
            } else {
                em.is_transversal(s)
            };
            if ok {
                best.offer(size, s);
            }
        },
        Best::merge,
    )?;
    let (size, mask) = best.found.expect("the full vertex set is a k-transversal");
    Ok((size, mask, nodes))
}

/// Plain include/exclude search with an edge feasibility cut and a size
/// bound; every leaf is checked in full.
fn branch(em: &EdgeMasks, upper: bool, opts: &SolveOptions) -> Result<(usize, u64, u64)> {
    struct State<'a> {
        em: &'a EdgeMasks,
        upper: bool,
        best: Best,
        budget: Budget,
    }

    fn go(st: &mut State<'_>, chosen: u64, undecided: u64) -> Result<()> {
        st.budget.tick()?;
        let k = st.em.k;
        if st
            .em
            .edges
            .iter()
            .any(|&e| ((e & (chosen | undecided)).count_ones()) < k)
        {
            return Ok(());
        }
        let size = chosen.count_ones() as usize;
        if let Some((b, _)) = st.best.found {
            if st.upper && size + (undecided.count_ones() as usize) < b {
                return Ok(());
            }
            if !st.upper && size > b {
                return Ok(());
            }
        }
        if undecided == 0 {
            let ok = if st.upper {
                st.em.is_minimal(chosen)
            } else {
                st.em.is_transversal(chosen)
            };
            if ok {
                st.best.offer(size, chosen);
            }
            return Ok(());
        }
        if !st.upper && st.em.is_transversal(chosen) {
            st.best.offer(size, chosen);
            return Ok(());
        }
        let bit = undecided & undecided.wrapping_neg();
        go(st, chosen | bit, undecided & !bit)?;
        go(st, chosen, undecided & !bit)
    }

    let mut st = State {
        em,
        upper,
        best: Best::new(upper),
        budget: Budget::new(opts.deadline),
    };
    go(&mut st, 0, em.all())?;
    let (size, mask) = st
        .best
        .found
        .expect("the full vertex set is a k-transversal");
    Ok((size, mask, st.budget.nodes))
}

/// Parses the hypergraph text format: a header `h <n> <m>` followed by `m`
/// lines `s <v1> <v2> …` of 1-based vertices; `c` lines are comments.
pub fn parse_hypergraph(text: &str) -> Result<Hypergraph> {
    let mut lines = content_lines(text);
    let (header_line, header) = lines
        .next()
        .ok_or_else(|| parse_error(text.lines().count().max(1), "missing header `h <n> <m>`"))?;
    let (n, m) = parse_header(header_line, &header, "h")?;
    let mut edges = Vec::with_capacity(m);
    let mut last_line = header_line;
    for (line, tokens) in lines {
        last_line = line;
        if tokens[0] != "s" {
            return Err(parse_error(line, "expected edge line `s <v1> <v2> ...`"));
        }
        if tokens.len() == 1 {
            return Err(parse_error(line, "empty edge"));
        }
        let mut e = VertexSet::empty(n);
        for t in &tokens[1..] {
            let v = parse_vertex(line, t, n)?;
            if !e.insert(v) {
                return Err(parse_error(
                    line,
                    format!("vertex {} repeated in edge", v + 1),
                ));
            }
        }
        if edges.len() == m {
            return Err(parse_error(
                line,
                format!("more than the declared {m} edges"),
            ));
        }
        edges.push(e);
    }
    if edges.len() != m {
        return Err(parse_error(
            last_line,
            format!("header declares {m} edges, found {}", edges.len()),
        ));
    }
    Hypergraph::new(n, edges)
}

/// Writes the hypergraph format; edges keep their order, members are sorted.
pub fn serialize_hypergraph(h: &Hypergraph) -> String {
    let mut out = String::new();
    writeln!(out, "h {} {}", h.n, h.edges.len()).unwrap();
    for e in &h.edges {
        writeln!(out, "s {}", e.to_one_based()).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::FamilySpec;
    use crate::solve::Strategy;

    fn graph(s: &str) -> Graph {
        s.parse::<FamilySpec>().unwrap().generate().unwrap()
    }

    fn set(n: usize, m: &[usize]) -> VertexSet {
        VertexSet::from_members(n, m.iter().copied()).unwrap()
    }

    fn edge_lists(h: &Hypergraph) -> Vec<String> {
        h.edges().iter().map(|e| e.to_string()).collect()
    }

    #[test]
    fn neighbourhood_hypergraphs() {
        let h = open_neighborhood_hypergraph(&graph("C4")).unwrap();
        assert_eq!(edge_lists(&h), ["{1,3}", "{0,2}", "{1,3}", "{0,2}"]);
        let h = open_neighborhood_hypergraph(&graph("K3")).unwrap();
        assert_eq!(edge_lists(&h), ["{1,2}", "{0,2}", "{0,1}"]);
        let star = open_neighborhood_hypergraph(&graph("multipartite:1-3")).unwrap();
        assert_eq!(edge_lists(&star), ["{1,2,3}", "{0}", "{0}", "{0}"]);
        assert!(matches!(
            open_neighborhood_hypergraph(&graph("empty:2")),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn transversal_examples() {
        let hc4 = open_neighborhood_hypergraph(&graph("C4")).unwrap();
        assert!(is_k_transversal(&hc4, &VertexSet::full(4), 2));
        assert!(is_minimal_k_transversal(&hc4, &VertexSet::full(4), 2));
        let hk3 = open_neighborhood_hypergraph(&graph("K3")).unwrap();
        assert!(is_minimal_k_transversal(&hk3, &set(3, &[0, 1]), 1));
        assert!(!is_k_transversal(&hk3, &VertexSet::full(3), 3));
    }

    #[test]
    fn solver_examples() {
        let hc4 = open_neighborhood_hypergraph(&graph("C4")).unwrap();
        assert_eq!(upsilon_k(&hc4, 2).unwrap().value, 4);
        let hk4 = open_neighborhood_hypergraph(&graph("K4")).unwrap();
        assert_eq!(tau_k(&hk4, 2).unwrap().value, 3);
        let single = Hypergraph::new(3, vec![VertexSet::full(3)]).unwrap();
        let r = tau_k(&single, 2).unwrap();
        assert_eq!(r.value, 2);
        assert_eq!(r.witness.to_string(), "{0,1}");
        assert!(matches!(tau_k(&single, 4), Err(Error::Domain(_))));
    }

    #[test]
    fn branch_matches_scan() {
        for spec in ["C7", "K5", "rook:3,3", "cross(K4,K2)", "P6"] {
            let h = open_neighborhood_hypergraph(&graph(spec)).unwrap();
            for k in 1..=h.min_edge().unwrap() {
                for upper in [false, true] {
                    let run = |s| {
                        let o = SolveOptions::default().with_strategy(s);
                        if upper {
                            upsilon_k_with(&h, k, &o)
                        } else {
                            tau_k_with(&h, k, &o)
                        }
                        .unwrap()
                    };
                    let a = run(Strategy::Exhaustive);
                    let b = run(Strategy::BranchAndBound);
                    assert_eq!(
                        (a.value, &a.witness),
                        (b.value, &b.witness),
                        "{spec} k={k} upper={upper}"
                    );
                }
            }
        }
    }

    #[test]
    fn text_format() {
        let h = parse_hypergraph("c x\nh 4 2\ns 1 2 3\ns 4 2\n").unwrap();
        assert_eq!(edge_lists(&h), ["{0,1,2}", "{1,3}"]);
        assert_eq!(serialize_hypergraph(&h), "h 4 2\ns 1 2 3\ns 2 4\n");
        for (bad, line) in [
            ("h 3 1\ns 1 4", 2),
            ("h 3 1\ns", 2),
            ("h 3 2\ns 1", 2),
            ("p 3 1\ns 1", 1),
            ("h 3 1\ns 1 1", 2),
        ] {
            match parse_hypergraph(bad) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{bad:?}"),
                other => panic!("{bad:?} gave {other:?}"),
            }
        }
    }
}
