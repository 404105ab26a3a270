//! k-tuple total domination: predicates, private-neighbour witnesses,
//! enumeration of minimal kTDS and the exact solvers for `γ×k,t` and `Γ×k,t`.

mod enumerate;
mod search;
mod solver;

pub use enumerate::{
    count_minimal_ktds, enumerate_minimal_ktds, enumerate_minimal_ktds_with, is_gamma_external,
    is_gamma_external_with,
};
pub use solver::{gamma_ktt, gamma_ktt_with, upper_gamma_ktt, upper_gamma_ktt_with};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// A k-open private neighbour of a member `v` of `S`: a vertex `witness`
/// adjacent to `v` that sees exactly `k` members of `S`, namely `trace`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OpnWitness {
    pub witness: usize,
    pub trace: VertexSet,
    /// `witness` lies outside `S`.
    pub external: bool,
}

/// True iff every vertex of `g` has at least `k` neighbours in `s`.
pub fn is_ktds(g: &Graph, s: &VertexSet, k: usize) -> bool {
    s.host_size() == g.n() && (0..g.n()).all(|x| g.neighbors(x).intersection_len(s) >= k)
}

/// All k-open private neighbours of `v` with respect to `s`, in increasing
/// order. `s` need not be a kTDS.
pub fn opn_k(g: &Graph, s: &VertexSet, v: usize, k: usize) -> Result<Vec<OpnWitness>> {
    if s.host_size() != g.n() {
        return Err(Error::Argument(format!(
            "set over {} vertices used with a graph on {}",
            s.host_size(),
            g.n()
        )));
    }
    if !s.contains(v) {
        return Err(Error::Argument(format!("vertex {v} is not in {s}")));
    }
    Ok(g.neighbors(v)
        .iter()
        .filter_map(|x| {
            let trace = g.neighbors(x).intersection(s);
            (trace.len() == k).then(|| OpnWitness {
                witness: x,
                trace,
                external: !s.contains(x),
            })
        })
        .collect())
}

/// Minimality via private neighbours: `s` is a kTDS and every member has a
/// k-open private neighbour.
pub fn is_minimal_ktds(g: &Graph, s: &VertexSet, k: usize) -> bool {
    if !is_ktds(g, s, k) {
        return false;
    }
    // union of neighbourhoods of the vertices that see exactly k members
    let mut covered = VertexSet::empty(g.n());
    for x in 0..g.n() {
        if g.neighbors(x).intersection_len(s) == k {
            covered = covered.union(g.neighbors(x));
        }
    }
    s.is_subset(&covered)
}

/// Minimality via deletion: `s` is a kTDS and no `s − {v}` is one.
///
/// Single deletions suffice because supersets of a kTDS are kTDS.
pub fn is_minimal_ktds_by_deletion(g: &Graph, s: &VertexSet, k: usize) -> bool {
    is_ktds(g, s, k)
        && s.iter().all(|v| {
            let mut t = s.clone();
            t.remove(v);
            !is_ktds(g, &t, k)
        })
}

/// Vertices that every kTDS must contain: the neighbourhoods of the vertices
/// of degree exactly `k`.
pub fn forced_vertices(g: &Graph, k: usize) -> VertexSet {
    let mut forced = VertexSet::empty(g.n());
    for v in 0..g.n() {
        if g.degree(v) == k {
            forced = forced.union(g.neighbors(v));
        }
    }
    forced
}

pub(crate) fn require_min_degree(g: &Graph, k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::Argument("k must be at least 1".into()));
    }
    if g.n() == 0 {
        return Err(Error::Domain("the graph has no vertices".into()));
    }
    let delta = g.min_degree();
    if delta < k {
        return Err(Error::Domain(format!(
            "no {k}TDS exists: minimum degree is {delta} < {k}"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::FamilySpec;

    fn graph(s: &str) -> Graph {
        s.parse::<FamilySpec>().unwrap().generate().unwrap()
    }

    fn set(n: usize, m: &[usize]) -> VertexSet {
        VertexSet::from_members(n, m.iter().copied()).unwrap()
    }

    #[test]
    fn ktds_examples() {
        let k4 = graph("K4");
        assert!(is_ktds(&k4, &set(4, &[0, 1, 2]), 2));
        let c4 = graph("C4");
        for drop in 0..4 {
            let s = set(4, &(0..4).filter(|&v| v != drop).collect::<Vec<_>>());
            assert!(!is_ktds(&c4, &s, 2));
        }
        assert!(is_ktds(&c4, &VertexSet::full(4), 2));
        // undersized host and δ < k
        assert!(!is_ktds(&c4, &VertexSet::full(3), 1));
        assert!(!is_ktds(&graph("P3"), &VertexSet::full(3), 2));
    }

    #[test]
    fn opn_examples() {
        let c4 = graph("C4");
        let w = opn_k(&c4, &VertexSet::full(4), 0, 2).unwrap();
        assert_eq!(
            w.iter()
                .map(|o| (o.witness, o.external))
                .collect::<Vec<_>>(),
            [(1, false), (3, false)]
        );
        assert!(w.iter().all(|o| o.trace.len() == 2 && o.trace.contains(0)));

        let p3 = graph("P3");
        let w = opn_k(&p3, &set(3, &[0, 1]), 1, 1).unwrap();
        assert_eq!(
            w.iter()
                .map(|o| (o.witness, o.external))
                .collect::<Vec<_>>(),
            [(0, false), (2, true)]
        );

        let k4 = graph("K4");
        let w = opn_k(&k4, &set(4, &[0, 1, 2]), 0, 3).unwrap();
        assert_eq!(w.len(), 1);
        assert_eq!((w[0].witness, w[0].external), (3, true));
        assert_eq!(w[0].trace, set(4, &[0, 1, 2]));

        assert!(opn_k(&k4, &set(4, &[1, 2]), 0, 1).is_err());
    }

    #[test]
    fn minimality_examples() {
        let k4 = graph("K4");
        let p4 = graph("P4");
        let c4 = graph("C4");
        for (g, s, k) in [
            (&k4, set(4, &[0, 1, 2]), 2),
            (&p4, set(4, &[1, 2]), 1),
            (&c4, VertexSet::full(4), 2),
        ] {
            assert!(is_minimal_ktds(g, &s, k));
            assert!(is_minimal_ktds_by_deletion(g, &s, k));
        }
        assert!(!is_minimal_ktds(&k4, &VertexSet::full(4), 2));
        assert!(!is_minimal_ktds_by_deletion(&k4, &VertexSet::full(4), 2));
    }

    #[test]
    fn forced_neighbourhoods() {
        // P4: endpoints have degree 1, so 1 and 2 are forced for k = 1
        assert_eq!(forced_vertices(&graph("P4"), 1), set(4, &[1, 2]));
        assert!(forced_vertices(&graph("K4"), 2).is_empty());
    }

    #[test]
    fn min_degree_requirement() {
        assert!(matches!(
            require_min_degree(&graph("P3"), 2),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            require_min_degree(&graph("P3"), 0),
            Err(Error::Argument(_))
        ));
        assert!(require_min_degree(&graph("C5"), 2).is_ok());
    }
}
