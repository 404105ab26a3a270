use super::Graph;
use crate::error::{Error, Result};

/// Cartesian product `g □ h`. Vertex `(i, j)` is numbered `i * h.n() + j`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    let nh = h.n();
    Graph::from_fn(g.n() * nh, |a, b| {
        let (g1, h1) = (a / nh, a % nh);
        let (g2, h2) = (b / nh, b % nh);
        (g1 == g2 && h.has_edge(h1, h2)) || (h1 == h2 && g.has_edge(g1, g2))
    })
}

/// Cross (direct, tensor) product `g × h`, numbered as in [`cartesian_product`].
pub fn cross_product(g: &Graph, h: &Graph) -> Graph {
    let nh = h.n();
    Graph::from_fn(g.n() * nh, |a, b| {
        g.has_edge(a / nh, b / nh) && h.has_edge(a % nh, b % nh)
    })
}

/// Disjoint union; each part keeps its numbering, shifted past the parts
/// before it.
pub fn disjoint_union(parts: &[Graph]) -> Graph {
    let n = parts.iter().map(Graph::n).sum();
    let mut offset = 0;
    let mut edges = Vec::new();
    for p in parts {
        edges.extend(p.edges().map(|(u, v)| (u + offset, v + offset)));
        offset += p.n();
    }
    Graph::from_edges(n, edges).expect("union of simple graphs is simple")
}

/// Join `g ∨ h`: the disjoint union (g first) plus every edge between the
/// two sides.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let ng = g.n();
    let cross: Vec<Vec<usize>> = (0..ng).map(|_| (0..h.n()).collect()).collect();
    attach(g, h, &cross)
}

/// Canonical k-join `f ∘_k h`: the disjoint union (f first) with every vertex
/// of `f` joined to the `k` lowest-numbered vertices of `h`.
///
/// Requires `δ(h) >= k` (and hence `h.n() > k`).
pub fn k_join(f: &Graph, h: &Graph, k: usize) -> Result<Graph> {
    check_k_join_target(h, k)?;
    let cross: Vec<Vec<usize>> = (0..f.n()).map(|_| (0..k).collect()).collect();
    Ok(attach(f, h, &cross))
}

/// A general member of the k-join family: `cross[i]` lists the vertices of `h`
/// adjacent to vertex `i` of `f`, and must have at least `k` distinct entries.
pub fn k_join_with(f: &Graph, h: &Graph, k: usize, cross: &[Vec<usize>]) -> Result<Graph> {
    check_k_join_target(h, k)?;
    if cross.len() != f.n() {
        return Err(Error::Argument(format!(
            "cross adjacency has {} rows, expected {}",
            cross.len(),
            f.n()
        )));
    }
    for (i, row) in cross.iter().enumerate() {
        let mut row = row.clone();
        row.sort_unstable();
        row.dedup();
        if row.len() < k {
            return Err(Error::Argument(format!(
                "vertex {i} of the attached graph has {} targets, needs at least {k}",
                row.len()
            )));
        }
        if let Some(&bad) = row.iter().find(|&&t| t >= h.n()) {
            return Err(Error::Argument(format!(
                "target {bad} outside 0..{}",
                h.n()
            )));
        }
    }
    Ok(attach(f, h, cross))
}

fn check_k_join_target(h: &Graph, k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::Parameter("k-join needs k >= 1".into()));
    }
    if h.n() == 0 || h.min_degree() < k {
        return Err(Error::Parameter(format!(
            "k-join target needs minimum degree >= {k}, has {}",
            h.min_degree()
        )));
    }
    Ok(())
}

fn attach(f: &Graph, h: &Graph, cross: &[Vec<usize>]) -> Graph {
    let nf = f.n();
    let mut edges: Vec<(usize, usize)> = f.edges().collect();
    edges.extend(h.edges().map(|(u, v)| (u + nf, v + nf)));
    for (i, row) in cross.iter().enumerate() {
        let mut row = row.clone();
        row.sort_unstable();
        row.dedup();
        edges.extend(row.into_iter().map(|t| (i, t + nf)));
    }
    Graph::from_edges(nf + h.n(), edges).expect("attachment of simple graphs is simple")
}
