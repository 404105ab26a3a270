use itertools::Itertools;

use super::{ClaimId, ClaimParams, ClaimReport, Instance, Observation, Verdict};
use crate::domination::{is_ktds, upper_gamma_ktt_with};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solve::{Quantity, SolveOptions};
use crate::vertex_set::VertexSet;

/// `Γ_t(P_n) = 2⌊(n+1)/3⌋`.
pub fn formula_upper_total_path(n: usize) -> Result<usize> {
    if n < 2 {
        return Err(Error::Domain(format!("P_{n} has an isolated vertex")));
    }
    Ok(2 * ((n + 1) / 3))
}

/// `Γ_t(C_n)`: `2⌊n/3⌋ + 1` when `n ≡ 2 (mod 3)`, else `2⌊n/3⌋`.
pub fn formula_upper_total_cycle(n: usize) -> Result<usize> {
    if n < 3 {
        return Err(Error::Domain(format!("C_{n} is not a cycle")));
    }
    Ok(2 * (n / 3) + usize::from(n % 3 == 2))
}

fn check_parts(parts: &[usize], k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::Argument("k must be at least 1".into()));
    }
    if parts.is_empty() || parts.contains(&0) {
        return Err(Error::Argument(format!("invalid part sizes {parts:?}")));
    }
    if !parts.windows(2).all(|w| w[0] <= w[1]) {
        return Err(Error::Argument(format!(
            "part sizes {parts:?} are not ascending"
        )));
    }
    let delta = parts.iter().sum::<usize>() - parts[parts.len() - 1];
    if delta < k {
        return Err(Error::Domain(format!("minimum degree {delta} < k = {k}")));
    }
    Ok(())
}

/// The values `x` with `(ℓ−1)x = k` and `x ≤ min{k, cap(ℓ)}` for `ℓ` in `2..=p`.
fn feasible_x(parts: &[usize], k: usize, cap: impl Fn(usize) -> usize) -> Vec<usize> {
    (2..=parts.len())
        .filter(|l| k.is_multiple_of(l - 1))
        .map(|l| (k / (l - 1), cap(l)))
        .filter(|&(x, c)| x <= k.min(c))
        .map(|(x, _)| x)
        .collect()
}

/// `k + max{x : (ℓ−1)x = k, x ≤ min{k, n_{p−ℓ+1}, …, n_p}}` for ascending
/// part sizes `n_1 ≤ … ≤ n_p`.
pub fn formula_gamma_upper_multipartite(parts: &[usize], k: usize) -> Result<usize> {
    check_parts(parts, k)?;
    let p = parts.len();
    let xs = feasible_x(parts, k, |l| parts[p - l..].iter().copied().min().unwrap());
    xs.into_iter().max().map(|x| k + x).ok_or_else(|| {
        Error::Inapplicable(format!(
            "no l in 2..={p} with (l-1)x = {k} fits the largest parts"
        ))
    })
}

/// `k + min{x : (ℓ−1)x = k, x ≤ min{k, n_1, …, n_ℓ}}`, an upper bound on
/// `γ×k,t` of the complete multipartite graph.
pub fn bound_gamma_multipartite(parts: &[usize], k: usize) -> Result<usize> {
    check_parts(parts, k)?;
    let p = parts.len();
    let xs = feasible_x(parts, k, |l| parts[..l].iter().copied().min().unwrap());
    xs.into_iter().min().map(|x| k + x).ok_or_else(|| {
        Error::Inapplicable(format!(
            "no l in 2..={p} with (l-1)x = {k} fits the smallest parts"
        ))
    })
}

/// Checks `Γ×k,t(g) ≤ n − δ + k`, which needs `δ ≥ k+1 ≥ 2`.
pub fn bound_n_minus_delta_plus_k(g: &Graph, k: usize) -> Result<ClaimReport> {
    bound_n_minus_delta_plus_k_with(&Instance::new("G", g.clone()), k, &SolveOptions::default())
}

pub(crate) fn bound_n_minus_delta_plus_k_with(
    inst: &Instance,
    k: usize,
    opts: &SolveOptions,
) -> Result<ClaimReport> {
    let g = &inst.graph;
    let params = ClaimParams::Graph { g: inst.clone(), k }.to_string();
    let claim = ClaimId(10);
    let (n, delta) = (g.n(), g.min_degree());
    if k == 0 || n == 0 || delta < k + 1 {
        return Ok(ClaimReport {
            claim,
            params,
            expected: "needs delta >= k+1 >= 2".into(),
            observed: format!("delta={delta}"),
            verdict: Verdict::Inapplicable,
            observation: None,
        });
    }
    let bound = n - delta + k;
    let r = upper_gamma_ktt_with(g, k, opts)?;
    let tag = if r.value == bound { " (equality)" } else { "" };
    Ok(ClaimReport {
        claim,
        params,
        expected: format!("Gamma <= {bound}"),
        observed: format!("Gamma={}{tag}", r.value),
        verdict: if r.value <= bound {
            Verdict::Holds
        } else {
            Verdict::Violated
        },
        observation: Some(Observation::new(&inst.name, g, k, Quantity::UpperGamma, &r)),
    })
}

/// Splits `g` into `S` and `V − S` with `|S| = m`, `δ(G[S]) ≥ k` and every
/// vertex outside `S` having at least `k` neighbours in `S`; the
/// lexicographically least such `S`. This is exactly a kTDS of size `m`.
pub fn decompose_k_join(g: &Graph, k: usize, m: usize) -> Result<Option<(VertexSet, VertexSet)>> {
    let n = g.n();
    if m == 0 || m > n {
        return Err(Error::Argument(format!("m = {m} is outside 1..={n}")));
    }
    if k == 0 || g.min_degree() < k {
        return Err(Error::Domain(format!(
            "minimum degree {} < k = {k}",
            g.min_degree()
        )));
    }
    for members in (0..n).combinations(m) {
        let core = VertexSet::from_members(n, members.iter().copied())?;
        let inner = members
            .iter()
            .all(|&v| g.neighbors(v).intersection_len(&core) >= k);
        let outer = (0..n)
            .filter(|v| !core.contains(*v))
            .all(|v| g.neighbors(v).intersection_len(&core) >= k);
        debug_assert_eq!(inner && outer, is_ktds(g, &core, k));
        if inner && outer {
            let rest = core.complement();
            return Ok(Some((core, rest)));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::FamilySpec;

    fn graph(s: &str) -> Graph {
        s.parse::<FamilySpec>().unwrap().generate().unwrap()
    }

    #[test]
    fn path_and_cycle_formulas() {
        assert_eq!(formula_upper_total_path(2).unwrap(), 2);
        assert_eq!(formula_upper_total_path(4).unwrap(), 2);
        assert_eq!(formula_upper_total_path(5).unwrap(), 4);
        assert!(matches!(formula_upper_total_path(1), Err(Error::Domain(_))));
        assert_eq!(formula_upper_total_cycle(3).unwrap(), 2);
        assert_eq!(formula_upper_total_cycle(5).unwrap(), 3);
        assert_eq!(formula_upper_total_cycle(6).unwrap(), 4);
        assert!(matches!(
            formula_upper_total_cycle(2),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn multipartite_formulas() {
        assert_eq!(formula_gamma_upper_multipartite(&[3, 3], 2).unwrap(), 4);
        assert_eq!(formula_gamma_upper_multipartite(&[1, 1, 1], 2).unwrap(), 3);
        assert_eq!(formula_gamma_upper_multipartite(&[2, 3], 2).unwrap(), 4);
        assert_eq!(bound_gamma_multipartite(&[3, 3], 2).unwrap(), 4);
        assert_eq!(bound_gamma_multipartite(&[1, 1, 1], 2).unwrap(), 3);
        assert_eq!(bound_gamma_multipartite(&[2, 2, 2], 2).unwrap(), 3);
        assert!(matches!(
            formula_gamma_upper_multipartite(&[1, 2], 2),
            Err(Error::Domain(_))
        ));
        // k = 3 with parts 1,2,2: l = 2 needs x = 3 > 2, l = 3 needs 2x = 3
        assert!(matches!(
            formula_gamma_upper_multipartite(&[1, 2, 2], 3),
            Err(Error::Inapplicable(_))
        ));
        assert!(matches!(
            formula_gamma_upper_multipartite(&[3, 1], 1),
            Err(Error::Argument(_))
        ));
    }

    #[test]
    fn n_minus_delta_plus_k() {
        let r = bound_n_minus_delta_plus_k(&graph("sharp:2,2,1"), 1).unwrap();
        assert_eq!(
            (r.verdict, r.observed.as_str()),
            (Verdict::Holds, "Gamma=4 (equality)")
        );
        let r = bound_n_minus_delta_plus_k(&graph("K4"), 2).unwrap();
        assert_eq!(r.verdict, Verdict::Holds);
        assert_eq!(r.observation.unwrap().value, 3);
        let r = bound_n_minus_delta_plus_k(&graph("C4"), 1).unwrap();
        assert_eq!(
            (r.verdict, r.observation.unwrap().value),
            (Verdict::Holds, 2)
        );
        let r = bound_n_minus_delta_plus_k(&graph("C4"), 2).unwrap();
        assert_eq!(r.verdict, Verdict::Inapplicable);
    }

    #[test]
    fn k_join_decomposition() {
        let (s, rest) = decompose_k_join(&graph("K4"), 2, 3).unwrap().unwrap();
        assert_eq!(
            (s.to_string(), rest.to_string()),
            ("{0,1,2}".into(), "{3}".into())
        );
        let (s, _) = decompose_k_join(&graph("C4"), 2, 4).unwrap().unwrap();
        assert_eq!(s, VertexSet::full(4));
        let c6 = graph("C6");
        assert_eq!(decompose_k_join(&c6, 1, 2).unwrap(), None);
        assert_eq!(decompose_k_join(&c6, 1, 3).unwrap(), None);
        assert_eq!(
            decompose_k_join(&c6, 1, 4).unwrap().unwrap().0.to_string(),
            "{0,1,2,3}"
        );
        assert!(decompose_k_join(&c6, 3, 4).is_err());
        assert!(decompose_k_join(&c6, 1, 7).is_err());
    }
}
