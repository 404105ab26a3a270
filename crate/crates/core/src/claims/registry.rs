use std::collections::BTreeSet;
use std::ops::ControlFlow;

use num_rational::Ratio;

use super::formulas::{
    bound_gamma_multipartite, bound_n_minus_delta_plus_k_with, decompose_k_join,
    formula_gamma_upper_multipartite, formula_upper_total_cycle, formula_upper_total_path,
};
use super::{ClaimId, ClaimParams, ClaimReport, Instance, Observation, Verdict};
use crate::domination::{
    enumerate_minimal_ktds_with, forced_vertices, gamma_ktt_with, is_gamma_external_with, is_ktds,
    is_minimal_ktds_by_deletion, opn_k, upper_gamma_ktt_with,
};
use crate::error::{Error, Result};
use crate::graph::{cartesian_product, cross_product, FamilySpec, Graph};
use crate::hypergraph::{open_neighborhood_hypergraph, tau_k_with, upsilon_k_with};
use crate::solve::{Quantity, SolveOptions, SolveResult};
use crate::vertex_set::VertexSet;

/// Largest order for which C2 walks every subset.
const SUBSET_CHECK_MAX_N: usize = 16;
/// Cap on the witness assignments C11 looks at.
const TRACE_ASSIGNMENT_CAP: usize = 100_000;

/// Evaluates one claim at one parameter point with default solver options.
pub fn check_claim(id: ClaimId, params: &ClaimParams) -> Result<ClaimReport> {
    check_claim_with(id, params, &SolveOptions::default())
}

/// Evaluates one claim at one parameter point.
///
/// Solver errors (resource limits, timeouts) are returned as errors. Unmet
/// preconditions give an `Inapplicable` report, never `Violated`.
pub fn check_claim_with(
    id: ClaimId,
    params: &ClaimParams,
    opts: &SolveOptions,
) -> Result<ClaimReport> {
    use ClaimParams as P;
    let c = Checker {
        id,
        params: params.to_string(),
        opts,
    };
    match (id.number(), params) {
        (1, P::Graph { g, k }) => c.bounds(g, *k),
        (2, P::Graph { g, k }) => c.minimality_criterion(g, *k),
        (3, P::Graph { g, k }) => c.forcing(g, *k),
        (4, P::Graph { g, k }) => c.regular(g, *k),
        (5, P::Order { n }) => c.path(*n),
        (6, P::Order { n }) => c.cycle(*n),
        (7, P::Parts { parts, k }) => c.multipartite_formula(parts, *k),
        (8, P::Parts { parts, k }) => c.multipartite_two_large(parts, *k),
        (9, P::Parts { parts, k }) => c.multipartite_gamma_bound(parts, *k),
        (10, P::Graph { g, k }) => bound_n_minus_delta_plus_k_with(g, *k, opts),
        (11, P::Graph { g, k }) => c.trace_reduction(g, *k),
        (12, P::Rook { n, m, k }) => c.rook_lower(*n, *m, *k),
        (13, P::Level { k }) => c.rook_square(*k),
        (14, P::Pair { g, h, k }) => c.vizing_like(g, h, *k),
        (15, P::Pair { g, h, k }) => c.external_both(g, h, *k),
        (16, P::Pair { g, h, k }) => c.external_product(g, h, *k),
        (17, P::Pair { g, h, k }) => c.external_by_degree(g, h, *k),
        (18, P::CrossPair { g, h, k, l }) => c.cross_levels(g, h, *k, *l),
        (19, P::Pair { g, h, k }) => c.cross_total(g, h, *k),
        (20, P::CompleteCross { n, m, k }) => c.complete_cross_two(*n, *m, *k),
        (21, P::CompleteCross { n, m, k }) => c.complete_cross_question(*n, *m, *k),
        (22, P::PartsPair { t, s, k }) => c.multipartite_cross(t, s, *k),
        (23, P::Graph { g, k }) => c.upper_transversal(g, *k),
        (24, P::Graph { g, k }) => c.equality_transfer(g, *k),
        (25, P::Graph { g, k }) => c.k_join_minimum(g, *k),
        (26, P::Graph { g, k }) => c.lower_transversal(g, *k),
        _ => Err(Error::Argument(format!(
            "{id} does not take parameters {params}"
        ))),
    }
}

struct Checker<'a> {
    id: ClaimId,
    params: String,
    opts: &'a SolveOptions,
}

fn has_min_degree(g: &Graph, k: usize) -> bool {
    k >= 1 && g.n() > 0 && g.min_degree() >= k
}

fn graph_of(spec: FamilySpec) -> Result<Instance> {
    Instance::from_spec(&spec)
}

impl Checker<'_> {
    fn report(
        &self,
        expected: String,
        observed: String,
        holds: bool,
        observation: Option<Observation>,
    ) -> ClaimReport {
        ClaimReport {
            claim: self.id,
            params: self.params.clone(),
            expected,
            observed,
            verdict: if holds {
                Verdict::Holds
            } else {
                Verdict::Violated
            },
            observation,
        }
    }

    fn inapplicable(&self, reason: impl Into<String>) -> Result<ClaimReport> {
        Ok(ClaimReport {
            claim: self.id,
            params: self.params.clone(),
            expected: String::new(),
            observed: reason.into(),
            verdict: Verdict::Inapplicable,
            observation: None,
        })
    }

    fn upper(&self, g: &Graph, k: usize) -> Result<SolveResult> {
        upper_gamma_ktt_with(g, k, self.opts)
    }

    fn lower(&self, g: &Graph, k: usize) -> Result<SolveResult> {
        gamma_ktt_with(g, k, self.opts)
    }

    fn observe(inst: &Instance, k: usize, q: Quantity, r: &SolveResult) -> Option<Observation> {
        Some(Observation::new(&inst.name, &inst.graph, k, q, r))
    }

    fn external(&self, g: &Graph, k: usize) -> Result<bool> {
        Ok(is_gamma_external_with(g, k, self.opts)?.is_some())
    }

    // C1
    fn bounds(&self, g: &Instance, k: usize) -> Result<ClaimReport> {
        if !has_min_degree(&g.graph, k) {
            return self.inapplicable("needs delta >= k >= 1");
        }
        let lo = self.lower(&g.graph, k)?;
        let hi = self.upper(&g.graph, k)?;
        let n = g.graph.n();
        Ok(self.report(
            format!("gamma <= Gamma <= {n}"),
            format!("gamma={} Gamma={}", lo.value, hi.value),
            lo.value <= hi.value && hi.value <= n,
            Self::observe(g, k, Quantity::UpperGamma, &hi),
        ))
    }

    // C2
    fn minimality_criterion(&self, g: &Instance, k: usize) -> Result<ClaimReport> {
        let graph = &g.graph;
        if !has_min_degree(graph, k) {
            return self.inapplicable("needs delta >= k >= 1");
        }
        let n = graph.n();
        if n > SUBSET_CHECK_MAX_N {
            return Err(Error::Resource(format!(
                "C2 walks all subsets and is limited to n <= {SUBSET_CHECK_MAX_N}"
            )));
        }
        let (mut sets, mut minimal, mut disagreements) = (0usize, 0usize, 0usize);
        for mask in 0..1u64 << n {
            let s = VertexSet::from_mask(n, mask);
            if !is_ktds(graph, &s, k) {
                continue;
            }
            sets += 1;
            let by_deletion = is_minimal_ktds_by_deletion(graph, &s, k);
            let mut by_witness = true;
            for v in s.iter() {
                if opn_k(graph, &s, v, k)?.is_empty() {
                    by_witness = false;
                    break;
                }
            }
            minimal += usize::from(by_deletion);
            disagreements += usize::from(by_deletion != by_witness);
        }
        Ok(self.report(
            "deletion and private-neighbour tests agree".into(),
            format!("{sets} kTDS, {minimal} minimal, {disagreements} disagreements"),
            disagreements == 0,
            None,
        ))
    }

    // C3
    fn forcing(&self, g: &Instance, k: usize) -> Result<ClaimReport> {
        let graph = &g.graph;
        if !has_min_degree(graph, k) {
            return self.inapplicable("needs delta >= k >= 1");
        }
        let forced = forced_vertices(graph, k);
        // every kTDS contains a minimal one, so minimal sets suffice
        let mut checked = 0;
        let mut missing = 0;
        enumerate_minimal_ktds_with(graph, k, self.opts, |s| {
            checked += 1;
            if !forced.is_subset(s) {
                missing += 1;
            }
            ControlFlow::Continue(())
        })?;
        Ok(self.report(
            format!("every minimal kTDS contains {forced}"),
            format!("{checked} minimal kTDS, {missing} missing a forced vertex"),
            missing == 0,
            None,
        ))
    }

    // C4
    fn regular(&self, g: &Instance, k: usize) -> Result<ClaimReport> {
        if k == 0 || g.graph.n() == 0 || !g.graph.is_regular(k) {
            return self.inapplicable(format!("not {k}-regular"));
        }
        let r = self.upper(&g.graph, k)?;
        let n = g.graph.n();
        Ok(self.report(
            format!("Gamma = {n}"),
            format!("Gamma={}", r.value),
            r.value == n,
            Self::observe(g, k, Quantity::UpperGamma, &r),
        ))
    }

    fn total_formula(&self, inst: Instance, formula: usize) -> Result<ClaimReport> {
        let r = self.upper(&inst.graph, 1)?;
        Ok(self.report(
            format!("Gamma_t = {formula}"),
            format!("Gamma_t={}", r.value),
            r.value == formula,
            Self::observe(&inst, 1, Quantity::UpperGamma, &r),
        ))
    }

    // C5
    fn path(&self, n: usize) -> Result<ClaimReport> {
        if n < 2 {
            return self.inapplicable("needs n >= 2");
        }
        self.total_formula(graph_of(FamilySpec::Path(n))?, formula_upper_total_path(n)?)
    }

    // C6
    fn cycle(&self, n: usize) -> Result<ClaimReport> {
        if n < 3 {
            return self.inapplicable("needs n >= 3");
        }
        self.total_formula(
            graph_of(FamilySpec::Cycle(n))?,
            formula_upper_total_cycle(n)?,
        )
    }

    /// Validated multipartite instance, or the reason it is out of scope.
    fn multipartite(
        &self,
        parts: &[usize],
        k: usize,
    ) -> Result<std::result::Result<Instance, String>> {
        let spec = FamilySpec::multipartite(parts.to_vec());
        spec.validate()?;
        let inst = graph_of(spec)?;
        if !has_min_degree(&inst.graph, k) {
            return Ok(Err(format!(
                "minimum degree {} < k = {k}",
                inst.graph.min_degree()
            )));
        }
        Ok(Ok(inst))
    }

    fn sorted(parts: &[usize]) -> Vec<usize> {
        let mut p = parts.to_vec();
        p.sort_unstable();
        p
    }

    // C7
    fn multipartite_formula(&self, parts: &[usize], k: usize) -> Result<ClaimReport> {
        let inst = match self.multipartite(parts, k)? {
            Ok(i) => i,
            Err(why) => return self.inapplicable(why),
        };
        let r = self.upper(&inst.graph, k)?;
        match formula_gamma_upper_multipartite(&Self::sorted(parts), k) {
            Ok(f) => Ok(self.report(
                format!("Gamma = {f}"),
                format!("Gamma={}", r.value),
                r.value == f,
                Self::observe(&inst, k, Quantity::UpperGamma, &r),
            )),
            Err(Error::Inapplicable(why)) => self.inapplicable(format!("{why}; Gamma={}", r.value)),
            Err(e) => Err(e),
        }
    }

    // C8
    fn multipartite_two_large(&self, parts: &[usize], k: usize) -> Result<ClaimReport> {
        if k == 0 || parts.iter().filter(|&&p| p >= k).count() < 2 {
            return self.inapplicable("needs two parts of size >= k >= 1");
        }
        let inst = match self.multipartite(parts, k)? {
            Ok(i) => i,
            Err(why) => return self.inapplicable(why),
        };
        let r = self.upper(&inst.graph, k)?;
        Ok(self.report(
            format!("Gamma = {}", 2 * k),
            format!("Gamma={}", r.value),
            r.value == 2 * k,
            Self::observe(&inst, k, Quantity::UpperGamma, &r),
        ))
    }

    // C9
    fn multipartite_gamma_bound(&self, parts: &[usize], k: usize) -> Result<ClaimReport> {
        let inst = match self.multipartite(parts, k)? {
            Ok(i) => i,
            Err(why) => return self.inapplicable(why),
        };
        let bound = match bound_gamma_multipartite(&Self::sorted(parts), k) {
            Ok(b) => b,
            Err(Error::Inapplicable(why)) => return self.inapplicable(why),
            Err(e) => return Err(e),
        };
        let r = self.lower(&inst.graph, k)?;
        Ok(self.report(
            format!("gamma <= {bound}"),
            format!("gamma={}", r.value),
            r.value <= bound,
            Self::observe(&inst, k, Quantity::Gamma, &r),
        ))
    }

    // C11
    //
    // The trace `S_v` of a member with several private neighbours is not
    // unique, so every choice of one trace per member is tried (up to a cap).
    // The report holds when each resulting `ℓ < k` satisfies the inequality
    // and is unresolved otherwise.
    fn trace_reduction(&self, g: &Instance, k: usize) -> Result<ClaimReport> {
        let graph = &g.graph;
        if !has_min_degree(graph, k) {
            return self.inapplicable("needs delta >= k >= 1");
        }
        let top = self.upper(graph, k)?;
        let s = &top.witness;
        let mut choices: Vec<Vec<VertexSet>> = Vec::new();
        for v in s.iter() {
            let traces: BTreeSet<VertexSet> = opn_k(graph, s, v, k)?
                .into_iter()
                .map(|w| w.trace)
                .collect();
            choices.push(traces.into_iter().collect());
        }
        let mut ells = BTreeSet::new();
        let mut seen = 0usize;
        let mut stack = vec![(0usize, VertexSet::full(graph.n()))];
        while let Some((depth, acc)) = stack.pop() {
            if depth == choices.len() {
                ells.insert(acc.len());
                seen += 1;
                if seen >= TRACE_ASSIGNMENT_CAP {
                    break;
                }
                continue;
            }
            for t in &choices[depth] {
                stack.push((depth + 1, acc.intersection(t)));
            }
        }
        let small: Vec<usize> = ells.iter().copied().filter(|&l| l < k).collect();
        if small.is_empty() {
            return self.inapplicable(format!(
                "every trace intersection has size >= k (sizes {ells:?})"
            ));
        }
        let mut failing = Vec::new();
        let mut values = Vec::new();
        for &l in &small {
            let lower_level = self.upper(graph, k - l)?.value;
            values.push(format!("l={l}: Gamma_{}={lower_level}", k - l));
            if top.value > lower_level + l {
                failing.push(l);
            }
        }
        let truncated = if seen >= TRACE_ASSIGNMENT_CAP {
            " (assignments capped)"
        } else {
            ""
        };
        Ok(ClaimReport {
            claim: self.id,
            params: self.params.clone(),
            expected: format!("Gamma_{k} <= Gamma_(k-l) + l"),
            observed: format!("Gamma_{k}={} {}{truncated}", top.value, values.join(" ")),
            verdict: if failing.is_empty() {
                Verdict::Holds
            } else {
                Verdict::Unresolved
            },
            observation: Self::observe(g, k, Quantity::UpperGamma, &top),
        })
    }

    // C12
    fn rook_lower(&self, n: usize, m: usize, k: usize) -> Result<ClaimReport> {
        if !(k >= 2 && m > k && n >= m) {
            return self.inapplicable("needs n >= m >= k+1 >= 3");
        }
        let inst = graph_of(FamilySpec::Rook(n, m))?;
        let r = self.upper(&inst.graph, k)?;
        let bound = k * n;
        let tag = if r.value == bound { " (equality)" } else { "" };
        Ok(self.report(
            format!("Gamma >= {bound}"),
            format!("Gamma={}{tag}", r.value),
            r.value >= bound,
            Self::observe(&inst, k, Quantity::UpperGamma, &r),
        ))
    }

    // C13
    fn rook_square(&self, k: usize) -> Result<ClaimReport> {
        if k == 0 {
            return self.inapplicable("needs k >= 1");
        }
        let inst = graph_of(FamilySpec::Rook(k + 1, k + 1))?;
        let r = self.upper(&inst.graph, k)?;
        let want = k * (k + 1);
        Ok(self.report(
            format!("Gamma = {want}"),
            format!("Gamma={}", r.value),
            r.value == want,
            Self::observe(&inst, k, Quantity::UpperGamma, &r),
        ))
    }

    fn cartesian(g: &Instance, h: &Instance) -> Instance {
        Instance::new(
            format!("cart({},{})", g.name, h.name),
            cartesian_product(&g.graph, &h.graph),
        )
    }

    fn cross(g: &Instance, h: &Instance) -> Instance {
        Instance::new(
            format!("cross({},{})", g.name, h.name),
            cross_product(&g.graph, &h.graph),
        )
    }

    // C14
    fn vizing_like(&self, g: &Instance, h: &Instance, k: usize) -> Result<ClaimReport> {
        if !(k >= 2 && has_min_degree(&g.graph, k) && has_min_degree(&h.graph, k)) {
            return self.inapplicable("needs delta(G), delta(H) >= k >= 2");
        }
        let a = self.upper(&g.graph, k)?.value;
        let b = self.upper(&h.graph, k)?.value;
        let prod = Self::cartesian(g, h);
        let r = self.upper(&prod.graph, k)?;
        let ratio = Ratio::new(a * b, r.value);
        let limit = Ratio::new(k + 1, k);
        Ok(self.report(
            format!("Gamma(G)Gamma(H)/Gamma(GxH) <= {limit}"),
            format!("{a}*{b}/{} = {ratio}", r.value),
            ratio <= limit,
            Self::observe(&prod, k, Quantity::UpperGamma, &r),
        ))
    }

    // C15
    fn external_both(&self, g: &Instance, h: &Instance, k: usize) -> Result<ClaimReport> {
        if !(k >= 2 && has_min_degree(&g.graph, k) && has_min_degree(&h.graph, k)) {
            return self.inapplicable("needs delta(G), delta(H) >= k >= 2");
        }
        if !self.external(&g.graph, k)? || !self.external(&h.graph, k)? {
            return self.inapplicable("a factor is not Gamma-external");
        }
        let a = self.upper(&g.graph, k)?.value;
        let b = self.upper(&h.graph, k)?.value;
        let prod = Self::cartesian(g, h);
        let r = self.upper(&prod.graph, k)?;
        let bound = (a * h.graph.n()).max(b * g.graph.n());
        Ok(self.report(
            format!("Gamma >= {bound}"),
            format!("Gamma={}", r.value),
            r.value >= bound,
            Self::observe(&prod, k, Quantity::UpperGamma, &r),
        ))
    }

    // C16
    fn external_product(&self, g: &Instance, h: &Instance, k: usize) -> Result<ClaimReport> {
        if !(k >= 2 && has_min_degree(&g.graph, k) && has_min_degree(&h.graph, k)) {
            return self.inapplicable("needs delta(G), delta(H) >= k >= 2");
        }
        if !self.external(&g.graph, k)? {
            return self.inapplicable("G is not Gamma-external");
        }
        let a = self.upper(&g.graph, k)?.value;
        let b = self.upper(&h.graph, k)?.value;
        let prod = Self::cartesian(g, h);
        let r = self.upper(&prod.graph, k)?;
        Ok(self.report(
            format!("Gamma >= {}", a * b),
            format!("Gamma={}", r.value),
            r.value >= a * b,
            Self::observe(&prod, k, Quantity::UpperGamma, &r),
        ))
    }

    // C17
    fn external_by_degree(&self, g: &Instance, h: &Instance, k: usize) -> Result<ClaimReport> {
        if !(has_min_degree(&g.graph, k) && has_min_degree(&h.graph, k)) {
            return self.inapplicable("needs delta(G), delta(H) >= k >= 1");
        }
        if !self.external(&g.graph, k)? {
            return self.inapplicable("G is not Gamma-external");
        }
        let a = self.upper(&g.graph, k)?.value;
        let b = self.upper(&h.graph, k)?.value;
        let dh = h.graph.min_degree();
        let (case, bound) = if dh > k {
            ("i", a * (b + dh - k))
        } else if h.graph.is_regular(k) {
            ("ii", a * b)
        } else {
            ("iii", a * (b + 1))
        };
        let prod = Self::cartesian(g, h);
        let r = self.upper(&prod.graph, k)?;
        Ok(self.report(
            format!("case {case}: Gamma >= {bound}"),
            format!("Gamma={}", r.value),
            r.value >= bound,
            Self::observe(&prod, k, Quantity::UpperGamma, &r),
        ))
    }

    // C18
    fn cross_levels(&self, g: &Instance, h: &Instance, k: usize, l: usize) -> Result<ClaimReport> {
        if !(has_min_degree(&g.graph, k) && has_min_degree(&h.graph, l)) {
            return self.inapplicable("needs delta(G) >= k >= 1 and delta(H) >= l >= 1");
        }
        let a = self.upper(&g.graph, k)?.value;
        let b = self.upper(&h.graph, l)?.value;
        let prod = Self::cross(g, h);
        let r = self.upper(&prod.graph, k * l)?;
        Ok(self.report(
            format!("Gamma_{} >= {}", k * l, a * b),
            format!("Gamma_{}={}", k * l, r.value),
            r.value >= a * b,
            Self::observe(&prod, k * l, Quantity::UpperGamma, &r),
        ))
    }

    // C19
    fn cross_total(&self, g: &Instance, h: &Instance, k: usize) -> Result<ClaimReport> {
        let (dg, dh) = (g.graph.min_degree(), h.graph.min_degree());
        if !(k >= 1 && g.graph.n() > 0 && h.graph.n() > 0 && dg >= dh && dh >= k) {
            return self.inapplicable("needs delta(G) >= delta(H) >= k >= 1");
        }
        let gk = self.upper(&g.graph, k)?.value;
        let hk = self.upper(&h.graph, k)?.value;
        let gt = self.upper(&g.graph, 1)?.value;
        let ht = self.upper(&h.graph, 1)?.value;
        let bound = (gk * ht).max(hk * gt);
        let prod = Self::cross(g, h);
        let r = self.upper(&prod.graph, k)?;
        Ok(self.report(
            format!("Gamma >= {bound}"),
            format!("Gamma={}", r.value),
            r.value >= bound,
            Self::observe(&prod, k, Quantity::UpperGamma, &r),
        ))
    }

    fn complete_cross(&self, n: usize, m: usize, k: usize) -> Result<(Instance, SolveResult)> {
        let inst = graph_of(FamilySpec::cross(
            FamilySpec::Complete(n),
            FamilySpec::Complete(m),
        ))?;
        let r = self.upper(&inst.graph, k)?;
        Ok((inst, r))
    }

    // C20
    fn complete_cross_two(&self, n: usize, m: usize, k: usize) -> Result<ClaimReport> {
        if m != 2 {
            return Err(Error::Argument(format!(
                "C20 is about K_n x K_2, got m = {m}"
            )));
        }
        if !(k >= 1 && n > k) {
            return self.inapplicable("needs 1 <= k <= n-1");
        }
        let (inst, r) = self.complete_cross(n, m, k)?;
        Ok(self.report(
            format!("Gamma = {}", 2 * k + 2),
            format!("Gamma={}", r.value),
            r.value == 2 * k + 2,
            Self::observe(&inst, k, Quantity::UpperGamma, &r),
        ))
    }

    // C21
    fn complete_cross_question(&self, n: usize, m: usize, k: usize) -> Result<ClaimReport> {
        if !(k >= 1 && n >= 2 && m >= 2 && n.max(m) > k) {
            return self.inapplicable("needs n, m >= 2 and max(n, m) >= k+1");
        }
        if (n - 1) * (m - 1) < k {
            return self.inapplicable(format!("minimum degree {} < k = {k}", (n - 1) * (m - 1)));
        }
        let (inst, r) = self.complete_cross(n, m, k)?;
        Ok(self.report(
            format!("Gamma = {} ?", 2 * k + 2),
            format!("Gamma={}", r.value),
            r.value == 2 * k + 2,
            Self::observe(&inst, k, Quantity::UpperGamma, &r),
        ))
    }

    // C22
    fn multipartite_cross(&self, t: &[usize], s: &[usize], k: usize) -> Result<ClaimReport> {
        let gs = FamilySpec::multipartite(t.to_vec());
        let hs = FamilySpec::multipartite(s.to_vec());
        gs.validate()?;
        hs.validate()?;
        let (g, h) = (graph_of(gs)?, graph_of(hs)?);
        let prod = Self::cross(&g, &h);
        if !has_min_degree(&prod.graph, k) {
            return self.inapplicable(format!(
                "delta(GxH) = {} < k = {k}",
                prod.graph.min_degree()
            ));
        }
        let (ng, nh) = (g.graph.n(), h.graph.n());
        let heavy_g = t.iter().filter(|&&ti| ti * nh >= 2 * k).count();
        let heavy_h = s.iter().filter(|&&si| si * ng >= 2 * k).count();
        if heavy_g < 2 && heavy_h < 2 {
            return self.inapplicable("no two parts with part size times the other order >= 2k");
        }
        let r = self.upper(&prod.graph, k)?;
        Ok(self.report(
            format!("Gamma >= {}", 4 * k),
            format!("Gamma={}", r.value),
            r.value >= 4 * k,
            Self::observe(&prod, k, Quantity::UpperGamma, &r),
        ))
    }

    // C23
    fn upper_transversal(&self, g: &Instance, k: usize) -> Result<ClaimReport> {
        if !has_min_degree(&g.graph, k) {
            return self.inapplicable("needs delta >= k >= 1");
        }
        let r = self.upper(&g.graph, k)?;
        let h = open_neighborhood_hypergraph(&g.graph)?;
        let u = upsilon_k_with(&h, k, self.opts)?;
        Ok(self.report(
            format!("Gamma = Upsilon_{k}(H_G)"),
            format!("Gamma={} Upsilon={}", r.value, u.value),
            r.value == u.value,
            Self::observe(g, k, Quantity::UpperGamma, &r),
        ))
    }

    // C24
    fn equality_transfer(&self, g: &Instance, k: usize) -> Result<ClaimReport> {
        if !has_min_degree(&g.graph, k) {
            return self.inapplicable("needs delta >= k >= 1");
        }
        let lo = self.lower(&g.graph, k)?.value;
        let hi = self.upper(&g.graph, k)?.value;
        let h = open_neighborhood_hypergraph(&g.graph)?;
        let tau = tau_k_with(&h, k, self.opts)?.value;
        let ups = upsilon_k_with(&h, k, self.opts)?.value;
        Ok(self.report(
            "(Gamma = gamma) iff (Upsilon = tau)".into(),
            format!("gamma={lo} Gamma={hi} tau={tau} Upsilon={ups}"),
            (lo == hi) == (tau == ups),
            None,
        ))
    }

    // C25
    fn k_join_minimum(&self, g: &Instance, k: usize) -> Result<ClaimReport> {
        let graph = &g.graph;
        if !has_min_degree(graph, k) {
            return self.inapplicable("needs delta >= k >= 1");
        }
        let r = self.lower(graph, k)?;
        let n = graph.n();
        let mut least = None;
        for m in 1..=n {
            if decompose_k_join(graph, k, m)?.is_some() {
                least = Some(m);
                break;
            }
        }
        let least = least.expect("V itself is a kTDS");
        // decompositions exist for every larger m since supersets stay kTDS
        let full = decompose_k_join(graph, k, n)?.is_some();
        Ok(self.report(
            format!("least m = gamma = {}", r.value),
            format!("least m={least}"),
            least == r.value && full,
            Self::observe(g, k, Quantity::Gamma, &r),
        ))
    }

    // C26
    fn lower_transversal(&self, g: &Instance, k: usize) -> Result<ClaimReport> {
        if !has_min_degree(&g.graph, k) {
            return self.inapplicable("needs delta >= k >= 1");
        }
        let r = self.lower(&g.graph, k)?;
        let h = open_neighborhood_hypergraph(&g.graph)?;
        let t = tau_k_with(&h, k, self.opts)?;
        Ok(self.report(
            format!("gamma = tau_{k}(H_G)"),
            format!("gamma={} tau={}", r.value, t.value),
            r.value == t.value,
            Self::observe(g, k, Quantity::Gamma, &r),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inst(s: &str) -> Instance {
        Instance::from_spec(&s.parse().unwrap()).unwrap()
    }

    fn check(id: u8, p: ClaimParams) -> ClaimReport {
        check_claim(ClaimId::new(id).unwrap(), &p).unwrap()
    }

    #[test]
    fn rook_square_examples() {
        let r = check(13, ClaimParams::Level { k: 2 });
        assert_eq!(
            (r.verdict, r.observation.unwrap().value),
            (Verdict::Holds, 6)
        );
    }

    #[test]
    fn vizing_like_equality_point() {
        let r = check(
            14,
            ClaimParams::Pair {
                g: inst("K3"),
                h: inst("K3"),
                k: 2,
            },
        );
        assert_eq!(r.verdict, Verdict::Holds);
        assert_eq!(r.observed, "3*3/6 = 3/2");
        assert_eq!(r.expected, "Gamma(G)Gamma(H)/Gamma(GxH) <= 3/2");
    }

    #[test]
    fn complete_cross_examples() {
        let r = check(20, ClaimParams::CompleteCross { n: 4, m: 2, k: 2 });
        assert_eq!(
            (r.verdict, r.observation.unwrap().value),
            (Verdict::Holds, 6)
        );
        let r = check(
            18,
            ClaimParams::CrossPair {
                g: inst("K2"),
                h: inst("K2"),
                k: 1,
                l: 1,
            },
        );
        assert_eq!(
            (r.verdict, r.observation.unwrap().value),
            (Verdict::Holds, 4)
        );
        assert!(check_claim(
            ClaimId::new(20).unwrap(),
            &ClaimParams::CompleteCross { n: 4, m: 3, k: 2 }
        )
        .is_err());
    }

    #[test]
    fn multipartite_cross_point_is_violated() {
        // K_4 x K_2 = K_(1,1,1,1) x K_(1,1): both parts of K_2 meet the
        // condition with 1 * 4 >= 2k, yet Gamma is 2k + 2 = 6 < 4k
        let r = check(
            22,
            ClaimParams::PartsPair {
                t: vec![1, 1, 1, 1],
                s: vec![1, 1],
                k: 2,
            },
        );
        assert_eq!(r.verdict, Verdict::Violated);
        assert_eq!(r.observation.unwrap().value, 6);
    }

    #[test]
    fn preconditions_give_inapplicable() {
        let cases = [
            (
                1,
                ClaimParams::Graph {
                    g: inst("P4"),
                    k: 2,
                },
            ),
            (
                4,
                ClaimParams::Graph {
                    g: inst("P4"),
                    k: 1,
                },
            ),
            (5, ClaimParams::Order { n: 1 }),
            (
                8,
                ClaimParams::Parts {
                    parts: vec![1, 3],
                    k: 2,
                },
            ),
            (
                10,
                ClaimParams::Graph {
                    g: inst("C5"),
                    k: 2,
                },
            ),
            (12, ClaimParams::Rook { n: 3, m: 2, k: 2 }),
            (
                15,
                ClaimParams::Pair {
                    g: inst("K4"),
                    h: inst("K4"),
                    k: 2,
                },
            ),
            (21, ClaimParams::CompleteCross { n: 2, m: 2, k: 2 }),
        ];
        for (id, p) in cases {
            assert_eq!(
                check(id, p.clone()).verdict,
                Verdict::Inapplicable,
                "C{id} {p}"
            );
        }
    }

    #[test]
    fn wrong_parameter_shape() {
        assert!(matches!(
            check_claim(ClaimId::new(5).unwrap(), &ClaimParams::Level { k: 2 }),
            Err(Error::Argument(_))
        ));
    }

    #[test]
    fn graph_claims_on_small_instances() {
        for id in [1, 2, 3, 11, 23, 24, 25, 26] {
            for (s, k) in [("C5", 1), ("K4", 2), ("P4", 1), ("rook:3,3", 2)] {
                let r = check(id, ClaimParams::Graph { g: inst(s), k });
                assert!(
                    matches!(r.verdict, Verdict::Holds | Verdict::Inapplicable),
                    "C{id} {s} k={k}: {r:?}"
                );
            }
        }
    }
}
