//! Closed forms, bounds and a registry of executable claims about k-tuple
//! total domination.
//!
//! Each claim `C1`…`C26` is checked on one parameter point at a time and
//! produces a [`ClaimReport`]. Observed values always come from the exact
//! solvers. A report is `Violated` only after every precondition of the claim
//! has been verified on the instance; otherwise it is `Inapplicable`.

mod formulas;
mod registry;

pub use formulas::{
    bound_gamma_multipartite, bound_n_minus_delta_plus_k, decompose_k_join,
    formula_gamma_upper_multipartite, formula_upper_total_cycle, formula_upper_total_path,
};
pub use registry::{check_claim, check_claim_with};

use std::fmt;
use std::str::FromStr;
use std::time::Duration;

use crate::error::{Error, Result};
use crate::graph::{FamilySpec, Graph};
use crate::solve::{Quantity, SolveResult};
use crate::vertex_set::VertexSet;

/// Identifier `C1`…`C26` of a registered claim.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ClaimId(u8);

impl ClaimId {
    pub const COUNT: u8 = 26;

    pub fn new(number: u8) -> Result<Self> {
        if (1..=Self::COUNT).contains(&number) {
            Ok(Self(number))
        } else {
            Err(Error::Argument(format!("unknown claim C{number}")))
        }
    }

    pub fn number(self) -> u8 {
        self.0
    }

    pub fn all() -> impl Iterator<Item = ClaimId> {
        (1..=Self::COUNT).map(ClaimId)
    }

    pub fn kind(self) -> ClaimKind {
        match self.0 {
            14 => ClaimKind::Conjecture,
            21 => ClaimKind::Question,
            _ => ClaimKind::Theorem,
        }
    }

    /// One-line statement of the claim.
    pub fn statement(self) -> &'static str {
        match self.0 {
            1 => "gamma <= Gamma <= n",
            2 => "a kTDS is minimal iff every member has a k-open private neighbour",
            3 => "every kTDS contains N(v) for each vertex v of degree k",
            4 => "k-regular graphs have Gamma = n",
            5 => "Gamma_t(P_n) = 2*floor((n+1)/3)",
            6 => "Gamma_t(C_n) = 2*floor(n/3) (+1 if n = 2 mod 3)",
            7 => "complete multipartite Gamma = k + max{x : (l-1)x = k, x <= min{k, n_(p-l+1..p)}}",
            8 => "complete multipartite with two parts >= k has Gamma = 2k",
            9 => "complete multipartite gamma <= k + min{x : (l-1)x = k, x <= min{k, n_(1..l)}}",
            10 => "delta >= k+1 implies Gamma <= n - delta + k",
            11 => "Gamma_k <= Gamma_(k-l) + l for l = |intersection of witness traces| < k",
            12 => "Gamma_k(K_n box K_m) >= kn for n >= m >= k+1 >= 3",
            13 => "Gamma_k(K_(k+1) box K_(k+1)) = k(k+1)",
            14 => "Gamma_k(G) Gamma_k(H) <= (k+1)/k Gamma_k(G box H)",
            15 => "external G, H: Gamma_k(G box H) >= max{Gamma_k(G)|V(H)|, Gamma_k(H)|V(G)|}",
            16 => "external G: Gamma_k(G box H) >= Gamma_k(G) Gamma_k(H)",
            17 => "external G: box-product lower bounds by the degree structure of H",
            18 => "Gamma_kl(G x H) >= Gamma_k(G) Gamma_l(H)",
            19 => "Gamma_k(G x H) >= max{Gamma_k(G) Gamma_t(H), Gamma_k(H) Gamma_t(G)}",
            20 => "Gamma_k(K_n x K_2) = 2k+2",
            21 => "Gamma_k(K_n x K_m) = 2k+2 ?",
            22 => "complete multipartite cross products with two heavy parts have Gamma_k >= 4k",
            23 => "Gamma_k(G) = Upsilon_k(H_G)",
            24 => "Gamma_k(G) = gamma_k(G) iff Upsilon_k(H_G) = tau_k(H_G)",
            25 => "gamma_k(G) is the least m with G = K'_m or F o_k K'_m",
            26 => "gamma_k(G) = tau_k(H_G)",
            _ => unreachable!(),
        }
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C{}", self.0)
    }
}

impl FromStr for ClaimId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let digits = s
            .strip_prefix('C')
            .or_else(|| s.strip_prefix('c'))
            .ok_or_else(|| Error::Argument(format!("claim id {s:?} should look like C7")))?;
        let n: u8 = digits
            .parse()
            .map_err(|_| Error::Argument(format!("claim id {s:?} should look like C7")))?;
        ClaimId::new(n)
    }
}

/// How a violation of the claim is to be read.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClaimKind {
    /// Proved result: a violation is a bug or an error in the result.
    Theorem,
    /// Open conjecture: a violation is a counterexample data point.
    Conjecture,
    /// Open question: observations are data points.
    Question,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Verdict {
    Holds,
    Violated,
    /// Some precondition does not hold on this instance.
    Inapplicable,
    /// The check ran but its reading is ambiguous; reported, not asserted.
    Unresolved,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Holds => "holds",
            Verdict::Violated => "violated",
            Verdict::Inapplicable => "inapplicable",
            Verdict::Unresolved => "unresolved",
        })
    }
}

/// A graph with a printable name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub name: String,
    pub graph: Graph,
}

impl Instance {
    pub fn new(name: impl Into<String>, graph: Graph) -> Self {
        Self {
            name: name.into(),
            graph,
        }
    }

    pub fn from_spec(spec: &FamilySpec) -> Result<Self> {
        Ok(Self::new(spec.to_string(), spec.generate()?))
    }
}

/// The parameter point a claim is evaluated at.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClaimParams {
    /// One graph and `k` (C1–C4, C10, C11, C23–C26).
    Graph { g: Instance, k: usize },
    /// An order `n` (C5, C6).
    Order { n: usize },
    /// Complete multipartite part sizes and `k` (C7–C9).
    Parts { parts: Vec<usize>, k: usize },
    /// Rook's graph `K_n □ K_m` and `k` (C12).
    Rook { n: usize, m: usize, k: usize },
    /// Just `k` (C13).
    Level { k: usize },
    /// Two graphs and a common `k` (C14–C17, C19).
    Pair { g: Instance, h: Instance, k: usize },
    /// Two graphs with separate levels `k` and `l` (C18).
    CrossPair {
        g: Instance,
        h: Instance,
        k: usize,
        l: usize,
    },
    /// `K_n × K_m` and `k` (C20, C21).
    CompleteCross { n: usize, m: usize, k: usize },
    /// Two complete multipartite graphs and `k` (C22).
    PartsPair {
        t: Vec<usize>,
        s: Vec<usize>,
        k: usize,
    },
}

impl fmt::Display for ClaimParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts = |p: &[usize]| p.iter().map(usize::to_string).collect::<Vec<_>>().join("-");
        match self {
            ClaimParams::Graph { g, k } => write!(f, "G={} k={k}", g.name),
            ClaimParams::Order { n } => write!(f, "n={n}"),
            ClaimParams::Parts { parts: p, k } => write!(f, "parts={} k={k}", parts(p)),
            ClaimParams::Rook { n, m, k } => write!(f, "n={n} m={m} k={k}"),
            ClaimParams::Level { k } => write!(f, "k={k}"),
            ClaimParams::Pair { g, h, k } => write!(f, "G={} H={} k={k}", g.name, h.name),
            ClaimParams::CrossPair { g, h, k, l } => {
                write!(f, "G={} H={} k={k} l={l}", g.name, h.name)
            }
            ClaimParams::CompleteCross { n, m, k } => write!(f, "n={n} m={m} k={k}"),
            ClaimParams::PartsPair { t, s, k } => {
                write!(
                    f,
                    "G=multipartite:{} H=multipartite:{} k={k}",
                    parts(t),
                    parts(s)
                )
            }
        }
    }
}

/// One solver run that a report rests on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Observation {
    pub instance: String,
    pub n: usize,
    pub delta: usize,
    pub k: usize,
    pub quantity: Quantity,
    pub value: usize,
    pub witness: VertexSet,
    pub elapsed: Duration,
}

impl Observation {
    pub(crate) fn new(
        instance: &str,
        g: &Graph,
        k: usize,
        quantity: Quantity,
        r: &SolveResult,
    ) -> Self {
        Self {
            instance: instance.to_string(),
            n: g.n(),
            delta: g.min_degree(),
            k,
            quantity,
            value: r.value,
            witness: r.witness.clone(),
            elapsed: r.elapsed,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimReport {
    pub claim: ClaimId,
    pub params: String,
    /// The value or inequality the claim predicts.
    pub expected: String,
    /// What the solvers computed.
    pub observed: String,
    pub verdict: Verdict,
    /// The main solver run, when there is a single one worth recording.
    pub observation: Option<Observation>,
}

impl ClaimReport {
    /// A violated theorem; conjecture and question data points never fail.
    pub fn is_failure(&self) -> bool {
        self.verdict == Verdict::Violated && self.claim.kind() == ClaimKind::Theorem
    }
}
