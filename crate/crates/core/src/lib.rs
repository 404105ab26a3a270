//! Exact computation of k-tuple total domination numbers.
//!
//! A set `S` of vertices is a *k-tuple total dominating set* (kTDS) when every
//! vertex of the graph has at least `k` neighbours inside `S`. This crate
//! computes the smallest kTDS size (`gamma`), the largest size of an
//! inclusion-minimal kTDS (`Gamma`), and the matching quantities for
//! k-transversals of hypergraphs (`tau`, `upsilon`). The [`claims`] module
//! turns the known formulas, bounds and conjectures about these numbers into
//! executable checks.
//!
//! All solvers are exact; graphs are limited to a few dozen vertices.

pub mod claims;
pub mod corpus;
pub mod domination;
mod error;
pub mod graph;
pub mod hypergraph;
mod solve;
mod vertex_set;

pub use claims::{check_claim, ClaimId, ClaimKind, ClaimParams, ClaimReport, Instance, Verdict};
pub use domination::{
    enumerate_minimal_ktds, gamma_ktt, is_gamma_external, is_ktds, is_minimal_ktds, opn_k,
    upper_gamma_ktt, OpnWitness,
};
pub use error::{Error, Result};
pub use graph::{FamilySpec, Graph};
pub use hypergraph::{tau_k, upsilon_k, Hypergraph};
pub use solve::{Quantity, SolveOptions, SolveResult, Strategy, DEFAULT_MAX_N, EXHAUSTIVE_MAX_N};
pub use vertex_set::VertexSet;
