use thiserror::Error;

/// Errors produced by graph construction, parsing, solvers and claim checks.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A family or constructor parameter is out of range.
    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// Malformed graph or hypergraph text.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// The instance lies outside the domain of the requested quantity
    /// (for example a vertex of degree below `k`).
    #[error("domain error: {0}")]
    Domain(String),

    /// The instance is larger than the exact solvers accept.
    #[error("resource limit: {0}")]
    Resource(String),

    /// A call argument is inconsistent with the other inputs.
    #[error("invalid argument: {0}")]
    Argument(String),

    /// A closed form has an empty feasible set for these parameters.
    #[error("formula inapplicable: {0}")]
    Inapplicable(String),

    /// The per-instance time budget ran out.
    #[error("time budget exhausted after {nodes} search nodes")]
    Timeout { nodes: u64 },
}

impl Error {
    /// Short machine-readable category.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Parameter(_) => "parameter",
            Error::Parse { .. } => "parse",
            Error::Domain(_) => "domain",
            Error::Resource(_) => "resource",
            Error::Argument(_) => "argument",
            Error::Inapplicable(_) => "inapplicable",
            Error::Timeout { .. } => "timeout",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
