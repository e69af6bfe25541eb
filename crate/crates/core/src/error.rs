use thiserror::Error;

/// Conditions of the bipartite realization lemma, named so that a rejected
/// input reports exactly which inequality failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BipartiteCondition {
    NonIncreasing,
    Positive,
    /// `n <= m`
    PartSizes,
    /// `a_1 <= m`
    MaxDegree,
    /// `sum(a) == sum(b)`
    EqualSums,
    /// `b_1 <= b_m + 1`
    Balanced,
}

impl std::fmt::Display for BipartiteCondition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            BipartiteCondition::NonIncreasing => "both sequences non-increasing",
            BipartiteCondition::Positive => "all entries >= 1",
            BipartiteCondition::PartSizes => "n <= m",
            BipartiteCondition::MaxDegree => "a_1 <= m",
            BipartiteCondition::EqualSums => "sum(a) == sum(b)",
            BipartiteCondition::Balanced => "b_1 <= b_m + 1",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("cannot parse token {token:?} as a non-negative integer")]
    Parse { token: String },

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("bipartite realization requires {0}")]
    Bipartite(BipartiteCondition),

    /// The input lies outside the domain of the operation (e.g. a non-graphic
    /// sequence handed to a realizer).
    #[error("domain error: {0}")]
    Domain(String),

    #[error("infeasible: {0}")]
    Infeasible(String),

    #[error("{what} with n = {n} exceeds the limit of {limit}")]
    Resource {
        what: &'static str,
        n: usize,
        limit: usize,
    },

    /// A step that the underlying theorem guarantees to succeed did not.
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
