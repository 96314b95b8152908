//! Error types shared across the engine.

use std::fmt;

/// A single violated graph invariant, as reported by `validate_graph`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation(pub String);

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("unknown variable {0}")]
    UnknownVariable(String),

    #[error("unknown outcome {outcome} for variable {var}")]
    UnknownOutcome { var: String, outcome: String },

    #[error("cycle: {0}")]
    Cycle(String),

    #[error("state space too large: {size} joint states exceeds cap {cap}")]
    StateSpaceTooLarge { size: u128, cap: u64 },

    #[error("rule space too large: {assignments} observation assignments exceeds cap {cap}")]
    RuleSpaceTooLarge { assignments: u128, cap: u32 },

    #[error("unsupported evidence: {0}")]
    UnsupportedEvidence(String),

    #[error("variable {0} appears in both evidence and interventions")]
    OverlappingQuery(String),

    #[error("invalid graph: {}", crate::error::join_violations(.0))]
    InvalidGraph(Vec<Violation>),

    #[error("{0}")]
    InvalidProblem(String),

    #[error("not a decision variable: {0}")]
    NotDecision(String),

    #[error("not a utility variable: {0}")]
    NotUtility(String),

    #[error("updateful theory requires an observation assignment for {{{0}}}")]
    ObservationRequired(String),

    #[error("observation assignment does not match the observation set {{{expected}}}, got {{{got}}}")]
    ObservationMismatch { expected: String, got: String },

    #[error("missing observation variable {0}")]
    MissingObservation(String),

    #[error("every candidate has undefined expected utility")]
    AllCandidatesUndefined,

    #[error("no accepted episodes")]
    NoAcceptedEpisodes,
}

pub(crate) fn join_violations(violations: &[Violation]) -> String {
    violations
        .iter()
        .map(|v| v.0.as_str())
        .collect::<Vec<_>>()
        .join("; ")
}

pub type Result<T> = std::result::Result<T, Error>;
