use thiserror::Error;

use crate::graph::ValidationReport;

#[derive(Debug, Clone, Error)]
pub enum GkmError {
    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("{0} is not divisible by {1}")]
    NotDivisible(String, String),
    #[error("covector is not generic: it is orthogonal to the weight of edge {0}")]
    NotGeneric(String),
    #[error("orientation is not index-increasing (edge {0})")]
    NotIndexIncreasing(String),
    #[error("Thom class for {0} is not unique (nullspace dimension {1})")]
    NonUnique(String, usize),
    #[error("no class satisfies the constraints for {0}")]
    Infeasible(String),
    #[error("degree error: {0}")]
    DegreeError(String),
    #[error("localization sum is not a constant: {0}")]
    NonConstant(String),
    #[error("localization numerator does not vanish: {0}")]
    NonZero(String),
    #[error("outside supported scope: {0}")]
    ScopeError(String),
    #[error("{0}")]
    NotParallel(String),
    #[error("vertex {0} does not have a unique lower neighbour besides {1}")]
    AmbiguousBelowNeighbor(String, String),
    #[error("mismatch: {0}")]
    Mismatch(String),
    #[error("instance type mismatch: {0}")]
    TypeMismatch(String),
    #[error("degenerate configuration: {0}")]
    Degenerate(String),
    #[error("no classification row matches: {0}")]
    Unclassifiable(String),
    #[error("condition violated: {0}")]
    ConditionViolated(String),
    #[error("infeasible instance: {0}")]
    InfeasibleInstance(String),
    #[error("assignment is not a graph cohomology class: {0}")]
    NotAClass(String),
    #[error("malformed graph: {0}")]
    Malformed(String),
    #[error("parse error at {at}: {message}")]
    ParseError { at: String, message: String },
    #[error("graph failed validation:\n{0}")]
    ValidationError(Box<ValidationReport>),
    #[error("unknown corpus instance `{0}`")]
    UnknownInstance(String),
}

pub type Result<T> = std::result::Result<T, GkmError>;
