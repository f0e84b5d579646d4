use crate::bds::VertexId;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("vertex {id} has a negative degree ({out_deg}, {in_deg})")]
    NegativeDegree {
        id: VertexId,
        out_deg: i64,
        in_deg: i64,
    },
    #[error("vertex id {0} appears more than once")]
    DuplicateVertexId(VertexId),
    #[error("arc {0}>{0} is a loop")]
    LoopArc(VertexId),
    #[error("arc {0}>{1} appears more than once")]
    DuplicateArc(VertexId, VertexId),
    #[error("vertex {0} is not part of the sequence")]
    UnknownPivot(VertexId),
    #[error("out-neighborhoods have different sizes ({0} vs {1})")]
    CardinalityMismatch(usize, usize),
    #[error("invalid out-neighborhood: {0}")]
    InvalidPon(&'static str),
    #[error("only {available} allowed vertices, {requested} requested")]
    NotEnoughAllowedVertices { requested: usize, available: usize },
    #[error("pivot {0} cannot be in its own forbidden set")]
    PivotForbidden(VertexId),
    #[error("forbidden vertex {0} is not part of the sequence")]
    UnknownForbiddenVertex(VertexId),
    #[error("swap is not applicable: {0}")]
    SwapNotApplicable(&'static str),
    #[error("shift precondition violated: {0}")]
    ShiftPrecondition(&'static str),
    #[error("degree precedence violated between the entering and leaving vertex")]
    PrecedenceViolated,
    #[error("no swap case applies; the exchange argument was violated")]
    NoCaseApplies,
    #[error("target out-neighborhood is not to the left of the current one")]
    NotLeftOf,
    #[error("graphs realize different bi-degree sequences")]
    DegreeSequenceMismatch,
    #[error("malformed swap line: {0}")]
    MalformedSwap(String),
    #[error("invalid chain configuration: {0}")]
    InvalidChainConfig(&'static str),
    #[error("sample is not a member of the given realization set")]
    SampleOutsideSupport,
    #[error("{n} vertices exceed the oracle budget of {max_n}")]
    BudgetExceeded { n: usize, max_n: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
