use thiserror::Error;

/// Every failure the library can report. Values are rendered to strings so the
/// error type stays independent of the scalar field in use.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("radicand mismatch: sqrt({0}) vs sqrt({1})")]
    RadicandMismatch(i64, i64),
    #[error("Pochhammer pole: P({z}, {n}) has a vanishing reciprocal factor")]
    PochhammerPole { z: String, n: i64 },
    #[error("tau must be nonzero")]
    TauZero,
    #[error("c - tau is not nilpotent")]
    NotNilpotent,
    #[error("square root of {0} does not lie in the working field")]
    RootNotInField(String),
    #[error("N must be strictly upper triangular")]
    NotStrictlyUpper,
    #[error("lambda = {0} is an integer")]
    IntegerLambda(String),
    #[error("window mismatch: {0}")]
    WindowMismatch(String),
    #[error("window has no interior on which to state a constraint")]
    EmptyInterior,
    #[error("depth {0} exceeds what the window can hold")]
    DepthExceedsWindow(i64),
    #[error("branch unavailable: {0}")]
    BranchUnavailable(String),
    #[error("supplied matrix is not a square root of the Casimir")]
    NotASquareRoot,
    #[error("singular Pochhammer block for L_{i} at index {k}")]
    SingularPochhammerBlock { i: i64, k: i64 },
    #[error("actions live on different modules")]
    ModuleMismatch,
    #[error("actions disagree on L_{i} at index {k}")]
    OverlapDisagreement { i: i64, k: i64 },
    #[error("degenerate parameters: {0}")]
    ParameterDegenerate(String),
    #[error("window too small: {0}")]
    WindowTooSmall(String),
    #[error("f is undefined on degree-1 elements")]
    DegreeTooLow,
    #[error("degree mismatch: expected {expected}, got {got}")]
    DegreeMismatch { expected: u32, got: u32 },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("wrong module kind: {0}")]
    WrongKind(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
