use num::BigInt;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Two classes (or a class and a ring) belong to different rings.
    #[error("operands belong to different rings")]
    RingMismatch,
    /// The ring has no degree functional, so integration is undefined.
    #[error("degree functional is undefined for this ring")]
    DegreeUndefined,
    /// An operation that needs an honest integer rank was given a formal one.
    #[error("operation requires an integral rank, got {0}")]
    RankNotIntegral(String),
    /// Exterior power beyond the rank of the input.
    #[error("exterior power exceeds the rank")]
    EmptyWedge,
    /// Tableau enumeration would exceed the feasibility cap.
    #[error("enumeration of {count} tableaux exceeds the cap {cap}")]
    EnumerationTooLarge { count: BigInt, cap: u64 },
    /// An input collection that must be non-empty was empty.
    #[error("input must be non-empty")]
    EmptyInput,
    /// A documented precondition was violated.
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    /// A bundle name or expression that the evaluator does not know.
    #[error("unknown bundle: {0}")]
    UnknownBundle(String),
    /// A bundle expression that does not parse.
    #[error("parse error: {0}")]
    Parse(String),
    /// A symmetric-function routine met a non-symmetric input. Reaching this
    /// indicates a bug in the caller, never a bad user input.
    #[error("internal symmetry error: {0}")]
    InternalSymmetryError(String),
}

pub type Result<T> = std::result::Result<T, Error>;
