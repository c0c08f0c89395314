use thiserror::Error;

/// Errors produced by the census library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CensusError {
    #[error("cannot parse group spec `{spec}`: {reason}")]
    Parse { spec: String, reason: String },

    #[error("table is not a group: {0}")]
    NotAGroup(String),

    #[error("cannot read group file `{path}`: {reason}")]
    Io { path: String, reason: String },

    #[error("element index {index} out of range for a group of order {order}")]
    IndexOutOfRange { index: usize, order: usize },

    #[error("group of order {order} exceeds the configured bound {bound} for {what}")]
    ScaleExceeded { order: usize, bound: usize, what: &'static str },

    #[error("groups larger than {max} elements are not representable")]
    TooLarge { max: usize },

    #[error("invalid connection set: {0}")]
    InvalidConnectionSet(String),

    #[error("connection sets have different degrees ({left} vs {right})")]
    DegreeMismatch { left: usize, right: usize },

    #[error("subgroup is not invariant under the automorphism")]
    NotInvariant,

    #[error("subgroup poset has no top element")]
    MissingTop,

    #[error("group is not abelian")]
    NotAbelian,

    #[error("multiplier {multiplier} is not a unit modulo {modulus}")]
    NotAUnit { multiplier: u64, modulus: u64 },

    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A count that must be an exact quotient left a remainder, or two
    /// independent counting routes disagreed.
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}

pub type Result<T, E = CensusError> = std::result::Result<T, E>;
