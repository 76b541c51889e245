use thiserror::Error;

/// First topology axiom violated by a family, with the witness pair as
/// indices into the family in the order it was given.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TopologyViolation {
    MissingNull,
    MissingAbsolute,
    UnionEscapes(usize, usize),
    IntersectionEscapes(usize, usize),
}

impl std::fmt::Display for TopologyViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TopologyViolation::MissingNull => write!(f, "the null soft set is missing"),
            TopologyViolation::MissingAbsolute => write!(f, "the absolute soft set is missing"),
            TopologyViolation::UnionEscapes(i, j) => {
                write!(f, "the union of members #{i} and #{j} is not in the family")
            }
            TopologyViolation::IntersectionEscapes(i, j) => {
                write!(f, "the intersection of members #{i} and #{j} is not in the family")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("universe needs at least one point and one parameter")]
    EmptyUniverse,
    #[error("duplicate label `{0}` in universe")]
    DuplicateLabel(String),
    #[error("universes with more than 64 points are not supported (got {0})")]
    TooManyPoints(usize),
    #[error("unknown point label `{0}`")]
    UnknownPoint(String),
    #[error("unknown parameter label `{0}`")]
    UnknownParameter(String),
    #[error("operands live over different universes")]
    UniverseMismatch,
    #[error("point subset must be a nonempty subset of the universe")]
    EmptyPointSubset,
    #[error("family is not a soft topology: {0}")]
    InvalidTopology(TopologyViolation),
    #[error("not a soft topology: {0}")]
    InvalidFamily(String),
    #[error("space is not soft T0U; pass force to build an unverified reflection")]
    NotT0U,
    #[error("mapping is not soft continuous")]
    NotContinuous,
    #[error("target space is not soft T0")]
    TargetNotT0,
    #[error("mappings do not compose: inner target differs from outer source")]
    NotComposable,
    #[error("mapping does not descend to the quotient: {0}")]
    NotWellDefined(String),
    #[error("mapping is not total: no image for `{0}`")]
    MissingImage(String),
    #[error(
        "exhaustive enumeration over {cells} cells exceeds the bound of {bound} \
         (raise it via the {env} environment variable, hard cap 7)",
        env = crate::explorer::EXHAUSTIVE_BOUND_ENV
    )]
    ExhaustiveBoundExceeded { cells: usize, bound: usize },
    #[error("unknown predicate `{0}`")]
    UnknownPredicate(String),
    #[error("cannot parse implication `{0}`: expected `NAME[&NAME...]=>NAME`")]
    BadImplication(String),
    #[error("malformed document: {0}")]
    Document(String),
    #[error("cannot read `{path}`: {msg}")]
    Io { path: String, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
