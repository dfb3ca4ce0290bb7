use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty generator list")]
    EmptyInput,
    #[error("generators must be positive")]
    NonPositive,
    #[error("generators have gcd {0}, not a numerical semigroup")]
    NotNumerical(u64),
    #[error("{0} is not a nonzero element of the semigroup")]
    NotMember(i64),
    #[error("operation needs at least two minimal generators")]
    Underdetermined,
    #[error("arithmetic overflow")]
    Overflow,
    #[error("{0} is not a special gap")]
    NotSpecialGap(u64),
    #[error("{0} is not a minimal generator")]
    NotMinimalGenerator(u64),
    #[error("sequence is not a permutation of the minimal generators")]
    NotAPermutation,
    #[error("{0} generators exceed the arrangement search limit")]
    TooManyGenerators(usize),
    #[error("semigroup is not free for this arrangement")]
    NotFree,
    #[error("the semigroup is half-factorial, its Delta set is empty")]
    HalfFactorial,
    #[error("factorizations have different dimensions ({0} vs {1})")]
    DimensionMismatch(usize, usize),
    #[error("search frontier exceeded {0} vectors")]
    DiagnosticOverflow(usize),
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("sequence entries must have gcd 1")]
    GcdNotOne,
    #[error("sequence is not strictly increasing")]
    NonIncreasing,
    #[error("gcd chain is not strictly decreasing")]
    DegenerateGcdChain,
    #[error("sequence is not a delta-sequence")]
    NotDeltaSequence,
}

pub type Result<T> = std::result::Result<T, Error>;
