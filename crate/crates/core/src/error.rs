use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("field order {p}^{a} exceeds the supported bound {bound}")]
    OrderTooLarge { p: u64, a: u32, bound: u64 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("zero has no multiplicative order")]
    ZeroElement,
    #[error("alpha = {alpha} makes the map undefined in GF({q})")]
    DegenerateAlpha { q: u64, alpha: u64 },
    #[error("no primitive pair (a, a+1) in GF({0}); this would contradict Golomb's theorem")]
    ConjectureViolation(u64),
    #[error("no Hypothesis J certificate for q = {0}")]
    HypothesisJNotFound(u64),
    #[error("no Hypothesis J certificate available for q = {0}")]
    NoCertificate(u64),
    #[error("points coincide")]
    SamePoint,
    #[error("lines coincide")]
    SameLine,
    #[error("the line at infinity has no parallel class")]
    LineAtInfinity,
    #[error("malformed plane: {0}")]
    MalformedPlane(String),
    #[error("embedding schema violation: {0}")]
    Schema(String),
    #[error("point {0} is not a point of the plane")]
    PointNotInPlane(u32),
    #[error("{what} = {value} outside the range {min}..={max}")]
    OutOfRange { what: &'static str, value: u64, min: u64, max: u64 },
    #[error("W_{n} and G_{n} need a vertex of degree {n} > q+1 = {max}")]
    ImpossibleDegree { n: u64, max: u64 },
    #[error("construction failed: {0}")]
    ConstructionFailed(String),
    #[error("plane of order {0} is too large for exhaustive search")]
    PlaneTooLarge(u64),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
