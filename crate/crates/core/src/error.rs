use crate::tangents::Violation;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("need at least 3 sides, got {0}")]
    TooFewSides(usize),
    #[error("side {index} must be a positive finite length, got {value}")]
    NonpositiveSide { index: usize, value: f64 },
    #[error("tangent length {index} must be positive and finite, got {value}")]
    NonpositiveTangent { index: usize, value: f64 },
    #[error("radius must be positive and finite, got {0}")]
    NonpositiveRadius(f64),
    #[error("index {index} out of range for a list of length {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("operation requires an odd number of sides, got {0}")]
    NotOdd(usize),
    #[error("operation requires an even number of sides, got {0}")]
    NotEven(usize),
    #[error("operation requires exactly 3 sides, got {0}")]
    NotTriangle(usize),
    #[error("operation requires exactly 4 sides, got {0}")]
    NotQuad(usize),
    #[error("no tangential polygon with these sides: {}", describe(.0))]
    Infeasible(Vec<Violation>),
    #[error("alternating side sum a1 - a2 + ... - an = {0} must vanish")]
    AlternatingSumNonzero(f64),
    #[error("admissible interval for t1 is empty: ({lo}, {hi})")]
    EmptyInterval { lo: f64, hi: f64 },
    #[error("t1 = {t1} is not strictly inside ({lo}, {hi})")]
    OutOfInterval { t1: f64, lo: f64, hi: f64 },
    #[error("a1 + a3 = {odd} differs from a2 + a4 = {even}")]
    EqualityViolated { odd: f64, even: f64 },
    #[error("fourth vertex misses the circumcircle by {miss} (R = {circumradius})")]
    ConcyclicityFailure { miss: f64, circumradius: f64 },
    #[error("point lies {offset} off the outer circle")]
    PointNotOnCircle { offset: f64 },
    #[error("point is inside the inner circle, no tangent exists")]
    NoTangent,
    #[error("winding {winding} requested but the polygon has windings 1..={max}")]
    NoSuchWinding { winding: usize, max: usize },
    #[error("Poncelet chain misses its start point by {0}")]
    PonceletClosureFailure(f64),
}

fn describe(violations: &[Violation]) -> String {
    violations
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}
