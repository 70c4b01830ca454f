use thiserror::Error;

/// Everything that can go wrong while building or interrogating a finite
/// inverse semigroup, groupoid or one of the derived structures.
#[derive(Debug, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("point {point} outside ground set 1..={degree}")]
    PointOutOfRange { point: usize, degree: usize },

    #[error("not a partial bijection: {0}")]
    NotPartialBijection(String),

    #[error("{what} exceeds bound: {size} > {bound}")]
    BoundExceeded {
        what: &'static str,
        size: usize,
        bound: usize,
    },

    #[error("table is not square: {0}")]
    NotSquare(String),

    #[error("multiplication is not associative at ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),

    #[error("element {0} has no inverse")]
    NotRegular(usize),

    #[error("idempotents {0} and {1} do not commute")]
    IdempotentsDoNotCommute(usize, usize),

    #[error("declared zero {0} is not absorbing")]
    BadZero(usize),

    #[error("declared identity {0} is not neutral")]
    BadOne(usize),

    #[error("element {0} is not idempotent")]
    NotIdempotent(usize),

    #[error("semigroup has no zero")]
    NoZero,

    #[error("semigroup is not a monoid")]
    NotAMonoid,

    #[error("map is not a homomorphism: {0}")]
    NotAHomomorphism(String),

    #[error("subset is not an ideal")]
    NotAnIdeal,

    #[error("target is not a group")]
    TargetNotAGroup,

    #[error("semigroup is not a Boolean inverse monoid")]
    NotBoolean,

    #[error("semigroup is not fundamental")]
    NotFundamental,

    #[error("{0} is not below {1}")]
    NotBelow(usize, usize),

    #[error("elements are not pairwise orthogonal")]
    NotOrthogonal,

    #[error("join does not exist")]
    NoJoin,

    #[error("table is not a band at {0}")]
    NotABand(String),

    #[error("table is not commutative at ({0}, {1})")]
    NotCommutative(usize, usize),

    #[error("Frink condition fails at ({0}, {1})")]
    FrinkViolation(usize, usize),

    #[error("idempotent {0} has more than one complement")]
    NonUniqueComplement(usize),

    #[error("subset is not closed under product and inverse")]
    NotClosed,

    #[error("invalid groupoid: {0}")]
    InvalidGroupoid(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("format error: {0}")]
    Format(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
