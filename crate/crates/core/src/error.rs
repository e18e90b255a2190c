use thiserror::Error;

use crate::numeric::Int;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("denominator must be non-zero")]
    ZeroDenominator,
    #[error("square root of a negative integer")]
    NegativeInput,
    #[error("{0} is not a perfect square")]
    NotASquare(Int),
    #[error("cannot parse rational from {0:?}")]
    ParseRat(String),

    #[error("modulus must be at least 2, got {0}")]
    BadModulus(Int),
    #[error("Binet evaluation is only trusted for n <= {max}, got {n}")]
    RangeExceeded { n: u64, max: u64 },
    #[error("no term divisible by 3 in the window starting at index {index}")]
    NoWitness { index: u64 },
    #[error("several terms divisible by 3 in the window starting at index {index}: {positions:?}")]
    MultipleWitnesses { index: u64, positions: Vec<usize> },

    #[error("window index 0 yields a zero leg")]
    DegenerateWindow,
    #[error("({a}, {b}, {c}) is not a Pythagorean triple")]
    NotPythagorean { a: Int, b: Int, c: Int },
    #[error("scale factor must be at least 1, got {0}")]
    BadScale(Int),

    #[error("leading coefficient must be non-zero")]
    ZeroLeadingCoefficient,
    #[error("leg {leg} and hypotenuse {hyp} must both be positive")]
    NonPositiveSide { leg: Int, hyp: Int },
    #[error("leg {leg} must be smaller than hypotenuse {hyp}")]
    BadOrder { leg: Int, hyp: Int },
    #[error("{hyp}^2 - {leg}^2 is not a perfect square, so {leg} is not a leg for hypotenuse {hyp}")]
    NotATripleLeg { leg: Int, hyp: Int },
}
