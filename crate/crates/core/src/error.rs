use thiserror::Error;

use crate::arrows::Arrow;
use crate::diagram::Cell;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid slope ({p}, {q}): components must be positive and coprime")]
    InvalidSlope { p: i64, q: i64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("box {0} is not inside the diagram")]
    BoxOutsideDiagram(Cell),

    #[error("box {0} is not in the complement of the diagram")]
    BoxInsideDiagram(Cell),

    #[error("invalid arrow {arrow}: {reason}")]
    InvalidArrow { arrow: Arrow, reason: &'static str },

    #[error(
        "hook (arm {arm}, leg {leg}) meets neither steepness condition for slope ({p}, {q}): \
         need leg*p >= q*(arm+1) or (leg+1)*p <= q*arm"
    )]
    SlopeCondition { arm: i64, leg: i64, p: i64, q: i64 },

    #[error("diagram does not fit under the diagonal for (p, q) = ({p}, {q}), K = {k}: box {cell} violates q*x + p*y <= K*p*q - p - q")]
    DoesNotFit { cell: Cell, p: i64, q: i64, k: i64 },

    #[error("box {cell} lies outside the {width} x {height} rectangle")]
    OutsideRectangle { cell: Cell, width: i64, height: i64 },

    #[error("slope ({p}, {q}) is too small for area {n}: need p + q > n")]
    SlopeTooSmall { n: i64, p: i64, q: i64 },

    #[error("polynomial division left a nonzero remainder")]
    NonExactDivision,

    #[error("bijection failure at box {cell}: {detail}")]
    BijectionFailure { cell: Cell, detail: String },

    #[error("theorem violation: {0}")]
    TheoremViolation(String),
}
