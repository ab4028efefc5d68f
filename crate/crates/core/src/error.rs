use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("p and q must be positive integers (got p = {p}, q = {q})")]
    ZeroRatio { p: u32, q: u32 },
    #[error("p/q = {p}/{q} is not in lowest terms")]
    NotLowestTerms { p: u32, q: u32 },
    #[error("hypocycloid requires p < q (got p = {p}, q = {q})")]
    HypocycloidRadius { p: u32, q: u32 },
    #[error("epicycloid requires p <= q (got p = {p}, q = {q})")]
    EpicycloidRadius { p: u32, q: u32 },
    #[error("hypocycloid with q = 2p degenerates to a segment")]
    SegmentHypocycloid,
    #[error("rolling radius B must be nonzero")]
    ZeroRollingRadius,
    #[error("angle {0} is outside the open interval (0, pi)")]
    AngleOutOfRange(f64),
    #[error("tangent lines are parallel (normal angles differ by {delta})")]
    ParallelLines { delta: f64 },
    #[error("isoptic at alpha = {alpha} is a circle; use degenerate_circle")]
    DegenerateCircle { alpha: f64 },
    #[error("cannot parse angle {0:?}")]
    AngleSyntax(String),
    #[error("invalid render job: {0}")]
    InvalidJob(String),
}
