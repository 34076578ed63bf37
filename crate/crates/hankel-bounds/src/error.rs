use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by series with small leading term: |b0| = {magnitude:.3e} <= {epsilon:.3e}")]
    DivisionBySmallLeadingTerm { magnitude: f64, epsilon: f64 },
    #[error("series is not normalized (need a0 = 0, a1 = 1)")]
    NotNormalized,
    #[error("invalid Herglotz measure: {0}")]
    InvalidMeasure(String),
    #[error("c1 = 2 is degenerate: x is undetermined")]
    DegenerateC1,
    #[error("recovered parameters leave the unit disc: {0}")]
    NotRepresentable(String),
    #[error("coefficient sequence too short: need {needed}, have {have}")]
    InsufficientCoefficients { needed: usize, have: usize },
    #[error("series truncation order {have} below required {needed}")]
    InsufficientOrder { needed: usize, have: usize },
    #[error("point (c, delta) = ({c}, {delta}) outside the box [0,2] x [0,1]")]
    OutOfBox { c: f64, delta: f64 },
    #[error("alpha must lie in [1,2], got {0}")]
    AlphaOutOfRange(f64),
    #[error("radius must lie in (0, 0.9], got {0}")]
    RadiusOutOfRange(f64),
    #[error("invalid search configuration: {0}")]
    InvalidConfig(String),
}

pub type Result<T> = std::result::Result<T, Error>;
