use thiserror::Error;

/// Errors shared across the geometry, profile, solver and rendering modules.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid n-gon spec: {0}")]
    InvalidNGonSpec(String),

    #[error("invalid polygon: {0}")]
    InvalidPolygon(String),

    #[error("degenerate triangle (area below 1e-12)")]
    DegenerateTriangle,

    #[error("unsupported shape: {0}")]
    UnsupportedShape(String),

    #[error("height h = {h} outside profile domain (requires {requirement})")]
    OutOfDomain { h: f64, requirement: String },

    #[error("infeasible apex height {h}: polygon extends to {extent} above the base line")]
    InfeasibleHeight { h: f64, extent: f64 },

    #[error("solver failed to converge within {iterations} iterations")]
    ConvergenceFailure { iterations: usize },

    #[error("scene has no drawable geometry")]
    EmptyScene,

    #[error("render width {0} px is below the 100 px minimum")]
    WidthTooSmall(u32),

    #[error("unknown figure id {0} (valid: 1..=14)")]
    UnknownFigure(u32),
}

pub type Result<T> = std::result::Result<T, Error>;
