//! Error type shared by every module of the crate.

use crate::fermat::FermatSolution;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid surface: {0}")]
    InvalidSurface(String),

    #[error("point does not lie in the {expected} chart (got a {got} point)")]
    ChartMismatch {
        expected: &'static str,
        got: &'static str,
    },

    #[error("point outside the chart domain: {0}")]
    OutsideChart(String),

    #[error("antipodal points on the sphere: the minimizing geodesic is not unique")]
    AntipodalPoints,

    #[error("coincident points have no tangent direction")]
    CoincidentPoints,

    #[error("degenerate triangle: {0}")]
    DegenerateTriangle(String),

    #[error("invalid triangle: {0}")]
    InvalidTriangle(String),

    #[error("{op} is not supported on the {surface}")]
    UnsupportedSurface {
        surface: &'static str,
        op: &'static str,
    },

    #[error("invalid weights: {0}")]
    InvalidWeights(String),

    #[error("invalid angle fan: {0}")]
    InvalidFan(String),

    #[error("point is not strictly interior: {0}")]
    NotInterior(String),

    #[error("point lies within {limit:e} of vertex A{vertex}")]
    NearVertex { vertex: u8, limit: f64 },

    #[error("epsilon {eps:e} outside the admissible range [0, {max:e})")]
    EpsilonOutOfRange { eps: f64, max: f64 },

    #[error("constructed fan angle left (0, pi): epsilon too large for this triangle")]
    EpsilonTooLarge,

    #[error("apex angle {alpha} exceeds the unrolled sector angle {sector}")]
    InvalidApexAngle { alpha: f64, sector: f64 },

    /// The forward solver hit its iteration cap before the stationarity
    /// residual dropped below tolerance. Carries the best iterate found.
    #[error("solver did not converge: residual {residual:e} after {iterations} iterations")]
    Convergence {
        residual: f64,
        iterations: usize,
        best: Box<FermatSolution>,
    },

    #[error("scene is not valid JSON: {0}")]
    SceneJson(String),

    #[error("invalid scene: {0}")]
    Scene(String),

    #[error("invalid epsilon grid: {0}")]
    GridSpec(String),
}

impl Error {
    /// True for errors that indicate bad input rather than a numerical
    /// failure of the solver.
    pub fn is_validation(&self) -> bool {
        !matches!(self, Error::Convergence { .. })
    }
}
