//! Weighted Fermat-Torricelli trees on surfaces of constant Gaussian
//! curvature.
//!
//! The library works on four surface charts: the Euclidean plane, the
//! K-plane (sphere for K > 0, hyperbolic plane for K < 0), the unit
//! circular cylinder, and the right circular cone of unit base radius.
//! It provides:
//!
//! - geodesic distances, tangent directions, and the unrolling isometries
//!   that flatten cylinder and cone triangles into the plane ([`geom`]);
//! - the weighted Fermat-Torricelli objective, the floating/absorbed
//!   classification of the minimizer, and a derivative-free solver
//!   ([`fermat`]);
//! - the inverse problem: recover the unique normalized weights that make
//!   a given interior point the minimizer ([`inverse`]);
//! - the epsilon construction: a one-parameter family of angle fans near a
//!   vertex whose induced weights degenerate, as the parameter goes to
//!   zero, onto the two-arc tree absorbed at that vertex ([`epsilon`]);
//! - a JSON scene format used by the `geofermat` command-line front end
//!   ([`scene`]).

pub mod epsilon;
pub mod error;
pub mod fermat;
pub mod geom;
pub mod inverse;
pub mod scene;

mod solver;

pub use epsilon::{EpsilonConfig, EpsilonResult, SweepRow};
pub use error::{Error, Result};
pub use fermat::{
    Classification, FermatSolution, SolveOptions, TangentVector, Topology, WeightTriple,
};
pub use geom::{ChartPoint, PlanarTriangle, SurfaceSpec, Triangle, TrianglePatch};
pub use inverse::AngleFan;
pub use scene::Scene;
