//! The weighted Fermat-Torricelli objective, the floating/absorbed
//! classification of its minimizer, and the forward solver.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{self, geodesic_distance, ChartPoint, SurfaceSpec, Triangle};
use crate::solver;

/// Positive weights attached to the three triangle vertices.
///
/// The normalization constant is the exact sum `b1 + b2 + b3`; triples
/// produced by the inverse problem carry `sum = C` by construction.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WeightTriple {
    pub b1: f64,
    pub b2: f64,
    pub b3: f64,
}

impl WeightTriple {
    pub fn new(b1: f64, b2: f64, b3: f64) -> Result<Self> {
        for (name, b) in [("b1", b1), ("b2", b2), ("b3", b3)] {
            if !(b > 0.0 && b.is_finite()) {
                return Err(Error::InvalidWeights(format!(
                    "{name} = {b} must be positive and finite"
                )));
            }
        }
        Ok(WeightTriple { b1, b2, b3 })
    }

    pub fn as_array(&self) -> [f64; 3] {
        [self.b1, self.b2, self.b3]
    }

    /// The normalization constant `C = b1 + b2 + b3`.
    pub fn total(&self) -> f64 {
        self.b1 + self.b2 + self.b3
    }

    pub fn scaled(&self, factor: f64) -> WeightTriple {
        WeightTriple {
            b1: self.b1 * factor,
            b2: self.b2 * factor,
            b3: self.b3 * factor,
        }
    }

    pub fn validate(&self) -> Result<()> {
        Self::new(self.b1, self.b2, self.b3).map(|_| ())
    }
}

/// Unit tangent direction at a chart point, expressed in the orthonormal
/// chart frame there.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TangentVector {
    pub dx: f64,
    pub dy: f64,
}

impl TangentVector {
    pub fn components(&self) -> [f64; 2] {
        [self.dx, self.dy]
    }

    pub fn norm(&self) -> f64 {
        self.dx.hypot(self.dy)
    }

    /// Angle in [0, pi] to another tangent at the same point.
    pub fn angle_to(&self, other: &TangentVector) -> f64 {
        let dot = self.dx * other.dx + self.dy * other.dy;
        let cross = self.dx * other.dy - self.dy * other.dx;
        cross.abs().atan2(dot)
    }
}

/// Initial direction at `from` of the minimizing geodesic toward `to`.
pub fn unit_tangent(
    surface: &SurfaceSpec,
    from: &ChartPoint,
    to: &ChartPoint,
) -> Result<TangentVector> {
    let [dx, dy] = geom::tangent_toward(surface, from, to)?;
    Ok(TangentVector { dx, dy })
}

/// Tree shape of a Fermat-Torricelli solution.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Topology {
    /// Minimizer strictly inside the triangle; three branches.
    Floating,
    /// Minimizer absorbed at vertex `A<label>` (label in 1..=3); the tree
    /// degenerates to the two arcs incident to that vertex.
    AbsorbedAt(u8),
}

impl Topology {
    pub fn absorbed_label(&self) -> Option<u8> {
        match self {
            Topology::Floating => None,
            Topology::AbsorbedAt(i) => Some(*i),
        }
    }
}

impl std::fmt::Display for Topology {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Topology::Floating => write!(f, "floating"),
            Topology::AbsorbedAt(i) => write!(f, "absorbed({i})"),
        }
    }
}

/// Outcome of the floating/absorbed test, with the three inequality
/// margins `|B_j U_ij + B_k U_ik| - B_i` (positive everywhere means
/// floating; the first non-positive margin absorbs its vertex).
#[derive(Debug, Clone, Copy)]
pub struct Classification {
    pub topology: Topology,
    pub margins: [f64; 3],
}

/// A weighted Fermat-Torricelli tree: where the minimizer sits, the three
/// geodesic branch lengths, and the objective value.
#[derive(Debug, Clone)]
pub struct FermatSolution {
    pub topology: Topology,
    pub location: ChartPoint,
    pub branch_lengths: [f64; 3],
    pub objective: f64,
}

/// Weighted sum of geodesic distances from `p` to the vertices,
/// `f(p) = sum_i B_i d(A_i, p)`.
pub fn objective(
    weights: &WeightTriple,
    triangle: &Triangle,
    p: &ChartPoint,
) -> Result<f64> {
    weights.validate()?;
    let b = weights.as_array();
    let mut total = 0.0;
    for (vertex, bi) in triangle.vertices().iter().zip(b) {
        total += bi * geodesic_distance(triangle.surface(), vertex, p)?;
    }
    Ok(total)
}

/// Norm of `B_j u + B_k v` when the unit tangents subtend angle `alpha`:
/// `sqrt(B_j^2 + B_k^2 + 2 B_j B_k cos(alpha))`.
///
/// This is the smallest weight at a vertex with opening angle `alpha`
/// that absorbs the minimizer there.
pub fn absorbed_threshold(b2: f64, b3: f64, alpha: f64) -> f64 {
    // Stable form: (b2 - b3)^2 + 2 b2 b3 (1 + cos a) = (b2 - b3)^2
    //            + 4 b2 b3 cos^2(a/2).
    let d = b2 - b3;
    let c = (0.5 * alpha).cos();
    (d * d + 4.0 * b2 * b3 * c * c).sqrt()
}

/// Ties within this relative distance of the absorbed equality are
/// classified as absorbed, matching the non-strict inequality of the
/// absorbed case.
const CLASSIFY_TIE: f64 = 1e-12;

/// Decide whether the minimizer floats in the interior or is absorbed at
/// a vertex.
///
/// Vertex `i` absorbs when `|B_j U_ij + B_k U_ik| <= B_i`; with all
/// weights positive at most one vertex can do so.
pub fn classify(weights: &WeightTriple, triangle: &Triangle) -> Result<Classification> {
    weights.validate()?;
    let b = weights.as_array();
    let angles = triangle.vertex_angles();
    let mut margins = [0.0; 3];
    for i in 0..3 {
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        margins[i] = absorbed_threshold(b[j], b[k], angles[i]) - b[i];
    }
    let tie = CLASSIFY_TIE * weights.total();
    let mut absorbed = None;
    for (i, margin) in margins.iter().enumerate() {
        if *margin <= tie {
            // With positive weights the inequalities are exclusive; prefer
            // the most violated margin if roundoff produces two.
            match absorbed {
                Some(prev) if margins[prev as usize - 1] <= *margin => {}
                _ => absorbed = Some(i as u8 + 1),
            }
        }
    }
    Ok(Classification {
        topology: match absorbed {
            Some(i) => Topology::AbsorbedAt(i),
            None => Topology::Floating,
        },
        margins,
    })
}

/// Options for [`solve_forward`].
#[derive(Debug, Clone, Copy)]
pub struct SolveOptions {
    /// Relative stationarity tolerance: the solve stops once
    /// `|sum_i B_i U_0i| <= tol * (B1 + B2 + B3)`.
    pub tol: f64,
    /// Seed for the random probe pass that guards the local refinement
    /// against grid aliasing.
    pub seed: u64,
    /// Number of random interior probe points.
    pub probes: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        // tol leaves headroom above double-precision trig error.
        SolveOptions { tol: 1e-9, seed: 42, probes: 256 }
    }
}

/// Minimize the weighted Fermat-Torricelli objective over the triangle.
///
/// Absorbed instances return the absorbing vertex exactly. Floating
/// instances run a coarse grid over the (unrolled or chart) triangle,
/// Nelder-Mead refinement, and a tangent-balance polish until the
/// weighted tangent sum satisfies the tolerance; cylinder and cone solves
/// happen in the unrolled plane and map back.
pub fn solve_forward(
    weights: &WeightTriple,
    triangle: &Triangle,
    options: &SolveOptions,
) -> Result<FermatSolution> {
    if !(options.tol > 0.0) {
        return Err(Error::InvalidWeights(format!(
            "tolerance must be positive, got {}",
            options.tol
        )));
    }
    let classification = classify(weights, triangle)?;
    if let Topology::AbsorbedAt(label) = classification.topology {
        let vertex = triangle.vertices()[label as usize - 1];
        return solution_at(weights, triangle, &vertex, Topology::AbsorbedAt(label));
    }
    let location = solver::minimize(weights, triangle, options)?;
    solution_at(weights, triangle, &location, Topology::Floating)
}

pub(crate) fn solution_at(
    weights: &WeightTriple,
    triangle: &Triangle,
    p: &ChartPoint,
    topology: Topology,
) -> Result<FermatSolution> {
    let mut branch_lengths = [0.0; 3];
    for (slot, vertex) in branch_lengths.iter_mut().zip(triangle.vertices()) {
        *slot = geodesic_distance(triangle.surface(), vertex, p)?;
    }
    if let Topology::AbsorbedAt(label) = topology {
        branch_lengths[label as usize - 1] = 0.0;
    }
    let b = weights.as_array();
    let objective = branch_lengths
        .iter()
        .zip(b)
        .map(|(len, bi)| bi * len)
        .sum();
    Ok(FermatSolution {
        topology,
        location: *p,
        branch_lengths,
        objective,
    })
}

/// Residual of the floating optimality condition at `p`:
/// `|B1 U_01 + B2 U_02 + B3 U_03|`.
pub fn balance_residual(
    weights: &WeightTriple,
    triangle: &Triangle,
    p: &ChartPoint,
) -> Result<f64> {
    let b = weights.as_array();
    let mut sum = [0.0f64; 2];
    for (vertex, bi) in triangle.vertices().iter().zip(b) {
        let t = geom::tangent_toward(triangle.surface(), p, vertex)?;
        sum[0] += bi * t[0];
        sum[1] += bi * t[1];
    }
    Ok(sum[0].hypot(sum[1]))
}
