//! The inverse weighted Fermat-Torricelli problem: given the angle fan at
//! an interior point, recover the unique positive weights with prescribed
//! sum that make the point the minimizer.

use std::f64::consts::{PI, TAU};

use crate::error::{Error, Result};
use crate::fermat::{unit_tangent, WeightTriple};
use crate::geom::{geodesic_distance, ChartPoint, Triangle};

/// Tolerance on the `2 pi` closure of a fan; fans produced analytically
/// by the epsilon formulas accumulate rounding of this order.
const FAN_SUM_TOL: f64 = 1e-10;

/// The three angles around an interior point `A0` subtended by the
/// geodesics to the triangle vertices.
///
/// `a12 = angle A1-A0-A2`, `a23 = angle A2-A0-A3`, `a31 = angle A3-A0-A1`;
/// each lies in (0, pi) and they close up to `2 pi`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AngleFan {
    a12: f64,
    a23: f64,
    a31: f64,
}

impl AngleFan {
    /// Validate and normalize a fan. Inputs whose sum is within
    /// [`FAN_SUM_TOL`] of `2 pi` are rescaled uniformly onto it; anything
    /// farther off is rejected.
    pub fn new(a12: f64, a23: f64, a31: f64) -> Result<Self> {
        for (name, a) in [("a12", a12), ("a23", a23), ("a31", a31)] {
            if !a.is_finite() || a <= 0.0 || a >= PI {
                return Err(Error::InvalidFan(format!(
                    "angle {name} = {a} outside (0, pi)"
                )));
            }
        }
        let sum = a12 + a23 + a31;
        if (sum - TAU).abs() > FAN_SUM_TOL {
            return Err(Error::InvalidFan(format!(
                "angles sum to {sum}, not 2 pi"
            )));
        }
        let scale = TAU / sum;
        Ok(AngleFan {
            a12: a12 * scale,
            a23: a23 * scale,
            a31: a31 * scale,
        })
    }

    pub fn angle_a1_a0_a2(&self) -> f64 {
        self.a12
    }

    pub fn angle_a2_a0_a3(&self) -> f64 {
        self.a23
    }

    pub fn angle_a3_a0_a1(&self) -> f64 {
        self.a31
    }

    /// `[a12, a23, a31]`.
    pub fn as_array(&self) -> [f64; 3] {
        [self.a12, self.a23, self.a31]
    }
}

/// Recover the weights that make the fan's center the minimizer, with
/// `B1 + B2 + B3 = c`:
///
/// `B_i = c / (1 + sin(a_i0j)/sin(a_j0k) + sin(a_i0k)/sin(a_j0k))`,
///
/// i.e. each weight is proportional to the sine of the fan angle opposite
/// its vertex.
pub fn inverse_weights(fan: &AngleFan, c: f64) -> Result<WeightTriple> {
    if !(c > 0.0 && c.is_finite()) {
        return Err(Error::InvalidWeights(format!(
            "normalization constant must be positive, got {c}"
        )));
    }
    let (s12, s23, s31) = (fan.a12.sin(), fan.a23.sin(), fan.a31.sin());
    let total = s12 + s23 + s31;
    WeightTriple::new(
        c * (s23 / total),
        c * (s31 / total),
        c * (s12 / total),
    )
}

/// Distance below which `A0` counts as sitting on a vertex.
const VERTEX_GUARD: f64 = 1e-9;

/// Measure the angle fan at `a0`: the three pairwise angles between the
/// unit tangents toward the vertices.
///
/// Rejects points that are not strictly interior (the minimal pairwise
/// angles then fail to close up to `2 pi`, or one of them reaches `pi`)
/// and points within [`VERTEX_GUARD`] of a vertex.
pub fn angle_fan_at(triangle: &Triangle, a0: &ChartPoint) -> Result<AngleFan> {
    let surface = triangle.surface();
    for (i, vertex) in triangle.vertices().iter().enumerate() {
        let d = geodesic_distance(surface, vertex, a0)?;
        if d < VERTEX_GUARD {
            return Err(Error::NearVertex {
                vertex: i as u8 + 1,
                limit: VERTEX_GUARD,
            });
        }
    }
    let [v1, v2, v3] = triangle.vertices();
    let u1 = unit_tangent(surface, a0, v1)?;
    let u2 = unit_tangent(surface, a0, v2)?;
    let u3 = unit_tangent(surface, a0, v3)?;
    let (a12, a23, a31) = (u1.angle_to(&u2), u2.angle_to(&u3), u3.angle_to(&u1));
    let sum = a12 + a23 + a31;
    if (sum - TAU).abs() > 1e-9 {
        return Err(Error::NotInterior(format!(
            "tangent fan closes to {sum}, not 2 pi"
        )));
    }
    AngleFan::new(a12, a23, a31).map_err(|_| {
        Error::NotInterior("a fan angle reached pi: the point sits on a side".into())
    })
}
