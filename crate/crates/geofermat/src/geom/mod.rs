//! Surface definitions, geodesic lengths and angles, and the unrolling
//! isometries that flatten cylinder and cone triangles into the plane.

mod surface;
mod triangle;

pub use surface::{geodesic_distance, ChartPoint, SurfaceSpec};
pub use triangle::{
    cone_slant_chord, cone_unrolled_angle, cylinder_angle_at_a1, cylinder_side_length, unroll,
    PlanarTriangle, Triangle, TrianglePatch,
};

pub(crate) use surface::{embed, shoot, tangent_toward, unembed, Vec3};

/// Arguments to `acos`/`asin` within this distance of [-1, 1] are clamped;
/// anything farther out is treated as a modeling error, not roundoff.
pub(crate) const COS_CLAMP: f64 = 1e-12;

/// Clamp a cosine-like value to [-1, 1] if it is within [`COS_CLAMP`] of
/// the interval, otherwise report the excess.
pub(crate) fn clamp_unit(value: f64) -> Option<f64> {
    if value.abs() <= 1.0 {
        Some(value)
    } else if value.abs() <= 1.0 + COS_CLAMP {
        Some(value.signum())
    } else {
        None
    }
}
