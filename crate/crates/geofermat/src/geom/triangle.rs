//! Geodesic triangle descriptions, their resolved side lengths and vertex
//! angles, and the unrolling of cylinder/cone triangles into the plane.

use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use super::surface::{check_in_chart, cone_unroll_point, law_of_cosines_angle};
use super::{clamp_unit, ChartPoint, SurfaceSpec};
use crate::error::{Error, Result};

/// A geodesic triangle described in the surface's natural chart.
///
/// `Sides` and `SidesAngle` describe plane or K-plane triangles
/// intrinsically; `Cylinder` and `Cone` pin vertex `A1` (at azimuth 0 on
/// the cylinder sheet, and on the cone base circle at azimuth 0) and give
/// the other two vertices in chart coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum TrianglePatch {
    /// Three geodesic side lengths.
    Sides { a12: f64, a13: f64, a23: f64 },
    /// Two sides and the included angle at `A1`, in radians.
    SidesAngle { a12: f64, a13: f64, alpha1: f64 },
    /// Cylinder vertices `A2 = (phi2, z2)`, `A3 = (phi3, z3)`; `A1 = (0, 0)`.
    Cylinder { phi2: f64, z2: f64, phi3: f64, z3: f64 },
    /// Cone vertices by slant distance and base azimuth; `A1` sits on the
    /// base circle at azimuth 0, so `A1A = sqrt(1 + H^2)`.
    Cone { s2: f64, phi2: f64, s3: f64, phi3: f64 },
}

/// A planar triangle in the form the epsilon formulas consume: the two
/// sides meeting at `A1` and the included angle there.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlanarTriangle {
    pub a12: f64,
    pub a13: f64,
    /// Included angle at `A1`, in (0, pi).
    pub alpha1: f64,
}

impl PlanarTriangle {
    pub fn new(a12: f64, a13: f64, alpha1: f64) -> Result<Self> {
        if !(a12 > 0.0 && a13 > 0.0 && a12.is_finite() && a13.is_finite()) {
            return Err(Error::InvalidTriangle(format!(
                "sides must be positive and finite, got a12 = {a12}, a13 = {a13}"
            )));
        }
        if !(alpha1 > 0.0 && alpha1 < PI) {
            return Err(Error::InvalidTriangle(format!(
                "included angle {alpha1} outside (0, pi)"
            )));
        }
        Ok(PlanarTriangle { a12, a13, alpha1 })
    }

    /// Third side, by the planar law of cosines.
    pub fn a23(&self) -> f64 {
        let d = self.a12 - self.a13;
        (d * d + 4.0 * self.a12 * self.a13 * (0.5 * self.alpha1).sin().powi(2)).sqrt()
    }
}

/// Geodesic side length of a cylinder helix with step `b` over azimuth
/// span `phi`: `sqrt(1 + b^2) * phi`.
pub fn cylinder_side_length(b: f64, phi: f64) -> Result<f64> {
    if !(phi > 0.0) || !phi.is_finite() || !b.is_finite() {
        return Err(Error::InvalidTriangle(format!(
            "helix span must satisfy phi > 0, got phi = {phi}"
        )));
    }
    Ok(b.hypot(1.0) * phi)
}

/// Vertex angle at `A1` of a cylinder triangle, solved from the
/// cylindrical law of cosines
/// `(1+b23^2)(phi2-phi3)^2 = (1+b12^2)phi2^2 + (1+b13^2)phi3^2
///  - 2 sqrt((1+b12^2)(1+b13^2)) phi2 phi3 cos(alpha)`.
pub fn cylinder_angle_at_a1(patch: &TrianglePatch) -> Result<f64> {
    let TrianglePatch::Cylinder { phi2, z2, phi3, z3 } = *patch else {
        return Err(Error::InvalidTriangle(
            "cylinder_angle_at_a1 requires a cylinder patch".into(),
        ));
    };
    validate_cylinder_patch(phi2, z2, phi3, z3)?;
    let b12 = z2 / phi2;
    let b13 = z3 / phi3;
    let b23 = (z2 - z3) / (phi2 - phi3);
    let lhs = (1.0 + b23 * b23) * (phi2 - phi3) * (phi2 - phi3);
    let t12 = (1.0 + b12 * b12) * phi2 * phi2;
    let t13 = (1.0 + b13 * b13) * phi3 * phi3;
    let denom = 2.0 * ((1.0 + b12 * b12) * (1.0 + b13 * b13)).sqrt() * phi2 * phi3;
    let cos_alpha = (t12 + t13 - lhs) / denom;
    let clamped = clamp_unit(cos_alpha).ok_or_else(|| {
        Error::DegenerateTriangle(format!(
            "cylindrical law of cosines gave cos = {cos_alpha}"
        ))
    })?;
    let alpha = clamped.acos();
    if alpha <= 0.0 || alpha >= PI {
        return Err(Error::DegenerateTriangle(format!(
            "cylinder triangle is collinear on the unrolled strip (alpha = {alpha})"
        )));
    }
    Ok(alpha)
}

/// Angle at the unrolled apex subtended by azimuth span `phi` on a cone of
/// height `h`: `phi / sqrt(1 + h^2)`. With `phi = 2 pi` this is the full
/// sector angle.
pub fn cone_unrolled_angle(phi: f64, h: f64) -> Result<f64> {
    if !(h > 0.0) || !h.is_finite() {
        return Err(Error::InvalidSurface(format!(
            "cone requires finite H > 0, got {h}"
        )));
    }
    if phi < 0.0 || !phi.is_finite() {
        return Err(Error::OutsideChart(format!("azimuth {phi} < 0")));
    }
    Ok(phi / h.hypot(1.0))
}

/// Planar distance between the unrolled images of `A1` (on the base
/// circle, azimuth 0) and a point at slant distance `s`, azimuth `phi`,
/// on a cone of height `h`.
pub fn cone_slant_chord(s: f64, phi: f64, h: f64) -> Result<f64> {
    let beta = cone_unrolled_angle(phi, h)?;
    let slant = h.hypot(1.0);
    if !(s > 0.0 && s <= slant * (1.0 + 1e-12)) {
        return Err(Error::OutsideChart(format!(
            "slant distance {s} outside (0, {slant}]"
        )));
    }
    let d = slant - s;
    Ok((d * d + 4.0 * slant * s * (0.5 * beta).sin().powi(2)).sqrt())
}

fn validate_cylinder_patch(phi2: f64, z2: f64, phi3: f64, z3: f64) -> Result<()> {
    for (name, phi) in [("phi2", phi2), ("phi3", phi3)] {
        if !(phi > 0.0 && phi < PI) {
            return Err(Error::InvalidTriangle(format!(
                "{name} = {phi} outside the working sheet (0, pi)"
            )));
        }
    }
    if !z2.is_finite() || !z3.is_finite() {
        return Err(Error::InvalidTriangle("non-finite height".into()));
    }
    if phi2 == phi3 {
        return Err(Error::InvalidTriangle(
            "phi2 = phi3 leaves the helix step b23 undefined".into(),
        ));
    }
    Ok(())
}

fn validate_cone_patch(surface: &SurfaceSpec, s2: f64, phi2: f64, s3: f64, phi3: f64) -> Result<()> {
    let slant = surface.cone_slant();
    for (name, s) in [("s2", s2), ("s3", s3)] {
        if !(s > 0.0 && s <= slant * (1.0 + 1e-12)) {
            return Err(Error::InvalidTriangle(format!(
                "{name} = {s} outside (0, {slant}]"
            )));
        }
    }
    for (name, phi) in [("phi2", phi2), ("phi3", phi3)] {
        if !(phi > 0.0 && phi < std::f64::consts::TAU) {
            return Err(Error::InvalidTriangle(format!(
                "{name} = {phi} outside (0, 2 pi)"
            )));
        }
        let beta = phi / slant;
        if beta >= PI {
            return Err(Error::InvalidTriangle(format!(
                "{name} unrolls to {beta} >= pi: the triangle would enclose the apex"
            )));
        }
    }
    Ok(())
}

/// A validated geodesic triangle with its vertices placed in the chart
/// and its derived side lengths and vertex angles.
///
/// Sides and angles are computed with the surface's own trigonometric
/// formulas (helix lengths and the cylindrical law of cosines on the
/// cylinder, apex-chord lengths on the cone, the unified law of cosines
/// on the K-plane); [`unroll`] provides the independent route through the
/// flattened Cartesian images.
#[derive(Debug, Clone)]
pub struct Triangle {
    surface: SurfaceSpec,
    patch: TrianglePatch,
    vertices: [ChartPoint; 3],
    /// Geodesic side lengths `[a12, a13, a23]`.
    sides: [f64; 3],
    /// Vertex angles `[at A1, at A2, at A3]`, each in (0, pi).
    angles: [f64; 3],
}

impl Triangle {
    pub fn new(surface: SurfaceSpec, patch: TrianglePatch) -> Result<Self> {
        surface.validate()?;
        match (&surface, &patch) {
            (SurfaceSpec::Plane | SurfaceSpec::KPlane { .. }, TrianglePatch::Sides { .. })
            | (
                SurfaceSpec::Plane | SurfaceSpec::KPlane { .. },
                TrianglePatch::SidesAngle { .. },
            ) => Self::new_intrinsic(surface, patch),
            (SurfaceSpec::Cylinder, TrianglePatch::Cylinder { .. }) => {
                Self::new_cylinder(surface, patch)
            }
            (SurfaceSpec::Cone { .. }, TrianglePatch::Cone { .. }) => {
                Self::new_cone(surface, patch)
            }
            _ => Err(Error::InvalidTriangle(format!(
                "a {} triangle description cannot be used on the {}",
                patch_kind(&patch),
                surface.kind_name()
            ))),
        }
    }

    fn new_intrinsic(surface: SurfaceSpec, patch: TrianglePatch) -> Result<Self> {
        let (a12, a13, a23, alpha1) = match patch {
            TrianglePatch::Sides { a12, a13, a23 } => {
                for (name, a) in [("a12", a12), ("a13", a13), ("a23", a23)] {
                    if !(a > 0.0 && a.is_finite()) {
                        return Err(Error::InvalidTriangle(format!(
                            "side {name} = {a} must be positive and finite"
                        )));
                    }
                }
                if a23 >= a12 + a13 || a12 >= a13 + a23 || a13 >= a12 + a23 {
                    return Err(Error::InvalidTriangle(
                        "triangle inequality violated".into(),
                    ));
                }
                let alpha1 = law_of_cosines_angle(&surface, a12, a13, a23)?;
                (a12, a13, a23, alpha1)
            }
            TrianglePatch::SidesAngle { a12, a13, alpha1 } => {
                for (name, a) in [("a12", a12), ("a13", a13)] {
                    if !(a > 0.0 && a.is_finite()) {
                        return Err(Error::InvalidTriangle(format!(
                            "side {name} = {a} must be positive and finite"
                        )));
                    }
                }
                if !(alpha1 > 0.0 && alpha1 < PI) {
                    return Err(Error::InvalidTriangle(format!(
                        "included angle {alpha1} outside (0, pi)"
                    )));
                }
                let a23 = third_side(&surface, a12, a13, alpha1);
                (a12, a13, a23, alpha1)
            }
            _ => unreachable!(),
        };
        if let SurfaceSpec::KPlane { curvature } = surface {
            if curvature > 0.0 {
                let max_side = PI * surface.model_radius();
                for (name, a) in [("a12", a12), ("a13", a13), ("a23", a23)] {
                    if a >= max_side {
                        return Err(Error::InvalidTriangle(format!(
                            "side {name} = {a} >= pi/sqrt(K) = {max_side}: geodesic not unique"
                        )));
                    }
                }
                if a12 + a13 + a23 >= 2.0 * max_side {
                    return Err(Error::InvalidTriangle(
                        "perimeter exceeds the great-circle length".into(),
                    ));
                }
            }
        }
        let alpha2 = law_of_cosines_angle(&surface, a12, a23, a13)?;
        let alpha3 = law_of_cosines_angle(&surface, a13, a23, a12)?;
        for a in [alpha1, alpha2, alpha3] {
            if !(a > 0.0 && a < PI) {
                return Err(Error::DegenerateTriangle(format!(
                    "vertex angle {a} outside (0, pi)"
                )));
            }
        }
        let vertices = [
            ChartPoint::from_coords(&surface, 0.0, 0.0),
            ChartPoint::from_coords(&surface, a12, 0.0),
            match surface {
                SurfaceSpec::Plane => ChartPoint::Plane {
                    x: a13 * alpha1.cos(),
                    y: a13 * alpha1.sin(),
                },
                SurfaceSpec::KPlane { .. } => ChartPoint::KPlane {
                    r: a13,
                    theta: alpha1,
                },
                _ => unreachable!(),
            },
        ];
        for v in &vertices {
            check_in_chart(&surface, v)?;
        }
        Ok(Triangle {
            surface,
            patch,
            vertices,
            sides: [a12, a13, a23],
            angles: [alpha1, alpha2, alpha3],
        })
    }

    fn new_cylinder(surface: SurfaceSpec, patch: TrianglePatch) -> Result<Self> {
        let TrianglePatch::Cylinder { phi2, z2, phi3, z3 } = patch else {
            unreachable!()
        };
        validate_cylinder_patch(phi2, z2, phi3, z3)?;
        let a12 = cylinder_side_length(z2 / phi2, phi2)?;
        let a13 = cylinder_side_length(z3 / phi3, phi3)?;
        let a23 = cylinder_side_length((z2 - z3) / (phi2 - phi3), (phi2 - phi3).abs())?;
        let alpha1 = cylinder_angle_at_a1(&patch)?;
        let alpha2 = law_of_cosines_angle(&SurfaceSpec::Plane, a12, a23, a13)?;
        let alpha3 = law_of_cosines_angle(&SurfaceSpec::Plane, a13, a23, a12)?;
        let vertices = [
            ChartPoint::Cylinder { phi: 0.0, z: 0.0 },
            ChartPoint::Cylinder { phi: phi2, z: z2 },
            ChartPoint::Cylinder { phi: phi3, z: z3 },
        ];
        Ok(Triangle {
            surface,
            patch,
            vertices,
            sides: [a12, a13, a23],
            angles: [alpha1, alpha2, alpha3],
        })
    }

    fn new_cone(surface: SurfaceSpec, patch: TrianglePatch) -> Result<Self> {
        let TrianglePatch::Cone { s2, phi2, s3, phi3 } = patch else {
            unreachable!()
        };
        validate_cone_patch(&surface, s2, phi2, s3, phi3)?;
        let SurfaceSpec::Cone { apex_height } = surface else {
            unreachable!()
        };
        let slant = surface.cone_slant();
        let a12 = cone_slant_chord(s2, phi2, apex_height)?;
        let a13 = cone_slant_chord(s3, phi3, apex_height)?;
        // Chord between A2 and A3, by the same apex law of cosines.
        let a23 = {
            let dbeta = ((phi2 - phi3) / slant).abs();
            let d = s2 - s3;
            (d * d + 4.0 * s2 * s3 * (0.5 * dbeta).sin().powi(2)).sqrt()
        };
        if a23 == 0.0 || a12 == 0.0 || a13 == 0.0 {
            return Err(Error::DegenerateTriangle("coincident vertices".into()));
        }
        let alpha1 = law_of_cosines_angle(&SurfaceSpec::Plane, a12, a13, a23)?;
        let alpha2 = law_of_cosines_angle(&SurfaceSpec::Plane, a12, a23, a13)?;
        let alpha3 = law_of_cosines_angle(&SurfaceSpec::Plane, a13, a23, a12)?;
        for a in [alpha1, alpha2, alpha3] {
            if !(a > 0.0 && a < PI) {
                return Err(Error::DegenerateTriangle(format!(
                    "vertex angle {a} outside (0, pi)"
                )));
            }
        }
        let vertices = [
            ChartPoint::Cone { s: slant, phi: 0.0 },
            ChartPoint::Cone { s: s2, phi: phi2 },
            ChartPoint::Cone { s: s3, phi: phi3 },
        ];
        for v in &vertices {
            check_in_chart(&surface, v)?;
        }
        Ok(Triangle {
            surface,
            patch,
            vertices,
            sides: [a12, a13, a23],
            angles: [alpha1, alpha2, alpha3],
        })
    }

    pub fn surface(&self) -> &SurfaceSpec {
        &self.surface
    }

    pub fn patch(&self) -> &TrianglePatch {
        &self.patch
    }

    /// Vertices `[A1, A2, A3]` in the surface chart.
    pub fn vertices(&self) -> &[ChartPoint; 3] {
        &self.vertices
    }

    /// Geodesic side lengths `[a12, a13, a23]`.
    pub fn sides(&self) -> [f64; 3] {
        self.sides
    }

    /// Vertex angles `[at A1, at A2, at A3]`.
    pub fn vertex_angles(&self) -> [f64; 3] {
        self.angles
    }

    /// Included angle at `A1`.
    pub fn alpha1(&self) -> f64 {
        self.angles[0]
    }

    pub fn diameter(&self) -> f64 {
        self.sides.iter().cloned().fold(0.0, f64::max)
    }

    /// The triangle's flat form `(a12, a13, alpha at A1)` from the
    /// surface's own formulas. Defined for the plane (identity) and the
    /// developable surfaces (helix lengths / apex chords); the K-plane
    /// has no flat form.
    pub fn flat(&self) -> Result<PlanarTriangle> {
        match self.surface {
            SurfaceSpec::Plane | SurfaceSpec::Cylinder | SurfaceSpec::Cone { .. } => {
                PlanarTriangle::new(self.sides[0], self.sides[1], self.angles[0])
            }
            SurfaceSpec::KPlane { .. } => Err(Error::UnsupportedSurface {
                surface: self.surface.kind_name(),
                op: "flat",
            }),
        }
    }

    /// Unroll a cylinder or cone triangle via its Cartesian images; see
    /// the free function [`unroll`].
    pub fn unroll(&self) -> Result<PlanarTriangle> {
        unroll(&self.surface, &self.patch)
    }

    /// Cartesian images of the three vertices under the unrolling
    /// isometry (cylinder/cone) or the identity (plane).
    pub(crate) fn unrolled_vertices(&self) -> Result<[[f64; 2]; 3]> {
        match (&self.surface, &self.patch) {
            (SurfaceSpec::Plane, _) => Ok(self
                .vertices
                .map(|v| { let (x, y) = v.coords(); [x, y] })),
            (SurfaceSpec::Cylinder, TrianglePatch::Cylinder { phi2, z2, phi3, z3 }) => {
                Ok([[0.0, 0.0], [*phi2, *z2], [*phi3, *z3]])
            }
            (SurfaceSpec::Cone { .. }, TrianglePatch::Cone { .. }) => {
                let mut out = [[0.0; 2]; 3];
                for (slot, v) in out.iter_mut().zip(self.vertices.iter()) {
                    let (s, beta) = cone_unroll_point(&self.surface, v);
                    *slot = [s * beta.cos(), s * beta.sin()];
                }
                Ok(out)
            }
            _ => Err(Error::UnsupportedSurface {
                surface: self.surface.kind_name(),
                op: "unrolled_vertices",
            }),
        }
    }
}

fn patch_kind(patch: &TrianglePatch) -> &'static str {
    match patch {
        TrianglePatch::Sides { .. } => "sides",
        TrianglePatch::SidesAngle { .. } => "sides_angle",
        TrianglePatch::Cylinder { .. } => "cylinder",
        TrianglePatch::Cone { .. } => "cone",
    }
}

/// Third side from two sides and the included angle, by the surface's law
/// of cosines (stable planar form; unified form on the K-plane).
fn third_side(surface: &SurfaceSpec, a12: f64, a13: f64, alpha1: f64) -> f64 {
    match surface {
        SurfaceSpec::Plane | SurfaceSpec::Cylinder | SurfaceSpec::Cone { .. } => {
            let d = a12 - a13;
            (d * d + 4.0 * a12 * a13 * (0.5 * alpha1).sin().powi(2)).sqrt()
        }
        SurfaceSpec::KPlane { curvature } => {
            let radius = surface.model_radius();
            let (u, v) = (a12 / radius, a13 / radius);
            if *curvature > 0.0 {
                let c = u.cos() * v.cos() + u.sin() * v.sin() * alpha1.cos();
                radius * c.clamp(-1.0, 1.0).acos()
            } else {
                let c = u.cosh() * v.cosh() - u.sinh() * v.sinh() * alpha1.cos();
                radius * c.max(1.0).acosh()
            }
        }
    }
}

/// Flatten a cylinder or cone triangle into the plane through the
/// Cartesian images of its vertices.
///
/// The map is the isometric unrolling, so the planar sides equal the
/// geodesic lengths and the included angle at the image of `A1` is
/// preserved. Plane and K-plane inputs are rejected.
pub fn unroll(surface: &SurfaceSpec, patch: &TrianglePatch) -> Result<PlanarTriangle> {
    surface.validate()?;
    let images: [[f64; 2]; 3] = match (surface, patch) {
        (SurfaceSpec::Cylinder, TrianglePatch::Cylinder { phi2, z2, phi3, z3 }) => {
            validate_cylinder_patch(*phi2, *z2, *phi3, *z3)?;
            [[0.0, 0.0], [*phi2, *z2], [*phi3, *z3]]
        }
        (SurfaceSpec::Cone { .. }, TrianglePatch::Cone { s2, phi2, s3, phi3 }) => {
            validate_cone_patch(surface, *s2, *phi2, *s3, *phi3)?;
            let slant = surface.cone_slant();
            let (b2, b3) = (phi2 / slant, phi3 / slant);
            [
                [slant, 0.0],
                [s2 * b2.cos(), s2 * b2.sin()],
                [s3 * b3.cos(), s3 * b3.sin()],
            ]
        }
        (SurfaceSpec::Plane | SurfaceSpec::KPlane { .. }, _) => {
            return Err(Error::UnsupportedSurface {
                surface: surface.kind_name(),
                op: "unroll",
            });
        }
        _ => {
            return Err(Error::InvalidTriangle(format!(
                "a {} triangle description cannot be used on the {}",
                patch_kind(patch),
                surface.kind_name()
            )));
        }
    };
    let v12 = [images[1][0] - images[0][0], images[1][1] - images[0][1]];
    let v13 = [images[2][0] - images[0][0], images[2][1] - images[0][1]];
    let a12 = v12[0].hypot(v12[1]);
    let a13 = v13[0].hypot(v13[1]);
    let cross = v12[0] * v13[1] - v12[1] * v13[0];
    let dot = v12[0] * v13[0] + v12[1] * v13[1];
    let alpha1 = cross.abs().atan2(dot);
    if alpha1 <= 0.0 || alpha1 >= PI {
        return Err(Error::DegenerateTriangle(
            "unrolled vertices are collinear".into(),
        ));
    }
    PlanarTriangle::new(a12, a13, alpha1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

    #[test]
    fn cylinder_side_length_examples() {
        assert!((cylinder_side_length(0.0, FRAC_PI_2).unwrap() - FRAC_PI_2).abs() < 1e-15);
        assert!((cylinder_side_length(1.0, PI).unwrap() - PI * 2f64.sqrt()).abs() < 1e-15);
        // b = z/phi with z = 2, phi = 1 -> sqrt(5)
        assert!((cylinder_side_length(2.0, 1.0).unwrap() - 5f64.sqrt()).abs() < 1e-15);
        assert!(cylinder_side_length(1.0, 0.0).is_err());
        assert!(cylinder_side_length(1.0, -0.5).is_err());
    }

    #[test]
    fn cylinder_angle_example() {
        // z2 = 1, phi2 = 1, z3 = 0, phi3 = 2 -> alpha = pi/4.
        let patch = TrianglePatch::Cylinder { phi2: 1.0, z2: 1.0, phi3: 2.0, z3: 0.0 };
        let a = cylinder_angle_at_a1(&patch).unwrap();
        assert!((a - FRAC_PI_4).abs() < 1e-14, "{a}");
    }

    #[test]
    fn cylinder_angle_rejects_equal_azimuths_and_collinear() {
        let patch = TrianglePatch::Cylinder { phi2: 1.0, z2: 0.0, phi3: 1.0, z3: 0.0 };
        assert!(cylinder_angle_at_a1(&patch).is_err());
        // Flat strip, collinear: b12 = b13 = 0 -> alpha = 0 -> degenerate.
        let patch = TrianglePatch::Cylinder { phi2: 1.0, z2: 0.0, phi3: 2.0, z3: 0.0 };
        assert!(matches!(
            cylinder_angle_at_a1(&patch),
            Err(Error::DegenerateTriangle(_))
        ));
    }

    #[test]
    fn cone_unrolled_angle_examples() {
        let h = 3f64.sqrt();
        assert!((cone_unrolled_angle(2.0 * PI, h).unwrap() - PI).abs() < 1e-15);
        assert_eq!(cone_unrolled_angle(0.0, 1.0).unwrap(), 0.0);
        assert!((cone_unrolled_angle(PI, 1.0).unwrap() - PI / 2f64.sqrt()).abs() < 1e-15);
        assert!(cone_unrolled_angle(1.0, 0.0).is_err());
    }

    #[test]
    fn cone_slant_chord_examples() {
        let h = 3f64.sqrt();
        // Coincident unrolled points.
        assert_eq!(cone_slant_chord(2.0, 0.0, h).unwrap(), 0.0);
        // H = sqrt(3), s = 2, phi = 2 pi / 3 -> chord 2.
        let c = cone_slant_chord(2.0, 2.0 * PI / 3.0, h).unwrap();
        assert!((c - 2.0).abs() < 1e-14, "{c}");
        assert_eq!(cone_slant_chord(2f64.sqrt(), 0.0, 1.0).unwrap(), 0.0);
        assert!(cone_slant_chord(3.0, 0.1, 1.0).is_err());
    }

    #[test]
    fn unroll_flat_strip() {
        let s = SurfaceSpec::Cylinder;
        let patch = TrianglePatch::Cylinder { phi2: 1.0, z2: 1e-9, phi3: 2.0, z3: -1e-9 };
        let flat = unroll(&s, &patch).unwrap();
        assert!((flat.a12 - 1.0).abs() < 1e-12);
        assert!((flat.a13 - 2.0).abs() < 1e-12);
    }

    #[test]
    fn unroll_cylinder_helix_side() {
        // b12 = 1, phi2 = 1 -> unrolled side sqrt(2).
        let s = SurfaceSpec::Cylinder;
        let patch = TrianglePatch::Cylinder { phi2: 1.0, z2: 1.0, phi3: 2.0, z3: 0.0 };
        let flat = unroll(&s, &patch).unwrap();
        assert!((flat.a12 - 2f64.sqrt()).abs() < 1e-15);
        assert!((flat.alpha1 - FRAC_PI_4).abs() < 1e-14);
    }

    #[test]
    fn unroll_rejects_plane_and_kplane() {
        let patch = TrianglePatch::Sides { a12: 1.0, a13: 1.0, a23: 1.0 };
        assert!(matches!(
            unroll(&SurfaceSpec::Plane, &patch),
            Err(Error::UnsupportedSurface { .. })
        ));
        assert!(matches!(
            unroll(&SurfaceSpec::KPlane { curvature: 1.0 }, &patch),
            Err(Error::UnsupportedSurface { .. })
        ));
    }

    #[test]
    fn unroll_matches_surface_formulas() {
        // Cone sides from the chord formula agree with the unrolled images.
        let h = 3f64.sqrt();
        let surface = SurfaceSpec::Cone { apex_height: h };
        let patch = TrianglePatch::Cone { s2: 2.0, phi2: 2.0 * PI / 3.0, s3: 1.5, phi3: 1.1 };
        let flat = unroll(&surface, &patch).unwrap();
        let a12 = cone_slant_chord(2.0, 2.0 * PI / 3.0, h).unwrap();
        let a13 = cone_slant_chord(1.5, 1.1, h).unwrap();
        assert!((flat.a12 - a12).abs() <= 1e-12 * a12);
        assert!((flat.a13 - a13).abs() <= 1e-12 * a13);
        let tri = Triangle::new(surface, patch).unwrap();
        assert!((tri.alpha1() - flat.alpha1).abs() < 1e-12);
    }

    #[test]
    fn intrinsic_triangle_resolution() {
        let t = Triangle::new(
            SurfaceSpec::Plane,
            TrianglePatch::Sides { a12: 1.0, a13: 1.0, a23: 1.0 },
        )
        .unwrap();
        assert!((t.alpha1() - PI / 3.0).abs() < 1e-15);
        let angles = t.vertex_angles();
        assert!((angles[1] - PI / 3.0).abs() < 1e-15);
        assert!((angles[2] - PI / 3.0).abs() < 1e-15);

        let t = Triangle::new(
            SurfaceSpec::Plane,
            TrianglePatch::SidesAngle { a12: 3.0, a13: 4.0, alpha1: FRAC_PI_2 },
        )
        .unwrap();
        assert!((t.sides()[2] - 5.0).abs() < 1e-15);
    }

    #[test]
    fn triangle_inequality_and_sphere_bounds() {
        assert!(Triangle::new(
            SurfaceSpec::Plane,
            TrianglePatch::Sides { a12: 1.0, a13: 1.0, a23: 2.5 },
        )
        .is_err());
        // Sphere K = 1: sides must stay below pi.
        assert!(Triangle::new(
            SurfaceSpec::KPlane { curvature: 1.0 },
            TrianglePatch::Sides { a12: 3.2, a13: 3.2, a23: 1.0 },
        )
        .is_err());
        assert!(Triangle::new(
            SurfaceSpec::KPlane { curvature: 0.0 },
            TrianglePatch::Sides { a12: 1.0, a13: 1.0, a23: 1.0 },
        )
        .is_err());
    }

    #[test]
    fn kplane_triangle_angles_follow_curvature() {
        // Same sides: spherical angles exceed planar, hyperbolic fall below.
        let sides = TrianglePatch::Sides { a12: 1.0, a13: 1.0, a23: 1.0 };
        let sph = Triangle::new(SurfaceSpec::KPlane { curvature: 1.0 }, sides).unwrap();
        let hyp = Triangle::new(SurfaceSpec::KPlane { curvature: -1.0 }, sides).unwrap();
        assert!(sph.alpha1() > PI / 3.0);
        assert!(hyp.alpha1() < PI / 3.0);
    }

    #[test]
    fn patch_surface_mismatch_is_rejected() {
        assert!(Triangle::new(
            SurfaceSpec::Cylinder,
            TrianglePatch::Sides { a12: 1.0, a13: 1.0, a23: 1.0 },
        )
        .is_err());
        assert!(Triangle::new(
            SurfaceSpec::Plane,
            TrianglePatch::Cylinder { phi2: 1.0, z2: 0.0, phi3: 2.0, z3: 1.0 },
        )
        .is_err());
    }
}
