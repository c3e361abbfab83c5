//! Surface charts, geodesic distances, tangent frames, and exponential
//! maps.
//!
//! Chart conventions (one 2-coordinate chart per surface):
//!
//! - `Plane`: Cartesian `(x, y)`.
//! - `KPlane`: geodesic polar `(r, theta)` around a base pole; `r` is the
//!   geodesic distance from the pole, `theta` the bearing. Internally
//!   points are lifted to the embedded model (sphere of radius `1/sqrt(K)`
//!   or hyperboloid sheet for `K < 0`) and distances come from chord
//!   lengths, which stay accurate in the flat limit `K -> 0`.
//! - `Cylinder` (unit radius): `(phi, z)` with `phi` restricted to the
//!   single sheet `[0, pi)`. The chart metric is Euclidean, so the chart
//!   is its own unrolling.
//! - `Cone` (unit base radius, apex height `H`): `(s, phi)` where `s` is
//!   the slant distance from the apex along the generator at base azimuth
//!   `phi`. Unrolling along the `phi = 0` generator maps `(s, phi)` to
//!   planar polar `(s, phi / sqrt(1 + H^2))`.

use serde::{Deserialize, Serialize};

use super::clamp_unit;
use crate::error::{Error, Result};

/// Which constant-curvature surface is in play, with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(
    tag = "kind",
    rename_all = "lowercase",
    try_from = "SurfaceRepr"
)]
pub enum SurfaceSpec {
    /// The Euclidean plane (the K = 0 case, represented distinctly).
    Plane,
    /// Sphere (K > 0) or hyperbolic plane (K < 0) of curvature K.
    KPlane {
        #[serde(rename = "K")]
        curvature: f64,
    },
    /// Right circular cylinder of unit radius.
    Cylinder,
    /// Right circular cone with unit base radius and apex height H.
    Cone {
        #[serde(rename = "H")]
        apex_height: f64,
    },
}

impl SurfaceSpec {
    pub fn validate(&self) -> Result<()> {
        match *self {
            SurfaceSpec::Plane | SurfaceSpec::Cylinder => Ok(()),
            SurfaceSpec::KPlane { curvature } => {
                if curvature == 0.0 || !curvature.is_finite() {
                    Err(Error::InvalidSurface(format!(
                        "kplane requires finite K != 0, got {curvature}"
                    )))
                } else {
                    Ok(())
                }
            }
            SurfaceSpec::Cone { apex_height } => {
                if apex_height > 0.0 && apex_height.is_finite() {
                    Ok(())
                } else {
                    Err(Error::InvalidSurface(format!(
                        "cone requires finite H > 0, got {apex_height}"
                    )))
                }
            }
        }
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            SurfaceSpec::Plane => "plane",
            SurfaceSpec::KPlane { .. } => "kplane",
            SurfaceSpec::Cylinder => "cylinder",
            SurfaceSpec::Cone { .. } => "cone",
        }
    }

    /// Radius of the model sphere/hyperboloid, `1 / sqrt(|K|)`.
    pub(crate) fn model_radius(&self) -> f64 {
        match *self {
            SurfaceSpec::KPlane { curvature } => curvature.abs().sqrt().recip(),
            _ => f64::NAN,
        }
    }

    /// Slant length of the cone, `sqrt(1 + H^2)`; also the distance from
    /// any base-circle point to the apex.
    pub(crate) fn cone_slant(&self) -> f64 {
        match *self {
            SurfaceSpec::Cone { apex_height } => apex_height.hypot(1.0),
            _ => f64::NAN,
        }
    }

    /// Full angle of the unrolled cone sector, `2 pi / sqrt(1 + H^2)`.
    pub fn cone_sector_angle(&self) -> Result<f64> {
        match *self {
            SurfaceSpec::Cone { .. } => Ok(std::f64::consts::TAU / self.cone_slant()),
            _ => Err(Error::UnsupportedSurface {
                surface: self.kind_name(),
                op: "cone_sector_angle",
            }),
        }
    }
}

/// A point in the working chart of one surface.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ChartPoint {
    Plane { x: f64, y: f64 },
    KPlane { r: f64, theta: f64 },
    Cylinder { phi: f64, z: f64 },
    Cone { s: f64, phi: f64 },
}

impl ChartPoint {
    /// The raw coordinate pair, in chart order.
    pub fn coords(&self) -> (f64, f64) {
        match *self {
            ChartPoint::Plane { x, y } => (x, y),
            ChartPoint::KPlane { r, theta } => (r, theta),
            ChartPoint::Cylinder { phi, z } => (phi, z),
            ChartPoint::Cone { s, phi } => (s, phi),
        }
    }

    pub fn from_coords(surface: &SurfaceSpec, u: f64, v: f64) -> ChartPoint {
        match surface {
            SurfaceSpec::Plane => ChartPoint::Plane { x: u, y: v },
            SurfaceSpec::KPlane { .. } => ChartPoint::KPlane { r: u, theta: v },
            SurfaceSpec::Cylinder => ChartPoint::Cylinder { phi: u, z: v },
            SurfaceSpec::Cone { .. } => ChartPoint::Cone { s: u, phi: v },
        }
    }

    fn kind_name(&self) -> &'static str {
        match self {
            ChartPoint::Plane { .. } => "plane",
            ChartPoint::KPlane { .. } => "kplane",
            ChartPoint::Cylinder { .. } => "cylinder",
            ChartPoint::Cone { .. } => "cone",
        }
    }
}

/// Check that `p` belongs to the chart of `surface`.
pub(crate) fn check_in_chart(surface: &SurfaceSpec, p: &ChartPoint) -> Result<()> {
    surface.validate()?;
    let (u, v) = p.coords();
    if !u.is_finite() || !v.is_finite() {
        return Err(Error::OutsideChart(format!(
            "non-finite coordinates ({u}, {v})"
        )));
    }
    match (surface, p) {
        (SurfaceSpec::Plane, ChartPoint::Plane { .. }) => Ok(()),
        (SurfaceSpec::KPlane { curvature }, ChartPoint::KPlane { r, .. }) => {
            if *r < 0.0 {
                return Err(Error::OutsideChart(format!("polar radius {r} < 0")));
            }
            if *curvature > 0.0 {
                let max_r = std::f64::consts::PI * surface.model_radius();
                if *r > max_r {
                    return Err(Error::OutsideChart(format!(
                        "polar radius {r} beyond the antipode at {max_r}"
                    )));
                }
            }
            Ok(())
        }
        (SurfaceSpec::Cylinder, ChartPoint::Cylinder { phi, .. }) => {
            if *phi >= 0.0 && *phi < std::f64::consts::PI {
                Ok(())
            } else {
                Err(Error::OutsideChart(format!(
                    "cylinder azimuth {phi} outside the working sheet [0, pi)"
                )))
            }
        }
        (SurfaceSpec::Cone { .. }, ChartPoint::Cone { s, phi }) => {
            let slant = surface.cone_slant();
            if *s <= 0.0 || *s > slant * (1.0 + 1e-12) {
                return Err(Error::OutsideChart(format!(
                    "slant distance {s} outside (0, {slant}]"
                )));
            }
            if *phi < 0.0 || *phi >= std::f64::consts::TAU {
                return Err(Error::OutsideChart(format!(
                    "cone azimuth {phi} outside [0, 2 pi)"
                )));
            }
            Ok(())
        }
        _ => Err(Error::ChartMismatch {
            expected: surface.kind_name(),
            got: p.kind_name(),
        }),
    }
}

/// Length of the minimizing geodesic between two chart points.
///
/// Symmetric in its two point arguments and zero exactly when they
/// coincide. On the sphere an antipodal pair is rejected because the
/// minimizing geodesic is not unique; on the cone, pairs whose unrolled
/// azimuths differ by more than `pi` are rejected because the minimizing
/// geodesic may wrap around the apex.
pub fn geodesic_distance(surface: &SurfaceSpec, p: &ChartPoint, q: &ChartPoint) -> Result<f64> {
    check_in_chart(surface, p)?;
    check_in_chart(surface, q)?;
    match (surface, p, q) {
        (SurfaceSpec::Plane, ChartPoint::Plane { x: x1, y: y1 }, ChartPoint::Plane { x: x2, y: y2 }) => {
            Ok((x1 - x2).hypot(y1 - y2))
        }
        (SurfaceSpec::KPlane { curvature }, ChartPoint::KPlane { .. }, ChartPoint::KPlane { .. }) => {
            let radius = surface.model_radius();
            let pe = embed(surface, p);
            let qe = embed(surface, q);
            if *curvature > 0.0 {
                // Chord form: accurate over the whole sphere and in the
                // flat limit, unlike acos of the dot product.
                let chord = (pe - qe).norm();
                let anti = (pe + qe).norm();
                if anti < 1e-12 * radius {
                    return Err(Error::AntipodalPoints);
                }
                Ok(2.0 * radius * chord.atan2(anti))
            } else {
                let d = pe - qe;
                let m = d.minkowski_dot(&d).max(0.0);
                Ok(2.0 * radius * (m.sqrt() / (2.0 * radius)).asinh())
            }
        }
        (
            SurfaceSpec::Cylinder,
            ChartPoint::Cylinder { phi: phi1, z: z1 },
            ChartPoint::Cylinder { phi: phi2, z: z2 },
        ) => Ok((phi1 - phi2).hypot(z1 - z2)),
        (SurfaceSpec::Cone { .. }, ChartPoint::Cone { .. }, ChartPoint::Cone { .. }) => {
            let a = cone_unroll_point(surface, p);
            let b = cone_unroll_point(surface, q);
            let dbeta = (a.1 - b.1).abs();
            if dbeta > std::f64::consts::PI {
                return Err(Error::OutsideChart(format!(
                    "unrolled azimuth gap {dbeta} > pi: geodesic may wrap the apex"
                )));
            }
            // Stable law of cosines: (s1-s2)^2 + 4 s1 s2 sin^2(dbeta/2).
            let ds = a.0 - b.0;
            let cross = 4.0 * a.0 * b.0 * (0.5 * dbeta).sin().powi(2);
            Ok((ds * ds + cross).sqrt())
        }
        _ => unreachable!("chart checks enforce matching kinds"),
    }
}

// ---------------------------------------------------------------------
// Embedded model for the K-plane.
// ---------------------------------------------------------------------

#[derive(Debug, Clone, Copy)]
pub(crate) struct Vec3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Vec3 {
    pub(crate) fn new(x: f64, y: f64, z: f64) -> Self {
        Vec3 { x, y, z }
    }

    pub(crate) fn dot(&self, o: &Vec3) -> f64 {
        self.x * o.x + self.y * o.y + self.z * o.z
    }

    /// Minkowski product with signature (+, +, -); `z` is the timelike
    /// coordinate of the hyperboloid model.
    pub(crate) fn minkowski_dot(&self, o: &Vec3) -> f64 {
        self.x * o.x + self.y * o.y - self.z * o.z
    }

    pub(crate) fn norm(&self) -> f64 {
        self.dot(self).sqrt()
    }

    pub(crate) fn scale(&self, f: f64) -> Vec3 {
        Vec3::new(self.x * f, self.y * f, self.z * f)
    }
}

impl std::ops::Sub for Vec3 {
    type Output = Vec3;
    fn sub(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl std::ops::Add for Vec3 {
    type Output = Vec3;
    fn add(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

/// Lift a K-plane polar point onto the model sphere/hyperboloid.
pub(crate) fn embed(surface: &SurfaceSpec, p: &ChartPoint) -> Vec3 {
    let (SurfaceSpec::KPlane { curvature }, ChartPoint::KPlane { r, theta }) = (surface, p) else {
        panic!("embed is only defined for kplane points");
    };
    let radius = surface.model_radius();
    let a = r / radius;
    if *curvature > 0.0 {
        Vec3::new(
            radius * a.sin() * theta.cos(),
            radius * a.sin() * theta.sin(),
            radius * a.cos(),
        )
    } else {
        Vec3::new(
            radius * a.sinh() * theta.cos(),
            radius * a.sinh() * theta.sin(),
            radius * a.cosh(),
        )
    }
}

/// Inverse of [`embed`]: back to polar chart coordinates.
pub(crate) fn unembed(surface: &SurfaceSpec, v: &Vec3) -> ChartPoint {
    let SurfaceSpec::KPlane { curvature } = surface else {
        panic!("unembed is only defined for the kplane");
    };
    let radius = surface.model_radius();
    let planar = v.x.hypot(v.y);
    let theta = if planar == 0.0 { 0.0 } else { v.y.atan2(v.x) };
    let r = if *curvature > 0.0 {
        radius * planar.atan2(v.z)
    } else {
        radius * (planar / radius).asinh()
    };
    ChartPoint::KPlane { r, theta }
}

/// Orthonormal tangent frame at an embedded K-plane point: `e1` points
/// along increasing polar radius, `e2` along increasing bearing. At the
/// pole the frame degenerates to the chart axes.
fn kplane_frame(surface: &SurfaceSpec, p: &ChartPoint) -> (Vec3, Vec3) {
    let (SurfaceSpec::KPlane { curvature }, ChartPoint::KPlane { r, theta }) = (surface, p) else {
        panic!("kplane_frame is only defined for kplane points");
    };
    let radius = surface.model_radius();
    let a = r / radius;
    if *r < 1e-14 * radius {
        return (Vec3::new(1.0, 0.0, 0.0), Vec3::new(0.0, 1.0, 0.0));
    }
    let (st, ct) = theta.sin_cos();
    if *curvature > 0.0 {
        (
            Vec3::new(a.cos() * ct, a.cos() * st, -a.sin()),
            Vec3::new(-st, ct, 0.0),
        )
    } else {
        (
            Vec3::new(a.cosh() * ct, a.cosh() * st, a.sinh()),
            Vec3::new(-st, ct, 0.0),
        )
    }
}

/// Cartesian image of a cone chart point in the unrolled sector, as polar
/// `(s, beta)` with the apex at the origin and the cut along `beta = 0`.
pub(crate) fn cone_unroll_point(surface: &SurfaceSpec, p: &ChartPoint) -> (f64, f64) {
    let ChartPoint::Cone { s, phi } = p else {
        panic!("cone_unroll_point is only defined for cone points");
    };
    (*s, phi / surface.cone_slant())
}

// ---------------------------------------------------------------------
// Tangent directions and the exponential map.
// ---------------------------------------------------------------------

/// Components, in the orthonormal chart frame at `from`, of the initial
/// unit tangent of the minimizing geodesic toward `to`.
///
/// Frames: plane `(x, y)` axes; cylinder `(phi, z)` axes; cone (radial
/// away from apex, circumferential); K-plane (increasing polar radius,
/// increasing bearing).
pub(crate) fn tangent_toward(
    surface: &SurfaceSpec,
    from: &ChartPoint,
    to: &ChartPoint,
) -> Result<[f64; 2]> {
    check_in_chart(surface, from)?;
    check_in_chart(surface, to)?;
    match surface {
        SurfaceSpec::Plane | SurfaceSpec::Cylinder => {
            let (u1, v1) = from.coords();
            let (u2, v2) = to.coords();
            let (du, dv) = (u2 - u1, v2 - v1);
            let n = du.hypot(dv);
            if n == 0.0 {
                return Err(Error::CoincidentPoints);
            }
            Ok([du / n, dv / n])
        }
        SurfaceSpec::Cone { .. } => {
            let (s1, b1) = cone_unroll_point(surface, from);
            let (s2, b2) = cone_unroll_point(surface, to);
            let (c1, s1s) = (b1.cos(), b1.sin());
            let p1 = (s1 * c1, s1 * s1s);
            let p2 = (s2 * b2.cos(), s2 * b2.sin());
            let (dx, dy) = (p2.0 - p1.0, p2.1 - p1.1);
            let n = dx.hypot(dy);
            if n == 0.0 {
                return Err(Error::CoincidentPoints);
            }
            // Express in the (radial, circumferential) frame at `from`.
            let er = (c1, s1s);
            let et = (-s1s, c1);
            Ok([
                (dx * er.0 + dy * er.1) / n,
                (dx * et.0 + dy * et.1) / n,
            ])
        }
        SurfaceSpec::KPlane { curvature } => {
            let pe = embed(surface, from);
            let qe = embed(surface, to);
            let rr = surface.model_radius() * surface.model_radius();
            let w = if *curvature > 0.0 {
                let coef = pe.dot(&qe) / rr;
                qe - pe.scale(coef)
            } else {
                let coef = pe.minkowski_dot(&qe) / (-rr);
                qe - pe.scale(coef)
            };
            let n2 = if *curvature > 0.0 {
                w.dot(&w)
            } else {
                w.minkowski_dot(&w)
            };
            if n2 <= 0.0 || n2.sqrt() < 1e-15 * surface.model_radius() {
                // Either coincident or (sphere) antipodal: no unique direction.
                let d = geodesic_distance(surface, from, to)?;
                if d == 0.0 {
                    return Err(Error::CoincidentPoints);
                }
                return Err(Error::AntipodalPoints);
            }
            let w = w.scale(n2.sqrt().recip());
            let (e1, e2) = kplane_frame(surface, from);
            if *curvature > 0.0 {
                Ok([w.dot(&e1), w.dot(&e2)])
            } else {
                Ok([w.minkowski_dot(&e1), w.minkowski_dot(&e2)])
            }
        }
    }
}

/// Exponential map: walk `dist` along the geodesic leaving `from` in the
/// frame direction `dir` (need not be normalized).
pub(crate) fn shoot(
    surface: &SurfaceSpec,
    from: &ChartPoint,
    dir: [f64; 2],
    dist: f64,
) -> Result<ChartPoint> {
    check_in_chart(surface, from)?;
    let n = dir[0].hypot(dir[1]);
    if n == 0.0 || dist == 0.0 {
        return Ok(*from);
    }
    let dir = [dir[0] / n, dir[1] / n];
    match surface {
        SurfaceSpec::Plane | SurfaceSpec::Cylinder => {
            let (u, v) = from.coords();
            let p = ChartPoint::from_coords(surface, u + dist * dir[0], v + dist * dir[1]);
            check_in_chart(surface, &p)?;
            Ok(p)
        }
        SurfaceSpec::Cone { .. } => {
            let (s, b) = cone_unroll_point(surface, from);
            let (cb, sb) = (b.cos(), b.sin());
            let global = [
                dir[0] * cb - dir[1] * sb,
                dir[0] * sb + dir[1] * cb,
            ];
            let x = s * cb + dist * global[0];
            let y = s * sb + dist * global[1];
            let s_new = x.hypot(y);
            let beta = y.atan2(x);
            if beta < 0.0 {
                return Err(Error::OutsideChart(format!(
                    "geodesic left the unrolled sector (beta = {beta})"
                )));
            }
            let p = ChartPoint::Cone {
                s: s_new,
                phi: beta * surface.cone_slant(),
            };
            check_in_chart(surface, &p)?;
            Ok(p)
        }
        SurfaceSpec::KPlane { curvature } => {
            let pe = embed(surface, from);
            let (e1, e2) = kplane_frame(surface, from);
            let v = e1.scale(dir[0]) + e2.scale(dir[1]);
            let radius = surface.model_radius();
            let a = dist / radius;
            let q = if *curvature > 0.0 {
                pe.scale(a.cos()) + v.scale(radius * a.sin())
            } else {
                pe.scale(a.cosh()) + v.scale(radius * a.sinh())
            };
            let p = unembed(surface, &q);
            check_in_chart(surface, &p)?;
            Ok(p)
        }
    }
}

/// Interior angle at vertex `b` of the triangle `a b c`, from side
/// lengths via the surface's law of cosines.
pub(crate) fn law_of_cosines_angle(
    surface: &SurfaceSpec,
    ab: f64,
    bc: f64,
    ac: f64,
) -> Result<f64> {
    let cos_angle = match surface {
        SurfaceSpec::Plane | SurfaceSpec::Cylinder | SurfaceSpec::Cone { .. } => {
            (ab * ab + bc * bc - ac * ac) / (2.0 * ab * bc)
        }
        SurfaceSpec::KPlane { curvature } => {
            let radius = surface.model_radius();
            if *curvature > 0.0 {
                let (sab, sbc) = ((ab / radius).sin(), (bc / radius).sin());
                let (cab, cbc, cac) =
                    ((ab / radius).cos(), (bc / radius).cos(), (ac / radius).cos());
                (cac - cab * cbc) / (sab * sbc)
            } else {
                let (sab, sbc) = ((ab / radius).sinh(), (bc / radius).sinh());
                let (cab, cbc, cac) = (
                    (ab / radius).cosh(),
                    (bc / radius).cosh(),
                    (ac / radius).cosh(),
                );
                (cab * cbc - cac) / (sab * sbc)
            }
        }
    };
    let clamped = clamp_unit(cos_angle).ok_or_else(|| {
        Error::DegenerateTriangle(format!(
            "law of cosines produced cos = {cos_angle}, beyond the clamp band"
        ))
    })?;
    Ok(clamped.acos())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, PI};

    #[test]
    fn plane_distance_is_euclidean() {
        let s = SurfaceSpec::Plane;
        let p = ChartPoint::Plane { x: 0.0, y: 0.0 };
        let q = ChartPoint::Plane { x: 3.0, y: 4.0 };
        assert_eq!(geodesic_distance(&s, &p, &q).unwrap(), 5.0);
    }

    #[test]
    fn unit_sphere_quarter_arc() {
        let s = SurfaceSpec::KPlane { curvature: 1.0 };
        let p = ChartPoint::KPlane { r: 0.0, theta: 0.0 };
        let q = ChartPoint::KPlane { r: FRAC_PI_2, theta: 0.0 };
        let d = geodesic_distance(&s, &p, &q).unwrap();
        assert!((d - FRAC_PI_2).abs() < 1e-14);
    }

    #[test]
    fn cylinder_helix_distance() {
        // A1 = (phi=0, z=0) to (phi=pi/2, z=pi/2): helix step b = 1,
        // length sqrt(1 + b^2) * phi = (pi/2) sqrt(2).
        let s = SurfaceSpec::Cylinder;
        let p = ChartPoint::Cylinder { phi: 0.0, z: 0.0 };
        let q = ChartPoint::Cylinder { phi: FRAC_PI_2, z: FRAC_PI_2 };
        let d = geodesic_distance(&s, &p, &q).unwrap();
        assert!((d - FRAC_PI_2 * 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn distance_is_symmetric_and_zero_on_equal_points() {
        let cases = [
            (
                SurfaceSpec::KPlane { curvature: 0.7 },
                ChartPoint::KPlane { r: 0.9, theta: 0.4 },
                ChartPoint::KPlane { r: 1.2, theta: 2.0 },
            ),
            (
                SurfaceSpec::KPlane { curvature: -1.3 },
                ChartPoint::KPlane { r: 0.9, theta: 0.4 },
                ChartPoint::KPlane { r: 1.2, theta: 2.0 },
            ),
            (
                SurfaceSpec::Cone { apex_height: 2.0 },
                ChartPoint::Cone { s: 1.0, phi: 0.3 },
                ChartPoint::Cone { s: 2.0, phi: 1.9 },
            ),
        ];
        for (s, p, q) in cases {
            let d1 = geodesic_distance(&s, &p, &q).unwrap();
            let d2 = geodesic_distance(&s, &q, &p).unwrap();
            assert_eq!(d1, d2);
            assert_eq!(geodesic_distance(&s, &p, &p).unwrap(), 0.0);
            assert!(d1 > 0.0);
        }
    }

    #[test]
    fn antipodal_sphere_points_are_ambiguous() {
        let s = SurfaceSpec::KPlane { curvature: 1.0 };
        let p = ChartPoint::KPlane { r: 0.0, theta: 0.0 };
        let q = ChartPoint::KPlane { r: PI, theta: 0.0 };
        assert!(matches!(
            geodesic_distance(&s, &p, &q),
            Err(Error::AntipodalPoints)
        ));
    }

    #[test]
    fn chart_mismatch_is_rejected() {
        let s = SurfaceSpec::Plane;
        let p = ChartPoint::Plane { x: 0.0, y: 0.0 };
        let q = ChartPoint::Cylinder { phi: 0.1, z: 0.0 };
        assert!(matches!(
            geodesic_distance(&s, &p, &q),
            Err(Error::ChartMismatch { .. })
        ));
    }

    #[test]
    fn out_of_chart_points_are_rejected() {
        let cyl = SurfaceSpec::Cylinder;
        let bad = ChartPoint::Cylinder { phi: 3.5, z: 0.0 };
        assert!(matches!(
            check_in_chart(&cyl, &bad),
            Err(Error::OutsideChart(_))
        ));
        let cone = SurfaceSpec::Cone { apex_height: 1.0 };
        let bad = ChartPoint::Cone { s: 2.0, phi: 0.0 };
        assert!(check_in_chart(&cone, &bad).is_err());
    }

    #[test]
    fn flat_limit_matches_plane() {
        // |K| = 1e-10 distances agree with planar polar distances to 1e-6
        // relative on unit-scale inputs.
        let p = ChartPoint::KPlane { r: 0.8, theta: 0.3 };
        let q = ChartPoint::KPlane { r: 1.1, theta: 1.4 };
        let planar = {
            let (x1, y1) = (0.8 * 0.3f64.cos(), 0.8 * 0.3f64.sin());
            let (x2, y2) = (1.1 * 1.4f64.cos(), 1.1 * 1.4f64.sin());
            (x1 - x2).hypot(y1 - y2)
        };
        for k in [1e-10, -1e-10] {
            let s = SurfaceSpec::KPlane { curvature: k };
            let d = geodesic_distance(&s, &p, &q).unwrap();
            assert!(
                (d - planar).abs() / planar < 1e-6,
                "K = {k}: {d} vs planar {planar}"
            );
        }
    }

    #[test]
    fn tangent_plane_examples() {
        let s = SurfaceSpec::Plane;
        let o = ChartPoint::Plane { x: 0.0, y: 0.0 };
        let t = tangent_toward(&s, &o, &ChartPoint::Plane { x: 1.0, y: 0.0 }).unwrap();
        assert_eq!(t, [1.0, 0.0]);
        let t = tangent_toward(&s, &o, &ChartPoint::Plane { x: 1.0, y: 1.0 }).unwrap();
        assert!((t[0] - 1.0 / 2f64.sqrt()).abs() < 1e-15);
        assert!((t[1] - 1.0 / 2f64.sqrt()).abs() < 1e-15);
        assert!(matches!(
            tangent_toward(&s, &o, &o),
            Err(Error::CoincidentPoints)
        ));
    }

    #[test]
    fn shoot_inverts_tangent() {
        // exp_p(d * tangent(p -> q)) = q on every surface.
        let cases = [
            (
                SurfaceSpec::KPlane { curvature: 1.4 },
                ChartPoint::KPlane { r: 0.6, theta: 0.9 },
                ChartPoint::KPlane { r: 1.0, theta: 2.2 },
            ),
            (
                SurfaceSpec::KPlane { curvature: -0.6 },
                ChartPoint::KPlane { r: 0.6, theta: 0.9 },
                ChartPoint::KPlane { r: 1.3, theta: 2.2 },
            ),
            (
                SurfaceSpec::Cone { apex_height: 1.5 },
                ChartPoint::Cone { s: 1.2, phi: 0.4 },
                ChartPoint::Cone { s: 1.6, phi: 2.0 },
            ),
            (
                SurfaceSpec::Cylinder,
                ChartPoint::Cylinder { phi: 0.5, z: -0.4 },
                ChartPoint::Cylinder { phi: 2.0, z: 0.8 },
            ),
        ];
        for (s, p, q) in cases {
            let d = geodesic_distance(&s, &p, &q).unwrap();
            let dir = tangent_toward(&s, &p, &q).unwrap();
            let hit = shoot(&s, &p, dir, d).unwrap();
            let miss = geodesic_distance(&s, &hit, &q).unwrap();
            assert!(miss < 1e-12, "{s:?}: missed by {miss}");
        }
    }
}
