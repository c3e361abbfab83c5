//! The epsilon construction: a one-parameter family of angle fans at a
//! virtual interior point near vertex `A1`, whose induced weights tend,
//! as epsilon goes to zero, to a triple realizing the absorbed equality
//! at that vertex (the degenerate two-arc tree `{A2 A1, A1 A3}`).
//!
//! The construction fixes `angle A1 A2 A0 = |eps|`,
//! `angle A2 A0 A3 = alpha + 2 eps`, and `angle A0 A3 A1 = k |eps|`,
//! with `k = 1` forced on flat charts and `k = 1/2` on the K-plane,
//! where additionally `eps` carries the sign of the curvature. The middle
//! angle of the fan follows from a law-of-sines chain and lands in an
//! arccot taken on the branch mapping onto (0, pi).

use std::f64::consts::{PI, TAU};

use crate::error::{Error, Result};
use crate::fermat::{absorbed_threshold, WeightTriple};
use crate::geom::{geodesic_distance, ChartPoint, PlanarTriangle, SurfaceSpec, Triangle};
use crate::geom::{shoot, tangent_toward};
use crate::inverse::{inverse_weights, AngleFan};

/// arccot on the branch mapping the reals onto (0, pi), continuous and
/// decreasing; negative arguments yield obtuse angles.
fn arccot(x: f64) -> f64 {
    0.5 * PI - x.atan()
}

/// Shared fan construction. `side12`/`side13` are the flat side lengths
/// (or, on the K-plane, their sin/sinh images, whose common scale
/// cancels); the far-vertex construction angle is `flank_ratio * |eps|`.
fn fan_from_arccot(
    side12: f64,
    side13: f64,
    alpha1: f64,
    eps_signed: f64,
    eps_mag: f64,
    flank_ratio: f64,
) -> Result<AngleFan> {
    let a203 = alpha1 + 2.0 * eps_signed;
    if !(a203 > 0.0 && a203 < PI) {
        return Err(Error::EpsilonTooLarge);
    }
    // sin(k |eps|) / sin(|eps|), continuously extended by k at eps = 0.
    let sigma = if eps_mag < 1e-150 {
        flank_ratio
    } else {
        (flank_ratio * eps_mag).sin() / eps_mag.sin()
    };
    let a102 = arccot(-(side13 * sigma + side12 * a203.cos()) / (side12 * a203.sin()));
    let a301 = TAU - a203 - a102;
    AngleFan::new(a102, a203, a301).map_err(|_| Error::EpsilonTooLarge)
}

/// Planar epsilon fan (`k = 1`):
/// `angle A2 A0 A3 = alpha + 2 eps`,
/// `angle A1 A0 A2 = arccot(-(a13 + a12 cos(alpha + 2 eps)) / (a12 sin(alpha + 2 eps)))`,
/// third angle closing the fan to `2 pi`.
pub fn plane_epsilon_fan(t: &PlanarTriangle, eps: f64) -> Result<AngleFan> {
    fan_from_arccot(t.a12, t.a13, t.alpha1, eps, eps.abs(), 1.0)
}

/// Planar variant with the far-vertex construction angle `|eps| / 2`
/// instead of `|eps|`. This is the exact flat limit of the K-plane fan
/// (the two constructions do not coincide: the flat chart forces `k = 1`,
/// the K-plane uses `k = 1/2`).
pub fn plane_epsilon_fan_half(t: &PlanarTriangle, eps: f64) -> Result<AngleFan> {
    fan_from_arccot(t.a12, t.a13, t.alpha1, eps, eps.abs(), 0.5)
}

/// K-plane epsilon fan. Takes the magnitude `|eps|`; the construction
/// signs epsilon by the curvature (`+|eps|` on the sphere, `-|eps|` on
/// the hyperbolic plane) and replaces the planar side lengths by
/// `sin(sqrt(K) a)` (sphere) or `sinh(sqrt(-K) a)` (hyperbolic), the
/// imaginary factors of the unified trigonometry having cancelled.
pub fn kplane_epsilon_fan(triangle: &Triangle, eps_mag: f64) -> Result<AngleFan> {
    let SurfaceSpec::KPlane { curvature } = *triangle.surface() else {
        return Err(Error::UnsupportedSurface {
            surface: triangle.surface().kind_name(),
            op: "kplane_epsilon_fan",
        });
    };
    if eps_mag < 0.0 {
        return Err(Error::EpsilonOutOfRange { eps: eps_mag, max: f64::INFINITY });
    }
    let sides = triangle.sides();
    let scale = curvature.abs().sqrt();
    let (s12, s13) = if curvature > 0.0 {
        ((scale * sides[0]).sin(), (scale * sides[1]).sin())
    } else {
        ((scale * sides[0]).sinh(), (scale * sides[1]).sinh())
    };
    let eps_signed = if curvature > 0.0 { eps_mag } else { -eps_mag };
    fan_from_arccot(s12, s13, triangle.alpha1(), eps_signed, eps_mag, 0.5)
}

/// Cylinder epsilon fan: the planar formula applied with the helix side
/// lengths `sqrt(1 + b^2) phi` and the vertex angle from the cylindrical
/// law of cosines. Agrees with `plane_epsilon_fan` applied to the
/// unrolled triangle.
pub fn cylinder_epsilon_fan(triangle: &Triangle, eps: f64) -> Result<AngleFan> {
    if !matches!(triangle.surface(), SurfaceSpec::Cylinder) {
        return Err(Error::UnsupportedSurface {
            surface: triangle.surface().kind_name(),
            op: "cylinder_epsilon_fan",
        });
    }
    let flat = triangle.flat()?;
    plane_epsilon_fan(&flat, eps)
}

/// Cone epsilon fan: the planar formula applied with the apex-chord side
/// lengths. Agrees with `plane_epsilon_fan` applied to the unrolled
/// triangle.
pub fn cone_epsilon_fan(triangle: &Triangle, eps: f64) -> Result<AngleFan> {
    if !matches!(triangle.surface(), SurfaceSpec::Cone { .. }) {
        return Err(Error::UnsupportedSurface {
            surface: triangle.surface().kind_name(),
            op: "cone_epsilon_fan",
        });
    }
    let flat = triangle.flat()?;
    plane_epsilon_fan(&flat, eps)
}

/// Epsilon fan at the cone apex itself (`A1` at the conical point), in
/// terms of the slant distances to the two other vertices and the
/// unrolled apex angle `alpha` between their generators.
///
/// `alpha` must fit inside the unrolled sector of the cone of height `h`,
/// whose full angle is `2 pi / sqrt(1 + h^2)`.
pub fn conical_point_fan(h: f64, aa2: f64, aa3: f64, alpha: f64, eps: f64) -> Result<AngleFan> {
    let surface = SurfaceSpec::Cone { apex_height: h };
    surface.validate()?;
    let slant = h.hypot(1.0);
    for (name, s) in [("AA2", aa2), ("AA3", aa3)] {
        if !(s > 0.0 && s <= slant * (1.0 + 1e-12)) {
            return Err(Error::OutsideChart(format!(
                "slant distance {name} = {s} outside (0, {slant}]"
            )));
        }
    }
    let sector = surface.cone_sector_angle()?;
    if alpha > sector {
        return Err(Error::InvalidApexAngle { alpha, sector });
    }
    if !(alpha > 0.0 && alpha < PI) {
        return Err(Error::InvalidFan(format!(
            "apex angle {alpha} outside (0, pi)"
        )));
    }
    fan_from_arccot(aa2, aa3, alpha, eps, eps.abs(), 1.0)
}

/// One epsilon instance: the triangle, the magnitude of epsilon, and the
/// weight normalization constant.
#[derive(Debug, Clone)]
pub struct EpsilonConfig {
    triangle: Triangle,
    eps: f64,
    c: f64,
}

impl EpsilonConfig {
    /// `eps` is the magnitude `|eps|`; the sign rule of the surface is
    /// applied internally. `eps = 0` is admitted as the exact limit row.
    pub fn new(triangle: Triangle, eps: f64, c: f64) -> Result<Self> {
        if !(c > 0.0 && c.is_finite()) {
            return Err(Error::InvalidWeights(format!(
                "normalization constant must be positive, got {c}"
            )));
        }
        let cfg = EpsilonConfig { triangle, eps, c };
        cfg.check_eps(eps)?;
        Ok(cfg)
    }

    pub fn with_eps(&self, eps: f64) -> Result<Self> {
        self.check_eps(eps)?;
        Ok(EpsilonConfig {
            triangle: self.triangle.clone(),
            eps,
            c: self.c,
        })
    }

    pub fn triangle(&self) -> &Triangle {
        &self.triangle
    }

    pub fn eps(&self) -> f64 {
        self.eps
    }

    pub fn normalization(&self) -> f64 {
        self.c
    }

    /// Largest admissible `|eps|`: a quarter of the slack that keeps the
    /// construction angle at `A2` a sub-angle of the triangle's and every
    /// fan component inside (0, pi).
    pub fn eps_max(&self) -> f64 {
        let angles = self.triangle.vertex_angles();
        (angles[1].min((PI - angles[0]) / 2.0)) / 4.0
    }

    /// Epsilon with the surface's sign rule applied: negative on the
    /// hyperbolic plane, the magnitude everywhere else.
    pub fn signed_eps(&self) -> f64 {
        match self.triangle.surface() {
            SurfaceSpec::KPlane { curvature } if *curvature < 0.0 => -self.eps,
            _ => self.eps,
        }
    }

    fn check_eps(&self, eps: f64) -> Result<()> {
        let max = self.eps_max();
        if !eps.is_finite() || eps < 0.0 || eps >= max {
            return Err(Error::EpsilonOutOfRange { eps, max });
        }
        Ok(())
    }
}

/// The epsilon weights at one parameter value, together with the
/// absorbed-threshold reference and its deviation.
#[derive(Debug, Clone)]
pub struct EpsilonResult {
    /// The signed epsilon actually used by the construction.
    pub eps: f64,
    pub fan: AngleFan,
    pub weights: WeightTriple,
    /// `B1* = sqrt(B2^2 + B3^2 + 2 B2 B3 cos(alpha))` at the
    /// eps-independent vertex angle `alpha = angle A2 A1 A3`.
    pub limit_weight: f64,
    /// `|B1(eps) - B1*|`; tends to zero linearly as eps does.
    pub deviation: f64,
}

/// Construct the fan for the config's surface, push it through the
/// inverse-weight formula, and measure the distance from the absorbed
/// threshold at `A1`.
pub fn epsilon_weights(cfg: &EpsilonConfig) -> Result<EpsilonResult> {
    cfg.check_eps(cfg.eps)?;
    let triangle = cfg.triangle();
    let fan = match triangle.surface() {
        SurfaceSpec::Plane => plane_epsilon_fan(&triangle.flat()?, cfg.eps)?,
        SurfaceSpec::KPlane { .. } => kplane_epsilon_fan(triangle, cfg.eps)?,
        SurfaceSpec::Cylinder => cylinder_epsilon_fan(triangle, cfg.eps)?,
        SurfaceSpec::Cone { .. } => cone_epsilon_fan(triangle, cfg.eps)?,
    };
    let weights = inverse_weights(&fan, cfg.c)?;
    let limit_weight = absorbed_threshold(weights.b2, weights.b3, triangle.alpha1());
    let deviation = (weights.b1 - limit_weight).abs();
    Ok(EpsilonResult {
        eps: cfg.signed_eps(),
        fan,
        weights,
        limit_weight,
        deviation,
    })
}

/// One row of an epsilon sweep: the requested magnitude and the outcome.
#[derive(Debug)]
pub struct SweepRow {
    pub eps: f64,
    pub outcome: Result<EpsilonResult>,
}

/// Evaluate `epsilon_weights` over a grid of magnitudes. Rows fail
/// independently; the sweep itself never does.
pub fn epsilon_sweep(cfg: &EpsilonConfig, grid: &[f64]) -> Vec<SweepRow> {
    grid.iter()
        .map(|&eps| SweepRow {
            eps,
            outcome: cfg.with_eps(eps).and_then(|c| epsilon_weights(&c)),
        })
        .collect()
}

/// Chart location of the virtual point `A0(eps)` realizing the
/// construction: on flat charts it is placed exactly from the
/// law-of-sines data; on the K-plane it is found on the ray leaving `A2`
/// at angle `|eps|` from the side `A2 A1`, at the distance where the
/// law-of-sines radius around `A1` is met.
pub fn virtual_vertex_point(cfg: &EpsilonConfig) -> Result<ChartPoint> {
    let triangle = cfg.triangle();
    let surface = triangle.surface();
    let eps = cfg.eps;
    match surface {
        SurfaceSpec::Plane | SurfaceSpec::Cylinder | SurfaceSpec::Cone { .. } => {
            let flat = triangle.flat()?;
            let fan = plane_epsilon_fan(&flat, eps)?;
            let a102 = fan.angle_a1_a0_a2();
            let a01 = flat.a12 * eps.sin() / a102.sin();
            // Angle of A1 -> A0 measured from the side A1 -> A2, opening
            // toward A3 (planar angle sum in triangle A1 A2 A0).
            let delta = PI - eps - a102;
            let verts = triangle.unrolled_vertices()?;
            let d12 = [verts[1][0] - verts[0][0], verts[1][1] - verts[0][1]];
            let d13 = [verts[2][0] - verts[0][0], verts[2][1] - verts[0][1]];
            let n12 = d12[0].hypot(d12[1]);
            let dir12 = [d12[0] / n12, d12[1] / n12];
            let orient = (d12[0] * d13[1] - d12[1] * d13[0]).signum();
            let (sd, cd) = (orient * delta).sin_cos();
            let dir = [dir12[0] * cd - dir12[1] * sd, dir12[0] * sd + dir12[1] * cd];
            let p = [verts[0][0] + a01 * dir[0], verts[0][1] + a01 * dir[1]];
            match surface {
                SurfaceSpec::Plane => Ok(ChartPoint::Plane { x: p[0], y: p[1] }),
                SurfaceSpec::Cylinder => Ok(ChartPoint::Cylinder { phi: p[0], z: p[1] }),
                SurfaceSpec::Cone { .. } => {
                    let s = p[0].hypot(p[1]);
                    let beta = p[1].atan2(p[0]);
                    Ok(ChartPoint::Cone { s, phi: beta * surface.cone_slant() })
                }
                _ => unreachable!(),
            }
        }
        SurfaceSpec::KPlane { curvature } => {
            let fan = kplane_epsilon_fan(triangle, eps)?;
            let a102 = fan.angle_a1_a0_a2();
            let scale = curvature.abs().sqrt();
            let a12 = triangle.sides()[0];
            // Law of sines in triangle A0 A2 A1 for the radius around A1.
            let a01 = if *curvature > 0.0 {
                (((scale * a12).sin() * eps.sin() / a102.sin()).min(1.0)).asin() / scale
            } else {
                ((scale * a12).sinh() * eps.sin() / a102.sin()).asinh() / scale
            };
            if a01 == 0.0 {
                return Ok(triangle.vertices()[0]);
            }
            let [a1, a2, a3] = triangle.vertices();
            let to_a1 = tangent_toward(surface, a2, a1)?;
            let to_a3 = tangent_toward(surface, a2, a3)?;
            let orient = (to_a1[0] * to_a3[1] - to_a1[1] * to_a3[0]).signum();
            let (se, ce) = (orient * eps).sin_cos();
            let ray = [to_a1[0] * ce - to_a1[1] * se, to_a1[0] * se + to_a1[1] * ce];
            // The virtual point is the near intersection of this ray with
            // the circle of radius a01 around A1: bracket, then bisect.
            let gap = |t: f64| -> Result<f64> {
                let x = shoot(surface, a2, ray, t)?;
                Ok(geodesic_distance(surface, a1, &x)? - a01)
            };
            let mut lo = 0.0f64;
            let mut hi = f64::NAN;
            let steps = 256;
            for i in 1..=steps {
                let t = 1.5 * a12 * i as f64 / steps as f64;
                if gap(t)? < 0.0 {
                    hi = t;
                    break;
                }
                lo = t;
            }
            if !hi.is_finite() {
                return Err(Error::NotInterior(
                    "virtual point bracket not found".into(),
                ));
            }
            for _ in 0..100 {
                let mid = 0.5 * (lo + hi);
                if gap(mid)? < 0.0 {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            shoot(surface, a2, ray, 0.5 * (lo + hi))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::TrianglePatch;

    fn planar_equilateral() -> PlanarTriangle {
        PlanarTriangle::new(1.0, 1.0, PI / 3.0).unwrap()
    }

    #[test]
    fn equilateral_limit_fan() {
        let fan = plane_epsilon_fan(&planar_equilateral(), 0.0).unwrap();
        let [a102, a203, a301] = fan.as_array();
        assert!((a102 - 5.0 * PI / 6.0).abs() < 1e-14);
        assert!((a203 - PI / 3.0).abs() < 1e-15);
        assert!((a301 - 5.0 * PI / 6.0).abs() < 1e-14);
    }

    #[test]
    fn right_isoceles_fan() {
        let t = PlanarTriangle::new(1.0, 1.0, PI / 2.0).unwrap();
        let fan = plane_epsilon_fan(&t, 0.0).unwrap();
        let [a102, a203, a301] = fan.as_array();
        assert!((a102 - 3.0 * PI / 4.0).abs() < 1e-14);
        assert!((a203 - PI / 2.0).abs() < 1e-15);
        assert!((a301 - 3.0 * PI / 4.0).abs() < 1e-14);
    }

    #[test]
    fn vanishing_a12_pushes_the_fan_angle_to_pi() {
        let t = PlanarTriangle::new(1e-9, 1.0, PI / 3.0).unwrap();
        let fan = plane_epsilon_fan(&t, 0.0).unwrap();
        assert!(fan.angle_a1_a0_a2() > PI - 1e-6);
    }

    #[test]
    fn kplane_fan_example() {
        // K = 1, a12 = a13 = pi/4, alpha = pi/3, eps = 0:
        // angle A1 A0 A2 = arccot(-2 / sqrt(3)).
        let t = Triangle::new(
            SurfaceSpec::KPlane { curvature: 1.0 },
            TrianglePatch::SidesAngle { a12: PI / 4.0, a13: PI / 4.0, alpha1: PI / 3.0 },
        )
        .unwrap();
        let fan = kplane_epsilon_fan(&t, 0.0).unwrap();
        assert!((fan.angle_a1_a0_a2() - 2.4278682746450276).abs() < 1e-14);
        assert!((fan.angle_a2_a0_a3() - PI / 3.0).abs() < 1e-15);
    }

    #[test]
    fn kplane_equal_sides_matches_either_curvature_sign() {
        // With equal sides the sin/sinh factors cancel, so the arccot
        // argument is identical for K > 0 and K < 0 at eps = 0.
        let sph = Triangle::new(
            SurfaceSpec::KPlane { curvature: 2.0 },
            TrianglePatch::SidesAngle { a12: 0.6, a13: 0.6, alpha1: 1.0 },
        )
        .unwrap();
        let hyp = Triangle::new(
            SurfaceSpec::KPlane { curvature: -2.0 },
            TrianglePatch::SidesAngle { a12: 0.6, a13: 0.6, alpha1: 1.0 },
        )
        .unwrap();
        let fs = kplane_epsilon_fan(&sph, 0.0).unwrap();
        let fh = kplane_epsilon_fan(&hyp, 0.0).unwrap();
        for (a, b) in fs.as_array().iter().zip(fh.as_array()) {
            assert!((a - b).abs() < 1e-14);
        }
    }

    #[test]
    fn fan_is_continuous_at_zero() {
        let t = Triangle::new(
            SurfaceSpec::KPlane { curvature: 1.0 },
            TrianglePatch::SidesAngle { a12: 0.8, a13: 0.5, alpha1: 0.9 },
        )
        .unwrap();
        let f0 = kplane_epsilon_fan(&t, 0.0).unwrap();
        let f1 = kplane_epsilon_fan(&t, 1e-9).unwrap();
        for (a, b) in f0.as_array().iter().zip(f1.as_array()) {
            assert!((a - b).abs() < 1e-7);
        }
    }

    #[test]
    fn conical_point_fan_examples() {
        // AA2 = AA3 = 1, alpha = pi/3: same fan as the planar equilateral.
        let h = 0.5;
        let fan = conical_point_fan(h, 1.0, 1.0, PI / 3.0, 0.0).unwrap();
        assert!((fan.angle_a1_a0_a2() - 5.0 * PI / 6.0).abs() < 1e-14);
        // Apex angle beyond the sector is rejected.
        let h = 3f64.sqrt(); // sector angle pi
        assert!(matches!(
            conical_point_fan(h, 1.0, 1.0, PI + 0.1, 0.0),
            Err(Error::InvalidApexAngle { .. })
        ));
    }

    #[test]
    fn epsilon_too_large_is_rejected_by_fan() {
        let t = PlanarTriangle::new(1.0, 1.0, PI / 3.0).unwrap();
        // alpha + 2 eps beyond pi.
        assert!(matches!(
            plane_epsilon_fan(&t, 1.6),
            Err(Error::EpsilonTooLarge)
        ));
    }

    #[test]
    fn worked_example_weights_and_deviation() {
        let t = Triangle::new(
            SurfaceSpec::Plane,
            TrianglePatch::Sides { a12: 1.0, a13: 1.0, a23: 1.0 },
        )
        .unwrap();
        let cfg = EpsilonConfig::new(t, 0.0, 1.0).unwrap();
        let r = epsilon_weights(&cfg).unwrap();
        assert!((r.weights.b1 - 0.46410161513775459).abs() < 1e-15);
        assert!((r.weights.b2 - 0.26794919243112270).abs() < 1e-15);
        assert!((r.weights.b1 - 3f64.sqrt() * r.weights.b2).abs() < 1e-15);
        assert!(r.deviation < 1e-15);
        assert!((r.weights.total() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn sweep_deviation_decreases_to_zero() {
        let t = Triangle::new(
            SurfaceSpec::Plane,
            TrianglePatch::Sides { a12: 1.0, a13: 1.0, a23: 1.0 },
        )
        .unwrap();
        let cfg = EpsilonConfig::new(t, 0.0, 1.0).unwrap();
        let rows = epsilon_sweep(&cfg, &[1e-2, 1e-4, 1e-6]);
        let devs: Vec<f64> = rows
            .iter()
            .map(|r| r.outcome.as_ref().unwrap().deviation)
            .collect();
        assert!(devs[0] > devs[1] && devs[1] > devs[2]);
        assert!(devs[2] < 1e-5);
        assert!(epsilon_sweep(&cfg, &[]).is_empty());
    }

    #[test]
    fn sweep_flags_bad_rows_and_continues() {
        let t = Triangle::new(
            SurfaceSpec::Plane,
            TrianglePatch::Sides { a12: 1.0, a13: 1.0, a23: 1.0 },
        )
        .unwrap();
        let cfg = EpsilonConfig::new(t, 0.0, 1.0).unwrap();
        let rows = epsilon_sweep(&cfg, &[1e-3, 2.0, 1e-4]);
        assert!(rows[0].outcome.is_ok());
        assert!(rows[1].outcome.is_err());
        assert!(rows[2].outcome.is_ok());
    }

    #[test]
    fn virtual_point_realizes_the_fan() {
        use crate::inverse::angle_fan_at;
        let cases = [
            Triangle::new(
                SurfaceSpec::Plane,
                TrianglePatch::SidesAngle { a12: 1.3, a13: 0.8, alpha1: 0.9 },
            )
            .unwrap(),
            Triangle::new(
                SurfaceSpec::Cylinder,
                TrianglePatch::Cylinder { phi2: 1.1, z2: 0.7, phi3: 2.0, z3: -0.3 },
            )
            .unwrap(),
            Triangle::new(
                SurfaceSpec::Cone { apex_height: 1.5 },
                TrianglePatch::Cone { s2: 1.4, phi2: 1.2, s3: 1.0, phi3: 2.8 },
            )
            .unwrap(),
            Triangle::new(
                SurfaceSpec::KPlane { curvature: 1.0 },
                TrianglePatch::SidesAngle { a12: 0.9, a13: 0.7, alpha1: 1.1 },
            )
            .unwrap(),
            Triangle::new(
                SurfaceSpec::KPlane { curvature: -0.8 },
                TrianglePatch::SidesAngle { a12: 1.1, a13: 0.8, alpha1: 1.0 },
            )
            .unwrap(),
        ];
        for t in cases {
            let cfg = EpsilonConfig::new(t, 0.02, 1.0).unwrap();
            let expected = epsilon_weights(&cfg).unwrap().fan;
            let a0 = virtual_vertex_point(&cfg).unwrap();
            let measured = angle_fan_at(cfg.triangle(), &a0).unwrap();
            for (a, b) in measured.as_array().iter().zip(expected.as_array()) {
                assert!(
                    (a - b).abs() < 1e-7,
                    "{:?}: measured {a} vs formula {b}",
                    cfg.triangle().surface()
                );
            }
        }
    }
}
