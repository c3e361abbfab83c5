//! The JSON scene format consumed by the command-line front end, and the
//! `logspace:lo,hi,n` grid specification.
//!
//! A scene always carries a surface and a triangle; the remaining fields
//! are per-command. Validation is strict both ways: a command rejects
//! scenes missing a field it needs *and* scenes carrying fields it does
//! not consume, naming the offending field.
//!
//! ```json
//! {
//!   "surface": {"kind": "cone", "H": 1.7320508075688772},
//!   "triangle": {"cone": {"s2": 2.0, "phi2": 2.0943951, "s3": 2.0, "phi3": 4.1887902}},
//!   "epsilon_grid": [1e-2, 1e-4, 1e-6],
//!   "C": 1.0
//! }
//! ```
//!
//! The optional `a0` point is a two-element array in chart coordinates:
//! `[x, y]` (plane), `[r, theta]` (K-plane), `[phi, z]` (cylinder),
//! `[s, phi]` (cone). Angles are radians, lengths surface units.

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::fermat::WeightTriple;
use crate::geom::{ChartPoint, SurfaceSpec, Triangle, TrianglePatch};

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scene {
    pub surface: SurfaceSpec,
    pub triangle: TrianglePatch,
    #[serde(default)]
    pub weights: Option<WeightTriple>,
    #[serde(default)]
    pub a0: Option<[f64; 2]>,
    #[serde(default)]
    pub epsilon_grid: Option<Vec<f64>>,
    #[serde(default, rename = "C")]
    pub c: Option<f64>,
}

/// Which subcommand a scene is being validated for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SceneUse {
    Solve,
    Inverse,
    Classify,
    Epsilon,
}

impl Scene {
    /// Parse a scene from JSON text. Structural validation only; command
    /// requirements are checked by [`Scene::validate_for`].
    pub fn parse(json: &str) -> Result<Scene> {
        let scene: Scene =
            serde_json::from_str(json).map_err(|e| Error::SceneJson(e.to_string()))?;
        scene.surface.validate()?;
        if let Some(w) = &scene.weights {
            w.validate()?;
        }
        if let Some(c) = scene.c {
            if !(c > 0.0 && c.is_finite()) {
                return Err(Error::Scene(format!("field \"C\" must be positive, got {c}")));
            }
        }
        if let Some(grid) = &scene.epsilon_grid {
            for &eps in grid {
                if !eps.is_finite() || eps < 0.0 {
                    return Err(Error::Scene(format!(
                        "field \"epsilon_grid\" entries must be finite and >= 0, got {eps}"
                    )));
                }
            }
        }
        if let Some([u, v]) = scene.a0 {
            if !u.is_finite() || !v.is_finite() {
                return Err(Error::Scene(format!(
                    "field \"a0\" must be finite, got [{u}, {v}]"
                )));
            }
        }
        Ok(scene)
    }

    /// Enforce that exactly the fields the subcommand consumes are
    /// present.
    pub fn validate_for(&self, what: SceneUse) -> Result<()> {
        let required: &[&str] = match what {
            SceneUse::Solve | SceneUse::Classify => &["weights"],
            SceneUse::Inverse => &["a0"],
            SceneUse::Epsilon => &[],
        };
        let allowed: &[&str] = match what {
            SceneUse::Solve | SceneUse::Classify => &["weights"],
            SceneUse::Inverse => &["a0", "C"],
            SceneUse::Epsilon => &["epsilon_grid", "C"],
        };
        let fields: [(&str, bool); 4] = [
            ("weights", self.weights.is_some()),
            ("a0", self.a0.is_some()),
            ("epsilon_grid", self.epsilon_grid.is_some()),
            ("C", self.c.is_some()),
        ];
        for name in required {
            let present = fields.iter().any(|(n, p)| n == name && *p);
            if !present {
                return Err(Error::Scene(format!(
                    "missing field \"{name}\" required by this command"
                )));
            }
        }
        for (name, present) in fields {
            if present && !allowed.contains(&name) {
                return Err(Error::Scene(format!(
                    "field \"{name}\" is not used by this command; remove it"
                )));
            }
        }
        Ok(())
    }

    /// Resolve the scene's triangle on its surface.
    pub fn build_triangle(&self) -> Result<Triangle> {
        Triangle::new(self.surface, self.triangle)
    }

    /// The `a0` field as a chart point of the scene's surface.
    pub fn a0_point(&self) -> Result<ChartPoint> {
        let [u, v] = self
            .a0
            .ok_or_else(|| Error::Scene("missing field \"a0\"".into()))?;
        Ok(ChartPoint::from_coords(&self.surface, u, v))
    }

    /// The normalization constant, defaulting to 1.
    pub fn normalization(&self) -> f64 {
        self.c.unwrap_or(1.0)
    }
}

/// Parse a `logspace:lo,hi,n` grid specification into `n` magnitudes
/// geometrically spaced from `lo` up to `hi`.
pub fn parse_grid_spec(spec: &str) -> Result<Vec<f64>> {
    let body = spec
        .strip_prefix("logspace:")
        .ok_or_else(|| Error::GridSpec(format!("expected \"logspace:lo,hi,n\", got \"{spec}\"")))?;
    let parts: Vec<&str> = body.split(',').collect();
    if parts.len() != 3 {
        return Err(Error::GridSpec(format!(
            "expected three comma-separated values, got {}",
            parts.len()
        )));
    }
    let lo: f64 = parts[0]
        .trim()
        .parse()
        .map_err(|_| Error::GridSpec(format!("bad lower bound \"{}\"", parts[0])))?;
    let hi: f64 = parts[1]
        .trim()
        .parse()
        .map_err(|_| Error::GridSpec(format!("bad upper bound \"{}\"", parts[1])))?;
    let n: usize = parts[2]
        .trim()
        .parse()
        .map_err(|_| Error::GridSpec(format!("bad point count \"{}\"", parts[2])))?;
    if !(lo > 0.0 && lo.is_finite() && hi.is_finite()) {
        return Err(Error::GridSpec(format!(
            "bounds must be positive and finite, got {lo}, {hi}"
        )));
    }
    if lo > hi {
        return Err(Error::GridSpec(format!("lower bound {lo} > upper bound {hi}")));
    }
    if n == 0 {
        return Err(Error::GridSpec("point count must be at least 1".into()));
    }
    if n == 1 {
        return Ok(vec![lo]);
    }
    let ratio = (hi.ln() - lo.ln()) / (n - 1) as f64;
    Ok((0..n)
        .map(|i| (lo.ln() + ratio * i as f64).exp())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    const SOLVE_SCENE: &str = r#"{
        "surface": {"kind": "plane"},
        "triangle": {"sides": {"a12": 1.0, "a13": 1.0, "a23": 1.0}},
        "weights": {"b1": 1.0, "b2": 1.0, "b3": 1.0}
    }"#;

    #[test]
    fn parses_and_validates_a_solve_scene() {
        let scene = Scene::parse(SOLVE_SCENE).unwrap();
        scene.validate_for(SceneUse::Solve).unwrap();
        scene.build_triangle().unwrap();
        assert!(scene.validate_for(SceneUse::Inverse).is_err());
    }

    #[test]
    fn missing_and_extra_fields_are_named() {
        let scene = Scene::parse(
            r#"{"surface": {"kind": "plane"},
                "triangle": {"sides": {"a12": 1.0, "a13": 1.0, "a23": 1.0}}}"#,
        )
        .unwrap();
        let err = scene.validate_for(SceneUse::Solve).unwrap_err();
        assert!(err.to_string().contains("weights"), "{err}");

        let scene = Scene::parse(
            r#"{"surface": {"kind": "plane"},
                "triangle": {"sides": {"a12": 1.0, "a13": 1.0, "a23": 1.0}},
                "weights": {"b1": 1.0, "b2": 1.0, "b3": 1.0},
                "a0": [0.4, 0.2]}"#,
        )
        .unwrap();
        let err = scene.validate_for(SceneUse::Solve).unwrap_err();
        assert!(err.to_string().contains("a0"), "{err}");
    }

    #[test]
    fn unknown_keys_are_rejected() {
        assert!(Scene::parse(r#"{"surface": {"kind": "plane"}, "shape": 1}"#).is_err());
        assert!(Scene::parse(
            r#"{"surface": {"kind": "plane", "K": 1.0},
                "triangle": {"sides": {"a12": 1.0, "a13": 1.0, "a23": 1.0}}}"#
        )
        .is_err());
    }

    #[test]
    fn surface_parameters_are_checked() {
        assert!(Scene::parse(
            r#"{"surface": {"kind": "kplane", "K": 0.0},
                "triangle": {"sides": {"a12": 1.0, "a13": 1.0, "a23": 1.0}}}"#
        )
        .is_err());
        assert!(Scene::parse(
            r#"{"surface": {"kind": "cone", "H": -1.0},
                "triangle": {"cone": {"s2": 1.0, "phi2": 1.0, "s3": 1.0, "phi3": 2.0}}}"#
        )
        .is_err());
    }

    #[test]
    fn grid_spec_roundtrip() {
        let g = parse_grid_spec("logspace:1e-6,1e-2,5").unwrap();
        assert_eq!(g.len(), 5);
        assert!((g[0] - 1e-6).abs() < 1e-18);
        assert!((g[4] - 1e-2).abs() < 1e-14);
        // Geometric spacing.
        assert!((g[1] / g[0] - 10.0).abs() < 1e-9);
        assert_eq!(parse_grid_spec("logspace:1e-3,1e-3,1").unwrap(), vec![1e-3]);
    }

    #[test]
    fn bad_grid_specs_are_rejected() {
        assert!(parse_grid_spec("linspace:1,2,3").is_err());
        assert!(parse_grid_spec("logspace:1e-2,1e-6,5").is_err());
        assert!(parse_grid_spec("logspace:0,1e-2,5").is_err());
        assert!(parse_grid_spec("logspace:1e-6,1e-2,0").is_err());
        assert!(parse_grid_spec("logspace:a,b,c").is_err());
        assert!(parse_grid_spec("logspace:1,2").is_err());
    }
}
