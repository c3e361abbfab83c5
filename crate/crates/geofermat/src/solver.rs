//! Derivative-free minimization of the weighted Fermat-Torricelli
//! objective: coarse grid, Nelder-Mead simplex refinement, then a
//! tangent-balance polish that drives the stationarity residual below
//! tolerance.
//!
//! The simplex stage stalls near the minimum once objective differences
//! fall under f64 resolution (around residual 1e-8 at unit scale); the
//! polish stage works on the balance vector itself, which is computed
//! from exact tangent formulas and has no such floor.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::fermat::{solution_at, SolveOptions, Topology, WeightTriple};
use crate::geom::{self, ChartPoint, SurfaceSpec, Triangle, Vec3};

const GRID_SIZE: usize = 64;
const ITERATION_CAP: usize = 100_000;

pub(crate) fn minimize(
    weights: &WeightTriple,
    triangle: &Triangle,
    options: &SolveOptions,
) -> Result<ChartPoint> {
    let space = Space::build(weights, triangle)?;
    let tol_abs = options.tol * weights.total();
    let diameter = triangle.diameter();
    let mut budget = Budget { used: 0 };

    let mut best = space.grid_best();
    let mut rng = ChaCha8Rng::seed_from_u64(options.seed);

    for _round in 0..4 {
        best = nelder_mead(&space, best, diameter, &mut budget);
        let chart = space.to_chart(&best.x)?;
        let polished = polish(weights, triangle, chart, tol_abs, diameter, &mut budget)?;
        let residual = crate::fermat::balance_residual(weights, triangle, &polished)?;
        if residual <= tol_abs {
            // Probe pass: guard the local refinement against grid aliasing.
            let f_here = crate::fermat::objective(weights, triangle, &polished)?;
            if let Some(better) = space.better_probe(&mut rng, options.probes, f_here) {
                best = better;
                continue;
            }
            return Ok(polished);
        }
        if budget.used >= ITERATION_CAP {
            let sol = solution_at(weights, triangle, &polished, Topology::Floating)?;
            return Err(Error::Convergence {
                residual,
                iterations: budget.used,
                best: Box::new(sol),
            });
        }
        best = Candidate { x: space.from_chart(&polished), f: space.eval_chartless(&polished) };
    }

    let chart = space.to_chart(&best.x)?;
    let residual = crate::fermat::balance_residual(weights, triangle, &chart)?;
    if residual <= tol_abs {
        return Ok(chart);
    }
    let sol = solution_at(weights, triangle, &chart, Topology::Floating)?;
    Err(Error::Convergence {
        residual,
        iterations: budget.used,
        best: Box::new(sol),
    })
}

struct Budget {
    used: usize,
}

#[derive(Clone)]
struct Candidate {
    x: Vec<f64>,
    f: f64,
}

/// The coordinates the simplex operates in, per surface:
/// the (unrolled) plane for plane/cylinder/cone, the ambient Euclidean
/// space with radial projection for the sphere, and graph coordinates
/// `(x1, x2)` for the hyperboloid sheet.
enum Space {
    Planar {
        kind: PlanarKind,
        verts: [[f64; 2]; 3],
        weights: [f64; 3],
    },
    Sphere {
        radius: f64,
        verts: [Vec3; 3],
        weights: [f64; 3],
        surface: SurfaceSpec,
    },
    Hyperbolic {
        radius: f64,
        verts: [Vec3; 3],
        weights: [f64; 3],
        surface: SurfaceSpec,
    },
}

enum PlanarKind {
    Plane,
    Cylinder,
    Cone { slant: f64 },
}

impl Space {
    fn build(weights: &WeightTriple, triangle: &Triangle) -> Result<Space> {
        let w = weights.as_array();
        match triangle.surface() {
            SurfaceSpec::Plane | SurfaceSpec::Cylinder | SurfaceSpec::Cone { .. } => {
                let verts = triangle.unrolled_vertices()?;
                let kind = match triangle.surface() {
                    SurfaceSpec::Plane => PlanarKind::Plane,
                    SurfaceSpec::Cylinder => PlanarKind::Cylinder,
                    SurfaceSpec::Cone { .. } => PlanarKind::Cone {
                        slant: triangle.surface().cone_slant(),
                    },
                    _ => unreachable!(),
                };
                Ok(Space::Planar { kind, verts, weights: w })
            }
            SurfaceSpec::KPlane { curvature } => {
                let surface = *triangle.surface();
                let radius = surface.model_radius();
                let mut verts = [Vec3::new(0.0, 0.0, 0.0); 3];
                for (slot, v) in verts.iter_mut().zip(triangle.vertices()) {
                    *slot = geom::embed(&surface, v);
                }
                if *curvature > 0.0 {
                    Ok(Space::Sphere { radius, verts, weights: w, surface })
                } else {
                    Ok(Space::Hyperbolic { radius, verts, weights: w, surface })
                }
            }
        }
    }

    fn dim(&self) -> usize {
        match self {
            Space::Planar { .. } | Space::Hyperbolic { .. } => 2,
            Space::Sphere { .. } => 3,
        }
    }

    fn eval(&self, x: &[f64]) -> f64 {
        match self {
            Space::Planar { verts, weights, .. } => {
                let mut f = 0.0;
                for (v, b) in verts.iter().zip(weights) {
                    f += b * (x[0] - v[0]).hypot(x[1] - v[1]);
                }
                f
            }
            Space::Sphere { radius, verts, weights, .. } => {
                let v = Vec3::new(x[0], x[1], x[2]);
                let n = v.norm();
                if n < 1e-9 * radius {
                    return f64::MAX;
                }
                let p = v.scale(radius / n);
                let mut f = 0.0;
                for (a, b) in verts.iter().zip(weights) {
                    let half = ((p - *a).norm() / (2.0 * radius)).min(1.0);
                    f += b * 2.0 * radius * half.asin();
                }
                f
            }
            Space::Hyperbolic { radius, verts, weights, .. } => {
                let z = (radius * radius + x[0] * x[0] + x[1] * x[1]).sqrt();
                let p = Vec3::new(x[0], x[1], z);
                let mut f = 0.0;
                for (a, b) in verts.iter().zip(weights) {
                    let d = p - *a;
                    let m = d.minkowski_dot(&d).max(0.0);
                    f += b * 2.0 * radius * (m.sqrt() / (2.0 * radius)).asinh();
                }
                f
            }
        }
    }

    fn eval_chartless(&self, p: &ChartPoint) -> f64 {
        self.eval(&self.from_chart(p))
    }

    fn to_chart(&self, x: &[f64]) -> Result<ChartPoint> {
        match self {
            Space::Planar { kind, .. } => match kind {
                PlanarKind::Plane => Ok(ChartPoint::Plane { x: x[0], y: x[1] }),
                PlanarKind::Cylinder => Ok(ChartPoint::Cylinder { phi: x[0], z: x[1] }),
                PlanarKind::Cone { slant } => {
                    let s = x[0].hypot(x[1]);
                    let beta = x[1].atan2(x[0]);
                    Ok(ChartPoint::Cone { s, phi: beta.max(0.0) * slant })
                }
            },
            Space::Sphere { radius, surface, .. } => {
                let v = Vec3::new(x[0], x[1], x[2]);
                let n = v.norm();
                if n == 0.0 {
                    return Err(Error::OutsideChart("zero ambient vector".into()));
                }
                Ok(geom::unembed(surface, &v.scale(radius / n)))
            }
            Space::Hyperbolic { radius, surface, .. } => {
                let z = (radius * radius + x[0] * x[0] + x[1] * x[1]).sqrt();
                Ok(geom::unembed(surface, &Vec3::new(x[0], x[1], z)))
            }
        }
    }

    fn from_chart(&self, p: &ChartPoint) -> Vec<f64> {
        match self {
            Space::Planar { kind, .. } => match (kind, p) {
                (PlanarKind::Plane, ChartPoint::Plane { x, y }) => vec![*x, *y],
                (PlanarKind::Cylinder, ChartPoint::Cylinder { phi, z }) => vec![*phi, *z],
                (PlanarKind::Cone { slant }, ChartPoint::Cone { s, phi }) => {
                    let beta = phi / slant;
                    vec![s * beta.cos(), s * beta.sin()]
                }
                _ => unreachable!("space built from the same surface"),
            },
            Space::Sphere { surface, .. } | Space::Hyperbolic { surface, .. } => {
                let v = geom::embed(surface, p);
                if self.dim() == 3 {
                    vec![v.x, v.y, v.z]
                } else {
                    vec![v.x, v.y]
                }
            }
        }
    }

    /// Affine combination of the vertices in solve coordinates, with
    /// barycentric weights `(1 - u - v, u, v)`.
    fn affine(&self, u: f64, v: f64) -> Vec<f64> {
        match self {
            Space::Planar { verts, .. } => {
                let x = verts[0][0] + u * (verts[1][0] - verts[0][0]) + v * (verts[2][0] - verts[0][0]);
                let y = verts[0][1] + u * (verts[1][1] - verts[0][1]) + v * (verts[2][1] - verts[0][1]);
                vec![x, y]
            }
            Space::Sphere { verts, .. } => {
                let p = verts[0] + (verts[1] - verts[0]).scale(u) + (verts[2] - verts[0]).scale(v);
                vec![p.x, p.y, p.z]
            }
            Space::Hyperbolic { verts, .. } => {
                let p = verts[0] + (verts[1] - verts[0]).scale(u) + (verts[2] - verts[0]).scale(v);
                vec![p.x, p.y]
            }
        }
    }

    /// Best point of a coarse lattice over the triangle.
    fn grid_best(&self) -> Candidate {
        let mut best: Option<Candidate> = None;
        for i in 0..=GRID_SIZE {
            for j in 0..=(GRID_SIZE - i.min(GRID_SIZE)) {
                let u = i as f64 / GRID_SIZE as f64;
                let v = j as f64 / GRID_SIZE as f64;
                if u + v > 1.0 {
                    continue;
                }
                let x = self.affine(u, v);
                let f = self.eval(&x);
                if best.as_ref().map_or(true, |b| f < b.f) {
                    best = Some(Candidate { x, f });
                }
            }
        }
        best.expect("grid is non-empty")
    }

    /// Uniform random point of the triangle (in solve coordinates).
    fn sample_interior(&self, rng: &mut ChaCha8Rng) -> Vec<f64> {
        let mut u: f64 = rng.gen();
        let mut v: f64 = rng.gen();
        if u + v > 1.0 {
            u = 1.0 - u;
            v = 1.0 - v;
        }
        self.affine(u, v)
    }

    fn better_probe(
        &self,
        rng: &mut ChaCha8Rng,
        count: usize,
        f_current: f64,
    ) -> Option<Candidate> {
        let slack = 1e-12 * (1.0 + f_current.abs());
        let mut best: Option<Candidate> = None;
        for _ in 0..count {
            let x = self.sample_interior(rng);
            let f = self.eval(&x);
            if f < f_current - slack && best.as_ref().map_or(true, |b| f < b.f) {
                best = Some(Candidate { x, f });
            }
        }
        best
    }

    fn scale(&self) -> f64 {
        match self {
            Space::Planar { verts, .. } => {
                let mut s = 0.0f64;
                for i in 0..3 {
                    for j in (i + 1)..3 {
                        s = s.max((verts[i][0] - verts[j][0]).hypot(verts[i][1] - verts[j][1]));
                    }
                }
                s
            }
            Space::Sphere { verts, .. } | Space::Hyperbolic { verts, .. } => {
                let mut s = 0.0f64;
                for i in 0..3 {
                    for j in (i + 1)..3 {
                        s = s.max((verts[i] - verts[j]).norm());
                    }
                }
                s
            }
        }
    }
}

/// Classic Nelder-Mead with standard coefficients, run until the simplex
/// collapses or the objective spread flattens out.
fn nelder_mead(space: &Space, start: Candidate, _diameter: f64, budget: &mut Budget) -> Candidate {
    let dim = space.dim();
    let h = space.scale() / GRID_SIZE as f64;
    let mut simplex: Vec<Candidate> = Vec::with_capacity(dim + 1);
    simplex.push(start);
    for i in 0..dim {
        let mut x = simplex[0].x.clone();
        x[i] += h;
        let f = space.eval(&x);
        simplex.push(Candidate { x, f });
    }

    let max_iter = 4000.min(ITERATION_CAP - budget.used);
    for _ in 0..max_iter {
        budget.used += 1;
        simplex.sort_by(|a, b| a.f.partial_cmp(&b.f).unwrap_or(std::cmp::Ordering::Equal));
        let spread = simplex[dim].f - simplex[0].f;
        let size: f64 = (0..dim)
            .map(|d| (simplex[dim].x[d] - simplex[0].x[d]).abs())
            .fold(0.0, f64::max);
        if spread <= 1e-15 * (1.0 + simplex[0].f.abs()) || size <= 1e-13 * space.scale() {
            break;
        }

        let mut centroid = vec![0.0; dim];
        for cand in &simplex[..dim] {
            for d in 0..dim {
                centroid[d] += cand.x[d] / dim as f64;
            }
        }
        let worst = simplex[dim].clone();
        let reflect = |t: f64| -> Vec<f64> {
            (0..dim)
                .map(|d| centroid[d] + t * (centroid[d] - worst.x[d]))
                .collect()
        };

        let xr = reflect(1.0);
        let fr = space.eval(&xr);
        if fr < simplex[0].f {
            let xe = reflect(2.0);
            let fe = space.eval(&xe);
            simplex[dim] = if fe < fr {
                Candidate { x: xe, f: fe }
            } else {
                Candidate { x: xr, f: fr }
            };
            continue;
        }
        if fr < simplex[dim - 1].f {
            simplex[dim] = Candidate { x: xr, f: fr };
            continue;
        }
        let xc = reflect(-0.5);
        let fc = space.eval(&xc);
        if fc < simplex[dim].f {
            simplex[dim] = Candidate { x: xc, f: fc };
            continue;
        }
        // Shrink toward the best point.
        let best = simplex[0].clone();
        for cand in simplex.iter_mut().skip(1) {
            for d in 0..dim {
                cand.x[d] = best.x[d] + 0.5 * (cand.x[d] - best.x[d]);
            }
            cand.f = space.eval(&cand.x);
        }
    }
    simplex.sort_by(|a, b| a.f.partial_cmp(&b.f).unwrap_or(std::cmp::Ordering::Equal));
    simplex.remove(0)
}

/// Fixed-point refinement on the balance vector: step along
/// `v = sum_i B_i U_0i` with the Weiszfeld length `|v| / sum_i (B_i/d_i)`
/// until the residual meets tolerance or stops improving.
fn polish(
    weights: &WeightTriple,
    triangle: &Triangle,
    start: ChartPoint,
    tol_abs: f64,
    diameter: f64,
    budget: &mut Budget,
) -> Result<ChartPoint> {
    let surface = triangle.surface();
    let b = weights.as_array();
    let balance = |p: &ChartPoint| -> Result<([f64; 2], f64)> {
        let mut v = [0.0f64; 2];
        let mut wsum = 0.0;
        for (vertex, bi) in triangle.vertices().iter().zip(b) {
            let d = geom::geodesic_distance(surface, p, vertex)?;
            if d == 0.0 {
                return Err(Error::CoincidentPoints);
            }
            let t = geom::tangent_toward(surface, p, vertex)?;
            v[0] += bi * t[0];
            v[1] += bi * t[1];
            wsum += bi / d;
        }
        Ok((v, wsum))
    };

    let mut p = start;
    let (mut v, mut wsum) = balance(&p)?;
    let mut res = v[0].hypot(v[1]);
    while res > tol_abs && budget.used < ITERATION_CAP {
        budget.used += 1;
        let mut step = (res / wsum).min(0.2 * diameter);
        let mut advanced = false;
        for _ in 0..60 {
            let candidate = match geom::shoot(surface, &p, v, step) {
                Ok(c) => c,
                Err(_) => {
                    step *= 0.5;
                    continue;
                }
            };
            match balance(&candidate) {
                Ok((cv, cw)) => {
                    let cres = cv[0].hypot(cv[1]);
                    if cres < res {
                        p = candidate;
                        v = cv;
                        wsum = cw;
                        res = cres;
                        advanced = true;
                        break;
                    }
                }
                Err(_) => {}
            }
            step *= 0.5;
            if step < 1e-18 * diameter {
                break;
            }
        }
        if !advanced {
            break;
        }
    }
    Ok(p)
}
