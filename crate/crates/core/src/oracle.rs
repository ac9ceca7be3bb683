//! Independent numerical verification of the closed-form solvers.
//!
//! The four-terminal objective is the five-edge length sum for the
//! topology pairing `{P1,P2}` with the first junction. Its stationarity
//! system sets four sums of unit-vector components to zero, one pair per
//! junction coordinate. The solver iterates alternating Weiszfeld steps:
//! each junction is replaced by the inverse-distance-weighted average of
//! its three neighbours (two terminals and the other junction), which
//! never increases the objective. Convergence is measured by the step
//! size in coordinates and certified by the residual, both relative to
//! the figure scale, because the objective is flat near the minimum.
//!
//! The alternate topology needs no separate code path: relabel the quad
//! cyclically and solve again. A three-terminal variant of everything
//! here backs the verification of the triangle solver.

use crate::error::Error;
use crate::geom::{Point, Quad, Tolerance, Triangle};

/// Starting placement for the numerical solver.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Init {
    /// Both junctions at the intersection of the diagonals, pushed apart
    /// a small fraction of the scale along the diagonal-angle bisector.
    /// Full-tree junctions always lie inside the quadrilateral, so this
    /// starts in the right region.
    DiagonalIntersection,
    /// Each junction midway between its terminal pair's midpoint and the
    /// vertex centroid.
    Centroids,
    Explicit(Point, Point),
}

/// Numerical solver configuration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleConfig {
    pub max_iters: u32,
    pub tol: Tolerance,
    pub init: Init,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self { max_iters: 100_000, tol: Tolerance::default(), init: Init::DiagonalIntersection }
    }
}

/// Final state of a four-terminal solve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleResult {
    pub s1: Point,
    pub s2: Point,
    pub objective: f64,
    /// Max-norm of the four stationarity components at the final iterate.
    pub residual_inf: f64,
    pub iters: u32,
    /// Set when the coordinate step fell below `eps_solve * scale` and
    /// the residual below `10 * eps_solve`.
    pub converged: bool,
}

/// The four stationarity components `(∂x*, ∂y*, ∂x**, ∂y**)` and their
/// max-norm. Each component is a sum of three unit-vector coordinates,
/// hence dimensionless.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StationaryResidual {
    pub components: [f64; 4],
    pub inf_norm: f64,
}

/// Five-edge length sum `|S1P1| + |S1P2| + |S1S2| + |S2P3| + |S2P4|`.
pub fn objective(q: &Quad, s1: Point, s2: Point) -> f64 {
    let [p1, p2, p3, p4] = q.points();
    s1.distance(p1) + s1.distance(p2) + s1.distance(s2) + s2.distance(p3) + s2.distance(p4)
}

/// Evaluates the stationarity system at `(s1, s2)`.
///
/// Fails with [`Error::CoincidentPoints`] when a junction sits within
/// `eps_solve * scale` of one of its neighbours, where the unit vectors
/// are undefined.
pub fn stationary_residual(q: &Quad, s1: Point, s2: Point) -> Result<StationaryResidual, Error> {
    let [p1, p2, p3, p4] = q.points();
    let guard = q.tolerance().eps_solve() * q.scale();
    let d11 = s1.distance(p1);
    let d12 = s1.distance(p2);
    let d23 = s2.distance(p3);
    let d24 = s2.distance(p4);
    let dm = s1.distance(s2);
    if d11 < guard || d12 < guard || d23 < guard || d24 < guard || dm < guard {
        return Err(Error::CoincidentPoints);
    }
    let components = [
        (s1.x() - p1.x()) / d11 + (s1.x() - p2.x()) / d12 + (s1.x() - s2.x()) / dm,
        (s1.y() - p1.y()) / d11 + (s1.y() - p2.y()) / d12 + (s1.y() - s2.y()) / dm,
        (s2.x() - p3.x()) / d23 + (s2.x() - p4.x()) / d24 + (s2.x() - s1.x()) / dm,
        (s2.y() - p3.y()) / d23 + (s2.y() - p4.y()) / d24 + (s2.y() - s1.y()) / dm,
    ];
    Ok(StationaryResidual { components, inf_norm: inf_norm(&components) })
}

fn inf_norm(v: &[f64]) -> f64 {
    let mut m = 0.0f64;
    for c in v {
        m = m.max(c.abs());
    }
    m
}

/// Minimizes the five-edge objective by alternating Weiszfeld updates.
///
/// Non-convergence within `max_iters` is reported through the `converged`
/// flag, never as an error. If an iterate lands within `eps_solve * scale`
/// of a neighbour it is nudged one such step along its previous
/// displacement, the classical escape from the Weiszfeld singularity.
pub fn solve_numeric(q: &Quad, cfg: &OracleConfig) -> OracleResult {
    let [p1, p2, p3, p4] = q.points();
    let scale = q.scale();
    let eps_step = cfg.tol.eps_solve() * scale;
    let residual_cap = 10.0 * cfg.tol.eps_solve();

    let (mut s1, mut s2) = initial_points(q, cfg.init);
    let mut dir1 = (0.0f64, 0.0f64);
    let mut dir2 = (0.0f64, 0.0f64);
    let mut iters = 0u32;
    let mut converged = false;
    let mut residual = f64::INFINITY;

    while iters < cfg.max_iters {
        iters += 1;
        let n1 = weiszfeld_step(s1, [p1, p2, s2], eps_step, &mut dir1);
        let step1 = s1.distance(n1);
        s1 = n1;
        let n2 = weiszfeld_step(s2, [p3, p4, s1], eps_step, &mut dir2);
        let step2 = s2.distance(n2);
        s2 = n2;

        residual = match stationary_residual(q, s1, s2) {
            Ok(r) => r.inf_norm,
            Err(_) => f64::INFINITY,
        };
        if step1.max(step2) <= eps_step && residual <= residual_cap {
            converged = true;
            break;
        }
    }

    OracleResult {
        s1,
        s2,
        objective: objective(q, s1, s2),
        residual_inf: residual,
        iters,
        converged,
    }
}

/// One Weiszfeld step for a junction with three neighbours.
fn weiszfeld_step(
    current: Point,
    neighbours: [Point; 3],
    guard: f64,
    last_dir: &mut (f64, f64),
) -> Point {
    let mut at = current;
    // Escape a (near-)singular placement before forming the weights.
    if neighbours.iter().any(|n| at.distance(*n) < guard) {
        let (dx, dy) = *last_dir;
        let norm = (dx * dx + dy * dy).max(f64::MIN_POSITIVE);
        let inv = guard / crate::float::sqrt(norm);
        at = Point::raw(at.x() + dx * inv, at.y() + dy * inv);
    }
    let mut wsum = 0.0f64;
    let mut x = 0.0f64;
    let mut y = 0.0f64;
    for n in neighbours {
        // Clamping at the guard distance keeps the weights bounded even
        // if the nudge above could not separate the points.
        let d = at.distance(n).max(guard);
        let w = 1.0 / d;
        wsum += w;
        x += w * n.x();
        y += w * n.y();
    }
    let next = Point::raw(x / wsum, y / wsum);
    *last_dir = (next.x() - current.x(), next.y() - current.y());
    next
}

fn initial_points(q: &Quad, init: Init) -> (Point, Point) {
    let [p1, p2, p3, p4] = q.points();
    match init {
        Init::Explicit(a, b) => (a, b),
        Init::Centroids => {
            let g = Point::raw(
                (p1.x() + p2.x() + p3.x() + p4.x()) / 4.0,
                (p1.y() + p2.y() + p3.y() + p4.y()) / 4.0,
            );
            let m12 = Point::raw(0.5 * (p1.x() + p2.x()), 0.5 * (p1.y() + p2.y()));
            let m34 = Point::raw(0.5 * (p3.x() + p4.x()), 0.5 * (p3.y() + p4.y()));
            (
                Point::raw(0.5 * (m12.x() + g.x()), 0.5 * (m12.y() + g.y())),
                Point::raw(0.5 * (m34.x() + g.x()), 0.5 * (m34.y() + g.y())),
            )
        }
        Init::DiagonalIntersection => {
            // Diagonals of a strictly convex quad always cross.
            let (ux, uy) = (p3.x() - p1.x(), p3.y() - p1.y());
            let (vx, vy) = (p4.x() - p2.x(), p4.y() - p2.y());
            let denom = ux * vy - uy * vx;
            let t = ((p2.x() - p1.x()) * vy - (p2.y() - p1.y()) * vx) / denom;
            let cx = p1.x() + t * ux;
            let cy = p1.y() + t * uy;
            // Bisector of the two diagonal directions; points from the
            // {P1,P2} side toward the {P3,P4} side.
            let nu = crate::float::hypot(ux, uy);
            let nv = crate::float::hypot(vx, vy);
            let (bx, by) = (ux / nu + vx / nv, uy / nu + vy / nv);
            let nb = crate::float::hypot(bx, by);
            let h = 1e-3 * q.scale();
            (
                Point::raw(cx - h * bx / nb, cy - h * by / nb),
                Point::raw(cx + h * bx / nb, cy + h * by / nb),
            )
        }
    }
}

/// Three-edge objective `|SP1| + |SP2| + |SP3|` for the triangle solver.
pub fn objective3(t: &Triangle, s: Point) -> f64 {
    let [p1, p2, p3] = t.points();
    s.distance(p1) + s.distance(p2) + s.distance(p3)
}

/// Stationarity components of the three-edge objective.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StationaryResidual3 {
    pub components: [f64; 2],
    pub inf_norm: f64,
}

pub fn stationary_residual3(t: &Triangle, s: Point) -> Result<StationaryResidual3, Error> {
    let [p1, p2, p3] = t.points();
    let guard = t.tolerance().eps_solve() * t.scale();
    let d1 = s.distance(p1);
    let d2 = s.distance(p2);
    let d3 = s.distance(p3);
    if d1 < guard || d2 < guard || d3 < guard {
        return Err(Error::CoincidentPoints);
    }
    let components = [
        (s.x() - p1.x()) / d1 + (s.x() - p2.x()) / d2 + (s.x() - p3.x()) / d3,
        (s.y() - p1.y()) / d1 + (s.y() - p2.y()) / d2 + (s.y() - p3.y()) / d3,
    ];
    Ok(StationaryResidual3 { components, inf_norm: inf_norm(&components) })
}

/// Final state of a three-terminal solve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Oracle3Result {
    pub s: Point,
    pub objective: f64,
    pub residual_inf: f64,
    pub iters: u32,
    pub converged: bool,
}

/// Weiszfeld iteration for the single junction of three terminals,
/// started at the vertex centroid. Only meaningful when all triangle
/// angles are below 120°; otherwise the iterate drifts toward the wide
/// vertex without converging in the interior.
pub fn solve_numeric3(t: &Triangle, cfg: &OracleConfig) -> Oracle3Result {
    let [p1, p2, p3] = t.points();
    let scale = t.scale();
    let eps_step = cfg.tol.eps_solve() * scale;
    let residual_cap = 10.0 * cfg.tol.eps_solve();

    let mut s = match cfg.init {
        Init::Explicit(a, _) => a,
        _ => Point::raw((p1.x() + p2.x() + p3.x()) / 3.0, (p1.y() + p2.y() + p3.y()) / 3.0),
    };
    let mut dir = (0.0f64, 0.0f64);
    let mut iters = 0u32;
    let mut converged = false;
    let mut residual = f64::INFINITY;

    while iters < cfg.max_iters {
        iters += 1;
        let next = weiszfeld_step(s, [p1, p2, p3], eps_step, &mut dir);
        let step = s.distance(next);
        s = next;
        residual = match stationary_residual3(t, s) {
            Ok(r) => r.inf_norm,
            Err(_) => f64::INFINITY,
        };
        if step <= eps_step && residual <= residual_cap {
            converged = true;
            break;
        }
    }

    Oracle3Result { s, objective: objective3(t, s), residual_inf: residual, iters, converged }
}
