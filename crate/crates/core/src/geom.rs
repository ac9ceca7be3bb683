//! Planar primitives shared by every solver: points, distances, signed
//! areas, orientation and convexity validation, and the diagonal angle.
//!
//! All validation is scale-relative: orientation and convexity use the
//! threshold `eps_geom * scale^2`, where `scale` is the largest pairwise
//! distance of the figure, so that a quadrilateral and any uniformly
//! scaled copy of it are classified identically.

use crate::error::Error;
use crate::float;

/// A position in the Euclidean plane. Coordinates are always finite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    x: f64,
    y: f64,
}

impl Point {
    /// Validating constructor; rejects NaN and infinities.
    pub fn new(x: f64, y: f64) -> Result<Self, Error> {
        if x.is_finite() && y.is_finite() {
            Ok(Self { x, y })
        } else {
            Err(Error::NonFiniteCoordinate)
        }
    }

    /// Constructor for computed values that are finite by construction.
    #[inline]
    pub(crate) fn raw(x: f64, y: f64) -> Self {
        debug_assert!(x.is_finite() && y.is_finite());
        Self { x, y }
    }

    #[inline]
    pub fn x(&self) -> f64 {
        self.x
    }

    #[inline]
    pub fn y(&self) -> f64 {
        self.y
    }

    /// Euclidean distance to `other`. Symmetric and non-negative.
    #[inline]
    pub fn distance(&self, other: Point) -> f64 {
        float::hypot(self.x - other.x, self.y - other.y)
    }
}

/// Doubled signed area of the triangle `a b c`, i.e. the determinant
///
/// ```text
/// | 1   1   1  |
/// | xa  xb  xc |
/// | ya  yb  yc |
/// ```
///
/// Positive iff `a`, `b`, `c` wind counterclockwise.
#[inline]
pub fn signed_area2(a: Point, b: Point, c: Point) -> f64 {
    (b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y)
}

/// Relative tolerances used by all validation and existence predicates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    eps_geom: f64,
    eps_solve: f64,
}

impl Tolerance {
    /// Requires `0 < eps_solve <= eps_geom < 1`.
    pub fn new(eps_geom: f64, eps_solve: f64) -> Result<Self, Error> {
        if eps_solve > 0.0 && eps_solve <= eps_geom && eps_geom < 1.0 {
            Ok(Self { eps_geom, eps_solve })
        } else {
            Err(Error::InvalidTolerance)
        }
    }

    /// Geometric classification tolerance (dimensionless, default `1e-9`).
    #[inline]
    pub fn eps_geom(&self) -> f64 {
        self.eps_geom
    }

    /// Numerical-solver convergence tolerance (dimensionless, default `1e-12`).
    #[inline]
    pub fn eps_solve(&self) -> f64 {
        self.eps_solve
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Self { eps_geom: 1e-9, eps_solve: 1e-12 }
    }
}

/// Three non-collinear terminals.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Triangle {
    p: [Point; 3],
    tol: Tolerance,
    scale: f64,
}

impl Triangle {
    /// Rejects triples that are collinear within `eps_geom * scale^2`.
    pub fn new(p1: Point, p2: Point, p3: Point, tol: Tolerance) -> Result<Self, Error> {
        let scale = p1.distance(p2).max(p1.distance(p3)).max(p2.distance(p3));
        if signed_area2(p1, p2, p3).abs() <= tol.eps_geom() * scale * scale {
            return Err(Error::DegenerateTriangle);
        }
        Ok(Self { p: [p1, p2, p3], tol, scale })
    }

    #[inline]
    pub fn points(&self) -> [Point; 3] {
        self.p
    }

    #[inline]
    pub fn p1(&self) -> Point {
        self.p[0]
    }

    #[inline]
    pub fn p2(&self) -> Point {
        self.p[1]
    }

    #[inline]
    pub fn p3(&self) -> Point {
        self.p[2]
    }

    /// Largest pairwise distance; the reference length for tolerances.
    #[inline]
    pub fn scale(&self) -> f64 {
        self.scale
    }

    #[inline]
    pub fn tolerance(&self) -> Tolerance {
        self.tol
    }

    /// Doubled signed area of `p1 p2 p3`.
    #[inline]
    pub fn signed_area2(&self) -> f64 {
        signed_area2(self.p[0], self.p[1], self.p[2])
    }
}

/// Four terminals in strictly convex counterclockwise position.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quad {
    p: [Point; 4],
    tol: Tolerance,
    scale: f64,
}

impl Quad {
    /// Validates that `p1 p2 p3 p4` bound a strictly convex quadrilateral
    /// with counterclockwise winding.
    ///
    /// The failure modes are distinguished: a triple of consecutive
    /// vertices collinear within tolerance is [`Error::Degenerate`], a
    /// uniformly clockwise winding is [`Error::NotCcw`], and mixed turn
    /// directions are [`Error::NotConvex`].
    pub fn new(p1: Point, p2: Point, p3: Point, p4: Point, tol: Tolerance) -> Result<Self, Error> {
        let p = [p1, p2, p3, p4];
        let mut scale = 0.0f64;
        for i in 0..4 {
            for j in (i + 1)..4 {
                scale = scale.max(p[i].distance(p[j]));
            }
        }
        let thr = tol.eps_geom() * scale * scale;
        let mut cross = [0.0f64; 4];
        for i in 0..4 {
            cross[i] = signed_area2(p[i], p[(i + 1) % 4], p[(i + 2) % 4]);
        }
        if cross.iter().any(|z| z.abs() <= thr) {
            return Err(Error::Degenerate);
        }
        if cross.iter().all(|z| *z < 0.0) {
            return Err(Error::NotCcw);
        }
        if cross.iter().any(|z| *z < 0.0) {
            return Err(Error::NotConvex);
        }
        Ok(Self { p, tol, scale })
    }

    #[inline]
    pub fn points(&self) -> [Point; 4] {
        self.p
    }

    #[inline]
    pub fn p1(&self) -> Point {
        self.p[0]
    }

    #[inline]
    pub fn p2(&self) -> Point {
        self.p[1]
    }

    #[inline]
    pub fn p3(&self) -> Point {
        self.p[2]
    }

    #[inline]
    pub fn p4(&self) -> Point {
        self.p[3]
    }

    /// Largest pairwise distance; the reference length for tolerances.
    #[inline]
    pub fn scale(&self) -> f64 {
        self.scale
    }

    #[inline]
    pub fn tolerance(&self) -> Tolerance {
        self.tol
    }

    /// Angle ψ in `[0, π]` between the diagonal vectors `P1P3` and `P2P4`,
    /// computed with the two-argument arctangent for robustness near the
    /// ends of the range.
    pub fn diagonal_angle(&self) -> f64 {
        let ux = self.p[2].x - self.p[0].x;
        let uy = self.p[2].y - self.p[0].y;
        let vx = self.p[3].x - self.p[1].x;
        let vy = self.p[3].y - self.p[1].y;
        let cross = ux * vy - uy * vx;
        let dot = ux * vx + uy * vy;
        float::atan2(cross.abs(), dot)
    }

    /// Inner product of the diagonal vectors, `⟨P1P3, P2P4⟩`.
    #[inline]
    pub fn diagonals_dot(&self) -> f64 {
        (self.p[2].x - self.p[0].x) * (self.p[3].x - self.p[1].x)
            + (self.p[2].y - self.p[0].y) * (self.p[3].y - self.p[1].y)
    }

    /// The same quadrilateral with vertex labels rotated one step:
    /// `(P2, P3, P4, P1)`. Validity, scale and tolerance are unchanged.
    #[inline]
    pub(crate) fn rotate_labels(&self) -> Quad {
        Quad {
            p: [self.p[1], self.p[2], self.p[3], self.p[0]],
            tol: self.tol,
            scale: self.scale,
        }
    }
}
