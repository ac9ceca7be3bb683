//! Three-terminal solver: the Steiner (Fermat–Torricelli) point and tree
//! length in closed form, the wide-angle degenerate fallback, and the
//! circle traced by the Steiner point when one terminal wanders.
//!
//! For a triangle with all angles below 120° the junction lies strictly
//! inside and sees each pair of terminals under 120°. When an angle
//! reaches 120° the optimal network degenerates to the two sides meeting
//! at that vertex.

use crate::error::Error;
use crate::float::{self, SQRT_3};
use crate::geom::{Point, Triangle};

/// Outcome of the sharp-angle test behind the interior formulas.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FermatCondition {
    /// Every triangle angle is below 120° (within tolerance).
    AllSharp,
    /// The angle at vertex `P_j` (1-based) is at least 120°.
    WideAtVertex(usize),
}

/// Evaluates the three quadratic inequalities equivalent to "all angles
/// below 120°". Each expression `r_jk^2 + r_jl^2 + r_jk r_jl - r_kl^2`
/// is positive exactly when the angle at `P_j` is below 120°; the test
/// uses the margin `eps_geom * scale^2`.
pub fn fermat_condition(t: &Triangle) -> FermatCondition {
    let [p1, p2, p3] = t.points();
    let r12 = p1.distance(p2);
    let r13 = p1.distance(p3);
    let r23 = p2.distance(p3);
    let e = [
        r12 * r12 + r13 * r13 + r12 * r13 - r23 * r23,
        r23 * r23 + r12 * r12 + r12 * r23 - r13 * r13,
        r13 * r13 + r23 * r23 + r13 * r23 - r12 * r12,
    ];
    let thr = t.tolerance().eps_geom() * t.scale() * t.scale();
    let mut wide = None;
    let mut min = f64::INFINITY;
    for (i, &v) in e.iter().enumerate() {
        if v <= thr && v < min {
            min = v;
            wide = Some(i + 1);
        }
    }
    match wide {
        Some(j) => FermatCondition::WideAtVertex(j),
        None => FermatCondition::AllSharp,
    }
}

/// A solved three-terminal tree.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Solution3 {
    /// Interior junction: all triangle angles are below 120°.
    Interior {
        steiner: Point,
        /// Total tree length `|SP1| + |SP2| + |SP3|`.
        length: f64,
        /// The three positive weights `κ1, κ2, κ3`; the length equals
        /// `sqrt((κ1 + κ2 + κ3) / √3)`.
        kappas: [f64; 3],
        /// `|𝔖|`, the doubled triangle area.
        s_abs: f64,
    },
    /// Wide-angle fallback: the tree is the two sides meeting at the
    /// vertex (1-based) whose angle is at least 120°.
    DegenerateAtVertex { vertex: usize, length: f64, s_abs: f64 },
}

impl Solution3 {
    #[inline]
    pub fn length(&self) -> f64 {
        match self {
            Solution3::Interior { length, .. } => *length,
            Solution3::DegenerateAtVertex { length, .. } => *length,
        }
    }

    #[inline]
    pub fn steiner(&self) -> Option<Point> {
        match self {
            Solution3::Interior { steiner, .. } => Some(*steiner),
            Solution3::DegenerateAtVertex { .. } => None,
        }
    }
}

/// Solves the three-terminal problem in closed form.
///
/// The junction is evaluated in the grouped form
/// `S = (κ2 κ3 P1 + κ1 κ3 P2 + κ1 κ2 P3) / (2 √3 |𝔖| d^2)`, which stays
/// well defined as any single `κ_j` approaches zero at the 120° boundary.
/// Angles within tolerance of 120° take the degenerate branch; the two
/// answers coincide in the limit.
pub fn solve3(t: &Triangle) -> Solution3 {
    let [p1, p2, p3] = t.points();
    let s_abs = t.signed_area2().abs();
    match fermat_condition(t) {
        FermatCondition::WideAtVertex(vertex) => {
            let length = match vertex {
                1 => p1.distance(p2) + p1.distance(p3),
                2 => p2.distance(p1) + p2.distance(p3),
                _ => p3.distance(p1) + p3.distance(p2),
            };
            Solution3::DegenerateAtVertex { vertex, length, s_abs }
        }
        FermatCondition::AllSharp => {
            let r12s = sq(p1.distance(p2));
            let r13s = sq(p1.distance(p3));
            let r23s = sq(p2.distance(p3));
            let k1 = 0.5 * SQRT_3 * (r12s + r13s - r23s) + s_abs;
            let k2 = 0.5 * SQRT_3 * (r23s + r12s - r13s) + s_abs;
            let k3 = 0.5 * SQRT_3 * (r13s + r23s - r12s) + s_abs;
            let dsq = (k1 + k2 + k3) / SQRT_3;
            let denom = 2.0 * SQRT_3 * s_abs * dsq;
            let x = (k2 * k3 * p1.x() + k1 * k3 * p2.x() + k1 * k2 * p3.x()) / denom;
            let y = (k2 * k3 * p1.y() + k1 * k3 * p2.y() + k1 * k2 * p3.y()) / denom;
            Solution3::Interior {
                steiner: Point::raw(x, y),
                length: float::sqrt(dsq),
                kappas: [k1, k2, k3],
                s_abs,
            }
        }
    }
}

#[inline]
fn sq(v: f64) -> f64 {
    v * v
}

/// A circle in the plane with strictly positive radius.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Circle {
    center: Point,
    radius: f64,
}

impl Circle {
    /// Internal constructor; all construction sites guarantee a positive
    /// radius.
    #[inline]
    pub(crate) fn from_parts(center: Point, radius: f64) -> Self {
        debug_assert!(radius > 0.0);
        Self { center, radius }
    }

    #[inline]
    pub fn center(&self) -> Point {
        self.center
    }

    #[inline]
    pub fn radius(&self) -> f64 {
        self.radius
    }

    /// Signed distance of `p` from the circle (zero on the circle).
    #[inline]
    pub fn deviation(&self, p: Point) -> f64 {
        self.center.distance(p) - self.radius
    }
}

/// Apex of the equilateral triangle erected on the segment `a b`.
///
/// The apex lands on the clockwise side of `a -> b`, so for terminals
/// labelled counterclockwise it lies outside the figure, which is the
/// placement the locus statements below rely on.
pub(crate) fn equilateral_apex(a: Point, b: Point) -> Point {
    Point::raw(
        0.5 * (a.x() + b.x()) - 0.5 * SQRT_3 * (a.y() - b.y()),
        0.5 * (a.y() + b.y()) + 0.5 * SQRT_3 * (a.x() - b.x()),
    )
}

/// Center of the circle circumscribing that equilateral triangle.
pub(crate) fn apex_circle_center(a: Point, b: Point) -> Point {
    let f = 0.5 / SQRT_3;
    Point::raw(
        0.5 * (a.x() + b.x()) - f * (a.y() - b.y()),
        0.5 * (a.y() + b.y()) + f * (a.x() - b.x()),
    )
}

/// Circle traced by the Steiner point of `(p1, p2, P3)` as the third
/// terminal varies over positions keeping `p1, p2, P3` counterclockwise
/// and all angles sharp, together with the apex `Q1` of the equilateral
/// triangle on `p1 p2`.
///
/// The circle passes through `p1`, `p2`, and `Q1`; its radius is
/// `|p1 p2| / √3`. `Q1` sits on the clockwise side of `p1 -> p2`, i.e.
/// opposite a counterclockwise-positioned third terminal, and the tree
/// length equals `|Q1 P3|`.
pub fn steiner_circle(p1: Point, p2: Point) -> Result<(Circle, Point), Error> {
    let r12 = p1.distance(p2);
    if r12 == 0.0 {
        return Err(Error::CoincidentPoints);
    }
    let circle = Circle::from_parts(apex_circle_center(p1, p2), r12 / SQRT_3);
    Ok((circle, equilateral_apex(p1, p2)))
}
