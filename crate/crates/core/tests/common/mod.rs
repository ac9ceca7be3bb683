//! Shared fixtures and deterministic generators for the integration and
//! acceptance suites.
#![allow(dead_code)]

use steiner_core::fermat3::{FermatCondition, fermat_condition};
use steiner_core::steiner4::{Existence, existence, scratch};
use steiner_core::{Point, Quad, Tolerance, Triangle};

/// SplitMix64: tiny, seedable, and stable forever, so frozen expectations
/// never move underneath the suite.
pub struct SplitMix64(u64);

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform draw from `[lo, hi)` with 53 bits of entropy.
    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        let u = (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64;
        lo + u * (hi - lo)
    }
}

pub fn pt(x: f64, y: f64) -> Point {
    Point::new(x, y).unwrap()
}

/// Terminals (2,6), (1,1), (9,2), (6,7): the worked four-terminal
/// instance with distinct topology lengths.
pub fn fixture_a() -> Quad {
    quad_of([(2.0, 6.0), (1.0, 1.0), (9.0, 2.0), (6.0, 7.0)])
}

/// Terminals (1,6), (2,1), (6,1), (8,7): orthogonal diagonals, so both
/// topologies tie.
pub fn fixture_orthogonal() -> Quad {
    quad_of([(1.0, 6.0), (2.0, 1.0), (6.0, 1.0), (8.0, 7.0)])
}

pub fn unit_square() -> Quad {
    quad_of([(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)])
}

pub fn quad_of(ps: [(f64, f64); 4]) -> Quad {
    Quad::new(
        pt(ps[0].0, ps[0].1),
        pt(ps[1].0, ps[1].1),
        pt(ps[2].0, ps[2].1),
        pt(ps[3].0, ps[3].1),
        Tolerance::default(),
    )
    .unwrap()
}

/// A random strictly convex CCW quadrilateral with healthy margins:
/// vertices drawn uniformly, ordered by angle around their centroid,
/// rejected unless every consecutive turn clears `1e-4 * scale^2` and
/// every pairwise distance clears `1e-2 * scale`.
pub fn random_convex_quad(rng: &mut SplitMix64) -> Quad {
    loop {
        let mut p: Vec<(f64, f64)> = (0..4)
            .map(|_| (rng.uniform(-100.0, 100.0), rng.uniform(-100.0, 100.0)))
            .collect();
        let cx = p.iter().map(|q| q.0).sum::<f64>() / 4.0;
        let cy = p.iter().map(|q| q.1).sum::<f64>() / 4.0;
        p.sort_by(|a, b| {
            let ta = (a.1 - cy).atan2(a.0 - cx);
            let tb = (b.1 - cy).atan2(b.0 - cx);
            ta.partial_cmp(&tb).unwrap()
        });
        // Rotate the starting label so P1 is not biased by angle order.
        let k = (rng.next_u64() % 4) as usize;
        let pts: Vec<Point> = (0..4).map(|i| pt(p[(i + k) % 4].0, p[(i + k) % 4].1)).collect();

        let Ok(q) = Quad::new(pts[0], pts[1], pts[2], pts[3], Tolerance::default()) else {
            continue;
        };
        if !healthy_margins(&q) {
            continue;
        }
        return q;
    }
}

fn healthy_margins(q: &Quad) -> bool {
    let p = q.points();
    let s = q.scale();
    for i in 0..4 {
        for j in (i + 1)..4 {
            if p[i].distance(p[j]) < 1e-2 * s {
                return false;
            }
        }
    }
    for i in 0..4 {
        let a = p[i];
        let b = p[(i + 1) % 4];
        let c = p[(i + 2) % 4];
        if steiner_core::geom::signed_area2(a, b, c) < 1e-4 * s * s {
            return false;
        }
    }
    true
}

/// A random quad that also admits the primary-topology full tree with a
/// margin: all five existence quantities above `1e-4 * scale^2`.
pub fn random_full_tree_quad(rng: &mut SplitMix64) -> Quad {
    loop {
        let q = random_convex_quad(rng);
        if existence(&q) != Existence::Exists {
            continue;
        }
        let s = scratch(&q);
        let margin = 1e-4 * q.scale() * q.scale();
        if [s.delta, s.delta1, s.delta2, s.delta3, s.delta4].iter().all(|d| *d > margin) {
            return q;
        }
    }
}

/// A random counterclockwise triangle whose angles all clear 120° with a
/// wide margin, keeping the interior solver and the circle tests well
/// conditioned.
pub fn random_sharp_ccw_triangle(rng: &mut SplitMix64) -> Triangle {
    loop {
        let a = pt(rng.uniform(-100.0, 100.0), rng.uniform(-100.0, 100.0));
        let b = pt(rng.uniform(-100.0, 100.0), rng.uniform(-100.0, 100.0));
        let c = pt(rng.uniform(-100.0, 100.0), rng.uniform(-100.0, 100.0));
        let (b, c) = if steiner_core::geom::signed_area2(a, b, c) > 0.0 { (b, c) } else { (c, b) };
        let Ok(t) = Triangle::new(a, b, c, Tolerance::default()) else {
            continue;
        };
        if fermat_condition(&t) != FermatCondition::AllSharp {
            continue;
        }
        // Re-derive the three sharpness margins and ask for slack.
        let [p1, p2, p3] = t.points();
        let (r12, r13, r23) = (p1.distance(p2), p1.distance(p3), p2.distance(p3));
        let exprs = [
            r12 * r12 + r13 * r13 + r12 * r13 - r23 * r23,
            r23 * r23 + r12 * r12 + r12 * r23 - r13 * r13,
            r13 * r13 + r23 * r23 + r13 * r23 - r12 * r12,
        ];
        let margin = 0.05 * t.scale() * t.scale();
        if exprs.iter().all(|e| *e > margin) {
            return t;
        }
    }
}

/// Angle at `s` between the directions toward `a` and `b`, in `[0, π]`.
pub fn angle_at(s: Point, a: Point, b: Point) -> f64 {
    let (ux, uy) = (a.x() - s.x(), a.y() - s.y());
    let (vx, vy) = (b.x() - s.x(), b.y() - s.y());
    (ux * vy - uy * vx).abs().atan2(ux * vx + uy * vy)
}

/// Rigid motion plus uniform scaling, for equivariance checks.
pub fn transform(p: Point, theta: f64, scale: f64, dx: f64, dy: f64) -> Point {
    let (s, c) = theta.sin_cos();
    pt(
        scale * (c * p.x() - s * p.y()) + dx,
        scale * (s * p.x() + c * p.y()) + dy,
    )
}
