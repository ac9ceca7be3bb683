//! Four-terminal full Steiner tree solver.
//!
//! For terminals `P1 P2 P3 P4` in strictly convex counterclockwise
//! position the full tree has two junctions. The solver works from nine
//! intermediate quantities ([`Scratch4`]): two linear combinations of the
//! coordinates (`τ1`, `τ2`), their fixed rotations (`η1`, `η2`), and five
//! bilinear forms (`δ`, `δ1..δ4`) whose simultaneous positivity is the
//! existence condition for the topology pairing `{P1,P2}` with the first
//! junction and `{P3,P4}` with the second. The five edge lengths are
//! `δ_i / √t` with `t = τ1² + τ1 τ2 + τ2²`, the total length is
//! `√(t / 3)`, and `t` also appears in the denominator of every junction
//! coordinate, so each junction formula carries the tree length inside it.
//!
//! The alternative topology (pairing `{P2,P3}` and `{P4,P1}`) is solved
//! by rotating the vertex labels one step and mapping the result back.
//! The shorter of the two trees is the Steiner minimal tree; the squared
//! lengths always differ by `-2 ⟨P1P3, P2P4⟩`, so orthogonal diagonals
//! mean an exact tie.

use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;
use crate::fermat3::{Circle, equilateral_apex, steiner_circle};
use crate::float::{self, SQRT_3};
use crate::geom::{Point, Quad, Tolerance, signed_area2};

/// The intermediate quantities of the closed-form solution for one
/// topology. `tau`/`eta` carry length units, the deltas and `t_quad`
/// length² units. They satisfy `δ + δ1 + δ2 + δ3 + δ4 = t_quad / √3`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Scratch4 {
    pub tau1: f64,
    pub tau2: f64,
    pub eta1: f64,
    pub eta2: f64,
    pub delta: f64,
    pub delta1: f64,
    pub delta2: f64,
    pub delta3: f64,
    pub delta4: f64,
    /// `τ1² + τ1 τ2 + τ2²`; equals three times the squared tree length.
    pub t_quad: f64,
}

/// Computes the nine intermediate quantities for the topology pairing
/// `{P1,P2}` and `{P3,P4}`. Depends only on coordinate differences, so it
/// is translation invariant.
pub fn scratch(q: &Quad) -> Scratch4 {
    let [p1, p2, p3, p4] = q.points();
    let (x1, y1) = (p1.x(), p1.y());
    let (x2, y2) = (p2.x(), p2.y());
    let (x3, y3) = (p3.x(), p3.y());
    let (x4, y4) = (p4.x(), p4.y());

    let tau1 = 2.0 * x1 - x2 - 2.0 * x3 + x4 + SQRT_3 * (y2 - y4);
    let tau2 = -x1 + 2.0 * x2 + x3 - 2.0 * x4 + SQRT_3 * (y3 - y1);
    let eta1 = -(tau1 + 2.0 * tau2) / SQRT_3;
    let eta2 = (2.0 * tau1 + tau2) / SQRT_3;

    let delta = -(x1 - x3) * eta1 + (y1 - y3) * tau1;
    let delta1 = (x1 - x2) * eta2 - (y1 - y2) * tau2;
    let delta2 = (x1 - x2) * eta1 - (y1 - y2) * tau1;
    let delta3 = -(x3 - x4) * eta2 + (y3 - y4) * tau2;
    let delta4 = -(x3 - x4) * eta1 + (y3 - y4) * tau1;

    let t_quad = tau1 * tau1 + tau1 * tau2 + tau2 * tau2;
    Scratch4 { tau1, tau2, eta1, eta2, delta, delta1, delta2, delta3, delta4, t_quad }
}

/// Names the existence quantities for diagnostics.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DeltaKind {
    Delta,
    Delta1,
    Delta2,
    Delta3,
    Delta4,
}

impl fmt::Display for DeltaKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DeltaKind::Delta => "delta",
            DeltaKind::Delta1 => "delta1",
            DeltaKind::Delta2 => "delta2",
            DeltaKind::Delta3 => "delta3",
            DeltaKind::Delta4 => "delta4",
        })
    }
}

/// The existence quantities that were not positive beyond tolerance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FailedDeltas {
    pub failing: Vec<DeltaKind>,
}

impl fmt::Display for FailedDeltas {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, kind) in self.failing.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{kind}")?;
        }
        f.write_str(" <= 0")
    }
}

/// Whether a full tree of the primary topology exists for `q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Existence {
    Exists,
    Fails(FailedDeltas),
}

/// A full tree of topology `T12_34` exists iff `δ, δ1, δ2, δ3, δ4` all
/// exceed `eps_geom * scale^2`. On failure the offenders are listed.
pub fn existence(q: &Quad) -> Existence {
    existence_of(&scratch(q), q).map_or_else(Existence::Fails, |()| Existence::Exists)
}

fn existence_of(s: &Scratch4, q: &Quad) -> Result<(), FailedDeltas> {
    let thr = q.tolerance().eps_geom() * q.scale() * q.scale();
    let mut failing = Vec::new();
    for (kind, value) in [
        (DeltaKind::Delta, s.delta),
        (DeltaKind::Delta1, s.delta1),
        (DeltaKind::Delta2, s.delta2),
        (DeltaKind::Delta3, s.delta3),
        (DeltaKind::Delta4, s.delta4),
    ] {
        if value <= thr {
            failing.push(kind);
        }
    }
    if failing.is_empty() { Ok(()) } else { Err(FailedDeltas { failing }) }
}

/// The two full-tree topologies of a convex quadrilateral.
///
/// `T12_34` pairs `{P1,P2}` with the first junction and `{P3,P4}` with
/// the second. `T41_23` is its cyclic alternate, solved on the rotated
/// labels `(P2, P3, P4, P1)`: its first junction is adjacent to `P2, P3`
/// and its second to `P4, P1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[allow(non_camel_case_types)]
pub enum Topology {
    T12_34,
    T41_23,
}

impl Topology {
    /// 1-based terminal indices adjacent to `s1` and to `s2`.
    pub fn terminal_pairs(&self) -> ([usize; 2], [usize; 2]) {
        match self {
            Topology::T12_34 => ([1, 2], [3, 4]),
            Topology::T41_23 => ([2, 3], [4, 1]),
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Topology::T12_34 => "T12_34",
            Topology::T41_23 => "T41_23",
        }
    }
}

impl fmt::Display for Topology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// A solved full Steiner tree: two junctions, five edges, total length.
///
/// `edge_lengths` is ordered `[|A1 s1|, |A2 s1|, |A3 s2|, |A4 s2|, |s1 s2|]`
/// where `(A1..A4)` are the terminals in topology order: `(P1,P2,P3,P4)`
/// for `T12_34` and `(P2,P3,P4,P1)` for `T41_23`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FullTree {
    pub topology: Topology,
    pub s1: Point,
    pub s2: Point,
    pub edge_lengths: [f64; 5],
    pub length: f64,
}

/// Solves a positioned quad, assuming its label order matches the
/// topology pairing `{A1,A2} | {A3,A4}`.
fn solve_positioned(q: &Quad) -> Result<(Scratch4, Point, Point, [f64; 5], f64), FailedDeltas> {
    let s = scratch(q);
    existence_of(&s, q)?;

    let [p1, _, p3, _] = q.points();
    let t = s.t_quad;
    let half_sqrt3 = 0.5 * SQRT_3;
    let s1 = Point::raw(
        p1.x() - half_sqrt3 * s.delta1 * s.tau1 / t,
        p1.y() - half_sqrt3 * s.delta1 * s.eta1 / t,
    );
    let s2 = Point::raw(
        p3.x() + half_sqrt3 * s.delta3 * s.tau1 / t,
        p3.y() + half_sqrt3 * s.delta3 * s.eta1 / t,
    );
    let root_t = float::sqrt(t);
    let edges = [
        s.delta1 / root_t,
        s.delta2 / root_t,
        s.delta3 / root_t,
        s.delta4 / root_t,
        s.delta / root_t,
    ];
    let length = float::sqrt(t / 3.0);
    Ok((s, s1, s2, edges, length))
}

/// Solves topology `T12_34`; fails with the existence diagnostic when one
/// of the deltas is not positive.
pub fn solve_topology(q: &Quad) -> Result<FullTree, Error> {
    let (_, s1, s2, edge_lengths, length) =
        solve_positioned(q).map_err(Error::NoFullTree)?;
    Ok(FullTree { topology: Topology::T12_34, s1, s2, edge_lengths, length })
}

/// The first junction of `T12_34` in its algebraically equivalent second
/// form, anchored at `P2` instead of `P1`. Exists under the same
/// conditions as [`solve_topology`] and must agree with its `s1`.
pub fn s1_from_p2_anchor(q: &Quad) -> Result<Point, Error> {
    let s = scratch(q);
    existence_of(&s, q).map_err(Error::NoFullTree)?;
    let p2 = q.p2();
    let t = s.t_quad;
    let half_sqrt3 = 0.5 * SQRT_3;
    Ok(Point::raw(
        p2.x() - half_sqrt3 * s.delta2 * s.tau2 / t,
        p2.y() - half_sqrt3 * s.delta2 * s.eta2 / t,
    ))
}

/// Solves the alternate topology `T41_23` by rotating the labels one step
/// and mapping the result back. Its `s1` is adjacent to `P2, P3` and its
/// `s2` to `P4, P1`.
pub fn solve_alternate(q: &Quad) -> Result<FullTree, Error> {
    let rotated = q.rotate_labels();
    let (_, s1, s2, edge_lengths, length) =
        solve_positioned(&rotated).map_err(Error::NoFullTree)?;
    Ok(FullTree { topology: Topology::T41_23, s1, s2, edge_lengths, length })
}

/// Outcome of solving both topologies and keeping the shorter tree.
#[derive(Debug, Clone, PartialEq)]
pub enum Smt4Result {
    Solved {
        chosen: FullTree,
        /// The longer tree, when both topologies exist.
        alternate: Option<FullTree>,
        /// Why the other topology failed, when only one exists.
        alternate_failure: Option<FailedDeltas>,
        /// Both trees are minimal (squared lengths equal within
        /// `eps_geom * scale^2`, i.e. the diagonals are orthogonal).
        /// `chosen` is then `T12_34` by convention.
        tie: bool,
        /// `d² - d̃²` (T12_34 minus T41_23), present when both exist;
        /// always equals `-2 ⟨P1P3, P2P4⟩`.
        length_gap_sq: Option<f64>,
    },
    NoFullTree {
        primary: FailedDeltas,
        alternate: FailedDeltas,
    },
}

/// Attempts both topologies and chooses the shorter full tree.
pub fn solve_smt4(q: &Quad) -> Smt4Result {
    let primary = solve_positioned(q).map(|(_, s1, s2, edge_lengths, length)| FullTree {
        topology: Topology::T12_34,
        s1,
        s2,
        edge_lengths,
        length,
    });
    let alternate = solve_alternate_inner(q);
    match (primary, alternate) {
        (Ok(a), Ok(b)) => {
            let gap = a.length * a.length - b.length * b.length;
            let tie = gap.abs() <= q.tolerance().eps_geom() * q.scale() * q.scale();
            let (chosen, other) = if tie || a.length <= b.length { (a, b) } else { (b, a) };
            Smt4Result::Solved {
                chosen,
                alternate: Some(other),
                alternate_failure: None,
                tie,
                length_gap_sq: Some(gap),
            }
        }
        (Ok(a), Err(f)) => Smt4Result::Solved {
            chosen: a,
            alternate: None,
            alternate_failure: Some(f),
            tie: false,
            length_gap_sq: None,
        },
        (Err(f), Ok(b)) => Smt4Result::Solved {
            chosen: b,
            alternate: None,
            alternate_failure: Some(f),
            tie: false,
            length_gap_sq: None,
        },
        (Err(f1), Err(f2)) => Smt4Result::NoFullTree { primary: f1, alternate: f2 },
    }
}

fn solve_alternate_inner(q: &Quad) -> Result<FullTree, FailedDeltas> {
    let rotated = q.rotate_labels();
    let (_, s1, s2, edge_lengths, length) = solve_positioned(&rotated)?;
    Ok(FullTree { topology: Topology::T41_23, s1, s2, edge_lengths, length })
}

/// Tree length of topology `T12_34` from the diagonals alone:
/// `d² = r13² + r24² + 2 r13 r24 cos(2π/3 - ψ)` with ψ the diagonal
/// angle. An independent cross-check of the `√(t/3)` formula; it does not
/// require the tree to exist.
pub fn length_via_diagonals(q: &Quad) -> f64 {
    let r13 = q.p1().distance(q.p3());
    let r24 = q.p2().distance(q.p4());
    let psi = q.diagonal_angle();
    let dsq = r13 * r13 + r24 * r24
        + 2.0 * r13 * r24 * float::cos(2.0 * core::f64::consts::FRAC_PI_3 - psi);
    float::sqrt(dsq.max(0.0))
}

/// Apexes of the equilateral triangles erected outward on `P1 P2` and on
/// `P3 P4`. Their span `|Q1 Q2|` equals the `T12_34` tree length.
pub fn q_points(q: &Quad) -> (Point, Point) {
    (equilateral_apex(q.p1(), q.p2()), equilateral_apex(q.p3(), q.p4()))
}

/// The two circles and distinguished points of the wandering-terminal
/// analysis with `P1, P2, P4` fixed and `P3` variable.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LocusReport {
    /// Locus of the first junction: the circle over `P1 P2`.
    pub c_small: Circle,
    /// Locus of the second junction.
    pub c_hat: Circle,
    /// Apex of the equilateral triangle on `P1 P2`.
    pub q1: Point,
    /// Intersection of `c_small` with the diagonal `P2 P4`; lies on both
    /// circles.
    pub i_point: Point,
    /// Doubled area of the triangle `P1 P2 P4` (positive by precondition).
    pub s_124: f64,
}

/// Computes the loci of both junctions of topology `T12_34` while `P3`
/// wanders. Requires `P1, P2, P4` non-collinear and counterclockwise
/// (positive doubled area), because the radius formula uses the area with
/// its sign.
pub fn wandering_loci(
    p1: Point,
    p2: Point,
    p4: Point,
    tol: Tolerance,
) -> Result<LocusReport, Error> {
    let scale = p1.distance(p2).max(p1.distance(p4)).max(p2.distance(p4));
    let s_124 = signed_area2(p1, p2, p4);
    if s_124.abs() <= tol.eps_geom() * scale * scale {
        return Err(Error::CollinearTerminals);
    }
    if s_124 < 0.0 {
        return Err(Error::WrongOrientation);
    }

    let (c_small, q1) = steiner_circle(p1, p2)?;

    let (x1, y1) = (p1.x(), p1.y());
    let (x2, y2) = (p2.x(), p2.y());
    let (x4, y4) = (p4.x(), p4.y());
    let r12s = sq(p1.distance(p2));
    let r14s = sq(p1.distance(p4));
    let r24s = sq(p2.distance(p4));

    let c_hat_center = Point::raw(
        0.5 * (x1 + x4) + (-y1 + 2.0 * y2 - y4) / (2.0 * SQRT_3),
        0.5 * (y1 + y4) + (x1 - 2.0 * x2 + x4) / (2.0 * SQRT_3),
    );
    let r_hat = float::sqrt(((r12s + r14s + r24s) / 2.0 + SQRT_3 * s_124) / 3.0);
    let c_hat = Circle::from_parts(c_hat_center, r_hat);

    let f = s_124 / (SQRT_3 * r24s);
    let i_point = Point::raw(
        x1 + f * (SQRT_3 * (y4 - y2) + x2 - x4),
        y1 + f * (SQRT_3 * (x2 - x4) + y2 - y4),
    );

    Ok(LocusReport { c_small, c_hat, q1, i_point, s_124 })
}

/// One sweep step: the wandering terminal position and what happened.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub p3: Point,
    pub outcome: SweepOutcome,
}

#[derive(Debug, Clone, PartialEq)]
pub enum SweepOutcome {
    /// The quad was valid and the topology existed; reports whether each
    /// junction lies on its predicted circle within `eps_geom * scale`.
    Solved {
        tree: FullTree,
        on_c_small: bool,
        on_c_hat: bool,
    },
    /// `(P1, P2, p3, P4)` is not a strictly convex CCW quadrilateral.
    InvalidQuad(Error),
    /// The quad is valid but topology `T12_34` does not exist there.
    NoFullTree(FailedDeltas),
}

/// Solves topology `T12_34` for every `P3` sample on `path` and checks
/// the junctions against the locus circles. Invalid positions produce
/// diagnostic rows, not errors; only invalid fixed terminals fail.
pub fn loci_sweep(
    p1: Point,
    p2: Point,
    p4: Point,
    path: &[Point],
    tol: Tolerance,
) -> Result<Vec<SweepRow>, Error> {
    let report = wandering_loci(p1, p2, p4, tol)?;
    let mut rows = Vec::with_capacity(path.len());
    for &p3 in path {
        let outcome = match Quad::new(p1, p2, p3, p4, tol) {
            Err(e) => SweepOutcome::InvalidQuad(e),
            Ok(q) => match solve_positioned(&q) {
                Err(f) => SweepOutcome::NoFullTree(f),
                Ok((_, s1, s2, edge_lengths, length)) => {
                    let tree = FullTree {
                        topology: Topology::T12_34,
                        s1,
                        s2,
                        edge_lengths,
                        length,
                    };
                    let dtol = tol.eps_geom() * q.scale();
                    SweepOutcome::Solved {
                        tree,
                        on_c_small: report.c_small.deviation(s1).abs() <= dtol,
                        on_c_hat: report.c_hat.deviation(s2).abs() <= dtol,
                    }
                }
            },
        };
        rows.push(SweepRow { p3, outcome });
    }
    Ok(rows)
}

/// Internal containment identity: `signed_area2` of each quad side with
/// `s1` expressed through the deltas. Exposed for tests via the values it
/// must equal; the solver itself only relies on positivity.
pub fn containment_rhs(s: &Scratch4) -> [f64; 4] {
    let t = s.t_quad;
    let half_sqrt3 = 0.5 * SQRT_3;
    [
        half_sqrt3 * s.delta1 * s.delta2 / t,
        half_sqrt3 * (s.delta * s.delta2 + s.delta2 * s.delta3) / t,
        half_sqrt3 * (s.delta3 * s.delta4 + s.delta3 * s.delta + s.delta4 * s.delta) / t,
        half_sqrt3 * (s.delta * s.delta1 + s.delta1 * s.delta4) / t,
    ]
}

#[inline]
fn sq(v: f64) -> f64 {
    v * v
}
