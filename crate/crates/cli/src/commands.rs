//! Subcommand implementations: solve, report, draw, cross-check.

use std::f64::consts::FRAC_PI_3;
use std::path::PathBuf;

use steiner_core::fermat3::{self, Solution3};
use steiner_core::geom::signed_area2;
use steiner_core::oracle::{self, OracleConfig};
use steiner_core::steiner4::{self, Existence, FullTree, Smt4Result, SweepOutcome, Topology};
use steiner_core::{Point, Quad, Tolerance, Triangle};

use crate::instance::{InstanceFile, parse_point, parse_points};
use crate::report::{
    CheckLine, CircleRepr, InstanceEcho, OracleBlock, Payload, Pt, Report, ScratchRepr,
    SweepRowRepr, TreeRepr,
};
use crate::svg::Figure;
use crate::{LociArgs, Solve3Args, Solve4Args, VerifyArgs};

const COL_TREE: &str = "#d62728";
const COL_ALT: &str = "#1f77b4";
const COL_CIRCLE: &str = "#2ca02c";
const COL_CIRCLE2: &str = "#9467bd";
const COL_AUX: &str = "#7f7f7f";
const COL_ACCENT: &str = "#ff7f0e";

fn fail(code: i32, message: impl AsRef<str>) -> i32 {
    eprintln!("error: {}", message.as_ref());
    code
}

fn echo(inst: &InstanceFile, tol: Tolerance, permutation: Option<Vec<usize>>) -> InstanceEcho {
    InstanceEcho {
        source: inst.source.clone(),
        labels: inst.labels.clone(),
        terminals: inst.terminals.iter().map(|p| Pt::from(*p)).collect(),
        eps_geom: tol.eps_geom(),
        eps_solve: tol.eps_solve(),
        permutation,
    }
}

fn emit(report: &Report, json: Option<&PathBuf>, figure: Option<(String, &PathBuf)>) -> Result<(), String> {
    print!("{}", report.to_text());
    if let Some(path) = json {
        std::fs::write(path, report.to_json()).map_err(|e| format!("cannot write {}: {e}", path.display()))?;
    }
    if let Some((doc, path)) = figure {
        std::fs::write(path, doc).map_err(|e| format!("cannot write {}: {e}", path.display()))?;
    }
    Ok(())
}

pub fn cmd_solve3(args: &Solve3Args) -> i32 {
    let inst = match InstanceFile::load(&args.input, 3) {
        Ok(i) => i,
        Err(e) => return fail(2, e),
    };
    let tol = match inst.tolerance(args.tol) {
        Ok(t) => t,
        Err(e) => return fail(2, e),
    };
    let [p1, p2, p3] = [inst.terminals[0], inst.terminals[1], inst.terminals[2]];
    let triangle = match Triangle::new(p1, p2, p3, tol) {
        Ok(t) => t,
        Err(e) => return fail(2, e.to_string()),
    };

    let sol = fermat3::solve3(&triangle);
    let (circle, q1) = fermat3::steiner_circle(p1, p2).expect("valid triangle has distinct vertices");

    let oracle_block = if args.verify && matches!(sol, Solution3::Interior { .. }) {
        let res = oracle::solve_numeric3(&triangle, &OracleConfig { tol, ..OracleConfig::default() });
        let steiner = sol.steiner().expect("interior");
        let objective_gap = (res.objective - sol.length()).abs();
        let point_gap = res.s.distance(steiner);
        Some(OracleBlock {
            topology: "single-junction".to_string(),
            s1: Pt::from(res.s),
            s2: None,
            objective: res.objective,
            residual_inf: res.residual_inf,
            iters: res.iters,
            converged: res.converged,
            objective_gap,
            point_gap,
            agreement: res.converged
                && objective_gap <= 1e-6 * triangle.scale()
                && point_gap <= 1e-5 * triangle.scale(),
        })
    } else {
        None
    };

    let payload = match sol {
        Solution3::Interior { steiner, length, kappas, s_abs } => Payload::Solution3 {
            status: "interior".to_string(),
            wide_vertex: None,
            steiner: Some(Pt::from(steiner)),
            kappas: Some(kappas),
            s_abs,
            length,
            circle: circle_repr(&circle),
            q1: Pt::from(q1),
        },
        Solution3::DegenerateAtVertex { vertex, length, s_abs } => Payload::Solution3 {
            status: "degenerate_at_vertex".to_string(),
            wide_vertex: Some(vertex),
            steiner: None,
            kappas: None,
            s_abs,
            length,
            circle: circle_repr(&circle),
            q1: Pt::from(q1),
        },
    };

    let report = Report {
        command: "solve3".to_string(),
        instance: echo(&inst, tol, None),
        payload,
        oracle: oracle_block,
        checks: None,
    };

    let figure = args.svg.as_ref().map(|path| {
        let mut fig = Figure::new();
        fig.world_circle(circle.center(), circle.radius(), COL_CIRCLE);
        match sol {
            Solution3::Interior { steiner, .. } => {
                for p in [p1, p2, p3] {
                    fig.segment(steiner, p, COL_TREE, 1.8);
                }
                fig.dot(steiner, 3.0, COL_TREE);
                fig.label(steiner, "S");
            }
            Solution3::DegenerateAtVertex { vertex, .. } => {
                let (apex, others) = match vertex {
                    1 => (p1, [p2, p3]),
                    2 => (p2, [p1, p3]),
                    _ => (p3, [p1, p2]),
                };
                for p in others {
                    fig.segment(apex, p, COL_TREE, 1.8);
                }
            }
        }
        fig.dot(q1, 3.0, COL_AUX);
        fig.label(q1, "Q1");
        for (p, label) in [p1, p2, p3].iter().zip(&inst.labels) {
            fig.dot(*p, 4.0, "#000000");
            fig.label(*p, label.clone());
        }
        (fig.render(), path)
    });

    match emit(&report, args.json.as_ref(), figure) {
        Ok(()) => 0,
        Err(e) => fail(2, e),
    }
}

/// Rotates the quad labels one step so the tree's `s1` pairing comes
/// first, which is the orientation the positioned formulas and the
/// numerical solver share.
fn topology_quad(q: &Quad, topology: Topology) -> Quad {
    match topology {
        Topology::T12_34 => *q,
        Topology::T41_23 => Quad::new(q.p2(), q.p3(), q.p4(), q.p1(), q.tolerance())
            .expect("label rotation preserves validity"),
    }
}

fn oracle_for_tree(q: &Quad, tree: &FullTree, tol: Tolerance, scale: f64) -> OracleBlock {
    let tq = topology_quad(q, tree.topology);
    let res = oracle::solve_numeric(&tq, &OracleConfig { tol, ..OracleConfig::default() });
    let objective_gap = (res.objective - tree.length).abs();
    let point_gap = res.s1.distance(tree.s1).max(res.s2.distance(tree.s2));
    OracleBlock {
        topology: tree.topology.label().to_string(),
        s1: Pt::from(res.s1),
        s2: Some(Pt::from(res.s2)),
        objective: res.objective,
        residual_inf: res.residual_inf,
        iters: res.iters,
        converged: res.converged,
        objective_gap,
        point_gap,
        agreement: res.converged && objective_gap <= 1e-6 * scale && point_gap <= 1e-5 * scale,
    }
}

fn existence_string(e: &Existence) -> String {
    match e {
        Existence::Exists => "exists".to_string(),
        Existence::Fails(f) => format!("fails: {f}"),
    }
}

fn tree_repr(t: &FullTree) -> TreeRepr {
    TreeRepr {
        topology: t.topology.label().to_string(),
        s1: Pt::from(t.s1),
        s2: Pt::from(t.s2),
        edge_lengths: t.edge_lengths,
        length: t.length,
    }
}

fn circle_repr(c: &fermat3::Circle) -> CircleRepr {
    CircleRepr { center: Pt::from(c.center()), radius: c.radius() }
}

/// Edges of a tree as terminal/junction point pairs, in the same order
/// as `edge_lengths`.
fn tree_edges(q: &Quad, tree: &FullTree) -> [(Point, Point); 5] {
    let tq = topology_quad(q, tree.topology);
    [
        (tq.p1(), tree.s1),
        (tq.p2(), tree.s1),
        (tq.p3(), tree.s2),
        (tq.p4(), tree.s2),
        (tree.s1, tree.s2),
    ]
}

pub fn cmd_solve4(args: &Solve4Args) -> i32 {
    let mut inst = match InstanceFile::load(&args.input, 4) {
        Ok(i) => i,
        Err(e) => return fail(2, e),
    };
    let tol = match inst.tolerance(args.tol) {
        Ok(t) => t,
        Err(e) => return fail(2, e),
    };
    let permutation = if args.normalize { Some(normalize(&mut inst)) } else { None };

    let p = &inst.terminals;
    let quad = match Quad::new(p[0], p[1], p[2], p[3], tol) {
        Ok(q) => q,
        Err(e) => return fail(2, e.to_string()),
    };

    let scratch = steiner4::scratch(&quad);
    let primary_existence = steiner4::existence(&quad);
    let alternate_quad = topology_quad(&quad, Topology::T41_23);
    let alternate_existence = steiner4::existence(&alternate_quad);
    let (q1, q2) = steiner4::q_points(&quad);
    let result = steiner4::solve_smt4(&quad);

    let (chosen, alternate, tie, length_gap_sq) = match &result {
        Smt4Result::Solved { chosen, alternate, tie, length_gap_sq, .. } => {
            (Some(*chosen), *alternate, *tie, *length_gap_sq)
        }
        Smt4Result::NoFullTree { .. } => (None, None, false, None),
    };

    let oracle_block = chosen
        .as_ref()
        .map(|tree| oracle_for_tree(&quad, tree, tol, quad.scale()));

    let payload = Payload::Smt4 {
        psi: quad.diagonal_angle(),
        diagonals_dot: quad.diagonals_dot(),
        scratch: scratch_repr(&scratch),
        primary_existence: existence_string(&primary_existence),
        alternate_existence: existence_string(&alternate_existence),
        chosen: chosen.as_ref().map(tree_repr),
        alternate: alternate.as_ref().map(tree_repr),
        tie,
        length_gap_sq,
        q1: Pt::from(q1),
        q2: Pt::from(q2),
        q_span: q1.distance(q2),
    };

    let report = Report {
        command: "solve4".to_string(),
        instance: echo(&inst, tol, permutation),
        payload,
        oracle: oracle_block,
        checks: None,
    };

    let figure = match (&args.svg, &chosen) {
        (Some(path), Some(tree)) => {
            let mut fig = Figure::new();
            // Construction circles over the paired sides.
            let (c1, _) = fermat3::steiner_circle(quad.p1(), quad.p2()).expect("distinct");
            let (c2, _) = fermat3::steiner_circle(quad.p3(), quad.p4()).expect("distinct");
            fig.world_circle(c1.center(), c1.radius(), COL_CIRCLE);
            fig.world_circle(c2.center(), c2.radius(), COL_CIRCLE2);
            fig.dashed_segment(q1, q2, COL_AUX, 1.0);
            if let Some(alt) = &alternate {
                for (a, b) in tree_edges(&quad, alt) {
                    fig.dashed_segment(a, b, COL_ALT, 1.4);
                }
                fig.dot(alt.s1, 3.0, COL_ALT);
                fig.dot(alt.s2, 3.0, COL_ALT);
            }
            for (a, b) in tree_edges(&quad, tree) {
                fig.segment(a, b, COL_TREE, 1.8);
            }
            fig.dot(tree.s1, 3.0, COL_TREE);
            fig.label(tree.s1, "S1");
            fig.dot(tree.s2, 3.0, COL_TREE);
            fig.label(tree.s2, "S2");
            fig.dot(q1, 3.0, COL_AUX);
            fig.label(q1, "Q1");
            fig.dot(q2, 3.0, COL_AUX);
            fig.label(q2, "Q2");
            for (p, label) in quad.points().iter().zip(&inst.labels) {
                fig.dot(*p, 4.0, "#000000");
                fig.label(*p, label.clone());
            }
            Some((fig.render(), path))
        }
        _ => None,
    };

    let no_tree = chosen.is_none();
    match emit(&report, args.json.as_ref(), figure) {
        Ok(()) => {
            if no_tree {
                3
            } else {
                0
            }
        }
        Err(e) => fail(2, e),
    }
}

fn scratch_repr(s: &steiner4::Scratch4) -> ScratchRepr {
    ScratchRepr {
        tau1: s.tau1,
        tau2: s.tau2,
        eta1: s.eta1,
        eta2: s.eta2,
        delta: s.delta,
        delta1: s.delta1,
        delta2: s.delta2,
        delta3: s.delta3,
        delta4: s.delta4,
        t_quad: s.t_quad,
    }
}

/// Reorders the terminals into counterclockwise convex-hull order
/// starting from the lexicographically smallest point. Returns the
/// 1-based original indices in output order.
fn normalize(inst: &mut InstanceFile) -> Vec<usize> {
    let pts = inst.terminals.clone();
    let cx = pts.iter().map(|p| p.x()).sum::<f64>() / pts.len() as f64;
    let cy = pts.iter().map(|p| p.y()).sum::<f64>() / pts.len() as f64;
    let mut order: Vec<usize> = (0..pts.len()).collect();
    order.sort_by(|&a, &b| {
        let ta = (pts[a].y() - cy).atan2(pts[a].x() - cx);
        let tb = (pts[b].y() - cy).atan2(pts[b].x() - cx);
        ta.partial_cmp(&tb).expect("finite angles")
    });
    // Start the cycle at the lexicographically smallest point.
    let smallest = (0..pts.len())
        .min_by(|&a, &b| {
            (pts[a].x(), pts[a].y())
                .partial_cmp(&(pts[b].x(), pts[b].y()))
                .expect("finite coordinates")
        })
        .expect("non-empty");
    let offset = order.iter().position(|&i| i == smallest).expect("present");
    order.rotate_left(offset);

    inst.terminals = order.iter().map(|&i| pts[i]).collect();
    inst.labels = order.iter().map(|&i| inst.labels[i].clone()).collect();
    order.iter().map(|&i| i + 1).collect()
}

/// Evenly resamples a polyline by arc length into `samples` points.
/// A single vertex or a zero-length path yields one sample.
fn resample(polyline: &[Point], samples: usize) -> Vec<Point> {
    if polyline.is_empty() {
        return Vec::new();
    }
    let mut cumulative = vec![0.0f64];
    for w in polyline.windows(2) {
        let last = *cumulative.last().expect("non-empty");
        cumulative.push(last + w[0].distance(w[1]));
    }
    let total = *cumulative.last().expect("non-empty");
    if total == 0.0 || samples <= 1 {
        return vec![polyline[0]];
    }
    let mut out = Vec::with_capacity(samples);
    for i in 0..samples {
        let target = total * i as f64 / (samples - 1) as f64;
        let seg = cumulative
            .windows(2)
            .position(|w| target <= w[1])
            .unwrap_or(polyline.len() - 2);
        let span = cumulative[seg + 1] - cumulative[seg];
        let t = if span == 0.0 { 0.0 } else { (target - cumulative[seg]) / span };
        let (a, b) = (polyline[seg], polyline[seg + 1]);
        out.push(
            Point::new(a.x() + t * (b.x() - a.x()), a.y() + t * (b.y() - a.y()))
                .expect("interpolation of finite points"),
        );
    }
    out
}

pub fn cmd_loci(args: &LociArgs) -> i32 {
    let parse = |s: &str| parse_point(s);
    let (p1, p2, p4) = match (parse(&args.p1), parse(&args.p2), parse(&args.p4)) {
        (Ok(a), Ok(b), Ok(c)) => (a, b, c),
        (Err(e), _, _) | (_, Err(e), _) | (_, _, Err(e)) => return fail(2, e),
    };
    let tol = match Tolerance::new(args.tol.unwrap_or(1e-9), 1e-12f64.min(args.tol.unwrap_or(1e-9))) {
        Ok(t) => t,
        Err(e) => return fail(2, e.to_string()),
    };
    let polyline = match parse_points(&args.path) {
        Ok(p) if !p.is_empty() => p,
        Ok(_) => return fail(2, "empty --path"),
        Err(e) => return fail(2, e),
    };
    let samples = resample(&polyline, args.samples);

    let locus = match steiner4::wandering_loci(p1, p2, p4, tol) {
        Ok(l) => l,
        Err(e) => return fail(2, e.to_string()),
    };
    let rows = match steiner4::loci_sweep(p1, p2, p4, &samples, tol) {
        Ok(r) => r,
        Err(e) => return fail(2, e.to_string()),
    };

    let mut row_reprs = Vec::with_capacity(rows.len());
    let mut solved = 0usize;
    let mut s1_trail = Vec::new();
    let mut s2_trail = Vec::new();
    for row in &rows {
        let repr = match &row.outcome {
            SweepOutcome::Solved { tree, on_c_small, on_c_hat } => {
                solved += 1;
                s1_trail.push(tree.s1);
                s2_trail.push(tree.s2);
                SweepRowRepr {
                    p3: Pt::from(row.p3),
                    status: "solved".to_string(),
                    s1: Some(Pt::from(tree.s1)),
                    s2: Some(Pt::from(tree.s2)),
                    length: Some(tree.length),
                    on_c_small: Some(*on_c_small),
                    on_c_hat: Some(*on_c_hat),
                }
            }
            SweepOutcome::InvalidQuad(e) => SweepRowRepr {
                p3: Pt::from(row.p3),
                status: format!("invalid: {e}"),
                s1: None,
                s2: None,
                length: None,
                on_c_small: None,
                on_c_hat: None,
            },
            SweepOutcome::NoFullTree(f) => SweepRowRepr {
                p3: Pt::from(row.p3),
                status: format!("no full tree: {f}"),
                s1: None,
                s2: None,
                length: None,
                on_c_small: None,
                on_c_hat: None,
            },
        };
        row_reprs.push(repr);
    }
    let diagnostics = rows.len() - solved;

    let labels = vec!["P1".to_string(), "P2".to_string(), "P4".to_string()];
    let instance = InstanceEcho {
        source: "inline".to_string(),
        labels: labels.clone(),
        terminals: vec![Pt::from(p1), Pt::from(p2), Pt::from(p4)],
        eps_geom: tol.eps_geom(),
        eps_solve: tol.eps_solve(),
        permutation: None,
    };
    let report = Report {
        command: "loci".to_string(),
        instance,
        payload: Payload::Loci {
            c_small: circle_repr(&locus.c_small),
            c_hat: circle_repr(&locus.c_hat),
            q1: Pt::from(locus.q1),
            i_point: Pt::from(locus.i_point),
            s_124: locus.s_124,
            rows: row_reprs,
            solved,
            diagnostics,
        },
        oracle: None,
        checks: None,
    };

    let figure = args.svg.as_ref().map(|path| {
        let mut fig = Figure::new();
        fig.world_circle(locus.c_small.center(), locus.c_small.radius(), COL_CIRCLE);
        fig.world_circle(locus.c_hat.center(), locus.c_hat.radius(), COL_CIRCLE2);
        fig.polyline(samples.clone(), COL_AUX, 1.0, true);
        fig.polyline(s1_trail.clone(), COL_TREE, 1.6, false);
        fig.polyline(s2_trail.clone(), COL_CIRCLE2, 1.6, false);
        fig.dot(locus.i_point, 3.0, COL_ACCENT);
        fig.label(locus.i_point, "I");
        for (p, label) in [p1, p2, p4].iter().zip(&labels) {
            fig.dot(*p, 4.0, "#000000");
            fig.label(*p, label.clone());
        }
        (fig.render(), path)
    });

    match emit(&report, args.json.as_ref(), figure) {
        Ok(()) => 0,
        Err(e) => fail(2, e),
    }
}

fn angle_at(s: Point, a: Point, b: Point) -> f64 {
    let (ux, uy) = (a.x() - s.x(), a.y() - s.y());
    let (vx, vy) = (b.x() - s.x(), b.y() - s.y());
    (ux * vy - uy * vx).abs().atan2(ux * vx + uy * vy)
}

pub fn cmd_verify(args: &VerifyArgs) -> i32 {
    let inst = match InstanceFile::load(&args.input, 4) {
        Ok(i) => i,
        Err(e) => return fail(2, e),
    };
    let tol = match inst.tolerance(args.tol) {
        Ok(t) => t,
        Err(e) => return fail(2, e),
    };
    let check_point = match args.check_point.as_deref().map(parse_point).transpose() {
        Ok(p) => p,
        Err(e) => return fail(2, e),
    };
    let p = &inst.terminals;
    let quad = match Quad::new(p[0], p[1], p[2], p[3], tol) {
        Ok(q) => q,
        Err(e) => return fail(2, e.to_string()),
    };

    let result = steiner4::solve_smt4(&quad);
    let Smt4Result::Solved { chosen, alternate, tie, length_gap_sq, .. } = &result else {
        let report = no_tree_report(&inst, tol, &quad, &result);
        return match emit(&report, args.json.as_ref(), None) {
            Ok(()) => 3,
            Err(e) => fail(2, e),
        };
    };

    // Inject the corrupted junction, if requested, into the checked tree.
    let mut checked = *chosen;
    if let Some(pt) = check_point {
        checked.s1 = pt;
    }

    let tq = topology_quad(&quad, checked.topology);
    let scale = quad.scale();
    let len_tol = tol.eps_geom() * scale;
    let area_tol = tol.eps_geom() * scale * scale;
    let s = steiner4::scratch(&tq);
    let mut checks = Vec::new();
    let mut push = |name: &str, passed: bool, value: f64| {
        checks.push(CheckLine { name: name.to_string(), passed, value });
    };

    // Delta sum against t / sqrt(3).
    let dsum = s.delta + s.delta1 + s.delta2 + s.delta3 + s.delta4;
    let dev = (dsum - s.t_quad / 3.0f64.sqrt()).abs();
    push("delta_sum", dev <= area_tol, dev);

    // Edge lengths recomputed from the junction positions.
    let esum: f64 = tree_edges(&quad, &checked).iter().map(|(a, b)| a.distance(*b)).sum();
    let dev = (esum - checked.length).abs();
    push("edge_sum", dev <= len_tol, dev);

    // All six junction angles at 120 degrees.
    let mut worst = 0.0f64;
    for (v, a, b) in [
        (checked.s1, tq.p1(), tq.p2()),
        (checked.s1, tq.p1(), checked.s2),
        (checked.s1, tq.p2(), checked.s2),
        (checked.s2, tq.p3(), tq.p4()),
        (checked.s2, tq.p3(), checked.s1),
        (checked.s2, tq.p4(), checked.s1),
    ] {
        worst = worst.max((angle_at(v, a, b) - 2.0 * FRAC_PI_3).abs());
    }
    push("junction_angles", worst <= 1e-9, worst);

    // Apex span |Q1 Q2| equals the tree length.
    let (q1, q2) = steiner4::q_points(&tq);
    let dev = (q1.distance(q2) - checked.length).abs();
    push("q_span", dev <= len_tol, dev);

    // Diagonal-cosine length formula.
    let dev = (steiner4::length_via_diagonals(&tq) - checked.length).abs();
    push("diagonal_length", dev <= len_tol, dev);

    // Squared-length gap against the diagonal inner product.
    if let Some(gap) = length_gap_sq {
        let dev = (gap + 2.0 * quad.diagonals_dot()).abs();
        push("length_gap", dev <= area_tol, dev);
    }

    // Stationarity of the checked junctions.
    let residual = oracle::stationary_residual(&tq, checked.s1, checked.s2)
        .map(|r| r.inf_norm)
        .unwrap_or(f64::INFINITY);
    push("stationarity", residual <= 1e-9, residual);

    // Independent minimizer agreement.
    let ob = oracle_for_tree(&quad, &checked, tol, scale);
    push("oracle_objective", ob.objective_gap <= 1e-6 * scale, ob.objective_gap);
    push("oracle_points", ob.point_gap <= 1e-5 * scale, ob.point_gap);

    // Both junctions strictly inside the quadrilateral.
    let mut min_area = f64::MAX;
    let pts = tq.points();
    for s_pt in [checked.s1, checked.s2] {
        for i in 0..4 {
            min_area = min_area.min(signed_area2(pts[i], pts[(i + 1) % 4], s_pt));
        }
    }
    push("containment", min_area > 0.0, min_area);

    let failed = checks.iter().any(|c| !c.passed);

    let (q1, q2) = steiner4::q_points(&quad);
    let payload = Payload::Smt4 {
        psi: quad.diagonal_angle(),
        diagonals_dot: quad.diagonals_dot(),
        scratch: scratch_repr(&steiner4::scratch(&quad)),
        primary_existence: existence_string(&steiner4::existence(&quad)),
        alternate_existence: existence_string(&steiner4::existence(&topology_quad(
            &quad,
            Topology::T41_23,
        ))),
        chosen: Some(tree_repr(&checked)),
        alternate: alternate.as_ref().map(tree_repr),
        tie: *tie,
        length_gap_sq: *length_gap_sq,
        q1: Pt::from(q1),
        q2: Pt::from(q2),
        q_span: q1.distance(q2),
    };
    let report = Report {
        command: "verify".to_string(),
        instance: echo(&inst, tol, None),
        payload,
        oracle: Some(ob),
        checks: Some(checks),
    };

    match emit(&report, args.json.as_ref(), None) {
        Ok(()) => {
            if failed {
                4
            } else {
                0
            }
        }
        Err(e) => fail(2, e),
    }
}

fn no_tree_report(
    inst: &InstanceFile,
    tol: Tolerance,
    quad: &Quad,
    result: &Smt4Result,
) -> Report {
    let (primary, alternate) = match result {
        Smt4Result::NoFullTree { primary, alternate } => {
            (format!("fails: {primary}"), format!("fails: {alternate}"))
        }
        Smt4Result::Solved { .. } => ("exists".to_string(), "exists".to_string()),
    };
    let (q1, q2) = steiner4::q_points(quad);
    Report {
        command: "verify".to_string(),
        instance: echo(inst, tol, None),
        payload: Payload::Smt4 {
            psi: quad.diagonal_angle(),
            diagonals_dot: quad.diagonals_dot(),
            scratch: scratch_repr(&steiner4::scratch(quad)),
            primary_existence: primary,
            alternate_existence: alternate,
            chosen: None,
            alternate: None,
            tie: false,
            length_gap_sq: None,
            q1: Pt::from(q1),
            q2: Pt::from(q2),
            q_span: q1.distance(q2),
        },
        oracle: None,
        checks: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: f64, y: f64) -> Point {
        Point::new(x, y).unwrap()
    }

    #[test]
    fn resample_endpoints_and_zero_length() {
        let line = [pt(0.0, 0.0), pt(10.0, 0.0)];
        let s = resample(&line, 5);
        assert_eq!(s.len(), 5);
        assert_eq!(s[0], line[0]);
        assert_eq!(s[4], line[1]);
        assert!((s[2].x() - 5.0).abs() < 1e-12);

        let point = [pt(3.0, 3.0), pt(3.0, 3.0)];
        assert_eq!(resample(&point, 50).len(), 1);
        assert_eq!(resample(&[pt(1.0, 2.0)], 50).len(), 1);
    }

    #[test]
    fn resample_follows_corners() {
        let bent = [pt(0.0, 0.0), pt(1.0, 0.0), pt(1.0, 1.0)];
        let s = resample(&bent, 3);
        assert_eq!(s.len(), 3);
        assert_eq!(s[1], pt(1.0, 0.0));
    }

    #[test]
    fn normalize_reorders_to_ccw_from_lexicographic_min() {
        // A clockwise square given in scrambled order.
        let mut inst = InstanceFile {
            terminals: vec![pt(1.0, 1.0), pt(0.0, 0.0), pt(1.0, 0.0), pt(0.0, 1.0)],
            labels: vec!["a".into(), "b".into(), "c".into(), "d".into()],
            eps_geom: None,
            eps_solve: None,
            source: "inline".into(),
        };
        let perm = normalize(&mut inst);
        let q = Quad::new(
            inst.terminals[0],
            inst.terminals[1],
            inst.terminals[2],
            inst.terminals[3],
            Tolerance::default(),
        );
        assert!(q.is_ok(), "normalized order should validate");
        assert_eq!(inst.terminals[0], pt(0.0, 0.0));
        // Labels travel with their points.
        assert_eq!(inst.labels[0], "b");
        assert_eq!(perm.len(), 4);
        let mut sorted = perm.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, vec![1, 2, 3, 4]);
    }

    #[test]
    fn topology_quad_rotation() {
        let q = Quad::new(pt(2.0, 6.0), pt(1.0, 1.0), pt(9.0, 2.0), pt(6.0, 7.0), Tolerance::default())
            .unwrap();
        let r = topology_quad(&q, Topology::T41_23);
        assert_eq!(r.p1(), q.p2());
        assert_eq!(r.p4(), q.p1());
        let same = topology_quad(&q, Topology::T12_34);
        assert_eq!(same.p1(), q.p1());
    }
}
