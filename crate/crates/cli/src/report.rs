//! Report model shared by the text and JSON outputs.
//!
//! Rendering is deterministic: fixed field order, floats in shortest
//! round-trip decimal form (`{}` for geometry, `{:e}` for tolerances and
//! residuals), so identical input and flags produce byte-identical
//! reports.

use std::fmt::Write as _;

use serde::Serialize;
use steiner_core::Point;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Pt {
    pub x: f64,
    pub y: f64,
}

impl From<Point> for Pt {
    fn from(p: Point) -> Self {
        Pt { x: p.x(), y: p.y() }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct InstanceEcho {
    pub source: String,
    pub labels: Vec<String>,
    pub terminals: Vec<Pt>,
    pub eps_geom: f64,
    pub eps_solve: f64,
    /// 1-based original indices in output order, when `--normalize`
    /// reordered the input.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub permutation: Option<Vec<usize>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CircleRepr {
    pub center: Pt,
    pub radius: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct TreeRepr {
    pub topology: String,
    pub s1: Pt,
    pub s2: Pt,
    /// `[|A1 s1|, |A2 s1|, |A3 s2|, |A4 s2|, |s1 s2|]` in topology order.
    pub edge_lengths: [f64; 5],
    pub length: f64,
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
#[allow(clippy::large_enum_variant)] // built once per invocation
pub enum Payload {
    Solution3 {
        status: String,
        #[serde(skip_serializing_if = "Option::is_none")]
        wide_vertex: Option<usize>,
        #[serde(skip_serializing_if = "Option::is_none")]
        steiner: Option<Pt>,
        #[serde(skip_serializing_if = "Option::is_none")]
        kappas: Option<[f64; 3]>,
        s_abs: f64,
        length: f64,
        circle: CircleRepr,
        q1: Pt,
    },
    Smt4 {
        psi: f64,
        diagonals_dot: f64,
        scratch: ScratchRepr,
        primary_existence: String,
        alternate_existence: String,
        #[serde(skip_serializing_if = "Option::is_none")]
        chosen: Option<TreeRepr>,
        #[serde(skip_serializing_if = "Option::is_none")]
        alternate: Option<TreeRepr>,
        tie: bool,
        #[serde(skip_serializing_if = "Option::is_none")]
        length_gap_sq: Option<f64>,
        q1: Pt,
        q2: Pt,
        q_span: f64,
    },
    Loci {
        c_small: CircleRepr,
        c_hat: CircleRepr,
        q1: Pt,
        i_point: Pt,
        s_124: f64,
        rows: Vec<SweepRowRepr>,
        solved: usize,
        diagnostics: usize,
    },
}

#[derive(Debug, Clone, Serialize)]
pub struct ScratchRepr {
    pub tau1: f64,
    pub tau2: f64,
    pub eta1: f64,
    pub eta2: f64,
    pub delta: f64,
    pub delta1: f64,
    pub delta2: f64,
    pub delta3: f64,
    pub delta4: f64,
    pub t_quad: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepRowRepr {
    pub p3: Pt,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s1: Option<Pt>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s2: Option<Pt>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub length: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub on_c_small: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub on_c_hat: Option<bool>,
}

#[derive(Debug, Clone, Serialize)]
pub struct OracleBlock {
    pub topology: String,
    pub s1: Pt,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s2: Option<Pt>,
    pub objective: f64,
    pub residual_inf: f64,
    pub iters: u32,
    pub converged: bool,
    pub objective_gap: f64,
    pub point_gap: f64,
    pub agreement: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckLine {
    pub name: String,
    pub passed: bool,
    pub value: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub instance: InstanceEcho,
    pub payload: Payload,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleBlock>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub checks: Option<Vec<CheckLine>>,
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialization");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let w = &mut out;
        writeln!(w, "steiner {}", self.command).unwrap();
        writeln!(w, "instance: {}", self.instance.source).unwrap();
        for (label, t) in self.instance.labels.iter().zip(&self.instance.terminals) {
            writeln!(w, "  {label}: ({}, {})", t.x, t.y).unwrap();
        }
        writeln!(w, "  eps_geom: {:e}", self.instance.eps_geom).unwrap();
        writeln!(w, "  eps_solve: {:e}", self.instance.eps_solve).unwrap();
        if let Some(perm) = &self.instance.permutation {
            let parts: Vec<String> = perm.iter().map(|i| i.to_string()).collect();
            writeln!(w, "  normalize_permutation: [{}]", parts.join(", ")).unwrap();
        }
        match &self.payload {
            Payload::Solution3 {
                status,
                wide_vertex,
                steiner,
                kappas,
                s_abs,
                length,
                circle,
                q1,
            } => {
                writeln!(w, "solution:").unwrap();
                writeln!(w, "  status: {status}").unwrap();
                if let Some(v) = wide_vertex {
                    writeln!(w, "  wide_vertex: {v}").unwrap();
                }
                if let Some(s) = steiner {
                    writeln!(w, "  steiner: ({}, {})", s.x, s.y).unwrap();
                }
                if let Some(k) = kappas {
                    writeln!(w, "  kappas: [{}, {}, {}]", k[0], k[1], k[2]).unwrap();
                }
                writeln!(w, "  s_abs: {s_abs}").unwrap();
                writeln!(w, "  length: {length}").unwrap();
                writeln!(w, "construction:").unwrap();
                write_circle(w, "circle", circle);
                writeln!(w, "  q1: ({}, {})", q1.x, q1.y).unwrap();
            }
            Payload::Smt4 {
                psi,
                diagonals_dot,
                scratch,
                primary_existence,
                alternate_existence,
                chosen,
                alternate,
                tie,
                length_gap_sq,
                q1,
                q2,
                q_span,
            } => {
                writeln!(w, "quad:").unwrap();
                writeln!(w, "  psi: {psi}").unwrap();
                writeln!(w, "  diagonals_dot: {diagonals_dot}").unwrap();
                writeln!(w, "scratch:").unwrap();
                for (name, v) in [
                    ("tau1", scratch.tau1),
                    ("tau2", scratch.tau2),
                    ("eta1", scratch.eta1),
                    ("eta2", scratch.eta2),
                    ("delta", scratch.delta),
                    ("delta1", scratch.delta1),
                    ("delta2", scratch.delta2),
                    ("delta3", scratch.delta3),
                    ("delta4", scratch.delta4),
                    ("t_quad", scratch.t_quad),
                ] {
                    writeln!(w, "  {name}: {v}").unwrap();
                }
                writeln!(w, "existence:").unwrap();
                writeln!(w, "  T12_34: {primary_existence}").unwrap();
                writeln!(w, "  T41_23: {alternate_existence}").unwrap();
                if let Some(tree) = chosen {
                    write_tree(w, "chosen", tree);
                }
                if let Some(tree) = alternate {
                    write_tree(w, "alternate", tree);
                }
                writeln!(w, "comparison:").unwrap();
                writeln!(w, "  tie: {tie}").unwrap();
                if let Some(gap) = length_gap_sq {
                    writeln!(w, "  length_gap_sq: {gap}").unwrap();
                }
                writeln!(w, "construction:").unwrap();
                writeln!(w, "  q1: ({}, {})", q1.x, q1.y).unwrap();
                writeln!(w, "  q2: ({}, {})", q2.x, q2.y).unwrap();
                writeln!(w, "  q_span: {q_span}").unwrap();
            }
            Payload::Loci { c_small, c_hat, q1, i_point, s_124, rows, solved, diagnostics } => {
                writeln!(w, "loci:").unwrap();
                write_circle(w, "c_small", c_small);
                write_circle(w, "c_hat", c_hat);
                writeln!(w, "  q1: ({}, {})", q1.x, q1.y).unwrap();
                writeln!(w, "  i_point: ({}, {})", i_point.x, i_point.y).unwrap();
                writeln!(w, "  s_124: {s_124}").unwrap();
                writeln!(w, "sweep: {} rows, {} solved, {} diagnostic", rows.len(), solved, diagnostics)
                    .unwrap();
                for row in rows {
                    write!(w, "  p3 ({}, {}): {}", row.p3.x, row.p3.y, row.status).unwrap();
                    if let (Some(s1), Some(s2), Some(len)) = (&row.s1, &row.s2, row.length) {
                        write!(
                            w,
                            " s1 ({}, {}) s2 ({}, {}) length {} on_c {}/{}",
                            s1.x,
                            s1.y,
                            s2.x,
                            s2.y,
                            len,
                            row.on_c_small.unwrap_or(false),
                            row.on_c_hat.unwrap_or(false)
                        )
                        .unwrap();
                    }
                    writeln!(w).unwrap();
                }
            }
        }
        if let Some(oracle) = &self.oracle {
            writeln!(w, "oracle:").unwrap();
            writeln!(w, "  topology: {}", oracle.topology).unwrap();
            writeln!(w, "  s1: ({}, {})", oracle.s1.x, oracle.s1.y).unwrap();
            if let Some(s2) = &oracle.s2 {
                writeln!(w, "  s2: ({}, {})", s2.x, s2.y).unwrap();
            }
            writeln!(w, "  objective: {}", oracle.objective).unwrap();
            writeln!(w, "  residual_inf: {:e}", oracle.residual_inf).unwrap();
            writeln!(w, "  iters: {}", oracle.iters).unwrap();
            writeln!(w, "  converged: {}", oracle.converged).unwrap();
            writeln!(w, "  objective_gap: {:e}", oracle.objective_gap).unwrap();
            writeln!(w, "  point_gap: {:e}", oracle.point_gap).unwrap();
            writeln!(w, "  agreement: {}", oracle.agreement).unwrap();
        }
        if let Some(checks) = &self.checks {
            writeln!(w, "checks:").unwrap();
            for c in checks {
                writeln!(
                    w,
                    "  {}: {} ({:e})",
                    c.name,
                    if c.passed { "PASS" } else { "FAIL" },
                    c.value
                )
                .unwrap();
            }
            let failed = checks.iter().filter(|c| !c.passed).count();
            writeln!(w, "verdict: {}", if failed == 0 { "all checks passed" } else { "FAILED" })
                .unwrap();
        }
        out
    }
}

fn write_circle(w: &mut String, name: &str, c: &CircleRepr) {
    writeln!(
        w,
        "  {name}: center ({}, {}) radius {}",
        c.center.x, c.center.y, c.radius
    )
    .unwrap();
}

fn write_tree(w: &mut String, role: &str, t: &TreeRepr) {
    writeln!(w, "{role}: {}", t.topology).unwrap();
    writeln!(w, "  s1: ({}, {})", t.s1.x, t.s1.y).unwrap();
    writeln!(w, "  s2: ({}, {})", t.s2.x, t.s2.y).unwrap();
    let parts: Vec<String> = t.edge_lengths.iter().map(|e| format!("{e}")).collect();
    writeln!(w, "  edge_lengths: [{}]", parts.join(", ")).unwrap();
    writeln!(w, "  length: {}", t.length).unwrap();
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Report {
        Report {
            command: "solve3".into(),
            instance: InstanceEcho {
                source: "inline".into(),
                labels: vec!["P1".into(), "P2".into(), "P3".into()],
                terminals: vec![
                    Pt { x: 4.0, y: 4.0 },
                    Pt { x: 2.0, y: 1.0 },
                    Pt { x: 7.0, y: 1.0 },
                ],
                eps_geom: 1e-9,
                eps_solve: 1e-12,
                permutation: None,
            },
            payload: Payload::Solution3 {
                status: "interior".into(),
                wide_vertex: None,
                steiner: Some(Pt { x: 4.108, y: 2.4166 }),
                kappas: Some([1.0, 2.0, 3.0]),
                s_abs: 15.0,
                length: 7.347,
                circle: CircleRepr { center: Pt { x: 3.0, y: 2.5 }, radius: 2.0 },
                q1: Pt { x: 0.4, y: 4.2 },
            },
            oracle: None,
            checks: None,
        }
    }

    #[test]
    fn text_rendering_is_deterministic() {
        let a = sample().to_text();
        let b = sample().to_text();
        assert_eq!(a, b);
        assert!(a.starts_with("steiner solve3\n"));
        assert!(a.contains("steiner: (4.108, 2.4166)"));
        assert!(a.contains("eps_solve: 1e-12"));
    }

    #[test]
    fn json_round_trips_full_precision() {
        let r = sample();
        let json = r.to_json();
        let back: serde_json::Value = serde_json::from_str(&json).unwrap();
        let x = back["payload"]["steiner"]["x"].as_f64().unwrap();
        assert_eq!(x, 4.108);
        // Shortest round-trip form preserves every bit of a double.
        let tricky = 0.1 + 0.2;
        let s = format!("{tricky}");
        let parsed: f64 = s.parse().unwrap();
        assert_eq!(parsed, tricky);
    }
}
