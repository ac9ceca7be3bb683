//! End-to-end acceptance for the CLI: deterministic reports on the
//! worked fixtures, the exit-code contract, and stable SVG snapshots.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_steiner"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn golden(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("missing golden {name}: {e}"))
}

fn fixture(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

struct TempDir(PathBuf);

impl TempDir {
    fn new(tag: &str) -> Self {
        let dir = std::env::temp_dir().join(format!("steiner-{tag}-{}", std::process::id()));
        std::fs::create_dir_all(&dir).expect("create temp dir");
        Self(dir)
    }

    fn path(&self, name: &str) -> PathBuf {
        self.0.join(name)
    }
}

impl Drop for TempDir {
    fn drop(&mut self) {
        let _ = std::fs::remove_dir_all(&self.0);
    }
}

const QUAD_A: [&str; 4] = ["2,6", "1,1", "9,2", "6,7"];

#[test]
fn cli_end_to_end() {
    let tmp = TempDir::new("e2e");

    // Deterministic report, byte-identical across runs and to the golden.
    let first = run(&["solve4", "2,6", "1,1", "9,2", "6,7"]);
    assert!(first.status.success());
    let second = run(&["solve4", "2,6", "1,1", "9,2", "6,7"]);
    assert_eq!(first.stdout, second.stdout, "report not deterministic");
    assert_eq!(stdout(&first), golden("solve4_report.txt"), "report drifted from golden");

    // The other subcommands are deterministic too.
    for args in [
        vec!["solve3", "4,4", "2,1", "7,1", "--verify"],
        vec!["verify", "2,6", "1,1", "9,2", "6,7"],
        vec!["loci", "5,8", "1,1", "10,7", "--path", "11,3 1,1", "--samples", "50"],
    ] {
        let a = run(&args);
        let b = run(&args);
        assert_eq!(a.stdout, b.stdout, "{args:?} not deterministic");
        assert_eq!(a.status.code(), b.status.code());
    }

    // SVG snapshots: byte-identical across runs and to the goldens.
    for (golden_name, args) in [
        (
            "solve4_figure.svg",
            vec!["solve4", "2,6", "1,1", "9,2", "6,7", "--svg"],
        ),
        ("solve3_figure.svg", vec!["solve3", "4,4", "2,1", "7,1", "--svg"]),
        (
            "loci_figure.svg",
            vec![
                "loci", "5,8", "1,1", "10,7", "--path", "11,3 1,1", "--samples", "50", "--svg",
            ],
        ),
    ] {
        let out_path = tmp.path(golden_name);
        let mut args = args.clone();
        let out_str = out_path.to_string_lossy().into_owned();
        args.push(&out_str);
        let out = run(&args);
        assert!(out.status.success(), "{golden_name}: {:?}", out);
        let produced = std::fs::read_to_string(&out_path).expect("svg written");
        assert_eq!(produced, golden(golden_name), "{golden_name} drifted");
    }

    // One SVG element per declared object in the four-terminal figure:
    // 12 markers/circles, 11 edges, 8 labels.
    let fig = golden("solve4_figure.svg");
    assert_eq!(fig.matches("<circle").count(), 12);
    assert_eq!(fig.matches("<line").count(), 11);
    assert_eq!(fig.matches("<text").count(), 8);

    // Exit-code contract: 0 success, 2 invalid input, 3 no full tree,
    // 4 verification failure.
    assert_eq!(run(&["solve4", "2,6", "1,1", "9,2", "6,7"]).status.code(), Some(0));
    assert_eq!(run(&["solve3", "0,0", "1,1", "2,2"]).status.code(), Some(2));
    assert_eq!(run(&["solve4", "0,0", "0,1", "1,1", "1,0"]).status.code(), Some(2));
    assert_eq!(run(&["solve4", &fixture("thin.txt")]).status.code(), Some(3));
    assert_eq!(run(&["verify", "2,6", "1,1", "9,2", "6,7"]).status.code(), Some(0));
    assert_eq!(
        run(&["verify", "2,6", "1,1", "9,2", "6,7", "--check-point", "3,4"]).status.code(),
        Some(4)
    );
    assert_eq!(run(&["bogus"]).status.code(), Some(2));

    println!("[PASS] CLI end-to-end: deterministic reports, exit codes 0/2/3/4, stable SVG goldens");
}

#[test]
fn solve4_report_carries_both_topologies() {
    let out = stdout(&run(&["solve4", "2,6", "1,1", "9,2", "6,7"]));
    assert!(out.contains("chosen: T12_34"));
    assert!(out.contains("alternate: T41_23"));
    assert!(out.contains("length: 14.912650672139758"));
    assert!(out.contains("length: 15.63288681175906"));
    assert!(out.contains("tie: false"));
    assert!(out.contains("agreement: true"));
}

#[test]
fn solve4_detects_tie() {
    let out = stdout(&run(&["solve4", "1,6", "2,1", "6,1", "8,7"]));
    assert!(out.contains("tie: true"));
    assert!(out.contains("diagonals_dot: 0"));
    let count = out.matches("length: 15.03073").count();
    assert_eq!(count, 2, "both topologies at the common length:\n{out}");
}

#[test]
fn instance_files_and_json_output() {
    let tmp = TempDir::new("json");
    let json_path = tmp.path("report.json");
    let out = run(&[
        "solve4",
        &fixture("quad.txt"),
        "--json",
        json_path.to_string_lossy().as_ref(),
    ]);
    assert!(out.status.success());
    // The echo names the file it came from.
    assert!(stdout(&out).contains("quad.txt"));

    let value: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&json_path).expect("json written"))
            .expect("valid json");
    let len = value["payload"]["chosen"]["length"].as_f64().unwrap();
    assert!((len - 14.912650672139758).abs() < 1e-12);
    let s1x = value["payload"]["chosen"]["s1"]["x"].as_f64().unwrap();
    assert!((s1x - 2.541631).abs() < 1e-6);
    assert_eq!(value["payload"]["tie"].as_bool(), Some(false));
}

#[test]
fn solve3_verify_and_degenerate_paths() {
    let out = stdout(&run(&["solve3", &fixture("triangle.txt"), "--verify"]));
    assert!(out.contains("status: interior"));
    assert!(out.contains("length: 7.347160139369031"));
    assert!(out.contains("converged: true"));
    assert!(out.contains("agreement: true"));

    // Wide angle: degenerate two-edge tree, still exit 0. The leading
    // minus sign needs the positional escape.
    let wide = run(&["solve3", "--", "0,0", "2,0", "-2,0.1"]);
    assert_eq!(wide.status.code(), Some(0));
    let text = stdout(&wide);
    assert!(text.contains("status: degenerate_at_vertex"));
    assert!(text.contains("wide_vertex: 1"));
}

#[test]
fn loci_rows_and_degenerate_paths() {
    // A zero-length path produces a single-row sweep.
    let single = stdout(&run(&["loci", "5,8", "1,1", "10,7", "--path", "11,3", "--samples", "9"]));
    assert!(single.contains("sweep: 1 rows, 1 solved, 0 diagnostic"));

    // A path entirely inside the fixed triangle yields only diagnostics,
    // and that is still a success.
    let diag = run(&["loci", "5,8", "1,1", "10,7", "--path", "5,5 6,5", "--samples", "3"]);
    assert_eq!(diag.status.code(), Some(0));
    assert!(stdout(&diag).contains("3 diagnostic"));

    // Collinear fixed terminals are rejected up front.
    assert_eq!(
        run(&["loci", "0,0", "1,0", "2,0", "--path", "5,5"]).status.code(),
        Some(2)
    );

    // Full sweep: every solved row sits on both circles.
    let sweep = stdout(&run(&[
        "loci", "5,8", "1,1", "10,7", "--path", "11,3 1,1", "--samples", "50",
    ]));
    assert!(sweep.contains("sweep: 50 rows"));
    let mut solved_rows = 0;
    for line in sweep.lines().filter(|l| l.contains("): solved")) {
        assert!(line.contains("on_c true/true"), "off-circle row: {line}");
        solved_rows += 1;
    }
    assert!(solved_rows > 10, "only {solved_rows} solved rows");
}

#[test]
fn normalize_restores_scrambled_input() {
    let scrambled = run(&["solve4", "9,2", "2,6", "1,1", "6,7"]);
    assert_eq!(scrambled.status.code(), Some(2), "scrambled order must fail plain validation");

    let out = run(&["solve4", "9,2", "2,6", "1,1", "6,7", "--normalize"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("normalize_permutation: [3, 1, 4, 2]"));
    // Same terminal set, same minimal network length.
    assert!(text.contains("length: 14.912650672139758"), "{text}");
}

#[test]
fn tolerance_flag_reclassifies_near_degenerate_input() {
    // Classification is relative to eps_geom * scale^2: the same
    // quadrilateral that validates at the default tolerance becomes
    // degenerate under a coarse --tol.
    let fine = run(&[&["solve4"], &QUAD_A[..]].concat());
    assert_eq!(fine.status.code(), Some(0));
    let coarse = run(&[&["solve4"], &QUAD_A[..], &["--tol", "0.5"]].concat());
    assert_eq!(coarse.status.code(), Some(2));
    // And an out-of-range override is an input error, not a panic.
    let bad = run(&[&["solve4"], &QUAD_A[..], &["--tol", "1.5"]].concat());
    assert_eq!(bad.status.code(), Some(2));
}
