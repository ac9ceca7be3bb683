//! Instance input: a small structured text file or inline coordinate
//! pairs on the command line.
//!
//! File format, one `key: value` per line, `#` starts a comment:
//!
//! ```text
//! # four terminals, counterclockwise
//! terminals: (2, 6) (1, 1) (9, 2) (6, 7)
//! labels: A B C D        # optional
//! eps_geom: 1e-9         # optional
//! eps_solve: 1e-12       # optional
//! ```
//!
//! Inline, each positional argument is one `x,y` pair.

use std::path::Path;

use steiner_core::{Point, Tolerance};

#[derive(Debug, Clone)]
pub struct InstanceFile {
    pub terminals: Vec<Point>,
    pub labels: Vec<String>,
    pub eps_geom: Option<f64>,
    pub eps_solve: Option<f64>,
    /// Where the instance came from: a path, or "inline".
    pub source: String,
}

impl InstanceFile {
    /// Loads an instance from the positional arguments: a single existing
    /// file path, or `expected` inline pairs.
    pub fn load(args: &[String], expected: usize) -> Result<Self, String> {
        let mut instance = if args.len() == 1 && Path::new(&args[0]).is_file() {
            let text = std::fs::read_to_string(&args[0])
                .map_err(|e| format!("cannot read {}: {e}", args[0]))?;
            let mut inst = Self::parse_str(&text)?;
            inst.source = args[0].clone();
            inst
        } else {
            let terminals = args
                .iter()
                .map(|a| parse_point(a))
                .collect::<Result<Vec<_>, _>>()?;
            Self {
                terminals,
                labels: Vec::new(),
                eps_geom: None,
                eps_solve: None,
                source: "inline".to_string(),
            }
        };
        if instance.terminals.len() != expected {
            return Err(format!(
                "expected {expected} terminals, got {}",
                instance.terminals.len()
            ));
        }
        if instance.labels.is_empty() {
            instance.labels = (1..=expected).map(|i| format!("P{i}")).collect();
        } else if instance.labels.len() != expected {
            return Err(format!(
                "expected {expected} labels, got {}",
                instance.labels.len()
            ));
        }
        Ok(instance)
    }

    pub fn parse_str(text: &str) -> Result<Self, String> {
        let mut terminals = Vec::new();
        let mut labels = Vec::new();
        let mut eps_geom = None;
        let mut eps_solve = None;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once(':')
                .ok_or_else(|| format!("line {}: expected `key: value`", lineno + 1))?;
            let value = value.trim();
            match key.trim() {
                "terminals" => terminals = parse_points(value)?,
                "labels" => labels = value.split_whitespace().map(str::to_string).collect(),
                "eps_geom" => {
                    eps_geom =
                        Some(value.parse().map_err(|_| format!("bad eps_geom: {value}"))?)
                }
                "eps_solve" => {
                    eps_solve =
                        Some(value.parse().map_err(|_| format!("bad eps_solve: {value}"))?)
                }
                other => return Err(format!("line {}: unknown key `{other}`", lineno + 1)),
            }
        }
        if terminals.is_empty() {
            return Err("no `terminals:` line".to_string());
        }
        Ok(Self { terminals, labels, eps_geom, eps_solve, source: String::new() })
    }

    /// Resolves the effective tolerances: the `--tol` flag overrides the
    /// file's `eps_geom`, which overrides the default.
    pub fn tolerance(&self, tol_flag: Option<f64>) -> Result<Tolerance, String> {
        let default = Tolerance::default();
        let eps_geom = tol_flag.or(self.eps_geom).unwrap_or(default.eps_geom());
        let eps_solve = self.eps_solve.unwrap_or(default.eps_solve()).min(eps_geom);
        Tolerance::new(eps_geom, eps_solve).map_err(|e| e.to_string())
    }
}

/// Parses one `x,y` pair; parentheses and surrounding whitespace are
/// accepted.
pub fn parse_point(s: &str) -> Result<Point, String> {
    let cleaned: String = s
        .chars()
        .map(|c| if c == '(' || c == ')' { ' ' } else { c })
        .collect();
    let parts: Vec<&str> = cleaned.split(',').map(str::trim).collect();
    if parts.len() != 2 {
        return Err(format!("`{s}` is not an x,y pair"));
    }
    let x: f64 = parts[0].parse().map_err(|_| format!("bad coordinate `{}`", parts[0]))?;
    let y: f64 = parts[1].parse().map_err(|_| format!("bad coordinate `{}`", parts[1]))?;
    Point::new(x, y).map_err(|e| e.to_string())
}

/// Parses whitespace-separated pairs, with optional parentheses and
/// commas: `(2, 6) (1, 1)` or `2,6 1,1`.
pub fn parse_points(value: &str) -> Result<Vec<Point>, String> {
    let cleaned: String = value
        .chars()
        .map(|c| if c == '(' || c == ')' || c == ',' { ' ' } else { c })
        .collect();
    let nums: Vec<f64> = cleaned
        .split_whitespace()
        .map(|t| t.parse().map_err(|_| format!("bad coordinate `{t}`")))
        .collect::<Result<_, _>>()?;
    if !nums.len().is_multiple_of(2) {
        return Err("odd number of coordinates".to_string());
    }
    nums.chunks(2)
        .map(|c| Point::new(c[0], c[1]).map_err(|e| e.to_string()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_file_format() {
        let text = "# demo\nterminals: (2, 6) (1, 1) (9, 2) (6, 7)\nlabels: A B C D\neps_geom: 1e-8\n";
        let inst = InstanceFile::parse_str(text).unwrap();
        assert_eq!(inst.terminals.len(), 4);
        assert_eq!(inst.terminals[2], Point::new(9.0, 2.0).unwrap());
        assert_eq!(inst.labels, vec!["A", "B", "C", "D"]);
        assert_eq!(inst.eps_geom, Some(1e-8));
        assert_eq!(inst.eps_solve, None);
    }

    #[test]
    fn parses_bare_pairs() {
        let inst = InstanceFile::parse_str("terminals: 4,4 2,1 7,1\n").unwrap();
        assert_eq!(inst.terminals.len(), 3);
        assert_eq!(inst.terminals[0], Point::new(4.0, 4.0).unwrap());
    }

    #[test]
    fn rejects_garbage() {
        assert!(InstanceFile::parse_str("terminals: 1,2 3\n").is_err());
        assert!(InstanceFile::parse_str("nope: 1\n").is_err());
        assert!(InstanceFile::parse_str("\n").is_err());
        assert!(parse_point("1;2").is_err());
        assert!(parse_point("a,2").is_err());
        assert!(parse_point("nan,2").is_err());
    }

    #[test]
    fn inline_load_and_labels() {
        let args: Vec<String> = ["2,6", "1,1", "9,2", "6,7"].iter().map(|s| s.to_string()).collect();
        let inst = InstanceFile::load(&args, 4).unwrap();
        assert_eq!(inst.source, "inline");
        assert_eq!(inst.labels, vec!["P1", "P2", "P3", "P4"]);
        assert!(InstanceFile::load(&args, 3).is_err());
    }

    #[test]
    fn tolerance_resolution() {
        let inst = InstanceFile::parse_str("terminals: 0,0 1,0 1,1 0,1\neps_geom: 1e-7\n").unwrap();
        let t = inst.tolerance(None).unwrap();
        assert_eq!(t.eps_geom(), 1e-7);
        let t2 = inst.tolerance(Some(1e-6)).unwrap();
        assert_eq!(t2.eps_geom(), 1e-6);
        // eps_solve is clamped below eps_geom when a coarse flag is given.
        let inst2 =
            InstanceFile::parse_str("terminals: 0,0 1,0 1,1 0,1\neps_solve: 1e-3\n").unwrap();
        let t3 = inst2.tolerance(Some(1e-6)).unwrap();
        assert_eq!(t3.eps_solve(), 1e-6);
    }
}
