//! SVG 1.1 figure writer.
//!
//! One SVG element per declared geometric object, emitted in insertion
//! order with coordinates rounded to 6 decimals, so figures are stable
//! byte-for-byte across runs. World coordinates are mapped y-up into the
//! y-down viewport.

use std::fmt::Write as _;

use steiner_core::Point;

const MARGIN: f64 = 40.0;
const TARGET: f64 = 560.0;

pub struct Figure {
    shapes: Vec<Shape>,
}

enum Shape {
    /// Marker dot; radius in viewport pixels.
    Dot { p: Point, r: f64, fill: &'static str },
    Segment { a: Point, b: Point, stroke: &'static str, width: f64, dash: Option<&'static str> },
    /// Circle with world-coordinate radius.
    WorldCircle { center: Point, radius: f64, stroke: &'static str },
    Polyline { pts: Vec<Point>, stroke: &'static str, width: f64, dash: Option<&'static str> },
    /// Text label anchored near a world point, offset in pixels.
    Label { p: Point, dx: f64, dy: f64, text: String },
}

impl Default for Figure {
    fn default() -> Self {
        Self::new()
    }
}

impl Figure {
    pub fn new() -> Self {
        Self { shapes: Vec::new() }
    }

    pub fn dot(&mut self, p: Point, r: f64, fill: &'static str) {
        self.shapes.push(Shape::Dot { p, r, fill });
    }

    pub fn segment(&mut self, a: Point, b: Point, stroke: &'static str, width: f64) {
        self.shapes.push(Shape::Segment { a, b, stroke, width, dash: None });
    }

    pub fn dashed_segment(&mut self, a: Point, b: Point, stroke: &'static str, width: f64) {
        self.shapes.push(Shape::Segment { a, b, stroke, width, dash: Some("6 4") });
    }

    pub fn world_circle(&mut self, center: Point, radius: f64, stroke: &'static str) {
        self.shapes.push(Shape::WorldCircle { center, radius, stroke });
    }

    pub fn polyline(
        &mut self,
        pts: Vec<Point>,
        stroke: &'static str,
        width: f64,
        dashed: bool,
    ) {
        if pts.is_empty() {
            return;
        }
        let dash = dashed.then_some("2 4");
        self.shapes.push(Shape::Polyline { pts, stroke, width, dash });
    }

    pub fn label(&mut self, p: Point, text: impl Into<String>) {
        self.shapes.push(Shape::Label { p, dx: 7.0, dy: -7.0, text: text.into() });
    }

    pub fn render(&self) -> String {
        let (min_x, max_x, min_y, max_y) = self.bounds();
        let dx = (max_x - min_x).max(1e-9);
        let dy = (max_y - min_y).max(1e-9);
        let k = TARGET / dx.max(dy);
        let width = 2.0 * MARGIN + dx * k;
        let height = 2.0 * MARGIN + dy * k;
        let map = |p: Point| -> (f64, f64) {
            (MARGIN + (p.x() - min_x) * k, MARGIN + (max_y - p.y()) * k)
        };

        let mut out = String::new();
        writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
        writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="0 0 {} {}">"#,
            r6(width),
            r6(height)
        )
        .unwrap();
        for shape in &self.shapes {
            match shape {
                Shape::Dot { p, r, fill } => {
                    let (cx, cy) = map(*p);
                    writeln!(
                        out,
                        r#"  <circle cx="{}" cy="{}" r="{}" fill="{fill}"/>"#,
                        r6(cx),
                        r6(cy),
                        r6(*r)
                    )
                    .unwrap();
                }
                Shape::Segment { a, b, stroke, width, dash } => {
                    let (x1, y1) = map(*a);
                    let (x2, y2) = map(*b);
                    let dash_attr = dash
                        .map(|d| format!(r#" stroke-dasharray="{d}""#))
                        .unwrap_or_default();
                    writeln!(
                        out,
                        r#"  <line x1="{}" y1="{}" x2="{}" y2="{}" stroke="{stroke}" stroke-width="{}"{dash_attr}/>"#,
                        r6(x1),
                        r6(y1),
                        r6(x2),
                        r6(y2),
                        r6(*width)
                    )
                    .unwrap();
                }
                Shape::WorldCircle { center, radius, stroke } => {
                    let (cx, cy) = map(*center);
                    writeln!(
                        out,
                        r#"  <circle cx="{}" cy="{}" r="{}" fill="none" stroke="{stroke}" stroke-width="1"/>"#,
                        r6(cx),
                        r6(cy),
                        r6(radius * k)
                    )
                    .unwrap();
                }
                Shape::Polyline { pts, stroke, width, dash } => {
                    let coords: Vec<String> = pts
                        .iter()
                        .map(|p| {
                            let (x, y) = map(*p);
                            format!("{},{}", r6(x), r6(y))
                        })
                        .collect();
                    let dash_attr = dash
                        .map(|d| format!(r#" stroke-dasharray="{d}""#))
                        .unwrap_or_default();
                    writeln!(
                        out,
                        r#"  <polyline points="{}" fill="none" stroke="{stroke}" stroke-width="{}"{dash_attr}/>"#,
                        coords.join(" "),
                        r6(*width)
                    )
                    .unwrap();
                }
                Shape::Label { p, dx, dy, text } => {
                    let (x, y) = map(*p);
                    writeln!(
                        out,
                        r#"  <text x="{}" y="{}" font-family="sans-serif" font-size="13">{}</text>"#,
                        r6(x + dx),
                        r6(y + dy),
                        escape(text)
                    )
                    .unwrap();
                }
            }
        }
        out.push_str("</svg>\n");
        out
    }

    fn bounds(&self) -> (f64, f64, f64, f64) {
        let mut min_x = f64::MAX;
        let mut max_x = f64::MIN;
        let mut min_y = f64::MAX;
        let mut max_y = f64::MIN;
        let mut take = |x: f64, y: f64| {
            min_x = min_x.min(x);
            max_x = max_x.max(x);
            min_y = min_y.min(y);
            max_y = max_y.max(y);
        };
        for shape in &self.shapes {
            match shape {
                Shape::Dot { p, .. } | Shape::Label { p, .. } => take(p.x(), p.y()),
                Shape::Segment { a, b, .. } => {
                    take(a.x(), a.y());
                    take(b.x(), b.y());
                }
                Shape::WorldCircle { center, radius, .. } => {
                    take(center.x() - radius, center.y() - radius);
                    take(center.x() + radius, center.y() + radius);
                }
                Shape::Polyline { pts, .. } => {
                    for p in pts {
                        take(p.x(), p.y());
                    }
                }
            }
        }
        if min_x > max_x {
            (0.0, 1.0, 0.0, 1.0)
        } else {
            (min_x, max_x, min_y, max_y)
        }
    }
}

/// Fixed 6-decimal formatting; visual resolution only.
fn r6(v: f64) -> String {
    let s = format!("{v:.6}");
    // Normalize negative zero so figures do not depend on its sign.
    if s == "-0.000000" { "0.000000".to_string() } else { s }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: f64, y: f64) -> Point {
        Point::new(x, y).unwrap()
    }

    #[test]
    fn renders_one_element_per_object() {
        let mut fig = Figure::new();
        fig.dot(pt(0.0, 0.0), 4.0, "#000");
        fig.dot(pt(1.0, 1.0), 4.0, "#000");
        fig.segment(pt(0.0, 0.0), pt(1.0, 1.0), "#d62728", 1.8);
        fig.world_circle(pt(0.5, 0.5), 0.5, "#2ca02c");
        fig.polyline(vec![pt(0.0, 0.0), pt(0.5, 0.2), pt(1.0, 0.0)], "#9467bd", 1.0, true);
        fig.label(pt(0.0, 0.0), "P1");
        let svg = fig.render();
        assert_eq!(svg.matches("<circle").count(), 3);
        assert_eq!(svg.matches("<line").count(), 1);
        assert_eq!(svg.matches("<polyline").count(), 1);
        assert_eq!(svg.matches("<text").count(), 1);
        assert!(svg.starts_with("<?xml"));
        assert!(svg.ends_with("</svg>\n"));
    }

    #[test]
    fn rendering_is_stable() {
        let build = || {
            let mut fig = Figure::new();
            fig.dot(pt(2.0, 6.0), 4.0, "#000");
            fig.world_circle(pt(1.0, 1.0), 2.5, "#2ca02c");
            fig.render()
        };
        assert_eq!(build(), build());
    }

    #[test]
    fn y_axis_points_up() {
        let mut fig = Figure::new();
        fig.dot(pt(0.0, 0.0), 1.0, "#000");
        fig.dot(pt(0.0, 10.0), 1.0, "#000");
        let svg = fig.render();
        // The higher of the two world points appears first with the
        // smaller viewport y.
        let ys: Vec<f64> = svg
            .lines()
            .filter(|l| l.contains("<circle"))
            .map(|l| {
                let i = l.find("cy=\"").unwrap() + 4;
                let j = l[i..].find('"').unwrap();
                l[i..i + j].parse().unwrap()
            })
            .collect();
        assert!(ys[0] > ys[1]);
    }
}
