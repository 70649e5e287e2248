//! Fixed-style SVG rendering of a planar pair.
//!
//! Palette: triangle1 `#1f5fa8`, triangle2 `#c0392b`, perpendiculars
//! `#2e8b57` dashed, center `#111111`. Stroke widths scale with the drawing
//! (0.4% of the larger extent for sides, 0.3% for perpendiculars). The
//! y-axis points up. Numbers are written with four decimals.

use std::fmt::Write;

use orthology_core::orthology::{orthology_spectrum, perpendicular_pencil};
use orthology_core::{Correspondence, Line2, Point2, TrianglePair};

const T1_COLOR: &str = "#1f5fa8";
const T2_COLOR: &str = "#c0392b";
const PENCIL_COLOR: &str = "#2e8b57";
const CENTER_COLOR: &str = "#111111";

fn num(v: f64) -> String {
    let s = format!("{v:.4}");
    if s == "-0.0000" {
        "0.0000".to_string()
    } else {
        s
    }
}

#[derive(Debug, Clone, Copy)]
struct Frame {
    x0: f64,
    y0: f64,
    x1: f64,
    y1: f64,
}

impl Frame {
    fn fit(points: &[(f64, f64)]) -> Frame {
        let (mut x0, mut y0) = (f64::INFINITY, f64::INFINITY);
        let (mut x1, mut y1) = (f64::NEG_INFINITY, f64::NEG_INFINITY);
        for &(x, y) in points {
            x0 = x0.min(x);
            y0 = y0.min(y);
            x1 = x1.max(x);
            y1 = y1.max(y);
        }
        let span = (x1 - x0).max(y1 - y0).max(1e-9);
        let m = 0.1 * span;
        Frame {
            x0: x0 - m,
            y0: y0 - m,
            x1: x1 + m,
            y1: y1 + m,
        }
    }

    fn span(&self) -> f64 {
        (self.x1 - self.x0).max(self.y1 - self.y0)
    }

    /// Segment of `a x + b y + c = 0` inside the frame.
    fn clip(&self, line: &Line2) -> Option<((f64, f64), (f64, f64))> {
        let [a, b, c] = line.coefficients().map(orthology_core::rational::to_f64);
        let mut hits: Vec<(f64, f64)> = Vec::with_capacity(4);
        let eps = 1e-12 * self.span();
        if b != 0.0 {
            for x in [self.x0, self.x1] {
                let y = -(a * x + c) / b;
                if y >= self.y0 - eps && y <= self.y1 + eps {
                    hits.push((x, y));
                }
            }
        }
        if a != 0.0 {
            for y in [self.y0, self.y1] {
                let x = -(b * y + c) / a;
                if x >= self.x0 - eps && x <= self.x1 + eps {
                    hits.push((x, y));
                }
            }
        }
        hits.sort_by(|p, q| p.partial_cmp(q).expect("finite coordinates"));
        match (hits.first(), hits.last()) {
            (Some(&p), Some(&q)) if p != q => Some((p, q)),
            _ => None,
        }
    }
}

fn vertices(t: &[Point2; 3]) -> [(f64, f64); 3] {
    t.each_ref().map(Point2::to_f64)
}

fn polygon(out: &mut String, class: &str, color: &str, width: f64, v: &[(f64, f64); 3]) {
    let pts: Vec<String> = v
        .iter()
        .map(|&(x, y)| format!("{},{}", num(x), num(-y)))
        .collect();
    writeln!(
        out,
        r#"  <polygon class="{class}" points="{}" fill="none" stroke="{color}" stroke-width="{}"/>"#,
        pts.join(" "),
        num(width)
    )
    .unwrap();
}

fn marker(out: &mut String, class: &str, color: &str, r: f64, (x, y): (f64, f64)) {
    writeln!(
        out,
        r#"  <circle class="{class}" cx="{}" cy="{}" r="{}" fill="{color}"/>"#,
        num(x),
        num(-y),
        num(r)
    )
    .unwrap();
}

fn label(out: &mut String, color: &str, size: f64, (x, y): (f64, f64), text: &str) {
    writeln!(
        out,
        r#"  <text x="{}" y="{}" font-family="sans-serif" font-size="{}" fill="{color}">{text}</text>"#,
        num(x + 0.6 * size),
        num(-y - 0.4 * size),
        num(size)
    )
    .unwrap();
}

/// SVG document for `pair` and the pencil of `corr`. Deterministic.
pub fn render_svg(pair: &TrianglePair, corr: Correspondence) -> String {
    let v1 = vertices(pair.t1.vertices());
    let v2 = vertices(pair.t2.vertices());
    let report = orthology_spectrum(pair);
    let entry = report.entry(corr);
    let center = entry
        .center
        .as_ref()
        .filter(|_| entry.orthologic)
        .and_then(|h| h.to_point())
        .map(|p| p.to_f64());

    let mut pts: Vec<(f64, f64)> = v1.iter().chain(v2.iter()).copied().collect();
    pts.extend(center);
    let frame = Frame::fit(&pts);
    let span = frame.span();
    let side_w = 0.004 * span;
    let pencil_w = 0.003 * span;
    let r = 0.012 * span;
    let font = 0.035 * span;

    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}">"#,
        num(frame.x0),
        num(-frame.y1),
        num(frame.x1 - frame.x0),
        num(frame.y1 - frame.y0)
    )
    .unwrap();
    let verdict = if entry.orthologic {
        "orthologic"
    } else {
        "not orthologic"
    };
    writeln!(out, "  <title>{corr}: {verdict}</title>").unwrap();
    writeln!(
        out,
        r##"  <rect x="{}" y="{}" width="{}" height="{}" fill="#ffffff"/>"##,
        num(frame.x0),
        num(-frame.y1),
        num(frame.x1 - frame.x0),
        num(frame.y1 - frame.y0)
    )
    .unwrap();

    if let Ok(lines) = perpendicular_pencil(pair, corr) {
        for line in &lines {
            if let Some(((ax, ay), (bx, by))) = frame.clip(line) {
                writeln!(
                    out,
                    r#"  <line class="perpendicular" x1="{}" y1="{}" x2="{}" y2="{}" stroke="{PENCIL_COLOR}" stroke-width="{}" stroke-dasharray="{} {}"/>"#,
                    num(ax), num(-ay), num(bx), num(-by), num(pencil_w), num(4.0 * pencil_w), num(2.0 * pencil_w)
                )
                .unwrap();
            }
        }
    }

    polygon(&mut out, "triangle1", T1_COLOR, side_w, &v1);
    polygon(&mut out, "triangle2", T2_COLOR, side_w, &v2);
    for (v, name) in v1.iter().zip(["A", "B", "C"]) {
        marker(&mut out, "vertex", T1_COLOR, r, *v);
        label(&mut out, T1_COLOR, font, *v, name);
    }
    for (v, name) in v2.iter().zip(["A1", "B1", "C1"]) {
        marker(&mut out, "vertex", T2_COLOR, r, *v);
        label(&mut out, T2_COLOR, font, *v, name);
    }
    if let Some(p) = center {
        marker(&mut out, "center", CENTER_COLOR, 1.5 * r, p);
        label(&mut out, CENTER_COLOR, font, p, "P");
    }
    out.push_str("</svg>\n");
    out
}
