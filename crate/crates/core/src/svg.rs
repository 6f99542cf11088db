//! Static SVG drawings: a polygon and its polar side by side, each panel
//! scaled to its own bounding box. Coordinates are converted to `f64` here
//! and nowhere else outside the oracles.

use std::fmt::Write;

use crate::geometry::SymPolygon;
use crate::reduction::DescentTrace;

const PANEL: f64 = 320.0;
const MARGIN: f64 = 0.05;

fn panel(out: &mut String, poly: &SymPolygon, x: f64, y: f64, label: &str) {
    let pts: Vec<(f64, f64)> = poly
        .vertices()
        .iter()
        .map(|p| {
            let (px, py) = p.to_f64();
            (px, -py)
        })
        .collect();
    let (mut x0, mut x1, mut y0, mut y1) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
    for &(px, py) in &pts {
        x0 = x0.min(px);
        x1 = x1.max(px);
        y0 = y0.min(py);
        y1 = y1.max(py);
    }
    let (w, h) = (x1 - x0, y1 - y0);
    let (mx, my) = (w * MARGIN, h * MARGIN);
    let stroke = w.max(h) / 200.0;
    let _ = writeln!(
        out,
        r#"  <svg x="{x}" y="{y}" width="{PANEL}" height="{PANEL}" viewBox="{} {} {} {}" preserveAspectRatio="xMidYMid meet">"#,
        x0 - mx,
        y0 - my,
        w + 2.0 * mx,
        h + 2.0 * my
    );
    let points: Vec<String> = pts.iter().map(|(px, py)| format!("{px},{py}")).collect();
    let _ = writeln!(
        out,
        r##"    <polygon points="{}" fill="#dde6f0" stroke="#1f3b57" stroke-width="{stroke}"/>"##,
        points.join(" ")
    );
    let r = stroke * 2.0;
    let _ = writeln!(out, r##"    <circle cx="0" cy="0" r="{r}" fill="#a33"/>"##);
    out.push_str("  </svg>\n");
    let _ = writeln!(
        out,
        r#"  <text x="{}" y="{}" font-family="sans-serif" font-size="12">{label}</text>"#,
        x + 6.0,
        y + 14.0
    );
}

fn document(rows: usize, body: &str) -> String {
    let width = 2.0 * PANEL;
    let height = rows as f64 * PANEL;
    format!(
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n\
         <svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{width}\" height=\"{height}\">\n\
         {body}</svg>\n"
    )
}

/// `poly` on the left, its polar on the right.
pub fn render_pair(poly: &SymPolygon) -> String {
    let mut body = String::new();
    panel(&mut body, poly, 0.0, 0.0, "A");
    panel(&mut body, &poly.polar_dual(), PANEL, 0.0, "polar");
    document(1, &body)
}

/// One row per descent step plus a final row.
pub fn render_trace(trace: &DescentTrace) -> String {
    let mut body = String::new();
    let mut row = 0;
    for step in &trace.steps {
        let y = row as f64 * PANEL;
        panel(
            &mut body,
            &step.polygon,
            0.0,
            y,
            &format!("step {row}: M = {}", step.mahler),
        );
        panel(&mut body, &step.dual, PANEL, y, "polar");
        row += 1;
    }
    let y = row as f64 * PANEL;
    panel(
        &mut body,
        &trace.final_polygon,
        0.0,
        y,
        &format!("final: M = {}", trace.final_mahler),
    );
    panel(
        &mut body,
        &trace.final_polygon.polar_dual(),
        PANEL,
        y,
        "polar",
    );
    document(row + 1, &body)
}
