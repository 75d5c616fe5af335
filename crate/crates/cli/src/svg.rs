//! SVG rendering of point sets and colored edge classes.
//!
//! Output is a pure function of the inputs: fixed-precision numeric
//! formatting, golden-angle hues indexed by color, stable element order.

use std::fmt::Write as _;

use geomcolor::{all_edges, EdgeColoring, PointSet};

/// Golden-angle hue stepping keeps nearby color indices visually distinct.
fn class_color(color: u32) -> String {
    let hue = ((color as f64 - 1.0) * 137.50776405) % 360.0;
    format!("hsl({hue:.2},68%,42%)")
}

pub fn render(points: &PointSet, coloring: Option<&EdgeColoring>, class: Option<u32>) -> String {
    let xs: Vec<i64> = points.points().iter().map(|p| p.x).collect();
    let ys: Vec<i64> = points.points().iter().map(|p| -p.y).collect();
    let (min_x, max_x) = (xs.iter().min().unwrap(), xs.iter().max().unwrap());
    let (min_y, max_y) = (ys.iter().min().unwrap(), ys.iter().max().unwrap());
    let extent = ((max_x - min_x).max(max_y - min_y)).max(1) as f64;
    let margin = extent * 0.06;
    let stroke = extent / 220.0;
    let radius = extent / 120.0;

    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{:.3} {:.3} {:.3} {:.3}\">",
        *min_x as f64 - margin,
        *min_y as f64 - margin,
        (max_x - min_x) as f64 + 2.0 * margin,
        (max_y - min_y) as f64 + 2.0 * margin,
    );
    if let Some(col) = coloring {
        for e in all_edges(points.len()) {
            let Some(c) = col.color(e) else { continue };
            if class.map(|k| k != c).unwrap_or(false) {
                continue;
            }
            let p = points.point(e.a());
            let q = points.point(e.b());
            let _ = writeln!(
                out,
                "  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{}\" stroke-width=\"{stroke:.3}\"><title>edge ({}, {}) color {c}</title></line>",
                p.x, -p.y, q.x, -q.y, class_color(c), e.a(), e.b(),
            );
        }
    }
    for (i, p) in points.points().iter().enumerate() {
        let _ = writeln!(
            out,
            "  <circle cx=\"{}\" cy=\"{}\" r=\"{radius:.3}\" fill=\"black\"><title>point {i}</title></circle>",
            p.x, -p.y,
        );
    }
    out.push_str("</svg>\n");
    out
}
