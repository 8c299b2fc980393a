//! Deterministic SVG export. Coordinates are rounded only here, for display.

use std::fmt::Write;

use num_traits::ToPrimitive;

use crate::drawing::{CrossingSet, Drawing};
use crate::frame::Color;
use crate::framework::FrameworkGraph;
use crate::geom::Point;

/// Rendering options. Edge colors come from the frame coloring when a
/// framework graph is supplied.
#[derive(Clone, Debug, Default)]
pub struct SvgStyle<'a> {
    pub framework: Option<&'a FrameworkGraph>,
    pub crossings: Option<&'a CrossingSet>,
    /// Canvas width in pixels; 800 when zero.
    pub width: u32,
}

fn color_hex(c: Color) -> &'static str {
    match c {
        Color::Red => "#d62728",
        Color::Blue => "#1f77b4",
        Color::Yellow => "#e0b000",
        Color::Gray => "#8c8c8c",
    }
}

fn f(p: &Point) -> (f64, f64) {
    (p.x.to_f64().unwrap_or(0.0), p.y.to_f64().unwrap_or(0.0))
}

pub fn to_svg(d: &Drawing, style: &SvgStyle) -> String {
    let width = if style.width == 0 { 800.0 } else { style.width as f64 };
    let pts: Vec<(f64, f64)> = d.positions.iter().chain(d.curves.iter().flatten()).map(f).collect();
    let (mut x0, mut y0, mut x1, mut y1) = (0.0f64, 0.0f64, 1.0f64, 1.0f64);
    if let Some(&(x, y)) = pts.first() {
        (x0, y0, x1, y1) = (x, y, x, y);
        for &(x, y) in &pts {
            x0 = x0.min(x);
            x1 = x1.max(x);
            y0 = y0.min(y);
            y1 = y1.max(y);
        }
    }
    let span = (x1 - x0).max(y1 - y0).max(1e-9);
    let margin = 20.0;
    let s = (width - 2.0 * margin) / span;
    let height = ((y1 - y0) * s + 2.0 * margin).round().max(2.0 * margin);
    // flip y so that the drawing reads upwards
    let map = |(x, y): (f64, f64)| ((x - x0) * s + margin, height - ((y - y0) * s + margin));
    let mut out = String::new();
    writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width:.0}\" height=\"{height:.0}\" viewBox=\"0 0 {width:.0} {height:.0}\">"
    )
    .unwrap();
    writeln!(out, "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>").unwrap();
    writeln!(out, "<g fill=\"none\" stroke-width=\"1.2\" stroke-linejoin=\"round\">").unwrap();
    for (e, c) in d.curves.iter().enumerate() {
        let color = style.framework.map_or("#333333", |fg| color_hex(fg.color(fg.edge_conn[e])));
        let mut path = String::new();
        for (i, p) in c.iter().enumerate() {
            let (x, y) = map(f(p));
            write!(path, "{}{x:.2},{y:.2}", if i == 0 { "M" } else { " L" }).unwrap();
        }
        writeln!(out, "<path id=\"e{e}\" d=\"{path}\" stroke=\"{color}\"/>").unwrap();
    }
    writeln!(out, "</g>").unwrap();
    writeln!(out, "<g fill=\"black\">").unwrap();
    for (v, p) in d.positions.iter().enumerate() {
        let (x, y) = map(f(p));
        let r = if v < 6 && style.framework.is_some() { 4.0 } else { 2.5 };
        writeln!(
            out,
            "<circle cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"{r}\"><title>{}</title></circle>",
            xml(d.graph.label(v))
        )
        .unwrap();
    }
    writeln!(out, "</g>").unwrap();
    if let Some(cs) = style.crossings {
        writeln!(out, "<g fill=\"none\" stroke=\"#2ca02c\" stroke-width=\"1\">").unwrap();
        for c in &cs.crossings {
            let (x, y) = map(f(&c.point));
            writeln!(out, "<circle cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"3.5\"/>").unwrap();
        }
        writeln!(out, "</g>").unwrap();
    }
    out.push_str("</svg>\n");
    out
}

fn xml(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
