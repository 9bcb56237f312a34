//! SVG for 2-dimensional representations: axis 0 horizontal, axis 1 pointing
//! up. Output depends only on the representation.

use std::fmt::Write;

use super::BoxRepresentation;
use crate::rational::{to_f64, Q};

const WIDTH: f64 = 800.0;
const MARGIN: f64 = 20.0;
const FILL: &str = "#dce8f4";
const STROKE: &str = "#1d3f66";

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("SVG output needs a 2-dimensional representation, got d = {0}")]
pub struct NotPlanar(pub usize);

fn num(x: f64) -> String {
    let s = format!("{x:.3}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" { "0".to_string() } else { s.to_string() }
}

pub fn to_svg(r: &BoxRepresentation) -> Result<String, NotPlanar> {
    if r.d() != 2 {
        return Err(NotPlanar(r.d()));
    }
    let mut out = String::new();
    if r.n() == 0 {
        let _ = writeln!(out, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{0}" height="{0}"/>"#, num(2.0 * MARGIN));
        return Ok(out);
    }
    let fold = |axis: usize, hi: bool| -> Q {
        let it = r.boxes().iter().map(|b| if hi { b.hi(axis).clone() } else { b.lo(axis).clone() });
        if hi { it.max().unwrap() } else { it.min().unwrap() }
    };
    let (x0, x1, y0, y1) = (fold(0, false), fold(0, true), fold(1, false), fold(1, true));
    let span = (&x1 - &x0).max(&y1 - &y0);
    let scale = (WIDTH - 2.0 * MARGIN) / to_f64(&span);
    let px = |x: &Q| MARGIN + to_f64(&(x - &x0)) * scale;
    let py = |y: &Q| MARGIN + to_f64(&(&y1 - y)) * scale;
    let w = px(&x1) + MARGIN;
    let h = py(&y0) + MARGIN;
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}" viewBox="0 0 {} {}">"#,
        num(w), num(h), num(w), num(h)
    );
    let _ = writeln!(out, r#"<g fill="{FILL}" stroke="{STROKE}" stroke-width="1">"#);
    for b in r.boxes() {
        let (left, right) = (px(b.lo(0)), px(b.hi(0)));
        let (top, bottom) = (py(b.hi(1)), py(b.lo(1)));
        let _ = writeln!(
            out,
            r#"<rect x="{}" y="{}" width="{}" height="{}"/>"#,
            num(left), num(top), num(right - left), num(bottom - top)
        );
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(out, r#"<g font-family="sans-serif" font-size="10" text-anchor="middle" fill="{STROKE}">"#);
    for (v, b) in r.boxes().iter().enumerate() {
        let cx = (px(b.lo(0)) + px(b.hi(0))) / 2.0;
        let cy = (py(b.lo(1)) + py(b.hi(1))) / 2.0 + 3.0;
        let _ = writeln!(out, r#"<text x="{}" y="{}">{v}</text>"#, num(cx), num(cy));
    }
    let _ = writeln!(out, "</g>");
    out.push_str("</svg>\n");
    Ok(out)
}
