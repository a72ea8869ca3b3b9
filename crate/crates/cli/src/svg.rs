//! Illustrative SVG drawing. Unbounded regions are clipped to a square three
//! times the size of the box holding every generator point.

use std::fmt::Write as _;

use num_traits::ToPrimitive;
use planar_hull::{box_size, extreme, HPoly, Point, Result, VRep};

const PX: f64 = 600.0;

fn clip(poly: &[(f64, f64)], a: f64, b: f64, c: f64) -> Vec<(f64, f64)> {
    let inside = |p: &(f64, f64)| a * p.0 + b * p.1 <= c;
    let mut out = Vec::new();
    for i in 0..poly.len() {
        let (p, q) = (poly[i], poly[(i + 1) % poly.len()]);
        if inside(&p) {
            out.push(p);
        }
        if inside(&p) != inside(&q) {
            let (fp, fq) = (a * p.0 + b * p.1 - c, a * q.0 + b * q.1 - c);
            let t = fp / (fp - fq);
            out.push((p.0 + t * (q.0 - p.0), p.1 + t * (q.1 - p.1)));
        }
    }
    out
}

fn region(e: &HPoly, half: f64) -> Vec<(f64, f64)> {
    let mut poly = vec![(-half, -half), (half, -half), (half, half), (-half, half)];
    for f in e.ineqs() {
        let g = |v: &num_bigint::BigInt| v.to_f64().unwrap_or(0.0);
        poly = clip(&poly, g(f.a()), g(f.b()), f.c().to_f64().unwrap_or(0.0));
    }
    poly
}

fn path(poly: &[(f64, f64)], half: f64) -> String {
    let scale = PX / (2.0 * half);
    let mut d = String::new();
    for (i, (x, y)) in poly.iter().enumerate() {
        let cmd = if i == 0 { 'M' } else { 'L' };
        write!(d, "{}{:.3},{:.3} ", cmd, (x + half) * scale, (half - y) * scale).unwrap();
    }
    if !poly.is_empty() {
        d.push('Z');
    }
    d
}

/// Half-width of the generator box, or 1 when an input is the whole plane.
fn generator_box(a: &HPoly, b: &HPoly) -> Result<f64> {
    if a.is_universe() || b.is_universe() {
        return Ok(1.0);
    }
    let mut v: VRep = extreme(a, false)?;
    let w = extreme(b, false)?;
    v.extend(w.points, w.rays);
    let pts: Vec<Point> = v.points;
    Ok(box_size(&pts)?.to_f64().unwrap_or(1.0))
}

pub fn render(a: &HPoly, b: &HPoly, h: &HPoly) -> Result<String> {
    let s = generator_box(a, b)?;
    let half = 3.0 * s;
    let mut doc = String::new();
    writeln!(doc, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{0}" height="{0}" viewBox="0 0 {0} {0}">"#, PX).unwrap();
    writeln!(doc, r##"<rect width="100%" height="100%" fill="#ffffff"/>"##).unwrap();
    let layers = [
        (region(a, half), "fill=\"#3b82f6\" fill-opacity=\"0.35\" stroke=\"none\""),
        (region(b, half), "fill=\"#f97316\" fill-opacity=\"0.35\" stroke=\"none\""),
        (region(h, half), "fill=\"none\" stroke=\"#111827\" stroke-width=\"2\""),
        (region(&HPoly::universe(), s), "fill=\"none\" stroke=\"#6b7280\" stroke-dasharray=\"6 4\""),
    ];
    for (poly, style) in &layers {
        writeln!(doc, r#"<path d="{}" {}/>"#, path(poly, half), style).unwrap();
    }
    doc.push_str("</svg>\n");
    Ok(doc)
}
