//! Dependency-free SVG plots.

use std::fmt::Write;

use steiner_core::{RadiusPair, RootSet};

use crate::format::num;

const SIZE: f64 = 560.0;
const PAD: f64 = 60.0;

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

fn header(out: &mut String, width: f64, height: f64, title: &str) {
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(
        out,
        r#"<text x="{}" y="24" text-anchor="middle" font-size="14">{}</text>"#,
        width / 2.0,
        escape(title)
    );
}

/// Roots in the complex plane with circles of radius `r` and `R` about 0.
pub fn root_plot(title: &str, roots: &RootSet, radii: Option<&RadiusPair>) -> String {
    let mut extent = roots
        .roots()
        .iter()
        .map(|r| r.value.re.abs().max(r.value.im.abs()))
        .fold(0.0, f64::max);
    if let Some(rad) = radii {
        extent = extent.max(rad.r).max(rad.circumradius.unwrap_or(0.0));
    }
    let extent = if extent > 0.0 { extent * 1.15 } else { 1.0 };
    let side = SIZE + 2.0 * PAD;
    let scale = SIZE / (2.0 * extent);
    let cx = PAD + SIZE / 2.0;
    let cy = PAD + SIZE / 2.0;
    let px = |x: f64| cx + x * scale;
    let py = |y: f64| cy - y * scale;

    let mut out = String::new();
    header(&mut out, side, side, title);
    let _ = writeln!(
        out,
        r##"<rect x="{PAD}" y="{PAD}" width="{SIZE}" height="{SIZE}" fill="none" stroke="#999"/>"##
    );
    let (lo, hi) = (PAD, PAD + SIZE);
    let _ = writeln!(
        out,
        r##"<line x1="{lo}" y1="{cy}" x2="{hi}" y2="{cy}" stroke="#444"/><line x1="{cx}" y1="{lo}" x2="{cx}" y2="{hi}" stroke="#444"/>"##
    );
    for t in [-1.0, -0.5, 0.5, 1.0] {
        let v = t * extent / 1.15;
        let _ = writeln!(
            out,
            r##"<line x1="{x}" y1="{a}" x2="{x}" y2="{b}" stroke="#444"/><text x="{x}" y="{ty}" text-anchor="middle">{label}</text>"##,
            x = px(v),
            a = cy - 4.0,
            b = cy + 4.0,
            ty = hi + 16.0,
            label = num(v)
        );
        let _ = writeln!(
            out,
            r##"<line x1="{a}" y1="{y}" x2="{b}" y2="{y}" stroke="#444"/><text x="{tx}" y="{ty}" text-anchor="end">{label}</text>"##,
            y = py(v),
            a = cx - 4.0,
            b = cx + 4.0,
            tx = lo - 6.0,
            ty = py(v) + 4.0,
            label = num(v)
        );
    }
    let _ = writeln!(
        out,
        r#"<text x="{}" y="{}" text-anchor="end">Re s</text><text x="{}" y="{}">Im s</text>"#,
        hi,
        cy - 8.0,
        cx + 8.0,
        lo + 14.0
    );
    if let Some(rad) = radii {
        let circles = [
            ("r", Some(rad.r), "#1f77b4"),
            ("R", rad.circumradius, "#d62728"),
        ];
        for (i, (name, radius, color)) in circles.into_iter().enumerate() {
            let Some(radius) = radius.filter(|x| *x > 0.0) else {
                continue;
            };
            let _ = writeln!(
                out,
                r#"<circle cx="{cx}" cy="{cy}" r="{}" fill="none" stroke="{color}" stroke-dasharray="6 4"/>"#,
                radius * scale
            );
            let _ = writeln!(
                out,
                r#"<text x="{}" y="{}" fill="{color}">{name} = {}</text>"#,
                lo + 8.0,
                lo + 16.0 + 16.0 * i as f64,
                num(radius)
            );
        }
    }
    for r in roots.roots() {
        let (x, y) = (px(r.value.re), py(r.value.im));
        let _ = writeln!(out, r#"<circle cx="{x}" cy="{y}" r="4" fill="black"/>"#);
        if r.multiplicity > 1 {
            let _ = writeln!(
                out,
                r#"<text x="{}" y="{}">×{}</text>"#,
                x + 6.0,
                y - 6.0,
                r.multiplicity
            );
        }
    }
    out.push_str("</svg>\n");
    out
}

/// Line plot of `(x, y)` samples with a dashed `y = 0` reference line.
pub fn line_plot(
    title: &str,
    x_label: &str,
    y_label: &str,
    pts: &[(f64, f64)],
    log_x: bool,
) -> String {
    let tx = |x: f64| if log_x { x.log10() } else { x };
    let finite: Vec<(f64, f64)> = pts
        .iter()
        .map(|&(x, y)| (tx(x), y))
        .filter(|(x, y)| x.is_finite() && y.is_finite())
        .collect();
    let (w, h) = (SIZE * 1.3, SIZE * 0.8);
    let mut out = String::new();
    header(&mut out, w + 2.0 * PAD, h + 2.0 * PAD, title);
    let bounds = |f: fn(&(f64, f64)) -> f64| {
        finite
            .iter()
            .map(f)
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), v| {
                (a.min(v), b.max(v))
            })
    };
    let (mut x0, mut x1) = bounds(|p| p.0);
    let (mut y0, mut y1) = bounds(|p| p.1);
    if finite.is_empty() {
        (x0, x1, y0, y1) = (0.0, 1.0, -1.0, 1.0);
    }
    y0 = y0.min(0.0);
    y1 = y1.max(0.0);
    if x1 <= x0 {
        x1 = x0 + 1.0;
    }
    if y1 <= y0 {
        y1 = y0 + 1.0;
    }
    let px = |x: f64| PAD + (x - x0) / (x1 - x0) * w;
    let py = |y: f64| PAD + h - (y - y0) / (y1 - y0) * h;
    let _ = writeln!(
        out,
        r##"<rect x="{PAD}" y="{PAD}" width="{w}" height="{h}" fill="none" stroke="#999"/>"##
    );
    let _ = writeln!(
        out,
        r##"<line x1="{PAD}" y1="{y}" x2="{x2}" y2="{y}" stroke="#d62728" stroke-dasharray="6 4"/>"##,
        y = py(0.0),
        x2 = PAD + w
    );
    for t in [0.0, 0.25, 0.5, 0.75, 1.0] {
        let xv = x0 + t * (x1 - x0);
        let label = if log_x {
            format!("1e{}", num(xv))
        } else {
            num(xv)
        };
        let _ = writeln!(
            out,
            r#"<text x="{}" y="{}" text-anchor="middle">{}</text>"#,
            px(xv),
            PAD + h + 16.0,
            label
        );
        let yv = y0 + t * (y1 - y0);
        let _ = writeln!(
            out,
            r#"<text x="{}" y="{}" text-anchor="end">{}</text>"#,
            PAD - 6.0,
            py(yv) + 4.0,
            num(yv)
        );
    }
    let _ = writeln!(
        out,
        r#"<text x="{}" y="{}" text-anchor="middle">{}</text>"#,
        PAD + w / 2.0,
        PAD + h + 36.0,
        escape(x_label)
    );
    let _ = writeln!(
        out,
        r#"<text x="16" y="{}" transform="rotate(-90 16 {})" text-anchor="middle">{}</text>"#,
        PAD + h / 2.0,
        PAD + h / 2.0,
        escape(y_label)
    );
    let path: Vec<String> = finite
        .iter()
        .map(|&(x, y)| format!("{:.2},{:.2}", px(x), py(y)))
        .collect();
    let _ = writeln!(
        out,
        r#"<polyline points="{}" fill="none" stroke="black"/>"#,
        path.join(" ")
    );
    out.push_str("</svg>\n");
    out
}
