//! SVG rendering of a quadratic with its root-to-root area shaded.

use std::fmt::Write;

use anyhow::{bail, Result};
use pyquad::quadratic::{analyze, QuadPoly};

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 500.0;
const MARGIN: f64 = 60.0;
pub const SAMPLES: usize = 256;

struct Frame {
    x_min: f64,
    x_max: f64,
    y_min: f64,
    y_max: f64,
}

impl Frame {
    fn px(&self, x: f64) -> f64 {
        MARGIN + (x - self.x_min) / (self.x_max - self.x_min) * (WIDTH - 2.0 * MARGIN)
    }

    fn py(&self, y: f64) -> f64 {
        HEIGHT - MARGIN - (y - self.y_min) / (self.y_max - self.y_min) * (HEIGHT - 2.0 * MARGIN)
    }
}

fn eval(a: f64, b: f64, c: f64, x: f64) -> f64 {
    (a * x + b) * x + c
}

/// Renders `q` over `[x2 - margin, x1 + margin]`. The y axis is symmetric
/// around 0 and spans the vertex value plus 10%.
pub fn render_svg(q: &QuadPoly, title: &str) -> Result<String> {
    let report = analyze(q);
    let Some((lo, hi)) = report.roots.interval() else {
        bail!("{q} has no rational roots to shade between");
    };
    let (lo_f, hi_f) = (lo.to_f64(), hi.to_f64());
    let (vx, vy) = (report.vertex_x.to_f64(), report.vertex_y.to_f64());
    let span = (hi_f - lo_f).max(1.0);
    let reach = vy.abs().max(1.0) * 1.1;
    let frame = Frame {
        x_min: lo_f - 0.2 * span,
        x_max: hi_f + 0.2 * span,
        y_min: -reach,
        y_max: reach,
    };
    let [a, b, c] = q.coefficients().map(|v| {
        use num_traits::ToPrimitive;
        v.to_f64().unwrap_or(f64::NAN)
    });

    let sample = |from: f64, to: f64| -> Vec<(f64, f64)> {
        (0..SAMPLES)
            .map(|k| {
                let x = from + (to - from) * k as f64 / (SAMPLES - 1) as f64;
                (frame.px(x), frame.py(eval(a, b, c, x)))
            })
            .collect()
    };
    let points = |pts: &[(f64, f64)]| {
        pts.iter()
            .map(|(x, y)| format!("{x:.2},{y:.2}"))
            .collect::<Vec<_>>()
            .join(" ")
    };

    let curve = sample(frame.x_min, frame.x_max);
    let mut area = sample(lo_f, hi_f);
    area.push((frame.px(hi_f), frame.py(0.0)));
    area.push((frame.px(lo_f), frame.py(0.0)));

    let axis_y = frame.py(0.0);
    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="0 0 {WIDTH} {HEIGHT}" width="{WIDTH}" height="{HEIGHT}">"#
    );
    let _ = writeln!(svg, r#"<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#);
    let _ = writeln!(
        svg,
        r#"<defs><clipPath id="plot"><rect x="{MARGIN}" y="{MARGIN}" width="{}" height="{}"/></clipPath></defs>"#,
        WIDTH - 2.0 * MARGIN,
        HEIGHT - 2.0 * MARGIN
    );
    let _ = writeln!(
        svg,
        r#"<text x="{}" y="30" text-anchor="middle" font-family="sans-serif" font-size="16">{}</text>"#,
        WIDTH / 2.0,
        escape(title)
    );
    let _ = writeln!(
        svg,
        r##"<polygon class="area" clip-path="url(#plot)" fill="#3498db" fill-opacity="0.35" stroke="none" points="{}"/>"##,
        points(&area)
    );
    let _ = writeln!(
        svg,
        r##"<line class="x-axis" x1="{MARGIN}" y1="{axis_y:.2}" x2="{}" y2="{axis_y:.2}" stroke="#2c3e50"/>"##,
        WIDTH - MARGIN
    );
    if frame.x_min <= 0.0 && 0.0 <= frame.x_max {
        let axis_x = frame.px(0.0);
        let _ = writeln!(
            svg,
            r##"<line class="y-axis" x1="{axis_x:.2}" y1="{MARGIN}" x2="{axis_x:.2}" y2="{}" stroke="#2c3e50"/>"##,
            HEIGHT - MARGIN
        );
    }
    let _ = writeln!(
        svg,
        r##"<polyline class="curve" clip-path="url(#plot)" fill="none" stroke="#e74c3c" stroke-width="2" points="{}"/>"##,
        points(&curve)
    );

    let roots = [("x₁", report.roots.x1()), ("x₂", report.roots.x2())];
    for (name, root) in roots {
        let Some(root) = root else { continue };
        let px = frame.px(root.to_f64());
        let _ = writeln!(svg, r##"<circle cx="{px:.2}" cy="{axis_y:.2}" r="4" fill="#2c3e50"/>"##);
        // labels go on the side of the axis away from the shaded area
        let dy = if vy < 0.0 { -10.0 } else { 20.0 };
        let _ = writeln!(
            svg,
            r#"<text class="root-label" x="{px:.2}" y="{:.2}" text-anchor="middle" font-family="sans-serif" font-size="13">{name} = {root}</text>"#,
            axis_y + dy
        );
    }
    let (vpx, vpy) = (frame.px(vx), frame.py(vy));
    let _ = writeln!(svg, r##"<circle cx="{vpx:.2}" cy="{vpy:.2}" r="4" fill="#27ae60"/>"##);
    let _ = writeln!(
        svg,
        r#"<text class="vertex-label" x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="13">vertex ({}, {})</text>"#,
        vpx + 8.0,
        if vy < 0.0 { vpy + 16.0 } else { vpy - 8.0 },
        report.vertex_x,
        report.vertex_y
    );
    if let Some(integral) = &report.integral_signed {
        let _ = writeln!(
            svg,
            r#"<text class="integral-label" x="{}" y="{}" text-anchor="middle" font-family="sans-serif" font-size="13">∫ from x₂ to x₁ = {integral}</text>"#,
            WIDTH / 2.0,
            HEIGHT - 20.0
        );
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
