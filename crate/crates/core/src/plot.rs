//! Root tables and static SVG scatter plots of zeros in the complex plane.

use std::fmt::Write as _;

use crate::roots::RootsReport;

/// Every root including the origin copies, sorted by (real, imaginary),
/// as `(re, im, residual)`.
pub fn all_roots(report: &RootsReport) -> Vec<(f64, f64, f64)> {
    let mut out: Vec<(f64, f64, f64)> =
        std::iter::repeat_n((0.0, 0.0, 0.0), report.origin_multiplicity)
            .chain(
                report
                    .numeric_roots
                    .iter()
                    .map(|r| (r.re, r.im, r.residual)),
            )
            .collect();
    out.sort_by(|a, b| {
        let ka = ((a.0 * 1e9).round(), a.1);
        let kb = ((b.0 * 1e9).round(), b.1);
        ka.partial_cmp(&kb).unwrap_or(std::cmp::Ordering::Equal)
    });
    out
}

pub fn roots_csv(report: &RootsReport) -> String {
    let mut s = String::from("re,im,residual\n");
    for (re, im, res) in all_roots(report) {
        writeln!(s, "{re:.15e},{im:.15e},{res:.3e}").unwrap();
    }
    s
}

const SIZE: f64 = 480.0;
const MARGIN: f64 = 30.0;

/// Green dots for zeros, axes, and the unit circle for reference.
pub fn roots_svg(report: &RootsReport, title: &str) -> String {
    let roots = all_roots(report);
    let extent = roots
        .iter()
        .map(|&(re, im, _)| re.abs().max(im.abs()))
        .fold(1.25f64, |m, v| m.max(1.1 * v));
    let scale = (SIZE / 2.0 - MARGIN) / extent;
    let c = SIZE / 2.0;
    let px = |v: f64| c + v * scale;
    let py = |v: f64| c - v * scale;

    let mut s = String::new();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    )
    .unwrap();
    writeln!(s, r#"  <rect width="100%" height="100%" fill="white"/>"#).unwrap();
    writeln!(s, r#"  <text x="{c:.2}" y="18" font-family="sans-serif" font-size="14" text-anchor="middle">{title}</text>"#).unwrap();
    let (lo, hi) = (MARGIN, SIZE - MARGIN);
    writeln!(s, r#"  <line x1="{lo:.2}" y1="{c:.2}" x2="{hi:.2}" y2="{c:.2}" stroke="black" stroke-width="1"/>"#).unwrap();
    writeln!(s, r#"  <line x1="{c:.2}" y1="{lo:.2}" x2="{c:.2}" y2="{hi:.2}" stroke="black" stroke-width="1"/>"#).unwrap();
    writeln!(
        s,
        r#"  <circle cx="{c:.2}" cy="{c:.2}" r="{:.2}" fill="none" stroke="gray" stroke-dasharray="4 3"/>"#,
        scale
    )
    .unwrap();
    writeln!(
        s,
        r#"  <text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="10">{extent:.2}</text>"#,
        hi - 24.0,
        c - 4.0
    )
    .unwrap();
    for (re, im, _) in roots {
        writeln!(
            s,
            r#"  <circle cx="{:.2}" cy="{:.2}" r="3" fill="green"/>"#,
            px(re),
            py(im)
        )
        .unwrap();
    }
    s.push_str("</svg>\n");
    s
}
