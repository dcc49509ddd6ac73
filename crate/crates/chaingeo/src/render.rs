//! Deterministic SVG output for the chain figures.
//!
//! Coordinates are printed with a fixed number of decimals and no
//! locale or exponent notation, so identical inputs produce
//! byte-identical documents. The y axis is flipped at render time only;
//! the model keeps mathematical orientation.

use std::fmt::Write as _;

use crate::config::{ChainConfig, ChainKind, square_in_delta, VerificationReport};
use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct RenderOptions {
    pub width_px: u32,
    pub margin_fraction: f64,
    pub show_labels: bool,
    pub show_square: bool,
    /// Decimal places for printed coordinates, 2..=12.
    pub decimals: usize,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            width_px: 800,
            margin_fraction: 1.0 / 10.0,
            show_labels: false,
            show_square: false,
            decimals: 4,
        }
    }
}

impl RenderOptions {
    fn validate(&self) -> Result<()> {
        if self.width_px < 100 {
            return Err(Error::InvalidParameter("width_px must be >= 100".into()));
        }
        if !(self.margin_fraction > 0.0 && self.margin_fraction < 0.5) {
            return Err(Error::InvalidParameter("margin_fraction must lie in (0, 1/2)".into()));
        }
        if !(2..=12).contains(&self.decimals) {
            return Err(Error::InvalidParameter("decimals must lie in 2..=12".into()));
        }
        Ok(())
    }
}

struct Frame {
    x_min: f64,
    y_max: f64,
    margin: f64,
    scale: f64,
    decimals: usize,
}

impl Frame {
    fn x(&self, x: f64) -> String {
        self.fmt((x - self.x_min + self.margin) * self.scale)
    }
    fn y(&self, y: f64) -> String {
        self.fmt((self.y_max + self.margin - y) * self.scale)
    }
    fn len(&self, l: f64) -> String {
        self.fmt(l * self.scale)
    }
    fn fmt(&self, v: f64) -> String {
        let mut s = format!("{:.*}", self.decimals, v);
        if s.starts_with("-0.") && s[1..].bytes().all(|b| b == b'0' || b == b'.') {
            s.remove(0); // normalize negative zero
        }
        s
    }
}

/// Render a configuration as a standalone SVG 1.1 document.
pub fn render_svg(cfg: &ChainConfig, opts: &RenderOptions) -> Result<String> {
    opts.validate()?;
    if opts.show_square && !(cfg.kind == ChainKind::CB && cfg.n == 1) {
        return Err(Error::InvalidParameter(
            "the inscribed square only exists for CB(1)".into(),
        ));
    }

    let circles: Vec<(f64, f64, f64)> = cfg
        .outer
        .iter()
        .chain(cfg.chain.iter())
        .map(|c| (c.center.x.to_f64(), c.center.y.to_f64(), c.r.to_f64()))
        .collect();
    let x_min = circles.iter().map(|c| c.0 - c.2).fold(f64::INFINITY, f64::min);
    let x_max = circles.iter().map(|c| c.0 + c.2).fold(f64::NEG_INFINITY, f64::max);
    let y_max = circles.iter().map(|c| c.1 + c.2).fold(f64::NEG_INFINITY, f64::max);
    let span = (x_max - x_min).max(y_max);
    let margin = opts.margin_fraction * span;
    let scale = opts.width_px as f64 / (x_max - x_min + 2.0 * margin);
    let frame = Frame { x_min, y_max, margin, scale, decimals: opts.decimals };
    let height = (y_max + 2.0 * margin) * scale;

    let mut svg = String::new();
    let _ = writeln!(svg, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{}" height="{}" viewBox="0 0 {} {}">"#,
        opts.width_px,
        frame.fmt(height),
        opts.width_px,
        frame.fmt(height),
    );
    let _ = writeln!(svg, r#"  <title>{}({})</title>"#, cfg.kind.as_str(), cfg.n);

    // baseline, extended through the margins
    let _ = writeln!(
        svg,
        r#"  <line class="baseline" x1="0" y1="{y}" x2="{w}" y2="{y}" stroke="black" stroke-width="1"/>"#,
        y = frame.y(0.0),
        w = opts.width_px,
    );

    for &(cx, cy, r) in &circles {
        let _ = writeln!(
            svg,
            r#"  <circle class="circle" cx="{}" cy="{}" r="{}" fill="none" stroke="black" stroke-width="1"/>"#,
            frame.x(cx),
            frame.y(cy),
            frame.len(r),
        );
    }

    if opts.show_square {
        let sq = square_in_delta(&cfg.a)?;
        let corners = [&sq.a, &sq.b, &sq.c, &sq.d];
        let mut d = String::new();
        for (i, p) in corners.iter().enumerate() {
            let _ = write!(
                d,
                "{}{} {}",
                if i == 0 { "M" } else { " L" },
                frame.x(p.x.to_f64()),
                frame.y(p.y.to_f64()),
            );
        }
        d.push_str(" Z");
        let _ = writeln!(
            svg,
            r#"  <path class="square" d="{d}" fill="none" stroke="black" stroke-width="1"/>"#
        );
    }

    // tangency points A, B, C drawn as small filled squares so that the
    // <circle> elements of the document are exactly the model's circles
    let dot = 2.5;
    for (name, p) in [("A", &cfg.a_point), ("B", &cfg.b_point), ("C", &cfg.c_point)] {
        let px = (p.x.to_f64() - frame.x_min + frame.margin) * frame.scale;
        let py = (frame.y_max + frame.margin - p.y.to_f64()) * frame.scale;
        let _ = writeln!(
            svg,
            r#"  <rect class="pt" x="{}" y="{}" width="5" height="5" fill="black"/>"#,
            frame.fmt(px - dot),
            frame.fmt(py - dot),
        );
        if opts.show_labels {
            let _ = writeln!(
                svg,
                r#"  <text class="label" x="{}" y="{}" font-size="14">{}</text>"#,
                frame.fmt(px + 5.0),
                frame.fmt(py - 5.0),
                name,
            );
        }
    }

    if opts.show_labels {
        for (i, &(cx, cy, _)) in circles.iter().enumerate().skip(cfg.outer.len()) {
            let _ = writeln!(
                svg,
                r#"  <text class="label" x="{}" y="{}" font-size="12" text-anchor="middle">β{}</text>"#,
                frame.x(cx),
                frame.y(cy),
                i - cfg.outer.len() + 1,
            );
        }
    }

    svg.push_str("</svg>\n");
    Ok(svg)
}

/// Plain-text table of a verification report, one line per identity.
pub fn render_report(report: &VerificationReport) -> String {
    let width = report
        .entries
        .iter()
        .map(|(name, _)| name.len())
        .max()
        .unwrap_or(0);
    let mut out = String::new();
    for (name, ok) in &report.entries {
        let _ = writeln!(out, "{name:width$}  {}", if *ok { "PASS" } else { "FAIL" });
    }
    let _ = writeln!(out, "OVERALL {}", if report.overall() { "PASS" } else { "FAIL" });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::{build_ca, build_cb, verify_config};
    use crate::qfield::{parse_rational, QNum};

    fn qr(s: &str, rad: u64) -> QNum {
        QNum::rational(parse_rational(s).unwrap(), rad)
    }

    #[test]
    fn element_counts_match_config_shape() {
        let cfg = build_cb(5, &qr("1", 5)).unwrap();
        let svg = render_svg(&cfg, &RenderOptions::default()).unwrap();
        assert_eq!(svg.matches("<circle").count(), 7);
        assert_eq!(svg.matches("<line").count(), 1);
        assert_eq!(svg.matches(r#"class="pt""#).count(), 3);
        assert!(!svg.contains("<path"));
    }

    #[test]
    fn deterministic_output() {
        let cfg = build_ca(4, &qr("1", 1)).unwrap();
        let a = render_svg(&cfg, &RenderOptions::default()).unwrap();
        let b = render_svg(&cfg, &RenderOptions::default()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn square_overlay_only_on_cb1() {
        let opts = RenderOptions { show_square: true, ..RenderOptions::default() };
        let cfg = build_cb(1, &qr("1", 1)).unwrap();
        let svg = render_svg(&cfg, &opts).unwrap();
        assert_eq!(svg.matches("<path").count(), 1);
        assert!(render_svg(&build_cb(2, &qr("1", 2)).unwrap(), &opts).is_err());
        assert!(render_svg(&build_ca(3, &qr("1", 1)).unwrap(), &opts).is_err());
    }

    #[test]
    fn square_corners_meet_markers_at_printed_precision() {
        let opts = RenderOptions { show_square: true, ..RenderOptions::default() };
        let cfg = build_cb(1, &qr("1", 1)).unwrap();
        let svg = render_svg(&cfg, &opts).unwrap();
        // the B marker center reappears in the square path
        let sq = square_in_delta(&cfg.a).unwrap();
        assert_eq!(sq.b, cfg.b_point);
        assert!(svg.contains("class=\"square\""));
    }

    #[test]
    fn option_validation() {
        let cfg = build_cb(2, &qr("1", 2)).unwrap();
        let bad = RenderOptions { width_px: 10, ..RenderOptions::default() };
        assert!(render_svg(&cfg, &bad).is_err());
        let bad = RenderOptions { decimals: 1, ..RenderOptions::default() };
        assert!(render_svg(&cfg, &bad).is_err());
        let bad = RenderOptions { margin_fraction: 0.5, ..RenderOptions::default() };
        assert!(render_svg(&cfg, &bad).is_err());
    }

    #[test]
    fn report_rendering() {
        let cfg = build_cb(3, &qr("1", 3)).unwrap();
        let report = verify_config(&cfg);
        let text = render_report(&report);
        assert_eq!(text.lines().count(), report.entries.len() + 1);
        assert!(text.ends_with("OVERALL PASS\n"));

        let mut broken = report.clone();
        broken.entries[0].1 = false;
        let text = render_report(&broken);
        assert!(text.lines().next().unwrap().ends_with("FAIL"));
        assert!(text.ends_with("OVERALL FAIL\n"));

        let empty = VerificationReport { entries: vec![] };
        assert_eq!(render_report(&empty), "OVERALL PASS\n");
    }
}
