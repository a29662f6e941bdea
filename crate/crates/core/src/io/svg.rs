use std::f64::consts::PI;
use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::combinatorics::{Chord, Triangulation};
use crate::error::{Error, Result};

/// Stroke colors and layout for [`render_svg`]. Source chords are solid,
/// target chords dotted and common chords dashed.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RenderStyle {
    pub source_color: String,
    pub target_color: String,
    pub common_color: String,
    pub labels: bool,
    /// Radius of the circle carrying the polygon vertices.
    pub radius: f64,
    pub stroke_width: f64,
}

impl Default for RenderStyle {
    fn default() -> Self {
        RenderStyle {
            source_color: "blue".into(),
            target_color: "red".into(),
            common_color: "black".into(),
            labels: true,
            radius: 200.0,
            stroke_width: 2.0,
        }
    }
}

/// Draws `s`, optionally superimposed with `t`, as an SVG 1.1 document.
///
/// The root vertex sits at the top and labels increase counterclockwise.
/// Every chord is a `<line>` with class `source`, `target` or `common` and
/// a `data-chord` attribute, in that class order and sorted within a class,
/// so the output depends only on the inputs.
pub fn render_svg(s: &Triangulation, t: Option<&Triangulation>, style: &RenderStyle) -> Result<String> {
    if let Some(t) = t {
        if t.size() != s.size() {
            return Err(Error::SizeMismatch(s.size(), t.size()));
        }
    }
    let vertices = s.vertex_count();
    let margin = 30.0;
    let side = 2.0 * (style.radius + margin);
    let c = side / 2.0;
    let point = |v: usize| {
        let angle = PI / 2.0 + 2.0 * PI * ((v + 1) % vertices) as f64 / vertices as f64;
        (c + style.radius * angle.cos(), c - style.radius * angle.sin())
    };

    let (common, source_only, target_only): (Vec<Chord>, Vec<Chord>, Vec<Chord>) = match t {
        Some(t) => (
            s.chords().iter().copied().filter(|&x| t.contains(x)).collect(),
            s.chords().iter().copied().filter(|&x| !t.contains(x)).collect(),
            t.chords().iter().copied().filter(|&x| !s.contains(x)).collect(),
        ),
        None => (Vec::new(), s.chords().to_vec(), Vec::new()),
    };

    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{side:.0}" height="{side:.0}" viewBox="0 0 {side:.0} {side:.0}">"#
    );
    let outline: Vec<String> = (0..vertices)
        .map(|v| {
            let (x, y) = point(v);
            format!("{x:.3},{y:.3}")
        })
        .collect();
    let _ = writeln!(
        out,
        r#"<polygon class="boundary" points="{}" fill="none" stroke="gray" stroke-width="1"/>"#,
        outline.join(" ")
    );

    let groups = [
        ("source", &source_only, &style.source_color, None),
        ("target", &target_only, &style.target_color, Some("2,4")),
        ("common", &common, &style.common_color, Some("8,4")),
    ];
    for (class, chords, color, dash) in groups {
        for ch in chords.iter() {
            let (x1, y1) = point(ch.low());
            let (x2, y2) = point(ch.high());
            let dash = dash.map(|d| format!(r#" stroke-dasharray="{d}""#)).unwrap_or_default();
            let _ = writeln!(
                out,
                r#"<line class="{class}" data-chord="{ch}" x1="{x1:.3}" y1="{y1:.3}" x2="{x2:.3}" y2="{y2:.3}" stroke="{color}" stroke-width="{:.1}"{dash}/>"#,
                style.stroke_width
            );
        }
    }

    for v in 0..vertices {
        let (x, y) = point(v);
        let _ = writeln!(out, r#"<circle cx="{x:.3}" cy="{y:.3}" r="3" fill="black"/>"#);
        if style.labels {
            let (lx, ly) = (c + (x - c) * (1.0 + 16.0 / style.radius), c + (y - c) * (1.0 + 16.0 / style.radius));
            let label = if v == vertices - 1 { "r".to_string() } else { v.to_string() };
            let _ = writeln!(
                out,
                r#"<text x="{lx:.3}" y="{ly:.3}" font-family="sans-serif" font-size="12" text-anchor="middle" dominant-baseline="middle">{label}</text>"#
            );
        }
    }
    out.push_str("</svg>\n");
    Ok(out)
}
