//! SVG rendering of an instance and, optionally, a witness cross.

use std::fmt::Write;

use crate::geom::{Cross, PointSet};

const PALETTE: [&str; 12] = [
    "#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4", "#42d4f4", "#f032e6", "#bfef45",
    "#469990", "#9a6324", "#800000", "#000075",
];

pub fn color_fill(color: u32) -> &'static str {
    PALETTE[color as usize % PALETTE.len()]
}

/// Renders points as circles colored by id. With a cross, draws the two
/// axis lines through its center across the whole canvas and marks the four
/// witnesses with squares. The y-axis points up.
pub fn emit_svg(set: &PointSet, cross: Option<&Cross>) -> String {
    let mut coords: Vec<(f64, f64)> = set
        .points()
        .iter()
        .map(|p| (p.x.to_f64(), p.y.to_f64()))
        .collect();
    if let Some(c) = cross {
        coords.push((c.center.x.to_f64(), c.center.y.to_f64()));
    }
    let mut out = String::new();
    if coords.is_empty() {
        out.push_str("<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1 1\" width=\"400\" height=\"400\">\n</svg>\n");
        return out;
    }
    let (mut min_x, mut max_x, mut min_y, mut max_y) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for &(x, y) in &coords {
        min_x = min_x.min(x);
        max_x = max_x.max(x);
        min_y = min_y.min(y);
        max_y = max_y.max(y);
    }
    let span = (max_x - min_x).max(max_y - min_y).max(1e-9);
    let w = (max_x - min_x).max(span * 1e-3);
    let h = (max_y - min_y).max(span * 1e-3);
    let (mx, my) = (w * 0.05, h * 0.05);
    let (vx, vy, vw, vh) = (min_x - mx, -max_y - my, w + 2.0 * mx, h + 2.0 * my);
    let r = (vw.max(vh) / 200.0).max(1e-9);

    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{vx} {vy} {vw} {vh}\" width=\"800\" height=\"{}\">",
        (800.0 * vh / vw).round().clamp(1.0, 8000.0)
    );
    out.push_str("<g class=\"points\">\n");
    for p in set.points() {
        let _ = writeln!(
            out,
            "<circle cx=\"{}\" cy=\"{}\" r=\"{r}\" fill=\"{}\"><title>{} {} color {}</title></circle>",
            p.x.to_f64(),
            -p.y.to_f64(),
            color_fill(p.color.0),
            p.x,
            p.y,
            p.color
        );
    }
    out.push_str("</g>\n");
    if let Some(c) = cross {
        let (cx, cy) = (c.center.x.to_f64(), -c.center.y.to_f64());
        let sw = r / 3.0;
        out.push_str("<g class=\"cross\">\n");
        let _ = writeln!(
            out,
            "<line x1=\"{vx}\" y1=\"{cy}\" x2=\"{}\" y2=\"{cy}\" stroke=\"black\" stroke-width=\"{sw}\"/>",
            vx + vw
        );
        let _ = writeln!(
            out,
            "<line x1=\"{cx}\" y1=\"{vy}\" x2=\"{cx}\" y2=\"{}\" stroke=\"black\" stroke-width=\"{sw}\"/>",
            vy + vh
        );
        for w in &c.witnesses {
            let _ = writeln!(
                out,
                "<rect class=\"witness\" x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"{sw}\"/>",
                w.x.to_f64() - 2.0 * r,
                -w.y.to_f64() - 2.0 * r,
                4.0 * r,
                4.0 * r,
                color_fill(w.color.0)
            );
        }
        out.push_str("</g>\n");
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decider::decide;
    use crate::geom::ColoredPoint;

    #[test]
    fn cross_adds_two_lines_and_four_markers() {
        let set = PointSet::new(vec![
            ColoredPoint::new(1, 1, 0),
            ColoredPoint::new(-1, 1, 1),
            ColoredPoint::new(-1, -1, 2),
            ColoredPoint::new(1, -1, 3),
        ]);
        let cross = decide(&set).unwrap();
        let svg = emit_svg(&set, Some(&cross));
        assert_eq!(svg.matches("<line").count(), 2);
        assert_eq!(svg.matches("class=\"witness\"").count(), 4);
        assert_eq!(svg.matches("<circle").count(), 4);
    }

    #[test]
    fn empty_canvas() {
        let svg = emit_svg(&PointSet::default(), None);
        assert!(svg.starts_with("<svg") && svg.trim_end().ends_with("</svg>"));
        assert!(!svg.contains("<circle") && !svg.contains("<line"));
    }

    #[test]
    fn one_circle_per_point() {
        let set: PointSet = (0..1000)
            .map(|i| ColoredPoint::new(i % 37, i / 37, i as u32 % 20))
            .collect();
        let svg = emit_svg(&set, None);
        assert_eq!(svg.matches("<circle").count(), 1000);
        // the palette cycles
        assert_eq!(color_fill(0), color_fill(12));
    }

    #[test]
    fn degenerate_extent_still_has_positive_viewbox() {
        let set = PointSet::new(vec![ColoredPoint::new(3, 3, 0)]);
        let svg = emit_svg(&set, None);
        let vb = svg
            .split("viewBox=\"")
            .nth(1)
            .unwrap()
            .split('"')
            .next()
            .unwrap();
        let parts: Vec<f64> = vb.split(' ').map(|v| v.parse().unwrap()).collect();
        assert!(parts[2] > 0.0 && parts[3] > 0.0);
    }
}
