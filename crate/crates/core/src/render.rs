//! Deterministic SVG and TikZ drawings of polygons on the lattice. All
//! emitted coordinates are integers or fixed-precision literals, so the same
//! input always produces byte-identical output.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::point::LatticePoint;
use crate::polygon::ConvexLatticePolygon;

/// Options shared by both output formats.
#[derive(Clone, Debug)]
pub struct RenderOptions {
    /// Draw a dot on every lattice point of the padded frame.
    pub grid: bool,
    /// Mark the interior lattice points of the main polygon.
    pub highlight_interior: bool,
    /// A second polygon drawn behind the main one.
    pub overlay: Option<ConvexLatticePolygon>,
    /// Pixels (SVG) or scale factor (TikZ) per lattice unit.
    pub scale: u32,
    pub polygon_color: String,
    pub overlay_color: String,
}

impl Default for RenderOptions {
    fn default() -> Self {
        Self {
            grid: false,
            highlight_interior: false,
            overlay: None,
            scale: 20,
            polygon_color: "red".to_string(),
            overlay_color: "blue".to_string(),
        }
    }
}

fn check_scale(opts: &RenderOptions) -> Result<i64> {
    if opts.scale == 0 {
        return Err(Error::Parameter {
            message: "render scale must be at least 1".to_string(),
        });
    }
    Ok(opts.scale as i64)
}

/// Bounding frame of the drawing in lattice units: the main polygon united
/// with the overlay, padded by one unit on every side.
fn frame(p: &ConvexLatticePolygon, overlay: Option<&ConvexLatticePolygon>) -> (i64, i64, i64, i64) {
    let (mut lo, mut hi) = p.bounding_box();
    if let Some(other) = overlay {
        let (olo, ohi) = other.bounding_box();
        lo.x = lo.x.min(olo.x);
        lo.y = lo.y.min(olo.y);
        hi.x = hi.x.max(ohi.x);
        hi.y = hi.y.max(ohi.y);
    }
    (lo.x - 1, hi.x + 1, lo.y - 1, hi.y + 1)
}

/// Renders to SVG. The y axis flips here, and only here, so the lattice's +y
/// points up on screen.
pub fn render_svg(p: &ConvexLatticePolygon, opts: &RenderOptions) -> Result<String> {
    let s = check_scale(opts)?;
    let (x0, x1, y0, y1) = frame(p, opts.overlay.as_ref());
    let w = (x1 - x0) * s;
    let h = (y1 - y0) * s;
    let px = |pt: LatticePoint| ((pt.x - x0) * s, (y1 - pt.y) * s);
    let stroke = (s / 10).max(1);
    let grid_r = (s / 10).max(1);
    let mark_r = (s / 5).max(2);

    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {w} {h}" width="{w}" height="{h}">"#
    )
    .unwrap();
    if opts.grid {
        for y in y0..=y1 {
            for x in x0..=x1 {
                let (cx, cy) = px(LatticePoint::new(x, y));
                writeln!(
                    out,
                    r##"  <circle cx="{cx}" cy="{cy}" r="{grid_r}" fill="#bbbbbb"/>"##
                )
                .unwrap();
            }
        }
    }
    if let Some(other) = &opts.overlay {
        writeln!(
            out,
            r#"  <polygon points="{}" fill="none" stroke="{}" stroke-width="{stroke}"/>"#,
            points_attr(other, &px),
            opts.overlay_color
        )
        .unwrap();
    }
    writeln!(
        out,
        r#"  <polygon points="{}" fill="none" stroke="{}" stroke-width="{stroke}"/>"#,
        points_attr(p, &px),
        opts.polygon_color
    )
    .unwrap();
    if opts.highlight_interior {
        for q in p.interior_points() {
            let (cx, cy) = px(q);
            writeln!(
                out,
                r#"  <circle cx="{cx}" cy="{cy}" r="{mark_r}" fill="{}"/>"#,
                opts.polygon_color
            )
            .unwrap();
        }
    }
    out.push_str("</svg>\n");
    Ok(out)
}

fn points_attr(p: &ConvexLatticePolygon, px: &dyn Fn(LatticePoint) -> (i64, i64)) -> String {
    p.vertices()
        .iter()
        .map(|&v| {
            let (x, y) = px(v);
            format!("{x},{y}")
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Renders a TikZ picture in plain lattice coordinates.
pub fn render_tikz(p: &ConvexLatticePolygon, opts: &RenderOptions) -> Result<String> {
    check_scale(opts)?;
    let (x0, x1, y0, y1) = frame(p, opts.overlay.as_ref());

    let mut out = String::new();
    writeln!(out, r"\begin{{tikzpicture}}[scale={}]", opts.scale).unwrap();
    if opts.grid {
        for y in y0..=y1 {
            for x in x0..=x1 {
                writeln!(out, r"  \fill[gray!50] ({x},{y}) circle (0.05);").unwrap();
            }
        }
    }
    if let Some(other) = &opts.overlay {
        writeln!(
            out,
            r"  \draw[{}, thick] {} -- cycle;",
            opts.overlay_color,
            tikz_path(other)
        )
        .unwrap();
    }
    writeln!(
        out,
        r"  \draw[{}, thick] {} -- cycle;",
        opts.polygon_color,
        tikz_path(p)
    )
    .unwrap();
    if opts.highlight_interior {
        for q in p.interior_points() {
            writeln!(
                out,
                r"  \fill[{}] ({},{}) circle (0.1);",
                opts.polygon_color, q.x, q.y
            )
            .unwrap();
        }
    }
    out.push_str("\\end{tikzpicture}\n");
    Ok(out)
}

fn tikz_path(p: &ConvexLatticePolygon) -> String {
    p.vertices()
        .iter()
        .map(|v| format!("({},{})", v.x, v.y))
        .collect::<Vec<_>>()
        .join(" -- ")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(pts: &[(i64, i64)]) -> ConvexLatticePolygon {
        ConvexLatticePolygon::from_points(
            pts.iter().map(|&(x, y)| LatticePoint::new(x, y)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn svg_frame_pads_one_unit() {
        let t = poly(&[(0, 0), (1, 0), (0, 1)]);
        let svg = render_svg(&t, &RenderOptions::default()).unwrap();
        // frame [-1, 2] in both axes at 20 px per unit
        assert!(svg.contains(r#"viewBox="0 0 60 60""#));
        assert!(svg.contains("stroke=\"red\""));
        assert!(svg.ends_with("</svg>\n"));
    }

    #[test]
    fn svg_vertices_map_with_y_flip() {
        let t = poly(&[(0, 0), (1, 0), (0, 1)]);
        let svg = render_svg(&t, &RenderOptions::default()).unwrap();
        // (0,0) -> (20, 40); (1,0) -> (40, 40); (0,1) -> (20, 20)
        assert!(svg.contains(r#"points="20,40 40,40 20,20""#));
    }

    #[test]
    fn svg_is_byte_stable() {
        let t = poly(&[(0, 0), (6, -1), (5, 1)]);
        let opts = RenderOptions {
            grid: true,
            highlight_interior: true,
            ..RenderOptions::default()
        };
        assert_eq!(render_svg(&t, &opts).unwrap(), render_svg(&t, &opts).unwrap());
    }

    #[test]
    fn svg_overlay_draws_both_polygons() {
        let t = poly(&[(0, 0), (6, -1), (5, 1)]);
        let bigger = poly(&[(0, 0), (5, -1), (6, -1), (6, 0), (5, 1), (4, 1)]);
        let opts = RenderOptions {
            overlay: Some(t.clone()),
            ..RenderOptions::default()
        };
        let svg = render_svg(&bigger, &opts).unwrap();
        assert_eq!(svg.matches("<polygon").count(), 2);
        assert!(svg.contains("stroke=\"blue\""));
        assert!(svg.contains("stroke=\"red\""));
    }

    #[test]
    fn svg_interior_markers_count() {
        let t = poly(&[(0, 0), (6, -1), (5, 1)]);
        let opts = RenderOptions {
            highlight_interior: true,
            ..RenderOptions::default()
        };
        let svg = render_svg(&t, &opts).unwrap();
        assert_eq!(svg.matches("<circle").count(), 5);
    }

    #[test]
    fn tikz_unit_triangle_is_one_closed_path() {
        let t = poly(&[(0, 0), (1, 0), (0, 1)]);
        let opts = RenderOptions {
            scale: 1,
            ..RenderOptions::default()
        };
        let tikz = render_tikz(&t, &opts).unwrap();
        assert!(tikz.starts_with("\\begin{tikzpicture}[scale=1]"));
        assert!(tikz.ends_with("\\end{tikzpicture}\n"));
        assert!(tikz.contains(r"\draw[red, thick] (0,0) -- (1,0) -- (0,1) -- cycle;"));
        assert_eq!(tikz.matches(" -- ").count(), 3);
        assert_eq!(tikz.matches(r"\draw").count(), 1);
    }

    #[test]
    fn tikz_quadrilateral_markers_and_overlay() {
        let quad = poly(&[(0, 0), (3, -1), (4, 1), (1, 2)]);
        let opts = RenderOptions {
            highlight_interior: true,
            scale: 1,
            ..RenderOptions::default()
        };
        let tikz = render_tikz(&quad, &opts).unwrap();
        assert_eq!(tikz.matches(r"\draw").count(), 1);
        assert_eq!(tikz.matches("circle (0.1)").count(), 6);

        // overlaying the quadrilateral under its grown hexagon puts the two
        // apexes on the second (main) path only
        let grown = poly(&[(0, 0), (2, -1), (3, -1), (4, 1), (2, 2), (1, 2)]);
        let opts = RenderOptions {
            overlay: Some(quad),
            scale: 1,
            ..RenderOptions::default()
        };
        let tikz = render_tikz(&grown, &opts).unwrap();
        assert_eq!(tikz.matches(r"\draw").count(), 2);
        let main = tikz.rfind(r"\draw[red").unwrap();
        assert!(tikz[..main].contains(r"\draw[blue"));
        assert!(tikz[main..].contains("(2,-1)") && tikz[main..].contains("(2,2)"));
    }

    #[test]
    fn zero_scale_is_rejected() {
        let t = poly(&[(0, 0), (1, 0), (0, 1)]);
        let opts = RenderOptions {
            scale: 0,
            ..RenderOptions::default()
        };
        assert!(matches!(render_svg(&t, &opts), Err(Error::Parameter { .. })));
        assert!(matches!(render_tikz(&t, &opts), Err(Error::Parameter { .. })));
    }
}
