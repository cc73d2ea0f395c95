//! Deterministic SVG rendering of the constructions: polygon, enclosing
//! triangles, auxiliary chords (HF, JF, GH, ST), contact markers and labels.
//! Output is byte-identical across runs for identical input; coordinates are
//! quantized to 3 decimal places and the y-axis is flipped so mathematical
//! "up" renders up.

use crate::construct;
use crate::error::{Error, Result};
use crate::geom::{named_chords, segment_st, Chord, ConvexPolygon, NGonSpec, Point2, Triangle};
use crate::profile::{pentagon_chord_height, Shape};
use crate::solver::enclosing_triangle_with_apex;
use std::fmt::Write as _;

pub const FIGURE_COUNT: u32 = 14;

#[derive(Debug, Clone, Default)]
pub struct Scene {
    pub polygon: Option<ConvexPolygon>,
    pub triangles: Vec<Triangle>,
    pub chords: Vec<Chord>,
    /// Auxiliary straight segments that are not horizontal chords.
    pub segments: Vec<(Point2, Point2)>,
    pub labels: Vec<(String, Point2)>,
    pub markers: Vec<Point2>,
    pub figure_id: Option<u32>,
}

impl Scene {
    fn bounds(&self) -> Option<(Point2, Point2)> {
        let mut pts: Vec<Point2> = Vec::new();
        if let Some(p) = &self.polygon {
            pts.extend_from_slice(p.vertices());
        }
        for t in &self.triangles {
            pts.extend_from_slice(&[t.a, t.b, t.c]);
        }
        for c in &self.chords {
            pts.extend_from_slice(&c.endpoints);
        }
        for (p, q) in &self.segments {
            pts.extend_from_slice(&[*p, *q]);
        }
        pts.extend(self.markers.iter().copied());
        if pts.is_empty() {
            return None;
        }
        let min = Point2::new(
            pts.iter().map(|p| p.x).fold(f64::MAX, f64::min),
            pts.iter().map(|p| p.y).fold(f64::MAX, f64::min),
        );
        let max = Point2::new(
            pts.iter().map(|p| p.x).fold(f64::MIN, f64::max),
            pts.iter().map(|p| p.y).fold(f64::MIN, f64::max),
        );
        Some((min, max))
    }

    fn label_polygon(&mut self) {
        if let Some(poly) = &self.polygon {
            let labels = crate::geom::vertex_labels(poly.len());
            for (v, name) in poly.vertices().iter().zip(labels) {
                self.labels.push((name.to_string(), *v));
            }
        }
    }

    fn label_triangle(&mut self, t: &Triangle, names: [&str; 3]) {
        self.labels.push((names[0].to_string(), t.a));
        self.labels.push((names[1].to_string(), t.b));
        self.labels.push((names[2].to_string(), t.c));
    }
}

struct Mapper {
    min: Point2,
    max_y: f64,
    scale: f64,
    margin: f64,
}

impl Mapper {
    fn map(&self, p: Point2) -> (f64, f64) {
        (
            (p.x - self.min.x) * self.scale + self.margin,
            (self.max_y - p.y) * self.scale + self.margin,
        )
    }
}

fn fmt3(v: f64) -> String {
    // Avoid "-0.000" so output is stable around zero.
    let r = (v * 1000.0).round() / 1000.0;
    format!("{:.3}", if r == 0.0 { 0.0 } else { r })
}

/// Renders a scene as an SVG 1.1 document of the given pixel width (>= 100).
pub fn render_scene(scene: &Scene, width_px: u32) -> Result<String> {
    if width_px < 100 {
        return Err(Error::WidthTooSmall(width_px));
    }
    let (min, max) = scene.bounds().ok_or(Error::EmptyScene)?;
    let span_x = (max.x - min.x).max(1e-9);
    let span_y = (max.y - min.y).max(1e-9);
    let margin_frac = 0.05;
    let w = width_px as f64;
    let scale = w * (1.0 - 2.0 * margin_frac) / span_x;
    let margin = w * margin_frac;
    let h = span_y * scale + 2.0 * margin;
    let m = Mapper {
        min,
        max_y: max.y,
        scale,
        margin,
    };

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\">",
        width_px,
        fmt3(h),
        width_px,
        fmt3(h)
    );
    let _ = writeln!(
        out,
        "<rect width=\"{}\" height=\"{}\" fill=\"#ffffff\"/>",
        width_px,
        fmt3(h)
    );

    if let Some(poly) = &scene.polygon {
        let mut d = String::new();
        for (i, &v) in poly.vertices().iter().enumerate() {
            let (x, y) = m.map(v);
            let _ = write!(
                d,
                "{}{},{}",
                if i == 0 { "M" } else { " L" },
                fmt3(x),
                fmt3(y)
            );
        }
        d.push_str(" Z");
        let _ = writeln!(
            out,
            "<path d=\"{d}\" fill=\"#4878a8\" fill-opacity=\"0.2\" stroke=\"#4878a8\" stroke-width=\"1.5\"/>"
        );
    }

    for t in &scene.triangles {
        let mut d = String::new();
        for (i, &v) in [t.a, t.b, t.c].iter().enumerate() {
            let (x, y) = m.map(v);
            let _ = write!(
                d,
                "{}{},{}",
                if i == 0 { "M" } else { " L" },
                fmt3(x),
                fmt3(y)
            );
        }
        d.push_str(" Z");
        let _ = writeln!(
            out,
            "<path d=\"{d}\" fill=\"none\" stroke=\"#c03030\" stroke-width=\"1.5\"/>"
        );
    }

    let dashed: Vec<(Point2, Point2)> = scene
        .chords
        .iter()
        .map(|c| (c.endpoints[0], c.endpoints[1]))
        .chain(scene.segments.iter().copied())
        .collect();
    for (p, q) in dashed {
        let (x1, y1) = m.map(p);
        let (x2, y2) = m.map(q);
        let _ = writeln!(
            out,
            "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#2a7f3f\" stroke-width=\"1.2\" stroke-dasharray=\"6 4\"/>",
            fmt3(x1),
            fmt3(y1),
            fmt3(x2),
            fmt3(y2)
        );
    }

    for p in &scene.markers {
        let (x, y) = m.map(*p);
        let _ = writeln!(
            out,
            "<circle cx=\"{}\" cy=\"{}\" r=\"3\" fill=\"#202020\"/>",
            fmt3(x),
            fmt3(y)
        );
    }

    for (text, p) in &scene.labels {
        let (x, y) = m.map(*p);
        let _ = writeln!(
            out,
            "<text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#202020\">{}</text>",
            fmt3(x + 5.0),
            fmt3(y - 5.0),
            text
        );
    }

    out.push_str("</svg>\n");
    Ok(out)
}

fn apex_tri(shape: Shape, t: f64, h: f64) -> Triangle {
    enclosing_triangle_with_apex(&shape.canonical_polygon(), 0, Point2::new(t, h))
        .expect("figure apex is feasible")
        .triangle
}

/// The registered construction behind each of the 14 figures.
pub fn figure_scene(figure_id: u32) -> Result<Scene> {
    let rt3 = 3.0_f64.sqrt();
    let two_d = 2.0 * pentagon_chord_height();
    let mut scene = Scene {
        figure_id: Some(figure_id),
        ..Scene::default()
    };
    match figure_id {
        // Square: generic inscribing triangle and the similar triangle GFC.
        1 => {
            scene.polygon = Some(Shape::Square.canonical_polygon());
            let t = apex_tri(Shape::Square, 0.7, 2.5);
            scene.label_triangle(&t, ["A", "B", "C"]);
            scene.triangles.push(t);
        }
        2 => {
            scene.polygon = Some(Shape::Square.canonical_polygon());
            let t = construct::square_right_triangle();
            scene.label_triangle(&t, ["A", "B", "C"]);
            scene.triangles.push(t);
        }
        3 => {
            scene.polygon = Some(Shape::Square.canonical_polygon());
            let t = apex_tri(Shape::Square, 0.5, 1.0 + rt3 / 2.0);
            scene.label_triangle(&t, ["A", "B", "C"]);
            scene.triangles.push(t);
        }
        4 => {
            scene.polygon = Some(Shape::Square.canonical_polygon());
            let t = apex_tri(Shape::Square, 0.5, (6.0 + rt3) / 6.0);
            scene.label_triangle(&t, ["A", "B", "C"]);
            scene.triangles.push(t);
        }
        // Pentagon: chord HF and the minimal triangle with apex on ST.
        5 => {
            scene.polygon = Some(Shape::Pentagon.canonical_polygon());
            scene.chords = named_chords(&NGonSpec::canonical(5, 1.0))?;
            let t = apex_tri(Shape::Pentagon, 0.5, two_d);
            scene.label_triangle(&t, ["A", "B", "C"]);
            scene.triangles.push(t);
        }
        6 => {
            scene.polygon = Some(Shape::Pentagon.canonical_polygon());
            let t = apex_tri(Shape::Pentagon, 0.5, 2.0);
            scene.label_triangle(&t, ["A", "B", "C"]);
            scene.triangles.push(t);
        }
        7 => {
            scene.polygon = Some(Shape::Pentagon.canonical_polygon());
            let t = construct::pentagon_perpendicular_triangle();
            scene.label_triangle(&t, ["A", "B", "C"]);
            scene.triangles.push(t);
        }
        8 => {
            let pent = Shape::Pentagon.canonical_polygon();
            let g = pent.vertices()[3];
            let t = enclosing_triangle_with_apex(&pent, 0, g)?.triangle;
            scene.polygon = Some(pent);
            scene.label_triangle(&t, ["A", "B", "C"]);
            scene.triangles.push(t);
        }
        // Proof figure: perpendicular construction, its mirrored copy, the
        // chord HF, and the point K on AB with KB = 2e.
        9 => {
            scene.polygon = Some(Shape::Pentagon.canonical_polygon());
            scene.chords = named_chords(&NGonSpec::canonical(5, 1.0))?;
            let t = construct::pentagon_perpendicular_triangle();
            let copy = construct::mirrored_about_base_midline(&t);
            let e = 5.0_f64.sqrt() - 1.0; // 2e = sqrt(5) - 1
            let k = Point2::new(t.b.x - e, 0.0);
            scene.markers.push(k);
            scene.labels.push(("K".to_string(), k));
            scene.label_triangle(&t, ["A", "B", "C"]);
            scene.label_triangle(&copy, ["A'", "B'", "C'"]);
            scene.triangles.push(t);
            scene.triangles.push(copy);
        }
        10 => {
            let pent = Shape::Pentagon.canonical_polygon();
            scene.chords = vec![segment_st(&pent)?];
            scene.polygon = Some(pent);
            let t = apex_tri(Shape::Pentagon, 0.25, two_d);
            scene.label_triangle(&t, ["A'", "B'", "C'"]);
            scene.triangles.push(t);
        }
        // Generic non-optimal apex above ST.
        11 => {
            let pent = Shape::Pentagon.canonical_polygon();
            scene.chords = vec![segment_st(&pent)?];
            scene.polygon = Some(pent);
            let t = apex_tri(Shape::Pentagon, 0.5, 2.3);
            scene.label_triangle(&t, ["A", "B", "C"]);
            scene.triangles.push(t);
        }
        // Hexagon subdivided into six equilateral triangles.
        12 => {
            let hex = Shape::Hexagon.canonical_polygon();
            let v = hex.vertices();
            scene.segments = vec![(v[0], v[3]), (v[1], v[4]), (v[2], v[5])];
            scene.polygon = Some(hex);
        }
        13 => {
            scene.polygon = Some(Shape::Hexagon.canonical_polygon());
            let t = apex_tri(Shape::Hexagon, 0.5, 1.5 * rt3);
            scene.label_triangle(&t, ["A", "B", "C"]);
            scene.triangles.push(t);
        }
        14 => {
            scene.polygon = Some(Shape::Hexagon.canonical_polygon());
            let t1 = apex_tri(Shape::Hexagon, 0.5, 3.0);
            let t2 = apex_tri(Shape::Hexagon, 0.5, 2.25);
            scene.label_triangle(&t1, ["A", "B", "C"]);
            scene.label_triangle(&t2, ["A'", "B'", "C'"]);
            scene.triangles.push(t1);
            scene.triangles.push(t2);
        }
        other => return Err(Error::UnknownFigure(other)),
    }
    scene.label_polygon();
    Ok(scene)
}

/// Renders one of the registered figures.
pub fn render_figure(figure_id: u32, width_px: u32) -> Result<String> {
    render_scene(&figure_scene(figure_id)?, width_px)
}

/// Conventional output name: fig01.svg .. fig14.svg.
pub fn figure_filename(figure_id: u32) -> String {
    format!("fig{figure_id:02}.svg")
}
