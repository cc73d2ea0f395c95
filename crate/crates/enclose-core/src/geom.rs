//! Planar primitives: points, strictly convex polygons, triangles, regular
//! n-gon construction in a canonical pose, and the named auxiliary chords
//! (HF, JF, GH, ST) of the unit pentagon and hexagon.
//!
//! Canonical pose: the labeled base side DE lies on the x-axis with D at the
//! origin and vertices ordered counterclockwise.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Consecutive vertices closer than this are rejected.
pub const MIN_VERTEX_SEPARATION: f64 = 1e-12;
/// Triangles with area at or below this are degenerate.
pub const DEGENERACY_AREA: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub fn new(x: f64, y: f64) -> Self {
        Point2 { x, y }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    #[allow(clippy::should_implement_trait)]
    pub fn add(self, other: Point2) -> Point2 {
        Point2::new(self.x + other.x, self.y + other.y)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn sub(self, other: Point2) -> Point2 {
        Point2::new(self.x - other.x, self.y - other.y)
    }

    pub fn scale(self, k: f64) -> Point2 {
        Point2::new(self.x * k, self.y * k)
    }

    pub fn dot(self, other: Point2) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the cross product of two plane vectors.
    pub fn cross(self, other: Point2) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn distance(self, other: Point2) -> f64 {
        self.sub(other).norm()
    }

    /// Rotation about the origin by `angle` radians (counterclockwise).
    pub fn rotated(self, angle: f64) -> Point2 {
        let (s, c) = angle.sin_cos();
        Point2::new(c * self.x - s * self.y, s * self.x + c * self.y)
    }
}

/// Orientation test: > 0 when a→b→c is a left (counterclockwise) turn.
pub fn orient(a: Point2, b: Point2, c: Point2) -> f64 {
    b.sub(a).cross(c.sub(a))
}

/// Strictly convex polygon with counterclockwise vertex order.
///
/// Serializes to the polygon file format `{"vertices": [[x, y], ...]}`.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvexPolygon {
    vertices: Vec<Point2>,
}

impl ConvexPolygon {
    /// Validates finiteness, vertex separation, counterclockwise order and
    /// strict convexity (collinear triples are rejected, not merged).
    pub fn new(vertices: Vec<Point2>) -> Result<Self> {
        let n = vertices.len();
        if n < 3 {
            return Err(Error::InvalidPolygon(format!(
                "need at least 3 vertices, got {n}"
            )));
        }
        for (i, v) in vertices.iter().enumerate() {
            if !v.is_finite() {
                return Err(Error::InvalidPolygon(format!(
                    "vertex {i} has non-finite coordinates"
                )));
            }
        }
        for i in 0..n {
            let d = vertices[i].distance(vertices[(i + 1) % n]);
            if d <= MIN_VERTEX_SEPARATION {
                return Err(Error::InvalidPolygon(format!(
                    "vertices {i} and {} nearly coincide (distance {d:e})",
                    (i + 1) % n
                )));
            }
        }
        for i in 0..n {
            let o = orient(vertices[i], vertices[(i + 1) % n], vertices[(i + 2) % n]);
            if o <= MIN_VERTEX_SEPARATION {
                return Err(Error::InvalidPolygon(format!(
                    "vertices {i}..{} are not a strict left turn (orientation {o:e}); \
                     polygon must be strictly convex and counterclockwise",
                    (i + 2) % n
                )));
            }
        }
        Ok(ConvexPolygon { vertices })
    }

    pub fn vertices(&self) -> &[Point2] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Shoelace area; positive because vertices are counterclockwise.
    pub fn area(&self) -> f64 {
        let n = self.vertices.len();
        let mut acc = 0.0;
        for i in 0..n {
            acc += self.vertices[i].cross(self.vertices[(i + 1) % n]);
        }
        acc / 2.0
    }

    /// Rigid motion: rotation about the origin followed by a translation.
    pub fn transformed(&self, angle: f64, translation: Point2) -> ConvexPolygon {
        ConvexPolygon {
            vertices: self
                .vertices
                .iter()
                .map(|v| v.rotated(angle).add(translation))
                .collect(),
        }
    }

    pub fn scaled(&self, k: f64) -> Result<ConvexPolygon> {
        ConvexPolygon::new(self.vertices.iter().map(|v| v.scale(k)).collect())
    }
}

#[derive(Serialize, Deserialize)]
struct PolygonFile {
    vertices: Vec<[f64; 2]>,
}

impl Serialize for ConvexPolygon {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        PolygonFile {
            vertices: self.vertices.iter().map(|v| [v.x, v.y]).collect(),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for ConvexPolygon {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let raw = PolygonFile::deserialize(de)?;
        ConvexPolygon::new(
            raw.vertices
                .into_iter()
                .map(|[x, y]| Point2::new(x, y))
                .collect(),
        )
        .map_err(serde::de::Error::custom)
    }
}

/// Triangle with vertices A, B, C. Non-degenerate by construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Triangle {
    pub a: Point2,
    pub b: Point2,
    pub c: Point2,
}

impl Triangle {
    pub fn new(a: Point2, b: Point2, c: Point2) -> Result<Self> {
        let t = Triangle { a, b, c };
        if !(a.is_finite() && b.is_finite() && c.is_finite()) || t.area() <= DEGENERACY_AREA {
            return Err(Error::DegenerateTriangle);
        }
        Ok(t)
    }

    pub fn area(&self) -> f64 {
        orient(self.a, self.b, self.c).abs() / 2.0
    }

    pub fn side_lengths(&self) -> [f64; 3] {
        [
            self.a.distance(self.b),
            self.b.distance(self.c),
            self.c.distance(self.a),
        ]
    }

    pub fn centroid(&self) -> Point2 {
        Point2::new(
            (self.a.x + self.b.x + self.c.x) / 3.0,
            (self.a.y + self.b.y + self.c.y) / 3.0,
        )
    }

    pub fn scaled_about_centroid(&self, k: f64) -> Result<Triangle> {
        let g = self.centroid();
        Triangle::new(
            g.add(self.a.sub(g).scale(k)),
            g.add(self.b.sub(g).scale(k)),
            g.add(self.c.sub(g).scale(k)),
        )
    }

    pub fn transformed(&self, angle: f64, translation: Point2) -> Triangle {
        Triangle {
            a: self.a.rotated(angle).add(translation),
            b: self.b.rotated(angle).add(translation),
            c: self.c.rotated(angle).add(translation),
        }
    }

    /// True iff every polygon vertex is inside the triangle or within `tol`
    /// of its boundary (signed distance against each side).
    pub fn contains_polygon(&self, poly: &ConvexPolygon, tol: f64) -> bool {
        // Orient counterclockwise so inner side means positive signed distance.
        let (a, b, c) = if orient(self.a, self.b, self.c) >= 0.0 {
            (self.a, self.b, self.c)
        } else {
            (self.a, self.c, self.b)
        };
        for &(p, q) in &[(a, b), (b, c), (c, a)] {
            let edge = q.sub(p);
            let len = edge.norm();
            for &v in poly.vertices() {
                if edge.cross(v.sub(p)) / len < -tol {
                    return false;
                }
            }
        }
        true
    }
}

/// Construction spec for a regular n-gon.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NGonSpec {
    pub n: usize,
    pub side: f64,
    pub rotation: f64,
    pub translation: Point2,
}

impl NGonSpec {
    pub fn canonical(n: usize, side: f64) -> Self {
        NGonSpec {
            n,
            side,
            rotation: 0.0,
            translation: Point2::new(0.0, 0.0),
        }
    }

    pub fn is_canonical_unit(&self) -> bool {
        self.side == 1.0
            && self.rotation == 0.0
            && self.translation.x == 0.0
            && self.translation.y == 0.0
    }
}

/// Regular n-gon. In the canonical pose the first side runs from the origin
/// to (side, 0) and vertices D, E, F, ... proceed counterclockwise; the
/// rotation (about the origin) and translation are applied afterwards.
///
/// Built by edge walking (turn left by the exterior angle at each vertex) so
/// the base side is exact and side lengths match to machine precision.
pub fn regular_ngon(spec: &NGonSpec) -> Result<ConvexPolygon> {
    if spec.n < 3 {
        return Err(Error::InvalidNGonSpec(format!("n = {} < 3", spec.n)));
    }
    if !spec.side.is_finite() || spec.side <= 0.0 {
        return Err(Error::InvalidNGonSpec(format!(
            "side = {} must be positive",
            spec.side
        )));
    }
    let exterior = 2.0 * std::f64::consts::PI / spec.n as f64;
    let mut vertices = Vec::with_capacity(spec.n);
    let mut cursor = Point2::new(0.0, 0.0);
    vertices.push(cursor);
    for k in 0..spec.n - 1 {
        let angle = exterior * k as f64;
        let (s, c) = angle.sin_cos();
        cursor = cursor.add(Point2::new(spec.side * c, spec.side * s));
        vertices.push(cursor);
    }
    let apply = |v: Point2| v.rotated(spec.rotation).add(spec.translation);
    ConvexPolygon::new(vertices.into_iter().map(apply).collect())
}

/// Vertex labels used by the paper's figures, by polygon size.
pub fn vertex_labels(n: usize) -> &'static [&'static str] {
    const LABELS: [&str; 7] = ["D", "E", "F", "G", "H", "J", "K"];
    &LABELS[..n.min(7)]
}

/// Horizontal chord in the canonical pose.
#[derive(Debug, Clone, PartialEq)]
pub struct Chord {
    pub label: String,
    pub endpoints: [Point2; 2],
    pub length: f64,
    pub height_above_base: f64,
}

impl Chord {
    /// Both endpoints must share the same height (to 1e-12).
    pub fn horizontal(label: &str, p: Point2, q: Point2) -> Result<Chord> {
        if (p.y - q.y).abs() > 1e-12 {
            return Err(Error::InvalidPolygon(format!(
                "chord {label} endpoints differ in height by {:e}",
                (p.y - q.y).abs()
            )));
        }
        Ok(Chord {
            label: label.to_string(),
            endpoints: [p, q],
            length: p.distance(q),
            height_above_base: p.y,
        })
    }

    pub fn translated(&self, t: Point2) -> Chord {
        Chord {
            label: self.label.clone(),
            endpoints: [self.endpoints[0].add(t), self.endpoints[1].add(t)],
            length: self.length,
            height_above_base: self.height_above_base + t.y,
        }
    }
}

/// The paper's named chords of the canonical unit pentagon (HF) and hexagon
/// (JF and GH). Other shapes are unsupported.
pub fn named_chords(spec: &NGonSpec) -> Result<Vec<Chord>> {
    if !spec.is_canonical_unit() {
        return Err(Error::UnsupportedShape(
            "named chords require the canonical unit pose".into(),
        ));
    }
    let poly = regular_ngon(spec)?;
    let v = poly.vertices();
    match spec.n {
        5 => {
            // H and F are the vertices adjacent to the base side DE.
            Ok(vec![Chord::horizontal("HF", v[4], v[2])?])
        }
        6 => Ok(vec![
            Chord::horizontal("JF", v[5], v[2])?,
            Chord::horizontal("GH", v[3], v[4])?,
        ]),
        n => Err(Error::UnsupportedShape(format!(
            "named chords exist only for the pentagon and hexagon, got n = {n}"
        ))),
    }
}

/// Reflection of the pentagon's base side DE about the horizontal line
/// through the chord HF: the locus ST of minimal-triangle apexes.
///
/// Accepts the canonical unit pentagon in any translation (the chord moves
/// with the polygon); anything else is unsupported.
pub fn segment_st(pentagon: &ConvexPolygon) -> Result<Chord> {
    if pentagon.len() != 5 {
        return Err(Error::UnsupportedShape(format!(
            "segment ST is defined for the unit pentagon, got {} vertices",
            pentagon.len()
        )));
    }
    let shift = pentagon.vertices()[0];
    let canonical = regular_ngon(&NGonSpec::canonical(5, 1.0))?;
    for (v, c) in pentagon.vertices().iter().zip(canonical.vertices()) {
        if v.sub(shift).distance(*c) > 1e-9 {
            return Err(Error::UnsupportedShape(
                "segment ST requires a canonical unit pentagon (translations allowed)".into(),
            ));
        }
    }
    let d = ((5.0 + 5.0_f64.sqrt()) / 2.0).sqrt() / 2.0;
    let st = Chord::horizontal("ST", Point2::new(0.0, 2.0 * d), Point2::new(1.0, 2.0 * d))?;
    Ok(st.translated(shift))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn unit(n: usize) -> ConvexPolygon {
        regular_ngon(&NGonSpec::canonical(n, 1.0)).unwrap()
    }

    #[test]
    fn unit_square_is_axis_aligned() {
        let sq = unit(4);
        let expect = [(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)];
        for (v, (x, y)) in sq.vertices().iter().zip(expect) {
            assert_abs_diff_eq!(v.x, x, epsilon = 1e-12);
            assert_abs_diff_eq!(v.y, y, epsilon = 1e-12);
        }
    }

    #[test]
    fn hexagon_height_is_sqrt3() {
        let hex = unit(6);
        let max_y = hex.vertices().iter().map(|v| v.y).fold(f64::MIN, f64::max);
        assert_abs_diff_eq!(max_y, 3.0_f64.sqrt(), epsilon = 1e-12);
    }

    #[test]
    fn pentagon_chord_is_golden_ratio() {
        let chords = named_chords(&NGonSpec::canonical(5, 1.0)).unwrap();
        assert_eq!(chords.len(), 1);
        let hf = &chords[0];
        assert_abs_diff_eq!(hf.length, (1.0 + 5.0_f64.sqrt()) / 2.0, epsilon = 1e-12);
        assert_abs_diff_eq!(
            hf.height_above_base,
            ((5.0 + 5.0_f64.sqrt()) / 2.0).sqrt() / 2.0,
            epsilon = 1e-12
        );
    }

    #[test]
    fn hexagon_named_chords() {
        let chords = named_chords(&NGonSpec::canonical(6, 1.0)).unwrap();
        let jf = chords.iter().find(|c| c.label == "JF").unwrap();
        let gh = chords.iter().find(|c| c.label == "GH").unwrap();
        assert_abs_diff_eq!(jf.length, 2.0, epsilon = 1e-12);
        assert_abs_diff_eq!(jf.height_above_base, 3.0_f64.sqrt() / 2.0, epsilon = 1e-12);
        assert_abs_diff_eq!(gh.length, 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(gh.height_above_base, 3.0_f64.sqrt(), epsilon = 1e-12);
    }

    #[test]
    fn named_chords_reject_other_shapes() {
        assert!(named_chords(&NGonSpec::canonical(4, 1.0)).is_err());
        let mut spec = NGonSpec::canonical(5, 1.0);
        spec.side = 2.0;
        assert!(named_chords(&spec).is_err());
    }

    #[test]
    fn regular_ngon_rejects_bad_specs() {
        assert!(regular_ngon(&NGonSpec::canonical(2, 1.0)).is_err());
        assert!(regular_ngon(&NGonSpec::canonical(5, 0.0)).is_err());
        assert!(regular_ngon(&NGonSpec::canonical(5, -1.0)).is_err());
    }

    #[test]
    fn areas_match_closed_forms() {
        assert_abs_diff_eq!(unit(4).area(), 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(unit(6).area(), 3.0 * 3.0_f64.sqrt() / 2.0, epsilon = 1e-12);
        // Shoelace vs the classical closed form for the unit pentagon.
        assert_abs_diff_eq!(
            unit(5).area(),
            (25.0 + 10.0 * 5.0_f64.sqrt()).sqrt() / 4.0,
            epsilon = 1e-12
        );
    }

    #[test]
    fn triangle_area_examples() {
        let t = Triangle::new(
            Point2::new(0.0, 0.0),
            Point2::new(2.0, 0.0),
            Point2::new(0.0, 2.0),
        )
        .unwrap();
        assert_abs_diff_eq!(t.area(), 2.0, epsilon = 1e-12);

        let eq = Triangle::new(
            Point2::new(0.0, 0.0),
            Point2::new(1.0, 0.0),
            Point2::new(0.5, 3.0_f64.sqrt() / 2.0),
        )
        .unwrap();
        assert_abs_diff_eq!(eq.area(), 3.0_f64.sqrt() / 4.0, epsilon = 1e-12);

        let collinear = Triangle::new(
            Point2::new(0.0, 0.0),
            Point2::new(1.0, 0.0),
            Point2::new(2.0, 0.0),
        );
        assert_eq!(collinear.unwrap_err(), Error::DegenerateTriangle);
    }

    #[test]
    fn containment_examples() {
        let hex = unit(6);
        // Equilateral triangle of side 3 around the canonical hexagon.
        let tri = Triangle::new(
            Point2::new(-1.0, 0.0),
            Point2::new(2.0, 0.0),
            Point2::new(0.5, 1.5 * 3.0_f64.sqrt()),
        )
        .unwrap();
        assert!(tri.contains_polygon(&hex, 1e-9));
        let shrunk = tri.scaled_about_centroid(0.99).unwrap();
        assert!(!shrunk.contains_polygon(&hex, 1e-9));

        // A triangle contains its own vertex set at zero tolerance.
        let self_poly = ConvexPolygon::new(vec![tri.a, tri.b, tri.c]).unwrap();
        assert!(tri.contains_polygon(&self_poly, 0.0));
    }

    #[test]
    fn segment_st_canonical_and_translated() {
        let pent = unit(5);
        let st = segment_st(&pent).unwrap();
        let two_d = ((5.0 + 5.0_f64.sqrt()) / 2.0).sqrt();
        assert_abs_diff_eq!(st.height_above_base, two_d, epsilon = 1e-12);
        assert_abs_diff_eq!(st.length, 1.0, epsilon = 1e-12);

        let moved = pent.transformed(0.0, Point2::new(3.0, 5.0));
        let st2 = segment_st(&moved).unwrap();
        assert_abs_diff_eq!(st2.endpoints[0].x, st.endpoints[0].x + 3.0, epsilon = 1e-9);
        assert_abs_diff_eq!(st2.endpoints[0].y, st.endpoints[0].y + 5.0, epsilon = 1e-9);

        // ST sits twice as high as HF.
        let hf = &named_chords(&NGonSpec::canonical(5, 1.0)).unwrap()[0];
        assert_abs_diff_eq!(
            st.height_above_base,
            2.0 * hf.height_above_base,
            epsilon = 1e-12
        );

        assert!(segment_st(&unit(6)).is_err());
        assert!(segment_st(&pent.transformed(0.4, Point2::new(0.0, 0.0))).is_err());
    }

    #[test]
    fn polygon_validation() {
        assert!(ConvexPolygon::new(vec![Point2::new(0.0, 0.0), Point2::new(1.0, 0.0)]).is_err());
        // Clockwise square rejected.
        assert!(ConvexPolygon::new(vec![
            Point2::new(0.0, 0.0),
            Point2::new(0.0, 1.0),
            Point2::new(1.0, 1.0),
            Point2::new(1.0, 0.0),
        ])
        .is_err());
        // Collinear triple rejected.
        assert!(ConvexPolygon::new(vec![
            Point2::new(0.0, 0.0),
            Point2::new(1.0, 0.0),
            Point2::new(2.0, 0.0),
            Point2::new(0.0, 1.0),
        ])
        .is_err());
    }

    #[test]
    fn polygon_json_round_trip() {
        let pent = unit(5);
        let json = serde_json::to_string(&pent).unwrap();
        assert!(json.starts_with("{\"vertices\":[["));
        let back: ConvexPolygon = serde_json::from_str(&json).unwrap();
        assert_eq!(back, pent);
    }
}
