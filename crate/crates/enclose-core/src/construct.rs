//! Geometric constructions quoted by the worked examples and rebuilt for the
//! figures: everything is derived from the canonical polygons, never from
//! hard-coded coordinates.

use crate::geom::{Point2, Triangle};
use crate::profile::Shape;

fn intersect_lines(p: Point2, u: Point2, q: Point2, v: Point2) -> Point2 {
    let det = u.cross(v);
    debug_assert!(det.abs() > 1e-14, "construction lines are parallel");
    let t = q.sub(p).cross(v) / det;
    p.add(u.scale(t))
}

fn x_axis_cut(p: Point2, q: Point2) -> Point2 {
    intersect_lines(p, q.sub(p), Point2::new(0.0, 0.0), Point2::new(1.0, 0.0))
}

/// The inscribing triangle with sides GH and ED extended to meet at A and
/// side BC perpendicular to AF. Its apex lands on the segment ST and its
/// area equals the pentagon minimum.
pub fn pentagon_perpendicular_triangle() -> Triangle {
    let pent = Shape::Pentagon.canonical_polygon();
    let v = pent.vertices();
    let (f, g, h) = (v[2], v[3], v[4]);
    let a = x_axis_cut(g, h);
    let af = f.sub(a);
    let perp = Point2::new(-af.y, af.x);
    let b = x_axis_cut(f, f.add(perp));
    let c = intersect_lines(f, perp, g, h.sub(g));
    Triangle::new(a, b, c).expect("construction is non-degenerate")
}

/// Right triangle with legs 2 sharing the square's right angle at D.
pub fn square_right_triangle() -> Triangle {
    let d = Shape::Square.canonical_polygon().vertices()[0];
    Triangle::new(
        d,
        d.add(Point2::new(2.0, 0.0)),
        d.add(Point2::new(0.0, 2.0)),
    )
    .expect("non-degenerate")
}

/// Mirror image of a triangle about the vertical line x = 1/2 (the symmetry
/// axis of the canonical base side), with orientation preserved.
pub fn mirrored_about_base_midline(t: &Triangle) -> Triangle {
    let m = |p: Point2| Point2::new(1.0 - p.x, p.y);
    Triangle::new(m(t.b), m(t.a), m(t.c)).expect("mirror preserves non-degeneracy")
}
