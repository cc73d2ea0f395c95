//! Numeric minimum-area enclosing triangles for strictly convex polygons.
//!
//! The search space follows the flush-side reduction: each polygon edge in
//! turn is taken as the line of one triangle side, and the remaining two
//! sides are tangent lines of the polygon. Per flush edge the triangle is
//! parametrized by its apex; area is minimized by nested golden-section
//! searches (abscissa inside height), seeded from a coarse grid. A separate
//! tangent-direction grid oracle cross-validates the result without using
//! the flush assumption.

use crate::error::{Error, Result};
use crate::geom::{orient, ConvexPolygon, Point2, Triangle};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverConfig {
    /// Interval tolerance for the 1-D golden-section searches, relative to
    /// the bracket width.
    pub angle_tolerance: f64,
    /// Relative area tolerance for convergence checks.
    pub area_rel_tolerance: f64,
    /// Tolerance for containment and contact classification.
    pub containment_tolerance: f64,
    /// Iteration cap per golden-section search.
    pub max_iterations: usize,
    /// Seeding grid resolution.
    pub grid_resolution: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            angle_tolerance: 1e-10,
            area_rel_tolerance: 1e-12,
            containment_tolerance: 1e-9,
            max_iterations: 200,
            grid_resolution: 720,
        }
    }
}

/// How one triangle side touches the polygon.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SideContact {
    /// The side's line contains the polygon edge starting at this vertex.
    Flush(usize),
    /// The side touches the polygon at this vertex only.
    Vertex(usize),
    None,
}

/// Enclosing triangle with its area and per-side contact structure.
/// Sides are ordered AB (base), BC, CA.
#[derive(Debug, Clone, PartialEq)]
pub struct EnclosureResult {
    pub triangle: Triangle,
    pub area: f64,
    pub contacts: [SideContact; 3],
    pub evaluations: usize,
}

/// Orthonormal frame of a polygon edge: origin at the edge start, x-axis
/// along the edge, y-axis toward the polygon interior.
struct EdgeFrame {
    origin: Point2,
    ux: Point2,
    uy: Point2,
}

impl EdgeFrame {
    fn new(poly: &ConvexPolygon, edge_index: usize) -> Result<EdgeFrame> {
        let n = poly.len();
        if edge_index >= n {
            return Err(Error::InvalidPolygon(format!(
                "edge index {edge_index} out of range for {n}-gon"
            )));
        }
        let p = poly.vertices()[edge_index];
        let q = poly.vertices()[(edge_index + 1) % n];
        let ux = q.sub(p).scale(1.0 / q.sub(p).norm());
        Ok(EdgeFrame {
            origin: p,
            ux,
            uy: Point2::new(-ux.y, ux.x),
        })
    }

    fn to_local(&self, p: Point2) -> Point2 {
        let d = p.sub(self.origin);
        Point2::new(d.dot(self.ux), d.dot(self.uy))
    }

    fn to_world(&self, p: Point2) -> Point2 {
        self.origin.add(self.ux.scale(p.x)).add(self.uy.scale(p.y))
    }
}

/// Golden-section minimization on [a, b]. Fails if the interval has not
/// shrunk below `tol_x` within `max_iter` iterations.
fn golden_min(
    f: &mut dyn FnMut(f64) -> f64,
    mut a: f64,
    mut b: f64,
    tol_x: f64,
    max_iter: usize,
) -> Result<(f64, f64)> {
    const INV_PHI: f64 = 0.618_033_988_749_895;
    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    for _ in 0..max_iter {
        if (b - a).abs() <= tol_x {
            break;
        }
        if f1 <= f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_PHI * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_PHI * (b - a);
            f2 = f(x2);
        }
    }
    if (b - a).abs() > tol_x {
        return Err(Error::ConvergenceFailure {
            iterations: max_iter,
        });
    }
    Ok(if f1 <= f2 { (x1, f1) } else { (x2, f2) })
}

/// Tangent touch vertices of the polygon seen from an exterior point `p`
/// above it (local coordinates). Returns (left, right) by base intercept:
/// the left tangent has every other vertex counterclockwise of it, the
/// right tangent clockwise.
fn tangent_touches(pts: &[Point2], p: Point2) -> (usize, usize) {
    let mut left = usize::MAX;
    let mut right = usize::MAX;
    for (i, &v) in pts.iter().enumerate() {
        if v.distance(p) < 1e-14 {
            continue;
        }
        if right == usize::MAX {
            left = i;
            right = i;
            continue;
        }
        let dv = v.sub(p);
        if pts[left].sub(p).cross(dv) < 0.0 {
            left = i;
        }
        if pts[right].sub(p).cross(dv) > 0.0 {
            right = i;
        }
    }
    (left, right)
}

/// Area of the triangle with base on the local x-axis and apex at `apex`,
/// sides tangent to the polygon. Also returns the base intercepts.
/// Returns None when the configuration is unbounded or inverted.
fn apex_triangle_local(pts: &[Point2], apex: Point2) -> Option<(f64, f64, f64, usize, usize)> {
    let (left, right) = tangent_touches(pts, apex);
    if left == usize::MAX {
        return None;
    }
    let intercept = |v: Point2| -> Option<f64> {
        let dy = apex.y - v.y;
        if dy <= 1e-15 {
            return None;
        }
        Some(apex.x + apex.y * (v.x - apex.x) / dy)
    };
    let xa = intercept(pts[left])?;
    let xb = intercept(pts[right])?;
    if xb - xa <= 1e-15 {
        return None;
    }
    Some(((xb - xa) * apex.y / 2.0, xa, xb, left, right))
}

fn side_contact(p: Point2, q: Point2, poly: &ConvexPolygon, tol: f64) -> SideContact {
    let dir = q.sub(p);
    let len = dir.norm();
    let n = poly.len();
    let on_line: Vec<bool> = poly
        .vertices()
        .iter()
        .map(|&v| (dir.cross(v.sub(p)) / len).abs() <= tol)
        .collect();
    for i in 0..n {
        if on_line[i] && on_line[(i + 1) % n] {
            return SideContact::Flush(i);
        }
    }
    on_line
        .iter()
        .position(|&b| b)
        .map_or(SideContact::None, SideContact::Vertex)
}

#[allow(clippy::too_many_arguments)]
fn build_result(
    poly: &ConvexPolygon,
    frame: &EdgeFrame,
    apex_local: Point2,
    xa: f64,
    xb: f64,
    area: f64,
    evaluations: usize,
    cfg: &SolverConfig,
) -> Result<EnclosureResult> {
    let a = frame.to_world(Point2::new(xa, 0.0));
    let b = frame.to_world(Point2::new(xb, 0.0));
    let c = frame.to_world(apex_local);
    let triangle = Triangle::new(a, b, c)?;
    let tol = cfg.containment_tolerance;
    if !triangle.contains_polygon(poly, tol) {
        return Err(Error::ConvergenceFailure {
            iterations: cfg.max_iterations,
        });
    }
    let contacts = [
        side_contact(a, b, poly, tol),
        side_contact(b, c, poly, tol),
        side_contact(c, a, poly, tol),
    ];
    Ok(EnclosureResult {
        triangle,
        area,
        contacts,
        evaluations,
    })
}

/// Enclosing triangle with one side on the given edge's line and apex at a
/// prescribed point; the remaining two sides are the polygon tangents from
/// the apex. The apex is given in world coordinates.
pub fn enclosing_triangle_with_apex(
    poly: &ConvexPolygon,
    edge_index: usize,
    apex: Point2,
) -> Result<EnclosureResult> {
    let cfg = SolverConfig::default();
    let frame = EdgeFrame::new(poly, edge_index)?;
    let pts: Vec<Point2> = poly.vertices().iter().map(|&v| frame.to_local(v)).collect();
    let apex_local = frame.to_local(apex);
    let extent = pts.iter().map(|v| v.y).fold(f64::MIN, f64::max);
    if apex_local.y < extent - 1e-9 {
        return Err(Error::InfeasibleHeight {
            h: apex_local.y,
            extent,
        });
    }
    let (area, xa, xb, _, _) =
        apex_triangle_local(&pts, apex_local).ok_or(Error::InfeasibleHeight {
            h: apex_local.y,
            extent,
        })?;
    build_result(poly, &frame, apex_local, xa, xb, area, 1, &cfg)
}

struct HeightSolve {
    apex_local: Point2,
    xa: f64,
    xb: f64,
    area: f64,
    evaluations: usize,
}

fn solve_at_height(pts: &[Point2], h: f64, cfg: &SolverConfig) -> Result<HeightSolve> {
    let extent = pts.iter().map(|v| v.y).fold(f64::MIN, f64::max);
    if h < extent - 1e-9 {
        return Err(Error::InfeasibleHeight { h, extent });
    }
    let top: Vec<&Point2> = pts.iter().filter(|v| v.y >= extent - 1e-12).collect();
    if h <= extent + 1e-12 {
        // Apex level with the polygon's top. Feasible only when the top is a
        // single vertex and the apex sits on it (Example-D style).
        if top.len() > 1 {
            return Err(Error::InfeasibleHeight { h, extent });
        }
        let apex = *top[0];
        let (area, xa, xb, _, _) =
            apex_triangle_local(pts, apex).ok_or(Error::InfeasibleHeight { h, extent })?;
        return Ok(HeightSolve {
            apex_local: apex,
            xa,
            xb,
            area,
            evaluations: 1,
        });
    }

    let min_x = pts.iter().map(|v| v.x).fold(f64::MAX, f64::min);
    let max_x = pts.iter().map(|v| v.x).fold(f64::MIN, f64::max);
    let width = max_x - min_x;
    let lo = min_x - (width + 2.0 * h);
    let hi = max_x + (width + 2.0 * h);

    let mut evals = 0usize;
    let mut f = |t: f64| -> f64 {
        evals += 1;
        apex_triangle_local(pts, Point2::new(t, h)).map_or(f64::INFINITY, |r| r.0)
    };

    // Coarse seed, then refine around the best grid cell.
    let res = cfg.grid_resolution.max(8);
    let mut best_i = 0;
    let mut best_v = f64::INFINITY;
    for i in 0..=res {
        let t = lo + (hi - lo) * i as f64 / res as f64;
        let v = f(t);
        if v < best_v {
            best_v = v;
            best_i = i;
        }
    }
    if !best_v.is_finite() {
        return Err(Error::InfeasibleHeight { h, extent });
    }
    let step = (hi - lo) / res as f64;
    let a = lo + step * best_i.saturating_sub(1) as f64;
    let b = (lo + step * (best_i + 1) as f64).min(hi);
    let tol_x = (cfg.angle_tolerance * (b - a).max(1.0)).max(1e-14);
    let (t_star, area) = golden_min(&mut f, a, b, tol_x, cfg.max_iterations)?;
    let apex = Point2::new(t_star, h);
    let (area2, xa, xb, _, _) =
        apex_triangle_local(pts, apex).ok_or(Error::InfeasibleHeight { h, extent })?;
    debug_assert!((area2 - area).abs() <= 1e-9 * area.max(1.0));
    Ok(HeightSolve {
        apex_local: apex,
        xa,
        xb,
        area: area2,
        evaluations: evals,
    })
}

/// Minimal-area enclosing triangle with base on the edge's supporting line
/// and apex constrained to height `h` above it.
pub fn constrained_min_given_height(
    poly: &ConvexPolygon,
    edge_index: usize,
    h: f64,
    cfg: &SolverConfig,
) -> Result<EnclosureResult> {
    let frame = EdgeFrame::new(poly, edge_index)?;
    let pts: Vec<Point2> = poly.vertices().iter().map(|&v| frame.to_local(v)).collect();
    let s = solve_at_height(&pts, h, cfg)?;
    build_result(
        poly,
        &frame,
        s.apex_local,
        s.xa,
        s.xb,
        s.area,
        s.evaluations,
        cfg,
    )
}

/// Minimal-area enclosing triangle whose one side lies on the supporting
/// line of the given polygon edge.
pub fn min_flush(
    poly: &ConvexPolygon,
    edge_index: usize,
    cfg: &SolverConfig,
) -> Result<EnclosureResult> {
    let frame = EdgeFrame::new(poly, edge_index)?;
    let pts: Vec<Point2> = poly.vertices().iter().map(|&v| frame.to_local(v)).collect();
    let extent = pts.iter().map(|v| v.y).fold(f64::MIN, f64::max);
    let min_x = pts.iter().map(|v| v.x).fold(f64::MAX, f64::min);
    let max_x = pts.iter().map(|v| v.x).fold(f64::MIN, f64::max);
    let diam = (max_x - min_x).max(extent);

    let mut evals = 0usize;
    let mut g = |h: f64| -> f64 {
        match solve_at_height(&pts, h, cfg) {
            Ok(s) => {
                evals += s.evaluations;
                s.area
            }
            Err(_) => f64::INFINITY,
        }
    };

    let lo = extent;
    let hi = extent + 4.0 * (diam + 1.0);
    let res = cfg.grid_resolution.max(8);
    let mut best_i = 0;
    let mut best_v = f64::INFINITY;
    for i in 0..=res {
        let h = lo + (hi - lo) * i as f64 / res as f64;
        let v = g(h);
        if v < best_v {
            best_v = v;
            best_i = i;
        }
    }
    if !best_v.is_finite() {
        return Err(Error::ConvergenceFailure {
            iterations: cfg.max_iterations,
        });
    }
    let step = (hi - lo) / res as f64;
    let a = (lo + step * best_i.saturating_sub(1) as f64).max(lo);
    let b = (lo + step * (best_i + 1) as f64).min(hi);
    let tol_x = (cfg.angle_tolerance * (b - a).max(1.0)).max(1e-14);
    let (h_star, _) = golden_min(&mut g, a, b, tol_x, cfg.max_iterations)?;
    let s = solve_at_height(&pts, h_star, cfg)?;
    build_result(
        poly,
        &frame,
        s.apex_local,
        s.xa,
        s.xb,
        s.area,
        evals + s.evaluations,
        cfg,
    )
}

/// Minimum-area enclosing triangle: least-area result over all flush-edge
/// subproblems, ties broken by the lowest edge index.
pub fn min_enclosing_triangle(poly: &ConvexPolygon, cfg: &SolverConfig) -> Result<EnclosureResult> {
    let mut best: Option<EnclosureResult> = None;
    let mut evals = 0usize;
    for edge in 0..poly.len() {
        let r = min_flush(poly, edge, cfg)?;
        evals += r.evaluations;
        match &best {
            Some(b) if r.area >= b.area => {}
            _ => best = Some(r),
        }
    }
    let mut r = best.expect("polygon has at least 3 edges");
    r.evaluations = evals;
    Ok(r)
}

/// Supporting line of the polygon in direction angle `theta`: passes through
/// the extreme vertex and keeps the polygon on its left.
fn tangent_line(pts: &[Point2], theta: f64) -> (Point2, Point2) {
    let (s, c) = theta.sin_cos();
    let u = Point2::new(c, s);
    let n = Point2::new(s, -c);
    let mut best = pts[0];
    let mut best_d = best.dot(n);
    for &v in &pts[1..] {
        let d = v.dot(n);
        if d > best_d {
            best_d = d;
            best = v;
        }
    }
    (best, u)
}

fn line_intersection(p1: Point2, u1: Point2, p2: Point2, u2: Point2) -> Option<Point2> {
    let det = u1.cross(u2);
    if det.abs() < 1e-14 {
        return None;
    }
    let t = p2.sub(p1).cross(u2) / det;
    Some(p1.add(u1.scale(t)))
}

fn tangent_triple_area(pts: &[Point2], angles: [f64; 3]) -> f64 {
    let l0 = tangent_line(pts, angles[0]);
    let l1 = tangent_line(pts, angles[1]);
    let l2 = tangent_line(pts, angles[2]);
    let v01 = line_intersection(l0.0, l0.1, l1.0, l1.1);
    let v12 = line_intersection(l1.0, l1.1, l2.0, l2.1);
    let v20 = line_intersection(l2.0, l2.1, l0.0, l0.1);
    match (v01, v12, v20) {
        (Some(a), Some(b), Some(c)) => orient(a, b, c).abs() / 2.0,
        _ => f64::INFINITY,
    }
}

/// Brute-force cross-check: minimum area over all enclosing triangles formed
/// by three polygon tangent lines at grid directions, followed by one local
/// coordinate-wise refinement pass. Upper-bounds the true minimum.
pub fn grid_oracle(poly: &ConvexPolygon, resolution: usize) -> f64 {
    let res = resolution.max(90);
    let pts = poly.vertices();
    let step = 2.0 * std::f64::consts::PI / res as f64;
    let lines: Vec<(Point2, Point2)> = (0..res)
        .map(|k| tangent_line(pts, step * k as f64))
        .collect();

    // Pairwise intersections; NaN marks near-parallel pairs.
    let nan = Point2::new(f64::NAN, f64::NAN);
    let mut inter = vec![nan; res * res];
    for i in 0..res {
        for j in i + 1..res {
            if let Some(v) = line_intersection(lines[i].0, lines[i].1, lines[j].0, lines[j].1) {
                inter[i * res + j] = v;
            }
        }
    }

    // A triple of tangent directions encloses the polygon in a bounded
    // triangle iff all three cyclic gaps are strictly below pi:
    //   2(j - i) < res, 2(k - j) < res, 2(k - i) > res.
    let mut best = f64::INFINITY;
    let mut best_triple = [0usize; 3];
    for i in 0..res {
        let j_hi = (i + (res - 1) / 2).min(res - 1);
        for j in i + 1..=j_hi {
            let k_lo = (j + 1).max(i + (res + 2) / 2);
            let k_hi = (j + (res - 1) / 2).min(res - 1);
            for k in k_lo..=k_hi {
                let a = inter[i * res + j];
                let b = inter[j * res + k];
                let c = inter[i * res + k];
                let area = orient(a, b, c).abs() / 2.0;
                if area < best {
                    best = area;
                    best_triple = [i, j, k];
                }
            }
        }
    }

    // One refinement pass: golden-section on each angle around the best
    // grid triple.
    let mut angles = best_triple.map(|k| step * k as f64);
    for _ in 0..2 {
        for axis in 0..3 {
            let mut f = |x: f64| {
                let mut a = angles;
                a[axis] = x;
                tangent_triple_area(pts, a)
            };
            if let Ok((x, v)) =
                golden_min(&mut f, angles[axis] - step, angles[axis] + step, 1e-12, 200)
            {
                if v <= best {
                    best = v;
                    angles[axis] = x;
                }
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{regular_ngon, NGonSpec};
    use approx::assert_abs_diff_eq;

    fn unit(n: usize) -> ConvexPolygon {
        regular_ngon(&NGonSpec::canonical(n, 1.0)).unwrap()
    }

    #[test]
    fn square_minimum_is_two() {
        let r = min_enclosing_triangle(&unit(4), &SolverConfig::default()).unwrap();
        assert_abs_diff_eq!(r.area, 2.0, epsilon = 1e-6);
        assert!(r.contacts.iter().all(|c| *c != SideContact::None));
    }

    #[test]
    fn pentagon_minimum_matches_closed_form() {
        let r = min_enclosing_triangle(&unit(5), &SolverConfig::default()).unwrap();
        assert_abs_diff_eq!(r.area, (5.0 + 2.0 * 5.0_f64.sqrt()).sqrt(), epsilon = 1e-6);
    }

    #[test]
    fn hexagon_minimum_is_equilateral_of_side_three() {
        let r = min_enclosing_triangle(&unit(6), &SolverConfig::default()).unwrap();
        assert_abs_diff_eq!(r.area, 2.25 * 3.0_f64.sqrt(), epsilon = 1e-6);
        for len in r.triangle.side_lengths() {
            assert_abs_diff_eq!(len, 3.0, epsilon = 1e-5);
        }
    }

    #[test]
    fn flush_subproblems_of_square_agree() {
        let sq = unit(4);
        let cfg = SolverConfig::default();
        let areas: Vec<f64> = (0..4)
            .map(|e| min_flush(&sq, e, &cfg).unwrap().area)
            .collect();
        for a in &areas {
            assert_abs_diff_eq!(*a, 2.0, epsilon = 1e-6);
            assert_abs_diff_eq!(*a, areas[0], epsilon = 1e-9);
        }
    }

    #[test]
    fn constrained_heights_reproduce_profiles() {
        let cfg = SolverConfig::default();
        let cases = [
            (
                unit(5),
                1.9021130325903068,
                (5.0 + 2.0 * 5.0_f64.sqrt()).sqrt(),
            ),
            (unit(6), 2.25, 4.887062354743621),
            (unit(4), 2.0, 2.0),
            (unit(5), 2.0, 3.0850737220560878),
        ];
        for (poly, h, expect) in cases {
            let r = constrained_min_given_height(&poly, 0, h, &cfg).unwrap();
            assert_abs_diff_eq!(r.area, expect, epsilon = 1e-8);
        }
    }

    #[test]
    fn infeasible_height_is_rejected() {
        let cfg = SolverConfig::default();
        let err = constrained_min_given_height(&unit(5), 0, 1.0, &cfg).unwrap_err();
        assert!(matches!(err, Error::InfeasibleHeight { .. }));
        // Flat-top shapes reject an apex level with the top side.
        let err = constrained_min_given_height(&unit(4), 0, 1.0, &cfg).unwrap_err();
        assert!(matches!(err, Error::InfeasibleHeight { .. }));
    }

    #[test]
    fn apex_level_with_single_top_vertex_is_example_d() {
        let cfg = SolverConfig::default();
        let pent = unit(5);
        let h = crate::profile::pentagon_height();
        let r = constrained_min_given_height(&pent, 0, h, &cfg).unwrap();
        assert_abs_diff_eq!(r.area, 3.2593191691765937, epsilon = 1e-9);
        // Apex coincides with vertex G.
        assert_abs_diff_eq!(r.triangle.c.x, 0.5, epsilon = 1e-9);
    }

    #[test]
    fn convergence_failure_when_starved() {
        let cfg = SolverConfig {
            max_iterations: 2,
            angle_tolerance: 1e-14,
            ..SolverConfig::default()
        };
        let err = min_flush(&unit(4), 0, &cfg).unwrap_err();
        assert!(matches!(err, Error::ConvergenceFailure { .. }));
    }

    #[test]
    fn grid_oracle_brackets_known_minima() {
        let a = grid_oracle(&unit(4), 720);
        assert!((2.0 - 1e-9..=2.02).contains(&a), "square oracle {a}");
        let b = grid_oracle(&unit(6), 720);
        assert!((3.8971 - 1e-9..=3.94).contains(&b), "hexagon oracle {b}");
    }

    #[test]
    fn grid_oracle_on_triangle_returns_itself() {
        let tri = regular_ngon(&NGonSpec::canonical(3, 2.0)).unwrap();
        let a = grid_oracle(&tri, 360);
        let own = tri.area();
        assert!((a - own).abs() / own < 0.01, "oracle {a} vs own area {own}");
    }

    #[test]
    fn contacts_of_pentagon_minimum() {
        let r = min_enclosing_triangle(&unit(5), &SolverConfig::default()).unwrap();
        // Base flush with DE, the other sides touch single vertices (F, H).
        assert_eq!(r.contacts[0], SideContact::Flush(0));
        assert!(matches!(r.contacts[1], SideContact::Vertex(_)));
        assert!(matches!(r.contacts[2], SideContact::Vertex(_)));
    }
}
