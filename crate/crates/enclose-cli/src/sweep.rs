//! Height sweeps: closed-form profile vs constrained numeric solve.

use crate::numfmt::sig9;
use enclose_core::{constrained_min_given_height, Result, Shape, SolverConfig};
use serde::Serialize;
use std::fmt::Write as _;

#[derive(Debug, Clone, Serialize)]
pub struct SweepRow {
    pub shape: &'static str,
    pub h: f64,
    pub area_closed_form: f64,
    pub area_numeric: f64,
    pub abs_diff: f64,
}

/// Evaluates `steps` evenly spaced heights in [h_min, h_max] inclusive,
/// ordered by ascending h.
pub fn run(shape: Shape, h_min: f64, h_max: f64, steps: usize) -> Result<Vec<SweepRow>> {
    let profile = shape.profile();
    let poly = shape.canonical_polygon();
    let cfg = SolverConfig::default();
    let mut rows = Vec::with_capacity(steps);
    for k in 0..steps {
        let h = h_min + (h_max - h_min) * k as f64 / (steps - 1) as f64;
        let closed = profile.evaluate(h)?;
        let numeric = constrained_min_given_height(&poly, 0, h, &cfg)?.area;
        rows.push(SweepRow {
            shape: shape.name(),
            h,
            area_closed_form: closed,
            area_numeric: numeric,
            abs_diff: (closed - numeric).abs(),
        });
    }
    Ok(rows)
}

pub fn to_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from("shape,h,area_closed_form,area_numeric,abs_diff\n");
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            r.shape,
            sig9(r.h),
            sig9(r.area_closed_form),
            sig9(r.area_numeric),
            sig9(r.abs_diff)
        );
    }
    out
}

pub fn to_json(rows: &[SweepRow]) -> String {
    let mut doc = serde_json::to_string_pretty(rows).expect("rows serialize");
    doc.push('\n');
    doc
}
