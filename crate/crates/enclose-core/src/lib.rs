//! Minimum-area enclosing triangles of convex polygons.
//!
//! The crate pairs closed-form area profiles for the regular unit square,
//! pentagon and hexagon (with their golden-ratio constants and worked-case
//! registry) against an independent numeric solver for arbitrary strictly
//! convex polygons, and renders the constructions as deterministic SVG.

pub mod cases;
pub mod construct;
pub mod error;
pub mod geom;
pub mod profile;
pub mod solver;
pub mod svg;

pub use cases::{paper_cases, PaperCase};
pub use error::{Error, Result};
pub use geom::{
    named_chords, regular_ngon, segment_st, Chord, ConvexPolygon, NGonSpec, Point2, Triangle,
};
pub use profile::{
    hexagon_profile, pentagon_base_of, pentagon_constants, pentagon_profile, square_base_of,
    square_profile, AreaProfile, PentagonConstants, Shape,
};
pub use solver::{
    constrained_min_given_height, enclosing_triangle_with_apex, grid_oracle,
    min_enclosing_triangle, min_flush, EnclosureResult, SideContact, SolverConfig,
};
pub use svg::{figure_filename, render_figure, render_scene, Scene, FIGURE_COUNT};
