//! Closed-form enclosing-triangle area profiles A(h) for the regular unit
//! square, pentagon and hexagon with a flush base side, together with the
//! base-length lemmas and the pentagon's golden-ratio constants.
//!
//! Heights h are measured from the base line to the apex. Each profile knows
//! its domain, its minimizing height and its minimum area.

use crate::error::{Error, Result};
use crate::geom::{regular_ngon, ConvexPolygon, NGonSpec};
use serde::Serialize;

/// Golden ratio s = (1 + √5)/2, the pentagon's chord length.
pub const GOLDEN_RATIO: f64 = 1.618033988749895;

/// Height d of the pentagon chord HF above the base: √((5 + √5)/2)/2.
pub fn pentagon_chord_height() -> f64 {
    ((5.0 + 5.0_f64.sqrt()) / 2.0).sqrt() / 2.0
}

/// Height of the canonical unit pentagon (top vertex G).
pub fn pentagon_height() -> f64 {
    0.5 / (std::f64::consts::PI / 5.0).tan() + 0.5 / (std::f64::consts::PI / 5.0).sin()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Shape {
    Square,
    Pentagon,
    Hexagon,
}

impl Shape {
    pub fn sides(self) -> usize {
        match self {
            Shape::Square => 4,
            Shape::Pentagon => 5,
            Shape::Hexagon => 6,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Shape::Square => "square",
            Shape::Pentagon => "pentagon",
            Shape::Hexagon => "hexagon",
        }
    }

    pub fn parse(s: &str) -> Option<Shape> {
        match s {
            "square" => Some(Shape::Square),
            "pentagon" => Some(Shape::Pentagon),
            "hexagon" => Some(Shape::Hexagon),
            _ => None,
        }
    }

    /// The unit shape in the canonical pose (base DE on the x-axis).
    pub fn canonical_polygon(self) -> ConvexPolygon {
        regular_ngon(&NGonSpec::canonical(self.sides(), 1.0))
            .expect("canonical unit n-gon is always valid")
    }

    pub fn profile(self) -> AreaProfile {
        match self {
            Shape::Square => square_profile(),
            Shape::Pentagon => pentagon_profile(),
            Shape::Hexagon => hexagon_profile(),
        }
    }
}

/// One rational piece of a profile, valid on [lo, hi].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Piece {
    pub lo: f64,
    pub hi: f64,
    pub kind: PieceKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PieceKind {
    /// h²/(2(h − 1)); square, contacts at the top corners G, F.
    SquareRational,
    /// s·h²/(2h − 2d); pentagon, contacts at the chord vertices H, F.
    PentagonRational,
    /// h²/(2(h − √3)); hexagon below 3√3/2, contacts at the top side G, H.
    HexagonTopSide,
    /// h²/(h − √3/2); hexagon at or above 3√3/2, contacts at the chord J, F.
    HexagonWideChord,
}

impl PieceKind {
    pub fn evaluate(self, h: f64) -> f64 {
        let rt3 = 3.0_f64.sqrt();
        match self {
            PieceKind::SquareRational => h * h / (2.0 * (h - 1.0)),
            PieceKind::PentagonRational => {
                GOLDEN_RATIO * h * h / (2.0 * h - 2.0 * pentagon_chord_height())
            }
            PieceKind::HexagonTopSide => h * h / (2.0 * (h - rt3)),
            PieceKind::HexagonWideChord => h * h / (h - rt3 / 2.0),
        }
    }
}

/// Enclosing-triangle area as a function of apex height over the flush base.
#[derive(Debug, Clone, PartialEq)]
pub struct AreaProfile {
    pub shape: Shape,
    pub pieces: Vec<Piece>,
    /// Infimum of valid heights (exclusive for square/hexagon, inclusive for
    /// the pentagon whose top is a single vertex).
    pub domain_min: f64,
    pub domain_min_inclusive: bool,
    pub h_star: f64,
    pub area_min: f64,
}

impl AreaProfile {
    pub fn evaluate(&self, h: f64) -> Result<f64> {
        let in_domain = if self.domain_min_inclusive {
            h >= self.domain_min - 1e-12
        } else {
            h > self.domain_min
        };
        if !in_domain || !h.is_finite() {
            return Err(Error::OutOfDomain {
                h,
                requirement: format!(
                    "h {} {:.9} for the {}",
                    if self.domain_min_inclusive { ">=" } else { ">" },
                    self.domain_min,
                    self.shape.name()
                ),
            });
        }
        let piece = self
            .pieces
            .iter()
            .find(|p| h >= p.lo && h <= p.hi)
            .or_else(|| self.pieces.last())
            .expect("profile has at least one piece");
        Ok(piece.kind.evaluate(h))
    }
}

/// Lemma for the square: base c = (h' + 1)/h' where h' is the height of the
/// similar triangle above the inscribed square.
pub fn square_base_of(h_prime: f64) -> Result<f64> {
    if !h_prime.is_finite() || h_prime <= 0.0 {
        return Err(Error::OutOfDomain {
            h: h_prime,
            requirement: "h' > 0".into(),
        });
    }
    Ok((h_prime + 1.0) / h_prime)
}

/// Lemma for the pentagon: base c = (h' + d)·s/h' where h' is the height of
/// the apex above the chord HF.
pub fn pentagon_base_of(h_prime: f64) -> Result<f64> {
    if !h_prime.is_finite() || h_prime <= 0.0 {
        return Err(Error::OutOfDomain {
            h: h_prime,
            requirement: "h' > 0".into(),
        });
    }
    Ok((h_prime + pentagon_chord_height()) * GOLDEN_RATIO / h_prime)
}

/// A(h) = h²/(2(h − 1)) on h > 1; minimum 2 at h = 2.
pub fn square_profile() -> AreaProfile {
    AreaProfile {
        shape: Shape::Square,
        pieces: vec![Piece {
            lo: 1.0,
            hi: f64::INFINITY,
            kind: PieceKind::SquareRational,
        }],
        domain_min: 1.0,
        domain_min_inclusive: false,
        h_star: 2.0,
        area_min: 2.0,
    }
}

/// A(h) = s·h²/(2h − 2d) on h ≥ pentagon height; minimum √(5 + 2√5) at h = 2d.
pub fn pentagon_profile() -> AreaProfile {
    let d = pentagon_chord_height();
    AreaProfile {
        shape: Shape::Pentagon,
        pieces: vec![Piece {
            lo: pentagon_height(),
            hi: f64::INFINITY,
            kind: PieceKind::PentagonRational,
        }],
        domain_min: pentagon_height(),
        domain_min_inclusive: true,
        h_star: 2.0 * d,
        area_min: (5.0 + 2.0 * 5.0_f64.sqrt()).sqrt(),
    }
}

/// Piecewise hexagon profile on h > √3 with minimum 9√3/4 at h = 3√3/2.
///
/// Above 3√3/2 the binding contacts are the wide chord J, F (the single
/// formula from the similar-triangle argument); below, they move to the top
/// side G, H and the formula changes. The two pieces agree at the boundary.
pub fn hexagon_profile() -> AreaProfile {
    let rt3 = 3.0_f64.sqrt();
    let boundary = 1.5 * rt3;
    AreaProfile {
        shape: Shape::Hexagon,
        pieces: vec![
            Piece {
                lo: rt3,
                hi: boundary,
                kind: PieceKind::HexagonTopSide,
            },
            Piece {
                lo: boundary,
                hi: f64::INFINITY,
                kind: PieceKind::HexagonWideChord,
            },
        ],
        domain_min: rt3,
        domain_min_inclusive: false,
        h_star: boundary,
        area_min: 2.25 * rt3,
    }
}

/// Golden-ratio constants of the pentagon's minimal configuration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PentagonConstants {
    /// Golden ratio chord length s = HF.
    pub s: f64,
    /// Height d of HF above the base.
    pub d: f64,
    /// Segment EB at the optimum: e = 1/s = (√5 − 1)/2.
    pub e_contact: f64,
    /// Base AB at the optimum: 2s = 1 + √5.
    pub base_opt: f64,
    /// Minimizing height 2d = √((5 + √5)/2).
    pub h_opt: f64,
}

pub fn pentagon_constants() -> PentagonConstants {
    let d = pentagon_chord_height();
    PentagonConstants {
        s: GOLDEN_RATIO,
        d,
        e_contact: 1.0 / GOLDEN_RATIO,
        base_opt: 2.0 * GOLDEN_RATIO,
        h_opt: 2.0 * d,
    }
}
