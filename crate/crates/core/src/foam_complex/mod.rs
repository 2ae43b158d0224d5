//! Dotted foams over state circles, modulo local relations.
//!
//! A generator caps every state circle with one normal-form piece: a disk
//! (possibly carrying a dot) over a trivial circle, or an oriented vertical
//! annulus over an essential one. Placing a bridge at a crossing produces a
//! raw foam whose components need not be in normal form; the rewrite engine
//! in [`normalize`] reduces it back to a sum of generators.

mod bridge;
mod checks;
mod normalize;

use std::fmt;

use crate::grading::{Grading, SGrading};
use crate::lincomb::LinComb;
use crate::surface_diagram::{resolve_state, CircleSet, Diagram, H1Class, Sign, Smoothing, State};
use crate::{Decorated, Result};

pub use bridge::bridge;
pub use checks::{
    all_bridges, verify_blocked_symmetry, verify_confluence, verify_rewrite_gradings,
};
pub use normalize::{
    apply, is_normal, normalize, normalize_by, normalize_shuffled, rewrites, Rewrite, Rule,
};

/// The cap over one state circle of a generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Piece {
    DottedDisk,
    Disk,
    /// Oriented vertical annulus; the sign is relative to the canonical class.
    Annulus(Sign),
}

impl Piece {
    pub fn fits(self, trivial: bool) -> bool {
        matches!(self, Piece::DottedDisk | Piece::Disk) == trivial
    }
}

impl fmt::Display for Piece {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Piece::DottedDisk => "D*",
            Piece::Disk => "D",
            Piece::Annulus(Sign::Plus) => "A+",
            Piece::Annulus(Sign::Minus) => "A-",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FoamGenerator {
    pub state: State,
    /// Indexed by circle id of `resolve_state(d, state)`.
    pub pieces: Vec<Piece>,
}

impl fmt::Display for FoamGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pieces: Vec<String> = self.pieces.iter().map(|p| p.to_string()).collect();
        write!(f, "{}[{}]", self.state, pieces.join(","))
    }
}

impl Decorated for FoamGenerator {
    type Mark = Piece;

    fn state(&self) -> &State {
        &self.state
    }

    fn marks(&self) -> &[Piece] {
        &self.pieces
    }

    fn from_parts(state: State, marks: Vec<Piece>) -> Self {
        FoamGenerator {
            state,
            pieces: marks,
        }
    }
}

pub type FoamSum = LinComb<FoamGenerator>;

/// A boundary circle in the top, i.e. a circle of the target state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TopCircle {
    pub circle: usize,
    /// Canonical class, for essential circles only.
    pub essential: Option<H1Class>,
    /// Relative to the canonical class; trivial circles are never oriented.
    pub orientation: Option<Sign>,
}

impl TopCircle {
    pub fn trivial(circle: usize) -> Self {
        TopCircle {
            circle,
            essential: None,
            orientation: None,
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.essential.is_none()
    }
}

/// A boundary circle in the bottom; always essential and oriented.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BottomCircle {
    pub class: H1Class,
    pub sign: Sign,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoamComponent {
    pub genus: u32,
    pub dots: u32,
    pub top: Vec<TopCircle>,
    pub bottom: Vec<BottomCircle>,
}

impl FoamComponent {
    pub fn euler(&self) -> i64 {
        2 - 2 * self.genus as i64 - (self.top.len() + self.bottom.len()) as i64
    }

    pub fn is_closed(&self) -> bool {
        self.top.is_empty() && self.bottom.is_empty()
    }

    pub fn boundary_all_essential(&self) -> bool {
        self.top.iter().all(|t| !t.is_trivial())
    }

    /// The component a generator places over one circle.
    pub fn of_piece(piece: Piece, circles: &CircleSet, circle: usize) -> FoamComponent {
        let trivial = |dots| FoamComponent {
            genus: 0,
            dots,
            top: vec![TopCircle::trivial(circle)],
            bottom: vec![],
        };
        match piece {
            Piece::DottedDisk => trivial(1),
            Piece::Disk => trivial(0),
            Piece::Annulus(sign) => {
                let class = circles
                    .kind(circle)
                    .canonical()
                    .expect("annulus over an essential circle");
                FoamComponent {
                    genus: 0,
                    dots: 0,
                    top: vec![TopCircle {
                        circle,
                        essential: Some(class.clone()),
                        orientation: Some(sign),
                    }],
                    bottom: vec![BottomCircle {
                        class: class.clone(),
                        sign,
                    }],
                }
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Blocked {
    NegativeSmoothing,
    /// Two equally oriented essential circles would merge into a trivial one.
    EO,
    /// The surface would become non-orientable.
    NOS,
}

/// One term of a foam before relations are applied.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawTerm {
    pub coefficient: i64,
    pub components: Vec<FoamComponent>,
}

/// The result of placing a bridge; `components` is empty when blocked.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawFoam {
    pub state: State,
    pub components: Vec<FoamComponent>,
    pub blocked: Option<Blocked>,
}

impl RawFoam {
    pub fn blocked(state: State, reason: Blocked) -> Self {
        RawFoam {
            state,
            components: Vec::new(),
            blocked: Some(reason),
        }
    }

    pub fn surface(state: State, components: Vec<FoamComponent>) -> Self {
        RawFoam {
            state,
            components,
            blocked: None,
        }
    }
}

pub fn components_of(circles: &CircleSet, g: &FoamGenerator) -> Vec<FoamComponent> {
    g.pieces
        .iter()
        .enumerate()
        .map(|(c, &piece)| FoamComponent::of_piece(piece, circles, c))
        .collect()
}

pub fn raw_grade(state: &State, components: &[FoamComponent]) -> Grading {
    let i = state.signature();
    let mut excess = 0;
    let mut s = SGrading::zero();
    for c in components {
        excess += 2 * c.dots as i64 - c.euler();
        for b in &c.bottom {
            s.add(&b.class, b.sign.value());
        }
    }
    Grading::new(i, i + 2 * excess, s)
}

pub fn foam_grade(d: &Diagram, g: &FoamGenerator) -> Grading {
    raw_grade(&g.state, &components_of(&resolve_state(d, &g.state), g))
}

/// Every generator over one state, first choice (`D*` / `A+`) varying
/// slowest from circle 0.
pub fn foam_generators(state: &State, circles: &CircleSet) -> Vec<FoamGenerator> {
    let mut out: Vec<Vec<Piece>> = vec![Vec::new()];
    for c in &circles.circles {
        let choices = if c.kind.is_trivial() {
            [Piece::DottedDisk, Piece::Disk]
        } else {
            [Piece::Annulus(Sign::Plus), Piece::Annulus(Sign::Minus)]
        };
        out = out
            .into_iter()
            .flat_map(|prefix| {
                choices.iter().map(move |&p| {
                    let mut v = prefix.clone();
                    v.push(p);
                    v
                })
            })
            .collect();
    }
    out.into_iter()
        .map(|pieces| FoamGenerator {
            state: state.clone(),
            pieces,
        })
        .collect()
}

pub fn foam_partial(d: &Diagram, g: &FoamGenerator, p: usize) -> Result<FoamSum> {
    normalize(&bridge(d, g, p))
}

pub fn foam_differential(d: &Diagram, g: &FoamGenerator) -> Result<FoamSum> {
    let mut out = FoamSum::zero();
    for p in 0..d.crossing_count() {
        if g.state.at(p) == Smoothing::Positive {
            let sign = if g.state.negatives_after(p).is_multiple_of(2) {
                1
            } else {
                -1
            };
            out.add_scaled(&foam_partial(d, g, p)?, sign);
        }
    }
    Ok(out)
}
