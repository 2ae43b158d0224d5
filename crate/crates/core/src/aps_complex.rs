//! Enhanced Kauffman states and their differential.
//!
//! A generator marks every trivial state circle `+` or `-` and every
//! essential circle `+0` or `-0` (relative to the canonical orientation of
//! its class). The partial differential at a positively smoothed crossing
//! flips it and rewrites the markings of the circles through it according
//! to how those circles change.

use std::fmt;

use crate::grading::{Grading, SGrading};
use crate::lincomb::LinComb;
use crate::surface_diagram::{
    flip, resolve_state, CircleRef, CircleSet, Diagram, Smoothing, State, TransitionKind,
};
use crate::Decorated;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Marking {
    Plus,
    Minus,
    PlusZero,
    MinusZero,
}

impl Marking {
    pub fn fits(self, trivial: bool) -> bool {
        matches!(self, Marking::Plus | Marking::Minus) == trivial
    }
}

impl fmt::Display for Marking {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Marking::Plus => "+",
            Marking::Minus => "-",
            Marking::PlusZero => "+0",
            Marking::MinusZero => "-0",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EnhancedState {
    pub state: State,
    /// Indexed by circle id of `resolve_state(d, state)`.
    pub markings: Vec<Marking>,
}

impl EnhancedState {
    pub fn is_valid_for(&self, circles: &CircleSet) -> bool {
        self.markings.len() == circles.len()
            && self
                .markings
                .iter()
                .enumerate()
                .all(|(k, m)| m.fits(circles.is_trivial(k)))
    }
}

impl fmt::Display for EnhancedState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let marks: Vec<String> = self.markings.iter().map(|m| m.to_string()).collect();
        write!(f, "{}[{}]", self.state, marks.join(","))
    }
}

impl Decorated for EnhancedState {
    type Mark = Marking;

    fn state(&self) -> &State {
        &self.state
    }

    fn marks(&self) -> &[Marking] {
        &self.markings
    }

    fn from_parts(state: State, marks: Vec<Marking>) -> Self {
        EnhancedState {
            state,
            markings: marks,
        }
    }
}

/// Every marking of the circles of one state, first choice (`+` / `+0`)
/// varying slowest from circle 0.
pub fn enhanced_states(state: &State, circles: &CircleSet) -> Vec<EnhancedState> {
    let mut out = vec![Vec::with_capacity(circles.len())];
    for c in &circles.circles {
        let choices = if c.kind.is_trivial() {
            [Marking::Plus, Marking::Minus]
        } else {
            [Marking::PlusZero, Marking::MinusZero]
        };
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<Marking>| {
                choices.iter().map(move |&m| {
                    let mut v = prefix.clone();
                    v.push(m);
                    v
                })
            })
            .collect();
    }
    out.into_iter()
        .map(|markings| EnhancedState {
            state: state.clone(),
            markings,
        })
        .collect()
}

pub fn aps_grade_with(circles: &CircleSet, e: &EnhancedState) -> Grading {
    let i = e.state.signature();
    let mut balance = 0;
    let mut s = SGrading::zero();
    for (c, m) in circles.circles.iter().zip(&e.markings) {
        match m {
            Marking::Plus => balance += 1,
            Marking::Minus => balance -= 1,
            Marking::PlusZero => s.add(c.kind.canonical().expect("essential"), 1),
            Marking::MinusZero => s.add(c.kind.canonical().expect("essential"), -1),
        }
    }
    Grading::new(i, i + 2 * balance, s)
}

pub fn aps_grade(d: &Diagram, e: &EnhancedState) -> Grading {
    aps_grade_with(&resolve_state(d, &e.state), e)
}

/// The unsigned partial differential at crossing `p`.
pub fn aps_partial(d: &Diagram, e: &EnhancedState, p: usize) -> LinComb<EnhancedState> {
    use Marking::*;

    if e.state.at(p) == Smoothing::Negative {
        return LinComb::zero();
    }
    let f = flip(d, &e.state, p);
    let mut base = vec![Plus; f.after.len()];
    for &(old, new) in &f.carried {
        base[new] = e.markings[old];
    }
    let emit = |assign: &[(CircleRef, Marking)]| {
        let mut m = base.clone();
        for (c, mark) in assign {
            m[c.id] = *mark;
        }
        EnhancedState {
            state: f.target.clone(),
            markings: m,
        }
    };
    let mut out = LinComb::zero();

    match f.kind {
        TransitionKind::SelfGlue { .. } => {}
        TransitionKind::Split { from, to: [a, b] } => {
            let mark = e.markings[from.id];
            match (from.trivial, a.trivial, b.trivial) {
                // T -> TT
                (true, true, true) => match mark {
                    Plus => out.add_term(emit(&[(a, Plus), (b, Plus)]), 1),
                    _ => {
                        out.add_term(emit(&[(a, Plus), (b, Minus)]), 1);
                        out.add_term(emit(&[(a, Minus), (b, Plus)]), 1);
                    }
                },
                // T -> NN
                (true, false, false) => {
                    if mark == Minus {
                        out.add_term(emit(&[(a, PlusZero), (b, MinusZero)]), 1);
                        out.add_term(emit(&[(a, MinusZero), (b, PlusZero)]), 1);
                    }
                }
                // N -> NT
                (false, true, false) => out.add_term(emit(&[(b, mark), (a, Plus)]), 1),
                (false, false, true) => out.add_term(emit(&[(a, mark), (b, Plus)]), 1),
                // N -> NN
                (false, false, false) => {}
                _ => unreachable!("homology classes add across a split"),
            }
        }
        TransitionKind::Merge { from: [a, b], to } => {
            let (ma, mb) = (e.markings[a.id], e.markings[b.id]);
            match (a.trivial, b.trivial, to.trivial) {
                // TT -> T
                (true, true, true) => match (ma, mb) {
                    (Plus, Plus) => {}
                    (Minus, Minus) => out.add_term(emit(&[(to, Minus)]), 1),
                    _ => out.add_term(emit(&[(to, Plus)]), 1),
                },
                // NN -> T
                (false, false, true) => {
                    if ma != mb {
                        out.add_term(emit(&[(to, Plus)]), 1);
                    }
                }
                // NN -> N
                (false, false, false) => {}
                // TN -> N
                (true, false, false) | (false, true, false) => {
                    let (t, n) = if a.trivial { (ma, mb) } else { (mb, ma) };
                    if t == Minus {
                        out.add_term(emit(&[(to, n)]), 1);
                    }
                }
                _ => unreachable!("homology classes add across a merge"),
            }
        }
    }
    out
}

/// `Σ_p (-1)^{t(e,p)} ∂_p e`, with `t` the number of negatively smoothed
/// crossings after `p`.
pub fn aps_differential(d: &Diagram, e: &EnhancedState) -> LinComb<EnhancedState> {
    let mut out = LinComb::zero();
    for p in 0..d.crossing_count() {
        if e.state.at(p) == Smoothing::Positive {
            let sign = if e.state.negatives_after(p).is_multiple_of(2) {
                1
            } else {
                -1
            };
            out.add_scaled(&aps_partial(d, e, p), sign);
        }
    }
    out
}
