//! Link diagrams drawn on the disk, the annulus or the torus.
//!
//! A diagram is stored as a 4-valent combinatorial map: every crossing lists
//! the four edge-ends meeting it in counterclockwise order, and every edge
//! carries the first-homology class it contributes when traversed from its
//! tail to its head. Components without crossings are stored as free loops.
//!
//! Resolving a [`State`] traces the state circles and labels each one trivial
//! or essential by testing its homology class against zero, which is exact on
//! surfaces of genus at most one.

mod braid;
mod parse;
mod resolve;

use std::fmt;
use std::ops::{Add, Neg};

pub use braid::BraidClosure;
pub use parse::parse_diagram;
pub use resolve::{
    classify_transition, enumerate_states, flip, resolve_state, Circle, CircleKind, CircleRef,
    CircleSet, Flip, Route, TransitionKind,
};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SurfaceKind {
    Disk,
    Annulus,
    Torus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Surface {
    pub kind: SurfaceKind,
}

impl Surface {
    pub fn new(kind: SurfaceKind) -> Self {
        Surface { kind }
    }

    pub fn h1_rank(&self) -> usize {
        match self.kind {
            SurfaceKind::Disk => 0,
            SurfaceKind::Annulus => 1,
            SurfaceKind::Torus => 2,
        }
    }

    pub fn name(&self) -> &'static str {
        match self.kind {
            SurfaceKind::Disk => "disk",
            SurfaceKind::Annulus => "annulus",
            SurfaceKind::Torus => "torus",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        let kind = match name {
            "disk" => SurfaceKind::Disk,
            "annulus" => SurfaceKind::Annulus,
            "torus" => SurfaceKind::Torus,
            _ => return None,
        };
        Some(Surface { kind })
    }
}

/// An element of H₁(F; ℤ) written in the standard basis.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct H1Class(pub Vec<i64>);

impl H1Class {
    pub fn zero(rank: usize) -> Self {
        H1Class(vec![0; rank])
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }
}

impl Add for &H1Class {
    type Output = H1Class;

    fn add(self, rhs: &H1Class) -> H1Class {
        debug_assert_eq!(self.0.len(), rhs.0.len());
        H1Class(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Neg for &H1Class {
    type Output = H1Class;

    fn neg(self) -> H1Class {
        H1Class(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for H1Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flipped(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

/// Canonical representative of `{cls, -cls}`: the one whose first nonzero
/// entry is positive. Also returns the sign with `cls = sign * canonical`.
pub fn positive_orientation(surface: &Surface, cls: &H1Class) -> Result<(H1Class, Sign)> {
    if cls.rank() != surface.h1_rank() {
        return Err(Error::Invalid(format!(
            "class {cls} has rank {}, the {} has rank {}",
            cls.rank(),
            surface.name(),
            surface.h1_rank()
        )));
    }
    match cls.0.iter().find(|&&x| x != 0) {
        None => Err(Error::Invalid(
            "the zero class has no positive orientation".into(),
        )),
        Some(&x) if x > 0 => Ok((cls.clone(), Sign::Plus)),
        Some(_) => Ok((-cls, Sign::Minus)),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum End {
    Tail,
    Head,
}

impl End {
    pub fn index(self) -> usize {
        match self {
            End::Tail => 0,
            End::Head => 1,
        }
    }

    pub fn other(self) -> End {
        match self {
            End::Tail => End::Head,
            End::Head => End::Tail,
        }
    }
}

/// One end of an edge. Edge-ends are numbered `2 * edge + end`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeEnd {
    pub edge: usize,
    pub end: End,
}

impl EdgeEnd {
    pub fn new(edge: usize, end: End) -> Self {
        EdgeEnd { edge, end }
    }

    pub fn index(self) -> usize {
        2 * self.edge + self.end.index()
    }

    pub fn opposite(self) -> EdgeEnd {
        EdgeEnd {
            edge: self.edge,
            end: self.end.other(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub label: i64,
    pub class: H1Class,
}

/// Ports `[a, b, c, d]` in counterclockwise order; the strand a–c passes
/// under the strand b–d.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Crossing {
    pub label: i64,
    pub ports: [EdgeEnd; 4],
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeLoop {
    pub label: i64,
    pub class: H1Class,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagram {
    surface: Surface,
    crossings: Vec<Crossing>,
    edges: Vec<Edge>,
    loops: Vec<FreeLoop>,
    /// For every edge-end index, the crossing and port it is attached to.
    attachment: Vec<(usize, usize)>,
}

impl Diagram {
    /// Builds a diagram after checking port incidence and class ranks.
    pub fn new(
        surface: Surface,
        crossings: Vec<Crossing>,
        edges: Vec<Edge>,
        loops: Vec<FreeLoop>,
    ) -> Result<Self> {
        let rank = surface.h1_rank();
        for e in &edges {
            if e.class.rank() != rank {
                return Err(Error::parse(
                    None,
                    format!(
                        "edge {} has an h1 vector of length {}, expected {rank}",
                        e.label,
                        e.class.rank()
                    ),
                ));
            }
        }
        for l in &loops {
            if l.class.rank() != rank {
                return Err(Error::parse(
                    None,
                    format!(
                        "loop {} has an h1 vector of length {}, expected {rank}",
                        l.label,
                        l.class.rank()
                    ),
                ));
            }
        }
        let mut attachment = vec![None; 2 * edges.len()];
        for (x, c) in crossings.iter().enumerate() {
            for (k, port) in c.ports.iter().enumerate() {
                if port.edge >= edges.len() {
                    return Err(Error::parse(
                        None,
                        format!("crossing {} refers to a missing edge", c.label),
                    ));
                }
                let slot = &mut attachment[port.index()];
                if slot.is_some() {
                    return Err(Error::parse(
                        None,
                        format!(
                            "edge {} end {} is used more than once",
                            edges[port.edge].label,
                            port.end.index()
                        ),
                    ));
                }
                *slot = Some((x, k));
            }
        }
        let attachment = attachment
            .into_iter()
            .enumerate()
            .map(|(idx, a)| {
                a.ok_or_else(|| {
                    Error::parse(
                        None,
                        format!(
                            "edge {} end {} is never used",
                            edges[idx / 2].label,
                            idx % 2
                        ),
                    )
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Diagram {
            surface,
            crossings,
            edges,
            loops,
            attachment,
        })
    }

    pub fn surface(&self) -> &Surface {
        &self.surface
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn loops(&self) -> &[FreeLoop] {
        &self.loops
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    /// Crossing and port index an edge-end is attached to.
    pub fn attachment(&self, end: EdgeEnd) -> (usize, usize) {
        self.attachment[end.index()]
    }

    /// Serializes in the diagram file format; `parse_diagram` reads it back.
    pub fn to_text(&self) -> String {
        let mut out = format!("surface {}\n", self.surface.name());
        let h1 = |c: &H1Class| {
            if c.rank() == 0 {
                String::new()
            } else {
                let v: Vec<String> = c.0.iter().map(|x| x.to_string()).collect();
                format!(" h1 {}", v.join(" "))
            }
        };
        for e in &self.edges {
            out.push_str(&format!("edge {}{}\n", e.label, h1(&e.class)));
        }
        for c in &self.crossings {
            let ports: Vec<String> = c
                .ports
                .iter()
                .map(|p| format!("{}.{}", self.edges[p.edge].label, p.end.index()))
                .collect();
            out.push_str(&format!("crossing {} {}\n", c.label, ports.join(" ")));
        }
        for l in &self.loops {
            out.push_str(&format!("loop {}{}\n", l.label, h1(&l.class)));
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Smoothing {
    /// Kauffman A-smoothing: joins ports a–b and c–d.
    Positive,
    /// Kauffman B-smoothing: joins ports a–d and b–c.
    Negative,
}

impl Smoothing {
    /// Port joined to `port` by this smoothing.
    pub fn partner(self, port: usize) -> usize {
        match self {
            Smoothing::Positive => [1, 0, 3, 2][port],
            Smoothing::Negative => [3, 2, 1, 0][port],
        }
    }

    pub fn flipped(self) -> Smoothing {
        match self {
            Smoothing::Positive => Smoothing::Negative,
            Smoothing::Negative => Smoothing::Positive,
        }
    }
}

/// A choice of smoothing at every crossing, indexed by crossing enumeration.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct State(pub Vec<Smoothing>);

impl State {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn at(&self, p: usize) -> Smoothing {
        self.0[p]
    }

    pub fn with(&self, p: usize, s: Smoothing) -> State {
        let mut v = self.0.clone();
        v[p] = s;
        State(v)
    }

    /// #Positive − #Negative.
    pub fn signature(&self) -> i64 {
        self.0
            .iter()
            .map(|s| match s {
                Smoothing::Positive => 1,
                Smoothing::Negative => -1,
            })
            .sum()
    }

    /// Number of crossings after `p` smoothed negatively; the sign exponent
    /// of the `p`-th partial differential.
    pub fn negatives_after(&self, p: usize) -> usize {
        self.0[p + 1..]
            .iter()
            .filter(|&&s| s == Smoothing::Negative)
            .count()
    }

    pub fn negatives_before(&self, p: usize) -> usize {
        self.0[..p]
            .iter()
            .filter(|&&s| s == Smoothing::Negative)
            .count()
    }

    /// Same state with crossing `p` removed.
    pub fn without(&self, p: usize) -> State {
        let mut v = self.0.clone();
        v.remove(p);
        State(v)
    }

    /// Same state with a crossing inserted at position `p`.
    pub fn inserted(&self, p: usize, s: Smoothing) -> State {
        let mut v = self.0.clone();
        v.insert(p, s);
        State(v)
    }

    /// Validates that the state covers exactly the crossings of `d`.
    pub fn check(&self, d: &Diagram) -> Result<()> {
        if self.len() != d.crossing_count() {
            return Err(Error::Invalid(format!(
                "state has {} smoothings, diagram has {} crossings",
                self.len(),
                d.crossing_count()
            )));
        }
        Ok(())
    }
}

impl fmt::Display for State {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for s in &self.0 {
            write!(f, "{}", if *s == Smoothing::Positive { '+' } else { '-' })?;
        }
        write!(f, ")")
    }
}
