use rand::Rng;

use super::{
    BottomCircle, FoamComponent, FoamGenerator, FoamSum, Piece, RawFoam, RawTerm, TopCircle,
};
use crate::surface_diagram::{Sign, State};
use crate::{Error, Result};

/// The local relations, each acting on one component of one term.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Rule {
    /// Two or more dots: the term vanishes.
    TwoDots,
    /// Dotless sphere: the term vanishes.
    Sphere,
    /// Sphere with one dot: the component is removed.
    DottedSphere,
    /// Compress along a trivial top circle of a non-disk component.
    NeckCut,
    /// Dotted component whose boundary is all essential, with `χ <= 0`.
    NonDiskDot,
    /// Dotless component with nonempty, all essential boundary and `χ < 0`.
    NegativeEuler,
    /// Unoriented annulus between two essential top circles.
    UnorientedTopAnnulus,
    /// Annulus with both boundary circles in the bottom: removed.
    BottomAnnulus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rewrite {
    pub rule: Rule,
    pub component: usize,
    /// Position in the component's top list, for [`Rule::NeckCut`].
    pub circle: Option<usize>,
}

fn is_disk(c: &FoamComponent) -> bool {
    c.genus == 0 && c.bottom.is_empty() && c.top.len() == 1 && c.top[0].is_trivial()
}

/// A disk over a trivial circle with at most one dot, or a vertical annulus
/// whose top orientation agrees with its bottom circle.
pub fn is_normal(c: &FoamComponent) -> bool {
    if is_disk(c) {
        return c.dots <= 1;
    }
    match (c.genus, c.dots, c.top.as_slice(), c.bottom.as_slice()) {
        (0, 0, [t], [b]) => t.essential.as_ref() == Some(&b.class) && t.orientation == Some(b.sign),
        _ => false,
    }
}

/// Every rewrite applicable to some component.
pub fn rewrites(components: &[FoamComponent]) -> Vec<Rewrite> {
    let mut out = Vec::new();
    for (k, c) in components.iter().enumerate() {
        let mut push = |rule, circle| {
            out.push(Rewrite {
                rule,
                component: k,
                circle,
            })
        };
        let chi = c.euler();
        if c.dots >= 2 {
            push(Rule::TwoDots, None);
        }
        if c.is_closed() && c.genus == 0 {
            match c.dots {
                0 => push(Rule::Sphere, None),
                1 => push(Rule::DottedSphere, None),
                _ => {}
            }
        }
        if !is_disk(c) {
            for (t, top) in c.top.iter().enumerate() {
                if top.is_trivial() {
                    push(Rule::NeckCut, Some(t));
                }
            }
        }
        if c.boundary_all_essential() {
            if c.dots >= 1 && chi <= 0 {
                push(Rule::NonDiskDot, None);
            }
            if c.dots == 0 && !c.is_closed() && chi < 0 {
                push(Rule::NegativeEuler, None);
            }
        }
        if c.dots == 0 && c.genus == 0 {
            if c.bottom.is_empty() && c.top.len() == 2 && c.boundary_all_essential() {
                push(Rule::UnorientedTopAnnulus, None);
            }
            if c.top.is_empty() && c.bottom.len() == 2 {
                push(Rule::BottomAnnulus, None);
            }
        }
    }
    out
}

fn annulus(top: &TopCircle, sign: Sign) -> FoamComponent {
    let class = top.essential.clone().expect("essential top circle");
    FoamComponent {
        genus: 0,
        dots: 0,
        top: vec![TopCircle {
            circle: top.circle,
            essential: Some(class.clone()),
            orientation: Some(sign),
        }],
        bottom: vec![BottomCircle { class, sign }],
    }
}

fn disk(circle: usize, dots: u32) -> FoamComponent {
    FoamComponent {
        genus: 0,
        dots,
        top: vec![TopCircle::trivial(circle)],
        bottom: vec![],
    }
}

/// The terms replacing `term` under one rewrite.
pub fn apply(term: &RawTerm, rw: &Rewrite) -> Vec<RawTerm> {
    let k = rw.component;
    let c = &term.components[k];
    let with = |replacement: Vec<FoamComponent>| {
        let mut components = term.components.clone();
        components.splice(k..=k, replacement);
        RawTerm {
            coefficient: term.coefficient,
            components,
        }
    };
    match rw.rule {
        Rule::TwoDots | Rule::Sphere | Rule::NonDiskDot | Rule::NegativeEuler => vec![],
        Rule::DottedSphere | Rule::BottomAnnulus => vec![with(vec![])],
        Rule::NeckCut => {
            let t = rw.circle.expect("neck cut names a circle");
            let mut rest = c.clone();
            let cut = rest.top.remove(t);
            let mut dotted_rest = rest.clone();
            dotted_rest.dots += 1;
            vec![
                with(vec![disk(cut.circle, 1), rest]),
                with(vec![disk(cut.circle, 0), dotted_rest]),
            ]
        }
        Rule::UnorientedTopAnnulus => {
            let (x, y) = (&c.top[0], &c.top[1]);
            vec![
                with(vec![annulus(x, Sign::Plus), annulus(y, Sign::Minus)]),
                with(vec![annulus(x, Sign::Minus), annulus(y, Sign::Plus)]),
            ]
        }
    }
}

fn into_generator(state: &State, term: &RawTerm) -> Result<FoamGenerator> {
    let n = term.components.len();
    let mut pieces = vec![None; n];
    for c in &term.components {
        if !is_normal(c) {
            return Err(Error::UnreachableShape(format!("{c:?}")));
        }
        let top = &c.top[0];
        let piece = match (top.orientation, c.dots) {
            (Some(sign), _) => Piece::Annulus(sign),
            (None, 1) => Piece::DottedDisk,
            (None, _) => Piece::Disk,
        };
        match pieces.get_mut(top.circle) {
            Some(slot @ None) => *slot = Some(piece),
            _ => {
                return Err(Error::UnreachableShape(format!(
                    "circle {} is not capped exactly once",
                    top.circle
                )))
            }
        }
    }
    let pieces = pieces
        .into_iter()
        .map(|p| p.expect("all slots filled"))
        .collect();
    Ok(FoamGenerator {
        state: state.clone(),
        pieces,
    })
}

/// Rewrites to normal form, letting `choose` pick among the applicable
/// rewrites of each term (its index is taken modulo their number).
pub fn normalize_by(r: &RawFoam, mut choose: impl FnMut(&[Rewrite]) -> usize) -> Result<FoamSum> {
    let mut out = FoamSum::zero();
    if r.blocked.is_some() {
        return Ok(out);
    }
    let mut pending = vec![RawTerm {
        coefficient: 1,
        components: r.components.clone(),
    }];
    while let Some(term) = pending.pop() {
        let options = rewrites(&term.components);
        if options.is_empty() {
            out.add_term(into_generator(&r.state, &term)?, term.coefficient);
        } else {
            let pick = choose(&options) % options.len();
            pending.extend(apply(&term, &options[pick]));
        }
    }
    Ok(out)
}

pub fn normalize(r: &RawFoam) -> Result<FoamSum> {
    normalize_by(r, |_| 0)
}

pub fn normalize_shuffled(r: &RawFoam, rng: &mut impl Rng) -> Result<FoamSum> {
    normalize_by(r, |options| rng.gen_range(0..options.len()))
}
