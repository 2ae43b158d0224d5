use super::{components_of, Blocked, FoamComponent, FoamGenerator, Piece, RawFoam, TopCircle};
use crate::surface_diagram::{flip, CircleSet, Diagram, Smoothing, TransitionKind};

/// Places a bridge at crossing `p`: flips it to the negative smoothing and
/// fuses or splits the components through it. Nothing is normalized here.
pub fn bridge(d: &Diagram, g: &FoamGenerator, p: usize) -> RawFoam {
    if g.state.at(p) == Smoothing::Negative {
        return RawFoam::blocked(g.state.clone(), Blocked::NegativeSmoothing);
    }
    let f = flip(d, &g.state, p);
    let old = components_of(&f.before, g);

    let mut components = Vec::with_capacity(old.len());
    for &(from, to) in &f.carried {
        let mut c = old[from].clone();
        c.top[0].circle = to;
        components.push(c);
    }

    match f.kind {
        TransitionKind::SelfGlue { .. } => {
            return RawFoam::blocked(f.target, Blocked::NOS);
        }
        TransitionKind::Merge { from: [a, b], to } => {
            if let (Piece::Annulus(x), Piece::Annulus(y)) = (g.pieces[a.id], g.pieces[b.id]) {
                if x == y && to.trivial {
                    return RawFoam::blocked(f.target, Blocked::EO);
                }
            }
            let (ca, cb) = (&old[a.id], &old[b.id]);
            let mut merged = FoamComponent {
                genus: ca.genus + cb.genus,
                dots: ca.dots + cb.dots,
                top: vec![top_circle(&f.after, to.id)],
                bottom: ca.bottom.iter().chain(&cb.bottom).cloned().collect(),
            };
            orient(&mut merged);
            components.push(merged);
        }
        TransitionKind::Split { from, to: [a, b] } => {
            let c = &old[from.id];
            let mut split = FoamComponent {
                genus: c.genus,
                dots: c.dots,
                top: vec![top_circle(&f.after, a.id), top_circle(&f.after, b.id)],
                bottom: c.bottom.clone(),
            };
            orient(&mut split);
            components.push(split);
        }
    }
    RawFoam::surface(f.target, components)
}

fn top_circle(circles: &CircleSet, id: usize) -> TopCircle {
    TopCircle {
        circle: id,
        essential: circles.kind(id).canonical().cloned(),
        orientation: None,
    }
}

/// Essential top circles of a component with oriented bottom follow the
/// bottom circle of their own class, else the first bottom circle.
fn orient(c: &mut FoamComponent) {
    let Some(first) = c.bottom.first() else {
        return;
    };
    for t in &mut c.top {
        if let Some(class) = &t.essential {
            let source = c.bottom.iter().find(|b| &b.class == class).unwrap_or(first);
            t.orientation = Some(source.sign);
        }
    }
}
