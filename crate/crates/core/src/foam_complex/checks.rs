use rand::Rng;

use super::{
    apply, bridge, foam_generators, normalize, normalize_shuffled, raw_grade, rewrites, Blocked,
    RawFoam, RawTerm,
};
use crate::surface_diagram::{enumerate_states, resolve_state, Diagram, Smoothing};
use crate::{Report, Result};

/// The bridge at every positively smoothed crossing of every generator.
pub fn all_bridges(d: &Diagram) -> Vec<RawFoam> {
    let mut out = Vec::new();
    for s in enumerate_states(d) {
        let circles = resolve_state(d, &s);
        for g in foam_generators(&s, &circles) {
            for p in 0..d.crossing_count() {
                if s.at(p) == Smoothing::Positive {
                    out.push(bridge(d, &g, p));
                }
            }
        }
    }
    out
}

/// Normalizes every bridge `runs` times under random rule choices and
/// compares against the default order.
pub fn verify_confluence(d: &Diagram, runs: usize, rng: &mut impl Rng) -> Result<Report> {
    let mut report = Report::default();
    for raw in all_bridges(d) {
        let reference = normalize(&raw)?;
        for _ in 0..runs {
            let other = normalize_shuffled(&raw, rng)?;
            report.check(other == reference, || {
                format!("order-dependent result for {raw:?}")
            });
        }
    }
    Ok(report)
}

/// Every applicable rewrite, at every stage of normalizing every bridge,
/// produces terms of the grading of the term it replaces.
pub fn verify_rewrite_gradings(d: &Diagram) -> Report {
    let mut report = Report::default();
    for raw in all_bridges(d) {
        if raw.blocked.is_some() {
            continue;
        }
        let mut pending = vec![RawTerm {
            coefficient: 1,
            components: raw.components.clone(),
        }];
        while let Some(term) = pending.pop() {
            let before = raw_grade(&raw.state, &term.components);
            let options = rewrites(&term.components);
            for (k, rw) in options.iter().enumerate() {
                let produced = apply(&term, rw);
                for t in &produced {
                    let after = raw_grade(&raw.state, &t.components);
                    report.check(after == before, || {
                        format!("{:?} moved {before} to {after}", rw.rule)
                    });
                }
                if k == 0 {
                    pending.extend(produced);
                }
            }
        }
    }
    report
}

/// For crossings `a != b`, a bridge blocked by EO or NOS in one order means
/// both composites vanish.
pub fn verify_blocked_symmetry(d: &Diagram) -> Result<Report> {
    let mut report = Report::default();
    for s in enumerate_states(d) {
        let circles = resolve_state(d, &s);
        for g in foam_generators(&s, &circles) {
            for a in 0..d.crossing_count() {
                for b in 0..d.crossing_count() {
                    if a == b || s.at(a) == Smoothing::Negative || s.at(b) == Smoothing::Negative {
                        continue;
                    }
                    let first = bridge(d, &g, a);
                    if !matches!(first.blocked, Some(Blocked::EO | Blocked::NOS)) {
                        continue;
                    }
                    for (x, y) in [(a, b), (b, a)] {
                        let mut twice = super::FoamSum::zero();
                        for (h, c) in normalize(&bridge(d, &g, x))?.iter() {
                            twice.add_scaled(&normalize(&bridge(d, h, y))?, c);
                        }
                        report.check(twice.is_zero(), || format!("d_{y} d_{x} nonzero on {g}"));
                    }
                }
            }
        }
    }
    Ok(report)
}
