//! The translation between enhanced states and foams, checked against both
//! differentials, plus the skein exact sequence and the per-case table.

mod skein;
mod table;

use crate::aps_complex::{
    aps_differential, aps_grade_with, aps_partial, enhanced_states, EnhancedState, Marking,
};
use crate::foam_complex::{
    components_of, foam_differential, foam_partial, raw_grade, FoamGenerator, FoamSum, Piece,
};
use crate::lincomb::LinComb;
use crate::surface_diagram::{enumerate_states, resolve_state, Diagram, Sign};
use crate::{Report, Result};

pub use skein::{verify_exactness, Deletion, SkeinTriple};
pub use table::{run_table_case, table_cases, CaseOutcome, TableCase};

pub fn phi_mark(m: Marking) -> Piece {
    match m {
        Marking::Plus => Piece::DottedDisk,
        Marking::Minus => Piece::Disk,
        Marking::PlusZero => Piece::Annulus(Sign::Plus),
        Marking::MinusZero => Piece::Annulus(Sign::Minus),
    }
}

pub fn phi_inverse_mark(p: Piece) -> Marking {
    match p {
        Piece::DottedDisk => Marking::Plus,
        Piece::Disk => Marking::Minus,
        Piece::Annulus(Sign::Plus) => Marking::PlusZero,
        Piece::Annulus(Sign::Minus) => Marking::MinusZero,
    }
}

pub fn phi(e: &EnhancedState) -> FoamGenerator {
    FoamGenerator {
        state: e.state.clone(),
        pieces: e.markings.iter().map(|&m| phi_mark(m)).collect(),
    }
}

pub fn phi_inverse(g: &FoamGenerator) -> EnhancedState {
    EnhancedState {
        state: g.state.clone(),
        markings: g.pieces.iter().map(|&p| phi_inverse_mark(p)).collect(),
    }
}

pub fn phi_sum(sum: &LinComb<EnhancedState>) -> FoamSum {
    sum.map(phi)
}

fn all_enhanced_states(d: &Diagram) -> Vec<EnhancedState> {
    enumerate_states(d)
        .into_iter()
        .flat_map(|s| {
            let circles = resolve_state(d, &s);
            enhanced_states(&s, &circles)
        })
        .collect()
}

/// `Φ ∘ ∂_p = ∂_p ∘ Φ` for every generator and crossing, and the same for
/// the signed totals.
pub fn verify_chain_map(d: &Diagram) -> Result<Report> {
    let mut report = Report::default();
    for e in all_enhanced_states(d) {
        let g = phi(&e);
        for p in 0..d.crossing_count() {
            let lhs = phi_sum(&aps_partial(d, &e, p));
            let rhs = foam_partial(d, &g, p)?;
            report.check(lhs == rhs, || {
                format!("partial at crossing {p} differs on {e}")
            });
        }
        let lhs = phi_sum(&aps_differential(d, &e));
        let rhs = foam_differential(d, &g)?;
        report.check(lhs == rhs, || format!("differential differs on {e}"));
    }
    Ok(report)
}

pub fn verify_grading_preservation(d: &Diagram) -> Report {
    let mut report = Report::default();
    for s in enumerate_states(d) {
        let circles = resolve_state(d, &s);
        for e in enhanced_states(&s, &circles) {
            let a = aps_grade_with(&circles, &e);
            let f = raw_grade(&s, &components_of(&circles, &phi(&e)));
            report.check(a == f, || format!("{e}: {a} vs {f}"));
        }
    }
    report
}
