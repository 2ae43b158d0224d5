use std::fmt::Write as _;

use super::{phi, phi_sum};
use crate::aps_complex::{aps_partial, EnhancedState, Marking};
use crate::foam_complex::{foam_partial, FoamSum};
use crate::lincomb::LinComb;
use crate::surface_diagram::{
    flip, parse_diagram, BraidClosure, CircleRef, Diagram, Smoothing, State, SurfaceKind,
    TransitionKind,
};
use crate::{Error, Result};

use Marking::{Minus as M, MinusZero as MZ, Plus as P, PlusZero as PZ};

/// One row of the case table: a one-crossing diagram whose positive
/// smoothing changes into the negative one as `transition` says, an input
/// marking and the expected output.
///
/// Markings are listed by role. Inputs: the circle that splits; the two
/// merging circles by id; or the trivial then the essential one. Outputs:
/// the two new circles by id; the essential then the trivial one; or the
/// merged circle.
#[derive(Debug, Clone)]
pub struct TableCase {
    pub row: usize,
    pub transition: &'static str,
    pub input: Vec<Marking>,
    pub expected: Vec<Vec<Marking>>,
    pub diagram: Diagram,
}

fn braid(kind: SurfaceKind, letter: i32) -> Diagram {
    BraidClosure::new(2, vec![letter]).build(kind)
}

/// Core circle of the annulus with one kink. `essential_splits` picks the
/// crossing type whose bridge splits off the kink; otherwise the bridge
/// merges it back.
fn curl(essential_splits: bool) -> Diagram {
    let ports = if essential_splits {
        "0.1 1.1 1.0 0.0"
    } else {
        "1.1 1.0 0.0 0.1"
    };
    parse_diagram(&format!(
        "surface annulus\nedge 0\nedge 1 h1 1\ncrossing 0 {ports}\n"
    ))
    .expect("well formed")
}

/// Two strands wrapping the torus in independent directions, meeting at a
/// single crossing. Purely combinatorial: the only way to realize essential
/// splits and merges among pairwise non-homologous circles.
fn torus_rows(letter: i32) -> Diagram {
    let ports = if letter > 0 {
        "0.1 0.0 1.0 1.1"
    } else {
        "0.0 1.0 1.1 0.1"
    };
    parse_diagram(&format!(
        "surface torus\nedge 0 h1 1 0\nedge 1 h1 0 1\ncrossing 0 {ports}\n"
    ))
    .expect("well formed")
}

pub fn table_cases() -> Vec<TableCase> {
    use SurfaceKind::*;
    type Row = (&'static str, Vec<Marking>, Vec<Vec<Marking>>, Diagram);
    let rows: Vec<Row> = vec![
        ("T -> TT", vec![P], vec![vec![P, P]], braid(Disk, -1)),
        ("T -> NN", vec![P], vec![], braid(Annulus, -1)),
        (
            "T -> TT",
            vec![M],
            vec![vec![P, M], vec![M, P]],
            braid(Disk, -1),
        ),
        (
            "T -> NN",
            vec![M],
            vec![vec![PZ, MZ], vec![MZ, PZ]],
            braid(Annulus, -1),
        ),
        ("N -> NT", vec![PZ], vec![vec![PZ, P]], curl(true)),
        ("N -> NN", vec![PZ], vec![], torus_rows(-1)),
        ("N -> NT", vec![MZ], vec![vec![MZ, P]], curl(true)),
        ("N -> NN", vec![MZ], vec![], torus_rows(-1)),
        ("TT -> T", vec![P, P], vec![], braid(Disk, 1)),
        ("TT -> T", vec![P, M], vec![vec![P]], braid(Disk, 1)),
        ("TT -> T", vec![M, M], vec![vec![M]], braid(Disk, 1)),
        ("NN -> T", vec![PZ, PZ], vec![], braid(Annulus, 1)),
        ("NN -> N", vec![PZ, PZ], vec![], torus_rows(1)),
        ("NN -> T", vec![PZ, MZ], vec![vec![P]], braid(Annulus, 1)),
        ("NN -> N", vec![PZ, MZ], vec![], torus_rows(1)),
        ("NN -> T", vec![MZ, MZ], vec![], braid(Annulus, 1)),
        ("NN -> N", vec![MZ, MZ], vec![], torus_rows(1)),
        ("TN -> N", vec![P, PZ], vec![], curl(false)),
        ("TN -> N", vec![P, MZ], vec![], curl(false)),
        ("TN -> N", vec![M, MZ], vec![vec![MZ]], curl(false)),
        ("TN -> N", vec![M, PZ], vec![vec![PZ]], curl(false)),
    ];
    rows.into_iter()
        .enumerate()
        .map(|(k, (transition, input, expected, diagram))| TableCase {
            row: k + 1,
            transition,
            input,
            expected,
            diagram,
        })
        .collect()
}

fn letter(c: CircleRef) -> char {
    if c.trivial {
        'T'
    } else {
        'N'
    }
}

/// Input and output roles, as circle ids before and after the flip.
fn roles(kind: &TransitionKind) -> (String, Vec<usize>, Vec<usize>) {
    match *kind {
        TransitionKind::Split { from, to: [a, b] } => {
            let (x, y) = if a.trivial && !b.trivial {
                (b, a)
            } else {
                (a, b)
            };
            (
                format!("{} -> {}{}", letter(from), letter(x), letter(y)),
                vec![from.id],
                vec![x.id, y.id],
            )
        }
        TransitionKind::Merge { from: [a, b], to } => {
            let (x, y) = if !a.trivial && b.trivial {
                (b, a)
            } else {
                (a, b)
            };
            (
                format!("{}{} -> {}", letter(x), letter(y), letter(to)),
                vec![x.id, y.id],
                vec![to.id],
            )
        }
        TransitionKind::SelfGlue { from, to } => (
            format!("{} -> {}", letter(from), letter(to)),
            vec![from.id],
            vec![to.id],
        ),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseOutcome {
    pub row: usize,
    pub transition: String,
    /// Enhanced-state output, by role.
    pub aps: String,
    /// Foam output, pulled back to markings, by role.
    pub foam: String,
    pub matches_table: bool,
    pub backends_agree: bool,
}

impl CaseOutcome {
    pub fn passed(&self) -> bool {
        self.matches_table && self.backends_agree
    }
}

fn render(sum: &LinComb<Vec<Marking>>) -> String {
    if sum.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (marks, c)) in sum.iter().enumerate() {
        if k > 0 {
            out.push_str(" + ");
        }
        if c != 1 {
            let _ = write!(out, "{c}*");
        }
        let m: Vec<String> = marks.iter().map(|m| m.to_string()).collect();
        let _ = write!(out, "({})", m.join(","));
    }
    out
}

pub fn run_table_case(case: &TableCase) -> Result<CaseOutcome> {
    let d = &case.diagram;
    let state = State(vec![Smoothing::Positive]);
    let f = flip(d, &state, 0);
    let (transition, inputs, outputs) = roles(&f.kind);
    if transition != case.transition || inputs.len() != case.input.len() {
        return Err(Error::Invalid(format!(
            "row {}: diagram realizes {transition}, not {}",
            case.row, case.transition
        )));
    }
    let mut markings = vec![P; f.before.len()];
    for (&id, &m) in inputs.iter().zip(&case.input) {
        markings[id] = m;
    }
    let e = EnhancedState { state, markings };

    let by_role = |g: &EnhancedState| outputs.iter().map(|&id| g.markings[id]).collect::<Vec<_>>();
    let aps = aps_partial(d, &e, 0);
    let foam: FoamSum = foam_partial(d, &phi(&e), 0)?;
    let expected: LinComb<Vec<Marking>> = case.expected.iter().map(|t| (t.clone(), 1)).collect();
    let aps_roles = aps.map(by_role);
    let foam_roles = foam.map(|g| by_role(&super::phi_inverse(g)));

    Ok(CaseOutcome {
        row: case.row,
        transition,
        aps: render(&aps_roles),
        foam: render(&foam_roles),
        matches_table: aps_roles == expected,
        backends_agree: phi_sum(&aps) == foam,
    })
}
