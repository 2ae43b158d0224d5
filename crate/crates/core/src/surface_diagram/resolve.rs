use super::{positive_orientation, Diagram, EdgeEnd, End, H1Class, Sign, Smoothing, State};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CircleKind {
    Trivial,
    /// `traced class = sign * canonical`.
    Essential {
        canonical: H1Class,
        sign: Sign,
    },
}

impl CircleKind {
    pub fn is_trivial(&self) -> bool {
        matches!(self, CircleKind::Trivial)
    }

    pub fn canonical(&self) -> Option<&H1Class> {
        match self {
            CircleKind::Trivial => None,
            CircleKind::Essential { canonical, .. } => Some(canonical),
        }
    }
}

/// How a circle was traced: the edge-ends it entered edges through, in
/// order, or a free loop.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Route {
    Edges(Vec<EdgeEnd>),
    Loop(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Circle {
    pub id: usize,
    pub route: Route,
    pub class: H1Class,
    pub kind: CircleKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircleSet {
    pub circles: Vec<Circle>,
    /// Circle id of every edge-end.
    circle_of_end: Vec<usize>,
    /// Circle id of every free loop.
    circle_of_loop: Vec<usize>,
}

impl CircleSet {
    pub fn len(&self) -> usize {
        self.circles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.circles.is_empty()
    }

    pub fn circle_of_end(&self, end: EdgeEnd) -> usize {
        self.circle_of_end[end.index()]
    }

    pub fn circle_of_loop(&self, l: usize) -> usize {
        self.circle_of_loop[l]
    }

    pub fn kind(&self, id: usize) -> &CircleKind {
        &self.circles[id].kind
    }

    pub fn is_trivial(&self, id: usize) -> bool {
        self.circles[id].kind.is_trivial()
    }
}

/// Traces the state circles of `s`.
///
/// Circle ids follow the smallest edge-end index on each circle; free loops
/// come after all edge circles in declaration order.
pub fn resolve_state(d: &Diagram, s: &State) -> CircleSet {
    assert_eq!(
        s.len(),
        d.crossing_count(),
        "state does not match the diagram"
    );
    let n_ends = 2 * d.edges().len();
    let mut circle_of_end = vec![usize::MAX; n_ends];
    let mut circles = Vec::new();
    let rank = d.surface().h1_rank();

    for start in 0..n_ends {
        if circle_of_end[start] != usize::MAX {
            continue;
        }
        let id = circles.len();
        let start = EdgeEnd::new(
            start / 2,
            if start % 2 == 0 { End::Tail } else { End::Head },
        );
        let mut class = H1Class::zero(rank);
        let mut route = Vec::new();
        let mut cur = start;
        loop {
            let far = cur.opposite();
            circle_of_end[cur.index()] = id;
            circle_of_end[far.index()] = id;
            let edge_class = &d.edges()[cur.edge].class;
            class = match cur.end {
                End::Tail => &class + edge_class,
                End::Head => &class + &-edge_class,
            };
            route.push(cur);
            let (x, port) = d.attachment(far);
            cur = d.crossings()[x].ports[s.at(x).partner(port)];
            if cur == start {
                break;
            }
        }
        circles.push(make_circle(d, id, Route::Edges(route), class));
    }

    let mut circle_of_loop = Vec::with_capacity(d.loops().len());
    for (k, l) in d.loops().iter().enumerate() {
        let id = circles.len();
        circle_of_loop.push(id);
        circles.push(make_circle(d, id, Route::Loop(k), l.class.clone()));
    }

    CircleSet {
        circles,
        circle_of_end,
        circle_of_loop,
    }
}

fn make_circle(d: &Diagram, id: usize, route: Route, class: H1Class) -> Circle {
    let kind = if class.is_zero() {
        CircleKind::Trivial
    } else {
        let (canonical, sign) =
            positive_orientation(d.surface(), &class).expect("class rank matches surface");
        CircleKind::Essential { canonical, sign }
    };
    Circle {
        id,
        route,
        class,
        kind,
    }
}

/// A circle taking part in a transition, with its triviality.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CircleRef {
    pub id: usize,
    pub trivial: bool,
}

/// How the circles through a crossing change when its smoothing is flipped.
/// `from` ids refer to the circles before the flip, `to` ids to those after.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TransitionKind {
    Merge { from: [CircleRef; 2], to: CircleRef },
    Split { from: CircleRef, to: [CircleRef; 2] },
    SelfGlue { from: CircleRef, to: CircleRef },
}

/// Everything both chain complexes need to know about flipping one crossing.
#[derive(Debug, Clone)]
pub struct Flip {
    pub target: State,
    pub before: CircleSet,
    pub after: CircleSet,
    pub kind: TransitionKind,
    /// Circles not meeting the crossing, as `(id before, id after)`.
    pub carried: Vec<(usize, usize)>,
}

pub fn flip(d: &Diagram, s: &State, p: usize) -> Flip {
    let target = s.with(p, s.at(p).flipped());
    let before = resolve_state(d, s);
    let after = resolve_state(d, &target);
    let ports = &d.crossings()[p].ports;

    let involved = |set: &CircleSet| {
        let mut ids: Vec<usize> = ports.iter().map(|&e| set.circle_of_end(e)).collect();
        ids.sort_unstable();
        ids.dedup();
        ids.into_iter()
            .map(|id| CircleRef {
                id,
                trivial: set.is_trivial(id),
            })
            .collect::<Vec<_>>()
    };
    let old = involved(&before);
    let new = involved(&after);
    let kind = match (old.as_slice(), new.as_slice()) {
        ([a, b], [c]) => TransitionKind::Merge {
            from: [*a, *b],
            to: *c,
        },
        ([a], [b, c]) => TransitionKind::Split {
            from: *a,
            to: [*b, *c],
        },
        ([a], [b]) => TransitionKind::SelfGlue { from: *a, to: *b },
        _ => unreachable!("a crossing meets at most two circles on each side"),
    };

    let touched: Vec<usize> = old.iter().map(|c| c.id).collect();
    let carried = before
        .circles
        .iter()
        .filter(|c| !touched.contains(&c.id))
        .map(|c| {
            let new_id = match &c.route {
                Route::Edges(r) => after.circle_of_end(r[0]),
                Route::Loop(l) => after.circle_of_loop(*l),
            };
            (c.id, new_id)
        })
        .collect();

    Flip {
        target,
        before,
        after,
        kind,
        carried,
    }
}

pub fn classify_transition(d: &Diagram, s: &State, p: usize) -> TransitionKind {
    flip(d, s, p).kind
}

/// All `2^n` states; crossing 0 is the most significant position and
/// `Positive` sorts first, so two crossings give `++, +-, -+, --`.
pub fn enumerate_states(d: &Diagram) -> Vec<State> {
    let n = d.crossing_count();
    assert!(n < usize::BITS as usize, "too many crossings to enumerate");
    (0..1usize << n)
        .map(|m| {
            State(
                (0..n)
                    .map(|k| {
                        if m >> (n - 1 - k) & 1 == 0 {
                            Smoothing::Positive
                        } else {
                            Smoothing::Negative
                        }
                    })
                    .collect(),
            )
        })
        .collect()
}
