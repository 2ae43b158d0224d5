use crate::integer_homology::{assemble, ChainBackend, GradedComplex, DEFAULT_CAP};
use crate::lincomb::LinComb;
use crate::surface_diagram::{
    resolve_state, Crossing, Diagram, Edge, EdgeEnd, End, FreeLoop, H1Class, Route, Smoothing,
    State,
};
use crate::{Decorated, Report, Result};

/// Where an edge or loop of a diagram with one crossing removed came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Origin {
    /// Starts with this edge of the original diagram.
    Edge(usize),
    Loop(usize),
}

/// A diagram with crossing `p` resolved and removed, plus the provenance
/// needed to carry circle decorations across.
#[derive(Debug, Clone)]
pub struct Deletion {
    pub diagram: Diagram,
    edge_origin: Vec<Origin>,
    loop_origin: Vec<Origin>,
}

impl Deletion {
    fn new(d: &Diagram, p: usize, smoothing: Smoothing) -> Deletion {
        let rank = d.surface().h1_rank();
        let at_p = |e: EdgeEnd| d.attachment(e).0 == p;
        let ports = &d.crossings()[p].ports;
        // The end joined to `e` through the smoothing at p.
        let across = |e: EdgeEnd| ports[smoothing.partner(d.attachment(e).1)];
        // Traverse from `start` (entering its edge) until an end off p, or
        // back to `start`. Returns the end reached, the class, visited edges.
        let walk = |start: EdgeEnd| {
            let mut class = H1Class::zero(rank);
            let mut edges = Vec::new();
            let mut cur = start;
            loop {
                let edge_class = &d.edges()[cur.edge].class;
                class = match cur.end {
                    End::Tail => &class + edge_class,
                    End::Head => &class + &-edge_class,
                };
                edges.push(cur.edge);
                let far = cur.opposite();
                if !at_p(far) {
                    return (far, class, edges, false);
                }
                cur = across(far);
                if cur == start {
                    return (far, class, edges, true);
                }
            }
        };

        let mut used = vec![false; d.edges().len()];
        let mut edges = Vec::new();
        let mut edge_origin = Vec::new();
        let mut new_ports: Vec<[Option<EdgeEnd>; 4]> = vec![[None; 4]; d.crossing_count()];
        for start_index in 0..2 * d.edges().len() {
            let start = EdgeEnd::new(
                start_index / 2,
                if start_index % 2 == 0 {
                    End::Tail
                } else {
                    End::Head
                },
            );
            if used[start.edge] || at_p(start) {
                continue;
            }
            let (last, class, chain, _) = walk(start);
            for &e in &chain {
                used[e] = true;
            }
            let id = edges.len();
            edges.push(Edge {
                label: id as i64,
                class,
            });
            edge_origin.push(Origin::Edge(start.edge));
            let (x, port) = d.attachment(start);
            new_ports[x][port] = Some(EdgeEnd::new(id, End::Tail));
            let (x, port) = d.attachment(last);
            new_ports[x][port] = Some(EdgeEnd::new(id, End::Head));
        }

        let mut loops: Vec<FreeLoop> = d.loops().to_vec();
        let mut loop_origin: Vec<Origin> = (0..loops.len()).map(Origin::Loop).collect();
        let mut next_label = loops.iter().map(|l| l.label + 1).max().unwrap_or(0);
        for e in 0..d.edges().len() {
            if used[e] {
                continue;
            }
            let (_, class, chain, closed) = walk(EdgeEnd::new(e, End::Tail));
            debug_assert!(closed);
            for &k in &chain {
                used[k] = true;
            }
            loops.push(FreeLoop {
                label: next_label,
                class,
            });
            loop_origin.push(Origin::Edge(e));
            next_label += 1;
        }

        let crossings = d
            .crossings()
            .iter()
            .enumerate()
            .filter(|&(x, _)| x != p)
            .map(|(x, c)| Crossing {
                label: c.label,
                ports: new_ports[x].map(|e| e.expect("ports off the deleted crossing are rewired")),
            })
            .collect();
        let diagram = Diagram::new(*d.surface(), crossings, edges, loops)
            .expect("deleting a crossing keeps the diagram well formed");
        Deletion {
            diagram,
            edge_origin,
            loop_origin,
        }
    }

    /// For each circle of `state` here, the id of the same circle in the
    /// original diagram under `full_state`.
    fn circle_map(&self, original: &Diagram, state: &State, full_state: &State) -> Vec<usize> {
        let here = resolve_state(&self.diagram, state);
        let there = resolve_state(original, full_state);
        let via = |o: Origin| match o {
            Origin::Edge(e) => there.circle_of_end(EdgeEnd::new(e, End::Tail)),
            Origin::Loop(l) => there.circle_of_loop(l),
        };
        here.circles
            .iter()
            .map(|c| match &c.route {
                Route::Edges(r) => via(self.edge_origin[r[0].edge]),
                Route::Loop(l) => via(self.loop_origin[*l]),
            })
            .collect()
    }
}

/// A diagram with a chosen crossing, together with its two resolutions at
/// that crossing. Remaining crossings keep their relative order.
#[derive(Debug, Clone)]
pub struct SkeinTriple {
    pub p: usize,
    pub crossing: Diagram,
    /// Resolved negatively at `p`.
    pub negative: Deletion,
    /// Resolved positively at `p`.
    pub positive: Deletion,
}

impl SkeinTriple {
    pub fn new(d: &Diagram, p: usize) -> SkeinTriple {
        assert!(p < d.crossing_count(), "no crossing {p}");
        SkeinTriple {
            p,
            crossing: d.clone(),
            negative: Deletion::new(d, p, Smoothing::Negative),
            positive: Deletion::new(d, p, Smoothing::Positive),
        }
    }

    /// Re-inserts `p` smoothed negatively, with sign `(-1)^k` for `k` the
    /// negative smoothings of `g` before `p`.
    pub fn alpha<G: Decorated>(&self, g: &G) -> (i64, G) {
        let full = g.state().inserted(self.p, Smoothing::Negative);
        let map = self.negative.circle_map(&self.crossing, g.state(), &full);
        let marks = reindex(g.marks(), &map);
        let sign = if g.state().negatives_before(self.p).is_multiple_of(2) {
            1
        } else {
            -1
        };
        (sign, G::from_parts(full, marks))
    }

    /// Zero unless `p` is smoothed positively; then `p` is removed.
    pub fn beta<G: Decorated>(&self, g: &G) -> Option<G> {
        if g.state().at(self.p) == Smoothing::Negative {
            return None;
        }
        let reduced = g.state().without(self.p);
        let map = self
            .positive
            .circle_map(&self.crossing, &reduced, g.state());
        let marks = map.iter().map(|&k| g.marks()[k]).collect();
        Some(G::from_parts(reduced, marks))
    }
}

/// `out[map[k]] = marks[k]`
fn reindex<M: Copy>(marks: &[M], map: &[usize]) -> Vec<M> {
    let mut out: Vec<Option<M>> = vec![None; marks.len()];
    for (k, &m) in marks.iter().enumerate() {
        out[map[k]] = Some(m);
    }
    out.into_iter()
        .map(|m| m.expect("circle correspondence is a bijection"))
        .collect()
}

fn apply<G: Decorated>(sum: &LinComb<G>, f: impl Fn(&G) -> Option<(i64, G)>) -> LinComb<G> {
    let mut out = LinComb::zero();
    for (g, c) in sum.iter() {
        if let Some((sign, h)) = f(g) {
            out.add_term(h, sign * c);
        }
    }
    out
}

fn all_generators<G: Clone>(c: &GradedComplex<G>) -> Vec<G> {
    c.basis.values().flatten().cloned().collect()
}

/// Checks that `0 -> C(negative) -α-> C(crossing) -β-> C(positive) -> 0`
/// is a short exact sequence of chain maps, grading by grading.
pub fn verify_exactness<B>(t: &SkeinTriple) -> Result<Report>
where
    B: ChainBackend,
    B::Gen: Decorated,
{
    let mut report = Report::default();
    let c_neg = assemble::<B>(&t.negative.diagram, DEFAULT_CAP)?;
    let c_mid = assemble::<B>(&t.crossing, DEFAULT_CAP)?;
    let c_pos = assemble::<B>(&t.positive.diagram, DEFAULT_CAP)?;

    // α: injective on the basis, with the expected grading shift.
    let mut image = std::collections::BTreeSet::new();
    for (grade, gens) in &c_neg.basis {
        let target = grade.shifted(-1, -1);
        for g in gens {
            let (_, h) = t.alpha(g);
            let in_place = c_mid.basis.get(&target).is_some_and(|v| v.contains(&h));
            report.check(in_place, || {
                format!("alpha({g}) = {h} is not a generator at {target}")
            });
            report.check(image.insert(h.clone()), || {
                format!("alpha is not injective at {h}")
            });
        }
    }

    // ker β = im α, and β is onto the basis with the expected shift.
    let mut hit = std::collections::BTreeSet::new();
    for (grade, gens) in &c_mid.basis {
        let target = grade.shifted(-1, -1);
        let mut kernel = 0;
        for g in gens {
            match t.beta(g) {
                None => {
                    kernel += 1;
                    report.check(image.contains(g), || {
                        format!("{g} is in ker beta but not im alpha")
                    });
                }
                Some(h) => {
                    let in_place = c_pos.basis.get(&target).is_some_and(|v| v.contains(&h));
                    report.check(in_place, || {
                        format!("beta({g}) = {h} is not a generator at {target}")
                    });
                    report.check(hit.insert(h.clone()), || {
                        format!("beta identifies two generators at {h}")
                    });
                }
            }
        }
        let from_alpha = c_neg.rank(&grade.shifted(1, 1));
        report.check(kernel == from_alpha, || {
            format!("at {grade}: dim ker beta = {kernel}, dim im alpha = {from_alpha}")
        });
    }
    for g in all_generators(&c_pos) {
        report.check(hit.contains(&g), || format!("beta misses {g}"));
    }

    // Both maps commute with the differentials.
    for g in all_generators(&c_neg) {
        let (sign, h) = t.alpha(&g);
        let left = B::differential(&t.crossing, &h)?.scaled(sign);
        let right = apply(&B::differential(&t.negative.diagram, &g)?, |x| {
            Some(t.alpha(x))
        });
        report.check(left == right, || {
            format!("alpha does not commute with d at {g}")
        });
    }
    for g in all_generators(&c_mid) {
        let left = match t.beta(&g) {
            Some(h) => B::differential(&t.positive.diagram, &h)?,
            None => LinComb::zero(),
        };
        let right = apply(&B::differential(&t.crossing, &g)?, |x| {
            t.beta(x).map(|y| (1, y))
        });
        report.check(left == right, || {
            format!("beta does not commute with d at {g}")
        });
    }
    Ok(report)
}
