use super::{Crossing, Diagram, Edge, EdgeEnd, End, FreeLoop, H1Class, Surface, SurfaceKind};

/// Builds genuine diagrams from braid closures.
///
/// Strands run left to right in rows `0..strands` (bottom to top) and close
/// up around the core of the annulus, or around the `(1,0)` direction of the
/// torus. Letter `k > 0` is a positive crossing between rows `k-1` and `k`,
/// `-k` its inverse. On the torus an optional transverse `(0,1)` loop crosses
/// every row once, over the strands, after the last letter.
#[derive(Debug, Clone)]
pub struct BraidClosure {
    strands: usize,
    word: Vec<i32>,
    transverse: bool,
}

impl BraidClosure {
    pub fn new(strands: usize, word: Vec<i32>) -> Self {
        for &letter in &word {
            assert!(
                letter != 0 && (letter.unsigned_abs() as usize) < strands,
                "letter {letter} does not fit {strands} strands"
            );
        }
        BraidClosure {
            strands,
            word,
            transverse: false,
        }
    }

    pub fn with_transverse(mut self) -> Self {
        self.transverse = true;
        self
    }

    pub fn build(&self, kind: SurfaceKind) -> Diagram {
        assert!(
            !self.transverse || kind == SurfaceKind::Torus,
            "a transverse loop needs the torus"
        );
        let surface = Surface::new(kind);
        let row_class = match kind {
            SurfaceKind::Disk => H1Class(vec![]),
            SurfaceKind::Annulus => H1Class(vec![1]),
            SurfaceKind::Torus => H1Class(vec![1, 0]),
        };
        let rank = surface.h1_rank();

        // (crossing, port where the row enters, port where it leaves), per row.
        let mut rows: Vec<Vec<(usize, usize, usize)>> = vec![Vec::new(); self.strands];
        let mut n_crossings = 0;
        for &letter in &self.word {
            let low = letter.unsigned_abs() as usize - 1;
            // Port order is counterclockwise from the under-strand:
            // positive [LB, RB, RT, LT], negative [RB, RT, LT, LB].
            let (lb, rb, rt, lt) = if letter > 0 {
                (0, 1, 2, 3)
            } else {
                (3, 0, 1, 2)
            };
            rows[low].push((n_crossings, lb, rb));
            rows[low + 1].push((n_crossings, lt, rt));
            n_crossings += 1;
        }
        let mut column = Vec::new();
        if self.transverse {
            // Column over the row: ports [L, B, R, T].
            for row in rows.iter_mut() {
                row.push((n_crossings, 0, 2));
                column.push((n_crossings, 1, 3));
                n_crossings += 1;
            }
        }

        let mut ports: Vec<[Option<EdgeEnd>; 4]> = vec![[None; 4]; n_crossings];
        let mut edges = Vec::new();
        let mut loops = Vec::new();
        let mut chain =
            |events: &[(usize, usize, usize)], wrap: H1Class, loops: &mut Vec<FreeLoop>| {
                if events.is_empty() {
                    loops.push(FreeLoop {
                        label: loops.len() as i64,
                        class: wrap,
                    });
                    return;
                }
                for k in 0..events.len() {
                    let (from, _, out) = events[k];
                    let (to, inp, _) = events[(k + 1) % events.len()];
                    let id = edges.len();
                    let class = if k + 1 == events.len() {
                        wrap.clone()
                    } else {
                        H1Class::zero(rank)
                    };
                    edges.push(Edge {
                        label: id as i64,
                        class,
                    });
                    ports[from][out] = Some(EdgeEnd::new(id, End::Tail));
                    ports[to][inp] = Some(EdgeEnd::new(id, End::Head));
                }
            };
        for row in &rows {
            chain(row, row_class.clone(), &mut loops);
        }
        if self.transverse {
            chain(&column, H1Class(vec![0, 1]), &mut loops);
        }

        let crossings = ports
            .into_iter()
            .enumerate()
            .map(|(x, p)| Crossing {
                label: x as i64,
                ports: p.map(|e| e.expect("every port is wired")),
            })
            .collect();
        Diagram::new(surface, crossings, edges, loops).expect("braid closures are well formed")
    }
}
