#![allow(dead_code)]

use std::collections::BTreeSet;
use std::path::PathBuf;

use ibh_core::surface_diagram::{parse_diagram, Diagram, EdgeEnd, End, H1Class, SurfaceKind};

pub fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

pub fn load(name: &str) -> Diagram {
    let path = corpus_dir().join(format!("{name}.dg"));
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    parse_diagram(&text).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

/// Every corpus diagram, sorted by name.
pub fn corpus() -> Vec<(String, Diagram)> {
    let mut names: Vec<String> = std::fs::read_dir(corpus_dir())
        .expect("corpus directory")
        .filter_map(|e| {
            let path = e.ok()?.path();
            (path.extension()? == "dg").then(|| path.file_stem()?.to_str().map(String::from))?
        })
        .collect();
    names.sort();
    names.into_iter().map(|n| (n.clone(), load(&n))).collect()
}

pub const R2_PAIRS: [(&str, &str); 4] = [
    ("unlink2", "unlink2_r2"),
    ("annulus_two_loops", "annulus_two_loops_r2"),
    ("annulus_loop_unknot", "annulus_loop_unknot_r2"),
    ("torus_grid", "torus_r2_b"),
];

pub const R3_PAIRS: [(&str, &str); 3] = [
    ("r3_a", "r3_b"),
    ("annulus_r3_a", "annulus_r3_b"),
    ("torus_r3_a", "torus_r3_b"),
];

/// Faces of the crossing graph, per connected component: `(V, E, F, face
/// classes)`. Faces follow an edge then turn to the next port clockwise.
pub fn faces(d: &Diagram) -> Vec<(usize, usize, usize, Vec<H1Class>)> {
    let n = d.crossing_count();
    let rank = d.surface().h1_rank();
    // Union crossings joined by an edge.
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut Vec<usize>, x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    for e in 0..d.edges().len() {
        let a = d.attachment(EdgeEnd::new(e, End::Tail)).0;
        let b = d.attachment(EdgeEnd::new(e, End::Head)).0;
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        parent[ra] = rb;
    }
    let roots: BTreeSet<usize> = (0..n).map(|x| find(&mut parent, x)).collect();

    let mut seen = vec![false; 2 * d.edges().len()];
    let mut out = Vec::new();
    for root in roots {
        let in_component = |x: usize, p: &mut Vec<usize>| find(p, x) == root;
        let vertices = (0..n).filter(|&x| in_component(x, &mut parent)).count();
        let edges = (0..d.edges().len())
            .filter(|&e| in_component(d.attachment(EdgeEnd::new(e, End::Tail)).0, &mut parent))
            .count();
        let mut classes = Vec::new();
        for start in 0..2 * d.edges().len() {
            let start = EdgeEnd::new(
                start / 2,
                if start % 2 == 0 { End::Tail } else { End::Head },
            );
            if seen[start.index()] || !in_component(d.attachment(start).0, &mut parent) {
                continue;
            }
            let mut class = H1Class::zero(rank);
            let mut dart = start;
            loop {
                seen[dart.index()] = true;
                let c = &d.edges()[dart.edge].class;
                class = match dart.end {
                    End::Tail => &class + c,
                    End::Head => &class + &-c,
                };
                let (x, port) = d.attachment(dart.opposite());
                dart = d.crossings()[x].ports[(port + 3) % 4];
                if dart == start {
                    break;
                }
            }
            classes.push(class);
        }
        out.push((vertices, edges, classes.len(), classes));
    }
    out
}

pub fn expected_euler(kind: SurfaceKind) -> i64 {
    match kind {
        SurfaceKind::Disk | SurfaceKind::Annulus => 2,
        SurfaceKind::Torus => 0,
    }
}

/// Invariant factors from gcds of `k x k` minors; exponential, tiny inputs only.
pub fn determinantal_divisors(m: &[Vec<i64>]) -> Vec<i64> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut out = Vec::new();
    let mut previous = 1i128;
    for k in 1..=rows.min(cols) {
        let mut g = 0i128;
        for rs in subsets(rows, k) {
            for cs in subsets(cols, k) {
                let minor: Vec<Vec<i128>> = rs
                    .iter()
                    .map(|&r| cs.iter().map(|&c| m[r][c] as i128).collect())
                    .collect();
                g = gcd(g, det(minor));
            }
        }
        if g == 0 {
            break;
        }
        out.push((g / previous) as i64);
        previous = g;
    }
    out
}

pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut with_last: Vec<Vec<usize>> = subsets(n - 1, k - 1);
    for s in &mut with_last {
        s.push(n - 1);
    }
    let mut out = subsets(n - 1, k);
    out.extend(with_last);
    out
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Fraction-free (Bareiss) determinant.
pub fn det(mut a: Vec<Vec<i128>>) -> i128 {
    let n = a.len();
    if n == 0 {
        return 1;
    }
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

/// Rank over the rationals by fraction-free elimination.
pub fn rational_rank(m: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<i128>> = m
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..a.len()).find(|&r| a[r][c] != 0) else {
            continue;
        };
        a.swap(rank, p);
        for r in 0..a.len() {
            if r != rank && a[r][c] != 0 {
                let (f, g) = (a[r][c], a[rank][c]);
                let pivot = a[rank].clone();
                for (x, y) in a[r].iter_mut().zip(&pivot) {
                    *x = *x * g - y * f;
                }
                let common = a[r].iter().fold(0, |acc, &x| gcd(acc, x));
                if common > 1 {
                    a[r].iter_mut().for_each(|x| *x /= common);
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Rank over the field with two elements.
pub fn rank_mod_2(m: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<u8>> = m
        .iter()
        .map(|r| r.iter().map(|&x| x.rem_euclid(2) as u8).collect())
        .collect();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..a.len()).find(|&r| a[r][c] == 1) else {
            continue;
        };
        a.swap(rank, p);
        for r in 0..a.len() {
            if r != rank && a[r][c] == 1 {
                let pivot = a[rank].clone();
                for (x, y) in a[r].iter_mut().zip(&pivot) {
                    *x ^= y;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Full differential of a disk diagram built from scratch: states as bit
/// masks (bit set = negative smoothing), circles by union-find over edge ends,
/// and the usual merge/split rules with the unit as the lower mark.
pub struct DiskOracle {
    /// `(i, j)` of each generator.
    pub gradings: Vec<(i64, i64)>,
    /// `matrix[target][source]`.
    pub matrix: Vec<Vec<i64>>,
}

const POSITIVE_PARTNER: [usize; 4] = [1, 0, 3, 2];
const NEGATIVE_PARTNER: [usize; 4] = [3, 2, 1, 0];

fn oracle_circles(d: &Diagram, mask: usize) -> Vec<usize> {
    let ends = 2 * d.edges().len();
    let mut parent: Vec<usize> = (0..ends).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut x = x;
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let union = |p: &mut Vec<usize>, a: usize, b: usize| {
        let (ra, rb) = (find(p, a), find(p, b));
        p[ra] = rb;
    };
    for e in 0..d.edges().len() {
        union(&mut parent, 2 * e, 2 * e + 1);
    }
    for (x, c) in d.crossings().iter().enumerate() {
        let partner = if mask >> x & 1 == 1 {
            NEGATIVE_PARTNER
        } else {
            POSITIVE_PARTNER
        };
        for (port, &other) in c.ports.iter().zip(&partner) {
            union(&mut parent, port.index(), c.ports[other].index());
        }
    }
    // Relabel roots densely by first occurrence; free loops follow.
    let mut label = vec![usize::MAX; ends];
    let mut next = 0;
    let mut out = Vec::with_capacity(ends);
    for x in 0..ends {
        let r = find(&mut parent, x);
        if label[r] == usize::MAX {
            label[r] = next;
            next += 1;
        }
        out.push(label[r]);
    }
    out
}

impl DiskOracle {
    pub fn build(d: &Diagram) -> DiskOracle {
        let n = d.crossing_count();
        let loops = d.loops().len();
        // For each state: circle of each edge end, circle count.
        let states: Vec<(Vec<usize>, usize)> = (0..1usize << n)
            .map(|mask| {
                let c = oracle_circles(d, mask);
                let count = c.iter().max().map_or(0, |m| m + 1) + loops;
                (c, count)
            })
            .collect();
        // Generator = (mask, marks as bit set: bit set = upper mark).
        let mut index = std::collections::HashMap::new();
        let mut gradings = Vec::new();
        for (mask, (_, count)) in states.iter().enumerate() {
            let negatives = mask.count_ones() as i64;
            let i = n as i64 - 2 * negatives;
            for marks in 0..1usize << count {
                let upper = marks.count_ones() as i64;
                let j = i + 2 * (upper - (*count as i64 - upper));
                index.insert((mask, marks), gradings.len());
                gradings.push((i, j));
            }
        }
        let size = gradings.len();
        let mut matrix = vec![vec![0i64; size]; size];
        for (mask, (circles, count)) in states.iter().enumerate() {
            for marks in 0..1usize << count {
                let source = index[&(mask, marks)];
                for p in (0..n).filter(|&p| mask >> p & 1 == 0) {
                    let target_mask = mask | 1 << p;
                    let negatives_after = (target_mask >> (p + 1)).count_ones();
                    let sign = if negatives_after % 2 == 0 { 1 } else { -1 };
                    let (t_circles, t_count) = &states[target_mask];
                    for (t_marks, coefficient) in
                        transfer(circles, *count, marks, t_circles, *t_count, loops)
                    {
                        matrix[index[&(target_mask, t_marks)]][source] += sign * coefficient;
                    }
                }
            }
        }
        DiskOracle { gradings, matrix }
    }
}

/// Image of one marking under a single saddle. Circles untouched by the
/// saddle keep their mark; loops sit after the edge circles on both sides.
fn transfer(
    before: &[usize],
    before_count: usize,
    marks: usize,
    after: &[usize],
    after_count: usize,
    loops: usize,
) -> Vec<(usize, i64)> {
    let edge_before = before_count - loops;
    let edge_after = after_count - loops;
    // Map each before circle to its after circle; a split circle maps to two.
    let mut image: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); edge_before];
    for (b, a) in before.iter().zip(after) {
        image[*b].insert(*a);
    }
    let mut preimage: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); edge_after];
    for (b, a) in before.iter().zip(after) {
        preimage[*a].insert(*b);
    }
    let upper = |m: usize, c: usize| m >> c & 1 == 1;
    let mut base = 0usize;
    for l in 0..loops {
        if upper(marks, edge_before + l) {
            base |= 1 << (edge_after + l);
        }
    }
    for (b, targets) in image.iter().enumerate() {
        if targets.len() == 1 {
            let a = *targets.iter().next().unwrap();
            if preimage[a].len() == 1 && upper(marks, b) {
                base |= 1 << a;
            }
        }
    }
    if edge_after < edge_before {
        let a = (0..edge_after).find(|&a| preimage[a].len() == 2).unwrap();
        let ups = preimage[a].iter().filter(|&&b| upper(marks, b)).count();
        match ups {
            0 => vec![(base, 1)],
            1 => vec![(base | 1 << a, 1)],
            _ => vec![],
        }
    } else {
        let b = (0..edge_before).find(|&b| image[b].len() == 2).unwrap();
        let pair: Vec<usize> = image[b].iter().copied().collect();
        if upper(marks, b) {
            vec![(base | 1 << pair[0] | 1 << pair[1], 1)]
        } else {
            vec![(base | 1 << pair[0], 1), (base | 1 << pair[1], 1)]
        }
    }
}

/// `(i, j) -> (free rank, torsion divisors)` of an oracle complex, nonzero
/// groups only, via determinantal divisors of each graded block.
pub fn oracle_homology(
    o: &DiskOracle,
) -> std::collections::BTreeMap<(i64, i64), (usize, Vec<i64>)> {
    let mut out = std::collections::BTreeMap::new();
    let grades: BTreeSet<(i64, i64)> = o.gradings.iter().copied().collect();
    let at = |g: (i64, i64)| -> Vec<usize> {
        (0..o.gradings.len())
            .filter(|&k| o.gradings[k] == g)
            .collect()
    };
    let block = |rows: &[usize], cols: &[usize]| -> Vec<Vec<i64>> {
        rows.iter()
            .map(|&r| cols.iter().map(|&c| o.matrix[r][c]).collect())
            .collect()
    };
    for g in grades {
        let here = at(g);
        let below = at((g.0 - 2, g.1));
        let above = at((g.0 + 2, g.1));
        let outgoing = block(&below, &here);
        let incoming = block(&here, &above);
        let out_rank = if below.is_empty() {
            0
        } else {
            rational_rank(&outgoing)
        };
        let divisors = if above.is_empty() {
            vec![]
        } else {
            determinantal_divisors(&incoming)
        };
        let free = here.len() - out_rank - divisors.len();
        let torsion: Vec<i64> = divisors.into_iter().filter(|&x| x > 1).collect();
        if free > 0 || !torsion.is_empty() {
            out.insert(g, (free, torsion));
        }
    }
    out
}
