//! Graded integer chain complexes built from either generator model, and
//! their homology through Smith normal form.

mod snf;

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::aps_complex::{aps_differential, aps_grade_with, enhanced_states, EnhancedState};
use crate::foam_complex::{
    components_of, foam_differential, foam_generators, raw_grade, FoamGenerator,
};
use crate::grading::Grading;
use crate::lincomb::LinComb;
use crate::surface_diagram::{enumerate_states, resolve_state, Diagram};
use crate::{Error, Report, Result};

pub use snf::{smith_normal_form, IntMatrix, SmithForm};

pub const DEFAULT_CAP: usize = 16;

/// One of the two generator models and its differential.
pub trait ChainBackend {
    type Gen: Ord + Clone + fmt::Display;

    const NAME: &'static str;

    /// Generators with their gradings, in state order then decoration order.
    fn generators(d: &Diagram) -> Vec<(Self::Gen, Grading)>;

    fn differential(d: &Diagram, g: &Self::Gen) -> Result<LinComb<Self::Gen>>;
}

/// Enhanced Kauffman states.
pub struct Aps;

/// Normalized dotted foams.
pub struct Foam;

impl ChainBackend for Aps {
    type Gen = EnhancedState;

    const NAME: &'static str = "aps";

    fn generators(d: &Diagram) -> Vec<(EnhancedState, Grading)> {
        let mut out = Vec::new();
        for s in enumerate_states(d) {
            let circles = resolve_state(d, &s);
            for e in enhanced_states(&s, &circles) {
                let g = aps_grade_with(&circles, &e);
                out.push((e, g));
            }
        }
        out
    }

    fn differential(d: &Diagram, g: &EnhancedState) -> Result<LinComb<EnhancedState>> {
        Ok(aps_differential(d, g))
    }
}

impl ChainBackend for Foam {
    type Gen = FoamGenerator;

    const NAME: &'static str = "foam";

    fn generators(d: &Diagram) -> Vec<(FoamGenerator, Grading)> {
        let mut out = Vec::new();
        for s in enumerate_states(d) {
            let circles = resolve_state(d, &s);
            for g in foam_generators(&s, &circles) {
                let grade = raw_grade(&s, &components_of(&circles, &g));
                out.push((g, grade));
            }
        }
        out
    }

    fn differential(d: &Diagram, g: &FoamGenerator) -> Result<LinComb<FoamGenerator>> {
        foam_differential(d, g)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Backend {
    Aps,
    Foam,
}

impl Backend {
    pub fn name(self) -> &'static str {
        match self {
            Backend::Aps => Aps::NAME,
            Backend::Foam => Foam::NAME,
        }
    }
}

/// Chain groups split by grading; `boundary[g]` maps `C_g` to `C_{g.below()}`.
#[derive(Debug, Clone)]
pub struct GradedComplex<G> {
    pub basis: BTreeMap<Grading, Vec<G>>,
    pub boundary: BTreeMap<Grading, IntMatrix>,
}

pub fn check_cap(d: &Diagram, cap: usize) -> Result<()> {
    if d.crossing_count() > cap {
        return Err(Error::CapExceeded {
            crossings: d.crossing_count(),
            cap,
        });
    }
    Ok(())
}

pub fn assemble<B: ChainBackend>(d: &Diagram, cap: usize) -> Result<GradedComplex<B::Gen>> {
    check_cap(d, cap)?;
    let mut basis: BTreeMap<Grading, Vec<B::Gen>> = BTreeMap::new();
    for (g, grade) in B::generators(d) {
        basis.entry(grade).or_default().push(g);
    }
    let index: HashMap<&Grading, BTreeMap<&B::Gen, usize>> = basis
        .iter()
        .map(|(grade, gens)| {
            (
                grade,
                gens.iter().enumerate().map(|(k, g)| (g, k)).collect(),
            )
        })
        .collect();

    let mut boundary = BTreeMap::new();
    for (grade, gens) in &basis {
        let target = grade.below();
        let rows = basis.get(&target).map_or(0, Vec::len);
        let mut m = IntMatrix::zeros(rows, gens.len());
        for (col, g) in gens.iter().enumerate() {
            for (h, c) in B::differential(d, g)?.iter() {
                let row = index
                    .get(&target)
                    .and_then(|ix| ix.get(h))
                    .ok_or_else(|| Error::Degree(format!("d({g}) at {grade} contains {h}")))?;
                m.set(*row, col, BigInt::from(c));
            }
        }
        boundary.insert(grade.clone(), m);
    }
    Ok(GradedComplex { basis, boundary })
}

impl<G: Clone> GradedComplex<G> {
    pub fn rank(&self, grade: &Grading) -> usize {
        self.basis.get(grade).map_or(0, Vec::len)
    }

    pub fn generator_count(&self) -> usize {
        self.basis.values().map(Vec::len).sum()
    }

    /// The same complex with every basis list permuted at random.
    pub fn shuffled(&self, rng: &mut impl Rng) -> GradedComplex<G> {
        let orders: BTreeMap<&Grading, Vec<usize>> = self
            .basis
            .iter()
            .map(|(grade, gens)| {
                let mut order: Vec<usize> = (0..gens.len()).collect();
                order.shuffle(rng);
                (grade, order)
            })
            .collect();
        let basis = self
            .basis
            .iter()
            .map(|(grade, gens)| {
                (
                    grade.clone(),
                    orders[grade].iter().map(|&k| gens[k].clone()).collect(),
                )
            })
            .collect();
        let boundary = self
            .boundary
            .iter()
            .map(|(grade, m)| {
                let rows = orders.get(&grade.below()).cloned().unwrap_or_default();
                (grade.clone(), m.permuted(&rows, &orders[grade]))
            })
            .collect();
        GradedComplex { basis, boundary }
    }
}

/// Every differential term of every generator sits at `(i - 2, j, s)`.
pub fn verify_degree<B: ChainBackend>(d: &Diagram) -> Result<Report> {
    let gens = B::generators(d);
    let grades: BTreeMap<&B::Gen, &Grading> = gens.iter().map(|(g, grade)| (g, grade)).collect();
    let mut report = Report::default();
    for (g, grade) in &gens {
        for (h, _) in B::differential(d, g)?.iter() {
            let target = grades.get(h).copied();
            report.check(target == Some(&grade.below()), || {
                format!("{g} at {grade} has term {h} at {target:?}")
            });
        }
    }
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DSquaredFailure {
    pub grading: Grading,
    pub generator: String,
}

/// Every column whose image under `d ∘ d` is nonzero.
pub fn verify_d_squared<G: fmt::Display>(c: &GradedComplex<G>) -> Vec<DSquaredFailure> {
    let mut failures = Vec::new();
    for (grade, d_out) in &c.boundary {
        let Some(d_next) = c.boundary.get(&grade.below()) else {
            continue;
        };
        let product = d_next.mul(d_out);
        for col in 0..product.cols() {
            if product.column(col).iter().any(|x| x != &BigInt::from(0)) {
                failures.push(DSquaredFailure {
                    grading: grade.clone(),
                    generator: c.basis[grade][col].to_string(),
                });
            }
        }
    }
    failures
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyGroup {
    pub free_rank: usize,
    /// Invariant factors greater than one, each dividing the next.
    pub torsion: Vec<BigInt>,
}

impl HomologyGroup {
    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

pub type HomologyTable = BTreeMap<Grading, HomologyGroup>;

/// Homology at every grading carrying generators, zero groups included.
pub fn homology<G: fmt::Display>(c: &GradedComplex<G>) -> Result<HomologyTable> {
    if let Some(first) = verify_d_squared(c).into_iter().next() {
        return Err(Error::DSquaredNonzero {
            grading: first.grading.to_string(),
            generator: first.generator,
        });
    }
    let forms: BTreeMap<&Grading, SmithForm> = c
        .boundary
        .iter()
        .map(|(g, m)| (g, smith_normal_form(m)))
        .collect();
    let mut out = BTreeMap::new();
    for (grade, gens) in &c.basis {
        let rank_out = forms.get(grade).map_or(0, SmithForm::rank);
        let incoming = forms.get(&grade.above());
        let rank_in = incoming.map_or(0, SmithForm::rank);
        let torsion = incoming
            .map(|f| f.divisors.iter().filter(|d| !d.is_one()).cloned().collect())
            .unwrap_or_default();
        out.insert(
            grade.clone(),
            HomologyGroup {
                free_rank: gens.len() - rank_out - rank_in,
                torsion,
            },
        );
    }
    Ok(out)
}

/// Assembles and computes homology, keeping only nonzero groups.
pub fn homology_of(d: &Diagram, backend: Backend, cap: usize) -> Result<HomologyTable> {
    let table = match backend {
        Backend::Aps => homology(&assemble::<Aps>(d, cap)?)?,
        Backend::Foam => homology(&assemble::<Foam>(d, cap)?)?,
    };
    Ok(table.into_iter().filter(|(_, h)| !h.is_zero()).collect())
}
