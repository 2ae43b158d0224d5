//! One pass/fail line per acceptance criterion; exits nonzero if any fails.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{corpus, load, R2_PAIRS, R3_PAIRS};
use ibh_core::foam_complex::{verify_confluence, verify_rewrite_gradings};
use ibh_core::grading::{Grading, SGrading};
use ibh_core::integer_homology::{
    assemble, homology_of, verify_d_squared, verify_degree, Aps, Backend, Foam, HomologyTable,
    DEFAULT_CAP,
};
use ibh_core::phi_correspondence::{
    run_table_case, table_cases, verify_chain_map, verify_exactness, SkeinTriple,
};
use ibh_core::surface_diagram::{
    enumerate_states, flip, H1Class, Smoothing, SurfaceKind, TransitionKind,
};
use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::SeedableRng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn d_squared_suite() -> Outcome {
    let start = Instant::now();
    let all = corpus();
    ensure(all.len() >= 12, || {
        format!("only {} corpus diagrams", all.len())
    })?;
    let kinds: BTreeSet<SurfaceKind> = all.iter().map(|(_, d)| d.surface().kind).collect();
    ensure(kinds.len() == 3, || format!("corpus covers {kinds:?}"))?;
    let sizes: BTreeSet<usize> = all.iter().map(|(_, d)| d.crossing_count()).collect();
    ensure(
        sizes.first() == Some(&0) && sizes.last() == Some(&6),
        || format!("crossing counts {sizes:?}"),
    )?;
    let selfglue = all.iter().any(|(_, d)| {
        d.surface().kind == SurfaceKind::Torus
            && enumerate_states(d).iter().any(|s| {
                (0..d.crossing_count()).any(|p| {
                    s.at(p) == Smoothing::Positive
                        && matches!(flip(d, s, p).kind, TransitionKind::SelfGlue { .. })
                })
            })
    });
    ensure(selfglue, || {
        "no torus diagram with a self-gluing saddle".into()
    })?;
    let mut generators = 0;
    for (name, d) in &all {
        let aps = assemble::<Aps>(d, DEFAULT_CAP).map_err(|e| format!("{name}: {e}"))?;
        let foam = assemble::<Foam>(d, DEFAULT_CAP).map_err(|e| format!("{name}: {e}"))?;
        for (label, failures) in [
            ("aps", verify_d_squared(&aps)),
            ("foam", verify_d_squared(&foam)),
        ] {
            ensure(failures.is_empty(), || {
                format!("{name} {label}: d^2 of {} nonzero", failures[0].generator)
            })?;
        }
        generators += aps.generator_count() + foam.generator_count();
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(10), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!(
        "{} diagrams, {generators} generators, {elapsed:.2?}",
        all.len()
    ))
}

fn grading_degree() -> Outcome {
    let mut checked = 0;
    for (name, d) in corpus() {
        for r in [
            verify_degree::<Aps>(&d).map_err(|e| e.to_string())?,
            verify_degree::<Foam>(&d).map_err(|e| e.to_string())?,
            verify_rewrite_gradings(&d),
        ] {
            ensure(r.passed(), || format!("{name}: {}", r.failures[0]))?;
            checked += r.checked;
        }
    }
    Ok(format!("{checked} terms"))
}

fn table_conformance() -> Outcome {
    let cases = table_cases();
    ensure(cases.len() == 21, || format!("{} rows", cases.len()))?;
    for case in &cases {
        let out = run_table_case(case).map_err(|e| e.to_string())?;
        ensure(out.passed(), || {
            format!("row {}: aps {} foam {}", out.row, out.aps, out.foam)
        })?;
    }
    Ok("21 rows".into())
}

fn chain_map() -> Outcome {
    let mut checked = 0;
    for (name, d) in corpus() {
        let r = verify_chain_map(&d).map_err(|e| format!("{name}: {e}"))?;
        ensure(r.passed(), || format!("{name}: {}", r.failures[0]))?;
        checked += r.checked;
    }
    Ok(format!("{checked} identities"))
}

fn homology_equality() -> Outcome {
    let mut gradings = 0;
    for (name, d) in corpus() {
        let aps = homology_of(&d, Backend::Aps, DEFAULT_CAP).map_err(|e| format!("{name}: {e}"))?;
        let foam =
            homology_of(&d, Backend::Foam, DEFAULT_CAP).map_err(|e| format!("{name}: {e}"))?;
        ensure(aps == foam, || format!("{name}: tables differ"))?;
        gradings += aps.len();
    }
    Ok(format!("{gradings} nonzero groups"))
}

fn confluence() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0);
    let mut checked = 0;
    for (name, d) in corpus() {
        let r = verify_confluence(&d, 100, &mut rng).map_err(|e| format!("{name}: {e}"))?;
        ensure(r.passed(), || format!("{name}: {}", r.failures[0]))?;
        checked += r.checked;
    }
    Ok(format!("{checked} randomized normalizations"))
}

fn exactness() -> Outcome {
    let mut checked = 0;
    for name in ["hopf_pos", "kink"] {
        let d = load(name);
        for p in 0..d.crossing_count() {
            let t = SkeinTriple::new(&d, p);
            for r in [
                verify_exactness::<Aps>(&t).map_err(|e| e.to_string())?,
                verify_exactness::<Foam>(&t).map_err(|e| e.to_string())?,
            ] {
                ensure(r.passed(), || format!("{name} at {p}: {}", r.failures[0]))?;
                checked += r.checked;
            }
        }
    }
    Ok(format!("{checked} checks"))
}

fn table(name: &str) -> Result<HomologyTable, String> {
    homology_of(&load(name), Backend::Foam, DEFAULT_CAP).map_err(|e| format!("{name}: {e}"))
}

fn shifted(t: &HomologyTable, di: i64, dj: i64) -> HomologyTable {
    t.iter()
        .map(|(g, h)| (g.shifted(di, dj), h.clone()))
        .collect()
}

fn invariance() -> Outcome {
    for (a, b) in R2_PAIRS.iter().chain(&R3_PAIRS) {
        ensure(table(a)? == table(b)?, || format!("{a} and {b} differ"))?;
    }
    ensure(table("kink")? == shifted(&table("unknot")?, 1, 3), || {
        "kink is not unknot shifted by (1, 3)".into()
    })?;
    ensure(
        table("annulus_curl")? == shifted(&table("annulus_loop")?, -1, -3),
        || "annulus_curl is not annulus_loop shifted by (-1, -3)".into(),
    )?;
    Ok(format!(
        "{} move pairs, 2 kinks",
        R2_PAIRS.len() + R3_PAIRS.len()
    ))
}

fn timed(name: &str, limit: Duration) -> Result<HomologyTable, String> {
    let start = Instant::now();
    let t = table(name)?;
    let elapsed = start.elapsed();
    ensure(elapsed < limit, || format!("{name} took {elapsed:?}"))?;
    Ok(t)
}

fn desk_computations() -> Outcome {
    let second = Duration::from_secs(1);
    let z_at = |gradings: Vec<Grading>| -> HomologyTable {
        gradings
            .into_iter()
            .map(|g| {
                (
                    g,
                    ibh_core::integer_homology::HomologyGroup {
                        free_rank: 1,
                        torsion: vec![],
                    },
                )
            })
            .collect()
    };

    let unknot = timed("unknot", second)?;
    let expected = z_at(vec![
        Grading::new(0, 2, SGrading::zero()),
        Grading::new(0, -2, SGrading::zero()),
    ]);
    ensure(unknot == expected, || format!("unknot: {unknot:?}"))?;

    let loop_table = timed("annulus_loop", second)?;
    let gamma = H1Class(vec![1]);
    let s = |k| {
        let mut s = SGrading::zero();
        s.add(&gamma, k);
        s
    };
    let expected = z_at(vec![Grading::new(0, 0, s(1)), Grading::new(0, 0, s(-1))]);
    ensure(loop_table == expected, || {
        format!("annulus loop: {loop_table:?}")
    })?;

    let hopf = timed("hopf_pos", second)?;
    let free: usize = hopf.values().map(|h| h.free_rank).sum();
    let torsion: Vec<BigInt> = hopf.values().flat_map(|h| h.torsion.clone()).collect();
    ensure(free == 4 && torsion == vec![BigInt::from(2)], || {
        let shown: Vec<String> = torsion.iter().map(|t| format!("Z/{t}")).collect();
        format!(
            "positive Hopf link: expected free rank 4 with one Z/2, got free rank {free} with torsion [{}]",
            shown.join(", ")
        )
    })?;
    Ok("unknot, annulus loop, positive Hopf link".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("d^2 = 0 on the corpus, both backends", d_squared_suite),
        (
            "differentials and rewrites respect gradings",
            grading_degree,
        ),
        ("21-row transition table", table_conformance),
        ("phi is a chain map", chain_map),
        ("backends give equal homology", homology_equality),
        ("normalization is confluent", confluence),
        ("skein sequences are exact", exactness),
        ("Reidemeister invariance", invariance),
        ("desk computations", desk_computations),
    ];
    let mut failed = 0;
    for (k, (title, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {}: PASS  {title} ({detail})", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {title}: {why}", k + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
