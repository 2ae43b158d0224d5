use std::fmt;
use std::path::{Path, PathBuf};

use ibh_core::foam_complex::{verify_blocked_symmetry, verify_confluence, verify_rewrite_gradings};
use ibh_core::grading::Grading;
use ibh_core::integer_homology::{
    assemble, homology_of, verify_d_squared, verify_degree, Aps, Backend, ChainBackend, Foam,
    HomologyTable,
};
use ibh_core::phi_correspondence::{
    run_table_case, table_cases, verify_chain_map, verify_exactness, verify_grading_preservation,
    SkeinTriple,
};
use ibh_core::surface_diagram::{parse_diagram, Diagram};
use ibh_core::{Error, Report};
use rand::rngs::StdRng;
use rand::SeedableRng;

use crate::output::{table, torsion};
use crate::{BackendArg, Cli, Command, Format};

pub struct Outcome {
    pub text: String,
    pub code: u8,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, code: 0 }
    }
}

#[derive(Debug)]
pub enum Failure {
    Core {
        path: Option<PathBuf>,
        error: Error,
    },
    Io {
        path: PathBuf,
        error: std::io::Error,
    },
    Usage(String),
    Internal(String),
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Failure::Core {
                error: Error::Parse { .. } | Error::Invalid(_),
                ..
            } => 1,
            Failure::Core {
                error: Error::CapExceeded { .. },
                ..
            } => 2,
            Failure::Core { .. } => 3,
            Failure::Io { .. } | Failure::Usage(_) => 1,
            Failure::Internal(_) => 3,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Core {
                path: Some(p),
                error,
            } => write!(f, "{}: {error}", p.display()),
            Failure::Core { path: None, error } => write!(f, "{error}"),
            Failure::Io { path, error } => write!(f, "{}: {error}", path.display()),
            Failure::Usage(msg) | Failure::Internal(msg) => f.write_str(msg),
        }
    }
}

impl From<Error> for Failure {
    fn from(error: Error) -> Self {
        Failure::Core { path: None, error }
    }
}

type Result<T> = std::result::Result<T, Failure>;

fn load(path: &Path) -> Result<Diagram> {
    let text = std::fs::read_to_string(path).map_err(|error| Failure::Io {
        path: path.to_owned(),
        error,
    })?;
    parse_diagram(&text).map_err(|error| Failure::Core {
        path: Some(path.to_owned()),
        error,
    })
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Homology { file } => homology(cli, file),
        Command::ChainGroups { file } => chain_groups(cli, file),
        Command::Verify {
            files,
            exact_at,
            confluence_runs,
        } => verify(cli, files, *exact_at, *confluence_runs),
        Command::Compare {
            first,
            second,
            allow_shift,
        } => compare(cli, first, second, *allow_shift),
        Command::TableCases => table_cases_cmd(cli),
    }
}

fn backends(arg: BackendArg) -> Vec<Backend> {
    match arg {
        BackendArg::Aps => vec![Backend::Aps],
        BackendArg::Foam => vec![Backend::Foam],
        BackendArg::Both => vec![Backend::Aps, Backend::Foam],
    }
}

/// The homology table, computed with every selected backend, which must agree.
fn homology_table(cli: &Cli, d: &Diagram) -> Result<HomologyTable> {
    let mut tables = Vec::new();
    for b in backends(cli.backend) {
        tables.push((b, homology_of(d, b, cli.cap)?));
    }
    let (first, reference) = &tables[0];
    for (b, t) in &tables[1..] {
        if t != reference {
            return Err(Failure::Internal(format!(
                "{} and {} backends disagree",
                first.name(),
                b.name()
            )));
        }
    }
    Ok(tables.swap_remove(0).1)
}

fn homology_rows(t: &HomologyTable, format: Format) -> Vec<Vec<String>> {
    t.iter()
        .map(|(g, h)| {
            vec![
                g.i.to_string(),
                g.j.to_string(),
                g.s.to_string(),
                h.free_rank.to_string(),
                torsion(h, format),
            ]
        })
        .collect()
}

const HOMOLOGY_HEADER: [&str; 5] = ["i", "j", "s", "free_rank", "torsion"];

fn homology(cli: &Cli, file: &Path) -> Result<Outcome> {
    let d = load(file)?;
    let t = homology_table(cli, &d)?;
    Ok(Outcome::ok(table(
        cli.format,
        &HOMOLOGY_HEADER,
        &homology_rows(&t, cli.format),
    )))
}

fn ranks<B: ChainBackend>(d: &Diagram, cap: usize) -> Result<Vec<(Grading, usize)>> {
    let c = assemble::<B>(d, cap)?;
    Ok(c.basis.iter().map(|(g, v)| (g.clone(), v.len())).collect())
}

fn chain_groups(cli: &Cli, file: &Path) -> Result<Outcome> {
    let d = load(file)?;
    let mut all = Vec::new();
    for b in backends(cli.backend) {
        all.push(match b {
            Backend::Aps => ranks::<Aps>(&d, cli.cap)?,
            Backend::Foam => ranks::<Foam>(&d, cli.cap)?,
        });
    }
    if all.windows(2).any(|w| w[0] != w[1]) {
        return Err(Failure::Internal(
            "backends disagree on chain group ranks".into(),
        ));
    }
    let rows: Vec<Vec<String>> = all[0]
        .iter()
        .map(|(g, n)| {
            vec![
                g.i.to_string(),
                g.j.to_string(),
                g.s.to_string(),
                n.to_string(),
            ]
        })
        .collect();
    Ok(Outcome::ok(table(
        cli.format,
        &["i", "j", "s", "rank"],
        &rows,
    )))
}

fn d_squared<B: ChainBackend>(d: &Diagram, cap: usize) -> Result<Report> {
    let c = assemble::<B>(d, cap)?;
    let mut report = Report::default();
    let failures = verify_d_squared(&c);
    report.checked = c.generator_count();
    report.failures = failures
        .into_iter()
        .map(|f| format!("d^2 of {} at {} is nonzero", f.generator, f.grading))
        .collect();
    Ok(report)
}

fn verify(
    cli: &Cli,
    files: &[PathBuf],
    exact_at: Option<usize>,
    confluence_runs: usize,
) -> Result<Outcome> {
    let mut rows = Vec::new();
    let mut failed = false;
    for file in files {
        let d = load(file)?;
        ibh_core::integer_homology::check_cap(&d, cli.cap)?;
        if let Some(p) = exact_at {
            if p >= d.crossing_count() {
                return Err(Failure::Usage(format!(
                    "{}: no crossing {p} (diagram has {})",
                    file.display(),
                    d.crossing_count()
                )));
            }
        }
        let mut rng = StdRng::seed_from_u64(cli.seed);
        let mut checks: Vec<(String, Report)> = vec![
            ("d^2 aps".into(), d_squared::<Aps>(&d, cli.cap)?),
            ("d^2 foam".into(), d_squared::<Foam>(&d, cli.cap)?),
            ("degree aps".into(), verify_degree::<Aps>(&d)?),
            ("degree foam".into(), verify_degree::<Foam>(&d)?),
            ("rewrite gradings".into(), verify_rewrite_gradings(&d)),
            ("grading agreement".into(), verify_grading_preservation(&d)),
            ("chain map".into(), verify_chain_map(&d)?),
            (
                "confluence".into(),
                verify_confluence(&d, confluence_runs, &mut rng)?,
            ),
            ("blocked symmetry".into(), verify_blocked_symmetry(&d)?),
        ];
        if let Some(p) = exact_at {
            let t = SkeinTriple::new(&d, p);
            for b in backends(cli.backend) {
                let report = match b {
                    Backend::Aps => verify_exactness::<Aps>(&t)?,
                    Backend::Foam => verify_exactness::<Foam>(&t)?,
                };
                checks.push((format!("exactness {} at {p}", b.name()), report));
            }
        }
        for (name, report) in checks {
            failed |= !report.passed();
            let status = if report.passed() { "pass" } else { "FAIL" };
            let detail = report.failures.first().cloned().unwrap_or_default();
            rows.push(vec![
                file.display().to_string(),
                name,
                status.to_string(),
                report.checked.to_string(),
                report.failures.len().to_string(),
                detail,
            ]);
        }
    }
    let text = table(
        cli.format,
        &[
            "file",
            "check",
            "status",
            "checked",
            "failures",
            "first_failure",
        ],
        &rows,
    );
    Ok(Outcome {
        text,
        code: if failed { 3 } else { 0 },
    })
}

fn compare(cli: &Cli, first: &Path, second: &Path, shift: Option<(i64, i64)>) -> Result<Outcome> {
    let a = load(first)?;
    let b = load(second)?;
    if a.surface() != b.surface() {
        return Err(Failure::Usage(format!(
            "surfaces differ: {} is on the {}, {} on the {}",
            first.display(),
            a.surface().name(),
            second.display(),
            b.surface().name()
        )));
    }
    let (di, dj) = shift.unwrap_or((0, 0));
    let ta: HomologyTable = homology_table(cli, &a)?
        .into_iter()
        .map(|(g, h)| (g.shifted(di, dj), h))
        .collect();
    let tb = homology_table(cli, &b)?;

    let mut gradings: Vec<&Grading> = ta.keys().chain(tb.keys()).collect();
    gradings.sort();
    gradings.dedup();
    let show = |h: Option<&ibh_core::integer_homology::HomologyGroup>| {
        h.map_or("0".to_string(), |h| h.to_string())
    };
    let rows: Vec<Vec<String>> = gradings
        .into_iter()
        .filter(|g| ta.get(*g) != tb.get(*g))
        .map(|g| {
            vec![
                g.i.to_string(),
                g.j.to_string(),
                g.s.to_string(),
                show(ta.get(g)),
                show(tb.get(g)),
            ]
        })
        .collect();
    if rows.is_empty() {
        return Ok(Outcome::ok("equal\n".into()));
    }
    let mut text = "not equal\n".to_string();
    text.push_str(&table(
        cli.format,
        &["i", "j", "s", "first", "second"],
        &rows,
    ));
    Ok(Outcome { text, code: 4 })
}

fn table_cases_cmd(cli: &Cli) -> Result<Outcome> {
    let mut rows = Vec::new();
    let mut failed = false;
    for case in table_cases() {
        let out = run_table_case(&case)?;
        failed |= !out.passed();
        let status = match (out.matches_table, out.backends_agree) {
            (true, true) => "match",
            (false, _) => "MISMATCH table",
            (true, false) => "MISMATCH backends",
        };
        rows.push(vec![
            out.row.to_string(),
            out.transition,
            out.aps,
            out.foam,
            status.to_string(),
        ]);
    }
    let text = table(
        cli.format,
        &["row", "transition", "aps", "foam", "status"],
        &rows,
    );
    Ok(Outcome {
        text,
        code: if failed { 3 } else { 0 },
    })
}
