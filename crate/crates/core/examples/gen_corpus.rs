//! Regenerates the braid-closure diagrams under `corpus/`.
//!
//! Usage: `cargo run -p ibh-core --example gen_corpus -- <corpus dir>`

use std::path::PathBuf;

use ibh_core::surface_diagram::{BraidClosure, SurfaceKind};

fn main() -> std::io::Result<()> {
    use SurfaceKind::*;
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "corpus".into()));
    std::fs::create_dir_all(&dir)?;

    let plain = |strands, word: &[i32]| BraidClosure::new(strands, word.to_vec());
    let crossed =
        |strands, word: &[i32]| BraidClosure::new(strands, word.to_vec()).with_transverse();
    let entries: Vec<(&str, &str, BraidClosure, SurfaceKind)> = vec![
        ("unknot", "one trivial circle", plain(1, &[]), Disk),
        (
            "kink",
            "unknot with one positive kink",
            plain(2, &[1]),
            Disk,
        ),
        ("hopf_pos", "positive Hopf link", plain(2, &[1, 1]), Disk),
        ("unlink2", "two-component unlink", plain(2, &[]), Disk),
        (
            "unlink2_r2",
            "two-component unlink with a second Reidemeister pair",
            plain(2, &[1, -1]),
            Disk,
        ),
        ("trefoil", "positive trefoil", plain(2, &[1, 1, 1]), Disk),
        ("r3_a", "closure of s1 s2 s1", plain(3, &[1, 2, 1]), Disk),
        ("r3_b", "closure of s2 s1 s2", plain(3, &[2, 1, 2]), Disk),
        (
            "cinquefoil",
            "positive (2,5) torus knot",
            plain(2, &[1, 1, 1, 1, 1]),
            Disk,
        ),
        (
            "figure8",
            "figure-eight knot",
            plain(3, &[1, -2, 1, -2]),
            Disk,
        ),
        (
            "borromean",
            "Borromean rings",
            plain(3, &[1, -2, 1, -2, 1, -2]),
            Disk,
        ),
        (
            "annulus_loop",
            "core circle of the annulus",
            plain(1, &[]),
            Annulus,
        ),
        (
            "annulus_two_loops",
            "two parallel core circles",
            plain(2, &[]),
            Annulus,
        ),
        (
            "annulus_two_loops_r2",
            "two core circles with a second Reidemeister pair",
            plain(2, &[1, -1]),
            Annulus,
        ),
        (
            "annulus_hopf",
            "closure of s1 s1 around the core",
            plain(2, &[1, 1]),
            Annulus,
        ),
        (
            "annulus_r3_a",
            "closure of s1 s2 s1 around the core",
            plain(3, &[1, 2, 1]),
            Annulus,
        ),
        (
            "annulus_r3_b",
            "closure of s2 s1 s2 around the core",
            plain(3, &[2, 1, 2]),
            Annulus,
        ),
        (
            "torus_loops",
            "two parallel (1,0) curves",
            plain(2, &[]),
            Torus,
        ),
        (
            "torus_selfglue",
            "(1,0) and (0,1) curves crossing once",
            crossed(1, &[]),
            Torus,
        ),
        (
            "torus_grid",
            "two (1,0) curves crossed by a (0,1) curve",
            crossed(2, &[]),
            Torus,
        ),
        (
            "torus_braid",
            "closure of s1 crossed by a (0,1) curve",
            crossed(2, &[1]),
            Torus,
        ),
        (
            "torus_r2_b",
            "torus_grid with a second Reidemeister pair",
            crossed(2, &[1, -1]),
            Torus,
        ),
        (
            "torus_r3_a",
            "closure of s1 s2 s1 crossed by a (0,1) curve",
            crossed(3, &[1, 2, 1]),
            Torus,
        ),
        (
            "torus_r3_b",
            "closure of s2 s1 s2 crossed by a (0,1) curve",
            crossed(3, &[2, 1, 2]),
            Torus,
        ),
    ];
    for (name, about, braid, kind) in entries {
        let text = format!("# {about}\n{}", braid.build(kind).to_text());
        std::fs::write(dir.join(format!("{name}.dg")), text)?;
    }
    Ok(())
}
