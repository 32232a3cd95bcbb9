// A bump at the poles forces negative pole curvature, which already
// rules out an embedding. Every criterion agrees and reports a witness.

use revsurf::embeddability::{full_report, DEFAULT_GRID, DEFAULT_TOL};
use revsurf::embedding::EmbeddingMap;
use revsurf::profile::preset;
use revsurf::Error;

pub fn run() -> revsurf::Result<()> {
    let bump = preset("bump:0.5")?;
    let report = full_report(&bump, DEFAULT_GRID, DEFAULT_TOL)?;
    println!("verdict: {}", report.verdict);
    println!("K(np) = {}, K(sp) = {}", report.pole_curvature_np, report.pole_curvature_sp);
    for c in &report.criteria {
        println!(
            "{:<17} {:<15} at s = {:.6}: value {:.6}, margin {:+.6}",
            c.criterion.name(),
            c.verdict.as_str(),
            c.witness.s,
            c.witness.value,
            c.margin
        );
    }

    match EmbeddingMap::new(bump, 0.0) {
        Err(Error::NotEmbeddable { s, abs_slope }) => println!("embedding refused: |a'({s:.6})| = {abs_slope:.6}"),
        other => println!("unexpected: {other:?}"),
    }
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
