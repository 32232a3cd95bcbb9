// The unit sphere end to end: validate, decide, embed.

use std::f64::consts::PI;

use revsurf::embeddability::{full_report, DEFAULT_GRID, DEFAULT_TOL};
use revsurf::embedding::EmbeddingMap;
use revsurf::profile::{preset, validate};

pub fn run() -> revsurf::Result<()> {
    let sphere = preset("sphere")?;
    let checks = validate(&sphere, 1e-8);
    println!("valid: {}", checks.is_valid());

    let report = full_report(&sphere, DEFAULT_GRID, DEFAULT_TOL)?;
    println!("verdict: {} (sup|a'| = {})", report.verdict, report.sup_abs_slope.value);

    let map = EmbeddingMap::new(sphere, 0.0)?;
    for s in [0.0, PI / 4.0, PI / 2.0, PI] {
        let [x, y, z] = map.point(s, 0.0)?;
        println!("psi({s:.4}, 0) = ({x:.6}, {y:.6}, {z:.6})");
    }
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
