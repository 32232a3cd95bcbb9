// Rescale a profile to total area 4π. Homotheties change curvature by
// λ⁻² but leave a' and every verdict unchanged.

use std::f64::consts::PI;

use revsurf::curvature::gauss_curvature;
use revsurf::embeddability::{full_report, DEFAULT_GRID, DEFAULT_TOL};
use revsurf::profile::{area, preset, rescale_to_area};

pub fn run() -> revsurf::Result<()> {
    let p = preset("dumbbell:0.3")?.homothety(3.0)?;
    let q = rescale_to_area(&p, 4.0 * PI)?;
    println!("area {:.6} -> {:.6} (L = {:.6})", area(&p)?, area(&q)?, q.length());
    println!("K(np) {:.6} -> {:.6}", gauss_curvature(&p, 0.0)?, gauss_curvature(&q, 0.0)?);
    let (a, b) = (full_report(&p, DEFAULT_GRID, DEFAULT_TOL)?, full_report(&q, DEFAULT_GRID, DEFAULT_TOL)?);
    println!("verdict {} -> {}", a.verdict, b.verdict);
    println!("sup|a'| {:.12} -> {:.12}", a.sup_abs_slope.value, b.sup_abs_slope.value);
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
