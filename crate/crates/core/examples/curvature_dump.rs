// Gauss curvature along the meridian as CSV, ready for a plotting tool.

use revsurf::curvature::sample_curvature;
use revsurf::profile::preset;

pub fn run() -> revsurf::Result<()> {
    let p = preset("bump:0.5")?;
    println!("s,a,a_prime,K");
    for r in sample_curvature(&p, 17)? {
        println!("{:.6},{:.6},{:.6},{:.6}", r.s, r.measure, r.slope, r.curvature);
    }
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
