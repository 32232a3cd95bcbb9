// Profiles known only at sample points, e.g. from measurement, go through
// a clamped cubic spline. Here the samples come from a closed form so the
// two routes can be compared.

use std::f64::consts::PI;

use revsurf::embeddability::{full_report, DEFAULT_GRID};
use revsurf::profile::{preset, read_samples_csv, validate, write_samples_csv};
use revsurf::Profile;

pub fn run() -> revsurf::Result<()> {
    let exact = preset("dumbbell:0.25")?;
    let knots: Vec<f64> = (0..120).map(|i| PI * i as f64 / 119.0).collect();
    let values = knots.iter().map(|&s| exact.value(s)).collect::<revsurf::Result<Vec<_>>>()?;

    let mut csv = Vec::new();
    write_samples_csv(&mut csv, &knots, &values)?;
    let (knots, values) = read_samples_csv(csv.as_slice())?;
    let sampled = Profile::from_samples(knots, values)?;

    println!("valid at 1e-6: {}", validate(&sampled, 1e-6).is_valid());
    for s in [0.3, 1.0, 2.0] {
        println!(
            "s = {s}: a' spline {:.8} vs exact {:.8}",
            sampled.slope(s)?,
            exact.slope(s)?
        );
    }
    let (rs, re) = (full_report(&sampled, DEFAULT_GRID, 1e-6)?, full_report(&exact, DEFAULT_GRID, 1e-6)?);
    println!("verdicts: sampled {}, exact {}", rs.verdict, re.verdict);
    println!("K(np): sampled {:.4}, exact {:.4}", rs.pole_curvature_np, re.pole_curvature_np);
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
