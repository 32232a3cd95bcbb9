// Curvature of pole-centred disks two ways: by quadrature of K·a and from
// the slope at the rim. With the geodesic curvature of the rim they add up
// to 2π, and the whole surface carries 4π.

use std::f64::consts::{PI, TAU};

use revsurf::curvature::{
    disk_integral_closed, disk_integral_quadrature, latitude_geodesic_curvature_total, total_curvature,
};
use revsurf::profile::preset;
use revsurf::Pole;

pub fn run() -> revsurf::Result<()> {
    let p = preset("dumbbell:0.25")?;
    println!("total curvature / 4pi = {:.12}", total_curvature(&p)? / (4.0 * PI));
    println!("{:>6} {:>14} {:>14} {:>14}", "x", "quadrature", "1 - a'(x)", "disk + rim");
    for i in 1..8 {
        let x = PI * i as f64 / 8.0;
        let q = disk_integral_quadrature(&p, x, Pole::North, 1e-10)?;
        let c = disk_integral_closed(&p, x, Pole::North)?;
        let sum = TAU * c + latitude_geodesic_curvature_total(&p, x)?;
        println!("{x:>6.3} {q:>14.10} {c:>14.10} {:>14.10}", sum / TAU);
    }
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
