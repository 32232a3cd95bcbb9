//! Gauss curvature `K = -a''/a`, curvature integrals over pole-centred
//! disks, and total geodesic curvature of latitude circles.
//!
//! Disk integrals are reported divided by 2π: for the north disk
//! `{s ≤ x}` the quantity is `∫₀ˣ K·a ds`, which equals `1 - a'(x)`; for
//! the south disk `{s ≥ x}` it is `∫ₓᴸ K·a ds = 1 + a'(x)`. Both sum to
//! 2, i.e. total curvature 4π.

use std::f64::consts::TAU;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::numeric::{integrate, QuadConfig};
use crate::profile::{Pole, Profile, Source};

/// Width of the band around each pole, as a fraction of `L`, inside
/// which `K` is taken from the L'Hôpital form `-a'''/a'`.
pub const POLE_GUARD: f64 = 1e-4;

/// Default absolute tolerance for curvature quadratures.
pub const DEFAULT_QUAD_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CurvatureSample {
    pub s: f64,
    /// `a(s)`, which is also the Riemannian area density.
    pub measure: f64,
    pub slope: f64,
    pub curvature: f64,
}

/// Gauss curvature at `s ∈ [0, L]`.
///
/// Within `POLE_GUARD·L` of a pole, `-a''/a` is a 0/0 form and the value
/// `-a'''(s)/a'(s)` is returned instead; at the poles themselves that is
/// `-a'''(0)` and `a'''(L)`. The limit is only meaningful when
/// `a''(pole) = 0` (see [`pole_is_regular`]). For sampled profiles the
/// whole band uses the finite-difference pole value.
pub fn gauss_curvature(p: &Profile, s: f64) -> Result<f64> {
    p.check_range("s", s)?;
    let l = p.length();
    let band = POLE_GUARD * l;
    let pole = if s <= band {
        Some(Pole::North)
    } else if s >= l - band {
        Some(Pole::South)
    } else {
        None
    };
    match (pole, p.source()) {
        (None, _) => {
            let j = p.jet(s)?;
            Ok(-j.d2 / j.v)
        }
        (Some(_), Source::Expression(_)) => {
            let j = p.jet(s)?;
            Ok(-j.d3 / j.d1)
        }
        (Some(pole), Source::Sampled(_)) => {
            let d3 = p.pole_third_derivative(pole)?;
            Ok(-d3 / p.slope(p.pole_position(pole))?)
        }
    }
}

/// Whether `|a''(pole)| < tol`, the condition under which the metric is
/// smooth at the pole and the pole value of [`gauss_curvature`] is the
/// true limit.
pub fn pole_is_regular(p: &Profile, pole: Pole, tol: f64) -> Result<bool> {
    Ok(p.jet(p.pole_position(pole))?.d2.abs() < tol)
}

/// `(1/2π) ∫_Ω K` for the disk of radius `x` about `pole`, from the
/// closed form `1 ∓ a'(x)`.
pub fn disk_integral_closed(p: &Profile, x: f64, pole: Pole) -> Result<f64> {
    p.check_range("x", x)?;
    let slope = p.slope(x)?;
    Ok(match pole {
        Pole::North => 1.0 - slope,
        Pole::South => 1.0 + slope,
    })
}

/// The same disk integral by adaptive quadrature of `K·a = -a''`.
pub fn disk_integral_quadrature(p: &Profile, x: f64, pole: Pole, tol: f64) -> Result<f64> {
    p.check_range("x", x)?;
    if !(tol > 0.0) {
        return Err(Error::OutOfRange(format!("tolerance must be positive, got {tol}")));
    }
    let (lo, hi) = match pole {
        Pole::North => (0.0, x),
        Pole::South => (x, p.length()),
    };
    let r = integrate(|s| Ok(-p.jet(s)?.d2), lo, hi, &QuadConfig::with_tol(tol))?;
    Ok(r.value)
}

/// `∫_M K` by quadrature; 4π for every valid profile.
pub fn total_curvature(p: &Profile) -> Result<f64> {
    Ok(TAU * disk_integral_quadrature(p, p.length(), Pole::North, DEFAULT_QUAD_TOL)?)
}

/// `∮ k_g` over the latitude circle at `s = x ∈ (0, L)`, oriented as the
/// boundary of the north disk: `2π·a'(x)`.
pub fn latitude_geodesic_curvature_total(p: &Profile, x: f64) -> Result<f64> {
    if !(x > 0.0 && x < p.length()) {
        return Err(Error::OutOfRange(format!("latitude x = {x} must lie in (0, {})", p.length())));
    }
    Ok(TAU * p.slope(x)?)
}

/// `n ≥ 2` uniform samples on `[0, L]`, pole limits at the ends.
pub fn sample_curvature(p: &Profile, n: usize) -> Result<Vec<CurvatureSample>> {
    if n < 2 {
        return Err(Error::OutOfRange(format!("need at least 2 samples, got {n}")));
    }
    let l = p.length();
    (0..n)
        .map(|i| {
            let s = if i == n - 1 { l } else { l * i as f64 / (n - 1) as f64 };
            let j = p.jet(s)?;
            Ok(CurvatureSample {
                s,
                measure: j.v,
                slope: j.d1,
                curvature: gauss_curvature(p, s)?,
            })
        })
        .collect()
}
