use std::f64::consts::TAU;

use serde::Serialize;

use super::mesh::Mesh;
use crate::embeddability::sup_abs_slope;
use crate::error::{Error, Result};
use crate::numeric::{integrate, QuadConfig};
use crate::profile::Profile;

/// Radicand values `1 - a'²` in `(-TOL_CLAMP, 0)` are rounding and are
/// clamped to zero; anything lower means the height function would be
/// complex.
pub const TOL_CLAMP: f64 = 1e-9;

/// Guard band (fraction of `L`) excluded from the induced-metric check
/// around the poles and around interior points where `|a'| = 1`.
pub const METRIC_GUARD: f64 = 1e-3;

const TABLE_PANELS: usize = 256;
const PANEL_TOL: f64 = 1e-14;
/// Extra depth for square-root-type zeros of the radicand.
const PSI3_MAX_DEPTH: u32 = 96;
const SCAN_GRID: usize = 4096;

fn quad_config(tol: f64) -> QuadConfig {
    QuadConfig {
        max_depth: PSI3_MAX_DEPTH,
        initial_panels: 2,
        ..QuadConfig::with_tol(tol)
    }
}

fn height_integrand(p: &Profile, t: f64) -> Result<f64> {
    let slope = p.slope(t)?;
    let r = 1.0 - slope * slope;
    if r < -TOL_CLAMP {
        return Err(Error::NotEmbeddable {
            s: t,
            abs_slope: slope.abs(),
        });
    }
    Ok(r.max(0.0).sqrt())
}

fn scan_radicand(p: &Profile) -> Result<()> {
    let sup = sup_abs_slope(p, SCAN_GRID)?;
    if 1.0 - sup.value * sup.value < -TOL_CLAMP {
        return Err(Error::NotEmbeddable {
            s: sup.s,
            abs_slope: sup.value,
        });
    }
    Ok(())
}

/// `ψ³(s) = ∫_c^s √(1 - a'(t)²) dt` by direct adaptive quadrature.
///
/// Fails with [`Error::NotEmbeddable`] if `|a'|` exceeds 1 (beyond
/// rounding) anywhere on the profile.
pub fn psi3(p: &Profile, s: f64, c: f64) -> Result<f64> {
    p.check_range("s", s)?;
    p.check_range("c", c)?;
    scan_radicand(p)?;
    Ok(integrate(|t| height_integrand(p, t), c, s, &quad_config(1e-13))?.value)
}

/// `(a(s) cos θ, a(s) sin θ, ψ³(s))`.
pub fn embed_point(p: &Profile, s: f64, theta: f64, c: f64) -> Result<[f64; 3]> {
    let z = psi3(p, s, c)?;
    let a = p.value(s)?;
    Ok([a * theta.cos(), a * theta.sin(), z])
}

/// The embedding `(s, θ) ↦ (a(s) cos θ, a(s) sin θ, ψ³(s))` of an
/// embeddable profile, with `ψ³` tabulated at construction.
///
/// The table stores the cumulative height at uniformly spaced nodes;
/// a query adds the quadrature over the partial panel, so queries are
/// monotone in `s` and as accurate as the table itself.
#[derive(Debug, Clone)]
pub struct EmbeddingMap {
    profile: Profile,
    basepoint: f64,
    nodes: Vec<f64>,
    cumulative: Vec<f64>,
    offset: f64,
}

impl EmbeddingMap {
    pub fn new(profile: Profile, basepoint: f64) -> Result<Self> {
        profile.check_range("c", basepoint)?;
        scan_radicand(&profile)?;
        let l = profile.length();
        let nodes: Vec<f64> = (0..=TABLE_PANELS)
            .map(|i| if i == TABLE_PANELS { l } else { l * i as f64 / TABLE_PANELS as f64 })
            .collect();
        let cfg = quad_config(PANEL_TOL);
        let mut cumulative = Vec::with_capacity(nodes.len());
        cumulative.push(0.0);
        let mut acc = 0.0;
        for w in nodes.windows(2) {
            acc += integrate(|t| height_integrand(&profile, t), w[0], w[1], &cfg)?.value;
            cumulative.push(acc);
        }
        let mut map = Self {
            profile,
            basepoint,
            nodes,
            cumulative,
            offset: 0.0,
        };
        map.offset = map.height_from_north(basepoint)?;
        Ok(map)
    }

    pub fn profile(&self) -> &Profile {
        &self.profile
    }

    pub fn basepoint(&self) -> f64 {
        self.basepoint
    }

    fn height_from_north(&self, s: f64) -> Result<f64> {
        let l = self.profile.length();
        let panel = ((s / l * TABLE_PANELS as f64) as usize).min(TABLE_PANELS - 1);
        let start = self.nodes[panel];
        let partial = integrate(|t| height_integrand(&self.profile, t), start, s, &quad_config(PANEL_TOL))?;
        Ok(self.cumulative[panel] + partial.value)
    }

    /// `ψ³(s)`, zero at the basepoint.
    pub fn height(&self, s: f64) -> Result<f64> {
        self.profile.check_range("s", s)?;
        Ok(self.height_from_north(s)? - self.offset)
    }

    /// `ψ³(L) - ψ³(0)`.
    pub fn total_height(&self) -> f64 {
        self.cumulative[TABLE_PANELS]
    }

    pub fn point(&self, s: f64, theta: f64) -> Result<[f64; 3]> {
        let a = self.profile.value(s)?;
        Ok([a * theta.cos(), a * theta.sin(), self.height(s)?])
    }

    /// Triangulates the surface with `n_s - 1` latitude rings of `n_theta`
    /// vertices each plus the two poles.
    pub fn mesh(&self, n_s: usize, n_theta: usize) -> Result<Mesh> {
        if n_s < 3 || n_theta < 3 {
            return Err(Error::OutOfRange(format!("mesh needs n_s >= 3 and n_theta >= 3, got {n_s} x {n_theta}")));
        }
        let l = self.profile.length();
        let mut vertices = Vec::with_capacity((n_s - 1) * n_theta + 2);
        vertices.push(self.point(0.0, 0.0)?);
        for j in 1..n_s {
            let s = l * j as f64 / n_s as f64;
            let a = self.profile.value(s)?;
            let z = self.height(s)?;
            for k in 0..n_theta {
                let theta = TAU * k as f64 / n_theta as f64;
                vertices.push([a * theta.cos(), a * theta.sin(), z]);
            }
        }
        vertices.push(self.point(l, 0.0)?);

        let north = 0u32;
        let south = (vertices.len() - 1) as u32;
        let ring = |j: usize, k: usize| (1 + j * n_theta + k % n_theta) as u32;
        let rings = n_s - 1;
        let mut triangles = Vec::with_capacity(2 * n_theta * rings);
        for k in 0..n_theta {
            triangles.push([north, ring(0, k + 1), ring(0, k)]);
        }
        for j in 0..rings - 1 {
            for k in 0..n_theta {
                let (a, b) = (ring(j, k), ring(j, k + 1));
                let (c, d) = (ring(j + 1, k + 1), ring(j + 1, k));
                triangles.push([a, b, c]);
                triangles.push([a, c, d]);
            }
        }
        for k in 0..n_theta {
            triangles.push([south, ring(rings - 1, k), ring(rings - 1, k + 1)]);
        }

        let mesh = Mesh {
            vertices,
            triangles,
            n_s,
            n_theta,
        };
        if !mesh.is_watertight() {
            return Err(Error::Inconsistent("generated mesh is not watertight".into()));
        }
        Ok(mesh)
    }

    /// Compares the pulled-back metric `(E, F, G)` with `(1, 0, a²)` using
    /// central differences of step `h` on an `n_s × n_theta` grid of cell
    /// centres in `s` and uniform angles.
    pub fn verify_induced_metric(&self, n_s: usize, n_theta: usize, h: f64) -> Result<MetricReport> {
        if n_s == 0 || n_theta == 0 || !(h > 0.0) {
            return Err(Error::OutOfRange("metric check needs a non-empty grid and h > 0".into()));
        }
        let l = self.profile.length();
        let band = METRIC_GUARD * l;

        // Interior points where |a'| touches 1; the height is only C¹ there.
        let mut touches = Vec::new();
        for i in 0..SCAN_GRID {
            let t = l * i as f64 / (SCAN_GRID - 1) as f64;
            if t > band && t < l - band && 1.0 - self.profile.slope(t)?.abs() < 1e-6 {
                touches.push(t);
            }
        }
        let reach = band + l / (SCAN_GRID - 1) as f64;

        let mut report = MetricReport {
            max_e_error: 0.0,
            max_f_error: 0.0,
            max_g_error: 0.0,
            evaluated: 0,
            skipped: 0,
            guard_band: band,
            h,
        };
        for j in 0..n_s {
            let s = l * (j as f64 + 0.5) / n_s as f64;
            if s < band || s > l - band || touches.iter().any(|t| (s - t).abs() < reach) {
                report.skipped += n_theta;
                continue;
            }
            let a = self.profile.value(s)?;
            for k in 0..n_theta {
                let theta = TAU * k as f64 / n_theta as f64;
                let ds = central(self.point(s + h, theta)?, self.point(s - h, theta)?, h);
                let dt = central(self.point(s, theta + h)?, self.point(s, theta - h)?, h);
                let e = dot(ds, ds);
                let f = dot(ds, dt);
                let g = dot(dt, dt);
                report.max_e_error = report.max_e_error.max((e - 1.0).abs());
                report.max_f_error = report.max_f_error.max(f.abs());
                report.max_g_error = report.max_g_error.max((g - a * a).abs());
                report.evaluated += 1;
            }
        }
        Ok(report)
    }
}

/// Largest deviations of the induced metric from `ds² + a² dθ²`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MetricReport {
    pub max_e_error: f64,
    pub max_f_error: f64,
    pub max_g_error: f64,
    pub evaluated: usize,
    pub skipped: usize,
    pub guard_band: f64,
    pub h: f64,
}

impl MetricReport {
    pub fn max_error(&self) -> f64 {
        self.max_e_error.max(self.max_f_error).max(self.max_g_error)
    }
}

fn central(plus: [f64; 3], minus: [f64; 3], h: f64) -> [f64; 3] {
    [0, 1, 2].map(|i| (plus[i] - minus[i]) / (2.0 * h))
}

fn dot(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

/// Builds the embedding with basepoint `c` and triangulates it.
pub fn generate_mesh(p: &Profile, n_s: usize, n_theta: usize, c: f64) -> Result<Mesh> {
    EmbeddingMap::new(p.clone(), c)?.mesh(n_s, n_theta)
}

/// Induced-metric check of the embedding of `p` with basepoint `c`.
pub fn verify_induced_metric(p: &Profile, c: f64, n_s: usize, n_theta: usize, h: f64) -> Result<MetricReport> {
    EmbeddingMap::new(p.clone(), c)?.verify_induced_metric(n_s, n_theta, h)
}
