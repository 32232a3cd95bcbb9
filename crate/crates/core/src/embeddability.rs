//! Isometric embeddability into Euclidean 3-space.
//!
//! A profile embeds exactly when `|a'| ≤ 1` on `[0, L]`; this is the
//! ground-truth [`check_derivative`]. Through `∫₀ˣ K·a = 1 - a'(x)` the
//! same condition reads "every pole-centred disk has non-negative total
//! curvature" ([`check_disk`]) and, through Gauss–Bonnet with boundary,
//! "every latitude circle has `|∮ k_g| ≤ 2π`" ([`check_latitude`]). These
//! three are decisive and must agree. Two one-sided tests complement them:
//! negative curvature at a pole rules out an embedding
//! ([`check_pole_obstruction`]) and `K ≥ 0` everywhere guarantees one
//! ([`check_nonneg_curvature`]).
//!
//! Every threshold is compared with an additive tolerance `tol`.

use std::f64::consts::TAU;
use std::fmt;

use serde::Serialize;
use serde_json::json;

use crate::curvature::{gauss_curvature, pole_is_regular};
use crate::error::{Error, Result};
use crate::numeric::{maximize, minimize, Extremum};
use crate::profile::{Pole, Profile};

pub const DEFAULT_GRID: usize = 4096;
pub const DEFAULT_TOL: f64 = 1e-9;
pub const MIN_GRID: usize = 64;

/// Golden-section refinement stops at this fraction of `L`.
const REFINE_WIDTH: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Embeddable,
    NotEmbeddable,
    Inconclusive,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Embeddable => "embeddable",
            Verdict::NotEmbeddable => "not_embeddable",
            Verdict::Inconclusive => "inconclusive",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Criterion {
    /// `sup |a'| ≤ 1`
    Derivative,
    /// every pole-centred disk has `∫ K ≥ 0`
    Disk,
    /// every latitude has `|∮ k_g| ≤ 2π`
    Latitude,
    /// `K < 0` at a pole forbids an embedding
    PoleObstruction,
    /// `K ≥ 0` everywhere forces one
    NonnegCurvature,
}

impl Criterion {
    pub const ALL: [Criterion; 5] = [
        Criterion::Derivative,
        Criterion::Disk,
        Criterion::Latitude,
        Criterion::PoleObstruction,
        Criterion::NonnegCurvature,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Criterion::Derivative => "derivative",
            Criterion::Disk => "disk",
            Criterion::Latitude => "latitude",
            Criterion::PoleObstruction => "pole_obstruction",
            Criterion::NonnegCurvature => "nonneg_curvature",
        }
    }

    pub fn is_decisive(self) -> bool {
        matches!(self, Criterion::Derivative | Criterion::Disk | Criterion::Latitude)
    }
}

/// Where a criterion's extremal quantity was found and its value.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Witness {
    pub s: f64,
    pub value: f64,
}

impl From<Extremum> for Witness {
    fn from(e: Extremum) -> Self {
        Witness { s: e.at, value: e.value }
    }
}

/// Outcome of one criterion.
///
/// `margin` is the signed distance to the threshold, positive on the
/// embeddable side: `1 - sup|a'|` for the derivative test, the smallest
/// disk integral for the disk test, `(2π - max|∮k_g|)/2π` for latitudes,
/// and the relevant minimum curvature for the two one-sided tests.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CriterionResult {
    pub criterion: Criterion,
    pub verdict: Verdict,
    pub witness: Witness,
    pub margin: f64,
}

fn check_args(grid_n: usize, tol: f64) -> Result<()> {
    if grid_n < MIN_GRID {
        return Err(Error::OutOfRange(format!("grid must have at least {MIN_GRID} points, got {grid_n}")));
    }
    if !(tol >= 0.0 && tol.is_finite()) {
        return Err(Error::OutOfRange(format!("tolerance must be finite and non-negative, got {tol}")));
    }
    Ok(())
}

fn decide(ok: bool) -> Verdict {
    if ok {
        Verdict::Embeddable
    } else {
        Verdict::NotEmbeddable
    }
}

/// `sup |a'|` over `[0, L]` by grid scan and golden-section refinement.
pub fn sup_abs_slope(p: &Profile, grid_n: usize) -> Result<Witness> {
    let l = p.length();
    Ok(maximize(|s| Ok(p.slope(s)?.abs()), 0.0, l, grid_n, REFINE_WIDTH * l)?.into())
}

pub fn check_derivative(p: &Profile, grid_n: usize, tol: f64) -> Result<CriterionResult> {
    check_args(grid_n, tol)?;
    let sup = sup_abs_slope(p, grid_n)?;
    Ok(CriterionResult {
        criterion: Criterion::Derivative,
        verdict: decide(sup.value <= 1.0 + tol),
        witness: sup,
        margin: 1.0 - sup.value,
    })
}

/// Minimizes the north disk integral `1 - a'(x)` and the south disk
/// integral `1 + a'(x)` over `x ∈ [0, L]`.
pub fn check_disk(p: &Profile, grid_n: usize, tol: f64) -> Result<CriterionResult> {
    check_args(grid_n, tol)?;
    let l = p.length();
    let width = REFINE_WIDTH * l;
    let north = minimize(|x| Ok(1.0 - p.slope(x)?), 0.0, l, grid_n, width)?;
    let south = minimize(|x| Ok(1.0 + p.slope(x)?), 0.0, l, grid_n, width)?;
    let worst = if north.value <= south.value { north } else { south };
    Ok(CriterionResult {
        criterion: Criterion::Disk,
        verdict: decide(worst.value >= -tol),
        witness: worst.into(),
        margin: worst.value,
    })
}

/// Supremum of `|∮ k_g| = 2π|a'(x)|` over latitudes `x ∈ (0, L)`.
///
/// The supremum over the open interval equals the maximum over its
/// closure, so the scan includes the pole limits.
pub fn check_latitude(p: &Profile, grid_n: usize, tol: f64) -> Result<CriterionResult> {
    check_args(grid_n, tol)?;
    let l = p.length();
    let worst = maximize(|x| Ok((TAU * p.slope(x)?).abs()), 0.0, l, grid_n, REFINE_WIDTH * l)?;
    Ok(CriterionResult {
        criterion: Criterion::Latitude,
        verdict: decide(worst.value <= TAU * (1.0 + tol)),
        witness: worst.into(),
        margin: (TAU - worst.value) / TAU,
    })
}

pub fn check_pole_obstruction(p: &Profile, tol: f64) -> Result<CriterionResult> {
    check_args(MIN_GRID, tol)?;
    let np = gauss_curvature(p, 0.0)?;
    let sp = gauss_curvature(p, p.length())?;
    let witness = if np <= sp {
        Witness { s: 0.0, value: np }
    } else {
        Witness { s: p.length(), value: sp }
    };
    Ok(CriterionResult {
        criterion: Criterion::PoleObstruction,
        verdict: if witness.value < -tol {
            Verdict::NotEmbeddable
        } else {
            Verdict::Inconclusive
        },
        witness,
        margin: witness.value,
    })
}

pub fn check_nonneg_curvature(p: &Profile, grid_n: usize, tol: f64) -> Result<CriterionResult> {
    check_args(grid_n, tol)?;
    let l = p.length();
    let min = minimize(|s| gauss_curvature(p, s), 0.0, l, grid_n, REFINE_WIDTH * l)?;
    Ok(CriterionResult {
        criterion: Criterion::NonnegCurvature,
        verdict: if min.value >= -tol {
            Verdict::Embeddable
        } else {
            Verdict::Inconclusive
        },
        witness: min.into(),
        margin: min.value,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EmbeddabilityReport {
    pub verdict: Verdict,
    pub sup_abs_slope: Witness,
    /// In [`Criterion::ALL`] order.
    pub criteria: Vec<CriterionResult>,
    pub pole_curvature_np: f64,
    pub pole_curvature_sp: f64,
    pub grid_n: usize,
    pub tol: f64,
    /// Human-readable caveats (boundary cases, singular pole limits).
    pub notes: Vec<String>,
}

impl EmbeddabilityReport {
    pub fn criterion(&self, c: Criterion) -> &CriterionResult {
        self.criteria
            .iter()
            .find(|r| r.criterion == c)
            .expect("report holds every criterion")
    }

    pub fn is_embeddable(&self) -> bool {
        self.verdict == Verdict::Embeddable
    }

    /// The machine-readable report.
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "verdict": self.verdict.as_str(),
            "sup_a_prime": { "value": self.sup_abs_slope.value, "at_s": self.sup_abs_slope.s },
            "criteria": self.criteria.iter().map(|c| json!({
                "name": c.criterion.name(),
                "verdict": c.verdict.as_str(),
                "witness_s": c.witness.s,
                "witness_value": c.witness.value,
                "margin": c.margin,
            })).collect::<Vec<_>>(),
            "pole_curvature": { "np": self.pole_curvature_np, "sp": self.pole_curvature_sp },
            "grid_n": self.grid_n,
            "tol": self.tol,
        })
    }
}

/// Runs all five criteria (concurrently) and cross-checks them.
///
/// Fails with [`Error::Inconsistent`] if the decisive criteria disagree or
/// a one-sided test contradicts the derivative verdict; that indicates a
/// numerical problem, not a property of the profile. The profile is
/// expected to pass [`crate::profile::validate`].
pub fn full_report(p: &Profile, grid_n: usize, tol: f64) -> Result<EmbeddabilityReport> {
    check_args(grid_n, tol)?;
    let (derivative, disk, latitude, pole, nonneg) = std::thread::scope(|scope| {
        let disk = scope.spawn(|| check_disk(p, grid_n, tol));
        let latitude = scope.spawn(|| check_latitude(p, grid_n, tol));
        let pole = scope.spawn(|| check_pole_obstruction(p, tol));
        let nonneg = scope.spawn(|| check_nonneg_curvature(p, grid_n, tol));
        let derivative = check_derivative(p, grid_n, tol);
        let join = |h: std::thread::ScopedJoinHandle<'_, Result<CriterionResult>>| {
            h.join().expect("criterion thread panicked")
        };
        (derivative, join(disk), join(latitude), join(pole), join(nonneg))
    });
    let criteria = vec![derivative?, disk?, latitude?, pole?, nonneg?];
    let truth = &criteria[0];
    let verdict = truth.verdict;

    for c in &criteria[1..] {
        let contradiction = match c.criterion {
            Criterion::Disk | Criterion::Latitude => c.verdict != verdict,
            Criterion::PoleObstruction => c.verdict == Verdict::NotEmbeddable && verdict == Verdict::Embeddable,
            Criterion::NonnegCurvature => c.verdict == Verdict::Embeddable && verdict == Verdict::NotEmbeddable,
            Criterion::Derivative => false,
        };
        if contradiction {
            return Err(Error::Inconsistent(format!(
                "{} criterion says {} (witness s = {}, value = {}) but sup|a'| = {} at s = {} says {}",
                c.criterion.name(),
                c.verdict,
                c.witness.s,
                c.witness.value,
                truth.witness.value,
                truth.witness.s,
                verdict
            )));
        }
    }

    let mut notes = Vec::new();
    if truth.witness.value > 1.0 && verdict == Verdict::Embeddable {
        notes.push(format!(
            "boundary case: sup|a'| = {} exceeds 1 by at most the tolerance {tol}",
            truth.witness.value
        ));
    }
    for pole in [Pole::North, Pole::South] {
        if !pole_is_regular(p, pole, 1e-6)? {
            notes.push(format!(
                "a'' does not vanish at {pole}; the metric is not smooth there and the pole curvature is not a true limit"
            ));
        }
    }

    Ok(EmbeddabilityReport {
        verdict,
        sup_abs_slope: truth.witness,
        pole_curvature_np: gauss_curvature(p, 0.0)?,
        pole_curvature_sp: gauss_curvature(p, p.length())?,
        criteria,
        grid_n,
        tol,
        notes,
    })
}
