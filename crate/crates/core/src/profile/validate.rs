use serde::Serialize;

use super::Profile;
use crate::numeric::search::golden_section_max;
use crate::numeric::Extremum;

/// Number of grid cells used for the interior positivity scan.
pub const VALIDATION_GRID: usize = 2048;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Condition {
    pub name: &'static str,
    pub residual: f64,
    pub pass: bool,
}

/// Boundary-condition and positivity diagnostics.
///
/// The four endpoint residuals are `|a(0)|`, `|a(L)|`, `|a'(0) - 1|` and
/// `|a'(L) + 1|`, each passing when `≤ tol`. The fifth condition passes
/// when the interior minimum of `a` is strictly positive; its residual is
/// that minimum.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ValidationReport {
    pub tol: f64,
    pub conditions: Vec<Condition>,
    pub interior_min: Option<InteriorMin>,
    pub grid_n: usize,
    /// Set when the profile could not be evaluated somewhere on the grid.
    pub eval_error: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct InteriorMin {
    pub value: f64,
    pub at_s: f64,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.eval_error.is_none() && self.conditions.iter().all(|c| c.pass)
    }

    pub fn condition(&self, name: &str) -> Option<&Condition> {
        self.conditions.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Condition> {
        self.conditions.iter().filter(|c| !c.pass)
    }
}

/// Checks the smooth-closure conditions at the poles and positivity on
/// the open interval.
///
/// Positivity is scanned on the `VALIDATION_GRID - 1` interior nodes of a
/// uniform grid; when the smallest sample is not next to a pole it is
/// refined by golden-section search over the two neighbouring cells.
pub fn validate(p: &Profile, tol: f64) -> ValidationReport {
    let l = p.length();
    let mut report = ValidationReport {
        tol,
        conditions: Vec::with_capacity(5),
        interior_min: None,
        grid_n: VALIDATION_GRID,
        eval_error: None,
    };
    let mut push = |name, residual: f64, pass: bool| {
        report.conditions.push(Condition { name, residual, pass });
    };

    let (start, end) = match (p.jet(0.0), p.jet(l)) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => {
            report.eval_error = Some(e.to_string());
            return report;
        }
    };
    let within = |r: f64| r <= tol;
    push("a(0)=0", start.v.abs(), within(start.v.abs()));
    push("a(L)=0", end.v.abs(), within(end.v.abs()));
    push("a'(0)=1", (start.d1 - 1.0).abs(), within((start.d1 - 1.0).abs()));
    push("a'(L)=-1", (end.d1 + 1.0).abs(), within((end.d1 + 1.0).abs()));

    match interior_minimum(p, l) {
        Ok(m) => {
            push("a>0 on (0,L)", m.value, m.value > 0.0);
            report.interior_min = Some(InteriorMin {
                value: m.value,
                at_s: m.at,
            });
        }
        Err(e) => {
            push("a>0 on (0,L)", f64::NAN, false);
            report.eval_error = Some(e.to_string());
        }
    }
    report
}

fn interior_minimum(p: &Profile, l: f64) -> crate::Result<Extremum> {
    let n = VALIDATION_GRID;
    let node = |i: usize| l * i as f64 / n as f64;
    let mut best = Extremum {
        at: node(1),
        value: f64::INFINITY,
    };
    let mut best_i = 1;
    for i in 1..n {
        let v = p.value(node(i))?;
        if v < best.value {
            best = Extremum { at: node(i), value: v };
            best_i = i;
        }
    }
    if best_i > 1 && best_i < n - 1 {
        let r = golden_section_max(|s| Ok(-p.value(s)?), node(best_i - 1), node(best_i + 1), 1e-12 * l)?;
        if -r.value < best.value {
            best = Extremum { at: r.at, value: -r.value };
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::super::preset;
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn sphere_passes() {
        let r = validate(&preset("sphere").unwrap(), 1e-8);
        assert!(r.is_valid(), "{r:?}");
        let m = r.interior_min.unwrap();
        assert!((m.value - (PI / 2048.0).sin()).abs() < 1e-15);
    }

    #[test]
    fn identity_fails_end_value() {
        let r = validate(&Profile::parse("s", 1.0).unwrap(), 1e-8);
        assert!(!r.is_valid());
        let c = r.condition("a(L)=0").unwrap();
        assert!(!c.pass);
        assert_eq!(c.residual, 1.0);
    }

    #[test]
    fn steep_parabola_fails_slope() {
        let r = validate(&Profile::parse("s*(pi-s)", PI).unwrap(), 1e-8);
        let names: Vec<_> = r.failures().map(|c| c.name).collect();
        assert_eq!(names, ["a'(0)=1", "a'(L)=-1"]);
        assert!((r.condition("a'(0)=1").unwrap().residual - (PI - 1.0)).abs() < 1e-14);
    }

    #[test]
    fn presets_pass() {
        for name in ["sphere", "bump:0.5", "dumbbell:0.25", "dumbbell:0.3", "bump:-0.5"] {
            assert!(validate(&preset(name).unwrap(), 1e-8).is_valid(), "{name}");
        }
    }

    #[test]
    fn interior_dip_is_found() {
        // sin(s)*(1 - 1.2*sin(s)^2) goes negative around the equator
        let r = validate(&Profile::parse("sin(s)*(1-1.2*sin(s)^2)", PI).unwrap(), 1e-8);
        let c = r.condition("a>0 on (0,L)").unwrap();
        assert!(!c.pass);
        assert!((c.residual - (-0.2)).abs() < 1e-12);
        assert!((r.interior_min.unwrap().at_s - PI / 2.0).abs() < 1e-6);
    }

    #[test]
    fn evaluation_failure_is_reported() {
        let r = validate(&Profile::parse("ln(s-1)", 3.0).unwrap(), 1e-8);
        assert!(!r.is_valid());
        assert!(r.eval_error.is_some());
    }

    #[test]
    fn sampled_sine_passes() {
        let knots: Vec<f64> = (0..=100).map(|i| PI * f64::from(i) / 100.0).collect();
        let vals = knots.iter().map(|s| s.sin()).collect();
        let p = Profile::from_samples(knots, vals).unwrap();
        let r = validate(&p, 1e-6);
        assert!(r.is_valid(), "{r:?}");
        assert!(r.conditions[..4].iter().all(|c| c.residual < 1e-6));
    }
}
