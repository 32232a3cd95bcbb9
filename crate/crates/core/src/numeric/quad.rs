//! Adaptive Simpson quadrature with Richardson correction.
//!
//! Each of `initial_panels` panels starts with an equal share of the
//! absolute tolerance; a panel is accepted when the two-half Simpson
//! estimate differs from the whole-panel estimate by at most `15·tol`, and
//! otherwise bisected with the tolerance halved. Integrable endpoint
//! singularities of square-root type therefore refine only the branch that
//! touches them, at a cost of roughly `2·log2(1/tol)` levels.
//!
//! The halving stops after `TOL_HALVINGS` levels. Below that the local
//! tolerance stays fixed, so rounding noise that no amount of bisection
//! removes (a square root of a cancelling difference, say) costs a bounded
//! number of extra subintervals instead of exhausting the budget.

use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Overrides [`default_budget`] when set to a positive integer.
pub const BUDGET_ENV: &str = "REVSURF_QUAD_BUDGET";

const DEFAULT_BUDGET: usize = 1_000_000;

/// Depth after which the local tolerance is no longer halved.
pub const TOL_HALVINGS: u32 = 16;

/// Evaluation budget shared by every quadrature call that does not set one
/// explicitly: `REVSURF_QUAD_BUDGET` if set and valid, else 10⁶.
pub fn default_budget() -> usize {
    static BUDGET: OnceLock<usize> = OnceLock::new();
    *BUDGET.get_or_init(|| {
        std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
            .filter(|&n| n > 0)
            .unwrap_or(DEFAULT_BUDGET)
    })
}

#[derive(Debug, Clone, Copy)]
pub struct QuadConfig {
    pub abs_tol: f64,
    pub max_evals: usize,
    pub max_depth: u32,
    pub initial_panels: usize,
}

impl QuadConfig {
    pub fn with_tol(abs_tol: f64) -> Self {
        Self {
            abs_tol,
            ..Self::default()
        }
    }
}

impl Default for QuadConfig {
    fn default() -> Self {
        Self {
            abs_tol: 1e-10,
            max_evals: default_budget(),
            max_depth: 64,
            initial_panels: 8,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Integral {
    pub value: f64,
    pub error_estimate: f64,
    pub evaluations: usize,
}

/// Integrates `f` over `[a, b]`. Reversed bounds negate the result.
pub fn integrate<F>(mut f: F, a: f64, b: f64, cfg: &QuadConfig) -> Result<Integral>
where
    F: FnMut(f64) -> Result<f64>,
{
    if a == b {
        return Ok(Integral {
            value: 0.0,
            error_estimate: 0.0,
            evaluations: 0,
        });
    }
    if b < a {
        let r = integrate(f, b, a, cfg)?;
        return Ok(Integral {
            value: -r.value,
            ..r
        });
    }

    let mut state = State {
        evals: 0,
        budget: cfg.max_evals,
        max_depth: cfg.max_depth,
        error: 0.0,
        a,
        b,
    };
    let n = cfg.initial_panels.max(1);
    let panel_tol = cfg.abs_tol / n as f64;
    let mut total = 0.0;
    let mut x0 = a;
    let mut f0 = state.eval(&mut f, a)?;
    for i in 1..=n {
        let x2 = if i == n { b } else { a + (b - a) * i as f64 / n as f64 };
        let x1 = 0.5 * (x0 + x2);
        let f1 = state.eval(&mut f, x1)?;
        let f2 = state.eval(&mut f, x2)?;
        let whole = simpson(x0, x2, f0, f1, f2);
        total += state.refine(&mut f, Panel { a: x0, b: x2, fa: f0, fm: f1, fb: f2, whole }, panel_tol, 0)?;
        x0 = x2;
        f0 = f2;
    }
    Ok(Integral {
        value: total,
        error_estimate: state.error,
        evaluations: state.evals,
    })
}

#[derive(Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
}

struct State {
    evals: usize,
    budget: usize,
    max_depth: u32,
    error: f64,
    a: f64,
    b: f64,
}

impl State {
    fn eval<F: FnMut(f64) -> Result<f64>>(&mut self, f: &mut F, x: f64) -> Result<f64> {
        if self.evals >= self.budget {
            return Err(Error::Quadrature {
                a: self.a,
                b: self.b,
                budget: self.budget,
            });
        }
        self.evals += 1;
        f(x)
    }

    fn refine<F: FnMut(f64) -> Result<f64>>(&mut self, f: &mut F, p: Panel, tol: f64, depth: u32) -> Result<f64> {
        let m = 0.5 * (p.a + p.b);
        let lm = 0.5 * (p.a + m);
        let rm = 0.5 * (m + p.b);
        let flm = self.eval(f, lm)?;
        let frm = self.eval(f, rm)?;
        let left = simpson(p.a, m, p.fa, flm, p.fm);
        let right = simpson(m, p.b, p.fm, frm, p.fb);
        let delta = left + right - p.whole;
        // Stop when converged, at the depth cap, or when the midpoints no
        // longer separate in floating point.
        if delta.abs() <= 15.0 * tol || depth >= self.max_depth || lm <= p.a || rm >= p.b {
            self.error += delta.abs() / 15.0;
            return Ok(left + right + delta / 15.0);
        }
        let sub_tol = if depth < TOL_HALVINGS { 0.5 * tol } else { tol };
        let l = self.refine(f, Panel { a: p.a, b: m, fa: p.fa, fm: flm, fb: p.fm, whole: left }, sub_tol, depth + 1)?;
        let r = self.refine(f, Panel { a: m, b: p.b, fa: p.fm, fm: frm, fb: p.fb, whole: right }, sub_tol, depth + 1)?;
        Ok(l + r)
    }
}

fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}
