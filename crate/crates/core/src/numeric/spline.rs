//! Cubic spline with clamped (prescribed first-derivative) end conditions.

use crate::dsl::Jet3;

#[derive(Debug, Clone, PartialEq)]
pub struct ClampedSpline {
    knots: Vec<f64>,
    values: Vec<f64>,
    /// Second derivatives at the knots.
    moments: Vec<f64>,
}

impl ClampedSpline {
    /// Builds the spline through `(knots[i], values[i])` with end slopes
    /// `slope_start` and `slope_end`. Knots must be strictly increasing and
    /// there must be at least two of them; the caller checks this.
    pub fn new(knots: Vec<f64>, values: Vec<f64>, slope_start: f64, slope_end: f64) -> Self {
        let n = knots.len();
        debug_assert!(n >= 2 && values.len() == n);
        let h: Vec<f64> = knots.windows(2).map(|w| w[1] - w[0]).collect();
        let secant = |i: usize| (values[i + 1] - values[i]) / h[i];

        // Tridiagonal system for the moments M_i.
        let mut sub = vec![0.0; n];
        let mut diag = vec![0.0; n];
        let mut sup = vec![0.0; n];
        let mut rhs = vec![0.0; n];
        diag[0] = 2.0 * h[0];
        sup[0] = h[0];
        rhs[0] = 6.0 * (secant(0) - slope_start);
        for i in 1..n - 1 {
            sub[i] = h[i - 1];
            diag[i] = 2.0 * (h[i - 1] + h[i]);
            sup[i] = h[i];
            rhs[i] = 6.0 * (secant(i) - secant(i - 1));
        }
        sub[n - 1] = h[n - 2];
        diag[n - 1] = 2.0 * h[n - 2];
        rhs[n - 1] = 6.0 * (slope_end - secant(n - 2));

        let moments = solve_tridiagonal(&sub, &mut diag, &sup, &mut rhs);
        Self {
            knots,
            values,
            moments,
        }
    }

    pub fn knots(&self) -> &[f64] {
        &self.knots
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Value and first three derivatives at `x`. Outside the knot range the
    /// end cubic is extended.
    pub fn jet(&self, x: f64) -> Jet3 {
        let n = self.knots.len();
        let i = self.knots.partition_point(|&k| k <= x).clamp(1, n - 1) - 1;
        let (x0, x1) = (self.knots[i], self.knots[i + 1]);
        let (y0, y1) = (self.values[i], self.values[i + 1]);
        let (m0, m1) = (self.moments[i], self.moments[i + 1]);
        let h = x1 - x0;
        let (l, r) = (x1 - x, x - x0);
        let c0 = y0 / h - m0 * h / 6.0;
        let c1 = y1 / h - m1 * h / 6.0;
        Jet3 {
            v: (m0 * l * l * l + m1 * r * r * r) / (6.0 * h) + c0 * l + c1 * r,
            d1: (m1 * r * r - m0 * l * l) / (2.0 * h) - c0 + c1,
            d2: (m0 * l + m1 * r) / h,
            d3: (m1 - m0) / h,
        }
    }
}

fn solve_tridiagonal(sub: &[f64], diag: &mut [f64], sup: &[f64], rhs: &mut [f64]) -> Vec<f64> {
    let n = diag.len();
    for i in 1..n {
        let w = sub[i] / diag[i - 1];
        diag[i] -= w * sup[i - 1];
        rhs[i] -= w * rhs[i - 1];
    }
    let mut x = vec![0.0; n];
    x[n - 1] = rhs[n - 1] / diag[n - 1];
    for i in (0..n - 1).rev() {
        x[i] = (rhs[i] - sup[i] * x[i + 1]) / diag[i];
    }
    x
}
