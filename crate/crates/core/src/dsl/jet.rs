//! Order-3 forward-mode jets.
//!
//! A [`Jet3`] carries `(f, f', f'', f''')` at a point. Arithmetic follows
//! the Leibniz rule and composition with a scalar function follows the
//! order-3 Faà di Bruno formula
//!
//! ```text
//! (h∘u)'   = h1 u1
//! (h∘u)''  = h2 u1² + h1 u2
//! (h∘u)''' = h3 u1³ + 3 h2 u1 u2 + h1 u3
//! ```
//!
//! so derivatives are exact up to rounding; there is no truncation error.

use std::ops::{Add, Mul, Neg, Sub};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Jet3 {
    pub v: f64,
    pub d1: f64,
    pub d2: f64,
    pub d3: f64,
}

impl Jet3 {
    pub const fn new(v: f64, d1: f64, d2: f64, d3: f64) -> Self {
        Self { v, d1, d2, d3 }
    }

    pub const fn constant(v: f64) -> Self {
        Self::new(v, 0.0, 0.0, 0.0)
    }

    /// The identity function evaluated at `s`.
    pub const fn variable(s: f64) -> Self {
        Self::new(s, 1.0, 0.0, 0.0)
    }

    pub fn is_finite(&self) -> bool {
        self.v.is_finite() && self.d1.is_finite() && self.d2.is_finite() && self.d3.is_finite()
    }

    /// Composes a scalar function with this jet, given the function's value
    /// and first three derivatives at `self.v`.
    pub fn compose(self, h: [f64; 4]) -> Self {
        let [h0, h1, h2, h3] = h;
        let (u1, u2, u3) = (self.d1, self.d2, self.d3);
        Self {
            v: h0,
            d1: h1 * u1,
            d2: h2 * u1 * u1 + h1 * u2,
            d3: h3 * u1 * u1 * u1 + 3.0 * h2 * u1 * u2 + h1 * u3,
        }
    }

    pub fn scale(self, k: f64) -> Self {
        Self::new(k * self.v, k * self.d1, k * self.d2, k * self.d3)
    }

    pub fn sin(self) -> Self {
        let (s, c) = self.v.sin_cos();
        self.compose([s, c, -s, -c])
    }

    pub fn cos(self) -> Self {
        let (s, c) = self.v.sin_cos();
        self.compose([c, -s, -c, s])
    }

    pub fn tan(self) -> Self {
        let t = self.v.tan();
        let sec2 = 1.0 + t * t;
        self.compose([t, sec2, 2.0 * t * sec2, 2.0 * sec2 * (1.0 + 3.0 * t * t)])
    }

    pub fn exp(self) -> Self {
        let e = self.v.exp();
        self.compose([e, e, e, e])
    }

    /// Natural logarithm; the caller guarantees `self.v > 0`.
    pub fn ln(self) -> Self {
        let r = 1.0 / self.v;
        self.compose([self.v.ln(), r, -r * r, 2.0 * r * r * r])
    }

    /// Square root; the caller guarantees `self.v > 0`.
    pub fn sqrt(self) -> Self {
        let r = self.v.sqrt();
        let r3 = r * r * r;
        self.compose([r, 0.5 / r, -0.25 / r3, 0.375 / (r3 * r * r)])
    }

    /// Absolute value. At a zero the one-sided derivative in the direction
    /// of increasing argument is used.
    pub fn abs(self) -> Self {
        let sign = if self.v != 0.0 {
            self.v.signum()
        } else {
            [self.d1, self.d2, self.d3]
                .into_iter()
                .find(|d| *d != 0.0)
                .map_or(1.0, f64::signum)
        };
        self.scale(sign)
    }

    /// Reciprocal; the caller guarantees `self.v != 0`.
    pub fn recip(self) -> Self {
        let r = 1.0 / self.v;
        let r2 = r * r;
        self.compose([r, -r2, 2.0 * r2 * r, -6.0 * r2 * r2])
    }

    /// `self^p` for a constant exponent.
    ///
    /// Derivative terms whose falling-factorial coefficient vanishes are
    /// dropped before the power is taken, so `s^2` at `s = 0` stays finite.
    pub fn powf(self, p: f64) -> Self {
        let int = p.fract() == 0.0 && p.abs() <= i32::MAX as f64;
        let pow = |k: i32| {
            if int {
                self.v.powi(p as i32 - k)
            } else {
                self.v.powf(p - f64::from(k))
            }
        };
        let mut h = [0.0; 4];
        let mut coef = 1.0;
        for (k, slot) in h.iter_mut().enumerate() {
            *slot = if coef == 0.0 { 0.0 } else { coef * pow(k as i32) };
            coef *= p - k as f64;
        }
        self.compose(h)
    }
}

impl Add for Jet3 {
    type Output = Jet3;
    fn add(self, o: Jet3) -> Jet3 {
        Jet3::new(self.v + o.v, self.d1 + o.d1, self.d2 + o.d2, self.d3 + o.d3)
    }
}

impl Sub for Jet3 {
    type Output = Jet3;
    fn sub(self, o: Jet3) -> Jet3 {
        Jet3::new(self.v - o.v, self.d1 - o.d1, self.d2 - o.d2, self.d3 - o.d3)
    }
}

impl Neg for Jet3 {
    type Output = Jet3;
    fn neg(self) -> Jet3 {
        self.scale(-1.0)
    }
}

impl Mul for Jet3 {
    type Output = Jet3;
    fn mul(self, o: Jet3) -> Jet3 {
        let (f, g) = (self, o);
        Jet3 {
            v: f.v * g.v,
            d1: f.d1 * g.v + f.v * g.d1,
            d2: f.d2 * g.v + 2.0 * f.d1 * g.d1 + f.v * g.d2,
            d3: f.d3 * g.v + 3.0 * f.d2 * g.d1 + 3.0 * f.d1 * g.d2 + f.v * g.d3,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: Jet3, b: [f64; 4], tol: f64) {
        let got = [a.v, a.d1, a.d2, a.d3];
        for (g, w) in got.iter().zip(b) {
            assert!((g - w).abs() <= tol, "{got:?} vs {b:?}");
        }
    }

    #[test]
    fn sine_at_half_pi() {
        close(Jet3::variable(std::f64::consts::FRAC_PI_2).sin(), [1.0, 0.0, -1.0, 0.0], 1e-15);
    }

    #[test]
    fn cube_by_product_and_power_agree() {
        let x = Jet3::variable(1.7);
        let a = x * x * x;
        let b = x.powf(3.0);
        close(a, [b.v, b.d1, b.d2, b.d3], 1e-12);
        close(b, [1.7f64.powi(3), 3.0 * 1.7 * 1.7, 6.0 * 1.7, 6.0], 1e-12);
    }

    #[test]
    fn power_at_zero_stays_finite() {
        let j = Jet3::variable(0.0).powf(2.0);
        assert!(j.is_finite());
        close(j, [0.0, 0.0, 2.0, 0.0], 0.0);
    }

    #[test]
    fn reciprocal_of_x() {
        // d^k/dx^k (1/x) = (-1)^k k! / x^{k+1}
        let x = 2.0;
        close(
            Jet3::variable(x).recip(),
            [0.5, -0.25, 2.0 / 8.0, -6.0 / 16.0],
            1e-15,
        );
    }

    #[test]
    fn exp_ln_inverse() {
        let j = Jet3::variable(0.8).exp().ln();
        close(j, [0.8, 1.0, 0.0, 0.0], 1e-14);
    }

    #[test]
    fn sqrt_of_square() {
        let x = Jet3::variable(1.3);
        close((x * x).sqrt(), [1.3, 1.0, 0.0, 0.0], 1e-14);
    }

    #[test]
    fn abs_one_sided_at_zero() {
        let j = (-Jet3::variable(0.0)).abs();
        // |-s| = s to the right of zero
        close(j, [0.0, 1.0, 0.0, 0.0], 0.0);
        close(Jet3::variable(0.0).abs(), [0.0, 1.0, 0.0, 0.0], 0.0);
    }

    #[test]
    fn tangent_derivatives() {
        let x = 0.4f64;
        let t = x.tan();
        let j = Jet3::variable(x).tan();
        close(j, [t, 1.0 + t * t, 2.0 * t * (1.0 + t * t), 2.0 * (1.0 + t * t) * (1.0 + 3.0 * t * t)], 1e-14);
    }
}
