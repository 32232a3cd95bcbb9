//! The profile function `a: [0, L] → ℝ⁺` of a rotationally symmetric
//! metric `ds² + a(s)² dθ²` on the sphere.
//!
//! `s` is arclength along a meridian from the north pole (`s = 0`) to the
//! south pole (`s = L`) and `a(s)` is the radius of the latitude circle.
//! The metric closes up smoothly at the poles when
//! `a(0) = a(L) = 0`, `a'(0) = 1`, `a'(L) = -1` and `a > 0` in between;
//! [`validate`] checks those conditions, construction does not.

mod presets;
mod samples;
mod validate;

use std::fmt;

use crate::dsl::{parse_expr, Expr, Jet3};
use crate::error::{Error, Result};
use crate::numeric::{integrate, ClampedSpline, QuadConfig};

pub use presets::{preset, PresetInfo, PRESETS};
pub use samples::{read_samples_csv, write_samples_csv};
pub use validate::{validate, Condition, ValidationReport, VALIDATION_GRID};

/// One of the two fixed points of the rotation action.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Pole {
    /// `s = 0`
    North,
    /// `s = L`
    South,
}

impl fmt::Display for Pole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Pole::North => "np",
            Pole::South => "sp",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Source {
    Expression(Expr),
    /// Clamped cubic spline with end slopes `+1` and `-1`.
    Sampled(ClampedSpline),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Profile {
    length: f64,
    /// Homothety factor λ: the profile is `λ·base(s/λ)`.
    scale: f64,
    source: Source,
    label: Option<String>,
}

impl Profile {
    /// Wraps a closed-form expression on `[0, length]`.
    pub fn from_expression(expr: Expr, length: f64) -> Result<Self> {
        if !(length > 0.0 && length.is_finite()) {
            return Err(Error::InvalidProfile(format!("length must be positive, got {length}")));
        }
        Ok(Self {
            length,
            scale: 1.0,
            source: Source::Expression(expr),
            label: None,
        })
    }

    /// Parses `text` and wraps it on `[0, length]`.
    pub fn parse(text: &str, length: f64) -> Result<Self> {
        Self::from_expression(parse_expr(text)?, length)
    }

    /// Interpolates samples with a cubic spline clamped to slopes `+1` at
    /// the first knot and `-1` at the last.
    pub fn from_samples(knots: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        let bad = |m: String| Err(Error::InvalidProfile(m));
        if knots.len() != values.len() {
            return bad(format!("{} knots but {} values", knots.len(), values.len()));
        }
        if knots.len() < 4 {
            return bad(format!("need at least 4 knots, got {}", knots.len()));
        }
        if let Some(x) = knots.iter().chain(&values).find(|x| !x.is_finite()) {
            return bad(format!("non-finite sample {x}"));
        }
        if knots[0] != 0.0 {
            return bad(format!("first knot must be 0, got {}", knots[0]));
        }
        if let Some(i) = knots.windows(2).position(|w| w[1] <= w[0]) {
            return bad(format!("knots must be strictly increasing (knot {} = {} after {})", i + 1, knots[i + 1], knots[i]));
        }
        if let Some(i) = values.iter().position(|&v| v < 0.0) {
            return bad(format!("negative radius {} at knot {i}", values[i]));
        }
        let length = *knots.last().unwrap();
        Ok(Self {
            length,
            scale: 1.0,
            source: Source::Sampled(ClampedSpline::new(knots, values, 1.0, -1.0)),
            label: None,
        })
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn length(&self) -> f64 {
        self.length
    }

    pub fn scale(&self) -> f64 {
        self.scale
    }

    pub fn source(&self) -> &Source {
        &self.source
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    /// `a` and its first three derivatives at `s`.
    pub fn jet(&self, s: f64) -> Result<Jet3> {
        let lambda = self.scale;
        let u = s / lambda;
        let j = match &self.source {
            Source::Expression(e) => e.eval_jet3(u).map_err(|err| match err {
                Error::Domain { message, .. } => Error::Domain { s, message },
                other => other,
            })?,
            Source::Sampled(sp) => sp.jet(u),
        };
        Ok(Jet3::new(lambda * j.v, j.d1, j.d2 / lambda, j.d3 / (lambda * lambda)))
    }

    pub fn value(&self, s: f64) -> Result<f64> {
        Ok(self.jet(s)?.v)
    }

    /// `a'(s)`.
    pub fn slope(&self, s: f64) -> Result<f64> {
        Ok(self.jet(s)?.d1)
    }

    pub fn pole_position(&self, pole: Pole) -> f64 {
        match pole {
            Pole::North => 0.0,
            Pole::South => self.length,
        }
    }

    /// `a'''` at a pole.
    ///
    /// Exact for closed forms. Sampled profiles use the one-sided four-point
    /// difference `(-a₀ + 3a₁ - 3a₂ + a₃)/h³` on the spline with `h` equal
    /// to the end knot spacing, which is accurate to `O(h)`.
    pub fn pole_third_derivative(&self, pole: Pole) -> Result<f64> {
        match &self.source {
            Source::Expression(_) => Ok(self.jet(self.pole_position(pole))?.d3),
            Source::Sampled(sp) => {
                let k = sp.knots();
                let (x0, h) = match pole {
                    Pole::North => (0.0, k[1] - k[0]),
                    Pole::South => (k[k.len() - 1], -(k[k.len() - 1] - k[k.len() - 2])),
                };
                let a = |i: f64| sp.jet(x0 + i * h).v;
                let d3 = (-a(0.0) + 3.0 * a(1.0) - 3.0 * a(2.0) + a(3.0)) / (h * h * h);
                Ok(d3 / (self.scale * self.scale))
            }
        }
    }

    /// The homothety `s ↦ λs, a ↦ λa`. Slopes are unchanged.
    pub fn homothety(&self, lambda: f64) -> Result<Profile> {
        if !(lambda > 0.0 && lambda.is_finite()) {
            return Err(Error::OutOfRange(format!("homothety factor must be positive, got {lambda}")));
        }
        Ok(Profile {
            length: self.length * lambda,
            scale: self.scale * lambda,
            source: self.source.clone(),
            label: self.label.clone(),
        })
    }

    pub(crate) fn check_range(&self, what: &str, s: f64) -> Result<()> {
        if (0.0..=self.length).contains(&s) {
            Ok(())
        } else {
            Err(Error::OutOfRange(format!("{what} = {s} outside [0, {}]", self.length)))
        }
    }
}

/// Surface area `2π ∫₀ᴸ a(s) ds`.
pub fn area(p: &Profile) -> Result<f64> {
    let l = p.length();
    let mut peak: f64 = 0.0;
    for i in 0..=64 {
        peak = peak.max(p.value(l * f64::from(i) / 64.0)?.abs());
    }
    let cfg = QuadConfig::with_tol(1e-11 * (l * peak).max(1e-300).max(1.0));
    let r = integrate(|s| p.value(s), 0.0, l, &cfg)?;
    Ok(std::f64::consts::TAU * r.value)
}

/// Rescales `p` by the homothety with `λ = √(target / area(p))`.
pub fn rescale_to_area(p: &Profile, target: f64) -> Result<Profile> {
    if !(target > 0.0 && target.is_finite()) {
        return Err(Error::OutOfRange(format!("target area must be positive, got {target}")));
    }
    let current = area(p)?;
    p.homothety((target / current).sqrt())
}
