use std::f64::consts::PI;

use super::Profile;
use crate::error::{Error, Result};

pub struct PresetInfo {
    pub syntax: &'static str,
    pub formula: &'static str,
    pub note: &'static str,
}

pub const PRESETS: [PresetInfo; 3] = [
    PresetInfo {
        syntax: "sphere",
        formula: "a(s) = sin(s), L = pi",
        note: "round unit sphere, K = 1",
    },
    PresetInfo {
        syntax: "bump:<beta>",
        formula: "a(s) = sin(s)*(1+beta*sin(s)^2), L = pi",
        note: "beta > -1; K(np) = 6*beta - 1",
    },
    PresetInfo {
        syntax: "dumbbell:<beta>",
        formula: "a(s) = sin(s)*(1-beta*sin(s)^2), L = pi",
        note: "0 < beta < 1/3",
    },
];

/// Resolves a preset name such as `sphere`, `bump:0.5` or `dumbbell:0.25`.
pub fn preset(name: &str) -> Result<Profile> {
    let (kind, arg) = match name.split_once(':') {
        Some((k, a)) => (k, Some(a)),
        None => (name, None),
    };
    let beta = || -> Result<f64> {
        arg.and_then(|a| a.trim().parse::<f64>().ok())
            .filter(|b| b.is_finite())
            .ok_or_else(|| Error::UnknownPreset(name.to_string()))
    };
    let text = match (kind, arg) {
        ("sphere", None) => "sin(s)".to_string(),
        ("bump", Some(_)) => {
            let b = beta()?;
            if b <= -1.0 {
                return Err(Error::InvalidProfile(format!("bump needs beta > -1, got {b}")));
            }
            format!("sin(s)*(1+{b:?}*sin(s)^2)")
        }
        ("dumbbell", Some(_)) => {
            let b = beta()?;
            if !(b > 0.0 && b < 1.0 / 3.0) {
                return Err(Error::InvalidProfile(format!("dumbbell needs 0 < beta < 1/3, got {b}")));
            }
            format!("sin(s)*(1-{b:?}*sin(s)^2)")
        }
        _ => return Err(Error::UnknownPreset(name.to_string())),
    };
    Ok(Profile::parse(&text, PI)?.with_label(name))
}
