//! Seeded random trigonometric profiles
//! `a(s) = sin(s)·(1 + Σ c_k sin(s)^k)` on `[0, π]`.
//!
//! Any such profile meets the endpoint conditions. Powers start at
//! `k = 2` so that `a''` vanishes at both poles and the metric is smooth
//! there. Draws whose bracket is not positive on `(0, π)` are rejected
//! by the validator and discarded.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::profile::{validate, Profile};

const MIN_POWER: u32 = 2;
const MAX_POWER: u32 = 6;
const MAX_TERMS: usize = 3;
const COEFF_RANGE: f64 = 0.6;

/// Renders `sin(s)*(1 + Σ c_k*sin(s)^k)`.
pub fn trig_profile_text(terms: &[(u32, f64)]) -> String {
    let mut text = String::from("sin(s)*(1");
    for &(k, c) in terms {
        let sign = if c < 0.0 { '-' } else { '+' };
        text.push_str(&format!("{sign}{:?}*sin(s)^{k}", c.abs()));
    }
    text.push(')');
    text
}

/// Draws one valid profile with distinct powers, rejecting invalid draws.
pub fn random_profile<R: Rng + ?Sized>(rng: &mut R) -> Result<Profile> {
    loop {
        let n_terms = rng.gen_range(1..=MAX_TERMS);
        let powers = rand::seq::index::sample(rng, (MAX_POWER - MIN_POWER + 1) as usize, n_terms);
        let terms: Vec<(u32, f64)> = powers
            .into_iter()
            .map(|i| (MIN_POWER + i as u32, rng.gen_range(-COEFF_RANGE..COEFF_RANGE)))
            .collect();
        let text = trig_profile_text(&terms);
        let p = Profile::parse(&text, PI)?.with_label(text);
        if validate(&p, 1e-8).is_valid() {
            return Ok(p);
        }
    }
}

/// `n` valid profiles from a fixed seed.
pub fn random_corpus(seed: u64, n: usize) -> Result<Vec<Profile>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| random_profile(&mut rng)).collect()
}
