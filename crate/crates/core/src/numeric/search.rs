//! Grid scan followed by golden-section refinement.

use crate::error::Result;

const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Location and value of an extremum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Extremum {
    pub at: f64,
    pub value: f64,
}

/// Golden-section search for a maximum of a unimodal `f` on `[lo, hi]`,
/// stopping once the bracket is narrower than `width`.
pub fn golden_section_max<F>(mut f: F, mut lo: f64, mut hi: f64, width: f64) -> Result<Extremum>
where
    F: FnMut(f64) -> Result<f64>,
{
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = f(x1)?;
    let mut f2 = f(x2)?;
    // 200 iterations shrink any bracket by 0.618^200 ≈ 1e-42.
    for _ in 0..200 {
        if hi - lo <= width {
            break;
        }
        if f1 >= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = f(x1)?;
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2)?;
        }
    }
    Ok(if f1 >= f2 {
        Extremum { at: x1, value: f1 }
    } else {
        Extremum { at: x2, value: f2 }
    })
}

/// Number of grid local maxima that are refined.
pub const REFINED_CANDIDATES: usize = 8;

/// Maximizes `f` over `[lo, hi]`: samples `n` uniform points (both
/// endpoints included), then refines with golden-section search in the
/// two cells around each of the `REFINED_CANDIDATES` highest discrete
/// local maxima. Refining several peaks catches an interior maximum that
/// falls between samples while a lower-curvature peak wins on the grid.
/// The result is never worse than the best sample.
pub fn maximize<F>(mut f: F, lo: f64, hi: f64, n: usize, width: f64) -> Result<Extremum>
where
    F: FnMut(f64) -> Result<f64>,
{
    assert!(n >= 2 && hi > lo);
    let step = (hi - lo) / (n - 1) as f64;
    let at = |i: usize| if i == n - 1 { hi } else { lo + step * i as f64 };
    let values = (0..n).map(|i| f(at(i))).collect::<Result<Vec<f64>>>()?;

    let mut peaks: Vec<usize> = (0..n)
        .filter(|&i| (i == 0 || values[i] >= values[i - 1]) && (i == n - 1 || values[i] >= values[i + 1]))
        .collect();
    peaks.sort_by(|&i, &j| values[j].total_cmp(&values[i]).then(i.cmp(&j)));
    peaks.dedup_by(|b, a| b.abs_diff(*a) == 1);

    let mut best = Extremum {
        at: at(peaks[0]),
        value: values[peaks[0]],
    };
    for &i in peaks.iter().take(REFINED_CANDIDATES) {
        let a = at(i.saturating_sub(1));
        let b = at((i + 1).min(n - 1));
        let refined = golden_section_max(&mut f, a, b, width)?;
        if refined.value > best.value {
            best = refined;
        }
    }
    Ok(best)
}

/// Minimizing counterpart of [`maximize`].
pub fn minimize<F>(mut f: F, lo: f64, hi: f64, n: usize, width: f64) -> Result<Extremum>
where
    F: FnMut(f64) -> Result<f64>,
{
    let e = maximize(|x| f(x).map(|v| -v), lo, hi, n, width)?;
    Ok(Extremum {
        at: e.at,
        value: -e.value,
    })
}
