#![allow(dead_code)]

use rand::Rng;
use revsurf::dsl::{BinOp, Expr, Func};

/// Random expression that is smooth and finite for `s` in `[0.2, 1.5]`.
/// Partial functions only ever see arguments bounded away from their
/// singularities, and constants are non-negative so the printed form
/// parses back to the same tree.
pub fn smooth_expr<R: Rng + ?Sized>(rng: &mut R, depth: u32) -> Expr {
    if depth == 0 || rng.gen_bool(0.2) {
        return match rng.gen_range(0..4) {
            0 | 1 => Expr::Var,
            2 => Expr::Const((rng.gen_range(0.1..2.0f64) * 100.0).round() / 100.0),
            _ => Expr::Pi,
        };
    }
    let sub = |rng: &mut R| smooth_expr(rng, depth - 1);
    let c = |x: f64| Expr::Const(x);
    match rng.gen_range(0..12) {
        0 => Expr::binary(BinOp::Add, sub(rng), sub(rng)),
        1 => Expr::binary(BinOp::Sub, sub(rng), sub(rng)),
        2 | 3 => Expr::binary(BinOp::Mul, sub(rng), sub(rng)),
        4 => Expr::binary(BinOp::Div, sub(rng), Expr::binary(BinOp::Add, c(2.0), Expr::call(Func::Cos, sub(rng)))),
        5 => Expr::call(Func::Sin, sub(rng)),
        6 => Expr::call(Func::Cos, sub(rng)),
        7 => Expr::call(Func::Exp, Expr::call(Func::Sin, sub(rng))),
        8 => {
            let inner = sub(rng);
            let sq = Expr::binary(BinOp::Mul, inner.clone(), inner);
            let f = if rng.gen_bool(0.5) { Func::Ln } else { Func::Sqrt };
            Expr::call(f, Expr::binary(BinOp::Add, c(1.0), sq))
        }
        9 => Expr::call(Func::Tan, Expr::binary(BinOp::Mul, c(0.3), Expr::call(Func::Sin, sub(rng)))),
        10 => {
            let k = [2.0, 3.0, 0.5, 1.5][rng.gen_range(0..4)];
            let base = Expr::binary(BinOp::Add, c(1.5), Expr::call(Func::Sin, sub(rng)));
            Expr::binary(BinOp::Pow, base, c(k))
        }
        _ => Expr::neg(Expr::call(Func::Abs, Expr::binary(BinOp::Add, c(2.0), Expr::call(Func::Sin, sub(rng))))),
    }
}

/// Central difference estimates of the first three derivatives with
/// step `h`.
pub fn central_differences(f: &dyn Fn(f64) -> f64, s: f64, h: f64) -> [f64; 3] {
    let (m2, m1, z, p1, p2) = (f(s - 2.0 * h), f(s - h), f(s), f(s + h), f(s + 2.0 * h));
    [
        (p1 - m1) / (2.0 * h),
        (p1 - 2.0 * z + m1) / (h * h),
        (p2 - 2.0 * p1 + 2.0 * m1 - m2) / (2.0 * h * h * h),
    ]
}

/// Starting step sizes for the derivative-order study, chosen so that
/// truncation error dominates rounding for each order.
pub const FD_STEPS: [f64; 3] = [1e-2, 2e-2, 5e-2];

/// Outcome of comparing one jet component against finite differences.
#[derive(Debug, Clone, Copy)]
pub struct OrderCheck {
    /// `log2(e(h) / e(h/2))` in the asymptotic regime, or `None` when the
    /// error reached the rounding floor first and the ratio carries no
    /// information.
    pub order: Option<f64>,
    /// `|R - J|` with `R` the Richardson extrapolation of the last two
    /// differences.
    pub richardson_error: f64,
    /// `|D(h/2) - J|` for the finer of those differences.
    pub fine_error: f64,
    /// Error level below which rounding dominates.
    pub floor: f64,
    pub scale: f64,
    pub step: f64,
}

/// Convergence study for derivative `k + 1`: the step is halved from
/// `FD_STEPS[k]` until two successive observed orders agree to 0.1, which
/// marks the asymptotic regime for functions with large high derivatives.
pub fn order_check(f: &dyn Fn(f64) -> f64, jet: [f64; 3], s: f64, k: usize) -> OrderCheck {
    let scale = 1.0 + jet[k].abs();
    let floor = 1e-7 * scale;
    let err = |h: f64| (central_differences(f, s, h)[k] - jet[k]).abs();
    let mut h = FD_STEPS[k];
    let mut previous: Option<f64> = None;
    for _ in 0..8 {
        let (coarse, fine) = (central_differences(f, s, h)[k], central_differences(f, s, h / 2.0)[k]);
        let richardson_error = ((4.0 * fine - coarse) / 3.0 - jet[k]).abs();
        let (ec, ef) = (err(h), err(h / 2.0));
        if ec <= floor || ef == 0.0 {
            return OrderCheck { order: None, richardson_error, fine_error: ef, floor, scale, step: h };
        }
        let order = (ec / ef).log2();
        if previous.is_some_and(|p| (p - order).abs() < 0.1) {
            return OrderCheck { order: Some(order), richardson_error, fine_error: ef, floor, scale, step: h };
        }
        previous = Some(order);
        h /= 2.0;
    }
    OrderCheck {
        order: previous,
        richardson_error: f64::INFINITY,
        fine_error: f64::INFINITY,
        floor,
        scale,
        step: h,
    }
}

/// `a'(s)` of the bump family `sin(s)(1 + β sin² s)` from the product
/// rule, independent of the expression machinery.
pub fn bump_slope(beta: f64, s: f64) -> f64 {
    s.cos() * (1.0 + 3.0 * beta * s.sin().powi(2))
}

/// Maximum of `|g|` over `n` uniform samples of `[0, L]`.
pub fn dense_grid_max_abs(g: impl Fn(f64) -> f64, l: f64, n: usize) -> (f64, f64) {
    (0..n)
        .map(|i| {
            let s = l * i as f64 / (n - 1) as f64;
            (s, g(s).abs())
        })
        .fold((0.0, f64::NEG_INFINITY), |best, x| if x.1 > best.1 { x } else { best })
}

impl OrderCheck {
    /// Extrapolation must at least halve the error of the finer
    /// difference, unless both are already at the rounding floor.
    pub fn richardson_improves(&self) -> bool {
        self.richardson_error <= (0.5 * self.fine_error).max(self.floor)
    }
}
