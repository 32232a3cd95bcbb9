use std::fmt;

use super::jet::Jet3;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
    Pow,
}

impl BinOp {
    pub fn symbol(self) -> char {
        match self {
            BinOp::Add => '+',
            BinOp::Sub => '-',
            BinOp::Mul => '*',
            BinOp::Div => '/',
            BinOp::Pow => '^',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Func {
    Sin,
    Cos,
    Tan,
    Exp,
    Ln,
    Sqrt,
    Abs,
}

impl Func {
    pub const ALL: [Func; 7] = [
        Func::Sin,
        Func::Cos,
        Func::Tan,
        Func::Exp,
        Func::Ln,
        Func::Sqrt,
        Func::Abs,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Func::Sin => "sin",
            Func::Cos => "cos",
            Func::Tan => "tan",
            Func::Exp => "exp",
            Func::Ln => "ln",
            Func::Sqrt => "sqrt",
            Func::Abs => "abs",
        }
    }

    pub fn from_name(name: &str) -> Option<Func> {
        Func::ALL.into_iter().find(|f| f.name() == name)
    }
}

/// A closed-form expression in the single variable `s`.
///
/// The parser guarantees that the right operand of [`BinOp::Pow`] does not
/// depend on `s`.
#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Const(f64),
    Pi,
    Var,
    Neg(Box<Expr>),
    Binary(BinOp, Box<Expr>, Box<Expr>),
    Call(Func, Box<Expr>),
}

impl Expr {
    pub fn binary(op: BinOp, l: Expr, r: Expr) -> Expr {
        Expr::Binary(op, Box::new(l), Box::new(r))
    }

    pub fn call(f: Func, arg: Expr) -> Expr {
        Expr::Call(f, Box::new(arg))
    }

    pub fn neg(e: Expr) -> Expr {
        Expr::Neg(Box::new(e))
    }

    pub fn depends_on_s(&self) -> bool {
        match self {
            Expr::Const(_) | Expr::Pi => false,
            Expr::Var => true,
            Expr::Neg(e) | Expr::Call(_, e) => e.depends_on_s(),
            Expr::Binary(_, l, r) => l.depends_on_s() || r.depends_on_s(),
        }
    }

    /// Plain double-precision evaluation.
    pub fn eval(&self, s: f64) -> Result<f64> {
        let v = match self {
            Expr::Const(c) => *c,
            Expr::Pi => std::f64::consts::PI,
            Expr::Var => s,
            Expr::Neg(e) => -e.eval(s)?,
            Expr::Binary(op, l, r) => {
                let (a, b) = (l.eval(s)?, r.eval(s)?);
                match op {
                    BinOp::Add => a + b,
                    BinOp::Sub => a - b,
                    BinOp::Mul => a * b,
                    BinOp::Div => {
                        if b == 0.0 {
                            return Err(domain(s, "division by zero"));
                        }
                        a / b
                    }
                    BinOp::Pow => a.powf(b),
                }
            }
            Expr::Call(f, e) => {
                let x = e.eval(s)?;
                match f {
                    Func::Sin => x.sin(),
                    Func::Cos => x.cos(),
                    Func::Tan => x.tan(),
                    Func::Exp => x.exp(),
                    Func::Ln => {
                        if x <= 0.0 {
                            return Err(domain(s, format!("ln of non-positive value {x}")));
                        }
                        x.ln()
                    }
                    Func::Sqrt => {
                        if x < 0.0 {
                            return Err(domain(s, format!("sqrt of negative value {x}")));
                        }
                        x.sqrt()
                    }
                    Func::Abs => x.abs(),
                }
            }
        };
        if v.is_finite() {
            Ok(v)
        } else {
            Err(domain(s, format!("non-finite result in `{self}`")))
        }
    }

    /// Value and first three derivatives with respect to `s`.
    pub fn eval_jet3(&self, s: f64) -> Result<Jet3> {
        let j = match self {
            Expr::Const(c) => Jet3::constant(*c),
            Expr::Pi => Jet3::constant(std::f64::consts::PI),
            Expr::Var => Jet3::variable(s),
            Expr::Neg(e) => -e.eval_jet3(s)?,
            Expr::Binary(op, l, r) => {
                if *op == BinOp::Pow {
                    let base = l.eval_jet3(s)?;
                    let p = r.eval(s)?;
                    if base.v == 0.0 && p < 0.0 {
                        return Err(domain(s, "division by zero"));
                    }
                    if base.v < 0.0 && p.fract() != 0.0 {
                        return Err(domain(s, format!("non-integer power of negative value {}", base.v)));
                    }
                    base.powf(p)
                } else {
                    let (a, b) = (l.eval_jet3(s)?, r.eval_jet3(s)?);
                    match op {
                        BinOp::Add => a + b,
                        BinOp::Sub => a - b,
                        BinOp::Mul => a * b,
                        BinOp::Div => {
                            if b.v == 0.0 {
                                return Err(domain(s, "division by zero"));
                            }
                            a * b.recip()
                        }
                        BinOp::Pow => unreachable!(),
                    }
                }
            }
            Expr::Call(f, e) => {
                let u = e.eval_jet3(s)?;
                match f {
                    Func::Sin => u.sin(),
                    Func::Cos => u.cos(),
                    Func::Tan => u.tan(),
                    Func::Exp => u.exp(),
                    Func::Ln => {
                        if u.v <= 0.0 {
                            return Err(domain(s, format!("ln of non-positive value {}", u.v)));
                        }
                        u.ln()
                    }
                    Func::Sqrt => {
                        // sqrt is not differentiable at 0
                        if u.v <= 0.0 {
                            return Err(domain(s, format!("sqrt jet needs a positive argument, got {}", u.v)));
                        }
                        u.sqrt()
                    }
                    Func::Abs => u.abs(),
                }
            }
        };
        if j.is_finite() {
            Ok(j)
        } else {
            Err(domain(s, format!("non-finite derivative in `{self}`")))
        }
    }
}

fn domain(s: f64, message: impl Into<String>) -> Error {
    Error::Domain {
        s,
        message: message.into(),
    }
}

/// Fully parenthesized rendering that reparses to an identical tree.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Const(c) => write!(f, "{c:?}"),
            Expr::Pi => f.write_str("pi"),
            Expr::Var => f.write_str("s"),
            Expr::Neg(e) => write!(f, "(-{e})"),
            Expr::Binary(op, l, r) => write!(f, "({l}{}{r})", op.symbol()),
            Expr::Call(func, e) => write!(f, "{}({e})", func.name()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_is_fully_parenthesized() {
        let e = Expr::binary(
            BinOp::Mul,
            Expr::call(Func::Sin, Expr::Var),
            Expr::neg(Expr::binary(BinOp::Pow, Expr::Var, Expr::Const(2.0))),
        );
        assert_eq!(e.to_string(), "(sin(s)*(-(s^2.0)))");
    }

    #[test]
    fn domain_errors_carry_the_point() {
        let e = Expr::call(Func::Ln, Expr::Var);
        match e.eval_jet3(-1.0) {
            Err(Error::Domain { s, .. }) => assert_eq!(s, -1.0),
            other => panic!("{other:?}"),
        }
        let d = Expr::binary(BinOp::Div, Expr::Const(1.0), Expr::Var);
        assert!(matches!(d.eval(0.0), Err(Error::Domain { .. })));
        assert!(matches!(d.eval_jet3(0.0), Err(Error::Domain { .. })));
    }

    #[test]
    fn negative_power_at_zero_is_division_by_zero() {
        let e = Expr::binary(BinOp::Pow, Expr::Var, Expr::neg(Expr::Const(1.0)));
        assert!(e.eval_jet3(0.0).is_err());
        assert!(e.eval_jet3(2.0).is_ok());
    }
}
