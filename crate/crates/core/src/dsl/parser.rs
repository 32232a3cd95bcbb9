//! Recursive-descent parser.
//!
//! ```text
//! expr   := term (("+"|"-") term)* ;
//! term   := factor (("*"|"/") factor)* ;
//! factor := "-" factor | power ;
//! power  := atom ("^" power)? ;
//! atom   := NUMBER | "pi" | "s" | FN "(" expr ")" | "(" expr ")" ;
//! FN     := "sin"|"cos"|"tan"|"exp"|"ln"|"sqrt"|"abs" ;
//! ```
//!
//! `^` binds tighter than unary minus and associates to the right. Its
//! exponent must not depend on `s`.

use super::ast::{BinOp, Expr, Func};
use super::lexer::{Token, TokenKind};
use super::ParseError;

pub fn parse(tokens: &[Token<'_>], source_len: usize) -> Result<Expr, ParseError> {
    let mut p = Parser {
        tokens,
        pos: 0,
        end: source_len,
    };
    let e = p.expr()?;
    match p.peek() {
        None => Ok(e),
        Some(t) if t.kind == TokenKind::RParen => Err(ParseError::UnbalancedParen { offset: t.offset }),
        Some(t) => Err(ParseError::Syntax {
            offset: t.offset,
            message: format!("unexpected {:?} after complete expression", t.lexeme),
        }),
    }
}

struct Parser<'a, 'src> {
    tokens: &'a [Token<'src>],
    pos: usize,
    end: usize,
}

impl<'src> Parser<'_, 'src> {
    fn peek(&self) -> Option<Token<'src>> {
        self.tokens.get(self.pos).copied()
    }

    fn eat(&mut self, kind: TokenKind) -> Option<Token<'src>> {
        let t = self.peek().filter(|t| t.kind == kind)?;
        self.pos += 1;
        Some(t)
    }

    fn offset(&self) -> usize {
        self.peek().map_or(self.end, |t| t.offset)
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            let op = if self.eat(TokenKind::Plus).is_some() {
                BinOp::Add
            } else if self.eat(TokenKind::Minus).is_some() {
                BinOp::Sub
            } else {
                return Ok(lhs);
            };
            lhs = Expr::binary(op, lhs, self.term()?);
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.factor()?;
        loop {
            let op = if self.eat(TokenKind::Star).is_some() {
                BinOp::Mul
            } else if self.eat(TokenKind::Slash).is_some() {
                BinOp::Div
            } else {
                return Ok(lhs);
            };
            lhs = Expr::binary(op, lhs, self.factor()?);
        }
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        if self.eat(TokenKind::Minus).is_some() {
            return Ok(Expr::neg(self.factor()?));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if self.eat(TokenKind::Caret).is_none() {
            return Ok(base);
        }
        let at = self.offset();
        let exponent = self.power()?;
        if exponent.depends_on_s() {
            return Err(ParseError::Syntax {
                offset: at,
                message: "exponent must be constant (it may not depend on s)".into(),
            });
        }
        Ok(Expr::binary(BinOp::Pow, base, exponent))
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let Some(tok) = self.peek() else {
            return Err(ParseError::Syntax {
                offset: self.end,
                message: "unexpected end of input".into(),
            });
        };
        self.pos += 1;
        match tok.kind {
            TokenKind::Number => Ok(Expr::Const(
                tok.lexeme.parse().expect("lexer validated number literal"),
            )),
            TokenKind::Identifier => match tok.lexeme {
                "s" => Ok(Expr::Var),
                "pi" => Ok(Expr::Pi),
                name => match Func::from_name(name) {
                    Some(f) => self.call(f, tok),
                    None => Err(ParseError::Syntax {
                        offset: tok.offset,
                        message: format!("unknown identifier {name:?}"),
                    }),
                },
            },
            TokenKind::LParen => {
                let inner = self.expr()?;
                self.close_paren(tok)?;
                Ok(inner)
            }
            _ => Err(ParseError::Syntax {
                offset: tok.offset,
                message: format!("unexpected {:?}", tok.lexeme),
            }),
        }
    }

    fn call(&mut self, f: Func, name: Token<'_>) -> Result<Expr, ParseError> {
        let Some(open) = self.eat(TokenKind::LParen) else {
            return Err(ParseError::Syntax {
                offset: self.offset(),
                message: format!("expected '(' after {}", f.name()),
            });
        };
        if self.peek().map(|t| t.kind) == Some(TokenKind::RParen) {
            return Err(ParseError::Arity {
                offset: name.offset,
                name: f.name(),
                found: 0,
            });
        }
        let arg = self.expr()?;
        if self.peek().map(|t| t.kind) == Some(TokenKind::Comma) {
            let mut found = 1;
            while self.eat(TokenKind::Comma).is_some() {
                self.expr()?;
                found += 1;
            }
            return Err(ParseError::Arity {
                offset: name.offset,
                name: f.name(),
                found,
            });
        }
        self.close_paren(open)?;
        Ok(Expr::call(f, arg))
    }

    fn close_paren(&mut self, open: Token<'_>) -> Result<(), ParseError> {
        if self.eat(TokenKind::RParen).is_some() {
            return Ok(());
        }
        match self.peek() {
            None => Err(ParseError::UnbalancedParen { offset: self.end }),
            Some(t) => Err(ParseError::Syntax {
                offset: t.offset,
                message: format!("expected ')' to close '(' at offset {}, found {:?}", open.offset, t.lexeme),
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::parse_expr;
    use super::*;

    fn c(v: f64) -> Expr {
        Expr::Const(v)
    }

    #[test]
    fn bump_profile_tree() {
        let sin_s = || Expr::call(Func::Sin, Expr::Var);
        let want = Expr::binary(
            BinOp::Mul,
            sin_s(),
            Expr::binary(
                BinOp::Add,
                c(1.0),
                Expr::binary(BinOp::Mul, c(0.5), Expr::binary(BinOp::Pow, sin_s(), c(2.0))),
            ),
        );
        assert_eq!(parse_expr("sin(s)*(1+0.5*sin(s)^2)").unwrap(), want);
    }

    #[test]
    fn unary_minus_binds_looser_than_power() {
        assert_eq!(
            parse_expr("-s^2").unwrap(),
            Expr::neg(Expr::binary(BinOp::Pow, Expr::Var, c(2.0)))
        );
    }

    #[test]
    fn power_is_right_associative() {
        assert_eq!(
            parse_expr("s^3^2").unwrap(),
            Expr::binary(BinOp::Pow, Expr::Var, Expr::binary(BinOp::Pow, c(3.0), c(2.0)))
        );
    }

    #[test]
    fn left_associative_arithmetic() {
        assert_eq!(
            parse_expr("s-1-2").unwrap(),
            Expr::binary(BinOp::Sub, Expr::binary(BinOp::Sub, Expr::Var, c(1.0)), c(2.0))
        );
        assert_eq!(
            parse_expr("s/2*3").unwrap(),
            Expr::binary(BinOp::Mul, Expr::binary(BinOp::Div, Expr::Var, c(2.0)), c(3.0))
        );
    }

    #[test]
    fn unbalanced_paren_offset() {
        assert_eq!(
            parse_expr("sin(s").unwrap_err(),
            ParseError::UnbalancedParen { offset: 5 }
        );
        assert_eq!(
            parse_expr("s)").unwrap_err(),
            ParseError::UnbalancedParen { offset: 1 }
        );
    }

    #[test]
    fn arity_errors() {
        assert!(matches!(
            parse_expr("sin()").unwrap_err(),
            ParseError::Arity { found: 0, name: "sin", .. }
        ));
        assert!(matches!(
            parse_expr("cos(s, 2)").unwrap_err(),
            ParseError::Arity { found: 2, .. }
        ));
    }

    #[test]
    fn rejects_variable_exponent() {
        assert!(matches!(
            parse_expr("2^s").unwrap_err(),
            ParseError::Syntax { offset: 2, .. }
        ));
        assert!(parse_expr("s^(2*pi)").is_ok());
        assert!(parse_expr("s^(-1)").is_ok());
    }

    #[test]
    fn rejects_implicit_multiplication() {
        assert!(matches!(
            parse_expr("2s").unwrap_err(),
            ParseError::Syntax { offset: 1, .. }
        ));
    }

    #[test]
    fn misc_syntax_errors() {
        for bad in ["", "s+", "foo(s)", "sin s", "(", "*s", "s,s"] {
            assert!(parse_expr(bad).is_err(), "{bad:?} should fail");
        }
    }
}
