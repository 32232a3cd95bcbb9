//! Closed-form profile expressions in the arclength variable `s`.
//!
//! ```
//! use revsurf::dsl::parse_expr;
//!
//! let a = parse_expr("sin(s)*(1+0.5*sin(s)^2)").unwrap();
//! let j = a.eval_jet3(0.0).unwrap();
//! assert_eq!((j.v, j.d1, j.d2, j.d3), (0.0, 1.0, 0.0, 2.0));
//! ```

mod ast;
mod jet;
mod lexer;
mod parser;

use thiserror::Error;

pub use ast::{BinOp, Expr, Func};
pub use jet::Jet3;
pub use lexer::{tokenize, Token, TokenKind};
pub use parser::parse;

/// Lexical and syntactic errors. Offsets are byte positions in the source.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("lexical error at offset {offset}: unexpected character {ch:?}")]
    Lexical { offset: usize, ch: char },

    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("unbalanced parenthesis at offset {offset}")]
    UnbalancedParen { offset: usize },

    #[error("arity error at offset {offset}: {name} takes exactly one argument, found {found}")]
    Arity {
        offset: usize,
        name: &'static str,
        found: usize,
    },
}

impl ParseError {
    pub fn offset(&self) -> usize {
        match self {
            ParseError::Lexical { offset, .. }
            | ParseError::Syntax { offset, .. }
            | ParseError::UnbalancedParen { offset }
            | ParseError::Arity { offset, .. } => *offset,
        }
    }
}

/// Tokenizes and parses in one step.
pub fn parse_expr(text: &str) -> Result<Expr, ParseError> {
    let tokens = tokenize(text)?;
    parse(&tokens, text.len())
}
