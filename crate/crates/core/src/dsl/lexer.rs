use super::ParseError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TokenKind {
    Number,
    Identifier,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Comma,
}

/// A lexeme together with its byte offset in the source text.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Token<'src> {
    pub kind: TokenKind,
    pub lexeme: &'src str,
    pub offset: usize,
}

/// Splits `text` into tokens, skipping whitespace.
///
/// Numbers are unsigned decimal literals with an optional fraction and
/// exponent (`2`, `0.5`, `.25`, `1e-3`). A sign is always a separate token.
pub fn tokenize(text: &str) -> Result<Vec<Token<'_>>, ParseError> {
    let bytes = text.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let kind = match c {
            b'+' => TokenKind::Plus,
            b'-' => TokenKind::Minus,
            b'*' => TokenKind::Star,
            b'/' => TokenKind::Slash,
            b'^' => TokenKind::Caret,
            b'(' => TokenKind::LParen,
            b')' => TokenKind::RParen,
            b',' => TokenKind::Comma,
            b'0'..=b'9' | b'.' => {
                i = scan_number(text, start)?;
                tokens.push(Token {
                    kind: TokenKind::Number,
                    lexeme: &text[start..i],
                    offset: start,
                });
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                i += 1;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                tokens.push(Token {
                    kind: TokenKind::Identifier,
                    lexeme: &text[start..i],
                    offset: start,
                });
                continue;
            }
            _ => {
                let ch = text[start..].chars().next().unwrap_or('\u{fffd}');
                return Err(ParseError::Lexical { offset: start, ch });
            }
        };
        i += 1;
        tokens.push(Token {
            kind,
            lexeme: &text[start..i],
            offset: start,
        });
    }
    Ok(tokens)
}

fn scan_number(text: &str, start: usize) -> Result<usize, ParseError> {
    let bytes = text.as_bytes();
    let digits = |mut i: usize| {
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        i
    };
    let mut i = digits(start);
    let int_digits = i - start;
    let mut frac_digits = 0;
    if i < bytes.len() && bytes[i] == b'.' {
        let j = digits(i + 1);
        frac_digits = j - i - 1;
        i = j;
    }
    if int_digits + frac_digits == 0 {
        return Err(ParseError::Lexical {
            offset: start,
            ch: '.',
        });
    }
    // Exponent only when a digit follows, so "2e" stays number + identifier.
    if i < bytes.len() && (bytes[i] == b'e' || bytes[i] == b'E') {
        let mut j = i + 1;
        if j < bytes.len() && (bytes[j] == b'+' || bytes[j] == b'-') {
            j += 1;
        }
        if j < bytes.len() && bytes[j].is_ascii_digit() {
            i = digits(j);
        }
    }
    match text[start..i].parse::<f64>() {
        Ok(v) if v.is_finite() => Ok(i),
        _ => Err(ParseError::Syntax {
            offset: start,
            message: format!("number literal {:?} is not a finite double", &text[start..i]),
        }),
    }
}
