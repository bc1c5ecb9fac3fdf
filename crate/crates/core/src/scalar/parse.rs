//! Recursive-descent parser for the ASCII expression grammar:
//!
//! ```text
//! expr     := term (('+'|'-') term)*
//! term     := factor (('*'|'/') factor)*
//! factor   := atom ('^' integer)? | '-' factor | '(' expr ')'
//! atom     := identifier | 'conj' '(' expr ')' | 'I' | rational
//! rational := integer ('/' positive-integer)?
//! ```
//!
//! `I` denotes the imaginary unit. Identifiers are declared unit through a
//! side declaration set, never inline. Division is defined exactly when the
//! divisor is a unit monomial.

use std::collections::BTreeSet;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Zero};

use super::fraction::UnitFraction;
use super::gauss::GaussRat;
use super::symbol::SymbolRef;
use super::ScalarError;

/// A lexeme with its 1-based starting column.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Token {
    Ident(String),
    Int(BigInt),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Comma,
    Arrow,
    LBracket,
    RBracket,
    Equals,
    Eof,
}

/// Tokenizer shared by the expression grammar and the declarative file
/// formats. Identifiers admit one trailing apostrophe so that primed
/// coordinate names can appear in map files.
pub struct Lexer {
    tokens: Vec<(Token, usize)>,
    pos: usize,
}

impl Lexer {
    pub fn tokenize(text: &str) -> Result<Self, ScalarError> {
        let chars: Vec<char> = text.chars().collect();
        let mut tokens = Vec::new();
        let mut i = 0;
        while i < chars.len() {
            let col = i + 1;
            let c = chars[i];
            match c {
                ' ' | '\t' => {
                    i += 1;
                }
                '+' => {
                    tokens.push((Token::Plus, col));
                    i += 1;
                }
                '-' => {
                    if chars.get(i + 1) == Some(&'>') {
                        tokens.push((Token::Arrow, col));
                        i += 2;
                    } else {
                        tokens.push((Token::Minus, col));
                        i += 1;
                    }
                }
                '*' => {
                    tokens.push((Token::Star, col));
                    i += 1;
                }
                '/' => {
                    tokens.push((Token::Slash, col));
                    i += 1;
                }
                '^' => {
                    tokens.push((Token::Caret, col));
                    i += 1;
                }
                '(' => {
                    tokens.push((Token::LParen, col));
                    i += 1;
                }
                ')' => {
                    tokens.push((Token::RParen, col));
                    i += 1;
                }
                ',' => {
                    tokens.push((Token::Comma, col));
                    i += 1;
                }
                '[' => {
                    tokens.push((Token::LBracket, col));
                    i += 1;
                }
                ']' => {
                    tokens.push((Token::RBracket, col));
                    i += 1;
                }
                '=' => {
                    tokens.push((Token::Equals, col));
                    i += 1;
                }
                _ if c.is_ascii_digit() => {
                    let start = i;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                    let text: String = chars[start..i].iter().collect();
                    tokens.push((Token::Int(text.parse().unwrap()), col));
                }
                _ if c.is_ascii_alphabetic() || c == '_' => {
                    let start = i;
                    while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                        i += 1;
                    }
                    if i < chars.len() && chars[i] == '\'' {
                        i += 1;
                    }
                    tokens.push((Token::Ident(chars[start..i].iter().collect()), col));
                }
                _ => {
                    return Err(ScalarError::Syntax {
                        col,
                        msg: format!("unexpected character '{c}'"),
                    })
                }
            }
        }
        tokens.push((Token::Eof, chars.len() + 1));
        Ok(Lexer { tokens, pos: 0 })
    }

    pub fn peek(&self) -> &Token {
        &self.tokens[self.pos].0
    }

    pub fn col(&self) -> usize {
        self.tokens[self.pos].1
    }

    pub fn next_token(&mut self) -> Token {
        let t = self.tokens[self.pos].0.clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    pub fn expect(&mut self, want: &Token, what: &str) -> Result<(), ScalarError> {
        if self.peek() == want {
            self.next_token();
            Ok(())
        } else {
            Err(self.error(format!("expected {what}")))
        }
    }

    pub fn error(&self, msg: String) -> ScalarError {
        ScalarError::Syntax {
            col: self.col(),
            msg,
        }
    }

    pub fn at_eof(&self) -> bool {
        *self.peek() == Token::Eof
    }
}

/// Parse a complete expression. Identifiers listed in `units` become unit
/// symbols; all other identifiers become ordinary symbols.
pub fn parse_expr(text: &str, units: &BTreeSet<String>) -> Result<UnitFraction, ScalarError> {
    let mut lx = Lexer::tokenize(text)?;
    let value = parse_expr_tokens(&mut lx, units)?;
    if !lx.at_eof() {
        return Err(lx.error("unexpected trailing input".to_string()));
    }
    Ok(value)
}

pub(crate) fn parse_expr_tokens(
    lx: &mut Lexer,
    units: &BTreeSet<String>,
) -> Result<UnitFraction, ScalarError> {
    let mut acc = parse_term(lx, units)?;
    loop {
        match lx.peek() {
            Token::Plus => {
                lx.next_token();
                acc = acc.add(&parse_term(lx, units)?);
            }
            Token::Minus => {
                lx.next_token();
                acc = acc.sub(&parse_term(lx, units)?);
            }
            _ => return Ok(acc),
        }
    }
}

fn parse_term(lx: &mut Lexer, units: &BTreeSet<String>) -> Result<UnitFraction, ScalarError> {
    let mut acc = parse_factor(lx, units)?;
    loop {
        match lx.peek() {
            Token::Star => {
                lx.next_token();
                acc = acc.mul(&parse_factor(lx, units)?);
            }
            Token::Slash => {
                let col = lx.col();
                lx.next_token();
                let divisor = parse_factor(lx, units)?;
                acc = acc.div(&divisor).map_err(|e| match e {
                    ScalarError::NotAUnit(what) => ScalarError::NotAUnit(format!(
                        "divisor at column {col} is not a unit monomial: {what}"
                    )),
                    other => other,
                })?;
            }
            _ => return Ok(acc),
        }
    }
}

fn parse_factor(lx: &mut Lexer, units: &BTreeSet<String>) -> Result<UnitFraction, ScalarError> {
    if *lx.peek() == Token::Minus {
        lx.next_token();
        return Ok(parse_factor(lx, units)?.neg());
    }
    let base = if *lx.peek() == Token::LParen {
        lx.next_token();
        let inner = parse_expr_tokens(lx, units)?;
        lx.expect(&Token::RParen, "')'")?;
        inner
    } else {
        parse_atom(lx, units)?
    };
    if *lx.peek() == Token::Caret {
        lx.next_token();
        let negative = if *lx.peek() == Token::Minus {
            lx.next_token();
            true
        } else {
            false
        };
        let exp = match lx.next_token() {
            Token::Int(n) => n,
            _ => return Err(lx.error("expected integer exponent".to_string())),
        };
        let exp: i64 = num::traits::ToPrimitive::to_i64(&exp)
            .ok_or_else(|| lx.error("exponent too large".to_string()))?;
        return base.pow(if negative { -exp } else { exp });
    }
    Ok(base)
}

fn parse_atom(lx: &mut Lexer, units: &BTreeSet<String>) -> Result<UnitFraction, ScalarError> {
    let col = lx.col();
    match lx.next_token() {
        Token::Int(n) => Ok(UnitFraction::constant(GaussRat::new(
            BigRational::new(n, BigInt::one()),
            BigRational::zero(),
        ))),
        Token::Ident(name) if name == "I" => Ok(UnitFraction::constant(GaussRat::i())),
        Token::Ident(name) if name == "conj" => {
            lx.expect(&Token::LParen, "'(' after conj")?;
            let inner = parse_expr_tokens(lx, units)?;
            lx.expect(&Token::RParen, "')'")?;
            Ok(inner.conj())
        }
        Token::Ident(name) if is_identifier(&name) => Ok(UnitFraction::symbol(SymbolRef::new(
            &name,
            units.contains(&name),
        ))),
        _ => Err(ScalarError::Syntax {
            col,
            msg: "expected an atom".to_string(),
        }),
    }
}

fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && name != "I"
        && name != "conj"
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{StarPoly, Symbol};

    fn units() -> BTreeSet<String> {
        ["a"].iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn parses_conjugate_product() {
        let f = parse_expr("a*conj(a)", &units()).unwrap();
        let a = SymbolRef::new("a", true);
        let expected = UnitFraction::from_poly(
            StarPoly::symbol(a.clone()).mul(&StarPoly::symbol(a.conj_symbol())),
        );
        assert_eq!(f, expected);
    }

    #[test]
    fn parses_inverse_law_entry() {
        let f = parse_expr("-b/(a^2*conj(a))", &units()).unwrap();
        assert_eq!(f.to_string(), "-b/(a^2*conj(a))");
    }

    #[test]
    fn syntax_error_with_position() {
        let err = parse_expr("a +", &units()).unwrap_err();
        assert_eq!(
            err,
            ScalarError::Syntax {
                col: 4,
                msg: "expected an atom".to_string()
            }
        );
    }

    #[test]
    fn division_by_non_unit_is_rejected() {
        assert!(matches!(
            parse_expr("1/(a + b)", &units()),
            Err(ScalarError::NotAUnit(_))
        ));
        assert!(matches!(
            parse_expr("c/b", &units()),
            Err(ScalarError::NotAUnit(_))
        ));
    }

    #[test]
    fn rational_literals_and_imaginary_unit() {
        let f = parse_expr("3/4 - 2*I", &units()).unwrap();
        assert_eq!(
            f.as_constant().unwrap(),
            GaussRat::new(
                BigRational::new(BigInt::from(3), BigInt::from(4)),
                BigRational::from(BigInt::from(-2))
            )
        );
    }

    #[test]
    fn negative_exponents_on_units() {
        let f = parse_expr("a^-2", &units()).unwrap();
        assert_eq!(f, parse_expr("1/a^2", &units()).unwrap());
        assert!(parse_expr("b^-1", &units()).is_err());
    }

    #[test]
    fn print_then_parse_is_identity() {
        for text in [
            "a*conj(a)",
            "-b/(a^2*conj(a))",
            "(b*c - e*a*conj(a))/(a^4*conj(a)^2)",
            "1/2*b + I*c",
            "(1 + 2*I)*b*c^2",
            "0",
        ] {
            let f = parse_expr(text, &units()).unwrap();
            let printed = f.to_string();
            let reparsed = parse_expr(&printed, &units()).unwrap();
            assert_eq!(f, reparsed, "round-trip failed for {text} -> {printed}");
            assert_eq!(printed, reparsed.to_string());
        }
    }
}
