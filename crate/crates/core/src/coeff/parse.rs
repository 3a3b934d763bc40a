//! Parser for the polynomial / rational-function grammar used by the file
//! formats and the CLI: integer or rational coefficients, variables `q`, `s`,
//! `nu`, `^` with integer exponents (negatives allowed), `*`, `/`, `+`, `-`
//! and parentheses.  Example inputs: `q - q^-1`, `(q^2+1)/(q+q^-1)`.

use thiserror::Error;

use super::poly::Var;
use super::{BigInt, RationalFunction};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("unexpected character `{0}` at byte {1}")]
    UnexpectedChar(char, usize),
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("expected {expected} at byte {at}")]
    Expected { expected: &'static str, at: usize },
    #[error("division by zero in constant expression")]
    DivisionByZero,
    #[error("exponent out of range")]
    ExponentRange,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Var(Var),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(input: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let mut toks = Vec::new();
    let bytes = input.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                toks.push((Tok::Plus, i));
                i += 1;
            }
            '-' => {
                toks.push((Tok::Minus, i));
                i += 1;
            }
            '*' => {
                toks.push((Tok::Star, i));
                i += 1;
            }
            '/' => {
                toks.push((Tok::Slash, i));
                i += 1;
            }
            '^' => {
                toks.push((Tok::Caret, i));
                i += 1;
            }
            '(' => {
                toks.push((Tok::LParen, i));
                i += 1;
            }
            ')' => {
                toks.push((Tok::RParen, i));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = input[start..i].parse().expect("digits");
                toks.push((Tok::Int(n), start));
            }
            'q' => {
                toks.push((Tok::Var(Var::Q), i));
                i += 1;
            }
            's' => {
                toks.push((Tok::Var(Var::S), i));
                i += 1;
            }
            'n' => {
                if input[i..].starts_with("nu") {
                    toks.push((Tok::Var(Var::Nu), i));
                    i += 2;
                } else {
                    return Err(ParseError::UnexpectedChar(c, i));
                }
            }
            _ => return Err(ParseError::UnexpectedChar(c, i)),
        }
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn at(&self) -> usize {
        self.toks
            .get(self.pos)
            .map(|(_, p)| *p)
            .unwrap_or(usize::MAX)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    // expr := term (('+' | '-') term)*
    fn expr(&mut self) -> Result<RationalFunction, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = acc + self.term()?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = acc - self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    // term := unary (('*' | '/') unary)*
    fn term(&mut self) -> Result<RationalFunction, ParseError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = acc * self.unary()?;
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let d = self.unary()?;
                    if d.is_zero() {
                        return Err(ParseError::DivisionByZero);
                    }
                    acc = acc / d;
                }
                _ => return Ok(acc),
            }
        }
    }

    // unary := '-' unary | power
    fn unary(&mut self) -> Result<RationalFunction, ParseError> {
        if let Some(Tok::Minus) = self.peek() {
            self.pos += 1;
            return Ok(-self.unary()?);
        }
        self.power()
    }

    // power := atom ('^' signed_int)?
    fn power(&mut self) -> Result<RationalFunction, ParseError> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.pos += 1;
            let neg = if let Some(Tok::Minus) = self.peek() {
                self.pos += 1;
                true
            } else {
                false
            };
            let at = self.at();
            match self.next() {
                Some(Tok::Int(n)) => {
                    let e: i64 = TryFrom::try_from(&n).map_err(|_| ParseError::ExponentRange)?;
                    let e = if neg { -e } else { e };
                    if !base.is_zero() || e > 0 {
                        return Ok(base.pow(e));
                    }
                    return Err(ParseError::DivisionByZero);
                }
                _ => {
                    return Err(ParseError::Expected {
                        expected: "integer exponent",
                        at,
                    })
                }
            }
        }
        Ok(base)
    }

    // atom := int | var | '(' expr ')'
    fn atom(&mut self) -> Result<RationalFunction, ParseError> {
        let at = self.at();
        match self.next() {
            Some(Tok::Int(n)) => Ok(RationalFunction::from_rat(super::BigRat::from_integer(n))),
            Some(Tok::Var(v)) => Ok(RationalFunction::var(v)),
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.next() {
                    Some(Tok::RParen) => Ok(inner),
                    Some(_) => Err(ParseError::Expected {
                        expected: "`)`",
                        at,
                    }),
                    None => Err(ParseError::UnexpectedEnd),
                }
            }
            Some(_) => Err(ParseError::Expected {
                expected: "number, variable or `(`",
                at,
            }),
            None => Err(ParseError::UnexpectedEnd),
        }
    }
}

pub fn parse(input: &str) -> Result<RationalFunction, ParseError> {
    let toks = lex(input)?;
    let mut p = Parser { toks, pos: 0 };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        let (tok, at) = &p.toks[p.pos];
        return Err(ParseError::UnexpectedChar(
            match tok {
                Tok::RParen => ')',
                _ => '?',
            },
            *at,
        ));
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_grammar_examples() {
        assert!(parse("q - q^-1").is_ok());
        assert!(parse("(q^2+1)/(q+q^-1)").is_ok());
        assert!(parse("1/2*q - 3*nu^2").is_ok());
        assert!(parse("-(s - 1)^3").is_ok());
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse("q +").is_err());
        assert!(parse("x").is_err());
        assert!(parse("(q").is_err());
        assert!(parse("q^s").is_err());
        assert!(parse("1/0").is_err());
        assert!(parse("q) + 1").is_err());
    }

    #[test]
    fn arithmetic_meaning() {
        let a = parse("(q - q^-1)*(q + q^-1)").unwrap();
        let b = parse("q^2 - q^-2").unwrap();
        assert_eq!(a, b);
        assert_eq!(parse("2/4").unwrap(), parse("1/2").unwrap());
    }
}
