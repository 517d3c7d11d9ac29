//! Text syntax for polynomials.
//!
//! ```text
//! expr   := ["+" | "-"] term { ("+" | "-") term }
//! term   := factor { ["*"] factor }          (juxtaposition multiplies)
//! factor := "-" factor | atom ["^" integer]
//! atom   := integer | identifier | "(" expr ")"
//! ```
//!
//! Integers are reduced modulo the characteristic. An identifier that is not
//! a declared variable is split greedily into the longest declared names, so
//! `xy^3` reads as `x*y^3` in a ring with variables `x, y`. Whitespace is
//! ignored. The printer writes terms in descending monomial order joined by
//! ` + `, with explicit `*` and `^` and coefficients in `[1, p)`.

use std::fmt;

use thiserror::Error;

use crate::error::AlgebraError;
use crate::poly::Polynomial;
use crate::ring::{Monomial, Ring};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnknownVariable(String),
    UnexpectedChar(char),
    UnexpectedToken(String),
    UnexpectedEnd,
    ExponentOverflow,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{kind} at position {position}")]
pub struct ParseError {
    pub kind: ParseErrorKind,
    /// Byte offset into the input.
    pub position: usize,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::UnknownVariable(v) => write!(f, "unknown variable {v:?}"),
            ParseErrorKind::UnexpectedChar(c) => write!(f, "unexpected character {c:?}"),
            ParseErrorKind::UnexpectedToken(t) => write!(f, "unexpected {t}"),
            ParseErrorKind::UnexpectedEnd => write!(f, "unexpected end of input"),
            ParseErrorKind::ExponentOverflow => write!(f, "exponent overflow"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Num(n) => format!("number {n}"),
            Tok::Ident(s) => format!("identifier {s:?}"),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Caret => "'^'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
        }
    }
}

fn lex(text: &str, ring: &Ring) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let start = i;
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
                continue;
            }
            '+' => out.push((Tok::Plus, start)),
            '-' => out.push((Tok::Minus, start)),
            '*' => out.push((Tok::Star, start)),
            '^' => out.push((Tok::Caret, start)),
            '(' => out.push((Tok::LParen, start)),
            ')' => out.push((Tok::RParen, start)),
            '0'..='9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((Tok::Num(text[start..i].to_string()), start));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                split_identifier(ring, &text[start..i], start, &mut out)?;
                continue;
            }
            _ => {
                let ch = text[start..].chars().next().unwrap_or(c);
                return Err(ParseError {
                    kind: ParseErrorKind::UnexpectedChar(ch),
                    position: start,
                });
            }
        }
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    ring: &'a Ring,
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|(_, o)| *o).unwrap_or(self.end)
    }

    fn err<T>(&self, kind: ParseErrorKind) -> Result<T, ParseError> {
        Err(ParseError {
            kind,
            position: self.offset(),
        })
    }

    fn unexpected<T>(&self) -> Result<T, ParseError> {
        match self.peek() {
            Some(t) => self.err(ParseErrorKind::UnexpectedToken(t.describe())),
            None => self.err(ParseErrorKind::UnexpectedEnd),
        }
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut negate = false;
        match self.peek() {
            Some(Tok::Plus) => self.pos += 1,
            Some(Tok::Minus) => {
                self.pos += 1;
                negate = true;
            }
            _ => {}
        }
        let first = self.term()?;
        let mut acc = if negate { -&first } else { first };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = &acc + &t;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = &acc - &t;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    let at = self.offset();
                    let f = self.factor()?;
                    acc = self.product(&acc, &f, at)?;
                }
                Some(Tok::Num(_)) | Some(Tok::Ident(_)) | Some(Tok::LParen) => {
                    let at = self.offset();
                    let f = self.factor()?;
                    acc = self.product(&acc, &f, at)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn product(&self, a: &Polynomial, b: &Polynomial, at: usize) -> Result<Polynomial, ParseError> {
        a.checked_mul(b).map_err(|_| ParseError {
            kind: ParseErrorKind::ExponentOverflow,
            position: at,
        })
    }

    fn factor(&mut self) -> Result<Polynomial, ParseError> {
        if let Some(Tok::Minus) = self.peek() {
            self.pos += 1;
            return Ok(-&self.factor()?);
        }
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.pos += 1;
            let at = self.offset();
            let k = match self.peek() {
                Some(Tok::Num(n)) => {
                    let k: u64 = match n.parse::<u32>() {
                        Ok(k) => k as u64,
                        Err(_) => return self.err(ParseErrorKind::ExponentOverflow),
                    };
                    self.pos += 1;
                    k
                }
                _ => return self.unexpected(),
            };
            return base.pow(k).map_err(|_| ParseError {
                kind: ParseErrorKind::ExponentOverflow,
                position: at,
            });
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                let p = self.ring.characteristic() as u64;
                let c = n.bytes().fold(0u64, |acc, d| (acc * 10 + (d - b'0') as u64) % p);
                Ok(Polynomial::term(self.ring, c as u32, self.ring.one()))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                let i = self.ring.var_index(&name).expect("lexer emits declared names");
                Ok(Polynomial::var(self.ring, i))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    _ => self.unexpected(),
                }
            }
            _ => self.unexpected(),
        }
    }
}

/// Emits one token per declared variable name in `name`.
fn split_identifier(
    ring: &Ring,
    name: &str,
    at: usize,
    out: &mut Vec<(Tok, usize)>,
) -> Result<(), ParseError> {
    if ring.var_index(name).is_some() {
        out.push((Tok::Ident(name.to_string()), at));
        return Ok(());
    }
    let mut rest = name;
    let mut offset = at;
    while !rest.is_empty() {
        let best = ring
            .names()
            .iter()
            .filter(|n| rest.starts_with(n.as_str()))
            .max_by_key(|n| n.len());
        match best {
            Some(n) => {
                out.push((Tok::Ident(n.clone()), offset));
                rest = &rest[n.len()..];
                offset += n.len();
            }
            None => {
                return Err(ParseError {
                    kind: ParseErrorKind::UnknownVariable(rest.to_string()),
                    position: offset,
                })
            }
        }
    }
    Ok(())
}

/// Parses `text` as a polynomial over `ring`.
pub fn parse_poly(text: &str, ring: &Ring) -> Result<Polynomial, AlgebraError> {
    let toks = lex(text, ring)?;
    if toks.is_empty() {
        return Err(ParseError {
            kind: ParseErrorKind::UnexpectedEnd,
            position: 0,
        }
        .into());
    }
    let mut parser = Parser {
        ring,
        toks,
        pos: 0,
        end: text.len(),
    };
    let f = parser.expr()?;
    if parser.pos < parser.toks.len() {
        return Err(parser.unexpected::<()>().unwrap_err().into());
    }
    Ok(f)
}

pub fn print_monomial(ring: &Ring, m: &Monomial) -> String {
    let parts: Vec<String> = m
        .exps()
        .iter()
        .zip(ring.names())
        .filter(|(&e, _)| e > 0)
        .map(|(&e, n)| if e == 1 { n.clone() } else { format!("{n}^{e}") })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

/// Canonical text form; stable for equal polynomials.
pub fn print_poly(f: &Polynomial) -> String {
    if f.is_zero() {
        return "0".into();
    }
    let ring = f.ring();
    f.terms()
        .iter()
        .map(|(c, m)| match (c, m.is_one()) {
            (_, true) => c.to_string(),
            (1, false) => print_monomial(ring, m),
            _ => format!("{c}*{}", print_monomial(ring, m)),
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingSpec;
    use proptest::prelude::*;

    fn r(p: u64) -> Ring {
        RingSpec::new(p, &[("x", 1), ("y", 1)]).unwrap()
    }

    fn parse_err(s: &str, ring: &Ring) -> ParseError {
        match parse_poly(s, ring) {
            Err(AlgebraError::Parse(e)) => e,
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn literal_examples() {
        let f = parse_poly("x^2 + y", &r(2)).unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(print_poly(&f), "x^2 + y");
        assert!(parse_poly("3x", &RingSpec::new(3, &[("x", 1), ("y", 1)]).unwrap())
            .unwrap()
            .is_zero());
        assert_eq!(print_poly(&parse_poly("(x+y)", &r(5)).unwrap()), "x + y");
    }

    #[test]
    fn implicit_products_and_signs() {
        let ring = r(7);
        let f = parse_poly("2xy^3 - (x - y)^2", &ring).unwrap();
        let g = parse_poly("2*x*y^3 - x^2 + 2*x*y - y^2", &ring).unwrap();
        assert_eq!(f, g);
        assert_eq!(print_poly(&parse_poly("-x", &ring).unwrap()), "6*x");
        assert_eq!(print_poly(&parse_poly("x*-y", &ring).unwrap()), "6*x*y");
        assert_eq!(print_poly(&parse_poly("7", &ring).unwrap()), "0");
        assert_eq!(print_poly(&parse_poly("10", &ring).unwrap()), "3");
    }

    #[test]
    fn multi_letter_names() {
        let ring = RingSpec::new(5, &[("a", 1), ("ab", 2), ("b", 1)]).unwrap();
        // Whole-token match wins, then greedy longest prefix.
        assert_eq!(print_poly(&parse_poly("ab", &ring).unwrap()), "ab");
        assert_eq!(print_poly(&parse_poly("abb", &ring).unwrap()), "ab*b");
        assert_eq!(print_poly(&parse_poly("aab", &ring).unwrap()), "a*ab");
    }

    #[test]
    fn errors_carry_positions() {
        let ring = r(2);
        let e = parse_err("x + zz", &ring);
        assert_eq!(e.kind, ParseErrorKind::UnknownVariable("zz".into()));
        assert_eq!(e.position, 4);
        let e = parse_err("xz", &ring);
        assert_eq!(e.kind, ParseErrorKind::UnknownVariable("z".into()));
        assert_eq!(e.position, 1);
        let e = parse_err("x + ", &ring);
        assert_eq!(e.kind, ParseErrorKind::UnexpectedEnd);
        assert_eq!(e.position, 4);
        let e = parse_err("x $ y", &ring);
        assert_eq!(e.kind, ParseErrorKind::UnexpectedChar('$'));
        assert_eq!(e.position, 2);
        let e = parse_err("(x+y", &ring);
        assert_eq!(e.kind, ParseErrorKind::UnexpectedEnd);
        let e = parse_err("x^99999999999", &ring);
        assert_eq!(e.kind, ParseErrorKind::ExponentOverflow);
        assert_eq!(e.position, 2);
        let e = parse_err("x^4000000000 * x^4000000000", &ring);
        assert_eq!(e.kind, ParseErrorKind::ExponentOverflow);
        let e = parse_err("x )", &ring);
        assert_eq!(e.position, 2);
        assert_eq!(parse_err("", &ring).kind, ParseErrorKind::UnexpectedEnd);
    }

    proptest! {
        #[test]
        fn print_then_parse_is_identity(
            p in prop::sample::select(vec![2u64, 3, 5, 101]),
            ts in prop::collection::vec((0u32..200, prop::collection::vec(0u32..5, 3)), 0..7),
        ) {
            let ring = RingSpec::new(p, &[("x", 1), ("y", 2), ("z1", 1)]).unwrap();
            let f = Polynomial::from_terms(&ring, ts.into_iter().map(|(c, e)| (c, ring.monomial(e))).collect());
            let text = print_poly(&f);
            let g = parse_poly(&text, &ring).unwrap();
            prop_assert_eq!(&g, &f);
            prop_assert_eq!(print_poly(&g), text);
        }
    }
}
