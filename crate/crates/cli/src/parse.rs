//! Text grammar for monomial ideals.
//!
//! ```text
//! ideal    := monomial (',' monomial)*
//! monomial := factor ('*' factor)*
//! factor   := 'x' INDEX ('^' EXP)?
//! ```
//!
//! `INDEX >= 1`, `EXP >= 1`, whitespace between tokens is ignored and
//! repeated variables inside one monomial add their exponents.

use std::fmt;

use monomial_lab::{ExpVec, MonomialIdeal};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {offset}: {kind}")]
pub struct ParseError {
    pub offset: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Empty,
    Expected(&'static str),
    ZeroIndex,
    ZeroExponent,
    NumberTooLarge,
    TooFewVariables { max_index: usize, nvars: usize },
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::Empty => write!(f, "empty ideal text"),
            ParseErrorKind::Expected(what) => write!(f, "expected {what}"),
            ParseErrorKind::ZeroIndex => write!(f, "variable index must be at least 1"),
            ParseErrorKind::ZeroExponent => write!(f, "exponent must be at least 1"),
            ParseErrorKind::NumberTooLarge => write!(f, "number too large"),
            ParseErrorKind::TooFewVariables { max_index, nvars } => {
                write!(f, "x{max_index} used but only {nvars} variables requested")
            }
        }
    }
}

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err(&self, kind: ParseErrorKind) -> ParseError {
        ParseError {
            offset: self.pos,
            kind,
        }
    }

    fn number(&mut self, what: &'static str) -> Result<(usize, u64), ParseError> {
        self.skip_ws();
        let start = self.pos;
        let mut value: u64 = 0;
        while let Some(&c) = self.src.get(self.pos) {
            if !c.is_ascii_digit() {
                break;
            }
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add(u64::from(c - b'0')))
                .filter(|&v| v <= u64::from(u32::MAX))
                .ok_or(ParseError {
                    offset: start,
                    kind: ParseErrorKind::NumberTooLarge,
                })?;
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err(ParseErrorKind::Expected(what)));
        }
        Ok((start, value))
    }
}

/// Parses `text`; the ambient variable count is the largest index used,
/// or `nvars` when given (which may only enlarge it).
pub fn parse_ideal(text: &str, nvars: Option<usize>) -> Result<MonomialIdeal, ParseError> {
    let mut cur = Cursor {
        src: text.as_bytes(),
        pos: 0,
    };
    if cur.peek().is_none() {
        return Err(cur.err(ParseErrorKind::Empty));
    }
    // (variable index, exponent) pairs per monomial, 1-based indices
    let mut monomials: Vec<Vec<(usize, u32)>> = Vec::new();
    loop {
        let mut factors = Vec::new();
        loop {
            if !cur.eat(b'x') {
                return Err(cur.err(ParseErrorKind::Expected("'x'")));
            }
            let (at, index) = cur.number("variable index")?;
            if index == 0 {
                return Err(ParseError {
                    offset: at,
                    kind: ParseErrorKind::ZeroIndex,
                });
            }
            let mut exp = 1;
            if cur.eat(b'^') {
                let (at, e) = cur.number("exponent")?;
                if e == 0 {
                    return Err(ParseError {
                        offset: at,
                        kind: ParseErrorKind::ZeroExponent,
                    });
                }
                exp = e as u32;
            }
            factors.push((index as usize, exp));
            if !cur.eat(b'*') {
                break;
            }
        }
        monomials.push(factors);
        if !cur.eat(b',') {
            break;
        }
    }
    if cur.peek().is_some() {
        return Err(cur.err(ParseErrorKind::Expected("',' or '*' or end of input")));
    }

    let max_index = monomials
        .iter()
        .flatten()
        .map(|&(i, _)| i)
        .max()
        .unwrap_or(1);
    let n = match nvars {
        Some(nv) if nv < max_index => {
            return Err(ParseError {
                offset: 0,
                kind: ParseErrorKind::TooFewVariables {
                    max_index,
                    nvars: nv,
                },
            })
        }
        Some(nv) => nv,
        None => max_index,
    };
    let mut gens = Vec::with_capacity(monomials.len());
    for factors in monomials {
        let mut v = vec![0u32; n];
        for (i, e) in factors {
            v[i - 1] = v[i - 1].checked_add(e).ok_or(ParseError {
                offset: 0,
                kind: ParseErrorKind::NumberTooLarge,
            })?;
        }
        gens.push(ExpVec::new(v));
    }
    Ok(MonomialIdeal::new(n, gens).expect("vectors built with the ambient length"))
}

/// `x1^2*x3`; the constant monomial prints as `1`.
pub fn format_monomial(m: &ExpVec) -> String {
    let factors: Vec<String> = m
        .entries()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| match e {
            1 => format!("x{}", i + 1),
            _ => format!("x{}^{e}", i + 1),
        })
        .collect();
    if factors.is_empty() {
        "1".to_string()
    } else {
        factors.join("*")
    }
}

/// Canonical text: generators in lex order with `x1 > x2 > ...` (largest
/// first), `0` for the zero ideal.
pub fn format_ideal(ideal: &MonomialIdeal) -> String {
    if ideal.is_zero() {
        return "0".to_string();
    }
    ideal
        .gens()
        .iter()
        .rev()
        .map(format_monomial)
        .collect::<Vec<_>>()
        .join(", ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_examples() {
        let i = parse_ideal("x1^2*x3", Some(3)).unwrap();
        assert_eq!(i.gens(), &[ExpVec::from([2, 0, 1])]);
        let m = parse_ideal("x1*x2, x1*x3, x2*x3", None).unwrap();
        assert_eq!(
            m,
            MonomialIdeal::from_rows(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]).unwrap()
        );
        let sum = parse_ideal(" x2 ^ 2 * x2*x1 ", None).unwrap();
        assert_eq!(sum.gens(), &[ExpVec::from([1, 3])]);
        assert_eq!(parse_ideal("x1", Some(4)).unwrap().ambient_n(), 4);
    }

    #[test]
    fn reports_errors_with_offsets() {
        let err = parse_ideal("x1^0", None).unwrap_err();
        assert_eq!(
            err,
            ParseError {
                offset: 3,
                kind: ParseErrorKind::ZeroExponent
            }
        );
        assert_eq!(
            parse_ideal("x0", None).unwrap_err().kind,
            ParseErrorKind::ZeroIndex
        );
        assert_eq!(
            parse_ideal("   ", None).unwrap_err().kind,
            ParseErrorKind::Empty
        );
        assert_eq!(parse_ideal("x1,", None).unwrap_err().offset, 3);
        assert_eq!(parse_ideal("y1", None).unwrap_err().offset, 0);
        assert_eq!(parse_ideal("x1 x2", None).unwrap_err().offset, 3);
        assert_eq!(
            parse_ideal("x1^", None).unwrap_err().kind,
            ParseErrorKind::Expected("exponent")
        );
        assert_eq!(
            parse_ideal("x1^99999999999", None).unwrap_err().kind,
            ParseErrorKind::NumberTooLarge
        );
        assert!(matches!(
            parse_ideal("x3", Some(2)).unwrap_err().kind,
            ParseErrorKind::TooFewVariables {
                max_index: 3,
                nvars: 2
            }
        ));
    }

    #[test]
    fn prints_canonically() {
        let i = MonomialIdeal::from_rows(2, &[&[0, 3], &[2, 0], &[1, 2]]).unwrap();
        assert_eq!(format_ideal(&i), "x1^2, x1*x2^2, x2^3");
        assert_eq!(format_ideal(&MonomialIdeal::unit(2)), "1");
        assert_eq!(format_ideal(&MonomialIdeal::zero(2)), "0");
    }

    proptest! {
        #[test]
        fn print_then_parse_roundtrips(rows in proptest::collection::vec(proptest::collection::vec(0u32..=4, 3), 1..=5)) {
            let i = MonomialIdeal::new(3, rows.into_iter().map(ExpVec::new)).unwrap();
            prop_assume!(!i.is_unit());
            let text = format_ideal(&i);
            let back = parse_ideal(&text, Some(3)).unwrap();
            prop_assert_eq!(&back, &i);
            prop_assert_eq!(format_ideal(&back), text);
        }
    }
}
