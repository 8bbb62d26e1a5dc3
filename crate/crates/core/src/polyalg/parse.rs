//! Text form of polynomials: the single interchange format.
//!
//! Grammar, loosely: a polynomial is a signed sum of terms; a term is a `*`
//! separated product of factors; a factor is either a rational coefficient
//! (`3`, `-1/2`) or a variable with an optional `^` power (`x0`, `u^4`).
//! `to_string` emits the canonical form (terms in descending lexicographic
//! order of exponent vectors), and parsing that form reproduces an equal
//! polynomial.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::MultiPoly;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Number(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
}

fn tokenize(input: &str) -> Result<Vec<Token>> {
    let mut tokens = Vec::new();
    let mut chars = input.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                chars.next();
            }
            '+' => {
                chars.next();
                tokens.push(Token::Plus);
            }
            '-' => {
                chars.next();
                tokens.push(Token::Minus);
            }
            '*' => {
                chars.next();
                tokens.push(Token::Star);
            }
            '^' => {
                chars.next();
                tokens.push(Token::Caret);
            }
            '/' => {
                chars.next();
                tokens.push(Token::Slash);
            }
            '0'..='9' => {
                let mut digits = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        digits.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                let n: BigInt = digits.parse().expect("digit string");
                tokens.push(Token::Number(n));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut name = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        name.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                tokens.push(Token::Ident(name));
            }
            other => {
                return Err(Error::PolyParse(format!("unexpected character `{other}`")));
            }
        }
    }
    Ok(tokens)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    vars: &'a [String],
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn parse_poly(&mut self) -> Result<MultiPoly> {
        let mut acc = MultiPoly::zero(self.vars);
        let mut negate = false;
        // optional leading sign
        match self.peek() {
            Some(Token::Minus) => {
                self.next();
                negate = true;
            }
            Some(Token::Plus) => {
                self.next();
            }
            _ => {}
        }
        loop {
            let (exps, coeff) = self.parse_term()?;
            let signed = if negate { -coeff } else { coeff };
            acc = acc.checked_add(&MultiPoly::from_terms(self.vars, [(exps, signed)])?)?;
            match self.next() {
                None => break,
                Some(Token::Plus) => negate = false,
                Some(Token::Minus) => negate = true,
                Some(t) => {
                    return Err(Error::PolyParse(format!("expected `+` or `-`, found {t:?}")));
                }
            }
        }
        Ok(acc)
    }

    fn parse_term(&mut self) -> Result<(Vec<u32>, BigRational)> {
        let mut coeff = BigRational::one();
        let mut exps = vec![0u32; self.vars.len()];
        loop {
            self.parse_factor(&mut coeff, &mut exps)?;
            if self.peek() == Some(&Token::Star) {
                self.next();
            } else {
                break;
            }
        }
        Ok((exps, coeff))
    }

    fn parse_factor(&mut self, coeff: &mut BigRational, exps: &mut [u32]) -> Result<()> {
        match self.next() {
            Some(Token::Number(num)) => {
                let mut value = BigRational::from_integer(num);
                if self.peek() == Some(&Token::Slash) {
                    self.next();
                    match self.next() {
                        Some(Token::Number(den)) if !den.is_zero() => {
                            value /= BigRational::from_integer(den);
                        }
                        Some(Token::Number(_)) => {
                            return Err(Error::PolyParse("zero denominator".into()));
                        }
                        other => {
                            return Err(Error::PolyParse(format!(
                                "expected denominator after `/`, found {other:?}"
                            )));
                        }
                    }
                }
                *coeff *= value;
                Ok(())
            }
            Some(Token::Ident(name)) => {
                let idx = self
                    .vars
                    .iter()
                    .position(|v| *v == name)
                    .ok_or(Error::UnknownVariable(name))?;
                let mut power = 1u32;
                if self.peek() == Some(&Token::Caret) {
                    self.next();
                    match self.next() {
                        Some(Token::Number(n)) => {
                            power = n.try_into().map_err(|_| {
                                Error::PolyParse("exponent does not fit in u32".into())
                            })?;
                        }
                        other => {
                            return Err(Error::PolyParse(format!(
                                "expected exponent after `^`, found {other:?}"
                            )));
                        }
                    }
                }
                exps[idx] += power;
                Ok(())
            }
            other => Err(Error::PolyParse(format!(
                "expected coefficient or variable, found {other:?}"
            ))),
        }
    }
}

pub(super) fn parse_poly(input: &str, vars: &[String]) -> Result<MultiPoly> {
    let tokens = tokenize(input)?;
    if tokens.is_empty() {
        return Err(Error::PolyParse("empty input".into()));
    }
    let mut parser = Parser {
        tokens,
        pos: 0,
        vars,
    };
    parser.parse_poly()
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // descending lexicographic order of exponent vectors
        for (i, (exps, coeff)) in self.terms().collect::<Vec<_>>().into_iter().rev().enumerate() {
            let neg = coeff.is_negative();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = coeff.abs();
            let monomial: Vec<String> = self
                .vars()
                .iter()
                .zip(exps)
                .filter(|(_, &e)| e > 0)
                .map(|(v, &e)| if e == 1 { v.clone() } else { format!("{v}^{e}") })
                .collect();
            if monomial.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", monomial.join("*"))?;
            } else {
                write!(f, "{}*{}", mag, monomial.join("*"))?;
            }
        }
        Ok(())
    }
}
