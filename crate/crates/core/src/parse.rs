//! Polynomial text grammar.
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := '-' factor | power
//! power  := atom ['^' integer]
//! atom   := integer ['/' integer] | identifier | '(' expr ')'
//! ```
//!
//! Multiplication is always explicit: `2x` and `x y` are syntax errors.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebra::{Field, MultiPoly, Rational, Rationals};
use crate::error::{Error, Result};

const MAX_EXPONENT: u32 = 100_000;

/// Parsed polynomial together with its source text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyExpression<K: Field> {
    pub source: String,
    pub poly: MultiPoly<K>,
}

impl<K: Field> PolyExpression<K> {
    pub fn vars(&self) -> &[String] {
        self.poly.vars()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = text[start..i].parse().expect("digits");
                out.push((start, Tok::Num(n)));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(text[start..i].to_string())));
                continue;
            }
            _ => {
                return Err(Error::Syntax { offset: start, message: format!("unexpected character `{}`", text[start..].chars().next().unwrap_or('?')) });
            }
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    vars: &'a [String],
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|(o, _)| *o).unwrap_or(self.end)
    }

    fn err<T>(&self, message: &str) -> Result<T> {
        let message = match self.peek() {
            None => format!("{message}, found end of input"),
            Some(_) => message.to_string(),
        };
        Err(Error::Syntax { offset: self.offset(), message })
    }

    fn constant(&self, c: Rational) -> MultiPoly<Rationals> {
        MultiPoly::constant_in(Rationals, self.vars.to_vec(), c)
    }

    fn expr(&mut self) -> Result<MultiPoly<Rationals>> {
        let mut acc = if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            -&self.term()?
        } else {
            self.term()?
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly<Rationals>> {
        let mut acc = self.factor()?;
        while self.peek() == Some(&Tok::Star) {
            self.pos += 1;
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<MultiPoly<Rationals>> {
        if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            return Ok(-&self.factor()?);
        }
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            let e = match self.peek() {
                Some(Tok::Num(n)) => n.clone(),
                _ => return self.err("expected integer exponent"),
            };
            let e: u32 = match u32::try_from(&e) {
                Ok(e) if e <= MAX_EXPONENT => e,
                _ => return self.err("exponent too large"),
            };
            self.pos += 1;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<MultiPoly<Rationals>> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                if self.peek() == Some(&Tok::Slash) {
                    self.pos += 1;
                    let d = match self.peek() {
                        Some(Tok::Num(d)) => d.clone(),
                        _ => return self.err("expected integer denominator"),
                    };
                    if d.is_zero() {
                        return self.err("zero denominator");
                    }
                    self.pos += 1;
                    return Ok(self.constant(Rational::new(n, d)));
                }
                Ok(self.constant(Rational::from_integer(n)))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                MultiPoly::var_in(Rationals, self.vars.to_vec(), &name)
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return self.err("expected `)`");
                }
                self.pos += 1;
                Ok(e)
            }
            _ => self.err("expected number, variable or `(`"),
        }
    }
}

/// Parses over Q.
pub fn parse_rational(text: &str, vars: &[&str]) -> Result<MultiPoly<Rationals>> {
    let vars: Vec<String> = vars.iter().map(|v| v.to_string()).collect();
    parse_in(text, &vars)
}

fn parse_in(text: &str, vars: &[String]) -> Result<MultiPoly<Rationals>> {
    let toks = tokenize(text)?;
    let mut p = Parser { toks, pos: 0, end: text.len(), vars };
    let poly = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("expected operator");
    }
    Ok(poly)
}

/// Parses `text` over the variables `vars` (in this order) into the field
/// `field`. Fraction literals must have a denominator invertible in `field`.
pub fn parse_poly<K: Field>(text: &str, vars: &[String], field: K) -> Result<PolyExpression<K>> {
    let q = parse_in(text, vars)?;
    let mut bad = false;
    let poly = q.map_field(field.clone(), |c| {
        field.from_rational(c).unwrap_or_else(|| {
            bad = true;
            field.zero()
        })
    });
    if bad {
        return Err(Error::InvalidInput(format!("a fraction denominator vanishes in {}", field.name())));
    }
    Ok(PolyExpression { source: text.to_string(), poly })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, PrimeField};

    fn xyt() -> Vec<String> {
        ["x", "y", "t"].iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn example_family() {
        let f = parse_poly("y^3 - x^4 + 6*t*x^3 - 11*t^2*x^2 + 6*t^3*x", &xyt(), Rationals).unwrap().poly;
        assert_eq!(f.num_terms(), 5);
        assert_eq!(f.coeff(&[3, 0, 1]), int(6));
        assert_eq!(f.coeff(&[2, 0, 2]), int(-11));
        let g = parse_poly("x^3 + y^3 - 1729", &xyt(), Rationals).unwrap().poly;
        assert_eq!(g.constant_term(), int(-1729));
    }

    #[test]
    fn syntax_errors_carry_offsets() {
        let e = parse_poly("x + + y", &xyt(), Rationals).unwrap_err();
        assert!(matches!(e, Error::Syntax { offset: 4, .. }), "{e:?}");
        let e = parse_poly("2x", &xyt(), Rationals).unwrap_err();
        assert!(matches!(e, Error::Syntax { offset: 1, .. }), "{e:?}");
        let e = parse_poly("(x + y", &xyt(), Rationals).unwrap_err();
        assert!(matches!(e, Error::Syntax { offset: 6, .. }), "{e:?}");
        assert!(matches!(parse_poly("", &xyt(), Rationals), Err(Error::Syntax { offset: 0, .. })));
        assert!(matches!(parse_poly("x $ y", &xyt(), Rationals), Err(Error::Syntax { offset: 2, .. })));
    }

    #[test]
    fn unknown_variable() {
        assert_eq!(parse_poly("x + z", &xyt(), Rationals).unwrap_err(), Error::UnknownVariable("z".into()));
    }

    #[test]
    fn fractions_and_prime_fields() {
        let f = parse_poly("1/2*x - -3/4", &xyt(), Rationals).unwrap().poly;
        assert_eq!(f.constant_term(), crate::algebra::rat(3, 4));
        let f7 = PrimeField::new(7).unwrap();
        let g = parse_poly("1/2*x + 8", &xyt(), f7).unwrap().poly;
        assert_eq!(g.coeff(&[1, 0, 0]), 4);
        assert_eq!(g.constant_term(), 1);
        assert!(parse_poly("1/7*x", &xyt(), f7).is_err());
    }

    #[test]
    fn display_round_trip() {
        let f = parse_poly("-(x - 2/3*y)^3 * (t + 1) + 5", &xyt(), Rationals).unwrap().poly;
        let again = parse_poly(&f.to_string(), &xyt(), Rationals).unwrap().poly;
        assert_eq!(f, again);
    }
}
