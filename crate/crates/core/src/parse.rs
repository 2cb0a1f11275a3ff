//! Text syntax for scalars and polynomials.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := power (('*'|'/') power | power)*
//! power  := atom ('^' integer)?
//! atom   := integer | 'x' | 't' | '(' expr ')'
//! ```
//!
//! Integer literals are field literals ([`TextField::literal`]); `t` is the
//! function-field indeterminate and `x` the polynomial variable. Division is
//! only allowed by x-free expressions. A factored polynomial is a product
//! `(poly)^m * (poly)^m ...`.

use crate::error::{Error, Result};
use crate::field::TextField;
use crate::poly::Poly;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Int(u64),
    Ident(char),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let mut tokens = Vec::new();
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                chars.next();
            }
            '0'..='9' => {
                let mut value: u64 = 0;
                while let Some(&d) = chars.peek() {
                    let Some(digit) = d.to_digit(10) else { break };
                    value = value
                        .checked_mul(10)
                        .and_then(|v| v.checked_add(u64::from(digit)))
                        .ok_or_else(|| Error::Parse("integer literal overflows".into()))?;
                    chars.next();
                }
                tokens.push(Token::Int(value));
            }
            'x' | 'X' => {
                chars.next();
                tokens.push(Token::Ident('x'));
            }
            't' => {
                chars.next();
                tokens.push(Token::Ident('t'));
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
            '/' => {
                chars.next();
                tokens.push(Token::Slash);
            }
            '^' => {
                chars.next();
                tokens.push(Token::Caret);
            }
            '(' => {
                chars.next();
                tokens.push(Token::LParen);
            }
            ')' => {
                chars.next();
                tokens.push(Token::RParen);
            }
            other => return Err(Error::Parse(format!("unexpected character {other:?}"))),
        }
    }
    Ok(tokens)
}

struct Parser<'a, F: TextField> {
    k: &'a F,
    tokens: Vec<Token>,
    pos: usize,
}

impl<'a, F: TextField> Parser<'a, F> {
    fn new(k: &'a F, text: &str) -> Result<Self> {
        Ok(Self {
            k,
            tokens: tokenize(text)?,
            pos: 0,
        })
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expect(&mut self, want: Token) -> Result<()> {
        match self.next() {
            Some(t) if t == want => Ok(()),
            Some(t) => Err(Error::Parse(format!("expected {want:?}, found {t:?}"))),
            None => Err(Error::Parse(format!("expected {want:?}, found end of input"))),
        }
    }

    fn finish(&self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(t) => Err(Error::Parse(format!("trailing input at {t:?}"))),
        }
    }

    fn expr(&mut self) -> Result<Poly<F>> {
        if matches!(self.peek(), Some(Token::Plus | Token::Minus)) {
            self.next();
        }
        let mut acc = self.term()?;
        while matches!(self.peek(), Some(Token::Plus | Token::Minus)) {
            self.next();
            let rhs = self.term()?;
            acc = acc.add(self.k, &rhs);
        }
        Ok(acc)
    }

    fn starts_atom(&self) -> bool {
        matches!(
            self.peek(),
            Some(Token::Int(_) | Token::Ident(_) | Token::LParen)
        )
    }

    fn term(&mut self) -> Result<Poly<F>> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.next();
                    let rhs = self.power()?;
                    acc = acc.mul(self.k, &rhs);
                }
                Some(Token::Slash) => {
                    self.next();
                    let rhs = self.power()?;
                    if !rhs.is_constant() {
                        return Err(Error::Parse("division by a non-constant polynomial".into()));
                    }
                    let c = rhs.leading().ok_or(Error::DivisionByZero)?;
                    acc = acc.scale(self.k, &self.k.inv(c)?);
                }
                _ if self.starts_atom() => {
                    let rhs = self.power()?;
                    acc = acc.mul(self.k, &rhs);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn exponent(&mut self) -> Result<Option<u64>> {
        if self.peek() != Some(&Token::Caret) {
            return Ok(None);
        }
        self.next();
        match self.next() {
            Some(Token::Int(e)) => Ok(Some(e)),
            other => Err(Error::Parse(format!("expected exponent, found {other:?}"))),
        }
    }

    fn power(&mut self) -> Result<Poly<F>> {
        let base = self.atom()?;
        match self.exponent()? {
            Some(e) => Ok(base.pow(self.k, e)),
            None => Ok(base),
        }
    }

    fn atom(&mut self) -> Result<Poly<F>> {
        let k = self.k;
        match self.next() {
            Some(Token::Int(v)) => Ok(Poly::constant(k, k.literal(v)?)),
            Some(Token::Ident('x')) => Ok(Poly::x(k)),
            Some(Token::Ident('t')) => {
                let t = k
                    .generator()
                    .ok_or_else(|| Error::Parse("symbol t is not part of this field".into()))?;
                Ok(Poly::constant(k, t))
            }
            Some(Token::LParen) => {
                let inner = self.expr()?;
                self.expect(Token::RParen)?;
                Ok(inner)
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }

    fn factor_list(&mut self) -> Result<Vec<(Poly<F>, u32)>> {
        let mut out = Vec::new();
        loop {
            let base = self.atom()?;
            let e = self.exponent()?.unwrap_or(1);
            let e = u32::try_from(e).map_err(|_| Error::Parse("multiplicity too large".into()))?;
            if e == 0 {
                return Err(Error::Parse("multiplicity must be positive".into()));
            }
            out.push((base, e));
            match self.peek() {
                Some(Token::Star) => {
                    self.next();
                }
                None => return Ok(out),
                Some(t) => return Err(Error::Parse(format!("unexpected {t:?} in factor list"))),
            }
        }
    }
}

/// Parses a polynomial in x.
pub fn parse_poly<F: TextField>(k: &F, text: &str) -> Result<Poly<F>> {
    let mut p = Parser::new(k, text)?;
    let out = p.expr()?;
    p.finish()?;
    Ok(out)
}

/// Parses a scalar: an x-free expression.
pub fn parse_scalar<F: TextField>(k: &F, text: &str) -> Result<F::Elem> {
    let p = parse_poly(k, text)?;
    if !p.is_constant() {
        return Err(Error::Parse(format!("{text:?} is not a scalar")));
    }
    Ok(p.coeff(k, 0))
}

/// Parses `(poly)^m * (poly)^m ...` into (factor, multiplicity) pairs. A bare
/// polynomial such as `x^2+t` is read as a single factor.
pub fn parse_factored<F: TextField>(k: &F, text: &str) -> Result<Vec<(Poly<F>, u32)>> {
    let mut p = Parser::new(k, text)?;
    let listed = p.factor_list().and_then(|out| p.finish().map(|_| out));
    match listed {
        Ok(out) => Ok(out),
        Err(e) => match parse_poly(k, text) {
            Ok(f) if f.degree().unwrap_or(0) > 0 => Ok(vec![(f, 1)]),
            _ => Err(e),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{BinaryField, Field, RationalFunctionField};

    #[test]
    fn polynomial_with_function_coefficients() {
        let k = RationalFunctionField::over_gf2();
        let p = parse_poly(&k, "x^6+x^5+t*x^2+(t^2+1)").unwrap();
        assert_eq!(p.degree(), Some(6));
        assert_eq!(p.coeff(&k, 2), k.t());
        assert_eq!(p.coeff(&k, 0), k.parse("t^2+1").unwrap());
    }

    #[test]
    fn factored_grammar() {
        let k = RationalFunctionField::over_gf2();
        let f = parse_factored(&k, "(x^2+x+t)^3 * (x+1)").unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(f[0].1, 3);
        assert_eq!(f[1].1, 1);
        assert!(parse_factored(&k, "(x+1)^0").is_err());
        assert_eq!(parse_factored(&k, "x^2+t").unwrap(), vec![(parse_poly(&k, "x^2+t").unwrap(), 1)]);
    }

    #[test]
    fn errors() {
        let k = BinaryField::gf2();
        assert!(parse_poly(&k, "t+1").is_err());
        assert!(parse_poly(&k, "2*x").is_err());
        assert!(parse_poly(&k, "x/(x+1)").is_err());
        assert!(parse_poly(&k, "(x+1").is_err());
        assert!(parse_scalar(&k, "x").is_err());
        assert_eq!(parse_poly(&k, "x/0"), Err(Error::DivisionByZero));
    }

    #[test]
    fn literals_in_gf4() {
        let k = BinaryField::with_default_modulus(2).unwrap();
        let p = parse_poly(&k, "x^2+3*x+2").unwrap();
        assert_eq!(p.coeffs(), &[2, 3, 1]);
        assert!(parse_scalar(&k, "4").is_err());
        assert_eq!(parse_scalar(&k, "2*2").unwrap(), k.mul(&2, &2));
    }
}
