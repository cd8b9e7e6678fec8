//! Recursive-descent parser for the shared polynomial grammar:
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' nat)?
//! atom   := rational | var | '(' expr ')'
//! ```
//!
//! Rationals are integer literals or `p/q`; variables are the ring's names.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::Error;

use super::{Coeff, Polynomial, RingDescriptor};

pub fn parse_polynomial(text: &str, ring: &RingDescriptor) -> Result<Polynomial, Error> {
    let tokens = tokenize(text)?;
    let mut p = Parser {
        ring,
        tokens,
        pos: 0,
    };
    let poly = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(Error::Parse(format!(
            "unexpected trailing input at '{}'",
            p.tokens[p.pos]
        )));
    }
    Ok(poly)
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

impl std::fmt::Display for Token {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Token::Num(n) => write!(f, "{n}"),
            Token::Ident(s) => write!(f, "{s}"),
            Token::Plus => write!(f, "+"),
            Token::Minus => write!(f, "-"),
            Token::Star => write!(f, "*"),
            Token::Caret => write!(f, "^"),
            Token::Slash => write!(f, "/"),
            Token::LParen => write!(f, "("),
            Token::RParen => write!(f, ")"),
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<Token>, Error> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                out.push(Token::Plus);
                i += 1;
            }
            '-' => {
                out.push(Token::Minus);
                i += 1;
            }
            '*' => {
                out.push(Token::Star);
                i += 1;
            }
            '^' => {
                out.push(Token::Caret);
                i += 1;
            }
            '/' => {
                out.push(Token::Slash);
                i += 1;
            }
            '(' => {
                out.push(Token::LParen);
                i += 1;
            }
            ')' => {
                out.push(Token::RParen);
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                out.push(Token::Num(s.parse().expect("digits")));
            }
            c if c.is_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len()
                    && (chars[i].is_alphanumeric() || chars[i] == '_' || chars[i] == '\'')
                {
                    i += 1;
                }
                out.push(Token::Ident(chars[start..i].iter().collect()));
            }
            other => return Err(Error::Parse(format!("unexpected character '{other}'"))),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    ring: &'a RingDescriptor,
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser<'_> {
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

    fn expr(&mut self) -> Result<Polynomial, Error> {
        let mut negate = false;
        if let Some(Token::Minus) = self.peek() {
            self.pos += 1;
            negate = true;
        } else if let Some(Token::Plus) = self.peek() {
            self.pos += 1;
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.add(&t);
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.sub(&t);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, Error> {
        let mut acc = self.factor()?;
        while let Some(Token::Star) = self.peek() {
            self.pos += 1;
            let f = self.factor()?;
            acc = acc.mul(&f);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial, Error> {
        let base = self.atom()?;
        if let Some(Token::Caret) = self.peek() {
            self.pos += 1;
            match self.next() {
                Some(Token::Num(n)) => {
                    let e: u32 = n
                        .try_into()
                        .map_err(|_| Error::Parse("exponent out of range".into()))?;
                    Ok(base.pow(e))
                }
                Some(Token::Minus) => Err(Error::Parse("negative exponent".into())),
                other => Err(Error::Parse(format!(
                    "expected exponent, found {}",
                    other.map_or("end of input".to_string(), |t| t.to_string())
                ))),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Polynomial, Error> {
        match self.next() {
            Some(Token::Num(n)) => {
                // optional '/ q' makes a rational literal
                if let Some(Token::Slash) = self.peek() {
                    self.pos += 1;
                    match self.next() {
                        Some(Token::Num(d)) => {
                            if d.is_zero() {
                                return Err(Error::Parse("division by zero".into()));
                            }
                            Ok(Polynomial::constant(
                                self.ring,
                                BigRational::new(n, d) as Coeff,
                            ))
                        }
                        _ => Err(Error::Parse("expected denominator".into())),
                    }
                } else {
                    Ok(Polynomial::constant(self.ring, BigRational::from_integer(n)))
                }
            }
            Some(Token::Ident(name)) => match self.ring.var_index(&name) {
                Some(i) => Ok(Polynomial::variable(self.ring, i)),
                None => Err(Error::UnknownVariable(name)),
            },
            Some(Token::LParen) => {
                let e = self.expr()?;
                match self.next() {
                    Some(Token::RParen) => Ok(e),
                    _ => Err(Error::Parse("expected ')'".into())),
                }
            }
            other => Err(Error::Parse(format!(
                "expected value, found {}",
                other.map_or("end of input".to_string(), |t| t.to_string())
            ))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::coeff_int;

    fn ring_xy() -> RingDescriptor {
        RingDescriptor::new(vec!["x", "y"]).unwrap()
    }

    #[test]
    fn cancelling_terms_parse_to_zero() {
        let r = ring_xy();
        let p = parse_polynomial("x*y - x*y", &r).unwrap();
        assert!(p.is_zero());
    }

    #[test]
    fn sum_of_squares() {
        let r = ring_xy();
        let p = parse_polynomial("x^2+y^2", &r).unwrap();
        let terms: Vec<_> = p
            .terms()
            .map(|(m, c)| (m.exps().to_vec(), c.clone()))
            .collect();
        assert_eq!(
            terms,
            vec![
                (vec![0, 2], coeff_int(1)),
                (vec![2, 0], coeff_int(1)),
            ]
        );
    }

    #[test]
    fn squared_difference_expands() {
        let r = ring_xy();
        let p = parse_polynomial("(x-y)^2", &r).unwrap();
        assert_eq!(p.to_string(), "x^2 - 2*x*y + y^2");
    }

    #[test]
    fn rational_literals_and_unary_minus() {
        let r = ring_xy();
        let p = parse_polynomial("-3/2*x + 1/2*x", &r).unwrap();
        assert_eq!(p.to_string(), "-x");
    }

    #[test]
    fn reports_unknown_variable() {
        let r = ring_xy();
        assert!(matches!(
            parse_polynomial("x + z", &r),
            Err(Error::UnknownVariable(ref v)) if v == "z"
        ));
    }

    #[test]
    fn reports_malformed_syntax() {
        let r = ring_xy();
        assert!(parse_polynomial("x +* y", &r).is_err());
        assert!(parse_polynomial("x^-2", &r).is_err());
        assert!(parse_polynomial("(x", &r).is_err());
    }

    #[test]
    fn parse_print_parse_is_identity() {
        let r = ring_xy();
        for s in [
            "x^2+y^2",
            "(x-y)^2",
            "3*x*y - 7/3",
            "x^5 - 2*x^2*y^3 + 1/4*y",
        ] {
            let p = parse_polynomial(s, &r).unwrap();
            let q = parse_polynomial(&p.to_string(), &r).unwrap();
            assert_eq!(p, q);
        }
    }
}
