//! Text syntax for polynomials.
//!
//! ```text
//! poly   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' uint)?
//! atom   := int ('/' uint)? | var | '(' poly ')'
//! ```
//!
//! Variable names match `[A-Za-z][A-Za-z0-9_]*`. Whitespace is ignored.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::polynomial::{Coefficient, Polynomial};
use crate::ring::PolynomialRing;

pub fn parse_polynomial(text: &str, ring: &PolynomialRing) -> Result<Polynomial> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        ring,
    };
    let f = p.poly()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(f)
}

/// Checks the variable-name syntax accepted by the parser.
pub fn is_valid_variable_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: &'a PolynomialRing,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> Error {
        Error::Syntax {
            offset: self.pos,
            message: message.to_string(),
        }
    }

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

    fn poly(&mut self) -> Result<Polynomial> {
        let mut acc = Polynomial::zero(self.ring);
        let mut negative = false;
        if self.eat(b'-') {
            negative = true;
        } else {
            self.eat(b'+');
        }
        loop {
            let t = self.term()?;
            acc = if negative { &acc - &t } else { &acc + &t };
            if self.eat(b'+') {
                negative = false;
            } else if self.eat(b'-') {
                negative = true;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            let f = self.factor()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.eat(b'^') {
            self.skip_ws();
            let start = self.pos;
            let digits = self.digits();
            if digits.is_empty() {
                return Err(self.error("expected exponent"));
            }
            let k: u32 = digits.parse().map_err(|_| Error::Syntax {
                offset: start,
                message: "exponent too large".into(),
            })?;
            return Ok(base.pow(k));
        }
        Ok(base)
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.poly()?;
                if !self.eat(b')') {
                    return Err(self.error("expected `)`"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let num: BigInt = self.digits().parse().expect("digit run");
                let mut c = Coefficient::from_integer(num);
                if self.eat(b'/') {
                    self.skip_ws();
                    let d = self.digits();
                    if d.is_empty() {
                        return Err(self.error("expected denominator"));
                    }
                    let den: BigInt = d.parse().expect("digit run");
                    if den.is_zero() {
                        return Err(self.error("zero denominator"));
                    }
                    c /= Coefficient::from_integer(den);
                }
                Ok(Polynomial::constant(self.ring, c))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                match self.ring.index_of(name) {
                    Some(i) => Ok(Polynomial::variable_at(self.ring, i)),
                    None => Err(Error::UnknownVariable(name.to_string())),
                }
            }
            Some(_) => Err(self.error("unexpected character")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polynomial::rational;

    fn ring(vars: &[&str]) -> PolynomialRing {
        PolynomialRing::new(vars.iter().copied()).unwrap()
    }

    #[test]
    fn binomial() {
        let r = ring(&["x", "y", "z", "w"]);
        let f = parse_polynomial("y*z - x*w", &r).unwrap();
        assert_eq!(f.len(), 2);
        let mut coeffs: Vec<_> = f.terms().iter().map(|(_, c)| c.clone()).collect();
        coeffs.sort();
        assert_eq!(coeffs, vec![rational(-1), rational(1)]);
    }

    #[test]
    fn parentheses_expand() {
        let r = ring(&["y", "z", "s", "x", "w", "r"]);
        let f = parse_polynomial("y*(z*s - x^2)", &r).unwrap();
        let g = parse_polynomial("y*z*s - y*x^2", &r).unwrap();
        assert_eq!(f, g);
    }

    #[test]
    fn zero_and_rationals() {
        let r = ring(&["x"]);
        assert!(parse_polynomial("0", &r).unwrap().is_zero());
        assert!(parse_polynomial(" x - x ", &r).unwrap().is_zero());
        let f = parse_polynomial("3/2*x^2 - 1/3", &r).unwrap();
        assert_eq!(f.to_string(), "3/2*x^2 - 1/3");
        assert_eq!(
            parse_polynomial("-x + 1", &r).unwrap().to_string(),
            "-x + 1"
        );
    }

    #[test]
    fn errors_carry_positions() {
        let r = ring(&["x", "y"]);
        assert_eq!(
            parse_polynomial("x + q", &r),
            Err(Error::UnknownVariable("q".into()))
        );
        match parse_polynomial("x + * y", &r) {
            Err(Error::Syntax { offset, .. }) => assert_eq!(offset, 4),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_polynomial("(x", &r),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(
            parse_polynomial("x y", &r),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(
            parse_polynomial("x/0", &r),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(
            parse_polynomial("", &r),
            Err(Error::Syntax { .. })
        ));
    }

    #[test]
    fn variable_names() {
        assert!(is_valid_variable_name("e1_2"));
        assert!(!is_valid_variable_name("1e"));
        assert!(!is_valid_variable_name("_t"));
        assert!(!is_valid_variable_name(""));
    }
}
