//! Recursive-descent parser for the cyclotomic expression grammar:
//!
//! ```text
//! expr     := term (('+'|'-') term)*
//! term     := factor ('*' factor)*
//! factor   := rational | root | '(' expr ')' | '-' factor
//! root     := 'z' INT ('^' INT)?
//! rational := INT ('/' INT)?
//! ```

use super::{lcm_u32, CycloError, CycloNum, Rational};
use num::BigInt;
use std::str::FromStr;

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    /// lcm of the root indices seen so far.
    roots_lcm: u32,
}

impl<'a> Parser<'a> {
    fn new(s: &'a str) -> Self {
        Parser {
            bytes: s.as_bytes(),
            pos: 0,
            roots_lcm: 1,
        }
    }

    fn err(&self, msg: impl Into<String>) -> CycloError {
        CycloError::Syntax {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    fn integer(&mut self) -> Result<BigInt, CycloError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected an integer"));
        }
        let s = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        BigInt::from_str(s).map_err(|e| self.err(format!("bad integer: {e}")))
    }

    fn expr(&mut self) -> Result<CycloNum, CycloError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                Some(b'-') => {
                    self.bump();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<CycloNum, CycloError> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.bump();
            acc = acc.mul(&self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<CycloNum, CycloError> {
        match self.peek() {
            Some(b'-') => {
                self.bump();
                Ok(self.factor()?.neg())
            }
            Some(b'(') => {
                self.bump();
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.bump();
                Ok(inner)
            }
            Some(b'z') => {
                self.bump();
                let n = self.integer()?;
                let n: u32 = n
                    .try_into()
                    .map_err(|_| self.err("conductor out of range"))?;
                if n == 0 {
                    return Err(CycloError::ZeroConductor);
                }
                let k = if self.exponent_follows() {
                    self.bump(); // '^'
                    let e = self.integer()?;
                    i64::try_from(e).map_err(|_| self.err("exponent out of range"))?
                } else {
                    1
                };
                self.roots_lcm = lcm_u32(self.roots_lcm, n);
                CycloNum::root_of_unity(n, k)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                if self.peek() == Some(b'/') {
                    self.bump();
                    let den = self.integer()?;
                    if den == BigInt::from(0) {
                        return Err(CycloError::ZeroDenominator);
                    }
                    Ok(CycloNum::from_rational(Rational::new(num, den)))
                } else {
                    Ok(CycloNum::from_rational(Rational::from_integer(num)))
                }
            }
            Some(c) => Err(self.err(format!("unexpected character '{}'", c as char))),
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn exponent_follows(&mut self) -> bool {
        if self.peek() != Some(b'^') {
            return false;
        }
        // Reject 'z7^^2' style double carets early for a clear message.
        true
    }
}

/// Parse a cyclotomic expression. The result is promoted to the lcm of
/// the conductors appearing in the expression and `default_conductor`.
pub fn parse_cyclo(expr: &str, default_conductor: u32) -> Result<CycloNum, CycloError> {
    if default_conductor == 0 {
        return Err(CycloError::ZeroConductor);
    }
    let mut p = Parser::new(expr);
    let v = p.expr()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(CycloError::Syntax {
            pos: p.pos,
            msg: "trailing input".into(),
        });
    }
    let target = lcm_u32(lcm_u32(v.conductor(), p.roots_lcm), default_conductor);
    v.promote(target)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_sqrt_minus_seven() {
        let s = parse_cyclo("z7 + z7^2 + z7^4 - z7^3 - z7^5 - z7^6", 1).unwrap();
        assert_eq!(s.conductor(), 7);
        assert_eq!(s.mul(&s), CycloNum::from_int(-7));
    }

    #[test]
    fn parses_rational() {
        let h = parse_cyclo("1/2", 1).unwrap();
        assert_eq!(h.conductor(), 1);
        assert_eq!(h, CycloNum::from_ratio(1, 2));
    }

    #[test]
    fn rejects_malformed() {
        assert!(matches!(
            parse_cyclo("z7^^2", 1),
            Err(CycloError::Syntax { .. })
        ));
        assert!(matches!(
            parse_cyclo("1/0", 1),
            Err(CycloError::ZeroDenominator)
        ));
        assert!(matches!(parse_cyclo("z0", 1), Err(CycloError::ZeroConductor)));
    }

    #[test]
    fn parenthesized_products() {
        let v = parse_cyclo("1/7 * (z7^2 - z7^5) * (1 + 2)", 1).unwrap();
        let w = parse_cyclo("3/7*z7^2 - 3/7*z7^5", 1).unwrap();
        assert_eq!(v, w);
    }

    #[test]
    fn canonical_print_roundtrip() {
        let v = parse_cyclo("2/3 - z12^5 + 7*z12^3", 1).unwrap();
        let s = v.to_canonical_string();
        let w = parse_cyclo(&s, 1).unwrap();
        assert_eq!(v, w);
    }

    #[test]
    fn default_conductor_promotes() {
        let v = parse_cyclo("1/2", 7).unwrap();
        assert_eq!(v.conductor(), 7);
        assert_eq!(v, CycloNum::from_ratio(1, 2));
    }
}
