//! Parser for polynomial literals: sums of `coeff * x0^a * x1^b * ...`
//! terms where the coefficient factors use the cyclotomic grammar.

use super::{Monomial, MultiPoly, PolyError};
use crate::cyclo::{parse_cyclo, CycloError, CycloNum};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyParseError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error(transparent)]
    Coefficient(#[from] CycloError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Parse a polynomial literal over `nvars` variables named x0..x{nvars-1}.
/// `split` declares a bihomogeneous block boundary; `None` means total
/// grading. The grading itself is inferred from the terms and checked.
pub fn parse_poly(
    input: &str,
    nvars: usize,
    split: Option<usize>,
) -> Result<MultiPoly, PolyParseError> {
    let mut p = TermParser {
        bytes: input.as_bytes(),
        pos: 0,
        nvars,
    };
    let mut terms: Vec<(Monomial, CycloNum)> = Vec::new();
    let mut sign_next = 1i64;
    loop {
        p.skip_ws();
        if p.pos >= p.bytes.len() {
            if terms.is_empty() && sign_next == 1 {
                break;
            }
            return Err(p.err("expected a term"));
        }
        let (m, c) = p.term()?;
        let c = if sign_next < 0 { c.neg() } else { c };
        terms.push((m, c));
        p.skip_ws();
        match p.bytes.get(p.pos) {
            None => break,
            Some(b'+') => {
                p.pos += 1;
                sign_next = 1;
            }
            Some(b'-') => {
                p.pos += 1;
                sign_next = -1;
            }
            Some(c) => return Err(p.err(format!("unexpected character '{}'", *c as char))),
        }
    }
    Ok(MultiPoly::from_terms_infer(nvars, split, terms)?)
}

struct TermParser<'a> {
    bytes: &'a [u8],
    pos: usize,
    nvars: usize,
}

impl<'a> TermParser<'a> {
    fn err(&self, msg: impl Into<String>) -> PolyParseError {
        PolyParseError::Syntax {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    /// One product of factors. Factors are variable powers (`x3^2`) or
    /// cyclotomic coefficient factors (rationals, roots, parens).
    fn term(&mut self) -> Result<(Monomial, CycloNum), PolyParseError> {
        let mut exps = vec![0u32; self.nvars];
        let mut coeff = CycloNum::one();
        let mut any = false;
        self.skip_ws();
        while self.peek() == Some(b'-') {
            self.pos += 1;
            coeff = coeff.neg();
            self.skip_ws();
        }
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'x') => {
                    self.pos += 1;
                    let idx = self.integer()? as usize;
                    if idx >= self.nvars {
                        return Err(self.err(format!(
                            "variable x{idx} out of range for {} variables",
                            self.nvars
                        )));
                    }
                    let e = if self.peek() == Some(b'^') {
                        self.pos += 1;
                        self.integer()?
                    } else {
                        1
                    };
                    exps[idx] += e as u32;
                    any = true;
                }
                Some(b'(') | Some(b'z') => {
                    let (v, rest) = self.cyclo_factor()?;
                    coeff = coeff.mul(&v);
                    self.pos = rest;
                    any = true;
                }
                Some(c) if c.is_ascii_digit() => {
                    let (v, rest) = self.cyclo_factor()?;
                    coeff = coeff.mul(&v);
                    self.pos = rest;
                    any = true;
                }
                _ => break,
            }
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        if !any {
            return Err(self.err("empty term"));
        }
        Ok((Monomial(exps), coeff))
    }

    fn integer(&mut self) -> Result<u64, PolyParseError> {
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|e| self.err(format!("bad integer: {e}")))
    }

    /// Delegate a single coefficient factor to the cyclotomic parser by
    /// scanning its extent (balanced parens; stops at '*', '+', '-', 'x').
    fn cyclo_factor(&mut self) -> Result<(CycloNum, usize), PolyParseError> {
        let start = self.pos;
        let mut depth = 0usize;
        let mut end = self.pos;
        while end < self.bytes.len() {
            match self.bytes[end] {
                b'(' => depth += 1,
                b')' => {
                    depth -= 1;
                    if depth == 0 {
                        end += 1;
                        break;
                    }
                }
                b'*' | b'+' | b'-' | b'x' if depth == 0 => break,
                _ => {}
            }
            end += 1;
        }
        let slice = std::str::from_utf8(&self.bytes[start..end]).unwrap();
        let v = parse_cyclo(slice, 1).map_err(|e| match e {
            CycloError::Syntax { pos, msg } => PolyParseError::Syntax {
                pos: start + pos,
                msg,
            },
            other => PolyParseError::Coefficient(other),
        })?;
        Ok((v, end))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::Grading;

    #[test]
    fn parses_plain_sextic() {
        let f = parse_poly("x0^5*x1 + x2^5*x0 + x1^5*x2", 3, None).unwrap();
        assert_eq!(f.num_terms(), 3);
        assert_eq!(f.grading(), Grading::Total(6));
    }

    #[test]
    fn parses_cyclotomic_coefficients() {
        let f = parse_poly("3*x0^2 - (z3+z3^2)*x1*x2", 3, None).unwrap();
        assert_eq!(f.num_terms(), 2);
        // z3 + z3^2 = -1, so the second coefficient is +1.
        let m = Monomial(vec![0, 1, 1]);
        assert!(f.coeff(&m).is_one());
    }

    #[test]
    fn parses_bidegree() {
        let f = parse_poly("x0^4*x2^4 + x1^4*x3^4", 4, Some(2)).unwrap();
        assert_eq!(
            f.grading(),
            Grading::Bi {
                split: 2,
                a: 4,
                b: 4
            }
        );
    }

    #[test]
    fn rejects_mixed_grading() {
        assert!(parse_poly("x0^2 + x0", 3, None).is_err());
    }

    #[test]
    fn canonical_roundtrip() {
        let f = parse_poly("x0^5*x1 - 5*x0^2*x1^2*x2^2 + (1/2 - z4)*x1^5*x2", 3, None).unwrap();
        let s = f.to_canonical_string();
        let g = parse_poly(&s, 3, None).unwrap();
        assert_eq!(f, g);
    }
}
