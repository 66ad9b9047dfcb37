//! Sparse exact multivariate polynomials over cyclotomic scalars, with
//! homogeneous and bihomogeneous gradings, linear substitution, Hessian
//! determinants and composition.

mod parse;
pub mod affine;

pub use parse::{parse_poly, PolyParseError};

use crate::cyclo::CycloNum;
use crate::linalg::Matrix;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("monomial has {found} exponents, expected {expected}")]
    MonomialArity { expected: usize, found: usize },
    #[error("term {0} does not match the declared grading")]
    GradingViolation(String),
    #[error("gradings are incompatible: {0}")]
    GradingMismatch(String),
    #[error("coordinate vector has length {found}, expected {expected}")]
    EvalArity { expected: usize, found: usize },
    #[error("variable index {0} out of range")]
    VarIndex(usize),
    #[error("operation requires {0}")]
    Unsupported(String),
    #[error("linear map dimension {found} does not match {expected} variables")]
    MapDimension { expected: usize, found: usize },
}

/// Exponent vector; one entry per ambient variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn constant(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, idx: usize) -> Self {
        let mut e = vec![0; nvars];
        e[idx] = 1;
        Monomial(e)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn block_degree(&self, range: std::ops::Range<usize>) -> u32 {
        self.0[range].iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    /// Componentwise gcd.
    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a - b)
                .collect(),
        )
    }
}

/// Graded-lexicographic order: first by total degree, then lexicographic
/// on the exponent vector.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Declared grading of a polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Grading {
    /// Homogeneous of the given total degree.
    Total(u32),
    /// Bihomogeneous: the first `split` variables form the first block.
    Bi { split: usize, a: u32, b: u32 },
}

impl Grading {
    pub fn matches(&self, m: &Monomial) -> bool {
        match *self {
            Grading::Total(d) => m.total_degree() == d,
            Grading::Bi { split, a, b } => {
                m.block_degree(0..split) == a && m.block_degree(split..m.0.len()) == b
            }
        }
    }
}

impl fmt::Display for Grading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Grading::Total(d) => write!(f, "degree {d}"),
            Grading::Bi { a, b, .. } => write!(f, "bidegree ({a},{b})"),
        }
    }
}

/// Sparse polynomial with a declared grading. No zero coefficients are
/// stored, and terms iterate in graded-lex order.
#[derive(Debug, Clone)]
pub struct MultiPoly {
    nvars: usize,
    grading: Grading,
    terms: BTreeMap<Monomial, CycloNum>,
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        // Zero polynomials agree regardless of the declared grading.
        self.nvars == other.nvars
            && self.terms == other.terms
            && (self.grading == other.grading || self.is_zero())
    }
}

impl Eq for MultiPoly {}

impl MultiPoly {
    pub fn zero(nvars: usize, grading: Grading) -> Self {
        MultiPoly {
            nvars,
            grading,
            terms: BTreeMap::new(),
        }
    }

    pub fn new(
        nvars: usize,
        grading: Grading,
        terms: impl IntoIterator<Item = (Monomial, CycloNum)>,
    ) -> Result<Self, PolyError> {
        let mut map = BTreeMap::new();
        for (m, c) in terms {
            if m.0.len() != nvars {
                return Err(PolyError::MonomialArity {
                    expected: nvars,
                    found: m.0.len(),
                });
            }
            if !grading.matches(&m) {
                return Err(PolyError::GradingViolation(format!("{:?}", m.0)));
            }
            if c.is_zero() {
                continue;
            }
            let entry = map.entry(m).or_insert_with(CycloNum::zero);
            *entry = entry.add(&c);
        }
        map.retain(|_, c: &mut CycloNum| !c.is_zero());
        Ok(MultiPoly {
            nvars,
            grading,
            terms: map,
        })
    }

    /// Construct from terms, inferring the grading (total degree, or the
    /// declared bidegree when `split` is given). Errors if inhomogeneous.
    pub fn from_terms_infer(
        nvars: usize,
        split: Option<usize>,
        terms: Vec<(Monomial, CycloNum)>,
    ) -> Result<Self, PolyError> {
        let first = terms
            .iter()
            .find(|(_, c)| !c.is_zero())
            .map(|(m, _)| m.clone());
        let grading = match (first, split) {
            (None, None) => Grading::Total(0),
            (None, Some(s)) => Grading::Bi { split: s, a: 0, b: 0 },
            (Some(m), None) => Grading::Total(m.total_degree()),
            (Some(m), Some(s)) => Grading::Bi {
                split: s,
                a: m.block_degree(0..s),
                b: m.block_degree(s..nvars),
            },
        };
        MultiPoly::new(nvars, grading, terms)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn grading(&self) -> Grading {
        self.grading
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &CycloNum)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> CycloNum {
        self.terms.get(m).cloned().unwrap_or_else(CycloNum::zero)
    }

    /// Leading term in graded-lex order.
    pub fn leading(&self) -> Option<(&Monomial, &CycloNum)> {
        self.terms.iter().next_back()
    }

    pub fn add(&self, other: &MultiPoly) -> Result<MultiPoly, PolyError> {
        self.compatible(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            let entry = terms.entry(m.clone()).or_insert_with(CycloNum::zero);
            *entry = entry.add(c);
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(MultiPoly {
            nvars: self.nvars,
            grading: self.pick_grading(other),
            terms,
        })
    }

    pub fn sub(&self, other: &MultiPoly) -> Result<MultiPoly, PolyError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            grading: self.grading,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &CycloNum) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.nvars, self.grading);
        }
        MultiPoly {
            nvars: self.nvars,
            grading: self.grading,
            terms: self
                .terms
                .iter()
                .map(|(m, x)| (m.clone(), x.mul(c)))
                .collect(),
        }
    }

    fn compatible(&self, other: &MultiPoly) -> Result<(), PolyError> {
        if self.nvars != other.nvars {
            return Err(PolyError::GradingMismatch(format!(
                "{} vs {} variables",
                self.nvars, other.nvars
            )));
        }
        // A zero polynomial is compatible with anything of the same arity.
        if self.is_zero() || other.is_zero() {
            return Ok(());
        }
        if self.grading != other.grading {
            return Err(PolyError::GradingMismatch(format!(
                "{} vs {}",
                self.grading, other.grading
            )));
        }
        Ok(())
    }

    fn pick_grading(&self, other: &MultiPoly) -> Grading {
        if self.is_zero() {
            other.grading
        } else {
            self.grading
        }
    }

    pub fn mul(&self, other: &MultiPoly) -> Result<MultiPoly, PolyError> {
        if self.nvars != other.nvars {
            return Err(PolyError::GradingMismatch(format!(
                "{} vs {} variables",
                self.nvars, other.nvars
            )));
        }
        let grading = match (self.grading, other.grading) {
            (Grading::Total(a), Grading::Total(b)) => Grading::Total(a + b),
            (
                Grading::Bi { split, a, b },
                Grading::Bi {
                    split: s2,
                    a: a2,
                    b: b2,
                },
            ) if split == s2 => Grading::Bi {
                split,
                a: a + a2,
                b: b + b2,
            },
            _ => {
                return Err(PolyError::GradingMismatch(
                    "product of mixed gradings".into(),
                ))
            }
        };
        let mut terms: BTreeMap<Monomial, CycloNum> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m = m1.mul(m2);
                let c = c1.mul(c2);
                let entry = terms.entry(m).or_insert_with(CycloNum::zero);
                *entry = entry.add(&c);
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(MultiPoly {
            nvars: self.nvars,
            grading,
            terms,
        })
    }

    /// Exact value at a coordinate vector.
    pub fn evaluate(&self, p: &[CycloNum]) -> Result<CycloNum, PolyError> {
        if p.len() != self.nvars {
            return Err(PolyError::EvalArity {
                expected: self.nvars,
                found: p.len(),
            });
        }
        // Power tables per variable up to the max exponent present.
        let mut max_exp = vec![0u32; self.nvars];
        for m in self.terms.keys() {
            for (i, e) in m.0.iter().enumerate() {
                max_exp[i] = max_exp[i].max(*e);
            }
        }
        let powers: Vec<Vec<CycloNum>> = (0..self.nvars)
            .map(|i| {
                let mut v = Vec::with_capacity(max_exp[i] as usize + 1);
                v.push(CycloNum::one());
                for e in 1..=max_exp[i] as usize {
                    let next = v[e - 1].mul(&p[i]);
                    v.push(next);
                }
                v
            })
            .collect();
        let mut acc = CycloNum::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, e) in m.0.iter().enumerate() {
                if *e > 0 {
                    t = t.mul(&powers[i][*e as usize]);
                }
            }
            acc = acc.add(&t);
        }
        Ok(acc)
    }

    /// Formal partial derivative.
    pub fn partial(&self, var: usize) -> Result<MultiPoly, PolyError> {
        if var >= self.nvars {
            return Err(PolyError::VarIndex(var));
        }
        let grading = match self.grading {
            Grading::Total(d) => Grading::Total(d.saturating_sub(1)),
            Grading::Bi { split, a, b } => {
                if var < split {
                    Grading::Bi {
                        split,
                        a: a.saturating_sub(1),
                        b,
                    }
                } else {
                    Grading::Bi {
                        split,
                        a,
                        b: b.saturating_sub(1),
                    }
                }
            }
        };
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.0[var];
            if e == 0 {
                continue;
            }
            let mut exps = m.0.clone();
            exps[var] -= 1;
            terms.insert(Monomial(exps), c.mul(&CycloNum::from_int(e as i64)));
        }
        Ok(MultiPoly {
            nvars: self.nvars,
            grading,
            terms,
        })
    }

    pub fn gradient(&self) -> Result<Vec<MultiPoly>, PolyError> {
        (0..self.nvars).map(|i| self.partial(i)).collect()
    }

    /// Substitute variables by the rows of a linear map: x_i <- sum_j m[i][j] x_j.
    pub fn substitute_linear(&self, m: &Matrix) -> Result<MultiPoly, PolyError> {
        if m.rows() != self.nvars || m.cols() != self.nvars {
            return Err(PolyError::MapDimension {
                expected: self.nvars,
                found: m.rows(),
            });
        }
        let forms: Vec<MultiPoly> = (0..self.nvars)
            .map(|i| {
                let terms: Vec<(Monomial, CycloNum)> = (0..self.nvars)
                    .map(|j| (Monomial::var(self.nvars, j), m.at(i, j).clone()))
                    .collect();
                MultiPoly::new(self.nvars, Grading::Total(1), terms).expect("linear form")
            })
            .collect();
        self.substitute_forms(&forms)
    }

    fn substitute_forms(&self, forms: &[MultiPoly]) -> Result<MultiPoly, PolyError> {
        // Memoized powers of each substituted form.
        let mut powers: Vec<Vec<MultiPoly>> = forms
            .iter()
            .map(|f| vec![MultiPoly::one_like(f.nvars), f.clone()])
            .collect();
        let mut acc: Option<MultiPoly> = None;
        for (m, c) in &self.terms {
            let mut term: Option<MultiPoly> = None;
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().mul(&powers[i][1])?;
                    powers[i].push(next);
                }
                let p = &powers[i][e as usize];
                term = Some(match term {
                    None => p.clone(),
                    Some(t) => t.mul(p)?,
                });
            }
            let term = match term {
                None => MultiPoly::one_like(forms[0].nvars).scale(c),
                Some(t) => t.scale(c),
            };
            acc = Some(match acc {
                None => term,
                Some(a) => a.add(&term)?,
            });
        }
        Ok(acc.unwrap_or_else(|| MultiPoly::zero(forms[0].nvars, Grading::Total(0))))
    }

    fn one_like(nvars: usize) -> MultiPoly {
        MultiPoly::new(
            nvars,
            Grading::Total(0),
            vec![(Monomial::constant(nvars), CycloNum::one())],
        )
        .expect("constant")
    }

    /// Substitution f(phi_0, ..., phi_{n-1}) for map components of a
    /// common total degree.
    pub fn compose(&self, map: &[MultiPoly]) -> Result<MultiPoly, PolyError> {
        if map.len() != self.nvars {
            return Err(PolyError::MapDimension {
                expected: self.nvars,
                found: map.len(),
            });
        }
        let nv = map[0].nvars;
        let mut deg = None;
        for comp in map {
            if comp.nvars != nv {
                return Err(PolyError::GradingMismatch(
                    "map components have different arities".into(),
                ));
            }
            if comp.is_zero() {
                continue;
            }
            match comp.grading {
                Grading::Total(d) => {
                    if let Some(prev) = deg {
                        if prev != d {
                            return Err(PolyError::GradingMismatch(
                                "map components have different degrees".into(),
                            ));
                        }
                    }
                    deg = Some(d);
                }
                _ => {
                    return Err(PolyError::Unsupported(
                        "composition with bigraded components".into(),
                    ))
                }
            }
        }
        let mut powers: Vec<Vec<MultiPoly>> = map
            .iter()
            .map(|f| vec![MultiPoly::one_like(nv), f.clone()])
            .collect();
        let mut acc: Option<MultiPoly> = None;
        for (m, c) in &self.terms {
            let mut term: Option<MultiPoly> = None;
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().mul(&powers[i][1])?;
                    powers[i].push(next);
                }
                let p = &powers[i][e as usize];
                term = Some(match term {
                    None => p.clone(),
                    Some(t) => t.mul(p)?,
                });
            }
            let term = match term {
                None => MultiPoly::one_like(nv).scale(c),
                Some(t) => t.scale(c),
            };
            acc = Some(match acc {
                None => term,
                Some(a) => a.add(&term)?,
            });
        }
        Ok(acc.unwrap_or_else(|| MultiPoly::zero(nv, Grading::Total(0))))
    }

    /// Greatest common monomial factor of all terms.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.keys();
        let first = match it.next() {
            None => return Monomial::constant(self.nvars),
            Some(m) => m.clone(),
        };
        it.fold(first, |acc, m| acc.gcd(m))
    }

    /// Divide out a monomial that divides every term.
    pub fn divide_monomial(&self, m: &Monomial) -> Result<MultiPoly, PolyError> {
        let mut terms = Vec::new();
        for (mm, c) in &self.terms {
            if !m.divides(mm) {
                return Err(PolyError::Unsupported(
                    "monomial does not divide every term".into(),
                ));
            }
            terms.push((mm.div(m), c.clone()));
        }
        MultiPoly::from_terms_infer(
            self.nvars,
            match self.grading {
                Grading::Bi { split, .. } => Some(split),
                _ => None,
            },
            terms,
        )
    }

    /// Some(c) with self = c * other, if the two polynomials are
    /// proportional. Both zero yields Some(1); exactly one zero, None.
    pub fn equal_up_to_scalar(&self, other: &MultiPoly) -> Result<Option<CycloNum>, PolyError> {
        self.compatible(other)?;
        match (self.is_zero(), other.is_zero()) {
            (true, true) => return Ok(Some(CycloNum::one())),
            (true, false) | (false, true) => return Ok(None),
            _ => {}
        }
        let (m0, c0) = other.leading().unwrap();
        let mine = self.coeff(m0);
        if mine.is_zero() {
            return Ok(None);
        }
        let ratio = mine.div(c0).expect("leading coefficient nonzero");
        if self == &other.scale(&ratio) {
            Ok(Some(ratio))
        } else {
            Ok(None)
        }
    }

    /// Determinant of the matrix of second partials, for ternary forms.
    pub fn hessian_det(&self) -> Result<MultiPoly, PolyError> {
        match self.grading {
            Grading::Total(_) if self.nvars == 3 => {}
            _ => {
                return Err(PolyError::Unsupported(
                    "hessian determinant needs a ternary form".into(),
                ))
            }
        }
        let mut h = Vec::with_capacity(9);
        for i in 0..3 {
            let fi = self.partial(i)?;
            for j in 0..3 {
                h.push(fi.partial(j)?);
            }
        }
        let det_terms = [
            (0usize, 4usize, 8usize, false),
            (1, 5, 6, false),
            (2, 3, 7, false),
            (2, 4, 6, true),
            (0, 5, 7, true),
            (1, 3, 8, true),
        ];
        let mut acc: Option<MultiPoly> = None;
        for (a, b, c, negate) in det_terms {
            let prod = h[a].mul(&h[b])?.mul(&h[c])?;
            let prod = if negate { prod.neg() } else { prod };
            acc = Some(match acc {
                None => prod,
                Some(x) => x.add(&prod)?,
            });
        }
        Ok(acc.unwrap())
    }

    /// Second-partials matrix evaluated at a point.
    pub fn hessian_at(&self, p: &[CycloNum]) -> Result<Matrix, PolyError> {
        let n = self.nvars;
        let mut out = Matrix::zero(n, n);
        for i in 0..n {
            let fi = self.partial(i)?;
            for j in i..n {
                let fij = fi.partial(j)?;
                let v = fij.evaluate(p)?;
                *out.at_mut(i, j) = v.clone();
                *out.at_mut(j, i) = v;
            }
        }
        Ok(out)
    }

    /// Canonical printable form; round-trips through `parse_poly`.
    pub fn to_canonical_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let cs = c.to_canonical_string();
            // Multi-part coefficients get parenthesized; single-part ones
            // may donate their sign to the separator.
            let multi = cs.contains(" + ") || cs.contains(" - ");
            let (negative, body) = if multi {
                (false, format!("({cs})"))
            } else if let Some(stripped) = cs.strip_prefix('-') {
                (true, stripped.to_string())
            } else {
                (false, cs)
            };
            if first {
                if negative {
                    out.push('-');
                }
                first = false;
            } else if negative {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mut factors = Vec::new();
            if body != "1" || m.total_degree() == 0 {
                factors.push(body);
            }
            for (i, e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(format!("x{i}")),
                    _ => factors.push(format!("x{i}^{e}")),
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_canonical_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::parse_cyclo;

    fn c(s: &str) -> CycloNum {
        parse_cyclo(s, 1).unwrap()
    }

    pub(crate) fn poly(nvars: usize, s: &str) -> MultiPoly {
        parse_poly(s, nvars, None).unwrap()
    }

    #[test]
    fn evaluate_klein_quartic() {
        let klein = poly(3, "x0*x1^3 + x1*x2^3 + x2*x0^3");
        let p = [c("1"), c("0"), c("0")];
        assert!(klein.evaluate(&p).unwrap().is_zero());
    }

    #[test]
    fn evaluate_m9_sextic_at_exclusion_point() {
        let f = poly(
            3,
            "x0^6 + x1^6 + x2^6 - 10*x0^3*x1^3 - 10*x1^3*x2^3 - 10*x2^3*x0^3",
        );
        let p = [c("0"), c("1"), c("-1")];
        assert_eq!(f.evaluate(&p).unwrap(), c("12"));
    }

    #[test]
    fn partial_power_rule() {
        let f = poly(3, "x0^2*x1^2*x2^2");
        let fx = f.partial(0).unwrap();
        assert_eq!(fx, poly(3, "2*x0*x1^2*x2^2"));
        let zero = MultiPoly::zero(3, Grading::Total(0));
        assert!(zero.partial(0).unwrap().is_zero());
        assert!(f.partial(7).is_err());
    }

    #[test]
    fn gradient_of_klein_at_coordinate_point() {
        let klein = poly(3, "x0*x1^3 + x1*x2^3 + x2*x0^3");
        let p = [c("1"), c("0"), c("0")];
        let grad: Vec<CycloNum> = klein
            .gradient()
            .unwrap()
            .iter()
            .map(|g| g.evaluate(&p).unwrap())
            .collect();
        assert_eq!(grad, vec![c("0"), c("0"), c("1")]);
    }

    #[test]
    fn hessian_of_rank_one_form_vanishes() {
        let f = poly(3, "x0^4");
        assert!(f.hessian_det().unwrap().is_zero());
    }

    #[test]
    fn hessian_of_nondegenerate_quadric_is_constant() {
        let q = poly(3, "x0^2 + x1^2 + x2^2");
        let h = q.hessian_det().unwrap();
        assert_eq!(h, poly(3, "8").scale(&c("1")));
    }

    #[test]
    fn equal_up_to_scalar_detects_ratio() {
        let p1 = poly(3, "x0^2*x1^2*x2^2");
        let doubled = p1.scale(&c("2"));
        assert_eq!(doubled.equal_up_to_scalar(&p1).unwrap(), Some(c("2")));
        let p2 = poly(3, "x0^5*x1 + x2^5*x0 + x1^5*x2");
        assert_eq!(p1.equal_up_to_scalar(&p2).unwrap(), None);
    }

    #[test]
    fn monomial_content_gcd() {
        let f = poly(3, "x0^2*x1^2 + x0^2*x2^2");
        assert_eq!(f.monomial_content(), Monomial(vec![2, 0, 0]));
        let g = f.divide_monomial(&f.monomial_content()).unwrap();
        assert_eq!(g, poly(3, "x1^2 + x2^2"));
    }

    #[test]
    fn compose_with_identity() {
        let f = poly(3, "x0*x1^3 + x1*x2^3 + x2*x0^3");
        let id: Vec<MultiPoly> = (0..3).map(|i| poly(3, &format!("x{i}"))).collect();
        assert_eq!(f.compose(&id).unwrap(), f);
    }

    #[test]
    fn euler_identity_example() {
        let f = poly(3, "x0^5*x1 + x2^5*x0 + x1^5*x2");
        let mut acc = MultiPoly::zero(3, Grading::Total(6));
        for i in 0..3 {
            let xi = poly(3, &format!("x{i}"));
            acc = acc.add(&xi.mul(&f.partial(i).unwrap()).unwrap()).unwrap();
        }
        assert_eq!(acc, f.scale(&c("6")));
    }
}
