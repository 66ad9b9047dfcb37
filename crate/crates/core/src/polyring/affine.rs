//! Ungraded affine polynomials, used for local (chart) computations:
//! dehomogenization, translation to a point, restriction along a
//! parametrized arc. Internal support for the curve-geometry module.

use super::{Monomial, MultiPoly};
use crate::cyclo::CycloNum;
use crate::unipoly::UniPoly;
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffinePoly {
    nvars: usize,
    terms: BTreeMap<Monomial, CycloNum>,
}

impl AffinePoly {
    pub fn zero(nvars: usize) -> Self {
        AffinePoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: CycloNum) -> Self {
        let mut p = AffinePoly::zero(nvars);
        p.insert(Monomial::constant(nvars), c);
        p
    }

    pub fn var(nvars: usize, idx: usize) -> Self {
        let mut p = AffinePoly::zero(nvars);
        p.insert(Monomial::var(nvars, idx), CycloNum::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &CycloNum)> {
        self.terms.iter()
    }

    fn insert(&mut self, m: Monomial, c: CycloNum) {
        if c.is_zero() {
            return;
        }
        let now_zero = {
            let entry = self.terms.entry(m.clone()).or_insert_with(CycloNum::zero);
            *entry = entry.add(&c);
            entry.is_zero()
        };
        if now_zero {
            self.terms.remove(&m);
        }
    }

    /// Forget the grading of a projective polynomial by fixing one
    /// variable to 1; remaining variables keep their order.
    pub fn dehomogenize(f: &MultiPoly, chart_var: usize) -> Self {
        let nv = f.nvars() - 1;
        let mut out = AffinePoly::zero(nv);
        for (m, c) in f.terms() {
            let exps: Vec<u32> = m
                .0
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != chart_var)
                .map(|(_, e)| *e)
                .collect();
            out.insert(Monomial(exps), c.clone());
        }
        out
    }

    pub fn add(&self, other: &AffinePoly) -> AffinePoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> AffinePoly {
        AffinePoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &AffinePoly) -> AffinePoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &AffinePoly) -> AffinePoly {
        let mut out = AffinePoly::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.insert(m1.mul(m2), c1.mul(c2));
            }
        }
        out
    }

    pub fn scale(&self, c: &CycloNum) -> AffinePoly {
        if c.is_zero() {
            return AffinePoly::zero(self.nvars);
        }
        AffinePoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, x)| (m.clone(), x.mul(c)))
                .collect(),
        }
    }

    pub fn partial(&self, var: usize) -> AffinePoly {
        let mut out = AffinePoly::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[var];
            if e == 0 {
                continue;
            }
            let mut exps = m.0.clone();
            exps[var] -= 1;
            out.insert(Monomial(exps), c.mul(&CycloNum::from_int(e as i64)));
        }
        out
    }

    pub fn evaluate(&self, p: &[CycloNum]) -> CycloNum {
        let mut acc = CycloNum::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, e) in m.0.iter().enumerate() {
                for _ in 0..*e {
                    t = t.mul(&p[i]);
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Substitute x_i <- x_i + p_i; exact translation via expansion.
    pub fn shift(&self, p: &[CycloNum]) -> AffinePoly {
        assert_eq!(p.len(), self.nvars);
        let shifted_vars: Vec<AffinePoly> = (0..self.nvars)
            .map(|i| {
                let mut v = AffinePoly::var(self.nvars, i);
                v.insert(Monomial::constant(self.nvars), p[i].clone());
                v
            })
            .collect();
        self.compose_affine(&shifted_vars)
    }

    /// Substitute each variable by another affine polynomial.
    pub fn compose_affine(&self, map: &[AffinePoly]) -> AffinePoly {
        assert_eq!(map.len(), self.nvars);
        let nv = map[0].nvars;
        let mut powers: Vec<Vec<AffinePoly>> = map
            .iter()
            .map(|f| vec![AffinePoly::constant(nv, CycloNum::one()), f.clone()])
            .collect();
        let mut acc = AffinePoly::zero(nv);
        for (m, c) in &self.terms {
            let mut term = AffinePoly::constant(nv, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().mul(&powers[i][1]);
                    powers[i].push(next);
                }
                term = term.mul(&powers[i][e as usize]);
            }
            acc = acc.add(&term);
        }
        acc
    }

    /// Substitute univariate arcs for the variables, producing a
    /// univariate polynomial in the arc parameter.
    pub fn compose_uni(&self, arcs: &[UniPoly]) -> UniPoly {
        assert_eq!(arcs.len(), self.nvars);
        let mut powers: Vec<Vec<UniPoly>> = arcs
            .iter()
            .map(|f| vec![UniPoly::one(), f.clone()])
            .collect();
        let mut acc = UniPoly::zero();
        for (m, c) in &self.terms {
            let mut term = UniPoly::constant(c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().mul(&powers[i][1]);
                    powers[i].push(next);
                }
                term = term.mul(&powers[i][e as usize]);
            }
            acc = acc.add(&term);
        }
        acc
    }

    /// Smallest total degree among the terms (the local multiplicity at
    /// the origin), or None for the zero polynomial.
    pub fn lowest_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.total_degree()).min()
    }

    /// Collect by total degree: the degree-d graded piece.
    pub fn graded_piece(&self, d: u32) -> AffinePoly {
        AffinePoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.total_degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// View a polynomial in one variable (all others absent) as UniPoly.
    pub fn to_unipoly(&self, var: usize) -> Option<UniPoly> {
        let mut coeffs: Vec<CycloNum> = Vec::new();
        for (m, c) in &self.terms {
            for (i, e) in m.0.iter().enumerate() {
                if i != var && *e > 0 {
                    return None;
                }
            }
            let e = m.0[var] as usize;
            if coeffs.len() <= e {
                coeffs.resize(e + 1, CycloNum::zero());
            }
            coeffs[e] = c.clone();
        }
        Some(UniPoly::from_coeffs(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse_poly;

    #[test]
    fn dehomogenize_and_shift() {
        let f = parse_poly("x0^2*x1 - x1^3", 3, None).unwrap();
        // Chart x2 = 1 drops nothing here; shift to (1, 1).
        let a = AffinePoly::dehomogenize(&f, 2);
        assert_eq!(a.nvars(), 2);
        let shifted = a.shift(&[CycloNum::from_int(1), CycloNum::from_int(1)]);
        // f(1+u, 1+v) = (1+u)^2(1+v) - (1+v)^3; constant term 0.
        assert_eq!(shifted.lowest_degree(), Some(1));
        let val = shifted.evaluate(&[CycloNum::zero(), CycloNum::zero()]);
        assert!(val.is_zero());
    }

    #[test]
    fn compose_uni_restricts_to_arc() {
        let f = parse_poly("x0^2 - x1", 2, None);
        // x0^2 - x1 is inhomogeneous so build it affinely.
        assert!(f.is_err());
        let g = parse_poly("x0^2", 2, None).unwrap();
        let mut a = AffinePoly::dehomogenize(&g, 1);
        // a = u^2 in one variable now; extend: build u^2 - v directly.
        let mut b = AffinePoly::zero(2);
        b = b.add(&AffinePoly::var(2, 0).mul(&AffinePoly::var(2, 0)));
        b = b.sub(&AffinePoly::var(2, 1));
        let t = UniPoly::var();
        let t2 = t.mul(&t);
        let restricted = b.compose_uni(&[t.clone(), t2]);
        assert!(restricted.is_zero());
        a = a.mul(&a);
        assert_eq!(a.nvars(), 1);
    }
}
