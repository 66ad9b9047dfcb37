//! Dense univariate polynomials and rational functions over cyclotomic
//! scalars: division, gcd, resultants, interpolation. Workhorse for the
//! elimination routines in `curvegeom`.

use crate::cyclo::CycloNum;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum UniPolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("interpolation nodes are not distinct")]
    RepeatedNode,
    #[error("denominator vanished during rational-function arithmetic")]
    ZeroDenominator,
}

/// Polynomial in one variable, coefficients ascending by degree.
/// Invariant: the leading (last) coefficient is nonzero, or the vector
/// is empty (the zero polynomial).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<CycloNum>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: CycloNum) -> Self {
        UniPoly::from_coeffs(vec![c])
    }

    pub fn one() -> Self {
        UniPoly::constant(CycloNum::one())
    }

    /// The monomial t.
    pub fn var() -> Self {
        UniPoly::from_coeffs(vec![CycloNum::zero(), CycloNum::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<CycloNum>) -> Self {
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[CycloNum] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> CycloNum {
        self.coeffs.get(k).cloned().unwrap_or_else(CycloNum::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.is_zero() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn leading(&self) -> Option<&CycloNum> {
        self.coeffs.last()
    }

    /// Order of vanishing at t = 0 (index of first nonzero coefficient).
    pub fn vanishing_order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k).add(&other.coeff(k)));
        }
        UniPoly::from_coeffs(out)
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k).sub(&other.coeff(k)));
        }
        UniPoly::from_coeffs(out)
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn scale(&self, c: &CycloNum) -> UniPoly {
        if c.is_zero() {
            return UniPoly::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|x| x.mul(c)).collect(),
        }
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![CycloNum::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].add(&a.mul(b));
                }
            }
        }
        UniPoly::from_coeffs(out)
    }

    pub fn pow(&self, e: usize) -> UniPoly {
        let mut acc = UniPoly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn eval(&self, x: &CycloNum) -> CycloNum {
        let mut acc = CycloNum::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// Substitute another polynomial for the variable.
    pub fn compose(&self, inner: &UniPoly) -> UniPoly {
        let mut acc = UniPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner).add(&UniPoly::constant(c.clone()));
        }
        acc
    }

    pub fn derivative(&self) -> UniPoly {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero();
        }
        let out = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.mul(&CycloNum::from_int(k as i64)))
            .collect();
        UniPoly::from_coeffs(out)
    }

    /// Quotient and remainder with respect to a nonzero divisor.
    pub fn divrem(&self, div: &UniPoly) -> Result<(UniPoly, UniPoly), UniPolyError> {
        let d_deg = div.degree().ok_or(UniPolyError::DivisionByZero)?;
        let lead_inv = div
            .leading()
            .unwrap()
            .inv()
            .map_err(|_| UniPolyError::DivisionByZero)?;
        let mut rem = self.coeffs.clone();
        let mut quo = vec![CycloNum::zero(); self.coeffs.len().saturating_sub(d_deg)];
        while rem.len() > d_deg {
            let k = rem.len() - 1 - d_deg;
            let c = rem.last().unwrap().mul(&lead_inv);
            if !c.is_zero() {
                for (j, dj) in div.coeffs.iter().enumerate() {
                    let t = dj.mul(&c);
                    rem[k + j] = rem[k + j].sub(&t);
                }
                quo[k] = c;
            }
            // The leading entry is now exactly zero.
            rem.pop();
            while rem.last().map(|c| c.is_zero()).unwrap_or(false) && rem.len() > d_deg {
                rem.pop();
            }
        }
        Ok((UniPoly::from_coeffs(quo), UniPoly::from_coeffs(rem)))
    }

    /// Monic gcd (1 for coprime inputs, 0 only if both are zero).
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b).expect("divisor is nonzero");
            a = b;
            b = r;
        }
        match a.leading() {
            Some(l) if !l.is_one() => {
                let inv = l.inv().expect("leading coefficient nonzero");
                a.scale(&inv)
            }
            _ => a,
        }
    }

    /// Resultant of two polynomials, by the Euclidean recursion
    ///   Res(f, g) = (-1)^(deg f * deg g) lc(g)^(deg f - deg r) Res(g, r).
    pub fn resultant(&self, other: &UniPoly) -> CycloNum {
        fn go(f: &UniPoly, g: &UniPoly) -> CycloNum {
            let df = match f.degree() {
                None => return CycloNum::zero(),
                Some(d) => d,
            };
            let dg = match g.degree() {
                None => return CycloNum::zero(),
                Some(d) => d,
            };
            if dg == 0 {
                return g.leading().unwrap().pow(df as i64).unwrap();
            }
            if df == 0 {
                return f.leading().unwrap().pow(dg as i64).unwrap();
            }
            if df < dg {
                let sign = if (df * dg) % 2 == 1 { -1 } else { 1 };
                return go(g, f).mul(&CycloNum::from_int(sign));
            }
            let (_, r) = f.divrem(g).expect("nonzero divisor");
            let lc = g.leading().unwrap();
            let dr = r.degree();
            let sign = if (df * dg) % 2 == 1 { -1 } else { 1 };
            match dr {
                None => CycloNum::zero(),
                Some(dr) => {
                    let factor = lc.pow((df - dr) as i64).unwrap();
                    go(g, &r)
                        .mul(&factor)
                        .mul(&CycloNum::from_int(sign))
                }
            }
        }
        go(self, other)
    }

    /// Lagrange interpolation through distinct nodes.
    pub fn interpolate(points: &[(CycloNum, CycloNum)]) -> Result<UniPoly, UniPolyError> {
        let mut acc = UniPoly::zero();
        for (i, (xi, yi)) in points.iter().enumerate() {
            if yi.is_zero() {
                continue;
            }
            let mut num = UniPoly::one();
            let mut den = CycloNum::one();
            for (j, (xj, _)) in points.iter().enumerate() {
                if i == j {
                    continue;
                }
                let diff = xi.sub(xj);
                if diff.is_zero() {
                    return Err(UniPolyError::RepeatedNode);
                }
                num = num.mul(&UniPoly::from_coeffs(vec![xj.neg(), CycloNum::one()]));
                den = den.mul(&diff);
            }
            let c = yi.div(&den).expect("node differences are nonzero");
            acc = acc.add(&num.scale(&c));
        }
        Ok(acc)
    }

    pub fn to_display_string(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let cs = c.to_canonical_string();
            let coeff = if cs.contains('+') || cs.contains('-') && k > 0 {
                format!("({cs})")
            } else {
                cs
            };
            let part = match k {
                0 => coeff,
                1 if coeff == "1" => var.to_string(),
                1 => format!("{coeff}*{var}"),
                _ if coeff == "1" => format!("{var}^{k}"),
                _ => format!("{coeff}*{var}^{k}"),
            };
            parts.push(part);
        }
        parts.join(" + ")
    }
}

/// Rational function num/den, kept with monic denominator coprime to the
/// numerator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatFun {
    num: UniPoly,
    den: UniPoly,
}

impl RatFun {
    pub fn from_poly(p: UniPoly) -> Self {
        RatFun {
            num: p,
            den: UniPoly::one(),
        }
    }

    pub fn new(num: UniPoly, den: UniPoly) -> Result<Self, UniPolyError> {
        if den.is_zero() {
            return Err(UniPolyError::ZeroDenominator);
        }
        let mut r = RatFun { num, den };
        r.normalize();
        Ok(r)
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den = UniPoly::one();
            return;
        }
        let g = self.num.gcd(&self.den);
        if g.degree().unwrap_or(0) > 0 {
            self.num = self.num.divrem(&g).unwrap().0;
            self.den = self.den.divrem(&g).unwrap().0;
        }
        let lead_inv = self.den.leading().unwrap().inv().unwrap();
        self.num = self.num.scale(&lead_inv);
        self.den = self.den.scale(&lead_inv);
    }

    pub fn num(&self) -> &UniPoly {
        &self.num
    }

    pub fn den(&self) -> &UniPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, other: &RatFun) -> RatFun {
        let num = self
            .num
            .mul(&other.den)
            .add(&other.num.mul(&self.den));
        let den = self.den.mul(&other.den);
        RatFun::new(num, den).expect("denominators nonzero")
    }

    pub fn sub(&self, other: &RatFun) -> RatFun {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> RatFun {
        RatFun {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &RatFun) -> RatFun {
        RatFun::new(self.num.mul(&other.num), self.den.mul(&other.den))
            .expect("denominators nonzero")
    }

    pub fn div(&self, other: &RatFun) -> Result<RatFun, UniPolyError> {
        if other.is_zero() {
            return Err(UniPolyError::ZeroDenominator);
        }
        RatFun::new(self.num.mul(&other.den), self.den.mul(&other.num))
    }

    pub fn scale_poly(&self, p: &UniPoly) -> RatFun {
        RatFun::new(self.num.mul(p), self.den.clone()).expect("denominator nonzero")
    }
}
