//! Exact arithmetic in cyclotomic fields Q(zeta_N).
//!
//! Elements are stored on the power basis {1, z, ..., z^(phi(N)-1)} of
//! Q[z]/(Phi_N(z)) with rational coefficients, so equality is coefficient
//! comparison after promotion to a common conductor. All operations are
//! exact; the floating-point embedding exists only as a sanity oracle.

mod parse;
mod table;

pub use parse::parse_cyclo;
pub(crate) use table::conductor_table;

use num::{BigInt, BigRational, One, Signed, Zero};
use std::fmt;
use std::sync::atomic::{AtomicU32, Ordering};
use thiserror::Error;

/// Exact rational scalar. Always kept in lowest terms with positive
/// denominator by the underlying implementation.
pub type Rational = BigRational;

/// Default bound on supported conductors. Everything in the bundled
/// catalog lives well below this.
pub const DEFAULT_MAX_CONDUCTOR: u32 = 120;

static MAX_CONDUCTOR: AtomicU32 = AtomicU32::new(DEFAULT_MAX_CONDUCTOR);

/// Currently configured conductor bound.
pub fn max_conductor() -> u32 {
    MAX_CONDUCTOR.load(Ordering::Relaxed)
}

/// Reconfigure the conductor bound (CLI flag); returns the previous value.
pub fn set_max_conductor(n: u32) -> u32 {
    MAX_CONDUCTOR.swap(n, Ordering::Relaxed)
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CycloError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("zero denominator in rational literal")]
    ZeroDenominator,
    #[error("conductor must be positive")]
    ZeroConductor,
    #[error("conductor {0} exceeds the configured bound {1}")]
    ConductorTooLarge(u32, u32),
    #[error("conductor {0} is not a multiple of {1}")]
    NotAMultiple(u32, u32),
    #[error("division by zero")]
    DivisionByZero,
    #[error("value is not representable over conductor {0}")]
    NotRepresentable(u32),
}

/// Euler phi for small arguments.
pub fn euler_phi(n: u32) -> u32 {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Divisors of `n` in ascending order.
pub fn divisors(n: u32) -> Vec<u32> {
    let mut divs = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n % i == 0 {
            divs.push(i);
            if i != n / i {
                divs.push(n / i);
            }
        }
        i += 1;
    }
    divs.sort_unstable();
    divs
}

pub fn gcd_u32(a: u32, b: u32) -> u32 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm_u32(a: u32, b: u32) -> u32 {
    a / gcd_u32(a, b) * b
}

/// An exact element of Q(zeta_N), reduced modulo the N-th cyclotomic
/// polynomial. `coeffs` has length phi(N).
#[derive(Debug, Clone)]
pub struct CycloNum {
    conductor: u32,
    coeffs: Vec<Rational>,
}

impl CycloNum {
    /// Zero over conductor 1.
    pub fn zero() -> Self {
        CycloNum {
            conductor: 1,
            coeffs: vec![Rational::zero()],
        }
    }

    /// One over conductor 1.
    pub fn one() -> Self {
        CycloNum {
            conductor: 1,
            coeffs: vec![Rational::one()],
        }
    }

    pub fn from_rational(r: Rational) -> Self {
        CycloNum {
            conductor: 1,
            coeffs: vec![r],
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::from_rational(Rational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// zeta_n^k, stored over the conductor of the primitive root it
    /// actually is (n / gcd(n, k)).
    pub fn root_of_unity(n: u32, k: i64) -> Result<Self, CycloError> {
        if n == 0 {
            return Err(CycloError::ZeroConductor);
        }
        let k = k.rem_euclid(n as i64) as u32;
        let g = gcd_u32(n, k.max(0)).max(1);
        let (n, k) = if k == 0 { (1, 0) } else { (n / g, k / g) };
        if n > max_conductor() {
            return Err(CycloError::ConductorTooLarge(n, max_conductor()));
        }
        let table = conductor_table(n);
        Ok(CycloNum {
            conductor: n,
            coeffs: table.power(k as usize).to_vec(),
        })
    }

    /// Build from a raw coefficient vector on basis exponents 0..len-1
    /// (not necessarily reduced); reduces modulo Phi_N.
    pub(crate) fn from_unreduced(conductor: u32, raw: &[Rational]) -> Self {
        let table = conductor_table(conductor);
        let phi = table.phi();
        let mut coeffs = vec![Rational::zero(); phi];
        for (e, c) in raw.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let row = table.power(e);
            for (j, r) in row.iter().enumerate() {
                if !r.is_zero() {
                    coeffs[j] += c * r;
                }
            }
        }
        CycloNum { conductor, coeffs }
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.is_rational()
            .map(|r| r.is_one())
            .unwrap_or(false)
    }

    /// Some(r) iff the value lies in Q.
    pub fn is_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Same element over conductor `m` (requires conductor | m).
    pub fn promote(&self, m: u32) -> Result<Self, CycloError> {
        if m == 0 {
            return Err(CycloError::ZeroConductor);
        }
        if m % self.conductor != 0 {
            return Err(CycloError::NotAMultiple(m, self.conductor));
        }
        if m > max_conductor() {
            return Err(CycloError::ConductorTooLarge(m, max_conductor()));
        }
        if m == self.conductor {
            return Ok(self.clone());
        }
        let stride = (m / self.conductor) as usize;
        let mut raw = vec![Rational::zero(); self.coeffs.len() * stride];
        for (e, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                raw[e * stride] = c.clone();
            }
        }
        Ok(CycloNum::from_unreduced(m, &raw))
    }

    /// Attempt to re-express the element over a divisor `d` of the
    /// conductor. Errors when the value does not lie in Q(zeta_d).
    pub fn demote(&self, d: u32) -> Result<Self, CycloError> {
        if d == 0 {
            return Err(CycloError::ZeroConductor);
        }
        if self.conductor % d != 0 {
            return Err(CycloError::NotAMultiple(self.conductor, d));
        }
        if d == self.conductor {
            return Ok(self.clone());
        }
        let phi_d = euler_phi(d) as usize;
        let phi_n = self.coeffs.len();
        // Columns: zeta_d^j promoted to conductor N, j < phi(d).
        let mut cols = Vec::with_capacity(phi_d);
        for j in 0..phi_d {
            let col = CycloNum::root_of_unity(d, j as i64)?.promote(self.conductor)?;
            cols.push(col.coeffs);
        }
        // Solve the phi(N) x phi(d) system by Gaussian elimination.
        let mut aug: Vec<Vec<Rational>> = (0..phi_n)
            .map(|i| {
                let mut row: Vec<Rational> = cols.iter().map(|c| c[i].clone()).collect();
                row.push(self.coeffs[i].clone());
                row
            })
            .collect();
        let mut pivot_row = 0;
        let mut pivots = Vec::new();
        for col in 0..phi_d {
            let Some(r) = (pivot_row..phi_n).find(|&r| !aug[r][col].is_zero()) else {
                continue;
            };
            aug.swap(pivot_row, r);
            let inv = aug[pivot_row][col].recip();
            for v in aug[pivot_row].iter_mut() {
                *v *= &inv;
            }
            for r2 in 0..phi_n {
                if r2 != pivot_row && !aug[r2][col].is_zero() {
                    let f = aug[r2][col].clone();
                    for c2 in 0..=phi_d {
                        let delta = &aug[pivot_row][c2] * &f;
                        aug[r2][c2] -= delta;
                    }
                }
            }
            pivots.push((pivot_row, col));
            pivot_row += 1;
        }
        for r in pivot_row..phi_n {
            if !aug[r][phi_d].is_zero() {
                return Err(CycloError::NotRepresentable(d));
            }
        }
        let mut sol = vec![Rational::zero(); phi_d];
        for &(r, c) in &pivots {
            sol[c] = aug[r][phi_d].clone();
        }
        Ok(CycloNum {
            conductor: d,
            coeffs: sol,
        })
    }

    /// Promote both operands to the lcm conductor.
    pub fn align(a: &CycloNum, b: &CycloNum) -> Result<(CycloNum, CycloNum), CycloError> {
        let m = lcm_u32(a.conductor, b.conductor);
        Ok((a.promote(m)?, b.promote(m)?))
    }

    /// Galois automorphism zeta -> zeta^m of Q(zeta_N); m must be prime
    /// to the conductor.
    pub fn galois_map(&self, m: u32) -> Result<CycloNum, CycloError> {
        let n = self.conductor;
        if gcd_u32(m, n) != 1 {
            return Err(CycloError::NotAMultiple(m, n));
        }
        let mut raw = vec![Rational::zero(); n as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let e = ((k as u64 * m as u64) % n as u64) as usize;
                raw[e] += c;
            }
        }
        Ok(CycloNum::from_unreduced(n, &raw))
    }

    /// Re-express over the smallest conductor dividing the current one.
    pub fn demote_minimal(&self) -> CycloNum {
        if self.conductor == 1 {
            return self.clone();
        }
        if let Some(r) = self.is_rational() {
            return CycloNum::from_rational(r);
        }
        for d in divisors(self.conductor) {
            if d == self.conductor {
                break;
            }
            if let Ok(v) = self.demote(d) {
                return v;
            }
        }
        self.clone()
    }

    pub fn add(&self, other: &CycloNum) -> CycloNum {
        let (mut a, b) = CycloNum::align(self, other).expect("conductor bound exceeded in add");
        for (x, y) in a.coeffs.iter_mut().zip(b.coeffs.iter()) {
            *x += y;
        }
        a
    }

    pub fn sub(&self, other: &CycloNum) -> CycloNum {
        let (mut a, b) = CycloNum::align(self, other).expect("conductor bound exceeded in sub");
        for (x, y) in a.coeffs.iter_mut().zip(b.coeffs.iter()) {
            *x -= y;
        }
        a
    }

    pub fn neg(&self) -> CycloNum {
        let mut r = self.clone();
        for c in r.coeffs.iter_mut() {
            *c = -c.clone();
        }
        r
    }

    pub fn mul(&self, other: &CycloNum) -> CycloNum {
        let (a, b) = CycloNum::align(self, other).expect("conductor bound exceeded in mul");
        let n = a.conductor;
        let phi = a.coeffs.len();
        let mut raw = vec![Rational::zero(); 2 * phi - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    raw[i + j] += x * y;
                }
            }
        }
        CycloNum::from_unreduced(n, &raw)
    }

    /// Multiplicative inverse, via the multiplication-matrix linear solve.
    pub fn inv(&self) -> Result<CycloNum, CycloError> {
        if self.is_zero() {
            return Err(CycloError::DivisionByZero);
        }
        if let Some(r) = self.is_rational() {
            return Ok(CycloNum {
                conductor: self.conductor,
                coeffs: {
                    let mut v = vec![Rational::zero(); self.coeffs.len()];
                    v[0] = r.recip();
                    v
                },
            });
        }
        let phi = self.coeffs.len();
        // Columns of the multiplication-by-self matrix: self * zeta^k.
        let table = conductor_table(self.conductor);
        let mut cols: Vec<Vec<Rational>> = Vec::with_capacity(phi);
        let mut current = self.coeffs.clone();
        cols.push(current.clone());
        for _ in 1..phi {
            current = table.shift_reduced(&current);
            cols.push(current.clone());
        }
        // Solve M y = e0.
        let mut aug: Vec<Vec<Rational>> = (0..phi)
            .map(|i| {
                let mut row: Vec<Rational> = (0..phi).map(|j| cols[j][i].clone()).collect();
                row.push(if i == 0 {
                    Rational::one()
                } else {
                    Rational::zero()
                });
                row
            })
            .collect();
        for col in 0..phi {
            let r = (col..phi)
                .find(|&r| !aug[r][col].is_zero())
                .expect("multiplication matrix of a nonzero field element is invertible");
            aug.swap(col, r);
            let inv = aug[col][col].recip();
            for v in aug[col].iter_mut() {
                *v *= &inv;
            }
            for r2 in 0..phi {
                if r2 != col && !aug[r2][col].is_zero() {
                    let f = aug[r2][col].clone();
                    for c2 in col..=phi {
                        let delta = &aug[col][c2] * &f;
                        aug[r2][c2] -= delta;
                    }
                }
            }
        }
        let coeffs = (0..phi).map(|i| aug[i][phi].clone()).collect();
        Ok(CycloNum {
            conductor: self.conductor,
            coeffs,
        })
    }

    pub fn div(&self, other: &CycloNum) -> Result<CycloNum, CycloError> {
        Ok(self.mul(&other.inv()?))
    }

    /// Integer power (negative exponents via the inverse).
    pub fn pow(&self, e: i64) -> Result<CycloNum, CycloError> {
        if e == 0 {
            return Ok(CycloNum::one());
        }
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = CycloNum::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq);
            }
        }
        Ok(acc)
    }

    /// Least k with self^k = 1, when self is a root of unity.
    pub fn root_of_unity_order(&self) -> Option<u64> {
        if self.is_zero() {
            return None;
        }
        let bound = lcm_u32(2, self.conductor) as u64;
        let full = self.pow(bound as i64).ok()?;
        if !full.is_one() {
            return None;
        }
        for d in divisors(bound as u32) {
            if self.pow(d as i64).ok()?.is_one() {
                return Some(d as u64);
            }
        }
        Some(bound)
    }

    /// Numerical embedding zeta_N -> exp(2 pi i / N), as (re, im).
    /// Sanity oracle only; never used for equality decisions.
    pub fn embed(&self) -> (f64, f64) {
        let n = self.conductor as f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let c = rational_to_f64(c);
            let theta = 2.0 * std::f64::consts::PI * (k as f64) / n;
            re += c * theta.cos();
            im += c * theta.sin();
        }
        (re, im)
    }

    /// Canonical text form on the reduced power basis; round-trips
    /// through `parse_cyclo`.
    pub fn to_canonical_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    out.push('-');
                }
                first = false;
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let coeff_str = rational_string(&abs);
            if k == 0 {
                out.push_str(&coeff_str);
            } else {
                if !abs.is_one() {
                    out.push_str(&coeff_str);
                    out.push('*');
                }
                out.push('z');
                out.push_str(&self.conductor.to_string());
                if k > 1 {
                    out.push('^');
                    out.push_str(&k.to_string());
                }
            }
        }
        out
    }
}

fn rational_string(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub(crate) fn rational_to_f64(r: &Rational) -> f64 {
    use num::ToPrimitive;
    r.to_f64().unwrap_or_else(|| {
        let n = r.numer().to_f64().unwrap_or(f64::NAN);
        let d = r.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

impl PartialEq for CycloNum {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        match CycloNum::align(self, other) {
            Ok((a, b)) => a.coeffs == b.coeffs,
            Err(_) => false,
        }
    }
}

impl Eq for CycloNum {}

impl fmt::Display for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_canonical_string())
    }
}

/// The named field operations, as a single entry point.
pub fn field_arith(op: FieldOp, x: &CycloNum, y: &CycloNum) -> Result<CycloNum, CycloError> {
    match op {
        FieldOp::Add => Ok(x.add(y)),
        FieldOp::Sub => Ok(x.sub(y)),
        FieldOp::Mul => Ok(x.mul(y)),
        FieldOp::Div => x.div(y),
        FieldOp::Neg => Ok(x.neg()),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
    Neg,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u32, k: i64) -> CycloNum {
        CycloNum::root_of_unity(n, k).unwrap()
    }

    #[test]
    fn sqrt_minus_seven_squares_to_minus_seven() {
        // z7 + z7^2 + z7^4 - z7^3 - z7^5 - z7^6
        let s = z(7, 1)
            .add(&z(7, 2))
            .add(&z(7, 4))
            .sub(&z(7, 3))
            .sub(&z(7, 5))
            .sub(&z(7, 6));
        assert_eq!(s.mul(&s), CycloNum::from_int(-7));
    }

    #[test]
    fn cross_conductor_product() {
        // z3 * z4 = z12^7
        let p = z(3, 1).mul(&z(4, 1));
        assert_eq!(p, z(12, 7));
    }

    #[test]
    fn forced_inverse_in_q_zeta3() {
        // (1 + z3) * (-z3) = 1
        let a = CycloNum::one().add(&z(3, 1));
        let b = z(3, 1).neg();
        assert!(a.mul(&b).is_one());
    }

    #[test]
    fn promote_and_demote_roundtrip() {
        let x = z(3, 1);
        let p = x.promote(12).unwrap();
        assert_eq!(p, z(12, 4));
        assert_eq!(p.demote(3).unwrap(), x);
        assert!(z(4, 1).promote(6).is_err());
        let one7 = CycloNum::one().promote(7).unwrap();
        assert!(one7.is_one());
        assert_eq!(one7.conductor(), 7);
    }

    #[test]
    fn root_orders() {
        assert_eq!(z(8, 1).root_of_unity_order(), Some(8));
        assert_eq!(CycloNum::from_int(2).root_of_unity_order(), None);
        // 1 + z3 = -z3^2 has order 6
        let x = CycloNum::one().add(&z(3, 1));
        assert_eq!(x.root_of_unity_order(), Some(6));
        for j in 1..6 {
            assert!(!x.pow(j).unwrap().is_one());
        }
        assert!(x.pow(6).unwrap().is_one());
    }

    #[test]
    fn inverse_cancels() {
        let x = z(12, 5).add(&CycloNum::from_ratio(3, 2));
        let inv = x.inv().unwrap();
        assert!(x.mul(&inv).is_one());
        assert!(CycloNum::zero().inv().is_err());
    }

    #[test]
    fn field_arith_entry_point() {
        let x = z(3, 1);
        let y = z(4, 1);
        assert_eq!(field_arith(FieldOp::Mul, &x, &y).unwrap(), z(12, 7));
        assert_eq!(
            field_arith(FieldOp::Sub, &x, &x).unwrap(),
            CycloNum::zero()
        );
        assert!(matches!(
            field_arith(FieldOp::Div, &x, &CycloNum::zero()),
            Err(CycloError::DivisionByZero)
        ));
        assert_eq!(field_arith(FieldOp::Neg, &x, &x).unwrap(), x.neg());
        assert_eq!(field_arith(FieldOp::Add, &x, &x.neg()).unwrap(), CycloNum::zero());
    }

    #[test]
    fn embedding_is_close_to_expected() {
        let (re, im) = z(4, 1).embed();
        assert!((re - 0.0).abs() < 1e-12 && (im - 1.0).abs() < 1e-12);
    }
}
