//! Per-conductor reduction tables for the cyclotomic power basis.

use super::{euler_phi, Rational};
use num::{BigInt, BigRational, One, Zero};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

pub struct ConductorTable {
    phi: usize,
    /// Representation of zeta^e on the reduced basis, for e up to
    /// max(n, 2*phi) inclusive.
    powers: Vec<Vec<Rational>>,
}

impl ConductorTable {
    pub fn phi(&self) -> usize {
        self.phi
    }

    pub fn power(&self, e: usize) -> &[Rational] {
        &self.powers[e]
    }

    /// Multiply a reduced coefficient vector by zeta and re-reduce.
    pub fn shift_reduced(&self, coeffs: &[Rational]) -> Vec<Rational> {
        let phi = self.phi;
        let mut out = vec![Rational::zero(); phi];
        for (i, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if i + 1 < phi {
                out[i + 1] += c;
            } else {
                let row = self.power(i + 1);
                for (j, r) in row.iter().enumerate() {
                    if !r.is_zero() {
                        out[j] += c * r;
                    }
                }
            }
        }
        out
    }
}

static TABLES: OnceLock<Mutex<HashMap<u32, Arc<ConductorTable>>>> = OnceLock::new();

pub fn conductor_table(n: u32) -> Arc<ConductorTable> {
    assert!(n > 0, "conductor must be positive");
    let cache = TABLES.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().expect("conductor table lock poisoned");
    if let Some(t) = guard.get(&n) {
        return Arc::clone(t);
    }
    let t = Arc::new(build_table(n));
    guard.insert(n, Arc::clone(&t));
    t
}

fn build_table(n: u32) -> ConductorTable {
    let phi = euler_phi(n) as usize;
    let phi_n = cyclotomic_poly(n);
    debug_assert_eq!(phi_n.len(), phi + 1);
    // zeta^phi = -(c_0 + c_1 z + ... + c_{phi-1} z^{phi-1}), Phi_n monic.
    let tail: Vec<Rational> = phi_n[..phi].iter().map(|c| -c.clone()).collect();
    let max_exp = std::cmp::max(n as usize, 2 * phi) + 1;
    let mut powers: Vec<Vec<Rational>> = Vec::with_capacity(max_exp + 1);
    for e in 0..phi.min(max_exp + 1) {
        let mut row = vec![Rational::zero(); phi];
        row[e] = Rational::one();
        powers.push(row);
    }
    while powers.len() <= max_exp {
        let prev = powers.last().unwrap();
        let mut row = vec![Rational::zero(); phi];
        for (i, c) in prev.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if i + 1 < phi {
                row[i + 1] += c;
            } else {
                for (j, r) in tail.iter().enumerate() {
                    if !r.is_zero() {
                        row[j] += c * r;
                    }
                }
            }
        }
        powers.push(row);
    }
    ConductorTable { phi, powers }
}

/// Coefficients of the n-th cyclotomic polynomial, ascending degree.
/// Computed by dividing x^n - 1 by Phi_d for the proper divisors d of n.
pub fn cyclotomic_poly(n: u32) -> Vec<Rational> {
    fn poly_div_exact(num: &[Rational], den: &[Rational]) -> Vec<Rational> {
        let mut rem = num.to_vec();
        let dd = den.len() - 1;
        let nd = rem.len() - 1;
        assert!(nd >= dd);
        let mut quo = vec![Rational::zero(); nd - dd + 1];
        let lead = den[dd].clone();
        for k in (0..=nd - dd).rev() {
            let c = &rem[k + dd] / &lead;
            if !c.is_zero() {
                for (j, dj) in den.iter().enumerate() {
                    let delta = dj * &c;
                    rem[k + j] -= delta;
                }
            }
            quo[k] = c;
        }
        assert!(rem.iter().all(|c| c.is_zero()), "non-exact division");
        quo
    }

    if n == 1 {
        return vec![
            Rational::from_integer(BigInt::from(-1)),
            Rational::one(),
        ];
    }
    // x^n - 1
    let mut poly = vec![Rational::zero(); n as usize + 1];
    poly[0] = -BigRational::one();
    poly[n as usize] = Rational::one();
    for d in super::divisors(n) {
        if d == n {
            continue;
        }
        let phi_d = cyclotomic_poly(d);
        poly = poly_div_exact(&poly, &phi_d);
    }
    poly
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int_coeffs(v: &[Rational]) -> Vec<i64> {
        use num::ToPrimitive;
        v.iter()
            .map(|c| {
                assert!(c.denom().is_one());
                c.numer().to_i64().unwrap()
            })
            .collect()
    }

    #[test]
    fn small_cyclotomic_polys() {
        assert_eq!(int_coeffs(&cyclotomic_poly(1)), vec![-1, 1]);
        assert_eq!(int_coeffs(&cyclotomic_poly(2)), vec![1, 1]);
        assert_eq!(int_coeffs(&cyclotomic_poly(3)), vec![1, 1, 1]);
        assert_eq!(int_coeffs(&cyclotomic_poly(4)), vec![1, 0, 1]);
        assert_eq!(int_coeffs(&cyclotomic_poly(6)), vec![1, -1, 1]);
        assert_eq!(int_coeffs(&cyclotomic_poly(12)), vec![1, 0, -1, 0, 1]);
    }
}
