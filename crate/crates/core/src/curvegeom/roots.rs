//! Exact root extraction for univariate polynomials over cyclotomic
//! fields, restricted to roots of the form q * zeta with q rational and
//! zeta a root of unity of bounded order. Roots outside this class stay
//! in an explicit residual factor; nothing is ever approximated.

use crate::cyclo::{lcm_u32, max_conductor, CycloNum, Rational};
use crate::unipoly::UniPoly;
use num::{BigInt, One, Signed, Zero};

/// Outcome of the structured search: found roots with multiplicities,
/// plus the unfactored remainder (None when fully split).
#[derive(Debug, Clone)]
pub struct RootSearch {
    pub roots: Vec<(CycloNum, usize)>,
    pub residual: Option<UniPoly>,
}

impl RootSearch {
    pub fn complete(&self) -> bool {
        self.residual.is_none()
    }
}

fn coefficient_conductor(p: &UniPoly) -> u32 {
    p.coeffs()
        .iter()
        .fold(1, |acc, c| lcm_u32(acc, c.conductor()))
}

/// Whether a candidate value can coexist with the coefficients of `p`
/// inside the conductor bound.
fn representable_with(p: &UniPoly, x: &CycloNum) -> bool {
    lcm_u32(coefficient_conductor(p), x.conductor()) <= max_conductor()
}

/// Evaluation that refuses to leave the supported conductor range.
fn try_eval(p: &UniPoly, x: &CycloNum) -> Option<CycloNum> {
    if representable_with(p, x) {
        Some(p.eval(x))
    } else {
        None
    }
}

/// Re-express every coefficient over its minimal conductor, so later
/// probing is not blocked by representational inflation.
fn normalize_conductors(p: &UniPoly) -> UniPoly {
    UniPoly::from_coeffs(p.coeffs().iter().map(|c| c.demote_minimal()).collect())
}

/// Divide out (t - r) as often as it divides.
fn strip_root(p: &mut UniPoly, r: &CycloNum) -> usize {
    let factor = UniPoly::from_coeffs(vec![r.neg(), CycloNum::one()]);
    let mut count = 0;
    loop {
        if p.degree().unwrap_or(0) == 0 {
            break;
        }
        match try_eval(p, r) {
            Some(v) if v.is_zero() => {}
            _ => break,
        }
        let (q, rem) = p.divrem(&factor).expect("nonzero divisor");
        debug_assert!(rem.is_zero());
        *p = normalize_conductors(&q);
        count += 1;
    }
    count
}

/// Covering moduli for the root-of-unity search: roots of order n are
/// found whenever n divides one of these. Chosen to cover every order
/// representable next to the base field within the conductor bound.
fn unity_cover(conductor: u32) -> Vec<u32> {
    let mut covers = Vec::new();
    for extra in [120, 72, 56, 21, 24, 8, 2, 1] {
        let m = lcm_u32(conductor, extra);
        if m <= max_conductor() && !covers.iter().any(|&c| c % m == 0) {
            covers.push(m);
        }
    }
    if covers.is_empty() {
        covers.push(conductor.min(max_conductor()));
    }
    covers
}

/// Twist modulus for the rational-multiple search.
fn twist_modulus(conductor: u32) -> u32 {
    let m = lcm_u32(conductor, 8);
    if m <= max_conductor() {
        m
    } else {
        conductor.min(max_conductor())
    }
}

/// x^n - 1 over the rationals.
fn unity_poly(n: u32) -> UniPoly {
    let mut coeffs = vec![CycloNum::zero(); n as usize + 1];
    coeffs[0] = CycloNum::from_int(-1);
    coeffs[n as usize] = CycloNum::one();
    UniPoly::from_coeffs(coeffs)
}

/// All roots of `p` of the shape (rational) * (root of unity), with
/// multiplicities; the residual holds whatever does not split off.
pub fn structured_roots(p: &UniPoly) -> RootSearch {
    let mut roots: Vec<(CycloNum, usize)> = Vec::new();
    let mut rem = normalize_conductors(p);
    if rem.is_zero() || rem.degree() == Some(0) {
        return RootSearch {
            roots,
            residual: None,
        };
    }
    // t = 0.
    if let Some(k) = rem.vanishing_order() {
        if k > 0 {
            rem = UniPoly::from_coeffs(rem.coeffs()[k..].to_vec());
            roots.push((CycloNum::zero(), k));
        }
    }
    let conductor = coefficient_conductor(&rem);
    // Pure roots of unity: detect the orders through gcds with x^N - 1
    // for covering moduli N, then strip the individual roots.
    for n in unity_cover(conductor) {
        if rem.degree().unwrap_or(0) == 0 {
            break;
        }
        let g = normalize_conductors(&rem.gcd(&unity_poly(n)));
        if g.degree().unwrap_or(0) == 0 {
            continue;
        }
        for j in 0..n {
            if rem.degree().unwrap_or(0) == 0 {
                break;
            }
            let u = match CycloNum::root_of_unity(n, j as i64) {
                Ok(u) => u,
                Err(_) => continue,
            };
            match try_eval(&g, &u) {
                Some(v) if v.is_zero() => {}
                _ => continue,
            }
            let k = strip_root(&mut rem, &u);
            if k > 0 {
                roots.push((u, k));
            }
        }
    }
    // Rational multiples of roots of unity: for each unity twist u,
    // rational roots s of p(u s) give roots u*s of p.
    let m = twist_modulus(conductor);
    'twists: for j in 0..m {
        if rem.degree().unwrap_or(0) == 0 {
            break 'twists;
        }
        let u = CycloNum::root_of_unity(m, j as i64).expect("modulus within bound");
        if !representable_with(&rem, &u) {
            continue;
        }
        for s in rational_root_candidates(&twist(&rem, &u)) {
            if s.is_zero() || s.abs() == Rational::one() {
                continue; // already covered
            }
            let candidate = u.mul(&CycloNum::from_rational(s));
            let k = strip_root(&mut rem, &candidate);
            if k > 0 {
                roots.push((candidate, k));
                if rem.degree().unwrap_or(0) == 0 {
                    break 'twists;
                }
            }
        }
    }
    let residual = match rem.degree() {
        None | Some(0) => None,
        Some(_) => Some(rem),
    };
    RootSearch { roots, residual }
}

/// p(u t) as a polynomial in t.
fn twist(p: &UniPoly, u: &CycloNum) -> UniPoly {
    let mut coeffs = Vec::with_capacity(p.coeffs().len());
    let mut power = CycloNum::one();
    for c in p.coeffs() {
        coeffs.push(c.mul(&power));
        power = power.mul(u);
    }
    UniPoly::from_coeffs(coeffs)
}

/// Rational root candidates of a cyclotomic-coefficient polynomial: a
/// rational root must be a root of every rational-coordinate component,
/// hence of their gcd; apply the rational root theorem to that gcd with
/// small trial division.
fn rational_root_candidates(p: &UniPoly) -> Vec<Rational> {
    // Decompose into coordinate polynomials over Q.
    let conductor = coefficient_conductor(p);
    let p = UniPoly::from_coeffs(
        p.coeffs()
            .iter()
            .map(|c| c.promote(conductor).expect("promotion within bound"))
            .collect(),
    );
    let phi = p
        .coeffs()
        .first()
        .map(|c| c.coeffs().len())
        .unwrap_or(1);
    let mut gcd: Option<UniPoly> = None;
    for coord in 0..phi {
        let comp = UniPoly::from_coeffs(
            p.coeffs()
                .iter()
                .map(|c| CycloNum::from_rational(c.coeffs()[coord].clone()))
                .collect(),
        );
        if comp.is_zero() {
            continue;
        }
        gcd = Some(match gcd {
            None => comp,
            Some(g) => g.gcd(&comp),
        });
        if gcd.as_ref().unwrap().degree() == Some(0) {
            return Vec::new();
        }
    }
    let g = match gcd {
        None => return Vec::new(),
        Some(g) => g,
    };
    // Integer-scale g and apply the rational root theorem.
    let mut denom_lcm = BigInt::one();
    for c in g.coeffs() {
        let r = c.is_rational().expect("coordinate polynomial is rational");
        denom_lcm = num::integer::lcm(denom_lcm, r.denom().clone());
    }
    let ints: Vec<BigInt> = g
        .coeffs()
        .iter()
        .map(|c| {
            let r = c.is_rational().unwrap();
            (r * Rational::from_integer(denom_lcm.clone()))
                .to_integer()
        })
        .collect();
    let constant = ints.iter().find(|c| !c.is_zero()).cloned().unwrap_or_default();
    let leading = ints.last().cloned().unwrap_or_default();
    let mut out = Vec::new();
    for p_div in small_divisors(&constant) {
        for q_div in small_divisors(&leading) {
            let cand = Rational::new(p_div.clone(), q_div.clone());
            for sign in [1, -1] {
                let r = &cand * Rational::from_integer(BigInt::from(sign));
                let val = g.eval(&CycloNum::from_rational(r.clone()));
                if val.is_zero() && !out.contains(&r) {
                    out.push(r);
                }
            }
        }
    }
    out
}

/// Positive divisors found by trial division up to a fixed bound, plus
/// matching cofactors. Misses only divisors whose prime factors all
/// exceed the bound; such roots land in the residual instead.
fn small_divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    if n.is_zero() {
        return vec![BigInt::one()];
    }
    let mut divs = vec![BigInt::one()];
    let bound = BigInt::from(10_000);
    let mut d = BigInt::from(2);
    let mut rest = n.clone();
    while &d * &d <= rest && d <= bound {
        while (&rest % &d).is_zero() {
            let mut extra = Vec::new();
            for existing in &divs {
                extra.push(existing * &d);
            }
            for e in extra {
                if !divs.contains(&e) {
                    divs.push(e);
                }
            }
            rest /= &d;
        }
        d += 1;
    }
    if rest > BigInt::one() {
        // Multiply in the remaining cofactor (it may itself be large).
        let mut extra = Vec::new();
        for existing in &divs {
            extra.push(existing * &rest);
        }
        for e in extra {
            if !divs.contains(&e) {
                divs.push(e);
            }
        }
    }
    divs.sort();
    divs.dedup();
    divs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::parse_cyclo;

    fn c(s: &str) -> CycloNum {
        parse_cyclo(s, 1).unwrap()
    }

    fn poly_with_roots(roots: &[&str]) -> UniPoly {
        let mut p = UniPoly::one();
        for r in roots {
            p = p.mul(&UniPoly::from_coeffs(vec![c(r).neg(), CycloNum::one()]));
        }
        p
    }

    #[test]
    fn finds_mixed_roots() {
        let p = poly_with_roots(&["0", "2", "2", "-1/2", "z4", "2*z4"]);
        let found = structured_roots(&p);
        assert!(found.complete());
        let total: usize = found.roots.iter().map(|(_, k)| k).sum();
        assert_eq!(total, 6);
        assert!(found.roots.contains(&(c("2"), 2)));
        assert!(found.roots.contains(&(c("2*z4"), 1)));
        assert!(found.roots.contains(&(c("-1/2"), 1)));
    }

    #[test]
    fn reports_residual_for_wild_roots() {
        // t^2 - 2 has roots +-sqrt(2): outside the structured class.
        let p = UniPoly::from_coeffs(vec![c("-2"), c("0"), c("1")]);
        let found = structured_roots(&p);
        assert!(found.roots.is_empty());
        assert_eq!(found.residual.as_ref().and_then(|r| r.degree()), Some(2));
    }

    #[test]
    fn finds_seventh_roots() {
        let p = poly_with_roots(&["z7", "z7^3"]);
        let found = structured_roots(&p);
        assert!(found.complete());
        assert_eq!(found.roots.len(), 2);
    }
}
