//! Integer ledgers for surface arithmetic: Euler characteristics of
//! branched double covers, the equivariant reduction budget,
//! self-intersection transforms, adjunction, and the fixed lookup tables
//! for symplectic fixed points and lines on Del Pezzo surfaces. Pure
//! integer identities with explicit range guards; no geometry is built.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LedgerError {
    #[error("order {0} outside the symplectic range [2, 8]")]
    OrderOutOfRange(u32),
    #[error("Del Pezzo degree {0} outside [1, 7]")]
    DegreeOutOfRange(u32),
    #[error("minimal-model Euler characteristic {0} outside [3, 11]")]
    EulerOutOfRange(i64),
    #[error("adjunction parity violated: KC + C^2 = {0} is odd")]
    ParityViolation(i64),
    #[error("cover ledger identity fails: 2*{e_quotient} - {branch_sum} = {lhs} != {e_cover}")]
    CoverIdentity {
        e_quotient: i64,
        branch_sum: i64,
        lhs: i64,
        e_cover: i64,
    },
    #[error("reduction ledger identity fails: {lhs} != {rhs}")]
    MoriIdentity { lhs: i64, rhs: i64 },
}

/// Euler characteristic of a double cover: e(X) = 2 e(Y) - sum e(C_i).
pub fn euler_double_cover(e_quotient: i64, branch_eulers: &[i64]) -> i64 {
    2 * e_quotient - branch_eulers.iter().sum::<i64>()
}

/// Record for the double-cover Euler identity, validated on construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverLedger {
    pub e_quotient: i64,
    pub branch_eulers: Vec<i64>,
    pub e_cover: i64,
}

impl CoverLedger {
    pub fn new(e_quotient: i64, branch_eulers: Vec<i64>, e_cover: i64) -> Result<Self, LedgerError> {
        let branch_sum: i64 = branch_eulers.iter().sum();
        let lhs = 2 * e_quotient - branch_sum;
        if lhs != e_cover {
            return Err(LedgerError::CoverIdentity {
                e_quotient,
                branch_sum,
                lhs,
                e_cover,
            });
        }
        Ok(CoverLedger {
            e_quotient,
            branch_eulers,
            e_cover,
        })
    }
}

/// Record for the reduction count identity
/// 13 - g = e_min + m - n (or 12 = e_min + m - n without a positive-genus
/// branch curve).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MoriLedger {
    pub genus: Option<i64>,
    pub rational_branch_curves: i64,
    pub fibers: i64,
    pub e_min: i64,
}

impl MoriLedger {
    pub fn new(
        genus: Option<i64>,
        rational_branch_curves: i64,
        fibers: i64,
        e_min: i64,
    ) -> Result<Self, LedgerError> {
        if !(3..=11).contains(&e_min) {
            return Err(LedgerError::EulerOutOfRange(e_min));
        }
        let lhs = match genus {
            Some(g) => 13 - g,
            None => 12,
        };
        let rhs = e_min + fibers - rational_branch_curves;
        if lhs != rhs {
            return Err(LedgerError::MoriIdentity { lhs, rhs });
        }
        Ok(MoriLedger {
            genus,
            rational_branch_curves,
            fibers,
            e_min,
        })
    }
}

/// Does the count identity hold for the given data?
pub fn mori_constraint(
    genus: Option<i64>,
    rational_branch_curves: i64,
    fibers: i64,
    e_min: i64,
) -> Result<bool, LedgerError> {
    match MoriLedger::new(genus, rational_branch_curves, fibers, e_min) {
        Ok(_) => Ok(true),
        Err(LedgerError::MoriIdentity { .. }) => Ok(false),
        Err(e) => Err(e),
    }
}

/// Upper bound on the number of contracted fibers: n + 12 - e_min.
pub fn mori_budget(rational_branch_curves: i64, e_min: i64) -> Result<i64, LedgerError> {
    if !(3..=11).contains(&e_min) {
        return Err(LedgerError::EulerOutOfRange(e_min));
    }
    Ok(rational_branch_curves + 12 - e_min)
}

/// Self-intersection after blowing down fibers meeting the curve with
/// the given multiplicities: B^2 + sum (E.B)^2.
pub fn blowdown_selfint(b_sq: i64, fiber_mults: &[i64]) -> i64 {
    b_sq + fiber_mults.iter().map(|m| m * m).sum::<i64>()
}

/// Image of a ramification curve in the quotient: (pi(C))^2 = 2 C^2.
pub fn branch_selfint_double(c_sq: i64) -> i64 {
    2 * c_sq
}

/// Genus by adjunction: 2g - 2 = K.C + C^2.
pub fn adjunction_genus(kc: i64, c_sq: i64) -> Result<i64, LedgerError> {
    let sum = kc + c_sq;
    if sum.rem_euclid(2) != 0 {
        return Err(LedgerError::ParityViolation(sum));
    }
    Ok(sum / 2 + 1)
}

/// Fixed-point counts of symplectic automorphisms by order; for prime
/// order the table equals 24/(p+1), which is asserted here rather than
/// assumed.
pub fn nikulin_fixed_points(order: u32) -> Result<u32, LedgerError> {
    let table = [
        (2u32, 8u32),
        (3, 6),
        (4, 4),
        (5, 4),
        (6, 2),
        (7, 3),
        (8, 2),
    ];
    let value = table
        .iter()
        .find(|(o, _)| *o == order)
        .map(|(_, v)| *v)
        .ok_or(LedgerError::OrderOutOfRange(order))?;
    if [2u32, 3, 5, 7].contains(&order) {
        debug_assert_eq!(value, 24 / (order + 1));
    }
    Ok(value)
}

/// Number of (-1)-curves on a Del Pezzo surface of degree 1..=7.
pub fn delpezzo_line_count(degree: u32) -> Result<u32, LedgerError> {
    match degree {
        1 => Ok(240),
        2 => Ok(56),
        3 => Ok(27),
        4 => Ok(16),
        5 => Ok(10),
        6 => Ok(6),
        7 => Ok(3),
        other => Err(LedgerError::DegreeOutOfRange(other)),
    }
}

/// h^0(Y, O(-r K_Y)) = 1 + r (r + 1) d / 2 on a Del Pezzo surface of
/// degree d.
pub fn h0_anticanonical(d: u32, r: u32) -> Result<u64, LedgerError> {
    if d == 0 {
        return Err(LedgerError::DegreeOutOfRange(d));
    }
    Ok(1 + (r as u64) * (r as u64 + 1) * (d as u64) / 2)
}

/// Euler characteristic of a branched cover: deg * e(base) - contribution.
pub fn riemann_hurwitz(deg: i64, e_base: i64, branch_contribution: i64) -> i64 {
    deg * e_base - branch_contribution
}

/// Inverse query: the branch contribution forced by the other data.
pub fn branch_contribution(deg: i64, e_base: i64, e_total: i64) -> i64 {
    deg * e_base - e_total
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn double_cover_examples() {
        assert_eq!(euler_double_cover(3, &[-18]), 24);
        assert_eq!(euler_double_cover(4, &[-16]), 24);
        assert_eq!(euler_double_cover(12, &[]), 24);
        assert!(CoverLedger::new(3, vec![-18], 24).is_ok());
        assert!(CoverLedger::new(3, vec![-18], 25).is_err());
    }

    #[test]
    fn reduction_ledger_examples() {
        // g = 3, n = 0, e_min = 3 forces m = 7.
        assert!(mori_constraint(Some(3), 0, 7, 3).unwrap());
        assert!(!mori_constraint(Some(3), 0, 6, 3).unwrap());
        assert_eq!(mori_budget(7, 3).unwrap(), 16);
        assert_eq!(mori_budget(0, 3).unwrap(), 9);
        // g = 10, n = 0, e_min = 3: the quotient is already minimal.
        assert!(mori_constraint(Some(10), 0, 0, 3).unwrap());
        assert!(mori_budget(0, 2).is_err());
        // budget(n, 3) - budget(n, e) = e - 3.
        for e in 3..=11 {
            assert_eq!(
                mori_budget(5, 3).unwrap() - mori_budget(5, e).unwrap(),
                e - 3
            );
        }
    }

    #[test]
    fn selfintersection_transforms() {
        assert_eq!(blowdown_selfint(8, &[2, 2, 2, 2, 2, 2, 2]), 36);
        assert_eq!(blowdown_selfint(20, &[2, 2, 2, 2]), 36);
        assert_eq!(blowdown_selfint(-3, &[]), -3);
        // Additivity over disjoint fiber sets.
        let all = blowdown_selfint(8, &[2, 2, 1, 3]);
        let split = blowdown_selfint(blowdown_selfint(8, &[2, 2]), &[1, 3]);
        assert_eq!(all, split);
        assert_eq!(branch_selfint_double(-2), -4);
        assert_eq!(branch_selfint_double(4), 8);
        assert_eq!(branch_selfint_double(0), 0);
    }

    #[test]
    fn adjunction_examples() {
        assert_eq!(adjunction_genus(0, -2).unwrap(), 0);
        assert_eq!(adjunction_genus(-6, 12).unwrap(), 4); // d = 3, C ~ -2K
        assert_eq!(adjunction_genus(-1, -1).unwrap(), 0);
        assert!(adjunction_genus(0, -3).is_err());
        // Round-trip with 2g - 2.
        for g in 0..20i64 {
            assert_eq!(adjunction_genus(0, 2 * g - 2).unwrap(), g);
        }
    }

    #[test]
    fn nikulin_table() {
        let expected = [(2, 8), (3, 6), (4, 4), (5, 4), (6, 2), (7, 3), (8, 2)];
        for (o, v) in expected {
            assert_eq!(nikulin_fixed_points(o).unwrap(), v);
        }
        for p in [2u32, 3, 5, 7] {
            assert_eq!(nikulin_fixed_points(p).unwrap(), 24 / (p + 1));
        }
        assert!(nikulin_fixed_points(9).is_err());
        assert!(nikulin_fixed_points(1).is_err());
    }

    #[test]
    fn delpezzo_and_sections() {
        assert_eq!(delpezzo_line_count(2).unwrap(), 56);
        let all: Vec<u32> = (1..=7)
            .map(|d| delpezzo_line_count(d).unwrap())
            .collect();
        assert_eq!(all, vec![240, 56, 27, 16, 10, 6, 3]);
        assert!(delpezzo_line_count(8).is_err());
        assert_eq!(h0_anticanonical(3, 2).unwrap(), 10);
        assert_eq!(h0_anticanonical(1, 2).unwrap(), 4);
    }

    #[test]
    fn riemann_hurwitz_examples() {
        assert_eq!(branch_contribution(16, 2, -18), 50);
        assert_eq!(branch_contribution(8, 2, -18), 34);
        assert_eq!(riemann_hurwitz(16, 2, 50), -18);
        assert_eq!(riemann_hurwitz(2, 0, 0), 0);
    }
}
