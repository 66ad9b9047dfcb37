//! Local curve germs: delta invariants of the standard models and exact
//! intersection multiplicities via parametrization.
//!
//! Models: a smooth branch of contact order m is x^(m+1) - y = 0, the
//! cusp-type germ is x^(m+1) - y^m = 0, and a triplet member is the
//! cube-root twist x^(k+1) - zeta3^j y^k = 0 of the cusp model. Two
//! `Triplet` values compare as distinct members of the same triple, so
//! the identity change reproduces the in-family intersection numbers.

use super::CurveError;
use crate::cyclo::CycloNum;
use crate::unipoly::UniPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GermClass {
    /// Smooth branch x^(m+1) - y = 0.
    SmoothBranch(u32),
    /// Cusp-type germ x^(m+1) - y^m = 0.
    CuspType(u32),
    /// One member of a cube-root triple of cusp-type germs.
    Triplet(u32),
}

impl GermClass {
    /// Multiplicity of the germ at the origin: 1 for a smooth branch,
    /// m for the cusp-type model.
    pub fn multiplicity(&self) -> u32 {
        match *self {
            GermClass::SmoothBranch(_) => 1,
            GermClass::CuspType(m) | GermClass::Triplet(m) => m,
        }
    }

    /// Parametrization t -> (x(t), y(t)) of the germ.
    fn parametrize(&self) -> (UniPoly, UniPoly) {
        let monomial = |e: u32| {
            let mut coeffs = vec![CycloNum::zero(); e as usize + 1];
            coeffs[e as usize] = CycloNum::one();
            UniPoly::from_coeffs(coeffs)
        };
        match *self {
            GermClass::SmoothBranch(m) => (monomial(1), monomial(m + 1)),
            GermClass::CuspType(m) | GermClass::Triplet(m) => (monomial(m), monomial(m + 1)),
        }
    }

    /// Defining equation evaluated on arcs (x(t), y(t)).
    fn equation_on(&self, x: &UniPoly, y: &UniPoly) -> UniPoly {
        match *self {
            GermClass::SmoothBranch(m) => x.pow(m as usize + 1).sub(y),
            GermClass::CuspType(m) => x.pow(m as usize + 1).sub(&y.pow(m as usize)),
            GermClass::Triplet(k) => {
                let zeta = CycloNum::root_of_unity(3, 1).expect("conductor 3");
                x.pow(k as usize + 1)
                    .sub(&y.pow(k as usize).scale(&zeta))
            }
        }
    }
}

/// delta = m(m-1)/2 for the cusp-type model.
pub fn delta_cusp_germ(m: u32) -> u32 {
    m * (m - 1) / 2
}

/// Independent oracle: the delta invariant of the cusp model equals the
/// number of gaps of the numerical semigroup generated by m and m+1.
pub fn delta_cusp_oracle(m: u32) -> u32 {
    if m <= 1 {
        return 0;
    }
    let bound = m * (m + 1);
    let mut representable = vec![false; bound as usize + 1];
    representable[0] = true;
    for n in 1..=bound {
        let n_us = n as usize;
        let a_ok = n >= m && representable[(n - m) as usize];
        let b_ok = n >= m + 1 && representable[(n - m - 1) as usize];
        representable[n_us] = a_ok || b_ok;
    }
    (1..=bound).filter(|&n| !representable[n as usize]).count() as u32
}

/// Intersection multiplicity of two germs at the origin: parametrize the
/// first, transform by the explicit 2x2 coordinate change, and take the
/// vanishing order of the second equation on the arc. Identical germs
/// under the identity change have infinite contact and error out.
pub fn germ_intersection_multiplicity(
    g1: GermClass,
    g2: GermClass,
    change: &[[CycloNum; 2]; 2],
) -> Result<u64, CurveError> {
    let det = change[0][0]
        .mul(&change[1][1])
        .sub(&change[0][1].mul(&change[1][0]));
    if det.is_zero() {
        return Err(CurveError::DegenerateChange);
    }
    let (x0, y0) = g1.parametrize();
    let x = x0.scale(&change[0][0]).add(&y0.scale(&change[0][1]));
    let y = x0.scale(&change[1][0]).add(&y0.scale(&change[1][1]));
    let restricted = g2.equation_on(&x, &y);
    match restricted.vanishing_order() {
        Some(k) => Ok(k as u64),
        None => Err(CurveError::InfiniteIntersection),
    }
}

/// The identity change.
pub fn identity_change() -> [[CycloNum; 2]; 2] {
    [
        [CycloNum::one(), CycloNum::zero()],
        [CycloNum::zero(), CycloNum::one()],
    ]
}

/// A fixed general-position change used by the verification suites.
pub fn generic_change() -> [[CycloNum; 2]; 2] {
    [
        [CycloNum::from_int(2), CycloNum::from_int(1)],
        [CycloNum::from_int(1), CycloNum::from_int(1)],
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn delta_values_and_oracle() {
        assert_eq!(delta_cusp_germ(1), 0);
        assert_eq!(delta_cusp_germ(2), 1);
        assert_eq!(delta_cusp_germ(3), 3);
        for m in 1..=5 {
            assert_eq!(delta_cusp_germ(m), delta_cusp_oracle(m));
        }
    }

    #[test]
    fn smooth_pair_in_general_position_meets_once() {
        let m = germ_intersection_multiplicity(
            GermClass::SmoothBranch(1),
            GermClass::SmoothBranch(1),
            &generic_change(),
        )
        .unwrap();
        assert_eq!(m, 1);
    }

    #[test]
    fn cusp_pair_multiplies_orders() {
        let m = germ_intersection_multiplicity(
            GermClass::CuspType(2),
            GermClass::CuspType(3),
            &generic_change(),
        )
        .unwrap();
        assert_eq!(m, 6);
        let m = germ_intersection_multiplicity(
            GermClass::SmoothBranch(1),
            GermClass::CuspType(3),
            &generic_change(),
        )
        .unwrap();
        assert_eq!(m, 3);
    }

    #[test]
    fn same_triplet_members_meet_with_k_squared_plus_k() {
        let m = germ_intersection_multiplicity(
            GermClass::Triplet(1),
            GermClass::Triplet(1),
            &identity_change(),
        )
        .unwrap();
        assert_eq!(m, 2);
        let m = germ_intersection_multiplicity(
            GermClass::Triplet(2),
            GermClass::Triplet(2),
            &identity_change(),
        )
        .unwrap();
        assert_eq!(m, 6);
    }

    #[test]
    fn identical_germ_identity_change_is_infinite() {
        assert!(matches!(
            germ_intersection_multiplicity(
                GermClass::CuspType(2),
                GermClass::CuspType(2),
                &identity_change(),
            ),
            Err(CurveError::InfiniteIntersection)
        ));
        let singular = [
            [CycloNum::one(), CycloNum::one()],
            [CycloNum::one(), CycloNum::one()],
        ];
        assert!(matches!(
            germ_intersection_multiplicity(
                GermClass::CuspType(2),
                GermClass::CuspType(3),
                &singular,
            ),
            Err(CurveError::DegenerateChange)
        ));
    }

    #[test]
    fn lower_bound_respected_under_changes() {
        // Any invertible change: multiplicity >= product of the orders.
        let changes = [
            generic_change(),
            [
                [CycloNum::from_int(1), CycloNum::from_int(3)],
                [CycloNum::from_int(2), CycloNum::from_int(1)],
            ],
            [
                [CycloNum::from_int(0), CycloNum::from_int(1)],
                [CycloNum::from_int(1), CycloNum::from_int(0)],
            ],
        ];
        for ch in &changes {
            for (g1, g2) in [
                (GermClass::CuspType(2), GermClass::CuspType(3)),
                (GermClass::CuspType(2), GermClass::SmoothBranch(2)),
                (GermClass::CuspType(4), GermClass::CuspType(3)),
            ] {
                let m = germ_intersection_multiplicity(g1, g2, ch).unwrap();
                let bound = (g1.multiplicity() as u64) * (g2.multiplicity() as u64);
                assert!(m >= bound, "{g1:?} vs {g2:?}: {m} < {bound}");
            }
        }
    }
}
