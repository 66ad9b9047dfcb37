//! Dimension counts and explicit bases of (semi-)invariant polynomial
//! spaces in exact arithmetic.
//!
//! Dimensions come from character-weighted trace averaging over the
//! linear closure; per-element traces of the action on a graded piece
//! are computed from power sums of the lift via the Newton recurrence,
//! so everything stays at the group's conductor. Explicit bases come
//! from the joint kernel of the generator actions on the monomial basis,
//! and are cross-checked against the trace-averaged dimension.

use crate::cyclo::CycloNum;
use crate::linalg::Matrix;
use crate::matgroup::{GroupError, MatrixGroup, ProjectiveMap};
use crate::polyring::{Grading, Monomial, MultiPoly, PolyError};
use num::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum InvariantError {
    #[error("trace average {0} is not a nonnegative integer (inconsistent character?)")]
    NonIntegralDimension(String),
    #[error("kernel rank {rank} disagrees with the trace-averaged dimension {molien}")]
    RankMismatch { molien: u32, rank: usize },
    #[error("grading/ambient mismatch: {0}")]
    Mismatch(String),
    #[error("block-swapping elements need a symmetric bidegree")]
    AsymmetricSwap,
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// A character of the linear closure, as one value per linear element
/// (aligned with `MatrixGroup::linear_elements`).
#[derive(Debug, Clone)]
pub struct Character {
    pub label: String,
    pub values: Vec<CycloNum>,
}

impl Character {
    pub fn trivial(group: &MatrixGroup) -> Self {
        Character {
            label: "trivial".into(),
            values: group.trivial_character(),
        }
    }

    pub fn det(group: &MatrixGroup) -> Self {
        Character {
            label: "det".into(),
            values: group.det_character(),
        }
    }

    /// Extend generator assignments multiplicatively (with a consistency
    /// check over all BFS transitions).
    pub fn from_generator_values(
        group: &MatrixGroup,
        label: impl Into<String>,
        gen_values: &[CycloNum],
    ) -> Result<Self, GroupError> {
        Ok(Character {
            label: label.into(),
            values: group.extend_character(gen_values)?,
        })
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(|v| v.is_one())
    }
}

/// All monomials of the given grading, ascending graded-lex.
pub fn monomial_basis(nvars: usize, grading: Grading) -> Vec<Monomial> {
    fn tuples(nvars: usize, degree: u32) -> Vec<Vec<u32>> {
        if nvars == 1 {
            return vec![vec![degree]];
        }
        let mut out = Vec::new();
        for first in 0..=degree {
            for rest in tuples(nvars - 1, degree - first) {
                let mut v = vec![first];
                v.extend(rest);
                out.push(v);
            }
        }
        out
    }
    let mut monos: Vec<Monomial> = match grading {
        Grading::Total(d) => tuples(nvars, d).into_iter().map(Monomial).collect(),
        Grading::Bi { split, a, b } => {
            let mut out = Vec::new();
            for za in tuples(split, a) {
                for wb in tuples(nvars - split, b) {
                    let mut v = za.clone();
                    v.extend(wb.iter().copied());
                    out.push(Monomial(v));
                }
            }
            out
        }
    };
    monos.sort();
    monos
}

/// Complete homogeneous symmetric value h_d of the eigenvalues of a
/// matrix, from power sums p_j = tr(M^j) via Newton's recurrence
/// k h_k = sum_{i=1..k} p_i h_{k-i}.
fn complete_homogeneous_from_power_sums(m: &Matrix, d: u32) -> CycloNum {
    let mut power_sums = Vec::with_capacity(d as usize + 1);
    power_sums.push(CycloNum::from_int(m.rows() as i64)); // p_0 = n (unused)
    let mut acc = Matrix::identity(m.rows());
    for _ in 1..=d {
        acc = acc.mul(m);
        power_sums.push(acc.trace());
    }
    let mut h = Vec::with_capacity(d as usize + 1);
    h.push(CycloNum::one());
    for k in 1..=d as usize {
        let mut sum = CycloNum::zero();
        for i in 1..=k {
            sum = sum.add(&power_sums[i].mul(&h[k - i]));
        }
        h.push(
            sum.div(&CycloNum::from_int(k as i64))
                .expect("k is a nonzero integer"),
        );
    }
    h[d as usize].clone()
}

fn block(m: &Matrix, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Matrix {
    let mut data = Vec::new();
    for r in rows.clone() {
        for c in cols.clone() {
            data.push(m.at(r, c).clone());
        }
    }
    Matrix::new(rows.len(), cols.len(), data)
}

/// Trace of f -> f o g^{-1} on the graded piece, via eigenvalue power
/// sums of the inverse lift.
pub fn trace_on_graded(g: &ProjectiveMap, grading: Grading) -> Result<CycloNum, InvariantError> {
    let inv = g
        .lift()
        .inverse()
        .map_err(|e| InvariantError::Group(e.into()))?;
    match (grading, g.block_swap()) {
        (Grading::Total(d), false) => Ok(complete_homogeneous_from_power_sums(&inv, d)),
        (Grading::Total(_), true) => Err(InvariantError::Mismatch(
            "total grading with a block swap".into(),
        )),
        (Grading::Bi { split, a, b }, false) => {
            let nb = block(&inv, 0..split, 0..split);
            let nc = block(&inv, split..inv.rows(), split..inv.cols());
            Ok(complete_homogeneous_from_power_sums(&nb, a)
                .mul(&complete_homogeneous_from_power_sums(&nc, b)))
        }
        (Grading::Bi { split, a, b }, true) => {
            if a != b {
                return Err(InvariantError::AsymmetricSwap);
            }
            // g(z, w) = (P w, Q z). The induced map on bihomogeneous
            // functions factors through z -> (P Q)^{-1} z on one factor;
            // its trace on the (a, a) piece is h_a(eigenvalues of
            // (P Q)^{-1}). The inverse lift is [[0, Q^{-1}], [P^{-1}, 0]],
            // so (P Q)^{-1} = Q^{-1} P^{-1} is the product of its blocks.
            let qinv = block(&inv, 0..split, split..inv.cols());
            let pinv = block(&inv, split..inv.rows(), 0..split);
            Ok(complete_homogeneous_from_power_sums(&qinv.mul(&pinv), a))
        }
    }
}

/// Independent oracle for the graded trace: act on every basis monomial
/// and read off the diagonal coefficient.
pub fn trace_on_graded_by_monomials(
    g: &ProjectiveMap,
    grading: Grading,
) -> Result<CycloNum, InvariantError> {
    let basis = monomial_basis(g.ambient().dim(), grading);
    let mut acc = CycloNum::zero();
    for m in &basis {
        let f = MultiPoly::new(
            g.ambient().dim(),
            grading,
            vec![(m.clone(), CycloNum::one())],
        )?;
        let gf = g.act(&f)?;
        acc = acc.add(&gf.coeff(m));
    }
    Ok(acc)
}

/// Exact dimension of the chi-semi-invariant subspace of the graded
/// piece: (1/|G_lin|) sum over the linear closure of chi(g)^{-1} tr(g).
pub fn molien_dimension(
    group: &MatrixGroup,
    grading: Grading,
    character: &Character,
) -> Result<u32, InvariantError> {
    if nvars_of(group) != ambient_vars(grading, group) {
        return Err(InvariantError::Mismatch(
            "grading arity does not match the ambient".into(),
        ));
    }
    let mut sum = CycloNum::zero();
    for (g, chi) in group.linear_elements().iter().zip(&character.values) {
        let tr = trace_on_graded(g, grading)?;
        let weight = chi.inv().map_err(GroupError::from)?;
        sum = sum.add(&weight.mul(&tr));
    }
    let avg = sum
        .div(&CycloNum::from_int(group.linear_order() as i64))
        .expect("group order nonzero");
    match avg.is_rational() {
        Some(r) if r.denom().is_one() && !r.numer().lt(&num::BigInt::zero()) => {
            use num::ToPrimitive;
            Ok(r.numer().to_u32().expect("dimension fits in u32"))
        }
        _ => Err(InvariantError::NonIntegralDimension(
            avg.to_canonical_string(),
        )),
    }
}

fn nvars_of(group: &MatrixGroup) -> usize {
    group.ambient().dim()
}

fn ambient_vars(grading: Grading, group: &MatrixGroup) -> usize {
    match grading {
        Grading::Total(_) => group.ambient().dim(),
        Grading::Bi { .. } => group.ambient().dim(),
    }
}

/// Averaging projector (1/|G_lin|) sum chi(g)^{-1} (g . f). The output is
/// chi-semi-invariant or zero, and the operator is idempotent on its image.
pub fn reynolds(
    group: &MatrixGroup,
    f: &MultiPoly,
    character: &Character,
) -> Result<MultiPoly, InvariantError> {
    let mut acc = MultiPoly::zero(f.nvars(), f.grading());
    for (g, chi) in group.linear_elements().iter().zip(&character.values) {
        let gf = g.act(f)?;
        let weight = chi.inv().map_err(GroupError::from)?;
        acc = acc.add(&gf.scale(&weight))?;
    }
    let order_inv = CycloNum::from_int(group.linear_order() as i64)
        .inv()
        .expect("order nonzero");
    Ok(acc.scale(&order_inv))
}

/// A computed (semi-)invariant space with its canonical reduced basis.
#[derive(Debug, Clone)]
pub struct InvariantSpace {
    pub group_name: String,
    pub grading: Grading,
    pub character_label: String,
    pub dimension: u32,
    pub basis: Vec<MultiPoly>,
}

impl InvariantSpace {
    /// Span comparison against a list of polynomials of the same grading.
    pub fn spans_same_as(&self, polys: &[MultiPoly]) -> Result<bool, InvariantError> {
        let nvars = match self.basis.first().map(|b| b.nvars()) {
            Some(n) => n,
            None => return Ok(polys.is_empty() || polys.iter().all(|p| p.is_zero())),
        };
        let monos = monomial_basis(nvars, self.grading);
        let to_row = |p: &MultiPoly| -> Vec<CycloNum> {
            monos.iter().map(|m| p.coeff(m)).collect()
        };
        let a = Matrix::from_rows(self.basis.iter().map(to_row).collect(), monos.len());
        let b = Matrix::from_rows(polys.iter().map(to_row).collect(), monos.len());
        Ok(a.row_span_equal(&b))
    }
}

/// Exact basis of the chi-semi-invariant subspace: joint kernel of the
/// generator constraints on the monomial basis, reduced to a canonical
/// echelon basis, with the dimension checked against `molien_dimension`.
pub fn invariant_basis(
    group: &MatrixGroup,
    grading: Grading,
    character: &Character,
) -> Result<InvariantSpace, InvariantError> {
    let nvars = group.ambient().dim();
    let monos = monomial_basis(nvars, grading);
    let dim = monos.len();
    // Constraint rows: for each generator, (rho(gen) - chi(gen) I) f = 0.
    let mut rows: Vec<Vec<CycloNum>> = Vec::new();
    for (j, g) in group.generators().iter().enumerate() {
        let chi_g = character_value_on_generator(group, character, j);
        // Column k: coefficients of g . m_k over the monomial basis.
        let mut action = vec![vec![CycloNum::zero(); dim]; dim];
        for (k, m) in monos.iter().enumerate() {
            let f = MultiPoly::new(nvars, grading, vec![(m.clone(), CycloNum::one())])?;
            let gf = g.act(&f)?;
            for (mm, c) in gf.terms() {
                let row = monos
                    .binary_search(mm)
                    .expect("action preserves the graded piece");
                action[row][k] = c.clone();
            }
        }
        for (r, row) in action.iter().enumerate() {
            let mut constraint = row.clone();
            constraint[r] = constraint[r].sub(&chi_g);
            rows.push(constraint);
        }
    }
    let kernel = if rows.is_empty() {
        Matrix::identity(dim)
            .entries()
            .chunks(dim)
            .map(|c| c.to_vec())
            .collect()
    } else {
        Matrix::from_rows(rows, dim).kernel_basis()
    };
    // Canonical reduced basis via row echelon form.
    let canonical = if kernel.is_empty() {
        Vec::new()
    } else {
        let reduced = Matrix::from_rows(kernel, dim).rref_nonzero_rows();
        (0..reduced.rows())
            .map(|r| (0..dim).map(|c| reduced.at(r, c).clone()).collect())
            .collect::<Vec<Vec<CycloNum>>>()
    };
    let molien = molien_dimension(group, grading, character)?;
    if molien as usize != canonical.len() {
        return Err(InvariantError::RankMismatch {
            molien,
            rank: canonical.len(),
        });
    }
    let basis = canonical
        .into_iter()
        .map(|coeffs| {
            MultiPoly::new(
                nvars,
                grading,
                monos
                    .iter()
                    .cloned()
                    .zip(coeffs)
                    .filter(|(_, c)| !c.is_zero()),
            )
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(InvariantSpace {
        group_name: group.name().to_string(),
        grading,
        character_label: character.label.clone(),
        dimension: molien,
        basis,
    })
}

fn character_value_on_generator(
    group: &MatrixGroup,
    character: &Character,
    gen_idx: usize,
) -> CycloNum {
    let name = &group.generator_names()[gen_idx];
    group
        .character_on_generator(&character.values, name)
        .expect("generator exists")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::parse_cyclo;
    use crate::matgroup::Ambient;
    use crate::polyring::parse_poly;

    fn c(s: &str) -> CycloNum {
        parse_cyclo(s, 1).unwrap()
    }

    fn mat3(rows: [[&str; 3]; 3]) -> Matrix {
        let data = rows.iter().flat_map(|r| r.iter().map(|s| c(s))).collect();
        Matrix::new(3, 3, data)
    }

    fn c3c7() -> MatrixGroup {
        MatrixGroup::generate(
            "c3c7",
            Ambient::P2,
            vec![
                (
                    "t".to_string(),
                    ProjectiveMap::new(
                        Ambient::P2,
                        mat3([["z7", "0", "0"], ["0", "z7^2", "0"], ["0", "0", "z7^4"]]),
                        false,
                    )
                    .unwrap(),
                ),
                (
                    "s".to_string(),
                    ProjectiveMap::new(
                        Ambient::P2,
                        mat3([["0", "0", "1"], ["1", "0", "0"], ["0", "1", "0"]]),
                        false,
                    )
                    .unwrap(),
                ),
            ],
            100,
        )
        .unwrap()
    }

    fn c7() -> MatrixGroup {
        MatrixGroup::generate(
            "c7",
            Ambient::P2,
            vec![(
                "t".to_string(),
                ProjectiveMap::new(
                    Ambient::P2,
                    mat3([["z7", "0", "0"], ["0", "z7^2", "0"], ["0", "0", "z7^4"]]),
                    false,
                )
                .unwrap(),
            )],
            100,
        )
        .unwrap()
    }

    #[test]
    fn monomial_counts() {
        assert_eq!(monomial_basis(3, Grading::Total(6)).len(), 28);
        assert_eq!(
            monomial_basis(
                4,
                Grading::Bi {
                    split: 2,
                    a: 4,
                    b: 4
                }
            )
            .len(),
            25
        );
    }

    #[test]
    fn trivial_group_has_all_monomials() {
        let triv = MatrixGroup::generate(
            "triv",
            Ambient::P2,
            vec![("id".to_string(), ProjectiveMap::identity(Ambient::P2))],
            10,
        )
        .unwrap();
        let chi = Character::trivial(&triv);
        assert_eq!(molien_dimension(&triv, Grading::Total(6), &chi).unwrap(), 28);
    }

    #[test]
    fn c3c7_degree_six_invariants_have_dimension_two() {
        let g = c3c7();
        let chi = Character::trivial(&g);
        assert_eq!(molien_dimension(&g, Grading::Total(6), &chi).unwrap(), 2);
        let space = invariant_basis(&g, Grading::Total(6), &chi).unwrap();
        assert_eq!(space.dimension, 2);
        let p1 = parse_poly("x0^2*x1^2*x2^2", 3, None).unwrap();
        let p2 = parse_poly("x0^5*x1 + x2^5*x0 + x1^5*x2", 3, None).unwrap();
        assert!(space.spans_same_as(&[p1, p2]).unwrap());
    }

    #[test]
    fn newton_trace_matches_monomial_trace() {
        let g = c3c7();
        for e in g.linear_elements().iter().take(6) {
            let a = trace_on_graded(e, Grading::Total(4)).unwrap();
            let b = trace_on_graded_by_monomials(e, Grading::Total(4)).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn reynolds_kills_non_invariant_weight() {
        // Averaging x0^6 over the diagonal C7: weight zeta^6 != 1 forces 0.
        let g = c7();
        let chi = Character::trivial(&g);
        let f = parse_poly("x0^6", 3, None).unwrap();
        let avg = reynolds(&g, &f, &chi).unwrap();
        assert!(avg.is_zero());
        // Direct 7-term sum oracle.
        let mut direct = MultiPoly::zero(3, Grading::Total(6));
        for e in g.linear_elements() {
            direct = direct.add(&e.act(&f).unwrap()).unwrap();
        }
        assert!(direct.is_zero());
    }

    #[test]
    fn reynolds_fixes_invariant() {
        let g = c3c7();
        let chi = Character::trivial(&g);
        let p1 = parse_poly("x0^2*x1^2*x2^2", 3, None).unwrap();
        assert_eq!(reynolds(&g, &p1, &chi).unwrap(), p1);
    }

    #[test]
    fn reynolds_is_idempotent() {
        let g = c3c7();
        let chi = Character::trivial(&g);
        let f = parse_poly("x0^6 + 3*x0^5*x1 - x1^2*x2^4", 3, None).unwrap();
        let once = reynolds(&g, &f, &chi).unwrap();
        let twice = reynolds(&g, &once, &chi).unwrap();
        assert_eq!(once, twice);
    }

    #[test]
    fn order_seven_weight_spaces_of_low_degree_are_monomial() {
        // Every semi-invariant line and conic of the diagonal order-7
        // action is a monomial: the weight eigenspaces in degrees 1 and
        // 2 all have dimension at most one. (This is what forces any
        // reducible member of the invariant sextic pencil to contain a
        // coordinate line.)
        let g = c7();
        for degree in [1u32, 2] {
            for k in 0..7i64 {
                let chi = Character::from_generator_values(
                    &g,
                    format!("w{k}"),
                    &[CycloNum::root_of_unity(7, k).unwrap()],
                )
                .unwrap();
                let dim = molien_dimension(&g, Grading::Total(degree), &chi).unwrap();
                assert!(dim <= 1, "degree {degree}, weight {k}: dim {dim}");
            }
        }
    }

    #[test]
    fn basis_members_carry_the_declared_character() {
        let g = c3c7();
        let chi = Character::trivial(&g);
        let space = invariant_basis(&g, Grading::Total(6), &chi).unwrap();
        for b in &space.basis {
            let computed = g.semi_invariance_character(b).unwrap().unwrap();
            assert_eq!(computed, chi.values);
        }
    }

    #[test]
    fn reynolds_over_trivial_group_is_identity() {
        let triv = MatrixGroup::generate(
            "triv",
            Ambient::P2,
            vec![("id".to_string(), ProjectiveMap::identity(Ambient::P2))],
            10,
        )
        .unwrap();
        let chi = Character::trivial(&triv);
        let f = parse_poly("x0^6 + 3*x0^5*x1 - x1^2*x2^4", 3, None).unwrap();
        assert_eq!(reynolds(&triv, &f, &chi).unwrap(), f);
    }

    #[test]
    fn dimension_monotone_under_enlargement() {
        let small = c7();
        let big = c3c7();
        let chi_s = Character::trivial(&small);
        let chi_b = Character::trivial(&big);
        let ds = molien_dimension(&small, Grading::Total(6), &chi_s).unwrap();
        let db = molien_dimension(&big, Grading::Total(6), &chi_b).unwrap();
        assert!(ds >= db);
        assert_eq!(ds, 4); // the four C7-invariant sextic monomial orbits
    }
}
