//! The one-parameter family of bidegree (4,4) curves singular along the
//! diagonal orbit: coefficient solving for prescribed singular points,
//! the associated curves, and the degree of the cusp locus obtained by
//! eliminating the coefficients from the Hessian-rank-one condition.

use super::{CurveError, PlaneCurve};
use crate::cyclo::CycloNum;
use crate::linalg::Matrix;
use crate::polyring::affine::AffinePoly;
use crate::polyring::{parse_poly, MultiPoly};
use crate::unipoly::{RatFun, UniPoly};

/// The three invariant bidegree (4,4) forms spanning the trivial-character
/// space of the dihedral action on the product of lines. Variables:
/// (x0, x1, x2, x3) = (z0, z1, w0, w1).
pub fn invariant_f1() -> MultiPoly {
    parse_poly("x0^4*x2^4 + x1^4*x3^4", 4, Some(2)).expect("f1")
}

pub fn invariant_f2() -> MultiPoly {
    parse_poly("x0^4*x3^4 + x1^4*x2^4", 4, Some(2)).expect("f2")
}

pub fn invariant_f3() -> MultiPoly {
    parse_poly("x0^3*x1*x2^3*x3 - z4*x0*x1^3*x2*x3^3", 4, Some(2)).expect("f3")
}

/// The four sign semi-invariants.
pub fn semi_invariant_g(i: usize) -> MultiPoly {
    let s = match i {
        1 => "x0^4*x2^4 - x1^4*x3^4",
        2 => "x0^4*x3^4 - x1^4*x2^4",
        3 => "x0^3*x1*x2^3*x3 + z4*x0*x1^3*x2*x3^3",
        4 => "x0^2*x1^2*x2^2*x3^2",
        _ => panic!("semi-invariant index out of range"),
    };
    parse_poly(s, 4, Some(2)).expect("semi-invariant")
}

/// Dehomogenized family pieces on the chart z0 = w0 = 1, as affine
/// polynomials in (u, v) = (z1, w1).
fn chart_pieces() -> [AffinePoly; 3] {
    let chart =
        |f: &MultiPoly| super::dehomogenize_blocks(f, &[0..2usize, 2..4usize], &[0, 0]);
    [
        chart(&invariant_f1()),
        chart(&invariant_f2()),
        chart(&invariant_f3()),
    ]
}

/// Solve for (a1, a2) with a3 = 1 such that a1 f1 + a2 f2 + f3 is
/// singular at the diagonal point ([1:x],[1:x]); None when the linear
/// system is unsolvable (exactly the eighth-root-of-unity fan).
pub fn solve_singular_family(x: &CycloNum) -> Result<Option<(CycloNum, CycloNum)>, CurveError> {
    if x.is_zero() {
        return Err(CurveError::DegenerateChange);
    }
    let pieces = chart_pieces();
    let point = [x.clone(), x.clone()];
    // Rows: value, d/du, d/dv of each piece at (x, x).
    let mut rows: Vec<Vec<CycloNum>> = Vec::new();
    let mut rhs: Vec<CycloNum> = Vec::new();
    for deriv in 0..3usize {
        let eval = |p: &AffinePoly| -> CycloNum {
            match deriv {
                0 => p.evaluate(&point),
                1 => p.partial(0).evaluate(&point),
                _ => p.partial(1).evaluate(&point),
            }
        };
        rows.push(vec![eval(&pieces[0]), eval(&pieces[1])]);
        rhs.push(eval(&pieces[2]).neg());
    }
    let m = Matrix::from_rows(rows, 2);
    if m.rank() < 2 {
        // Underdetermined systems do not occur for x != 0; treat any
        // rank drop as unsolvable for a unique coefficient pair.
        return Ok(None);
    }
    Ok(m.solve(&rhs).map(|sol| (sol[0].clone(), sol[1].clone())))
}

/// The curve a1 f1 + a2 f2 + f3 for the solved coefficients.
pub fn singular_family_curve(x: &CycloNum) -> Result<Option<PlaneCurve>, CurveError> {
    let Some((a1, a2)) = solve_singular_family(x)? else {
        return Ok(None);
    };
    let f = invariant_f1()
        .scale(&a1)
        .add(&invariant_f2().scale(&a2))?
        .add(&invariant_f3())?;
    Ok(Some(PlaneCurve::new(f)?))
}

/// Eliminate (a1, a2) from the rank-one condition on the Hessian of the
/// family member at its prescribed singular point: returns the resulting
/// polynomial q(x) together with the bookkeeping of the symbolic solve.
pub struct CuspLocus {
    /// Numerator, in lowest terms, of det of the transverse Hessian.
    pub q: UniPoly,
    /// Denominator of the symbolic coefficient solve (vanishes exactly
    /// on the unsolvable fan).
    pub solve_denominator: UniPoly,
}

/// Symbolic elimination over the rational function field in x.
pub fn cusp_locus() -> Result<CuspLocus, CurveError> {
    let pieces = chart_pieces();
    let t = UniPoly::var();
    let diag = [t.clone(), t.clone()];
    let on_diag = |p: &AffinePoly| p.compose_uni(&diag);
    // Values and derivatives along the diagonal, as polynomials in x.
    let val: Vec<UniPoly> = pieces.iter().map(|p| on_diag(p)).collect();
    let du: Vec<UniPoly> = pieces.iter().map(|p| on_diag(&p.partial(0))).collect();
    let dv: Vec<UniPoly> = pieces.iter().map(|p| on_diag(&p.partial(1))).collect();
    // Cramer on {F = 0, F_u = 0}:
    let det = val[0].mul(&du[1]).sub(&val[1].mul(&du[0]));
    if det.is_zero() {
        return Err(CurveError::DegenerateChange);
    }
    let det_rf = RatFun::from_poly(det.clone());
    let a1 = RatFun::new(
        val[1].mul(&du[2]).sub(&val[2].mul(&du[1])),
        det.clone(),
    )
    .expect("nonzero determinant");
    let a2 = RatFun::new(
        val[2].mul(&du[0]).sub(&val[0].mul(&du[2])),
        det.clone(),
    )
    .expect("nonzero determinant");
    let _ = det_rf;
    // Consistency of the third equation F_v = 0 along the diagonal.
    let residual = a1
        .mul(&RatFun::from_poly(dv[0].clone()))
        .add(&a2.mul(&RatFun::from_poly(dv[1].clone())))
        .add(&RatFun::from_poly(dv[2].clone()));
    if !residual.is_zero() {
        return Err(CurveError::DegenerateChange);
    }
    // Transverse Hessian along the diagonal.
    let second = |p: &AffinePoly, i: usize, j: usize| on_diag(&p.partial(i).partial(j));
    let combine = |i: usize, j: usize| -> RatFun {
        a1.mul(&RatFun::from_poly(second(&pieces[0], i, j)))
            .add(&a2.mul(&RatFun::from_poly(second(&pieces[1], i, j))))
            .add(&RatFun::from_poly(second(&pieces[2], i, j)))
    };
    let fuu = combine(0, 0);
    let fvv = combine(1, 1);
    let fuv = combine(0, 1);
    let det_h = fuu.mul(&fvv).sub(&fuv.mul(&fuv));
    Ok(CuspLocus {
        q: det_h.num().clone(),
        solve_denominator: det,
    })
}

/// Degree of the cusp-locus polynomial q(x).
pub fn cusp_locus_degree() -> Result<u32, CurveError> {
    Ok(cusp_locus()?.q.degree().unwrap_or(0) as u32)
}
