//! Complete singular-locus computation by resultant elimination.
//!
//! Plane case: after a recorded linear coordinate change that keeps
//! [0:0:1] off all three derivative curves, the pairwise z-resultants of
//! the partials are binary forms whose gcd carries every singular
//! (x0:x1) direction; solving the z-gcd over each root recovers the
//! points. Bidegree case: the same scheme runs per affine chart with
//! sample-and-interpolate resultants in one chart variable.
//!
//! Points whose coordinates fall outside the structured root class are
//! reported as residual eliminant factors, never silently dropped.

use super::roots::{structured_roots, RootSearch};
use super::{analyze_singular_point, CurveError, PlaneCurve, SingularityReport};
use crate::cyclo::CycloNum;
use crate::linalg::Matrix;
use crate::matgroup::{Ambient, PointP};
use crate::polyring::affine::AffinePoly;
use crate::polyring::{Grading, MultiPoly};
use crate::unipoly::UniPoly;

/// Maximum supported curve degree for elimination.
pub const MAX_ELIMINATION_DEGREE: u32 = 8;

/// Unresolved part of an eliminant, reported instead of explicit points.
#[derive(Debug, Clone)]
pub struct ResidualFactor {
    pub chart: String,
    pub degree: usize,
    pub factor: String,
}

/// Outcome of the singular-locus computation.
#[derive(Debug, Clone)]
pub struct SingularLocus {
    pub points: Vec<SingularityReport>,
    pub residuals: Vec<ResidualFactor>,
    /// Recorded coordinate change (plane case) when one was needed.
    pub coordinate_change: Option<Matrix>,
}

impl SingularLocus {
    /// A complete, empty locus certifies smoothness.
    pub fn is_smooth_certificate(&self) -> bool {
        self.points.is_empty() && self.residuals.is_empty()
    }

    pub fn is_complete(&self) -> bool {
        self.residuals.is_empty()
    }
}

/// Full singular locus of a plane or bidegree curve (degree <= 8).
pub fn singular_points(curve: &PlaneCurve) -> Result<SingularLocus, CurveError> {
    match curve.poly().grading() {
        Grading::Total(d) => {
            if d > MAX_ELIMINATION_DEGREE {
                return Err(CurveError::DegreeTooLarge(d, MAX_ELIMINATION_DEGREE));
            }
            plane_singular_points(curve)
        }
        Grading::Bi { a, b, .. } => {
            let m = a.max(b);
            if m > MAX_ELIMINATION_DEGREE {
                return Err(CurveError::DegreeTooLarge(m, MAX_ELIMINATION_DEGREE));
            }
            bidegree_singular_points(curve)
        }
    }
}

/// Deterministic sequence of integer coordinate changes to try.
fn candidate_changes() -> Vec<Matrix> {
    let e = |v: i64| CycloNum::from_int(v);
    let mats = [
        [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
        [[1, 0, 1], [0, 1, 0], [0, 0, 1]],
        [[1, 0, 0], [0, 1, 1], [0, 0, 1]],
        [[1, 0, 1], [0, 1, 1], [0, 0, 1]],
        [[1, 0, 2], [0, 1, 1], [0, 0, 1]],
        [[1, 0, 1], [0, 1, 2], [1, 0, 1]],
        [[1, 1, 1], [0, 1, 1], [0, 0, 1]],
        [[1, 2, 3], [0, 1, 2], [0, 0, 1]],
        [[1, 0, 3], [0, 1, 5], [0, 0, 1]],
        [[2, 1, 7], [1, 1, 3], [0, 0, 1]],
    ];
    mats.iter()
        .map(|rows| {
            Matrix::new(
                3,
                3,
                rows.iter().flat_map(|r| r.iter().map(|&v| e(v))).collect(),
            )
        })
        .collect()
}

fn plane_singular_points(curve: &PlaneCurve) -> Result<SingularLocus, CurveError> {
    // Identity coordinates first; fall back to recorded changes only if
    // the elimination degenerates there.
    match plane_attempt(curve, None) {
        Err(CurveError::NonReduced) => {}
        other => return other,
    }
    for a in candidate_changes().into_iter().skip(1) {
        if a.det().is_zero() {
            continue;
        }
        match plane_attempt(curve, Some(a)) {
            Err(CurveError::NonReduced) => continue,
            other => return other,
        }
    }
    Err(CurveError::NonReduced)
}

/// One elimination pass, optionally after the substitution x -> A x.
fn plane_attempt(curve: &PlaneCurve, change: Option<Matrix>) -> Result<SingularLocus, CurveError> {
    let f = match &change {
        None => curve.poly().clone(),
        Some(a) => curve.poly().substitute_linear(a)?,
    };
    let partials = f.gradient()?;
    let nonzero: Vec<&MultiPoly> = partials.iter().filter(|g| !g.is_zero()).collect();
    if nonzero.len() <= 1 {
        // At most one active partial: the form is a power of a single
        // coordinate up to scaling, hence non-reduced for degree >= 2.
        return Err(CurveError::NonReduced);
    }

    // Pairwise eliminants in z, as binary forms in (x0, x1).
    let mut gcd_form: Option<BinaryForm> = None;
    for i in 0..nonzero.len() {
        for j in i + 1..nonzero.len() {
            let r = pair_eliminant(nonzero[i], nonzero[j])?;
            if r.poly.is_zero() {
                // The eliminant vanishes identically: the two partials
                // share a z-dependent component.
                return Err(CurveError::NonReduced);
            }
            gcd_form = Some(match gcd_form {
                None => r,
                Some(acc) => acc.gcd(&r),
            });
        }
    }
    let gcd_form = gcd_form.expect("at least one pair");

    let mut points: Vec<PointP> = Vec::new();
    let mut residuals: Vec<ResidualFactor> = Vec::new();

    // Candidate directions: roots of the eliminant gcd plus [1:0].
    let mut directions: Vec<(CycloNum, CycloNum)> = Vec::new();
    if gcd_form.infinity_mult > 0 {
        directions.push((CycloNum::one(), CycloNum::zero()));
    }
    let search = structured_roots(&gcd_form.poly);
    record_residual(&search, "plane eliminant", &mut residuals);
    for (root, _) in &search.roots {
        directions.push((root.clone(), CycloNum::one()));
    }

    for (x0, x1) in directions {
        // Common z-roots of the partials over this direction.
        let mut z_gcd: Option<UniPoly> = None;
        let mut all_zero = true;
        for g in &partials {
            if g.is_zero() {
                continue;
            }
            let uni = specialize_xy(g, &x0, &x1);
            if uni.is_zero() {
                continue;
            }
            all_zero = false;
            z_gcd = Some(match z_gcd {
                None => uni,
                Some(acc) => acc.gcd(&uni),
            });
        }
        if all_zero {
            // Every partial vanishes along the whole line over this
            // direction: positive-dimensional singular locus.
            return Err(CurveError::NonReduced);
        }
        let z_gcd = z_gcd.unwrap();
        if z_gcd.degree() == Some(0) {
            continue; // spurious direction
        }
        let zs = structured_roots(&z_gcd);
        record_residual(&zs, "z-fiber", &mut residuals);
        for (z0, _) in &zs.roots {
            let q = vec![x0.clone(), x1.clone(), z0.clone()];
            // Candidate must annihilate every partial (including any
            // identically-zero ones, trivially).
            if !partials
                .iter()
                .all(|g| g.evaluate(&q).map(|v| v.is_zero()).unwrap_or(false))
            {
                continue;
            }
            let p = match &change {
                None => q,
                Some(a) => a.mul_vec(&q),
            };
            let p = PointP::new(Ambient::P2, p)?;
            if !points.contains(&p) {
                points.push(p);
            }
        }
    }

    // The base point [0:0:1] of the direction projection, checked apart.
    let e3 = PointP::new(
        Ambient::P2,
        vec![CycloNum::zero(), CycloNum::zero(), CycloNum::one()],
    )?;
    let e3_orig = match &change {
        None => e3,
        Some(a) => PointP::new(Ambient::P2, a.mul_vec(e3.coords()))?,
    };
    if super::is_singular_at(curve, &e3_orig)? && !points.contains(&e3_orig) {
        points.push(e3_orig);
    }

    let reports = points
        .into_iter()
        .map(|p| analyze_singular_point(curve, &p))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(SingularLocus {
        points: reports,
        residuals,
        coordinate_change: change,
    })
}

/// Eliminant of a pair of partials with respect to z.
fn pair_eliminant(g1: &MultiPoly, g2: &MultiPoly) -> Result<BinaryForm, CurveError> {
    let d1 = degree_in(g1, 2);
    let d2 = degree_in(g2, 2);
    match (d1, d2) {
        (0, 0) => {
            let a = binary_form_of(g1);
            let b = binary_form_of(g2);
            Ok(a.gcd(&b))
        }
        (0, _) => Ok(binary_form_of(g1)),
        (_, 0) => Ok(binary_form_of(g2)),
        _ => resultant_in_z(g1, g2),
    }
}

/// View a z-free ternary form as a binary form in (x0, x1).
fn binary_form_of(g: &MultiPoly) -> BinaryForm {
    let total = total_degree(g) as usize;
    let mut coeffs: Vec<CycloNum> = Vec::new();
    for (m, c) in g.terms() {
        debug_assert_eq!(m.0[2], 0);
        let e = m.0[0] as usize;
        if coeffs.len() <= e {
            coeffs.resize(e + 1, CycloNum::zero());
        }
        coeffs[e] = coeffs[e].add(c);
    }
    let poly = UniPoly::from_coeffs(coeffs);
    let deg = poly.degree().unwrap_or(0);
    BinaryForm {
        infinity_mult: total.saturating_sub(deg),
        poly,
    }
}

fn record_residual(search: &RootSearch, chart: &str, out: &mut Vec<ResidualFactor>) {
    if let Some(res) = &search.residual {
        out.push(ResidualFactor {
            chart: chart.to_string(),
            degree: res.degree().unwrap_or(0),
            factor: res.to_display_string("t"),
        });
    }
}

/// Binary form represented by its dehomogenization and the multiplicity
/// of the direction [1:0].
#[derive(Debug, Clone)]
struct BinaryForm {
    poly: UniPoly,
    infinity_mult: usize,
}

impl BinaryForm {
    fn gcd(&self, other: &BinaryForm) -> BinaryForm {
        BinaryForm {
            poly: self.poly.gcd(&other.poly),
            infinity_mult: self.infinity_mult.min(other.infinity_mult),
        }
    }
}

/// Res_z of two ternary forms taken at their actual z-degrees, computed
/// by evaluation at x0 = t, x1 = 1 and interpolation. Samples where a
/// leading z-coefficient drops are skipped; the resulting binary form is
/// still a valid eliminant since the resultant is a polynomial
/// combination of its two arguments.
fn resultant_in_z(g1: &MultiPoly, g2: &MultiPoly) -> Result<BinaryForm, CurveError> {
    let d1 = degree_in(g1, 2) as usize;
    let d2 = degree_in(g2, 2) as usize;
    let m = total_degree(g1) as usize;
    let n = total_degree(g2) as usize;
    // Homogeneity degree of the resultant binary form.
    let bound = d1 * n + d2 * m - d1 * d2;
    let mut samples = Vec::with_capacity(bound + 1);
    let mut k: i64 = 0;
    while samples.len() <= bound {
        let t = CycloNum::from_int(k);
        k += 1;
        if k > 4 * (bound as i64) + 16 {
            return Err(CurveError::NoGenericChange);
        }
        let u1 = specialize_xy(g1, &t, &CycloNum::one());
        let u2 = specialize_xy(g2, &t, &CycloNum::one());
        if u1.degree() != Some(d1) || u2.degree() != Some(d2) {
            continue; // leading coefficient dropped at this sample
        }
        samples.push((t, u1.resultant(&u2)));
    }
    let poly = UniPoly::interpolate(&samples).expect("distinct integer nodes");
    if poly.is_zero() {
        return Ok(BinaryForm {
            infinity_mult: 0,
            poly,
        });
    }
    let deg = poly.degree().unwrap_or(0);
    Ok(BinaryForm {
        infinity_mult: bound.saturating_sub(deg),
        poly,
    })
}

fn total_degree(f: &MultiPoly) -> u32 {
    match f.grading() {
        Grading::Total(d) => d,
        Grading::Bi { a, b, .. } => a + b,
    }
}

fn degree_in(f: &MultiPoly, var: usize) -> u32 {
    f.terms().map(|(m, _)| m.0[var]).max().unwrap_or(0)
}

/// Substitute x0, x1 by constants, leaving a univariate polynomial in z.
fn specialize_xy(f: &MultiPoly, x0: &CycloNum, x1: &CycloNum) -> UniPoly {
    let dz = degree_in(f, 2) as usize;
    let mut coeffs = vec![CycloNum::zero(); dz + 1];
    // Power tables.
    let maxe = f.terms().map(|(m, _)| m.0[0].max(m.0[1])).max().unwrap_or(0) as usize;
    let mut p0 = vec![CycloNum::one()];
    let mut p1 = vec![CycloNum::one()];
    for e in 1..=maxe {
        p0.push(p0[e - 1].mul(x0));
        p1.push(p1[e - 1].mul(x1));
    }
    for (m, c) in f.terms() {
        let v = c.mul(&p0[m.0[0] as usize]).mul(&p1[m.0[1] as usize]);
        let z = m.0[2] as usize;
        coeffs[z] = coeffs[z].add(&v);
    }
    UniPoly::from_coeffs(coeffs)
}

/// Bidegree curves: run the plane scheme per affine chart.
fn bidegree_singular_points(curve: &PlaneCurve) -> Result<SingularLocus, CurveError> {
    let f = curve.poly();
    let mut points: Vec<PointP> = Vec::new();
    let mut residuals = Vec::new();
    for z_chart in 0..2usize {
        for w_chart in 0..2usize {
            let chart_name = format!("chart z{} w{}", z_chart, w_chart);
            let affine = super::dehomogenize_blocks(f, &[0..2, 2..4], &[z_chart, w_chart]);
            let fu = affine.partial(0);
            let fv = affine.partial(1);
            if affine.is_zero() {
                return Err(CurveError::NonReduced);
            }
            // Eliminate v from the pairs (F, F_u), (F, F_v), (F_u, F_v).
            let mut gcd_u: Option<UniPoly> = None;
            for (a, b) in [(&affine, &fu), (&affine, &fv), (&fu, &fv)] {
                if a.is_zero() || b.is_zero() {
                    continue;
                }
                let r = resultant_in_v(a, b)?;
                if r.is_zero() {
                    return Err(CurveError::NonReduced);
                }
                gcd_u = Some(match gcd_u {
                    None => r,
                    Some(acc) => acc.gcd(&r),
                });
            }
            let gcd_u = gcd_u.ok_or(CurveError::NonReduced)?;
            if gcd_u.degree() == Some(0) {
                continue;
            }
            let us = structured_roots(&gcd_u);
            record_residual(&us, &chart_name, &mut residuals);
            for (u0, _) in &us.roots {
                // Common v-roots of F, F_u, F_v at u = u0.
                let mut v_gcd: Option<UniPoly> = None;
                for g in [&affine, &fu, &fv] {
                    if g.is_zero() {
                        continue;
                    }
                    let uni = restrict_u(g, u0);
                    v_gcd = Some(match v_gcd {
                        None => uni,
                        Some(acc) => acc.gcd(&uni),
                    });
                }
                let v_gcd = v_gcd.unwrap();
                if v_gcd.is_zero() {
                    return Err(CurveError::NonReduced);
                }
                if v_gcd.degree() == Some(0) {
                    continue;
                }
                let vs = structured_roots(&v_gcd);
                record_residual(&vs, &chart_name, &mut residuals);
                for (v0, _) in &vs.roots {
                    let coords = chart_coords(z_chart, w_chart, u0, v0);
                    let p = PointP::new(Ambient::P1xP1, coords)?;
                    if !points.contains(&p) {
                        points.push(p);
                    }
                }
            }
        }
    }
    let reports = points
        .into_iter()
        .map(|p| analyze_singular_point(curve, &p))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(SingularLocus {
        points: reports,
        residuals,
        coordinate_change: None,
    })
}

fn chart_coords(z_chart: usize, w_chart: usize, u: &CycloNum, v: &CycloNum) -> Vec<CycloNum> {
    let (z0, z1) = if z_chart == 0 {
        (CycloNum::one(), u.clone())
    } else {
        (u.clone(), CycloNum::one())
    };
    let (w0, w1) = if w_chart == 0 {
        (CycloNum::one(), v.clone())
    } else {
        (v.clone(), CycloNum::one())
    };
    vec![z0, z1, w0, w1]
}

/// Res_v of two affine polynomials in (u, v), by sampling u and
/// interpolating. Samples where a leading v-coefficient vanishes are
/// skipped; the interpolated polynomial is the generic resultant.
fn resultant_in_v(a: &AffinePoly, b: &AffinePoly) -> Result<UniPoly, CurveError> {
    let (da_u, da_v) = bidegrees(a);
    let (db_u, db_v) = bidegrees(b);
    if da_v == 0 || db_v == 0 {
        // No v to eliminate: the resultant degenerates; use the
        // polynomial itself (a constant in v) as the u-eliminant.
        let uni = if da_v == 0 {
            restrict_to_u(a)
        } else {
            restrict_to_u(b)
        };
        return Ok(uni);
    }
    let bound = (da_u * db_v + db_u * da_v) as usize;
    let lead_a = leading_v_coeff(a);
    let lead_b = leading_v_coeff(b);
    let mut samples = Vec::with_capacity(bound + 1);
    let mut k: i64 = 0;
    while samples.len() <= bound {
        let t = CycloNum::from_int(k);
        k += 1;
        if k > 4 * (bound as i64) + 16 {
            return Err(CurveError::NoGenericChange);
        }
        if lead_a.eval(&t).is_zero() || lead_b.eval(&t).is_zero() {
            continue;
        }
        let ua = restrict_u_poly(a, &t);
        let ub = restrict_u_poly(b, &t);
        samples.push((t, ua.resultant(&ub)));
    }
    Ok(UniPoly::interpolate(&samples).expect("distinct nodes"))
}

fn bidegrees(p: &AffinePoly) -> (u32, u32) {
    let mut du = 0;
    let mut dv = 0;
    for (m, _) in p.terms() {
        du = du.max(m.0[0]);
        dv = dv.max(m.0[1]);
    }
    (du, dv)
}

/// Coefficient of the top v-power, as a polynomial in u.
fn leading_v_coeff(p: &AffinePoly) -> UniPoly {
    let (_, dv) = bidegrees(p);
    let mut coeffs: Vec<CycloNum> = Vec::new();
    for (m, c) in p.terms() {
        if m.0[1] == dv {
            let e = m.0[0] as usize;
            if coeffs.len() <= e {
                coeffs.resize(e + 1, CycloNum::zero());
            }
            coeffs[e] = coeffs[e].add(c);
        }
    }
    UniPoly::from_coeffs(coeffs)
}

/// p(u0, v) as a univariate polynomial in v.
fn restrict_u(p: &AffinePoly, u0: &CycloNum) -> UniPoly {
    let (_, dv) = bidegrees(p);
    let mut coeffs = vec![CycloNum::zero(); dv as usize + 1];
    for (m, c) in p.terms() {
        let mut v = c.clone();
        for _ in 0..m.0[0] {
            v = v.mul(u0);
        }
        let e = m.0[1] as usize;
        coeffs[e] = coeffs[e].add(&v);
    }
    UniPoly::from_coeffs(coeffs)
}

/// Same as `restrict_u` (kept separate for clarity at call sites).
fn restrict_u_poly(p: &AffinePoly, u0: &CycloNum) -> UniPoly {
    restrict_u(p, u0)
}

/// A polynomial not involving v, as a univariate polynomial in u.
fn restrict_to_u(p: &AffinePoly) -> UniPoly {
    let (du, _) = bidegrees(p);
    let mut coeffs = vec![CycloNum::zero(); du as usize + 1];
    for (m, c) in p.terms() {
        debug_assert_eq!(m.0[1], 0);
        let e = m.0[0] as usize;
        coeffs[e] = coeffs[e].add(c);
    }
    UniPoly::from_coeffs(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::parse_cyclo;
    use crate::matgroup::{Ambient, MatrixGroup, PointP, ProjectiveMap};
    use crate::polyring::parse_poly;

    fn c(s: &str) -> CycloNum {
        parse_cyclo(s, 1).unwrap()
    }

    fn curve(s: &str) -> PlaneCurve {
        PlaneCurve::new(parse_poly(s, 3, None).unwrap()).unwrap()
    }

    #[test]
    fn klein_quartic_is_smooth() {
        let klein = curve("x0*x1^3 + x1*x2^3 + x2*x0^3");
        let locus = singular_points(&klein).unwrap();
        assert!(locus.is_smooth_certificate(), "locus: {locus:?}");
    }

    #[test]
    fn generic_family_member_is_smooth() {
        // alpha = beta = 1.
        let f = curve("x0^2*x1^2*x2^2 + x0^5*x1 + x2^5*x0 + x1^5*x2");
        let locus = singular_points(&f).unwrap();
        assert!(locus.is_smooth_certificate());
    }

    #[test]
    fn c_sing_has_seven_double_points() {
        let c_sing = curve("3*x0^2*x1^2*x2^2 - x0^5*x1 - x2^5*x0 - x1^5*x2");
        let locus = singular_points(&c_sing).unwrap();
        assert!(locus.is_complete());
        assert_eq!(locus.points.len(), 7);
        for rep in &locus.points {
            assert_eq!(rep.multiplicity, 2);
        }
        // The orbit of [1:1:1] under the diagonal seventh-root action.
        let gen = ProjectiveMap::new(
            Ambient::P2,
            Matrix::new(
                3,
                3,
                vec![
                    c("z7"),
                    c("0"),
                    c("0"),
                    c("0"),
                    c("z7^2"),
                    c("0"),
                    c("0"),
                    c("0"),
                    c("z7^4"),
                ],
            ),
            false,
        )
        .unwrap();
        let g = MatrixGroup::generate("c7", Ambient::P2, vec![("t".into(), gen)], 50).unwrap();
        let ones = PointP::new(Ambient::P2, vec![c("1"), c("1"), c("1")]).unwrap();
        let orbit = g.orbit_point(&ones).unwrap();
        assert_eq!(orbit.len(), 7);
        for p in &orbit {
            assert!(locus.points.iter().any(|r| r.point == *p));
        }
    }

    #[test]
    fn non_reduced_detected() {
        let sq = curve("x0^2*x1^2*x2^2");
        assert!(matches!(
            singular_points(&sq),
            Err(CurveError::NonReduced)
        ));
    }

    #[test]
    fn nodal_cubic_found() {
        let nodal = curve("x2*x0^2 - x2*x1^2 + x1^3");
        let locus = singular_points(&nodal).unwrap();
        assert!(locus.is_complete());
        assert_eq!(locus.points.len(), 1);
        assert_eq!(
            locus.points[0].point,
            PointP::new(Ambient::P2, vec![c("0"), c("0"), c("1")]).unwrap()
        );
        assert_eq!(locus.points[0].classification, super::super::Classification::Node);
    }

    #[test]
    fn reducible_bidegree_detected() {
        // (z0^4 - z1^4)(w0^4 - w1^4) contains whole fibers.
        let f = parse_poly(
            "x0^4*x2^4 - x0^4*x3^4 - x1^4*x2^4 + x1^4*x3^4",
            4,
            Some(2),
        )
        .unwrap();
        let curve = PlaneCurve::new(f).unwrap();
        assert!(matches!(
            singular_points(&curve),
            Err(CurveError::NonReduced)
        ));
    }
}
