//! Singularity analysis of plane and bidegree curves: singular loci by
//! exact elimination, genus bookkeeping, local germ invariants, node vs
//! cusp discrimination and the general-position test for point sets.

pub mod elimination;
pub mod family;
pub mod germs;
pub mod roots;

use crate::cyclo::{CycloError, CycloNum};
use crate::linalg::Matrix;
use crate::matgroup::{Ambient, GroupError, PointP};
use crate::polyring::affine::AffinePoly;
use crate::polyring::{Grading, MultiPoly, PolyError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CurveError {
    #[error("curve polynomial is zero")]
    ZeroPolynomial,
    #[error("expected a plane curve (3 variables, total grading)")]
    NotPlane,
    #[error("expected a bidegree curve (4 variables, 2+2 blocks)")]
    NotBidegree,
    #[error("degree {0} exceeds the supported bound {1}")]
    DegreeTooLarge(u32, u32),
    #[error("point/curve ambient mismatch")]
    AmbientMismatch,
    #[error("curve is non-reduced or shares a component with a derivative: singular")]
    NonReduced,
    #[error("no generic coordinate change found")]
    NoGenericChange,
    #[error("point is not singular on the curve")]
    NotSingular,
    #[error("point has multiplicity {0} > 2; not a node/cusp candidate")]
    MultiplicityTooHigh(u32),
    #[error("genus computation went negative: delta {delta} too large for degree data")]
    NegativeGenus { delta: i64 },
    #[error("duplicate points in the configuration")]
    DuplicatePoints,
    #[error("too many points: {0} > 8")]
    TooManyPoints(usize),
    #[error("intersection multiplicity is infinite (identical germs)")]
    InfiniteIntersection,
    #[error("coordinate change is singular")]
    DegenerateChange,
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Cyclo(#[from] CycloError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// A projective plane curve (ternary form) or a bidegree curve on the
/// product of two lines (2+2 bihomogeneous form).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneCurve {
    poly: MultiPoly,
    ambient: Ambient,
}

impl PlaneCurve {
    pub fn new(poly: MultiPoly) -> Result<Self, CurveError> {
        if poly.is_zero() {
            return Err(CurveError::ZeroPolynomial);
        }
        let ambient = match (poly.nvars(), poly.grading()) {
            (3, Grading::Total(_)) => Ambient::P2,
            (4, Grading::Bi { split: 2, .. }) => Ambient::P1xP1,
            _ => return Err(CurveError::NotPlane),
        };
        Ok(PlaneCurve { poly, ambient })
    }

    pub fn poly(&self) -> &MultiPoly {
        &self.poly
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn degree(&self) -> Grading {
        self.poly.grading()
    }
}

/// Classification of an isolated double point per the Hessian-rank
/// criterion; anything of multiplicity > 2 is reported as Higher.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    Node,
    Cusp,
    Higher,
}

impl std::fmt::Display for Classification {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Classification::Node => write!(f, "node"),
            Classification::Cusp => write!(f, "cusp"),
            Classification::Higher => write!(f, "higher"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SingularityReport {
    pub point: PointP,
    pub multiplicity: u32,
    pub hessian_rank: usize,
    pub classification: Classification,
}

/// True iff every first partial of the defining polynomial vanishes at
/// the point (which forces the point onto the curve, by the Euler
/// relations for (bi)homogeneous forms).
pub fn is_singular_at(curve: &PlaneCurve, p: &PointP) -> Result<bool, CurveError> {
    if p.ambient() != curve.ambient {
        return Err(CurveError::AmbientMismatch);
    }
    for i in 0..curve.poly.nvars() {
        if !curve.poly.partial(i)?.evaluate(p.coords())?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Multiplicity, Hessian rank and node/cusp classification at a singular
/// point. The Hessian rank is that of the full matrix of second partials
/// at the point; at a double point the radial directions lie in its
/// kernel, so rank 2 means a node and rank 1 a cusp.
pub fn analyze_singular_point(
    curve: &PlaneCurve,
    p: &PointP,
) -> Result<SingularityReport, CurveError> {
    if !is_singular_at(curve, p)? {
        return Err(CurveError::NotSingular);
    }
    let multiplicity = local_multiplicity(&curve.poly, p)?;
    let hessian_rank = curve.poly.hessian_at(p.coords())?.rank();
    let classification = if multiplicity == 2 {
        match hessian_rank {
            2 => Classification::Node,
            1 => Classification::Cusp,
            r => unreachable!("double point with Hessian rank {r}"),
        }
    } else {
        Classification::Higher
    };
    Ok(SingularityReport {
        point: p.clone(),
        multiplicity,
        hessian_rank,
        classification,
    })
}

/// Node-or-cusp discrimination at a multiplicity-2 singular point.
pub fn node_or_cusp(curve: &PlaneCurve, p: &PointP) -> Result<SingularityReport, CurveError> {
    let report = analyze_singular_point(curve, p)?;
    if report.multiplicity > 2 {
        return Err(CurveError::MultiplicityTooHigh(report.multiplicity));
    }
    Ok(report)
}

/// Lowest local degree of the dehomogenized, translated equation.
fn local_multiplicity(f: &MultiPoly, p: &PointP) -> Result<u32, CurveError> {
    // Chart variables: for a plane curve, drop one coordinate with a
    // nonzero value; on a product, drop one per block.
    let coords = p.coords();
    let mut chart_vars = Vec::new();
    for block in p.ambient().blocks() {
        let pivot = coords[block]
            .iter()
            .position(|c| !c.is_zero())
            .expect("point has a nonzero coordinate per block");
        chart_vars.push(pivot);
    }
    let blocks = p.ambient().blocks();
    // Normalize point so chart coordinates are exactly 1 (PointP already
    // guarantees the first nonzero entry of each block is 1).
    let mut affine = dehomogenize_blocks(f, &blocks, &chart_vars);
    let mut shift_point = Vec::new();
    for (bi, block) in blocks.iter().enumerate() {
        for (k, i) in block.clone().enumerate() {
            if k != chart_vars[bi] {
                shift_point.push(coords[i].clone());
            }
        }
    }
    affine = affine.shift(&shift_point);
    Ok(affine.lowest_degree().unwrap_or(0))
}

/// Dehomogenize with one chart variable per block (set to 1).
pub(crate) fn dehomogenize_blocks(
    f: &MultiPoly,
    blocks: &[std::ops::Range<usize>],
    chart_vars: &[usize],
) -> AffinePoly {
    let mut dropped: Vec<usize> = Vec::new();
    for (bi, block) in blocks.iter().enumerate() {
        dropped.push(block.start + chart_vars[bi]);
    }
    let mut affine = AffinePoly::dehomogenize(f, dropped[0]);
    if dropped.len() > 1 {
        // Index of the second chart variable after the first was dropped.
        let second = if dropped[1] > dropped[0] {
            dropped[1] - 1
        } else {
            dropped[1]
        };
        let nv = affine.nvars();
        let map: Vec<AffinePoly> = (0..nv)
            .map(|i| {
                if i == second {
                    AffinePoly::constant(nv - 1, CycloNum::one())
                } else {
                    let j = if i > second { i - 1 } else { i };
                    AffinePoly::var(nv - 1, j)
                }
            })
            .collect();
        affine = affine.compose_affine(&map);
    }
    affine
}

/// Genus of a plane curve of degree d with total delta-invariant Δ.
pub fn genus_plane(d: u32, delta_total: u32) -> Result<i64, CurveError> {
    let g = (d as i64 - 1) * (d as i64 - 2) / 2 - delta_total as i64;
    if g < 0 {
        return Err(CurveError::NegativeGenus {
            delta: delta_total as i64,
        });
    }
    Ok(g)
}

/// Genus of a smooth curve of bidegree (a, b) on the product of lines.
pub fn genus_bidegree(a: u32, b: u32) -> i64 {
    (a as i64) * (b as i64) - (a as i64) - (b as i64) + 1
}

/// Certificate for the general-position test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PositionViolation {
    Collinear(Vec<usize>),
    OnConic(Vec<usize>),
}

#[derive(Debug, Clone)]
pub struct GeneralPosition {
    pub ok: bool,
    pub violation: Option<PositionViolation>,
}

/// No three points on a line and no six on a conic. Points must be
/// pairwise distinct; at most eight are supported.
pub fn general_position(points: &[PointP]) -> Result<GeneralPosition, CurveError> {
    if points.len() > 8 {
        return Err(CurveError::TooManyPoints(points.len()));
    }
    for i in 0..points.len() {
        if points[i].ambient() != Ambient::P2 {
            return Err(CurveError::AmbientMismatch);
        }
        for j in i + 1..points.len() {
            if points[i] == points[j] {
                return Err(CurveError::DuplicatePoints);
            }
        }
    }
    // Triples on a line: 3x3 determinant.
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            for k in j + 1..points.len() {
                let mut data = Vec::with_capacity(9);
                for p in [&points[i], &points[j], &points[k]] {
                    data.extend(p.coords().iter().cloned());
                }
                if Matrix::new(3, 3, data).det().is_zero() {
                    return Ok(GeneralPosition {
                        ok: false,
                        violation: Some(PositionViolation::Collinear(vec![i, j, k])),
                    });
                }
            }
        }
    }
    // Six-subsets on a conic: rank of the quadratic Veronese images.
    let combos = six_subsets(points.len());
    for subset in combos {
        let rows: Vec<Vec<CycloNum>> = subset
            .iter()
            .map(|&i| veronese2(points[i].coords()))
            .collect();
        let m = Matrix::from_rows(rows, 6);
        if m.rank() < 6 {
            return Ok(GeneralPosition {
                ok: false,
                violation: Some(PositionViolation::OnConic(subset)),
            });
        }
    }
    Ok(GeneralPosition {
        ok: true,
        violation: None,
    })
}

fn veronese2(p: &[CycloNum]) -> Vec<CycloNum> {
    let (x, y, z) = (&p[0], &p[1], &p[2]);
    vec![
        x.mul(x),
        x.mul(y),
        x.mul(z),
        y.mul(y),
        y.mul(z),
        z.mul(z),
    ]
}

fn six_subsets(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if n < 6 {
        return out;
    }
    let mut idx: Vec<usize> = (0..6).collect();
    loop {
        out.push(idx.clone());
        // Next combination.
        let mut i = 5;
        loop {
            if idx[i] + 1 <= n - (6 - i) {
                idx[i] += 1;
                for j in i + 1..6 {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
            if i == 0 {
                return out;
            }
            i -= 1;
        }
    }
}
