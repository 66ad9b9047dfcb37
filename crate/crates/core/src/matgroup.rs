//! Finite projective matrix groups over cyclotomic fields: closure from
//! generators, element orders, fixed loci, orbits, commutator subgroups,
//! semi-invariance characters and tangent-space linearization.
//!
//! A map is stored through its total transformation matrix (the printed
//! lift); on a product of two projective lines a coordinate-block swap is
//! tracked by an explicit flag next to the 4x4 matrix. Projective
//! equality normalizes the first nonzero entry of every output block to
//! one, which gives a cheap canonical form for hashing.

use crate::cyclo::{lcm_u32, max_conductor, CycloError, CycloNum};
use crate::linalg::{LinAlgError, Matrix};
use crate::polyring::{Grading, MultiPoly, PolyError};
use std::collections::HashMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GroupError {
    #[error("group closure exceeded the cap of {0} elements")]
    ClosureExceedsCap(usize),
    #[error("matrix has no finite order below {0}")]
    InfiniteOrder(u64),
    #[error("matrix dimension {found} does not match ambient dimension {expected}")]
    Dimension { expected: usize, found: usize },
    #[error("lift is singular")]
    SingularLift,
    #[error("map does not respect the product block structure")]
    BadBlockStructure,
    #[error("point is not fixed by the map")]
    NotFixed,
    #[error("unknown generator '{0}' in word")]
    UnknownGenerator(String),
    #[error("malformed word: {0}")]
    BadWord(String),
    #[error("character values are inconsistent with the group relations")]
    InconsistentCharacter,
    #[error("operation unsupported on this ambient: {0}")]
    UnsupportedAmbient(String),
    #[error(transparent)]
    Cyclo(#[from] CycloError),
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Ambient projective space of an action.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ambient {
    P2,
    P3,
    P1xP1,
}

impl Ambient {
    pub fn dim(&self) -> usize {
        match self {
            Ambient::P2 => 3,
            Ambient::P3 | Ambient::P1xP1 => 4,
        }
    }

    /// Scaling blocks of a coordinate vector: ranges that are rescaled
    /// independently in the projective quotient.
    pub fn blocks(&self) -> Vec<std::ops::Range<usize>> {
        match self {
            Ambient::P2 => vec![0..3],
            Ambient::P3 => vec![0..4],
            Ambient::P1xP1 => vec![0..2, 2..4],
        }
    }
}

impl fmt::Display for Ambient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ambient::P2 => write!(f, "P2"),
            Ambient::P3 => write!(f, "P3"),
            Ambient::P1xP1 => write!(f, "P1xP1"),
        }
    }
}

/// A point of the ambient space, stored with the first nonzero coordinate
/// of every scaling block normalized to one.
#[derive(Debug, Clone)]
pub struct PointP {
    ambient: Ambient,
    coords: Vec<CycloNum>,
}

impl PointP {
    pub fn new(ambient: Ambient, coords: Vec<CycloNum>) -> Result<Self, GroupError> {
        if coords.len() != ambient.dim() {
            return Err(GroupError::Dimension {
                expected: ambient.dim(),
                found: coords.len(),
            });
        }
        let mut coords = coords;
        for block in ambient.blocks() {
            let pivot = coords[block.clone()]
                .iter()
                .position(|c| !c.is_zero())
                .ok_or(GroupError::SingularLift)?
                + block.start;
            let inv = coords[pivot].inv().expect("pivot nonzero");
            for i in block {
                coords[i] = coords[i].mul(&inv);
            }
        }
        Ok(PointP { ambient, coords })
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn coords(&self) -> &[CycloNum] {
        &self.coords
    }

    fn key(&self) -> String {
        self.coords
            .iter()
            .map(|c| c.to_canonical_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl PartialEq for PointP {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.coords == other.coords
    }
}

impl Eq for PointP {}

impl fmt::Display for PointP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .ambient
            .blocks()
            .into_iter()
            .map(|b| {
                self.coords[b]
                    .iter()
                    .map(|c| c.to_canonical_string())
                    .collect::<Vec<_>>()
                    .join(":")
            })
            .collect();
        write!(f, "[{}]", parts.join("]["))
    }
}

/// Invertible projective transformation with its canonical lift.
#[derive(Debug, Clone)]
pub struct ProjectiveMap {
    ambient: Ambient,
    /// Total transformation matrix, including any block swap.
    lift: Matrix,
    /// On P1xP1: does the map exchange the two factors?
    block_swap: bool,
    /// Projectively canonical rescaling of the lift.
    canon: Matrix,
}

impl ProjectiveMap {
    pub fn new(ambient: Ambient, lift: Matrix, block_swap: bool) -> Result<Self, GroupError> {
        let n = ambient.dim();
        if lift.rows() != n || lift.cols() != n {
            return Err(GroupError::Dimension {
                expected: n,
                found: lift.rows(),
            });
        }
        if lift.det().is_zero() {
            return Err(GroupError::SingularLift);
        }
        if ambient == Ambient::P1xP1 {
            // Non-swap maps are block diagonal, swap maps block anti-diagonal.
            for r in 0..4 {
                for c in 0..4 {
                    let same_block = (r < 2) == (c < 2);
                    let must_vanish = if block_swap { same_block } else { !same_block };
                    if must_vanish && !lift.at(r, c).is_zero() {
                        return Err(GroupError::BadBlockStructure);
                    }
                }
            }
        } else if block_swap {
            return Err(GroupError::BadBlockStructure);
        }
        let canon = canonical_form(ambient, &lift);
        Ok(ProjectiveMap {
            ambient,
            lift,
            block_swap,
            canon,
        })
    }

    pub fn identity(ambient: Ambient) -> Self {
        ProjectiveMap::new(ambient, Matrix::identity(ambient.dim()), false)
            .expect("identity is valid")
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn lift(&self) -> &Matrix {
        &self.lift
    }

    pub fn block_swap(&self) -> bool {
        self.block_swap
    }

    pub fn canon(&self) -> &Matrix {
        &self.canon
    }

    pub fn compose(&self, other: &ProjectiveMap) -> ProjectiveMap {
        assert_eq!(self.ambient, other.ambient);
        ProjectiveMap::new(
            self.ambient,
            self.lift.mul(&other.lift),
            self.block_swap ^ other.block_swap,
        )
        .expect("product of valid maps is valid")
    }

    pub fn inverse(&self) -> ProjectiveMap {
        ProjectiveMap::new(
            self.ambient,
            self.lift.inverse().expect("lift invertible"),
            self.block_swap,
        )
        .expect("inverse of valid map is valid")
    }

    pub fn is_projective_identity(&self) -> bool {
        !self.block_swap && self.canon == Matrix::identity(self.ambient.dim())
    }

    /// Least k with the k-th power projectively trivial.
    pub fn projective_order(&self, cap: u64) -> Result<u64, GroupError> {
        let mut acc = self.clone();
        for k in 1..=cap {
            if acc.is_projective_identity() {
                return Ok(k);
            }
            acc = acc.compose(self);
        }
        Err(GroupError::InfiniteOrder(cap))
    }

    /// Least k with lift^k the identity matrix (and no block swap).
    pub fn matrix_order(&self, cap: u64) -> Result<u64, GroupError> {
        let id = Matrix::identity(self.ambient.dim());
        let mut acc = self.clone();
        for k in 1..=cap {
            if !acc.block_swap && acc.lift == id {
                return Ok(k);
            }
            acc = acc.compose(self);
        }
        Err(GroupError::InfiniteOrder(cap))
    }

    pub fn apply(&self, p: &PointP) -> PointP {
        assert_eq!(self.ambient, p.ambient);
        PointP::new(self.ambient, self.lift.mul_vec(p.coords()))
            .expect("image of a point is a point")
    }

    /// Action on polynomials: f -> f o g^{-1}, computed with the lift.
    /// On P1xP1 a block swap exchanges the bidegree.
    pub fn act(&self, f: &MultiPoly) -> Result<MultiPoly, GroupError> {
        if f.nvars() != self.ambient.dim() {
            return Err(GroupError::Dimension {
                expected: self.ambient.dim(),
                found: f.nvars(),
            });
        }
        let inv = self.lift.inverse()?;
        let substituted = f.substitute_linear(&inv)?;
        // Regrade: substitution preserves bihomogeneity but the block
        // degrees may swap; re-infer against the original structure.
        match f.grading() {
            Grading::Total(_) => Ok(substituted),
            Grading::Bi { split, .. } => {
                let terms: Vec<_> = substituted
                    .terms()
                    .map(|(m, c)| (m.clone(), c.clone()))
                    .collect();
                Ok(MultiPoly::from_terms_infer(f.nvars(), Some(split), terms)?)
            }
        }
    }

    /// Determinant of the induced tangent-space map at a fixed point:
    /// det(lift) / mu0^n with mu0 the eigenvalue on the line of p. The
    /// value is independent of the lift scaling.
    pub fn linearization_det(&self, p: &PointP) -> Result<CycloNum, GroupError> {
        if self.ambient == Ambient::P1xP1 {
            return Err(GroupError::UnsupportedAmbient(
                "linearization at points of a product ambient".into(),
            ));
        }
        let image = self.lift.mul_vec(p.coords());
        let pivot = p
            .coords()
            .iter()
            .position(|c| !c.is_zero())
            .expect("point has a nonzero coordinate");
        if image[pivot].is_zero() {
            return Err(GroupError::NotFixed);
        }
        let mu0 = image[pivot]
            .div(&p.coords()[pivot])
            .expect("pivot nonzero");
        for i in 0..p.coords().len() {
            if image[i] != mu0.mul(&p.coords()[i]) {
                return Err(GroupError::NotFixed);
            }
        }
        let n = self.ambient.dim() as i64;
        Ok(self
            .lift
            .det()
            .div(&mu0.pow(n)?)
            .expect("eigenvalue nonzero"))
    }

    /// Eigenvalue of the lift on the line of a fixed point.
    pub fn eigenvalue_at(&self, p: &PointP) -> Result<CycloNum, GroupError> {
        let image = self.lift.mul_vec(p.coords());
        let pivot = p
            .coords()
            .iter()
            .position(|c| !c.is_zero())
            .expect("point has a nonzero coordinate");
        if image[pivot].is_zero() {
            return Err(GroupError::NotFixed);
        }
        let mu0 = image[pivot]
            .div(&p.coords()[pivot])
            .expect("pivot nonzero");
        for i in 0..p.coords().len() {
            if image[i] != mu0.mul(&p.coords()[i]) {
                return Err(GroupError::NotFixed);
            }
        }
        Ok(mu0)
    }

    fn key(&self) -> String {
        let mut s = String::new();
        if self.block_swap {
            s.push_str("s|");
        }
        for e in self.canon.entries() {
            s.push_str(&e.to_canonical_string());
            s.push(';');
        }
        s
    }

    fn linear_key(&self) -> String {
        let mut s = String::new();
        if self.block_swap {
            s.push_str("s|");
        }
        for e in self.lift.entries() {
            s.push_str(&e.to_canonical_string());
            s.push(';');
        }
        s
    }

    /// Promote every entry to (a multiple of) the given conductor.
    pub fn promoted(&self, conductor: u32) -> Result<ProjectiveMap, GroupError> {
        let mut data = Vec::with_capacity(self.lift.entries().len());
        for e in self.lift.entries() {
            data.push(e.promote(lcm_u32(e.conductor(), conductor))?);
        }
        ProjectiveMap::new(
            self.ambient,
            Matrix::new(self.lift.rows(), self.lift.cols(), data),
            self.block_swap,
        )
    }
}

impl PartialEq for ProjectiveMap {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient
            && self.block_swap == other.block_swap
            && self.canon == other.canon
    }
}

impl Eq for ProjectiveMap {}

/// First nonzero entry of every output block normalized to one.
fn canonical_form(ambient: Ambient, lift: &Matrix) -> Matrix {
    let n = ambient.dim();
    let mut out = lift.clone();
    let row_blocks: Vec<std::ops::Range<usize>> = match ambient {
        Ambient::P1xP1 => vec![0..2, 2..4],
        _ => vec![0..n],
    };
    for rows in row_blocks {
        let mut pivot = None;
        'outer: for r in rows.clone() {
            for c in 0..n {
                if !out.at(r, c).is_zero() {
                    pivot = Some((r, c));
                    break 'outer;
                }
            }
        }
        if let Some((r, c)) = pivot {
            let inv = out.at(r, c).inv().expect("pivot nonzero");
            for r2 in rows {
                for c2 in 0..n {
                    let v = out.at(r2, c2).mul(&inv);
                    *out.at_mut(r2, c2) = v;
                }
            }
        }
    }
    out
}

/// A connected component of the fixed locus of a projective map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FixedComponent {
    Point(PointP),
    /// Pointwise-fixed projective subspace, given by a basis of the
    /// corresponding linear eigenspace.
    Subspace(Vec<Vec<CycloNum>>),
    /// On P1xP1 without swap: a product locus where at least one factor
    /// is the whole line (None = whole factor).
    Product {
        z: Option<[CycloNum; 2]>,
        w: Option<[CycloNum; 2]>,
    },
    /// On P1xP1 with swap and P*Q scalar: the curve {([v],[Qv])}.
    SwapGraph { q: Matrix },
}

impl FixedComponent {
    pub fn is_point(&self) -> bool {
        matches!(self, FixedComponent::Point(_))
    }

    pub fn as_point(&self) -> Option<&PointP> {
        match self {
            FixedComponent::Point(p) => Some(p),
            _ => None,
        }
    }
}

/// Eigenvalues (as roots of unity of the matrix order) with eigenvector
/// bases, in deterministic order.
fn eigenspaces(
    m: &Matrix,
    order_cap: u64,
) -> Result<Vec<(CycloNum, Vec<Vec<CycloNum>>)>, GroupError> {
    let n = m.rows();
    let id = Matrix::identity(n);
    let mut acc = m.clone();
    let mut k = 0u64;
    for i in 1..=order_cap {
        if acc == id {
            k = i;
            break;
        }
        acc = acc.mul(m);
    }
    if k == 0 {
        return Err(GroupError::InfiniteOrder(order_cap));
    }
    let conductor_needed = k as u32;
    if conductor_needed > max_conductor() {
        return Err(GroupError::Cyclo(CycloError::ConductorTooLarge(
            conductor_needed,
            max_conductor(),
        )));
    }
    let mut found = Vec::new();
    let mut total = 0usize;
    for j in 0..k {
        let lambda = CycloNum::root_of_unity(k as u32, j as i64)?;
        let shifted = m.sub(&id.scale(&lambda));
        let kernel = shifted.kernel_basis();
        if !kernel.is_empty() {
            total += kernel.len();
            found.push((lambda, kernel));
        }
        if total == n {
            break;
        }
    }
    debug_assert_eq!(total, n, "finite-order matrix is diagonalizable");
    Ok(found)
}

/// Fixed locus of a projective map. Eigenvalue candidates are the k-th
/// roots of unity for k the matrix order of the lift; one-dimensional
/// eigenspaces give isolated points, larger ones pointwise-fixed loci.
pub fn fixed_points(g: &ProjectiveMap, order_cap: u64) -> Result<Vec<FixedComponent>, GroupError> {
    match (g.ambient, g.block_swap) {
        (Ambient::P2 | Ambient::P3, _) => {
            let mut out = Vec::new();
            for (_, basis) in eigenspaces(&g.lift, order_cap)? {
                if basis.len() == 1 {
                    out.push(FixedComponent::Point(PointP::new(
                        g.ambient,
                        basis[0].clone(),
                    )?));
                } else {
                    out.push(FixedComponent::Subspace(basis));
                }
            }
            Ok(out)
        }
        (Ambient::P1xP1, false) => {
            let b = submatrix(&g.lift, 0..2, 0..2);
            let c = submatrix(&g.lift, 2..4, 2..4);
            let z_loci = block_loci(eigenspaces(&b, order_cap)?);
            let w_loci = block_loci(eigenspaces(&c, order_cap)?);
            let mut out = Vec::new();
            for z in &z_loci {
                for w in &w_loci {
                    match (z, w) {
                        (Some(zc), Some(wc)) => {
                            let coords =
                                vec![zc[0].clone(), zc[1].clone(), wc[0].clone(), wc[1].clone()];
                            out.push(FixedComponent::Point(PointP::new(Ambient::P1xP1, coords)?));
                        }
                        (z, w) => out.push(FixedComponent::Product {
                            z: z.clone(),
                            w: w.clone(),
                        }),
                    }
                }
            }
            Ok(out)
        }
        (Ambient::P1xP1, true) => {
            let p = submatrix(&g.lift, 0..2, 2..4);
            let q = submatrix(&g.lift, 2..4, 0..2);
            let pq = p.mul(&q);
            let scalar =
                pq.at(0, 1).is_zero() && pq.at(1, 0).is_zero() && pq.at(0, 0) == pq.at(1, 1);
            if scalar {
                return Ok(vec![FixedComponent::SwapGraph { q }]);
            }
            let mut out = Vec::new();
            for (_, basis) in eigenspaces(&pq, order_cap)? {
                for v in basis {
                    let w = q.mul_vec(&v);
                    let coords = vec![v[0].clone(), v[1].clone(), w[0].clone(), w[1].clone()];
                    out.push(FixedComponent::Point(PointP::new(Ambient::P1xP1, coords)?));
                }
            }
            Ok(out)
        }
    }
}

/// Eigenvalues of a lift with multiplicities, as roots of unity of the
/// matrix order.
pub fn lift_eigenvalues(
    g: &ProjectiveMap,
    order_cap: u64,
) -> Result<Vec<(CycloNum, usize)>, GroupError> {
    Ok(eigenspaces(g.lift(), order_cap)?
        .into_iter()
        .map(|(lam, basis)| (lam, basis.len()))
        .collect())
}

fn submatrix(m: &Matrix, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Matrix {
    let mut data = Vec::new();
    for r in rows.clone() {
        for c in cols.clone() {
            data.push(m.at(r, c).clone());
        }
    }
    Matrix::new(rows.len(), cols.len(), data)
}

fn block_loci(eigen: Vec<(CycloNum, Vec<Vec<CycloNum>>)>) -> Vec<Option<[CycloNum; 2]>> {
    let mut out = Vec::new();
    for (_, basis) in eigen {
        if basis.len() >= 2 {
            return vec![None];
        }
        let v = &basis[0];
        out.push(Some([v[0].clone(), v[1].clone()]));
    }
    out
}

/// Default closure cap: comfortably above three times the largest
/// bundled group.
pub const DEFAULT_CLOSURE_CAP: usize = 2400;

/// A finite group of projective maps with both its projective and linear
/// closures enumerated in deterministic BFS order.
#[derive(Debug, Clone)]
pub struct MatrixGroup {
    name: String,
    ambient: Ambient,
    conductor: u32,
    gen_names: Vec<String>,
    generators: Vec<ProjectiveMap>,
    elements: Vec<ProjectiveMap>,
    /// Linear closure of the lifts. `linear_pred[i]` is (parent index,
    /// generator index) in BFS discovery order; the identity has none.
    linear_elements: Vec<ProjectiveMap>,
    linear_pred: Vec<Option<(usize, usize)>>,
    /// Transition table: index of linear_elements[i] * generator j.
    linear_trans: Vec<Vec<usize>>,
}

impl MatrixGroup {
    /// Breadth-first closure of the generators, both projectively and
    /// linearly. Errors when either closure exceeds `cap`.
    pub fn generate(
        name: impl Into<String>,
        ambient: Ambient,
        generators: Vec<(String, ProjectiveMap)>,
        cap: usize,
    ) -> Result<Self, GroupError> {
        let mut conductor = 1;
        for (_, g) in &generators {
            for e in g.lift().entries() {
                conductor = lcm_u32(conductor, e.conductor());
            }
        }
        if conductor > max_conductor() {
            return Err(GroupError::Cyclo(CycloError::ConductorTooLarge(
                conductor,
                max_conductor(),
            )));
        }
        let gen_names: Vec<String> = generators.iter().map(|(n, _)| n.clone()).collect();
        let gens: Vec<ProjectiveMap> = generators
            .iter()
            .map(|(_, g)| g.promoted(conductor))
            .collect::<Result<_, _>>()?;

        // Projective closure.
        let identity = ProjectiveMap::identity(ambient).promoted(conductor)?;
        let mut elements = vec![identity.clone()];
        let mut seen: HashMap<String, usize> = HashMap::new();
        seen.insert(identity.key(), 0);
        let mut head = 0;
        while head < elements.len() {
            let current = elements[head].clone();
            head += 1;
            for g in &gens {
                let next = current.compose(g);
                let key = next.key();
                if !seen.contains_key(&key) {
                    if elements.len() + 1 > cap {
                        return Err(GroupError::ClosureExceedsCap(cap));
                    }
                    seen.insert(key, elements.len());
                    elements.push(next);
                }
            }
        }

        // Linear closure of the lifts, with predecessor tracking.
        let mut linear_elements = vec![identity];
        let mut linear_pred: Vec<Option<(usize, usize)>> = vec![None];
        let mut linear_seen: HashMap<String, usize> = HashMap::new();
        linear_seen.insert(linear_elements[0].linear_key(), 0);
        let mut linear_trans: Vec<Vec<usize>> = Vec::new();
        let mut head = 0;
        while head < linear_elements.len() {
            let current = linear_elements[head].clone();
            let mut row = Vec::with_capacity(gens.len());
            for (j, g) in gens.iter().enumerate() {
                let next = current.compose(g);
                let key = next.linear_key();
                let idx = match linear_seen.get(&key) {
                    Some(&i) => i,
                    None => {
                        if linear_elements.len() + 1 > cap {
                            return Err(GroupError::ClosureExceedsCap(cap));
                        }
                        let i = linear_elements.len();
                        linear_seen.insert(key, i);
                        linear_elements.push(next);
                        linear_pred.push(Some((head, j)));
                        i
                    }
                };
                row.push(idx);
            }
            linear_trans.push(row);
            head += 1;
        }

        Ok(MatrixGroup {
            name: name.into(),
            ambient,
            conductor,
            gen_names,
            generators: gens,
            elements,
            linear_elements,
            linear_pred,
            linear_trans,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn linear_order(&self) -> usize {
        self.linear_elements.len()
    }

    /// Order of the scalar subgroup of the linear closure.
    pub fn scalar_subgroup_order(&self) -> usize {
        self.linear_order() / self.order()
    }

    pub fn generators(&self) -> &[ProjectiveMap] {
        &self.generators
    }

    pub fn generator_names(&self) -> &[String] {
        &self.gen_names
    }

    pub fn generator(&self, name: &str) -> Option<&ProjectiveMap> {
        self.gen_names
            .iter()
            .position(|n| n == name)
            .map(|i| &self.generators[i])
    }

    pub fn elements(&self) -> &[ProjectiveMap] {
        &self.elements
    }

    pub fn linear_elements(&self) -> &[ProjectiveMap] {
        &self.linear_elements
    }

    pub fn contains(&self, g: &ProjectiveMap) -> bool {
        self.elements.iter().any(|e| e == g)
    }

    /// Full orbit of a point, in deterministic enumeration order.
    pub fn orbit_point(&self, p: &PointP) -> Result<Vec<PointP>, GroupError> {
        if p.ambient() != self.ambient {
            return Err(GroupError::Dimension {
                expected: self.ambient.dim(),
                found: p.coords().len(),
            });
        }
        let mut promoted = Vec::with_capacity(p.coords().len());
        for c in p.coords() {
            promoted.push(c.promote(lcm_u32(c.conductor(), self.conductor))?);
        }
        let p = PointP::new(self.ambient, promoted)?;
        let mut orbit: Vec<PointP> = Vec::new();
        let mut seen: HashMap<String, ()> = HashMap::new();
        for e in &self.elements {
            let q = e.apply(&p);
            let key = q.key();
            if !seen.contains_key(&key) {
                seen.insert(key, ());
                orbit.push(q);
            }
        }
        Ok(orbit)
    }

    pub fn stabilizer_order(&self, p: &PointP) -> Result<usize, GroupError> {
        let orbit = self.orbit_point(p)?;
        Ok(self.order() / orbit.len())
    }

    /// Subgroup generated by all commutators: the normal closure of the
    /// generator commutators.
    pub fn commutator_subgroup(&self, cap: usize) -> Result<MatrixGroup, GroupError> {
        let mut seed: Vec<ProjectiveMap> = Vec::new();
        let mut seen: HashMap<String, ()> = HashMap::new();
        fn push(
            m: ProjectiveMap,
            seed: &mut Vec<ProjectiveMap>,
            seen: &mut HashMap<String, ()>,
        ) {
            if m.is_projective_identity() {
                return;
            }
            let key = m.key();
            if !seen.contains_key(&key) {
                seen.insert(key, ());
                seed.push(m);
            }
        }
        for g in &self.generators {
            for h in &self.generators {
                let c = g.compose(h).compose(&g.inverse()).compose(&h.inverse());
                push(c, &mut seed, &mut seen);
            }
        }
        // Close the seed under conjugation by the generators.
        let mut head = 0;
        while head < seed.len() {
            let s = seed[head].clone();
            head += 1;
            for g in &self.generators {
                let conj = g.compose(&s).compose(&g.inverse());
                push(conj, &mut seed, &mut seen);
            }
        }
        let gens: Vec<(String, ProjectiveMap)> = seed
            .into_iter()
            .enumerate()
            .map(|(i, m)| (format!("k{i}"), m))
            .collect();
        if gens.is_empty() {
            return MatrixGroup::generate(
                format!("{}'", self.name),
                self.ambient,
                vec![("id".to_string(), ProjectiveMap::identity(self.ambient))],
                cap,
            );
        }
        MatrixGroup::generate(format!("{}'", self.name), self.ambient, gens, cap)
    }

    /// Extend generator character values multiplicatively over the linear
    /// closure, verifying consistency on every transition.
    pub fn extend_character(&self, gen_values: &[CycloNum]) -> Result<Vec<CycloNum>, GroupError> {
        assert_eq!(gen_values.len(), self.generators.len());
        let mut values: Vec<Option<CycloNum>> = vec![None; self.linear_elements.len()];
        values[0] = Some(CycloNum::one());
        for i in 1..self.linear_elements.len() {
            let (p, j) = self.linear_pred[i].expect("non-identity has a predecessor");
            let v = values[p]
                .as_ref()
                .expect("BFS order fills predecessors first")
                .mul(&gen_values[j]);
            values[i] = Some(v);
        }
        let values: Vec<CycloNum> = values.into_iter().map(|v| v.unwrap()).collect();
        for (i, row) in self.linear_trans.iter().enumerate() {
            for (j, &target) in row.iter().enumerate() {
                if values[target] != values[i].mul(&gen_values[j]) {
                    return Err(GroupError::InconsistentCharacter);
                }
            }
        }
        Ok(values)
    }

    /// The trivial character on the linear closure.
    pub fn trivial_character(&self) -> Vec<CycloNum> {
        vec![CycloNum::one(); self.linear_elements.len()]
    }

    /// The determinant character det(lift) on the linear closure.
    pub fn det_character(&self) -> Vec<CycloNum> {
        self.linear_elements
            .iter()
            .map(|g| g.lift().det())
            .collect()
    }

    /// If `f` is semi-invariant under the linear closure, the character
    /// chi with g.f = chi(g) f as per-element values aligned with
    /// `linear_elements`; None otherwise. Computed on the generators and
    /// extended multiplicatively (exact, since act is a group action).
    pub fn semi_invariance_character(
        &self,
        f: &MultiPoly,
    ) -> Result<Option<Vec<CycloNum>>, GroupError> {
        if f.is_zero() {
            return Ok(Some(self.trivial_character()));
        }
        let mut gen_values = Vec::with_capacity(self.generators.len());
        for g in &self.generators {
            let gf = g.act(f)?;
            match gf.equal_up_to_scalar(f)? {
                Some(c) => gen_values.push(c),
                None => return Ok(None),
            }
        }
        match self.extend_character(&gen_values) {
            Ok(values) => Ok(Some(values)),
            Err(GroupError::InconsistentCharacter) => Ok(None),
            Err(e) => Err(e),
        }
    }

    /// Character value of a semi-invariance character on a named generator.
    pub fn character_on_generator(
        &self,
        values: &[CycloNum],
        name: &str,
    ) -> Option<CycloNum> {
        let idx = self.gen_names.iter().position(|n| n == name)?;
        // The generator's linear element is the transition from the identity.
        let lin_idx = self.linear_trans[0][idx];
        values.get(lin_idx).cloned()
    }

    /// Evaluate a word in the named generators, e.g. "a*b^-1*c^2".
    pub fn evaluate_word(&self, word: &str) -> Result<ProjectiveMap, GroupError> {
        let mut acc = ProjectiveMap::identity(self.ambient).promoted(self.conductor)?;
        let word = word.trim();
        if word == "1" || word == "id" {
            return Ok(acc);
        }
        for part in word.split('*') {
            let part = part.trim();
            if part.is_empty() {
                return Err(GroupError::BadWord("empty factor".into()));
            }
            let (name, exp) = match part.split_once('^') {
                None => (part, 1i64),
                Some((n, e)) => (
                    n.trim(),
                    e.trim()
                        .parse::<i64>()
                        .map_err(|_| GroupError::BadWord(format!("bad exponent in '{part}'")))?,
                ),
            };
            let g = self
                .generator(name)
                .ok_or_else(|| GroupError::UnknownGenerator(name.to_string()))?;
            let g = if exp < 0 { g.inverse() } else { g.clone() };
            for _ in 0..exp.unsigned_abs() {
                acc = acc.compose(&g);
            }
        }
        Ok(acc)
    }

    /// Check one relation `lhs = rhs`, projectively or linearly.
    pub fn verify_relation(&self, lhs: &str, rhs: &str, linear: bool) -> Result<bool, GroupError> {
        let a = self.evaluate_word(lhs)?;
        let b = self.evaluate_word(rhs)?;
        Ok(if linear {
            a.lift() == b.lift() && a.block_swap() == b.block_swap()
        } else {
            a == b
        })
    }

    /// All relations must hold.
    pub fn verify_relations(
        &self,
        relations: &[(String, String, bool)],
    ) -> Result<bool, GroupError> {
        for (lhs, rhs, linear) in relations {
            if !self.verify_relation(lhs, rhs, *linear)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::parse_cyclo;

    fn c(s: &str) -> CycloNum {
        parse_cyclo(s, 1).unwrap()
    }

    fn mat3(rows: [[&str; 3]; 3]) -> Matrix {
        let data = rows.iter().flat_map(|r| r.iter().map(|s| c(s))).collect();
        Matrix::new(3, 3, data)
    }

    fn c7_generator() -> ProjectiveMap {
        ProjectiveMap::new(
            Ambient::P2,
            mat3([["z7", "0", "0"], ["0", "z7^2", "0"], ["0", "0", "z7^4"]]),
            false,
        )
        .unwrap()
    }

    fn shift_generator() -> ProjectiveMap {
        ProjectiveMap::new(
            Ambient::P2,
            mat3([["0", "0", "1"], ["1", "0", "0"], ["0", "1", "0"]]),
            false,
        )
        .unwrap()
    }

    fn c3c7() -> MatrixGroup {
        MatrixGroup::generate(
            "c3c7",
            Ambient::P2,
            vec![
                ("t".to_string(), c7_generator()),
                ("s".to_string(), shift_generator()),
            ],
            100,
        )
        .unwrap()
    }

    #[test]
    fn c3c7_has_order_21() {
        let g = c3c7();
        assert_eq!(g.order(), 21);
        assert_eq!(g.linear_order(), 21);
        assert_eq!(g.scalar_subgroup_order(), 1);
    }

    #[test]
    fn element_orders() {
        assert_eq!(c7_generator().projective_order(100).unwrap(), 7);
        assert_eq!(shift_generator().projective_order(100).unwrap(), 3);
        assert_eq!(
            ProjectiveMap::identity(Ambient::P2)
                .projective_order(10)
                .unwrap(),
            1
        );
    }

    #[test]
    fn relation_conjugation() {
        let g = c3c7();
        assert!(g.verify_relation("s*t*s^-1", "t^4", false).unwrap());
        assert!(g.verify_relation("t^7", "1", false).unwrap());
        assert!(!g.verify_relation("s*t*s^-1", "t^2", false).unwrap());
        assert!(matches!(
            g.verify_relation("nope", "1", false),
            Err(GroupError::UnknownGenerator(_))
        ));
    }

    #[test]
    fn fixed_points_of_shift() {
        let tau = shift_generator();
        let comps = fixed_points(&tau, 100).unwrap();
        let pts: Vec<&PointP> = comps.iter().filter_map(|c| c.as_point()).collect();
        assert_eq!(pts.len(), 3);
        let expected = PointP::new(Ambient::P2, vec![c("1"), c("1"), c("1")]).unwrap();
        assert!(pts.iter().any(|p| **p == expected));
        let zeta = PointP::new(Ambient::P2, vec![c("1"), c("z3"), c("z3^2")]).unwrap();
        assert!(pts.iter().any(|p| **p == zeta));
    }

    #[test]
    fn fixed_points_of_diagonal() {
        let comps = fixed_points(&c7_generator(), 100).unwrap();
        let pts: Vec<&PointP> = comps.iter().filter_map(|c| c.as_point()).collect();
        assert_eq!(pts.len(), 3);
        let e0 = PointP::new(Ambient::P2, vec![c("1"), c("0"), c("0")]).unwrap();
        assert!(pts.iter().any(|p| **p == e0));
    }

    #[test]
    fn identity_fixes_everything() {
        let id = ProjectiveMap::identity(Ambient::P2);
        let comps = fixed_points(&id, 10).unwrap();
        assert_eq!(comps.len(), 1);
        match &comps[0] {
            FixedComponent::Subspace(basis) => assert_eq!(basis.len(), 3),
            other => panic!("expected the whole plane, got {other:?}"),
        }
    }

    #[test]
    fn orbits() {
        let g = c3c7();
        let p = PointP::new(Ambient::P2, vec![c("1"), c("1"), c("1")]).unwrap();
        assert_eq!(g.orbit_point(&p).unwrap().len(), 7);
        let e0 = PointP::new(Ambient::P2, vec![c("1"), c("0"), c("0")]).unwrap();
        assert_eq!(g.orbit_point(&e0).unwrap().len(), 3);
        // Orbit-stabilizer on both.
        assert_eq!(g.stabilizer_order(&p).unwrap() * 7, 21);
        assert_eq!(g.stabilizer_order(&e0).unwrap() * 3, 21);
    }

    #[test]
    fn orbit_of_common_fixed_point_is_a_singleton() {
        let g = MatrixGroup::generate(
            "gamma",
            Ambient::P2,
            vec![(
                "g".to_string(),
                ProjectiveMap::new(
                    Ambient::P2,
                    mat3([["1", "0", "0"], ["0", "z3", "0"], ["0", "0", "z3^2"]]),
                    false,
                )
                .unwrap(),
            )],
            10,
        )
        .unwrap();
        let e0 = PointP::new(Ambient::P2, vec![c("1"), c("0"), c("0")]).unwrap();
        assert_eq!(g.orbit_point(&e0).unwrap().len(), 1);
    }

    #[test]
    fn commutator_subgroup_of_c3c7_is_c7() {
        let g = c3c7();
        let d = g.commutator_subgroup(100).unwrap();
        assert_eq!(d.order(), 7);
        let a = MatrixGroup::generate(
            "gamma",
            Ambient::P2,
            vec![(
                "g".to_string(),
                ProjectiveMap::new(
                    Ambient::P2,
                    mat3([["1", "0", "0"], ["0", "z3", "0"], ["0", "0", "z3^2"]]),
                    false,
                )
                .unwrap(),
            )],
            100,
        )
        .unwrap();
        assert_eq!(a.commutator_subgroup(10).unwrap().order(), 1);
    }

    #[test]
    fn semi_invariance_character_of_invariant_sextic() {
        let g = c3c7();
        let p2 = crate::polyring::parse_poly("x0^5*x1 + x2^5*x0 + x1^5*x2", 3, None).unwrap();
        let chi = g.semi_invariance_character(&p2).unwrap().unwrap();
        assert!(chi.iter().all(|v| v.is_one()));
        let x0 = crate::polyring::parse_poly("x0", 3, None).unwrap();
        assert!(g.semi_invariance_character(&x0).unwrap().is_none());
    }

    #[test]
    fn character_multiplicativity_on_all_pairs() {
        // Semi-invariant weight under the diagonal C7 alone.
        let g = MatrixGroup::generate(
            "c7",
            Ambient::P2,
            vec![("t".to_string(), c7_generator())],
            100,
        )
        .unwrap();
        let f = crate::polyring::parse_poly("x0^5*x1", 3, None).unwrap();
        let chi = g.semi_invariance_character(&f).unwrap().unwrap();
        for (i, ei) in g.linear_elements().iter().enumerate() {
            for (j, ej) in g.linear_elements().iter().enumerate() {
                let prod = ei.compose(ej);
                let k = g
                    .linear_elements()
                    .iter()
                    .position(|e| e.lift() == prod.lift())
                    .unwrap();
                assert_eq!(chi[k], chi[i].mul(&chi[j]));
            }
        }
    }

    #[test]
    fn linearization_determinant_scaling_invariance() {
        let tau = shift_generator();
        let p = PointP::new(Ambient::P2, vec![c("1"), c("1"), c("1")]).unwrap();
        let d = tau.linearization_det(&p).unwrap();
        let scaled = ProjectiveMap::new(Ambient::P2, tau.lift().scale(&c("z3")), false).unwrap();
        assert_eq!(scaled.linearization_det(&p).unwrap(), d);
        let id = ProjectiveMap::identity(Ambient::P2);
        assert!(id.linearization_det(&p).unwrap().is_one());
        let e0 = PointP::new(Ambient::P2, vec![c("1"), c("0"), c("0")]).unwrap();
        assert!(matches!(
            tau.linearization_det(&e0),
            Err(GroupError::NotFixed)
        ));
    }

    #[test]
    fn p1xp1_swap_structure() {
        let cmat = Matrix::new(
            4,
            4,
            vec![
                c("z4"),
                c("0"),
                c("0"),
                c("0"),
                c("0"),
                c("1"),
                c("0"),
                c("0"),
                c("0"),
                c("0"),
                c("-z4"),
                c("0"),
                c("0"),
                c("0"),
                c("0"),
                c("1"),
            ],
        );
        let cmap = ProjectiveMap::new(Ambient::P1xP1, cmat, false).unwrap();
        assert_eq!(cmap.projective_order(100).unwrap(), 4);
        let mut sw = Matrix::zero(4, 4);
        *sw.at_mut(0, 2) = c("1");
        *sw.at_mut(1, 3) = c("1");
        *sw.at_mut(2, 0) = c("1");
        *sw.at_mut(3, 1) = c("1");
        let g = ProjectiveMap::new(Ambient::P1xP1, sw, true).unwrap();
        assert_eq!(g.projective_order(10).unwrap(), 2);
        let comps = fixed_points(&g, 10).unwrap();
        assert_eq!(comps.len(), 1);
        assert!(matches!(comps[0], FixedComponent::SwapGraph { .. }));
        let p = PointP::new(Ambient::P1xP1, vec![c("1"), c("2"), c("1"), c("2")]).unwrap();
        assert_eq!(g.apply(&p), p);
        // Mixed-block entries with the wrong flag are rejected.
        let bad = ProjectiveMap::new(Ambient::P1xP1, Matrix::identity(4), true);
        assert!(matches!(bad, Err(GroupError::BadBlockStructure)));
    }

    #[test]
    fn conjugate_fixed_points_match() {
        // fixed_points(h g h^-1) = h . fixed_points(g)
        let g = c3c7();
        let tau = g.generator("s").unwrap().clone();
        let h = g.generator("t").unwrap().clone();
        let conj = h.compose(&tau).compose(&h.inverse());
        let fix_tau: Vec<PointP> = fixed_points(&tau, 100)
            .unwrap()
            .into_iter()
            .filter_map(|c| match c {
                FixedComponent::Point(p) => Some(p),
                _ => None,
            })
            .collect();
        let fix_conj: Vec<PointP> = fixed_points(&conj, 100)
            .unwrap()
            .into_iter()
            .filter_map(|c| match c {
                FixedComponent::Point(p) => Some(p),
                _ => None,
            })
            .collect();
        assert_eq!(fix_tau.len(), fix_conj.len());
        for p in &fix_tau {
            let hp = h.apply(p);
            assert!(fix_conj.contains(&hp));
        }
    }
}
