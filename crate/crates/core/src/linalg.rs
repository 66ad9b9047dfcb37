//! Small exact matrices over cyclotomic scalars: products, determinants,
//! inverses, kernels and linear solves. Pivoting always takes the first
//! nonzero entry in row order, so every reduction is deterministic.

use crate::cyclo::CycloNum;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinAlgError {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("matrix is singular")]
    Singular,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<CycloNum>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, data: Vec<CycloNum>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data size mismatch");
        Matrix { rows, cols, data }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix::new(rows, cols, vec![CycloNum::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = CycloNum::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &CycloNum {
        &self.data[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut CycloNum {
        &mut self.data[r * self.cols + c]
    }

    pub fn entries(&self) -> &[CycloNum] {
        &self.data
    }

    pub fn map(&self, f: impl Fn(&CycloNum) -> CycloNum) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product dimension mismatch");
        let mut out = Matrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if !b.is_zero() {
                        let t = a.mul(b);
                        *out.at_mut(i, j) = out.at(i, j).add(&t);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[CycloNum]) -> Vec<CycloNum> {
        assert_eq!(self.cols, v.len(), "matrix-vector dimension mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = CycloNum::zero();
                for j in 0..self.cols {
                    let a = self.at(i, j);
                    if !a.is_zero() && !v[j].is_zero() {
                        acc = acc.add(&a.mul(&v[j]));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn scale(&self, c: &CycloNum) -> Matrix {
        self.map(|x| x.mul(c))
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(other.data.iter())
            .map(|(a, b)| a.add(b))
            .collect();
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(other.data.iter())
            .map(|(a, b)| a.sub(b))
            .collect();
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *out.at_mut(j, i) = self.at(i, j).clone();
            }
        }
        out
    }

    pub fn trace(&self) -> CycloNum {
        assert_eq!(self.rows, self.cols);
        let mut acc = CycloNum::zero();
        for i in 0..self.rows {
            acc = acc.add(self.at(i, i));
        }
        acc
    }

    pub fn pow(&self, e: u64) -> Matrix {
        assert_eq!(self.rows, self.cols);
        let mut acc = Matrix::identity(self.rows);
        let mut sq = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq);
            }
        }
        acc
    }

    /// Row echelon form; returns (reduced matrix, pivot columns, det scale).
    fn row_reduce(&self) -> (Matrix, Vec<usize>, CycloNum, bool) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut det_scale = CycloNum::one();
        let mut swapped_odd = false;
        let mut row = 0;
        for col in 0..m.cols {
            let Some(r) = (row..m.rows).find(|&r| !m.at(r, col).is_zero()) else {
                continue;
            };
            if r != row {
                for c in 0..m.cols {
                    let a = m.at(row, c).clone();
                    let b = m.at(r, c).clone();
                    *m.at_mut(row, c) = b;
                    *m.at_mut(r, c) = a;
                }
                swapped_odd = !swapped_odd;
            }
            let pivot = m.at(row, col).clone();
            det_scale = det_scale.mul(&pivot);
            let inv = pivot.inv().expect("pivot nonzero");
            for c in col..m.cols {
                let v = m.at(row, c).mul(&inv);
                *m.at_mut(row, c) = v;
            }
            for r2 in 0..m.rows {
                if r2 != row && !m.at(r2, col).is_zero() {
                    let f = m.at(r2, col).clone();
                    for c in col..m.cols {
                        let delta = m.at(row, c).mul(&f);
                        *m.at_mut(r2, c) = m.at(r2, c).sub(&delta);
                    }
                }
            }
            pivots.push(col);
            row += 1;
            if row == m.rows {
                break;
            }
        }
        (m, pivots, det_scale, swapped_odd)
    }

    pub fn rank(&self) -> usize {
        self.row_reduce().1.len()
    }

    /// Reduced row echelon form with zero rows dropped.
    pub fn rref_nonzero_rows(&self) -> Matrix {
        let (red, pivots, _, _) = self.row_reduce();
        let kept = pivots.len();
        let mut data = Vec::with_capacity(kept * self.cols);
        for r in 0..kept {
            for c in 0..self.cols {
                data.push(red.at(r, c).clone());
            }
        }
        Matrix::new(kept, self.cols, data)
    }

    /// Do the rows of the two matrices span the same subspace?
    pub fn row_span_equal(&self, other: &Matrix) -> bool {
        self.cols == other.cols && self.rref_nonzero_rows() == other.rref_nonzero_rows()
    }

    pub fn from_rows(rows: Vec<Vec<CycloNum>>, cols: usize) -> Matrix {
        let data: Vec<CycloNum> = rows.into_iter().flatten().collect();
        let r = data.len() / cols;
        Matrix::new(r, cols, data)
    }

    pub fn det(&self) -> CycloNum {
        assert_eq!(self.rows, self.cols, "determinant of a square matrix");
        let (_, pivots, scale, swapped_odd) = self.row_reduce();
        if pivots.len() < self.rows {
            return CycloNum::zero();
        }
        if swapped_odd {
            scale.neg()
        } else {
            scale
        }
    }

    pub fn inverse(&self) -> Result<Matrix, LinAlgError> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Matrix::zero(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                *aug.at_mut(i, j) = self.at(i, j).clone();
            }
            *aug.at_mut(i, n + i) = CycloNum::one();
        }
        let (red, pivots, _, _) = aug.row_reduce();
        if pivots.len() < n || pivots.iter().enumerate().any(|(i, &c)| c != i) {
            return Err(LinAlgError::Singular);
        }
        let mut out = Matrix::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                *out.at_mut(i, j) = red.at(i, n + j).clone();
            }
        }
        Ok(out)
    }

    /// Basis of the right kernel, in deterministic order.
    pub fn kernel_basis(&self) -> Vec<Vec<CycloNum>> {
        let (red, pivots, _, _) = self.row_reduce();
        let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivot_set.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![CycloNum::zero(); self.cols];
            v[f] = CycloNum::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = red.at(row, f).neg();
            }
            basis.push(v);
        }
        basis
    }

    /// One solution of A x = b, if consistent.
    pub fn solve(&self, b: &[CycloNum]) -> Option<Vec<CycloNum>> {
        assert_eq!(self.rows, b.len());
        let mut aug = Matrix::zero(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *aug.at_mut(i, j) = self.at(i, j).clone();
            }
            *aug.at_mut(i, self.cols) = b[i].clone();
        }
        let (red, pivots, _, _) = aug.row_reduce();
        // Inconsistent iff a pivot lands in the augmented column.
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![CycloNum::zero(); self.cols];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = red.at(row, self.cols).clone();
        }
        Some(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::parse_cyclo;

    fn m3(entries: &[&str]) -> Matrix {
        Matrix::new(
            3,
            3,
            entries.iter().map(|s| parse_cyclo(s, 1).unwrap()).collect(),
        )
    }

    #[test]
    fn determinant_and_inverse() {
        let a = m3(&["1", "2", "0", "0", "1", "0", "3", "0", "1"]);
        assert_eq!(a.det(), CycloNum::from_int(1));
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(3));
    }

    #[test]
    fn kernel_of_rank_deficient() {
        let a = m3(&["1", "1", "1", "0", "0", "0", "2", "2", "2"]);
        assert_eq!(a.rank(), 1);
        let k = a.kernel_basis();
        assert_eq!(k.len(), 2);
        for v in k {
            let w = a.mul_vec(&v);
            assert!(w.iter().all(|c| c.is_zero()));
        }
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let a = m3(&["1", "0", "0", "0", "1", "0", "1", "1", "0"]);
        let b = vec![
            CycloNum::from_int(2),
            CycloNum::from_int(3),
            CycloNum::from_int(5),
        ];
        let x = a.solve(&b).unwrap();
        assert_eq!(a.mul_vec(&x), b);
        let bad = vec![
            CycloNum::from_int(2),
            CycloNum::from_int(3),
            CycloNum::from_int(6),
        ];
        assert!(a.solve(&bad).is_none());
    }

    #[test]
    fn cyclotomic_determinant() {
        // det diag(z7, z7^2, z7^4) = 1
        let z = |k| parse_cyclo(&format!("z7^{k}"), 1).unwrap();
        let zero = || CycloNum::zero();
        let a = Matrix::new(
            3,
            3,
            vec![
                z(1),
                zero(),
                zero(),
                zero(),
                z(2),
                zero(),
                zero(),
                zero(),
                z(4),
            ],
        );
        assert!(a.det().is_one());
    }
}
