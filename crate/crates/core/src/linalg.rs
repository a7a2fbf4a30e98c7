//! Exact integer matrices and Smith normal form.
//!
//! Everything downstream (homology, abelianization, torsion coefficients)
//! reduces to the Smith normal form computed here. Entries are
//! arbitrary-precision: SNF pivoting blows up intermediate coefficients even
//! on small boundary matrices, so fixed-width integers would be a
//! correctness bug, not a performance tradeoff.

use std::fmt;
use std::ops::Index;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense integer matrix, row-major, arbitrary-precision entries.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{}x{} matrix needs {} entries, got {}",
                rows,
                cols,
                rows * cols,
                entries.len()
            )));
        }
        Ok(IntMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    /// Convenience constructor from machine-integer rows; rows must be rectangular.
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Shape("ragged rows".into()));
        }
        let entries = rows
            .iter()
            .flat_map(|row| row.iter().map(|&x| BigInt::from(x)))
            .collect();
        IntMatrix::new(r, c, entries)
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        IntMatrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn transpose(&self) -> IntMatrix {
        IntMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let cur = out.get(i, j) + a * b;
                        out.set(i, j, cur);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Exact determinant of a square matrix (Bareiss fraction-free elimination).
    pub fn determinant(&self) -> Result<BigInt> {
        if self.rows != self.cols {
            return Err(Error::Shape(format!(
                "determinant of non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a.get(k, k).is_zero() {
                match (k + 1..n).find(|&r| !a.get(r, k).is_zero()) {
                    Some(r) => {
                        a.swap_rows(k, r);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = a.get(i, j) * a.get(k, k) - a.get(i, k) * a.get(k, j);
                    a.set(i, j, num / &prev);
                }
            }
            prev = a.get(k, k).clone();
        }
        Ok(sign * a.get(n - 1, n - 1))
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for r in 0..self.rows {
            self.entries.swap(r * self.cols + i, r * self.cols + j);
        }
    }

    /// row[target] += k * row[source]
    fn row_axpy(&mut self, target: usize, source: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for c in 0..self.cols {
            let add = k * self.get(source, c);
            if !add.is_zero() {
                let v = self.get(target, c) + add;
                self.set(target, c, v);
            }
        }
    }

    /// col[target] += k * col[source]
    fn col_axpy(&mut self, target: usize, source: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for r in 0..self.rows {
            let add = k * self.get(r, source);
            if !add.is_zero() {
                let v = self.get(r, target) + add;
                self.set(r, target, v);
            }
        }
    }

    fn negate_row(&mut self, i: usize) {
        for c in 0..self.cols {
            let v = -self.get(i, c);
            self.set(i, c, v);
        }
    }

    fn negate_col(&mut self, j: usize) {
        for r in 0..self.rows {
            let v = -self.get(r, j);
            self.set(r, j, v);
        }
    }

    /// Smith normal form `U * M * V = D` with unimodular `U`, `V` and a
    /// diagonal `D` whose nonzero entries form a divisibility chain.
    pub fn snf(&self) -> SnfDecomposition {
        let full = self.snf_full();
        SnfDecomposition {
            u: full.u,
            d: full.d,
            v: full.v,
            diagonal: full.diagonal,
        }
    }

    /// Number of nonzero invariant factors.
    pub fn rank(&self) -> usize {
        self.snf_full().diagonal.len()
    }

    /// Rank of the kernel of `M : Z^cols -> Z^rows`.
    pub fn kernel_rank(&self) -> usize {
        self.cols - self.rank()
    }

    /// Structure of `Z^rows / (column span of M)` as `(free_rank, torsion)`,
    /// torsion listed as the invariant factors > 1 in divisibility order.
    pub fn cokernel_structure(&self) -> (usize, Vec<BigInt>) {
        let diag = self.snf_full().diagonal;
        let free = self.rows - diag.len();
        let torsion = diag.into_iter().filter(|d| !d.is_one()).collect();
        (free, torsion)
    }

    pub(crate) fn snf_full(&self) -> SnfFull {
        let (nr, nc) = (self.rows, self.cols);
        let mut a = self.clone();
        let mut u = IntMatrix::identity(nr);
        let mut u_inv = IntMatrix::identity(nr);
        let mut v = IntMatrix::identity(nc);
        let mut v_inv = IntMatrix::identity(nc);

        let mut t = 0;
        while t < nr.min(nc) {
            let Some((pi, pj)) = pivot_position(&a, t) else {
                break;
            };
            if pi != t {
                a.swap_rows(t, pi);
                u.swap_rows(t, pi);
                u_inv.swap_cols(t, pi);
            }
            if pj != t {
                a.swap_cols(t, pj);
                v.swap_cols(t, pj);
                v_inv.swap_rows(t, pj);
            }
            'pivot: loop {
                // Clear the pivot column with Euclidean steps; a nonzero
                // remainder becomes a strictly smaller pivot.
                for i in t + 1..nr {
                    if a.get(i, t).is_zero() {
                        continue;
                    }
                    let q = a.get(i, t) / a.get(t, t);
                    if !q.is_zero() {
                        let k = -q;
                        a.row_axpy(i, t, &k);
                        u.row_axpy(i, t, &k);
                        u_inv.col_axpy(t, i, &(-k));
                    }
                    if !a.get(i, t).is_zero() {
                        a.swap_rows(t, i);
                        u.swap_rows(t, i);
                        u_inv.swap_cols(t, i);
                        continue 'pivot;
                    }
                }
                for j in t + 1..nc {
                    if a.get(t, j).is_zero() {
                        continue;
                    }
                    let q = a.get(t, j) / a.get(t, t);
                    if !q.is_zero() {
                        let k = -q;
                        a.col_axpy(j, t, &k);
                        v.col_axpy(j, t, &k);
                        v_inv.row_axpy(t, j, &(-k));
                    }
                    if !a.get(t, j).is_zero() {
                        a.swap_cols(t, j);
                        v.swap_cols(t, j);
                        v_inv.swap_rows(t, j);
                        continue 'pivot;
                    }
                }
                // Divisibility chain: fold any non-divisible entry of the
                // remaining block into the pivot row and re-eliminate.
                if let Some(i) = find_nondivisible_row(&a, t) {
                    let one = BigInt::one();
                    a.row_axpy(t, i, &one);
                    u.row_axpy(t, i, &one);
                    u_inv.col_axpy(i, t, &(-one));
                    continue 'pivot;
                }
                break;
            }
            t += 1;
        }

        for i in 0..nr.min(nc) {
            if a.get(i, i).is_negative() {
                a.negate_row(i);
                u.negate_row(i);
                u_inv.negate_col(i);
            }
        }

        let diagonal: Vec<BigInt> = (0..nr.min(nc))
            .map(|i| a.get(i, i).clone())
            .take_while(|d| !d.is_zero())
            .collect();

        SnfFull {
            u,
            u_inv,
            d: a,
            v,
            v_inv,
            diagonal,
        }
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        self.get(i, j)
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// Result of [`IntMatrix::snf`]: `u * m * v = d`.
#[derive(Clone, Debug)]
pub struct SnfDecomposition {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    /// Nonzero invariant factors `d1 | d2 | ... | dr`, all positive.
    pub diagonal: Vec<BigInt>,
}

pub(crate) struct SnfFull {
    pub u: IntMatrix,
    #[allow(dead_code)]
    pub u_inv: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    pub v_inv: IntMatrix,
    pub diagonal: Vec<BigInt>,
}

/// Nonzero entry of minimal absolute value in the trailing submatrix,
/// ties broken by lowest row then lowest column.
fn pivot_position(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    let mut best_abs = BigInt::zero();
    for i in t..a.rows() {
        for j in t..a.cols() {
            let e = a.get(i, j);
            if e.is_zero() {
                continue;
            }
            let abs = e.abs();
            if best.is_none() || abs < best_abs {
                best = Some((i, j));
                best_abs = abs;
            }
        }
    }
    best
}

fn find_nondivisible_row(a: &IntMatrix, t: usize) -> Option<usize> {
    let pivot = a.get(t, t).clone();
    for i in t + 1..a.rows() {
        for j in t + 1..a.cols() {
            if !(a.get(i, j) % &pivot).is_zero() {
                return Some(i);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag_i64(m: &IntMatrix) -> Vec<i64> {
        m.snf()
            .diagonal
            .iter()
            .map(|d| i64::try_from(d).unwrap())
            .collect()
    }

    #[test]
    fn snf_unimodular_2x2() {
        let m = IntMatrix::from_rows(&[vec![5, -3], vec![-2, 1]]).unwrap();
        assert_eq!(diag_i64(&m), vec![1, 1]);
        assert_eq!(m.rank(), 2);
        assert_eq!(m.kernel_rank(), 0);
    }

    #[test]
    fn snf_zero_matrix() {
        let m = IntMatrix::zeros(2, 3);
        let snf = m.snf();
        assert!(snf.diagonal.is_empty());
        assert!(snf.d.is_zero());
        assert_eq!(m.rank(), 0);
        assert_eq!(m.kernel_rank(), 3);
    }

    #[test]
    fn snf_divisibility_chain() {
        let m = IntMatrix::from_rows(&[vec![2, 4], vec![6, 8]]).unwrap();
        assert_eq!(diag_i64(&m), vec![2, 4]);
    }

    #[test]
    fn snf_decomposition_reassembles() {
        let m = IntMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, 4, 16]]).unwrap();
        let snf = m.snf();
        let umv = snf.u.mul(&m).unwrap().mul(&snf.v).unwrap();
        assert_eq!(umv, snf.d);
        assert_eq!(snf.u.determinant().unwrap().abs(), BigInt::one());
        assert_eq!(snf.v.determinant().unwrap().abs(), BigInt::one());
    }

    #[test]
    fn snf_empty_matrix_conventions() {
        let m = IntMatrix::zeros(0, 0);
        let snf = m.snf();
        assert!(snf.diagonal.is_empty());
        assert_eq!(snf.u.rows(), 0);
        assert_eq!(snf.v.rows(), 0);
        assert_eq!(m.rank(), 0);

        let tall = IntMatrix::zeros(3, 0);
        assert_eq!(tall.cokernel_structure(), (3, vec![]));
        let wide = IntMatrix::zeros(0, 3);
        assert_eq!(wide.kernel_rank(), 3);
    }

    #[test]
    fn cokernel_of_unimodular_is_trivial() {
        let m = IntMatrix::from_rows(&[vec![5, -3], vec![-2, 1]]).unwrap();
        assert_eq!(m.cokernel_structure(), (0, vec![]));
    }

    #[test]
    fn cokernel_z_mod_2() {
        let m = IntMatrix::from_rows(&[vec![2]]).unwrap();
        assert_eq!(m.cokernel_structure(), (0, vec![BigInt::from(2)]));
    }

    #[test]
    fn rank_identity_and_zero() {
        assert_eq!(IntMatrix::identity(3).rank(), 3);
        assert_eq!(IntMatrix::identity(3).kernel_rank(), 0);
        assert_eq!(IntMatrix::zeros(2, 2).rank(), 0);
        assert_eq!(IntMatrix::zeros(2, 2).kernel_rank(), 2);
    }

    #[test]
    fn determinant_bareiss() {
        let m = IntMatrix::from_rows(&[vec![2, 0, 1], vec![1, 1, 0], vec![0, 3, 4]]).unwrap();
        assert_eq!(m.determinant().unwrap(), BigInt::from(11));
        let singular = IntMatrix::from_rows(&[vec![1, 2], vec![2, 4]]).unwrap();
        assert_eq!(singular.determinant().unwrap(), BigInt::zero());
    }

    #[test]
    fn inverse_tracking_consistency() {
        let m = IntMatrix::from_rows(&[vec![4, -2, 7], vec![0, 3, 3], vec![9, 9, -1]]).unwrap();
        let full = m.snf_full();
        assert_eq!(full.u.mul(&full.u_inv).unwrap(), IntMatrix::identity(3));
        assert_eq!(full.v.mul(&full.v_inv).unwrap(), IntMatrix::identity(3));
    }

    #[test]
    fn shape_mismatch_rejected() {
        assert!(IntMatrix::new(2, 2, vec![BigInt::zero(); 3]).is_err());
        let a = IntMatrix::zeros(2, 3);
        let b = IntMatrix::zeros(2, 3);
        assert!(a.mul(&b).is_err());
        assert!(a.determinant().is_err());
    }
}
