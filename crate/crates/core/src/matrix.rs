//! Dense matrices over the rationals with exact Gaussian elimination.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{format_rational, int, parse_rational, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for k in 0..n {
            m.data[k * n + k] = Rational::one();
        }
        m
    }

    pub fn scalar(n: usize, c: &Rational) -> Self {
        Self::identity(n).scale(c)
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>, cols: usize) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for (r, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(Error::Shape(format!(
                    "row {r} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            data.extend(row);
        }
        Ok(Matrix { rows: n, cols, data })
    }

    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols);
        Matrix {
            rows,
            cols,
            data: entries.iter().map(|&e| int(e)).collect(),
        }
    }

    /// Builds a matrix from its columns; `height` is used when there are none.
    pub fn from_columns(columns: &[Vec<Rational>], height: usize) -> Self {
        let mut m = Self::zeros(height, columns.len());
        for (c, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), height);
            for (r, v) in col.iter().enumerate() {
                m.set(r, c, v.clone());
            }
        }
        m
    }

    /// Nilpotent Jordan block: ones on the subdiagonal, so basis vector `k`
    /// maps to basis vector `k + 1`.
    pub fn jordan_block(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for k in 1..n {
            m.set(k, k - 1, Rational::one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Rational> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.rows)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v * c).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn pow(&self, k: usize) -> Self {
        assert!(self.is_square());
        (0..k).fold(Self::identity(self.rows), |acc, _| &acc * self)
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols)).map(|k| self.get(k, k).clone()).sum()
    }

    /// Columns `[self | other]`.
    pub fn hstack(&self, other: &Matrix) -> Self {
        assert_eq!(self.rows, other.rows);
        let mut m = Self::zeros(self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m.set(r, c, self.get(r, c).clone());
            }
            for c in 0..other.cols {
                m.set(r, self.cols + c, other.get(r, c).clone());
            }
        }
        m
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn vstack(&self, other: &Matrix) -> Self {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn block_diag(&self, other: &Matrix) -> Self {
        let mut m = Self::zeros(self.rows + other.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m.set(r, c, self.get(r, c).clone());
            }
        }
        for r in 0..other.rows {
            for c in 0..other.cols {
                m.set(self.rows + r, self.cols + c, other.get(r, c).clone());
            }
        }
        m
    }

    /// Sub-matrix made of the given columns.
    pub fn select_columns(&self, cols: &[usize]) -> Self {
        let mut m = Self::zeros(self.rows, cols.len());
        for (k, &c) in cols.iter().enumerate() {
            for r in 0..self.rows {
                m.set(r, k, self.get(r, c).clone());
            }
        }
        m
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m.get(row, col).recip();
            for c in col..m.cols {
                let v = m.get(row, c) * &inv;
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r == row || m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col).clone();
                for c in col..m.cols {
                    if m.get(row, c).is_zero() {
                        continue;
                    }
                    let v = m.get(r, c) - &factor * m.get(row, c);
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Matrix whose columns form a basis of the kernel.
    pub fn nullspace(&self) -> Matrix {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Matrix::zeros(self.cols, free.len());
        for (k, &f) in free.iter().enumerate() {
            basis.set(f, k, Rational::one());
            for (prow, &pc) in pivots.iter().enumerate() {
                basis.set(pc, k, -r.get(prow, f).clone());
            }
        }
        basis
    }

    /// Linearly independent columns spanning the column space.
    pub fn column_basis(&self) -> Matrix {
        let (_, pivots) = self.rref();
        self.select_columns(&pivots)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(self.clone());
        }
        let (r, pivots) = self.hstack(&Matrix::identity(n)).rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let cols: Vec<usize> = (n..2 * n).collect();
        let full = r.select_columns(&cols);
        Some(Matrix {
            rows: n,
            cols: n,
            data: full.data[..n * n].to_vec(),
        })
    }

    /// Solves `self * X = rhs`; `None` when the system is inconsistent.
    /// When `self` has dependent columns the free variables are set to zero.
    pub fn solve(&self, rhs: &Matrix) -> Option<Matrix> {
        assert_eq!(self.rows, rhs.rows);
        let (r, pivots) = self.hstack(rhs).rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut x = Matrix::zeros(self.cols, rhs.cols);
        for (prow, &pc) in pivots.iter().enumerate() {
            for c in 0..rhs.cols {
                x.set(pc, c, r.get(prow, self.cols + c).clone());
            }
        }
        Some(x)
    }

    /// Row-major `"p/q"` strings.
    pub fn to_string_rows(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|r| self.row(r).iter().map(format_rational).collect())
            .collect()
    }

    pub fn from_string_rows(rows: &[Vec<String>], expect_rows: usize, expect_cols: usize) -> Result<Self> {
        if rows.len() != expect_rows {
            return Err(Error::Shape(format!(
                "expected {expect_rows} rows, found {}",
                rows.len()
            )));
        }
        let parsed = rows
            .iter()
            .map(|row| row.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(parsed, expect_cols)
    }

    fn binary(&self, rhs: &Matrix, f: impl Fn(&Rational, &Rational) -> Rational) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| f(a, b)).collect(),
        }
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        self.binary(rhs, |a, b| a + b)
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        self.binary(rhs, |a, b| a - b)
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        self.scale(&-Rational::one())
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in product");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.get(k, c);
                    if !b.is_zero() {
                        out.data[r * rhs.cols + c] += a * b;
                    }
                }
            }
        }
        out
    }
}

/// One row per line, entries separated by single spaces.
impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let line: Vec<String> = self.row(r).iter().map(format_rational).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}


/// Homogeneous linear system with sparse rows, solved by incremental
/// elimination. Suited to the banded systems that come from equivariance
/// conditions between neighbouring weight spaces.
#[derive(Clone, Debug, Default)]
pub struct SparseSystem {
    unknowns: usize,
    // pivot column -> row normalised to a leading 1, sorted by column
    pivots: std::collections::BTreeMap<usize, Vec<(usize, Rational)>>,
}

impl SparseSystem {
    pub fn new(unknowns: usize) -> Self {
        SparseSystem {
            unknowns,
            pivots: Default::default(),
        }
    }

    pub fn unknowns(&self) -> usize {
        self.unknowns
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Adds the equation `Σ coeff · u[col] = 0`. Repeated columns are summed.
    pub fn add_equation(&mut self, terms: impl IntoIterator<Item = (usize, Rational)>) {
        let mut row: std::collections::BTreeMap<usize, Rational> = Default::default();
        for (c, v) in terms {
            assert!(c < self.unknowns, "unknown {c} out of range");
            if v.is_zero() {
                continue;
            }
            let e = row.entry(c).or_insert_with(Rational::zero);
            *e += v;
        }
        row.retain(|_, v| !v.is_zero());
        while let Some((&lead, _)) = row.iter().next() {
            let Some(pivot) = self.pivots.get(&lead) else {
                let inv = row[&lead].recip();
                let normalised = row.into_iter().map(|(c, v)| (c, v * &inv)).collect();
                self.pivots.insert(lead, normalised);
                return;
            };
            let factor = row[&lead].clone();
            for (c, v) in pivot {
                let e = row.entry(*c).or_insert_with(Rational::zero);
                *e -= &factor * v;
                if e.is_zero() {
                    row.remove(c);
                }
            }
        }
    }

    /// Basis of the solution space, one vector per free unknown.
    pub fn solution_basis(&self) -> Vec<Vec<Rational>> {
        // back-substitute so each pivot row only involves free unknowns
        let mut reduced: std::collections::BTreeMap<usize, std::collections::BTreeMap<usize, Rational>> =
            Default::default();
        for (&p, row) in self.pivots.iter().rev() {
            let mut r: std::collections::BTreeMap<usize, Rational> = Default::default();
            for (c, v) in row.iter().skip(1) {
                match reduced.get(c) {
                    Some(sub) => {
                        for (fc, fv) in sub {
                            let e = r.entry(*fc).or_insert_with(Rational::zero);
                            *e -= v * fv;
                        }
                    }
                    None => {
                        let e = r.entry(*c).or_insert_with(Rational::zero);
                        *e += v;
                    }
                }
            }
            r.retain(|_, v| !v.is_zero());
            reduced.insert(p, r);
        }
        (0..self.unknowns)
            .filter(|c| !self.pivots.contains_key(c))
            .map(|free| {
                let mut v = vec![Rational::zero(); self.unknowns];
                v[free] = Rational::one();
                for (p, r) in &reduced {
                    if let Some(coeff) = r.get(&free) {
                        v[*p] = -coeff.clone();
                    }
                }
                v
            })
            .collect()
    }
}

#[cfg(test)]
mod sparse_tests {
    use super::*;

    #[test]
    fn sparse_matches_dense_nullspace() {
        let dense = Matrix::from_i64(3, 5, &[1, 2, 0, -1, 3, 0, 1, 1, 0, 2, 2, 5, 1, -2, 8]);
        let mut sys = SparseSystem::new(5);
        for r in 0..3 {
            sys.add_equation(dense.row(r).iter().cloned().enumerate());
        }
        assert_eq!(sys.rank(), dense.rank());
        let basis = sys.solution_basis();
        assert_eq!(basis.len(), dense.nullspace().cols());
        let k = Matrix::from_columns(&basis, 5);
        assert!((&dense * &k).is_zero());
        assert_eq!(k.rank(), basis.len());
    }
}
