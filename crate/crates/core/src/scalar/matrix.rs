//! Dense matrices over [`CycScalar`] with exact elimination.

use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

use super::CycScalar;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "MatrixRepr", into = "MatrixRepr")]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<CycScalar>,
}

#[derive(Serialize, Deserialize)]
struct MatrixRepr {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<CycScalar>>,
}

impl From<ExactMatrix> for MatrixRepr {
    fn from(m: ExactMatrix) -> Self {
        MatrixRepr { rows: m.rows, cols: m.cols, entries: m.to_rows() }
    }
}

impl TryFrom<MatrixRepr> for ExactMatrix {
    type Error = Error;
    fn try_from(r: MatrixRepr) -> Result<Self> {
        if r.entries.len() != r.rows {
            return Err(Error::DimensionMismatch(format!("declared {} rows, found {}", r.rows, r.entries.len())));
        }
        let m = if r.rows == 0 { ExactMatrix::zeros(0, r.cols) } else { ExactMatrix::from_rows(r.entries)? };
        if m.cols != r.cols {
            return Err(Error::DimensionMismatch(format!("declared {} columns, found {}", r.cols, m.cols)));
        }
        Ok(m)
    }
}

/// ⟨u, v⟩ = Σ u_i · conj(v_i), linear in the first argument.
pub fn inner(u: &[CycScalar], v: &[CycScalar]) -> CycScalar {
    let mut acc = CycScalar::zero();
    for (a, b) in u.iter().zip(v) {
        if !a.is_zero() && !b.is_zero() {
            acc += &(a * &b.conj());
        }
    }
    acc
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix { rows, cols, data: vec![CycScalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = CycScalar::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> CycScalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        ExactMatrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<CycScalar>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        let n = rows.len();
        Ok(ExactMatrix { rows: n, cols, data: rows.into_iter().flatten().collect() })
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<CycScalar>]) -> Result<Self> {
        if columns.iter().any(|c| c.len() != rows) {
            return Err(Error::DimensionMismatch("column length".into()));
        }
        Ok(Self::from_fn(rows, columns.len(), |r, c| columns[c][r].clone()))
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| CycScalar::from_int(x)).collect()).collect())
            .expect("rectangular literal")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &CycScalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: CycScalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn add_at(&mut self, r: usize, c: usize, v: &CycScalar) {
        self.data[r * self.cols + c] += v;
    }

    pub fn row(&self, r: usize) -> &[CycScalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<CycScalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<CycScalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    /// Entries in row-major order.
    pub fn flatten(&self) -> Vec<CycScalar> {
        self.data.clone()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(CycScalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Self::identity(self.rows)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let p = a * b;
                        out.data[i * other.cols + j] += &p;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[CycScalar]) -> Result<Vec<CycScalar>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!("{} columns, vector of length {}", self.cols, v.len())));
        }
        let mut out = vec![CycScalar::zero(); self.rows];
        for (i, o) in out.iter_mut().enumerate() {
            for (a, b) in self.row(i).iter().zip(v) {
                if !a.is_zero() && !b.is_zero() {
                    *o += &(a * b);
                }
            }
        }
        Ok(out)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&CycScalar, &CycScalar) -> CycScalar) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect();
        Ok(ExactMatrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, s: &CycScalar) -> Self {
        ExactMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * s).collect() }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn conj_transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).conj())
    }

    pub fn trace(&self) -> CycScalar {
        let mut t = CycScalar::zero();
        for i in 0..self.rows.min(self.cols) {
            t += self.get(i, i);
        }
        t
    }

    /// Kronecker product, `self` indexing the slow (leftmost) factor.
    pub fn kron(&self, other: &Self) -> Self {
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut out = Self::zeros(r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            out.set(i * other.rows + k, j * other.cols + l, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn select_columns(&self, cols: &[usize]) -> Self {
        Self::from_fn(self.rows, cols.len(), |r, c| self.get(r, cols[c]).clone())
    }

    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |r, c| self.get(rows[r], cols[c]).clone())
    }

    pub fn hstack(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch("hstack row counts".into()));
        }
        Ok(Self::from_fn(self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                other.get(r, c - self.cols).clone()
            }
        }))
    }

    pub fn vstack(&self, other: &Self) -> Result<Self> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch("vstack column counts".into()));
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(ExactMatrix { rows: self.rows + other.rows, cols: self.cols, data })
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
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
            if p != row {
                for c in 0..m.cols {
                    m.data.swap(p * m.cols + c, row * m.cols + c);
                }
            }
            let inv = m.get(row, col).inv().expect("pivot is nonzero");
            for c in col..m.cols {
                let v = m.get(row, c);
                if !v.is_zero() {
                    let nv = v * &inv;
                    m.set(row, c, nv);
                }
            }
            let pivot_row: Vec<CycScalar> = m.row(row).to_vec();
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let f = m.get(r, col).clone();
                if f.is_zero() {
                    continue;
                }
                for (c, pv) in pivot_row.iter().enumerate().skip(col) {
                    if !pv.is_zero() {
                        let d = &f * pv;
                        m.data[r * m.cols + c] -= &d;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        // eliminate along the shorter side
        if self.rows > self.cols {
            self.transpose().rref().1.len()
        } else {
            self.rref().1.len()
        }
    }

    /// Basis of the right kernel, one vector per free column.
    pub fn kernel(&self) -> Vec<Vec<CycScalar>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![CycScalar::zero(); self.cols];
                v[f] = CycScalar::one();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = -r.get(i, f);
                }
                v
            })
            .collect()
    }

    /// Solves `self · x = b` for one particular solution, if any exists.
    pub fn solve(&self, b: &[CycScalar]) -> Option<Vec<CycScalar>> {
        let aug = self.hstack(&Self::from_columns(self.rows, &[b.to_vec()]).ok()?).ok()?;
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![CycScalar::zero(); self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = r.get(i, self.cols).clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let (r, pivots) = self.hstack(&Self::identity(n))?.rref();
        if pivots.len() < n || (n > 0 && pivots[n - 1] != n - 1) {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::from_fn(n, n, |i, j| r.get(i, n + j).clone()))
    }
}

/// Kernel basis as column matrices.
pub fn mat_kernel(m: &ExactMatrix) -> Vec<ExactMatrix> {
    m.kernel()
        .into_iter()
        .map(|v| ExactMatrix::from_columns(v.len(), &[v]).expect("column"))
        .collect()
}

/// Basis of the matrices commuting with every matrix in `mats` (all d×d).
pub fn commutant(mats: &[ExactMatrix], d: usize) -> Result<Vec<ExactMatrix>> {
    let mut system = ExactMatrix::zeros(mats.len() * d * d, d * d);
    for (a_idx, a) in mats.iter().enumerate() {
        if a.rows() != d || a.cols() != d {
            return Err(Error::DimensionMismatch(format!("{}x{} matrix in a commutant of size {d}", a.rows(), a.cols())));
        }
        for i in 0..d {
            for j in 0..d {
                let row = (a_idx * d + i) * d + j;
                for k in 0..d {
                    system.add_at(row, k * d + j, a.get(i, k));
                    system.add_at(row, i * d + k, &-a.get(k, j).clone());
                }
            }
        }
    }
    Ok(system
        .kernel()
        .into_iter()
        .map(|v| ExactMatrix::from_fn(d, d, |i, j| v[i * d + j].clone()))
        .collect())
}

/// Indices of a maximal linearly independent subfamily, chosen greedily in order.
pub fn independent_subset(vectors: &[Vec<CycScalar>]) -> Vec<usize> {
    let mut basis: Vec<(usize, Vec<CycScalar>)> = Vec::new();
    let mut chosen = Vec::new();
    for (idx, v) in vectors.iter().enumerate() {
        let mut w = v.clone();
        for (p, b) in &basis {
            let f = w[*p].clone();
            if !f.is_zero() {
                for (x, y) in w.iter_mut().zip(b) {
                    if !y.is_zero() {
                        *x -= &(&f * y);
                    }
                }
            }
        }
        if let Some(p) = w.iter().position(|x| !x.is_zero()) {
            let inv = w[p].inv().expect("nonzero");
            for x in w.iter_mut() {
                if !x.is_zero() {
                    *x = &*x * &inv;
                }
            }
            basis.push((p, w));
            chosen.push(idx);
        }
    }
    chosen
}

pub fn span_rank(vectors: &[Vec<CycScalar>]) -> usize {
    independent_subset(vectors).len()
}

impl Mul<&ExactMatrix> for &ExactMatrix {
    type Output = ExactMatrix;
    fn mul(self, rhs: &ExactMatrix) -> ExactMatrix {
        self.try_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let cells: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}
