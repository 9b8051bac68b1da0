//! Dense matrices over an exact field, with row reduction, kernels and
//! solving.  Everything is immutable: operations return fresh matrices.

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Scalar>,
}

/// Result of row reduction: the reduced matrix, the pivot columns in order,
/// and the rank.
#[derive(Clone, Debug)]
pub struct Rref {
    pub reduced: Matrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

impl Matrix {
    pub fn zero(field: &FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &FieldSpec, n: usize) -> Self {
        let mut m = Self::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: &FieldSpec, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            data.extend(row);
        }
        let _ = field;
        Ok(Matrix { rows: r, cols: c, data })
    }

    pub fn from_columns(field: &FieldSpec, cols: Vec<Vec<Scalar>>) -> Result<Self> {
        let c = cols.len();
        let r = cols.first().map_or(0, |col| col.len());
        if cols.iter().any(|col| col.len() != r) {
            return Err(Error::DimensionMismatch("ragged columns".into()));
        }
        let mut m = Self::zero(field, r, c);
        for (j, col) in cols.into_iter().enumerate() {
            for (i, v) in col.into_iter().enumerate() {
                m.set(i, j, v);
            }
        }
        Ok(m)
    }

    pub fn from_fn(
        field: &FieldSpec,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Self {
        let mut m = Self::zero(field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self, field: &FieldSpec) -> Matrix {
        Matrix::from_fn(field, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn add(&self, field: &FieldSpec, other: &Matrix) -> Result<Matrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch("matrix add".into()));
        }
        Ok(Matrix::from_fn(field, self.rows, self.cols, |i, j| {
            field.add(self.get(i, j), other.get(i, j))
        }))
    }

    pub fn scale(&self, field: &FieldSpec, c: &Scalar) -> Matrix {
        Matrix::from_fn(field, self.rows, self.cols, |i, j| {
            field.mul(self.get(i, j), c)
        })
    }

    pub fn mul(&self, field: &FieldSpec, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zero(field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = field.add(out.get(i, j), &field.mul(a, b));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, field: &FieldSpec, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch("matrix-vector".into()));
        }
        let mut out = vec![field.zero(); self.rows];
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() || v[j].is_zero() {
                    continue;
                }
                out[i] = field.add(&out[i], &field.mul(a, &v[j]));
            }
        }
        Ok(out)
    }

    pub fn hstack(&self, field: &FieldSpec, other: &Matrix) -> Result<Matrix> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch("hstack".into()));
        }
        Ok(Matrix::from_fn(
            field,
            self.rows,
            self.cols + other.cols,
            |i, j| {
                if j < self.cols {
                    self.get(i, j).clone()
                } else {
                    other.get(i, j - self.cols).clone()
                }
            },
        ))
    }

    pub fn vstack(&self, field: &FieldSpec, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch("vstack".into()));
        }
        Ok(Matrix::from_fn(
            field,
            self.rows + other.rows,
            self.cols,
            |i, j| {
                if i < self.rows {
                    self.get(i, j).clone()
                } else {
                    other.get(i - self.rows, j).clone()
                }
            },
        ))
    }

    /// Reduced row echelon form with pivot bookkeeping.
    pub fn rref(&self, field: &FieldSpec) -> Rref {
        if let FieldSpec::Fp(p) = field {
            return self.rref_fp(*p);
        }
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pivot_row = 0usize;
        for col in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            // Search down the column for a nonzero entry.
            let Some(found) = (pivot_row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(pivot_row, found);
            let inv = field
                .inv(m.get(pivot_row, col))
                .expect("pivot is nonzero");
            for j in col..m.cols {
                let v = field.mul(m.get(pivot_row, j), &inv);
                m.set(pivot_row, j, v);
            }
            for r in 0..m.rows {
                if r == pivot_row || m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col).clone();
                for j in col..m.cols {
                    let v = field.sub(m.get(r, j), &field.mul(&factor, m.get(pivot_row, j)));
                    m.set(r, j, v);
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        let rank = pivots.len();
        Rref { reduced: m, pivots, rank }
    }

    /// Prime-field fast path: flat `u64` arithmetic.
    fn rref_fp(&self, p: u32) -> Rref {
        let p64 = p as u64;
        let mut a: Vec<u64> = self
            .data
            .iter()
            .map(|s| match s {
                Scalar::Fp(x) => *x,
                _ => panic!("rational scalar in F_p matrix"),
            })
            .collect();
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut pivot_row = 0usize;
        for col in 0..cols {
            if pivot_row == rows {
                break;
            }
            let Some(found) = (pivot_row..rows).find(|&r| a[r * cols + col] != 0) else {
                continue;
            };
            if found != pivot_row {
                for j in 0..cols {
                    a.swap(pivot_row * cols + j, found * cols + j);
                }
            }
            let inv = match FieldSpec::Fp(p).inv(&Scalar::Fp(a[pivot_row * cols + col])) {
                Ok(Scalar::Fp(x)) => x,
                _ => unreachable!(),
            };
            for j in col..cols {
                a[pivot_row * cols + j] = a[pivot_row * cols + j] * inv % p64;
            }
            for r in 0..rows {
                if r == pivot_row {
                    continue;
                }
                let factor = a[r * cols + col];
                if factor == 0 {
                    continue;
                }
                for j in col..cols {
                    let sub = factor * a[pivot_row * cols + j] % p64;
                    a[r * cols + j] = (a[r * cols + j] + p64 - sub) % p64;
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        let rank = pivots.len();
        let data = a.into_iter().map(Scalar::Fp).collect();
        Rref {
            reduced: Matrix { rows, cols, data },
            pivots,
            rank,
        }
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for col in 0..self.cols {
            self.data.swap(i * self.cols + col, j * self.cols + col);
        }
    }

    pub fn rank(&self, field: &FieldSpec) -> usize {
        self.rref(field).rank
    }

    /// Basis of the right null space `{v : Av = 0}`.
    pub fn kernel_basis(&self, field: &FieldSpec) -> Vec<Vec<Scalar>> {
        let Rref { reduced, pivots, .. } = self.rref(field);
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (row, &col) in pivots.iter().enumerate() {
                v[col] = Some(row);
            }
            v
        };
        let mut basis = Vec::new();
        for free_col in 0..self.cols {
            if pivot_set[free_col].is_some() {
                continue;
            }
            let mut vec = vec![field.zero(); self.cols];
            vec[free_col] = field.one();
            for (col, &pr) in pivot_set.iter().enumerate() {
                if let Some(row) = pr {
                    vec[col] = field.neg(reduced.get(row, free_col));
                }
            }
            basis.push(vec);
        }
        basis
    }

    /// One solution of `Ax = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, field: &FieldSpec, b: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch("solve rhs".into()));
        }
        let rhs = Matrix::from_columns(field, vec![b.to_vec()])?;
        Ok(self
            .solve_matrix(field, &rhs)?
            .map(|m| m.column(0)))
    }

    /// Solves `AX = B` column by column; `None` if any column is inconsistent.
    pub fn solve_matrix(&self, field: &FieldSpec, b: &Matrix) -> Result<Option<Matrix>> {
        if b.rows != self.rows {
            return Err(Error::DimensionMismatch("solve rhs".into()));
        }
        let aug = self.hstack(field, b)?;
        let Rref { reduced, pivots, .. } = aug.rref(field);
        // Any pivot in the appended block means inconsistency.
        if pivots.iter().any(|&c| c >= self.cols) {
            return Ok(None);
        }
        let mut x = Matrix::zero(field, self.cols, b.cols);
        for (row, &col) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(col, j, reduced.get(row, self.cols + j).clone());
            }
        }
        Ok(Some(x))
    }

    /// Indices `i` such that the unit vectors `e_i` extend the column span of
    /// `self` to all of the ambient space. Found by row reducing `[self | I]`:
    /// every pivot landing in the identity block names a missing direction.
    pub fn complete_column_span(&self, field: &FieldSpec) -> Vec<usize> {
        let aug = self
            .hstack(field, &Matrix::identity(field, self.rows))
            .expect("row counts agree");
        let Rref { pivots, .. } = aug.rref(field);
        pivots
            .iter()
            .filter(|&&c| c >= self.cols)
            .map(|&c| c - self.cols)
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f() -> FieldSpec {
        FieldSpec::default_prime()
    }

    fn m(field: &FieldSpec, rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            field,
            rows.iter()
                .map(|r| r.iter().map(|&x| field.from_i64(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn rref_ranks_and_pivots() {
        let field = f();
        let a = m(&field, &[&[1, 2, 3], &[2, 4, 6], &[1, 1, 1]]);
        let r = a.rref(&field);
        assert_eq!(r.rank, 2);
        assert_eq!(r.pivots, vec![0, 1]);
    }

    #[test]
    fn rref_identity_fixed_point() {
        let field = f();
        let a = Matrix::identity(&field, 4);
        let r = a.rref(&field);
        assert_eq!(r.reduced, a);
        assert_eq!(r.rank, 4);
    }

    #[test]
    fn kernel_is_annihilated() {
        let field = f();
        let a = m(&field, &[&[1, 2, 3], &[4, 5, 6]]);
        let ker = a.kernel_basis(&field);
        assert_eq!(ker.len(), 1);
        for v in &ker {
            let out = a.mul_vec(&field, v).unwrap();
            assert!(out.iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn kernel_of_injective_map_is_empty() {
        let field = f();
        let a = m(&field, &[&[1, 0], &[0, 1], &[1, 1]]);
        assert!(a.kernel_basis(&field).is_empty());
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let field = f();
        let a = m(&field, &[&[1, 1], &[0, 1]]);
        let b = vec![field.from_i64(3), field.from_i64(2)];
        let x = a.solve(&field, &b).unwrap().unwrap();
        assert_eq!(a.mul_vec(&field, &x).unwrap(), b);

        let sing = m(&field, &[&[1, 1], &[2, 2]]);
        let bad = vec![field.from_i64(1), field.from_i64(3)];
        assert!(sing.solve(&field, &bad).unwrap().is_none());
    }

    #[test]
    fn rational_rref_is_exact() {
        let field = FieldSpec::Q;
        let a = m(&field, &[&[2, 1], &[1, 3]]);
        let r = a.rref(&field);
        assert_eq!(r.rank, 2);
        assert_eq!(r.reduced, Matrix::identity(&field, 2));
        // 1/2 shows up internally; make sure exactness held.
        let ker = m(&field, &[&[1, 2], &[2, 4]]).kernel_basis(&field);
        assert_eq!(ker.len(), 1);
        assert_eq!(
            field.scalar_to_string(&ker[0][0]),
            "-2"
        );
    }

    #[test]
    fn zero_sized_matrices() {
        let field = f();
        let a = Matrix::zero(&field, 0, 3);
        let r = a.rref(&field);
        assert_eq!(r.rank, 0);
        assert_eq!(a.kernel_basis(&field).len(), 3);
        let b = Matrix::zero(&field, 3, 0);
        assert_eq!(b.rank(&field), 0);
        assert!(b.kernel_basis(&field).is_empty());
    }

    #[test]
    fn matrix_product() {
        let field = f();
        let a = m(&field, &[&[1, 2], &[3, 4]]);
        let b = m(&field, &[&[0, 1], &[1, 0]]);
        let ab = a.mul(&field, &b).unwrap();
        assert_eq!(ab, m(&field, &[&[2, 1], &[4, 3]]));
    }

    #[test]
    fn span_completion_names_missing_directions() {
        let field = f();
        // Columns span {e0 + e2, e2}; e1 is the only missing direction.
        let a = m(&field, &[&[1, 0], &[0, 0], &[1, 1]]);
        assert_eq!(a.complete_column_span(&field), vec![1]);
        // Full span needs nothing.
        let id = Matrix::identity(&field, 3);
        assert!(id.complete_column_span(&field).is_empty());
        // Empty span needs everything.
        let none = Matrix::zero(&field, 2, 0);
        assert_eq!(none.complete_column_span(&field), vec![0, 1]);
    }
}
