use std::fmt;

use super::LatticeError;

/// Dense exact-integer matrix, row-major. All arithmetic is checked.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> IntegerMatrix {
        IntegerMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> IntegerMatrix {
        let mut m = IntegerMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<IntegerMatrix, LatticeError> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(LatticeError::DimensionMismatch);
        }
        Ok(IntegerMatrix {
            rows: rows.len(),
            cols,
            data: rows.concat(),
        })
    }

    /// Matrix with `rows` rows and `cols` columns; `rows == 0` is allowed
    /// unlike [`IntegerMatrix::from_rows`], which infers the width.
    pub fn from_row_vectors(cols: usize, rows: &[Vec<i64>]) -> Result<IntegerMatrix, LatticeError> {
        if rows.iter().any(|r| r.len() != cols) {
            return Err(LatticeError::DimensionMismatch);
        }
        Ok(IntegerMatrix {
            rows: rows.len(),
            cols,
            data: rows.concat(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[i64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> IntegerMatrix {
        let mut t = IntegerMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn checked_mul(&self, other: &IntegerMatrix) -> Result<IntegerMatrix, LatticeError> {
        if self.cols != other.rows {
            return Err(LatticeError::DimensionMismatch);
        }
        let mut out = IntegerMatrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc: i64 = 0;
                for k in 0..self.cols {
                    let term = self
                        .get(r, k)
                        .checked_mul(other.get(k, c))
                        .ok_or(LatticeError::Overflow)?;
                    acc = acc.checked_add(term).ok_or(LatticeError::Overflow)?;
                }
                out.set(r, c, acc);
            }
        }
        Ok(out)
    }

    /// `self · v` for a column vector `v`.
    pub fn apply(&self, v: &[i64]) -> Result<Vec<i64>, LatticeError> {
        if v.len() != self.cols {
            return Err(LatticeError::DimensionMismatch);
        }
        (0..self.rows)
            .map(|r| {
                self.row(r).iter().zip(v).try_fold(0i64, |acc, (&a, &b)| {
                    a.checked_mul(b)
                        .and_then(|t| acc.checked_add(t))
                        .ok_or(LatticeError::Overflow)
                })
            })
            .collect()
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<i64, LatticeError> {
        if self.rows != self.cols {
            return Err(LatticeError::DimensionMismatch);
        }
        let n = self.rows;
        if n == 0 {
            return Ok(1);
        }
        let mut a: Vec<Vec<i128>> = (0..n)
            .map(|r| self.row(r).iter().map(|&x| i128::from(x)).collect())
            .collect();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..n - 1 {
            if a[k][k] == 0 {
                match (k + 1..n).find(|&r| a[r][k] != 0) {
                    Some(r) => {
                        a.swap(k, r);
                        sign = -sign;
                    }
                    None => return Ok(0),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = a[i][j]
                        .checked_mul(a[k][k])
                        .and_then(|x| a[i][k].checked_mul(a[k][j]).and_then(|y| x.checked_sub(y)))
                        .ok_or(LatticeError::Overflow)?;
                    a[i][j] = num / prev;
                }
            }
            prev = a[k][k];
        }
        i64::try_from(sign * a[n - 1][n - 1]).map_err(|_| LatticeError::Overflow)
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    /// `row[target] -= factor * row[source]`.
    pub(crate) fn sub_row_multiple(
        &mut self,
        target: usize,
        source: usize,
        factor: i64,
    ) -> Result<(), LatticeError> {
        if factor == 0 {
            return Ok(());
        }
        for c in 0..self.cols {
            let v = self
                .get(source, c)
                .checked_mul(factor)
                .and_then(|x| self.get(target, c).checked_sub(x))
                .ok_or(LatticeError::Overflow)?;
            self.set(target, c, v);
        }
        Ok(())
    }

    /// `col[target] -= factor * col[source]`.
    pub(crate) fn sub_col_multiple(
        &mut self,
        target: usize,
        source: usize,
        factor: i64,
    ) -> Result<(), LatticeError> {
        if factor == 0 {
            return Ok(());
        }
        for r in 0..self.rows {
            let v = self
                .get(r, source)
                .checked_mul(factor)
                .and_then(|x| self.get(r, target).checked_sub(x))
                .ok_or(LatticeError::Overflow)?;
            self.set(r, target, v);
        }
        Ok(())
    }

    pub(crate) fn negate_row(&mut self, r: usize) -> Result<(), LatticeError> {
        for c in 0..self.cols {
            let v = self.get(r, c).checked_neg().ok_or(LatticeError::Overflow)?;
            self.set(r, c, v);
        }
        Ok(())
    }
}

impl fmt::Display for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let cells: Vec<String> = self.row(r).iter().map(i64::to_string).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}
