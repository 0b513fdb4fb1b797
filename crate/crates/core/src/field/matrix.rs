use std::fmt;

use super::scalar::FieldScalar;
use crate::error::{Error, Result};

/// Dense matrix over `FieldScalar`, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<FieldScalar>,
}

/// Reduced row echelon form: nonzero rows and their pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon {
    pub rows: Vec<Vec<FieldScalar>>,
    pub pivots: Vec<usize>,
    pub cols: usize,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![FieldScalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, FieldScalar::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<FieldScalar>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(Error::Ragged { row: i, len: r.len(), expected: cols });
            }
        }
        let n = rows.len();
        Ok(Self { rows: n, cols, data: rows.into_iter().flatten().collect() })
    }

    /// Columns given as vectors.
    pub fn from_columns(cols: &[Vec<FieldScalar>]) -> Result<Self> {
        Ok(Self::from_rows(cols.to_vec())?.transpose())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &FieldScalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: FieldScalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[FieldScalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<FieldScalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
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

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        let v = out.get(r, c) + &(a * b);
                        out.set(r, c, v);
                    }
                }
            }
        }
        Ok(out)
    }

    /// `self * v` for a column vector `v`.
    pub fn apply(&self, v: &[FieldScalar]) -> Vec<FieldScalar> {
        assert_eq!(v.len(), self.cols, "vector length must match column count");
        (0..self.rows).map(|r| dot(self.row(r), v)).collect()
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| if r == c { self.get(r, c).is_one() } else { self.get(r, c).is_zero() })
            })
    }

    pub fn echelon(&self) -> Echelon {
        rref(self.to_rows(), self.cols)
    }

    pub fn rank(&self) -> usize {
        self.echelon().rows.len()
    }

    /// Basis of `{ x : self * x = 0 }` as rows.
    pub fn nullspace(&self) -> Vec<Vec<FieldScalar>> {
        self.echelon().nullspace()
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Matrix::zeros(0, 0));
        }
        let augmented: Vec<Vec<FieldScalar>> = (0..n)
            .map(|r| {
                let mut row = self.row(r).to_vec();
                row.extend((0..n).map(|c| if c == r { FieldScalar::one() } else { FieldScalar::zero() }));
                row
            })
            .collect();
        let e = rref(augmented, 2 * n);
        if e.pivots.len() < n || e.pivots[n - 1] >= n {
            return Err(Error::SingularMatrix);
        }
        Matrix::from_rows(e.rows.into_iter().map(|r| r[n..].to_vec()).collect())
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.rows)
            .map(|r| self.row(r).iter().map(ToString::to_string).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "[{}]", rows.join("; "))
    }
}

pub fn dot(a: &[FieldScalar], b: &[FieldScalar]) -> FieldScalar {
    a.iter().zip(b).filter(|(x, y)| !x.is_zero() && !y.is_zero()).fold(FieldScalar::zero(), |acc, (x, y)| acc + x * y)
}

/// Exact RREF: leftmost column first, first nonzero row as pivot, leading entries 1.
pub fn rref(mut rows: Vec<Vec<FieldScalar>>, cols: usize) -> Echelon {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inverse().expect("pivot is nonzero");
        if !inv.is_one() {
            for x in rows[r].iter_mut().skip(c) {
                if !x.is_zero() {
                    *x = &*x * &inv;
                }
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(c) {
                if !p.is_zero() {
                    *x = &*x - &(&factor * p);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    Echelon { rows, pivots, cols }
}

impl Echelon {
    /// Solutions of the homogeneous system whose coefficient rows are `self.rows`.
    pub fn nullspace(&self) -> Vec<Vec<FieldScalar>> {
        let free = (0..self.cols).filter(|c| !self.pivots.contains(c));
        free.map(|f| {
            let mut v = vec![FieldScalar::zero(); self.cols];
            v[f] = FieldScalar::one();
            for (row, &p) in self.rows.iter().zip(&self.pivots) {
                v[p] = -&row[f];
            }
            v
        })
        .collect()
    }
}
