//! Exact Gaussian elimination over scalars.

use crate::scalars::{Scalar, ScalarField};

/// Dense matrix stored by rows.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Vec<Scalar>>,
}

impl Matrix {
    pub fn zeros(field: &ScalarField, rows: usize, cols: usize) -> Matrix {
        Matrix {
            rows,
            cols,
            data: vec![vec![field.zero(); cols]; rows],
        }
    }

    pub fn identity(field: &ScalarField, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i][i] = field.one();
        }
        m
    }

    /// `{"rows", "cols", "entries"}` with entries as canonical scalar strings by row.
    pub fn to_json(&self) -> serde_json::Value {
        let entries: Vec<Vec<String>> = self
            .data
            .iter()
            .map(|r| r.iter().map(|c| c.to_string()).collect())
            .collect();
        serde_json::json!({"rows": self.rows, "cols": self.cols, "entries": entries})
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i][j] = v;
    }

    pub fn transpose(&self) -> Matrix {
        let data = (0..self.cols)
            .map(|j| (0..self.rows).map(|i| self.data[i][j].clone()).collect())
            .collect();
        Matrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn mul(&self, o: &Matrix) -> Matrix {
        assert_eq!(self.cols, o.rows, "shape mismatch");
        let field = self.field_of().or_else(|| o.field_of());
        let mut out: Vec<Vec<Option<Scalar>>> = vec![vec![None; o.cols]; self.rows];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = &o.data[k][j];
                    if b.is_zero() {
                        continue;
                    }
                    let p = a * b;
                    let slot = &mut out[i][j];
                    *slot = Some(match slot.take() {
                        Some(s) => s + p,
                        None => p,
                    });
                }
            }
        }
        let zero = field.map(|f| f.zero());
        let data = out
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|v| v.unwrap_or_else(|| zero.clone().expect("nonempty matrix")))
                    .collect()
            })
            .collect();
        Matrix {
            rows: self.rows,
            cols: o.cols,
            data,
        }
    }

    fn field_of(&self) -> Option<ScalarField> {
        self.data.first().and_then(|r| r.first()).map(|s| s.field().clone())
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.data[i][c].is_zero()) else {
                continue;
            };
            self.data.swap(r, p);
            let inv = self.data[r][c].inv().expect("nonzero pivot");
            for j in c..self.cols {
                let v = &self.data[r][j] * &inv;
                self.data[r][j] = v;
            }
            for i in 0..self.rows {
                if i == r || self.data[i][c].is_zero() {
                    continue;
                }
                let f = self.data[i][c].clone();
                for j in c..self.cols {
                    if self.data[r][j].is_zero() {
                        continue;
                    }
                    let v = &self.data[i][j] - &(&f * &self.data[r][j]);
                    self.data[i][j] = v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// A nonzero vector `v` with `self·v = 0`, if one exists.
    pub fn kernel_vector(&self) -> Option<Vec<Scalar>> {
        let field = self.field_of()?;
        let mut m = self.clone();
        let pivots = m.rref();
        let free = (0..self.cols).find(|c| !pivots.contains(c))?;
        let mut v = vec![field.zero(); self.cols];
        v[free] = field.one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -&m.data[row][free];
        }
        Some(v)
    }

    /// Kronecker product; index `(i, k)` of the factors becomes `i·rows(o) + k`.
    pub fn kron(&self, o: &Matrix) -> Matrix {
        let zero = self.get(0, 0).field().zero();
        let mut m = Matrix {
            rows: self.rows * o.rows,
            cols: self.cols * o.cols,
            data: vec![vec![zero; self.cols * o.cols]; self.rows * o.rows],
        };
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self.data[i][j];
                if a.is_zero() {
                    continue;
                }
                for k in 0..o.rows {
                    for l in 0..o.cols {
                        let b = &o.data[k][l];
                        if !b.is_zero() {
                            m.data[i * o.rows + k][j * o.cols + l] = a * b;
                        }
                    }
                }
            }
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| r.iter().all(Scalar::is_zero))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_kernel() {
        let f = ScalarField::rational(&["t"]);
        let s = |x: &str| f.parse(x).unwrap();
        let m = Matrix {
            rows: 2,
            cols: 3,
            data: vec![vec![s("1"), s("t"), s("t^2")], vec![s("t"), s("t^2"), s("t^3")]],
        };
        assert_eq!(m.rank(), 1);
        let v = m.kernel_vector().unwrap();
        let col = Matrix {
            rows: 3,
            cols: 1,
            data: v.into_iter().map(|x| vec![x]).collect(),
        };
        assert!(m.mul(&col).is_zero());
        assert_eq!(Matrix::identity(&f, 3).rank(), 3);
        assert!(Matrix::identity(&f, 3).kernel_vector().is_none());
    }
}
