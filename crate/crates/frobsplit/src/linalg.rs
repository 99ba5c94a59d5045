//! Dense exact linear algebra over F_p: row reduction, rank, null space.
//! System sizes here are tiny, so a plain Gaussian elimination is all we need.

use crate::field::PrimeField;

/// A dense matrix over F_p, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatFp {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl MatFp {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        MatFp {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn from_rows(field: PrimeField, rows: Vec<Vec<u64>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        let mut data = Vec::with_capacity(r * c);
        for row in &rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend_from_slice(row);
        }
        MatFp {
            field,
            rows: r,
            cols: c,
            data,
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.cols + j] = v % self.field.characteristic();
    }

    pub fn push_row(&mut self, row: &[u64]) {
        assert_eq!(row.len(), self.cols);
        self.data.extend_from_slice(row);
        self.rows += 1;
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let f = self.field;
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&i| self.get(i, col) != 0) else {
                continue;
            };
            // swap pivot row up
            for j in 0..self.cols {
                let a = self.get(row, j);
                let b = self.get(p, j);
                self.set(row, j, b);
                self.set(p, j, a);
            }
            let inv = f.inv(self.get(row, col));
            for j in 0..self.cols {
                let v = f.mul(self.get(row, j), inv);
                self.set(row, j, v);
            }
            for i in 0..self.rows {
                if i != row && self.get(i, col) != 0 {
                    let factor = self.get(i, col);
                    for j in 0..self.cols {
                        let v = f.sub(self.get(i, j), f.mul(factor, self.get(row, j)));
                        self.set(i, j, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// A basis of the right null space `{v : Av = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<u64>> {
        let f = self.field;
        let mut m = self.clone();
        let pivots = m.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &fc in &free {
            let mut v = vec![0u64; self.cols];
            v[fc] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(m.get(r, fc));
            }
            basis.push(v);
        }
        basis
    }

    /// Nullity = cols - rank.
    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    /// Is `v` in the row span?
    pub fn row_span_contains(&self, v: &[u64]) -> bool {
        assert_eq!(v.len(), self.cols);
        let mut m = self.clone();
        let r = m.rank();
        m.push_row(v);
        m.rank() == r
    }
}
