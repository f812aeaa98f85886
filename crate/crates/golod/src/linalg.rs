//! Dense exact linear algebra: Gaussian elimination with first-nonzero
//! pivoting, which keeps every result deterministic.

use crate::field::Field;

/// A dense row-major matrix over a field context.
#[derive(Clone, Debug)]
pub struct Matrix<F: Field> {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Vec<F::Elem>>,
}

impl<F: Field> Matrix<F> {
    pub fn zero(field: &F, rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: (0..rows).map(|_| vec![field.zero(); cols]).collect(),
        }
    }

    pub fn apply(&self, field: &F, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(v.len(), self.cols);
        self.data
            .iter()
            .map(|row| {
                let mut acc = field.zero();
                for (a, b) in row.iter().zip(v) {
                    acc = field.add(&acc, &field.mul(a, b));
                }
                acc
            })
            .collect()
    }

    pub fn rank(&self, field: &F) -> usize {
        let mut ech = Echelon::new(field.clone(), self.cols);
        for row in &self.data {
            ech.insert(row.clone());
        }
        ech.rank()
    }

    /// Basis of the null space (vectors v with Mv = 0), deterministic.
    pub fn kernel_basis(&self, field: &F) -> Vec<Vec<F::Elem>> {
        // reduce the matrix to row echelon form, tracking pivot columns
        let mut m = self.data.clone();
        let mut pivot_cols = Vec::new();
        let mut r = 0usize;
        for c in 0..self.cols {
            let Some(pr) = (r..self.rows).find(|&i| !field.is_zero(&m[i][c])) else {
                continue;
            };
            m.swap(r, pr);
            let inv = field.inv(&m[r][c]);
            for j in c..self.cols {
                m[r][j] = field.mul(&m[r][j], &inv);
            }
            for i in 0..self.rows {
                if i != r && !field.is_zero(&m[i][c]) {
                    let factor = m[i][c].clone();
                    for j in c..self.cols {
                        let t = field.mul(&factor, &m[r][j]);
                        m[i][j] = field.sub(&m[i][j], &t);
                    }
                }
            }
            pivot_cols.push(c);
            r += 1;
            if r == self.rows {
                break;
            }
        }
        let free_cols: Vec<usize> =
            (0..self.cols).filter(|c| !pivot_cols.contains(c)).collect();
        let mut basis = Vec::new();
        for &fc in &free_cols {
            let mut v = vec![field.zero(); self.cols];
            v[fc] = field.one();
            for (row, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = field.neg(&m[row][fc]);
            }
            basis.push(v);
        }
        basis
    }

    /// Solves Mx = b exactly, returning any solution or None.
    pub fn solve(&self, field: &F, b: &[F::Elem]) -> Option<Vec<F::Elem>> {
        assert_eq!(b.len(), self.rows);
        // eliminate on the augmented matrix
        let mut m: Vec<Vec<F::Elem>> = self
            .data
            .iter()
            .zip(b)
            .map(|(row, rhs)| {
                let mut r = row.clone();
                r.push(rhs.clone());
                r
            })
            .collect();
        let mut pivot_cols = Vec::new();
        let mut r = 0usize;
        for c in 0..self.cols {
            let Some(pr) = (r..self.rows).find(|&i| !field.is_zero(&m[i][c])) else {
                continue;
            };
            m.swap(r, pr);
            let inv = field.inv(&m[r][c]);
            for j in c..=self.cols {
                m[r][j] = field.mul(&m[r][j], &inv);
            }
            for i in 0..self.rows {
                if i != r && !field.is_zero(&m[i][c]) {
                    let factor = m[i][c].clone();
                    for j in c..=self.cols {
                        let t = field.mul(&factor, &m[r][j]);
                        m[i][j] = field.sub(&m[i][j], &t);
                    }
                }
            }
            pivot_cols.push(c);
            r += 1;
            if r == self.rows {
                break;
            }
        }
        // inconsistent iff a zero row has nonzero rhs
        for i in r..self.rows {
            if !field.is_zero(&m[i][self.cols]) {
                return None;
            }
        }
        let mut x = vec![field.zero(); self.cols];
        for (row, &pc) in pivot_cols.iter().enumerate() {
            x[pc] = m[row][self.cols].clone();
        }
        Some(x)
    }
}

/// Incremental row-echelon accumulator. Feeding it vectors reports which
/// ones are independent of everything inserted so far.
pub struct Echelon<F: Field> {
    field: F,
    cols: usize,
    /// rows normalized to leading coefficient 1, keyed by pivot column
    rows: Vec<(usize, Vec<F::Elem>)>,
}

impl<F: Field> Echelon<F> {
    pub fn new(field: F, cols: usize) -> Self {
        Echelon {
            field,
            cols,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the stored rows; the residual is zero iff `v`
    /// is in their span.
    pub fn reduce(&self, mut v: Vec<F::Elem>) -> Vec<F::Elem> {
        assert_eq!(v.len(), self.cols);
        for (pivot, row) in &self.rows {
            if !self.field.is_zero(&v[*pivot]) {
                let factor = v[*pivot].clone();
                for j in *pivot..self.cols {
                    let t = self.field.mul(&factor, &row[j]);
                    v[j] = self.field.sub(&v[j], &t);
                }
            }
        }
        v
    }

    /// Inserts `v`; returns true iff it was independent (rank grew).
    pub fn insert(&mut self, v: Vec<F::Elem>) -> bool {
        let mut v = self.reduce(v);
        let Some(pivot) = v.iter().position(|e| !self.field.is_zero(e)) else {
            return false;
        };
        let inv = self.field.inv(&v[pivot]);
        for e in v.iter_mut().skip(pivot) {
            *e = self.field.mul(e, &inv);
        }
        self.rows.push((pivot, v));
        self.rows.sort_by_key(|(p, _)| *p);
        true
    }
}
