use std::fmt;

use crate::arith::Field;

use super::{LinalgError, ModpMatrix};

/// A dense row-major matrix over a field.
#[derive(Clone, PartialEq)]
pub struct DenseMatrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> DenseMatrix<F> {
    pub fn zeros(field: &F, rows: usize, cols: usize) -> Self {
        Self { field: field.clone(), rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_data(field: &F, rows: usize, cols: usize, data: Vec<F::Elem>) -> Result<Self, LinalgError> {
        if data.len() != rows * cols {
            return Err(LinalgError::Shape(format!("{} entries for a {rows}x{cols} matrix", data.len())));
        }
        Ok(Self { field: field.clone(), rows, cols, data })
    }

    pub fn from_rows(field: &F, rows: Vec<Vec<F::Elem>>) -> Result<Self, LinalgError> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(LinalgError::Shape("ragged rows".into()));
        }
        let n = rows.len();
        Self::from_data(field, n, cols, rows.into_iter().flatten().collect())
    }

    pub fn from_i64_rows(field: &F, rows: &[&[i64]]) -> Result<Self, LinalgError> {
        let rows = rows.iter().map(|r| r.iter().map(|&v| field.from_i64(v)).collect()).collect();
        Self::from_rows(field, rows)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F::Elem {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F::Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F::Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[F::Elem] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        Self { field: self.field.clone(), rows: self.cols, cols: self.rows, data }
    }

    pub fn mul_vec(&self, v: &[F::Elem]) -> Result<Vec<F::Elem>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::Shape(format!("vector of length {} for {} columns", v.len(), self.cols)));
        }
        let f = &self.field;
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !f.is_zero(a) && !f.is_zero(b))
                    .fold(f.zero(), |acc, (a, b)| f.add(&acc, &f.mul(a, b)))
            })
            .collect())
    }

    /// Entry-wise image in another field.
    pub fn map<G: Field, E>(
        &self,
        target: &G,
        mut map: impl FnMut(&F::Elem) -> Result<G::Elem, E>,
    ) -> Result<DenseMatrix<G>, E> {
        let data = self.data.iter().map(&mut map).collect::<Result<Vec<_>, E>>()?;
        Ok(DenseMatrix { field: target.clone(), rows: self.rows, cols: self.cols, data })
    }

    fn as_modp(&self) -> Option<ModpMatrix> {
        let p = self.field.prime_modulus()?;
        let data = self.data.iter().map(|a| self.field.to_residue(a)).collect::<Option<Vec<_>>>()?;
        Some(ModpMatrix::from_data(p, self.rows, self.cols, data))
    }

    /// Reduced row echelon form and pivot columns. Pivots are the first
    /// nonzero entry in column order; no randomization.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        if let Some(mut m) = self.as_modp() {
            let pivots = m.rref();
            let data = (0..self.rows * self.cols)
                .map(|k| self.field.from_residue(m.get(k / self.cols, k % self.cols)))
                .collect();
            let out = Self { field: self.field.clone(), rows: self.rows, cols: self.cols, data };
            return (out, pivots);
        }
        let mut m = self.clone();
        let pivots = m.eliminate(true);
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        if let Some(m) = self.as_modp() {
            return m.rank();
        }
        self.clone().eliminate(false).len()
    }

    /// A basis of the right kernel: one vector per non-pivot column, with a
    /// one in that column.
    pub fn kernel_basis(&self) -> Vec<Vec<F::Elem>> {
        let f = &self.field;
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![f.zero(); self.cols];
                v[free] = f.one();
                for (i, &c) in pivots.iter().enumerate() {
                    v[c] = f.neg(r.get(i, free));
                }
                v
            })
            .collect()
    }

    fn eliminate(&mut self, full: bool) -> Vec<usize> {
        let (cols, f) = (self.cols, self.field.clone());
        let mut pivots = Vec::new();
        let mut rank = 0;
        for c in 0..cols {
            if rank == self.rows {
                break;
            }
            let Some(r) = (rank..self.rows).find(|&r| !f.is_zero(self.get(r, c))) else { continue };
            if r != rank {
                for j in 0..cols {
                    self.data.swap(r * cols + j, rank * cols + j);
                }
            }
            let inv = f.inv(self.get(rank, c)).expect("nonzero pivot");
            for j in c..cols {
                let v = self.get(rank, j);
                if !f.is_zero(v) {
                    let w = f.mul(v, &inv);
                    self.set(rank, j, w);
                }
            }
            let prow: Vec<(usize, F::Elem)> =
                (c..cols).filter(|&j| !f.is_zero(self.get(rank, j))).map(|j| (j, self.get(rank, j).clone())).collect();
            let targets: Box<dyn Iterator<Item = usize>> =
                if full { Box::new((0..self.rows).filter(|&i| i != rank)) } else { Box::new(rank + 1..self.rows) };
            for i in targets {
                let a = self.get(i, c).clone();
                if f.is_zero(&a) {
                    continue;
                }
                for (j, pv) in &prow {
                    let v = f.sub(self.get(i, *j), &f.mul(&a, pv));
                    self.set(i, *j, v);
                }
            }
            pivots.push(c);
            rank += 1;
        }
        pivots
    }
}

impl<F: Field> fmt::Debug for DenseMatrix<F> {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(fm, "DenseMatrix {}x{} over {}", self.rows, self.cols, self.field.descriptor())?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|a| self.field.format_elem(a)).collect();
            writeln!(fm, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}
