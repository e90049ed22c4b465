//! Dense elimination over `F_p` on raw `u64` residues.
//!
//! Row updates are accumulated without reduction while the sum provably
//! fits in a `u64`, which keeps the inner loop to a multiply-add.

use crate::arith::prime::{inv_mod, mul_mod};

/// A dense row-major matrix of residues modulo `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModpMatrix {
    p: u64,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl ModpMatrix {
    pub fn zeros(p: u64, rows: usize, cols: usize) -> Self {
        Self { p, rows, cols, data: vec![0; rows * cols] }
    }

    /// Entries must already be reduced.
    pub fn from_data(p: u64, rows: usize, cols: usize, data: Vec<u64>) -> Self {
        assert_eq!(data.len(), rows * cols);
        debug_assert!(data.iter().all(|&v| v < p));
        Self { p, rows, cols, data }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.cols + j] = v % self.p;
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// Rank; the matrix itself is left untouched.
    pub fn rank(&self) -> usize {
        self.clone().echelonize(false).len()
    }

    /// Reduced row echelon form in place, returning the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        self.echelonize(true)
    }

    /// Basis of the right kernel, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vec<u64>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let p = self.p;
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut out = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0u64; self.cols];
            v[free] = 1;
            for (r, &c) in pivots.iter().enumerate() {
                let a = m.get(r, free);
                v[c] = if a == 0 { 0 } else { p - a };
            }
            out.push(v);
        }
        out
    }

    fn echelonize(&mut self, full: bool) -> Vec<usize> {
        let (p, cols) = (self.p, self.cols);
        let pm1 = (p - 1) as u128;
        // number of unreduced `a + f*b` updates a row can absorb
        let limit = ((u64::MAX as u128 - pm1) / (pm1 * pm1).max(1)).min(u32::MAX as u128) as u32;
        // beyond 32-bit moduli a single product may overflow
        let wide = limit == 0;
        let mut pending = vec![0u32; self.rows];
        let mut pivots = Vec::new();
        let mut rank = 0;
        for c in 0..cols {
            if rank == self.rows {
                break;
            }
            let mut found = None;
            for r in rank..self.rows {
                let v = &mut self.data[r * cols + c];
                *v %= p;
                if *v != 0 {
                    found = Some(r);
                    break;
                }
            }
            let Some(r) = found else { continue };
            if r != rank {
                for j in c..cols {
                    self.data.swap(r * cols + j, rank * cols + j);
                }
                pending.swap(r, rank);
            }
            let (before, rest) = self.data.split_at_mut(rank * cols);
            let (prow, after) = rest.split_at_mut(cols);
            let inv = inv_mod(prow[c] % p, p).expect("nonzero pivot");
            for v in prow[c..].iter_mut() {
                *v = mul_mod(*v % p, inv, p);
            }
            pending[rank] = 0;
            let prow = &prow[..];
            let eliminate = |row: &mut [u64], count: &mut u32| {
                let a = row[c] % p;
                if a == 0 {
                    row[c] = 0;
                    return;
                }
                if *count >= limit {
                    for v in row[c..].iter_mut() {
                        *v %= p;
                    }
                    *count = 0;
                }
                let f = p - a;
                if wide {
                    for (x, &y) in row[c..].iter_mut().zip(&prow[c..]) {
                        *x = ((*x % p) as u128 + mul_mod(f, y, p) as u128).rem_euclid(p as u128) as u64;
                    }
                } else {
                    for (x, &y) in row[c..].iter_mut().zip(&prow[c..]) {
                        *x += f * y;
                    }
                }
                row[c] = 0;
                *count += 1;
            };
            for (k, row) in after.chunks_exact_mut(cols).enumerate() {
                eliminate(row, &mut pending[rank + 1 + k]);
            }
            if full {
                for (k, row) in before.chunks_exact_mut(cols).enumerate() {
                    eliminate(row, &mut pending[k]);
                }
            }
            pivots.push(c);
            rank += 1;
        }
        for v in self.data.iter_mut() {
            *v %= p;
        }
        pivots
    }
}
