//! Dense linear algebra over F₂ with bit-packed rows.

use std::fmt;

use num_integer::Integer;

use crate::matrix::IntMatrix;

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct F2Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<u64>>,
}

impl F2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        F2Matrix {
            rows,
            cols,
            data: vec![vec![0; cols.div_ceil(WORD)]; rows],
        }
    }

    /// Reduces an integer matrix modulo 2.
    pub fn from_int(m: &IntMatrix) -> Self {
        let mut out = Self::zeros(m.rows(), m.cols());
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                if m[(i, j)].is_odd() {
                    out.set(i, j, true);
                }
            }
        }
        out
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.data[i][j / WORD] >> (j % WORD) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, bit: bool) {
        let mask = 1u64 << (j % WORD);
        if bit {
            self.data[i][j / WORD] |= mask;
        } else {
            self.data[i][j / WORD] &= !mask;
        }
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self.get(i, j) {
                    t.set(j, i, true);
                }
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[bool]) -> Vec<bool> {
        assert_eq!(v.len(), self.cols, "F₂ matrix-vector shape mismatch");
        (0..self.rows)
            .map(|i| (0..self.cols).filter(|&j| v[j] && self.get(i, j)).count() % 2 == 1)
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.clone().eliminate(None).0
    }

    /// Some `x` with `self · x = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &[bool]) -> Option<Vec<bool>> {
        assert_eq!(b.len(), self.rows, "F₂ right-hand side length mismatch");
        let mut rhs = b.to_vec();
        let (rank, pivots, reduced) = {
            let mut m = self.clone();
            let (rank, pivots) = m.eliminate(Some(&mut rhs));
            (rank, pivots, m)
        };
        if rhs[rank..].iter().any(|&x| x) {
            return None;
        }
        // Reduced row echelon form: each pivot row determines its pivot variable.
        let mut x = vec![false; self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            debug_assert!(reduced.get(r, c));
            x[c] = rhs[r];
        }
        Some(x)
    }

    /// Gauss–Jordan elimination in place, applying the same row operations to
    /// `rhs`. Returns the rank and pivot columns.
    fn eliminate(&mut self, mut rhs: Option<&mut Vec<bool>>) -> (usize, Vec<usize>) {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| self.get(i, c)) else {
                continue;
            };
            self.data.swap(r, p);
            if let Some(b) = rhs.as_deref_mut() {
                b.swap(r, p);
            }
            for i in 0..self.rows {
                if i != r && self.get(i, c) {
                    let (src, dst) = if i < r {
                        let (lo, hi) = self.data.split_at_mut(r);
                        (&hi[0], &mut lo[i])
                    } else {
                        let (lo, hi) = self.data.split_at_mut(i);
                        (&lo[r], &mut hi[0])
                    };
                    for (d, s) in dst.iter_mut().zip(src) {
                        *d ^= s;
                    }
                    if let Some(b) = rhs.as_deref_mut() {
                        b[i] ^= b[r];
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (r, pivots)
    }
}

impl fmt::Debug for F2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "F2Matrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let line: String = (0..self.cols).map(|j| if self.get(i, j) { '1' } else { '0' }).collect();
            writeln!(f, "  {line}")?;
        }
        Ok(())
    }
}
