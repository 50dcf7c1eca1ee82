//! Smith normal form over ℤ with full transformation tracking.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::matrix::IntMatrix;

/// `left · input · right = diagonal`, with `left` and `right` unimodular.
///
/// The inverses of both transforms are tracked alongside them, so callers can
/// move between the original and the diagonalized bases without solving.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub left: IntMatrix,
    pub diagonal: IntMatrix,
    pub right: IntMatrix,
    left_inv: IntMatrix,
    right_inv: IntMatrix,
    rank: usize,
}

impl SmithForm {
    /// Number of nonzero diagonal entries.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// The nonzero diagonal entries `d₁ | d₂ | …`, all positive.
    pub fn nonzero_diagonal(&self) -> Vec<BigInt> {
        (0..self.rank).map(|i| self.diagonal[(i, i)].clone()).collect()
    }

    pub fn left_inverse(&self) -> &IntMatrix {
        &self.left_inv
    }

    pub fn right_inverse(&self) -> &IntMatrix {
        &self.right_inv
    }

    /// A ℤ-basis of the kernel of the input, as matrix columns.
    pub fn kernel_basis(&self) -> IntMatrix {
        self.right.select_columns(self.rank..self.right.cols())
    }
}

struct Reduction {
    a: IntMatrix,
    u: IntMatrix,
    u_inv: IntMatrix,
    v: IntMatrix,
    v_inv: IntMatrix,
}

impl Reduction {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        self.u.swap_rows(i, j);
        self.u_inv.swap_cols(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        self.v.swap_cols(i, j);
        self.v_inv.swap_rows(i, j);
    }

    /// row[target] += k * row[source]
    fn add_row(&mut self, target: usize, source: usize, k: &BigInt) {
        self.a.add_row_multiple(target, source, k);
        self.u.add_row_multiple(target, source, k);
        self.u_inv.add_col_multiple(source, target, &-k);
    }

    /// col[target] += k * col[source]
    fn add_col(&mut self, target: usize, source: usize, k: &BigInt) {
        self.a.add_col_multiple(target, source, k);
        self.v.add_col_multiple(target, source, k);
        self.v_inv.add_row_multiple(source, target, &-k);
    }

    fn negate_row(&mut self, i: usize) {
        self.a.negate_row(i);
        self.u.negate_row(i);
        self.u_inv.negate_col(i);
    }

    /// Position of the smallest nonzero |entry| in the trailing block.
    fn smallest_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<((usize, usize), BigInt)> = None;
        for i in t..self.a.rows() {
            for j in t..self.a.cols() {
                let x = &self.a[(i, j)];
                if x.is_zero() {
                    continue;
                }
                let abs = x.abs();
                if best.as_ref().map_or(true, |(_, b)| abs < *b) {
                    let done = abs.is_one();
                    best = Some(((i, j), abs));
                    if done {
                        return best.map(|(p, _)| p);
                    }
                }
            }
        }
        best.map(|(p, _)| p)
    }

    /// Clears row and column `t` using the pivot at `(t, t)`. Returns false if
    /// some remainder survived and a new pivot must be chosen.
    fn eliminate(&mut self, t: usize) -> bool {
        let mut clean = true;
        for i in t + 1..self.a.rows() {
            if self.a[(i, t)].is_zero() {
                continue;
            }
            let q = self.a[(i, t)].div_floor(&self.a[(t, t)]);
            self.add_row(i, t, &-q);
            clean &= self.a[(i, t)].is_zero();
        }
        for j in t + 1..self.a.cols() {
            if self.a[(t, j)].is_zero() {
                continue;
            }
            let q = self.a[(t, j)].div_floor(&self.a[(t, t)]);
            self.add_col(j, t, &-q);
            clean &= self.a[(t, j)].is_zero();
        }
        clean
    }

    fn indivisible_row(&self, t: usize) -> Option<usize> {
        let pivot = &self.a[(t, t)];
        (t + 1..self.a.rows()).find(|&i| (t + 1..self.a.cols()).any(|j| !self.a[(i, j)].is_multiple_of(pivot)))
    }
}

/// Computes the Smith normal form of `m` with smallest-absolute-value pivoting.
///
/// Total on all integer matrices, including empty shapes.
pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let (rows, cols) = m.shape();
    let mut r = Reduction {
        a: m.clone(),
        u: IntMatrix::identity(rows),
        u_inv: IntMatrix::identity(rows),
        v: IntMatrix::identity(cols),
        v_inv: IntMatrix::identity(cols),
    };

    let mut rank = 0;
    for t in 0..rows.min(cols) {
        while let Some((pi, pj)) = r.smallest_pivot(t) {
            r.swap_rows(t, pi);
            r.swap_cols(t, pj);
            if !r.eliminate(t) {
                continue;
            }
            match r.indivisible_row(t) {
                Some(i) => r.add_row(t, i, &BigInt::one()),
                None => break,
            }
        }
        if r.a[(t, t)].is_zero() {
            break;
        }
        if r.a[(t, t)].is_negative() {
            r.negate_row(t);
        }
        rank += 1;
    }

    SmithForm {
        left: r.u,
        diagonal: r.a,
        right: r.v,
        left_inv: r.u_inv,
        right_inv: r.v_inv,
        rank,
    }
}
