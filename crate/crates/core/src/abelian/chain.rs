use super::group::{subquotient, FgAbelianGroup};
use super::snf::smith_normal_form;
use super::AbelianError;
use crate::matrix::IntMatrix;

/// A bounded chain complex of free abelian groups
/// `ℤ^{n_top} → … → ℤ^{n_1} → ℤ^{n_0}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerChainComplex {
    ranks: Vec<usize>,
    /// `boundaries[p - 1]` is `∂_p`, of shape `n_{p-1} × n_p`.
    boundaries: Vec<IntMatrix>,
}

impl IntegerChainComplex {
    pub fn new(ranks: Vec<usize>, boundaries: Vec<IntMatrix>) -> Result<Self, AbelianError> {
        if ranks.is_empty() || boundaries.len() + 1 != ranks.len() {
            return Err(AbelianError::MalformedComplex(format!(
                "{} ranks need exactly {} boundary maps, got {}",
                ranks.len(),
                ranks.len().saturating_sub(1),
                boundaries.len()
            )));
        }
        for (k, b) in boundaries.iter().enumerate() {
            let expected = (ranks[k], ranks[k + 1]);
            if b.shape() != expected {
                return Err(AbelianError::MalformedComplex(format!(
                    "∂_{} has shape {:?}, expected {:?}",
                    k + 1,
                    b.shape(),
                    expected
                )));
            }
        }
        for k in 1..boundaries.len() {
            if !(&boundaries[k - 1] * &boundaries[k]).is_zero() {
                return Err(AbelianError::BoundaryNotNilpotent { degree: k + 1 });
            }
        }
        Ok(IntegerChainComplex { ranks, boundaries })
    }

    pub fn top_degree(&self) -> usize {
        self.ranks.len() - 1
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    /// `∂_p` for `1 ≤ p ≤ top`.
    pub fn boundary(&self, p: usize) -> Option<&IntMatrix> {
        p.checked_sub(1).and_then(|k| self.boundaries.get(k))
    }

    /// `H_p = ker ∂_p / im ∂_{p+1}` in canonical form.
    pub fn homology_at(&self, p: usize) -> Result<FgAbelianGroup, AbelianError> {
        if p > self.top_degree() {
            return Err(AbelianError::DegreeOutOfRange {
                degree: p,
                top: self.top_degree(),
            });
        }
        let n = self.ranks[p];
        let cycles = match self.boundary(p) {
            Some(b) => smith_normal_form(b).kernel_basis(),
            None => IntMatrix::identity(n),
        };
        let borders = match self.boundary(p + 1) {
            Some(b) => b.clone(),
            None => IntMatrix::zeros(n, 0),
        };
        Ok(subquotient(&cycles, &borders))
    }

    pub fn homology(&self) -> Vec<FgAbelianGroup> {
        (0..=self.top_degree())
            .map(|p| self.homology_at(p).expect("degree in range"))
            .collect()
    }
}

/// Free function form of [`IntegerChainComplex::homology_at`].
pub fn homology_at(complex: &IntegerChainComplex, p: usize) -> Result<FgAbelianGroup, AbelianError> {
    complex.homology_at(p)
}
