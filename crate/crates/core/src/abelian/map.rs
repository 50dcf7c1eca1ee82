use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::group::{cokernel, subquotient, FgAbelianGroup};
use super::snf::smith_normal_form;
use super::AbelianError;
use crate::matrix::IntMatrix;

/// A homomorphism between two groups in canonical form, given by its action on
/// canonical generators (one column per source generator).
///
/// Entries in torsion rows are kept reduced into `[0, d)`, so matrix equality
/// is map equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupMap {
    source: FgAbelianGroup,
    target: FgAbelianGroup,
    matrix: IntMatrix,
}

impl GroupMap {
    pub fn new(source: FgAbelianGroup, target: FgAbelianGroup, matrix: IntMatrix) -> Result<Self, AbelianError> {
        let expected = (target.num_generators(), source.num_generators());
        if matrix.shape() != expected {
            return Err(AbelianError::ShapeMismatch {
                expected,
                found: matrix.shape(),
            });
        }
        let source_orders = source.generator_orders();
        let target_orders = target.generator_orders();
        for (j, m) in source_orders.iter().enumerate() {
            if m.is_zero() {
                continue;
            }
            for (i, d) in target_orders.iter().enumerate() {
                let image = &matrix[(i, j)] * m;
                let ok = if d.is_zero() {
                    image.is_zero()
                } else {
                    image.is_multiple_of(d)
                };
                if !ok {
                    return Err(AbelianError::NotWellDefined { generator: j, row: i });
                }
            }
        }
        let mut map = GroupMap { source, target, matrix };
        map.reduce();
        Ok(map)
    }

    pub fn zero(source: FgAbelianGroup, target: FgAbelianGroup) -> Self {
        let matrix = IntMatrix::zeros(target.num_generators(), source.num_generators());
        GroupMap { source, target, matrix }
    }

    pub fn identity(group: FgAbelianGroup) -> Self {
        let matrix = IntMatrix::identity(group.num_generators());
        let mut map = GroupMap {
            source: group.clone(),
            target: group,
            matrix,
        };
        map.reduce();
        map
    }

    fn reduce(&mut self) {
        for (i, d) in self.target.generator_orders().iter().enumerate() {
            if d.is_zero() {
                continue;
            }
            for j in 0..self.matrix.cols() {
                let v = self.matrix[(i, j)].mod_floor(d);
                self.matrix[(i, j)] = v;
            }
        }
    }

    pub fn source(&self) -> &FgAbelianGroup {
        &self.source
    }

    pub fn target(&self) -> &FgAbelianGroup {
        &self.target
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &GroupMap) -> Result<GroupMap, AbelianError> {
        if inner.target != self.source {
            return Err(AbelianError::NotComposable);
        }
        let mut map = GroupMap {
            source: inner.source.clone(),
            target: self.target.clone(),
            matrix: &self.matrix * &inner.matrix,
        };
        map.reduce();
        Ok(map)
    }

    pub fn is_endomorphism(&self) -> bool {
        self.source == self.target
    }

    pub fn is_identity(&self) -> bool {
        self.is_endomorphism() && *self == GroupMap::identity(self.source.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    /// `self − id`.
    pub fn subtract_identity(&self) -> Result<GroupMap, AbelianError> {
        if !self.is_endomorphism() {
            return Err(AbelianError::NotEndomorphism);
        }
        let id = IntMatrix::identity(self.source.num_generators());
        let mut map = GroupMap {
            source: self.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.sub(&id),
        };
        map.reduce();
        Ok(map)
    }

    /// `[matrix | target relations]`: its column span is the preimage lattice
    /// of the image in `ℤ^(target generators)`.
    fn image_with_relations(&self) -> IntMatrix {
        self.matrix.hstack(&self.target.relation_matrix())
    }

    pub fn cokernel(&self) -> FgAbelianGroup {
        cokernel(&self.image_with_relations())
    }

    pub fn kernel(&self) -> FgAbelianGroup {
        let n = self.source.num_generators();
        let block = self.image_with_relations();
        let lifts = smith_normal_form(&block).kernel_basis();
        let gens = lifts.select_rows(0..n);
        subquotient(&gens, &self.source.relation_matrix())
    }

    pub fn image(&self) -> FgAbelianGroup {
        subquotient(&self.image_with_relations(), &self.target.relation_matrix())
    }

    pub fn is_surjective(&self) -> bool {
        self.cokernel().is_trivial()
    }

    /// Bijectivity. Source and target must share a canonical form; a surjective
    /// endomorphism of a finitely generated abelian group is then injective.
    pub fn is_isomorphism(&self) -> bool {
        self.is_endomorphism() && self.is_surjective()
    }

    /// Applies the map to a vector of source coordinates.
    pub fn apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        let mut out = self.matrix.mul_vec(v);
        for (x, d) in out.iter_mut().zip(self.target.generator_orders()) {
            if !d.is_zero() {
                *x = x.mod_floor(&d);
            }
        }
        out
    }
}

/// Homology `ker(outgoing) / im(incoming)` at the middle group of
/// `A --incoming--> B --outgoing--> C`.
pub fn homology_at_middle(incoming: &GroupMap, outgoing: &GroupMap) -> Result<FgAbelianGroup, AbelianError> {
    if incoming.target != outgoing.source {
        return Err(AbelianError::NotComposable);
    }
    if !outgoing.compose(incoming)?.is_zero() {
        return Err(AbelianError::BoundaryNotNilpotent { degree: 2 });
    }
    let n = outgoing.source.num_generators();
    let lifts = smith_normal_form(&outgoing.image_with_relations()).kernel_basis();
    let cycles = lifts.select_rows(0..n);
    let borders = incoming.matrix.hstack(&outgoing.source.relation_matrix());
    Ok(subquotient(&cycles, &borders))
}
