//! Twisting data: a ℤ/2-valued 2-cocycle on the nerve and an involutive
//! automorphism of the coefficient K-groups.

use std::fmt;

use thiserror::Error;

use crate::abelian::{AbelianError, FgAbelianGroup, GroupMap};
use crate::matrix::IntMatrix;
use crate::nerve::SimplicialComplex;

/// Which coefficient automorphism an error refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoefficientMap {
    Phi0,
    Phi1,
}

impl fmt::Display for CoefficientMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefficientMap::Phi0 => write!(f, "phi0"),
            CoefficientMap::Phi1 => write!(f, "phi1"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TwistError {
    #[error("{map} is not a well-defined endomorphism: {source}")]
    NotWellDefined {
        map: CoefficientMap,
        #[source]
        source: AbelianError,
    },
    #[error("{map} is not bijective")]
    NotBijective { map: CoefficientMap },
    #[error("{map} does not square to the identity")]
    NotInvolutive { map: CoefficientMap },
    #[error("cochain is not a cocycle: its coboundary is nonzero")]
    NotACocycle,
    #[error("{0:?} is not a 2-simplex of the nerve")]
    UnknownSimplex(Vec<usize>),
    #[error("2-simplex {0:?} assigned more than once")]
    DuplicateSimplex(Vec<usize>),
    #[error("cochain has {found} values but the complex has {expected} 2-simplices")]
    LengthMismatch { expected: usize, found: usize },
    #[error("cocycle value {0} is not a bit")]
    NotABit(i64),
}

/// Coefficient K-groups `K₀(D)`, `K₁(D)` with the induced action of an
/// automorphism `φ` on each.
///
/// `assumption_k` records whether the user asserts the classification
/// hypothesis on `D`; nothing depends on it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientSystem {
    pub k0: FgAbelianGroup,
    pub k1: FgAbelianGroup,
    pub phi0: GroupMap,
    pub phi1: GroupMap,
    pub assumption_k: bool,
}

impl CoefficientSystem {
    /// Builds the system from raw matrices on canonical generators. Fails with
    /// `NotWellDefined` if a matrix has the wrong shape or ignores torsion.
    pub fn from_matrices(
        k0: FgAbelianGroup,
        k1: FgAbelianGroup,
        phi0: IntMatrix,
        phi1: IntMatrix,
        assumption_k: bool,
    ) -> Result<Self, TwistError> {
        let phi0 = GroupMap::new(k0.clone(), k0.clone(), phi0).map_err(|source| TwistError::NotWellDefined {
            map: CoefficientMap::Phi0,
            source,
        })?;
        let phi1 = GroupMap::new(k1.clone(), k1.clone(), phi1).map_err(|source| TwistError::NotWellDefined {
            map: CoefficientMap::Phi1,
            source,
        })?;
        Ok(CoefficientSystem {
            k0,
            k1,
            phi0,
            phi1,
            assumption_k,
        })
    }

    /// `K₀ = K₁ = ℤ/3` with `φ∗ = −1` in both degrees.
    pub fn cyclic_three() -> Self {
        let z3 = FgAbelianGroup::cyclic(3);
        let minus = IntMatrix::from_i64(&[&[-1]]);
        Self::from_matrices(z3.clone(), z3, minus.clone(), minus, true).expect("−1 is well defined")
    }

    /// `K_q(D)` for `q ∈ {0, 1}`.
    pub fn k(&self, q: usize) -> &FgAbelianGroup {
        if q % 2 == 0 {
            &self.k0
        } else {
            &self.k1
        }
    }

    /// `φ∗` on `K_q(D)` for `q ∈ {0, 1}`.
    pub fn phi(&self, q: usize) -> &GroupMap {
        if q % 2 == 0 {
            &self.phi0
        } else {
            &self.phi1
        }
    }

    pub fn validate_involution(&self) -> Result<(), TwistError> {
        for (map, phi, group) in [
            (CoefficientMap::Phi0, &self.phi0, &self.k0),
            (CoefficientMap::Phi1, &self.phi1, &self.k1),
        ] {
            if phi.source() != group || phi.target() != group {
                return Err(TwistError::NotWellDefined {
                    map,
                    source: AbelianError::NotEndomorphism,
                });
            }
            // Revalidate: fields are public and may have been swapped.
            GroupMap::new(group.clone(), group.clone(), phi.matrix().clone())
                .map_err(|source| TwistError::NotWellDefined { map, source })?;
            if !phi.is_isomorphism() {
                return Err(TwistError::NotBijective { map });
            }
            if !phi.compose(phi).expect("endomorphism").is_identity() {
                return Err(TwistError::NotInvolutive { map });
            }
        }
        Ok(())
    }
}

/// A ℤ/2-valued 2-cochain on a fixed complex, one bit per 2-simplex in
/// lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cocycle2 {
    values: Vec<bool>,
}

impl Cocycle2 {
    pub fn zero(complex: &SimplicialComplex) -> Self {
        Cocycle2 {
            values: vec![false; complex.count(2)],
        }
    }

    pub fn from_values(complex: &SimplicialComplex, values: Vec<bool>) -> Result<Self, TwistError> {
        if values.len() != complex.count(2) {
            return Err(TwistError::LengthMismatch {
                expected: complex.count(2),
                found: values.len(),
            });
        }
        Ok(Cocycle2 { values })
    }

    /// From `(simplex, bit)` pairs; unlisted 2-simplices carry 0. Vertex order
    /// within a simplex is immaterial.
    pub fn from_pairs<I, S>(complex: &SimplicialComplex, pairs: I) -> Result<Self, TwistError>
    where
        I: IntoIterator<Item = (S, i64)>,
        S: AsRef<[usize]>,
    {
        let mut values = vec![false; complex.count(2)];
        let mut seen = vec![false; complex.count(2)];
        for (simplex, bit) in pairs {
            let mut s = simplex.as_ref().to_vec();
            s.sort_unstable();
            let idx = (s.len() == 3)
                .then(|| complex.index_of(&s))
                .flatten()
                .ok_or_else(|| TwistError::UnknownSimplex(simplex.as_ref().to_vec()))?;
            if seen[idx] {
                return Err(TwistError::DuplicateSimplex(s));
            }
            seen[idx] = true;
            values[idx] = match bit {
                0 => false,
                1 => true,
                other => return Err(TwistError::NotABit(other)),
            };
        }
        Ok(Cocycle2 { values })
    }

    /// Indicator cochain of one 2-simplex.
    pub fn indicator(complex: &SimplicialComplex, simplex: &[usize]) -> Result<Self, TwistError> {
        Self::from_pairs(complex, [(simplex, 1)])
    }

    /// `δ¹ b` for a 1-cochain `b`.
    pub fn coboundary_of(complex: &SimplicialComplex, one_cochain: &[bool]) -> Self {
        assert_eq!(one_cochain.len(), complex.count(1), "1-cochain length mismatch");
        let values = if complex.dimension().unwrap_or(0) < 2 {
            Vec::new()
        } else {
            complex
                .coboundary_matrix_mod2(1)
                .expect("dimension ≥ 2")
                .mul_vec(one_cochain)
        };
        Cocycle2 { values }
    }

    pub fn values(&self) -> &[bool] {
        &self.values
    }

    pub fn weight(&self) -> usize {
        self.values.iter().filter(|&&b| b).count()
    }

    /// Pointwise sum over ℤ/2.
    pub fn add(&self, other: &Cocycle2) -> Cocycle2 {
        assert_eq!(self.values.len(), other.values.len());
        Cocycle2 {
            values: self.values.iter().zip(&other.values).map(|(a, b)| a ^ b).collect(),
        }
    }

    /// `(simplex, 1)` for every simplex carrying a 1.
    pub fn support<'a>(&'a self, complex: &'a SimplicialComplex) -> impl Iterator<Item = &'a [usize]> + 'a {
        complex
            .simplices(2)
            .iter()
            .zip(&self.values)
            .filter(|(_, &b)| b)
            .map(|(s, _)| s.as_slice())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassKind {
    Trivial,
    Nontrivial,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CohomologyClass {
    pub kind: ClassKind,
    /// `dim_F₂ H²(complex; ℤ/2)`.
    pub h2_dimension_mod2: usize,
}

impl CohomologyClass {
    pub fn is_trivial(&self) -> bool {
        self.kind == ClassKind::Trivial
    }
}

fn check_length(c: &Cocycle2, complex: &SimplicialComplex) {
    assert_eq!(
        c.values.len(),
        complex.count(2),
        "cochain belongs to a different complex"
    );
}

/// `δc = 0` over F₂.
pub fn is_cocycle(c: &Cocycle2, complex: &SimplicialComplex) -> bool {
    check_length(c, complex);
    if complex.dimension().map_or(true, |d| d < 2) {
        return true;
    }
    let delta = complex.coboundary_matrix_mod2(2).expect("dimension ≥ 2");
    delta.mul_vec(&c.values).iter().all(|&b| !b)
}

/// Decides whether `c` is a coboundary, and reports `dim H²` over F₂.
pub fn cohomology_class(c: &Cocycle2, complex: &SimplicialComplex) -> Result<CohomologyClass, TwistError> {
    if !is_cocycle(c, complex) {
        return Err(TwistError::NotACocycle);
    }
    if complex.dimension().map_or(true, |d| d < 2) {
        return Ok(CohomologyClass {
            kind: ClassKind::Trivial,
            h2_dimension_mod2: 0,
        });
    }
    let delta1 = complex.coboundary_matrix_mod2(1).expect("dimension ≥ 2");
    let delta2 = complex.coboundary_matrix_mod2(2).expect("dimension ≥ 2");
    let cocycles = complex.count(2) - delta2.rank();
    let h2_dimension_mod2 = cocycles - delta1.rank();
    let kind = match delta1.solve(&c.values) {
        Some(_) => ClassKind::Trivial,
        None => ClassKind::Nontrivial,
    };
    Ok(CohomologyClass {
        kind,
        h2_dimension_mod2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn octahedron() -> SimplicialComplex {
        SimplicialComplex::from_maximal_simplices(
            6,
            [
                [0, 2, 4],
                [0, 2, 5],
                [0, 3, 4],
                [0, 3, 5],
                [1, 2, 4],
                [1, 2, 5],
                [1, 3, 4],
                [1, 3, 5],
            ],
        )
        .unwrap()
    }

    #[test]
    fn involution_validation() {
        assert_eq!(CoefficientSystem::cyclic_three().validate_involution(), Ok(()));

        let z5 = FgAbelianGroup::cyclic(5);
        let cs = CoefficientSystem::from_matrices(
            z5.clone(),
            z5,
            IntMatrix::from_i64(&[&[2]]),
            IntMatrix::from_i64(&[&[1]]),
            false,
        )
        .unwrap();
        assert_eq!(
            cs.validate_involution(),
            Err(TwistError::NotInvolutive {
                map: CoefficientMap::Phi0
            })
        );

        let z3 = FgAbelianGroup::cyclic(3);
        let cs = CoefficientSystem::from_matrices(
            z3.clone(),
            z3,
            IntMatrix::from_i64(&[&[1]]),
            IntMatrix::from_i64(&[&[0]]),
            false,
        )
        .unwrap();
        assert_eq!(
            cs.validate_involution(),
            Err(TwistError::NotBijective {
                map: CoefficientMap::Phi1
            })
        );
    }

    #[test]
    fn identity_involution_is_ok() {
        let g = FgAbelianGroup::free(1).direct_sum(&FgAbelianGroup::cyclic(4));
        let id = IntMatrix::identity(2);
        let cs = CoefficientSystem::from_matrices(g.clone(), g, id.clone(), id, false).unwrap();
        assert_eq!(cs.validate_involution(), Ok(()));
    }

    #[test]
    fn ill_defined_phi_is_rejected() {
        let err = CoefficientSystem::from_matrices(
            FgAbelianGroup::cyclic(3),
            FgAbelianGroup::free(1),
            IntMatrix::from_i64(&[&[1, 0]]),
            IntMatrix::from_i64(&[&[1]]),
            false,
        )
        .unwrap_err();
        assert!(matches!(
            err,
            TwistError::NotWellDefined {
                map: CoefficientMap::Phi0,
                ..
            }
        ));
    }

    #[test]
    fn cocycle_examples() {
        let oct = octahedron();
        assert!(is_cocycle(&Cocycle2::indicator(&oct, &[0, 2, 4]).unwrap(), &oct));
        let tet = SimplicialComplex::from_maximal_simplices(4, [[0, 1, 2, 3]]).unwrap();
        assert!(!is_cocycle(&Cocycle2::indicator(&tet, &[0, 1, 2]).unwrap(), &tet));
        assert!(is_cocycle(&Cocycle2::zero(&tet), &tet));
    }

    #[test]
    fn class_examples() {
        let oct = octahedron();
        let single = Cocycle2::indicator(&oct, &[1, 3, 5]).unwrap();
        let class = cohomology_class(&single, &oct).unwrap();
        assert_eq!(class.kind, ClassKind::Nontrivial);
        assert_eq!(class.h2_dimension_mod2, 1);

        let mut b = vec![false; oct.count(1)];
        b[0] = true;
        b[7] = true;
        let cob = Cocycle2::coboundary_of(&oct, &b);
        assert!(cob.weight() > 0);
        assert_eq!(cohomology_class(&cob, &oct).unwrap().kind, ClassKind::Trivial);

        let circle = SimplicialComplex::from_maximal_simplices(3, [[0, 1], [0, 2], [1, 2]]).unwrap();
        let class = cohomology_class(&Cocycle2::zero(&circle), &circle).unwrap();
        assert_eq!(class.kind, ClassKind::Trivial);
        assert_eq!(class.h2_dimension_mod2, 0);

        let tet = SimplicialComplex::from_maximal_simplices(4, [[0, 1, 2, 3]]).unwrap();
        assert_eq!(
            cohomology_class(&Cocycle2::indicator(&tet, &[0, 1, 2]).unwrap(), &tet),
            Err(TwistError::NotACocycle)
        );
    }

    #[test]
    fn pair_parsing_errors() {
        let oct = octahedron();
        assert_eq!(
            Cocycle2::from_pairs(&oct, [(vec![0, 1, 2], 1)]),
            Err(TwistError::UnknownSimplex(vec![0, 1, 2]))
        );
        assert!(matches!(
            Cocycle2::from_pairs(&oct, [(vec![0, 2, 4], 1), (vec![4, 2, 0], 0)]),
            Err(TwistError::DuplicateSimplex(_))
        ));
        assert_eq!(
            Cocycle2::from_pairs(&oct, [(vec![0, 2, 4], 2)]),
            Err(TwistError::NotABit(2))
        );
        let c = Cocycle2::from_pairs(&oct, [(vec![4, 0, 2], 1)]).unwrap();
        assert_eq!(c.support(&oct).collect::<Vec<_>>(), vec![&[0, 2, 4][..]]);
    }
}
