//! Exact arithmetic for finitely generated abelian groups.
//!
//! Everything here works over arbitrary-precision integers. The Smith normal
//! form in [`snf`] is the single kernel behind cokernels, kernels,
//! subquotients and chain-complex homology.

mod chain;
mod group;
mod map;
pub mod snf;

use thiserror::Error;

pub use chain::{homology_at, IntegerChainComplex};
pub use group::{cokernel, tensor, tor, FgAbelianGroup};
pub use map::{homology_at_middle, GroupMap};
pub use snf::{smith_normal_form, SmithForm};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AbelianError {
    #[error("matrix has shape {found:?}, expected {expected:?}")]
    ShapeMismatch {
        expected: (usize, usize),
        found: (usize, usize),
    },
    #[error(
        "map is not well defined: torsion generator {generator} does not respect the order of target generator {row}"
    )]
    NotWellDefined { generator: usize, row: usize },
    #[error("maps are not composable: inner target differs from outer source")]
    NotComposable,
    #[error("map is not an endomorphism")]
    NotEndomorphism,
    #[error("group is not in canonical form: {0}")]
    NotCanonical(String),
    #[error("malformed chain complex: {0}")]
    MalformedComplex(String),
    #[error("∂∘∂ ≠ 0 between degrees {degree} and {}", degree - 2)]
    BoundaryNotNilpotent { degree: usize },
    #[error("degree {degree} outside 0..={top}")]
    DegreeOutOfRange { degree: usize, top: usize },
}
