//! Exact computation of the Čech–Mayer–Vietoris spectral sequence for an
//! ideal cover whose local pieces are suspensions of one coefficient algebra,
//! including a ℤ/2-twisted second differential and the resulting K-theoretic
//! Morita obstruction.
//!
//! The crate is organized bottom-up:
//!
//! * [`abelian`]: finitely generated abelian groups, Smith normal form,
//!   homomorphisms, tensor/Tor, chain-complex homology.
//! * [`nerve`]: simplicial complexes, nerves of finite covers, boundary and
//!   mod-2 coboundary matrices.
//! * [`twist`]: coefficient K-groups with an involution, ℤ/2 2-cocycles and
//!   their cohomology classes.
//! * [`specseq`]: the pages `E¹, E², E³ = E^∞`, assembly into K-groups and
//!   the comparison with the untwisted gluing.
//! * [`oracle`]: independent brute-force checks used by tests and by
//!   verification tooling.

pub mod abelian;
pub mod f2;
pub mod matrix;
pub mod nerve;
pub mod oracle;
pub mod specseq;
pub mod twist;

pub use abelian::{AbelianError, FgAbelianGroup, GroupMap, IntegerChainComplex};
pub use matrix::IntMatrix;
pub use nerve::{nerve_of_cover, CoverDescription, NerveError, SimplicialComplex};
pub use specseq::{
    AssembledKTheory, ObstructionReport, PipelineOutput, Resolution, SpecSeqError, SpectralPage, Verdict,
};
pub use twist::{ClassKind, Cocycle2, CoefficientSystem, CohomologyClass, TwistError};
