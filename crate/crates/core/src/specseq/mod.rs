//! The Čech–Mayer–Vietoris spectral sequence with coefficients in the
//! K-theory of a single fiber algebra.
//!
//! Pages are homological: `d_r : E_{p,q} → E_{p−r, q+r−1}` with `q ∈ ℤ/2`,
//! converging to the associated graded of `K_{p+q}`. The suspension shift of
//! the local pieces is absorbed once, in [`e1_page`]: the coefficient group in
//! row `q` is `M_q = K_{q−1}(D)`.

mod assembly;
mod pages;
mod pipeline;

use std::collections::BTreeMap;

use thiserror::Error;

use crate::abelian::{AbelianError, FgAbelianGroup, GroupMap};
use crate::twist::{ClassKind, TwistError};

pub use assembly::{
    assemble, baseline_untwisted, compare, AssembledKTheory, DegreeAssembly, ObstructionReport, Resolution,
    ResolutionRule, Verdict,
};
pub use pages::{attach_d2, e1_page, e2_page, e_infinity, row_homology};
pub use pipeline::{run_pipeline, PipelineOutput};

/// `(p, q)` with `q ∈ {0, 1}`.
pub type Slot = (usize, usize);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecSeqError {
    #[error("the nerve is empty")]
    EmptyNerve,
    #[error(transparent)]
    Twist(#[from] TwistError),
    #[error("twisted run unsupported: {0}")]
    TwistedRunUnsupported(String),
    #[error(
        "K₀(D) = {k0} and K₁(D) = {k1} have different canonical forms; the twisted differential crosses K-degrees"
    )]
    CoefficientDegreeMismatch { k0: FgAbelianGroup, k1: FgAbelianGroup },
    #[error("E^∞ needs nerve dimension ≤ 2, got {dimension}")]
    UnsupportedDimension { dimension: usize },
    #[error("page {found} supplied where page {expected} is required")]
    WrongPage { expected: u32, found: u32 },
    #[error(transparent)]
    Abelian(#[from] AbelianError),
}

/// One page `E^r`: groups in every slot and the differentials leaving them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectralPage {
    page: u32,
    dimension: usize,
    entries: BTreeMap<Slot, FgAbelianGroup>,
    /// Keyed by source slot.
    differentials: BTreeMap<Slot, GroupMap>,
    context: PageContext,
}

/// Data carried from the first page so later pages can be derived from a page
/// alone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct PageContext {
    /// `M_0, M_1`.
    pub coefficients: [FgAbelianGroup; 2],
    /// `H_p(nerve; ℤ)` for `p = 0..=dimension`.
    pub nerve_homology: Vec<FgAbelianGroup>,
    /// Cohomology class of the twist, once a `d₂` has been attached.
    pub twist: Option<ClassKind>,
}

impl SpectralPage {
    pub fn page(&self) -> u32 {
        self.page
    }

    /// Largest `p` with a slot.
    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn entry(&self, p: usize, q: usize) -> &FgAbelianGroup {
        &self.entries[&(p, q % 2)]
    }

    pub fn entries(&self) -> &BTreeMap<Slot, FgAbelianGroup> {
        &self.entries
    }

    pub fn differential(&self, p: usize, q: usize) -> Option<&GroupMap> {
        self.differentials.get(&(p, q % 2))
    }

    pub fn differentials(&self) -> &BTreeMap<Slot, GroupMap> {
        &self.differentials
    }

    /// Where `d_r` from `(p, q)` lands, if that slot exists.
    pub fn target_slot(&self, (p, q): Slot) -> Option<Slot> {
        let r = self.page as usize;
        p.checked_sub(r).map(|tp| (tp, (q + r - 1) % 2))
    }

    /// `M_q`, the coefficient group in row `q`.
    pub fn coefficient(&self, q: usize) -> &FgAbelianGroup {
        &self.context.coefficients[q % 2]
    }

    pub fn nerve_homology(&self) -> &[FgAbelianGroup] {
        &self.context.nerve_homology
    }

    /// The twist class, once `d₂` is attached.
    pub fn twist(&self) -> Option<ClassKind> {
        self.context.twist
    }

    /// Checks that every differential runs between the recorded entries and
    /// that composable differentials compose to zero.
    pub fn check(&self) -> Result<(), String> {
        for (&src, d) in &self.differentials {
            let Some(tgt) = self.target_slot(src) else {
                return Err(format!("differential from {src:?} has no target slot"));
            };
            if d.source() != &self.entries[&src] || d.target() != &self.entries[&tgt] {
                return Err(format!("differential {src:?} → {tgt:?} disagrees with the entries"));
            }
            if let Some(next) = self.differentials.get(&tgt) {
                let composite = next.compose(d).map_err(|e| e.to_string())?;
                if !composite.is_zero() {
                    return Err(format!("d ∘ d ≠ 0 starting at {src:?}"));
                }
            }
        }
        Ok(())
    }

    /// Overwrites one entry. Exists for negative controls in verification
    /// tooling; pipeline code never calls it.
    #[doc(hidden)]
    pub fn corrupt_entry(&mut self, slot: Slot, group: FgAbelianGroup) {
        self.entries.insert(slot, group);
    }
}
