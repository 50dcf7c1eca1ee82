use super::assembly::{assemble, baseline_untwisted, compare, AssembledKTheory, ObstructionReport};
use super::pages::{attach_d2, e1_page, e2_page, e_infinity};
use super::{SpecSeqError, SpectralPage};
use crate::nerve::SimplicialComplex;
use crate::twist::{cohomology_class, Cocycle2, CoefficientSystem, CohomologyClass};

/// Everything a twisted run produces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PipelineOutput {
    pub e1: SpectralPage,
    /// `E²` with `d₂` attached.
    pub e2: SpectralPage,
    pub e3: SpectralPage,
    pub class: CohomologyClass,
    pub assembled: AssembledKTheory,
    pub baseline: AssembledKTheory,
    pub report: ObstructionReport,
}

/// Validates the twisting data, runs every page, and compares the result with
/// the untwisted gluing.
pub fn run_pipeline(
    nerve: &SimplicialComplex,
    cs: &CoefficientSystem,
    cocycle: &Cocycle2,
) -> Result<PipelineOutput, SpecSeqError> {
    cs.validate_involution()?;
    let class = cohomology_class(cocycle, nerve)?;
    let e1 = e1_page(nerve, cs)?;
    let e2 = attach_d2(&e2_page(&e1)?, nerve, cs, cocycle)?;
    let e3 = e_infinity(&e2)?;
    let assembled = assemble(&e3);
    let baseline = baseline_untwisted(nerve, cs)?;
    let report = compare(&assembled, &baseline);
    Ok(PipelineOutput {
        e1,
        e2,
        e3,
        class,
        assembled,
        baseline,
        report,
    })
}
