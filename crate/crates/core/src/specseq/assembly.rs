use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use super::pages::{attach_d2, e1_page, e2_page, e_infinity};
use super::{SpecSeqError, SpectralPage};
use crate::abelian::FgAbelianGroup;
use crate::nerve::SimplicialComplex;
use crate::twist::{ClassKind, Cocycle2, CoefficientSystem};

/// Which safe rule settled an extension problem.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ResolutionRule {
    /// At most one graded piece is nonzero.
    SinglePiece,
    /// All pieces finite with pairwise coprime orders.
    CoprimeOrders,
    /// Untwisted run: the filtration splits as for a product with the fiber.
    KunnethSplit,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Resolution {
    Determined {
        group: FgAbelianGroup,
        rule: ResolutionRule,
    },
    /// Extension not resolved; only the graded pieces are known.
    Ambiguous,
}

/// `K_n` of the glued algebra for one total degree `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeAssembly {
    /// `E^∞_{p, n−p}` for `p = 0..=dimension`.
    pub graded_pieces: Vec<FgAbelianGroup>,
    pub resolution: Resolution,
}

impl DegreeAssembly {
    pub fn determined(&self) -> Option<&FgAbelianGroup> {
        match &self.resolution {
            Resolution::Determined { group, .. } => Some(group),
            Resolution::Ambiguous => None,
        }
    }

    /// Free rank; additive along any filtration.
    pub fn free_rank(&self) -> usize {
        self.graded_pieces.iter().map(FgAbelianGroup::free_rank).sum()
    }

    /// Torsion order of `K_n`, when the pieces pin it down: either the group
    /// is determined, or every piece is finite and the order is multiplicative.
    pub fn torsion_order(&self) -> Option<BigInt> {
        if let Some(g) = self.determined() {
            return Some(g.torsion_order());
        }
        self.graded_pieces
            .iter()
            .all(FgAbelianGroup::is_finite)
            .then(|| self.graded_pieces.iter().map(FgAbelianGroup::torsion_order).product())
    }
}

/// Associated graded of `K_0` and `K_1`, with resolved extensions where safe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssembledKTheory {
    pub degrees: [DegreeAssembly; 2],
}

impl AssembledKTheory {
    pub fn degree(&self, n: usize) -> &DegreeAssembly {
        &self.degrees[n % 2]
    }
}

fn resolve(pieces: &[FgAbelianGroup], kunneth: bool) -> Resolution {
    let nonzero: Vec<&FgAbelianGroup> = pieces.iter().filter(|g| !g.is_trivial()).collect();
    if nonzero.len() <= 1 {
        let group = nonzero.first().map_or_else(FgAbelianGroup::trivial, |g| (*g).clone());
        return Resolution::Determined {
            group,
            rule: ResolutionRule::SinglePiece,
        };
    }
    let sum = || {
        nonzero
            .iter()
            .fold(FgAbelianGroup::trivial(), |acc, g| acc.direct_sum(g))
    };
    if nonzero.iter().all(|g| g.is_finite()) {
        let orders: Vec<BigInt> = nonzero.iter().map(|g| g.torsion_order()).collect();
        let coprime = orders
            .iter()
            .enumerate()
            .all(|(i, a)| orders[i + 1..].iter().all(|b| a.gcd(b).is_one()));
        if coprime {
            return Resolution::Determined {
                group: sum(),
                rule: ResolutionRule::CoprimeOrders,
            };
        }
    }
    if kunneth {
        return Resolution::Determined {
            group: sum(),
            rule: ResolutionRule::KunnethSplit,
        };
    }
    Resolution::Ambiguous
}

/// Collects `E^∞_{p, n−p}` into total degrees and settles extensions by the
/// single-piece, coprime-orders and (for trivial twists) Künneth rules.
pub fn assemble(einf: &SpectralPage) -> AssembledKTheory {
    let kunneth = einf.twist() == Some(ClassKind::Trivial);
    let degree = |n: usize| {
        let graded_pieces: Vec<FgAbelianGroup> = (0..=einf.dimension())
            .map(|p| einf.entry(p, (n + p) % 2).clone())
            .collect();
        let resolution = resolve(&graded_pieces, kunneth);
        DegreeAssembly {
            graded_pieces,
            resolution,
        }
    };
    AssembledKTheory {
        degrees: [degree(0), degree(1)],
    }
}

/// K-theory of the untwisted gluing: the full pipeline with the zero cocycle.
pub fn baseline_untwisted(nerve: &SimplicialComplex, cs: &CoefficientSystem) -> Result<AssembledKTheory, SpecSeqError> {
    let e2 = e2_page(&e1_page(nerve, cs)?)?;
    let with_d2 = attach_d2(&e2, nerve, cs, &Cocycle2::zero(nerve))?;
    Ok(assemble(&e_infinity(&with_d2)?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    ObstructionProven,
    NoObstructionDetected,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::ObstructionProven => "obstruction_proven",
            Verdict::NoObstructionDetected => "no_obstruction_detected",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObstructionReport {
    pub twisted: AssembledKTheory,
    pub baseline: AssembledKTheory,
    pub verdict: Verdict,
    pub reasons: Vec<String>,
}

/// Morita comparison. A difference in free rank or in a known torsion order in
/// some degree proves the two algebras have non-isomorphic K-theory.
pub fn compare(twisted: &AssembledKTheory, baseline: &AssembledKTheory) -> ObstructionReport {
    let mut mismatches = Vec::new();
    let mut open = Vec::new();
    let mut settled = Vec::new();
    for n in 0..2 {
        let (t, b) = (twisted.degree(n), baseline.degree(n));
        if t.free_rank() != b.free_rank() {
            mismatches.push(format!(
                "K_{n}: free rank {} vs {} in the baseline",
                t.free_rank(),
                b.free_rank()
            ));
        }
        match (t.torsion_order(), b.torsion_order()) {
            (Some(x), Some(y)) if x != y => {
                mismatches.push(format!("K_{n}: torsion order {x} vs {y} in the baseline"));
            }
            (Some(_), Some(_)) => {}
            _ => open.push(format!("K_{n}: torsion order not determined by the graded pieces")),
        }
        match (t.determined(), b.determined()) {
            (Some(x), Some(y)) if x == y => settled.push(format!("K_{n} ≅ {x} on both sides")),
            (Some(x), Some(y)) => open.push(format!(
                "K_{n}: determined groups {x} and {y} share rank and torsion order but differ"
            )),
            _ => open.push(format!(
                "K_{n}: extension problem unresolved; only graded pieces compared"
            )),
        }
    }
    let (verdict, reasons) = if !mismatches.is_empty() {
        (Verdict::ObstructionProven, mismatches)
    } else if open.is_empty() {
        (Verdict::NoObstructionDetected, settled)
    } else {
        (Verdict::Inconclusive, open)
    };
    ObstructionReport {
        twisted: twisted.clone(),
        baseline: baseline.clone(),
        verdict,
        reasons,
    }
}
