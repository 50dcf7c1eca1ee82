//! Oracle mode: recomputes what it can by brute force and diffs against a
//! finished pipeline run.

use mvkt_core::oracle::{betti_mod_p, is_coboundary_exhaustive, EXHAUSTIVE_LIMIT_BITS};
use mvkt_core::{ClassKind, Cocycle2, CoefficientSystem, FgAbelianGroup, PipelineOutput, SimplicialComplex};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Agree,
    Disagree,
    /// No oracle applies, e.g. coefficients that are not prime cyclic.
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: CheckStatus,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verification {
    /// No check disagreed.
    pub agreed: bool,
    pub checks: Vec<Check>,
}

fn compare(name: String, expected: &FgAbelianGroup, found: &FgAbelianGroup) -> Check {
    let (status, detail) = if expected == found {
        (CheckStatus::Agree, format!("{found}"))
    } else {
        (CheckStatus::Disagree, format!("oracle {expected}, pipeline {found}"))
    };
    Check { name, status, detail }
}

/// Checks `out` against independent computations:
///
/// * `E¹_{p,q} = K_{q−1}(D)^{n_p}` from the simplex counts;
/// * each `E²_{p,q}` with `K_{q−1}(D) ≅ ℤ/ℓ`, ℓ prime, against the mod-ℓ
///   Betti number of the nerve (trivial coefficients give 0);
/// * the cocycle class against exhaustive search over 1-cochains, when the
///   nerve has at most 2¹⁶ of them.
pub fn verify(
    nerve: &SimplicialComplex,
    cs: &CoefficientSystem,
    cocycle: &Cocycle2,
    out: &PipelineOutput,
) -> Verification {
    let mut checks = Vec::new();
    for (&(p, q), found) in out.e1.entries() {
        let expected = cs.k(q + 1).power(nerve.count(p));
        checks.push(compare(format!("E1[{p},{q}]"), &expected, found));
    }
    for (&(p, q), found) in out.e2.entries() {
        let m = cs.k(q + 1);
        let name = format!("E2[{p},{q}]");
        if m.is_trivial() {
            checks.push(compare(name, &FgAbelianGroup::trivial(), found));
        } else if let Some(ell) = m.as_prime_cyclic() {
            let expected = m.power(betti_mod_p(nerve, p, ell));
            checks.push(compare(name, &expected, found));
        } else {
            checks.push(Check {
                name,
                status: CheckStatus::Skipped,
                detail: format!("coefficient {m} is not prime cyclic"),
            });
        }
    }
    let class = match is_coboundary_exhaustive(nerve, cocycle) {
        Some(coboundary) => {
            let pipeline = out.class.kind == ClassKind::Trivial;
            let word = |b: bool| if b { "trivial" } else { "nontrivial" };
            if coboundary == pipeline {
                Check {
                    name: "class".into(),
                    status: CheckStatus::Agree,
                    detail: format!("{} by search over 2^{} 1-cochains", word(coboundary), nerve.count(1)),
                }
            } else {
                Check {
                    name: "class".into(),
                    status: CheckStatus::Disagree,
                    detail: format!("oracle {}, pipeline {}", word(coboundary), word(pipeline)),
                }
            }
        }
        None => Check {
            name: "class".into(),
            status: CheckStatus::Skipped,
            detail: format!(
                "{} edges exceed the search limit of {EXHAUSTIVE_LIMIT_BITS}",
                nerve.count(1)
            ),
        },
    };
    checks.push(class);
    Verification {
        agreed: checks.iter().all(|c| c.status != CheckStatus::Disagree),
        checks,
    }
}
