use std::collections::BTreeMap;

use num_traits::Zero;

use super::{PageContext, SpecSeqError, SpectralPage};
use crate::abelian::{homology_at_middle, tensor, tor, FgAbelianGroup, GroupMap};
use crate::matrix::IntMatrix;
use crate::nerve::SimplicialComplex;
use crate::twist::{cohomology_class, Cocycle2, CoefficientSystem};

/// Position of generator `g` of `M` on summand `s` inside the canonical
/// generators of `M^n`: free generators summand-major, then each invariant
/// factor's `n` copies in summand order.
fn power_index(n: usize, free_rank: usize, s: usize, g: usize) -> usize {
    if g < free_rank {
        s * free_rank + g
    } else {
        n * free_rank + (g - free_rank) * n + s
    }
}

/// `∂ ⊗ id_M` as a matrix on canonical generators of `M^cols → M^rows`.
fn block_boundary(boundary: &IntMatrix, m: &FgAbelianGroup) -> IntMatrix {
    let (rows, cols) = boundary.shape();
    let gens = m.num_generators();
    let r = m.free_rank();
    let mut out = IntMatrix::zeros(rows * gens, cols * gens);
    for i in 0..rows {
        for j in 0..cols {
            let e = &boundary[(i, j)];
            if e.is_zero() {
                continue;
            }
            for g in 0..gens {
                out[(power_index(rows, r, i, g), power_index(cols, r, j, g))] = e.clone();
            }
        }
    }
    out
}

/// `E¹_{p,q} = ⊕_{p-simplices} K_{q−1}(D)` with `d₁` the alternating
/// restriction, i.e. the simplicial boundary tensored with the identity.
pub fn e1_page(nerve: &SimplicialComplex, cs: &CoefficientSystem) -> Result<SpectralPage, SpecSeqError> {
    let dimension = nerve.dimension().ok_or(SpecSeqError::EmptyNerve)?;
    // M_q = K_{q−1}(D): M_0 = K_1, M_1 = K_0.
    let coefficients = [cs.k(1).clone(), cs.k(0).clone()];
    let mut entries = BTreeMap::new();
    for p in 0..=dimension {
        for (q, m) in coefficients.iter().enumerate() {
            entries.insert((p, q), m.power(nerve.count(p)));
        }
    }
    let mut differentials = BTreeMap::new();
    for p in 1..=dimension {
        let boundary = nerve.boundary_matrix(p).expect("1 ≤ p ≤ dimension");
        for (q, m) in coefficients.iter().enumerate() {
            let d1 = GroupMap::new(
                entries[&(p, q)].clone(),
                entries[&(p - 1, q)].clone(),
                block_boundary(&boundary, m),
            )?;
            differentials.insert((p, q), d1);
        }
    }
    Ok(SpectralPage {
        page: 1,
        dimension,
        entries,
        differentials,
        context: PageContext {
            coefficients,
            nerve_homology: nerve.chain_complex().homology(),
            twist: None,
        },
    })
}

/// `E²_{p,q} = H_p(nerve; M_q)` by universal coefficients:
/// `(H_p ⊗ M_q) ⊕ Tor(H_{p−1}, M_q)`.
pub fn e2_page(e1: &SpectralPage) -> Result<SpectralPage, SpecSeqError> {
    if e1.page != 1 {
        return Err(SpecSeqError::WrongPage {
            expected: 1,
            found: e1.page,
        });
    }
    let h = &e1.context.nerve_homology;
    let mut entries = BTreeMap::new();
    for p in 0..=e1.dimension {
        for q in 0..2 {
            let m = e1.coefficient(q);
            let mut group = tensor(&h[p], m);
            if p > 0 {
                group = group.direct_sum(&tor(&h[p - 1], m));
            }
            entries.insert((p, q), group);
        }
    }
    Ok(SpectralPage {
        page: 2,
        dimension: e1.dimension,
        entries,
        differentials: BTreeMap::new(),
        context: e1.context.clone(),
    })
}

/// Homology of the `q`-th row of `E¹` at column `p`, computed directly from
/// the `d₁` maps rather than by universal coefficients.
pub fn row_homology(e1: &SpectralPage, p: usize, q: usize) -> Result<FgAbelianGroup, SpecSeqError> {
    if e1.page != 1 {
        return Err(SpecSeqError::WrongPage {
            expected: 1,
            found: e1.page,
        });
    }
    let here = e1.entry(p, q).clone();
    let incoming = match e1.differential(p + 1, q) {
        Some(d) => d.clone(),
        None => GroupMap::zero(FgAbelianGroup::trivial(), here.clone()),
    };
    let outgoing = match e1.differential(p, q) {
        Some(d) => d.clone(),
        None => GroupMap::zero(here, FgAbelianGroup::trivial()),
    };
    Ok(homology_at_middle(&incoming, &outgoing)?)
}

/// Attaches `d₂ : E²_{2,q} → E²_{0,q+1}`.
///
/// A trivial twist class gives `d₂ = 0`. A nontrivial class gives
/// `φ∗ − id` on `M_q = K_{q−1}(D)`, carried to `E²_{0,q+1}` by the
/// identifications through the fundamental cycle, the augmentation, and the
/// identity `M_q = M_{q+1}`. Nontrivial classes are only accepted on
/// nerves with the homology of a 2-sphere.
pub fn attach_d2(
    e2: &SpectralPage,
    nerve: &SimplicialComplex,
    cs: &CoefficientSystem,
    c: &Cocycle2,
) -> Result<SpectralPage, SpecSeqError> {
    if e2.page != 2 {
        return Err(SpecSeqError::WrongPage {
            expected: 2,
            found: e2.page,
        });
    }
    let class = cohomology_class(c, nerve)?;
    let mut page = e2.clone();
    page.differentials.clear();
    page.context.twist = Some(class.kind);

    if class.is_trivial() {
        for p in 2..=e2.dimension {
            for q in 0..2 {
                let tgt = (p - 2, (q + 1) % 2);
                let d = GroupMap::zero(e2.entries[&(p, q)].clone(), e2.entries[&tgt].clone());
                page.differentials.insert((p, q), d);
            }
        }
        return Ok(page);
    }

    check_sphere_like(nerve)?;
    if cs.k0 != cs.k1 {
        return Err(SpecSeqError::CoefficientDegreeMismatch {
            k0: cs.k0.clone(),
            k1: cs.k1.clone(),
        });
    }
    for q in 0..2 {
        // φ∗ acting on M_q = K_{q−1}(D).
        let twist = cs.phi((q + 1) % 2).subtract_identity()?;
        let src = e2.entries[&(2, q)].clone();
        let tgt = e2.entries[&(0, (q + 1) % 2)].clone();
        debug_assert_eq!(&src, twist.source());
        debug_assert_eq!(&tgt, twist.target());
        let d = GroupMap::new(src, tgt, twist.matrix().clone())?;
        page.differentials.insert((2, q), d);
    }
    Ok(page)
}

fn check_sphere_like(nerve: &SimplicialComplex) -> Result<(), SpecSeqError> {
    let unsupported = |why: &str| Err(SpecSeqError::TwistedRunUnsupported(why.to_string()));
    if !nerve.is_connected() {
        return unsupported("nerve is not connected");
    }
    if !nerve.is_closed_surface() {
        return unsupported("nerve is not a closed surface");
    }
    if nerve.fundamental_cycle().is_none() {
        return unsupported("nerve has no fundamental cycle (not orientable)");
    }
    if nerve.euler_characteristic() != 2 {
        return unsupported("nerve is a closed orientable surface of positive genus, not a sphere");
    }
    Ok(())
}

/// `E³ = E^∞` for nerves of dimension at most two: `(2, q)` becomes `ker d₂`,
/// `(0, q)` becomes the cokernel of the `d₂` arriving from `(2, q − 1)`.
pub fn e_infinity(page: &SpectralPage) -> Result<SpectralPage, SpecSeqError> {
    if page.page != 2 {
        return Err(SpecSeqError::WrongPage {
            expected: 2,
            found: page.page,
        });
    }
    if page.dimension > 2 {
        return Err(SpecSeqError::UnsupportedDimension {
            dimension: page.dimension,
        });
    }
    let mut entries = page.entries.clone();
    for (&(p, q), d) in &page.differentials {
        debug_assert_eq!(p, 2);
        entries.insert((p, q), d.kernel());
        entries.insert((0, (q + 1) % 2), d.cokernel());
    }
    Ok(SpectralPage {
        page: 3,
        dimension: page.dimension,
        entries,
        differentials: BTreeMap::new(),
        context: page.context.clone(),
    })
}
