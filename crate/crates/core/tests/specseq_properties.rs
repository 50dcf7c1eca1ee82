mod common;

use common::{octahedron, small_complex, tetrahedron_boundary};
use mvkt_core::oracle::betti_mod_p;
use mvkt_core::specseq::{attach_d2, e1_page, e2_page, e_infinity, row_homology, run_pipeline, Resolution};
use mvkt_core::{Cocycle2, CoefficientSystem, FgAbelianGroup, IntMatrix, SimplicialComplex, Verdict};
use num_bigint::BigInt;
use proptest::prelude::*;

fn coefficients() -> impl Strategy<Value = CoefficientSystem> {
    let group = prop::collection::vec(0i64..=6, 0..=2)
        .prop_map(|o| FgAbelianGroup::from_cyclic_orders(o.into_iter().map(BigInt::from)));
    (group.clone(), group).prop_map(|(k0, k1)| {
        let (i0, i1) = (
            IntMatrix::identity(k0.num_generators()),
            IntMatrix::identity(k1.num_generators()),
        );
        CoefficientSystem::from_matrices(k0, k1, i0, i1, false).unwrap()
    })
}

fn prime_cyclic(p: i64) -> CoefficientSystem {
    let g = FgAbelianGroup::cyclic(p);
    let id = IntMatrix::identity(1);
    CoefficientSystem::from_matrices(g.clone(), g, id.clone(), id, false).unwrap()
}

/// Cone over a complex of dimension ≤ 1: contractible, dimension ≤ 2.
fn cone(base: &SimplicialComplex) -> SimplicialComplex {
    let apex = base.vertex_count();
    let mut maxima: Vec<Vec<usize>> = vec![vec![apex]];
    for p in 0..=base.dimension().unwrap_or(0).min(1) {
        for s in base.simplices(p) {
            let mut t = s.clone();
            t.push(apex);
            maxima.push(t);
        }
    }
    SimplicialComplex::from_maximal_simplices(apex + 1, maxima).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn d1_squares_to_zero(c in small_complex(12), cs in coefficients()) {
        prop_assume!(!c.is_empty());
        let e1 = e1_page(&c, &cs).unwrap();
        prop_assert_eq!(e1.check(), Ok(()));
    }

    #[test]
    fn universal_coefficients_match_direct_row_homology(c in small_complex(12), cs in coefficients()) {
        prop_assume!(!c.is_empty());
        let e1 = e1_page(&c, &cs).unwrap();
        let e2 = e2_page(&e1).unwrap();
        for (&(p, q), g) in e2.entries() {
            prop_assert_eq!(g, &row_homology(&e1, p, q).unwrap());
        }
    }

    #[test]
    fn universal_coefficients_match_mod_p_rows(c in small_complex(12), p in prop::sample::select(vec![2i64, 3, 5])) {
        prop_assume!(!c.is_empty());
        let e2 = e2_page(&e1_page(&c, &prime_cyclic(p)).unwrap()).unwrap();
        for (&(k, _), g) in e2.entries() {
            let dim = betti_mod_p(&c, k, p as u64);
            prop_assert_eq!(g, &FgAbelianGroup::cyclic(p).power(dim));
        }
    }

    #[test]
    fn coboundary_twists_change_nothing(edges in prop::collection::vec(any::<bool>(), 12)) {
        let oct = octahedron();
        let cs = CoefficientSystem::cyclic_three();
        let untwisted = run_pipeline(&oct, &cs, &Cocycle2::zero(&oct)).unwrap();
        let shifted = run_pipeline(&oct, &cs, &Cocycle2::coboundary_of(&oct, &edges)).unwrap();
        prop_assert_eq!(&shifted.e1, &untwisted.e1);
        prop_assert_eq!(&shifted.e2, &untwisted.e2);
        prop_assert_eq!(&shifted.e3, &untwisted.e3);
        prop_assert_eq!(&shifted.assembled, &untwisted.assembled);
    }

    #[test]
    fn contractible_nerves_collapse(base in small_complex(8), cs in coefficients()) {
        prop_assume!(!base.is_empty() && base.is_connected());
        let nerve = cone(&base);
        let out = run_pipeline(&nerve, &cs, &Cocycle2::zero(&nerve)).unwrap();
        for n in 0..2 {
            // K_n(A) ≅ K_{n−1}(D).
            prop_assert_eq!(out.assembled.degree(n).determined(), Some(cs.k(n + 1)));
        }
    }
}

#[test]
fn contractible_nerve_ignores_twist_data() {
    // Every 2-cocycle on a cone is a coboundary.
    let nerve = cone(&common::hollow_triangle());
    let cs = CoefficientSystem::cyclic_three();
    for mask in 0u32..8 {
        let c = Cocycle2::from_values(&nerve, (0..3).map(|i| mask >> i & 1 == 1).collect()).unwrap();
        let out = run_pipeline(&nerve, &cs, &c).unwrap();
        assert!(out.class.is_trivial());
        assert_eq!(out.assembled.degree(0).determined(), Some(&FgAbelianGroup::cyclic(3)));
    }
}

#[test]
fn phi_enters_only_through_its_matrix() {
    let oct = octahedron();
    let z3 = FgAbelianGroup::cyclic(3);
    let a = CoefficientSystem::from_matrices(
        z3.clone(),
        z3.clone(),
        IntMatrix::from_i64(&[&[-1]]),
        IntMatrix::from_i64(&[&[2]]),
        true,
    )
    .unwrap();
    let b = CoefficientSystem::from_matrices(
        z3.clone(),
        z3,
        IntMatrix::from_i64(&[&[5]]),
        IntMatrix::from_i64(&[&[-4]]),
        true,
    )
    .unwrap();
    let c = Cocycle2::indicator(&oct, &[0, 2, 4]).unwrap();
    assert_eq!(run_pipeline(&oct, &a, &c).unwrap(), run_pipeline(&oct, &b, &c).unwrap());
}

#[test]
fn two_set_cover_is_mayer_vietoris() {
    // Interval cover: E² is ker/coker of the restriction difference (a, −a).
    let nerve = SimplicialComplex::from_maximal_simplices(2, [[0, 1]]).unwrap();
    let cs = CoefficientSystem::cyclic_three();
    let e1 = e1_page(&nerve, &cs).unwrap();
    assert_eq!(e1.differentials().len(), 2);
    let e2 = e2_page(&e1).unwrap();
    for q in 0..2 {
        let d = e1.differential(1, q).unwrap();
        assert_eq!(e2.entry(0, q), &d.cokernel());
        assert_eq!(e2.entry(1, q), &d.kernel());
        assert_eq!(d.image(), FgAbelianGroup::cyclic(3));
    }
}

#[test]
fn twisted_sphere_pages() {
    for nerve in [octahedron(), tetrahedron_boundary()] {
        let cs = CoefficientSystem::cyclic_three();
        let first = nerve.simplices(2)[0].clone();
        let out = run_pipeline(&nerve, &cs, &Cocycle2::indicator(&nerve, &first).unwrap()).unwrap();
        assert!(!out.class.is_trivial());
        for q in 0..2 {
            assert_eq!(
                out.e2.differential(2, q).unwrap().matrix(),
                &IntMatrix::from_i64(&[&[1]])
            );
        }
        assert!(out.e3.entries().values().all(FgAbelianGroup::is_trivial));
        assert_eq!(out.report.verdict, Verdict::ObstructionProven);
        for n in 0..2 {
            assert!(matches!(
                out.baseline.degree(n).resolution,
                Resolution::Determined { .. }
            ));
            assert_eq!(
                out.baseline.degree(n).determined(),
                Some(&FgAbelianGroup::cyclic(3).power(2))
            );
        }
    }
}

#[test]
fn untwisted_page_is_stable() {
    let oct = octahedron();
    let cs = CoefficientSystem::cyclic_three();
    let e2 = e2_page(&e1_page(&oct, &cs).unwrap()).unwrap();
    let page = attach_d2(&e2, &oct, &cs, &Cocycle2::zero(&oct)).unwrap();
    assert_eq!(e_infinity(&page).unwrap().entries(), e2.entries());
}
