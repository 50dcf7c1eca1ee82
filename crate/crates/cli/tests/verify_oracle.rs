use mvkt_cli::catalog::{self, NAMES};
use mvkt_cli::scenario::{CocycleSpec, CoefficientsSpec, GroupSpec, NerveSource, Scenario};
use mvkt_cli::verify::CheckStatus;
use mvkt_cli::{verify, verify_scenario};
use mvkt_core::specseq::run_pipeline;
use mvkt_core::FgAbelianGroup;
use proptest::prelude::*;

#[test]
fn catalog_scenarios_agree_with_oracles() {
    for name in NAMES {
        let v = verify_scenario(&catalog::scenario(name).unwrap()).unwrap();
        assert!(v.agreed, "{name}: {v:?}");
        assert!(v.checks.iter().all(|c| c.status == CheckStatus::Agree), "{name}");
    }
}

#[test]
fn corrupted_page_is_reported() {
    let inputs = catalog::scenario("sphere-octahedron-twisted")
        .unwrap()
        .resolve()
        .unwrap();
    let mut out = run_pipeline(&inputs.nerve, &inputs.coefficients, &inputs.cocycle).unwrap();
    assert!(verify(&inputs.nerve, &inputs.coefficients, &inputs.cocycle, &out).agreed);
    out.e2.corrupt_entry((1, 0), FgAbelianGroup::cyclic(3));
    let v = verify(&inputs.nerve, &inputs.coefficients, &inputs.cocycle, &out);
    assert!(!v.agreed);
    let bad: Vec<&str> = v
        .checks
        .iter()
        .filter(|c| c.status == CheckStatus::Disagree)
        .map(|c| c.name.as_str())
        .collect();
    assert_eq!(bad, ["E2[1,0]"]);
}

#[test]
fn wrong_class_is_reported() {
    let inputs = catalog::scenario("sphere-tetrahedron-twisted")
        .unwrap()
        .resolve()
        .unwrap();
    let mut out = run_pipeline(&inputs.nerve, &inputs.coefficients, &inputs.cocycle).unwrap();
    out.class.kind = mvkt_core::ClassKind::Trivial;
    let v = verify(&inputs.nerve, &inputs.coefficients, &inputs.cocycle, &out);
    assert!(!v.agreed);
    assert_eq!(v.checks.last().unwrap().status, CheckStatus::Disagree);
}

#[test]
fn composite_coefficients_skip_row_checks() {
    let mut s = catalog::scenario("circle-3cover").unwrap();
    let z6 = GroupSpec::of(&FgAbelianGroup::cyclic(6));
    s.coefficients = Some(CoefficientsSpec {
        k0: z6.clone(),
        k1: z6,
        phi0: vec![vec![5.into()]],
        phi1: vec![vec![1.into()]],
        assumption_k: false,
    });
    let v = verify_scenario(&s).unwrap();
    assert!(v.agreed);
    assert!(v.checks.iter().any(|c| c.status == CheckStatus::Skipped));
}

fn random_scenario() -> impl Strategy<Value = Scenario> {
    let simplex = prop::collection::btree_set(0usize..6, 1..=3).prop_map(|s| s.into_iter().collect::<Vec<_>>());
    (
        prop::collection::vec(simplex, 1..6),
        prop::sample::select(vec![2i64, 3, 5, 7]),
    )
        .prop_map(|(simplices, p)| {
            let g = GroupSpec::of(&FgAbelianGroup::cyclic(p));
            Scenario {
                schema: "mvkt/1".into(),
                name: None,
                description: None,
                nerve: NerveSource::MaximalSimplices {
                    vertex_count: 6,
                    simplices,
                },
                coefficients: Some(CoefficientsSpec {
                    k0: g.clone(),
                    k1: g,
                    phi0: vec![vec![(p - 1).into()]],
                    phi1: vec![vec![1.into()]],
                    assumption_k: false,
                }),
                cocycle: CocycleSpec::Trivial,
                options: Default::default(),
            }
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_prime_cyclic_runs_agree(s in random_scenario()) {
        let v = verify_scenario(&s).unwrap();
        prop_assert!(v.agreed, "{:?}", v);
        let skipped = v.checks.iter().filter(|c| c.status == CheckStatus::Skipped).count();
        let edges = s.resolve().unwrap().nerve.count(1);
        prop_assert_eq!(skipped, usize::from(edges > 16));
    }
}
