//! Built-in scenarios. All use `K₀ = K₁ = ℤ/3` with `φ∗ = −1`.

use crate::error::{Category, CliError};
use crate::scenario::{CocycleEntry, CocycleSpec, CoefficientsSpec, NerveSource, Options, Scenario, SCHEMA};

pub const NAMES: [&str; 6] = [
    "interval-2cover",
    "interval-3cover",
    "circle-3cover",
    "sphere-octahedron-untwisted",
    "sphere-octahedron-twisted",
    "sphere-tetrahedron-twisted",
];

/// Octahedron: antipodal pairs (0,1), (2,3), (4,5); one triangle per choice
/// of a vertex from each pair.
fn octahedron() -> NerveSource {
    let mut simplices = Vec::new();
    for a in [0, 1] {
        for b in [2, 3] {
            for c in [4, 5] {
                simplices.push(vec![a, b, c]);
            }
        }
    }
    NerveSource::MaximalSimplices {
        vertex_count: 6,
        simplices,
    }
}

fn tetrahedron_boundary() -> NerveSource {
    NerveSource::MaximalSimplices {
        vertex_count: 4,
        simplices: vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]],
    }
}

fn cover(ground_set_size: usize, sets: &[&[usize]]) -> NerveSource {
    NerveSource::Cover {
        ground_set_size,
        sets: sets.iter().map(|s| s.to_vec()).collect(),
    }
}

fn single_triangle(simplex: [usize; 3]) -> CocycleSpec {
    CocycleSpec::Values(vec![CocycleEntry {
        simplex: simplex.to_vec(),
        bit: 1,
    }])
}

pub fn scenario(name: &str) -> Result<Scenario, CliError> {
    let (description, nerve, cocycle) = match name {
        "interval-2cover" => (
            "[0,1] covered by two overlapping intervals; the nerve is one edge",
            cover(3, &[&[0, 1], &[1, 2]]),
            CocycleSpec::Trivial,
        ),
        "interval-3cover" => (
            "[0,1] covered by three intervals in a chain; the nerve is a path",
            cover(4, &[&[0, 1], &[1, 2], &[2, 3]]),
            CocycleSpec::Trivial,
        ),
        "circle-3cover" => (
            "circle covered by three arcs meeting pairwise; the nerve is a hollow triangle",
            cover(6, &[&[0, 1, 2], &[2, 3, 4], &[4, 5, 0]]),
            CocycleSpec::Trivial,
        ),
        "sphere-octahedron-untwisted" => (
            "2-sphere covered by six caps with octahedral nerve, zero cocycle",
            octahedron(),
            CocycleSpec::Trivial,
        ),
        "sphere-octahedron-twisted" => (
            "2-sphere covered by six caps with octahedral nerve, cocycle supported on one triangle",
            octahedron(),
            single_triangle([0, 2, 4]),
        ),
        "sphere-tetrahedron-twisted" => (
            "2-sphere covered by four caps with tetrahedral nerve, cocycle supported on one triangle",
            tetrahedron_boundary(),
            single_triangle([0, 1, 2]),
        ),
        _ => {
            return Err(CliError::new(
                Category::Schema,
                "cli.UnknownCatalogEntry",
                format!("no catalog entry {name:?}; available: {}", NAMES.join(", ")),
            ))
        }
    };
    Ok(Scenario {
        schema: SCHEMA.to_string(),
        name: Some(name.to_string()),
        description: Some(description.to_string()),
        nerve,
        coefficients: Some(CoefficientsSpec::cyclic_three()),
        cocycle,
        options: Options::default(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_resolves() {
        let expected: [&[usize]; 6] = [&[2, 1], &[3, 2], &[3, 3], &[6, 12, 8], &[6, 12, 8], &[4, 6, 4]];
        for (name, f) in NAMES.iter().zip(expected) {
            let s = scenario(name).unwrap();
            assert_eq!(s.resolve().unwrap().nerve.f_vector(), f, "{name}");
            assert_eq!(Scenario::from_json(&s.to_json()).unwrap(), s);
        }
    }

    #[test]
    fn unknown_name_lists_entries() {
        let e = scenario("torus").unwrap_err();
        assert_eq!(e.code, "cli.UnknownCatalogEntry");
        for name in NAMES {
            assert!(e.message.contains(name));
        }
    }
}
