//! Scenario files: the JSON input format and its translation into validated
//! pipeline inputs.

use mvkt_core::{
    nerve_of_cover, Cocycle2, CoefficientSystem, CoverDescription, FgAbelianGroup, IntMatrix, SimplicialComplex,
};
use num_bigint::BigInt;
use num_traits::Signed;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::catalog;
use crate::error::CliError;
use crate::int::Int;

pub const SCHEMA: &str = "mvkt/1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    pub schema: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    pub nerve: NerveSource,
    /// Defaults to `K₀ = K₁ = ℤ/3` with `φ∗ = −1`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coefficients: Option<CoefficientsSpec>,
    #[serde(default)]
    pub cocycle: CocycleSpec,
    #[serde(default)]
    pub options: Options,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum NerveSource {
    MaximalSimplices {
        vertex_count: usize,
        simplices: Vec<Vec<usize>>,
    },
    Cover {
        ground_set_size: usize,
        sets: Vec<Vec<usize>>,
    },
    /// The nerve of a catalog scenario; its coefficients and cocycle are not
    /// inherited.
    Catalog(String),
}

/// `ℤ^rank ⊕ ⨁ ℤ/torsionᵢ`. Torsion orders may come in any order and may
/// include 1; they are put into invariant-factor form on load.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSpec {
    #[serde(default)]
    pub rank: usize,
    #[serde(default)]
    pub torsion: Vec<Int>,
}

impl GroupSpec {
    pub fn of(group: &FgAbelianGroup) -> Self {
        GroupSpec {
            rank: group.free_rank(),
            torsion: group.invariant_factors().iter().map(Int::from).collect(),
        }
    }

    pub fn to_group(&self) -> Result<FgAbelianGroup, CliError> {
        if let Some(bad) = self.torsion.iter().find(|t| !t.0.is_positive()) {
            return Err(CliError::schema(format!("torsion order {bad} is not positive")));
        }
        let torsion = FgAbelianGroup::from_cyclic_orders(self.torsion.iter().map(|t| t.0.clone()));
        Ok(FgAbelianGroup::free(self.rank).direct_sum(&torsion))
    }
}

/// Coefficient K-groups and the action of `φ` on canonical generators
/// (free generators first, then one per invariant factor).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoefficientsSpec {
    pub k0: GroupSpec,
    pub k1: GroupSpec,
    pub phi0: Vec<Vec<Int>>,
    pub phi1: Vec<Vec<Int>>,
    #[serde(default)]
    pub assumption_k: bool,
}

impl CoefficientsSpec {
    pub fn cyclic_three() -> Self {
        let minus = vec![vec![Int::from(-1)]];
        let z3 = GroupSpec {
            rank: 0,
            torsion: vec![Int::from(3)],
        };
        CoefficientsSpec {
            k0: z3.clone(),
            k1: z3,
            phi0: minus.clone(),
            phi1: minus,
            assumption_k: true,
        }
    }

    pub fn to_system(&self) -> Result<CoefficientSystem, CliError> {
        let k0 = self.k0.to_group().map_err(|e| e.at("coefficients.k0"))?;
        let k1 = self.k1.to_group().map_err(|e| e.at("coefficients.k1"))?;
        let phi0 = matrix(&self.phi0).map_err(|e| e.at("coefficients.phi0"))?;
        let phi1 = matrix(&self.phi1).map_err(|e| e.at("coefficients.phi1"))?;
        let cs = CoefficientSystem::from_matrices(k0, k1, phi0, phi1, self.assumption_k)?;
        Ok(cs)
    }
}

fn matrix(rows: &[Vec<Int>]) -> Result<IntMatrix, CliError> {
    let cols = rows.first().map_or(0, Vec::len);
    if let Some(i) = rows.iter().position(|r| r.len() != cols) {
        return Err(CliError::schema(format!(
            "row {i} has {} entries, row 0 has {cols}",
            rows[i].len()
        )));
    }
    Ok(IntMatrix::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|x| x.0.clone()).collect::<Vec<BigInt>>()),
        cols,
    ))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CocycleEntry {
    pub simplex: Vec<usize>,
    pub bit: i64,
}

/// `"trivial"` or a list of `{simplex, bit}` entries; unlisted 2-simplices
/// carry 0.
#[derive(Debug, Clone, PartialEq, Eq, Default, Deserialize)]
#[serde(try_from = "Value")]
pub enum CocycleSpec {
    #[default]
    Trivial,
    Values(Vec<CocycleEntry>),
}

impl TryFrom<Value> for CocycleSpec {
    type Error = String;

    fn try_from(v: Value) -> Result<Self, String> {
        match v {
            Value::String(s) if s == "trivial" => Ok(CocycleSpec::Trivial),
            Value::Array(_) => serde_json::from_value(v)
                .map(CocycleSpec::Values)
                .map_err(|e| format!("cocycle entries: {e}")),
            other => Err(format!(
                "cocycle must be \"trivial\" or a list of {{simplex, bit}}, got {other}"
            )),
        }
    }
}

impl Serialize for CocycleSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            CocycleSpec::Trivial => s.serialize_str("trivial"),
            CocycleSpec::Values(entries) => entries.serialize(s),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Format {
    #[default]
    Json,
    Text,
}

/// Report flags. Command-line flags are OR-ed in; `--format` overrides.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Options {
    #[serde(default)]
    pub dump_pages: bool,
    #[serde(default)]
    pub baseline_only: bool,
    #[serde(default)]
    pub verify: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub format: Option<Format>,
}

/// Validated inputs of one run.
#[derive(Debug, Clone)]
pub struct Inputs {
    pub nerve: SimplicialComplex,
    pub coefficients: CoefficientSystem,
    pub cocycle: Cocycle2,
}

impl Scenario {
    /// Parses and checks the schema tag. Errors carry line and column.
    pub fn from_json(text: &str) -> Result<Scenario, CliError> {
        let scenario: Scenario = serde_json::from_str(text).map_err(|e| CliError::schema(e.to_string()))?;
        if scenario.schema != SCHEMA {
            return Err(CliError::schema(format!(
                "unsupported schema {:?}, expected {SCHEMA:?}",
                scenario.schema
            )));
        }
        Ok(scenario)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data")
    }

    pub fn nerve(&self) -> Result<SimplicialComplex, CliError> {
        let nerve = match &self.nerve {
            NerveSource::MaximalSimplices {
                vertex_count,
                simplices,
            } => SimplicialComplex::from_maximal_simplices(*vertex_count, simplices)?,
            NerveSource::Cover { ground_set_size, sets } => nerve_of_cover(&CoverDescription::new(
                *ground_set_size,
                sets.iter().map(|s| s.iter().copied()),
            )?)?,
            // Catalog entries spell out their nerves, so this recurses once.
            NerveSource::Catalog(name) => return catalog::scenario(name)?.nerve(),
        };
        Ok(nerve)
    }

    pub fn coefficients(&self) -> Result<CoefficientSystem, CliError> {
        match &self.coefficients {
            Some(spec) => spec.to_system(),
            None => Ok(CoefficientSystem::cyclic_three()),
        }
    }

    pub fn resolve(&self) -> Result<Inputs, CliError> {
        let nerve = self.nerve().map_err(|e| e.at("nerve"))?;
        let coefficients = self.coefficients()?;
        let cocycle = match &self.cocycle {
            CocycleSpec::Trivial => Cocycle2::zero(&nerve),
            CocycleSpec::Values(entries) => Cocycle2::from_pairs(&nerve, entries.iter().map(|e| (&e.simplex, e.bit)))
                .map_err(|e| CliError::from(e).at("cocycle"))?,
        };
        Ok(Inputs {
            nerve,
            coefficients,
            cocycle,
        })
    }
}
