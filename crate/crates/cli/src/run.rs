//! Orchestration shared by the binary and the tests.

use std::fs;
use std::path::Path;

use mvkt_core::specseq::run_pipeline;
use mvkt_core::Cocycle2;

use crate::catalog;
use crate::error::{Category, CliError};
use crate::report::{render_text, render_verification, Mode, RunReport};
use crate::scenario::{Format, Scenario};
use crate::verify::{verify, Verification};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RunFlags {
    pub dump_pages: bool,
    pub baseline_only: bool,
    pub verify: bool,
    pub format: Option<Format>,
}

impl RunFlags {
    /// Command-line flags OR-ed with the scenario's options.
    pub fn merged(self, scenario: &Scenario) -> RunFlags {
        let o = &scenario.options;
        RunFlags {
            dump_pages: self.dump_pages || o.dump_pages,
            baseline_only: self.baseline_only || o.baseline_only,
            verify: self.verify || o.verify,
            format: self.format.or(o.format),
        }
    }
}

/// Rendered output plus the exit status it should end with.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub text: String,
    pub exit_code: i32,
}

pub fn load(path: Option<&Path>, catalog_name: Option<&str>) -> Result<Scenario, CliError> {
    match (path, catalog_name) {
        (Some(_), Some(_)) => Err(CliError::new(
            Category::Usage,
            "cli.Usage",
            "give either a scenario file or --catalog, not both",
        )),
        (None, None) => Err(CliError::new(
            Category::Usage,
            "cli.Usage",
            "no scenario file or --catalog given",
        )),
        (None, Some(name)) => catalog::scenario(name),
        (Some(path), None) => {
            let text =
                fs::read_to_string(path).map_err(|e| CliError::io(format!("cannot read {}: {e}", path.display())))?;
            Scenario::from_json(&text)
        }
    }
}

/// Runs the full pipeline. Errors leave no partial report behind.
pub fn run_report(scenario: &Scenario, flags: RunFlags) -> Result<RunReport, CliError> {
    let flags = flags.merged(scenario);
    let inputs = scenario.resolve()?;
    let (mode, cocycle) = if flags.baseline_only {
        (Mode::BaselineOnly, Cocycle2::zero(&inputs.nerve))
    } else {
        (Mode::Twisted, inputs.cocycle.clone())
    };
    let out = run_pipeline(&inputs.nerve, &inputs.coefficients, &cocycle)?;
    let mut report = RunReport::build(scenario, &inputs.nerve, &inputs.coefficients, &out, mode);
    if flags.verify {
        report.verification = Some(verify(&inputs.nerve, &inputs.coefficients, &cocycle, &out));
    }
    Ok(report)
}

pub fn run(scenario: &Scenario, flags: RunFlags) -> Result<Outcome, CliError> {
    let report = run_report(scenario, flags)?;
    let flags = flags.merged(scenario);
    let text = match flags.format.unwrap_or_default() {
        Format::Json => report.to_json(),
        Format::Text => render_text(&report, flags.dump_pages),
    };
    let disagreed = report.verification.as_ref().is_some_and(|v| !v.agreed);
    Ok(Outcome {
        text,
        exit_code: if disagreed {
            Category::Disagreement.exit_code()
        } else {
            0
        },
    })
}

pub fn verify_scenario(scenario: &Scenario) -> Result<Verification, CliError> {
    let flags = RunFlags {
        verify: true,
        ..RunFlags::default()
    };
    let report = run_report(scenario, flags)?;
    Ok(report.verification.expect("requested"))
}

pub fn verify_outcome(scenario: &Scenario, format: Option<Format>) -> Result<Outcome, CliError> {
    let v = verify_scenario(scenario)?;
    let text = match format.or(scenario.options.format).unwrap_or_default() {
        Format::Json => serde_json::to_string_pretty(&v).expect("plain data") + "\n",
        Format::Text => render_verification(&v),
    };
    Ok(Outcome {
        text,
        exit_code: if v.agreed {
            0
        } else {
            Category::Disagreement.exit_code()
        },
    })
}
