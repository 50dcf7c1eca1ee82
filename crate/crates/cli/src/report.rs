//! The run report: a serializable snapshot of one pipeline run, and its
//! plain-text rendering.

use std::fmt::Write;

use mvkt_core::specseq::{DegreeAssembly, ResolutionRule};
use mvkt_core::{
    AssembledKTheory, ClassKind, CoefficientSystem, GroupMap, PipelineOutput, Resolution, SimplicialComplex,
    SpectralPage, Verdict,
};
use serde::{Deserialize, Serialize};

use crate::int::Int;
use crate::scenario::{CoefficientsSpec, GroupSpec, Scenario, SCHEMA};
use crate::verify::{CheckStatus, Verification};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Twisted,
    /// Only the untwisted gluing was computed; the cocycle was ignored.
    BaselineOnly,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NerveSummary {
    pub vertex_count: usize,
    pub f_vector: Vec<usize>,
    pub euler_characteristic: i64,
    /// `H_p(nerve; ℤ)`.
    pub homology: Vec<GroupSpec>,
}

impl NerveSummary {
    pub fn of(nerve: &SimplicialComplex) -> Self {
        NerveSummary {
            vertex_count: nerve.vertex_count(),
            f_vector: nerve.f_vector(),
            euler_characteristic: nerve.euler_characteristic(),
            homology: nerve.chain_complex().homology().iter().map(GroupSpec::of).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryReport {
    pub p: usize,
    pub q: usize,
    pub group: GroupSpec,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DifferentialReport {
    pub source: [usize; 2],
    pub target: [usize; 2],
    /// On canonical generators, entries reduced into `[0, order)`.
    pub matrix: Vec<Vec<Int>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PageReport {
    pub page: u32,
    pub entries: Vec<EntryReport>,
    pub differentials: Vec<DifferentialReport>,
}

fn matrix_of(map: &GroupMap) -> Vec<Vec<Int>> {
    map.matrix()
        .to_rows()
        .into_iter()
        .map(|r| r.into_iter().map(Int).collect())
        .collect()
}

impl PageReport {
    pub fn of(page: &SpectralPage) -> Self {
        PageReport {
            page: page.page(),
            entries: page
                .entries()
                .iter()
                .map(|(&(p, q), g)| EntryReport {
                    p,
                    q,
                    group: GroupSpec::of(g),
                })
                .collect(),
            differentials: page
                .differentials()
                .iter()
                .map(|(&(p, q), d)| {
                    let (tp, tq) = page.target_slot((p, q)).expect("differential has a target");
                    DifferentialReport {
                        source: [p, q],
                        target: [tp, tq],
                        matrix: matrix_of(d),
                    }
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassKindReport {
    Trivial,
    Nontrivial,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassReport {
    pub kind: ClassKindReport,
    pub h2_dimension_mod2: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RuleReport {
    SinglePiece,
    CoprimeOrders,
    KunnethSplit,
}

impl RuleReport {
    pub fn as_str(self) -> &'static str {
        match self {
            RuleReport::SinglePiece => "single_piece",
            RuleReport::CoprimeOrders => "coprime_orders",
            RuleReport::KunnethSplit => "kunneth_split",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum ResolutionReport {
    Determined { group: GroupSpec, rule: RuleReport },
    Ambiguous,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeReport {
    pub n: usize,
    pub graded_pieces: Vec<GroupSpec>,
    pub resolution: ResolutionReport,
}

impl DegreeReport {
    fn of(n: usize, d: &DegreeAssembly) -> Self {
        let resolution = match &d.resolution {
            Resolution::Determined { group, rule } => ResolutionReport::Determined {
                group: GroupSpec::of(group),
                rule: match rule {
                    ResolutionRule::SinglePiece => RuleReport::SinglePiece,
                    ResolutionRule::CoprimeOrders => RuleReport::CoprimeOrders,
                    ResolutionRule::KunnethSplit => RuleReport::KunnethSplit,
                },
            },
            Resolution::Ambiguous => ResolutionReport::Ambiguous,
        };
        DegreeReport {
            n,
            graded_pieces: d.graded_pieces.iter().map(GroupSpec::of).collect(),
            resolution,
        }
    }

    pub fn determined(&self) -> Option<&GroupSpec> {
        match &self.resolution {
            ResolutionReport::Determined { group, .. } => Some(group),
            ResolutionReport::Ambiguous => None,
        }
    }
}

pub fn assembly_of(k: &AssembledKTheory) -> Vec<DegreeReport> {
    (0..2).map(|n| DegreeReport::of(n, k.degree(n))).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VerdictReport {
    ObstructionProven,
    NoObstructionDetected,
    Inconclusive,
}

impl VerdictReport {
    pub fn as_str(self) -> &'static str {
        match self {
            VerdictReport::ObstructionProven => "obstruction_proven",
            VerdictReport::NoObstructionDetected => "no_obstruction_detected",
            VerdictReport::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionSection {
    pub verdict: VerdictReport,
    pub reasons: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Annotations {
    /// Contractibility of intersections is assumed, never checked.
    pub good_cover: String,
    pub assumption_k: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunReport {
    pub schema: String,
    pub mode: Mode,
    pub scenario: Scenario,
    pub nerve: NerveSummary,
    /// Coefficients after canonicalization.
    pub coefficients: CoefficientsSpec,
    /// `E¹` with `d₁`, `E²` with `d₂`, `E³ = E^∞`.
    pub pages: Vec<PageReport>,
    pub class: Option<ClassReport>,
    pub assembled: Option<Vec<DegreeReport>>,
    pub baseline: Vec<DegreeReport>,
    pub obstruction: Option<ObstructionSection>,
    pub annotations: Annotations,
    pub verification: Option<Verification>,
}

pub fn coefficients_of(cs: &CoefficientSystem) -> CoefficientsSpec {
    CoefficientsSpec {
        k0: GroupSpec::of(&cs.k0),
        k1: GroupSpec::of(&cs.k1),
        phi0: matrix_of(&cs.phi0),
        phi1: matrix_of(&cs.phi1),
        assumption_k: cs.assumption_k,
    }
}

impl RunReport {
    /// In baseline-only mode `out` must come from the zero cocycle.
    pub fn build(
        scenario: &Scenario,
        nerve: &SimplicialComplex,
        cs: &CoefficientSystem,
        out: &PipelineOutput,
        mode: Mode,
    ) -> Self {
        let twisted = mode == Mode::Twisted;
        let class = ClassReport {
            kind: match out.class.kind {
                ClassKind::Trivial => ClassKindReport::Trivial,
                ClassKind::Nontrivial => ClassKindReport::Nontrivial,
            },
            h2_dimension_mod2: out.class.h2_dimension_mod2,
        };
        let obstruction = ObstructionSection {
            verdict: match out.report.verdict {
                Verdict::ObstructionProven => VerdictReport::ObstructionProven,
                Verdict::NoObstructionDetected => VerdictReport::NoObstructionDetected,
                Verdict::Inconclusive => VerdictReport::Inconclusive,
            },
            reasons: out.report.reasons.clone(),
        };
        RunReport {
            schema: SCHEMA.to_string(),
            mode,
            scenario: scenario.clone(),
            nerve: NerveSummary::of(nerve),
            coefficients: coefficients_of(cs),
            pages: [&out.e1, &out.e2, &out.e3].into_iter().map(PageReport::of).collect(),
            class: twisted.then_some(class),
            assembled: twisted.then(|| assembly_of(&out.assembled)),
            baseline: assembly_of(&out.baseline),
            obstruction: twisted.then_some(obstruction),
            annotations: Annotations {
                good_cover: "unchecked".to_string(),
                assumption_k: cs.assumption_k,
            },
            verification: None,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    pub fn verdict(&self) -> Option<VerdictReport> {
        self.obstruction.as_ref().map(|o| o.verdict)
    }
}

pub fn group_text(g: &GroupSpec) -> String {
    g.to_group().map_or_else(|_| "?".to_string(), |g| g.to_string())
}

fn matrix_text(m: &[Vec<Int>]) -> String {
    let rows: Vec<String> = m
        .iter()
        .map(|r| r.iter().map(Int::to_string).collect::<Vec<_>>().join(" "))
        .collect();
    format!("[{}]", rows.join("; "))
}

fn page_grid(out: &mut String, page: &PageReport) {
    let width = page.entries.iter().map(|e| e.p + 1).max().unwrap_or(0);
    let mut cells = vec![vec![String::new(); width]; 2];
    for e in &page.entries {
        cells[e.q][e.p] = group_text(&e.group);
    }
    let header: Vec<String> = (0..width).map(|p| format!("p={p}")).collect();
    let col = |p: usize| {
        cells
            .iter()
            .map(|r| r[p].chars().count())
            .chain([header[p].chars().count()])
            .max()
            .unwrap_or(0)
    };
    let pad = |s: &str, w: usize| format!("{s}{}", " ".repeat(w - s.chars().count()));
    let mut line = String::from("        ");
    for (p, h) in header.iter().enumerate() {
        line += &pad(h, col(p) + 2);
    }
    let _ = writeln!(out, "{}", line.trim_end());
    for q in (0..2).rev() {
        let mut line = format!("  q={q}   ");
        for (p, cell) in cells[q].iter().enumerate() {
            line += &pad(cell, col(p) + 2);
        }
        let _ = writeln!(out, "{}", line.trim_end());
    }
}

fn degrees_text(out: &mut String, label: &str, degrees: &[DegreeReport]) {
    for d in degrees {
        let pieces: Vec<String> = d.graded_pieces.iter().map(group_text).collect();
        let resolved = match &d.resolution {
            ResolutionReport::Determined { group, rule } => {
                format!("{} ({})", group_text(group), rule.as_str())
            }
            ResolutionReport::Ambiguous => "ambiguous".to_string(),
        };
        let _ = writeln!(out, "  {label}K_{}: graded [{}] => {resolved}", d.n, pieces.join(", "));
    }
}

/// Human-readable summary. With `dump_pages` every page and differential is
/// listed; otherwise only `E^∞`.
pub fn render_text(r: &RunReport, dump_pages: bool) -> String {
    let mut out = String::new();
    let mode = match r.mode {
        Mode::Twisted => "twisted",
        Mode::BaselineOnly => "baseline only",
    };
    let _ = writeln!(out, "{} report ({mode})", r.schema);
    if let Some(name) = &r.scenario.name {
        let _ = writeln!(out, "scenario: {name}");
    }
    let homology: Vec<String> = r.nerve.homology.iter().map(group_text).collect();
    let f: Vec<String> = r.nerve.f_vector.iter().map(usize::to_string).collect();
    let _ = writeln!(
        out,
        "nerve: {} vertices, f-vector ({}), euler characteristic {}, H_* = ({})",
        r.nerve.vertex_count,
        f.join(", "),
        r.nerve.euler_characteristic,
        homology.join(", ")
    );
    let c = &r.coefficients;
    let _ = writeln!(
        out,
        "coefficients: K_0(D) = {}, K_1(D) = {}, phi0 = {}, phi1 = {}",
        group_text(&c.k0),
        group_text(&c.k1),
        matrix_text(&c.phi0),
        matrix_text(&c.phi1)
    );
    if let Some(class) = &r.class {
        let kind = match class.kind {
            ClassKindReport::Trivial => "trivial",
            ClassKindReport::Nontrivial => "nontrivial",
        };
        let _ = writeln!(
            out,
            "cocycle class: {kind} (dim H^2(nerve; Z/2) = {})",
            class.h2_dimension_mod2
        );
    }
    let _ = writeln!(out);
    let shown: Vec<&PageReport> = if dump_pages {
        r.pages.iter().collect()
    } else {
        r.pages.last().into_iter().collect()
    };
    for page in shown {
        let last = page.page as usize == r.pages.len();
        let _ = writeln!(out, "E^{}{}", page.page, if last { " = E^inf" } else { "" });
        page_grid(&mut out, page);
        if dump_pages {
            for d in &page.differentials {
                let _ = writeln!(
                    out,
                    "  d_{} ({},{}) -> ({},{}): {}",
                    page.page,
                    d.source[0],
                    d.source[1],
                    d.target[0],
                    d.target[1],
                    matrix_text(&d.matrix)
                );
            }
        }
        let _ = writeln!(out);
    }
    if let Some(assembled) = &r.assembled {
        let _ = writeln!(out, "twisted gluing:");
        degrees_text(&mut out, "", assembled);
    }
    let _ = writeln!(out, "untwisted gluing:");
    degrees_text(&mut out, "", &r.baseline);
    if let Some(o) = &r.obstruction {
        let _ = writeln!(out, "verdict: {}", o.verdict.as_str());
        for reason in &o.reasons {
            let _ = writeln!(out, "  - {reason}");
        }
    }
    let _ = writeln!(
        out,
        "annotations: good cover {}, assumption_k = {}",
        r.annotations.good_cover, r.annotations.assumption_k
    );
    if let Some(v) = &r.verification {
        out += &render_verification(v);
    }
    out
}

pub fn render_verification(v: &Verification) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "verification: {}",
        if v.agreed { "all checks agree" } else { "DISAGREEMENT" }
    );
    for c in &v.checks {
        let status = match c.status {
            CheckStatus::Agree => "agree",
            CheckStatus::Disagree => "DISAGREE",
            CheckStatus::Skipped => "skipped",
        };
        let _ = writeln!(out, "  [{status}] {}: {}", c.name, c.detail);
    }
    out
}
