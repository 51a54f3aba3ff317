//! The full pipeline as one versioned, serializable report, plus plain-text
//! rendering of each section.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::ampleness::{
    ample_gg_verdict, asymptotic_ample_certificate, scan_bad_curves, AmpleGgCertificate,
    AmpleGgVerdict, AsymptoticCertificate, AsymptoticMode, BadCurveScan,
};
use crate::character::{ChernCharacter, LogInvariants};
use crate::cohomology::{wbn_applicable, wbn_cohomology, CohomologyTriple};
use crate::positivity::{
    classify_global_generation, necessary_obstructions, GgClassification, GgVerdict,
    ObstructionReport, ObstructionVerdict,
};
use crate::surface::Surface;
use crate::tags;

pub const SCHEMA_VERSION: &str = "ampleness-report/1";

pub const STABILITY_WARNING: &str =
    "stability of the character is assumed, not verified; verdicts concern the general member";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportOptions {
    pub s: i128,
    pub mode: AsymptoticMode,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            s: 2,
            mode: AsymptoticMode::Normalized,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputEcho {
    pub surface: Surface,
    pub character: ChernCharacter,
    pub canonical: String,
    pub options: ReportOptions,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Invariants {
    pub tag: String,
    pub rank: i128,
    pub c2: i128,
    pub log: LogInvariants,
    pub euler_characteristic: i128,
    /// Cohomology of the general prioritary sheaf, when weak Brill–Noether
    /// applies.
    pub general_cohomology: Option<CohomologyTriple>,
}

impl Invariants {
    pub fn of(v: &ChernCharacter) -> Self {
        Invariants {
            tag: tags::RIEMANN_ROCH.into(),
            rank: v.rank(),
            c2: v.c2(),
            log: v.log_invariants(),
            euler_characteristic: v.euler_characteristic(),
            general_cohomology: wbn_cohomology(v).ok(),
        }
    }
}

/// A report section that either ran or was skipped on a named
/// precondition. Exactly one of `value` and `precondition` is set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Section<T> {
    pub tag: String,
    pub computed: bool,
    pub precondition: Option<String>,
    pub value: Option<T>,
}

impl<T> Section<T> {
    fn from_result(tag: &str, r: crate::Result<T>) -> Self {
        match r {
            Ok(value) => Section {
                tag: tag.into(),
                computed: true,
                precondition: None,
                value: Some(value),
            },
            Err(err) => Section {
                tag: tag.into(),
                computed: false,
                precondition: Some(err.to_string()),
                value: None,
            },
        }
    }

    pub fn value(&self) -> Option<&T> {
        self.value.as_ref()
    }

    fn render(&self, title: &str, f: impl Fn(&T) -> String) -> String {
        match (&self.value, &self.precondition) {
            (Some(v), _) => f(v),
            (None, p) => format!(
                "{title} ({}): skipped, {}\n",
                self.tag,
                p.as_deref().unwrap_or("no reason recorded")
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    pub input: InputEcho,
    pub invariants: Invariants,
    pub obstructions: ObstructionReport,
    pub global_generation: Section<GgClassification>,
    pub ample_globally_generated: AmpleGgCertificate,
    pub asymptotic: Section<AsymptoticCertificate>,
    pub warnings: Vec<String>,
    pub verdict: String,
}

fn gg_tag(surface: Surface) -> &'static str {
    match surface {
        Surface::ProjectivePlane => tags::GG_CLASSIFICATION_PLANE,
        Surface::Hirzebruch(0) => tags::GG_CLASSIFICATION_QUADRIC,
        Surface::Hirzebruch(_) => tags::GG_CLASSIFICATION_HIRZEBRUCH,
    }
}

pub fn run_report(v: &ChernCharacter, options: ReportOptions) -> Report {
    let global_generation =
        Section::from_result(gg_tag(v.surface()), classify_global_generation(v));
    let ample_globally_generated = ample_gg_verdict(v);
    let asymptotic = Section::from_result(
        tags::ASYMPTOTIC_AMPLE,
        asymptotic_ample_certificate(v, options.s, options.mode),
    );
    let mut warnings = vec![STABILITY_WARNING.to_string()];
    if !wbn_applicable(v).applicable {
        warnings.push("weak Brill-Noether does not apply; general cohomology omitted".into());
    }
    let verdict = summary(&ample_globally_generated, &asymptotic);
    Report {
        schema: SCHEMA_VERSION.into(),
        input: InputEcho {
            surface: v.surface(),
            character: *v,
            canonical: v.to_string(),
            options,
        },
        invariants: Invariants::of(v),
        obstructions: necessary_obstructions(v),
        global_generation,
        ample_globally_generated,
        asymptotic,
        warnings,
        verdict,
    }
}

fn summary(ample: &AmpleGgCertificate, asymptotic: &Section<AsymptoticCertificate>) -> String {
    let first = match &ample.verdict {
        AmpleGgVerdict::AmpleGeneral => {
            "general bundle is globally generated and ample".to_string()
        }
        AmpleGgVerdict::HypothesesFail { .. } => {
            "globally generated ampleness not certified".into()
        }
    };
    let second = match asymptotic.value() {
        Some(c) if c.valid => format!("general bundle of character {}·v is ample", c.n_min),
        Some(_) => "asymptotic certificate incomplete".into(),
        None => "no asymptotic certificate".into(),
    };
    format!("{first}; {second}")
}

/// Structured JSON form; stable field order, exact rationals.
pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report serialization is infallible")
}

/// Generic versioned wrapper for single-section output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Envelope<T> {
    pub schema: String,
    pub command: String,
    pub input: String,
    pub result: T,
}

impl<T> Envelope<T> {
    pub fn new(command: &str, v: &ChernCharacter, result: T) -> Self {
        Envelope {
            schema: SCHEMA_VERSION.into(),
            command: command.into(),
            input: format!("{} {}", v.surface(), v),
            result,
        }
    }
}

// ---- text rendering ----

pub fn render_invariants(v: &ChernCharacter, inv: &Invariants) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "character: {} on {}", v, v.surface());
    let _ = writeln!(
        out,
        "  rank {}  c1 = {}  ch2 = {}  c2 = {}",
        inv.rank,
        v.c1(),
        v.ch2(),
        inv.c2
    );
    let _ = writeln!(
        out,
        "  mu = {}  nu = {}  delta = {}",
        inv.log.mu, inv.log.nu, inv.log.delta
    );
    let _ = writeln!(out, "  chi = {} ({})", inv.euler_characteristic, inv.tag);
    if let Some(h) = inv.general_cohomology {
        let _ = writeln!(
            out,
            "  general cohomology: h0 = {}, h1 = {}, h2 = {}",
            h.h0, h.h1, h.h2
        );
    }
    out
}

pub fn render_obstructions(o: &ObstructionReport) -> String {
    let mut out = String::from("necessary conditions:\n");
    for c in &o.conditions {
        let _ = writeln!(out, "  {c}");
    }
    let verdict = match &o.verdict {
        ObstructionVerdict::Unobstructed => "unobstructed".to_string(),
        ObstructionVerdict::Obstructed { failing } => {
            format!("obstructed by {}", failing.join(", "))
        }
        ObstructionVerdict::ExceptionalTangentBundle => {
            format!(
                "tangent bundle of P2, ample despite the slope bound ({})",
                tags::TANGENT_BUNDLE_EXCEPTION
            )
        }
    };
    let _ = writeln!(out, "  obstructions: {verdict}");
    out
}

pub fn render_gg(gg: &GgClassification) -> String {
    let mut out = format!("global generation ({}):\n", gg.tag);
    for c in &gg.checks {
        let _ = writeln!(out, "  {c}");
    }
    let line = match &gg.verdict {
        GgVerdict::GloballyGenerated { case, description } => {
            format!("globally generated, case {case}: {description}")
        }
        GgVerdict::NotGloballyGenerated { reason } => format!("not globally generated: {reason}"),
    };
    let _ = writeln!(out, "  {line}");
    out
}

pub fn render_bad_curves(scan: &BadCurveScan) -> String {
    let mut out = format!(
        "bad curves ({}): {} found, {} classes scanned (first coordinate <= {}, b <= {})\n",
        tags::BAD_CURVE_LIST,
        scan.curves.len(),
        scan.evaluated,
        scan.max_first,
        scan.max_second
    );
    for b in &scan.curves {
        let _ = writeln!(
            out,
            "  D = {}: chi(v(K+D)) = {}, d = {} {} c = {}",
            b.class,
            b.chi_twist,
            b.d,
            if b.passes { "<" } else { ">=" },
            b.c
        );
    }
    out
}

pub fn render_ample_gg(cert: &AmpleGgCertificate) -> String {
    let mut out = format!("globally generated ampleness ({}):\n", cert.tag);
    for c in &cert.hypotheses {
        let _ = writeln!(out, "  {c}");
    }
    if let Some(gg) = &cert.gg {
        if let Some(case) = gg.case() {
            let _ = writeln!(out, "  globally generated, case {case} ({})", gg.tag);
        }
    }
    if let Some(trace) = &cert.nonspecial {
        for c in &trace.steps {
            let _ = writeln!(out, "  {c}");
        }
    }
    for b in &cert.bad_curves {
        let _ = writeln!(
            out,
            "  bad curve {}: chi = {}, d = {} {} c = {}",
            b.class,
            b.chi_twist,
            b.d,
            if b.passes { "<" } else { ">=" },
            b.c
        );
    }
    for n in &cert.notes {
        let _ = writeln!(out, "  note: {n}");
    }
    let line = match &cert.verdict {
        AmpleGgVerdict::AmpleGeneral => "ample (general member)".to_string(),
        AmpleGgVerdict::HypothesesFail { reason } => format!("hypotheses fail: {reason}"),
    };
    let _ = writeln!(out, "  result: {line}");
    out
}

pub fn render_asymptotic(cert: &AsymptoticCertificate) -> String {
    let mut out = format!(
        "asymptotic ampleness ({}, {:?} mode, s = {}):\n",
        cert.tag, cert.mode, cert.s
    );
    for c in &cert.hypotheses {
        let _ = writeln!(out, "  {c}");
    }
    if let Some(n) = &cert.normalization {
        let _ = writeln!(
            out,
            "  normalized: {} = v(-N), N = {}",
            n.normalized, n.twist
        );
    }
    let b = &cert.bound;
    let _ = writeln!(
        out,
        "  B = {}  B^2 = {}  bound = {} ({})",
        b.b_class,
        b.b_squared,
        b.bound,
        tags::EFFECTIVE_MULTIPLIER
    );
    let _ = writeln!(
        out,
        "  n_min = {}  kernel u = {}  delta(u) = {}",
        cert.n_min, cert.kernel, cert.kernel_delta
    );
    if let Some(d) = cert.previous_kernel_delta {
        let _ = writeln!(out, "  delta(u) at n_min - 1 = {d}");
    }
    let _ = writeln!(
        out,
        "  chi(v*(H-L)) = {} ({})",
        cert.dual_twist_chi,
        if cert.dual_twist_ok {
            "<= 0"
        } else {
            "> 0, FAIL"
        }
    );
    let _ = writeln!(
        out,
        "  chi(u*(H-L)) = {} (identity {})",
        cert.kernel_dual_twist_chi,
        if cert.identity_holds {
            "holds"
        } else {
            "FAILS"
        }
    );
    let _ = writeln!(
        out,
        "  weak Brill-Noether for u*(H): {}, for u*(H-L): {}",
        cert.kernel_dual_wbn.applicable, cert.kernel_dual_twist_wbn.applicable
    );
    let _ = writeln!(
        out,
        "  certificate {}",
        if cert.valid { "valid" } else { "INCOMPLETE" }
    );
    out
}

/// Human-readable report. The `verdict:` line appears exactly once.
pub fn render_text(report: &Report) -> String {
    let v = &report.input.character;
    let mut out = format!("{}\n", report.schema);
    out += &render_invariants(v, &report.invariants);
    out += &render_obstructions(&report.obstructions);
    out += &report
        .global_generation
        .render("global generation", render_gg);
    out += &render_ample_gg(&report.ample_globally_generated);
    out += &report
        .asymptotic
        .render("asymptotic ampleness", render_asymptotic);
    for w in &report.warnings {
        let _ = writeln!(out, "warning: {w}");
    }
    let _ = writeln!(out, "verdict: {}", report.verdict);
    out
}

/// Runs the bad-curve scan for a report-style section.
pub fn bad_curve_section(v: &ChernCharacter) -> Section<BadCurveScan> {
    Section::from_result(tags::BAD_CURVE_LIST, scan_bad_curves(v))
}
