//! Request and document types behind the `tetrahn` binary.
//!
//! A [`ReportRequest`] is validated, executed by [`run`] into a
//! [`ReportDocument`], and rendered as text, JSON or CSV by [`render`]. All
//! three renderings print rationals as `"p/q"`, so the same run yields the same
//! values in every format.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::chow::ChowClass;
use crate::degeneration::{self, NodalDegeneration};
use crate::error::{Error, Result};
use crate::oracle::{self, OracleSummary};
use crate::rational::render as q;
use crate::tetragonal::{
    self, check_genus, curve_class, normal_tower, picard_transform, secant_span, syzygy_rank,
    Check, NormalBundleTower, PicardTransform, SecantSpan, TetragonalCurve, TheoremVerdict,
    VerdictStatus,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Full report for one genus.
    Report,
    /// Verdict rows over a genus range.
    Sweep,
    /// Verdict for one genus.
    Verify,
    /// Randomized oracle cross-checks.
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReportRequest {
    pub mode: Mode,
    pub lo: i64,
    pub hi: i64,
    pub twists: Option<[i64; 3]>,
    pub betti: Option<[i64; 2]>,
    pub format: Format,
    pub oracle_samples: u64,
    pub seed: u64,
    /// Test hook: added to the quotient degrees of every tower before verification.
    pub corrupt_quotient_degree: Option<i64>,
}

impl ReportRequest {
    pub fn single(mode: Mode, genus: i64) -> Self {
        ReportRequest {
            mode,
            lo: genus,
            hi: genus,
            twists: None,
            betti: None,
            format: Format::Text,
            oracle_samples: 0,
            seed: 0,
            corrupt_quotient_degree: None,
        }
    }

    pub fn sweep(lo: i64, hi: i64) -> Self {
        ReportRequest {
            mode: Mode::Sweep,
            hi,
            ..ReportRequest::single(Mode::Sweep, lo)
        }
    }

    pub fn oracle(samples: u64, seed: u64) -> Self {
        ReportRequest {
            oracle_samples: samples,
            seed,
            ..ReportRequest::single(Mode::Oracle, tetragonal::MIN_GENUS)
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.mode == Mode::Oracle {
            if self.oracle_samples == 0 {
                return Err(Error::OutOfRange("oracle sample count must be at least 1".into()));
            }
            return Ok(());
        }
        check_genus(self.lo)?;
        check_genus(self.hi)?;
        if self.lo > self.hi {
            return Err(Error::OutOfRange(format!(
                "empty genus range {}..{}",
                self.lo, self.hi
            )));
        }
        if self.mode == Mode::Sweep && (self.twists.is_some() || self.betti.is_some()) {
            return Err(Error::OutOfRange("--twists/--betti cannot be combined with a sweep".into()));
        }
        if self.twists.is_some() || self.betti.is_some() {
            self.curve(self.lo)?;
        }
        Ok(())
    }

    fn curve(&self, g: i64) -> Result<TetragonalCurve> {
        let general = TetragonalCurve::general(g)?;
        TetragonalCurve::with_invariants(
            g,
            self.twists.unwrap_or(general.twists),
            self.betti.unwrap_or(general.betti),
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportExtras {
    pub picard_transform: Option<PicardTransform>,
    pub syzygy_rank: i64,
    pub secant_span: SecantSpan,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenusEntry {
    pub genus: i64,
    pub curve: TetragonalCurve,
    pub curve_class: ChowClass,
    pub tower: NormalBundleTower,
    pub verdict: TheoremVerdict,
    pub degeneration: Option<NodalDegeneration>,
    pub degeneration_checks: Vec<Check>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub extras: Option<ReportExtras>,
}

impl GenusEntry {
    pub fn failed(&self) -> bool {
        self.verdict.failed() || self.degeneration_checks.iter().any(|c| !c.pass)
    }

    pub fn status(&self) -> VerdictStatus {
        if self.failed() {
            VerdictStatus::Fail
        } else {
            self.verdict.status
        }
    }

    /// Every failed check, verdict first.
    pub fn failed_checks(&self) -> impl Iterator<Item = &Check> {
        self.verdict
            .failed_checks()
            .chain(self.degeneration_checks.iter().filter(|c| !c.pass))
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub passed: u64,
    pub conditional: u64,
    pub failed: u64,
    pub first_failure: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub mode: Mode,
    pub entries: Vec<GenusEntry>,
    pub oracle: Option<OracleSummary>,
    pub summary: Summary,
}

impl ReportDocument {
    /// 0 when nothing failed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.summary.failed == 0 {
            0
        } else {
            1
        }
    }
}

fn describe_failure(genus: i64, c: &Check) -> String {
    format!(
        "g={genus} {}: {} {} {} does not hold",
        c.name,
        q(&c.lhs),
        c.relation.symbol(),
        q(&c.rhs)
    )
}

fn entry(req: &ReportRequest, g: i64) -> Result<GenusEntry> {
    let curve = req.curve(g)?;
    let mut tower = normal_tower(&curve);
    if let Some(delta) = req.corrupt_quotient_degree {
        tower.quotient_q = tower.quotient_q.with_degree(tower.quotient_q.degree() + delta);
        tower.quotient_y = tower.quotient_y.with_degree(tower.quotient_y.degree() + delta);
    }
    let verdict = tetragonal::verify_tower(&curve, &tower)?;
    let degeneration = if curve.balanced_scroll {
        Some(degeneration::build_degeneration(g)?)
    } else {
        None
    };
    let degeneration_checks = degeneration.as_ref().map(|d| d.checks()).unwrap_or_default();
    let extras = if req.mode == Mode::Report {
        Some(ReportExtras {
            picard_transform: picard_transform(&curve).ok(),
            syzygy_rank: syzygy_rank(4)?,
            secant_span: secant_span(g, 4)?,
        })
    } else {
        None
    };
    Ok(GenusEntry {
        genus: g,
        curve_class: curve_class(&curve),
        curve,
        tower,
        verdict,
        degeneration,
        degeneration_checks,
        extras,
    })
}

/// Executes a request. Validation problems are errors; failed mathematical
/// checks are recorded in the document.
pub fn run(req: &ReportRequest) -> Result<ReportDocument> {
    req.validate()?;
    if req.mode == Mode::Oracle {
        let summary = oracle::run(req.oracle_samples, req.seed);
        let failed = !summary.passed();
        return Ok(ReportDocument {
            mode: Mode::Oracle,
            entries: Vec::new(),
            summary: Summary {
                passed: u64::from(!failed),
                conditional: 0,
                failed: u64::from(failed),
                first_failure: summary
                    .counterexample
                    .as_ref()
                    .map(|c| format!("{} case {}: {}", c.kind, c.index, c.detail)),
            },
            oracle: Some(summary),
        });
    }
    let entries: Vec<GenusEntry> = (req.lo..=req.hi)
        .into_par_iter()
        .map(|g| entry(req, g))
        .collect::<Result<_>>()?;
    let mut summary = Summary::default();
    for e in &entries {
        match e.status() {
            VerdictStatus::Pass => summary.passed += 1,
            VerdictStatus::Conditional => summary.conditional += 1,
            VerdictStatus::Fail => {
                summary.failed += 1;
                if summary.first_failure.is_none() {
                    summary.first_failure = e.failed_checks().next().map(|c| describe_failure(e.genus, c));
                }
            }
        }
    }
    Ok(ReportDocument {
        mode: req.mode,
        entries,
        oracle: None,
        summary,
    })
}

/// Failed inequalities, one line each, for stderr.
pub fn failure_lines(doc: &ReportDocument) -> Vec<String> {
    let mut out: Vec<String> = doc
        .entries
        .iter()
        .flat_map(|e| e.failed_checks().map(move |c| describe_failure(e.genus, c)))
        .collect();
    if let Some(c) = doc.oracle.as_ref().and_then(|o| o.counterexample.as_ref()) {
        out.push(format!("oracle disagreement ({}) at case {}: {}", c.kind, c.index, c.detail));
    }
    out
}

pub const CSV_HEADER: [&str; 7] = [
    "g",
    "parity",
    "mu_sub",
    "mu_quotient",
    "bound",
    "destabilizes",
    "pass",
];

fn csv_row(e: &GenusEntry) -> [String; 7] {
    let v = &e.verdict;
    let destabilizes = v
        .checks
        .iter()
        .find(|c| c.name == "destabilizes_canonical_normal_bundle")
        .is_some_and(|c| c.pass);
    [
        e.genus.to_string(),
        v.parity.to_string(),
        q(&v.top_slope()),
        q(&v.quotient_slope()),
        v.bound.as_ref().map(|b| q(&b.bound)).unwrap_or_default(),
        destabilizes.to_string(),
        e.status().to_string(),
    ]
}

pub fn render(doc: &ReportDocument, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(doc).expect("serializable");
            s.push('\n');
            s
        }
        Format::Csv => render_csv(doc),
        Format::Text => render_text(doc),
    }
}

fn render_csv(doc: &ReportDocument) -> String {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    if let Some(o) = &doc.oracle {
        w.write_record([
            "samples",
            "seed",
            "chow_agreements",
            "confluence_agreements",
            "hn_agreements",
            "pass",
        ])
        .expect("in-memory");
        w.write_record([
            o.samples.to_string(),
            o.seed.to_string(),
            o.chow_agreements.to_string(),
            o.confluence_agreements.to_string(),
            o.hn_agreements.to_string(),
            if o.passed() { "pass" } else { "fail" }.to_string(),
        ])
        .expect("in-memory");
    } else {
        w.write_record(CSV_HEADER).expect("in-memory");
        for e in &doc.entries {
            w.write_record(csv_row(e)).expect("in-memory");
        }
    }
    String::from_utf8(w.into_inner().expect("in-memory")).expect("utf-8")
}

fn render_text(doc: &ReportDocument) -> String {
    let mut s = String::new();
    if let Some(o) = &doc.oracle {
        let _ = writeln!(s, "oracle: {} samples, seed {}", o.samples, o.seed);
        let _ = writeln!(s, "  chow products     {}/{} agree", o.chow_agreements, o.samples);
        let _ = writeln!(s, "  rewrite orders    {}/{} agree", o.confluence_agreements, o.samples);
        let _ = writeln!(s, "  hn filtrations    {}/{} agree", o.hn_agreements, o.samples);
        if let Some(c) = &o.counterexample {
            let _ = writeln!(s, "  counterexample ({}) case {}: {}", c.kind, c.index, c.detail);
        }
    }
    for e in &doc.entries {
        let v = &e.verdict;
        let bound = v.bound.as_ref().map(|b| q(&b.bound)).unwrap_or_else(|| "-".into());
        let _ = writeln!(
            s,
            "g={} {} {}  {}  slopes {} > {}  bound {}",
            e.genus,
            v.parity,
            e.status(),
            v.statement,
            q(&v.top_slope()),
            q(&v.quotient_slope()),
            bound
        );
        let detailed = doc.mode != Mode::Sweep;
        if detailed {
            render_entry_details(&mut s, e);
        } else {
            for c in e.failed_checks() {
                let _ = writeln!(s, "  {c}");
            }
        }
    }
    if doc.mode != Mode::Oracle {
        let m = &doc.summary;
        let _ = writeln!(
            s,
            "summary: {} pass, {} conditional, {} fail",
            m.passed, m.conditional, m.failed
        );
    }
    if let Some(f) = &doc.summary.first_failure {
        let _ = writeln!(s, "first failure: {f}");
    }
    s
}

fn render_entry_details(s: &mut String, e: &GenusEntry) {
    let c = &e.curve;
    let t = &e.tower;
    let _ = writeln!(
        s,
        "  curve: twists {:?}, syzygy invariants {:?}, class [C] = {}",
        c.twists, c.betti, e.curve_class
    );
    let _ = writeln!(
        s,
        "  N_C {}  N_C/Q degrees {:?}  N_Q|C {}  N_C/Y {}  N_Y|C {}",
        t.n_c,
        t.n_cq.degrees(),
        t.quotient_q,
        t.n_cy,
        t.quotient_y
    );
    for k in &e.verdict.checks {
        let _ = writeln!(s, "  {k}");
    }
    for h in &e.verdict.hypotheses {
        let _ = writeln!(s, "  hypothesis: {h}");
    }
    if let Some(d) = &e.degeneration {
        let _ = writeln!(
            s,
            "  degeneration: [C1] = {}, [C2] = {}, {} nodes, arithmetic genus {}",
            d.rational_component().chow_class,
            d.elliptic_component().chow_class,
            d.node_count,
            d.arithmetic_genus()
        );
        for k in &e.degeneration_checks {
            let _ = writeln!(s, "  {k}");
        }
    }
    if let Some(b) = &e.verdict.bound {
        let _ = writeln!(s, "  certificate ({}): {} ≤ {}", b.provenance.as_str(), b.applies_to, q(&b.bound));
        for step in &b.chain {
            let _ = writeln!(s, "    {} = {}  [{}]", step.step, q(&step.value), step.paper_ref);
        }
        for w in &b.warnings {
            let _ = writeln!(s, "    warning: {w}");
        }
    }
    if let Some(x) = &e.extras {
        if let Some(p) = &x.picard_transform {
            let _ = writeln!(
                s,
                "  model: {} (H ↦ H - {}R), [C2] ↦ {}, degrees {:?}",
                p.model_tag, p.k, p.transformed_c2_class, p.transformed_c2_degrees
            );
        }
        let _ = writeln!(
            s,
            "  quadrics in the first syzygy step: {}; pencil divisors span P^{} (h0 = {})",
            x.syzygy_rank, x.secant_span.span_dim, x.secant_span.h0
        );
    }
}
