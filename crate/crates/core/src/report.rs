//! The full predicate bundle for one complex, with an audit of the
//! combinations that known theorems rule out.

use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::complex::{Face, SimplicialComplex};
use crate::error::Error;
use crate::field::FieldSpec;
use crate::fm::{verify_fm, FmCheck};
use crate::hochster::{
    golod_bound_series, hochster_table, is_weakly_golod, rzk_betti_predicted, tor_poincare_series,
    zk_betti, GolodCertificate, PoincareSeries,
};
use crate::homology::betti;
use crate::io::to_text;
use crate::manifold::{is_locally_stacked, validate_manifold, LocalStackedReport, ManifoldReport};
use crate::tightness::{
    is_tight, is_tight_neighborly, TightNeighborlyTrace, TightOptions, TightnessReport,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnalyzeOptions {
    pub fields: Vec<FieldSpec>,
    pub max_vertices: usize,
    pub prune: bool,
    /// Series truncation degree; defaults to `m + dim + 2`.
    pub truncate: Option<usize>,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions {
            fields: vec![FieldSpec::Prime(2), FieldSpec::Rational],
            max_vertices: crate::hochster::DEFAULT_MAX_VERTICES,
            prune: true,
            truncate: None,
        }
    }
}

/// A predicate result or the error that prevented it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome<T> {
    Ok(T),
    Error(String),
}

impl<T> Outcome<T> {
    fn from(r: Result<T, Error>) -> Self {
        match r {
            Ok(v) => Outcome::Ok(v),
            Err(e) => Outcome::Error(e.to_string()),
        }
    }

    pub fn ok(&self) -> Option<&T> {
        match self {
            Outcome::Ok(v) => Some(v),
            Outcome::Error(_) => None,
        }
    }

    pub fn is_error(&self) -> bool {
        matches!(self, Outcome::Error(_))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InputDigest {
    pub m: usize,
    pub dim: isize,
    pub f_vector: Vec<usize>,
    pub sha256: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HochsterSummary {
    pub nonzero_rows: usize,
    pub cones_skipped: usize,
    /// `(|I|, p, total rank)`.
    pub bigraded: Vec<(usize, usize, usize)>,
    pub tor_series: PoincareSeries,
    pub golod_bound: Outcome<PoincareSeries>,
    pub zk_betti: Vec<usize>,
    pub rzk_betti_predicted: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FieldSection {
    pub field: FieldSpec,
    pub betti: Vec<usize>,
    pub tight: Outcome<TightnessReport>,
    pub weakly_golod: Outcome<GolodCertificate>,
    pub tight_neighborly: Option<Outcome<TightNeighborlyTrace>>,
    pub hochster: Outcome<HochsterSummary>,
}

impl FieldSection {
    pub fn is_tight(&self) -> Option<bool> {
        self.tight.ok().map(|t| t.tight)
    }

    pub fn is_weakly_golod(&self) -> Option<bool> {
        self.weakly_golod.ok().map(|g| g.is_vanishing())
    }

    pub fn is_tight_neighborly(&self) -> Option<bool> {
        self.tight_neighborly
            .as_ref()
            .and_then(|t| t.ok())
            .map(|t| t.holds)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FmSummary {
    pub added_facets: usize,
    pub sm_size: usize,
    pub betti: Vec<(FieldSpec, Vec<usize>)>,
    pub checks: Vec<FmCheck>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum AuditStatus {
    Clean,
    NotApplicable,
    Contradiction,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditItem {
    pub rule: &'static str,
    pub field: Option<FieldSpec>,
    pub status: AuditStatus,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AnalysisReport {
    pub tool_version: &'static str,
    pub input: InputDigest,
    pub connected: bool,
    pub neighborliness: usize,
    pub manifold: ManifoldReport,
    pub locally_stacked: Option<Outcome<LocalStackedReport>>,
    pub fields: Vec<FieldSection>,
    /// `β_1` disagreement between fields for the tight-neighborly test.
    pub tight_neighborly_field_mismatch: Option<String>,
    pub fm: Option<Outcome<FmSummary>>,
    pub audit: Vec<AuditItem>,
    /// Wall-clock milliseconds per stage; the only nondeterministic part.
    pub timings: Vec<(String, f64)>,
}

impl AnalysisReport {
    pub fn field(&self, field: FieldSpec) -> Option<&FieldSection> {
        self.fields.iter().find(|s| s.field == field)
    }

    pub fn audit_clean(&self) -> bool {
        self.audit
            .iter()
            .all(|a| a.status != AuditStatus::Contradiction)
    }

    pub fn any_errors(&self) -> bool {
        self.fields
            .iter()
            .any(|s| s.tight.is_error() || s.weakly_golod.is_error() || s.hochster.is_error())
    }
}

/// Largest `k` with every `k+1` vertices spanning a face (0 if some pair is
/// not an edge).
pub fn neighborliness(complex: &SimplicialComplex) -> usize {
    let mut k = 0;
    while (k + 2) <= complex.num_vertices() && complex.is_k_neighborly(k + 1) {
        k += 1;
    }
    k
}

pub fn digest(complex: &SimplicialComplex) -> InputDigest {
    let hash = Sha256::digest(to_text(complex).as_bytes());
    InputDigest {
        m: complex.m(),
        dim: complex.dim(),
        f_vector: complex.f_vector(),
        sha256: hash.iter().map(|b| format!("{b:02x}")).collect(),
    }
}

struct Clock(Vec<(String, f64)>);

impl Clock {
    fn time<T>(&mut self, label: String, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        self.0.push((label, start.elapsed().as_secs_f64() * 1000.0));
        out
    }
}

fn hochster_summary(
    complex: &SimplicialComplex,
    field: FieldSpec,
    opts: &AnalyzeOptions,
) -> Result<HochsterSummary, Error> {
    let table = hochster_table(complex, field, opts.max_vertices)?;
    let n = opts
        .truncate
        .unwrap_or(complex.m() + complex.dim().max(0) as usize + 2);
    Ok(HochsterSummary {
        nonzero_rows: table.rows.len(),
        cones_skipped: table.cones_skipped,
        bigraded: table
            .bigraded()
            .into_iter()
            .map(|((s, p), r)| (s, p, r))
            .collect(),
        tor_series: tor_poincare_series(&table, n),
        golod_bound: Outcome::from(golod_bound_series(&table, n)),
        zk_betti: zk_betti(&table),
        rzk_betti_predicted: rzk_betti_predicted(&table),
    })
}

pub fn analyze(complex: &SimplicialComplex, opts: &AnalyzeOptions) -> AnalysisReport {
    let mut clock = Clock(Vec::new());
    let manifold = clock.time("manifold".into(), || {
        validate_manifold(complex, &opts.fields)
    });
    let d = complex.dim().max(0) as usize;
    let is_manifold = manifold.passed() && complex.is_connected();

    let mut fields = Vec::new();
    for &field in &opts.fields {
        let betti = betti(complex, field, false);
        let tight_opts = TightOptions {
            prune: opts.prune,
            max_vertices: opts.max_vertices,
        };
        let tight = clock.time(format!("tight {field}"), || {
            Outcome::from(is_tight(complex, field, tight_opts))
        });
        let weakly_golod = clock.time(format!("weakly-golod {field}"), || {
            Outcome::from(is_weakly_golod(
                complex,
                field,
                opts.max_vertices,
                opts.prune,
            ))
        });
        let tight_neighborly = (is_manifold && d >= 3)
            .then(|| Outcome::from(is_tight_neighborly(complex, &manifold, field)));
        let hochster = clock.time(format!("hochster {field}"), || {
            Outcome::from(hochster_summary(complex, field, opts))
        });
        fields.push(FieldSection {
            field,
            betti,
            tight,
            weakly_golod,
            tight_neighborly,
            hochster,
        });
    }

    let traces: Vec<&TightNeighborlyTrace> = fields
        .iter()
        .filter_map(|s| s.tight_neighborly.as_ref().and_then(|t| t.ok()))
        .collect();
    let tight_neighborly_field_mismatch =
        traces
            .windows(2)
            .find(|w| w[0].beta1 != w[1].beta1)
            .map(|w| {
                format!(
                    "beta_1 is {} over {} but {} over {}",
                    w[0].beta1, w[0].field, w[1].beta1, w[1].field
                )
            });

    let locally_stacked = is_manifold.then(|| {
        clock.time("locally-stacked".into(), || {
            Outcome::from(is_locally_stacked(complex, &manifold))
        })
    });

    let fm = (is_manifold && d >= 3).then(|| {
        clock.time("fm".into(), || {
            Outcome::from(
                verify_fm(complex, &manifold, &opts.fields).map(|r| FmSummary {
                    added_facets: r.added_facets.len(),
                    sm_size: r.sm.len(),
                    betti: r.betti.iter().map(|(f, b, _)| (*f, b.clone())).collect(),
                    checks: r.checks,
                }),
            )
        })
    });

    let mut report = AnalysisReport {
        tool_version: env!("CARGO_PKG_VERSION"),
        input: digest(complex),
        connected: complex.is_connected(),
        neighborliness: neighborliness(complex),
        manifold,
        locally_stacked,
        fields,
        tight_neighborly_field_mismatch,
        fm,
        audit: Vec::new(),
        timings: Vec::new(),
    };
    report.audit = audit(complex, &report);
    report.timings = clock.0;
    report
}

fn item(
    rule: &'static str,
    field: Option<FieldSpec>,
    status: AuditStatus,
    detail: impl Into<String>,
) -> AuditItem {
    AuditItem {
        rule,
        field,
        status,
        detail: detail.into(),
    }
}

const HYPOTHESIS_NOTE: &str =
    "contradiction: the input does not satisfy the theorem's hypotheses (check manifold validity and labels)";

/// Known implications between the computed predicates. A contradiction is
/// always reported as a failure of the input's hypotheses.
pub fn audit(complex: &SimplicialComplex, r: &AnalysisReport) -> Vec<AuditItem> {
    let mut out = Vec::new();
    let neighborly = r.neighborliness >= 1;
    let d = complex.dim().max(0) as usize;
    let closed_manifold = r.manifold.passed() && r.connected;
    let stacked_evidence = r
        .locally_stacked
        .as_ref()
        .and_then(|o| o.ok())
        .filter(|s| s.applicable())
        .map(|s| s.stacked_manifold_evidence());

    for s in &r.fields {
        let f = Some(s.field);
        let (tight, golod) = (s.is_tight(), s.is_weakly_golod());

        out.push(match tight {
            Some(true) if !neighborly => item(
                "tight-implies-neighborly",
                f,
                AuditStatus::Contradiction,
                HYPOTHESIS_NOTE,
            ),
            Some(true) => item(
                "tight-implies-neighborly",
                f,
                AuditStatus::Clean,
                "tight and neighborly",
            ),
            _ => item(
                "tight-implies-neighborly",
                f,
                AuditStatus::NotApplicable,
                "not tight",
            ),
        });
        out.push(match (tight, golod) {
            (Some(true), Some(false)) => item(
                "tight-implies-weakly-golod",
                f,
                AuditStatus::Contradiction,
                HYPOTHESIS_NOTE,
            ),
            (Some(true), Some(true)) => item(
                "tight-implies-weakly-golod",
                f,
                AuditStatus::Clean,
                "tight and weakly Golod",
            ),
            _ => item(
                "tight-implies-weakly-golod",
                f,
                AuditStatus::NotApplicable,
                "not tight",
            ),
        });

        let orientable = closed_manifold && r.manifold.orientable_over(s.field) == Some(true);
        if !orientable {
            let why = if closed_manifold {
                "not orientable over this field"
            } else {
                "not a closed connected manifold"
            };
            for rule in [
                "weakly-golod-implies-tight",
                "surface",
                "three-manifold-chain",
                "tight-neighborly-chain",
            ] {
                out.push(item(rule, f, AuditStatus::NotApplicable, why));
            }
            continue;
        }

        out.push(match (golod, tight) {
            (Some(true), Some(false)) => item(
                "weakly-golod-implies-tight",
                f,
                AuditStatus::Contradiction,
                HYPOTHESIS_NOTE,
            ),
            (Some(g), Some(t)) => item(
                "weakly-golod-implies-tight",
                f,
                AuditStatus::Clean,
                format!("weakly Golod {g}, tight {t}"),
            ),
            _ => item(
                "weakly-golod-implies-tight",
                f,
                AuditStatus::NotApplicable,
                "predicate errored",
            ),
        });

        out.push(if d != 2 {
            item(
                "surface",
                f,
                AuditStatus::NotApplicable,
                "dimension is not 2",
            )
        } else {
            match (tight, golod) {
                (Some(t), Some(g)) if t == g && g == neighborly => item(
                    "surface",
                    f,
                    AuditStatus::Clean,
                    format!("neighborly, tight and weakly Golod all {g}"),
                ),
                (Some(t), Some(g)) => item(
                    "surface",
                    f,
                    AuditStatus::Contradiction,
                    format!(
                        "neighborly {neighborly}, tight {t}, weakly Golod {g}; {HYPOTHESIS_NOTE}"
                    ),
                ),
                _ => item(
                    "surface",
                    f,
                    AuditStatus::NotApplicable,
                    "predicate errored",
                ),
            }
        });

        let tn = s.is_tight_neighborly();
        out.push(if d != 3 {
            item("three-manifold-chain", f, AuditStatus::NotApplicable, "dimension is not 3")
        } else {
            match (tight, tn, stacked_evidence, golod) {
                (Some(t), Some(n), Some(st), Some(g)) if t == n && n == st && st == g => item(
                    "three-manifold-chain",
                    f,
                    AuditStatus::Clean,
                    format!("tight, tight-neighborly, neighborly and locally stacked, weakly Golod all {t}"),
                ),
                (Some(t), Some(n), Some(st), Some(g)) => item(
                    "three-manifold-chain",
                    f,
                    AuditStatus::Contradiction,
                    format!("tight {t}, tight-neighborly {n}, neighborly and locally stacked {st}, weakly Golod {g}; {HYPOTHESIS_NOTE}"),
                ),
                _ => item("three-manifold-chain", f, AuditStatus::NotApplicable, "predicate unavailable"),
            }
        });

        out.push(if d < 4 {
            item("tight-neighborly-chain", f, AuditStatus::NotApplicable, "dimension below 4")
        } else {
            match (tn, stacked_evidence, tight) {
                (Some(n), Some(st), Some(t)) if n == st && (!n || t) => item(
                    "tight-neighborly-chain",
                    f,
                    AuditStatus::Clean,
                    format!("tight-neighborly {n}, neighborly and locally stacked {st}, tight {t}"),
                ),
                (Some(n), Some(st), Some(t)) => item(
                    "tight-neighborly-chain",
                    f,
                    AuditStatus::Contradiction,
                    format!("tight-neighborly {n}, neighborly and locally stacked {st}, tight {t}; {HYPOTHESIS_NOTE}"),
                ),
                _ => item("tight-neighborly-chain", f, AuditStatus::NotApplicable, "predicate unavailable"),
            }
        });
    }

    out.push(even_dimension_rule(complex, r, closed_manifold));
    out
}

/// Closed `2k`-manifolds with vanishing homology below `k` over every tested
/// field: tight over all fields iff `k`-neighborly. Connectivity is only
/// checked homologically.
fn even_dimension_rule(
    complex: &SimplicialComplex,
    r: &AnalysisReport,
    closed_manifold: bool,
) -> AuditItem {
    let rule = "highly-connected-even-dimension";
    let d = complex.dim().max(0) as usize;
    if !closed_manifold || d < 4 || d % 2 == 1 {
        return item(
            rule,
            None,
            AuditStatus::NotApplicable,
            "not a closed manifold of even dimension at least 4",
        );
    }
    let k = d / 2;
    let connected_enough = r
        .fields
        .iter()
        .all(|s| s.betti.iter().take(k).skip(1).all(|b| *b == 0));
    if !connected_enough {
        return item(
            rule,
            None,
            AuditStatus::NotApplicable,
            format!("homology below degree {k} is nonzero"),
        );
    }
    let tight: Option<Vec<bool>> = r.fields.iter().map(|s| s.is_tight()).collect();
    let Some(tight) = tight else {
        return item(rule, None, AuditStatus::NotApplicable, "predicate errored");
    };
    let all_tight = tight.iter().all(|t| *t);
    let kn = complex.is_k_neighborly(k);
    if all_tight == kn {
        item(
            rule,
            None,
            AuditStatus::Clean,
            format!("tight over all fields {all_tight}, {k}-neighborly {kn}"),
        )
    } else {
        item(
            rule,
            None,
            AuditStatus::Contradiction,
            format!("tight over all fields {all_tight}, {k}-neighborly {kn}; {HYPOTHESIS_NOTE}"),
        )
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn faces(v: &[Face]) -> String {
    v.iter().map(Face::to_string).collect::<Vec<_>>().join(" ")
}

/// Plain text rendering. Timings come last, after a separator line.
pub fn render_text(r: &AnalysisReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "golodtight {}", r.tool_version);
    let _ = writeln!(
        s,
        "input: m={} dim={} f={:?} sha256={}",
        r.input.m, r.input.dim, r.input.f_vector, r.input.sha256
    );
    let _ = writeln!(s, "connected: {}", yes_no(r.connected));
    let _ = writeln!(
        s,
        "neighborly: {} (k-neighborly up to k={})",
        yes_no(r.neighborliness >= 1),
        r.neighborliness
    );
    let mr = &r.manifold;
    let _ = writeln!(
        s,
        "manifold: {} (pure {}, closed pseudomanifold {}, strongly connected {}, links {})",
        yes_no(mr.passed()),
        yes_no(mr.is_pure),
        yes_no(mr.is_closed_pseudomanifold),
        yes_no(mr.is_strongly_connected),
        if mr.sphere_certified() {
            "sphere-certified".to_string()
        } else if mr.passed() {
            "homology-sphere-only".to_string()
        } else {
            format!("failed at {:?}", mr.failed_links())
        }
    );
    if let Some(w) = mr.impure_witness {
        let _ = writeln!(s, "  impure facet: {w}");
    }
    if let Some((ridge, c)) = mr.ridge_witness {
        let _ = writeln!(s, "  ridge {ridge} lies in {c} facets");
    }
    for (f, o) in &mr.orientable {
        let _ = writeln!(s, "  orientable over {f}: {}", yes_no(*o));
    }
    match &r.locally_stacked {
        Some(Outcome::Ok(ls)) if ls.applicable() => {
            let _ = writeln!(s, "locally stacked: {}", yes_no(ls.all_stacked()));
        }
        Some(Outcome::Ok(_)) => {
            let _ = writeln!(s, "locally stacked: not applicable (links are 0-spheres)");
        }
        Some(Outcome::Error(e)) => {
            let _ = writeln!(s, "locally stacked: error: {e}");
        }
        None => {}
    }
    for sec in &r.fields {
        let _ = writeln!(s, "[field {}]", sec.field);
        let _ = writeln!(s, "  betti: {:?}", sec.betti);
        match &sec.tight {
            Outcome::Ok(t) => {
                let _ = write!(s, "  tight: {}", yes_no(t.tight));
                if let Some((i, k)) = t.witness {
                    let _ = write!(s, " (witness {i}, degree {k})");
                }
                let st = &t.stats;
                let _ = writeln!(
                    s,
                    " [subsets {}, checked {}, cones {}, acyclic {}{}]",
                    st.subsets_total,
                    st.checked,
                    st.pruned_cone,
                    st.pruned_acyclic,
                    if st.neighborly_shortcut {
                        ", missing edge"
                    } else {
                        ""
                    }
                );
            }
            Outcome::Error(e) => {
                let _ = writeln!(s, "  tight: error: {e}");
            }
        }
        match &sec.weakly_golod {
            Outcome::Ok(g) => {
                let _ = write!(s, "  weakly Golod: {}", yes_no(g.is_vanishing()));
                if let Some(w) = &g.witness {
                    let _ = write!(
                        s,
                        " (witness ({}, {}), degree {} from ({}, {}), rank {})",
                        w.first, w.second, w.degree, w.p, w.q, w.rank
                    );
                }
                let _ = writeln!(
                    s,
                    " [pairs computed {} of {}]",
                    g.pairs_computed, g.pairs_total
                );
            }
            Outcome::Error(e) => {
                let _ = writeln!(s, "  weakly Golod: error: {e}");
            }
        }
        match &sec.tight_neighborly {
            Some(Outcome::Ok(t)) => {
                let _ = writeln!(
                    s,
                    "  tight-neighborly: {} (C({}-{}-1,2) = {}, C({}+2,2)*{} = {})",
                    yes_no(t.holds),
                    t.m,
                    t.d,
                    t.lhs,
                    t.d,
                    t.beta1,
                    t.rhs
                );
            }
            Some(Outcome::Error(e)) => {
                let _ = writeln!(s, "  tight-neighborly: error: {e}");
            }
            None => {}
        }
        match &sec.hochster {
            Outcome::Ok(h) => {
                let _ = writeln!(
                    s,
                    "  hochster rows: {} (cones skipped {})",
                    h.nonzero_rows, h.cones_skipped
                );
                let _ = writeln!(s, "  tor series: {}", h.tor_series.render());
                match &h.golod_bound {
                    Outcome::Ok(g) => {
                        let _ = writeln!(s, "  golod bound: {}", g.render());
                    }
                    Outcome::Error(e) => {
                        let _ = writeln!(s, "  golod bound: error: {e}");
                    }
                }
                let _ = writeln!(s, "  Z_K betti: {:?}", h.zk_betti);
                let _ = writeln!(s, "  RZ_K betti (predicted): {:?}", h.rzk_betti_predicted);
            }
            Outcome::Error(e) => {
                let _ = writeln!(s, "  hochster: error: {e}");
            }
        }
    }
    if let Some(m) = &r.tight_neighborly_field_mismatch {
        let _ = writeln!(s, "tight-neighborly field mismatch: {m}");
    }
    match &r.fm {
        Some(Outcome::Ok(fm)) => {
            let _ = writeln!(
                s,
                "F(M): {} facets added, |S(M)| = {}",
                fm.added_facets, fm.sm_size
            );
            for (f, b) in &fm.betti {
                let _ = writeln!(s, "  reduced betti over {f}: {b:?}");
            }
            for c in &fm.checks {
                let _ = writeln!(
                    s,
                    "  {}: {}{}",
                    c.name,
                    if c.passed { "pass" } else { "FAIL" },
                    c.witness
                        .as_ref()
                        .map(|w| format!(" ({w})"))
                        .unwrap_or_default()
                );
            }
        }
        Some(Outcome::Error(e)) => {
            let _ = writeln!(s, "F(M): error: {e}");
        }
        None => {}
    }
    let _ = writeln!(
        s,
        "audit: {}",
        if r.audit_clean() {
            "clean"
        } else {
            "CONTRADICTION"
        }
    );
    for a in &r.audit {
        if a.status == AuditStatus::NotApplicable {
            continue;
        }
        let field = a.field.map(|f| format!(" [{f}]")).unwrap_or_default();
        let status = match a.status {
            AuditStatus::Clean => "clean",
            AuditStatus::Contradiction => "CONTRADICTION",
            AuditStatus::NotApplicable => "n/a",
        };
        let _ = writeln!(s, "  {}{}: {} ({})", a.rule, field, status, a.detail);
    }
    let _ = writeln!(s, "---");
    for (label, ms) in &r.timings {
        let _ = writeln!(s, "time {label}: {ms:.1} ms");
    }
    s
}

/// Renders the report without the trailing timing block.
pub fn render_text_stable(r: &AnalysisReport) -> String {
    let text = render_text(r);
    match text.find("\n---\n") {
        Some(i) => text[..i + 1].to_string(),
        None => text,
    }
}

/// One JSON document; timings live under their own key.
pub fn render_json(r: &AnalysisReport) -> String {
    serde_json::to_string_pretty(r).expect("report serializes")
}

/// Faces rendered space-separated, for witnesses in text output.
pub fn render_faces(v: &[Face]) -> String {
    faces(v)
}
