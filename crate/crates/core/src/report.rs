//! The analysis pipeline: loads a parametrization or a system of quadrics,
//! computes every invariant along the second-fundamental-form path and,
//! for parametrizations, along the independent Jacobian-rank path, and
//! assembles verdicts.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::certify::Certifier;
use crate::defect::{self, DefectReport, StructureChecks, TauGaussBound};
use crate::error::{Error, Result};
use crate::jets::{
    chart_at, dimension, join_dimension, refined_third_form_cube, round_trip, second_fundamental_form,
    tangent_join_dimension, JetChart, PolyMap,
};
use crate::linalg::{random_vector, Scalar, Stream};
use crate::quadric::{higher_secant_dimension, QuadricSystem, RankProfile};
use crate::zoo::default_point;

/// A parsed input file.
#[derive(Clone, Debug)]
pub enum Input {
    Map(PolyMap),
    System(QuadricSystem),
}

impl Input {
    /// Dispatches on the `kind` field. Syntax errors carry line and column.
    pub fn parse(text: &str) -> Result<Input> {
        #[derive(Deserialize)]
        struct Kind {
            kind: String,
        }
        let k: Kind = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        match k.kind.as_str() {
            "poly_map" => Ok(Input::Map(PolyMap::from_json(text)?)),
            "quadric_system" => Ok(Input::System(QuadricSystem::from_json(text)?)),
            other => Err(Error::Parse(format!("unknown input kind \"{other}\""))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct AnalyzeOptions {
    pub seed: u64,
    pub certifier: Certifier,
    /// Truncation order of the jet chart; at least 3.
    pub order: u32,
    /// Secant orders for the `σ_k` table.
    pub ks: Vec<usize>,
    /// Chart point for parametrizations; defaults to small integers.
    pub point: Option<Vec<Scalar>>,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions { seed: 0, certifier: Certifier::default(), order: 3, ks: vec![2, 3, 4], point: None }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDescriptor {
    pub kind: String,
    pub label: String,
    pub seed: u64,
    pub trials: usize,
    pub bound: i64,
    pub escalations: u32,
    pub order: u32,
    pub point: Option<Vec<Scalar>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SecantRow {
    pub k: usize,
    /// `n + dim(II_{v₁}(T) + … + II_{v_{k−1}}(T))`.
    pub formula: usize,
    /// `n + (k−1)·a₀`.
    pub bound: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Dims {
    pub n: usize,
    pub a: usize,
    pub ambient: usize,
    pub dim_tau: usize,
    pub dim_sigma: usize,
    pub sigma_k: Vec<SecantRow>,
    pub delta_tau: usize,
    pub delta: usize,
    /// `None` when no third-order data is available.
    pub third_form_nonzero: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CrossCheck {
    pub quantity: String,
    pub formula: usize,
    /// `None` when the oracle is unavailable for this input kind.
    pub oracle: Option<usize>,
    /// Whether the formula is claimed exact for this input.
    pub comparable: bool,
}

impl CrossCheck {
    fn new(quantity: impl Into<String>, formula: usize, oracle: Option<usize>) -> CrossCheck {
        CrossCheck { quantity: quantity.into(), formula, oracle, comparable: true }
    }

    pub fn agrees(&self) -> Option<bool> {
        self.oracle.filter(|_| self.comparable).map(|o| o == self.formula)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
}

impl Status {
    fn from_flag(flag: Option<bool>) -> Status {
        match flag {
            Some(true) => Status::Pass,
            Some(false) => Status::Fail,
            None => Status::NotApplicable,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::NotApplicable => "n/a",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Verdict {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AnalysisReport {
    pub input: InputDescriptor,
    pub profile: RankProfile,
    pub dims: Dims,
    pub defect: Option<DefectReport>,
    pub tau_gauss: Option<TauGaussBound>,
    pub structure: Option<StructureChecks>,
    pub cross_checks: Vec<CrossCheck>,
    pub verdicts: Vec<Verdict>,
}

impl AnalysisReport {
    pub fn verdict(&self, name: &str) -> Option<&Verdict> {
        self.verdicts.iter().find(|v| v.name == name)
    }

    pub fn all_pass(&self) -> bool {
        self.verdicts.iter().all(|v| v.status != Status::Fail)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

pub fn analyze(input: &Input, label: &str, opts: &AnalyzeOptions) -> Result<AnalysisReport> {
    match input {
        Input::Map(f) => analyze_map(f, label, opts),
        Input::System(s) => analyze_system(s, label, opts),
    }
}

fn descriptor(kind: &str, label: &str, opts: &AnalyzeOptions, point: Option<Vec<Scalar>>) -> InputDescriptor {
    InputDescriptor {
        kind: kind.into(),
        label: label.into(),
        seed: opts.seed,
        trials: opts.certifier.trials,
        bound: opts.certifier.bound,
        escalations: opts.certifier.escalations,
        order: opts.order,
        point,
    }
}

/// Invariants shared by both input kinds.
struct Core {
    profile: RankProfile,
    sigma_k: Vec<SecantRow>,
    defect: Option<DefectReport>,
    structure: Option<StructureChecks>,
}

fn core(s: &QuadricSystem, sigma_degenerate: impl Fn(&RankProfile) -> bool, opts: &AnalyzeOptions) -> Result<Core> {
    let root = Stream::new(opts.seed);
    let cert = &opts.certifier;
    let profile = s.certified_profile(&root.derive_named("profile"), cert)?;
    let mut sigma_k = Vec::new();
    for &k in &opts.ks {
        let h = higher_secant_dimension(s, k, &profile, &root.derive_named("sigma_k"), cert)?;
        sigma_k.push(SecantRow { k, formula: h.value, bound: h.bound });
    }
    if s.a() == 0 || s.n() == 0 {
        return Ok(Core { profile, sigma_k, defect: None, structure: None });
    }
    let v = s.generic_vector(&profile, profile.bound, 32, &mut root.derive_named("generic"))?;
    let defect = defect::defect_report(s, &profile, sigma_degenerate(&profile), &root.derive_named("defect"), cert)?;
    let structure = Some(defect::structure_checks(s, &v)?);
    Ok(Core { profile, sigma_k, defect: Some(defect), structure })
}

pub fn analyze_system(s: &QuadricSystem, label: &str, opts: &AnalyzeOptions) -> Result<AnalysisReport> {
    let (n, a) = (s.n(), s.a());
    // Without third-order data the secant variety is taken to have the
    // II-formula dimension n + a₀.
    let c = core(s, |p| n + p.a0 < (2 * n + 1).min(n + a), opts)?;
    let dim_tau = n + c.profile.a0;
    let dims = Dims {
        n,
        a,
        ambient: n + a,
        dim_tau,
        dim_sigma: dim_tau,
        sigma_k: c.sigma_k.clone(),
        delta_tau: n - c.profile.a0,
        delta: 2 * n + 1 - dim_tau,
        third_form_nonzero: None,
    };
    let mut cross_checks =
        vec![CrossCheck::new("dim_tau", dims.dim_tau, None), CrossCheck::new("dim_sigma", dims.dim_sigma, None)];
    for row in &c.sigma_k {
        cross_checks.push(CrossCheck::new(format!("sigma_{}", row.k), row.formula, None));
    }
    let mut report = AnalysisReport {
        input: descriptor("quadric_system", label, opts, None),
        profile: c.profile,
        dims,
        defect: c.defect,
        tau_gauss: None,
        structure: c.structure,
        cross_checks,
        verdicts: Vec::new(),
    };
    report.verdicts = verdicts(&report, None);
    Ok(report)
}

pub fn analyze_map(f: &PolyMap, label: &str, opts: &AnalyzeOptions) -> Result<AnalysisReport> {
    if opts.order < 3 {
        return Err(Error::Invalid("chart order must be at least 3".into()));
    }
    let root = Stream::new(opts.seed);
    let cert = &opts.certifier;
    let (point, chart) = match &opts.point {
        Some(p) => (p.clone(), chart_at(f, p, opts.order)?),
        None => default_chart(f, opts.order, &root)?,
    };
    let round_trip_ok = round_trip(f, &chart)?;
    let s = second_fundamental_form(&chart);
    let (n, a) = (chart.n(), chart.a());

    let profile = s.certified_profile(&root.derive_named("profile"), cert)?;
    let third = if s.n() == 0 || a == 0 {
        None
    } else {
        Some(cert.value("third_form", &root.derive_named("third_form"), |st, b| {
            let v = s.generic_vector(&profile, b.max(profile.bound), 32, st)?;
            Ok(!refined_third_form_cube(&chart, &v).is_zero)
        })?)
    };
    let dim_tau = n + profile.a0;
    let dim_sigma = (dim_tau + usize::from(third == Some(true))).min(n + a);
    let sigma_degenerate = dim_sigma < (2 * n + 1).min(n + a);

    let c = core(&s, |_| sigma_degenerate, opts)?;
    debug_assert!(c.profile.same_invariants(&profile));

    let oracle_stream = root.derive_named("oracle");
    let mut cross_checks = vec![
        CrossCheck::new("n", n, Some(dimension(f, &oracle_stream, cert)?)),
        CrossCheck::new("dim_tau", dim_tau, Some(tangent_join_dimension(f, &oracle_stream, cert)?)),
        CrossCheck::new("dim_sigma", dim_sigma, Some(join_dimension(f, 2, &oracle_stream, cert)?)),
    ];
    for row in &c.sigma_k {
        // For k = 2 the span formula omits the third-order correction; for
        // k ≥ 3 it is exact only when the refined third form vanishes.
        let formula = if row.k == 2 { dim_sigma } else { row.formula };
        let mut check =
            CrossCheck::new(format!("sigma_{}", row.k), formula, Some(join_dimension(f, row.k, &oracle_stream, cert)?));
        check.comparable = row.k == 2 || third == Some(false);
        cross_checks.push(check);
    }

    let tau_gauss =
        defect::applicable(defect::tau_gauss_bound_check(f, n, a, &profile, &root.derive_named("tau_gauss"), cert))?;
    let dims = Dims {
        n,
        a,
        ambient: n + a,
        dim_tau,
        dim_sigma,
        sigma_k: c.sigma_k,
        delta_tau: n - profile.a0,
        delta: 2 * n + 1 - dim_sigma,
        third_form_nonzero: third,
    };
    let mut report = AnalysisReport {
        input: descriptor("poly_map", label, opts, Some(point)),
        profile: c.profile,
        dims,
        defect: c.defect,
        tau_gauss,
        structure: c.structure,
        cross_checks,
        verdicts: Vec::new(),
    };
    report.verdicts = verdicts(&report, Some(round_trip_ok));
    Ok(report)
}

/// The chart at [`default_point`], or else at the first of 16 seeded
/// small random points where the chart exists.
pub fn default_chart(f: &PolyMap, order: u32, root: &Stream) -> Result<(Vec<Scalar>, JetChart)> {
    let first = default_point(f.domain_dim());
    let mut err = match chart_at(f, &first, order) {
        Ok(c) => return Ok((first, c)),
        Err(e @ (Error::NonImmersive { .. } | Error::VanishingPoint)) => e,
        Err(e) => return Err(e),
    };
    let mut st = root.derive_named("base_point");
    for _ in 0..16 {
        let p = random_vector(f.domain_dim(), 3, &mut st);
        match chart_at(f, &p, order) {
            Ok(c) => return Ok((p, c)),
            Err(e @ (Error::NonImmersive { .. } | Error::VanishingPoint)) => err = e,
            Err(e) => return Err(e),
        }
    }
    Err(err)
}

fn verdict(name: &str, flag: Option<bool>, detail: String) -> Verdict {
    Verdict { name: name.into(), status: Status::from_flag(flag), detail }
}

fn verdicts(r: &AnalysisReport, round_trip_ok: Option<bool>) -> Vec<Verdict> {
    let mut out = Vec::new();
    let (n, a) = (r.dims.n, r.dims.a);
    let p = &r.profile;
    out.push(verdict("certified_profile", Some(p.certified), format!("{:?}", (p.a0, p.r, p.dim_ker, p.dim_ann, p.dim_singloc))));
    out.push(verdict("chart_round_trip", round_trip_ok, String::new()));
    for c in &r.cross_checks {
        let detail = match c.oracle {
            Some(o) => format!("formula {} oracle {}", c.formula, o),
            None => format!("formula {} oracle unavailable", c.formula),
        };
        out.push(verdict(&format!("cross_check_{}", c.quantity), c.agrees(), detail));
    }
    // The σ_k bound assumes a degenerate secant variety of dimension n + a₀.
    let sigma_degenerate = r.dims.dim_sigma == n + p.a0 && r.dims.dim_sigma < (2 * n + 1).min(n + a);
    for row in &r.dims.sigma_k {
        let observed = r
            .cross_checks
            .iter()
            .find(|c| c.quantity == format!("sigma_{}", row.k))
            .and_then(|c| c.oracle)
            .unwrap_or(row.formula);
        out.push(verdict(
            &format!("superadditivity_{}", row.k),
            sigma_degenerate.then_some(observed <= row.bound),
            format!("{} ≤ {}", observed, row.bound),
        ));
    }
    let d = r.defect.as_ref();
    out.push(verdict(
        "rank_restriction",
        d.and_then(|d| d.rank_restriction_ok),
        format!("r = {} against n − a + 2 = {}", p.r, (n + 2) as isize - a as isize),
    ));
    out.push(verdict(
        "zak_bound",
        d.and_then(|d| d.zak_bound_ok),
        d.map_or(String::new(), |d| format!("2a = {} against n + 4 + dim F_v = {}", 2 * a, n as isize + 4 + d.fiber_dim)),
    ));
    let identity = d.and_then(|d| {
        d.rank_restriction_ok.map(|_| d.fiber_dim == a as isize - p.r as isize - 2)
    });
    out.push(verdict(
        "fiber_dimension_formula",
        identity,
        d.map_or(String::new(), |d| format!("dim F_v = {} against a − r − 2 = {}", d.fiber_dim, a as isize - p.r as isize - 2)),
    ));
    let cv = d.and_then(|d| d.clifford_verdict.as_ref());
    out.push(verdict(
        "clifford_relation",
        cv.map(|c| c.relation_holds),
        cv.map_or(String::new(), |c| {
            format!("sign {:+}, module dim {}, kernel dim {}, v pairs {}", c.sign, c.module_dim, c.kernel_dim, c.v_pairs_hold)
        }),
    ));
    out.push(verdict("so_membership", d.and_then(|d| d.so_membership), String::new()));
    if let Some(st) = &r.structure {
        let items = [
            ("kernel_in_singloc", st.kernel_in_singloc),
            ("annihilator_duality", st.annihilator_duality),
            ("differential_kernel", st.differential_kernel),
            ("singloc_maps_into_fiber", st.singloc_maps_into_fiber),
            ("fiber_dimension_identity", st.fiber_dimension_identity),
            ("induced_singloc", st.induced_singloc),
        ];
        for (name, ok) in items {
            out.push(verdict(name, Some(ok), String::new()));
        }
    }
    let tg = r.tau_gauss.as_ref();
    let tg_detail = tg.map_or(String::new(), |t| format!("fiber {} δ_τ {}", t.fiber, t.delta_tau));
    let tg = tg.filter(|t| t.bounds_apply);
    out.push(verdict("tau_gauss_delta_plus_one", tg.map(|t| t.meets_delta_plus_one), tg_detail.clone()));
    out.push(verdict("tau_gauss_delta_plus_two", tg.map(|t| t.meets_delta_plus_two), tg_detail));
    out
}

pub fn render(r: &AnalysisReport, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(r).expect("serializable");
            s.push('\n');
            s
        }
        Format::Text => render_text(r),
    }
}

fn render_text(r: &AnalysisReport) -> String {
    let mut out = String::new();
    let d = &r.dims;
    let p = &r.profile;
    let _ = writeln!(out, "input        {} ({})", r.input.label, r.input.kind);
    let _ = writeln!(
        out,
        "certifier    seed {} trials {} bound {} escalations {}",
        r.input.seed, r.input.trials, r.input.bound, r.input.escalations
    );
    let _ = writeln!(out, "n a ambient  {} {} {}", d.n, d.a, d.ambient);
    let _ = writeln!(
        out,
        "profile      a0 {} r {} ker {} ann {} singloc {}{}",
        p.a0,
        p.r,
        p.dim_ker,
        p.dim_ann,
        p.dim_singloc,
        if p.certified { "" } else { " (uncertified)" }
    );
    let _ = writeln!(out, "dim tau      {}  (defect {})", d.dim_tau, d.delta_tau);
    let _ = writeln!(out, "dim sigma    {}  (defect {})", d.dim_sigma, d.delta);
    for row in &d.sigma_k {
        let _ = writeln!(out, "sigma_{}      {}  (bound {})", row.k, row.formula, row.bound);
    }
    if let Some(df) = &r.defect {
        let _ = writeln!(out, "vertex dim   {}", df.vertex_dim);
        let _ = writeln!(out, "fiber dim    {}", df.fiber_dim);
    }
    if let Some(t) = &r.tau_gauss {
        let _ = writeln!(out, "tau gauss    fiber {} delta_tau {}", t.fiber, t.delta_tau);
    }
    let _ = writeln!(out);
    let _ = writeln!(out, "{:<16} {:>8} {:>8}", "quantity", "formula", "oracle");
    for c in &r.cross_checks {
        let o = c.oracle.map_or_else(|| "-".to_string(), |o| o.to_string());
        let _ = writeln!(out, "{:<16} {:>8} {:>8}", c.quantity, c.formula, o);
    }
    let _ = writeln!(out);
    for v in &r.verdicts {
        if v.detail.is_empty() {
            let _ = writeln!(out, "[{:<4}] {}", v.status.as_str(), v.name);
        } else {
            let _ = writeln!(out, "[{:<4}] {}: {}", v.status.as_str(), v.name, v.detail);
        }
    }
    out
}

/// Parses a JSON report produced by [`render`].
pub fn parse_report(text: &str) -> Result<AnalysisReport> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

/// Process exit code for a pipeline outcome.
pub fn exit_code<T>(r: &Result<T>) -> i32 {
    match r {
        Ok(_) => 0,
        Err(
            Error::Parse(_)
            | Error::Invalid(_)
            | Error::DimensionMismatch { .. }
            | Error::TagMismatch(..)
            | Error::NonImmersive { .. }
            | Error::VanishingPoint
            | Error::Io(_),
        ) => 1,
        Err(Error::Certification { .. } | Error::DegenerateProjection(_)) => 2,
        Err(_) => 3,
    }
}
