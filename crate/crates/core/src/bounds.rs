//! Right-hand-side evaluators for the integral bounds and the corpus
//! verification harness.
//!
//! Every bound compares the same left-hand side — the Stieltjes integral of
//! the positive circle maximum against an increasing integration function —
//! with one of five right-hand sides:
//!
//! * `main-max`: `(6R/(R−r))·T(r,R)·max{M, ∫₀^{d} ln(4R/t) dω(t)}`;
//! * `main-sum`: the same with the inner integral replaced by
//!   `∫₀^{d} ω(t)/t dt + M·ln(4R/d)`, which dominates it;
//! * `thm1`: `(6R/(R−r))·T(r,R)·M·ln(4·e^{s}·R / h⁻¹(M))` for an admissible
//!   gauge `h` dominating the modulus of continuity;
//! * `thm2-content`: `thm1` with `M` replaced by the h-content of a carrier
//!   set of the measure (monotonicity of `x ↦ x·ln(4e^s R/h⁻¹(x))` licenses
//!   the swap), together with the chain `M ≤ content ≤ h(r)`;
//! * `thm4`: `(24b/d)·(R/(R−r))·T(r,R)·C·ln(e·R^d / C)` with `C` the
//!   normalized d-dimensional content, for moduli bounded by `b·t^d`.
//!
//! Inapplicable hypotheses surface as [`Error::Precondition`] and are
//! recorded by the harness as skips, never as passes.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use num_complex::Complex64;

use crate::content::exact_content;
use crate::error::{Error, Result};
use crate::frostman::frostman_measure;
use crate::gauge::Gauge;
use crate::increasing::IncreasingFunction;
use crate::nevanlinna::LogRatio;
use crate::quad::QuadResult;
use crate::set::IntervalUnion;

/// Relative slack of the pass criterion `lhs ≤ rhs·(1 + REL) + ABS`;
/// quadratures run well below it, so slack dominates numeric error.
pub const PASS_REL: f64 = 1e-6;
/// Absolute slack of the pass criterion.
pub const PASS_ABS: f64 = 1e-9;

/// The pass criterion used everywhere in the harness.
pub fn inequality_holds(lhs: f64, rhs: f64) -> bool {
    lhs <= rhs * (1.0 + PASS_REL) + PASS_ABS
}

/// The five right-hand-side variants, named as they appear in reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundVariant {
    MainMax,
    MainSum,
    Thm1,
    Thm2Content,
    Thm4,
}

impl BoundVariant {
    pub fn as_str(&self) -> &'static str {
        match self {
            BoundVariant::MainMax => "main-max",
            BoundVariant::MainSum => "main-sum",
            BoundVariant::Thm1 => "thm1",
            BoundVariant::Thm2Content => "thm2-content",
            BoundVariant::Thm4 => "thm4",
        }
    }

    pub const ALL: [BoundVariant; 5] = [
        BoundVariant::MainMax,
        BoundVariant::MainSum,
        BoundVariant::Thm1,
        BoundVariant::Thm2Content,
        BoundVariant::Thm4,
    ];
}

/// Outcome of one variant on one case.
#[derive(Debug, Clone, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum VariantStatus {
    Pass { rhs: f64, ratio: f64 },
    Fail { rhs: f64, ratio: f64, reason: String },
    Skip { reason: String },
}

impl VariantStatus {
    pub fn passed(&self) -> bool {
        matches!(self, VariantStatus::Pass { .. })
    }

    pub fn failed(&self) -> bool {
        matches!(self, VariantStatus::Fail { .. })
    }
}

/// One verification record: the left-hand integral and each variant outcome.
#[derive(Debug, Clone, Serialize)]
pub struct BoundReport {
    pub case_id: String,
    pub lhs: f64,
    pub lhs_error: f64,
    pub tol: f64,
    pub outcomes: Vec<(BoundVariant, VariantStatus)>,
}

impl BoundReport {
    pub fn all_passed(&self) -> bool {
        self.outcomes.iter().all(|(_, s)| !s.failed())
    }
}

/// `∫₀^r M⁺(t) dm(t)` with certified tolerance. Radii carrying poles make
/// the integrand spike; the quadrature nudges such nodes sideways, which is
/// sound because the spike is integrable.
pub fn lhs_integral(
    u: &LogRatio,
    m: &IncreasingFunction,
    r: f64,
    tol: f64,
) -> Result<QuadResult> {
    if (m.domain_right() - r).abs() > 1e-12 * r.max(1.0) {
        return Err(Error::Domain(format!(
            "integration function lives on [0, {}], expected [0, {r}]",
            m.domain_right()
        )));
    }
    if u.working_radius() <= r {
        return Err(Error::Domain("working radius must exceed the integration range".into()));
    }
    m.stieltjes_integral(&|t| u.max_plus_on_circle(t).value, tol)
}

/// Materialize the modulus of continuity of `m` as a piecewise-linear
/// increasing function on `[0, upto]`. With few breakpoints the knots sit on
/// all pairwise breakpoint differences — exactly where the true modulus can
/// change slope — making the materialization exact; otherwise a uniform
/// refinement is used.
pub fn materialize_omega(m: &IncreasingFunction, upto: f64) -> Result<IncreasingFunction> {
    let bps = m.breakpoints();
    let mut ts: Vec<f64> = vec![0.0, upto];
    if bps.len() <= 180 {
        for i in 0..bps.len() {
            for j in (i + 1)..bps.len() {
                let d = bps[j] - bps[i];
                if d > 0.0 && d <= upto {
                    ts.push(d);
                }
            }
        }
    } else {
        for i in 1..4096 {
            ts.push(upto * i as f64 / 4096.0);
        }
    }
    ts.sort_by(|a, b| a.partial_cmp(b).unwrap());
    ts.dedup();
    let mut knots: Vec<(f64, f64)> = Vec::with_capacity(ts.len());
    let mut prev_v = 0.0f64;
    for &t in &ts {
        if let Some(&(lt, _)) = knots.last() {
            if t - lt < 1e-15 * upto.max(1.0) {
                continue;
            }
        }
        let v = m.modulus_of_continuity(t).max(prev_v);
        knots.push((t, v));
        prev_v = v;
    }
    IncreasingFunction::from_linear_knots(upto, knots)
}

/// `∫ ln(B/t) dω(t)` for a piecewise-linear `ω`: closed form per piece via
/// `∫ ln(B/t) dt = t·ln(B/t) + t`, which extends continuously by 0 to `t = 0`.
pub fn log_weight_integral(omega: &IncreasingFunction, big_b: f64) -> f64 {
    let antiderivative = |t: f64| if t <= 0.0 { 0.0 } else { t * (big_b / t).ln() + t };
    omega
        .linear_knots()
        .windows(2)
        .map(|w| {
            let rho = (w[1].1 - w[0].1) / (w[1].0 - w[0].0);
            rho * (antiderivative(w[1].0) - antiderivative(w[0].0))
        })
        .sum()
}

fn check_radii(r: f64, big_r: f64) -> Result<()> {
    if !(r > 0.0 && big_r > r) {
        return Err(Error::Domain(format!("need 0 < r < R, got r = {r}, R = {big_r}")));
    }
    Ok(())
}

/// Verify `ω(t) ≤ bound(t)` on a grid of breakpoint differences plus a
/// uniform refinement; names the witness on failure.
pub fn verify_modulus_bound(
    m: &IncreasingFunction,
    bound: &dyn Fn(f64) -> f64,
    label: &str,
) -> Result<()> {
    let r = m.domain_right();
    let bps = m.breakpoints();
    let mut ts: Vec<f64> = (0..=256).map(|i| r * i as f64 / 256.0).collect();
    if bps.len() <= 180 {
        for i in 0..bps.len() {
            for j in (i + 1)..bps.len() {
                ts.push(bps[j] - bps[i]);
            }
        }
    }
    for &t in &ts {
        if !(t > 0.0 && t <= r) {
            continue;
        }
        let w = m.modulus_of_continuity(t);
        let h = bound(t);
        if w > h * (1.0 + 1e-9) + 1e-12 {
            return Err(Error::Precondition(format!(
                "modulus exceeds {label} at witness t = {t}: omega = {w}, bound = {h}"
            )));
        }
    }
    Ok(())
}

/// The max-or-sum right-hand side of the main bound.
///
/// Preconditions: `∫₀^{4R} ω(t)/t dt < ∞` (else the bound is inapplicable)
/// and `r < R`. The `max` variant pairs `M` with the Stieltjes integral
/// `∫₀^{d} ln(4R/t) dω`; the `sum` variant replaces that integral with the
/// dominating `∫₀^{d} ω(t)/t dt + M·ln(4R/d)`.
pub fn rhs_main(
    u: &LogRatio,
    m: &IncreasingFunction,
    r: f64,
    big_r: f64,
    variant: BoundVariant,
    tol: f64,
) -> Result<f64> {
    check_radii(r, big_r)?;
    let total = m.total_variation();
    if total <= 0.0 {
        return Ok(0.0);
    }
    let dini = m.dini_integral(4.0 * big_r)?;
    if !dini.value.is_finite() {
        return Err(Error::Precondition(
            "Dini condition fails: the modulus integral diverges (atomic part present)".into(),
        ));
    }
    let d_m = m.stabilization_diameter().diameter;
    let inner = match variant {
        BoundVariant::MainMax => {
            let omega = materialize_omega(m, d_m)?;
            total.max(log_weight_integral(&omega, 4.0 * big_r))
        }
        BoundVariant::MainSum => {
            let head = m.dini_integral(d_m)?.value;
            total.max(head + total * (4.0 * big_r / d_m).ln())
        }
        other => {
            return Err(Error::Domain(format!(
                "rhs_main evaluates main-max/main-sum, not {}",
                other.as_str()
            )))
        }
    };
    let t_char = u.characteristic(r, big_r, tol)?;
    Ok(6.0 * big_r / (big_r - r) * t_char * inner)
}

/// `(6R/(R−r))·T(r,R)·M·ln(4·e^s·R / h⁻¹(M))` for an admissible gauge
/// dominating the modulus of continuity.
pub fn rhs_modulus_gauge(
    u: &LogRatio,
    m: &IncreasingFunction,
    g: &Gauge,
    r: f64,
    big_r: f64,
    tol: f64,
) -> Result<f64> {
    check_radii(r, big_r)?;
    let stretch = g.stretch_constant();
    if !stretch.is_finite() {
        return Err(Error::Precondition(
            "gauge inadmissible: the stretch constant diverges".into(),
        ));
    }
    verify_modulus_bound(m, &|t| g.eval(t), "the gauge")?;
    let total = m.total_variation();
    if total <= 0.0 {
        return Ok(0.0);
    }
    let t_char = u.characteristic(r, big_r, tol)?;
    gauge_bound_value(t_char, r, big_r, total, stretch, g)
}

/// The common factor `(6R/(R−r))·T·x·ln(4·e^s·R / h⁻¹(x))`.
fn gauge_bound_value(
    t_char: f64,
    r: f64,
    big_r: f64,
    x: f64,
    stretch: f64,
    g: &Gauge,
) -> Result<f64> {
    if x <= 0.0 {
        return Ok(0.0);
    }
    let hinv = g.inverse(x.min(g.value_at_right()))?;
    Ok(6.0 * big_r / (big_r - r) * t_char * x * (4.0 * stretch.exp() * big_r / hinv).ln())
}

/// Outcome of the content-swap bound: the value plus the verified chain
/// `M ≤ content ≤ h(r)`. A broken chain is a property failure (data), not an
/// error.
#[derive(Debug, Clone, Copy)]
pub struct ContentSwapOutcome {
    pub rhs: f64,
    pub content: f64,
    pub chain_lower_ok: bool,
    pub chain_upper_ok: bool,
}

/// The content-swap right-hand side: `M` in the gauge bound is replaced by
/// the h-content of a carrier `S ⊇ supp m'`. Requires `l ≥ r` — only then is
/// the whole ambient interval an admissible cover piece, which is what caps
/// the content at `h(r)` and keeps the swap inside the monotone range.
#[allow(clippy::too_many_arguments)]
pub fn rhs_content_swap(
    u: &LogRatio,
    m: &IncreasingFunction,
    g: &Gauge,
    carrier: &IntervalUnion,
    r: f64,
    big_r: f64,
    l: f64,
    tol: f64,
) -> Result<ContentSwapOutcome> {
    check_radii(r, big_r)?;
    if l < r {
        return Err(Error::Precondition(format!(
            "content swap needs diameter l >= r, got l = {l}, r = {r}"
        )));
    }
    let supp = m.support_of_nonconstancy();
    if !supp.subset_of(carrier, 1e-12) {
        return Err(Error::Precondition(
            "support of non-constancy is not contained in the carrier set".into(),
        ));
    }
    let stretch = g.stretch_constant();
    if !stretch.is_finite() {
        return Err(Error::Precondition(
            "gauge inadmissible: the stretch constant diverges".into(),
        ));
    }
    verify_modulus_bound(m, &|t| g.eval(t), "the gauge")?;
    let total = m.total_variation();
    let content = exact_content(g, carrier, l)?.value;
    let h_r = g.value_at_right();
    let chain_lower_ok = total <= content * (1.0 + 1e-9) + 1e-9;
    let chain_upper_ok = content <= h_r * (1.0 + 1e-9) + 1e-9;
    let t_char = u.characteristic(r, big_r, tol)?;
    let rhs = gauge_bound_value(t_char, r, big_r, content, stretch, g)?;
    Ok(ContentSwapOutcome { rhs, content, chain_lower_ok, chain_upper_ok })
}

/// The d-dimensional right-hand side
/// `(24b/d)·(R/(R−r))·T(r,R)·C·ln(e·R^d / C)` with `C` the normalized
/// d-content of the carrier; `C = 0` yields 0 (the limit of `x·ln(e·B/x)`).
#[allow(clippy::too_many_arguments)]
pub fn rhs_dimension_content(
    u: &LogRatio,
    m: &IncreasingFunction,
    carrier: &IntervalUnion,
    r: f64,
    big_r: f64,
    b: f64,
    d: f64,
    l: f64,
    tol: f64,
) -> Result<f64> {
    check_radii(r, big_r)?;
    if !(d > 0.0 && d <= 1.0) {
        return Err(Error::Precondition(format!("dimension d must lie in (0, 1], got {d}")));
    }
    if !(b > 0.0) {
        return Err(Error::Precondition(format!("coefficient b must be positive, got {b}")));
    }
    if l < r {
        return Err(Error::Precondition(format!(
            "dimension bound needs r <= l, got l = {l}, r = {r}"
        )));
    }
    let supp = m.support_of_nonconstancy();
    if !supp.subset_of(carrier, 1e-12) {
        return Err(Error::Precondition(
            "support of non-constancy is not contained in the carrier set".into(),
        ));
    }
    verify_modulus_bound(m, &|t| b * t.powf(d), "b·t^d")?;
    let gauge_d = Gauge::normalized_power(d, r)?;
    let content = exact_content(&gauge_d, carrier, l)?.value;
    if content <= 0.0 {
        return Ok(0.0);
    }
    let t_char = u.characteristic(r, big_r, tol)?;
    let log_term = (std::f64::consts::E * big_r.powf(d) / content).ln();
    Ok(24.0 * b / d * big_r / (big_r - r) * t_char * content * log_term)
}

/// Sharpness record: how tightly the content-swap expression tracks the mass
/// expression for the constructed Frostman measure on a set.
#[derive(Debug, Clone)]
pub struct SharpnessReport {
    pub total_mass: f64,
    pub content: f64,
    /// `M·ln(4·e^s·R / h⁻¹(M))`
    pub mass_term: f64,
    /// `content·ln(4·e^s·R / h⁻¹(content))`
    pub content_term: f64,
    /// Smallest `A` with `content_term ≤ A·mass_term` for this instance.
    pub smallest_a: f64,
    /// Whether the constructed distribution's modulus stays below the gauge.
    pub modulus_ok: bool,
}

/// Build the Frostman measure on `S`, check its modulus against the gauge,
/// and measure the constant of the sandwich between the mass expression and
/// the content expression.
pub fn frostman_sharpness(
    g: &Gauge,
    s: &IntervalUnion,
    r: f64,
    big_r: f64,
    net_base: u32,
    depth: u32,
) -> Result<SharpnessReport> {
    check_radii(r, big_r)?;
    if (s.ambient_right() - r).abs() > 1e-12 * r.max(1.0) {
        return Err(Error::Domain("carrier ambient must match r".into()));
    }
    let stretch = g.stretch_constant();
    if !stretch.is_finite() {
        return Err(Error::Precondition(
            "gauge inadmissible: the stretch constant diverges".into(),
        ));
    }
    let res = frostman_measure(g, s, net_base, depth)?;
    let modulus_ok = verify_modulus_bound(&res.distribution, &|t| g.eval(t), "the gauge").is_ok();
    let content = exact_content(g, s, f64::INFINITY)?.value;
    let factor = |x: f64| -> Result<f64> {
        let hinv = g.inverse(x.min(g.value_at_right()))?;
        Ok(x * (4.0 * stretch.exp() * big_r / hinv).ln())
    };
    let mass_term = factor(res.total_mass)?;
    let content_term = factor(content)?;
    Ok(SharpnessReport {
        total_mass: res.total_mass,
        content,
        mass_term,
        content_term,
        smallest_a: if mass_term > 0.0 { (content_term / mass_term).max(1.0) } else { f64::INFINITY },
        modulus_ok,
    })
}

// ---------------------------------------------------------------------------
// Corpus harness
// ---------------------------------------------------------------------------

/// Which integration functions the corpus pairs with the random test
/// functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MeasureChoice {
    /// `m(t) = t` on `[0, r]`.
    Identity,
    /// The Frostman measure of the stage-5 ternary prefractal, matched net.
    FrostmanCantor,
    /// A seeded jump-free piecewise-linear measure with plateaus.
    PiecewiseLinear,
}

impl MeasureChoice {
    pub fn as_str(&self) -> &'static str {
        match self {
            MeasureChoice::Identity => "identity",
            MeasureChoice::FrostmanCantor => "frostman-cantor",
            MeasureChoice::PiecewiseLinear => "piecewise-linear",
        }
    }
}

fn default_count() -> usize {
    100
}
fn default_r() -> f64 {
    1.0
}
fn default_big_r() -> f64 {
    2.0
}
fn default_measures() -> Vec<MeasureChoice> {
    vec![
        MeasureChoice::Identity,
        MeasureChoice::FrostmanCantor,
        MeasureChoice::PiecewiseLinear,
    ]
}
fn default_variants() -> Vec<BoundVariant> {
    BoundVariant::ALL.to_vec()
}
fn default_r0() -> Vec<f64> {
    vec![0.0, 0.5, 1.0]
}
fn default_tol() -> f64 {
    1e-8
}
fn default_max_singularities() -> u32 {
    6
}

/// Configuration of a verification run. The seed fully determines the
/// corpus; identical configs produce identical reports.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CorpusConfig {
    pub seed: u64,
    #[serde(default = "default_count")]
    pub count: usize,
    #[serde(default = "default_r")]
    pub r: f64,
    #[serde(default = "default_big_r")]
    pub big_r: f64,
    #[serde(default = "default_measures")]
    pub measures: Vec<MeasureChoice>,
    #[serde(default = "default_variants")]
    pub variants: Vec<BoundVariant>,
    /// Fractions of `r` at which the first characteristic argument is also
    /// exercised; the bound must hold for each.
    #[serde(default = "default_r0")]
    pub r0_fractions: Vec<f64>,
    #[serde(default = "default_tol")]
    pub tol: f64,
    /// Scale every right-hand side by this factor before comparison
    /// (negative-control knob; `None` = honest run).
    #[serde(default)]
    pub corrupt_rhs_factor: Option<f64>,
    #[serde(default = "default_max_singularities")]
    pub max_singularities: u32,
}

impl CorpusConfig {
    pub fn new(seed: u64) -> Self {
        Self {
            seed,
            count: default_count(),
            r: default_r(),
            big_r: default_big_r(),
            measures: default_measures(),
            variants: default_variants(),
            r0_fractions: default_r0(),
            tol: default_tol(),
            corrupt_rhs_factor: None,
            max_singularities: default_max_singularities(),
        }
    }
}

/// Everything the harness precomputes once per integration function.
struct MeasureBundle {
    choice: MeasureChoice,
    m: IncreasingFunction,
    gauge: Gauge,
    b: f64,
    d: f64,
    total: f64,
    stretch: f64,
    /// inner max-variant factor `max{M, ∫ ln(4R/t) dω}`
    inner_max: f64,
    /// inner sum-variant factor `max{M, ∫ ω/t + M ln(4R/d_m)}`
    inner_sum: f64,
    /// witness message if the modulus/gauge check failed
    modulus_issue: Option<String>,
    swap_content: f64,
    chain_lower_ok: bool,
    chain_upper_ok: bool,
    dim_content: f64,
}

fn build_bundle(choice: MeasureChoice, cfg: &CorpusConfig) -> Result<MeasureBundle> {
    let r = cfg.r;
    let (m, gauge, carrier, b, d) = match choice {
        MeasureChoice::Identity => {
            let m = IncreasingFunction::identity(r);
            let gauge = Gauge::power(1.0, 1.0, r)?;
            let carrier = IntervalUnion::normalize(&[(0.0, r)], r)?;
            (m, gauge, carrier, 1.0, 1.0)
        }
        MeasureChoice::FrostmanCantor => {
            let d = 2f64.ln() / 3f64.ln();
            let gauge = Gauge::power(1.0, d, r)?;
            let carrier = IntervalUnion::cantor_prefractal(5, 1.0 / 3.0, r)?;
            let m = frostman_measure(&gauge, &carrier, 3, 5)?.distribution;
            (m, gauge, carrier, 1.0, d)
        }
        MeasureChoice::PiecewiseLinear => {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x9e37_79b9_7f4a_7c15);
            let mut knots: Vec<(f64, f64)> = vec![(0.0, 0.0)];
            let mut t = 0.0f64;
            let mut v = 0.0f64;
            for _ in 0..6 {
                t += rng.gen_range(0.02..0.2);
                v += rng.gen_range(0.0..0.3);
                knots.push((t.min(0.98), v));
                t += rng.gen_range(0.0..0.08); // plateau
                knots.push((t.min(0.99), v));
            }
            // keep knots strictly increasing after the clamping above
            knots.dedup_by(|a, b| a.0 <= b.0);
            knots.push((r, v));
            let m = IncreasingFunction::from_linear_knots(r, knots)?;
            let b = m.max_density() * (1.0 + 1e-9);
            let gauge = Gauge::power(b, 1.0, r)?;
            let carrier = m.support_of_nonconstancy();
            (m, gauge, carrier, b, 1.0)
        }
    };
    let total = m.total_variation();
    let d_m = m.stabilization_diameter().diameter;
    let inner_max = if total > 0.0 {
        let omega = materialize_omega(&m, d_m)?;
        total.max(log_weight_integral(&omega, 4.0 * cfg.big_r))
    } else {
        0.0
    };
    let inner_sum = if total > 0.0 {
        let head = m.dini_integral(d_m)?.value;
        total.max(head + total * (4.0 * cfg.big_r / d_m).ln())
    } else {
        0.0
    };
    if !m.support_of_nonconstancy().subset_of(&carrier, 1e-12) {
        return Err(Error::Precondition(
            "bundle support is not contained in its carrier set".into(),
        ));
    }
    let modulus_issue = verify_modulus_bound(&m, &|t| gauge.eval(t), "the gauge")
        .err()
        .map(|e| e.to_string());
    let swap_content = exact_content(&gauge, &carrier, f64::INFINITY)?.value;
    let h_r = gauge.value_at_right();
    let gauge_d = Gauge::normalized_power(d, r)?;
    let dim_content = exact_content(&gauge_d, &carrier, f64::INFINITY)?.value;
    Ok(MeasureBundle {
        choice,
        stretch: gauge.stretch_constant(),
        total,
        inner_max,
        inner_sum,
        modulus_issue,
        swap_content,
        chain_lower_ok: total <= swap_content * (1.0 + 1e-9) + 1e-9,
        chain_upper_ok: swap_content <= h_r * (1.0 + 1e-9) + 1e-9,
        dim_content,
        m,
        gauge,
        b,
        d,
    })
}

/// Draw a random test function with up to `max_singularities` atoms inside
/// `|z| ≤ 0.9R`, avoiding the circles where the characteristic is evaluated.
fn random_log_ratio(rng: &mut ChaCha8Rng, cfg: &CorpusConfig) -> LogRatio {
    let avoid: Vec<f64> = cfg.r0_fractions.iter().map(|f| f * cfg.r).collect();
    loop {
        let n_total = rng.gen_range(1..=cfg.max_singularities);
        let n_zeros = rng.gen_range(0..=n_total);
        let mut zeros = Vec::new();
        let mut poles = Vec::new();
        for i in 0..n_total {
            let loc = loop {
                let re = rng.gen_range(-0.9 * cfg.big_r..0.9 * cfg.big_r);
                let im = rng.gen_range(-0.9 * cfg.big_r..0.9 * cfg.big_r);
                let z = Complex64::new(re, im);
                let norm = z.norm();
                if norm > 1e-3
                    && norm <= 0.9 * cfg.big_r
                    && avoid.iter().all(|&a| (norm - a).abs() > 1e-3)
                {
                    break z;
                }
            };
            let mult = rng.gen_range(1..=2u32);
            if i < n_zeros {
                zeros.push((loc, mult));
            } else {
                poles.push((loc, mult));
            }
        }
        let c0 = rng.gen_range(-1.0..1.0);
        if let Ok(u) = LogRatio::new(c0, zeros, poles, f64::INFINITY) {
            return u;
        }
    }
}

fn evaluate_case(
    case_id: String,
    u: &LogRatio,
    bundle: &MeasureBundle,
    cfg: &CorpusConfig,
) -> BoundReport {
    let lhs = match lhs_integral(u, &bundle.m, cfg.r, cfg.tol) {
        Ok(q) => q,
        Err(e) => {
            let outcomes = cfg
                .variants
                .iter()
                .map(|&v| (v, VariantStatus::Skip { reason: format!("lhs failed: {e}") }))
                .collect();
            return BoundReport {
                case_id,
                lhs: f64::NAN,
                lhs_error: f64::NAN,
                tol: cfg.tol,
                outcomes,
            };
        }
    };
    // characteristics with the pole integral started at each requested r0
    let mut t_chars: Vec<std::result::Result<f64, String>> = Vec::new();
    for &f in &cfg.r0_fractions {
        t_chars.push(
            u.characteristic_substituted(f * cfg.r, cfg.r, cfg.big_r, cfg.tol)
                .map_err(|e| e.to_string()),
        );
    }
    let factor = cfg.corrupt_rhs_factor.unwrap_or(1.0);
    let big_r = cfg.big_r;
    let r = cfg.r;
    let front = 6.0 * big_r / (big_r - r);

    let mut outcomes = Vec::with_capacity(cfg.variants.len());
    for &variant in &cfg.variants {
        // rhs as a function of the characteristic value
        let per_t: std::result::Result<Box<dyn Fn(f64) -> f64>, String> = match variant {
            BoundVariant::MainMax => Ok(Box::new(move |t| front * t * bundle.inner_max)),
            BoundVariant::MainSum => Ok(Box::new(move |t| front * t * bundle.inner_sum)),
            BoundVariant::Thm1 => bundle
                .modulus_gate()
                .and_then(|_| bundle.gauge_factor(bundle.total, big_r))
                .map(|x| -> Box<dyn Fn(f64) -> f64> { Box::new(move |t| front * t * x) }),
            BoundVariant::Thm2Content => bundle
                .modulus_gate()
                .and_then(|_| bundle.gauge_factor(bundle.swap_content, big_r))
                .map(|x| -> Box<dyn Fn(f64) -> f64> { Box::new(move |t| front * t * x) }),
            BoundVariant::Thm4 => {
                let c = bundle.dim_content;
                let coeff = 24.0 * bundle.b / bundle.d * big_r / (big_r - r);
                let log_term = if c > 0.0 {
                    (std::f64::consts::E * big_r.powf(bundle.d) / c).ln()
                } else {
                    0.0
                };
                bundle
                    .modulus_gate()
                    .map(|_| -> Box<dyn Fn(f64) -> f64> { Box::new(move |t| coeff * t * c * log_term) })
            }
        };
        let per_t = match per_t {
            Ok(f) => f,
            Err(reason) => {
                outcomes.push((variant, VariantStatus::Skip { reason }));
                continue;
            }
        };
        // chain failures of the content swap are failures, not skips
        if variant == BoundVariant::Thm2Content && !(bundle.chain_lower_ok && bundle.chain_upper_ok)
        {
            outcomes.push((
                variant,
                VariantStatus::Fail {
                    rhs: f64::NAN,
                    ratio: f64::NAN,
                    reason: "content chain M <= content <= h(r) broken".into(),
                },
            ));
            continue;
        }
        let mut worst_rhs = f64::INFINITY;
        let mut failure: Option<String> = None;
        let mut skip: Option<String> = None;
        for (idx, t_char) in t_chars.iter().enumerate() {
            match t_char {
                Ok(t) => {
                    let rhs = per_t(*t) * factor;
                    worst_rhs = worst_rhs.min(rhs);
                    if !inequality_holds(lhs.value, rhs) {
                        failure = Some(format!(
                            "violated at r0 fraction {}",
                            cfg.r0_fractions[idx]
                        ));
                    }
                }
                Err(e) => skip = Some(e.clone()),
            }
        }
        let status = if let Some(reason) = skip {
            VariantStatus::Skip { reason }
        } else if let Some(reason) = failure {
            VariantStatus::Fail { rhs: worst_rhs, ratio: lhs.value / worst_rhs, reason }
        } else {
            VariantStatus::Pass { rhs: worst_rhs, ratio: lhs.value / worst_rhs }
        };
        outcomes.push((variant, status));
    }
    BoundReport { case_id, lhs: lhs.value, lhs_error: lhs.error, tol: cfg.tol, outcomes }
}

impl MeasureBundle {
    fn modulus_gate(&self) -> std::result::Result<(), String> {
        match &self.modulus_issue {
            Some(msg) => Err(msg.clone()),
            None => Ok(()),
        }
    }

    fn gauge_factor(&self, x: f64, big_r: f64) -> std::result::Result<f64, String> {
        if x <= 0.0 {
            return Ok(0.0);
        }
        let hinv = self
            .gauge
            .inverse(x.min(self.gauge.value_at_right()))
            .map_err(|e| e.to_string())?;
        Ok(x * (4.0 * self.stretch.exp() * big_r / hinv).ln())
    }
}

/// Run the seeded corpus: `count` random test functions times the configured
/// integration functions, every variant, every characteristic substitution.
/// Failures are data; only malformed configuration errors out.
pub fn verify_corpus(cfg: &CorpusConfig) -> Result<Vec<BoundReport>> {
    check_radii(cfg.r, cfg.big_r)?;
    if cfg.count == 0 || cfg.measures.is_empty() || cfg.variants.is_empty() {
        return Err(Error::Domain("corpus needs at least one case, measure and variant".into()));
    }
    if !(1..=6).contains(&cfg.max_singularities) {
        return Err(Error::Domain("max_singularities must lie in 1..=6".into()));
    }
    let bundles: Vec<MeasureBundle> = cfg
        .measures
        .iter()
        .map(|&c| build_bundle(c, cfg))
        .collect::<Result<_>>()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let functions: Vec<LogRatio> = (0..cfg.count).map(|_| random_log_ratio(&mut rng, cfg)).collect();

    let cases: Vec<(usize, usize)> = (0..functions.len())
        .flat_map(|f| (0..bundles.len()).map(move |b| (f, b)))
        .collect();
    Ok(cases
        .par_iter()
        .map(|&(fi, bi)| {
            let case_id = format!("f{fi:03}-{}", bundles[bi].choice.as_str());
            evaluate_case(case_id, &functions[fi], &bundles[bi], cfg)
        })
        .collect())
}
