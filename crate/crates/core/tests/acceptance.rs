//! Acceptance suite: every release-gating criterion in one sequential run,
//! one printed pass/fail line per criterion (run with `-- --nocapture` to
//! see them as they complete).
//!
//! The criteria are executed inside a single test so that wall-clock budgets
//! are measured without scheduler interference from sibling tests.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use fractal_nevanlinna::bounds::{
    rhs_main, verify_corpus, BoundVariant, CorpusConfig, VariantStatus,
};
use fractal_nevanlinna::content::{brute_force_content, exact_content, limit_content};
use fractal_nevanlinna::error::Error;
use fractal_nevanlinna::frostman::{frostman_measure, verify_frostman};
use fractal_nevanlinna::gauge::{normalization_constant, Gauge};
use fractal_nevanlinna::increasing::IncreasingFunction;
use fractal_nevanlinna::nevanlinna::LogRatio;
use fractal_nevanlinna::set::IntervalUnion;
use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn cantor_dim() -> f64 {
    2f64.ln() / 3f64.ln()
}

/// All unions of at most `max_k` disjoint closed intervals (degenerate
/// allowed) with endpoints on the `1/grid` grid of `[0, 1]`.
fn enumerate_grid_unions(grid: usize, max_k: usize) -> Vec<Vec<(f64, f64)>> {
    let pts: Vec<f64> = (0..=grid).map(|i| i as f64 / grid as f64).collect();
    let mut out = Vec::new();
    for k in 1..=max_k {
        // biject onto strictly increasing index tuples: within a component
        // equality of endpoints is allowed, between components separation is
        // strict, so shift the 2m-th index by m
        let m = 2 * k;
        let values = grid + 1 + k;
        let mut idx: Vec<usize> = (0..m).collect();
        loop {
            out.push(
                (0..k)
                    .map(|j| (pts[idx[2 * j] - j], pts[idx[2 * j + 1] - (j + 1)]))
                    .collect(),
            );
            let mut i = m;
            let mut done = true;
            while i > 0 {
                i -= 1;
                if idx[i] != i + values - m {
                    idx[i] += 1;
                    for j in i + 1..m {
                        idx[j] = idx[j - 1] + 1;
                    }
                    done = false;
                    break;
                }
            }
            if done {
                break;
            }
        }
    }
    out
}

fn random_union(rng: &mut ChaCha8Rng, comps: usize, min_sep: f64) -> IntervalUnion {
    loop {
        let mut pts: Vec<f64> = (0..2 * comps).map(|_| rng.gen_range(0.0..1.0)).collect();
        pts.sort_by(|a, b| a.partial_cmp(b).unwrap());
        if pts.windows(2).all(|w| w[1] - w[0] >= min_sep) {
            let comps: Vec<(f64, f64)> = pts.chunks(2).map(|c| (c[0], c[1])).collect();
            return IntervalUnion::normalize(&comps, 1.0).unwrap();
        }
    }
}

fn criterion_01_content_oracle_equivalence() -> Result<String, String> {
    let start = Instant::now();
    let unions = enumerate_grid_unions(16, 4);
    if unions.len() != 153 + 3876 + 38760 + 203490 {
        return Err(format!("enumeration produced {} unions", unions.len()));
    }
    let gauges = [
        Gauge::power(1.0, 1.0, 1.0).unwrap(),
        Gauge::power(1.0, 0.5, 1.0).unwrap(),
        Gauge::power(1.0, cantor_dim(), 1.0).unwrap(),
    ];
    let mut worst: f64 = 0.0;
    let mut cases = 0u64;
    for comps in &unions {
        let s = IntervalUnion::normalize(comps, 1.0).map_err(|e| e.to_string())?;
        for g in &gauges {
            for l in [f64::INFINITY, 0.6, 0.3] {
                let dp = exact_content(g, &s, l).map_err(|e| e.to_string())?.value;
                let bf = brute_force_content(g, &s, l, 8).map_err(|e| e.to_string())?;
                let diff = (dp - bf).abs();
                if diff > 1e-9 {
                    return Err(format!(
                        "dp = {dp}, brute = {bf} on {comps:?}, gauge #{}, l = {l}",
                        gauges.iter().position(|x| std::ptr::eq(x, g)).unwrap()
                    ));
                }
                worst = worst.max(diff);
                cases += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(30) {
        return Err(format!("runtime {elapsed:?} exceeds 30 s"));
    }
    Ok(format!("{cases} cases, worst gap {worst:.2e}, {elapsed:.2?}"))
}

fn criterion_02_self_similar_calibration() -> Result<String, String> {
    let g = Gauge::power(1.0, cantor_dim(), 1.0).unwrap();
    let mut worst: f64 = 0.0;
    for n in 0..=6u32 {
        let s = IntervalUnion::cantor_prefractal(n, 1.0 / 3.0, 1.0).unwrap();
        let v = exact_content(&g, &s, f64::INFINITY).map_err(|e| e.to_string())?.value;
        let err = (v - 1.0).abs();
        if err > 1e-9 {
            return Err(format!("stage {n}: content = {v}"));
        }
        worst = worst.max(err);
    }
    Ok(format!("stages 0..=6, worst deviation {worst:.2e}"))
}

fn criterion_03_lebesgue_identification() -> Result<String, String> {
    let g = Gauge::normalized_power(1.0, 1.0).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut worst: f64 = 0.0;
    for _ in 0..50 {
        let comps = rng.gen_range(1..=5usize);
        let s = random_union(&mut rng, comps, 0.01);
        let res = limit_content(&g, &s).map_err(|e| e.to_string())?;
        let err = (res.value - s.total_length()).abs();
        if err > 1e-8 {
            return Err(format!(
                "limit content {} vs length {} on {:?}",
                res.value,
                s.total_length(),
                s.components()
            ));
        }
        worst = worst.max(err);
    }
    Ok(format!("50 random unions, worst deviation {worst:.2e}"))
}

fn criterion_04_counting_content() -> Result<String, String> {
    let g = Gauge::normalized_power(0.0, 1.0).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for k in 1..=10usize {
        let mut pts: Vec<f64> = (0..k).map(|_| rng.gen_range(0.0..1.0)).collect();
        pts.sort_by(|a, b| a.partial_cmp(b).unwrap());
        if pts.windows(2).any(|w| w[1] - w[0] < 0.02) {
            pts = (0..k).map(|i| (i as f64 + 0.5) / k as f64).collect();
        }
        let comps: Vec<(f64, f64)> = pts.iter().map(|&p| (p, p)).collect();
        let s = IntervalUnion::normalize(&comps, 1.0).unwrap();
        let min_gap = s.min_gap().min(1.0);
        let l = 0.9 * min_gap;
        let v = exact_content(&g, &s, l).map_err(|e| e.to_string())?.value;
        if v != k as f64 {
            return Err(format!("{k} points gave content {v}"));
        }
        if k <= 6 {
            let bf = brute_force_content(&g, &s, l, 8).map_err(|e| e.to_string())?;
            if bf != k as f64 {
                return Err(format!("{k} points gave brute content {bf}"));
            }
        }
    }
    Ok("k = 1..=10 exact".into())
}

struct FrostmanCase {
    name: String,
    gauge: Gauge,
    set: IntervalUnion,
    base: u32,
    depth: u32,
}

fn frostman_cases() -> Vec<FrostmanCase> {
    let mut cases = vec![FrostmanCase {
        name: "unit-interval".into(),
        gauge: Gauge::power(1.0, 1.0, 1.0).unwrap(),
        set: IntervalUnion::normalize(&[(0.0, 1.0)], 1.0).unwrap(),
        base: 2,
        depth: 10,
    }];
    for stage in 4..=8u32 {
        cases.push(FrostmanCase {
            name: format!("cantor-{stage}"),
            gauge: Gauge::power(1.0, cantor_dim(), 1.0).unwrap(),
            set: IntervalUnion::cantor_prefractal(stage, 1.0 / 3.0, 1.0).unwrap(),
            base: 3,
            depth: stage,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for i in 0..5 {
        cases.push(FrostmanCase {
            name: format!("random-3comp-{i}"),
            gauge: Gauge::power(1.0, 0.5, 1.0).unwrap(),
            set: random_union(&mut rng, 3, 0.03),
            base: 2,
            depth: 10,
        });
    }
    cases
}

fn criterion_05_frostman_construction() -> Result<String, String> {
    let mut max_a: f64 = 0.0;
    let mut slowest = Duration::ZERO;
    let cases = frostman_cases();
    for case in &cases {
        let start = Instant::now();
        let res = frostman_measure(&case.gauge, &case.set, case.base, case.depth)
            .map_err(|e| format!("{}: {e}", case.name))?;
        if !(res.total_mass > 0.0) {
            return Err(format!("{}: zero mass", case.name));
        }
        let report = verify_frostman(&res, &case.gauge, &case.set, 1000, 1005)
            .map_err(|e| format!("{}: {e}", case.name))?;
        if let Some(v) = report.violations.first() {
            return Err(format!("{}: {}", case.name, v.description));
        }
        if res.empirical_a > 16.0 {
            return Err(format!("{}: empirical A = {}", case.name, res.empirical_a));
        }
        max_a = max_a.max(res.empirical_a);
        let elapsed = start.elapsed();
        if elapsed > Duration::from_secs(10) {
            return Err(format!("{}: runtime {elapsed:?} exceeds 10 s", case.name));
        }
        slowest = slowest.max(elapsed);
    }
    Ok(format!(
        "{} sets, max empirical A = {max_a:.3}, slowest set {slowest:.2?}",
        cases.len()
    ))
}

fn criterion_06_theorem2_chain() -> Result<String, String> {
    for case in frostman_cases() {
        let res = frostman_measure(&case.gauge, &case.set, case.base, case.depth)
            .map_err(|e| format!("{}: {e}", case.name))?;
        let m_total = res.distribution.total_variation();
        let content = exact_content(&case.gauge, &case.set, f64::INFINITY)
            .map_err(|e| e.to_string())?
            .value;
        let h_r = case.gauge.value_at_right();
        if m_total > content * (1.0 + 1e-9) + 1e-9 {
            return Err(format!("{}: M = {m_total} > content = {content}", case.name));
        }
        if content > h_r * (1.0 + 1e-9) + 1e-9 {
            return Err(format!("{}: content = {content} > h(r) = {h_r}", case.name));
        }
    }
    Ok("M <= content <= h(r) on every constructed case".into())
}

fn criterion_07_inequality_suite() -> Result<String, String> {
    let start = Instant::now();
    let cfg = CorpusConfig::new(20260810);
    let reports = verify_corpus(&cfg).map_err(|e| e.to_string())?;
    if reports.len() != cfg.count * cfg.measures.len() {
        return Err(format!("expected {} reports, got {}", cfg.count * 3, reports.len()));
    }
    let mut checked = 0usize;
    let mut max_ratio: f64 = 0.0;
    for rep in &reports {
        for (variant, status) in &rep.outcomes {
            match status {
                VariantStatus::Pass { ratio, .. } => {
                    checked += 1;
                    max_ratio = max_ratio.max(*ratio);
                }
                VariantStatus::Fail { reason, rhs, .. } => {
                    return Err(format!(
                        "{} {}: lhs = {} vs rhs = {rhs}: {reason}",
                        rep.case_id,
                        variant.as_str(),
                        rep.lhs
                    ));
                }
                VariantStatus::Skip { reason } => {
                    return Err(format!(
                        "{} {} skipped ({reason}); the suite requires every variant",
                        rep.case_id,
                        variant.as_str()
                    ));
                }
            }
        }
    }
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(300) {
        return Err(format!("runtime {elapsed:?} exceeds 5 min"));
    }
    Ok(format!(
        "{} variant checks over {} cases, max lhs/rhs = {max_ratio:.4}, {elapsed:.2?}",
        checked,
        reports.len()
    ))
}

fn criterion_08_quadrature_certification() -> Result<String, String> {
    // signed circle means against the Jensen closed form
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut worst_jensen: f64 = 0.0;
    let mut done = 0;
    while done < 50 {
        let a = Complex64::new(rng.gen_range(-1.5..1.5), rng.gen_range(-1.5..1.5));
        let t = rng.gen_range(0.05..2.0);
        if (a.norm() - t).abs() < 1e-3 {
            continue;
        }
        let u = LogRatio::new(0.0, vec![(a, 1)], vec![], f64::INFINITY).unwrap();
        let mean = u.circle_mean_signed(t, 1e-8).map_err(|e| e.to_string())?;
        let exact = t.max(a.norm()).ln();
        let err = (mean - exact).abs();
        if err > 1e-6 {
            return Err(format!("Jensen: |{mean} - {exact}| = {err:.2e} at a = {a}, t = {t}"));
        }
        worst_jensen = worst_jensen.max(err);
        done += 1;
    }

    // pole-term closed form against composite midpoint integration
    let mut worst_pole: f64 = 0.0;
    for _ in 0..50 {
        let (r, big_r) = (1.0, 2.0);
        let n_poles = rng.gen_range(1..=4usize);
        let poles: Vec<(Complex64, u32)> = (0..n_poles)
            .map(|_| {
                let w = Complex64::new(rng.gen_range(-1.2..1.2), rng.gen_range(-1.2..1.2));
                (w, rng.gen_range(1..=3u32))
            })
            .filter(|(w, _)| w.norm() > 1e-3)
            .collect();
        if poles.is_empty() {
            continue;
        }
        let u = LogRatio::new(0.0, vec![], poles, f64::INFINITY).unwrap();
        let closed: f64 = u
            .poles()
            .iter()
            .filter(|(p, _)| p.norm() <= big_r)
            .map(|&(p, m)| m as f64 * (big_r / p.norm().max(r)).ln())
            .sum();
        // midpoint between consecutive pole radii, 10^4 points overall
        let mut radii: Vec<f64> = u.poles().iter().map(|(p, _)| p.norm()).collect();
        radii.push(r);
        radii.push(big_r);
        radii.retain(|&t| (r..=big_r).contains(&t));
        radii.sort_by(|a, b| a.partial_cmp(b).unwrap());
        radii.dedup();
        let mut numeric = 0.0;
        for w in radii.windows(2) {
            let n = (((w[1] - w[0]) / (big_r - r)) * 10_000.0).ceil().max(1.0) as usize;
            let h = (w[1] - w[0]) / n as f64;
            for i in 0..n {
                let t = w[0] + (i as f64 + 0.5) * h;
                numeric += u.lower_variation(t) as f64 / t * h;
            }
        }
        let err = (closed - numeric).abs();
        if err > 1e-8 {
            return Err(format!("pole term: closed {closed} vs midpoint {numeric}"));
        }
        worst_pole = worst_pole.max(err);
    }
    Ok(format!(
        "Jensen worst {worst_jensen:.2e} (tol 1e-6), pole-term worst {worst_pole:.2e} (tol 1e-8)"
    ))
}

fn criterion_09_lemma_and_proof_steps() -> Result<String, String> {
    // monotonicity of x·ln(B·e^s / h⁻¹(x)) on [0, h(r)]
    let gauges = [
        Gauge::power(3.0, 0.5, 1.0).unwrap(),
        Gauge::power(1.0, 1.0, 1.0).unwrap(),
        Gauge::normalized_power(0.7, 1.0).unwrap(),
        Gauge::normalized_power(0.25, 1.0).unwrap(),
    ];
    for g in &gauges {
        let s = g.stretch_constant();
        if !s.is_finite() {
            return Err("admissible gauge reported divergent stretch".into());
        }
        for big_b in [1.0, 8.0] {
            let mut prev = 0.0;
            for i in 1..=1000 {
                let x = g.value_at_right() * i as f64 / 1000.0;
                let hinv = g.inverse(x).map_err(|e| e.to_string())?;
                let v = x * (big_b * s.exp() / hinv).ln();
                if v < prev - 1e-9 {
                    return Err(format!("monotonicity fails at x = {x}, B = {big_b}"));
                }
                prev = v;
            }
        }
    }
    // exponent chain: equality of the rewritten log plus domination by 4^d <= 4
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..500 {
        let d: f64 = rng.gen_range(0.01..=1.0);
        let b: f64 = rng.gen_range(0.1..5.0);
        let big_r: f64 = rng.gen_range(0.5..4.0);
        let m: f64 = rng.gen_range(1e-6..b * (4.0 * big_r).powf(d));
        let lhs = m * (4.0 * (1.0 / d).exp() * big_r / (m / b).powf(1.0 / d)).ln();
        let mid = m / d * (std::f64::consts::E * 4f64.powf(d) * big_r.powf(d) * b / m).ln();
        let rhs = m / d * (std::f64::consts::E * 4.0 * b * big_r.powf(d) / m).ln();
        if (lhs - mid).abs() > 1e-9 * lhs.abs().max(1.0) {
            return Err(format!("chain equality fails: {lhs} vs {mid}"));
        }
        if mid > rhs * (1.0 + 1e-12) + 1e-12 {
            return Err(format!("chain domination fails: {mid} > {rhs}"));
        }
    }
    // normalization constants
    if (normalization_constant(1.0) - 1.0).abs() > 1e-14 {
        return Err(format!("c_1 = {}", normalization_constant(1.0)));
    }
    for i in 1..=50 {
        let d = i as f64 / 50.0;
        if normalization_constant(d) < 0.25 {
            return Err(format!("c_d < 1/4 at d = {d}"));
        }
    }
    Ok("log-weight monotone, exponent chain holds, c_d in range".into())
}

fn criterion_10_negative_controls() -> Result<String, String> {
    // corrupted right-hand sides must surface as failures
    let mut cfg = CorpusConfig::new(101);
    cfg.count = 10;
    let honest = verify_corpus(&cfg).map_err(|e| e.to_string())?;
    let mut max_ratio: f64 = 0.0;
    for rep in &honest {
        for (_, s) in &rep.outcomes {
            if let VariantStatus::Fail { reason, .. } = s {
                return Err(format!("honest corpus failed: {reason}"));
            }
            if let VariantStatus::Pass { ratio, .. } = s {
                max_ratio = max_ratio.max(*ratio);
            }
        }
    }
    if max_ratio <= 0.0 {
        return Err("honest corpus produced no positive ratios".into());
    }
    // halve the rhs, or cut below the tightest observed margin when the
    // bounds' constant factors leave more than 2x headroom everywhere
    let factor = (max_ratio / 2.0).min(0.5);
    cfg.corrupt_rhs_factor = Some(factor);
    let corrupted = verify_corpus(&cfg).map_err(|e| e.to_string())?;
    let failures: usize = corrupted
        .iter()
        .map(|r| r.outcomes.iter().filter(|(_, s)| s.failed()).count())
        .sum();
    if failures == 0 {
        return Err(format!("corruption by {factor} produced no failures"));
    }

    // a jump measure trips the Dini precondition
    let jump = IncreasingFunction::new(1.0, vec![(0.5, 1.0)], vec![], None)
        .map_err(|e| e.to_string())?;
    let u = LogRatio::constant(1.0, f64::INFINITY);
    match rhs_main(&u, &jump, 1.0, 2.0, BoundVariant::MainMax, 1e-8) {
        Err(Error::Precondition(_)) => {}
        other => return Err(format!("jump measure gave {other:?}")),
    }

    // a single point has zero content and admits no nonzero measure
    let point = IntervalUnion::normalize(&[(0.5, 0.5)], 1.0).map_err(|e| e.to_string())?;
    let g = Gauge::power(1.0, 0.5, 1.0).unwrap();
    match frostman_measure(&g, &point, 2, 8) {
        Err(Error::DegenerateSet) => {}
        other => return Err(format!("point set gave {other:?}")),
    }
    Ok(format!(
        "corruption x{factor:.3} flagged {failures} failures; precondition errors fire"
    ))
}

type Criterion = fn() -> Result<String, String>;

#[test]
fn acceptance() {
    let criteria: Vec<(&str, Criterion)> = vec![
        ("01 content-oracle-equivalence", criterion_01_content_oracle_equivalence),
        ("02 self-similar-calibration", criterion_02_self_similar_calibration),
        ("03 lebesgue-identification", criterion_03_lebesgue_identification),
        ("04 counting-content", criterion_04_counting_content),
        ("05 frostman-construction", criterion_05_frostman_construction),
        ("06 theorem2-chain", criterion_06_theorem2_chain),
        ("07 inequality-suite", criterion_07_inequality_suite),
        ("08 quadrature-certification", criterion_08_quadrature_certification),
        ("09 lemma-and-proof-steps", criterion_09_lemma_and_proof_steps),
        ("10 negative-controls", criterion_10_negative_controls),
    ];
    let mut failed = Vec::new();
    for (name, run) in criteria {
        let outcome = catch_unwind(AssertUnwindSafe(run));
        match outcome {
            Ok(Ok(detail)) => println!("criterion {name}: PASS ({detail})"),
            Ok(Err(msg)) => {
                println!("criterion {name}: FAIL ({msg})");
                failed.push(format!("{name}: {msg}"));
            }
            Err(panic) => {
                let msg = panic
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_else(|| "panic".into());
                println!("criterion {name}: FAIL (panicked: {msg})");
                failed.push(format!("{name}: panicked: {msg}"));
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria:\n{}", failed.join("\n"));
}
