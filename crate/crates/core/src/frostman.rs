//! Constructive Frostman measures.
//!
//! Given a gauge `h` with `h(0) = 0` and a nonempty compact `E ⊂ [0, r]`
//! with positive content, [`frostman_measure`] builds a nonzero measure
//! supported on `E` with `μ([a, b]) ≤ h(b − a)` for *all* intervals, and
//! returns its distribution function together with the per-instance ratio
//! `content(E) / μ(E)`.
//!
//! The construction is the classical net measure: seed mass on the pieces of
//! `E` inside the finest base-`n` net cells, sweep fine-to-coarse rescaling
//! any cell whose accumulated mass exceeds the gauge of its length, then
//! divide the whole measure by `2·net_base` to convert the net-cell bound
//! into a bound for arbitrary intervals (an interval of length `L` meets at
//! most two net cells of the first scale not finer than `L`, each of length
//! below `net_base·L`).

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::content::exact_content;
use crate::error::{Error, Result};
use crate::gauge::Gauge;
use crate::increasing::IncreasingFunction;
use crate::set::IntervalUnion;

/// A constructed Frostman measure, as its distribution function.
#[derive(Debug, Clone)]
pub struct FrostmanResult {
    /// `m(t) = μ([0, t])`, piecewise linear over the pieces of `E` inside
    /// the finest net cells (so its support of non-constancy sits inside `E`).
    pub distribution: IncreasingFunction,
    /// `μ(E) > 0`.
    pub total_mass: f64,
    pub net_base: u32,
    pub depth: u32,
    /// `content(E) / μ(E)`, the measured constant of the mass-versus-content
    /// comparison for this instance.
    pub empirical_a: f64,
}

/// One violated check in a [`FrostmanReport`].
#[derive(Debug, Clone)]
pub struct FrostmanViolation {
    pub description: String,
    pub excess: f64,
}

/// Verification record: violations are data, not errors.
#[derive(Debug, Clone)]
pub struct FrostmanReport {
    pub checked_intervals: usize,
    pub checked_subunions: usize,
    pub violations: Vec<FrostmanViolation>,
    /// `content(E) / μ(E)` as recorded in the result.
    pub ratio: f64,
    pub passed: bool,
}

struct Piece {
    start: f64,
    end: f64,
    mass: f64,
}

/// Build the net measure on `E` for the gauge `g`.
///
/// Errors with [`Error::DegenerateSet`] when `E` carries no length (a finite
/// point set): a continuous gauge then forces `μ = 0`.
pub fn frostman_measure(
    g: &Gauge,
    e: &IntervalUnion,
    net_base: u32,
    depth: u32,
) -> Result<FrostmanResult> {
    if !g.vanishes_at_zero() {
        return Err(Error::Domain("frostman gauge must satisfy h(0) = 0".into()));
    }
    if e.is_empty() {
        return Err(Error::DegenerateSet);
    }
    if net_base < 2 {
        return Err(Error::Domain(format!("net base must be >= 2, got {net_base}")));
    }
    if depth == 0 {
        return Err(Error::Domain("depth must be positive".into()));
    }
    if depth as f64 * (net_base as f64).log2() > 48.0 {
        return Err(Error::SizeGuard(format!(
            "net tree of base {net_base} and depth {depth} too large"
        )));
    }
    let r = e.ambient_right();
    let finest = r / (net_base as f64).powi(depth as i32);

    // Seed: pieces of E inside finest cells, each carrying h(piece length).
    let mut pieces: Vec<Piece> = Vec::new();
    for &(a, b) in e.components() {
        if b <= a {
            continue; // points carry no mass under a continuous gauge
        }
        let first_cell = (a / finest).floor() as i64;
        let last_cell = ((b / finest).ceil() as i64 - 1).max(first_cell);
        for cell in first_cell..=last_cell {
            let lo = (cell as f64 * finest).max(a);
            let hi = ((cell + 1) as f64 * finest).min(b);
            if hi > lo {
                pieces.push(Piece { start: lo, end: hi, mass: g.eval(hi - lo) });
            }
        }
    }
    if pieces.is_empty() {
        return Err(Error::DegenerateSet);
    }
    pieces.sort_by(|x, y| x.start.partial_cmp(&y.start).unwrap());

    // Fine-to-coarse sweep: cap every net cell's accumulated mass at the
    // gauge of its length. Rescaling only shrinks masses, so finer caps
    // cannot be re-broken by coarser ones.
    for level in (0..=depth).rev() {
        let cell_len = r / (net_base as f64).powi(level as i32);
        let cap = g.eval(cell_len);
        let mut i = 0;
        while i < pieces.len() {
            let cell = (0.5 * (pieces[i].start + pieces[i].end) / cell_len).floor();
            let mut j = i;
            let mut sum = 0.0;
            while j < pieces.len()
                && (0.5 * (pieces[j].start + pieces[j].end) / cell_len).floor() == cell
            {
                sum += pieces[j].mass;
                j += 1;
            }
            if sum > cap {
                let scale = cap / sum;
                for p in &mut pieces[i..j] {
                    p.mass *= scale;
                }
            }
            i = j;
        }
    }

    // Net-cell bound → all-interval bound, at the cost of a constant factor.
    let safety = 2.0 * net_base as f64;
    for p in &mut pieces {
        p.mass /= safety;
    }

    // Re-verify every level (scaling only decreases masses, so this is an
    // assertion, not a fixpoint iteration).
    for level in (0..=depth).rev() {
        let cell_len = r / (net_base as f64).powi(level as i32);
        let cap = g.eval(cell_len) / safety;
        let mut i = 0;
        while i < pieces.len() {
            let cell = (0.5 * (pieces[i].start + pieces[i].end) / cell_len).floor();
            let mut j = i;
            let mut sum = 0.0;
            while j < pieces.len()
                && (0.5 * (pieces[j].start + pieces[j].end) / cell_len).floor() == cell
            {
                sum += pieces[j].mass;
                j += 1;
            }
            if sum > cap * (1.0 + 1e-12) {
                return Err(Error::Evaluation(
                    "net constraint re-broken after rescaling".into(),
                ));
            }
            i = j;
        }
    }

    let total_mass: f64 = pieces.iter().map(|p| p.mass).sum();
    if !(total_mass > 0.0) {
        return Err(Error::DegenerateSet);
    }

    // Distribution function: linear across each piece, flat in between.
    let mut knots: Vec<(f64, f64)> = Vec::with_capacity(2 * pieces.len() + 2);
    let push = |t: f64, v: f64, knots: &mut Vec<(f64, f64)>| {
        if knots.last().is_none_or(|&(lt, _)| t > lt) {
            knots.push((t, v));
        }
    };
    push(0.0, 0.0, &mut knots);
    let mut cum = 0.0;
    for p in &pieces {
        push(p.start, cum, &mut knots);
        cum += p.mass;
        push(p.end, cum, &mut knots);
    }
    push(r, cum, &mut knots);
    let distribution = IncreasingFunction::from_linear_knots(r, knots)?;

    let content = exact_content(g, e, f64::INFINITY)?.value;
    Ok(FrostmanResult {
        distribution,
        total_mass,
        net_base,
        depth,
        empirical_a: content / total_mass,
    })
}

/// Check a constructed (or adversarial) result against the defining
/// properties: the gauge bound on `trials` random intervals and on every net
/// cell, and mass-below-content on random sub-unions of `E`'s components.
pub fn verify_frostman(
    res: &FrostmanResult,
    g: &Gauge,
    e: &IntervalUnion,
    trials: usize,
    seed: u64,
) -> Result<FrostmanReport> {
    let r = e.ambient_right();
    let m = &res.distribution;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut violations = Vec::new();
    let slack = |cap: f64| 1e-12 * cap.abs().max(1.0);

    let mut checked_intervals = 0;
    for _ in 0..trials {
        let (x, y) = (rng.gen_range(0.0..=r), rng.gen_range(0.0..=r));
        let (a, b) = if x <= y { (x, y) } else { (y, x) };
        let mu = m.measure_closed(a, b);
        let cap = g.eval(b - a);
        checked_intervals += 1;
        if mu > cap + slack(cap) {
            violations.push(FrostmanViolation {
                description: format!("interval bound fails on [{a}, {b}]: mu = {mu} > h = {cap}"),
                excess: mu - cap,
            });
        }
    }
    for level in 0..=res.depth {
        let cells = (res.net_base as u64).pow(level);
        let cell_len = r / cells as f64;
        for i in 0..cells {
            let (a, b) = (i as f64 * cell_len, (i + 1) as f64 * cell_len);
            if e.intersect_interval(a, b).is_empty() {
                continue;
            }
            let mu = m.measure_closed(a, b);
            let cap = g.eval(cell_len);
            checked_intervals += 1;
            if mu > cap + slack(cap) {
                violations.push(FrostmanViolation {
                    description: format!(
                        "net cell bound fails at level {level}, cell {i}: mu = {mu} > h = {cap}"
                    ),
                    excess: mu - cap,
                });
            }
        }
    }

    // Countable-subadditivity direction: mass of any sub-union stays below
    // its content.
    let n_comps = e.components().len();
    let mut checked_subunions = 0;
    for _ in 0..trials.min(64) {
        let indices: Vec<usize> = (0..n_comps).filter(|_| rng.gen_bool(0.5)).collect();
        if indices.is_empty() {
            continue;
        }
        let sub = e.select_components(&indices)?;
        let mu: f64 = sub
            .components()
            .iter()
            .map(|&(a, b)| m.measure_closed(a, b))
            .sum();
        let content = exact_content(g, &sub, f64::INFINITY)?.value;
        checked_subunions += 1;
        if mu > content + 1e-9 {
            violations.push(FrostmanViolation {
                description: format!(
                    "sub-union of {} components has mu = {mu} > content = {content}",
                    indices.len()
                ),
                excess: mu - content,
            });
        }
    }

    let passed = violations.is_empty();
    Ok(FrostmanReport {
        checked_intervals,
        checked_subunions,
        violations,
        ratio: res.empirical_a,
        passed,
    })
}
