//! Increasing functions on `[0, r]` and the machinery attached to them:
//! Lebesgue–Stieltjes interval measures, moduli of continuity, stabilization
//! diameters, Dini integrals and Stieltjes integrals of continuous
//! integrands.
//!
//! An [`IncreasingFunction`] is a sum of three parts — atoms (jumps), a
//! continuous piecewise-linear part, and an optional self-similar staircase —
//! extended by constants outside `[0, r]`. Values are right-continuous at
//! jumps. The finite-stage staircase is itself piecewise linear (uniform on
//! the prefractal components of its stage), which is what makes the modulus
//! and the Dini head computable exactly rather than sampled.

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::quad::{adaptive_simpson, QuadResult};
use crate::set::IntervalUnion;

/// Self-similar staircase component: the distribution function of the uniform
/// mass spread over the two-map prefractal of the given ratio and depth.
#[derive(Debug, Clone, PartialEq)]
pub struct Staircase {
    pub ratio: f64,
    pub depth: u32,
    pub mass: f64,
}

/// An increasing function `m` on `[0, r]`, doubling as the distribution
/// function of its Lebesgue–Stieltjes measure.
#[derive(Debug, Clone, PartialEq)]
pub struct IncreasingFunction {
    domain_right: f64,
    /// Sorted atom locations in `(0, r]` with positive heights. An atom at 0
    /// is not representable: the constant extension below 0 forces left
    /// continuity there.
    jumps: Vec<(f64, f64)>,
    /// Strictly increasing abscissas with nondecreasing values; empty or at
    /// least two entries.
    linear_knots: Vec<(f64, f64)>,
    staircase: Option<Staircase>,
}

/// Result of locating the stabilization diameter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Stabilization {
    pub diameter: f64,
    /// Set when the function is constant (`M = 0`), where the diameter is
    /// conventionally 0.
    pub degenerate: bool,
}

/// Value of a Dini-type integral `∫ ω(t)/t dt`; infinity is a value, not an
/// error. `certified` records whether the small-`t` head was computed from an
/// exact linear envelope rather than estimated.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiniIntegral {
    pub value: f64,
    pub certified: bool,
}

#[derive(Deserialize)]
struct StaircaseSpec {
    ratio: f64,
    depth: u32,
    mass: f64,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum MeasureSpec {
    Identity {
        identity: f64,
    },
    Parts {
        domain_right: f64,
        #[serde(default)]
        knots: Vec<(f64, f64)>,
        #[serde(default)]
        jumps: Vec<(f64, f64)>,
        #[serde(default)]
        staircase: Option<StaircaseSpec>,
    },
}

const MAX_STAIRCASE_DEPTH: u32 = 20;

impl IncreasingFunction {
    /// The identity `m(t) = t` on `[0, r]`.
    pub fn identity(domain_right: f64) -> Self {
        Self::from_linear_knots(domain_right, vec![(0.0, 0.0), (domain_right, domain_right)])
            .expect("identity knots are valid")
    }

    /// A continuous piecewise-linear increasing function through `knots`.
    pub fn from_linear_knots(domain_right: f64, knots: Vec<(f64, f64)>) -> Result<Self> {
        Self::new(domain_right, Vec::new(), knots, None)
    }

    /// The stage-`depth` staircase of total `mass` for the two-map prefractal
    /// with the given `ratio`, spread over `[0, domain_right]`.
    pub fn cantor_staircase(domain_right: f64, ratio: f64, depth: u32, mass: f64) -> Result<Self> {
        Self::new(domain_right, Vec::new(), Vec::new(), Some(Staircase { ratio, depth, mass }))
    }

    /// Full constructor; validates and normalizes all three parts.
    pub fn new(
        domain_right: f64,
        jumps: Vec<(f64, f64)>,
        linear_knots: Vec<(f64, f64)>,
        staircase: Option<Staircase>,
    ) -> Result<Self> {
        if !(domain_right > 0.0) || !domain_right.is_finite() {
            return Err(Error::Domain(format!(
                "domain_right must be positive, got {domain_right}"
            )));
        }
        let mut jumps = jumps;
        jumps.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let mut merged: Vec<(f64, f64)> = Vec::with_capacity(jumps.len());
        for (t, q) in jumps {
            if !(q > 0.0) || !q.is_finite() {
                return Err(Error::Domain(format!("jump height must be positive, got {q}")));
            }
            if !(t > 0.0 && t <= domain_right) {
                return Err(Error::Domain(format!(
                    "jump location {t} outside (0, {domain_right}]"
                )));
            }
            match merged.last_mut() {
                Some(last) if last.0 == t => last.1 += q,
                _ => merged.push((t, q)),
            }
        }
        if linear_knots.len() == 1 {
            return Err(Error::Domain("a single linear knot is meaningless".into()));
        }
        for w in linear_knots.windows(2) {
            if !(w[1].0 > w[0].0) {
                return Err(Error::Domain("linear knots must be strictly increasing in t".into()));
            }
            if w[1].1 < w[0].1 {
                return Err(Error::Domain("linear knot values must be nondecreasing".into()));
            }
        }
        if let Some(first) = linear_knots.first() {
            if first.0 < 0.0 || linear_knots.last().unwrap().0 > domain_right {
                return Err(Error::Domain("linear knots outside [0, domain_right]".into()));
            }
        }
        if linear_knots
            .iter()
            .any(|&(t, v)| !t.is_finite() || !v.is_finite())
        {
            return Err(Error::Domain("linear knots must be finite".into()));
        }
        if let Some(s) = &staircase {
            if !(s.ratio > 0.0 && s.ratio < 0.5) {
                return Err(Error::Domain(format!(
                    "staircase ratio must lie in (0, 1/2), got {}",
                    s.ratio
                )));
            }
            if s.depth > MAX_STAIRCASE_DEPTH {
                return Err(Error::SizeGuard(format!(
                    "staircase depth {} > {MAX_STAIRCASE_DEPTH}",
                    s.depth
                )));
            }
            if !(s.mass >= 0.0) || !s.mass.is_finite() {
                return Err(Error::Domain("staircase mass must be nonnegative".into()));
            }
        }
        Ok(Self { domain_right, jumps: merged, linear_knots, staircase })
    }

    /// Parse a measure literal: `{"identity":1.0}` or
    /// `{"domain_right":1.0,"knots":[[0,0],[1,1]],"jumps":[[0.5,1]],"staircase":{...}}`.
    pub fn from_json(text: &str) -> Result<Self> {
        let spec: MeasureSpec = serde_json::from_str(text)
            .map_err(|e| Error::Domain(format!("measure literal: {e}")))?;
        match spec {
            MeasureSpec::Identity { identity } => {
                if !(identity > 0.0) {
                    return Err(Error::Domain("identity span must be positive".into()));
                }
                Ok(Self::identity(identity))
            }
            MeasureSpec::Parts { domain_right, knots, jumps, staircase } => Self::new(
                domain_right,
                jumps,
                knots,
                staircase.map(|s| Staircase { ratio: s.ratio, depth: s.depth, mass: s.mass }),
            ),
        }
    }

    pub fn domain_right(&self) -> f64 {
        self.domain_right
    }

    pub fn has_jumps(&self) -> bool {
        !self.jumps.is_empty()
    }

    pub fn jumps(&self) -> &[(f64, f64)] {
        &self.jumps
    }

    pub fn linear_knots(&self) -> &[(f64, f64)] {
        &self.linear_knots
    }

    /// Right-continuous evaluation with constant extension outside `[0, r]`.
    pub fn eval(&self, t: f64) -> f64 {
        let mut v = 0.0;
        let idx = self.jumps.partition_point(|&(loc, _)| loc <= t);
        v += self.jumps[..idx].iter().map(|&(_, q)| q).sum::<f64>();
        if let (Some(&(t0, v0)), Some(&(t1, v1))) =
            (self.linear_knots.first(), self.linear_knots.last())
        {
            v += if t <= t0 {
                v0
            } else if t >= t1 {
                v1
            } else {
                let i = self.linear_knots.partition_point(|&(kt, _)| kt <= t);
                let (a, va) = self.linear_knots[i - 1];
                let (b, vb) = self.linear_knots[i];
                va + (vb - va) * (t - a) / (b - a)
            };
        }
        if let Some(s) = &self.staircase {
            v += s.mass * cantor_cdf(t / self.domain_right, s.ratio, s.depth);
        }
        v
    }

    /// Left limit `lim_{x↑t} m(x)`.
    pub fn eval_left(&self, t: f64) -> f64 {
        self.eval(t) - self.atom_at(t)
    }

    /// Height of the atom at exactly `t` (0 if none).
    pub fn atom_at(&self, t: f64) -> f64 {
        match self.jumps.binary_search_by(|&(loc, _)| loc.partial_cmp(&t).unwrap()) {
            Ok(i) => self.jumps[i].1,
            Err(_) => 0.0,
        }
    }

    /// Total variation `M = m(r) − m(0)`.
    pub fn total_variation(&self) -> f64 {
        self.eval(self.domain_right) - self.eval(0.0)
    }

    pub fn is_constant(&self) -> bool {
        self.total_variation() <= 0.0
    }

    /// Measure of the half-open interval `(a, b]`.
    pub fn measure_half_open(&self, a: f64, b: f64) -> f64 {
        if b <= a {
            return 0.0;
        }
        (self.eval(b) - self.eval(a)).max(0.0)
    }

    /// Measure of the closed interval `[a, b]` (adds the atom at `a`).
    pub fn measure_closed(&self, a: f64, b: f64) -> f64 {
        if b < a {
            return 0.0;
        }
        self.measure_half_open(a, b) + self.atom_at(a)
    }

    /// All abscissas where any part of `m` can change slope or jump,
    /// including 0 and `r`, sorted and deduplicated.
    pub fn breakpoints(&self) -> Vec<f64> {
        let mut pts = vec![0.0, self.domain_right];
        pts.extend(self.jumps.iter().map(|&(t, _)| t));
        pts.extend(self.linear_knots.iter().map(|&(t, _)| t));
        if let Some(s) = &self.staircase {
            if s.mass > 0.0 {
                let comps =
                    IntervalUnion::cantor_prefractal(s.depth, s.ratio, self.domain_right)
                        .expect("validated staircase parameters");
                for &(a, b) in comps.components() {
                    pts.push(a);
                    pts.push(b);
                }
            }
        }
        pts.sort_by(|a, b| a.partial_cmp(b).unwrap());
        pts.dedup();
        pts
    }

    /// Maximal-slope segments between adjacent breakpoints: `(a, b, slope)`
    /// with the slope of the continuous part strictly inside `(a, b)`.
    fn segments(&self) -> Vec<(f64, f64, f64)> {
        let bps = self.breakpoints();
        bps.windows(2)
            .filter(|w| w[1] > w[0])
            .map(|w| {
                let rise = (self.eval_left(w[1]) - self.eval(w[0])).max(0.0);
                (w[0], w[1], rise / (w[1] - w[0]))
            })
            .collect()
    }

    /// Largest density of the continuous part over the merged segments.
    pub fn max_density(&self) -> f64 {
        self.segments().iter().map(|&(_, _, s)| s).fold(0.0, f64::max)
    }

    /// Modulus of continuity
    /// `ω(t) = sup { m(x) − m(x') : x − x' ≤ t, 0 ≤ x' ≤ x ≤ r }`,
    /// computed exactly: the sliding-window objective is piecewise monotone
    /// between window positions whose ends sit on breakpoints, so the sup is
    /// attained over candidates `{b, b − t}` (with left-limit evaluation to
    /// catch windows abutting a jump from below).
    pub fn modulus_of_continuity(&self, t: f64) -> f64 {
        if t <= 0.0 || self.is_constant() {
            return 0.0;
        }
        let bps = self.breakpoints();
        let mut best = 0.0f64;
        for &b in &bps {
            for c in [b, b - t] {
                let g_right = self.eval(c + t) - self.eval(c);
                let g_left = self.eval_left(c + t) - self.eval_left(c);
                best = best.max(g_right).max(g_left);
            }
        }
        best.max(0.0)
    }

    /// Stabilization diameter `inf { t : ω(t) = M }`, by bisection on the
    /// exact modulus.
    pub fn stabilization_diameter(&self) -> Stabilization {
        let m_total = self.total_variation();
        if m_total <= 0.0 {
            return Stabilization { diameter: 0.0, degenerate: true };
        }
        let target = m_total * (1.0 - 1e-12);
        let (mut lo, mut hi) = (0.0f64, self.domain_right);
        for _ in 0..80 {
            let mid = 0.5 * (lo + hi);
            if self.modulus_of_continuity(mid) >= target {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        Stabilization { diameter: hi, degenerate: false }
    }

    /// `∫_0^upper ω(t)/t dt`. Any atom makes the integral diverge (ω is
    /// bounded below near 0), reported as a certified infinity. Otherwise the
    /// function is piecewise linear, so below the longest maximal-slope
    /// segment the modulus is exactly `ρ_max·t` and the head integrates in
    /// closed form; the rest is dyadic adaptive quadrature.
    pub fn dini_integral(&self, upper: f64) -> Result<DiniIntegral> {
        if !(upper > 0.0) {
            return Err(Error::Domain(format!("dini upper limit must be positive, got {upper}")));
        }
        if self.is_constant() {
            return Ok(DiniIntegral { value: 0.0, certified: true });
        }
        if self.has_jumps() {
            return Ok(DiniIntegral { value: f64::INFINITY, certified: true });
        }
        let segments = self.segments();
        let rho_max = segments.iter().map(|&(_, _, s)| s).fold(0.0, f64::max);
        if rho_max <= 0.0 {
            return Ok(DiniIntegral { value: 0.0, certified: true });
        }
        let head_span = segments
            .iter()
            .filter(|&&(_, _, s)| s >= rho_max * (1.0 - 1e-12))
            .map(|&(a, b, _)| b - a)
            .fold(0.0, f64::max);
        if upper <= head_span {
            return Ok(DiniIntegral { value: rho_max * upper, certified: true });
        }
        let mut value = rho_max * head_span;
        let mut lo = head_span;
        while lo < upper {
            let hi = (2.0 * lo).min(upper);
            let integrand = |t: f64| self.modulus_of_continuity(t) / t;
            value += adaptive_simpson(&integrand, lo, hi, 1e-11)?.value;
            lo = hi;
        }
        Ok(DiniIntegral { value, certified: true })
    }

    /// Stieltjes integral `∫_0^r f dm` for continuous `f` (integrable log
    /// spikes allowed away from atoms): atoms sum directly, linear pieces go
    /// through adaptive quadrature weighted by their density, and the
    /// staircase splits self-similarly down to its stage.
    pub fn stieltjes_integral(&self, f: &dyn Fn(f64) -> f64, tol: f64) -> Result<QuadResult> {
        let mut acc = QuadResult::ZERO;
        for &(t, q) in &self.jumps {
            let v = f(t);
            if !v.is_finite() {
                return Err(Error::Evaluation(format!("integrand non-finite at atom t = {t}")));
            }
            acc.add(QuadResult { value: v * q, error: 0.0 });
        }
        let positive_segments: Vec<(f64, f64, f64)> = self
            .linear_knots
            .windows(2)
            .map(|w| (w[0].0, w[1].0, (w[1].1 - w[0].1) / (w[1].0 - w[0].0)))
            .filter(|&(_, _, rho)| rho > 0.0)
            .collect();
        if !positive_segments.is_empty() {
            let share = tol / (2.0 * positive_segments.len() as f64);
            for (a, b, rho) in positive_segments {
                acc.add(adaptive_simpson(f, a, b, share / rho)?.scale(rho));
            }
        }
        if let Some(s) = &self.staircase {
            if s.mass > 0.0 {
                acc.add(stieltjes_staircase(
                    f,
                    0.0,
                    self.domain_right,
                    s.mass,
                    s.ratio,
                    s.depth,
                    tol / 2.0,
                )?);
            }
        }
        Ok(acc)
    }

    /// The set off which the extended function is locally constant: rising
    /// linear pieces, atom locations, and the staircase's prefractal stage.
    pub fn support_of_nonconstancy(&self) -> IntervalUnion {
        let mut pieces: Vec<(f64, f64)> = Vec::new();
        for w in self.linear_knots.windows(2) {
            if w[1].1 > w[0].1 {
                pieces.push((w[0].0, w[1].0));
            }
        }
        for &(t, _) in &self.jumps {
            pieces.push((t, t));
        }
        if let Some(s) = &self.staircase {
            if s.mass > 0.0 {
                let comps =
                    IntervalUnion::cantor_prefractal(s.depth, s.ratio, self.domain_right)
                        .expect("validated staircase parameters");
                pieces.extend_from_slice(comps.components());
            }
        }
        IntervalUnion::normalize(&pieces, self.domain_right)
            .expect("support pieces lie inside the domain")
    }
}

/// CDF of the finite-stage self-similar measure on `[0, 1]`: uniform at stage
/// 0, otherwise half the mass recursing into each end third of the interval.
fn cantor_cdf(x: f64, ratio: f64, depth: u32) -> f64 {
    if x <= 0.0 {
        return 0.0;
    }
    if x >= 1.0 {
        return 1.0;
    }
    if depth == 0 {
        return x;
    }
    if x < ratio {
        0.5 * cantor_cdf(x / ratio, ratio, depth - 1)
    } else if x <= 1.0 - ratio {
        0.5
    } else {
        0.5 + 0.5 * cantor_cdf((x - (1.0 - ratio)) / ratio, ratio, depth - 1)
    }
}

fn stieltjes_staircase(
    f: &dyn Fn(f64) -> f64,
    a: f64,
    b: f64,
    mass: f64,
    ratio: f64,
    depth: u32,
    tol: f64,
) -> Result<QuadResult> {
    if depth == 0 {
        let density = mass / (b - a);
        return Ok(adaptive_simpson(f, a, b, tol / density)?.scale(density));
    }
    let len = b - a;
    let mut acc = stieltjes_staircase(f, a, a + ratio * len, mass / 2.0, ratio, depth - 1, tol / 2.0)?;
    acc.add(stieltjes_staircase(
        f,
        b - ratio * len,
        b,
        mass / 2.0,
        ratio,
        depth - 1,
        tol / 2.0,
    )?);
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn staircase8() -> IncreasingFunction {
        IncreasingFunction::cantor_staircase(1.0, 1.0 / 3.0, 8, 1.0).unwrap()
    }

    #[test]
    fn eval_with_constant_extension() {
        let id = IncreasingFunction::identity(1.0);
        assert_eq!(id.eval(-0.5), 0.0);
        assert_eq!(id.eval(2.0), 1.0);
        assert_relative_eq!(id.eval(0.3), 0.3, max_relative = 1e-15);
    }

    #[test]
    fn staircase_eval_at_first_plateau() {
        assert_relative_eq!(staircase8().eval(1.0 / 3.0), 0.5, max_relative = 1e-12);
        assert_relative_eq!(staircase8().eval(0.5), 0.5, max_relative = 1e-12);
    }

    #[test]
    fn interval_measures() {
        let id = IncreasingFunction::identity(1.0);
        assert_relative_eq!(id.measure_half_open(0.2, 0.5), 0.3, max_relative = 1e-12);
        let j = IncreasingFunction::new(1.0, vec![(0.5, 1.0)], vec![], None).unwrap();
        assert_relative_eq!(j.measure_half_open(0.4, 0.6), 1.0, max_relative = 1e-15);
        assert_eq!(j.measure_half_open(0.5, 0.6), 0.0);
        assert_eq!(j.measure_closed(0.5, 0.6), 1.0);
        assert_relative_eq!(
            staircase8().measure_half_open(1.0 / 3.0, 2.0 / 3.0),
            0.0,
            epsilon = 1e-12
        );
        // closed full-domain measure recovers the total variation exactly
        assert_relative_eq!(j.measure_closed(0.0, 1.0), j.total_variation(), epsilon = 0.0);
    }

    #[test]
    fn no_atom_at_zero() {
        assert!(IncreasingFunction::new(1.0, vec![(0.0, 1.0)], vec![], None).is_err());
    }

    #[test]
    fn modulus_examples() {
        let id = IncreasingFunction::identity(1.0);
        assert_relative_eq!(id.modulus_of_continuity(0.25), 0.25, max_relative = 1e-12);
        let j = IncreasingFunction::new(1.0, vec![(0.5, 1.0)], vec![], None).unwrap();
        assert_eq!(j.modulus_of_continuity(0.0), 0.0);
        assert_relative_eq!(j.modulus_of_continuity(1e-9), 1.0, max_relative = 1e-12);
        assert_relative_eq!(j.modulus_of_continuity(0.7), 1.0, max_relative = 1e-12);
        let st = staircase8();
        for k in 1..=6u32 {
            assert_relative_eq!(
                st.modulus_of_continuity(3f64.powi(-(k as i32))),
                2f64.powi(-(k as i32)),
                max_relative = 1e-10
            );
        }
    }

    #[test]
    fn stabilization_examples() {
        let id = IncreasingFunction::identity(1.0);
        let s = id.stabilization_diameter();
        assert!(!s.degenerate);
        assert_relative_eq!(s.diameter, 1.0, epsilon = 1e-9);
        let j = IncreasingFunction::new(1.0, vec![(0.5, 1.0)], vec![], None).unwrap();
        assert!(j.stabilization_diameter().diameter < 1e-9);
        let st = staircase8();
        assert_relative_eq!(st.stabilization_diameter().diameter, 1.0, epsilon = 1e-9);
        let flat = IncreasingFunction::from_linear_knots(1.0, vec![(0.0, 0.3), (1.0, 0.3)]).unwrap();
        assert!(flat.stabilization_diameter().degenerate);
    }

    #[test]
    fn dini_examples() {
        let id = IncreasingFunction::identity(1.0);
        let d = id.dini_integral(4.0).unwrap();
        assert!(d.certified);
        assert_relative_eq!(d.value, 1.0 + 4f64.ln(), epsilon = 1e-8);

        let j = IncreasingFunction::new(1.0, vec![(0.5, 1.0)], vec![], None).unwrap();
        assert!(j.dini_integral(4.0).unwrap().value.is_infinite());

        let st = staircase8();
        let d = st.dini_integral(4.0).unwrap();
        let dim = 2f64.ln() / 3f64.ln();
        assert!(d.value.is_finite());
        assert!(d.value <= 2.0 / dim + 4f64.ln());
    }

    #[test]
    fn stieltjes_examples() {
        let id = IncreasingFunction::identity(1.0);
        let total = id.stieltjes_integral(&|_| 1.0, 1e-9).unwrap();
        assert_relative_eq!(total.value, 1.0, epsilon = 1e-9);
        let first_moment = id.stieltjes_integral(&|t| t, 1e-9).unwrap();
        assert_relative_eq!(first_moment.value, 0.5, epsilon = 1e-9);
        let st = staircase8();
        let sym = st.stieltjes_integral(&|t| t, 1e-9).unwrap();
        assert_relative_eq!(sym.value, 0.5, epsilon = 1e-8);
        let j = IncreasingFunction::new(1.0, vec![(0.5, 2.0)], vec![], None).unwrap();
        assert_relative_eq!(j.stieltjes_integral(&|t| t, 1e-9).unwrap().value, 1.0, epsilon = 1e-12);
        let flat = IncreasingFunction::from_linear_knots(1.0, vec![(0.0, 0.0), (1.0, 0.0)]).unwrap();
        assert_eq!(flat.stieltjes_integral(&|t| t * t, 1e-9).unwrap().value, 0.0);
    }

    #[test]
    fn support_of_nonconstancy_pieces() {
        let m = IncreasingFunction::new(
            1.0,
            vec![(0.9, 0.5)],
            vec![(0.0, 0.0), (0.2, 0.4), (0.6, 0.4), (0.7, 0.6)],
            None,
        )
        .unwrap();
        let supp = m.support_of_nonconstancy();
        assert_eq!(supp.components(), &[(0.0, 0.2), (0.6, 0.7), (0.9, 0.9)]);
    }

    #[test]
    fn measure_json_literals() {
        let m = IncreasingFunction::from_json(r#"{"identity":1.0}"#).unwrap();
        assert_relative_eq!(m.eval(0.4), 0.4, max_relative = 1e-15);
        let m = IncreasingFunction::from_json(
            r#"{"domain_right":1.0,"knots":[[0.0,0.0],[1.0,0.5]],"jumps":[[0.5,0.25]]}"#,
        )
        .unwrap();
        assert_relative_eq!(m.total_variation(), 0.75, max_relative = 1e-15);
        assert!(IncreasingFunction::from_json(r#"{"domain_right":-1.0}"#).is_err());
    }
}
