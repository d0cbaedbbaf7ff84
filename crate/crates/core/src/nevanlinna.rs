//! Log-modulus test functions and their growth characteristics.
//!
//! A [`LogRatio`] is `U(z) = c₀ + Σ k_j ln|z − a_j| − Σ l_i ln|z − p_i|`, the
//! log-modulus of a rational function: the minimal class whose Riesz charge
//! is atomic, so circle maxima, circle means and the pole-counting term of
//! the difference characteristic are all computable to certified tolerance.

use num_complex::Complex64;
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::quad::adaptive_simpson;

/// `c₀ + Σ k_j ln|z − a_j| − Σ l_i ln|z − p_i|` with zeros and poles at
/// distinct locations inside the working radius.
#[derive(Debug, Clone)]
pub struct LogRatio {
    constant: f64,
    zeros: Vec<(Complex64, u32)>,
    poles: Vec<(Complex64, u32)>,
    working_radius: f64,
}

/// Result of a circle supremum; the sup is infinite exactly when a pole lies
/// on the circle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CircleMax {
    pub value: f64,
    pub pole_on_circle: bool,
}

#[derive(Deserialize)]
struct LogRatioSpec {
    #[serde(default)]
    c0: f64,
    #[serde(default)]
    zeros: Vec<(f64, f64, u32)>,
    #[serde(default)]
    poles: Vec<(f64, f64, u32)>,
    #[serde(default)]
    working_radius: Option<f64>,
}

/// Relative slack under which a radius counts as carrying a singularity.
const ON_CIRCLE_SLACK: f64 = 1e-13;

impl LogRatio {
    /// Build from raw atom lists; common locations cancel against each other
    /// and every surviving location must sit strictly inside the working
    /// radius.
    pub fn new(
        constant: f64,
        zeros: Vec<(Complex64, u32)>,
        poles: Vec<(Complex64, u32)>,
        working_radius: f64,
    ) -> Result<Self> {
        if !(working_radius > 0.0) {
            return Err(Error::Domain("working radius must be positive".into()));
        }
        let mut net: Vec<(Complex64, i64)> = Vec::new();
        let mut add = |loc: Complex64, m: i64| {
            match net.iter_mut().find(|(l, _)| *l == loc) {
                Some(entry) => entry.1 += m,
                None => net.push((loc, m)),
            }
        };
        for (loc, m) in zeros {
            if m == 0 {
                return Err(Error::Domain("zero multiplicity must be positive".into()));
            }
            add(loc, m as i64);
        }
        for (loc, m) in poles {
            if m == 0 {
                return Err(Error::Domain("pole multiplicity must be positive".into()));
            }
            add(loc, -(m as i64));
        }
        let mut zeros = Vec::new();
        let mut poles = Vec::new();
        for (loc, m) in net {
            if m != 0 && loc.norm() >= working_radius {
                return Err(Error::Domain(format!(
                    "singularity at |z| = {} outside working radius {working_radius}",
                    loc.norm()
                )));
            }
            match m.cmp(&0) {
                std::cmp::Ordering::Greater => zeros.push((loc, m as u32)),
                std::cmp::Ordering::Less => poles.push((loc, (-m) as u32)),
                std::cmp::Ordering::Equal => {}
            }
        }
        Ok(Self { constant, zeros, poles, working_radius })
    }

    /// A constant test function (empty charge).
    pub fn constant(c: f64, working_radius: f64) -> Self {
        Self::new(c, Vec::new(), Vec::new(), working_radius).expect("no locations to reject")
    }

    /// Parse `{"c0":0.0,"zeros":[[re,im,mult],...],"poles":[...]}`.
    pub fn from_json(text: &str) -> Result<Self> {
        let spec: LogRatioSpec = serde_json::from_str(text)
            .map_err(|e| Error::Domain(format!("function literal: {e}")))?;
        let conv = |v: Vec<(f64, f64, u32)>| -> Vec<(Complex64, u32)> {
            v.into_iter().map(|(re, im, m)| (Complex64::new(re, im), m)).collect()
        };
        Self::new(
            spec.c0,
            conv(spec.zeros),
            conv(spec.poles),
            spec.working_radius.unwrap_or(f64::INFINITY),
        )
    }

    pub fn working_radius(&self) -> f64 {
        self.working_radius
    }

    pub fn zeros(&self) -> &[(Complex64, u32)] {
        &self.zeros
    }

    pub fn poles(&self) -> &[(Complex64, u32)] {
        &self.poles
    }

    /// Pointwise value; `−∞` at zeros, `+∞` at poles.
    pub fn eval(&self, z: Complex64) -> f64 {
        let mut v = self.constant;
        for &(a, m) in &self.zeros {
            v += m as f64 * (z - a).norm().ln();
        }
        for &(p, m) in &self.poles {
            v -= m as f64 * (z - p).norm().ln();
        }
        v
    }

    /// Supremum of `U` over the circle `|z| = t`: coarse angular sampling
    /// seeded at singular angles, then golden-section refinement of each
    /// local maximum.
    pub fn max_on_circle(&self, t: f64) -> CircleMax {
        debug_assert!(t >= 0.0);
        if t == 0.0 {
            let on_pole = self.poles.iter().any(|&(p, _)| p.norm() == 0.0);
            return CircleMax {
                value: if on_pole { f64::INFINITY } else { self.eval(Complex64::new(0.0, 0.0)) },
                pole_on_circle: on_pole,
            };
        }
        if self
            .poles
            .iter()
            .any(|&(p, _)| (p.norm() - t).abs() <= ON_CIRCLE_SLACK * t.max(1.0))
        {
            return CircleMax { value: f64::INFINITY, pole_on_circle: true };
        }
        let g = |phi: f64| self.eval(Complex64::from_polar(t, phi));
        let n = 128;
        let mut angles: Vec<f64> = (0..n).map(|i| i as f64 * std::f64::consts::TAU / n as f64).collect();
        for &(w, _) in self.zeros.iter().chain(self.poles.iter()) {
            let th = w.arg();
            for d in [-1e-3, 0.0, 1e-3] {
                angles.push(th + d);
            }
        }
        angles.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let m = angles.len();
        let vals: Vec<f64> = angles.iter().map(|&a| g(a)).collect();
        let best_sample = vals.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        let mut best = best_sample;
        for i in 0..m {
            let (prev, next) = ((i + m - 1) % m, (i + 1) % m);
            if vals[i] >= vals[prev] && vals[i] >= vals[next] {
                // Local maximum. Away from the (explicitly seeded) singular
                // angles the function varies by O(1) per bracket, so only
                // brackets sampling near the running best can hide the sup.
                if vals[i] < best_sample - 2.0 {
                    continue;
                }
                let lo = if i == 0 { angles[prev] - std::f64::consts::TAU } else { angles[prev] };
                let hi = if next == 0 { angles[next] + std::f64::consts::TAU } else { angles[next] };
                best = best.max(golden_max(&g, lo, hi));
            }
        }
        CircleMax { value: best, pole_on_circle: false }
    }

    /// Positive part of the circle supremum.
    pub fn max_plus_on_circle(&self, t: f64) -> CircleMax {
        let m = self.max_on_circle(t);
        CircleMax { value: m.value.max(0.0), pole_on_circle: m.pole_on_circle }
    }

    /// Pole-counting measure of the closed disk of radius `t` (the lower
    /// variation of the charge).
    pub fn lower_variation(&self, t: f64) -> u64 {
        self.poles
            .iter()
            .filter(|(p, _)| p.norm() <= t)
            .map(|&(_, m)| m as u64)
            .sum()
    }

    /// `(1/2π) ∫ U⁺(t e^{iφ}) dφ` to absolute tolerance `tol`.
    pub fn circle_mean_positive(&self, t: f64, tol: f64) -> Result<f64> {
        self.circle_mean(t, tol, true)
    }

    /// Signed circle mean `(1/2π) ∫ U(t e^{iφ}) dφ` (validation mode; the
    /// closed form for a single zero is `ln max(t, |a|)`).
    pub fn circle_mean_signed(&self, t: f64, tol: f64) -> Result<f64> {
        self.circle_mean(t, tol, false)
    }

    fn circle_mean(&self, t: f64, tol: f64, positive_part: bool) -> Result<f64> {
        if t == 0.0 {
            let v = self.eval(Complex64::new(0.0, 0.0));
            let v = if positive_part { v.max(0.0) } else { v };
            if !v.is_finite() {
                return Err(Error::Domain("singularity at the circle of radius 0".into()));
            }
            return Ok(v);
        }
        if let Some(w) = self
            .zeros
            .iter()
            .chain(self.poles.iter())
            .find(|(w, _)| (w.norm() - t).abs() <= ON_CIRCLE_SLACK * t.max(1.0))
        {
            return Err(Error::Domain(format!(
                "singularity at |z| = {} lies on the integration circle t = {t}",
                w.0.norm()
            )));
        }
        let g = |phi: f64| {
            let v = self.eval(Complex64::from_polar(t, phi));
            if positive_part {
                v.max(0.0)
            } else {
                v
            }
        };
        // Split at angles of near-circle singularities so the adaptive rule
        // sees each integrable log spike head-on.
        let mut cuts = vec![0.0, std::f64::consts::TAU];
        for &(w, _) in self.zeros.iter().chain(self.poles.iter()) {
            if ((w.norm() - t).abs()) < 0.25 * t {
                let th = w.arg().rem_euclid(std::f64::consts::TAU);
                cuts.push(th);
            }
        }
        for k in 1..8 {
            cuts.push(std::f64::consts::TAU * k as f64 / 8.0);
        }
        cuts.sort_by(|a, b| a.partial_cmp(b).unwrap());
        cuts.dedup();
        let mut total = 0.0;
        for w in cuts.windows(2) {
            if w[1] > w[0] {
                // the 1/2π of the mean turns an absolute tolerance `tol` into
                // a budget of tol·2π over the whole circle
                total += adaptive_simpson(&g, w[0], w[1], tol * (w[1] - w[0]))?.value;
            }
        }
        Ok(total / std::f64::consts::TAU)
    }

    /// The difference characteristic
    /// `T(r, R) = (1/2π)∫ U⁺(r e^{iφ}) dφ + Σ_{|p| ≤ R} mult·ln(R / max(r, |p|))`,
    /// the pole term being the closed form of `∫_r^R Δ⁻(t)/t dt`.
    pub fn characteristic(&self, r: f64, big_r: f64, tol: f64) -> Result<f64> {
        self.characteristic_substituted(r, r, big_r, tol)
    }

    /// The characteristic with the pole-counting integral started at
    /// `r0 ∈ [0, r]` instead of `r` (its integrand is nonnegative, so this
    /// only enlarges the value; at `r0 = r` it is [`Self::characteristic`]).
    /// The circle mean stays at `r`: moving it inward can annihilate the
    /// characteristic of a pole-free function while the bounded integrals
    /// stay positive.
    pub fn characteristic_substituted(
        &self,
        r0: f64,
        r: f64,
        big_r: f64,
        tol: f64,
    ) -> Result<f64> {
        if !(r >= 0.0 && r < big_r) {
            return Err(Error::Domain(format!("need 0 <= r < R, got r = {r}, R = {big_r}")));
        }
        if !(0.0..=r).contains(&r0) {
            return Err(Error::Domain(format!("need 0 <= r0 <= r, got r0 = {r0}")));
        }
        if big_r > self.working_radius {
            return Err(Error::Domain(format!(
                "R = {big_r} exceeds the working radius {}",
                self.working_radius
            )));
        }
        let mean = self.circle_mean_positive(r, tol)?;
        let mut pole_term = 0.0;
        for &(p, m) in &self.poles {
            let norm = p.norm();
            if norm <= big_r {
                pole_term += m as f64 * (big_r / norm.max(r0)).ln();
            }
        }
        Ok(mean + pole_term)
    }
}

/// Golden-section maximization on `[a, b]` to angular tolerance 1e-12.
fn golden_max(g: &dyn Fn(f64) -> f64, a: f64, b: f64) -> f64 {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let (mut a, mut b) = (a, b);
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let (mut fc, mut fd) = (g(c), g(d));
    while b - a > 1e-12 {
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = g(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = g(d);
        }
    }
    fc.max(fd).max(g(0.5 * (a + b)))
}
