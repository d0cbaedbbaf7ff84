//! Gauge functions pricing cover intervals.
//!
//! A gauge is an increasing function `h` on `[0, r]`, extended by the
//! constant `h(r)` beyond `r`. Three families are supported:
//!
//! * `power`: `h(t) = b·t^d` with `b > 0`, `d > 0`; concave exactly for
//!   `d ≤ 1`, which is what the exact content optimizer requires.
//! * `normalized-power`: `h_d(t) = c_d·t^d` with
//!   `c_d = π^{d/2} / (2^d Γ(d/2 + 1))`, the coefficient that calibrates the
//!   d-dimensional content against Lebesgue length at `d = 1`. `d = 0` is the
//!   counting gauge `h ≡ 1` (with `h(0) = 1`, the limit of `t^0`).
//! * `tabulated`: monotone piecewise-linear interpolation through knots.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::special;

fn default_domain_right() -> f64 {
    1.0
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
enum GaugeKind {
    Power { b: f64, d: f64 },
    NormalizedPower { d: f64 },
    Tabulated { knots: Vec<(f64, f64)> },
}

/// An increasing gauge on `[0, r]`, constant beyond `r`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Gauge {
    #[serde(flatten)]
    kind: GaugeKind,
    #[serde(default = "default_domain_right")]
    domain_right: f64,
}

/// Normalization coefficient `c_d = π^{d/2} / (2^d Γ(d/2 + 1))` of the
/// d-dimensional gauge. `c_1 = 1` and `c_d ≥ 1/4` on `(0, 1]`.
pub fn normalization_constant(d: f64) -> f64 {
    if d == 0.0 {
        // π^0 / (2^0 Γ(1)) exactly; the counting gauge must be exactly 1
        return 1.0;
    }
    std::f64::consts::PI.powf(d / 2.0) / (2f64.powf(d) * special::gamma(d / 2.0 + 1.0))
}

/// Past this running sup the numeric stretch constant of a tabulated gauge is
/// reported as divergent.
pub const TABULATED_STRETCH_LIMIT: f64 = 1e6;

impl Gauge {
    /// `h(t) = b·t^d` on `[0, r]`.
    pub fn power(b: f64, d: f64, domain_right: f64) -> Result<Self> {
        if !(b > 0.0) || !b.is_finite() {
            return Err(Error::Domain(format!("power gauge needs b > 0, got {b}")));
        }
        if !(d > 0.0) || !d.is_finite() {
            return Err(Error::Domain(format!("power gauge needs d > 0, got {d}")));
        }
        check_domain_right(domain_right)?;
        Ok(Self {
            kind: GaugeKind::Power { b, d },
            domain_right,
        })
    }

    /// `h_d(t) = c_d·t^d` on `[0, r]`; `d = 0` gives the counting gauge.
    pub fn normalized_power(d: f64, domain_right: f64) -> Result<Self> {
        if !(d >= 0.0) || !d.is_finite() {
            return Err(Error::Domain(format!(
                "normalized-power gauge needs d >= 0, got {d}"
            )));
        }
        check_domain_right(domain_right)?;
        Ok(Self {
            kind: GaugeKind::NormalizedPower { d },
            domain_right,
        })
    }

    /// Monotone piecewise-linear gauge through `knots`; the first knot must
    /// sit at `t = 0` and the domain ends at the last knot.
    pub fn tabulated(knots: Vec<(f64, f64)>) -> Result<Self> {
        if knots.len() < 2 {
            return Err(Error::Domain("tabulated gauge needs >= 2 knots".into()));
        }
        if knots[0].0 != 0.0 {
            return Err(Error::Domain("tabulated gauge must start at t = 0".into()));
        }
        for w in knots.windows(2) {
            if !(w[1].0 > w[0].0) {
                return Err(Error::Domain("tabulated knots must be strictly increasing in t".into()));
            }
            if w[1].1 < w[0].1 {
                return Err(Error::Domain("tabulated knot values must be nondecreasing".into()));
            }
        }
        if knots.iter().any(|&(t, v)| !t.is_finite() || !v.is_finite() || v < 0.0) {
            return Err(Error::Domain("tabulated knots must be finite and nonnegative".into()));
        }
        let domain_right = knots.last().unwrap().0;
        Ok(Self {
            kind: GaugeKind::Tabulated { knots },
            domain_right,
        })
    }

    /// Parse a gauge literal such as `{"kind":"power","b":2.0,"d":0.5}`.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: Gauge = serde_json::from_str(text)
            .map_err(|e| Error::Domain(format!("gauge literal: {e}")))?;
        raw.validated()
    }

    fn validated(self) -> Result<Self> {
        match &self.kind {
            GaugeKind::Power { b, d } => Self::power(*b, *d, self.domain_right),
            GaugeKind::NormalizedPower { d } => Self::normalized_power(*d, self.domain_right),
            GaugeKind::Tabulated { knots } => Self::tabulated(knots.clone()),
        }
    }

    pub fn domain_right(&self) -> f64 {
        self.domain_right
    }

    /// `h(t)`, with the constant extension `h(r)` for `t > r`.
    pub fn eval(&self, t: f64) -> f64 {
        debug_assert!(t >= 0.0, "gauges are defined on t >= 0");
        let t = t.min(self.domain_right);
        match &self.kind {
            GaugeKind::Power { b, d } => b * t.powf(*d),
            // powf(0, 0) = 1, which is exactly the counting-gauge convention.
            GaugeKind::NormalizedPower { d } => normalization_constant(*d) * t.powf(*d),
            GaugeKind::Tabulated { knots } => {
                let idx = knots.partition_point(|&(kt, _)| kt <= t);
                if idx == 0 {
                    knots[0].1
                } else if idx == knots.len() {
                    knots[knots.len() - 1].1
                } else {
                    let (t0, v0) = knots[idx - 1];
                    let (t1, v1) = knots[idx];
                    v0 + (v1 - v0) * (t - t0) / (t1 - t0)
                }
            }
        }
    }

    /// Value at the right end of the domain, `h(r)`.
    pub fn value_at_right(&self) -> f64 {
        self.eval(self.domain_right)
    }

    /// The unique `t ∈ [0, r]` with `h(t) = x`, for a strictly increasing
    /// gauge and `0 ≤ x ≤ h(r)`.
    pub fn inverse(&self, x: f64) -> Result<f64> {
        let hr = self.value_at_right();
        if !(0.0..=hr).contains(&x) {
            return Err(Error::OutOfRange { value: x, lo: 0.0, hi: hr });
        }
        match &self.kind {
            GaugeKind::Power { b, d } => Ok((x / b).powf(1.0 / d)),
            GaugeKind::NormalizedPower { d } => {
                if *d == 0.0 {
                    return Err(Error::Domain(
                        "counting gauge is constant and has no inverse".into(),
                    ));
                }
                Ok((x / normalization_constant(*d)).powf(1.0 / d))
            }
            GaugeKind::Tabulated { knots } => {
                for w in knots.windows(2) {
                    if w[1].1 <= w[0].1 {
                        return Err(Error::Domain(
                            "tabulated gauge is not strictly increasing; no inverse".into(),
                        ));
                    }
                }
                // Bisection to 1e-12 in t.
                let (mut lo, mut hi) = (0.0, self.domain_right);
                while hi - lo > 1e-12 {
                    let mid = 0.5 * (lo + hi);
                    if self.eval(mid) < x {
                        lo = mid;
                    } else {
                        hi = mid;
                    }
                }
                Ok(0.5 * (lo + hi))
            }
        }
    }

    /// The stretch constant `sup_{0<t<r} h(t) / (t·h'(t))`; a finite value
    /// certifies the gauge for the modulus-gauge bound. Power gauges give
    /// exactly `1/d`; tabulated gauges take a numeric sup over segment
    /// midpoints with the segment slope as one-sided difference quotient and
    /// are declared divergent either past [`TABULATED_STRETCH_LIMIT`] or when
    /// the sup keeps growing monotonically at the smallest resolvable
    /// midpoints.
    pub fn stretch_constant(&self) -> f64 {
        match &self.kind {
            GaugeKind::Power { d, .. } => 1.0 / d,
            GaugeKind::NormalizedPower { d } => {
                if *d == 0.0 {
                    f64::INFINITY
                } else {
                    1.0 / d
                }
            }
            GaugeKind::Tabulated { knots } => {
                let mut ratios = Vec::with_capacity(knots.len() - 1);
                for w in knots.windows(2) {
                    let slope = (w[1].1 - w[0].1) / (w[1].0 - w[0].0);
                    if slope <= 0.0 {
                        return f64::INFINITY;
                    }
                    let mid = 0.5 * (w[0].0 + w[1].0);
                    ratios.push(self.eval(mid) / (mid * slope));
                }
                let sup = ratios.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
                if sup > TABULATED_STRETCH_LIMIT {
                    return f64::INFINITY;
                }
                // Divergence trend: the ratio keeps climbing as t shrinks.
                // The segment at the origin is skipped (linear interpolation
                // from (0, h(0)) pins its ratio near 1 regardless of h).
                if ratios.len() >= 5 {
                    let window = &ratios[1..ratios.len().min(9)];
                    let increasing_toward_zero = window.windows(2).all(|w| w[0] > w[1])
                        && window[0] > 1.1 * window[window.len() - 1];
                    if increasing_toward_zero {
                        return f64::INFINITY;
                    }
                }
                sup
            }
        }
    }

    /// Whether `h` is concave on `[0, r]` (second-difference test for
    /// tabulated gauges, `d ≤ 1` for power families).
    pub fn is_concave(&self) -> bool {
        match &self.kind {
            GaugeKind::Power { d, .. } | GaugeKind::NormalizedPower { d } => *d <= 1.0,
            GaugeKind::Tabulated { knots } => {
                let mut prev_slope = f64::INFINITY;
                for w in knots.windows(2) {
                    let slope = (w[1].1 - w[0].1) / (w[1].0 - w[0].0);
                    if slope > prev_slope * (1.0 + 1e-12) + 1e-15 {
                        return false;
                    }
                    prev_slope = slope;
                }
                true
            }
        }
    }

    /// Whether `h(0) = 0` (the counting gauge is the one family violating it).
    pub fn vanishes_at_zero(&self) -> bool {
        self.eval(0.0) == 0.0
    }
}

fn check_domain_right(r: f64) -> Result<()> {
    if !(r > 0.0) || !r.is_finite() {
        return Err(Error::Domain(format!("domain_right must be positive, got {r}")));
    }
    Ok(())
}
