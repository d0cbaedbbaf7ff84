//! Compact subsets of `[0, r]` as finite unions of disjoint closed intervals.
//!
//! Degenerate intervals model points, so finite point sets and fat interval
//! unions share one representation and one content pipeline.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite union of disjoint closed intervals inside the ambient `[0, r]`.
/// Components are sorted and strictly separated (`b_k < a_{k+1}`).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IntervalUnion {
    ambient_right: f64,
    components: Vec<(f64, f64)>,
}

#[derive(Deserialize)]
struct CantorSpec {
    depth: u32,
    ratio: f64,
    #[serde(default)]
    ambient_right: Option<f64>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum SetSpec {
    Cantor { cantor: CantorSpec },
    Explicit {
        intervals: Vec<(f64, f64)>,
        #[serde(default)]
        ambient_right: Option<f64>,
    },
}

impl IntervalUnion {
    /// Sorts `raw`, merges overlaps and adjacencies, and validates that
    /// everything sits inside `[0, ambient_right]`.
    pub fn normalize(raw: &[(f64, f64)], ambient_right: f64) -> Result<Self> {
        if !(ambient_right > 0.0) || !ambient_right.is_finite() {
            return Err(Error::Domain(format!(
                "ambient_right must be positive, got {ambient_right}"
            )));
        }
        for &(a, b) in raw {
            if !a.is_finite() || !b.is_finite() || a > b {
                return Err(Error::Domain(format!("bad interval [{a}, {b}]")));
            }
            if a < 0.0 || b > ambient_right {
                return Err(Error::Domain(format!(
                    "interval [{a}, {b}] outside ambient [0, {ambient_right}]"
                )));
            }
        }
        let mut sorted: Vec<(f64, f64)> = raw.to_vec();
        sorted.sort_by(|x, y| x.partial_cmp(y).unwrap());
        let mut components: Vec<(f64, f64)> = Vec::with_capacity(sorted.len());
        for (a, b) in sorted {
            match components.last_mut() {
                Some(last) if a <= last.1 => last.1 = last.1.max(b),
                _ => components.push((a, b)),
            }
        }
        Ok(Self { ambient_right, components })
    }

    /// The depth-`n` stage of the two-map iterated contraction of
    /// `[0, ambient_right]` with factor `ratio` at both ends: `2^n` components
    /// of length `ratio^n · ambient_right`.
    pub fn cantor_prefractal(depth: u32, ratio: f64, ambient_right: f64) -> Result<Self> {
        if !(ratio > 0.0 && ratio < 0.5) {
            return Err(Error::Domain(format!("ratio must lie in (0, 1/2), got {ratio}")));
        }
        if depth > 30 {
            return Err(Error::SizeGuard(format!("prefractal depth {depth} > 30")));
        }
        if !(ambient_right > 0.0) || !ambient_right.is_finite() {
            return Err(Error::Domain("ambient_right must be positive".into()));
        }
        let mut comps = vec![(0.0, ambient_right)];
        for _ in 0..depth {
            let mut next = Vec::with_capacity(comps.len() * 2);
            for &(a, b) in &comps {
                let len = b - a;
                next.push((a, a + ratio * len));
                next.push((b - ratio * len, b));
            }
            comps = next;
        }
        Ok(Self { ambient_right, components: comps })
    }

    /// The exponent `ln 2 / ln(1/ratio)` under which the two-map prefractal
    /// family is self-similar.
    pub fn similarity_dimension(ratio: f64) -> Result<f64> {
        if !(ratio > 0.0 && ratio < 0.5) {
            return Err(Error::Domain(format!("ratio must lie in (0, 1/2), got {ratio}")));
        }
        Ok(2f64.ln() / (1.0 / ratio).ln())
    }

    /// Parse a set literal: `{"intervals":[[a,b],...]}` or
    /// `{"cantor":{"depth":n,"ratio":x}}`.
    pub fn from_json(text: &str) -> Result<Self> {
        let spec: SetSpec = serde_json::from_str(text)
            .map_err(|e| Error::Domain(format!("set literal: {e}")))?;
        match spec {
            SetSpec::Cantor { cantor } => Self::cantor_prefractal(
                cantor.depth,
                cantor.ratio,
                cantor.ambient_right.unwrap_or(1.0),
            ),
            SetSpec::Explicit { intervals, ambient_right } => {
                Self::normalize(&intervals, ambient_right.unwrap_or(1.0))
            }
        }
    }

    pub fn ambient_right(&self) -> f64 {
        self.ambient_right
    }

    pub fn components(&self) -> &[(f64, f64)] {
        &self.components
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn total_length(&self) -> f64 {
        self.components.iter().map(|&(a, b)| b - a).sum()
    }

    /// Smallest distance between consecutive components (infinite when fewer
    /// than two).
    pub fn min_gap(&self) -> f64 {
        self.components
            .windows(2)
            .map(|w| w[1].0 - w[0].1)
            .fold(f64::INFINITY, f64::min)
    }

    /// Leftmost point, if any.
    pub fn min_point(&self) -> Option<f64> {
        self.components.first().map(|&(a, _)| a)
    }

    /// Rightmost point, if any.
    pub fn max_point(&self) -> Option<f64> {
        self.components.last().map(|&(_, b)| b)
    }

    /// Componentwise subset check with slack for round-off.
    pub fn subset_of(&self, other: &IntervalUnion, tol: f64) -> bool {
        self.components.iter().all(|&(a, b)| {
            other
                .components
                .iter()
                .any(|&(c, d)| a >= c - tol && b <= d + tol)
        })
    }

    /// The pieces of `self ∩ [a, b]`, in order.
    pub fn intersect_interval(&self, a: f64, b: f64) -> Vec<(f64, f64)> {
        self.components
            .iter()
            .filter_map(|&(c, d)| {
                let lo = c.max(a);
                let hi = d.min(b);
                (lo <= hi).then_some((lo, hi))
            })
            .collect()
    }

    /// A new union from a subset of this union's components.
    pub fn select_components(&self, indices: &[usize]) -> Result<Self> {
        let picked: Vec<(f64, f64)> = indices.iter().map(|&i| self.components[i]).collect();
        Self::normalize(&picked, self.ambient_right)
    }
}
