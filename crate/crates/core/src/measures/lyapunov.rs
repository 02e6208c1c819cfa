//! Largest Lyapunov exponent estimation from a pair of nearby trajectories.
//!
//! The exponent is the slope of the least-squares fit of `ln |D(t)|` against
//! `t`, where `D(t)` is the separation between the two trajectories. Raw
//! pairs carry literal state series; pairs generated with per-step
//! renormalization additionally carry the accumulated log-growth so the
//! reconstructed separation never saturates (or underflows) in `f64`.

use crate::error::{Error, Result};
use crate::stats::ols_line;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MapId {
    Logistic,
}

impl std::str::FromStr for MapId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "logistic" => Ok(MapId::Logistic),
            other => Err(Error::config(format!("unknown map {other:?}"))),
        }
    }
}

/// Two equal-length trajectories sampled at a fixed time step.
#[derive(Debug, Clone)]
pub struct TrajectoryPair {
    series_a: Vec<Vec<f64>>,
    series_b: Vec<Vec<f64>>,
    dt: f64,
    /// Per-step log growth factors when the pair was generated with
    /// renormalization; `None` for raw pairs.
    log_growth: Option<Vec<f64>>,
}

fn separation(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

impl TrajectoryPair {
    pub fn new(series_a: Vec<Vec<f64>>, series_b: Vec<Vec<f64>>, dt: f64) -> Result<Self> {
        if series_a.len() != series_b.len() {
            return Err(Error::config("trajectories must have equal length"));
        }
        if series_a.len() < 2 {
            return Err(Error::config("trajectories need at least two samples"));
        }
        if !(dt > 0.0 && dt.is_finite()) {
            return Err(Error::config("time step must be positive"));
        }
        let dim = series_a[0].len();
        if dim == 0
            || series_a.iter().any(|s| s.len() != dim)
            || series_b.iter().any(|s| s.len() != dim)
        {
            return Err(Error::config("inconsistent state dimensions"));
        }
        if separation(&series_a[0], &series_b[0]) == 0.0 {
            return Err(Error::config("initial separation must be positive"));
        }
        Ok(TrajectoryPair {
            series_a,
            series_b,
            dt,
            log_growth: None,
        })
    }

    pub fn len(&self) -> usize {
        self.series_a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.series_a.is_empty()
    }

    pub fn dt(&self) -> f64 {
        self.dt
    }

    pub fn series_a(&self) -> &[Vec<f64>] {
        &self.series_a
    }

    pub fn series_b(&self) -> &[Vec<f64>] {
        &self.series_b
    }

    pub fn log_growth(&self) -> Option<&[f64]> {
        self.log_growth.as_deref()
    }

    /// `ln |D(t)|` per retained step. For renormalized pairs the series is
    /// reconstructed from the accumulated growth instead of the (rescaled)
    /// stored states.
    pub fn log_separations(&self) -> Result<Vec<f64>> {
        let initial = separation(&self.series_a[0], &self.series_b[0]);
        match &self.log_growth {
            Some(growth) => {
                let mut out = Vec::with_capacity(growth.len() + 1);
                let mut acc = initial.ln();
                out.push(acc);
                for g in growth {
                    acc += g;
                    out.push(acc);
                }
                Ok(out)
            }
            None => self
                .series_a
                .iter()
                .zip(&self.series_b)
                .map(|(a, b)| {
                    let d = separation(a, b);
                    if d == 0.0 {
                        Err(Error::domain(
                            "zero separation encountered; consider the renormalized mode",
                        ))
                    } else {
                        Ok(d.ln())
                    }
                })
                .collect(),
        }
    }
}

/// Largest Lyapunov exponent over the full retained window.
pub fn largest_lyapunov(pair: &TrajectoryPair) -> Result<f64> {
    largest_lyapunov_windowed(pair, 0, pair.len())
}

/// Largest Lyapunov exponent fitted over sample indices `[start, end)`.
pub fn largest_lyapunov_windowed(pair: &TrajectoryPair, start: usize, end: usize) -> Result<f64> {
    if start + 2 > end || end > pair.len() {
        return Err(Error::config(format!(
            "fit window [{start}, {end}) needs at least 2 samples within 0..{}",
            pair.len()
        )));
    }
    let log_sep = pair.log_separations()?;
    let points: Vec<(f64, f64)> = (start..end)
        .map(|i| (i as f64 * pair.dt, log_sep[i]))
        .collect();
    ols_line(&points)
        .map(|(slope, _)| slope)
        .ok_or_else(|| Error::config("degenerate fit window"))
}

fn logistic(r: f64, x: f64) -> f64 {
    r * x * (1.0 - x)
}

fn check_in_domain(x: f64, step: usize) -> Result<f64> {
    if x.is_finite() && (0.0..=1.0).contains(&x) {
        Ok(x)
    } else {
        Err(Error::domain(format!(
            "trajectory escaped the map domain at step {step} (x = {x})"
        )))
    }
}

/// Generate a nearby trajectory pair under the chosen one-dimensional map.
///
/// With `renormalize` the companion trajectory is pulled back to distance
/// `delta0` after every step and the per-step log growth is recorded.
pub fn iterate_map_pair(
    map: MapId,
    param: f64,
    x0: f64,
    delta0: f64,
    steps: usize,
    renormalize: bool,
) -> Result<TrajectoryPair> {
    if !(x0 > 0.0 && x0 < 1.0) {
        return Err(Error::config("x0 must lie strictly inside (0, 1)"));
    }
    if !(delta0 > 0.0 && delta0 <= 1e-6) {
        return Err(Error::config("delta0 must lie in (0, 1e-6]"));
    }
    if steps < 10 {
        return Err(Error::config("need at least 10 steps"));
    }
    if !(param.is_finite() && param >= 0.0) {
        return Err(Error::config("map parameter must be finite and non-negative"));
    }
    let MapId::Logistic = map;
    let f = |x: f64| logistic(param, x);

    let mut a = x0;
    let mut b = x0 + delta0;
    let mut series_a = Vec::with_capacity(steps + 1);
    let mut series_b = Vec::with_capacity(steps + 1);
    let mut growth = renormalize.then(|| Vec::with_capacity(steps));
    series_a.push(vec![a]);
    series_b.push(vec![b]);
    for step in 1..=steps {
        a = check_in_domain(f(a), step)?;
        b = check_in_domain(f(b), step)?;
        if let Some(growth) = growth.as_mut() {
            let d = (b - a).abs();
            if d == 0.0 {
                return Err(Error::domain(format!(
                    "separation collapsed to zero at step {step}; renormalization impossible"
                )));
            }
            growth.push((d / delta0).ln());
            // place the companion back at distance delta0, flipping toward
            // the interior if the map carried us next to a boundary
            let sign = if b >= a { 1.0 } else { -1.0 };
            b = if a + sign * delta0 <= 1.0 && a + sign * delta0 >= 0.0 {
                a + sign * delta0
            } else {
                a - sign * delta0
            };
        }
        series_a.push(vec![a]);
        series_b.push(vec![b]);
    }
    let mut pair = TrajectoryPair::new(series_a, series_b, 1.0)?;
    pair.log_growth = growth;
    Ok(pair)
}
