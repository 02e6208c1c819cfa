//! Reconstruction of a 1-D target function as a Dirac comb convolved with a
//! Gaussian kernel, and the sample-count cost sweep built on top of it.
//!
//! Sampling the target at N points and smearing each sample with a
//! unit-integral Gaussian yields an approximation whose quadratic error
//! (operation cost) falls as the sample count (modeling cost) rises; the
//! normalized sum of the two exposes the trade-off minimum.

use crate::cost::{CostCombiner, CostCurve};
use crate::error::{Error, Result};
use crate::rng::Rng;

/// Gaussian kernel evaluations are truncated beyond this many standard
/// deviations; the neglected mass is below 1e-15.
const KERNEL_SUPPORT_SIGMAS: f64 = 8.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MixtureComponent {
    pub weight: f64,
    pub mean: f64,
    pub stddev: f64,
}

/// A Gaussian-mixture target function on a closed interval.
#[derive(Debug, Clone, PartialEq)]
pub struct TargetFunction1D {
    components: Vec<MixtureComponent>,
    domain: (f64, f64),
}

impl TargetFunction1D {
    pub fn gaussian_mixture(
        components: Vec<MixtureComponent>,
        domain: (f64, f64),
    ) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::config("mixture needs at least one component"));
        }
        for c in &components {
            if !(c.weight > 0.0 && c.weight.is_finite()) {
                return Err(Error::config("component weights must be positive"));
            }
            if !(c.stddev > 0.0 && c.stddev.is_finite()) || !c.mean.is_finite() {
                return Err(Error::config("component parameters must be finite, stddev > 0"));
            }
        }
        if !(domain.0.is_finite() && domain.1.is_finite() && domain.0 < domain.1) {
            return Err(Error::config("domain must be a non-empty interval"));
        }
        Ok(TargetFunction1D { components, domain })
    }

    /// The default target for the sweep: a smooth bimodal mixture,
    /// 0.6 N(-1, 0.5) + 0.4 N(1.5, 0.8) on [-5, 5].
    pub fn default_target() -> Self {
        TargetFunction1D {
            components: vec![
                MixtureComponent {
                    weight: 0.6,
                    mean: -1.0,
                    stddev: 0.5,
                },
                MixtureComponent {
                    weight: 0.4,
                    mean: 1.5,
                    stddev: 0.8,
                },
            ],
            domain: (-5.0, 5.0),
        }
    }

    pub fn domain(&self) -> (f64, f64) {
        self.domain
    }

    pub fn components(&self) -> &[MixtureComponent] {
        &self.components
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.components
            .iter()
            .map(|c| c.weight * gaussian_pdf(x - c.mean, c.stddev))
            .sum()
    }

    fn total_weight(&self) -> f64 {
        self.components.iter().map(|c| c.weight).sum()
    }

    /// Draw one point from the mixture treated as a density, rejecting draws
    /// that fall outside the domain.
    fn sample(&self, rng: &mut Rng) -> f64 {
        let total = self.total_weight();
        loop {
            let mut pick = rng.next_f64() * total;
            let mut chosen = &self.components[self.components.len() - 1];
            for c in &self.components {
                if pick < c.weight {
                    chosen = c;
                    break;
                }
                pick -= c.weight;
            }
            let x = chosen.mean + chosen.stddev * rng.normal();
            if x >= self.domain.0 && x <= self.domain.1 {
                return x;
            }
        }
    }
}

#[inline]
fn gaussian_pdf(u: f64, sigma: f64) -> f64 {
    let norm = 1.0 / (sigma * (2.0 * std::f64::consts::PI).sqrt());
    norm * (-0.5 * (u / sigma) * (u / sigma)).exp()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SampleMode {
    /// Samples at uniformly spaced abscissas weighted by P(x)·Δx.
    DeterministicWeighted,
    /// Samples drawn from P treated as a density, kernels weighted 1/N.
    RandomDraw,
}

impl std::str::FromStr for SampleMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "deterministic" | "deterministic_weighted" => Ok(SampleMode::DeterministicWeighted),
            "random" | "random_draw" => Ok(SampleMode::RandomDraw),
            other => Err(Error::config(format!("unknown sample mode {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReconstructionConfig {
    /// Evaluation grid resolution G.
    pub grid_points: usize,
    /// Bandwidth factor κ; the kernel width is κ·(b-a)/N.
    pub bandwidth_factor: f64,
    pub mode: SampleMode,
    pub seed: u64,
}

impl Default for ReconstructionConfig {
    fn default() -> Self {
        ReconstructionConfig {
            grid_points: 2048,
            bandwidth_factor: 1.0,
            mode: SampleMode::DeterministicWeighted,
            seed: 0,
        }
    }
}

impl ReconstructionConfig {
    fn validate(&self) -> Result<()> {
        if self.grid_points < 64 {
            return Err(Error::config("grid needs at least 64 points"));
        }
        if !(self.bandwidth_factor > 0.0 && self.bandwidth_factor.is_finite()) {
            return Err(Error::config("bandwidth factor must be positive"));
        }
        Ok(())
    }
}

/// A reconstruction evaluated on the grid together with its quadratic error
/// against the target.
#[derive(Debug, Clone)]
pub struct Reconstruction {
    pub xs: Vec<f64>,
    pub target: Vec<f64>,
    pub reconstructed: Vec<f64>,
    /// Riemann sum of (R - P)^2 over the grid.
    pub quadratic_error: f64,
    pub bandwidth: f64,
}

/// Reconstruct the target from `n_samples` samples.
pub fn reconstruct(
    target: &TargetFunction1D,
    n_samples: usize,
    cfg: &ReconstructionConfig,
) -> Result<Reconstruction> {
    cfg.validate()?;
    if n_samples < 2 {
        return Err(Error::config("need at least 2 samples"));
    }
    let (a, b) = target.domain();
    let sigma = cfg.bandwidth_factor * (b - a) / n_samples as f64;
    if !sigma.is_finite() || sigma <= 0.0 {
        return Err(Error::config("bandwidth collapsed to zero"));
    }

    let g = cfg.grid_points;
    let grid_step = (b - a) / (g - 1) as f64;
    let xs: Vec<f64> = (0..g).map(|i| a + i as f64 * grid_step).collect();
    let target_values: Vec<f64> = xs.iter().map(|&x| target.eval(x)).collect();

    // (sample abscissa, kernel weight)
    let samples: Vec<(f64, f64)> = match cfg.mode {
        SampleMode::DeterministicWeighted => {
            let dx = (b - a) / (n_samples - 1) as f64;
            (0..n_samples)
                .map(|i| {
                    let x = a + i as f64 * dx;
                    (x, target.eval(x) * dx)
                })
                .collect()
        }
        SampleMode::RandomDraw => {
            let mut rng = Rng::new(cfg.seed);
            let w = 1.0 / n_samples as f64;
            (0..n_samples).map(|_| (target.sample(&mut rng), w)).collect()
        }
    };

    let mut reconstructed = vec![0.0; g];
    let support = KERNEL_SUPPORT_SIGMAS * sigma;
    for &(x, weight) in &samples {
        let lo = (((x - support) - a) / grid_step).floor().max(0.0) as usize;
        let hi = ((((x + support) - a) / grid_step).ceil() as usize).min(g - 1);
        for i in lo..=hi {
            reconstructed[i] += weight * gaussian_pdf(xs[i] - x, sigma);
        }
    }

    let quadratic_error = reconstructed
        .iter()
        .zip(&target_values)
        .map(|(r, p)| (r - p) * (r - p))
        .sum::<f64>()
        * grid_step;

    Ok(Reconstruction {
        xs,
        target: target_values,
        reconstructed,
        quadratic_error,
        bandwidth: sigma,
    })
}

/// How the modeling cost of a sweep point is counted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CostModel {
    /// Modeling cost = N, the number of samples.
    Count,
    /// Modeling cost = N·G, the nominal kernel evaluation count.
    Operations,
}

impl std::str::FromStr for CostModel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "count" => Ok(CostModel::Count),
            "operations" => Ok(CostModel::Operations),
            other => Err(Error::config(format!("unknown cost model {other:?}"))),
        }
    }
}

/// The default sample-count sweep {10, 20, ..., 2000}.
pub fn default_sweep_values() -> Vec<usize> {
    (1..=200).map(|i| i * 10).collect()
}

/// Sweep the sample count and emit the normalized cost curve: modeling cost
/// per the chosen cost model, operation cost the quadratic error.
pub fn sweep_samples(
    target: &TargetFunction1D,
    cfg: &ReconstructionConfig,
    n_values: &[usize],
    cost_model: CostModel,
    combiner: &CostCombiner,
) -> Result<CostCurve> {
    if n_values.len() < 3 {
        return Err(Error::config("sweep needs at least 3 sample counts"));
    }
    if n_values.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::config("sweep sample counts must be strictly increasing"));
    }
    let mut triples = Vec::with_capacity(n_values.len());
    for &n in n_values {
        let rec = reconstruct(target, n, cfg)?;
        let modeling = match cost_model {
            CostModel::Count => n as f64,
            CostModel::Operations => n as f64 * cfg.grid_points as f64,
        };
        triples.push((n as f64, modeling, rec.quadratic_error));
    }
    let raw = CostCurve::from_raw(triples, combiner)?;
    crate::cost::normalize_curve(&raw, combiner)
}
