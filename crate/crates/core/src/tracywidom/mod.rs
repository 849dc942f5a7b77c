//! Airy function, Painlevé II, the Tracy–Widom distribution and GUE sampling.
//!
//! This is the only floating-point module of the crate.

pub mod airy;
pub mod dd;
pub mod gue;
pub mod painleve;

pub use airy::{airy, airy_leading_asymptotic, airy_pair, airy_prime};
pub use gue::{gue_sample, gue_scaled_eigenvalue, gue_scaled_samples};
pub use painleve::{painleve2_hastings_mcleod, tw_cdf, tw_moments, HastingsMcLeod, PainleveConfig, TwMoments};

use crate::error::{Error, Result};

/// A function tabulated on a uniform grid.
#[derive(Clone, Debug, PartialEq)]
pub struct RealGrid {
    pub t_min: f64,
    pub step: f64,
    pub values: Vec<f64>,
}

impl RealGrid {
    pub fn tabulate(t_min: f64, t_max: f64, step: f64, f: impl Fn(f64) -> f64) -> Result<Self> {
        if !(step > 0.0) || !(t_max > t_min) || !t_min.is_finite() || !t_max.is_finite() {
            return Err(Error::InvalidInput(format!("bad grid [{t_min}, {t_max}] with step {step}")));
        }
        let n = ((t_max - t_min) / step + 1e-9).floor() as usize;
        let values = (0..=n).map(|i| f(t_min + i as f64 * step)).collect();
        Ok(RealGrid { t_min, step, values })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn t_max(&self) -> f64 {
        self.abscissa(self.values.len() - 1)
    }

    pub fn abscissa(&self, i: usize) -> f64 {
        self.t_min + i as f64 * self.step
    }

    pub fn points(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.values.iter().enumerate().map(|(i, &v)| (self.abscissa(i), v))
    }

    /// Linear interpolation, clamped to the end values outside the grid.
    pub fn eval(&self, t: f64) -> f64 {
        let pos = (t - self.t_min) / self.step;
        if pos <= 0.0 {
            return self.values[0];
        }
        let last = self.values.len() - 1;
        if pos >= last as f64 {
            return self.values[last];
        }
        let i = pos.floor() as usize;
        let s = pos - i as f64;
        self.values[i] * (1.0 - s) + self.values[i + 1] * s
    }

    /// Smallest `t` with `F(t) ≥ p`, for a nondecreasing tabulation.
    pub fn inverse(&self, p: f64) -> f64 {
        let j = self.values.partition_point(|&v| v < p);
        if j == 0 {
            return self.t_min;
        }
        if j >= self.values.len() {
            return self.t_max();
        }
        let (a, b) = (self.values[j - 1], self.values[j]);
        let s = if b > a { (p - a) / (b - a) } else { 0.0 };
        self.abscissa(j - 1) + s * self.step
    }
}

/// Sorted sample values.
#[derive(Clone, Debug, PartialEq)]
pub struct EmpiricalDistribution {
    values: Vec<f64>,
}

impl EmpiricalDistribution {
    pub fn new(mut values: Vec<f64>) -> Result<Self> {
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidInput("sample contains a non-finite value".into()));
        }
        values.sort_by(f64::total_cmp);
        Ok(EmpiricalDistribution { values })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn count(&self) -> usize {
        self.values.len()
    }

    pub fn mean(&self) -> f64 {
        self.values.iter().sum::<f64>() / self.values.len() as f64
    }

    /// Unbiased sample variance.
    pub fn variance(&self) -> f64 {
        let m = self.mean();
        let n = self.values.len() as f64;
        self.values.iter().map(|v| (v - m) * (v - m)).sum::<f64>() / (n - 1.0)
    }

    /// Counts in `bins` equal bins over `[lo, hi)`; values outside are dropped.
    pub fn histogram(&self, lo: f64, hi: f64, bins: usize) -> Vec<usize> {
        let mut out = vec![0; bins];
        let w = (hi - lo) / bins as f64;
        for &v in &self.values {
            if v >= lo && v < hi {
                out[(((v - lo) / w) as usize).min(bins - 1)] += 1;
            }
        }
        out
    }
}

/// Kolmogorov–Smirnov distance between a sample and a tabulated CDF.
pub fn ks_distance(e: &EmpiricalDistribution, f: &RealGrid) -> Result<f64> {
    if e.count() == 0 {
        return Err(Error::InvalidInput("empty sample".into()));
    }
    let n = e.count() as f64;
    let mut d: f64 = 0.0;
    for (i, &x) in e.values().iter().enumerate() {
        let fx = f.eval(x);
        d = d.max((i + 1) as f64 / n - fx).max(fx - i as f64 / n);
    }
    Ok(d)
}
