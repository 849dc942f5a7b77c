//! The Hastings–McLeod solution of `u'' = 2u³ + xu` and the distribution
//! `F(t) = exp(−∫_t^∞ (x − t) u(x)² dx)`.
//!
//! The solution is integrated backward from `x₀` with classical RK4,
//! starting from `−k·(Ai, Ai')(x₀)`. Solutions with `k` slightly below the
//! connection value turn positive and oscillate; those above it blow up.
//! Bisection on `k` pins the connection value to machine precision. The
//! integrals `I₀(x) = ∫_x^∞ u²` and `I₁(x) = ∫_x^∞ s u(s)² ds` are carried
//! along, so that `log F(t) = −(I₁(t) − t I₀(t))` and `F'(t) = F(t) I₀(t)`.
//!
//! Left of the origin the problem is ill-conditioned in double precision:
//! `u` is accurate to about 1e−5 at `x = −8` and only 1e−2 at `x = −10`.
//! `F` is below 1e−20 there, so the distribution is unaffected.

use super::airy::airy_pair;
use super::RealGrid;
use crate::error::{Error, Result};

/// Solver settings.
#[derive(Clone, Copy, Debug)]
pub struct PainleveConfig {
    /// Matching point for the Airy boundary condition.
    pub x0: f64,
    /// Left end of the stored solution.
    pub x_min: f64,
    /// How far beyond `x_min` solutions are followed when classifying a
    /// trial amplitude.
    pub overshoot: f64,
    /// Steps per unit length.
    pub steps_per_unit: usize,
}

impl Default for PainleveConfig {
    fn default() -> Self {
        PainleveConfig { x0: 8.0, x_min: -10.0, overshoot: 2.0, steps_per_unit: 512 }
    }
}

impl PainleveConfig {
    pub fn step(&self) -> f64 {
        1.0 / self.steps_per_unit as f64
    }

    pub fn with_steps(mut self, steps_per_unit: usize) -> Self {
        self.steps_per_unit = steps_per_unit;
        self
    }
}

type State = [f64; 4];

fn rhs(x: f64, s: &State) -> State {
    let u = s[0];
    [s[1], 2.0 * u * u * u + x * u, -u * u, -x * u * u]
}

fn rk4_step(x: f64, s: &State, h: f64) -> State {
    let add = |a: &State, b: &State, c: f64| [a[0] + c * b[0], a[1] + c * b[1], a[2] + c * b[2], a[3] + c * b[3]];
    let k1 = rhs(x, s);
    let k2 = rhs(x + h / 2.0, &add(s, &k1, h / 2.0));
    let k3 = rhs(x + h / 2.0, &add(s, &k2, h / 2.0));
    let k4 = rhs(x + h, &add(s, &k3, h));
    let mut out = *s;
    for i in 0..4 {
        out[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
    out
}

#[derive(Debug, PartialEq)]
enum Fate {
    /// `u` crossed zero: amplitude too small.
    TurnedPositive,
    /// `u` ran off to −∞: amplitude too large.
    BlewUp,
    /// Reached the end; classified by comparison with `−√(−x/2)`.
    Survived(f64),
}

fn initial_state(cfg: &PainleveConfig, k: f64) -> Result<State> {
    let (ai, aip) = airy_pair(cfg.x0)?;
    // tails beyond x₀ use u ≈ −Ai: ∫_x^∞ Ai² = Ai'² − x Ai²
    let i0 = k * k * (aip * aip - cfg.x0 * ai * ai);
    Ok([-k * ai, -k * aip, i0, cfg.x0 * i0])
}

fn classify(cfg: &PainleveConfig, k: f64) -> Result<Fate> {
    let h = -cfg.step();
    let end = cfg.x_min - cfg.overshoot;
    let n = ((cfg.x0 - end) / cfg.step()).round() as usize;
    let mut s = initial_state(cfg, k)?;
    for i in 0..n {
        let x = cfg.x0 + i as f64 * h;
        s = rk4_step(x, &s, h);
        let x = x + h;
        if s[0] > 0.0 {
            return Ok(Fate::TurnedPositive);
        }
        if s[0] < -(2.0 + (-x).max(0.0).sqrt() * 2.0) || !s[0].is_finite() {
            return Ok(Fate::BlewUp);
        }
    }
    Ok(Fate::Survived(s[0] + (-end / 2.0).sqrt()))
}

/// The Hastings–McLeod solution on a uniform grid from `x_min` to `x₀`.
#[derive(Clone, Debug)]
pub struct HastingsMcLeod {
    pub config: PainleveConfig,
    /// Connection amplitude: `u ≈ −k·Ai` at `x₀`.
    pub k: f64,
    /// Abscissae, increasing.
    pub x: Vec<f64>,
    pub u: Vec<f64>,
    pub du: Vec<f64>,
    pub i0: Vec<f64>,
    pub i1: Vec<f64>,
}

pub fn painleve2_hastings_mcleod(cfg: PainleveConfig) -> Result<HastingsMcLeod> {
    if cfg.x_min < -10.0 - 1e-12 || cfg.x0 > 10.0 + 1e-12 || cfg.x_min >= cfg.x0 {
        return Err(Error::InvalidInput("Painlevé grid must lie within [−10, 10]".into()));
    }
    let (mut lo, mut hi) = (0.5f64, 1.5f64);
    if classify(&cfg, lo)? == Fate::BlewUp || classify(&cfg, hi)? == Fate::TurnedPositive {
        return Err(Error::Numerical("shooting bracket does not straddle the connection amplitude".into()));
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        match classify(&cfg, mid)? {
            Fate::TurnedPositive => lo = mid,
            Fate::BlewUp => hi = mid,
            Fate::Survived(dev) => {
                if dev > 0.0 {
                    lo = mid
                } else {
                    hi = mid
                }
            }
        }
    }
    let k = 0.5 * (lo + hi);
    let h = cfg.step();
    let n = ((cfg.x0 - cfg.x_min) / h).round() as usize;
    let mut s = initial_state(&cfg, k)?;
    let mut rows = Vec::with_capacity(n + 1);
    rows.push((cfg.x0, s));
    for i in 0..n {
        let x = cfg.x0 - i as f64 * h;
        s = rk4_step(x, &s, -h);
        rows.push((cfg.x0 - (i + 1) as f64 * h, s));
        if !s[0].is_finite() || s[0] > 0.0 {
            return Err(Error::Numerical(format!("Painlevé solution left the Hastings–McLeod branch near x = {x}")));
        }
    }
    rows.reverse();
    Ok(HastingsMcLeod {
        config: cfg,
        k,
        x: rows.iter().map(|r| r.0).collect(),
        u: rows.iter().map(|r| r.1[0]).collect(),
        du: rows.iter().map(|r| r.1[1]).collect(),
        i0: rows.iter().map(|r| r.1[2]).collect(),
        i1: rows.iter().map(|r| r.1[3]).collect(),
    })
}

impl HastingsMcLeod {
    pub fn step(&self) -> f64 {
        self.config.step()
    }

    fn locate(&self, t: f64) -> (usize, f64) {
        let h = self.step();
        let pos = ((t - self.x[0]) / h).clamp(0.0, (self.x.len() - 1) as f64);
        let i = (pos.floor() as usize).min(self.x.len() - 2);
        (i, pos - i as f64)
    }

    /// Cubic Hermite interpolation of `u`.
    pub fn u_at(&self, t: f64) -> f64 {
        let (i, s) = self.locate(t);
        hermite(s, self.step(), self.u[i], self.u[i + 1], self.du[i], self.du[i + 1])
    }

    /// `log F(t)`; `F(t) = 1` to double precision for `t ≥ x₀`.
    pub fn log_cdf(&self, t: f64) -> f64 {
        if t >= self.config.x0 {
            return 0.0;
        }
        let (i, s) = self.locate(t);
        let h = self.step();
        let d0 = |j: usize| -self.u[j] * self.u[j];
        let d1 = |j: usize| -self.x[j] * self.u[j] * self.u[j];
        let i0 = hermite(s, h, self.i0[i], self.i0[i + 1], d0(i), d0(i + 1));
        let i1 = hermite(s, h, self.i1[i], self.i1[i + 1], d1(i), d1(i + 1));
        -(i1 - t * i0)
    }

    pub fn cdf(&self, t: f64) -> f64 {
        self.log_cdf(t).exp()
    }

    /// `F'(t) = F(t)·∫_t^∞ u²`.
    pub fn density(&self, t: f64) -> f64 {
        if t >= self.config.x0 {
            return 0.0;
        }
        let (i, s) = self.locate(t);
        let h = self.step();
        let i0 = hermite(s, h, self.i0[i], self.i0[i + 1], -self.u[i] * self.u[i], -self.u[i + 1] * self.u[i + 1]);
        self.cdf(t) * i0
    }

    /// `max |u'' − 2u³ − xu|` over interior grid points in `[a, b]`, with
    /// `u''` from the five-point stencil.
    pub fn max_residual(&self, a: f64, b: f64) -> f64 {
        let h = self.step();
        let mut worst: f64 = 0.0;
        for i in 2..self.x.len() - 2 {
            let x = self.x[i];
            if x < a || x > b {
                continue;
            }
            let u = &self.u;
            let d2 = (-u[i + 2] + 16.0 * u[i + 1] - 30.0 * u[i] + 16.0 * u[i - 1] - u[i - 2]) / (12.0 * h * h);
            worst = worst.max((d2 - 2.0 * u[i].powi(3) - x * u[i]).abs());
        }
        worst
    }
}

fn hermite(s: f64, h: f64, y0: f64, y1: f64, d0: f64, d1: f64) -> f64 {
    let s2 = s * s;
    let s3 = s2 * s;
    (2.0 * s3 - 3.0 * s2 + 1.0) * y0 + (s3 - 2.0 * s2 + s) * h * d0 + (-2.0 * s3 + 3.0 * s2) * y1 + (s3 - s2) * h * d1
}

/// Mean, variance and total mass of the distribution.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TwMoments {
    pub mean: f64,
    pub variance: f64,
    pub mass: f64,
}

/// Moments against `dF` by Simpson's rule on the solver grid.
pub fn tw_moments(sol: &HastingsMcLeod) -> TwMoments {
    let n = sol.x.len() - 1;
    let n = n - n % 2;
    let h = sol.step();
    let mut m = [0.0f64; 3];
    for i in 0..=n {
        let w = if i == 0 || i == n {
            1.0
        } else if i % 2 == 1 {
            4.0
        } else {
            2.0
        };
        let t = sol.x[i];
        let f = (-(sol.i1[i] - t * sol.i0[i])).exp() * sol.i0[i];
        m[0] += w * f;
        m[1] += w * t * f;
        m[2] += w * t * t * f;
    }
    for v in &mut m {
        *v *= h / 3.0;
    }
    let mean = m[1] / m[0];
    TwMoments { mean, variance: m[2] / m[0] - mean * mean, mass: m[0] }
}

/// `F` tabulated on `[t_min, t_max]` with step `h`.
pub fn tw_cdf(sol: &HastingsMcLeod, t_min: f64, t_max: f64, h: f64) -> Result<RealGrid> {
    if t_min < sol.config.x_min {
        return Err(Error::InvalidInput(format!("t_min must be at least {}", sol.config.x_min)));
    }
    let grid = RealGrid::tabulate(t_min, t_max, h, |t| sol.cdf(t))?;
    if grid.values.windows(2).any(|w| w[1] < w[0] - 1e-15) {
        return Err(Error::Numerical("computed F is not monotone".into()));
    }
    Ok(grid)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tracywidom::airy::airy;

    fn solution() -> HastingsMcLeod {
        painleve2_hastings_mcleod(PainleveConfig::default()).unwrap()
    }

    #[test]
    fn boundary_behaviour() {
        let s = solution();
        assert!((s.u_at(6.0) + airy(6.0).unwrap()).abs() < 1e-8);
        assert!((s.k - 1.0).abs() < 1e-6, "k = {}", s.k);
        let asym = |x: f64| -(-x / 2.0f64).sqrt() * (1.0 + 1.0 / (8.0 * x * x * x));
        assert!((s.u_at(-8.0) - asym(-8.0)).abs() < 1e-5, "u(-8) = {}", s.u_at(-8.0));
        // rounding near x = 0 is amplified by about e^30 on the way to −10
        assert!((s.u_at(-10.0) - asym(-10.0)).abs() < 1e-2, "u(-10) = {}", s.u_at(-10.0));
    }

    #[test]
    fn value_at_zero() {
        let s = solution();
        assert!((s.u_at(0.0) + 0.3670615).abs() < 1e-6, "u(0) = {}", s.u_at(0.0));
        let half = painleve2_hastings_mcleod(PainleveConfig::default().with_steps(1024)).unwrap();
        assert!((s.u_at(0.0) - half.u_at(0.0)).abs() < 1e-6);
    }

    #[test]
    fn residual_small() {
        let s = solution();
        let r = s.max_residual(-9.0, 7.5);
        assert!(r < 1e-8, "residual {r}");
    }

    #[test]
    fn cdf_shape() {
        let s = solution();
        assert!((s.cdf(5.0) - 1.0).abs() < 1e-6);
        assert!(s.cdf(-5.0) < 1e-3);
        let g = tw_cdf(&s, -8.0, 5.0, 0.01).unwrap();
        assert!(g.values.windows(2).all(|w| w[1] >= w[0]));
    }

    #[test]
    fn moments() {
        let m = tw_moments(&solution());
        assert!((m.mass - 1.0).abs() < 1e-6, "mass {}", m.mass);
        assert!((m.mean + 1.7711).abs() < 1e-3, "mean {}", m.mean);
        assert!((m.variance - 0.8132).abs() < 1e-3, "var {}", m.variance);
    }

    #[test]
    fn step_halving_is_stable() {
        let a = tw_moments(&solution());
        let b = tw_moments(&painleve2_hastings_mcleod(PainleveConfig::default().with_steps(1024)).unwrap());
        assert!((a.mean - b.mean).abs() < 1e-5);
    }
}
