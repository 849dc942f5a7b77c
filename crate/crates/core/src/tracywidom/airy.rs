//! The Airy function `Ai` and its derivative.
//!
//! On `[−10, 8]` the Maclaurin series is summed in double-double arithmetic,
//! which absorbs the cancellation between its two halves. Outside that
//! range the asymptotic expansions are summed up to their smallest term:
//! `Ai(x) ∼ e^{−ζ} / (2√π x^{1/4}) Σ (−1)^k u_k ζ^{−k}` with
//! `ζ = ⅔ x^{3/2}` for large positive `x`, and the oscillatory form for
//! large negative `x`.

use std::f64::consts::PI;

use super::dd::DD;
use crate::error::{Error, Result};

/// Largest `|x|` accepted.
pub const AIRY_DOMAIN: f64 = 40.0;
/// Above this the decaying asymptotic series is used.
pub const SERIES_UPPER: f64 = 8.0;
/// Below this the oscillatory asymptotic series is used.
pub const SERIES_LOWER: f64 = -10.0;

const AI0: DD = DD::new(0.3550280538878172, 2.05233632436212e-17);
// −Ai'(0)
const AIP0: DD = DD::new(0.2588194037928068, -2.522243111610832e-17);

/// `(Ai(x), Ai'(x))`.
pub fn airy_pair(x: f64) -> Result<(f64, f64)> {
    if !x.is_finite() || x.abs() > AIRY_DOMAIN {
        return Err(Error::Numerical(format!("Airy argument {x} outside [−{AIRY_DOMAIN}, {AIRY_DOMAIN}]")));
    }
    Ok(if x > SERIES_UPPER {
        asymptotic_positive(x)
    } else if x < SERIES_LOWER {
        asymptotic_negative(-x)
    } else {
        maclaurin(x)
    })
}

pub fn airy(x: f64) -> Result<f64> {
    airy_pair(x).map(|p| p.0)
}

pub fn airy_prime(x: f64) -> Result<f64> {
    airy_pair(x).map(|p| p.1)
}

/// Leading-order decay `e^{−⅔x^{3/2}} / (2√π x^{1/4})`.
pub fn airy_leading_asymptotic(x: f64) -> f64 {
    (-2.0 / 3.0 * x.powf(1.5)).exp() / (2.0 * PI.sqrt() * x.powf(0.25))
}

fn maclaurin(x: f64) -> (f64, f64) {
    let xd = DD::from_f64(x);
    let x3 = xd * xd * xd;
    // f = Σ t_k, g = Σ s_k with Ai = Ai(0) f + Ai'(0) g
    let mut t = DD::from_f64(1.0);
    let mut s = xd;
    let mut f = t;
    let mut g = s;
    // derivatives: f' = Σ p_k (k ≥ 1), g' = Σ q_k
    let mut p = xd * xd * DD::from_f64(0.5);
    let mut q = DD::from_f64(1.0);
    let mut fp = p;
    let mut gp = q;
    for k in 1..400 {
        let kf = k as f64;
        t = (t * x3).div_f64((3.0 * kf - 1.0) * (3.0 * kf));
        s = (s * x3).div_f64((3.0 * kf) * (3.0 * kf + 1.0));
        q = (q * x3).div_f64((3.0 * kf - 2.0) * (3.0 * kf));
        f = f + t;
        g = g + s;
        gp = gp + q;
        if k >= 2 {
            p = (p * x3).div_f64((3.0 * kf - 1.0) * (3.0 * kf - 3.0));
            fp = fp + p;
        }
        let scale = f.hi.abs().max(g.hi.abs()).max(1.0);
        if t.hi.abs().max(s.hi.abs()).max(p.hi.abs()).max(q.hi.abs()) < 1e-34 * scale && k > 3 {
            break;
        }
    }
    let ai = AI0 * f - AIP0 * g;
    let aip = AI0 * fp - AIP0 * gp;
    (ai.to_f64(), aip.to_f64())
}

/// Coefficients `u_k` of the asymptotic expansions.
fn u_coeffs(count: usize) -> Vec<f64> {
    let mut u = vec![1.0];
    for k in 1..count {
        let kf = k as f64;
        let prev = u[k - 1];
        u.push(prev * (6.0 * kf - 5.0) * (6.0 * kf - 3.0) * (6.0 * kf - 1.0) / (216.0 * kf * (2.0 * kf - 1.0)));
    }
    u
}

fn v_coeff(u: &[f64], k: usize) -> f64 {
    if k == 0 {
        1.0
    } else {
        let kf = k as f64;
        -(6.0 * kf + 1.0) / (6.0 * kf - 1.0) * u[k]
    }
}

/// Sums `Σ_{k∈ks} sign_k c_k / ζ^k`, stopping before terms start growing.
fn truncated_sum(coef: impl Fn(usize) -> f64, zeta: f64, ks: impl Iterator<Item = usize>, alternate: bool) -> f64 {
    let mut sum = 0.0;
    let mut last = f64::INFINITY;
    for (idx, k) in ks.enumerate() {
        let term = coef(k) / zeta.powi(k as i32);
        if term.abs() > last {
            break;
        }
        last = term.abs();
        let sign = if alternate && idx % 2 == 1 { -1.0 } else { 1.0 };
        sum += sign * term;
        if term.abs() < 1e-18 * sum.abs() {
            break;
        }
    }
    sum
}

fn asymptotic_positive(x: f64) -> (f64, f64) {
    let zeta = 2.0 / 3.0 * x.powf(1.5);
    let u = u_coeffs(60);
    let pre = (-zeta).exp() / (2.0 * PI.sqrt());
    let su = truncated_sum(|k| u[k], zeta, 0..60, true);
    let sv = truncated_sum(|k| v_coeff(&u, k), zeta, 0..59, true);
    (pre * su / x.powf(0.25), -pre * x.powf(0.25) * sv)
}

fn asymptotic_negative(z: f64) -> (f64, f64) {
    let zeta = 2.0 / 3.0 * z.powf(1.5);
    let u = u_coeffs(80);
    let phase = zeta + PI / 4.0;
    let (s, c) = phase.sin_cos();
    let even_u = truncated_sum(|k| u[k], zeta, (0..78).step_by(2), true);
    let odd_u = truncated_sum(|k| u[k], zeta, (1..78).step_by(2), true);
    let even_v = truncated_sum(|k| v_coeff(&u, k), zeta, (0..78).step_by(2), true);
    let odd_v = truncated_sum(|k| v_coeff(&u, k), zeta, (1..78).step_by(2), true);
    let ai = (s * even_u - c * odd_u) / (PI.sqrt() * z.powf(0.25));
    let aip = -z.powf(0.25) / PI.sqrt() * (c * even_v + s * odd_v);
    (ai, aip)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn values_against_reference() {
        let table = [
            (0.0, 0.355028053887817239260063186004183176398),
            (-10.0, 0.040241238486443190689),
            (-5.0, 0.35076100902411431979),
            (-2.0, 0.22740742820168557599),
            (-1.0, 0.5355608832923521188),
            (0.5, 0.23169360648083348977),
            (1.0, 0.13529241631288141552),
            (2.0, 0.034924130423274379135),
            (4.0, 0.00095156385120480187362),
            (6.0, 9.9476943602528895702e-6),
            (8.0, 4.6922076160992316256e-8),
        ];
        for (x, v) in table {
            assert!(rel(airy(x).unwrap(), v) < 1e-10, "Ai({x}) = {} vs {v}", airy(x).unwrap());
        }
        for (x, v) in [(10.0, 1.1047532552898685934e-10), (12.0, 1.393184688875360839e-13), (20.0, 1.6916728686705403136e-27)] {
            assert!(rel(airy(x).unwrap(), v) < 1e-10, "Ai({x})");
        }
        for (x, v) in [(-20.0, -0.17640612707798468959), (-40.0, -0.045933923437957249632)] {
            assert!((airy(x).unwrap() - v).abs() < 1e-8, "Ai({x}) = {}", airy(x).unwrap());
        }
    }

    #[test]
    fn derivative_against_reference() {
        let table = [
            (0.0, -0.2588194037928067984051835601892039634791),
            (-10.0, 0.9962650441327900559),
            (-5.0, 0.32719281855444313679),
            (8.0, -1.3414392979067865743e-7),
            (10.0, -3.5206336767389236366e-10),
        ];
        for (x, v) in table {
            assert!(rel(airy_prime(x).unwrap(), v) < 1e-9, "Ai'({x}) = {} vs {v}", airy_prime(x).unwrap());
        }
    }

    #[test]
    fn branches_agree_at_switch_points() {
        for x in [SERIES_UPPER, SERIES_LOWER] {
            let a = maclaurin(x);
            let b = if x > 0.0 { asymptotic_positive(x) } else { asymptotic_negative(-x) };
            assert!(rel(a.0, b.0) < 1e-10, "x = {x}: {a:?} vs {b:?}");
            assert!(rel(a.1, b.1) < 1e-9, "x = {x}: {a:?} vs {b:?}");
        }
    }

    #[test]
    fn leading_asymptotic_ratio() {
        let r = airy(10.0).unwrap() / airy_leading_asymptotic(10.0);
        assert!((r - 1.0).abs() < 1e-2);
    }

    #[test]
    fn satisfies_airy_equation() {
        let h = 2e-3;
        let mut x = -9.5;
        while x < 7.5 {
            let f = |t: f64| airy(t).unwrap();
            let d2 = (-f(x + 2.0 * h) + 16.0 * f(x + h) - 30.0 * f(x) + 16.0 * f(x - h) - f(x - 2.0 * h)) / (12.0 * h * h);
            assert!((d2 - x * f(x)).abs() < 1e-8, "x = {x}");
            x += 0.37;
        }
    }

    #[test]
    fn domain_checked() {
        assert!(airy(41.0).is_err());
        assert!(airy(f64::NAN).is_err());
    }
}
