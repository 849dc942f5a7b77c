//! GUE matrices with density `∝ e^{−tr M²}` and their spectra.
//!
//! Eigenvalues come from a unitary Householder reduction to real symmetric
//! tridiagonal form followed by implicit-shift QL iteration.

use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::lis::sample_rng;

pub const GUE_MAX_N: usize = 500;
const QL_ITERATIONS: usize = 60;

/// Dense hermitian matrix in row-major order.
#[derive(Clone, Debug)]
pub struct HermitianMatrix {
    n: usize,
    a: Vec<Complex64>,
}

impl HermitianMatrix {
    /// Diagonal entries `N(0, ½)`; real and imaginary parts of the upper
    /// triangle `N(0, ¼)`.
    pub fn sample_gue<R: Rng>(n: usize, rng: &mut R) -> Self {
        let mut a = vec![Complex64::new(0.0, 0.0); n * n];
        for i in 0..n {
            let d: f64 = rng.sample(StandardNormal);
            a[i * n + i] = Complex64::new(d * std::f64::consts::FRAC_1_SQRT_2, 0.0);
            for j in i + 1..n {
                let re: f64 = rng.sample(StandardNormal);
                let im: f64 = rng.sample(StandardNormal);
                let z = Complex64::new(0.5 * re, 0.5 * im);
                a[i * n + j] = z;
                a[j * n + i] = z.conj();
            }
        }
        HermitianMatrix { n, a }
    }

    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidInput("matrix is not square".into()));
        }
        let a: Vec<Complex64> = rows.iter().flatten().copied().collect();
        for i in 0..n {
            for j in 0..n {
                if (a[i * n + j] - a[j * n + i].conj()).norm() > 1e-12 {
                    return Err(Error::InvalidInput("matrix is not hermitian".into()));
                }
            }
        }
        Ok(HermitianMatrix { n, a })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.a[i * self.n + i].re).sum()
    }

    /// Eigenvalues in decreasing order.
    pub fn eigenvalues(&self) -> Result<Vec<f64>> {
        let (mut d, mut e) = self.tridiagonalize();
        tridiagonal_ql(&mut d, &mut e)?;
        d.sort_by(|a, b| b.total_cmp(a));
        Ok(d)
    }

    /// Diagonal and subdiagonal of a real tridiagonal matrix unitarily
    /// similar to `self`.
    pub fn tridiagonalize(&self) -> (Vec<f64>, Vec<f64>) {
        let n = self.n;
        let mut a = self.a.clone();
        let mut off = vec![0.0; n.saturating_sub(1)];
        let mut v = vec![Complex64::new(0.0, 0.0); n];
        let mut p = vec![Complex64::new(0.0, 0.0); n];
        for k in 0..n.saturating_sub(1) {
            let m = k + 1;
            let norm = (m..n).map(|i| a[i * n + k].norm_sqr()).sum::<f64>().sqrt();
            off[k] = norm;
            if n - m == 1 || norm == 0.0 {
                continue;
            }
            let x0 = a[m * n + k];
            let phase = if x0.norm() > 0.0 { x0 / x0.norm() } else { Complex64::new(1.0, 0.0) };
            let alpha = -phase * norm;
            for i in m..n {
                v[i] = a[i * n + k];
            }
            v[m] -= alpha;
            let vn = (m..n).map(|i| v[i].norm_sqr()).sum::<f64>().sqrt();
            if vn == 0.0 {
                continue;
            }
            for x in &mut v[m..n] {
                *x /= vn;
            }
            for i in m..n {
                let row = &a[i * n..(i + 1) * n];
                p[i] = (m..n).map(|j| row[j] * v[j]).sum();
            }
            let kk: f64 = (m..n).map(|i| (v[i].conj() * p[i]).re).sum();
            for i in m..n {
                p[i] -= v[i] * kk;
            }
            for i in m..n {
                let (vi, wi) = (v[i], p[i]);
                let row = &mut a[i * n..(i + 1) * n];
                for j in m..n {
                    row[j] -= 2.0 * (vi * p[j].conj() + wi * v[j].conj());
                }
            }
            // column k now reads (…, a_kk, alpha, 0, …)
            for i in m + 1..n {
                a[i * n + k] = Complex64::new(0.0, 0.0);
                a[k * n + i] = Complex64::new(0.0, 0.0);
            }
            a[m * n + k] = alpha;
            a[k * n + m] = alpha.conj();
        }
        let d = (0..n).map(|i| a[i * n + i].re).collect();
        (d, off)
    }
}

/// Implicit-shift QL on a symmetric tridiagonal matrix with diagonal `d`
/// and subdiagonal `e`; eigenvalues are left in `d`.
pub fn tridiagonal_ql(d: &mut [f64], e: &mut [f64]) -> Result<()> {
    let n = d.len();
    if n <= 1 {
        return Ok(());
    }
    let mut e: Vec<f64> = e.iter().copied().chain(std::iter::once(0.0)).collect();
    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > QL_ITERATIONS {
                return Err(Error::Numerical("tridiagonal QL did not converge".into()));
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut i = m;
            let mut underflow = false;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if underflow {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    Ok(())
}

/// Eigenvalues `α₁ ≥ ⋯ ≥ α_n` of one GUE draw.
pub fn gue_sample(n: usize, seed: u64) -> Result<Vec<f64>> {
    gue_sample_indexed(n, seed, 0)
}

/// Draw number `index` of the run seeded by `seed`.
pub fn gue_sample_indexed(n: usize, seed: u64, index: u64) -> Result<Vec<f64>> {
    if n == 0 || n > GUE_MAX_N {
        return Err(Error::InvalidInput(format!("GUE size must be in 1..={GUE_MAX_N}")));
    }
    HermitianMatrix::sample_gue(n, &mut sample_rng(seed, index)).eigenvalues()
}

/// `(α − √(2n))·√2·n^{1/6}`.
pub fn gue_scaled_eigenvalue(n: usize, alpha: f64) -> f64 {
    let nf = n as f64;
    (alpha - (2.0 * nf).sqrt()) * std::f64::consts::SQRT_2 * nf.powf(1.0 / 6.0)
}

/// Scaled `k`-th largest eigenvalue (`k ≥ 1`) of `samples` independent draws.
pub fn gue_scaled_samples(n: usize, samples: usize, seed: u64, k: usize) -> Result<Vec<f64>> {
    if k == 0 || k > n {
        return Err(Error::InvalidInput(format!("eigenvalue index {k} out of range for n = {n}")));
    }
    (0..samples as u64)
        .into_par_iter()
        .map(|i| gue_sample_indexed(n, seed, i).map(|ev| gue_scaled_eigenvalue(n, ev[k - 1])))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn two_by_two_exact() {
        // [[1, i], [−i, 1]] has eigenvalues 2 and 0
        let m = HermitianMatrix::from_rows(&[vec![c(1.0, 0.0), c(0.0, 1.0)], vec![c(0.0, -1.0), c(1.0, 0.0)]]).unwrap();
        let ev = m.eigenvalues().unwrap();
        assert!((ev[0] - 2.0).abs() < 1e-14 && ev[1].abs() < 1e-14);
    }

    #[test]
    fn characteristic_polynomial_vanishes_3x3() {
        let rows = vec![
            vec![c(2.0, 0.0), c(1.0, 1.0), c(0.0, -2.0)],
            vec![c(1.0, -1.0), c(-1.0, 0.0), c(0.5, 0.5)],
            vec![c(0.0, 2.0), c(0.5, -0.5), c(3.0, 0.0)],
        ];
        let m = HermitianMatrix::from_rows(&rows).unwrap();
        for lam in m.eigenvalues().unwrap() {
            let b: Vec<Vec<Complex64>> = (0..3)
                .map(|i| (0..3).map(|j| rows[i][j] - if i == j { c(lam, 0.0) } else { c(0.0, 0.0) }).collect())
                .collect();
            let det = b[0][0] * (b[1][1] * b[2][2] - b[1][2] * b[2][1]) - b[0][1] * (b[1][0] * b[2][2] - b[1][2] * b[2][0])
                + b[0][2] * (b[1][0] * b[2][1] - b[1][1] * b[2][0]);
            assert!(det.norm() < 1e-10, "det at {lam}: {det}");
        }
    }

    #[test]
    fn trace_and_frobenius_preserved() {
        let mut rng = sample_rng(11, 0);
        let m = HermitianMatrix::sample_gue(60, &mut rng);
        let ev = m.eigenvalues().unwrap();
        let sum: f64 = ev.iter().sum();
        assert!((sum - m.trace()).abs() <= 1e-10 * m.trace().abs().max(1.0));
        let frob: f64 = m.a.iter().map(|z| z.norm_sqr()).sum();
        let sq: f64 = ev.iter().map(|x| x * x).sum();
        assert!((frob - sq).abs() < 1e-9 * frob);
        assert!(ev.windows(2).all(|w| w[0] >= w[1]));
    }

    #[test]
    fn one_by_one_variance() {
        let xs: Vec<f64> = (0..100_000u64).map(|i| gue_sample_indexed(1, 5, i).unwrap()[0]).collect();
        let mean = xs.iter().sum::<f64>() / xs.len() as f64;
        let var = xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (xs.len() - 1) as f64;
        assert!((var - 0.5).abs() < 0.01, "variance {var}");
    }

    #[test]
    fn deterministic_per_seed() {
        assert_eq!(gue_sample(20, 9).unwrap(), gue_sample(20, 9).unwrap());
        assert_ne!(gue_sample(20, 9).unwrap(), gue_sample(20, 10).unwrap());
        let a = gue_scaled_samples(10, 16, 4, 1).unwrap();
        let b: Vec<f64> = (0..16).map(|i| gue_scaled_eigenvalue(10, gue_sample_indexed(10, 4, i).unwrap()[0])).collect();
        assert_eq!(a, b);
    }

    #[test]
    fn size_checked() {
        assert!(gue_sample(0, 1).is_err());
        assert!(gue_sample(GUE_MAX_N + 1, 1).is_err());
    }
}
