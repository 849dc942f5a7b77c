//! Truncated power series over the rationals.

use std::ops::{Add, Mul, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::Rational;

/// Power series `Σ c_i x^i` known modulo `x^{order+1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncSeries {
    coeffs: Vec<Rational>,
}

impl TruncSeries {
    pub fn zero(order: usize) -> Self {
        TruncSeries { coeffs: vec![Rational::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = Rational::one();
        s
    }

    pub fn from_coeffs(order: usize, coeffs: &[Rational]) -> Self {
        let mut s = Self::zero(order);
        for (c, v) in s.coeffs.iter_mut().zip(coeffs) {
            *c = v.clone();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn set(&mut self, i: usize, c: Rational) {
        self.coeffs[i] = c;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        TruncSeries { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Multiplicative inverse; the constant term must be nonzero.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::Numerical("series with zero constant term is not invertible".into()));
        }
        let n = self.coeffs.len();
        let inv0 = c0.recip();
        let mut out = vec![Rational::zero(); n];
        out[0] = inv0.clone();
        for k in 1..n {
            let mut acc = Rational::zero();
            for i in 1..=k {
                if !self.coeffs[i].is_zero() {
                    acc += &self.coeffs[i] * &out[k - i];
                }
            }
            out[k] = -acc * &inv0;
        }
        Ok(TruncSeries { coeffs: out })
    }

    /// Determinant of a square matrix of series by Gaussian elimination.
    /// Pivots are chosen among entries with nonzero constant term, so the
    /// computation stays within the power-series ring.
    pub fn determinant(mut m: Vec<Vec<TruncSeries>>) -> Result<TruncSeries> {
        let k = m.len();
        if k == 0 {
            return Err(Error::InvalidInput("empty matrix".into()));
        }
        let order = m[0][0].order();
        let mut det = TruncSeries::one(order);
        for col in 0..k {
            let Some(p) = (col..k).find(|&r| !m[r][col].coeffs[0].is_zero()) else {
                return Err(Error::Numerical("no invertible pivot in series determinant".into()));
            };
            if p != col {
                m.swap(p, col);
                det = det.scale(&-Rational::one());
            }
            let inv = m[col][col].inverse()?;
            det = &det * &m[col][col];
            for r in col + 1..k {
                if m[r][col].is_zero() {
                    continue;
                }
                let factor = &m[r][col] * &inv;
                for c in col..k {
                    let t = &factor * &m[col][c];
                    m[r][c] = &m[r][c] - &t;
                }
            }
        }
        Ok(det)
    }
}

impl Add for &TruncSeries {
    type Output = TruncSeries;
    fn add(self, rhs: &TruncSeries) -> TruncSeries {
        let n = self.coeffs.len().min(rhs.coeffs.len());
        TruncSeries { coeffs: (0..n).map(|i| &self.coeffs[i] + &rhs.coeffs[i]).collect() }
    }
}

impl Sub for &TruncSeries {
    type Output = TruncSeries;
    fn sub(self, rhs: &TruncSeries) -> TruncSeries {
        let n = self.coeffs.len().min(rhs.coeffs.len());
        TruncSeries { coeffs: (0..n).map(|i| &self.coeffs[i] - &rhs.coeffs[i]).collect() }
    }
}

impl Mul for &TruncSeries {
    type Output = TruncSeries;
    fn mul(self, rhs: &TruncSeries) -> TruncSeries {
        let n = self.coeffs.len().min(rhs.coeffs.len());
        let mut out = vec![Rational::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate().take(n) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(n - i) {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        TruncSeries { coeffs: out }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    #[test]
    fn inverse_of_one_minus_x() {
        let s = TruncSeries::from_coeffs(5, &[rat(1), rat(-1)]);
        let inv = s.inverse().unwrap();
        assert!(inv.coeffs().iter().all(|c| *c == rat(1)));
        assert_eq!(&s * &inv, TruncSeries::one(5));
    }

    #[test]
    fn determinant_two_by_two() {
        let a = TruncSeries::from_coeffs(4, &[rat(1), rat(1)]);
        let b = TruncSeries::from_coeffs(4, &[rat(0), rat(2)]);
        let d = TruncSeries::determinant(vec![vec![a.clone(), b.clone()], vec![b.clone(), a.clone()]])
            .unwrap();
        let expected = &(&a * &a) - &(&b * &b);
        assert_eq!(d, expected);
    }

    #[test]
    fn determinant_needs_row_swap() {
        let z = TruncSeries::from_coeffs(3, &[rat(0), rat(1)]);
        let o = TruncSeries::one(3);
        let d = TruncSeries::determinant(vec![vec![z.clone(), o.clone()], vec![o.clone(), z.clone()]])
            .unwrap();
        let expected = &(&z * &z) - &o;
        assert_eq!(d, expected);
    }
}
