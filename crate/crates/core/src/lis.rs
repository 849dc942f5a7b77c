//! Longest increasing subsequences.
//!
//! Patience sorting gives `is_n(w)`; RSK row insertion gives the shape of
//! `w`, which Greene's theorem identifies with the increasing-subsequence
//! invariants `λ(w)`. [`greene_bruteforce`] computes those invariants
//! directly as an oracle. The exact layer computes `E(n)` from hook lengths
//! and `u_k(n)` from Gessel's Bessel determinant.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::binomial;
use num_traits::{ToPrimitive, Zero};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::series::TruncSeries;
use crate::tableaux::{count_syt, enumerate_partitions, factorial, Partition, StandardTableau};
use crate::Rational;

/// Largest `n` accepted by [`greene_bruteforce`].
pub const GREENE_BRUTEFORCE_CAP: usize = 10;

/// A permutation `a₁ … a_n` of `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn new(word: Vec<u32>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &a in &word {
            if a == 0 || a as usize > n || seen[a as usize] {
                return Err(Error::InvalidInput(format!("{word:?} is not a permutation")));
            }
            seen[a as usize] = true;
        }
        Ok(Permutation(word))
    }

    /// Parses a digit string such as `274163958` (for `n ≤ 9`) or a
    /// comma-separated word.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let word = if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse::<u32>().map_err(|e| Error::InvalidInput(e.to_string())))
                .collect::<Result<Vec<_>>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).ok_or_else(|| Error::InvalidInput(format!("bad digit {c:?}"))))
                .collect::<Result<Vec<_>>>()?
        };
        Self::new(word)
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n as u32).collect())
    }

    pub fn reversed_identity(n: usize) -> Self {
        Permutation((1..=n as u32).rev().collect())
    }

    pub fn word(&self) -> &[u32] {
        &self.0
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (i, &a) in self.0.iter().enumerate() {
            inv[a as usize - 1] = i as u32 + 1;
        }
        Permutation(inv)
    }

    pub fn reversed(&self) -> Self {
        Permutation(self.0.iter().rev().copied().collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Major index of the word: sum of positions `i` with `a_i > a_{i+1}`.
    pub fn major_index(&self) -> u32 {
        self.0
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .map(|(i, _)| i as u32 + 1)
            .sum()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.0.len() > 9 { "," } else { "" };
        let s: Vec<String> = self.0.iter().map(|a| a.to_string()).collect();
        write!(f, "{}", s.join(sep))
    }
}

/// Calls `f` on every permutation of `0..n` (0-based images), in
/// lexicographic order.
pub fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize])) {
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        f(&p);
        // next permutation
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
            return;
        };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
    }
}

/// Every permutation of `S_n` in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    for_each_permutation(n, |p| out.push(Permutation(p.iter().map(|&a| a as u32 + 1).collect())));
    out
}

/// Length of the longest increasing subsequence by patience sorting.
pub fn is_length(w: &Permutation) -> usize {
    lis_len(w.word())
}

fn lis_len(word: &[u32]) -> usize {
    let mut tops: Vec<u32> = Vec::with_capacity(64);
    for &a in word {
        let k = tops.partition_point(|&t| t < a);
        if k == tops.len() {
            tops.push(a);
        } else {
            tops[k] = a;
        }
    }
    tops.len()
}

/// Robinson-Schensted row insertion: `(P, Q)` insertion and recording
/// tableaux of a common shape.
pub fn rsk(w: &Permutation) -> (StandardTableau, StandardTableau) {
    let mut p: Vec<Vec<u32>> = Vec::new();
    let mut q: Vec<Vec<u32>> = Vec::new();
    for (step, &a) in w.word().iter().enumerate() {
        let mut x = a;
        let mut row = 0;
        loop {
            if row == p.len() {
                p.push(vec![x]);
                q.push(vec![step as u32 + 1]);
                break;
            }
            let k = p[row].partition_point(|&t| t < x);
            if k == p[row].len() {
                p[row].push(x);
                q[row].push(step as u32 + 1);
                break;
            }
            std::mem::swap(&mut p[row][k], &mut x);
            row += 1;
        }
    }
    (StandardTableau::from_rows_unchecked(p), StandardTableau::from_rows_unchecked(q))
}

/// Greene shape `λ(w)`, read off the RSK tableaux.
pub fn greene_shape(w: &Permutation) -> Partition {
    rsk(w).0.shape().clone()
}

/// Largest union of `k` increasing subsequences of `w`, by exhaustive
/// dynamic programming over subsets of positions (`n ≤ 10`).
///
/// A set of positions is a union of `k` increasing subsequences iff it can
/// be partitioned into `k` increasing subsets; the minimum number of parts is
/// computed for every subset by recursion over the part containing its
/// lowest position.
pub fn greene_bruteforce(w: &Permutation, k: usize) -> Result<usize> {
    let n = w.len();
    if n > GREENE_BRUTEFORCE_CAP {
        return Err(Error::ResourceCap(format!(
            "brute-force Greene invariants need n ≤ {GREENE_BRUTEFORCE_CAP}, got {n}"
        )));
    }
    let word = w.word();
    let full = 1usize << n;
    let increasing: Vec<bool> = (0..full)
        .map(|mask| {
            let mut last = 0;
            (0..n).filter(|&i| mask >> i & 1 == 1).all(|i| {
                let ok = word[i] > last;
                last = word[i];
                ok
            })
        })
        .collect();
    let mut cover = vec![u8::MAX; full];
    cover[0] = 0;
    for mask in 1..full {
        let low = mask & mask.wrapping_neg();
        let rest = mask ^ low;
        // submasks of `rest`, each joined with the lowest position
        let mut sub = rest;
        let mut best = u8::MAX;
        loop {
            let part = sub | low;
            if increasing[part] {
                best = best.min(cover[mask ^ part].saturating_add(1));
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
        cover[mask] = best;
    }
    Ok((0..full)
        .filter(|&m| cover[m] as usize <= k)
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0))
}

/// Greene shape from the brute-force oracle.
pub fn greene_shape_bruteforce(w: &Permutation) -> Result<Partition> {
    let mut parts = Vec::new();
    let mut prev = 0;
    for k in 1..=w.len() {
        let s = greene_bruteforce(w, k)?;
        parts.push((s - prev) as u32);
        prev = s;
    }
    Partition::new(parts)
}

/// `E(n) = (1/n!) Σ_{λ⊢n} λ₁ (f^λ)²`, exactly.
pub fn expected_is_exact(n: u32) -> Rational {
    if n == 0 {
        return Rational::zero();
    }
    let total: BigUint = enumerate_partitions(n, None)
        .iter()
        .map(|lam| {
            let f = count_syt(lam);
            &f * &f * lam.part(0)
        })
        .sum();
    Rational::new(BigInt::from(total), BigInt::from(factorial(n)))
}

/// Average of `is_n` over all of `S_n`.
pub fn expected_is_bruteforce(n: usize) -> Rational {
    if n == 0 {
        return Rational::zero();
    }
    let mut total = 0u64;
    let mut count = 0u64;
    for_each_permutation(n, |p| {
        let w: Vec<u32> = p.iter().map(|&a| a as u32 + 1).collect();
        total += lis_len(&w) as u64;
        count += 1;
    });
    Rational::new(BigInt::from(total), BigInt::from(count))
}

/// `#{w ∈ S_n : is_n(w) ≤ k}` for every `k`, by exhaustive enumeration.
/// Entry `k` of the result is `u_k(n)` for `k = 0..=n`.
pub fn u_counts_bruteforce(n: usize) -> Vec<u64> {
    let mut hist = vec![0u64; n + 1];
    for_each_permutation(n, |p| {
        let w: Vec<u32> = p.iter().map(|&a| a as u32 + 1).collect();
        hist[lis_len(&w)] += 1;
    });
    let mut acc = 0;
    hist.iter()
        .map(|h| {
            acc += h;
            acc
        })
        .collect()
}

/// Gessel's determinant and the counts it encodes.
#[derive(Clone, Debug)]
pub struct GesselSeries {
    pub k: usize,
    /// `U_k(x)` truncated at `x^N`.
    pub series: TruncSeries,
    /// `u_k(n)` for `n = 0..=N/2`.
    pub counts: Vec<BigInt>,
}

/// `B_i(x) = Σ x^{2n+i} / (n! (n+i)!)` truncated at `x^order`.
pub fn bessel_series(i: usize, order: usize) -> TruncSeries {
    let mut s = TruncSeries::zero(order);
    let mut n = 0;
    while 2 * n + i <= order {
        let den = factorial(n as u32) * factorial((n + i) as u32);
        s.set(2 * n + i, Rational::new(BigInt::from(1), BigInt::from(den)));
        n += 1;
    }
    s
}

/// `U_k(x) = det(B_{|i-j|}(x))_{i,j=1..k}` truncated at even order `N`,
/// with `u_k(n) = n!² [x^{2n}] U_k(x)` extracted and checked integral.
pub fn gessel_series(k: usize, order: usize) -> Result<GesselSeries> {
    if k == 0 {
        return Err(Error::InvalidInput("k must be at least 1".into()));
    }
    if order % 2 != 0 {
        return Err(Error::InvalidInput("truncation order must be even".into()));
    }
    let b: Vec<TruncSeries> = (0..k).map(|i| bessel_series(i, order)).collect();
    let matrix: Vec<Vec<TruncSeries>> = (0..k)
        .map(|i| (0..k).map(|j| b[i.abs_diff(j)].clone()).collect())
        .collect();
    let series = TruncSeries::determinant(matrix)?;
    let counts = (0..=order / 2)
        .map(|n| {
            let f = factorial(n as u32);
            let v = series.coeff(2 * n) * Rational::from_integer(BigInt::from(&f * &f));
            if !v.is_integer() || v < Rational::zero() {
                return Err(Error::Consistency(format!(
                    "u_{k}({n}) extracted as non-integer {v}"
                )));
            }
            Ok(v.to_integer())
        })
        .collect::<Result<Vec<_>>>()?;
    for n in 0..=order / 2 {
        if !series.coeff(2 * n + 1).is_zero() {
            return Err(Error::Consistency("odd coefficient in U_k".into()));
        }
    }
    Ok(GesselSeries { k, series, counts })
}

/// Which form of the `u₃` closed formula to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum U3Formula {
    /// `Σ_j C(2j,j) C(n+1,j+1) C(n+2,j+1) / ((n+1)²(n+2))`, validated against
    /// brute force and the determinant.
    Validated,
    /// The same sum with final factor `C(n+2, j+2)`, kept for comparison; it
    /// does not give integers (it evaluates to 4/3 at n = 2).
    FinalFactorShifted,
}

/// Evaluates the chosen `u₃(n)` formula as an exact rational.
pub fn u3_formula(n: u64, variant: U3Formula) -> Rational {
    let nb = BigInt::from(n);
    let mut sum = BigInt::zero();
    for j in 0..=n {
        let jb = BigInt::from(j);
        let last_lower = match variant {
            U3Formula::Validated => &jb + 1,
            U3Formula::FinalFactorShifted => &jb + 2,
        };
        sum += binomial(BigInt::from(2 * j), jb.clone())
            * binomial(&nb + 1, &jb + 1)
            * binomial(&nb + 2, last_lower);
    }
    let den = (&nb + 1) * (&nb + 1) * (&nb + 2);
    Rational::new(sum, den)
}

/// `u₃(n)` from the validated closed form.
pub fn u3_closed_form(n: u64) -> Result<BigInt> {
    let v = u3_formula(n, U3Formula::Validated);
    if !v.is_integer() {
        return Err(Error::Consistency(format!("u3({n}) closed form gave {v}")));
    }
    Ok(v.to_integer())
}

/// `χ_n(w) = (is_n(w) − 2√n) / n^{1/6}`.
pub fn chi_scale(n: usize, is: usize) -> f64 {
    let nf = n as f64;
    (is as f64 - 2.0 * nf.sqrt()) / nf.powf(1.0 / 6.0)
}

/// Generator for sample `index` of a run seeded with `seed`: one ChaCha
/// stream per sample, so parallel and serial sampling agree.
pub fn sample_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Uniform random permutation of `1..=n` for sample `index`.
pub fn random_permutation(n: usize, seed: u64, index: u64) -> Permutation {
    let mut w: Vec<u32> = (1..=n as u32).collect();
    w.shuffle(&mut sample_rng(seed, index));
    Permutation(w)
}

/// `samples` values of `χ_n` over uniform random permutations. The output
/// depends only on `(n, samples, seed)`.
pub fn sample_chi_n(n: usize, samples: usize, seed: u64) -> Vec<f64> {
    (0..samples as u64)
        .into_par_iter()
        .map(|i| chi_scale(n, is_length(&random_permutation(n, seed, i))))
        .collect()
}

/// `χ_n` over every permutation of `S_n` (in lexicographic order).
pub fn exhaustive_chi_n(n: usize) -> Vec<f64> {
    let mut out = Vec::new();
    for_each_permutation(n, |p| {
        let w: Vec<u32> = p.iter().map(|&a| a as u32 + 1).collect();
        out.push(chi_scale(n, lis_len(&w)));
    });
    out
}

/// Second Greene row `λ₂` of random permutations, scaled like `χ_n`.
pub fn sample_second_row(n: usize, samples: usize, seed: u64) -> Vec<f64> {
    (0..samples as u64)
        .into_par_iter()
        .map(|i| {
            let shape = greene_shape(&random_permutation(n, seed, i));
            chi_scale(n, shape.part(1) as usize)
        })
        .collect()
}

pub(crate) fn rational_to_f64(r: &Rational) -> f64 {
    r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::q_factorial;
    use crate::intpoly::QPolynomial;

    fn w(s: &str) -> Permutation {
        Permutation::parse(s).unwrap()
    }

    fn catalan(n: u64) -> BigInt {
        binomial(BigInt::from(2 * n), BigInt::from(n)) / BigInt::from(n + 1)
    }

    #[test]
    fn is_examples() {
        assert_eq!(is_length(&w("274163958")), 4);
        assert_eq!(is_length(&Permutation::identity(7)), 7);
        assert_eq!(is_length(&Permutation::reversed_identity(7)), 1);
        assert_eq!(is_length(&Permutation::identity(0)), 0);
    }

    #[test]
    fn permutation_validation() {
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(Permutation::parse("3,1,2").is_ok());
    }

    #[test]
    fn rsk_examples() {
        let (p, q) = rsk(&Permutation::identity(3));
        assert_eq!(p.rows(), &[vec![1, 2, 3]]);
        assert_eq!(q.rows(), &[vec![1, 2, 3]]);
        let (p, q) = rsk(&w("274163958"));
        assert_eq!(p.shape(), q.shape());
        assert_eq!(p.shape().part(0), 4);
        assert!(StandardTableau::new(p.rows().to_vec()).is_ok());
        assert!(StandardTableau::new(q.rows().to_vec()).is_ok());
    }

    #[test]
    fn rsk_pair_counts_on_s4() {
        use std::collections::HashMap;
        let mut pairs: HashMap<Partition, std::collections::HashSet<(Vec<Vec<u32>>, Vec<Vec<u32>>)>> =
            HashMap::new();
        for perm in all_permutations(4) {
            let (p, q) = rsk(&perm);
            pairs.entry(p.shape().clone()).or_default().insert((p.rows().to_vec(), q.rows().to_vec()));
        }
        for lam in enumerate_partitions(4, None) {
            let f = count_syt(&lam);
            assert_eq!(BigUint::from(pairs[&lam].len()), &f * &f, "{lam}");
        }
    }

    #[test]
    fn greene_examples() {
        let perm = w("247951368");
        assert_eq!(greene_shape(&perm), "5,3,1".parse().unwrap());
        assert_eq!(greene_bruteforce(&perm, 1).unwrap(), 5);
        assert_eq!(greene_bruteforce(&perm, 2).unwrap(), 8);
        assert_eq!(greene_bruteforce(&perm, 3).unwrap(), 9);
        assert_eq!(greene_bruteforce(&perm, 12).unwrap(), 9);
        assert_eq!(greene_shape(&Permutation::identity(5)), "5".parse().unwrap());
        assert!(greene_bruteforce(&Permutation::identity(11), 1).unwrap_err().is_resource_cap());
    }

    #[test]
    fn greene_theorem_on_s5_and_s6() {
        for n in 1..=6 {
            for perm in all_permutations(n) {
                assert_eq!(greene_shape(&perm), greene_shape_bruteforce(&perm).unwrap(), "{perm}");
                assert_eq!(greene_bruteforce(&perm, 1).unwrap(), is_length(&perm));
            }
        }
    }

    #[test]
    fn recording_tableau_descents_match_word() {
        for n in 1..=6 {
            for perm in all_permutations(n) {
                assert_eq!(rsk(&perm).1.major_index(), perm.major_index());
            }
        }
    }

    #[test]
    fn maj_rsk_bridge() {
        for n in 1..=7usize {
            let mut coeffs = vec![BigInt::zero(); n * (n - 1) / 2 + 1];
            for perm in all_permutations(n) {
                coeffs[rsk(&perm).1.major_index() as usize] += 1;
            }
            assert_eq!(QPolynomial::from_coeffs(coeffs), q_factorial(n as u32));
        }
    }

    #[test]
    fn expected_value_examples() {
        assert_eq!(expected_is_exact(1), Rational::from_integer(1.into()));
        assert_eq!(expected_is_exact(3), Rational::from_integer(2.into()));
        for n in 1..=7 {
            assert_eq!(expected_is_exact(n as u32), expected_is_bruteforce(n), "n = {n}");
        }
    }

    #[test]
    fn expected_value_bounds() {
        for n in 1..=40u32 {
            let e = rational_to_f64(&expected_is_exact(n));
            let r = (n as f64).sqrt();
            assert!(0.5 * r <= e && e <= std::f64::consts::E * r, "n = {n}");
        }
    }

    #[test]
    fn gessel_small_k() {
        let g1 = gessel_series(1, 20).unwrap();
        assert!(g1.counts.iter().all(|c| *c == BigInt::from(1)));
        let g2 = gessel_series(2, 20).unwrap();
        for n in 0..=10u64 {
            assert_eq!(g2.counts[n as usize], catalan(n));
        }
        let g3 = gessel_series(3, 14).unwrap();
        for n in 0..=7usize {
            assert_eq!(g3.counts[n], BigInt::from(u_counts_bruteforce(n)[3.min(n)]), "n = {n}");
        }
        assert!(gessel_series(2, 7).is_err());
    }

    #[test]
    fn u3_values() {
        let expected = [1, 1, 2, 6, 23, 103, 513, 2761, 15767];
        for (n, &e) in expected.iter().enumerate() {
            assert_eq!(u3_closed_form(n as u64).unwrap(), BigInt::from(e), "n = {n}");
        }
        assert_eq!(
            u3_formula(2, U3Formula::FinalFactorShifted),
            Rational::new(4.into(), 3.into())
        );
    }

    #[test]
    fn u_counts_saturate_at_n() {
        for n in 1..=6usize {
            let g_n = gessel_series(n, 2 * n).unwrap();
            let g_more = gessel_series(n + 2, 2 * n).unwrap();
            assert_eq!(g_n.counts[n], g_more.counts[n]);
            assert_eq!(g_n.counts[n], BigInt::from(factorial(n as u32)));
        }
    }

    #[test]
    fn sampling_is_deterministic() {
        let a = sample_chi_n(50, 20, 42);
        let b = sample_chi_n(50, 20, 42);
        assert_eq!(a, b);
        assert_ne!(a, sample_chi_n(50, 20, 43));
    }

    #[test]
    fn exhaustive_mean_matches_exact() {
        let vals = exhaustive_chi_n(4);
        assert_eq!(vals.len(), 24);
        let mean = vals.iter().sum::<f64>() / 24.0;
        let exact = (rational_to_f64(&expected_is_exact(4)) - 4.0) / 4f64.powf(1.0 / 6.0);
        assert!((mean - exact).abs() < 1e-12);
    }
}
