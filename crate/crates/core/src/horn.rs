//! Horn inequalities for `n = 2, 3`, the integer LR criterion for sums of
//! hermitian matrices, and scans of the saturation property.

use std::fmt;

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::symfunc::lr_nonzero;
use crate::tableaux::{enumerate_partitions, Partition};
use crate::Rational;

/// Three weakly decreasing spectra `α, β, γ` of a common length `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumTriple {
    alpha: Vec<Rational>,
    beta: Vec<Rational>,
    gamma: Vec<Rational>,
}

impl SpectrumTriple {
    pub fn new(alpha: Vec<Rational>, beta: Vec<Rational>, gamma: Vec<Rational>) -> Result<Self> {
        let n = alpha.len();
        if beta.len() != n || gamma.len() != n {
            return Err(Error::InvalidInput("spectra must have equal length".into()));
        }
        for (name, v) in [("alpha", &alpha), ("beta", &beta), ("gamma", &gamma)] {
            if v.windows(2).any(|w| w[0] < w[1]) {
                return Err(Error::InvalidInput(format!("{name} is not weakly decreasing")));
            }
        }
        Ok(SpectrumTriple { alpha, beta, gamma })
    }

    pub fn from_integers(alpha: &[i64], beta: &[i64], gamma: &[i64]) -> Result<Self> {
        let conv = |v: &[i64]| v.iter().map(|&a| Rational::from_integer(a.into())).collect();
        Self::new(conv(alpha), conv(beta), conv(gamma))
    }

    /// Partitions padded with zeros to length `n`.
    pub fn from_partitions(alpha: &Partition, beta: &Partition, gamma: &Partition, n: usize) -> Result<Self> {
        let pad = |p: &Partition| {
            p.padded(n)
                .map(|v| v.into_iter().map(|a| Rational::from_integer(a.into())).collect())
                .ok_or_else(|| Error::InvalidInput(format!("{p} has more than {n} parts")))
        };
        Self::new(pad(alpha)?, pad(beta)?, pad(gamma)?)
    }

    pub fn n(&self) -> usize {
        self.alpha.len()
    }

    pub fn alpha(&self) -> &[Rational] {
        &self.alpha
    }

    pub fn beta(&self) -> &[Rational] {
        &self.beta
    }

    pub fn gamma(&self) -> &[Rational] {
        &self.gamma
    }

    pub fn trace_balanced(&self) -> bool {
        let s = |v: &[Rational]| v.iter().fold(Rational::zero(), |a, b| a + b);
        s(&self.alpha) + s(&self.beta) == s(&self.gamma)
    }

    /// The three spectra as partitions, if every entry is a nonnegative
    /// integer.
    pub fn as_partitions(&self) -> Option<(Partition, Partition, Partition)> {
        let conv = |v: &[Rational]| -> Option<Partition> {
            let parts = v
                .iter()
                .map(|a| {
                    if a.is_integer() && *a >= Rational::zero() {
                        u32::try_from(a.to_integer()).ok()
                    } else {
                        None
                    }
                })
                .collect::<Option<Vec<_>>>()?;
            Some(Partition::from_unsorted(parts))
        };
        Some((conv(&self.alpha)?, conv(&self.beta)?, conv(&self.gamma)?))
    }
}

/// One inequality `Σ_K γ_k ≤ Σ_I α_i + Σ_J β_j`, with 1-based indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HornInequality {
    pub i: Vec<usize>,
    pub j: Vec<usize>,
    pub k: Vec<usize>,
}

impl HornInequality {
    fn new(i: &[usize], j: &[usize], k: &[usize]) -> Self {
        HornInequality { i: i.to_vec(), j: j.to_vec(), k: k.to_vec() }
    }

    pub fn holds(&self, t: &SpectrumTriple) -> bool {
        let sum = |v: &[Rational], idx: &[usize]| idx.iter().fold(Rational::zero(), |a, &i| a + &v[i - 1]);
        sum(&t.gamma, &self.k) <= sum(&t.alpha, &self.i) + sum(&t.beta, &self.j)
    }
}

impl fmt::Display for HornInequality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = |name: &str, idx: &[usize]| {
            idx.iter().map(|i| format!("{name}{i}")).collect::<Vec<_>>().join(" + ")
        };
        write!(
            f,
            "{} <= {} + {}",
            terms("gamma", &self.k),
            terms("alpha", &self.i),
            terms("beta", &self.j)
        )
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct HornSystem {
    pub n: usize,
    pub inequalities: Vec<HornInequality>,
    /// `Σγ = Σα + Σβ` is part of the system.
    pub trace_equality: bool,
}

/// The Horn inequalities for `n = 2` (three) or `n = 3` (twelve, with each
/// `min` expanded), together with the trace equality.
pub fn horn_system(n: usize) -> Result<HornSystem> {
    let h = HornInequality::new;
    let inequalities = match n {
        2 => vec![h(&[1], &[1], &[1]), h(&[2], &[1], &[2]), h(&[1], &[2], &[2])],
        3 => vec![
            h(&[1], &[1], &[1]),
            h(&[1], &[2], &[2]),
            h(&[2], &[1], &[2]),
            h(&[1], &[3], &[3]),
            h(&[2], &[2], &[3]),
            h(&[3], &[1], &[3]),
            h(&[1, 2], &[1, 2], &[1, 2]),
            h(&[1, 2], &[1, 3], &[1, 3]),
            h(&[1, 3], &[1, 2], &[1, 3]),
            h(&[1, 2], &[2, 3], &[2, 3]),
            h(&[1, 3], &[1, 3], &[2, 3]),
            h(&[2, 3], &[1, 2], &[2, 3]),
        ],
        _ => {
            return Err(Error::UnsupportedSize(format!(
                "Horn systems are available for n = 2 and n = 3, not n = {n}"
            )))
        }
    };
    Ok(HornSystem { n, inequalities, trace_equality: true })
}

/// Whether the triple satisfies the trace equality and every Horn
/// inequality.
pub fn horn_feasible(t: &SpectrumTriple) -> Result<bool> {
    let system = horn_system(t.n())?;
    Ok(t.trace_balanced() && system.inequalities.iter().all(|ineq| ineq.holds(t)))
}

/// The inequalities the triple violates (trace equality not included).
pub fn horn_violations(t: &SpectrumTriple) -> Result<Vec<HornInequality>> {
    let system = horn_system(t.n())?;
    Ok(system.inequalities.into_iter().filter(|ineq| !ineq.holds(t)).collect())
}

/// `c_{αβ}^γ ≠ 0` for integer spectra; errors on negative or fractional
/// entries.
pub fn hermitian_feasible_integer(t: &SpectrumTriple) -> Result<bool> {
    let (a, b, c) = t.as_partitions().ok_or_else(|| {
        Error::InvalidInput("spectra must consist of nonnegative integers".into())
    })?;
    Ok(lr_nonzero(&a, &b, &c))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SaturationViolation {
    pub mu: Partition,
    pub nu: Partition,
    pub lambda: Partition,
    pub m: u32,
    pub base_nonzero: bool,
    pub scaled_nonzero: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SaturationReport {
    pub size_bound: u32,
    pub m_max: u32,
    pub triples: usize,
    pub nonzero_triples: usize,
    pub checks: usize,
    pub violations: Vec<SaturationViolation>,
}

/// Every triple `(μ, ν, λ)` with `|λ| = |μ| + |ν| ≤ size_bound` and
/// `μ, ν ⊆ λ`.
pub fn lr_triples(size_bound: u32) -> Vec<(Partition, Partition, Partition)> {
    let by_size: Vec<Vec<Partition>> = (0..=size_bound).map(|s| enumerate_partitions(s, None)).collect();
    let mut out = Vec::new();
    for total in 0..=size_bound {
        for a in 0..=total {
            for mu in &by_size[a as usize] {
                for nu in &by_size[(total - a) as usize] {
                    for lambda in &by_size[total as usize] {
                        if lambda.contains(mu) && lambda.contains(nu) {
                            out.push((mu.clone(), nu.clone(), lambda.clone()));
                        }
                    }
                }
            }
        }
    }
    out
}

/// Checks `c_{mμ,mν}^{mλ} ≠ 0 ⟺ c_{μν}^λ ≠ 0` for `1 ≤ m ≤ m_max`.
pub fn saturation_scan(size_bound: u32, m_max: u32) -> SaturationReport {
    let triples = lr_triples(size_bound);
    let results: Vec<(bool, Vec<SaturationViolation>)> = triples
        .par_iter()
        .map(|(mu, nu, lambda)| {
            let base = lr_nonzero(mu, nu, lambda);
            let mut bad = Vec::new();
            for m in 2..=m_max {
                let scaled = lr_nonzero(&mu.scaled(m), &nu.scaled(m), &lambda.scaled(m));
                if scaled != base {
                    bad.push(SaturationViolation {
                        mu: mu.clone(),
                        nu: nu.clone(),
                        lambda: lambda.clone(),
                        m,
                        base_nonzero: base,
                        scaled_nonzero: scaled,
                    });
                }
            }
            (base, bad)
        })
        .collect();
    let nonzero_triples = results.iter().filter(|r| r.0).count();
    let violations = results.into_iter().flat_map(|r| r.1).collect();
    SaturationReport {
        size_bound,
        m_max,
        triples: triples.len(),
        nonzero_triples,
        checks: triples.len() * m_max as usize,
        violations,
    }
}

/// Weakly decreasing integer vectors of length `n` with entries in
/// `0..=max_entry`.
pub fn decreasing_vectors(n: usize, max_entry: u32) -> Vec<Vec<u32>> {
    fn rec(n: usize, bound: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for a in (0..=bound).rev() {
            cur.push(a);
            rec(n, a, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, max_entry, &mut Vec::new(), &mut out);
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct HornEquivalenceReport {
    pub n: usize,
    pub max_entry: u32,
    pub triples: usize,
    pub feasible: usize,
    pub mismatches: Vec<(Vec<u32>, Vec<u32>, Vec<u32>)>,
}

/// Compares [`horn_feasible`] with [`hermitian_feasible_integer`] on every
/// integer triple with entries at most `max_entry`.
pub fn horn_lr_equivalence(n: usize, max_entry: u32) -> Result<HornEquivalenceReport> {
    horn_system(n)?;
    let vecs = decreasing_vectors(n, max_entry);
    let rows: Vec<(usize, usize, Vec<(Vec<u32>, Vec<u32>, Vec<u32>)>)> = vecs
        .par_iter()
        .map(|a| {
            let mut triples = 0;
            let mut feasible = 0;
            let mut bad = Vec::new();
            for b in &vecs {
                for c in &vecs {
                    triples += 1;
                    let conv = |v: &[u32]| v.iter().map(|&x| Rational::from_integer(x.into())).collect();
                    let t = SpectrumTriple::new(conv(a), conv(b), conv(c)).expect("sorted");
                    let horn = horn_feasible(&t).expect("n checked");
                    let lr = if t.trace_balanced() {
                        hermitian_feasible_integer(&t).expect("integral")
                    } else {
                        false
                    };
                    if horn {
                        feasible += 1;
                    }
                    if horn != lr {
                        bad.push((a.clone(), b.clone(), c.clone()));
                    }
                }
            }
            (triples, feasible, bad)
        })
        .collect();
    Ok(HornEquivalenceReport {
        n,
        max_entry,
        triples: rows.iter().map(|r| r.0).sum(),
        feasible: rows.iter().map(|r| r.1).sum(),
        mismatches: rows.into_iter().flat_map(|r| r.2).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::lr_coefficient;

    fn t(a: &[i64], b: &[i64], c: &[i64]) -> SpectrumTriple {
        SpectrumTriple::from_integers(a, b, c).unwrap()
    }

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn system_sizes() {
        assert_eq!(horn_system(2).unwrap().inequalities.len(), 3);
        assert_eq!(horn_system(3).unwrap().inequalities.len(), 12);
        assert!(matches!(horn_system(4), Err(Error::UnsupportedSize(_))));
        assert!(horn_system(3).unwrap().trace_equality);
    }

    #[test]
    fn n2_system_is_the_displayed_one() {
        let s: Vec<String> = horn_system(2).unwrap().inequalities.iter().map(|i| i.to_string()).collect();
        assert_eq!(
            s,
            [
                "gamma1 <= alpha1 + beta1",
                "gamma2 <= alpha2 + beta1",
                "gamma2 <= alpha1 + beta2"
            ]
        );
    }

    #[test]
    fn feasibility_examples() {
        assert!(horn_feasible(&t(&[1, 0], &[1, 0], &[1, 1])).unwrap());
        assert!(!horn_feasible(&t(&[2, 0], &[0, 0], &[1, 1])).unwrap());
        assert!(horn_feasible(&t(&[0, 0, 0], &[0, 0, 0], &[0, 0, 0])).unwrap());
        assert!(SpectrumTriple::from_integers(&[0, 1], &[0, 0], &[0, 1]).is_err());
        assert!(horn_feasible(&t(&[1, 0, 0, 0], &[0; 4], &[1, 0, 0, 0])).is_err());
    }

    #[test]
    fn rational_spectra() {
        let half = Rational::new(1.into(), 2.into());
        let z = Rational::zero();
        let tr = SpectrumTriple::new(
            vec![half.clone(), z.clone()],
            vec![half.clone(), z.clone()],
            vec![half.clone(), half.clone()],
        )
        .unwrap();
        assert!(horn_feasible(&tr).unwrap());
        assert!(hermitian_feasible_integer(&tr).is_err());
    }

    #[test]
    fn integer_criterion_examples() {
        assert!(hermitian_feasible_integer(&t(&[1, 0], &[1, 0], &[2, 0])).unwrap());
        assert!(!hermitian_feasible_integer(&t(&[2, 0], &[0, 0], &[1, 1])).unwrap());
        assert!(hermitian_feasible_integer(&t(&[3, 1, 1], &[0, 0, 0], &[3, 1, 1])).unwrap());
    }

    #[test]
    fn trace_violation_is_infeasible() {
        let tr = t(&[1, 0], &[1, 0], &[1, 0]);
        assert!(!horn_feasible(&tr).unwrap());
        assert!(!hermitian_feasible_integer(&tr).unwrap());
    }

    #[test]
    fn scaled_example() {
        assert_ne!(lr_coefficient(&p("1"), &p("1"), &p("2")), 0);
        assert_ne!(lr_coefficient(&p("3"), &p("3"), &p("6")), 0);
    }

    #[test]
    fn saturation_small_scan() {
        let r = saturation_scan(4, 3);
        assert!(r.violations.is_empty());
        assert!(r.nonzero_triples > 0);
        let r1 = saturation_scan(5, 1);
        assert!(r1.violations.is_empty());
    }

    #[test]
    fn horn_matches_lr_small() {
        let r2 = horn_lr_equivalence(2, 5).unwrap();
        assert!(r2.mismatches.is_empty(), "{:?}", r2.mismatches);
        let r3 = horn_lr_equivalence(3, 3).unwrap();
        assert!(r3.mismatches.is_empty(), "{:?}", r3.mismatches);
        assert!(r3.feasible > 0);
    }
}
