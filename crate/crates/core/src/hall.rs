//! Hall polynomials by brute-force subgroup enumeration.
//!
//! A finite abelian `p`-group of type `λ` is `⊕ ℤ/p^{λ_i}`. Its subgroups are
//! found by breadth-first search from the trivial subgroup, joining one
//! cyclic subgroup at a time and deduplicating by bitset. The type of a
//! subgroup `H` comes from the ranks `r_k = log_p |p^k H / p^{k+1} H|`, which
//! are the columns of its type; the cotype uses `|p^k G + H|` in place of
//! `|p^k H|`.

use std::collections::{BTreeMap, HashSet, VecDeque};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::intpoly::IntPolynomial;
use crate::symfunc::lr_nonzero;
use crate::tableaux::{enumerate_partitions, Partition};
use crate::Rational;

/// Default bound on `|G|` for subgroup enumeration.
pub const DEFAULT_GROUP_CAP: u64 = 4096;

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// `⊕_i ℤ/p^{λ_i}` with elements indexed by mixed radix.
#[derive(Clone, Debug)]
pub struct AbelianPGroup {
    p: u64,
    ty: Partition,
    moduli: Vec<u64>,
    order: usize,
}

impl AbelianPGroup {
    pub fn new(p: u64, ty: Partition) -> Result<Self> {
        Self::with_cap(p, ty, DEFAULT_GROUP_CAP)
    }

    pub fn with_cap(p: u64, ty: Partition, cap: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidInput(format!("{p} is not prime")));
        }
        let order = p.checked_pow(ty.size());
        match order {
            Some(o) if o <= cap => {}
            _ => {
                return Err(Error::ResourceCap(format!(
                    "group of type {ty} at p = {p} has more than {cap} elements"
                )))
            }
        }
        let moduli = ty.parts().iter().map(|&l| p.pow(l)).collect();
        Ok(AbelianPGroup { p, ty, moduli, order: order.unwrap() as usize })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn group_type(&self) -> &Partition {
        &self.ty
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Coordinates `(a₁, …, a_ℓ)` of element `idx`.
    pub fn element(&self, mut idx: usize) -> Vec<u64> {
        self.moduli
            .iter()
            .map(|&m| {
                let a = idx as u64 % m;
                idx /= m as usize;
                a
            })
            .collect()
    }

    pub fn index(&self, coords: &[u64]) -> usize {
        let mut idx = 0u64;
        for (a, &m) in coords.iter().zip(&self.moduli).rev() {
            idx = idx * m + a % m;
        }
        idx as usize
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let (mut a, mut b) = (a as u64, b as u64);
        let mut idx = 0u64;
        let mut scale = 1u64;
        for &m in &self.moduli {
            let s = (a % m + b % m) % m;
            idx += s * scale;
            scale *= m;
            a /= m;
            b /= m;
        }
        idx as usize
    }

    pub fn times(&self, k: u64, a: usize) -> usize {
        let mut a = a as u64;
        let mut idx = 0u64;
        let mut scale = 1u64;
        for &m in &self.moduli {
            idx += ((a % m) * (k % m)) % m * scale;
            scale *= m;
            a /= m;
        }
        idx as usize
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }
    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
    fn and_count(&self, other: &Bits) -> usize {
        self.0.iter().zip(&other.0).map(|(a, b)| (a & b).count_ones() as usize).sum()
    }
    fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(w, &bits)| {
            (0..64).filter(move |b| bits >> b & 1 == 1).map(move |b| w * 64 + b)
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubgroupRecord {
    /// Element indices, sorted.
    pub elements: Vec<usize>,
    pub subgroup_type: Partition,
    pub quotient_type: Partition,
}

fn log_p(mut n: usize, p: u64) -> u32 {
    let mut k = 0;
    while n > 1 {
        n /= p as usize;
        k += 1;
    }
    k
}

fn type_from_ranks(ranks: Vec<u32>) -> Partition {
    Partition::from_unsorted(ranks).conjugate()
}

fn annotate(g: &AbelianPGroup, h: &Bits) -> (Partition, Partition) {
    let p = g.p;
    let depth = g.ty.part(0) as usize + 1;
    let elements: Vec<usize> = h.ones().collect();
    // |p^k H| and |p^k G ∩ H| for k = 0..=λ₁
    let mut sub_sizes = Vec::with_capacity(depth);
    let mut sum_sizes = Vec::with_capacity(depth);
    let mut pk = 1u64;
    let h_size = elements.len();
    for _ in 0..depth {
        let mut image = Bits::new(g.order);
        for &e in &elements {
            image.set(g.times(pk, e));
        }
        sub_sizes.push(image.count());
        let mut pkg = Bits::new(g.order);
        for e in 0..g.order {
            pkg.set(g.times(pk, e));
        }
        let pkg_size = pkg.count();
        let meet = pkg.and_count(h);
        sum_sizes.push(pkg_size * h_size / meet);
        pk *= p;
    }
    let sub_ranks = sub_sizes.windows(2).map(|w| log_p(w[0] / w[1], p)).filter(|&r| r > 0).collect();
    let quo_ranks = sum_sizes.windows(2).map(|w| log_p(w[0] / w[1], p)).filter(|&r| r > 0).collect();
    (type_from_ranks(sub_ranks), type_from_ranks(quo_ranks))
}

/// Every subgroup of `g`, each with its type and cotype.
pub fn enumerate_subgroups(g: &AbelianPGroup) -> Vec<SubgroupRecord> {
    let n = g.order;
    let mut trivial = Bits::new(n);
    trivial.set(0);
    let mut seen: HashSet<Bits> = HashSet::new();
    seen.insert(trivial.clone());
    let mut queue = VecDeque::from([trivial]);
    let mut found = Vec::new();
    while let Some(h) = queue.pop_front() {
        let members: Vec<usize> = h.ones().collect();
        let mut covered = h.clone();
        for x in 0..n {
            if covered.get(x) {
                continue;
            }
            // the whole coset x + H gives the same join
            for &m in &members {
                covered.set(g.add(x, m));
            }
            let mut join = Bits::new(n);
            let mut c = 0;
            loop {
                for &m in &members {
                    join.set(g.add(c, m));
                }
                c = g.add(c, x);
                if c == 0 {
                    break;
                }
            }
            if seen.insert(join.clone()) {
                queue.push_back(join);
            }
        }
        found.push(h);
    }
    let mut records: Vec<SubgroupRecord> = found
        .par_iter()
        .map(|h| {
            let (subgroup_type, quotient_type) = annotate(g, h);
            SubgroupRecord { elements: h.ones().collect(), subgroup_type, quotient_type }
        })
        .collect();
    records.sort_by(|a, b| (a.elements.len(), &a.elements).cmp(&(b.elements.len(), &b.elements)));
    records
}

/// Number of subgroups of each `(type, cotype)`.
pub fn hall_census(g: &AbelianPGroup) -> BTreeMap<(Partition, Partition), u64> {
    let mut out = BTreeMap::new();
    for r in enumerate_subgroups(g) {
        *out.entry((r.subgroup_type, r.quotient_type)).or_insert(0) += 1;
    }
    out
}

/// `g_{μν}^λ(p)`: subgroups of type `μ` with quotient of type `ν` in the
/// group of type `λ`.
pub fn hall_count(lambda: &Partition, mu: &Partition, nu: &Partition, p: u64) -> Result<u64> {
    hall_count_capped(lambda, mu, nu, p, DEFAULT_GROUP_CAP)
}

pub fn hall_count_capped(lambda: &Partition, mu: &Partition, nu: &Partition, p: u64, cap: u64) -> Result<u64> {
    let g = AbelianPGroup::with_cap(p, lambda.clone(), cap)?;
    if mu.size() + nu.size() != lambda.size() {
        return Ok(0);
    }
    Ok(hall_census(&g).get(&(mu.clone(), nu.clone())).copied().unwrap_or(0))
}

/// Polynomial through `(x_i, y_i)` with rational coefficients, constant
/// term first.
pub fn lagrange_interpolate(points: &[(i64, BigInt)]) -> Vec<Rational> {
    let n = points.len();
    let mut result = vec![Rational::zero(); n];
    for (i, (xi, yi)) in points.iter().enumerate() {
        // basis polynomial ∏_{j≠i} (t − x_j) / (x_i − x_j)
        let mut basis = vec![Rational::one()];
        let mut denom = Rational::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            let mut next = vec![Rational::zero(); basis.len() + 1];
            for (k, c) in basis.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= c * Rational::from_integer((*xj).into());
            }
            basis = next;
            denom *= Rational::from_integer((xi - xj).into());
        }
        let scale = Rational::from_integer(yi.clone()) / denom;
        for (k, c) in basis.iter().enumerate() {
            result[k] += c * &scale;
        }
    }
    result
}

#[derive(Clone, Debug, Serialize)]
pub struct HallFit {
    /// `(p, g(p))` for every prime supplied.
    pub counts: Vec<(u64, u64)>,
    pub polynomial: IntPolynomial,
    /// Primes whose counts were not used to build the polynomial but agree
    /// with it.
    pub held_out: Vec<u64>,
    pub maley_positive: bool,
}

/// Interpolates `g_{μν}^λ(t)` from counts at the given primes, raising the
/// degree until the remaining primes agree with the fit.
pub fn hall_fit(lambda: &Partition, mu: &Partition, nu: &Partition, primes: &[u64], cap: u64) -> Result<HallFit> {
    if primes.len() < 2 {
        return Err(Error::InvalidInput("at least two primes are needed".into()));
    }
    let mut sorted = primes.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let counts = sorted
        .iter()
        .map(|&p| hall_count_capped(lambda, mu, nu, p, cap).map(|c| (p, c)))
        .collect::<Result<Vec<_>>>()?;
    fit_counts(&counts)
}

/// Fits an integer polynomial to `(p, count)` data, keeping at least one
/// point in reserve as a check.
pub fn fit_counts(counts: &[(u64, u64)]) -> Result<HallFit> {
    let pts: Vec<(i64, BigInt)> = counts.iter().map(|&(p, c)| (p as i64, BigInt::from(c))).collect();
    for used in 1..pts.len() {
        let coeffs = lagrange_interpolate(&pts[..used]);
        let agrees = pts[used..].iter().all(|(x, y)| {
            let x = Rational::from_integer((*x).into());
            let v = coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * &x + c);
            v == Rational::from_integer(y.clone())
        });
        if !agrees {
            continue;
        }
        if coeffs.iter().any(|c| !c.is_integer()) {
            return Err(Error::Consistency(format!(
                "interpolated Hall polynomial has non-integer coefficients: {coeffs:?}"
            )));
        }
        let polynomial = IntPolynomial::from_coeffs(coeffs.iter().map(|c| c.to_integer()).collect());
        let maley_positive = maley_positivity(&polynomial);
        return Ok(HallFit {
            counts: counts.to_vec(),
            polynomial,
            held_out: counts[used..].iter().map(|c| c.0).collect(),
            maley_positive,
        });
    }
    Err(Error::Consistency(format!(
        "{} points do not determine the Hall polynomial with a held-out check",
        counts.len()
    )))
}

/// `g_{μν}^λ(t)` from counts at `primes`.
pub fn hall_polynomial(lambda: &Partition, mu: &Partition, nu: &Partition, primes: &[u64]) -> Result<IntPolynomial> {
    Ok(hall_fit(lambda, mu, nu, primes, DEFAULT_GROUP_CAP)?.polynomial)
}

/// Whether `g(t + 1)` has nonnegative coefficients.
pub fn maley_positivity(g: &IntPolynomial) -> bool {
    g.shift_by_one().all_nonnegative()
}

#[derive(Clone, Debug, Serialize)]
pub struct HallSweepEntry {
    pub lambda: Partition,
    pub mu: Partition,
    pub nu: Partition,
    pub counts: Vec<(u64, u64)>,
    pub lr_nonzero: bool,
    /// `None` when the primes within the cap do not pin down the polynomial.
    pub polynomial: Option<IntPolynomial>,
    pub maley_positive: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct HallSweepReport {
    pub max_size: u32,
    pub primes: Vec<u64>,
    pub entries: Vec<HallSweepEntry>,
    pub nonvanishing_mismatches: usize,
    pub duality_mismatches: usize,
    pub subgroup_total_mismatches: usize,
    pub polynomials_fitted: usize,
    pub polynomials_undetermined: usize,
    pub maley_failures: usize,
}

/// For every `λ` with `|λ| ≤ max_size`, compares Hall counts at each prime
/// with LR nonvanishing, checks `g_{μν}^λ = g_{νμ}^λ`, and fits polynomials
/// where enough primes fit under the cap.
pub fn hall_sweep(max_size: u32, primes: &[u64], cap: u64) -> Result<HallSweepReport> {
    let lambdas: Vec<Partition> = (0..=max_size).flat_map(|s| enumerate_partitions(s, None)).collect();
    let mut entries = Vec::new();
    let mut subgroup_total_mismatches = 0;
    for lambda in &lambdas {
        let mut censuses = Vec::new();
        for &p in primes {
            let g = match AbelianPGroup::with_cap(p, lambda.clone(), cap) {
                Ok(g) => g,
                Err(e) if e.is_resource_cap() => continue,
                Err(e) => return Err(e),
            };
            let total = enumerate_subgroups(&g).len() as u64;
            let census = hall_census(&g);
            if census.values().sum::<u64>() != total {
                subgroup_total_mismatches += 1;
            }
            censuses.push((p, census));
        }
        for a in 0..=lambda.size() {
            for mu in enumerate_partitions(a, None) {
                for nu in enumerate_partitions(lambda.size() - a, None) {
                    let counts: Vec<(u64, u64)> = censuses
                        .iter()
                        .map(|(p, c)| (*p, c.get(&(mu.clone(), nu.clone())).copied().unwrap_or(0)))
                        .collect();
                    let fit = fit_counts(&counts).ok();
                    entries.push(HallSweepEntry {
                        lambda: lambda.clone(),
                        lr_nonzero: lr_nonzero(&mu, &nu, lambda),
                        mu: mu.clone(),
                        nu,
                        counts,
                        maley_positive: fit.as_ref().map(|f| f.maley_positive),
                        polynomial: fit.map(|f| f.polynomial),
                    });
                }
            }
        }
    }
    let nonvanishing_mismatches = entries
        .iter()
        .filter(|e| e.counts.iter().any(|&(_, c)| (c != 0) != e.lr_nonzero))
        .count();
    let lookup: BTreeMap<(&Partition, &Partition, &Partition), &Vec<(u64, u64)>> =
        entries.iter().map(|e| ((&e.lambda, &e.mu, &e.nu), &e.counts)).collect();
    let duality_mismatches = entries
        .iter()
        .filter(|e| lookup.get(&(&e.lambda, &e.nu, &e.mu)) != Some(&&e.counts))
        .count();
    Ok(HallSweepReport {
        max_size,
        primes: primes.to_vec(),
        polynomials_fitted: entries.iter().filter(|e| e.polynomial.is_some()).count(),
        polynomials_undetermined: entries.iter().filter(|e| e.polynomial.is_none()).count(),
        maley_failures: entries.iter().filter(|e| e.maley_positive == Some(false)).count(),
        nonvanishing_mismatches,
        duality_mismatches,
        subgroup_total_mismatches,
        entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn group(prime: u64, ty: &str) -> AbelianPGroup {
        AbelianPGroup::new(prime, p(ty)).unwrap()
    }

    #[test]
    fn subgroup_counts() {
        assert_eq!(enumerate_subgroups(&group(2, "1")).len(), 2);
        assert_eq!(enumerate_subgroups(&group(2, "1,1")).len(), 5);
        assert_eq!(enumerate_subgroups(&group(3, "2")).len(), 3);
        // subspaces of F_2^3: 1 + 7 + 7 + 1
        assert_eq!(enumerate_subgroups(&group(2, "1,1,1")).len(), 16);
    }

    #[test]
    fn subgroups_are_closed() {
        let g = group(2, "2,1");
        for r in enumerate_subgroups(&g) {
            let set: HashSet<usize> = r.elements.iter().copied().collect();
            assert!(set.contains(&0));
            for &a in &r.elements {
                for &b in &r.elements {
                    assert!(set.contains(&g.add(a, b)));
                }
            }
            assert_eq!(r.subgroup_type.size() + r.quotient_type.size(), 3);
            assert_eq!(r.elements.len() as u64, 2u64.pow(r.subgroup_type.size()));
        }
    }

    #[test]
    fn element_coordinates_roundtrip() {
        let g = group(3, "2,1");
        for i in 0..g.order() {
            assert_eq!(g.index(&g.element(i)), i);
        }
        let a = g.index(&[4, 2]);
        let b = g.index(&[7, 2]);
        assert_eq!(g.element(g.add(a, b)), vec![2, 1]);
    }

    #[test]
    fn count_examples() {
        for prime in [2, 3, 5] {
            assert_eq!(hall_count(&p("2"), &p("1"), &p("1"), prime).unwrap(), 1);
            assert_eq!(hall_count(&p("1,1"), &p("1"), &p("1"), prime).unwrap(), prime + 1);
        }
        assert_eq!(hall_count(&p("1,1"), &p("2"), &p("()"), 2).unwrap(), 0);
        assert_eq!(hall_count(&p("1,1"), &p("1"), &p("2"), 2).unwrap(), 0);
    }

    #[test]
    fn cyclic_type_of_z4_in_z4xz2() {
        let g = group(2, "2,1");
        let census = hall_census(&g);
        // cyclic subgroups of order 4: generated by (1,0),(1,1)
        assert_eq!(census[&(p("2"), p("1"))], 2);
        assert_eq!(census[&(p("1,1"), p("1"))], 1);
    }

    #[test]
    fn polynomial_examples() {
        assert_eq!(
            hall_polynomial(&p("1,1"), &p("1"), &p("1"), &[2, 3, 5]).unwrap(),
            IntPolynomial::from_i64(&[1, 1])
        );
        assert_eq!(hall_polynomial(&p("2"), &p("1"), &p("1"), &[2, 3]).unwrap(), IntPolynomial::one());
        let fit = hall_fit(&p("2,1"), &p("1,1"), &p("1"), &[2, 3, 5, 7], DEFAULT_GROUP_CAP).unwrap();
        assert!(!fit.held_out.is_empty());
        assert!(fit.polynomial.degree().unwrap_or(0) <= 1);
        assert!(fit.maley_positive);
        assert!(hall_polynomial(&p("1"), &p("1"), &p("()"), &[2]).is_err());
    }

    #[test]
    fn interpolation_rejects_fractional_fit() {
        // (2,1), (3,2), (5,2): a degree-2 fit is forced with non-integer coefficients
        let data = [(2, 1), (3, 2), (5, 2), (7, 9)];
        assert!(fit_counts(&data).is_err());
    }

    #[test]
    fn maley_examples() {
        assert!(maley_positivity(&IntPolynomial::from_i64(&[1, 1])));
        assert!(maley_positivity(&IntPolynomial::one()));
        assert!(!maley_positivity(&IntPolynomial::from_i64(&[-2, 1])));
    }

    #[test]
    fn cap_is_enforced() {
        assert!(AbelianPGroup::new(5, p("3,2,1")).unwrap_err().is_resource_cap());
        assert!(AbelianPGroup::new(4, p("1")).is_err());
    }

    #[test]
    fn sweep_up_to_three() {
        let r = hall_sweep(3, &[2, 3], DEFAULT_GROUP_CAP).unwrap();
        assert_eq!(r.nonvanishing_mismatches, 0);
        assert_eq!(r.duality_mismatches, 0);
        assert_eq!(r.subgroup_total_mismatches, 0);
        assert_eq!(r.maley_failures, 0);
    }
}
