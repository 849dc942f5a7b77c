//! Diagonal coinvariants `R⁽²⁾ = ℚ[x, y] / I`, where `I` is generated by
//! the polarized power sums `p_{h,k} = Σ_r x_r^h y_r^k` with
//! `1 ≤ h + k ≤ n`.
//!
//! Bigraded dimensions come from counting standard monomials of a reduced
//! Gröbner basis; the `S_n` action on the quotient is evaluated through
//! normal forms.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_integer::binomial;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use crate::apolar::{class_representative, decompose, CharacterTable};
use crate::error::{Error, Result};
use crate::groebner::{groebner_basis, GroebnerBasis, GroebnerLimits, MonomialOrder};
use crate::intpoly::QPolynomial;
use crate::poly::{Exp, Monomial, MultiPoly, VarSplit};
use crate::symfunc::elementary_symmetric;
use crate::tableaux::{enumerate_partitions, factorial, Partition};

/// Largest `n` accepted without an explicit override.
pub const DEFAULT_MAX_N: usize = 4;

/// `p_{h,k}` over `x₁..x_n, y₁..y_n` for `1 ≤ h + k ≤ n`, ordered by
/// total degree then by decreasing `h`.
pub fn diagonal_invariant_generators(n: usize) -> Vec<MultiPoly> {
    let mut out = Vec::new();
    for d in 1..=n {
        for h in (0..=d).rev() {
            let k = d - h;
            let terms = (0..n).map(|r| {
                let mut e = vec![0 as Exp; 2 * n];
                e[r] = h as Exp;
                e[n + r] = k as Exp;
                (Monomial::from_exps(&e), crate::poly::rat(1))
            });
            out.push(MultiPoly::from_terms(2 * n, terms));
        }
    }
    out
}

/// An ideal with a fixed monomial order.
#[derive(Clone, Debug)]
pub struct PolyIdeal {
    pub generators: Vec<MultiPoly>,
    pub order: MonomialOrder,
    pub split: VarSplit,
}

impl PolyIdeal {
    pub fn diagonal(n: usize) -> Self {
        PolyIdeal { generators: diagonal_invariant_generators(n), order: MonomialOrder::Grevlex, split: VarSplit::diagonal(n) }
    }

    /// `(e₁, …, e_n)` in one set of variables.
    pub fn single(n: usize) -> Self {
        PolyIdeal {
            generators: (1..=n).map(|k| elementary_symmetric(k, n)).collect(),
            order: MonomialOrder::Grevlex,
            split: VarSplit::single(n),
        }
    }

    pub fn with_order(mut self, order: MonomialOrder) -> Self {
        self.order = order;
        self
    }

    pub fn groebner(&self, limits: GroebnerLimits) -> Result<GroebnerBasis> {
        groebner_basis(&self.generators, self.order, limits)
    }
}

/// Standard monomials of the quotient, grouped by bidegree.
#[derive(Clone, Debug)]
pub struct QuotientBasis {
    pub split: VarSplit,
    pub basis: GroebnerBasis,
    pub monomials: BTreeMap<(u32, u32), Vec<Monomial>>,
}

impl QuotientBasis {
    pub fn new(ideal: &PolyIdeal, limits: GroebnerLimits) -> Result<Self> {
        let basis = ideal.groebner(limits)?;
        let cap = 2 * (ideal.split.nvars() as u32).pow(2);
        let mut monomials: BTreeMap<(u32, u32), Vec<Monomial>> = BTreeMap::new();
        for m in basis.standard_monomials(cap)? {
            monomials.entry(ideal.split.bidegree(&m)).or_default().push(m);
        }
        Ok(QuotientBasis { split: ideal.split, basis, monomials })
    }

    pub fn dim(&self) -> usize {
        self.monomials.values().map(Vec::len).sum()
    }

    pub fn bigraded_dims(&self) -> BTreeMap<(u32, u32), usize> {
        self.monomials.iter().map(|(&k, v)| (k, v.len())).collect()
    }

    /// `Σ dim · q^{i+j}`.
    pub fn hilbert_series(&self) -> QPolynomial {
        let mut coeffs = Vec::new();
        for (&(i, j), v) in &self.monomials {
            let d = (i + j) as usize;
            if coeffs.len() <= d {
                coeffs.resize(d + 1, BigInt::zero());
            }
            coeffs[d] += v.len();
        }
        QPolynomial::from_coeffs(coeffs)
    }

    /// Graded character of the diagonal `S_n` action: the trace of `w` on
    /// a bidegree is `Σ_m [m] NF(w·m)` over its standard monomials.
    pub fn character(&self) -> Result<CharacterTable> {
        let n = self.split.x_vars;
        let classes = enumerate_partitions(n as u32, None);
        let traces = self
            .monomials
            .par_iter()
            .map(|(&bideg, mons)| {
                let row = classes
                    .iter()
                    .map(|rho| {
                        let perm = class_representative(rho);
                        let mut t = crate::Rational::zero();
                        for m in mons {
                            let image = MultiPoly::term(m.permuted(&perm, n), crate::poly::rat(1));
                            t += self.basis.normal_form(&image).coeff(m);
                        }
                        if !t.is_integer() {
                            return Err(Error::Consistency(format!("trace {t} is not an integer")));
                        }
                        t.to_integer().to_i64().ok_or_else(|| Error::Consistency("trace overflow".into()))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok((bideg, row))
            })
            .collect::<Result<BTreeMap<_, _>>>()?;
        Ok(CharacterTable { n, classes, traces })
    }
}

fn check_n(n: usize, max_n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidInput("n must be at least 1".into()));
    }
    if n > max_n {
        return Err(Error::ResourceCap(format!("n = {n} exceeds the cap of {max_n}")));
    }
    Ok(())
}

/// `dim R⁽²⁾_{ij}` for every bidegree.
pub fn bigraded_dimensions(n: usize) -> Result<BTreeMap<(u32, u32), usize>> {
    check_n(n, DEFAULT_MAX_N)?;
    Ok(QuotientBasis::new(&PolyIdeal::diagonal(n), GroebnerLimits::default())?.bigraded_dims())
}

/// Everything computed about `R⁽²⁾` for one `n`.
#[derive(Clone, Debug)]
pub struct DiagonalReport {
    pub n: usize,
    pub generators: usize,
    pub groebner_size: usize,
    pub bigraded_dims: BTreeMap<(u32, u32), usize>,
    pub total: usize,
    pub expected_total: BigUint,
    pub antiinvariant_dims: BTreeMap<(u32, u32), u64>,
    pub antiinvariant_total: u64,
    pub catalan: BigInt,
    pub multiplicities: BTreeMap<(u32, u32), BTreeMap<Partition, u64>>,
}

/// Full computation for `R⁽²⁾`, capped at `max_n`.
pub fn diagonal_report(n: usize, max_n: usize) -> Result<DiagonalReport> {
    check_n(n, max_n)?;
    let ideal = PolyIdeal::diagonal(n);
    let q = QuotientBasis::new(&ideal, GroebnerLimits::default())?;
    let table = q.character()?;
    let multiplicities = crate::apolar::irreducible_multiplicities(&table)?;
    let sign = Partition::new(vec![1; n])?;
    let antiinvariant_dims: BTreeMap<(u32, u32), u64> = multiplicities
        .iter()
        .filter_map(|(&k, m)| m.get(&sign).map(|&c| (k, c)))
        .collect();
    Ok(DiagonalReport {
        n,
        generators: ideal.generators.len(),
        groebner_size: q.basis.len(),
        bigraded_dims: q.bigraded_dims(),
        total: q.dim(),
        expected_total: BigUint::from(n + 1).pow(n as u32 - 1),
        antiinvariant_total: antiinvariant_dims.values().sum(),
        antiinvariant_dims,
        catalan: catalan(n as u64),
        multiplicities,
    })
}

/// Sign-isotypic dimensions per bidegree and their total.
pub fn antiinvariant_dimensions(n: usize) -> Result<(BTreeMap<(u32, u32), u64>, u64)> {
    let r = diagonal_report(n, DEFAULT_MAX_N)?;
    Ok((r.antiinvariant_dims, r.antiinvariant_total))
}

/// Multiplicities of the irreducibles in `R⁽²⁾_{ij}`.
pub fn bidegree_decomposition(n: usize, bidegree: (u32, u32)) -> Result<BTreeMap<Partition, u64>> {
    check_n(n, DEFAULT_MAX_N)?;
    let q = QuotientBasis::new(&PolyIdeal::diagonal(n), GroebnerLimits::default())?;
    let table = q.character()?;
    let chi = table.traces.get(&bidegree).cloned().unwrap_or_else(|| vec![0; table.classes.len()]);
    decompose(n, &table.classes, &chi)
}

pub fn catalan(n: u64) -> BigInt {
    binomial(BigInt::from(2 * n), BigInt::from(n)) / BigInt::from(n + 1)
}

/// Dimension and Hilbert series of `ℚ[x₁..x_n] / (e₁, …, e_n)`.
pub fn single_set_coinvariants(n: usize) -> Result<(usize, QPolynomial)> {
    let q = QuotientBasis::new(&PolyIdeal::single(n), GroebnerLimits::default())?;
    Ok((q.dim(), q.hilbert_series()))
}

/// Number of parking functions of length `n`: sequences in `[1, n]^n`
/// whose sorted form `b` has `b_i ≤ i`. Counted over weakly increasing
/// sequences, each weighted by its number of rearrangements.
pub fn count_parking_functions(n: usize) -> BigUint {
    fn rec(pos: usize, min: usize, n: usize, mult: &mut Vec<u32>, out: &mut BigUint) {
        if pos == n {
            let mut w = factorial(n as u32);
            for &m in mult.iter() {
                w /= factorial(m);
            }
            *out += w;
            return;
        }
        for v in min..=pos + 1 {
            mult[v - 1] += 1;
            rec(pos + 1, v, n, mult, out);
            mult[v - 1] -= 1;
        }
    }
    let mut out = BigUint::zero();
    rec(0, 1, n, &mut vec![0; n.max(1)], &mut out);
    out
}

/// The same count by testing all `n^n` sequences.
pub fn count_parking_functions_bruteforce(n: usize) -> u64 {
    let total = (n as u64).pow(n as u32);
    (0..total)
        .filter(|&code| {
            let mut c = code;
            let mut seq: Vec<u64> = (0..n)
                .map(|_| {
                    let d = c % n as u64 + 1;
                    c /= n as u64;
                    d
                })
                .collect();
            seq.sort_unstable();
            seq.iter().enumerate().all(|(i, &b)| b <= i as u64 + 1)
        })
        .count() as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::q_factorial;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn generator_examples() {
        let g1 = diagonal_invariant_generators(1);
        assert_eq!(g1, vec![MultiPoly::var(2, 0), MultiPoly::var(2, 1)]);
        let g2 = diagonal_invariant_generators(2);
        assert_eq!(g2.len(), 5);
        assert_eq!(g2[0].to_string(), "x1 + x2");
        for n in 1..=4 {
            let g = diagonal_invariant_generators(n);
            assert_eq!(g.len(), n * (n + 3) / 2);
            for f in &g {
                for i in 0..n - 1 {
                    let mut perm: Vec<usize> = (0..n).collect();
                    perm.swap(i, i + 1);
                    assert_eq!(&f.permuted(&perm, n), f);
                }
            }
        }
    }

    #[test]
    fn n1_and_n2() {
        assert_eq!(bigraded_dimensions(1).unwrap(), BTreeMap::from([((0, 0), 1)]));
        assert_eq!(
            bigraded_dimensions(2).unwrap(),
            BTreeMap::from([((0, 0), 1), ((1, 0), 1), ((0, 1), 1)])
        );
        let (anti, total) = antiinvariant_dimensions(2).unwrap();
        assert_eq!(total, 2);
        assert!(!anti.contains_key(&(0, 0)));
    }

    #[test]
    fn n2_orders_agree() {
        for order in [MonomialOrder::Grevlex, MonomialOrder::DegLex] {
            let q = QuotientBasis::new(&PolyIdeal::diagonal(2).with_order(order), GroebnerLimits::default()).unwrap();
            assert_eq!(q.bigraded_dims(), bigraded_dimensions(2).unwrap());
        }
    }

    #[test]
    fn n3_totals() {
        let r = diagonal_report(3, 3).unwrap();
        assert_eq!(r.total, 16);
        assert_eq!(r.antiinvariant_total, 5);
        for (&(i, j), &d) in &r.bigraded_dims {
            assert_eq!(r.bigraded_dims.get(&(j, i)), Some(&d));
        }
    }

    #[test]
    fn normal_form_idempotent() {
        let q = QuotientBasis::new(&PolyIdeal::diagonal(3), GroebnerLimits::default()).unwrap();
        let x = |i| MultiPoly::var(6, i);
        let f = &(&x(0) * &x(4)) + &(&x(1) * &x(1));
        let g = &x(2) - &x(5);
        let nf = q.basis.normal_form(&f);
        assert_eq!(q.basis.normal_form(&nf), nf);
        assert_eq!(
            q.basis.normal_form(&(&f * &g)),
            q.basis.normal_form(&(&nf * &q.basis.normal_form(&g)))
        );
    }

    #[test]
    fn single_set_degeneration() {
        for n in 1..=4 {
            let (dim, hs) = single_set_coinvariants(n).unwrap();
            assert_eq!(dim, factorial(n as u32).to_usize().unwrap());
            assert_eq!(hs, q_factorial(n as u32));
        }
    }

    #[test]
    fn parking_functions() {
        assert_eq!(count_parking_functions(1), BigUint::from(1u32));
        assert_eq!(count_parking_functions(2), BigUint::from(3u32));
        assert_eq!(count_parking_functions(3), BigUint::from(16u32));
        for n in 1..=7 {
            assert_eq!(count_parking_functions(n), BigUint::from(count_parking_functions_bruteforce(n)));
            assert_eq!(count_parking_functions(n), BigUint::from(n + 1).pow(n as u32 - 1));
        }
    }

    #[test]
    fn cap_enforced() {
        assert!(bigraded_dimensions(5).unwrap_err().is_resource_cap());
        assert!(bidegree_decomposition(2, (1, 0)).unwrap().contains_key(&p("1,1")));
    }
}
