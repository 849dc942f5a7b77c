//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! A [`MultiPoly`] lives in a fixed variable universe of `nvars` variables.
//! For the two-alphabet rings the convention is `x₁..x_n` followed by
//! `y₁..y_n`, described by a [`VarSplit`].

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;

use crate::Rational;

pub type Exp = u16;

/// Dense exponent vector of fixed arity.
///
/// The derived ordering is lexicographic with `x₁ > x₂ > …`; it is the
/// storage order of [`MultiPoly`] terms, not a term order for Gröbner bases.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Monomial(SmallVec<[Exp; 10]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn from_exps(exps: &[Exp]) -> Self {
        Monomial(SmallVec::from_slice(exps))
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.0[i] = 1;
        m
    }

    pub fn exps(&self) -> &[Exp] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    /// Degree in variables `range.start..range.end`.
    pub fn degree_in(&self, range: std::ops::Range<usize>) -> u32 {
        self.0[range].iter().map(|&e| e as u32).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming divisibility.
    pub fn quotient(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Image under `x_i ↦ x_{perm[i]}` within each block of size `block`.
    pub fn permuted(&self, perm: &[usize], block: usize) -> Monomial {
        let mut out = SmallVec::from_elem(0, self.0.len());
        for (i, &e) in self.0.iter().enumerate() {
            let b = i / block;
            out[b * block + perm[i % block]] = e;
        }
        Monomial(out)
    }

    /// Whether exponents are weakly decreasing (a partition shape).
    pub fn is_dominant(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    pub(crate) fn exps_mut(&mut self) -> &mut [Exp] {
        &mut self.0
    }
}

/// Split of the variable universe into an `x` block followed by a `y` block.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VarSplit {
    pub x_vars: usize,
    pub y_vars: usize,
}

impl VarSplit {
    pub fn single(n: usize) -> Self {
        VarSplit { x_vars: n, y_vars: 0 }
    }

    pub fn diagonal(n: usize) -> Self {
        VarSplit { x_vars: n, y_vars: n }
    }

    pub fn nvars(&self) -> usize {
        self.x_vars + self.y_vars
    }

    /// `(x-degree, y-degree)` of a monomial.
    pub fn bidegree(&self, m: &Monomial) -> (u32, u32) {
        (m.degree_in(0..self.x_vars), m.degree_in(self.x_vars..self.nvars()))
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::term(Monomial::one(nvars), c)
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let mut p = Self::zero(m.nvars());
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::term(Monomial::var(nvars, i), Rational::one())
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars, "monomial arity mismatch");
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<Monomial, Rational> {
        self.terms
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Largest term in lexicographic order.
    pub fn lex_leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += c * m * other`.
    pub fn add_scaled_shifted(&mut self, c: &Rational, m: &Monomial, other: &MultiPoly) {
        for (om, oc) in &other.terms {
            self.add_term(m.mul(om), c * oc);
        }
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> MultiPoly {
        (0..k).fold(Self::one(self.nvars), |acc, _| &acc * self)
    }

    /// Total degree; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(|m| m.degree());
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    /// Common bidegree if every term shares one.
    pub fn bidegree(&self, split: VarSplit) -> Option<(u32, u32)> {
        let mut it = self.terms.keys().map(|m| split.bidegree(m));
        let first = it.next()?;
        it.all(|b| b == first).then_some(first)
    }

    pub fn derivative(&self, var: usize) -> MultiPoly {
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.exps()[var];
            if e == 0 {
                continue;
            }
            let mut dm = m.clone();
            dm.exps_mut()[var] -= 1;
            out.terms.insert(dm, c * Rational::from_integer(BigInt::from(e)));
        }
        out
    }

    /// Diagonal action of a permutation of `0..block` on every block of
    /// `block` consecutive variables.
    pub fn permuted(&self, perm: &[usize], block: usize) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.permuted(perm, block), c.clone()))
                .collect(),
        }
    }

    /// Swap of two variables.
    pub fn swapped(&self, i: usize, j: usize) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut m = m.clone();
                    m.exps_mut().swap(i, j);
                    (m, c.clone())
                })
                .collect(),
        }
    }

    /// Symmetric under all permutations of the variables, checked on the
    /// adjacent transpositions that generate the symmetric group.
    pub fn is_symmetric(&self) -> bool {
        (0..self.nvars.saturating_sub(1)).all(|i| self.swapped(i, i + 1) == *self)
    }

    /// Sets the last variable to zero and drops it from the universe.
    pub fn drop_last_var_at_zero(&self) -> MultiPoly {
        let n = self.nvars - 1;
        MultiPoly {
            nvars: n,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exps()[n] == 0)
                .map(|(m, c)| (Monomial::from_exps(&m.exps()[..n]), c.clone()))
                .collect(),
        }
    }

    /// Embeds into a larger universe by appending unused variables.
    pub fn widened(&self, nvars: usize) -> MultiPoly {
        assert!(nvars >= self.nvars);
        MultiPoly {
            nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut e = m.exps().to_vec();
                    e.resize(nvars, 0);
                    (Monomial::from_exps(&e), c.clone())
                })
                .collect(),
        }
    }

    /// Re-indexes variables: variable `i` of `self` becomes `map[i]` in a
    /// universe of `nvars` variables.
    pub fn relabeled(&self, nvars: usize, map: &[usize]) -> MultiPoly {
        MultiPoly::from_terms(
            nvars,
            self.terms.iter().map(|(m, c)| {
                let mut e = vec![0; nvars];
                for (i, &x) in m.exps().iter().enumerate() {
                    e[map[i]] += x;
                }
                (Monomial::from_exps(&e), c.clone())
            }),
        )
    }

    /// Components grouped by bidegree.
    pub fn bihomogeneous_parts(&self, split: VarSplit) -> BTreeMap<(u32, u32), MultiPoly> {
        let mut out: BTreeMap<(u32, u32), MultiPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(split.bidegree(m))
                .or_insert_with(|| MultiPoly::zero(self.nvars))
                .terms
                .insert(m.clone(), c.clone());
        }
        out
    }

    /// Exact quotient `self / divisor` by lexicographic long division;
    /// `None` if the division leaves a remainder.
    pub fn exact_div(&self, divisor: &MultiPoly) -> Option<MultiPoly> {
        let (dlm, dlc) = divisor.lex_leading()?;
        let (dlm, dlc) = (dlm.clone(), dlc.clone());
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero(self.nvars);
        while let Some((m, c)) = rem.lex_leading() {
            if !dlm.divides(m) {
                return None;
            }
            let qm = dlm.quotient(m);
            let qc = c / &dlc;
            rem.add_scaled_shifted(&-qc.clone(), &qm, divisor);
            quot.add_term(qm, qc);
        }
        Some(quot)
    }

    /// Largest bit length among numerators and denominators.
    pub fn max_coeff_bits(&self) -> u64 {
        self.terms
            .values()
            .map(|c| c.numer().bits().max(c.denom().bits()))
            .max()
            .unwrap_or(0)
    }

    /// Renders with variable names supplied by `name(i)`.
    pub fn display_with(&self, name: impl Fn(usize) -> String) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let abs = c.abs();
            let mono: Vec<String> = m
                .exps()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| if e == 1 { name(i) } else { format!("{}^{e}", name(i)) })
                .collect();
            if mono.is_empty() {
                s.push_str(&abs.to_string());
            } else {
                if !abs.is_one() {
                    s.push_str(&format!("{abs}*"));
                }
                s.push_str(&mono.join("*"));
            }
        }
        s
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(|i| format!("x{}", i + 1)))
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&-Rational::one())
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut acc: std::collections::HashMap<Monomial, Rational> =
            std::collections::HashMap::with_capacity(self.len() * rhs.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                *acc.entry(m1.mul(m2)).or_insert_with(Rational::zero) += c1 * c2;
            }
        }
        MultiPoly {
            nvars: self.nvars,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

/// Integer constant as a rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn x(n: usize, i: usize) -> MultiPoly {
        MultiPoly::var(n, i)
    }

    #[test]
    fn arithmetic_basics() {
        let p = &x(2, 0) + &x(2, 1);
        let sq = &p * &p;
        assert_eq!(sq.len(), 3);
        assert_eq!(sq.coeff(&Monomial::from_exps(&[1, 1])), rat(2));
        assert!((&sq - &sq).is_zero());
        assert_eq!(p.pow(3).degree(), Some(3));
    }

    #[test]
    fn derivative_and_exact_division() {
        let p = (&x(2, 0) + &x(2, 1)).pow(2);
        let d = p.derivative(0);
        assert_eq!(d, (&x(2, 0) + &x(2, 1)).scale(&rat(2)));
        let q = p.exact_div(&(&x(2, 0) + &x(2, 1))).unwrap();
        assert_eq!(q, &x(2, 0) + &x(2, 1));
        assert!(p.exact_div(&(&x(2, 0) - &x(2, 1))).is_none());
    }

    #[test]
    fn symmetry_check() {
        let e2 = &(&(&x(3, 0) * &x(3, 1)) + &(&x(3, 0) * &x(3, 2))) + &(&x(3, 1) * &x(3, 2));
        assert!(e2.is_symmetric());
        assert!(!(&x(3, 0) - &x(3, 1)).is_symmetric());
    }

    #[test]
    fn diagonal_permutation() {
        // x1*y2 under the transposition (1 2) becomes x2*y1.
        let m = Monomial::from_exps(&[1, 0, 0, 1]);
        assert_eq!(m.permuted(&[1, 0], 2), Monomial::from_exps(&[0, 1, 1, 0]));
    }

    fn arb_poly() -> impl Strategy<Value = MultiPoly> {
        proptest::collection::vec(((0u16..3, 0u16..3, 0u16..3), -5i64..6), 0..6).prop_map(|ts| {
            MultiPoly::from_terms(
                3,
                ts.into_iter()
                    .map(|((a, b, c), k)| (Monomial::from_exps(&[a, b, c]), rat(k))),
            )
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn product_divides_exactly(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            let p = &a * &b;
            prop_assert_eq!(p.exact_div(&b), Some(a));
        }
    }
}
