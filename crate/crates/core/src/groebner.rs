//! Buchberger's algorithm over the rationals.
//!
//! Polynomials are kept as term lists sorted by decreasing monomial order.
//! Pairs are chosen by the normal strategy (smallest lcm first) and
//! discarded by the product and chain criteria. An S-pair budget and a
//! coefficient-size bound turn runaway computations into errors.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet, VecDeque};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{Monomial, MultiPoly};
use crate::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic with `x₁ > … > x_n > y₁ > … > y_n`.
    #[default]
    Grevlex,
    /// Graded lexicographic with the same variable order.
    DegLex,
}

impl MonomialOrder {
    pub fn cmp(self, a: &Monomial, b: &Monomial) -> Ordering {
        let by_degree = a.degree().cmp(&b.degree());
        if by_degree != Ordering::Equal {
            return by_degree;
        }
        match self {
            MonomialOrder::DegLex => a.exps().cmp(b.exps()),
            MonomialOrder::Grevlex => {
                for (x, y) in a.exps().iter().zip(b.exps()).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct GroebnerLimits {
    /// Maximum number of S-polynomials reduced.
    pub max_pairs: usize,
    /// Maximum bit length of any numerator or denominator in the basis.
    pub max_coeff_bits: u64,
}

impl Default for GroebnerLimits {
    fn default() -> Self {
        GroebnerLimits { max_pairs: 200_000, max_coeff_bits: 4096 }
    }
}

/// Terms in decreasing order.
type Terms = Vec<(Monomial, Rational)>;

fn to_terms(p: &MultiPoly, order: MonomialOrder) -> Terms {
    let mut t: Terms = p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
    t.sort_by(|a, b| order.cmp(&b.0, &a.0));
    t
}

fn make_monic(t: &mut Terms) {
    if let Some((_, lead)) = t.first() {
        if !lead.is_one() {
            let inv = lead.recip();
            for (_, c) in t.iter_mut() {
                *c *= &inv;
            }
        }
    }
}

/// `f − c·m·g`.
fn sub_mul(f: &Terms, c: &Rational, m: &Monomial, g: &Terms, order: MonomialOrder) -> Terms {
    let mut out = Vec::with_capacity(f.len() + g.len());
    let mut i = 0;
    let mut j = 0;
    let scaled = |k: usize| (m.mul(&g[k].0), &g[k].1 * c);
    let mut next_g = if g.is_empty() { None } else { Some(scaled(0)) };
    while i < f.len() || next_g.is_some() {
        match (f.get(i), &next_g) {
            (Some(a), Some(b)) => match order.cmp(&a.0, &b.0) {
                Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b.0.clone(), -b.1.clone()));
                    j += 1;
                    next_g = (j < g.len()).then(|| scaled(j));
                }
                Ordering::Equal => {
                    let v = &a.1 - &b.1;
                    if !v.is_zero() {
                        out.push((a.0.clone(), v));
                    }
                    i += 1;
                    j += 1;
                    next_g = (j < g.len()).then(|| scaled(j));
                }
            },
            (Some(a), None) => {
                out.push(a.clone());
                i += 1;
            }
            (None, Some(b)) => {
                out.push((b.0.clone(), -b.1.clone()));
                j += 1;
                next_g = (j < g.len()).then(|| scaled(j));
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

/// Full reduction of `f` by monic `basis`.
fn reduce(f: Terms, basis: &[Terms], order: MonomialOrder) -> Terms {
    let mut p = f;
    let mut rest: Terms = Vec::new();
    while !p.is_empty() {
        let (lm, lc) = p[0].clone();
        match basis.iter().find(|g| g[0].0.divides(&lm)) {
            Some(g) => {
                let q = g[0].0.quotient(&lm);
                p = sub_mul(&p, &lc, &q, g, order);
            }
            None => {
                rest.push(p.remove(0));
            }
        }
    }
    rest
}

fn coeff_bits(t: &Terms) -> u64 {
    t.iter().map(|(_, c)| c.numer().bits().max(c.denom().bits())).max().unwrap_or(0)
}

/// A reduced Gröbner basis.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    nvars: usize,
    order: MonomialOrder,
    elements: Vec<Terms>,
    pairs_reduced: usize,
}

impl GroebnerBasis {
    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn pairs_reduced(&self) -> usize {
        self.pairs_reduced
    }

    pub fn polynomials(&self) -> Vec<MultiPoly> {
        self.elements
            .iter()
            .map(|t| MultiPoly::from_terms(self.nvars, t.iter().cloned()))
            .collect()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements.iter().map(|t| t[0].0.clone()).collect()
    }

    pub fn normal_form(&self, f: &MultiPoly) -> MultiPoly {
        let r = reduce(to_terms(f, self.order), &self.elements, self.order);
        MultiPoly::from_terms(self.nvars, r)
    }

    pub fn contains(&self, f: &MultiPoly) -> bool {
        self.normal_form(f).is_zero()
    }

    pub fn is_standard(&self, m: &Monomial) -> bool {
        !self.elements.iter().any(|g| g[0].0.divides(m))
    }

    /// Monomials outside the leading-term ideal, found by breadth-first
    /// search from `1`. Errors if any has degree above `degree_cap`, which
    /// happens when the quotient is infinite-dimensional.
    pub fn standard_monomials(&self, degree_cap: u32) -> Result<Vec<Monomial>> {
        let one = Monomial::one(self.nvars);
        if !self.is_standard(&one) {
            return Ok(Vec::new());
        }
        let mut seen: HashSet<Monomial> = HashSet::from([one.clone()]);
        let mut queue = VecDeque::from([one]);
        let mut out = Vec::new();
        while let Some(m) = queue.pop_front() {
            if m.degree() > degree_cap {
                return Err(Error::ResourceCap(format!(
                    "standard monomial of degree {} exceeds cap {degree_cap}",
                    m.degree()
                )));
            }
            for v in 0..self.nvars {
                let next = m.mul(&Monomial::var(self.nvars, v));
                if self.is_standard(&next) && seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
            out.push(m);
        }
        out.sort_by(|a, b| self.order.cmp(a, b));
        Ok(out)
    }
}

/// Reduced Gröbner basis of the ideal generated by `generators`.
pub fn groebner_basis(generators: &[MultiPoly], order: MonomialOrder, limits: GroebnerLimits) -> Result<GroebnerBasis> {
    let nvars = generators
        .first()
        .ok_or_else(|| Error::InvalidInput("ideal needs at least one generator".into()))?
        .nvars();
    let mut basis: Vec<Terms> = Vec::new();
    // pairs keyed by (lcm degree, i, j) for the normal strategy
    let mut pairs: BTreeSet<(u32, usize, usize)> = BTreeSet::new();
    let mut pairs_reduced = 0;

    let add = |basis: &mut Vec<Terms>, pairs: &mut BTreeSet<(u32, usize, usize)>, mut t: Terms| {
        make_monic(&mut t);
        let k = basis.len();
        for (i, g) in basis.iter().enumerate() {
            let l = g[0].0.lcm(&t[0].0);
            pairs.insert((l.degree(), i, k));
        }
        basis.push(t);
    };

    for g in generators {
        if g.nvars() != nvars {
            return Err(Error::InvalidInput("generators live in different rings".into()));
        }
        let r = reduce(to_terms(g, order), &basis, order);
        if !r.is_empty() {
            add(&mut basis, &mut pairs, r);
        }
    }

    while let Some(&key) = pairs.iter().next() {
        pairs.remove(&key);
        let (_, i, j) = key;
        let (li, lj) = (&basis[i][0].0, &basis[j][0].0);
        if li.is_coprime(lj) {
            continue;
        }
        let l = li.lcm(lj);
        let pending = |a: usize, b: usize| {
            let (a, b) = (a.min(b), a.max(b));
            let d = basis[a][0].0.lcm(&basis[b][0].0).degree();
            pairs.contains(&(d, a, b))
        };
        let chain = (0..basis.len())
            .any(|k| k != i && k != j && basis[k][0].0.divides(&l) && !pending(i, k) && !pending(j, k));
        if chain {
            continue;
        }
        pairs_reduced += 1;
        if pairs_reduced > limits.max_pairs {
            return Err(Error::ResourceCap(format!("S-pair budget of {} exhausted", limits.max_pairs)));
        }
        let qi = li.quotient(&l);
        let qj = lj.quotient(&l);
        let s = sub_mul(
            &sub_mul(&Vec::new(), &-Rational::one(), &qi, &basis[i], order),
            &Rational::one(),
            &qj,
            &basis[j],
            order,
        );
        let r = reduce(s, &basis, order);
        if !r.is_empty() {
            if coeff_bits(&r) > limits.max_coeff_bits {
                return Err(Error::ResourceCap(format!(
                    "coefficient size exceeded {} bits",
                    limits.max_coeff_bits
                )));
            }
            add(&mut basis, &mut pairs, r);
        }
    }

    // minimal, then reduced
    let lts: Vec<Monomial> = basis.iter().map(|t| t[0].0.clone()).collect();
    let mut keep: Vec<usize> = Vec::new();
    for i in 0..basis.len() {
        let redundant = (0..basis.len()).any(|j| {
            j != i && lts[j].divides(&lts[i]) && (lts[j] != lts[i] || j < i)
        });
        if !redundant {
            keep.push(i);
        }
    }
    let minimal: Vec<Terms> = keep.into_iter().map(|i| basis[i].clone()).collect();
    let mut reduced = Vec::with_capacity(minimal.len());
    for (i, g) in minimal.iter().enumerate() {
        let others: Vec<Terms> = minimal
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, h)| h.clone())
            .collect();
        let head = g[0].clone();
        let mut tail = reduce(g[1..].to_vec(), &others, order);
        tail.insert(0, head);
        reduced.push(tail);
    }
    reduced.sort_by(|a, b| order.cmp(&a[0].0, &b[0].0));
    Ok(GroebnerBasis { nvars, order, elements: reduced, pairs_reduced })
}
