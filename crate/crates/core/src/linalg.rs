//! Exact linear algebra on spans of polynomials.
//!
//! An [`Echelon`] keeps a basis in reduced row echelon form, with each row a
//! sparse vector indexed by monomials. The pivot of a row is its
//! lex-largest monomial; no other row has a nonzero entry there.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::poly::{Monomial, MultiPoly};
use crate::Rational;

#[derive(Clone, Debug, Default)]
pub struct Echelon {
    nvars: usize,
    rows: BTreeMap<Monomial, BTreeMap<Monomial, Rational>>,
}

impl Echelon {
    pub fn new(nvars: usize) -> Self {
        Echelon { nvars, rows: BTreeMap::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = &Monomial> {
        self.rows.keys()
    }

    /// Basis rows as polynomials, ordered by pivot.
    pub fn basis(&self) -> Vec<MultiPoly> {
        self.rows
            .values()
            .map(|r| MultiPoly::from_terms(self.nvars, r.iter().map(|(m, c)| (m.clone(), c.clone()))))
            .collect()
    }

    /// Remainder of `p` after eliminating every pivot entry.
    pub fn reduce(&self, p: &MultiPoly) -> BTreeMap<Monomial, Rational> {
        let mut v: BTreeMap<Monomial, Rational> =
            p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
        self.reduce_vec(&mut v);
        v
    }

    fn reduce_vec(&self, v: &mut BTreeMap<Monomial, Rational>) {
        // rows are fully reduced, so one pass over the pivots suffices
        for (pivot, row) in &self.rows {
            let Some(c) = v.get(pivot).cloned() else { continue };
            for (m, a) in row {
                let e = v.entry(m.clone()).or_insert_with(Rational::zero);
                *e -= &c * a;
                if e.is_zero() {
                    v.remove(m);
                }
            }
        }
    }

    pub fn contains(&self, p: &MultiPoly) -> bool {
        self.reduce(p).is_empty()
    }

    /// Adds `p` to the span. Returns whether the dimension grew.
    pub fn insert(&mut self, p: &MultiPoly) -> bool {
        let mut v = self.reduce(p);
        let Some((pivot, lead)) = v.iter().next_back().map(|(m, c)| (m.clone(), c.clone())) else {
            return false;
        };
        if !lead.is_one() {
            let inv = lead.recip();
            for c in v.values_mut() {
                *c *= &inv;
            }
        }
        for row in self.rows.values_mut() {
            let Some(c) = row.get(&pivot).cloned() else { continue };
            for (m, a) in &v {
                let e = row.entry(m.clone()).or_insert_with(Rational::zero);
                *e -= &c * a;
                if e.is_zero() {
                    row.remove(m);
                }
            }
        }
        self.rows.insert(pivot, v);
        true
    }

    /// Coordinates of `p` in the basis, keyed by pivot, or `None` when `p`
    /// is outside the span.
    pub fn coords(&self, p: &MultiPoly) -> Option<BTreeMap<Monomial, Rational>> {
        if !self.contains(p) {
            return None;
        }
        Some(
            self.rows
                .keys()
                .filter_map(|pivot| {
                    let c = p.coeff(pivot);
                    (!c.is_zero()).then(|| (pivot.clone(), c))
                })
                .collect(),
        )
    }

    /// Trace of a linear map that preserves the span, given its action on
    /// polynomials.
    pub fn trace_of(&self, f: impl Fn(&MultiPoly) -> MultiPoly) -> Rational {
        let mut t = Rational::zero();
        for (pivot, row) in &self.rows {
            let p = MultiPoly::from_terms(self.nvars, row.iter().map(|(m, c)| (m.clone(), c.clone())));
            t += f(&p).coeff(pivot);
        }
        t
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    fn x(i: usize) -> MultiPoly {
        MultiPoly::var(3, i)
    }

    #[test]
    fn span_dimension() {
        let mut e = Echelon::new(3);
        assert!(e.insert(&(&x(0) + &x(1))));
        assert!(e.insert(&(&x(1) + &x(2))));
        assert!(!e.insert(&(&x(0) - &x(2))));
        assert!(e.contains(&(&x(0) + &(&x(1).scale(&rat(2)) + &x(2)))));
        assert!(!e.contains(&x(0)));
        assert_eq!(e.dim(), 2);
    }

    #[test]
    fn coordinates_reconstruct() {
        let mut e = Echelon::new(3);
        e.insert(&(&x(0) + &x(1)));
        e.insert(&(&x(1) + &x(2)));
        let p = &x(0).scale(&rat(3)) + &(&x(1).scale(&rat(5)) + &x(2).scale(&rat(2)));
        let coords = e.coords(&p).unwrap();
        let mut rebuilt = MultiPoly::zero(3);
        for (b, pivot) in e.basis().iter().zip(e.pivots()) {
            rebuilt = &rebuilt + &b.scale(&coords[pivot]);
        }
        assert_eq!(rebuilt, p);
    }

    #[test]
    fn trace_of_swap() {
        let mut e = Echelon::new(3);
        for i in 0..3 {
            e.insert(&x(i));
        }
        // transposition of x1, x2 has trace 1 on the linear forms
        assert_eq!(e.trace_of(|p| p.swapped(0, 1)), rat(1));
        assert_eq!(e.trace_of(|p| p.clone()), rat(3));
    }
}
