//! Derivative spans, the Vandermonde product and the determinants `D_μ`,
//! with graded `S_n`-characters computed by exact linear algebra.
//!
//! The symmetric group acts diagonally: `w·x_i = x_{w(i)}` and
//! `w·y_i = y_{w(i)}`. Characters are evaluated on one permutation per
//! cycle type and decomposed with the Murnaghan–Nakayama rule.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::intpoly::QPolynomial;
use crate::linalg::Echelon;
use crate::poly::{Exp, Monomial, MultiPoly, VarSplit};
use crate::symfunc::permutation_sign;
use crate::tableaux::{diagram_coords, enumerate_partitions, factorial, CellCoord, Partition};
use crate::Rational;

/// Per-bidegree echelon bases of a span closed under differentiation.
#[derive(Clone, Debug)]
pub struct GradedSpan {
    split: VarSplit,
    parts: BTreeMap<(u32, u32), Echelon>,
}

impl GradedSpan {
    pub fn split(&self) -> VarSplit {
        self.split
    }

    pub fn dim(&self) -> usize {
        self.parts.values().map(Echelon::dim).sum()
    }

    pub fn bigraded_dims(&self) -> BTreeMap<(u32, u32), usize> {
        self.parts.iter().map(|(&k, e)| (k, e.dim())).collect()
    }

    pub fn component(&self, bidegree: (u32, u32)) -> Option<&Echelon> {
        self.parts.get(&bidegree)
    }

    pub fn components(&self) -> impl Iterator<Item = (&(u32, u32), &Echelon)> {
        self.parts.iter()
    }

    /// `Σ dim · q^{i+j}`.
    pub fn hilbert_series(&self) -> QPolynomial {
        let mut coeffs = Vec::new();
        for (&(i, j), e) in &self.parts {
            let d = (i + j) as usize;
            if coeffs.len() <= d {
                coeffs.resize(d + 1, BigInt::zero());
            }
            coeffs[d] += e.dim();
        }
        QPolynomial::from_coeffs(coeffs)
    }

    /// Whether every first partial derivative of every basis element lies in
    /// the span.
    pub fn is_closed(&self) -> bool {
        self.parts.iter().all(|(&(i, j), e)| {
            e.basis().iter().all(|b| {
                (0..self.split.nvars()).all(|v| {
                    let d = b.derivative(v);
                    if d.is_zero() {
                        return true;
                    }
                    let target = if v < self.split.x_vars { (i - 1, j) } else { (i, j - 1) };
                    self.parts.get(&target).is_some_and(|t| t.contains(&d))
                })
            })
        })
    }
}

/// The span of `P` and all its partial derivatives, built top-down one
/// total degree at a time. `P` must be bihomogeneous for `split`.
pub fn derivative_span(p: &MultiPoly, split: VarSplit) -> Result<GradedSpan> {
    if p.is_zero() {
        return Err(Error::InvalidInput("derivative span of the zero polynomial".into()));
    }
    if p.nvars() != split.nvars() {
        return Err(Error::InvalidInput(format!(
            "polynomial has {} variables, split expects {}",
            p.nvars(),
            split.nvars()
        )));
    }
    let top = p.bidegree(split).ok_or(Error::NotHomogeneous)?;
    let mut parts: BTreeMap<(u32, u32), Echelon> = BTreeMap::new();
    parts.entry(top).or_insert_with(|| Echelon::new(p.nvars())).insert(p);
    for degree in (1..=top.0 + top.1).rev() {
        let level: Vec<(u32, u32)> = parts.keys().copied().filter(|&(i, j)| i + j == degree).collect();
        for bideg in level {
            let basis = parts[&bideg].basis();
            for b in &basis {
                for v in 0..split.nvars() {
                    let d = b.derivative(v);
                    if d.is_zero() {
                        continue;
                    }
                    let target = if v < split.x_vars { (bideg.0 - 1, bideg.1) } else { (bideg.0, bideg.1 - 1) };
                    parts.entry(target).or_insert_with(|| Echelon::new(p.nvars())).insert(&d);
                }
            }
        }
    }
    Ok(GradedSpan { split, parts })
}

/// `V_n = ∏_{i<j} (x_i − x_j)`.
pub fn vandermonde(n: usize) -> MultiPoly {
    let mut v = MultiPoly::one(n);
    for i in 0..n {
        for j in i + 1..n {
            v = &v * &(&MultiPoly::var(n, i) - &MultiPoly::var(n, j));
        }
    }
    v
}

/// `det |x_r^{i_s} y_r^{j_s}|` over `x₁..x_n, y₁..y_n`, expanded over
/// permutations. Every permutation contributes a distinct monomial.
pub fn gh_determinant(cells: &[CellCoord]) -> Result<MultiPoly> {
    let n = cells.len();
    for (a, c) in cells.iter().enumerate() {
        if cells[..a].contains(c) {
            return Err(Error::InvalidInput(format!(
                "cell ({}, {}) repeated: determinant vanishes",
                c.row, c.col
            )));
        }
    }
    let mut terms = Vec::new();
    crate::lis::for_each_permutation(n, |sigma| {
        let mut e = vec![0 as Exp; 2 * n];
        for (r, &s) in sigma.iter().enumerate() {
            e[r] = cells[s].row as Exp;
            e[n + r] = cells[s].col as Exp;
        }
        let sign = if permutation_sign(sigma) { -1 } else { 1 };
        terms.push((Monomial::from_exps(&e), Rational::from_integer(sign.into())));
    });
    Ok(MultiPoly::from_terms(2 * n, terms))
}

/// `D_μ` with cells in row-major diagram order.
pub fn d_mu(mu: &Partition) -> MultiPoly {
    gh_determinant(&diagram_coords(mu)).expect("diagram cells are distinct")
}

/// A permutation of `0..n` with the given cycle type, cycles laid out on
/// consecutive points.
pub fn class_representative(rho: &Partition) -> Vec<usize> {
    let n = rho.size() as usize;
    let mut perm = vec![0; n];
    let mut start = 0;
    for &len in rho.parts() {
        let len = len as usize;
        for k in 0..len {
            perm[start + k] = start + (k + 1) % len;
        }
        start += len;
    }
    perm
}

/// `n! / z_ρ`.
pub fn class_size(rho: &Partition) -> BigInt {
    let mut z = BigInt::one();
    for (i, &m) in rho.multiplicities().iter().enumerate() {
        let part = BigInt::from(i as u32);
        for _ in 0..m {
            z *= &part;
        }
        z *= BigInt::from(factorial(m));
    }
    BigInt::from(factorial(rho.size())) / z
}

/// `χ^λ(ρ)` by removing border strips of lengths `ρ₁, ρ₂, …` from a beta
/// set of `λ`.
pub fn mn_character(lambda: &Partition, rho: &Partition) -> Result<i64> {
    if lambda.size() != rho.size() {
        return Err(Error::InvalidInput(format!("|{lambda}| ≠ |{rho}|")));
    }
    let len = lambda.len();
    let beta: Vec<u32> = (0..len).map(|i| lambda.part(i) + (len - 1 - i) as u32).collect();
    fn rec(beta: &mut Vec<u32>, strips: &[u32]) -> i64 {
        let Some((&r, rest)) = strips.split_first() else {
            return 1;
        };
        let mut total = 0;
        for idx in 0..beta.len() {
            let b = beta[idx];
            if b < r || beta.contains(&(b - r)) {
                continue;
            }
            let between = beta.iter().filter(|&&c| c > b - r && c < b).count();
            beta[idx] = b - r;
            let sign = if between % 2 == 0 { 1 } else { -1 };
            total += sign * rec(beta, rest);
            beta[idx] = b;
        }
        total
    }
    let mut beta = beta;
    Ok(rec(&mut beta, rho.parts()))
}

/// Traces of one permutation per cycle type on each bidegree.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub n: usize,
    /// Cycle types in reverse lexicographic order.
    pub classes: Vec<Partition>,
    pub traces: BTreeMap<(u32, u32), Vec<i64>>,
}

impl CharacterTable {
    /// Character of the whole module.
    pub fn total(&self) -> Vec<i64> {
        let mut out = vec![0; self.classes.len()];
        for row in self.traces.values() {
            for (o, t) in out.iter_mut().zip(row) {
                *o += t;
            }
        }
        out
    }
}

/// Graded character of a span invariant under the diagonal action of
/// `S_n`, where `n` is the size of each variable block.
pub fn graded_character(span: &GradedSpan, n: usize) -> Result<CharacterTable> {
    let split = span.split;
    if split.x_vars != n || (split.y_vars != 0 && split.y_vars != n) {
        return Err(Error::InvalidInput(format!("span variables do not form blocks of size {n}")));
    }
    // invariance under the adjacent transpositions, which generate S_n
    for e in span.parts.values() {
        for b in e.basis() {
            for i in 0..n.saturating_sub(1) {
                let mut perm: Vec<usize> = (0..n).collect();
                perm.swap(i, i + 1);
                if !e.contains(&b.permuted(&perm, n)) {
                    return Err(Error::NotInvariant);
                }
            }
        }
    }
    let classes = enumerate_partitions(n as u32, None);
    let traces = span
        .parts
        .par_iter()
        .map(|(&bideg, e)| {
            let row = classes
                .iter()
                .map(|rho| {
                    let perm = class_representative(rho);
                    let t = e.trace_of(|p| p.permuted(&perm, n));
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

/// `⟨χ, χ^λ⟩` for a class function given on `classes`.
pub fn decompose(n: usize, classes: &[Partition], chi: &[i64]) -> Result<BTreeMap<Partition, u64>> {
    let order = BigInt::from(factorial(n as u32));
    let sizes: Vec<BigInt> = classes.iter().map(class_size).collect();
    let mut out = BTreeMap::new();
    for lambda in enumerate_partitions(n as u32, None) {
        let mut s = BigInt::zero();
        for ((rho, size), &c) in classes.iter().zip(&sizes).zip(chi) {
            s += size * BigInt::from(c) * BigInt::from(mn_character(&lambda, rho)?);
        }
        if (&s % &order) != BigInt::zero() || s.is_negative() {
            return Err(Error::Consistency(format!(
                "multiplicity of {lambda} is {s}/{order}, not a nonnegative integer"
            )));
        }
        let m = (s / &order).to_u64().expect("small multiplicity");
        if m > 0 {
            out.insert(lambda, m);
        }
    }
    Ok(out)
}

/// `mult(M_λ, ·)` for every bidegree of the table.
pub fn irreducible_multiplicities(table: &CharacterTable) -> Result<BTreeMap<(u32, u32), BTreeMap<Partition, u64>>> {
    table
        .traces
        .iter()
        .map(|(&bideg, chi)| Ok((bideg, decompose(table.n, &table.classes, chi)?)))
        .collect()
}

/// Summary of `∂D_X` for one cell set.
#[derive(Clone, Debug, Serialize)]
pub struct CellSetDimension {
    pub cells: Vec<(u32, u32)>,
    pub dim: usize,
    /// `dim / n!` when it divides evenly.
    pub k: Option<usize>,
}

/// `dim ∂D_X` for every `size`-element subset `X` of the `side × side`
/// grid.
pub fn cell_set_sweep(side: u32, size: usize) -> Result<Vec<CellSetDimension>> {
    let grid: Vec<CellCoord> = (0..side).flat_map(|r| (0..side).map(move |c| CellCoord::new(r, c))).collect();
    let mut subsets = Vec::new();
    fn choose(start: usize, k: usize, grid: &[CellCoord], cur: &mut Vec<CellCoord>, out: &mut Vec<Vec<CellCoord>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..grid.len() {
            cur.push(grid[i]);
            choose(i + 1, k, grid, cur, out);
            cur.pop();
        }
    }
    choose(0, size, &grid, &mut Vec::new(), &mut subsets);
    let nfact = factorial(size as u32).to_usize().expect("small n");
    subsets
        .par_iter()
        .map(|cells| {
            let d = gh_determinant(cells)?;
            let dim = derivative_span(&d, VarSplit::diagonal(size))?.dim();
            Ok(CellSetDimension {
                cells: cells.iter().map(|c| (c.row, c.col)).collect(),
                dim,
                k: (dim % nfact == 0).then_some(dim / nfact),
            })
        })
        .collect()
}

/// Result of the `∂D_μ` computation for one shape.
#[derive(Clone, Debug)]
pub struct NFactorialReport {
    pub mu: Partition,
    pub dim: usize,
    pub bigraded_dims: BTreeMap<(u32, u32), usize>,
    pub multiplicities: BTreeMap<(u32, u32), BTreeMap<Partition, u64>>,
}

pub fn n_factorial_report(mu: &Partition) -> Result<NFactorialReport> {
    let n = mu.size() as usize;
    let span = derivative_span(&d_mu(mu), VarSplit::diagonal(n))?;
    let table = graded_character(&span, n)?;
    Ok(NFactorialReport {
        mu: mu.clone(),
        dim: span.dim(),
        bigraded_dims: span.bigraded_dims(),
        multiplicities: irreducible_multiplicities(&table)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;
    use crate::tableaux::{count_syt, maj_multiplicity, q_factorial};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn single(q: &MultiPoly) -> GradedSpan {
        derivative_span(q, VarSplit::single(q.nvars())).unwrap()
    }

    #[test]
    fn span_examples() {
        let x = MultiPoly::var(2, 0);
        let y = MultiPoly::var(2, 1);
        let s = &x + &y;
        // both first partials are 2(x + y): basis (x + y)², x + y, 1
        assert_eq!(single(&(&s * &s)).dim(), 3);
        assert_eq!(single(&(&x * &y)).dim(), 4);
        assert_eq!(single(&MultiPoly::one(2)).dim(), 1);
        assert_eq!(single(&vandermonde(2)).dim(), 2);
        assert!(derivative_span(&MultiPoly::zero(2), VarSplit::single(2)).is_err());
        assert!(derivative_span(&(&x + &(&y * &y)), VarSplit::single(2)).is_err());
    }

    #[test]
    fn vandermonde_examples() {
        assert_eq!(vandermonde(1), MultiPoly::one(1));
        assert_eq!(vandermonde(2), &MultiPoly::var(2, 0) - &MultiPoly::var(2, 1));
        let v3 = vandermonde(3);
        assert_eq!(v3.len(), 6);
        assert_eq!(v3.swapped(0, 1), -&v3);
    }

    #[test]
    fn d_mu_row_and_column() {
        for n in 1..=4usize {
            let col = d_mu(&Partition::new(vec![1; n]).unwrap());
            let row = d_mu(&Partition::new(vec![n as u32]).unwrap());
            let vx = vandermonde(n).widened(2 * n);
            let map: Vec<usize> = (n..2 * n).collect();
            let vy = vandermonde(n).relabeled(2 * n, &map);
            assert!(col == vx || col == -&vx, "n = {n}");
            assert!(row == vy || row == -&vy, "n = {n}");
        }
    }

    #[test]
    fn d_32_matches_displayed_matrix() {
        // columns 1, y, y², x, xy
        let cells = diagram_coords(&p("3,2"));
        let exps: Vec<(u32, u32)> = cells.iter().map(|c| (c.row, c.col)).collect();
        assert_eq!(exps, [(0, 0), (0, 1), (0, 2), (1, 0), (1, 1)]);
        let d = d_mu(&p("3,2"));
        assert_eq!(d.len(), 120);
        // diagonal term 1 · y2 · y3² · x4 · x5y5
        let mut e = [0 as Exp; 10];
        e[3] = 1;
        e[4] = 1;
        e[6] = 1;
        e[7] = 2;
        e[9] = 1;
        assert_eq!(d.coeff(&Monomial::from_exps(&e)), rat(1));
    }

    #[test]
    fn repeated_cells_rejected() {
        let c = CellCoord::new(0, 1);
        assert!(gh_determinant(&[c, c]).is_err());
    }

    #[test]
    fn d_mu_antisymmetry() {
        let d = d_mu(&p("2,1,1"));
        for i in 0..3 {
            let mut perm: Vec<usize> = (0..4).collect();
            perm.swap(i, i + 1);
            assert_eq!(d.permuted(&perm, 4), -&d);
        }
    }

    #[test]
    fn character_examples() {
        assert_eq!(mn_character(&p("3"), &p("2,1")).unwrap(), 1);
        assert_eq!(mn_character(&p("1,1"), &p("2")).unwrap(), -1);
        assert_eq!(mn_character(&p("2,1"), &p("1,1,1")).unwrap(), 2);
        assert_eq!(mn_character(&p("2,1"), &p("3")).unwrap(), -1);
        assert_eq!(mn_character(&p("2,2"), &p("2,2")).unwrap(), 2);
        assert!(mn_character(&p("2"), &p("1")).is_err());
    }

    #[test]
    fn character_orthogonality() {
        for n in 1..=6u32 {
            let classes = enumerate_partitions(n, None);
            let order = BigInt::from(factorial(n));
            for a in &classes {
                for b in &classes {
                    let s: BigInt = classes
                        .iter()
                        .map(|rho| {
                            class_size(rho)
                                * mn_character(a, rho).unwrap()
                                * mn_character(b, rho).unwrap()
                        })
                        .sum();
                    assert_eq!(s, if a == b { order.clone() } else { BigInt::zero() });
                }
                assert_eq!(
                    BigInt::from(mn_character(a, &Partition::new(vec![1; n as usize]).unwrap()).unwrap()),
                    BigInt::from(count_syt(a))
                );
            }
        }
    }

    #[test]
    fn v2_character() {
        let span = single(&vandermonde(2));
        let t = graded_character(&span, 2).unwrap();
        assert_eq!(t.classes, vec![p("2"), p("1,1")]);
        assert_eq!(t.traces[&(0, 0)], vec![1, 1]);
        assert_eq!(t.traces[&(1, 0)], vec![-1, 1]);
    }

    #[test]
    fn vandermonde_span_is_regular() {
        for n in 1..=4usize {
            let span = single(&vandermonde(n));
            assert_eq!(span.dim(), factorial(n as u32).to_usize().unwrap());
            assert!(span.is_closed());
            let t = graded_character(&span, n).unwrap();
            let total = t.total();
            for (rho, tr) in t.classes.iter().zip(&total) {
                let expected = if rho.parts().iter().all(|&a| a == 1) { span.dim() as i64 } else { 0 };
                assert_eq!(*tr, expected, "n = {n}, class {rho}");
            }
            assert_eq!(span.hilbert_series().reversed(), q_factorial(n as u32));
        }
    }

    #[test]
    fn maj_theorem_n4() {
        let n = 4;
        let span = single(&vandermonde(n));
        let mult = irreducible_multiplicities(&graded_character(&span, n).unwrap()).unwrap();
        for lambda in enumerate_partitions(n as u32, None) {
            for (&(i, _), m) in &mult {
                assert_eq!(m.get(&lambda).copied().unwrap_or(0), maj_multiplicity(&lambda, i), "{lambda} {i}");
            }
        }
    }

    #[test]
    fn n_factorial_small() {
        for n in 1..=3u32 {
            for mu in enumerate_partitions(n, None) {
                let r = n_factorial_report(&mu).unwrap();
                assert_eq!(r.dim, factorial(n).to_usize().unwrap(), "{mu}");
            }
        }
    }

    #[test]
    fn non_invariant_span_rejected() {
        let span = single(&MultiPoly::var(2, 0));
        assert_eq!(graded_character(&span, 2).unwrap_err(), Error::NotInvariant);
    }
}
