//! Schur polynomials, Kostka numbers and Littlewood-Richardson coefficients.
//!
//! Two independent routes to `c_{μν}^λ` are provided:
//!
//! - [`lr_coefficient`] counts LR skew tableaux directly;
//! - [`schur_expand`] of `s_μ · s_ν` performs leading-monomial elimination
//!   against [`schur_poly`], which itself sums over semistandard tableaux.
//!
//! Lattice words are read in reverse reading order: rows top to bottom, each
//! row right to left.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{Exp, Monomial, MultiPoly};
use crate::tableaux::Partition;
use crate::Rational;

/// Default cap on `|λ|` for Schur polynomial construction.
pub const DEFAULT_DEGREE_CAP: u32 = 12;

/// `e_k(x₁..x_n)`; zero when `k > n`.
pub fn elementary_symmetric(k: usize, n_vars: usize) -> MultiPoly {
    let mut p = MultiPoly::zero(n_vars);
    if k > n_vars {
        return p;
    }
    fn rec(start: usize, left: usize, cur: &mut Vec<Exp>, p: &mut MultiPoly) {
        if left == 0 {
            p.add_term(Monomial::from_exps(cur), Rational::one());
            return;
        }
        for i in start..=cur.len() - left {
            cur[i] = 1;
            rec(i + 1, left - 1, cur, p);
            cur[i] = 0;
        }
    }
    rec(0, k, &mut vec![0; n_vars], &mut p);
    p
}

/// Partitions `μ ⊆ λ` with `λ/μ` a horizontal strip and `ℓ(μ) ≤ max_len`.
fn horizontal_strips_below(lambda: &Partition, max_len: usize) -> Vec<Partition> {
    let l = lambda.parts();
    if l.len() > max_len + 1 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut cur = vec![0u32; l.len()];
    fn rec(i: usize, l: &[u32], max_len: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if i == l.len() {
            if cur.iter().filter(|&&p| p > 0).count() <= max_len {
                out.push(Partition::from_unsorted(cur.clone()));
            }
            return;
        }
        let lo = l.get(i + 1).copied().unwrap_or(0);
        for m in lo..=l[i] {
            cur[i] = m;
            rec(i + 1, l, max_len, cur, out);
        }
    }
    rec(0, l, max_len, &mut cur, &mut out);
    out
}

type Contents = HashMap<Vec<Exp>, BigInt>;

/// Content distribution of semistandard tableaux of shape `λ` with entries
/// at most `n`: the entries equal to `n` form a horizontal strip.
fn ssyt_contents(lambda: &Partition, n: usize, memo: &mut HashMap<(Partition, usize), Contents>) -> Contents {
    if let Some(c) = memo.get(&(lambda.clone(), n)) {
        return c.clone();
    }
    let mut out = Contents::new();
    if n == 0 {
        if lambda.is_empty() {
            out.insert(Vec::new(), BigInt::one());
        }
    } else if lambda.len() <= n {
        for mu in horizontal_strips_below(lambda, n - 1) {
            let k = (lambda.size() - mu.size()) as Exp;
            for (content, count) in ssyt_contents(&mu, n - 1, memo) {
                let mut c = content;
                c.push(k);
                *out.entry(c).or_default() += count;
            }
        }
    }
    memo.insert((lambda.clone(), n), out.clone());
    out
}

/// `s_λ(x₁..x_n)` as the content sum over semistandard tableaux.
///
/// Returns the zero polynomial when `ℓ(λ) > n_vars`. Fails when `|λ|`
/// exceeds [`DEFAULT_DEGREE_CAP`]; see [`schur_poly_capped`].
pub fn schur_poly(lambda: &Partition, n_vars: usize) -> Result<MultiPoly> {
    schur_poly_capped(lambda, n_vars, DEFAULT_DEGREE_CAP)
}

pub fn schur_poly_capped(lambda: &Partition, n_vars: usize, degree_cap: u32) -> Result<MultiPoly> {
    if lambda.size() > degree_cap {
        return Err(Error::ResourceCap(format!(
            "|λ| = {} exceeds the degree cap {degree_cap}",
            lambda.size()
        )));
    }
    let contents = ssyt_contents(lambda, n_vars, &mut HashMap::new());
    Ok(MultiPoly::from_terms(
        n_vars,
        contents
            .into_iter()
            .map(|(e, c)| (Monomial::from_exps(&e), Rational::from_integer(c))),
    ))
}

/// `s_λ` as the ratio of alternants `a_{λ+δ} / a_δ`.
pub fn schur_bialternant(lambda: &Partition, n_vars: usize) -> MultiPoly {
    let n = n_vars;
    let Some(parts) = lambda.padded(n) else {
        return MultiPoly::zero(n);
    };
    let alternant = |shift: &[u32]| {
        let mut p = MultiPoly::zero(n);
        crate::lis::for_each_permutation(n, |perm| {
            let mut e = vec![0 as Exp; n];
            for (j, &i) in perm.iter().enumerate() {
                e[i] = (shift[j] + (n - 1 - j) as u32) as Exp;
            }
            let sign = if permutation_sign(perm) { -1 } else { 1 };
            p.add_term(Monomial::from_exps(&e), Rational::from_integer(BigInt::from(sign)));
        });
        p
    };
    let num = alternant(&parts);
    let den = alternant(&vec![0; n]);
    num.exact_div(&den).expect("alternant quotient is exact")
}

/// `true` for odd permutations.
pub(crate) fn permutation_sign(perm: &[usize]) -> bool {
    let mut seen = vec![false; perm.len()];
    let mut odd = false;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        if len % 2 == 0 {
            odd = !odd;
        }
    }
    odd
}

/// Number of semistandard tableaux of shape `λ` and content `μ` (any
/// composition), by direct cell-by-cell filling. Zero on size mismatch.
pub fn kostka(lambda: &Partition, mu: &[u32]) -> u64 {
    if lambda.size() != mu.iter().sum::<u32>() {
        return 0;
    }
    let cells: Vec<(usize, usize)> = lambda
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(i, &l)| (0..l as usize).map(move |j| (i, j)))
        .collect();
    let mut grid: Vec<Vec<u32>> = lambda.parts().iter().map(|&l| vec![0; l as usize]).collect();
    let mut remaining = mu.to_vec();
    fn rec(
        k: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<u32>>,
        remaining: &mut Vec<u32>,
    ) -> u64 {
        if k == cells.len() {
            return 1;
        }
        let (i, j) = cells[k];
        let left = if j > 0 { grid[i][j - 1] } else { 1 };
        let above = if i > 0 { grid[i - 1][j] + 1 } else { 1 };
        let lo = left.max(above);
        let mut total = 0;
        for v in lo..=remaining.len() as u32 {
            if remaining[v as usize - 1] == 0 {
                continue;
            }
            remaining[v as usize - 1] -= 1;
            grid[i][j] = v;
            total += rec(k + 1, cells, grid, remaining);
            remaining[v as usize - 1] += 1;
        }
        total
    }
    rec(0, &cells, &mut grid, &mut remaining)
}

/// `c_{μν}^λ` by counting LR tableaux of shape `λ/μ` and content `ν`.
pub fn lr_coefficient(mu: &Partition, nu: &Partition, lambda: &Partition) -> u64 {
    lr_count(mu, nu, lambda, false)
}

/// Whether `c_{μν}^λ ≠ 0`, stopping at the first LR tableau found.
pub fn lr_nonzero(mu: &Partition, nu: &Partition, lambda: &Partition) -> bool {
    lr_count(mu, nu, lambda, true) > 0
}

fn lr_count(mu: &Partition, nu: &Partition, lambda: &Partition, first_only: bool) -> u64 {
    if lambda.size() != mu.size() + nu.size() || !lambda.contains(mu) {
        return 0;
    }
    if nu.len() > lambda.len() {
        return 0;
    }
    // Skew cells in reverse reading order: row by row, right to left.
    let cells: Vec<(usize, usize)> = (0..lambda.len())
        .flat_map(|i| {
            (mu.part(i) as usize..lambda.part(i) as usize)
                .rev()
                .map(move |j| (i, j))
        })
        .collect();
    let mut grid: Vec<Vec<u32>> = lambda.parts().iter().map(|&l| vec![0; l as usize]).collect();
    let mut counts = vec![0u32; nu.len() + 1];

    struct Ctx<'a> {
        cells: &'a [(usize, usize)],
        mu: &'a Partition,
        nu: &'a Partition,
        first_only: bool,
    }

    fn rec(k: usize, ctx: &Ctx, grid: &mut Vec<Vec<u32>>, counts: &mut Vec<u32>) -> u64 {
        if k == ctx.cells.len() {
            return 1;
        }
        let (i, j) = ctx.cells[k];
        // Rows weakly increase left to right: bounded above by the right neighbour.
        let hi_row = if j + 1 < grid[i].len() { grid[i][j + 1] } else { u32::MAX };
        // Columns strictly increase: bounded below by the cell above when it is skew.
        let lo_col = if i > 0 && j >= ctx.mu.part(i - 1) as usize { grid[i - 1][j] + 1 } else { 1 };
        let hi = hi_row.min(ctx.nu.len() as u32).min(i as u32 + 1);
        let mut total = 0;
        for v in lo_col..=hi {
            let vi = v as usize;
            if counts[vi] >= ctx.nu.part(vi - 1) {
                continue;
            }
            if vi > 1 && counts[vi] + 1 > counts[vi - 1] {
                continue;
            }
            counts[vi] += 1;
            grid[i][j] = v;
            total += rec(k + 1, ctx, grid, counts);
            counts[vi] -= 1;
            if ctx.first_only && total > 0 {
                break;
            }
        }
        total
    }

    let ctx = Ctx { cells: &cells, mu, nu, first_only };
    rec(0, &ctx, &mut grid, &mut counts)
}

/// Coefficients of a symmetric polynomial in the Schur basis.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SchurExpansion(pub BTreeMap<Partition, Rational>);

impl SchurExpansion {
    pub fn coeff(&self, lambda: &Partition) -> Rational {
        self.0.get(lambda).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Memoised Schur polynomials in a fixed number of variables.
#[derive(Debug)]
pub struct SchurBasis {
    n_vars: usize,
    degree_cap: u32,
    cache: HashMap<Partition, MultiPoly>,
}

impl SchurBasis {
    pub fn new(n_vars: usize) -> Self {
        Self::with_cap(n_vars, DEFAULT_DEGREE_CAP)
    }

    pub fn with_cap(n_vars: usize, degree_cap: u32) -> Self {
        SchurBasis { n_vars, degree_cap, cache: HashMap::new() }
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn get(&mut self, lambda: &Partition) -> Result<&MultiPoly> {
        if !self.cache.contains_key(lambda) {
            let s = schur_poly_capped(lambda, self.n_vars, self.degree_cap)?;
            self.cache.insert(lambda.clone(), s);
        }
        Ok(&self.cache[lambda])
    }
}

/// Expands a symmetric polynomial in the Schur basis of its own variable
/// universe.
///
/// Partitions longer than `n_vars` are invisible in `n_vars` variables, so
/// callers expanding products should build them in at least `degree`
/// variables (see [`schur_product`]).
pub fn schur_expand(p: &MultiPoly) -> Result<SchurExpansion> {
    schur_expand_with(&mut SchurBasis::new(p.nvars()), p)
}

pub fn schur_expand_with(basis: &mut SchurBasis, p: &MultiPoly) -> Result<SchurExpansion> {
    if basis.n_vars() != p.nvars() {
        return Err(Error::InvalidInput("basis arity differs from the polynomial".into()));
    }
    if !p.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let mut rem = p.clone();
    let mut out = BTreeMap::new();
    while let Some((m, c)) = rem.lex_leading() {
        if !m.is_dominant() {
            return Err(Error::Consistency(format!("non-dominant leading monomial {m:?}")));
        }
        let lambda = Partition::from_unsorted(m.exps().iter().map(|&e| e as u32).collect());
        let c = c.clone();
        let s = basis.get(&lambda)?;
        rem.add_scaled_shifted(&-c.clone(), &Monomial::one(p.nvars()), s);
        out.insert(lambda, c);
    }
    let expansion = SchurExpansion(out);
    let mut rebuilt = MultiPoly::zero(p.nvars());
    for (lambda, c) in expansion.iter() {
        rebuilt.add_scaled_shifted(c, &Monomial::one(p.nvars()), basis.get(lambda)?);
    }
    if rebuilt != *p {
        return Err(Error::Consistency("Schur reconstruction mismatch".into()));
    }
    Ok(expansion)
}

/// `s_μ · s_ν` in `|μ| + |ν|` variables, so every `s_λ` in the product is
/// visible.
pub fn schur_product(basis: &mut SchurBasis, mu: &Partition, nu: &Partition) -> Result<MultiPoly> {
    let a = basis.get(mu)?.clone();
    let b = basis.get(nu)?;
    Ok(&a * b)
}

/// LR coefficients of `s_μ s_ν` via product expansion.
pub fn lr_by_expansion(mu: &Partition, nu: &Partition) -> Result<SchurExpansion> {
    let n = ((mu.size() + nu.size()) as usize).max(1);
    let mut basis = SchurBasis::new(n);
    let prod = schur_product(&mut basis, mu, nu)?;
    schur_expand_with(&mut basis, &prod)
}
