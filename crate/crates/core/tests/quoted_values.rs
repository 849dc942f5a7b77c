use std::collections::BTreeMap;

use algcomb_core::apolar::{derivative_span, graded_character, irreducible_multiplicities, n_factorial_report, vandermonde};
use algcomb_core::diagcoinv::{bidegree_decomposition, diagonal_report};
use algcomb_core::hall::hall_fit;
use algcomb_core::horn::horn_system;
use algcomb_core::lis::{expected_is_exact, gessel_series, greene_bruteforce, greene_shape, is_length, Permutation};
use algcomb_core::poly::{rat, MultiPoly, VarSplit};
use algcomb_core::symfunc::{lr_coefficient, schur_poly};
use algcomb_core::tableaux::{count_syt, enumerate_syt, maj_multiplicity, Partition, StandardTableau};
use algcomb_core::tracywidom::{airy, airy_leading_asymptotic, painleve2_hastings_mcleod, tw_moments, PainleveConfig};
use num_bigint::BigUint;

fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

#[test]
fn five_standard_tableaux_of_shape_32() {
    assert_eq!(count_syt(&p(&[3, 2])), BigUint::from(5u32));
    assert_eq!(enumerate_syt(&p(&[3, 2])).len(), 5);
}

#[test]
fn major_index_of_the_displayed_tableau() {
    let t = StandardTableau::new(vec![vec![1, 2, 6], vec![3, 5], vec![4, 7]]).unwrap();
    assert_eq!(t.major_index(), 11);
    assert_eq!(maj_multiplicity(&p(&[3, 2]), 3), 1);
    assert_eq!(maj_multiplicity(&p(&[4, 1]), 3), 1);
    assert_eq!(maj_multiplicity(&p(&[3, 1, 1]), 3), 1);
}

#[test]
fn character_of_symmetric_square() {
    let x = MultiPoly::var(2, 0);
    let y = MultiPoly::var(2, 1);
    let expected = &(&(&x * &x) + &(&x * &y)) + &(&y * &y);
    assert_eq!(schur_poly(&p(&[2]), 2).unwrap(), expected);
    assert_eq!(lr_coefficient(&p(&[1]), &p(&[1]), &p(&[2])), 1);
}

#[test]
fn horn_system_sizes() {
    assert_eq!(horn_system(2).unwrap().inequalities.len(), 3);
    assert_eq!(horn_system(3).unwrap().inequalities.len(), 12);
}

#[test]
fn hall_polynomial_for_two_cyclic_factors() {
    let fit = hall_fit(&p(&[1, 1]), &p(&[1]), &p(&[1]), &[2, 3, 5], 1 << 20).unwrap();
    assert_eq!(fit.counts, vec![(2, 3), (3, 4), (5, 6)]);
    assert!(fit.maley_positive);
}

#[test]
fn derivative_spans_of_quadrics() {
    // Both first partials of (x+y)^2 are 2(x+y), so the quoted basis {(x+y)^2, x, y, 1} is too big.
    let x = MultiPoly::var(2, 0);
    let y = MultiPoly::var(2, 1);
    let s = &x + &y;
    assert_eq!(derivative_span(&(&s * &s), VarSplit::single(2)).unwrap().dim(), 3);
    assert_eq!(derivative_span(&(&x * &y), VarSplit::single(2)).unwrap().dim(), 4);
}

#[test]
fn degree_three_of_the_vandermonde_span() {
    let span = derivative_span(&vandermonde(5), VarSplit::single(5)).unwrap();
    assert_eq!(span.dim(), 120);
    let mults = irreducible_multiplicities(&graded_character(&span, 5).unwrap()).unwrap();
    let expected: BTreeMap<Partition, u64> = [(p(&[4, 1]), 1), (p(&[3, 2]), 1), (p(&[3, 1, 1]), 1)].into();
    assert_eq!(mults[&(3, 0)], expected);
}

#[test]
fn n_factorial_for_shape_32() {
    assert_eq!(n_factorial_report(&p(&[3, 2])).unwrap().dim, 120);
}

#[test]
fn diagonal_coinvariants_for_three_variables() {
    let r = diagonal_report(3, 3).unwrap();
    assert_eq!(r.total, 16);
    assert_eq!(r.antiinvariant_total, 5);
}

#[test]
fn bidegree_21_for_four_variables() {
    // The quoted dimension is 12, but 2·3 + 2 + 3 = 11 and the module is 11-dimensional.
    let d = bidegree_decomposition(4, (2, 1)).unwrap();
    let expected: BTreeMap<Partition, u64> = [(p(&[2, 1, 1]), 2), (p(&[2, 2]), 1), (p(&[3, 1]), 1)].into();
    assert_eq!(d, expected);
    let dim: u64 = d.iter().map(|(l, m)| m * u64::try_from(count_syt(l)).unwrap()).sum();
    assert_eq!(dim, 11);
    assert_eq!(diagonal_report(4, 4).unwrap().bigraded_dims[&(2, 1)], 11);
}

#[test]
fn increasing_subsequences_of_the_sample_words() {
    let w = Permutation::parse("274163958").unwrap();
    assert_eq!(is_length(&w), 4);
    assert_eq!(greene_shape(&w).part(0), 4);
    let v = Permutation::parse("247951368").unwrap();
    assert_eq!(greene_shape(&v), p(&[5, 3, 1]));
    assert_eq!(greene_bruteforce(&v, 2).unwrap(), 8);
}

#[test]
fn u2_is_catalan() {
    let g = gessel_series(2, 20).unwrap();
    let counts: Vec<i64> = g.counts.iter().map(|c| i64::try_from(c).unwrap()).collect();
    assert_eq!(counts, vec![1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796]);
    assert_eq!(expected_is_exact(3), rat(2));
}

#[test]
fn airy_decay_matches_the_leading_term() {
    let r = airy(10.0).unwrap() / airy_leading_asymptotic(10.0);
    assert!((r - 1.0).abs() < 1e-2, "{r}");
}

#[test]
fn tracy_widom_mean_and_variance() {
    let sol = painleve2_hastings_mcleod(PainleveConfig::default()).unwrap();
    assert!((sol.u_at(6.0) + airy(6.0).unwrap()).abs() < 1e-8);
    let m = tw_moments(&sol);
    assert!((m.mean - -1.7711).abs() < 1e-3, "{}", m.mean);
    assert!((m.variance - 0.8132).abs() < 1e-3, "{}", m.variance);
}
