use algcomb_core::apolar::{d_mu, derivative_span};
use algcomb_core::diagcoinv::PolyIdeal;
use algcomb_core::groebner::GroebnerLimits;
use algcomb_core::hall::hall_count;
use algcomb_core::horn::{hermitian_feasible_integer, horn_feasible, SpectrumTriple};
use algcomb_core::lis::{greene_shape, greene_shape_bruteforce, is_length, rsk, Permutation};
use algcomb_core::poly::{rat, Monomial, MultiPoly, VarSplit};
use algcomb_core::symfunc::{kostka, lr_coefficient, schur_poly};
use algcomb_core::tableaux::{count_syt, Partition};
use algcomb_core::tracywidom::gue::{gue_sample_indexed, HermitianMatrix};
use algcomb_core::tracywidom::{ks_distance, EmpiricalDistribution, RealGrid};
use algcomb_core::lis::sample_rng;
use proptest::prelude::*;

fn partition(max_part: u32, max_len: usize) -> impl Strategy<Value = Partition> {
    proptest::collection::vec(0..=max_part, 0..=max_len).prop_map(Partition::from_unsorted)
}

fn decreasing(n: usize, max: i64) -> impl Strategy<Value = Vec<i64>> {
    proptest::collection::vec(0..=max, n).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    })
}

fn permutation(max_n: usize) -> impl Strategy<Value = Permutation> {
    (1..=max_n).prop_flat_map(|n| Just((1..=n as u32).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|w| Permutation::new(w).unwrap())
}

fn poly3x2() -> impl Strategy<Value = MultiPoly> {
    proptest::collection::vec((proptest::collection::vec(0u16..3, 6), -3i64..4), 0..5)
        .prop_map(|ts| MultiPoly::from_terms(6, ts.into_iter().map(|(e, c)| (Monomial::from_exps(&e), rat(c)))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn lr_is_symmetric_and_conjugation_invariant(mu in partition(3, 3), nu in partition(3, 3), lambda in partition(4, 4)) {
        let c = lr_coefficient(&mu, &nu, &lambda);
        prop_assert_eq!(c, lr_coefficient(&nu, &mu, &lambda));
        prop_assert_eq!(c, lr_coefficient(&mu.conjugate(), &nu.conjugate(), &lambda.conjugate()));
    }

    #[test]
    fn lr_vanishes_unless_sizes_add(mu in partition(3, 3), nu in partition(3, 3), lambda in partition(4, 4)) {
        if lambda.size() != mu.size() + nu.size() {
            prop_assert_eq!(lr_coefficient(&mu, &nu, &lambda), 0);
        }
    }

    #[test]
    fn schur_coefficients_are_kostka_numbers(lambda in partition(3, 3)) {
        let n = lambda.len().max(1) + 1;
        let s = schur_poly(&lambda, n).unwrap();
        for (m, c) in s.terms() {
            let mu: Vec<u32> = m.exps().iter().map(|&e| e as u32).collect();
            prop_assert_eq!(c.clone(), rat(kostka(&lambda, &mu) as i64));
        }
        prop_assert!(s.is_symmetric());
    }

    #[test]
    fn horn_agrees_with_lr_beyond_the_exhaustive_range(a in decreasing(3, 9), b in decreasing(3, 9), c in decreasing(3, 9)) {
        let t = SpectrumTriple::from_integers(&a, &b, &c).unwrap();
        let lr = t.trace_balanced() && hermitian_feasible_integer(&t).unwrap();
        prop_assert_eq!(horn_feasible(&t).unwrap(), lr);
    }

    #[test]
    fn unbalanced_traces_are_infeasible(a in decreasing(3, 6), b in decreasing(3, 6), c in decreasing(3, 6)) {
        let t = SpectrumTriple::from_integers(&a, &b, &c).unwrap();
        if !t.trace_balanced() {
            prop_assert!(!horn_feasible(&t).unwrap());
            prop_assert!(!hermitian_feasible_integer(&t).unwrap());
        }
    }

    #[test]
    fn greene_shape_is_rsk_shape(w in permutation(8)) {
        let (p, q) = rsk(&w);
        let g = greene_shape(&w);
        prop_assert_eq!(p.shape(), q.shape());
        prop_assert_eq!(p.shape(), &g);
        prop_assert_eq!(g.part(0) as usize, is_length(&w));
        prop_assert_eq!(g.size() as usize, w.len());
        prop_assert_eq!(greene_shape_bruteforce(&w).unwrap(), g.clone());
        prop_assert_eq!(greene_shape(&w.inverse()), g.clone());
        prop_assert_eq!(greene_shape(&w.reversed()), g.conjugate());
    }

    #[test]
    fn normal_form_is_idempotent_and_multiplicative(f in poly3x2(), g in poly3x2()) {
        let gb = PolyIdeal::diagonal(3).groebner(GroebnerLimits::default()).unwrap();
        let nf = gb.normal_form(&f);
        prop_assert_eq!(gb.normal_form(&nf), nf.clone());
        prop_assert_eq!(gb.normal_form(&(&f * &g)), gb.normal_form(&(&nf * &gb.normal_form(&g))));
    }

    #[test]
    fn gue_is_deterministic_and_trace_preserving(seed in 0u64..1000, n in 1usize..12) {
        let a = gue_sample_indexed(n, seed, 3).unwrap();
        prop_assert_eq!(&a, &gue_sample_indexed(n, seed, 3).unwrap());
        let m = HermitianMatrix::sample_gue(n, &mut sample_rng(seed, 3));
        let sum: f64 = a.iter().sum();
        prop_assert!((sum - m.trace()).abs() <= 1e-10 * m.trace().abs().max(1.0));
        prop_assert!(a.windows(2).all(|w| w[0] >= w[1]));
    }

    #[test]
    fn ks_distance_is_a_probability_gap(xs in proptest::collection::vec(-3.0f64..3.0, 1..50)) {
        let f = RealGrid::tabulate(-3.0, 3.0, 0.01, |t| (t + 3.0) / 6.0).unwrap();
        let d = ks_distance(&EmpiricalDistribution::new(xs).unwrap(), &f).unwrap();
        prop_assert!((0.0..=1.0).contains(&d));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn hall_counts_are_dual(lambda in partition(2, 3), p in prop::sample::select(vec![2u64, 3])) {
        for a in 0..=lambda.size() {
            for mu in algcomb_core::tableaux::enumerate_partitions(a, None) {
                for nu in algcomb_core::tableaux::enumerate_partitions(lambda.size() - a, None) {
                    prop_assert_eq!(
                        hall_count(&lambda, &mu, &nu, p).unwrap(),
                        hall_count(&lambda, &nu, &mu, p).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn d_mu_spans_are_closed_and_alternating(mu in partition(3, 3), i in 0usize..3) {
        prop_assume!(mu.size() >= 2 && mu.size() <= 4);
        let n = mu.size() as usize;
        let d = d_mu(&mu);
        let i = i % (n - 1);
        let mut perm: Vec<usize> = (0..n).collect();
        perm.swap(i, i + 1);
        prop_assert_eq!(d.permuted(&perm, n), -&d);
        let span = derivative_span(&d, VarSplit::diagonal(n)).unwrap();
        prop_assert!(span.is_closed());
        prop_assert_eq!(num_bigint::BigUint::from(span.dim()), (1..=n as u32).map(num_bigint::BigUint::from).product());
    }

    #[test]
    fn hook_formula_is_conjugation_invariant(l in partition(6, 5)) {
        prop_assert_eq!(count_syt(&l), count_syt(&l.conjugate()));
    }
}
