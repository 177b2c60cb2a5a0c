use num_traits::{One, Zero};
use proptest::prelude::*;

use oddjm::averages::{average_at, AvgSpec, PolyN};
use oddjm::haar_mc::mc_moment;
use oddjm::jack::{jack_plancherel, jack_table};
use oddjm::partition::{partitions_of, Partition};
use oddjm::permutation::{hyperoctahedral_elements, Matching, Permutation};
use oddjm::rational::{pow, rat, ratio, Rational};
use oddjm::series::PowerSeries;
use oddjm::symfunc::SymFunc;
use oddjm::weingarten::integrate_monomial;

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..=5, 0..=5).prop_map(Partition::from_unsorted)
}

fn permutation(m: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=m).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(&v).unwrap())
}

fn alpha() -> impl Strategy<Value = Rational> {
    (1i64..=5, 1i64..=5).prop_map(|(p, q)| ratio(p, q))
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| ratio(p, q))
}

fn symfunc() -> impl Strategy<Value = SymFunc> {
    prop::collection::vec((prop::collection::vec(1usize..=3, 0..=3), small_rational()), 0..=4).prop_map(
        |terms| SymFunc::from_terms(terms.into_iter().map(|(p, c)| (Partition::from_unsorted(p), c))),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn conjugation_is_an_involution(p in partition()) {
        prop_assert_eq!(p.conjugate().conjugate(), p.clone());
        prop_assert_eq!(p.conjugate().size(), p.size());
        prop_assert_eq!(p.to_string().parse::<Partition>().unwrap(), p);
    }

    #[test]
    fn composition_is_associative(a in permutation(7), b in permutation(7), c in permutation(7)) {
        let left = a.compose(&b).unwrap().compose(&c).unwrap();
        let right = a.compose(&b.compose(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        prop_assert!(a.compose(&a.inverse()).unwrap().is_identity());
        prop_assert_eq!(a.compose(&b).unwrap().sign(), a.sign() * b.sign());
        prop_assert_eq!(a.cycle_type().size(), 7);
        prop_assert_eq!(a.to_string().parse::<Permutation>().unwrap(), a);
    }

    #[test]
    fn coset_type_is_biinvariant(s in permutation(8), i in 0usize..384, j in 0usize..384) {
        let h = hyperoctahedral_elements(4);
        let moved = h[i].compose(&s).unwrap().compose(&h[j]).unwrap();
        prop_assert_eq!(moved.coset_type().unwrap(), s.coset_type().unwrap());
        prop_assert_eq!(s.inverse().coset_type().unwrap(), s.coset_type().unwrap());
        prop_assert_eq!(s.coset_type().unwrap().size(), 4);
    }

    #[test]
    fn matching_depends_on_left_coset(s in permutation(8), i in 0usize..384) {
        let h = hyperoctahedral_elements(4);
        let m = Matching::from_permutation(&s).unwrap();
        prop_assert_eq!(Matching::from_permutation(&s.compose(&h[i]).unwrap()).unwrap(), m.clone());
        prop_assert_eq!(m.coset_type(), s.coset_type().unwrap());
    }

    #[test]
    fn symfunc_round_trips(f in symfunc(), g in symfunc()) {
        prop_assert_eq!(f.to_string().parse::<SymFunc>().unwrap(), f.clone());
        prop_assert_eq!(SymFunc::from_monomial(&f.to_monomial()), f.clone());
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&(&f + &g) - &g, f);
    }

    #[test]
    fn evaluation_is_a_ring_map(f in symfunc(), g in symfunc(), lam in partition(), a in alpha()) {
        let x = lam.content_alphabet(&a).unwrap();
        prop_assert_eq!((&f * &g).evaluate(&x), f.evaluate(&x) * g.evaluate(&x));
        prop_assert_eq!((&f + &g).evaluate(&x), f.evaluate(&x) + g.evaluate(&x));
    }

    #[test]
    fn measure_is_a_probability(n in 1usize..=6, a in alpha()) {
        let mut total = Rational::zero();
        for lam in partitions_of(n) {
            let p = jack_plancherel(&lam, &a).unwrap();
            prop_assert!(p > Rational::zero());
            prop_assert_eq!(p.clone(), jack_plancherel(&lam.conjugate(), &(Rational::one() / &a)).unwrap());
            total += p;
        }
        prop_assert_eq!(total, Rational::one());
        let t = jack_table(n, &a).unwrap();
        for lam in t.partitions() {
            prop_assert_eq!(t.theta(lam, &Partition::ones(n)).unwrap(), Rational::one());
        }
    }

    #[test]
    fn average_duality(a in alpha(), n in 0usize..=5, which in 0usize..4, mu in 0usize..4) {
        let f = [SymFunc::complete(2), SymFunc::complete(3), SymFunc::monomial(&"2,1".parse().unwrap()), SymFunc::elementary(3)][which].clone();
        let mu: Partition = ["0", "1", "2", "1,1"][mu].parse().unwrap();
        let d = f.degree() as i64 - mu.size() as i64;
        let lhs = average_at(&AvgSpec::new(f.clone(), mu.clone(), a.clone()).unwrap(), n).unwrap();
        let inv = Rational::one() / &a;
        let rhs = pow(&-&a, d) * average_at(&AvgSpec::new(f, mu, inv).unwrap(), n).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn interpolation_recovers_polynomials(coeffs in prop::collection::vec(small_rational(), 0..=5)) {
        let p = PolyN::new(coeffs);
        let points: Vec<(Rational, Rational)> = (0..=p.degree() as i64 + 1)
            .map(|n| (rat(n), p.eval_int(n)))
            .collect();
        prop_assert_eq!(PolyN::interpolate(&points), p);
    }

    #[test]
    fn series_division_inverts_multiplication(a in prop::collection::vec(small_rational(), 1..=6), b in prop::collection::vec(small_rational(), 1..=6)) {
        let len = 6;
        let mut b = b;
        b[0] = rat(1);
        let a = PowerSeries::new(a, len);
        let b = PowerSeries::new(b, len);
        prop_assert_eq!(&a.div(&b).unwrap() * &b, a);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn rows_of_orthogonal_matrices_have_unit_norm(big_n in 2usize..=6, k in 1usize..=2) {
        // Σ_j g_{kj}² = 1, so Σ_j E[g_{kj}² g_{21}²] = E[g_{21}²] = 1/N
        let total: Rational = (1..=big_n)
            .map(|j| integrate_monomial(&[k, k, 2, 2], &[j, j, 1, 1], big_n).unwrap())
            .sum();
        prop_assert_eq!(total, ratio(1, big_n as i64));
    }

    #[test]
    fn monte_carlo_is_reproducible(seed in any::<u64>()) {
        let a = mc_moment(&[1, 1], &[2, 2], 3, 300, seed).unwrap();
        let b = mc_moment(&[1, 1], &[2, 2], 3, 300, seed).unwrap();
        prop_assert_eq!(a, b);
    }
}
