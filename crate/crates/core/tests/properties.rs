use majordex::abindex::{
    derivation_d, derivation_g, expand_cd, theta, theta_qt, to_cd, AbPoly, AbWord, CdPoly, CdWord,
};
use majordex::qarith::{gaussian_binomial, gaussian_multinomial, q_int, Poly, Series};
use majordex::qsym::{ps, quasi_shuffle, reverse_qsym, Composition, QSym};
use majordex::{Int, QPoly, RatQPoly, Rational};
use proptest::prelude::*;

fn poly() -> impl Strategy<Value = QPoly> {
    prop::collection::vec(-50i64..=50, 0..31).prop_map(|c| Poly::from_ints(&c))
}

fn ab_poly(max_len: usize) -> impl Strategy<Value = AbPoly<Int>> {
    prop::collection::vec((0..=max_len, any::<u64>(), -9i64..=9), 0..6).prop_map(|terms| {
        let mut w = AbPoly::zero();
        for (n, mask, c) in terms {
            w.add_term(AbWord::from_mask(mask & ((1u64 << n) - 1), n), Int::from(c));
        }
        w
    })
}

fn homogeneous_ab_poly(n: usize) -> impl Strategy<Value = AbPoly<Int>> {
    prop::collection::vec((any::<u64>(), -9i64..=9), 1..8).prop_map(move |terms| {
        let mut w = AbPoly::zero();
        for (mask, c) in terms {
            w.add_term(AbWord::from_mask(mask & ((1u64 << n) - 1), n), Int::from(c));
        }
        w
    })
}

fn cd_poly(weight: usize) -> impl Strategy<Value = CdPoly<Int>> {
    let basis = CdWord::all_of_weight(weight);
    prop::collection::vec((0..basis.len(), -9i64..=9), 0..6).prop_map(move |terms| {
        let mut m = CdPoly::zero();
        for (i, c) in terms {
            m.add_term(basis[i], Int::from(c));
        }
        m
    })
}

fn composition() -> impl Strategy<Value = Composition> {
    prop::collection::vec(1u32..=3, 0..4).prop_map(|parts| Composition::new(parts).expect("positive parts"))
}

fn qsym() -> impl Strategy<Value = QSym<Int>> {
    prop::collection::vec((composition(), -5i64..=5), 0..4).prop_map(|terms| {
        let mut x = QSym::zero();
        for (alpha, c) in terms {
            x.add_term(alpha, Int::from(c));
        }
        x
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn poly_ring_laws(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &b) + &b, a);
    }

    #[test]
    fn exact_division_round_trip(a in poly(), b in poly()) {
        prop_assume!(!b.is_zero());
        let product = &a * &b;
        prop_assert_eq!(product.exact_divide(&b), Some(a));
        prop_assert!(b.divides(&product));
    }

    #[test]
    fn rational_and_integer_arithmetic_agree(a in poly(), b in poly()) {
        let lift = |p: &QPoly| -> RatQPoly { p.map_coeffs(|c| Rational::from_integer(c.clone())) };
        prop_assert_eq!(lift(&(&a * &b)), &lift(&a) * &lift(&b));
    }

    #[test]
    fn q_pascal(n in 1u32..12, k in 1u32..12) {
        prop_assume!(k < n);
        let lhs = gaussian_binomial::<Int>(n, k);
        let rhs = &gaussian_binomial::<Int>(n - 1, k - 1) + &gaussian_binomial::<Int>(n - 1, k).shift(k);
        prop_assert_eq!(&lhs, &rhs);
        prop_assert_eq!(lhs, gaussian_binomial(n, n - k));
    }

    #[test]
    fn multinomial_shape(alpha in prop::collection::vec(1u32..=4, 1..5)) {
        let g = gaussian_multinomial::<Int>(&alpha);
        let pairs: u32 = (0..alpha.len()).flat_map(|i| (i + 1..alpha.len()).map(move |j| (i, j))).map(|(i, j)| alpha[i] * alpha[j]).sum();
        prop_assert!(g.has_nonnegative_coeffs());
        prop_assert_eq!(g.degree(), Some(pairs));
        prop_assert!(g.is_palindromic());
    }

    #[test]
    fn series_product_truncates_polynomial_product(a in poly(), b in poly(), order in 0u32..10) {
        let lhs = &Series::from_poly(&a, order) * &Series::from_poly(&b, order);
        prop_assert_eq!(lhs, Series::from_poly(&(&a * &b), order));
    }

    #[test]
    fn derivations_obey_leibniz(u in ab_poly(4), v in ab_poly(4)) {
        for der in [derivation_g::<Int>, derivation_d::<Int>] {
            let lhs = der(&(&u * &v));
            let rhs = &(&der(&u) * &v) + &(&u * &der(&v));
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn theta_is_linear(u in ab_poly(6), v in ab_poly(6), k in -7i64..=7) {
        let k = Int::from(k);
        let lhs = theta(&(&u.scale(&k) + &v));
        prop_assert_eq!(lhs, &theta(&u).scale(&k) + &theta(&v));
    }

    #[test]
    fn theta_qt_specializes_to_theta(w in ab_poly(7)) {
        prop_assert_eq!(theta_qt(&w).at_t_one(), theta(&w));
    }

    #[test]
    fn g_scales_theta((n, w) in (0usize..8).prop_flat_map(|n| (Just(n), homogeneous_ab_poly(n)))) {
        let rhs = &q_int::<Int>(n as u32).shift(1) * &theta(&w);
        prop_assert_eq!(theta(&derivation_g(&w)), rhs);
    }

    #[test]
    fn cd_round_trip(m in (0usize..9).prop_flat_map(cd_poly)) {
        prop_assert_eq!(to_cd(&expand_cd(&m)).expect("expanded cd-polynomial"), m);
    }

    #[test]
    fn ab_reversal_is_an_anti_automorphism(u in ab_poly(4), v in ab_poly(4)) {
        prop_assert_eq!((&u * &v).reverse(), &v.reverse() * &u.reverse());
    }

    #[test]
    fn ps_is_multiplicative(x in qsym(), y in qsym()) {
        let order = 14;
        prop_assert_eq!(ps(&quasi_shuffle(&x, &y), order), &ps(&x, order) * &ps(&y, order));
    }

    #[test]
    fn quasi_shuffle_is_commutative_and_reversal_anti(x in qsym(), y in qsym()) {
        prop_assert_eq!(quasi_shuffle(&x, &y), quasi_shuffle(&y, &x));
        let lhs = reverse_qsym(&quasi_shuffle(&x, &y));
        prop_assert_eq!(lhs, quasi_shuffle(&reverse_qsym(&y), &reverse_qsym(&x)));
    }

    #[test]
    fn quasi_shuffle_is_associative(x in qsym(), y in qsym(), z in qsym()) {
        let lhs = quasi_shuffle(&quasi_shuffle(&x, &y), &z);
        prop_assert_eq!(lhs, quasi_shuffle(&x, &quasi_shuffle(&y, &z)));
    }
}
