use majordex::abindex::{bipyr_op, expand_cd, pyr_op, theta, to_cd, word_of_set, AbPoly};
use majordex::permstat::{des, enumerate_multiset, maj, q_eulerian, signed_maj_distribution, EnumLimits};
use majordex::poset::{bipyr_poset, boolean_algebra, chain, cross_polytope, pyr_poset, simplex_lattice, t_poset};
use majordex::qarith::{q_factorial, Poly};
use majordex::qsym::{
    bstar_product, dual_poset, f_bstar, fundamental_expand, gamma, gamma_bstar, quasi_shuffle, set_of_comp,
    verify_poset_via_ps_bstar, Composition,
};
use majordex::rlabel::{product_chain_labeling, signed_labeling};
use majordex::verify::{compositions, construction_family, labeling_sign_vectors};
use majordex::{Int, QPoly};
use num_traits::One;

#[test]
fn operators_mirror_pyramids_and_bipyramids() {
    for (name, p) in construction_family(4) {
        let psi = p.ab_index();
        assert_eq!(pyr_poset(&p).ab_index(), pyr_op(&psi), "Pyr on {name}");
        assert_eq!(bipyr_poset(&p).ab_index(), bipyr_op(&psi), "Bipyr on {name}");
    }
}

#[test]
fn eulerian_constructions_have_cd_indices() {
    for (name, p) in construction_family(6) {
        if p.is_eulerian() {
            let psi = p.ab_index();
            let cd = to_cd(&psi).unwrap_or_else(|e| panic!("{name}: {e}"));
            assert_eq!(expand_cd(&cd), psi, "{name}");
        }
    }
    assert!(!chain(3).is_eulerian());
    assert!(to_cd(&chain(3).ab_index()).is_err());
}

#[test]
fn duality_reverses_the_ab_index() {
    for (name, p) in construction_family(5) {
        assert_eq!(dual_poset(&p).ab_index(), p.ab_index().reverse(), "{name}");
    }
}

#[test]
fn simplicial_h_polynomials() {
    let mut simplicial = vec![];
    for n in 1..=4 {
        simplicial.push((format!("T({n})"), t_poset(n)));
        simplicial.push((format!("cross({n})"), cross_polytope(n)));
        simplicial.push((format!("simplex({n})"), simplex_lattice(n)));
        simplicial.push((format!("bipyr(T({n}))"), bipyr_poset(&t_poset(n))));
    }
    let one_plus_q = Poly::from_ints(&[1, 1]);
    for (name, p) in simplicial {
        assert!(p.is_simplicial(), "{name}");
        let h = p.h_polynomial().unwrap();
        let bipyr_h = bipyr_poset(&p).h_polynomial().unwrap();
        assert_eq!(bipyr_h, &one_plus_q * &h, "h(Bipyr({name}))");
        if p.is_eulerian() {
            assert!(h.is_palindromic(), "h({name}) = {h}");
        }
    }
    assert!(!chain(3).is_simplicial());
    assert!(chain(3).h_polynomial().is_err());
}

#[test]
fn jordan_holder_words_count_maximal_chains() {
    for alpha in compositions(5) {
        let lp = product_chain_labeling(&alpha);
        let words = lp.jordan_holder_words().unwrap();
        assert_eq!(Int::from(words.len()), lp.poset().maximal_chain_count(), "{alpha:?}");
    }
    for r in labeling_sign_vectors(3, 1_000) {
        let lp = signed_labeling(&r);
        let words = lp.jordan_holder_words().unwrap();
        assert_eq!(Int::from(words.len()), lp.poset().maximal_chain_count(), "{r:?}");
    }
}

#[test]
fn signed_maj_matches_labeling() {
    let limits = EnumLimits::default();
    for r in labeling_sign_vectors(4, 20_000) {
        let dist = signed_maj_distribution(&r, &limits).unwrap();
        let bs = signed_labeling(&r).bs_sum().unwrap();
        assert_eq!(theta(&bs), dist, "r = {r:?}");
    }
}

#[test]
fn q_eulerian_specializations() {
    let limits = EnumLimits::default();
    for n in 1..=7usize {
        let a = q_eulerian(n).unwrap();
        assert_eq!(a.at_t_one(), q_factorial::<Int>(n as u32), "n = {n}");
        let mut eulerian = vec![0i64; n];
        for pi in enumerate_multiset(&vec![1; n], &limits).unwrap() {
            eulerian[des(&pi)] += 1;
        }
        assert_eq!(a.at_q_one(), Poly::from_ints(&eulerian), "n = {n}");
    }
}

#[test]
fn maj_distribution_ignores_enumeration_order() {
    let limits = EnumLimits::default();
    let alpha = [2, 1, 3];
    let mut perms: Vec<Vec<u32>> = enumerate_multiset(&alpha, &limits).unwrap().collect();
    let count = |perms: &[Vec<u32>]| -> QPoly {
        perms.iter().fold(Poly::zero(), |acc, pi| {
            &acc + &Poly::monomial(maj(pi) as u32, Int::one())
        })
    };
    let forward = count(&perms);
    perms.reverse();
    perms.swap(0, 7);
    assert_eq!(count(&perms), forward);
}

#[test]
fn gamma_sends_u_basis_to_fundamental_basis() {
    for n in 1..=7u32 {
        for parts in compositions(n) {
            let alpha = Composition::new(parts).unwrap();
            let u = AbPoly::<Int>::word(word_of_set(&set_of_comp(&alpha), n as usize - 1).unwrap());
            assert_eq!(gamma(&u).unwrap(), fundamental_expand(&alpha), "α = {alpha}");
        }
    }
}

#[test]
fn gamma_is_multiplicative_on_products() {
    let mut ops = vec![];
    for k in 1..=6 {
        ops.push((format!("B({k})"), boolean_algebra(k)));
        ops.push((format!("chain({k})"), chain(k)));
    }
    for (np, p) in &ops {
        for (nq, q) in &ops {
            if p.rank() + q.rank() > 7 {
                continue;
            }
            let lhs = gamma(&majordex::poset::cartesian_product(p, q).ab_index()).unwrap();
            let rhs = quasi_shuffle(&gamma(&p.ab_index()).unwrap(), &gamma(&q.ab_index()).unwrap());
            assert_eq!(lhs, rhs, "{np} * {nq}");
        }
    }
}

#[test]
fn bstar_is_multiplicative_on_dual_diamonds() {
    let ops = [
        ("B(1)", boolean_algebra(1)),
        ("B(2)", boolean_algebra(2)),
        ("B(3)", boolean_algebra(3)),
        ("chain(2)", chain(2)),
        ("cross(2)", cross_polytope(2)),
        ("T(2)", t_poset(2)),
    ];
    for (np, p) in &ops {
        for (nq, q) in &ops {
            let prod = majordex::poset::dual_diamond(p, q);
            let lhs = gamma_bstar(&prod.ab_index()).unwrap();
            assert_eq!(lhs, f_bstar(&prod), "{np} <> {nq}");
            let rhs = bstar_product(
                &gamma_bstar(&p.ab_index()).unwrap(),
                &gamma_bstar(&q.ab_index()).unwrap(),
            );
            assert_eq!(lhs, rhs, "{np} <> {nq}");
        }
    }
}

/// The type-B* specialization recovers `Θ(Ψ(P))` from `F_{B*}(P)` itself.
/// Fed the dual poset it recovers `Θ(Ψ(P*))`, which differs from
/// `Θ(Ψ(P))` already for `T_2`.
#[test]
fn bstar_specialization_and_duality() {
    for (name, p) in construction_family(6) {
        assert!(verify_poset_via_ps_bstar(&p), "{name}");
    }
    let t2 = t_poset(2);
    assert_ne!(theta(&t2.ab_index()), theta(&dual_poset(&t2).ab_index()));
}
