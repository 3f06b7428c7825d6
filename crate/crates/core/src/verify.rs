//! Named identity families, each checked exhaustively up to a size bound.
//!
//! Every family walks its cases from small to large and stops at the first
//! failure, so the reported witness is the smallest case that breaks.

use std::fmt;
use std::str::FromStr;

use num_traits::One;
use thiserror::Error;

use crate::abindex::{
    bipyr_op, derivation_g, expand_cd, pyr_op, shelling_component, theta, to_cd, AbPoly, AbWord, CdWord,
};
use crate::permstat::{maj_distribution, signed_maj_distribution, signed_maj_formula, EnumLimits};
use crate::poset::{
    bipyr_poset, boolean_algebra, cartesian_product, chain, cross_polytope, dual_diamond, fan_poset, pyr_poset,
    t_poset, GradedPoset,
};
use crate::qarith::{gaussian_binomial, gaussian_multinomial, q_factorial, q_int, Poly};
use crate::qsym::{verify_poset_via_ps, verify_poset_via_ps_bstar, verify_theta_via_ps, verify_theta_via_ps_bstar};
use crate::rlabel::{product_chain_labeling, signed_labeling};
use crate::{Int, QPoly};

/// The identity families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Eq2,
    Eq3,
    Eq4,
    Eq5,
    Eq7,
    Eq8,
    Eq10,
    Eq13,
    Divisibility,
    Cartesian,
    Diamond,
    Macmahon,
    Reiner,
    BjornerStanley,
}

impl Family {
    pub const ALL: [Family; 14] = [
        Family::Eq2,
        Family::Eq3,
        Family::Eq4,
        Family::Eq5,
        Family::Eq7,
        Family::Eq8,
        Family::Eq10,
        Family::Eq13,
        Family::Divisibility,
        Family::Cartesian,
        Family::Diamond,
        Family::Macmahon,
        Family::Reiner,
        Family::BjornerStanley,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Eq2 => "eq2",
            Family::Eq3 => "eq3",
            Family::Eq4 => "eq4",
            Family::Eq5 => "eq5",
            Family::Eq7 => "eq7",
            Family::Eq8 => "eq8",
            Family::Eq10 => "eq10",
            Family::Eq13 => "eq13",
            Family::Divisibility => "divisibility",
            Family::Cartesian => "cartesian",
            Family::Diamond => "diamond",
            Family::Macmahon => "macmahon",
            Family::Reiner => "reiner",
            Family::BjornerStanley => "bjorner-stanley",
        }
    }

    /// Largest bound the family finishes on in reasonable time.
    pub fn max_bound(self) -> usize {
        match self {
            Family::Eq2 | Family::Eq3 | Family::Eq4 | Family::Eq5 => 14,
            Family::Eq7 | Family::Eq8 | Family::Divisibility => 8,
            Family::Eq10 | Family::Eq13 => 7,
            Family::Cartesian | Family::Diamond => 10,
            Family::Macmahon => 9,
            Family::Reiner => 5,
            Family::BjornerStanley => 7,
        }
    }

    /// What the bound limits for this family.
    pub fn bound_meaning(self) -> &'static str {
        match self {
            Family::Eq2 | Family::Eq3 | Family::Eq4 | Family::Eq5 => "word degree",
            Family::Macmahon => "multiset size",
            Family::Reiner => "number of letters",
            Family::BjornerStanley => "chain product size and number of signed letters",
            _ => "poset rank",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown identity family {0:?}")]
pub struct UnknownFamily(pub String);

impl FromStr for Family {
    type Err = UnknownFamily;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| UnknownFamily(s.to_string()))
    }
}

/// The first failing case of a family.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{family} fails: {witness}")]
pub struct Failure {
    pub family: Family,
    pub witness: String,
}

/// A family that passed, with the number of cases checked.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub family: Family,
    pub bound: usize,
    pub cases: usize,
}

type Outcome = Result<usize, String>;

fn expect_eq(what: impl fmt::Display, lhs: &QPoly, rhs: &QPoly) -> Result<(), String> {
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!("{what}: {lhs} != {rhs}"))
    }
}

pub fn run(family: Family, bound: usize) -> Result<Report, Failure> {
    let outcome = match family {
        Family::Eq2 => operator_identity(bound, eq2),
        Family::Eq3 => operator_identity(bound, eq3),
        Family::Eq4 => operator_identity(bound, eq4),
        Family::Eq5 => operator_identity(bound, eq5),
        Family::Eq7 => simplicial_h(bound.saturating_sub(1)),
        Family::Eq8 => shelling(bound.saturating_sub(1), bound.saturating_sub(1)),
        Family::Eq10 => specialization(bound.saturating_sub(1), bound, false),
        Family::Eq13 => specialization(bound.saturating_sub(1), bound, true),
        Family::Divisibility => divisibility(bound.saturating_sub(1), bound),
        Family::Cartesian => products(bound, false),
        Family::Diamond => products(bound, true),
        Family::Macmahon => macmahon(bound),
        Family::Reiner => signed_maj_family(bound, 4),
        Family::BjornerStanley => bjorner_stanley(bound, bound.min(5), 100_000),
    };
    outcome
        .map(|cases| Report { family, bound, cases })
        .map_err(|witness| Failure { family, witness })
}

/// Every family in turn; stops at the first failure.
pub fn run_all(bound: usize) -> Result<Vec<Report>, Failure> {
    Family::ALL.into_iter().map(|f| run(f, bound)).collect()
}

fn operator_identity(max_degree: usize, check: fn(&AbPoly<Int>, usize) -> Result<(), String>) -> Outcome {
    let mut cases = 0;
    for n in 0..=max_degree {
        for w in AbWord::all_of_length(n) {
            check(&AbPoly::word(w), n)?;
            cases += 1;
        }
    }
    Ok(cases)
}

/// `Θ(w c) = (1 + q^{n+1}) Θ(w)`.
pub fn eq2(w: &AbPoly<Int>, n: usize) -> Result<(), String> {
    let rhs = &(&Poly::one() + &Poly::monomial(n as u32 + 1, Int::one())) * &theta(w);
    expect_eq(format_args!("Θ(({w})·c)"), &theta(&(w * &AbPoly::c())), &rhs)
}

/// `Θ(G(w)) = q [n] Θ(w)`.
pub fn eq3(w: &AbPoly<Int>, n: usize) -> Result<(), String> {
    let rhs = &q_int::<Int>(n as u32).shift(1) * &theta(w);
    expect_eq(format_args!("Θ(G({w}))"), &theta(&derivation_g(w)), &rhs)
}

/// `Θ(Pyr(w)) = [n+2] Θ(w)`.
pub fn eq4(w: &AbPoly<Int>, n: usize) -> Result<(), String> {
    let rhs = &q_int::<Int>(n as u32 + 2) * &theta(w);
    expect_eq(format_args!("Θ(Pyr({w}))"), &theta(&pyr_op(w)), &rhs)
}

/// `Θ(Bipyr(w)) = [2][n+1] Θ(w)`.
pub fn eq5(w: &AbPoly<Int>, n: usize) -> Result<(), String> {
    let rhs = &(&q_int::<Int>(2) * &q_int(n as u32 + 1)) * &theta(w);
    expect_eq(format_args!("Θ(Bipyr({w}))"), &theta(&bipyr_op(w)), &rhs)
}

/// `Bipyr^i(P)`.
pub fn bipyr_power(p: &GradedPoset, i: usize) -> GradedPoset {
    (0..i).fold(p.clone(), |acc, _| bipyr_poset(&acc))
}

/// `Θ(Ψ(P)) = [n]! h(P)` on `T_n`, `Bipyr^i(T_{n-i})` and `C*_n`, `n <= max_n`.
pub fn simplicial_h(max_n: usize) -> Outcome {
    let mut cases = 0;
    for n in 0..=max_n {
        let mut family: Vec<(String, GradedPoset)> = (0..=n)
            .map(|i| (format!("Bipyr^{i}(T_{})", n - i), bipyr_power(&t_poset(n - i), i)))
            .collect();
        family.push((format!("C*_{n}"), cross_polytope(n)));
        for (name, p) in family {
            let h = p.h_polynomial().map_err(|e| format!("{name}: {e}"))?;
            expect_eq(
                format_args!("Θ(Ψ({name}))"),
                &theta(&p.ab_index()),
                &(&q_factorial::<Int>(n as u32) * &h),
            )?;
            cases += 1;
        }
    }
    Ok(cases)
}

/// `Θ(Φ̌_{n,i}) = q^i [2(n-i)] [n-1]!` for `1 <= n <= max_n`, `i < n`, and
/// `Ψ(C*_n) = Σ_i C(n,i) Φ̌_{n,i}` for `1 <= n <= max_cross`.
pub fn shelling(max_n: usize, max_cross: usize) -> Outcome {
    let mut cases = 0;
    for n in 1..=max_n {
        for i in 0..n {
            let phi = shelling_component(n, i).map_err(|e| e.to_string())?;
            let rhs = (&q_int::<Int>(2 * (n - i) as u32) * &q_factorial(n as u32 - 1)).shift(i as u32);
            expect_eq(format_args!("Θ(Φ̌_{{{n},{i}}})"), &theta(&expand_cd(&phi)), &rhs)?;
            cases += 1;
        }
    }
    for n in 1..=max_cross {
        let mut sum = AbPoly::zero();
        let mut binom = Int::one();
        for i in 0..=n {
            let phi = shelling_component(n, i).map_err(|e| e.to_string())?;
            sum += &expand_cd(&phi).scale(&binom);
            binom = binom * Int::from(n - i) / Int::from(i + 1);
        }
        let psi = cross_polytope(n).ab_index();
        if sum != psi {
            return Err(format!("Σ C({n},i) Φ̌_{{{n},i}} = {sum} but Ψ(C*_{n}) = {psi}"));
        }
        cases += 1;
    }
    Ok(cases)
}

/// The standard constructions up to rank `max_rank`, by name: Boolean
/// algebras, chains, `T_n`, cross-polytopes, fans, pyramids and bipyramids
/// of those, and a few small products.
pub fn construction_family(max_rank: usize) -> Vec<(String, GradedPoset)> {
    let mut base: Vec<(String, GradedPoset)> = Vec::new();
    for k in 1..=max_rank {
        base.push((format!("B({k})"), boolean_algebra(k)));
        base.push((format!("chain({k})"), chain(k)));
        base.push((format!("T({})", k - 1), t_poset(k - 1)));
        base.push((format!("cross({})", k - 1), cross_polytope(k - 1)));
    }
    if max_rank >= 2 {
        for r in 1..=4 {
            base.push((format!("fan({r})"), fan_poset(r).expect("r >= 1")));
        }
    }
    let mut out = base.clone();
    for (name, p) in &base {
        if p.rank() < max_rank && p.len() <= 200 {
            out.push((format!("pyr({name})"), pyr_poset(p)));
            out.push((format!("bipyr({name})"), bipyr_poset(p)));
        }
    }
    let small: Vec<(String, GradedPoset)> = vec![
        ("B(1)".into(), boolean_algebra(1)),
        ("B(2)".into(), boolean_algebra(2)),
        ("chain(2)".into(), chain(2)),
        ("T(1)".into(), t_poset(1)),
        ("fan(3)".into(), fan_poset(3).expect("r >= 1")),
        ("cross(2)".into(), cross_polytope(2)),
    ];
    for (i, (np, p)) in small.iter().enumerate() {
        for (nq, q) in &small[i..] {
            if p.rank() + q.rank() <= max_rank {
                out.push((format!("{np} * {nq}"), cartesian_product(p, q)));
            }
            if p.rank() + q.rank() - 1 <= max_rank {
                out.push((format!("{np} <> {nq}"), dual_diamond(p, q)));
            }
        }
    }
    out
}

/// Θ through the quasi-symmetric specializations: all words of degree
/// `<= max_degree`, then every construction of rank `<= max_rank`.
/// `bstar` selects the type-B* forms.
pub fn specialization(max_degree: usize, max_rank: usize, bstar: bool) -> Outcome {
    let mut cases = 0;
    for n in 0..=max_degree {
        for w in AbWord::all_of_length(n) {
            let w = AbPoly::word(w);
            let ok = if bstar {
                verify_theta_via_ps_bstar(&w)
            } else {
                verify_theta_via_ps(&w)
            };
            if ok != Ok(true) {
                return Err(format!("specialization of Θ({w}) disagrees"));
            }
            cases += 1;
        }
    }
    for (name, p) in construction_family(max_rank) {
        let ok = if bstar {
            verify_poset_via_ps_bstar(&p)
        } else {
            verify_poset_via_ps(&p)
        };
        if !ok {
            return Err(format!("specialization of Θ(Ψ({name})) disagrees"));
        }
        cases += 1;
    }
    Ok(cases)
}

/// `[2]^{⌈n/2⌉}` divides `Θ(m)` for every cd-monomial `m` of weight
/// `n <= max_weight` and `Θ(Ψ(P))` for every Eulerian construction of
/// rank `<= max_rank` (where `n = rank - 1`).
pub fn divisibility(max_weight: usize, max_rank: usize) -> Outcome {
    let power = |n: usize| q_int::<Int>(2).pow(n.div_ceil(2) as u32);
    let mut cases = 0;
    for n in 0..=max_weight {
        for m in CdWord::all_of_weight(n) {
            let th = theta(&expand_cd(&crate::abindex::CdPoly::<Int>::basis(m)));
            if !power(n).divides(&th) {
                return Err(format!("[2]^{} does not divide Θ({m}) = {th}", n.div_ceil(2)));
            }
            cases += 1;
        }
    }
    for (name, p) in construction_family(max_rank) {
        if !p.is_eulerian() {
            continue;
        }
        let psi = p.ab_index();
        if to_cd(&psi).is_err() {
            return Err(format!("{name} is Eulerian but Ψ is not cd-expressible"));
        }
        let n = p.rank() - 1;
        let th = theta(&psi);
        if !power(n).divides(&th) {
            return Err(format!("[2]^{} does not divide Θ(Ψ({name})) = {th}", n.div_ceil(2)));
        }
        cases += 1;
    }
    Ok(cases)
}

fn product_operands(max_rank: usize) -> Vec<(String, GradedPoset)> {
    let mut v = Vec::new();
    for k in 1..=max_rank {
        v.push((format!("B({k})"), boolean_algebra(k)));
        v.push((format!("chain({k})"), chain(k)));
        v.push((format!("cross({})", k - 1), cross_polytope(k - 1)));
    }
    v
}

/// Θ of a Cartesian (or, with `diamond`, dual diamond) product against the
/// Gaussian-coefficient formula, for operand pairs from Boolean algebras,
/// chains and cross-polytopes whose ranks sum to at most `max_rank`.
pub fn products(max_rank: usize, diamond: bool) -> Outcome {
    let ops = product_operands(max_rank);
    let mut cases = 0;
    for (np, p) in &ops {
        for (nq, q) in &ops {
            let (m, n) = (p.rank(), q.rank());
            if m + n > max_rank {
                continue;
            }
            let (prod, binom, sym) = if diamond {
                (
                    dual_diamond(p, q),
                    gaussian_binomial::<Int>((m + n - 2) as u32, (n - 1) as u32),
                    "<>",
                )
            } else {
                (
                    cartesian_product(p, q),
                    gaussian_binomial::<Int>((m + n) as u32, n as u32),
                    "*",
                )
            };
            let rhs = &(&binom * &theta(&p.ab_index())) * &theta(&q.ab_index());
            expect_eq(format_args!("Θ(Ψ({np} {sym} {nq}))"), &theta(&prod.ab_index()), &rhs)?;
            cases += 1;
        }
    }
    Ok(cases)
}

/// All compositions of `n`.
pub fn compositions(n: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return Vec::new();
    }
    (0..1u64 << (n - 1))
        .map(|mask| {
            let mut parts = Vec::new();
            let mut last = 0;
            for i in 1..n {
                if mask >> (i - 1) & 1 == 1 {
                    parts.push(i - last);
                    last = i;
                }
            }
            parts.push(n - last);
            parts
        })
        .collect()
}

/// The maj distribution of every multiset of size `<= max_size` against the
/// Gaussian multinomial and against Θ of the chain-product labeling.
pub fn macmahon(max_size: usize) -> Outcome {
    let limits = EnumLimits {
        max_len: max_size.max(EnumLimits::default().max_len),
        ..EnumLimits::default()
    };
    let mut cases = 0;
    for n in 1..=max_size as u32 {
        for alpha in compositions(n) {
            let dist = maj_distribution(&alpha, &limits).map_err(|e| e.to_string())?;
            expect_eq(
                format_args!("maj distribution of {alpha:?}"),
                &dist,
                &gaussian_multinomial(&alpha),
            )?;
            if n <= 7 {
                let bs = product_chain_labeling(&alpha).bs_sum().map_err(|e| e.to_string())?;
                expect_eq(format_args!("Θ(Σ JH words) for {alpha:?}"), &theta(&bs), &dist)?;
            }
            cases += 1;
        }
    }
    Ok(cases)
}

/// Every vector of length `1..=max_len` with entries in `1..=max_entry`.
pub fn sign_vectors(max_len: usize, max_entry: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut layer: Vec<Vec<u32>> = vec![Vec::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|v| (1..=max_entry).map(move |x| v.iter().copied().chain([x]).collect::<Vec<u32>>()))
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

/// Signed maj distribution against `[n]! Π (1 + (r_i - 1) q)` for all `r`
/// with `n <= max_n` and `r_i <= max_r`, and against `Θ(Ψ(C*_n))` for
/// `r = (2, ..., 2)`.
pub fn signed_maj_family(max_n: usize, max_r: u32) -> Outcome {
    let limits = EnumLimits {
        max_count: u128::MAX,
        ..EnumLimits::default()
    };
    let mut cases = 0;
    for r in sign_vectors(max_n, max_r) {
        let dist = signed_maj_distribution(&r, &limits).map_err(|e| e.to_string())?;
        expect_eq(
            format_args!("signed maj distribution for r = {r:?}"),
            &dist,
            &signed_maj_formula(&r),
        )?;
        if r.iter().all(|&x| x == 2) {
            let n = r.len() as u32;
            let reiner = &q_int::<Int>(2).pow(n) * &q_factorial(n);
            expect_eq(format_args!("signed maj for r = {r:?} vs [2]^n[n]!"), &dist, &reiner)?;
            expect_eq(
                format_args!("signed maj for r = {r:?} vs Θ(Ψ(C*_{n}))"),
                &dist,
                &theta(&cross_polytope(n as usize).ab_index()),
            )?;
        }
        cases += 1;
    }
    Ok(cases)
}

/// `n! Π r_i`.
pub fn signed_state_space(r: &[u32]) -> u128 {
    (1..=r.len() as u128).product::<u128>() * r.iter().map(|&x| x as u128).product::<u128>()
}

/// The sign vectors exercised for R-labelings: all with `n <= 3` and
/// `r_i <= 4`, and the weakly increasing ones up to `max_n` letters, kept
/// when `n! Π r_i <= max_states`.
pub fn labeling_sign_vectors(max_n: usize, max_states: u128) -> Vec<Vec<u32>> {
    sign_vectors(max_n, 4)
        .into_iter()
        .filter(|r| r.len() <= 3 || r.windows(2).all(|w| w[0] <= w[1]))
        .filter(|r| signed_state_space(r) <= max_states)
        .collect()
}

/// Björner–Stanley for the chain-product labelings with `|α| <= max_size`
/// and the signed labelings from [`labeling_sign_vectors`]: each is an
/// R-labeling and its descent words sum to Ψ.
pub fn bjorner_stanley(max_size: usize, max_signed: usize, max_states: u128) -> Outcome {
    let mut cases = 0;
    let mut check = |name: String, lp: crate::rlabel::LabeledPoset| -> Result<(), String> {
        if let Some(w) = lp.r_labeling_witness() {
            return Err(format!(
                "{name} is not an R-labeling: [{}, {}] has {} increasing chains",
                w.lower, w.upper, w.increasing_chains
            ));
        }
        let bs = lp.bs_sum().map_err(|e| e.to_string())?;
        let psi = lp.poset().ab_index();
        if bs != psi {
            return Err(format!("{name}: Σ JH words = {bs} but Ψ = {psi}"));
        }
        cases += 1;
        Ok(())
    };
    for n in 1..=max_size as u32 {
        for alpha in compositions(n) {
            check(format!("chain product {alpha:?}"), product_chain_labeling(&alpha))?;
        }
    }
    for r in labeling_sign_vectors(max_signed, max_states) {
        check(format!("signed labeling r = {r:?}"), signed_labeling(&r))?;
    }
    Ok(cases)
}
