//! End-to-end acceptance checks. Every comparison is an exact integer
//! identity; each criterion prints a PASS or FAIL line with its runtime.

use std::time::Instant;

use majordex::abindex::{expand_cd, theta, theta_qt, to_cd, AbPoly, AbWord, CdPoly, CdWord};
use majordex::permstat::{carlitz_check, q_eulerian};
use majordex::poset::{boolean_algebra, cross_polytope, simplex_lattice};
use majordex::qarith::{q_factorial, q_int};
use majordex::verify;
use majordex::{Int, QPoly};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<(), String>;

fn criterion(number: u32, title: &str, check: impl FnOnce() -> Check) {
    let start = Instant::now();
    let outcome = check();
    let secs = start.elapsed().as_secs_f64();
    match &outcome {
        Ok(()) => println!("criterion {number}: PASS ({title}, {secs:.2}s)"),
        Err(why) => println!("criterion {number}: FAIL ({title}, {secs:.2}s): {why}"),
    }
    if let Err(why) = outcome {
        panic!("criterion {number} failed: {why}");
    }
}

fn same(what: impl std::fmt::Display, lhs: &QPoly, rhs: &QPoly) -> Check {
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!("{what}: {lhs} != {rhs}"))
    }
}

fn random_ab_poly(rng: &mut ChaCha8Rng, n: usize) -> AbPoly<Int> {
    let mut w = AbPoly::zero();
    for _ in 0..rng.gen_range(1..=12) {
        let mask = if n == 0 { 0 } else { rng.gen_range(0..1u64 << n) };
        w.add_term(AbWord::from_mask(mask, n), Int::from(rng.gen_range(-20i64..=20)));
    }
    w
}

#[test]
fn criterion_01_macmahon() {
    criterion(1, "maj distribution of multisets", || verify::macmahon(8).map(|_| ()));
}

#[test]
fn criterion_02_operator_identities() {
    criterion(2, "Θ under c, G, Pyr and Bipyr", || {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0002);
        for n in 0..=8 {
            for _ in 0..500 {
                let w = random_ab_poly(&mut rng, n);
                verify::eq2(&w, n)?;
                verify::eq3(&w, n)?;
                verify::eq4(&w, n)?;
                verify::eq5(&w, n)?;
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_03_simplex_and_cross() {
    criterion(3, "Θ of simplices and cross-polytopes", || {
        for n in 0..=6 {
            let p = simplex_lattice(n);
            let psi = p.ab_index_via_f();
            if psi != p.ab_index() {
                return Err(format!("flag f and flag h disagree on simplex_lattice({n})"));
            }
            same(
                format_args!("Θ(Ψ(simplex_lattice({n})))"),
                &theta(&psi),
                &q_factorial(n as u32 + 1),
            )?;
        }
        for n in 0..=5 {
            let psi = cross_polytope(n).ab_index_via_f();
            let rhs = &q_int::<Int>(2).pow(n as u32) * &q_factorial(n as u32);
            same(format_args!("Θ(Ψ(cross_polytope({n})))"), &theta(&psi), &rhs)?;
        }
        Ok(())
    });
}

#[test]
fn criterion_04_simplicial_h() {
    criterion(4, "Θ(Ψ(P)) = [n]! h(P)", || verify::simplicial_h(5).map(|_| ()));
}

#[test]
fn criterion_05_shelling_components() {
    criterion(5, "shelling components", || verify::shelling(7, 5).map(|_| ()));
}

#[test]
fn criterion_06_divisibility() {
    criterion(6, "[2]^⌈n/2⌉ divides Θ", || {
        verify::divisibility(10, 6).map(|_| ())
    });
}

#[test]
fn criterion_07_products() {
    criterion(7, "Cartesian and dual diamond products", || {
        verify::products(8, false)?;
        verify::products(8, true)?;
        Ok(())
    });
}

#[test]
fn criterion_08_bjorner_stanley() {
    criterion(8, "R-labelings and Jordan-Hölder sums", || {
        verify::bjorner_stanley(7, 5, 100_000).map(|_| ())
    });
}

#[test]
fn criterion_09_signed_maj_family() {
    criterion(9, "signed maj distribution", || {
        verify::signed_maj_family(4, 4).map(|_| ())
    });
}

#[test]
fn criterion_10_specializations() {
    criterion(10, "principal specializations", || {
        verify::specialization(6, 5, false)?;
        verify::specialization(6, 5, true)?;
        Ok(())
    });
}

#[test]
fn criterion_11_qt_extension() {
    criterion(11, "q,t-Eulerian and Carlitz", || {
        for n in 1..=8 {
            let lhs = theta_qt(&boolean_algebra(n).ab_index());
            let rhs = q_eulerian(n).map_err(|e| e.to_string())?;
            if lhs != rhs {
                return Err(format!("Θ^{{q,t}}(Ψ(B_{n})) = {lhs} but A_{n} = {rhs}"));
            }
        }
        for n in 0..=5 {
            if let Some(k) = carlitz_check(n, 8).map_err(|e| e.to_string())? {
                return Err(format!("Carlitz identity for n = {n} fails at t^{k}"));
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_12_oracle_cross_checks() {
    criterion(12, "flag f/h agreement and cd round trip", || {
        for (name, p) in verify::construction_family(6) {
            if p.ab_index() != p.ab_index_via_f() {
                return Err(format!("Ψ({name}) differs between the h and f expansions"));
            }
        }
        let round_trip = |m: &CdPoly<Int>| -> Check {
            match to_cd(&expand_cd(m)) {
                Ok(back) if &back == m => Ok(()),
                Ok(back) => Err(format!("to_cd(expand_cd({m})) = {back}")),
                Err(e) => Err(format!("to_cd(expand_cd({m})): {e}")),
            }
        };
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0012);
        for n in 0..=8 {
            let basis = CdWord::all_of_weight(n);
            for m in &basis {
                round_trip(&CdPoly::basis(*m))?;
            }
            for _ in 0..200 {
                let mut m = CdPoly::zero();
                for _ in 0..rng.gen_range(1..=basis.len().min(10)) {
                    let w = basis[rng.gen_range(0..basis.len())];
                    m.add_term(w, Int::from(rng.gen_range(-9i64..=9)));
                }
                round_trip(&m)?;
            }
        }
        Ok(())
    });
}
