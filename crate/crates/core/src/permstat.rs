//! Brute-force permutation statistics: descents and major index of
//! multiset and signed permutations, the q-Eulerian polynomials, and a
//! truncated check of the Carlitz identity
//! `Σ_k [k+1]^n t^k = A_n(q, t) / Π_{j=0}^{n} (1 - t q^j)`.
//!
//! Enumeration is lazy; distributions are accumulated without ever
//! collecting the permutations.

use std::cmp::Ordering;

use num_traits::One;
use thiserror::Error;

use crate::abindex::{AbWord, Letter};
use crate::qarith::{q_int, BiPoly, Poly, TSeries};
use crate::{Int, QPoly, QTPoly};

/// Environment variable overriding [`EnumLimits::max_count`].
pub const MAX_ENUM_ENV: &str = "MAJORDEX_MAX_ENUM";

const MAX_EULERIAN_N: usize = 9;
const MAX_CARLITZ_N: usize = 7;
const MAX_CARLITZ_ORDER: u32 = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("{what} is {got}, above the limit {limit}")]
    TooLarge { what: &'static str, got: u128, limit: u128 },
    #[error("invalid input: {0}")]
    Invalid(String),
}

/// Bounds on brute-force enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumLimits {
    /// Largest multiset size `|α|`.
    pub max_len: usize,
    /// Largest number of signed permutations `n! Π r_i`.
    pub max_count: u128,
}

impl Default for EnumLimits {
    fn default() -> Self {
        Self {
            max_len: 10,
            max_count: 3_628_800,
        }
    }
}

impl EnumLimits {
    /// Defaults, with `max_count` taken from `MAJORDEX_MAX_ENUM` when that
    /// holds a positive integer.
    pub fn from_env() -> Self {
        let mut limits = Self::default();
        if let Some(n) = std::env::var(MAX_ENUM_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<u128>().ok())
        {
            if n > 0 {
                limits.max_count = n;
            }
        }
        limits
    }
}

/// `{i : π_i > π_{i+1}}`, 1-based.
pub fn descent_set<T: Ord>(pi: &[T]) -> Vec<usize> {
    pi.windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] > w[1])
        .map(|(i, _)| i + 1)
        .collect()
}

pub fn maj<T: Ord>(pi: &[T]) -> usize {
    descent_set(pi).into_iter().sum()
}

pub fn des<T: Ord>(pi: &[T]) -> usize {
    descent_set(pi).len()
}

/// Length `n - 1`, `b` at each descent.
pub fn descent_word<T: Ord>(pi: &[T]) -> AbWord {
    pi.windows(2).fold(AbWord::EMPTY, |w, p| {
        w.push(if p[0] > p[1] { Letter::B } else { Letter::A })
    })
}

/// Rearranges `v` into its lexicographic successor; false at the last one.
fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len())
        .rev()
        .find(|&j| v[j] > v[i - 1])
        .expect("a larger element follows the pivot");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Distinct permutations of `1^{α_1} 2^{α_2} ...` in lexicographic order.
#[derive(Debug, Clone)]
pub struct MultisetPerms {
    current: Vec<u32>,
    done: bool,
}

impl Iterator for MultisetPerms {
    type Item = Vec<u32>;
    fn next(&mut self) -> Option<Vec<u32>> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        self.done = !next_permutation(&mut self.current);
        Some(out)
    }
}

fn check_composition(alpha: &[u32]) -> Result<(), PermError> {
    if alpha.is_empty() || alpha.contains(&0) {
        return Err(PermError::Invalid("composition parts must be positive".into()));
    }
    Ok(())
}

pub fn enumerate_multiset(alpha: &[u32], limits: &EnumLimits) -> Result<MultisetPerms, PermError> {
    check_composition(alpha)?;
    let n: u128 = alpha.iter().map(|&a| a as u128).sum();
    if n > limits.max_len as u128 {
        return Err(PermError::TooLarge {
            what: "multiset size",
            got: n,
            limit: limits.max_len as u128,
        });
    }
    let current = alpha
        .iter()
        .enumerate()
        .flat_map(|(i, &a)| std::iter::repeat_n(i as u32 + 1, a as usize))
        .collect();
    Ok(MultisetPerms { current, done: false })
}

/// `Σ q^{maj(π)}` over the permutations of the multiset.
pub fn maj_distribution(alpha: &[u32], limits: &EnumLimits) -> Result<QPoly, PermError> {
    let mut counts: Vec<u64> = Vec::new();
    for pi in enumerate_multiset(alpha, limits)? {
        bump(&mut counts, maj(&pi));
    }
    Ok(from_counts(&counts))
}

fn bump(counts: &mut Vec<u64>, e: usize) {
    if counts.len() <= e {
        counts.resize(e + 1, 0);
    }
    counts[e] += 1;
}

fn from_counts(counts: &[u64]) -> QPoly {
    counts
        .iter()
        .enumerate()
        .map(|(e, &c)| (e as u32, Int::from(c)))
        .collect()
}

/// An entry of a signed permutation: a letter with its sign, or the
/// trailing sentinel `0`.
///
/// Letters compare lexicographically on `(sign, letter)`; the sentinel is
/// below `(j, i)` exactly when `j > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SignedEntry {
    Letter { sign: i64, letter: u32 },
    Zero,
}

impl SignedEntry {
    fn key(self) -> (i64, i64) {
        match self {
            SignedEntry::Letter { sign, letter } => (sign, letter as i64),
            SignedEntry::Zero => (0, i64::MAX),
        }
    }
}

impl Ord for SignedEntry {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for SignedEntry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `σ_1 ... σ_n 0` with each `σ_k = (j_k, π_k)` and
/// `j_k ∈ {-1, 2, ..., r_{π_k}}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedPerm {
    entries: Vec<SignedEntry>,
}

impl SignedPerm {
    /// All `n + 1` entries including the sentinel.
    pub fn entries(&self) -> &[SignedEntry] {
        &self.entries
    }

    pub fn descent_set(&self) -> Vec<usize> {
        descent_set(&self.entries)
    }

    pub fn maj(&self) -> usize {
        maj(&self.entries)
    }
}

/// Every signed permutation for sign bounds `r`, letters in lexicographic
/// order on the underlying permutation and signs varying fastest.
#[derive(Debug, Clone)]
pub struct SignedPerms {
    r: Vec<u32>,
    perm: Vec<u32>,
    /// `signs[k]` indexes into `{-1, 2, ..., r_{perm[k]}}`.
    signs: Vec<u32>,
    done: bool,
}

fn sign_value(index: u32) -> i64 {
    if index == 0 {
        -1
    } else {
        index as i64 + 1
    }
}

impl Iterator for SignedPerms {
    type Item = SignedPerm;
    fn next(&mut self) -> Option<SignedPerm> {
        if self.done {
            return None;
        }
        let mut entries: Vec<SignedEntry> = self
            .perm
            .iter()
            .zip(&self.signs)
            .map(|(&letter, &s)| SignedEntry::Letter {
                sign: sign_value(s),
                letter,
            })
            .collect();
        entries.push(SignedEntry::Zero);
        // advance the mixed-radix sign counter, then the permutation
        let mut k = self.signs.len();
        loop {
            if k == 0 {
                self.done = !next_permutation(&mut self.perm);
                break;
            }
            k -= 1;
            self.signs[k] += 1;
            if self.signs[k] < self.r[self.perm[k] as usize - 1] {
                break;
            }
            self.signs[k] = 0;
        }
        Some(SignedPerm { entries })
    }
}

/// `n! Π r_i`, or `None` on overflow.
fn signed_count(r: &[u32]) -> Option<u128> {
    let fact = (1..=r.len() as u128).try_fold(1u128, |a, b| a.checked_mul(b))?;
    r.iter().try_fold(fact, |a, &b| a.checked_mul(b as u128))
}

pub fn enumerate_signed(r: &[u32], limits: &EnumLimits) -> Result<SignedPerms, PermError> {
    if r.is_empty() || r.contains(&0) {
        return Err(PermError::Invalid("sign bounds must be positive".into()));
    }
    let count = signed_count(r).unwrap_or(u128::MAX);
    if count > limits.max_count {
        return Err(PermError::TooLarge {
            what: "signed permutation count",
            got: count,
            limit: limits.max_count,
        });
    }
    Ok(SignedPerms {
        r: r.to_vec(),
        perm: (1..=r.len() as u32).collect(),
        signs: vec![0; r.len()],
        done: false,
    })
}

/// `Σ q^{maj(σ)}` over signed permutations.
pub fn signed_maj_distribution(r: &[u32], limits: &EnumLimits) -> Result<QPoly, PermError> {
    let mut counts = Vec::new();
    for sigma in enumerate_signed(r, limits)? {
        bump(&mut counts, sigma.maj());
    }
    Ok(from_counts(&counts))
}

/// `[n]! Π (1 + (r_i - 1) q)`.
pub fn signed_maj_formula(r: &[u32]) -> QPoly {
    let base = crate::qarith::q_factorial::<Int>(r.len() as u32);
    r.iter().fold(base, |acc, &ri| {
        &acc * &Poly::from_coeffs([Int::one(), Int::from(ri) - 1])
    })
}

/// `A_n(q, t) = Σ_{π ∈ S_n} q^{maj π} t^{des π}`, for `n <= 9`.
pub fn q_eulerian(n: usize) -> Result<QTPoly, PermError> {
    if n > MAX_EULERIAN_N {
        return Err(PermError::TooLarge {
            what: "n",
            got: n as u128,
            limit: MAX_EULERIAN_N as u128,
        });
    }
    let mut counts: std::collections::BTreeMap<(u32, u32), u64> = Default::default();
    let mut pi: Vec<u32> = (1..=n as u32).collect();
    loop {
        let d = descent_set(&pi);
        *counts
            .entry((d.iter().sum::<usize>() as u32, d.len() as u32))
            .or_default() += 1;
        if !next_permutation(&mut pi) {
            break;
        }
    }
    let mut out = BiPoly::zero();
    for ((q, t), c) in counts {
        out += &BiPoly::monomial(q, t, Int::from(c));
    }
    Ok(out)
}

/// Compares both sides of the Carlitz identity through `t^order`, for
/// `n <= 7` and `order <= 12`. `Ok(None)` when every coefficient agrees,
/// otherwise `Ok(Some(k))` with the first disagreeing power of `t`.
pub fn carlitz_check(n: usize, order: u32) -> Result<Option<u32>, PermError> {
    if n > MAX_CARLITZ_N {
        return Err(PermError::TooLarge {
            what: "n",
            got: n as u128,
            limit: MAX_CARLITZ_N as u128,
        });
    }
    if order > MAX_CARLITZ_ORDER {
        return Err(PermError::TooLarge {
            what: "t-order",
            got: order as u128,
            limit: MAX_CARLITZ_ORDER as u128,
        });
    }
    let lhs: Vec<QPoly> = (0..=order).map(|k| q_int::<Int>(k + 1).pow(n as u32)).collect();
    let mut denom = BiPoly::one();
    for j in 0..=n as u32 {
        denom = &denom * &(&BiPoly::one() - &BiPoly::monomial(j, 1, Int::one()));
    }
    let inv = TSeries::from_bipoly(&denom, order)
        .inverse()
        .expect("denominator has constant term 1");
    let rhs = &TSeries::from_bipoly(&q_eulerian(n)?, order) * &inv;
    Ok((0..=order).find(|&k| rhs.coeff(k) != &lhs[k as usize]))
}
