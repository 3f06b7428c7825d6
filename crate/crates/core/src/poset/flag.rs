use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::GradedPoset;
use crate::abindex::{vpoly_of_mask, AbPoly, AbWord};
use crate::Int;

/// Flag f-vector of a poset of rank `n + 1`: `f_S` for every `S ⊆ {1..n}`.
///
/// Subsets are bitmasks with bit `i - 1` standing for `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagVector {
    n: usize,
    counts: BTreeMap<u64, Int>,
}

/// Flag h-vector, same indexing as [`FlagVector`]; entries may be negative
/// for arbitrary posets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagH {
    n: usize,
    values: BTreeMap<u64, Int>,
}

fn mask_of(set: &[u32]) -> u64 {
    set.iter().fold(0, |m, &i| m | 1 << (i - 1))
}

fn set_of(mask: u64) -> Vec<u32> {
    (0..64).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect()
}

impl FlagVector {
    /// The top of the index range: subsets live in `{1..n}`.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, set: &[u32]) -> Int {
        self.get_mask(mask_of(set))
    }

    pub fn get_mask(&self, mask: u64) -> Int {
        self.counts.get(&mask).cloned().unwrap_or_else(Int::zero)
    }

    /// `(S, f_S)` with `S` as a sorted list.
    pub fn entries(&self) -> impl Iterator<Item = (Vec<u32>, &Int)> + '_ {
        self.counts.iter().map(|(&m, c)| (set_of(m), c))
    }

    pub(crate) fn masks(&self) -> impl Iterator<Item = (u64, &Int)> + '_ {
        self.counts.iter().map(|(&m, c)| (m, c))
    }

    /// Inverse of [`flag_h`]: `f_S = Σ_{T ⊆ S} h_T`.
    pub fn from_h(h: &FlagH) -> FlagVector {
        FlagVector {
            n: h.n,
            counts: subset_transform(h.n, &h.values, false),
        }
    }
}

impl FlagH {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, set: &[u32]) -> Int {
        self.values.get(&mask_of(set)).cloned().unwrap_or_else(Int::zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (Vec<u32>, &Int)> + '_ {
        self.values.iter().map(|(&m, c)| (set_of(m), c))
    }
}

/// Zeta (`signed = false`) or Möbius (`signed = true`) transform over the
/// subset lattice of `{1..n}`.
fn subset_transform(n: usize, input: &BTreeMap<u64, Int>, signed: bool) -> BTreeMap<u64, Int> {
    let size = 1usize << n;
    let mut v: Vec<Int> = (0..size as u64)
        .map(|m| input.get(&m).cloned().unwrap_or_else(Int::zero))
        .collect();
    for bit in 0..n {
        for m in 0..size {
            if m >> bit & 1 == 1 {
                let lower = v[m ^ (1 << bit)].clone();
                if signed {
                    v[m] -= lower;
                } else {
                    v[m] += lower;
                }
            }
        }
    }
    v.into_iter().enumerate().map(|(m, c)| (m as u64, c)).collect()
}

/// `h_S = Σ_{T ⊆ S} (-1)^{|S - T|} f_T`.
pub fn flag_h(fv: &FlagVector) -> FlagH {
    FlagH {
        n: fv.n,
        values: subset_transform(fv.n, &fv.counts, true),
    }
}

impl GradedPoset {
    /// Counts chains through each rank selection by multiplying 0/1
    /// incidence matrices between the selected rank levels.
    ///
    /// # Panics
    /// On rank-0 posets, whose index set would be `{1..-1}`.
    pub fn flag_f(&self) -> FlagVector {
        assert!(self.rank() >= 1, "flag vectors need rank at least 1");
        let n = self.rank() - 1;
        assert!(n < 64, "rank too large for subset masks");
        let mut counts = BTreeMap::new();
        // counts at the last selected level, indexed by element
        let mut start = vec![0u128; self.len()];
        start[self.bottom] = 1;
        self.flag_dfs(0, &start, 0, n, &mut counts);
        FlagVector { n, counts }
    }

    fn flag_dfs(&self, rank: usize, vec: &[u128], mask: u64, n: usize, out: &mut BTreeMap<u64, Int>) {
        let total = self
            .level(rank)
            .iter()
            .map(|&x| vec[x])
            .try_fold(0u128, |a, b| a.checked_add(b));
        out.insert(mask, BigInt::from(total.expect("chain count overflow")));
        for next in rank + 1..=n {
            let mut nv = vec![0u128; self.len()];
            for &y in self.level(next) {
                let mut acc = 0u128;
                for &x in self.level(rank) {
                    if vec[x] != 0 && self.leq(x, y) {
                        acc = acc.checked_add(vec[x]).expect("chain count overflow");
                    }
                }
                nv[y] = acc;
            }
            self.flag_dfs(next, &nv, mask | 1 << (next - 1), n, out);
        }
    }

    /// Ψ(P) = Σ_S h_S u_S, an ab-polynomial of degree `rank - 1`.
    pub fn ab_index(&self) -> AbPoly<Int> {
        let h = flag_h(&self.flag_f());
        h.values
            .iter()
            .map(|(&m, c)| (AbWord::from_mask(m, h.n), c.clone()))
            .collect()
    }

    /// Ψ(P) = Σ_S f_S v_S; the independent route used as an oracle.
    pub fn ab_index_via_f(&self) -> AbPoly<Int> {
        let fv = self.flag_f();
        let mut out = AbPoly::zero();
        for (m, c) in fv.masks() {
            out += &vpoly_of_mask::<Int>(m, fv.n).scale(c);
        }
        out
    }

    /// Number of maximal chains, `f_{1..n}`.
    pub fn maximal_chain_count(&self) -> Int {
        let mut count = vec![Int::zero(); self.len()];
        count[self.bottom] = Int::one();
        for r in 1..=self.rank() {
            for &y in self.level(r) {
                count[y] = self.lower_covers(y).iter().map(|&x| count[x].clone()).sum();
            }
        }
        count[self.top].clone()
    }
}
