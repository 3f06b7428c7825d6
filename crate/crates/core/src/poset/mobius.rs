use std::collections::HashSet;

use num_traits::{One, Zero};

use super::{GradedPoset, PosetError};
use crate::qarith::Poly;
use crate::Int;

impl GradedPoset {
    /// `μ(x, z)` for every `z ≥ x`, indexed by element (zero elsewhere).
    fn mobius_row(&self, x: usize) -> Vec<i64> {
        let mut mu = vec![0i64; self.len()];
        let mut ups: Vec<usize> = self.above[x].ones().collect();
        ups.sort_by_key(|&z| self.rank[z]);
        for &y in &ups {
            if y == x {
                mu[y] = 1;
                continue;
            }
            let mut between = self.above[x].clone();
            between.intersect_with(&self.below[y]);
            let s: i64 = between.ones().filter(|&z| z != y).map(|z| mu[z]).sum();
            mu[y] = -s;
        }
        mu
    }

    /// The Möbius function on a comparable pair.
    pub fn mobius(&self, x: usize, y: usize) -> Result<i64, PosetError> {
        if !self.leq(x, y) {
            return Err(PosetError::Incomparable(self.names[x].clone(), self.names[y].clone()));
        }
        Ok(self.mobius_row(x)[y])
    }

    /// Whether `μ(x, y) = (-1)^{ρ(x,y)}` on every interval.
    pub fn is_eulerian(&self) -> bool {
        (0..self.len()).all(|x| {
            let mu = self.mobius_row(x);
            self.above[x].ones().all(|y| {
                let expected = if self.rank_diff(x, y).is_multiple_of(2) { 1 } else { -1 };
                mu[y] == expected
            })
        })
    }

    /// Whether every lower interval `[0̂, x]` with `x < 1̂` is Boolean.
    ///
    /// Each element of the interval is sent to the set of atoms below it; the
    /// interval is Boolean exactly when this is an order isomorphism onto all
    /// subsets of the `ρ(x)` atoms below `x`.
    pub fn is_simplicial(&self) -> bool {
        let atoms = self.level(1.min(self.rank()));
        (0..self.len()).filter(|&x| x != self.top).all(|x| {
            let k = self.rank[x];
            let my_atoms: Vec<usize> = atoms
                .iter()
                .copied()
                .filter(|&a| self.rank[a] == 1 && self.leq(a, x))
                .collect();
            if my_atoms.len() != k || k >= 63 {
                return false;
            }
            let elems = self.interval_elements(self.bottom, x);
            if elems.len() != 1 << k {
                return false;
            }
            let code = |z: usize| -> u64 {
                my_atoms
                    .iter()
                    .enumerate()
                    .filter(|&(_, &a)| self.leq(a, z))
                    .fold(0, |m, (i, _)| m | 1 << i)
            };
            let codes: Vec<u64> = elems.iter().map(|&z| code(z)).collect();
            if codes.iter().collect::<HashSet<_>>().len() != codes.len() {
                return false;
            }
            elems.iter().zip(&codes).all(|(&z, &cz)| {
                elems
                    .iter()
                    .zip(&codes)
                    .all(|(&w, &cw)| self.leq(z, w) == (cz & !cw == 0))
            })
        })
    }

    /// `(f_0, f_1, ..., f_n)` with `f_0 = 1` and `f_i` the number of rank-`i`
    /// elements, for a poset of rank `n + 1`.
    pub fn f_vector(&self) -> Vec<Int> {
        let n = self.rank().saturating_sub(1);
        (0..=n)
            .map(|i| {
                if i == 0 {
                    Int::one()
                } else {
                    Int::from(self.level(i).len())
                }
            })
            .collect()
    }

    /// `h(q) = Σ_i f_i q^i (1 - q)^{n-i}` for a simplicial poset.
    pub fn h_polynomial(&self) -> Result<Poly<Int>, PosetError> {
        if self.rank() == 0 || !self.is_simplicial() {
            return Err(PosetError::NotSimplicial);
        }
        let f = self.f_vector();
        let n = f.len() as u32 - 1;
        let one_minus_q = Poly::from_coeffs([Int::one(), -Int::one()]);
        let mut h = Poly::zero();
        for (i, fi) in f.iter().enumerate() {
            if fi.is_zero() {
                continue;
            }
            h += &(&Poly::monomial(i as u32, fi.clone()) * &one_minus_q.pow(n - i as u32));
        }
        Ok(h)
    }
}
