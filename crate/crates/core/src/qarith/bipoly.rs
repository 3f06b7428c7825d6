use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use super::poly::{forward_owned, Poly};
use crate::coeff::Coeff;
use crate::render::{join_factors, power, write_terms};

/// A polynomial in two commuting variables `q` and `t`, keyed by the
/// exponent pair `(q, t)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BiPoly<C> {
    terms: BTreeMap<(u32, u32), C>,
}

impl<C: Coeff> Default for BiPoly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coeff> BiPoly<C> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, C::one())
    }

    pub fn monomial(q_exp: u32, t_exp: u32, c: C) -> Self {
        let mut p = Self::zero();
        p.add_term(q_exp, t_exp, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, q_exp: u32, t_exp: u32) -> C {
        self.terms.get(&(q_exp, t_exp)).cloned().unwrap_or_else(C::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &C)> + '_ {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    pub(crate) fn add_term(&mut self, q_exp: u32, t_exp: u32, c: C) {
        if c.is_zero() {
            return;
        }
        let key = (q_exp, t_exp);
        let slot = self.terms.entry(key).or_insert_with(C::zero);
        *slot = slot.clone() + c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn max_t_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, t)| t).max()
    }

    /// Sets `t = 1`, leaving a polynomial in `q`.
    pub fn at_t_one(&self) -> Poly<C> {
        self.terms.iter().map(|(&(q, _), c)| (q, c.clone())).collect()
    }

    /// Sets `q = 1`, leaving a polynomial in `t` (stored as a [`Poly`]).
    pub fn at_q_one(&self) -> Poly<C> {
        self.terms.iter().map(|(&(_, t), c)| (t, c.clone())).collect()
    }

    /// The coefficient of `t^k` as a polynomial in `q`.
    pub fn t_coeff(&self, k: u32) -> Poly<C> {
        self.terms
            .iter()
            .filter(|(&(_, t), _)| t == k)
            .map(|(&(q, _), c)| (q, c.clone()))
            .collect()
    }

    /// Embeds a polynomial in `q` as the `t^k` slice.
    pub fn from_q_poly(p: &Poly<C>, t_exp: u32) -> Self {
        let mut out = Self::zero();
        for (e, c) in p.terms() {
            out.add_term(e, t_exp, c.clone());
        }
        out
    }
}

impl<C: Coeff> fmt::Display for BiPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            self.terms
                .iter()
                .map(|(&(q, t), c)| (join_factors(&[power("q", q), power("t", t)]), c)),
        )
    }
}

impl<C: Coeff> AddAssign<&BiPoly<C>> for BiPoly<C> {
    fn add_assign(&mut self, rhs: &BiPoly<C>) {
        for (&(q, t), c) in &rhs.terms {
            self.add_term(q, t, c.clone());
        }
    }
}

impl<C: Coeff> SubAssign<&BiPoly<C>> for BiPoly<C> {
    fn sub_assign(&mut self, rhs: &BiPoly<C>) {
        for (&(q, t), c) in &rhs.terms {
            self.add_term(q, t, -c.clone());
        }
    }
}

impl<C: Coeff> Add<&BiPoly<C>> for &BiPoly<C> {
    type Output = BiPoly<C>;
    fn add(self, rhs: &BiPoly<C>) -> BiPoly<C> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<C: Coeff> Sub<&BiPoly<C>> for &BiPoly<C> {
    type Output = BiPoly<C>;
    fn sub(self, rhs: &BiPoly<C>) -> BiPoly<C> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<C: Coeff> Neg for &BiPoly<C> {
    type Output = BiPoly<C>;
    fn neg(self) -> BiPoly<C> {
        BiPoly {
            terms: self.terms.iter().map(|(&k, c)| (k, -c.clone())).collect(),
        }
    }
}

impl<C: Coeff> Mul<&BiPoly<C>> for &BiPoly<C> {
    type Output = BiPoly<C>;
    fn mul(self, rhs: &BiPoly<C>) -> BiPoly<C> {
        let mut out = BiPoly::zero();
        for (&(q1, t1), c1) in &self.terms {
            for (&(q2, t2), c2) in &rhs.terms {
                out.add_term(q1 + q2, t1 + t2, c1.clone() * c2.clone());
            }
        }
        out
    }
}

forward_owned!(BiPoly, Add add, Sub sub, Mul mul);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn render_q_first() {
        let p = BiPoly::<i64>::monomial(2, 1, 1) + BiPoly::one() + BiPoly::monomial(5, 2, 3);
        assert_eq!(p.to_string(), "1 + q^2*t + 3*q^5*t^2");
        assert_eq!(BiPoly::<i64>::monomial(0, 1, -1).to_string(), "-t");
    }

    #[test]
    fn specializations() {
        // (1 + q t)^2
        let x = BiPoly::<i64>::one() + BiPoly::monomial(1, 1, 1);
        let sq = &x * &x;
        assert_eq!(sq.at_t_one(), Poly::from_ints(&[1, 2, 1]));
        assert_eq!(sq.at_q_one(), Poly::from_ints(&[1, 2, 1]));
        assert_eq!(sq.t_coeff(1), Poly::from_ints(&[0, 2]));
        assert_eq!(sq.max_t_degree(), Some(2));
        assert!((&sq - &sq).is_zero());
    }
}
