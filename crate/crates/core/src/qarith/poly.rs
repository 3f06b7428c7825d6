use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use crate::coeff::Coeff;
use crate::render::{power, write_terms};

/// A polynomial in one commuting variable, stored sparsely by exponent.
///
/// Zero coefficients are never stored, so two polynomials are equal exactly
/// when their maps are equal.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly<C> {
    terms: BTreeMap<u32, C>,
}

impl<C: Coeff> Default for Poly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coeff> Poly<C> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(0, c)
    }

    /// The variable itself.
    pub fn q() -> Self {
        Self::monomial(1, C::one())
    }

    pub fn monomial(exp: u32, c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    /// Builds from a dense coefficient list, lowest degree first.
    pub fn from_coeffs<I: IntoIterator<Item = C>>(coeffs: I) -> Self {
        coeffs.into_iter().enumerate().map(|(e, c)| (e as u32, c)).collect()
    }

    /// Convenience for tests and literals: dense integer coefficients.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| C::from_int(c)))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    pub fn low_degree(&self) -> Option<u32> {
        self.terms.keys().next().copied()
    }

    pub fn coeff(&self, exp: u32) -> C {
        self.terms.get(&exp).cloned().unwrap_or_else(C::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &C)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn leading_coeff(&self) -> Option<&C> {
        self.terms.values().next_back()
    }

    pub(crate) fn add_term(&mut self, exp: u32, c: C) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(C::zero);
        *slot = slot.clone() + c;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: u32) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&e, x)| (e, x.clone() * c.clone())).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn eval(&self, x: &C) -> C {
        // Horner from the top exponent down.
        let Some(deg) = self.degree() else { return C::zero() };
        let mut acc = C::zero();
        for e in (0..=deg).rev() {
            acc = acc * x.clone() + self.coeff(e);
        }
        acc
    }

    /// Quotient and remainder by `d`, or `None` when some step needs a
    /// coefficient division that is not exact in `C`.
    pub fn div_rem(&self, d: &Self) -> Option<(Self, Self)> {
        let d_deg = d.degree()?;
        let d_lead = d.leading_coeff()?.clone();
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some(r_deg) = rem.degree() {
            if r_deg < d_deg {
                break;
            }
            let c = rem.leading_coeff()?.exact_div(&d_lead)?;
            let k = r_deg - d_deg;
            quot.add_term(k, c.clone());
            rem = &rem - &d.shift(k).scale(&c);
        }
        Some((quot, rem))
    }

    /// The quotient `self / d` when `d` divides `self` exactly; `None` when
    /// it does not ("not divisible" is an ordinary answer).
    ///
    /// # Panics
    /// If `d` is zero.
    pub fn exact_divide(&self, d: &Self) -> Option<Self> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        match self.div_rem(d) {
            Some((q, r)) if r.is_zero() => Some(q),
            _ => None,
        }
    }

    pub fn divides(&self, p: &Self) -> bool {
        p.exact_divide(self).is_some()
    }

    /// Reverses the coefficient list of a polynomial of degree at most `n`.
    pub fn reflect(&self, n: u32) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, c)| (n - e, c.clone())).collect(),
        }
    }

    pub fn is_palindromic(&self) -> bool {
        match (self.low_degree(), self.degree()) {
            (Some(lo), Some(hi)) => self.reflect(hi + lo) == *self,
            _ => true,
        }
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    pub fn map_coeffs<D: Coeff, F: Fn(&C) -> D>(&self, f: F) -> Poly<D> {
        self.terms.iter().map(|(&e, c)| (e, f(c))).collect()
    }

    /// Renders with a chosen variable name.
    pub fn display_in<'a>(&'a self, var: &'a str) -> impl fmt::Display + 'a {
        struct D<'a, C>(&'a Poly<C>, &'a str);
        impl<C: Coeff> fmt::Display for D<'_, C> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write_terms(f, self.0.terms.iter().map(|(&e, c)| (power(self.1, e), c)))
            }
        }
        D(self, var)
    }
}

impl<C: Coeff> FromIterator<(u32, C)> for Poly<C> {
    fn from_iter<I: IntoIterator<Item = (u32, C)>>(iter: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in iter {
            p.add_term(e, c);
        }
        p
    }
}

impl<C: Coeff> fmt::Display for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_in("q"))
    }
}

impl<C: Coeff> Add<&Poly<C>> for &Poly<C> {
    type Output = Poly<C>;
    fn add(self, rhs: &Poly<C>) -> Poly<C> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<C: Coeff> AddAssign<&Poly<C>> for Poly<C> {
    fn add_assign(&mut self, rhs: &Poly<C>) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, c.clone());
        }
    }
}

impl<C: Coeff> SubAssign<&Poly<C>> for Poly<C> {
    fn sub_assign(&mut self, rhs: &Poly<C>) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, -c.clone());
        }
    }
}

impl<C: Coeff> Sub<&Poly<C>> for &Poly<C> {
    type Output = Poly<C>;
    fn sub(self, rhs: &Poly<C>) -> Poly<C> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<C: Coeff> Neg for &Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        Poly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c.clone())).collect(),
        }
    }
}

impl<C: Coeff> Mul<&Poly<C>> for &Poly<C> {
    type Output = Poly<C>;
    fn mul(self, rhs: &Poly<C>) -> Poly<C> {
        let mut out = Poly::zero();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1.clone() * c2.clone());
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($ty:ident, $($tr:ident $m:ident),*) => {$(
        impl<C: Coeff> $tr<$ty<C>> for $ty<C> {
            type Output = $ty<C>;
            fn $m(self, rhs: $ty<C>) -> $ty<C> { (&self).$m(&rhs) }
        }
        impl<C: Coeff> $tr<&$ty<C>> for $ty<C> {
            type Output = $ty<C>;
            fn $m(self, rhs: &$ty<C>) -> $ty<C> { (&self).$m(rhs) }
        }
    )*
    impl<C: Coeff> Neg for $ty<C> {
        type Output = $ty<C>;
        fn neg(self) -> $ty<C> { -&self }
    }
    impl<C: Coeff> std::iter::Sum for $ty<C> {
        fn sum<I: Iterator<Item = $ty<C>>>(iter: I) -> $ty<C> {
            let mut acc = $ty::zero();
            for x in iter { acc += &x; }
            acc
        }
    }
    };
}
pub(crate) use forward_owned;

forward_owned!(Poly, Add add, Sub sub, Mul mul);

impl<C: Coeff> std::iter::Product for Poly<C> {
    fn product<I: Iterator<Item = Poly<C>>>(iter: I) -> Poly<C> {
        iter.fold(Poly::one(), |acc, x| &acc * &x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = Poly<i64>;

    #[test]
    fn multiply_schoolbook() {
        let p = P::from_ints(&[1, 1]) * P::from_ints(&[1, 1, 1]);
        assert_eq!(p, P::from_ints(&[1, 2, 2, 1]));
    }

    #[test]
    fn exact_divide_examples() {
        assert_eq!(
            P::from_ints(&[1, 2, 1]).exact_divide(&P::from_ints(&[1, 1])),
            Some(P::from_ints(&[1, 1]))
        );
        assert_eq!(P::from_ints(&[1, 0, 1]).exact_divide(&P::from_ints(&[1, 1])), None);
        // lead coefficient 2 does not divide 1 over the integers
        assert_eq!(P::from_ints(&[0, 1]).exact_divide(&P::from_ints(&[0, 2])), None);
    }

    #[test]
    fn divides_examples() {
        let two = P::from_ints(&[1, 1]);
        let f3 = P::from_ints(&[1, 2, 2, 1]);
        assert!(two.divides(&f3));
        assert!(!two.divides(&P::from_ints(&[1, 0, 1])));
        assert!(two.pow(2).divides(&two.pow(3)));
        assert!(!two.pow(4).divides(&two.pow(3)));
    }

    #[test]
    #[should_panic]
    fn divide_by_zero_panics() {
        P::one().exact_divide(&P::zero());
    }

    #[test]
    fn rendering() {
        assert_eq!(P::from_ints(&[1, 2, 1]).to_string(), "1 + 2*q + q^2");
        assert_eq!(P::from_ints(&[0, -1, 0, 3]).to_string(), "-q + 3*q^3");
        assert_eq!(P::from_ints(&[1, -1]).to_string(), "1 - q");
        assert_eq!(P::zero().to_string(), "0");
        assert_eq!(P::from_ints(&[-2]).to_string(), "-2");
    }

    #[test]
    fn no_zero_coefficients_stored() {
        let p = P::from_ints(&[1, 1]) - P::from_ints(&[0, 1]);
        assert_eq!(p, P::one());
        assert_eq!(p.num_terms(), 1);
        assert_eq!((P::q() - P::q()).degree(), None);
    }

    #[test]
    fn palindromes() {
        assert!(P::from_ints(&[1, 3, 3, 1]).is_palindromic());
        assert!(P::from_ints(&[0, 1, 1]).is_palindromic());
        assert!(!P::from_ints(&[1, 2]).is_palindromic());
    }

    #[test]
    fn eval_and_pow() {
        assert_eq!(P::from_ints(&[1, 1]).pow(5).eval(&1), 32);
        assert_eq!(P::from_ints(&[1, -1, 2]).eval(&2), 7);
    }
}
