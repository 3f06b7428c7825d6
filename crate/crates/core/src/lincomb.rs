//! Finite formal linear combinations of basis keys.
//!
//! Backs the ab-polynomials, cd-polynomials and both quasi-symmetric bases.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use crate::coeff::Coeff;
use crate::render::write_terms;

/// How a basis key prints inside a linear combination. The empty string
/// denotes the unit.
pub trait RenderKey {
    fn render(&self) -> String;
}

/// Keys that form a monoid, making the combinations an algebra.
pub trait MonoidKey: Ord + Clone {
    fn unit() -> Self;
    fn op(&self, other: &Self) -> Self;
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LinComb<K: Ord, C> {
    terms: BTreeMap<K, C>,
}

impl<K: Ord + Clone, C: Coeff> Default for LinComb<K, C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<K: Ord + Clone, C: Coeff> LinComb<K, C> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn term(key: K, c: C) -> Self {
        let mut out = Self::zero();
        out.add_term(key, c);
        out
    }

    pub fn basis(key: K) -> Self {
        Self::term(key, C::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &K) -> C {
        self.terms.get(key).cloned().unwrap_or_else(C::zero)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&K, &C)> + '_ {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl DoubleEndedIterator<Item = &K> + '_ {
        self.terms.keys()
    }

    pub fn add_term(&mut self, key: K, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(slot) => {
                *slot = slot.clone() + c;
                if slot.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(k, x)| (k.clone(), x.clone() * c.clone()))
                .collect(),
        }
    }

    /// Applies a linear map given on basis keys.
    pub fn map_linear<K2, F>(&self, mut f: F) -> LinComb<K2, C>
    where
        K2: Ord + Clone,
        F: FnMut(&K) -> LinComb<K2, C>,
    {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            for (k2, c2) in f(k).terms {
                out.add_term(k2, c2 * c.clone());
            }
        }
        out
    }

    /// Relabels basis keys; collisions add.
    pub fn map_keys<K2: Ord + Clone, F: FnMut(&K) -> K2>(&self, mut f: F) -> LinComb<K2, C> {
        self.terms.iter().map(|(k, c)| (f(k), c.clone())).collect()
    }

    pub fn map_coeffs<D: Coeff, F: Fn(&C) -> D>(&self, f: F) -> LinComb<K, D> {
        self.terms.iter().map(|(k, c)| (k.clone(), f(c))).collect()
    }

    /// Bilinear extension of a product given on pairs of basis keys.
    pub fn bilinear<F>(&self, other: &Self, mut f: F) -> Self
    where
        F: FnMut(&K, &K) -> Self,
    {
        let mut out = Self::zero();
        for (k1, c1) in &self.terms {
            for (k2, c2) in &other.terms {
                let prod = c1.clone() * c2.clone();
                for (k, c) in f(k1, k2).terms {
                    out.add_term(k, c * prod.clone());
                }
            }
        }
        out
    }
}

impl<K: Ord + Clone + std::str::FromStr, C: Coeff> LinComb<K, C> {
    /// Parses `2*ab - bb + 3` style text: terms joined by `+`/`-`, each an
    /// optional integer coefficient and `*`, then a key. A bare integer is a
    /// multiple of the key parsed from the empty string.
    pub fn parse(s: &str) -> Result<Self, ParseTermsError> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact == "0" {
            return Ok(Self::zero());
        }
        let mut out = Self::zero();
        let mut rest = compact.as_str();
        let mut first = true;
        while !rest.is_empty() || first {
            let (negative, body) = match rest.as_bytes().first() {
                Some(b'+') if !first => (false, &rest[1..]),
                Some(b'-') => (true, &rest[1..]),
                _ if first => (false, rest),
                _ => return Err(ParseTermsError(s.to_string())),
            };
            first = false;
            let end = body.find(['+', '-']).unwrap_or(body.len());
            let term = &body[..end];
            rest = &body[end..];
            if term.is_empty() {
                return Err(ParseTermsError(s.to_string()));
            }
            let (coef, key) = match term.split_once('*') {
                Some((c, k)) => (c.parse::<i64>().map_err(|_| ParseTermsError(s.to_string()))?, k),
                None => match term.parse::<i64>() {
                    Ok(c) => (c, ""),
                    Err(_) => (1, term),
                },
            };
            let key = if key == "1" { "" } else { key };
            let key = key.parse::<K>().map_err(|_| ParseTermsError(s.to_string()))?;
            let coef = if negative { -coef } else { coef };
            out.add_term(key, C::from_int(coef));
        }
        Ok(out)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse linear combination {0:?}")]
pub struct ParseTermsError(pub String);

impl<K: MonoidKey, C: Coeff> LinComb<K, C> {
    pub fn one() -> Self {
        Self::basis(K::unit())
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }
}

impl<K: Ord + Clone, C: Coeff> FromIterator<(K, C)> for LinComb<K, C> {
    fn from_iter<I: IntoIterator<Item = (K, C)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }
}

impl<K: Ord + Clone + RenderKey, C: Coeff> fmt::Display for LinComb<K, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms.iter().map(|(k, c)| (k.render(), c)))
    }
}

impl<K: Ord + Clone, C: Coeff> AddAssign<&LinComb<K, C>> for LinComb<K, C> {
    fn add_assign(&mut self, rhs: &LinComb<K, C>) {
        for (k, c) in &rhs.terms {
            self.add_term(k.clone(), c.clone());
        }
    }
}

impl<K: Ord + Clone, C: Coeff> SubAssign<&LinComb<K, C>> for LinComb<K, C> {
    fn sub_assign(&mut self, rhs: &LinComb<K, C>) {
        for (k, c) in &rhs.terms {
            self.add_term(k.clone(), -c.clone());
        }
    }
}

impl<K: Ord + Clone, C: Coeff> Add<&LinComb<K, C>> for &LinComb<K, C> {
    type Output = LinComb<K, C>;
    fn add(self, rhs: &LinComb<K, C>) -> LinComb<K, C> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<K: Ord + Clone, C: Coeff> Sub<&LinComb<K, C>> for &LinComb<K, C> {
    type Output = LinComb<K, C>;
    fn sub(self, rhs: &LinComb<K, C>) -> LinComb<K, C> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<K: Ord + Clone, C: Coeff> Neg for &LinComb<K, C> {
    type Output = LinComb<K, C>;
    fn neg(self) -> LinComb<K, C> {
        LinComb {
            terms: self.terms.iter().map(|(k, c)| (k.clone(), -c.clone())).collect(),
        }
    }
}

impl<K: Ord + Clone, C: Coeff> Add for LinComb<K, C> {
    type Output = LinComb<K, C>;
    fn add(self, rhs: LinComb<K, C>) -> LinComb<K, C> {
        &self + &rhs
    }
}

impl<K: Ord + Clone, C: Coeff> Sub for LinComb<K, C> {
    type Output = LinComb<K, C>;
    fn sub(self, rhs: LinComb<K, C>) -> LinComb<K, C> {
        &self - &rhs
    }
}

impl<K: Ord + Clone, C: Coeff> Neg for LinComb<K, C> {
    type Output = LinComb<K, C>;
    fn neg(self) -> LinComb<K, C> {
        -&self
    }
}

impl<K: Ord + Clone, C: Coeff> std::iter::Sum for LinComb<K, C> {
    fn sum<I: Iterator<Item = LinComb<K, C>>>(iter: I) -> Self {
        let mut acc = Self::zero();
        for x in iter {
            acc += &x;
        }
        acc
    }
}

impl<K: MonoidKey, C: Coeff> Mul<&LinComb<K, C>> for &LinComb<K, C> {
    type Output = LinComb<K, C>;
    fn mul(self, rhs: &LinComb<K, C>) -> LinComb<K, C> {
        self.bilinear(rhs, |x, y| LinComb::basis(x.op(y)))
    }
}

impl<K: MonoidKey, C: Coeff> Mul for LinComb<K, C> {
    type Output = LinComb<K, C>;
    fn mul(self, rhs: LinComb<K, C>) -> LinComb<K, C> {
        &self * &rhs
    }
}
