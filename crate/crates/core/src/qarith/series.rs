use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::poly::Poly;
use super::QArithError;
use crate::coeff::Coeff;

/// A power series in `q` known through `q^order`.
///
/// Every binary operation truncates its result to the smaller of the two
/// operand orders.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Series<C> {
    coeffs: Vec<C>,
}

impl<C: Coeff> Series<C> {
    pub fn zero(order: u32) -> Self {
        Self {
            coeffs: vec![C::zero(); order as usize + 1],
        }
    }

    pub fn one(order: u32) -> Self {
        Self::from_poly(&Poly::one(), order)
    }

    pub fn from_poly(p: &Poly<C>, order: u32) -> Self {
        let mut s = Self::zero(order);
        for (e, c) in p.terms() {
            if e <= order {
                s.coeffs[e as usize] = c.clone();
            }
        }
        s
    }

    /// `1 / (1 - q^step)`.
    pub fn geometric(step: u32, order: u32) -> Self {
        assert!(step > 0, "geometric series needs a positive step");
        let mut s = Self::zero(order);
        for e in (0..=order).step_by(step as usize) {
            s.coeffs[e as usize] = C::one();
        }
        s
    }

    pub fn order(&self) -> u32 {
        (self.coeffs.len() - 1) as u32
    }

    pub fn coeff(&self, e: u32) -> C {
        self.coeffs.get(e as usize).cloned().unwrap_or_else(C::zero)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub(crate) fn add_at(&mut self, e: u32, c: C) {
        if let Some(slot) = self.coeffs.get_mut(e as usize) {
            *slot = slot.clone() + c;
        }
    }

    pub fn truncate(&self, order: u32) -> Self {
        let keep = order.min(self.order()) as usize + 1;
        Self {
            coeffs: self.coeffs[..keep].to_vec(),
        }
    }

    /// The stored window as a polynomial.
    pub fn to_poly(&self) -> Poly<C> {
        Poly::from_coeffs(self.coeffs.iter().cloned())
    }

    /// Multiplies by `q^k`, keeping the order.
    pub fn shift(&self, k: u32) -> Self {
        let mut s = Self::zero(self.order());
        for (e, c) in self.coeffs.iter().enumerate() {
            s.add_at(e as u32 + k, c.clone());
        }
        s
    }

    pub fn scale(&self, c: &C) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|x| x.clone() * c.clone()).collect(),
        }
    }

    /// Multiplicative inverse; the constant term must be a unit of `C`.
    pub fn inverse(&self) -> Result<Self, QArithError> {
        let c0 = &self.coeffs[0];
        let inv0 = C::one().exact_div(c0).ok_or(QArithError::NonUnitConstant)?;
        let n = self.coeffs.len();
        let mut out = vec![C::zero(); n];
        out[0] = inv0.clone();
        for k in 1..n {
            let mut acc = C::zero();
            for j in 1..=k {
                acc = acc + self.coeffs[j].clone() * out[k - j].clone();
            }
            out[k] = -(acc * inv0.clone());
        }
        Ok(Self { coeffs: out })
    }
}

impl<C: Coeff> fmt::Display for Series<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + O(q^{})", self.to_poly(), self.order() + 1)
    }
}

impl<C: Coeff> Add<&Series<C>> for &Series<C> {
    type Output = Series<C>;
    fn add(self, rhs: &Series<C>) -> Series<C> {
        let n = self.coeffs.len().min(rhs.coeffs.len());
        Series {
            coeffs: (0..n).map(|i| self.coeffs[i].clone() + rhs.coeffs[i].clone()).collect(),
        }
    }
}

impl<C: Coeff> Sub<&Series<C>> for &Series<C> {
    type Output = Series<C>;
    fn sub(self, rhs: &Series<C>) -> Series<C> {
        self + &(-rhs)
    }
}

impl<C: Coeff> Neg for &Series<C> {
    type Output = Series<C>;
    fn neg(self) -> Series<C> {
        Series {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl<C: Coeff> Mul<&Series<C>> for &Series<C> {
    type Output = Series<C>;
    fn mul(self, rhs: &Series<C>) -> Series<C> {
        let n = self.coeffs.len().min(rhs.coeffs.len());
        let mut out = vec![C::zero(); n];
        for (i, a) in self.coeffs.iter().take(n).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n - i).enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Series { coeffs: out }
    }
}

/// Inverse of a polynomial as a series truncated at `order`.
pub fn series_inverse<C: Coeff>(p: &Poly<C>, order: u32) -> Result<Series<C>, QArithError> {
    Series::from_poly(p, order).inverse()
}

/// A power series in `t` whose coefficients are polynomials in `q`, known
/// through `t^order`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TSeries<C> {
    coeffs: Vec<Poly<C>>,
}

impl<C: Coeff> TSeries<C> {
    pub fn zero(order: u32) -> Self {
        Self {
            coeffs: vec![Poly::zero(); order as usize + 1],
        }
    }

    pub fn from_coeffs(coeffs: Vec<Poly<C>>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a truncated series needs at least the constant term"
        );
        Self { coeffs }
    }

    /// Reads `p` as a polynomial in `t` with coefficients in `Z[q]`.
    pub fn from_bipoly(p: &super::BiPoly<C>, order: u32) -> Self {
        Self {
            coeffs: (0..=order).map(|k| p.t_coeff(k)).collect(),
        }
    }

    pub fn order(&self) -> u32 {
        (self.coeffs.len() - 1) as u32
    }

    pub fn coeff(&self, k: u32) -> &Poly<C> {
        &self.coeffs[k as usize]
    }

    /// Multiplicative inverse; the `t^0` coefficient must be a unit constant.
    pub fn inverse(&self) -> Result<Self, QArithError> {
        let c0 = &self.coeffs[0];
        if c0.num_terms() != 1 || c0.degree() != Some(0) {
            return Err(QArithError::NonUnitConstant);
        }
        let inv0 = C::one().exact_div(&c0.coeff(0)).ok_or(QArithError::NonUnitConstant)?;
        let n = self.coeffs.len();
        let mut out: Vec<Poly<C>> = vec![Poly::zero(); n];
        out[0] = Poly::constant(inv0.clone());
        for k in 1..n {
            let mut acc = Poly::zero();
            for j in 1..=k {
                acc += &(&self.coeffs[j] * &out[k - j]);
            }
            out[k] = -acc.scale(&inv0);
        }
        Ok(Self { coeffs: out })
    }
}

impl<C: Coeff> Mul<&TSeries<C>> for &TSeries<C> {
    type Output = TSeries<C>;
    fn mul(self, rhs: &TSeries<C>) -> TSeries<C> {
        let n = self.coeffs.len().min(rhs.coeffs.len());
        let mut out: Vec<Poly<C>> = vec![Poly::zero(); n];
        for i in 0..n {
            for j in 0..n - i {
                out[i + j] += &(&self.coeffs[i] * &rhs.coeffs[j]);
            }
        }
        TSeries { coeffs: out }
    }
}

impl<C: Coeff> Add<&TSeries<C>> for &TSeries<C> {
    type Output = TSeries<C>;
    fn add(self, rhs: &TSeries<C>) -> TSeries<C> {
        let n = self.coeffs.len().min(rhs.coeffs.len());
        TSeries {
            coeffs: (0..n).map(|i| &self.coeffs[i] + &rhs.coeffs[i]).collect(),
        }
    }
}
