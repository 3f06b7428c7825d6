//! The scalar type that every polynomial, series and quasi-symmetric element
//! in this crate is generic over.

use std::fmt::{Debug, Display};

use num_traits::{FromPrimitive, Signed};

/// An exact coefficient ring.
///
/// Anything that is a signed `num-traits` number qualifies; the crate root
/// fixes [`num_bigint::BigInt`] as the default through its type aliases.
/// Division is only ever used through [`Coeff::exact_div`], so integer types
/// behave as rings and rational types as fields.
pub trait Coeff: Signed + FromPrimitive + Clone + Debug + Display + Send + Sync + 'static {
    /// `self / d` when the quotient is exact in this ring.
    fn exact_div(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        let q = self.clone() / d.clone();
        if q.clone() * d.clone() == *self {
            Some(q)
        } else {
            None
        }
    }

    /// Integer embedding; panics only if the ring cannot represent `n`.
    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("coefficient ring cannot represent integer")
    }

    /// Whether this coefficient is a unit (`±1` over the integers).
    fn is_unit(&self) -> bool {
        Self::one().exact_div(self).is_some()
    }
}

impl<T> Coeff for T where T: Signed + FromPrimitive + Clone + Debug + Display + Send + Sync + 'static {}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    #[test]
    fn exact_division_over_integers() {
        assert_eq!(6i64.exact_div(&3), Some(2));
        assert_eq!(7i64.exact_div(&3), None);
        assert_eq!(BigInt::from(-8).exact_div(&BigInt::from(2)), Some(BigInt::from(-4)));
        assert_eq!(1i64.exact_div(&0), None);
    }

    #[test]
    fn units() {
        assert!((-1i64).is_unit());
        assert!(!2i64.is_unit());
        assert!(BigRational::from_int(2).is_unit());
    }
}
