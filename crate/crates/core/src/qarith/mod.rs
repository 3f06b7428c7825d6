//! Exact commutative arithmetic in `q` (and `t`): polynomials, truncated
//! series, and the q-analogues `[n]`, `[n]!` and Gaussian multinomials.

mod bipoly;
mod poly;
mod series;

pub use bipoly::BiPoly;
pub use poly::Poly;
pub use series::{series_inverse, Series, TSeries};

use thiserror::Error;

use crate::coeff::Coeff;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QArithError {
    #[error("constant term is not a unit; the series has no inverse")]
    NonUnitConstant,
}

/// `[n] = 1 + q + ... + q^(n-1)`; zero for `n = 0`.
pub fn q_int<C: Coeff>(n: u32) -> Poly<C> {
    (0..n).map(|e| (e, C::one())).collect()
}

/// `[n]! = [1][2]...[n]`.
pub fn q_factorial<C: Coeff>(n: u32) -> Poly<C> {
    (1..=n).map(q_int).product()
}

/// `[n]! / ([a_1]! ... [a_k]!)` for `n = a_1 + ... + a_k`, by exact division.
///
/// # Panics
/// If `alpha` is empty or has a zero part, or if the division leaves a
/// remainder (which would mean an arithmetic bug).
pub fn gaussian_multinomial<C: Coeff>(alpha: &[u32]) -> Poly<C> {
    assert!(
        !alpha.is_empty() && alpha.iter().all(|&a| a > 0),
        "composition parts must be positive"
    );
    let n: u32 = alpha.iter().sum();
    let denom: Poly<C> = alpha.iter().map(|&a| q_factorial(a)).product();
    q_factorial::<C>(n)
        .exact_divide(&denom)
        .expect("internal error: [n]! not divisible by the product of part factorials")
}

/// The Gaussian binomial `[n choose k]`; zero when `k > n`.
pub fn gaussian_binomial<C: Coeff>(n: u32, k: u32) -> Poly<C> {
    if k > n {
        return Poly::zero();
    }
    match (k, n - k) {
        (0, _) | (_, 0) => Poly::one(),
        (a, b) => gaussian_multinomial(&[a, b]),
    }
}
