//! Exact computation of the Major MacMahon map and the poset machinery
//! around it: ab- and cd-indices of graded posets, the pyramid and
//! bipyramid operators, poset products, quasi-symmetric specializations,
//! R-labelings, and brute-force permutation statistics.
//!
//! Every algebraic type is generic over its coefficient ring (any
//! [`Coeff`]); the aliases below fix arbitrary-precision integers, which is
//! what all poset-derived quantities use.

pub mod abindex;
pub mod coeff;
pub mod lincomb;
pub mod permstat;
pub mod poset;
pub mod qarith;
pub mod qsym;
mod render;
pub mod rlabel;
pub mod verify;

pub use coeff::Coeff;

/// Arbitrary-precision integer coefficients.
pub type Int = num_bigint::BigInt;
/// Exact rational coefficients.
pub type Rational = num_rational::BigRational;

/// Polynomial in `q` over the integers.
pub type QPoly = qarith::Poly<Int>;
/// Polynomial in `q` over the rationals.
pub type RatQPoly = qarith::Poly<Rational>;
/// Polynomial in `q` and `t` over the integers.
pub type QTPoly = qarith::BiPoly<Int>;
/// Truncated power series in `q` over the integers.
pub type QSeries = qarith::Series<Int>;
/// Truncated power series in `t` with coefficients in `Z[q]`.
pub type TSeriesQ = qarith::TSeries<Int>;
/// Element of `Z<a,b>`.
pub type AbPoly = abindex::AbPoly<Int>;
/// Element of the cd-subring of `Z<a,b>`.
pub type CdPoly = abindex::CdPoly<Int>;
/// Quasi-symmetric function in the monomial basis.
pub type QSymElem = qsym::QSym<Int>;
/// Type-B* quasi-symmetric function, combinations of `M_α s^p`.
pub type QSymBStarElem = qsym::QSymBStar<Int>;
