//! The noncommutative ring `Z<a,b>`, its cd-subring, the derivations `G`
//! and `D`, the pyramid and bipyramid operators, and the Major MacMahon maps.
//!
//! Θ sends a monomial `u_1 ... u_n` to `q` raised to the sum of the
//! positions `i` with `u_i = b`; Θ^{q,t} additionally records one `t` per `b`.

mod cd;
mod word;

pub use cd::{CdLetter, CdWord};
pub use word::{AbWord, Letter, MAX_WORD_LEN};

use thiserror::Error;

use crate::coeff::Coeff;
use crate::lincomb::{LinComb, MonoidKey, RenderKey};
use crate::qarith::{BiPoly, Poly};
use crate::Int;

/// Element of `Z<a,b>` with coefficients in `C`.
pub type AbPoly<C> = LinComb<AbWord, C>;
/// Element of the cd-subring, written in the letters `c` and `d`.
pub type CdPoly<C> = LinComb<CdWord, C>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AbError {
    #[error("unexpected letter {0:?}")]
    BadLetter(char),
    #[error("word longer than {MAX_WORD_LEN} letters")]
    WordTooLong,
    #[error("set element {elem} is outside 1..={n}")]
    SetOutOfRange { elem: u32, n: usize },
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("not cd-expressible")]
    NotCdExpressible,
    #[error("shelling component needs 1 <= n and 0 <= i <= n, got n = {n}, i = {i}")]
    ShellingRange { n: usize, i: usize },
}

impl MonoidKey for AbWord {
    fn unit() -> Self {
        AbWord::EMPTY
    }
    fn op(&self, other: &Self) -> Self {
        self.concat(other)
    }
}

impl RenderKey for AbWord {
    fn render(&self) -> String {
        self.to_string()
    }
}

impl<C: Coeff> LinComb<AbWord, C> {
    pub fn word(w: AbWord) -> Self {
        Self::basis(w)
    }

    pub fn a() -> Self {
        Self::word(Letter::A.into())
    }

    pub fn b() -> Self {
        Self::word(Letter::B.into())
    }

    /// `c = a + b`.
    pub fn c() -> Self {
        &Self::a() + &Self::b()
    }

    /// `d = ab + ba`.
    pub fn d() -> Self {
        &(&Self::a() * &Self::b()) + &(&Self::b() * &Self::a())
    }

    /// `a - b`.
    pub fn a_minus_b() -> Self {
        &Self::a() - &Self::b()
    }

    /// Longest word length, `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.keys().map(AbWord::len).max()
    }

    /// True when all words share one length (vacuously for zero).
    pub fn is_homogeneous(&self) -> bool {
        let mut lens = self.keys().map(AbWord::len);
        match lens.next() {
            Some(first) => lens.all(|l| l == first),
            None => true,
        }
    }

    /// Word reversal, coefficients kept: the involution `w -> w*`.
    pub fn reverse(&self) -> Self {
        self.map_keys(AbWord::reverse)
    }
}

/// The Major MacMahon map.
pub fn theta<C: Coeff>(p: &AbPoly<C>) -> Poly<C> {
    p.terms().map(|(w, c)| (w.b_position_sum(), c.clone())).collect()
}

/// The q,t-extension of Θ: each `b` also contributes one factor of `t`.
pub fn theta_qt<C: Coeff>(p: &AbPoly<C>) -> BiPoly<C> {
    let mut out = BiPoly::zero();
    for (w, c) in p.terms() {
        out.add_term(w.b_position_sum(), w.count_b(), c.clone());
    }
    out
}

/// Extends the letter images `a -> img_a`, `b -> img_b` to a derivation.
fn derivation<C: Coeff>(p: &AbPoly<C>, img_a: &AbPoly<C>, img_b: &AbPoly<C>) -> AbPoly<C> {
    let mut out = AbPoly::zero();
    for (w, c) in p.terms() {
        let n = w.len();
        for i in 0..n {
            let (prefix, suffix) = (w.slice(0, i), w.slice(i + 1, n));
            let image = match w.letter(i + 1) {
                Letter::A => img_a,
                Letter::B => img_b,
            };
            for (v, k) in image.terms() {
                out.add_term(prefix.concat(v).concat(&suffix), k.clone() * c.clone());
            }
        }
    }
    out
}

/// `G(a) = ba`, `G(b) = ab`.
pub fn derivation_g<C: Coeff>(p: &AbPoly<C>) -> AbPoly<C> {
    let ba = &AbPoly::b() * &AbPoly::a();
    let ab = &AbPoly::a() * &AbPoly::b();
    derivation(p, &ba, &ab)
}

/// `D(a) = D(b) = ab + ba`.
pub fn derivation_d<C: Coeff>(p: &AbPoly<C>) -> AbPoly<C> {
    let d = AbPoly::d();
    derivation(p, &d, &d)
}

/// `Pyr(w) = G(w) + w c`.
pub fn pyr_op<C: Coeff>(p: &AbPoly<C>) -> AbPoly<C> {
    &derivation_g(p) + &(p * &AbPoly::c())
}

/// `Bipyr(w) = D(w) + c w`.
pub fn bipyr_op<C: Coeff>(p: &AbPoly<C>) -> AbPoly<C> {
    &derivation_d(p) + &(&AbPoly::c() * p)
}

/// Substitutes `c = a + b`, `d = ab + ba`.
pub fn expand_cd<C: Coeff>(p: &CdPoly<C>) -> AbPoly<C> {
    let c = AbPoly::c();
    let d = AbPoly::d();
    p.map_linear(|w| {
        w.letters().fold(AbPoly::one(), |acc, l| match l {
            CdLetter::C => &acc * &c,
            CdLetter::D => &acc * &d,
        })
    })
}

/// Rewrites a homogeneous ab-polynomial in `c` and `d`.
///
/// The expansion of a cd-word has a unique lexicographically largest word
/// (`c -> b`, `d -> ba`) with coefficient 1, and these leading words are
/// distinct across cd-words, so the change of basis is unitriangular: peel
/// off the largest remaining word until nothing is left or it fails to
/// decode.
pub fn to_cd<C: Coeff>(p: &AbPoly<C>) -> Result<CdPoly<C>, AbError> {
    if !p.is_homogeneous() {
        return Err(AbError::NotHomogeneous);
    }
    let mut rest = p.clone();
    let mut out = CdPoly::zero();
    loop {
        let Some((lead, coef)) = rest.terms().next_back().map(|(w, c)| (*w, c.clone())) else {
            break;
        };
        let cd = CdWord::from_leading_ab_word(&lead).ok_or(AbError::NotCdExpressible)?;
        let expansion = expand_cd(&CdPoly::<C>::basis(cd));
        debug_assert!(expansion.coeff(&lead).is_one());
        rest -= &expansion.scale(&coef);
        out.add_term(cd, coef);
    }
    Ok(out)
}

fn check_set(set: &[u32], n: usize) -> Result<u64, AbError> {
    let mut mask = 0u64;
    for &elem in set {
        if elem == 0 || elem as usize > n {
            return Err(AbError::SetOutOfRange { elem, n });
        }
        mask |= 1 << (elem - 1);
    }
    Ok(mask)
}

/// `u_S`: the degree-`n` word with `b` exactly at the positions in `set`.
pub fn word_of_set(set: &[u32], n: usize) -> Result<AbWord, AbError> {
    if n > MAX_WORD_LEN {
        return Err(AbError::WordTooLong);
    }
    Ok(AbWord::from_mask(check_set(set, n)?, n))
}

/// `v_S`: `b` at the positions in `set`, `a - b` elsewhere.
pub fn vpoly_of_set<C: Coeff>(set: &[u32], n: usize) -> Result<AbPoly<C>, AbError> {
    if n > MAX_WORD_LEN {
        return Err(AbError::WordTooLong);
    }
    Ok(vpoly_of_mask(check_set(set, n)?, n))
}

pub(crate) fn vpoly_of_mask<C: Coeff>(mask: u64, n: usize) -> AbPoly<C> {
    let a_minus_b = AbPoly::a_minus_b();
    let b = AbPoly::b();
    (1..=n).fold(AbPoly::one(), |acc, i| {
        if mask >> (i - 1) & 1 == 1 {
            &acc * &b
        } else {
            &acc * &a_minus_b
        }
    })
}

/// The positions of the `b`s in `w`, ascending.
pub fn set_of_word(w: &AbWord) -> Vec<u32> {
    w.b_positions().map(|i| i as u32).collect()
}

fn shelling_ab(n: usize, i: usize) -> AbPoly<Int> {
    if i == 0 {
        if n == 0 {
            // Weight-zero start of the recursion; G kills it, so the i = n
            // components vanish.
            return AbPoly::one();
        }
        let psi_bn = crate::poset::boolean_algebra(n).ab_index();
        return &psi_bn * &AbPoly::c();
    }
    derivation_g(&shelling_ab(n - 1, i - 1))
}

/// The simplicial shelling component: `Ψ(B_n) c` for `i = 0`, and
/// `G` applied to the `(n-1, i-1)` component otherwise. Components with
/// `i = n` are zero.
pub fn shelling_component(n: usize, i: usize) -> Result<CdPoly<Int>, AbError> {
    if n == 0 || i > n {
        return Err(AbError::ShellingRange { n, i });
    }
    to_cd(&shelling_ab(n, i))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qarith::q_int;

    type P = AbPoly<i64>;

    fn ab(s: &str) -> P {
        P::parse(s).unwrap()
    }

    fn cd(s: &str) -> CdPoly<i64> {
        CdPoly::parse(s).unwrap()
    }

    #[test]
    fn theta_examples() {
        assert_eq!(theta(&ab("abba")), Poly::monomial(5, 1));
        assert_eq!(theta(&P::one()), Poly::one());
        assert_eq!(theta(&ab("aab + ba")), Poly::from_ints(&[0, 1, 0, 1]));
    }

    #[test]
    fn theta_qt_examples() {
        assert_eq!(theta_qt(&ab("abba")), BiPoly::monomial(5, 2, 1));
        assert_eq!(theta_qt(&ab("aaaa")), BiPoly::one());
        assert_eq!(theta_qt(&ab("a + b")), BiPoly::one() + BiPoly::monomial(1, 1, 1));
    }

    #[test]
    fn derivation_examples() {
        assert_eq!(derivation_g(&ab("a")), ab("ba"));
        assert_eq!(derivation_g(&P::one()), P::zero());
        assert_eq!(derivation_d(&P::one()), P::zero());
        assert_eq!(derivation_g(&ab("ab")), ab("bab + aab"));
        assert_eq!(derivation_d(&ab("b")), ab("ab + ba"));
    }

    #[test]
    fn pyramid_examples() {
        assert_eq!(pyr_op(&P::one()), ab("a + b"));
        assert_eq!(bipyr_op(&P::one()), ab("a + b"));
        assert_eq!(pyr_op(&ab("a")), ab("ba + aa + ab"));
    }

    #[test]
    fn expand_cd_examples() {
        assert_eq!(expand_cd(&cd("c")), ab("a + b"));
        assert_eq!(expand_cd(&cd("d")), ab("ab + ba"));
        assert_eq!(expand_cd(&cd("cc + d")), ab("aa + 2*ab + 2*ba + bb"));
    }

    #[test]
    fn to_cd_examples() {
        assert_eq!(to_cd(&ab("a + b")), Ok(cd("c")));
        assert_eq!(to_cd(&ab("aa + 2*ab + 2*ba + bb")), Ok(cd("cc + d")));
        assert_eq!(to_cd(&ab("a")), Err(AbError::NotCdExpressible));
        assert_eq!(to_cd(&ab("a + bb")), Err(AbError::NotHomogeneous));
        assert_eq!(to_cd(&P::zero()), Ok(CdPoly::zero()));
        assert_eq!(to_cd(&P::one()), Ok(CdPoly::one()));
    }

    #[test]
    fn reverse_examples() {
        assert_eq!(ab("abb").reverse(), ab("bba"));
        assert_eq!(ab("aab + ba").reverse(), ab("baa + ab"));
        let p = ab("2*aab - 3*bab + ba");
        assert_eq!(p.reverse().reverse(), p);
    }

    #[test]
    fn set_word_examples() {
        assert_eq!(word_of_set(&[2, 3], 4).unwrap().to_string(), "abba");
        assert_eq!(word_of_set(&[], 3).unwrap().to_string(), "aaa");
        assert_eq!(vpoly_of_set::<i64>(&[1], 2).unwrap(), ab("ba - bb"));
        assert_eq!(set_of_word(&"abba".parse().unwrap()), vec![2, 3]);
        assert_eq!(word_of_set(&[5], 4), Err(AbError::SetOutOfRange { elem: 5, n: 4 }));
        assert_eq!(word_of_set(&[0], 4), Err(AbError::SetOutOfRange { elem: 0, n: 4 }));
    }

    #[test]
    fn shelling_examples() {
        assert_eq!(shelling_component(1, 0).unwrap().to_string(), "c");
        assert_eq!(shelling_component(2, 1).unwrap().to_string(), "d");
        let phi = expand_cd(&shelling_component(2, 1).unwrap());
        assert_eq!(theta(&phi), Poly::from_ints(&[0, 1, 1]));
        assert!(shelling_component(3, 3).unwrap().is_zero());
        assert_eq!(shelling_component(0, 0), Err(AbError::ShellingRange { n: 0, i: 0 }));
        assert_eq!(shelling_component(2, 3), Err(AbError::ShellingRange { n: 2, i: 3 }));
    }

    #[test]
    fn c_times_w_picks_up_b_count() {
        // Θ(c·w) = q^k [2] Θ(w), k = number of b's
        for w in ["", "a", "bab", "abba", "bbb"] {
            let w: AbWord = w.parse().unwrap();
            let lhs = theta(&(&P::c() * &P::word(w)));
            let rhs = &(&Poly::monomial(w.count_b(), 1) * &q_int(2)) * &theta(&P::word(w));
            assert_eq!(lhs, rhs, "w = {w}");
        }
    }

    #[test]
    fn render() {
        assert_eq!(ab("2*ab - bb + a").to_string(), "a + 2*ab - bb");
        assert_eq!(P::one().to_string(), "1");
        assert_eq!(cd("cc + 2*d").to_string(), "cc + 2*d");
    }
}
