use std::fmt;
use std::str::FromStr;

use super::AbError;

/// Longest word the packed representation holds.
pub const MAX_WORD_LEN: usize = 64;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Letter {
    A,
    B,
}

/// A monomial in the noncommuting variables `a` and `b`.
///
/// Letters are packed into a `u64` (`a = 0`, `b = 1`) with position 1 in the
/// most significant used bit, so words of equal length compare in
/// lexicographic order with `a < b`. Shorter words sort first.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct AbWord {
    len: u8,
    bits: u64,
}

impl AbWord {
    pub const EMPTY: AbWord = AbWord { len: 0, bits: 0 };

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub(crate) fn from_bits(bits: u64, len: usize) -> Self {
        debug_assert!(len <= MAX_WORD_LEN);
        debug_assert!(len == 64 || bits >> len == 0);
        AbWord { len: len as u8, bits }
    }

    /// All `2^n` words of length `n`, in order.
    pub fn all_of_length(n: usize) -> impl Iterator<Item = AbWord> {
        assert!(n < MAX_WORD_LEN, "too many words to enumerate");
        (0..1u64 << n).map(move |m| AbWord::from_mask(m, n))
    }

    /// `a^n`.
    pub fn a_power(n: usize) -> Self {
        Self::from_bits(0, n)
    }

    /// The word of length `n` with `b` exactly at the 1-based positions whose
    /// bit `i - 1` is set in `mask`.
    pub fn from_mask(mask: u64, n: usize) -> Self {
        assert!(n <= MAX_WORD_LEN, "word too long");
        let mut bits = 0;
        for i in 1..=n {
            if mask >> (i - 1) & 1 == 1 {
                bits |= 1 << (n - i);
            }
        }
        Self::from_bits(bits, n)
    }

    /// Inverse of [`AbWord::from_mask`].
    pub fn mask(&self) -> u64 {
        self.b_positions().fold(0, |m, i| m | 1 << (i - 1))
    }

    /// Letter at 1-based position `i`.
    pub fn letter(&self, i: usize) -> Letter {
        assert!(i >= 1 && i <= self.len(), "position out of range");
        if self.bits >> (self.len() - i) & 1 == 1 {
            Letter::B
        } else {
            Letter::A
        }
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        (1..=self.len()).map(|i| self.letter(i))
    }

    /// 1-based positions holding `b`, ascending.
    pub fn b_positions(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=self.len()).filter(|&i| self.letter(i) == Letter::B)
    }

    pub fn count_b(&self) -> u32 {
        self.bits.count_ones()
    }

    /// Sum of the positions of the `b`s: the exponent of `q` under Θ.
    pub fn b_position_sum(&self) -> u32 {
        let n = self.len() as u32;
        let mut bits = self.bits;
        let mut sum = 0;
        while bits != 0 {
            let low = bits.trailing_zeros();
            sum += n - low;
            bits &= bits - 1;
        }
        sum
    }

    pub fn concat(&self, other: &AbWord) -> AbWord {
        let len = self.len() + other.len();
        assert!(len <= MAX_WORD_LEN, "word too long");
        let high = if other.len() == 64 { 0 } else { self.bits << other.len() };
        AbWord::from_bits(high | other.bits, len)
    }

    pub fn push(&self, l: Letter) -> AbWord {
        self.concat(&AbWord::from(l))
    }

    /// Letters `start..end` (0-based, half-open).
    pub(crate) fn slice(&self, start: usize, end: usize) -> AbWord {
        let len = end - start;
        if len == 0 {
            return AbWord::EMPTY;
        }
        let shifted = self.bits >> (self.len() - end);
        let mask = if len == 64 { u64::MAX } else { (1u64 << len) - 1 };
        AbWord::from_bits(shifted & mask, len)
    }

    pub fn reverse(&self) -> AbWord {
        let n = self.len();
        if n == 0 {
            return *self;
        }
        AbWord::from_bits(self.bits.reverse_bits() >> (64 - n), n)
    }
}

impl From<Letter> for AbWord {
    fn from(l: Letter) -> Self {
        AbWord::from_bits(matches!(l, Letter::B) as u64, 1)
    }
}

impl FromStr for AbWord {
    type Err = AbError;

    fn from_str(s: &str) -> Result<Self, AbError> {
        let mut w = AbWord::EMPTY;
        for ch in s.chars() {
            if w.len() == MAX_WORD_LEN {
                return Err(AbError::WordTooLong);
            }
            w = match ch {
                'a' => w.push(Letter::A),
                'b' => w.push(Letter::B),
                _ => return Err(AbError::BadLetter(ch)),
            };
        }
        Ok(w)
    }
}

impl fmt::Display for AbWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in self.letters() {
            f.write_str(match l {
                Letter::A => "a",
                Letter::B => "b",
            })?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> AbWord {
        s.parse().unwrap()
    }

    #[test]
    fn parse_render() {
        assert_eq!(w("abba").to_string(), "abba");
        assert_eq!(w("").to_string(), "");
        assert!("abc".parse::<AbWord>().is_err());
    }

    #[test]
    fn positions() {
        assert_eq!(w("abba").b_positions().collect::<Vec<_>>(), vec![2, 3]);
        assert_eq!(w("abba").b_position_sum(), 5);
        assert_eq!(w("aab").b_position_sum(), 3);
        assert_eq!(w("").b_position_sum(), 0);
    }

    #[test]
    fn mask_round_trip() {
        assert_eq!(AbWord::from_mask(0b110, 4), w("abba"));
        assert_eq!(w("abba").mask(), 0b110);
        assert_eq!(AbWord::from_mask(0, 3), w("aaa"));
    }

    #[test]
    fn concat_slice_reverse() {
        assert_eq!(w("ab").concat(&w("ba")), w("abba"));
        assert_eq!(w("aabab").slice(1, 4), w("aba"));
        assert_eq!(w("abb").reverse(), w("bba"));
        assert_eq!(w("").reverse(), w(""));
        let long = AbWord::from_mask(1, 64);
        assert_eq!(long.reverse().reverse(), long);
        assert_eq!(long.letter(1), Letter::B);
    }

    #[test]
    fn order_is_length_then_lex() {
        assert!(w("b") < w("aa"));
        assert!(w("ab") < w("ba"));
        assert!(w("aab") < w("aba"));
    }
}
