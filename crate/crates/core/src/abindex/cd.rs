use std::fmt;
use std::str::FromStr;

use super::word::{AbWord, Letter, MAX_WORD_LEN};
use super::AbError;
use crate::lincomb::{MonoidKey, RenderKey};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum CdLetter {
    C,
    D,
}

impl CdLetter {
    pub fn weight(self) -> usize {
        match self {
            CdLetter::C => 1,
            CdLetter::D => 2,
        }
    }
}

/// A monomial in `c = a + b` and `d = ab + ba`, packed like [`AbWord`]
/// (`c = 0`, `d = 1`). Ordered by weight, then lexicographically with
/// `c < d`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct CdWord {
    len: u8,
    bits: u64,
}

impl CdWord {
    pub const EMPTY: CdWord = CdWord { len: 0, bits: 0 };

    /// Number of letters.
    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// `#c + 2 #d`, the degree of the expansion.
    pub fn weight(&self) -> usize {
        self.len() + self.bits.count_ones() as usize
    }

    pub fn letters(&self) -> impl Iterator<Item = CdLetter> + '_ {
        (0..self.len()).map(move |i| {
            if self.bits >> (self.len() - 1 - i) & 1 == 1 {
                CdLetter::D
            } else {
                CdLetter::C
            }
        })
    }

    pub fn push(&self, l: CdLetter) -> CdWord {
        assert!(self.len() < MAX_WORD_LEN, "cd-word too long");
        CdWord {
            len: self.len + 1,
            bits: self.bits << 1 | matches!(l, CdLetter::D) as u64,
        }
    }

    pub fn concat(&self, other: &CdWord) -> CdWord {
        other.letters().fold(*self, |w, l| w.push(l))
    }

    /// The lexicographically largest ab-word (with `a < b`) in the expansion:
    /// every `c` becomes `b` and every `d` becomes `ba`. Distinct cd-words have
    /// distinct leading words.
    pub fn leading_ab_word(&self) -> AbWord {
        let mut w = AbWord::EMPTY;
        for l in self.letters() {
            w = w.push(Letter::B);
            if l == CdLetter::D {
                w = w.push(Letter::A);
            }
        }
        w
    }

    /// Inverse of [`CdWord::leading_ab_word`]; `None` when `w` is not the
    /// leading word of any cd-monomial.
    pub fn from_leading_ab_word(w: &AbWord) -> Option<CdWord> {
        let letters: Vec<Letter> = w.letters().collect();
        let mut out = CdWord::EMPTY;
        let mut i = 0;
        while i < letters.len() {
            if letters[i] == Letter::A {
                return None;
            }
            if letters.get(i + 1) == Some(&Letter::A) {
                out = out.push(CdLetter::D);
                i += 2;
            } else {
                out = out.push(CdLetter::C);
                i += 1;
            }
        }
        Some(out)
    }

    /// All cd-words of the given weight, in increasing order.
    pub fn all_of_weight(weight: usize) -> Vec<CdWord> {
        fn go(rest: usize, prefix: CdWord, out: &mut Vec<CdWord>) {
            if rest == 0 {
                out.push(prefix);
                return;
            }
            go(rest - 1, prefix.push(CdLetter::C), out);
            if rest >= 2 {
                go(rest - 2, prefix.push(CdLetter::D), out);
            }
        }
        let mut out = Vec::new();
        go(weight, CdWord::EMPTY, &mut out);
        out.sort();
        out
    }
}

impl Ord for CdWord {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| self.letters().cmp(other.letters()))
    }
}

impl PartialOrd for CdWord {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl MonoidKey for CdWord {
    fn unit() -> Self {
        CdWord::EMPTY
    }
    fn op(&self, other: &Self) -> Self {
        self.concat(other)
    }
}

impl RenderKey for CdWord {
    fn render(&self) -> String {
        self.to_string()
    }
}

impl FromStr for CdWord {
    type Err = AbError;

    fn from_str(s: &str) -> Result<Self, AbError> {
        s.chars().try_fold(CdWord::EMPTY, |w, ch| match ch {
            'c' => Ok(w.push(CdLetter::C)),
            'd' => Ok(w.push(CdLetter::D)),
            _ => Err(AbError::BadLetter(ch)),
        })
    }
}

impl fmt::Display for CdWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in self.letters() {
            f.write_str(match l {
                CdLetter::C => "c",
                CdLetter::D => "d",
            })?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights_and_counts() {
        let w: CdWord = "cdc".parse().unwrap();
        assert_eq!(w.weight(), 4);
        // Fibonacci numbers count cd-words by weight
        let counts: Vec<usize> = (0..10).map(|n| CdWord::all_of_weight(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 8, 13, 21, 34, 55]);
    }

    #[test]
    fn leading_word_decodes() {
        for n in 0..9 {
            for w in CdWord::all_of_weight(n) {
                let lead = w.leading_ab_word();
                assert_eq!(lead.len(), n);
                assert_eq!(CdWord::from_leading_ab_word(&lead), Some(w));
            }
        }
        assert_eq!(CdWord::from_leading_ab_word(&"ab".parse().unwrap()), None);
        assert_eq!(CdWord::from_leading_ab_word(&"baa".parse().unwrap()), None);
    }
}
