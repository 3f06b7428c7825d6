//! Edge-labeled posets, R-labelings and Jordan–Hölder descent words.
//!
//! An R-labeling is an assignment of labels from a totally ordered set to
//! the cover relations such that every interval has exactly one maximal
//! chain whose labels weakly increase. For such labelings the ab-index is
//! the sum of the descent words of all maximal chains.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_traits::One;
use thiserror::Error;

use crate::abindex::{AbPoly, AbWord, Letter};
use crate::poset::{cartesian_parts, chain, dual_diamond_parts, fan_poset, GradedPoset, PosetError};
use crate::Int;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabelError {
    #[error("cannot parse label {0:?}")]
    Parse(String),
    #[error("cover [{0:?}, {1:?}] has no label")]
    Missing(String, String),
    #[error("label given for [{0:?}, {1:?}], which is not a cover")]
    NotACover(String, String),
    #[error("labeling is not an R-labeling: [{}, {}] has {} increasing maximal chains", .0.lower, .0.upper, .0.increasing_chains)]
    NotRLabeling(RWitness),
    #[error("poset of rank 0 has no maximal chains to label")]
    RankZero,
    #[error(transparent)]
    Poset(#[from] PosetError),
}

/// One edge label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Label {
    Int(i64),
    /// `(j, i)`: sign `j` attached to letter `i`.
    Pair(i64, i64),
    /// The symbol 0 placed on covers into an adjoined maximum.
    Zero,
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Int(n) => write!(f, "{n}"),
            Label::Pair(j, i) => write!(f, "({j},{i})"),
            Label::Zero => f.write_str("0"),
        }
    }
}

/// `"0"` parses as [`Label::Zero`]; other integers as [`Label::Int`].
impl FromStr for Label {
    type Err = LabelError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || LabelError::Parse(s.to_string());
        let t = s.trim();
        if let Some(inner) = t.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
            let (j, i) = inner.split_once(',').ok_or_else(err)?;
            return Ok(Label::Pair(
                j.trim().parse().map_err(|_| err())?,
                i.trim().parse().map_err(|_| err())?,
            ));
        }
        match t.parse::<i64>().map_err(|_| err())? {
            0 => Ok(Label::Zero),
            n => Ok(Label::Int(n)),
        }
    }
}

/// How labels compare.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LabelOrder {
    /// Integers by value, pairs lexicographically, `0` as the integer zero.
    #[default]
    Natural,
    /// Pairs lexicographically, and `0 < (j, i)` exactly when `j > 0`.
    Signed,
}

impl LabelOrder {
    fn key(self, l: Label) -> (i64, i64) {
        match (self, l) {
            (_, Label::Int(n)) => (n, i64::MIN),
            (_, Label::Pair(j, i)) => (j, i),
            (LabelOrder::Natural, Label::Zero) => (0, i64::MIN),
            (LabelOrder::Signed, Label::Zero) => (0, i64::MAX),
        }
    }

    pub fn compare(self, x: Label, y: Label) -> Ordering {
        self.key(x).cmp(&self.key(y))
    }

    pub fn le(self, x: Label, y: Label) -> bool {
        self.compare(x, y) != Ordering::Greater
    }
}

/// An interval whose number of weakly increasing maximal chains is not 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RWitness {
    pub lower: String,
    pub upper: String,
    pub increasing_chains: u64,
}

/// A graded poset with one label on every cover.
#[derive(Debug, Clone)]
pub struct LabeledPoset {
    poset: GradedPoset,
    /// `labels[x][k]` labels the cover `x ≺ poset.upper_covers(x)[k]`.
    labels: Vec<Vec<Label>>,
    order: LabelOrder,
}

impl LabeledPoset {
    /// Labels every cover by calling `label(x, y)`.
    pub fn from_fn<F: FnMut(usize, usize) -> Label>(poset: GradedPoset, order: LabelOrder, mut label: F) -> Self {
        let labels = (0..poset.len())
            .map(|x| poset.upper_covers(x).iter().map(|&y| label(x, y)).collect())
            .collect();
        Self { poset, labels, order }
    }

    /// Labels keyed by element names; every cover needs exactly one entry.
    pub fn from_named(
        poset: GradedPoset,
        order: LabelOrder,
        named: &HashMap<(String, String), Label>,
    ) -> Result<Self, LabelError> {
        for (lo, hi) in named.keys() {
            let is_cover = match (poset.index_of(lo), poset.index_of(hi)) {
                (Some(x), Some(y)) => poset.upper_covers(x).contains(&y),
                _ => false,
            };
            if !is_cover {
                return Err(LabelError::NotACover(lo.clone(), hi.clone()));
            }
        }
        let mut labels = Vec::with_capacity(poset.len());
        for x in 0..poset.len() {
            let mut row = Vec::new();
            for &y in poset.upper_covers(x) {
                let key = (poset.name(x).to_string(), poset.name(y).to_string());
                match named.get(&key) {
                    Some(&l) => row.push(l),
                    None => return Err(LabelError::Missing(key.0, key.1)),
                }
            }
            labels.push(row);
        }
        Ok(Self { poset, labels, order })
    }

    pub fn poset(&self) -> &GradedPoset {
        &self.poset
    }

    pub fn order(&self) -> LabelOrder {
        self.order
    }

    /// Label of the cover `x ≺ y`, if it is one.
    pub fn label(&self, x: usize, y: usize) -> Option<Label> {
        let k = self.poset.upper_covers(x).iter().position(|&z| z == y)?;
        Some(self.labels[x][k])
    }

    /// `((lower, upper), label)` by element name.
    pub fn named_labels(&self) -> Vec<((String, String), Label)> {
        let p = &self.poset;
        p.covers()
            .zip(self.labels.iter().flatten())
            .map(|((x, y), &l)| ((p.name(x).to_string(), p.name(y).to_string()), l))
            .collect()
    }

    /// The first interval (by rank of the lower end, then of the upper end)
    /// without a unique weakly increasing maximal chain.
    pub fn r_labeling_witness(&self) -> Option<RWitness> {
        let p = &self.poset;
        let mut starts: Vec<usize> = (0..p.len()).collect();
        starts.sort_by_key(|&x| (p.rank_of(x), x));
        for x in starts {
            let elems = p.interval_elements(x, p.top());
            // inc[(y, k)]: increasing chains from x ending with the k-th
            // upper cover out of y.
            let mut inc: HashMap<(usize, usize), u64> = HashMap::new();
            let mut total: HashMap<usize, u64> = HashMap::new();
            for &y in &elems {
                let into_y: u64 = if y == x { 1 } else { total.get(&y).copied().unwrap_or(0) };
                if y != x && into_y != 1 {
                    return Some(RWitness {
                        lower: p.name(x).to_string(),
                        upper: p.name(y).to_string(),
                        increasing_chains: into_y,
                    });
                }
                for (k, &z) in p.upper_covers(y).iter().enumerate() {
                    let out_label = self.labels[y][k];
                    let count = if y == x {
                        1
                    } else {
                        p.lower_covers(y)
                            .iter()
                            .filter(|&&w| p.leq(x, w))
                            .filter_map(|&w| {
                                let kw = p.upper_covers(w).iter().position(|&v| v == y)?;
                                let c = *inc.get(&(w, kw))?;
                                self.order.le(self.labels[w][kw], out_label).then_some(c)
                            })
                            .fold(0u64, u64::saturating_add)
                    };
                    if count > 0 {
                        inc.insert((y, k), count);
                        let slot = total.entry(z).or_insert(0);
                        *slot = slot.saturating_add(count);
                    }
                }
            }
        }
        None
    }

    pub fn is_r_labeling(&self) -> bool {
        self.r_labeling_witness().is_none()
    }

    /// Descent word of every maximal chain (one entry per chain). A chain of
    /// rank `n` gives a word of length `n - 1`, with `b` in position `i` when
    /// the `i`-th label exceeds the `(i+1)`-th.
    pub fn jordan_holder_words(&self) -> Result<Vec<AbWord>, LabelError> {
        let n = self.poset.rank();
        if n == 0 {
            return Err(LabelError::RankZero);
        }
        let mut out = Vec::new();
        self.walk(self.poset.bottom(), None, AbWord::EMPTY, &mut |w| out.push(w));
        Ok(out)
    }

    fn walk<F: FnMut(AbWord)>(&self, x: usize, last: Option<Label>, word: AbWord, emit: &mut F) {
        if x == self.poset.top() {
            emit(word);
            return;
        }
        for (k, &y) in self.poset.upper_covers(x).iter().enumerate() {
            let l = self.labels[x][k];
            let next = match last {
                None => word,
                Some(prev) if self.order.compare(prev, l) == Ordering::Greater => word.push(Letter::B),
                Some(_) => word.push(Letter::A),
            };
            self.walk(y, Some(l), next, emit);
        }
    }

    /// `Σ_c u_{λ(c)}` over maximal chains; refuses labelings that are not
    /// R-labelings.
    pub fn bs_sum(&self) -> Result<AbPoly<Int>, LabelError> {
        if let Some(w) = self.r_labeling_witness() {
            return Err(LabelError::NotRLabeling(w));
        }
        if self.poset.rank() == 0 {
            return Err(LabelError::RankZero);
        }
        let mut out = AbPoly::zero();
        self.walk(self.poset.bottom(), None, AbWord::EMPTY, &mut |w| {
            out.add_term(w, Int::one())
        });
        Ok(out)
    }

    /// Cartesian product; each cover moves one coordinate and keeps that
    /// factor's label. The result uses `self`'s label order.
    pub fn cartesian(&self, other: &LabeledPoset) -> LabeledPoset {
        let (poset, coords) = cartesian_parts(&self.poset, &other.poset);
        LabeledPoset::from_fn(poset, self.order, |u, v| {
            let ((x1, y1), (x2, y2)) = (coords[u], coords[v]);
            if y1 == y2 {
                self.label(x1, x2).expect("product cover moves the first coordinate")
            } else {
                other.label(y1, y2).expect("product cover moves the second coordinate")
            }
        })
    }

    /// Dual diamond product; covers into the new maximum are labeled `0`.
    /// The result uses `self`'s label order.
    ///
    /// # Panics
    /// If either operand has rank 0.
    pub fn dual_diamond(&self, other: &LabeledPoset) -> LabeledPoset {
        assert!(
            self.poset.rank() >= 1 && other.poset.rank() >= 1,
            "dual diamond product needs rank >= 1"
        );
        let (poset, coords) = dual_diamond_parts(&self.poset, &other.poset);
        LabeledPoset::from_fn(poset, self.order, |u, v| match (coords[u], coords[v]) {
            (_, None) => Label::Zero,
            (Some((x1, y1)), Some((x2, y2))) if y1 == y2 => {
                self.label(x1, x2).expect("product cover moves the first coordinate")
            }
            (Some((_, y1)), Some((_, y2))) => other.label(y1, y2).expect("product cover moves the second coordinate"),
            (None, _) => unreachable!("the new maximum covers nothing"),
        })
    }
}

/// `chain(α_1) × ... × chain(α_k)` with every cover in factor `i` labeled `i`.
///
/// # Panics
/// If `alpha` is empty or has a zero part.
pub fn product_chain_labeling(alpha: &[u32]) -> LabeledPoset {
    assert!(
        !alpha.is_empty() && alpha.iter().all(|&a| a > 0),
        "composition parts must be positive"
    );
    let factor = |i: usize| {
        LabeledPoset::from_fn(chain(alpha[i] as usize), LabelOrder::Natural, |_, _| {
            Label::Int(i as i64 + 1)
        })
    };
    (1..alpha.len()).fold(factor(0), |acc, i| acc.cartesian(&factor(i)))
}

/// `P_1 ◊* ... ◊* P_n` where `P_i` has `r_i` atoms labeled
/// `(-1, i), (2, i), ..., (r_i, i)` from below and `0` into its maximum.
///
/// # Panics
/// If `r` is empty or has a zero entry.
pub fn signed_labeling(r: &[u32]) -> LabeledPoset {
    assert!(
        !r.is_empty() && r.iter().all(|&x| x > 0),
        "every letter needs at least one sign"
    );
    let factor = |i: usize| {
        let fan = fan_poset(r[i] as usize).expect("r_i >= 1");
        let top = fan.top();
        // atoms x1..xr sit at indices 1..=r; x1 carries the sign -1
        LabeledPoset::from_fn(fan, LabelOrder::Signed, |_, y| match y {
            _ if y == top => Label::Zero,
            1 => Label::Pair(-1, i as i64 + 1),
            _ => Label::Pair(y as i64, i as i64 + 1),
        })
    };
    (1..r.len()).fold(factor(0), |acc, i| acc.dual_diamond(&factor(i)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abindex::theta;
    use crate::poset::boolean_algebra;
    use crate::qarith::Poly;

    fn words(lp: &LabeledPoset) -> Vec<String> {
        let mut v: Vec<String> = lp
            .jordan_holder_words()
            .unwrap()
            .iter()
            .map(|w| w.to_string())
            .collect();
        v.sort();
        v
    }

    #[test]
    fn label_text_round_trip() {
        for s in ["3", "(-1,2)", "0", "-4"] {
            assert_eq!(s.parse::<Label>().unwrap().to_string(), s);
        }
        assert_eq!("( 2 , 5 )".parse::<Label>(), Ok(Label::Pair(2, 5)));
        assert!("(1,2".parse::<Label>().is_err());
        assert!("x".parse::<Label>().is_err());
    }

    #[test]
    fn signed_order_places_zero_by_sign() {
        let o = LabelOrder::Signed;
        assert_eq!(o.compare(Label::Zero, Label::Pair(2, 1)), Ordering::Less);
        assert_eq!(o.compare(Label::Pair(-1, 5), Label::Zero), Ordering::Less);
        assert_eq!(o.compare(Label::Pair(2, 1), Label::Pair(2, 3)), Ordering::Less);
        assert_eq!(o.compare(Label::Pair(-1, 3), Label::Pair(2, 1)), Ordering::Less);
    }

    #[test]
    fn increasing_chain() {
        let lp = LabeledPoset::from_fn(chain(4), LabelOrder::Natural, |x, _| Label::Int(x as i64));
        assert!(lp.is_r_labeling());
        assert_eq!(words(&lp), vec!["aaa"]);
        assert_eq!(lp.bs_sum().unwrap(), chain(4).ab_index());
    }

    #[test]
    fn constant_labels_on_b2_fail() {
        let b2 = boolean_algebra(2);
        let lp = LabeledPoset::from_fn(b2, LabelOrder::Natural, |x, _| {
            if x == 0 {
                Label::Int(1)
            } else {
                Label::Int(2)
            }
        });
        let w = lp.r_labeling_witness().unwrap();
        assert_eq!(
            (w.lower.as_str(), w.upper.as_str(), w.increasing_chains),
            ("{}", "{1,2}", 2)
        );
        assert!(matches!(lp.bs_sum(), Err(LabelError::NotRLabeling(_))));
    }

    #[test]
    fn coordinate_labeling_of_b2() {
        let lp = product_chain_labeling(&[1, 1]);
        assert!(lp.is_r_labeling());
        assert_eq!(words(&lp), vec!["a", "b"]);
        assert_eq!(lp.bs_sum().unwrap(), AbPoly::parse("a + b").unwrap());
    }

    #[test]
    fn product_chain_examples() {
        assert_eq!(words(&product_chain_labeling(&[3])), vec!["aa"]);
        let lp = product_chain_labeling(&[1, 2]);
        assert_eq!(lp.bs_sum().unwrap(), AbPoly::parse("aa + ab + ba").unwrap());
        assert_eq!(theta(&lp.bs_sum().unwrap()), Poly::from_ints(&[1, 1, 1]));
    }

    #[test]
    fn fan_with_signed_labels() {
        let lp = signed_labeling(&[2]);
        assert_eq!(words(&lp), vec!["a", "b"]);
        assert_eq!(signed_labeling(&[1]).bs_sum().unwrap(), AbPoly::parse("a").unwrap());
        let lp = signed_labeling(&[4]);
        assert_eq!(lp.bs_sum().unwrap(), AbPoly::parse("a + 3*b").unwrap());
    }

    #[test]
    fn signed_two_two() {
        let lp = signed_labeling(&[2, 2]);
        assert!(lp.is_r_labeling());
        assert_eq!(lp.jordan_holder_words().unwrap().len(), 8);
        assert_eq!(theta(&lp.bs_sum().unwrap()), Poly::from_ints(&[1, 1]).pow(3));
        assert_eq!(lp.bs_sum().unwrap(), lp.poset().ab_index());
    }

    #[test]
    fn named_labels_round_trip() {
        let lp = signed_labeling(&[3]);
        let named: HashMap<_, _> = lp.named_labels().into_iter().collect();
        let back = LabeledPoset::from_named(lp.poset().clone(), LabelOrder::Signed, &named).unwrap();
        assert_eq!(back.named_labels(), lp.named_labels());
        let mut short = named.clone();
        short.remove(&("0".to_string(), "x1".to_string()));
        assert!(matches!(
            LabeledPoset::from_named(lp.poset().clone(), LabelOrder::Signed, &short),
            Err(LabelError::Missing(_, _))
        ));
        let mut extra = named;
        extra.insert(("0".to_string(), "1".to_string()), Label::Zero);
        assert!(matches!(
            LabeledPoset::from_named(lp.poset().clone(), LabelOrder::Signed, &extra),
            Err(LabelError::NotACover(_, _))
        ));
    }
}
