//! Quasi-symmetric functions in the monomial basis `M_α`, the type-B*
//! extension by a commuting variable `s`, the maps γ and γ_{B*} out of
//! `Z<a,b>`, and the stable principal specializations as truncated series.
//!
//! γ sends `v_S = Π (b if i ∈ S else a - b)` of degree `n - 1` to
//! `M_{co(S)}`, with `co(S)` the composition of `n` whose partial sums are
//! the elements of `S`. Since `a = (a - b) + b`, the word `u_S` maps to the
//! fundamental function `L_{co(S)}`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::abindex::{theta, AbPoly};
use crate::coeff::Coeff;
use crate::lincomb::{LinComb, RenderKey};
use crate::poset::GradedPoset;
use crate::qarith::{q_factorial, Poly, Series};
use crate::Int;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QSymError {
    #[error("set element {elem} is outside 1..{n}")]
    SetOutOfRange { elem: u32, n: u32 },
    #[error("composition parts must be positive")]
    ZeroPart,
    #[error("input is not homogeneous")]
    NotHomogeneous,
    #[error("cannot parse composition {0:?}")]
    Parse(String),
}

/// A finite sequence of positive integers. The empty composition indexes
/// the unit `M_() = 1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self, QSymError> {
        if parts.contains(&0) {
            return Err(QSymError::ZeroPart);
        }
        Ok(Self(parts))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|α|`.
    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn reverse(&self) -> Self {
        Self(self.0.iter().rev().copied().collect())
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for Composition {
    type Err = QSymError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| QSymError::Parse(s.to_string()))?;
        if inner.trim().is_empty() {
            return Ok(Self::empty());
        }
        let parts = inner
            .split(',')
            .map(|p| p.trim().parse::<u32>().map_err(|_| QSymError::Parse(s.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(parts)
    }
}

impl RenderKey for Composition {
    fn render(&self) -> String {
        if self.is_empty() {
            String::new()
        } else {
            format!("M{self}")
        }
    }
}

/// The composition of `n` with partial sums `S ⊆ {1..n-1}`.
pub fn comp_of_set(set: &[u32], n: u32) -> Result<Composition, QSymError> {
    let mut cuts: Vec<u32> = set.to_vec();
    for &e in &cuts {
        if e == 0 || e >= n {
            return Err(QSymError::SetOutOfRange { elem: e, n });
        }
    }
    cuts.sort_unstable();
    cuts.dedup();
    Ok(comp_of_mask(cuts.iter().fold(0u64, |m, &e| m | 1 << (e - 1)), n))
}

/// `S_α = {α_1, α_1 + α_2, ...}` without the final sum.
pub fn set_of_comp(alpha: &Composition) -> Vec<u32> {
    let mut acc = 0;
    let k = alpha.len().saturating_sub(1);
    alpha.parts()[..k]
        .iter()
        .map(|&a| {
            acc += a;
            acc
        })
        .collect()
}

/// `α*`.
pub fn reverse_comp(alpha: &Composition) -> Composition {
    alpha.reverse()
}

/// Composition of `n` cut after each position in `mask` (bit `i - 1` for `i`).
fn comp_of_mask(mask: u64, n: u32) -> Composition {
    let mut parts = Vec::new();
    let mut last = 0;
    for i in 1..n {
        if mask >> (i - 1) & 1 == 1 {
            parts.push(i - last);
            last = i;
        }
    }
    if n > 0 {
        parts.push(n - last);
    }
    Composition(parts)
}

/// Supersets of `mask` inside the low `n` bits.
fn supersets(mask: u64, n: usize) -> impl Iterator<Item = u64> {
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let free = full & !mask;
    // walk the submasks of `free` in increasing order
    let mut sub = 0u64;
    let mut done = false;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let out = mask | sub;
        sub = sub.wrapping_sub(free) & free;
        done = sub == 0;
        Some(out)
    })
}

/// Element of QSym in the monomial basis.
pub type QSym<C> = LinComb<Composition, C>;

/// `M_α s^p`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BStarKey {
    pub alpha: Composition,
    pub s: u32,
}

impl RenderKey for BStarKey {
    fn render(&self) -> String {
        let s = match self.s {
            0 => String::new(),
            1 => "s".to_string(),
            p => format!("s^{p}"),
        };
        match (self.alpha.is_empty(), s.is_empty()) {
            (true, _) => s,
            (false, true) => self.alpha.render(),
            (false, false) => format!("{}*{s}", self.alpha.render()),
        }
    }
}

/// Element of QSym_{B*}: combinations of `M_α s^p`.
pub type QSymBStar<C> = LinComb<BStarKey, C>;

fn homogeneous_degree<C: Coeff>(w: &AbPoly<C>) -> Result<Option<usize>, QSymError> {
    if !w.is_homogeneous() {
        return Err(QSymError::NotHomogeneous);
    }
    Ok(w.degree())
}

/// γ on a homogeneous ab-polynomial of degree `n - 1`; lands in degree `n`.
pub fn gamma<C: Coeff>(w: &AbPoly<C>) -> Result<QSym<C>, QSymError> {
    let Some(deg) = homogeneous_degree(w)? else {
        return Ok(QSym::zero());
    };
    let mut out = QSym::zero();
    for (word, c) in w.terms() {
        for t in supersets(word.mask(), deg) {
            out.add_term(comp_of_mask(t, deg as u32 + 1), c.clone());
        }
    }
    Ok(out)
}

/// `L_α = Σ_{S_α ⊆ T ⊆ {1..n-1}} M_{co(T)}`.
pub fn fundamental_expand<C: Coeff>(alpha: &Composition) -> QSym<C> {
    let n = alpha.size();
    if n == 0 {
        return QSym::basis(Composition::empty());
    }
    let mask = set_of_comp(alpha).iter().fold(0u64, |m, &e| m | 1 << (e - 1));
    supersets(mask, n as usize - 1)
        .map(|t| (comp_of_mask(t, n), C::one()))
        .collect()
}

type Shuffled = Vec<(Vec<u32>, u64)>;

/// The quasi-shuffle of two compositions, as a map to multiplicities.
fn shuffle_parts(x: &[u32], y: &[u32], memo: &mut BTreeMap<(Vec<u32>, Vec<u32>), Shuffled>) -> Shuffled {
    if x.is_empty() {
        return vec![(y.to_vec(), 1)];
    }
    if y.is_empty() {
        return vec![(x.to_vec(), 1)];
    }
    let key = (x.to_vec(), y.to_vec());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let mut acc: BTreeMap<Vec<u32>, u64> = BTreeMap::new();
    let mut lead = |head: u32, tails: Shuffled| {
        for (tail, m) in tails {
            let mut v = Vec::with_capacity(tail.len() + 1);
            v.push(head);
            v.extend(tail);
            *acc.entry(v).or_insert(0) += m;
        }
    };
    lead(x[0], shuffle_parts(&x[1..], y, memo));
    lead(y[0], shuffle_parts(x, &y[1..], memo));
    lead(x[0] + y[0], shuffle_parts(&x[1..], &y[1..], memo));
    let out: Vec<_> = acc.into_iter().collect();
    memo.insert(key, out.clone());
    out
}

fn shuffle_keys<C: Coeff>(a: &Composition, b: &Composition) -> Vec<(Composition, C)> {
    shuffle_parts(a.parts(), b.parts(), &mut BTreeMap::new())
        .into_iter()
        .map(|(v, m)| (Composition(v), C::from_u64(m).expect("multiplicity fits")))
        .collect()
}

/// The product of QSym in the monomial basis.
pub fn quasi_shuffle<C: Coeff>(x: &QSym<C>, y: &QSym<C>) -> QSym<C> {
    x.bilinear(y, |a, b| shuffle_keys(a, b).into_iter().collect())
}

/// `M_α s^p · M_β s^r = (M_α M_β) s^{p+r}`.
pub fn bstar_product<C: Coeff>(x: &QSymBStar<C>, y: &QSymBStar<C>) -> QSymBStar<C> {
    x.bilinear(y, |a, b| {
        shuffle_keys::<C>(&a.alpha, &b.alpha)
            .into_iter()
            .map(|(alpha, c)| (BStarKey { alpha, s: a.s + b.s }, c))
            .collect()
    })
}

/// `f ↦ f*`, reversing every composition.
pub fn reverse_qsym<C: Coeff>(x: &QSym<C>) -> QSym<C> {
    x.map_keys(Composition::reverse)
}

/// γ_{B*} on a homogeneous ab-polynomial of degree `n`.
///
/// The basis word `(a-b)^{α_1 - 1} b ... (a-b)^{α_k - 1} b (a-b)^p` is
/// `v_S` with `S` the partial sums of `α`, so `u_S` expands over the
/// supersets of `S` in `{1..n}`.
pub fn gamma_bstar<C: Coeff>(w: &AbPoly<C>) -> Result<QSymBStar<C>, QSymError> {
    let Some(deg) = homogeneous_degree(w)? else {
        return Ok(QSymBStar::zero());
    };
    let mut out = QSymBStar::zero();
    for (word, c) in w.terms() {
        for t in supersets(word.mask(), deg) {
            out.add_term(bstar_key_of_mask(t, deg as u32), c.clone());
        }
    }
    Ok(out)
}

fn bstar_key_of_mask(mask: u64, n: u32) -> BStarKey {
    let top = 64 - mask.leading_zeros();
    let alpha = if mask == 0 {
        Composition::empty()
    } else {
        comp_of_mask(mask & !(1 << (top - 1)), top)
    };
    BStarKey { alpha, s: n - top }
}

/// `Σ_{0 ≤ e_1 < ... < e_k} q^{Σ α_j e_j}` through `q^order`.
fn ps_monomial<C: Coeff>(alpha: &[u32], order: u32) -> Series<C> {
    let mut out = Series::zero(order);
    fn go<C: Coeff>(alpha: &[u32], start: u32, acc: u32, order: u32, out: &mut Series<C>) {
        let Some((&a, rest)) = alpha.split_first() else {
            out.add_at(acc, C::one());
            return;
        };
        let mut e = start;
        loop {
            // cheapest completion: the remaining parts at e+1, e+2, ...
            let floor: u32 = acc + a * e + rest.iter().zip(1..).map(|(&b, d)| b * (e + d)).sum::<u32>();
            if floor > order {
                break;
            }
            go(rest, e + 1, acc + a * e, order, out);
            e += 1;
        }
    }
    go(alpha, 0, 0, order, &mut out);
    out
}

/// `ps(f) = f(1, q, q^2, ...)` through `q^order`.
pub fn ps<C: Coeff>(x: &QSym<C>, order: u32) -> Series<C> {
    let mut out = Series::zero(order);
    for (alpha, c) in x.terms() {
        out = &out + &ps_monomial::<C>(alpha.parts(), order).scale(c);
    }
    out
}

/// `ps*(f) = ps(f*)`.
pub fn ps_star<C: Coeff>(x: &QSym<C>, order: u32) -> Series<C> {
    ps(&reverse_qsym(x), order)
}

/// `ps_{B*}(M_α s^p) = q^{|α|} ps*(M_α)`.
pub fn ps_bstar<C: Coeff>(x: &QSymBStar<C>, order: u32) -> Series<C> {
    let mut out = Series::zero(order);
    for (key, c) in x.terms() {
        let rev: Vec<u32> = key.alpha.parts().iter().rev().copied().collect();
        out = &out + &ps_monomial::<C>(&rev, order).shift(key.alpha.size()).scale(c);
    }
    out
}

/// `F(P) = γ(Ψ(P))`; the one-element poset gives `1`.
pub fn f_poset(p: &GradedPoset) -> QSym<Int> {
    if p.rank() == 0 {
        return QSym::basis(Composition::empty());
    }
    gamma(&p.ab_index()).expect("ab-index is homogeneous")
}

/// `F_{B*}(P) = Σ_{x < 1̂} F([0̂, x]) s^{ρ(x, 1̂) - 1}`; the one-element
/// poset gives `1`.
pub fn f_bstar(p: &GradedPoset) -> QSymBStar<Int> {
    if p.rank() == 0 {
        return QSymBStar::basis(BStarKey {
            alpha: Composition::empty(),
            s: 0,
        });
    }
    let mut out = QSymBStar::zero();
    for x in (0..p.len()).filter(|&x| x != p.top()) {
        let lower = p.interval(p.bottom(), x).expect("0̂ <= x");
        let s = (p.rank_diff(x, p.top()) - 1) as u32;
        for (alpha, c) in f_poset(&lower).terms() {
            out.add_term(
                BStarKey {
                    alpha: alpha.clone(),
                    s,
                },
                c.clone(),
            );
        }
    }
    out
}

/// `P*`, every cover reversed.
pub fn dual_poset(p: &GradedPoset) -> GradedPoset {
    p.dual()
}

/// A polynomial in `t_1, ..., t_k`, keyed by exponent vectors.
pub type KVarPoly = BTreeMap<Vec<u32>, Int>;

/// `Σ t_1^{ρ(x_0,x_1)} ... t_k^{ρ(x_{k-1},x_k)}` over multichains
/// `0̂ = x_0 ≤ x_1 ≤ ... ≤ x_k = 1̂`. For `k` below the rank this still
/// agrees with [`restrict`] of [`f_poset`]: both sides only keep monomials
/// in the first `k` variables.
pub fn f_poset_multichain(p: &GradedPoset, k: usize) -> KVarPoly {
    let mut states: BTreeMap<usize, KVarPoly> = BTreeMap::new();
    states.insert(p.bottom(), BTreeMap::from([(Vec::new(), Int::one())]));
    for step in 0..k {
        let last = step + 1 == k;
        let mut next: BTreeMap<usize, KVarPoly> = BTreeMap::new();
        for (&x, poly) in &states {
            for y in p.interval_elements(x, p.top()) {
                if last && y != p.top() {
                    continue;
                }
                let d = p.rank_diff(x, y) as u32;
                let slot = next.entry(y).or_default();
                for (exps, c) in poly {
                    let mut e = exps.clone();
                    e.push(d);
                    *slot.entry(e).or_insert_with(Int::zero) += c;
                }
            }
        }
        states = next;
    }
    states.remove(&p.top()).unwrap_or_default()
}

/// `M_α(t_1, ..., t_k) = Σ_{i_1 < ... < i_l ≤ k} t_{i_1}^{α_1} ... t_{i_l}^{α_l}`,
/// extended linearly.
pub fn restrict(x: &QSym<Int>, k: usize) -> KVarPoly {
    let mut out = KVarPoly::new();
    for (alpha, c) in x.terms() {
        let l = alpha.len();
        if l > k {
            continue;
        }
        // choose the l positions as a k-bit mask with l ones
        for mask in 0u64..(1 << k) {
            if mask.count_ones() as usize != l {
                continue;
            }
            let mut exps = vec![0u32; k];
            let mut parts = alpha.parts().iter();
            for (i, e) in exps.iter_mut().enumerate() {
                if mask >> i & 1 == 1 {
                    *e = *parts.next().expect("l parts");
                }
            }
            *out.entry(exps).or_insert_with(Int::zero) += c;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn check_against_theta<F>(w: &AbPoly<Int>, n: u32, specialized: F) -> bool
where
    F: FnOnce(u32) -> Series<Int>,
{
    let th = theta(w);
    let order = th.degree().unwrap_or(0) + n + 4;
    let one_minus_q = Poly::from_coeffs([Int::one(), -Int::one()]);
    let prefactor = &one_minus_q.pow(n) * &q_factorial::<Int>(n);
    let rhs = &Series::from_poly(&prefactor, order) * &specialized(order);
    rhs == Series::from_poly(&th, order)
}

/// Checks `Θ(w) = (1-q)^n [n]! ps*(γ(w))` for `w` of degree `n - 1`,
/// coefficient by coefficient through `deg Θ(w) + n + 4`.
pub fn verify_theta_via_ps(w: &AbPoly<Int>) -> Result<bool, QSymError> {
    let Some(deg) = homogeneous_degree(w)? else {
        return Ok(true);
    };
    let g = gamma(w)?;
    Ok(check_against_theta(w, deg as u32 + 1, |order| ps_star(&g, order)))
}

/// Checks `Θ(w) = (1-q)^n [n]! ps_{B*}(γ_{B*}(w))` for `w` of degree `n`.
///
/// No reversal is applied: with `ps_{B*}(f s^j) = q^{deg f} ps*(f)`,
/// feeding `γ_{B*}(w*)` into the right side produces `Θ(w*)` instead.
pub fn verify_theta_via_ps_bstar(w: &AbPoly<Int>) -> Result<bool, QSymError> {
    let Some(deg) = homogeneous_degree(w)? else {
        return Ok(true);
    };
    let g = gamma_bstar(w)?;
    Ok(check_against_theta(w, deg as u32, |order| ps_bstar(&g, order)))
}

/// `Θ(Ψ(P)) = (1-q)^n [n]! ps*(F(P))` for `P` of rank `n >= 1`, with `F(P)`
/// computed through γ.
pub fn verify_poset_via_ps(p: &GradedPoset) -> bool {
    assert!(p.rank() >= 1, "needs rank at least 1");
    let f = f_poset(p);
    check_against_theta(&p.ab_index(), p.rank() as u32, |order| ps_star(&f, order))
}

/// `Θ(Ψ(P)) = (1-q)^n [n]! ps_{B*}(F_{B*}(P))` for `P` of rank `n + 1 >= 1`,
/// with `F_{B*}(P)` summed over lower intervals rather than through γ_{B*}.
pub fn verify_poset_via_ps_bstar(p: &GradedPoset) -> bool {
    assert!(p.rank() >= 1, "needs rank at least 1");
    let f = f_bstar(p);
    check_against_theta(&p.ab_index(), p.rank() as u32 - 1, |order| ps_bstar(&f, order))
}
