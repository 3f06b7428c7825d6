//! Finite bounded graded posets.
//!
//! A [`GradedPoset`] is only ever built through validation, so every value
//! has a unique minimum `0̂`, a unique maximum `1̂`, an acyclic cover
//! relation, and a rank function that rises by one along every cover.

mod construct;
mod flag;
mod mobius;

pub use construct::{
    bipyr_poset, boolean_algebra, cartesian_product, chain, cross_polytope, dual_diamond, fan_poset, pyr_poset,
    simplex_lattice, t_poset,
};
pub(crate) use construct::{cartesian_parts, dual_diamond_parts};
pub use flag::{flag_h, FlagH, FlagVector};

use std::collections::{HashMap, VecDeque};

use fixedbitset::FixedBitSet;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PosetError {
    #[error("poset has no elements")]
    Empty,
    #[error("duplicate element {0:?}")]
    DuplicateElement(String),
    #[error("cover [{0:?}, {1:?}] names an unknown element")]
    UnknownElement(String, String),
    #[error("cover [{0:?}, {0:?}] relates an element to itself")]
    SelfCover(String),
    #[error("cover [{0:?}, {1:?}] is listed twice")]
    DuplicateCover(String, String),
    #[error("no unique minimum: minimal elements {0:?}")]
    NoUniqueMinimum(Vec<String>),
    #[error("no unique maximum: maximal elements {0:?}")]
    NoUniqueMaximum(Vec<String>),
    #[error("cover relation has a cycle through {0:?}")]
    Cycle(String),
    #[error("not graded: element {0:?} sits at two different ranks")]
    NotGraded(String),
    #[error("elements {0:?} and {1:?} are not comparable")]
    Incomparable(String, String),
    #[error("poset is not simplicial")]
    NotSimplicial,
    #[error("parameter out of range: {0}")]
    Parameter(String),
}

/// Elements and covers as plain names, before validation.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RawPoset {
    pub elements: Vec<String>,
    pub covers: Vec<(String, String)>,
}

impl RawPoset {
    pub fn validate(&self) -> Result<GradedPoset, PosetError> {
        let mut index = HashMap::with_capacity(self.elements.len());
        for (i, name) in self.elements.iter().enumerate() {
            if index.insert(name.as_str(), i).is_some() {
                return Err(PosetError::DuplicateElement(name.clone()));
            }
        }
        let mut covers = Vec::with_capacity(self.covers.len());
        for (lo, hi) in &self.covers {
            match (index.get(lo.as_str()), index.get(hi.as_str())) {
                (Some(&x), Some(&y)) => covers.push((x, y)),
                _ => return Err(PosetError::UnknownElement(lo.clone(), hi.clone())),
            }
        }
        GradedPoset::from_covers(self.elements.clone(), &covers)
    }
}

/// A validated finite bounded graded poset.
#[derive(Debug, Clone)]
pub struct GradedPoset {
    names: Vec<String>,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
    rank: Vec<usize>,
    bottom: usize,
    top: usize,
    levels: Vec<Vec<usize>>,
    above: Vec<FixedBitSet>,
    below: Vec<FixedBitSet>,
}

impl GradedPoset {
    /// Validates covers given by element index.
    pub fn from_covers(names: Vec<String>, covers: &[(usize, usize)]) -> Result<Self, PosetError> {
        let n = names.len();
        if n == 0 {
            return Err(PosetError::Empty);
        }
        let mut up = vec![Vec::new(); n];
        let mut down = vec![Vec::new(); n];
        for &(x, y) in covers {
            assert!(x < n && y < n, "cover index out of range");
            if x == y {
                return Err(PosetError::SelfCover(names[x].clone()));
            }
            if up[x].contains(&y) {
                return Err(PosetError::DuplicateCover(names[x].clone(), names[y].clone()));
            }
            up[x].push(y);
            down[y].push(x);
        }
        let minimal: Vec<usize> = (0..n).filter(|&i| down[i].is_empty()).collect();
        let maximal: Vec<usize> = (0..n).filter(|&i| up[i].is_empty()).collect();
        let pick = |v: &[usize]| v.iter().map(|&i| names[i].clone()).collect::<Vec<_>>();
        if minimal.len() != 1 {
            return Err(PosetError::NoUniqueMinimum(pick(&minimal)));
        }
        if maximal.len() != 1 {
            return Err(PosetError::NoUniqueMaximum(pick(&maximal)));
        }
        let (bottom, top) = (minimal[0], maximal[0]);

        // Kahn's algorithm yields a topological order and assigns ranks.
        let mut indeg: Vec<usize> = down.iter().map(Vec::len).collect();
        let mut rank: Vec<Option<usize>> = vec![None; n];
        rank[bottom] = Some(0);
        let mut queue = VecDeque::from([bottom]);
        let mut order = Vec::with_capacity(n);
        while let Some(x) = queue.pop_front() {
            order.push(x);
            let rx = rank[x].expect("ranked before dequeue");
            for &y in &up[x] {
                match rank[y] {
                    None => rank[y] = Some(rx + 1),
                    Some(ry) if ry != rx + 1 => return Err(PosetError::NotGraded(names[y].clone())),
                    Some(_) => {}
                }
                indeg[y] -= 1;
                if indeg[y] == 0 {
                    queue.push_back(y);
                }
            }
        }
        if order.len() != n {
            let stuck = (0..n).find(|&i| indeg[i] > 0).expect("some element is on a cycle");
            return Err(PosetError::Cycle(names[stuck].clone()));
        }
        let rank: Vec<usize> = rank.into_iter().map(|r| r.expect("all reached")).collect();

        let mut levels = vec![Vec::new(); rank[top] + 1];
        for i in 0..n {
            levels[rank[i]].push(i);
        }
        let mut above = vec![FixedBitSet::with_capacity(n); n];
        for &x in order.iter().rev() {
            let mut set = FixedBitSet::with_capacity(n);
            set.insert(x);
            for &y in &up[x] {
                set.union_with(&above[y]);
            }
            above[x] = set;
        }
        let mut below = vec![FixedBitSet::with_capacity(n); n];
        for &y in &order {
            let mut set = FixedBitSet::with_capacity(n);
            set.insert(y);
            for &x in &down[y] {
                set.union_with(&below[x]);
            }
            below[y] = set;
        }
        Ok(Self {
            names,
            up,
            down,
            rank,
            bottom,
            top,
            levels,
            above,
            below,
        })
    }

    /// Number of elements.
    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Rank of the poset, `ρ(1̂)`.
    pub fn rank(&self) -> usize {
        self.rank[self.top]
    }

    pub fn rank_of(&self, x: usize) -> usize {
        self.rank[x]
    }

    /// `ρ(x, y) = ρ(y) - ρ(x)`.
    pub fn rank_diff(&self, x: usize, y: usize) -> usize {
        self.rank[y] - self.rank[x]
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn upper_covers(&self, x: usize) -> &[usize] {
        &self.up[x]
    }

    pub fn lower_covers(&self, x: usize) -> &[usize] {
        &self.down[x]
    }

    /// All cover pairs `(x, y)` with `x ≺ y`.
    pub fn covers(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.up
            .iter()
            .enumerate()
            .flat_map(|(x, ys)| ys.iter().map(move |&y| (x, y)))
    }

    pub fn level(&self, r: usize) -> &[usize] {
        &self.levels[r]
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.above[x].contains(y)
    }

    /// Elements of `[x, y]`, by increasing rank.
    pub fn interval_elements(&self, x: usize, y: usize) -> Vec<usize> {
        let mut set = self.above[x].clone();
        set.intersect_with(&self.below[y]);
        let mut v: Vec<usize> = set.ones().collect();
        v.sort_by_key(|&z| (self.rank[z], z));
        v
    }

    /// The interval `[x, y]` as a poset in its own right.
    pub fn interval(&self, x: usize, y: usize) -> Result<GradedPoset, PosetError> {
        if !self.leq(x, y) {
            return Err(PosetError::Incomparable(self.names[x].clone(), self.names[y].clone()));
        }
        let elems = self.interval_elements(x, y);
        let pos: HashMap<usize, usize> = elems.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let names = elems.iter().map(|&e| self.names[e].clone()).collect();
        let mut covers = Vec::new();
        for (i, &e) in elems.iter().enumerate() {
            covers.extend(self.up[e].iter().filter_map(|f| pos.get(f).map(|&j| (i, j))));
        }
        GradedPoset::from_covers(names, &covers)
    }

    /// The dual poset: every cover reversed.
    pub fn dual(&self) -> GradedPoset {
        let covers: Vec<(usize, usize)> = self.covers().map(|(x, y)| (y, x)).collect();
        GradedPoset::from_covers(self.names.clone(), &covers).expect("dual of a graded poset is graded")
    }

    /// Names and covers, for serialization.
    pub fn to_raw(&self) -> RawPoset {
        RawPoset {
            elements: self.names.clone(),
            covers: self
                .covers()
                .map(|(x, y)| (self.names[x].clone(), self.names[y].clone()))
                .collect(),
        }
    }
}
