//! Standard posets and the two products.
//!
//! Product elements are named `(x,y)` after their coordinates; the adjoined
//! maximum of a dual diamond product is named `top`.

use super::{GradedPoset, PosetError};

const MAX_BOOLEAN_RANK: usize = 20;
const MAX_CROSS_DIM: usize = 12;

fn build(names: Vec<String>, covers: &[(usize, usize)]) -> GradedPoset {
    GradedPoset::from_covers(names, covers).expect("constructed poset is graded")
}

fn subset_name(mask: usize, n: usize) -> String {
    let parts: Vec<String> = (1..=n)
        .filter(|i| mask >> (i - 1) & 1 == 1)
        .map(|i| i.to_string())
        .collect();
    format!("{{{}}}", parts.join(","))
}

fn fresh_top_name(names: &[String]) -> String {
    let mut name = "top".to_string();
    while names.contains(&name) {
        name.push('\'');
    }
    name
}

/// `B_n`, the lattice of subsets of `{1..n}`.
///
/// # Panics
/// For `n > 20`.
pub fn boolean_algebra(n: usize) -> GradedPoset {
    assert!(n <= MAX_BOOLEAN_RANK, "Boolean algebra rank {n} too large");
    let size = 1usize << n;
    let names = (0..size).map(|m| subset_name(m, n)).collect();
    let covers: Vec<(usize, usize)> = (0..size)
        .flat_map(|m| (0..n).filter(move |b| m >> b & 1 == 0).map(move |b| (m, m | 1 << b)))
        .collect();
    build(names, &covers)
}

/// The chain `0 < 1 < ... < n` of rank `n`.
pub fn chain(n: usize) -> GradedPoset {
    let names = (0..=n).map(|i| i.to_string()).collect();
    let covers: Vec<(usize, usize)> = (0..n).map(|i| (i, i + 1)).collect();
    build(names, &covers)
}

/// `T_n`: `B_n` with a new maximum adjoined above its old maximum.
pub fn t_poset(n: usize) -> GradedPoset {
    let b = boolean_algebra(n);
    let mut raw = b.to_raw();
    let top = fresh_top_name(&raw.elements);
    raw.covers.push((b.name(b.top()).to_string(), top.clone()));
    raw.elements.push(top);
    raw.validate().expect("T_n is graded")
}

/// The face lattice of the `n`-simplex, which is `B_{n+1}`.
pub fn simplex_lattice(n: usize) -> GradedPoset {
    boolean_algebra(n + 1)
}

/// The face lattice of the `n`-dimensional cross-polytope: the subsets of
/// `{±1, ..., ±n}` containing no antipodal pair, ordered by inclusion, with
/// a maximum adjoined. Rank `n + 1`.
///
/// # Panics
/// For `n > 12`.
pub fn cross_polytope(n: usize) -> GradedPoset {
    assert!(n <= MAX_CROSS_DIM, "cross-polytope dimension {n} too large");
    // Faces are sign vectors in {0, +, -}^n, indexed in base 3.
    let size = 3usize.pow(n as u32);
    let digit = |idx: usize, i: usize| idx / 3usize.pow(i as u32) % 3;
    let mut names: Vec<String> = (0..size)
        .map(|idx| {
            let parts: Vec<String> = (0..n)
                .filter_map(|i| match digit(idx, i) {
                    1 => Some(format!("+{}", i + 1)),
                    2 => Some(format!("-{}", i + 1)),
                    _ => None,
                })
                .collect();
            format!("{{{}}}", parts.join(","))
        })
        .collect();
    let mut covers = Vec::new();
    for idx in 0..size {
        for i in 0..n {
            if digit(idx, i) == 0 {
                let p = 3usize.pow(i as u32);
                covers.push((idx, idx + p));
                covers.push((idx, idx + 2 * p));
            }
        }
    }
    let top = names.len();
    for idx in 0..size {
        if (0..n).all(|i| digit(idx, i) != 0) {
            covers.push((idx, top));
        }
    }
    names.push(fresh_top_name(&names));
    build(names, &covers)
}

/// Rank-2 poset with `r` atoms between `0` and `1`.
pub fn fan_poset(r: usize) -> Result<GradedPoset, PosetError> {
    if r == 0 {
        return Err(PosetError::Parameter("fan poset needs at least one atom".into()));
    }
    let mut names = vec!["0".to_string()];
    names.extend((1..=r).map(|i| format!("x{i}")));
    names.push("1".to_string());
    let covers: Vec<(usize, usize)> = (1..=r).flat_map(|i| [(0, i), (i, r + 1)]).collect();
    Ok(build(names, &covers))
}

/// `P × Q` together with the coordinates of each element.
pub(crate) fn cartesian_parts(p: &GradedPoset, q: &GradedPoset) -> (GradedPoset, Vec<(usize, usize)>) {
    let m = q.len();
    let coords: Vec<(usize, usize)> = (0..p.len()).flat_map(|x| (0..m).map(move |y| (x, y))).collect();
    let names = coords
        .iter()
        .map(|&(x, y)| format!("({},{})", p.name(x), q.name(y)))
        .collect();
    let mut covers = Vec::new();
    for &(x, y) in &coords {
        let idx = x * m + y;
        covers.extend(p.upper_covers(x).iter().map(|&x2| (idx, x2 * m + y)));
        covers.extend(q.upper_covers(y).iter().map(|&y2| (idx, x * m + y2)));
    }
    (build(names, &covers), coords)
}

/// The Cartesian product, ordered componentwise. Ranks add.
pub fn cartesian_product(p: &GradedPoset, q: &GradedPoset) -> GradedPoset {
    cartesian_parts(p, q).0
}

/// `Pyr(P) = P × B_1`.
pub fn pyr_poset(p: &GradedPoset) -> GradedPoset {
    cartesian_product(p, &boolean_algebra(1))
}

/// `P ◊* Q` with the coordinates of each element; `None` marks the new top.
pub(crate) fn dual_diamond_parts(p: &GradedPoset, q: &GradedPoset) -> (GradedPoset, Vec<Option<(usize, usize)>>) {
    let ps: Vec<usize> = (0..p.len()).filter(|&x| x != p.top()).collect();
    let qs: Vec<usize> = (0..q.len()).filter(|&y| y != q.top()).collect();
    let mut p_pos = vec![usize::MAX; p.len()];
    for (i, &x) in ps.iter().enumerate() {
        p_pos[x] = i;
    }
    let mut q_pos = vec![usize::MAX; q.len()];
    for (j, &y) in qs.iter().enumerate() {
        q_pos[y] = j;
    }
    let m = qs.len();
    let mut coords: Vec<Option<(usize, usize)>> =
        ps.iter().flat_map(|&x| qs.iter().map(move |&y| Some((x, y)))).collect();
    let mut names: Vec<String> = coords
        .iter()
        .flatten()
        .map(|&(x, y)| format!("({},{})", p.name(x), q.name(y)))
        .collect();
    let top = names.len();
    let mut covers = Vec::new();
    for (i, &x) in ps.iter().enumerate() {
        for (j, &y) in qs.iter().enumerate() {
            let idx = i * m + j;
            covers.extend(
                p.upper_covers(x)
                    .iter()
                    .filter(|&&x2| x2 != p.top())
                    .map(|&x2| (idx, p_pos[x2] * m + j)),
            );
            covers.extend(
                q.upper_covers(y)
                    .iter()
                    .filter(|&&y2| y2 != q.top())
                    .map(|&y2| (idx, i * m + q_pos[y2])),
            );
            if p.upper_covers(x).contains(&p.top()) && q.upper_covers(y).contains(&q.top()) {
                covers.push((idx, top));
            }
        }
    }
    names.push(fresh_top_name(&names));
    coords.push(None);
    (build(names, &covers), coords)
}

/// `P ◊* Q = (P - 1̂) × (Q - 1̂) ∪ {1̂}`. The rank is `rank P + rank Q - 1`.
///
/// # Panics
/// If either operand has rank 0.
pub fn dual_diamond(p: &GradedPoset, q: &GradedPoset) -> GradedPoset {
    assert!(p.rank() >= 1 && q.rank() >= 1, "dual diamond product needs rank >= 1");
    dual_diamond_parts(p, q).0
}

/// `Bipyr(P) = P ◊* B_2`.
pub fn bipyr_poset(p: &GradedPoset) -> GradedPoset {
    dual_diamond(p, &boolean_algebra(2))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes_and_ranks() {
        assert_eq!(boolean_algebra(0).len(), 1);
        assert_eq!(boolean_algebra(4).len(), 16);
        assert_eq!(boolean_algebra(4).rank(), 4);
        assert_eq!(chain(3).rank(), 3);
        assert_eq!(t_poset(3).rank(), 4);
        assert_eq!(t_poset(0).rank(), 1);
        assert_eq!(simplex_lattice(2).rank(), 3);
        assert_eq!(cross_polytope(3).len(), 28);
        assert_eq!(cross_polytope(3).rank(), 4);
        assert_eq!(cross_polytope(0).rank(), 1);
        assert_eq!(fan_poset(3).unwrap().len(), 5);
        assert!(fan_poset(0).is_err());
    }

    #[test]
    fn names_are_readable() {
        let b = boolean_algebra(2);
        assert_eq!(b.name(b.top()), "{1,2}");
        assert_eq!(b.name(b.bottom()), "{}");
        let c = cross_polytope(2);
        assert_eq!(c.name(c.top()), "top");
        assert!(c.names().contains(&"{+1,-2}".to_string()));
        let prod = cartesian_product(&chain(1), &chain(1));
        assert_eq!(prod.name(prod.top()), "(1,1)");
    }

    #[test]
    fn cartesian_of_b1s_is_b2() {
        let p = cartesian_product(&boolean_algebra(1), &boolean_algebra(1));
        assert_eq!(p.flag_f(), boolean_algebra(2).flag_f());
        let (p, q) = (cross_polytope(2), chain(2));
        assert_eq!(cartesian_product(&p, &q).rank(), p.rank() + q.rank());
    }

    #[test]
    fn dual_diamond_of_b2s_is_square() {
        let sq = dual_diamond(&boolean_algebra(2), &boolean_algebra(2));
        assert_eq!(sq.flag_f(), cross_polytope(2).flag_f());
        assert_eq!(bipyr_poset(&boolean_algebra(2)).flag_f(), cross_polytope(2).flag_f());
        let (p, q) = (cross_polytope(2), boolean_algebra(3));
        assert_eq!(dual_diamond(&p, &q).rank(), p.rank() + q.rank() - 1);
    }

    #[test]
    fn bipyramids_of_cross_polytopes() {
        for n in 1..=3 {
            assert_eq!(bipyr_poset(&cross_polytope(n)).flag_f(), cross_polytope(n + 1).flag_f());
        }
        assert_eq!(pyr_poset(&simplex_lattice(2)).flag_f(), simplex_lattice(3).flag_f());
    }

    #[test]
    fn rank_one_operands() {
        let p = dual_diamond(&boolean_algebra(1), &boolean_algebra(3));
        assert_eq!(p.rank(), 3);
        assert_eq!(p.flag_f(), boolean_algebra(3).flag_f());
    }
}
