//! Vertex ranks, the coefficient sequence `c_j`, and lower bounds on `λ(T, v)`.
//!
//! With the tree rooted at `v`, a non-root vertex without children has
//! rank 0 and any other non-root vertex has rank one more than the largest
//! rank among its children. The root has no rank.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numeric::{int, ratio_int, Ratio};
use crate::tree::Tree;

pub const CACHED_COEFFICIENTS: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankProfile {
    pub root: usize,
    /// `None` for the root.
    pub ranks: Vec<Option<usize>>,
    /// `m[j]` = number of non-root vertices of rank `j`.
    pub m: Vec<usize>,
}

pub fn rank_profile(tree: &Tree, root: usize) -> RankProfile {
    let (order, parent) = tree.bfs(root);
    let mut height = vec![0usize; tree.n()];
    for &u in order.iter().rev() {
        if let Some(p) = parent[u] {
            height[p] = height[p].max(height[u] + 1);
        }
    }
    let ranks: Vec<Option<usize>> = (0..tree.n()).map(|v| (v != root).then_some(height[v])).collect();
    let mut m = Vec::new();
    for r in ranks.iter().flatten() {
        if *r >= m.len() {
            m.resize(r + 1, 0);
        }
        m[*r] += 1;
    }
    RankProfile { root, ranks, m }
}

/// `c_0, c_1, ...` with `c_j = 1 - (1 + j/2 + Σ_{i<j} c_i) / (2^{j+1} + j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientTable {
    pub c: Vec<Ratio>,
}

impl CoefficientTable {
    pub fn get(&self, j: usize) -> &Ratio {
        &self.c[j]
    }

    pub fn len(&self) -> usize {
        self.c.len()
    }

    pub fn is_empty(&self) -> bool {
        self.c.is_empty()
    }
}

fn compute_coefficients(count: usize) -> Vec<Ratio> {
    let mut c: Vec<Ratio> = Vec::with_capacity(count);
    let mut partial = Ratio::zero();
    for j in 0..count {
        let denom = Ratio::from_integer(BigInt::one() << (j + 1)) + int(j as u64);
        let numer = Ratio::one() + ratio_int(j as i64, 2) + &partial;
        let cj = Ratio::one() - numer / denom;
        partial += &cj;
        c.push(cj);
    }
    c
}

fn cached() -> &'static [Ratio] {
    static TABLE: OnceLock<Vec<Ratio>> = OnceLock::new();
    TABLE.get_or_init(|| compute_coefficients(CACHED_COEFFICIENTS))
}

pub fn c_sequence(count: usize) -> Result<CoefficientTable> {
    if count == 0 {
        return Err(Error::Parameter("coefficient count must be at least 1".into()));
    }
    let c = if count <= CACHED_COEFFICIENTS {
        cached()[..count].to_vec()
    } else {
        compute_coefficients(count)
    };
    Ok(CoefficientTable { c })
}

/// A lower bound on `λ(T, root)` together with whether the rooted tree is
/// in the class for which the bound is proven.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LowerBound {
    pub value: Ratio,
    pub guaranteed: bool,
}

/// Single vertex, or root of degree at least two with every other
/// internal vertex of degree at least three.
pub fn in_rooted_class(tree: &Tree, root: usize) -> bool {
    if tree.n() == 1 {
        return true;
    }
    tree.degree(root) >= 2 && (0..tree.n()).all(|v| v == root || tree.degree(v) != 2)
}

/// `1 + Σ_j c_j m_j(T, root)`.
pub fn rank_lower_bound(tree: &Tree, root: usize) -> LowerBound {
    let profile = rank_profile(tree, root);
    let table = c_sequence(profile.m.len().max(1)).expect("nonzero count");
    let mut value = Ratio::one();
    for (j, &mj) in profile.m.iter().enumerate() {
        value += table.get(j) * int(mj as u64);
    }
    LowerBound {
        value,
        guaranteed: in_rooted_class(tree, root),
    }
}

/// Number of non-leaf vertices when rooted at `root`; the root always counts as a non-leaf.
pub fn non_leaf_count(tree: &Tree, root: usize) -> usize {
    let leaves = (0..tree.n()).filter(|&v| v != root && tree.is_leaf(v)).count();
    tree.n() - leaves
}

/// `(n + 1)/2 + (k - 1)/10` with `k` the non-leaf count.
pub fn simple_lower_bound(tree: &Tree, root: usize) -> LowerBound {
    let n = tree.n() as i64;
    let k = non_leaf_count(tree, root) as i64;
    LowerBound {
        value: ratio_int(n + 1, 2) + ratio_int(k - 1, 10),
        guaranteed: in_rooted_class(tree, root),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dp::vertex_view;
    use crate::families::{make_family, FamilySpec};
    use crate::tree::tests::{path, star};

    #[test]
    fn profiles() {
        assert_eq!(rank_profile(&star(3), 0).m, vec![3]);
        let p = rank_profile(&path(4), 1);
        assert_eq!(p.m, vec![2, 1]);
        assert_eq!(p.ranks, vec![Some(0), None, Some(1), Some(0)]);
        let broom = make_family(&FamilySpec::Broom { m: 1, k: 1 }).unwrap();
        assert_eq!(rank_profile(&broom, 0).m, vec![3, 1]);
        assert!(rank_profile(&Tree::single_vertex(), 0).m.is_empty());
    }

    #[test]
    fn published_coefficients() {
        let t = c_sequence(6).unwrap();
        let expected = [(1, 2), (3, 5), (69, 100), (1471, 1900), (4819, 5700), (70783, 78660)];
        for (j, &(a, b)) in expected.iter().enumerate() {
            assert_eq!(t.c[j], ratio_int(a, b), "c_{j}");
        }
        assert!(c_sequence(0).is_err());
        assert_eq!(c_sequence(70).unwrap().c[..64], c_sequence(64).unwrap().c[..]);
    }

    #[test]
    fn c2_by_substitution() {
        let direct = Ratio::one() - (int(1) + int(1) + ratio_int(1, 2) + ratio_int(3, 5)) / int(10);
        assert_eq!(direct, ratio_int(69, 100));
    }

    #[test]
    fn rank_bound_examples() {
        let b = rank_lower_bound(&Tree::single_vertex(), 0);
        assert_eq!(b.value, int(1));
        assert!(b.guaranteed);

        let b = rank_lower_bound(&star(3), 0);
        assert_eq!(b.value, ratio_int(5, 2));
        assert_eq!(vertex_view(&star(3), 0).unwrap().lambda, b.value);

        let broom = make_family(&FamilySpec::Broom { m: 1, k: 1 }).unwrap();
        let b = rank_lower_bound(&broom, 0);
        assert_eq!(b.value, ratio_int(31, 10));
        assert!(b.guaranteed);

        assert!(!rank_lower_bound(&path(4), 0).guaranteed);
    }

    #[test]
    fn simple_bound_examples() {
        assert_eq!(simple_lower_bound(&Tree::single_vertex(), 0).value, int(1));
        let broom = make_family(&FamilySpec::Broom { m: 1, k: 1 }).unwrap();
        assert_eq!(simple_lower_bound(&broom, 0).value, ratio_int(31, 10));
        let broom = make_family(&FamilySpec::Broom { m: 0, k: 2 }).unwrap();
        assert_eq!(simple_lower_bound(&broom, 0).value, ratio_int(21, 5));
        assert_eq!(vertex_view(&broom, 0).unwrap().lambda, ratio_int(21, 5));
    }
}
