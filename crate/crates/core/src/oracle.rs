//! Brute-force subtree enumeration for small trees.
//!
//! Every nonempty connected vertex subset is produced exactly once by
//! anchored growth: subsets are grouped by their minimum vertex `v`, and
//! each group is grown from `{v}` by extending a frontier of neighbors
//! larger than `v`. A frontier vertex that has been skipped is banned for
//! the rest of that branch, which is what rules out duplicates.

use num_traits::Zero;

use crate::dp::{EdgeCounts, SubtreeStats, VertexSubtreeView};
use crate::error::{Error, Result};
use crate::numeric::{ratio, Count};
use crate::tree::Tree;

pub const DEFAULT_LIMIT: usize = 18;
const HARD_LIMIT: usize = 64;

/// All subtrees of a tree, each as a sorted vertex list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubtreeSet {
    pub subsets: Vec<Vec<usize>>,
}

impl SubtreeSet {
    pub fn len(&self) -> usize {
        self.subsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subsets.is_empty()
    }

    /// One subset per line, as comma-separated indices.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for s in &self.subsets {
            let line: Vec<String> = s.iter().map(|v| v.to_string()).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }
}

pub fn enumerate_subtrees(tree: &Tree) -> Result<SubtreeSet> {
    enumerate_subtrees_with_limit(tree, DEFAULT_LIMIT)
}

pub fn enumerate_subtrees_with_limit(tree: &Tree, limit: usize) -> Result<SubtreeSet> {
    let n = tree.n();
    if n > limit.min(HARD_LIMIT) {
        return Err(Error::Limit(format!(
            "brute-force enumeration refused for n = {n} (limit {})",
            limit.min(HARD_LIMIT)
        )));
    }
    let mut masks = Vec::new();
    for v in 0..n {
        let below: u64 = (1u64 << v) - 1;
        let ext: Vec<usize> = tree.neighbors(v).iter().copied().filter(|&w| w > v).collect();
        grow(tree, 1u64 << v, ext, below | (1u64 << v), &mut masks);
    }
    let subsets = masks
        .into_iter()
        .map(|m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
        .collect();
    Ok(SubtreeSet { subsets })
}

fn grow(tree: &Tree, set: u64, mut ext: Vec<usize>, mut banned: u64, out: &mut Vec<u64>) {
    out.push(set);
    while !ext.is_empty() {
        let w = ext.remove(0);
        banned |= 1u64 << w;
        let mut next = ext.clone();
        for &x in tree.neighbors(w) {
            let bit = 1u64 << x;
            if banned & bit == 0 && set & bit == 0 && !next.contains(&x) {
                next.push(x);
            }
        }
        grow(tree, set | (1u64 << w), next, banned, out);
    }
}

/// Subtree statistics by direct tallying over the enumeration.
pub fn oracle_stats(tree: &Tree) -> Result<SubtreeStats> {
    let set = enumerate_subtrees(tree)?;
    let mut containment = vec![Count::zero(); tree.n()];
    for s in &set.subsets {
        for &v in s {
            containment[v] += 1u32;
        }
    }
    Ok(SubtreeStats::from_tallies(tree, Count::from(set.len()), containment))
}

/// Per-vertex containing / non-containing tallies from the enumeration.
pub fn oracle_vertex_views(tree: &Tree) -> Result<Vec<VertexSubtreeView>> {
    let set = enumerate_subtrees(tree)?;
    let total = Count::from(set.len());
    let order_sum: Count = set.subsets.iter().map(|s| Count::from(s.len())).sum();
    let views = (0..tree.n())
        .map(|v| {
            let (mut alpha, mut sum) = (Count::zero(), Count::zero());
            for s in set.subsets.iter().filter(|s| s.contains(&v)) {
                alpha += 1u32;
                sum += s.len();
            }
            let alpha_bar = &total - &alpha;
            let lambda_bar = (!alpha_bar.is_zero()).then(|| ratio(&(&order_sum - &sum), &alpha_bar));
            VertexSubtreeView {
                vertex: v,
                lambda: ratio(&sum, &alpha),
                alpha,
                alpha_bar,
                lambda_bar,
            }
        })
        .collect();
    Ok(views)
}

pub fn oracle_edge_counts(tree: &Tree, edge: (usize, usize)) -> Result<EdgeCounts> {
    let set = enumerate_subtrees(tree)?;
    let alpha = set
        .subsets
        .iter()
        .filter(|s| s.contains(&edge.0) && s.contains(&edge.1))
        .count();
    Ok(EdgeCounts {
        alpha: Count::from(alpha),
        alpha_bar: Count::from(set.len() - alpha),
    })
}
