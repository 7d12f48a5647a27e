//! Free trees up to isomorphism, canonical forms, and random series-reduced trees.
//!
//! Rooted trees are generated as level sequences in decreasing
//! lexicographic order (Beyer–Hedetniemi successor rule); each sequence is
//! the canonical ordering of its rooted tree. A free tree is emitted from
//! the rooting at its centroid. Bicentroidal trees have two such rootings
//! and only the one with the smaller canonical code is kept, so every
//! isomorphism class appears exactly once with no dedup table.

use std::collections::BTreeSet;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tree::Tree;

pub const DEFAULT_CAP: usize = 18;
pub const MAX_SAMPLE_RETRIES: usize = 1000;

/// Centroid-rooted level sequence (vertex depths in canonical preorder).
/// Equal codes iff isomorphic trees.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CanonicalForm {
    pub code: Vec<u32>,
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.code.iter().map(u32::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Canonical level sequence of `tree` rooted at `root`: children are
/// ordered by decreasing code.
pub fn rooted_code(tree: &Tree, root: usize) -> Vec<u32> {
    let (order, parent) = tree.bfs(root);
    let mut depth = vec![0u32; tree.n()];
    for &v in &order {
        if let Some(p) = parent[v] {
            depth[v] = depth[p] + 1;
        }
    }
    let mut codes: Vec<Vec<u32>> = vec![Vec::new(); tree.n()];
    for &u in order.iter().rev() {
        let mut kids: Vec<Vec<u32>> = tree
            .neighbors(u)
            .iter()
            .filter(|&&w| parent[u] != Some(w))
            .map(|&w| std::mem::take(&mut codes[w]))
            .collect();
        kids.sort_unstable_by(|a, b| b.cmp(a));
        let mut code = Vec::with_capacity(1 + kids.iter().map(Vec::len).sum::<usize>());
        code.push(depth[u]);
        for k in kids {
            code.extend(k);
        }
        codes[u] = code;
    }
    std::mem::take(&mut codes[root])
}

/// The one or two vertices minimizing the largest component left by their removal.
pub fn centroids(tree: &Tree) -> Vec<usize> {
    let n = tree.n();
    let (order, parent) = tree.bfs(0);
    let mut size = vec![1usize; n];
    for &v in order.iter().rev() {
        if let Some(p) = parent[v] {
            size[p] += size[v];
        }
    }
    let heaviest: Vec<usize> = (0..n)
        .map(|v| {
            let below = tree
                .neighbors(v)
                .iter()
                .filter(|&&w| parent[v] != Some(w))
                .map(|&w| size[w]);
            below.chain(std::iter::once(n - size[v])).max().unwrap_or(0)
        })
        .collect();
    let best = *heaviest.iter().min().unwrap();
    (0..n).filter(|&v| heaviest[v] == best).collect()
}

pub fn canonical_form(tree: &Tree) -> CanonicalForm {
    let code = centroids(tree).into_iter().map(|c| rooted_code(tree, c)).min().unwrap();
    CanonicalForm { code }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TreeFilter {
    All,
    SeriesReduced,
}

/// Stream of free trees on `n` vertices, one per isomorphism class.
#[derive(Clone, Debug)]
pub struct FreeTrees {
    n: usize,
    levels: Vec<u32>,
    done: bool,
    filter: TreeFilter,
}

pub fn enumerate_trees(n: usize, filter: TreeFilter) -> Result<FreeTrees> {
    enumerate_trees_with_cap(n, filter, DEFAULT_CAP)
}

pub fn enumerate_trees_with_cap(n: usize, filter: TreeFilter, cap: usize) -> Result<FreeTrees> {
    if n == 0 {
        return Err(Error::Parameter("trees need at least one vertex".into()));
    }
    if n > cap {
        return Err(Error::Limit(format!("enumeration at n = {n} exceeds the cap of {cap}")));
    }
    Ok(FreeTrees {
        n,
        levels: (0..n as u32).collect(),
        done: false,
        filter,
    })
}

impl FreeTrees {
    /// Beyer–Hedetniemi successor; marks the stream done after the star.
    fn advance(&mut self) {
        let l = &mut self.levels;
        let Some(p) = (1..l.len()).rev().find(|&i| l[i] != 1) else {
            self.done = true;
            return;
        };
        let q = (0..p).rev().find(|&i| l[i] + 1 == l[p]).expect("parent level exists");
        for i in p..l.len() {
            l[i] = l[i - (p - q)];
        }
    }

    fn centroid_rooted(&self, levels: &[u32]) -> Option<Tree> {
        let n = self.n;
        let mut parents = vec![0usize; n];
        let mut stack: Vec<usize> = Vec::new();
        for (i, &d) in levels.iter().enumerate() {
            stack.truncate(d as usize);
            if let Some(&p) = stack.last() {
                parents[i] = p;
            }
            stack.push(i);
        }
        let mut heavy_child = None;
        let mut start = 1;
        while start < n {
            let end = (start + 1..n).find(|&i| levels[i] <= 1).unwrap_or(n);
            let size = end - start;
            if 2 * size > n {
                return None;
            }
            if 2 * size == n {
                heavy_child = Some(start);
            }
            start = end;
        }
        let tree = Tree::from_parents(&parents);
        if let Some(other) = heavy_child {
            if rooted_code(&tree, 0) > rooted_code(&tree, other) {
                return None;
            }
        }
        Some(tree)
    }
}

impl Iterator for FreeTrees {
    type Item = Tree;

    fn next(&mut self) -> Option<Tree> {
        while !self.done {
            let current = self.levels.clone();
            self.advance();
            if let Some(tree) = self.centroid_rooted(&current) {
                if self.filter == TreeFilter::All || tree.is_series_reduced() {
                    return Some(tree);
                }
            }
        }
        None
    }
}

/// Decodes a Prüfer sequence over `0..n` (length `n - 2`) into a labeled tree.
pub fn prufer_decode(seq: &[usize], n: usize) -> Result<Tree> {
    if n < 2 || seq.len() != n - 2 || seq.iter().any(|&x| x >= n) {
        return Err(Error::Parameter(format!("not a Prüfer sequence for n = {n}")));
    }
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut leaves: BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = leaves.pop_first().unwrap();
        edges.push((leaf, x));
        degree[x] -= 1;
        if degree[x] == 1 {
            leaves.insert(x);
        }
    }
    let a = leaves.pop_first().unwrap();
    let b = leaves.pop_first().unwrap();
    edges.push((a, b));
    Tree::from_edges(n, &edges)
}

/// Uniform random labeled tree on `n >= 1` vertices.
pub fn random_labeled_tree<R: Rng>(n: usize, rng: &mut R) -> Tree {
    if n <= 1 {
        return Tree::single_vertex();
    }
    let seq: Vec<usize> = (0..n.saturating_sub(2)).map(|_| rng.random_range(0..n)).collect();
    prufer_decode(&seq, n).expect("valid sequence")
}

/// Replaces every degree-two vertex and its two edges by a single edge,
/// keeping the remaining vertices in their original relative order.
pub fn suppress_degree_two(tree: &Tree) -> Tree {
    let n = tree.n();
    let mut adj: Vec<BTreeSet<usize>> = (0..n).map(|v| tree.neighbors(v).iter().copied().collect()).collect();
    let mut removed = vec![false; n];
    for v in 0..n {
        if adj[v].len() == 2 {
            let mut it = adj[v].iter().copied();
            let (a, b) = (it.next().unwrap(), it.next().unwrap());
            adj[a].remove(&v);
            adj[b].remove(&v);
            adj[a].insert(b);
            adj[b].insert(a);
            adj[v].clear();
            removed[v] = true;
        }
    }
    let kept: Vec<usize> = (0..n).filter(|&v| !removed[v]).collect();
    let mut index = vec![usize::MAX; n];
    for (i, &v) in kept.iter().enumerate() {
        index[v] = i;
    }
    let mut edges = Vec::new();
    for &u in &kept {
        for &w in &adj[u] {
            if u < w {
                edges.push((index[u], index[w]));
            }
        }
    }
    Tree::from_edges(kept.len(), &edges).expect("suppression preserves trees")
}

/// A series-reduced tree with at least `n_target` vertices, determined by `seed`.
///
/// A uniform labeled tree is drawn on `n_target` plus slack vertices and
/// its degree-two vertices are suppressed; the slack grows until the
/// reduced tree is large enough.
pub fn sample_series_reduced(n_target: usize, seed: u64) -> Result<Tree> {
    if n_target < 4 {
        return Err(Error::Parameter(format!("n_target must be at least 4, got {n_target}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // roughly a third of the vertices of a uniform tree have degree two
    let mut size = n_target + n_target / 2 + 2;
    for _ in 0..MAX_SAMPLE_RETRIES {
        let reduced = suppress_degree_two(&random_labeled_tree(size, &mut rng));
        if reduced.n() >= n_target && reduced.is_series_reduced() {
            return Ok(reduced);
        }
        if reduced.n() < n_target {
            size += (n_target - reduced.n()).max(1);
        }
    }
    Err(Error::Sampling(format!(
        "no series-reduced tree with at least {n_target} vertices after {MAX_SAMPLE_RETRIES} attempts"
    )))
}
