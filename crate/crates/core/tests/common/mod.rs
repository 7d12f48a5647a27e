//! Independent reference implementations used only by the tests.

#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use num_bigint::BigUint;
use rayon::prelude::*;

/// Adjacency lists from an edge list.
pub fn adjacency(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    adj
}

fn ahu(adj: &[Vec<usize>], v: usize, parent: usize) -> String {
    let mut kids: Vec<String> = adj[v]
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| ahu(adj, w, v))
        .collect();
    kids.sort();
    format!("({})", kids.concat())
}

fn subtree_sizes(adj: &[Vec<usize>], v: usize, parent: usize, size: &mut [usize]) -> usize {
    size[v] = 1 + adj[v]
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| subtree_sizes(adj, w, v, size))
        .sum::<usize>();
    size[v]
}

/// Parenthesis encoding rooted at the centroid (smaller string for two); isomorphic trees agree.
pub fn ahu_canonical(n: usize, edges: &[(usize, usize)]) -> String {
    let adj = adjacency(n, edges);
    let mut size = vec![0; n];
    subtree_sizes(&adj, 0, usize::MAX, &mut size);
    let heaviest = |v: usize| {
        adj[v]
            .iter()
            .map(|&w| if size[w] < size[v] { size[w] } else { n - size[v] })
            .max()
            .unwrap_or(0)
    };
    (0..n)
        .filter(|&v| 2 * heaviest(v) <= n)
        .map(|r| ahu(&adj, r, usize::MAX))
        .min()
        .expect("a centroid exists")
}

/// Same encoding minimized over every root; slow but free of centroid logic.
pub fn ahu_canonical_all_roots(n: usize, edges: &[(usize, usize)]) -> String {
    let adj = adjacency(n, edges);
    (0..n).map(|r| ahu(&adj, r, usize::MAX)).min().expect("nonempty tree")
}

/// Textbook Prüfer decoding by repeated smallest-leaf search.
pub fn prufer_edges(seq: &[usize], n: usize) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf exists");
        edges.push((leaf, x));
        degree[leaf] = 0;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// Isomorphism classes of all labeled trees on `n` vertices, found by decoding every Prüfer sequence.
pub fn prufer_classes(n: usize) -> BTreeSet<String> {
    prufer_classes_with(n, ahu_canonical)
}

pub fn prufer_classes_with(n: usize, encode: fn(usize, &[(usize, usize)]) -> String) -> BTreeSet<String> {
    if n <= 2 {
        let edges: Vec<(usize, usize)> = if n == 2 { vec![(0, 1)] } else { vec![] };
        return BTreeSet::from([encode(n, &edges)]);
    }
    let len = n - 2;
    let total = n.pow(len as u32);
    (0..total)
        .into_par_iter()
        .fold(BTreeSet::new, |mut set, mut index| {
            let mut seq = vec![0usize; len];
            for x in &mut seq {
                *x = index % n;
                index /= n;
            }
            set.insert(encode(n, &prufer_edges(&seq, n)));
            set
        })
        .reduce(BTreeSet::new, |mut a, b| {
            a.extend(b);
            a
        })
}

/// Free tree counts `t(0..=max)` from rooted counts via Otter's dissimilarity identity.
pub fn otter_counts(max: usize) -> Vec<u128> {
    let mut r = vec![0u128; max + 1];
    if max >= 1 {
        r[1] = 1;
    }
    for m in 2..=max {
        let mut acc = 0u128;
        for k in 1..m {
            let s: u128 = (1..=k).filter(|d| k % d == 0).map(|d| d as u128 * r[d]).sum();
            acc += s * r[m - k];
        }
        r[m] = acc / (m as u128 - 1);
    }
    let mut t = vec![0u128; max + 1];
    for m in 1..=max {
        let pairs: u128 = (1..m).map(|i| r[i] * r[m - i]).sum();
        let halves = if m % 2 == 0 { r[m / 2] } else { 0 };
        t[m] = r[m] - (pairs - halves) / 2;
    }
    t
}

fn connected(adj: &[Vec<usize>], mask: u32) -> bool {
    let start = mask.trailing_zeros() as usize;
    let mut seen = 1u32 << start;
    let mut queue = VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        for &w in &adj[u] {
            if mask & (1 << w) != 0 && seen & (1 << w) == 0 {
                seen |= 1 << w;
                queue.push_back(w);
            }
        }
    }
    seen == mask
}

/// Connected vertex subsets as bit masks, by filtering all `2^n - 1` nonempty subsets.
pub fn subset_subtrees(n: usize, edges: &[(usize, usize)]) -> Vec<u32> {
    assert!(n <= 20, "subset filter is exponential");
    let adj = adjacency(n, edges);
    (1u32..(1 << n)).filter(|&m| connected(&adj, m)).collect()
}

/// `(|S|, Σ|S|, α per vertex)` from subset filtering.
pub fn subset_tallies(n: usize, edges: &[(usize, usize)]) -> (BigUint, BigUint, Vec<BigUint>) {
    let subs = subset_subtrees(n, edges);
    let total = BigUint::from(subs.len());
    let order: u64 = subs.iter().map(|m| m.count_ones() as u64).sum();
    let alpha = (0..n)
        .map(|v| BigUint::from(subs.iter().filter(|&&m| m & (1 << v) != 0).count()))
        .collect();
    (total, BigUint::from(order), alpha)
}
