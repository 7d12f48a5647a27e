//! Validated trees, the plain-text tree format, and vertex classification.
//!
//! File format: the first non-comment line holds `n`, each of the next
//! `n - 1` non-comment lines holds an edge `u v` with `0 <= u, v < n`.
//! `#` starts a comment, blank lines are ignored, and multi-tree streams
//! separate trees by a line containing only `---`.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

/// An undirected tree on vertices `0..n`.
///
/// Edges are stored as `(u, v)` with `u < v`, sorted lexicographically;
/// neighbor lists are sorted ascending.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tree {
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl fmt::Debug for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tree(n={}, edges={:?})", self.n(), self.edges)
    }
}

impl Tree {
    pub fn single_vertex() -> Tree {
        Tree {
            edges: Vec::new(),
            adj: vec![Vec::new()],
        }
    }

    /// Validates and builds a tree from an edge list.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Tree> {
        if n == 0 {
            return Err(Error::Validation("a tree needs at least one vertex".into()));
        }
        if edges.len() != n - 1 {
            return Err(Error::Validation(format!(
                "edge count ≠ n−1 (n = {n}, expected {} edges, found {})",
                n - 1,
                edges.len()
            )));
        }
        let mut seen = BTreeSet::new();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Validation(format!(
                    "vertex out of range in edge {u} {v} (n = {n})"
                )));
            }
            if u == v {
                return Err(Error::Validation(format!("self-loop at vertex {u}")));
            }
            let e = (u.min(v), u.max(v));
            if !seen.insert(e) {
                return Err(Error::Validation(format!("duplicate edge {} {}", e.0, e.1)));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let tree = Tree {
            edges: seen.into_iter().collect(),
            adj,
        };
        let (order, _) = tree.bfs(0);
        if order.len() != n {
            return Err(Error::Validation(format!(
                "graph is disconnected ({} of {n} vertices reachable from 0)",
                order.len()
            )));
        }
        Ok(tree)
    }

    /// Builds a tree from a parent array; `parents[0]` is ignored and every
    /// other entry must point to a smaller index.
    pub(crate) fn from_parents(parents: &[usize]) -> Tree {
        let edges: Vec<_> = parents.iter().enumerate().skip(1).map(|(v, &p)| (p, v)).collect();
        Tree::from_edges(parents.len(), &edges).expect("parent array describes a tree")
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Degree-one vertex. The single vertex of the one-vertex tree is not a leaf here.
    pub fn is_leaf(&self, v: usize) -> bool {
        self.degree(v) == 1
    }

    pub fn leaves(&self) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.is_leaf(v)).collect()
    }

    pub fn leaf_count(&self) -> usize {
        (0..self.n()).filter(|&v| self.is_leaf(v)).count()
    }

    pub fn internal_vertices(&self) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.degree(v) >= 2).collect()
    }

    /// Breadth-first order from `root` with each vertex's parent.
    pub fn bfs(&self, root: usize) -> (Vec<usize>, Vec<Option<usize>>) {
        let n = self.n();
        let mut parent = vec![None; n];
        let mut visited = vec![false; n];
        let mut order = Vec::with_capacity(n);
        let mut queue = VecDeque::from([root]);
        visited[root] = true;
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &w in &self.adj[u] {
                if !visited[w] {
                    visited[w] = true;
                    parent[w] = Some(u);
                    queue.push_back(w);
                }
            }
        }
        (order, parent)
    }

    /// Applies `perm` (old label -> new label) to every vertex.
    pub fn relabel(&self, perm: &[usize]) -> Result<Tree> {
        let n = self.n();
        let mut check = perm.to_vec();
        check.sort_unstable();
        if check != (0..n).collect::<Vec<_>>() {
            return Err(Error::Validation("relabeling is not a permutation of 0..n".into()));
        }
        let edges: Vec<_> = self.edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        Tree::from_edges(n, &edges)
    }

    /// Parses a single tree in the text format.
    pub fn parse(text: &str) -> Result<Tree> {
        parse_lines(text.lines().enumerate().map(|(i, l)| (i + 1, l)))
    }

    /// Parses a `---`-separated stream of trees.
    pub fn parse_stream(text: &str) -> Result<Vec<Tree>> {
        let mut trees = Vec::new();
        let mut block = Vec::new();
        for (i, line) in text.lines().enumerate() {
            if strip_comment(line).trim() == "---" {
                trees.push(parse_lines(block.drain(..))?);
            } else {
                block.push((i + 1, line));
            }
        }
        if block.iter().any(|(_, l)| !strip_comment(l).trim().is_empty()) || trees.is_empty() {
            trees.push(parse_lines(block.into_iter())?);
        }
        Ok(trees)
    }

    /// Canonical serialization: `n`, then edges sorted lexicographically.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.n());
        for &(u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// Leaves, internal vertices, twigs and the leaf split by twig adjacency.
    pub fn classify_vertices(&self) -> Result<VertexClassification> {
        let n = self.n();
        if n == 1 {
            return Err(Error::Undefined("classification undefined for single vertex".into()));
        }
        let leaves: BTreeSet<usize> = (0..n).filter(|&v| self.is_leaf(v)).collect();
        let internal: BTreeSet<usize> = (0..n).filter(|v| !leaves.contains(v)).collect();
        let mut twigs = BTreeSet::new();
        let mut per_twig_leaf_count = BTreeMap::new();
        for &v in &internal {
            let a = self.adj[v].iter().filter(|w| leaves.contains(w)).count();
            if a + 1 >= self.degree(v) {
                twigs.insert(v);
                per_twig_leaf_count.insert(v, a);
            }
        }
        let (adjacent, not_adjacent) = leaves
            .iter()
            .partition(|&&leaf| self.adj[leaf].iter().any(|w| twigs.contains(w)));
        Ok(VertexClassification {
            leaves,
            internal,
            twigs,
            leaves_adjacent_to_twig: adjacent,
            leaves_not_adjacent_to_twig: not_adjacent,
            per_twig_leaf_count,
        })
    }

    /// At least one internal vertex and every internal vertex of degree at least three.
    pub fn is_series_reduced(&self) -> bool {
        let mut any_internal = false;
        for v in 0..self.n() {
            match self.degree(v) {
                0 | 1 => {}
                2 => return false,
                _ => any_internal = true,
            }
        }
        any_internal
    }

    /// The tree induced on the internal vertices, and for each of its
    /// vertices the original label.
    pub fn leaf_deleted(&self) -> Result<(Tree, Vec<usize>)> {
        if self.n() <= 2 {
            return Err(Error::Undefined(format!(
                "deleting the leaves of a {}-vertex tree leaves no vertices",
                self.n()
            )));
        }
        let kept: Vec<usize> = (0..self.n()).filter(|&v| self.degree(v) >= 2).collect();
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in kept.iter().enumerate() {
            index[v] = i;
        }
        let edges: Vec<_> = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u], index[v]))
            .collect();
        Ok((Tree::from_edges(kept.len(), &edges)?, kept))
    }

    /// Longest path length in edges, by two breadth-first sweeps.
    pub fn diameter(&self) -> usize {
        let far = |from: usize| {
            let (order, parent) = self.bfs(from);
            let mut depth = vec![0usize; self.n()];
            for &v in &order {
                if let Some(p) = parent[v] {
                    depth[v] = depth[p] + 1;
                }
            }
            let last = *order.last().unwrap();
            (last, depth[last])
        };
        let (end, _) = far(0);
        far(end).1
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl std::str::FromStr for Tree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Tree> {
        Tree::parse(s)
    }
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("")
}

fn parse_lines<'a>(lines: impl Iterator<Item = (usize, &'a str)>) -> Result<Tree> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    let mut last_line = 0;
    for (number, raw) in lines {
        last_line = number;
        let line = strip_comment(raw).trim();
        if line.is_empty() {
            continue;
        }
        let parse_vertex = |tok: &str| {
            tok.parse::<usize>().map_err(|_| Error::Parse {
                line: number,
                message: format!("expected a nonnegative integer, found `{tok}`"),
            })
        };
        match n {
            None => {
                let value = parse_vertex(line)?;
                n = Some(value);
            }
            Some(_) => {
                let tokens: Vec<&str> = line.split_whitespace().collect();
                if tokens.len() != 2 {
                    return Err(Error::Parse {
                        line: number,
                        message: format!("expected `u v`, found `{line}`"),
                    });
                }
                edges.push((parse_vertex(tokens[0])?, parse_vertex(tokens[1])?));
            }
        }
    }
    let n = n.ok_or(Error::Parse {
        line: last_line.max(1),
        message: "missing vertex count".into(),
    })?;
    Tree::from_edges(n, &edges)
}

/// Partition of the vertices of a tree with at least two vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexClassification {
    pub leaves: BTreeSet<usize>,
    pub internal: BTreeSet<usize>,
    pub twigs: BTreeSet<usize>,
    pub leaves_adjacent_to_twig: BTreeSet<usize>,
    pub leaves_not_adjacent_to_twig: BTreeSet<usize>,
    /// Number of adjacent leaves for each twig.
    pub per_twig_leaf_count: BTreeMap<usize, usize>,
}

impl VertexClassification {
    pub fn leaf_count(&self) -> usize {
        self.leaves.len()
    }

    pub fn twig_count(&self) -> usize {
        self.twigs.len()
    }
}
