//! Subtree counting by rooted dynamic programming and rerooting.
//!
//! For a vertex `u` of a rooted tree, `down_count[u]` is the number of
//! subtrees of the part below `u` that contain `u`, and `down_sum[u]` the
//! total order of those subtrees. Each child `c` contributes a factor
//! `(down_count[c] + 1, down_sum[c])`; factors combine as
//! `(p1, s1) * (p2, s2) = (p1 p2, s1 p2 + s2 p1)`, and a product `(p, s)`
//! over all children yields `down_count = p`, `down_sum = p + s`.
//! Rerooting uses prefix and suffix products of these factors, so no
//! big-integer division is ever needed.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numeric::{count_to_ratio, ratio, serde_exact, Count, Ratio};
use crate::tree::Tree;

/// Subtrees of one component that contain its attachment vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Agg {
    count: Count,
    sum: Count,
}

#[derive(Clone, Debug)]
struct Factor {
    p: Count,
    s: Count,
}

impl Factor {
    fn identity() -> Factor {
        Factor {
            p: Count::one(),
            s: Count::zero(),
        }
    }

    fn of(agg: &Agg) -> Factor {
        Factor {
            p: &agg.count + 1u32,
            s: agg.sum.clone(),
        }
    }

    fn mul(&self, other: &Factor) -> Factor {
        Factor {
            p: &self.p * &other.p,
            s: &self.s * &other.p + &other.s * &self.p,
        }
    }

    fn close(self) -> Agg {
        let sum = &self.p + self.s;
        Agg { count: self.p, sum }
    }
}

/// Down-pass results for a tree rooted at `root`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedCounts {
    pub root: usize,
    pub down_count: Vec<Count>,
    pub down_sum: Vec<Count>,
    /// `α(T, root)`
    pub alpha_root: Count,
    /// `ᾱ(T, root)`
    pub alpha_bar_root: Count,
    pub parent: Vec<Option<usize>>,
    /// Breadth-first order from the root.
    pub order: Vec<usize>,
}

impl RootedCounts {
    /// Total number of subtrees: each is counted once at its vertex nearest the root.
    pub fn total_count(&self) -> Count {
        self.down_count.iter().sum()
    }

    /// Total order of all subtrees.
    pub fn order_sum(&self) -> Count {
        self.down_sum.iter().sum()
    }

    pub fn children(&self, tree: &Tree, u: usize) -> Vec<usize> {
        tree.neighbors(u)
            .iter()
            .copied()
            .filter(|&w| self.parent[u] != Some(w))
            .collect()
    }
}

pub fn rooted_counts(tree: &Tree, root: usize) -> RootedCounts {
    let n = tree.n();
    assert!(root < n, "root {root} out of range for a {n}-vertex tree");
    let (order, parent) = tree.bfs(root);
    let mut down: Vec<Option<Agg>> = vec![None; n];
    for &u in order.iter().rev() {
        let mut acc = Factor::identity();
        for &c in tree.neighbors(u) {
            if parent[u] != Some(c) {
                acc = acc.mul(&Factor::of(down[c].as_ref().unwrap()));
            }
        }
        down[u] = Some(acc.close());
    }
    let (down_count, down_sum): (Vec<Count>, Vec<Count>) = down
        .into_iter()
        .map(|a| {
            let a = a.unwrap();
            (a.count, a.sum)
        })
        .unzip();
    let alpha_root = down_count[root].clone();
    let alpha_bar_root = down_count
        .iter()
        .enumerate()
        .filter(|&(v, _)| v != root)
        .map(|(_, c)| c)
        .sum();
    RootedCounts {
        root,
        down_count,
        down_sum,
        alpha_root,
        alpha_bar_root,
        parent,
        order,
    }
}

/// For every vertex, the number and total order of subtrees containing it.
fn reroot(tree: &Tree) -> Vec<Agg> {
    let n = tree.n();
    let rooted = rooted_counts(tree, 0);
    let down: Vec<Agg> = rooted
        .down_count
        .iter()
        .zip(&rooted.down_sum)
        .map(|(c, s)| Agg {
            count: c.clone(),
            sum: s.clone(),
        })
        .collect();
    // up[c]: subtrees of the component containing parent(c), after removing
    // the edge to c, that contain parent(c).
    let mut up: Vec<Option<Agg>> = vec![None; n];
    let mut full: Vec<Option<Agg>> = vec![None; n];
    for &u in &rooted.order {
        let mut factors = Vec::with_capacity(tree.degree(u));
        let mut owners = Vec::with_capacity(tree.degree(u));
        for &w in tree.neighbors(u) {
            if rooted.parent[u] == Some(w) {
                factors.push(Factor::of(up[u].as_ref().unwrap()));
                owners.push(None);
            } else {
                factors.push(Factor::of(&down[w]));
                owners.push(Some(w));
            }
        }
        let k = factors.len();
        let mut suffix = vec![Factor::identity(); k + 1];
        for i in (0..k).rev() {
            suffix[i] = factors[i].mul(&suffix[i + 1]);
        }
        let mut prefix = Factor::identity();
        for i in 0..k {
            if let Some(child) = owners[i] {
                up[child] = Some(prefix.mul(&suffix[i + 1]).close());
            }
            prefix = prefix.mul(&factors[i]);
        }
        full[u] = Some(prefix.close());
    }
    full.into_iter().map(Option::unwrap).collect()
}

/// `α(T, v)` for every vertex `v`, by one down pass and one up pass.
pub fn all_containment_counts(tree: &Tree) -> Vec<Count> {
    reroot(tree).into_iter().map(|a| a.count).collect()
}

/// Global subtree aggregates of one tree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubtreeStats {
    pub n: usize,
    pub leaf_count: usize,
    /// `|S(T)|`
    #[serde(rename = "N", with = "serde_exact::count")]
    pub total_count: Count,
    #[serde(with = "serde_exact::count")]
    pub order_sum: Count,
    /// `α(T, v)` per vertex.
    #[serde(with = "serde_exact::counts")]
    pub containment: Vec<Count>,
    #[serde(with = "serde_exact::ratio")]
    pub mu: Ratio,
    #[serde(with = "serde_exact::ratio")]
    pub density: Ratio,
    /// Average order over `S′(T)`: subtrees minus leaf singletons, plus the empty set.
    /// Defined for `n >= 2`.
    #[serde(with = "serde_exact::opt_ratio")]
    pub mu_prime: Option<Ratio>,
    #[serde(with = "serde_exact::opt_count")]
    pub s_prime_count: Option<Count>,
    #[serde(with = "serde_exact::opt_count")]
    pub s_prime_order_sum: Option<Count>,
}

impl SubtreeStats {
    /// Assembles the derived fields from the raw tallies.
    pub fn from_tallies(tree: &Tree, total_count: Count, containment: Vec<Count>) -> SubtreeStats {
        let n = tree.n();
        let order_sum: Count = containment.iter().sum();
        let mu = ratio(&order_sum, &total_count);
        let density = &mu / count_to_ratio(&Count::from(n));
        let leaf_count = tree.leaf_count();
        let (mu_prime, s_prime_count, s_prime_order_sum) = if n >= 2 {
            let l = Count::from(leaf_count);
            let count = &total_count - &l + 1u32;
            let sum = &order_sum - &l;
            (Some(ratio(&sum, &count)), Some(count), Some(sum))
        } else {
            (None, None, None)
        };
        SubtreeStats {
            n,
            leaf_count,
            total_count,
            order_sum,
            containment,
            mu,
            density,
            mu_prime,
            s_prime_count,
            s_prime_order_sum,
        }
    }
}

pub fn global_stats(tree: &Tree) -> SubtreeStats {
    let total = rooted_counts(tree, 0).total_count();
    SubtreeStats::from_tallies(tree, total, all_containment_counts(tree))
}

/// Subtrees containing / not containing one vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexSubtreeView {
    pub vertex: usize,
    #[serde(with = "serde_exact::count")]
    pub alpha: Count,
    #[serde(with = "serde_exact::count")]
    pub alpha_bar: Count,
    #[serde(with = "serde_exact::ratio")]
    pub lambda: Ratio,
    /// `None` when every subtree contains the vertex.
    #[serde(with = "serde_exact::opt_ratio")]
    pub lambda_bar: Option<Ratio>,
}

fn make_view(vertex: usize, alpha: Count, sum: &Count, total: &Count, order_sum: &Count) -> VertexSubtreeView {
    let alpha_bar = total - &alpha;
    let lambda = ratio(sum, &alpha);
    let lambda_bar = (!alpha_bar.is_zero()).then(|| ratio(&(order_sum - sum), &alpha_bar));
    VertexSubtreeView {
        vertex,
        alpha,
        alpha_bar,
        lambda,
        lambda_bar,
    }
}

pub fn vertex_view(tree: &Tree, v: usize) -> Result<VertexSubtreeView> {
    if v >= tree.n() {
        return Err(Error::Parameter(format!("vertex {v} out of range (n = {})", tree.n())));
    }
    let rc = rooted_counts(tree, v);
    let (total, order_sum) = (rc.total_count(), rc.order_sum());
    Ok(make_view(
        v,
        rc.down_count[v].clone(),
        &rc.down_sum[v],
        &total,
        &order_sum,
    ))
}

/// Views for every vertex from a single rerooting pass.
pub fn all_vertex_views(tree: &Tree) -> Vec<VertexSubtreeView> {
    let aggs = reroot(tree);
    let rc = rooted_counts(tree, 0);
    let (total, order_sum) = (rc.total_count(), rc.order_sum());
    aggs.into_iter()
        .enumerate()
        .map(|(v, a)| make_view(v, a.count, &a.sum, &total, &order_sum))
        .collect()
}

/// Subtrees containing / not containing both endpoints of an edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeCounts {
    pub alpha: Count,
    pub alpha_bar: Count,
}

/// `α(T, e) = α(T1, u) α(T2, v)` and `ᾱ(T, e) = ᾱ(T1, u) + ᾱ(T2, v) + α(T1, u) + α(T2, v)`,
/// where `T1`, `T2` are the components of `T - e`.
pub fn edge_counts(tree: &Tree, edge: (usize, usize)) -> Result<EdgeCounts> {
    let (u, v) = edge;
    if !tree.has_edge(u, v) {
        return Err(Error::Parameter(format!("{u} {v} is not an edge of the tree")));
    }
    let side = |near: usize, far: usize| {
        // rooted at `far`, the part below `near` is the component of T - e holding `near`
        let rc = rooted_counts(tree, far);
        let mut below = vec![Count::zero(); tree.n()];
        for &w in rc.order.iter().rev() {
            below[w] += &rc.down_count[w];
            if let Some(p) = rc.parent[w] {
                let add = below[w].clone();
                below[p] += add;
            }
        }
        let alpha = rc.down_count[near].clone();
        let alpha_bar = &below[near] - &alpha;
        (alpha, alpha_bar)
    };
    let (a1, b1) = side(u, v);
    let (a2, b2) = side(v, u);
    Ok(EdgeCounts {
        alpha: &a1 * &a2,
        alpha_bar: b1 + b2 + a1 + a2,
    })
}

/// Smallest internal vertex `v` with `2 α(T, v) >= n ᾱ(T, v)`; failing
/// that, an internal endpoint of the first edge `e` with
/// `2 α(T, e) >= n ᾱ(T, e)`.
pub fn good_anchor(tree: &Tree) -> Option<usize> {
    let n = Count::from(tree.n());
    let alpha = all_containment_counts(tree);
    let total = rooted_counts(tree, 0).total_count();
    let internal = |v: usize| tree.degree(v) >= 2;
    for v in (0..tree.n()).filter(|&v| internal(v)) {
        let bar = &total - &alpha[v];
        if &alpha[v] * 2u32 >= &n * bar {
            return Some(v);
        }
    }
    for &(u, v) in tree.edges() {
        let e = edge_counts(tree, (u, v)).expect("edge of the tree");
        if e.alpha * 2u32 >= &n * e.alpha_bar {
            if let Some(w) = [u, v].into_iter().find(|&w| internal(w)) {
                return Some(w);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::ratio_int;
    use crate::tree::tests::{path, star};

    fn c(x: u64) -> Count {
        Count::from(x)
    }

    #[test]
    fn rooted_small_cases() {
        let rc = rooted_counts(&Tree::single_vertex(), 0);
        assert_eq!((rc.alpha_root, rc.alpha_bar_root), (c(1), c(0)));

        let rc = rooted_counts(&star(3), 0);
        assert_eq!((rc.alpha_root.clone(), rc.alpha_bar_root.clone()), (c(8), c(3)));
        assert_eq!(rc.down_count[0], c(8));

        let rc = rooted_counts(&path(4), 0);
        assert_eq!((rc.alpha_root, rc.alpha_bar_root), (c(4), c(6)));
    }

    #[test]
    fn rooted_invariants() {
        let t = Tree::parse("7\n0 1\n0 2\n1 3\n1 4\n2 5\n2 6").unwrap();
        let rc = rooted_counts(&t, 0);
        for u in 0..t.n() {
            let prod: Count = rc.children(&t, u).iter().map(|&ch| &rc.down_count[ch] + 1u32).product();
            assert_eq!(rc.down_count[u], prod);
            assert!(rc.down_sum[u] >= rc.down_count[u]);
        }
        assert_eq!(&rc.alpha_root + &rc.alpha_bar_root, rc.total_count());
    }

    #[test]
    fn containment_counts() {
        assert_eq!(all_containment_counts(&path(3)), vec![c(3), c(4), c(3)]);
        assert_eq!(all_containment_counts(&star(3)), vec![c(8), c(5), c(5), c(5)]);
        assert_eq!(all_containment_counts(&Tree::single_vertex()), vec![c(1)]);
    }

    #[test]
    fn global_stats_examples() {
        assert_eq!(global_stats(&path(10)).mu, ratio_int(4, 1));

        let s = global_stats(&path(4));
        assert_eq!(s.mu, ratio_int(2, 1));
        assert_eq!(s.mu_prime, Some(ratio_int(2, 1)));

        let s = global_stats(&star(3));
        assert_eq!(s.total_count, c(11));
        assert_eq!(s.order_sum, c(23));
        assert_eq!(s.mu, ratio_int(23, 11));
        assert_eq!(s.density, ratio_int(23, 44));
        assert_eq!(s.mu_prime, Some(ratio_int(20, 9)));
        assert_eq!(s.s_prime_count, Some(c(9)));
        assert_eq!(s.s_prime_order_sum, Some(c(20)));

        let s = global_stats(&Tree::single_vertex());
        assert_eq!(
            (s.total_count, s.mu.clone(), s.density),
            (c(1), ratio_int(1, 1), ratio_int(1, 1))
        );
        assert_eq!(s.mu_prime, None);
    }

    #[test]
    fn vertex_views() {
        let v = vertex_view(&star(3), 0).unwrap();
        assert_eq!((v.alpha, v.lambda), (c(8), ratio_int(5, 2)));
        let v = vertex_view(&path(4), 1).unwrap();
        assert_eq!((v.alpha, v.lambda), (c(6), ratio_int(5, 2)));
        let v = vertex_view(&Tree::single_vertex(), 0).unwrap();
        assert_eq!((v.alpha, v.lambda, v.lambda_bar), (c(1), ratio_int(1, 1), None));
        assert!(vertex_view(&path(3), 3).is_err());
    }

    #[test]
    fn rerooted_views_match_single_root_views() {
        let t = Tree::parse("9\n0 1\n1 2\n1 3\n3 4\n3 5\n0 6\n6 7\n6 8").unwrap();
        let all = all_vertex_views(&t);
        for (v, view) in all.iter().enumerate() {
            assert_eq!(*view, vertex_view(&t, v).unwrap());
        }
    }

    #[test]
    fn edge_count_examples() {
        assert_eq!(
            edge_counts(&path(2), (0, 1)).unwrap(),
            EdgeCounts {
                alpha: c(1),
                alpha_bar: c(2)
            }
        );
        assert_eq!(
            edge_counts(&path(4), (1, 2)).unwrap(),
            EdgeCounts {
                alpha: c(4),
                alpha_bar: c(6)
            }
        );
        for leaf in 1..=3 {
            assert_eq!(
                edge_counts(&star(3), (0, leaf)).unwrap(),
                EdgeCounts {
                    alpha: c(4),
                    alpha_bar: c(7)
                }
            );
        }
        assert!(edge_counts(&path(4), (0, 2)).is_err());
    }

    #[test]
    fn anchors() {
        assert_eq!(good_anchor(&star(3)), Some(0));
        assert_eq!(good_anchor(&path(4)), None);
        assert_eq!(good_anchor(&Tree::single_vertex()), None);
    }

    #[test]
    fn stats_json_shape() {
        let s = global_stats(&star(3));
        let json = serde_json::to_value(&s).unwrap();
        assert_eq!(json["N"], "11");
        assert_eq!(json["mu"]["num"], "23");
        assert_eq!(json["mu"]["den"], "11");
        assert_eq!(json["containment"][0], "8");
        let back: SubtreeStats = serde_json::from_value(json).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn double_star_sits_on_the_lower_density_bound() {
        // centers 0 and 1, two leaves each: 4 leaf singletons, 4 + 4 one-center subtrees, 16 with both
        let t = Tree::from_edges(6, &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]).unwrap();
        assert!(t.is_series_reduced());
        let s = global_stats(&t);
        assert_eq!(s.total_count, c(28));
        assert_eq!(s.order_sum, c(84));
        assert_eq!(s.mu, ratio_int(3, 1));
        assert_eq!(s.density, ratio_int(1, 2));
    }
}
