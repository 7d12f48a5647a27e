//! Compares the dynamic program against brute-force subtree enumeration
//! on every free tree up to a size bound (default 10).

use std::time::Instant;

use subtree_density::dp::{all_vertex_views, global_stats};
use subtree_density::enumeration::{enumerate_trees, TreeFilter};
use subtree_density::oracle::{enumerate_subtrees, oracle_stats, oracle_vertex_views};

fn main() -> subtree_density::Result<()> {
    let max_n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(10);
    let start = Instant::now();
    for n in 1..=max_n {
        let mut classes = 0;
        let mut subtrees = 0;
        for tree in enumerate_trees(n, TreeFilter::All)? {
            assert_eq!(oracle_stats(&tree)?, global_stats(&tree));
            assert_eq!(oracle_vertex_views(&tree)?, all_vertex_views(&tree));
            subtrees += enumerate_subtrees(&tree)?.len();
            classes += 1;
        }
        println!("n = {n:>2}: {classes:>4} trees, {subtrees:>7} subtrees listed, all agree");
    }
    println!("done in {:.2?}", start.elapsed());
    Ok(())
}
