//! Exact subtree statistics for every tree in a file.
//!
//! ```text
//! cargo run --example subtree_stats -- crates/core/examples/data/small.trees
//! ```

use subtree_density::dp::{all_vertex_views, edge_counts, global_stats};
use subtree_density::numeric::{decimal, fraction};
use subtree_density::Tree;

fn main() -> subtree_density::Result<()> {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path)?,
        None => include_str!("data/small.trees").to_string(),
    };
    for tree in Tree::parse_stream(&text)? {
        let s = global_stats(&tree);
        println!("tree with n = {}, {} leaves", s.n, s.leaf_count);
        println!("  subtrees      {}", s.total_count);
        println!("  order sum     {}", s.order_sum);
        println!("  mean order    {} = {}", fraction(&s.mu), decimal(&s.mu, 8));
        println!("  density       {} = {}", fraction(&s.density), decimal(&s.density, 8));
        if let Some(mp) = &s.mu_prime {
            println!("  mean order'   {}", fraction(mp));
        }
        for view in all_vertex_views(&tree) {
            let bar = view.lambda_bar.as_ref().map_or("-".to_string(), fraction);
            println!(
                "  vertex {:>2}: containing {:>4} (mean {}), avoiding {:>4} (mean {})",
                view.vertex,
                view.alpha,
                fraction(&view.lambda),
                view.alpha_bar,
                bar
            );
        }
        for &e in tree.edges() {
            let c = edge_counts(&tree, e)?;
            println!("  edge {:?}: {} subtrees use it", e, c.alpha);
        }
        println!();
    }
    Ok(())
}
