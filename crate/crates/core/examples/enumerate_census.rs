//! Counts free trees and series-reduced trees by size, with the density
//! range seen among the series-reduced ones.

use subtree_density::dp::global_stats;
use subtree_density::enumeration::{canonical_form, enumerate_trees, TreeFilter};
use subtree_density::numeric::{decimal, fraction};

fn main() -> subtree_density::Result<()> {
    let max_n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(14);
    println!(
        "{:>3} {:>8} {:>6}  {:>14} {:>14}  sparsest",
        "n", "trees", "s-r", "min D", "max D"
    );
    for n in 1..=max_n {
        let all = enumerate_trees(n, TreeFilter::All)?.count();
        let mut reduced = 0;
        let mut extremes = None;
        for tree in enumerate_trees(n, TreeFilter::SeriesReduced)? {
            reduced += 1;
            let d = global_stats(&tree).density;
            extremes = Some(match extremes {
                None => (d.clone(), d, tree),
                Some((lo, hi, arg)) => {
                    if d < lo {
                        (d, hi, tree)
                    } else if d > hi {
                        (lo, d, arg)
                    } else {
                        (lo, hi, arg)
                    }
                }
            });
        }
        match extremes {
            Some((lo, hi, arg)) => println!(
                "{n:>3} {all:>8} {reduced:>6}  {:>14} {:>14}  [{}] D = {}",
                decimal(&lo, 10),
                decimal(&hi, 10),
                canonical_form(&arg),
                fraction(&lo)
            ),
            None => println!("{n:>3} {all:>8} {reduced:>6}"),
        }
    }
    Ok(())
}
