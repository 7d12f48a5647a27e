//! Runs the inequality checks over every tree up to a size bound and
//! prints the report table.

use subtree_density::enumeration::TreeFilter;
use subtree_density::verify::{check_stpoly, run_checks, CheckId, TreeSource};

fn main() -> subtree_density::Result<()> {
    let max_n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(12);
    let report = run_checks(
        &TreeSource::Enumerate {
            n: 4..=max_n,
            filter: TreeFilter::All,
        },
        &CheckId::ALL,
    )?;
    print!("{}", report.summary(5));
    println!("({:.2?})", report.wall_time);
    println!();
    print!("{}", check_stpoly(32)?.summary(5));
    Ok(())
}
