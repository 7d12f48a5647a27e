//! The rank coefficients c_j with their bracketing bounds, and the two
//! lower bounds on the containing-subtree mean for a few brooms.

use num_bigint::BigInt;
use num_traits::One;
use subtree_density::dp::vertex_view;
use subtree_density::families::{make_family, FamilySpec};
use subtree_density::numeric::{decimal, fraction, int, ratio_int, Ratio};
use subtree_density::ranks::{c_sequence, rank_lower_bound, simple_lower_bound};

fn main() -> subtree_density::Result<()> {
    let table = c_sequence(12)?;
    println!(
        "{:>2}  {:>22}  {:>16}  {:>16}  {:>16}",
        "j", "c_j", "lower", "value", "upper"
    );
    for (j, c) in table.c.iter().enumerate() {
        let denom = Ratio::from_integer(BigInt::one() << (j + 1)) + int(j as u64);
        let lower = int(1) - (int(1) + ratio_int(3 * j as i64, 2)) / &denom;
        let upper = int(1) - (int(1) + int(j as u64)) / &denom;
        println!(
            "{j:>2}  {:>22}  {:>16}  {:>16}  {:>16}",
            fraction(c),
            decimal(&lower, 12),
            decimal(c, 12),
            decimal(&upper, 12)
        );
    }
    println!();
    for (m, k) in [(2, 0), (1, 1), (0, 2), (3, 3)] {
        let tree = make_family(&FamilySpec::Broom { m, k })?;
        let lambda = vertex_view(&tree, 0)?.lambda;
        println!(
            "broom({m},{k}): mean {}  simple bound {}  rank bound {}",
            fraction(&lambda),
            fraction(&simple_lower_bound(&tree, 0).value),
            fraction(&rank_lower_bound(&tree, 0).value)
        );
    }
    Ok(())
}
