//! Density along parameter sweeps of the named families, as CSV.
//!
//! ```text
//! cargo run --example family_sweep -- starfish k=3 r=1..60
//! cargo run --example family_sweep -- starfish k=3 k,r=3..30
//! ```

use subtree_density::families::{density_sweep, write_sweep_csv, FamilySpec, Sweep};

fn main() -> subtree_density::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (name, params, sweep) = match args.as_slice() {
        [name, params, sweep] => (name.as_str(), params.as_str(), sweep.as_str()),
        _ => ("star", "m=1", "m=1..40"),
    };
    let base = FamilySpec::parse(name, params)?;
    let points = density_sweep(&base, &Sweep::parse(sweep)?)?;
    write_sweep_csv(&points, 10, std::io::stdout().lock())?;
    Ok(())
}
