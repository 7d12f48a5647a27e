//! Exact subtree statistics for trees.
//!
//! Every quantity here (subtree counts, mean subtree order `μ`, average
//! subtree density `D = μ/n`, the rooted averages `λ`, the rank
//! coefficients `c_j`) is computed with arbitrary-precision integers and
//! reduced rationals. No floating point appears in any result; decimal
//! renderings are derived from the exact values for display only.
//!
//! The crate is organised by capability:
//!
//! - [`tree`]: validated trees, the text file format, vertex classes.
//! - [`dp`]: rooted and rerooted dynamic programs for `α`, `λ`, `μ`, `μ′`.
//! - [`oracle`]: brute-force enumeration of all subtrees of small trees.
//! - [`families`]: paths, stars, star chains, brooms, leafy paths, starfish.
//! - [`enumeration`]: free trees up to isomorphism and random series-reduced trees.
//! - [`ranks`]: rank profiles, the `c_j` sequence and lower bounds on `λ`.
//! - [`verify`]: a harness that checks the density inequalities over tree streams.
//! - [`cli`]: the `subtree-density` command line.

pub mod cli;
pub mod dp;
pub mod enumeration;
mod error;
pub mod families;
pub mod numeric;
pub mod oracle;
pub mod ranks;
pub mod tree;
pub mod verify;

pub use dp::{
    all_containment_counts, edge_counts, global_stats, good_anchor, rooted_counts, vertex_view, RootedCounts,
    SubtreeStats, VertexSubtreeView,
};
pub use enumeration::{canonical_form, enumerate_trees, sample_series_reduced, CanonicalForm, TreeFilter};
pub use error::{Error, Result};
pub use families::{density_sweep, make_family, DensitySequencePoint, FamilySpec, Sweep};
pub use numeric::{Count, Ratio};
pub use oracle::{enumerate_subtrees, oracle_stats, SubtreeSet};
pub use ranks::{c_sequence, rank_lower_bound, rank_profile, simple_lower_bound, CoefficientTable, RankProfile};
pub use tree::{Tree, VertexClassification};
pub use verify::{check_stpoly, run_checks, CheckId, TreeSource, VerificationReport};
