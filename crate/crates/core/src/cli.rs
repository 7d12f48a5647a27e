//! The `subtree-density` command line.
//!
//! Exit status: 0 on success, 1 on domain errors or verification
//! violations, 2 on usage errors.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::dp::{global_stats, SubtreeStats};
use crate::enumeration::{enumerate_trees, sample_series_reduced, TreeFilter};
use crate::error::{Error, Result};
use crate::families::{density_sweep, make_family, parse_range, write_sweep_csv, FamilySpec, Sweep};
use crate::numeric::{decimal, fraction, Ratio};
use crate::oracle::{enumerate_subtrees, oracle_stats};
use crate::ranks::c_sequence;
use crate::tree::Tree;
use crate::verify::{check_stpoly, parse_check_list, run_checks, TreeSource, VerificationReport};

#[derive(Parser, Debug)]
#[command(name = "subtree-density", version, about = "Exact subtree statistics of trees")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Subtree statistics of every tree in a file.
    Stats {
        #[arg(long)]
        tree: PathBuf,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Brute-force statistics, cross-checked against the dynamic program.
    Oracle {
        #[arg(long)]
        tree: PathBuf,
        /// Also list every subtree as comma-separated vertices.
        #[arg(long)]
        dump: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Build a family member, or sweep a parameter and emit densities.
    Family {
        #[command(flatten)]
        family: FamilyArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// All free trees with n in a range, one per isomorphism class.
    Enumerate {
        #[arg(long, value_name = "A..B")]
        n: String,
        #[arg(long)]
        series_reduced: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Seeded random series-reduced trees.
    Sample {
        /// Minimum vertex count.
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// The coefficients c_0, c_1, ... as exact fractions.
    Cseq {
        #[arg(long)]
        count: usize,
        /// Significant digits of the decimal column; 0 drops it.
        #[arg(long, default_value_t = 15)]
        decimals: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the density inequalities over a tree stream.
    Verify {
        #[arg(long, value_enum, default_value_t = SourceKind::Enum)]
        source: SourceKind,
        #[arg(long, value_name = "A..B")]
        n: Option<String>,
        #[arg(long)]
        series_reduced: bool,
        #[arg(long)]
        tree: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Samples per target size.
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value = "all")]
        checks: String,
        /// Largest a for the standalone stpoly check (source `stpoly`).
        #[arg(long, default_value_t = 64)]
        a_max: u32,
        #[command(flatten)]
        family: OptionalFamilyArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Args, Debug)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Append decimal renderings with this many significant digits (12 if no value is given).
    /// CSV sweeps always carry decimals.
    #[arg(long, num_args = 0..=1, default_missing_value = "12")]
    decimals: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct FamilyArgs {
    #[arg(long)]
    family: String,
    #[arg(long, value_name = "k=3,r=2")]
    params: String,
    #[arg(long, value_name = "r=1..20")]
    sweep: Option<String>,
}

#[derive(Args, Debug)]
struct OptionalFamilyArgs {
    #[arg(long)]
    family: Option<String>,
    #[arg(long)]
    params: Option<String>,
    #[arg(long)]
    sweep: Option<String>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum SourceKind {
    Enum,
    Family,
    Sample,
    File,
    Stpoly,
}

/// Runs the command line on `args` (including the program name) and returns the exit status.
pub fn run(args: &[String], stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = stderr.write_all(text.as_bytes());
                2
            } else {
                let _ = stdout.write_all(text.as_bytes());
                0
            };
        }
    };
    match execute(cli.command, stderr) {
        Ok((output, path, code)) => match emit(&output, path.as_ref(), stdout) {
            Ok(()) => code,
            Err(e) => {
                let _ = writeln!(stderr, "error: {e}");
                1
            }
        },
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            1
        }
    }
}

fn emit(text: &str, path: Option<&PathBuf>, stdout: &mut dyn Write) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text)?,
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn read_trees(path: &PathBuf) -> Result<Vec<Tree>> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    Tree::parse_stream(&text)
}

fn exact(r: &Ratio, digits: Option<usize>) -> String {
    match digits {
        Some(d) if d > 0 => format!("{} ({})", fraction(r), decimal(r, d)),
        _ => fraction(r),
    }
}

fn stats_text(s: &SubtreeStats, digits: Option<usize>) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "n={}", s.n);
    let _ = writeln!(out, "leaves={}", s.leaf_count);
    let _ = writeln!(out, "N={}", s.total_count);
    let _ = writeln!(out, "order_sum={}", s.order_sum);
    let _ = writeln!(out, "mu={}", exact(&s.mu, digits));
    let _ = writeln!(out, "density={}", exact(&s.density, digits));
    if let Some(mp) = &s.mu_prime {
        let _ = writeln!(out, "mu_prime={}", exact(mp, digits));
    }
    let alphas: Vec<String> = s.containment.iter().map(|c| c.to_string()).collect();
    let _ = writeln!(out, "containment={}", alphas.join(" "));
    out
}

fn stats_output(all: &[SubtreeStats], out: &OutputArgs) -> Result<String> {
    match out.format {
        Format::Json => {
            let json = if all.len() == 1 {
                serde_json::to_string_pretty(&all[0])
            } else {
                serde_json::to_string_pretty(all)
            };
            Ok(json.expect("stats serialize") + "\n")
        }
        Format::Text => Ok(all
            .iter()
            .map(|s| stats_text(s, out.decimals))
            .collect::<Vec<_>>()
            .join("---\n")),
        Format::Csv => Err(Error::Parameter("csv output is only available for sweeps".into())),
    }
}

fn family_spec(name: &str, params: &str) -> Result<FamilySpec> {
    FamilySpec::parse(name, params)
}

type Outcome = (String, Option<PathBuf>, i32);

fn execute(command: Command, stderr: &mut dyn Write) -> Result<Outcome> {
    match command {
        Command::Stats { tree, out } => {
            let stats: Vec<SubtreeStats> = read_trees(&tree)?.iter().map(global_stats).collect();
            Ok((stats_output(&stats, &out)?, out.out, 0))
        }
        Command::Oracle { tree, dump, out } => {
            let trees = read_trees(&tree)?;
            let mut all = Vec::new();
            let mut dumps = String::new();
            for t in &trees {
                let brute = oracle_stats(t)?;
                if brute != global_stats(t) {
                    return Err(Error::Validation(format!(
                        "brute force and dynamic program disagree on tree\n{}",
                        t.to_text()
                    )));
                }
                if dump {
                    dumps.push_str(&enumerate_subtrees(t)?.dump());
                }
                all.push(brute);
            }
            let mut text = stats_output(&all, &out)?;
            if out.format == Format::Text {
                text.push_str("dp_agreement=exact\n");
            }
            text.push_str(&dumps);
            Ok((text, out.out, 0))
        }
        Command::Family { family, out } => {
            let spec = family_spec(&family.family, &family.params)?;
            match family.sweep {
                Some(s) => {
                    let points = density_sweep(&spec, &Sweep::parse(&s)?)?;
                    let text = match out.format {
                        Format::Json => serde_json::to_string_pretty(&points).expect("points serialize") + "\n",
                        _ => {
                            let mut buf = Vec::new();
                            write_sweep_csv(&points, out.decimals.unwrap_or(12).max(1), &mut buf)?;
                            String::from_utf8(buf).expect("csv is utf-8")
                        }
                    };
                    Ok((text, out.out, 0))
                }
                None => {
                    let tree = make_family(&spec)?;
                    let text = match out.format {
                        Format::Text => tree.to_text(),
                        Format::Json => {
                            let value = serde_json::json!({
                                "spec": spec,
                                "tree": tree.to_text(),
                                "stats": global_stats(&tree),
                            });
                            serde_json::to_string_pretty(&value).expect("json") + "\n"
                        }
                        Format::Csv => return Err(Error::Parameter("csv output needs --sweep".into())),
                    };
                    Ok((text, out.out, 0))
                }
            }
        }
        Command::Enumerate { n, series_reduced, out } => {
            let filter = if series_reduced {
                TreeFilter::SeriesReduced
            } else {
                TreeFilter::All
            };
            let mut blocks = Vec::new();
            for size in parse_range(&n)? {
                blocks.extend(enumerate_trees(size, filter)?.map(|t| t.to_text()));
            }
            Ok((blocks.join("---\n"), out.out, 0))
        }
        Command::Sample { n, seed, count, out } => {
            use rand::{RngCore, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let mut blocks = Vec::new();
            for _ in 0..count {
                blocks.push(sample_series_reduced(n, rng.next_u64())?.to_text());
            }
            Ok((blocks.join("---\n"), out.out, 0))
        }
        Command::Cseq { count, decimals, out } => {
            let table = c_sequence(count)?;
            let mut text = String::new();
            for (j, c) in table.c.iter().enumerate() {
                if decimals == 0 {
                    let _ = writeln!(text, "{j} {}", fraction(c));
                } else {
                    let _ = writeln!(text, "{j} {} {}", fraction(c), decimal(c, decimals));
                }
            }
            Ok((text, out, 0))
        }
        Command::Verify {
            source,
            n,
            series_reduced,
            tree,
            seed,
            count,
            checks,
            a_max,
            family,
            out,
        } => {
            let report = if source == SourceKind::Stpoly {
                check_stpoly(a_max)?
            } else {
                let checks = parse_check_list(&checks)?;
                let filter = if series_reduced {
                    TreeFilter::SeriesReduced
                } else {
                    TreeFilter::All
                };
                let src = match source {
                    SourceKind::Enum => TreeSource::Enumerate {
                        n: parse_range(
                            n.as_deref()
                                .ok_or_else(|| Error::Parameter("--n A..B is required".into()))?,
                        )?,
                        filter,
                    },
                    SourceKind::Family => {
                        let name = family
                            .family
                            .ok_or_else(|| Error::Parameter("--family is required".into()))?;
                        let spec = family_spec(&name, family.params.as_deref().unwrap_or(""))?;
                        let sweep = family.sweep.as_deref().map(Sweep::parse).transpose()?;
                        TreeSource::Family { spec, sweep }
                    }
                    SourceKind::Sample => {
                        let range = parse_range(n.as_deref().unwrap_or("30"))?;
                        TreeSource::Sample {
                            n_targets: range.collect(),
                            count,
                            seed,
                        }
                    }
                    SourceKind::File => {
                        let path = tree.ok_or_else(|| Error::Parameter("--tree is required".into()))?;
                        TreeSource::Trees {
                            label: format!("file {}", path.display()),
                            trees: read_trees(&path)?,
                        }
                    }
                    SourceKind::Stpoly => unreachable!(),
                };
                run_checks(&src, &checks)?
            };
            let _ = writeln!(stderr, "wall time: {:.3} s", report.wall_time.as_secs_f64());
            let text = render_report(&report, out.format)?;
            Ok((text, out.out, if report.passed { 0 } else { 1 }))
        }
    }
}

fn render_report(report: &VerificationReport, format: Format) -> Result<String> {
    match format {
        Format::Text => Ok(report.summary(10)),
        Format::Json => Ok(report.to_json() + "\n"),
        Format::Csv => Err(Error::Parameter("verify supports text and json output".into())),
    }
}
