//! Named tree families and exact density sweeps along them.
//!
//! Labelings:
//!
//! - `path(n)`: `0 - 1 - ... - (n-1)`.
//! - `star(m)`: center `0`, leaves `1..=m`.
//! - `star_chain(s, p)`: star `i` has center `i p` and leaves
//!   `i p + 1 ..= i p + p - 1`; consecutive centers are joined.
//! - `broom(m, k)`: root `0`, leaf children `1..=m`, then for each
//!   `j < k` a child `c = m + 1 + 3j` with leaves `c + 1`, `c + 2`.
//! - `leafy_path(n, l)`: root `0`, path `0 - 1 - ... - h` with
//!   `h = n - l - 1`, and leaves `h + 1 ..= n - 1` on the hub `h`.
//! - `starfish(k, r)`: center `0`; arm `a` occupies the block starting at
//!   `b = 1 + a (2r - 1)`: path vertices `b .. b + r` (outward), then the
//!   extra leaves `b + r .. b + 2r - 1` hanging off the first `r - 1` of them.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::Serialize;

use crate::dp::global_stats;
use crate::error::{Error, Result};
use crate::numeric::{decimal, ratio_int, serde_exact, Ratio};
use crate::tree::Tree;

pub const DEFAULT_VERTEX_CAP: usize = 5000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilySpec {
    Path { n: usize },
    Star { m: usize },
    StarChain { s: usize, p: usize },
    Broom { m: usize, k: usize },
    LeafyPath { n: usize, l: usize },
    Starfish { k: usize, r: usize },
}

impl FamilySpec {
    pub const NAMES: [&'static str; 6] = ["path", "star", "star_chain", "broom", "leafy_path", "starfish"];

    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::Path { .. } => "path",
            FamilySpec::Star { .. } => "star",
            FamilySpec::StarChain { .. } => "star_chain",
            FamilySpec::Broom { .. } => "broom",
            FamilySpec::LeafyPath { .. } => "leafy_path",
            FamilySpec::Starfish { .. } => "starfish",
        }
    }

    /// Parameter names in canonical order.
    pub fn param_names(name: &str) -> Result<&'static [&'static str]> {
        Ok(match name {
            "path" => &["n"],
            "star" => &["m"],
            "star_chain" => &["s", "p"],
            "broom" => &["m", "k"],
            "leafy_path" => &["n", "l"],
            "starfish" => &["k", "r"],
            other => {
                return Err(Error::Parameter(format!(
                    "unknown family `{other}` (expected one of {})",
                    Self::NAMES.join(", ")
                )))
            }
        })
    }

    pub fn params(&self) -> BTreeMap<&'static str, usize> {
        let pairs: Vec<(&'static str, usize)> = match *self {
            FamilySpec::Path { n } => vec![("n", n)],
            FamilySpec::Star { m } => vec![("m", m)],
            FamilySpec::StarChain { s, p } => vec![("s", s), ("p", p)],
            FamilySpec::Broom { m, k } => vec![("m", m), ("k", k)],
            FamilySpec::LeafyPath { n, l } => vec![("n", n), ("l", l)],
            FamilySpec::Starfish { k, r } => vec![("k", k), ("r", r)],
        };
        pairs.into_iter().collect()
    }

    /// Builds a spec from a family name and named parameters; every
    /// parameter of the family must be present and no others.
    pub fn from_params(name: &str, params: &BTreeMap<String, usize>) -> Result<FamilySpec> {
        let names = Self::param_names(name)?;
        if let Some(extra) = params.keys().find(|k| !names.contains(&k.as_str())) {
            return Err(Error::Parameter(format!("family `{name}` has no parameter `{extra}`")));
        }
        let get = |key: &str| {
            params
                .get(key)
                .copied()
                .ok_or_else(|| Error::Parameter(format!("family `{name}` needs parameter `{key}`")))
        };
        let spec = match name {
            "path" => FamilySpec::Path { n: get("n")? },
            "star" => FamilySpec::Star { m: get("m")? },
            "star_chain" => FamilySpec::StarChain {
                s: get("s")?,
                p: get("p")?,
            },
            "broom" => FamilySpec::Broom {
                m: get("m")?,
                k: get("k")?,
            },
            "leafy_path" => FamilySpec::LeafyPath {
                n: get("n")?,
                l: get("l")?,
            },
            "starfish" => FamilySpec::Starfish {
                k: get("k")?,
                r: get("r")?,
            },
            _ => unreachable!(),
        };
        spec.validate()?;
        Ok(spec)
    }

    /// Parses `k=3,r=2`.
    pub fn parse(name: &str, params: &str) -> Result<FamilySpec> {
        let mut map = BTreeMap::new();
        for item in params.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| Error::Parameter(format!("expected name=value, found `{item}`")))?;
            let value = value
                .trim()
                .parse()
                .map_err(|_| Error::Parameter(format!("`{item}`: value must be a nonnegative integer")))?;
            map.insert(key.trim().to_string(), value);
        }
        Self::from_params(name, &map)
    }

    fn with_param(&self, key: &str, value: usize) -> Result<FamilySpec> {
        let mut map: BTreeMap<String, usize> = self.params().into_iter().map(|(k, v)| (k.to_string(), v)).collect();
        if !map.contains_key(key) {
            return Err(Error::Parameter(format!(
                "family `{}` has no parameter `{key}`",
                self.name()
            )));
        }
        map.insert(key.to_string(), value);
        Self::from_params(self.name(), &map)
    }

    pub fn validate(&self) -> Result<()> {
        let fail = |msg: &str| Err(Error::Parameter(format!("{}: {msg}", self.name())));
        match *self {
            FamilySpec::Path { n } if n < 1 => fail("n ≥ 1 required"),
            FamilySpec::Star { m } if m < 1 => fail("m ≥ 1 required"),
            FamilySpec::StarChain { s, .. } if s < 1 => fail("s ≥ 1 required"),
            FamilySpec::StarChain { p, .. } if p < 3 => fail("p ≥ 3 required"),
            FamilySpec::Broom { m, k } if m + k < 1 => fail("m + k ≥ 1 required"),
            FamilySpec::LeafyPath { l, .. } if l < 1 => fail("l ≥ 1 required"),
            FamilySpec::LeafyPath { n, l } if n < l + 1 => fail("n ≥ l + 1 required"),
            FamilySpec::Starfish { k, .. } if k < 3 => fail("k ≥ 3 required"),
            FamilySpec::Starfish { r, .. } if r < 1 => fail("r ≥ 1 required"),
            _ => Ok(()),
        }
    }

    /// Number of vertices, without building the tree.
    pub fn vertex_count(&self) -> usize {
        match *self {
            FamilySpec::Path { n } => n,
            FamilySpec::Star { m } => m + 1,
            FamilySpec::StarChain { s, p } => s * p,
            FamilySpec::Broom { m, k } => 1 + m + 3 * k,
            FamilySpec::LeafyPath { n, .. } => n,
            FamilySpec::Starfish { k, r } => 2 * k * r - k + 1,
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self.params().iter().map(|(k, v)| format!("{k}={v}")).collect();
        write!(f, "{}({})", self.name(), params.join(","))
    }
}

pub fn make_family(spec: &FamilySpec) -> Result<Tree> {
    spec.validate()?;
    let mut edges = Vec::new();
    match *spec {
        FamilySpec::Path { n } => edges.extend((1..n).map(|v| (v - 1, v))),
        FamilySpec::Star { m } => edges.extend((1..=m).map(|v| (0, v))),
        FamilySpec::StarChain { s, p } => {
            for i in 0..s {
                let center = i * p;
                edges.extend((1..p).map(|j| (center, center + j)));
                if i > 0 {
                    edges.push((center - p, center));
                }
            }
        }
        FamilySpec::Broom { m, k } => {
            edges.extend((1..=m).map(|v| (0, v)));
            for j in 0..k {
                let c = m + 1 + 3 * j;
                edges.extend([(0, c), (c, c + 1), (c, c + 2)]);
            }
        }
        FamilySpec::LeafyPath { n, l } => {
            let hub = n - l - 1;
            edges.extend((1..=hub).map(|v| (v - 1, v)));
            edges.extend((hub + 1..n).map(|v| (hub, v)));
        }
        FamilySpec::Starfish { k, r } => {
            for a in 0..k {
                let base = 1 + a * (2 * r - 1);
                let mut prev = 0;
                for i in 0..r {
                    edges.push((prev, base + i));
                    prev = base + i;
                }
                edges.extend((0..r - 1).map(|i| (base + i, base + r + i)));
            }
        }
    }
    Tree::from_edges(spec.vertex_count(), &edges)
}

/// A swept parameter (or several parameters moved together) and its range.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sweep {
    pub params: Vec<String>,
    pub range: RangeInclusive<usize>,
}

impl Sweep {
    pub fn new(param: &str, range: RangeInclusive<usize>) -> Sweep {
        Sweep {
            params: vec![param.to_string()],
            range,
        }
    }

    /// Parses `r=1..20`, or `k,r=3..30` to move `k` and `r` together.
    pub fn parse(text: &str) -> Result<Sweep> {
        let (names, range) = text
            .split_once('=')
            .ok_or_else(|| Error::Parameter(format!("sweep must look like name=A..B, found `{text}`")))?;
        let params: Vec<String> = names.split(',').map(|s| s.trim().to_string()).collect();
        if params.iter().any(String::is_empty) {
            return Err(Error::Parameter(format!("empty parameter name in sweep `{text}`")));
        }
        Ok(Sweep {
            params,
            range: parse_range(range)?,
        })
    }
}

/// Parses `A..B` (inclusive) or a single `A`.
pub fn parse_range(text: &str) -> Result<RangeInclusive<usize>> {
    let bad = || Error::Parameter(format!("expected A..B, found `{text}`"));
    let (a, b) = match text.split_once("..") {
        Some((a, b)) => (a, b.strip_prefix('=').unwrap_or(b)),
        None => (text, text),
    };
    let a: usize = a.trim().parse().map_err(|_| bad())?;
    let b: usize = b.trim().parse().map_err(|_| bad())?;
    if a > b {
        return Err(Error::Parameter(format!("empty range `{text}`")));
    }
    Ok(a..=b)
}

/// Exact statistics of one member of a swept family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DensitySequencePoint {
    pub param: usize,
    pub spec: FamilySpec,
    pub n: usize,
    pub leaves: usize,
    pub twigs: usize,
    pub diameter: usize,
    #[serde(with = "serde_exact::ratio")]
    pub leaf_fraction: Ratio,
    #[serde(with = "serde_exact::ratio")]
    pub twig_fraction: Ratio,
    #[serde(with = "serde_exact::ratio")]
    pub density: Ratio,
    #[serde(with = "serde_exact::ratio")]
    pub diameter_ratio: Ratio,
}

impl DensitySequencePoint {
    pub fn of(param: usize, spec: FamilySpec, tree: &Tree) -> DensitySequencePoint {
        let n = tree.n();
        let (leaves, twigs) = match tree.classify_vertices() {
            Ok(c) => (c.leaf_count(), c.twig_count()),
            Err(_) => (0, 0),
        };
        let frac = |x: usize| ratio_int(x as i64, n as i64);
        let diameter = tree.diameter();
        DensitySequencePoint {
            param,
            spec,
            n,
            leaves,
            twigs,
            diameter,
            leaf_fraction: frac(leaves),
            twig_fraction: frac(twigs),
            density: global_stats(tree).density,
            diameter_ratio: frac(diameter),
        }
    }
}

pub fn density_sweep(base: &FamilySpec, sweep: &Sweep) -> Result<Vec<DensitySequencePoint>> {
    density_sweep_with_cap(base, sweep, DEFAULT_VERTEX_CAP)
}

/// The `(parameter value, member)` pairs of a sweep, refusing members above `cap` vertices.
pub fn sweep_members(base: &FamilySpec, sweep: &Sweep, cap: usize) -> Result<Vec<(usize, FamilySpec)>> {
    sweep
        .range
        .clone()
        .map(|value| {
            let mut spec = *base;
            for p in &sweep.params {
                spec = spec.with_param(p, value)?;
            }
            if spec.vertex_count() > cap {
                return Err(Error::Limit(format!(
                    "{} = {value} gives {} vertices, above the cap of {cap}",
                    sweep.params.join(","),
                    spec.vertex_count()
                )));
            }
            Ok((value, spec))
        })
        .collect()
}

pub fn density_sweep_with_cap(base: &FamilySpec, sweep: &Sweep, cap: usize) -> Result<Vec<DensitySequencePoint>> {
    sweep_members(base, sweep, cap)?
        .into_par_iter()
        .map(|(value, spec)| Ok(DensitySequencePoint::of(value, spec, &make_family(&spec)?)))
        .collect()
}

pub const CSV_HEADER: [&str; 10] = [
    "param",
    "n",
    "leaves",
    "twigs",
    "diameter",
    "density_num",
    "density_den",
    "density_decimal",
    "leaf_fraction_decimal",
    "twig_fraction_decimal",
];

/// Writes sweep points as CSV with a header row; decimals use `digits` significant digits.
pub fn write_sweep_csv<W: std::io::Write>(points: &[DensitySequencePoint], digits: usize, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let io = |e: csv::Error| Error::Io(e.to_string());
    w.write_record(CSV_HEADER).map_err(io)?;
    for p in points {
        w.write_record([
            p.param.to_string(),
            p.n.to_string(),
            p.leaves.to_string(),
            p.twigs.to_string(),
            p.diameter.to_string(),
            p.density.numer().to_string(),
            p.density.denom().to_string(),
            decimal(&p.density, digits),
            decimal(&p.leaf_fraction, digits),
            decimal(&p.twig_fraction, digits),
        ])
        .map_err(io)?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dp::{rooted_counts, vertex_view};
    use crate::numeric::to_f64;

    fn build(spec: FamilySpec) -> Tree {
        make_family(&spec).unwrap()
    }

    #[test]
    fn starfish_three_two() {
        let t = build(FamilySpec::Starfish { k: 3, r: 2 });
        assert_eq!(t.n(), 10);
        let c = t.classify_vertices().unwrap();
        assert_eq!((c.leaf_count(), c.twig_count()), (6, 3));
        assert_eq!(t.diameter(), 4);
        assert!(t.is_series_reduced());
        // leaf deletion leaves a spider with three legs of length one
        let (core, _) = t.leaf_deleted().unwrap();
        assert_eq!(core.n(), 4);
        assert_eq!(core.degree(0), 3);
    }

    #[test]
    fn starfish_invariants() {
        for k in 3..7 {
            for r in 1..8 {
                let t = build(FamilySpec::Starfish { k, r });
                let c = t.classify_vertices().unwrap();
                assert_eq!(c.leaf_count(), k * r);
                // a single-radius starfish is a star with one twig, its center
                assert_eq!(c.twig_count(), if r == 1 { 1 } else { k });
                assert_eq!(t.diameter(), 2 * r);
                assert!(t.is_series_reduced());
            }
        }
    }

    #[test]
    fn broom_one_one() {
        let t = build(FamilySpec::Broom { m: 1, k: 1 });
        assert_eq!(t.n(), 5);
        assert_eq!(t.neighbors(0), &[1, 2]);
        assert_eq!(t.neighbors(2), &[0, 3, 4]);
        assert_eq!(vertex_view(&t, 0).unwrap().lambda, ratio_int(31, 10));
    }

    #[test]
    fn leafy_path_four_two() {
        let t = build(FamilySpec::LeafyPath { n: 4, l: 2 });
        assert_eq!(t.edges(), &[(0, 1), (1, 2), (1, 3)]);
        assert_eq!(rooted_counts(&t, 0).alpha_root, 5u32.into());
    }

    #[test]
    fn star_chain_is_series_reduced() {
        for s in 1..5 {
            for p in 3..7 {
                let t = build(FamilySpec::StarChain { s, p });
                assert_eq!(t.n(), s * p);
                // a lone star of order 3 is the path P3
                assert_eq!(t.is_series_reduced(), s >= 2 || p >= 4);
            }
        }
    }

    #[test]
    fn parameter_validation() {
        assert!(FamilySpec::parse("starfish", "k=2,r=1").is_err());
        assert!(FamilySpec::parse("starfish", "k=3").is_err());
        assert!(FamilySpec::parse("starfish", "k=3,r=1,x=2").is_err());
        assert!(FamilySpec::parse("leafy_path", "n=3,l=3").is_err());
        assert!(FamilySpec::parse("broom", "m=0,k=0").is_err());
        assert!(FamilySpec::parse("hedge", "n=3").is_err());
        assert_eq!(
            FamilySpec::parse("starfish", "k=3, r=2").unwrap(),
            FamilySpec::Starfish { k: 3, r: 2 }
        );
    }

    #[test]
    fn sweep_parsing() {
        assert_eq!(Sweep::parse("r=1..20").unwrap(), Sweep::new("r", 1..=20));
        let s = Sweep::parse("k,r=3..5").unwrap();
        assert_eq!(s.params, vec!["k", "r"]);
        assert!(Sweep::parse("r=5..1").is_err());
        assert!(Sweep::parse("r").is_err());
    }

    #[test]
    fn star_density_tends_to_half() {
        let pts = density_sweep(&FamilySpec::Star { m: 1 }, &Sweep::new("m", 1..=50)).unwrap();
        // D dips to 13/25 at m = 4, peaks at m = 9, then decreases toward 1/2
        assert_eq!(pts[3].density, ratio_int(13, 25));
        assert!(pts[3..9].windows(2).all(|w| w[1].density > w[0].density));
        assert!(pts[8..].windows(2).all(|w| w[1].density < w[0].density));
        assert!(pts.iter().all(|p| p.density > ratio_int(1, 2)));
        assert!((to_f64(&pts[49].density) - 0.5).abs() < 0.02);
    }

    #[test]
    fn star_chain_diagonal_tends_to_half() {
        let pts = density_sweep(
            &FamilySpec::StarChain { s: 3, p: 3 },
            &Sweep::parse("s,p=3..25").unwrap(),
        )
        .unwrap();
        // rises until s = p = 5, then decreases
        assert!(pts[1].density > pts[0].density && pts[2].density > pts[1].density);
        assert!(pts[2..].windows(2).all(|w| w[1].density < w[0].density));
        let last = pts.last().unwrap();
        assert!(last.density > ratio_int(1, 2) && last.density < ratio_int(13, 25));
        assert!(pts.windows(2).all(|w| w[1].leaf_fraction > w[0].leaf_fraction));
    }

    #[test]
    fn starfish_sweep_increases() {
        let pts = density_sweep(&FamilySpec::Starfish { k: 3, r: 1 }, &Sweep::new("r", 1..=20)).unwrap();
        assert!(pts.windows(2).all(|w| w[1].density > w[0].density));
        assert!(to_f64(&pts.last().unwrap().density) > 0.70);
    }

    #[test]
    fn path_sweep_exact() {
        let pts = density_sweep(&FamilySpec::Path { n: 4 }, &Sweep::new("n", 4..=30)).unwrap();
        for p in pts {
            let n = p.n as i64;
            assert_eq!(p.density, ratio_int(n + 2, 3 * n));
        }
    }

    #[test]
    fn sweep_cap() {
        let err = density_sweep_with_cap(&FamilySpec::Path { n: 1 }, &Sweep::new("n", 1..=20), 10).unwrap_err();
        assert!(err.to_string().contains("n = 11"), "{err}");
        assert!(density_sweep(&FamilySpec::Path { n: 1 }, &Sweep::new("q", 1..=2)).is_err());
    }

    #[test]
    fn csv_layout() {
        let pts = density_sweep(&FamilySpec::Path { n: 4 }, &Sweep::new("n", 4..=5)).unwrap();
        let mut buf = Vec::new();
        write_sweep_csv(&pts, 12, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], CSV_HEADER.join(","));
        assert_eq!(lines[1], "4,4,2,2,3,1,2,0.500000000000,0.500000000000,0.500000000000");
        assert_eq!(lines.len(), 3);
    }
}
