//! Inequality checks over streams of trees.
//!
//! Every check is evaluated with exact rational arithmetic. Rooted checks
//! try every admissible root of every tree. Findings (violations and
//! equality cases) are ordered by `(n, canonical form, root)`, so a report
//! does not depend on evaluation order or on the labeling of the input.

use std::cell::OnceCell;
use std::fmt::{self, Write as _};
use std::ops::RangeInclusive;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_traits::Signed;
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::dp::{all_vertex_views, global_stats, good_anchor, SubtreeStats, VertexSubtreeView};
use crate::enumeration::{canonical_form, enumerate_trees, sample_series_reduced, TreeFilter};
use crate::error::{Error, Result};
use crate::families::{make_family, sweep_members, FamilySpec, Sweep, DEFAULT_VERTEX_CAP};
use crate::numeric::{count_to_ratio, fraction, int, ratio_int, Count};
use crate::ranks::{in_rooted_class, rank_lower_bound, simple_lower_bound};
use crate::tree::Tree;

/// Largest `a` checked when C6 is requested through [`run_checks`].
pub const STPOLY_DEFAULT_MAX: u32 = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum CheckId {
    C1,
    C2,
    C3,
    C4,
    C5,
    C6,
    C7,
    C8,
    C9,
    C10,
    C11,
    C12,
}

impl CheckId {
    pub const ALL: [CheckId; 12] = [
        CheckId::C1,
        CheckId::C2,
        CheckId::C3,
        CheckId::C4,
        CheckId::C5,
        CheckId::C6,
        CheckId::C7,
        CheckId::C8,
        CheckId::C9,
        CheckId::C10,
        CheckId::C11,
        CheckId::C12,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckId::C1 => "leaf-minority",
            CheckId::C2 => "mu-upper",
            CheckId::C3 => "leaf-count",
            CheckId::C4 => "mu-vs-muprime",
            CheckId::C5 => "twig-upper",
            CheckId::C6 => "stpoly",
            CheckId::C7 => "alpha-majority",
            CheckId::C8 => "alpha-floor",
            CheckId::C9 => "anchor-exists-n30",
            CheckId::C10 => "simple-lambda",
            CheckId::C11 => "rank-lambda",
            CheckId::C12 => "density-window",
        }
    }

    pub fn claim(self) -> &'static str {
        match self {
            CheckId::C1 => "every leaf v: 2·α(T,v) < |S(T)|",
            CheckId::C2 => "μ(T) < (3n−2)/4",
            CheckId::C3 => "l ≥ (n+2)/2",
            CheckId::C4 => "μ(T) ≤ μ′(T), equality only at P4",
            CheckId::C5 => "μ(T) < 3n/4 − 2t/5",
            CheckId::C6 => "(2^a + a·2^(a−1))/(2^a + 1) ≤ (28a+16)/45",
            CheckId::C7 => "α(T,v) ≥ ᾱ(T,v)",
            CheckId::C8 => "α(T,v) ≥ n − l − 1 + 2^l",
            CheckId::C9 => "some internal v with |μ(T) − λ(T,v)| < 2",
            CheckId::C10 => "λ(T,v) ≥ (n+1)/2 + (k−1)/10",
            CheckId::C11 => "λ(T,v) ≥ 1 + Σ c_j m_j(T,v)",
            CheckId::C12 => "1/2 < D(T) < 3/4",
        }
    }

    pub fn applicability(self) -> &'static str {
        match self {
            CheckId::C1 | CheckId::C4 => "any tree, n ≥ 4",
            CheckId::C2 | CheckId::C3 | CheckId::C5 | CheckId::C12 => "series-reduced trees",
            CheckId::C6 => "integers a ≥ 2",
            CheckId::C7 | CheckId::C10 | CheckId::C11 => {
                "every root v with root degree ≥ 2 and all other internal degrees ≥ 3"
            }
            CheckId::C8 => "every tree, every root (root not counted as a leaf)",
            CheckId::C9 => "series-reduced trees with n ≥ 30",
        }
    }

    /// Checks whose equality cases are recorded.
    fn records_equality(self) -> bool {
        matches!(self, CheckId::C4 | CheckId::C6 | CheckId::C8 | CheckId::C10)
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for CheckId {
    type Err = Error;

    fn from_str(s: &str) -> Result<CheckId> {
        let t = s.trim();
        CheckId::ALL
            .into_iter()
            .find(|c| c.to_string().eq_ignore_ascii_case(t) || c.name() == t)
            .ok_or_else(|| Error::UnknownCheck(t.to_string()))
    }
}

/// Parses `C1,C2,...` (or `all`) into a sorted, duplicate-free list.
pub fn parse_check_list(text: &str) -> Result<Vec<CheckId>> {
    if text.trim().eq_ignore_ascii_case("all") {
        return Ok(CheckId::ALL.to_vec());
    }
    let mut ids = text
        .split(',')
        .filter(|s| !s.trim().is_empty())
        .map(CheckId::from_str)
        .collect::<Result<Vec<_>>>()?;
    ids.sort();
    ids.dedup();
    if ids.is_empty() {
        return Err(Error::Parameter("no checks selected".into()));
    }
    Ok(ids)
}

/// Where the trees come from.
#[derive(Clone, Debug)]
pub enum TreeSource {
    /// Every free tree for each `n` in range, optionally only series-reduced ones.
    Enumerate {
        n: RangeInclusive<usize>,
        filter: TreeFilter,
    },
    /// A single family member, or a sweep along it.
    Family { spec: FamilySpec, sweep: Option<Sweep> },
    /// `count` seeded series-reduced samples for each target size.
    Sample {
        n_targets: Vec<usize>,
        count: usize,
        seed: u64,
    },
    /// Explicit trees, e.g. read from a file.
    Trees { label: String, trees: Vec<Tree> },
}

impl TreeSource {
    pub fn describe(&self) -> String {
        match self {
            TreeSource::Enumerate { n, filter } => format!(
                "enumerate n={}..{} ({})",
                n.start(),
                n.end(),
                match filter {
                    TreeFilter::All => "all",
                    TreeFilter::SeriesReduced => "series-reduced",
                }
            ),
            TreeSource::Family { spec, sweep: None } => format!("family {spec}"),
            TreeSource::Family { spec, sweep: Some(s) } => format!(
                "family {} sweeping {}={}..{}",
                spec.name(),
                s.params.join(","),
                s.range.start(),
                s.range.end()
            ),
            TreeSource::Sample { n_targets, count, seed } => {
                let targets: Vec<String> = n_targets.iter().map(usize::to_string).collect();
                format!("sample {count} per n_target in {{{}}} seed {seed}", targets.join(","))
            }
            TreeSource::Trees { label, trees } => format!("{label} ({} trees)", trees.len()),
        }
    }

    fn evidence(&self) -> &'static str {
        match self {
            TreeSource::Enumerate { .. } => "exhaustive",
            TreeSource::Family { .. } => "family instances",
            TreeSource::Sample { .. } => "sampled evidence",
            TreeSource::Trees { .. } => "listed trees",
        }
    }

    pub fn trees(&self) -> Result<Vec<Tree>> {
        match self {
            TreeSource::Enumerate { n, filter } => {
                let mut out = Vec::new();
                for size in n.clone() {
                    out.extend(enumerate_trees(size, *filter)?);
                }
                Ok(out)
            }
            TreeSource::Family { spec, sweep: None } => {
                if spec.vertex_count() > DEFAULT_VERTEX_CAP {
                    return Err(Error::Limit(format!(
                        "{spec} exceeds the cap of {DEFAULT_VERTEX_CAP} vertices"
                    )));
                }
                Ok(vec![make_family(spec)?])
            }
            TreeSource::Family {
                spec,
                sweep: Some(sweep),
            } => sweep_members(spec, sweep, DEFAULT_VERTEX_CAP)?
                .iter()
                .map(|(_, member)| make_family(member))
                .collect(),
            TreeSource::Sample { n_targets, count, seed } => {
                let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                let jobs: Vec<(usize, u64)> = n_targets
                    .iter()
                    .flat_map(|&t| (0..*count).map(move |_| t))
                    .map(|t| (t, rng.next_u64()))
                    .collect();
                jobs.into_par_iter().map(|(t, s)| sample_series_reduced(t, s)).collect()
            }
            TreeSource::Trees { trees, .. } => Ok(trees.clone()),
        }
    }
}

/// One violation or equality case.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Finding {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub canonical: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub root: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<u32>,
    pub witness: String,
    #[serde(skip)]
    key: (usize, Vec<u32>, usize),
}

impl Finding {
    fn for_tree(tree: &Tree, code: &[u32], root: Option<usize>, witness: String) -> Finding {
        let text: Vec<String> = code.iter().map(u32::to_string).collect();
        Finding {
            n: Some(tree.n()),
            canonical: Some(text.join(" ")),
            root,
            a: None,
            witness,
            key: (tree.n(), code.to_vec(), root.map_or(0, |r| r + 1)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub id: CheckId,
    pub name: &'static str,
    pub claim: &'static str,
    pub applicability: &'static str,
    pub evidence: &'static str,
    pub trees_examined: u64,
    pub trees_applicable: u64,
    /// (tree, root) or (tree, leaf) pairs evaluated; equals applicable trees for unrooted checks.
    pub instances: u64,
    pub violations: Vec<Finding>,
    pub equality_cases: Vec<Finding>,
    pub passed: bool,
}

impl CheckResult {
    fn empty(id: CheckId, evidence: &'static str) -> CheckResult {
        CheckResult {
            id,
            name: id.name(),
            claim: id.claim(),
            applicability: id.applicability(),
            evidence,
            trees_examined: 0,
            trees_applicable: 0,
            instances: 0,
            violations: Vec::new(),
            equality_cases: Vec::new(),
            passed: true,
        }
    }

    fn absorb(&mut self, o: Outcome) {
        self.trees_examined += 1;
        if o.instances > 0 {
            self.trees_applicable += 1;
        }
        self.instances += o.instances;
        self.violations.extend(o.violations);
        self.equality_cases.extend(o.equalities);
    }

    fn finish(&mut self) {
        self.violations.sort_by(|a, b| a.key.cmp(&b.key));
        self.equality_cases.sort_by(|a, b| a.key.cmp(&b.key));
        self.passed = self.violations.is_empty();
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub source: String,
    pub checks: Vec<CheckId>,
    pub trees_examined: u64,
    pub results: Vec<CheckResult>,
    pub passed: bool,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl VerificationReport {
    pub fn result(&self, id: CheckId) -> Option<&CheckResult> {
        self.results.iter().find(|r| r.id == id)
    }

    pub fn violation_count(&self) -> usize {
        self.results.iter().map(|r| r.violations.len()).sum()
    }

    /// JSON report body; wall time is deliberately left out so identical runs compare equal.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Human-readable summary table with up to `max_listed` findings per check.
    pub fn summary(&self, max_listed: usize) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "source: {}", self.source);
        let _ = writeln!(out, "trees examined: {}", self.trees_examined);
        let _ = writeln!(
            out,
            "{:<4} {:<18} {:>10} {:>10} {:>10} {:>10}  result",
            "id", "check", "applicable", "instances", "violations", "equalities"
        );
        for r in &self.results {
            let _ = writeln!(
                out,
                "{:<4} {:<18} {:>10} {:>10} {:>10} {:>10}  {}",
                r.id.to_string(),
                r.name,
                r.trees_applicable,
                r.instances,
                r.violations.len(),
                r.equality_cases.len(),
                if r.passed { "PASS" } else { "FAIL" }
            );
        }
        for r in &self.results {
            for (label, list) in [("violation", &r.violations), ("equality", &r.equality_cases)] {
                for f in list.iter().take(max_listed) {
                    let _ = writeln!(out, "  {} {label}: {}", r.id, describe_finding(f));
                }
                if list.len() > max_listed {
                    let _ = writeln!(out, "  {} ... {} more {label} cases", r.id, list.len() - max_listed);
                }
            }
        }
        let _ = writeln!(out, "overall: {}", if self.passed { "PASS" } else { "FAIL" });
        out
    }
}

fn describe_finding(f: &Finding) -> String {
    let mut parts = Vec::new();
    if let Some(a) = f.a {
        parts.push(format!("a={a}"));
    }
    if let Some(n) = f.n {
        parts.push(format!("n={n}"));
    }
    if let Some(c) = &f.canonical {
        parts.push(format!("[{c}]"));
    }
    if let Some(r) = f.root {
        parts.push(format!("root={r}"));
    }
    parts.push(f.witness.clone());
    parts.join(" ")
}

#[derive(Default)]
struct Outcome {
    instances: u64,
    violations: Vec<Finding>,
    equalities: Vec<Finding>,
}

/// Lazily computed per-tree quantities shared between checks.
struct TreeContext<'a> {
    tree: &'a Tree,
    stats: OnceCell<SubtreeStats>,
    views: OnceCell<Vec<VertexSubtreeView>>,
    code: OnceCell<Vec<u32>>,
}

impl<'a> TreeContext<'a> {
    fn new(tree: &'a Tree) -> Self {
        TreeContext {
            tree,
            stats: OnceCell::new(),
            views: OnceCell::new(),
            code: OnceCell::new(),
        }
    }

    fn stats(&self) -> &SubtreeStats {
        self.stats.get_or_init(|| global_stats(self.tree))
    }

    fn views(&self) -> &[VertexSubtreeView] {
        self.views.get_or_init(|| all_vertex_views(self.tree))
    }

    fn finding(&self, root: Option<usize>, witness: String) -> Finding {
        let code = self.code.get_or_init(|| canonical_form(self.tree).code);
        Finding::for_tree(self.tree, code, root, witness)
    }
}

fn evaluate(ctx: &TreeContext, id: CheckId) -> Outcome {
    let tree = ctx.tree;
    let n = tree.n();
    let mut o = Outcome::default();
    let unrooted = |holds: bool, witness: String, o: &mut Outcome| {
        o.instances += 1;
        if !holds {
            o.violations.push(ctx.finding(None, witness));
        }
    };
    match id {
        CheckId::C1 if n >= 4 => {
            let s = ctx.stats();
            for v in tree.leaves() {
                o.instances += 1;
                let twice = &s.containment[v] * 2u32;
                if twice >= s.total_count {
                    o.violations
                        .push(ctx.finding(None, format!("leaf {v}: 2α = {twice} ≥ |S| = {}", s.total_count)));
                }
            }
        }
        CheckId::C2 if tree.is_series_reduced() => {
            let s = ctx.stats();
            let bound = ratio_int(3 * n as i64 - 2, 4);
            unrooted(
                s.mu < bound,
                format!("μ = {} vs (3n−2)/4 = {}", fraction(&s.mu), fraction(&bound)),
                &mut o,
            );
        }
        CheckId::C3 if tree.is_series_reduced() => {
            let l = tree.leaf_count();
            unrooted(2 * l >= n + 2, format!("l = {l}, n = {n}"), &mut o);
        }
        CheckId::C4 if n >= 4 => {
            let s = ctx.stats();
            let mu_prime = s.mu_prime.as_ref().expect("n ≥ 2");
            let witness = format!("μ = {}, μ′ = {}", fraction(&s.mu), fraction(mu_prime));
            o.instances += 1;
            let is_p4 = n == 4 && tree.leaf_count() == 2;
            if &s.mu == mu_prime {
                o.equalities.push(ctx.finding(None, witness.clone()));
                if !is_p4 {
                    o.violations
                        .push(ctx.finding(None, format!("equality away from P4: {witness}")));
                }
            } else if &s.mu > mu_prime {
                o.violations.push(ctx.finding(None, witness));
            }
        }
        CheckId::C5 if tree.is_series_reduced() => {
            let s = ctx.stats();
            let t = tree.classify_vertices().expect("n ≥ 4").twig_count();
            let bound = ratio_int(3 * n as i64, 4) - ratio_int(2 * t as i64, 5);
            unrooted(
                s.mu < bound,
                format!(
                    "μ = {} vs 3n/4 − 2t/5 = {} (t = {t})",
                    fraction(&s.mu),
                    fraction(&bound)
                ),
                &mut o,
            );
        }
        CheckId::C7 => {
            for v in (0..n).filter(|&v| in_rooted_class(tree, v)) {
                let view = &ctx.views()[v];
                o.instances += 1;
                if view.alpha < view.alpha_bar {
                    o.violations
                        .push(ctx.finding(Some(v), format!("α = {} < ᾱ = {}", view.alpha, view.alpha_bar)));
                }
            }
        }
        CheckId::C8 => {
            for v in 0..n {
                let l = (0..n).filter(|&w| w != v && tree.is_leaf(w)).count();
                let bound = (Count::from(1u32) << l) + (n - l - 1);
                let alpha = &ctx.views()[v].alpha;
                o.instances += 1;
                let witness = format!("α = {alpha}, n − l − 1 + 2^l = {bound} (l = {l})");
                if *alpha < bound {
                    o.violations.push(ctx.finding(Some(v), witness));
                } else if *alpha == bound {
                    o.equalities.push(ctx.finding(Some(v), witness));
                }
            }
        }
        CheckId::C9 if tree.is_series_reduced() && n >= 30 => {
            o.instances += 1;
            match good_anchor(tree) {
                None => o.violations.push(ctx.finding(None, "no anchor vertex found".into())),
                Some(v) => {
                    let gap = (&ctx.stats().mu - &ctx.views()[v].lambda).abs();
                    if tree.degree(v) < 2 || gap >= int(2) {
                        o.violations.push(ctx.finding(
                            Some(v),
                            format!("anchor {v}: |μ − λ| = {} (degree {})", fraction(&gap), tree.degree(v)),
                        ));
                    }
                }
            }
        }
        CheckId::C10 | CheckId::C11 => {
            for v in (0..n).filter(|&v| in_rooted_class(tree, v)) {
                let lambda = &ctx.views()[v].lambda;
                let bound = if id == CheckId::C10 {
                    simple_lower_bound(tree, v)
                } else {
                    rank_lower_bound(tree, v)
                };
                o.instances += 1;
                let witness = format!("λ = {}, bound = {}", fraction(lambda), fraction(&bound.value));
                if *lambda < bound.value {
                    o.violations.push(ctx.finding(Some(v), witness));
                } else if *lambda == bound.value && id.records_equality() {
                    o.equalities.push(ctx.finding(Some(v), witness));
                }
            }
        }
        CheckId::C12 if tree.is_series_reduced() => {
            let d = &ctx.stats().density;
            let ok = *d > ratio_int(1, 2) && *d < ratio_int(3, 4);
            unrooted(ok, format!("D = {}", fraction(d)), &mut o);
        }
        _ => {}
    }
    o
}

/// Runs the selected checks over every tree of `source`.
pub fn run_checks(source: &TreeSource, checks: &[CheckId]) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut checks = checks.to_vec();
    checks.sort();
    checks.dedup();
    let trees = source.trees()?;
    let tree_checks: Vec<CheckId> = checks.iter().copied().filter(|&c| c != CheckId::C6).collect();

    let per_tree: Vec<Vec<Outcome>> = trees
        .par_iter()
        .map(|t| {
            let ctx = TreeContext::new(t);
            tree_checks.iter().map(|&c| evaluate(&ctx, c)).collect()
        })
        .collect();

    let mut results: Vec<CheckResult> = tree_checks
        .iter()
        .map(|&c| CheckResult::empty(c, check_evidence(c, source)))
        .collect();
    for outcomes in per_tree {
        for (r, o) in results.iter_mut().zip(outcomes) {
            r.absorb(o);
        }
    }
    for r in &mut results {
        r.finish();
    }
    if checks.contains(&CheckId::C6) {
        results.push(stpoly_result(STPOLY_DEFAULT_MAX));
        results.sort_by_key(|r| r.id);
    }
    let passed = results.iter().all(|r| r.passed);
    Ok(VerificationReport {
        source: source.describe(),
        checks,
        trees_examined: trees.len() as u64,
        results,
        passed,
        wall_time: start.elapsed(),
    })
}

fn check_evidence(id: CheckId, source: &TreeSource) -> &'static str {
    match (id, source) {
        (CheckId::C9, _) => "sampled evidence",
        _ => source.evidence(),
    }
}

fn stpoly_result(a_max: u32) -> CheckResult {
    let mut r = CheckResult::empty(CheckId::C6, "exhaustive over a");
    for a in 2..=a_max.max(1) {
        let pow = Count::from(1u32) << a as usize;
        let p = count_to_ratio(&pow);
        let lhs = (&p + int(a as u64) * &p / int(2)) / (&p + int(1));
        let rhs = ratio_int(28 * a as i64 + 16, 45);
        // cleared-denominator form: 11a·2^a + 56a + 32 ≥ 58·2^a
        let poly_lhs = &pow * (11 * a) + (56 * a + 32);
        let poly_rhs = &pow * 58u32;
        assert_eq!(
            lhs <= rhs,
            poly_lhs >= poly_rhs,
            "rational and polynomial forms disagree at a = {a}"
        );
        assert_eq!(lhs == rhs, poly_lhs == poly_rhs);
        let finding = |witness: String| Finding {
            n: None,
            canonical: None,
            root: None,
            a: Some(a),
            witness,
            key: (a as usize, Vec::new(), 0),
        };
        let witness = format!("LHS = {}, RHS = {}", fraction(&lhs), fraction(&rhs));
        r.trees_examined += 1;
        r.trees_applicable += 1;
        r.instances += 1;
        if lhs > rhs {
            r.violations.push(finding(witness));
        } else if lhs == rhs {
            r.equality_cases.push(finding(witness));
        }
    }
    r.finish();
    r
}

/// Checks the rational inequality for every integer `a` in `[2, a_max]`.
pub fn check_stpoly(a_max: u32) -> Result<VerificationReport> {
    if a_max < 2 {
        return Err(Error::Parameter(format!("a_max must be at least 2, got {a_max}")));
    }
    let start = Instant::now();
    let r = stpoly_result(a_max);
    Ok(VerificationReport {
        source: format!("integers a in [2, {a_max}]"),
        checks: vec![CheckId::C6],
        trees_examined: 0,
        passed: r.passed,
        results: vec![r],
        wall_time: start.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::tests::{path, star};

    #[test]
    fn check_ids_parse() {
        assert_eq!(parse_check_list("C1, c4,C1").unwrap(), vec![CheckId::C1, CheckId::C4]);
        assert_eq!(parse_check_list("all").unwrap().len(), 12);
        assert!(matches!(parse_check_list("C13"), Err(Error::UnknownCheck(_))));
        assert_eq!("density-window".parse::<CheckId>().unwrap(), CheckId::C12);
    }

    #[test]
    fn stpoly_equalities() {
        let report = check_stpoly(64).unwrap();
        let r = report.result(CheckId::C6).unwrap();
        assert!(r.passed);
        let eq: Vec<u32> = r.equality_cases.iter().filter_map(|f| f.a).collect();
        assert_eq!(eq, vec![2, 3]);
        assert!(check_stpoly(1).is_err());
    }

    #[test]
    fn p4_is_the_c4_equality() {
        let src = TreeSource::Trees {
            label: "inline".into(),
            trees: vec![path(4), star(3)],
        };
        let report = run_checks(&src, &[CheckId::C4]).unwrap();
        let r = report.result(CheckId::C4).unwrap();
        assert!(r.passed);
        assert_eq!(r.equality_cases.len(), 1);
        assert_eq!(r.equality_cases[0].n, Some(4));
        assert_eq!(
            r.equality_cases[0].canonical,
            Some(canonical_form(&path(4)).to_string())
        );
    }

    #[test]
    fn applicability() {
        let src = TreeSource::Trees {
            label: "inline".into(),
            trees: vec![path(5), star(4)],
        };
        let report = run_checks(&src, &[CheckId::C2, CheckId::C7, CheckId::C9]).unwrap();
        assert_eq!(report.result(CheckId::C2).unwrap().trees_applicable, 1);
        assert_eq!(report.result(CheckId::C7).unwrap().instances, 1);
        assert_eq!(report.result(CheckId::C9).unwrap().trees_applicable, 0);
        assert!(report.passed);
    }

    #[test]
    fn density_window_skips_non_series_reduced() {
        let t = path(8);
        let ctx = TreeContext::new(&t);
        let d = &ctx.stats().density;
        assert!(*d < ratio_int(1, 2));
        assert_eq!(evaluate(&ctx, CheckId::C12).instances, 0);
    }

    #[test]
    fn reports_are_reproducible() {
        let src = TreeSource::Enumerate {
            n: 4..=9,
            filter: TreeFilter::All,
        };
        let a = run_checks(&src, &CheckId::ALL).unwrap();
        let b = run_checks(&src, &CheckId::ALL).unwrap();
        assert_eq!(a.to_json(), b.to_json());
        for r in a.results.iter().filter(|r| r.id != CheckId::C12) {
            assert!(r.passed, "{}", a.summary(5));
        }
        // the double star S(2,2) has D = 1/2 exactly
        let c12 = a.result(CheckId::C12).unwrap();
        assert_eq!(c12.violations.len(), 1);
        assert_eq!(c12.violations[0].canonical.as_deref(), Some("0 1 2 2 1 1"));
        assert_eq!(c12.violations[0].witness, "D = 1/2");
    }
}
