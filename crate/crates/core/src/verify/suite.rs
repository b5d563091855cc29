//! Suite configuration, corpus assembly, report aggregation and output.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::{self, enumerate_trees_up_to, make_family, FamilySpec};
use crate::graph::Graph;
use crate::oracle::{FieldSpec, Oracle};
use crate::splitting::path_ideal;

use super::*;

/// Groups of checks selectable with `--theorem`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Theorem {
    ChordalReg,
    ChordalPd,
    CmUnmixed,
    TreeDualVs,
    CaterpillarReg,
    Splitting,
    Families,
    Oracle,
    Lemmas,
    Conjectures,
}

impl Theorem {
    pub const ALL: [Theorem; 10] = [
        Theorem::ChordalReg,
        Theorem::ChordalPd,
        Theorem::CmUnmixed,
        Theorem::TreeDualVs,
        Theorem::CaterpillarReg,
        Theorem::Splitting,
        Theorem::Families,
        Theorem::Oracle,
        Theorem::Lemmas,
        Theorem::Conjectures,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Theorem::ChordalReg => "chordal-reg",
            Theorem::ChordalPd => "chordal-pd",
            Theorem::CmUnmixed => "cm-unmixed",
            Theorem::TreeDualVs => "tree-dual-vs",
            Theorem::CaterpillarReg => "caterpillar-reg",
            Theorem::Splitting => "splitting",
            Theorem::Families => "families",
            Theorem::Oracle => "oracle",
            Theorem::Lemmas => "lemmas",
            Theorem::Conjectures => "conjectures",
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Theorem::ALL.iter().map(|t| t.as_str()).collect();
                Error::invalid("theorem", format!("one of {} (got `{s}`)", names.join(", ")))
            })
    }
}

/// Corpus selectors, field and bounds of a campaign.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteConfig {
    /// Empty means every group except the conjecture probes.
    pub theorems: Vec<Theorem>,
    /// All trees with at most this many vertices.
    pub exhaustive: usize,
    /// Number of seeded random chordal graphs.
    pub random: usize,
    /// Largest random chordal graph.
    pub n: usize,
    pub caterpillars: usize,
    pub caterpillar_n: usize,
    /// Paths on `1..=paths` vertices join the caterpillar corpus.
    pub paths: usize,
    pub t_min: usize,
    pub t_max: usize,
    /// Seeded instances per lemma identity.
    pub identities: usize,
    pub antichains: usize,
    /// Seeded instances of the regularity and projective-dimension bounds.
    pub bound_instances: usize,
    /// Terai's formula is checked on every touched ideal with at most this
    /// many variables.
    pub terai_n: usize,
    pub conjecture_t: usize,
    pub conjecture_n: usize,
    pub seed: u64,
    pub field: FieldSpec,
    /// Oracle variable bound; larger instances are skipped.
    pub bound: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            theorems: Vec::new(),
            exhaustive: 9,
            random: 200,
            n: 12,
            caterpillars: 100,
            caterpillar_n: 13,
            paths: 12,
            t_min: 2,
            t_max: 5,
            identities: 200,
            antichains: 1000,
            bound_instances: 500,
            terai_n: 14,
            conjecture_t: 4,
            conjecture_n: 8,
            seed: 7,
            field: FieldSpec::GF2,
            bound: crate::oracle::BETTI_BOUND,
        }
    }
}

impl SuiteConfig {
    pub fn only(theorems: &[Theorem]) -> Self {
        SuiteConfig {
            theorems: theorems.to_vec(),
            ..Default::default()
        }
    }

    pub fn enabled(&self, t: Theorem) -> bool {
        if self.theorems.is_empty() {
            t != Theorem::Conjectures
        } else {
            self.theorems.contains(&t)
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.exhaustive > families::TREE_LIMIT {
            return Err(Error::BoundExceeded {
                what: "exhaustive tree size",
                size: self.exhaustive,
                limit: families::TREE_LIMIT,
            });
        }
        for (what, n) in [("random chordal size", self.n), ("caterpillar size", self.caterpillar_n)] {
            if n > families::RANDOM_LIMIT {
                return Err(Error::BoundExceeded {
                    what,
                    size: n,
                    limit: families::RANDOM_LIMIT,
                });
            }
        }
        if self.t_min < 2 || self.t_min > self.t_max {
            return Err(Error::invalid("t range", "2 ≤ t_min ≤ t_max"));
        }
        if self.n < 3 || self.caterpillar_n < 3 {
            return Err(Error::invalid("corpus sizes", "random graph sizes ≥ 3"));
        }
        if self.conjecture_t < 2 {
            return Err(Error::invalid("conjecture t", "t ≥ 2"));
        }
        Ok(())
    }

    pub fn oracle(&self) -> Oracle {
        Oracle::new(self.field).with_bound(self.bound)
    }
}

/// One graph of a corpus with where it came from.
#[derive(Clone, Debug)]
pub struct CorpusGraph {
    pub description: String,
    pub graph: Graph,
    pub family: Option<FamilySpec>,
    pub seed: Option<u64>,
}

impl CorpusGraph {
    fn instance(&self, t: usize, field: FieldSpec) -> Instance {
        let mut i = Instance::of_graph(self.description.clone(), &self.graph, Some(t), field);
        i.family = self.family.as_ref().map(ToString::to_string);
        i.seed = self.seed;
        i
    }
}

/// Trees up to `exhaustive`, seeded random chordal graphs and `K_3..K_7`.
pub fn chordal_corpus(c: &SuiteConfig) -> Result<Vec<CorpusGraph>> {
    let mut out = tree_corpus(c.exhaustive)?;
    let mut rng = ChaCha8Rng::seed_from_u64(c.seed);
    for k in 0..c.random {
        let n = rng.gen_range(3..=c.n);
        let s: u64 = rng.gen();
        out.push(CorpusGraph {
            description: format!("random chordal #{k} (n = {n})"),
            graph: families::random_chordal(n, s)?,
            family: None,
            seed: Some(s),
        });
    }
    for n in 3..=7 {
        let spec = FamilySpec::complete(n);
        out.push(CorpusGraph {
            description: spec.to_string(),
            graph: make_family(&spec)?,
            family: Some(spec),
            seed: None,
        });
    }
    Ok(out)
}

pub fn tree_corpus(n: usize) -> Result<Vec<CorpusGraph>> {
    Ok(enumerate_trees_up_to(n)?
        .into_iter()
        .enumerate()
        .map(|(k, g)| CorpusGraph {
            description: format!("tree #{k} (n = {})", g.n()),
            graph: g,
            family: None,
            seed: None,
        })
        .collect())
}

/// Seeded random caterpillars and all paths up to `paths` vertices.
pub fn caterpillar_corpus(c: &SuiteConfig) -> Result<Vec<CorpusGraph>> {
    let mut out = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(c.seed.wrapping_add(1));
    for k in 0..c.caterpillars {
        let n = rng.gen_range(3..=c.caterpillar_n);
        let s: u64 = rng.gen();
        let spec = families::random_caterpillar_spec(n, s)?;
        out.push(CorpusGraph {
            description: format!("random caterpillar #{k} ({spec})"),
            graph: make_family(&spec)?,
            family: Some(spec),
            seed: Some(s),
        });
    }
    for n in 1..=c.paths {
        let spec = FamilySpec::path(n);
        out.push(CorpusGraph {
            description: spec.to_string(),
            graph: make_family(&spec)?,
            family: Some(spec),
            seed: None,
        });
    }
    Ok(out)
}

/// Parameters of the family reproductions.
pub const TPRIME_CASES: [(usize, usize); 7] = [(4, 1), (4, 2), (4, 3), (4, 4), (5, 1), (5, 2), (5, 3)];
pub const GT_CASES: [usize; 3] = [3, 4, 5];
pub const TT_CASES: [(usize, usize, usize); 3] = [(4, 2, 2), (4, 3, 3), (5, 4, 2)];

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

impl Counts {
    fn add(&mut self, v: Verdict) {
        match v {
            Verdict::Pass => self.pass += 1,
            Verdict::Fail => self.fail += 1,
            Verdict::Skipped => self.skipped += 1,
        }
    }

    pub fn total(&self) -> usize {
        self.pass + self.fail + self.skipped
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub checks: Counts,
    pub skipped_for_bound: usize,
    pub by_check: BTreeMap<String, Counts>,
    /// Conjecture probes, reported separately and never failing the suite.
    pub probes: Counts,
    pub exit_code: i32,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteHeader {
    pub name: String,
    pub version: String,
    /// Seconds since the Unix epoch; dropped in comparison mode.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub started: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub suite: SuiteHeader,
    pub config: SuiteConfig,
    pub results: Vec<CheckResult>,
    pub summary: Summary,
}

/// Exit statuses of `verify`.
pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_SKIPPED: i32 = 3;

pub fn summarize(results: &[CheckResult]) -> Summary {
    let mut checks = Counts::default();
    let mut probes = Counts::default();
    let mut by_check: BTreeMap<String, Counts> = BTreeMap::new();
    let mut skipped_for_bound = 0;
    for r in results {
        by_check.entry(r.id.clone()).or_default().add(r.verdict);
        if r.is_probe() {
            probes.add(r.verdict);
        } else {
            checks.add(r.verdict);
            skipped_for_bound += r.skipped_for_bound() as usize;
        }
    }
    let exit_code = if checks.fail > 0 {
        EXIT_FAIL
    } else if skipped_for_bound > 0 {
        EXIT_SKIPPED
    } else {
        EXIT_PASS
    };
    Summary {
        checks,
        skipped_for_bound,
        by_check,
        probes,
        exit_code,
    }
}

impl Report {
    pub fn exit_code(&self) -> i32 {
        self.summary.exit_code
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.results
            .iter()
            .filter(|r| r.verdict == Verdict::Fail && !r.is_probe())
    }

    pub fn results_for<'a>(&'a self, id: &'a str) -> impl Iterator<Item = &'a CheckResult> + 'a {
        self.results.iter().filter(move |r| r.id == id)
    }

    /// The report with timing removed: identical configs give identical
    /// bytes.
    pub fn comparison_form(&self) -> Report {
        let mut r = self.clone();
        r.suite.started = None;
        for c in &mut r.results {
            c.millis = 0;
        }
        r
    }

    pub fn to_json(&self, comparison: bool) -> Result<String> {
        let r = if comparison { self.comparison_form() } else { self.clone() };
        Ok(serde_json::to_string_pretty(&r)?)
    }

    pub fn write_json(&self, path: &Path, comparison: bool) -> Result<()> {
        std::fs::write(path, self.to_json(comparison)?).map_err(|e| Error::io(path, e))
    }

    pub fn write_csv(&self, path: &Path) -> Result<()> {
        let io = |e: csv::Error| Error::invalid("csv", format!("{}: {e}", path.display()));
        let mut w = csv::Writer::from_path(path).map_err(io)?;
        w.write_record([
            "id", "description", "hash", "family", "t", "field", "seed", "verdict", "expected",
            "computed", "note", "millis",
        ])
        .map_err(io)?;
        for r in &self.results {
            let i = &r.instance;
            let verdict = serde_json::to_value(r.verdict)?;
            w.write_record([
                r.id.clone(),
                i.description.clone(),
                i.hash.clone(),
                i.family.clone().unwrap_or_default(),
                i.t.map(|t| t.to_string()).unwrap_or_default(),
                i.field.to_string(),
                i.seed.map(|s| s.to_string()).unwrap_or_default(),
                verdict.as_str().unwrap_or_default().to_string(),
                r.expected.to_string(),
                r.computed.to_string(),
                r.note.clone().unwrap_or_default(),
                r.millis.to_string(),
            ])
            .map_err(io)?;
        }
        w.flush().map_err(|e| Error::io(path, e))
    }
}

type Job<'a> = Box<dyn Fn() -> Result<CheckResult> + Send + Sync + 'a>;

fn run_jobs(jobs: Vec<Job<'_>>) -> Vec<CheckResult> {
    jobs.into_par_iter()
        .map(|job| {
            job().unwrap_or_else(|e| CheckResult {
                id: "error".into(),
                instance: Instance {
                    description: e.to_string(),
                    hash: String::new(),
                    graph: None,
                    ideal: None,
                    family: None,
                    t: None,
                    field: FieldSpec::GF2,
                    seed: None,
                },
                expected: serde_json::Value::Null,
                computed: serde_json::Value::Null,
                verdict: Verdict::Fail,
                note: Some(format!("error: {e}")),
                millis: 0,
            })
        })
        .collect()
}

/// Runs every enabled group and aggregates the results in a deterministic
/// order.
pub fn run_suite(c: &SuiteConfig) -> Result<Report> {
    c.validate()?;
    let o = c.oracle();
    let field = c.field;
    let chordal = if [Theorem::ChordalReg, Theorem::ChordalPd, Theorem::CmUnmixed, Theorem::Splitting]
        .iter()
        .any(|&t| c.enabled(t))
    {
        chordal_corpus(c)?
    } else {
        Vec::new()
    };
    let trees = if c.enabled(Theorem::TreeDualVs) {
        tree_corpus(c.exhaustive)?
    } else {
        Vec::new()
    };
    let cats = if c.enabled(Theorem::CaterpillarReg) {
        caterpillar_corpus(c)?
    } else {
        Vec::new()
    };
    let probe_trees = if c.enabled(Theorem::Conjectures) {
        tree_corpus(c.conjecture_n.min(families::TREE_LIMIT))?
    } else {
        Vec::new()
    };

    let mut jobs: Vec<Job> = Vec::new();
    let o = &o;
    for (th, f) in [
        (Theorem::ChordalReg, check_chordal_reg as fn(&Graph, &Oracle, Instance) -> Result<CheckResult>),
        (Theorem::ChordalPd, check_chordal_pd),
        (Theorem::CmUnmixed, check_cm_iff_unmixed),
    ] {
        if c.enabled(th) {
            for g in &chordal {
                jobs.push(Box::new(move || f(&g.graph, o, g.instance(3, field))));
            }
        }
    }
    if c.enabled(Theorem::TreeDualVs) {
        for g in &trees {
            jobs.push(Box::new(move || check_tree_dual_vs(&g.graph, g.instance(3, field))));
        }
    }
    if c.enabled(Theorem::CaterpillarReg) {
        for g in &cats {
            for t in c.t_min..=c.t_max {
                jobs.push(Box::new(move || check_caterpillar_reg(&g.graph, t, o, g.instance(t, field))));
            }
        }
    }
    if c.enabled(Theorem::Splitting) {
        for g in &chordal {
            jobs.push(Box::new(move || check_splitting_and_monotonicity(&g.graph, g.instance(3, field))));
        }
    }
    if c.enabled(Theorem::Families) {
        for (t, k) in TPRIME_CASES {
            jobs.push(Box::new(move || check_family_tprime(t, k, o)));
        }
        for t in GT_CASES {
            jobs.push(Box::new(move || check_family_gt(t, o)));
        }
        for (t, n, m) in TT_CASES {
            jobs.push(Box::new(move || check_family_tt(t, n, m, o)));
        }
    }
    if c.enabled(Theorem::Oracle) {
        for s in 0..c.antichains as u64 {
            jobs.push(Box::new(move || run_identity("dual-involution", s, o)));
        }
        for s in 0..c.bound_instances as u64 {
            jobs.push(Box::new(move || run_identity("lemma-bounds", s, o)));
        }
    }
    if c.enabled(Theorem::Lemmas) {
        for id in IDENTITY_IDS.iter().filter(|&&id| id != "dual-involution" && id != "lemma-bounds") {
            for s in 0..c.identities as u64 {
                jobs.push(Box::new(move || run_identity(id, s, o)));
            }
        }
    }
    if c.enabled(Theorem::Conjectures) {
        for g in &probe_trees {
            let t = c.conjecture_t;
            jobs.push(Box::new(move || probe_conjectures(&g.graph, t, o, g.instance(t, field))));
        }
    }
    let mut results = run_jobs(jobs);

    if c.enabled(Theorem::Oracle) {
        results.extend(oracle_integrity(&results, c, o)?);
    }

    let summary = summarize(&results);
    Ok(Report {
        suite: SuiteHeader {
            name: "path-ideals".into(),
            version: env!("CARGO_PKG_VERSION").into(),
            started: std::time::SystemTime::now()
                .duration_since(std::time::UNIX_EPOCH)
                .ok()
                .map(|d| d.as_secs()),
        },
        config: c.clone(),
        results,
        summary,
    })
}

/// Terai's formula and the splittable ⇒ componentwise linear ⇒ pd = bight
/// chain on every ideal `I_t(G)` touched by `results` with at most `terai_n`
/// variables, and GF(2)/rational agreement on the chordal ones.
pub fn oracle_integrity(results: &[CheckResult], c: &SuiteConfig, o: &Oracle) -> Result<Vec<CheckResult>> {
    let mut seen = HashSet::new();
    let mut touched = Vec::new();
    for r in results {
        let inst = &r.instance;
        let (Some(_), Some(t)) = (&inst.graph, inst.t) else { continue };
        if r.is_probe() {
            continue;
        }
        let g = inst.graph()?;
        if g.n() > c.terai_n {
            continue;
        }
        let i = path_ideal(&g, t)?;
        if seen.insert(i.canonical_key()) {
            let mut base = inst.clone();
            base.field = c.field;
            touched.push((i, g.chordal(), base));
        }
    }
    let mut jobs: Vec<Job> = Vec::new();
    for (i, chordal, inst) in &touched {
        jobs.push(Box::new(move || check_terai(i, o, inst.clone())));
        jobs.push(Box::new(move || check_implication_chain(i, o, inst.clone())));
        if *chordal {
            jobs.push(Box::new(move || check_field_agreement(i, o, inst.clone())));
        }
    }
    Ok(run_jobs(jobs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> SuiteConfig {
        SuiteConfig {
            exhaustive: 6,
            random: 6,
            n: 8,
            caterpillars: 4,
            caterpillar_n: 8,
            paths: 6,
            t_max: 4,
            identities: 5,
            antichains: 10,
            bound_instances: 5,
            conjecture_n: 6,
            theorems: Theorem::ALL.to_vec(),
            ..Default::default()
        }
    }

    #[test]
    fn small_suite_passes_and_is_deterministic() {
        let a = run_suite(&small()).unwrap();
        assert!(a.failures().next().is_none(), "{:?}", a.failures().collect::<Vec<_>>());
        assert_eq!(a.exit_code(), EXIT_PASS);
        assert!(a.summary.probes.total() > 0);
        let b = run_suite(&small()).unwrap();
        assert_eq!(a.to_json(true).unwrap(), b.to_json(true).unwrap());
    }

    #[test]
    fn low_bound_skips_rather_than_fails() {
        let c = SuiteConfig {
            bound: 6,
            theorems: vec![Theorem::ChordalReg],
            ..small()
        };
        let r = run_suite(&c).unwrap();
        assert_eq!(r.summary.checks.fail, 0);
        assert!(r.summary.skipped_for_bound > 0);
        assert_eq!(r.exit_code(), EXIT_SKIPPED);
    }

    #[test]
    fn theorem_names_roundtrip() {
        for t in Theorem::ALL {
            assert_eq!(t.as_str().parse::<Theorem>().unwrap(), t);
        }
        assert!("nope".parse::<Theorem>().is_err());
    }

    #[test]
    fn replay_reproduces_verdicts() {
        let r = run_suite(&small()).unwrap();
        let o = small().oracle();
        let mut seen = HashSet::new();
        for res in &r.results {
            if seen.insert(res.id.clone()) {
                let again = replay(res, &o).unwrap();
                assert_eq!(again.verdict, res.verdict, "{}", res.id);
                assert_eq!(again.computed, res.computed, "{}", res.id);
            }
        }
    }
}
