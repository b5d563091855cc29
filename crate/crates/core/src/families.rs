//! Named graph families, exhaustive tree enumeration and seeded random
//! generators.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::bits::{bit, ones, Mask};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default ceiling for the seeded random generators.
pub const RANDOM_LIMIT: usize = 14;
/// Default ceiling for exhaustive tree enumeration.
pub const TREE_LIMIT: usize = 9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FamilyName {
    #[serde(rename = "path")]
    Path,
    #[serde(rename = "cycle")]
    Cycle,
    #[serde(rename = "star")]
    Star,
    #[serde(rename = "complete")]
    Complete,
    #[serde(rename = "caterpillar")]
    Caterpillar,
    Tprime,
    Gt,
    Gtprime,
    Tt,
}

impl FamilyName {
    pub const ALL: [FamilyName; 9] = [
        FamilyName::Path,
        FamilyName::Cycle,
        FamilyName::Star,
        FamilyName::Complete,
        FamilyName::Caterpillar,
        FamilyName::Tprime,
        FamilyName::Gt,
        FamilyName::Gtprime,
        FamilyName::Tt,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FamilyName::Path => "path",
            FamilyName::Cycle => "cycle",
            FamilyName::Star => "star",
            FamilyName::Complete => "complete",
            FamilyName::Caterpillar => "caterpillar",
            FamilyName::Tprime => "Tprime",
            FamilyName::Gt => "Gt",
            FamilyName::Gtprime => "Gtprime",
            FamilyName::Tt => "Tt",
        }
    }
}

impl FromStr for FamilyName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilyName::ALL
            .into_iter()
            .find(|f| f.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| {
                Error::invalid(
                    "family name",
                    format!(
                        "`{s}` is not one of {}",
                        FamilyName::ALL.map(FamilyName::as_str).join(", ")
                    ),
                )
            })
    }
}

/// A family name with its integer parameters, written `name:p1,p2,...`.
///
/// | family        | parameters              | vertices                         |
/// |---------------|-------------------------|----------------------------------|
/// | `path`        | `n ≥ 1`                 | `x1..xn`                         |
/// | `cycle`       | `n ≥ 3`                 | `x1..xn`                         |
/// | `complete`    | `n ≥ 1`                 | `x1..xn`                         |
/// | `star`        | `m ≥ 2` (total)         | centre `w`, leaves `v1..v(m-1)`  |
/// | `caterpillar` | `r2,…,r(n-1)` (may be empty) | spine `x1..xn`, leaves `yi_j` |
/// | `Tprime`      | `t ≥ 4, k ≥ 1`          | `x1..x(t-2)`, `wj1`, `wj2`       |
/// | `Gt`          | `t ≥ 3`                 | `x1..x(2t-2)`, `a`, `b`          |
/// | `Gtprime`     | `t ≥ 3`                 | `Gt` minus `a`, plus `x(t-1)xt`  |
/// | `Tt`          | `t ≥ 3, n ≥ 1, m ≥ 1`   | `x1..x(t-2)`, `y1..yn`, `z1..zm` |
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilySpec {
    pub name: FamilyName,
    pub params: Vec<usize>,
}

impl FamilySpec {
    pub fn new(name: FamilyName, params: &[usize]) -> Self {
        FamilySpec {
            name,
            params: params.to_vec(),
        }
    }

    pub fn path(n: usize) -> Self {
        Self::new(FamilyName::Path, &[n])
    }
    pub fn cycle(n: usize) -> Self {
        Self::new(FamilyName::Cycle, &[n])
    }
    pub fn star(m: usize) -> Self {
        Self::new(FamilyName::Star, &[m])
    }
    pub fn complete(n: usize) -> Self {
        Self::new(FamilyName::Complete, &[n])
    }
    pub fn caterpillar(r: &[usize]) -> Self {
        Self::new(FamilyName::Caterpillar, r)
    }
    pub fn tprime(t: usize, k: usize) -> Self {
        Self::new(FamilyName::Tprime, &[t, k])
    }
    pub fn gt(t: usize) -> Self {
        Self::new(FamilyName::Gt, &[t])
    }
    pub fn gtprime(t: usize) -> Self {
        Self::new(FamilyName::Gtprime, &[t])
    }
    pub fn tt(t: usize, n: usize, m: usize) -> Self {
        Self::new(FamilyName::Tt, &[t, n, m])
    }

    pub fn build(&self) -> Result<Graph> {
        make_family(self)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self.params.iter().map(usize::to_string).collect();
        write!(f, "{}:{}", self.name.as_str(), params.join(","))
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, rest) = s.split_once(':').unwrap_or((s, ""));
        let name: FamilyName = name.trim().parse()?;
        let params = rest
            .split(',')
            .map(str::trim)
            .filter(|p| !p.is_empty())
            .map(|p| {
                p.parse::<usize>().map_err(|_| {
                    Error::invalid(
                        format!("family {}", name.as_str()),
                        format!("parameter `{p}` is not a non-negative integer"),
                    )
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(FamilySpec { name, params })
    }
}

/// Small edge-list builder used by the family constructors.
struct Builder {
    labels: Vec<String>,
    edges: Vec<(String, String)>,
}

impl Builder {
    fn new() -> Self {
        Builder {
            labels: Vec::new(),
            edges: Vec::new(),
        }
    }

    fn vertex(&mut self, l: impl Into<String>) -> String {
        let l = l.into();
        self.labels.push(l.clone());
        l
    }

    fn edge(&mut self, u: &str, v: &str) {
        self.edges.push((u.to_string(), v.to_string()));
    }

    fn path(&mut self, vs: &[String]) {
        for w in vs.windows(2) {
            self.edge(&w[0], &w[1]);
        }
    }

    fn finish(self) -> Result<Graph> {
        Graph::new(&self.labels, &self.edges)
    }
}

fn xs(b: &mut Builder, n: usize) -> Vec<String> {
    (1..=n).map(|i| b.vertex(format!("x{i}"))).collect()
}

fn arity(spec: &FamilySpec, k: usize, names: &str) -> Result<()> {
    if spec.params.len() != k {
        return Err(Error::invalid(
            format!("family {}", spec.name.as_str()),
            format!("expected parameters ({names}), got {}", spec.params.len()),
        ));
    }
    Ok(())
}

fn at_least(spec: &FamilySpec, what: &str, v: usize, min: usize) -> Result<()> {
    if v < min {
        return Err(Error::invalid(
            format!("family {}", spec.name.as_str()),
            format!("{what} ≥ {min} (got {v})"),
        ));
    }
    Ok(())
}

/// Builds the graph named by `spec`; see [`FamilySpec`] for the parameter
/// conventions and labels.
pub fn make_family(spec: &FamilySpec) -> Result<Graph> {
    let p = &spec.params;
    let mut b = Builder::new();
    match spec.name {
        FamilyName::Path | FamilyName::Cycle | FamilyName::Complete => {
            arity(spec, 1, "n")?;
            let n = p[0];
            let min = if spec.name == FamilyName::Cycle { 3 } else { 1 };
            at_least(spec, "n", n, min)?;
            let x = xs(&mut b, n);
            match spec.name {
                FamilyName::Path => b.path(&x),
                FamilyName::Cycle => {
                    b.path(&x);
                    b.edge(&x[n - 1], &x[0]);
                }
                _ => {
                    for i in 0..n {
                        for j in i + 1..n {
                            b.edge(&x[i], &x[j]);
                        }
                    }
                }
            }
        }
        FamilyName::Star => {
            arity(spec, 1, "m")?;
            at_least(spec, "m", p[0], 2)?;
            let w = b.vertex("w");
            for i in 1..p[0] {
                let v = b.vertex(format!("v{i}"));
                b.edge(&w, &v);
            }
        }
        FamilyName::Caterpillar => {
            let n = p.len() + 2;
            let x = xs(&mut b, n);
            b.path(&x);
            for (k, &r) in p.iter().enumerate() {
                let i = k + 2;
                for j in 1..=r {
                    let y = b.vertex(format!("y{i}_{j}"));
                    b.edge(&x[i - 1], &y);
                }
            }
        }
        FamilyName::Tprime => {
            arity(spec, 2, "t, k")?;
            let (t, k) = (p[0], p[1]);
            at_least(spec, "t", t, 4)?;
            at_least(spec, "k", k, 1)?;
            let x = xs(&mut b, t - 2);
            b.path(&x);
            for j in 1..=k {
                let w1 = b.vertex(format!("w{j}1"));
                let w2 = b.vertex(format!("w{j}2"));
                b.edge(&x[t - 3], &w1);
                b.edge(&w1, &w2);
            }
        }
        FamilyName::Gt | FamilyName::Gtprime => {
            arity(spec, 1, "t")?;
            let t = p[0];
            at_least(spec, "t", t, 3)?;
            let x = xs(&mut b, 2 * t - 2);
            b.path(&x[..t - 1]);
            b.path(&x[t - 1..]);
            let bb = b.vertex("b");
            b.edge(&x[t - 2], &bb);
            b.edge(&bb, &x[t - 1]);
            if spec.name == FamilyName::Gt {
                let a = b.vertex("a");
                b.edge(&x[t - 2], &a);
                b.edge(&a, &x[t - 1]);
                b.edge(&a, &bb);
            } else {
                b.edge(&x[t - 2], &x[t - 1]);
            }
        }
        FamilyName::Tt => {
            arity(spec, 3, "t, n, m")?;
            let (t, n, m) = (p[0], p[1], p[2]);
            at_least(spec, "t", t, 3)?;
            at_least(spec, "n", n, 1)?;
            at_least(spec, "m", m, 1)?;
            let x = xs(&mut b, t - 2);
            b.path(&x);
            for j in 1..=n {
                let y = b.vertex(format!("y{j}"));
                b.edge(&x[0], &y);
            }
            for k in 1..=m {
                let z = b.vertex(format!("z{k}"));
                b.edge(&x[t - 3], &z);
            }
        }
    }
    b.finish()
}

fn limit_check(what: &'static str, n: usize, limit: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::invalid(what, "n ≥ 1"));
    }
    if n > limit {
        return Err(Error::BoundExceeded {
            what,
            size: n,
            limit,
        });
    }
    Ok(())
}

/// Adjacency lists of a tree on `0..n`.
type Adj = Vec<Vec<usize>>;

fn tree_centers(adj: &Adj) -> Vec<usize> {
    let n = adj.len();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut deg: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut leaves: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= leaves.len();
        for &l in &leaves {
            deg[l] = 0;
        }
        let mut next = Vec::new();
        for &l in &leaves {
            for &u in &adj[l] {
                if deg[u] > 0 {
                    deg[u] -= 1;
                    if deg[u] == 1 {
                        next.push(u);
                    }
                }
            }
        }
        leaves = next;
    }
    leaves.sort_unstable();
    leaves
}

fn ahu(adj: &Adj, v: usize, parent: usize) -> String {
    let mut kids: Vec<String> = adj[v]
        .iter()
        .filter(|&&u| u != parent)
        .map(|&u| ahu(adj, u, v))
        .collect();
    kids.sort_unstable();
    format!("({})", kids.concat())
}

/// AHU encoding of an unrooted tree, rooted at its centre (the smaller of the
/// two encodings for bicentral trees).
fn tree_code(adj: &Adj) -> String {
    tree_centers(adj)
        .into_iter()
        .map(|c| ahu(adj, c, usize::MAX))
        .min()
        .unwrap_or_default()
}

fn tree_graph(adj: &Adj) -> Graph {
    let labels: Vec<String> = (1..=adj.len()).map(|i| format!("v{i}")).collect();
    let mut edges = Vec::new();
    for (u, nb) in adj.iter().enumerate() {
        for &v in nb {
            if u < v {
                edges.push((labels[u].clone(), labels[v].clone()));
            }
        }
    }
    Graph::new(&labels, &edges).expect("tree construction is valid")
}

/// One representative per isomorphism class of trees on `n` vertices, with
/// labels `v1..vn`. Classes are grown by leaf addition and deduplicated by
/// their centre-rooted AHU encoding.
pub fn enumerate_trees(n: usize) -> Result<Vec<Graph>> {
    enumerate_trees_limited(n, TREE_LIMIT)
}

pub fn enumerate_trees_limited(n: usize, limit: usize) -> Result<Vec<Graph>> {
    limit_check("tree enumeration size", n, limit)?;
    let mut level: Vec<Adj> = vec![vec![Vec::new()]];
    for size in 2..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for tree in &level {
            for v in 0..tree.len() {
                let mut grown = tree.clone();
                grown.push(vec![v]);
                grown[v].push(size - 1);
                if seen.insert(tree_code(&grown)) {
                    next.push(grown);
                }
            }
        }
        level = next;
    }
    Ok(level.iter().map(tree_graph).collect())
}

/// Trees of every size `1..=n`.
pub fn enumerate_trees_up_to(n: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for k in 1..=n {
        out.extend(enumerate_trees(k)?);
    }
    Ok(out)
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Decodes a Prüfer sequence over `0..seq.len()+2` into tree edges.
pub fn prufer_edges(seq: &[usize]) -> Vec<(usize, usize)> {
    let n = seq.len() + 2;
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf exists");
        edges.push((leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let last: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((last[0], last[1]));
    edges
}

fn labeled(n: usize, edges: &[(usize, usize)]) -> Graph {
    let labels: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
    let edges: Vec<(String, String)> = edges
        .iter()
        .map(|&(u, v)| (labels[u].clone(), labels[v].clone()))
        .collect();
    Graph::new(&labels, &edges).expect("generated graph is valid")
}

/// A labeled tree drawn uniformly via a random Prüfer sequence.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    limit_check("random tree size", n, RANDOM_LIMIT)?;
    if n == 1 {
        return Ok(labeled(1, &[]));
    }
    let mut r = rng(seed);
    let seq: Vec<usize> = (0..n - 2).map(|_| r.gen_range(0..n)).collect();
    Ok(labeled(n, &prufer_edges(&seq)))
}

/// Grows a chordal graph: each new vertex is joined to a uniformly sized
/// random subset of a random clique of the current graph.
pub fn random_chordal(n: usize, seed: u64) -> Result<Graph> {
    limit_check("random chordal size", n, RANDOM_LIMIT)?;
    let mut r = rng(seed);
    let mut adj: Vec<Mask> = vec![0];
    let mut edges = Vec::new();
    for v in 1..n {
        let start = r.gen_range(0..v);
        let mut clique = vec![start];
        let mut cand = adj[start];
        while cand != 0 {
            let pool: Vec<usize> = ones(cand).collect();
            let c = *pool.choose(&mut r).expect("nonempty pool");
            clique.push(c);
            cand &= adj[c];
        }
        let k = r.gen_range(1..=clique.len());
        let chosen: Vec<usize> = clique.choose_multiple(&mut r, k).copied().collect();
        adj.push(0);
        for u in chosen {
            adj[u] |= bit(v);
            adj[v] |= bit(u);
            edges.push((u, v));
        }
    }
    Ok(labeled(n, &edges))
}

/// The family spec of a random caterpillar on `n` vertices: a spine of random
/// length with the remaining vertices hung as leaves on interior spine
/// vertices.
pub fn random_caterpillar_spec(n: usize, seed: u64) -> Result<FamilySpec> {
    limit_check("random caterpillar size", n, RANDOM_LIMIT)?;
    if n <= 2 {
        return Ok(FamilySpec::path(n));
    }
    let mut r = rng(seed);
    let spine = r.gen_range(3..=n);
    let mut counts = vec![0usize; spine - 2];
    for _ in 0..n - spine {
        let i = r.gen_range(0..counts.len());
        counts[i] += 1;
    }
    Ok(FamilySpec::caterpillar(&counts))
}

pub fn random_caterpillar(n: usize, seed: u64) -> Result<Graph> {
    make_family(&random_caterpillar_spec(n, seed)?)
}
