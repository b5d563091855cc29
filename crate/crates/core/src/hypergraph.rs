//! Simple hypergraphs: the t-path and t-connected hypergraphs of a graph,
//! minimal vertex covers, Alexander-dual hypergraphs and induced matchings.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bits::{self, bit, ones, Mask, MAX_VERTICES};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle::SimplicialComplex;

/// Default vertex bound for transversal enumeration.
pub const COVER_BOUND: usize = 24;
/// Default vertex bound for the induced matching search.
pub const MATCHING_BOUND: usize = 20;

/// A vertex set (sorted labels) with an antichain of edges.
///
/// The edge list `[∅]` is the distinguished *unit* hypergraph, whose edge
/// ideal is the whole ring; it is the dual of an edgeless hypergraph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    labels: Vec<String>,
    edges: Vec<Mask>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchingWitness {
    pub edges: Vec<Vec<String>>,
    pub size: usize,
}

impl Hypergraph {
    /// Builds a hypergraph from labels and label lists. Non-minimal edges are
    /// dropped so the result is an antichain.
    pub fn new<S: AsRef<str>>(labels: &[S], edges: &[Vec<S>]) -> Result<Self> {
        let g = Graph::new(labels, &[])?;
        let masks = edges
            .iter()
            .map(|e| g.vertex_set(e))
            .collect::<Result<Vec<_>>>()?;
        Ok(Hypergraph::from_masks(g.labels().to_vec(), masks))
    }

    /// Internal constructor over sorted labels; edges are minimalized.
    pub(crate) fn from_masks(labels: Vec<String>, edges: impl IntoIterator<Item = Mask>) -> Self {
        debug_assert!(labels.windows(2).all(|w| w[0] < w[1]));
        let all = bits::full(labels.len());
        let edges = bits::minimalize(edges);
        debug_assert!(edges.iter().all(|&e| bits::is_subset(e, all)));
        Hypergraph { labels, edges }
    }

    pub fn edgeless(labels: Vec<String>) -> Self {
        Hypergraph::from_masks(labels, [])
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn edges(&self) -> &[Mask] {
        &self.edges
    }

    pub fn is_unit(&self) -> bool {
        self.edges == [0]
    }

    pub fn is_edgeless(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .binary_search_by(|l| l.as_str().cmp(label))
            .map_err(|_| Error::UnknownVertex(label.to_string()))
    }

    pub fn vertex_set<S: AsRef<str>>(&self, labels: &[S]) -> Result<Mask> {
        labels
            .iter()
            .try_fold(0, |acc, l| Ok(acc | bit(self.index_of(l.as_ref())?)))
    }

    pub fn labels_of(&self, m: Mask) -> Vec<String> {
        ones(m).map(|i| self.labels[i].clone()).collect()
    }

    pub fn edge_labels(&self) -> Vec<Vec<String>> {
        self.edges.iter().map(|&e| self.labels_of(e)).collect()
    }

    /// `H ∖ A`: drops the vertices of `A` and every edge meeting `A`.
    pub fn without(&self, a: Mask) -> Hypergraph {
        let keep = bits::full(self.n()) & !a;
        Hypergraph::from_masks(
            self.labels_of(keep),
            self.edges
                .iter()
                .filter(|&&e| e & a == 0)
                .map(|&e| bits::compress(e, keep)),
        )
    }

    /// Same edges over an enlarged, sorted vertex list.
    pub fn with_labels(&self, labels: &[String]) -> Result<Hypergraph> {
        let table = self
            .labels
            .iter()
            .map(|l| {
                labels
                    .binary_search(l)
                    .map(Some)
                    .map_err(|_| Error::UnknownVertex(l.clone()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Hypergraph::from_masks(
            labels.to_vec(),
            self.edges.iter().map(|&e| bits::remap(e, &table)),
        ))
    }

    /// Writes the `ideal <n>` text format.
    pub fn to_text(&self) -> String {
        let mut s = format!("ideal {}\n{}\n", self.n(), self.labels.join(" "));
        for &e in &self.edges {
            let mut line = String::from("g");
            for l in self.labels_of(e) {
                line.push(' ');
                line.push_str(&l);
            }
            s.push_str(&line);
            s.push('\n');
        }
        s
    }

    /// Parses the `ideal <n>` text format: header, label line, then one
    /// `g <v1> <v2> ...` line per generator (a bare `g` is the unit generator).
    pub fn from_text(text: &str) -> Result<Hypergraph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let (hline, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            message: "missing `ideal <n>` header".into(),
        })?;
        let mut head = header.split_whitespace();
        if head.next() != Some("ideal") {
            return Err(Error::Parse {
                line: hline,
                message: "expected `ideal <n>`".into(),
            });
        }
        let n: usize = head
            .next()
            .and_then(|x| x.parse().ok())
            .ok_or(Error::Parse {
                line: hline,
                message: "variable count is not an integer".into(),
            })?;
        let labels: Vec<String> = if n == 0 {
            Vec::new()
        } else {
            let (lline, l) = lines.next().ok_or(Error::Parse {
                line: hline + 1,
                message: "missing label line".into(),
            })?;
            let labels: Vec<String> = l.split_whitespace().map(str::to_string).collect();
            if labels.len() != n {
                return Err(Error::Parse {
                    line: lline,
                    message: format!("expected {n} labels, found {}", labels.len()),
                });
            }
            labels
        };
        let base = Graph::new(&labels, &[]).map_err(|e| Error::Parse {
            line: hline + 1,
            message: e.to_string(),
        })?;
        let mut gens = Vec::new();
        for (ln, l) in lines {
            let mut parts = l.split_whitespace();
            if parts.next() != Some("g") {
                return Err(Error::Parse {
                    line: ln,
                    message: format!("expected `g <v1> ...`, found `{l}`"),
                });
            }
            let vs: Vec<&str> = parts.collect();
            gens.push(base.vertex_set(&vs).map_err(|e| Error::Parse {
                line: ln,
                message: e.to_string(),
            })?);
        }
        Ok(Hypergraph::from_masks(base.labels().to_vec(), gens))
    }
}

impl fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self
            .edges
            .iter()
            .map(|&e| format!("{{{}}}", self.labels_of(e).join(",")))
            .collect();
        write!(f, "H[{}; {}]", self.labels.join(" "), edges.join(" "))
    }
}

/// `P_t(G)`: vertex sets of all `t`-vertex paths (not necessarily induced).
pub fn path_hypergraph(g: &Graph, t: usize) -> Result<Hypergraph> {
    if t < 2 {
        return Err(Error::invalid("path hypergraph", "t ≥ 2"));
    }
    Ok(Hypergraph::from_masks(g.labels().to_vec(), path_sets(g, t)))
}

/// Distinct vertex sets of `t`-vertex paths, in no particular order.
pub(crate) fn path_sets(g: &Graph, t: usize) -> Vec<Mask> {
    let mut found = HashSet::new();
    if t == 0 || t > g.n() {
        return Vec::new();
    }
    let mut seen = HashSet::new();
    fn dfs(
        g: &Graph,
        t: usize,
        mask: Mask,
        last: usize,
        seen: &mut HashSet<(Mask, usize)>,
        found: &mut HashSet<Mask>,
    ) {
        if !seen.insert((mask, last)) {
            return;
        }
        if bits::count(mask) == t {
            found.insert(mask);
            return;
        }
        for u in ones(g.neighbors(last) & !mask) {
            dfs(g, t, mask | bit(u), u, seen, found);
        }
    }
    for v in 0..g.n() {
        dfs(g, t, bit(v), v, &mut seen, &mut found);
    }
    found.into_iter().collect()
}

/// All `t`-subsets inducing a connected subgraph.
pub fn connected_hypergraph(g: &Graph, t: usize) -> Result<Hypergraph> {
    if t < 2 {
        return Err(Error::invalid("connected hypergraph", "t ≥ 2"));
    }
    Ok(Hypergraph::from_masks(
        g.labels().to_vec(),
        connected_sets(g, t),
    ))
}

pub(crate) fn connected_sets(g: &Graph, t: usize) -> Vec<Mask> {
    if t == 0 || t > g.n() {
        return Vec::new();
    }
    let mut layer: HashSet<Mask> = (0..g.n()).map(bit).collect();
    for _ in 1..t {
        let mut next = HashSet::new();
        for &s in &layer {
            let frontier = g.closed_nbhd_mask(s) & !s;
            for u in ones(frontier) {
                next.insert(s | bit(u));
            }
        }
        layer = next;
    }
    layer.into_iter().collect()
}

/// `Ind_r(G)`: vertex sets whose induced components all have at most `r`
/// vertices, returned by its facets.
pub fn independence_complex(g: &Graph, r: usize) -> Result<SimplicialComplex> {
    if r < 1 {
        return Err(Error::invalid("independence complex", "r ≥ 1"));
    }
    let n = g.n();
    let addable = |w: Mask, v: usize| bits::count(g.component_of(v, w | bit(v))) <= r;
    let mut facets = Vec::new();
    // depth-first over include/exclude decisions, keeping only maximal faces
    fn rec(
        v: usize,
        n: usize,
        w: Mask,
        addable: &dyn Fn(Mask, usize) -> bool,
        facets: &mut Vec<Mask>,
    ) {
        if v == n {
            let maximal = (0..n).all(|u| w & bit(u) != 0 || !addable(w, u));
            if maximal {
                facets.push(w);
            }
            return;
        }
        if addable(w, v) {
            rec(v + 1, n, w | bit(v), addable, facets);
        }
        rec(v + 1, n, w, addable, facets);
    }
    rec(0, n, 0, &addable, &mut facets);
    Ok(SimplicialComplex::from_masks(g.labels().to_vec(), facets))
}

fn bound(what: &'static str, size: usize, limit: usize) -> Result<()> {
    if size > limit.min(MAX_VERTICES) {
        return Err(Error::BoundExceeded { what, size, limit });
    }
    Ok(())
}

/// All inclusion-minimal transversals of `H`, canonically sorted. Edgeless
/// hypergraphs have the single cover `∅`; the unit hypergraph has none.
pub fn minimal_vertex_covers(h: &Hypergraph) -> Result<Vec<Mask>> {
    minimal_vertex_covers_bounded(h, COVER_BOUND)
}

pub fn minimal_vertex_covers_bounded(h: &Hypergraph, limit: usize) -> Result<Vec<Mask>> {
    bound("hypergraph vertex count for transversals", h.n(), limit)?;
    Ok(transversals(h.edges()))
}

/// Berge's incremental transversal computation over an edge list.
pub(crate) fn transversals(edges: &[Mask]) -> Vec<Mask> {
    if edges.contains(&0) {
        return Vec::new();
    }
    let mut order = edges.to_vec();
    order.sort_by_key(|e| (bits::count(*e), *e));
    let mut covers: Vec<Mask> = vec![0];
    for e in order {
        let (hit, miss): (Vec<Mask>, Vec<Mask>) = covers.iter().partition(|&&c| c & e != 0);
        if miss.is_empty() {
            continue;
        }
        let mut cand: Vec<Mask> = miss
            .iter()
            .flat_map(|&c| ones(e).map(move |v| c | bit(v)))
            .filter(|&x| !hit.iter().any(|&h| bits::is_subset(h, x)))
            .collect();
        cand.sort_unstable_by_key(|m| (bits::count(*m), *m));
        cand.dedup();
        let mut kept = hit;
        let start = kept.len();
        for x in cand {
            if !kept[start..].iter().any(|&k| bits::is_subset(k, x)) {
                kept.push(x);
            }
        }
        covers = kept;
    }
    bits::sort_canonical(&mut covers);
    covers
}

/// `(ht, bight)`: the smallest and largest minimal cover sizes. The edgeless
/// hypergraph gives `(0, 0)`, and so does the unit hypergraph, which has no
/// covers at all.
pub fn height_bight(h: &Hypergraph) -> Result<(usize, usize)> {
    let covers = minimal_vertex_covers(h)?;
    Ok(cover_extremes(&covers))
}

pub(crate) fn cover_extremes(covers: &[Mask]) -> (usize, usize) {
    let sizes = covers.iter().map(|&c| bits::count(c));
    (
        sizes.clone().min().unwrap_or(0),
        sizes.max().unwrap_or(0),
    )
}

/// `H^∨`: same vertices, edges the minimal vertex covers of `H`.
pub fn dual_hypergraph(h: &Hypergraph) -> Result<Hypergraph> {
    let covers = minimal_vertex_covers(h)?;
    Ok(Hypergraph::from_masks(h.labels.clone(), covers))
}

pub fn delete_vertices_hypergraph<S: AsRef<str>>(h: &Hypergraph, a: &[S]) -> Result<Hypergraph> {
    Ok(h.without(h.vertex_set(a)?))
}

/// Checks a candidate induced matching directly: pairwise disjoint edges of
/// `H` whose union contains no other edge.
pub fn is_induced_matching(h: &Hypergraph, chosen: &[Mask]) -> bool {
    let mut union: Mask = 0;
    for &e in chosen {
        if !h.edges.contains(&e) || e & union != 0 {
            return false;
        }
        union |= e;
    }
    h.edges
        .iter()
        .filter(|&&e| bits::is_subset(e, union))
        .count()
        == chosen.len()
}

/// `ν(H)` by exact branch and bound, with a witness.
pub fn max_induced_matching(h: &Hypergraph) -> Result<(usize, MatchingWitness)> {
    max_induced_matching_bounded(h, MATCHING_BOUND)
}

pub fn max_induced_matching_bounded(
    h: &Hypergraph,
    limit: usize,
) -> Result<(usize, MatchingWitness)> {
    bound("hypergraph vertex count for induced matchings", h.n(), limit)?;
    let best = induced_matching_masks(h.edges());
    let witness = MatchingWitness {
        edges: best.iter().map(|&e| h.labels_of(e)).collect(),
        size: best.len(),
    };
    debug_assert!(is_induced_matching(h, &best));
    Ok((best.len(), witness))
}

pub(crate) fn induced_matching_masks(edges: &[Mask]) -> Vec<Mask> {
    if edges.is_empty() || edges == [0] {
        return Vec::new();
    }
    let overlap = |e: Mask| edges.iter().filter(|&&f| f & e != 0).count();
    let mut order: Vec<Mask> = edges.to_vec();
    order.sort_by(|a, b| overlap(*a).cmp(&overlap(*b)).then(bits::canonical_cmp(a, b)));
    let min_size = order.iter().map(|&e| bits::count(e)).min().unwrap_or(1).max(1);

    struct Search<'a> {
        order: &'a [Mask],
        all: &'a [Mask],
        min_size: usize,
        best: Vec<Mask>,
        cur: Vec<Mask>,
    }

    impl Search<'_> {
        fn run(&mut self, idx: usize, union: Mask) {
            if self.cur.len() > self.best.len() {
                self.best = self.cur.clone();
            }
            let compatible: Vec<usize> = (idx..self.order.len())
                .filter(|&i| self.order[i] & union == 0)
                .collect();
            let free: Mask = compatible.iter().fold(0, |acc, &i| acc | self.order[i]);
            let by_vertices = bits::count(free) / self.min_size;
            if self.cur.len() + compatible.len().min(by_vertices) <= self.best.len() {
                return;
            }
            for (pos, &i) in compatible.iter().enumerate() {
                let e = self.order[i];
                let u = union | e;
                let inside = self.all.iter().filter(|&&f| bits::is_subset(f, u)).count();
                if inside != self.cur.len() + 1 {
                    continue;
                }
                if self.cur.len() + compatible.len() - pos <= self.best.len() {
                    return;
                }
                self.cur.push(e);
                self.run(i + 1, u);
                self.cur.pop();
            }
        }
    }

    let mut s = Search {
        order: &order,
        all: edges,
        min_size,
        best: Vec::new(),
        cur: Vec::new(),
    };
    s.run(0, 0);
    let mut best = s.best;
    bits::sort_canonical(&mut best);
    best
}

/// `ν_t(G) = ν(P_t(G))`.
pub fn nu_t(g: &Graph, t: usize) -> Result<usize> {
    Ok(max_induced_matching(&path_hypergraph(g, t)?)?.0)
}
