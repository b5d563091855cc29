//! Finite simple graphs over opaque string labels.
//!
//! Vertices are kept sorted lexicographically by label and adjacency is a
//! bitmask per vertex, so every set-valued operation comes in two flavours: a
//! mask-level one (`*_mask`, infallible, used internally) and a label-level
//! one that rejects unknown labels.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;

use crate::bits::{self, bit, ones, Mask, MAX_VERTICES};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    labels: Vec<String>,
    adj: Vec<Mask>,
}

/// A tree seen from a chosen root: `level(root) = 1`, and the level of `z` is
/// the number of vertices on the unique root–`z` path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedView {
    pub root: usize,
    pub level: Vec<usize>,
    pub height: usize,
}

impl Graph {
    /// Builds a graph from labels and label pairs. Edges are deduplicated and
    /// order-normalised; duplicate labels, dangling endpoints and self-loops
    /// are rejected.
    pub fn new<S: AsRef<str>>(labels: &[S], edges: &[(S, S)]) -> Result<Self> {
        let mut sorted: Vec<String> = labels.iter().map(|s| s.as_ref().to_string()).collect();
        sorted.sort();
        for w in sorted.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateLabel(w[0].clone()));
            }
        }
        if sorted.len() > MAX_VERTICES {
            return Err(Error::BoundExceeded {
                what: "graph vertex count",
                size: sorted.len(),
                limit: MAX_VERTICES,
            });
        }
        let index: HashMap<&str, usize> = sorted
            .iter()
            .enumerate()
            .map(|(i, l)| (l.as_str(), i))
            .collect();
        let mut adj = vec![0; sorted.len()];
        for (u, v) in edges {
            let (u, v) = (u.as_ref(), v.as_ref());
            let iu = *index
                .get(u)
                .ok_or_else(|| Error::UnknownVertex(u.to_string()))?;
            let iv = *index
                .get(v)
                .ok_or_else(|| Error::UnknownVertex(v.to_string()))?;
            if iu == iv {
                return Err(Error::SelfLoop(u.to_string()));
            }
            adj[iu] |= bit(iv);
            adj[iv] |= bit(iu);
        }
        Ok(Graph {
            labels: sorted,
            adj,
        })
    }

    /// Internal constructor from already sorted labels and a symmetric adjacency.
    pub(crate) fn from_parts(labels: Vec<String>, adj: Vec<Mask>) -> Self {
        debug_assert!(labels.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(adj
            .iter()
            .enumerate()
            .all(|(i, &a)| a & bit(i) == 0 && ones(a).all(|j| adj[j] & bit(i) != 0)));
        Graph { labels, adj }
    }

    pub fn empty() -> Self {
        Graph {
            labels: Vec::new(),
            adj: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn all(&self) -> Mask {
        bits::full(self.n())
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

    pub fn neighbors(&self, v: usize) -> Mask {
        self.adj[v]
    }

    pub fn adjacency(&self) -> &[Mask] {
        &self.adj
    }

    pub fn degree(&self, v: usize) -> usize {
        bits::count(self.adj[v])
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & bit(v) != 0
    }

    /// Edges as index pairs `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n())
            .flat_map(|u| ones(self.adj[u] >> u).filter(|&d| d > 0).map(move |d| (u, u + d)))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| bits::count(*a)).sum::<usize>() / 2
    }

    /// `S ∪ {b : b adjacent to some a ∈ S}`.
    pub fn closed_nbhd_mask(&self, s: Mask) -> Mask {
        ones(s).fold(s, |acc, v| acc | self.adj[v])
    }

    pub fn closed_neighborhood<S: AsRef<str>>(&self, s: &[S]) -> Result<Vec<String>> {
        let m = self.vertex_set(s)?;
        Ok(self.labels_of(self.closed_nbhd_mask(m)))
    }

    /// `G ∖ S`: the induced subgraph on the complement of `S`.
    pub fn without_vertices(&self, s: Mask) -> Graph {
        self.induced(self.all() & !s)
    }

    pub fn delete_vertices<S: AsRef<str>>(&self, s: &[S]) -> Result<Graph> {
        Ok(self.without_vertices(self.vertex_set(s)?))
    }

    /// `G[W]`, re-indexed so that labels stay sorted.
    pub fn induced(&self, w: Mask) -> Graph {
        let w = w & self.all();
        let labels = self.labels_of(w);
        let adj = ones(w)
            .map(|v| bits::compress(self.adj[v] & w, w))
            .collect();
        Graph::from_parts(labels, adj)
    }

    pub fn induced_subgraph<S: AsRef<str>>(&self, w: &[S]) -> Result<Graph> {
        Ok(self.induced(self.vertex_set(w)?))
    }

    /// `G − F` on index pairs; pairs that are not edges are ignored.
    pub fn without_edges(&self, f: &[(usize, usize)]) -> Graph {
        let mut adj = self.adj.clone();
        for &(u, v) in f {
            adj[u] &= !bit(v);
            adj[v] &= !bit(u);
        }
        Graph::from_parts(self.labels.clone(), adj)
    }

    pub fn delete_edges<S: AsRef<str>>(&self, f: &[(S, S)]) -> Result<Graph> {
        let mut idx = Vec::with_capacity(f.len());
        for (u, v) in f {
            let (iu, iv) = (self.index_of(u.as_ref())?, self.index_of(v.as_ref())?);
            if !self.has_edge(iu, iv) {
                return Err(Error::UnknownEdge(
                    u.as_ref().to_string(),
                    v.as_ref().to_string(),
                ));
            }
            idx.push((iu, iv));
        }
        Ok(self.without_edges(&idx))
    }

    /// Vertex-disjoint union. Labels of the two graphs must not collide.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let labels: Vec<&str> = self
            .labels
            .iter()
            .chain(other.labels.iter())
            .map(String::as_str)
            .collect();
        let edges: Vec<(&str, &str)> = self
            .edges()
            .into_iter()
            .map(|(u, v)| (self.label(u), self.label(v)))
            .chain(
                other
                    .edges()
                    .into_iter()
                    .map(|(u, v)| (other.label(u), other.label(v))),
            )
            .collect();
        Graph::new(&labels, &edges)
    }

    /// Copy of the graph with every label prefixed.
    pub fn relabeled(&self, prefix: &str) -> Graph {
        let labels: Vec<String> = self.labels.iter().map(|l| format!("{prefix}{l}")).collect();
        let edges: Vec<(String, String)> = self
            .edges()
            .into_iter()
            .map(|(u, v)| (labels[u].clone(), labels[v].clone()))
            .collect();
        Graph::new(&labels, &edges).expect("prefixing preserves validity")
    }

    pub fn is_clique(&self, s: Mask) -> bool {
        ones(s).all(|v| bits::is_subset(s & !bit(v), self.adj[v]))
    }

    /// Connected components as vertex masks, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Mask> {
        let mut seen: Mask = 0;
        let mut out = Vec::new();
        for v in 0..self.n() {
            if seen & bit(v) != 0 {
                continue;
            }
            let c = self.component_of(v, self.all());
            seen |= c;
            out.push(c);
        }
        out
    }

    /// The component of `v` inside `G[within]`.
    pub fn component_of(&self, v: usize, within: Mask) -> Mask {
        let mut comp = bit(v);
        let mut frontier = bit(v);
        while frontier != 0 {
            let next = ones(frontier).fold(0, |acc, u| acc | self.adj[u]) & within & !comp;
            comp |= next;
            frontier = next;
        }
        comp
    }

    pub fn is_connected_set(&self, s: Mask) -> bool {
        s == 0 || self.component_of(s.trailing_zeros() as usize, s) == s
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_set(self.all())
    }

    pub fn is_tree(&self) -> bool {
        self.n() >= 1 && self.is_connected() && self.edge_count() + 1 == self.n()
    }

    /// Maximum cardinality search. Returns the chordality flag and, for chordal
    /// graphs, a perfect elimination order: each vertex is simplicial in the
    /// subgraph induced by itself and the vertices after it.
    pub fn is_chordal(&self) -> (bool, Option<Vec<usize>>) {
        let n = self.n();
        let mut weight = vec![0usize; n];
        let mut numbered: Mask = 0;
        let mut visit = Vec::with_capacity(n);
        for _ in 0..n {
            let v = (0..n)
                .filter(|&v| numbered & bit(v) == 0)
                .max_by(|&a, &b| weight[a].cmp(&weight[b]).then(b.cmp(&a)))
                .expect("unnumbered vertex remains");
            numbered |= bit(v);
            visit.push(v);
            for u in ones(self.adj[v] & !numbered) {
                weight[u] += 1;
            }
        }
        visit.reverse();
        let mut later = self.all();
        for &v in &visit {
            later &= !bit(v);
            if !self.is_clique(self.adj[v] & later) {
                return (false, None);
            }
        }
        (true, Some(visit))
    }

    pub fn chordal(&self) -> bool {
        self.is_chordal().0
    }

    /// Vertices whose open neighbourhood induces a complete graph.
    pub fn simplicial_mask(&self) -> Mask {
        (0..self.n())
            .filter(|&v| self.is_clique(self.adj[v]))
            .fold(0, |acc, v| acc | bit(v))
    }

    pub fn simplicial_vertices(&self) -> Vec<String> {
        self.labels_of(self.simplicial_mask())
    }

    /// Ordered adjacent pairs `(x, y)` with `N[x] ⊆ N[y]`.
    pub fn dominated_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.n() {
            let nx = self.adj[x] | bit(x);
            for y in ones(self.adj[x]) {
                if bits::is_subset(nx, self.adj[y] | bit(y)) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// A tree whose non-leaf vertices induce a path (possibly empty or a
    /// single vertex).
    pub fn is_caterpillar(&self) -> bool {
        if !self.is_tree() {
            return false;
        }
        let spine = (0..self.n())
            .filter(|&v| self.degree(v) >= 2)
            .fold(0, |acc, v| acc | bit(v));
        let g = self.induced(spine);
        g.n() == 0 || (g.is_connected() && (0..g.n()).all(|v| g.degree(v) <= 2))
    }

    pub fn rooted_view(&self, root: usize) -> Result<RootedView> {
        if !self.is_tree() {
            return Err(Error::Hypothesis("rooted view needs a tree".into()));
        }
        let mut level = vec![0; self.n()];
        level[root] = 1;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for u in ones(self.adj[v]) {
                if level[u] == 0 {
                    level[u] = level[v] + 1;
                    queue.push_back(u);
                }
            }
        }
        let height = level.iter().copied().max().unwrap_or(0);
        Ok(RootedView {
            root,
            level,
            height,
        })
    }

    /// Writes the `graph <n>` text format.
    pub fn to_text(&self) -> String {
        let mut s = format!("graph {}\n{}\n", self.n(), self.labels.join(" "));
        for (u, v) in self.edges() {
            s.push_str(&format!("e {} {}\n", self.labels[u], self.labels[v]));
        }
        s
    }

    /// Parses the `graph <n>` text format: a header line, a label line and one
    /// `e <u> <v>` line per edge. `#` starts a comment.
    pub fn from_text(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let (hline, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            message: "missing `graph <n>` header".into(),
        })?;
        let mut head = header.split_whitespace();
        if head.next() != Some("graph") {
            return Err(Error::Parse {
                line: hline,
                message: "expected `graph <n>`".into(),
            });
        }
        let n: usize = head
            .next()
            .and_then(|x| x.parse().ok())
            .ok_or(Error::Parse {
                line: hline,
                message: "vertex count is not an integer".into(),
            })?;
        let (labels, lline): (Vec<String>, usize) = if n == 0 {
            (Vec::new(), hline)
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
            (labels, lline)
        };
        let known: HashSet<&str> = labels.iter().map(String::as_str).collect();
        let mut edges = Vec::new();
        for (ln, l) in lines {
            let parts: Vec<&str> = l.split_whitespace().collect();
            match parts.as_slice() {
                ["e", u, v] => {
                    let message = if let Some(w) = [u, v].into_iter().find(|w| !known.contains(**w)) {
                        Some(format!("unknown vertex `{w}`"))
                    } else if u == v {
                        Some(format!("self-loop at `{u}`"))
                    } else {
                        None
                    };
                    if let Some(message) = message {
                        return Err(Error::Parse { line: ln, message });
                    }
                    edges.push((u.to_string(), v.to_string()))
                }
                _ => {
                    return Err(Error::Parse {
                        line: ln,
                        message: format!("expected `e <u> <v>`, found `{l}`"),
                    })
                }
            }
        }
        Graph::new(&labels, &edges).map_err(|e| match e {
            Error::Io { .. } => e,
            e @ Error::BoundExceeded { .. } => e,
            other => Error::Parse {
                line: lline,
                message: other.to_string(),
            },
        })
    }

    /// A canonical string used for hashing and report keys.
    pub fn canonical_key(&self) -> String {
        let edges: BTreeSet<String> = self
            .edges()
            .into_iter()
            .map(|(u, v)| format!("{}-{}", self.labels[u], self.labels[v]))
            .collect();
        format!(
            "{}|{}",
            self.labels.join(","),
            edges.into_iter().collect::<Vec<_>>().join(",")
        )
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self
            .edges()
            .into_iter()
            .map(|(u, v)| format!("{}-{}", self.labels[u], self.labels[v]))
            .collect();
        write!(f, "Graph[{}; {}]", self.labels.join(" "), edges.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(labels: &[&str], edges: &[(&str, &str)]) -> Graph {
        Graph::new(labels, edges).unwrap()
    }

    fn path3() -> Graph {
        g(&["a", "b", "c"], &[("a", "b"), ("b", "c")])
    }

    fn complete(n: usize) -> Graph {
        let labels: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                edges.push((labels[i].clone(), labels[j].clone()));
            }
        }
        Graph::new(&labels, &edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let labels: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
        let edges: Vec<(String, String)> = (0..n)
            .map(|i| (labels[i].clone(), labels[(i + 1) % n].clone()))
            .collect();
        Graph::new(&labels, &edges).unwrap()
    }

    #[test]
    fn build_rejects_bad_input() {
        assert!(matches!(
            Graph::new(&["a", "a"], &[]),
            Err(Error::DuplicateLabel(l)) if l == "a"
        ));
        assert!(matches!(
            Graph::new(&["a"], &[("a", "z")]),
            Err(Error::UnknownVertex(l)) if l == "z"
        ));
        assert!(matches!(
            Graph::new(&["a"], &[("a", "a")]),
            Err(Error::SelfLoop(_))
        ));
    }

    #[test]
    fn build_examples() {
        assert_eq!(path3().edges(), vec![(0, 1), (1, 2)]);
        let single = g(&["a"], &[]);
        assert_eq!((single.n(), single.edge_count()), (1, 0));
        let dedup = g(&["a", "b"], &[("a", "b"), ("b", "a")]);
        assert_eq!(dedup.edges(), vec![(0, 1)]);
    }

    #[test]
    fn closed_neighborhood_examples() {
        let p = path3();
        assert_eq!(p.closed_neighborhood(&["b"]).unwrap(), ["a", "b", "c"]);
        assert_eq!(p.closed_neighborhood(&["a", "c"]).unwrap(), ["a", "b", "c"]);
        let star = g(
            &["w", "v1", "v2", "v3"],
            &[("w", "v1"), ("w", "v2"), ("w", "v3")],
        );
        assert_eq!(star.closed_neighborhood(&["v1"]).unwrap(), ["v1", "w"]);
        assert!(p.closed_neighborhood(&["q"]).is_err());
    }

    #[test]
    fn deletion_examples() {
        let p = path3();
        let d = p.delete_vertices(&["b"]).unwrap();
        assert_eq!((d.n(), d.edge_count()), (2, 0));

        let tri = g(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("a", "c")]);
        let t = tri.delete_edges(&[("a", "b")]).unwrap();
        assert_eq!(t, g(&["a", "b", "c"], &[("a", "c"), ("c", "b")]));
        assert!(matches!(
            t.delete_edges(&[("a", "b")]),
            Err(Error::UnknownEdge(..))
        ));

        let k4 = complete(4);
        let k3 = k4.induced_subgraph(&["x1", "x3", "x4"]).unwrap();
        assert_eq!(k3.edge_count(), 3);
        assert_eq!(k4.induced(k4.all()), k4);
        assert_eq!(k4.without_edges(&[]), k4);
    }

    #[test]
    fn chordality() {
        let (ok, peo) = complete(5).is_chordal();
        assert!(ok && peo.unwrap().len() == 5);
        assert!(!cycle(4).chordal());
        assert!(!cycle(6).chordal());
        assert!(cycle(3).chordal());
        // C4 plus a chord is chordal
        let diamond = cycle(4).disjoint_union(&Graph::empty()).unwrap();
        let diamond = Graph::new(
            diamond.labels(),
            &[
                ("x1".to_string(), "x2".to_string()),
                ("x2".into(), "x3".into()),
                ("x3".into(), "x4".into()),
                ("x4".into(), "x1".into()),
                ("x1".into(), "x3".into()),
            ],
        )
        .unwrap();
        assert!(diamond.chordal());
    }

    #[test]
    fn perfect_elimination_order_is_valid() {
        let gr = g(
            &["a", "b", "c", "d", "e"],
            &[("a", "b"), ("b", "c"), ("a", "c"), ("c", "d"), ("b", "d"), ("d", "e")],
        );
        let (ok, peo) = gr.is_chordal();
        assert!(ok);
        let peo = peo.unwrap();
        let mut remaining = gr.all();
        for v in peo {
            remaining &= !bit(v);
            assert!(gr.is_clique(gr.neighbors(v) & remaining));
        }
    }

    #[test]
    fn simplicial_examples() {
        assert_eq!(path3().simplicial_vertices(), ["a", "c"]);
        assert_eq!(complete(4).simplicial_mask(), 0b1111);
        assert_eq!(cycle(4).simplicial_mask(), 0);
    }

    #[test]
    fn dominated_pair_examples() {
        assert_eq!(path3().dominated_pairs(), vec![(0, 1), (2, 1)]);
        assert_eq!(complete(3).dominated_pairs().len(), 6);
        // brute force over all ordered pairs of C4
        let c4 = cycle(4);
        let mut brute = Vec::new();
        for x in 0..4 {
            for y in 0..4 {
                if x != y && c4.has_edge(x, y) {
                    let nx: BTreeSet<usize> =
                        ones(c4.neighbors(x) | bit(x)).collect();
                    let ny: BTreeSet<usize> =
                        ones(c4.neighbors(y) | bit(y)).collect();
                    if nx.is_subset(&ny) {
                        brute.push((x, y));
                    }
                }
            }
        }
        assert!(brute.is_empty());
        assert!(c4.dominated_pairs().is_empty());
    }

    #[test]
    fn caterpillar_recognition() {
        let star = g(
            &["w", "v1", "v2", "v3", "v4"],
            &[("w", "v1"), ("w", "v2"), ("w", "v3"), ("w", "v4")],
        );
        assert!(star.is_caterpillar());
        let p = g(
            &["a", "b", "c", "d", "e"],
            &[("a", "b"), ("b", "c"), ("c", "d"), ("d", "e")],
        );
        assert!(p.is_caterpillar());
        let spider = g(
            &["c", "a1", "a2", "b1", "b2", "d1", "d2"],
            &[
                ("c", "a1"),
                ("a1", "a2"),
                ("c", "b1"),
                ("b1", "b2"),
                ("c", "d1"),
                ("d1", "d2"),
            ],
        );
        assert!(spider.is_tree());
        assert!(!spider.is_caterpillar());
        assert!(!cycle(4).is_caterpillar());
        assert!(g(&["a"], &[]).is_caterpillar());
    }

    #[test]
    fn rooted_levels() {
        // the rooted tree with root x, children z1 z2, and so on
        let t = g(
            &["x", "z1", "z2", "z3", "z4", "z5", "z6", "z7"],
            &[
                ("x", "z1"),
                ("x", "z2"),
                ("z1", "z3"),
                ("z1", "z4"),
                ("z2", "z5"),
                ("z4", "z6"),
                ("z4", "z7"),
            ],
        );
        let view = t.rooted_view(t.index_of("x").unwrap()).unwrap();
        assert_eq!(view.level[t.index_of("x").unwrap()], 1);
        assert_eq!(view.level[t.index_of("z5").unwrap()], 3);
        assert_eq!(view.level[t.index_of("z7").unwrap()], 4);
        assert_eq!(view.height, 4);
    }

    #[test]
    fn text_roundtrip_and_errors() {
        let gr = g(&["b", "a", "c"], &[("a", "b"), ("c", "b")]);
        let text = gr.to_text();
        assert_eq!(Graph::from_text(&text).unwrap(), gr);
        let commented = "# a comment\ngraph 2   \na b  # labels\n\ne a b \n";
        assert_eq!(Graph::from_text(commented).unwrap().edge_count(), 1);
        match Graph::from_text("graph 2\na b\nx a b\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
        assert!(Graph::from_text("graph 3\na b\n").is_err());
        assert_eq!(Graph::from_text("graph 0\n").unwrap().n(), 0);
    }

    #[test]
    fn deleting_a_vertex_drops_incident_edges() {
        let k5 = complete(5);
        for v in 0..5 {
            let d = k5.without_vertices(bit(v));
            assert_eq!(d.n(), 4);
            assert!(!d.labels().contains(&k5.label(v).to_string()));
            assert_eq!(d.edge_count(), 6);
        }
    }
}
