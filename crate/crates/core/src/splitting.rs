//! The 3-path splitting `I_3(G) = J + K`, vertex splittability with
//! replayable certificates, and the hypergraph splitting-variable
//! decomposition of Alexander duals.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::bits::{self, bit, ones, Mask};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hypergraph::{self, Hypergraph};
use crate::ideal::SquareFreeIdeal;

/// Default generator bound for the splittability search.
pub const SPLIT_GEN_BOUND: usize = 500;

/// `I_3(G)` as a square-free ideal over `V(G)`.
pub fn path_ideal(g: &Graph, t: usize) -> Result<SquareFreeIdeal> {
    Ok(SquareFreeIdeal::of(&hypergraph::path_hypergraph(g, t)?))
}

/// `J_t(G)`, generated by the connected induced `t`-subsets.
pub fn connected_ideal(g: &Graph, t: usize) -> Result<SquareFreeIdeal> {
    Ok(SquareFreeIdeal::of(&hypergraph::connected_hypergraph(g, t)?))
}

/// The pieces of `I_3(G) = J + K` at a dominated edge `{x, y}`, with
/// `J ∩ K = xy·L`.
#[derive(Clone, Debug)]
pub struct ThreePathSplit {
    pub x: usize,
    pub y: usize,
    pub j: SquareFreeIdeal,
    pub k: SquareFreeIdeal,
    pub l: SquareFreeIdeal,
}

/// One colon description `(L : w)` compared with its closed form.
#[derive(Clone, Debug)]
pub struct ColonDescription {
    pub w: String,
    /// `true` for `w ∈ N(x) ∖ {y}` (where the colon is the unit ideal).
    pub common_neighbor: bool,
    pub expected: SquareFreeIdeal,
    pub computed: SquareFreeIdeal,
}

impl ColonDescription {
    pub fn holds(&self) -> bool {
        self.expected.same_ideal(&self.computed)
    }
}

/// Splits `I_3(G)` along the edge `{x, y}`, which must satisfy
/// `N[x] ⊆ N[y]`.
pub fn three_path_splitting(g: &Graph, x: usize, y: usize) -> Result<ThreePathSplit> {
    if !g.has_edge(x, y) {
        return Err(Error::Hypothesis(format!(
            "{{{}, {}}} is not an edge",
            g.label(x),
            g.label(y)
        )));
    }
    let nx = g.closed_nbhd_mask(bit(x));
    let ny = g.closed_nbhd_mask(bit(y));
    if !bits::is_subset(nx, ny) {
        return Err(Error::Hypothesis(format!(
            "N[{}] ⊄ N[{}]",
            g.label(x),
            g.label(y)
        )));
    }
    let vars = g.labels().to_vec();
    let j = SquareFreeIdeal::from_masks(
        vars.clone(),
        ones(g.neighbors(y) & !bit(x)).map(|w| bit(x) | bit(y) | bit(w)),
    );
    let k = path_ideal(&g.without_edges(&[(x, y)]), 3)?;
    let l = j.intersect(&k).colon(bit(x) | bit(y));
    Ok(ThreePathSplit { x, y, j, k, l })
}

/// Evaluates both colon descriptions of `L` for every neighbour `w ≠ x` of
/// `y`.
pub fn colon_descriptions(g: &Graph, s: &ThreePathSplit) -> Result<Vec<ColonDescription>> {
    let nx = g.closed_nbhd_mask(bit(s.x));
    let vars = g.labels().to_vec();
    let mut out = Vec::new();
    for w in ones(g.neighbors(s.y) & !bit(s.x)) {
        let computed = s.l.colon(bit(w));
        let common = nx & bit(w) != 0;
        let expected = if common {
            SquareFreeIdeal::unit(vars.clone())
        } else {
            let nwy = g.closed_nbhd_mask(bit(w) | bit(s.y));
            let linear = nwy & !(bit(s.x) | bit(s.y) | bit(w));
            let rest = path_ideal(&g.without_vertices(nwy), 3)?;
            SquareFreeIdeal::from_masks(vars.clone(), ones(linear).map(bit)).sum(&rest)
        };
        out.push(ColonDescription {
            w: g.label(w).to_string(),
            common_neighbor: common,
            expected,
            computed,
        });
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Leaf {
    #[serde(rename = "principal")]
    Principal,
    #[serde(rename = "zero")]
    Zero,
    #[serde(rename = "unit")]
    Unit,
}

/// A witness that an ideal is vertex splittable. Serialized as nested JSON:
/// `{"split": "x3", "left": …, "right": …}` or one of the strings
/// `"principal"`, `"zero"`, `"unit"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SplitCertificate {
    Leaf(Leaf),
    Split {
        split: String,
        left: Box<SplitCertificate>,
        right: Box<SplitCertificate>,
    },
}

impl SplitCertificate {
    /// Number of split nodes.
    pub fn splits(&self) -> usize {
        match self {
            SplitCertificate::Leaf(_) => 0,
            SplitCertificate::Split { left, right, .. } => 1 + left.splits() + right.splits(),
        }
    }

    pub fn root_variable(&self) -> Option<&str> {
        match self {
            SplitCertificate::Split { split, .. } => Some(split),
            SplitCertificate::Leaf(_) => None,
        }
    }

    /// Re-checks the certificate against `ideal` and rebuilds the ideal as
    /// `x·I₁ + I₂` bottom-up; the rebuilt ideal must equal the input.
    pub fn replay(&self, ideal: &SquareFreeIdeal) -> Result<SquareFreeIdeal> {
        let rebuilt = self.replay_gens(ideal, ideal.gens())?;
        let out = SquareFreeIdeal::from_masks(ideal.vars().to_vec(), rebuilt);
        if out != *ideal {
            return Err(Error::Hypothesis(
                "certificate does not rebuild the ideal".into(),
            ));
        }
        Ok(out)
    }

    fn replay_gens(&self, ideal: &SquareFreeIdeal, gens: &[Mask]) -> Result<Vec<Mask>> {
        let fail = |msg: String| Err(Error::Hypothesis(msg));
        match self {
            SplitCertificate::Leaf(leaf) => {
                if leaf_of(gens) != Some(*leaf) {
                    return fail(format!("leaf {leaf:?} does not match {} generators", gens.len()));
                }
                Ok(gens.to_vec())
            }
            SplitCertificate::Split { split, left, right } => {
                let x = ideal.vars().binary_search(split).map_err(|_| {
                    Error::UnknownVertex(split.clone())
                })?;
                let Some((i1, i2)) = decompose(gens, x) else {
                    return fail(format!("{split} is not a splitting variable here"));
                };
                let l = left.replay_gens(ideal, &i1)?;
                let r = right.replay_gens(ideal, &i2)?;
                let mut g: Vec<Mask> = l.iter().map(|&m| m | bit(x)).chain(r).collect();
                bits::sort_canonical(&mut g);
                Ok(g)
            }
        }
    }
}

fn leaf_of(gens: &[Mask]) -> Option<Leaf> {
    match gens {
        [] => Some(Leaf::Zero),
        [0] => Some(Leaf::Unit),
        [_] => Some(Leaf::Principal),
        _ => None,
    }
}

/// The forced decomposition at `x`: `I₁ = ⟨g∖x : x ∈ g⟩`, `I₂ = ⟨g : x ∉ g⟩`,
/// returned only when `x` occurs and `I₂ ⊆ I₁`. Generator sets stay disjoint
/// automatically because `g ↦ g∖x` preserves the antichain.
fn decompose(gens: &[Mask], x: usize) -> Option<(Vec<Mask>, Vec<Mask>)> {
    let (with, without): (Vec<Mask>, Vec<Mask>) = gens.iter().partition(|&&g| g & bit(x) != 0);
    if with.is_empty() {
        return None;
    }
    let mut i1: Vec<Mask> = with.iter().map(|&g| g & !bit(x)).collect();
    bits::sort_canonical(&mut i1);
    let contained = without
        .iter()
        .all(|&g| i1.iter().any(|&h| bits::is_subset(h, g)));
    contained.then_some((i1, without))
}

struct Splitter<'a> {
    vars: &'a [String],
    memo: HashMap<Vec<Mask>, Option<SplitCertificate>>,
}

impl Splitter<'_> {
    fn candidates(gens: &[Mask]) -> Vec<usize> {
        let support = gens.iter().fold(0, |a, &g| a | g);
        let mut c: Vec<(usize, usize)> = ones(support)
            .map(|v| (gens.iter().filter(|&&g| g & bit(v) != 0).count(), v))
            .collect();
        c.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        c.into_iter().map(|(_, v)| v).collect()
    }

    fn at(&mut self, gens: &[Mask], x: usize) -> Option<SplitCertificate> {
        let (i1, i2) = decompose(gens, x)?;
        let left = self.search(&i1)?;
        let right = self.search(&i2)?;
        Some(SplitCertificate::Split {
            split: self.vars[x].clone(),
            left: Box::new(left),
            right: Box::new(right),
        })
    }

    fn search(&mut self, gens: &[Mask]) -> Option<SplitCertificate> {
        if let Some(leaf) = leaf_of(gens) {
            return Some(SplitCertificate::Leaf(leaf));
        }
        if let Some(hit) = self.memo.get(gens) {
            return hit.clone();
        }
        let mut found = None;
        for x in Self::candidates(gens) {
            if let Some(c) = self.at(gens, x) {
                found = Some(c);
                break;
            }
        }
        self.memo.insert(gens.to_vec(), found.clone());
        found
    }
}

fn gen_bound(ideal: &SquareFreeIdeal) -> Result<()> {
    if ideal.gens().len() > SPLIT_GEN_BOUND {
        return Err(Error::BoundExceeded {
            what: "generator count for vertex splittability",
            size: ideal.gens().len(),
            limit: SPLIT_GEN_BOUND,
        });
    }
    Ok(())
}

/// Decides vertex splittability; on success returns a certificate whose
/// root splits at the first qualifying variable in order of decreasing
/// generator occurrence.
pub fn is_vertex_splittable(ideal: &SquareFreeIdeal) -> Result<(bool, Option<SplitCertificate>)> {
    gen_bound(ideal)?;
    let mut s = Splitter {
        vars: ideal.vars(),
        memo: HashMap::new(),
    };
    let cert = s.search(ideal.gens());
    Ok((cert.is_some(), cert))
}

/// Like [`is_vertex_splittable`] but forces the root split at `var`.
pub fn split_at(ideal: &SquareFreeIdeal, var: &str) -> Result<Option<SplitCertificate>> {
    gen_bound(ideal)?;
    let x = ideal
        .vars()
        .binary_search_by(|v| v.as_str().cmp(var))
        .map_err(|_| Error::UnknownVertex(var.to_string()))?;
    let mut s = Splitter {
        vars: ideal.vars(),
        memo: HashMap::new(),
    };
    Ok(s.at(ideal.gens(), x))
}

/// The hypergraphs `H₁`, `H₂` on `V(H) ∖ {x}` obtained from the minimal
/// covers of `H` containing, resp. avoiding, `x`.
pub fn splitting_variable_decomposition(
    h: &Hypergraph,
    x: usize,
) -> Result<(Hypergraph, Hypergraph)> {
    let covers = hypergraph::minimal_vertex_covers(h)?;
    let keep = bits::full(h.n()) & !bit(x);
    let labels = h.labels_of(keep);
    let h1 = Hypergraph::from_masks(
        labels.clone(),
        covers
            .iter()
            .filter(|&&c| c & bit(x) != 0)
            .map(|&c| bits::compress(c & !bit(x), keep)),
    );
    let h2 = Hypergraph::from_masks(
        labels,
        covers
            .iter()
            .filter(|&&c| c & bit(x) == 0)
            .map(|&c| bits::compress(c, keep)),
    );
    Ok((h1, h2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{enumerate_trees, make_family, FamilySpec};

    fn fam(s: &str) -> Graph {
        make_family(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn star_splitting_is_degenerate() {
        let g = fam("star:3");
        let (x, y) = (g.index_of("v1").unwrap(), g.index_of("w").unwrap());
        let s = three_path_splitting(&g, x, y).unwrap();
        assert_eq!(s.j.to_string(), "<v1*v2*w>");
        assert!(s.k.is_zero());
        assert!(s.l.is_zero());
    }

    #[test]
    fn path_splitting_matches_hand_computation() {
        let g = Graph::new(
            &["x", "y", "w", "u"],
            &[("x", "y"), ("y", "w"), ("w", "u")],
        )
        .unwrap();
        let (x, y) = (g.index_of("x").unwrap(), g.index_of("y").unwrap());
        let s = three_path_splitting(&g, x, y).unwrap();
        assert_eq!(s.j.to_string(), "<w*x*y>");
        assert_eq!(s.k.to_string(), "<u*w*y>");
        assert_eq!(s.j.intersect(&s.k).to_string(), "<u*w*x*y>");
        assert_eq!(s.l.to_string(), "<u*w>");
        let d = colon_descriptions(&g, &s).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].computed.to_string(), "<u>");
        assert!(d[0].holds());
        assert!(three_path_splitting(&g, y, x).is_err());
        assert!(three_path_splitting(&g, x, g.index_of("u").unwrap()).is_err());
    }

    #[test]
    fn principal_zero_unit_are_splittable() {
        let vars: Vec<String> = vec!["a".into(), "b".into()];
        for i in [
            SquareFreeIdeal::zero(vars.clone()),
            SquareFreeIdeal::unit(vars.clone()),
            SquareFreeIdeal::from_masks(vars, [0b11]),
        ] {
            let (ok, cert) = is_vertex_splittable(&i).unwrap();
            assert!(ok);
            cert.unwrap().replay(&i).unwrap();
        }
    }

    #[test]
    fn tree_duals_split_and_replay() {
        for n in 1..=7 {
            for t in enumerate_trees(n).unwrap() {
                let dual = path_ideal(&t, 3).unwrap().alexander_dual().unwrap();
                let (ok, cert) = is_vertex_splittable(&dual).unwrap();
                assert!(ok, "{t:?}");
                assert_eq!(cert.unwrap().replay(&dual).unwrap(), dual);
            }
        }
    }

    #[test]
    fn gt_dual_is_not_splittable() {
        let dual = path_ideal(&fam("Gt:3"), 3).unwrap().alexander_dual().unwrap();
        assert!(!is_vertex_splittable(&dual).unwrap().0);
    }

    #[test]
    fn certificate_json_shape() {
        let p4 = fam("path:4");
        let dual = path_ideal(&p4, 3).unwrap().alexander_dual().unwrap();
        assert_eq!(dual.to_string(), "<x2, x3, x1*x4>");
        let (_, cert) = is_vertex_splittable(&dual).unwrap();
        let cert = cert.unwrap();
        let json = serde_json::to_value(&cert).unwrap();
        assert!(json.get("split").is_some());
        let back: SplitCertificate = serde_json::from_value(json).unwrap();
        assert_eq!(back, cert);
        assert_eq!(
            serde_json::to_string(&SplitCertificate::Leaf(Leaf::Principal)).unwrap(),
            "\"principal\""
        );
        // a certificate naming a non-splitting variable is rejected
        let bad = SplitCertificate::Split {
            split: "x1".into(),
            left: Box::new(SplitCertificate::Leaf(Leaf::Unit)),
            right: Box::new(SplitCertificate::Leaf(Leaf::Zero)),
        };
        assert!(bad.replay(&dual).is_err());
    }

    #[test]
    fn star_center_root() {
        for m in 3..=6 {
            let dual = path_ideal(&fam(&format!("star:{m}")), 3)
                .unwrap()
                .alexander_dual()
                .unwrap();
            let cert = split_at(&dual, "w").unwrap().expect("center splits");
            assert_eq!(cert.root_variable(), Some("w"));
            cert.replay(&dual).unwrap();
        }
    }

    #[test]
    fn splitting_variable_identity() {
        let h = hypergraph::path_hypergraph(&FamilySpec::path(6).build().unwrap(), 3).unwrap();
        let dual = SquareFreeIdeal::of(&h).alexander_dual().unwrap();
        for x in 0..h.n() {
            let (h1, h2) = splitting_variable_decomposition(&h, x).unwrap();
            let rebuilt = SquareFreeIdeal::of(&h1)
                .product(&SquareFreeIdeal::from_masks(vec![h.labels()[x].clone()], [1]))
                .sum(&SquareFreeIdeal::of(&h2));
            assert!(rebuilt.same_ideal(&dual));
        }
    }
}
