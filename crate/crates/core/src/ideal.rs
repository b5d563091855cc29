//! Square-free monomial ideals, stored as the antichain of their generator
//! supports over an ordered variable list.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bits::{self, bit, ones, Mask};
use crate::error::{Error, Result};
use crate::hypergraph::{self, Hypergraph};

/// A square-free monomial ideal. `ZERO` has no generators; `UNIT` (the whole
/// ring) has the single empty generator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SquareFreeIdeal {
    h: Hypergraph,
}

#[derive(Serialize, Deserialize)]
struct Repr {
    vars: Vec<String>,
    gens: Vec<Vec<String>>,
}

impl Serialize for SquareFreeIdeal {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        Repr {
            vars: self.vars().to_vec(),
            gens: self.h.edge_labels(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SquareFreeIdeal {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = Repr::deserialize(d)?;
        SquareFreeIdeal::new(&r.vars, &r.gens).map_err(serde::de::Error::custom)
    }
}

fn merged_labels(a: &[String], b: &[String]) -> Vec<String> {
    let mut v: Vec<String> = a.iter().chain(b).cloned().collect();
    v.sort();
    v.dedup();
    v
}

impl SquareFreeIdeal {
    pub fn new<S: AsRef<str>>(vars: &[S], gens: &[Vec<S>]) -> Result<Self> {
        Ok(SquareFreeIdeal {
            h: Hypergraph::new(vars, gens)?,
        })
    }

    pub(crate) fn from_masks(vars: Vec<String>, gens: impl IntoIterator<Item = Mask>) -> Self {
        SquareFreeIdeal {
            h: Hypergraph::from_masks(vars, gens),
        }
    }

    pub fn zero(vars: Vec<String>) -> Self {
        Self::from_masks(vars, [])
    }

    pub fn unit(vars: Vec<String>) -> Self {
        Self::from_masks(vars, [0])
    }

    /// `I(H)`, the edge ideal of a hypergraph.
    pub fn of(h: &Hypergraph) -> Self {
        SquareFreeIdeal { h: h.clone() }
    }

    /// The hypergraph whose edges are the generator supports.
    pub fn hypergraph(&self) -> &Hypergraph {
        &self.h
    }

    pub fn vars(&self) -> &[String] {
        self.h.labels()
    }

    pub fn n(&self) -> usize {
        self.h.n()
    }

    pub fn gens(&self) -> &[Mask] {
        self.h.edges()
    }

    pub fn gen_labels(&self) -> Vec<Vec<String>> {
        self.h.edge_labels()
    }

    pub fn is_zero(&self) -> bool {
        self.gens().is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.h.is_unit()
    }

    pub fn var_set<S: AsRef<str>>(&self, labels: &[S]) -> Result<Mask> {
        self.h.vertex_set(labels)
    }

    /// Union of all generator supports.
    pub fn support(&self) -> Mask {
        self.gens().iter().fold(0, |a, &g| a | g)
    }

    /// Generator degrees, sorted and deduplicated.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.gens().iter().map(|&g| bits::count(g)).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    /// Same ideal over the given (sorted) superset of variables.
    pub fn extend_vars(&self, vars: &[String]) -> Result<Self> {
        Ok(SquareFreeIdeal {
            h: self.h.with_labels(vars)?,
        })
    }

    fn aligned(&self, other: &Self) -> (Self, Self) {
        if self.vars() == other.vars() {
            return (self.clone(), other.clone());
        }
        let vars = merged_labels(self.vars(), other.vars());
        (
            self.extend_vars(&vars).expect("merged vars are a superset"),
            other.extend_vars(&vars).expect("merged vars are a superset"),
        )
    }

    pub fn sum(&self, other: &Self) -> Self {
        let (a, b) = self.aligned(other);
        Self::from_masks(
            a.vars().to_vec(),
            a.gens().iter().chain(b.gens()).copied(),
        )
    }

    /// Square-free lcm of every pair of generators.
    pub fn intersect(&self, other: &Self) -> Self {
        let (a, b) = self.aligned(other);
        let gens: Vec<Mask> = a
            .gens()
            .iter()
            .flat_map(|&g| b.gens().iter().map(move |&h| g | h))
            .collect();
        Self::from_masks(a.vars().to_vec(), gens)
    }

    /// Pairwise unions of supports. For ideals on disjoint variable sets this
    /// is the product; otherwise it is the radical of the product.
    pub fn product(&self, other: &Self) -> Self {
        self.intersect(other)
    }

    /// `(I : x^f)` for the square-free monomial with support `f`.
    pub fn colon(&self, f: Mask) -> Self {
        Self::from_masks(
            self.vars().to_vec(),
            self.gens().iter().map(|&g| g & !f),
        )
    }

    pub fn colon_by<S: AsRef<str>>(&self, f: &[S]) -> Result<Self> {
        Ok(self.colon(self.var_set(f)?))
    }

    /// `I + ⟨x : x ∈ f⟩`.
    pub fn plus_vars(&self, f: Mask) -> Self {
        Self::from_masks(
            self.vars().to_vec(),
            self.gens().iter().copied().chain(ones(f).map(bit)),
        )
    }

    /// Whether the square-free monomial with support `m` lies in `I`.
    pub fn contains_monomial(&self, m: Mask) -> bool {
        self.gens().iter().any(|&g| bits::is_subset(g, m))
    }

    /// Ideal containment `other ⊆ self` (variables are matched by label).
    pub fn contains(&self, other: &Self) -> bool {
        let (a, b) = self.aligned(other);
        b.gens().iter().all(|&g| a.contains_monomial(g))
    }

    /// Equality of generated ideals regardless of the ambient variable lists.
    pub fn same_ideal(&self, other: &Self) -> bool {
        let (a, b) = self.aligned(other);
        a.gens() == b.gens()
    }

    /// Deletes variables together with every generator using them.
    pub fn without_vars(&self, a: Mask) -> Self {
        SquareFreeIdeal { h: self.h.without(a) }
    }

    /// The Alexander dual: generated by the minimal vertex covers of the
    /// generator hypergraph. `ZERO` and `UNIT` are exchanged.
    pub fn alexander_dual(&self) -> Result<Self> {
        Ok(SquareFreeIdeal {
            h: hypergraph::dual_hypergraph(&self.h)?,
        })
    }

    /// All degree-`j` square-free monomials in `I`, i.e. the `j`-subsets of the
    /// variables containing some generator.
    pub fn squarefree_component(&self, j: usize) -> Self {
        let gens: Vec<Mask> = bits::k_subsets(self.n(), j)
            .filter(|&s| self.contains_monomial(s))
            .collect();
        Self::from_masks(self.vars().to_vec(), gens)
    }

    /// Stable textual key used for caching and memo tables.
    pub fn canonical_key(&self) -> String {
        let gens: Vec<String> = self
            .gens()
            .iter()
            .map(|&g| self.h.labels_of(g).join("*"))
            .collect();
        format!("{}|{}", self.vars().join(","), gens.join(","))
    }

    pub fn to_text(&self) -> String {
        self.h.to_text()
    }

    pub fn from_text(text: &str) -> Result<Self> {
        Ok(SquareFreeIdeal {
            h: Hypergraph::from_text(text)?,
        })
    }

    pub fn read(path: &std::path::Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::from_text(&text)
    }
}

/// Drops every subset containing another (the unique minimal generating set).
pub fn minimalize(gens: &[Mask]) -> Vec<Mask> {
    bits::minimalize(gens.iter().copied())
}

impl fmt::Display for SquareFreeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "<0>");
        }
        if self.is_unit() {
            return write!(f, "<1>");
        }
        let gens: Vec<String> = self
            .gens()
            .iter()
            .map(|&g| self.h.labels_of(g).join("*"))
            .collect();
        write!(f, "<{}>", gens.join(", "))
    }
}

impl fmt::Debug for SquareFreeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} in [{}]", self.vars().join(" "))
    }
}
