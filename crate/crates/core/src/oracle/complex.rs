//! Simplicial complexes given by facets, Stanley–Reisner correspondence and
//! vertex decomposability.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::bits::{self, bit, ones, Mask};
use crate::error::{Error, Result};
use crate::hypergraph;
use crate::ideal::SquareFreeIdeal;
use crate::splitting;

use super::homology::{self, FieldSpec};

/// Default vertex bound for homology computations.
pub const HOMOLOGY_BOUND: usize = 22;

/// A complex on a sorted vertex list, stored by its facets. `VOID` has no
/// faces at all; `IRRELEVANT` has only the empty face.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    labels: Vec<String>,
    facets: Vec<Mask>,
}

/// Keeps the inclusion-maximal sets, canonically sorted.
pub(crate) fn maximalize(sets: impl IntoIterator<Item = Mask>) -> Vec<Mask> {
    let mut v: Vec<Mask> = sets.into_iter().collect();
    v.sort_unstable_by_key(|m| std::cmp::Reverse((bits::count(*m), *m)));
    v.dedup();
    let mut kept: Vec<Mask> = Vec::with_capacity(v.len());
    for s in v {
        if !kept.iter().any(|&k| bits::is_subset(s, k)) {
            kept.push(s);
        }
    }
    bits::sort_canonical(&mut kept);
    kept
}

impl SimplicialComplex {
    pub fn new<S: AsRef<str>>(labels: &[S], facets: &[Vec<S>]) -> Result<Self> {
        let h = hypergraph::Hypergraph::new(labels, &[])?;
        let masks = facets
            .iter()
            .map(|f| h.vertex_set(f))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_masks(h.labels().to_vec(), masks))
    }

    pub(crate) fn from_masks(labels: Vec<String>, facets: impl IntoIterator<Item = Mask>) -> Self {
        SimplicialComplex {
            labels,
            facets: maximalize(facets),
        }
    }

    pub fn void(labels: Vec<String>) -> Self {
        SimplicialComplex {
            labels,
            facets: Vec::new(),
        }
    }

    pub fn irrelevant(labels: Vec<String>) -> Self {
        SimplicialComplex {
            labels,
            facets: vec![0],
        }
    }

    pub fn simplex(labels: Vec<String>) -> Self {
        let all = bits::full(labels.len());
        SimplicialComplex {
            labels,
            facets: vec![all],
        }
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn facets(&self) -> &[Mask] {
        &self.facets
    }

    pub fn facet_labels(&self) -> Vec<Vec<String>> {
        self.facets
            .iter()
            .map(|&f| ones(f).map(|i| self.labels[i].clone()).collect())
            .collect()
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_face(&self, m: Mask) -> bool {
        self.facets.iter().any(|&f| bits::is_subset(m, f))
    }

    pub fn dimension(&self) -> isize {
        self.facets
            .iter()
            .map(|&f| bits::count(f) as isize - 1)
            .max()
            .unwrap_or(-2)
    }

    /// Vertices lying in some face.
    pub fn used_vertices(&self) -> Mask {
        self.facets.iter().fold(0, |a, &f| a | f)
    }

    /// `lk(v) = {F ∖ v : v ∈ F}`, on the same vertex list.
    pub fn link(&self, v: usize) -> SimplicialComplex {
        SimplicialComplex::from_masks(
            self.labels.clone(),
            self.facets
                .iter()
                .filter(|&&f| f & bit(v) != 0)
                .map(|&f| f & !bit(v)),
        )
    }

    /// `del(v) = {F : v ∉ F}`, on the same vertex list.
    pub fn deletion(&self, v: usize) -> SimplicialComplex {
        SimplicialComplex::from_masks(
            self.labels.clone(),
            self.facets.iter().map(|&f| f & !bit(v)),
        )
    }

    /// `Δ|W`.
    pub fn restriction(&self, w: Mask) -> SimplicialComplex {
        SimplicialComplex::from_masks(
            self.labels.clone(),
            self.facets.iter().map(|&f| f & w),
        )
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let facets: Vec<String> = self
            .facet_labels()
            .into_iter()
            .map(|l| format!("{{{}}}", l.join(",")))
            .collect();
        write!(f, "Δ[{}; {}]", self.labels.join(" "), facets.join(" "))
    }
}

/// The complex whose faces are the variable sets containing no generator:
/// facets are complements of minimal covers. `ZERO` gives the full simplex
/// and `UNIT` the void complex.
pub fn stanley_reisner(i: &SquareFreeIdeal) -> Result<SimplicialComplex> {
    let covers = hypergraph::minimal_vertex_covers(i.hypergraph())?;
    let all = bits::full(i.n());
    Ok(SimplicialComplex::from_masks(
        i.vars().to_vec(),
        covers.into_iter().map(|c| all & !c),
    ))
}

/// The ideal of minimal non-faces: minimal transversals of the facet
/// complements. The void complex gives `UNIT`.
pub fn sr_ideal(d: &SimplicialComplex) -> Result<SquareFreeIdeal> {
    let all = bits::full(d.n());
    let complements = hypergraph::Hypergraph::from_masks(
        d.labels.clone(),
        d.facets.iter().map(|&f| all & !f),
    );
    let nonfaces = hypergraph::minimal_vertex_covers(&complements)?;
    Ok(SquareFreeIdeal::from_masks(d.labels.clone(), nonfaces))
}

/// Reduced homology of `Δ`, nonzero degrees only. The void complex has no
/// homology; the irrelevant complex has `H̃_{-1} = 1`.
pub fn reduced_homology_dims(
    d: &SimplicialComplex,
    field: FieldSpec,
) -> Result<BTreeMap<isize, usize>> {
    if d.n() > HOMOLOGY_BOUND {
        return Err(Error::BoundExceeded {
            what: "complex vertex count for homology",
            size: d.n(),
            limit: HOMOLOGY_BOUND,
        });
    }
    Ok(homology::homology_of_faces(
        &homology::faces_of_facets(d.n(), &d.facets),
        field,
    ))
}

/// Vertex decomposability through the Alexander dual of the Stanley–Reisner
/// ideal: `Δ` is vertex decomposable iff `I_Δ^∨` is vertex splittable.
pub fn is_vertex_decomposable_dual(d: &SimplicialComplex) -> Result<bool> {
    let dual = sr_ideal(d)?.alexander_dual()?;
    Ok(splitting::is_vertex_splittable(&dual)?.0)
}

/// Vertex decomposability by the shedding-vertex recursion: a simplex (or
/// the void complex) is decomposable, and otherwise some vertex `v` must have
/// decomposable link and deletion with no face of `lk(v)` a facet of
/// `del(v)`.
pub fn is_vertex_decomposable_shedding(d: &SimplicialComplex) -> bool {
    let mut memo = HashMap::new();
    shedding(&d.facets, &mut memo)
}

fn shedding(facets: &[Mask], memo: &mut HashMap<Vec<Mask>, bool>) -> bool {
    if facets.len() <= 1 {
        return true;
    }
    if let Some(&r) = memo.get(facets) {
        return r;
    }
    let used = facets.iter().fold(0, |a, &f| a | f);
    let mut result = false;
    for v in ones(used) {
        let link = maximalize(facets.iter().filter(|&&f| f & bit(v) != 0).map(|&f| f & !bit(v)));
        let del = maximalize(facets.iter().map(|&f| f & !bit(v)));
        // a facet D of del(v) is a face of lk(v) iff D ∪ v is a face of Δ
        let sheds = del
            .iter()
            .all(|&dd| !facets.iter().any(|&f| bits::is_subset(dd | bit(v), f)));
        if sheds && shedding(&link, memo) && shedding(&del, memo) {
            result = true;
            break;
        }
    }
    memo.insert(facets.to_vec(), result);
    result
}
