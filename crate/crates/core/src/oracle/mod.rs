//! Homological ground truth: Betti tables through Hochster's formula and the
//! invariants derived from them.

pub mod betti;
pub mod cache;
pub mod complex;
pub mod homology;

pub use betti::{
    betti_table, betti_table_bounded, cm_report, first_nonlinear_component, has_linear_resolution,
    is_componentwise_linear, projective_dimension, reg_pd_unpruned, regularity,
    report_from_table, terai_check, BettiTable, InvariantReport, BETTI_BOUND,
};
pub use cache::DiskCache;
pub use complex::{
    is_vertex_decomposable_dual, is_vertex_decomposable_shedding, reduced_homology_dims,
    sr_ideal, stanley_reisner, SimplicialComplex,
};
pub use homology::FieldSpec;

use crate::error::{Error, Result};
use crate::ideal::SquareFreeIdeal;

/// Vertex decomposability checked by both routes; a disagreement is an
/// error.
pub fn is_vertex_decomposable(d: &SimplicialComplex) -> Result<bool> {
    let a = is_vertex_decomposable_dual(d)?;
    let b = is_vertex_decomposable_shedding(d);
    if a != b {
        return Err(Error::Hypothesis(format!(
            "vertex decomposability routes disagree on {d:?}: dual splittability {a}, shedding {b}"
        )));
    }
    Ok(a)
}

/// A field, a variable bound and an optional on-disk cache.
#[derive(Clone, Debug)]
pub struct Oracle {
    pub field: FieldSpec,
    pub bound: usize,
    pub cache: Option<DiskCache>,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle::new(FieldSpec::GF2)
    }
}

impl Oracle {
    pub fn new(field: FieldSpec) -> Self {
        Oracle {
            field,
            bound: BETTI_BOUND,
            cache: None,
        }
    }

    pub fn with_bound(mut self, bound: usize) -> Self {
        self.bound = bound;
        self
    }

    pub fn with_cache(mut self, cache: Option<DiskCache>) -> Self {
        self.cache = cache;
        self
    }

    pub fn betti(&self, i: &SquareFreeIdeal) -> Result<BettiTable> {
        if let Some(b) = self.cache.as_ref().and_then(|c| c.get(i, self.field)) {
            if i.n() <= self.bound.min(BETTI_BOUND) {
                return Ok(b);
            }
        }
        let b = betti_table_bounded(i, self.field, self.bound)?;
        if let Some(c) = &self.cache {
            if let Err(e) = c.put(i, &b) {
                log::warn!("cache write failed: {e}");
            }
        }
        Ok(b)
    }

    pub fn reg(&self, i: &SquareFreeIdeal) -> Result<usize> {
        Ok(self.betti(i)?.regularity())
    }

    pub fn pd(&self, i: &SquareFreeIdeal) -> Result<usize> {
        Ok(self.betti(i)?.projective_dimension())
    }

    pub fn report(&self, i: &SquareFreeIdeal) -> Result<InvariantReport> {
        report_from_table(i, &self.betti(i)?)
    }

    pub fn linear(&self, i: &SquareFreeIdeal) -> Result<bool> {
        if i.is_zero() || i.is_unit() {
            return Ok(true);
        }
        if i.degrees().len() > 1 {
            return Ok(false);
        }
        Ok(self.reg(i)? + 1 == i.degrees()[0])
    }

    pub fn terai(&self, i: &SquareFreeIdeal) -> Result<bool> {
        if i.is_zero() || i.is_unit() {
            return Ok(true);
        }
        Ok(self.pd(i)? == self.reg(&i.alexander_dual()?)? + 1)
    }

    pub fn componentwise_linear(&self, i: &SquareFreeIdeal) -> Result<bool> {
        if i.is_zero() || i.is_unit() {
            return Ok(true);
        }
        let low = *i.degrees().iter().min().expect("nonzero ideal has generators");
        for j in low..=i.n() {
            let c = i.squarefree_component(j);
            if !c.is_zero() && !self.linear(&c)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}
