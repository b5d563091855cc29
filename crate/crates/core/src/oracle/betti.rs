//! Graded Betti numbers of `R/I` through Hochster's formula
//! `β_{i,σ}(R/I) = dim H̃_{|σ|-i-1}(Δ|σ)` and the invariants read off them.

use std::collections::BTreeMap;
use std::fmt;

use dashmap::DashMap;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bits::{self, Mask};
use crate::error::{Error, Result};
use crate::hypergraph;
use crate::ideal::SquareFreeIdeal;

use super::complex::stanley_reisner;
use super::homology::{self, FieldSpec};

/// Variable bound of the Hochster loop.
pub const BETTI_BOUND: usize = 22;

/// Graded Betti numbers `β_{i,j}(R/I)`; absent entries are zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "BettiRepr", try_from = "BettiRepr")]
pub struct BettiTable {
    n: usize,
    field: FieldSpec,
    entries: BTreeMap<(usize, usize), u64>,
    unit_quotient: bool,
}

#[derive(Serialize, Deserialize)]
struct BettiRepr {
    n: usize,
    field: FieldSpec,
    #[serde(default)]
    unit_quotient: bool,
    /// `[i, j, β_{i,j}]` triples in increasing `(i, j)` order.
    entries: Vec<[u64; 3]>,
}

impl From<BettiTable> for BettiRepr {
    fn from(b: BettiTable) -> Self {
        BettiRepr {
            n: b.n,
            field: b.field,
            unit_quotient: b.unit_quotient,
            entries: b
                .entries
                .iter()
                .map(|(&(i, j), &v)| [i as u64, j as u64, v])
                .collect(),
        }
    }
}

impl TryFrom<BettiRepr> for BettiTable {
    type Error = String;

    fn try_from(r: BettiRepr) -> std::result::Result<Self, String> {
        let mut entries = BTreeMap::new();
        for [i, j, v] in r.entries {
            if v == 0 || i as usize > r.n || j < i {
                return Err(format!("invalid Betti entry ({i}, {j}) = {v}"));
            }
            entries.insert((i as usize, j as usize), v);
        }
        if !r.unit_quotient && entries.get(&(0, 0)) != Some(&1) {
            return Err("β_{0,0} must be 1".into());
        }
        Ok(BettiTable {
            n: r.n,
            field: r.field,
            entries,
            unit_quotient: r.unit_quotient,
        })
    }
}

impl BettiTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    /// `R/R`: the table is empty and reg/pd are reported as 0.
    pub fn is_unit_quotient(&self) -> bool {
        self.unit_quotient
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> &BTreeMap<(usize, usize), u64> {
        &self.entries
    }

    pub fn total(&self, i: usize) -> u64 {
        self.entries
            .iter()
            .filter(|((a, _), _)| *a == i)
            .map(|(_, v)| v)
            .sum()
    }

    /// `max {j - i : β_{i,j} ≠ 0}`.
    pub fn regularity(&self) -> usize {
        self.entries.keys().map(|&(i, j)| j - i).max().unwrap_or(0)
    }

    /// `max {i : β_{i,j} ≠ 0}`.
    pub fn projective_dimension(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// Aligned Macaulay-style triangle: column `i`, row `j - i`.
    pub fn to_macaulay(&self) -> String {
        if self.unit_quotient {
            return "0 (R/R is the zero module)\n".to_string();
        }
        let pd = self.projective_dimension();
        let reg = self.regularity();
        let cell = |v: u64| if v == 0 { ".".to_string() } else { v.to_string() };
        let mut rows: Vec<Vec<String>> = Vec::new();
        rows.push(
            std::iter::once(String::new())
                .chain((0..=pd).map(|i| i.to_string()))
                .collect(),
        );
        rows.push(
            std::iter::once("total:".to_string())
                .chain((0..=pd).map(|i| self.total(i).to_string()))
                .collect(),
        );
        for r in 0..=reg {
            rows.push(
                std::iter::once(format!("{r}:"))
                    .chain((0..=pd).map(|i| cell(self.get(i, i + r))))
                    .collect(),
            );
        }
        let width = rows
            .iter()
            .flat_map(|r| r.iter().skip(1))
            .map(|c| c.chars().count())
            .max()
            .unwrap_or(1);
        let lead = rows.iter().map(|r| r[0].chars().count()).max().unwrap_or(0);
        let mut out = String::new();
        for r in rows {
            let mut line = format!("{:>lead$}", r[0]);
            for c in &r[1..] {
                line.push_str(&format!(" {c:>width$}"));
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_macaulay())
    }
}

fn check_bound(i: &SquareFreeIdeal, bound: usize) -> Result<()> {
    let limit = bound.min(BETTI_BOUND);
    if i.n() > limit {
        return Err(Error::BoundExceeded {
            what: "ideal variable count for the Betti oracle",
            size: i.n(),
            limit,
        });
    }
    Ok(())
}

/// Unions of generators: the only `σ` with `β_{i,σ} ≠ 0`.
fn lcm_lattice(gens: &[Mask]) -> Vec<Mask> {
    let mut seen: std::collections::HashSet<Mask> = std::collections::HashSet::new();
    seen.insert(0);
    let mut all = vec![0];
    for &g in gens {
        let fresh: Vec<Mask> = all.iter().map(|&s| s | g).filter(|m| !seen.contains(m)).collect();
        for m in fresh {
            if seen.insert(m) {
                all.push(m);
            }
        }
    }
    all.sort_unstable_by_key(|&m| (bits::count(m), m));
    all
}

type HomologyMemo = DashMap<(usize, Vec<Mask>), BTreeMap<isize, usize>>;

fn restricted_homology(
    gens: &[Mask],
    sigma: Mask,
    field: FieldSpec,
    memo: &HomologyMemo,
) -> BTreeMap<isize, usize> {
    let mut local: Vec<Mask> = gens
        .iter()
        .filter(|&&g| bits::is_subset(g, sigma))
        .map(|&g| bits::compress(g, sigma))
        .collect();
    local.sort_unstable();
    let key = (bits::count(sigma), local);
    if let Some(h) = memo.get(&key) {
        return h.clone();
    }
    let h = homology::homology_of_faces(&homology::faces_avoiding(key.0, &key.1), field);
    memo.insert(key, h.clone());
    h
}

/// Graded Betti numbers of `R/I`, for ideals on at most [`BETTI_BOUND`]
/// variables.
pub fn betti_table(i: &SquareFreeIdeal, field: FieldSpec) -> Result<BettiTable> {
    betti_table_bounded(i, field, BETTI_BOUND)
}

pub fn betti_table_bounded(i: &SquareFreeIdeal, field: FieldSpec, bound: usize) -> Result<BettiTable> {
    check_bound(i, bound)?;
    if i.is_unit() {
        log::warn!("Betti table of R/R requested; reporting the zero module");
        return Ok(BettiTable {
            n: i.n(),
            field,
            entries: BTreeMap::new(),
            unit_quotient: true,
        });
    }
    let gens = i.gens();
    let memo = HomologyMemo::new();
    let entries = lcm_lattice(gens)
        .into_par_iter()
        .map(|sigma| {
            let s = bits::count(sigma);
            let mut part = BTreeMap::new();
            for (d, dim) in restricted_homology(gens, sigma, field, &memo) {
                let hi = s as isize - d - 1;
                if hi >= 0 {
                    *part.entry((hi as usize, s)).or_insert(0u64) += dim as u64;
                }
            }
            part
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        });
    Ok(BettiTable {
        n: i.n(),
        field,
        entries,
        unit_quotient: false,
    })
}

pub fn regularity(i: &SquareFreeIdeal, field: FieldSpec) -> Result<usize> {
    Ok(betti_table(i, field)?.regularity())
}

pub fn projective_dimension(i: &SquareFreeIdeal, field: FieldSpec) -> Result<usize> {
    Ok(betti_table(i, field)?.projective_dimension())
}

/// `(reg, pd)` of `R/I` from the homology of every restriction `Δ|σ`,
/// `σ ⊆ vars`, computed from the facets of the Stanley–Reisner complex
/// without lattice pruning or memoisation. Used to cross-check
/// [`betti_table`]; exponential in `n`.
pub fn reg_pd_unpruned(i: &SquareFreeIdeal, field: FieldSpec) -> Result<(usize, usize)> {
    check_bound(i, 16)?;
    if i.is_unit() {
        return Ok((0, 0));
    }
    let delta = stanley_reisner(i)?;
    let (mut reg, mut pd) = (0usize, 0usize);
    for sigma in bits::subsets(bits::full(i.n())) {
        let s = bits::count(sigma);
        let facets: Vec<Mask> = super::complex::maximalize(
            delta.facets().iter().map(|&f| bits::compress(f & sigma, sigma)),
        );
        for (d, _) in homology::homology_of_faces(&homology::faces_of_facets(s, &facets), field) {
            reg = reg.max((d + 1) as usize);
            pd = pd.max((s as isize - d - 1) as usize);
        }
    }
    Ok((reg, pd))
}

/// Every invariant of `R/I` the verification campaigns compare.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub n: usize,
    pub reg: usize,
    pub pd: usize,
    pub depth: usize,
    pub dim: usize,
    pub ht: usize,
    pub bight: usize,
    pub cm: bool,
    pub unmixed: bool,
    pub linear_resolution: bool,
    pub field: FieldSpec,
}

/// Builds the report from an already computed table.
pub fn report_from_table(i: &SquareFreeIdeal, table: &BettiTable) -> Result<InvariantReport> {
    let (ht, bight) = hypergraph::height_bight(i.hypergraph())?;
    let (reg, pd) = (table.regularity(), table.projective_dimension());
    Ok(InvariantReport {
        n: i.n(),
        reg,
        pd,
        depth: i.n() - pd,
        dim: i.n() - ht,
        ht,
        bight,
        cm: pd == ht,
        unmixed: ht == bight,
        linear_resolution: linear_from_reg(i, reg),
        field: table.field(),
    })
}

pub fn cm_report(i: &SquareFreeIdeal, field: FieldSpec) -> Result<InvariantReport> {
    report_from_table(i, &betti_table(i, field)?)
}

fn linear_from_reg(i: &SquareFreeIdeal, reg: usize) -> bool {
    if i.is_zero() || i.is_unit() {
        return true;
    }
    let degrees = i.degrees();
    degrees.len() == 1 && reg + 1 == degrees[0]
}

/// Generated in a single degree `d` with `reg(R/I) = d - 1`. `ZERO` and
/// `UNIT` count as linear.
pub fn has_linear_resolution(i: &SquareFreeIdeal, field: FieldSpec) -> Result<bool> {
    if i.is_zero() || i.is_unit() || i.degrees().len() > 1 {
        return Ok(linear_from_reg(i, 0));
    }
    Ok(linear_from_reg(i, regularity(i, field)?))
}

/// `pd(R/I) = reg(I^∨) = reg(R/I^∨) + 1`. Holds by convention for `ZERO`
/// and `UNIT`.
pub fn terai_check(i: &SquareFreeIdeal, field: FieldSpec) -> Result<bool> {
    if i.is_zero() || i.is_unit() {
        return Ok(true);
    }
    let pd = projective_dimension(i, field)?;
    let dual = i.alexander_dual()?;
    Ok(pd == regularity(&dual, field)? + 1)
}

/// Componentwise linearity through the square-free components: `I` is
/// componentwise linear iff each nonzero `I_[j]` has a `j`-linear
/// resolution.
pub fn is_componentwise_linear(i: &SquareFreeIdeal, field: FieldSpec) -> Result<bool> {
    Ok(first_nonlinear_component(i, field)?.is_none())
}

/// The smallest degree `j` whose square-free component is not `j`-linear.
pub fn first_nonlinear_component(i: &SquareFreeIdeal, field: FieldSpec) -> Result<Option<usize>> {
    if i.is_zero() || i.is_unit() {
        return Ok(None);
    }
    let low = *i.degrees().iter().min().expect("nonzero ideal has generators");
    for j in low..=i.n() {
        let c = i.squarefree_component(j);
        if c.is_zero() {
            continue;
        }
        if !has_linear_resolution(&c, field)? {
            return Ok(Some(j));
        }
    }
    Ok(None)
}
