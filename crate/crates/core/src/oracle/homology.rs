//! Reduced simplicial homology over GF(2), GF(p) and the rationals.
//!
//! Faces are bitmasks grouped by cardinality; boundary matrices are built
//! row by row (one row per face, one column per codimension-one face) and
//! reduced with an incremental leading-column echelon form.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::bits::{self, bit, ones, Mask};
use crate::error::{Error, Result};

/// The coefficient field of every homology and Betti computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum FieldSpec {
    #[default]
    GF2,
    GFp(u32),
    Rational,
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::GF2 => write!(f, "gf2"),
            FieldSpec::GFp(p) => write!(f, "gfp:{p}"),
            FieldSpec::Rational => write!(f, "rational"),
        }
    }
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        match s.as_str() {
            "gf2" => return Ok(FieldSpec::GF2),
            "rational" | "q" => return Ok(FieldSpec::Rational),
            _ => {}
        }
        let bad = || Error::invalid("field", format!("`{s}` is not gf2, gfp:<p> or rational"));
        let p: u64 = s
            .strip_prefix("gfp:")
            .ok_or_else(bad)?
            .parse()
            .map_err(|_| bad())?;
        if p > 1 << 31 || !is_prime(p) {
            return Err(Error::invalid("field", format!("p = {p} must be a prime ≤ 2^31")));
        }
        Ok(if p == 2 {
            FieldSpec::GF2
        } else {
            FieldSpec::GFp(p as u32)
        })
    }
}

impl Serialize for FieldSpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FieldSpec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

/// A sparse row: strictly increasing column indices with nonzero entries.
type Row = Vec<(u32, i64)>;

/// Rank of a matrix of sparse integer rows over `field`.
pub fn rank(rows: &[Row], ncols: usize, field: FieldSpec) -> usize {
    match field {
        FieldSpec::GF2 => rank_gf2(rows, ncols),
        FieldSpec::GFp(p) => rank_gfp(rows, p as u64),
        FieldSpec::Rational => rank_rational(rows),
    }
}

fn rank_gf2(rows: &[Row], ncols: usize) -> usize {
    let words = ncols.div_ceil(64);
    let mut pivots: HashMap<usize, Vec<u64>> = HashMap::new();
    for r in rows {
        let mut v = vec![0u64; words];
        for &(c, a) in r {
            if a & 1 == 1 {
                v[c as usize / 64] ^= 1 << (c % 64);
            }
        }
        while let Some(w) = v.iter().position(|&x| x != 0) {
            let lead = w * 64 + v[w].trailing_zeros() as usize;
            match pivots.get(&lead) {
                Some(p) => {
                    for (a, b) in v[w..].iter_mut().zip(&p[w..]) {
                        *a ^= b;
                    }
                }
                None => {
                    pivots.insert(lead, v);
                    break;
                }
            }
        }
    }
    pivots.len()
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// `a - f·b` over sparse rows modulo `p`.
fn axpy_mod(a: &[(u32, u64)], f: u64, b: &[(u32, u64)], p: u64) -> Vec<(u32, u64)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ca = a.get(i).map_or(u32::MAX, |x| x.0);
        let cb = b.get(j).map_or(u32::MAX, |x| x.0);
        let (c, v) = if ca < cb {
            i += 1;
            (ca, a[i - 1].1)
        } else if cb < ca {
            j += 1;
            (cb, (p - f * b[j - 1].1 % p) % p)
        } else {
            i += 1;
            j += 1;
            (ca, (a[i - 1].1 + p - f * b[j - 1].1 % p) % p)
        };
        if v != 0 {
            out.push((c, v));
        }
    }
    out
}

fn rank_gfp(rows: &[Row], p: u64) -> usize {
    let mut pivots: HashMap<u32, Vec<(u32, u64)>> = HashMap::new();
    for r in rows {
        let mut v: Vec<(u32, u64)> = r
            .iter()
            .map(|&(c, a)| (c, a.rem_euclid(p as i64) as u64))
            .filter(|&(_, a)| a != 0)
            .collect();
        while let Some(&(lead, a)) = v.first() {
            match pivots.get(&lead) {
                Some(pr) => v = axpy_mod(&v, a, pr, p),
                None => {
                    let inv = pow_mod(a, p - 2, p);
                    let norm = v.iter().map(|&(c, x)| (c, x * inv % p)).collect();
                    pivots.insert(lead, norm);
                    break;
                }
            }
        }
    }
    pivots.len()
}

/// Integer row arithmetic used by the exact rational rank. The `i128`
/// implementation reports overflow so the caller can restart over `BigInt`.
trait Exact: Clone + PartialEq {
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    /// `x·a - y·b`, or `None` on overflow.
    fn cross(x: &Self, a: &Self, y: &Self, b: &Self) -> Option<Self>;
    fn gcd(&self, other: &Self) -> Self;
    fn div_exact(&self, d: &Self) -> Self;
    fn is_one(&self) -> bool;
    fn normalize_sign(lead: &Self) -> bool;
    fn neg(&self) -> Self;
}

impl Exact for i128 {
    fn from_i64(v: i64) -> Self {
        v as i128
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn cross(x: &Self, a: &Self, y: &Self, b: &Self) -> Option<Self> {
        x.checked_mul(*a)?.checked_sub(y.checked_mul(*b)?)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
    fn is_one(&self) -> bool {
        *self == 1
    }
    fn normalize_sign(lead: &Self) -> bool {
        *lead < 0
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl Exact for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn cross(x: &Self, a: &Self, y: &Self, b: &Self) -> Option<Self> {
        Some(x * a - y * b)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
    fn is_one(&self) -> bool {
        *self == BigInt::from(1)
    }
    fn normalize_sign(lead: &Self) -> bool {
        lead.is_negative()
    }
    fn neg(&self) -> Self {
        -self
    }
}

/// Fraction-free echelon reduction: a new row is combined with the pivot
/// sharing its leading column as `p·row − r·pivot` and made primitive by
/// dividing out the content. Returns `None` if the arithmetic overflows.
fn rank_exact<T: Exact>(rows: &[Row]) -> Option<usize> {
    let mut pivots: HashMap<u32, Vec<(u32, T)>> = HashMap::new();
    for r in rows {
        let mut v: Vec<(u32, T)> = r
            .iter()
            .filter(|&&(_, a)| a != 0)
            .map(|&(c, a)| (c, T::from_i64(a)))
            .collect();
        while let Some((lead, a)) = v.first().cloned() {
            match pivots.get(&lead) {
                Some(pr) => {
                    let p = pr[0].1.clone();
                    let mut out = Vec::with_capacity(v.len() + pr.len());
                    let (mut i, mut j) = (0, 0);
                    let zero = T::from_i64(0);
                    while i < v.len() || j < pr.len() {
                        let ci = v.get(i).map_or(u32::MAX, |x| x.0);
                        let cj = pr.get(j).map_or(u32::MAX, |x| x.0);
                        let (c, x, y) = if ci < cj {
                            i += 1;
                            (ci, &v[i - 1].1, &zero)
                        } else if cj < ci {
                            j += 1;
                            (cj, &zero, &pr[j - 1].1)
                        } else {
                            i += 1;
                            j += 1;
                            (ci, &v[i - 1].1, &pr[j - 1].1)
                        };
                        let e = T::cross(&p, x, &a, y)?;
                        if !e.is_zero() {
                            out.push((c, e));
                        }
                    }
                    if let Some(first) = out.first() {
                        let mut g = first.1.clone();
                        for (_, e) in &out[1..] {
                            if g.is_one() {
                                break;
                            }
                            g = g.gcd(e);
                        }
                        if T::normalize_sign(&out[0].1) {
                            g = g.neg();
                        }
                        if !g.is_one() {
                            for (_, e) in out.iter_mut() {
                                *e = e.div_exact(&g);
                            }
                        }
                    }
                    v = out;
                }
                None => {
                    pivots.insert(lead, v);
                    break;
                }
            }
        }
    }
    Some(pivots.len())
}

fn rank_rational(rows: &[Row]) -> usize {
    rank_exact::<i128>(rows).unwrap_or_else(|| {
        log::debug!("rational rank: i128 overflow, retrying with BigInt");
        rank_exact::<BigInt>(rows).expect("BigInt arithmetic does not overflow")
    })
}

/// Reduced homology dimensions of the complex whose faces, grouped by
/// cardinality, are `by_size` (`by_size[0]` is `[∅]` unless the complex is
/// void). Only nonzero degrees are returned.
pub fn homology_of_faces(by_size: &[Vec<Mask>], field: FieldSpec) -> BTreeMap<isize, usize> {
    let mut out = BTreeMap::new();
    if by_size.first().is_none_or(Vec::is_empty) {
        return out;
    }
    // ranks[k] = rank of the boundary from size k to size k-1
    let mut ranks = vec![0usize; by_size.len() + 1];
    for k in 1..by_size.len() {
        let index: HashMap<Mask, u32> = by_size[k - 1]
            .iter()
            .enumerate()
            .map(|(i, &f)| (f, i as u32))
            .collect();
        let rows: Vec<Row> = by_size[k]
            .iter()
            .map(|&f| {
                let mut row: Row = ones(f)
                    .enumerate()
                    .map(|(pos, v)| {
                        let sign = if pos % 2 == 0 { 1 } else { -1 };
                        (index[&(f & !bit(v))], sign)
                    })
                    .collect();
                row.sort_unstable_by_key(|e| e.0);
                row
            })
            .collect();
        ranks[k] = rank(&rows, by_size[k - 1].len(), field);
    }
    for (k, faces) in by_size.iter().enumerate() {
        let h = faces.len() - ranks[k] - ranks[k + 1];
        if h != 0 {
            out.insert(k as isize - 1, h);
        }
    }
    out
}

/// Faces of the complex on `0..s` whose minimal non-faces are `nonfaces`,
/// grouped by cardinality.
pub fn faces_avoiding(s: usize, nonfaces: &[Mask]) -> Vec<Vec<Mask>> {
    if nonfaces.contains(&0) {
        return Vec::new();
    }
    let mut by_size: Vec<Vec<Mask>> = vec![Vec::new(); s + 1];
    // faces are built in increasing vertex order; a vertex may be added if no
    // non-face containing it becomes covered
    let mut stack: Vec<(Mask, usize)> = vec![(0, 0)];
    let by_vertex: Vec<Vec<Mask>> = (0..s)
        .map(|v| nonfaces.iter().copied().filter(|&g| g & bit(v) != 0).collect())
        .collect();
    while let Some((f, next)) = stack.pop() {
        by_size[bits::count(f)].push(f);
        for (v, through_v) in by_vertex.iter().enumerate().skip(next) {
            let g = f | bit(v);
            if through_v.iter().all(|&n| !bits::is_subset(n, g)) {
                stack.push((g, v + 1));
            }
        }
    }
    while by_size.last().is_some_and(Vec::is_empty) {
        by_size.pop();
    }
    by_size
}

/// Faces of the complex generated by `facets` on `0..s`, grouped by
/// cardinality.
pub fn faces_of_facets(s: usize, facets: &[Mask]) -> Vec<Vec<Mask>> {
    if facets.is_empty() {
        return Vec::new();
    }
    let mut by_size: Vec<Vec<Mask>> = vec![Vec::new(); s + 1];
    let mut stack: Vec<(Mask, usize)> = vec![(0, 0)];
    while let Some((f, next)) = stack.pop() {
        by_size[bits::count(f)].push(f);
        for v in next..s {
            let g = f | bit(v);
            if facets.iter().any(|&t| bits::is_subset(g, t)) {
                stack.push((g, v + 1));
            }
        }
    }
    while by_size.last().is_some_and(Vec::is_empty) {
        by_size.pop();
    }
    by_size
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dims(facets: &[Mask], s: usize, field: FieldSpec) -> Vec<(isize, usize)> {
        homology_of_faces(&faces_of_facets(s, facets), field)
            .into_iter()
            .collect()
    }

    const FIELDS: [FieldSpec; 3] = [FieldSpec::GF2, FieldSpec::GFp(3), FieldSpec::Rational];

    #[test]
    fn basic_spaces() {
        for f in FIELDS {
            // hollow triangle
            assert_eq!(dims(&[0b011, 0b110, 0b101], 3, f), vec![(1, 1)]);
            // full simplex
            assert!(dims(&[0b1111], 4, f).is_empty());
            // two points
            assert_eq!(dims(&[0b01, 0b10], 2, f), vec![(0, 1)]);
            // irrelevant complex and void complex
            assert_eq!(dims(&[0], 0, f), vec![(-1, 1)]);
            assert!(dims(&[], 3, f).is_empty());
            // hollow tetrahedron
            let sphere: Vec<Mask> = bits::k_subsets(4, 3).collect();
            assert_eq!(dims(&sphere, 4, f), vec![(2, 1)]);
        }
    }

    /// Six-vertex triangulation of the real projective plane.
    fn rp2() -> Vec<Mask> {
        let tris = [
            [0, 1, 2],
            [0, 2, 3],
            [0, 3, 4],
            [0, 4, 5],
            [0, 5, 1],
            [1, 2, 4],
            [2, 3, 5],
            [3, 4, 1],
            [4, 5, 2],
            [5, 1, 3],
        ];
        tris.iter()
            .map(|t| t.iter().fold(0, |m, &v| m | bit(v)))
            .collect()
    }

    #[test]
    fn projective_plane_is_field_sensitive() {
        let f = rp2();
        assert_eq!(dims(&f, 6, FieldSpec::GF2), vec![(1, 1), (2, 1)]);
        assert!(dims(&f, 6, FieldSpec::Rational).is_empty());
        assert!(dims(&f, 6, FieldSpec::GFp(3)).is_empty());
    }

    #[test]
    fn nonface_enumeration_matches_facet_enumeration() {
        // the boundary of a triangle has the single minimal nonface {0,1,2}
        let a = faces_avoiding(3, &[0b111]);
        let b = faces_of_facets(3, &[0b011, 0b110, 0b101]);
        let norm = |mut v: Vec<Vec<Mask>>| {
            v.iter_mut().for_each(|x| x.sort_unstable());
            v
        };
        assert_eq!(norm(a), norm(b));
        assert!(faces_avoiding(3, &[0]).is_empty());
    }

    #[test]
    fn ranks_agree_with_dense_elimination() {
        use rand::{Rng, SeedableRng};
        let mut r = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        for _ in 0..200 {
            let (m, n) = (r.gen_range(1..8), r.gen_range(1..8));
            let dense: Vec<Vec<i64>> = (0..m)
                .map(|_| (0..n).map(|_| r.gen_range(-3..=3)).collect())
                .collect();
            let rows: Vec<Row> = dense
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|(_, &a)| a != 0)
                        .map(|(c, &a)| (c as u32, a))
                        .collect()
                })
                .collect();
            // dense fraction-free elimination without content reduction
            let mut mat: Vec<Vec<BigInt>> = dense
                .iter()
                .map(|r| r.iter().map(|&a| BigInt::from(a)).collect())
                .collect();
            let mut rank = 0;
            for c in 0..n {
                if let Some(p) = (rank..m).find(|&i| !Zero::is_zero(&mat[i][c])) {
                    mat.swap(rank, p);
                    let pivot = mat[rank].clone();
                    for (i, row) in mat.iter_mut().enumerate() {
                        if i != rank && !Zero::is_zero(&row[c]) {
                            let b = row[c].clone();
                            for (x, y) in row.iter_mut().zip(&pivot) {
                                *x = &*x * &pivot[c] - y * &b;
                            }
                        }
                    }
                    rank += 1;
                }
            }
            assert_eq!(rank_rational(&rows), rank);
            assert_eq!(rank_exact::<BigInt>(&rows), Some(rank));
        }
    }

    #[test]
    fn field_parsing() {
        assert_eq!("gf2".parse::<FieldSpec>().unwrap(), FieldSpec::GF2);
        assert_eq!("gfp:7".parse::<FieldSpec>().unwrap(), FieldSpec::GFp(7));
        assert_eq!("rational".parse::<FieldSpec>().unwrap(), FieldSpec::Rational);
        assert!("gfp:8".parse::<FieldSpec>().is_err());
        assert!("gfp:4294967311".parse::<FieldSpec>().is_err());
        assert!("real".parse::<FieldSpec>().is_err());
        assert_eq!(FieldSpec::GFp(7).to_string(), "gfp:7");
    }
}
