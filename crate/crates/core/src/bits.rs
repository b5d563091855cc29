//! Bitmask helpers. A [`Mask`] is a subset of the index range `0..32`.

pub type Mask = u32;

/// Hard ceiling on the number of vertices any object can carry.
pub const MAX_VERTICES: usize = 32;

#[inline]
pub fn bit(i: usize) -> Mask {
    1 << i
}

#[inline]
pub fn full(n: usize) -> Mask {
    if n >= 32 {
        Mask::MAX
    } else {
        (1 << n) - 1
    }
}

#[inline]
pub fn is_subset(a: Mask, b: Mask) -> bool {
    a & !b == 0
}

#[inline]
pub fn count(m: Mask) -> usize {
    m.count_ones() as usize
}

/// Iterates the set bits of `m` in increasing order.
pub fn ones(mut m: Mask) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        }
    })
}

/// All subsets of `m`, including `0` and `m` itself.
pub fn subsets(m: Mask) -> impl Iterator<Item = Mask> {
    let mut sub = Some(m);
    std::iter::from_fn(move || {
        let cur = sub?;
        sub = if cur == 0 { None } else { Some((cur - 1) & m) };
        Some(cur)
    })
}

/// All `k`-subsets of `0..n` in increasing numeric order (Gosper's hack).
pub fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = Mask> {
    let limit: u64 = 1u64 << n;
    let mut cur: Option<u64> = if k > n {
        None
    } else if k == 0 {
        Some(0)
    } else {
        Some((1u64 << k) - 1)
    };
    std::iter::from_fn(move || {
        let c = cur?;
        cur = if c == 0 {
            None
        } else {
            let low = c & c.wrapping_neg();
            let ripple = c + low;
            let next = (((ripple ^ c) >> 2) / low) | ripple;
            (next < limit).then_some(next)
        };
        Some(c as Mask)
    })
}

/// Packs the bits of `m` selected by `sel` into the low bits (software `pext`).
pub fn compress(m: Mask, sel: Mask) -> Mask {
    let mut out = 0;
    for (j, i) in ones(sel).enumerate() {
        if m & bit(i) != 0 {
            out |= bit(j);
        }
    }
    out
}

/// Inverse of [`compress`]: spreads the low bits of `m` onto the positions of `sel`.
pub fn expand(m: Mask, sel: Mask) -> Mask {
    let mut out = 0;
    for (j, i) in ones(sel).enumerate() {
        if m & bit(j) != 0 {
            out |= bit(i);
        }
    }
    out
}

/// Canonical order on vertex sets: by size, then lexicographically on the
/// sorted index lists.
pub fn canonical_cmp(a: &Mask, b: &Mask) -> std::cmp::Ordering {
    count(*a)
        .cmp(&count(*b))
        .then_with(|| ones(*a).cmp(ones(*b)))
}

pub fn sort_canonical(sets: &mut [Mask]) {
    sets.sort_by(canonical_cmp);
}

/// Removes duplicates and every set containing another one; the result is a
/// canonically sorted antichain.
pub fn minimalize(sets: impl IntoIterator<Item = Mask>) -> Vec<Mask> {
    let mut v: Vec<Mask> = sets.into_iter().collect();
    v.sort_unstable_by_key(|m| (count(*m), *m));
    v.dedup();
    let mut kept: Vec<Mask> = Vec::with_capacity(v.len());
    for s in v {
        if !kept.iter().any(|&k| is_subset(k, s)) {
            kept.push(s);
        }
    }
    sort_canonical(&mut kept);
    kept
}

pub fn is_antichain(sets: &[Mask]) -> bool {
    sets.iter().enumerate().all(|(i, &a)| {
        sets.iter()
            .enumerate()
            .all(|(j, &b)| i == j || !is_subset(a, b))
    })
}

/// Remaps a mask through an index translation table; `None` entries are dropped.
pub fn remap(m: Mask, table: &[Option<usize>]) -> Mask {
    ones(m)
        .filter_map(|i| table[i])
        .fold(0, |acc, j| acc | bit(j))
}
