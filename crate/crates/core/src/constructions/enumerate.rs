//! Exhaustive generation of small lattices up to isomorphism.
//!
//! Removing an atom from a lattice with at least three elements leaves a
//! lattice, so every `n`-element lattice arises from an `(n-1)`-element one
//! by adding a new atom whose upper covers form an antichain of non-bottom
//! elements.

use std::collections::HashMap;

use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::lattice::{are_isomorphic, chain, FiniteLattice};

/// Largest size accepted by [`enumerate_lattices`].
pub const MAX_ENUMERATION_SIZE: usize = 9;

/// All lattices with exactly `n` elements, one per isomorphism class.
///
/// The order is deterministic: by number of covers, then by cover list.
pub fn enumerate_lattices(n: usize) -> Result<Vec<FiniteLattice>> {
    if n > MAX_ENUMERATION_SIZE {
        return Err(Error::CapExceeded {
            what: "lattice enumeration",
            size: n,
            cap: MAX_ENUMERATION_SIZE,
        });
    }
    if n == 0 {
        return Err(Error::Empty);
    }
    let mut level = vec![chain(n.min(2))?];
    for _ in 3..=n {
        level = extend_by_atom(&level);
    }
    Ok(level)
}

/// All lattices with at most `max_n` elements, grouped by size.
pub fn enumerate_up_to(max_n: usize) -> Result<Vec<Vec<FiniteLattice>>> {
    if max_n > MAX_ENUMERATION_SIZE {
        return Err(Error::CapExceeded {
            what: "lattice enumeration",
            size: max_n,
            cap: MAX_ENUMERATION_SIZE,
        });
    }
    let mut out: Vec<Vec<FiniteLattice>> = Vec::new();
    for n in 1..=max_n {
        let next = match n {
            1 | 2 => vec![chain(n)?],
            _ => extend_by_atom(out.last().expect("previous level")),
        };
        out.push(next);
    }
    Ok(out)
}

fn extend_by_atom(smaller: &[FiniteLattice]) -> Vec<FiniteLattice> {
    let mut buckets: HashMap<Vec<(usize, usize, usize)>, Vec<usize>> = HashMap::new();
    let mut found: Vec<FiniteLattice> = Vec::new();
    for l in smaller {
        let m = l.size();
        for upper in antichains(l) {
            // New element m: 0 < m, and m < y iff y lies above some chosen cover.
            let mut above = BitSet::new(m + 1);
            for &u in &upper {
                for y in l.up_set(u).iter() {
                    above.insert(y);
                }
            }
            let le = |a: usize, b: usize| match (a == m, b == m) {
                (true, true) => true,
                (true, false) => above.contains(b),
                (false, true) => a == l.bottom(),
                (false, false) => l.leq(a, b),
            };
            let Ok((candidate, _)) = FiniteLattice::from_order(m + 1, le) else {
                continue;
            };
            let key = invariant(&candidate);
            let bucket = buckets.entry(key).or_default();
            let duplicate = bucket.iter().any(|&i| {
                are_isomorphic(&found[i], &candidate)
                    .expect("small lattices are within the isomorphism cap")
                    .is_some()
            });
            if !duplicate {
                bucket.push(found.len());
                found.push(candidate);
            }
        }
    }
    found.sort_by(|a, b| {
        (a.covers().len(), a.covers()).cmp(&(b.covers().len(), b.covers()))
    });
    found
}

/// Nonempty antichains of non-bottom elements, in lexicographic order.
fn antichains(l: &FiniteLattice) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn go(l: &FiniteLattice, next: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        for x in next..l.size() {
            if current.iter().any(|&y| l.comparable(x, y)) {
                continue;
            }
            current.push(x);
            out.push(current.clone());
            go(l, x + 1, current, out);
            current.pop();
        }
    }
    go(l, 1, &mut current, &mut out);
    out
}

/// Sorted multiset of (height, lower cover count, upper cover count).
fn invariant(l: &FiniteLattice) -> Vec<(usize, usize, usize)> {
    let mut v: Vec<_> = l
        .elements()
        .map(|x| (l.height(x), l.lower_covers(x).len(), l.upper_covers(x).len()))
        .collect();
    v.sort_unstable();
    v
}

/// Canonical form of a lattice for the naive enumerator: the smallest bitmask
/// of strict relations among the non-bound elements over all relabelings.
pub fn naive_canonical_form(l: &FiniteLattice) -> u64 {
    let n = l.size();
    if n <= 2 {
        return 0;
    }
    let inner: Vec<usize> = (1..n - 1).collect();
    let m = inner.len();
    let rel = |i: usize, j: usize| l.lt(inner[i], inner[j]);
    let mut best = u64::MAX;
    let mut perm: Vec<usize> = (0..m).collect();
    loop {
        best = best.min(mask(m, |i, j| rel(perm[i], perm[j])));
        if !next_permutation(&mut perm) {
            break;
        }
    }
    best
}

fn mask(m: usize, rel: impl Fn(usize, usize) -> bool) -> u64 {
    let mut bits = 0u64;
    for i in 0..m {
        for j in 0..m {
            if i != j && rel(i, j) {
                bits |= 1 << (i * m + j);
            }
        }
    }
    bits
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).expect("pivot");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Independent brute-force enumerator: every strict order on the non-bound
/// elements that is compatible with their index order, kept when every pair
/// has a least upper bound, deduplicated by [`naive_canonical_form`]-style
/// minimal masks. Returns the set of canonical masks. Intended for `n <= 7`.
pub fn naive_lattice_forms(n: usize) -> Vec<u64> {
    if n <= 2 {
        return if n == 0 { Vec::new() } else { vec![0] };
    }
    let m = n - 2;
    let pairs: Vec<(usize, usize)> = (0..m).flat_map(|i| (i + 1..m).map(move |j| (i, j))).collect();
    let mut forms = std::collections::BTreeSet::new();
    for bits in 0u64..(1 << pairs.len()) {
        let mut lt = vec![vec![false; m]; m];
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if bits >> k & 1 == 1 {
                lt[i][j] = true;
            }
        }
        let transitive = (0..m).all(|i| {
            (0..m).all(|j| !lt[i][j] || (0..m).all(|k| !lt[j][k] || lt[i][k]))
        });
        if !transitive || !has_all_joins(m, &lt) {
            continue;
        }
        let mut perm: Vec<usize> = (0..m).collect();
        let mut best = u64::MAX;
        loop {
            best = best.min(mask(m, |i, j| lt[perm[i]][perm[j]]));
            if !next_permutation(&mut perm) {
                break;
            }
        }
        forms.insert(best);
    }
    forms.into_iter().collect()
}

/// With a bottom and top adjoined, a finite bounded poset is a lattice iff
/// every pair of inner elements has a least upper bound (the top if there is
/// no inner one).
fn has_all_joins(m: usize, lt: &[Vec<bool>]) -> bool {
    let le = |i: usize, j: usize| i == j || lt[i][j];
    (0..m).all(|a| {
        (a + 1..m).all(|b| {
            let ubs: Vec<usize> = (0..m).filter(|&z| le(a, z) && le(b, z)).collect();
            ubs.is_empty() || ubs.iter().any(|&z| ubs.iter().all(|&w| le(z, w)))
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{boolean, m3, n5};

    #[test]
    fn counts() {
        let expected = [1, 1, 1, 2, 5, 15, 53];
        for (i, &c) in expected.iter().enumerate() {
            assert_eq!(enumerate_lattices(i + 1).unwrap().len(), c, "n = {}", i + 1);
        }
    }

    #[test]
    fn cap() {
        assert!(matches!(enumerate_lattices(10), Err(Error::CapExceeded { .. })));
        assert!(matches!(enumerate_up_to(10), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn four_and_five() {
        let four = enumerate_lattices(4).unwrap();
        assert!(four.iter().any(|l| are_isomorphic(l, &boolean(2).unwrap()).unwrap().is_some()));
        assert!(four.iter().any(|l| are_isomorphic(l, &chain(4).unwrap()).unwrap().is_some()));
        let five = enumerate_lattices(5).unwrap();
        for named in [m3(), n5(), chain(5).unwrap()] {
            assert!(five.iter().any(|l| are_isomorphic(l, &named).unwrap().is_some()));
        }
    }

    #[test]
    fn deterministic() {
        let a = enumerate_lattices(6).unwrap();
        let b = enumerate_lattices(6).unwrap();
        assert_eq!(a, b);
        let levels = enumerate_up_to(6).unwrap();
        assert_eq!(levels[5], a);
    }

    #[test]
    fn agrees_with_naive_generator() {
        for n in 1..=7 {
            let mut ours: Vec<u64> = enumerate_lattices(n)
                .unwrap()
                .iter()
                .map(naive_canonical_form)
                .collect();
            ours.sort_unstable();
            let len = ours.len();
            ours.dedup();
            assert_eq!(ours.len(), len, "duplicate classes at n = {n}");
            assert_eq!(ours, naive_lattice_forms(n), "n = {n}");
        }
    }
}
