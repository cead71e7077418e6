//! Backtracking lattice isomorphism.
//!
//! Candidates are partitioned by a per-element invariant and a new element may
//! only be mapped to an upper cover of the image of one of its lower covers.

use super::FiniteLattice;
use crate::error::{Error, Result};
use crate::limits::Limits;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct Invariant {
    height: usize,
    depth: usize,
    lower: usize,
    upper: usize,
    ideal: usize,
    filter: usize,
}

fn invariants(l: &FiniteLattice) -> Vec<Invariant> {
    let n = l.size();
    let mut depth = vec![0usize; n];
    for x in (0..n).rev() {
        depth[x] = l
            .upper_covers(x)
            .iter()
            .map(|&c| depth[c] + 1)
            .max()
            .unwrap_or(0);
    }
    (0..n)
        .map(|x| Invariant {
            height: l.height(x),
            depth: depth[x],
            lower: l.lower_covers(x).len(),
            upper: l.upper_covers(x).len(),
            ideal: l.down_set(x).count(),
            filter: l.up_set(x).count(),
        })
        .collect()
}

/// Finds a lattice isomorphism `a → b`, the first in canonical search order.
///
/// Lattices above the default isomorphism cap (512 elements) are refused.
pub fn are_isomorphic(a: &FiniteLattice, b: &FiniteLattice) -> Result<Option<Vec<usize>>> {
    are_isomorphic_capped(a, b, Limits::default().max_isomorphism)
}

pub fn are_isomorphic_capped(
    a: &FiniteLattice,
    b: &FiniteLattice,
    cap: usize,
) -> Result<Option<Vec<usize>>> {
    for l in [a, b] {
        if l.size() > cap {
            return Err(Error::CapExceeded {
                what: "isomorphism check",
                size: l.size(),
                cap,
            });
        }
    }
    if a.size() != b.size() || a.covers().len() != b.covers().len() {
        return Ok(None);
    }
    let inv_a = invariants(a);
    let inv_b = invariants(b);
    let mut sa = inv_a.clone();
    let mut sb = inv_b.clone();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return Ok(None);
    }

    let n = a.size();
    let mut search = Search {
        a,
        b,
        inv_a: &inv_a,
        inv_b: &inv_b,
        map: vec![usize::MAX; n],
        used: vec![false; n],
    };
    if search.extend(0) {
        Ok(Some(search.map))
    } else {
        Ok(None)
    }
}

struct Search<'a> {
    a: &'a FiniteLattice,
    b: &'a FiniteLattice,
    inv_a: &'a [Invariant],
    inv_b: &'a [Invariant],
    map: Vec<usize>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn extend(&mut self, x: usize) -> bool {
        if x == self.a.size() {
            return true;
        }
        let candidates: Vec<usize> = match self.a.lower_covers(x).first() {
            None => vec![self.b.bottom()],
            Some(&c) => self.b.upper_covers(self.map[c]).to_vec(),
        };
        for y in candidates {
            if self.used[y] || self.inv_a[x] != self.inv_b[y] || !self.consistent(x, y) {
                continue;
            }
            self.map[x] = y;
            self.used[y] = true;
            if self.extend(x + 1) {
                return true;
            }
            self.used[y] = false;
            self.map[x] = usize::MAX;
        }
        false
    }

    /// Elements below `x` in index order are already mapped; the order
    /// between them and `x` must match in both directions.
    fn consistent(&self, x: usize, y: usize) -> bool {
        (0..x).all(|w| {
            let v = self.map[w];
            self.a.leq(w, x) == self.b.leq(v, y) && self.b.leq(y, v) == self.a.leq(x, w)
        })
    }
}
