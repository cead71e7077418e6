//! Finite lattices stored as a dense order matrix with tabulated meet and join.
//!
//! Every [`FiniteLattice`] is normalized: elements are numbered along a linear
//! extension of the order, sorted by `(height, cover degree, input index)`, so
//! the bottom is always `0` and the top is always `n - 1`. Two lattices built
//! from the same cover list therefore have identical numbering, which keeps
//! serialized output and every search order deterministic.

mod birkhoff;
mod catalog;
mod embedding;
mod iso;
pub(crate) mod product;
mod structure;
mod sublattice;

pub use birkhoff::{downset_lattice, ji_poset, Poset};
pub use catalog::{boolean, chain, m3, m_n, n5, partition_lattice, standard};
pub use embedding::Embedding;
pub use iso::{are_isomorphic, are_isomorphic_capped};
pub use product::{direct_product, direct_product_capped, interval, product_labeled, LabeledLattice};
pub use structure::{
    atoms, is_distributive_by_identity, is_distributive_by_sublattices, is_modular,
    is_sectionally_complemented, join_irreducibles, meet_irreducibles, structure_report,
    StructureReport,
};
pub use sublattice::find_sublattice_embedding;

use crate::bits::BitSet;
use crate::error::{Error, MissingBound, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct FiniteLattice {
    size: usize,
    up: Vec<BitSet>,
    down: Vec<BitSet>,
    covers: Vec<(usize, usize)>,
    lower_covers: Vec<Vec<usize>>,
    upper_covers: Vec<Vec<usize>>,
    height: Vec<usize>,
    meet: Vec<u32>,
    join: Vec<u32>,
}

impl std::fmt::Debug for FiniteLattice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiniteLattice")
            .field("size", &self.size)
            .field("covers", &self.covers)
            .finish()
    }
}

impl FiniteLattice {
    /// Builds a lattice from a list of cover (or any generating `lo < hi`) pairs.
    ///
    /// Redundant edges are accepted and reduced away.
    pub fn from_covers(n: usize, covers: &[(usize, usize)]) -> Result<Self> {
        Self::from_covers_with_positions(n, covers).map(|(l, _)| l)
    }

    /// Like [`from_covers`](Self::from_covers), also returning where each
    /// input index ended up after normalization.
    pub fn from_covers_with_positions(
        n: usize,
        covers: &[(usize, usize)],
    ) -> Result<(Self, Vec<usize>)> {
        let up = reflexive_transitive_closure(n, covers)?;
        Self::from_up_sets(up)
    }

    /// Builds a lattice from an order predicate on `0..n`.
    ///
    /// The predicate is checked to be a partial order; nothing is closed
    /// transitively on its behalf.
    pub fn from_order<F>(n: usize, le: F) -> Result<(Self, Vec<usize>)>
    where
        F: Fn(usize, usize) -> bool,
    {
        let up = (0..n)
            .map(|a| {
                let mut row = BitSet::new(n);
                for b in 0..n {
                    if le(a, b) {
                        row.insert(b);
                    }
                }
                row
            })
            .collect();
        Self::from_up_sets(up)
    }

    /// Builds a lattice from principal filters `up[a] = { b : a <= b }`.
    pub(crate) fn from_up_sets(up: Vec<BitSet>) -> Result<(Self, Vec<usize>)> {
        let n = up.len();
        if n == 0 {
            return Err(Error::Empty);
        }
        check_partial_order(&up)?;
        let down = transpose(&up);

        // Linear extension by principal ideal size, used to compute heights.
        let mut by_ideal: Vec<usize> = (0..n).collect();
        by_ideal.sort_by_key(|&x| (down[x].count(), x));

        let (lower, upper) = reduce(&up, &down);
        let mut height = vec![0usize; n];
        for &x in &by_ideal {
            height[x] = lower[x].iter().map(|&c| height[c] + 1).max().unwrap_or(0);
        }

        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&x| (height[x], lower[x].len() + upper[x].len(), x));
        let mut position = vec![0usize; n];
        for (new, &old) in order.iter().enumerate() {
            position[old] = new;
        }

        let permute = |sets: &[BitSet]| -> Vec<BitSet> {
            order
                .iter()
                .map(|&old| {
                    let mut row = BitSet::new(n);
                    for x in sets[old].iter() {
                        row.insert(position[x]);
                    }
                    row
                })
                .collect()
        };
        let up = permute(&up);
        let down = permute(&down);
        let remap = |lists: &[Vec<usize>]| -> Vec<Vec<usize>> {
            order
                .iter()
                .map(|&old| {
                    let mut v: Vec<usize> = lists[old].iter().map(|&x| position[x]).collect();
                    v.sort_unstable();
                    v
                })
                .collect()
        };
        let lower_covers = remap(&lower);
        let upper_covers = remap(&upper);
        let height: Vec<usize> = order.iter().map(|&old| height[old]).collect();

        let mut covers = Vec::new();
        for (a, ups) in upper_covers.iter().enumerate() {
            for &b in ups {
                covers.push((a, b));
            }
        }

        let (meet, join) = tabulate(&up, &down).map_err(|e| match e {
            Error::NotALattice { a, b, which } => Error::NotALattice {
                a: order[a],
                b: order[b],
                which,
            },
            other => other,
        })?;

        Ok((
            Self {
                size: n,
                up,
                down,
                covers,
                lower_covers,
                upper_covers,
                height,
                meet,
                join,
            },
            position,
        ))
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size
    }

    #[inline]
    pub fn bottom(&self) -> usize {
        0
    }

    #[inline]
    pub fn top(&self) -> usize {
        self.size - 1
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    #[inline]
    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    #[inline]
    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.leq(a, b) || self.leq(b, a)
    }

    #[inline]
    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.size + b] as usize
    }

    #[inline]
    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.size + b] as usize
    }

    /// Cover pairs `(a, b)` with `a ≺ b`, sorted.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn is_cover(&self, a: usize, b: usize) -> bool {
        self.upper_covers[a].binary_search(&b).is_ok()
    }

    pub fn upper_covers(&self, a: usize) -> &[usize] {
        &self.upper_covers[a]
    }

    pub fn lower_covers(&self, a: usize) -> &[usize] {
        &self.lower_covers[a]
    }

    /// Length of the longest chain from the bottom to `a`.
    pub fn height(&self, a: usize) -> usize {
        self.height[a]
    }

    pub fn up_set(&self, a: usize) -> &BitSet {
        &self.up[a]
    }

    pub fn down_set(&self, a: usize) -> &BitSet {
        &self.down[a]
    }

    pub fn is_trivial(&self) -> bool {
        self.size == 1
    }

    /// The covers recomputed from the order matrix alone.
    pub fn reduced_covers(&self) -> Vec<(usize, usize)> {
        let (_, upper) = reduce(&self.up, &self.down);
        let mut out = Vec::new();
        for (a, ups) in upper.iter().enumerate() {
            let mut ups = ups.clone();
            ups.sort_unstable();
            out.extend(ups.into_iter().map(|b| (a, b)));
        }
        out
    }

    /// The order-dual lattice, renormalized.
    pub fn dual(&self) -> FiniteLattice {
        let covers: Vec<_> = self.covers.iter().map(|&(a, b)| (b, a)).collect();
        FiniteLattice::from_covers(self.size, &covers).expect("dual of a lattice is a lattice")
    }
}

fn reflexive_transitive_closure(n: usize, edges: &[(usize, usize)]) -> Result<Vec<BitSet>> {
    if n == 0 {
        return Err(Error::Empty);
    }
    let mut succ = vec![Vec::new(); n];
    let mut indegree = vec![0usize; n];
    for &(a, b) in edges {
        for x in [a, b] {
            if x >= n {
                return Err(Error::IndexOutOfRange { index: x, size: n });
            }
        }
        if a == b {
            return Err(Error::CycleDetected(a));
        }
        succ[a].push(b);
        indegree[b] += 1;
    }
    // Kahn's algorithm; anything left over sits on a cycle.
    let mut topo = Vec::with_capacity(n);
    let mut stack: Vec<usize> = (0..n).rev().filter(|&x| indegree[x] == 0).collect();
    while let Some(x) = stack.pop() {
        topo.push(x);
        for &y in &succ[x] {
            indegree[y] -= 1;
            if indegree[y] == 0 {
                stack.push(y);
            }
        }
    }
    if topo.len() < n {
        let stuck = (0..n).find(|&x| indegree[x] > 0).unwrap();
        return Err(Error::CycleDetected(stuck));
    }
    let mut up = vec![BitSet::new(n); n];
    for &x in topo.iter().rev() {
        let mut row = BitSet::new(n);
        row.insert(x);
        for &y in &succ[x] {
            row.union_with(&up[y]);
        }
        up[x] = row;
    }
    Ok(up)
}

fn check_partial_order(up: &[BitSet]) -> Result<()> {
    let n = up.len();
    for (a, row) in up.iter().enumerate() {
        if row.len() != n {
            return Err(Error::NotAPartialOrder(format!("row {a} has wrong width")));
        }
        if !row.contains(a) {
            return Err(Error::NotAPartialOrder(format!("{a} <= {a} fails")));
        }
        for b in row.iter() {
            if b != a && up[b].contains(a) {
                return Err(Error::NotAPartialOrder(format!(
                    "{a} <= {b} and {b} <= {a}"
                )));
            }
            if !up[b].is_subset(row) {
                let c = up[b].iter().find(|&c| !row.contains(c)).unwrap();
                return Err(Error::NotAPartialOrder(format!(
                    "{a} <= {b} <= {c} but not {a} <= {c}"
                )));
            }
        }
    }
    Ok(())
}

fn transpose(rows: &[BitSet]) -> Vec<BitSet> {
    let n = rows.len();
    let mut out = vec![BitSet::new(n); n];
    for (a, row) in rows.iter().enumerate() {
        for b in row.iter() {
            out[b].insert(a);
        }
    }
    out
}

/// Transitive reduction: returns (lower covers, upper covers) per element.
fn reduce(up: &[BitSet], down: &[BitSet]) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
    let n = up.len();
    let mut lower = vec![Vec::new(); n];
    let mut upper = vec![Vec::new(); n];
    for a in 0..n {
        for b in up[a].iter() {
            if b != a && down[b].intersection(&up[a]).count() == 2 {
                upper[a].push(b);
                lower[b].push(a);
            }
        }
    }
    (lower, upper)
}

/// Fills meet and join tables for a normalized order, failing on the first
/// pair without a unique bound.
fn tabulate(up: &[BitSet], down: &[BitSet]) -> Result<(Vec<u32>, Vec<u32>)> {
    let n = up.len();
    let mut meet = vec![0u32; n * n];
    let mut join = vec![0u32; n * n];
    for a in 0..n {
        for b in a..n {
            // In a linear extension the least upper bound, if any, is the
            // smallest-indexed upper bound.
            let ub = up[a].intersection(&up[b]);
            let j = match ub.first() {
                Some(c) if up[c].count() == ub.count() => c,
                _ => {
                    return Err(Error::NotALattice {
                        a,
                        b,
                        which: MissingBound::Join,
                    })
                }
            };
            let lb = down[a].intersection(&down[b]);
            let m = match lb.last() {
                Some(c) if down[c].count() == lb.count() => c,
                _ => {
                    return Err(Error::NotALattice {
                        a,
                        b,
                        which: MissingBound::Meet,
                    })
                }
            };
            join[a * n + b] = j as u32;
            join[b * n + a] = j as u32;
            meet[a * n + b] = m as u32;
            meet[b * n + a] = m as u32;
        }
    }
    Ok((meet, join))
}
