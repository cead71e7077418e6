//! Lattice congruences and the predicates built on them.
//!
//! A [`Congruence`] is stored as a block array over its host's elements. The
//! host is not kept inside the value; every operation that needs it takes the
//! lattice explicitly. Because hosts are normalized to a linear extension,
//! the least element of each block is also its smallest index, and block ids
//! are numbered in that order.

mod classify;
mod con_lattice;
mod cpe;
mod permute;
mod polynomial;
mod pq;

pub use classify::{classify, classify_con, Classification, Property, Violation};
pub use con_lattice::{con_lattice, con_lattice_with, ConLattice};
pub use cpe::{is_cpe, is_cpe_with, restrict, CpeReport};
pub use permute::{is_congruence_permutable, Permutability, PermutabilityWitness};
pub use polynomial::{
    is_algebraically_isoform, is_algebraically_isoform_with, AlgebraicIsoform, PolyTerm,
    Polynomial,
};
pub use pq::{check_properties_pq, PqReport};

use crate::error::Result;
use crate::lattice::FiniteLattice;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Congruence {
    block_of: Vec<u32>,
    num_blocks: usize,
}

impl std::fmt::Debug for Congruence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(self.blocks()).finish()
    }
}

impl Congruence {
    /// Normalizes an arbitrary labelling into block ids ordered by first
    /// occurrence. The caller vouches that it is a congruence of its host.
    pub fn from_labels<T: Copy + Eq + std::hash::Hash>(labels: &[T]) -> Self {
        let mut ids = std::collections::HashMap::new();
        let block_of: Vec<u32> = labels
            .iter()
            .map(|l| {
                let next = ids.len() as u32;
                *ids.entry(*l).or_insert(next)
            })
            .collect();
        Self {
            num_blocks: ids.len(),
            block_of,
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            block_of: (0..n as u32).collect(),
            num_blocks: n,
        }
    }

    pub fn all(n: usize) -> Self {
        Self {
            block_of: vec![0; n],
            num_blocks: usize::from(n > 0),
        }
    }

    pub fn size(&self) -> usize {
        self.block_of.len()
    }

    pub fn block_of(&self, x: usize) -> usize {
        self.block_of[x] as usize
    }

    pub fn block_array(&self) -> &[u32] {
        &self.block_of
    }

    pub fn num_blocks(&self) -> usize {
        self.num_blocks
    }

    pub fn related(&self, x: usize, y: usize) -> bool {
        self.block_of[x] == self.block_of[y]
    }

    pub fn is_identity(&self) -> bool {
        self.num_blocks == self.size()
    }

    pub fn is_all(&self) -> bool {
        self.num_blocks <= 1
    }

    /// Blocks as sorted element lists, in block-id order.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.num_blocks];
        for (x, &b) in self.block_of.iter().enumerate() {
            out[b as usize].push(x);
        }
        out
    }

    pub fn class_of(&self, x: usize) -> Vec<usize> {
        let b = self.block_of[x];
        (0..self.size()).filter(|&y| self.block_of[y] == b).collect()
    }

    /// `self ≤ other` in the refinement order.
    pub fn refines(&self, other: &Congruence) -> bool {
        let mut image = vec![u32::MAX; self.num_blocks];
        self.block_of
            .iter()
            .zip(&other.block_of)
            .all(|(&mine, &theirs)| {
                let slot = &mut image[mine as usize];
                if *slot == u32::MAX {
                    *slot = theirs;
                }
                *slot == theirs
            })
    }

    /// Common refinement.
    pub fn meet(&self, other: &Congruence) -> Congruence {
        let pairs: Vec<(u32, u32)> = self
            .block_of
            .iter()
            .zip(&other.block_of)
            .map(|(&a, &b)| (a, b))
            .collect();
        Congruence::from_labels(&pairs)
    }

    /// Join in the congruence lattice: the equivalence generated by both.
    pub fn join(&self, other: &Congruence) -> Congruence {
        let mut uf = UnionFind::new(self.size());
        for c in [self, other] {
            let mut first = vec![usize::MAX; c.num_blocks];
            for (x, &b) in c.block_of.iter().enumerate() {
                let slot = &mut first[b as usize];
                if *slot == usize::MAX {
                    *slot = x;
                } else {
                    uf.union(*slot, x);
                }
            }
        }
        uf.to_congruence()
    }

    /// Exhaustive check that `self` is compatible with meet and join of `l`.
    pub fn is_compatible(&self, l: &FiniteLattice) -> bool {
        if self.size() != l.size() {
            return false;
        }
        let n = l.size();
        // Compatibility with translations by every z on related pairs.
        for x in 0..n {
            for y in x + 1..n {
                if !self.related(x, y) {
                    continue;
                }
                for z in 0..n {
                    if !self.related(l.meet(x, z), l.meet(y, z))
                        || !self.related(l.join(x, z), l.join(y, z))
                    {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Every block is exactly the interval between its least and greatest
    /// element.
    pub fn blocks_are_intervals(&self, l: &FiniteLattice) -> bool {
        self.blocks().iter().all(|block| {
            let lo = block[0];
            let hi = *block.last().unwrap();
            l.leq(lo, hi)
                && block.iter().all(|&x| l.leq(lo, x) && l.leq(x, hi))
                && l.up_set(lo).intersection(l.down_set(hi)).count() == block.len()
        })
    }

    /// Least and greatest element of each block, assuming blocks are intervals.
    pub fn block_bounds(&self) -> Vec<(usize, usize)> {
        let mut bounds = vec![(usize::MAX, 0); self.num_blocks];
        for (x, &b) in self.block_of.iter().enumerate() {
            let e = &mut bounds[b as usize];
            e.0 = e.0.min(x);
            e.1 = e.1.max(x);
        }
        bounds
    }
}

/// The smallest congruence collapsing `a` and `b`.
pub fn principal(l: &FiniteLattice, a: usize, b: usize) -> Congruence {
    generated(l, &[(a, b)])
}

/// The smallest congruence collapsing every listed pair.
///
/// Each union performed is queued and translated by every element under
/// meet and join until nothing new merges. The pairs that caused unions
/// generate the equivalence, so closing them under translations yields a
/// congruence.
pub fn generated(l: &FiniteLattice, pairs: &[(usize, usize)]) -> Congruence {
    let n = l.size();
    let mut uf = UnionFind::new(n);
    let mut work = Vec::new();
    for &(a, b) in pairs {
        if uf.union(a, b) {
            work.push((a, b));
        }
    }
    while let Some((x, y)) = work.pop() {
        for z in 0..n {
            let (mx, my) = (l.meet(x, z), l.meet(y, z));
            if uf.union(mx, my) {
                work.push((mx, my));
            }
            let (jx, jy) = (l.join(x, z), l.join(y, z));
            if uf.union(jx, jy) {
                work.push((jx, jy));
            }
        }
    }
    uf.to_congruence()
}

/// The quotient `L/θ` and the natural map `x ↦ x/θ`.
///
/// `c` must be a congruence of `l`.
pub fn quotient(l: &FiniteLattice, c: &Congruence) -> Result<(FiniteLattice, Vec<usize>)> {
    let mins: Vec<usize> = c.block_bounds().iter().map(|&(lo, _)| lo).collect();
    let (q, position) = FiniteLattice::from_order(mins.len(), |i, j| {
        c.block_of(l.join(mins[i], mins[j])) == j
    })?;
    let map = (0..l.size()).map(|x| position[c.block_of(x)]).collect();
    Ok((q, map))
}

/// Union-find with path halving and union by size.
#[derive(Debug, Clone)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns whether two distinct classes were merged.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        true
    }

    pub fn to_congruence(&mut self) -> Congruence {
        let roots: Vec<usize> = (0..self.parent.len()).map(|x| self.find(x)).collect();
        Congruence::from_labels(&roots)
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::lattice::{chain, n5};

    #[test]
    fn trivial_principal() {
        let l = n5();
        assert!(principal(&l, 2, 2).is_identity());
        let c2 = chain(2).unwrap();
        assert!(principal(&c2, 0, 1).is_all());
    }

    #[test]
    fn n5_short_side() {
        // Normalized N_5: 0, a = 1, b = 2, c = 3, 1 = 4 with 0 < a < c < 1.
        let l = n5();
        assert!(l.lt(1, 3) && !l.comparable(1, 2));
        let t = principal(&l, 1, 3);
        assert_eq!(t.blocks(), vec![vec![0], vec![1, 3], vec![2], vec![4]]);
        assert!(t.is_compatible(&l));
    }

    #[test]
    fn n5_long_side_collapses_more() {
        let l = n5();
        let t = principal(&l, 0, 1);
        assert_eq!(t.blocks(), vec![vec![0, 1, 3], vec![2, 4]]);
    }

    #[test]
    fn principal_is_least() {
        // Brute force over all partitions of a small host.
        let l = n5();
        let n = l.size();
        let all = all_congruences_brute(&l);
        for a in 0..n {
            for b in 0..n {
                let t = principal(&l, a, b);
                assert!(t.is_compatible(&l) && t.related(a, b));
                for c in all.iter().filter(|c| c.related(a, b)) {
                    assert!(t.refines(c));
                }
            }
        }
    }

    pub(crate) fn all_congruences_brute(l: &FiniteLattice) -> Vec<Congruence> {
        fn go(prefix: &mut Vec<usize>, max: usize, n: usize, out: &mut Vec<Vec<usize>>) {
            if prefix.len() == n {
                out.push(prefix.clone());
                return;
            }
            for b in 0..=max + 1 {
                prefix.push(b);
                go(prefix, max.max(b), n, out);
                prefix.pop();
            }
        }
        let mut rgs = Vec::new();
        go(&mut vec![0], 0, l.size(), &mut rgs);
        rgs.into_iter()
            .map(|r| Congruence::from_labels(&r))
            .filter(|c| c.is_compatible(l))
            .collect()
    }

    #[test]
    fn quotients() {
        let l = chain(3).unwrap();
        let (q, map) = quotient(&l, &principal(&l, 0, 1)).unwrap();
        assert_eq!(q.size(), 2);
        assert_eq!(map, vec![0, 0, 1]);
        let l = n5();
        let t = principal(&l, 1, 3);
        let (q, map) = quotient(&l, &t).unwrap();
        assert_eq!(q.size(), 4);
        for x in 0..5 {
            for y in 0..5 {
                assert_eq!(map[l.join(x, y)], q.join(map[x], map[y]));
                assert_eq!(map[l.meet(x, y)], q.meet(map[x], map[y]));
            }
        }
    }

    #[test]
    fn refinement_meet_join() {
        let l = chain(3).unwrap();
        let lo = principal(&l, 0, 1);
        let hi = principal(&l, 1, 2);
        assert!(!lo.refines(&hi));
        assert!(lo.meet(&hi).is_identity());
        assert!(lo.join(&hi).is_all());
        assert!(Congruence::identity(3).refines(&lo));
        assert!(lo.refines(&Congruence::all(3)));
    }
}
