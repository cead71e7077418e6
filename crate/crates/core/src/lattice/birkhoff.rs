//! Finite posets and the downset / join-irreducible correspondence for
//! distributive lattices.

use super::{is_distributive_by_identity, join_irreducibles, FiniteLattice};
use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::limits::Limits;

/// A finite poset on `0..size`.
#[derive(Clone, PartialEq, Eq)]
pub struct Poset {
    up: Vec<BitSet>,
}

impl std::fmt::Debug for Poset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Poset")
            .field("size", &self.size())
            .field("lt", &self.strict_pairs())
            .finish()
    }
}

impl Poset {
    /// The poset generated by strict relations `i < j`.
    pub fn from_lt(n: usize, lt: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Ok(Self { up: Vec::new() });
        }
        let up = super::reflexive_transitive_closure(n, lt)?;
        Ok(Self { up })
    }

    pub fn antichain(n: usize) -> Self {
        Self::from_lt(n, &[]).expect("antichain")
    }

    pub fn chain(n: usize) -> Self {
        let lt: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_lt(n, &lt).expect("chain")
    }

    pub fn size(&self) -> usize {
        self.up.len()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    /// All strict pairs `a < b`.
    pub fn strict_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.size() {
            for b in self.up[a].iter() {
                if b != a {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Cover pairs of the poset.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        self.strict_pairs()
            .into_iter()
            .filter(|&(a, b)| {
                !(0..self.size()).any(|c| c != a && c != b && self.leq(a, c) && self.leq(c, b))
            })
            .collect()
    }

    /// Order isomorphism test by brute force over permutations (posets here
    /// are tiny).
    pub fn is_isomorphic(&self, other: &Poset) -> bool {
        let n = self.size();
        if n != other.size() {
            return false;
        }
        fn go(p: &Poset, q: &Poset, map: &mut Vec<usize>, used: &mut [bool]) -> bool {
            let x = map.len();
            if x == p.size() {
                return true;
            }
            for y in 0..q.size() {
                if used[y] {
                    continue;
                }
                let ok = map
                    .iter()
                    .enumerate()
                    .all(|(w, &v)| p.leq(w, x) == q.leq(v, y) && p.leq(x, w) == q.leq(y, v));
                if ok {
                    map.push(y);
                    used[y] = true;
                    if go(p, q, map, used) {
                        return true;
                    }
                    used[y] = false;
                    map.pop();
                }
            }
            false
        }
        go(self, other, &mut Vec::new(), &mut vec![false; n])
    }
}

/// The lattice of downsets of `p` under inclusion.
pub fn downset_lattice(p: &Poset) -> Result<FiniteLattice> {
    downset_lattice_with(p, &Limits::default()).map(|(l, _)| l)
}

/// Downset lattice plus, for each element, the downset it stands for.
pub(crate) fn downset_lattice_with(
    p: &Poset,
    limits: &Limits,
) -> Result<(FiniteLattice, Vec<BitSet>)> {
    let n = p.size();
    // Linear extension of p: sort by number of elements below.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| ((0..n).filter(|&y| p.leq(y, x)).count(), x));

    let mut sets = Vec::new();
    let mut current = BitSet::new(n);
    collect_downsets(p, &order, 0, &mut current, &mut sets, limits.max_elements)?;

    let (lattice, position) =
        FiniteLattice::from_order(sets.len(), |i, j| sets[i].is_subset(&sets[j]))?;
    let mut labels = vec![BitSet::new(n); sets.len()];
    for (old, s) in sets.into_iter().enumerate() {
        labels[position[old]] = s;
    }
    Ok((lattice, labels))
}

fn collect_downsets(
    p: &Poset,
    order: &[usize],
    i: usize,
    current: &mut BitSet,
    out: &mut Vec<BitSet>,
    cap: usize,
) -> Result<()> {
    if i == order.len() {
        if out.len() == cap {
            return Err(Error::SizeOverflow {
                size: cap + 1,
                cap,
            });
        }
        out.push(current.clone());
        return Ok(());
    }
    let x = order[i];
    collect_downsets(p, order, i + 1, current, out, cap)?;
    // x may join only if everything strictly below it is present.
    if (0..p.size()).all(|y| !p.lt(y, x) || current.contains(y)) {
        current.insert(x);
        collect_downsets(p, order, i + 1, current, out, cap)?;
        current.remove(x);
    }
    Ok(())
}

/// The poset of join-irreducible elements of a distributive lattice, plus the
/// lattice element each poset point stands for.
pub fn ji_poset(d: &FiniteLattice) -> Result<(Poset, Vec<usize>)> {
    if !is_distributive_by_identity(d) {
        return Err(Error::NotDistributive);
    }
    let ji = join_irreducibles(d);
    let mut lt = Vec::new();
    for (i, &a) in ji.iter().enumerate() {
        for (j, &b) in ji.iter().enumerate() {
            if d.lt(a, b) {
                lt.push((i, j));
            }
        }
    }
    Ok((Poset::from_lt(ji.len(), &lt)?, ji))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{are_isomorphic, boolean, chain, m3};

    fn iso(a: &FiniteLattice, b: &FiniteLattice) -> bool {
        are_isomorphic(a, b).unwrap().is_some()
    }

    #[test]
    fn antichain_gives_boolean() {
        let l = downset_lattice(&Poset::antichain(2)).unwrap();
        assert!(iso(&l, &boolean(2).unwrap()));
    }

    #[test]
    fn chain_gives_chain() {
        let l = downset_lattice(&Poset::chain(2)).unwrap();
        assert!(iso(&l, &chain(3).unwrap()));
        let empty = downset_lattice(&Poset::antichain(0)).unwrap();
        assert_eq!(empty.size(), 1);
    }

    #[test]
    fn ji_of_chain4() {
        let c4 = chain(4).unwrap();
        let (p, ji) = ji_poset(&c4).unwrap();
        assert_eq!(ji, vec![1, 2, 3]);
        assert!(p.is_isomorphic(&Poset::chain(3)));
        assert!(iso(&downset_lattice(&p).unwrap(), &c4));
    }

    #[test]
    fn ji_poset_rejects_m3() {
        assert!(matches!(ji_poset(&m3()), Err(Error::NotDistributive)));
    }

    #[test]
    fn poset_cycle() {
        assert!(matches!(
            Poset::from_lt(2, &[(0, 1), (1, 0)]),
            Err(Error::CycleDetected(_))
        ));
    }

    #[test]
    fn v_poset() {
        // one point below two others
        let v = Poset::from_lt(3, &[(0, 1), (0, 2)]).unwrap();
        let d = downset_lattice(&v).unwrap();
        assert_eq!(d.size(), 5);
        let (back, _) = ji_poset(&d).unwrap();
        assert!(back.is_isomorphic(&v));
        assert_eq!(v.covers(), vec![(0, 1), (0, 2)]);
    }
}
