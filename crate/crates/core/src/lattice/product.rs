use std::collections::HashMap;

use super::{Embedding, FiniteLattice};
use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::limits::Limits;

/// A lattice whose elements carry coordinate tuples over some factor lattices.
#[derive(Debug, Clone)]
pub struct LabeledLattice {
    pub lattice: FiniteLattice,
    /// `coords[x]` is the coordinate tuple of element `x`.
    pub coords: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
}

impl LabeledLattice {
    pub fn new(lattice: FiniteLattice, coords: Vec<Vec<usize>>) -> Self {
        let index = coords
            .iter()
            .enumerate()
            .map(|(i, c)| (c.clone(), i))
            .collect();
        Self {
            lattice,
            coords,
            index,
        }
    }

    pub fn index_of(&self, coords: &[usize]) -> Option<usize> {
        self.index.get(coords).copied()
    }
}

pub(crate) fn tuples(sizes: &[usize]) -> Vec<Vec<usize>> {
    let total: usize = sizes.iter().product();
    let mut out = Vec::with_capacity(total);
    for mut r in 0..total {
        let mut t = vec![0; sizes.len()];
        for i in (0..sizes.len()).rev() {
            t[i] = r % sizes[i];
            r /= sizes[i];
        }
        out.push(t);
    }
    out
}

pub(crate) fn product_size(sizes: &[usize], cap: usize) -> Result<usize> {
    let mut total: usize = 1;
    for &s in sizes {
        total = total
            .checked_mul(s)
            .filter(|&t| t <= cap)
            .ok_or(Error::SizeOverflow {
                size: total.saturating_mul(s),
                cap,
            })?;
    }
    Ok(total)
}

/// Builds the lattice on a set of coordinate tuples under a given order,
/// returning the normalized lattice with coordinates attached.
pub(crate) fn labeled_from_order<F>(tuples: Vec<Vec<usize>>, le: F) -> Result<LabeledLattice>
where
    F: Fn(&[usize], &[usize]) -> bool,
{
    let n = tuples.len();
    let up: Vec<BitSet> = tuples
        .iter()
        .map(|a| {
            let mut row = BitSet::new(n);
            for (j, b) in tuples.iter().enumerate() {
                if le(a, b) {
                    row.insert(j);
                }
            }
            row
        })
        .collect();
    let (lattice, position) = FiniteLattice::from_up_sets(up)?;
    let mut coords = vec![Vec::new(); n];
    for (old, t) in tuples.into_iter().enumerate() {
        coords[position[old]] = t;
    }
    Ok(LabeledLattice::new(lattice, coords))
}

/// Direct product of any number of factors with componentwise order.
pub fn product_labeled(factors: &[&FiniteLattice], limits: &Limits) -> Result<LabeledLattice> {
    let sizes: Vec<usize> = factors.iter().map(|f| f.size()).collect();
    product_size(&sizes, limits.max_elements)?;
    labeled_from_order(tuples(&sizes), |a, b| {
        factors.iter().enumerate().all(|(i, f)| f.leq(a[i], b[i]))
    })
}

pub fn direct_product(a: &FiniteLattice, b: &FiniteLattice) -> Result<FiniteLattice> {
    direct_product_capped(a, b, &Limits::default())
}

pub fn direct_product_capped(
    a: &FiniteLattice,
    b: &FiniteLattice,
    limits: &Limits,
) -> Result<FiniteLattice> {
    product_labeled(&[a, b], limits).map(|l| l.lattice)
}

/// The interval `[a, b]` as a lattice, with its inclusion into `l`.
pub fn interval(l: &FiniteLattice, a: usize, b: usize) -> Result<(FiniteLattice, Embedding)> {
    for x in [a, b] {
        if x >= l.size() {
            return Err(Error::IndexOutOfRange {
                index: x,
                size: l.size(),
            });
        }
    }
    if !l.leq(a, b) {
        return Err(Error::NotComparable(a, b));
    }
    let members: Vec<usize> = l.up_set(a).intersection(l.down_set(b)).iter().collect();
    let (sub, position) =
        FiniteLattice::from_order(members.len(), |i, j| l.leq(members[i], members[j]))?;
    let mut map = vec![0; members.len()];
    for (old, &x) in members.iter().enumerate() {
        map[position[old]] = x;
    }
    let emb = Embedding::new(sub.clone(), l.clone(), map)?;
    Ok((sub, emb))
}
