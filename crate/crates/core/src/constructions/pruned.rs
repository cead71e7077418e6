//! Pruned products of separable lattices over a finite poset.
//!
//! Elements are coordinate tuples indexed by the points of the poset.
//! `a ≤ b` holds when `a ≤ b` componentwise and, for every `p < p'`,
//! `a_p = v_p = b_p` forces `a_{p'} = b_{p'}`.

use crate::error::{Error, Result};
use crate::lattice::product::{labeled_from_order, product_size, tuples};
use crate::lattice::{m3, FiniteLattice, LabeledLattice, Poset};
use crate::limits::Limits;

/// A lattice with a designated separator `v`, `0 ≺ v ≺ 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparableFactor {
    lattice: FiniteLattice,
    separator: usize,
}

impl SeparableFactor {
    pub fn new(lattice: FiniteLattice, separator: usize) -> Result<Self> {
        let bad = |reason: &str| Error::InvalidSeparator {
            element: separator,
            reason: reason.to_string(),
        };
        if lattice.size() < 3 {
            return Err(bad("a separable lattice has at least 3 elements"));
        }
        if separator >= lattice.size() {
            return Err(bad("not an element"));
        }
        if !lattice.is_cover(lattice.bottom(), separator) {
            return Err(bad("does not cover 0"));
        }
        if !lattice.is_cover(separator, lattice.top()) {
            return Err(bad("is not covered by 1"));
        }
        Ok(Self { lattice, separator })
    }

    /// The first separator in index order, if any.
    pub fn first(lattice: FiniteLattice) -> Result<Self> {
        let v = lattice
            .upper_covers(lattice.bottom())
            .iter()
            .copied()
            .find(|&x| lattice.is_cover(x, lattice.top()))
            .ok_or_else(|| Error::InvalidSeparator {
                element: lattice.top(),
                reason: "lattice has no separator".into(),
            })?;
        Self::new(lattice, v)
    }

    /// `M_3` with its first atom as separator.
    pub fn m3() -> Self {
        Self::new(m3(), 1).expect("every atom of M_3 separates")
    }

    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    pub fn separator(&self) -> usize {
        self.separator
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrunedProductSpec {
    poset: Poset,
    factors: Vec<SeparableFactor>,
    /// Strict pairs `p < p'` of the poset.
    below: Vec<(usize, usize)>,
}

impl PrunedProductSpec {
    pub fn new(poset: Poset, factors: Vec<SeparableFactor>) -> Result<Self> {
        if poset.size() != factors.len() {
            return Err(Error::InvalidInput(format!(
                "poset has {} points but {} factors were given",
                poset.size(),
                factors.len()
            )));
        }
        let below = poset.strict_pairs();
        Ok(Self {
            poset,
            factors,
            below,
        })
    }

    /// The same factor at every point.
    pub fn uniform(poset: Poset, factor: SeparableFactor) -> Self {
        let factors = vec![factor; poset.size()];
        Self::new(poset, factors).expect("lengths agree")
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn factors(&self) -> &[SeparableFactor] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    fn v(&self, p: usize) -> usize {
        self.factors[p].separator
    }

    fn f(&self, p: usize) -> &FiniteLattice {
        &self.factors[p].lattice
    }

    /// The pruned order on coordinate tuples.
    pub fn leq(&self, a: &[usize], b: &[usize]) -> bool {
        (0..self.len()).all(|p| self.f(p).leq(a[p], b[p]))
            && self
                .below
                .iter()
                .all(|&(p, q)| !(a[p] == self.v(p) && b[p] == self.v(p)) || a[q] == b[q])
    }

    /// Componentwise order of the full product.
    pub fn product_leq(&self, a: &[usize], b: &[usize]) -> bool {
        (0..self.len()).all(|p| self.f(p).leq(a[p], b[p]))
    }
}

/// The pruned product with coordinates and the product covers it dropped.
#[derive(Debug, Clone)]
pub struct PrunedLattice {
    pub labeled: LabeledLattice,
    /// Cover pairs `(lower, upper)` of the direct product that are not
    /// comparable in the pruned order, as element indices of `labeled`.
    pub pruned_edges: Vec<(usize, usize)>,
}

impl PrunedLattice {
    pub fn lattice(&self) -> &FiniteLattice {
        &self.labeled.lattice
    }

    pub fn coords(&self, x: usize) -> &[usize] {
        &self.labeled.coords[x]
    }
}

pub fn pruned_product(spec: &PrunedProductSpec) -> Result<PrunedLattice> {
    pruned_product_with(spec, &Limits::default())
}

/// Builds the pruned product and verifies it is a lattice.
///
/// The order is taken as given (no transitive closure) so the partial order
/// check is a real test of the pruning rule.
pub fn pruned_product_with(spec: &PrunedProductSpec, limits: &Limits) -> Result<PrunedLattice> {
    let sizes: Vec<usize> = spec.factors.iter().map(|f| f.lattice.size()).collect();
    product_size(&sizes, limits.max_elements)?;
    // Witness indices are tuple ranks in mixed radix over the factor sizes.
    let labeled = labeled_from_order(tuples(&sizes), |a, b| spec.leq(a, b)).map_err(|e| match e {
        Error::NotALattice { a, b, which } => Error::NotALatticeUnderPruning { a, b, which },
        Error::NotAPartialOrder(why) => {
            Error::InternalVerificationFailed(format!("pruned relation is not a partial order: {why}"))
        }
        other => other,
    })?;

    let l = &labeled.lattice;
    let mut pruned_edges = Vec::new();
    for x in l.elements() {
        let a = &labeled.coords[x];
        for p in 0..spec.len() {
            for &c in spec.f(p).upper_covers(a[p]) {
                let mut b = a.clone();
                b[p] = c;
                let y = labeled.index_of(&b).expect("tuple is an element");
                if !l.leq(x, y) {
                    pruned_edges.push((x, y));
                }
            }
        }
    }
    pruned_edges.sort_unstable();
    Ok(PrunedLattice {
        labeled,
        pruned_edges,
    })
}

/// Points `q` with `a_q = b_q = v_q` and `a_{q'} ≠ b_{q'}` for some `q' > q`.
pub fn forks(spec: &PrunedProductSpec, a: &[usize], b: &[usize]) -> Vec<usize> {
    (0..spec.len())
        .filter(|&q| a[q] == spec.v(q) && b[q] == spec.v(q))
        .filter(|&q| spec.below.iter().any(|&(lo, hi)| lo == q && a[hi] != b[hi]))
        .collect()
}

/// Join by the coordinatewise case formula.
pub fn theorem_join(spec: &PrunedProductSpec, a: &[usize], b: &[usize]) -> Vec<usize> {
    closed_form_bound(spec, a, b, true)
}

/// Meet by the coordinatewise case formula.
pub fn theorem_meet(spec: &PrunedProductSpec, a: &[usize], b: &[usize]) -> Vec<usize> {
    closed_form_bound(spec, a, b, false)
}

fn closed_form_bound(spec: &PrunedProductSpec, a: &[usize], b: &[usize], join: bool) -> Vec<usize> {
    let fork = forks(spec, a, b);
    // For the meet every inequality is reversed.
    let le = |p: usize, x: usize, y: usize| {
        if join {
            spec.f(p).leq(x, y)
        } else {
            spec.f(p).leq(y, x)
        }
    };
    (0..spec.len())
        .map(|p| {
            let f = spec.f(p);
            let c = if join { f.join(a[p], b[p]) } else { f.meet(a[p], b[p]) };
            if c != spec.v(p) {
                return c;
            }
            let escalate = (0..spec.len())
                .filter(|&q| spec.poset.leq(p, q))
                .any(|q| {
                    fork.contains(&q)
                        || (le(p, b[p], a[p]) && !le(q, b[q], a[q]))
                        || (le(p, a[p], b[p]) && !le(q, a[q], b[q]))
                });
            match (escalate, join) {
                (false, _) => c,
                (true, true) => f.top(),
                (true, false) => f.bottom(),
            }
        })
        .collect()
}
