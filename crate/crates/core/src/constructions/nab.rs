use crate::error::{Error, Result};
use crate::lattice::product::{labeled_from_order, product_size, tuples};
use crate::lattice::{FiniteLattice, LabeledLattice};
use crate::limits::Limits;

/// `N(A, B)`: the product `A × B` with every comparability between two
/// elements of `A⁻ × B` with different `B`-coordinates removed, where `A⁻`
/// is `A` without its bounds.
///
/// Coordinates are `[a, b]`.
#[derive(Debug, Clone)]
pub struct NabLattice {
    pub a: FiniteLattice,
    pub b: FiniteLattice,
    pub labeled: LabeledLattice,
}

impl NabLattice {
    pub fn lattice(&self) -> &FiniteLattice {
        &self.labeled.lattice
    }

    pub fn coords(&self, x: usize) -> (usize, usize) {
        let c = &self.labeled.coords[x];
        (c[0], c[1])
    }

    pub fn element(&self, a: usize, b: usize) -> Option<usize> {
        self.labeled.index_of(&[a, b])
    }

    fn interior(&self, a: usize) -> bool {
        a != self.a.bottom() && a != self.a.top()
    }
}

pub fn n_construction(a: &FiniteLattice, b: &FiniteLattice) -> Result<NabLattice> {
    n_construction_with(a, b, &Limits::default())
}

pub fn n_construction_with(a: &FiniteLattice, b: &FiniteLattice, limits: &Limits) -> Result<NabLattice> {
    product_size(&[a.size(), b.size()], limits.max_elements)?;
    let interior = |x: usize| x != a.bottom() && x != a.top();
    // The order is built without any transitive closure, so the partial order
    // check below also confirms that the deletion preserved transitivity.
    let labeled = labeled_from_order(tuples(&[a.size(), b.size()]), |u, v| {
        let product = a.leq(u[0], v[0]) && b.leq(u[1], v[1]);
        let pruned = interior(u[0]) && interior(v[0]) && u[1] != v[1];
        product && !pruned
    })
    .map_err(|e| match e {
        Error::SizeOverflow { .. } => e,
        other => Error::InternalVerificationFailed(format!("N(A, B) order check: {other}")),
    })?;
    Ok(NabLattice {
        a: a.clone(),
        b: b.clone(),
        labeled,
    })
}

/// Meet of two incomparable elements of `N(A, B)` by the two-case formula.
pub fn nab_formula_meet(n: &NabLattice, u: usize, v: usize) -> Result<usize> {
    nab_formula(n, u, v, false)
}

/// Join of two incomparable elements of `N(A, B)` by the two-case formula.
pub fn nab_formula_join(n: &NabLattice, u: usize, v: usize) -> Result<usize> {
    nab_formula(n, u, v, true)
}

fn nab_formula(n: &NabLattice, u: usize, v: usize, join: bool) -> Result<usize> {
    let size = n.lattice().size();
    for x in [u, v] {
        if x >= size {
            return Err(Error::IndexOutOfRange { index: x, size });
        }
    }
    if n.lattice().comparable(u, v) {
        return Err(Error::ComparableInput(u, v));
    }
    let ((ua, ub), (va, vb)) = (n.coords(u), n.coords(v));
    let (pa, pb) = if join {
        (n.a.join(ua, va), n.b.join(ub, vb))
    } else {
        (n.a.meet(ua, va), n.b.meet(ub, vb))
    };
    let coords = if n.interior(pa) && ub != vb {
        let bound = if join { n.a.top() } else { n.a.bottom() };
        (bound, pb)
    } else {
        (pa, pb)
    };
    n.element(coords.0, coords.1).ok_or_else(|| {
        Error::InternalVerificationFailed(format!("formula produced unknown coordinates {coords:?}"))
    })
}
