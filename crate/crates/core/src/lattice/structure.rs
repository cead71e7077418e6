use super::{find_sublattice_embedding, m3, n5, FiniteLattice};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureReport {
    pub is_distributive: bool,
    pub is_modular: bool,
    pub is_sectionally_complemented: bool,
    pub atoms: Vec<usize>,
    pub join_irreducibles: Vec<usize>,
    pub meet_irreducibles: Vec<usize>,
}

/// Structural summary of `l`. Distributivity is decided twice and the two
/// answers must agree.
pub fn structure_report(l: &FiniteLattice) -> StructureReport {
    let by_identity = is_distributive_by_identity(l);
    let by_sublattices = is_distributive_by_sublattices(l);
    assert_eq!(
        by_identity, by_sublattices,
        "distributivity checks disagree on {l:?}"
    );
    StructureReport {
        is_distributive: by_identity,
        is_modular: is_modular(l),
        is_sectionally_complemented: is_sectionally_complemented(l),
        atoms: atoms(l),
        join_irreducibles: join_irreducibles(l),
        meet_irreducibles: meet_irreducibles(l),
    }
}

/// `x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z)` on all triples.
pub fn is_distributive_by_identity(l: &FiniteLattice) -> bool {
    let n = l.size();
    (0..n).all(|x| {
        (0..n).all(|y| {
            (0..n).all(|z| l.meet(x, l.join(y, z)) == l.join(l.meet(x, y), l.meet(x, z)))
        })
    })
}

/// No sublattice isomorphic to `M_3` or `N_5`.
pub fn is_distributive_by_sublattices(l: &FiniteLattice) -> bool {
    find_sublattice_embedding(&m3(), l).is_none() && find_sublattice_embedding(&n5(), l).is_none()
}

/// `x ≤ z` implies `x ∨ (y ∧ z) = (x ∨ y) ∧ z`.
pub fn is_modular(l: &FiniteLattice) -> bool {
    let n = l.size();
    (0..n).all(|x| {
        l.up_set(x).iter().all(|z| {
            (0..n).all(|y| l.join(x, l.meet(y, z)) == l.meet(l.join(x, y), z))
        })
    })
}

/// Every interval `[0, b]` is complemented.
pub fn is_sectionally_complemented(l: &FiniteLattice) -> bool {
    l.elements().all(|b| {
        let below = l.down_set(b);
        below
            .iter()
            .all(|x| below.iter().any(|y| l.meet(x, y) == 0 && l.join(x, y) == b))
    })
}

pub fn atoms(l: &FiniteLattice) -> Vec<usize> {
    if l.is_trivial() {
        return Vec::new();
    }
    l.upper_covers(l.bottom()).to_vec()
}

/// Elements with exactly one lower cover.
pub fn join_irreducibles(l: &FiniteLattice) -> Vec<usize> {
    l.elements()
        .filter(|&x| l.lower_covers(x).len() == 1)
        .collect()
}

/// Elements with exactly one upper cover.
pub fn meet_irreducibles(l: &FiniteLattice) -> Vec<usize> {
    l.elements()
        .filter(|&x| l.upper_covers(x).len() == 1)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{boolean, chain, partition_lattice};

    #[test]
    fn boolean3() {
        let r = structure_report(&boolean(3).unwrap());
        assert!(r.is_distributive && r.is_sectionally_complemented);
        assert_eq!(r.atoms.len(), 3);
        assert_eq!(r.join_irreducibles, r.atoms);
    }

    #[test]
    fn m3_report() {
        let r = structure_report(&m3());
        assert!(!r.is_distributive);
        assert!(r.is_modular);
        assert!(r.is_sectionally_complemented);
        assert_eq!(r.join_irreducibles, vec![1, 2, 3]);
    }

    #[test]
    fn c3_report() {
        let r = structure_report(&chain(3).unwrap());
        assert!(r.is_distributive);
        assert!(!r.is_sectionally_complemented);
        assert_eq!(r.join_irreducibles, vec![1, 2]);
        assert_eq!(r.meet_irreducibles, vec![0, 1]);
    }

    #[test]
    fn n5_and_partitions() {
        let r = structure_report(&n5());
        assert!(!r.is_distributive && !r.is_modular);
        let p = structure_report(&partition_lattice(4).unwrap());
        assert!(!p.is_modular);
        assert!(p.is_sectionally_complemented);
        assert_eq!(p.atoms.len(), 6);
    }
}
