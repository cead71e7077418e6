use std::collections::HashMap;

use super::{principal, Congruence};
use crate::error::{Error, Result};
use crate::lattice::{join_irreducibles, FiniteLattice};
use crate::limits::Limits;

/// All congruences of a lattice together with the lattice they form.
///
/// `congruences[i]` is element `i` of `lattice`, so index `0` is the identity
/// and the last index is the all-in-one congruence.
#[derive(Debug, Clone)]
pub struct ConLattice {
    pub host: FiniteLattice,
    pub congruences: Vec<Congruence>,
    pub lattice: FiniteLattice,
    pub ji_indices: Vec<usize>,
    index: HashMap<Congruence, usize>,
}

impl ConLattice {
    pub fn len(&self) -> usize {
        self.congruences.len()
    }

    pub fn is_empty(&self) -> bool {
        self.congruences.is_empty()
    }

    pub fn index_of(&self, c: &Congruence) -> Option<usize> {
        self.index.get(c).copied()
    }

    /// Index of `Θ(a, b)`.
    pub fn principal_index(&self, a: usize, b: usize) -> usize {
        self.index_of(&principal(&self.host, a, b))
            .expect("principal congruence is enumerated")
    }

    /// Indices of meet-irreducible congruences.
    pub fn mi_indices(&self) -> Vec<usize> {
        crate::lattice::meet_irreducibles(&self.lattice)
    }

    pub fn is_simple(&self) -> bool {
        self.host.size() >= 2 && self.len() == 2
    }
}

pub fn con_lattice(l: &FiniteLattice) -> Result<ConLattice> {
    con_lattice_with(l, &Limits::default())
}

/// Enumerates `Con L` as the join-closure of the principal congruences of
/// cover pairs.
pub fn con_lattice_with(l: &FiniteLattice, limits: &Limits) -> Result<ConLattice> {
    if l.size() > limits.max_congruence_host {
        return Err(Error::CapExceeded {
            what: "congruence enumeration",
            size: l.size(),
            cap: limits.max_congruence_host,
        });
    }
    let n = l.size();
    let mut generators: Vec<Congruence> = Vec::new();
    for &(a, b) in l.covers() {
        let c = principal(l, a, b);
        if !generators.contains(&c) {
            generators.push(c);
        }
    }

    let mut found: Vec<Congruence> = vec![Congruence::identity(n)];
    let mut seen: HashMap<Congruence, usize> = HashMap::new();
    seen.insert(found[0].clone(), 0);
    let mut next = 0;
    while next < found.len() {
        let current = found[next].clone();
        next += 1;
        for g in &generators {
            if g.refines(&current) {
                continue;
            }
            let j = current.join(g);
            if !seen.contains_key(&j) {
                seen.insert(j.clone(), found.len());
                found.push(j);
            }
        }
    }

    let (lattice, position) =
        FiniteLattice::from_order(found.len(), |i, j| found[i].refines(&found[j]))?;
    let mut congruences = vec![Congruence::identity(0); found.len()];
    for (old, c) in found.into_iter().enumerate() {
        congruences[position[old]] = c;
    }
    let index = congruences
        .iter()
        .enumerate()
        .map(|(i, c)| (c.clone(), i))
        .collect();
    let ji_indices = join_irreducibles(&lattice);
    Ok(ConLattice {
        host: l.clone(),
        congruences,
        lattice,
        ji_indices,
        index,
    })
}
