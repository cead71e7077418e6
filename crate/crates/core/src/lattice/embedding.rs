use super::FiniteLattice;
use crate::error::{Error, Result};

/// An injective lattice homomorphism, checked on construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    source: FiniteLattice,
    target: FiniteLattice,
    map: Vec<usize>,
}

impl Embedding {
    pub fn new(source: FiniteLattice, target: FiniteLattice, map: Vec<usize>) -> Result<Self> {
        if let Some(reason) = embedding_defect(&source, &target, &map) {
            return Err(Error::NotAnEmbedding(reason));
        }
        Ok(Self {
            source,
            target,
            map,
        })
    }

    pub fn identity(l: &FiniteLattice) -> Self {
        Self {
            source: l.clone(),
            target: l.clone(),
            map: l.elements().collect(),
        }
    }

    pub fn source(&self) -> &FiniteLattice {
        &self.source
    }

    pub fn target(&self) -> &FiniteLattice {
        &self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &Embedding) -> Result<Embedding> {
        if self.target != other.source {
            return Err(Error::NotAnEmbedding("composition across different lattices".into()));
        }
        let map = self.map.iter().map(|&x| other.map[x]).collect();
        Embedding::new(self.source.clone(), other.target.clone(), map)
    }
}

/// Returns a description of the first way `map` fails to be a lattice embedding.
pub(crate) fn embedding_defect(
    source: &FiniteLattice,
    target: &FiniteLattice,
    map: &[usize],
) -> Option<String> {
    if map.len() != source.size() {
        return Some(format!(
            "map has {} entries for a source of size {}",
            map.len(),
            source.size()
        ));
    }
    if let Some(&bad) = map.iter().find(|&&y| y >= target.size()) {
        return Some(format!("image {bad} outside target of size {}", target.size()));
    }
    let mut seen = vec![usize::MAX; target.size()];
    for (x, &y) in map.iter().enumerate() {
        if seen[y] != usize::MAX {
            return Some(format!("{} and {x} both map to {y}", seen[y]));
        }
        seen[y] = x;
    }
    for x in source.elements() {
        for y in x..source.size() {
            if map[source.meet(x, y)] != target.meet(map[x], map[y]) {
                return Some(format!("meet of {x} and {y} not preserved"));
            }
            if map[source.join(x, y)] != target.join(map[x], map[y]) {
                return Some(format!("join of {x} and {y} not preserved"));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{boolean, chain, m3};

    #[test]
    fn chain_into_m3() {
        let c3 = chain(3).unwrap();
        let m = m3();
        assert!(Embedding::new(c3.clone(), m.clone(), vec![0, 1, 4]).is_ok());
        // top not preserved: {0, a, b} is not a sublattice
        assert!(Embedding::new(c3, m, vec![0, 1, 2]).is_err());
    }

    #[test]
    fn rejects_non_injective() {
        let c2 = chain(2).unwrap();
        let b2 = boolean(2).unwrap();
        assert!(matches!(
            Embedding::new(c2, b2, vec![1, 1]),
            Err(Error::NotAnEmbedding(_))
        ));
    }

    #[test]
    fn composition() {
        let c2 = chain(2).unwrap();
        let c3 = chain(3).unwrap();
        let m = m3();
        let e1 = Embedding::new(c2, c3.clone(), vec![0, 2]).unwrap();
        let e2 = Embedding::new(c3, m, vec![0, 2, 4]).unwrap();
        assert_eq!(e1.then(&e2).unwrap().map(), &[0, 4]);
    }
}
