use super::enumerate::{enumerate_lattices, MAX_ENUMERATION_SIZE};
use crate::congruence::con_lattice;
use crate::error::{Error, Result};
use crate::lattice::{chain, find_sublattice_embedding, m_n, partition_lattice, Embedding, FiniteLattice};

/// Where a simple extension came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtensionSource {
    /// `K` was already simple.
    Identity,
    /// A sublattice of a fixed small simple lattice.
    Catalog,
    /// A lattice found by exhaustive search over lattices with `|K| + k`
    /// elements.
    Search { added: usize },
}

#[derive(Debug, Clone)]
pub struct SimpleExtension {
    pub embedding: Embedding,
    pub source: ExtensionSource,
}

/// Embeds `k` into a finite simple lattice.
///
/// Tries, in order: `k` itself, the catalog (`C_2`, `M_3`, `M_4`, `M_5`,
/// `Π_4`), then every lattice with up to `budget` more elements than `k`
/// in enumeration order. The result's simplicity and embedding are checked.
pub fn simple_extension(k: &FiniteLattice, budget: usize) -> Result<Embedding> {
    simple_extension_traced(k, budget).map(|s| s.embedding)
}

pub fn simple_extension_traced(k: &FiniteLattice, budget: usize) -> Result<SimpleExtension> {
    if con_lattice(k)?.is_simple() {
        return Ok(SimpleExtension {
            embedding: Embedding::identity(k),
            source: ExtensionSource::Identity,
        });
    }
    let catalog = [chain(2)?, m_n(3)?, m_n(4)?, m_n(5)?, partition_lattice(4)?];
    for host in catalog {
        if let Some(e) = try_host(k, &host)? {
            return Ok(SimpleExtension {
                embedding: e,
                source: ExtensionSource::Catalog,
            });
        }
    }
    for added in 1..=budget {
        let size = k.size() + added;
        if size > MAX_ENUMERATION_SIZE {
            break;
        }
        for host in enumerate_lattices(size)? {
            if let Some(e) = try_host(k, &host)? {
                return Ok(SimpleExtension {
                    embedding: e,
                    source: ExtensionSource::Search { added },
                });
            }
        }
    }
    Err(Error::BudgetExhausted(budget))
}

fn try_host(k: &FiniteLattice, host: &FiniteLattice) -> Result<Option<Embedding>> {
    let Some(map) = find_sublattice_embedding(k, host) else {
        return Ok(None);
    };
    if !con_lattice(host)?.is_simple() {
        return Ok(None);
    }
    Embedding::new(k.clone(), host.clone(), map).map(Some)
}
