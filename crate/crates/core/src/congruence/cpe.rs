use super::{con_lattice_with, ConLattice, Congruence};
use crate::error::{Error, Result};
use crate::lattice::{are_isomorphic_capped, Embedding};
use crate::limits::Limits;

/// Extension census for an embedding `K ↪ L`.
#[derive(Debug, Clone)]
pub struct CpeReport {
    /// True iff every congruence of `K` has exactly one extension to `L`.
    pub ok: bool,
    /// `extension_counts[i]`: congruences of `L` restricting to congruence `i`
    /// of `K` (indices follow `source_con`).
    pub extension_counts: Vec<usize>,
    pub source_con: ConLattice,
    pub target_con: ConLattice,
}

/// Restriction of a congruence of the target along `e`.
pub fn restrict(e: &Embedding, phi: &Congruence) -> Congruence {
    let labels: Vec<u32> = e.map().iter().map(|&y| phi.block_of(y) as u32).collect();
    Congruence::from_labels(&labels)
}

pub fn is_cpe(e: &Embedding) -> Result<CpeReport> {
    is_cpe_with(e, &Limits::default())
}

pub fn is_cpe_with(e: &Embedding, limits: &Limits) -> Result<CpeReport> {
    let source_con = con_lattice_with(e.source(), limits)?;
    let target_con = con_lattice_with(e.target(), limits)?;
    let mut extension_counts = vec![0usize; source_con.len()];
    for phi in &target_con.congruences {
        let r = restrict(e, phi);
        let i = source_con.index_of(&r).ok_or_else(|| {
            Error::InternalVerificationFailed(format!("restriction {r:?} is not a congruence of the source"))
        })?;
        extension_counts[i] += 1;
    }
    let ok = extension_counts.iter().all(|&c| c == 1);
    if ok {
        // A congruence-preserving extension has an isomorphic congruence lattice.
        let iso = are_isomorphic_capped(&source_con.lattice, &target_con.lattice, limits.max_isomorphism)?;
        if iso.is_none() {
            return Err(Error::InternalVerificationFailed(
                "CPE with non-isomorphic congruence lattices".into(),
            ));
        }
    }
    Ok(CpeReport {
        ok,
        extension_counts,
        source_con,
        target_con,
    })
}
