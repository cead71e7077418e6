//! Representing a finite distributive lattice as the congruence lattice of a
//! finite isoform lattice, by a pruned product over its join-irreducibles.

use super::pruned::{pruned_product_with, PrunedLattice, PrunedProductSpec, SeparableFactor};
use crate::congruence::{classify_con, con_lattice_with, Classification};
use crate::error::{Error, Result};
use crate::lattice::{are_isomorphic_capped, ji_poset, FiniteLattice, Poset};
use crate::limits::Limits;

/// Default bound on the number of join-irreducibles of the input.
pub const DEFAULT_JI_BOUND: usize = 6;

/// Which separable lattice sits at each point of the poset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FactorChoice {
    /// `M_3` with its first atom as separator, everywhere.
    M3,
    /// One factor per join-irreducible, in the order returned by `ji_poset`.
    PerPoint(Vec<SeparableFactor>),
}

#[derive(Debug, Clone)]
pub struct RepresentationReport {
    pub poset: Poset,
    /// `ji_elements[p]` is the join-irreducible of `D` behind point `p`.
    pub ji_elements: Vec<usize>,
    pub con_size: usize,
    /// Isomorphism from `Con L` (by congruence index) onto `D`.
    pub con_to_d: Option<Vec<usize>>,
    pub classification: Classification,
}

impl RepresentationReport {
    pub fn verified(&self) -> bool {
        self.con_to_d.is_some() && self.classification.is_isoform
    }

    fn diagnostics(&self, d_size: usize) -> String {
        let mut out = Vec::new();
        if self.con_to_d.is_none() {
            out.push(format!(
                "Con L has {} elements and is not isomorphic to D ({} elements)",
                self.con_size, d_size
            ));
        }
        if !self.classification.is_isoform {
            out.push("L is not isoform".to_string());
        }
        for w in &self.classification.witnesses {
            out.push(format!(
                "{:?} fails at congruence {} (classes {:?}): {}",
                w.property, w.congruence, w.classes, w.detail
            ));
        }
        out.join("; ")
    }
}

#[derive(Debug, Clone)]
pub struct Representation {
    pub spec: PrunedProductSpec,
    pub lattice: PrunedLattice,
    pub report: RepresentationReport,
}

/// Builds and verifies `L` with `Con L ≅ D` and `L` isoform.
///
/// Never returns an unverified lattice: a failed check is
/// [`Error::VerificationFailed`] with diagnostics. Use
/// [`represent_unverified`] to inspect a failing construction.
pub fn represent_isoform(d: &FiniteLattice, choice: &FactorChoice) -> Result<Representation> {
    represent_isoform_with(d, choice, &Limits::default(), DEFAULT_JI_BOUND)
}

pub fn represent_isoform_with(
    d: &FiniteLattice,
    choice: &FactorChoice,
    limits: &Limits,
    ji_bound: usize,
) -> Result<Representation> {
    let r = represent_unverified(d, choice, limits, ji_bound)?;
    if r.report.verified() {
        Ok(r)
    } else {
        Err(Error::VerificationFailed(r.report.diagnostics(d.size())))
    }
}

/// The construction and its checks, whether or not they pass.
pub fn represent_unverified(
    d: &FiniteLattice,
    choice: &FactorChoice,
    limits: &Limits,
    ji_bound: usize,
) -> Result<Representation> {
    let (poset, ji_elements) = ji_poset(d)?;
    if poset.size() > ji_bound {
        return Err(Error::CapExceeded {
            what: "join-irreducibles of D",
            size: poset.size(),
            cap: ji_bound,
        });
    }
    let spec = match choice {
        FactorChoice::M3 => PrunedProductSpec::uniform(poset.clone(), SeparableFactor::m3()),
        FactorChoice::PerPoint(factors) => PrunedProductSpec::new(poset.clone(), factors.clone())?,
    };
    let lattice = pruned_product_with(&spec, limits)?;
    let con = con_lattice_with(lattice.lattice(), limits)?;
    let con_to_d = are_isomorphic_capped(&con.lattice, d, limits.max_isomorphism)?;
    let classification = classify_con(&con)?;
    Ok(Representation {
        spec,
        lattice,
        report: RepresentationReport {
            poset,
            ji_elements,
            con_size: con.len(),
            con_to_d,
            classification,
        },
    })
}
