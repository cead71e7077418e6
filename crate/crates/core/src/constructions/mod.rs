//! Lattice constructions: `N(A, B)`, pruned products, simple and cubic
//! extensions, the distributive-to-isoform representation and exhaustive
//! enumeration of small lattices.

mod cubic;
mod enumerate;
mod nab;
mod pruned;
mod represent;
mod simple_ext;

pub use cubic::{cubic_extension, cubic_extension_with, CubicExtensionResult, CubicFactor, CubicReport};
pub use enumerate::{
    enumerate_lattices, enumerate_up_to, naive_canonical_form, naive_lattice_forms,
    MAX_ENUMERATION_SIZE,
};
pub use nab::{n_construction, n_construction_with, nab_formula_join, nab_formula_meet, NabLattice};
pub use pruned::{
    forks, pruned_product, pruned_product_with, theorem_join, theorem_meet, PrunedLattice,
    PrunedProductSpec, SeparableFactor,
};
pub use represent::{
    represent_isoform, represent_isoform_with, represent_unverified, FactorChoice, Representation,
    RepresentationReport, DEFAULT_JI_BOUND,
};
pub use simple_ext::{simple_extension, simple_extension_traced, ExtensionSource, SimpleExtension};
