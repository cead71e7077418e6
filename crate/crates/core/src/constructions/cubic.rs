use std::collections::HashSet;

use super::simple_ext::simple_extension;
use crate::congruence::{con_lattice, quotient, restrict, Congruence};
use crate::error::{Error, Result};
use crate::lattice::{are_isomorphic, atoms, boolean, product_labeled, Embedding, FiniteLattice, LabeledLattice};
use crate::limits::Limits;

/// One subdirect factor `K/ψ` with its chosen simple extension.
#[derive(Debug, Clone)]
pub struct CubicFactor {
    /// A meet-irreducible congruence of `K`.
    pub congruence: Congruence,
    pub quotient: FiniteLattice,
    /// `projection[x]` is `x/ψ` in `quotient`.
    pub projection: Vec<usize>,
    pub extension: Embedding,
}

/// The checked properties of a cubic extension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubicReport {
    pub con_size: usize,
    pub con_is_boolean: bool,
    pub con_atoms: usize,
    /// Join-irreducible congruences of the base.
    pub base_ji_congruences: usize,
    /// Congruences of the base that are restrictions of a congruence of the product.
    pub extended: usize,
    pub base_congruences: usize,
}

#[derive(Debug, Clone)]
pub struct CubicExtensionResult {
    pub base: FiniteLattice,
    pub factors: Vec<CubicFactor>,
    /// Product of the simple extensions, with coordinates per factor.
    pub product: LabeledLattice,
    pub diagonal: Embedding,
    pub report: CubicReport,
}

pub fn cubic_extension(k: &FiniteLattice, budget: usize) -> Result<CubicExtensionResult> {
    cubic_extension_with(k, budget, &Limits::default())
}

pub fn cubic_extension_with(k: &FiniteLattice, budget: usize, limits: &Limits) -> Result<CubicExtensionResult> {
    if k.is_trivial() {
        return Err(Error::InvalidInput("cubic extension of a one-element lattice".into()));
    }
    let con = con_lattice(k)?;
    let mut factors = Vec::new();
    for i in con.mi_indices() {
        let psi = con.congruences[i].clone();
        let (q, projection) = quotient(k, &psi)?;
        let extension = simple_extension(&q, budget)?;
        factors.push(CubicFactor {
            congruence: psi,
            quotient: q,
            projection,
            extension,
        });
    }

    let targets: Vec<&FiniteLattice> = factors.iter().map(|f| f.extension.target()).collect();
    let product = product_labeled(&targets, limits)?;
    let map = k
        .elements()
        .map(|x| {
            let coords: Vec<usize> = factors
                .iter()
                .map(|f| f.extension.apply(f.projection[x]))
                .collect();
            product.index_of(&coords).expect("coordinates lie in the product")
        })
        .collect();
    let diagonal = Embedding::new(k.clone(), product.lattice.clone(), map)
        .map_err(|e| Error::VerificationFailed(format!("diagonal map: {e}")))?;

    let r_con = crate::congruence::con_lattice_with(&product.lattice, limits)?;
    let con_atoms = atoms(&r_con.lattice).len();
    let con_is_boolean = are_isomorphic(&r_con.lattice, &boolean(con_atoms)?)?.is_some();
    let restricted: HashSet<Congruence> = r_con
        .congruences
        .iter()
        .map(|phi| restrict(&diagonal, phi))
        .collect();
    let extended = con
        .congruences
        .iter()
        .filter(|c| restricted.contains(*c))
        .count();
    let report = CubicReport {
        con_size: r_con.len(),
        con_is_boolean,
        con_atoms,
        base_ji_congruences: con.ji_indices.len(),
        extended,
        base_congruences: con.len(),
    };

    let mut problems = Vec::new();
    if !report.con_is_boolean {
        problems.push(format!("Con R has {} elements and is not Boolean", report.con_size));
    }
    if report.con_atoms != report.base_ji_congruences {
        problems.push(format!(
            "Con R has {} atoms but Con K has {} join-irreducibles",
            report.con_atoms, report.base_ji_congruences
        ));
    }
    if report.extended != report.base_congruences {
        problems.push(format!(
            "only {} of {} congruences of K extend",
            report.extended, report.base_congruences
        ));
    }
    if !problems.is_empty() {
        return Err(Error::VerificationFailed(problems.join("; ")));
    }

    Ok(CubicExtensionResult {
        base: k.clone(),
        factors,
        product,
        diagonal,
        report,
    })
}
