use super::{con_lattice, principal, ConLattice, Congruence};
use crate::error::Result;
use crate::lattice::{are_isomorphic, interval, FiniteLattice};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Property {
    Regular,
    Uniform,
    Isoform,
}

/// A congruence that breaks one of the class properties, with the offending
/// classes given as block ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub property: Property,
    pub congruence: usize,
    pub classes: Vec<usize>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub is_regular: bool,
    pub is_uniform: bool,
    pub is_isoform: bool,
    pub is_simple: bool,
    /// First violation found for each property that fails.
    pub witnesses: Vec<Violation>,
}

pub fn classify(l: &FiniteLattice) -> Result<Classification> {
    classify_con(&con_lattice(l)?)
}

pub fn classify_con(con: &ConLattice) -> Result<Classification> {
    let l = &con.host;
    let mut witnesses = Vec::new();

    let uniform = con
        .congruences
        .iter()
        .enumerate()
        .find_map(|(i, c)| uniform_violation(i, c));
    let regular = con
        .congruences
        .iter()
        .enumerate()
        .find_map(|(i, c)| regular_violation(l, i, c));
    let mut isoform = None;
    for (i, c) in con.congruences.iter().enumerate() {
        if let Some(v) = isoform_violation(l, i, c)? {
            isoform = Some(v);
            break;
        }
    }

    let is_uniform = uniform.is_none();
    let is_regular = regular.is_none();
    let is_isoform = isoform.is_none();
    witnesses.extend(regular);
    witnesses.extend(uniform);
    witnesses.extend(isoform);

    Ok(Classification {
        is_regular,
        is_uniform,
        is_isoform,
        is_simple: con.is_simple(),
        witnesses,
    })
}

fn uniform_violation(index: usize, c: &Congruence) -> Option<Violation> {
    let blocks = c.blocks();
    let first = blocks[0].len();
    let other = blocks.iter().position(|b| b.len() != first)?;
    Some(Violation {
        property: Property::Uniform,
        congruence: index,
        classes: vec![0, other],
        detail: format!(
            "class sizes {} and {} differ",
            first,
            blocks[other].len()
        ),
    })
}

/// A congruence is regular iff each of its classes `[lo, hi]` generates it
/// as `Θ(lo, hi)`: that is the least congruence containing the class, and
/// any congruence sharing the class lies above it.
fn regular_violation(l: &FiniteLattice, index: usize, c: &Congruence) -> Option<Violation> {
    for (block, &(lo, hi)) in c.block_bounds().iter().enumerate() {
        let generated = principal(l, lo, hi);
        if &generated != c {
            return Some(Violation {
                property: Property::Regular,
                congruence: index,
                classes: vec![block],
                detail: format!(
                    "class [{lo}, {hi}] generates a congruence with {} blocks instead of {}",
                    generated.num_blocks(),
                    c.num_blocks()
                ),
            });
        }
    }
    None
}

fn isoform_violation(l: &FiniteLattice, index: usize, c: &Congruence) -> Result<Option<Violation>> {
    let bounds = c.block_bounds();
    if bounds.len() < 2 {
        return Ok(None);
    }
    let sizes: Vec<usize> = c.blocks().iter().map(Vec::len).collect();
    let (lo, hi) = bounds[0];
    let (reference, _) = interval(l, lo, hi)?;
    for (block, &(lo, hi)) in bounds.iter().enumerate().skip(1) {
        let found = if sizes[block] != sizes[0] {
            false
        } else if sizes[block] == 1 {
            true
        } else {
            let (class, _) = interval(l, lo, hi)?;
            are_isomorphic(&reference, &class)?.is_some()
        };
        if !found {
            return Ok(Some(Violation {
                property: Property::Isoform,
                congruence: index,
                classes: vec![0, block],
                detail: format!("classes 0 and {block} are not isomorphic"),
            }));
        }
    }
    Ok(None)
}
