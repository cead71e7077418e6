//! Unary polynomial functions and the algebraically-isoform predicate.
//!
//! The unary polynomials of `L` are the closure of the identity map and the
//! constant maps under pointwise meet and join. A congruence is algebraically
//! isoform when, for every element `a`, one of these polynomials restricts to
//! an isomorphism from the class of `0` onto the class of `a`.

use std::collections::HashMap;

use super::{con_lattice_with, ConLattice};
use crate::error::Result;
use crate::lattice::FiniteLattice;
use crate::limits::Limits;

/// How a polynomial was produced; operands index earlier polynomials.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyTerm {
    Var,
    Const(usize),
    Meet(usize, usize),
    Join(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    pub values: Vec<usize>,
    /// Composition tree over the generators, e.g. `(x ∨ 2)`.
    pub expr: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub congruence: usize,
    pub element: usize,
    pub polynomial: Polynomial,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgebraicIsoform {
    /// One certificate per (congruence, element).
    Isoform { certificates: Vec<Certificate> },
    NotIsoform {
        congruence: usize,
        element: usize,
        reason: String,
    },
    /// The polynomial closure outgrew the cap before a verdict.
    Inconclusive { functions: usize, reason: String },
}

impl AlgebraicIsoform {
    pub fn verdict(&self) -> Option<bool> {
        match self {
            Self::Isoform { .. } => Some(true),
            Self::NotIsoform { .. } => Some(false),
            Self::Inconclusive { .. } => None,
        }
    }
}

pub fn is_algebraically_isoform(l: &FiniteLattice) -> Result<AlgebraicIsoform> {
    let limits = Limits::default();
    is_algebraically_isoform_with(&con_lattice_with(l, &limits)?, &limits)
}

pub fn is_algebraically_isoform_with(con: &ConLattice, limits: &Limits) -> Result<AlgebraicIsoform> {
    let l = &con.host;
    let n = l.size();

    struct Target {
        congruence: usize,
        zero_class: Vec<usize>,
        class: Vec<usize>,
        solved_by: Option<usize>,
    }
    let mut targets = Vec::new();
    let mut target_of: HashMap<(usize, usize), usize> = HashMap::new();
    for (t, c) in con.congruences.iter().enumerate() {
        let blocks = c.blocks();
        let zero_class = blocks[c.block_of(l.bottom())].clone();
        for (b, class) in blocks.into_iter().enumerate() {
            if class.len() != zero_class.len() {
                return Ok(AlgebraicIsoform::NotIsoform {
                    congruence: t,
                    element: class[0],
                    reason: format!(
                        "class of {} has {} elements, class of 0 has {}",
                        class[0],
                        class.len(),
                        zero_class.len()
                    ),
                });
            }
            target_of.insert((t, b), targets.len());
            targets.push(Target {
                congruence: t,
                zero_class: zero_class.clone(),
                class,
                solved_by: None,
            });
        }
    }

    let restricts_to_iso = |f: &[usize], zero: &[usize], class: &[usize]| -> bool {
        let mut hit = vec![false; n];
        for &x in zero {
            let y = f[x];
            if class.binary_search(&y).is_err() || hit[y] {
                return false;
            }
            hit[y] = true;
        }
        // Polynomials are monotone; an injective monotone map between
        // equal-sized intervals is an isomorphism iff it reflects order.
        zero.iter().all(|&x| {
            zero.iter()
                .all(|&y| !l.leq(f[x], f[y]) || l.leq(x, y))
        })
    };

    let mut functions: Vec<Vec<usize>> = Vec::new();
    let mut terms: Vec<PolyTerm> = Vec::new();
    let mut seen: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut unsolved = targets.len();

    let mut add = |values: Vec<usize>,
                   term: PolyTerm,
                   functions: &mut Vec<Vec<usize>>,
                   terms: &mut Vec<PolyTerm>,
                   targets: &mut Vec<Target>,
                   unsolved: &mut usize| {
        if seen.contains_key(&values) {
            return;
        }
        let idx = functions.len();
        for t in targets.iter_mut().filter(|t| t.solved_by.is_none()) {
            if restricts_to_iso(&values, &t.zero_class, &t.class) {
                t.solved_by = Some(idx);
                *unsolved -= 1;
            }
        }
        seen.insert(values.clone(), idx);
        functions.push(values);
        terms.push(term);
    };

    add(
        (0..n).collect(),
        PolyTerm::Var,
        &mut functions,
        &mut terms,
        &mut targets,
        &mut unsolved,
    );
    for c in 0..n {
        add(
            vec![c; n],
            PolyTerm::Const(c),
            &mut functions,
            &mut terms,
            &mut targets,
            &mut unsolved,
        );
    }

    let mut i = 0;
    while unsolved > 0 && i < functions.len() {
        for j in 0..=i {
            if unsolved == 0 {
                break;
            }
            if functions.len() > limits.max_functions {
                return Ok(AlgebraicIsoform::Inconclusive {
                    functions: functions.len(),
                    reason: format!(
                        "polynomial closure exceeded {} functions",
                        limits.max_functions
                    ),
                });
            }
            let (f, g) = (&functions[i], &functions[j]);
            let m: Vec<usize> = (0..n).map(|x| l.meet(f[x], g[x])).collect();
            let jn: Vec<usize> = (0..n).map(|x| l.join(f[x], g[x])).collect();
            add(
                m,
                PolyTerm::Meet(i, j),
                &mut functions,
                &mut terms,
                &mut targets,
                &mut unsolved,
            );
            add(
                jn,
                PolyTerm::Join(i, j),
                &mut functions,
                &mut terms,
                &mut targets,
                &mut unsolved,
            );
        }
        i += 1;
    }

    if let Some(t) = targets.iter().find(|t| t.solved_by.is_none()) {
        return Ok(AlgebraicIsoform::NotIsoform {
            congruence: t.congruence,
            element: t.class[0],
            reason: format!(
                "none of the {} unary polynomials maps the class of 0 isomorphically onto the class of {}",
                functions.len(),
                t.class[0]
            ),
        });
    }

    let mut certificates = Vec::new();
    for (ci, c) in con.congruences.iter().enumerate() {
        for a in 0..n {
            let t = &targets[target_of[&(ci, c.block_of(a))]];
            let f = t.solved_by.expect("all targets solved");
            certificates.push(Certificate {
                congruence: ci,
                element: a,
                polynomial: Polynomial {
                    values: functions[f].clone(),
                    expr: render(&terms, f),
                },
            });
        }
    }
    Ok(AlgebraicIsoform::Isoform { certificates })
}

fn render(terms: &[PolyTerm], i: usize) -> String {
    match terms[i] {
        PolyTerm::Var => "x".to_string(),
        PolyTerm::Const(c) => c.to_string(),
        PolyTerm::Meet(a, b) => format!("({} ∧ {})", render(terms, a), render(terms, b)),
        PolyTerm::Join(a, b) => format!("({} ∨ {})", render(terms, a), render(terms, b)),
    }
}
