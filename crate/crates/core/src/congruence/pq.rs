use super::{principal, ConLattice};
use crate::error::Result;
use crate::lattice::{are_isomorphic, atoms, boolean, interval};

/// Outcome of checking properties (P) and (Q).
///
/// (P): every join-irreducible congruence is `Θ(0, p)` for an atom `p`.
/// (Q): for every antichain `Θ_1, ..., Θ_k` of join-irreducible congruences
/// there are atoms `p_i` with `Θ_i = Θ(0, p_i)` whose join bounds an ideal
/// isomorphic to `B_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PqReport {
    pub p: bool,
    pub q: bool,
    /// Join-irreducible congruence (index) not of the form `Θ(0, atom)`.
    pub p_witness: Option<usize>,
    /// Antichain of congruence indices for which no atom family works.
    pub q_witness: Option<Vec<usize>>,
}

pub fn check_properties_pq(con: &ConLattice) -> Result<PqReport> {
    let l = &con.host;
    let atom_list = atoms(l);
    let atom_congruence: Vec<usize> = atom_list
        .iter()
        .map(|&p| {
            con.index_of(&principal(l, l.bottom(), p))
                .expect("principal congruence is enumerated")
        })
        .collect();
    let atoms_for = |theta: usize| -> Vec<usize> {
        atom_list
            .iter()
            .zip(&atom_congruence)
            .filter(|(_, &c)| c == theta)
            .map(|(&p, _)| p)
            .collect()
    };

    let ji = &con.ji_indices;
    let p_witness = ji.iter().copied().find(|&t| atoms_for(t).is_empty());

    let mut q_witness = None;
    let mut family = Vec::new();
    antichains(con, ji, 0, &mut family, &mut |fam: &[usize]| -> Result<bool> {
        let choices: Vec<Vec<usize>> = fam.iter().map(|&t| atoms_for(t)).collect();
        if realizable(con, &choices)? {
            Ok(true)
        } else {
            q_witness = Some(fam.to_vec());
            Ok(false)
        }
    })?;

    Ok(PqReport {
        p: p_witness.is_none(),
        q: q_witness.is_none(),
        p_witness,
        q_witness,
    })
}

/// Visits every nonempty antichain of `ji` (as congruence indices) in
/// lexicographic order until `visit` returns false.
fn antichains(
    con: &ConLattice,
    ji: &[usize],
    start: usize,
    family: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]) -> Result<bool>,
) -> Result<bool> {
    for i in start..ji.len() {
        let t = ji[i];
        if family.iter().any(|&s| con.lattice.comparable(s, t)) {
            continue;
        }
        family.push(t);
        let keep_going = visit(family)? && antichains(con, ji, i + 1, family, visit)?;
        family.pop();
        if !keep_going {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Searches atom tuples, one per congruence, whose join spans a Boolean ideal.
fn realizable(con: &ConLattice, choices: &[Vec<usize>]) -> Result<bool> {
    let l = &con.host;
    let k = choices.len();
    let target = boolean(k)?;
    let mut picked = Vec::with_capacity(k);
    fn go(
        l: &crate::lattice::FiniteLattice,
        choices: &[Vec<usize>],
        picked: &mut Vec<usize>,
        target: &crate::lattice::FiniteLattice,
    ) -> Result<bool> {
        if picked.len() == choices.len() {
            let top = picked.iter().fold(l.bottom(), |acc, &p| l.join(acc, p));
            if l.down_set(top).count() != target.size() {
                return Ok(false);
            }
            let (ideal, _) = interval(l, l.bottom(), top)?;
            return Ok(are_isomorphic(&ideal, target)?.is_some());
        }
        for &p in &choices[picked.len()] {
            if picked.contains(&p) {
                continue;
            }
            picked.push(p);
            let found = go(l, choices, picked, target)?;
            picked.pop();
            if found {
                return Ok(true);
            }
        }
        Ok(false)
    }
    go(l, choices, &mut picked, &target)
}
