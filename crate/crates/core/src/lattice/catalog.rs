//! Named lattices: chains, Boolean lattices, M_n, N_5 and partition lattices.

use super::FiniteLattice;
use crate::bits::BitSet;
use crate::error::{Error, Result};

const MAX_BOOLEAN_RANK: usize = 16;

/// Looks up a catalog lattice by name. `k` is required for `chain` and `boolean`.
pub fn standard(name: &str, k: Option<usize>) -> Result<FiniteLattice> {
    let need = |k: Option<usize>| {
        k.ok_or_else(|| Error::ParameterOutOfRange(format!("`{name}` needs a size parameter")))
    };
    match name.to_ascii_lowercase().as_str() {
        "chain" => chain(need(k)?),
        "boolean" => boolean(need(k)?),
        "m3" => Ok(m3()),
        "n5" => Ok(n5()),
        _ => Err(Error::UnknownName(name.to_string())),
    }
}

/// The `k`-element chain `C_k`.
pub fn chain(k: usize) -> Result<FiniteLattice> {
    if k == 0 {
        return Err(Error::ParameterOutOfRange("chain needs k >= 1".into()));
    }
    let covers: Vec<_> = (1..k).map(|i| (i - 1, i)).collect();
    FiniteLattice::from_covers(k, &covers)
}

/// The Boolean lattice `B_k` with `2^k` elements.
pub fn boolean(k: usize) -> Result<FiniteLattice> {
    if k > MAX_BOOLEAN_RANK {
        return Err(Error::ParameterOutOfRange(format!(
            "boolean rank {k} exceeds {MAX_BOOLEAN_RANK}"
        )));
    }
    let n = 1usize << k;
    let mut covers = Vec::new();
    for s in 0..n {
        for bit in 0..k {
            if s & (1 << bit) == 0 {
                covers.push((s, s | (1 << bit)));
            }
        }
    }
    FiniteLattice::from_covers(n, &covers)
}

/// `M_k`: a bottom, a top and `k` pairwise incomparable atoms.
pub fn m_n(k: usize) -> Result<FiniteLattice> {
    let n = k + 2;
    let mut covers = Vec::new();
    for a in 1..=k {
        covers.push((0, a));
        covers.push((a, n - 1));
    }
    if k == 0 {
        covers.push((0, 1));
    }
    FiniteLattice::from_covers(n, &covers)
}

pub fn m3() -> FiniteLattice {
    m_n(3).expect("M_3")
}

/// The pentagon, with input numbering `0 < a < c < 1` and `0 < b < 1`.
pub fn n5() -> FiniteLattice {
    // 0 = bottom, 1 = a, 2 = c, 3 = b, 4 = top
    FiniteLattice::from_covers(5, &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)]).expect("N_5")
}

/// The lattice of partitions of an `m`-element set ordered by refinement.
pub fn partition_lattice(m: usize) -> Result<FiniteLattice> {
    if m == 0 || m > 6 {
        return Err(Error::ParameterOutOfRange(format!(
            "partition lattice of {m} points"
        )));
    }
    let parts = restricted_growth_strings(m);
    let refines = |p: &[usize], q: &[usize]| {
        // p ≤ q iff every block of p sits inside a block of q.
        (0..m).all(|i| (0..m).all(|j| p[i] != p[j] || q[i] == q[j]))
    };
    let up = parts
        .iter()
        .map(|p| {
            let mut row = BitSet::new(parts.len());
            for (j, q) in parts.iter().enumerate() {
                if refines(p, q) {
                    row.insert(j);
                }
            }
            row
        })
        .collect();
    FiniteLattice::from_up_sets(up).map(|(l, _)| l)
}

fn restricted_growth_strings(m: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, max: usize, m: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == m {
            out.push(prefix.clone());
            return;
        }
        for b in 0..=max + 1 {
            prefix.push(b);
            go(prefix, max.max(b), m, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    let mut prefix = vec![0];
    go(&mut prefix, 0, m, &mut out);
    out
}
