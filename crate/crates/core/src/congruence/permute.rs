use super::{ConLattice, Congruence};
use crate::bits::BitSet;

/// `a (θ∘φ) b` holds but `a (φ∘θ) b` does not.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PermutabilityWitness {
    pub theta: usize,
    pub phi: usize,
    pub a: usize,
    pub b: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutability {
    pub permutable: bool,
    pub witness: Option<PermutabilityWitness>,
}

/// Relational product: `a (θ∘φ) b` iff `a θ c φ b` for some `c`.
fn compose(theta: &Congruence, phi: &Congruence) -> Vec<BitSet> {
    let n = theta.size();
    let phi_blocks: Vec<BitSet> = phi
        .blocks()
        .into_iter()
        .map(|b| {
            let mut s = BitSet::new(n);
            b.into_iter().for_each(|x| s.insert(x));
            s
        })
        .collect();
    let mut per_theta_block = vec![BitSet::new(n); theta.num_blocks()];
    for c in 0..n {
        per_theta_block[theta.block_of(c)].union_with(&phi_blocks[phi.block_of(c)]);
    }
    (0..n)
        .map(|a| per_theta_block[theta.block_of(a)].clone())
        .collect()
}

/// Checks `θ∘φ = φ∘θ` for every ordered pair of congruences, reporting the
/// lexicographically least `(θ, φ, a, b)` witness on failure.
pub fn is_congruence_permutable(con: &ConLattice) -> Permutability {
    let k = con.len();
    for t in 0..k {
        for p in 0..k {
            if t == p {
                continue;
            }
            let (theta, phi) = (&con.congruences[t], &con.congruences[p]);
            let forward = compose(theta, phi);
            let backward = compose(phi, theta);
            for (a, (f, g)) in forward.iter().zip(&backward).enumerate() {
                if let Some(b) = f.iter().find(|&b| !g.contains(b)) {
                    return Permutability {
                        permutable: false,
                        witness: Some(PermutabilityWitness {
                            theta: t,
                            phi: p,
                            a,
                            b,
                        }),
                    };
                }
            }
        }
    }
    Permutability {
        permutable: true,
        witness: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::congruence::{con_lattice, principal};
    use crate::lattice::{boolean, chain, m3};

    #[test]
    fn simple_lattices_permute() {
        assert!(is_congruence_permutable(&con_lattice(&m3()).unwrap()).permutable);
        assert!(is_congruence_permutable(&con_lattice(&chain(2).unwrap()).unwrap()).permutable);
    }

    #[test]
    fn b2_permutes() {
        assert!(is_congruence_permutable(&con_lattice(&boolean(2).unwrap()).unwrap()).permutable);
    }

    #[test]
    fn c3_does_not() {
        let l = chain(3).unwrap();
        let con = con_lattice(&l).unwrap();
        let r = is_congruence_permutable(&con);
        assert!(!r.permutable);
        let w = r.witness.unwrap();
        let (t, p) = (&con.congruences[w.theta], &con.congruences[w.phi]);
        assert!(compose(t, p)[w.a].contains(w.b));
        assert!(!compose(p, t)[w.a].contains(w.b));

        // Θ(0,m)∘Θ(m,1) relates 0 to 1; the reverse composite does not.
        let lo = principal(&l, 0, 1);
        let hi = principal(&l, 1, 2);
        assert!(compose(&lo, &hi)[0].contains(2));
        assert!(!compose(&hi, &lo)[0].contains(2));
    }
}
