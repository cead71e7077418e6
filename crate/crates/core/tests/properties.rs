use std::collections::BTreeSet;

use isoform_core::congruence::{con_lattice, generated, principal, quotient};
use isoform_core::constructions::{pruned_product, theorem_join, theorem_meet, PrunedProductSpec, SeparableFactor};
use isoform_core::lattice::{
    are_isomorphic, chain, downset_lattice, is_distributive_by_identity, is_distributive_by_sublattices,
    is_modular, ji_poset, join_irreducibles, m3,
};
use isoform_core::{FiniteLattice, Poset};
use proptest::prelude::*;

/// Lattice of an intersection-closed family of subsets of a 5-point set.
fn closure_lattice(family: &[u8]) -> FiniteLattice {
    let mut sets: BTreeSet<u8> = family.iter().map(|m| m & 0x1f).collect();
    sets.insert(0x1f);
    loop {
        let snapshot: Vec<u8> = sets.iter().copied().collect();
        let before = sets.len();
        for &a in &snapshot {
            for &b in &snapshot {
                sets.insert(a & b);
            }
        }
        if sets.len() == before {
            break;
        }
    }
    let masks: Vec<u8> = sets.into_iter().collect();
    FiniteLattice::from_order(masks.len(), |a, b| masks[a] & !masks[b] == 0)
        .expect("closure system is a lattice")
        .0
}

fn arb_lattice() -> impl Strategy<Value = FiniteLattice> {
    prop::collection::vec(any::<u8>(), 0..7).prop_map(|f| closure_lattice(&f))
}

/// Strict relations drawn from the upper triangle, so always acyclic.
fn arb_poset(max: usize) -> impl Strategy<Value = Poset> {
    (1..=max).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        let k = pairs.len();
        prop::collection::vec(any::<bool>(), k).prop_map(move |keep| {
            let lt: Vec<_> = pairs.iter().zip(&keep).filter(|(_, k)| **k).map(|(p, _)| *p).collect();
            Poset::from_lt(n, &lt).unwrap()
        })
    })
}

fn relabel(l: &FiniteLattice, perm: &[usize]) -> FiniteLattice {
    let covers: Vec<_> = l.covers().iter().map(|&(a, b)| (perm[a], perm[b])).collect();
    FiniteLattice::from_covers(l.size(), &covers).unwrap()
}

fn arb_relabelled() -> impl Strategy<Value = (FiniteLattice, FiniteLattice)> {
    arb_lattice().prop_flat_map(|l| {
        let n = l.size();
        (Just(l), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
            .prop_map(|(l, perm)| (relabel(&l, &perm), l))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn lattice_laws(l in arb_lattice()) {
        let n = l.size();
        prop_assert_eq!(l.bottom(), 0);
        prop_assert_eq!(l.top(), n - 1);
        for a in 0..n {
            prop_assert_eq!(l.meet(a, a), a);
            prop_assert_eq!(l.join(a, a), a);
            for b in 0..n {
                prop_assert_eq!(l.meet(a, b), l.meet(b, a));
                prop_assert_eq!(l.join(a, b), l.join(b, a));
                prop_assert_eq!(l.meet(a, l.join(a, b)), a);
                prop_assert_eq!(l.join(a, l.meet(a, b)), a);
                prop_assert_eq!(l.leq(a, b), l.meet(a, b) == a);
                prop_assert_eq!(l.leq(a, b), l.join(a, b) == b);
                if l.leq(a, b) {
                    prop_assert!(l.height(a) <= l.height(b));
                    prop_assert!(a <= b, "indices form a linear extension");
                }
                for c in 0..n {
                    prop_assert_eq!(l.meet(l.meet(a, b), c), l.meet(a, l.meet(b, c)));
                    prop_assert_eq!(l.join(l.join(a, b), c), l.join(a, l.join(b, c)));
                }
            }
        }
    }

    #[test]
    fn covers_round_trip(l in arb_lattice()) {
        let again = FiniteLattice::from_covers(l.size(), l.covers()).unwrap();
        prop_assert_eq!(again.covers(), l.covers());
        for &(a, b) in l.covers() {
            prop_assert!(l.is_cover(a, b));
            prop_assert!((0..l.size()).all(|c| !(l.lt(a, c) && l.lt(c, b))));
        }
    }

    #[test]
    fn isomorphism_is_reflexive_and_symmetric((a, b) in arb_relabelled()) {
        prop_assert!(are_isomorphic(&a, &a).unwrap().is_some());
        let forward = are_isomorphic(&a, &b).unwrap();
        let backward = are_isomorphic(&b, &a).unwrap();
        prop_assert!(forward.is_some());
        prop_assert!(backward.is_some());
        let phi = forward.unwrap();
        for x in 0..a.size() {
            for y in 0..a.size() {
                prop_assert_eq!(a.leq(x, y), b.leq(phi[x], phi[y]));
            }
        }
    }

    #[test]
    fn dual_twice_is_isomorphic(l in arb_lattice()) {
        let dd = l.dual().dual();
        prop_assert!(are_isomorphic(&l, &dd).unwrap().is_some());
        prop_assert_eq!(con_lattice(&l).unwrap().len(), con_lattice(&l.dual()).unwrap().len());
    }

    #[test]
    fn distributivity_tests_agree(l in arb_lattice()) {
        let by_identity = is_distributive_by_identity(&l);
        prop_assert_eq!(by_identity, is_distributive_by_sublattices(&l));
        if by_identity {
            prop_assert!(is_modular(&l));
        }
    }

    #[test]
    fn birkhoff_round_trip(p in arb_poset(6)) {
        let d = downset_lattice(&p).unwrap();
        prop_assert!(is_distributive_by_identity(&d));
        prop_assert_eq!(join_irreducibles(&d).len(), p.size());
        let (q, _) = ji_poset(&d).unwrap();
        prop_assert!(q.is_isomorphic(&p));
        let again = downset_lattice(&q).unwrap();
        prop_assert!(are_isomorphic(&d, &again).unwrap().is_some());
    }

    #[test]
    fn congruence_invariants(l in arb_lattice()) {
        let con = con_lattice(&l).unwrap();
        prop_assert!(con.congruences[0].is_identity());
        prop_assert!(con.congruences[con.len() - 1].is_all());
        prop_assert!(is_distributive_by_identity(&con.lattice));
        for (i, c) in con.congruences.iter().enumerate() {
            prop_assert!(c.is_compatible(&l));
            prop_assert!(c.blocks_are_intervals(&l));
            let (q, proj) = quotient(&l, c).unwrap();
            prop_assert_eq!(q.size(), c.num_blocks());
            for a in 0..l.size() {
                for b in 0..l.size() {
                    prop_assert_eq!(proj[l.join(a, b)], q.join(proj[a], proj[b]));
                    prop_assert_eq!(proj[l.meet(a, b)], q.meet(proj[a], proj[b]));
                }
            }
            for (j, d) in con.congruences.iter().enumerate() {
                prop_assert_eq!(con.lattice.leq(i, j), c.refines(d));
                prop_assert_eq!(con.index_of(&c.join(d)), Some(con.lattice.join(i, j)));
                prop_assert_eq!(con.index_of(&c.meet(d)), Some(con.lattice.meet(i, j)));
            }
        }
        for &(a, b) in l.covers() {
            let t = principal(&l, a, b);
            prop_assert!(t.related(a, b));
            prop_assert_eq!(&t, &generated(&l, &[(a, b)]));
            prop_assert!(con.index_of(&t).is_some());
        }
    }

    #[test]
    fn pruned_bounds_match_lattice(p in arb_poset(4), use_m3 in any::<bool>()) {
        let factor = if use_m3 {
            SeparableFactor::m3()
        } else {
            SeparableFactor::first(chain(3).unwrap()).unwrap()
        };
        let spec = PrunedProductSpec::uniform(p, factor);
        let pl = pruned_product(&spec).unwrap();
        let l = pl.lattice();
        for x in 0..l.size() {
            for y in 0..l.size() {
                let (cx, cy) = (pl.coords(x), pl.coords(y));
                let j = pl.coords(l.join(x, y));
                let m = pl.coords(l.meet(x, y));
                let (tj, tm) = (theorem_join(&spec, cx, cy), theorem_meet(&spec, cx, cy));
                prop_assert_eq!(tj.as_slice(), j);
                prop_assert_eq!(tm.as_slice(), m);
            }
        }
    }
}

#[test]
fn m3_congruences_are_trivial() {
    assert_eq!(con_lattice(&m3()).unwrap().len(), 2);
}
