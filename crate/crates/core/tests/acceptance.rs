//! Acceptance suite: one test per criterion, each printing a single
//! `criterion N: PASS|FAIL ...` line.

use std::time::{Duration, Instant};

use isoform_core::congruence::{classify, con_lattice, is_cpe};
use isoform_core::constructions::{
    cubic_extension, enumerate_lattices, enumerate_up_to, n_construction, naive_canonical_form,
    naive_lattice_forms, nab_formula_join, nab_formula_meet, pruned_product, represent_isoform,
    represent_unverified, theorem_join, theorem_meet, FactorChoice, PrunedLattice, PrunedProductSpec,
    SeparableFactor, DEFAULT_JI_BOUND,
};
use isoform_core::lattice::{
    are_isomorphic, boolean, chain, direct_product, downset_lattice, is_distributive_by_identity,
    is_sectionally_complemented, m3, n5,
};
use isoform_core::{Embedding, FiniteLattice, Limits, Poset};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn verdict(n: usize, pass: bool, elapsed: Duration, budget: Duration, detail: &str) -> bool {
    let ok = pass && elapsed <= budget;
    println!(
        "criterion {n}: {} ({:.2?} of {:.0?}) {detail}",
        if ok { "PASS" } else { "FAIL" },
        elapsed,
        budget
    );
    ok
}

fn c3_factor() -> SeparableFactor {
    SeparableFactor::new(chain(3).unwrap(), 1).unwrap()
}

/// C_3² over a 2-chain, C_3³ over the hat `p, r < q`, M_3² over a 2-chain.
fn fixtures() -> Vec<(&'static str, PrunedProductSpec)> {
    vec![
        ("C3^2 over 2-chain", PrunedProductSpec::uniform(Poset::chain(2), c3_factor())),
        (
            "C3^3 over hat",
            PrunedProductSpec::uniform(Poset::from_lt(3, &[(0, 1), (2, 1)]).unwrap(), c3_factor()),
        ),
        ("M3^2 over 2-chain", PrunedProductSpec::uniform(Poset::chain(2), SeparableFactor::m3())),
    ]
}

fn random_spec() -> PrunedProductSpec {
    let mut rng = ChaCha8Rng::seed_from_u64(20_240_601);
    let mut lt = Vec::new();
    for i in 0..3 {
        for j in i + 1..3 {
            if rng.gen_bool(0.5) {
                lt.push((i, j));
            }
        }
    }
    let factors = (0..3)
        .map(|_| if rng.gen_bool(0.5) { c3_factor() } else { SeparableFactor::m3() })
        .collect();
    PrunedProductSpec::new(Poset::from_lt(3, &lt).unwrap(), factors).unwrap()
}

fn nab_grid() -> (Vec<(&'static str, FiniteLattice)>, Vec<(&'static str, FiniteLattice)>) {
    let a = vec![
        ("B1", boolean(1).unwrap()),
        ("B2", boolean(2).unwrap()),
        ("C3", chain(3).unwrap()),
        ("M3", m3()),
        ("N5", n5()),
    ];
    let b = vec![
        ("B1", boolean(1).unwrap()),
        ("B2", boolean(2).unwrap()),
        ("C3", chain(3).unwrap()),
    ];
    (a, b)
}

fn representation_inputs() -> Vec<(&'static str, FiniteLattice)> {
    vec![
        ("C2", chain(2).unwrap()),
        ("B2", boolean(2).unwrap()),
        ("C3", chain(3).unwrap()),
        ("downsets of V", downset_lattice(&Poset::from_lt(3, &[(0, 1), (0, 2)]).unwrap()).unwrap()),
        ("downsets of 3-chain", downset_lattice(&Poset::chain(3)).unwrap()),
    ]
}

fn cubic_inputs() -> Vec<(&'static str, FiniteLattice)> {
    vec![
        ("C3", chain(3).unwrap()),
        ("B2", boolean(2).unwrap()),
        ("N5", n5()),
        ("C2xC3", direct_product(&chain(2).unwrap(), &chain(3).unwrap()).unwrap()),
    ]
}

const CUBIC_BUDGET: usize = 3;

fn cpe_cases() -> Vec<(&'static str, Embedding)> {
    let c2 = chain(2).unwrap();
    vec![
        ("identity on N5", Embedding::identity(&n5())),
        ("identity on M3", Embedding::identity(&m3())),
        ("identity on C3", Embedding::identity(&chain(3).unwrap())),
        ("C2 into C3 endpoints", Embedding::new(c2.clone(), chain(3).unwrap(), vec![0, 2]).unwrap()),
        ("C2 into B2 endpoints", Embedding::new(c2, boolean(2).unwrap(), vec![0, 3]).unwrap()),
    ]
}

fn adjoin_bottom(l: &FiniteLattice) -> FiniteLattice {
    let mut covers: Vec<(usize, usize)> = l.covers().iter().map(|&(a, b)| (a + 1, b + 1)).collect();
    covers.push((0, 1));
    FiniteLattice::from_covers(l.size() + 1, &covers).unwrap()
}

#[test]
fn criterion_1_pruned_edge_counts() {
    let start = Instant::now();
    let expected = [2, 4, 5];
    let mut pass = true;
    let mut detail = Vec::new();
    for ((name, spec), want) in fixtures().into_iter().zip(expected) {
        let got = pruned_product(&spec).unwrap().pruned_edges.len();
        pass &= got == want;
        detail.push(format!("{name}: {got} removed (expected {want})"));
    }
    assert!(verdict(1, pass, start.elapsed(), Duration::from_secs(1), &detail.join(", ")));
}

fn formula_mismatches(spec: &PrunedProductSpec, l: &PrunedLattice) -> usize {
    let n = l.lattice().size();
    let le = |i: usize, j: usize| spec.leq(l.coords(i), l.coords(j));
    let mut bad = 0;
    for x in 0..n {
        for y in 0..n {
            let ubs: Vec<usize> = (0..n).filter(|&z| le(x, z) && le(y, z)).collect();
            let lubs: Vec<usize> = ubs.iter().copied().filter(|&z| ubs.iter().all(|&w| le(z, w))).collect();
            let lbs: Vec<usize> = (0..n).filter(|&z| le(z, x) && le(z, y)).collect();
            let glbs: Vec<usize> = lbs.iter().copied().filter(|&z| lbs.iter().all(|&w| le(w, z))).collect();
            let (a, b) = (l.coords(x), l.coords(y));
            if lubs.len() != 1 || theorem_join(spec, a, b) != l.coords(lubs[0]) {
                bad += 1;
            }
            if glbs.len() != 1 || theorem_meet(spec, a, b) != l.coords(glbs[0]) {
                bad += 1;
            }
        }
    }
    bad
}

#[test]
fn criterion_2_join_meet_formulas() {
    let start = Instant::now();
    let mut specs = fixtures();
    specs.push(("random 3-point poset", random_spec()));
    let mut total = 0;
    let mut detail = Vec::new();
    for (name, spec) in &specs {
        let l = pruned_product(spec).unwrap();
        let bad = formula_mismatches(spec, &l);
        total += bad;
        detail.push(format!("{name} ({} elements): {bad} mismatches", l.lattice().size()));
    }
    assert!(verdict(2, total == 0, start.elapsed(), Duration::from_secs(10), &detail.join(", ")));
}

#[test]
fn criterion_3_nab_formulas() {
    let start = Instant::now();
    let (aa, bb) = nab_grid();
    let mut bad = 0;
    let mut pairs = 0;
    for (_, a) in &aa {
        for (_, b) in &bb {
            let n = n_construction(a, b).unwrap();
            let l = n.lattice();
            for u in l.elements() {
                for v in l.elements().filter(|&v| !l.comparable(u, v)) {
                    pairs += 1;
                    if nab_formula_meet(&n, u, v).unwrap() != l.meet(u, v) {
                        bad += 1;
                    }
                    if nab_formula_join(&n, u, v).unwrap() != l.join(u, v) {
                        bad += 1;
                    }
                }
            }
        }
    }
    let detail = format!("{pairs} incomparable pairs, {bad} mismatches");
    assert!(verdict(3, bad == 0, start.elapsed(), Duration::from_secs(10), &detail));
}

#[test]
fn criterion_4_nab_congruence_lattice() {
    let start = Instant::now();
    let (aa, bb) = nab_grid();
    let mut failures = Vec::new();
    let mut cells = 0;
    for (an, a) in &aa {
        let expected = adjoin_bottom(&con_lattice(a).unwrap().lattice);
        for (bn, b) in &bb {
            cells += 1;
            let n = n_construction(a, b).unwrap();
            let con = con_lattice(n.lattice()).unwrap();
            let iso = are_isomorphic(&con.lattice, &expected).unwrap().is_some();
            // Diagnostic only: comparison against Con B with a new zero.
            let via_b = adjoin_bottom(&con_lattice(b).unwrap().lattice);
            let iso_b = are_isomorphic(&con.lattice, &via_b).unwrap().is_some();
            println!(
                "  N({an},{bn}): |N| = {}, |Con N| = {}, |Con {an}| + 1 = {} -> {}; Con {bn} + new zero: {}",
                n.lattice().size(),
                con.len(),
                expected.size(),
                if iso { "isomorphic" } else { "NOT isomorphic" },
                if iso_b { "isomorphic" } else { "not isomorphic" }
            );
            if !iso {
                failures.push(format!("N({an},{bn})"));
            }
        }
    }
    let detail = format!("{} of {cells} cells fail: {}", failures.len(), failures.join(" "));
    assert!(verdict(4, failures.is_empty(), start.elapsed(), Duration::from_secs(30), &detail));
}

#[test]
fn criterion_5_representation() {
    let start = Instant::now();
    let mut pass = true;
    let mut detail = Vec::new();
    for (name, d) in representation_inputs() {
        match represent_isoform(&d, &FactorChoice::M3) {
            Ok(r) => {
                assert!(r.report.verified(), "success returned without verification");
                detail.push(format!("{name}: |L| = {} verified", r.lattice.lattice().size()));
            }
            Err(e) => {
                pass = false;
                let size = represent_unverified(&d, &FactorChoice::M3, &Limits::default(), DEFAULT_JI_BOUND)
                    .map(|r| r.lattice.lattice().size())
                    .unwrap_or(0);
                println!("  {name}: |L| = {size}: {e}");
                detail.push(format!("{name}: {e}"));
            }
        }
    }
    assert!(verdict(5, pass, start.elapsed(), Duration::from_secs(300), &detail.join(", ")));
}

#[test]
fn criterion_6_cubic_extensions() {
    let start = Instant::now();
    let mut pass = true;
    let mut detail = Vec::new();
    for (name, k) in cubic_inputs() {
        match cubic_extension(&k, CUBIC_BUDGET) {
            Ok(r) => {
                let rep = &r.report;
                let ok = rep.con_is_boolean
                    && rep.con_atoms == rep.base_ji_congruences
                    && rep.extended == rep.base_congruences;
                pass &= ok;
                detail.push(format!(
                    "{name}: |R| = {}, Con R = B_{}, |Ji Con K| = {}, {}/{} extend",
                    r.product.lattice.size(),
                    rep.con_atoms,
                    rep.base_ji_congruences,
                    rep.extended,
                    rep.base_congruences
                ));
            }
            Err(e) => {
                pass = false;
                detail.push(format!("{name}: {e}"));
            }
        }
    }
    assert!(verdict(6, pass, start.elapsed(), Duration::from_secs(60), &detail.join("; ")));
}

#[test]
fn criterion_7_implication_survey() {
    let start = Instant::now();
    let mut violations = Vec::new();
    for n in 1..=6 {
        let mut ours: Vec<u64> = enumerate_lattices(n).unwrap().iter().map(naive_canonical_form).collect();
        ours.sort_unstable();
        if ours != naive_lattice_forms(n) {
            violations.push(format!("enumerator disagrees with naive generator at n = {n}"));
        }
    }
    let levels = enumerate_up_to(8).unwrap();
    let mut scanned = 0;
    let mut uniform_not_isoform = 0;
    for level in &levels {
        for l in level {
            scanned += 1;
            let c = classify(l).unwrap();
            let seccomp = is_sectionally_complemented(l);
            let label = format!("{:?}", l.covers());
            if c.is_isoform && !c.is_uniform {
                violations.push(format!("isoform not uniform: {label}"));
            }
            if c.is_uniform && !c.is_regular {
                violations.push(format!("uniform not regular: {label}"));
            }
            if seccomp && !c.is_regular {
                violations.push(format!("sectionally complemented not regular: {label}"));
            }
            if c.is_simple && !c.is_isoform {
                violations.push(format!("simple not isoform: {label}"));
            }
            if c.is_uniform && !c.is_isoform {
                uniform_not_isoform += 1;
            }
        }
    }
    let counts: Vec<usize> = levels.iter().map(Vec::len).collect();
    let detail = format!(
        "{scanned} lattices (per size {counts:?}), {} violations, {uniform_not_isoform} uniform but not isoform",
        violations.len()
    );
    for v in &violations {
        println!("  {v}");
    }
    assert_eq!(counts, vec![1, 1, 1, 2, 5, 15, 53, 222]);
    assert!(verdict(7, violations.is_empty(), start.elapsed(), Duration::from_secs(600), &detail));
}

#[test]
fn criterion_8_cpe_sanity() {
    let start = Instant::now();
    let mut pass = true;
    let mut detail = Vec::new();
    for (name, e) in cpe_cases() {
        let r = is_cpe(&e).unwrap();
        let expected_ok = name.starts_with("identity");
        let identity_count = r.extension_counts[0];
        let ok = if expected_ok { r.ok } else { !r.ok && identity_count == 3 };
        pass &= ok;
        detail.push(format!("{name}: cpe = {}, identity extends {identity_count}x", r.ok));
    }
    assert!(verdict(8, pass, start.elapsed(), Duration::from_secs(1), &detail.join(", ")));
}

#[test]
fn criterion_9_congruence_invariants() {
    let start = Instant::now();
    let mut lattices: Vec<(String, FiniteLattice)> = Vec::new();
    for (name, spec) in fixtures().into_iter().chain([("random", random_spec())]) {
        lattices.push((name.to_string(), pruned_product(&spec).unwrap().lattice().clone()));
    }
    let (aa, bb) = nab_grid();
    for (an, a) in &aa {
        lattices.push((an.to_string(), a.clone()));
        for (bn, b) in &bb {
            lattices.push((format!("N({an},{bn})"), n_construction(a, b).unwrap().lattice().clone()));
        }
    }
    for (name, d) in representation_inputs() {
        lattices.push((name.to_string(), d.clone()));
        let r = represent_unverified(&d, &FactorChoice::M3, &Limits::default(), DEFAULT_JI_BOUND).unwrap();
        lattices.push((format!("L for {name}"), r.lattice.lattice().clone()));
    }
    for (name, k) in cubic_inputs() {
        lattices.push((name.to_string(), k.clone()));
        if let Ok(r) = cubic_extension(&k, CUBIC_BUDGET) {
            lattices.push((format!("R({name})"), r.product.lattice.clone()));
        }
    }
    for (name, e) in cpe_cases() {
        lattices.push((format!("{name} target"), e.target().clone()));
    }
    for level in enumerate_up_to(8).unwrap() {
        for l in level {
            lattices.push((format!("{:?}", l.covers()), l));
        }
    }

    let mut violations = Vec::new();
    let mut congruences = 0;
    for (name, l) in &lattices {
        let con = con_lattice(l).unwrap();
        for (i, c) in con.congruences.iter().enumerate() {
            congruences += 1;
            if !c.is_compatible(l) {
                violations.push(format!("{name}: congruence {i} not compatible"));
            }
            if !c.blocks_are_intervals(l) {
                violations.push(format!("{name}: congruence {i} has a non-interval class"));
            }
        }
        if !is_distributive_by_identity(&con.lattice) {
            violations.push(format!("{name}: Con L not distributive"));
        }
    }
    for v in &violations {
        println!("  {v}");
    }
    let detail = format!(
        "{} lattices, {congruences} congruences, {} violations",
        lattices.len(),
        violations.len()
    );
    assert!(verdict(9, violations.is_empty(), start.elapsed(), Duration::from_secs(600), &detail));
}
