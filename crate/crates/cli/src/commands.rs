use std::path::Path;

use isoform_core::congruence::{
    check_properties_pq, classify_con, con_lattice_with, is_algebraically_isoform_with,
    is_congruence_permutable, is_cpe_with, AlgebraicIsoform, Classification, ConLattice, Property,
};
use isoform_core::constructions::enumerate_up_to;
use isoform_core::lattice::{find_sublattice_embedding, m3, n5, structure_report};
use isoform_core::{Embedding, FiniteLattice, Limits};
use serde_json::json;

use crate::io::{read_lattice, read_map, to_json, LatticeFile, Loaded};
use crate::report::{Check, Report};
use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckKind {
    Regular,
    Uniform,
    Isoform,
    Simple,
    Permutable,
    AlgIsoform,
    Pq,
    Distributive,
    Seccomp,
}

impl CheckKind {
    pub const ALL: [CheckKind; 9] = [
        CheckKind::Regular,
        CheckKind::Uniform,
        CheckKind::Isoform,
        CheckKind::Simple,
        CheckKind::Permutable,
        CheckKind::AlgIsoform,
        CheckKind::Pq,
        CheckKind::Distributive,
        CheckKind::Seccomp,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckKind::Regular => "regular",
            CheckKind::Uniform => "uniform",
            CheckKind::Isoform => "isoform",
            CheckKind::Simple => "simple",
            CheckKind::Permutable => "permutable",
            CheckKind::AlgIsoform => "alg-isoform",
            CheckKind::Pq => "pq",
            CheckKind::Distributive => "distributive",
            CheckKind::Seccomp => "seccomp",
        }
    }
}

/// Lazily computed congruence data shared between checks.
struct Context<'a> {
    l: &'a FiniteLattice,
    limits: &'a Limits,
    con: Option<ConLattice>,
    classification: Option<Classification>,
}

impl<'a> Context<'a> {
    fn con(&mut self) -> Result<&ConLattice, CliError> {
        if self.con.is_none() {
            self.con = Some(con_lattice_with(self.l, self.limits).map_err(CliError::Input)?);
        }
        Ok(self.con.as_ref().expect("just computed"))
    }

    fn classification(&mut self) -> Result<Classification, CliError> {
        if self.classification.is_none() {
            let c = classify_con(self.con()?).map_err(CliError::Input)?;
            self.classification = Some(c);
        }
        Ok(self.classification.clone().expect("just computed"))
    }
}

/// Runs the checks in order. On a cap or input error the checks completed so
/// far are returned with the error.
pub fn check(loaded: &Loaded, kinds: &[CheckKind], limits: &Limits) -> (Report, Option<CliError>) {
    let mut report = Report::new(&loaded.name);
    let mut ctx = Context {
        l: &loaded.lattice,
        limits,
        con: None,
        classification: None,
    };
    for &kind in kinds {
        match run_check(&mut ctx, kind) {
            Ok(c) => report.checks.push(c),
            Err(e) => return (report, Some(e)),
        }
    }
    (report, None)
}

fn run_check(ctx: &mut Context, kind: CheckKind) -> Result<Check, CliError> {
    let name = kind.name();
    let l = ctx.l;
    match kind {
        CheckKind::Regular | CheckKind::Uniform | CheckKind::Isoform => {
            let c = ctx.classification()?;
            let (ok, property) = match kind {
                CheckKind::Regular => (c.is_regular, Property::Regular),
                CheckKind::Uniform => (c.is_uniform, Property::Uniform),
                _ => (c.is_isoform, Property::Isoform),
            };
            let con = ctx.con()?;
            Ok(Check::from_bool(name, ok, || {
                let v = c
                    .witnesses
                    .iter()
                    .find(|v| v.property == property)
                    .expect("failing property has a witness");
                format!(
                    "congruence {} {:?}: {}",
                    v.congruence, con.congruences[v.congruence], v.detail
                )
            }))
        }
        CheckKind::Simple => {
            let con = ctx.con()?;
            Ok(Check::from_bool(name, con.is_simple(), || {
                if l.size() < 2 {
                    "a one-element lattice is not simple".to_string()
                } else {
                    format!("proper congruence {:?}", con.congruences[1])
                }
            }))
        }
        CheckKind::Permutable => {
            let con = ctx.con()?;
            let p = is_congruence_permutable(con);
            Ok(Check::from_bool(name, p.permutable, || {
                let w = p.witness.expect("failure has a witness");
                format!(
                    "θ = {:?}, φ = {:?}: {} θ∘φ {} holds but {} φ∘θ {} does not",
                    con.congruences[w.theta], con.congruences[w.phi], w.a, w.b, w.a, w.b
                )
            }))
        }
        CheckKind::AlgIsoform => {
            let limits = ctx.limits;
            let con = ctx.con()?;
            match is_algebraically_isoform_with(con, limits).map_err(CliError::Input)? {
                AlgebraicIsoform::Isoform { .. } => Ok(Check::pass(name)),
                AlgebraicIsoform::NotIsoform {
                    congruence,
                    element,
                    reason,
                } => Ok(Check::fail(
                    name,
                    format!("congruence {:?}, element {element}: {reason}", con.congruences[congruence]),
                )),
                AlgebraicIsoform::Inconclusive { reason, .. } => Ok(Check::inconclusive(name, reason)),
            }
        }
        CheckKind::Pq => {
            let con = ctx.con()?;
            let r = check_properties_pq(con).map_err(CliError::Input)?;
            Ok(Check::from_bool(name, r.p && r.q, || {
                if let Some(t) = r.p_witness {
                    format!("(P) fails: {:?} is not generated by an atom", con.congruences[t])
                } else {
                    let fam: Vec<_> = r
                        .q_witness
                        .unwrap_or_default()
                        .into_iter()
                        .map(|t| &con.congruences[t])
                        .collect();
                    format!("(Q) fails for {fam:?}")
                }
            }))
        }
        CheckKind::Distributive => {
            let s = structure_report(l);
            Ok(Check::from_bool(name, s.is_distributive, || {
                for (pattern, label) in [(m3(), "M3"), (n5(), "N5")] {
                    if let Some(map) = find_sublattice_embedding(&pattern, l) {
                        return format!("sublattice {label} on elements {map:?}");
                    }
                }
                "distributive law fails".to_string()
            }))
        }
        CheckKind::Seccomp => {
            let s = structure_report(l);
            Ok(Check::from_bool(name, s.is_sectionally_complemented, || {
                match uncomplemented_in_ideal(l) {
                    Some((b, x)) => format!("{x} has no complement in [0, {b}]"),
                    None => "not sectionally complemented".to_string(),
                }
            }))
        }
    }
}

fn uncomplemented_in_ideal(l: &FiniteLattice) -> Option<(usize, usize)> {
    for b in l.elements() {
        let ideal: Vec<usize> = l.down_set(b).iter().collect();
        for &x in &ideal {
            let has = ideal
                .iter()
                .any(|&y| l.meet(x, y) == l.bottom() && l.join(x, y) == b);
            if !has {
                return Some((b, x));
            }
        }
    }
    None
}

/// Congruence lattice summary, optionally exporting `Con L` as a lattice file.
pub fn con(loaded: &Loaded, export: Option<&Path>, limits: &Limits) -> Result<Report, CliError> {
    let l = &loaded.lattice;
    let con = con_lattice_with(l, limits).map_err(CliError::Input)?;
    let mut ji = Vec::new();
    for &t in &con.ji_indices {
        let pair = l
            .covers()
            .iter()
            .copied()
            .find(|&(a, b)| con.principal_index(a, b) == t)
            .expect("join-irreducible congruences are generated by a cover");
        ji.push(json!({
            "index": t,
            "pair": [pair.0, pair.1],
            "blocks": con.congruences[t].blocks(),
        }));
    }
    let mut report = Report::new(&loaded.name);
    report.details = json!({
        "size": l.size(),
        "congruences": con.len(),
        "join_irreducible": ji,
        "simple": con.is_simple(),
    });
    if let Some(path) = export {
        let file = LatticeFile::from_lattice(&format!("Con {}", loaded.name), &con.lattice, None, None);
        crate::io::emit(Some(path), &to_json(&file))?;
    }
    Ok(report)
}

pub fn cpe(k_path: &Path, l_path: &Path, map_path: &Path, limits: &Limits) -> Result<Report, CliError> {
    let k = read_lattice(k_path)?;
    let l = read_lattice(l_path)?;
    let raw = read_map(map_path)?;
    if raw.len() != k.lattice.size() {
        return Err(CliError::Input(isoform_core::Error::NotAnEmbedding(format!(
            "map has {} entries for a source of size {}",
            raw.len(),
            k.lattice.size()
        ))));
    }
    let mut map = vec![0; raw.len()];
    for (i, &y) in raw.iter().enumerate() {
        if y >= l.lattice.size() {
            return Err(CliError::Input(isoform_core::Error::NotAnEmbedding(format!(
                "image {y} outside target of size {}",
                l.lattice.size()
            ))));
        }
        map[k.positions[i]] = l.positions[y];
    }
    let e = Embedding::new(k.lattice.clone(), l.lattice.clone(), map).map_err(CliError::Input)?;
    let r = is_cpe_with(&e, limits).map_err(CliError::Input)?;
    let mut report = Report::new(&format!("{} -> {}", k.name, l.name));
    report.checks.push(Check::from_bool("cpe", r.ok, || {
        let (i, c) = r
            .extension_counts
            .iter()
            .enumerate()
            .find(|(_, &c)| c != 1)
            .expect("failure has a congruence without a unique extension");
        format!("congruence {i} {:?} has {c} extensions", r.source_con.congruences[i])
    }));
    report.details = json!({
        "extension_counts": r.extension_counts,
        "source_congruences": r.source_con.len(),
        "target_congruences": r.target_con.len(),
    });
    Ok(report)
}

/// Scans every lattice with at most `max_n` elements for violations of the
/// implications between the class properties.
pub fn survey(max_n: usize, limits: &Limits) -> Result<Report, CliError> {
    if max_n == 0 {
        return Err(CliError::Usage("survey needs a size of at least 1".into()));
    }
    let levels = enumerate_up_to(max_n).map_err(CliError::Input)?;
    let implications: [(&str, fn(&Row) -> bool); 4] = [
        ("isoform => uniform", |r| !r.isoform || r.uniform),
        ("uniform => regular", |r| !r.uniform || r.regular),
        ("seccomp => regular", |r| !r.seccomp || r.regular),
        ("simple => isoform", |r| !r.simple || r.isoform),
    ];
    let mut first_violation: [Option<String>; 4] = Default::default();
    let mut table = Vec::new();
    let mut uniform_not_isoform = Vec::new();
    for (i, level) in levels.iter().enumerate() {
        let mut counts = [0usize; 7];
        for l in level {
            let s = structure_report(l);
            let con = con_lattice_with(l, limits).map_err(CliError::Input)?;
            let c = classify_con(&con).map_err(CliError::Input)?;
            let row = Row {
                regular: c.is_regular,
                uniform: c.is_uniform,
                isoform: c.is_isoform,
                simple: c.is_simple,
                seccomp: s.is_sectionally_complemented,
            };
            for (k, flag) in [
                s.is_distributive,
                s.is_modular,
                row.seccomp,
                row.regular,
                row.uniform,
                row.isoform,
                row.simple,
            ]
            .into_iter()
            .enumerate()
            {
                counts[k] += usize::from(flag);
            }
            for (slot, (_, holds)) in first_violation.iter_mut().zip(&implications) {
                if slot.is_none() && !holds(&row) {
                    *slot = Some(format!("covers {:?}", l.covers()));
                }
            }
            if row.uniform && !row.isoform {
                uniform_not_isoform.push(l.covers().to_vec());
            }
        }
        table.push(json!({
            "size": i + 1,
            "lattices": level.len(),
            "distributive": counts[0],
            "modular": counts[1],
            "sectionally_complemented": counts[2],
            "regular": counts[3],
            "uniform": counts[4],
            "isoform": counts[5],
            "simple": counts[6],
        }));
    }
    let mut report = Report::new(&format!("all lattices with at most {max_n} elements"));
    for ((name, _), v) in implications.iter().zip(first_violation) {
        report.checks.push(match v {
            None => Check::pass(name),
            Some(w) => Check::fail(name, w),
        });
    }
    report.details = json!({
        "scanned": levels.iter().map(Vec::len).sum::<usize>(),
        "by_size": table,
        "uniform_not_isoform": uniform_not_isoform,
    });
    Ok(report)
}

struct Row {
    regular: bool,
    uniform: bool,
    isoform: bool,
    simple: bool,
    seccomp: bool,
}
