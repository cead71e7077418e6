//! Generator expressions.
//!
//! ```text
//! expr   := chain:K | boolean:K | m3 | n5 | PATH.json
//!         | prod(expr, expr) | nab(expr, expr)
//!         | prune(POSETFILE, factor, ...) | represent(PATH) | cubic(PATH)
//! factor := expr | expr@SEPARATOR
//! ```
//!
//! `prune` takes one factor per poset point, or a single factor used at every
//! point. Without `@`, the first separator of the factor is used.

use std::path::Path;

use isoform_core::constructions::{
    cubic_extension_with, n_construction_with, pruned_product_with, represent_isoform_with,
    FactorChoice, PrunedProductSpec, SeparableFactor, DEFAULT_JI_BOUND,
};
use isoform_core::lattice::{boolean, chain, direct_product_capped, m3, n5};
use isoform_core::{FiniteLattice, Limits};

use crate::io::{read_lattice, read_poset};
use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Chain(usize),
    Boolean(usize),
    M3,
    N5,
    File(String),
    Prod(Box<Expr>, Box<Expr>),
    Nab(Box<Expr>, Box<Expr>),
    Prune {
        poset: String,
        factors: Vec<(Expr, Option<usize>)>,
    },
    Represent(String),
    Cubic(String),
}

/// A generated lattice with the metadata written alongside it.
#[derive(Debug, Clone)]
pub struct Generated {
    pub lattice: FiniteLattice,
    pub labels: Option<Vec<Vec<usize>>>,
    pub pruned_edges: Option<Vec<(usize, usize)>>,
}

impl Generated {
    fn plain(lattice: FiniteLattice) -> Self {
        Self {
            lattice,
            labels: None,
            pruned_edges: None,
        }
    }
}

pub fn parse(input: &str) -> Result<Expr, String> {
    let s = input.trim();
    if s.is_empty() {
        return Err("empty expression".into());
    }
    if let Some(open) = s.find('(') {
        if !s.ends_with(')') {
            return Err(format!("missing `)` in `{s}`"));
        }
        let head = s[..open].trim();
        let args = split_args(&s[open + 1..s.len() - 1])?;
        let want = |n: usize| {
            if args.len() == n {
                Ok(())
            } else {
                Err(format!("{head} takes {n} arguments, got {}", args.len()))
            }
        };
        return match head {
            "prod" | "nab" => {
                want(2)?;
                let (a, b) = (Box::new(parse(&args[0])?), Box::new(parse(&args[1])?));
                Ok(if head == "prod" { Expr::Prod(a, b) } else { Expr::Nab(a, b) })
            }
            "prune" => {
                if args.len() < 2 {
                    return Err("prune takes a poset file and at least one factor".into());
                }
                let factors = args[1..].iter().map(|a| parse_factor(a)).collect::<Result<_, _>>()?;
                Ok(Expr::Prune {
                    poset: args[0].clone(),
                    factors,
                })
            }
            "represent" => {
                want(1)?;
                Ok(Expr::Represent(args[0].clone()))
            }
            "cubic" => {
                want(1)?;
                Ok(Expr::Cubic(args[0].clone()))
            }
            other => Err(format!("unknown constructor `{other}`")),
        };
    }
    if s.contains(')') || s.contains(',') {
        return Err(format!("unexpected punctuation in `{s}`"));
    }
    if let Some((name, k)) = s.split_once(':') {
        let k: usize = k
            .trim()
            .parse()
            .map_err(|_| format!("bad parameter in `{s}`"))?;
        return match name.trim() {
            "chain" => Ok(Expr::Chain(k)),
            "boolean" => Ok(Expr::Boolean(k)),
            other => Err(format!("unknown family `{other}`")),
        };
    }
    match s {
        "m3" => Ok(Expr::M3),
        "n5" => Ok(Expr::N5),
        path if path.ends_with(".json") => Ok(Expr::File(path.to_string())),
        other => Err(format!("unknown lattice `{other}`")),
    }
}

fn parse_factor(s: &str) -> Result<(Expr, Option<usize>), String> {
    match s.rsplit_once('@') {
        Some((e, sep)) => {
            let sep = sep
                .trim()
                .parse()
                .map_err(|_| format!("bad separator in `{s}`"))?;
            Ok((parse(e)?, Some(sep)))
        }
        None => Ok((parse(s)?, None)),
    }
}

/// Splits on top-level commas.
fn split_args(s: &str) -> Result<Vec<String>, String> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut current = String::new();
    for c in s.chars() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.checked_sub(1).ok_or("unbalanced `)`")?,
            ',' if depth == 0 => {
                out.push(current.trim().to_string());
                current.clear();
                continue;
            }
            _ => {}
        }
        current.push(c);
    }
    if depth != 0 {
        return Err("unbalanced `(`".into());
    }
    out.push(current.trim().to_string());
    if out.iter().any(String::is_empty) {
        return Err("empty argument".into());
    }
    Ok(out)
}

pub fn eval(expr: &Expr, limits: &Limits, budget: usize) -> Result<Generated, CliError> {
    let lattice_of = |e: &Expr| eval(e, limits, budget).map(|g| g.lattice);
    let built = |r: isoform_core::Result<FiniteLattice>| r.map(Generated::plain).map_err(CliError::Construction);
    match expr {
        Expr::Chain(k) => built(chain(*k)),
        Expr::Boolean(k) => built(boolean(*k)),
        Expr::M3 => Ok(Generated::plain(m3())),
        Expr::N5 => Ok(Generated::plain(n5())),
        Expr::File(path) => Ok(Generated::plain(read_lattice(Path::new(path))?.lattice)),
        Expr::Prod(a, b) => built(direct_product_capped(&lattice_of(a)?, &lattice_of(b)?, limits)),
        Expr::Nab(a, b) => {
            let n = n_construction_with(&lattice_of(a)?, &lattice_of(b)?, limits)
                .map_err(CliError::Construction)?;
            Ok(Generated {
                labels: Some(n.labeled.coords.clone()),
                lattice: n.labeled.lattice,
                pruned_edges: None,
            })
        }
        Expr::Prune { poset, factors } => {
            let poset = read_poset(Path::new(poset))?;
            let mut built_factors = Vec::new();
            for (e, sep) in factors {
                let l = lattice_of(e)?;
                let f = match sep {
                    Some(v) => SeparableFactor::new(l, *v),
                    None => SeparableFactor::first(l),
                }
                .map_err(CliError::Construction)?;
                built_factors.push(f);
            }
            if built_factors.len() == 1 && poset.size() != 1 {
                built_factors = vec![built_factors[0].clone(); poset.size()];
            }
            let spec = PrunedProductSpec::new(poset, built_factors).map_err(CliError::Construction)?;
            let p = pruned_product_with(&spec, limits).map_err(CliError::Construction)?;
            Ok(Generated {
                labels: Some(p.labeled.coords.clone()),
                pruned_edges: Some(p.pruned_edges.clone()),
                lattice: p.labeled.lattice,
            })
        }
        Expr::Represent(path) => {
            let d = read_lattice(Path::new(path))?.lattice;
            let r = represent_isoform_with(&d, &FactorChoice::M3, limits, DEFAULT_JI_BOUND)
                .map_err(CliError::Construction)?;
            Ok(Generated {
                labels: Some(r.lattice.labeled.coords.clone()),
                pruned_edges: Some(r.lattice.pruned_edges.clone()),
                lattice: r.lattice.labeled.lattice,
            })
        }
        Expr::Cubic(path) => {
            let k = read_lattice(Path::new(path))?.lattice;
            let r = cubic_extension_with(&k, budget, limits).map_err(CliError::Construction)?;
            Ok(Generated {
                labels: Some(r.product.coords.clone()),
                lattice: r.product.lattice,
                pruned_edges: None,
            })
        }
    }
}
