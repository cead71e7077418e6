use std::fmt::Write;

use crate::io::Loaded;
use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum LabelMode {
    Index,
    Coords,
}

/// Hasse diagram in DOT, bottom at the bottom, one rank per height.
pub fn export(loaded: &Loaded, show_pruned: bool, labels: LabelMode) -> Result<String, CliError> {
    let l = &loaded.lattice;
    if show_pruned && loaded.pruned_edges.is_none() {
        return Err(CliError::Usage(format!(
            "{} carries no pruned-edge list",
            loaded.name
        )));
    }
    if labels == LabelMode::Coords && loaded.labels.is_none() {
        return Err(CliError::Usage(format!("{} carries no coordinate labels", loaded.name)));
    }

    let mut out = String::new();
    writeln!(out, "digraph {:?} {{", loaded.name).unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  node [shape=circle];").unwrap();
    let max_height = l.elements().map(|x| l.height(x)).max().unwrap_or(0);
    for h in 0..=max_height {
        let row: Vec<String> = l
            .elements()
            .filter(|&x| l.height(x) == h)
            .map(|x| x.to_string())
            .collect();
        writeln!(out, "  {{ rank=same; {}; }}", row.join("; ")).unwrap();
    }
    for x in l.elements() {
        let label = match (labels, &loaded.labels) {
            (LabelMode::Coords, Some(coords)) => {
                let parts: Vec<String> = coords[x].iter().map(|c| c.to_string()).collect();
                format!("({})", parts.join(","))
            }
            _ => x.to_string(),
        };
        writeln!(out, "  {x} [label={label:?}];").unwrap();
    }
    for &(a, b) in l.covers() {
        writeln!(out, "  {a} -> {b};").unwrap();
    }
    if show_pruned {
        for &(a, b) in loaded.pruned_edges.as_deref().unwrap_or_default() {
            writeln!(out, "  {a} -> {b} [style=dashed];").unwrap();
        }
    }
    out.push_str("}\n");
    Ok(out)
}
