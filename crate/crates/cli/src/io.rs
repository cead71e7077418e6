use std::fs;
use std::path::Path;

use isoform_core::{FiniteLattice, Poset};
use serde::{Deserialize, Serialize};

use crate::CliError;

/// On-disk lattice: covers over `0..size`, optionally with coordinate labels
/// and the product edges a pruning removed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub size: usize,
    pub covers: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pruned_edges: Option<Vec<(usize, usize)>>,
}

/// A lattice loaded from disk, re-indexed to the library's normal form.
#[derive(Debug, Clone)]
pub struct Loaded {
    pub name: String,
    pub lattice: FiniteLattice,
    /// `positions[i]` is the normalized index of file element `i`.
    pub positions: Vec<usize>,
    pub labels: Option<Vec<Vec<usize>>>,
    pub pruned_edges: Option<Vec<(usize, usize)>>,
}

impl LatticeFile {
    pub fn from_lattice(
        name: &str,
        l: &FiniteLattice,
        labels: Option<Vec<Vec<usize>>>,
        pruned_edges: Option<Vec<(usize, usize)>>,
    ) -> Self {
        Self {
            name: Some(name.to_string()),
            size: l.size(),
            covers: l.covers().to_vec(),
            labels,
            pruned_edges,
        }
    }

    pub fn into_loaded(self, fallback_name: &str) -> Result<Loaded, CliError> {
        let (lattice, positions) = FiniteLattice::from_covers_with_positions(self.size, &self.covers)
            .map_err(CliError::Input)?;
        let labels = match self.labels {
            Some(labels) if labels.len() != self.size => {
                return Err(CliError::Usage(format!(
                    "{} labels for {} elements",
                    labels.len(),
                    self.size
                )))
            }
            Some(labels) => {
                let mut out = vec![Vec::new(); self.size];
                for (i, l) in labels.into_iter().enumerate() {
                    out[positions[i]] = l;
                }
                Some(out)
            }
            None => None,
        };
        let pruned_edges = match self.pruned_edges {
            Some(edges) => {
                let mut out = Vec::with_capacity(edges.len());
                for (a, b) in edges {
                    if a >= self.size || b >= self.size {
                        return Err(CliError::Usage(format!("pruned edge ({a}, {b}) out of range")));
                    }
                    out.push((positions[a], positions[b]));
                }
                out.sort_unstable();
                Some(out)
            }
            None => None,
        };
        Ok(Loaded {
            name: self.name.unwrap_or_else(|| fallback_name.to_string()),
            lattice,
            positions,
            labels,
            pruned_edges,
        })
    }
}

/// Strict order generators `i < j` on `0..size`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetFile {
    pub size: usize,
    #[serde(default)]
    pub lt: Vec<(usize, usize)>,
}

/// Element map for an embedding: either a bare array or `{"map": [...]}`.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum MapFile {
    Bare(Vec<usize>),
    Wrapped { map: Vec<usize> },
}

impl MapFile {
    pub fn into_vec(self) -> Vec<usize> {
        match self {
            MapFile::Bare(v) | MapFile::Wrapped { map: v } => v,
        }
    }
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| CliError::Usage(format!("cannot parse {}: {e}", path.display())))
}

pub fn read_lattice(path: &Path) -> Result<Loaded, CliError> {
    let file: LatticeFile = read_json(path)?;
    let stem = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    file.into_loaded(&stem)
}

pub fn read_poset(path: &Path) -> Result<Poset, CliError> {
    let file: PosetFile = read_json(path)?;
    if let Some(&(a, b)) = file.lt.iter().find(|&&(a, b)| a >= file.size || b >= file.size) {
        return Err(CliError::Usage(format!("poset relation ({a}, {b}) out of range")));
    }
    Poset::from_lt(file.size, &file.lt).map_err(CliError::Input)
}

pub fn read_map(path: &Path) -> Result<Vec<usize>, CliError> {
    read_json::<MapFile>(path).map(MapFile::into_vec)
}

/// Writes to `path`, or stdout when absent.
pub fn emit(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, text)
            .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}
