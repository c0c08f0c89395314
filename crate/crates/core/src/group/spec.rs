//! Group specs (`Z6`, `Z2xZ4`, `D5`, `Q8`, `S4`, `A4`, `file:<path>`) and the
//! JSON table file format.

use std::path::Path;

use serde::{Deserialize, Serialize};

use super::builders::{alternating, cyclic, dihedral, direct_product, quaternion, symmetric};
use super::{FiniteGroup, LoadReport, MAX_ORDER};
use crate::error::{CensusError, Result};

/// On-disk representation of a multiplication table.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GroupFile {
    pub n: usize,
    pub table: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
}

impl GroupFile {
    pub fn from_group(g: &FiniteGroup) -> Self {
        GroupFile { n: g.order(), table: g.rows(), names: Some(g.element_names().to_vec()) }
    }
}

/// Parses a group spec and builds the group.
pub fn build_group(spec: &str) -> Result<FiniteGroup> {
    build_group_with_report(spec).map(|(g, _)| g)
}

pub fn build_group_with_report(spec: &str) -> Result<(FiniteGroup, LoadReport)> {
    let spec = spec.trim();
    if let Some(path) = spec.strip_prefix("file:") {
        return load_group_file(path);
    }
    let parts: Vec<&str> = spec.split('x').collect();
    let factors = parts.iter().map(|p| build_factor(spec, p)).collect::<Result<Vec<_>>>()?;
    let group = if factors.len() == 1 {
        factors.into_iter().next().unwrap()
    } else {
        direct_product(&factors)?
    };
    Ok((group, LoadReport::default()))
}

fn build_factor(spec: &str, factor: &str) -> Result<FiniteGroup> {
    let err = |reason: &str| CensusError::Parse { spec: spec.to_string(), reason: reason.to_string() };
    let mut chars = factor.chars();
    let family = chars.next().ok_or_else(|| err("empty factor"))?;
    let digits = chars.as_str();
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(err(&format!("factor `{factor}` must be a family letter followed by a number")));
    }
    let n: usize = digits.parse().map_err(|_| err("number out of range"))?;
    match family {
        'Z' => {
            if n == 0 || n > MAX_ORDER {
                return Err(err(&format!("cyclic order must be in 1..={MAX_ORDER}")));
            }
            Ok(cyclic(n))
        }
        'D' => dihedral(n).map_err(|e| err(&e.to_string())),
        'Q' if n == 8 => Ok(quaternion()),
        'S' => symmetric(n).map_err(|e| err(&e.to_string())),
        'A' => alternating(n).map_err(|e| err(&e.to_string())),
        _ => Err(err(&format!("unknown group family in `{factor}`"))),
    }
}

/// Loads and validates a JSON group table.
pub fn load_group_file(path: impl AsRef<Path>) -> Result<(FiniteGroup, LoadReport)> {
    let path = path.as_ref();
    let io_err = |reason: String| CensusError::Io { path: path.display().to_string(), reason };
    let text = std::fs::read_to_string(path).map_err(|e| io_err(e.to_string()))?;
    let file: GroupFile = serde_json::from_str(&text).map_err(|e| io_err(e.to_string()))?;
    let name = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_else(|| "file".into());
    parse_group_file(&name, file)
}

pub fn parse_group_file(name: &str, file: GroupFile) -> Result<(FiniteGroup, LoadReport)> {
    if file.table.len() != file.n {
        return Err(CensusError::NotAGroup(format!("declared n = {} but table has {} rows", file.n, file.table.len())));
    }
    FiniteGroup::from_table(name, &file.table, file.names)
}
