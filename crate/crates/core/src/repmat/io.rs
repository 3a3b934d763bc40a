//! JSON interchange format for Yang-Baxter matrices.
//!
//! Schema: `{"dim": N, "class": "hecke"|"bmw"|"generic",
//! "nu": "<rational-function string>" (bmw only), "entries": [{"row": [i,j],
//! "col": [k,l], "value": "<rational-function string>"}]}`; omitted entries
//! are zero and indices are 1-based.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::coeff::RationalFunction;
use crate::matrix::Matrix;

use super::{RepError, YBMatrix, YbClass};

#[derive(Debug, Serialize, Deserialize)]
struct FileEntry {
    row: [usize; 2],
    col: [usize; 2],
    value: RationalFunction,
}

#[derive(Debug, Serialize, Deserialize)]
struct FileMatrix {
    dim: usize,
    class: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    nu: Option<RationalFunction>,
    entries: Vec<FileEntry>,
}

fn class_from_str(s: &str) -> Result<YbClass, RepError> {
    match s {
        "hecke" => Ok(YbClass::Hecke),
        "bmw" => Ok(YbClass::Bmw),
        "generic" => Ok(YbClass::Generic),
        other => Err(RepError::Json(format!("unknown class `{other}`"))),
    }
}

fn class_to_str(c: YbClass) -> &'static str {
    match c {
        YbClass::Hecke => "hecke",
        YbClass::Bmw => "bmw",
        YbClass::Generic => "generic",
    }
}

/// Parse and fully validate a matrix from JSON text.
pub fn yb_matrix_from_json(text: &str) -> Result<YBMatrix, RepError> {
    let file: FileMatrix = serde_json::from_str(text).map_err(|e| RepError::Json(e.to_string()))?;
    let n = file.dim;
    if n == 0 {
        return Err(RepError::Json("dim must be positive".into()));
    }
    let class = class_from_str(&file.class)?;
    let mut mat = Matrix::zeros(n * n, n * n);
    for e in &file.entries {
        for &idx in e.row.iter().chain(e.col.iter()) {
            if idx < 1 || idx > n {
                return Err(RepError::EntryOutOfRange(idx, n));
            }
        }
        let r = (e.row[0] - 1) * n + (e.row[1] - 1);
        let c = (e.col[0] - 1) * n + (e.col[1] - 1);
        mat.set(r, c, e.value.clone());
    }
    YBMatrix::validated(n, class, file.nu, mat)
}

/// Serialize a validated matrix back to JSON text (sparse, 1-based).
pub fn yb_matrix_to_json(m: &YBMatrix) -> String {
    let n = m.local_dim();
    let mut entries = Vec::new();
    for r in 0..n * n {
        for c in 0..n * n {
            let v = m.matrix().get(r, c);
            if !v.is_zero() {
                entries.push(FileEntry {
                    row: [r / n + 1, r % n + 1],
                    col: [c / n + 1, c % n + 1],
                    value: v.clone(),
                });
            }
        }
    }
    let file = FileMatrix {
        dim: n,
        class: class_to_str(m.class()).to_string(),
        nu: m.nu().cloned(),
        entries,
    };
    serde_json::to_string_pretty(&file).expect("serializable")
}

/// Load and validate a matrix from a file; parse errors, Yang-Baxter
/// failures and class-relation failures are reported distinctly.
pub fn load_yb_matrix<P: AsRef<Path>>(path: P) -> Result<YBMatrix, RepError> {
    let text = std::fs::read_to_string(path)?;
    yb_matrix_from_json(&text)
}

/// Write a validated matrix to a file.
pub fn save_yb_matrix<P: AsRef<Path>>(m: &YBMatrix, path: P) -> Result<(), RepError> {
    std::fs::write(path, yb_matrix_to_json(m))?;
    Ok(())
}
