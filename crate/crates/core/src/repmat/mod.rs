//! Yang-Baxter matrices, local representations on tensor powers, the Burau
//! representation and flip-built braiding operators.

mod burau;
mod io;
mod operator;
mod yb;

pub use burau::{burau_sigma, BurauForm};
pub use io::{load_yb_matrix, save_yb_matrix, yb_matrix_from_json, yb_matrix_to_json};
pub use operator::OperatorMatrix;
pub use yb::{builtin_hecke_r, flip_matrix, flip_shuffle, rho, rho_hecke, YBMatrix, YbClass};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum RepError {
    #[error("failed to read matrix file: {0}")]
    Io(#[from] std::io::Error),
    #[error("failed to parse matrix file: {0}")]
    Json(String),
    #[error("entry index {0} out of range for dimension {1}")]
    EntryOutOfRange(usize, usize),
    #[error("matrix of class {0:?} is missing its nu parameter")]
    MissingNu(YbClass),
    #[error("Yang-Baxter equation fails on the degree-3 check")]
    YbeFailure,
    #[error("declared class relation fails: {0}")]
    ClassRelationFailure(String),
    #[error("matrix is not invertible")]
    Singular,
    #[error("representation class mismatch: {0}")]
    ClassMismatch(String),
    #[error("operator degree too small: element needs {needed} strands, got {got}")]
    DegreeTooSmall { needed: usize, got: usize },
}
