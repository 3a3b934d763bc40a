//! The positive braid monoid with its Garside (left-greedy) normal form, the
//! integer monoid ring, and the shuffle / symmetrizer elements living in it.
//!
//! All elements handled here are positive, so equality is decided by the
//! normal form alone; no group-level word problem is needed.

mod normal;
mod perm;
mod ring;
mod shuffles;
mod word;

pub use normal::NormalForm;
pub use perm::Permutation;
pub use ring::{BraidRingElement, MirrorKind};
pub use shuffles::{
    additive_shuffle, additive_shuffle_by_second_recurrence, half_twist, lift_symmetrizer,
    mult_shuffle, mult_shuffle_descending, shuffle_permutations, sum_over_permutation_lifts,
    trinomial_shuffle,
};
pub use word::PositiveWord;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("strand count mismatch: {0} vs {1}")]
    StrandMismatch(usize, usize),
    #[error("generator index {index} out of range for {strands} strands")]
    IndexOutOfRange { index: usize, strands: usize },
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}
