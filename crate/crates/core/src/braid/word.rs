//! Positive braid words: finite sequences of Artin generators `sigma_i`.

use std::fmt;

use super::{BraidError, Permutation};

/// A word in the positive generators of the braid monoid on `n` strands.
/// Letters are 1-based generator indices (`i` stands for `sigma_i`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PositiveWord {
    strands: usize,
    letters: Vec<u8>,
}

impl PositiveWord {
    pub fn identity(strands: usize) -> Self {
        PositiveWord {
            strands,
            letters: Vec::new(),
        }
    }

    pub fn new(strands: usize, letters: Vec<u8>) -> Result<Self, BraidError> {
        for &l in &letters {
            if l == 0 || l as usize >= strands {
                return Err(BraidError::IndexOutOfRange {
                    index: l as usize,
                    strands,
                });
            }
        }
        Ok(PositiveWord { strands, letters })
    }

    pub fn generator(strands: usize, i: usize) -> Result<Self, BraidError> {
        Self::new(strands, vec![i as u8])
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &PositiveWord) -> Result<Self, BraidError> {
        if self.strands != other.strands {
            return Err(BraidError::StrandMismatch(self.strands, other.strands));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(PositiveWord {
            strands: self.strands,
            letters,
        })
    }

    /// The underlying permutation (image in the symmetric group).
    pub fn permutation(&self) -> Permutation {
        let mut p = Permutation::identity(self.strands);
        for &l in &self.letters {
            p = p.compose(&Permutation::transposition(self.strands, l as usize));
        }
        p
    }
}

impl fmt::Display for PositiveWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "e");
        }
        let parts: Vec<String> = self.letters.iter().map(|l| format!("s{l}")).collect();
        write!(f, "{}", parts.join("."))
    }
}
