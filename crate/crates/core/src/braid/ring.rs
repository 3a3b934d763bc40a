//! Integer linear combinations of positive braids, keyed by normal form.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::coeff::BigInt;

use super::{BraidError, NormalForm, Permutation, PositiveWord};

/// The two (anti)automorphisms of the braid group and their composition:
/// `A` relabels `sigma_i -> sigma_{n-i}`, `B` reverses words, `AB` does both.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MirrorKind {
    A,
    B,
    AB,
}

/// Element of the monoid ring `Z B_n^+`: a finite integer combination of
/// positive braids in normal form.  No zero coefficients are stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidRingElement {
    strands: usize,
    terms: BTreeMap<NormalForm, BigInt>,
}

impl BraidRingElement {
    pub fn zero(strands: usize) -> Self {
        BraidRingElement {
            strands,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(strands: usize) -> Self {
        Self::from_normal_form(NormalForm::identity(strands))
    }

    pub fn generator(strands: usize, i: usize) -> Result<Self, BraidError> {
        let w = PositiveWord::generator(strands, i)?;
        Ok(Self::from_word(&w))
    }

    pub fn from_word(w: &PositiveWord) -> Self {
        Self::from_normal_form(NormalForm::of_word(w))
    }

    pub fn from_normal_form(nf: NormalForm) -> Self {
        let strands = nf.strands();
        let mut terms = BTreeMap::new();
        terms.insert(nf, BigInt::one());
        BraidRingElement { strands, terms }
    }

    /// The permutation-braid lift of `w` as a ring element.
    pub fn permutation_lift(p: &Permutation) -> Self {
        Self::from_normal_form(NormalForm::of_permutation(p))
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn terms(&self) -> impl Iterator<Item = (&NormalForm, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, nf: &NormalForm) -> BigInt {
        self.terms.get(nf).cloned().unwrap_or_else(BigInt::zero)
    }

    /// The unique normal form of a single-term element with coefficient 1.
    pub fn as_single_word(&self) -> Option<&NormalForm> {
        if self.terms.len() != 1 {
            return None;
        }
        let (nf, c) = self.terms.iter().next().unwrap();
        if c.is_one() {
            Some(nf)
        } else {
            None
        }
    }

    fn insert(&mut self, nf: NormalForm, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(nf) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &BraidRingElement) -> Result<BraidRingElement, BraidError> {
        if self.strands != other.strands {
            return Err(BraidError::StrandMismatch(self.strands, other.strands));
        }
        let mut out = self.clone();
        for (nf, c) in &other.terms {
            out.insert(nf.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &BraidRingElement) -> Result<BraidRingElement, BraidError> {
        if self.strands != other.strands {
            return Err(BraidError::StrandMismatch(self.strands, other.strands));
        }
        let mut out = self.clone();
        for (nf, c) in &other.terms {
            out.insert(nf.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigInt) -> BraidRingElement {
        if c.is_zero() {
            return BraidRingElement::zero(self.strands);
        }
        BraidRingElement {
            strands: self.strands,
            terms: self
                .terms
                .iter()
                .map(|(nf, k)| (nf.clone(), k * c))
                .collect(),
        }
    }

    /// Ring product; every concatenated word is renormalized.
    pub fn multiply(&self, other: &BraidRingElement) -> Result<BraidRingElement, BraidError> {
        if self.strands != other.strands {
            return Err(BraidError::StrandMismatch(self.strands, other.strands));
        }
        let mut out = BraidRingElement::zero(self.strands);
        for (nf1, c1) in &self.terms {
            for (nf2, c2) in &other.terms {
                out.insert(nf1.concat(nf2), c1 * c2);
            }
        }
        Ok(out)
    }

    /// Inclusion `Z B_n^+ -> Z B_m^+` for `m >= n` (add idle strands).
    pub fn embed(&self, strands: usize) -> BraidRingElement {
        assert!(strands >= self.strands);
        BraidRingElement {
            strands,
            terms: self
                .terms
                .iter()
                .map(|(nf, c)| (nf.embed(strands), c.clone()))
                .collect(),
        }
    }

    /// Image under the shift endomorphism `sigma_i -> sigma_{i+l}`; the
    /// result lives on `strands + l` strands.
    pub fn shift(&self, l: usize) -> BraidRingElement {
        self.shift_embedded(l, self.strands + l)
    }

    /// Shift by `l` directly onto `strands` strands; useful when the source
    /// carries idle strands that would otherwise overflow the target.
    pub fn shift_embedded(&self, l: usize, strands: usize) -> BraidRingElement {
        BraidRingElement {
            strands,
            terms: self
                .terms
                .iter()
                .map(|(nf, c)| (nf.shift_embedded(l, strands), c.clone()))
                .collect(),
        }
    }

    /// Apply one of the mirror (anti)automorphisms termwise.
    pub fn mirror(&self, kind: MirrorKind) -> BraidRingElement {
        let n = self.strands;
        let mut out = BraidRingElement::zero(n);
        for (nf, c) in &self.terms {
            let word = nf.word();
            let new_word: Vec<u8> = match kind {
                // sigma_i -> sigma_{n-i}
                MirrorKind::A => word.iter().map(|&i| (n as u8) - i).collect(),
                // reverse the word
                MirrorKind::B => word.iter().rev().copied().collect(),
                MirrorKind::AB => word.iter().rev().map(|&i| (n as u8) - i).collect(),
            };
            let w = PositiveWord::new(n, new_word).expect("mirrored indices stay in range");
            out.insert(NormalForm::of_word(&w), c.clone());
        }
        out
    }

    /// Terms of maximal word length (the leading part for `t -> infinity`
    /// under `sigma_i -> t sigma_i`).
    pub fn top_length_part(&self) -> BraidRingElement {
        let max_len = self.terms.keys().map(|nf| nf.len()).max().unwrap_or(0);
        BraidRingElement {
            strands: self.strands,
            terms: self
                .terms
                .iter()
                .filter(|(nf, _)| nf.len() == max_len)
                .map(|(nf, c)| (nf.clone(), c.clone()))
                .collect(),
        }
    }
}

impl fmt::Display for BraidRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (nf, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c} * {nf}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gen(n: usize, i: usize) -> BraidRingElement {
        BraidRingElement::generator(n, i).unwrap()
    }

    fn word(n: usize, letters: &[u8]) -> BraidRingElement {
        BraidRingElement::from_word(&PositiveWord::new(n, letters.to_vec()).unwrap())
    }

    #[test]
    fn one_is_neutral() {
        let x = word(3, &[1, 2]).add(&gen(3, 1)).unwrap();
        assert_eq!(BraidRingElement::one(3).multiply(&x).unwrap(), x);
        assert_eq!(x.multiply(&BraidRingElement::one(3)).unwrap(), x);
    }

    #[test]
    fn square_of_one_plus_sigma() {
        // (1 + s1)^2 = 1 + 2 s1 + s1 s1
        let x = BraidRingElement::one(2).add(&gen(2, 1)).unwrap();
        let sq = x.multiply(&x).unwrap();
        assert_eq!(sq.num_terms(), 3);
        assert_eq!(sq.coefficient(&NormalForm::identity(2)), BigInt::from(1));
        let s1 = NormalForm::of_word(&PositiveWord::new(2, vec![1]).unwrap());
        let s1s1 = NormalForm::of_word(&PositiveWord::new(2, vec![1, 1]).unwrap());
        assert_eq!(sq.coefficient(&s1), BigInt::from(2));
        assert_eq!(sq.coefficient(&s1s1), BigInt::from(1));
        assert_eq!(s1s1.factors().len(), 2);
    }

    #[test]
    fn strand_mismatch_is_an_error() {
        let a = BraidRingElement::one(2);
        let b = BraidRingElement::one(3);
        assert!(a.multiply(&b).is_err());
        assert!(a.add(&b).is_err());
    }

    #[test]
    fn shift_examples() {
        // sigma_1 shifted by 2 is sigma_3
        let x = gen(2, 1).shift(2);
        assert_eq!(x, gen(4, 3));
        // 1 shifted is 1
        assert_eq!(BraidRingElement::one(1).shift(5), BraidRingElement::one(6));
        // (1 + sigma_1) shifted by 1 is 1 + sigma_2
        let y = BraidRingElement::one(2).add(&gen(2, 1)).unwrap().shift(1);
        assert_eq!(y, BraidRingElement::one(3).add(&gen(3, 2)).unwrap());
    }

    #[test]
    fn mirror_examples() {
        // a(sigma_1) = sigma_2 in B_3
        assert_eq!(gen(3, 1).mirror(MirrorKind::A), gen(3, 2));
        // b(sigma_1 sigma_2) = sigma_2 sigma_1
        assert_eq!(word(3, &[1, 2]).mirror(MirrorKind::B), word(3, &[2, 1]));
        // the half twist is invariant under ab
        let d3 = word(3, &[1, 2, 1]);
        assert_eq!(d3.mirror(MirrorKind::AB), d3);
        // b is an antiautomorphism: b(xy) = b(y) b(x)
        let x = word(4, &[1, 2]);
        let y = word(4, &[3, 1]);
        assert_eq!(
            x.multiply(&y).unwrap().mirror(MirrorKind::B),
            y.mirror(MirrorKind::B)
                .multiply(&x.mirror(MirrorKind::B))
                .unwrap()
        );
    }

    #[test]
    fn embed_then_multiply() {
        let a = word(2, &[1]).embed(3);
        let b = word(3, &[2]);
        assert_eq!(a.multiply(&b).unwrap(), word(3, &[1, 2]));
    }
}
