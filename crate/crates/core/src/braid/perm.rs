//! Permutations of `{0..n-1}` in one-line notation.  They index both the
//! simple factors of braid normal forms and the basis of the Hecke algebra.

use std::fmt;

/// A bijection of `{0..n-1}`; `images[i]` is the image of `i`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n as u8).collect(),
        }
    }

    /// Build from one-line images, checking bijectivity.
    pub fn from_images(images: Vec<u8>) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if (v as usize) >= n || seen[v as usize] {
                return None;
            }
            seen[v as usize] = true;
        }
        Some(Permutation { images })
    }

    /// The adjacent transposition `s_i` (1-based generator index) in `S_n`.
    pub fn transposition(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i < n, "generator s_{i} needs 1 <= i < {n}");
        let mut images: Vec<u8> = (0..n as u8).collect();
        images.swap(i - 1, i);
        Permutation { images }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v as usize)
    }

    /// Function composition: `(a.compose(b))(i) = a(b(i))`.  Folding a braid
    /// word left to right with `compose` on the right realizes concatenation:
    /// `perm(w . s_i) = perm(w).compose(s_i)`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n());
        Permutation {
            images: other.images.iter().map(|&i| self.images[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u8; self.n()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v as usize] = i as u8;
        }
        Permutation { images }
    }

    /// Coxeter length = number of inversions.
    pub fn length(&self) -> usize {
        let mut l = 0;
        for i in 0..self.n() {
            for j in i + 1..self.n() {
                if self.images[i] > self.images[j] {
                    l += 1;
                }
            }
        }
        l
    }

    /// `i` (1-based) with `len(s_i * w) < len(w)`, i.e. value `i-1` occurs
    /// after value `i` in one-line notation.
    pub fn left_descents(&self) -> Vec<usize> {
        let inv = self.inverse();
        (1..self.n())
            .filter(|&i| inv.images[i - 1] > inv.images[i])
            .collect()
    }

    /// `i` (1-based) with `len(w * s_i) < len(w)`, i.e. a descent of the
    /// one-line notation at position `i`.
    pub fn right_descents(&self) -> Vec<usize> {
        (1..self.n())
            .filter(|&i| self.images[i - 1] > self.images[i])
            .collect()
    }

    pub fn has_right_descent(&self, i: usize) -> bool {
        self.images[i - 1] > self.images[i]
    }

    /// Lexicographically smallest reduced word (1-based generator indices):
    /// repeatedly strip the smallest left descent.
    pub fn canonical_word(&self) -> Vec<u8> {
        let mut word = Vec::with_capacity(self.length());
        let mut v = self.clone();
        loop {
            let ds = v.left_descents();
            match ds.first() {
                None => return word,
                Some(&i) => {
                    word.push(i as u8);
                    // v <- s_i * v : swap the values i-1 and i.
                    let mut images = v.images;
                    for x in images.iter_mut() {
                        if *x as usize == i - 1 {
                            *x = i as u8;
                        } else if *x as usize == i {
                            *x = (i - 1) as u8;
                        }
                    }
                    v = Permutation { images };
                }
            }
        }
    }

    /// The longest element `w0` (one-line `n-1, ..., 0`).
    pub fn longest(n: usize) -> Self {
        Permutation {
            images: (0..n as u8).rev().collect(),
        }
    }

    /// Extend with fixed points up to `n` strands.
    pub fn embed(&self, n: usize) -> Permutation {
        assert!(n >= self.n());
        let mut images = self.images.clone();
        images.extend(self.n() as u8..n as u8);
        Permutation { images }
    }

    /// Shift every point up by `l`, fixing the first `l` points.
    pub fn shift(&self, l: usize) -> Permutation {
        let mut images: Vec<u8> = (0..l as u8).collect();
        images.extend(self.images.iter().map(|&v| v + l as u8));
        Permutation { images }
    }

    /// All permutations of `S_n` (n! of them).
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = vec![Permutation::identity(0)];
        for k in 1..=n {
            let mut next = Vec::with_capacity(out.len() * k);
            for p in &out {
                for pos in 0..k {
                    let mut images: Vec<u8> = p.images.clone();
                    images.insert(pos, (k - 1) as u8);
                    next.push(Permutation { images });
                }
            }
            out = next;
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // One-line notation, 1-based.
        let parts: Vec<String> = self.images.iter().map(|&v| (v + 1).to_string()).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_convention_matches_words() {
        // sigma_1 sigma_2 on 3 strands is the cycle [2 3 1] (1-based display).
        let s1 = Permutation::transposition(3, 1);
        let s2 = Permutation::transposition(3, 2);
        let w = s1.compose(&s2);
        assert_eq!(w.images(), &[1, 2, 0]);
        assert_eq!(w.length(), 2);
        assert_eq!(w.canonical_word(), vec![1, 2]);
    }

    #[test]
    fn descents() {
        let s1 = Permutation::transposition(3, 1);
        assert_eq!(s1.left_descents(), vec![1]);
        assert_eq!(s1.right_descents(), vec![1]);
        let w0 = Permutation::longest(3);
        assert_eq!(w0.left_descents(), vec![1, 2]);
        assert_eq!(w0.right_descents(), vec![1, 2]);
        assert_eq!(w0.length(), 3);
        assert_eq!(w0.canonical_word(), vec![1, 2, 1]);
    }

    #[test]
    fn canonical_word_reconstructs() {
        for p in Permutation::all(5) {
            let mut acc = Permutation::identity(5);
            for &i in &p.canonical_word() {
                acc = acc.compose(&Permutation::transposition(5, i as usize));
            }
            assert_eq!(acc, p);
            assert_eq!(p.canonical_word().len(), p.length());
        }
    }

    #[test]
    fn inverse_and_embed() {
        for p in Permutation::all(4) {
            assert!(p.compose(&p.inverse()).is_identity());
            assert_eq!(p.embed(6).length(), p.length());
            assert_eq!(p.shift(2).length(), p.length());
        }
    }
}
