//! The Hecke algebra `H_n(q)` over exact rational functions, in the
//! permutation basis `T_w` (the image of the positive lift of `w`).
//! Multiplication reduces along `T_w T_{s_i} = T_{w s_i}` when the length
//! increases and `T_w T_{s_i} = (q - q^-1) T_w + T_{w s_i}` otherwise.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::braid::{BraidRingElement, Permutation};
use crate::coeff::{q_superfactorial, BigRat, RationalFunction};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HeckeError {
    #[error("strand count mismatch: {0} vs {1}")]
    StrandMismatch(usize, usize),
    #[error("spectral parameter must be nonzero")]
    ZeroParameter,
    #[error("expected {expected} spectral parameters, got {got}")]
    ParameterCount { expected: usize, got: usize },
}

/// Finite `RationalFunction`-linear combination of basis elements `T_w`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeckeElement {
    strands: usize,
    terms: BTreeMap<Permutation, RationalFunction>,
}

impl HeckeElement {
    pub fn zero(strands: usize) -> Self {
        HeckeElement {
            strands,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(strands: usize) -> Self {
        Self::basis(Permutation::identity(strands))
    }

    /// The basis element `T_w`.
    pub fn basis(w: Permutation) -> Self {
        let strands = w.n();
        let mut terms = BTreeMap::new();
        terms.insert(w, RationalFunction::one());
        HeckeElement { strands, terms }
    }

    /// The generator image `T_{s_i}`.
    pub fn generator(strands: usize, i: usize) -> Self {
        Self::basis(Permutation::transposition(strands, i))
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &RationalFunction)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, w: &Permutation) -> RationalFunction {
        self.terms
            .get(w)
            .cloned()
            .unwrap_or_else(RationalFunction::zero)
    }

    fn insert(&mut self, w: Permutation, c: RationalFunction) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
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

    pub fn add(&self, other: &HeckeElement) -> Result<HeckeElement, HeckeError> {
        if self.strands != other.strands {
            return Err(HeckeError::StrandMismatch(self.strands, other.strands));
        }
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.insert(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &HeckeElement) -> Result<HeckeElement, HeckeError> {
        self.add(&other.scale(&-RationalFunction::one()))
    }

    pub fn scale(&self, c: &RationalFunction) -> HeckeElement {
        if c.is_zero() {
            return HeckeElement::zero(self.strands);
        }
        HeckeElement {
            strands: self.strands,
            terms: self.terms.iter().map(|(w, k)| (w.clone(), k * c)).collect(),
        }
    }

    /// Right multiplication by `T_{s_i}`.
    pub fn right_mul_generator(&self, i: usize) -> HeckeElement {
        let delta = delta();
        let s = Permutation::transposition(self.strands, i);
        let mut out = HeckeElement::zero(self.strands);
        for (w, c) in &self.terms {
            let ws = w.compose(&s);
            if w.has_right_descent(i) {
                // length decreases: T_w T_{s_i} = (q - q^-1) T_w + T_{w s_i}
                out.insert(w.clone(), c * &delta);
            }
            out.insert(ws, c.clone());
        }
        out
    }

    /// Left multiplication by `T_{s_i}`.
    pub fn left_mul_generator(&self, i: usize) -> HeckeElement {
        let delta = delta();
        let s = Permutation::transposition(self.strands, i);
        let mut out = HeckeElement::zero(self.strands);
        for (w, c) in &self.terms {
            let sw = s.compose(w);
            if w.left_descents().contains(&i) {
                out.insert(w.clone(), c * &delta);
            }
            out.insert(sw, c.clone());
        }
        out
    }

    /// Right multiplication by the basis element `T_v`.
    pub fn right_mul_basis(&self, v: &Permutation) -> HeckeElement {
        let mut acc = self.clone();
        for &i in &v.canonical_word() {
            acc = acc.right_mul_generator(i as usize);
        }
        acc
    }

    /// Left multiplication by the basis element `T_v`.
    pub fn left_mul_basis(&self, v: &Permutation) -> HeckeElement {
        let mut acc = self.clone();
        for &i in v.canonical_word().iter().rev() {
            acc = acc.left_mul_generator(i as usize);
        }
        acc
    }

    /// `left * self`, folding over the words of the (small) left factor;
    /// cheaper than `multiply` when `self` has many terms.
    pub fn pre_multiply(&self, left: &HeckeElement) -> Result<HeckeElement, HeckeError> {
        if self.strands != left.strands {
            return Err(HeckeError::StrandMismatch(self.strands, left.strands));
        }
        let mut out = HeckeElement::zero(self.strands);
        for (v, d) in &left.terms {
            let part = self.left_mul_basis(v).scale(d);
            out = out.add(&part)?;
        }
        Ok(out)
    }

    pub fn multiply(&self, other: &HeckeElement) -> Result<HeckeElement, HeckeError> {
        if self.strands != other.strands {
            return Err(HeckeError::StrandMismatch(self.strands, other.strands));
        }
        let mut out = HeckeElement::zero(self.strands);
        for (v, d) in &other.terms {
            let part = self.right_mul_basis(v).scale(d);
            out = out.add(&part)?;
        }
        Ok(out)
    }

    /// Apply a map to every coefficient (e.g. the endomorphism `q -> -q^-1`
    /// that turns symmetrizers into antisymmetrizers).
    pub fn map_coefficients<F>(&self, f: F) -> HeckeElement
    where
        F: Fn(&RationalFunction) -> RationalFunction,
    {
        let mut out = HeckeElement::zero(self.strands);
        for (w, c) in &self.terms {
            out.insert(w.clone(), f(c));
        }
        out
    }

    pub fn embed(&self, strands: usize) -> HeckeElement {
        assert!(strands >= self.strands);
        HeckeElement {
            strands,
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.embed(strands), c.clone()))
                .collect(),
        }
    }

    /// Image under `sigma_i -> sigma_{i+l}`; lives on `strands + l` strands.
    pub fn shift(&self, l: usize) -> HeckeElement {
        HeckeElement {
            strands: self.strands + l,
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.shift(l), c.clone()))
                .collect(),
        }
    }

    /// `x^k` by repeated multiplication.
    pub fn pow(&self, k: usize) -> Result<HeckeElement, HeckeError> {
        let mut out = HeckeElement::one(self.strands);
        for _ in 0..k {
            out = out.multiply(self)?;
        }
        Ok(out)
    }
}

/// `q - q^-1`.
pub fn delta() -> RationalFunction {
    RationalFunction::q() - RationalFunction::q().pow(-1)
}

/// Image of a braid ring element under `sigma_i -> T_{s_i}`.
pub fn from_braid(x: &BraidRingElement) -> HeckeElement {
    from_braid_scaled(x, &RationalFunction::one())
}

/// Image of a braid ring element under `sigma_i -> t T_{s_i}`: every word of
/// length `l` picks up `t^l`.  At `t = 0` only the empty word survives.
pub fn from_braid_scaled(x: &BraidRingElement, t: &RationalFunction) -> HeckeElement {
    let n = x.strands().max(1);
    let mut out = HeckeElement::zero(n);
    for (nf, c) in x.terms() {
        if t.is_zero() && nf.len() > 0 {
            continue;
        }
        let mut acc = HeckeElement::one(n);
        for &i in nf.word() {
            acc = acc.right_mul_generator(i as usize);
        }
        let mut scale = RationalFunction::from_rat(BigRat::from_integer(c.clone()));
        if !t.is_one() && nf.len() > 0 {
            scale = scale * t.pow(nf.len() as i64);
        }
        out = out.add(&acc.scale(&scale)).expect("same strand count");
    }
    out
}

/// Baxterized generator
/// `sigma_i(x) = ((x - x^-1)/(q - q^-1)) T_{s_i} + x^-1`, normalized so that
/// `sigma_i(1) = 1`.
pub fn baxterized(
    strands: usize,
    i: usize,
    x: &RationalFunction,
) -> Result<HeckeElement, HeckeError> {
    if x.is_zero() {
        return Err(HeckeError::ZeroParameter);
    }
    let coeff = (x - &x.recip()) / delta();
    let mut out = HeckeElement::one(strands).scale(&x.recip());
    out = out
        .add(&HeckeElement::generator(strands, i).scale(&coeff))
        .expect("same strand count");
    Ok(out)
}

/// The multiplicative symmetrizer word
/// `sSigma_n = (sigma_1(s) ... sigma_{n-1}(s^{n-1})) ... (sigma_1(s))`.
pub fn mult_sigma(n: usize, s: &RationalFunction) -> Result<HeckeElement, HeckeError> {
    assert!(n >= 1);
    let mut acc = HeckeElement::one(n);
    for j in (2..=n).rev() {
        for t in 1..j {
            acc = acc.multiply(&baxterized(n, t, &s.pow(t as i64))?)?;
        }
    }
    Ok(acc)
}

/// The multiplicative shuffle
/// `sSha_{m,n} = (sigma_m(s) ... sigma_{m+n-1}(s^n)) (sigma_{m-1}(s^2) ...) ...
/// (sigma_1(s^m) ... sigma_n(s^{m+n-1}))`.
pub fn mult_shuffle_s(
    m: usize,
    n: usize,
    s: &RationalFunction,
) -> Result<HeckeElement, HeckeError> {
    let strands = (m + n).max(1);
    let mut acc = HeckeElement::one(strands);
    for r in 0..m {
        for t in 1..=n {
            let i = m - r - 1 + t;
            acc = acc.multiply(&baxterized(strands, i, &s.pow((r + t) as i64))?)?;
        }
    }
    Ok(acc)
}

/// The symmetrizer `S_n = (1/[n]_q^$) qSigma_n`; a nonzero idempotent with
/// `sigma_i S_n = S_n sigma_i = q S_n`.
pub fn symmetrizer(n: usize) -> Result<HeckeElement, HeckeError> {
    let sigma = mult_sigma(n, &RationalFunction::q())?;
    Ok(sigma.scale(&q_superfactorial(n).recip()))
}

/// The antisymmetrizer: the symmetrizer seen through `q -> -q^-1`.
pub fn antisymmetrizer(n: usize) -> Result<HeckeElement, HeckeError> {
    Ok(symmetrizer(n)?.map_coefficients(|c| c.flip_q()))
}

/// Image of `Sha_{m,n}` under `sigma_i -> t sigma_i`, projected to the Hecke
/// quotient; `t = q` gives the additive shuffle `sha_{m,n}`.
pub fn additive_shuffle_scaled(m: usize, n: usize, t: &RationalFunction) -> HeckeElement {
    from_braid_scaled(&crate::braid::additive_shuffle(m, n), t)
}

/// Which tilde element to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TildeKind {
    Sigma(usize),
    Shuffle(usize, usize),
}

/// Evaluate a tilde element on explicit spectral parameters, with the
/// trigonometric convention `sigma(x, y) = sigma(x/y)`.
pub fn tilde_eval(kind: TildeKind, xs: &[RationalFunction]) -> Result<HeckeElement, HeckeError> {
    match kind {
        TildeKind::Sigma(m) => {
            if xs.len() != m {
                return Err(HeckeError::ParameterCount {
                    expected: m,
                    got: xs.len(),
                });
            }
            tilde_sigma(xs)
        }
        TildeKind::Shuffle(m, n) => {
            if xs.len() != m + n {
                return Err(HeckeError::ParameterCount {
                    expected: m + n,
                    got: xs.len(),
                });
            }
            tilde_shuffle(m, n, xs)
        }
    }
}

/// `tilde Sigma_m(x_1, ..., x_m) =
/// (sigma_1(x_{m-1}, x_m) ... sigma_{m-1}(x_1, x_m)) ... (sigma_1(x_1, x_2))`.
pub fn tilde_sigma(xs: &[RationalFunction]) -> Result<HeckeElement, HeckeError> {
    let m = xs.len();
    let strands = m.max(1);
    for x in xs {
        if x.is_zero() {
            return Err(HeckeError::ZeroParameter);
        }
    }
    let mut acc = HeckeElement::one(strands);
    for j in (2..=m).rev() {
        for t in 1..j {
            let ratio = &xs[j - t - 1] / &xs[j - 1];
            acc = acc.multiply(&baxterized(strands, t, &ratio)?)?;
        }
    }
    Ok(acc)
}

/// `tilde Sha_{m,n}(x_1, ..., x_{m+n})` by its bracket form; bracket `r`
/// multiplies `sigma_{m-r-1+t}(x_t, x_{m+n-r})` for `t = 1..n`.
pub fn tilde_shuffle(
    m: usize,
    n: usize,
    xs: &[RationalFunction],
) -> Result<HeckeElement, HeckeError> {
    if xs.len() != m + n {
        return Err(HeckeError::ParameterCount {
            expected: m + n,
            got: xs.len(),
        });
    }
    let strands = (m + n).max(1);
    for x in xs {
        if x.is_zero() {
            return Err(HeckeError::ZeroParameter);
        }
    }
    let mut acc = HeckeElement::one(strands);
    for r in 0..m {
        for t in 1..=n {
            let i = m - r - 1 + t;
            let ratio = &xs[t - 1] / &xs[m + n - r - 1];
            acc = acc.multiply(&baxterized(strands, i, &ratio)?)?;
        }
    }
    Ok(acc)
}

/// Basis of `H_n` ordered length-lexicographically on canonical words.
pub fn ordered_basis(n: usize) -> Vec<Permutation> {
    let mut all = Permutation::all(n);
    all.sort_by_key(|w| (w.length(), w.canonical_word()));
    all
}

impl fmt::Display for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut keys: Vec<&Permutation> = self.terms.keys().collect();
        keys.sort_by_key(|w| (w.length(), w.canonical_word()));
        let mut first = true;
        for w in keys {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let c = &self.terms[w];
            let one_line: Vec<String> = w.images().iter().map(|&v| (v + 1).to_string()).collect();
            write!(f, "({}) * T[{}]", c, one_line.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{additive_shuffle, BraidRingElement, PositiveWord};
    use crate::coeff::{q_factorial, q_int};

    fn rf(s: &str) -> RationalFunction {
        RationalFunction::parse(s).unwrap()
    }

    fn braid_word(n: usize, letters: &[u8]) -> BraidRingElement {
        BraidRingElement::from_word(&PositiveWord::new(n, letters.to_vec()).unwrap())
    }

    #[test]
    fn from_braid_examples() {
        // 1 + sigma_1 -> T_e + T_{s_1}
        let x = BraidRingElement::one(2)
            .add(&BraidRingElement::generator(2, 1).unwrap())
            .unwrap();
        let h = from_braid(&x);
        assert_eq!(h.num_terms(), 2);
        assert_eq!(h.coefficient(&Permutation::identity(2)), rf("1"));
        assert_eq!(h.coefficient(&Permutation::transposition(2, 1)), rf("1"));

        // sigma_1 sigma_1 -> (q - q^-1) T_{s_1} + T_e
        let sq = from_braid(&braid_word(2, &[1, 1]));
        assert_eq!(
            sq.coefficient(&Permutation::transposition(2, 1)),
            rf("q - q^-1")
        );
        assert_eq!(sq.coefficient(&Permutation::identity(2)), rf("1"));

        // a reduced word maps to a single basis element
        let w = from_braid(&braid_word(3, &[1, 2, 1]));
        assert_eq!(w.num_terms(), 1);
        assert_eq!(w.coefficient(&Permutation::longest(3)), rf("1"));
    }

    #[test]
    fn multiplication_is_associative_on_samples() {
        let a = from_braid(&braid_word(3, &[1]));
        let b = from_braid(&braid_word(3, &[2, 1]));
        let c = from_braid(&braid_word(3, &[1, 2])).scale(&rf("q - 1"));
        let ab_c = a.multiply(&b).unwrap().multiply(&c).unwrap();
        let a_bc = a.multiply(&b.multiply(&c).unwrap()).unwrap();
        assert_eq!(ab_c, a_bc);
    }

    #[test]
    fn baxterized_examples() {
        assert_eq!(
            baxterized(2, 1, &RationalFunction::one()).unwrap(),
            HeckeElement::one(2)
        );
        let bq = baxterized(2, 1, &RationalFunction::q()).unwrap();
        assert_eq!(bq.coefficient(&Permutation::transposition(2, 1)), rf("1"));
        assert_eq!(bq.coefficient(&Permutation::identity(2)), rf("q^-1"));
        // unitarity at x = q: sigma(q) sigma(q^-1) = 0
        let bqinv = baxterized(2, 1, &RationalFunction::q().recip()).unwrap();
        assert!(bq.multiply(&bqinv).unwrap().is_zero());
        assert!(baxterized(2, 1, &RationalFunction::zero()).is_err());
    }

    #[test]
    fn unitarity_symbolic_in_s() {
        // sigma(x) sigma(x^-1) = 1 - (x - x^-1)^2/(q - q^-1)^2 at x = s
        let s = RationalFunction::s();
        let lhs = baxterized(3, 2, &s)
            .unwrap()
            .multiply(&baxterized(3, 2, &s.recip()).unwrap())
            .unwrap();
        let scalar = RationalFunction::one() - (&s - &s.recip()).pow(2) / delta().pow(2);
        assert_eq!(lhs, HeckeElement::one(3).scale(&scalar));
    }

    #[test]
    fn mult_sigma_examples() {
        assert_eq!(
            mult_sigma(1, &RationalFunction::q()).unwrap(),
            HeckeElement::one(1)
        );
        let m2 = mult_sigma(2, &RationalFunction::q()).unwrap();
        assert_eq!(m2, baxterized(2, 1, &RationalFunction::q()).unwrap());
        // (qSigma_3)^2 = [3]^$ qSigma_3
        let m3 = mult_sigma(3, &RationalFunction::q()).unwrap();
        let sq = m3.multiply(&m3).unwrap();
        assert_eq!(sq, m3.scale(&q_superfactorial(3)));
    }

    #[test]
    fn symmetrizer_examples() {
        assert_eq!(symmetrizer(1).unwrap(), HeckeElement::one(1));
        let s2 = symmetrizer(2).unwrap();
        let expected = baxterized(2, 1, &RationalFunction::q())
            .unwrap()
            .scale(&q_int(2).recip());
        assert_eq!(s2, expected);
        assert_eq!(s2.multiply(&s2).unwrap(), s2);
        let s3 = symmetrizer(3).unwrap();
        assert_eq!(s3.left_mul_generator(1), s3.scale(&RationalFunction::q()));
        assert_eq!(s3.right_mul_generator(2), s3.scale(&RationalFunction::q()));
    }

    #[test]
    fn antisymmetrizer_has_eigenvalue_minus_q_inverse() {
        let a3 = antisymmetrizer(3).unwrap();
        assert_eq!(a3.multiply(&a3).unwrap(), a3);
        assert_eq!(a3.left_mul_generator(2), a3.scale(&rf("-q^-1")));
    }

    #[test]
    fn additive_shuffle_scaled_examples() {
        // t = 0 keeps only the empty word
        assert_eq!(
            additive_shuffle_scaled(2, 2, &RationalFunction::zero()),
            HeckeElement::one(4)
        );
        let h = additive_shuffle_scaled(1, 1, &RationalFunction::q());
        assert_eq!(h.coefficient(&Permutation::identity(2)), rf("1"));
        assert_eq!(h.coefficient(&Permutation::transposition(2, 1)), rf("q"));
        // reca at n = 2: (q^-1/[2]_q) sha_{1,1} S_1 = S_2
        let sha11 = additive_shuffle_scaled(1, 1, &RationalFunction::q());
        let lhs = sha11.scale(&(rf("q^-1") / q_int(2)));
        assert_eq!(lhs, symmetrizer(2).unwrap());
    }

    #[test]
    fn tilde_specializations() {
        // tilde Sigma_2(x1, x2) = sigma_1(x1/x2)
        let xs = [rf("3"), rf("5/2")];
        let t = tilde_eval(TildeKind::Sigma(2), &xs).unwrap();
        assert_eq!(t, baxterized(2, 1, &(&xs[0] / &xs[1])).unwrap());
        // geometric progression gives the one-parameter elements
        let s = rf("7/3");
        for m in 1..=4usize {
            let geo: Vec<RationalFunction> = (0..m).map(|k| s.pow(-(k as i64))).collect();
            assert_eq!(
                tilde_eval(TildeKind::Sigma(m), &geo).unwrap(),
                mult_sigma(m, &s).unwrap(),
                "m = {m}"
            );
        }
        for (m, n) in [(1usize, 1usize), (1, 2), (2, 1), (2, 2)] {
            let mut xs: Vec<RationalFunction> =
                (0..n).map(|t| s.pow(t as i64 + 1 - n as i64)).collect();
            xs.extend((0..m).map(|u| s.pow(u as i64 + 1 - (m + n) as i64)));
            assert_eq!(
                tilde_eval(TildeKind::Shuffle(m, n), &xs).unwrap(),
                mult_shuffle_s(m, n, &s).unwrap(),
                "m = {m}, n = {n}"
            );
        }
    }

    #[test]
    fn mult_shuffle_s_examples() {
        assert_eq!(
            mult_shuffle_s(3, 0, &RationalFunction::q()).unwrap(),
            HeckeElement::one(3)
        );
        assert_eq!(
            mult_shuffle_s(1, 1, &RationalFunction::q()).unwrap(),
            baxterized(2, 1, &RationalFunction::q()).unwrap()
        );
        // ein: qSha_{1,n} S_{n+1} = [n+1]_q! S_{n+1}
        for n in 1..=3usize {
            let sha = mult_shuffle_s(1, n, &RationalFunction::q()).unwrap();
            let s = symmetrizer(n + 1).unwrap();
            assert_eq!(
                sha.multiply(&s).unwrap(),
                s.scale(&q_factorial(n + 1)),
                "n = {n}"
            );
        }
    }

    #[test]
    fn scaled_shuffle_matches_termwise_scaling() {
        // from_braid_scaled scales each basis word by t^length
        let t = rf("s");
        let h = from_braid_scaled(&additive_shuffle(1, 2), &t);
        for (w, c) in h.terms() {
            assert_eq!(*c, t.pow(w.length() as i64), "term {w}");
        }
    }
}
