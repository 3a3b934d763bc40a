//! Validated Yang-Baxter matrices and the local representations they induce.

use crate::braid::BraidRingElement;
use crate::coeff::RationalFunction;
use crate::hecke::{delta, HeckeElement};
use crate::matrix::Matrix;

use super::{OperatorMatrix, RepError};

/// Declared algebra class of a Yang-Baxter matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum YbClass {
    Hecke,
    Bmw,
    Generic,
}

/// A braid-form Yang-Baxter matrix on `V tensor V`, validated on
/// construction: the degree-3 braid relation always, plus the declared
/// class relations (Hecke quadratic, or the BMW tangle relations).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YBMatrix {
    local_dim: usize,
    class: YbClass,
    nu: Option<RationalFunction>,
    mat: Matrix,
    /// `kappa = 1 - (R - R^-1)/(q - q^-1)`; kept for BMW matrices.
    kappa: Option<Matrix>,
}

impl YBMatrix {
    /// Validate and wrap a candidate matrix.
    pub fn validated(
        local_dim: usize,
        class: YbClass,
        nu: Option<RationalFunction>,
        mat: Matrix,
    ) -> Result<Self, RepError> {
        let n2 = local_dim * local_dim;
        assert_eq!(mat.rows(), n2);
        assert_eq!(mat.cols(), n2);
        // braid relation on V tensor 3
        let r1 = OperatorMatrix::two_site(&mat, local_dim, 3, 1);
        let r2 = OperatorMatrix::two_site(&mat, local_dim, 3, 2);
        if r1.compose(&r2).compose(&r1) != r2.compose(&r1).compose(&r2) {
            return Err(RepError::YbeFailure);
        }
        let mut kappa = None;
        match class {
            YbClass::Generic => {}
            YbClass::Hecke => {
                // R^2 = (q - q^-1) R + 1
                let lhs = &mat * &mat;
                let rhs = &mat.scale(&delta()) + &Matrix::identity(n2);
                if lhs != rhs {
                    return Err(RepError::ClassRelationFailure(
                        "Hecke quadratic relation".into(),
                    ));
                }
            }
            YbClass::Bmw => {
                let nu = nu.clone().ok_or(RepError::MissingNu(YbClass::Bmw))?;
                if nu.is_zero() {
                    return Err(RepError::ClassRelationFailure("nu must be nonzero".into()));
                }
                let inv = mat.inverse().ok_or(RepError::Singular)?;
                let k = &Matrix::identity(n2) - &(&mat - &inv).scale(&delta().recip());
                check_bmw_relations(local_dim, &mat, &k, &nu)?;
                kappa = Some(k);
            }
        }
        Ok(YBMatrix {
            local_dim,
            class,
            nu,
            mat,
            kappa,
        })
    }

    pub fn local_dim(&self) -> usize {
        self.local_dim
    }

    pub fn class(&self) -> YbClass {
        self.class
    }

    /// Declared class, downgraded to the Hecke quotient when a BMW matrix
    /// has vanishing kappa.
    pub fn effective_class(&self) -> YbClass {
        match self.class {
            YbClass::Bmw if self.kappa.as_ref().map(|k| k.is_zero()).unwrap_or(false) => {
                YbClass::Hecke
            }
            c => c,
        }
    }

    pub fn nu(&self) -> Option<&RationalFunction> {
        self.nu.as_ref()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.mat
    }

    pub fn kappa(&self) -> Option<&Matrix> {
        self.kappa.as_ref()
    }

    /// `rho(sigma_i) = R^{up (i-1)}` on `V^{tensor degree}`.
    pub fn generator_op(&self, i: usize, degree: usize) -> OperatorMatrix {
        OperatorMatrix::two_site(&self.mat, self.local_dim, degree, i)
    }

    /// Apply the coefficient-field endomorphism `q -> -q^-1` entrywise and
    /// revalidate (the braid relation is preserved; the class relations are
    /// those for the transformed parameters).
    pub fn flip_q(&self) -> Result<YBMatrix, RepError> {
        let mat = Matrix::from_fn(self.mat.rows(), self.mat.cols(), |r, c| {
            self.mat.get(r, c).flip_q()
        });
        YBMatrix::validated(
            self.local_dim,
            self.class,
            self.nu.as_ref().map(|v| v.flip_q()),
            mat,
        )
    }
}

/// The BMW tangle relations on `V tensor 3`, with kappa already derived from
/// the cubic decomposition.
fn check_bmw_relations(
    local_dim: usize,
    r: &Matrix,
    kappa: &Matrix,
    nu: &RationalFunction,
) -> Result<(), RepError> {
    // kappa R = R kappa = nu kappa (two-site level)
    let krn = &(kappa * r) - &kappa.scale(nu);
    let rkn = &(r * kappa) - &kappa.scale(nu);
    if !krn.is_zero() || !rkn.is_zero() {
        return Err(RepError::ClassRelationFailure(
            "kappa sigma = sigma kappa = nu kappa".into(),
        ));
    }
    let rinv = r.inverse().ok_or(RepError::Singular)?;
    let place = |x: &Matrix, pos: usize| OperatorMatrix::two_site(x, local_dim, 3, pos);
    let k1 = place(kappa, 1);
    let k2 = place(kappa, 2);
    let s1 = place(r, 1);
    let s2 = place(r, 2);
    let s1i = place(&rinv, 1);
    let s2i = place(&rinv, 2);
    // kappa_i sigma_{i-1} kappa_i = nu^-1 kappa_i (and the mirrored index)
    let nui = nu.recip();
    if k2.compose(&s1).compose(&k2) != k2.scale(&nui)
        || k1.compose(&s2).compose(&k1) != k1.scale(&nui)
    {
        return Err(RepError::ClassRelationFailure(
            "kappa_i sigma_j kappa_i = nu^-1 kappa_i".into(),
        ));
    }
    // kappa_i sigma_{i-1}^-1 kappa_i = nu kappa_i
    if k2.compose(&s1i).compose(&k2) != k2.scale(nu)
        || k1.compose(&s2i).compose(&k1) != k1.scale(nu)
    {
        return Err(RepError::ClassRelationFailure(
            "kappa_i sigma_j^-1 kappa_i = nu kappa_i".into(),
        ));
    }
    Ok(())
}

/// The standard Hecke Yang-Baxter matrix on an `N`-dimensional space:
/// `e_i e_j -> e_j e_i` for `i < j`, `e_i e_i -> q e_i e_i`, and
/// `e_i e_j -> e_j e_i + (q - q^-1) e_i e_j` for `i > j`.  Self-validates.
pub fn builtin_hecke_r(local_dim: usize) -> Result<YBMatrix, RepError> {
    assert!(local_dim >= 1);
    let n = local_dim;
    let mut mat = Matrix::zeros(n * n, n * n);
    let q = RationalFunction::q();
    let d = delta();
    for i in 0..n {
        for j in 0..n {
            let col = i * n + j;
            use std::cmp::Ordering;
            match i.cmp(&j) {
                Ordering::Equal => mat.set(col, col, q.clone()),
                Ordering::Less => {
                    mat.set(j * n + i, col, RationalFunction::one());
                }
                Ordering::Greater => {
                    mat.set(j * n + i, col, RationalFunction::one());
                    mat.set(col, col, d.clone());
                }
            }
        }
    }
    YBMatrix::validated(n, YbClass::Hecke, None, mat)
}

/// The flip `P(u tensor v) = v tensor u` on an `N`-dimensional space.
pub fn flip_matrix(local_dim: usize) -> Matrix {
    let n = local_dim;
    let mut p = Matrix::zeros(n * n, n * n);
    for i in 0..n {
        for j in 0..n {
            p.set(j * n + i, i * n + j, RationalFunction::one());
        }
    }
    p
}

/// Linear extension of the local representation to the braid monoid ring:
/// words map to products of shifted copies of `R`.
pub fn rho(x: &BraidRingElement, degree: usize, r: &YBMatrix) -> Result<OperatorMatrix, RepError> {
    if x.strands() > degree {
        return Err(RepError::DegreeTooSmall {
            needed: x.strands(),
            got: degree,
        });
    }
    let gens: Vec<OperatorMatrix> = (1..degree)
        .map(|i| r.generator_op(i, degree))
        .collect();
    let mut acc = OperatorMatrix::identity(r.local_dim(), degree).scale(&RationalFunction::zero());
    for (nf, c) in x.terms() {
        let mut term = OperatorMatrix::identity(r.local_dim(), degree);
        for &i in nf.word() {
            term = term.compose(&gens[i as usize - 1]);
        }
        let coeff = RationalFunction::from_rat(crate::coeff::BigRat::from_integer(c.clone()));
        acc = acc.add(&term.scale(&coeff));
    }
    Ok(acc)
}

/// Representation of a Hecke algebra element; requires a Hecke-class matrix
/// so the quotient relation is respected.
pub fn rho_hecke(
    x: &HeckeElement,
    degree: usize,
    r: &YBMatrix,
) -> Result<OperatorMatrix, RepError> {
    if r.effective_class() != YbClass::Hecke {
        return Err(RepError::ClassMismatch(
            "Hecke element represented on a non-Hecke matrix".into(),
        ));
    }
    if x.strands() > degree {
        return Err(RepError::DegreeTooSmall {
            needed: x.strands(),
            got: degree,
        });
    }
    let gens: Vec<OperatorMatrix> = (1..degree)
        .map(|i| r.generator_op(i, degree))
        .collect();
    let mut acc = OperatorMatrix::identity(r.local_dim(), degree).scale(&RationalFunction::zero());
    for (w, c) in x.terms() {
        let mut term = OperatorMatrix::identity(r.local_dim(), degree);
        for &i in &w.canonical_word() {
            term = term.compose(&gens[i as usize - 1]);
        }
        acc = acc.add(&term.scale(c));
    }
    Ok(acc)
}

/// The multiplicative-shuffle word evaluated on shifted copies of a two-site
/// operator: `bar Sha_{m,n}{X}` on `V^{tensor (m+n)}`.
pub fn flip_shuffle(m: usize, n: usize, x: &Matrix, local_dim: usize) -> OperatorMatrix {
    let degree = (m + n).max(1);
    let word = crate::braid::mult_shuffle(m, n);
    let nf = word.as_single_word().expect("a single positive word");
    let mut acc = OperatorMatrix::identity(local_dim, degree);
    for &i in nf.word() {
        acc = acc.compose(&OperatorMatrix::two_site(x, local_dim, degree, i as usize));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::PositiveWord;
    use crate::sampling;

    fn rf(s: &str) -> RationalFunction {
        RationalFunction::parse(s).unwrap()
    }

    fn braid_word(n: usize, letters: &[u8]) -> BraidRingElement {
        BraidRingElement::from_word(&PositiveWord::new(n, letters.to_vec()).unwrap())
    }

    #[test]
    fn builtin_hecke_n1_is_scalar_q() {
        let r = builtin_hecke_r(1).unwrap();
        assert_eq!(r.matrix().get(0, 0), &rf("q"));
    }

    #[test]
    fn builtin_hecke_n2_validates() {
        let r = builtin_hecke_r(2).unwrap();
        // (R - q)(R + q^-1) = 0
        let i4 = Matrix::identity(4);
        let a = &(r.matrix().clone()) - &i4.scale(&rf("q"));
        let b = &(r.matrix().clone()) + &i4.scale(&rf("q^-1"));
        assert!((&a * &b).is_zero());
    }

    #[test]
    fn rho_on_words() {
        let r = builtin_hecke_r(2).unwrap();
        // rho(1) is the identity
        assert!(rho(&BraidRingElement::one(3), 3, &r).unwrap().is_identity());
        // rho(sigma_2) on degree 3 is Id tensor R
        let s2 = rho(&braid_word(3, &[2]), 3, &r).unwrap();
        let expected = OperatorMatrix::new(2, 2, r.matrix().clone()).shift_up(1);
        assert_eq!(s2, expected);
        // the braid relation holds in the representation
        let lhs = rho(&braid_word(3, &[1, 2, 1]), 3, &r).unwrap();
        let rhs = rho(&braid_word(3, &[2, 1, 2]), 3, &r).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn rho_is_a_ring_homomorphism_on_samples() {
        let r = builtin_hecke_r(2).unwrap();
        let mut rng = sampling::rng_for(11, "rho-hom");
        for _ in 0..5 {
            let a = BraidRingElement::from_word(&sampling::positive_word(&mut rng, 4, 3));
            let b = BraidRingElement::from_word(&sampling::positive_word(&mut rng, 4, 3));
            let prod = a.multiply(&b).unwrap();
            let lhs = rho(&prod, 4, &r).unwrap();
            let rhs = rho(&a, 4, &r).unwrap().compose(&rho(&b, 4, &r).unwrap());
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn antisymmetrizer_image_has_rank_one() {
        let r = builtin_hecke_r(2).unwrap();
        let anti = crate::hecke::antisymmetrizer(2).unwrap();
        let img = rho_hecke(&anti, 2, &r).unwrap();
        assert_eq!(img.matrix().rank(), 1);
    }

    #[test]
    fn rho_hecke_rejects_generic_class() {
        let p = flip_matrix(2);
        let yb = YBMatrix::validated(2, YbClass::Generic, None, p).unwrap();
        let x = crate::hecke::HeckeElement::one(2);
        assert!(matches!(
            rho_hecke(&x, 2, &yb),
            Err(RepError::ClassMismatch(_))
        ));
    }

    #[test]
    fn flip_fails_hecke_class_but_passes_generic() {
        let p = flip_matrix(2);
        assert!(YBMatrix::validated(2, YbClass::Hecke, None, p.clone()).is_err());
        assert!(YBMatrix::validated(2, YbClass::Generic, None, p).is_ok());
    }

    #[test]
    fn random_matrix_fails_ybe() {
        let mut rng = sampling::rng_for(3, "non-yb");
        let m = sampling::int_matrix(&mut rng, 4, 4, 3);
        // a generic random matrix is essentially never Yang-Baxter
        assert!(matches!(
            YBMatrix::validated(2, YbClass::Generic, None, m),
            Err(RepError::YbeFailure)
        ));
    }

    #[test]
    fn flip_shuffle_small_cases() {
        let p = flip_matrix(2);
        // bar Sha_{1,1}{P} = P
        let sh = flip_shuffle(1, 1, &p, 2);
        assert_eq!(sh.matrix(), &p);
        // bar Sha_{m,n}{P} inverse is bar Sha_{n,m}{P}
        for (m, n) in [(1usize, 2usize), (2, 1), (2, 2)] {
            let a = flip_shuffle(m, n, &p, 2);
            let b = flip_shuffle(n, m, &p, 2);
            assert!(a.compose(&b).is_identity(), "m={m} n={n}");
        }
    }
}
