//! BMW-specific constructions, verified inside validated matrix
//! representations; the abstract algebra is only touched through the
//! numeric word-reduction checks in [`words`].

pub mod words;

use thiserror::Error;

use crate::coeff::{q_superfactorial, RationalFunction};
use crate::hecke::delta;
use crate::matrix::Matrix;
use crate::repmat::{builtin_hecke_r, flip_matrix, OperatorMatrix, RepError, YBMatrix, YbClass};

#[derive(Debug, Error)]
pub enum BmwError {
    #[error("matrix has class {0:?}, expected a genuine bmw matrix")]
    NotBmw(YbClass),
    #[error("kappa invariant fails: {0}")]
    KappaInvariant(String),
    #[error("spectral parameter must be nonzero")]
    ZeroParameter,
    #[error("pole of the kappa coefficient: 1 - nu^-1 q^-1 x^2 vanishes")]
    KappaPole,
    #[error(transparent)]
    Rep(#[from] RepError),
}

/// A validated BMW matrix together with its derived data: `nu`, the
/// two-site `kappa` and the scalar `mu` with `kappa^2 = mu kappa`.
#[derive(Debug, Clone)]
pub struct BmwContext {
    r: YBMatrix,
    nu: RationalFunction,
    mu: RationalFunction,
    kappa: Matrix,
}

impl BmwContext {
    /// Wrap a validated matrix, additionally certifying `kappa^2 = mu kappa`
    /// with `mu = 1 - (nu - nu^-1)/(q - q^-1)`.
    pub fn new(r: YBMatrix) -> Result<Self, BmwError> {
        if r.effective_class() != YbClass::Bmw {
            return Err(BmwError::NotBmw(r.effective_class()));
        }
        let nu = r.nu().expect("bmw matrices carry nu").clone();
        let kappa = r.kappa().expect("bmw matrices carry kappa").clone();
        let mu = RationalFunction::one() - (&nu - &nu.recip()) / delta();
        if &kappa * &kappa != kappa.scale(&mu) {
            return Err(BmwError::KappaInvariant(format!(
                "kappa^2 != mu kappa with mu = {mu}"
            )));
        }
        Ok(BmwContext { r, nu, mu, kappa })
    }

    pub fn matrix(&self) -> &YBMatrix {
        &self.r
    }

    pub fn local_dim(&self) -> usize {
        self.r.local_dim()
    }

    pub fn nu(&self) -> &RationalFunction {
        &self.nu
    }

    pub fn mu(&self) -> &RationalFunction {
        &self.mu
    }

    pub fn kappa(&self) -> &Matrix {
        &self.kappa
    }

    /// `sigma_i` on `V^{tensor degree}`.
    pub fn sigma_op(&self, i: usize, degree: usize) -> OperatorMatrix {
        self.r.generator_op(i, degree)
    }

    /// `kappa_i` on `V^{tensor degree}`.
    pub fn kappa_op(&self, i: usize, degree: usize) -> OperatorMatrix {
        OperatorMatrix::two_site(&self.kappa, self.local_dim(), degree, i)
    }

    /// The context for the parameters transported through `q -> -q^-1`
    /// (used for the antisymmetrizer correspondence).
    pub fn flip_q(&self) -> Result<BmwContext, BmwError> {
        BmwContext::new(self.r.flip_q()?)
    }
}

/// The baxterized operator
/// `sigma_i(x) = x^-1 (1 + (x^2-1)/(q-q^-1) sigma_i
///                      + (x^2-1)/(1 - nu^-1 q^-1 x^2) kappa_i)`
/// as a shifted operator on `V^{tensor degree}`.
pub fn bmw_baxterized(
    ctx: &BmwContext,
    i: usize,
    x: &RationalFunction,
    degree: usize,
) -> Result<OperatorMatrix, BmwError> {
    if x.is_zero() {
        return Err(BmwError::ZeroParameter);
    }
    let xx = x.pow(2) - RationalFunction::one();
    let pole = RationalFunction::one()
        - ctx.nu.recip() * RationalFunction::q().recip() * x.pow(2);
    if pole.is_zero() {
        return Err(BmwError::KappaPole);
    }
    let id = OperatorMatrix::identity(ctx.local_dim(), degree);
    let sigma = ctx.sigma_op(i, degree);
    let kappa = ctx.kappa_op(i, degree);
    let out = id
        .add(&sigma.scale(&(&xx / &delta())))
        .add(&kappa.scale(&(&xx / &pole)))
        .scale(&x.recip());
    Ok(out)
}

/// The denominator-cleared baxterized operator together with its clearing
/// scalar: returns `(sigma_i(x) * s, s)` with
/// `s = x (q - q^-1) (1 - nu^-1 q^-1 x^2)`.  When `nu` is a monomial the
/// cleared operator has Laurent entries, which keeps long products cheap.
pub fn bmw_baxterized_cleared(
    ctx: &BmwContext,
    i: usize,
    x: &RationalFunction,
    degree: usize,
) -> Result<(OperatorMatrix, RationalFunction), BmwError> {
    if x.is_zero() {
        return Err(BmwError::ZeroParameter);
    }
    let xx = x.pow(2) - RationalFunction::one();
    let pole = RationalFunction::one()
        - ctx.nu.recip() * RationalFunction::q().recip() * x.pow(2);
    if pole.is_zero() {
        return Err(BmwError::KappaPole);
    }
    let id = OperatorMatrix::identity(ctx.local_dim(), degree);
    let sigma = ctx.sigma_op(i, degree);
    let kappa = ctx.kappa_op(i, degree);
    let d = delta();
    // x^-1 (1 + xx/d sigma + xx/pole kappa) * (x d pole)
    //   = d pole + xx pole sigma + xx d kappa
    let cleared = id
        .scale(&(&d * &pole))
        .add(&sigma.scale(&(&xx * &pole)))
        .add(&kappa.scale(&(&xx * &d)));
    let scalar = x * &d * pole;
    Ok((cleared, scalar))
}

/// The representation of the multiplicative symmetrizer word: the product of
/// baxterized operators over the staircase brackets, divided by `[n]_q^$`;
/// an idempotent commuting with every `sigma_i` through the eigenvalue `q`.
pub fn bmw_symmetrizer(ctx: &BmwContext, n: usize) -> Result<OperatorMatrix, BmwError> {
    bmw_symmetrizer_on(ctx, n, n)
}

/// Same symmetrizer placed on `V^{tensor degree}` with `degree >= n`.
pub fn bmw_symmetrizer_on(
    ctx: &BmwContext,
    n: usize,
    degree: usize,
) -> Result<OperatorMatrix, BmwError> {
    let (cleared, scalar) = bmw_symmetrizer_cleared_on(ctx, n, degree)?;
    Ok(cleared.scale(&(scalar * q_superfactorial(n)).recip()))
}

/// The staircase product of cleared baxterized operators together with the
/// accumulated clearing scalar: the symmetrizer is the product divided by
/// `scalar * [n]_q^$`.
pub fn bmw_symmetrizer_cleared_on(
    ctx: &BmwContext,
    n: usize,
    degree: usize,
) -> Result<(OperatorMatrix, RationalFunction), BmwError> {
    assert!(n >= 1 && degree >= n);
    let mut acc = OperatorMatrix::identity(ctx.local_dim(), degree);
    let mut scalar = RationalFunction::one();
    for j in (2..=n).rev() {
        for t in 1..j {
            let x = RationalFunction::q().pow(t as i64);
            let (f, s) = bmw_baxterized_cleared(ctx, t, &x, degree)?;
            acc = acc.compose(&f);
            scalar = scalar * s;
        }
    }
    Ok((acc, scalar))
}

/// A genuine BMW matrix built from the validated two-dimensional Hecke
/// matrix: the braiding of the doubled space `W = V tensor V` is
/// `P_23 (R_12 R_34) P_23`, and after the scalar normalization `q^-1` its
/// eigenvalues are `q`, `-q^-1` and `nu = q^-3` with a rank-one cubic part,
/// which is exactly the orthogonal-type BMW spectrum on a four-dimensional
/// space.  The validator, not this construction, is the authority: the
/// result is fully revalidated.
pub fn doubled_hecke_bmw() -> Result<YBMatrix, RepError> {
    let r = builtin_hecke_r(2)?;
    let r12 = OperatorMatrix::two_site(r.matrix(), 2, 4, 1);
    let r34 = OperatorMatrix::two_site(r.matrix(), 2, 4, 3);
    let p23 = OperatorMatrix::two_site(&flip_matrix(2), 2, 4, 2);
    let big = p23
        .compose(&r12)
        .compose(&r34)
        .compose(&p23)
        .scale(&RationalFunction::q().recip());
    // reinterpret V^{tensor 4} as W tensor W with W = V tensor V
    let nu = RationalFunction::q().pow(-3);
    YBMatrix::validated(4, YbClass::Bmw, Some(nu), big.matrix().clone())
}

/// The same matrix through `q -> -q^-1`; a second validated BMW matrix with
/// the distinct parameter `nu = -q^3`.
pub fn doubled_hecke_bmw_flipped() -> Result<YBMatrix, RepError> {
    doubled_hecke_bmw()?.flip_q()
}

/// JSON text of the shipped BMW matrices (also present under `data/`).
pub fn shipped_bmw_json() -> [(&'static str, &'static str); 2] {
    [
        (
            "bmw_n4_nu_qm3.json",
            include_str!("../../data/bmw_n4_nu_qm3.json"),
        ),
        (
            "bmw_n4_nu_mq3.json",
            include_str!("../../data/bmw_n4_nu_mq3.json"),
        ),
    ]
}

/// Parse and validate the shipped matrices.
pub fn shipped_bmw_matrices() -> Result<Vec<(String, YBMatrix)>, RepError> {
    shipped_bmw_json()
        .into_iter()
        .map(|(name, text)| Ok((name.to_string(), crate::repmat::yb_matrix_from_json(text)?)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{q_int, rat};
    use crate::sampling;

    fn rf(s: &str) -> RationalFunction {
        RationalFunction::parse(s).unwrap()
    }

    #[test]
    fn doubled_matrix_is_a_valid_bmw_matrix() {
        let r = doubled_hecke_bmw().unwrap();
        assert_eq!(r.class(), YbClass::Bmw);
        assert_eq!(r.effective_class(), YbClass::Bmw);
        assert_eq!(r.nu().unwrap(), &rf("q^-3"));
        let ctx = BmwContext::new(r).unwrap();
        // mu = 1 - (nu - nu^-1)/(q - q^-1) = (q + q^-1)^2 here
        assert_eq!(ctx.mu(), &q_int(2).pow(2));
        // kappa has rank one (the cubic eigenvalue is simple)
        assert_eq!(ctx.kappa().rank(), 1);
    }

    #[test]
    fn flipped_matrix_has_distinct_nu() {
        let r = doubled_hecke_bmw_flipped().unwrap();
        assert_eq!(r.nu().unwrap(), &rf("-q^3"));
        assert!(BmwContext::new(r).is_ok());
    }

    #[test]
    fn baxterized_normalization_and_unitarity() {
        let ctx = BmwContext::new(doubled_hecke_bmw().unwrap()).unwrap();
        // x = 1 gives the identity
        let one = bmw_baxterized(&ctx, 1, &RationalFunction::one(), 2).unwrap();
        assert!(one.is_identity());
        // sigma(x) sigma(x^-1) = (1 - (x - x^-1)^2/(q - q^-1)^2) Id
        let mut rng = sampling::rng_for(31, "bmw-unit");
        for _ in 0..3 {
            let x = sampling::nonzero_parameter(&mut rng);
            let lhs = bmw_baxterized(&ctx, 1, &x, 2)
                .unwrap()
                .compose(&bmw_baxterized(&ctx, 1, &x.recip(), 2).unwrap());
            let scalar = RationalFunction::one() - (&x - &x.recip()).pow(2) / delta().pow(2);
            assert_eq!(
                lhs,
                OperatorMatrix::identity(4, 2).scale(&scalar),
                "x = {x}"
            );
        }
        assert!(matches!(
            bmw_baxterized(&ctx, 1, &RationalFunction::zero(), 2),
            Err(BmwError::ZeroParameter)
        ));
        // the kappa coefficient pole is rejected: 1 - nu^-1 q^-1 x^2 = 0
        // for x^2 = nu q = q^-2, i.e. x = q^-1
        assert!(matches!(
            bmw_baxterized(&ctx, 1, &rf("q^-1"), 2),
            Err(BmwError::KappaPole)
        ));
    }

    #[test]
    fn baxterized_yang_baxter_with_spectral_parameters() {
        let ctx = BmwContext::new(doubled_hecke_bmw().unwrap()).unwrap();
        let mut rng = sampling::rng_for(37, "bmw-ybe");
        for _ in 0..2 {
            let x = sampling::nonzero_parameter(&mut rng);
            let y = sampling::nonzero_parameter(&mut rng);
            let xy = &x * &y;
            let lhs = bmw_baxterized(&ctx, 2, &x, 3)
                .unwrap()
                .compose(&bmw_baxterized(&ctx, 1, &xy, 3).unwrap())
                .compose(&bmw_baxterized(&ctx, 2, &y, 3).unwrap());
            let rhs = bmw_baxterized(&ctx, 1, &y, 3)
                .unwrap()
                .compose(&bmw_baxterized(&ctx, 2, &xy, 3).unwrap())
                .compose(&bmw_baxterized(&ctx, 1, &x, 3).unwrap());
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn symmetrizers_are_idempotent_with_eigenvalue_q() {
        let ctx = BmwContext::new(doubled_hecke_bmw().unwrap()).unwrap();
        for n in 1..=3usize {
            let s = bmw_symmetrizer(&ctx, n).unwrap();
            assert_eq!(s.compose(&s), s, "idempotency at n = {n}");
            for i in 1..n {
                let qs = s.scale(&RationalFunction::q());
                assert_eq!(ctx.sigma_op(i, n).compose(&s), qs, "left, i = {i}");
                assert_eq!(s.compose(&ctx.sigma_op(i, n)), qs, "right, i = {i}");
            }
        }
    }

    #[test]
    fn shipped_json_matches_the_construction() {
        let shipped = shipped_bmw_matrices().unwrap();
        assert_eq!(shipped.len(), 2);
        assert_eq!(shipped[0].1, doubled_hecke_bmw().unwrap());
        assert_eq!(shipped[1].1, doubled_hecke_bmw_flipped().unwrap());
    }

    #[test]
    fn reca_fails_for_bmw() {
        // S_3 != (q^-2/[3]_q) sha_{1,2} S_2 in a BMW representation: the
        // additive-shuffle recursion is Hecke-only.
        let ctx = BmwContext::new(doubled_hecke_bmw().unwrap()).unwrap();
        let s3 = bmw_symmetrizer(&ctx, 3).unwrap();
        let s2 = bmw_symmetrizer_on(&ctx, 2, 3).unwrap();
        // sha_{1,2} = sum over shuffle words of (q sigma)-words
        let sha = {
            let braid = crate::braid::additive_shuffle(1, 2);
            let mut acc = OperatorMatrix::identity(4, 3).scale(&RationalFunction::zero());
            for (nf, c) in braid.terms() {
                let mut term = OperatorMatrix::identity(4, 3);
                for &i in nf.word() {
                    term = term.compose(&ctx.sigma_op(i as usize, 3));
                }
                let scale = rf("q").pow(nf.len() as i64)
                    * RationalFunction::from_rat(crate::coeff::BigRat::from_integer(c.clone()));
                acc = acc.add(&term.scale(&scale));
            }
            acc
        };
        let rhs = sha
            .compose(&s2)
            .scale(&(rf("q^-2") / q_int(3)));
        assert_ne!(s3, rhs);
        let _ = rat(0);
    }
}
