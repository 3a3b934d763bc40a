//! Graded associative algebras on tensor spaces built from operator
//! collections `T_{m,n}`, their symmetrizer collections, restricted
//! products, dual collections and matrix-level twist collections.

use std::collections::BTreeMap;
use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::coeff::RationalFunction;
use crate::hecke;
use crate::matrix::Matrix;
use crate::repmat::{flip_matrix, flip_shuffle, rho_hecke, OperatorMatrix, RepError, YBMatrix};

#[derive(Debug, Error)]
pub enum CollectionError {
    #[error("boundary operator T_{{{0},{1}}} is not the identity")]
    BoundaryFailure(usize, usize),
    #[error("exchange axiom fails at (k, n, m) = ({k}, {n}, {m})")]
    AxiomFailure { k: usize, n: usize, m: usize },
    #[error("collection is unusable after a failed axiom check")]
    Poisoned,
    #[error("local dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("tensor is not in the image of the degree-{0} symmetrizer")]
    NotInImage(usize),
    #[error("twist matrix is singular")]
    SingularTwist,
    #[error("twist matrix does not satisfy the twist equation F12 F13 F23 = F23 F13 F12")]
    TwistEquationFailure,
    #[error(transparent)]
    Rep(#[from] RepError),
}

/// How the operators of a collection are produced.
#[derive(Debug)]
enum Provider {
    /// `T_{m,n} = rho(sSha_{m,n})` over a Hecke Yang-Baxter matrix.
    Multiplicative { r: YBMatrix, s: RationalFunction },
    /// `T_{m,n} = rho(Sha_{m,n}{t sigma})` over a Hecke Yang-Baxter matrix.
    Additive { r: YBMatrix, t: RationalFunction },
    /// `T_{m,n} = bar Sha_{m,n}{P}` built from flips.
    Permutation,
    /// `T_{m,n} = transpose(F_{n,m})` for an invertible twist `F`.
    Twist { f: Matrix },
    /// Dual of another collection: `T*_{m,n} = T_{n,m} bar Sha_{m,n}{P}`.
    Dual(Box<Collection>),
    /// The tensor algebra: every `T_{m,n}` is the identity.
    Identity,
}

/// A collection of operators `T_{m,n}` on `V^{tensor (m+n)}` subject to the
/// exchange axiom `T_{n+k,m} T_{k,n}^{up m} = T_{k,m+n} T_{n,m}` and the
/// boundary condition `T_{m,0} = T_{0,m} = Id`.  The axiom is verified
/// lazily up to the largest requested degree and the verdict is cached; a
/// collection that fails is unusable afterwards.
#[derive(Debug)]
pub struct Collection {
    local_dim: usize,
    name: String,
    provider: Provider,
    cache: HashMap<(usize, usize), OperatorMatrix>,
    verified_through: usize,
    poisoned: bool,
}

impl Collection {
    pub fn multiplicative(r: &YBMatrix, s: &RationalFunction) -> Self {
        Collection {
            local_dim: r.local_dim(),
            name: format!("multiplicative(s = {s})"),
            provider: Provider::Multiplicative {
                r: r.clone(),
                s: s.clone(),
            },
            cache: HashMap::new(),
            verified_through: 0,
            poisoned: false,
        }
    }

    pub fn additive(r: &YBMatrix, t: &RationalFunction) -> Self {
        Collection {
            local_dim: r.local_dim(),
            name: format!("additive(t = {t})"),
            provider: Provider::Additive {
                r: r.clone(),
                t: t.clone(),
            },
            cache: HashMap::new(),
            verified_through: 0,
            poisoned: false,
        }
    }

    pub fn permutation(local_dim: usize) -> Self {
        Collection {
            local_dim,
            name: "permutation".into(),
            provider: Provider::Permutation,
            cache: HashMap::new(),
            verified_through: 0,
            poisoned: false,
        }
    }

    /// A twist collection requires more than invertibility: the exchange
    /// axiom for the products built by the bracket formula is exactly the
    /// matrix twist equation `F12 F13 F23 = F23 F13 F12`, checked here on
    /// `V^{tensor 3}`.  (The flip factorization of the products holds for
    /// arbitrary invertible `F`; the collection axiom does not.)
    pub fn twist(local_dim: usize, f: &Matrix) -> Result<Self, CollectionError> {
        if f.rank() != local_dim * local_dim {
            return Err(CollectionError::SingularTwist);
        }
        let f12 = OperatorMatrix::pair_site(f, local_dim, 3, 1, 2);
        let f13 = OperatorMatrix::pair_site(f, local_dim, 3, 1, 3);
        let f23 = OperatorMatrix::pair_site(f, local_dim, 3, 2, 3);
        let lhs = f12.compose(&f13).compose(&f23);
        let rhs = f23.compose(&f13).compose(&f12);
        if lhs != rhs {
            return Err(CollectionError::TwistEquationFailure);
        }
        Ok(Collection {
            local_dim,
            name: "twist".into(),
            provider: Provider::Twist { f: f.clone() },
            cache: HashMap::new(),
            verified_through: 0,
            poisoned: false,
        })
    }

    pub fn identity(local_dim: usize) -> Self {
        Collection {
            local_dim,
            name: "identity".into(),
            provider: Provider::Identity,
            cache: HashMap::new(),
            verified_through: 0,
            poisoned: false,
        }
    }

    /// The dual collection `T*_{m,n} = T_{n,m} bar Sha_{m,n}{P}`.
    pub fn dual(self) -> Self {
        let local_dim = self.local_dim;
        let name = format!("dual({})", self.name);
        Collection {
            local_dim,
            name,
            provider: Provider::Dual(Box::new(self)),
            cache: HashMap::new(),
            verified_through: 0,
            poisoned: false,
        }
    }

    pub fn local_dim(&self) -> usize {
        self.local_dim
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    fn compute(&mut self, m: usize, n: usize) -> Result<OperatorMatrix, CollectionError> {
        let local_dim = self.local_dim;
        if m + n == 0 {
            return Ok(OperatorMatrix::identity(local_dim, 0));
        }
        let op = match &mut self.provider {
            Provider::Multiplicative { r, s } => {
                let el = hecke::mult_shuffle_s(m, n, s).expect("nonzero parameter powers");
                rho_hecke(&el, m + n, r)?
            }
            Provider::Additive { r, t } => {
                let el = hecke::additive_shuffle_scaled(m, n, t);
                rho_hecke(&el, m + n, r)?
            }
            Provider::Permutation => flip_shuffle(m, n, &flip_matrix(local_dim), local_dim),
            Provider::Twist { f } => twist_collection(f, n, m, local_dim).transpose(),
            Provider::Dual(inner) => {
                let base = inner.operator(n, m)?;
                let p = flip_shuffle(m, n, &flip_matrix(local_dim), local_dim);
                base.compose(&p)
            }
            Provider::Identity => OperatorMatrix::identity(local_dim, m + n),
        };
        Ok(op)
    }

    /// The operator `T_{m,n}`, from the cache when possible.
    pub fn operator(&mut self, m: usize, n: usize) -> Result<OperatorMatrix, CollectionError> {
        if self.poisoned {
            return Err(CollectionError::Poisoned);
        }
        if let Some(hit) = self.cache.get(&(m, n)) {
            return Ok(hit.clone());
        }
        let op = self.compute(m, n)?;
        self.cache.insert((m, n), op.clone());
        Ok(op)
    }

    /// Verify the boundary condition and the exchange axiom for every
    /// `m + n + k <= degree`; cached, poisoning the collection on failure.
    pub fn ensure_verified(&mut self, degree: usize) -> Result<(), CollectionError> {
        if self.poisoned {
            return Err(CollectionError::Poisoned);
        }
        if degree <= self.verified_through {
            return Ok(());
        }
        for m in 0..=degree {
            let t0 = self.operator(m, 0)?;
            let t1 = self.operator(0, m)?;
            if !t0.is_identity() {
                self.poisoned = true;
                return Err(CollectionError::BoundaryFailure(m, 0));
            }
            if !t1.is_identity() {
                self.poisoned = true;
                return Err(CollectionError::BoundaryFailure(0, m));
            }
        }
        for total in 0..=degree {
            for k in 0..=total {
                for n in 0..=total - k {
                    let m = total - k - n;
                    let lhs = self
                        .operator(n + k, m)?
                        .compose(&self.operator(k, n)?.shift_up(m));
                    let rhs = self
                        .operator(k, m + n)?
                        .compose(&self.operator(n, m)?.pad(k));
                    if lhs != rhs {
                        self.poisoned = true;
                        return Err(CollectionError::AxiomFailure { k, n, m });
                    }
                }
            }
        }
        self.verified_through = degree;
        Ok(())
    }

    /// The symmetrizer collection `S_0 = S_1 = Id`,
    /// `S_{m+n} = T_{n,m} S_m S_n^{up m}`, built along the splitting `n = 1`.
    pub fn symmetrizer(&mut self, m: usize) -> Result<OperatorMatrix, CollectionError> {
        if m <= 1 {
            return Ok(OperatorMatrix::identity(self.local_dim, m));
        }
        let prev = self.symmetrizer(m - 1)?;
        Ok(self.operator(1, m - 1)?.compose(&prev.pad(1)))
    }

    /// The same symmetrizer through an arbitrary splitting `m + n`;
    /// well-definedness is what the exchange axiom guarantees.
    pub fn symmetrizer_by_split(
        &mut self,
        m: usize,
        n: usize,
    ) -> Result<OperatorMatrix, CollectionError> {
        let sm = self.symmetrizer(m)?;
        let sn = self.symmetrizer(n)?;
        Ok(self
            .operator(n, m)?
            .compose(&sm.pad(n))
            .compose(&sn.shift_up(m)))
    }
}

/// The twist product
/// `F_{m,n} = (F_{1,m+n} ... F_{m,m+n}) (F_{1,m+n-1} ... F_{m,m+n-1}) ...
/// (F_{1,m+1} ... F_{m,m+1})` of pair placements of `F` on `V^{tensor (m+n)}`.
pub fn twist_collection(f: &Matrix, m: usize, n: usize, local_dim: usize) -> OperatorMatrix {
    let degree = (m + n).max(1);
    let mut acc = OperatorMatrix::identity(local_dim, degree);
    for j in (m + 1..=m + n).rev() {
        for i in 1..=m {
            acc = acc.compose(&OperatorMatrix::pair_site(f, local_dim, degree, i, j));
        }
    }
    acc
}

/// An element of the graded tensor space: finitely many homogeneous
/// components, the degree-0 one a scalar.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedTensor {
    local_dim: usize,
    components: BTreeMap<usize, Vec<RationalFunction>>,
}

impl GradedTensor {
    pub fn zero(local_dim: usize) -> Self {
        GradedTensor {
            local_dim,
            components: BTreeMap::new(),
        }
    }

    /// A scalar in degree 0.
    pub fn scalar(local_dim: usize, c: RationalFunction) -> Self {
        Self::homogeneous(local_dim, 0, vec![c])
    }

    pub fn one(local_dim: usize) -> Self {
        Self::scalar(local_dim, RationalFunction::one())
    }

    pub fn homogeneous(local_dim: usize, degree: usize, coords: Vec<RationalFunction>) -> Self {
        assert_eq!(coords.len(), local_dim.pow(degree as u32));
        let mut components = BTreeMap::new();
        if coords.iter().any(|c| !c.is_zero()) {
            components.insert(degree, coords);
        }
        GradedTensor {
            local_dim,
            components,
        }
    }

    /// The basis vector `e_{digits[0]} tensor ... tensor e_{digits[d-1]}`.
    pub fn basis_vector(local_dim: usize, digits: &[usize]) -> Self {
        let degree = digits.len();
        let mut idx = 0usize;
        for &d in digits {
            assert!(d < local_dim);
            idx = idx * local_dim + d;
        }
        let mut coords = vec![RationalFunction::zero(); local_dim.pow(degree as u32)];
        coords[idx] = RationalFunction::one();
        Self::homogeneous(local_dim, degree, coords)
    }

    pub fn local_dim(&self) -> usize {
        self.local_dim
    }

    pub fn component(&self, degree: usize) -> Option<&[RationalFunction]> {
        self.components.get(&degree).map(|v| v.as_slice())
    }

    pub fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.components.keys().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    pub fn add(&self, other: &GradedTensor) -> GradedTensor {
        assert_eq!(self.local_dim, other.local_dim);
        let mut out = self.clone();
        for (deg, coords) in &other.components {
            match out.components.entry(*deg) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(coords.clone());
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    for (a, b) in e.get_mut().iter_mut().zip(coords) {
                        *a = &*a + b;
                    }
                    if e.get().iter().all(|c| c.is_zero()) {
                        e.remove();
                    }
                }
            }
        }
        out
    }

    pub fn scale(&self, k: &RationalFunction) -> GradedTensor {
        if k.is_zero() {
            return GradedTensor::zero(self.local_dim);
        }
        GradedTensor {
            local_dim: self.local_dim,
            components: self
                .components
                .iter()
                .map(|(d, v)| (*d, v.iter().map(|c| c * k).collect()))
                .collect(),
        }
    }
}

/// Plain tensor product of coordinate vectors (first factor most
/// significant).
fn tensor_coords(u: &[RationalFunction], v: &[RationalFunction]) -> Vec<RationalFunction> {
    let mut out = Vec::with_capacity(u.len() * v.len());
    for a in u {
        for b in v {
            out.push(a * b);
        }
    }
    out
}

/// The graded product `u odot v = T_{n,m}(u tensor v)` on homogeneous
/// components of degrees `m` and `n`, extended bilinearly.
pub fn odot(
    u: &GradedTensor,
    v: &GradedTensor,
    c: &mut Collection,
) -> Result<GradedTensor, CollectionError> {
    if u.local_dim != v.local_dim || u.local_dim != c.local_dim() {
        return Err(CollectionError::DimensionMismatch(u.local_dim, c.local_dim()));
    }
    let mut out = GradedTensor::zero(u.local_dim);
    for (&m, uc) in &u.components {
        for (&n, vc) in &v.components {
            let raw = tensor_coords(uc, vc);
            let mapped = if m + n == 0 {
                raw
            } else {
                c.operator(n, m)?.apply(&raw)
            };
            out = out.add(&GradedTensor {
                local_dim: u.local_dim,
                components: [(m + n, mapped)].into_iter().collect(),
            });
        }
    }
    // prune exact zeros introduced by cancellation
    out.components.retain(|_, v| v.iter().any(|c| !c.is_zero()));
    Ok(out)
}

/// Decide membership in the image of the degree-`m` symmetrizer and return
/// a witness preimage.
pub fn witness_in_image(
    c: &mut Collection,
    m: usize,
    coords: &[RationalFunction],
) -> Result<Vec<RationalFunction>, CollectionError> {
    let s = c.symmetrizer(m)?;
    s.matrix()
        .solve(coords)
        .ok_or(CollectionError::NotInImage(m))
}

/// The restricted product on images of the symmetrizer collection:
/// `u odot v = S_{m+n}(u' tensor v')` for any witnesses `u = S_m u'`,
/// `v = S_n v'`; the result does not depend on the witnesses.
pub fn restricted_product(
    u: &GradedTensor,
    v: &GradedTensor,
    c: &mut Collection,
) -> Result<GradedTensor, CollectionError> {
    if u.local_dim != v.local_dim || u.local_dim != c.local_dim() {
        return Err(CollectionError::DimensionMismatch(u.local_dim, c.local_dim()));
    }
    let mut out = GradedTensor::zero(u.local_dim);
    for (&m, uc) in &u.components {
        let uw = witness_in_image(c, m, uc)?;
        for (&n, vc) in &v.components {
            let vw = witness_in_image(c, n, vc)?;
            let raw = tensor_coords(&uw, &vw);
            let mapped = if m + n == 0 {
                raw
            } else {
                c.symmetrizer(m + n)?.apply(&raw)
            };
            out = out.add(&GradedTensor {
                local_dim: u.local_dim,
                components: [(m + n, mapped)].into_iter().collect(),
            });
        }
    }
    out.components.retain(|_, v| v.iter().any(|c| !c.is_zero()));
    Ok(out)
}

impl fmt::Display for GradedTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (deg, coords) in &self.components {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let parts: Vec<String> = coords.iter().map(|c| c.to_string()).collect();
            write!(f, "deg {deg}: [{}]", parts.join(", "))?;
        }
        Ok(())
    }
}
