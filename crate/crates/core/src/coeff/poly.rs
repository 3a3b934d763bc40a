//! Multivariate polynomials in the variables `q`, `s`, `nu` with exact
//! rational coefficients.  Negative exponents are not stored here; Laurent
//! elements live in [`RationalFunction`](super::RationalFunction) as reduced
//! fractions, so this type only needs honest polynomial arithmetic plus the
//! gcd/exact-division machinery that keeps fractions canonical.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::{BigInt, BigRat};

/// Number of supported variables.
pub const NVARS: usize = 3;

/// The three polynomial variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    Q = 0,
    S = 1,
    Nu = 2,
}

impl Var {
    pub fn name(self) -> &'static str {
        match self {
            Var::Q => "q",
            Var::S => "s",
            Var::Nu => "nu",
        }
    }

    pub fn all() -> [Var; NVARS] {
        [Var::Q, Var::S, Var::Nu]
    }
}

/// Exponent vector of a monomial, one entry per variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mono(pub [u32; NVARS]);

impl Mono {
    pub fn one() -> Self {
        Mono([0; NVARS])
    }

    pub fn var(v: Var, e: u32) -> Self {
        let mut m = [0; NVARS];
        m[v as usize] = e;
        Mono(m)
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        let mut m = [0; NVARS];
        for i in 0..NVARS {
            m[i] = self.0[i] + other.0[i];
        }
        Mono(m)
    }

    /// Componentwise division; `None` when not divisible.
    pub fn div(&self, other: &Mono) -> Option<Mono> {
        let mut m = [0; NVARS];
        for i in 0..NVARS {
            m[i] = self.0[i].checked_sub(other.0[i])?;
        }
        Some(Mono(m))
    }

    pub fn gcd(&self, other: &Mono) -> Mono {
        let mut m = [0; NVARS];
        for i in 0..NVARS {
            m[i] = self.0[i].min(other.0[i]);
        }
        Mono(m)
    }
}

/// Sparse multivariate polynomial; no zero coefficients are stored and the
/// `BTreeMap` keeps the exponent keys canonically ordered.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    terms: BTreeMap<Mono, BigRat>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(BigRat::one())
    }

    pub fn constant(c: BigRat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Mono::one(), c);
        }
        MultiPoly { terms }
    }

    pub fn var(v: Var) -> Self {
        Self::monomial(Mono::var(v, 1), BigRat::one())
    }

    pub fn monomial(m: Mono, c: BigRat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Mono::one())
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.contains_key(&Mono::one()))
    }

    pub fn as_constant(&self) -> Option<BigRat> {
        if self.is_zero() {
            Some(BigRat::zero())
        } else if self.is_constant() {
            self.terms.get(&Mono::one()).cloned()
        } else {
            None
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &BigRat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn degree(&self, v: Var) -> u32 {
        self.terms
            .keys()
            .map(|m| m.0[v as usize])
            .max()
            .unwrap_or(0)
    }

    /// Variables actually occurring with a positive exponent.
    pub fn support(&self) -> [bool; NVARS] {
        let mut s = [false; NVARS];
        for m in self.terms.keys() {
            for i in 0..NVARS {
                s[i] |= m.0[i] > 0;
            }
        }
        s
    }

    /// Leading (largest) monomial in the lex order on exponent vectors.
    pub fn leading(&self) -> Option<(&Mono, &BigRat)> {
        self.terms.iter().next_back()
    }

    fn insert(&mut self, m: Mono, c: BigRat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
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

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert(*m, c.clone());
        }
        out
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert(*m, -c.clone());
        }
        out
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.insert(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn mul_mono(&self, m: &Mono, c: &BigRat) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m1, c1)| (m1.mul(m), c1 * c))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigRat) -> MultiPoly {
        self.mul_mono(&Mono::one(), c)
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut out = MultiPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                out = out.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        out
    }

    /// Exact division: `Some(h)` iff `self == other * h`.
    pub fn div_exact(&self, other: &MultiPoly) -> Option<MultiPoly> {
        assert!(!other.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(MultiPoly::zero());
        }
        let (lm, lc) = other.leading().unwrap();
        let mut rem = self.clone();
        let mut quo = MultiPoly::zero();
        while let Some((rm, rc)) = rem.leading() {
            let m = rm.div(lm)?;
            let c = rc / lc;
            quo.insert(m, c.clone());
            rem = rem.sub(&other.mul_mono(&m, &c));
        }
        Some(quo)
    }

    /// Evaluate at rational values for all variables.
    pub fn eval(&self, vals: &[BigRat; NVARS]) -> BigRat {
        let mut acc = BigRat::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for i in 0..NVARS {
                for _ in 0..m.0[i] {
                    t *= &vals[i];
                }
            }
            acc += t;
        }
        acc
    }

    /// Per-variable minimal exponent over all terms (monomial content).
    pub fn mono_content(&self) -> Mono {
        let mut it = self.terms.keys();
        let first = match it.next() {
            Some(m) => *m,
            None => return Mono::one(),
        };
        it.fold(first, |acc, m| acc.gcd(m))
    }

    /// Rational content: positive rational `c` such that `self / c` has
    /// coprime integer coefficients; the sign of the leading coefficient is
    /// absorbed so the primitive part has a positive leading coefficient.
    pub fn rat_content(&self) -> BigRat {
        use num_integer::Integer;
        if self.is_zero() {
            return BigRat::one();
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut content = BigRat::new(num_gcd, den_lcm);
        if self.leading().unwrap().1.is_negative() {
            content = -content;
        }
        content
    }

    /// Divide out the rational content; result has coprime integer
    /// coefficients and positive leading coefficient.
    pub fn primitive(&self) -> MultiPoly {
        if self.is_zero() {
            return MultiPoly::zero();
        }
        let c = self.rat_content();
        self.scale(&c.recip())
    }

    /// Greatest common divisor, normalized to be primitive with positive
    /// leading coefficient (and `gcd(0, g) = primitive(g)`).
    pub fn gcd(&self, other: &MultiPoly) -> MultiPoly {
        if self.is_zero() {
            return other.primitive();
        }
        if other.is_zero() {
            return self.primitive();
        }
        if self.is_constant() || other.is_constant() {
            return MultiPoly::one();
        }
        // common fast cases: equal inputs, monomials, nested divisors
        if self == other {
            return self.primitive();
        }
        if self.num_terms() == 1 || other.num_terms() == 1 {
            let shared = self.mono_content().gcd(&other.mono_content());
            return MultiPoly::monomial(shared, BigRat::one());
        }
        let small = self.num_terms() <= 8 && other.num_terms() <= 8;
        if small && self.div_exact(other).is_some() {
            return other.primitive();
        }
        if small && other.div_exact(self).is_some() {
            return self.primitive();
        }
        // Split off monomial content first so the recursion only sees
        // polynomials with trivial per-variable minimal exponents.
        let ma = self.mono_content();
        let mb = other.mono_content();
        let shared = ma.gcd(&mb);
        let a = self.div_exact(&MultiPoly::monomial(ma, BigRat::one())).unwrap();
        let b = other.div_exact(&MultiPoly::monomial(mb, BigRat::one())).unwrap();
        let core = gcd_primitive(&a.primitive(), &b.primitive());
        core.mul_mono(&shared, &BigRat::one())
    }
}

/// View a polynomial as univariate in `v` with `MultiPoly` coefficients.
fn coeffs_in(p: &MultiPoly, v: Var) -> BTreeMap<u32, MultiPoly> {
    let mut out: BTreeMap<u32, MultiPoly> = BTreeMap::new();
    for (m, c) in p.terms() {
        let e = m.0[v as usize];
        let mut rest = *m;
        rest.0[v as usize] = 0;
        out.entry(e)
            .or_insert_with(MultiPoly::zero)
            .insert(rest, c.clone());
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Content of `p` seen as univariate in `v`: gcd of its coefficients.
fn content_in(p: &MultiPoly, v: Var) -> MultiPoly {
    let mut acc = MultiPoly::zero();
    for c in coeffs_in(p, v).values() {
        acc = acc.gcd(c);
        if acc.is_one() {
            break;
        }
    }
    acc
}

/// Pseudo-remainder of `a` by `b`, both viewed as univariate in `v`.
fn pseudo_rem(a: &MultiPoly, b: &MultiPoly, v: Var) -> MultiPoly {
    let bc = coeffs_in(b, v);
    let (&db, blead) = bc.iter().next_back().unwrap();
    let blead = blead.clone();
    let blead_poly = blead.clone();
    let mut r = a.clone();
    loop {
        let rc = coeffs_in(&r, v);
        let (&dr, rlead) = match rc.iter().next_back() {
            Some(x) => x,
            None => return r,
        };
        if dr < db {
            return r;
        }
        let rlead = rlead.clone();
        // r <- blead * r - rlead * x^(dr-db) * b
        let shift = MultiPoly::monomial(Mono::var(v, dr - db), BigRat::one());
        r = r.mul(&blead_poly).sub(&b.mul(&rlead).mul(&shift));
    }
}

/// Primitive-PRS gcd for primitive inputs with trivial monomial content.
fn gcd_primitive(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    if a.is_constant() || b.is_constant() {
        return MultiPoly::one();
    }
    // Choose the main variable: the highest-index variable present in both;
    // if they share no variable the gcd is constant.
    let sa = a.support();
    let sb = b.support();
    let v = match (0..NVARS).rev().find(|&i| sa[i] && sb[i]) {
        Some(i) => Var::all()[i],
        None => return MultiPoly::one(),
    };
    let ca = content_in(a, v);
    let cb = content_in(b, v);
    let cont = ca.gcd(&cb);
    let pa = a.div_exact(&ca).unwrap();
    let pb = b.div_exact(&cb).unwrap();
    let (mut f, mut g) = if pa.degree(v) >= pb.degree(v) {
        (pa, pb)
    } else {
        (pb, pa)
    };
    loop {
        let r = pseudo_rem(&f, &g, v);
        if r.is_zero() {
            break;
        }
        if coeffs_in(&r, v).keys().next_back() == Some(&0) {
            // Nonzero remainder of degree zero in v: the gcd is constant in v.
            g = MultiPoly::one();
            break;
        }
        let rc = content_in(&r, v);
        f = g;
        g = r.div_exact(&rc).unwrap().primitive();
    }
    g.mul(&cont).primitive()
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        super::ratfun::fmt_terms(f, self.terms.iter().map(|(m, c)| (*m, c.clone())))
    }
}

impl Ord for MultiPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.terms
            .iter()
            .rev()
            .map(|(m, c)| (std::cmp::Reverse(*m), c))
            .cmp(
                other
                    .terms
                    .iter()
                    .rev()
                    .map(|(m, c)| (std::cmp::Reverse(*m), c)),
            )
    }
}

impl PartialOrd for MultiPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::rat;

    fn q() -> MultiPoly {
        MultiPoly::var(Var::Q)
    }

    fn s() -> MultiPoly {
        MultiPoly::var(Var::S)
    }

    #[test]
    fn arithmetic_basics() {
        let p = q().add(&MultiPoly::one()); // q + 1
        let sq = p.mul(&p);
        assert_eq!(sq.num_terms(), 3);
        assert_eq!(sq.degree(Var::Q), 2);
        assert!(p.sub(&p).is_zero());
        assert_eq!(p.pow(0), MultiPoly::one());
        assert_eq!(p.pow(3), p.mul(&p).mul(&p));
    }

    #[test]
    fn exact_division() {
        let p = q().add(&MultiPoly::one());
        let r = q().sub(&MultiPoly::one());
        let prod = p.mul(&r); // q^2 - 1
        assert_eq!(prod.div_exact(&p), Some(r.clone()));
        assert_eq!(prod.div_exact(&r), Some(p.clone()));
        assert_eq!(prod.div_exact(&q().add(&MultiPoly::constant(rat(2)))), None);
    }

    #[test]
    fn gcd_univariate() {
        let p = q().add(&MultiPoly::one());
        let r = q().sub(&MultiPoly::one());
        let a = p.mul(&p).mul(&r);
        let b = p.mul(&r).mul(&r);
        assert_eq!(a.gcd(&b), p.mul(&r));
    }

    #[test]
    fn gcd_handles_monomial_content() {
        // gcd(q^3 + q, q^2) = q
        let a = q().pow(3).add(&q());
        let b = q().pow(2);
        assert_eq!(a.gcd(&b), q());
    }

    #[test]
    fn gcd_bivariate() {
        // (q + s) is a common factor
        let common = q().add(&s());
        let a = common.mul(&q().add(&MultiPoly::one()));
        let b = common.mul(&s().add(&MultiPoly::constant(rat(2))));
        assert_eq!(a.gcd(&b), common);
        // coprime pair
        assert_eq!(q().add(&s()).gcd(&q().sub(&s())), MultiPoly::one());
    }

    #[test]
    fn gcd_normalization_is_primitive_positive() {
        let a = q().scale(&rat(-4));
        let b = q().mul(&q()).scale(&rat(6));
        assert_eq!(a.gcd(&b), q());
    }
}
