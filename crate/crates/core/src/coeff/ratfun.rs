//! Rational functions in `q`, `s`, `nu` kept in a unique canonical form:
//! numerator and denominator are coprime polynomials and the denominator's
//! leading coefficient (lex order) is 1, so structural equality is field
//! equality.  Laurent monomials such as `q^-1` are the fractions `1/q`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use super::poly::{Mono, MultiPoly, Var, NVARS};
use super::{BigRat, ParseError};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: MultiPoly,
    den: MultiPoly,
}

impl RationalFunction {
    fn make(num: MultiPoly, den: MultiPoly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return RationalFunction {
                num: MultiPoly::zero(),
                den: MultiPoly::one(),
            };
        }
        if den.is_one() {
            return RationalFunction {
                num,
                den,
            };
        }
        // monomial denominator: reduce by the shared monomial and normalize
        // the leading coefficient, no polynomial gcd needed
        if den.num_terms() == 1 {
            let (dm, dc) = den.leading().expect("nonzero");
            let shared = num.mono_content().gcd(dm);
            let dm = dm.div(&shared).expect("gcd divides");
            let scale = dc.recip();
            let num = num
                .div_exact(&MultiPoly::monomial(shared, BigRat::one()))
                .expect("monomial content divides")
                .scale(&scale);
            return RationalFunction {
                num,
                den: MultiPoly::monomial(dm, BigRat::one()),
            };
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap())
        };
        let lead = den.leading().unwrap().1.clone();
        if !lead.is_one() {
            let inv = lead.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        RationalFunction { num, den }
    }

    pub fn zero() -> Self {
        RationalFunction {
            num: MultiPoly::zero(),
            den: MultiPoly::one(),
        }
    }

    pub fn one() -> Self {
        RationalFunction {
            num: MultiPoly::one(),
            den: MultiPoly::one(),
        }
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        RationalFunction {
            num: p,
            den: MultiPoly::one(),
        }
    }

    pub fn from_rat(c: BigRat) -> Self {
        Self::from_poly(MultiPoly::constant(c))
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rat(super::rat(n))
    }

    pub fn fraction(num: MultiPoly, den: MultiPoly) -> Self {
        Self::make(num, den)
    }

    /// The variable `v` as a rational function.
    pub fn var(v: Var) -> Self {
        Self::from_poly(MultiPoly::var(v))
    }

    pub fn q() -> Self {
        Self::var(Var::Q)
    }

    pub fn s() -> Self {
        Self::var(Var::S)
    }

    pub fn nu() -> Self {
        Self::var(Var::Nu)
    }

    /// `v^e` for a possibly negative exponent.
    pub fn var_pow(v: Var, e: i64) -> Self {
        Self::var(v).pow(e)
    }

    pub fn num(&self) -> &MultiPoly {
        &self.num
    }

    pub fn den(&self) -> &MultiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn as_rat(&self) -> Option<BigRat> {
        let n = self.num.as_constant()?;
        let d = self.den.as_constant()?;
        Some(n / d)
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        Self::make(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, e: i64) -> Self {
        if e == 0 {
            return Self::one();
        }
        let base = if e < 0 { self.recip() } else { self.clone() };
        let e = e.unsigned_abs() as u32;
        RationalFunction {
            num: base.num.pow(e),
            den: base.den.pow(e),
        }
    }

    /// Evaluate at rational values; `None` when the denominator vanishes.
    pub fn eval(&self, vals: &[BigRat; NVARS]) -> Option<BigRat> {
        let d = self.den.eval(vals);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(vals) / d)
    }

    /// Substitute a rational function for one variable.
    pub fn subst(&self, v: Var, value: &RationalFunction) -> Self {
        subst_poly(&self.num, v, value) / subst_poly(&self.den, v, value)
    }

    /// The coefficient-field endomorphism `q -> -q^{-1}` (used to turn
    /// symmetrizers into antisymmetrizers).  Termwise: the exponent `e` of
    /// `q` becomes `-e` with a sign `(-1)^e`.
    pub fn flip_q(&self) -> Self {
        fn flip_poly(p: &MultiPoly) -> (MultiPoly, u32) {
            let d = p.degree(Var::Q);
            let mut out = MultiPoly::zero();
            for (m, c) in p.terms() {
                let e = m.0[Var::Q as usize];
                let mut fm = *m;
                fm.0[Var::Q as usize] = d - e;
                let fc = if e % 2 == 0 { c.clone() } else { -c.clone() };
                out.insert_term(fm, fc);
            }
            (out, d)
        }
        let (fnum, dn) = flip_poly(&self.num);
        let (fden, dd) = flip_poly(&self.den);
        // num/den -> (fnum/q^dn)/(fden/q^dd) = fnum q^dd / (fden q^dn)
        RationalFunction::make(
            fnum.mul_mono(&Mono::var(Var::Q, dd), &BigRat::one()),
            fden.mul_mono(&Mono::var(Var::Q, dn), &BigRat::one()),
        )
    }

    pub fn parse(input: &str) -> Result<Self, ParseError> {
        super::parse::parse(input)
    }
}

fn subst_poly(p: &MultiPoly, v: Var, value: &RationalFunction) -> RationalFunction {
    // Horner in v: collect coefficients of v^k, fold from the top degree.
    let mut coeffs: Vec<(u32, RationalFunction)> = Vec::new();
    let mut by_deg: std::collections::BTreeMap<u32, MultiPoly> = std::collections::BTreeMap::new();
    for (m, c) in p.terms() {
        let e = m.0[v as usize];
        let mut rest = *m;
        rest.0[v as usize] = 0;
        by_deg
            .entry(e)
            .or_insert_with(MultiPoly::zero)
            .insert_term(rest, c.clone());
    }
    for (e, c) in by_deg {
        coeffs.push((e, RationalFunction::from_poly(c)));
    }
    let mut acc = RationalFunction::zero();
    let mut prev_deg: Option<u32> = None;
    for (e, c) in coeffs.into_iter().rev() {
        if let Some(pd) = prev_deg {
            acc = acc * value.pow((pd - e) as i64);
        }
        acc = acc + c;
        prev_deg = Some(e);
    }
    if let Some(pd) = prev_deg {
        acc = acc * value.pow(pd as i64);
    }
    acc
}

impl MultiPoly {
    /// Add a single term; used by coefficient-collection loops.
    pub(crate) fn insert_term(&mut self, m: Mono, c: BigRat) {
        let add = MultiPoly::monomial(m, c);
        *self = self.add(&add);
    }
}

impl Add for RationalFunction {
    type Output = RationalFunction;
    fn add(self, other: Self) -> Self {
        &self + &other
    }
}

impl<'a> Add<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn add(self, other: &RationalFunction) -> RationalFunction {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return RationalFunction::make(self.num.add(&other.num), self.den.clone());
        }
        let g = self.den.gcd(&other.den);
        let da = self.den.div_exact(&g).unwrap();
        let db = other.den.div_exact(&g).unwrap();
        let num = self.num.mul(&db).add(&other.num.mul(&da));
        let den = self.den.mul(&db);
        RationalFunction::make(num, den)
    }
}

impl Sub for RationalFunction {
    type Output = RationalFunction;
    fn sub(self, other: Self) -> Self {
        &self + &(-other)
    }
}

impl<'a> Sub<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn sub(self, other: &RationalFunction) -> RationalFunction {
        self + &(-other.clone())
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> Self {
        RationalFunction {
            num: self.num.neg(),
            den: self.den,
        }
    }
}

impl Mul for RationalFunction {
    type Output = RationalFunction;
    fn mul(self, other: Self) -> Self {
        &self * &other
    }
}

impl<'a> Mul<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn mul(self, other: &RationalFunction) -> RationalFunction {
        if self.is_zero() || other.is_zero() {
            return RationalFunction::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            return RationalFunction {
                num: self.num.mul(&other.num),
                den: MultiPoly::one(),
            };
        }
        // Cross-reduce before multiplying to keep the gcd calls small.
        let g1 = if other.den.is_one() {
            MultiPoly::one()
        } else {
            self.num.gcd(&other.den)
        };
        let g2 = if self.den.is_one() {
            MultiPoly::one()
        } else {
            other.num.gcd(&self.den)
        };
        let n1 = if g1.is_one() { self.num.clone() } else { self.num.div_exact(&g1).unwrap() };
        let d2 = if g1.is_one() { other.den.clone() } else { other.den.div_exact(&g1).unwrap() };
        let n2 = if g2.is_one() { other.num.clone() } else { other.num.div_exact(&g2).unwrap() };
        let d1 = if g2.is_one() { self.den.clone() } else { self.den.div_exact(&g2).unwrap() };
        RationalFunction::make(n1.mul(&n2), d1.mul(&d2))
    }
}

impl Div for RationalFunction {
    type Output = RationalFunction;
    fn div(self, other: Self) -> Self {
        &self * &other.recip()
    }
}

impl<'a> Div<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn div(self, other: &RationalFunction) -> RationalFunction {
        self * &other.recip()
    }
}

impl Zero for RationalFunction {
    fn zero() -> Self {
        RationalFunction::zero()
    }
    fn is_zero(&self) -> bool {
        RationalFunction::is_zero(self)
    }
}

impl One for RationalFunction {
    fn one() -> Self {
        RationalFunction::one()
    }
}

impl FromStr for RationalFunction {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        RationalFunction::parse(s)
    }
}

impl Ord for RationalFunction {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.num, &self.den).cmp(&(&other.num, &other.den))
    }
}

impl PartialOrd for RationalFunction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Render a term list in the external grammar (descending lex monomials,
/// `^` exponents, explicit `*`).  Shared by the polynomial and the
/// rational-function displays.
pub(crate) fn fmt_terms<I>(f: &mut fmt::Formatter<'_>, terms: I) -> fmt::Result
where
    I: Iterator<Item = (Mono, BigRat)>,
{
    // Signed exponents: monomials may carry negative entries when a
    // denominator monomial has been folded in.
    fmt_signed_terms(
        f,
        terms.map(|(m, c)| ([m.0[0] as i64, m.0[1] as i64, m.0[2] as i64], c)),
    )
}

pub(crate) fn fmt_signed_terms<I>(f: &mut fmt::Formatter<'_>, terms: I) -> fmt::Result
where
    I: Iterator<Item = ([i64; NVARS], BigRat)>,
{
    let mut items: Vec<([i64; NVARS], BigRat)> = terms.collect();
    if items.is_empty() {
        return write!(f, "0");
    }
    items.sort_by(|a, b| b.0.cmp(&a.0));
    for (i, (m, c)) in items.into_iter().enumerate() {
        let neg = c.is_negative();
        let mag = c.abs();
        if i == 0 {
            if neg {
                write!(f, "-")?;
            }
        } else if neg {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        let mut parts: Vec<String> = Vec::new();
        if !mag.is_one() || m.iter().all(|&e| e == 0) {
            if mag.denom().is_one() {
                parts.push(mag.numer().to_string());
            } else {
                parts.push(format!("{}/{}", mag.numer(), mag.denom()));
            }
        }
        for (idx, &e) in m.iter().enumerate() {
            if e != 0 {
                let name = Var::all()[idx].name();
                if e == 1 {
                    parts.push(name.to_string());
                } else {
                    parts.push(format!("{}^{}", name, e));
                }
            }
        }
        write!(f, "{}", parts.join("*"))?;
    }
    Ok(())
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        // A monomial denominator folds into Laurent-style terms.
        if self.den.num_terms() == 1 {
            let (dm, dc) = self.den.leading().unwrap();
            let dm = *dm;
            let dc = dc.clone();
            return fmt_signed_terms(
                f,
                self.num.terms().map(move |(m, c)| {
                    let e = [
                        m.0[0] as i64 - dm.0[0] as i64,
                        m.0[1] as i64 - dm.0[1] as i64,
                        m.0[2] as i64 - dm.0[2] as i64,
                    ];
                    (e, c / &dc)
                }),
            );
        }
        write!(f, "({})/({})", self.num, self.den)
    }
}

/// Serialize as the grammar string (used by the JSON matrix files).
impl serde::Serialize for RationalFunction {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for RationalFunction {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let s = String::deserialize(de)?;
        RationalFunction::parse(&s).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::rat;

    fn rf(s: &str) -> RationalFunction {
        RationalFunction::parse(s).unwrap()
    }

    #[test]
    fn canonical_form_is_unique() {
        // (q^2-1)/(q-1) reduces to q+1
        let a = rf("(q^2 - 1)/(q - 1)");
        assert_eq!(a, rf("q + 1"));
        // scaling numerator and denominator does not change the value
        let b = rf("(2*q^2 - 2)/(2*q - 2)");
        assert_eq!(a, b);
    }

    #[test]
    fn field_axioms_spot_checks() {
        let a = rf("q - q^-1");
        let b = rf("(q^2+1)/(q+q^-1)");
        assert_eq!(a.clone() * a.recip(), RationalFunction::one());
        assert_eq!(b.clone() * b.recip(), RationalFunction::one());
        let sum = &a + &b;
        assert_eq!(&sum - &b, a);
    }

    #[test]
    fn laurent_display_round_trips() {
        for src in [
            "q - q^-1",
            "q^2 + 1 + q^-2",
            "(q^2+1)/(q+q^-1)",
            "-1/2*q + 3",
            "nu^-1*q^2 - s",
            "0",
            "1",
            "(q^4 - q^2 + 1)/(q^2 + q + 1)",
        ] {
            let v = rf(src);
            let printed = v.to_string();
            assert_eq!(rf(&printed), v, "round trip failed for {src} -> {printed}");
        }
    }

    #[test]
    fn substitution() {
        // q -> -q^-1 on q + q^-1 gives -(q + q^-1)... check: -q^-1 + (-q) = -(q+q^-1)
        let a = rf("q + q^-1");
        assert_eq!(a.flip_q(), -a.clone());
        // s -> q in s^2 + s
        let b = rf("s^2 + s");
        assert_eq!(b.subst(Var::S, &RationalFunction::q()), rf("q^2 + q"));
    }

    #[test]
    fn eval() {
        let a = rf("(q^2+1)/(q+q^-1)"); // = q
        let vals = [rat(5), rat(1), rat(1)];
        assert_eq!(a.eval(&vals), Some(rat(5)));
        let b = rf("1/(q-1)");
        assert_eq!(b.eval(&[rat(1), rat(0), rat(0)]), None);
    }

    #[test]
    fn powers() {
        let q = RationalFunction::q();
        assert_eq!(q.pow(-2), rf("q^-2"));
        assert_eq!(q.pow(0), RationalFunction::one());
        assert_eq!(rf("q + 1").pow(2), rf("q^2 + 2*q + 1"));
    }
}
