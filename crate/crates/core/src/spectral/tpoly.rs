//! Univariate polynomials in an abstract indeterminate `t` with
//! rational-function coefficients; just enough arithmetic for minimal
//! polynomials (monic division, gcd, lcm).

use crate::coeff::RationalFunction;

/// Coefficients ascending in degree; no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TPoly(Vec<RationalFunction>);

impl TPoly {
    pub fn new(mut coeffs: Vec<RationalFunction>) -> Self {
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        TPoly(coeffs)
    }

    pub fn zero() -> Self {
        TPoly(Vec::new())
    }

    pub fn one() -> Self {
        TPoly(vec![RationalFunction::one()])
    }

    /// `t - c`
    pub fn linear(c: &RationalFunction) -> Self {
        TPoly(vec![-c.clone(), RationalFunction::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[RationalFunction] {
        &self.0
    }

    pub fn coeff(&self, k: usize) -> RationalFunction {
        self.0.get(k).cloned().unwrap_or_else(RationalFunction::zero)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let lead = self.0.last().unwrap().recip();
        TPoly(self.0.iter().map(|c| c * &lead).collect())
    }

    pub fn mul(&self, other: &TPoly) -> TPoly {
        if self.is_zero() || other.is_zero() {
            return TPoly::zero();
        }
        let mut out = vec![RationalFunction::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        TPoly::new(out)
    }

    pub fn sub(&self, other: &TPoly) -> TPoly {
        let len = self.0.len().max(other.0.len());
        let mut out = Vec::with_capacity(len);
        for k in 0..len {
            out.push(&self.coeff(k) - &other.coeff(k));
        }
        TPoly::new(out)
    }

    /// Euclidean division by a nonzero divisor: `(quotient, remainder)`.
    pub fn divmod(&self, d: &TPoly) -> (TPoly, TPoly) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let mut rem = self.clone();
        let mut quo = vec![RationalFunction::zero(); self.0.len().saturating_sub(d.0.len() - 1)];
        let dlead = d.0.last().unwrap();
        while !rem.is_zero() && rem.degree() >= d.degree() && !(rem.degree() == 0 && d.degree() > 0)
        {
            if rem.0.len() < d.0.len() {
                break;
            }
            let shift = rem.0.len() - d.0.len();
            let factor = rem.0.last().unwrap() / dlead;
            quo[shift] = &quo[shift] + &factor;
            let mut sub = vec![RationalFunction::zero(); shift];
            sub.extend(d.0.iter().map(|c| c * &factor));
            rem = rem.sub(&TPoly::new(sub));
        }
        (TPoly::new(quo), rem)
    }

    pub fn divides(&self, other: &TPoly) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.divmod(self).1.is_zero()
    }

    pub fn gcd(&self, other: &TPoly) -> TPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.divmod(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn lcm(&self, other: &TPoly) -> TPoly {
        if self.is_zero() || other.is_zero() {
            return TPoly::zero();
        }
        let g = self.gcd(other);
        self.mul(other).divmod(&g).0.monic()
    }

    /// Evaluate on a square matrix (Horner), as `sum c_k M^k`.
    pub fn eval_matrix(&self, m: &crate::matrix::Matrix) -> crate::matrix::Matrix {
        use crate::matrix::Matrix;
        let n = m.rows();
        let mut acc = Matrix::zeros(n, n);
        for c in self.0.iter().rev() {
            acc = &(&acc * m) + &Matrix::identity(n).scale(c);
        }
        acc
    }
}

impl std::fmt::Display for TPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*t")?,
                _ => write!(f, "({c})*t^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(s: &str) -> RationalFunction {
        RationalFunction::parse(s).unwrap()
    }

    #[test]
    fn division_and_gcd() {
        // (t - q)(t + q) = t^2 - q^2
        let a = TPoly::linear(&rf("q")).mul(&TPoly::linear(&rf("-q")));
        assert_eq!(a.coeff(0), rf("-q^2"));
        assert!(TPoly::linear(&rf("q")).divides(&a));
        let g = a.gcd(&TPoly::linear(&rf("q")));
        assert_eq!(g, TPoly::linear(&rf("q")));
        let (quo, rem) = a.divmod(&TPoly::linear(&rf("q")));
        assert!(rem.is_zero());
        assert_eq!(quo, TPoly::linear(&rf("-q")));
    }

    #[test]
    fn lcm_of_coprime_linears() {
        let a = TPoly::linear(&rf("q"));
        let b = TPoly::linear(&rf("q^2"));
        let l = a.lcm(&b);
        assert_eq!(l.degree(), 2);
        assert!(a.divides(&l) && b.divides(&l));
        assert_eq!(a.lcm(&a), a.monic());
    }
}
