//! Dense operators on tensor powers `V^{tensor n}` with exact entries.

use crate::coeff::RationalFunction;
use crate::matrix::Matrix;

/// An operator on `V^{tensor degree}` with `dim V = local_dim`.  Basis
/// vectors are indexed with the first tensor factor most significant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperatorMatrix {
    local_dim: usize,
    degree: usize,
    mat: Matrix,
}

impl OperatorMatrix {
    pub fn new(local_dim: usize, degree: usize, mat: Matrix) -> Self {
        let dim = local_dim.pow(degree as u32);
        assert_eq!(mat.rows(), dim, "row count inconsistent with degree");
        assert_eq!(mat.cols(), dim, "column count inconsistent with degree");
        OperatorMatrix {
            local_dim,
            degree,
            mat,
        }
    }

    pub fn identity(local_dim: usize, degree: usize) -> Self {
        Self::new(
            local_dim,
            degree,
            Matrix::identity(local_dim.pow(degree as u32)),
        )
    }

    pub fn local_dim(&self) -> usize {
        self.local_dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn matrix(&self) -> &Matrix {
        &self.mat
    }

    pub fn dim(&self) -> usize {
        self.mat.rows()
    }

    pub fn is_identity(&self) -> bool {
        self.mat.is_identity()
    }

    pub fn is_zero(&self) -> bool {
        self.mat.is_zero()
    }

    /// Place a two-site operator (an `N^2 x N^2` matrix) at tensor positions
    /// `(pos, pos+1)`, `1 <= pos <= degree-1`.
    pub fn two_site(x: &Matrix, local_dim: usize, degree: usize, pos: usize) -> Self {
        assert!(pos >= 1 && pos + 1 <= degree, "position out of range");
        assert_eq!(x.rows(), local_dim * local_dim);
        assert_eq!(x.cols(), local_dim * local_dim);
        Self::pair_site(x, local_dim, degree, pos, pos + 1)
    }

    /// Place a two-site operator at the (ordered) pair of tensor positions
    /// `(i, j)` with `i < j`; the first matrix index of `x` acts on site `i`.
    pub fn pair_site(x: &Matrix, local_dim: usize, degree: usize, i: usize, j: usize) -> Self {
        assert!(i >= 1 && i < j && j <= degree, "positions out of range");
        let n = local_dim;
        let dim = n.pow(degree as u32);
        let mut mat = Matrix::zeros(dim, dim);
        // strides for digit positions (1-based, first factor most significant)
        let stride = |p: usize| n.pow((degree - p) as u32);
        let si = stride(i);
        let sj = stride(j);
        // enumerate the "context": all digits except positions i and j
        let context_count = dim / (n * n);
        for ctx in 0..context_count {
            // spread ctx digits into a base index with zeros at i and j
            let mut rem = ctx;
            let mut base = 0usize;
            for p in (1..=degree).rev() {
                if p == i || p == j {
                    continue;
                }
                let d = rem % n;
                rem /= n;
                base += d * stride(p);
            }
            for (r, c) in nonzero_entries(x) {
                let (ai, aj) = (r / n, r % n);
                let (bi, bj) = (c / n, c % n);
                let row = base + ai * si + aj * sj;
                let col = base + bi * si + bj * sj;
                mat.set(row, col, x.get(r, c).clone());
            }
        }
        Self::new(local_dim, degree, mat)
    }

    /// `X^{up l}`: the operator `Id^{tensor l} tensor X` on degree + l sites.
    pub fn shift_up(&self, l: usize) -> Self {
        if l == 0 {
            return self.clone();
        }
        let n = self.local_dim;
        let degree = self.degree + l;
        let outer = n.pow(l as u32);
        let inner = self.dim();
        let mut mat = Matrix::zeros(outer * inner, outer * inner);
        for b in 0..outer {
            for r in 0..inner {
                for c in 0..inner {
                    let v = self.mat.get(r, c);
                    if !v.is_zero() {
                        mat.set(b * inner + r, b * inner + c, v.clone());
                    }
                }
            }
        }
        Self::new(n, degree, mat)
    }

    /// `X tensor Id^{tensor l}` on degree + l sites.
    pub fn pad(&self, l: usize) -> Self {
        if l == 0 {
            return self.clone();
        }
        let n = self.local_dim;
        let degree = self.degree + l;
        let outer = n.pow(l as u32);
        let inner = self.dim();
        let mut mat = Matrix::zeros(inner * outer, inner * outer);
        for r in 0..inner {
            for c in 0..inner {
                let v = self.mat.get(r, c);
                if v.is_zero() {
                    continue;
                }
                for b in 0..outer {
                    mat.set(r * outer + b, c * outer + b, v.clone());
                }
            }
        }
        Self::new(n, degree, mat)
    }

    pub fn compose(&self, other: &OperatorMatrix) -> OperatorMatrix {
        assert_eq!(self.local_dim, other.local_dim);
        assert_eq!(self.degree, other.degree);
        OperatorMatrix {
            local_dim: self.local_dim,
            degree: self.degree,
            mat: &self.mat * &other.mat,
        }
    }

    pub fn add(&self, other: &OperatorMatrix) -> OperatorMatrix {
        assert_eq!(self.local_dim, other.local_dim);
        assert_eq!(self.degree, other.degree);
        OperatorMatrix {
            local_dim: self.local_dim,
            degree: self.degree,
            mat: &self.mat + &other.mat,
        }
    }

    pub fn sub(&self, other: &OperatorMatrix) -> OperatorMatrix {
        assert_eq!(self.local_dim, other.local_dim);
        assert_eq!(self.degree, other.degree);
        OperatorMatrix {
            local_dim: self.local_dim,
            degree: self.degree,
            mat: &self.mat - &other.mat,
        }
    }

    pub fn scale(&self, k: &RationalFunction) -> OperatorMatrix {
        OperatorMatrix {
            local_dim: self.local_dim,
            degree: self.degree,
            mat: self.mat.scale(k),
        }
    }

    pub fn transpose(&self) -> OperatorMatrix {
        OperatorMatrix {
            local_dim: self.local_dim,
            degree: self.degree,
            mat: self.mat.transpose(),
        }
    }

    pub fn inverse(&self) -> Option<OperatorMatrix> {
        Some(OperatorMatrix {
            local_dim: self.local_dim,
            degree: self.degree,
            mat: self.mat.inverse()?,
        })
    }

    pub fn apply(&self, v: &[RationalFunction]) -> Vec<RationalFunction> {
        self.mat.mul_vec(v)
    }

    pub fn map_entries<F>(&self, f: F) -> OperatorMatrix
    where
        F: Fn(&RationalFunction) -> RationalFunction,
    {
        let mat = Matrix::from_fn(self.mat.rows(), self.mat.cols(), |r, c| f(self.mat.get(r, c)));
        OperatorMatrix {
            local_dim: self.local_dim,
            degree: self.degree,
            mat,
        }
    }
}

fn nonzero_entries(m: &Matrix) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            if !m.get(r, c).is_zero() {
                out.push((r, c));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(s: &str) -> RationalFunction {
        RationalFunction::parse(s).unwrap()
    }

    /// The flip on V tensor V for N = 2.
    fn flip2() -> Matrix {
        let mut p = Matrix::zeros(4, 4);
        p.set(0, 0, rf("1"));
        p.set(1, 2, rf("1"));
        p.set(2, 1, rf("1"));
        p.set(3, 3, rf("1"));
        p
    }

    #[test]
    fn two_site_placement_and_shift_agree() {
        let p = flip2();
        let at2 = OperatorMatrix::two_site(&p, 2, 3, 2);
        let shifted = OperatorMatrix::new(2, 2, p.clone()).shift_up(1);
        assert_eq!(at2, shifted);
        let at1 = OperatorMatrix::two_site(&p, 2, 3, 1);
        let padded = OperatorMatrix::new(2, 2, p).pad(1);
        assert_eq!(at1, padded);
    }

    #[test]
    fn pair_site_far_apart() {
        // flip at sites (1,3) of degree 3 maps e_i e_j e_k to e_k e_j e_i
        let op = OperatorMatrix::pair_site(&flip2(), 2, 3, 1, 3);
        let mut v = vec![rf("0"); 8];
        v[0b100] = rf("1"); // e_1 e_0 e_0
        let w = op.apply(&v);
        assert_eq!(w[0b001], rf("1")); // e_0 e_0 e_1
        assert!(w.iter().enumerate().all(|(i, x)| (i == 1) == !x.is_zero()));
    }

    #[test]
    fn flips_satisfy_braid_relation() {
        let p1 = OperatorMatrix::two_site(&flip2(), 2, 3, 1);
        let p2 = OperatorMatrix::two_site(&flip2(), 2, 3, 2);
        let lhs = p1.compose(&p2).compose(&p1);
        let rhs = p2.compose(&p1).compose(&p2);
        assert_eq!(lhs, rhs);
        assert!(p1.compose(&p1).is_identity());
    }
}
