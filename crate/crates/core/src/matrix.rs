//! Dense exact matrices over the rational-function field.  Desk-scale sizes
//! only; everything is computed without any floating point.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use crate::coeff::RationalFunction;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<RationalFunction>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![RationalFunction::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, RationalFunction::one());
        }
        m
    }

    pub fn from_fn<F>(rows: usize, cols: usize, mut f: F) -> Self
    where
        F: FnMut(usize, usize) -> RationalFunction,
    {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &RationalFunction {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: RationalFunction) {
        self.data[r * self.cols + c] = v;
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    let e = self.get(r, c);
                    if r == c {
                        e.is_one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| e.is_zero())
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn scale(&self, k: &RationalFunction) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|e| e * k).collect(),
        }
    }

    pub fn trace(&self) -> RationalFunction {
        assert_eq!(self.rows, self.cols);
        let mut acc = RationalFunction::zero();
        for i in 0..self.rows {
            acc = acc + self.get(i, i).clone();
        }
        acc
    }

    pub fn mul_vec(&self, v: &[RationalFunction]) -> Vec<RationalFunction> {
        assert_eq!(self.cols, v.len());
        let mut out = vec![RationalFunction::zero(); self.rows];
        for r in 0..self.rows {
            let mut acc = RationalFunction::zero();
            for c in 0..self.cols {
                let a = self.get(r, c);
                if a.is_zero() || v[c].is_zero() {
                    continue;
                }
                acc = acc + a * &v[c];
            }
            out[r] = acc;
        }
        out
    }

    /// Exact rank by Gaussian elimination over the fraction field.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut rank = 0;
        let mut row = 0;
        for col in 0..m.cols {
            // pick the structurally smallest nonzero pivot to limit blowup
            let pivot = (row..m.rows)
                .filter(|&r| !m.get(r, col).is_zero())
                .min_by_key(|&r| {
                    let e = m.get(r, col);
                    e.num().num_terms() + e.den().num_terms()
                });
            let Some(p) = pivot else { continue };
            m.swap_rows(row, p);
            let inv = m.get(row, col).recip();
            for c in col..m.cols {
                let v = m.get(row, c) * &inv;
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r != row && !m.get(r, col).is_zero() {
                    let factor = m.get(r, col).clone();
                    for c in col..m.cols {
                        let v = m.get(r, c) - &(m.get(row, c) * &factor);
                        m.set(r, c, v);
                    }
                }
            }
            rank += 1;
            row += 1;
            if row == m.rows {
                break;
            }
        }
        rank
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Solve `self * x = b` exactly; `None` when inconsistent.  When the
    /// system is underdetermined the free variables are set to zero.
    pub fn solve(&self, b: &[RationalFunction]) -> Option<Vec<RationalFunction>> {
        assert_eq!(self.rows, b.len());
        let mut m = self.clone();
        let mut rhs = b.to_vec();
        let mut pivots: Vec<(usize, usize)> = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            let pivot = (row..m.rows)
                .filter(|&r| !m.get(r, col).is_zero())
                .min_by_key(|&r| {
                    let e = m.get(r, col);
                    e.num().num_terms() + e.den().num_terms()
                });
            let Some(p) = pivot else { continue };
            m.swap_rows(row, p);
            rhs.swap(row, p);
            let inv = m.get(row, col).recip();
            for c in col..m.cols {
                let v = m.get(row, c) * &inv;
                m.set(row, c, v);
            }
            rhs[row] = &rhs[row] * &inv;
            for r in 0..m.rows {
                if r != row && !m.get(r, col).is_zero() {
                    let factor = m.get(r, col).clone();
                    for c in col..m.cols {
                        let v = m.get(r, c) - &(m.get(row, c) * &factor);
                        m.set(r, c, v);
                    }
                    rhs[r] = &rhs[r] - &(&rhs[row] * &factor);
                }
            }
            pivots.push((row, col));
            row += 1;
            if row == m.rows {
                break;
            }
        }
        // consistency: zero rows must have zero rhs
        for r in row..m.rows {
            if !rhs[r].is_zero() {
                return None;
            }
        }
        let mut x = vec![RationalFunction::zero(); self.cols];
        for (r, c) in pivots {
            x[c] = rhs[r].clone();
        }
        Some(x)
    }

    /// Exact inverse; `None` for singular matrices.
    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut m = self.clone();
        let mut inv = Matrix::identity(n);
        for col in 0..n {
            let pivot = (col..n)
                .filter(|&r| !m.get(r, col).is_zero())
                .min_by_key(|&r| {
                    let e = m.get(r, col);
                    e.num().num_terms() + e.den().num_terms()
                })?;
            m.swap_rows(col, pivot);
            inv.swap_rows(col, pivot);
            let scale = m.get(col, col).recip();
            for c in 0..n {
                let v = m.get(col, c) * &scale;
                m.set(col, c, v);
                let v = inv.get(col, c) * &scale;
                inv.set(col, c, v);
            }
            for r in 0..n {
                if r != col && !m.get(r, col).is_zero() {
                    let factor = m.get(r, col).clone();
                    for c in 0..n {
                        let v = m.get(r, c) - &(m.get(col, c) * &factor);
                        m.set(r, c, v);
                        let v = inv.get(r, c) - &(inv.get(col, c) * &factor);
                        inv.set(r, c, v);
                    }
                }
            }
        }
        Some(inv)
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(r, c) + &(a * b);
                    out.set(r, c, v);
                }
            }
        }
        out
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
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

    fn m2(a: &str, b: &str, c: &str, d: &str) -> Matrix {
        let vals = [rf(a), rf(b), rf(c), rf(d)];
        Matrix::from_fn(2, 2, |r, c| vals[2 * r + c].clone())
    }

    #[test]
    fn mul_and_identity() {
        let a = m2("q", "1", "0", "q^-1");
        let id = Matrix::identity(2);
        assert_eq!(&a * &id, a);
        assert_eq!(&id * &a, a);
    }

    #[test]
    fn rank_and_inverse() {
        let a = m2("q", "1", "1", "q^-1");
        assert_eq!(a.rank(), 1); // rows proportional
        let b = m2("q", "1", "1", "q");
        assert_eq!(b.rank(), 2);
        let binv = b.inverse().unwrap();
        assert!((&b * &binv).is_identity());
        assert!(a.inverse().is_none());
    }

    #[test]
    fn solve_exact() {
        let b = m2("q", "1", "1", "q");
        let rhs = vec![rf("q^2 + 1"), rf("2*q")];
        let x = b.solve(&rhs).unwrap();
        assert_eq!(x, vec![rf("q"), rf("1")]);
        // inconsistent system
        let a = m2("1", "1", "1", "1");
        assert!(a.solve(&[rf("0"), rf("1")]).is_none());
    }
}
