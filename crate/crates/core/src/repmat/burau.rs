//! The (n+1)-dimensional Burau-type representation of `H_{n+1}(q)` in which
//! the baxterized generators take a tridiagonal block form.

use crate::coeff::{q_int, RationalFunction};
use crate::matrix::Matrix;

use super::{OperatorMatrix, RepError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BurauForm {
    /// The generator image `sigma_j` itself.
    Plain,
    /// The baxterized image `sigma_j(q^j)`.
    Baxterized,
}

/// The image of the `j`-th generator in the `(n+1)`-dimensional
/// representation: `sigma_j(q^j)` is `[j+1]_q` on the first `j-1` and last
/// `n-j` coordinates with the 2x2 block `[[q^-j, [j]_q], [[j]_q, q^j]]` in
/// the middle; the plain form recovers `sigma_j` by inverting the
/// baxterization at `x = q^j`.
pub fn burau_sigma(j: usize, n: usize, form: BurauForm) -> Result<OperatorMatrix, RepError> {
    if j < 1 || j > n {
        return Err(RepError::EntryOutOfRange(j, n));
    }
    let dim = n + 1;
    let q = RationalFunction::q();
    let mut mat = Matrix::zeros(dim, dim);
    let diag = q_int(j + 1);
    for k in 0..j - 1 {
        mat.set(k, k, diag.clone());
    }
    for k in j + 1..dim {
        mat.set(k, k, diag.clone());
    }
    mat.set(j - 1, j - 1, q.pow(-(j as i64)));
    mat.set(j - 1, j, q_int(j));
    mat.set(j, j - 1, q_int(j));
    mat.set(j, j, q.pow(j as i64));
    if let BurauForm::Plain = form {
        // sigma_j = (sigma_j(q^j) - q^-j) / [j]_q
        let shifted = &mat - &Matrix::identity(dim).scale(&q.pow(-(j as i64)));
        mat = shifted.scale(&q_int(j).recip());
    }
    Ok(OperatorMatrix::new(dim, 1, mat))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hecke::delta;

    fn rf(s: &str) -> RationalFunction {
        RationalFunction::parse(s).unwrap()
    }

    #[test]
    fn smallest_baxterized_block() {
        let b = burau_sigma(1, 1, BurauForm::Baxterized).unwrap();
        let m = b.matrix();
        assert_eq!(m.get(0, 0), &rf("q^-1"));
        assert_eq!(m.get(0, 1), &rf("1"));
        assert_eq!(m.get(1, 0), &rf("1"));
        assert_eq!(m.get(1, 1), &rf("q"));
    }

    #[test]
    fn block_plus_scalar_tail() {
        let b = burau_sigma(1, 2, BurauForm::Baxterized).unwrap();
        let m = b.matrix();
        assert_eq!(m.get(2, 2), &q_int(2));
        assert_eq!(m.get(0, 1), &rf("1"));
        assert!(m.get(2, 0).is_zero() && m.get(0, 2).is_zero());
    }

    #[test]
    fn plain_form_satisfies_hecke_and_braid_relations() {
        for n in 1..=8usize {
            let gens: Vec<Matrix> = (1..=n)
                .map(|j| burau_sigma(j, n, BurauForm::Plain).unwrap().matrix().clone())
                .collect();
            let id = Matrix::identity(n + 1);
            for g in &gens {
                // g^2 = (q - q^-1) g + 1
                assert_eq!(&(g * g), &(&g.scale(&delta()) + &id));
            }
            for j in 0..n.saturating_sub(1) {
                let (a, b) = (&gens[j], &gens[j + 1]);
                assert_eq!(&(&(a * b) * a), &(&(b * a) * b));
            }
            for j in 0..n {
                for k in j + 2..n {
                    assert_eq!(&(&gens[j] * &gens[k]), &(&gens[k] * &gens[j]));
                }
            }
        }
    }
}
