//! q-integers, q-factorials, the q-superfactorial and derangement counts.

use num_traits::Zero;

use super::{factorial, BigInt, RationalFunction};

/// `[n]_q = (q^n - q^-n)/(q - q^-1)`, a Laurent polynomial; `[0]_q = 0`.
pub fn q_int(n: usize) -> RationalFunction {
    let mut acc = RationalFunction::zero();
    // [n]_q = q^{n-1} + q^{n-3} + ... + q^{1-n}
    for k in 0..n {
        let e = (n as i64 - 1) - 2 * k as i64;
        acc = acc + RationalFunction::q().pow(e);
    }
    acc
}

/// `[n]_q! = [1]_q [2]_q ... [n]_q`; the empty product is 1.
pub fn q_factorial(n: usize) -> RationalFunction {
    let mut acc = RationalFunction::one();
    for k in 1..=n {
        acc = acc * q_int(k);
    }
    acc
}

/// `[n]_q^$ = [1]_q! [2]_q! ... [n]_q!`; the empty product is 1.
pub fn q_superfactorial(n: usize) -> RationalFunction {
    let mut acc = RationalFunction::one();
    for k in 1..=n {
        acc = acc * q_factorial(k);
    }
    acc
}

/// Derangement data for `S_n`: the derangement number `d_n` together with the
/// per-fixed-point counts `d_{n,j} = C(n,j) d_{n-j}` for `j = 0..=n`.
pub fn derangement_counts(n: usize) -> (BigInt, Vec<BigInt>) {
    let d = derangement(n);
    let per: Vec<BigInt> = (0..=n)
        .map(|j| super::binomial(n, j) * derangement(n - j))
        .collect();
    (d, per)
}

/// `d_n = n! * sum_{i=0}^n (-1)^i / i!`, computed in integers.
fn derangement(n: usize) -> BigInt {
    let mut acc = BigInt::zero();
    let nf = factorial(n);
    for i in 0..=n {
        let term = &nf / factorial(i);
        if i % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::rat;

    fn rf(s: &str) -> RationalFunction {
        RationalFunction::parse(s).unwrap()
    }

    #[test]
    fn q_int_examples() {
        assert_eq!(q_int(0), RationalFunction::zero());
        assert_eq!(q_int(2), rf("q + q^-1"));
        // expand the defining ratio independently
        let q = RationalFunction::q();
        let defining = (q.pow(3) - q.pow(-3)) / (q.pow(1) - q.pow(-1));
        assert_eq!(q_int(3), defining);
        assert_eq!(q_int(3), rf("q^2 + 1 + q^-2"));
    }

    #[test]
    fn q_factorial_examples() {
        assert_eq!(q_factorial(0), RationalFunction::one());
        assert_eq!(q_factorial(2), rf("q + q^-1"));
        assert_eq!(q_factorial(3), rf("(q + q^-1)*(q^2 + 1 + q^-2)"));
    }

    #[test]
    fn q_superfactorial_examples() {
        assert_eq!(q_superfactorial(1), RationalFunction::one());
        assert_eq!(q_superfactorial(2), rf("q + q^-1"));
        assert_eq!(
            q_superfactorial(3),
            rf("(q + q^-1)^2*(q^2 + 1 + q^-2)")
        );
    }

    #[test]
    fn q_analogues_specialize_at_one() {
        let at_one = [rat(1), rat(1), rat(1)];
        for n in 0..=12usize {
            assert_eq!(q_int(n).eval(&at_one).unwrap(), rat(n as i64));
            assert_eq!(
                q_factorial(n).eval(&at_one).unwrap(),
                crate::coeff::BigRat::from_integer(crate::coeff::factorial(n))
            );
        }
    }

    #[test]
    fn derangement_examples() {
        let (d1, per1) = derangement_counts(1);
        assert_eq!(d1, BigInt::from(0));
        assert_eq!(per1, vec![BigInt::from(0), BigInt::from(1)]);
        let (d4, per4) = derangement_counts(4);
        assert_eq!(d4, BigInt::from(9));
        assert_eq!(per4[2], BigInt::from(6));
    }

    #[test]
    fn derangements_sum_to_factorial() {
        for n in 0..=12usize {
            let (_, per) = derangement_counts(n);
            let total: BigInt = per.iter().sum();
            assert_eq!(total, factorial(n));
        }
    }

    /// Brute-force oracle: count permutations of S_n by number of fixed points.
    fn fixed_point_census(n: usize) -> Vec<BigInt> {
        fn perms(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(n - 1) {
                for k in 0..n {
                    let mut q = p.clone();
                    q.insert(k, n - 1);
                    out.push(q);
                }
            }
            out
        }
        let mut census = vec![BigInt::from(0); n + 1];
        for p in perms(n) {
            let fixed = p.iter().enumerate().filter(|(i, &v)| *i == v).count();
            census[fixed] += 1;
        }
        census
    }

    #[test]
    fn derangements_match_brute_force() {
        for n in 0..=7usize {
            let (_, per) = derangement_counts(n);
            assert_eq!(per, fixed_point_census(n), "n = {n}");
        }
    }
}
