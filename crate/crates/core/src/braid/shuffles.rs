//! Shuffle and symmetrizer elements of the positive braid monoid ring.

use std::cell::RefCell;
use std::collections::HashMap;

use super::{BraidError, BraidRingElement, Permutation, PositiveWord};

thread_local! {
    static SHUFFLE_CACHE: RefCell<HashMap<(usize, usize), BraidRingElement>> =
        RefCell::new(HashMap::new());
    static SYMMETRIZER_CACHE: RefCell<HashMap<usize, BraidRingElement>> =
        RefCell::new(HashMap::new());
}

fn strands_of(m: usize, n: usize) -> usize {
    // Elements of Z B_k are built on at least one strand.
    (m + n).max(1)
}

/// Word `sigma_a sigma_{a-1} ... sigma_b` (descending); empty when `a < b`.
fn descending_run(strands: usize, a: usize, b: usize) -> PositiveWord {
    let letters: Vec<u8> = (b..=a).rev().map(|i| i as u8).collect();
    PositiveWord::new(strands, letters).expect("run indices in range")
}

/// Word `sigma_a sigma_{a+1} ... sigma_b` (ascending); empty when `a > b`.
fn ascending_run(strands: usize, a: usize, b: usize) -> PositiveWord {
    let letters: Vec<u8> = (a..=b).map(|i| i as u8).collect();
    PositiveWord::new(strands, letters).expect("run indices in range")
}

/// The braid binomial `Sha_{m,n}`: the sum of the permutation-braid lifts of
/// all `(m,n)`-shuffles, built by the first Pascal-type recurrence
/// `Sha_{m,n} = Sha_{m-1,n} + Sha_{m,n-1} sigma_{m+n-1} ... sigma_n` with
/// boundary `Sha_{0,n} = Sha_{n,0} = 1`.  Memoized per thread.
pub fn additive_shuffle(m: usize, n: usize) -> BraidRingElement {
    if let Some(hit) =
        SHUFFLE_CACHE.with(|c| c.borrow().get(&(m, n)).cloned())
    {
        return hit;
    }
    let strands = strands_of(m, n);
    let result = if m == 0 || n == 0 {
        BraidRingElement::one(strands)
    } else {
        let left = additive_shuffle(m - 1, n).embed(strands);
        let tail = BraidRingElement::from_word(&descending_run(strands, m + n - 1, n));
        let right = additive_shuffle(m, n - 1)
            .embed(strands)
            .multiply(&tail)
            .expect("same strand count");
        left.add(&right).expect("same strand count")
    };
    SHUFFLE_CACHE.with(|c| c.borrow_mut().insert((m, n), result.clone()));
    result
}

/// `Sha_{m,n}` by the second recurrence
/// `Sha_{m,n} = Sha_{m,n-1}^{up 1} + Sha_{m-1,n}^{up 1} sigma_1 ... sigma_n`;
/// kept separate so the two recurrences can be compared.
pub fn additive_shuffle_by_second_recurrence(m: usize, n: usize) -> BraidRingElement {
    let strands = strands_of(m, n);
    if m == 0 || n == 0 {
        return BraidRingElement::one(strands);
    }
    let left = additive_shuffle_by_second_recurrence(m, n - 1)
        .shift(1)
        .embed(strands);
    let run = BraidRingElement::from_word(&ascending_run(strands, 1, n));
    let right = additive_shuffle_by_second_recurrence(m - 1, n)
        .shift(1)
        .embed(strands)
        .multiply(&run)
        .expect("same strand count");
    left.add(&right).expect("same strand count")
}

/// The symmetrizer lift `Sigma_n`, built by iterating the factorization
/// `Sigma_{1+k} = Sha_{k,1} Sigma_k^{up 1}`; equals the sum of the lifts of
/// all of `S_n`.
pub fn lift_symmetrizer(n: usize) -> BraidRingElement {
    assert!(n >= 1);
    if let Some(hit) = SYMMETRIZER_CACHE.with(|c| c.borrow().get(&n).cloned()) {
        return hit;
    }
    let result = if n == 1 {
        BraidRingElement::one(1)
    } else {
        let prev = lift_symmetrizer(n - 1).shift(1);
        additive_shuffle(n - 1, 1)
            .multiply(&prev)
            .expect("same strand count")
    };
    SYMMETRIZER_CACHE.with(|c| c.borrow_mut().insert(n, result.clone()));
    result
}

/// The multiplicative shuffle `bar Sha_{m,n}`: a single positive word,
/// here from the row form
/// `(sigma_m ... sigma_{m+n-1})(sigma_{m-1} ... sigma_{m+n-2}) ... (sigma_1 ... sigma_n)`.
pub fn mult_shuffle(m: usize, n: usize) -> BraidRingElement {
    let strands = strands_of(m, n);
    let mut letters: Vec<u8> = Vec::new();
    for r in 0..m {
        // bracket r: ascending run from m-r to m-r+n-1
        for i in (m - r)..(m - r + n) {
            letters.push(i as u8);
        }
    }
    BraidRingElement::from_word(&PositiveWord::new(strands, letters).expect("indices in range"))
}

/// The column form
/// `(sigma_m ... sigma_1)(sigma_{m+1} ... sigma_2) ... (sigma_{m+n-1} ... sigma_n)`
/// of the same element.
pub fn mult_shuffle_descending(m: usize, n: usize) -> BraidRingElement {
    let strands = strands_of(m, n);
    let mut letters: Vec<u8> = Vec::new();
    for j in 0..n {
        for i in (j + 1..=m + j).rev() {
            letters.push(i as u8);
        }
    }
    BraidRingElement::from_word(&PositiveWord::new(strands, letters).expect("indices in range"))
}

/// The positive half twist `bar Sigma_n = (sigma_1 ... sigma_{n-1}) ... (sigma_1)`,
/// the lift of the longest element of `S_n`.
pub fn half_twist(n: usize) -> BraidRingElement {
    assert!(n >= 1);
    let mut letters: Vec<u8> = Vec::new();
    for k in (1..n).rev() {
        for i in 1..=k {
            letters.push(i as u8);
        }
    }
    BraidRingElement::from_word(&PositiveWord::new(n, letters).expect("indices in range"))
}

/// Sum of the permutation-braid lifts of a set of permutations; the
/// independent oracle for the shuffle and symmetrizer constructors.
pub fn sum_over_permutation_lifts<'a, I>(perms: I) -> Result<BraidRingElement, BraidError>
where
    I: IntoIterator<Item = &'a Permutation>,
{
    let mut out: Option<BraidRingElement> = None;
    for p in perms {
        let lift = BraidRingElement::permutation_lift(p);
        out = Some(match out {
            None => lift,
            Some(acc) => acc.add(&lift)?,
        });
    }
    Ok(out.unwrap_or_else(|| BraidRingElement::zero(1)))
}

/// All `(m,n)`-shuffle permutations: one-line notation increasing on the
/// first `n` positions and on the last `m` positions.
pub fn shuffle_permutations(m: usize, n: usize) -> Vec<Permutation> {
    let total = strands_of(m, n);
    let mut out = Vec::new();
    // choose the image set of the first n positions
    let mut subset: Vec<usize> = (0..n).collect();
    loop {
        let mut images: Vec<u8> = subset.iter().map(|&v| v as u8).collect();
        let mut rest: Vec<u8> = (0..(m + n) as u8)
            .filter(|v| !subset.contains(&(*v as usize)))
            .collect();
        images.append(&mut rest);
        images.extend((m + n) as u8..total as u8);
        out.push(Permutation::from_images(images).expect("constructed bijection"));
        // next n-subset of {0..m+n-1} in lexicographic order
        if n == 0 {
            break;
        }
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if subset[i] < m + n - (n - i) {
                subset[i] += 1;
                for j in i + 1..n {
                    subset[j] = subset[j - 1] + 1;
                }
                break;
            }
        }
    }
    out
}

/// Both sides of the trinomial identity
/// `Sha_{n+k,m} Sha_{k,n}^{up m} = Sha_{k,m+n} Sha_{n,m}`; returns the common
/// value and reports an internal inconsistency if the sides differ.
pub fn trinomial_shuffle(
    k: usize,
    n: usize,
    m: usize,
) -> Result<BraidRingElement, BraidError> {
    let strands = strands_of(m + n, k);
    let lhs = additive_shuffle(n + k, m)
        .embed(strands)
        .multiply(&additive_shuffle(k, n).shift_embedded(m, strands))?;
    let rhs = additive_shuffle(k, m + n)
        .embed(strands)
        .multiply(&additive_shuffle(n, m).embed(strands))?;
    if lhs != rhs {
        return Err(BraidError::InternalInconsistency(format!(
            "trinomial sides differ for k={k}, n={n}, m={m}"
        )));
    }
    Ok(lhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::NormalForm;
    use crate::coeff::{binomial, factorial, BigInt};

    fn word(n: usize, letters: &[u8]) -> BraidRingElement {
        BraidRingElement::from_word(&PositiveWord::new(n, letters.to_vec()).unwrap())
    }

    #[test]
    fn shuffle_boundary_and_small_cases() {
        assert_eq!(additive_shuffle(0, 5), BraidRingElement::one(5));
        assert_eq!(additive_shuffle(5, 0), BraidRingElement::one(5));
        let s11 = additive_shuffle(1, 1);
        assert_eq!(
            s11,
            BraidRingElement::one(2)
                .add(&BraidRingElement::generator(2, 1).unwrap())
                .unwrap()
        );
        let s12 = additive_shuffle(1, 2);
        let expected = BraidRingElement::one(3)
            .add(&word(3, &[2]))
            .unwrap()
            .add(&word(3, &[1, 2]))
            .unwrap();
        assert_eq!(s12, expected);
    }

    #[test]
    fn both_recurrences_agree() {
        for m in 0..=4 {
            for n in 0..=4 {
                assert_eq!(
                    additive_shuffle(m, n),
                    additive_shuffle_by_second_recurrence(m, n),
                    "m={m} n={n}"
                );
            }
        }
    }

    #[test]
    fn shuffle_term_count_and_coefficients() {
        for m in 0..=4 {
            for n in 0..=4 {
                let sh = additive_shuffle(m, n);
                assert_eq!(
                    BigInt::from(sh.num_terms()),
                    binomial(m + n, m),
                    "m={m} n={n}"
                );
                assert!(sh.terms().all(|(_, c)| *c == BigInt::from(1)));
            }
        }
    }

    #[test]
    fn shuffles_match_permutation_lift_oracle() {
        for m in 0..=3 {
            for n in 0..=3 {
                let perms = shuffle_permutations(m, n);
                let oracle = sum_over_permutation_lifts(&perms).unwrap();
                assert_eq!(additive_shuffle(m, n), oracle, "m={m} n={n}");
            }
        }
    }

    #[test]
    fn symmetrizer_small_cases_and_oracle() {
        assert_eq!(lift_symmetrizer(1), BraidRingElement::one(1));
        let s2 = BraidRingElement::one(2)
            .add(&BraidRingElement::generator(2, 1).unwrap())
            .unwrap();
        assert_eq!(lift_symmetrizer(2), s2);
        // Sigma_3 = 1 + s1 + s2 + s1s2 + s2s1 + s1s2s1
        let sigma3 = lift_symmetrizer(3);
        assert_eq!(sigma3.num_terms(), 6);
        for letters in [
            &[][..],
            &[1][..],
            &[2][..],
            &[1, 2][..],
            &[2, 1][..],
            &[1, 2, 1][..],
        ] {
            assert_eq!(
                sigma3.coefficient(&NormalForm::of_word(
                    &PositiveWord::new(3, letters.to_vec()).unwrap()
                )),
                BigInt::from(1),
                "missing term {letters:?}"
            );
        }
        for n in 1..=5 {
            let all = Permutation::all(n);
            let oracle = sum_over_permutation_lifts(&all).unwrap();
            assert_eq!(lift_symmetrizer(n), oracle, "n={n}");
            assert_eq!(BigInt::from(lift_symmetrizer(n).num_terms()), factorial(n));
        }
    }

    #[test]
    fn symsh_instance() {
        // Sha_{1,1} Sigma_1 Sigma_1^{up 1} = Sigma_2
        let lhs = additive_shuffle(1, 1)
            .multiply(&BraidRingElement::one(1).embed(2))
            .unwrap()
            .multiply(&BraidRingElement::one(1).shift(1))
            .unwrap();
        assert_eq!(lhs, lift_symmetrizer(2));
    }

    #[test]
    fn mult_shuffle_cases() {
        assert_eq!(mult_shuffle(3, 0), BraidRingElement::one(3));
        assert_eq!(mult_shuffle(0, 3), BraidRingElement::one(3));
        assert_eq!(mult_shuffle(1, 1), word(2, &[1]));
        assert_eq!(mult_shuffle(2, 1), word(3, &[2, 1]));
        for m in 0..=4 {
            for n in 0..=4 {
                assert_eq!(
                    mult_shuffle(m, n),
                    mult_shuffle_descending(m, n),
                    "m={m} n={n}"
                );
                assert!(mult_shuffle(m, n).as_single_word().is_some());
            }
        }
    }

    #[test]
    fn half_twist_cases() {
        assert_eq!(half_twist(2), word(2, &[1]));
        assert_eq!(half_twist(3), word(3, &[1, 2, 1]));
        assert_eq!(half_twist(4), word(4, &[1, 2, 3, 1, 2, 1]));
        for n in 1..=6 {
            let ht = half_twist(n);
            let nf = ht.as_single_word().unwrap();
            // a single simple factor: the lift of the longest element
            if n > 1 {
                assert_eq!(nf.factors().len(), 1);
                assert_eq!(nf.factors()[0], Permutation::longest(n));
            }
        }
    }

    #[test]
    fn trinomial_cases() {
        // k = 0 degenerates to a single shuffle
        assert_eq!(
            trinomial_shuffle(0, 2, 1).unwrap(),
            additive_shuffle(2, 1).embed(3)
        );
        let t111 = trinomial_shuffle(1, 1, 1).unwrap();
        assert_eq!(t111.num_terms(), 6);
        let t121 = trinomial_shuffle(1, 2, 1).unwrap();
        assert_eq!(t121.num_terms(), 12);
    }
}
