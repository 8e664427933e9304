//! Hilbert functions of the minor ideal: closed form, short-exact-sequence
//! peeling, and the Stanley-Reisner route through face vectors.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::monomial_ideal::FaceVector;

/// Binomial coefficient with the combinatorial boundary convention:
/// zero whenever `a < 0`, `b < 0` or `a < b`.
pub fn binom(a: i64, b: i64) -> BigInt {
    if a < 0 || b < 0 || a < b {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for i in 0..b {
        acc = acc * BigInt::from(a - i) / BigInt::from(i + 1);
    }
    acc
}

/// Hilbert function of a polynomial ring in `vars` variables.
pub fn hf_ring(vars: i64, d: i64) -> BigInt {
    binom(vars - 1 + d, vars - 1)
}

/// Hilbert function of the quotient ring from a face vector:
/// `HF(d) = sum_j f_{j-1} C(d-1, j-1)` for `d >= 1`, and 1 at `d = 0`.
pub fn hilbert_from_faces(f: &FaceVector, d: i64) -> BigInt {
    assert!(d >= 0, "degree must be nonnegative");
    if d == 0 {
        return BigInt::one();
    }
    let mut acc = BigInt::zero();
    for (j, &count) in f.counts().iter().enumerate().skip(1) {
        acc += BigInt::from(count) * binom(d - 1, j as i64 - 1);
    }
    acc
}

/// The closed form for the Hilbert function of the ideal of submaximal
/// minors of the generic symmetric matrix:
/// `C(C(n,2)+d, v-1) + (n-1) C(C(n,2)-1+d, v-2) + C(n,2) C(C(n,2)-2+d, v-3)`
/// with `v = C(n+1,2)`.
pub fn hf_closed_form(n: usize, d: i64) -> BigInt {
    assert!(n >= 2 && d >= 0);
    let v = (n * (n + 1) / 2) as i64;
    let c2 = (n * (n - 1) / 2) as i64;
    let n = n as i64;
    binom(c2 + d, v - 1) + BigInt::from(n - 1) * binom(c2 - 1 + d, v - 2)
        + BigInt::from(c2) * binom(c2 - 2 + d, v - 3)
}

/// The same Hilbert function obtained by peeling generators off the
/// combinatorial ideal with short exact sequences: first the `C(n,2)`
/// off-diagonal generators (each subtracting the Hilbert function of a ring
/// in two fewer variables), then the `n` diagonal products in index order.
/// Returns `HF(I)(d) = HF(R)(d) - HF(R/I)(d)`.
pub fn hf_recursion(n: usize, d: i64) -> BigInt {
    assert!(n >= 2 && d >= 0);
    let v = (n * (n + 1) / 2) as i64;
    let shift = d - (n as i64 - 1);

    // diagonal part: peel n-1 generators of J, each with colon ideal (x_kk),
    // then the last principal generator directly
    let mut hf_quotient_j = hf_ring(v, d) - hf_ring(v, shift);
    for _k in 1..n {
        hf_quotient_j -= hf_ring(v - 1, shift);
    }

    // off-diagonal part: each generator has colon ideal (x_kk, x_ll)
    let mut hf_quotient = hf_quotient_j;
    for _pair in 0..n * (n - 1) / 2 {
        hf_quotient -= hf_ring(v - 2, shift);
    }

    hf_ring(v, d) - hf_quotient
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::monomial_ideal::{face_vector, SquarefreeMonomialIdeal};
    use crate::poly::Monomial;

    #[test]
    fn binom_boundaries() {
        assert_eq!(binom(5, 2), BigInt::from(10));
        assert_eq!(binom(-1, 0), BigInt::zero());
        assert_eq!(binom(3, 5), BigInt::zero());
        assert_eq!(binom(4, 0), BigInt::one());
    }

    #[test]
    fn faces_recover_polynomial_ring() {
        let zero = SquarefreeMonomialIdeal::zero(4);
        let f = face_vector(&zero, 4).unwrap();
        for d in 0..8 {
            assert_eq!(hilbert_from_faces(&f, d), hf_ring(4, d));
        }
    }

    #[test]
    fn closed_form_examples() {
        // below the generator degree the ideal is empty
        for n in 2..=5usize {
            for d in 0..n as i64 - 1 {
                assert_eq!(hf_closed_form(n, d), BigInt::zero());
            }
            // at the generator degree: the minors are linearly independent
            assert_eq!(
                hf_closed_form(n, n as i64 - 1),
                BigInt::from((n * (n + 1) / 2) as u64)
            );
        }
        assert_eq!(hf_closed_form(2, 1), BigInt::from(3));
        assert_eq!(hf_closed_form(2, 2), BigInt::from(6));
    }

    #[test]
    fn recursion_agrees_with_closed_form() {
        for n in 2..=6usize {
            for d in 0..=2 * n as i64 {
                assert_eq!(hf_recursion(n, d), hf_closed_form(n, d), "n={n} d={d}");
            }
        }
        assert_eq!(hf_recursion(3, 0), BigInt::zero());
    }

    #[test]
    fn faces_match_brute_force_membership() {
        // the ideal (x11, x12, x22) of 1-minors for n = 2, over 3 variables
        let slots = 4; // includes the unused t slot
        let gens = (0..3).map(|s| Monomial::var(slots, s));
        let i = SquarefreeMonomialIdeal::new(slots, gens).unwrap();
        let f = face_vector(&i, 3).unwrap();
        for d in 0..=6i64 {
            // every monomial of positive degree lies in the ideal
            let expected = if d == 0 { BigInt::one() } else { BigInt::zero() };
            assert_eq!(hilbert_from_faces(&f, d), expected);
        }
    }
}
