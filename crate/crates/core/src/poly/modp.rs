//! Exact evaluation of polynomials over prime fields and ranks of evaluated
//! matrices.  Used by the randomized exactness probes.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::{Error, Result};

use super::polynomial::Polynomial;

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    // these witnesses are exact for all n < 2^64
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a % n, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Inverse of `a` modulo a prime `p`.
pub fn mod_inverse(a: u64, p: u64) -> Option<u64> {
    if a % p == 0 {
        return None;
    }
    Some(pow_mod(a, p - 2, p))
}

fn bigint_mod(v: &BigInt, p: u64) -> u64 {
    let m = BigInt::from(p);
    let r = ((v % &m) + &m) % &m;
    r.to_u64().expect("residue fits u64")
}

/// Evaluates a polynomial at a point over `F_p`.  The assignment gives one
/// residue per variable slot.  Coefficient denominators must be invertible
/// mod `p`; otherwise the caller should retry with a different prime.
pub fn evaluate_mod_p(p: &Polynomial, assignment: &[u64], prime: u64) -> Result<u64> {
    if prime < 2 || !is_prime_u64(prime) {
        return Err(Error::invalid(format!("{prime} is not a prime")));
    }
    if assignment.len() != p.slots() {
        return Err(Error::invalid(format!(
            "assignment covers {} variables, polynomial has {}",
            assignment.len(),
            p.slots()
        )));
    }
    let mut acc = 0u64;
    for (mono, coeff) in p.terms() {
        let num = bigint_mod(coeff.numer(), prime);
        let den = bigint_mod(coeff.denom(), prime);
        let den_inv =
            mod_inverse(den, prime).ok_or(Error::RetryWithNewPrime { prime })?;
        let mut v = mul_mod(num, den_inv, prime);
        for (slot, &e) in mono.exponents().iter().enumerate() {
            if e > 0 {
                v = mul_mod(v, pow_mod(assignment[slot] % prime, e as u64, prime), prime);
            }
        }
        acc = (acc + v) % prime;
    }
    Ok(acc)
}

/// Rank of a matrix over `F_p` by Gaussian elimination.
pub fn rank_mod_p(matrix: &[Vec<u64>], prime: u64) -> usize {
    let rows = matrix.len();
    if rows == 0 {
        return 0;
    }
    let cols = matrix[0].len();
    let mut m: Vec<Vec<u64>> = matrix
        .iter()
        .map(|row| row.iter().map(|&v| v % prime).collect())
        .collect();
    let mut rank = 0;
    for col in 0..cols {
        let pivot = (rank..rows).find(|&r| m[r][col] != 0);
        let Some(pivot) = pivot else { continue };
        m.swap(rank, pivot);
        let inv = mod_inverse(m[rank][col], prime).expect("nonzero pivot");
        for c in col..cols {
            m[rank][c] = mul_mod(m[rank][c], inv, prime);
        }
        for r in 0..rows {
            if r != rank && m[r][col] != 0 {
                let factor = m[r][col];
                for c in col..cols {
                    let sub = mul_mod(factor, m[rank][c], prime);
                    m[r][c] = (m[r][c] + prime - sub) % prime;
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{Polynomial, VarSet};
    use num_rational::BigRational;

    #[test]
    fn evaluation_examples() {
        let vs = VarSet::new(2);
        let slots = vs.num_slots();
        let x11 = Polynomial::variable(slots, vs.x(1, 1));
        let x22 = Polynomial::variable(slots, vs.x(2, 2));
        let prod = &x11 * &x22;
        let mut point = vec![0u64; slots];
        point[vs.x(1, 1)] = 2;
        point[vs.x(2, 2)] = 3;
        assert_eq!(evaluate_mod_p(&prod, &point, 7).unwrap(), 6);

        // (1/2) x11 at x11 = 1 mod 5: inverse of 2 is 3
        let half = x11.scalar_mul(&BigRational::new(1.into(), 2.into()));
        let mut point = vec![0u64; slots];
        point[vs.x(1, 1)] = 1;
        assert_eq!(evaluate_mod_p(&half, &point, 5).unwrap(), 3);

        assert_eq!(
            evaluate_mod_p(&Polynomial::zero(slots), &vec![0; slots], 5).unwrap(),
            0
        );
    }

    #[test]
    fn bad_denominator_asks_for_retry() {
        let vs = VarSet::new(2);
        let slots = vs.num_slots();
        let p = Polynomial::constant(slots, BigRational::new(1.into(), 5.into()));
        match evaluate_mod_p(&p, &vec![0; slots], 5) {
            Err(crate::Error::RetryWithNewPrime { prime: 5 }) => {}
            other => panic!("expected retry error, got {other:?}"),
        }
    }

    #[test]
    fn rejects_composite_modulus() {
        let p = Polynomial::zero(1);
        assert!(evaluate_mod_p(&p, &[0], 6).is_err());
    }

    #[test]
    fn primality() {
        assert!(is_prime_u64(2));
        assert!(is_prime_u64(2147483647));
        assert!(!is_prime_u64(1));
        assert!(!is_prime_u64(2147483649));
    }

    #[test]
    fn ranks() {
        let p = 101;
        assert_eq!(rank_mod_p(&[vec![1, 2], vec![2, 4]], p), 1);
        assert_eq!(rank_mod_p(&[vec![1, 0], vec![0, 1]], p), 2);
        assert_eq!(rank_mod_p(&[vec![0, 0]], p), 0);
        assert_eq!(rank_mod_p(&[], p), 0);
    }
}
