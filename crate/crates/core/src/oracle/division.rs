//! Multivariate division and the S-pair verification of candidate Gröbner
//! bases.  Verification only: the toolkit confirms given generating sets,
//! it never completes a basis.

use crate::poly::{leading_term, CompositeWeightOrder, Monomial, Polynomial};
use crate::{Error, Result};

/// Remainder of multivariate division of `p` by the generators.
///
/// Repeatedly reduces the current leading term by the first generator whose
/// leading monomial divides it; leading terms with no divisor move to the
/// remainder.  Deterministic given the generator order.
pub fn normal_form(
    p: &Polynomial,
    gens: &[Polynomial],
    order: &CompositeWeightOrder,
) -> Polynomial {
    let leads: Vec<(&Monomial, &num_rational::BigRational)> = gens
        .iter()
        .map(|g| leading_term(g, order).expect("nonzero generator"))
        .collect();
    let mut work = p.clone();
    let mut remainder = Polynomial::zero(p.slots());
    while let Some((lm, lc)) = leading_term(&work, order) {
        let lm = lm.clone();
        let lc = lc.clone();
        match leads.iter().position(|(gm, _)| gm.divides(&lm)) {
            Some(idx) => {
                let (gm, gc) = leads[idx];
                let factor = Polynomial::monomial(p.slots(), gm.quotient_into(&lm), &lc / gc);
                work = &work - &factor.mul(&gens[idx]);
            }
            None => {
                remainder.add_term(lm.clone(), lc.clone());
                let single = Polynomial::monomial(p.slots(), lm, lc);
                work = &work - &single;
            }
        }
    }
    remainder
}

/// A failed S-pair: the witness reported when a candidate basis is not a
/// Gröbner basis.
#[derive(Debug, Clone)]
pub struct SPairWitness {
    pub i: usize,
    pub j: usize,
    pub remainder: Polynomial,
}

/// Checks whether the generators form a Gröbner basis under the order by
/// reducing every S-polynomial to zero.  Pairs with coprime leading
/// monomials reduce trivially and are skipped.
///
/// Returns the first failing pair as a witness, or `None` when the check
/// passes.  Errors if the number of pairs exceeds `pair_cap`.
pub fn buchberger_check(
    gens: &[Polynomial],
    order: &CompositeWeightOrder,
    pair_cap: usize,
) -> Result<Option<SPairWitness>> {
    if gens.iter().any(|g| g.is_zero()) {
        return Err(Error::invalid("generators must be nonzero"));
    }
    let pair_count = gens.len() * gens.len().saturating_sub(1) / 2;
    if pair_count > pair_cap {
        return Err(Error::resource(format!(
            "{pair_count} S-pairs exceed the cap of {pair_cap}"
        )));
    }
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            let (lm_i, lc_i) = leading_term(&gens[i], order).expect("nonzero");
            let (lm_j, lc_j) = leading_term(&gens[j], order).expect("nonzero");
            if lm_i.gcd_is_one(lm_j) {
                continue;
            }
            let lcm = lm_i.lcm(lm_j);
            let one = num_rational::BigRational::from_integer(1.into());
            let lift_i =
                Polynomial::monomial(gens[i].slots(), lm_i.quotient_into(&lcm), &one / lc_i);
            let lift_j =
                Polynomial::monomial(gens[j].slots(), lm_j.quotient_into(&lcm), &one / lc_j);
            let s_poly = &lift_i.mul(&gens[i]) - &lift_j.mul(&gens[j]);
            if s_poly.is_zero() {
                continue;
            }
            let remainder = normal_form(&s_poly, gens, order);
            if !remainder.is_zero() {
                return Ok(Some(SPairWitness { i, j, remainder }));
            }
        }
    }
    Ok(None)
}

/// Exhaustive count of square-free degree-`d` monomials in the first
/// `num_vars` slots divisible by some generator of the ideal.
pub fn sqfree_count(
    ideal: &crate::ideal::SquarefreeMonomialIdeal,
    d: usize,
    num_vars: usize,
) -> Result<u64> {
    if d > num_vars {
        return Err(Error::invalid("degree exceeds the variable count"));
    }
    if num_vars > 32 {
        return Err(Error::resource("exhaustive count supports at most 32 variables"));
    }
    let masks = ideal.support_masks(num_vars)?;
    let mut count = 0u64;
    for subset in 0u64..1 << num_vars {
        if subset.count_ones() as usize == d && masks.iter().any(|&g| g & !subset == 0) {
            count += 1;
        }
    }
    Ok(count)
}
