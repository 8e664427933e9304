//! Sparse exact polynomials with arbitrary-precision rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::monomial::Monomial;
use super::vars::VarSet;

/// A polynomial over the rationals: map from monomial to nonzero coefficient.
///
/// Always canonical: no zero coefficients are stored and monomials are
/// deduplicated by construction.  All operations are pure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    slots: usize,
    terms: BTreeMap<Monomial, BigRational>,
}

impl Polynomial {
    pub fn zero(slots: usize) -> Self {
        Polynomial {
            slots,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(slots: usize) -> Self {
        Polynomial::constant(slots, BigRational::one())
    }

    pub fn constant(slots: usize, c: BigRational) -> Self {
        let mut p = Polynomial::zero(slots);
        p.add_term(Monomial::one(slots), c);
        p
    }

    pub fn integer(slots: usize, c: i64) -> Self {
        Polynomial::constant(slots, BigRational::from_integer(BigInt::from(c)))
    }

    pub fn variable(slots: usize, slot: usize) -> Self {
        let mut p = Polynomial::zero(slots);
        p.add_term(Monomial::var(slots, slot), BigRational::one());
        p
    }

    pub fn monomial(slots: usize, m: Monomial, c: BigRational) -> Self {
        let mut p = Polynomial::zero(slots);
        p.add_term(m, c);
        p
    }

    pub fn slots(&self) -> usize {
        self.slots
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    /// True iff the polynomial is a single term `c * m`.
    pub fn single_term(&self) -> Option<(&Monomial, &BigRational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(|m| m.total_degree()).max()
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        assert_eq!(m.slots(), self.slots, "mixed variable universes");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.slots, other.slots, "mixed variable universes");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.slots, other.slots, "mixed variable universes");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    pub fn negate(&self) -> Polynomial {
        Polynomial {
            slots: self.slots,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.slots, other.slots, "mixed variable universes");
        let mut out = Polynomial::zero(self.slots);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn scalar_mul(&self, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.slots);
        }
        Polynomial {
            slots: self.slots,
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    /// Multiplies every term by `var^power`.
    pub fn mul_var(&self, slot: usize, power: u16) -> Polynomial {
        if power == 0 {
            return self.clone();
        }
        Polynomial {
            slots: self.slots,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.mul_var(slot, power), c.clone()))
                .collect(),
        }
    }

    /// Sets every variable in `zeroed` to zero: drops all terms using one.
    pub fn substitute_zero(&self, zeroed: &[usize]) -> Polynomial {
        let mut out = Polynomial::zero(self.slots);
        'terms: for (m, c) in &self.terms {
            for &slot in zeroed {
                if m.uses_slot(slot) {
                    continue 'terms;
                }
            }
            out.terms.insert(m.clone(), c.clone());
        }
        out
    }

    /// Substitutes a rational constant for one variable.
    pub fn substitute_constant(&self, slot: usize, value: &BigRational) -> Polynomial {
        let mut out = Polynomial::zero(self.slots);
        for (m, c) in &self.terms {
            let e = m.exponent(slot);
            if e == 0 {
                out.add_term(m.clone(), c.clone());
                continue;
            }
            if value.is_zero() {
                continue;
            }
            let mut exps = m.exponents().to_vec();
            exps[slot] = 0;
            let scale = num_traits::pow::pow(value.clone(), e as usize);
            out.add_term(Monomial::from_exponents(exps), c * scale);
        }
        out
    }

    pub fn display<'a>(&'a self, vars: &'a VarSet) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, vars }
    }

    /// Terms ordered leading-first by total degree, then by exponent vector.
    /// A deterministic order for display and serialization.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &BigRational)> {
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| {
            b.total_degree()
                .cmp(&a.total_degree())
                .then_with(|| b.cmp(a))
        });
        terms
    }

    /// JSON shape: list of `{"coeff": "p/q", "monomial": {"x_1_2": 1, ...}}`.
    pub fn to_json(&self, vars: &VarSet) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .sorted_terms()
            .into_iter()
            .map(|(m, c)| {
                let mut mono = serde_json::Map::new();
                for (slot, &e) in m.exponents().iter().enumerate() {
                    if e > 0 {
                        mono.insert(vars.json_key(slot), serde_json::json!(e));
                    }
                }
                serde_json::json!({
                    "coeff": rational_string(c),
                    "monomial": serde_json::Value::Object(mono),
                })
            })
            .collect();
        serde_json::Value::Array(terms)
    }
}

/// Renders a rational in the `p/q` form used by the JSON formats.
pub fn rational_string(c: &BigRational) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

pub struct PolyDisplay<'a> {
    poly: &'a Polynomial,
    vars: &'a VarSet,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.poly.sorted_terms().into_iter().enumerate() {
            let abs = c.abs();
            if idx == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{}", rational_string(&abs))?;
            } else {
                if !abs.is_one() {
                    write!(f, "{}*", rational_string(&abs))?;
                }
                write!(f, "{}", m.display(self.vars))?;
            }
        }
        Ok(())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Self) -> Polynomial {
        Polynomial::add(self, rhs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Self) -> Polynomial {
        Polynomial::sub(self, rhs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Self) -> Polynomial {
        Polynomial::mul(self, rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.negate()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::VarSet;

    fn xvar(vs: &VarSet, i: usize, j: usize) -> Polynomial {
        Polynomial::variable(vs.num_slots(), vs.x(i, j))
    }

    #[test]
    fn product_difference_of_squares() {
        let vs = VarSet::new(2);
        let a = xvar(&vs, 1, 1);
        let b = xvar(&vs, 1, 2);
        let prod = &(&a + &b) * &(&a - &b);
        let expected = &(&a * &a) - &(&b * &b);
        assert_eq!(prod, expected);
        assert_eq!(prod.display(&vs).to_string(), "x11^2 - x12^2");
    }

    #[test]
    fn substitute_zero_drops_terms() {
        let vs = VarSet::new(2);
        let det = &(&xvar(&vs, 1, 1) * &xvar(&vs, 2, 2)) - &(&xvar(&vs, 1, 2) * &xvar(&vs, 1, 2));
        let sub = det.substitute_zero(&[vs.x(1, 2)]);
        assert_eq!(sub, &xvar(&vs, 1, 1) * &xvar(&vs, 2, 2));
    }

    #[test]
    fn substitute_t_one() {
        let vs = VarSet::new(2);
        let t = Polynomial::variable(vs.num_slots(), vs.t());
        let p = &(&(&t * &t) * &xvar(&vs, 1, 1)) + &xvar(&vs, 2, 2);
        let collapsed = p.substitute_constant(vs.t(), &BigRational::one());
        assert_eq!(collapsed, &xvar(&vs, 1, 1) + &xvar(&vs, 2, 2));
    }

    #[test]
    fn cancellation_keeps_canonical_form() {
        let vs = VarSet::new(2);
        let a = xvar(&vs, 1, 1);
        let zero = &a - &a;
        assert!(zero.is_zero());
        assert_eq!(zero.num_terms(), 0);
    }

    #[test]
    fn json_shape() {
        let vs = VarSet::new(2);
        let p = xvar(&vs, 1, 2).scalar_mul(&BigRational::new(1.into(), 2.into()));
        let json = p.to_json(&vs);
        assert_eq!(
            json,
            serde_json::json!([{"coeff": "1/2", "monomial": {"x_1_2": 1}}])
        );
    }
}
