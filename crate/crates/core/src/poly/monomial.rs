//! Monomials as dense exponent vectors over a fixed variable universe.

use std::fmt;

use super::vars::VarSet;

/// A monomial: one exponent per slot of a [`VarSet`].
///
/// The derived `Ord` (lexicographic on the exponent vector) is only a storage
/// order; monomial comparisons for algebra go through weight orders.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    exps: Vec<u16>,
}

impl Monomial {
    pub fn one(slots: usize) -> Self {
        Monomial {
            exps: vec![0; slots],
        }
    }

    pub fn var(slots: usize, slot: usize) -> Self {
        let mut exps = vec![0; slots];
        exps[slot] = 1;
        Monomial { exps }
    }

    pub fn from_exponents(exps: Vec<u16>) -> Self {
        Monomial { exps }
    }

    pub fn slots(&self) -> usize {
        self.exps.len()
    }

    pub fn exponent(&self, slot: usize) -> u16 {
        self.exps[slot]
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn total_degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.slots(), other.slots(), "mixed variable universes");
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn mul_var(&self, slot: usize, power: u16) -> Monomial {
        let mut exps = self.exps.clone();
        exps[slot] += power;
        Monomial { exps }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`; requires divisibility.
    pub fn quotient_into(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        Monomial {
            exps: other
                .exps
                .iter()
                .zip(&self.exps)
                .map(|(b, a)| b - a)
                .collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn gcd_is_one(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Support as a slot bitmask; only valid for universes with <= 64 slots.
    pub fn support_mask(&self) -> u64 {
        assert!(self.slots() <= 64);
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0u64, |m, (slot, _)| m | 1 << slot)
    }

    pub fn uses_slot(&self, slot: usize) -> bool {
        self.exps[slot] > 0
    }

    pub fn display<'a>(&'a self, vars: &'a VarSet) -> MonomialDisplay<'a> {
        MonomialDisplay { mono: self, vars }
    }
}

pub struct MonomialDisplay<'a> {
    mono: &'a Monomial,
    vars: &'a VarSet,
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mono.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (slot, &e) in self.mono.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", self.vars.name(slot))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}
