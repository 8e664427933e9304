//! Square-free monomial ideals, their face vectors and their height.

use std::collections::BTreeSet;

use crate::poly::{Monomial, VarSet};
use crate::{Error, Result};

/// A square-free monomial ideal given by its minimal generating set.
///
/// Generators are pairwise non-dividing; the unit ideal is not representable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquarefreeMonomialIdeal {
    slots: usize,
    gens: Vec<Monomial>,
}

impl SquarefreeMonomialIdeal {
    /// Builds the ideal, minimalizing the generating set.
    pub fn new(slots: usize, gens: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        let mut set: BTreeSet<Monomial> = BTreeSet::new();
        for g in gens {
            if g.slots() != slots {
                return Err(Error::invalid("generator in the wrong variable universe"));
            }
            if !g.is_squarefree() {
                return Err(Error::invalid("generator is not square-free"));
            }
            if g.is_one() {
                return Err(Error::invalid("the unit ideal is not representable"));
            }
            set.insert(g);
        }
        let mut gens: Vec<Monomial> = set
            .iter()
            .filter(|g| !set.iter().any(|h| h != *g && h.divides(g)))
            .cloned()
            .collect();
        // canonical order with the earliest variable slots first
        gens.sort_by(|a, b| b.cmp(a));
        Ok(SquarefreeMonomialIdeal { slots, gens })
    }

    pub fn zero(slots: usize) -> Self {
        SquarefreeMonomialIdeal {
            slots,
            gens: Vec::new(),
        }
    }

    pub fn slots(&self) -> usize {
        self.slots
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn num_generators(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn contains_monomial(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Sets the given variables to zero: every generator using one of them is
    /// dropped, and the remaining set is minimalized again.
    pub fn substitute_zero(&self, zeroed: &[usize]) -> SquarefreeMonomialIdeal {
        let gens: Vec<Monomial> = self
            .gens
            .iter()
            .filter(|g| zeroed.iter().all(|&slot| !g.uses_slot(slot)))
            .cloned()
            .collect();
        SquarefreeMonomialIdeal::new(self.slots, gens).expect("subset of a valid generating set")
    }

    /// Re-expresses the ideal over the dense universe spanned by `kept`
    /// slots.  Every generator must be supported on `kept`.
    pub fn project(&self, kept: &[usize]) -> Result<SquarefreeMonomialIdeal> {
        let mut gens = Vec::with_capacity(self.gens.len());
        for g in &self.gens {
            let mut exps = vec![0u16; kept.len()];
            let mut seen = 0u64;
            for (new_slot, &old_slot) in kept.iter().enumerate() {
                exps[new_slot] = g.exponent(old_slot);
                seen += g.exponent(old_slot) as u64;
            }
            if seen != g.total_degree() {
                return Err(Error::invalid(
                    "generator uses a variable outside the projection",
                ));
            }
            gens.push(Monomial::from_exponents(exps));
        }
        SquarefreeMonomialIdeal::new(kept.len(), gens)
    }

    /// Generator supports as bitmasks over the first `num_vars` slots.
    pub(crate) fn support_masks(&self, num_vars: usize) -> Result<Vec<u64>> {
        if num_vars > 64 {
            return Err(Error::resource("more than 64 variables"));
        }
        let mut masks = Vec::with_capacity(self.gens.len());
        for g in &self.gens {
            let mask = g.support_mask();
            if num_vars < 64 && mask >> num_vars != 0 {
                return Err(Error::invalid(format!(
                    "generator uses a variable outside the first {num_vars} slots"
                )));
            }
            masks.push(mask);
        }
        Ok(masks)
    }

    /// JSON shape: list of monomial objects `{"x_1_1": 1, ...}`.
    pub fn to_json(&self, vars: &VarSet) -> serde_json::Value {
        let gens: Vec<serde_json::Value> = self
            .gens
            .iter()
            .map(|g| {
                let mut obj = serde_json::Map::new();
                for (slot, &e) in g.exponents().iter().enumerate() {
                    if e > 0 {
                        obj.insert(vars.json_key(slot), serde_json::json!(e));
                    }
                }
                serde_json::Value::Object(obj)
            })
            .collect();
        serde_json::Value::Array(gens)
    }
}

/// Face counts of the Stanley-Reisner complex of a square-free monomial
/// ideal: `counts[d]` is `f_{d-1}`, the number of square-free monomials of
/// degree `d` (in the ring's variables) that avoid the ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceVector {
    counts: Vec<u64>,
}

impl FaceVector {
    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// `f_{d-1}` with zero beyond the stored range.
    pub fn count(&self, d: usize) -> u64 {
        self.counts.get(d).copied().unwrap_or(0)
    }
}

/// Computes the face vector of the quotient by `ideal` in a polynomial ring
/// on the first `num_vars` slots.
///
/// Uses direct subset enumeration up to 24 variables and a
/// deletion-contraction recursion over the generator hypergraph beyond that.
/// Both routes are exact; they are cross-checked in the tests.
pub fn face_vector(ideal: &SquarefreeMonomialIdeal, num_vars: usize) -> Result<FaceVector> {
    let masks = ideal.support_masks(num_vars)?;
    let mut counts = if num_vars <= 24 {
        face_counts_enumerated(&masks, num_vars)
    } else {
        let free: u64 = if num_vars == 64 {
            u64::MAX
        } else {
            (1u64 << num_vars) - 1
        };
        face_counts_recursive(&masks, free)
    };
    while counts.len() > 1 && counts.last() == Some(&0) {
        counts.pop();
    }
    Ok(FaceVector { counts })
}

fn face_counts_enumerated(gens: &[u64], num_vars: usize) -> Vec<u64> {
    let mut counts = vec![0u64; num_vars + 1];
    for subset in 0u64..1 << num_vars {
        if gens.iter().all(|&g| g & !subset != 0) {
            counts[subset.count_ones() as usize] += 1;
        }
    }
    counts
}

/// Counts subsets of `free` avoiding all generator supports, split by size.
/// Branches on the variable occurring in the most generators: subsets
/// without it (generators using it become irrelevant) plus subsets with it
/// (those generators shrink by one variable).
fn face_counts_recursive(gens: &[u64], free: u64) -> Vec<u64> {
    let nv = free.count_ones() as usize;
    if gens.iter().any(|&g| g == 0) {
        return vec![0; nv + 1];
    }
    if gens.is_empty() {
        return (0..=nv as u64).map(|d| binom_u64(nv as u64, d)).collect();
    }
    let pivot = {
        let mut best = (0u32, 0u64);
        let mut m = free;
        while m != 0 {
            let v = m & m.wrapping_neg();
            let freq = gens.iter().filter(|&&g| g & v != 0).count() as u32;
            if freq > best.0 {
                best = (freq, v);
            }
            m &= m - 1;
        }
        best.1
    };
    let without: Vec<u64> = gens.iter().copied().filter(|&g| g & pivot == 0).collect();
    let with: Vec<u64> = minimalize_masks(gens.iter().map(|&g| g & !pivot).collect());
    let a = face_counts_recursive(&without, free & !pivot);
    let b = face_counts_recursive(&with, free & !pivot);
    let mut counts = vec![0u64; nv + 1];
    counts[..a.len()].copy_from_slice(&a);
    for (d, v) in b.into_iter().enumerate() {
        counts[d + 1] += v;
    }
    counts
}

fn minimalize_masks(masks: Vec<u64>) -> Vec<u64> {
    let mut out: Vec<u64> = Vec::new();
    let mut sorted = masks;
    sorted.sort_by_key(|m| m.count_ones());
    for m in sorted {
        if !out.iter().any(|&kept| m & kept == kept) {
            out.push(m);
        }
    }
    out
}

fn binom_u64(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1u64;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Minimum vertex cover of the generator hypergraph by branch and bound.
/// For a square-free monomial ideal this is the height.
pub fn ideal_height(ideal: &SquarefreeMonomialIdeal) -> Result<usize> {
    if ideal.is_zero() {
        return Err(Error::invalid("height of the zero ideal"));
    }
    if ideal.slots() > 64 {
        return Err(Error::resource("more than 64 variables"));
    }
    let masks = ideal.support_masks(ideal.slots().min(64))?;
    let mut best = masks.len().min(ideal.slots());
    branch_cover(&masks, 0, 0, &mut best);
    Ok(best)
}

fn branch_cover(gens: &[u64], cover: u64, size: usize, best: &mut usize) {
    if size >= *best {
        return;
    }
    let Some(&uncovered) = gens.iter().find(|&&g| g & cover == 0) else {
        *best = size;
        return;
    };
    let mut m = uncovered;
    while m != 0 {
        let v = m & m.wrapping_neg();
        branch_cover(gens, cover | v, size + 1, best);
        m &= m - 1;
    }
}
