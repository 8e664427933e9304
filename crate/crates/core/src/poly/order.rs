//! Weight vectors and the composite weight order used to degenerate the
//! minor ideals.

use std::cmp::Ordering;

use crate::graph::{Forest, Graph};
use crate::{Error, Result};

use super::monomial::Monomial;
use super::polynomial::Polynomial;
use super::vars::VarSet;

/// An integer weight per variable slot.  All weights are nonnegative and the
/// homogenization variable `t` always carries weight 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightVector {
    weights: Vec<u64>,
}

impl WeightVector {
    /// Weight 2 on the diagonal and on the edges of `g`, weight 1 on
    /// non-edges (and on `t`).
    pub fn for_graph(g: &Graph) -> Self {
        let vars = VarSet::new(g.n());
        let mut weights = vec![1; vars.num_slots()];
        for slot in 0..vars.num_x() {
            let (i, j) = vars.pair_of(slot).unwrap();
            if i == j || g.has_edge(i, j) {
                weights[slot] = 2;
            }
        }
        WeightVector { weights }
    }

    /// Weight 2 on the diagonal, weight 1 off it: the edgeless case.
    pub fn diagonal(n: usize) -> Self {
        let g = Graph::edgeless(n).expect("n >= 2");
        WeightVector::for_graph(&g)
    }

    /// Weight 2 on the forest's edges and the diagonal, 1 elsewhere.
    pub fn for_forest(t: &Forest) -> Self {
        WeightVector::for_graph(&t.as_graph())
    }

    pub fn slots(&self) -> usize {
        self.weights.len()
    }

    pub fn weight_of_var(&self, slot: usize) -> u64 {
        self.weights[slot]
    }

    /// Total weight of a monomial: sum of exponent times variable weight.
    pub fn weight_of(&self, m: &Monomial) -> u64 {
        assert_eq!(m.slots(), self.weights.len(), "mixed variable universes");
        m.exponents()
            .iter()
            .zip(&self.weights)
            .map(|(&e, &w)| e as u64 * w)
            .sum()
    }

    /// Largest weight among the terms of a nonzero polynomial.
    pub fn top_weight(&self, p: &Polynomial) -> Result<u64> {
        p.terms()
            .map(|(m, _)| self.weight_of(m))
            .max()
            .ok_or_else(|| Error::invalid("weight of the zero polynomial"))
    }
}

/// A sequence of weight vectors compared in order, refined to a total
/// monomial order by graded lexicographic comparison on the fixed slot
/// ordering.
///
/// For a graph `G` with spanning forest `T` the sequence is
/// `[w_G, w_T, w_diag]`: monomials are compared by `w_G`-weight first, then
/// `w_T`, then `w_diag`, and remaining ties are broken by graded lex.  The
/// weight sequence alone is not total; the tie-break makes reductions
/// well-defined without changing any leading monomial that is already
/// determined by the weights.
#[derive(Debug, Clone)]
pub struct CompositeWeightOrder {
    stages: Vec<WeightVector>,
}

impl CompositeWeightOrder {
    pub fn new(stages: Vec<WeightVector>) -> Self {
        assert!(!stages.is_empty(), "need at least one weight vector");
        CompositeWeightOrder { stages }
    }

    /// The order `<_{T,G}` for a graph and a spanning forest of it.
    pub fn for_graph_forest(g: &Graph, t: &Forest) -> Self {
        CompositeWeightOrder::new(vec![
            WeightVector::for_graph(g),
            WeightVector::for_forest(t),
            WeightVector::diagonal(g.n()),
        ])
    }

    pub fn stages(&self) -> &[WeightVector] {
        &self.stages
    }

    /// Comparison by the weight sequence only; `Equal` means all stages tie.
    pub fn weight_cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        for w in &self.stages {
            match w.weight_of(a).cmp(&w.weight_of(b)) {
                Ordering::Equal => continue,
                other => return other,
            }
        }
        Ordering::Equal
    }

    /// Total comparison: weight sequence, then graded lex tie-break.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.weight_cmp(a, b).then_with(|| grlex_cmp(a, b))
    }
}

/// Graded lexicographic order on the fixed slot ordering: larger total
/// degree wins; on equal degree, the earlier slot with differing exponent
/// decides, larger exponent first.
pub fn grlex_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    a.total_degree()
        .cmp(&b.total_degree())
        .then_with(|| {
            for (ea, eb) in a.exponents().iter().zip(b.exponents()) {
                match ea.cmp(eb) {
                    Ordering::Equal => continue,
                    other => return other,
                }
            }
            Ordering::Equal
        })
}

/// The initial form of a nonzero polynomial.
///
/// With `use_tiebreak` the result is the single maximal term under the total
/// order; without it, the sum of all terms whose weight tuple is maximal
/// (the weight-initial form).
pub fn initial_form(
    p: &Polynomial,
    order: &CompositeWeightOrder,
    use_tiebreak: bool,
) -> Result<Polynomial> {
    if p.is_zero() {
        return Err(Error::invalid("initial form of the zero polynomial"));
    }
    let mut best: Vec<(&Monomial, &num_rational::BigRational)> = Vec::new();
    for (m, c) in p.terms() {
        match best.first() {
            None => best.push((m, c)),
            Some((bm, _)) => match order.weight_cmp(m, bm) {
                Ordering::Greater => {
                    best.clear();
                    best.push((m, c));
                }
                Ordering::Equal => best.push((m, c)),
                Ordering::Less => {}
            },
        }
    }
    if use_tiebreak {
        let (m, c) = best
            .into_iter()
            .max_by(|(a, _), (b, _)| order.cmp(a, b))
            .expect("nonzero polynomial");
        return Ok(Polynomial::monomial(p.slots(), m.clone(), c.clone()));
    }
    let mut out = Polynomial::zero(p.slots());
    for (m, c) in best {
        out.add_term(m.clone(), c.clone());
    }
    Ok(out)
}

/// Leading monomial and coefficient under the tie-broken total order.
pub fn leading_term<'a>(
    p: &'a Polynomial,
    order: &CompositeWeightOrder,
) -> Option<(&'a Monomial, &'a num_rational::BigRational)> {
    p.terms().max_by(|(a, _), (b, _)| order.cmp(a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use num_traits::One;

    fn xm(vs: &VarSet, pairs: &[(usize, usize)]) -> Monomial {
        let mut m = Monomial::one(vs.num_slots());
        for &(i, j) in pairs {
            m = m.mul_var(vs.x(i, j), 1);
        }
        m
    }

    #[test]
    fn weights_match_edge_membership() {
        let g = Graph::new(3, [(1, 2)]).unwrap();
        let vs = VarSet::new(3);
        let w = WeightVector::for_graph(&g);
        assert_eq!(w.weight_of_var(vs.x(1, 1)), 2);
        assert_eq!(w.weight_of_var(vs.x(1, 2)), 2);
        assert_eq!(w.weight_of_var(vs.x(1, 3)), 1);
        assert_eq!(w.weight_of_var(vs.t()), 1);

        // x12 * x13 with 12 in G, 13 not: weight 3
        assert_eq!(w.weight_of(&xm(&vs, &[(1, 2), (1, 3)])), 3);
        // x11 * x22 under w_diag: 4
        let wd = WeightVector::diagonal(3);
        assert_eq!(wd.weight_of(&xm(&vs, &[(1, 1), (2, 2)])), 4);
    }

    #[test]
    fn weight_is_additive() {
        let vs = VarSet::new(3);
        let w = WeightVector::for_graph(&Graph::new(3, [(1, 3)]).unwrap());
        let a = xm(&vs, &[(1, 1), (2, 3)]);
        let b = xm(&vs, &[(1, 3), (1, 3)]);
        assert_eq!(w.weight_of(&a.mul(&b)), w.weight_of(&a) + w.weight_of(&b));
    }

    #[test]
    fn weight_initial_form_without_tiebreak() {
        let vs = VarSet::new(2);
        let slots = vs.num_slots();
        let x11 = Polynomial::variable(slots, vs.x(1, 1));
        let x22 = Polynomial::variable(slots, vs.x(2, 2));
        let x12 = Polynomial::variable(slots, vs.x(1, 2));
        let det = &(&x11 * &x22) - &(&x12 * &x12);
        let order = CompositeWeightOrder::new(vec![WeightVector::diagonal(2)]);
        let init = initial_form(&det, &order, false).unwrap();
        assert_eq!(init, &x11 * &x22);

        // a monomial is its own initial form
        let init = initial_form(&x12, &order, false).unwrap();
        assert_eq!(init, x12);
    }

    #[test]
    fn composite_order_resolves_det_of_edge_graph() {
        // G = single edge {1,2} on n=2: both x11*x22 and x12^2 have w_G- and
        // w_T-weight 4; w_diag separates them.
        let g = Graph::new(2, [(1, 2)]).unwrap();
        let t = Forest::spanning(&g);
        let vs = VarSet::new(2);
        let slots = vs.num_slots();
        let x11 = Polynomial::variable(slots, vs.x(1, 1));
        let x22 = Polynomial::variable(slots, vs.x(2, 2));
        let x12 = Polynomial::variable(slots, vs.x(1, 2));
        let det = &(&x11 * &x22) - &(&x12 * &x12);
        let order = CompositeWeightOrder::for_graph_forest(&g, &t);
        let lead = initial_form(&det, &order, true).unwrap();
        assert_eq!(lead, &x11 * &x22);
    }

    #[test]
    fn initial_form_of_zero_rejected() {
        let order = CompositeWeightOrder::new(vec![WeightVector::diagonal(2)]);
        assert!(initial_form(&Polynomial::zero(4), &order, true).is_err());
    }

    #[test]
    fn tiebreak_gives_total_order() {
        let vs = VarSet::new(2);
        let order = CompositeWeightOrder::new(vec![WeightVector::diagonal(2)]);
        let a = xm(&vs, &[(1, 1)]);
        let b = xm(&vs, &[(2, 2)]);
        assert_ne!(order.cmp(&a, &b), Ordering::Equal);
        assert_eq!(order.cmp(&a, &a), Ordering::Equal);
    }

    #[test]
    fn leading_term_multiplicative() {
        let vs = VarSet::new(2);
        let slots = vs.num_slots();
        let order = CompositeWeightOrder::new(vec![WeightVector::diagonal(2)]);
        let p = &Polynomial::variable(slots, vs.x(1, 1)) + &Polynomial::variable(slots, vs.x(1, 2));
        let q = &Polynomial::variable(slots, vs.x(2, 2))
            - &Polynomial::constant(slots, BigRational::one());
        let (lp, _) = leading_term(&p, &order).unwrap();
        let (lq, _) = leading_term(&q, &order).unwrap();
        let pq = p.mul(&q);
        let (lpq, _) = leading_term(&pq, &order).unwrap();
        assert_eq!(lp.mul(lq), *lpq);
    }
}
