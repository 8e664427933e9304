//! The combinatorial monomial ideal attached to a spanning forest and the
//! bijection matching its square-free monomials with those of the edgeless
//! case degree by degree.

use crate::graph::Forest;
use crate::poly::{Monomial, VarSet};
use crate::{Error, Result};

use super::monomial_ideal::SquarefreeMonomialIdeal;

/// The generators of `I_T` for a spanning forest `T`:
///
/// 1. the `n` products of all diagonal variables but one,
/// 2. for every pair `k < l` in different components of `T`, the product of
///    the diagonal variables off `{k, l}` times `x_kl`,
/// 3. for every path `p` in `T`, the product of the diagonal variables off
///    `V(p)` times the path monomial `x_p`.
///
/// All `C(n+1,2)` generators are square-free of degree `n - 1`.
pub fn it_generators(t: &Forest) -> SquarefreeMonomialIdeal {
    let n = t.n();
    let vars = VarSet::new(n);
    let slots = vars.num_slots();
    let diag_product_off = |excluded: &[usize]| -> Monomial {
        let mut m = Monomial::one(slots);
        for i in 1..=n {
            if !excluded.contains(&i) {
                m = m.mul_var(vars.x(i, i), 1);
            }
        }
        m
    };

    let mut gens = Vec::with_capacity(n * (n + 1) / 2);
    for i in 1..=n {
        gens.push(diag_product_off(&[i]));
    }
    for k in 1..=n {
        for l in k + 1..=n {
            match t.tree_path(k, l).expect("valid vertices") {
                None => {
                    gens.push(diag_product_off(&[k, l]).mul_var(vars.x(k, l), 1));
                }
                Some(path) => {
                    let mut m = diag_product_off(&path);
                    for edge in path.windows(2) {
                        m = m.mul_var(vars.x(edge[0], edge[1]), 1);
                    }
                    gens.push(m);
                }
            }
        }
    }
    debug_assert!(gens.iter().all(|g| g.total_degree() == n as u64 - 1));
    SquarefreeMonomialIdeal::new(slots, gens).expect("generators are square-free and nonunit")
}

/// The generators of the edgeless-case ideal `I`, i.e. `I_T` for the empty
/// forest on `[n]`.
pub fn edgeless_ideal(n: usize) -> SquarefreeMonomialIdeal {
    let g = crate::graph::Graph::edgeless(n).expect("n >= 2");
    it_generators(&Forest::spanning(&g))
}

/// Where a square-free monomial sits relative to the edgeless-case ideal.
enum Membership {
    /// Divisible by at least `n - 1` distinct diagonal variables.
    ManyDiagonals,
    /// Divisible by exactly `n - 2` diagonals, missing `{k, l}`, and by
    /// `x_kl`: a multiple of the unique off-diagonal generator for `(k, l)`.
    OffDiagonal { k: usize, l: usize },
    NotInIdeal,
}

fn classify(m: &Monomial, vars: &VarSet) -> Membership {
    let n = vars.n();
    let missing: Vec<usize> = (1..=n).filter(|&i| !m.uses_slot(vars.x(i, i))).collect();
    match missing.len() {
        0 | 1 => Membership::ManyDiagonals,
        2 => {
            let (k, l) = (missing[0], missing[1]);
            if m.uses_slot(vars.x(k, l)) {
                Membership::OffDiagonal { k, l }
            } else {
                Membership::NotInIdeal
            }
        }
        _ => Membership::NotInIdeal,
    }
}

/// The degree-preserving bijection from the square-free monomials of the
/// edgeless-case ideal `I` to those of `I_T`.
///
/// Monomials with at least `n - 1` distinct diagonal variables map to
/// themselves, as do multiples of an off-diagonal generator whose indices
/// lie in different components of `T`.  Otherwise the multiple of the
/// `(k, l)` generator is rewritten along the unique tree path `p` from `k`
/// to `l` (oriented from the smaller endpoint): the generator becomes the
/// path generator of `p`; cofactor variables on the path edges other than
/// the last turn into the diagonal variable of their endpoint nearer `l`;
/// the last path edge variable, if present, turns into `x_kl`.  The result
/// is square-free of the same degree, lies in `I_T`, and is never divisible
/// by `x_kk` or `x_ll`.
pub fn bijection_fd(t: &Forest, m: &Monomial) -> Result<Monomial> {
    let n = t.n();
    let vars = VarSet::new(n);
    if m.slots() != vars.num_slots() {
        return Err(Error::invalid("monomial in the wrong variable universe"));
    }
    if !m.is_squarefree() {
        return Err(Error::invalid("bijection input must be square-free"));
    }
    let (k, l) = match classify(m, &vars) {
        Membership::ManyDiagonals => return Ok(m.clone()),
        Membership::NotInIdeal => {
            return Err(Error::invalid(
                "monomial does not lie in the edgeless-case ideal",
            ))
        }
        Membership::OffDiagonal { k, l } => (k, l),
    };
    let Some(path) = t.tree_path(k, l)? else {
        // different components: the generator also belongs to I_T
        return Ok(m.clone());
    };

    // the path edges, oriented k -> l; the last one is distinguished
    let path_edge_slots: Vec<usize> = path.windows(2).map(|e| vars.x(e[0], e[1])).collect();
    let (last_edge, inner_edges) = path_edge_slots.split_last().expect("path has an edge");

    let mut image = Monomial::one(vars.num_slots());
    // the path generator of p
    for i in 1..=n {
        if !path.contains(&i) {
            image = image.mul_var(vars.x(i, i), 1);
        }
    }
    for &slot in &path_edge_slots {
        image = image.mul_var(slot, 1);
    }
    // the cofactor part m_1 m_2 m_3 of the input
    let generator_slots: Vec<usize> = (1..=n)
        .filter(|&i| i != k && i != l)
        .map(|i| vars.x(i, i))
        .chain([vars.x(k, l)])
        .collect();
    for slot in 0..vars.num_slots() {
        if !m.uses_slot(slot) || generator_slots.contains(&slot) {
            continue;
        }
        if slot == *last_edge {
            // m_3 -> x_kl
            image = image.mul_var(vars.x(k, l), 1);
        } else if let Some(pos) = inner_edges.iter().position(|&e| e == slot) {
            // m_2: edge (k_{j-1}, k_j) -> diagonal of k_j
            image = image.mul_var(vars.x(path[pos + 1], path[pos + 1]), 1);
        } else {
            // m_1 passes through untouched
            image = image.mul_var(slot, 1);
        }
    }
    debug_assert!(image.is_squarefree());
    debug_assert_eq!(image.total_degree(), m.total_degree());
    debug_assert!(!image.uses_slot(vars.x(k, k)) && !image.uses_slot(vars.x(l, l)));
    Ok(image)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use itertools::Itertools;

    fn path_forest_123() -> Forest {
        let g = Graph::new(3, [(1, 2), (2, 3)]).unwrap();
        Forest::spanning(&g)
    }

    fn mono(vars: &VarSet, pairs: &[(usize, usize)]) -> Monomial {
        let mut m = Monomial::one(vars.num_slots());
        for &(i, j) in pairs {
            m = m.mul_var(vars.x(i, j), 1);
        }
        m
    }

    #[test]
    fn generators_for_path_forest() {
        let t = path_forest_123();
        let vars = VarSet::new(3);
        let ideal = it_generators(&t);
        let expected = SquarefreeMonomialIdeal::new(
            vars.num_slots(),
            vec![
                mono(&vars, &[(2, 2), (3, 3)]),
                mono(&vars, &[(1, 1), (3, 3)]),
                mono(&vars, &[(1, 1), (2, 2)]),
                mono(&vars, &[(3, 3), (1, 2)]),
                mono(&vars, &[(1, 1), (2, 3)]),
                mono(&vars, &[(1, 2), (2, 3)]),
            ],
        )
        .unwrap();
        assert_eq!(ideal, expected);
    }

    #[test]
    fn generators_for_edgeless_pair() {
        let vars = VarSet::new(2);
        let ideal = edgeless_ideal(2);
        let expected = SquarefreeMonomialIdeal::new(
            vars.num_slots(),
            vec![
                mono(&vars, &[(2, 2)]),
                mono(&vars, &[(1, 1)]),
                mono(&vars, &[(1, 2)]),
            ],
        )
        .unwrap();
        assert_eq!(ideal, expected);
    }

    #[test]
    fn generator_count_and_degree() {
        for n in 2..=6usize {
            // a forest mixing a path component with isolated vertices
            let edges: Vec<(usize, usize)> = (1..n - 1).map(|i| (i, i + 1)).collect();
            let g = Graph::new(n, edges).unwrap();
            let t = Forest::spanning(&g);
            let ideal = it_generators(&t);
            assert_eq!(ideal.num_generators(), n * (n + 1) / 2);
            assert!(ideal
                .generators()
                .iter()
                .all(|m| m.total_degree() == n as u64 - 1 && m.is_squarefree()));
        }
    }

    #[test]
    fn bijection_examples() {
        let t = path_forest_123();
        let vars = VarSet::new(3);

        // m = 1 case of the rewrite
        let input = mono(&vars, &[(2, 2), (1, 3)]);
        let image = bijection_fd(&t, &input).unwrap();
        assert_eq!(image, mono(&vars, &[(1, 2), (2, 3)]));

        // the last-edge variable turns into x_13
        let input = mono(&vars, &[(2, 2), (1, 3), (2, 3)]);
        let image = bijection_fd(&t, &input).unwrap();
        assert_eq!(image, mono(&vars, &[(1, 2), (2, 3), (1, 3)]));

        // n-1 distinct diagonals: identity
        let input = mono(&vars, &[(1, 1), (2, 2), (1, 3)]);
        assert_eq!(bijection_fd(&t, &input).unwrap(), input);

        // not in the ideal
        let outside = mono(&vars, &[(1, 2)]);
        assert!(bijection_fd(&t, &outside).is_err());
    }

    #[test]
    fn bijection_identity_across_components() {
        let g = Graph::new(4, [(1, 2)]).unwrap();
        let t = Forest::spanning(&g);
        let vars = VarSet::new(4);
        // multiple of the (3,4) generator: 3 and 4 in different components
        let input = mono(&vars, &[(1, 1), (2, 2), (3, 4)]);
        assert_eq!(bijection_fd(&t, &input).unwrap(), input);
    }

    #[test]
    fn bijection_counts_on_small_forest() {
        // full enumeration on n = 3: injective per degree, image inside I_T
        let t = path_forest_123();
        let vars = VarSet::new(3);
        let i_ideal = edgeless_ideal(3);
        let t_ideal = it_generators(&t);
        let nx = vars.num_x();
        for d in 0..=nx as u64 {
            let inputs: Vec<Monomial> = (0..nx)
                .combinations(d as usize)
                .map(|slots| {
                    let mut m = Monomial::one(vars.num_slots());
                    for s in slots {
                        m = m.mul_var(s, 1);
                    }
                    m
                })
                .filter(|m| i_ideal.contains_monomial(m))
                .collect();
            let images: Vec<Monomial> = inputs
                .iter()
                .map(|m| bijection_fd(&t, m).unwrap())
                .collect();
            let distinct: std::collections::BTreeSet<_> = images.iter().cloned().collect();
            assert_eq!(distinct.len(), images.len(), "injective in degree {d}");
            assert!(images.iter().all(|m| t_ideal.contains_monomial(m)));
            assert!(images.iter().all(|m| m.total_degree() == d));
        }
    }
}
