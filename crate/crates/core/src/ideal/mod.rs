//! The sparse symmetric matrix of a graph, its submaximal minors, the
//! combinatorial ideals they degenerate to, and the Hilbert data tying the
//! two together.

mod hilbert;
mod monomial_ideal;
mod tree_ideal;

pub use hilbert::{binom, hf_closed_form, hf_recursion, hf_ring, hilbert_from_faces};
pub use monomial_ideal::{face_vector, ideal_height, FaceVector, SquarefreeMonomialIdeal};
pub use tree_ideal::{bijection_fd, edgeless_ideal, it_generators};

use std::collections::HashMap;

use crate::graph::Graph;
use crate::poly::{
    determinant, initial_form, signed_cofactors_deleting_row, CompositeWeightOrder, Monomial,
    PolyMatrix, Polynomial, VarSet,
};
use crate::{Error, Result};

/// Default cap on the number of simple paths enumerated per vertex pair.
pub const DEFAULT_PATH_CAP: usize = 100_000;

/// The generic symmetric matrix with zeros imposed by a graph: entry
/// `(i, j)` is the variable `x_ij` when `i = j` or `ij` is an edge, and zero
/// otherwise.
#[derive(Debug, Clone)]
pub struct SparseSymmetricMatrix {
    graph: Graph,
    vars: VarSet,
    matrix: PolyMatrix,
    zeroed: Vec<usize>,
}

impl SparseSymmetricMatrix {
    /// The matrix `X_G` for a graph.
    pub fn new(graph: &Graph) -> Self {
        let n = graph.n();
        let vars = VarSet::new(n);
        let slots = vars.num_slots();
        let matrix = PolyMatrix::from_fn(n, n, slots, |r, c| {
            let (i, j) = (r + 1, c + 1);
            if i == j || graph.has_edge(i, j) {
                Polynomial::variable(slots, vars.x(i, j))
            } else {
                Polynomial::zero(slots)
            }
        });
        let zeroed = (0..vars.num_x())
            .filter(|&slot| {
                let (i, j) = vars.pair_of(slot).unwrap();
                i != j && !graph.has_edge(i, j)
            })
            .collect();
        SparseSymmetricMatrix {
            graph: graph.clone(),
            vars,
            matrix,
            zeroed,
        }
    }

    /// The fully generic matrix `X`, i.e. the complete-graph case.
    pub fn generic(n: usize) -> Result<Self> {
        Ok(SparseSymmetricMatrix::new(&Graph::complete(n)?))
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn matrix(&self) -> &PolyMatrix {
        &self.matrix
    }

    /// The slots of `Z`: off-diagonal variables at non-edges.
    pub fn zeroed_slots(&self) -> &[usize] {
        &self.zeroed
    }

    /// The principal minor on the complement of `removed` vertices.
    pub fn principal_minor_excluding(&self, removed: &[usize]) -> Result<Polynomial> {
        let keep: Vec<usize> = (0..self.n())
            .filter(|idx| !removed.contains(&(idx + 1)))
            .collect();
        determinant(&self.matrix.submatrix(&keep, &keep))
    }
}

/// One signed submaximal minor: `(-1)^(k+l) det(X_{[n]-k, [n]-l})`.
#[derive(Debug, Clone)]
pub struct MinorGenerator {
    pub k: usize,
    pub l: usize,
    pub poly: Polynomial,
}

/// All `C(n+1,2)` signed cofactors, principal minors first, then the mixed
/// pairs in lexicographic order — the basis order of the resolution.
///
/// Cofactors with the same deleted row share one subset-DP pass, so the
/// related minors reuse each other's sub-determinants.
pub fn minor_generators(m: &SparseSymmetricMatrix) -> Result<Vec<MinorGenerator>> {
    let n = m.n();
    let mut by_row: Vec<Vec<Polynomial>> = Vec::with_capacity(n);
    for k in 1..=n {
        by_row.push(signed_cofactors_deleting_row(m.matrix(), k)?);
    }
    let mut out = Vec::with_capacity(n * (n + 1) / 2);
    for k in 1..=n {
        out.push(MinorGenerator {
            k,
            l: k,
            poly: by_row[k - 1][k - 1].clone(),
        });
    }
    for k in 1..=n {
        for l in k + 1..=n {
            out.push(MinorGenerator {
                k,
                l,
                poly: by_row[k - 1][l - 1].clone(),
            });
        }
    }
    Ok(out)
}

/// The path expansion of an off-diagonal cofactor: the signed sum over all
/// simple paths `p` from `k` to `l` of the principal minor on the vertices
/// off the path times the path monomial `x_p`.
pub fn path_determinant_rhs(
    m: &SparseSymmetricMatrix,
    k: usize,
    l: usize,
    path_cap: usize,
) -> Result<Polynomial> {
    let n = m.n();
    if k >= l {
        return Err(Error::invalid(format!(
            "path expansion needs k < l, got ({k},{l})"
        )));
    }
    if l > n {
        return Err(Error::invalid(format!("vertex {l} out of range for n={n}")));
    }
    let paths = simple_paths(m.graph(), k, l, path_cap)?;
    let slots = m.vars().num_slots();
    let mut minor_cache: HashMap<u64, Polynomial> = HashMap::new();
    let mut acc = Polynomial::zero(slots);
    for path in &paths {
        let minor = {
            let mask = path.iter().fold(0u64, |mask, &v| mask | 1 << v);
            match minor_cache.get(&mask) {
                Some(p) => p.clone(),
                None => {
                    let p = m.principal_minor_excluding(path)?;
                    minor_cache.insert(mask, p.clone());
                    p
                }
            }
        };
        if minor.is_zero() {
            continue;
        }
        let mut mono = Monomial::one(slots);
        for edge in path.windows(2) {
            mono = mono.mul_var(m.vars().x(edge[0], edge[1]), 1);
        }
        let term = Polynomial::monomial(slots, mono, num_rational::BigRational::from_integer(1.into()));
        let signed = if (path.len() - 1) % 2 == 0 {
            minor.mul(&term)
        } else {
            minor.mul(&term).negate()
        };
        acc = &acc + &signed;
    }
    Ok(acc)
}

/// All simple paths between two vertices, as vertex sequences.
fn simple_paths(g: &Graph, k: usize, l: usize, cap: usize) -> Result<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    let mut stack = vec![k];
    let mut visited = vec![false; g.n() + 1];
    visited[k] = true;
    dfs_paths(g, l, cap, &mut stack, &mut visited, &mut out)?;
    Ok(out)
}

fn dfs_paths(
    g: &Graph,
    target: usize,
    cap: usize,
    stack: &mut Vec<usize>,
    visited: &mut Vec<bool>,
    out: &mut Vec<Vec<usize>>,
) -> Result<()> {
    let current = *stack.last().unwrap();
    if current == target {
        if out.len() >= cap {
            return Err(Error::resource(format!(
                "more than {cap} simple paths; raise the path cap"
            )));
        }
        out.push(stack.clone());
        return Ok(());
    }
    for next in g.neighbors(current) {
        if !visited[next] {
            visited[next] = true;
            stack.push(next);
            dfs_paths(g, target, cap, stack, visited, out)?;
            stack.pop();
            visited[next] = false;
        }
    }
    Ok(())
}

/// The initial ideal of the nonzero minors under a composite weight order.
///
/// Each weight-initial form must already be a single monomial; a multi-term
/// form would contradict the degeneration this toolkit is built on, so it is
/// reported as a contract violation rather than silently refined away.
pub fn initial_ideal_of_minors(
    m: &SparseSymmetricMatrix,
    order: &CompositeWeightOrder,
) -> Result<SquarefreeMonomialIdeal> {
    let mut gens = Vec::new();
    for gen in minor_generators(m)? {
        if gen.poly.is_zero() {
            continue;
        }
        let init = initial_form(&gen.poly, order, false)?;
        let Some((mono, _)) = init.single_term() else {
            return Err(Error::contract(format!(
                "weight-initial form of the ({},{}) minor has {} terms",
                gen.k,
                gen.l,
                init.num_terms()
            )));
        };
        gens.push(mono.clone());
    }
    SquarefreeMonomialIdeal::new(m.vars().num_slots(), gens)
}
