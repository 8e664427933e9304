//! The explicit three-step resolution of the generic submaximal-minor ideal,
//! its weight homogenization, specializations and pruning.

use std::fmt;

use num_rational::BigRational;
use num_traits::One;

use crate::graph::Graph;
use crate::ideal::{minor_generators, SparseSymmetricMatrix};
use crate::poly::{PolyMatrix, Polynomial, VarSet, WeightVector};
use crate::{Error, Result};

/// A basis element of one of the free modules in the resolution.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasisElement {
    /// `E_ij` with `i <= j`: the symmetric-part basis of the first module.
    Upper(usize, usize),
    /// `E_ii - E_11` with `i >= 2`, in the trace-zero module.
    DiagDiff(usize),
    /// `E_ij` with `i != j` (order matters), in the trace-zero module.
    Pair(usize, usize),
    /// `E_ij - E_ji` with `i < j`, in the alternating module.
    AltPair(usize, usize),
}

impl fmt::Display for BasisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisElement::Upper(i, j) | BasisElement::Pair(i, j) => write!(f, "E{i}{j}"),
            BasisElement::DiagDiff(i) => write!(f, "E{i}{i}-E11"),
            BasisElement::AltPair(i, j) => write!(f, "E{i}{j}-E{j}{i}"),
        }
    }
}

impl BasisElement {
    /// Unambiguous form used in JSON output.
    pub fn json_label(&self) -> String {
        match self {
            BasisElement::Upper(i, j) | BasisElement::Pair(i, j) => format!("E_{i}_{j}"),
            BasisElement::DiagDiff(i) => format!("E_{i}_{i}-E_1_1"),
            BasisElement::AltPair(i, j) => format!("E_{i}_{j}-E_{j}_{i}"),
        }
    }
}

/// The basis of the first module: diagonal positions first, then the upper
/// pairs in lexicographic order.
pub fn upper_basis(n: usize) -> Vec<BasisElement> {
    let mut basis: Vec<BasisElement> = (1..=n).map(|i| BasisElement::Upper(i, i)).collect();
    for i in 1..=n {
        for j in i + 1..=n {
            basis.push(BasisElement::Upper(i, j));
        }
    }
    basis
}

/// The basis of the trace-zero module: `E_22-E_11, ..., E_nn-E_11`, then the
/// off-diagonal pairs interleaved as `E_12, E_21, E_13, E_31, ...`.
pub fn trace_zero_basis(n: usize) -> Vec<BasisElement> {
    let mut basis: Vec<BasisElement> = (2..=n).map(BasisElement::DiagDiff).collect();
    for i in 1..=n {
        for j in i + 1..=n {
            basis.push(BasisElement::Pair(i, j));
            basis.push(BasisElement::Pair(j, i));
        }
    }
    basis
}

/// The basis of the alternating module, pairs in lexicographic order.
pub fn alternating_basis(n: usize) -> Vec<BasisElement> {
    let mut basis = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            basis.push(BasisElement::AltPair(i, j));
        }
    }
    basis
}

/// A length-three complex of free modules given by the matrices of its
/// differentials, with one twist and one basis label per free summand.
///
/// Consecutive compositions are verified to be zero on every construction
/// and after every transformation, so a transcription error in the explicit
/// matrices surfaces immediately instead of corrupting downstream Betti
/// numbers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedComplex {
    n: usize,
    maps: [PolyMatrix; 3],
    labels: [Vec<BasisElement>; 3],
}

impl GradedComplex {
    fn assemble(n: usize, maps: [PolyMatrix; 3], labels: [Vec<BasisElement>; 3]) -> Result<Self> {
        let c = GradedComplex { n, maps, labels };
        c.verify_complex()?;
        Ok(c)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The matrix of the `i`-th differential, `i` in `1..=3`.
    pub fn map(&self, i: usize) -> &PolyMatrix {
        &self.maps[i - 1]
    }

    /// Basis labels of the `i`-th free module, `i` in `1..=3`.
    pub fn labels(&self, i: usize) -> &[BasisElement] {
        &self.labels[i - 1]
    }

    /// Ranks of the three free modules.
    pub fn shape(&self) -> [usize; 3] {
        [self.maps[0].cols(), self.maps[1].cols(), self.maps[2].cols()]
    }

    pub fn slots(&self) -> usize {
        self.maps[0].slots()
    }

    /// Checks that consecutive compositions vanish identically.
    pub fn verify_complex(&self) -> Result<()> {
        if self.maps[0].cols() != self.maps[1].rows() || self.maps[1].cols() != self.maps[2].rows()
        {
            return Err(Error::contract("differential dimensions do not chain"));
        }
        for i in 0..2 {
            if !self.maps[i].matmul(&self.maps[i + 1]).is_zero() {
                return Err(Error::contract(format!(
                    "composition d_{} d_{} is not zero",
                    i + 1,
                    i + 2
                )));
            }
        }
        Ok(())
    }

    /// Entrywise substitution.  The result is checked to still be a complex.
    pub fn specialize(&self, sub: Specialization) -> Result<GradedComplex> {
        let vars = VarSet::new(self.n);
        let apply = |p: &Polynomial| -> Polynomial {
            match sub {
                Specialization::TZero => p.substitute_zero(&[vars.t()]),
                Specialization::TOne => {
                    p.substitute_constant(vars.t(), &BigRational::one())
                }
                Specialization::ZeroAtNonEdges(g) => {
                    let zeroed: Vec<usize> = (0..vars.num_x())
                        .filter(|&slot| {
                            let (i, j) = vars.pair_of(slot).unwrap();
                            i != j && !g.has_edge(i, j)
                        })
                        .collect();
                    p.substitute_zero(&zeroed)
                }
            }
        };
        GradedComplex::assemble(
            self.n,
            [
                self.maps[0].map(apply),
                self.maps[1].map(apply),
                self.maps[2].map(apply),
            ],
            self.labels.clone(),
        )
    }

    /// One pass of the pruning procedure: erase the zero columns of the
    /// first matrix together with the matching rows of the second, then the
    /// zero columns that emerge in the cropped second matrix together with
    /// the matching rows of the third, then the zero columns of the cropped
    /// third matrix.  Twists and labels follow the deletions.
    pub fn prune(&self) -> Result<GradedComplex> {
        let keep1: Vec<usize> = (0..self.maps[0].cols())
            .filter(|&c| !self.maps[0].col_is_zero(c))
            .collect();
        let d1 = self.maps[0].submatrix(&[0], &keep1);
        let d2_rows = self.maps[1].submatrix(&keep1, &(0..self.maps[1].cols()).collect::<Vec<_>>());

        let keep2: Vec<usize> = (0..d2_rows.cols())
            .filter(|&c| !d2_rows.col_is_zero(c))
            .collect();
        let d2 = d2_rows.submatrix(&(0..d2_rows.rows()).collect::<Vec<_>>(), &keep2);
        let d3_rows = self.maps[2].submatrix(&keep2, &(0..self.maps[2].cols()).collect::<Vec<_>>());

        let keep3: Vec<usize> = (0..d3_rows.cols())
            .filter(|&c| !d3_rows.col_is_zero(c))
            .collect();
        let d3 = d3_rows.submatrix(&(0..d3_rows.rows()).collect::<Vec<_>>(), &keep3);

        let select = |labels: &[BasisElement], keep: &[usize]| -> Vec<BasisElement> {
            keep.iter().map(|&i| labels[i]).collect()
        };
        GradedComplex::assemble(
            self.n,
            [d1, d2, d3],
            [
                select(&self.labels[0], &keep1),
                select(&self.labels[1], &keep2),
                select(&self.labels[2], &keep3),
            ],
        )
    }

    /// Per-summand weight degrees of the three modules under a weight
    /// vector, plus degree 0 for the ring itself.
    ///
    /// A first-module summand carries the top weight of its cofactor entry;
    /// deeper summands carry the maximum, over the rows where their column
    /// is nonzero, of the entry weight plus the row's degree.  Requires all
    /// first-map entries nonzero, i.e. the generic complex.
    pub fn weight_degrees(&self, w: &WeightVector) -> Result<[Vec<u64>; 3]> {
        let mut deg1 = Vec::with_capacity(self.maps[0].cols());
        for c in 0..self.maps[0].cols() {
            deg1.push(w.top_weight(self.maps[0].entry(0, c)).map_err(|_| {
                Error::invalid("weight degrees need a complex with nonzero cofactor entries")
            })?);
        }
        let column_degrees = |m: &PolyMatrix, row_degrees: &[u64]| -> Result<Vec<u64>> {
            let mut out = Vec::with_capacity(m.cols());
            for c in 0..m.cols() {
                let mut best: Option<u64> = None;
                for r in 0..m.rows() {
                    let e = m.entry(r, c);
                    if e.is_zero() {
                        continue;
                    }
                    let d = w.top_weight(e)? + row_degrees[r];
                    best = Some(best.map_or(d, |b| b.max(d)));
                }
                out.push(best.ok_or_else(|| Error::invalid("zero column has no weight degree"))?);
            }
            Ok(out)
        };
        let deg2 = column_degrees(&self.maps[1], &deg1)?;
        let deg3 = column_degrees(&self.maps[2], &deg2)?;
        Ok([deg1, deg2, deg3])
    }

    /// Homogenizes the complex with respect to the graph weight, extending
    /// the ring by `t` (weight 1).
    ///
    /// Cofactor entries are homogenized to their own top weight; every entry
    /// of the deeper maps is then scaled by the `t`-power that lifts its
    /// combined (entry + row) degree to its column's degree.  By
    /// construction no column becomes divisible by `t` and the result is
    /// still a complex.
    pub fn homogenize(&self, g: &Graph) -> Result<GradedComplex> {
        if g.n() != self.n {
            return Err(Error::invalid("graph size does not match the complex"));
        }
        let vars = VarSet::new(self.n);
        let w = WeightVector::for_graph(g);
        let degrees = self.weight_degrees(&w)?;

        let homogenize_entry = |p: &Polynomial, target: u64, base: u64| -> Result<Polynomial> {
            let mut out = Polynomial::zero(p.slots());
            for (m, c) in p.terms() {
                let weight = w.weight_of(m) + base;
                if weight > target {
                    return Err(Error::contract(
                        "entry weight exceeds its column degree",
                    ));
                }
                out.add_term(m.mul_var(vars.t(), (target - weight) as u16), c.clone());
            }
            Ok(out)
        };

        let mut maps = self.maps.clone();
        for c in 0..maps[0].cols() {
            let h = homogenize_entry(maps[0].entry(0, c), degrees[0][c], 0)?;
            maps[0].set_entry(0, c, h);
        }
        for i in 1..3 {
            let row_degrees = degrees[i - 1].clone();
            let col_degrees = degrees[i].clone();
            for r in 0..maps[i].rows() {
                for c in 0..maps[i].cols() {
                    if maps[i].entry(r, c).is_zero() {
                        continue;
                    }
                    let h =
                        homogenize_entry(maps[i].entry(r, c), col_degrees[c], row_degrees[r])?;
                    maps[i].set_entry(r, c, h);
                }
            }
        }
        GradedComplex::assemble(self.n, maps, self.labels.clone())
    }
}

/// Entrywise substitutions applied to a whole complex.
#[derive(Debug, Clone, Copy)]
pub enum Specialization<'a> {
    /// `t := 0`.
    TZero,
    /// `t := 1`, collapsing a homogenization.
    TOne,
    /// `x_ij := 0` for every non-edge `ij` of the graph.
    ZeroAtNonEdges(&'a Graph),
}

/// Builds the explicit resolution of the generic case: the first map is the
/// row of signed cofactors (principal ones first), the second sends a
/// trace-zero matrix `N` to `X N` modulo alternating matrices, and the third
/// sends an alternating matrix `A` to `A X`.  Twists are `n-1`, `n`, `n+1`.
pub fn jozefiak_complex(n: usize) -> Result<GradedComplex> {
    if n < 2 {
        return Err(Error::invalid("the resolution needs n >= 2"));
    }
    let generic = SparseSymmetricMatrix::generic(n)?;
    let vars = *generic.vars();
    let slots = vars.num_slots();
    let x = |i: usize, j: usize| Polynomial::variable(slots, vars.x(i, j));

    let f1 = upper_basis(n);
    let f2 = trace_zero_basis(n);
    let f3 = alternating_basis(n);

    let cofactors = minor_generators(&generic)?;
    let d1 = PolyMatrix::from_fn(1, f1.len(), slots, |_, c| cofactors[c].poly.clone())
        .with_twists(vec![0], vec![n as i64 - 1; f1.len()]);

    // A sparse n x n polynomial matrix as a map from positions to entries.
    type Entries = std::collections::BTreeMap<(usize, usize), Polynomial>;
    let add_to = |entries: &mut Entries, pos: (usize, usize), p: Polynomial| {
        let slot = entries
            .entry(pos)
            .or_insert_with(|| Polynomial::zero(slots));
        *slot = &*slot + &p;
    };

    // X * E_cb has column c of X placed in column b.
    let x_times_unit = |entries: &mut Entries, c: usize, b: usize, negate: bool| {
        for a in 1..=n {
            let v = if negate { x(a, c).negate() } else { x(a, c) };
            add_to(entries, (a, b), v);
        }
    };

    // coefficient extraction in the upper-triangular basis: E_ab for a < b
    // picks up both matrix positions (a,b) and (b,a)
    let upper_coefficient = |entries: &Entries, label: BasisElement| -> Polynomial {
        let BasisElement::Upper(a, b) = label else {
            unreachable!("first module has upper labels")
        };
        let mut p = entries
            .get(&(a, b))
            .cloned()
            .unwrap_or_else(|| Polynomial::zero(slots));
        if a != b {
            if let Some(q) = entries.get(&(b, a)) {
                p = &p + q;
            }
        }
        p
    };

    let mut d2 = PolyMatrix::zero(f1.len(), f2.len(), slots).with_twists(
        vec![n as i64 - 1; f1.len()],
        vec![n as i64; f2.len()],
    );
    for (col, &label) in f2.iter().enumerate() {
        let mut entries = Entries::new();
        match label {
            BasisElement::DiagDiff(i) => {
                x_times_unit(&mut entries, i, i, false);
                x_times_unit(&mut entries, 1, 1, true);
            }
            BasisElement::Pair(i, j) => x_times_unit(&mut entries, i, j, false),
            _ => unreachable!("second module has trace-zero labels"),
        }
        for (row, &row_label) in f1.iter().enumerate() {
            let p = upper_coefficient(&entries, row_label);
            if !p.is_zero() {
                d2.set_entry(row, col, p);
            }
        }
    }

    let mut d3 = PolyMatrix::zero(f2.len(), f3.len(), slots).with_twists(
        vec![n as i64; f2.len()],
        vec![n as i64 + 1; f3.len()],
    );
    for (col, &label) in f3.iter().enumerate() {
        let BasisElement::AltPair(i, j) = label else {
            unreachable!("third module has alternating labels")
        };
        // (E_ij - E_ji) X: row i is row j of X, row j is minus row i of X
        let mut entries = Entries::new();
        for b in 1..=n {
            add_to(&mut entries, (i, b), x(j, b));
            add_to(&mut entries, (j, b), x(i, b).negate());
        }
        for (row, &row_label) in f2.iter().enumerate() {
            let p = match row_label {
                BasisElement::DiagDiff(a) => entries
                    .get(&(a, a))
                    .cloned()
                    .unwrap_or_else(|| Polynomial::zero(slots)),
                BasisElement::Pair(a, b) => entries
                    .get(&(a, b))
                    .cloned()
                    .unwrap_or_else(|| Polynomial::zero(slots)),
                _ => unreachable!(),
            };
            if !p.is_zero() {
                d3.set_entry(row, col, p);
            }
        }
    }

    GradedComplex::assemble(n, [d1, d2, d3], [f1, f2, f3])
}
