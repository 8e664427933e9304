//! Splitting the resolution matrices by weight-degree classes and by basis
//! kind.  The degree split drives the pruning argument; the basis split
//! exposes the structural facts about where diagonal and off-diagonal
//! variables can appear.

use crate::graph::Graph;
use crate::poly::{PolyMatrix, WeightVector};
use crate::{Error, Result};

use super::complex::{BasisElement, GradedComplex};

/// Column classification of each module of the generic complex by graph
/// weight: the summands of the minimal twist class `2(n-1) + 2(i-1)` ("top")
/// versus those of smaller degree ("low").  For a connected graph every
/// low list is empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockStructure {
    target: [u64; 3],
    top_cols: [Vec<usize>; 3],
    low_cols: [Vec<usize>; 3],
}

impl BlockStructure {
    /// Classifies the given complex (generic, or its homogenization) with
    /// respect to the weight of `g`.
    pub fn analyze(c: &GradedComplex, g: &Graph) -> Result<BlockStructure> {
        if g.n() != c.n() {
            return Err(Error::invalid("graph size does not match the complex"));
        }
        let w = WeightVector::for_graph(g);
        let degrees = c.weight_degrees(&w)?;
        let n = c.n() as u64;
        let mut target = [0u64; 3];
        let mut top_cols: [Vec<usize>; 3] = Default::default();
        let mut low_cols: [Vec<usize>; 3] = Default::default();
        for i in 0..3 {
            target[i] = 2 * (n - 1) + 2 * i as u64;
            for (col, &deg) in degrees[i].iter().enumerate() {
                if deg == target[i] {
                    top_cols[i].push(col);
                } else if deg < target[i] {
                    low_cols[i].push(col);
                } else {
                    return Err(Error::contract(format!(
                        "summand {col} at position {} exceeds the top degree",
                        i + 1
                    )));
                }
            }
        }
        Ok(BlockStructure {
            target,
            top_cols,
            low_cols,
        })
    }

    /// Top-degree column indices at homological position `i` in `1..=3`.
    pub fn top_cols(&self, i: usize) -> &[usize] {
        &self.top_cols[i - 1]
    }

    /// Lower-degree column indices at homological position `i`.
    pub fn low_cols(&self, i: usize) -> &[usize] {
        &self.low_cols[i - 1]
    }

    fn row_split(&self, i: usize, c: &GradedComplex) -> (Vec<usize>, Vec<usize>) {
        if i == 1 {
            // homological position 0 is the ring itself: a single top row
            (Vec::new(), vec![0])
        } else {
            let _ = c;
            (self.low_cols[i - 2].clone(), self.top_cols[i - 2].clone())
        }
    }

    /// `A_i`: lower-degree rows times lower-degree columns of the `i`-th map.
    pub fn a_block(&self, c: &GradedComplex, i: usize) -> PolyMatrix {
        let (low_rows, _) = self.row_split(i, c);
        c.map(i).submatrix(&low_rows, self.low_cols(i))
    }

    /// `B_i`: lower-degree rows times top-degree columns.
    pub fn b_block(&self, c: &GradedComplex, i: usize) -> PolyMatrix {
        let (low_rows, _) = self.row_split(i, c);
        c.map(i).submatrix(&low_rows, self.top_cols(i))
    }

    /// `C_i`: top-degree rows times lower-degree columns.
    pub fn c_block(&self, c: &GradedComplex, i: usize) -> PolyMatrix {
        let (_, top_rows) = self.row_split(i, c);
        c.map(i).submatrix(&top_rows, self.low_cols(i))
    }

    /// `D_i`: top-degree rows times top-degree columns — the part that
    /// survives pruning.
    pub fn d_block(&self, c: &GradedComplex, i: usize) -> PolyMatrix {
        let (_, top_rows) = self.row_split(i, c);
        c.map(i).submatrix(&top_rows, self.top_cols(i))
    }
}

fn label_rows(c: &GradedComplex, i: usize, pick: impl Fn(&BasisElement) -> bool) -> Vec<usize> {
    c.labels(i)
        .iter()
        .enumerate()
        .filter(|(_, l)| pick(l))
        .map(|(idx, _)| idx)
        .collect()
}

/// The rows of the second map belonging to diagonal basis elements, times
/// its pair columns: all entries here are off-diagonal variables.
pub fn gamma2(c: &GradedComplex) -> PolyMatrix {
    let rows = label_rows(c, 1, |l| matches!(l, BasisElement::Upper(i, j) if i == j));
    let cols: Vec<usize> = c
        .labels(2)
        .iter()
        .enumerate()
        .filter(|(_, l)| matches!(l, BasisElement::Pair(_, _)))
        .map(|(idx, _)| idx)
        .collect();
    c.map(2).submatrix(&rows, &cols)
}

/// The off-diagonal rows of the second map times its pair columns.
pub fn delta2(c: &GradedComplex) -> PolyMatrix {
    let rows = label_rows(c, 1, |l| matches!(l, BasisElement::Upper(i, j) if i != j));
    let cols: Vec<usize> = c
        .labels(2)
        .iter()
        .enumerate()
        .filter(|(_, l)| matches!(l, BasisElement::Pair(_, _)))
        .map(|(idx, _)| idx)
        .collect();
    c.map(2).submatrix(&rows, &cols)
}

/// The diagonal-difference rows of the third map.
pub fn gamma3(c: &GradedComplex) -> PolyMatrix {
    let rows = label_rows(c, 2, |l| matches!(l, BasisElement::DiagDiff(_)));
    c.map(3)
        .submatrix(&rows, &(0..c.map(3).cols()).collect::<Vec<_>>())
}

/// The pair rows of the third map.
pub fn delta3(c: &GradedComplex) -> PolyMatrix {
    let rows = label_rows(c, 2, |l| matches!(l, BasisElement::Pair(_, _)));
    c.map(3)
        .submatrix(&rows, &(0..c.map(3).cols()).collect::<Vec<_>>())
}
