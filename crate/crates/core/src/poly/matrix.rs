//! Matrices of polynomials with graded twist metadata, and exact symbolic
//! determinants.

use std::collections::HashMap;

use num_rational::BigRational;

use crate::{Error, Result};

use super::polynomial::Polynomial;

/// A rows x cols grid of polynomials with one integer degree shift per row
/// and per column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    slots: usize,
    entries: Vec<Polynomial>,
    row_twists: Vec<i64>,
    col_twists: Vec<i64>,
}

impl PolyMatrix {
    pub fn from_fn(
        rows: usize,
        cols: usize,
        slots: usize,
        mut f: impl FnMut(usize, usize) -> Polynomial,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                let p = f(r, c);
                assert_eq!(p.slots(), slots, "entry universe mismatch");
                entries.push(p);
            }
        }
        PolyMatrix {
            rows,
            cols,
            slots,
            entries,
            row_twists: vec![0; rows],
            col_twists: vec![0; cols],
        }
    }

    pub fn zero(rows: usize, cols: usize, slots: usize) -> Self {
        PolyMatrix::from_fn(rows, cols, slots, |_, _| Polynomial::zero(slots))
    }

    pub fn with_twists(mut self, row_twists: Vec<i64>, col_twists: Vec<i64>) -> Self {
        assert_eq!(row_twists.len(), self.rows, "row twist length");
        assert_eq!(col_twists.len(), self.cols, "column twist length");
        self.row_twists = row_twists;
        self.col_twists = col_twists;
        self
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn slots(&self) -> usize {
        self.slots
    }

    pub fn row_twists(&self) -> &[i64] {
        &self.row_twists
    }

    pub fn col_twists(&self) -> &[i64] {
        &self.col_twists
    }

    pub fn entry(&self, r: usize, c: usize) -> &Polynomial {
        assert!(r < self.rows && c < self.cols, "index out of range");
        &self.entries[r * self.cols + c]
    }

    pub fn set_entry(&mut self, r: usize, c: usize, p: Polynomial) {
        assert!(r < self.rows && c < self.cols, "index out of range");
        assert_eq!(p.slots(), self.slots);
        self.entries[r * self.cols + c] = p;
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|p| p.is_zero())
    }

    pub fn col_is_zero(&self, c: usize) -> bool {
        (0..self.rows).all(|r| self.entry(r, c).is_zero())
    }

    /// Matrix product; twists are inherited from the outer dimensions.
    pub fn matmul(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.cols, other.rows, "inner dimensions differ");
        let mut out = PolyMatrix::zero(self.rows, other.cols, self.slots).with_twists(
            self.row_twists.clone(),
            other.col_twists.clone(),
        );
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = Polynomial::zero(self.slots);
                for k in 0..self.cols {
                    let a = self.entry(r, k);
                    if a.is_zero() {
                        continue;
                    }
                    let b = other.entry(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    acc = &acc + &a.mul(b);
                }
                out.set_entry(r, c, acc);
            }
        }
        out
    }

    /// Applies a polynomial map entrywise, keeping the twist data.
    pub fn map(&self, mut f: impl FnMut(&Polynomial) -> Polynomial) -> PolyMatrix {
        let mut out = self.clone();
        for e in &mut out.entries {
            *e = f(e);
        }
        out
    }

    /// Keeps the selected rows and columns, in the given index order.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> PolyMatrix {
        let mut out = PolyMatrix::from_fn(rows.len(), cols.len(), self.slots, |r, c| {
            self.entry(rows[r], cols[c]).clone()
        });
        out.row_twists = rows.iter().map(|&r| self.row_twists[r]).collect();
        out.col_twists = cols.iter().map(|&c| self.col_twists[c]).collect();
        out
    }

    /// Deletes one row and one column (0-based).
    pub fn minor_matrix(&self, row: usize, col: usize) -> PolyMatrix {
        let rows: Vec<usize> = (0..self.rows).filter(|&r| r != row).collect();
        let cols: Vec<usize> = (0..self.cols).filter(|&c| c != col).collect();
        self.submatrix(&rows, &cols)
    }
}

/// Exact determinant by dynamic programming over column subsets (Laplace
/// expansion along the last row of each leading submatrix), skipping zero
/// entries.  Requires at most 64 columns.
pub fn determinant(m: &PolyMatrix) -> Result<Polynomial> {
    if !m.is_square() {
        return Err(Error::invalid(format!(
            "determinant of a {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    let n = m.rows();
    if n == 0 {
        return Ok(Polynomial::one(m.slots()));
    }
    assert!(n <= 64, "determinant supports at most 64 columns");
    let full: u64 = if n == 64 { u64::MAX } else { (1 << n) - 1 };
    let mut memo: HashMap<u64, Polynomial> = HashMap::new();
    memo.insert(0, Polynomial::one(m.slots()));
    Ok(det_subset(m, &(0..n).collect::<Vec<_>>(), full, &mut memo))
}

/// Determinant of the submatrix on the first `|subset|` listed rows and the
/// column subset encoded by the bitmask.
fn det_subset(m: &PolyMatrix, row_order: &[usize], subset: u64, memo: &mut HashMap<u64, Polynomial>) -> Polynomial {
    if let Some(p) = memo.get(&subset) {
        return p.clone();
    }
    let size = subset.count_ones() as usize;
    let row = row_order[size - 1];
    let mut acc = Polynomial::zero(m.slots());
    let mut position = 0usize;
    for col in 0..64usize {
        if subset >> col & 1 == 0 {
            continue;
        }
        let entry = m.entry(row, col);
        if !entry.is_zero() {
            let sub = det_subset(m, row_order, subset & !(1 << col), memo);
            if !sub.is_zero() {
                let term = entry.mul(&sub);
                // sign of expanding along the last row at this column position
                if (size - 1 + position) % 2 == 0 {
                    acc = &acc + &term;
                } else {
                    acc = &acc - &term;
                }
            }
        }
        position += 1;
        if position == size {
            break;
        }
    }
    memo.insert(subset, acc.clone());
    acc
}

/// The signed cofactor `(-1)^(k+l) * det(M with row k and column l deleted)`
/// of a square matrix; `k`, `l` are 1-based.
pub fn signed_cofactor(m: &PolyMatrix, k: usize, l: usize) -> Result<Polynomial> {
    if !m.is_square() {
        return Err(Error::invalid("cofactor of a non-square matrix"));
    }
    let n = m.rows();
    if k < 1 || l < 1 || k > n || l > n {
        return Err(Error::invalid(format!(
            "cofactor index ({k},{l}) out of range for a {n}x{n} matrix"
        )));
    }
    let det = determinant(&m.minor_matrix(k - 1, l - 1))?;
    Ok(if (k + l) % 2 == 0 { det } else { det.negate() })
}

/// All signed cofactors `(-1)^(k+l) det(M_{minus k, minus l})` for a fixed
/// deleted row `k` (1-based), indexed by `l = 1..=n`.
///
/// One subset-DP pass over the `(n-1) x n` matrix with row `k` removed
/// computes every column deletion at once, so the submaximal minors share
/// all their smaller sub-determinants.
pub fn signed_cofactors_deleting_row(m: &PolyMatrix, k: usize) -> Result<Vec<Polynomial>> {
    if !m.is_square() {
        return Err(Error::invalid("cofactor of a non-square matrix"));
    }
    let n = m.rows();
    if k < 1 || k > n {
        return Err(Error::invalid(format!("row {k} out of range")));
    }
    assert!(n <= 64);
    let rows: Vec<usize> = (0..n).filter(|&r| r != k - 1).collect();
    let full: u64 = if n == 64 { u64::MAX } else { (1 << n) - 1 };
    let mut memo: HashMap<u64, Polynomial> = HashMap::new();
    memo.insert(0, Polynomial::one(m.slots()));
    let mut out = Vec::with_capacity(n);
    for l in 1..=n {
        let det = det_subset(m, &rows, full & !(1 << (l - 1)), &mut memo);
        out.push(if (k + l) % 2 == 0 { det } else { det.negate() });
    }
    Ok(out)
}

/// Evaluates every entry at a rational point.
pub fn evaluate_matrix(m: &PolyMatrix, point: &[BigRational]) -> Vec<Vec<BigRational>> {
    use num_traits::Zero;
    assert_eq!(point.len(), m.slots());
    let mut out = vec![vec![BigRational::zero(); m.cols()]; m.rows()];
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            let mut acc = BigRational::zero();
            for (mono, coeff) in m.entry(r, c).terms() {
                let mut v = coeff.clone();
                for (slot, &e) in mono.exponents().iter().enumerate() {
                    for _ in 0..e {
                        v *= &point[slot];
                    }
                }
                acc += v;
            }
            out[r][c] = acc;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::VarSet;

    fn generic_symmetric(n: usize) -> PolyMatrix {
        let vs = VarSet::new(n);
        PolyMatrix::from_fn(n, n, vs.num_slots(), |r, c| {
            Polynomial::variable(vs.num_slots(), vs.x(r + 1, c + 1))
        })
    }

    #[test]
    fn generic_two_by_two() {
        let vs = VarSet::new(2);
        let slots = vs.num_slots();
        let det = determinant(&generic_symmetric(2)).unwrap();
        let x11 = Polynomial::variable(slots, vs.x(1, 1));
        let x22 = Polynomial::variable(slots, vs.x(2, 2));
        let x12 = Polynomial::variable(slots, vs.x(1, 2));
        assert_eq!(det, &(&x11 * &x22) - &(&x12 * &x12));
    }

    #[test]
    fn diagonal_three_by_three() {
        let vs = VarSet::new(3);
        let slots = vs.num_slots();
        let m = PolyMatrix::from_fn(3, 3, slots, |r, c| {
            if r == c {
                Polynomial::variable(slots, vs.x(r + 1, r + 1))
            } else {
                Polynomial::zero(slots)
            }
        });
        let det = determinant(&m).unwrap();
        let expected = (1..=3).fold(Polynomial::one(slots), |acc, i| {
            &acc * &Polynomial::variable(slots, vs.x(i, i))
        });
        assert_eq!(det, expected);
    }

    #[test]
    fn path_graph_determinant() {
        // X_G for the path 1-2-3: det = x11 x22 x33 - x12^2 x33 - x23^2 x11
        let vs = VarSet::new(3);
        let slots = vs.num_slots();
        let var = |i, j| Polynomial::variable(slots, vs.x(i, j));
        let m = PolyMatrix::from_fn(3, 3, slots, |r, c| {
            let (i, j) = (r + 1, c + 1);
            if i == j || (i.min(j), i.max(j)) == (1, 2) || (i.min(j), i.max(j)) == (2, 3) {
                var(i, j)
            } else {
                Polynomial::zero(slots)
            }
        });
        let det = determinant(&m).unwrap();
        let expected = &(&(&var(1, 1) * &var(2, 2)) * &var(3, 3))
            - &(&(&(&var(1, 2) * &var(1, 2)) * &var(3, 3))
                + &(&(&var(2, 3) * &var(2, 3)) * &var(1, 1)));
        assert_eq!(det, expected);
    }

    #[test]
    fn cofactor_signs_and_zero_rows() {
        let vs = VarSet::new(2);
        let slots = vs.num_slots();
        let m = generic_symmetric(2);
        assert_eq!(
            signed_cofactor(&m, 1, 1).unwrap(),
            Polynomial::variable(slots, vs.x(2, 2))
        );
        assert_eq!(
            signed_cofactor(&m, 1, 2).unwrap(),
            Polynomial::variable(slots, vs.x(1, 2)).negate()
        );

        // single edge {1,2} on n=3: deleting row 1, column 3 leaves a zero row
        let vs3 = VarSet::new(3);
        let slots3 = vs3.num_slots();
        let m = PolyMatrix::from_fn(3, 3, slots3, |r, c| {
            let (i, j) = (r + 1, c + 1);
            if i == j || (i.min(j), i.max(j)) == (1, 2) {
                Polynomial::variable(slots3, vs3.x(i, j))
            } else {
                Polynomial::zero(slots3)
            }
        });
        assert!(signed_cofactor(&m, 1, 3).unwrap().is_zero());
        assert!(signed_cofactor(&m, 4, 1).is_err());
        assert!(determinant(&PolyMatrix::zero(2, 3, slots)).is_err());
    }

    #[test]
    fn batch_cofactors_match_single_ones() {
        for n in 2..=4 {
            let m = generic_symmetric(n);
            for k in 1..=n {
                let batch = signed_cofactors_deleting_row(&m, k).unwrap();
                for l in 1..=n {
                    assert_eq!(batch[l - 1], signed_cofactor(&m, k, l).unwrap());
                }
            }
        }
    }

    #[test]
    fn empty_matrix_determinant_is_one() {
        let det = determinant(&PolyMatrix::zero(0, 0, 4)).unwrap();
        assert_eq!(det, Polynomial::one(4));
    }
}
