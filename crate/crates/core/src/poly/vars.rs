//! The variable universe for a fixed matrix size `n`.
//!
//! Slots are ordered `x_11, ..., x_nn` (diagonal first), then the
//! off-diagonal `x_12, ..., x_1n, x_23, ..., x_{n-1,n}` in lexicographic
//! order, and finally the homogenization variable `t`.

/// Describes the dense slot layout of the `C(n+1,2) + 1` variables used for
/// matrices of size `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VarSet {
    n: usize,
}

impl VarSet {
    pub fn new(n: usize) -> Self {
        assert!(n >= 2, "variable universe needs n >= 2");
        VarSet { n }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of matrix variables, `C(n+1,2)`.
    pub fn num_x(&self) -> usize {
        self.n * (self.n + 1) / 2
    }

    /// Total slot count including `t`.
    pub fn num_slots(&self) -> usize {
        self.num_x() + 1
    }

    /// Slot of `x_ij`; endpoints may come in either order.
    pub fn x(&self, i: usize, j: usize) -> usize {
        let (i, j) = (i.min(j), i.max(j));
        assert!(i >= 1 && j <= self.n, "variable x_{i}{j} out of range");
        if i == j {
            i - 1
        } else {
            // off-diagonal block, pairs with first coordinate < i come first
            self.n + (i - 1) * self.n - i * (i - 1) / 2 + (j - i - 1)
        }
    }

    /// Slot of the homogenization variable `t`.
    pub fn t(&self) -> usize {
        self.num_x()
    }

    pub fn is_diagonal(&self, slot: usize) -> bool {
        slot < self.n
    }

    pub fn is_t(&self, slot: usize) -> bool {
        slot == self.t()
    }

    /// Inverse of [`VarSet::x`]: the pair `(i, j)` with `i <= j` stored in a
    /// slot, or `None` for the `t` slot.
    pub fn pair_of(&self, slot: usize) -> Option<(usize, usize)> {
        assert!(slot < self.num_slots(), "slot out of range");
        if slot == self.t() {
            return None;
        }
        if slot < self.n {
            return Some((slot + 1, slot + 1));
        }
        let mut rest = slot - self.n;
        for i in 1..self.n {
            let row = self.n - i;
            if rest < row {
                return Some((i, i + rest + 1));
            }
            rest -= row;
        }
        unreachable!("slot arithmetic")
    }

    /// Human-readable name: `x12`, `x[3,11]` for two-digit indices, `t`.
    pub fn name(&self, slot: usize) -> String {
        match self.pair_of(slot) {
            None => "t".to_string(),
            Some((i, j)) if i <= 9 && j <= 9 => format!("x{i}{j}"),
            Some((i, j)) => format!("x[{i},{j}]"),
        }
    }

    /// Unambiguous key used in JSON output: `x_1_2`, `t`.
    pub fn json_key(&self, slot: usize) -> String {
        match self.pair_of(slot) {
            None => "t".to_string(),
            Some((i, j)) => format!("x_{i}_{j}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slot_layout_round_trips() {
        for n in 2..=8 {
            let vs = VarSet::new(n);
            let mut expected = 0;
            for i in 1..=n {
                assert_eq!(vs.x(i, i), expected, "diag x{i}{i}");
                expected += 1;
            }
            for i in 1..=n {
                for j in i + 1..=n {
                    assert_eq!(vs.x(i, j), expected, "offdiag x{i}{j}");
                    assert_eq!(vs.x(j, i), expected);
                    assert_eq!(vs.pair_of(expected), Some((i, j)));
                    expected += 1;
                }
            }
            assert_eq!(vs.t(), expected);
            assert_eq!(vs.num_slots(), expected + 1);
            for slot in 0..vs.num_x() {
                let (i, j) = vs.pair_of(slot).unwrap();
                assert_eq!(vs.x(i, j), slot);
            }
        }
    }

    #[test]
    fn names() {
        let vs = VarSet::new(3);
        assert_eq!(vs.name(vs.x(1, 2)), "x12");
        assert_eq!(vs.name(vs.t()), "t");
        assert_eq!(vs.json_key(vs.x(2, 3)), "x_2_3");
    }
}
