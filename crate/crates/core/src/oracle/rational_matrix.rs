//! Exact rational matrices, fraction-free determinants, and the check that
//! a principally regular symmetric matrix with vanishing products
//! `A_ij (A^-1)_ij` must be diagonal.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// A square matrix of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    n: usize,
    entries: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn new(n: usize, entries: Vec<BigRational>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::invalid(format!(
                "{} entries for an {n}x{n} matrix",
                entries.len()
            )));
        }
        Ok(RationalMatrix { n, entries })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> BigRational) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for r in 0..n {
            for c in 0..n {
                entries.push(f(r, c));
            }
        }
        RationalMatrix { n, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, r: usize, c: usize) -> &BigRational {
        &self.entries[r * self.n + c]
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|r| (r + 1..self.n).all(|c| self.entry(r, c) == self.entry(c, r)))
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.n).all(|r| {
            (0..self.n).all(|c| r == c || self.entry(r, c).is_zero())
        })
    }

    /// The principal submatrix on a set of (0-based) indices.
    pub fn principal_submatrix(&self, keep: &[usize]) -> RationalMatrix {
        RationalMatrix::from_fn(keep.len(), |r, c| self.entry(keep[r], keep[c]).clone())
    }

    /// Exact determinant.  Denominators are cleared rowwise, the integer
    /// matrix goes through fraction-free Bareiss elimination, and the scale
    /// is divided back out.
    pub fn determinant(&self) -> BigRational {
        if self.n == 0 {
            return BigRational::one();
        }
        let mut scale = BigInt::one();
        let mut m: Vec<Vec<BigInt>> = Vec::with_capacity(self.n);
        for r in 0..self.n {
            let mut row_denom = BigInt::one();
            for c in 0..self.n {
                row_denom = num_integer::lcm(row_denom, self.entry(r, c).denom().clone());
            }
            m.push(
                (0..self.n)
                    .map(|c| {
                        let e = self.entry(r, c);
                        e.numer() * (&row_denom / e.denom())
                    })
                    .collect(),
            );
            scale *= row_denom;
        }
        let det = bareiss_determinant(&mut m);
        BigRational::new(det, scale)
    }

    /// `(A^-1)_rc` via the cofactor formula; `None` for singular matrices.
    pub fn inverse_entry(&self, r: usize, c: usize) -> Option<BigRational> {
        let det = self.determinant();
        if det.is_zero() {
            return None;
        }
        let keep_rows: Vec<usize> = (0..self.n).filter(|&i| i != c).collect();
        let keep_cols: Vec<usize> = (0..self.n).filter(|&i| i != r).collect();
        let minor =
            RationalMatrix::from_fn(self.n - 1, |a, b| self.entry(keep_rows[a], keep_cols[b]).clone())
                .determinant();
        let signed = if (r + c) % 2 == 0 { minor } else { -minor };
        Some(signed / det)
    }

    /// JSON shape: `{"n": n, "entries": [["p/q", ...], ...]}`.
    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<serde_json::Value> = (0..self.n)
            .map(|r| {
                serde_json::Value::Array(
                    (0..self.n)
                        .map(|c| {
                            serde_json::Value::String(crate::poly::rational_string(
                                self.entry(r, c),
                            ))
                        })
                        .collect(),
                )
            })
            .collect();
        serde_json::json!({ "n": self.n, "entries": rows })
    }
}

/// Fraction-free Bareiss elimination on an integer matrix; consumes the
/// buffer and returns the determinant.
fn bareiss_determinant(m: &mut [Vec<BigInt>]) -> BigInt {
    let n = m.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}

/// Outcome of the principal-regularity check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrincipallyRegularReport {
    /// Every principal minor is nonzero.
    pub principally_regular: bool,
    /// `A_ij (A^-1)_ij = 0` for all `i < j`; absent when the matrix is
    /// singular and the inverse does not exist.
    pub condition_holds: Option<bool>,
    pub diagonal: bool,
}

impl PrincipallyRegularReport {
    /// The implication the report certifies: principal regularity together
    /// with the vanishing condition forces diagonality.
    pub fn implication_holds(&self) -> bool {
        !(self.principally_regular && self.condition_holds == Some(true)) || self.diagonal
    }
}

/// Checks all `2^n - 1` principal minors, the vanishing condition on
/// `A_ij (A^-1)_ij`, and diagonality.
pub fn principally_regular_check(a: &RationalMatrix) -> Result<PrincipallyRegularReport> {
    if !a.is_symmetric() {
        return Err(Error::invalid("principal regularity needs a symmetric matrix"));
    }
    let n = a.n();
    if n > 20 {
        return Err(Error::resource("principal minor enumeration capped at n = 20"));
    }
    let mut principally_regular = true;
    'subsets: for mask in 1u32..1 << n {
        let keep: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        if a.principal_submatrix(&keep).determinant().is_zero() {
            principally_regular = false;
            break 'subsets;
        }
    }
    let condition_holds = if a.determinant().is_zero() {
        None
    } else {
        let mut holds = true;
        'pairs: for i in 0..n {
            for j in i + 1..n {
                if a.entry(i, j).is_zero() {
                    continue;
                }
                let inv = a.inverse_entry(i, j).expect("nonsingular");
                if !(a.entry(i, j) * &inv).is_zero() {
                    holds = false;
                    break 'pairs;
                }
            }
        }
        Some(holds)
    };
    Ok(PrincipallyRegularReport {
        principally_regular,
        condition_holds,
        diagonal: a.is_diagonal(),
    })
}

/// Parses `p/q` or `p` into an exact rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| Error::invalid(format!("bad numerator in {s:?}")))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| Error::invalid(format!("bad denominator in {s:?}")))?;
    if den.is_zero() {
        return Err(Error::invalid("zero denominator"));
    }
    Ok(BigRational::new(num, den))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    fn matrix(n: usize, vals: &[i64]) -> RationalMatrix {
        RationalMatrix::new(n, vals.iter().map(|&v| rat(v)).collect()).unwrap()
    }

    #[test]
    fn determinants() {
        assert_eq!(matrix(2, &[2, 1, 1, 1]).determinant(), rat(1));
        assert_eq!(matrix(2, &[1, 1, 1, 1]).determinant(), rat(0));
        assert_eq!(
            matrix(3, &[2, 0, 0, 0, 3, 0, 0, 0, 5]).determinant(),
            rat(30)
        );
        // fractional entries
        let half = BigRational::new(1.into(), 2.into());
        let m = RationalMatrix::new(2, vec![half.clone(), rat(0), rat(0), half]).unwrap();
        assert_eq!(m.determinant(), BigRational::new(1.into(), 4.into()));
    }

    #[test]
    fn inverse_entries() {
        // [[2,1],[1,1]]^-1 = [[1,-1],[-1,2]]
        let m = matrix(2, &[2, 1, 1, 1]);
        assert_eq!(m.inverse_entry(0, 0), Some(rat(1)));
        assert_eq!(m.inverse_entry(0, 1), Some(rat(-1)));
        assert_eq!(m.inverse_entry(1, 1), Some(rat(2)));
        assert_eq!(matrix(2, &[1, 1, 1, 1]).inverse_entry(0, 1), None);
    }

    #[test]
    fn identity_matrix_report() {
        let id = RationalMatrix::from_fn(3, |r, c| if r == c { rat(1) } else { rat(0) });
        let report = principally_regular_check(&id).unwrap();
        assert!(report.principally_regular);
        assert_eq!(report.condition_holds, Some(true));
        assert!(report.diagonal);
        assert!(report.implication_holds());
    }

    #[test]
    fn singular_all_ones() {
        let m = matrix(2, &[1, 1, 1, 1]);
        let report = principally_regular_check(&m).unwrap();
        assert!(!report.principally_regular);
        assert_eq!(report.condition_holds, None);
        assert!(report.implication_holds());
    }

    #[test]
    fn regular_but_condition_fails() {
        let m = matrix(2, &[2, 1, 1, 1]);
        let report = principally_regular_check(&m).unwrap();
        assert!(report.principally_regular);
        assert_eq!(report.condition_holds, Some(false));
        assert!(!report.diagonal);
        assert!(report.implication_holds());
    }

    #[test]
    fn asymmetric_rejected() {
        let m = matrix(2, &[1, 2, 3, 4]);
        assert!(principally_regular_check(&m).is_err());
    }

    #[test]
    fn parse_rationals() {
        assert_eq!(parse_rational("3").unwrap(), rat(3));
        assert_eq!(
            parse_rational("-1/2").unwrap(),
            BigRational::new((-1).into(), 2.into())
        );
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }
}
