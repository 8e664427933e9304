//! Independent brute-force verifiers: multivariate division, S-pair checks
//! of candidate Gröbner bases, square-free membership counts, and the
//! principally-regular matrix criterion.

mod division;
mod rational_matrix;

pub use division::{buchberger_check, normal_form, sqfree_count, SPairWitness};
pub use rational_matrix::{
    parse_rational, principally_regular_check, PrincipallyRegularReport, RationalMatrix,
};
