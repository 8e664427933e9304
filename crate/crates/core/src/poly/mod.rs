//! Exact sparse multivariate polynomials over the rationals in the matrix
//! variables `x_ij` (i <= j) plus a homogenization variable `t`, together
//! with weight orders, initial forms, matrices and determinants.

mod matrix;
mod modp;
mod monomial;
mod order;
mod polynomial;
mod vars;

pub use matrix::{
    determinant, evaluate_matrix, signed_cofactor, signed_cofactors_deleting_row, PolyMatrix,
};
pub use modp::{evaluate_mod_p, is_prime_u64, mod_inverse, rank_mod_p};
pub use monomial::Monomial;
pub use order::{grlex_cmp, initial_form, leading_term, CompositeWeightOrder, WeightVector};
pub use polynomial::{rational_string, Polynomial};
pub use vars::VarSet;
