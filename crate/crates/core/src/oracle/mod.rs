//! Ground truth at the level of monomials in finitely many variables.
//!
//! Everything here is computed from tableau enumerations and explicit
//! polynomial arithmetic, independently of the Schur-basis machinery.

pub mod identities;
pub mod poly;
pub mod symmetric;
pub mod tableaux;

pub use identities::{
    cauchy_truncated, dual_cauchy_truncated, jt_matches_straightening, negative_alphabet_corollary_check,
    schur_difference_check, sigma_additivity_check, straightening_polynomial, vertex_monomial_check,
    vertex_product_coefficient,
};
pub use poly::{Monomial, MonomialPolynomial};
pub use symmetric::{e_expand, h_difference_expand, h_expand, jt_determinant_expand, p_expand};
pub use tableaux::{
    signed_tableaux_coefficient, signed_tableaux_expand, ssyt_expand, AlphabetSpec, Letter, SignedTableau,
};
