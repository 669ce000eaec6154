//! Straightening of Jacobi–Trudi determinants and the vertex operator
//! `Γ_(t|X) s_α = Σ_n s_(n,α) t^n` on Schur functions, in exact integer arithmetic.
//!
//! The crate is `no_std` and needs only `alloc`.
//!
//! - [`straighten`]: any integer sequence to zero or `±s_λ`, by two algorithms.
//! - [`strips`]: vertical/horizontal strips and α-removable corners.
//! - [`expansion`], [`operators`]: Schur-basis linear combinations, Pieri and
//!   dual Pieri operators, `p_k^⊥`, and the base-free `Γ_1`.
//! - [`vertex`]: the series computed three ways and the cancelling involution.
//! - [`oracle`]: tableau enumerations and polynomial identities used as ground truth.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod error;
pub mod expansion;
pub mod operators;
pub mod oracle;
pub mod partition;
pub mod straighten;
pub mod strips;
pub mod vertex;

pub use error::{Error, Result};
pub use expansion::{GradedExpansion, SchurExpansion};
pub use operators::{gamma_one, multiply_h, murnaghan_nakayama_perp, p_perp, skew_column};
pub use partition::{Cell, IntegerSequence, Partition};
pub use straighten::{row_exchange_straighten, staircase_straighten, Sign, Straightening};
pub use strips::{alpha_removable_corners, horizontal_strip_additions, vertical_strip_removals};
pub use vertex::{
    involution_report, pair_term, vertex_lemma, vertex_lhs, vertex_rhs, vertex_rhs_raw, InvolutionReport,
    LemmaTerm, Pairing, RawTerm, VertexSeries,
};
