//! Exact linear algebra for symmetric ±1 matrices: sampling, enumeration,
//! ranks over ℚ and F_p, determinants, cofactors, adjugates and kernels.
//!
//! No floating point is used anywhere in this module.

mod int;
mod rng;
mod sym;

pub use int::{adjugate, cofactor, det_int, is_sign_matrix, kernel_q, rank_fp, rank_q, ExactMatrix, IntMatrix};
pub(crate) use int::rref;
pub use rng::{RngStream, RNG_ALGORITHM};
pub use sym::{conjugate_by_permutation, enumerate_symmetric, sample_symmetric, tri_len, SymMatrix, ENUMERATION_MAX_BITS};
