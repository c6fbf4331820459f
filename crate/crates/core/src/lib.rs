//! Exact computation of determinants of Stirling-number matrices.
//!
//! For non-negative a and b, the crate builds the n x n matrices
//! M_n(a,b) = ([i+a atop j+b]) and N_n(a,b) = ({i+a brace j+b}) and computes
//! beta_n(a,b) = det M_n(a,b) and gamma_n(a,b) = det N_n(a,b) by several
//! independent routes: fraction-free elimination on the matrix itself,
//! three forms of Schur-function evaluation at integer alphabets, and an
//! explicit alternating sum over index subsets. It also fits the rational
//! generating function of each beta sequence against its predicted
//! linearly factored denominator and regroups the explicit sum into a
//! closed geometric form. Everything is exact: big integers and big
//! rationals throughout, with every internal division checked.

pub mod arith;
pub mod genfun;
pub mod matrix;
pub mod partition;
pub mod poly;
pub mod report;
pub mod schur;
pub mod stirling;
pub mod stirling_det;
pub mod symfunc;
pub mod verify;

mod error;

pub use error::{Error, Result};
pub use genfun::{PartialFractionForm, RationalFunction};
pub use matrix::{DetMethod, IntMatrix};
pub use partition::Partition;
pub use poly::Poly;
pub use report::{generate_report, Report};
pub use schur::{schur_eval, SchurMethod};
pub use stirling::{stirling1_unsigned, stirling2};
pub use stirling_det::{
    beta, build_matrix, duality_residual, gamma, BetaMethod, GammaMethod, StirlingKind,
    StirlingMatrixSpec,
};
pub use symfunc::{sym_spec, Alphabet, SymKind};
