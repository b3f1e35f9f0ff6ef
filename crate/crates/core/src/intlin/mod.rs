//! Exact integer linear algebra.
//!
//! All arithmetic is performed with arbitrary-precision integers; nothing
//! in this module can overflow. The central algorithm is the Smith normal
//! form `U·A·V = D` with unimodular `U`, `V` and a divisibility chain on
//! the diagonal of `D`. Kernels and cokernels over `Z` and `Z/m`, and the
//! canonical form of finitely generated abelian groups, are all derived
//! from it.

mod abgroup;
mod matrix;
mod modular;
mod snf;

pub use abgroup::FinAbGroup;
pub use matrix::{IntMatrix, MatrixError};
pub use modular::{kernel_mod, solve_affine_mod};
pub use snf::{cokernel, smith_normal_form, SmithForm};
