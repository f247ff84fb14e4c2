//! Exact rational toolkit for Lie algebras with equivariant Nijenhuis
//! operators: structure-constant carriers, operator checks, representations,
//! bialgebras and doubles, classical Yang–Baxter solutions, pre-Lie algebras,
//! and a JSON bundle runner.
//!
//! Every computation is exact over ℚ. Operators act on column vectors:
//! `M[(i, j)]` is the coefficient of `e_i` in the image of `e_j`.

pub mod catalogue;
pub mod doubles;
pub mod error;
pub mod io;
pub mod lie;
pub mod matrix;
pub mod operators;
pub mod prelie;
pub mod rational;
pub mod representations;
pub mod tensor;
pub mod verdict;
pub mod yang_baxter;

pub use error::{Error, Result};
pub use lie::{check_lie, direct_sum, dualize, BilinearForm, Cobracket, LieAlgebra};
pub use matrix::{invert, kernel_basis, Matrix};
pub use rational::{parse_rational, Rational};
pub use tensor::{contract, Array, Tensor3};
pub use verdict::{Verdict, Witness};
