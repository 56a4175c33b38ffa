//! Exact arithmetic: rationals, real cyclotomic scalars, dense matrices,
//! kernels and Smith normal form.

mod abelian;
mod cyclotomic;
mod matrix;
mod rational;
mod smith;

pub use abelian::AbelianGroup;
pub use cyclotomic::ExactScalar;
pub use matrix::{kernel, rank, IntegerMatrix, Matrix, RationalMatrix, Ring};
pub use rational::Rat;
pub use smith::{smith_normal_form, SmithForm};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("value is not fixed by complex conjugation")]
    NotReal,
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid conductor {0}")]
    BadConductor(u32),
}
