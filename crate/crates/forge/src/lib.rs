//! Exact-arithmetic toolkit for finite-dimensional differential algebras,
//! their bimodules and bialgebra structures, and the associated Yang-Baxter
//! style equations, all given by structure constants over ℚ.

pub mod scalar;
pub mod matrix;
pub mod tensor;
pub mod report;
pub mod algebra;
pub mod bimodule;
pub mod bialgebra;
pub mod yangbaxter;
pub mod dendriform;
pub mod poisson;
pub mod doc;

#[cfg(test)]
pub(crate) mod fixtures;
