//! Exact computations with Nichols algebras of diagonal type.

pub mod classify;
pub mod cyclotomic;
pub mod freealgebra;
pub mod nichols;
pub mod weyl;
pub mod words;
