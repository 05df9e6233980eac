//! Exact computation with non-symmetric Macdonald and ASEP polynomials, their
//! resonance reductions, and multi-species ASEP duality functions.

pub mod exact_algebra;

pub use exact_algebra::{AlgebraError, LaurentQT, RatFuncQT, ZPoly};
pub mod asep_poly;
pub mod combinatorics;
pub mod engine;
pub mod hecke;
pub mod macdonald;
pub mod masep;
pub mod reduction;
pub mod report;
pub mod serialize;
pub mod suite;

pub use combinatorics::Composition;
pub use engine::{Engine, Limits};
pub use report::Report;
