//! Exact computations with divided differences, Schubert calculus, modules of
//! BGG differential operators, and Gelfand-Tsetlin modules over standard
//! Galois orders of type A.

pub mod bggmod;
pub mod cli;
pub mod coxeter;
pub mod error;
pub mod galois;
pub mod linalg;
pub mod polyring;
pub mod rational;
pub mod schubert;

pub use error::{Error, Result};
