//! BCH codes of lengths `q^m - 1`, `(q^m - 1)/(q - 1)` and `q^m + 1`:
//! construction, closed-form dimensions, coset-leader predicates and a
//! verifier that checks the closed forms against brute-force oracles.

pub mod arith;
pub mod cli;
pub mod classifier;
pub mod codec;
pub mod cyclotomic;
pub mod error;
pub mod field;
pub mod formulas;
pub mod params;
pub mod verifier;

pub use error::{Error, Result};
