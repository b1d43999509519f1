//! Self-dual codes from composite group-ring matrices over F2, F2+uF2 and F4.
//!
//! A vector `v` over a small ring picks out a square matrix `Omega(v)` from one
//! of seven block constructions. When `Omega Omega^T = I`, the code generated
//! by `(I | Omega)` is self-dual, and its Gray image is a binary self-dual code
//! of twice the length. The crate builds these matrices, checks the block
//! conditions, lifts to binary, counts low-weight codewords and fits the result
//! to the known weight-enumerator families.

pub mod alphabet;
pub mod bincode;
pub mod cli;
pub mod constructions;
pub mod error;
pub mod groupring;
pub mod ringmat;
pub mod search;
pub mod tables;

pub use alphabet::{Alphabet, RingElement};
pub use error::{Error, Result};
