//! Exact computation in Ariki-Koike algebras of type `G(ℓ,1,n)`: normal forms,
//! cellular bases, Specht and permutation modules, and certified Specht
//! filtrations of induced modules.

pub mod arith;
pub mod cache;
pub mod cellular;
pub mod checks;
pub mod combinatorics;
pub mod commands;
pub mod error;
pub mod hecke;
pub mod induction;
pub mod symgroup;

pub use error::{Error, Result};
