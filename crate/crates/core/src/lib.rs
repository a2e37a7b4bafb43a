//! Exact computations in finite Coxeter groups and their Solomon descent
//! algebras: structure constants, the a_{JKK} coefficients, and the spectrum
//! (eigenvalues with algebraic multiplicities) of the left-regular action of
//! any descent-algebra element, together with a brute-force modular oracle
//! that checks the spectrum against the characteristic polynomial of the
//! regular representation.
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]

extern crate alloc;
#[cfg(any(test, feature = "std"))]
extern crate std;

pub mod arith;
pub mod coxeter;
pub mod descent;
pub mod oracle;
mod error;

pub use error::{Error, Result};
