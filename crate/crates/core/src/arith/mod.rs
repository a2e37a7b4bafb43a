//! Exact scalars: rationals, real cyclotomic numbers, and word-sized prime fields.

pub mod cyclotomic;
pub mod modp;
mod rational;

pub use cyclotomic::{CycloField, RealCyclotomic};
pub use modp::{charpoly_mod, ModMatrix, PrimeField, PrimeFieldElement, DEFAULT_PRIMES};
pub use rational::{common_denominator, Rational};
