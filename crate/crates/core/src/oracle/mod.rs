//! Brute-force check of the descent-algebra spectrum against the regular
//! representation of W, by characteristic polynomials over prime fields.

mod group_algebra;
mod regular;
mod verify;

pub use group_algebra::{convolve, expand, GroupAlgebraElement};
pub use regular::{RegularRepMatrix, MAX_REGULAR_ORDER};
pub use verify::{verify_lemma31, verify_spectrum, OraclePlan, PrimeCheck, VerificationVerdict};
