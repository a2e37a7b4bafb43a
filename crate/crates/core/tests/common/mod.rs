#![allow(dead_code)]

use coxdesc_core::arith::Rational;
use coxdesc_core::coxeter::{CoxeterSpec, CoxeterSystem};
use coxdesc_core::descent::{Basis, DescentAlgebra, DescentElement};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn group(name: &str) -> CoxeterSystem {
    CoxeterSystem::build(&CoxeterSpec::named(name).unwrap()).unwrap()
}

pub fn algebra(name: &str) -> DescentAlgebra {
    DescentAlgebra::new(group(name))
}

/// Seeded random rational weights in the x-basis, numerators in [-50, 50],
/// denominators in [1, 12].
pub fn random_weights(rank: usize, seed: u64) -> DescentElement {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let coeffs = (0..1usize << rank)
        .map(|_| Rational::new(rng.gen_range(-50i64..=50), rng.gen_range(1i64..=12)).unwrap())
        .collect();
    DescentElement::from_dense(rank, Basis::X, coeffs)
}

pub fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| Rational::from_integer(x)).collect()
}
