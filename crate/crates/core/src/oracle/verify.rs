use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::group_algebra::expand;
use super::regular::RegularRepMatrix;
use crate::arith::modp::{
    is_prime, poly_divides, poly_from_roots, prev_prime, square_free_part, MIN_ORACLE_PRIME,
};
use crate::arith::{charpoly_mod, common_denominator, ModMatrix, PrimeField, Rational};
use crate::descent::{Basis, DescentAlgebra, DescentElement};
use crate::error::{Error, Result};

/// Outcome at a single prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeCheck {
    pub prime: u64,
    /// Characteristic polynomial of D·R_W(d) mod p, low degree first.
    pub computed: Vec<u64>,
    /// prod_j (t - D·Delta_j)^{m_j} mod p.
    pub predicted: Vec<u64>,
    pub matched: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationVerdict {
    pub order: usize,
    /// Common denominator D of the weights; both sides are scaled by it.
    pub scale: BigInt,
    /// Distinct Delta_j (unscaled) with total multiplicity.
    pub predicted_factors: Vec<(Rational, u64)>,
    pub checks: Vec<PrimeCheck>,
    /// Primes dropped because they divide D.
    pub skipped: Vec<u64>,
    /// The primes used cover twice the coefficient bound, so agreement at
    /// every prime implies equality over the integers.
    pub certified: bool,
    pub bound_bits: u64,
}

impl VerificationVerdict {
    pub fn matched(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(|c| c.matched)
    }

    pub fn primes(&self) -> Vec<u64> {
        self.checks.iter().map(|c| c.prime).collect()
    }
}

fn check_oracle_prime(p: u64) -> Result<()> {
    if p <= MIN_ORACLE_PRIME || p >= 1 << 63 || !is_prime(p) {
        return Err(Error::InvalidPrime(p));
    }
    Ok(())
}

fn bigint_residue(x: &BigInt, p: u64) -> u64 {
    Rational::from_integer(x.clone())
        .to_residue(p)
        .expect("integers reduce mod any prime")
}

/// Everything shared by the per-prime checks: the scaled integer weights of
/// R_W(d) and the scaled predicted roots. Checking a prime borrows the plan
/// immutably, so primes can be handled on separate threads.
pub struct OraclePlan {
    order: usize,
    scale: BigInt,
    rep: RegularRepMatrix,
    scaled_coeffs: Vec<BigInt>,
    roots: Vec<(BigInt, u64)>,
    predicted_factors: Vec<(Rational, u64)>,
    bound_bits: u64,
}

impl OraclePlan {
    pub fn new(alg: &DescentAlgebra, d: &DescentElement) -> Result<Self> {
        let group = alg.group();
        let d = d.in_basis(Basis::X);
        let report = alg.spectrum(&d)?;
        let predicted_factors = report.distinct();
        let total: u64 = predicted_factors.iter().map(|(_, m)| m).sum();
        if total != group.order() as u64 {
            return Err(Error::InternalInvariant(format!(
                "predicted degree {} differs from |W| = {}",
                total,
                group.order()
            )));
        }

        let scale = common_denominator(d.coeffs());
        let scale_q = Rational::from_integer(scale.clone());
        let rep = RegularRepMatrix::from_element(group, &expand(group, &d))?;
        let scaled_coeffs: Vec<BigInt> = rep
            .coeffs()
            .iter()
            .map(|c| {
                let s = c * &scale_q;
                debug_assert!(s.is_integer());
                s.numer().clone()
            })
            .collect();
        let roots: Vec<(BigInt, u64)> = predicted_factors
            .iter()
            .map(|(delta, m)| ((delta * &scale_q).numer().clone(), *m))
            .collect();

        // |coefficient of t^k| <= (1 + H)^n for a matrix whose rows have
        // Euclidean norm at most H; every row of R_W(d) is a permutation of
        // the coefficient vector. The predicted side is bounded by (1 + M)^n
        // with M the largest root in absolute value.
        let h2: BigInt = scaled_coeffs.iter().map(|c| c * c).sum();
        let h_bits = (h2.bits() + 1) / 2;
        let m_bits = roots.iter().map(|(r, _)| r.abs().bits()).max().unwrap_or(0);
        let per_factor = h_bits.max(m_bits) + 1;
        let bound_bits = group.order() as u64 * per_factor + 1;

        Ok(OraclePlan {
            order: group.order(),
            scale,
            rep,
            scaled_coeffs,
            roots,
            predicted_factors,
            bound_bits,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn scale(&self) -> &BigInt {
        &self.scale
    }

    pub fn bound_bits(&self) -> u64 {
        self.bound_bits
    }

    pub fn divides_scale(&self, p: u64) -> bool {
        (&self.scale % BigInt::from(p)).is_zero()
    }

    /// Splits `primes` into usable ones and ones dividing D, and with
    /// `certify` appends further primes below 2^62 until the bound is covered.
    pub fn select_primes(&self, primes: &[u64], certify: bool) -> Result<(Vec<u64>, Vec<u64>)> {
        let mut used = Vec::new();
        let mut skipped = Vec::new();
        for &p in primes {
            check_oracle_prime(p)?;
            if used.contains(&p) {
                continue;
            }
            if self.divides_scale(p) {
                skipped.push(p);
            } else {
                used.push(p);
            }
        }
        if certify {
            let mut candidate = 1u64 << 62;
            while !self.covers(&used) {
                candidate = prev_prime(candidate).ok_or(Error::NoUsablePrimes)?;
                if candidate <= MIN_ORACLE_PRIME {
                    return Err(Error::NoUsablePrimes);
                }
                if !used.contains(&candidate) && !self.divides_scale(candidate) {
                    used.push(candidate);
                }
            }
        }
        if used.is_empty() {
            return Err(Error::NoUsablePrimes);
        }
        Ok((used, skipped))
    }

    /// Whether the product of `primes` exceeds 2^bound_bits.
    pub fn covers(&self, primes: &[u64]) -> bool {
        let bits: u64 = primes.iter().map(|&p| 63 - p.leading_zeros() as u64).sum();
        bits >= self.bound_bits
    }

    pub fn reduced_matrix(&self, field: PrimeField) -> ModMatrix {
        let p = field.modulus();
        let residues: Vec<u64> = self.scaled_coeffs.iter().map(|c| bigint_residue(c, p)).collect();
        self.rep.to_mod_matrix(field, &residues)
    }

    pub fn predicted_poly(&self, field: PrimeField) -> Vec<u64> {
        let p = field.modulus();
        let roots: Vec<(u64, u64)> = self.roots.iter().map(|(r, m)| (bigint_residue(r, p), *m)).collect();
        poly_from_roots(&field, &roots)
    }

    pub fn check_prime(&self, p: u64) -> Result<PrimeCheck> {
        let field = PrimeField::new(p)?;
        let computed = charpoly_mod(&self.reduced_matrix(field));
        let predicted = self.predicted_poly(field);
        Ok(PrimeCheck {
            prime: p,
            matched: computed == predicted,
            computed,
            predicted,
        })
    }

    pub fn verdict(&self, checks: Vec<PrimeCheck>, skipped: Vec<u64>) -> VerificationVerdict {
        let primes: Vec<u64> = checks.iter().map(|c| c.prime).collect();
        VerificationVerdict {
            order: self.order,
            scale: self.scale.clone(),
            predicted_factors: self.predicted_factors.clone(),
            certified: self.covers(&primes),
            checks,
            skipped,
            bound_bits: self.bound_bits,
        }
    }
}

/// Compares the characteristic polynomial of R_W(d) with the one predicted by
/// the descent-algebra spectrum, modulo each prime in turn.
pub fn verify_spectrum(
    alg: &DescentAlgebra,
    d: &DescentElement,
    primes: &[u64],
    certify: bool,
) -> Result<VerificationVerdict> {
    let plan = OraclePlan::new(alg, d)?;
    let (used, skipped) = plan.select_primes(primes, certify)?;
    let checks = used.iter().map(|&p| plan.check_prime(p)).collect::<Result<Vec<_>>>()?;
    Ok(plan.verdict(checks, skipped))
}

/// Whether R_W(d) and the action matrix of d on the descent algebra have the
/// same eigenvalues as sets, by mutual divisibility of the square-free parts
/// of their characteristic polynomials mod each usable prime.
pub fn verify_lemma31(alg: &DescentAlgebra, d: &DescentElement, primes: &[u64]) -> Result<bool> {
    let group = alg.group();
    let d = d.in_basis(Basis::X);
    let scale = common_denominator(d.coeffs());
    let scaled = d.scale(&Rational::from_integer(scale.clone()));
    let rep = RegularRepMatrix::new(group, &scaled)?;
    let action = alg.action_matrix(&scaled);

    let mut used = 0;
    for &p in primes {
        check_oracle_prime(p)?;
        if (&scale % BigInt::from(p)).is_zero() {
            continue;
        }
        used += 1;
        let field = PrimeField::new(p)?;
        let r = rep.reduce(field).expect("scaled weights are integers");
        let dim = action.dim();
        let m = ModMatrix::from_fn(field, dim, |i, j| {
            action.at(i, j).to_residue(p).expect("scaled weights are integers")
        });
        let fr = square_free_part(&field, &charpoly_mod(&r));
        let fm = square_free_part(&field, &charpoly_mod(&m));
        if !poly_divides(&field, &fr, &fm) || !poly_divides(&field, &fm, &fr) {
            return Ok(false);
        }
    }
    if used == 0 {
        return Err(Error::NoUsablePrimes);
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::DEFAULT_PRIMES;
    use crate::coxeter::{CoxeterSpec, CoxeterSystem, SubsetMask};

    fn algebra(name: &str) -> DescentAlgebra {
        DescentAlgebra::new(CoxeterSystem::build(&CoxeterSpec::named(name).unwrap()).unwrap())
    }

    fn weights(rank: usize) -> DescentElement {
        DescentElement::from_dense(
            rank,
            Basis::X,
            (0..1i64 << rank).map(|i| Rational::new(3 * i - 7, 2 + i % 5).unwrap()).collect(),
        )
    }

    #[test]
    fn a2_certified() {
        let alg = algebra("A2");
        let v = verify_spectrum(&alg, &weights(2), &DEFAULT_PRIMES, true).unwrap();
        assert!(v.matched());
        assert!(v.certified);
        assert_eq!(v.checks[0].computed.len(), 7);
    }

    #[test]
    fn h3_uniform() {
        let alg = algebra("H3");
        let d = DescentElement::from_dense(3, Basis::X, alloc::vec![Rational::one(); 8]);
        let v = verify_spectrum(&alg, &d, &DEFAULT_PRIMES, false).unwrap();
        assert!(v.matched());
        assert_eq!(v.checks.len(), 3);
    }

    #[test]
    fn wrong_prediction_is_caught() {
        let alg = algebra("B2");
        let plan = OraclePlan::new(&alg, &weights(2)).unwrap();
        let field = PrimeField::new(DEFAULT_PRIMES[0]).unwrap();
        let mut m = plan.reduced_matrix(field);
        m.set(0, 0, field.add(m.get(0, 0), 1));
        assert_ne!(charpoly_mod(&m), plan.predicted_poly(field));
    }

    #[test]
    fn prime_dividing_denominator_is_skipped() {
        let alg = algebra("A2");
        let p = 1_048_583; // prime just above 2^20
        assert!(is_prime(p));
        let mut d = weights(2);
        d.set(SubsetMask::EMPTY, Rational::new(1, p).unwrap());
        let v = verify_spectrum(&alg, &d, &[p, DEFAULT_PRIMES[0]], false).unwrap();
        assert_eq!(v.skipped, [p]);
        assert!(v.matched());
        assert!(matches!(verify_spectrum(&alg, &d, &[p], false), Err(Error::NoUsablePrimes)));
    }

    #[test]
    fn small_primes_rejected() {
        let alg = algebra("A2");
        assert!(matches!(verify_spectrum(&alg, &weights(2), &[101], false), Err(Error::InvalidPrime(101))));
    }

    #[test]
    fn lemma31_small_groups() {
        for name in ["A2", "B2", "A3"] {
            let alg = algebra(name);
            let rank = alg.rank();
            assert!(verify_lemma31(&alg, &weights(rank), &DEFAULT_PRIMES).unwrap(), "{}", name);
            let unit = DescentElement::basis_element(rank, Basis::X, SubsetMask::full(rank));
            assert!(verify_lemma31(&alg, &unit, &DEFAULT_PRIMES).unwrap());
        }
    }
}
