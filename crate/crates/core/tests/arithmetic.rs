use std::cmp::Ordering;

use coxdesc_core::arith::modp::{is_prime, poly_from_roots};
use coxdesc_core::arith::{charpoly_mod, CycloField, ModMatrix, PrimeField, Rational, DEFAULT_PRIMES};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-1000i64..=1000, 1i64..=1000).prop_map(|(n, d)| Rational::new(n, d).unwrap())
}

proptest! {
    #[test]
    fn rational_field_axioms(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &Rational::zero(), a.clone());
        prop_assert_eq!(&a * &Rational::one(), a.clone());
        prop_assert!((&a + &(-a.clone())).is_zero());
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.recip().unwrap(), Rational::one());
        }
    }

    #[test]
    fn rational_order_matches_cross_multiplication(a in rational(), b in rational()) {
        let lhs = a.numer() * b.denom();
        let rhs = b.numer() * a.denom();
        prop_assert_eq!(a.cmp(&b), lhs.cmp(&rhs));
    }

    #[test]
    fn rational_display_round_trip(a in rational()) {
        prop_assert_eq!(a.to_string().parse::<Rational>().unwrap(), a);
    }

    #[test]
    fn residues_are_ring_homomorphisms(a in rational(), b in rational()) {
        let p = DEFAULT_PRIMES[1];
        let f = PrimeField::new(p).unwrap();
        let (ra, rb) = (a.to_residue(p).unwrap(), b.to_residue(p).unwrap());
        prop_assert_eq!((&a + &b).to_residue(p).unwrap(), f.add(ra, rb));
        prop_assert_eq!((&a * &b).to_residue(p).unwrap(), f.mul(ra, rb));
    }

    #[test]
    fn prime_field_axioms(a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        let f = PrimeField::new(DEFAULT_PRIMES[0]).unwrap();
        let p = f.modulus();
        let (a, b, c) = (a % p, b % p, c % p);
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), 0);
        prop_assert_eq!(f.mul(a, b), ((a as u128 * b as u128) % p as u128) as u64);
        if a != 0 {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
        }
    }
}

/// det(xI - M) at n + 1 points by Gaussian elimination, then Lagrange
/// interpolation; independent of the Hessenberg route.
fn charpoly_by_interpolation(m: &[Vec<u64>], f: &PrimeField) -> Vec<u64> {
    let n = m.len();
    let det = |x: u64| -> u64 {
        let mut a: Vec<Vec<u64>> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { f.sub(x, m[i][j]) } else { f.neg(m[i][j]) }).collect())
            .collect();
        let mut det = 1;
        for col in 0..n {
            let Some(piv) = (col..n).find(|&r| a[r][col] != 0) else { return 0 };
            if piv != col {
                a.swap(piv, col);
                det = f.neg(det);
            }
            det = f.mul(det, a[col][col]);
            let inv = f.inv(a[col][col]).unwrap();
            for r in col + 1..n {
                let factor = f.mul(a[r][col], inv);
                for c in col..n {
                    a[r][c] = f.sub(a[r][c], f.mul(factor, a[col][c]));
                }
            }
        }
        det
    };
    let xs: Vec<u64> = (0..=n as u64).collect();
    let ys: Vec<u64> = xs.iter().map(|&x| det(x)).collect();
    let mut poly = vec![0u64; n + 1];
    for (i, &xi) in xs.iter().enumerate() {
        let mut basis = vec![1u64];
        let mut denom = 1u64;
        for (j, &xj) in xs.iter().enumerate() {
            if i != j {
                let mut next = vec![0u64; basis.len() + 1];
                for (k, &c) in basis.iter().enumerate() {
                    next[k + 1] = f.add(next[k + 1], c);
                    next[k] = f.sub(next[k], f.mul(c, xj));
                }
                basis = next;
                denom = f.mul(denom, f.sub(xi, xj));
            }
        }
        let scale = f.mul(ys[i], f.inv(denom).unwrap());
        for (k, c) in basis.iter().enumerate() {
            poly[k] = f.add(poly[k], f.mul(scale, *c));
        }
    }
    poly
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn charpoly_matches_interpolation(n in 1usize..9, seed in any::<u64>(), sparse in any::<bool>()) {
        let f = PrimeField::new(1_000_003).unwrap();
        let mut state = seed;
        let mut next = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            state >> 33
        };
        let m: Vec<Vec<u64>> = (0..n)
            .map(|_| (0..n).map(|_| if sparse && next() % 3 != 0 { 0 } else { next() % 1_000_003 }).collect())
            .collect();
        let mm = ModMatrix::from_fn(f, n, |i, j| m[i][j]);
        prop_assert_eq!(charpoly_mod(&mm), charpoly_by_interpolation(&m, &f));
    }
}

#[test]
fn charpoly_of_diagonal_matches_roots() {
    let f = PrimeField::new(DEFAULT_PRIMES[2]).unwrap();
    let diag = [5u64, 5, 7, 0, 5];
    let m = ModMatrix::from_fn(f, 5, |i, j| if i == j { diag[i] } else { 0 });
    assert_eq!(charpoly_mod(&m), poly_from_roots(&f, &[(5, 3), (7, 1), (0, 1)]));
}

#[test]
fn default_primes_are_the_largest_below_2_62() {
    let mut expected = Vec::new();
    let mut n = (1u64 << 62) - 1;
    while expected.len() < 3 {
        if is_prime(n) {
            expected.push(n);
        }
        n -= 1;
    }
    assert_eq!(DEFAULT_PRIMES.to_vec(), expected);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    /// Exact sign of a random element of Q(2cos(pi/N)) against floating point,
    /// whenever the float is not too close to zero.
    #[test]
    fn cyclotomic_sign_matches_float(n in prop::sample::select(vec![4u32, 5, 6, 8, 10, 12]), coeffs in prop::collection::vec(-50i64..=50, 4)) {
        let field = CycloField::new(n);
        let g = field.generator();
        let mut value = field.zero();
        let mut power = field.one();
        let mut float = 0.0;
        let gf = 2.0 * (std::f64::consts::PI / n as f64).cos();
        for (k, &c) in coeffs.iter().enumerate().take(field.degree()) {
            value = value.add(&power.scale(&Rational::from_integer(c)));
            float += c as f64 * gf.powi(k as i32);
            power = field.mul(&power, &g);
        }
        prop_assume!(float.abs() > 1e-6);
        let expected = if float > 0.0 { Ordering::Greater } else { Ordering::Less };
        prop_assert_eq!(field.sign(&value), expected);
        prop_assert!((field.approx(&value) - float).abs() < 1e-6);
    }
}

#[test]
fn two_cos_values() {
    let field = CycloField::for_bonds([4, 5, 3]);
    for m in [2u32, 3, 4, 5, 10] {
        let expected = 2.0 * (std::f64::consts::PI / m as f64).cos();
        assert!((field.approx(&field.two_cos(m)) - expected).abs() < 1e-12, "m = {m}");
    }
}
