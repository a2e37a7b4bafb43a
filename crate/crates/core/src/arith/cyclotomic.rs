//! The real cyclotomic field Q(2cos(pi/N)), used for exact root coordinates.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::Rational;

/// Integer polynomial, lowest degree first.
type IntPoly = Vec<BigInt>;

fn int_trim(p: &mut IntPoly) {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn int_mul(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Exact quotient of integer polynomials with a monic divisor.
fn int_div_monic(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let da = r.len() - 1;
    let mut q = vec![BigInt::zero(); da - db + 1];
    for d in (db..=da).rev() {
        let c = r[d].clone();
        if c.is_zero() {
            continue;
        }
        for (i, bc) in b.iter().enumerate() {
            r[d - db + i] -= &c * bc;
        }
        q[d - db] = c;
    }
    debug_assert!(r.iter().all(Zero::is_zero), "inexact cyclotomic division");
    q
}

/// The n-th cyclotomic polynomial.
pub fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    let mut num: IntPoly = vec![BigInt::zero(); n as usize + 1];
    num[0] = -BigInt::one();
    num[n as usize] = BigInt::one();
    let mut den: IntPoly = vec![BigInt::one()];
    for d in 1..n {
        if n % d == 0 {
            den = int_mul(&den, &cyclotomic_polynomial(d));
        }
    }
    int_div_monic(&num, &den)
}

/// Minimal polynomial of 2cos(pi/n) over Q, monic with integer coefficients.
///
/// 2cos(pi/n) = z + 1/z for a primitive 2n-th root of unity z, so the result is
/// the palindromic cyclotomic polynomial of order 2n rewritten in y = x + 1/x.
pub fn two_cos_minimal_polynomial(n: u32) -> Vec<BigInt> {
    assert!(n >= 2, "2cos(pi/n) needs n >= 2");
    let phi = cyclotomic_polynomial(2 * n);
    let k = (phi.len() - 1) / 2;
    // x^j + x^{-j} as a polynomial in y: C_0 = 2, C_1 = y, C_{j+1} = y C_j - C_{j-1}
    let mut chebyshev: Vec<IntPoly> = vec![vec![BigInt::from(2)], vec![BigInt::zero(), BigInt::one()]];
    for j in 1..k {
        let mut next = vec![BigInt::zero()];
        next.extend(chebyshev[j].iter().cloned());
        for (i, c) in chebyshev[j - 1].iter().enumerate() {
            next[i] -= c;
        }
        chebyshev.push(next);
    }
    let mut out: IntPoly = vec![BigInt::zero(); k + 1];
    out[0] = phi[k].clone();
    for j in 1..=k {
        for (i, c) in chebyshev[j].iter().enumerate() {
            out[i] += &phi[k + j] * c;
        }
    }
    int_trim(&mut out);
    out
}

fn eval_int(poly: &[BigInt], x: &Rational) -> Rational {
    poly.iter()
        .rev()
        .fold(Rational::zero(), |acc, c| acc * x + Rational::from(c.clone()))
}

fn eval(poly: &[Rational], x: &Rational) -> Rational {
    poly.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
}

/// An element of Q(2cos(pi/N)) in the power basis of the generator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct RealCyclotomic {
    coeffs: Vec<Rational>,
}

impl RealCyclotomic {
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        RealCyclotomic {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        RealCyclotomic {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        RealCyclotomic {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    pub fn scale(&self, k: &Rational) -> Self {
        RealCyclotomic {
            coeffs: self.coeffs.iter().map(|a| a * k).collect(),
        }
    }
}

/// Descriptor for Q(g) with g = 2cos(pi/N): the minimal polynomial of g and an
/// isolating interval for g among its real roots.
#[derive(Clone, Debug)]
pub struct CycloField {
    n: u32,
    minpoly: Vec<BigInt>,
    lo: Rational,
    hi: Rational,
}

impl CycloField {
    pub fn new(n: u32) -> Self {
        let minpoly = two_cos_minimal_polynomial(n);
        // g is the largest root of the minimal polynomial and every root is below 2.
        // The next root down is 2cos(3pi/N), so any rational strictly between the
        // two isolates g.
        let hi = Rational::from(2i64);
        let lo = if minpoly.len() == 2 {
            // Rational generator: g = -c0 exactly.
            Rational::from(-minpoly[0].clone()) - Rational::one()
        } else {
            let pi = core::f64::consts::PI;
            let g = 2.0 * cos_approx(pi / n as f64);
            let next = 2.0 * cos_approx(3.0 * pi / n as f64);
            let mid = (g + next) / 2.0;
            let scale = 1i64 << 24;
            Rational::new(floor_approx(mid * scale as f64), scale).expect("nonzero")
        };
        let field = CycloField { n, minpoly, lo, hi };
        debug_assert_ne!(
            eval_int(&field.minpoly, &field.lo).signum(),
            eval_int(&field.minpoly, &field.hi).signum(),
            "isolating interval does not bracket 2cos(pi/N)"
        );
        field
    }

    /// A field containing 2cos(pi/m) for every bond label m. Labels 1, 2 and 3
    /// give rational values and do not enlarge the field.
    pub fn for_bonds(bonds: impl IntoIterator<Item = u32>) -> Self {
        let n = bonds
            .into_iter()
            .filter(|&m| m > 3)
            .fold(2u32, |acc, m| acc.lcm(&m));
        Self::new(n)
    }

    pub fn conductor(&self) -> u32 {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.minpoly.len() - 1
    }

    pub fn minimal_polynomial(&self) -> &[BigInt] {
        &self.minpoly
    }

    pub fn isolating_interval(&self) -> (&Rational, &Rational) {
        (&self.lo, &self.hi)
    }

    pub fn zero(&self) -> RealCyclotomic {
        RealCyclotomic {
            coeffs: vec![Rational::zero(); self.degree()],
        }
    }

    pub fn from_rational(&self, r: Rational) -> RealCyclotomic {
        let mut x = self.zero();
        x.coeffs[0] = r;
        x
    }

    pub fn one(&self) -> RealCyclotomic {
        self.from_rational(Rational::one())
    }

    /// The generator g = 2cos(pi/N).
    pub fn generator(&self) -> RealCyclotomic {
        self.reduce(vec![Rational::zero(), Rational::one()])
    }

    /// 2cos(pi/m); requires m to divide N unless m <= 3.
    pub fn two_cos(&self, m: u32) -> RealCyclotomic {
        match m {
            1 => return self.from_rational(Rational::from(-2i64)),
            2 => return self.zero(),
            3 => return self.one(),
            _ => {}
        }
        assert!(m >= 1 && self.n % m == 0, "2cos(pi/{m}) is not in Q(2cos(pi/{}))", self.n);
        let k = (self.n / m) as usize;
        // 2cos(k t) in terms of g = 2cos(t): C_0 = 2, C_1 = g, C_{j+1} = g C_j - C_{j-1}
        let g = self.generator();
        let mut prev = self.from_rational(Rational::from(2i64));
        let mut cur = g.clone();
        if k == 0 {
            return prev;
        }
        for _ in 1..k {
            let next = self.mul(&g, &cur).sub(&prev);
            prev = cur;
            cur = next;
        }
        cur
    }

    fn reduce(&self, mut poly: Vec<Rational>) -> RealCyclotomic {
        let d = self.degree();
        while poly.len() > d {
            let top = poly.pop().expect("nonempty");
            if top.is_zero() {
                continue;
            }
            let shift = poly.len() - d;
            // monic minimal polynomial: x^d = -sum c_i x^i
            for (i, c) in self.minpoly[..d].iter().enumerate() {
                poly[shift + i] -= &top * &Rational::from(c.clone());
            }
        }
        poly.resize(d, Rational::zero());
        RealCyclotomic { coeffs: poly }
    }

    pub fn mul(&self, a: &RealCyclotomic, b: &RealCyclotomic) -> RealCyclotomic {
        let mut prod = vec![Rational::zero(); 2 * self.degree() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                prod[i + j] += x * y;
            }
        }
        self.reduce(prod)
    }

    /// Exact sign of `a` as a real number, by bisecting the isolating interval
    /// until the value at the midpoint dominates a Lipschitz bound.
    pub fn sign(&self, a: &RealCyclotomic) -> Ordering {
        if a.is_zero() {
            return Ordering::Equal;
        }
        let mut lo = self.lo.clone();
        let mut hi = self.hi.clone();
        let lo_sign = eval_int(&self.minpoly, &lo).signum();
        let two = Rational::from(2i64);
        // Derivative coefficients with absolute values, for the bound.
        let deriv_abs: Vec<Rational> = a
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.abs() * Rational::from(i as i64))
            .collect();
        loop {
            let mid = (&lo + &hi).checked_div(&two).expect("two is nonzero");
            let value = eval(&a.coeffs, &mid);
            let radius = eval(&deriv_abs, &core::cmp::max(lo.abs(), hi.abs()));
            let half = (&hi - &lo).checked_div(&two).expect("two is nonzero");
            if value.abs() > radius * half {
                return value.signum();
            }
            let at_mid = eval_int(&self.minpoly, &mid);
            match at_mid.signum() {
                Ordering::Equal => return value.signum(),
                s if s == lo_sign => lo = mid,
                _ => hi = mid,
            }
        }
    }

    /// Floating-point value of `a`; for diagnostics and tests only.
    pub fn approx(&self, a: &RealCyclotomic) -> f64 {
        let g = 2.0 * cos_approx(core::f64::consts::PI / self.n as f64);
        let mut acc = 0.0;
        for c in a.coeffs.iter().rev() {
            acc = acc * g + rational_to_f64(c);
        }
        acc
    }
}

fn rational_to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    let n = r.numer().to_f64().unwrap_or(f64::NAN);
    let d = r.denom().to_f64().unwrap_or(f64::NAN);
    n / d
}

fn floor_approx(x: f64) -> i64 {
    let t = x as i64;
    if (t as f64) > x {
        t - 1
    } else {
        t
    }
}

// `core` has no transcendental functions; a short Taylor series after range
// reduction to [0, pi] is accurate to ~1e-15, far more than interval
// placement needs.
fn cos_approx(x: f64) -> f64 {
    let pi = core::f64::consts::PI;
    let two_pi = 2.0 * pi;
    let mut t = x % two_pi;
    if t < 0.0 {
        t += two_pi;
    }
    if t > pi {
        t = two_pi - t;
    }
    // cos(t) = -cos(pi - t); use the smaller argument
    let (arg, sign) = if t > pi / 2.0 { (pi - t, -1.0) } else { (t, 1.0) };
    let x2 = arg * arg;
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..20 {
        term *= -x2 / ((2 * k - 1) as f64 * (2 * k) as f64);
        sum += term;
    }
    sign * sum
}
