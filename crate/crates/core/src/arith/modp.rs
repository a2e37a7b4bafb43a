//! Word-sized prime fields, dense matrices over them, and the characteristic
//! polynomial by Hessenberg reduction.
//!
//! Polynomials are coefficient vectors, lowest degree first.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Oracle primes must exceed this bound.
pub const MIN_ORACLE_PRIME: u64 = 1 << 20;

/// The three largest primes below 2^62.
pub const DEFAULT_PRIMES: [u64; 3] = [
    4_611_686_018_427_387_847,
    4_611_686_018_427_387_817,
    4_611_686_018_427_387_787,
];

#[inline]
pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for all 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n % b == 0 {
            return n == b;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Largest prime strictly below `n`, if any.
pub fn prev_prime(n: u64) -> Option<u64> {
    (2..n).rev().find(|&k| is_prime(k))
}

/// An odd prime modulus below 2^63 together with its Montgomery constants.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
    /// -p^{-1} mod 2^64
    p_neg_inv: u64,
    /// 2^128 mod p
    r2: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p < 3 || p >= 1 << 63 || !is_prime(p) {
            return Err(Error::InvalidPrime(p));
        }
        let mut inv: u64 = 1;
        for _ in 0..6 {
            inv = inv.wrapping_mul(2u64.wrapping_sub(p.wrapping_mul(inv)));
        }
        let r = ((1u128 << 64) % p as u128) as u64;
        let r2 = mul_mod(r, r, p);
        Ok(PrimeField {
            p,
            p_neg_inv: inv.wrapping_neg(),
            r2,
        })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    #[inline]
    fn redc(&self, t: u128) -> u64 {
        let m = (t as u64).wrapping_mul(self.p_neg_inv);
        let u = ((t + m as u128 * self.p as u128) >> 64) as u64;
        if u >= self.p {
            u - self.p
        } else {
            u
        }
    }

    #[inline]
    fn to_mont(&self, a: u64) -> u64 {
        self.redc(a as u128 * self.r2 as u128)
    }

    #[inline]
    fn from_mont(&self, a: u64) -> u64 {
        self.redc(a as u128)
    }

    #[inline]
    fn mont_mul(&self, a: u64, b: u64) -> u64 {
        self.redc(a as u128 * b as u128)
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        mul_mod(a, b, self.p)
    }

    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn pow(&self, a: u64, e: u64) -> u64 {
        pow_mod(a, e, self.p)
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: u64) -> Option<u64> {
        if a % self.p == 0 {
            None
        } else {
            Some(pow_mod(a, self.p - 2, self.p))
        }
    }

    pub fn reduce_i64(&self, a: i64) -> u64 {
        (a as i128).rem_euclid(self.p as i128) as u64
    }

    pub fn element(&self, value: u64) -> PrimeFieldElement {
        PrimeFieldElement {
            value: value % self.p,
            modulus: self.p,
        }
    }
}

/// A residue together with its modulus.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeFieldElement {
    value: u64,
    modulus: u64,
}

impl PrimeFieldElement {
    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.modulus
    }

    pub fn inv(self) -> Option<Self> {
        if self.value == 0 {
            return None;
        }
        Some(PrimeFieldElement {
            value: pow_mod(self.value, self.modulus - 2, self.modulus),
            modulus: self.modulus,
        })
    }

    fn same_field(self, other: Self) -> u64 {
        assert_eq!(self.modulus, other.modulus, "operands from different prime fields");
        self.modulus
    }
}

impl fmt::Debug for PrimeFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

impl Add for PrimeFieldElement {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let p = self.same_field(rhs);
        let s = self.value + rhs.value;
        PrimeFieldElement {
            value: if s >= p { s - p } else { s },
            modulus: p,
        }
    }
}

impl Sub for PrimeFieldElement {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for PrimeFieldElement {
    type Output = Self;
    fn neg(self) -> Self {
        PrimeFieldElement {
            value: if self.value == 0 { 0 } else { self.modulus - self.value },
            modulus: self.modulus,
        }
    }
}

impl Mul for PrimeFieldElement {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let p = self.same_field(rhs);
        PrimeFieldElement {
            value: mul_mod(self.value, rhs.value, p),
            modulus: p,
        }
    }
}

/// Dense row-major square matrix over a prime field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModMatrix {
    field: PrimeField,
    n: usize,
    data: Vec<u64>,
}

impl ModMatrix {
    pub fn zeros(field: PrimeField, n: usize) -> Self {
        ModMatrix {
            field,
            n,
            data: vec![0; n * n],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Entries are reduced modulo the field prime.
    pub fn from_fn(field: PrimeField, n: usize, mut f: impl FnMut(usize, usize) -> u64) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j) % field.p);
            }
        }
        ModMatrix { field, n, data }
    }

    /// Builds from field elements; every entry must share one modulus.
    pub fn from_elements(rows: &[Vec<PrimeFieldElement>]) -> Result<Self> {
        let n = rows.len();
        let p = rows
            .iter()
            .flatten()
            .next()
            .map(|e| e.modulus)
            .ok_or_else(|| Error::Parse("empty matrix".into()))?;
        let field = PrimeField::new(p)?;
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::Parse("matrix is not square".into()));
            }
            for e in row {
                if e.modulus != p {
                    return Err(Error::Parse("entries from different prime fields".into()));
                }
                data.push(e.value);
            }
        }
        Ok(ModMatrix { field, n, data })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.n + j] = v % self.field.p;
    }

    pub fn mul(&self, rhs: &ModMatrix) -> ModMatrix {
        assert_eq!(self.n, rhs.n);
        let f = &self.field;
        let n = self.n;
        let mut out = ModMatrix::zeros(*f, n);
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let idx = i * n + j;
                    out.data[idx] = f.add(out.data[idx], f.mul(a, rhs.data[k * n + j]));
                }
            }
        }
        out
    }
}

/// Characteristic polynomial det(tI - M) as a monic coefficient vector of
/// length n + 1.
///
/// Similarity-reduces a copy of `m` to upper Hessenberg form, then runs the
/// standard column recurrence. O(n^3) field operations.
pub fn charpoly_mod(m: &ModMatrix) -> Vec<u64> {
    let f = m.field;
    let n = m.n;
    if n == 0 {
        return vec![1];
    }
    let mut h: Vec<u64> = m.data.iter().map(|&x| f.to_mont(x)).collect();
    let one_m = f.to_mont(1);
    let mut factors = vec![0u64; n];

    for k in 0..n.saturating_sub(2) {
        let piv_row = k + 1;
        let Some(found) = (piv_row..n).find(|&i| h[i * n + k] != 0) else {
            continue;
        };
        if found != piv_row {
            for j in 0..n {
                h.swap(found * n + j, piv_row * n + j);
            }
            for i in 0..n {
                h.swap(i * n + found, i * n + piv_row);
            }
        }
        let pivot = f.from_mont(h[piv_row * n + k]);
        let inv = f.to_mont(f.inv(pivot).expect("nonzero pivot"));

        // Eliminate below the subdiagonal with all row operations first; the
        // inverse similarity then only touches column k+1.
        let mut any = false;
        for i in (piv_row + 1)..n {
            let u = f.mont_mul(h[i * n + k], inv);
            factors[i] = u;
            if u == 0 {
                continue;
            }
            any = true;
            let (head, tail) = h.split_at_mut(i * n);
            let src = &head[piv_row * n + k..piv_row * n + n];
            let dst = &mut tail[k..n];
            for (d, &s) in dst.iter_mut().zip(src) {
                *d = f.sub(*d, f.mont_mul(u, s));
            }
        }
        if !any {
            continue;
        }
        let p128 = f.p as u128;
        for r in 0..n {
            let row = &h[r * n..r * n + n];
            let mut acc: u128 = 0;
            for i in (piv_row + 1)..n {
                let u = factors[i];
                if u != 0 {
                    acc += f.mont_mul(u, row[i]) as u128;
                }
            }
            let add = (acc % p128) as u64;
            let idx = r * n + piv_row;
            h[idx] = f.add(h[idx], add);
        }
    }

    // polys[m] = charpoly of the leading m x m block, in Montgomery form.
    let mut polys: Vec<Vec<u64>> = Vec::with_capacity(n + 1);
    polys.push(vec![one_m]);
    for mm in 1..=n {
        let c = mm - 1;
        let diag = h[c * n + c];
        let prev = &polys[mm - 1];
        let mut next = vec![0u64; mm + 1];
        for (d, &a) in prev.iter().enumerate() {
            next[d + 1] = f.add(next[d + 1], a);
            next[d] = f.sub(next[d], f.mont_mul(diag, a));
        }
        let mut prod = one_m;
        for i in (0..c).rev() {
            prod = f.mont_mul(prod, h[(i + 1) * n + i]);
            if prod == 0 {
                break;
            }
            let coef = f.mont_mul(h[i * n + c], prod);
            if coef == 0 {
                continue;
            }
            for (d, &a) in polys[i].iter().enumerate() {
                next[d] = f.sub(next[d], f.mont_mul(coef, a));
            }
        }
        polys.push(next);
    }
    polys
        .pop()
        .expect("n >= 1")
        .into_iter()
        .map(|x| f.from_mont(x))
        .collect()
}

fn trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.len() > 1 && *a.last().unwrap() == 0 {
        a.pop();
    }
    if a.is_empty() {
        a.push(0);
    }
    a
}

fn degree(a: &[u64]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

pub fn poly_mul(f: &PrimeField, a: &[u64], b: &[u64]) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return vec![0];
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    trim(out)
}

/// Multiplies `poly` in place by (t - root).
pub fn mul_linear(f: &PrimeField, poly: &mut Vec<u64>, root: u64) {
    poly.push(0);
    for d in (0..poly.len()).rev() {
        let lower = if d > 0 { poly[d - 1] } else { 0 };
        poly[d] = f.sub(lower, f.mul(root, poly[d]));
    }
}

/// Expands prod_j (t - root_j)^{mult_j}.
pub fn poly_from_roots(f: &PrimeField, roots: &[(u64, u64)]) -> Vec<u64> {
    let total: u64 = roots.iter().map(|&(_, m)| m).sum();
    let mut poly = Vec::with_capacity(total as usize + 1);
    poly.push(1);
    for &(r, m) in roots {
        for _ in 0..m {
            mul_linear(f, &mut poly, r);
        }
    }
    poly
}

/// Remainder of `a` modulo the nonzero polynomial `b`.
pub fn poly_rem(f: &PrimeField, a: &[u64], b: &[u64]) -> Vec<u64> {
    let db = degree(b).expect("division by the zero polynomial");
    let lead_inv = f.inv(b[db]).expect("nonzero leading coefficient");
    let mut r = trim(a.to_vec());
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let q = f.mul(r[dr], lead_inv);
        let shift = dr - db;
        for (i, &bc) in b[..=db].iter().enumerate() {
            r[shift + i] = f.sub(r[shift + i], f.mul(q, bc));
        }
        r = trim(r);
    }
    r
}

/// Exact quotient `a / b` (assumes `b` divides `a`).
pub fn poly_div_exact(f: &PrimeField, a: &[u64], b: &[u64]) -> Vec<u64> {
    let db = degree(b).expect("division by the zero polynomial");
    let lead_inv = f.inv(b[db]).expect("nonzero leading coefficient");
    let mut r = trim(a.to_vec());
    let Some(da) = degree(&r) else {
        return vec![0];
    };
    if da < db {
        return vec![0];
    }
    let mut q = vec![0u64; da - db + 1];
    for d in (db..=da).rev() {
        let c = f.mul(r[d], lead_inv);
        q[d - db] = c;
        if c == 0 {
            continue;
        }
        for (i, &bc) in b[..=db].iter().enumerate() {
            r[d - db + i] = f.sub(r[d - db + i], f.mul(c, bc));
        }
    }
    trim(q)
}

/// Monic greatest common divisor.
pub fn poly_gcd(f: &PrimeField, a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut x = trim(a.to_vec());
    let mut y = trim(b.to_vec());
    while degree(&y).is_some() {
        let r = poly_rem(f, &x, &y);
        x = y;
        y = r;
    }
    match degree(&x) {
        None => vec![0],
        Some(d) => {
            let inv = f.inv(x[d]).expect("nonzero");
            x.truncate(d + 1);
            x.iter().map(|&c| f.mul(c, inv)).collect()
        }
    }
}

pub fn poly_derivative(f: &PrimeField, a: &[u64]) -> Vec<u64> {
    if a.len() <= 1 {
        return vec![0];
    }
    trim(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| f.mul(c, i as u64 % f.p))
            .collect(),
    )
}

/// `a / gcd(a, a')`; correct whenever deg a < p.
pub fn square_free_part(f: &PrimeField, a: &[u64]) -> Vec<u64> {
    let g = poly_gcd(f, a, &poly_derivative(f, a));
    poly_div_exact(f, a, &g)
}

pub fn poly_divides(f: &PrimeField, divisor: &[u64], a: &[u64]) -> bool {
    degree(&poly_rem(f, a, divisor)).is_none()
}
