use alloc::vec;
use alloc::vec::Vec;

use super::group_algebra::{expand, GroupAlgebraElement};
use crate::arith::{ModMatrix, PrimeField, Rational};
use crate::coxeter::{CoxeterSystem, GroupElement};
use crate::descent::DescentElement;
use crate::error::{Error, Result};

/// Largest |W| for which the dense regular representation is built.
pub const MAX_REGULAR_ORDER: usize = 20_000;

/// R_W(d) with entry (w, w') = lambda_{w w'^{-1}}, rows and columns in the
/// element order of the group. Stored as the coefficient vector plus an index
/// table instead of |W|^2 rationals.
#[derive(Clone, Debug)]
pub struct RegularRepMatrix {
    order: usize,
    coeffs: Vec<Rational>,
    index: Vec<u32>,
}

impl RegularRepMatrix {
    pub fn new(group: &CoxeterSystem, d: &DescentElement) -> Result<Self> {
        Self::from_element(group, &expand(group, d))
    }

    pub fn from_element(group: &CoxeterSystem, a: &GroupAlgebraElement) -> Result<Self> {
        let n = group.order();
        if n > MAX_REGULAR_ORDER {
            return Err(Error::ResourceLimit {
                order: n,
                limit: MAX_REGULAR_ORDER,
            });
        }
        let mut index = vec![0u32; n * n];
        let mut column: Vec<GroupElement> = Vec::with_capacity(n);
        for wp in group.elements() {
            column.clear();
            column.extend(group.elements());
            for s in group.word(group.inv(wp)) {
                for w in column.iter_mut() {
                    *w = group.right(*w, s);
                }
            }
            for (row, w) in column.iter().enumerate() {
                index[row * n + wp.index()] = w.0;
            }
        }
        Ok(RegularRepMatrix {
            order: n,
            coeffs: a.to_dense(n),
            index,
        })
    }

    pub fn dim(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// The element w w'^{-1} labelling entry (w, w').
    pub fn label(&self, row: usize, col: usize) -> GroupElement {
        GroupElement(self.index[row * self.order + col])
    }

    pub fn entry(&self, row: usize, col: usize) -> &Rational {
        &self.coeffs[self.index[row * self.order + col] as usize]
    }

    pub fn trace(&self) -> Rational {
        (0..self.order).map(|i| self.entry(i, i).clone()).sum()
    }

    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        (0..self.order)
            .map(|i| {
                (0..self.order)
                    .filter(|&j| !v[j].is_zero())
                    .map(|j| self.entry(i, j) * &v[j])
                    .sum()
            })
            .collect()
    }

    pub fn to_dense(&self) -> Vec<Vec<Rational>> {
        (0..self.order)
            .map(|i| (0..self.order).map(|j| self.entry(i, j).clone()).collect())
            .collect()
    }

    /// Reduction modulo p, given the residue of each coefficient.
    pub fn to_mod_matrix(&self, field: PrimeField, residues: &[u64]) -> ModMatrix {
        let n = self.order;
        ModMatrix::from_fn(field, n, |i, j| residues[self.index[i * n + j] as usize])
    }

    /// Reduction modulo p of the matrix itself; `None` if p divides a denominator.
    pub fn reduce(&self, field: PrimeField) -> Option<ModMatrix> {
        let residues: Option<Vec<u64>> = self.coeffs.iter().map(|c| c.to_residue(field.modulus())).collect();
        residues.map(|r| self.to_mod_matrix(field, &r))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::charpoly_mod;
    use crate::coxeter::{CoxeterSpec, SubsetMask};
    use crate::descent::Basis;

    #[test]
    fn x_full_is_identity() {
        let w = CoxeterSystem::build(&CoxeterSpec::named("B2").unwrap()).unwrap();
        let r = RegularRepMatrix::new(&w, &DescentElement::basis_element(2, Basis::X, SubsetMask::full(2))).unwrap();
        for i in 0..8 {
            for j in 0..8 {
                let expected = if i == j { Rational::one() } else { Rational::zero() };
                assert_eq!(r.entry(i, j), &expected);
            }
        }
    }

    #[test]
    fn a2_all_ones_charpoly() {
        let w = CoxeterSystem::build(&CoxeterSpec::named("A2").unwrap()).unwrap();
        let r = RegularRepMatrix::new(&w, &DescentElement::basis_element(2, Basis::X, SubsetMask::EMPTY)).unwrap();
        let f = PrimeField::new(1_000_003).unwrap();
        let poly = charpoly_mod(&r.reduce(f).unwrap());
        assert_eq!(poly, [0, 0, 0, 0, 0, f.neg(6), 1]);
    }
}
