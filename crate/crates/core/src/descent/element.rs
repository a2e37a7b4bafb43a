use alloc::vec;
use alloc::vec::Vec;

use crate::arith::Rational;
use crate::coxeter::SubsetMask;

/// Which basis of the descent algebra a coefficient vector refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    /// x_J = sum of the minimal left coset representatives W^J.
    X,
    /// y_J = sum of the elements with right descent set exactly J.
    Y,
}

/// d = sum_J lambda_J b_J in the x- or y-basis. Stored densely over all 2^rank
/// subsets; absent coefficients are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DescentElement {
    basis: Basis,
    rank: usize,
    coeffs: Vec<Rational>,
}

impl DescentElement {
    pub fn zero(rank: usize, basis: Basis) -> Self {
        DescentElement {
            basis,
            rank,
            coeffs: vec![Rational::zero(); 1 << rank],
        }
    }

    pub fn basis_element(rank: usize, basis: Basis, j: SubsetMask) -> Self {
        let mut d = Self::zero(rank, basis);
        d.set(j, Rational::one());
        d
    }

    pub fn from_coefficients(
        rank: usize,
        basis: Basis,
        coeffs: impl IntoIterator<Item = (SubsetMask, Rational)>,
    ) -> Self {
        let mut d = Self::zero(rank, basis);
        for (j, c) in coeffs {
            let slot = &mut d.coeffs[j.index()];
            *slot = &*slot + &c;
        }
        d
    }

    /// Dense constructor; `coeffs[J.index()]` is the coefficient of b_J.
    pub fn from_dense(rank: usize, basis: Basis, coeffs: Vec<Rational>) -> Self {
        assert_eq!(coeffs.len(), 1 << rank, "one coefficient per subset");
        DescentElement { basis, rank, coeffs }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn coeff(&self, j: SubsetMask) -> &Rational {
        &self.coeffs[j.index()]
    }

    pub fn set(&mut self, j: SubsetMask, value: Rational) {
        self.coeffs[j.index()] = value;
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn nonzero(&self) -> impl Iterator<Item = (SubsetMask, &Rational)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| (SubsetMask(j as u32), c))
    }

    pub fn scale(&self, k: &Rational) -> Self {
        DescentElement {
            basis: self.basis,
            rank: self.rank,
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let other = other.in_basis(self.basis);
        DescentElement {
            basis: self.basis,
            rank: self.rank,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn in_basis(&self, basis: Basis) -> Self {
        match (self.basis, basis) {
            (Basis::X, Basis::Y) => self.x_to_y(),
            (Basis::Y, Basis::X) => self.y_to_x(),
            _ => self.clone(),
        }
    }

    /// y_J = sum_{K ⊆ J} (-1)^{|J \ K|} x_{S \ K}
    pub fn y_to_x(&self) -> Self {
        if self.basis == Basis::X {
            return self.clone();
        }
        let full = SubsetMask::full(self.rank);
        let mut out = Self::zero(self.rank, Basis::X);
        for (j, mu) in self.nonzero() {
            for k in j.subsets() {
                let target = &mut out.coeffs[full.difference(k).index()];
                if (j.len() - k.len()) % 2 == 0 {
                    *target += mu;
                } else {
                    *target -= mu;
                }
            }
        }
        out
    }

    /// x_{S \ K} = sum_{J ⊆ K} y_J
    pub fn x_to_y(&self) -> Self {
        if self.basis == Basis::Y {
            return self.clone();
        }
        let full = SubsetMask::full(self.rank);
        let mut out = Self::zero(self.rank, Basis::Y);
        for (l, lambda) in self.nonzero() {
            for j in full.difference(l).subsets() {
                out.coeffs[j.index()] += lambda;
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn y_empty_is_x_full() {
        let y = DescentElement::basis_element(3, Basis::Y, SubsetMask::EMPTY);
        assert_eq!(y.y_to_x(), DescentElement::basis_element(3, Basis::X, SubsetMask::full(3)));
    }

    #[test]
    fn a2_y_s1() {
        let y = DescentElement::basis_element(2, Basis::Y, SubsetMask::singleton(0));
        let expected = DescentElement::from_coefficients(
            2,
            Basis::X,
            [(SubsetMask::singleton(1), Rational::one()), (SubsetMask::full(2), -Rational::one())],
        );
        assert_eq!(y.y_to_x(), expected);
    }

    #[test]
    fn x_complement_is_indicator_of_subsets() {
        let k = SubsetMask::from_indices([0, 2]);
        let x = DescentElement::basis_element(4, Basis::X, k.complement(4));
        let y = x.x_to_y();
        for j in SubsetMask::all(4) {
            let expected = if j.is_subset_of(k) { Rational::one() } else { Rational::zero() };
            assert_eq!(y.coeff(j), &expected);
        }
    }
}
