use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::arith::Rational;
use crate::coxeter::{CoxeterSystem, GroupElement, SubsetMask};
use crate::descent::{Basis, DescentElement};

/// Element of the group algebra Q[W]; missing coefficients are zero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    coeffs: BTreeMap<GroupElement, Rational>,
}

impl GroupAlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_element(w: GroupElement) -> Self {
        let mut a = Self::zero();
        a.set(w, Rational::one());
        a
    }

    pub fn from_dense(values: &[Rational]) -> Self {
        let mut a = Self::zero();
        for (i, v) in values.iter().enumerate() {
            a.set(GroupElement(i as u32), v.clone());
        }
        a
    }

    pub fn get(&self, w: GroupElement) -> Rational {
        self.coeffs.get(&w).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn set(&mut self, w: GroupElement, value: Rational) {
        if value.is_zero() {
            self.coeffs.remove(&w);
        } else {
            self.coeffs.insert(w, value);
        }
    }

    pub fn add_to(&mut self, w: GroupElement, value: &Rational) {
        let v = self.get(w) + value;
        self.set(w, v);
    }

    pub fn iter(&self) -> impl Iterator<Item = (GroupElement, &Rational)> {
        self.coeffs.iter().map(|(w, c)| (*w, c))
    }

    pub fn support_size(&self) -> usize {
        self.coeffs.len()
    }

    pub fn to_dense(&self, order: usize) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); order];
        for (w, c) in self.iter() {
            out[w.index()] = c.clone();
        }
        out
    }
}

/// The image of d in Q[W]: the coefficient of w is the sum of lambda_J over
/// all J with w ∈ W^J, i.e. J ⊆ S \ DES_R(w).
pub fn expand(group: &CoxeterSystem, d: &DescentElement) -> GroupAlgebraElement {
    let d = d.in_basis(Basis::X);
    let rank = group.rank();
    // zeta transform: below[M] = sum of lambda_J over J ⊆ M
    let mut below: Vec<Rational> = d.coeffs().to_vec();
    for i in 0..rank {
        for m in 0..(1usize << rank) {
            if m & (1 << i) != 0 {
                let lower = below[m ^ (1 << i)].clone();
                below[m] += &lower;
            }
        }
    }
    let full = SubsetMask::full(rank);
    let mut out = GroupAlgebraElement::zero();
    for w in group.elements() {
        let c = &below[full.difference(group.right_descents(w)).index()];
        if !c.is_zero() {
            out.set(w, c.clone());
        }
    }
    out
}

/// (a · b)(w) = sum over uv = w of a(u) b(v).
pub fn convolve(group: &CoxeterSystem, a: &GroupAlgebraElement, b: &GroupAlgebraElement) -> GroupAlgebraElement {
    let mut out = GroupAlgebraElement::zero();
    for (u, au) in a.iter() {
        for (v, bv) in b.iter() {
            out.add_to(group.mul(u, v), &(au * bv));
        }
    }
    out
}
