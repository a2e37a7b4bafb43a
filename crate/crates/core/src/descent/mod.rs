//! Solomon's descent algebra of a finite Coxeter group: products, the action
//! matrix on the x-basis, and the spectrum of left multiplication.

mod element;
mod spectrum;
mod structure;

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

pub use element::{Basis, DescentElement};
pub use spectrum::{solve_lower_triangular, ClassSumForm, Eigenvalue, SpectrumReport};
pub use structure::{ajkk_formula, intersection_type, structure_constants_bruteforce, AjkkMode, StructureConstants};

pub use crate::coxeter::bergeron_cmp as bergeron_compare;

use crate::arith::Rational;
use crate::coxeter::{bergeron_descending, CoxeterSystem, ParabolicAtlas, SubsetMask, TieBreak};
use crate::error::Result;

/// A group together with everything needed to compute in its descent algebra.
#[derive(Clone, Debug)]
pub struct DescentAlgebra {
    group: CoxeterSystem,
    atlas: ParabolicAtlas,
    constants: StructureConstants,
}

/// Matrix of left multiplication by d on the x-basis, rows and columns in
/// ≻-descending subset order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionMatrix {
    order: Vec<SubsetMask>,
    entries: Vec<Rational>,
}

impl ActionMatrix {
    pub fn order(&self) -> &[SubsetMask] {
        &self.order
    }

    pub fn dim(&self) -> usize {
        self.order.len()
    }

    /// Entry at positions (i, j) of the ordering.
    pub fn at(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.order.len() + j]
    }

    /// Coefficient of x_L in d · x_K.
    pub fn get(&self, l: SubsetMask, k: SubsetMask) -> &Rational {
        let pos = |m: SubsetMask| self.order.iter().position(|&o| o == m).expect("subset in range");
        self.at(pos(l), pos(k))
    }

    pub fn is_upper_triangular(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..i).all(|j| self.at(i, j).is_zero()))
    }

    pub fn diagonal(&self) -> Vec<(SubsetMask, Rational)> {
        (0..self.dim()).map(|i| (self.order[i], self.at(i, i).clone())).collect()
    }
}

impl DescentAlgebra {
    pub fn new(group: CoxeterSystem) -> Self {
        Self::with_tie_break(group, TieBreak::default())
    }

    pub fn with_tie_break(group: CoxeterSystem, tie_break: TieBreak) -> Self {
        let atlas = ParabolicAtlas::build_with(&group, tie_break);
        let constants = StructureConstants::compute(&group);
        DescentAlgebra {
            group,
            atlas,
            constants,
        }
    }

    pub fn group(&self) -> &CoxeterSystem {
        &self.group
    }

    pub fn atlas(&self) -> &ParabolicAtlas {
        &self.atlas
    }

    pub fn constants(&self) -> &StructureConstants {
        &self.constants
    }

    pub fn rank(&self) -> usize {
        self.group.rank()
    }

    pub fn structure_constant(&self, j: SubsetMask, k: SubsetMask, l: SubsetMask) -> u64 {
        self.constants.get(j, k, l)
    }

    pub fn ajkk(&self, j: SubsetMask, k: SubsetMask, mode: AjkkMode) -> u64 {
        if mode == AjkkMode::Counted {
            return self.constants.get(j, k, k);
        }
        ajkk_formula(&self.group, &self.atlas, j, k, mode)
    }

    /// d1 · d2, in the x-basis.
    pub fn multiply(&self, d1: &DescentElement, d2: &DescentElement) -> DescentElement {
        let a = d1.in_basis(Basis::X);
        let b = d2.in_basis(Basis::X);
        let mut out = DescentElement::zero(self.rank(), Basis::X);
        for (j, lj) in a.nonzero() {
            for (k, lk) in b.nonzero() {
                let coeff = lj * lk;
                for &(l, n) in self.constants.row(j, k) {
                    let c = out.coeff(l) + &(&coeff * &Rational::from_integer(n));
                    out.set(l, c);
                }
            }
        }
        out
    }

    pub fn action_matrix(&self, d: &DescentElement) -> ActionMatrix {
        let d = d.in_basis(Basis::X);
        let order = bergeron_descending(self.rank());
        let n = order.len();
        let pos: BTreeMap<SubsetMask, usize> = order.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        let mut entries = alloc::vec![Rational::zero(); n * n];
        for (j, lj) in d.nonzero() {
            for &k in &order {
                for &(l, a) in self.constants.row(j, k) {
                    entries[pos[&l] * n + pos[&k]] += &(lj * &Rational::from_integer(a));
                }
            }
        }
        ActionMatrix { order, entries }
    }

    /// A[i][j] = a_{K_i K_j K_j} over class representatives, in atlas order.
    pub fn a_matrix(&self, mode: AjkkMode) -> Vec<Vec<u64>> {
        let reps = self.atlas.representatives();
        reps.iter()
            .map(|&ki| reps.iter().map(|&kj| self.ajkk(ki, kj, mode)).collect())
            .collect()
    }

    /// Solution of A m = (|W|, ..., |W|). Exact with counted constants; the
    /// naive mode can produce nonsense such as negative sizes.
    pub fn class_sizes_from_a(&self, mode: AjkkMode) -> Result<Vec<Rational>> {
        let a: Vec<Vec<Rational>> = self
            .a_matrix(mode)
            .into_iter()
            .map(|row| row.into_iter().map(Rational::from_integer).collect())
            .collect();
        let u = alloc::vec![Rational::from_integer(self.group.order()); a.len()];
        solve_lower_triangular(&a, &u)
    }

    /// Lambda_i = sum of lambda_J over the i-th parabolic class (x-basis).
    pub fn class_sums(&self, d: &DescentElement) -> Vec<Rational> {
        let d = d.in_basis(Basis::X);
        self.atlas
            .classes()
            .iter()
            .map(|c| c.members.iter().map(|&j| d.coeff(j).clone()).sum())
            .collect()
    }

    pub fn spectrum(&self, d: &DescentElement) -> Result<SpectrumReport> {
        spectrum::spectrum(self, d)
    }
}
