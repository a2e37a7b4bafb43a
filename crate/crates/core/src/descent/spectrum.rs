use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use super::{AjkkMode, DescentAlgebra, DescentElement};
use crate::arith::Rational;
use crate::coxeter::SubsetMask;
use crate::error::{Error, Result};

/// Delta = sum_i coeffs[i] * Lambda_i, with Lambda_i the class sums of d.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassSumForm {
    pub coeffs: Vec<u64>,
}

impl ClassSumForm {
    pub fn evaluate(&self, class_sums: &[Rational]) -> Rational {
        self.coeffs
            .iter()
            .zip(class_sums)
            .filter(|(c, _)| **c != 0)
            .map(|(&c, l)| l * &Rational::from_integer(c))
            .sum()
    }

    /// The same form spelled out over individual lambda_J.
    pub fn expand(&self, classes: &[crate::coxeter::ParabolicClass]) -> Vec<(SubsetMask, u64)> {
        let mut out: Vec<(SubsetMask, u64)> = self
            .coeffs
            .iter()
            .zip(classes)
            .filter(|(c, _)| **c != 0)
            .flat_map(|(&c, class)| class.members.iter().map(move |&j| (j, c)))
            .collect();
        out.sort();
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Eigenvalue {
    pub class: usize,
    pub representative: SubsetMask,
    pub form: ClassSumForm,
    pub value: Rational,
    pub multiplicity: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumReport {
    pub order: u64,
    /// One entry per parabolic class, in atlas order.
    pub eigenvalues: Vec<Eigenvalue>,
    pub a_matrix: Vec<Vec<u64>>,
}

impl SpectrumReport {
    /// Distinct eigenvalues with summed multiplicities, ascending.
    pub fn distinct(&self) -> Vec<(Rational, u64)> {
        let mut merged: BTreeMap<Rational, u64> = BTreeMap::new();
        for e in &self.eigenvalues {
            *merged.entry(e.value.clone()).or_insert(0) += e.multiplicity;
        }
        merged.into_iter().collect()
    }

    pub fn multiplicities(&self) -> Vec<u64> {
        self.eigenvalues.iter().map(|e| e.multiplicity).collect()
    }
}

/// Forward substitution for a lower triangular system; entries above the
/// diagonal must vanish and the diagonal must not.
pub fn solve_lower_triangular(a: &[Vec<Rational>], u: &[Rational]) -> Result<Vec<Rational>> {
    let n = a.len();
    if u.len() != n || a.iter().any(|row| row.len() != n) {
        return Err(Error::InternalInvariant(format!("expected a square system of size {}", n)));
    }
    for (i, row) in a.iter().enumerate() {
        if row[i + 1..].iter().any(|x| !x.is_zero()) {
            return Err(Error::InternalInvariant(format!("row {} has entries above the diagonal", i)));
        }
    }
    let mut m: Vec<Rational> = Vec::with_capacity(n);
    for i in 0..n {
        let mut rhs = u[i].clone();
        for (j, mj) in m.iter().enumerate() {
            rhs -= &(&a[i][j] * mj);
        }
        m.push(rhs.checked_div(&a[i][i])?);
    }
    Ok(m)
}

pub(super) fn spectrum(alg: &DescentAlgebra, d: &DescentElement) -> Result<SpectrumReport> {
    let atlas = alg.atlas();
    let order = alg.group().order() as u64;
    let a = alg.a_matrix(AjkkMode::Counted);
    let m = alg.class_sizes_from_a(AjkkMode::Counted)?;

    let mut multiplicities = Vec::with_capacity(m.len());
    for (i, mi) in m.iter().enumerate() {
        let rep = atlas.classes()[i].representative;
        let expected = atlas.closure_type_counts()[i] as i64;
        match mi.to_i64() {
            Some(v) if v == expected && v > 0 => multiplicities.push(v as u64),
            _ => {
                return Err(Error::InternalInvariant(format!(
                    "multiplicity {} for {} disagrees with the closure census {}",
                    mi, rep, expected
                )))
            }
        }
    }
    if multiplicities.iter().sum::<u64>() != order {
        return Err(Error::InternalInvariant(format!("multiplicities do not sum to {}", order)));
    }

    let sums = alg.class_sums(d);
    let eigenvalues = atlas
        .classes()
        .iter()
        .enumerate()
        .map(|(j, class)| {
            let form = ClassSumForm {
                coeffs: a.iter().map(|row| row[j]).collect(),
            };
            Eigenvalue {
                class: j,
                representative: class.representative,
                value: form.evaluate(&sums),
                form,
                multiplicity: multiplicities[j],
            }
        })
        .collect();
    Ok(SpectrumReport {
        order,
        eigenvalues,
        a_matrix: a,
    })
}
