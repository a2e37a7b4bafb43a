//! Geometric realization: the root system of (W, S) with exact coordinates in
//! the basis of simple roots, and each generator as a permutation of the roots.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use super::CoxeterSpec;
use crate::arith::{CycloField, RealCyclotomic};
use crate::error::{Error, Result};

/// Hard ceiling on the number of roots; root indices are stored as `u16`.
pub const ROOT_CAP: usize = u16::MAX as usize;

pub(crate) struct RootSystem {
    pub positive: Vec<bool>,
    /// `generator_perms[i][r]` is the index of s_i(root r).
    pub generator_perms: Vec<Vec<u16>>,
}

/// Closes the simple roots under the simple reflections.
///
/// With the symmetric form B(a_i, a_j) = -cos(pi/m_ij), the reflection s_i only
/// changes coordinate i: v_i -> -v_i + sum_{j != i} 2cos(pi/m_ij) v_j.
pub(crate) fn build_root_system(spec: &CoxeterSpec) -> Result<RootSystem> {
    let rank = spec.rank();
    let field = CycloField::for_bonds((0..rank).flat_map(|i| (0..rank).map(move |j| (i, j))).map(|(i, j)| spec.m(i, j)));
    let bond: Vec<Vec<RealCyclotomic>> = (0..rank)
        .map(|i| {
            (0..rank)
                .map(|j| if i == j { field.zero() } else { field.two_cos(spec.m(i, j)) })
                .collect()
        })
        .collect();

    let reflect = |i: usize, v: &[RealCyclotomic]| -> Vec<RealCyclotomic> {
        let mut out = v.to_vec();
        let mut new_i = v[i].neg();
        for j in 0..rank {
            if j != i && !bond[i][j].is_zero() && !v[j].is_zero() {
                new_i = new_i.add(&field.mul(&bond[i][j], &v[j]));
            }
        }
        out[i] = new_i;
        out
    };

    let mut roots: Vec<Vec<RealCyclotomic>> = Vec::new();
    let mut index: BTreeMap<Vec<RealCyclotomic>, usize> = BTreeMap::new();
    for i in 0..rank {
        let mut v = vec![field.zero(); rank];
        v[i] = field.one();
        index.insert(v.clone(), roots.len());
        roots.push(v);
    }
    let mut perms: Vec<Vec<u16>> = vec![Vec::new(); rank];
    let mut next = 0;
    while next < roots.len() {
        for (i, perm) in perms.iter_mut().enumerate() {
            let image = reflect(i, &roots[next]);
            let target = match index.get(&image) {
                Some(&t) => t,
                None => {
                    if roots.len() >= ROOT_CAP {
                        return Err(Error::GroupTooLarge { cap: ROOT_CAP });
                    }
                    index.insert(image.clone(), roots.len());
                    roots.push(image);
                    roots.len() - 1
                }
            };
            perm.push(target as u16);
        }
        next += 1;
    }

    let positive = roots
        .iter()
        .map(|v| {
            let lead = v.iter().find(|c| !c.is_zero()).expect("roots are nonzero");
            field.sign(lead) == Ordering::Greater
        })
        .collect();
    Ok(RootSystem {
        positive,
        generator_perms: perms,
    })
}
