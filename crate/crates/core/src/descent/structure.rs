//! Solomon structure constants a_{JKL}, by definition and (for L = K) by the
//! closed formula over conjugate parabolics.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::coxeter::{CoxeterSystem, GroupElement, ParabolicAtlas, SubsetMask};

/// Brute-force a_{JKL} for all L ⊆ K.
///
/// For x ∈ ^JW^K the intersection x⁻¹ W_J x ∩ W_K is the standard parabolic
/// W_L with L = {s ∈ K : x s x⁻¹ ∈ W_J}.
pub fn structure_constants_bruteforce(group: &CoxeterSystem, j: SubsetMask, k: SubsetMask) -> BTreeMap<SubsetMask, u64> {
    let mut out = BTreeMap::new();
    for x in group.elements() {
        if !group.is_min_left_rep(x, j) || !group.is_min_right_rep(x, k) {
            continue;
        }
        let l = intersection_type(group, x, j, k);
        *out.entry(l).or_insert(0) += 1;
    }
    out
}

/// L with x⁻¹ W_J x ∩ W_K = W_L, for a distinguished double coset representative x.
pub fn intersection_type(group: &CoxeterSystem, x: GroupElement, j: SubsetMask, k: SubsetMask) -> SubsetMask {
    let x_inv = group.inv(x);
    SubsetMask::from_indices(
        k.iter()
            .filter(|&s| group.in_parabolic(group.mul(group.right(x, s), x_inv), j)),
    )
}

/// Full table of structure constants, computed eagerly so it can be shared
/// across threads without synchronization.
#[derive(Clone, Debug)]
pub struct StructureConstants {
    rank: usize,
    /// Indexed by J * 2^rank + K; sparse over L, ascending.
    table: Vec<Vec<(SubsetMask, u64)>>,
}

impl StructureConstants {
    pub fn compute(group: &CoxeterSystem) -> Self {
        let rank = group.rank();
        let n = 1usize << rank;
        let mut table = Vec::with_capacity(n * n);
        for j in SubsetMask::all(rank) {
            for k in SubsetMask::all(rank) {
                table.push(structure_constants_bruteforce(group, j, k).into_iter().collect());
            }
        }
        StructureConstants { rank, table }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Nonzero a_{JKL} over L.
    pub fn row(&self, j: SubsetMask, k: SubsetMask) -> &[(SubsetMask, u64)] {
        &self.table[(j.index() << self.rank) | k.index()]
    }

    pub fn get(&self, j: SubsetMask, k: SubsetMask, l: SubsetMask) -> u64 {
        self.row(j, k)
            .iter()
            .find(|(m, _)| *m == l)
            .map_or(0, |&(_, a)| a)
    }
}

/// Variant of the closed a_{JKK} formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AjkkMode {
    /// Sum only over K' with c_{K'K} ∈ ^JW. Agrees with the count in types A,
    /// B, H and F4 but overcounts in D4, e.g. J = {s1,s2,s3}, K = {s2,s4}
    /// gives 4 against a true 2.
    Corrected,
    /// Sum over every K' ⊆ J conjugate to K. Known to be wrong (for H3 it makes
    /// the class-size system produce negative entries); kept for comparison.
    /// The row J = S is left at 1, since x_S is the unit.
    BbhtNaive,
    /// Not a formula: a_{JKK} counted from its definition.
    Counted,
}

/// a_{JKK} = sum over K' ∈ K̃, K' ⊆ J (and, in corrected mode, c_{K'K} minimal in
/// W_J c_{K'K}) of |N_K| / |W_J ∩ N_{K'}|.
pub fn ajkk_formula(group: &CoxeterSystem, atlas: &ParabolicAtlas, j: SubsetMask, k: SubsetMask, mode: AjkkMode) -> u64 {
    if mode == AjkkMode::Counted {
        return structure_constants_bruteforce(group, j, k).get(&k).copied().unwrap_or(0);
    }
    if mode == AjkkMode::BbhtNaive && j == group.full_set() {
        return 1;
    }
    let class = &atlas.classes()[atlas.class_of(k)];
    let n_k = atlas.normalizer_order(k) as u64;
    let mut total = 0;
    for &kp in &class.members {
        if !kp.is_subset_of(j) {
            continue;
        }
        if mode == AjkkMode::Corrected {
            let c = atlas.conjugator(kp, k).expect("same class");
            if !group.is_min_left_rep(c, j) {
                continue;
            }
        }
        let overlap = atlas
            .normalizer(kp)
            .iter()
            .filter(|&&n| group.in_parabolic(n, j))
            .count() as u64;
        debug_assert_eq!(n_k % overlap, 0, "W_J ∩ N_K' is a subgroup of N_K'");
        total += n_k / overlap;
    }
    total
}
