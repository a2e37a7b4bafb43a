//! Per-subset parabolic data, the parabolic conjugacy classes, and the fixed
//! conjugators between conjugate parabolic subgroups.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::subset::bergeron_cmp;
use super::{CoxeterSystem, GroupElement, Side, SubsetMask};
use crate::error::{Error, Result};

/// How to pick c_{K'K} among several minimal-length candidates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum TieBreak {
    /// Lexicographically smallest root permutation.
    #[default]
    LexSmallest,
    LexLargest,
}

#[derive(Clone, Debug)]
pub struct SubsetData {
    /// W_J
    pub elements: Vec<GroupElement>,
    /// W^J
    pub right_reps: Vec<GroupElement>,
    /// ^J W
    pub left_reps: Vec<GroupElement>,
    /// N_J: minimal left coset representatives normalizing W_J.
    pub normalizer: Vec<GroupElement>,
    pub coxeter_element: GroupElement,
    /// |conjugacy class of c_J|
    pub class_size: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParabolicClass {
    /// The ≻-minimal member.
    pub representative: SubsetMask,
    /// All J with W_J conjugate to W_representative, ascending.
    pub members: Vec<SubsetMask>,
}

#[derive(Clone, Debug)]
pub struct ParabolicAtlas {
    rank: usize,
    order: usize,
    subsets: Vec<SubsetData>,
    classes: Vec<ParabolicClass>,
    class_of: Vec<usize>,
    conjugators: BTreeMap<(SubsetMask, SubsetMask), GroupElement>,
    closure_counts: Vec<usize>,
    tie_break: TieBreak,
}

/// Some w in W^K with w⁻¹ W_J w = W_K, assuming |W_J| = |W_K|.
fn find_conjugator(group: &CoxeterSystem, j: SubsetMask, k: SubsetMask) -> Option<GroupElement> {
    if j.len() != k.len() {
        return None;
    }
    let gens: Vec<GroupElement> = j.iter().map(|s| group.generator(s)).collect();
    group
        .elements()
        .filter(|&w| group.is_min_right_rep(w, k))
        .find(|&w| gens.iter().all(|&s| group.in_parabolic(group.conj(s, w), k)))
}

impl ParabolicAtlas {
    pub fn build(group: &CoxeterSystem) -> Self {
        Self::build_with(group, TieBreak::default())
    }

    pub fn build_with(group: &CoxeterSystem, tie_break: TieBreak) -> Self {
        let rank = group.rank();
        let subsets: Vec<SubsetData> = SubsetMask::all(rank)
            .map(|j| {
                let elements = group.parabolic_elements(j);
                let right_reps = group.min_coset_reps(j, Side::Right);
                let left_reps = group.min_coset_reps(j, Side::Left);
                let gens: Vec<GroupElement> = j.iter().map(|s| group.generator(s)).collect();
                let normalizer = right_reps
                    .iter()
                    .copied()
                    .filter(|&w| gens.iter().all(|&s| group.in_parabolic(group.conj(s, w), j)))
                    .collect();
                let coxeter_element = group.coxeter_element(j);
                SubsetData {
                    class_size: group.conjugacy_class_size(coxeter_element),
                    elements,
                    right_reps,
                    left_reps,
                    normalizer,
                    coxeter_element,
                }
            })
            .collect();

        let mut classes: Vec<ParabolicClass> = Vec::new();
        let mut class_of = vec![usize::MAX; 1 << rank];
        for j in SubsetMask::all(rank) {
            let order_j = subsets[j.index()].elements.len();
            let existing = classes.iter().position(|c| {
                let rep = c.members[0];
                subsets[rep.index()].elements.len() == order_j && find_conjugator(group, j, rep).is_some()
            });
            match existing {
                Some(c) => classes[c].members.push(j),
                None => classes.push(ParabolicClass {
                    representative: j,
                    members: vec![j],
                }),
            }
        }
        for class in &mut classes {
            class.representative = *class
                .members
                .iter()
                .min_by(|a, b| bergeron_cmp(**a, **b))
                .expect("classes are nonempty");
        }
        // Rank first, so that a_{K_i K_j K_j} = 0 for i < j; then ≻-descending.
        classes.sort_by(|a, b| {
            a.representative
                .len()
                .cmp(&b.representative.len())
                .then_with(|| bergeron_cmp(b.representative, a.representative))
        });
        for (c, class) in classes.iter().enumerate() {
            for m in &class.members {
                class_of[m.index()] = c;
            }
        }

        let mut conjugators = BTreeMap::new();
        for class in &classes {
            for &kp in &class.members {
                for &k in &class.members {
                    let c = if kp == k {
                        group.identity()
                    } else {
                        Self::minimal_conjugator(group, &subsets, kp, k, tie_break)
                    };
                    conjugators.insert((kp, k), c);
                }
            }
        }

        let closure_counts = Self::closure_census(group, &subsets, &classes);
        ParabolicAtlas {
            rank,
            order: group.order(),
            subsets,
            classes,
            class_of,
            conjugators,
            closure_counts,
            tie_break,
        }
    }

    /// Number of elements whose parabolic closure is conjugate to W_{K_i}, per
    /// class. The closure of w has the least rank among the parabolics that
    /// contain a conjugate of w, and that class is unique at that rank.
    fn closure_census(group: &CoxeterSystem, subsets: &[SubsetData], classes: &[ParabolicClass]) -> Vec<usize> {
        let (label, num) = group.conjugacy_classes();
        let mut class_sizes = vec![0usize; num];
        for &l in &label {
            class_sizes[l as usize] += 1;
        }
        let mut owner: Vec<Option<usize>> = vec![None; num];
        let mut counts = vec![0usize; classes.len()];
        for (i, class) in classes.iter().enumerate() {
            for &w in &subsets[class.representative.index()].elements {
                let l = label[w.index()] as usize;
                if owner[l].is_none() {
                    owner[l] = Some(i);
                    counts[i] += class_sizes[l];
                }
            }
        }
        counts
    }

    /// Minimal-length element of the double coset (N_{K'} W_{K'}) c (N_K W_K)
    /// for any c with c⁻¹ W_{K'} c = W_K.
    fn minimal_conjugator(
        group: &CoxeterSystem,
        subsets: &[SubsetData],
        kp: SubsetMask,
        k: SubsetMask,
        tie_break: TieBreak,
    ) -> GroupElement {
        let gens: Vec<GroupElement> = kp.iter().map(|s| group.generator(s)).collect();
        let seed = group
            .elements()
            .find(|&w| gens.iter().all(|&s| group.in_parabolic(group.conj(s, w), k)))
            .expect("members of one class are conjugate");
        let stabilizer = |j: SubsetMask| -> Vec<GroupElement> {
            let data = &subsets[j.index()];
            let mut out: Vec<GroupElement> = data
                .normalizer
                .iter()
                .flat_map(|&n| data.elements.iter().map(move |&x| (n, x)))
                .map(|(n, x)| group.mul(n, x))
                .collect();
            out.sort();
            out.dedup();
            out
        };
        let candidates = group.min_rep_unchecked(seed, &stabilizer(kp), &stabilizer(k));
        let pick = |a: &&GroupElement, b: &&GroupElement| group.perm(**a).cmp(group.perm(**b));
        let chosen = match tie_break {
            TieBreak::LexSmallest => candidates.iter().min_by(pick),
            TieBreak::LexLargest => candidates.iter().max_by(pick),
        };
        *chosen.expect("double cosets are nonempty")
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn group_order(&self) -> usize {
        self.order
    }

    pub fn tie_break(&self) -> TieBreak {
        self.tie_break
    }

    pub fn subset(&self, j: SubsetMask) -> &SubsetData {
        &self.subsets[j.index()]
    }

    pub fn parabolic_order(&self, j: SubsetMask) -> usize {
        self.subset(j).elements.len()
    }

    pub fn normalizer(&self, j: SubsetMask) -> &[GroupElement] {
        &self.subset(j).normalizer
    }

    pub fn normalizer_order(&self, j: SubsetMask) -> usize {
        self.subset(j).normalizer.len()
    }

    pub fn coxeter_class_size(&self, j: SubsetMask) -> usize {
        self.subset(j).class_size
    }

    /// Parabolic conjugacy classes, ordered by rank and then ≻-descending by
    /// representative.
    pub fn classes(&self) -> &[ParabolicClass] {
        &self.classes
    }

    /// Elements of W whose parabolic closure lies in the i-th class.
    pub fn closure_type_counts(&self) -> &[usize] {
        &self.closure_counts
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of(&self, j: SubsetMask) -> usize {
        self.class_of[j.index()]
    }

    pub fn representatives(&self) -> Vec<SubsetMask> {
        self.classes.iter().map(|c| c.representative).collect()
    }

    pub fn are_conjugate(&self, j: SubsetMask, k: SubsetMask) -> bool {
        self.class_of(j) == self.class_of(k)
    }

    /// The fixed conjugator c_{K'K}, with c⁻¹ W_{K'} c = W_K.
    pub fn conjugator(&self, kp: SubsetMask, k: SubsetMask) -> Result<GroupElement> {
        self.conjugators
            .get(&(kp, k))
            .copied()
            .ok_or(Error::NotConjugate { from: kp, to: k })
    }
}
