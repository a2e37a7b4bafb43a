use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::hash::BuildHasher;

use hashbrown::{DefaultHashBuilder, HashTable};

use super::roots::build_root_system;
use super::{CoxeterSpec, SubsetMask};
use crate::error::{Error, Result};

/// Default cap on the number of enumerated group elements.
pub const DEFAULT_ELEMENT_CAP: usize = 2_000_000;

/// An element of W, as an index into the enumeration of its [`CoxeterSystem`].
/// Index 0 is the identity.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct GroupElement(pub u32);

impl GroupElement {
    pub const IDENTITY: GroupElement = GroupElement(0);

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// W^J: minimal in the left coset w W_J.
    Right,
    /// ^J W: minimal in the right coset W_J w.
    Left,
}

/// A finite Coxeter group, fully enumerated.
///
/// Elements are numbered in breadth-first order of the right Cayley graph, so
/// lengths are non-decreasing in the index and every stored word is reduced.
#[derive(Clone, Debug)]
pub struct CoxeterSystem {
    spec: CoxeterSpec,
    rank: usize,
    order: usize,
    num_roots: usize,
    root_positive: Vec<bool>,
    perms: Vec<u16>,
    right_mul: Vec<u32>,
    left_mul: Vec<u32>,
    inverse: Vec<u32>,
    length: Vec<u32>,
    parent: Vec<u32>,
    last_gen: Vec<u8>,
    des_r: Vec<SubsetMask>,
    des_l: Vec<SubsetMask>,
    support: Vec<SubsetMask>,
    longest: u32,
}

impl CoxeterSystem {
    pub fn build(spec: &CoxeterSpec) -> Result<Self> {
        Self::build_with_cap(spec, DEFAULT_ELEMENT_CAP)
    }

    /// Builds the root system, then enumerates W by breadth-first search over
    /// right multiplication with root permutations as canonical keys.
    pub fn build_with_cap(spec: &CoxeterSpec, element_cap: usize) -> Result<Self> {
        let roots = build_root_system(spec)?;
        let rank = spec.rank();
        let nr = roots.positive.len();
        let hasher = DefaultHashBuilder::default();
        let mut table: HashTable<u32> = HashTable::new();
        let mut perms: Vec<u16> = (0..nr as u16).collect();
        let mut right_mul: Vec<u32> = Vec::new();
        table.insert_unique(hasher.hash_one(&perms[..nr]), 0, |&j| {
            hasher.hash_one(&perms[j as usize * nr..(j as usize + 1) * nr])
        });

        let mut scratch = vec![0u16; nr];
        let mut count = 1usize;
        let mut cur = 0usize;
        while cur < count {
            for gen in &roots.generator_perms {
                // (w s)(r) = w(s(r))
                let base = cur * nr;
                for (r, slot) in scratch.iter_mut().enumerate() {
                    *slot = perms[base + gen[r] as usize];
                }
                let h = hasher.hash_one(&scratch[..]);
                let found = table
                    .find(h, |&j| perms[j as usize * nr..(j as usize + 1) * nr] == scratch[..])
                    .copied();
                let idx = match found {
                    Some(j) => j,
                    None => {
                        if count >= element_cap {
                            return Err(Error::GroupTooLarge { cap: element_cap });
                        }
                        perms.extend_from_slice(&scratch);
                        let j = count as u32;
                        table.insert_unique(h, j, |&k| {
                            hasher.hash_one(&perms[k as usize * nr..(k as usize + 1) * nr])
                        });
                        count += 1;
                        j
                    }
                };
                right_mul.push(idx);
            }
            cur += 1;
        }
        debug_assert_eq!(right_mul.len(), count * rank);
        Self::finish(spec.clone(), roots.positive, perms, right_mul)
    }

    /// Rebuilds a system from stored tables (root signs, root permutations
    /// and the right-multiplication table), validating them.
    pub fn from_parts(
        spec: CoxeterSpec,
        root_positive: Vec<bool>,
        perms: Vec<u16>,
        right_mul: Vec<u32>,
    ) -> Result<Self> {
        let nr = root_positive.len();
        let rank = spec.rank();
        let corrupt = |what: &str| Error::InvalidSpec(alloc::format!("stored group tables are inconsistent: {what}"));
        if nr == 0 || perms.len() % nr != 0 || right_mul.len() != perms.len() / nr * rank {
            return Err(corrupt("table sizes"));
        }
        let order = perms.len() / nr;
        if right_mul.iter().any(|&x| x as usize >= order) || perms.iter().any(|&r| r as usize >= nr) {
            return Err(corrupt("index out of range"));
        }
        if perms[..nr].iter().enumerate().any(|(r, &x)| r != x as usize) {
            return Err(corrupt("element 0 is not the identity"));
        }
        for s in 0..rank {
            let g = right_mul[s] as usize;
            for w in 0..order {
                let ws = right_mul[w * rank + s] as usize;
                let ok = (0..nr).all(|r| perms[ws * nr + r] == perms[w * nr + perms[g * nr + r] as usize]);
                if !ok {
                    return Err(corrupt("multiplication table disagrees with root permutations"));
                }
            }
        }
        Self::finish(spec, root_positive, perms, right_mul)
    }

    fn finish(spec: CoxeterSpec, root_positive: Vec<bool>, perms: Vec<u16>, right_mul: Vec<u32>) -> Result<Self> {
        let rank = spec.rank();
        let nr = root_positive.len();
        let order = perms.len() / nr;
        let bad = |what: &str| Error::InvalidSpec(alloc::format!("group tables are inconsistent: {what}"));

        // Breadth-first discovery must reproduce the index order.
        let mut parent = vec![u32::MAX; order];
        let mut last_gen = vec![0u8; order];
        let mut length = vec![0u32; order];
        let mut seen = vec![false; order];
        seen[0] = true;
        parent[0] = 0;
        let mut queue = VecDeque::from([0usize]);
        let mut next_index = 1usize;
        while let Some(w) = queue.pop_front() {
            for s in 0..rank {
                let ws = right_mul[w * rank + s] as usize;
                if !seen[ws] {
                    if ws != next_index {
                        return Err(bad("elements are not in breadth-first order"));
                    }
                    seen[ws] = true;
                    parent[ws] = w as u32;
                    last_gen[ws] = s as u8;
                    length[ws] = length[w] + 1;
                    next_index += 1;
                    queue.push_back(ws);
                }
            }
        }
        if next_index != order {
            return Err(bad("generators do not reach every element"));
        }
        for w in 0..order {
            for s in 0..rank {
                let ws = right_mul[w * rank + s] as usize;
                if right_mul[ws * rank + s] as usize != w || length[ws].abs_diff(length[w]) != 1 {
                    return Err(bad("generator is not an involution changing length by one"));
                }
            }
        }

        let mut inverse = vec![0u32; order];
        for (w, slot) in inverse.iter_mut().enumerate() {
            let mut x = 0usize;
            let mut cur = w;
            while cur != 0 {
                x = right_mul[x * rank + last_gen[cur] as usize] as usize;
                cur = parent[cur] as usize;
            }
            *slot = x as u32;
        }
        let mut left_mul = vec![0u32; order * rank];
        for w in 0..order {
            let wi = inverse[w] as usize;
            for s in 0..rank {
                left_mul[w * rank + s] = inverse[right_mul[wi * rank + s] as usize];
            }
        }
        let des_r: Vec<SubsetMask> = (0..order)
            .map(|w| {
                SubsetMask::from_indices((0..rank).filter(|&s| length[right_mul[w * rank + s] as usize] < length[w]))
            })
            .collect();
        let des_l: Vec<SubsetMask> = (0..order).map(|w| des_r[inverse[w] as usize]).collect();
        let mut support = vec![SubsetMask::EMPTY; order];
        for w in 1..order {
            support[w] = support[parent[w] as usize].union(SubsetMask::singleton(last_gen[w] as usize));
        }
        let max_len = *length.iter().max().expect("nonempty");
        let longest: Vec<usize> = (0..order).filter(|&w| length[w] == max_len).collect();
        if longest.len() != 1 {
            return Err(bad("longest element is not unique"));
        }

        Ok(CoxeterSystem {
            spec,
            rank,
            order,
            num_roots: nr,
            root_positive,
            perms,
            right_mul,
            left_mul,
            inverse,
            length,
            parent,
            last_gen,
            des_r,
            des_l,
            support,
            longest: longest[0] as u32,
        })
    }

    pub fn spec(&self) -> &CoxeterSpec {
        &self.spec
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn full_set(&self) -> SubsetMask {
        SubsetMask::full(self.rank)
    }

    pub fn elements(&self) -> impl Iterator<Item = GroupElement> {
        (0..self.order as u32).map(GroupElement)
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement::IDENTITY
    }

    pub fn generator(&self, s: usize) -> GroupElement {
        GroupElement(self.right_mul[s])
    }

    pub fn longest_element(&self) -> GroupElement {
        GroupElement(self.longest)
    }

    pub fn num_roots(&self) -> usize {
        self.num_roots
    }

    pub fn root_positive(&self) -> &[bool] {
        &self.root_positive
    }

    /// Root permutation of `w`: entry r is the index of w(root r).
    pub fn perm(&self, w: GroupElement) -> &[u16] {
        let nr = self.num_roots;
        &self.perms[w.index() * nr..(w.index() + 1) * nr]
    }

    pub fn all_perms(&self) -> &[u16] {
        &self.perms
    }

    pub fn right_mul_table(&self) -> &[u32] {
        &self.right_mul
    }

    pub fn length(&self, w: GroupElement) -> u32 {
        self.length[w.index()]
    }

    /// Number of positive roots sent to negative roots by `w`.
    pub fn inversion_count(&self, w: GroupElement) -> u32 {
        self.perm(w)
            .iter()
            .enumerate()
            .filter(|&(r, &img)| self.root_positive[r] && !self.root_positive[img as usize])
            .count() as u32
    }

    /// A reduced word for `w` as zero-based generator indices.
    pub fn word(&self, w: GroupElement) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.length(w) as usize);
        let mut cur = w.index();
        while cur != 0 {
            out.push(self.last_gen[cur] as usize);
            cur = self.parent[cur] as usize;
        }
        out.reverse();
        out
    }

    /// Multiplies out a word of zero-based generator indices.
    pub fn from_word(&self, word: &[usize]) -> GroupElement {
        word.iter().fold(self.identity(), |w, &s| self.right(w, s))
    }

    /// w s
    pub fn right(&self, w: GroupElement, s: usize) -> GroupElement {
        GroupElement(self.right_mul[w.index() * self.rank + s])
    }

    /// s w
    pub fn left(&self, s: usize, w: GroupElement) -> GroupElement {
        GroupElement(self.left_mul[w.index() * self.rank + s])
    }

    pub fn mul(&self, a: GroupElement, b: GroupElement) -> GroupElement {
        // a = p s  =>  a b = p (s b)
        let mut x = b;
        let mut cur = a.index();
        while cur != 0 {
            x = self.left(self.last_gen[cur] as usize, x);
            cur = self.parent[cur] as usize;
        }
        x
    }

    pub fn inv(&self, a: GroupElement) -> GroupElement {
        GroupElement(self.inverse[a.index()])
    }

    /// w⁻¹ a w
    pub fn conj(&self, a: GroupElement, w: GroupElement) -> GroupElement {
        self.mul(self.mul(self.inv(w), a), w)
    }

    /// (DES_L(w), DES_R(w))
    pub fn descent_sets(&self, w: GroupElement) -> (SubsetMask, SubsetMask) {
        (self.des_l[w.index()], self.des_r[w.index()])
    }

    pub fn right_descents(&self, w: GroupElement) -> SubsetMask {
        self.des_r[w.index()]
    }

    pub fn left_descents(&self, w: GroupElement) -> SubsetMask {
        self.des_l[w.index()]
    }

    /// Generators occurring in any reduced word of `w`.
    pub fn support(&self, w: GroupElement) -> SubsetMask {
        self.support[w.index()]
    }

    pub fn in_parabolic(&self, w: GroupElement, j: SubsetMask) -> bool {
        self.support(w).is_subset_of(j)
    }

    /// Elements of W_J in index order.
    pub fn parabolic_elements(&self, j: SubsetMask) -> Vec<GroupElement> {
        self.elements().filter(|&w| self.in_parabolic(w, j)).collect()
    }

    /// W^J (right) or ^JW (left), sorted by index.
    pub fn min_coset_reps(&self, j: SubsetMask, side: Side) -> Vec<GroupElement> {
        let des = match side {
            Side::Right => &self.des_r,
            Side::Left => &self.des_l,
        };
        self.elements()
            .filter(|w| des[w.index()].intersection(j).is_empty())
            .collect()
    }

    pub fn is_min_right_rep(&self, w: GroupElement, j: SubsetMask) -> bool {
        self.right_descents(w).intersection(j).is_empty()
    }

    pub fn is_min_left_rep(&self, w: GroupElement, j: SubsetMask) -> bool {
        self.left_descents(w).intersection(j).is_empty()
    }

    /// The unique element of minimal length in W_J w W_K.
    pub fn double_coset_rep(&self, w: GroupElement, j: SubsetMask, k: SubsetMask) -> GroupElement {
        let mut x = w;
        loop {
            let left = self.left_descents(x).intersection(j);
            if let Some(s) = left.iter().next() {
                x = self.left(s, x);
                continue;
            }
            let right = self.right_descents(x).intersection(k);
            if let Some(s) = right.iter().next() {
                x = self.right(x, s);
                continue;
            }
            return x;
        }
    }

    /// Whether `set` contains e and is closed under products.
    pub fn is_subgroup(&self, set: &[GroupElement]) -> bool {
        let mut member = vec![false; self.order];
        for &w in set {
            member[w.index()] = true;
        }
        member[0]
            && set
                .iter()
                .all(|&a| set.iter().all(|&b| member[self.mul(a, b).index()]))
    }

    /// All elements of minimal length in the double coset U w V, for arbitrary
    /// subgroups U and V, sorted by index.
    pub fn min_rep_general(&self, w: GroupElement, u: &[GroupElement], v: &[GroupElement]) -> Result<Vec<GroupElement>> {
        if !self.is_subgroup(u) || !self.is_subgroup(v) {
            return Err(Error::NotASubgroup);
        }
        Ok(self.min_rep_unchecked(w, u, v))
    }

    pub(crate) fn min_rep_unchecked(&self, w: GroupElement, u: &[GroupElement], v: &[GroupElement]) -> Vec<GroupElement> {
        let mut seen = vec![false; self.order];
        let mut best = u32::MAX;
        let mut found: Vec<GroupElement> = Vec::new();
        for &a in u {
            let aw = self.mul(a, w);
            for &b in v {
                let x = self.mul(aw, b);
                if core::mem::replace(&mut seen[x.index()], true) {
                    continue;
                }
                let l = self.length(x);
                if l < best {
                    best = l;
                    found.clear();
                }
                if l == best {
                    found.push(x);
                }
            }
        }
        found.sort();
        found
    }

    /// Product of the generators of J taken in the given order.
    pub fn product_of(&self, generators: impl IntoIterator<Item = usize>) -> GroupElement {
        generators.into_iter().fold(self.identity(), |w, s| self.right(w, s))
    }

    /// The Coxeter element c_J: generators of J multiplied in increasing index.
    pub fn coxeter_element(&self, j: SubsetMask) -> GroupElement {
        self.product_of(j.iter())
    }

    /// Size of the conjugacy class of `w`, by orbit search under conjugation by
    /// the generators.
    pub fn conjugacy_class_size(&self, w: GroupElement) -> usize {
        let mut seen = vec![false; self.order];
        seen[w.index()] = true;
        let mut stack = vec![w];
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for s in 0..self.rank {
                let y = self.left(s, self.right(x, s));
                if !seen[y.index()] {
                    seen[y.index()] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        count
    }

    /// Conjugacy class label of every element, with labels assigned in order
    /// of first appearance; returns the labels and the number of classes.
    pub fn conjugacy_classes(&self) -> (Vec<u32>, usize) {
        let mut label = vec![u32::MAX; self.order];
        let mut next = 0u32;
        let mut stack = Vec::new();
        for w in 0..self.order {
            if label[w] != u32::MAX {
                continue;
            }
            label[w] = next;
            stack.push(GroupElement(w as u32));
            while let Some(x) = stack.pop() {
                for s in 0..self.rank {
                    let y = self.left(s, self.right(x, s));
                    if label[y.index()] == u32::MAX {
                        label[y.index()] = next;
                        stack.push(y);
                    }
                }
            }
            next += 1;
        }
        (label, next as usize)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(name: &str) -> CoxeterSystem {
        CoxeterSystem::build(&CoxeterSpec::named(name).unwrap()).unwrap()
    }

    #[test]
    fn known_orders() {
        for (name, order) in [
            ("A1", 2),
            ("A2", 6),
            ("A3", 24),
            ("B2", 8),
            ("B3", 48),
            ("H3", 120),
            ("D4", 192),
            ("I2(5)", 10),
            ("I2(12)", 24),
            ("F4", 1152),
        ] {
            assert_eq!(group(name).order(), order, "{name}");
        }
    }

    #[test]
    fn a2_words_and_descents() {
        let w = group("A2");
        let (s1, s2) = (w.generator(0), w.generator(1));
        let s1s2 = w.mul(s1, s2);
        assert_eq!(w.descent_sets(s1s2).1, SubsetMask::singleton(1));
        assert_eq!(w.length(w.conj(s1, s2)), 3);
        assert_eq!(w.mul(w.identity(), s1s2), s1s2);
        assert_eq!(w.mul(s1s2, w.inv(s1s2)), w.identity());
        let w0 = w.longest_element();
        assert_eq!(w.descent_sets(w0), (w.full_set(), w.full_set()));
        assert_eq!(w.descent_sets(w.identity()), (SubsetMask::EMPTY, SubsetMask::EMPTY));
        // ^{s1}(s1 s2 s1)^{s1} = s2
        let j = SubsetMask::singleton(0);
        assert_eq!(w.double_coset_rep(w.from_word(&[0, 1, 0]), j, j), s2);
    }

    #[test]
    fn cap_is_enforced() {
        let spec = CoxeterSpec::named("F4").unwrap();
        assert_eq!(
            CoxeterSystem::build_with_cap(&spec, 100).unwrap_err(),
            Error::GroupTooLarge { cap: 100 }
        );
        // Affine A2 (all bonds 3 in a triangle) is infinite.
        let affine = CoxeterSpec::from_matrix(&[vec![1, 3, 3], vec![3, 1, 3], vec![3, 3, 1]]).unwrap();
        assert!(matches!(
            CoxeterSystem::build_with_cap(&affine, 10_000),
            Err(Error::GroupTooLarge { .. })
        ));
    }

    #[test]
    fn min_rep_general_trivial_cases() {
        let w = group("H3");
        let x = w.from_word(&[0, 1, 2]);
        let all: Vec<_> = w.elements().collect();
        assert_eq!(w.min_rep_general(x, &[w.identity()], &[w.identity()]).unwrap(), vec![x]);
        assert_eq!(w.min_rep_general(x, &all, &all).unwrap(), vec![w.identity()]);
        assert_eq!(
            w.min_rep_general(x, &[w.identity(), w.generator(0), w.generator(1)], &[w.identity()]),
            Err(Error::NotASubgroup)
        );
    }

    #[test]
    fn from_parts_round_trip() {
        let w = group("B3");
        let rebuilt = CoxeterSystem::from_parts(
            w.spec().clone(),
            w.root_positive().to_vec(),
            w.all_perms().to_vec(),
            w.right_mul_table().to_vec(),
        )
        .unwrap();
        for x in w.elements() {
            assert_eq!(w.word(x), rebuilt.word(x));
            assert_eq!(w.inv(x), rebuilt.inv(x));
        }
        let mut broken = w.right_mul_table().to_vec();
        broken.swap(3, 4);
        assert!(CoxeterSystem::from_parts(w.spec().clone(), w.root_positive().to_vec(), w.all_perms().to_vec(), broken).is_err());
    }
}
