use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

/// A subset J of the generating set S, as a bitmask (bit i is generator s_{i+1}).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct SubsetMask(pub u32);

impl SubsetMask {
    pub const EMPTY: SubsetMask = SubsetMask(0);

    pub fn full(rank: usize) -> Self {
        SubsetMask(((1u64 << rank) - 1) as u32)
    }

    pub fn singleton(i: usize) -> Self {
        SubsetMask(1 << i)
    }

    /// Builds from zero-based generator indices.
    pub fn from_indices(indices: impl IntoIterator<Item = usize>) -> Self {
        SubsetMask(indices.into_iter().fold(0, |acc, i| acc | (1 << i)))
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn is_subset_of(self, other: SubsetMask) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: SubsetMask) -> Self {
        SubsetMask(self.0 | other.0)
    }

    pub fn intersection(self, other: SubsetMask) -> Self {
        SubsetMask(self.0 & other.0)
    }

    pub fn difference(self, other: SubsetMask) -> Self {
        SubsetMask(self.0 & !other.0)
    }

    pub fn complement(self, rank: usize) -> Self {
        SubsetMask::full(rank).difference(self)
    }

    /// Zero-based generator indices in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..32).filter(move |&i| bits >> i & 1 == 1)
    }

    /// All subsets of `self`, ascending as bitmasks.
    pub fn subsets(self) -> impl Iterator<Item = SubsetMask> {
        let full = self.0;
        let mut next = Some(0u32);
        core::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full {
                None
            } else {
                Some((cur.wrapping_sub(full)) & full)
            };
            Some(SubsetMask(cur))
        })
    }

    /// Every subset of an `rank`-element set, ascending as bitmasks.
    pub fn all(rank: usize) -> impl Iterator<Item = SubsetMask> {
        (0..1u32 << rank).map(SubsetMask)
    }

    /// Comma-joined generator names ("s1,s3"); the empty set is "".
    pub fn name(self) -> String {
        let mut out = String::new();
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                out.push(',');
            }
            out.push('s');
            push_number(&mut out, i + 1);
        }
        out
    }

    /// Inverse of [`SubsetMask::name`]; `None` on unknown or repeated names.
    pub fn parse_name(name: &str, rank: usize) -> Option<Self> {
        let name = name.trim();
        if name.is_empty() {
            return Some(SubsetMask::EMPTY);
        }
        let mut mask = 0u32;
        for part in name.split(',') {
            let idx: usize = part.trim().strip_prefix('s')?.parse().ok()?;
            if idx == 0 || idx > rank || mask >> (idx - 1) & 1 == 1 {
                return None;
            }
            mask |= 1 << (idx - 1);
        }
        Some(SubsetMask(mask))
    }
}

fn push_number(out: &mut String, n: usize) {
    use core::fmt::Write;
    let _ = write!(out, "{n}");
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.name())
    }
}

impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.name())
    }
}

/// The Bergeron total order: `Greater` means `j` ≻ `k`.
///
/// With min ∅ taken larger than every index, J ≻ K when min J > min K; on a tie
/// the smallest element is removed from both and the comparison recurses. The
/// empty set is the maximum, and L ⊆ K implies L ≽ K.
pub fn bergeron_cmp(j: SubsetMask, k: SubsetMask) -> Ordering {
    let (mut a, mut b) = (j.0, k.0);
    loop {
        if a == b {
            return Ordering::Equal;
        }
        // trailing_zeros of 0 is 32, beyond any generator index
        let (ma, mb) = (a.trailing_zeros(), b.trailing_zeros());
        if ma != mb {
            return ma.cmp(&mb);
        }
        a &= a - 1;
        b &= b - 1;
    }
}

/// All subsets of an `rank`-element set sorted ≻-descending (∅ first).
pub fn bergeron_descending(rank: usize) -> Vec<SubsetMask> {
    let mut all: Vec<SubsetMask> = SubsetMask::all(rank).collect();
    all.sort_by(|a, b| bergeron_cmp(*b, *a));
    all
}
