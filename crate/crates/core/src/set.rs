use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Not, Sub};

use serde::{Deserialize, Serialize};

/// Largest graph order representable by [`VertexSet`].
pub const MAX_ORDER: usize = 128;

/// A set of vertex indices below [`MAX_ORDER`], stored as a bitmask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u128);

impl VertexSet {
    pub const fn empty() -> Self {
        VertexSet(0)
    }

    pub const fn singleton(v: usize) -> Self {
        VertexSet(1 << v)
    }

    /// `{0, .., n-1}`.
    pub const fn full(n: usize) -> Self {
        if n >= MAX_ORDER {
            VertexSet(u128::MAX)
        } else {
            VertexSet((1u128 << n) - 1)
        }
    }

    pub const fn from_bits(bits: u128) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u128 {
        self.0
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << v);
    }

    pub const fn contains(self, v: usize) -> bool {
        v < MAX_ORDER && self.0 >> v & 1 == 1
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn intersects(self, other: VertexSet) -> bool {
        self.0 & other.0 != 0
    }

    /// Smallest member.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Largest member.
    pub fn last(self) -> Option<usize> {
        (self.0 != 0).then(|| 127 - self.0.leading_zeros() as usize)
    }

    /// Members in ascending order.
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

pub struct Iter(u128);

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::empty();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 | rhs.0)
    }
}

impl BitOrAssign for VertexSet {
    fn bitor_assign(&mut self, rhs: VertexSet) {
        self.0 |= rhs.0;
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & rhs.0)
    }
}

impl BitAndAssign for VertexSet {
    fn bitand_assign(&mut self, rhs: VertexSet) {
        self.0 &= rhs.0;
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & !rhs.0)
    }
}

/// Complement within the full 128-bit universe; intersect with
/// [`VertexSet::full`] to restrict to a graph.
impl Not for VertexSet {
    type Output = VertexSet;
    fn not(self) -> VertexSet {
        VertexSet(!self.0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let members = Vec::<usize>::deserialize(deserializer)?;
        if let Some(&v) = members.iter().find(|&&v| v >= MAX_ORDER) {
            return Err(serde::de::Error::custom(format!(
                "vertex {v} exceeds the maximum order {MAX_ORDER}"
            )));
        }
        Ok(members.into_iter().collect())
    }
}

/// All `k`-subsets of `universe`, in lexicographic order of their sorted
/// member lists.
pub fn subsets_of_size(universe: VertexSet, k: usize) -> Subsets {
    let members = universe.to_vec();
    let idx = if k <= members.len() {
        Some((0..k).collect())
    } else {
        None
    };
    Subsets { members, idx }
}

pub struct Subsets {
    members: Vec<usize>,
    idx: Option<Vec<usize>>,
}

impl Iterator for Subsets {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        let idx = self.idx.as_mut()?;
        let out: VertexSet = idx.iter().map(|&i| self.members[i]).collect();
        let m = self.members.len();
        let k = idx.len();
        // advance to the next combination
        let mut i = k;
        loop {
            if i == 0 {
                self.idx = None;
                break;
            }
            i -= 1;
            if idx[i] < m - k + i {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

/// Every subset of `universe`, smallest first, lexicographic within a size.
pub fn subsets_by_size(universe: VertexSet) -> impl Iterator<Item = VertexSet> {
    (0..=universe.len()).flat_map(move |k| subsets_of_size(universe, k))
}
