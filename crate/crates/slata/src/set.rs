//! Fixed-width index sets over carriers of at most [`MAX_UNIVERSE`] elements.

use core::cmp::Ordering;
use core::fmt;

/// Hard upper bound on carrier size: index sets live in one `u32` mask.
pub const MAX_UNIVERSE: usize = 32;

/// A set of indices below [`MAX_UNIVERSE`], stored as a bit mask.
///
/// The derived order is canonical everywhere in this crate: sets compare by
/// cardinality first, then lexicographically as ascending index sequences.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct SmallSet(u32);

impl SmallSet {
    pub const EMPTY: SmallSet = SmallSet(0);

    /// The full set `{0, .., n-1}`.
    pub fn full(n: usize) -> SmallSet {
        debug_assert!(n <= MAX_UNIVERSE);
        if n == 0 {
            SmallSet(0)
        } else {
            SmallSet(u32::MAX >> (32 - n))
        }
    }

    pub fn singleton(i: usize) -> SmallSet {
        debug_assert!(i < MAX_UNIVERSE);
        SmallSet(1 << i)
    }

    pub fn from_bits(bits: u32) -> SmallSet {
        SmallSet(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_UNIVERSE && self.0 & (1 << i) != 0
    }

    pub fn insert(&mut self, i: usize) {
        debug_assert!(i < MAX_UNIVERSE);
        self.0 |= 1 << i;
    }

    pub fn remove(&mut self, i: usize) {
        debug_assert!(i < MAX_UNIVERSE);
        self.0 &= !(1 << i);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: SmallSet) -> SmallSet {
        SmallSet(self.0 | other.0)
    }

    pub fn inter(self, other: SmallSet) -> SmallSet {
        SmallSet(self.0 & other.0)
    }

    pub fn diff(self, other: SmallSet) -> SmallSet {
        SmallSet(self.0 & !other.0)
    }

    /// Complement relative to the universe `{0, .., n-1}`.
    pub fn complement_in(self, n: usize) -> SmallSet {
        SmallSet::full(n).diff(self)
    }

    pub fn is_subset(self, other: SmallSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: SmallSet) -> bool {
        self.0 & other.0 != 0
    }

    /// Ascending iterator over the member indices.
    pub fn iter(self) -> SmallSetIter {
        SmallSetIter(self.0)
    }

    /// Smallest member, if any.
    pub fn min(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }
}

impl FromIterator<usize> for SmallSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> SmallSet {
        let mut s = SmallSet::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl Ord for SmallSet {
    fn cmp(&self, other: &SmallSet) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for SmallSet {
    fn partial_cmp(&self, other: &SmallSet) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub struct SmallSetIter(u32);

impl Iterator for SmallSetIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let i = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(i)
        }
    }
}

impl fmt::Debug for SmallSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for SmallSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        let mut first = true;
        for i in self.iter() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
            first = false;
        }
        write!(f, "}}")
    }
}
