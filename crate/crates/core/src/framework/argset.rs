use core::fmt;
use core::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Not, Sub};

/// Most arguments any framework can hold.
pub const MAX_ARGUMENTS: usize = 128;

/// A set of argument positions within one framework.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct ArgSet(u128);

impl ArgSet {
    pub const EMPTY: ArgSet = ArgSet(0);

    pub fn from_bits(bits: u128) -> Self {
        ArgSet(bits)
    }

    pub fn bits(self) -> u128 {
        self.0
    }

    pub fn singleton(pos: usize) -> Self {
        ArgSet(1 << pos)
    }

    /// Positions `0..n`.
    pub fn full(n: usize) -> Self {
        if n >= MAX_ARGUMENTS {
            ArgSet(u128::MAX)
        } else {
            ArgSet((1u128 << n) - 1)
        }
    }

    pub fn contains(self, pos: usize) -> bool {
        pos < MAX_ARGUMENTS && self.0 >> pos & 1 == 1
    }

    pub fn insert(&mut self, pos: usize) {
        self.0 |= 1 << pos;
    }

    pub fn remove(&mut self, pos: usize) {
        self.0 &= !(1 << pos);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: ArgSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: ArgSet) -> bool {
        self.0 & other.0 != 0
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }
}

impl FromIterator<usize> for ArgSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = ArgSet::EMPTY;
        for p in iter {
            s.insert(p);
        }
        s
    }
}

/// Ascending positions of an [`ArgSet`].
#[derive(Debug, Clone)]
pub struct Iter(u128);

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let p = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(p)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

impl IntoIterator for ArgSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl BitOr for ArgSet {
    type Output = ArgSet;
    fn bitor(self, rhs: ArgSet) -> ArgSet {
        ArgSet(self.0 | rhs.0)
    }
}

impl BitOrAssign for ArgSet {
    fn bitor_assign(&mut self, rhs: ArgSet) {
        self.0 |= rhs.0;
    }
}

impl BitAnd for ArgSet {
    type Output = ArgSet;
    fn bitand(self, rhs: ArgSet) -> ArgSet {
        ArgSet(self.0 & rhs.0)
    }
}

impl BitAndAssign for ArgSet {
    fn bitand_assign(&mut self, rhs: ArgSet) {
        self.0 &= rhs.0;
    }
}

impl Sub for ArgSet {
    type Output = ArgSet;
    fn sub(self, rhs: ArgSet) -> ArgSet {
        ArgSet(self.0 & !rhs.0)
    }
}

impl Not for ArgSet {
    type Output = ArgSet;
    fn not(self) -> ArgSet {
        ArgSet(!self.0)
    }
}

impl fmt::Debug for ArgSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
