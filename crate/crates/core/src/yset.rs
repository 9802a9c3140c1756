//! Fixed-capacity bit sets over the Y part of a bipartite host.
//!
//! A [`YSet`] holds a subset of the Y-vertices `0..n` for any `n` up to
//! [`Y_CAPACITY`]. All neighborhood arithmetic in this crate (intersection
//! counts, subset unions, complements within `[0, n)`) runs on these.

/// Number of 64-bit words backing a [`YSet`].
const WORDS: usize = 8;

/// Hard capacity of a [`YSet`]: Y-indices must lie in `0..512`.
pub const Y_CAPACITY: usize = WORDS * 64;

/// A subset of `{0, 1, ..., Y_CAPACITY - 1}` stored as a flat bit vector.
///
/// The set itself does not know the host's `n`; operations that depend on it
/// (complement, uncovered counts) take `n` as an argument. Callers keep the
/// invariant that no bit at or above their `n` is ever set.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct YSet {
    words: [u64; WORDS],
}

impl YSet {
    /// The empty set.
    pub const fn empty() -> Self {
        YSet { words: [0; WORDS] }
    }

    /// The full set `{0, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= Y_CAPACITY);
        let mut s = YSet::empty();
        for i in 0..WORDS {
            let lo = i * 64;
            if n >= lo + 64 {
                s.words[i] = u64::MAX;
            } else if n > lo {
                s.words[i] = (1u64 << (n - lo)) - 1;
            }
        }
        s
    }

    /// Builds a set from an iterator of indices. Indices must be `< Y_CAPACITY`.
    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        let mut s = YSet::empty();
        for i in indices {
            s.insert(i);
        }
        s
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        debug_assert!(i < Y_CAPACITY);
        self.words[i / 64] |= 1u64 << (i % 64);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        debug_assert!(i < Y_CAPACITY);
        self.words[i / 64] &= !(1u64 << (i % 64));
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        debug_assert!(i < Y_CAPACITY);
        (self.words[i / 64] >> (i % 64)) & 1 != 0
    }

    /// Number of elements. Exact.
    #[inline]
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn union(&self, other: &YSet) -> YSet {
        let mut out = *self;
        for i in 0..WORDS {
            out.words[i] |= other.words[i];
        }
        out
    }

    #[inline]
    pub fn union_with(&mut self, other: &YSet) {
        for i in 0..WORDS {
            self.words[i] |= other.words[i];
        }
    }

    #[inline]
    pub fn intersection(&self, other: &YSet) -> YSet {
        let mut out = *self;
        for i in 0..WORDS {
            out.words[i] &= other.words[i];
        }
        out
    }

    /// `|self ∩ other|` without materializing the intersection.
    #[inline]
    pub fn intersection_len(&self, other: &YSet) -> usize {
        let mut c = 0usize;
        for i in 0..WORDS {
            c += (self.words[i] & other.words[i]).count_ones() as usize;
        }
        c
    }

    /// `{0, ..., n-1} \ self`. Exact within the host's Y part.
    pub fn complement_within(&self, n: usize) -> YSet {
        let mut out = YSet::full(n);
        for i in 0..WORDS {
            out.words[i] &= !self.words[i];
        }
        out
    }

    /// Largest element plus one, or 0 for the empty set.
    pub fn max_bound(&self) -> usize {
        for i in (0..WORDS).rev() {
            if self.words[i] != 0 {
                return i * 64 + 64 - self.words[i].leading_zeros() as usize;
            }
        }
        0
    }

    /// The `count` smallest elements, ascending. Panics if the set is smaller.
    pub fn smallest(&self, count: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(count);
        for i in self.iter() {
            if out.len() == count {
                break;
            }
            out.push(i);
        }
        assert!(out.len() == count, "set has fewer than {count} elements");
        out
    }

    /// Iterates set bits in ascending order.
    pub fn iter(&self) -> YSetIter<'_> {
        YSetIter {
            set: self,
            word: 0,
            bits: self.words[0],
        }
    }

    /// Collects all elements, ascending.
    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

pub struct YSetIter<'a> {
    set: &'a YSet,
    word: usize,
    bits: u64,
}

impl Iterator for YSetIter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.bits == 0 {
            self.word += 1;
            if self.word >= WORDS {
                return None;
            }
            self.bits = self.set.words[self.word];
        }
        let b = self.bits.trailing_zeros() as usize;
        self.bits &= self.bits - 1;
        Some(self.word * 64 + b)
    }
}

impl std::fmt::Debug for YSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for YSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        YSet::from_indices(iter)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_and_complement_are_exact() {
        for n in [0, 1, 63, 64, 65, 127, 128, 200, 511, 512] {
            let f = YSet::full(n);
            assert_eq!(f.len(), n);
            let c = f.complement_within(n);
            assert!(c.is_empty());
        }
        let s = YSet::from_indices([0, 3, 70]);
        let c = s.complement_within(71);
        assert_eq!(c.len(), 71 - 3);
        assert!(!c.contains(0) && !c.contains(3) && !c.contains(70));
        assert!(c.contains(1) && c.contains(69));
    }

    #[test]
    fn iter_visits_bits_ascending() {
        let s = YSet::from_indices([5, 1, 64, 63, 500]);
        assert_eq!(s.to_vec(), vec![1, 5, 63, 64, 500]);
        assert_eq!(s.smallest(3), vec![1, 5, 63]);
        assert_eq!(s.max_bound(), 501);
        assert_eq!(YSet::empty().max_bound(), 0);
    }

    #[test]
    fn set_algebra_matches_naive_sets() {
        // Deterministic xorshift; avoids an external RNG dependency.
        let mut state = 0x2545f4914f6cdd1du64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..200 {
            let n = 1 + (next() % 512) as usize;
            let mut a = YSet::empty();
            let mut b = YSet::empty();
            let mut va = std::collections::BTreeSet::new();
            let mut vb = std::collections::BTreeSet::new();
            for _ in 0..(next() % 64) {
                let i = (next() as usize) % n;
                a.insert(i);
                va.insert(i);
            }
            for _ in 0..(next() % 64) {
                let i = (next() as usize) % n;
                b.insert(i);
                vb.insert(i);
            }
            assert_eq!(a.len(), va.len());
            assert_eq!(
                a.union(&b).to_vec(),
                va.union(&vb).cloned().collect::<Vec<_>>()
            );
            assert_eq!(
                a.intersection(&b).to_vec(),
                va.intersection(&vb).cloned().collect::<Vec<_>>()
            );
            assert_eq!(a.intersection_len(&b), va.intersection(&vb).count());
            assert_eq!(a.complement_within(n).len(), n - va.len());
        }
    }
}
