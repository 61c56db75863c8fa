//! Dense bitset over the vectors of GF(2)^r, indexed by integer encoding.
//!
//! Unlike [`crate::PointSet`] this type may contain the zero vector; the
//! subspace searches rely on that.

use std::fmt;

const WITHIN_WORD_MASKS: [u64; 6] = [
    0x5555_5555_5555_5555,
    0x3333_3333_3333_3333,
    0x0F0F_0F0F_0F0F_0F0F,
    0x00FF_00FF_00FF_00FF,
    0x0000_FFFF_0000_FFFF,
    0x0000_0000_FFFF_FFFF,
];

#[derive(Clone, PartialEq, Eq, Hash)]
pub(crate) struct VecSet {
    words: Vec<u64>,
}

fn word_count(rank: usize) -> usize {
    (1usize << rank).div_ceil(64)
}

/// Image of a 64-bit block under the index permutation `i -> i ^ shift`.
#[inline]
fn xor_permute_word(mut w: u64, shift: u64) -> u64 {
    for (i, mask) in WITHIN_WORD_MASKS.iter().enumerate() {
        if shift >> i & 1 == 1 {
            let s = 1u32 << i;
            w = ((w & mask) << s) | ((w >> s) & mask);
        }
    }
    w
}

impl VecSet {
    pub fn empty(rank: usize) -> Self {
        VecSet {
            words: vec![0; word_count(rank)],
        }
    }

    /// Every vector of GF(2)^r, including zero.
    pub fn full(rank: usize) -> Self {
        let mut s = Self::empty(rank);
        let n = 1usize << rank;
        for (i, w) in s.words.iter_mut().enumerate() {
            let lo = i * 64;
            let hi = (lo + 64).min(n);
            *w = if hi - lo == 64 {
                u64::MAX
            } else {
                (1u64 << (hi - lo)) - 1
            };
        }
        s
    }

    #[inline]
    pub fn contains(&self, v: u64) -> bool {
        let v = v as usize;
        self.words[v >> 6] >> (v & 63) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: u64) {
        let v = v as usize;
        self.words[v >> 6] |= 1 << (v & 63);
    }

    #[inline]
    pub fn remove(&mut self, v: u64) {
        let v = v as usize;
        self.words[v >> 6] &= !(1 << (v & 63));
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn union_with(&mut self, other: &VecSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &VecSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &VecSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn is_subset(&self, other: &VecSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &VecSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn intersection_len(&self, other: &VecSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Writes `{ v ^ shift : v in self }` into `out`.
    pub fn translate_into(&self, shift: u64, out: &mut VecSet) {
        let word_shift = (shift >> 6) as usize;
        let bit_shift = shift & 63;
        for (i, &w) in self.words.iter().enumerate() {
            out.words[i ^ word_shift] = xor_permute_word(w, bit_shift);
        }
    }

    pub fn translated(&self, shift: u64) -> VecSet {
        let mut out = VecSet {
            words: vec![0; self.words.len()],
        };
        self.translate_into(shift, &mut out);
        out
    }

    /// `self |= other ^ shift`
    pub fn union_translated(&mut self, other: &VecSet, shift: u64) {
        let word_shift = (shift >> 6) as usize;
        let bit_shift = shift & 63;
        for (i, &w) in other.words.iter().enumerate() {
            self.words[i ^ word_shift] |= xor_permute_word(w, bit_shift);
        }
    }

    /// `self &= other ^ shift`
    pub fn intersect_translated(&mut self, other: &VecSet, shift: u64) {
        let word_shift = (shift >> 6) as usize;
        let bit_shift = shift & 63;
        for (i, &w) in other.words.iter().enumerate() {
            self.words[i ^ word_shift] &= xor_permute_word(w, bit_shift);
        }
    }

    pub fn copy_from(&mut self, other: &VecSet) {
        self.words.copy_from_slice(&other.words);
    }

    /// Ascending iteration over members.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = u64> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let base = (i as u64) << 6;
            BitIter(w).map(move |b| base | b)
        })
    }

    pub fn first(&self) -> Option<u64> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| ((i as u64) << 6) | w.trailing_zeros() as u64)
    }

    pub fn last(&self) -> Option<u64> {
        self.words
            .iter()
            .enumerate()
            .rev()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| ((i as u64) << 6) | (63 - w.leading_zeros()) as u64)
    }
}

struct BitIter(u64);

impl Iterator for BitIter {
    type Item = u64;

    #[inline]
    fn next(&mut self) -> Option<u64> {
        if self.0 == 0 {
            return None;
        }
        let b = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(b as u64)
    }
}

impl DoubleEndedIterator for BitIter {
    #[inline]
    fn next_back(&mut self) -> Option<u64> {
        if self.0 == 0 {
            return None;
        }
        let b = 63 - self.0.leading_zeros();
        self.0 &= !(1u64 << b);
        Some(b as u64)
    }
}

impl fmt::Debug for VecSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
