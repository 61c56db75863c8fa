use std::fmt;

use crate::bitset::VecSet;
use crate::error::{Error, Result};
use crate::gf2::{Gf2Vector, MAX_POINTSET_RANK};

/// A set of nonzero vectors of GF(2)^r, stored as a bitset indexed by
/// integer encoding.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PointSet {
    rank: usize,
    bits: VecSet,
}

impl PointSet {
    pub fn empty(rank: usize) -> Result<Self> {
        check_rank(rank)?;
        Ok(PointSet {
            rank,
            bits: VecSet::empty(rank),
        })
    }

    /// All `2^r - 1` nonzero vectors.
    pub fn all(rank: usize) -> Result<Self> {
        check_rank(rank)?;
        let mut bits = VecSet::full(rank);
        bits.remove(0);
        Ok(PointSet { rank, bits })
    }

    pub fn from_vectors<I>(rank: usize, vectors: I) -> Result<Self>
    where
        I: IntoIterator<Item = Gf2Vector>,
    {
        let mut s = Self::empty(rank)?;
        for v in vectors {
            s.insert(v)?;
        }
        Ok(s)
    }

    pub(crate) fn from_raw(rank: usize, mut bits: VecSet) -> Self {
        bits.remove(0);
        PointSet { rank, bits }
    }

    pub(crate) fn raw(&self) -> &VecSet {
        &self.bits
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn contains(&self, v: Gf2Vector) -> bool {
        v.bits() != 0 && v.bits() >> self.rank == 0 && self.bits.contains(v.bits())
    }

    /// Adds a point; returns whether it was newly inserted.
    pub fn insert(&mut self, v: Gf2Vector) -> Result<bool> {
        self.check_point(v)?;
        let fresh = !self.bits.contains(v.bits());
        self.bits.insert(v.bits());
        Ok(fresh)
    }

    pub fn remove(&mut self, v: Gf2Vector) -> bool {
        if !self.contains(v) {
            return false;
        }
        self.bits.remove(v.bits());
        true
    }

    /// Ascending by encoding.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = Gf2Vector> + '_ {
        self.bits.iter().map(Gf2Vector::new)
    }

    pub fn to_vec(&self) -> Vec<Gf2Vector> {
        self.iter().collect()
    }

    pub fn is_subset(&self, other: &PointSet) -> bool {
        self.rank == other.rank && self.bits.is_subset(&other.bits)
    }

    pub fn union(&self, other: &PointSet) -> Result<PointSet> {
        self.same_rank(other)?;
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        Ok(PointSet {
            rank: self.rank,
            bits,
        })
    }

    pub fn intersection(&self, other: &PointSet) -> Result<PointSet> {
        self.same_rank(other)?;
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        Ok(PointSet {
            rank: self.rank,
            bits,
        })
    }

    pub fn difference(&self, other: &PointSet) -> Result<PointSet> {
        self.same_rank(other)?;
        let mut bits = self.bits.clone();
        bits.difference_with(&other.bits);
        Ok(PointSet {
            rank: self.rank,
            bits,
        })
    }

    /// Nonzero vectors not in the set.
    pub fn complement(&self) -> PointSet {
        let mut bits = VecSet::full(self.rank);
        bits.difference_with(&self.bits);
        bits.remove(0);
        PointSet {
            rank: self.rank,
            bits,
        }
    }

    fn check_point(&self, v: Gf2Vector) -> Result<()> {
        if v.bits() == 0 {
            return Err(Error::ZeroPoint);
        }
        if v.bits() >> self.rank != 0 {
            return Err(Error::AmbientRank {
                vector: v.bits(),
                rank: self.rank,
            });
        }
        Ok(())
    }

    fn same_rank(&self, other: &PointSet) -> Result<()> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: other.rank,
            });
        }
        Ok(())
    }
}

fn check_rank(rank: usize) -> Result<()> {
    if rank > MAX_POINTSET_RANK {
        return Err(Error::RankTooLarge {
            rank,
            max: MAX_POINTSET_RANK,
        });
    }
    Ok(())
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set()
            .entries(self.iter().map(|v| v.to_bit_string(self.rank)))
            .finish()
    }
}
