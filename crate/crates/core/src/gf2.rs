//! Linear algebra over GF(2) on integer-encoded vectors.
//!
//! A vector of GF(2)^r is an unsigned integer below `2^r`; coordinate 1 is
//! the most significant of the `r` used bits, so the binary string of a
//! vector reads left to right as coordinates `1..=r`.

use std::fmt;

use crate::bitset::VecSet;
use crate::error::{Error, Result};
use crate::pointset::PointSet;

/// Largest ambient rank for raw vector arithmetic.
pub const MAX_VECTOR_RANK: usize = 62;
/// Largest ambient rank for bitset-backed point sets.
pub const MAX_POINTSET_RANK: usize = 20;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Gf2Vector(u64);

impl Gf2Vector {
    pub const ZERO: Gf2Vector = Gf2Vector(0);

    pub const fn new(bits: u64) -> Self {
        Gf2Vector(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Unit vector for coordinate `i` (1-based) in ambient rank `r`.
    pub fn unit(i: usize, r: usize) -> Self {
        assert!(1 <= i && i <= r && r <= MAX_VECTOR_RANK, "coordinate out of range");
        Gf2Vector(1 << (r - i))
    }

    /// The GF(2) dot product.
    pub fn dot(self, other: Gf2Vector) -> bool {
        (self.0 & other.0).count_ones() & 1 == 1
    }

    pub fn weight(self) -> u32 {
        self.0.count_ones()
    }

    pub fn fits(self, rank: usize) -> bool {
        rank >= 64 || self.0 >> rank == 0
    }

    /// Coordinate string of length `rank`, coordinate 1 leftmost.
    pub fn to_bit_string(self, rank: usize) -> String {
        (1..=rank)
            .map(|i| if self.0 >> (rank - i) & 1 == 1 { '1' } else { '0' })
            .collect()
    }

    pub fn parse_bit_string(s: &str) -> Option<Self> {
        if s.is_empty() || s.len() > MAX_VECTOR_RANK {
            return None;
        }
        let mut v = 0u64;
        for c in s.chars() {
            v = (v << 1)
                | match c {
                    '0' => 0,
                    '1' => 1,
                    _ => return None,
                };
        }
        Some(Gf2Vector(v))
    }

    pub(crate) fn check_fits(self, rank: usize) -> Result<()> {
        if self.fits(rank) {
            Ok(())
        } else {
            Err(Error::AmbientRank {
                vector: self.0,
                rank,
            })
        }
    }
}

impl std::ops::BitXor for Gf2Vector {
    type Output = Gf2Vector;
    fn bitxor(self, rhs: Gf2Vector) -> Gf2Vector {
        Gf2Vector(self.0 ^ rhs.0)
    }
}

impl std::ops::BitXorAssign for Gf2Vector {
    fn bitxor_assign(&mut self, rhs: Gf2Vector) {
        self.0 ^= rhs.0;
    }
}

impl fmt::Debug for Gf2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:#b}", self.0)
    }
}

impl From<u64> for Gf2Vector {
    fn from(bits: u64) -> Self {
        Gf2Vector(bits)
    }
}

#[inline]
fn leading_bit(v: u64) -> u32 {
    63 - v.leading_zeros()
}

fn check_vector_rank(rank: usize) -> Result<()> {
    if rank > MAX_VECTOR_RANK {
        return Err(Error::RankTooLarge {
            rank,
            max: MAX_VECTOR_RANK,
        });
    }
    Ok(())
}

/// A linear subspace of GF(2)^r held as a reduced row-echelon basis with
/// strictly decreasing pivots (the pivot of a row is its leading bit).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    rank_ambient: usize,
    basis: Vec<Gf2Vector>,
}

impl Subspace {
    pub fn zero(rank_ambient: usize) -> Result<Self> {
        check_vector_rank(rank_ambient)?;
        Ok(Subspace {
            rank_ambient,
            basis: Vec::new(),
        })
    }

    pub fn rank_ambient(&self) -> usize {
        self.rank_ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Gf2Vector] {
        &self.basis
    }

    /// Eliminates `v` against the basis; the result is zero iff `v` is a member.
    pub fn reduce(&self, v: Gf2Vector) -> Gf2Vector {
        let mut x = v.0;
        for b in &self.basis {
            if x >> leading_bit(b.0) & 1 == 1 {
                x ^= b.0;
            }
        }
        Gf2Vector(x)
    }

    pub fn contains(&self, v: Gf2Vector) -> bool {
        v.fits(self.rank_ambient) && self.reduce(v).is_zero()
    }

    /// Adds `v` to the span, keeping the basis reduced. Returns whether the
    /// dimension grew.
    pub fn insert(&mut self, v: Gf2Vector) -> Result<bool> {
        v.check_fits(self.rank_ambient)?;
        let x = self.reduce(v).0;
        if x == 0 {
            return Ok(false);
        }
        let pivot = leading_bit(x);
        for b in self.basis.iter_mut() {
            if b.0 >> pivot & 1 == 1 {
                b.0 ^= x;
            }
        }
        let at = self
            .basis
            .iter()
            .position(|b| leading_bit(b.0) < pivot)
            .unwrap_or(self.basis.len());
        self.basis.insert(at, Gf2Vector(x));
        Ok(true)
    }

    pub fn pivots(&self) -> impl Iterator<Item = u32> + '_ {
        self.basis.iter().map(|b| leading_bit(b.0))
    }

    /// All `2^dim` members, including zero, in Gray-code order.
    pub fn vectors(&self) -> impl Iterator<Item = Gf2Vector> + '_ {
        let d = self.basis.len();
        let mut acc = 0u64;
        (0u64..1 << d).map(move |i| {
            if i > 0 {
                acc ^= self.basis[i.trailing_zeros() as usize].0;
            }
            Gf2Vector(acc)
        })
    }

    /// The nonzero members as a point set.
    pub fn points(&self) -> Result<PointSet> {
        PointSet::from_vectors(self.rank_ambient, self.vectors().filter(|v| !v.is_zero()))
    }

    /// `{ f : <f, w> = 0 for every w in self }`.
    pub fn annihilator(&self) -> Subspace {
        let pivot_mask: u64 = self.pivots().fold(0, |m, p| m | 1 << p);
        let mut out = Subspace {
            rank_ambient: self.rank_ambient,
            basis: Vec::new(),
        };
        for j in (0..self.rank_ambient as u32).rev() {
            if pivot_mask >> j & 1 == 1 {
                continue;
            }
            let mut f = 1u64 << j;
            for b in &self.basis {
                if b.0 >> j & 1 == 1 {
                    f |= 1 << leading_bit(b.0);
                }
            }
            out.insert(Gf2Vector(f))
                .expect("annihilator vector fits the ambient rank");
        }
        out
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Subspace")
            .field("rank_ambient", &self.rank_ambient)
            .field(
                "basis",
                &self
                    .basis
                    .iter()
                    .map(|b| b.to_bit_string(self.rank_ambient))
                    .collect::<Vec<_>>(),
            )
            .finish()
    }
}

/// Dimension of the span of `vectors`.
pub fn rank_of(vectors: &[Gf2Vector], r: usize) -> Result<usize> {
    Ok(span(vectors, r)?.dim())
}

pub fn span(vectors: &[Gf2Vector], r: usize) -> Result<Subspace> {
    let mut s = Subspace::zero(r)?;
    for &v in vectors {
        s.insert(v)?;
    }
    Ok(s)
}

/// Every `d`-dimensional subspace of GF(2)^r exactly once, ordered
/// lexicographically by their echelon bases (rows compared as integers,
/// largest pivot first).
pub fn enumerate_subspaces(r: usize, d: usize) -> Result<impl Iterator<Item = Subspace>> {
    if r > MAX_POINTSET_RANK {
        return Err(Error::RankTooLarge {
            rank: r,
            max: MAX_POINTSET_RANK,
        });
    }
    if d > r {
        return Err(Error::DimensionOutOfRange { dim: d, rank: r });
    }
    let mut out = Vec::new();
    let mut pivots = Vec::with_capacity(d);
    choose_pivots(r as u32, d, &mut pivots, &mut out, r);
    out.sort_by(|a: &Subspace, b| a.basis.cmp(&b.basis));
    Ok(out.into_iter())
}

fn choose_pivots(below: u32, left: usize, pivots: &mut Vec<u32>, out: &mut Vec<Subspace>, r: usize) {
    if left == 0 {
        fill_free_bits(pivots, 0, &mut Vec::with_capacity(pivots.len()), out, r);
        return;
    }
    for p in (left as u32 - 1..below).rev() {
        pivots.push(p);
        choose_pivots(p, left - 1, pivots, out, r);
        pivots.pop();
    }
}

fn fill_free_bits(
    pivots: &[u32],
    row: usize,
    rows: &mut Vec<Gf2Vector>,
    out: &mut Vec<Subspace>,
    r: usize,
) {
    if row == pivots.len() {
        out.push(Subspace {
            rank_ambient: r,
            basis: rows.clone(),
        });
        return;
    }
    let p = pivots[row];
    let pivot_mask: u64 = pivots.iter().fold(0, |m, &q| m | 1 << q);
    let free: Vec<u32> = (0..p).filter(|&j| pivot_mask >> j & 1 == 0).collect();
    for assignment in 0u64..1 << free.len() {
        let mut v = 1u64 << p;
        for (i, &j) in free.iter().enumerate() {
            if assignment >> i & 1 == 1 {
                v |= 1 << j;
            }
        }
        rows.push(Gf2Vector(v));
        fill_free_bits(pivots, row + 1, rows, out, r);
        rows.pop();
    }
}

/// The cocycle `{ v != 0 : <f, v> = 1 }`, of size `2^(r-1)`.
pub fn hyperplane_complement(f: Gf2Vector, r: usize) -> Result<PointSet> {
    if f.is_zero() {
        return Err(Error::ZeroFunctional);
    }
    f.check_fits(r)?;
    let mut s = PointSet::empty(r)?;
    for v in 1u64..1 << r {
        if f.dot(Gf2Vector(v)) {
            s.insert(Gf2Vector(v))?;
        }
    }
    Ok(s)
}

/// DFS for subspaces inside a vector set `allowed` (which should contain 0).
///
/// `cand` is the set of vectors `p` with `p + W` inside `allowed`, where `W`
/// is the current subspace; it always contains `W` itself.
struct SubspaceFinder {
    target: Option<usize>,
    best: Option<Vec<u64>>,
}

impl SubspaceFinder {
    fn best_dim(&self) -> Option<usize> {
        self.best.as_ref().map(Vec::len)
    }

    fn done(&self) -> bool {
        self.target.is_some() && self.best_dim() == self.target
    }

    fn grow(&mut self, members: &VecSet, basis: &mut Vec<u64>, cand: &VecSet) {
        if self.best_dim().is_none_or(|d| basis.len() > d) {
            self.best = Some(basis.clone());
        }
        if self.done() {
            return;
        }
        let mut cand = cand.clone();
        let mut remaining = cand.clone();
        remaining.difference_with(members);
        let mut next_members = members.clone();
        let mut next_cand = cand.clone();
        loop {
            let need = self
                .target
                .unwrap_or_else(|| self.best_dim().map_or(0, |d| d + 1));
            if floor_log2(cand.len()) < need {
                return;
            }
            let Some(p) = remaining.first() else { return };
            next_cand.copy_from(&cand);
            next_cand.intersect_translated(&cand, p);
            next_members.copy_from(members);
            next_members.union_translated(members, p);
            basis.push(p);
            self.grow(&next_members, basis, &next_cand);
            basis.pop();
            if self.done() {
                return;
            }
            // subspaces through p are exhausted; drop the coset p + W
            let coset = members.translated(p);
            cand.difference_with(&coset);
            remaining.difference_with(&coset);
        }
    }
}

fn floor_log2(n: usize) -> usize {
    if n == 0 {
        0
    } else {
        (usize::BITS - 1 - n.leading_zeros()) as usize
    }
}

fn start_state(allowed: &VecSet, rank: usize, through: &[u64]) -> Option<(VecSet, Vec<u64>, VecSet)> {
    let mut members = VecSet::empty(rank);
    members.insert(0);
    let mut cand = allowed.clone();
    cand.insert(0);
    let mut basis = Vec::new();
    for &t in through {
        if members.contains(t) {
            continue;
        }
        if !cand.contains(t) {
            return None;
        }
        let mut next = cand.clone();
        next.intersect_translated(&cand, t);
        cand = next;
        let shifted = members.translated(t);
        members.union_with(&shifted);
        basis.push(t);
    }
    Some((members, basis, cand))
}

/// Largest-dimension subspace whose nonzero vectors all lie in `allowed`.
/// Returns a basis (in insertion order, not echelon form).
pub(crate) fn largest_subspace_within(allowed: &VecSet, rank: usize) -> Vec<u64> {
    let (members, mut basis, cand) = start_state(allowed, rank, &[]).expect("empty start");
    let mut finder = SubspaceFinder {
        target: None,
        best: None,
    };
    finder.grow(&members, &mut basis, &cand);
    finder.best.unwrap_or_default()
}

/// A `dim`-dimensional subspace containing every vector of `through` whose
/// nonzero vectors all lie in `allowed`, if one exists.
pub(crate) fn find_subspace_within(
    allowed: &VecSet,
    rank: usize,
    through: &[u64],
    dim: usize,
) -> Option<Vec<u64>> {
    let (members, mut basis, cand) = start_state(allowed, rank, through)?;
    if basis.len() > dim {
        return None;
    }
    let mut finder = SubspaceFinder {
        target: Some(dim),
        best: None,
    };
    finder.grow(&members, &mut basis, &cand);
    finder.best.filter(|b| b.len() == dim)
}
