//! Simple binary matroids as point sets of PG(r-1, 2), and their invariants.

use std::cmp::Ordering;
use std::collections::VecDeque;
use std::fmt;

use crate::bitset::VecSet;
use crate::error::{Error, Result};
use crate::gf2::{self, Gf2Vector, Subspace};
use crate::pointset::PointSet;

/// A simple binary matroid: a set of distinct nonzero vectors of GF(2)^r.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryMatroid {
    points: PointSet,
}

/// Length of a shortest odd circuit, or `Infinite` when there is none.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OddGirth {
    Finite(usize),
    Infinite,
}

impl OddGirth {
    pub fn is_infinite(self) -> bool {
        matches!(self, OddGirth::Infinite)
    }

    pub fn finite(self) -> Option<usize> {
        match self {
            OddGirth::Finite(k) => Some(k),
            OddGirth::Infinite => None,
        }
    }

    /// True when there is no odd circuit shorter than `k`.
    pub fn at_least(self, k: usize) -> bool {
        self.finite().is_none_or(|g| g >= k)
    }
}

impl PartialOrd for OddGirth {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for OddGirth {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (OddGirth::Infinite, OddGirth::Infinite) => Ordering::Equal,
            (OddGirth::Infinite, _) => Ordering::Greater,
            (_, OddGirth::Infinite) => Ordering::Less,
            (OddGirth::Finite(a), OddGirth::Finite(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for OddGirth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OddGirth::Finite(k) => write!(f, "{k}"),
            OddGirth::Infinite => f.write_str("infinite"),
        }
    }
}

/// Linear functionals whose cocycles `{ v : <f, v> = 1 }` jointly cover a
/// point set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocycleCover {
    pub functionals: Vec<Gf2Vector>,
}

impl CocycleCover {
    pub fn len(&self) -> usize {
        self.functionals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.functionals.is_empty()
    }

    pub fn covers(&self, m: &BinaryMatroid) -> bool {
        m.iter()
            .all(|v| self.functionals.iter().any(|f| f.dot(v)))
    }
}

impl BinaryMatroid {
    pub fn new(points: PointSet) -> Self {
        BinaryMatroid { points }
    }

    pub fn from_vectors<I>(rank: usize, vectors: I) -> Result<Self>
    where
        I: IntoIterator<Item = Gf2Vector>,
    {
        Ok(BinaryMatroid {
            points: PointSet::from_vectors(rank, vectors)?,
        })
    }

    /// Like [`from_vectors`](Self::from_vectors) but with raw encodings.
    pub fn from_bits<I>(rank: usize, bits: I) -> Result<Self>
    where
        I: IntoIterator<Item = u64>,
    {
        Self::from_vectors(rank, bits.into_iter().map(Gf2Vector::new))
    }

    pub fn empty(rank: usize) -> Result<Self> {
        Ok(BinaryMatroid {
            points: PointSet::empty(rank)?,
        })
    }

    pub(crate) fn from_raw(rank: usize, bits: VecSet) -> Self {
        BinaryMatroid {
            points: PointSet::from_raw(rank, bits),
        }
    }

    pub(crate) fn raw(&self) -> &VecSet {
        self.points.raw()
    }

    /// Ambient rank `r`.
    pub fn ambient_rank(&self) -> usize {
        self.points.rank()
    }

    pub fn points(&self) -> &PointSet {
        &self.points
    }

    pub fn into_points(self) -> PointSet {
        self.points
    }

    /// `|M|`.
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, v: Gf2Vector) -> bool {
        self.points.contains(v)
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = Gf2Vector> + '_ {
        self.points.iter()
    }

    /// Rank of the point set (dimension of its span).
    pub fn rank(&self) -> usize {
        self.span().dim()
    }

    pub fn span(&self) -> Subspace {
        gf2::span(&self.points.to_vec(), self.ambient_rank()).expect("points fit their ambient rank")
    }

    pub fn is_full_rank(&self) -> bool {
        self.rank() == self.ambient_rank()
    }

    /// `M \ v`.
    pub fn delete(&self, v: Gf2Vector) -> BinaryMatroid {
        let mut points = self.points.clone();
        points.remove(v);
        BinaryMatroid { points }
    }

    /// `M | S`.
    pub fn restrict(&self, s: &PointSet) -> Result<BinaryMatroid> {
        Ok(BinaryMatroid {
            points: self.points.intersection(s)?,
        })
    }

    fn check_subset(&self, s: &PointSet) -> Result<()> {
        if s.rank() != self.ambient_rank() {
            return Err(Error::RankMismatch {
                left: self.ambient_rank(),
                right: s.rank(),
            });
        }
        if !s.is_subset(&self.points) {
            return Err(Error::NotSubset);
        }
        Ok(())
    }

    /// Matroid closure of `S` within `M`: `span(S) ∩ E(M)`.
    pub fn closure(&self, s: &PointSet) -> Result<PointSet> {
        self.check_subset(s)?;
        let sp = gf2::span(&s.to_vec(), self.ambient_rank())?;
        PointSet::from_vectors(
            self.ambient_rank(),
            self.iter().filter(|&v| sp.contains(v)),
        )
    }

    /// A shortest odd-size subset of the points with zero sum, if any.
    ///
    /// Breadth-first search over the parity double cover of the Cayley graph
    /// of GF(2)^r generated by the points: a closed walk of odd length from
    /// 0 is an odd zero-sum multiset, and cancelling repeated points keeps
    /// it odd, so the shortest such walk uses distinct points.
    pub fn shortest_odd_cycle(&self) -> Option<Vec<Gf2Vector>> {
        let r = self.ambient_rank();
        let gens: Vec<u64> = self.points.raw().iter().collect();
        if gens.is_empty() {
            return None;
        }
        let states = 2usize << r;
        const UNSEEN: u32 = u32::MAX;
        let mut via = vec![UNSEEN; states];
        let start = 0usize;
        let goal = 1usize; // vector 0, odd parity
        via[start] = 0;
        let mut queue = VecDeque::from([start]);
        'bfs: while let Some(s) = queue.pop_front() {
            let (x, parity) = ((s >> 1) as u64, s & 1);
            for (i, &g) in gens.iter().enumerate() {
                let t = (((x ^ g) as usize) << 1) | (parity ^ 1);
                if via[t] == UNSEEN {
                    via[t] = i as u32;
                    if t == goal {
                        break 'bfs;
                    }
                    queue.push_back(t);
                }
            }
        }
        if via[goal] == UNSEEN {
            return None;
        }
        let mut walk = Vec::new();
        let mut s = goal;
        while s != start {
            let g = gens[via[s] as usize];
            walk.push(g);
            let (x, parity) = ((s >> 1) as u64, s & 1);
            s = (((x ^ g) as usize) << 1) | (parity ^ 1);
        }
        walk.sort_unstable();
        let mut cycle: Vec<Gf2Vector> = Vec::with_capacity(walk.len());
        for g in walk {
            if cycle.last() == Some(&Gf2Vector::new(g)) {
                cycle.pop();
            } else {
                cycle.push(Gf2Vector::new(g));
            }
        }
        debug_assert!(cycle.len() % 2 == 1);
        Some(cycle)
    }

    pub fn odd_girth(&self) -> OddGirth {
        match self.shortest_odd_cycle() {
            Some(c) => OddGirth::Finite(c.len()),
            None => OddGirth::Infinite,
        }
    }

    /// Oracle for [`odd_girth`](Self::odd_girth): tries subsets in increasing
    /// odd size. Exponential; intended for at most ~30 points.
    pub fn odd_girth_bruteforce(&self) -> OddGirth {
        let pts: Vec<u64> = self.points.raw().iter().collect();
        let mut size = 1;
        while size <= pts.len() {
            if zero_sum_subset_exists(&pts, size, 0, 0) {
                return OddGirth::Finite(size);
            }
            size += 2;
        }
        OddGirth::Infinite
    }

    /// A functional `f` with `<f, v> = 1` on every point, if one exists.
    pub fn affine_functional(&self) -> Option<Gf2Vector> {
        let r = self.ambient_rank();
        // rows (v, 1) in GF(2)^(r+1); (f, 1) must annihilate all of them
        let mut rows = Subspace::zero(r + 1).expect("rank fits");
        for v in self.iter() {
            rows.insert(Gf2Vector::new(v.bits() << 1 | 1))
                .expect("augmented row fits");
        }
        let ann = rows.annihilator();
        let mut with_tail = ann.basis().iter().filter(|a| a.bits() & 1 == 1);
        let first = *with_tail.next()?;
        // least such functional: clear the tail bit from all other candidates
        let mut f = first.bits();
        for b in ann.basis() {
            if b.bits() & 1 == 0 && (f ^ b.bits()) < f {
                f ^= b.bits();
            }
        }
        Some(Gf2Vector::new(f >> 1))
    }

    /// Whether the ground set is a cocycle. Checked against the odd-cycle
    /// characterisation in debug builds.
    pub fn is_affine(&self) -> bool {
        let affine = self.affine_functional().is_some();
        debug_assert_eq!(
            affine,
            self.odd_girth().is_infinite(),
            "affineness and odd-cycle tests disagree"
        );
        affine
    }

    /// Critical number and a minimum cocycle cover.
    ///
    /// Computed as `r - d` where `d` is the largest dimension of a subspace
    /// disjoint from the points; the cover is a basis of that subspace's
    /// annihilator. The value equals the critical number of `M` inside its
    /// own span.
    pub fn critical_number(&self) -> (usize, CocycleCover) {
        let r = self.ambient_rank();
        let w = self.largest_avoiding_subspace();
        let functionals = w.annihilator().basis().to_vec();
        let c = r - w.dim();
        debug_assert_eq!(functionals.len(), c);
        (c, CocycleCover { functionals })
    }

    /// A largest-dimension subspace with no nonzero vector in `M`.
    pub fn largest_avoiding_subspace(&self) -> Subspace {
        let r = self.ambient_rank();
        let mut allowed = VecSet::full(r);
        allowed.difference_with(self.raw());
        let basis = gf2::largest_subspace_within(&allowed, r);
        let v: Vec<Gf2Vector> = basis.into_iter().map(Gf2Vector::new).collect();
        gf2::span(&v, r).expect("basis fits")
    }

    /// Oracle for [`critical_number`](Self::critical_number): exhaustive
    /// minimum set cover of the points by the `2^r - 1` cocycles.
    pub fn critical_number_bruteforce(&self) -> usize {
        let r = self.ambient_rank();
        let target = self.raw();
        let cocycles: Vec<VecSet> = (1u64..1 << r)
            .map(|f| {
                let mut s = VecSet::empty(r);
                for v in 1u64..1 << r {
                    if Gf2Vector::new(f).dot(Gf2Vector::new(v)) {
                        s.insert(v);
                    }
                }
                s
            })
            .collect();
        (0..=r)
            .find(|&c| cover_exists(&cocycles, target, c, 0, &VecSet::empty(r)))
            .expect("r cocycles always cover the nonzero vectors")
    }

    /// Some `n`-dimensional subspace whose nonzero vectors all lie in `M`.
    pub fn pg_restriction(&self, n: usize) -> Result<Option<Subspace>> {
        let r = self.ambient_rank();
        if n < 1 || n > r {
            return Err(Error::DimensionOutOfRange { dim: n, rank: r });
        }
        let mut allowed = self.raw().clone();
        allowed.insert(0);
        Ok(gf2::find_subspace_within(&allowed, r, &[], n).map(|b| {
            let v: Vec<Gf2Vector> = b.into_iter().map(Gf2Vector::new).collect();
            gf2::span(&v, r).expect("basis fits")
        }))
    }

    /// Whether `M` has a restriction isomorphic to PG(n-1, 2).
    pub fn has_pg_restriction(&self, n: usize) -> Result<bool> {
        Ok(self.pg_restriction(n)?.is_some())
    }

    /// Simplification of `M / S`, in ambient rank `r - rank(S)`.
    ///
    /// Quotient coordinates are the non-pivot coordinates of the echelon
    /// basis of `span(S)`, kept in their original order.
    pub fn contract_simplify(&self, s: &PointSet) -> Result<BinaryMatroid> {
        self.check_subset(s)?;
        let r = self.ambient_rank();
        let sp = gf2::span(&s.to_vec(), r)?;
        let pivot_mask: u64 = sp.pivots().fold(0, |m, p| m | 1 << p);
        let kept: Vec<u32> = (0..r as u32).filter(|&j| pivot_mask >> j & 1 == 0).collect();
        let mut points = PointSet::empty(r - sp.dim())?;
        for v in self.iter() {
            let x = sp.reduce(v).bits();
            if x == 0 {
                continue;
            }
            let mut y = 0u64;
            for (i, &j) in kept.iter().enumerate() {
                y |= (x >> j & 1) << i;
            }
            points.insert(Gf2Vector::new(y))?;
        }
        Ok(BinaryMatroid { points })
    }

    /// Point set as sorted binary strings.
    pub fn to_bit_strings(&self) -> Vec<String> {
        let r = self.ambient_rank();
        self.iter().map(|v| v.to_bit_string(r)).collect()
    }
}

fn zero_sum_subset_exists(pts: &[u64], left: usize, from: usize, acc: u64) -> bool {
    if left == 0 {
        return acc == 0;
    }
    if pts.len() - from < left {
        return false;
    }
    if left == 1 {
        return pts[from..].contains(&acc);
    }
    (from..=pts.len() - left).any(|i| zero_sum_subset_exists(pts, left - 1, i + 1, acc ^ pts[i]))
}

fn cover_exists(cocycles: &[VecSet], target: &VecSet, left: usize, from: usize, acc: &VecSet) -> bool {
    if target.is_subset(acc) {
        return true;
    }
    if left == 0 {
        return false;
    }
    (from..cocycles.len()).any(|i| {
        let mut next = acc.clone();
        next.union_with(&cocycles[i]);
        cover_exists(cocycles, target, left - 1, i + 1, &next)
    })
}

impl fmt::Debug for BinaryMatroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryMatroid(rank {}, {:?})", self.ambient_rank(), self.points)
    }
}
