//! Named families of simple binary matroids, each with a fixed
//! coordinate-aligned representative.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::gf2::{Gf2Vector, MAX_POINTSET_RANK};
use crate::matroid::BinaryMatroid;
use crate::pointset::PointSet;

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

fn check_r(r: usize) -> Result<()> {
    if r < 1 {
        return Err(invalid("r must be ≥ 1"));
    }
    if r > MAX_POINTSET_RANK {
        return Err(Error::RankTooLarge {
            rank: r,
            max: MAX_POINTSET_RANK,
        });
    }
    Ok(())
}

fn from_predicate(r: usize, keep: impl Fn(u64) -> bool) -> Result<BinaryMatroid> {
    BinaryMatroid::from_bits(r, (1u64..1 << r).filter(|&v| keep(v)))
}

/// PG(r-1, 2): every nonzero vector.
pub fn pg(r: usize) -> Result<BinaryMatroid> {
    check_r(r)?;
    from_predicate(r, |_| true)
}

/// AG(r-1, 2): the vectors with first coordinate 1.
pub fn ag(r: usize) -> Result<BinaryMatroid> {
    check_r(r)?;
    from_predicate(r, |v| v >> (r - 1) & 1 == 1)
}

/// BB(r, c): PG(r-1, 2) minus the rank-(r-c) flat of vectors whose first
/// `c` coordinates vanish.
pub fn bose_burton(r: usize, c: usize) -> Result<BinaryMatroid> {
    if c < 1 || c > r {
        return Err(invalid("bb needs r ≥ c ≥ 1"));
    }
    check_r(r)?;
    from_predicate(r, |v| v >> (r - c) != 0)
}

/// A single odd circuit of size `k` in rank `k-1`: the unit vectors and
/// their sum.
pub fn circuit(k: usize) -> Result<BinaryMatroid> {
    if k < 3 || k.is_multiple_of(2) {
        return Err(invalid("k must be odd and ≥ 3"));
    }
    let r = k - 1;
    check_r(r)?;
    let all_ones = (1u64 << r) - 1;
    BinaryMatroid::from_bits(r, (0..r).map(|i| 1u64 << i).chain([all_ones]))
}

fn check_liftable(n: &BinaryMatroid) -> Result<()> {
    let r = n.ambient_rank();
    if r < 1 {
        return Err(invalid("conical lift needs ambient rank ≥ 1"));
    }
    check_r(r + 1)?;
    let rank = n.rank();
    if rank != r {
        return Err(Error::NotFullRank { rank, ambient: r });
    }
    Ok(())
}

/// Conical lift of `N`: `N` sits in the hyperplane "last coordinate 0" and
/// the apex is the new unit vector; every point `p` of `N` gains the third
/// point `p + apex` on the line through the apex.
pub fn conical_lift(n: &BinaryMatroid) -> Result<(BinaryMatroid, Gf2Vector)> {
    let m = doubling(n)?;
    let apex = Gf2Vector::new(1);
    let mut points = m.into_points();
    points.insert(apex)?;
    Ok((BinaryMatroid::new(points), apex))
}

/// The conical lift of `N` with its apex deleted.
pub fn doubling(n: &BinaryMatroid) -> Result<BinaryMatroid> {
    check_liftable(n)?;
    let r = n.ambient_rank() + 1;
    let mut points = PointSet::empty(r)?;
    for p in n.iter() {
        let lifted = p.bits() << 1;
        points.insert(Gf2Vector::new(lifted))?;
        points.insert(Gf2Vector::new(lifted | 1))?;
    }
    Ok(BinaryMatroid::new(points))
}

/// Non-affine rank-`r` matroid with no odd circuit shorter than `k` and
/// `k * 2^(r-k+1)` points: the `k`-circuit doubled `r-k+1` times.
pub fn extremal_odd_girth(k: usize, r: usize) -> Result<BinaryMatroid> {
    if k < 5 || k.is_multiple_of(2) {
        return Err(invalid("k must be odd and ≥ 5"));
    }
    if r + 1 < k {
        return Err(invalid("extremal-odd-girth needs r ≥ k − 1"));
    }
    check_r(r)?;
    let mut m = circuit(k)?;
    while m.ambient_rank() < r {
        m = doubling(&m)?;
    }
    Ok(m)
}

/// PG(n-1, 2)-free rank-`r` matroid with critical number `n` and
/// `(1 - 11/2^(n+2)) * 2^r` points.
pub fn extremal_gs(n: usize, r: usize) -> Result<BinaryMatroid> {
    if n < 2 || r < n + 2 {
        return Err(invalid("extremal-gs needs r − 2 ≥ n ≥ 2"));
    }
    check_r(r)?;
    if n == 2 {
        return extremal_odd_girth(5, r);
    }
    let inner = extremal_gs(n - 1, r - 1)?;
    let mut points = PointSet::empty(r)?;
    for p in inner.iter() {
        points.insert(Gf2Vector::new(p.bits() << 1))?;
    }
    for v in (1u64..1 << r).filter(|v| v & 1 == 1) {
        points.insert(Gf2Vector::new(v))?;
    }
    Ok(BinaryMatroid::new(points))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Pg,
    Ag,
    Bb,
    Circuit,
    ExtremalOddGirth,
    ExtremalGs,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Pg,
        Family::Ag,
        Family::Bb,
        Family::Circuit,
        Family::ExtremalOddGirth,
        Family::ExtremalGs,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Pg => "pg",
            Family::Ag => "ag",
            Family::Bb => "bb",
            Family::Circuit => "circuit",
            Family::ExtremalOddGirth => "extremal-odd-girth",
            Family::ExtremalGs => "extremal-gs",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.to_ascii_lowercase().replace('_', "-");
        Family::ALL
            .into_iter()
            .find(|f| f.name() == norm)
            .ok_or_else(|| invalid(format!("unknown family `{s}`")))
    }
}

/// A family together with its integer parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Pg { r: usize },
    Ag { r: usize },
    Bb { r: usize, c: usize },
    Circuit { k: usize },
    ExtremalOddGirth { k: usize, r: usize },
    ExtremalGs { n: usize, r: usize },
}

/// Loosely-typed parameters, as they arrive from a command line.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct FamilyParams {
    pub r: Option<usize>,
    pub c: Option<usize>,
    pub k: Option<usize>,
    pub n: Option<usize>,
}

impl FamilySpec {
    pub fn from_params(family: Family, p: FamilyParams) -> Result<Self> {
        let need = |v: Option<usize>, name: &str| {
            v.ok_or_else(|| invalid(format!("family {family} requires --{name}")))
        };
        Ok(match family {
            Family::Pg => FamilySpec::Pg { r: need(p.r, "r")? },
            Family::Ag => FamilySpec::Ag { r: need(p.r, "r")? },
            Family::Bb => FamilySpec::Bb {
                r: need(p.r, "r")?,
                c: need(p.c, "c")?,
            },
            Family::Circuit => FamilySpec::Circuit { k: need(p.k, "k")? },
            Family::ExtremalOddGirth => FamilySpec::ExtremalOddGirth {
                k: need(p.k, "k")?,
                r: need(p.r, "r")?,
            },
            Family::ExtremalGs => FamilySpec::ExtremalGs {
                n: need(p.n, "n")?,
                r: need(p.r, "r")?,
            },
        })
    }

    pub fn family(&self) -> Family {
        match self {
            FamilySpec::Pg { .. } => Family::Pg,
            FamilySpec::Ag { .. } => Family::Ag,
            FamilySpec::Bb { .. } => Family::Bb,
            FamilySpec::Circuit { .. } => Family::Circuit,
            FamilySpec::ExtremalOddGirth { .. } => Family::ExtremalOddGirth,
            FamilySpec::ExtremalGs { .. } => Family::ExtremalGs,
        }
    }

    pub fn build(&self) -> Result<BinaryMatroid> {
        match *self {
            FamilySpec::Pg { r } => pg(r),
            FamilySpec::Ag { r } => ag(r),
            FamilySpec::Bb { r, c } => bose_burton(r, c),
            FamilySpec::Circuit { k } => circuit(k),
            FamilySpec::ExtremalOddGirth { k, r } => extremal_odd_girth(k, r),
            FamilySpec::ExtremalGs { n, r } => extremal_gs(n, r),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Pg { r } => write!(f, "pg(r={r})"),
            FamilySpec::Ag { r } => write!(f, "ag(r={r})"),
            FamilySpec::Bb { r, c } => write!(f, "bb(r={r}, c={c})"),
            FamilySpec::Circuit { k } => write!(f, "circuit(k={k})"),
            FamilySpec::ExtremalOddGirth { k, r } => write!(f, "extremal-odd-girth(k={k}, r={r})"),
            FamilySpec::ExtremalGs { n, r } => write!(f, "extremal-gs(n={n}, r={r})"),
        }
    }
}
