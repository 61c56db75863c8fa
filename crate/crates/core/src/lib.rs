//! Simple binary matroids represented as point sets of the projective
//! geometry PG(r-1, 2).
//!
//! The crate provides GF(2) linear algebra ([`gf2`]), the matroid type with
//! its invariants ([`matroid`]), the standard extremal constructions
//! ([`constructions`]), and exact extremal searches at small rank
//! ([`search`]).

mod bitset;
pub mod constructions;
pub mod error;
pub mod gf2;
pub mod iso;
pub mod matroid;
mod pointset;
pub mod search;

pub use error::{Error, Result};
pub use gf2::{enumerate_subspaces, hyperplane_complement, rank_of, span, Gf2Vector, Subspace};
pub use iso::is_isomorphic;
pub use matroid::{BinaryMatroid, CocycleCover, OddGirth};
pub use pointset::PointSet;
