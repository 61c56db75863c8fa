//! Exact extremal numbers at small rank.
//!
//! Two engines compute the largest point set of GF(2)^r satisfying a
//! [`ConstraintSet`]:
//!
//! * [`max_size`] grows the point set by depth-first inclusion over points
//!   in decreasing encoding, forward-checking hereditary constraints (odd
//!   girth, PG-freeness) and pruning on `|current| + |candidates|`.
//! * [`max_size_complement`] enumerates the missing points `B` by increasing
//!   size as a hitting set for the `n`-flats; it is the fast route when the
//!   optimum is close to `2^r`.
//!
//! [`verify_theorem`] compares either optimum with the closed-form bounds and
//! checks that the matching construction attains them.

mod complement;
mod direct;
mod verify;

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2::MAX_POINTSET_RANK;
use crate::matroid::BinaryMatroid;

pub use complement::max_size_complement;
pub use direct::max_size;
pub use verify::{
    theorem_bound, verify_theorem, Theorem, TheoremParams, VerifyOutcome, VerifyReport, COMPLEMENT_WINDOW,
};

/// Largest ambient rank accepted by the search engines.
pub const MAX_SEARCH_RANK: usize = 10;

/// Requirements on a point set `M` of GF(2)^r.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstraintSet {
    /// No odd circuit shorter than this (closed under subsets).
    pub min_odd_girth: Option<usize>,
    /// Critical number at least 2 (closed under supersets).
    pub forbid_affine: bool,
    /// Critical number at least this (closed under supersets).
    pub min_critical: Option<usize>,
    /// No PG(n-1, 2)-restriction for this `n` (closed under subsets).
    pub pg_free_order: Option<usize>,
    /// `M` spans GF(2)^r.
    pub full_rank: bool,
}

impl ConstraintSet {
    pub fn is_empty(&self) -> bool {
        self.min_odd_girth.is_none()
            && !self.forbid_affine
            && self.min_critical.is_none()
            && self.pg_free_order.is_none()
            && !self.full_rank
    }

    /// Effective lower bound on the critical number.
    pub fn critical_requirement(&self) -> usize {
        let affine = if self.forbid_affine { 2 } else { 0 };
        self.min_critical.unwrap_or(0).max(affine)
    }

    pub fn validate(&self, r: usize) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidConstraints(m));
        if self.is_empty() {
            return bad("at least one constraint is required".into());
        }
        if r > MAX_SEARCH_RANK.min(MAX_POINTSET_RANK) {
            return Err(Error::RankTooLarge {
                rank: r,
                max: MAX_SEARCH_RANK,
            });
        }
        if let Some(k) = self.min_odd_girth {
            if k < 3 || k % 2 == 0 {
                return bad(format!("min odd girth must be odd and ≥ 3, got {k}"));
            }
        }
        if let Some(n) = self.pg_free_order {
            if n < 1 || n > r {
                return bad(format!("pg-free order must lie in 1..={r}, got {n}"));
            }
        }
        let crit = self.critical_requirement();
        if crit > r {
            return bad(format!("critical number {crit} exceeds rank {r}"));
        }
        if self.pg_free_order == Some(1) && (crit > 0 || (self.full_rank && r > 0)) {
            return bad("PG(0,2)-freeness leaves only the empty set".into());
        }
        Ok(())
    }

    /// Checks every constraint through the matroid module's algorithms.
    pub fn is_satisfied_by(&self, m: &BinaryMatroid) -> bool {
        if let Some(k) = self.min_odd_girth {
            if !m.odd_girth().at_least(k) {
                return false;
            }
        }
        if let Some(n) = self.pg_free_order {
            if m.has_pg_restriction(n).unwrap_or(true) {
                return false;
            }
        }
        if self.full_rank && !m.is_full_rank() {
            return false;
        }
        if self.forbid_affine && m.is_affine() {
            return false;
        }
        let crit = self.critical_requirement();
        crit == 0 || m.critical_number().0 >= crit
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchStatus {
    /// The search space was exhausted; the optimum is exact.
    Complete,
    /// The wall-clock budget ran out; the optimum is a lower bound.
    BudgetExhausted,
    /// The complement search found no admissible complement within its window.
    OutsideWindow,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchMethod {
    Direct,
    Complement,
}

#[derive(Clone, Debug)]
pub struct SearchOptions {
    /// Soft wall-clock limit, checked between nodes.
    pub budget: Option<Duration>,
    /// Worker threads for subtree-parallel search; 1 is deterministic in
    /// node counts as well as results.
    pub threads: usize,
    /// Bound pruning and symmetry breaking; disable only to cross-check.
    pub pruning: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            budget: None,
            threads: 1,
            pruning: true,
        }
    }
}

impl SearchOptions {
    pub fn with_budget(budget: Duration) -> Self {
        SearchOptions {
            budget: Some(budget),
            ..Default::default()
        }
    }
}

#[derive(Clone, Debug)]
pub struct SearchReport {
    pub rank: usize,
    pub constraints: ConstraintSet,
    pub method: SearchMethod,
    pub optimum: usize,
    /// Whether any point set (possibly empty) satisfies the constraints.
    pub feasible: bool,
    pub witness: BinaryMatroid,
    pub nodes_explored: u64,
    pub wall_time: Duration,
    pub status: SearchStatus,
}

impl SearchReport {
    pub fn exhaustive(&self) -> bool {
        self.status == SearchStatus::Complete
    }
}

#[derive(Clone, Copy)]
pub(crate) struct Deadline {
    end: Option<Instant>,
}

impl Deadline {
    pub fn new(budget: Option<Duration>) -> Self {
        Deadline {
            end: budget.map(|b| Instant::now() + b),
        }
    }

    pub fn passed(&self) -> bool {
        self.end.is_some_and(|e| Instant::now() >= e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_constraint_set_is_rejected() {
        assert!(ConstraintSet::default().validate(4).is_err());
    }

    #[test]
    fn contradictions_are_rejected() {
        let c = ConstraintSet {
            min_critical: Some(5),
            ..Default::default()
        };
        assert!(c.validate(4).is_err());
        let c = ConstraintSet {
            pg_free_order: Some(1),
            forbid_affine: true,
            ..Default::default()
        };
        assert!(c.validate(4).is_err());
        let c = ConstraintSet {
            min_odd_girth: Some(4),
            ..Default::default()
        };
        assert!(c.validate(4).is_err());
        let c = ConstraintSet {
            pg_free_order: Some(5),
            ..Default::default()
        };
        assert!(c.validate(4).is_err());
    }

    #[test]
    fn critical_requirement_combines_flags() {
        let c = ConstraintSet {
            forbid_affine: true,
            ..Default::default()
        };
        assert_eq!(c.critical_requirement(), 2);
        let c = ConstraintSet {
            forbid_affine: true,
            min_critical: Some(3),
            ..Default::default()
        };
        assert_eq!(c.critical_requirement(), 3);
    }
}
