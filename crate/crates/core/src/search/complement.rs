//! Search over complements `B = PG(r-1,2) \ M`.
//!
//! `M` is PG(n-1,2)-free iff `B` meets every `n`-dimensional subspace, and
//! `M` has critical number at least `c` iff `B` contains no subspace of
//! dimension `r - c + 1`. The search enumerates hitting sets `B` by
//! increasing size, branching on the points of the most constrained unhit
//! flat (or of a short odd cycle of `M` when an odd-girth bound is set).

use std::time::Instant;

use super::{ConstraintSet, Deadline, SearchMethod, SearchOptions, SearchReport, SearchStatus};
use crate::bitset::VecSet;
use crate::error::{Error, Result};
use crate::gf2;
use crate::matroid::BinaryMatroid;

struct Hitter<'a> {
    r: usize,
    flats: &'a [VecSet],
    /// Forbidden dimension of subspaces inside `B`, from the critical bound.
    blocker_subspace_dim: Option<usize>,
    min_odd_girth: Option<usize>,
    full_rank: bool,
    all_points: VecSet,
    nodes: u64,
    deadline: Deadline,
    timed_out: bool,
    found: Option<VecSet>,
}

enum Need {
    Done,
    Dead,
    Hit(Vec<u64>),
}

impl Hitter<'_> {
    fn complement_of(&self, blocker: &VecSet) -> VecSet {
        let mut m = self.all_points.clone();
        m.difference_with(blocker);
        m
    }

    /// Smallest set of points one of which must join `B`.
    fn next_need(&self, blocker: &VecSet, excluded: &VecSet) -> Need {
        let mut best: Option<(usize, &VecSet)> = None;
        for flat in self.flats {
            if !flat.is_disjoint(blocker) {
                continue;
            }
            let avail = flat.len() - flat.intersection_len(excluded);
            if avail == 0 {
                return Need::Dead;
            }
            if best.is_none_or(|(a, _)| avail < a) {
                best = Some((avail, flat));
            }
        }
        if let Some((_, flat)) = best {
            let mut opts = flat.clone();
            opts.difference_with(excluded);
            return Need::Hit(opts.iter().collect());
        }
        if let Some(k) = self.min_odd_girth {
            let m = BinaryMatroid::from_raw(self.r, self.complement_of(blocker));
            if let Some(cycle) = m.shortest_odd_cycle() {
                if cycle.len() < k {
                    let opts: Vec<u64> = cycle
                        .iter()
                        .map(|v| v.bits())
                        .filter(|&v| !excluded.contains(v))
                        .collect();
                    return if opts.is_empty() {
                        Need::Dead
                    } else {
                        Need::Hit(opts)
                    };
                }
            }
        }
        Need::Done
    }

    /// Greedy count of unhit flats with pairwise disjoint available points.
    fn packing_bound(&self, blocker: &VecSet, excluded: &VecSet) -> usize {
        let mut used = excluded.clone();
        let mut count = 0;
        for flat in self.flats {
            if flat.is_disjoint(blocker) && flat.is_disjoint(&used) {
                used.union_with(flat);
                count += 1;
            }
        }
        count
    }

    fn admissible(&self, blocker: &VecSet, x: u64) -> bool {
        match self.blocker_subspace_dim {
            Some(d) => {
                let mut allowed = blocker.clone();
                allowed.insert(0);
                allowed.insert(x);
                gf2::find_subspace_within(&allowed, self.r, &[x], d).is_none()
            }
            None => true,
        }
    }

    fn m_spans(&self, blocker: &VecSet) -> bool {
        let m = BinaryMatroid::from_raw(self.r, self.complement_of(blocker));
        m.is_full_rank()
    }

    fn dfs(&mut self, blocker: &mut VecSet, excluded: &mut VecSet, size: usize, limit: usize) -> bool {
        self.nodes += 1;
        if self.nodes.is_multiple_of(1024) && self.deadline.passed() {
            self.timed_out = true;
        }
        if self.timed_out {
            return false;
        }
        if self.full_rank && !self.m_spans(blocker) {
            return false;
        }
        let options = match self.next_need(blocker, excluded) {
            Need::Dead => return false,
            Need::Done => {
                self.found = Some(blocker.clone());
                return true;
            }
            Need::Hit(opts) => opts,
        };
        if size >= limit || size + self.packing_bound(blocker, excluded) > limit {
            return false;
        }
        // at the root every constraint is GL(r,2)-invariant and the flat's
        // stabiliser is transitive on its points, so one branch suffices
        let options = if size == 0 && excluded.is_empty() {
            &options[..1]
        } else {
            &options[..]
        };
        let mut added = Vec::new();
        let mut hit = false;
        for &x in options {
            if self.admissible(blocker, x) {
                blocker.insert(x);
                let ok = self.dfs(blocker, excluded, size + 1, limit);
                blocker.remove(x);
                if ok {
                    hit = true;
                    break;
                }
                if self.timed_out {
                    break;
                }
            }
            excluded.insert(x);
            added.push(x);
        }
        for x in added {
            excluded.remove(x);
        }
        hit
    }
}

/// Exact maximum size of a point set satisfying `constraints` (which must
/// include a PG-freeness order), found by enumerating complements of size at
/// most `max_blocker`.
pub fn max_size_complement(
    r: usize,
    constraints: &ConstraintSet,
    max_blocker: usize,
    opts: &SearchOptions,
) -> Result<SearchReport> {
    constraints.validate(r)?;
    let Some(n) = constraints.pg_free_order else {
        return Err(Error::InvalidConstraints(
            "complement search needs a pg-free order".into(),
        ));
    };
    let started = Instant::now();
    let flats: Vec<VecSet> = gf2::enumerate_subspaces(r, n)?
        .map(|w| {
            let mut s = VecSet::empty(r);
            for v in w.vectors().filter(|v| !v.is_zero()) {
                s.insert(v.bits());
            }
            s
        })
        .collect();
    let crit = constraints.critical_requirement();
    let mut all_points = VecSet::full(r);
    all_points.remove(0);
    let mut hitter = Hitter {
        r,
        flats: &flats,
        blocker_subspace_dim: (crit > 0).then(|| r + 1 - crit),
        min_odd_girth: constraints.min_odd_girth,
        full_rank: constraints.full_rank,
        all_points,
        nodes: 0,
        deadline: Deadline::new(opts.budget),
        timed_out: false,
        found: None,
    };

    let total = (1usize << r) - 1;
    let mut status = SearchStatus::OutsideWindow;
    for limit in 0..=max_blocker.min(total) {
        let mut blocker = VecSet::empty(r);
        let mut excluded = VecSet::empty(r);
        if hitter.dfs(&mut blocker, &mut excluded, 0, limit) {
            status = SearchStatus::Complete;
            break;
        }
        if hitter.timed_out {
            status = SearchStatus::BudgetExhausted;
            break;
        }
    }

    let (optimum, witness) = match (&status, hitter.found.take()) {
        (SearchStatus::Complete, Some(b)) => {
            let size = total - b.len();
            (size, BinaryMatroid::from_raw(r, hitter.complement_of(&b)))
        }
        _ => (0, BinaryMatroid::empty(r)?),
    };
    Ok(SearchReport {
        rank: r,
        constraints: *constraints,
        method: SearchMethod::Complement,
        optimum,
        feasible: status == SearchStatus::Complete,
        witness,
        nodes_explored: hitter.nodes,
        wall_time: started.elapsed(),
        status,
    })
}
