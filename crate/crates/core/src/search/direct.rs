//! Depth-first inclusion search over points in decreasing encoding.
//!
//! Every constraint is invariant under GL(r, 2) and survives adding a point
//! outside the current span, so some optimum is full rank and, after a change
//! of basis, contains the unit vectors. When non-affinity is required the
//! optimum also contains an odd circuit `C` of minimum size `m`; the search
//! then runs one branch per odd `m`, seeded with a fixed `m`-circuit plus
//! unit vectors completing a basis, and requires odd girth at least `m`
//! inside that branch.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::Instant;

use rayon::prelude::*;

use super::{ConstraintSet, Deadline, SearchMethod, SearchOptions, SearchReport, SearchStatus};
use crate::bitset::VecSet;
use crate::error::Result;
use crate::gf2;
use crate::matroid::BinaryMatroid;

const CHECK_DEADLINE_EVERY: u64 = 1 << 10;

/// Critical number of a raw point set (zero is ignored).
pub(crate) fn critical_number_raw(points: &VecSet, r: usize) -> usize {
    let mut allowed = VecSet::full(r);
    allowed.difference_with(points);
    r - gf2::largest_subspace_within(&allowed, r).len()
}

fn rank_raw(points: &VecSet, r: usize) -> usize {
    let mut s = gf2::Subspace::zero(r).expect("rank fits");
    for p in points.iter().filter(|&p| p != 0) {
        s.insert(p.into()).expect("point fits");
    }
    s.dim()
}

#[derive(Debug)]
struct Plan {
    r: usize,
    crit: usize,
    pg_order: Option<usize>,
    pruning: bool,
}

#[derive(Debug)]
struct Seed {
    points: Vec<u64>,
    /// Hereditary odd-girth requirement in this branch.
    girth: Option<usize>,
    leaf_crit: bool,
    leaf_full_rank: bool,
}

#[derive(Clone, Debug)]
struct Frame {
    chosen: VecSet,
    size: usize,
    cand: VecSet,
    /// `layers[t]`: sums of at most `t` chosen points with `t`'s parity.
    layers: Vec<VecSet>,
}

impl Frame {
    fn empty(r: usize, girth: Option<usize>) -> Frame {
        let depth = girth.map_or(0, |g| g - 2);
        let layers = (0..depth)
            .map(|t| {
                let mut s = VecSet::empty(r);
                if t % 2 == 0 {
                    s.insert(0);
                }
                s
            })
            .collect();
        Frame {
            chosen: VecSet::empty(r),
            size: 0,
            cand: VecSet::empty(r),
            layers,
        }
    }

    /// Points that would close an odd cycle shorter than the girth bound.
    fn girth_forbidden(&self) -> Option<&VecSet> {
        self.layers.last()
    }
}

fn pg_blocked(chosen: &VecSet, r: usize, n: usize, through: &[u64], q: u64) -> bool {
    let mut allowed = chosen.clone();
    allowed.insert(0);
    allowed.insert(q);
    gf2::find_subspace_within(&allowed, r, through, n).is_some()
}

fn build_seeds(plan: &Plan, girth: Option<usize>, full_rank: bool) -> Vec<Seed> {
    let r = plan.r;
    if !plan.pruning {
        return vec![Seed {
            points: Vec::new(),
            girth,
            leaf_crit: plan.crit > 0,
            leaf_full_rank: full_rank,
        }];
    }
    if r == 0 {
        return Vec::new();
    }
    let unit = |i: usize| 1u64 << (r - i);
    if plan.crit >= 2 {
        let lo = girth.unwrap_or(3).max(3);
        (lo..=r + 1)
            .step_by(2)
            .map(|m| {
                let mut points: Vec<u64> = (1..m).map(unit).collect();
                points.push(points.iter().fold(0, |a, b| a ^ b));
                points.extend((m..=r).map(unit));
                Seed {
                    points,
                    girth: (m >= 5).then_some(m),
                    leaf_crit: plan.crit >= 3,
                    leaf_full_rank: false,
                }
            })
            .collect()
    } else {
        vec![Seed {
            points: (1..=r).map(unit).collect(),
            girth,
            leaf_crit: false,
            leaf_full_rank: false,
        }]
    }
}

/// Adds `p` to `parent`, writing the child state. `remaining` is the
/// parent's candidate set with `p` and earlier siblings already removed.
fn extend(plan: &Plan, parent: &Frame, remaining: &VecSet, p: u64, child: &mut Frame) {
    child.chosen.copy_from(&parent.chosen);
    child.chosen.insert(p);
    child.size = parent.size + 1;
    for t in (0..parent.layers.len()).rev() {
        child.layers[t].copy_from(&parent.layers[t]);
        if t > 0 {
            child.layers[t].union_translated(&parent.layers[t - 1], p);
        }
    }
    child.cand.copy_from(remaining);
    if let Some(forbidden) = child.girth_forbidden() {
        let forbidden = forbidden.clone();
        child.cand.difference_with(&forbidden);
    }
    if let Some(n) = plan.pg_order {
        // a new PG(n-1,2) through p and q needs p + q among the chosen points
        let mut risky = parent.chosen.translated(p);
        risky.intersect_with(&child.cand);
        for q in risky.iter() {
            if pg_blocked(&child.chosen, plan.r, n, &[p, q], q) {
                child.cand.remove(q);
            }
        }
    }
}

/// Root frame of a seed, or `None` if the seed itself violates a
/// hereditary constraint.
fn seed_frame(plan: &Plan, seed: &Seed) -> Option<Frame> {
    let r = plan.r;
    let mut frame = Frame::empty(r, seed.girth);
    let mut next = frame.clone();
    let mut all = VecSet::full(r);
    all.remove(0);
    for &p in &seed.points {
        if frame.girth_forbidden().is_some_and(|f| f.contains(p)) || frame.chosen.contains(p) {
            return None;
        }
        if let Some(n) = plan.pg_order {
            if pg_blocked(&frame.chosen, r, n, &[p], p) {
                return None;
            }
        }
        extend(plan, &frame, &VecSet::empty(r), p, &mut next);
        std::mem::swap(&mut frame, &mut next);
    }
    let mut cand = all;
    cand.difference_with(&frame.chosen);
    if let Some(f) = frame.girth_forbidden() {
        cand.difference_with(f);
    }
    if let Some(n) = plan.pg_order {
        for q in cand.clone().iter() {
            if pg_blocked(&frame.chosen, r, n, &[q], q) {
                cand.remove(q);
            }
        }
    }
    frame.cand = cand;
    Some(frame)
}

struct Engine<'a> {
    plan: &'a Plan,
    seed: &'a Seed,
    frames: Vec<Frame>,
    best: usize,
    witness: Option<VecSet>,
    nodes: u64,
    deadline: Deadline,
    timed_out: bool,
    shared: Option<&'a AtomicUsize>,
}

impl<'a> Engine<'a> {
    fn new(plan: &'a Plan, seed: &'a Seed, root: &Frame, deadline: Deadline) -> Self {
        Engine {
            plan,
            seed,
            frames: vec![root.clone()],
            best: 0,
            witness: None,
            nodes: 0,
            deadline,
            timed_out: false,
            shared: None,
        }
    }

    fn leaf_ok(&self, chosen: &VecSet) -> bool {
        if self.seed.leaf_full_rank && rank_raw(chosen, self.plan.r) < self.plan.r {
            return false;
        }
        !self.seed.leaf_crit || critical_number_raw(chosen, self.plan.r) >= self.plan.crit
    }

    fn hopeless(&self, potential: usize) -> bool {
        self.plan.pruning
            && (potential <= self.best
                || self
                    .shared
                    .is_some_and(|s| potential < s.load(Ordering::Relaxed)))
    }

    fn record(&mut self, depth: usize) {
        let f = &self.frames[depth];
        self.best = f.size;
        self.witness = Some(f.chosen.clone());
        if let Some(s) = self.shared {
            s.fetch_max(f.size, Ordering::Relaxed);
        }
    }

    /// Visits the node stored at `frames[depth]`. Returns false once the
    /// deadline has passed.
    fn visit(&mut self, depth: usize) -> bool {
        self.nodes += 1;
        if self.nodes.is_multiple_of(CHECK_DEADLINE_EVERY) && self.deadline.passed() {
            self.timed_out = true;
            return false;
        }
        let (size, cand_len) = {
            let f = &self.frames[depth];
            (f.size, f.cand.len())
        };
        if size > self.best && self.leaf_ok(&self.frames[depth].chosen) {
            self.record(depth);
        }
        if self.hopeless(size + cand_len) || cand_len == 0 {
            return true;
        }
        if self.plan.pruning && self.seed.leaf_crit {
            // critical number only grows with the point set
            let f = &self.frames[depth];
            let mut reach = f.chosen.clone();
            reach.union_with(&f.cand);
            if critical_number_raw(&reach, self.plan.r) < self.plan.crit {
                return true;
            }
        }
        self.children(depth)
    }

    fn children(&mut self, depth: usize) -> bool {
        if self.frames.len() <= depth + 1 {
            let template = self.frames[depth].clone();
            self.frames.push(template);
        }
        let mut remaining = self.frames[depth].cand.clone();
        while let Some(p) = remaining.last() {
            remaining.remove(p);
            if self.hopeless(self.frames[depth].size + 1 + remaining.len()) {
                break;
            }
            let (head, tail) = self.frames.split_at_mut(depth + 1);
            extend(self.plan, &head[depth], &remaining, p, &mut tail[0]);
            if !self.visit(depth + 1) {
                return false;
            }
        }
        true
    }

    /// Runs the subtree under `p`, the first-level child taken after removing
    /// the earlier siblings in `remaining`.
    fn run_task(&mut self, p: u64, remaining: &VecSet) -> bool {
        if self.frames.len() < 2 {
            let template = self.frames[0].clone();
            self.frames.push(template);
        }
        let (head, tail) = self.frames.split_at_mut(1);
        extend(self.plan, &head[0], remaining, p, &mut tail[0]);
        self.visit(1)
    }
}

struct TaskResult {
    best: usize,
    witness: Option<VecSet>,
    nodes: u64,
    timed_out: bool,
}

/// Exact maximum size of a point set of GF(2)^r satisfying `constraints`.
pub fn max_size(r: usize, constraints: &ConstraintSet, opts: &SearchOptions) -> Result<SearchReport> {
    constraints.validate(r)?;
    let started = Instant::now();
    let deadline = Deadline::new(opts.budget);
    let crit = constraints.critical_requirement();

    let empty_ok = crit == 0 && !(constraints.full_rank && r > 0);
    let report = |optimum: usize, witness: Option<VecSet>, nodes: u64, status: SearchStatus| {
        let witness = witness.map_or_else(
            || BinaryMatroid::empty(r).expect("rank validated"),
            |w| BinaryMatroid::from_raw(r, w),
        );
        SearchReport {
            rank: r,
            constraints: *constraints,
            method: SearchMethod::Direct,
            optimum,
            feasible: optimum > 0 || empty_ok,
            witness,
            nodes_explored: nodes,
            wall_time: started.elapsed(),
            status,
        }
    };
    if constraints.pg_free_order == Some(1) {
        return Ok(report(0, None, 1, SearchStatus::Complete));
    }

    // triangle-freeness is odd girth at least 5
    let mut girth = constraints.min_odd_girth;
    let mut pg_order = constraints.pg_free_order;
    if pg_order == Some(2) {
        girth = Some(girth.unwrap_or(5).max(5));
        pg_order = None;
    }
    if girth == Some(3) {
        girth = None;
    }
    let plan = Plan {
        r,
        crit,
        pg_order,
        pruning: opts.pruning,
    };
    let seeds = build_seeds(&plan, girth, constraints.full_rank);

    let mut best = 0usize;
    let mut witness: Option<VecSet> = None;
    let mut nodes = 0u64;
    let mut timed_out = false;

    // root nodes first, in order, so the first-found witness is well defined
    let mut roots: Vec<(usize, Frame)> = Vec::new();
    for (i, seed) in seeds.iter().enumerate() {
        let Some(frame) = seed_frame(&plan, seed) else { continue };
        nodes += 1;
        let probe = Engine::new(&plan, seed, &frame, deadline);
        if frame.size > best && probe.leaf_ok(&frame.chosen) {
            best = frame.size;
            witness = Some(frame.chosen.clone());
        }
        roots.push((i, frame));
    }

    let mut tasks: Vec<(usize, u64, VecSet)> = Vec::new();
    for (ri, (_, frame)) in roots.iter().enumerate() {
        let mut remaining = frame.cand.clone();
        while let Some(p) = remaining.last() {
            remaining.remove(p);
            tasks.push((ri, p, remaining.clone()));
        }
    }

    let threads = opts.threads.max(1);
    let results: Vec<TaskResult> = if threads == 1 {
        // one engine per root so `best` carries across tasks exactly like a
        // plain recursive search
        let mut out = Vec::with_capacity(tasks.len());
        let mut carried = best;
        let mut engines: Vec<Option<Engine>> = roots.iter().map(|_| None).collect();
        for (ri, p, remaining) in &tasks {
            let (si, frame) = &roots[*ri];
            let engine = engines[*ri].get_or_insert_with(|| Engine::new(&plan, &seeds[*si], frame, deadline));
            engine.best = carried;
            engine.witness = None;
            let nodes_before = engine.nodes;
            let potential = frame.size + 1 + remaining.len();
            let alive = if engine.hopeless(potential) {
                true
            } else {
                engine.run_task(*p, remaining)
            };
            carried = engine.best;
            out.push(TaskResult {
                best: engine.best,
                witness: engine.witness.take(),
                nodes: engine.nodes - nodes_before,
                timed_out: !alive,
            });
            if !alive {
                break;
            }
        }
        out
    } else {
        let shared = AtomicUsize::new(best);
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .expect("thread pool");
        let root_best = best;
        pool.install(|| {
            tasks
                .par_iter()
                .map(|(ri, p, remaining)| {
                    let (si, frame) = &roots[*ri];
                    let mut engine = Engine::new(&plan, &seeds[*si], frame, deadline);
                    engine.best = root_best;
                    engine.shared = Some(&shared);
                    let potential = frame.size + 1 + remaining.len();
                    let alive = engine.hopeless(potential) || engine.run_task(*p, remaining);
                    TaskResult {
                        best: engine.best,
                        witness: engine.witness,
                        nodes: engine.nodes,
                        timed_out: !alive,
                    }
                })
                .collect()
        })
    };

    for t in results {
        nodes += t.nodes;
        timed_out |= t.timed_out;
        if t.best > best {
            if let Some(w) = t.witness {
                best = t.best;
                witness = Some(w);
            }
        }
    }
    let status = if timed_out {
        SearchStatus::BudgetExhausted
    } else {
        SearchStatus::Complete
    };
    Ok(report(best, witness, nodes, status))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions;
    use crate::iso::is_isomorphic;

    fn girth_non_affine(k: usize) -> ConstraintSet {
        ConstraintSet {
            min_odd_girth: Some(k),
            forbid_affine: true,
            ..Default::default()
        }
    }

    #[test]
    fn critical_number_raw_matches_matroid() {
        for m in [
            constructions::pg(4).unwrap(),
            constructions::ag(4).unwrap(),
            constructions::circuit(5).unwrap(),
            constructions::bose_burton(5, 2).unwrap(),
        ] {
            assert_eq!(
                critical_number_raw(m.raw(), m.ambient_rank()),
                m.critical_number().0
            );
        }
    }

    #[test]
    fn odd_girth_five_rank_four() {
        let rep = max_size(4, &girth_non_affine(5), &SearchOptions::default()).unwrap();
        assert_eq!(rep.optimum, 5);
        assert!(rep.exhaustive());
        assert!(is_isomorphic(&rep.witness, &constructions::circuit(5).unwrap()));
    }

    #[test]
    fn no_odd_girth_five_witness_in_rank_three() {
        let rep = max_size(3, &girth_non_affine(5), &SearchOptions::default()).unwrap();
        assert_eq!(rep.optimum, 0);
        assert!(!rep.feasible);
        assert!(rep.exhaustive());
    }

    #[test]
    fn triangle_free_rank_four() {
        let c = ConstraintSet {
            pg_free_order: Some(2),
            ..Default::default()
        };
        let rep = max_size(4, &c, &SearchOptions::default()).unwrap();
        assert_eq!(rep.optimum, 8);
        assert!(is_isomorphic(&rep.witness, &constructions::ag(4).unwrap()));
    }

    #[test]
    fn fano_free_rank_four() {
        let c = ConstraintSet {
            pg_free_order: Some(3),
            ..Default::default()
        };
        let rep = max_size(4, &c, &SearchOptions::default()).unwrap();
        assert_eq!(rep.optimum, 12);
    }

    #[test]
    fn pg_free_order_one_leaves_empty_set() {
        let c = ConstraintSet {
            pg_free_order: Some(1),
            ..Default::default()
        };
        let rep = max_size(3, &c, &SearchOptions::default()).unwrap();
        assert_eq!(rep.optimum, 0);
        assert!(rep.feasible);
    }

    #[test]
    fn zero_budget_is_never_exhaustive() {
        let c = ConstraintSet {
            pg_free_order: Some(2),
            ..Default::default()
        };
        let opts = SearchOptions::with_budget(std::time::Duration::ZERO);
        let rep = max_size(6, &c, &opts).unwrap();
        assert_eq!(rep.status, SearchStatus::BudgetExhausted);
        assert!(!rep.exhaustive());
        assert_eq!(rep.witness.len(), rep.optimum);
    }
}
