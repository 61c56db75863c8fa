use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{max_size, max_size_complement, ConstraintSet, SearchOptions, SearchReport};
use crate::constructions;
use crate::error::{Error, Result};
use crate::matroid::BinaryMatroid;

/// Largest complement size for which verification prefers the complement
/// search.
pub const COMPLEMENT_WINDOW: usize = 16;

/// The three extremal statements checked at small rank.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Theorem {
    /// Non-affine and no odd circuit shorter than `k` forces
    /// `|M| ≤ k·2^(r-k+1)`.
    Main,
    /// PG(n-1,2)-free forces `|M| ≤ (1 - 1/2^(n-1))·2^r`.
    BoseBurton,
    /// PG(n-1,2)-free with critical number at least `n` forces
    /// `|M| ≤ (1 - 11/2^(n+2))·2^r`.
    Gs,
}

impl Theorem {
    pub fn name(self) -> &'static str {
        match self {
            Theorem::Main => "main",
            Theorem::BoseBurton => "bose-burton",
            Theorem::Gs => "gs",
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "main" => Ok(Theorem::Main),
            "bose-burton" | "bb" => Ok(Theorem::BoseBurton),
            "gs" => Ok(Theorem::Gs),
            _ => Err(Error::InvalidParameter(format!("unknown theorem `{s}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremParams {
    pub k: Option<usize>,
    pub n: Option<usize>,
    pub r: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VerifyOutcome {
    Pass,
    Violation,
    Inconclusive,
}

#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub theorem: Theorem,
    pub params: TheoremParams,
    pub bound: usize,
    pub construction_size: usize,
    pub construction_ok: bool,
    pub witness_ok: bool,
    pub outcome: VerifyOutcome,
    pub search: SearchReport,
}

fn invalid(msg: &str) -> Error {
    Error::InvalidParameter(msg.into())
}

fn need(v: Option<usize>, name: &str) -> Result<usize> {
    v.ok_or_else(|| Error::InvalidParameter(format!("missing parameter {name}")))
}

/// The closed-form bound together with the hypotheses as constraints.
pub fn theorem_bound(theorem: Theorem, p: TheoremParams) -> Result<(usize, ConstraintSet)> {
    let r = p.r;
    match theorem {
        Theorem::Main => {
            let k = need(p.k, "k")?;
            if k < 5 || k % 2 == 0 {
                return Err(invalid("k must be odd and ≥ 5"));
            }
            if r + 1 < k {
                return Err(invalid("main needs r ≥ k − 1"));
            }
            let c = ConstraintSet {
                min_odd_girth: Some(k),
                forbid_affine: true,
                ..Default::default()
            };
            Ok((k << (r + 1 - k), c))
        }
        Theorem::BoseBurton => {
            let n = need(p.n, "n")?;
            if n < 2 || r < n {
                return Err(invalid("bose-burton needs r ≥ n ≥ 2"));
            }
            let c = ConstraintSet {
                pg_free_order: Some(n),
                ..Default::default()
            };
            Ok(((1 << r) - (1 << (r + 1 - n)), c))
        }
        Theorem::Gs => {
            let n = need(p.n, "n")?;
            if n < 2 || r < n + 2 {
                return Err(invalid("gs needs r − 2 ≥ n ≥ 2"));
            }
            let c = ConstraintSet {
                pg_free_order: Some(n),
                min_critical: Some(n),
                ..Default::default()
            };
            Ok(((1 << r) - (11 << (r - n - 2)), c))
        }
    }
}

fn construction(theorem: Theorem, p: TheoremParams) -> Result<BinaryMatroid> {
    match theorem {
        Theorem::Main => constructions::extremal_odd_girth(need(p.k, "k")?, p.r),
        Theorem::BoseBurton => constructions::bose_burton(p.r, need(p.n, "n")? - 1),
        Theorem::Gs => constructions::extremal_gs(need(p.n, "n")?, p.r),
    }
}

/// Searches for the extremal number, compares it with the bound, and checks
/// that the matching construction attains the bound.
///
/// A pass requires an exhaustive search; a budget overrun is inconclusive
/// unless the best set found already exceeds the bound.
pub fn verify_theorem(theorem: Theorem, params: TheoremParams, opts: &SearchOptions) -> Result<VerifyReport> {
    let (bound, constraints) = theorem_bound(theorem, params)?;
    let r = params.r;
    let built = construction(theorem, params)?;
    let construction_ok = built.len() == bound && constraints.is_satisfied_by(&built);

    let blocker = (1usize << r) - 1 - bound;
    let search = if constraints.pg_free_order.is_some() && blocker <= COMPLEMENT_WINDOW {
        max_size_complement(r, &constraints, blocker, opts)?
    } else {
        max_size(r, &constraints, opts)?
    };
    let witness_ok = search.witness.len() == search.optimum
        && (!search.feasible || constraints.is_satisfied_by(&search.witness));

    let outcome = if !witness_ok || !construction_ok || (witness_ok && search.optimum > bound) {
        VerifyOutcome::Violation
    } else if !search.exhaustive() {
        VerifyOutcome::Inconclusive
    } else if search.optimum == bound {
        VerifyOutcome::Pass
    } else {
        VerifyOutcome::Violation
    };
    Ok(VerifyReport {
        theorem,
        params,
        bound,
        construction_size: built.len(),
        construction_ok,
        witness_ok,
        outcome,
        search,
    })
}
