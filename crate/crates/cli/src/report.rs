//! JSON report shapes. Field names are stable; the schemas under `schema/`
//! describe them.

use binmat::search::{
    ConstraintSet, SearchMethod, SearchReport, SearchStatus, Theorem, TheoremParams, VerifyOutcome,
    VerifyReport,
};
use binmat::BinaryMatroid;
use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct MatroidJson {
    pub rank: usize,
    pub points: Vec<String>,
}

impl From<&BinaryMatroid> for MatroidJson {
    fn from(m: &BinaryMatroid) -> Self {
        MatroidJson {
            rank: m.ambient_rank(),
            points: m.to_bit_strings(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AnalysisReport {
    pub rank: usize,
    pub size: usize,
    /// Dimension of the span of the points.
    pub matroid_rank: usize,
    pub full_rank: bool,
    /// `null` when there is no odd circuit.
    pub odd_girth: Option<usize>,
    pub affine: bool,
    pub critical_number: usize,
    /// Largest `n` with a PG(n-1,2)-restriction; 0 for the empty matroid.
    pub max_pg_order: usize,
    /// Every `n` in `1..=rank` for which the matroid is PG(n-1,2)-free.
    pub pg_free_orders: Vec<usize>,
    /// Functionals, as binary strings, whose cocycles cover the points.
    pub witness_cover: Vec<String>,
}

impl AnalysisReport {
    pub fn new(m: &BinaryMatroid) -> Self {
        let r = m.ambient_rank();
        let (critical_number, cover) = m.critical_number();
        let mut max_pg_order = 0;
        for n in 1..=r {
            if m.has_pg_restriction(n).expect("n within rank") {
                max_pg_order = n;
            } else {
                break;
            }
        }
        AnalysisReport {
            rank: r,
            size: m.len(),
            matroid_rank: m.rank(),
            full_rank: m.is_full_rank(),
            odd_girth: m.odd_girth().finite(),
            affine: m.is_affine(),
            critical_number,
            max_pg_order,
            pg_free_orders: (max_pg_order + 1..=r).collect(),
            witness_cover: cover.functionals.iter().map(|f| f.to_bit_string(r)).collect(),
        }
    }

    pub fn to_table(&self) -> String {
        let girth = self
            .odd_girth
            .map_or_else(|| "infinite (none)".to_string(), |g| g.to_string());
        let free = if self.pg_free_orders.is_empty() {
            "-".to_string()
        } else {
            self.pg_free_orders
                .iter()
                .map(|n| n.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        };
        let rows = [
            ("ambient rank", self.rank.to_string()),
            ("size", self.size.to_string()),
            ("rank", self.matroid_rank.to_string()),
            ("full rank", self.full_rank.to_string()),
            ("odd girth", girth),
            ("affine", self.affine.to_string()),
            ("critical number", self.critical_number.to_string()),
            ("largest PG order", self.max_pg_order.to_string()),
            ("PG(n-1,2)-free for n", free),
            ("cocycle cover", self.witness_cover.join(" ")),
        ];
        let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        rows.iter()
            .map(|(k, v)| format!("{k:<width$}  {v}\n"))
            .collect()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchJson {
    pub rank: usize,
    pub constraints: ConstraintSet,
    pub method: SearchMethod,
    pub optimum: usize,
    pub feasible: bool,
    pub witness: MatroidJson,
    pub nodes_explored: u64,
    /// Seconds.
    pub wall_time: f64,
    pub exhaustive: bool,
    pub status: SearchStatus,
}

impl From<&SearchReport> for SearchJson {
    fn from(r: &SearchReport) -> Self {
        SearchJson {
            rank: r.rank,
            constraints: r.constraints,
            method: r.method,
            optimum: r.optimum,
            feasible: r.feasible,
            witness: (&r.witness).into(),
            nodes_explored: r.nodes_explored,
            wall_time: r.wall_time.as_secs_f64(),
            exhaustive: r.exhaustive(),
            status: r.status,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyJson {
    pub theorem: Theorem,
    pub params: TheoremParams,
    pub bound: usize,
    pub optimum: usize,
    pub construction_size: usize,
    pub construction_ok: bool,
    pub witness_ok: bool,
    pub outcome: VerifyOutcome,
    pub search: SearchJson,
}

impl From<&VerifyReport> for VerifyJson {
    fn from(r: &VerifyReport) -> Self {
        VerifyJson {
            theorem: r.theorem,
            params: r.params,
            bound: r.bound,
            optimum: r.search.optimum,
            construction_size: r.construction_size,
            construction_ok: r.construction_ok,
            witness_ok: r.witness_ok,
            outcome: r.outcome,
            search: (&r.search).into(),
        }
    }
}
