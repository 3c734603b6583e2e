//! Exact decision procedure and feasible-set computation.

mod certify;
mod scan;
mod search;

pub use certify::{certify_noncolorable, CertifyOutcome};
pub use scan::{conjecture_scan, ConjectureCheck, ScanRecord, ScanReport, ScanStatus};
pub use search::MAX_COLORS;

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::bounds;
use crate::coloring::{EdgeColoring, SpectrumMode};
use crate::graph::Graph;
use search::{Limits, Search, SearchResult};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolverError {
    #[error("t must be positive")]
    ZeroColors,
    #[error("t = {0} exceeds the supported maximum of {MAX_COLORS} colors")]
    TooManyColors(usize),
}

pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

/// Search limits for a single `(G, t)` decision.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    pub time_limit: Option<Duration>,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_nodes: Some(DEFAULT_NODE_BUDGET), time_limit: None }
    }
}

impl Budget {
    pub fn nodes(max_nodes: u64) -> Self {
        Budget { max_nodes: Some(max_nodes), time_limit: None }
    }

    pub fn unlimited() -> Self {
        Budget { max_nodes: None, time_limit: None }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverConfig {
    pub budget: Budget,
    pub mode: SpectrumMode,
    /// Rotation, reflection and pendant-sibling symmetry breaking.
    pub symmetry_breaking: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig { budget: Budget::default(), mode: SpectrumMode::Cyclic, symmetry_breaking: true }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Decision {
    Feasible,
    Infeasible,
    Timeout,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolveOutcome {
    pub t: usize,
    pub decision: Decision,
    pub witness: Option<EdgeColoring>,
    pub nodes_explored: u64,
    #[serde(rename = "elapsed_ms", serialize_with = "millis")]
    pub elapsed: Duration,
}

fn millis<S: Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64() * 1e3)
}

/// Decides whether `g` has an interval cyclic `t`-coloring.
pub fn decide(g: &Graph, t: usize, budget: Budget) -> Result<SolveOutcome, SolverError> {
    decide_with(g, t, &SolverConfig { budget, ..SolverConfig::default() })
}

/// [`decide`] with an explicit spectrum mode and symmetry setting.
pub fn decide_with(g: &Graph, t: usize, config: &SolverConfig) -> Result<SolveOutcome, SolverError> {
    if t == 0 {
        return Err(SolverError::ZeroColors);
    }
    let start = Instant::now();
    let trivially_infeasible = g.edge_count() == 0 || t > g.edge_count() || t < g.max_degree();
    if trivially_infeasible {
        return Ok(SolveOutcome {
            t,
            decision: Decision::Infeasible,
            witness: None,
            nodes_explored: 0,
            elapsed: start.elapsed(),
        });
    }
    if t > MAX_COLORS {
        return Err(SolverError::TooManyColors(t));
    }
    let limits = Limits {
        max_nodes: config.budget.max_nodes,
        deadline: search::deadline(config.budget.time_limit),
    };
    let mut search = Search::new(g, t, config.mode, config.symmetry_breaking, limits);
    let result = search.run();
    let (decision, witness) = match result {
        SearchResult::Found(colors) => (Decision::Feasible, Some(search::witness(t, colors))),
        SearchResult::Exhausted => (Decision::Infeasible, None),
        SearchResult::OutOfBudget => (Decision::Timeout, None),
    };
    debug_assert!(witness.as_ref().is_none_or(|w| {
        crate::coloring::validate(g, w, config.mode).is_ok_and(|r| r.is_valid())
    }));
    Ok(SolveOutcome { t, decision, witness, nodes_explored: search.nodes(), elapsed: start.elapsed() })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FeasibleSetOptions {
    /// Caller cap on the largest `t` tried.
    pub t_hi: Option<usize>,
    /// Cap the range with the best closed-form upper bound. Disable when the
    /// result is used to test those bounds.
    pub use_bounds: bool,
    pub budget: Budget,
    /// Worker threads across distinct `t`; `1` is the sequential reference.
    pub jobs: usize,
}

impl Default for FeasibleSetOptions {
    fn default() -> Self {
        FeasibleSetOptions { t_hi: None, use_bounds: true, budget: Budget::default(), jobs: 1 }
    }
}

/// All `t` in the searched range admitting an interval cyclic `t`-coloring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FeasibleSet {
    pub range: (usize, usize),
    pub members: Vec<usize>,
    /// True iff every `t` in `range` was decided.
    pub exhausted: bool,
    pub witnesses: BTreeMap<usize, EdgeColoring>,
    /// Values of `t` whose search ran out of budget.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub undecided: Vec<usize>,
    #[serde(skip)]
    pub outcomes: Vec<SolveOutcome>,
}

impl FeasibleSet {
    pub fn min(&self) -> Option<usize> {
        self.members.first().copied()
    }

    pub fn max(&self) -> Option<usize> {
        self.members.last().copied()
    }

    /// Members form one contiguous run of integers.
    pub fn is_gap_free(&self) -> bool {
        match (self.min(), self.max()) {
            (Some(lo), Some(hi)) => hi - lo + 1 == self.members.len(),
            _ => true,
        }
    }

    pub fn total_nodes(&self) -> u64 {
        self.outcomes.iter().map(|o| o.nodes_explored).sum()
    }
}

/// Range of `t` values searched by [`feasible_set`].
pub fn search_range(g: &Graph, options: &FeasibleSetOptions) -> (usize, usize) {
    let lo = g.max_degree().max(1);
    let mut hi = g.edge_count();
    if let Some(cap) = options.t_hi {
        hi = hi.min(cap);
    }
    if options.use_bounds {
        hi = hi.min(bounds::report(g).best_upper);
    }
    (lo, hi)
}

pub fn feasible_set(g: &Graph, options: &FeasibleSetOptions) -> Result<FeasibleSet, SolverError> {
    let (lo, hi) = search_range(g, options);
    let ts: Vec<usize> = (lo..=hi).collect();
    let run = |t: usize| decide(g, t, options.budget);
    let outcomes: Vec<SolveOutcome> = if options.jobs > 1 && ts.len() > 1 {
        use rayon::prelude::*;
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(options.jobs)
            .build()
            .expect("thread pool construction");
        pool.install(|| ts.par_iter().map(|&t| run(t)).collect::<Result<_, _>>())?
    } else {
        ts.iter().map(|&t| run(t)).collect::<Result<_, _>>()?
    };

    let mut members = Vec::new();
    let mut witnesses = BTreeMap::new();
    let mut undecided = Vec::new();
    for o in &outcomes {
        match o.decision {
            Decision::Feasible => {
                members.push(o.t);
                witnesses.insert(o.t, o.witness.clone().expect("feasible outcomes carry a witness"));
            }
            Decision::Timeout => undecided.push(o.t),
            Decision::Infeasible => {}
        }
    }
    Ok(FeasibleSet {
        range: (lo, hi),
        members,
        exhausted: undecided.is_empty(),
        witnesses,
        undecided,
        outcomes,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Extremal {
    /// Smallest feasible `t`.
    pub least: Option<usize>,
    /// Largest feasible `t`.
    pub greatest: Option<usize>,
    /// False when some `t` timed out; the values are then partial.
    pub exhausted: bool,
}

/// Least and greatest feasible `t`; both `None` when no `t` in the bounded
/// range is feasible.
pub fn extremal(g: &Graph, options: &FeasibleSetOptions) -> Result<Extremal, SolverError> {
    let fs = feasible_set(g, options)?;
    Ok(Extremal { least: fs.min(), greatest: fs.max(), exhausted: fs.exhausted })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::validate_cyclic;
    use crate::graph::*;

    fn quick() -> Budget {
        Budget::nodes(5_000_000)
    }

    #[test]
    fn decide_examples() {
        let c5 = make_cycle(5).unwrap();
        assert_eq!(decide(&c5, 4, quick()).unwrap().decision, Decision::Infeasible);
        let o = decide(&c5, 5, quick()).unwrap();
        assert_eq!(o.decision, Decision::Feasible);
        assert!(validate_cyclic(&c5, o.witness.as_ref().unwrap()).unwrap().is_valid());

        let k113 = make_complete_tripartite(1, 1, 3).unwrap();
        assert_eq!(decide(&k113, 4, quick()).unwrap().decision, Decision::Infeasible);
        assert_eq!(decide(&k113, 5, quick()).unwrap().decision, Decision::Feasible);
    }

    #[test]
    fn decide_errors_and_trivial_cases() {
        let c5 = make_cycle(5).unwrap();
        assert_eq!(decide(&c5, 0, quick()), Err(SolverError::ZeroColors));
        assert_eq!(decide(&c5, 6, quick()).unwrap().decision, Decision::Infeasible);
        assert_eq!(decide(&c5, 1, quick()).unwrap().decision, Decision::Infeasible);
        let big = make_complete_bipartite(12, 12).unwrap();
        assert_eq!(decide(&big, 130, quick()), Err(SolverError::TooManyColors(130)));
        let empty = make_complete(3).unwrap().remove_vertices(&[0, 1, 2]).0;
        assert_eq!(decide(&empty, 1, quick()).unwrap().decision, Decision::Infeasible);
    }

    #[test]
    fn budget_exhaustion_is_timeout() {
        let k7 = make_complete(7).unwrap();
        let o = decide(&k7, 8, Budget::nodes(1000)).unwrap();
        assert_eq!(o.decision, Decision::Timeout);
        assert!(o.witness.is_none());
        let o = decide(&k7, 8, Budget { max_nodes: None, time_limit: Some(Duration::ZERO) });
        assert_eq!(o.unwrap().decision, Decision::Timeout);
    }

    #[test]
    fn feasible_set_examples() {
        let fs = feasible_set(&make_cycle(4).unwrap(), &FeasibleSetOptions::default()).unwrap();
        assert_eq!(fs.members, vec![2, 3, 4]);
        assert!(fs.exhausted);
        let fs = feasible_set(&make_cycle(6).unwrap(), &FeasibleSetOptions::default()).unwrap();
        assert_eq!(fs.members, vec![2, 3, 4, 6]);
        assert!(!fs.is_gap_free());
        let fs = feasible_set(&make_hypercube(3).unwrap(), &FeasibleSetOptions::default()).unwrap();
        assert_eq!(fs.members, (3..=8).collect::<Vec<_>>());
        assert!(fs.is_gap_free());
        for (t, w) in &fs.witnesses {
            assert_eq!(w.t, *t);
        }
    }

    #[test]
    fn extremal_examples() {
        let opts = FeasibleSetOptions::default();
        let e = extremal(&make_path(5).unwrap(), &opts).unwrap();
        assert_eq!((e.least, e.greatest), (Some(2), Some(4)));
        let e = extremal(&make_complete(4).unwrap(), &opts).unwrap();
        assert_eq!((e.least, e.greatest), (Some(3), Some(4)));
        let fs = feasible_set(&make_cycle(7).unwrap(), &opts).unwrap();
        assert_eq!(fs.members, vec![3, 5, 7]);
    }

    #[test]
    fn jobs_do_not_change_members() {
        let g = make_complete_bipartite(3, 3).unwrap();
        let seq = feasible_set(&g, &FeasibleSetOptions::default()).unwrap();
        let par = feasible_set(&g, &FeasibleSetOptions { jobs: 4, ..Default::default() }).unwrap();
        assert_eq!(seq.members, par.members);
        assert_eq!(seq.range, par.range);
    }

    #[test]
    fn sequential_runs_are_identical() {
        let g = make_complete_tripartite(1, 2, 2).unwrap();
        let a = feasible_set(&g, &FeasibleSetOptions::default()).unwrap();
        let b = feasible_set(&g, &FeasibleSetOptions::default()).unwrap();
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    }

    #[test]
    fn feasible_set_json_shape() {
        let fs = feasible_set(&make_cycle(5).unwrap(), &FeasibleSetOptions::default()).unwrap();
        let v: serde_json::Value = serde_json::to_value(&fs).unwrap();
        assert_eq!(v["range"], serde_json::json!([2, 5]));
        assert_eq!(v["members"], serde_json::json!([3, 5]));
        assert_eq!(v["exhausted"], serde_json::json!(true));
        assert!(v["witnesses"]["3"]["colors"].is_array());
        assert!(v.get("undecided").is_none());
    }

    #[test]
    fn interval_mode() {
        let config = SolverConfig { mode: SpectrumMode::Interval, ..SolverConfig::default() };
        // C_4 has interval colorings only for t = 2, 3; t = 4 needs a wrap
        let c4 = make_cycle(4).unwrap();
        let ok: Vec<Decision> =
            (2..=4).map(|t| decide_with(&c4, t, &config).unwrap().decision).collect();
        assert_eq!(ok, vec![Decision::Feasible, Decision::Feasible, Decision::Infeasible]);
        // odd cycles are not interval colorable
        let c5 = make_cycle(5).unwrap();
        assert!((2..=5).all(|t| decide_with(&c5, t, &config).unwrap().decision == Decision::Infeasible));
    }
}
