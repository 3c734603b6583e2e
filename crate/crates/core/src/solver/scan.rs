use serde::Serialize;

use super::{feasible_set, FeasibleSetOptions, SolverError};
use crate::graph::{metrics, Graph};

/// One conjectured upper bound on the largest feasible `t`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureCheck {
    /// The premises (connectivity, triangle-freeness, ...) hold.
    pub applies: bool,
    pub bound: usize,
    pub holds: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ScanStatus {
    Decided,
    /// No `t` in the bounded range is feasible.
    NotColorable,
    /// Some `t` timed out.
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanRecord {
    pub name: String,
    pub vertex_count: usize,
    pub edge_count: usize,
    pub status: ScanStatus,
    pub members: Vec<usize>,
    pub w_c: Option<usize>,
    #[serde(rename = "W_c")]
    pub big_w_c: Option<usize>,
    pub gap_free: Option<bool>,
    /// `W_c <= |V|` for connected triangle-free graphs.
    pub triangle_free_vertex_bound: Option<ConjectureCheck>,
    /// `W_c <= 2|V| - 3` for connected graphs on at least two vertices.
    pub general_vertex_bound: Option<ConjectureCheck>,
}

impl ScanRecord {
    pub fn is_counterexample(&self) -> bool {
        [&self.triangle_free_vertex_bound, &self.general_vertex_bound]
            .into_iter()
            .flatten()
            .any(|c| c.applies && !c.holds)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub records: Vec<ScanRecord>,
    /// Names of graphs violating a conjectured bound.
    pub counterexamples: Vec<String>,
    pub skipped: Vec<String>,
}

/// Computes feasible sets over a named corpus and checks both conjectured
/// vertex bounds on the largest feasible `t`.
pub fn conjecture_scan(
    corpus: &[(String, Graph)],
    options: &FeasibleSetOptions,
) -> Result<ScanReport, SolverError> {
    let mut records = Vec::with_capacity(corpus.len());
    for (name, g) in corpus {
        records.push(scan_one(name, g, options)?);
    }
    let counterexamples = records.iter().filter(|r| r.is_counterexample()).map(|r| r.name.clone()).collect();
    let skipped =
        records.iter().filter(|r| r.status == ScanStatus::Skipped).map(|r| r.name.clone()).collect();
    Ok(ScanReport { records, counterexamples, skipped })
}

fn scan_one(name: &str, g: &Graph, options: &FeasibleSetOptions) -> Result<ScanRecord, SolverError> {
    let fs = feasible_set(g, options)?;
    let m = metrics(g);
    let n = g.vertex_count();
    let mut record = ScanRecord {
        name: name.to_string(),
        vertex_count: n,
        edge_count: g.edge_count(),
        status: ScanStatus::Skipped,
        members: fs.members.clone(),
        w_c: None,
        big_w_c: None,
        gap_free: None,
        triangle_free_vertex_bound: None,
        general_vertex_bound: None,
    };
    if !fs.exhausted {
        return Ok(record);
    }
    let Some(top) = fs.max() else {
        record.status = ScanStatus::NotColorable;
        return Ok(record);
    };
    record.status = ScanStatus::Decided;
    record.w_c = fs.min();
    record.big_w_c = Some(top);
    record.gap_free = Some(fs.is_gap_free());
    let connected = m.is_connected();
    record.triangle_free_vertex_bound =
        Some(ConjectureCheck { applies: connected && m.is_triangle_free, bound: n, holds: top <= n });
    let bound = (2 * n).saturating_sub(3);
    record.general_vertex_bound =
        Some(ConjectureCheck { applies: connected && n >= 2, bound, holds: top <= bound });
    Ok(record)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::*;

    #[test]
    fn cycles() {
        let corpus: Vec<(String, Graph)> =
            (3..=10).map(|n| (format!("C{n}"), make_cycle(n).unwrap())).collect();
        let report = conjecture_scan(&corpus, &FeasibleSetOptions::default()).unwrap();
        assert!(report.counterexamples.is_empty());
        assert!(report.skipped.is_empty());
        for (r, n) in report.records.iter().zip(3..) {
            assert_eq!(r.big_w_c, Some(n));
            let formula = crate::bounds::cycle_feasible_set(n).unwrap();
            let contiguous = formula.len() == formula.last().unwrap() - formula.first().unwrap() + 1;
            assert_eq!(r.gap_free, Some(contiguous), "C{n}");
            if n % 2 == 1 && n > 3 {
                assert_eq!(r.gap_free, Some(false));
            }
        }
    }

    #[test]
    fn complete_four() {
        let corpus = vec![("K4".to_string(), make_complete(4).unwrap())];
        let report = conjecture_scan(&corpus, &FeasibleSetOptions::default()).unwrap();
        let r = &report.records[0];
        assert_eq!((r.big_w_c, r.gap_free), (Some(4), Some(true)));
        let c2 = r.general_vertex_bound.as_ref().unwrap();
        assert!(c2.applies && c2.holds && c2.bound == 5);
        assert!(!r.triangle_free_vertex_bound.as_ref().unwrap().applies);
    }

    #[test]
    fn small_trees_are_gap_free() {
        let corpus: Vec<(String, Graph)> = (2..=7)
            .flat_map(|n| trees(n).into_iter().enumerate().map(move |(i, t)| (format!("T{n}.{i}"), t)))
            .collect();
        let report = conjecture_scan(&corpus, &FeasibleSetOptions::default()).unwrap();
        assert!(report.records.iter().all(|r| r.gap_free == Some(true)));
    }

    #[test]
    fn timeouts_are_skipped() {
        let corpus = vec![("K7".to_string(), make_complete(7).unwrap())];
        let opts = FeasibleSetOptions { budget: super::super::Budget::nodes(5), ..Default::default() };
        let report = conjecture_scan(&corpus, &opts).unwrap();
        assert_eq!(report.skipped, vec!["K7".to_string()]);
        assert_eq!(report.records[0].status, ScanStatus::Skipped);
    }
}
