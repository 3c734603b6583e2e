use serde::Serialize;

use super::{decide, Budget, Decision, SolverError};
use crate::bounds;
use crate::coloring::EdgeColoring;
use crate::graph::Graph;
use crate::noncolorable::{
    kstar_certificate, tree_hat_certificate, Certificate, GraphSummary, KstarShape, Premise, Rule,
    TranscriptEntry, TranscriptStatus, CONCLUSION,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum CertifyOutcome {
    Witness { coloring: EdgeColoring },
    Certified { certificate: Certificate },
    /// Some `t` timed out; the certificate carries no conclusion.
    Inconclusive { certificate: Certificate },
}

/// Either a coloring of `g` or a certificate that none exists.
///
/// Recognized analytic families are tried first. Otherwise every `t` from
/// `max(Delta, 1)` up to the best closed-form upper bound is searched in
/// ascending order, skipping values excluded by parity.
pub fn certify_noncolorable(g: &Graph, budget: Budget) -> Result<CertifyOutcome, SolverError> {
    if let Some(certificate) = analytic(g) {
        return Ok(CertifyOutcome::Certified { certificate });
    }
    let report = bounds::report(g);
    let lo = g.max_degree().max(1);
    let hi = report.best_upper;
    let mut transcripts = Vec::new();
    for t in lo..=hi {
        if report.excluded_t.excludes(t) {
            transcripts.push(TranscriptEntry { t, status: TranscriptStatus::ExcludedByParity, nodes_explored: 0 });
            continue;
        }
        let o = decide(g, t, budget)?;
        let status = match o.decision {
            Decision::Feasible => {
                return Ok(CertifyOutcome::Witness { coloring: o.witness.expect("feasible outcomes carry a witness") })
            }
            Decision::Infeasible => TranscriptStatus::Infeasible,
            Decision::Timeout => TranscriptStatus::Timeout,
        };
        transcripts.push(TranscriptEntry { t, status, nodes_explored: o.nodes_explored });
    }
    let complete = transcripts.iter().all(|e| e.status != TranscriptStatus::Timeout);
    let premises = vec![
        Premise::computed("searched range", format!("[{lo}, {hi}]"), format!("covers [max(Delta, 1), {hi}]"), true),
        Premise::computed("upper end", hi, "= best closed-form upper bound (|E| included)", true),
    ];
    let certificate = Certificate {
        rule: Rule::ExhaustiveSearch,
        graph: GraphSummary::of(g),
        premises,
        conclusion: complete.then(|| CONCLUSION.to_string()),
        notes: Vec::new(),
        transcripts,
    };
    Ok(if complete {
        CertifyOutcome::Certified { certificate }
    } else {
        CertifyOutcome::Inconclusive { certificate }
    })
}

fn analytic(g: &Graph) -> Option<Certificate> {
    if let Some(shape) = KstarShape::find(g) {
        if let Ok(c) = kstar_certificate(g, &shape) {
            return Some(c);
        }
    }
    // apex candidates: vertices whose removal leaves a tree
    let n = g.vertex_count();
    if n >= 3 && g.edge_count() >= n {
        for apex in 0..n {
            if g.edge_count() - g.degree(apex) != n - 2 {
                continue;
            }
            if let Ok(c) = tree_hat_certificate(g, apex) {
                return Some(c);
            }
        }
    }
    None
}
