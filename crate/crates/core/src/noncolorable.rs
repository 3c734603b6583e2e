//! Graphs with no interval cyclic coloring, each shipped with a certificate
//! whose premises are recomputed from the emitted graph.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::bounds;
use crate::coloring::SpectrumMode;
use crate::graph::{make_kstar, make_tree_hat, Graph, GraphError};
use crate::solver::{self, Budget, Decision, SolverConfig};

/// Node budget per `t` when checking that the clique-plus-pendant core of a
/// `K*` graph has no interval coloring.
const CORE_SEARCH_NODES: u64 = 2_000_000;

pub const CONCLUSION: &str = "no interval cyclic t-coloring exists for any t";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    TreeHat,
    Kstar,
    #[serde(rename = "kstar-511")]
    Kstar511,
    ExhaustiveSearch,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rule::TreeHat => "tree-hat",
            Rule::Kstar => "kstar",
            Rule::Kstar511 => "kstar-511",
            Rule::ExhaustiveSearch => "exhaustive-search",
        })
    }
}

/// How a premise value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Basis {
    Computed,
    /// Exhaustive search over every admissible `t`.
    Search,
    /// Known result; the search was not completed within budget.
    Cited,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Premise {
    pub name: String,
    pub value: String,
    pub required: String,
    pub pass: bool,
    pub basis: Basis,
}

impl Premise {
    pub(crate) fn computed(name: &str, value: impl ToString, required: impl Into<String>, pass: bool) -> Self {
        Premise {
            name: name.into(),
            value: value.to_string(),
            required: required.into(),
            pass,
            basis: Basis::Computed,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TranscriptStatus {
    Infeasible,
    Timeout,
    ExcludedByParity,
}

/// Outcome of the search at one `t`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TranscriptEntry {
    pub t: usize,
    pub status: TranscriptStatus,
    pub nodes_explored: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphSummary {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub max_degree: usize,
}

impl GraphSummary {
    pub fn of(g: &Graph) -> Self {
        GraphSummary { vertex_count: g.vertex_count(), edge_count: g.edge_count(), max_degree: g.max_degree() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub rule: Rule,
    pub graph: GraphSummary,
    pub premises: Vec<Premise>,
    /// Present only when every premise passes, or the transcript covers the
    /// whole bounded range without a timeout.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub conclusion: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub transcripts: Vec<TranscriptEntry>,
}

impl Certificate {
    pub fn is_conclusive(&self) -> bool {
        self.conclusion.is_some()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes") + "\n"
    }

    fn from_premises(rule: Rule, g: &Graph, premises: Vec<Premise>, notes: Vec<String>) -> Result<Self, Rejection> {
        if premises.iter().all(|p| p.pass) {
            Ok(Certificate {
                rule,
                graph: GraphSummary::of(g),
                premises,
                conclusion: Some(CONCLUSION.into()),
                notes,
                transcripts: Vec::new(),
            })
        } else {
            Err(Rejection { rule, graph: g.clone(), premises })
        }
    }
}

/// A construction whose premises did not all hold. Makes no claim about the
/// colorability of `graph`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Rejection {
    pub rule: Rule,
    #[serde(skip)]
    pub graph: Graph,
    pub premises: Vec<Premise>,
}

impl Rejection {
    pub fn failed(&self) -> impl Iterator<Item = &Premise> {
        self.premises.iter().filter(|p| !p.pass)
    }
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} premises failed:", self.rule)?;
        for p in self.failed() {
            write!(f, " {} = {} (need {});", p.name, p.value, p.required)?;
        }
        Ok(())
    }
}

#[derive(Debug, Error)]
pub enum NoncolorableError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("{0}")]
    Rejected(Box<Rejection>),
    #[error(
        "no construction for maximum degree {0}: degree <= 3 graphs are always colorable, \
         and existence for 4 <= degree <= 11 is open"
    )]
    DegreeTooSmall(usize),
}

impl From<Rejection> for NoncolorableError {
    fn from(r: Rejection) -> Self {
        NoncolorableError::Rejected(Box::new(r))
    }
}

/// `T` plus an apex on its leaves, certified when `|L(T)| >= 2(M(T) + 2)`.
pub fn build_certified_tree_hat(tree: &Graph) -> Result<(Graph, Certificate), NoncolorableError> {
    let hat = make_tree_hat(tree)?;
    let apex = tree.vertex_count();
    let cert = tree_hat_certificate(&hat, apex)?;
    Ok((hat, cert))
}

/// `K_{2n+1}^{*m}`, certified when `n >= 2, m >= 6n` or `(n, m) = (2, 11)`.
pub fn build_certified_kstar(n: usize, m: usize) -> Result<(Graph, Certificate), NoncolorableError> {
    let g = make_kstar(n, m)?;
    let shape = KstarShape::find(&g).expect("generated K* graph has its own shape");
    let cert = kstar_certificate(&g, &shape)?;
    Ok((g, cert))
}

/// A certified connected graph of maximum degree `d`.
pub fn noncolorable_for_degree(d: usize) -> Result<(Graph, Certificate), NoncolorableError> {
    if d < 12 {
        return Err(NoncolorableError::DegreeTooSmall(d));
    }
    let (g, mut cert) = build_certified_kstar(2, d - 1)?;
    let delta = crate::graph::metrics(&g).max_degree;
    let premise = Premise::computed("max degree", delta, format!("= {d}"), delta == d);
    let pass = premise.pass;
    cert.premises.push(premise);
    if !pass {
        return Err(Rejection { rule: cert.rule, graph: g, premises: cert.premises }.into());
    }
    Ok((g, cert))
}

/// Certificate for `hat`, read as a tree plus `apex`.
pub fn tree_hat_certificate(hat: &Graph, apex: usize) -> Result<Certificate, Rejection> {
    let (tree, old_of_new) = hat.remove_vertices(&[apex]);
    let is_tree = tree.is_tree() && tree.vertex_count() >= 2;
    let mut premises = vec![Premise::computed("tree after removing apex", is_tree, "true", is_tree)];
    if !is_tree {
        return Err(Rejection { rule: Rule::TreeHat, graph: hat.clone(), premises });
    }
    let leaves: Vec<usize> = tree.leaves().into_iter().map(|v| old_of_new[v]).collect();
    let mut apex_nbrs: Vec<usize> = hat.neighbors(apex).collect();
    apex_nbrs.sort_unstable();
    let joins_leaves = apex_nbrs == leaves;
    premises.push(Premise::computed("apex joined exactly to the leaves", joins_leaves, "true", joins_leaves));

    let l = leaves.len();
    let m = bounds::tree_m(&tree).expect("checked to be a tree");
    premises.push(Premise::computed("leaf count |L(T)|", l, "", true));
    premises.push(Premise::computed("M(T)", m, "", true));
    premises.push(Premise::computed(
        "|L(T)| >= 2(M(T) + 2)",
        format!("{l} >= {}", 2 * (m + 2)),
        "true",
        l >= 2 * (m + 2),
    ));

    let mut notes = Vec::new();
    let leaf_dist = tree.bfs_distances(tree.leaves()[0]);
    if tree.leaves().iter().all(|&v| leaf_dist[v].is_some_and(|d| d % 2 == 0)) {
        notes.push(
            "all leaf-to-leaf distances in T are even, so the graph is bipartite \
             and still has no interval cyclic coloring"
                .into(),
        );
    }
    Certificate::from_premises(Rule::TreeHat, hat, premises, notes)
}

/// Positions of the parts of a `K_{2n+1}^{*m}` graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KstarShape {
    pub n: usize,
    pub m: usize,
    pub hub: usize,
    pub attach: usize,
    pub clique: Vec<usize>,
    pub leaves: Vec<usize>,
}

impl KstarShape {
    /// Recognizes a complete graph of odd order with a pendant hub carrying
    /// every leaf of the graph.
    pub fn find(g: &Graph) -> Option<Self> {
        let leaves = g.leaves();
        let first = *leaves.first()?;
        let hub = g.neighbors(first).next()?;
        if leaves.iter().any(|&w| g.neighbors(w).next() != Some(hub)) {
            return None;
        }
        let inner: Vec<usize> = g.neighbors(hub).filter(|v| !leaves.contains(v)).collect();
        let &[attach] = inner.as_slice() else { return None };
        let clique: Vec<usize> =
            (0..g.vertex_count()).filter(|&v| v != hub && !leaves.contains(&v)).collect();
        let k = clique.len();
        if k < 3 || k.is_multiple_of(2) || !clique.contains(&attach) {
            return None;
        }
        let complete = clique.iter().all(|&a| clique.iter().all(|&b| a == b || g.has_edge(a, b)));
        let edges_match = g.edge_count() == k * (k - 1) / 2 + 1 + leaves.len();
        (complete && edges_match).then(|| KstarShape {
            n: (k - 1) / 2,
            m: leaves.len(),
            hub,
            attach,
            clique,
            leaves,
        })
    }
}

pub fn kstar_certificate(g: &Graph, shape: &KstarShape) -> Result<Certificate, Rejection> {
    let (n, m) = (shape.n, shape.m);
    let d_hub = g.degree(shape.hub);
    let (core, _) = g.remove_vertices(&shape.leaves);
    let delta = g.max_degree();
    let mut premises = vec![
        Premise::computed("clique order 2n+1", shape.clique.len(), "odd, >= 5", n >= 2),
        Premise::computed("leaves m on the hub", m, "", true),
        Premise::computed("hub degree d(u) = m + 1", d_hub, format!("= {}", m + 1), d_hub == m + 1),
        Premise::computed(
            "max degree",
            delta,
            format!("= max(m + 1, 2n + 1) = {}", (m + 1).max(2 * n + 1)),
            delta == (m + 1).max(2 * n + 1),
        ),
    ];
    // every interval cyclic t-coloring has t >= d(u); the colors seen on the
    // core H = G - leaves number at most `cap`, which must be < d(u)
    let rule = if n >= 2 && m >= 6 * n {
        let cap = bounds::bound_general(&core).expect("core is connected");
        premises.push(Premise::computed("m >= 6n", format!("{m} >= {}", 6 * n), "true", true));
        premises.push(Premise::computed(
            "2|V(H)| + Delta(H) - 5 < d(u)",
            format!("{cap} < {d_hub}"),
            "true",
            cap < d_hub,
        ));
        Rule::Kstar
    } else if (n, m) == (2, 11) {
        let cap = core.edge_count();
        premises.push(Premise::computed("|E(H)| < d(u)", format!("{cap} < {d_hub}"), "true", cap < d_hub));
        Rule::Kstar511
    } else {
        premises.push(Premise::computed(
            "n >= 2 and m >= 6n, or (n, m) = (2, 11)",
            format!("n = {n}, m = {m}"),
            "true",
            false,
        ));
        return Err(Rejection { rule: Rule::Kstar, graph: g.clone(), premises });
    };
    premises.push(core_not_interval(&core));
    Certificate::from_premises(rule, g, premises, Vec::new())
}

/// Interval-mode search over `t` in `[Delta(H), |E(H)|]`.
fn core_not_interval(core: &Graph) -> Premise {
    let config = SolverConfig {
        budget: Budget::nodes(CORE_SEARCH_NODES),
        mode: SpectrumMode::Interval,
        symmetry_breaking: true,
    };
    let mut timed_out = false;
    let mut found = None;
    for t in core.max_degree().max(1)..=core.edge_count() {
        match solver::decide_with(core, t, &config).map(|o| o.decision) {
            Ok(Decision::Feasible) => {
                found = Some(t);
                break;
            }
            Ok(Decision::Infeasible) => {}
            Ok(Decision::Timeout) | Err(_) => timed_out = true,
        }
    }
    let name = "H = G - leaves has no interval coloring";
    match found {
        Some(t) => Premise::computed(name, format!("interval {t}-coloring found"), "none exists", false),
        None if timed_out => Premise {
            name: name.into(),
            value: "search incomplete".into(),
            required: "none exists".into(),
            pass: true,
            basis: Basis::Cited,
        },
        None => Premise {
            name: name.into(),
            value: format!("no t in [{}, {}]", core.max_degree(), core.edge_count()),
            required: "none exists".into(),
            pass: true,
            basis: Basis::Search,
        },
    }
}
