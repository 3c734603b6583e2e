//! Upper bounds on the largest feasible `t`, parity obstructions, and exact
//! feasible sets for cycles and trees.
//!
//! All upper bounds here hold for graphs that admit some interval cyclic
//! coloring. They are used to cap the solver's search range, so they must
//! never undercut a real feasible value; the solver tests cross-check this.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{metrics, Graph, GraphMetrics};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoundsError {
    #[error("cycle length must be at least 3, got {0}")]
    CycleTooShort(usize),
    #[error("input is not a tree")]
    NotATree,
    #[error("tree must have at least 2 vertices")]
    TreeTooSmall,
    #[error("vertices must be distinct and in range")]
    BadVertices,
}

/// `|V| + Δ - 2` for connected triangle-free graphs with at least two vertices.
pub fn bound_triangle_free(g: &Graph) -> Option<usize> {
    let m = metrics(g);
    (m.is_connected() && m.is_triangle_free && m.vertex_count() >= 2)
        .then(|| m.vertex_count() + m.max_degree - 2)
}

/// `2|V| + Δ - 4` on two vertices, `2|V| + Δ - 5` on three or more; connected only.
pub fn bound_general(g: &Graph) -> Option<usize> {
    let n = g.vertex_count();
    if !g.is_connected() || n < 2 {
        return None;
    }
    let delta = g.max_degree();
    Some(if n == 2 { 2 * n + delta - 4 } else { 2 * n + delta - 5 })
}

/// `1 + 2 max_P Σ_{v in P} (d(v) - 1)` over all shortest paths `P`.
///
/// For every source, the shortest-path DAG is traversed in BFS order and the
/// best degree sum reaching each vertex is kept, so every minimum-length path
/// between every pair is taken into account.
pub fn bound_shortest_paths(g: &Graph) -> Option<usize> {
    let n = g.vertex_count();
    if !g.is_connected() || n < 2 {
        return None;
    }
    let weight: Vec<usize> = (0..n).map(|v| g.degree(v) - 1).collect();
    let mut best_overall = 0;
    for source in 0..n {
        let dist = g.bfs_distances(source);
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| dist[v]);
        let mut best = vec![0usize; n];
        for &v in &order {
            let dv = dist[v].expect("connected");
            let from_pred = g
                .neighbors(v)
                .filter(|&p| dist[p].is_some_and(|dp| dp + 1 == dv))
                .map(|p| best[p])
                .max()
                .unwrap_or(0);
            best[v] = from_pred + weight[v];
            best_overall = best_overall.max(best[v]);
        }
    }
    Some(1 + 2 * best_overall)
}

/// `1 + 2 (diam + 1)(Δ - 1)`, the diameter form of the shortest-path bound.
pub fn bound_diameter(g: &Graph) -> Option<usize> {
    let m = metrics(g);
    match m.diameter {
        Some(diam) if m.vertex_count() >= 2 => Some(1 + 2 * (diam + 1) * (m.max_degree - 1)),
        _ => None,
    }
}

/// `1 + 2 diam (Δ - 1)` for connected bipartite graphs.
pub fn bound_bipartite_diam(g: &Graph) -> Option<usize> {
    let m = metrics(g);
    match m.diameter {
        Some(diam) if m.is_bipartite && m.vertex_count() >= 2 => {
            Some(1 + 2 * diam * (m.max_degree - 1))
        }
        _ => None,
    }
}

/// Values of `t` ruled out without search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExcludedT {
    Nothing,
    /// Eulerian graph with an odd number of edges: no even `t`.
    AllEven,
}

impl ExcludedT {
    pub fn excludes(self, t: usize) -> bool {
        match self {
            ExcludedT::Nothing => false,
            ExcludedT::AllEven => t.is_multiple_of(2),
        }
    }
}

impl fmt::Display for ExcludedT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExcludedT::Nothing => write!(f, "nothing excluded"),
            ExcludedT::AllEven => write!(f, "all even t excluded"),
        }
    }
}

pub fn parity_obstruction(g: &Graph) -> ExcludedT {
    let m = metrics(g);
    if m.is_eulerian && m.edge_count % 2 == 1 {
        ExcludedT::AllEven
    } else {
        ExcludedT::Nothing
    }
}

/// Exact feasible set of `C_n`.
pub fn cycle_feasible_set(n: usize) -> Result<BTreeSet<usize>, BoundsError> {
    if n < 3 {
        return Err(BoundsError::CycleTooShort(n));
    }
    let set = if n % 2 == 1 {
        (3..=n).filter(|t| t % 2 == 1).collect()
    } else {
        let half = n / 2;
        let even_from = if n.is_multiple_of(4) { half + 2 } else { half + 3 };
        (2..=half + 1).chain((even_from..=n).filter(|t| t % 2 == 0)).collect()
    };
    Ok(set)
}

fn require_tree(t: &Graph) -> Result<(), BoundsError> {
    if !t.is_tree() {
        return Err(BoundsError::NotATree);
    }
    if t.vertex_count() < 2 {
        return Err(BoundsError::TreeTooSmall);
    }
    Ok(())
}

/// BFS parent pointers from `root`.
fn parents(t: &Graph, root: usize) -> Vec<usize> {
    let mut parent = vec![usize::MAX; t.vertex_count()];
    parent[root] = root;
    let mut queue = std::collections::VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        for w in t.neighbors(v) {
            if parent[w] == usize::MAX {
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    parent
}

fn lp_from_parents(t: &Graph, parent: &[usize], u: usize, v: usize) -> usize {
    let mut on_path = vec![false; t.vertex_count()];
    let mut path_edges = 0;
    let mut x = v;
    on_path[x] = true;
    while x != u {
        x = parent[x];
        on_path[x] = true;
        path_edges += 1;
    }
    let boundary = t.edges().iter().filter(|&&(a, b)| on_path[a] != on_path[b]).count();
    path_edges + boundary
}

/// Edges of the `u`-`v` path plus edges with exactly one endpoint on it.
pub fn tree_lp(t: &Graph, u: usize, v: usize) -> Result<usize, BoundsError> {
    require_tree(t)?;
    if u == v || u >= t.vertex_count() || v >= t.vertex_count() {
        return Err(BoundsError::BadVertices);
    }
    Ok(lp_from_parents(t, &parents(t, u), u, v))
}

/// Maximum of [`tree_lp`] over all vertex pairs.
pub fn tree_m(t: &Graph) -> Result<usize, BoundsError> {
    require_tree(t)?;
    let n = t.vertex_count();
    let mut best = 0;
    for u in 0..n {
        let parent = parents(t, u);
        for v in u + 1..n {
            best = best.max(lp_from_parents(t, &parent, u, v));
        }
    }
    Ok(best)
}

/// `[Δ(T), M(T)]` as an inclusive pair.
pub fn tree_feasible_set(t: &Graph) -> Result<(usize, usize), BoundsError> {
    let m = tree_m(t)?;
    Ok((t.max_degree(), m))
}

/// `4n - 2 - p - q` where `n = p 2^q` with `p` odd; a lower bound on the
/// largest feasible `t` of `K_{2n}`.
pub fn k2n_interval_bound(n: usize) -> usize {
    assert!(n >= 1, "n must be positive");
    let q = n.trailing_zeros() as usize;
    let p = n >> q;
    4 * n - 2 - p - q
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PremiseCheck {
    pub name: &'static str,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundEntry {
    pub name: &'static str,
    pub formula: &'static str,
    /// `None` when a premise fails.
    pub value: Option<usize>,
    pub premises: Vec<PremiseCheck>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub max_degree: usize,
    pub upper: Vec<BoundEntry>,
    /// Lower bounds on the smallest and largest feasible `t`, when known.
    pub lower: Vec<BoundEntry>,
    pub excluded_t: ExcludedT,
    pub best_upper: usize,
}

fn premise(name: &'static str, holds: bool) -> PremiseCheck {
    PremiseCheck { name, holds }
}

/// Detects `K_n` and returns `n`.
fn complete_order(m: &GraphMetrics) -> Option<usize> {
    let n = m.vertex_count();
    (n >= 2 && m.edge_count == n * (n - 1) / 2).then_some(n)
}

pub fn report(g: &Graph) -> BoundReport {
    let m = metrics(g);
    let n = m.vertex_count();
    let connected = m.is_connected() && n >= 1;
    let upper = vec![
        BoundEntry {
            name: "triangle-free",
            formula: "|V| + Δ - 2",
            value: bound_triangle_free(g),
            premises: vec![
                premise("connected", connected),
                premise("triangle-free", m.is_triangle_free),
                premise("at-least-2-vertices", n >= 2),
            ],
        },
        BoundEntry {
            name: "general",
            formula: "2|V| + Δ - 4 (|V| = 2), 2|V| + Δ - 5 (|V| >= 3)",
            value: bound_general(g),
            premises: vec![premise("connected", connected), premise("at-least-2-vertices", n >= 2)],
        },
        BoundEntry {
            name: "shortest-paths",
            formula: "1 + 2 max_P Σ (d(v) - 1)",
            value: bound_shortest_paths(g),
            premises: vec![premise("connected", connected), premise("at-least-2-vertices", n >= 2)],
        },
        BoundEntry {
            name: "diameter",
            formula: "1 + 2 (diam + 1)(Δ - 1)",
            value: bound_diameter(g),
            premises: vec![premise("connected", connected), premise("at-least-2-vertices", n >= 2)],
        },
        BoundEntry {
            name: "bipartite-diameter",
            formula: "1 + 2 diam (Δ - 1)",
            value: bound_bipartite_diam(g),
            premises: vec![
                premise("connected", connected),
                premise("bipartite", m.is_bipartite),
                premise("at-least-2-vertices", n >= 2),
            ],
        },
        BoundEntry {
            name: "edge-count",
            formula: "|E|",
            value: Some(m.edge_count),
            premises: vec![],
        },
    ];

    let complete = complete_order(&m);
    let lower = vec![
        BoundEntry {
            name: "max-degree",
            formula: "w_c >= Δ",
            value: Some(m.max_degree),
            premises: vec![],
        },
        BoundEntry {
            name: "complete-even",
            formula: "W_c(K_2n) >= 4n - 2 - p - q",
            value: complete.filter(|k| k % 2 == 0).map(|k| k2n_interval_bound(k / 2)),
            premises: vec![premise("complete-even-order", complete.is_some_and(|k| k % 2 == 0))],
        },
        BoundEntry {
            name: "complete-odd",
            formula: "W_c(K_2n+1) >= 3n",
            value: complete.filter(|k| k % 2 == 1).map(|k| 3 * (k / 2)),
            premises: vec![premise("complete-odd-order", complete.is_some_and(|k| k % 2 == 1))],
        },
    ];

    let best_upper = upper.iter().filter_map(|e| e.value).min().unwrap_or(m.edge_count);
    BoundReport {
        vertex_count: n,
        edge_count: m.edge_count,
        max_degree: m.max_degree,
        upper,
        lower,
        excluded_t: parity_obstruction(g),
        best_upper,
    }
}

impl fmt::Display for BoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "|V| = {}, |E| = {}, Δ = {}", self.vertex_count, self.edge_count, self.max_degree)?;
        writeln!(f, "{:<20} {:>8}  formula", "upper bound", "value")?;
        for e in &self.upper {
            let value = e.value.map_or_else(|| "n/a".to_string(), |v| v.to_string());
            writeln!(f, "{:<20} {:>8}  {}", e.name, value, e.formula)?;
        }
        for e in self.lower.iter().filter(|e| e.value.is_some()) {
            writeln!(f, "{:<20} {:>8}  {}", e.name, e.value.unwrap_or_default(), e.formula)?;
        }
        writeln!(f, "excluded: {}", self.excluded_t)?;
        write!(f, "best upper bound: {}", self.best_upper)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::*;

    #[test]
    fn triangle_free_bound() {
        assert_eq!(bound_triangle_free(&make_cycle(5).unwrap()), Some(5));
        assert_eq!(bound_triangle_free(&make_complete(4).unwrap()), None);
        assert_eq!(bound_triangle_free(&make_hypercube(3).unwrap()), Some(9));
    }

    #[test]
    fn general_bound() {
        assert_eq!(bound_general(&make_complete(2).unwrap()), Some(1));
        assert_eq!(bound_general(&make_complete(3).unwrap()), Some(3));
        assert_eq!(bound_general(&make_complete(5).unwrap()), Some(9));
        assert_eq!(bound_general(&make_complete(1).unwrap()), None);
        assert_eq!(bound_general(&Graph::new(4, [(0, 1), (2, 3)]).unwrap()), None);
    }

    #[test]
    fn shortest_path_bound() {
        assert_eq!(bound_shortest_paths(&make_cycle(5).unwrap()), Some(7));
        assert_eq!(bound_shortest_paths(&make_path(3).unwrap()), Some(3));
    }

    #[test]
    fn shortest_path_bound_maximizes_over_equal_length_paths() {
        // 0-1-3 and 0-2-3 are both shortest; vertex 2 carries two pendants.
        let g = Graph::new(6, [(0, 1), (0, 2), (1, 3), (2, 3), (2, 4), (2, 5)]).unwrap();
        // best path 4-2-0-1 or 4-2-3-1: weights 0 + 3 + 1 + 1 = 5
        assert_eq!(bound_shortest_paths(&g), Some(11));
    }

    #[test]
    fn bipartite_diameter_bound() {
        for n in 1..=6 {
            assert_eq!(
                bound_bipartite_diam(&make_hypercube(n).unwrap()),
                Some(2 * n * n - 2 * n + 1)
            );
        }
        assert_eq!(bound_bipartite_diam(&make_hypercube(3).unwrap()), Some(13));
        assert_eq!(bound_bipartite_diam(&make_complete(3).unwrap()), None);
    }

    #[test]
    fn parity_examples() {
        assert_eq!(parity_obstruction(&make_complete(7).unwrap()), ExcludedT::AllEven);
        assert!(ExcludedT::AllEven.excludes(8));
        assert_eq!(
            parity_obstruction(&make_complete_tripartite(1, 1, 3).unwrap()),
            ExcludedT::AllEven
        );
        assert_eq!(parity_obstruction(&make_cycle(6).unwrap()), ExcludedT::Nothing);
    }

    #[test]
    fn cycle_sets() {
        let s = |xs: &[usize]| xs.iter().copied().collect::<BTreeSet<_>>();
        assert_eq!(cycle_feasible_set(5).unwrap(), s(&[3, 5]));
        assert_eq!(cycle_feasible_set(4).unwrap(), s(&[2, 3, 4]));
        assert_eq!(cycle_feasible_set(6).unwrap(), s(&[2, 3, 4, 6]));
        assert_eq!(cycle_feasible_set(8).unwrap(), s(&[2, 3, 4, 5, 6, 8]));
        assert_eq!(cycle_feasible_set(3).unwrap(), s(&[3]));
        assert!(cycle_feasible_set(2).is_err());
    }

    /// LP via the degree-sum identity: Σ_{x on path}(d(x) - 1) + 1.
    fn lp_oracle(t: &Graph, u: usize, v: usize) -> usize {
        let dist_u = t.bfs_distances(u);
        let dist_v = t.bfs_distances(v);
        let duv = dist_u[v].unwrap();
        (0..t.vertex_count())
            .filter(|&x| dist_u[x].unwrap() + dist_v[x].unwrap() == duv)
            .map(|x| t.degree(x) - 1)
            .sum::<usize>()
            + 1
    }

    fn double_star() -> Graph {
        Graph::new(8, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (1, 6), (1, 7)]).unwrap()
    }

    #[test]
    fn lp_examples() {
        let p5 = make_path(5).unwrap();
        assert_eq!(tree_lp(&p5, 0, 4), Ok(4));
        let star = make_complete_bipartite(1, 4).unwrap();
        assert_eq!(tree_lp(&star, 1, 2), Ok(4));
        assert_eq!(tree_lp(&double_star(), 2, 5), Ok(7));
        assert_eq!(tree_lp(&star, 1, 1), Err(BoundsError::BadVertices));
        assert_eq!(tree_lp(&make_cycle(4).unwrap(), 0, 1), Err(BoundsError::NotATree));
    }

    #[test]
    fn lp_matches_degree_identity_on_all_small_trees() {
        for n in 2..=8 {
            for t in trees(n) {
                for u in 0..n {
                    for v in u + 1..n {
                        assert_eq!(tree_lp(&t, u, v).unwrap(), lp_oracle(&t, u, v));
                    }
                }
            }
        }
    }

    #[test]
    fn m_examples() {
        for m in 2..=12 {
            assert_eq!(tree_m(&make_path(m).unwrap()), Ok(m - 1));
        }
        for k in 1..=7 {
            assert_eq!(tree_m(&make_complete_bipartite(1, k).unwrap()), Ok(k));
        }
        assert_eq!(tree_m(&make_hub_tree(10, 10).unwrap()), Ok(30));
        assert_eq!(tree_m(&make_complete(1).unwrap()), Err(BoundsError::TreeTooSmall));
    }

    #[test]
    fn tree_sets() {
        assert_eq!(tree_feasible_set(&make_path(5).unwrap()), Ok((2, 4)));
        assert_eq!(tree_feasible_set(&make_complete_bipartite(1, 3).unwrap()), Ok((3, 3)));
    }

    #[test]
    fn k2n_values() {
        assert_eq!(k2n_interval_bound(2), 4);
        assert_eq!(k2n_interval_bound(3), 7);
        assert_eq!(k2n_interval_bound(4), 11);
        assert_eq!(k2n_interval_bound(1), 1);
    }

    #[test]
    fn report_examples() {
        let r = report(&make_cycle(5).unwrap());
        assert_eq!(r.best_upper, 5);
        let r = report(&make_hypercube(3).unwrap());
        assert_eq!(r.best_upper, 9);
        let r = report(&make_kstar(2, 11).unwrap());
        assert_eq!(r.excluded_t, ExcludedT::Nothing);
        assert!(r.best_upper <= 22);
        let r = report(&make_complete(6).unwrap());
        assert_eq!(r.lower.iter().find(|e| e.name == "complete-even").unwrap().value, Some(7));
        let text = r.to_string();
        assert!(text.contains("best upper bound"));
    }

    #[test]
    fn diameter_form_dominates_shortest_paths() {
        for n in 2..=5 {
            for g in connected_graphs(n) {
                assert!(bound_shortest_paths(&g).unwrap() <= bound_diameter(&g).unwrap());
            }
        }
    }
}
