//! Undirected simple graphs with a canonical edge order.
//!
//! Edges are stored as `(u, v)` pairs with `u < v`, sorted lexicographically.
//! The position of an edge in that list is its index, and every edge-coloring
//! in this crate is a vector indexed by it.

mod enumerate;
mod generators;
mod metrics;

pub use enumerate::{connected_graphs, trees};
pub use generators::{
    make_complete, make_complete_bipartite, make_complete_tripartite, make_cycle, make_fish,
    make_gdn, make_hub_tree, make_hypercube, make_kstar, make_path, make_tree_hat,
};
pub use metrics::{metrics, GraphMetrics};
pub(crate) use generators::gdn_pendant;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("edge {0}-{1} references a vertex outside 0..{2}")]
    VertexOutOfRange(usize, usize, usize),
    #[error("edge list is not in canonical order at position {0}")]
    NotCanonical(usize),
    #[error("expected {expected} labels, found {found}")]
    LabelCount { expected: usize, found: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("input is not a tree: {0}")]
    NotATree(String),
}

/// Undirected simple graph. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GraphFile", into = "GraphFile")]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    labels: Option<Vec<String>>,
    incidence: Vec<Vec<usize>>,
}

/// Wire form of [`Graph`]: `{"vertex_count": N, "edges": [[u,v],...], "labels": [...]}`.
#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphFile {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

impl TryFrom<GraphFile> for Graph {
    type Error = GraphError;

    fn try_from(file: GraphFile) -> Result<Self, Self::Error> {
        let graph = Graph::from_canonical_edges(file.vertex_count, file.edges)?;
        match file.labels {
            Some(labels) => graph.with_labels(labels),
            None => Ok(graph),
        }
    }
}

impl From<Graph> for GraphFile {
    fn from(g: Graph) -> Self {
        GraphFile { vertex_count: g.vertex_count, edges: g.edges, labels: g.labels }
    }
}

impl Graph {
    /// Builds a graph from an arbitrary edge list, normalizing each pair to
    /// `u < v` and sorting.
    pub fn new(
        vertex_count: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut normalized = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            normalized.push((a.min(b), a.max(b)));
        }
        normalized.sort_unstable();
        Self::from_canonical_edges(vertex_count, normalized)
    }

    /// Builds a graph from an edge list that must already be canonical
    /// (every pair `u < v`, strictly increasing). Used when reading files so
    /// that coloring indices stay aligned with the file's edge order.
    pub fn from_canonical_edges(
        vertex_count: usize,
        edges: Vec<(usize, usize)>,
    ) -> Result<Self, GraphError> {
        for (pos, &(u, v)) in edges.iter().enumerate() {
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if u >= vertex_count || v >= vertex_count {
                return Err(GraphError::VertexOutOfRange(u, v, vertex_count));
            }
            if u > v {
                return Err(GraphError::NotCanonical(pos));
            }
            if pos > 0 {
                let prev = edges[pos - 1];
                if prev == (u, v) {
                    return Err(GraphError::DuplicateEdge(u, v));
                }
                if prev > (u, v) {
                    return Err(GraphError::NotCanonical(pos));
                }
            }
        }
        let mut incidence = vec![Vec::new(); vertex_count];
        for (idx, &(u, v)) in edges.iter().enumerate() {
            incidence[u].push(idx);
            incidence[v].push(idx);
        }
        Ok(Graph { vertex_count, edges, labels: None, incidence })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, GraphError> {
        if labels.len() != self.vertex_count {
            return Err(GraphError::LabelCount { expected: self.vertex_count, found: labels.len() });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, idx: usize) -> (usize, usize) {
        self.edges[idx]
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Indices of the edges incident to `v`.
    pub fn incident_edges(&self, v: usize) -> &[usize] {
        &self.incidence[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.incidence[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.incidence.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.incidence.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.incidence[v].iter().map(move |&e| {
            let (a, b) = self.edges[e];
            if a == v {
                b
            } else {
                a
            }
        })
    }

    /// Canonical index of edge `{a, b}`, if present.
    pub fn edge_index(&self, a: usize, b: usize) -> Option<usize> {
        let key = (a.min(b), a.max(b));
        self.edges.binary_search(&key).ok()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edge_index(a, b).is_some()
    }

    /// Vertices of degree one.
    pub fn leaves(&self) -> Vec<usize> {
        (0..self.vertex_count).filter(|&v| self.degree(v) == 1).collect()
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.vertex_count];
        let mut out = Vec::new();
        for start in 0..self.vertex_count {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn is_tree(&self) -> bool {
        self.vertex_count >= 1
            && self.edges.len() + 1 == self.vertex_count
            && self.is_connected()
    }

    /// BFS distances from `source`; `None` for unreachable vertices.
    pub fn bfs_distances(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count];
        dist[source] = Some(0);
        let mut queue = std::collections::VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            let dv = dist[v].expect("queued vertices have a distance");
            for w in self.neighbors(v) {
                if dist[w].is_none() {
                    dist[w] = Some(dv + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Subgraph induced by removing the listed vertices; remaining vertices are
    /// renumbered in increasing order. Returns the graph and the old index of
    /// each new vertex.
    pub fn remove_vertices(&self, removed: &[usize]) -> (Graph, Vec<usize>) {
        let mut keep = vec![true; self.vertex_count];
        for &v in removed {
            keep[v] = false;
        }
        let old_of_new: Vec<usize> = (0..self.vertex_count).filter(|&v| keep[v]).collect();
        let mut new_of_old = vec![usize::MAX; self.vertex_count];
        for (new, &old) in old_of_new.iter().enumerate() {
            new_of_old[old] = new;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| keep[u] && keep[v])
            .map(|&(u, v)| (new_of_old[u], new_of_old[v]));
        let g = Graph::new(old_of_new.len(), edges).expect("subgraph of a simple graph is simple");
        (g, old_of_new)
    }

    /// Canonical single-line JSON followed by a newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(self).expect("graph serialization cannot fail");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}
