use serde::Serialize;

use super::Graph;

/// Structural quantities of a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphMetrics {
    pub degrees: Vec<usize>,
    pub max_degree: usize,
    pub components: usize,
    /// `None` when the graph is disconnected.
    pub diameter: Option<usize>,
    pub is_eulerian: bool,
    pub is_triangle_free: bool,
    pub is_bipartite: bool,
    pub edge_count: usize,
}

impl GraphMetrics {
    pub fn vertex_count(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_connected(&self) -> bool {
        self.components <= 1
    }
}

pub fn metrics(g: &Graph) -> GraphMetrics {
    let degrees = g.degrees();
    let components = g.components().len();
    let connected = components <= 1;
    GraphMetrics {
        max_degree: degrees.iter().copied().max().unwrap_or(0),
        components,
        diameter: if connected { Some(diameter(g)) } else { None },
        is_eulerian: connected && degrees.iter().all(|d| d % 2 == 0),
        is_triangle_free: is_triangle_free(g),
        is_bipartite: two_coloring(g).is_some(),
        edge_count: g.edge_count(),
        degrees,
    }
}

/// Eccentricity maximum over all vertices; the caller guarantees connectivity.
fn diameter(g: &Graph) -> usize {
    (0..g.vertex_count())
        .map(|s| g.bfs_distances(s).into_iter().flatten().max().unwrap_or(0))
        .max()
        .unwrap_or(0)
}

pub(crate) fn is_triangle_free(g: &Graph) -> bool {
    g.edges().iter().all(|&(u, v)| {
        let (small, other) = if g.degree(u) <= g.degree(v) { (u, v) } else { (v, u) };
        g.neighbors(small).all(|w| w == other || !g.has_edge(w, other))
    })
}

/// BFS 2-coloring; `None` if some edge joins two vertices of the same side.
pub(crate) fn two_coloring(g: &Graph) -> Option<Vec<u8>> {
    let mut side = vec![u8::MAX; g.vertex_count()];
    for s in 0..g.vertex_count() {
        if side[s] != u8::MAX {
            continue;
        }
        side[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for w in g.neighbors(v) {
                if side[w] == u8::MAX {
                    side[w] = 1 - side[v];
                    queue.push_back(w);
                } else if side[w] == side[v] {
                    return None;
                }
            }
        }
    }
    Some(side)
}
