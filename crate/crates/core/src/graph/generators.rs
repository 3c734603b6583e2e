//! Graph family generators.

use super::{Graph, GraphError};

fn check(ok: bool, msg: impl FnOnce() -> String) -> Result<(), GraphError> {
    if ok {
        Ok(())
    } else {
        Err(GraphError::InvalidParameter(msg()))
    }
}

/// Simple cycle `C_n` on vertices `0..n` in cyclic order.
pub fn make_cycle(n: usize) -> Result<Graph, GraphError> {
    check(n >= 3, || format!("cycle needs n >= 3, got {n}"))?;
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// Simple path `P_m` on `m` vertices.
pub fn make_path(m: usize) -> Result<Graph, GraphError> {
    check(m >= 2, || format!("path needs m >= 2, got {m}"))?;
    Graph::new(m, (1..m).map(|i| (i - 1, i)))
}

pub fn make_complete(n: usize) -> Result<Graph, GraphError> {
    check(n >= 1, || "complete graph needs n >= 1".into())?;
    Graph::new(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
}

/// `K_{m,n}` with the `m`-side on `0..m` and the `n`-side on `m..m+n`.
pub fn make_complete_bipartite(m: usize, n: usize) -> Result<Graph, GraphError> {
    check(m >= 1 && n >= 1, || format!("complete bipartite needs m,n >= 1, got ({m},{n})"))?;
    Graph::new(m + n, (0..m).flat_map(|i| (0..n).map(move |j| (i, m + j))))
}

/// `K_{l,m,n}` with parts laid out consecutively in argument order.
pub fn make_complete_tripartite(l: usize, m: usize, n: usize) -> Result<Graph, GraphError> {
    check(l >= 1 && m >= 1 && n >= 1, || {
        format!("complete tripartite needs l,m,n >= 1, got ({l},{m},{n})")
    })?;
    let part = |v: usize| {
        if v < l {
            0
        } else if v < l + m {
            1
        } else {
            2
        }
    };
    let total = l + m + n;
    Graph::new(
        total,
        (0..total).flat_map(|a| (a + 1..total).filter(move |&b| part(a) != part(b)).map(move |b| (a, b))),
    )
}

/// Hypercube `Q_n`. Vertex `x` is labeled by the little-endian bitstring of
/// `x` (character `k` is bit `k`).
pub fn make_hypercube(n: usize) -> Result<Graph, GraphError> {
    check((1..=20).contains(&n), || format!("hypercube dimension must be in 1..=20, got {n}"))?;
    let size = 1usize << n;
    let edges = (0..size).flat_map(|x| {
        (0..n).filter(move |&k| x & (1 << k) == 0).map(move |k| (x, x | (1 << k)))
    });
    let labels = (0..size)
        .map(|x| (0..n).map(|k| if x >> k & 1 == 1 { '1' } else { '0' }).collect())
        .collect();
    Graph::new(size, edges)?.with_labels(labels)
}

/// Index of pendant `u^{(i)}_j` (both 1-based) in [`make_gdn`]'s layout.
pub(crate) fn gdn_pendant(d: usize, n: usize, i: usize, j: usize) -> usize {
    n + (i - 1) * (d - 2) + (j - 1)
}

/// Cycle `v_1..v_n` (vertices `0..n`) with `d-2` pendant vertices on each
/// cycle vertex, grouped by cycle vertex after the cycle.
pub fn make_gdn(d: usize, n: usize) -> Result<Graph, GraphError> {
    check(d >= 2 && n >= 3, || format!("G_(d,n) needs d >= 2 and n >= 3, got ({d},{n})"))?;
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    for i in 1..=n {
        for j in 1..=d - 2 {
            edges.push((i - 1, gdn_pendant(d, n, i, j)));
        }
    }
    Graph::new(n + n * (d - 2), edges)
}

/// Tree plus one apex vertex (index `|V(T)|`) joined to every leaf.
pub fn make_tree_hat(tree: &Graph) -> Result<Graph, GraphError> {
    if !tree.is_tree() || tree.vertex_count() < 2 {
        return Err(GraphError::NotATree(format!(
            "{} vertices, {} edges, connected={}",
            tree.vertex_count(),
            tree.edge_count(),
            tree.is_connected()
        )));
    }
    let apex = tree.vertex_count();
    let edges = tree.edges().iter().copied().chain(tree.leaves().into_iter().map(|v| (v, apex)));
    Graph::new(apex + 1, edges)
}

/// `K_{2n+1}` on `0..=2n` (vertex `0` plays `v_1`), hub `u = 2n+1` adjacent
/// to `v_1`, and leaves `w_1..w_m` at `2n+2..2n+2+m` hanging from `u`.
pub fn make_kstar(n: usize, m: usize) -> Result<Graph, GraphError> {
    check(n >= 1 && m >= 1, || format!("K*_(2n+1,m) needs n,m >= 1, got ({n},{m})"))?;
    let k = 2 * n + 1;
    let hub = k;
    let mut edges: Vec<(usize, usize)> =
        (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).collect();
    edges.push((0, hub));
    edges.extend((1..=m).map(|i| (hub, hub + i)));
    Graph::new(m + 2 * n + 2, edges)
}

/// Depth-two tree: a center (vertex 0) joined to `hubs` hub vertices, each
/// carrying `leaves_per_hub` leaves.
pub fn make_hub_tree(hubs: usize, leaves_per_hub: usize) -> Result<Graph, GraphError> {
    check(hubs >= 1, || "hub tree needs at least one hub".into())?;
    let mut edges: Vec<(usize, usize)> = (1..=hubs).map(|h| (0, h)).collect();
    for h in 1..=hubs {
        for k in 0..leaves_per_hub {
            edges.push((h, hubs + 1 + (h - 1) * leaves_per_hub + k));
        }
    }
    Graph::new(1 + hubs + hubs * leaves_per_hub, edges)
}

/// The fish graph: a 4-cycle and a triangle sharing vertex 0.
pub fn make_fish() -> Graph {
    Graph::new(6, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (5, 0)])
        .expect("fish graph is simple")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::metrics;

    #[test]
    fn cycle_examples() {
        assert!(make_cycle(2).is_err());
        let c3 = make_cycle(3).unwrap();
        assert_eq!((c3.edge_count(), c3.max_degree()), (3, 2));
        let m5 = metrics(&make_cycle(5).unwrap());
        assert_eq!(m5.edge_count, 5);
        assert!(m5.is_eulerian);
        assert!(!m5.is_bipartite);
        let m6 = metrics(&make_cycle(6).unwrap());
        assert!(m6.is_bipartite);
        assert_eq!(m6.diameter, Some(3));
    }

    #[test]
    fn path_examples() {
        assert!(make_path(1).is_err());
        assert_eq!(make_path(2).unwrap().edges(), &[(0, 1)]);
        let m5 = metrics(&make_path(5).unwrap());
        assert_eq!((m5.edge_count, m5.max_degree, m5.diameter), (4, 2, Some(4)));
        assert_eq!(make_path(3).unwrap().degrees(), vec![1, 2, 1]);
    }

    #[test]
    fn complete_examples() {
        let k4 = make_complete(4).unwrap();
        assert_eq!(k4.edge_count(), 6);
        assert!(k4.degrees().iter().all(|&d| d == 3));
        let m7 = metrics(&make_complete(7).unwrap());
        assert_eq!(m7.edge_count, 21);
        assert!(m7.is_eulerian);
        assert_eq!(make_complete(1).unwrap().edge_count(), 0);
    }

    #[test]
    fn bipartite_examples() {
        assert_eq!(make_complete_bipartite(1, 3).unwrap().max_degree(), 3);
        let k22 = make_complete_bipartite(2, 2).unwrap();
        assert_eq!(k22.edge_count(), 4);
        assert_eq!(k22.degrees(), vec![2; 4]);
        assert!(k22.is_connected());
        let m = metrics(&make_complete_bipartite(3, 4).unwrap());
        assert_eq!((m.edge_count, m.diameter, m.is_bipartite), (12, Some(2), true));
    }

    #[test]
    fn tripartite_examples() {
        assert_eq!(make_complete_tripartite(1, 1, 1).unwrap(), make_complete(3).unwrap());
        let g = make_complete_tripartite(1, 1, 3).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (5, 7));
        assert!(g.degrees().iter().all(|d| d % 2 == 0));
        let g = make_complete_tripartite(2, 2, 2).unwrap();
        assert_eq!(g.edge_count(), 12);
        assert!(g.degrees().iter().all(|&d| d == 4));
    }

    #[test]
    fn hypercube_examples() {
        let q2 = make_hypercube(2).unwrap();
        assert_eq!(q2.edge_count(), 4);
        assert_eq!(q2.degrees(), vec![2; 4]);
        assert_eq!(q2.labels().unwrap()[1], "10");
        let m3 = metrics(&make_hypercube(3).unwrap());
        assert_eq!((m3.edge_count, m3.diameter), (12, Some(3)));
        let q4 = make_hypercube(4).unwrap();
        assert_eq!(q4.edge_count(), 32);
        assert!(q4.degrees().iter().all(|&d| d == 4));
    }

    #[test]
    fn gdn_examples() {
        let g = make_gdn(2, 5).unwrap();
        assert_eq!(g, make_cycle(5).unwrap());
        let m = metrics(&make_gdn(3, 4).unwrap());
        assert_eq!((m.vertex_count(), m.edge_count, m.max_degree), (8, 8, 3));
        let m = metrics(&make_gdn(4, 3).unwrap());
        assert_eq!((m.max_degree, m.edge_count), (4, 9));
        assert!(make_gdn(1, 3).is_err());
        assert!(make_gdn(3, 2).is_err());
    }

    #[test]
    fn gdn_diameter() {
        for d in 3..=5 {
            for n in 3..=9 {
                let m = metrics(&make_gdn(d, n).unwrap());
                assert_eq!(m.diameter, Some(n / 2 + 2), "d={d} n={n}");
            }
        }
    }

    #[test]
    fn tree_hat_examples() {
        let hat = make_tree_hat(&make_path(2).unwrap()).unwrap();
        assert_eq!(hat, make_cycle(3).unwrap());
        // P_3 plus an apex on both endpoints closes a 4-cycle
        let hat = make_tree_hat(&make_path(3).unwrap()).unwrap();
        assert_eq!(hat.edges(), &[(0, 1), (0, 3), (1, 2), (2, 3)]);
        assert_eq!(hat.degrees(), vec![2; 4]);
        let hat = make_tree_hat(&make_complete_bipartite(1, 4).unwrap()).unwrap();
        assert_eq!(hat.vertex_count(), 6);
        assert_eq!(hat.degree(5), 4);
        let hub = make_hub_tree(10, 10).unwrap();
        assert_eq!(hub.vertex_count(), 111);
        let hat = make_tree_hat(&hub).unwrap();
        assert_eq!((hat.vertex_count(), hat.max_degree()), (112, 100));
        assert!(make_tree_hat(&make_cycle(4).unwrap()).is_err());
        assert!(make_tree_hat(&make_complete(1).unwrap()).is_err());
    }

    #[test]
    fn kstar_examples() {
        let g = make_kstar(2, 11).unwrap();
        assert_eq!((g.vertex_count(), g.max_degree()), (17, 12));
        let g = make_kstar(2, 12).unwrap();
        assert_eq!((g.vertex_count(), g.max_degree()), (18, 13));
        assert_eq!(make_kstar(1, 1).unwrap().vertex_count(), 5);
        // Delta = max(m+1, 2n+1)
        assert_eq!(make_kstar(3, 2).unwrap().max_degree(), 7);
    }
}
