//! Deterministic enumeration of small graph corpora, one representative per
//! isomorphism class.

use std::collections::BTreeMap;

use super::Graph;

/// All unlabeled trees on `n >= 2` vertices, ordered by canonical code.
///
/// Every Prüfer sequence of length `n - 2` is decoded, and duplicates are
/// removed by the AHU code of the tree rooted at its center(s).
pub fn trees(n: usize) -> Vec<Graph> {
    assert!((2..=12).contains(&n), "tree enumeration supports 2..=12 vertices");
    let mut seen: BTreeMap<String, Graph> = BTreeMap::new();
    let len = n - 2;
    let mut seq = vec![0usize; len];
    loop {
        let tree = prufer_decode(n, &seq);
        seen.entry(tree_code(&tree)).or_insert(tree);
        // odometer increment
        let mut pos = 0;
        loop {
            if pos == len {
                return seen.into_values().collect();
            }
            seq[pos] += 1;
            if seq[pos] < n {
                break;
            }
            seq[pos] = 0;
            pos += 1;
        }
    }
}

fn prufer_decode(n: usize, seq: &[usize]) -> Graph {
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf always exists");
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::new(n, edges).expect("Prüfer decoding yields a tree")
}

/// Isomorphism-invariant code for a tree.
pub(crate) fn tree_code(t: &Graph) -> String {
    centers(t).into_iter().map(|c| rooted_code(t, c, usize::MAX)).min().unwrap_or_default()
}

fn rooted_code(t: &Graph, v: usize, parent: usize) -> String {
    let mut kids: Vec<String> =
        t.neighbors(v).filter(|&w| w != parent).map(|w| rooted_code(t, w, v)).collect();
    kids.sort();
    format!("({})", kids.concat())
}

fn centers(t: &Graph) -> Vec<usize> {
    let n = t.vertex_count();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree = t.degrees();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for w in t.neighbors(v) {
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

/// All connected graphs on `n` vertices up to isomorphism (`1 <= n <= 6`),
/// ordered by edge count and then by canonical adjacency code.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    assert!((1..=6).contains(&n), "connected graph enumeration supports 1..=6 vertices");
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let perms = permutations(n);
    let mut seen: BTreeMap<(usize, u32), Graph> = BTreeMap::new();
    for mask in 0u32..(1 << pairs.len()) {
        let edges: Vec<(usize, usize)> =
            (0..pairs.len()).filter(|&b| mask >> b & 1 == 1).map(|b| pairs[b]).collect();
        let g = Graph::new(n, edges.iter().copied()).expect("subset of pairs is simple");
        if !g.is_connected() {
            continue;
        }
        let canon = perms
            .iter()
            .map(|p| {
                edges.iter().fold(0u32, |acc, &(a, b)| {
                    let (x, y) = (p[a].min(p[b]), p[a].max(p[b]));
                    let idx = pairs.binary_search(&(x, y)).expect("pair exists");
                    acc | 1 << idx
                })
            })
            .min()
            .expect("at least one permutation");
        seen.entry((edges.len(), canon)).or_insert_with(|| {
            let relabeled = (0..pairs.len())
                .filter(|&b| canon >> b & 1 == 1)
                .map(|b| pairs[b]);
            Graph::new(n, relabeled).expect("canonical edge set is simple")
        });
    }
    seen.into_values().collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                rec(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}
