//! Backtracking search for a single `(G, t)` instance.
//!
//! Edges are colored one at a time in BFS order from a maximum-degree vertex.
//! After each assignment both endpoints must still be completable: the colors
//! already present at a vertex `v` have to fit inside some window of `d(v)`
//! consecutive colors (modulo `t` in cyclic mode). A global check keeps enough
//! uncolored edges to reach every color that is still unused.
//!
//! Symmetry breaking, each step sound on its own and jointly:
//! - cyclic mode: the first edge gets color 1 (rotation), and the first color
//!   other than 1 in search order is at most `ceil((t + 1) / 2)` (reflection
//!   `c -> t + 2 - c`, which fixes 1);
//! - interval mode: the first edge gets a color at most `ceil(t / 2)`
//!   (reflection `c -> t + 1 - c`);
//! - pendant edges sharing a hub are interchangeable, so their colors must
//!   increase in search order.

use std::time::{Duration, Instant};

use crate::coloring::{EdgeColoring, SpectrumMode};
use crate::graph::Graph;

/// Largest `t` the bitset representation supports.
pub const MAX_COLORS: usize = 128;

pub(crate) enum SearchResult {
    Found(Vec<usize>),
    Exhausted,
    OutOfBudget,
}

pub(crate) struct Limits {
    pub max_nodes: Option<u64>,
    pub deadline: Option<Instant>,
}

pub(crate) struct Search {
    t: u32,
    mode: SpectrumMode,
    symmetry: bool,
    order: Vec<usize>,
    endpoints: Vec<(usize, usize)>,
    prev_sibling: Vec<Option<usize>>,
    degree: Vec<u32>,
    used: Vec<u128>,
    color_uses: Vec<u32>,
    distinct: u32,
    assigned: Vec<u32>,
    non_one: u32,
    nodes: u64,
    limits: Limits,
}

impl Search {
    pub fn new(graph: &Graph, t: usize, mode: SpectrumMode, symmetry: bool, limits: Limits) -> Self {
        assert!((1..=MAX_COLORS).contains(&t));
        let order = bfs_edge_order(graph);
        let endpoints: Vec<(usize, usize)> = order.iter().map(|&e| graph.edge(e)).collect();
        let prev_sibling = if symmetry { sibling_links(graph, &endpoints) } else { vec![None; order.len()] };
        Search {
            t: t as u32,
            mode,
            symmetry,
            degree: graph.degrees().into_iter().map(|d| d as u32).collect(),
            used: vec![0; graph.vertex_count()],
            color_uses: vec![0; t + 1],
            distinct: 0,
            assigned: vec![0; order.len()],
            non_one: 0,
            nodes: 0,
            order,
            endpoints,
            prev_sibling,
            limits,
        }
    }

    pub fn nodes(&self) -> u64 {
        self.nodes
    }

    pub fn run(&mut self) -> SearchResult {
        match self.dfs(0) {
            Step::Found => {
                let mut colors = vec![0; self.order.len()];
                for (pos, &e) in self.order.iter().enumerate() {
                    colors[e] = self.assigned[pos] as usize;
                }
                SearchResult::Found(colors)
            }
            Step::Exhausted => SearchResult::Exhausted,
            Step::Abort => SearchResult::OutOfBudget,
        }
    }

    fn full_mask(&self) -> u128 {
        if self.t == 128 {
            u128::MAX
        } else {
            (1u128 << self.t) - 1
        }
    }

    /// Mask of colors `1..=k`.
    fn low_mask(k: u32) -> u128 {
        if k >= 128 {
            u128::MAX
        } else {
            (1u128 << k) - 1
        }
    }

    fn fits(&self, mask: u128, d: u32) -> bool {
        match self.mode {
            SpectrumMode::Cyclic => fits_cyclic(mask, self.t, d),
            SpectrumMode::Interval => fits_interval(mask, d),
        }
    }

    fn over_budget(&self) -> bool {
        if self.limits.max_nodes.is_some_and(|m| self.nodes > m) {
            return true;
        }
        self.nodes.is_multiple_of(4096) && self.limits.deadline.is_some_and(|d| Instant::now() >= d)
    }

    fn dfs(&mut self, pos: usize) -> Step {
        let total = self.order.len();
        if pos == total {
            return if self.distinct == self.t { Step::Found } else { Step::Exhausted };
        }
        let (a, b) = self.endpoints[pos];
        let mut avail = self.full_mask() & !(self.used[a] | self.used[b]);
        if self.symmetry {
            match self.mode {
                SpectrumMode::Cyclic => {
                    if pos == 0 {
                        avail &= 1;
                    } else if self.non_one == 0 {
                        // ceil((t + 1) / 2)
                        avail &= Self::low_mask((self.t + 2) / 2);
                    }
                }
                SpectrumMode::Interval => {
                    if pos == 0 {
                        avail &= Self::low_mask(self.t.div_ceil(2));
                    }
                }
            }
            if let Some(prev) = self.prev_sibling[pos] {
                // strictly above the previous sibling's color
                avail &= !Self::low_mask(self.assigned[prev]);
            }
        }
        let remaining_after = (total - pos - 1) as u32;
        while avail != 0 {
            let bit = avail.trailing_zeros();
            avail &= avail - 1;
            let color = bit + 1;
            self.nodes += 1;
            if self.over_budget() {
                return Step::Abort;
            }
            let fresh = self.color_uses[color as usize] == 0;
            let distinct_after = self.distinct + fresh as u32;
            if remaining_after < self.t - distinct_after {
                continue;
            }
            let cbit = 1u128 << bit;
            let (na, nb) = (self.used[a] | cbit, self.used[b] | cbit);
            if !self.fits(na, self.degree[a]) || !self.fits(nb, self.degree[b]) {
                continue;
            }
            self.used[a] = na;
            self.used[b] = nb;
            self.color_uses[color as usize] += 1;
            self.distinct = distinct_after;
            self.assigned[pos] = color;
            self.non_one += (color != 1) as u32;

            let step = self.dfs(pos + 1);

            self.non_one -= (color != 1) as u32;
            self.color_uses[color as usize] -= 1;
            self.distinct -= fresh as u32;
            self.used[a] &= !cbit;
            self.used[b] &= !cbit;
            match step {
                Step::Exhausted => {}
                other => return other,
            }
        }
        Step::Exhausted
    }
}

enum Step {
    Found,
    Exhausted,
    Abort,
}

/// Whether the set fits in some `d` cyclically consecutive colors of `1..=t`.
pub(crate) fn fits_cyclic(mask: u128, t: u32, d: u32) -> bool {
    if d >= t || mask.count_ones() <= 1 {
        return true;
    }
    // largest circular run of absent colors between present ones
    let first = mask.trailing_zeros();
    let mut prev = first;
    let mut rest = mask & (mask - 1);
    let mut max_gap = 0;
    while rest != 0 {
        let b = rest.trailing_zeros();
        max_gap = max_gap.max(b - prev - 1);
        prev = b;
        rest &= rest - 1;
    }
    max_gap = max_gap.max(first + t - prev - 1);
    t - max_gap <= d
}

/// Whether the set fits in some `d` consecutive integers.
pub(crate) fn fits_interval(mask: u128, d: u32) -> bool {
    if mask == 0 {
        return true;
    }
    let lo = mask.trailing_zeros();
    let hi = 127 - mask.leading_zeros();
    hi - lo < d
}

/// Edge indices in BFS order from a maximum-degree vertex (lowest index on
/// ties); each vertex contributes its not-yet-listed incident edges when it
/// is dequeued. Other components follow, each started the same way.
pub(crate) fn bfs_edge_order(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut listed = vec![false; g.edge_count()];
    let mut order = Vec::with_capacity(g.edge_count());
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    for &start in &by_degree {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &e in g.incident_edges(v) {
                if !listed[e] {
                    listed[e] = true;
                    order.push(e);
                }
                let (x, y) = g.edge(e);
                let w = if x == v { y } else { x };
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    order
}

/// For each position, the previous position holding a pendant edge on the
/// same hub.
fn sibling_links(g: &Graph, endpoints: &[(usize, usize)]) -> Vec<Option<usize>> {
    let mut last_on_hub: Vec<Option<usize>> = vec![None; g.vertex_count()];
    endpoints
        .iter()
        .enumerate()
        .map(|(pos, &(a, b))| {
            let hub = match (g.degree(a), g.degree(b)) {
                (1, db) if db >= 2 => b,
                (da, 1) if da >= 2 => a,
                _ => return None,
            };
            last_on_hub[hub].replace(pos)
        })
        .collect()
}

pub(crate) fn deadline(limit: Option<Duration>) -> Option<Instant> {
    limit.map(|d| Instant::now() + d)
}

pub(crate) fn witness(t: usize, colors: Vec<usize>) -> EdgeColoring {
    EdgeColoring { t, colors }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::ColorSet;

    fn mask(colors: &[u32]) -> u128 {
        colors.iter().fold(0, |m, &c| m | 1 << (c - 1))
    }

    /// Direct check: some start s with the set inside {s, s+1, ..., s+d-1} mod t.
    fn fits_cyclic_oracle(colors: &[u32], t: u32, d: u32) -> bool {
        if d >= t {
            return true;
        }
        (0..t).any(|s| colors.iter().all(|&c| ((c - 1 + t - s) % t) < d))
    }

    #[test]
    fn cyclic_window_matches_enumeration() {
        for t in 1..=9u32 {
            for m in 0u32..(1 << t) {
                let colors: Vec<u32> = (1..=t).filter(|c| m >> (c - 1) & 1 == 1).collect();
                for d in colors.len() as u32..=t {
                    assert_eq!(
                        fits_cyclic(mask(&colors), t, d),
                        fits_cyclic_oracle(&colors, t, d),
                        "t={t} colors={colors:?} d={d}"
                    );
                }
                // a full-size window is exactly the cyclic-interval predicate
                let set: ColorSet = colors.iter().map(|&c| c as usize).collect();
                assert_eq!(fits_cyclic(mask(&colors), t, colors.len() as u32), set.is_cyclic_run(t as usize));
            }
        }
    }

    #[test]
    fn interval_window() {
        assert!(fits_interval(mask(&[2, 4]), 3));
        assert!(!fits_interval(mask(&[2, 5]), 3));
        assert!(fits_interval(0, 0));
    }

    #[test]
    fn bfs_order_covers_every_edge_once() {
        let g = Graph::new(7, [(0, 1), (1, 2), (3, 4), (4, 5), (4, 6)]).unwrap();
        let order = bfs_edge_order(&g);
        let mut sorted = order.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, (0..5).collect::<Vec<_>>());
        // vertex 4 has maximum degree, so its edges come first
        assert_eq!(g.edge(order[0]).1, 4);
    }
}
