use super::{require, ConstructionError};
use crate::coloring::EdgeColoring;
use crate::graph::{make_complete, Graph};

type Case = fn(usize, usize, usize) -> Option<usize>;

fn within(x: usize, lo: usize, hi: usize) -> bool {
    lo <= x && x <= hi
}

/// Case table for edge `v_i v_j`, `i < j`, of `K_{2n+1}`, in order. Ranges
/// are evaluated in signed-free form, so an empty range simply never matches.
const CASES: [Case; 14] = [
    |i, j, _| (i == 0 && j == 1).then_some(1),
    |i, j, n| (i == 0 && j == 2).then_some(2 * n + 1),
    |i, j, n| (i == 0 && within(j, 3, n)).then(|| j - 1),
    |i, j, n| (i == 0 && j > n && j + 2 <= 2 * n).then(|| n + 1 + j),
    |i, j, n| (i == 0 && j + 1 == 2 * n).then_some(n),
    |i, j, n| (i == 0 && j == 2 * n).then_some(3 * n),
    |i, j, n| (within(i, 1, n / 2) && within(j, 2, n) && i + j <= n + 1).then(|| i + j - 1),
    |i, j, n| {
        (i >= 2 && i < n && within(j, n / 2 + 2, n) && i + j >= n + 2).then(|| i + j + n - 2)
    },
    |i, j, n| {
        (within(i, 3, n) && j > n && j + 2 <= 2 * n && j - i + 2 <= n).then(|| n + 1 + j - i)
    },
    |i, j, n| (within(i, 1, n) && within(j, n + 1, 2 * n) && j - i >= n).then(|| j - i + 1),
    |i, j, n| {
        let g = (n - 1) / 2;
        (within(i, 2, 1 + g) && within(j, n + 1, n + g) && j - i + 1 == n).then(|| 2 * i - 1)
    },
    |i, j, n| {
        let g = (n - 1) / 2;
        (within(i, g + 2, n) && j >= n + 1 + g && j < 2 * n && j - i + 1 == n).then(|| i + j - 1)
    },
    |i, j, n| {
        (i > n && i < n + n / 2 && j >= n + 2 && j + 2 <= 2 * n && i + j < 3 * n)
            .then(|| i + j + 1 - 2 * n)
    },
    |i, j, n| (i > n && i < 2 * n && within(j, n + n / 2 + 1, 2 * n) && i + j >= 3 * n).then(|| i + j - n),
];

/// Interval cyclic `3n`-coloring of `K_{2n+1}` on vertices `v_0..v_{2n}`.
///
/// The first matching case colors an edge. For small `n` an edge can match
/// more than one case; all matches must agree, which is asserted.
pub fn color_complete_odd(n: usize) -> Result<(Graph, EdgeColoring), ConstructionError> {
    require(n >= 1, || "complete odd coloring needs n >= 1".into())?;
    let g = make_complete(2 * n + 1)?;
    let colors = g
        .edges()
        .iter()
        .map(|&(i, j)| {
            let mut hits = CASES.iter().filter_map(|case| case(i, j, n));
            let c = hits.next().unwrap_or_else(|| panic!("no case colors v{i}v{j} for n = {n}"));
            assert!(hits.all(|d| d == c), "cases disagree on v{i}v{j} for n = {n}");
            c
        })
        .collect();
    Ok((g, EdgeColoring::new(3 * n, colors)?))
}
