use serde::Serialize;

use super::{require, ConstructionError};
use crate::coloring::{spectrum, validate_interval, EdgeColoring};
use crate::graph::{make_hypercube, Graph};

/// Spectrum of a vertex under an interval `(n+1)`-coloring of `Q_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SpectrumClass {
    /// `[1, n]`
    Low,
    /// `[2, n+1]`
    High,
}

/// An interval cyclic 8-coloring of `Q_3` in canonical edge order, found by
/// exhaustive search.
const Q3_EIGHT: [usize; 12] = [1, 2, 3, 8, 7, 1, 3, 7, 5, 4, 6, 5];

/// `colors[x][d]` is the color of the edge leaving `x` along dimension `d`.
type DimColors = Vec<Vec<usize>>;

fn to_coloring(g: &Graph, t: usize, colors: &DimColors) -> EdgeColoring {
    let colors = g.edges().iter().map(|&(a, b)| colors[a][(a ^ b).trailing_zeros() as usize]).collect();
    EdgeColoring::new(t, colors).expect("hypercube colors lie in [1, t]")
}

/// Interval `(n+1)`-coloring of `Q_n` where half the vertices see `[1, n]`
/// and the other half `[2, n+1]`, plus each vertex's class.
///
/// Built from `C_4` colored `1, 2, 3, 2` (vertices `0, 1, 3, 2`). Going from
/// `Q_k` to `Q_{k+1}`, the copy on bit `k = 0` keeps the coloring and the
/// copy on bit `k = 1` gets `x -> (k+2) - c(sigma(x))`, where `sigma` flips
/// bit 1 and swaps the two classes. A vertex and its copy then share a class,
/// and the matching edge between them gets `k+1` (low) or `k+2` (high).
pub fn hypercube_base_interval(
    n: usize,
) -> Result<(Graph, EdgeColoring, Vec<SpectrumClass>), ConstructionError> {
    require(n >= 2, || format!("needs n >= 2, got {n}"))?;
    require(n <= 20, || format!("hypercube dimension must be at most 20, got {n}"))?;
    use SpectrumClass::{High, Low};
    let mut colors: DimColors = vec![vec![1, 2], vec![1, 2], vec![3, 2], vec![3, 2]];
    let mut classes = vec![Low, Low, High, High];
    let sigma = |x: usize| x ^ 2;
    for k in 2..n {
        let size = 1 << k;
        let mut next = Vec::with_capacity(2 * size);
        for (x, &class) in classes.iter().enumerate() {
            let mut row = colors[x].clone();
            row.push(if class == Low { k + 1 } else { k + 2 });
            next.push(row);
        }
        for (x, &class) in classes.iter().enumerate() {
            let mut row: Vec<usize> = colors[sigma(x)].iter().map(|&c| k + 2 - c).collect();
            row.push(if class == Low { k + 1 } else { k + 2 });
            next.push(row);
        }
        colors = next;
        classes.extend_from_within(..);
    }

    let g = make_hypercube(n)?;
    let alpha = to_coloring(&g, n + 1, &colors);
    check_base(&g, &alpha, &classes)?;
    Ok((g, alpha, classes))
}

fn check_base(g: &Graph, alpha: &EdgeColoring, classes: &[SpectrumClass]) -> Result<(), ConstructionError> {
    let n = g.max_degree();
    let r = validate_interval(g, alpha)?;
    if let Some(v) = r.violations.first() {
        return Err(ConstructionError::StepFailed(format!("Q_{n}: {v}")));
    }
    for (x, &class) in classes.iter().enumerate() {
        let s = spectrum(g, alpha, x)?;
        let lo = if class == SpectrumClass::Low { 1 } else { 2 };
        if s.min() != Some(lo) {
            return Err(ConstructionError::StepFailed(format!("Q_{n}: vertex {x} is not in class {class:?}")));
        }
    }
    let low = classes.iter().filter(|&&c| c == SpectrumClass::Low).count();
    if 2 * low != classes.len() {
        return Err(ConstructionError::StepFailed(format!("Q_{n}: {low} of {} vertices are low", classes.len())));
    }
    Ok(())
}

/// Interval cyclic `(4n-4)`-coloring of `Q_n`.
///
/// For `n >= 4` the cube splits into four quadrants by bits 0 and 1, each a
/// copy of `Q_{n-2}` carrying the base interval coloring shifted by
/// `0, n-1, 2n-2, 3n-3` in cyclic quadrant order `00, 01, 11, 10` (bit 0
/// first). Edges between quadrants take the color just past the shifted
/// spectrum of their lower endpoint, by class.
pub fn color_hypercube_cyclic(n: usize) -> Result<(Graph, EdgeColoring), ConstructionError> {
    require(n >= 2, || format!("needs n >= 2, got {n}"))?;
    let g = make_hypercube(n)?;
    let t = 4 * n - 4;
    match n {
        2 => {
            // around 0, 1, 3, 2
            let alpha = EdgeColoring::new(4, vec![1, 4, 2, 3])?;
            return Ok((g, alpha));
        }
        3 => return Ok((g, EdgeColoring::new(8, Q3_EIGHT.to_vec())?)),
        _ => {}
    }
    let (_, phi, classes) = hypercube_base_interval(n - 2)?;
    let inner_g = make_hypercube(n - 2)?;
    let inner_color = |x: usize, d: usize| {
        let e = inner_g.edge_index(x, x ^ (1 << d)).expect("inner edge exists");
        phi.colors[e]
    };
    // position of quadrant (bit0, bit1) in the cyclic order 00, 01, 11, 10
    let position = |x: usize| match (x & 1, x >> 1 & 1) {
        (0, 0) => 0,
        (0, 1) => 1,
        (1, 1) => 2,
        _ => 3,
    };
    let colors = g
        .edges()
        .iter()
        .map(|&(a, b)| {
            let d = (a ^ b).trailing_zeros() as usize;
            let inner = a >> 2;
            if d >= 2 {
                return inner_color(inner, d - 2) + position(a) * (n - 1);
            }
            // the endpoint earlier in cyclic order, wrapping 10 -> 00
            let (pa, pb) = (position(a), position(b));
            let from = if (pa + 1) % 4 == pb { pa } else { pb };
            let high = classes[inner] == SpectrumClass::High;
            let c = (from + 1) * (n - 1) + high as usize;
            if c > t {
                c - t
            } else {
                c
            }
        })
        .collect();
    Ok((g, EdgeColoring::new(t, colors)?))
}
