//! Explicit colorings for graph families and reduction of interval colorings
//! modulo `t`.

mod complete_odd;
mod hypercube;

pub use complete_odd::color_complete_odd;
pub use hypercube::{color_hypercube_cyclic, hypercube_base_interval, SpectrumClass};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring::{validate_interval, wrap_color, ColoringError, EdgeColoring};
use crate::graph::{
    gdn_pendant, make_complete_bipartite, make_complete_tripartite, make_gdn, Graph, GraphError,
};

#[derive(Debug, Error)]
pub enum ConstructionError {
    #[error("{0}")]
    InvalidParameter(String),
    #[error("input coloring is not an interval coloring: {0}")]
    NotInterval(String),
    #[error("t = {t} is outside [{lo}, {hi}]")]
    TargetOutOfRange { t: usize, lo: usize, hi: usize },
    #[error("construction step failed: {0}")]
    StepFailed(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
}

fn require(ok: bool, msg: impl FnOnce() -> String) -> Result<(), ConstructionError> {
    if ok {
        Ok(())
    } else {
        Err(ConstructionError::InvalidParameter(msg()))
    }
}

/// Colors edges of `g` by `color(a, b)` over its canonical edge list.
fn color_edges(g: &Graph, t: usize, mut color: impl FnMut(usize, usize) -> usize) -> EdgeColoring {
    let colors = g.edges().iter().map(|&(a, b)| color(a, b)).collect();
    EdgeColoring::new(t, colors).expect("construction colors lie in [1, t]")
}

/// Reduces an interval `W`-coloring to an interval cyclic `t`-coloring by
/// taking every color modulo `t`, for `Delta(G) <= t <= W`.
pub fn mod_reduce(g: &Graph, alpha: &EdgeColoring, t: usize) -> Result<EdgeColoring, ConstructionError> {
    let report = validate_interval(g, alpha)?;
    if let Some(v) = report.violations.first() {
        return Err(ConstructionError::NotInterval(format!("{} violation(s), first: {v}", report.violations.len())));
    }
    let (lo, hi) = (g.max_degree().max(1), alpha.t);
    if !(lo..=hi).contains(&t) {
        return Err(ConstructionError::TargetOutOfRange { t, lo, hi });
    }
    let colors = alpha.colors.iter().map(|&c| wrap_color(c as i64, t)).collect();
    Ok(EdgeColoring::new(t, colors)?)
}

/// `G_{d,n}` with every color in `[1, n(d-1)]` used exactly once.
pub fn color_gdn(d: usize, n: usize) -> Result<(Graph, EdgeColoring), ConstructionError> {
    let g = make_gdn(d, n)?;
    let mut colors = vec![0; g.edge_count()];
    let mut set = |a: usize, b: usize, c: usize| colors[g.edge_index(a, b).expect("edge exists")] = c;
    for i in 1..=n {
        for j in 1..=d - 2 {
            set(i - 1, gdn_pendant(d, n, i, j), (i - 1) * (d - 1) + j);
        }
        // v_i v_{i+1}, and v_n v_1 for i = n
        set(i - 1, i % n, i * (d - 1));
    }
    let alpha = EdgeColoring::new(n * (d - 1), colors)?;
    Ok((g, alpha))
}

/// Interval cyclic `(m+n)`-coloring of `K_{m,n}`: `u_i v_j -> i+j-1`, except
/// `u_1 v_n -> m+n`.
pub fn color_complete_bipartite_cyclic(m: usize, n: usize) -> Result<(Graph, EdgeColoring), ConstructionError> {
    require(m.min(n) >= 2, || format!("needs min(m, n) >= 2, got ({m}, {n})"))?;
    let g = make_complete_bipartite(m, n)?;
    let alpha = color_edges(&g, m + n, |a, b| {
        let (i, j) = (a + 1, b - m + 1);
        if (i, j) == (1, n) {
            m + n
        } else {
            i + j - 1
        }
    });
    Ok((g, alpha))
}

/// Interval `(m+n-1)`-coloring of `K_{m,n}`: `u_i v_j -> i+j-1`.
pub fn canonical_bipartite_interval(m: usize, n: usize) -> Result<(Graph, EdgeColoring), ConstructionError> {
    let g = make_complete_bipartite(m, n)?;
    let alpha = color_edges(&g, m + n - 1, |a, b| a + b - m + 1);
    Ok((g, alpha))
}

/// Interval cyclic `(l+m+n)`-coloring of `K_{l,m,n}`.
///
/// Part sizes are sorted ascending; the graph lays out the smallest part `W`
/// first, then `U`, then the largest part `V`.
pub fn color_tripartite(l: usize, m: usize, n: usize) -> Result<(Graph, EdgeColoring), ConstructionError> {
    let mut sizes = [l, m, n];
    sizes.sort_unstable();
    let [l, m, n] = sizes;
    let g = make_complete_tripartite(l, m, n)?;
    // 1-based index within W, U or V
    let part = |x: usize| {
        if x < l {
            ('w', x + 1)
        } else if x < l + m {
            ('u', x - l + 1)
        } else {
            ('v', x - l - m + 1)
        }
    };
    let alpha = color_edges(&g, l + m + n, |a, b| match (part(a), part(b)) {
        (('u', i), ('v', j)) => l + i + j - 1,
        (('w', i), ('v', j)) => i + j - 1,
        (('w', j), ('u', i)) if i + j <= m + 1 => l + n + i + j - 1,
        (('w', j), ('u', i)) => i + j - m - 1,
        other => unreachable!("no edge inside a part: {other:?}"),
    });
    Ok((g, alpha))
}

/// A named construction with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum ConstructionRequest {
    Gdn { d: usize, n: usize },
    CompleteOdd { n: usize },
    BipartiteCyclic { m: usize, n: usize },
    BipartiteInterval { m: usize, n: usize },
    Tripartite { l: usize, m: usize, n: usize },
    HypercubeCyclic { n: usize },
    HypercubeInterval { n: usize },
    /// `K_{m,n}` interval coloring reduced modulo `t`.
    BipartiteReduced { m: usize, n: usize, t: usize },
}

impl ConstructionRequest {
    pub fn build(&self) -> Result<(Graph, EdgeColoring), ConstructionError> {
        match *self {
            Self::Gdn { d, n } => color_gdn(d, n),
            Self::CompleteOdd { n } => color_complete_odd(n),
            Self::BipartiteCyclic { m, n } => color_complete_bipartite_cyclic(m, n),
            Self::BipartiteInterval { m, n } => canonical_bipartite_interval(m, n),
            Self::Tripartite { l, m, n } => color_tripartite(l, m, n),
            Self::HypercubeCyclic { n } => color_hypercube_cyclic(n),
            Self::HypercubeInterval { n } => hypercube_base_interval(n).map(|(g, c, _)| (g, c)),
            Self::BipartiteReduced { m, n, t } => {
                let (g, alpha) = canonical_bipartite_interval(m, n)?;
                let beta = mod_reduce(&g, &alpha, t)?;
                Ok((g, beta))
            }
        }
    }

    /// Whether the output is an interval (not just cyclic) coloring.
    pub fn is_interval(&self) -> bool {
        matches!(self, Self::BipartiteInterval { .. } | Self::HypercubeInterval { .. })
    }
}
