//! Edge-colorings, vertex spectra and validators.
//!
//! Colors are 1-based. Reduction modulo `t` maps into `[1, t]` through
//! [`wrap_color`].

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColoringError {
    #[error("coloring has {found} colors but the graph has {expected} edges")]
    LengthMismatch { expected: usize, found: usize },
    #[error("number of colors t must be positive")]
    ZeroColors,
    #[error("color {color} on edge {edge} is outside [1, {t}]")]
    OutOfRange { edge: usize, color: usize, t: usize },
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("color set is not contained in [1, {0}]")]
    SetOutOfRange(usize),
    #[error("color set has {found} elements, expected {expected}")]
    SetSizeMismatch { expected: usize, found: usize },
}

/// `((x - 1) mod t) + 1` for any integer `x`.
pub fn wrap_color(x: i64, t: usize) -> usize {
    let t = t as i64;
    ((x - 1).rem_euclid(t) + 1) as usize
}

/// Edge-coloring in canonical edge order: `colors[e]` is the color of edge `e`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeColoring {
    pub t: usize,
    pub colors: Vec<usize>,
}

impl EdgeColoring {
    /// Checked constructor: every color must lie in `[1, t]`.
    pub fn new(t: usize, colors: Vec<usize>) -> Result<Self, ColoringError> {
        if t == 0 {
            return Err(ColoringError::ZeroColors);
        }
        if let Some((edge, &color)) = colors.iter().enumerate().find(|(_, &c)| c == 0 || c > t) {
            return Err(ColoringError::OutOfRange { edge, color, t });
        }
        Ok(EdgeColoring { t, colors })
    }

    /// Every color shifted by `shift` around the color circle.
    pub fn rotated(&self, shift: usize) -> Self {
        let colors = self.colors.iter().map(|&c| wrap_color((c + shift) as i64, self.t)).collect();
        EdgeColoring { t: self.t, colors }
    }

    /// Reflection `c -> t + 1 - c`.
    pub fn reflected(&self) -> Self {
        let colors = self.colors.iter().map(|&c| self.t + 1 - c).collect();
        EdgeColoring { t: self.t, colors }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(self).expect("coloring serialization cannot fail");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

/// Set of colors in `[1, capacity]`, stored as a bitset.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ColorSet {
    words: Vec<u64>,
}

impl ColorSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, color: usize) -> bool {
        assert!(color >= 1, "colors are 1-based");
        let (w, b) = ((color - 1) / 64, (color - 1) % 64);
        if self.words.len() <= w {
            self.words.resize(w + 1, 0);
        }
        let fresh = self.words[w] & (1 << b) == 0;
        self.words[w] |= 1 << b;
        fresh
    }

    pub fn contains(&self, color: usize) -> bool {
        if color == 0 {
            return false;
        }
        let (w, b) = ((color - 1) / 64, (color - 1) % 64);
        self.words.get(w).is_some_and(|x| x >> b & 1 == 1)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            (0..64).filter(move |b| w >> b & 1 == 1).map(move |b| i * 64 + b + 1)
        })
    }

    pub fn max(&self) -> Option<usize> {
        self.iter().last()
    }

    pub fn min(&self) -> Option<usize> {
        self.iter().next()
    }

    /// True iff the elements form `[a, b]` for some `a <= b` (or the set is empty).
    pub fn is_interval(&self) -> bool {
        match (self.min(), self.max()) {
            (Some(lo), Some(hi)) => hi - lo + 1 == self.len(),
            _ => true,
        }
    }

    /// True iff the elements occupy consecutive positions on the circle
    /// `1, 2, ..., t, 1`. Assumes the set lies in `[1, t]`.
    pub fn is_cyclic_run(&self, t: usize) -> bool {
        let len = self.len();
        if len == 0 || len == t {
            return true;
        }
        // count run starts: c in S with its circular predecessor absent
        let starts = self.iter().filter(|&c| !self.contains(if c == 1 { t } else { c - 1 })).count();
        starts == 1
    }
}

impl FromIterator<usize> for ColorSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = ColorSet::new();
        for c in iter {
            s.insert(c);
        }
        s
    }
}

impl fmt::Debug for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Returns true iff `S = { ((s + i - 2) mod t) + 1 : i in [1, d] }` for some `s`.
pub fn is_cyclic_interval(set: &ColorSet, d: usize, t: usize) -> Result<bool, ColoringError> {
    if set.iter().any(|c| c > t) {
        return Err(ColoringError::SetOutOfRange(t));
    }
    if set.len() != d {
        return Err(ColoringError::SetSizeMismatch { expected: d, found: set.len() });
    }
    Ok(set.is_cyclic_run(t))
}

/// Colors on the edges incident to `v`.
pub fn spectrum(g: &Graph, coloring: &EdgeColoring, v: usize) -> Result<ColorSet, ColoringError> {
    check_length(g, coloring)?;
    if v >= g.vertex_count() {
        return Err(ColoringError::VertexOutOfRange(v));
    }
    Ok(g.incident_edges(v).iter().map(|&e| coloring.colors[e]).collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpectrumReport {
    pub vertex: usize,
    pub colors: Vec<usize>,
    pub is_interval: bool,
    pub is_cyclic_interval: bool,
}

/// Spectrum of every vertex with its classification.
pub fn spectrum_reports(
    g: &Graph,
    coloring: &EdgeColoring,
) -> Result<Vec<SpectrumReport>, ColoringError> {
    check_length(g, coloring)?;
    Ok((0..g.vertex_count())
        .map(|v| {
            let set: ColorSet = g.incident_edges(v).iter().map(|&e| coloring.colors[e]).collect();
            SpectrumReport {
                vertex: v,
                colors: set.iter().collect(),
                is_interval: set.is_interval(),
                is_cyclic_interval: set.is_cyclic_run(coloring.t),
            }
        })
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Valid,
    Invalid,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Violation {
    NotProper { vertex: usize, edges: (usize, usize), color: usize },
    ColorUnused { color: usize },
    SpectrumNotCyclicInterval { vertex: usize },
    SpectrumNotInterval { vertex: usize },
    ColorOutOfRange { edge: usize, color: usize },
}

impl Violation {
    pub fn kind(&self) -> &'static str {
        match self {
            Violation::NotProper { .. } => "not-proper",
            Violation::ColorUnused { .. } => "color-unused",
            Violation::SpectrumNotCyclicInterval { .. } => "spectrum-not-cyclic-interval",
            Violation::SpectrumNotInterval { .. } => "spectrum-not-interval",
            Violation::ColorOutOfRange { .. } => "color-out-of-range",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NotProper { vertex, edges, color } => {
                write!(f, "edges {} and {} share color {color} at vertex {vertex}", edges.0, edges.1)
            }
            Violation::ColorUnused { color } => write!(f, "color {color} is never used"),
            Violation::SpectrumNotCyclicInterval { vertex } => {
                write!(f, "colors at vertex {vertex} are not cyclically consecutive")
            }
            Violation::SpectrumNotInterval { vertex } => write!(f, "colors at vertex {vertex} are not consecutive"),
            Violation::ColorOutOfRange { edge, color } => write!(f, "edge {edge} has out-of-range color {color}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationResult {
    pub verdict: Verdict,
    pub violations: Vec<Violation>,
}

impl ValidationResult {
    pub fn is_valid(&self) -> bool {
        self.verdict == Verdict::Valid
    }
}

/// Which consecutiveness condition a validator enforces at each vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SpectrumMode {
    /// Consecutive modulo `t`.
    Cyclic,
    /// Consecutive integers, no wrap.
    Interval,
}

/// Checks that `coloring` is an interval cyclic `t`-coloring of `g`.
pub fn validate_cyclic(g: &Graph, coloring: &EdgeColoring) -> Result<ValidationResult, ColoringError> {
    validate(g, coloring, SpectrumMode::Cyclic)
}

/// Checks that `coloring` is an interval `t`-coloring of `g`.
pub fn validate_interval(
    g: &Graph,
    coloring: &EdgeColoring,
) -> Result<ValidationResult, ColoringError> {
    validate(g, coloring, SpectrumMode::Interval)
}

/// Reports every violation: properness, color range, surjectivity and the
/// per-vertex spectrum shape.
pub fn validate(
    g: &Graph,
    coloring: &EdgeColoring,
    mode: SpectrumMode,
) -> Result<ValidationResult, ColoringError> {
    check_length(g, coloring)?;
    if coloring.t == 0 {
        return Err(ColoringError::ZeroColors);
    }
    let t = coloring.t;
    let in_range = |c: usize| (1..=t).contains(&c);
    let mut violations = Vec::new();

    for (edge, &color) in coloring.colors.iter().enumerate() {
        if !in_range(color) {
            violations.push(Violation::ColorOutOfRange { edge, color });
        }
    }

    for v in 0..g.vertex_count() {
        let incident = g.incident_edges(v);
        let mut first_edge_of: Vec<(usize, usize)> = Vec::with_capacity(incident.len());
        for &e in incident {
            let c = coloring.colors[e];
            if let Some(&(_, prev)) = first_edge_of.iter().find(|(col, _)| *col == c) {
                violations.push(Violation::NotProper { vertex: v, edges: (prev, e), color: c });
            } else {
                first_edge_of.push((c, e));
            }
        }
        let set: ColorSet = incident.iter().map(|&e| coloring.colors[e]).filter(|&c| in_range(c)).collect();
        match mode {
            SpectrumMode::Cyclic if !set.is_cyclic_run(t) => {
                violations.push(Violation::SpectrumNotCyclicInterval { vertex: v })
            }
            SpectrumMode::Interval if !set.is_interval() => {
                violations.push(Violation::SpectrumNotInterval { vertex: v })
            }
            _ => {}
        }
    }

    let used: ColorSet = coloring.colors.iter().copied().filter(|&c| in_range(c)).collect();
    for color in 1..=t {
        if !used.contains(color) {
            violations.push(Violation::ColorUnused { color });
        }
    }

    let verdict = if violations.is_empty() { Verdict::Valid } else { Verdict::Invalid };
    Ok(ValidationResult { verdict, violations })
}

fn check_length(g: &Graph, coloring: &EdgeColoring) -> Result<(), ColoringError> {
    if coloring.colors.len() != g.edge_count() {
        return Err(ColoringError::LengthMismatch {
            expected: g.edge_count(),
            found: coloring.colors.len(),
        });
    }
    Ok(())
}
