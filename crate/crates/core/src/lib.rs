//! Interval cyclic edge-colorings of graphs.
//!
//! A proper edge-coloring with colors `1..=t` is an *interval cyclic
//! t-coloring* when every color is used and the colors at each vertex `v`
//! form `d(v)` consecutive residues modulo `t`. This crate provides graph
//! generators, validators, explicit colorings for several graph families, an
//! exact search for feasible values of `t`, closed-form bounds, and
//! certificates for graphs that admit no such coloring.

pub mod bounds;
pub mod coloring;
pub mod constructions;
pub mod dot;
pub mod graph;
pub mod noncolorable;
pub mod solver;

pub use coloring::{EdgeColoring, SpectrumMode, ValidationResult, Verdict, Violation};
pub use graph::{Graph, GraphError, GraphMetrics};
