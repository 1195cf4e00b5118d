//! Shortest paths (min-plus closure) and max-plus event timing.

use std::collections::BTreeMap;

use crate::algebra::AlgebraMode;
use crate::error::{Error, Result};
use crate::matrix::{NeutroMatrix, ReductionOp};
use crate::number::NeutroNumber;
use crate::scalar::ExtReal;

/// A directed graph with at most one weighted edge per ordered pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedDigraph {
    node_count: usize,
    edges: BTreeMap<(usize, usize), NeutroNumber>,
}

impl WeightedDigraph {
    pub fn new(node_count: usize) -> Result<Self> {
        if node_count == 0 {
            return Err(Error::Domain("a graph needs at least one node".into()));
        }
        Ok(WeightedDigraph {
            node_count,
            edges: BTreeMap::new(),
        })
    }

    pub fn from_edges(
        node_count: usize,
        edges: impl IntoIterator<Item = (usize, usize, NeutroNumber)>,
    ) -> Result<Self> {
        let mut g = WeightedDigraph::new(node_count)?;
        for (from, to, weight) in edges {
            g.add_edge(from, to, weight)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, from: usize, to: usize, weight: NeutroNumber) -> Result<()> {
        for idx in [from, to] {
            if idx >= self.node_count {
                return Err(Error::Domain(format!(
                    "node {idx} out of range for {} nodes",
                    self.node_count
                )));
            }
        }
        if self.edges.insert((from, to), weight).is_some() {
            return Err(Error::Domain(format!("duplicate edge {from} -> {to}")));
        }
        Ok(())
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, NeutroNumber)> + '_ {
        self.edges.iter().map(|(&(f, t), &w)| (f, t, w))
    }

    pub fn weight(&self, from: usize, to: usize) -> Option<NeutroNumber> {
        self.edges.get(&(from, to)).copied()
    }

    /// Min-plus adjacency matrix. Missing edges are `+inf + infI`; the
    /// diagonal is `0 + 0I` unless a self-loop has a negative determinate part.
    pub fn adjacency(&self) -> NeutroMatrix {
        let n = self.node_count;
        let mut rows = vec![vec![AlgebraMode::Min.additive_identity(); n]; n];
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = NeutroNumber::ZERO;
        }
        for (from, to, w) in self.edges() {
            if from != to || w.a < ExtReal::ZERO {
                rows[from][to] = w;
            }
        }
        NeutroMatrix::from_rows(rows).expect("square and non-empty")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShortestPaths {
    /// Entry `(i, j)` is the componentwise least cost over walks `i -> j`.
    pub distances: NeutroMatrix,
    /// A negative-cost cycle exists; distances are then truncated, not optimal.
    pub cycle_warning: bool,
}

/// All-pairs least costs. The `a` and `b` components are minimized
/// independently, so they may come from different paths.
pub fn shortest_paths(graph: &WeightedDigraph) -> ShortestPaths {
    let closure = graph
        .adjacency()
        .closure(AlgebraMode::Min)
        .expect("adjacency matrix is square");
    ShortestPaths {
        distances: closure.matrix,
        cycle_warning: closure.cycle_warning,
    }
}

/// States `x(0), …, x(k)` of a max-plus linear system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScheduleTrace {
    states: Vec<NeutroMatrix>,
}

impl ScheduleTrace {
    pub fn states(&self) -> &[NeutroMatrix] {
        &self.states
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn last(&self) -> &NeutroMatrix {
        self.states.last().expect("a trace always holds x(0)")
    }
}

/// Iterates `x(t+1) = A ⊗ x(t)` under `max`, `k` times.
pub fn schedule_recurrence(a: &NeutroMatrix, x0: &NeutroMatrix, k: usize) -> Result<ScheduleTrace> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "transition matrix must be square, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    if x0.cols() != 1 || x0.rows() != a.rows() {
        return Err(Error::DimensionMismatch(format!(
            "initial state must be {}x1, got {}x{}",
            a.rows(),
            x0.rows(),
            x0.cols()
        )));
    }
    let mut states = Vec::with_capacity(k + 1);
    states.push(x0.clone());
    for t in 0..k {
        let next = a.product(&states[t], AlgebraMode::Max, ReductionOp::TropicalMax)?;
        states.push(next);
    }
    Ok(ScheduleTrace { states })
}
