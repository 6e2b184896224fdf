//! Simple undirected graphs over dense vertex indices.

use crate::error::{Error, Result};
use crate::set::VertexSet;

/// Practical cap on the number of vertices accepted by graph construction.
pub const MAX_VERTICES: usize = 100_000;

/// A finite simple graph on vertices `0..vertex_count`, one neighbor bitset
/// per vertex. Immutable once built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    rows: Vec<VertexSet>,
}

impl Graph {
    /// Builds a graph from unordered pairs. Duplicate pairs are merged.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooLarge { what: "graph", n, limit: MAX_VERTICES });
        }
        let mut rows = vec![VertexSet::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::EdgeOutOfRange { u, v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            rows[u].insert(v);
            rows[v].insert(u);
        }
        Ok(Graph { rows })
    }

    pub fn empty(n: usize) -> Self {
        Graph { rows: vec![VertexSet::new(); n] }
    }

    pub fn complete(n: usize) -> Self {
        Graph {
            rows: (0..n)
                .map(|v| {
                    let mut r = VertexSet::full(n);
                    r.remove(v);
                    r
                })
                .collect(),
        }
    }

    /// Builds from an adjacency predicate evaluated on every pair `u < v`.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut rows = vec![VertexSet::new(); n];
        for v in 1..n {
            for u in 0..v {
                if adjacent(u, v) {
                    rows[u].insert(v);
                    rows[v].insert(u);
                }
            }
        }
        Graph { rows }
    }

    pub fn vertex_count(&self) -> usize {
        self.rows.len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.rows.len())
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    /// Neighbor row of `v`. Panics if `v` is out of range.
    #[inline]
    pub fn row(&self, v: usize) -> &VertexSet {
        &self.rows[v]
    }

    pub fn neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.rows[v].clone())
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().filter(move |&v| v > u).map(move |v| (u, v)))
            .collect()
    }

    pub fn complement(&self) -> Graph {
        let n = self.rows.len();
        let full = VertexSet::full(n);
        Graph {
            rows: self
                .rows
                .iter()
                .enumerate()
                .map(|(v, row)| {
                    let mut r = full.difference(row);
                    r.remove(v);
                    r
                })
                .collect(),
        }
    }

    /// Subgraph induced by `s`, reindexed densely in ascending order of the
    /// original indices. The returned map sends new indices to old ones.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<(Graph, Vec<usize>)> {
        self.check_set(s)?;
        let map = s.to_vec();
        let mut position = vec![usize::MAX; self.rows.len()];
        for (i, &v) in map.iter().enumerate() {
            position[v] = i;
        }
        let rows = map
            .iter()
            .map(|&v| self.rows[v].intersection(s).iter().map(|u| position[u]).collect())
            .collect();
        Ok((Graph { rows }, map))
    }

    /// `self - removed`, with the same reindexing convention as
    /// [`Graph::induced_subgraph`].
    pub fn without(&self, removed: &VertexSet) -> Result<(Graph, Vec<usize>)> {
        self.check_set(removed)?;
        self.induced_subgraph(&self.vertices().difference(removed))
    }

    pub fn is_clique(&self, s: &VertexSet) -> Result<bool> {
        self.check_set(s)?;
        Ok(s.iter().all(|v| {
            let mut others = s.clone();
            others.remove(v);
            others.is_subset(&self.rows[v])
        }))
    }

    pub fn is_stable(&self, s: &VertexSet) -> Result<bool> {
        self.check_set(s)?;
        Ok(s.iter().all(|v| self.rows[v].is_disjoint(s)))
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.rows.len() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.rows.len() })
        }
    }

    pub(crate) fn check_set(&self, s: &VertexSet) -> Result<()> {
        if s.bound() <= self.rows.len() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: s.bound() - 1, n: self.rows.len() })
        }
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.vertex_count(), self.edges())
    }
}
