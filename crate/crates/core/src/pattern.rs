//! Certified detection of the six small induced patterns.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::Graph;
use crate::set::VertexSet;

/// The fixed patterns. Pattern vertex `i` of a [`Witness`] sits at
/// `vertices[i]`; the edge tables below are the canonical labelings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PatternKind {
    #[serde(rename = "P4")]
    P4,
    #[serde(rename = "C4")]
    C4,
    #[serde(rename = "CO_C4")]
    CoC4,
    #[serde(rename = "C5")]
    C5,
    #[serde(rename = "CHAIR")]
    Chair,
    #[serde(rename = "CO_CHAIR")]
    CoChair,
}

/// Scan order used by [`find_any_forbidden`].
pub const FORBIDDEN: [PatternKind; 5] = [
    PatternKind::C4,
    PatternKind::CoC4,
    PatternKind::C5,
    PatternKind::Chair,
    PatternKind::CoChair,
];

/// The obstructions to being a split graph.
pub const SPLIT_OBSTRUCTIONS: [PatternKind; 3] = [PatternKind::C4, PatternKind::CoC4, PatternKind::C5];

/// The obstructions to being a threshold graph.
pub const THRESHOLD_OBSTRUCTIONS: [PatternKind; 3] = [PatternKind::C4, PatternKind::CoC4, PatternKind::P4];

impl PatternKind {
    pub const ALL: [PatternKind; 6] = [
        PatternKind::P4,
        PatternKind::C4,
        PatternKind::CoC4,
        PatternKind::C5,
        PatternKind::Chair,
        PatternKind::CoChair,
    ];

    pub fn order(self) -> usize {
        match self {
            PatternKind::P4 | PatternKind::C4 | PatternKind::CoC4 => 4,
            PatternKind::C5 | PatternKind::Chair | PatternKind::CoChair => 5,
        }
    }

    pub fn canonical_edges(self) -> &'static [(usize, usize)] {
        match self {
            PatternKind::P4 => &[(0, 1), (1, 2), (2, 3)],
            PatternKind::C4 => &[(0, 1), (1, 2), (2, 3), (0, 3)],
            PatternKind::CoC4 => &[(0, 1), (2, 3)],
            PatternKind::C5 => &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)],
            // x=0, y=1, z=2, t=3, v=4
            PatternKind::Chair => &[(0, 1), (1, 2), (2, 3), (2, 4)],
            PatternKind::CoChair => &[(0, 2), (0, 3), (0, 4), (1, 3), (1, 4), (3, 4)],
        }
    }

    pub fn has_edge(self, i: usize, j: usize) -> bool {
        let (i, j) = (i.min(j), i.max(j));
        self.canonical_edges().contains(&(i, j))
    }

    pub fn graph(self) -> Graph {
        Graph::new(self.order(), self.canonical_edges()).expect("pattern tables are simple graphs")
    }

    /// The kind whose graph is the complement of this one. P4 and C5 are
    /// self-complementary.
    pub fn complement(self) -> PatternKind {
        match self {
            PatternKind::P4 => PatternKind::P4,
            PatternKind::C4 => PatternKind::CoC4,
            PatternKind::CoC4 => PatternKind::C4,
            PatternKind::C5 => PatternKind::C5,
            PatternKind::Chair => PatternKind::CoChair,
            PatternKind::CoChair => PatternKind::Chair,
        }
    }

    /// Position permutation `p` such that, for a witness `w` of this kind in
    /// `g`, `(w[p[0]], w[p[1]], ..)` is a witness of the complement kind in
    /// the complement of `g`.
    fn complement_positions(self) -> &'static [usize] {
        match self {
            PatternKind::P4 => &[1, 3, 0, 2],
            PatternKind::C4 | PatternKind::CoC4 => &[0, 2, 1, 3],
            PatternKind::C5 => &[0, 2, 4, 1, 3],
            PatternKind::Chair | PatternKind::CoChair => &[0, 1, 2, 3, 4],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            PatternKind::P4 => "P4",
            PatternKind::C4 => "C4",
            PatternKind::CoC4 => "CO_C4",
            PatternKind::C5 => "C5",
            PatternKind::Chair => "CHAIR",
            PatternKind::CoChair => "CO_CHAIR",
        }
    }
}

impl fmt::Display for PatternKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// An induced occurrence of a pattern: `vertices[i]` is the host vertex
/// playing pattern vertex `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Witness {
    pub kind: PatternKind,
    pub vertices: Vec<usize>,
}

impl Witness {
    /// The same vertices read as a witness in the complement graph.
    pub fn complement(&self) -> Witness {
        let kind = self.kind.complement();
        let vertices = if self.vertices.len() == self.kind.order() {
            self.kind.complement_positions().iter().map(|&p| self.vertices[p]).collect()
        } else {
            self.vertices.clone()
        };
        Witness { kind, vertices }
    }

    /// Rewrites vertex indices through `map` (e.g. from a subgraph back to
    /// its host).
    pub fn mapped(&self, map: &[usize]) -> Witness {
        Witness { kind: self.kind, vertices: self.vertices.iter().map(|&v| map[v]).collect() }
    }
}

/// Lexicographically smallest induced occurrence of `kind` in `g`, if any.
pub fn find_induced(g: &Graph, kind: PatternKind) -> Option<Witness> {
    let k = kind.order();
    let mut chosen = Vec::with_capacity(k);
    if extend(g, kind, &mut chosen) {
        Some(Witness { kind, vertices: chosen })
    } else {
        None
    }
}

fn extend(g: &Graph, kind: PatternKind, chosen: &mut Vec<usize>) -> bool {
    let i = chosen.len();
    if i == kind.order() {
        return true;
    }
    let mut candidates = g.vertices();
    for (j, &u) in chosen.iter().enumerate() {
        candidates.remove(u);
        candidates = if kind.has_edge(j, i) {
            candidates.intersection(g.row(u))
        } else {
            candidates.difference(g.row(u))
        };
    }
    for v in candidates.iter() {
        chosen.push(v);
        if extend(g, kind, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// First witness among C4, co-C4, C5, chair, co-chair (in that order).
pub fn find_any_forbidden(g: &Graph) -> Option<Witness> {
    find_first(g, &FORBIDDEN)
}

pub fn find_first(g: &Graph, kinds: &[PatternKind]) -> Option<Witness> {
    kinds.iter().find_map(|&kind| find_induced(g, kind))
}

/// True iff `w` names distinct in-range vertices inducing exactly
/// `w.kind`'s canonical edges.
pub fn verify_witness(g: &Graph, w: &Witness) -> bool {
    let k = w.kind.order();
    if w.vertices.len() != k {
        return false;
    }
    if w.vertices.iter().any(|&v| v >= g.vertex_count()) {
        return false;
    }
    let distinct: VertexSet = w.vertices.iter().copied().collect();
    if distinct.len() != k {
        return false;
    }
    (0..k).all(|i| {
        (i + 1..k).all(|j| g.has_edge(w.vertices[i], w.vertices[j]) == w.kind.has_edge(i, j))
    })
}
