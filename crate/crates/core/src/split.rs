//! Split partitions and the complete/perfect split predicates.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pattern::{find_first, Witness, SPLIT_OBSTRUCTIONS};
use crate::set::VertexSet;

/// A partition of the vertices into a stable side and a clique side.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitPartition {
    #[serde(rename = "S")]
    pub stable: VertexSet,
    #[serde(rename = "K")]
    pub clique: VertexSet,
}

impl SplitPartition {
    pub fn check(&self, g: &Graph) -> Result<()> {
        g.check_set(&self.stable)?;
        g.check_set(&self.clique)?;
        if let Some(v) = self.stable.intersection(&self.clique).first() {
            return Err(Error::OverlappingSides(v));
        }
        if self.stable.union(&self.clique) != g.vertices() {
            return Err(Error::InvalidPartition("sides do not cover every vertex".into()));
        }
        if !g.is_stable(&self.stable)? {
            return Err(Error::InvalidPartition("stable side contains an edge".into()));
        }
        if !g.is_clique(&self.clique)? {
            return Err(Error::InvalidPartition("clique side misses an edge".into()));
        }
        Ok(())
    }
}

/// A split partition of `g`, or an induced C4, co-C4 or C5.
///
/// The clique side is the longest clique prefix of the vertices sorted by
/// descending degree (ascending index on ties). For a split graph that prefix
/// always contains the first `m = max{i : d_i >= i - 1}` vertices, and those
/// already leave a stable remainder.
pub fn split_partition(g: &Graph) -> std::result::Result<SplitPartition, Witness> {
    let mut order: Vec<usize> = (0..g.vertex_count()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut clique = VertexSet::new();
    for &v in &order {
        if clique.is_subset(g.row(v)) {
            clique.insert(v);
        } else {
            break;
        }
    }
    let stable = g.vertices().difference(&clique);
    if stable.iter().all(|v| g.row(v).is_disjoint(&stable)) {
        return Ok(SplitPartition { stable, clique });
    }
    Err(find_first(g, &SPLIT_OBSTRUCTIONS)
        .expect("a graph with no split partition contains an induced C4, co-C4 or C5"))
}

pub fn is_split(g: &Graph) -> bool {
    split_partition(g).is_ok()
}

fn check_sides(g: &Graph, s: &VertexSet, k: &VertexSet) -> Result<()> {
    g.check_set(s)?;
    g.check_set(k)?;
    match s.intersection(k).first() {
        Some(v) => Err(Error::OverlappingSides(v)),
        None => Ok(()),
    }
}

/// `s` stable, `k` a clique, and every `s`-vertex adjacent to every `k`-vertex.
pub fn is_complete_split(g: &Graph, s: &VertexSet, k: &VertexSet) -> Result<bool> {
    check_sides(g, s, k)?;
    Ok(g.is_stable(s)? && g.is_clique(k)? && s.iter().all(|v| k.is_subset(g.row(v))))
}

/// `s` stable, `k` a clique, and the `s`-`k` edges form a perfect matching of
/// `s ∪ k`.
pub fn is_perfect_split(g: &Graph, s: &VertexSet, k: &VertexSet) -> Result<bool> {
    check_sides(g, s, k)?;
    if !(g.is_stable(s)? && g.is_clique(k)?) || s.len() != k.len() {
        return Ok(false);
    }
    Ok(s.iter().all(|v| g.row(v).intersection_len(k) == 1)
        && k.iter().all(|v| g.row(v).intersection_len(s) == 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;
    use crate::pattern::PatternKind;

    #[test]
    fn split_partition_examples() {
        assert_eq!(split_partition(&cycle(5)).unwrap_err().kind, PatternKind::C5);
        let p = split_partition(&path(4)).unwrap();
        assert_eq!(p.stable, VertexSet::from([0, 3]));
        assert_eq!(p.clique, VertexSet::from([1, 2]));
        let p = split_partition(&Graph::complete(3)).unwrap();
        assert!(p.stable.is_empty());
        assert_eq!(p.clique, VertexSet::from([0, 1, 2]));
        assert_eq!(split_partition(&cycle(4)).unwrap_err().kind, PatternKind::C4);
        assert_eq!(split_partition(&cycle(4).complement()).unwrap_err().kind, PatternKind::CoC4);
        let p = split_partition(&Graph::empty(0)).unwrap();
        assert!(p.stable.is_empty() && p.clique.is_empty());
    }

    #[test]
    fn complete_split_examples() {
        let star = star(3);
        let (leaves, center) = (VertexSet::from([1, 2, 3]), VertexSet::from([0]));
        assert!(is_complete_split(&star, &leaves, &center).unwrap());
        let p4 = path(4);
        let (ends, mids) = (VertexSet::from([0, 3]), VertexSet::from([1, 2]));
        assert!(!is_complete_split(&p4, &ends, &mids).unwrap());
        assert!(is_complete_split(&Graph::complete(3), &VertexSet::new(), &VertexSet::from([0, 1, 2])).unwrap());
        assert_eq!(is_complete_split(&p4, &ends, &ends), Err(Error::OverlappingSides(0)));
    }

    #[test]
    fn perfect_split_examples() {
        let p4 = path(4);
        assert!(is_perfect_split(&p4, &VertexSet::from([0, 3]), &VertexSet::from([1, 2])).unwrap());
        let star = star(3);
        assert!(!is_perfect_split(&star, &VertexSet::from([1, 2, 3]), &VertexSet::from([0])).unwrap());
        assert!(is_perfect_split(&p4, &VertexSet::new(), &VertexSet::new()).unwrap());
        assert!(is_perfect_split(&p4, &VertexSet::from([1]), &VertexSet::from([1])).is_err());
    }

    #[test]
    fn partition_check_rejects_bad_sides() {
        let p4 = path(4);
        let bad = SplitPartition { stable: VertexSet::from([0, 1]), clique: VertexSet::from([2, 3]) };
        assert!(matches!(bad.check(&p4), Err(Error::InvalidPartition(_))));
        let short = SplitPartition { stable: VertexSet::from([0]), clique: VertexSet::from([1, 2]) };
        assert!(short.check(&p4).is_err());
    }
}
