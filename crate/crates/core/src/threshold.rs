//! Layered threshold decompositions relative to a fixed split partition.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pattern::{find_induced, PatternKind, Witness};
use crate::set::VertexSet;
use crate::split::{split_partition, SplitPartition};
use crate::violation::{finish, Code, Violation};

/// Stable levels `A_0..A_n` and clique levels `X_1..X_{n+1}`; `x[0]` is
/// `X_1`. `A_i` is complete to `X_j` exactly when `1 <= j <= i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThresholdDecomposition {
    pub n: usize,
    #[serde(rename = "A")]
    pub a: Vec<VertexSet>,
    #[serde(rename = "X")]
    pub x: Vec<VertexSet>,
}

impl ThresholdDecomposition {
    pub fn stable_side(&self) -> VertexSet {
        self.a.iter().fold(VertexSet::new(), |acc, s| acc.union(s))
    }

    pub fn clique_side(&self) -> VertexSet {
        self.x.iter().fold(VertexSet::new(), |acc, s| acc.union(s))
    }
}

/// Builds the decomposition for `part`, or returns an induced P4.
///
/// Clique vertices are peeled off by minimum degree in the remaining graph
/// (smallest index on ties) and then reinserted in reverse, each one either
/// joining `X_{n+1}`, joining `X_n`, or splitting `A_n` to open a new level.
pub fn threshold_decompose(
    g: &Graph,
    part: &SplitPartition,
) -> Result<std::result::Result<ThresholdDecomposition, Witness>> {
    part.check(g)?;
    if let Some(w) = find_induced(g, PatternKind::P4) {
        return Ok(Err(w));
    }

    let mut alive = g.vertices();
    let mut remaining = part.clique.clone();
    let mut removal = Vec::with_capacity(remaining.len());
    while let Some(x) = remaining
        .iter()
        .min_by_key(|&v| (g.row(v).intersection_len(&alive), v))
    {
        removal.push(x);
        remaining.remove(x);
        alive.remove(x);
    }

    let mut dec = ThresholdDecomposition {
        n: 0,
        a: vec![part.stable.clone()],
        x: vec![VertexSet::new()],
    };
    for &x in removal.iter().rev() {
        insert_clique_vertex(g, &part.stable, &mut dec, x)?;
    }
    Ok(Ok(dec))
}

fn insert_clique_vertex(
    g: &Graph,
    stable: &VertexSet,
    dec: &mut ThresholdDecomposition,
    x: usize,
) -> Result<()> {
    let n = dec.n;
    let seen = g.row(x).intersection(stable);
    if !seen.is_subset(&dec.a[n]) {
        return Err(Error::Internal(format!(
            "minimum-degree clique vertex {x} sees stable vertices outside the top level A_{n}"
        )));
    }
    let top = &dec.a[n];
    if seen.is_empty() {
        dec.x[n].insert(x);
    } else if n >= 1 && seen == *top {
        dec.x[n - 1].insert(x);
    } else {
        // Open a new level: A_{n+1} = N(x) ∩ A_n, X_{n+1} = {x}, old X_{n+1} -> X_{n+2}.
        let rest = top.difference(&seen);
        dec.a[n] = rest;
        dec.a.push(seen);
        let old_top = std::mem::replace(&mut dec.x[n], VertexSet::singleton(x));
        dec.x.push(old_top);
        dec.n += 1;
    }
    Ok(())
}

/// True iff `g` has a split partition on which the threshold construction
/// succeeds.
pub fn is_threshold(g: &Graph) -> bool {
    match split_partition(g) {
        Ok(part) => matches!(threshold_decompose(g, &part), Ok(Ok(_))),
        Err(_) => false,
    }
}

/// All violations of the threshold axioms (`TH1`..`TH5`), sorted.
pub fn validate_threshold(g: &Graph, dec: &ThresholdDecomposition) -> Vec<Violation> {
    let n = dec.n;
    let vn = g.vertex_count();
    if dec.a.len() != n + 1 || dec.x.len() != n + 1 {
        return vec![Violation::new(
            Code::TH1,
            vec![],
            format!("expected {} A-sets and {} X-sets, found {} and {}", n + 1, n + 1, dec.a.len(), dec.x.len()),
        )];
    }

    let mut out = Vec::new();
    // role[v] = (is_clique_side, level)
    let mut role: Vec<Option<(bool, usize)>> = vec![None; vn];
    let labelled = dec.a.iter().enumerate().map(|(i, s)| (false, i, s))
        .chain(dec.x.iter().enumerate().map(|(j, s)| (true, j + 1, s)));
    for (is_x, level, set) in labelled {
        for v in set {
            if v >= vn {
                out.push(Violation::new(Code::TH1, vec![v], "vertex out of range"));
            } else if role[v].is_some() {
                out.push(Violation::new(Code::TH1, vec![v], "vertex listed in two sets"));
            } else {
                role[v] = Some((is_x, level));
            }
        }
    }
    for (v, r) in role.iter().enumerate() {
        if r.is_none() {
            out.push(Violation::new(Code::TH1, vec![v], "vertex not covered"));
        }
    }
    for i in 1..=n {
        if dec.a[i].is_empty() {
            out.push(Violation::new(Code::TH3, vec![], format!("A_{i} is empty")));
        }
        if dec.x[i - 1].is_empty() {
            out.push(Violation::new(Code::TH3, vec![], format!("X_{i} is empty")));
        }
    }

    for v in 0..vn {
        for u in 0..v {
            let (Some(ru), Some(rv)) = (role[u], role[v]) else { continue };
            let edge = g.has_edge(u, v);
            let (code, wanted, what) = match (ru, rv) {
                ((false, _), (false, _)) => (Code::TH2, false, "edge inside the stable side"),
                ((true, _), (true, _)) => (Code::TH2, true, "non-edge inside the clique side"),
                ((false, i), (true, j)) | ((true, j), (false, i)) => {
                    if j <= i {
                        (Code::TH4, true, "A_i not complete to X_j for j <= i")
                    } else {
                        (Code::TH5, false, "edge between A_i and X_j for j > i")
                    }
                }
            };
            if edge != wanted {
                out.push(Violation::new(code, vec![u, v], what));
            }
        }
    }
    finish(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;
    use crate::violation::codes;

    fn decompose(g: &Graph) -> std::result::Result<ThresholdDecomposition, Witness> {
        let part = split_partition(g).unwrap();
        threshold_decompose(g, &part).unwrap()
    }

    #[test]
    fn star_decomposition() {
        let g = star(3);
        let part = SplitPartition { stable: VertexSet::from([1, 2, 3]), clique: VertexSet::from([0]) };
        let dec = threshold_decompose(&g, &part).unwrap().unwrap();
        assert_eq!(dec.n, 1);
        assert_eq!(dec.a, vec![VertexSet::new(), VertexSet::from([1, 2, 3])]);
        assert_eq!(dec.x, vec![VertexSet::from([0]), VertexSet::new()]);
        assert!(validate_threshold(&g, &dec).is_empty());
        // the canonical partition puts a leaf on the clique side
        let dec = decompose(&g).unwrap();
        assert_eq!(dec.clique_side(), VertexSet::from([0, 1]));
        assert!(validate_threshold(&g, &dec).is_empty());
    }

    #[test]
    fn p4_has_witness() {
        assert_eq!(decompose(&path(4)).unwrap_err().kind, PatternKind::P4);
    }

    #[test]
    fn clique_is_single_level() {
        let g = Graph::complete(3);
        let dec = decompose(&g).unwrap();
        assert_eq!(dec.n, 0);
        assert_eq!(dec.a, vec![VertexSet::new()]);
        assert_eq!(dec.x, vec![VertexSet::from([0, 1, 2])]);
        assert!(validate_threshold(&g, &dec).is_empty());
    }

    #[test]
    fn edge_plus_isolated_vertex() {
        // 0 isolated; the edge 1-2.
        let g = Graph::new(3, &[(1, 2)]).unwrap();
        let dec = decompose(&g).unwrap();
        assert!(validate_threshold(&g, &dec).is_empty(), "{dec:?}");
        assert_eq!(dec.a[0], VertexSet::from([0]));
    }

    #[test]
    fn validator_flags_p4_mislabel() {
        let dec = ThresholdDecomposition {
            n: 1,
            a: vec![VertexSet::new(), VertexSet::from([0, 3])],
            x: vec![VertexSet::from([1, 2]), VertexSet::new()],
        };
        let v = validate_threshold(&path(4), &dec);
        assert!(codes(&v).contains(&Code::TH4));
        assert!(v.iter().any(|x| x.code == Code::TH4 && x.vertices == vec![0, 2]));
    }

    #[test]
    fn empty_graph_validates() {
        let dec = ThresholdDecomposition { n: 0, a: vec![VertexSet::new()], x: vec![VertexSet::new()] };
        assert!(validate_threshold(&Graph::empty(0), &dec).is_empty());
    }

    #[test]
    fn validator_reports_shape_and_cover() {
        let dec = ThresholdDecomposition { n: 1, a: vec![VertexSet::new()], x: vec![VertexSet::new()] };
        assert_eq!(validate_threshold(&path(2), &dec)[0].code, Code::TH1);
        let dec = ThresholdDecomposition { n: 0, a: vec![VertexSet::from([0])], x: vec![VertexSet::from([0])] };
        let v = validate_threshold(&path(2), &dec);
        assert!(v.iter().any(|x| x.code == Code::TH1 && x.detail.contains("two sets")));
        assert!(v.iter().any(|x| x.code == Code::TH1 && x.detail.contains("not covered")));
    }

    #[test]
    fn is_threshold_examples() {
        assert!(!is_threshold(&cycle(4)));
        assert!(is_threshold(&Graph::complete(4)));
        assert!(!is_threshold(&path(4)));
        assert!(is_threshold(&Graph::empty(5)));
    }

    #[test]
    fn invalid_partition_is_an_error() {
        let part = SplitPartition { stable: VertexSet::from([0, 1]), clique: VertexSet::from([2, 3]) };
        assert!(threshold_decompose(&path(4), &part).is_err());
    }
}
