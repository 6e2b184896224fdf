//! Canonical codes and isomorphism-class enumeration for small graphs.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order accepted by [`canonical_code`].
pub const CANONICAL_LIMIT: usize = 10;
/// Largest order accepted by [`enumerate_graphs`] in either mode.
pub const ENUMERATION_LIMIT: usize = 8;

/// Upper-triangle adjacency bits in column order: `(0,1), (0,2), (1,2),
/// (0,3), ...`, one byte (0 or 1) per pair.
fn bits(g: &Graph, perm: &[usize]) -> Vec<u8> {
    let n = perm.len();
    let mut out = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for j in 1..n {
        for i in 0..j {
            out.push(g.has_edge(perm[i], perm[j]) as u8);
        }
    }
    out
}

/// Smallest bit string over all relabelings of `g`, with a permutation
/// achieving it (`perm[i]` is the vertex placed at position `i`).
pub fn canonical_form(g: &Graph) -> Result<(Vec<u8>, Vec<usize>)> {
    let n = g.vertex_count();
    if n > CANONICAL_LIMIT {
        return Err(Error::TooLarge { what: "canonical code", n, limit: CANONICAL_LIMIT });
    }
    let mut search = Search { g, best: None, perm: Vec::with_capacity(n), used: vec![false; n] };
    search.run();
    let (code, perm) = search.best.unwrap_or_default();
    Ok((code, perm))
}

/// Equal codes for graphs of equal order iff the graphs are isomorphic.
pub fn canonical_code(g: &Graph) -> Result<Vec<u8>> {
    canonical_form(g).map(|(code, _)| code)
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<(Vec<u8>, Vec<usize>)>,
    perm: Vec<usize>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn run(&mut self) {
        let n = self.g.vertex_count();
        let depth = self.perm.len();
        if depth == n {
            let code = bits(self.g, &self.perm);
            if self.best.as_ref().map_or(true, |(b, _)| code < *b) {
                self.best = Some((code, self.perm.clone()));
            }
            return;
        }
        let mut tried: Vec<usize> = Vec::new();
        for v in 0..n {
            if self.used[v] || tried.iter().any(|&u| self.twins(u, v)) {
                continue;
            }
            tried.push(v);
            self.perm.push(v);
            if !self.prefix_exceeds_best() {
                self.used[v] = true;
                self.run();
                self.used[v] = false;
            }
            self.perm.pop();
        }
    }

    /// Unplaced vertices with the same neighbors apart from each other give
    /// identical subtrees.
    fn twins(&self, u: usize, v: usize) -> bool {
        let (mut ru, mut rv) = (self.g.row(u).clone(), self.g.row(v).clone());
        ru.remove(v);
        rv.remove(u);
        ru == rv
    }

    fn prefix_exceeds_best(&self) -> bool {
        let Some((best, _)) = &self.best else { return false };
        let k = self.perm.len();
        let prefix = bits(self.g, &self.perm);
        prefix.as_slice() > &best[..k * (k - 1) / 2]
    }
}

/// The graph whose vertex `i` is `g`'s vertex `perm[i]`.
fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    Graph::from_fn(perm.len(), |u, v| g.has_edge(perm[u], perm[v]))
}

/// All labeled graphs on `n` vertices (`up_to_iso = false`, in graph6 bit
/// order), or one canonical representative per isomorphism class in
/// ascending code order.
pub fn enumerate_graphs(n: usize, up_to_iso: bool) -> Result<Vec<Graph>> {
    if n > ENUMERATION_LIMIT {
        return Err(Error::TooLarge { what: "graph enumeration", n, limit: ENUMERATION_LIMIT });
    }
    if !up_to_iso {
        let pairs = n * n.saturating_sub(1) / 2;
        return Ok((0u64..1 << pairs)
            .map(|mask| {
                let mut k = 0;
                Graph::from_fn(n, |_, _| {
                    let bit = mask >> k & 1 == 1;
                    k += 1;
                    bit
                })
            })
            .collect());
    }
    // extend every class on n-1 vertices by one vertex in every possible way
    let mut classes: BTreeMap<Vec<u8>, Graph> = BTreeMap::new();
    if n == 0 {
        classes.insert(vec![], Graph::empty(0));
    } else {
        for base in enumerate_graphs(n - 1, true)? {
            for mask in 0u64..1 << (n - 1) {
                let g = Graph::from_fn(n, |u, v| {
                    if v == n - 1 {
                        mask >> u & 1 == 1
                    } else {
                        base.has_edge(u, v)
                    }
                });
                let (code, perm) = canonical_form(&g)?;
                classes.entry(code).or_insert_with(|| relabel(&g, &perm));
            }
        }
    }
    Ok(classes.into_values().collect())
}

/// Every isomorphism class with `1 <= n <= max_n` vertices, smallest order
/// first.
pub fn enumerate_up_to(max_n: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend(enumerate_graphs(n, true)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;
    use proptest::prelude::*;

    #[test]
    fn class_counts() {
        let counts: Vec<usize> = (0..=6).map(|n| enumerate_graphs(n, true).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156]);
        assert_eq!(enumerate_graphs(2, false).unwrap().len(), 2);
        assert_eq!(enumerate_graphs(4, false).unwrap().len(), 64);
        assert!(enumerate_graphs(9, true).is_err());
    }

    #[test]
    fn code_examples() {
        let c4 = cycle(4);
        let relabelled = Graph::new(4, &[(0, 2), (2, 1), (1, 3), (3, 0)]).unwrap();
        assert_eq!(canonical_code(&c4).unwrap(), canonical_code(&relabelled).unwrap());
        assert_ne!(canonical_code(&path(4)).unwrap(), canonical_code(&star(3)).unwrap());
        assert!(canonical_code(&Graph::empty(5)).unwrap().iter().all(|&b| b == 0));
        assert!(canonical_code(&Graph::empty(11)).is_err());
    }

    #[test]
    fn labeled_counts_split_into_classes() {
        // class sizes n!/|Aut| add up to the labeled count
        let n = 4;
        let mut sizes: BTreeMap<Vec<u8>, usize> = BTreeMap::new();
        for g in enumerate_graphs(n, false).unwrap() {
            *sizes.entry(canonical_code(&g).unwrap()).or_default() += 1;
        }
        assert_eq!(sizes.len(), 11);
        assert_eq!(sizes.values().sum::<usize>(), 64);
    }

    fn small_graph() -> impl Strategy<Value = Graph> {
        (0usize..=7).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
                let mut it = bits.into_iter();
                Graph::from_fn(n, |_, _| it.next().unwrap())
            })
        })
    }

    proptest! {
        #[test]
        fn code_is_relabeling_invariant(g in small_graph(), seed in any::<u64>()) {
            use rand::seq::SliceRandom;
            use rand::SeedableRng;
            let mut perm: Vec<usize> = (0..g.vertex_count()).collect();
            perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
            let h = relabel(&g, &perm);
            prop_assert_eq!(canonical_code(&g).unwrap(), canonical_code(&h).unwrap());
        }

        #[test]
        fn canonical_form_reproduces_code(g in small_graph()) {
            let (code, perm) = canonical_form(&g).unwrap();
            prop_assert_eq!(bits(&g, &perm), code);
        }
    }
}
