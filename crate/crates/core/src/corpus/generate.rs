//! Seeded generators: combs from explicit parameters and Erdős–Rényi graphs.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::comb::{CombDecomposition, LevelKind};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::VertexSet;

/// Set sizes for a comb. `a[i] = |A_i|`, `x[j] = |X_{j+1}|`,
/// `m[i] = |M_{i+1}|`, `y[i] = |Y_{i+2}|`. `kinds[i]` is the shape of level
/// `i + 1`; an empty list means every level is matched.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CombParams {
    pub n: usize,
    pub l: usize,
    pub k0: usize,
    #[serde(rename = "A")]
    pub a: Vec<usize>,
    #[serde(rename = "X")]
    pub x: Vec<usize>,
    #[serde(rename = "M")]
    pub m: Vec<usize>,
    #[serde(rename = "Y")]
    pub y: Vec<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub kinds: Vec<LevelKind>,
    #[serde(default)]
    pub seed: u64,
}

impl CombParams {
    pub fn vertex_count(&self) -> usize {
        [&self.a, &self.x, &self.m, &self.y].iter().flat_map(|v| v.iter()).sum()
    }

    /// `|Y_i|` for `1 <= i <= l + 2`.
    fn y_size(&self, i: usize) -> usize {
        if i == 1 {
            self.x[0]
        } else {
            self.y[i - 2]
        }
    }

    pub fn kind(&self, i: usize) -> LevelKind {
        self.kinds.get(i - 1).copied().unwrap_or(LevelKind::Matched)
    }

    pub fn check(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidParams(msg));
        let (n, l) = (self.n, self.l);
        if l == 0 {
            return bad("l must be at least 1".into());
        }
        if self.a.len() != n + 1 || self.x.len() != n + 1 || self.m.len() != l || self.y.len() != l + 1 {
            return bad(format!(
                "expected {} A, {} X, {} M and {} Y sizes, got {}, {}, {}, {}",
                n + 1,
                n + 1,
                l,
                l + 1,
                self.a.len(),
                self.x.len(),
                self.m.len(),
                self.y.len()
            ));
        }
        if !self.kinds.is_empty() && self.kinds.len() != l {
            return bad(format!("expected {l} level kinds, got {}", self.kinds.len()));
        }
        if self.k0 < 1 || self.k0 > l {
            return bad(format!("k0 = {} outside [1, {l}]", self.k0));
        }
        for i in 1..=n {
            if self.a[i] == 0 {
                return bad(format!("A_{i} must be nonempty"));
            }
            if self.x[i - 1] == 0 {
                return bad(format!("X_{i} must be nonempty"));
            }
        }
        for i in 1..=l {
            let (m, y) = (self.m[i - 1], self.y_size(i));
            if i < l && m + y == 0 {
                return bad(format!("level {i} must have a vertex in M_{i} or Y_{i}"));
            }
            match self.kind(i) {
                LevelKind::Complete => {}
                LevelKind::Matched if m > 0 && m != y => {
                    return bad(format!("matched level {i} needs |Y_{i}| = |M_{i}|, got {y} and {m}"));
                }
                LevelKind::AntiMatched if m != y || (m > 0 && m < 3) => {
                    return bad(format!("anti-matched level {i} needs |Y_{i}| = |M_{i}| >= 3, got {y} and {m}"));
                }
                _ => {}
            }
        }
        if self.a[0] > 0 && self.y[l] > 0 && self.m[0] > 0 && self.x[0] > 0 {
            return bad("A_0 and Y_{l+2} cannot both be nonempty while M_1 and Y_1 are".into());
        }
        Ok(())
    }

    /// Random valid parameters with at most `max_vertices` vertices.
    pub fn random(rng: &mut impl Rng, max_vertices: usize) -> CombParams {
        loop {
            let n = rng.gen_range(0..=3);
            let l = rng.gen_range(1..=4);
            let budget = rng.gen_range(0..=max_vertices);
            let mut size = |lo: usize| lo + rng.gen_range(0..=budget / (2 * (n + l) + 2).max(1));
            let a: Vec<usize> = (0..=n).map(|i| size((i > 0) as usize)).collect();
            let x: Vec<usize> = (0..=n).map(|j| size((j < n) as usize)).collect();
            let mut m: Vec<usize> = (0..l).map(|_| size(0)).collect();
            let mut y: Vec<usize> = (0..=l).map(|_| size(0)).collect();
            let kinds: Vec<LevelKind> = (0..l)
                .map(|_| match rng.gen_range(0..3) {
                    0 => LevelKind::Matched,
                    1 => LevelKind::Complete,
                    _ => LevelKind::AntiMatched,
                })
                .collect();
            let mut x = x;
            for i in 1..=l {
                // make matched and anti-matched levels square
                if kinds[i - 1] != LevelKind::Complete {
                    let s = if i == 1 { x[0] } else { y[i - 2] };
                    m[i - 1] = s;
                }
                if i < l && m[i - 1] == 0 && (if i == 1 { x[0] } else { y[i - 2] }) == 0 {
                    m[i - 1] = 1;
                    if kinds[i - 1] != LevelKind::Complete {
                        if i == 1 {
                            x[0] = 1;
                        } else {
                            y[i - 2] = 1;
                        }
                    }
                }
            }
            let params = CombParams {
                n,
                l,
                k0: rng.gen_range(1..=l),
                a,
                x,
                m,
                y,
                kinds,
                seed: rng.gen(),
            };
            if params.check().is_ok() && params.vertex_count() <= max_vertices {
                return params;
            }
        }
    }
}

/// Builds the comb described by `params` and relabels its vertices with a
/// permutation drawn from `params.seed`.
pub fn generate_comb(params: &CombParams) -> Result<(Graph, CombDecomposition)> {
    params.check()?;
    let (n, l) = (params.n, params.l);
    let mut next = 0;
    let mut alloc = |size: usize| {
        let s: VertexSet = (next..next + size).collect();
        next += size;
        s
    };
    let a: Vec<VertexSet> = params.a.iter().map(|&s| alloc(s)).collect();
    let x: Vec<VertexSet> = params.x.iter().map(|&s| alloc(s)).collect();
    let m: Vec<VertexSet> = params.m.iter().map(|&s| alloc(s)).collect();
    let y: Vec<VertexSet> = params.y.iter().map(|&s| alloc(s)).collect();
    let total = next;

    let y_level = |i: usize| if i == 1 { &x[0] } else { &y[i - 2] };
    let mut matchings = Vec::with_capacity(l);
    for i in 1..=l {
        let (ys, ms) = (y_level(i).to_vec(), m[i - 1].to_vec());
        let pairs: Vec<(usize, usize)> = match params.kind(i) {
            _ if ms.is_empty() || ys.is_empty() => vec![],
            LevelKind::Complete => ys.iter().flat_map(|&u| ms.iter().map(move |&v| (u, v))).collect(),
            LevelKind::Matched => ys.iter().copied().zip(ms.iter().copied()).collect(),
            LevelKind::AntiMatched => (0..ys.len())
                .flat_map(|p| (0..ms.len()).filter(move |&q| q != p).map(move |q| (p, q)))
                .map(|(p, q)| (ys[p], ms[q]))
                .collect(),
        };
        matchings.push(pairs);
    }

    let mut edges: Vec<(usize, usize)> = Vec::new();
    let complete = |edges: &mut Vec<(usize, usize)>, s: &VertexSet, t: &VertexSet| {
        for u in s {
            for v in t {
                edges.push((u, v));
            }
        }
    };
    let clique: Vec<usize> = x.iter().chain(&y).flat_map(|s| s.iter()).collect();
    for (i, &u) in clique.iter().enumerate() {
        for &v in &clique[..i] {
            edges.push((u, v));
        }
    }
    for i in 1..=n {
        for j in 1..=i {
            complete(&mut edges, &a[i], &x[j - 1]);
        }
    }
    for ai in &a {
        for yj in &y {
            complete(&mut edges, ai, yj);
        }
    }
    edges.extend(matchings.iter().flatten().copied());
    for i in 1..=l {
        for j in i + 1..=l {
            complete(&mut edges, y_level(j), &m[i - 1]);
        }
    }
    for i in 1..=params.k0 {
        complete(&mut edges, &y[l - 1], &m[i - 1]);
    }

    let mut labels: Vec<usize> = (0..total).collect();
    labels.shuffle(&mut ChaCha8Rng::seed_from_u64(params.seed));
    let edges: Vec<(usize, usize)> = edges.into_iter().map(|(u, v)| (labels[u], labels[v])).collect();
    let g = Graph::new(total, &edges)?;
    let dec = CombDecomposition { n, l, k0: params.k0, a, x, m, y, matchings }.mapped(&labels);
    Ok((g, dec))
}

/// Each pair independently an edge with probability `p`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParams(format!("edge probability {p} outside [0, 1]")));
    }
    if n > crate::graph::MAX_VERTICES {
        return Err(Error::TooLarge { what: "graph", n, limit: crate::graph::MAX_VERTICES });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(Graph::from_fn(n, |_, _| rng.gen_bool(p)))
}
