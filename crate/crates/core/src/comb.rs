//! Comb decompositions: data model, axiom validator, and the mirror check
//! for induced P4s.
//!
//! A comb splits its vertices into a stable side `A ∪ M` and a clique side
//! `X ∪ Y`:
//!
//! * a threshold part `A_0..A_n` / `X_1..X_{n+1}`, with `A_i` complete to
//!   `X_j` exactly for `1 <= j <= i`;
//! * a tooth part `M_1..M_l` / `Y_1..Y_{l+2}`, where `Y_1` is the same set as
//!   `X_1`. Level `i` joins `M_i` to `Y_i` through an explicit relation
//!   (`matchings[i-1]`) that is a perfect matching, a complete bipartite
//!   join, or a complete join minus a perfect matching. `M_i` is complete to
//!   `Y_j` for `i < j <= l`, `Y_{l+1}` is complete to `M_1..M_{k0}`, and
//!   `Y_{l+2}` sees no tooth;
//! * every vertex of `A` is complete to `Y_2..Y_{l+2}`.
//!
//! Every other stable/clique pair is a non-edge. The edge set is therefore a
//! function of the decomposition, which is what [`mandated_graph`] builds and
//! [`validate_comb`] checks.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pattern::{verify_witness, PatternKind, Witness};
use crate::set::VertexSet;
use crate::threshold::ThresholdDecomposition;
use crate::violation::{finish, Code, Violation};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CombDecomposition {
    pub n: usize,
    pub l: usize,
    pub k0: usize,
    /// `A_0..A_n`.
    #[serde(rename = "A")]
    pub a: Vec<VertexSet>,
    /// `X_1..X_{n+1}`.
    #[serde(rename = "X")]
    pub x: Vec<VertexSet>,
    /// `M_1..M_l`.
    #[serde(rename = "M")]
    pub m: Vec<VertexSet>,
    /// `Y_2..Y_{l+2}`; `Y_1` is `X_1`.
    #[serde(rename = "Y")]
    pub y: Vec<VertexSet>,
    /// Per level `1..=l`, the `(y, m)` pairs joined between `Y_i` and `M_i`.
    pub matchings: Vec<Vec<(usize, usize)>>,
}

/// Shape of the relation between `Y_i` and `M_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LevelKind {
    /// A perfect matching.
    Matched,
    /// Every pair.
    Complete,
    /// Every pair except a perfect matching.
    AntiMatched,
}

/// Position of a vertex in a decomposition. `X(1)` doubles as `Y_1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Role {
    A(usize),
    X(usize),
    M(usize),
    Y(usize),
}

impl Role {
    pub fn is_stable_side(self) -> bool {
        matches!(self, Role::A(_) | Role::M(_))
    }
}

impl CombDecomposition {
    /// The empty comb (`n = 0`, `l = 1`) on no vertices.
    pub fn empty() -> Self {
        CombDecomposition {
            n: 0,
            l: 1,
            k0: 1,
            a: vec![VertexSet::new()],
            x: vec![VertexSet::new()],
            m: vec![VertexSet::new()],
            y: vec![VertexSet::new(), VertexSet::new()],
            matchings: vec![vec![]],
        }
    }

    pub fn shape_ok(&self) -> bool {
        self.l >= 1
            && self.a.len() == self.n + 1
            && self.x.len() == self.n + 1
            && self.m.len() == self.l
            && self.y.len() == self.l + 1
            && self.matchings.len() == self.l
    }

    /// `Y_i` for `1 <= i <= l + 2`.
    pub fn y_level(&self, i: usize) -> &VertexSet {
        if i == 1 {
            &self.x[0]
        } else {
            &self.y[i - 2]
        }
    }

    pub fn y_level_mut(&mut self, i: usize) -> &mut VertexSet {
        if i == 1 {
            &mut self.x[0]
        } else {
            &mut self.y[i - 2]
        }
    }

    /// `M_i` for `1 <= i <= l`.
    pub fn m_level(&self, i: usize) -> &VertexSet {
        &self.m[i - 1]
    }

    pub fn relation(&self, i: usize) -> &[(usize, usize)] {
        &self.matchings[i - 1]
    }

    pub fn stable_side(&self) -> VertexSet {
        self.a.iter().chain(&self.m).fold(VertexSet::new(), |acc, s| acc.union(s))
    }

    pub fn clique_side(&self) -> VertexSet {
        self.x.iter().chain(&self.y).fold(VertexSet::new(), |acc, s| acc.union(s))
    }

    /// Every stored set with its role, in storage order.
    pub fn labelled_sets(&self) -> impl Iterator<Item = (Role, &VertexSet)> {
        let a = self.a.iter().enumerate().map(|(i, s)| (Role::A(i), s));
        let x = self.x.iter().enumerate().map(|(j, s)| (Role::X(j + 1), s));
        let m = self.m.iter().enumerate().map(|(i, s)| (Role::M(i + 1), s));
        let y = self.y.iter().enumerate().map(|(j, s)| (Role::Y(j + 2), s));
        a.chain(x).chain(m).chain(y)
    }

    pub fn role_of(&self, v: usize) -> Option<Role> {
        self.labelled_sets().find(|(_, s)| s.contains(v)).map(|(r, _)| r)
    }

    /// Rewrites every vertex through `map`.
    pub fn mapped(&self, map: &[usize]) -> CombDecomposition {
        let f = |s: &VertexSet| s.iter().map(|v| map[v]).collect::<VertexSet>();
        let mut out = CombDecomposition {
            n: self.n,
            l: self.l,
            k0: self.k0,
            a: self.a.iter().map(f).collect(),
            x: self.x.iter().map(f).collect(),
            m: self.m.iter().map(f).collect(),
            y: self.y.iter().map(f).collect(),
            matchings: self
                .matchings
                .iter()
                .map(|r| r.iter().map(|&(y, m)| (map[y], map[m])).collect())
                .collect(),
        };
        out.normalize();
        out
    }

    /// Sorts every relation so that equal decompositions serialize equally.
    pub fn normalize(&mut self) {
        for r in &mut self.matchings {
            r.sort_unstable();
            r.dedup();
        }
    }

    /// Shape of level `i`'s relation, if it has one of the allowed shapes.
    /// Levels with an empty side are complete (vacuously).
    pub fn level_kind(&self, i: usize) -> Option<LevelKind> {
        classify_relation(self.y_level(i), self.m_level(i), self.relation(i))
    }
}

/// Classifies `pairs ⊆ ys × ms`; `None` if the pairs are not one of the
/// three allowed shapes. Small levels fit several shapes; the order of
/// preference is complete, matched, anti-matched. Anti-matchings need three
/// vertices per side (one vertex per side would leave no pair at all).
pub fn classify_relation(ys: &VertexSet, ms: &VertexSet, pairs: &[(usize, usize)]) -> Option<LevelKind> {
    let mut seen = std::collections::BTreeSet::new();
    for &(y, m) in pairs {
        if !ys.contains(y) || !ms.contains(m) || !seen.insert((y, m)) {
            return None;
        }
    }
    let (p, q) = (ys.len(), ms.len());
    if seen.len() == p * q {
        return Some(LevelKind::Complete);
    }
    if p != q {
        return None;
    }
    let degree = |v: usize, on_y: bool| {
        seen.iter().filter(|&&(y, m)| if on_y { y == v } else { m == v }).count()
    };
    if seen.len() == p && ys.iter().all(|y| degree(y, true) == 1) && ms.iter().all(|m| degree(m, false) == 1) {
        return Some(LevelKind::Matched);
    }
    if p >= 3
        && seen.len() == p * (p - 1)
        && ys.iter().all(|y| degree(y, true) == p - 1)
        && ms.iter().all(|m| degree(m, false) == p - 1)
    {
        return Some(LevelKind::AntiMatched);
    }
    None
}

/// What the axioms say about a single stable/clique or same-side pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Mandate {
    Edge(Code),
    NonEdge(Code),
    /// Governed by the explicit relation of this level.
    Relation(usize),
}

fn mandate(dec: &CombDecomposition, ru: Role, rv: Role) -> Mandate {
    match (ru.is_stable_side(), rv.is_stable_side()) {
        (true, true) => Mandate::NonEdge(Code::CB2),
        (false, false) => Mandate::Edge(Code::CB3),
        (true, false) => stable_clique(dec, ru, rv),
        (false, true) => stable_clique(dec, rv, ru),
    }
}

fn stable_clique(dec: &CombDecomposition, s: Role, k: Role) -> Mandate {
    let l = dec.l;
    match (s, k) {
        (Role::A(i), Role::X(j)) => {
            if j <= i {
                Mandate::Edge(Code::CB4)
            } else {
                Mandate::NonEdge(Code::CB10)
            }
        }
        (Role::A(_), Role::Y(_)) => Mandate::Edge(Code::CB5),
        (Role::M(i), Role::X(1)) => tooth(dec, i, 1),
        (Role::M(_), Role::X(_)) => Mandate::NonEdge(Code::CB10),
        (Role::M(i), Role::Y(j)) if j <= l => tooth(dec, i, j),
        (Role::M(i), Role::Y(j)) if j == l + 1 => {
            if i <= dec.k0 {
                Mandate::Edge(Code::CB8)
            } else {
                Mandate::NonEdge(Code::CB10)
            }
        }
        (Role::M(_), Role::Y(_)) => Mandate::NonEdge(Code::CB10),
        _ => unreachable!("stable_clique called with sides swapped"),
    }
}

fn tooth(_dec: &CombDecomposition, i: usize, j: usize) -> Mandate {
    use std::cmp::Ordering::*;
    match i.cmp(&j) {
        Equal => Mandate::Relation(i),
        Less => Mandate::Edge(Code::CB7),
        Greater => Mandate::NonEdge(Code::CB10),
    }
}

fn shape_violation(dec: &CombDecomposition) -> Option<Violation> {
    if dec.shape_ok() {
        return None;
    }
    Some(Violation::new(
        Code::CB1,
        vec![],
        format!(
            "malformed shape for n={}, l={}: |A|={}, |X|={}, |M|={}, |Y|={}, |matchings|={} \
             (need l >= 1, n+1, n+1, l, l+1, l)",
            dec.n,
            dec.l,
            dec.a.len(),
            dec.x.len(),
            dec.m.len(),
            dec.y.len(),
            dec.matchings.len()
        ),
    ))
}

fn roles(dec: &CombDecomposition, vn: usize, out: &mut Vec<Violation>) -> Vec<Option<Role>> {
    let mut role = vec![None; vn];
    for (r, set) in dec.labelled_sets() {
        for v in set {
            if v >= vn {
                out.push(Violation::new(Code::CB1, vec![v], "vertex out of range"));
            } else if role[v].is_some() {
                out.push(Violation::new(Code::CB1, vec![v], "vertex listed in two sets"));
            } else {
                role[v] = Some(r);
            }
        }
    }
    for (v, r) in role.iter().enumerate() {
        if r.is_none() {
            out.push(Violation::new(Code::CB1, vec![v], "vertex not covered"));
        }
    }
    role
}

/// All violations of the comb axioms `CB1`..`CB11` against `g`, sorted by
/// code and then by vertices. Empty iff `dec` is a comb decomposition of `g`.
pub fn validate_comb(g: &Graph, dec: &CombDecomposition) -> Vec<Violation> {
    if let Some(v) = shape_violation(dec) {
        return vec![v];
    }
    let vn = g.vertex_count();
    let (n, l) = (dec.n, dec.l);
    let mut out = Vec::new();
    let role = roles(dec, vn, &mut out);

    if dec.k0 < 1 || dec.k0 > l {
        out.push(Violation::new(Code::CB8, vec![], format!("k0={} outside [1, {l}]", dec.k0)));
    }

    // CB6: relation shape, per level.
    let mut related = std::collections::HashSet::new();
    for i in 1..=l {
        let (ys, ms) = (dec.y_level(i), dec.m_level(i));
        let pairs = dec.relation(i);
        for &(y, m) in pairs {
            if !ys.contains(y) || !ms.contains(m) {
                out.push(Violation::new(Code::CB6, vec![y, m], format!("pair not in Y_{i} x M_{i}")));
            } else {
                related.insert((y, m));
            }
        }
        if classify_relation(ys, ms, pairs).is_none() {
            let mut vs: Vec<usize> = ys.union(ms).to_vec();
            vs.sort_unstable();
            out.push(Violation::new(
                Code::CB6,
                vs,
                format!("relation of level {i} is not a perfect matching, complete join or anti-matching"),
            ));
        }
    }

    // CB9: nonemptiness.
    for i in 1..=n {
        if dec.a[i].is_empty() {
            out.push(Violation::new(Code::CB9, vec![], format!("A_{i} is empty")));
        }
        if dec.x[i - 1].is_empty() {
            out.push(Violation::new(Code::CB9, vec![], format!("X_{i} is empty")));
        }
    }
    for i in 1..l {
        if dec.m_level(i).is_empty() && dec.y_level(i).is_empty() {
            out.push(Violation::new(Code::CB9, vec![], format!("level {i} (M_{i} and Y_{i}) is empty")));
        }
    }

    // CB11: A_0 and Y_{l+2} cannot both be used while M_1 touches Y_1.
    if !dec.a[0].is_empty() && !dec.y_level(l + 2).is_empty() && !dec.relation(1).is_empty() {
        let mut vs: Vec<usize> = dec.a[0].union(dec.y_level(l + 2)).to_vec();
        vs.sort_unstable();
        out.push(Violation::new(
            Code::CB11,
            vs,
            "A_0 and Y_{l+2} are nonempty while M_1 has neighbors in Y_1",
        ));
    }

    // Pairwise edge rules.
    for v in 0..vn {
        for u in 0..v {
            let (Some(ru), Some(rv)) = (role[u], role[v]) else { continue };
            let edge = g.has_edge(u, v);
            match mandate(dec, ru, rv) {
                Mandate::Edge(code) if !edge => out.push(Violation::new(code, vec![u, v], describe_missing(code))),
                Mandate::NonEdge(code) if edge => out.push(Violation::new(code, vec![u, v], describe_extra(code))),
                Mandate::Relation(i) => {
                    let (y, m) = if ru.is_stable_side() { (v, u) } else { (u, v) };
                    let listed = related.contains(&(y, m));
                    if listed && !edge {
                        out.push(Violation::new(Code::CB6, vec![u, v], format!("related pair of level {i} is not an edge")));
                    } else if edge && !listed {
                        out.push(Violation::new(Code::CB10, vec![u, v], format!("edge between Y_{i} and M_{i} outside the level relation")));
                    }
                }
                _ => {}
            }
        }
    }
    finish(out)
}

fn describe_missing(code: Code) -> &'static str {
    match code {
        Code::CB3 => "non-edge inside the clique side",
        Code::CB4 => "A_i not complete to X_j for j <= i",
        Code::CB5 => "A not complete to Y_2..Y_{l+2}",
        Code::CB7 => "Y_j not complete to M_i for i < j <= l",
        Code::CB8 => "Y_{l+1} not complete to M_i for i <= k0",
        _ => "missing mandated edge",
    }
}

fn describe_extra(code: Code) -> &'static str {
    match code {
        Code::CB2 => "edge inside the stable side",
        _ => "edge not mandated by any axiom",
    }
}

/// The unique graph on `vertex_count` vertices whose edges are exactly those
/// the decomposition mandates. Fails if the sets do not partition
/// `0..vertex_count`.
pub fn mandated_graph(dec: &CombDecomposition, vertex_count: usize) -> Result<Graph> {
    if let Some(v) = shape_violation(dec) {
        return Err(Error::InvalidParams(v.detail));
    }
    let mut problems = Vec::new();
    let role = roles(dec, vertex_count, &mut problems);
    if let Some(p) = problems.first() {
        return Err(Error::InvalidParams(p.to_string()));
    }
    let related: std::collections::HashSet<(usize, usize)> =
        dec.matchings.iter().flatten().copied().collect();
    Ok(Graph::from_fn(vertex_count, |u, v| {
        let (ru, rv) = (role[u].unwrap(), role[v].unwrap());
        match mandate(dec, ru, rv) {
            Mandate::Edge(_) => true,
            Mandate::NonEdge(_) => false,
            Mandate::Relation(_) => {
                let (y, m) = if ru.is_stable_side() { (v, u) } else { (u, v) };
                related.contains(&(y, m))
            }
        }
    }))
}

/// Whether the induced path `m - b - b2 - m2` is mirrored: every vertex off
/// the path sees both endpoints or neither, and both midpoints or neither.
pub fn lemma1_mirror_holds(g: &Graph, m: usize, b: usize, b2: usize, m2: usize) -> Result<bool> {
    let path = [m, b, b2, m2];
    for &v in &path {
        g.check_vertex(v)?;
    }
    if !verify_witness(g, &Witness { kind: PatternKind::P4, vertices: path.to_vec() }) {
        return Err(Error::NotInducedP4(path));
    }
    let external = g.vertices().difference(&VertexSet::from(path));
    Ok(g.row(m).intersection(&external) == g.row(m2).intersection(&external)
        && g.row(b).intersection(&external) == g.row(b2).intersection(&external))
}

/// First vertex off the path that breaks the mirror, if any.
pub fn mirror_breaker(g: &Graph, path: [usize; 4]) -> Option<usize> {
    let [m, b, b2, m2] = path;
    let external = g.vertices().difference(&VertexSet::from(path));
    let ends = g.row(m).intersection(&external);
    let ends2 = g.row(m2).intersection(&external);
    let mids = g.row(b).intersection(&external);
    let mids2 = g.row(b2).intersection(&external);
    let odd = ends.difference(&ends2).union(&ends2.difference(&ends))
        .union(&mids.difference(&mids2))
        .union(&mids2.difference(&mids));
    odd.first()
}

/// A threshold decomposition read as a comb with one empty tooth level.
pub fn threshold_to_comb(dec: &ThresholdDecomposition) -> CombDecomposition {
    CombDecomposition {
        n: dec.n,
        l: 1,
        k0: 1,
        a: dec.a.clone(),
        x: dec.x.clone(),
        m: vec![VertexSet::new()],
        y: vec![VertexSet::new(), VertexSet::new()],
        matchings: vec![vec![]],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;
    use crate::split::split_partition;
    use crate::threshold::{threshold_decompose, validate_threshold};
    use crate::violation::codes;

    /// P4 a-b-b'-a' as 0-1-2-3, matched at level 1.
    fn p4_matched() -> CombDecomposition {
        CombDecomposition {
            n: 0,
            l: 1,
            k0: 1,
            a: vec![VertexSet::new()],
            x: vec![VertexSet::from([1, 2])],
            m: vec![VertexSet::from([0, 3])],
            y: vec![VertexSet::new(), VertexSet::new()],
            matchings: vec![vec![(1, 0), (2, 3)]],
        }
    }

    #[test]
    fn p4_matched_comb_is_valid() {
        assert_eq!(validate_comb(&path(4), &p4_matched()), vec![]);
        assert_eq!(p4_matched().level_kind(1), Some(LevelKind::Matched));
        assert_eq!(mandated_graph(&p4_matched(), 4).unwrap(), path(4));
    }

    #[test]
    fn p4_threshold_labelling_fails_cb4() {
        let dec = CombDecomposition {
            n: 1,
            l: 1,
            k0: 1,
            a: vec![VertexSet::new(), VertexSet::from([0, 3])],
            x: vec![VertexSet::from([1, 2]), VertexSet::new()],
            m: vec![VertexSet::new()],
            y: vec![VertexSet::new(), VertexSet::new()],
            matchings: vec![vec![]],
        };
        let v = validate_comb(&path(4), &dec);
        assert_eq!(codes(&v), vec![Code::CB4]);
        assert!(v.iter().any(|x| x.vertices == vec![1, 3]));
    }

    #[test]
    fn empty_comb_on_empty_graph() {
        assert_eq!(validate_comb(&Graph::empty(0), &CombDecomposition::empty()), vec![]);
    }

    #[test]
    fn malformed_shape_is_cb1() {
        let mut dec = CombDecomposition::empty();
        dec.y.pop();
        assert_eq!(codes(&validate_comb(&Graph::empty(0), &dec)), vec![Code::CB1]);
        let mut dec = CombDecomposition::empty();
        dec.k0 = 2;
        assert_eq!(codes(&validate_comb(&Graph::empty(0), &dec)), vec![Code::CB8]);
    }

    #[test]
    fn wrong_matching_is_cb6_and_cb10() {
        let mut dec = p4_matched();
        dec.matchings = vec![vec![(1, 3), (2, 0)]];
        let c = codes(&validate_comb(&path(4), &dec));
        assert!(c.contains(&Code::CB6) && c.contains(&Code::CB10), "{c:?}");
    }

    #[test]
    fn relation_shapes() {
        let ys = VertexSet::from([0, 1, 2]);
        let ms = VertexSet::from([3, 4, 5]);
        let matched = [(0, 3), (1, 4), (2, 5)];
        assert_eq!(classify_relation(&ys, &ms, &matched), Some(LevelKind::Matched));
        let anti: Vec<_> = ys.iter().flat_map(|y| ms.iter().map(move |m| (y, m))).filter(|p| !matched.contains(p)).collect();
        assert_eq!(classify_relation(&ys, &ms, &anti), Some(LevelKind::AntiMatched));
        assert_eq!(classify_relation(&ys, &ms, &[(0, 3)]), None);
        assert_eq!(classify_relation(&ys, &VertexSet::new(), &[]), Some(LevelKind::Complete));
        assert_eq!(classify_relation(&ys, &ms, &[(0, 3), (0, 3), (1, 4)]), None);
    }

    #[test]
    fn anti_matched_level_validates() {
        // Triangle {0,1,4} with stable vertices 2,3,5 each missing one corner.
        let g = Graph::new(6, &[(0, 1), (0, 2), (0, 4), (0, 5), (1, 2), (1, 3), (1, 4), (3, 4), (4, 5)]).unwrap();
        let dec = CombDecomposition {
            n: 0,
            l: 1,
            k0: 1,
            a: vec![VertexSet::new()],
            x: vec![VertexSet::from([0, 1, 4])],
            m: vec![VertexSet::from([2, 3, 5])],
            y: vec![VertexSet::new(), VertexSet::new()],
            matchings: vec![vec![(0, 2), (0, 5), (1, 2), (1, 3), (4, 3), (4, 5)]],
        };
        assert_eq!(validate_comb(&g, &dec), vec![]);
        assert_eq!(dec.level_kind(1), Some(LevelKind::AntiMatched));
    }

    #[test]
    fn isolated_vertex_below_threshold_part() {
        // edge 1-2 plus isolated 0: A_0 must not be forced onto X_1.
        let g = Graph::new(3, &[(1, 2)]).unwrap();
        let part = split_partition(&g).unwrap();
        let t = threshold_decompose(&g, &part).unwrap().unwrap();
        assert!(validate_threshold(&g, &t).is_empty());
        assert_eq!(validate_comb(&g, &threshold_to_comb(&t)), vec![]);
    }

    #[test]
    fn guard_rejects_a0_with_top_teeth() {
        // P4 0-1-2-3 matched at level 1, plus 4 in A_0 and 5 in Y_3.
        let mut dec = p4_matched();
        dec.a[0].insert(4);
        dec.y[1].insert(5);
        let g = mandated_graph(&dec, 6).unwrap();
        assert_eq!(codes(&validate_comb(&g, &dec)), vec![Code::CB11]);
    }

    #[test]
    fn threshold_embedding_examples() {
        let g = star(3);
        let part = crate::split::SplitPartition { stable: VertexSet::from([1, 2, 3]), clique: VertexSet::from([0]) };
        let t = threshold_decompose(&g, &part).unwrap().unwrap();
        let c = threshold_to_comb(&t);
        assert_eq!((c.n, c.l, c.k0), (1, 1, 1));
        assert_eq!(c.a[1], VertexSet::from([1, 2, 3]));
        assert_eq!(c.x[0], VertexSet::from([0]));
        assert!(c.m[0].is_empty());
        assert_eq!(validate_comb(&g, &c), vec![]);

        let e = ThresholdDecomposition { n: 0, a: vec![VertexSet::new()], x: vec![VertexSet::new()] };
        assert_eq!(threshold_to_comb(&e), CombDecomposition::empty());

        let k3 = Graph::complete(3);
        let t = threshold_decompose(&k3, &split_partition(&k3).unwrap()).unwrap().unwrap();
        let c = threshold_to_comb(&t);
        assert_eq!(c.x[0], VertexSet::from([0, 1, 2]));
        assert!(c.stable_side().is_empty());
        assert_eq!(validate_comb(&k3, &c), vec![]);
    }

    #[test]
    fn mirror_examples() {
        assert!(lemma1_mirror_holds(&path(4), 0, 1, 2, 3).unwrap());
        // a P4 inside C5: the fifth vertex sees both ends and neither middle
        assert!(lemma1_mirror_holds(&cycle(5), 0, 1, 2, 3).unwrap());
        // p=4 adjacent to both midpoints
        let g = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (4, 1), (4, 2)]).unwrap();
        assert!(lemma1_mirror_holds(&g, 0, 1, 2, 3).unwrap());
        // the chair breaks it through v=4 hanging off z=2
        assert!(!lemma1_mirror_holds(&chair(), 0, 1, 2, 3).unwrap());
        assert_eq!(mirror_breaker(&chair(), [0, 1, 2, 3]), Some(4));
        assert_eq!(lemma1_mirror_holds(&cycle(4), 0, 1, 2, 3), Err(Error::NotInducedP4([0, 1, 2, 3])));
    }

    #[test]
    fn json_schema_round_trip() {
        let dec = p4_matched();
        let text = serde_json::to_string(&dec).unwrap();
        assert_eq!(
            text,
            r#"{"n":0,"l":1,"k0":1,"A":[[]],"X":[[1,2]],"M":[[0,3]],"Y":[[],[]],"matchings":[[[1,0],[2,3]]]}"#
        );
        let back: CombDecomposition = serde_json::from_str(&text).unwrap();
        assert_eq!(back, dec);
    }
}
