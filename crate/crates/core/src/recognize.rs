//! Inductive comb recognition: peel an induced P4, recognize the rest, and
//! put the removed pair back.

use serde::{Deserialize, Serialize};

use crate::comb::{mirror_breaker, threshold_to_comb, validate_comb, CombDecomposition, Role};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pattern::{find_any_forbidden, find_induced, PatternKind, Witness};
use crate::set::VertexSet;
use crate::split::{split_partition, SplitPartition};
use crate::threshold::threshold_decompose;

/// Either a comb decomposition or an induced forbidden pattern.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RecognitionResult {
    Decomposition(CombDecomposition),
    Witness(Witness),
}

impl RecognitionResult {
    pub fn is_comb(&self) -> bool {
        matches!(self, RecognitionResult::Decomposition(_))
    }

    pub fn decomposition(&self) -> Option<&CombDecomposition> {
        match self {
            RecognitionResult::Decomposition(d) => Some(d),
            RecognitionResult::Witness(_) => None,
        }
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            RecognitionResult::Witness(w) => Some(w),
            RecognitionResult::Decomposition(_) => None,
        }
    }
}

/// How one recursion level produced its answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Step {
    SplitWitness,
    Threshold,
    MirrorWitness,
    MatchedExtension,
    ThresholdSwap,
    PairSwap,
    Rotation,
    LevelRepair,
    SlotRepair,
    Rebuild,
}

/// Recognizes `g`. Every decomposition returned passes [`validate_comb`];
/// every witness is an induced C4, co-C4, C5, chair or co-chair.
pub fn comb_decompose(g: &Graph) -> Result<RecognitionResult> {
    comb_decompose_traced(g).map(|(r, _)| r)
}

/// [`comb_decompose`] plus the step taken at each recursion level, outermost
/// first.
pub fn comb_decompose_traced(g: &Graph) -> Result<(RecognitionResult, Vec<Step>)> {
    let mut trace = Vec::new();
    let result = recognize(g, &mut trace)?;
    trace.reverse();
    Ok((result, trace))
}

pub fn is_comb(g: &Graph) -> bool {
    matches!(comb_decompose(g), Ok(RecognitionResult::Decomposition(_)))
}

fn recognize(g: &Graph, trace: &mut Vec<Step>) -> Result<RecognitionResult> {
    let part = match split_partition(g) {
        Ok(p) => p,
        Err(w) => {
            trace.push(Step::SplitWitness);
            return Ok(RecognitionResult::Witness(w));
        }
    };
    let Some(p4) = find_induced(g, PatternKind::P4) else {
        let t = threshold_decompose(g, &part)?
            .map_err(|w| Error::Internal(format!("P4 {:?} found after a P4-free scan", w.vertices)))?;
        trace.push(Step::Threshold);
        return certified(g, threshold_to_comb(&t));
    };
    let [a, b, b2, a2] = [p4.vertices[0], p4.vertices[1], p4.vertices[2], p4.vertices[3]];

    if let Some(x) = mirror_breaker(g, [a, b, b2, a2]) {
        trace.push(Step::MirrorWitness);
        return Ok(RecognitionResult::Witness(local_witness(g, &[x, a, b, b2, a2])?));
    }

    let keep = g.vertices().difference(&VertexSet::from([a2, b2]));
    let (sub, map) = g.induced_subgraph(&keep)?;
    let inner = match recognize(&sub, trace)? {
        RecognitionResult::Witness(w) => return Ok(RecognitionResult::Witness(w.mapped(&map))),
        RecognitionResult::Decomposition(d) => d.mapped(&map),
    };

    let path = Path { a, b, b2, a2 };
    for (step, candidate) in surgeries(&inner, &path) {
        if validate_comb(g, &candidate).is_empty() {
            trace.push(step);
            return Ok(RecognitionResult::Decomposition(candidate));
        }
    }
    for candidate in level_repairs(g, &inner, &path) {
        if validate_comb(g, &candidate).is_empty() {
            trace.push(Step::LevelRepair);
            return Ok(RecognitionResult::Decomposition(candidate));
        }
    }
    for candidate in slot_repairs(g, &inner, &path) {
        if validate_comb(g, &candidate).is_empty() {
            trace.push(Step::SlotRepair);
            return Ok(RecognitionResult::Decomposition(candidate));
        }
    }
    trace.push(Step::Rebuild);
    match rebuild(g, &part) {
        Some(dec) if validate_comb(g, &dec).is_empty() => Ok(RecognitionResult::Decomposition(dec)),
        _ => match find_any_forbidden(g) {
            Some(w) => Ok(RecognitionResult::Witness(w)),
            None => Err(Error::Internal(format!(
                "no placement of the pair ({a2}, {b2}) validates and no forbidden pattern exists"
            ))),
        },
    }
}

fn certified(g: &Graph, dec: CombDecomposition) -> Result<RecognitionResult> {
    let violations = validate_comb(g, &dec);
    match violations.first() {
        None => Ok(RecognitionResult::Decomposition(dec)),
        Some(v) => Err(Error::Internal(format!("threshold embedding failed validation: {v}"))),
    }
}

/// A forbidden pattern inside `vertices`, or anywhere in `g` if that small
/// set happens not to contain one.
fn local_witness(g: &Graph, vertices: &[usize]) -> Result<Witness> {
    let set: VertexSet = vertices.iter().copied().collect();
    let (sub, map) = g.induced_subgraph(&set)?;
    find_any_forbidden(&sub)
        .map(|w| w.mapped(&map))
        .or_else(|| find_any_forbidden(g))
        .ok_or_else(|| Error::Internal("mirror check failed on a forbidden-pattern-free graph".into()))
}

struct Path {
    a: usize,
    b: usize,
    b2: usize,
    a2: usize,
}

/// The case analysis on the roles of `a` and `b` in the smaller
/// decomposition. Candidates are returned unvalidated.
fn surgeries(dec: &CombDecomposition, p: &Path) -> Vec<(Step, CombDecomposition)> {
    let (Some(ra), Some(rb)) = (dec.role_of(p.a), dec.role_of(p.b)) else {
        return vec![];
    };
    let mut out = Vec::new();
    match (ra, rb) {
        (Role::M(i), rb) if y_index(rb) == Some(i) && dec.relation(i).contains(&(p.b, p.a)) => {
            let mut d = dec.clone();
            d.m[i - 1].insert(p.a2);
            d.y_level_mut(i).insert(p.b2);
            d.matchings[i - 1].push((p.b2, p.a2));
            d.normalize();
            out.push((Step::MatchedExtension, d));
        }
        (Role::X(i), Role::A(j)) if dec.n >= 1 && i == dec.n && j == dec.n => {
            let n = dec.n;
            if dec.a[n] == VertexSet::singleton(p.b) && dec.x[n].is_empty() {
                let mut d = dec.clone();
                d.x[n - 1].remove(p.a);
                d.x[n - 1].insert(p.b);
                d.a[n] = VertexSet::singleton(p.a);
                d.x[n].insert(p.b2);
                d.a.push(VertexSet::singleton(p.a2));
                d.x.push(VertexSet::new());
                d.n += 1;
                out.push((Step::ThresholdSwap, d));
            }
        }
        (ra, Role::M(1)) if dec.n == 0 && y_index(ra) == Some(1) => {
            if *dec.y_level(1) == VertexSet::singleton(p.a) && *dec.m_level(1) == VertexSet::singleton(p.b) {
                let mut d = dec.clone();
                *d.y_level_mut(1) = VertexSet::from([p.b, p.b2]);
                d.m[0] = VertexSet::from([p.a, p.a2]);
                d.matchings[0] = vec![(p.b, p.a), (p.b2, p.a2)];
                d.normalize();
                out.push((Step::PairSwap, d));
            }
        }
        (Role::Y(2), Role::M(1)) if dec.n == 0 && dec.l >= 2 => {
            let y1 = dec.y_level(1);
            if y1.len() == 1 && *dec.m_level(1) == VertexSet::singleton(p.b) && dec.m_level(2).is_empty() {
                let c = y1.first().expect("one vertex");
                let mut d = dec.clone();
                d.m[0] = VertexSet::from([p.a, p.a2]);
                *d.y_level_mut(1) = VertexSet::from([p.b, p.b2]);
                let y2 = d.y_level_mut(2);
                y2.remove(p.a);
                y2.insert(c);
                d.matchings[0] = vec![(p.b, p.a), (p.b2, p.a2)];
                d.normalize();
                out.push((Step::Rotation, d));
            }
        }
        _ => {}
    }
    out
}

fn y_index(r: Role) -> Option<usize> {
    match r {
        Role::X(1) => Some(1),
        Role::Y(j) => Some(j),
        _ => None,
    }
}

/// The level relation read off the graph.
fn relation_from_graph(g: &Graph, ys: &VertexSet, ms: &VertexSet) -> Vec<(usize, usize)> {
    ys.iter()
        .flat_map(|y| g.row(y).intersection(ms).iter().map(move |m| (y, m)).collect::<Vec<_>>())
        .collect()
}

/// `a2` joins `M_i` and `b2` joins `Y_i`, for every level `i`, with the
/// level relation recomputed from `g`.
fn level_repairs(g: &Graph, dec: &CombDecomposition, p: &Path) -> Vec<CombDecomposition> {
    (1..=dec.l)
        .map(|i| {
            let mut d = dec.clone();
            d.m[i - 1].insert(p.a2);
            d.y_level_mut(i).insert(p.b2);
            d.matchings[i - 1] = relation_from_graph(g, d.y_level(i), d.m_level(i));
            d
        })
        .collect()
}

/// `b2` into `Y_{l+1}` or `Y_{l+2}`, with `a2` into `A_0` or a fresh bottom
/// level.
fn slot_repairs(g: &Graph, dec: &CombDecomposition, p: &Path) -> Vec<CombDecomposition> {
    let l = dec.l;
    let mut out = Vec::new();
    for top in [l + 1, l + 2] {
        let mut in_a0 = dec.clone();
        in_a0.a[0].insert(p.a2);
        in_a0.y_level_mut(top).insert(p.b2);
        out.push(in_a0);

        let mut fresh = dec.clone();
        fresh.y.insert(l - 1, VertexSet::new());
        fresh.m.push(VertexSet::singleton(p.a2));
        fresh.matchings.push(vec![]);
        fresh.l += 1;
        fresh.k0 = fresh.l;
        fresh.y_level_mut(top + 1).insert(p.b2);
        for i in 1..=fresh.l {
            fresh.matchings[i - 1] = relation_from_graph(g, fresh.y_level(i), fresh.m_level(i));
        }
        out.push(fresh);
    }
    out
}

/// Direct construction from the stable-side neighborhoods: stable vertices
/// whose neighborhoods cross form one tooth level, levels are ordered by
/// neighborhood containment, clique vertices seeing every stable vertex go
/// to `Y_{l+1}` and those seeing none to `Y_{l+2}`.
pub(crate) fn rebuild(g: &Graph, part: &SplitPartition) -> Option<CombDecomposition> {
    let s: Vec<usize> = part.stable.to_vec();
    if s.is_empty() {
        return None;
    }
    let nbr = |v: usize| g.row(v).intersection(&part.clique);
    let crossing = |u: usize, v: usize| {
        let (nu, nv) = (nbr(u), nbr(v));
        !nu.is_subset(&nv) && !nv.is_subset(&nu)
    };

    // components of the crossing relation, with twins merged into the class
    // of any vertex they cross
    let mut comp: Vec<usize> = (0..s.len()).collect();
    fn root(comp: &mut [usize], mut i: usize) -> usize {
        while comp[i] != i {
            comp[i] = comp[comp[i]];
            i = comp[i];
        }
        i
    }
    for i in 0..s.len() {
        for j in 0..i {
            if crossing(s[i], s[j]) || nbr(s[i]) == nbr(s[j]) {
                let (ri, rj) = (root(&mut comp, i), root(&mut comp, j));
                comp[ri.max(rj)] = ri.min(rj);
            }
        }
    }
    let mut blocks: Vec<VertexSet> = Vec::new();
    let mut index = std::collections::BTreeMap::new();
    for i in 0..s.len() {
        let r = root(&mut comp, i);
        let k = *index.entry(r).or_insert_with(|| {
            blocks.push(VertexSet::new());
            blocks.len() - 1
        });
        blocks[k].insert(s[i]);
    }
    let union = |b: &VertexSet| b.iter().fold(VertexSet::new(), |acc, v| acc.union(&nbr(v)));
    let common = |b: &VertexSet| b.iter().fold(part.clique.clone(), |acc, v| acc.intersection(&nbr(v)));
    // a higher block's common neighborhood contains everything a lower block
    // sees, so (common, union) sizes order nested blocks strictly
    blocks.sort_by_key(|b| (std::cmp::Reverse(common(b).len()), std::cmp::Reverse(union(b).len()), b.first()));

    let seen_by_all = part.stable.iter().fold(part.clique.clone(), |acc, v| acc.intersection(&nbr(v)));
    let seen_by_some = part.stable.iter().fold(VertexSet::new(), |acc, v| acc.union(&nbr(v)));
    // (M_i, Y_i) from the bottom up; a block whose members are not twins
    // leaves its common neighbors to a clique-only level just below it
    let mut below = seen_by_all.clone();
    let mut levels: Vec<(VertexSet, VertexSet)> = Vec::new();
    for block in blocks.iter().rev() {
        let (all, shared) = (union(block), common(block));
        if all != shared {
            let shared = shared.difference(&below);
            if !shared.is_empty() {
                levels.push((VertexSet::new(), shared.clone()));
                below.union_with(&shared);
            }
        }
        let own = all.difference(&below);
        below.union_with(&own);
        levels.push((block.clone(), own));
    }
    levels.reverse();
    let l = levels.len();
    let mut dec = CombDecomposition {
        n: 0,
        l,
        k0: l,
        a: vec![VertexSet::new()],
        x: vec![VertexSet::new()],
        m: levels.iter().map(|(m, _)| m.clone()).collect(),
        y: vec![VertexSet::new(); l + 1],
        matchings: vec![vec![]; l],
    };
    for (i, (ms, ys)) in levels.into_iter().enumerate() {
        dec.matchings[i] = relation_from_graph(g, &ys, &ms);
        *dec.y_level_mut(i + 1) = ys;
    }
    *dec.y_level_mut(l + 1) = seen_by_all;
    *dec.y_level_mut(l + 2) = part.clique.difference(&seen_by_some);
    dec.normalize();
    Some(dec)
}
