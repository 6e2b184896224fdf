//! Exhaustive search for a comb labeling, written against the axioms
//! directly so it can referee the recognizer and the validator.

use crate::comb::CombDecomposition;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::VertexSet;

pub const DEFAULT_LIMIT: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Slot {
    A(usize),
    X(usize),
    M(usize),
    Y(usize),
}

/// Whether the axioms force an edge (`Some(true)`), force a non-edge
/// (`Some(false)`), or leave the pair to a level relation or to `k0`.
fn forced(l: usize, p: Slot, q: Slot) -> Option<bool> {
    use Slot::*;
    let stable = |s: Slot| matches!(s, A(_) | M(_));
    match (stable(p), stable(q)) {
        (true, true) => return Some(false),
        (false, false) => return Some(true),
        _ => {}
    }
    let (s, k) = if stable(p) { (p, q) } else { (q, p) };
    match (s, k) {
        (A(i), X(j)) => Some(j <= i),
        (A(_), Y(_)) => Some(true),
        (M(i), X(1)) => (i != 1).then_some(false),
        (M(_), X(_)) => Some(false),
        (M(i), Y(j)) if j <= l => (i != j).then_some(i < j),
        (M(_), Y(j)) if j == l + 1 => None,
        (M(_), Y(_)) => Some(false),
        _ => unreachable!(),
    }
}

struct Labeler<'a> {
    g: &'a Graph,
    n: usize,
    l: usize,
    slots: Vec<Slot>,
    order: Vec<usize>,
    assigned: Vec<Option<Slot>>,
    counts: Vec<usize>,
}

impl Labeler<'_> {
    fn slot_index(&self, s: Slot) -> usize {
        self.slots.iter().position(|&t| t == s).expect("known slot")
    }

    /// Slots that must end up nonempty and are still empty.
    fn missing(&self) -> usize {
        let count = |s: Slot| self.counts[self.slot_index(s)];
        let mut k = 0;
        for i in 1..=self.n {
            k += (count(Slot::A(i)) == 0) as usize + (count(Slot::X(i)) == 0) as usize;
        }
        for i in 1..self.l {
            let y = if i == 1 { Slot::X(1) } else { Slot::Y(i) };
            k += (count(Slot::M(i)) == 0 && count(y) == 0) as usize;
        }
        k
    }

    fn search(&mut self, depth: usize) -> bool {
        if self.missing() > self.order.len() - depth {
            return false;
        }
        if depth == self.order.len() {
            return self.leaf_ok();
        }
        let v = self.order[depth];
        for si in 0..self.slots.len() {
            let s = self.slots[si];
            let fits = self.order[..depth].iter().all(|&u| {
                let t = self.assigned[u].expect("assigned earlier");
                forced(self.l, s, t).map_or(true, |want| want == self.g.has_edge(u, v))
            });
            if !fits {
                continue;
            }
            self.assigned[v] = Some(s);
            self.counts[si] += 1;
            if self.search(depth + 1) {
                return true;
            }
            self.counts[si] -= 1;
            self.assigned[v] = None;
        }
        false
    }

    fn members(&self, s: Slot) -> VertexSet {
        (0..self.g.vertex_count()).filter(|&v| self.assigned[v] == Some(s)).collect()
    }

    fn level_y(&self, i: usize) -> VertexSet {
        self.members(if i == 1 { Slot::X(1) } else { Slot::Y(i) })
    }

    fn leaf_ok(&self) -> bool {
        let l = self.l;
        for i in 1..=l {
            if !relation_shape_ok(self.g, &self.level_y(i), &self.members(Slot::M(i))) {
                return false;
            }
        }
        if self.k0().is_none() {
            return false;
        }
        let r1_nonempty = !self.level_y(1).is_empty() && !self.members(Slot::M(1)).is_empty();
        !(r1_nonempty && !self.members(Slot::A(0)).is_empty() && !self.members(Slot::Y(l + 2)).is_empty())
    }

    /// Largest `k0` such that `Y_{l+1}` is complete to `M_1..M_{k0}` and
    /// anticomplete to the rest.
    fn k0(&self) -> Option<usize> {
        let top = self.members(Slot::Y(self.l + 1));
        let mut k0 = None;
        for k in (1..=self.l).rev() {
            let ok = (1..=self.l).all(|i| {
                self.members(Slot::M(i))
                    .iter()
                    .all(|m| top.iter().all(|y| self.g.has_edge(m, y) == (i <= k)))
            });
            if ok {
                k0 = Some(k);
                break;
            }
        }
        k0
    }

    fn decomposition(&self) -> CombDecomposition {
        let (n, l) = (self.n, self.l);
        let mut dec = CombDecomposition {
            n,
            l,
            k0: self.k0().expect("checked at the leaf"),
            a: (0..=n).map(|i| self.members(Slot::A(i))).collect(),
            x: (1..=n + 1).map(|j| self.members(Slot::X(j))).collect(),
            m: (1..=l).map(|i| self.members(Slot::M(i))).collect(),
            y: (2..=l + 2).map(|j| self.members(Slot::Y(j))).collect(),
            matchings: (1..=l)
                .map(|i| {
                    let ms = self.members(Slot::M(i));
                    self.level_y(i)
                        .iter()
                        .flat_map(|y| ms.iter().filter(|&m| self.g.has_edge(y, m)).map(move |m| (y, m)).collect::<Vec<_>>())
                        .collect()
                })
                .collect(),
        };
        dec.normalize();
        dec
    }
}

/// Complete, a perfect matching, or (with three or more vertices per side) a
/// complete join minus a perfect matching.
fn relation_shape_ok(g: &Graph, ys: &VertexSet, ms: &VertexSet) -> bool {
    let deg_y: Vec<usize> = ys.iter().map(|y| g.row(y).intersection_len(ms)).collect();
    let deg_m: Vec<usize> = ms.iter().map(|m| g.row(m).intersection_len(ys)).collect();
    let (p, q) = (ys.len(), ms.len());
    if deg_y.iter().all(|&d| d == q) {
        return true;
    }
    p == q && (deg_y.iter().chain(&deg_m).all(|&d| d == 1) || p >= 3 && deg_y.iter().chain(&deg_m).all(|&d| d == p - 1))
}

/// A decomposition of `g` found by trying every assignment of vertices to
/// sets, or `None` if no labeling satisfies the axioms.
pub fn brute_force_comb_label(g: &Graph, limit_n: usize) -> Result<Option<CombDecomposition>> {
    let vn = g.vertex_count();
    if vn > limit_n {
        return Err(Error::TooLarge { what: "brute-force labeling", n: vn, limit: limit_n });
    }
    let mut order: Vec<usize> = (0..vn).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    for n in 0..=vn / 2 {
        for l in 1..=vn + 1 {
            // clique slots first, so cliques come out with an empty stable side
            let slots: Vec<Slot> = (1..=n + 1)
                .map(Slot::X)
                .chain((2..=l + 2).map(Slot::Y))
                .chain((0..=n).map(Slot::A))
                .chain((1..=l).map(Slot::M))
                .collect();
            let mut lab = Labeler {
                g,
                n,
                l,
                counts: vec![0; slots.len()],
                slots,
                order: order.clone(),
                assigned: vec![None; vn],
            };
            if lab.search(0) {
                return Ok(Some(lab.decomposition()));
            }
        }
    }
    Ok(None)
}
