//! Scrambles and their order `min(h, e)`.

use std::fmt;

use crate::constructions::Product;
use crate::error::{Error, Result};
use crate::flow::INF;
use crate::graph::{Multigraph, VertexSet};
use crate::invariants::{boundary_unchecked, min_cut_between, vertex_connectivity};

/// A nonempty list of nonempty connected eggs on a host graph.
///
/// Construction drops duplicates and eggs that strictly contain another egg;
/// neither the hitting number nor the egg-cut number changes.
#[derive(Clone, PartialEq, Eq)]
pub struct Scramble {
    host: Multigraph,
    eggs: Vec<VertexSet>,
}

impl Scramble {
    pub fn new(host: &Multigraph, eggs: Vec<VertexSet>) -> Result<Self> {
        if eggs.is_empty() {
            return Err(Error::EmptyScramble);
        }
        for (i, egg) in eggs.iter().enumerate() {
            host.check_set(egg)?;
            if egg.is_empty() {
                return Err(Error::EmptyEgg(i));
            }
            if !host.is_connected_subset(egg) {
                return Err(Error::DisconnectedEgg(i));
            }
        }
        let mut kept: Vec<VertexSet> = Vec::with_capacity(eggs.len());
        for (i, egg) in eggs.iter().enumerate() {
            let dominated = eggs
                .iter()
                .enumerate()
                .any(|(j, other)| other.is_subset(egg) && (other != egg || (j < i)));
            if !dominated {
                kept.push(egg.clone());
            }
        }
        Ok(Scramble {
            host: host.clone(),
            eggs: kept,
        })
    }

    pub fn host(&self) -> &Multigraph {
        &self.host
    }

    pub fn eggs(&self) -> &[VertexSet] {
        &self.eggs
    }
}

impl fmt::Debug for Scramble {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.eggs).finish()
    }
}

/// The egg-cut number: infinite when every two eggs meet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EggCut {
    Infinite,
    Finite {
        size: u64,
        /// Source side `A`, containing egg `pair.0`; its complement contains egg `pair.1`.
        side: VertexSet,
        pair: (usize, usize),
    },
}

impl EggCut {
    pub fn value(&self) -> Option<u64> {
        match self {
            EggCut::Infinite => None,
            EggCut::Finite { size, .. } => Some(*size),
        }
    }
}

impl fmt::Display for EggCut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EggCut::Infinite => write!(f, "inf"),
            EggCut::Finite { size, .. } => write!(f, "{size}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScrambleOrder {
    pub order: u64,
    pub hitting: u64,
    pub hitting_set: VertexSet,
    pub egg_cut: EggCut,
}

/// Minimum hitting set by branch and bound.
pub fn hitting_number(s: &Scramble) -> (u64, VertexSet) {
    let n = s.host.vertex_count();
    let mut search = HittingSearch {
        eggs: &s.eggs,
        best: greedy_hitting_set(&s.eggs, n),
        chosen: Vec::new(),
    };
    search.run(&VertexSet::empty(n));
    let set = VertexSet::from_vertices(n, search.best).unwrap();
    (set.len() as u64, set)
}

fn greedy_hitting_set(eggs: &[VertexSet], n: usize) -> Vec<usize> {
    let mut hit = vec![false; eggs.len()];
    let mut out = Vec::new();
    while let Some(v) = (0..n)
        .map(|v| {
            (
                eggs.iter()
                    .zip(&hit)
                    .filter(|(e, &h)| !h && e.contains(v))
                    .count(),
                v,
            )
        })
        .filter(|&(c, _)| c > 0)
        .max_by_key(|&(c, v)| (c, std::cmp::Reverse(v)))
        .map(|(_, v)| v)
    {
        out.push(v);
        for (e, h) in eggs.iter().zip(hit.iter_mut()) {
            *h |= e.contains(v);
        }
    }
    out
}

struct HittingSearch<'a> {
    eggs: &'a [VertexSet],
    best: Vec<usize>,
    chosen: Vec<usize>,
}

impl HittingSearch<'_> {
    fn run(&mut self, forbidden: &VertexSet) {
        let unhit: Vec<&VertexSet> = self
            .eggs
            .iter()
            .filter(|e| !self.chosen.iter().any(|&v| e.contains(v)))
            .collect();
        if unhit.is_empty() {
            if self.chosen.len() < self.best.len() {
                self.best = self.chosen.clone();
            }
            return;
        }
        // Pairwise disjoint unhit eggs each need their own vertex.
        let mut packing: Vec<VertexSet> = Vec::new();
        let mut by_size = unhit.clone();
        by_size.sort_by_key(|e| e.len());
        for e in by_size {
            if packing.iter().all(|p| p.is_disjoint(e)) {
                packing.push(e.clone());
            }
        }
        if self.chosen.len() + packing.len() >= self.best.len() {
            return;
        }
        let mut smallest: Option<VertexSet> = None;
        for e in &unhit {
            let free = e.difference(forbidden);
            if free.is_empty() {
                return;
            }
            if smallest.as_ref().is_none_or(|s| free.len() < s.len()) {
                smallest = Some(free);
            }
        }
        let mut forbidden = forbidden.clone();
        for v in smallest.unwrap().iter() {
            self.chosen.push(v);
            self.run(&forbidden);
            self.chosen.pop();
            forbidden.insert(v);
        }
    }
}

/// Minimum egg-cut over all pairs of disjoint eggs.
pub fn egg_cut_number(s: &Scramble) -> EggCut {
    let mut best = EggCut::Infinite;
    let eggs = &s.eggs;
    for i in 0..eggs.len() {
        for j in i + 1..eggs.len() {
            if eggs[i].intersects(&eggs[j]) {
                continue;
            }
            let limit = best.value().map_or(INF, |b| b as i64);
            let (size, side) = min_cut_between(&s.host, &eggs[i], &eggs[j], limit);
            if (size as i64) < limit {
                best = EggCut::Finite {
                    size,
                    side,
                    pair: (i, j),
                };
            }
        }
    }
    best
}

pub fn scramble_order(s: &Scramble) -> ScrambleOrder {
    let (hitting, hitting_set) = hitting_number(s);
    let egg_cut = egg_cut_number(s);
    let order = egg_cut.value().map_or(hitting, |e| e.min(hitting));
    ScrambleOrder {
        order,
        hitting,
        hitting_set,
        egg_cut,
    }
}

/// Checks that the witnesses in `order` are valid for `s`.
pub fn verify_order(s: &Scramble, order: &ScrambleOrder) -> bool {
    let hits = s.eggs.iter().all(|e| e.intersects(&order.hitting_set))
        && order.hitting_set.len() as u64 == order.hitting;
    let cut_ok = match &order.egg_cut {
        EggCut::Infinite => s
            .eggs
            .iter()
            .enumerate()
            .all(|(i, a)| s.eggs[i + 1..].iter().all(|b| a.intersects(b))),
        EggCut::Finite { size, side, pair } => {
            s.eggs[pair.0].is_subset(side)
                && s.eggs[pair.1].is_disjoint(side)
                && boundary_unchecked(&s.host, side) == *size
        }
    };
    let min_ok = order.order
        == order
            .egg_cut
            .value()
            .map_or(order.hitting, |e| e.min(order.hitting));
    hits && cut_ok && min_ok
}

/// One egg per vertex.
pub fn vertex_scramble(g: &Multigraph) -> Scramble {
    let n = g.vertex_count();
    let eggs = (0..n)
        .map(|v| VertexSet::singleton(n, v).unwrap())
        .collect();
    Scramble::new(g, eggs).unwrap()
}

/// One egg `{u, v}` per adjacent pair; parallel edges give a single egg.
pub fn edge_scramble(g: &Multigraph) -> Result<Scramble> {
    let n = g.vertex_count();
    let eggs: Vec<VertexSet> = g
        .edges()
        .into_iter()
        .map(|(u, v, _)| VertexSet::from_vertices(n, [u, v]).unwrap())
        .collect();
    if eggs.is_empty() {
        return Err(Error::Edgeless);
    }
    Scramble::new(g, eggs)
}

/// On `G □ H`: for each `w ∈ V(H)` and each `(k-1)`-subset `R ⊆ V(G)`, the
/// egg `(V(G) - R) □ {w}`. Needs `κ(G) >= k >= 1` and `|V(G)| >= 2k - 1`.
pub fn product_scramble(g: &Multigraph, h: &Multigraph, k: usize) -> Result<Scramble> {
    let ng = g.vertex_count();
    let mut failed = Vec::new();
    if k < 1 {
        failed.push("k >= 1".to_string());
    }
    let kappa = vertex_connectivity(g);
    if (kappa as usize) < k {
        failed.push(format!("kappa(G) = {kappa} >= k = {k}"));
    }
    if ng + 1 < 2 * k {
        failed.push(format!(
            "|V(G)| = {ng} >= 2k - 1 = {}",
            (2 * k).saturating_sub(1)
        ));
    }
    if !h.is_connected() {
        failed.push("H connected".to_string());
    }
    if !failed.is_empty() {
        return Err(Error::Hypothesis(failed));
    }
    let product = Product::new(g, h);
    let mut eggs = Vec::new();
    let mut removed = Vec::with_capacity(k - 1);
    for w in 0..h.vertex_count() {
        let copy = product.canonical_copy(crate::constructions::Factor::G, w)?;
        subsets(ng, k - 1, 0, &mut removed, &mut |r| {
            let mut egg = copy.clone();
            for &u in r {
                egg.remove(product.index(u, w));
            }
            eggs.push(egg);
        });
    }
    Scramble::new(&product.graph, eggs)
}

fn subsets(
    n: usize,
    k: usize,
    start: usize,
    cur: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]),
) {
    if cur.len() == k {
        visit(cur);
        return;
    }
    for v in start..n {
        cur.push(v);
        subsets(n, k, v + 1, cur, visit);
        cur.pop();
    }
}
