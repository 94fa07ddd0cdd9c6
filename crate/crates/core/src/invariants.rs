//! Standard graph invariants: valence, connectivity, cuts, independence number,
//! and a few structural recognisers used by the product certifier.

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::flow::{FlowNetwork, INF};
use crate::graph::{Multigraph, VertexSet};

/// Minimum valence δ(G).
pub fn min_degree(g: &Multigraph) -> u64 {
    g.valences().iter().copied().min().unwrap_or(0)
}

pub fn valence(g: &Multigraph, v: usize) -> Result<u64> {
    g.check_vertex(v)?;
    Ok(g.valence(v))
}

/// Connected components, each as a vertex set, ordered by smallest vertex.
pub fn components(g: &Multigraph) -> Vec<VertexSet> {
    let n = g.vertex_count();
    let mut assigned = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if assigned[start] {
            continue;
        }
        let mut comp = VertexSet::empty(n);
        let mut stack = vec![start];
        assigned[start] = true;
        while let Some(u) = stack.pop() {
            comp.insert(u);
            for &(v, _) in g.neighbors(u) {
                if !assigned[v] {
                    assigned[v] = true;
                    stack.push(v);
                }
            }
        }
        out.push(comp);
    }
    out
}

/// |E(A, A^C)| counted with multiplicity.
pub fn edge_boundary(g: &Multigraph, a: &VertexSet) -> Result<u64> {
    g.check_set(a)?;
    if a.is_empty() || a.is_full() {
        return Err(Error::NoCut);
    }
    Ok(boundary_unchecked(g, a))
}

pub(crate) fn boundary_unchecked(g: &Multigraph, a: &VertexSet) -> u64 {
    let mut total = 0u64;
    for u in a.iter() {
        for &(v, k) in g.neighbors(u) {
            if !a.contains(v) {
                total += k as u64;
            }
        }
    }
    total
}

/// Minimum number of edges separating `sources` from `sinks`, with a
/// source-side witness. The two sets must be disjoint.
pub(crate) fn min_cut_between(
    g: &Multigraph,
    sources: &VertexSet,
    sinks: &VertexSet,
    limit: i64,
) -> (u64, VertexSet) {
    let n = g.vertex_count();
    let (s, t) = (n, n + 1);
    let mut net = FlowNetwork::new(n + 2);
    for (u, v, k) in g.edges() {
        net.add_edge(u, v, k as i64);
    }
    for v in sources.iter() {
        net.add_arc(s, v, INF);
    }
    for v in sinks.iter() {
        net.add_arc(v, t, INF);
    }
    let flow = net.max_flow(s, t, limit);
    let side = net.source_side(s);
    let set = VertexSet::from_vertices(n, (0..n).filter(|&v| side[v])).unwrap();
    (flow as u64, set)
}

/// Edge connectivity λ(G), counting multiplicity. Zero for disconnected
/// graphs and for the one-vertex graph.
pub fn edge_connectivity(g: &Multigraph) -> u64 {
    let n = g.vertex_count();
    if n < 2 || !g.is_connected() {
        return 0;
    }
    let mut best = min_degree(g) as i64;
    for t in 1..n {
        let mut net = FlowNetwork::new(n);
        for (u, v, k) in g.edges() {
            net.add_edge(u, v, k as i64);
        }
        best = best.min(net.max_flow(0, t, best));
    }
    best as u64
}

/// A minimum edge cut as a vertex side `A` with |E(A, A^C)| = λ(G).
/// `None` when the graph has fewer than two vertices.
pub fn min_edge_cut(g: &Multigraph) -> Option<(u64, VertexSet)> {
    let n = g.vertex_count();
    if n < 2 {
        return None;
    }
    let mut best: Option<(u64, VertexSet)> = None;
    let src = VertexSet::singleton(n, 0).unwrap();
    for t in 1..n {
        let sink = VertexSet::singleton(n, t).unwrap();
        let limit = best.as_ref().map_or(INF, |b| b.0 as i64);
        let (size, side) = min_cut_between(g, &src, &sink, limit);
        if best.as_ref().is_none_or(|b| size < b.0) {
            best = Some((size, side));
        }
    }
    best
}

/// Vertex connectivity κ(G). Complete graphs (every pair adjacent) get n − 1;
/// disconnected graphs get 0.
pub fn vertex_connectivity(g: &Multigraph) -> u64 {
    let n = g.vertex_count();
    if n < 2 || !g.is_connected() {
        return 0;
    }
    let mut best = (n - 1) as i64;
    for s in 0..n {
        for t in s + 1..n {
            if g.is_adjacent(s, t) {
                continue;
            }
            // v_in = v, v_out = v + n
            let mut net = FlowNetwork::new(2 * n);
            for v in 0..n {
                let cap = if v == s || v == t { INF } else { 1 };
                net.add_arc(v, v + n, cap);
            }
            for (u, v, _) in g.edges() {
                net.add_arc(u + n, v, INF);
                net.add_arc(v + n, u, INF);
            }
            best = best.min(net.max_flow(s + n, t, best));
        }
    }
    best as u64
}

/// Edges `(u, v)` with `u < v` whose removal disconnects their endpoints.
pub fn bridges(g: &Multigraph) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (u, v, k) in g.edges() {
        if k != 1 {
            continue;
        }
        let mut seen = vec![false; g.vertex_count()];
        seen[u] = true;
        let mut stack = vec![u];
        let mut reached = false;
        while let Some(x) = stack.pop() {
            for &(y, _) in g.neighbors(x) {
                if (x == u && y == v) || (x == v && y == u) {
                    continue;
                }
                if !seen[y] {
                    if y == v {
                        reached = true;
                        break;
                    }
                    seen[y] = true;
                    stack.push(y);
                }
            }
            if reached {
                break;
            }
        }
        if !reached {
            out.push((u, v));
        }
    }
    out
}

pub fn is_connected_subset(g: &Multigraph, a: &VertexSet) -> Result<bool> {
    g.check_set(a)?;
    Ok(g.is_connected_subset(a))
}

/// Exact independence number α(G); multiplicities are ignored.
pub fn independence_number(g: &Multigraph) -> usize {
    max_independent_set(g).len()
}

/// A maximum independent set, found by branch and bound on the
/// minimum-degree vertex of the remaining candidates.
pub fn max_independent_set(g: &Multigraph) -> VertexSet {
    let n = g.vertex_count();
    let nbrs: Vec<FixedBitSet> = (0..n)
        .map(|v| {
            let mut b = FixedBitSet::with_capacity(n);
            for &(u, _) in g.neighbors(v) {
                b.insert(u);
            }
            b
        })
        .collect();
    let mut cand = FixedBitSet::with_capacity(n);
    cand.insert_range(..);
    let mut search = MisSearch {
        nbrs: &nbrs,
        best: Vec::new(),
        current: Vec::new(),
    };
    search.run(cand);
    VertexSet::from_vertices(n, search.best).unwrap()
}

struct MisSearch<'a> {
    nbrs: &'a [FixedBitSet],
    best: Vec<usize>,
    current: Vec<usize>,
}

impl MisSearch<'_> {
    fn run(&mut self, cand: FixedBitSet) {
        let remaining = cand.count_ones(..);
        if remaining == 0 {
            if self.current.len() > self.best.len() {
                self.best = self.current.clone();
            }
            return;
        }
        if self.current.len() + remaining <= self.best.len() {
            return;
        }
        let (v, deg) = cand
            .ones()
            .map(|v| (v, self.nbrs[v].intersection_count(&cand)))
            .min_by_key(|&(v, d)| (d, v))
            .unwrap();
        // A vertex of degree <= 1 among the candidates lies in some maximum
        // independent set of what remains.
        let branch: Vec<usize> = if deg <= 1 {
            vec![v]
        } else {
            std::iter::once(v)
                .chain(self.nbrs[v].ones().filter(|&u| cand.contains(u)))
                .collect()
        };
        for u in branch {
            let mut next = cand.clone();
            next.difference_with(&self.nbrs[u]);
            next.set(u, false);
            self.current.push(u);
            self.run(next);
            self.current.pop();
        }
    }
}

/// A connected graph with |E| = |V| − 1 (multiplicity counted).
pub fn is_tree(g: &Multigraph) -> bool {
    g.is_connected() && g.edge_count() + 1 == g.vertex_count() as u64
}

/// Length of the cycle if `g` is a cycle graph, with C_2 the doubled edge.
pub fn cycle_length(g: &Multigraph) -> Option<usize> {
    let n = g.vertex_count();
    if n == 2 {
        return (g.mult(0, 1) == 2).then_some(2);
    }
    (n >= 3 && g.is_simple() && g.is_connected() && g.valences().iter().all(|&d| d == 2))
        .then_some(n)
}

/// `Some(n)` if `g` is the simple complete graph K_n.
pub fn complete_size(g: &Multigraph) -> Option<usize> {
    let n = g.vertex_count();
    let ok = (0..n).all(|u| (0..n).all(|v| u == v || g.mult(u, v) == 1));
    ok.then_some(n)
}

/// `Some((m, n))` with m <= n if `g` is the simple complete bipartite graph K_{m,n}.
pub fn complete_bipartite_parts(g: &Multigraph) -> Option<(usize, usize)> {
    let n = g.vertex_count();
    if n < 2 || !g.is_simple() || !g.is_connected() {
        return None;
    }
    // 2-colour from vertex 0
    let dist = g.distances(0);
    let side: Vec<bool> = dist.iter().map(|d| d.unwrap() % 2 == 1).collect();
    for u in 0..n {
        for v in u + 1..n {
            let want = side[u] != side[v];
            if g.is_adjacent(u, v) != want {
                return None;
            }
        }
    }
    let a = side.iter().filter(|&&s| s).count();
    let b = n - a;
    Some((a.min(b), a.max(b)))
}
