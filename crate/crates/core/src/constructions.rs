//! Cartesian products, cones and smoothing of 2-valent vertices.

use crate::error::{Error, Result};
use crate::graph::{Multigraph, VertexSet};

/// G □ H with vertex (u, w) stored at index `u * |V(H)| + w`.
pub fn cartesian_product(g: &Multigraph, h: &Multigraph) -> Multigraph {
    let (ng, nh) = (g.vertex_count(), h.vertex_count());
    let n = ng * nh;
    let mut mult = vec![0u32; n * n];
    for u in 0..ng {
        for w1 in 0..nh {
            let a = u * nh + w1;
            for &(w2, k) in h.neighbors(w1) {
                mult[a * n + u * nh + w2] = k;
            }
            for &(u2, k) in g.neighbors(u) {
                mult[a * n + u2 * nh + w1] = k;
            }
        }
    }
    Multigraph::from_matrix(n, mult)
}

/// Which factor of a product a canonical copy reproduces.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Factor {
    G,
    H,
}

/// A product graph together with its factors.
#[derive(Debug, Clone)]
pub struct Product {
    pub g: Multigraph,
    pub h: Multigraph,
    pub graph: Multigraph,
}

impl Product {
    pub fn new(g: &Multigraph, h: &Multigraph) -> Self {
        Product {
            g: g.clone(),
            h: h.clone(),
            graph: cartesian_product(g, h),
        }
    }

    pub fn index(&self, u: usize, w: usize) -> usize {
        u * self.h.vertex_count() + w
    }

    /// Canonical copy of `which` sitting over vertex `index` of the other factor:
    /// `G □ {index}` for `Factor::G`, `{index} □ H` for `Factor::H`.
    pub fn canonical_copy(&self, which: Factor, index: usize) -> Result<VertexSet> {
        let (ng, nh) = (self.g.vertex_count(), self.h.vertex_count());
        let n = ng * nh;
        match which {
            Factor::G => {
                self.h.check_vertex(index)?;
                VertexSet::from_vertices(n, (0..ng).map(|u| self.index(u, index)))
            }
            Factor::H => {
                self.g.check_vertex(index)?;
                VertexSet::from_vertices(n, (0..nh).map(|w| self.index(index, w)))
            }
        }
    }
}

/// The `l`-th cone over `g`: `l` new vertices `n..n+l`, each adjacent to every
/// other vertex, including one another.
pub fn cone(g: &Multigraph, l: usize) -> Multigraph {
    let n = g.vertex_count();
    let total = n + l;
    let mut mult = vec![0u32; total * total];
    for u in 0..n {
        for &(v, k) in g.neighbors(u) {
            mult[u * total + v] = k;
        }
    }
    for c in n..total {
        for v in 0..total {
            if v != c {
                mult[c * total + v] = 1;
                mult[v * total + c] = 1;
            }
        }
    }
    Multigraph::from_matrix(total, mult)
}

/// Repeatedly suppresses 2-valent vertices whose two edges go to distinct
/// neighbours, replacing the pair of edges by one direct edge. Returns the
/// smoothed graph and, for each of its vertices, the original index.
///
/// A cycle ends as C_2 (two vertices, doubled edge).
pub fn smooth_two_valent_with_map(g: &Multigraph) -> (Multigraph, Vec<usize>) {
    let n0 = g.vertex_count();
    let mut mult: Vec<u32> = (0..n0 * n0).map(|i| g.mult(i / n0, i % n0)).collect();
    let mut alive = vec![true; n0];
    loop {
        let candidate = (0..n0).find(|&v| {
            if !alive[v] {
                return false;
            }
            let row = &mult[v * n0..(v + 1) * n0];
            let deg: u32 = row.iter().sum();
            deg == 2 && row.iter().filter(|&&k| k > 0).count() == 2
        });
        let Some(v) = candidate else { break };
        let ends: Vec<usize> = (0..n0).filter(|&u| mult[v * n0 + u] > 0).collect();
        let (a, b) = (ends[0], ends[1]);
        mult[v * n0 + a] = 0;
        mult[a * n0 + v] = 0;
        mult[v * n0 + b] = 0;
        mult[b * n0 + v] = 0;
        mult[a * n0 + b] += 1;
        mult[b * n0 + a] += 1;
        alive[v] = false;
    }
    let keep: Vec<usize> = (0..n0).filter(|&v| alive[v]).collect();
    let m = keep.len();
    let mut out = vec![0u32; m * m];
    for (i, &u) in keep.iter().enumerate() {
        for (j, &v) in keep.iter().enumerate() {
            out[i * m + j] = mult[u * n0 + v];
        }
    }
    (Multigraph::from_matrix(m, out), keep)
}

pub fn smooth_two_valent(g: &Multigraph) -> Result<Multigraph> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(smooth_two_valent_with_map(g).0)
}
