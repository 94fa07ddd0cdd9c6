//! Finite loopless multigraphs and vertex subsets.

use std::collections::VecDeque;
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// A subset of `0..n` for a host graph on `n` vertices.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    bits: FixedBitSet,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        VertexSet {
            bits: FixedBitSet::with_capacity(n),
        }
    }

    pub fn full(n: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(n);
        bits.insert_range(..);
        VertexSet { bits }
    }

    pub fn singleton(n: usize, v: usize) -> Result<Self> {
        Self::from_vertices(n, [v])
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(n: usize, vertices: I) -> Result<Self> {
        let mut set = Self::empty(n);
        for v in vertices {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            set.bits.insert(v);
        }
        Ok(set)
    }

    /// Host vertex count.
    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.universe()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.bits.contains(v)
    }

    /// Panics if `v` is outside the universe.
    pub fn insert(&mut self, v: usize) {
        self.bits.insert(v);
    }

    pub fn remove(&mut self, v: usize) {
        self.bits.set(v, false);
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn complement(&self) -> Self {
        let mut bits = self.bits.clone();
        bits.toggle_range(..);
        VertexSet { bits }
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        VertexSet { bits }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        VertexSet { bits }
    }

    pub fn difference(&self, other: &Self) -> Self {
        let mut bits = self.bits.clone();
        bits.difference_with(&other.bits);
        VertexSet { bits }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.bits.is_disjoint(&other.bits)
    }

    pub fn intersects(&self, other: &Self) -> bool {
        !self.is_disjoint(other)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|v| v.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// A finite multigraph on vertices `0..n` without loops.
///
/// Multiplicities are stored densely; every graph this crate works with
/// is small enough for that to be the cheapest representation.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Multigraph {
    n: usize,
    mult: Vec<u32>,
    adj: Vec<Vec<(usize, u32)>>,
    valence: Vec<u64>,
    edge_count: u64,
}

impl Multigraph {
    /// Builds a graph from `(u, v, multiplicity)` triples; repeated pairs accumulate.
    pub fn from_edges(n: usize, edges: &[(usize, usize, u32)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidSize(
                "a graph needs at least one vertex".into(),
            ));
        }
        let mut mult = vec![0u32; n * n];
        for &(u, v, k) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            if k < 1 {
                return Err(Error::ZeroMultiplicity(u, v));
            }
            mult[u * n + v] += k;
            mult[v * n + u] += k;
        }
        Ok(Self::from_matrix(n, mult))
    }

    /// Builds from a symmetric zero-diagonal multiplicity matrix (row-major).
    pub(crate) fn from_matrix(n: usize, mult: Vec<u32>) -> Self {
        debug_assert_eq!(mult.len(), n * n);
        let mut adj = vec![Vec::new(); n];
        let mut valence = vec![0u64; n];
        let mut twice_edges = 0u64;
        for u in 0..n {
            for v in 0..n {
                let k = mult[u * n + v];
                debug_assert_eq!(k, mult[v * n + u]);
                if k > 0 {
                    adj[u].push((v, k));
                    valence[u] += k as u64;
                    twice_edges += k as u64;
                }
            }
        }
        Multigraph {
            n,
            mult,
            adj,
            valence,
            edge_count: twice_edges / 2,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Number of edges counted with multiplicity.
    pub fn edge_count(&self) -> u64 {
        self.edge_count
    }

    pub fn mult(&self, u: usize, v: usize) -> u32 {
        self.mult[u * self.n + v]
    }

    pub fn valence(&self, v: usize) -> u64 {
        self.valence[v]
    }

    pub fn valences(&self) -> &[u64] {
        &self.valence
    }

    /// Neighbours of `v` with edge multiplicities, in increasing vertex order.
    pub fn neighbors(&self, v: usize) -> &[(usize, u32)] {
        &self.adj[v]
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.mult(u, v) > 0
    }

    /// Distinct adjacent pairs `(u, v, k)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize, u32)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for &(v, k) in &self.adj[u] {
                if u < v {
                    out.push((u, v, k));
                }
            }
        }
        out
    }

    pub fn is_simple(&self) -> bool {
        self.mult.iter().all(|&k| k <= 1)
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    pub fn check_set(&self, set: &VertexSet) -> Result<()> {
        if set.universe() == self.n {
            Ok(())
        } else {
            Err(Error::HostMismatch {
                expected: self.n,
                found: set.universe(),
            })
        }
    }

    /// BFS distances from `source`; unreachable vertices get `None`.
    pub fn distances(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for &(v, _) in &self.adj[u] {
                if dist[v].is_none() {
                    dist[v] = Some(d + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.distances(0).iter().all(Option::is_some)
    }

    /// Whether `set` is nonempty and induces a connected subgraph.
    pub fn is_connected_subset(&self, set: &VertexSet) -> bool {
        let Some(start) = set.iter().next() else {
            return false;
        };
        let mut seen = VertexSet::empty(self.n);
        seen.insert(start);
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for &(v, _) in &self.adj[u] {
                if set.contains(v) && !seen.contains(v) {
                    seen.insert(v);
                    stack.push(v);
                }
            }
        }
        seen.len() == set.len()
    }

    /// Subgraph induced on `set`, with vertices renumbered in increasing order.
    pub fn induced(&self, set: &VertexSet) -> Result<Multigraph> {
        self.check_set(set)?;
        let keep = set.to_vec();
        if keep.is_empty() {
            return Err(Error::InvalidSize(
                "induced subgraph on an empty set".into(),
            ));
        }
        let m = keep.len();
        let mut mult = vec![0u32; m * m];
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate() {
                mult[i * m + j] = self.mult(u, v);
            }
        }
        Ok(Multigraph::from_matrix(m, mult))
    }

    /// The same graph with every edge subdivided once.
    pub fn subdivide(&self) -> Multigraph {
        let mut edges = Vec::new();
        let mut next = self.n;
        for (u, v, k) in self.edges() {
            for _ in 0..k {
                edges.push((u, next, 1));
                edges.push((next, v, 1));
                next += 1;
            }
        }
        Multigraph::from_edges(next, &edges).expect("subdivision of a valid graph is valid")
    }
}

impl fmt::Debug for Multigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Multigraph(n={}, edges={:?})", self.n, self.edges())
    }
}
