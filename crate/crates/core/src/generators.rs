//! Standard graph families.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::constructions::cartesian_product;
use crate::error::{Error, Result};
use crate::graph::Multigraph;

fn need(ok: bool, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidSize(what.into()))
    }
}

/// Path on `m` vertices.
pub fn path(m: usize) -> Result<Multigraph> {
    need(m >= 1, "path needs m >= 1")?;
    let edges: Vec<_> = (1..m).map(|i| (i - 1, i, 1)).collect();
    Multigraph::from_edges(m, &edges)
}

/// Cycle on `m` vertices. `cycle(2)` is two vertices joined by a doubled edge.
pub fn cycle(m: usize) -> Result<Multigraph> {
    need(m >= 2, "cycle needs m >= 2")?;
    let edges: Vec<_> = (0..m).map(|i| (i, (i + 1) % m, 1)).collect();
    Multigraph::from_edges(m, &edges)
}

pub fn complete(n: usize) -> Result<Multigraph> {
    complete_multipartite(&vec![1; n])
}

pub fn complete_bipartite(m: usize, n: usize) -> Result<Multigraph> {
    complete_multipartite(&[m, n])
}

/// Complete multipartite graph; parts are numbered consecutively.
pub fn complete_multipartite(parts: &[usize]) -> Result<Multigraph> {
    need(!parts.is_empty(), "need at least one part")?;
    need(parts.iter().all(|&p| p >= 1), "parts must be nonempty")?;
    let label: Vec<usize> = parts
        .iter()
        .enumerate()
        .flat_map(|(i, &p)| std::iter::repeat_n(i, p))
        .collect();
    let n = label.len();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if label[u] != label[v] {
                edges.push((u, v, 1));
            }
        }
    }
    Multigraph::from_edges(n, &edges)
}

/// The `d`-dimensional hypercube Q_d; vertices are bit strings.
pub fn hypercube(d: usize) -> Result<Multigraph> {
    need(
        (1..=20).contains(&d),
        "hypercube dimension must be in 1..=20",
    )?;
    let n = 1usize << d;
    let mut edges = Vec::new();
    for u in 0..n {
        for bit in 0..d {
            let v = u ^ (1 << bit);
            if u < v {
                edges.push((u, v, 1));
            }
        }
    }
    Multigraph::from_edges(n, &edges)
}

/// Grid P_{d1} □ P_{d2} □ ... as an iterated Cartesian product.
pub fn grid(dims: &[usize]) -> Result<Multigraph> {
    need(!dims.is_empty(), "grid needs at least one dimension")?;
    let mut g = path(dims[0])?;
    for &d in &dims[1..] {
        g = cartesian_product(&g, &path(d)?);
    }
    Ok(g)
}

/// Star on `m` vertices: centre 0 joined to leaves 1..m.
pub fn star(m: usize) -> Result<Multigraph> {
    need(m >= 1, "star needs m >= 1")?;
    let edges: Vec<_> = (1..m).map(|i| (0, i, 1)).collect();
    Multigraph::from_edges(m, &edges)
}

/// Uniformly random labelled tree on `m` vertices (Prüfer decoding).
pub fn random_tree(m: usize, seed: u64) -> Result<Multigraph> {
    need(m >= 1, "tree needs m >= 1")?;
    if m <= 2 {
        return path(m);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let code: Vec<usize> = (0..m - 2).map(|_| rng.gen_range(0..m)).collect();
    let mut degree = vec![1usize; m];
    for &c in &code {
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(m - 1);
    for &c in &code {
        let leaf = (0..m).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, c, 1));
        degree[leaf] -= 1;
        degree[c] -= 1;
    }
    let rest: Vec<usize> = (0..m).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1], 1));
    Multigraph::from_edges(m, &edges)
}

/// Erdős–Rényi G(n, p).
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<Multigraph> {
    need(n >= 1, "graph needs n >= 1")?;
    need(
        (0.0..=1.0).contains(&p),
        "edge probability must lie in [0, 1]",
    )?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v, 1));
            }
        }
    }
    Multigraph::from_edges(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::*;

    #[test]
    fn family_sizes() {
        let q3 = hypercube(3).unwrap();
        assert_eq!((q3.vertex_count(), q3.edge_count()), (8, 12));
        assert_eq!(complete(5).unwrap().edge_count(), 10);
        assert_eq!(complete_multipartite(&[1, 2, 3]).unwrap().edge_count(), 11);
        let g = grid(&[3, 4]).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (12, 17));
        assert_eq!(star(4).unwrap().edge_count(), 3);
    }

    #[test]
    fn doubled_two_cycle() {
        let c2 = cycle(2).unwrap();
        assert_eq!(c2.vertex_count(), 2);
        assert_eq!(c2.mult(0, 1), 2);
    }

    #[test]
    fn k33_is_three_connected() {
        assert_eq!(edge_connectivity(&complete_bipartite(3, 3).unwrap()), 3);
    }

    #[test]
    fn zero_sizes_rejected() {
        assert!(path(0).is_err());
        assert!(cycle(1).is_err());
        assert!(complete_multipartite(&[2, 0]).is_err());
        assert!(star(0).is_err());
        assert!(random_graph(3, 1.5, 0).is_err());
    }

    #[test]
    fn random_trees_are_trees() {
        for seed in 0..20 {
            let t = random_tree(2 + (seed as usize % 9), seed).unwrap();
            assert!(is_tree(&t));
        }
    }

    #[test]
    fn random_graph_is_seeded() {
        assert_eq!(
            random_graph(9, 0.5, 7).unwrap(),
            random_graph(9, 0.5, 7).unwrap()
        );
    }
}
