//! Independent oracles. Nothing here calls into the library's algorithms:
//! everything is subset enumeration or exact linear algebra.

#![allow(dead_code)]

use chipfire::{Multigraph, VertexSet};
use num_rational::Ratio;

pub type Q = Ratio<i128>;

pub fn graph(n: usize, edges: &[(usize, usize, u32)]) -> Multigraph {
    Multigraph::from_edges(n, edges).unwrap()
}

pub fn set(n: usize, vs: &[usize]) -> VertexSet {
    VertexSet::from_vertices(n, vs.iter().copied()).unwrap()
}

pub fn mask_of(s: &VertexSet) -> u32 {
    s.iter().fold(0, |m, v| m | (1 << v))
}

/// Edges of a simple graph on `n` vertices from a bit mask over the pairs
/// `(0,1), (0,2), ..., (n-2,n-1)`.
pub fn simple_from_mask(n: usize, mask: u32) -> Multigraph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> bit & 1 == 1 {
                edges.push((u, v, 1));
            }
            bit += 1;
        }
    }
    graph(n, &edges)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                go(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn pair_bit(n: usize, u: usize, v: usize) -> usize {
    let (u, v) = if u < v { (u, v) } else { (v, u) };
    (0..u).map(|i| n - 1 - i).sum::<usize>() + (v - u - 1)
}

fn connected_mask(n: usize, mask: u32) -> bool {
    let mut seen = 1u32;
    let mut stack = vec![0];
    while let Some(u) = stack.pop() {
        for v in 0..n {
            if v != u && seen >> v & 1 == 0 && mask >> pair_bit(n, u, v) & 1 == 1 {
                seen |= 1 << v;
                stack.push(v);
            }
        }
    }
    seen.count_ones() as usize == n
}

/// Every connected simple graph on `n` labelled vertices with at most
/// `max_edges` edges.
pub fn labelled_connected(n: usize, max_edges: u32) -> Vec<Multigraph> {
    let pairs = n * (n.saturating_sub(1)) / 2;
    (0u32..1 << pairs)
        .filter(|m| m.count_ones() <= max_edges && connected_mask(n, *m))
        .map(|m| simple_from_mask(n, m))
        .collect()
}

/// One connected simple graph per isomorphism class, `n` vertices, at most
/// `max_edges` edges.
pub fn connected_up_to_iso(n: usize, max_edges: u32) -> Vec<Multigraph> {
    let pairs = n * (n.saturating_sub(1)) / 2;
    let perms = permutations(n);
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for m in 0u32..1 << pairs {
        if m.count_ones() > max_edges || !connected_mask(n, m) {
            continue;
        }
        let canon = perms
            .iter()
            .map(|p| {
                let mut r = 0u32;
                for u in 0..n {
                    for v in u + 1..n {
                        if m >> pair_bit(n, u, v) & 1 == 1 {
                            r |= 1 << pair_bit(n, p[u], p[v]);
                        }
                    }
                }
                r
            })
            .min()
            .unwrap();
        if seen.insert(canon) {
            out.push(simple_from_mask(n, m));
        }
    }
    out
}

pub fn boundary(g: &Multigraph, a: u32) -> u64 {
    let n = g.vertex_count();
    let mut total = 0;
    for u in 0..n {
        for v in 0..n {
            if a >> u & 1 == 1 && a >> v & 1 == 0 {
                total += g.mult(u, v) as u64;
            }
        }
    }
    total
}

pub fn brute_lambda(g: &Multigraph) -> u64 {
    let n = g.vertex_count();
    if n < 2 {
        return 0;
    }
    (1u32..(1 << n) - 1)
        .filter(|a| a & 1 == 1)
        .map(|a| boundary(g, a))
        .min()
        .unwrap()
}

fn connected_after_removal(g: &Multigraph, removed: u32) -> bool {
    let n = g.vertex_count();
    let keep: Vec<usize> = (0..n).filter(|v| removed >> v & 1 == 0).collect();
    if keep.len() <= 1 {
        return true;
    }
    let mut seen = vec![false; n];
    seen[keep[0]] = true;
    let mut stack = vec![keep[0]];
    while let Some(u) = stack.pop() {
        for &v in &keep {
            if !seen[v] && g.mult(u, v) > 0 {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    keep.iter().all(|&v| seen[v])
}

/// Smallest number of vertices whose removal disconnects the graph or
/// leaves one vertex.
pub fn brute_kappa(g: &Multigraph) -> u64 {
    let n = g.vertex_count();
    if !connected_after_removal(g, 0) {
        return 0;
    }
    (0u32..1 << n)
        .filter(|&r| (r.count_ones() as usize) + 1 >= n || !connected_after_removal(g, r))
        .map(|r| r.count_ones() as u64)
        .min()
        .unwrap()
}

pub fn brute_alpha(g: &Multigraph) -> usize {
    let n = g.vertex_count();
    (0u32..1 << n)
        .filter(|&s| {
            (0..n).all(|u| (u + 1..n).all(|v| s >> u & s >> v & 1 == 0 || g.mult(u, v) == 0))
        })
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap()
}

pub fn brute_hitting(n: usize, eggs: &[u32]) -> u64 {
    (0u32..1 << n)
        .filter(|&s| eggs.iter().all(|e| e & s != 0))
        .map(|s| s.count_ones() as u64)
        .min()
        .unwrap()
}

/// `None` when every two eggs meet.
pub fn brute_egg_cut(g: &Multigraph, eggs: &[u32]) -> Option<u64> {
    let n = g.vertex_count();
    (0u32..1 << n)
        .filter(|&a| eggs.iter().any(|&e| e & !a == 0) && eggs.iter().any(|&e| e & a == 0))
        .map(|a| boundary(g, a))
        .min()
}

pub fn brute_order(g: &Multigraph, eggs: &[u32]) -> u64 {
    let h = brute_hitting(g.vertex_count(), eggs);
    brute_egg_cut(g, eggs).map_or(h, |e| e.min(h))
}

pub fn laplacian(g: &Multigraph) -> Vec<Vec<i64>> {
    let n = g.vertex_count();
    let mut l = vec![vec![0i64; n]; n];
    for u in 0..n {
        for v in 0..n {
            if u != v {
                l[u][v] = -(g.mult(u, v) as i64);
                l[u][u] += g.mult(u, v) as i64;
            }
        }
    }
    l
}

/// Exact inverse of the Laplacian with row and column 0 deleted. Two
/// divisors of equal degree are equivalent iff this inverse maps their
/// difference (restricted to vertices 1..n) to an integer vector.
pub struct LaplacianOracle {
    n: usize,
    inv: Vec<Vec<Q>>,
}

impl LaplacianOracle {
    pub fn new(g: &Multigraph) -> Self {
        let n = g.vertex_count();
        let l = laplacian(g);
        let m = n.saturating_sub(1);
        let mut a: Vec<Vec<Q>> = (0..m)
            .map(|i| {
                let mut row: Vec<Q> = (0..m)
                    .map(|j| Q::from_integer(l[i + 1][j + 1] as i128))
                    .collect();
                row.extend((0..m).map(|j| Q::from_integer((i == j) as i128)));
                row
            })
            .collect();
        for c in 0..m {
            let p = (c..m)
                .find(|&r| a[r][c] != Q::from_integer(0))
                .expect("connected graph");
            a.swap(c, p);
            let pivot = a[c][c];
            for x in a[c].iter_mut() {
                *x /= pivot;
            }
            for r in 0..m {
                if r != c && a[r][c] != Q::from_integer(0) {
                    let f = a[r][c];
                    for j in 0..2 * m {
                        let sub = f * a[c][j];
                        a[r][j] -= sub;
                    }
                }
            }
        }
        let inv = a.into_iter().map(|row| row[m..].to_vec()).collect();
        LaplacianOracle { n, inv }
    }

    pub fn equivalent(&self, a: &[i64], b: &[i64]) -> bool {
        if a.iter().sum::<i64>() != b.iter().sum::<i64>() {
            return false;
        }
        let diff: Vec<i128> = (1..self.n).map(|i| (a[i] - b[i]) as i128).collect();
        self.inv.iter().all(|row| {
            let x: Q = row
                .iter()
                .zip(&diff)
                .map(|(r, d)| *r * Q::from_integer(*d))
                .sum();
            x.is_integer()
        })
    }
}

/// Calls `visit` on every effective divisor of degree `d` on `n` vertices.
pub fn effective(n: usize, d: i64, visit: &mut dyn FnMut(&[i64])) {
    fn go(i: usize, left: i64, cur: &mut Vec<i64>, visit: &mut dyn FnMut(&[i64])) {
        if i + 1 == cur.len() {
            cur[i] = left;
            visit(cur);
            return;
        }
        for k in 0..=left {
            cur[i] = k;
            go(i + 1, left - k, cur, visit);
        }
    }
    if n == 0 || d < 0 {
        return;
    }
    go(0, d, &mut vec![0; n], visit);
}

pub fn all_effective(n: usize, d: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    effective(n, d, &mut |c| out.push(c.to_vec()));
    out
}

/// Rank at least one, straight from the definition: for every `v`,
/// `D - (v)` is equivalent to some effective divisor.
pub fn oracle_positive_rank(g: &Multigraph, lap: &LaplacianOracle, d: &[i64]) -> bool {
    let n = g.vertex_count();
    let deg: i64 = d.iter().sum();
    if deg < 1 {
        return false;
    }
    let targets = all_effective(n, deg - 1);
    (0..n).all(|v| {
        let mut dv = d.to_vec();
        dv[v] -= 1;
        targets.iter().any(|e| lap.equivalent(&dv, e))
    })
}

pub fn oracle_gonality(g: &Multigraph) -> u64 {
    let n = g.vertex_count();
    let lap = LaplacianOracle::new(g);
    for d in 1..=n as i64 {
        if all_effective(n, d)
            .iter()
            .any(|c| oracle_positive_rank(g, &lap, c))
        {
            return d as u64;
        }
    }
    unreachable!("one chip everywhere has positive rank")
}

/// Components of the graph on divisors of degree `deg` with every entry
/// in `lo..=hi`, joined by single set-firing moves. Returns a label per
/// state, addressed by [`Box::index`].
pub struct OrbitBox {
    pub n: usize,
    pub lo: i64,
    pub hi: i64,
    pub deg: i64,
    label: Vec<u32>,
}

impl OrbitBox {
    pub fn new(g: &Multigraph, deg: i64, lo: i64, hi: i64) -> Self {
        let n = g.vertex_count();
        let width = (hi - lo + 1) as usize;
        let size = width.pow(n as u32);
        let moves: Vec<Vec<i64>> = (1u32..(1 << n) - 1)
            .map(|s| {
                (0..n)
                    .map(|v| {
                        let inside = s >> v & 1 == 1;
                        (0..n)
                            .filter(|&u| (s >> u & 1 == 1) != inside)
                            .map(|u| g.mult(u, v) as i64)
                            .sum::<i64>()
                            * if inside { -1 } else { 1 }
                    })
                    .collect()
            })
            .collect();
        let mut parent: Vec<u32> = (0..size as u32).collect();
        fn find(p: &mut [u32], mut x: u32) -> u32 {
            while p[x as usize] != x {
                p[x as usize] = p[p[x as usize] as usize];
                x = p[x as usize];
            }
            x
        }
        let decode = |mut idx: usize| -> Vec<i64> {
            (0..n)
                .map(|_| {
                    let x = (idx % width) as i64 + lo;
                    idx /= width;
                    x
                })
                .collect()
        };
        let encode = |x: &[i64]| -> Option<usize> {
            let mut idx = 0;
            for &v in x.iter().rev() {
                if v < lo || v > hi {
                    return None;
                }
                idx = idx * width + (v - lo) as usize;
            }
            Some(idx)
        };
        for idx in 0..size {
            let x = decode(idx);
            if x.iter().sum::<i64>() != deg {
                continue;
            }
            for m in &moves {
                let y: Vec<i64> = x.iter().zip(m).map(|(a, b)| a + b).collect();
                if let Some(j) = encode(&y) {
                    let (ra, rb) = (find(&mut parent, idx as u32), find(&mut parent, j as u32));
                    if ra != rb {
                        parent[ra as usize] = rb;
                    }
                }
            }
        }
        let label = (0..size as u32).map(|i| find(&mut parent, i)).collect();
        OrbitBox {
            n,
            lo,
            hi,
            deg,
            label,
        }
    }

    pub fn label(&self, x: &[i64]) -> u32 {
        let width = (self.hi - self.lo + 1) as usize;
        let mut idx = 0;
        for &v in x.iter().rev() {
            idx = idx * width + (v - self.lo) as usize;
        }
        self.label[idx]
    }
}

/// All divisors on `n` vertices with entries in `lo..=hi` and degree `deg`.
pub fn divisors_in_box(n: usize, lo: i64, hi: i64, deg: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut cur = vec![lo; n];
    loop {
        if cur.iter().sum::<i64>() == deg {
            out.push(cur.clone());
        }
        let mut i = 0;
        loop {
            if i == n {
                return out;
            }
            if cur[i] < hi {
                cur[i] += 1;
                break;
            }
            cur[i] = lo;
            i += 1;
        }
    }
}

/// Random connected multigraph: a spanning path plus extra edges.
pub fn random_multigraph(n: usize, extra: &[(usize, usize, u32)]) -> Multigraph {
    let mut edges: Vec<(usize, usize, u32)> = (1..n).map(|i| (i - 1, i, 1)).collect();
    for &(u, v, k) in extra {
        let (u, v) = (u % n, v % n);
        if u != v && k > 0 {
            edges.push((u, v, k));
        }
    }
    graph(n, &edges)
}

/// Isomorphism by trying every relabelling. Fine up to 8 vertices.
pub fn isomorphic(a: &Multigraph, b: &Multigraph) -> bool {
    let n = a.vertex_count();
    if n != b.vertex_count() || a.edge_count() != b.edge_count() {
        return false;
    }
    permutations(n)
        .iter()
        .any(|p| (0..n).all(|u| (u + 1..n).all(|v| a.mult(u, v) == b.mult(p[u], p[v]))))
}
