//! Bounds on the scramble number, and an exhaustive oracle for tiny graphs.

use crate::certify::{BoundReport, Quantity};
use crate::constructions::smooth_two_valent_with_map;
use crate::error::{Error, Result};
use crate::gonality::{gonality_with, GonalityOptions};
use crate::graph::{Multigraph, VertexSet};
use crate::invariants::{bridges, components, vertex_connectivity};
use crate::scramble::{edge_scramble, product_scramble, scramble_order, vertex_scramble, Scramble};

/// Largest graph [`brute_force_sn`] accepts.
pub const BRUTE_FORCE_LIMIT: usize = 7;

#[derive(Debug, Clone)]
pub struct SnOptions {
    /// Pieces with at most this many vertices get an exact gonality upper bound.
    pub gonality_budget: usize,
    /// Run the exhaustive oracle on pieces of at most 7 vertices, with this egg cap.
    pub brute_max_eggs: Option<usize>,
    /// Extra scrambles on the input graph.
    pub scrambles: Vec<Scramble>,
    /// Factors `(G, H)` when the input is `G □ H`.
    pub factors: Option<(Multigraph, Multigraph)>,
}

impl Default for SnOptions {
    fn default() -> Self {
        SnOptions {
            gonality_budget: 12,
            brute_max_eggs: None,
            scrambles: Vec::new(),
            factors: None,
        }
    }
}

/// The pieces scramble number reduces to: components, split at every bridge,
/// then smoothed. Each piece is returned with its original vertex indices.
pub fn pieces(g: &Multigraph) -> Vec<(Multigraph, Vec<usize>)> {
    let n = g.vertex_count();
    let cut: Vec<(usize, usize)> = bridges(g);
    let mut edges = Vec::new();
    for (u, v, k) in g.edges() {
        if !cut.contains(&(u, v)) {
            edges.push((u, v, k));
        }
    }
    let split = Multigraph::from_edges(n, &edges).unwrap();
    let mut out = Vec::new();
    for comp in components(&split) {
        let piece = split.induced(&comp).unwrap();
        let (smoothed, map) = smooth_two_valent_with_map(&piece);
        let original = comp.to_vec();
        out.push((smoothed, map.into_iter().map(|i| original[i]).collect()));
    }
    out
}

fn raise(bound: &mut (u64, String), value: u64, source: impl Into<String>) {
    if value > bound.0 {
        *bound = (value, source.into());
    }
}

pub fn sn_bounds(g: &Multigraph, opts: &SnOptions) -> Result<BoundReport> {
    let mut lower = (0u64, String::from("none"));
    let mut upper = (0u64, String::from("none"));
    for (piece, _) in pieces(g) {
        let n = piece.vertex_count();
        if n == 1 {
            raise(&mut lower, 1, "single vertex");
            raise(&mut upper, 1, "single vertex");
            continue;
        }
        let mut lo = (
            scramble_order(&vertex_scramble(&piece)).order,
            "vertex scramble".to_string(),
        );
        raise(
            &mut lo,
            scramble_order(&edge_scramble(&piece)?).order,
            "edge scramble",
        );
        let mut hi = (n as u64, "vertex count".to_string());
        if let (Some(cap), true) = (opts.brute_max_eggs, n <= BRUTE_FORCE_LIMIT) {
            let b = brute_force_sn(&piece, cap)?;
            raise(&mut lo, b.value, "brute force");
            if b.exact {
                hi = (b.value, "brute force".to_string());
            }
        }
        if hi.0 > lo.0 && n <= opts.gonality_budget {
            let gon = gonality_with(
                &piece,
                &GonalityOptions {
                    lower: Some(lo.0),
                    ..Default::default()
                },
            )?;
            if gon.value < hi.0 {
                hi = (gon.value, "gonality".to_string());
            }
        }
        raise(&mut lower, lo.0, lo.1);
        if hi.0 > upper.0 {
            upper = hi;
        }
    }
    for (i, s) in opts.scrambles.iter().enumerate() {
        g.check_set(&s.eggs()[0])?;
        raise(
            &mut lower,
            scramble_order(s).order,
            format!("user scramble {i}"),
        );
    }
    if let Some((fg, fh)) = &opts.factors {
        if fg.vertex_count() * fh.vertex_count() != g.vertex_count() {
            return Err(Error::HostMismatch {
                expected: g.vertex_count(),
                found: fg.vertex_count() * fh.vertex_count(),
            });
        }
        for (a, b, swapped) in [(fg, fh, false), (fh, fg, true)] {
            let kappa = vertex_connectivity(a) as usize;
            for k in 1..=kappa {
                if a.vertex_count() + 1 < 2 * k || !b.is_connected() {
                    continue;
                }
                let s = product_scramble(a, b, k)?;
                let s = if swapped {
                    transpose_scramble(&s, fg, fh, g)?
                } else {
                    s
                };
                let tag = format!(
                    "product scramble k={k}{}",
                    if swapped { " (H, G)" } else { "" }
                );
                raise(&mut lower, scramble_order(&s).order, tag);
            }
        }
    }
    if lower.0 > upper.0 {
        return Err(Error::Soundness(format!(
            "scramble lower bound {} exceeds upper bound {}",
            lower.0, upper.0
        )));
    }
    Ok(BoundReport {
        quantity: Quantity::Sn,
        lower: lower.0,
        upper: upper.0,
        lower_source: lower.1,
        upper_source: upper.1,
    })
}

/// Moves a scramble on `H □ G` to `G □ H`.
fn transpose_scramble(
    s: &Scramble,
    g: &Multigraph,
    h: &Multigraph,
    host: &Multigraph,
) -> Result<Scramble> {
    let (ng, nh) = (g.vertex_count(), h.vertex_count());
    let eggs = s
        .eggs()
        .iter()
        .map(|e| VertexSet::from_vertices(ng * nh, e.iter().map(|x| (x % ng) * nh + x / ng)))
        .collect::<Result<Vec<_>>>()?;
    Scramble::new(host, eggs)
}

/// Result of [`brute_force_sn`].
#[derive(Debug, Clone)]
pub struct BruteForce {
    pub value: u64,
    pub witness: Scramble,
    /// False when the egg cap cut off part of the search above `value`.
    pub exact: bool,
}

/// Maximum scramble order over all scrambles of at most `max_eggs` eggs whose
/// eggs form an antichain (no egg inside another, which never lowers order).
///
/// For each target `k` from `n` down, searches for a family of connected sets,
/// pairwise meeting or separated by at least `k` edges, with hitting number at
/// least `k`.
pub fn brute_force_sn(g: &Multigraph, max_eggs: usize) -> Result<BruteForce> {
    let n = g.vertex_count();
    if n > BRUTE_FORCE_LIMIT {
        return Err(Error::TooLarge {
            n,
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    let full: u32 = (1 << n) - 1;
    let boundary: Vec<u64> = (0..=full)
        .map(|a| {
            let mut total = 0;
            for u in (0..n).filter(|&u| a >> u & 1 == 1) {
                for &(v, k) in g.neighbors(u) {
                    if a >> v & 1 == 0 {
                        total += k as u64;
                    }
                }
            }
            total
        })
        .collect();
    let eggs: Vec<u32> = (1..=full)
        .filter(|&a| g.is_connected_subset(&mask_set(n, a)))
        .collect();
    let m = eggs.len();
    // cut[i][j]: least boundary of a set containing egg i and avoiding egg j
    let mut cut = vec![vec![u64::MAX; m]; m];
    for i in 0..m {
        for j in 0..m {
            if eggs[i] & eggs[j] != 0 {
                continue;
            }
            let free = full & !eggs[i] & !eggs[j];
            let mut sub = free;
            loop {
                cut[i][j] = cut[i][j].min(boundary[(eggs[i] | sub) as usize]);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & free;
            }
        }
    }
    let mut truncated = false;
    for k in (1..=n as u64).rev() {
        let compat: Vec<u128> = (0..m)
            .map(|i| {
                let mut row = 0u128;
                for j in 0..m {
                    let (a, b) = (eggs[i], eggs[j]);
                    let comparable = i != j && (a & b == a || a & b == b);
                    let ok = if a & b != 0 {
                        !comparable
                    } else {
                        cut[i][j] >= k
                    };
                    if ok && i != j {
                        row |= 1 << j;
                    }
                }
                row
            })
            .collect();
        let mut search = CliqueSearch {
            eggs: &eggs,
            compat: &compat,
            n,
            k,
            max_eggs,
            truncated: false,
        };
        let all: u128 = if m == 128 {
            u128::MAX
        } else {
            (1u128 << m) - 1
        };
        let found = search.run(0, all);
        truncated |= search.truncated;
        if let Some(r) = found {
            let sets: Vec<VertexSet> = (0..m)
                .filter(|&i| r >> i & 1 == 1)
                .map(|i| mask_set(n, eggs[i]))
                .collect();
            let witness = Scramble::new(g, sets)?;
            let value = scramble_order(&witness).order;
            return Ok(BruteForce {
                value,
                witness,
                exact: !truncated,
            });
        }
    }
    unreachable!("every graph has a scramble of order at least 1")
}

fn mask_set(n: usize, a: u32) -> VertexSet {
    VertexSet::from_vertices(n, (0..n).filter(|&v| a >> v & 1 == 1)).unwrap()
}

struct CliqueSearch<'a> {
    eggs: &'a [u32],
    compat: &'a [u128],
    n: usize,
    k: u64,
    max_eggs: usize,
    truncated: bool,
}

impl CliqueSearch<'_> {
    /// Whether no set of fewer than `k` vertices meets every egg in `family`.
    fn hitting_at_least(&self, family: u128) -> bool {
        let masks: Vec<u32> = bits(family).map(|i| self.eggs[i]).collect();
        if masks.is_empty() {
            return false;
        }
        let full: u32 = (1 << self.n) - 1;
        (0..=full)
            .filter(|x| (x.count_ones() as u64) < self.k)
            .all(|x| masks.iter().any(|&e| e & x == 0))
    }

    fn is_clique(&self, family: u128) -> bool {
        bits(family).all(|i| family & !(1u128 << i) & !self.compat[i] == 0)
    }

    /// `r` is a clique; `p` holds eggs compatible with all of `r`.
    fn run(&mut self, r: u128, p: u128) -> Option<u128> {
        let size = r.count_ones() as usize;
        if size <= self.max_eggs && self.hitting_at_least(r) {
            return Some(r);
        }
        if p == 0 || !self.hitting_at_least(r | p) {
            return None;
        }
        if size == self.max_eggs {
            self.truncated = true;
            return None;
        }
        if (r | p).count_ones() as usize <= self.max_eggs && self.is_clique(r | p) {
            return Some(r | p);
        }
        let pick = bits(p)
            .min_by_key(|&i| ((p & self.compat[i]).count_ones(), i))
            .unwrap();
        if let Some(found) = self.run(r | 1 << pick, p & self.compat[pick]) {
            return Some(found);
        }
        self.run(r, p & !(1u128 << pick))
    }
}

fn bits(x: u128) -> impl Iterator<Item = usize> {
    (0..128).filter(move |&i| x >> i & 1 == 1)
}
