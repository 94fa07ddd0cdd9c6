//! Exact divisorial gonality by exhaustive search.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::divisor::{burn, debt_clears, Divisor};
use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::invariants::{edge_connectivity, max_independent_set};

/// Candidate spaces for a positive-rank divisor of degree `d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    /// `c + (d - |c|)(q0)` for superstable `c` on `V - q0`, `q0 = 0`. Every
    /// positive-rank divisor reduces to one of these with at least one chip on `q0`.
    #[default]
    Reduced,
    /// Effective divisors with at most `val(v) - 1` chips on each `v`, valid
    /// while `d <= |E| - |V|`; larger degrees fall back to [`Strategy::Unpruned`].
    Valence,
    /// Every effective divisor of degree `d`.
    Unpruned,
}

#[derive(Debug, Clone, Default)]
pub struct GonalityOptions {
    /// A known lower bound; the search starts here.
    pub lower: Option<u64>,
    /// A known upper bound; the search never goes past it.
    pub upper: Option<u64>,
    pub strategy: Strategy,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gonality {
    pub value: u64,
    pub witness: Divisor,
}

/// `max(1, min(λ, n))`.
pub fn default_lower(g: &Multigraph) -> u64 {
    edge_connectivity(g).min(g.vertex_count() as u64).max(1)
}

/// `n - α` with the complement of a maximum independent set as witness on
/// simple graphs; `n` with one chip everywhere otherwise.
pub fn default_upper(g: &Multigraph) -> (u64, Divisor) {
    let n = g.vertex_count();
    if g.is_simple() && n >= 2 {
        let cover = max_independent_set(g).complement();
        (cover.len() as u64, Divisor::indicator(&cover))
    } else {
        (n as u64, Divisor::from_chips(vec![1; n]))
    }
}

pub fn gonality(g: &Multigraph) -> Result<Gonality> {
    gonality_with(g, &GonalityOptions::default())
}

pub fn gonality_with(g: &Multigraph, opts: &GonalityOptions) -> Result<Gonality> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let lower = opts.lower.unwrap_or(0).max(default_lower(g));
    let (known, known_witness) = default_upper(g);
    let upper = opts.upper.map_or(known, |u| u.min(known));
    for d in lower..upper {
        if let Some(witness) = search_degree(g, d, opts.strategy) {
            return Ok(Gonality { value: d, witness });
        }
    }
    if upper == known && lower <= known {
        return Ok(Gonality {
            value: known,
            witness: known_witness,
        });
    }
    match search_degree(g, upper, opts.strategy) {
        Some(witness) if lower <= upper => Ok(Gonality {
            value: upper,
            witness,
        }),
        _ => Err(Error::Hypothesis(vec![format!(
            "no positive-rank divisor of degree in {lower}..={upper}"
        )])),
    }
}

/// First positive-rank divisor of degree `d` in the strategy's order.
pub fn search_degree(g: &Multigraph, d: u64, strategy: Strategy) -> Option<Divisor> {
    let n = g.vertex_count();
    let valence: Vec<i64> = g.valences().iter().map(|&x| x as i64).collect();
    let candidates: Vec<Vec<i64>> = match strategy {
        Strategy::Reduced => {
            if d == 0 {
                return None;
            }
            let mut caps = valence.iter().map(|&v| (v - 1).max(0)).collect::<Vec<_>>();
            caps[0] = 0;
            let mut out = Vec::new();
            bounded_vectors(&caps, d as i64 - 1, false, &mut |c| {
                if burn(g, c, 0).is_full() {
                    let mut full = c.to_vec();
                    full[0] = d as i64 - c.iter().sum::<i64>();
                    out.push(full);
                }
            });
            out
        }
        Strategy::Valence if d as i64 <= g.edge_count() as i64 - n as i64 => {
            let caps: Vec<i64> = valence.iter().map(|&v| (v - 1).max(0)).collect();
            collect_exact(&caps, d as i64)
        }
        Strategy::Valence | Strategy::Unpruned => collect_exact(&vec![d as i64; n], d as i64),
    };
    first_positive(g, candidates).map(Divisor::from_chips)
}

fn collect_exact(caps: &[i64], d: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    bounded_vectors(caps, d, true, &mut |c| out.push(c.to_vec()));
    out
}

/// Vectors `0 <= c[i] <= caps[i]` with sum at most `total` (exactly `total`
/// if `exact`), in lexicographic order.
fn bounded_vectors(caps: &[i64], total: i64, exact: bool, visit: &mut dyn FnMut(&[i64])) {
    let n = caps.len();
    let mut suffix = vec![0i64; n + 1];
    for i in (0..n).rev() {
        suffix[i] = suffix[i + 1] + caps[i];
    }
    fn go(
        i: usize,
        left: i64,
        caps: &[i64],
        suffix: &[i64],
        exact: bool,
        c: &mut Vec<i64>,
        visit: &mut dyn FnMut(&[i64]),
    ) {
        if i == caps.len() {
            if !exact || left == 0 {
                visit(c);
            }
            return;
        }
        if exact && suffix[i] < left {
            return;
        }
        for x in 0..=caps[i].min(left) {
            c[i] = x;
            go(i + 1, left - x, caps, suffix, exact, c, visit);
        }
        c[i] = 0;
    }
    let mut c = vec![0i64; n];
    go(0, total, caps, &suffix, exact, &mut c, visit);
}

fn first_positive(g: &Multigraph, candidates: Vec<Vec<i64>>) -> Option<Vec<i64>> {
    let check = |chips: &Vec<i64>| {
        let mut scratch = vec![0i64; chips.len()];
        (0..chips.len()).all(|v| debt_clears(g, chips, &mut scratch, v))
    };
    #[cfg(feature = "parallel")]
    {
        candidates.into_par_iter().find_first(check)
    }
    #[cfg(not(feature = "parallel"))]
    {
        candidates.into_iter().find(check)
    }
}
