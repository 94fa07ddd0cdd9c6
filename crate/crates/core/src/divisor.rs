//! Divisors, chip-firing, Dhar's burning algorithm, q-reduction and rank.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Multigraph, VertexSet};

/// An integer chip count on each vertex of a host graph.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Divisor {
    chips: Vec<i64>,
}

impl Divisor {
    /// Checks the length against the host.
    pub fn new(g: &Multigraph, chips: Vec<i64>) -> Result<Self> {
        if chips.len() != g.vertex_count() {
            return Err(Error::HostMismatch {
                expected: g.vertex_count(),
                found: chips.len(),
            });
        }
        Ok(Divisor { chips })
    }

    pub fn zero(n: usize) -> Self {
        Divisor { chips: vec![0; n] }
    }

    /// The divisor with one chip on each vertex of `set`.
    pub fn indicator(set: &VertexSet) -> Self {
        let mut d = Self::zero(set.universe());
        for v in set.iter() {
            d.chips[v] = 1;
        }
        d
    }

    pub(crate) fn from_chips(chips: Vec<i64>) -> Self {
        Divisor { chips }
    }

    pub fn chips(&self) -> &[i64] {
        &self.chips
    }

    pub fn into_chips(self) -> Vec<i64> {
        self.chips
    }

    pub fn len(&self) -> usize {
        self.chips.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chips.is_empty()
    }

    pub fn get(&self, v: usize) -> i64 {
        self.chips[v]
    }

    pub fn degree(&self) -> i64 {
        self.chips.iter().sum()
    }

    pub fn is_effective(&self) -> bool {
        self.chips.iter().all(|&c| c >= 0)
    }

    /// Adds `k` chips (possibly negative) to `v`.
    pub fn add(&mut self, v: usize, k: i64) {
        self.chips[v] += k;
    }

    pub fn plus(&self, other: &Divisor) -> Divisor {
        Divisor {
            chips: self
                .chips
                .iter()
                .zip(&other.chips)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn minus(&self, other: &Divisor) -> Divisor {
        Divisor {
            chips: self
                .chips
                .iter()
                .zip(&other.chips)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.chips[v] != 0).collect()
    }
}

impl fmt::Debug for Divisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Divisor{:?}", self.chips)
    }
}

impl fmt::Display for Divisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .chips
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(v, &c)| match c {
                1 => format!("({v})"),
                -1 => format!("-({v})"),
                _ => format!("{c}({v})"),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + ").replace("+ -", "- "))
        }
    }
}

fn check_host(g: &Multigraph, d: &Divisor) -> Result<()> {
    if d.len() == g.vertex_count() {
        Ok(())
    } else {
        Err(Error::HostMismatch {
            expected: g.vertex_count(),
            found: d.len(),
        })
    }
}

/// Fires `v` once: it loses `val(v)` chips, each neighbour gains one per edge.
pub fn fire(g: &Multigraph, d: &Divisor, v: usize) -> Result<Divisor> {
    check_host(g, d)?;
    g.check_vertex(v)?;
    let mut out = d.clone();
    out.chips[v] -= g.valence(v) as i64;
    for &(u, k) in g.neighbors(v) {
        out.chips[u] += k as i64;
    }
    Ok(out)
}

/// Fires every vertex of `set` once.
pub fn fire_set(g: &Multigraph, d: &Divisor, set: &VertexSet) -> Result<Divisor> {
    check_host(g, d)?;
    g.check_set(set)?;
    let mut out = d.clone();
    fire_set_in_place(g, &mut out.chips, set, 1);
    Ok(out)
}

/// Fires `set` `times` times; only edges leaving the set move chips.
fn fire_set_in_place(g: &Multigraph, chips: &mut [i64], set: &VertexSet, times: i64) {
    for u in set.iter() {
        for &(v, k) in g.neighbors(u) {
            if !set.contains(v) {
                let moved = k as i64 * times;
                chips[u] -= moved;
                chips[v] += moved;
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BurnResult {
    pub burned: VertexSet,
    pub unburned: VertexSet,
}

/// Dhar's burning process from `q`: a vertex burns once it has more burning
/// edges than chips. Chips on `q` are ignored.
pub fn dhar_burn(g: &Multigraph, d: &Divisor, q: usize) -> Result<BurnResult> {
    check_host(g, d)?;
    g.check_vertex(q)?;
    let burned = burn(g, &d.chips, q);
    Ok(BurnResult {
        unburned: burned.complement(),
        burned,
    })
}

pub(crate) fn burn(g: &Multigraph, chips: &[i64], q: usize) -> VertexSet {
    let n = g.vertex_count();
    let mut burned = VertexSet::empty(n);
    let mut burning_edges = vec![0i64; n];
    burned.insert(q);
    let mut stack = vec![q];
    while let Some(u) = stack.pop() {
        for &(v, k) in g.neighbors(u) {
            if burned.contains(v) {
                continue;
            }
            burning_edges[v] += k as i64;
            if burning_edges[v] > chips[v] {
                burned.insert(v);
                stack.push(v);
            }
        }
    }
    burned
}

/// A firing script: each step fires a set the given number of times.
pub type Script = Vec<(VertexSet, i64)>;

/// Result of [`q_reduce_with_script`].
#[derive(Debug, Clone)]
pub struct Reduction {
    pub divisor: Divisor,
    pub script: Script,
}

/// The unique q-reduced divisor equivalent to `d`.
pub fn q_reduce(g: &Multigraph, d: &Divisor, q: usize) -> Result<Divisor> {
    Ok(q_reduce_with_script(g, d, q)?.divisor)
}

/// As [`q_reduce`], also returning the firing script that produces the result
/// from `d`.
///
/// Debt away from `q` is cleared layer by layer, farthest from `q` first: for
/// the layer at distance `k`, the ball of radius `k - 1` around `q` is fired
/// until no vertex of the layer is in debt. Vertices farther out are not
/// touched by this, so after the last layer only `q` can be in debt. Then the
/// unburned set from Dhar's process is fired as often as it stays effective,
/// until everything burns.
pub fn q_reduce_with_script(g: &Multigraph, d: &Divisor, q: usize) -> Result<Reduction> {
    check_host(g, d)?;
    g.check_vertex(q)?;
    let n = g.vertex_count();
    let dist: Vec<usize> = g
        .distances(q)
        .into_iter()
        .map(|x| x.ok_or(Error::Disconnected))
        .collect::<Result<_>>()?;
    let mut chips = d.chips.clone();
    let mut script = Script::new();

    let far = dist.iter().copied().max().unwrap_or(0);
    for k in (1..=far).rev() {
        let inner = VertexSet::from_vertices(n, (0..n).filter(|&v| dist[v] < k))?;
        let mut times = 0i64;
        for v in (0..n).filter(|&v| dist[v] == k && chips[v] < 0) {
            let into: i64 = g
                .neighbors(v)
                .iter()
                .filter(|&&(u, _)| inner.contains(u))
                .map(|&(_, m)| m as i64)
                .sum();
            times = times.max((-chips[v] + into - 1) / into);
        }
        if times > 0 {
            fire_set_in_place(g, &mut chips, &inner, times);
            script.push((inner, times));
        }
    }

    loop {
        let burned = burn(g, &chips, q);
        if burned.is_full() {
            break;
        }
        let unburned = burned.complement();
        let times = unburned
            .iter()
            .filter_map(|v| {
                let out = outward(g, &unburned, v);
                (out > 0).then(|| chips[v] / out)
            })
            .min()
            .expect("some unburned vertex borders the burned set");
        debug_assert!(times >= 1);
        fire_set_in_place(g, &mut chips, &unburned, times);
        script.push((unburned, times));
    }
    Ok(Reduction {
        divisor: Divisor { chips },
        script,
    })
}

/// Edges from `v` to vertices outside `set`.
fn outward(g: &Multigraph, set: &VertexSet, v: usize) -> i64 {
    g.neighbors(v)
        .iter()
        .filter(|&&(u, _)| !set.contains(u))
        .map(|&(_, k)| k as i64)
        .sum()
}

/// Applies a firing script to `d`.
pub fn replay(g: &Multigraph, d: &Divisor, script: &[(VertexSet, i64)]) -> Result<Divisor> {
    check_host(g, d)?;
    let mut chips = d.chips.clone();
    for (set, times) in script {
        g.check_set(set)?;
        fire_set_in_place(g, &mut chips, set, *times);
    }
    Ok(Divisor { chips })
}

/// Linear equivalence, decided by comparing reduced forms at vertex 0.
pub fn equivalent(g: &Multigraph, a: &Divisor, b: &Divisor) -> Result<bool> {
    check_host(g, b)?;
    if a.degree() != b.degree() {
        check_host(g, a)?;
        return Ok(false);
    }
    Ok(q_reduce(g, a, 0)? == q_reduce(g, b, 0)?)
}

/// Whether `d` is equivalent to an effective divisor.
pub fn is_equivalent_to_effective(g: &Multigraph, d: &Divisor) -> Result<bool> {
    Ok(q_reduce(g, d, 0)?.chips[0] >= 0)
}

/// Whether an effective divisor `d` has rank at least 1: for every `v`,
/// `d - (v)` must be equivalent to an effective divisor. Since `d - (v)` is
/// already effective away from `v`, only the burning phase is needed, and it
/// can stop as soon as `v` is out of debt.
pub fn has_positive_rank(g: &Multigraph, d: &Divisor) -> Result<bool> {
    check_host(g, d)?;
    if !d.is_effective() {
        return Err(Error::InvalidSize(
            "positive-rank test needs an effective divisor".into(),
        ));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut scratch = d.chips.clone();
    Ok((0..g.vertex_count()).all(|v| debt_clears(g, &d.chips, &mut scratch, v)))
}

/// Runs the burning phase on `chips - (v)` from `v`.
pub(crate) fn debt_clears(g: &Multigraph, chips: &[i64], scratch: &mut [i64], v: usize) -> bool {
    if chips[v] > 0 {
        return true;
    }
    scratch.copy_from_slice(chips);
    scratch[v] -= 1;
    loop {
        let burned = burn(g, scratch, v);
        if burned.is_full() {
            return false;
        }
        let unburned = burned.complement();
        let times = unburned
            .iter()
            .filter_map(|u| {
                let out = outward(g, &unburned, u);
                (out > 0).then(|| scratch[u] / out)
            })
            .min()
            .unwrap();
        fire_set_in_place(g, scratch, &unburned, times);
        if scratch[v] >= 0 {
            return true;
        }
    }
}

/// Every multiset of `r` vertices from `0..n`, as chip vectors, in
/// lexicographic order of the sorted vertex lists.
pub(crate) fn multisets(n: usize, r: usize, mut visit: impl FnMut(&[i64]) -> bool) {
    fn go(
        n: usize,
        start: usize,
        left: usize,
        e: &mut Vec<i64>,
        visit: &mut dyn FnMut(&[i64]) -> bool,
    ) -> bool {
        if left == 0 {
            return visit(e);
        }
        for v in start..n {
            e[v] += 1;
            let keep = go(n, v, left - 1, e, visit);
            e[v] -= 1;
            if !keep {
                return false;
            }
        }
        true
    }
    let mut e = vec![0i64; n];
    go(n, 0, r, &mut e, &mut visit);
}

/// Rank of `d`, truncated at `cap`: -1 if `d` is not equivalent to an
/// effective divisor, otherwise the largest `r <= cap` such that `d - E` is
/// equivalent to an effective divisor for every effective `E` of degree `r`.
pub fn rank(g: &Multigraph, d: &Divisor, cap: u32) -> Result<i64> {
    check_host(g, d)?;
    let reduced = q_reduce(g, d, 0)?;
    if reduced.chips[0] < 0 {
        return Ok(-1);
    }
    let n = g.vertex_count();
    for r in 1..=cap as usize {
        if (r as i64) > reduced.degree() {
            return Ok(r as i64 - 1);
        }
        let mut ok = true;
        multisets(n, r, |e| {
            let q = e.iter().position(|&c| c > 0).unwrap();
            let shifted = Divisor {
                chips: reduced.chips.iter().zip(e).map(|(a, b)| a - b).collect(),
            };
            ok = q_reduce(g, &shifted, q)
                .map(|x| x.chips[q] >= 0)
                .unwrap_or(false);
            ok
        });
        if !ok {
            return Ok(r as i64 - 1);
        }
    }
    Ok(cap as i64)
}
