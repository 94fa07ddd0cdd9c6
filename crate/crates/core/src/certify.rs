//! Product lower bounds, sandwich certificates for `gon(G □ H)`, and the
//! cone reduction from independence number to gonality.

use std::fmt;

use crate::constructions::cone;
use crate::divisor::{has_positive_rank, Divisor};
use crate::error::{Error, Result};
use crate::gonality::gonality;
use crate::graph::Multigraph;
use crate::invariants::{
    bridges, complete_bipartite_parts, complete_size, cycle_length, edge_connectivity,
    independence_number, is_tree, min_degree, vertex_connectivity,
};
use crate::scramble::{edge_scramble, scramble_order};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quantity {
    Sn,
    Gon,
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Quantity::Sn => "sn",
            Quantity::Gon => "gon",
        })
    }
}

/// Lower and upper bounds with the rule that produced each.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub quantity: Quantity,
    pub lower: u64,
    pub upper: u64,
    pub lower_source: String,
    pub upper_source: String,
}

impl BoundReport {
    pub fn is_exact(&self) -> bool {
        self.lower == self.upper
    }
}

fn require(failed: &mut Vec<String>, ok: bool, what: String) {
    if !ok {
        failed.push(what);
    }
}

fn done(failed: Vec<String>, value: u64) -> Result<u64> {
    if failed.is_empty() {
        Ok(value)
    } else {
        Err(Error::Hypothesis(failed))
    }
}

fn connected_pair(failed: &mut Vec<String>, g: &Multigraph, h: &Multigraph) {
    require(failed, g.is_connected(), "G connected".into());
    require(failed, h.is_connected(), "H connected".into());
}

/// `min(k|V(H)|, |V(G)|λ(H), (|V(G)| - 2k + 2)λ(H) + 2λ(G))`, a lower bound on
/// `sn(G □ H)` when `κ(G) >= k >= 1` and `|V(G)| >= 2k - 1`.
pub fn product_lower(g: &Multigraph, h: &Multigraph, k: u64) -> Result<u64> {
    let mut failed = Vec::new();
    connected_pair(&mut failed, g, h);
    let (ng, nh) = (g.vertex_count() as u64, h.vertex_count() as u64);
    let kappa = vertex_connectivity(g);
    require(&mut failed, k >= 1, format!("k = {k} >= 1"));
    require(
        &mut failed,
        kappa >= k,
        format!("kappa(G) = {kappa} >= k = {k}"),
    );
    require(
        &mut failed,
        ng + 1 >= 2 * k,
        format!("|V(G)| = {ng} >= 2k - 1"),
    );
    let (lg, lh) = (edge_connectivity(g), edge_connectivity(h));
    let third = ((ng + 2).saturating_sub(2 * k)) * lh + 2 * lg;
    done(failed, (k * nh).min(ng * lh).min(third))
}

/// `max(min(|V(H)|, |V(G)|λ(H)), min(|V(G)|, |V(H)|λ(G)))`.
pub fn product_lower_k1(g: &Multigraph, h: &Multigraph) -> Result<u64> {
    let mut failed = Vec::new();
    connected_pair(&mut failed, g, h);
    let (ng, nh) = (g.vertex_count() as u64, h.vertex_count() as u64);
    require(&mut failed, ng >= 2, format!("|V(G)| = {ng} >= 2"));
    require(&mut failed, nh >= 2, format!("|V(H)| = {nh} >= 2"));
    let (lg, lh) = (edge_connectivity(g), edge_connectivity(h));
    done(failed, nh.min(ng * lh).max(ng.min(nh * lg)))
}

/// `min(2|V(H)|, |V(G)|λ(H), (|V(G)| - 2)λ(H) + 2δ(G))` when `κ(G) >= 2`.
pub fn product_lower_k2(g: &Multigraph, h: &Multigraph) -> Result<u64> {
    let mut failed = Vec::new();
    connected_pair(&mut failed, g, h);
    let (ng, nh) = (g.vertex_count() as u64, h.vertex_count() as u64);
    let kappa = vertex_connectivity(g);
    require(&mut failed, kappa >= 2, format!("kappa(G) = {kappa} >= 2"));
    let lh = edge_connectivity(h);
    let third = ng.saturating_sub(2) * lh + 2 * min_degree(g);
    done(failed, (2 * nh).min(ng * lh).min(third))
}

/// `min(|V(G)| gon(H), |V(H)| gon(G))`.
pub fn product_gon_upper(g: &Multigraph, h: &Multigraph, gon_g: u64, gon_h: u64) -> u64 {
    (g.vertex_count() as u64 * gon_h).min(h.vertex_count() as u64 * gon_g)
}

/// Factor data used by the certifier.
#[derive(Debug, Clone)]
pub struct FactorInfo {
    pub n: u64,
    pub lambda: u64,
    pub kappa: u64,
    pub delta: u64,
    pub gon: Option<u64>,
    pub tree: bool,
    pub bridgeless: bool,
    pub cycle: Option<usize>,
    pub complete: Option<usize>,
    pub bipartite: Option<(usize, usize)>,
}

impl FactorInfo {
    /// Gonality is computed exhaustively when `n <= budget`, else taken from `known`.
    pub fn new(g: &Multigraph, known: Option<u64>, budget: usize) -> Result<Self> {
        let gon = match known {
            Some(v) => Some(v),
            None if g.vertex_count() <= budget => Some(gonality(g)?.value),
            None => None,
        };
        Ok(FactorInfo {
            n: g.vertex_count() as u64,
            lambda: edge_connectivity(g),
            kappa: vertex_connectivity(g),
            delta: min_degree(g),
            gon,
            tree: is_tree(g),
            bridgeless: bridges(g).is_empty(),
            cycle: cycle_length(g),
            complete: complete_size(g),
            bipartite: complete_bipartite_parts(g),
        })
    }

    pub fn hyperelliptic(&self) -> bool {
        self.n >= 3 && self.gon == Some(2)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    /// The first factor plays the role of `G`.
    GH,
    /// The factors are swapped.
    HG,
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Orientation::GH => "G,H",
            Orientation::HG => "H,G",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypothesis {
    pub name: String,
    pub detail: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StatementCheck {
    pub id: &'static str,
    pub orientation: Orientation,
    pub hypotheses: Vec<Hypothesis>,
    /// The value the statement gives when every hypothesis passes.
    pub value: Option<u64>,
    /// Whether the statement also pins down the scramble number.
    pub sn_too: bool,
}

impl StatementCheck {
    pub fn passed(&self) -> bool {
        self.value.is_some()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certified {
    pub statement: &'static str,
    pub orientation: Orientation,
    pub value: u64,
    pub sn_too: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub checks: Vec<StatementCheck>,
    pub certified: Option<Certified>,
    pub bounds: BoundReport,
}

#[derive(Debug, Clone)]
pub struct CertifyOptions {
    pub gon_g: Option<u64>,
    pub gon_h: Option<u64>,
    /// Factors up to this many vertices get exhaustive gonality.
    pub budget: usize,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions {
            gon_g: None,
            gon_h: None,
            budget: 12,
        }
    }
}

/// Statement ids, in the order they are tried.
pub const STATEMENTS: [&str; 10] = [
    "tree-factor",
    "gon-equals-lambda",
    "tree-times-k-edge-connected",
    "complete-bipartite-factor",
    "two-connected-gon-two",
    "two-connected-gon-lambda",
    "cycle-times-complete",
    "k-connected-gon-k",
    "k-connected-gon-lambda",
    "kappa-lambda-gon-equal",
];

struct Checklist {
    hypotheses: Vec<Hypothesis>,
}

impl Checklist {
    fn new() -> Self {
        Checklist {
            hypotheses: Vec::new(),
        }
    }

    fn check(&mut self, name: &str, detail: String, pass: bool) -> bool {
        self.hypotheses.push(Hypothesis {
            name: name.into(),
            detail,
            pass,
        });
        pass
    }

    /// Records a hypothesis about a gonality that may be unknown.
    fn gon(
        &mut self,
        name: &str,
        gon: Option<u64>,
        test: impl Fn(u64) -> (bool, String),
    ) -> Option<u64> {
        match gon {
            Some(v) => {
                let (ok, detail) = test(v);
                self.check(name, detail, ok).then_some(v)
            }
            None => {
                self.check(name, "gonality unavailable".into(), false);
                None
            }
        }
    }

    fn finish(
        self,
        id: &'static str,
        orientation: Orientation,
        value: Option<u64>,
        sn_too: bool,
    ) -> StatementCheck {
        let all = self.hypotheses.iter().all(|h| h.pass);
        StatementCheck {
            id,
            orientation,
            value: value.filter(|_| all),
            sn_too,
            hypotheses: self.hypotheses,
        }
    }
}

/// Evaluates statement `id` with `a` in the role of `G` and `b` in the role of `H`.
fn evaluate(id: &'static str, a: &FactorInfo, b: &FactorInfo, o: Orientation) -> StatementCheck {
    let mut c = Checklist::new();
    let (na, nb) = (a.n, b.n);
    let mut sn_too = true;
    let value = match id {
        "tree-factor" => {
            let t = c.check("G is a tree", format!("tree = {}", a.tree), a.tree);
            let s = c.check(
                "|V(H)|/lambda(H) <= |V(G)|",
                format!("{nb} <= {na}*{}", b.lambda),
                nb <= na * b.lambda,
            );
            (t && s).then_some(nb)
        }
        "gon-equals-lambda" => {
            let g = c.gon("gon(H) = lambda(H)", b.gon, |v| {
                (v == b.lambda, format!("{v} = {}", b.lambda))
            });
            let s = c.check(
                "|V(G)| <= |V(H)|/lambda(H)",
                format!("{na}*{} <= {nb}", b.lambda),
                na * b.lambda <= nb,
            );
            (g.is_some() && s).then_some(na * b.lambda)
        }
        "tree-times-k-edge-connected" => {
            let t = c.check("G is a tree", format!("tree = {}", a.tree), a.tree);
            let k = c.gon("H is k-edge-connected with gon(H) = k", b.gon, |v| {
                (
                    b.lambda >= v,
                    format!("lambda(H) = {} >= gon(H) = {v}", b.lambda),
                )
            });
            k.filter(|_| t).map(|k| nb.min(k * na))
        }
        "complete-bipartite-factor" => {
            let parts = b.bipartite;
            let p = c.check(
                "H = K_{m,n}, m <= n",
                parts.map_or("not complete bipartite".into(), |(m, n)| {
                    format!("H = K_{{{m},{n}}}")
                }),
                parts.is_some(),
            );
            match parts {
                Some((m, n)) => {
                    let (m, n) = (m as u64, n as u64);
                    let s = c.check(
                        "|V(G)| <= (m+n)/m",
                        format!("{na}*{m} <= {}", m + n),
                        na * m <= m + n,
                    );
                    (p && s).then_some(na * m)
                }
                None => None,
            }
        }
        "two-connected-gon-two" => {
            let k = c.check("kappa(G) >= 2", format!("{} >= 2", a.kappa), a.kappa >= 2);
            let g = c.gon("gon(G) = 2", a.gon, |v| (v == 2, format!("{v} = 2")));
            let s1 = c.check(
                "|V(H)|/lambda(H) <= |V(G)|/2",
                format!("2*{nb} <= {na}*{}", b.lambda),
                2 * nb <= na * b.lambda,
            );
            let s2 = c.check(
                "|V(H)| <= |V(G)|lambda(H)/2 + delta(G) - lambda(H)",
                format!(
                    "2*{nb} <= {na}*{} + 2*{} - 2*{}",
                    b.lambda, a.delta, b.lambda
                ),
                (2 * nb) as i64 <= (na * b.lambda + 2 * a.delta) as i64 - (2 * b.lambda) as i64,
            );
            (k && g.is_some() && s1 && s2).then_some(2 * nb)
        }
        "two-connected-gon-lambda" => {
            let k = c.check("kappa(G) >= 2", format!("{} >= 2", a.kappa), a.kappa >= 2);
            let g = c.gon("gon(H) = lambda(H)", b.gon, |v| {
                (v == b.lambda, format!("{v} = {}", b.lambda))
            });
            let s = c.check(
                "2|V(H)|/lambda(H) >= |V(G)|",
                format!("2*{nb} >= {na}*{}", b.lambda),
                2 * nb >= na * b.lambda,
            );
            let d = c.check(
                "lambda(H) <= delta(G)",
                format!("{} <= {}", b.lambda, a.delta),
                b.lambda <= a.delta,
            );
            (k && g.is_some() && s && d).then_some(na * b.lambda)
        }
        "cycle-times-complete" => {
            let cyc = c.check(
                "G = C_m, m >= 2",
                a.cycle
                    .map_or("not a cycle".into(), |m| format!("G = C_{m}")),
                a.cycle.is_some(),
            );
            let comp = c.check(
                "H = K_n, n >= 2",
                b.complete
                    .map_or("not complete".into(), |n| format!("H = K_{n}")),
                b.complete.is_some_and(|n| n >= 2),
            );
            match (a.cycle, b.complete) {
                (Some(m), Some(n)) if cyc && comp => {
                    let (m, n) = (m as u64, n as u64);
                    sn_too = m >= 4;
                    Some((2 * n).min(m * (n - 1)))
                }
                _ => None,
            }
        }
        "k-connected-gon-k" => {
            let g = c.gon("k = gon(G) >= 3", a.gon, |v| (v >= 3, format!("{v} >= 3")));
            match g {
                Some(k) => {
                    let ok = [
                        c.check("k <= kappa(G)", format!("{k} <= {}", a.kappa), k <= a.kappa),
                        c.check(
                            "|V(G)| >= 2k - 1",
                            format!("{na} >= {}", 2 * k - 1),
                            na + 1 >= 2 * k,
                        ),
                        c.check(
                            "lambda(G) >= (k-1)lambda(H)",
                            format!("{} >= {}*{}", a.lambda, k - 1, b.lambda),
                            a.lambda >= (k - 1) * b.lambda,
                        ),
                        c.check(
                            "k|V(H)| <= |V(G)|lambda(H)",
                            format!("{k}*{nb} <= {na}*{}", b.lambda),
                            k * nb <= na * b.lambda,
                        ),
                    ];
                    ok.iter().all(|&x| x).then_some(k * nb)
                }
                None => None,
            }
        }
        "k-connected-gon-lambda" => {
            let g = c.gon("gon(H) = lambda(H)", b.gon, |v| {
                (v == b.lambda, format!("{v} = {}", b.lambda))
            });
            let fits = |k: u64| {
                na + 1 >= 2 * k && a.lambda >= (k - 1) * b.lambda && na * b.lambda <= k * nb
            };
            let chosen = (3..=a.kappa).find(|&k| fits(k));
            let k = chosen.unwrap_or(3);
            let kk = c.check(
                "3 <= k <= kappa(G)",
                format!("k = {k}, kappa(G) = {}", a.kappa),
                k <= a.kappa,
            );
            let ok = [
                c.check(
                    "|V(G)| >= 2k - 1",
                    format!("{na} >= {}", 2 * k - 1),
                    na + 1 >= 2 * k,
                ),
                c.check(
                    "lambda(G) >= (k-1)lambda(H)",
                    format!("{} >= {}*{}", a.lambda, k - 1, b.lambda),
                    a.lambda >= (k - 1) * b.lambda,
                ),
                c.check(
                    "|V(G)|lambda(H) <= k|V(H)|",
                    format!("{na}*{} <= {k}*{nb}", b.lambda),
                    na * b.lambda <= k * nb,
                ),
            ];
            (g.is_some() && kk && ok.iter().all(|&x| x)).then_some(na * b.lambda)
        }
        "kappa-lambda-gon-equal" => {
            let g = c.gon("kappa(G) = lambda(G) = gon(G) = k", a.gon, |v| {
                (
                    a.kappa == v && a.lambda == v,
                    format!("kappa = {}, lambda = {}, gon = {v}", a.kappa, a.lambda),
                )
            });
            let k = a.gon.unwrap_or(a.kappa);
            let ok = [
                c.check(
                    "k <= lambda(H)",
                    format!("{k} <= {}", b.lambda),
                    k <= b.lambda,
                ),
                c.check(
                    "|V(H)| <= |V(G)| - 2k + 4",
                    format!("{nb} <= {na} - {} + 4", 2 * k),
                    nb + 2 * k <= na + 4,
                ),
                c.check(
                    "|V(G)| >= 2k - 1",
                    format!("{na} >= {}", (2 * k).saturating_sub(1)),
                    na + 1 >= 2 * k,
                ),
            ];
            (g.is_some() && ok.iter().all(|&x| x)).then_some(k * nb)
        }
        _ => unreachable!("unknown statement {id}"),
    };
    c.finish(id, o, value, sn_too)
}

/// Tries every statement in both orientations; the first that passes
/// certifies `sn(G □ H) = gon(G □ H)` (only `gon` for the cycle-times-complete
/// statement with a cycle shorter than 4).
pub fn certify_product(
    g: &Multigraph,
    h: &Multigraph,
    opts: &CertifyOptions,
) -> Result<Certificate> {
    if !g.is_connected() || !h.is_connected() {
        return Err(Error::Disconnected);
    }
    let fg = FactorInfo::new(g, opts.gon_g, opts.budget)?;
    let fh = FactorInfo::new(h, opts.gon_h, opts.budget)?;
    let mut checks = Vec::new();
    for id in STATEMENTS {
        checks.push(evaluate(id, &fg, &fh, Orientation::GH));
        checks.push(evaluate(id, &fh, &fg, Orientation::HG));
    }
    let certified = checks.iter().find(|c| c.passed()).map(|c| Certified {
        statement: c.id,
        orientation: c.orientation,
        value: c.value.unwrap(),
        sn_too: c.sn_too,
    });

    let mut lower = (0u64, String::from("none"));
    let mut consider = |v: Result<u64>, tag: String| {
        if let Ok(v) = v {
            if v > lower.0 {
                lower = (v, tag);
            }
        }
    };
    for (a, b, o) in [(g, h, Orientation::GH), (h, g, Orientation::HG)] {
        consider(product_lower_k1(a, b), format!("product-lower-k1 ({o})"));
        consider(product_lower_k2(a, b), format!("product-lower-k2 ({o})"));
        for k in 1..=vertex_connectivity(a) {
            consider(product_lower(a, b, k), format!("product-lower k={k} ({o})"));
        }
    }
    let (upper, upper_source) = match (fg.gon, fh.gon) {
        (Some(a), Some(b)) => (
            product_gon_upper(g, h, a, b),
            "product-gon-upper".to_string(),
        ),
        _ => (fg.n * fh.n, "vertex count".to_string()),
    };
    if let Some(c) = &certified {
        if c.value < lower.0 || c.value > upper {
            return Err(Error::Soundness(format!(
                "certified value {} outside bounds [{}, {upper}]",
                c.value, lower.0
            )));
        }
    }
    let bounds = match &certified {
        Some(c) => BoundReport {
            quantity: Quantity::Gon,
            lower: c.value,
            upper: c.value,
            lower_source: c.statement.to_string(),
            upper_source: c.statement.to_string(),
        },
        None => BoundReport {
            quantity: Quantity::Gon,
            lower: lower.0,
            upper,
            lower_source: lower.1,
            upper_source,
        },
    };
    Ok(Certificate {
        checks,
        certified,
        bounds,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Via {
    /// Exhaustive gonality of the cone.
    #[default]
    Gonality,
    /// Edge-scramble order against a vertex-cover divisor.
    Sandwich,
}

#[derive(Debug, Clone)]
pub struct AlphaReduction {
    pub alpha: u64,
    pub m: u64,
    /// `sn = gon` of the cone.
    pub value: u64,
    pub cone: Multigraph,
}

/// Recovers `α(G) = 2m - gon(Ĝ)` where `Ĝ = cone(G, m)` and `m = |V(G)|`,
/// and checks the answer against a direct computation of `α(G)`.
pub fn reduce_alpha(g: &Multigraph, via: Via) -> Result<AlphaReduction> {
    if !g.is_simple() {
        return Err(Error::NotSimple);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let m = g.vertex_count();
    if m < 2 {
        return Err(Error::InvalidSize(
            "reduction needs at least 2 vertices".into(),
        ));
    }
    let hat = cone(g, m);
    let value = match via {
        Via::Gonality => {
            let gon = gonality(&hat)?;
            if !has_positive_rank(&hat, &gon.witness)? {
                return Err(Error::Soundness("gonality witness has rank 0".into()));
            }
            gon.value
        }
        Via::Sandwich => {
            let n = hat.vertex_count() as u64;
            if min_degree(&hat) < n / 2 + 1 {
                return Err(Error::Hypothesis(vec![format!(
                    "delta = {} >= floor(n/2) + 1 = {}",
                    min_degree(&hat),
                    n / 2 + 1
                )]));
            }
            let order = scramble_order(&edge_scramble(&hat)?);
            if !has_positive_rank(&hat, &Divisor::indicator(&order.hitting_set))? {
                return Err(Error::Soundness("vertex-cover divisor has rank 0".into()));
            }
            if order.order != order.hitting {
                return Err(Error::Soundness(
                    "edge scramble order below its hitting number".into(),
                ));
            }
            order.order
        }
    };
    let alpha = 2 * m as u64 - value;
    let direct = independence_number(g) as u64;
    if alpha != direct {
        return Err(Error::Soundness(format!(
            "recovered alpha {alpha}, direct alpha {direct}"
        )));
    }
    Ok(AlphaReduction {
        alpha,
        m: m as u64,
        value,
        cone: hat,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AllEqual {
    /// `sn = gon = n - α`.
    pub value: u64,
    pub alpha: u64,
    pub edge_scramble_order: u64,
}

/// When `δ(G) >= ⌊n/2⌋ + 1`, certifies `sn(G) = gon(G) = n - α(G)` with the
/// edge scramble as witness; otherwise declines with `None`.
pub fn check_all_equal(g: &Multigraph) -> Result<Option<AllEqual>> {
    if !g.is_simple() {
        return Err(Error::NotSimple);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.vertex_count() as u64;
    if min_degree(g) < n / 2 + 1 {
        return Ok(None);
    }
    let alpha = independence_number(g) as u64;
    let order = scramble_order(&edge_scramble(g)?).order;
    if order != n - alpha {
        return Err(Error::Soundness(format!(
            "edge scramble order {order}, expected {}",
            n - alpha
        )));
    }
    Ok(Some(AllEqual {
        value: n - alpha,
        alpha,
        edge_scramble_order: order,
    }))
}
