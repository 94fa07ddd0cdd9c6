//! The example graphs: the cube with its four-spoke scramble and firing chain,
//! the diamond and its two wedge sums, the immersion pair `G`, `H`, and the
//! product `K2 □ H` with its smoothing `J`.
//!
//! Where an adjacency is not pinned down by the prose descriptions, the
//! choice is justified by the checks in [`run_checks`], which encode every
//! claim made about the graph.

use crate::constructions::{cartesian_product, smooth_two_valent_with_map};
use crate::divisor::{fire, fire_set, has_positive_rank, rank, Divisor};
use crate::error::Result;
use crate::generators::complete;
use crate::gonality::gonality;
use crate::graph::{Multigraph, VertexSet};
use crate::invariants::bridges;
use crate::scramble::{scramble_order, Scramble};
use crate::sn::{brute_force_sn, sn_bounds, SnOptions};

#[derive(Debug, Clone)]
pub struct Fixture {
    pub name: &'static str,
    pub graph: Multigraph,
    pub labels: Vec<String>,
}

fn labelled(name: &'static str, graph: Multigraph, labels: &str) -> Fixture {
    let labels: Vec<String> = labels.split_whitespace().map(String::from).collect();
    debug_assert_eq!(labels.len(), graph.vertex_count());
    Fixture {
        name,
        graph,
        labels,
    }
}

fn graph(n: usize, edges: &[(usize, usize, u32)]) -> Multigraph {
    Multigraph::from_edges(n, edges).expect("fixture edge lists are valid")
}

fn set(n: usize, vs: &[usize]) -> VertexSet {
    VertexSet::from_vertices(n, vs.iter().copied()).unwrap()
}

/// Q3 with the front face `s t u v` (0..4) and back face `w x y z` (4..8),
/// spokes `s-w`, `t-x`, `u-y`, `v-z`.
pub fn cube() -> Multigraph {
    graph(
        8,
        &[
            (0, 1, 1),
            (1, 2, 1),
            (2, 3, 1),
            (3, 0, 1),
            (4, 5, 1),
            (5, 6, 1),
            (6, 7, 1),
            (7, 4, 1),
            (0, 4, 1),
            (1, 5, 1),
            (2, 6, 1),
            (3, 7, 1),
        ],
    )
}

/// The four spokes: disjoint two-vertex eggs.
pub fn cube_scramble() -> Scramble {
    let eggs = (0..4).map(|i| set(8, &[i, i + 4])).collect();
    Scramble::new(&cube(), eggs).unwrap()
}

/// `(s) + (t) + (u) + (v)`.
pub fn cube_divisor() -> Divisor {
    Divisor::indicator(&set(8, &[0, 1, 2, 3]))
}

/// The diamond `a b c d` with the diagonal `b-c`; `a` and `d` have valence 2.
pub fn diamond() -> Multigraph {
    graph(4, &[(0, 1, 1), (0, 2, 1), (1, 2, 1), (1, 3, 1), (2, 3, 1)])
}

/// Two diamonds glued at 2-valent vertices (`d` of the left, `a` of the
/// right, vertex 3). Gluing a 2-valent to a 3-valent vertex instead gives
/// gonality 3, which contradicts the stated value 2.
pub fn wedge_two_valent() -> Multigraph {
    graph(
        7,
        &[
            (0, 1, 1),
            (0, 2, 1),
            (1, 2, 1),
            (1, 3, 1),
            (2, 3, 1),
            (3, 4, 1),
            (3, 5, 1),
            (4, 5, 1),
            (4, 6, 1),
            (5, 6, 1),
        ],
    )
}

/// Two diamonds glued at 3-valent vertices: vertex 2 is `c` on the left and
/// `b` on the right.
pub fn wedge_three_valent() -> Multigraph {
    graph(
        7,
        &[
            (0, 1, 1),
            (0, 2, 1),
            (1, 2, 1),
            (1, 3, 1),
            (2, 3, 1),
            (2, 4, 1),
            (4, 5, 1),
            (2, 5, 1),
            (2, 6, 1),
            (5, 6, 1),
        ],
    )
}

/// The order-3 scramble on the 3-valent wedge: each diamond minus the
/// glued vertex, and the glued vertex.
pub fn wedge_scramble() -> Scramble {
    Scramble::new(
        &wedge_three_valent(),
        vec![set(7, &[0, 1, 3]), set(7, &[4, 5, 6]), set(7, &[2])],
    )
    .unwrap()
}

/// Positive-rank divisors on the diamond and both wedges: `2(a)`, `2(a)`, `3(w)`.
pub fn wedge_divisors() -> [Divisor; 3] {
    let mut d = [Divisor::zero(4), Divisor::zero(7), Divisor::zero(7)];
    d[0].add(0, 2);
    d[1].add(0, 2);
    d[2].add(2, 3);
    d
}

/// `H` on `a..f`: `a=b` doubled, `a-c`, `b-c`, `c≡d` tripled, `d-e`, `d-f`,
/// `e=f` doubled. The `c-d` multiplicity is forced: `{a,b,c}` must be an egg
/// cut of size 3 in `H` and removing one `c-d` edge must give gonality 2.
pub fn immersion_h() -> Multigraph {
    graph(
        6,
        &[
            (0, 1, 2),
            (0, 2, 1),
            (1, 2, 1),
            (2, 3, 3),
            (3, 4, 1),
            (3, 5, 1),
            (4, 5, 2),
        ],
    )
}

/// `H` with one `c-d` edge removed.
pub fn immersion_h_prime() -> Multigraph {
    graph(
        6,
        &[
            (0, 1, 2),
            (0, 2, 1),
            (1, 2, 1),
            (2, 3, 2),
            (3, 4, 1),
            (3, 5, 1),
            (4, 5, 2),
        ],
    )
}

/// Replaces one `a-b` edge and one `b-c` edge by an `a-c` edge.
pub fn lift(g: &Multigraph, a: usize, b: usize, c: usize) -> Result<Multigraph> {
    let mut edges = g.edges();
    for (x, y) in [(a.min(b), a.max(b)), (b.min(c), b.max(c))] {
        let e =
            edges
                .iter_mut()
                .find(|e| e.0 == x && e.1 == y)
                .ok_or(crate::Error::InvalidSize(format!(
                    "no edge {x}-{y} to lift"
                )))?;
        e.2 -= 1;
    }
    edges.retain(|e| e.2 > 0);
    edges.push((a, c, 1));
    Multigraph::from_edges(g.vertex_count(), &edges)
}

/// `G`: lift `H` along `a, c, d`, then along `a, d, e`.
pub fn immersion_g() -> Multigraph {
    let step = lift(&immersion_h(), 0, 2, 3).unwrap();
    lift(&step, 0, 3, 4).unwrap()
}

/// `{{a,e}, {b,c}, {d,f}}` on `G`.
pub fn immersion_scramble() -> Scramble {
    Scramble::new(
        &immersion_g(),
        vec![set(6, &[0, 4]), set(6, &[1, 2]), set(6, &[3, 5])],
    )
    .unwrap()
}

/// The hyperelliptic factor with a bridge: `h0-h1`, `h1-h2`, `h2=h3` doubled.
pub fn product_h() -> Multigraph {
    graph(4, &[(0, 1, 1), (1, 2, 1), (2, 3, 2)])
}

/// `K2 □ H` on 8 vertices.
pub fn product_t_h() -> Multigraph {
    cartesian_product(&complete(2).unwrap(), &product_h())
}

/// `J`: `K2 □ H` with its two 2-valent vertices smoothed, and the original
/// index of each vertex.
pub fn product_j() -> (Multigraph, Vec<usize>) {
    smooth_two_valent_with_map(&product_t_h())
}

pub fn all() -> Vec<Fixture> {
    vec![
        labelled("cube", cube(), "s t u v w x y z"),
        labelled("diamond", diamond(), "a b c d"),
        labelled("wedge-two-valent", wedge_two_valent(), "a b c w b' c' d'"),
        labelled(
            "wedge-three-valent",
            wedge_three_valent(),
            "a b w d a' c' d'",
        ),
        labelled("immersion-g", immersion_g(), "a b c d e f"),
        labelled("immersion-h", immersion_h(), "a b c d e f"),
        labelled("product-t", complete(2).unwrap(), "t0 t1"),
        labelled("product-h", product_h(), "h0 h1 h2 h3"),
        labelled(
            "product-t-h",
            product_t_h(),
            "t0h0 t0h1 t0h2 t0h3 t1h0 t1h1 t1h2 t1h3",
        ),
        labelled("product-j", product_j().0, "u v w x y z"),
    ]
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

fn check(name: &'static str, pass: bool, detail: String) -> Check {
    Check { name, pass, detail }
}

/// Every claim made about the example graphs.
pub fn run_checks() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let q3 = cube();
    let gon = gonality(&q3)?.value;
    out.push(check(
        "cube gonality is 4",
        gon == 4,
        format!("gon = {gon}"),
    ));
    let order = scramble_order(&cube_scramble());
    out.push(check(
        "spoke scramble has order 4",
        order.order == 4 && order.hitting == 4 && order.egg_cut.value() == Some(4),
        format!("h = {}, e = {}", order.hitting, order.egg_cut),
    ));
    let r = sn_bounds(&q3, &SnOptions::default())?;
    out.push(check(
        "cube sn bounds close at 4",
        r.lower == 4 && r.upper == 4,
        format!("[{}, {}]", r.lower, r.upper),
    ));

    let mut chain = vec![cube_divisor()];
    for v in 0..4 {
        chain.push(fire(&q3, chain.last().unwrap(), v)?);
    }
    let end = Divisor::indicator(&set(8, &[4, 5, 6, 7]));
    let effective: Vec<bool> = chain.iter().map(Divisor::is_effective).collect();
    out.push(check(
        "firing s, t, u, v moves the front face chips to the back face",
        chain[1].chips() == [-2, 2, 1, 2, 1, 0, 0, 0]
            && chain[4] == end
            && effective == [true, false, false, false, true],
        chain
            .iter()
            .map(|d| d.to_string())
            .collect::<Vec<_>>()
            .join(" ~ ")
            .to_string(),
    ));
    let together = fire_set(&q3, &cube_divisor(), &set(8, &[0, 1, 2, 3]))?;
    out.push(check(
        "firing {s,t,u,v} at once gives the same end",
        together == end,
        together.to_string(),
    ));
    let ok = chain
        .iter()
        .filter(|d| d.is_effective())
        .all(|d| has_positive_rank(&q3, d).unwrap_or(false));
    out.push(check(
        "front and back face divisors have rank >= 1",
        ok,
        String::new(),
    ));

    let trio = [diamond(), wedge_two_valent(), wedge_three_valent()];
    let want = [2, 2, 3];
    for ((g, d), w) in trio.iter().zip(wedge_divisors()).zip(want) {
        let gon = gonality(g)?.value;
        let r = sn_bounds(g, &SnOptions::default())?;
        let pos = has_positive_rank(g, &d)?;
        out.push(check(
            "diamond family: sn = gon as stated",
            gon == w && r.lower == w && r.upper == w && pos,
            format!(
                "gon = {gon}, sn in [{}, {}], {d} has rank >= 1: {pos}",
                r.lower, r.upper
            ),
        ));
    }
    let o = scramble_order(&wedge_scramble());
    out.push(check(
        "drawn wedge scramble has order 3",
        o.order == 3,
        format!("order = {}", o.order),
    ));

    let g = immersion_g();
    let h = immersion_h();
    let o = scramble_order(&immersion_scramble());
    out.push(check(
        "immersion G scramble has order 3",
        o.order == 3,
        format!("h = {}, e = {}", o.hitting, o.egg_cut),
    ));
    let hp = immersion_h_prime();
    let ab = Divisor::indicator(&set(6, &[0, 1]));
    let r_ab = rank(&hp, &ab, 1)?;
    let gon_hp = gonality(&hp)?.value;
    out.push(check(
        "without one c-d edge, (a)+(b) has rank 1 and gonality is 2",
        r_ab == 1 && gon_hp == 2,
        format!("rank = {r_ab}, gon = {gon_hp}"),
    ));
    let with_brute = SnOptions {
        brute_max_eggs: Some(63),
        ..Default::default()
    };
    let rh = sn_bounds(&h, &with_brute)?;
    out.push(check(
        "sn(H) = 2",
        rh.lower == 2 && rh.upper == 2,
        format!("[{}, {}] by {}", rh.lower, rh.upper, rh.upper_source),
    ));
    let bg = brute_force_sn(&g, 63)?;
    out.push(check(
        "sn(G) = 3 > sn(H)",
        bg.exact && bg.value == 3,
        format!("brute force = {}", bg.value),
    ));
    let cut = crate::invariants::edge_boundary(&h, &set(6, &[0, 1, 2]))?;
    out.push(check(
        "{a,b,c} has 3 boundary edges in H",
        cut == 3,
        format!("{cut}"),
    ));

    let ph = product_h();
    let gon_h = gonality(&ph)?.value;
    out.push(check(
        "factor H is hyperelliptic with a bridge",
        gon_h == 2 && !bridges(&ph).is_empty(),
        format!("gon = {gon_h}, bridges = {:?}", bridges(&ph)),
    ));
    let th = product_t_h();
    let gon_th = gonality(&th)?.value;
    out.push(check(
        "gon(K2 □ H) = 4",
        gon_th == 4,
        format!("gon = {gon_th}"),
    ));
    let (j, map) = product_j();
    let bj = brute_force_sn(&j, 63)?;
    out.push(check(
        "J has 6 vertices and sn(J) < 4",
        j.vertex_count() == 6 && bj.exact && bj.value < 4,
        format!("J keeps {map:?}, sn(J) = {}", bj.value),
    ));
    Ok(out)
}
