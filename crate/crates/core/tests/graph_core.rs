mod common;

use chipfire::constructions::{cartesian_product, cone, smooth_two_valent, Factor, Product};
use chipfire::format::{parse_mel, write_mel};
use chipfire::generators::*;
use chipfire::invariants::*;
use chipfire::{Error, Multigraph, VertexSet};
use common::*;
use proptest::prelude::*;

#[test]
fn edge_lists_accumulate() {
    assert_eq!(graph(2, &[(0, 1, 1)]).edge_count(), 1);
    let g = graph(3, &[(0, 1, 2), (1, 2, 1)]);
    assert_eq!(g.edge_count(), 3);
    let c4 = graph(4, &[(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 0, 1)]);
    assert_eq!(edge_connectivity(&c4), 2);
    assert!(matches!(
        Multigraph::from_edges(2, &[(1, 1, 1)]),
        Err(Error::LoopEdge(1))
    ));
    assert!(matches!(
        Multigraph::from_edges(2, &[(0, 2, 1)]),
        Err(Error::VertexOutOfRange { .. })
    ));
    assert!(matches!(
        Multigraph::from_edges(2, &[(0, 1, 0)]),
        Err(Error::ZeroMultiplicity(..))
    ));
}

#[test]
fn named_families() {
    let q3 = hypercube(3).unwrap();
    assert_eq!((q3.vertex_count(), q3.edge_count()), (8, 12));
    assert_eq!(edge_connectivity(&complete_bipartite(3, 3).unwrap()), 3);
    let c2 = cycle(2).unwrap();
    assert_eq!((c2.vertex_count(), c2.mult(0, 1)), (2, 2));
    assert!(path(0).is_err());
    assert!(complete_multipartite(&[2, 0]).is_err());
    assert_eq!(grid(&[3, 4]).unwrap().edge_count(), 17);
    assert_eq!(star(4).unwrap().vertex_count(), 4);
    assert_eq!(random_tree(9, 3).unwrap(), random_tree(9, 3).unwrap());
    assert!(is_tree(&random_tree(9, 3).unwrap()));
}

#[test]
fn products() {
    let p2 = path(2).unwrap();
    let sq = cartesian_product(&p2, &p2);
    assert!(isomorphic(&sq, &cycle(4).unwrap()));
    let k3k2 = cartesian_product(&complete(3).unwrap(), &complete(2).unwrap());
    assert_eq!((k3k2.vertex_count(), k3k2.edge_count()), (6, 9));
    let k2 = complete(2).unwrap();
    let cube = cartesian_product(&cartesian_product(&k2, &k2), &k2);
    assert!(isomorphic(&cube, &hypercube(3).unwrap()));
}

#[test]
fn canonical_copies() {
    let p = Product::new(&complete(3).unwrap(), &complete(2).unwrap());
    let copy = p.canonical_copy(Factor::G, 0).unwrap();
    assert_eq!(copy.to_vec(), vec![0, 2, 4]);
    let p = Product::new(&path(2).unwrap(), &path(3).unwrap());
    assert_eq!(p.canonical_copy(Factor::H, 1).unwrap().len(), 3);
    assert!(p.canonical_copy(Factor::H, 2).is_err());

    let k2 = complete(2).unwrap();
    let p = Product::new(&k2, &cartesian_product(&k2, &k2));
    let a = p.canonical_copy(Factor::H, 0).unwrap();
    let b = p.canonical_copy(Factor::H, 1).unwrap();
    assert!(a.is_disjoint(&b));
    for c in [&a, &b] {
        let sub = p.graph.induced(c).unwrap();
        assert_eq!(cycle_length(&sub), Some(4));
    }
}

#[test]
fn cones() {
    let k4 = cone(&complete(2).unwrap(), 2);
    assert!(isomorphic(&k4, &complete(4).unwrap()));
    assert_eq!(cone(&path(3).unwrap(), 3).edge_count(), 14);
    let c5 = cycle(5).unwrap();
    assert_eq!(cone(&c5, 0), c5);
}

#[test]
fn connectivity_examples() {
    let c5 = cycle(5).unwrap();
    assert_eq!((edge_connectivity(&c5), vertex_connectivity(&c5)), (2, 2));
    assert_eq!(edge_connectivity(&random_tree(8, 1).unwrap()), 1);
    for l in 2..=4 {
        let t = random_tree(4, l as u64).unwrap();
        let g = cartesian_product(&complete(l).unwrap(), &t);
        assert_eq!(edge_connectivity(&g), l as u64);
    }
    let q3 = hypercube(3).unwrap();
    let face = VertexSet::from_vertices(8, [0, 1, 2, 3]).unwrap();
    assert_eq!(edge_boundary(&q3, &face).unwrap(), 4);
    assert!(matches!(
        edge_boundary(&q3, &VertexSet::empty(8)),
        Err(Error::NoCut)
    ));
    assert!(matches!(
        edge_boundary(&q3, &VertexSet::full(8)),
        Err(Error::NoCut)
    ));
    let two = graph(4, &[(0, 1, 1), (2, 3, 1)]);
    assert_eq!((edge_connectivity(&two), vertex_connectivity(&two)), (0, 0));
    assert_eq!(vertex_connectivity(&complete(5).unwrap()), 4);
    assert_eq!(
        bridges(&graph(4, &[(0, 1, 1), (1, 2, 2), (2, 3, 1), (3, 1, 1)])),
        vec![(0, 1)]
    );
}

#[test]
fn independence_examples() {
    for n in 1..=6 {
        assert_eq!(independence_number(&complete(n).unwrap()), 1);
    }
    assert_eq!(independence_number(&complete_bipartite(2, 5).unwrap()), 5);
    assert_eq!(independence_number(&cycle(5).unwrap()), 2);
    assert_eq!(brute_alpha(&cycle(5).unwrap()), 2);
}

#[test]
fn smoothing_examples() {
    assert!(isomorphic(
        &smooth_two_valent(&path(5).unwrap()).unwrap(),
        &complete(2).unwrap()
    ));
    let k4 = complete(4).unwrap();
    assert!(isomorphic(
        &smooth_two_valent(&k4.subdivide()).unwrap(),
        &k4
    ));
    let c2 = smooth_two_valent(&cycle(7).unwrap()).unwrap();
    assert_eq!((c2.vertex_count(), c2.mult(0, 1)), (2, 2));
    let j = smooth_two_valent(&chipfire::fixtures::product_t_h()).unwrap();
    assert_eq!(j.vertex_count(), 6);
}

#[test]
fn invariants_match_brute_force_on_small_graphs() {
    for n in 1..=5 {
        for g in labelled_connected(n, 10) {
            assert_eq!(edge_connectivity(&g), brute_lambda(&g), "{g:?}");
            assert_eq!(vertex_connectivity(&g), brute_kappa(&g), "{g:?}");
            assert_eq!(independence_number(&g), brute_alpha(&g), "{g:?}");
            if let Some((size, side)) = min_edge_cut(&g) {
                assert_eq!(size, boundary(&g, mask_of(&side)));
            }
        }
    }
}

fn arb_multigraph(max_n: usize) -> impl Strategy<Value = Multigraph> {
    (
        1..=max_n,
        prop::collection::vec((0usize..8, 0usize..8, 0u32..3), 0..12),
    )
        .prop_map(|(n, extra)| random_multigraph(n, &extra))
}

fn arb_simple(max_n: usize) -> impl Strategy<Value = Multigraph> {
    (2..=max_n, any::<u64>(), 0.2f64..0.9).prop_map(|(n, seed, p)| {
        let g = random_graph(n, p, seed).unwrap();
        let mut edges = g.edges();
        edges.extend(
            (1..n)
                .filter(|&i| !g.is_adjacent(i - 1, i))
                .map(|i| (i - 1, i, 1)),
        );
        graph(n, &edges)
    })
}

proptest! {
    #[test]
    fn product_edge_count_and_swap(g in arb_multigraph(5), h in arb_multigraph(5)) {
        let gh = cartesian_product(&g, &h);
        let hg = cartesian_product(&h, &g);
        let (ng, nh) = (g.vertex_count(), h.vertex_count());
        prop_assert_eq!(gh.edge_count(), ng as u64 * h.edge_count() + nh as u64 * g.edge_count());
        for x in 0..ng * nh {
            for y in 0..ng * nh {
                let (sx, sy) = ((x % nh) * ng + x / nh, (y % nh) * ng + y / nh);
                prop_assert_eq!(gh.mult(x, y), hg.mult(sx, sy));
            }
        }
    }

    #[test]
    fn connectivity_chain(g in arb_multigraph(8)) {
        let (k, l, d) = (vertex_connectivity(&g), edge_connectivity(&g), min_degree(&g));
        if g.vertex_count() > 1 {
            prop_assert!(l <= d);
            if g.is_simple() {
                prop_assert!(k <= l);
            }
        }
        prop_assert_eq!(l, brute_lambda(&g));
    }

    #[test]
    fn boundary_symmetry_and_doubling(g in arb_multigraph(7), mask in 1u32..127) {
        let n = g.vertex_count();
        let a = VertexSet::from_vertices(n, (0..n).filter(|v| mask >> v & 1 == 1)).unwrap();
        if a.is_empty() || a.is_full() {
            return Ok(());
        }
        let b = edge_boundary(&g, &a).unwrap();
        prop_assert_eq!(b, edge_boundary(&g, &a.complement()).unwrap());
        let doubled: Vec<_> = g.edges().into_iter().map(|(u, v, k)| (u, v, 2 * k)).collect();
        prop_assert_eq!(edge_boundary(&graph(n, &doubled), &a).unwrap(), 2 * b);
    }

    #[test]
    fn cone_keeps_alpha(g in arb_simple(7), l in 0usize..4) {
        let c = cone(&g, l);
        prop_assert!(min_degree(&c) >= min_degree(&g) + l as u64);
        let n = g.vertex_count() as u64;
        prop_assert_eq!(c.edge_count(), g.edge_count() + n * l as u64 + (l * l.saturating_sub(1) / 2) as u64);
        if l >= 1 {
            prop_assert_eq!(independence_number(&c), independence_number(&g));
        }
    }

    #[test]
    fn smoothing_is_idempotent(g in arb_multigraph(8)) {
        let s = smooth_two_valent(&g).unwrap();
        prop_assert_eq!(&smooth_two_valent(&s).unwrap(), &s);
        let betti = |h: &Multigraph| h.edge_count() as i64 - h.vertex_count() as i64 + 1;
        prop_assert_eq!(betti(&s), betti(&g));
    }

    #[test]
    fn mel_round_trip(g in arb_multigraph(8)) {
        prop_assert_eq!(parse_mel(&write_mel(&g)).unwrap(), g);
    }

    #[test]
    fn alpha_matches_brute_force(g in arb_simple(12)) {
        prop_assert_eq!(independence_number(&g), brute_alpha(&g));
        prop_assert_eq!(vertex_connectivity(&g), brute_kappa(&g));
    }
}
