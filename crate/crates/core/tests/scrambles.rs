mod common;

use chipfire::certify::product_lower;
use chipfire::constructions::{cartesian_product, cone, Factor, Product};
use chipfire::fixtures::*;
use chipfire::generators::*;
use chipfire::gonality::gonality;
use chipfire::invariants::{edge_connectivity, independence_number, vertex_connectivity};
use chipfire::scramble::*;
use chipfire::sn::{brute_force_sn, sn_bounds, SnOptions};
use chipfire::{Error, Multigraph, VertexSet};
use common::*;
use proptest::prelude::*;

fn brute_opts() -> SnOptions {
    SnOptions {
        brute_max_eggs: Some(64),
        ..Default::default()
    }
}

fn masks(s: &Scramble) -> Vec<u32> {
    s.eggs().iter().map(mask_of).collect()
}

#[test]
fn cube_scramble_order() {
    let s = cube_scramble();
    let o = scramble_order(&s);
    assert_eq!((o.hitting, o.egg_cut.value(), o.order), (4, Some(4), 4));
    assert!(verify_order(&s, &o));
}

#[test]
fn order_conventions() {
    let k4 = complete(4).unwrap();
    let whole = Scramble::new(&k4, vec![VertexSet::full(4)]).unwrap();
    let o = scramble_order(&whole);
    assert_eq!((o.order, o.egg_cut), (1, EggCut::Infinite));

    let c5 = cycle(5).unwrap();
    let meeting = Scramble::new(
        &c5,
        vec![set(5, &[0, 1]), set(5, &[1, 2]), set(5, &[4, 0, 1])],
    )
    .unwrap();
    let o = scramble_order(&meeting);
    assert_eq!((o.egg_cut, o.order), (EggCut::Infinite, o.hitting));

    let two = graph(4, &[(0, 1, 1), (2, 3, 1)]);
    let apart = Scramble::new(&two, vec![set(4, &[0]), set(4, &[3])]).unwrap();
    assert_eq!(scramble_order(&apart).egg_cut.value(), Some(0));
    assert_eq!(scramble_order(&vertex_scramble(&two)).order, 0);

    assert!(matches!(
        Scramble::new(&k4, vec![]),
        Err(Error::EmptyScramble)
    ));
    assert!(matches!(
        Scramble::new(&k4, vec![VertexSet::empty(4)]),
        Err(Error::EmptyEgg(_))
    ));
    assert!(matches!(
        Scramble::new(&c5, vec![set(5, &[0, 2])]),
        Err(Error::DisconnectedEgg(_))
    ));
    assert!(matches!(
        Scramble::new(&c5, vec![set(4, &[0])]),
        Err(Error::HostMismatch { .. })
    ));

    let pruned = Scramble::new(
        &c5,
        vec![set(5, &[0, 1]), set(5, &[0, 1]), set(5, &[0, 1, 2])],
    )
    .unwrap();
    assert_eq!(pruned.eggs().len(), 1);
}

#[test]
fn drawn_scrambles() {
    assert_eq!(scramble_order(&wedge_scramble()).order, 3);
    assert_eq!(scramble_order(&immersion_scramble()).order, 3);
}

#[test]
fn vertex_and_edge_scrambles() {
    assert_eq!(
        scramble_order(&vertex_scramble(&cycle(5).unwrap())).order,
        2
    );
    assert_eq!(
        scramble_order(&vertex_scramble(&complete(4).unwrap())).order,
        3
    );
    assert_eq!(
        scramble_order(&vertex_scramble(&complete(1).unwrap())).order,
        1
    );

    let k4 = complete(4).unwrap();
    let e = edge_scramble(&k4).unwrap();
    let o = scramble_order(&e);
    assert_eq!((o.hitting, o.order), (3, 3));
    assert_eq!(o.hitting, brute_hitting(4, &masks(&e)));

    let p3 = path(3).unwrap();
    let o = scramble_order(&edge_scramble(&p3).unwrap());
    assert_eq!((o.hitting, o.egg_cut, o.order), (1, EggCut::Infinite, 1));

    assert!(matches!(
        edge_scramble(&complete(1).unwrap()),
        Err(Error::Edgeless)
    ));
    let c2 = cycle(2).unwrap();
    assert_eq!(edge_scramble(&c2).unwrap().eggs().len(), 1);

    for m in 2..=4 {
        for g in labelled_connected(m, 6) {
            let hat = cone(&g, m);
            let want = 2 * m as u64 - brute_alpha(&g) as u64;
            assert_eq!(scramble_order(&edge_scramble(&hat).unwrap()).order, want);
        }
    }
}

#[test]
fn product_scramble_examples() {
    let (c4, c5) = (cycle(4).unwrap(), cycle(5).unwrap());
    let p = Product::new(&c4, &c5);
    let k1 = product_scramble(&c4, &c5, 1).unwrap();
    let copies: Vec<VertexSet> = (0..5)
        .map(|w| p.canonical_copy(Factor::G, w).unwrap())
        .collect();
    assert_eq!(k1.eggs(), &copies[..]);

    let s = product_scramble(&c4, &c5, 2).unwrap();
    assert_eq!(s.eggs().len(), 20);
    assert!(s.eggs().iter().all(|e| e.len() == 3));
    let o = scramble_order(&s);
    assert!(o.order >= 8);
    assert_eq!(o.hitting, 2 * 5);
    assert_eq!(product_lower(&c4, &c5, 2).unwrap(), 8);

    assert!(matches!(
        product_scramble(&c4, &c5, 3),
        Err(Error::Hypothesis(_))
    ));
    assert!(matches!(
        product_scramble(&c4, &c5, 0),
        Err(Error::Hypothesis(_))
    ));

    let k5 = complete(5).unwrap();
    let s = product_scramble(&k5, &complete(2).unwrap(), 3).unwrap();
    assert!(scramble_order(&s).order >= product_lower(&k5, &complete(2).unwrap(), 3).unwrap());
}

#[test]
fn bound_reports() {
    let r = sn_bounds(&cube(), &SnOptions::default()).unwrap();
    assert!(r.is_exact() && r.lower == 4);

    let expected = [2, 2, 3];
    for (g, want) in [diamond(), wedge_two_valent(), wedge_three_valent()]
        .iter()
        .zip(expected)
    {
        let r = sn_bounds(g, &SnOptions::default()).unwrap();
        assert_eq!((r.lower, r.upper), (want, want));
    }

    let h = immersion_h();
    let plain = sn_bounds(&h, &SnOptions::default()).unwrap();
    assert_eq!(plain.lower, 2);
    let r = sn_bounds(&h, &brute_opts()).unwrap();
    assert_eq!((r.lower, r.upper), (2, 2));
    let g = immersion_g();
    let r = sn_bounds(
        &g,
        &SnOptions {
            scrambles: vec![immersion_scramble()],
            ..Default::default()
        },
    )
    .unwrap();
    assert!(r.lower >= 3);

    let two = graph(5, &[(0, 1, 1), (1, 2, 1), (2, 0, 1), (3, 4, 1)]);
    let r = sn_bounds(&two, &SnOptions::default()).unwrap();
    assert_eq!((r.lower, r.upper), (2, 2));
}

#[test]
fn brute_force_examples() {
    assert_eq!(brute_force_sn(&cycle(4).unwrap(), 64).unwrap().value, 2);
    assert_eq!(brute_force_sn(&complete(4).unwrap(), 64).unwrap().value, 3);
    assert_eq!(
        brute_force_sn(&random_tree(6, 2).unwrap(), 64)
            .unwrap()
            .value,
        1
    );
    let b = brute_force_sn(&complete(4).unwrap(), 64).unwrap();
    assert!(b.exact);
    assert_eq!(scramble_order(&b.witness).order, b.value);
    assert!(matches!(
        brute_force_sn(&cube(), 64),
        Err(Error::TooLarge { .. })
    ));
}

#[test]
fn subdivision_keeps_scramble_number() {
    let graphs = [
        cycle(4).unwrap(),
        complete(4).unwrap(),
        diamond(),
        wedge_two_valent(),
        wedge_three_valent(),
    ];
    for g in graphs {
        let a = sn_bounds(&g, &SnOptions::default()).unwrap();
        let b = sn_bounds(&g.subdivide(), &SnOptions::default()).unwrap();
        assert!(a.is_exact() && b.is_exact());
        assert_eq!(a.lower, b.lower);
    }
}

#[test]
fn connectivity_scramble_gonality_chain() {
    for n in 1..=5 {
        for g in connected_up_to_iso(n, 8) {
            let vs = scramble_order(&vertex_scramble(&g)).order;
            if n >= 2 {
                assert_eq!(vs, edge_connectivity(&g).min(n as u64));
            }
            let b = brute_force_sn(&g, 64).unwrap();
            let gon = gonality(&g).unwrap().value;
            assert!(vs <= b.value && b.value <= gon, "{g:?}");
            let r = sn_bounds(&g, &SnOptions::default()).unwrap();
            if r.is_exact() {
                assert_eq!(r.lower, b.value, "{g:?}");
            }
            assert!(r.lower <= b.value && b.value <= r.upper);
        }
    }
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Multigraph> {
    (
        1..=max_n,
        prop::collection::vec((0usize..8, 0usize..8, 0u32..3), 0..10),
    )
        .prop_map(|(n, extra)| random_multigraph(n, &extra))
}

fn arb_scramble(max_n: usize) -> impl Strategy<Value = Scramble> {
    (arb_graph(max_n), prop::collection::vec(1u32..255, 1..8)).prop_map(|(g, raw)| {
        let n = g.vertex_count();
        let mut eggs: Vec<VertexSet> = raw
            .iter()
            .map(|m| VertexSet::from_vertices(n, (0..n).filter(|v| m >> v & 1 == 1)).unwrap())
            .filter(|e| !e.is_empty() && g.is_connected_subset(e))
            .collect();
        if eggs.is_empty() {
            eggs.push(VertexSet::singleton(n, 0).unwrap());
        }
        Scramble::new(&g, eggs).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn order_matches_definition(s in arb_scramble(7)) {
        let o = scramble_order(&s);
        let m = masks(&s);
        prop_assert_eq!(o.hitting, brute_hitting(s.host().vertex_count(), &m));
        prop_assert_eq!(o.egg_cut.value(), brute_egg_cut(s.host(), &m));
        prop_assert_eq!(o.order, brute_order(s.host(), &m));
        prop_assert!(verify_order(&s, &o));
        let pairwise = m.iter().enumerate().all(|(i, a)| m[i + 1..].iter().all(|b| a & b != 0));
        prop_assert_eq!(pairwise, o.egg_cut == EggCut::Infinite);
    }

    #[test]
    fn brute_force_is_monotone(g in arb_graph(5), drop in prop::collection::vec(any::<bool>(), 20)) {
        let n = g.vertex_count();
        let edges: Vec<_> = g.edges().into_iter().zip(drop).filter(|(_, d)| !d).map(|(e, _)| e).collect();
        let sub = Multigraph::from_edges(n, &edges).unwrap();
        let (a, b) = (brute_force_sn(&sub, 64).unwrap(), brute_force_sn(&g, 64).unwrap());
        prop_assert!(a.exact && b.exact);
        prop_assert!(a.value <= b.value);
    }

    #[test]
    fn product_scramble_meets_formula(ng in 2usize..5, nh in 1usize..4, sg in any::<u64>(), sh in any::<u64>()) {
        let g = random_graph(ng, 0.8, sg).unwrap();
        let h = random_tree(nh, sh).unwrap();
        prop_assume!(g.is_connected());
        for k in 1..=vertex_connectivity(&g) as usize {
            if ng + 1 < 2 * k {
                continue;
            }
            let s = product_scramble(&g, &h, k).unwrap();
            prop_assert_eq!(s.host(), &cartesian_product(&g, &h));
            prop_assert!(scramble_order(&s).order >= product_lower(&g, &h, k as u64).unwrap());
        }
    }

    #[test]
    fn edge_scramble_under_degree_condition(n in 4usize..9, seed in any::<u64>()) {
        let g = random_graph(n, 0.85, seed).unwrap();
        let delta = (0..n).map(|v| g.valence(v)).min().unwrap();
        prop_assume!(delta as usize > n / 2);
        let o = scramble_order(&edge_scramble(&g).unwrap());
        prop_assert_eq!(o.order, (n - independence_number(&g)) as u64);
    }
}
