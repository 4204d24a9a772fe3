use homwarm_core::generators::*;
use homwarm_core::iso::{is_isomorphic, is_isomorphism};
use homwarm_core::Graph;

/// Sends a vertex of the recursive construction to its explicit coordinates.
fn coordinates(k: usize, m: usize) -> (TwistedProduct, Vec<(usize, Vec<usize>)>) {
    let ring = looped_cycle(2 * m).unwrap();
    let anti = Z2Action::antipodal(2 * m).unwrap();
    let mut cur = TwistedProduct {
        graph: complete(2).unwrap(),
        quotient: vec![0, 1],
        representatives: vec![(0, 0), (1, 0)],
        induced_action: Z2Action::swap(),
    };
    let mut coords: Vec<(usize, Vec<usize>)> = vec![(0, vec![]), (1, vec![])];
    for _ in 0..k {
        let next = twisted_product(&cur.graph, &cur.induced_action, &ring, &anti).unwrap();
        coords = next
            .representatives
            .iter()
            .map(|&(g, h)| {
                let (e, mut a) = coords[g].clone();
                a.push(h);
                (e, a)
            })
            .collect();
        cur = next;
    }
    (cur, coords)
}

#[test]
fn recursive_and_direct_toroidal_graphs_agree() {
    for k in 0..=3 {
        for m in 1..=7 {
            let direct = twisted_toroidal(k, m).unwrap();
            let (rec, coords) = coordinates(k, m);
            assert_eq!(rec.graph.n(), 2 * m.pow(k as u32), "T_{k},{m}");
            assert_eq!(direct.n(), rec.graph.n());
            let map: Vec<usize> = coords.iter().map(|(e, a)| toroidal_index(m, *e, a)).collect();
            assert!(is_isomorphism(&rec.graph, &direct, &map), "T_{k},{m}");
            assert_eq!(twisted_toroidal_recursive(k, m).unwrap().graph, rec.graph);
        }
    }
}

#[test]
fn toroidal_regularity() {
    for k in 1..=3 {
        for m in 3..=7 {
            let g = twisted_toroidal(k, m).unwrap();
            assert!(!g.has_loops());
            assert!((0..g.n()).all(|v| g.degree(v) == 3usize.pow(k as u32)), "T_{k},{m}");
        }
    }
}

#[test]
fn small_toroidal_cases() {
    // T_{1,1}: two classes, each carrying a loop, joined by an edge.
    let looped_edge = Graph::from_edges(2, [(0, 0), (0, 1), (1, 1)]).unwrap();
    assert!(is_isomorphic(&twisted_toroidal(1, 1).unwrap(), &looped_edge));
    assert!(is_isomorphic(&twisted_toroidal(1, 2).unwrap(), &complete(4).unwrap()));
}

#[test]
fn twisted_product_with_trivial_actions_is_categorical() {
    let g = cycle(5).unwrap();
    let h = complete(3).unwrap();
    let t = twisted_product(&g, &Z2Action::trivial(&g), &h, &Z2Action::trivial(&h)).unwrap();
    assert!(is_isomorphic(&t.graph, &g.categorical_product(&h).unwrap()));
}

#[test]
fn mycielski_of_c5_is_grotzsch() {
    let g = mycielski(&cycle(5).unwrap()).unwrap();
    assert_eq!((g.n(), g.edge_count()), (11, 20));
    assert_eq!(g.girth(), Some(4));
    assert_eq!(homwarm_core::chromatic::chromatic_number(&g).value.exact(), Some(4));
}

#[test]
fn petersen_is_kneser() {
    let p = kneser(5, 2).unwrap();
    assert_eq!((p.n(), p.edge_count(), p.girth()), (10, 15, Some(5)));
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    let classic = Graph::from_edges(10, outer.chain(spokes).chain(inner)).unwrap();
    assert!(is_isomorphic(&p, &classic));
}

#[test]
fn random_models_reproduce() {
    assert_eq!(erdos_renyi(12, 0.5, 3).unwrap(), erdos_renyi(12, 0.5, 3).unwrap());
    assert_ne!(erdos_renyi(12, 0.5, 3).unwrap(), erdos_renyi(12, 0.5, 4).unwrap());
    let w = DegreeSequence::new(vec![3.0; 10]).unwrap();
    assert_eq!(chung_lu(&w, 9).unwrap(), chung_lu(&w, 9).unwrap());
    assert!(erdos_renyi(5, 1.5, 0).is_err());
}
