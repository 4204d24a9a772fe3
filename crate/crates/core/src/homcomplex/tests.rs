use super::*;
use crate::generators::*;
use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigInt;

const P: i128 = 1_000_000_007;

/// Rank over `F_p` by plain Gaussian elimination on a dense copy.
fn rank_mod_p(m: &SparseMatrix) -> usize {
    let mut a = vec![vec![0i128; m.cols]; m.rows];
    for (j, col) in m.columns.iter().enumerate() {
        for &(i, v) in col {
            a[i][j] = (v as i128).rem_euclid(P);
        }
    }
    let mut rank = 0;
    for j in 0..m.cols {
        let Some(p) = (rank..m.rows).find(|&i| a[i][j] != 0) else { continue };
        a.swap(rank, p);
        let inv = pow(a[rank][j], P - 2);
        for i in 0..m.rows {
            if i != rank && a[i][j] != 0 {
                let f = a[i][j] * inv % P;
                for k in j..m.cols {
                    a[i][k] = (a[i][k] - f * a[rank][k]).rem_euclid(P);
                }
            }
        }
        rank += 1;
    }
    rank
}

fn pow(mut b: i128, mut e: i128) -> i128 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % P;
        }
        b = b * b % P;
        e >>= 1;
    }
    r
}

/// Betti numbers from `F_p` ranks; agrees with the rational answer here.
fn betti_oracle(c: &CellComplex) -> Vec<usize> {
    let mats = boundary_matrices(c).unwrap();
    let r = |k: usize| mats.get(k).filter(|_| k > 0).map_or(0, rank_mod_p);
    (0..=c.max_dim()).map(|k| c.cells(k).len() - r(k) - r(k + 1)).collect()
}

fn grotzsch() -> crate::Graph {
    mycielski(&cycle(5).unwrap()).unwrap()
}

#[test]
fn f_vector_matches_brute_force() {
    let graphs = [
        complete(2).unwrap(),
        complete(4).unwrap(),
        cycle(5).unwrap(),
        complete_bipartite(2, 3).unwrap(),
        looped_cycle(3).unwrap(),
        kneser(5, 2).unwrap(),
        crate::Graph::from_edges(4, [(0, 0), (0, 1), (1, 2), (2, 3), (3, 1)]).unwrap(),
    ];
    for g in &graphs {
        let c = build_hom_k2(g, Some(usize::MAX)).unwrap();
        assert!(!c.is_truncated());
        assert_eq!(c.f_vector(), cells::brute_force_f_vector(g), "{g:?}");
    }
    assert_eq!(build_hom_k2(&complete(4).unwrap(), None).unwrap().cells(0).len(), 12);
    assert_eq!(build_hom_k2(&cycle(5).unwrap(), None).unwrap().f_vector(), vec![10, 10]);
    assert_eq!(build_hom_k2(&complete(2).unwrap(), None).unwrap().f_vector(), vec![2]);
}

#[test]
fn edgeless_is_an_error() {
    assert_eq!(build_hom_k2(&crate::Graph::empty(3).unwrap(), None).unwrap_err(), crate::Error::Edgeless);
}

#[test]
fn edge_and_square_boundaries() {
    let e = Cell::new([1, 4].into_iter().collect(), crate::VertexSet::singleton(2));
    let f = signed_faces(&e, SignConvention::Product);
    assert_eq!(
        f,
        vec![
            (Cell::new(crate::VertexSet::singleton(4), crate::VertexSet::singleton(2)), 1),
            (Cell::new(crate::VertexSet::singleton(1), crate::VertexSet::singleton(2)), -1),
        ]
    );
    // Expanded by hand: a×{b,b'} - a'×{b,b'} ... with the cross sign on the τ side.
    let sq = Cell::new([0, 1].into_iter().collect(), [2, 3].into_iter().collect());
    let set = |v: &[usize]| v.iter().copied().collect::<crate::VertexSet>();
    let mut got = signed_faces(&sq, SignConvention::Product);
    got.sort();
    let mut want = vec![
        (Cell::new(set(&[1]), set(&[2, 3])), 1),
        (Cell::new(set(&[0]), set(&[2, 3])), -1),
        (Cell::new(set(&[0, 1]), set(&[3])), -1),
        (Cell::new(set(&[0, 1]), set(&[2])), 1),
    ];
    want.sort();
    assert_eq!(got, want);
}

#[test]
fn boundary_squares_to_zero() {
    for g in [complete(4).unwrap(), complete(5).unwrap(), grotzsch(), looped_cycle(4).unwrap(), kneser(5, 2).unwrap()] {
        let c = build_hom_k2(&g, Some(usize::MAX)).unwrap();
        check_chain_complex(&boundary_matrices(&c).unwrap()).unwrap();
    }
}

#[test]
fn dropping_the_cross_sign_is_detected() {
    let c = build_hom_k2(&complete(4).unwrap(), None).unwrap();
    let bad = boundary_matrices_with(&c, SignConvention::WithoutCrossSign).unwrap();
    assert!(check_chain_complex(&bad).is_err());
}

#[test]
fn open_complex_is_rejected() {
    let g = complete(3).unwrap();
    let set = |v: &[usize]| v.iter().copied().collect::<crate::VertexSet>();
    let cells = vec![Cell::new(set(&[0, 1]), set(&[2])), Cell::new(set(&[0]), set(&[2]))];
    assert!(matches!(CellComplex::from_cells(&g, cells, 1), Err(crate::Error::Structure(_))));
    let bogus = vec![Cell::new(set(&[0]), set(&[0]))];
    assert!(CellComplex::from_cells(&g, bogus, 0).is_err());
}

#[test]
fn complete_graphs_give_spheres() {
    for n in 3..=5 {
        let (c, h) = homology_of(&complete(n).unwrap(), None).unwrap();
        let mut want = vec![0; n - 1];
        want[0] = 1;
        want[n - 2] += 1;
        assert_eq!(h.betti, want, "K{n}");
        assert!(h.torsion.iter().all(Vec::is_empty));
        assert_eq!(h.betti, betti_oracle(&c));
        assert_eq!(homological_connectivity(&h).value, Connectivity::Exact(n as isize - 3));
    }
}

#[test]
fn small_cycles() {
    let h = |g| homology_of(&g, None).unwrap().1;
    let c5 = h(cycle(5).unwrap());
    assert_eq!((c5.betti.clone(), h1_free_rank(&c5)), (vec![1, 1], 1));
    assert_eq!(homological_connectivity(&c5), ConnectivityEstimate { value: Connectivity::Exact(0), caveat: false });
    // Each component of the C4 complex is a filled square.
    assert_eq!(h(cycle(4).unwrap()).betti, vec![2, 0, 0]);
    assert_eq!(h(cycle(6).unwrap()).betti, vec![2, 2]);
    let k2 = h(complete(2).unwrap());
    assert_eq!(k2.betti, vec![2]);
    assert_eq!(homological_connectivity(&k2).value, Connectivity::Exact(-1));
    assert_eq!(h1_free_rank(&h(complete(4).unwrap())), 0);
}

#[test]
fn grotzsch_is_a_homology_two_sphere() {
    let (c, h) = homology_of(&grotzsch(), None).unwrap();
    assert_eq!(h.betti[..3], [1, 0, 1]);
    assert!(h.betti[3..].iter().all(|&b| b == 0));
    assert_eq!(h.betti, betti_oracle(&c));
    let conn = homological_connectivity(&h);
    assert_eq!(conn, ConnectivityEstimate { value: Connectivity::Exact(1), caveat: true });
}

#[test]
fn truncation_is_reported() {
    let (_, h) = homology_of(&complete(5).unwrap(), Some(1)).unwrap();
    assert!(h.truncated);
    assert_eq!(h.betti, vec![1, 0]);
    assert_eq!(homological_connectivity(&h).value, Connectivity::AtLeast(1));
    // Dismantlable, so acyclic.
    let (_, h) = homology_of(&looped_cycle(3).unwrap(), None).unwrap();
    assert_eq!(homological_connectivity(&h).value, Connectivity::Infinite);
    // The reflexive 4-cycle is stiff; its neighbourhoods are the four
    // triangles of a tetrahedron boundary.
    let (_, h) = homology_of(&looped_cycle(4).unwrap(), None).unwrap();
    assert_eq!(h.betti[..3], [1, 0, 1]);
}

#[test]
fn looped_graphs_and_betti_oracle() {
    for g in [looped_cycle(5).unwrap(), kneser(5, 2).unwrap(), crate::Graph::from_edges(3, [(0, 0), (0, 1), (1, 2)]).unwrap()] {
        let (c, h) = homology_of(&g, None).unwrap();
        assert_eq!(h.betti, betti_oracle(&c));
    }
}

#[test]
fn walk_chains() {
    let c4 = cycle(4).unwrap();
    let cx = build_hom_k2(&c4, None).unwrap();
    let w = EvenClosedWalk::new(&c4, vec![0, 1, 2, 3]).unwrap();
    let ch = cycle_chain(&cx, &w).unwrap();
    assert_eq!(ch.support().count(), 4);
    assert!(ch.support().all(|(_, x)| x.abs() == 1));

    let c5 = cycle(5).unwrap();
    let cx = build_hom_k2(&c5, None).unwrap();
    let lap = EvenClosedWalk::new(&c5, (0..5).chain(0..5).collect()).unwrap();
    let ch = cycle_chain(&cx, &lap).unwrap();
    // The complex is a 10-cycle, so a generator uses every edge once.
    assert_eq!(ch.support().count(), 10);
    assert!(ch.support().all(|(_, x)| x.abs() == 1));
    assert_eq!(class_rank(&cx, &[ch.clone()]).unwrap(), 1);

    assert!(EvenClosedWalk::new(&c5, (0..5).collect()).is_err());
    assert!(EvenClosedWalk::new(&c5, vec![0, 2]).is_err());
    assert!(EvenClosedWalk::new(&c5, vec![]).is_err());
}

#[test]
fn random_walk_chains_are_cycles() {
    let mut rng = rng_from_seed(7);
    for g in [grotzsch(), cycle(7).unwrap(), complete(4).unwrap()] {
        let cx = build_hom_k2(&g, Some(1)).unwrap();
        for steps in 0..30 {
            let w = random_even_closed_walk(&g, steps, &mut rng).unwrap();
            assert_eq!(w.len() % 2, 0);
            let ch = cycle_chain(&cx, &w).unwrap();
            assert!(chain_boundary(&cx, &ch).unwrap().iter().all(|&x| x == 0));
        }
    }
}

#[test]
fn walk_classes_span_h1() {
    for (g, b1) in [(cycle(5).unwrap(), 1), (cycle(7).unwrap(), 1), (cycle(4).unwrap(), 0), (cycle(6).unwrap(), 2), (complete(4).unwrap(), 0), (grotzsch(), 0)] {
        let cx = build_hom_k2(&g, Some(1)).unwrap();
        let r = h1_span_check(&cx, 4 * g.n()).unwrap();
        assert_eq!(r.b1, b1);
        assert!(r.spans(), "{r:?}");
    }
    // Too short a cap sees nothing on C7.
    let g = cycle(7).unwrap();
    let r = h1_span_check(&build_hom_k2(&g, Some(1)).unwrap(), 4).unwrap();
    assert_eq!(r.span_rank, 0);
}

/// Invariant factors from determinantal divisors: `d_k` is the gcd of all
/// `k × k` minors.
fn invariant_factors_oracle(a: &[Vec<i64>]) -> (usize, Vec<BigInt>) {
    use num_integer::Integer;
    fn det(m: &[Vec<i128>]) -> i128 {
        if m.len() == 1 {
            return m[0][0];
        }
        (0..m.len())
            .map(|j| {
                let minor: Vec<Vec<i128>> = m[1..].iter().map(|r| r.iter().enumerate().filter(|e| e.0 != j).map(|e| *e.1).collect()).collect();
                let s = if j % 2 == 0 { 1 } else { -1 };
                s * m[0][j] * det(&minor)
            })
            .sum()
    }
    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        crate::generators::k_subsets(n, k).into_iter().map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect()).collect()
    }
    let (r, c) = (a.len(), a[0].len());
    let mut prev = 1i128;
    let mut factors = Vec::new();
    for k in 1..=r.min(c) {
        let mut g = 0i128;
        for rows in subsets(r, k) {
            for cols in subsets(c, k) {
                let m: Vec<Vec<i128>> = rows.iter().map(|&i| cols.iter().map(|&j| a[i][j] as i128).collect()).collect();
                g = g.gcd(&det(&m));
            }
        }
        if g == 0 {
            break;
        }
        factors.push(BigInt::from(g / prev));
        prev = g;
    }
    let rank = factors.len();
    (rank, factors.into_iter().filter(|f| *f > BigInt::from(1)).collect())
}

proptest::proptest! {
    #[test]
    fn smith_matches_determinantal_divisors(
        r in 1usize..5,
        c in 1usize..5,
        entries in proptest::collection::vec(-6i64..=6, 16),
    ) {
        let a: Vec<Vec<i64>> = (0..r).map(|i| (0..c).map(|j| entries[i * 4 + j]).collect()).collect();
        let mut m = SparseMatrix::zero(r, c);
        for j in 0..c {
            for i in 0..r {
                if a[i][j] != 0 {
                    m.columns[j].push((i, a[i][j]));
                }
            }
        }
        let s = smith(&m);
        let (rank, tors) = invariant_factors_oracle(&a);
        proptest::prop_assert_eq!(s.rank, rank);
        proptest::prop_assert_eq!(s.torsion, tors);
    }

    #[test]
    fn random_graph_complexes(seed in 0u64..200, n in 3usize..8) {
        let g = erdos_renyi(n, 0.5, seed).unwrap();
        proptest::prop_assume!(!g.is_edgeless());
        let (c, h) = homology_of(&g, None).unwrap();
        proptest::prop_assert_eq!(c.f_vector(), cells::brute_force_f_vector(&g));
        proptest::prop_assert_eq!(&h.betti, &betti_oracle(&c));
        // Disconnected complex exactly for disconnected or bipartite graphs,
        // ignoring isolated vertices (they contribute no cells).
        let active = g.components().iter().filter(|c| c.iter().any(|v| g.degree(v) > 0)).count();
        let split = active > 1 || g.is_bipartite();
        proptest::prop_assert_eq!(h.betti[0] > 1, split);
    }
}
