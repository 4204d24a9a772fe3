use homwarm_core::chromatic::chromatic_number;
use homwarm_core::folding::{find_fold, is_stiff, stiff_reduction};
use homwarm_core::generators::{erdos_renyi, relabel};
use homwarm_core::homcomplex::homology_of;
use homwarm_core::iso::is_isomorphic;
use homwarm_core::warmth::{
    d_stable_family_exists, find_complete_bipartite, generated_by_at_most, warmth, Mode, WarmthOptions, WarmthValue,
};
use homwarm_core::{Graph, VertexSet};
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n, 0u64..10_000, 0.2f64..0.8).prop_map(|(n, seed, p)| erdos_renyi(n, p, seed).unwrap())
}

fn mask_set(g: &Graph, mask: u64) -> VertexSet {
    (0..g.n()).filter(|&v| mask >> v & 1 == 1).collect()
}

/// Smallest k admitting a proper k-colouring, by trying every assignment.
fn chromatic_oracle(g: &Graph) -> usize {
    let n = g.n();
    (1..=n)
        .find(|&k| {
            let mut col = vec![0usize; n];
            loop {
                if g.edges().all(|(u, v)| col[u] != col[v]) {
                    return true;
                }
                let mut i = 0;
                loop {
                    if i == n {
                        return false;
                    }
                    col[i] += 1;
                    if col[i] < k {
                        break;
                    }
                    col[i] = 0;
                    i += 1;
                }
            }
        })
        .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn neighbourhood_is_monotone(g in graph(14), a in any::<u64>(), b in any::<u64>()) {
        let a = mask_set(&g, a);
        let ab = a.union(&mask_set(&g, b));
        let na = g.set_neighborhood(&a).unwrap();
        prop_assert!(na.is_subset(&g.set_neighborhood(&ab).unwrap()));
        let direct: VertexSet = (0..g.n()).filter(|&w| a.iter().any(|v| g.has_edge(v, w))).collect();
        prop_assert_eq!(na, direct);
    }

    #[test]
    fn bipartite_means_two_colourable(g in graph(9)) {
        prop_assume!(!g.is_edgeless());
        prop_assert_eq!(g.is_bipartite(), chromatic_oracle(&g) <= 2);
    }

    #[test]
    fn chromatic_number_matches_brute_force(g in graph(7)) {
        let r = chromatic_number(&g);
        prop_assert_eq!(r.value.exact(), Some(chromatic_oracle(&g)));
        let col = r.coloring.unwrap();
        prop_assert!(col.is_proper(&g));
    }

    #[test]
    fn stiff_reduction_replays(g in graph(12)) {
        let r = stiff_reduction(&g);
        let kept = r.folds.replay(&g).unwrap();
        prop_assert_eq!(&kept, &r.kept);
        prop_assert!(is_stiff(&r.graph));
        prop_assert!(find_fold(&r.graph).is_none());
        prop_assert_eq!(r.graph.clone(), g.induced_subgraph(&kept).unwrap());
    }

    #[test]
    fn relabelling_preserves_isomorphism_class(g in graph(10), seed in any::<u64>()) {
        let mut perm: Vec<usize> = (0..g.n()).collect();
        let mut s = seed;
        for i in (1..perm.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let h = relabel(&g, &perm).unwrap();
        prop_assert!(is_isomorphic(&g, &h));
    }

    #[test]
    fn warmth_is_fold_invariant_and_below_chromatic(g in graph(9)) {
        prop_assume!(!g.is_edgeless());
        let folded = warmth(&g, &WarmthOptions::default()).unwrap();
        let plain = warmth(&g, &WarmthOptions { fold: false, ..Default::default() }).unwrap();
        prop_assert_eq!(folded.value, plain.value);
        if let (Some(z), Some(chi)) = (folded.value.exact(), chromatic_number(&g).value.exact()) {
            prop_assert!(z <= chi);
        }
        if let Some(f) = &folded.family {
            f.verify(folded.certificate_graph(&g)).unwrap();
        }
    }

    #[test]
    fn homology_is_fold_invariant(g in graph(9)) {
        let r = stiff_reduction(&g);
        prop_assume!(!r.graph.is_edgeless());
        let (_, h1) = homology_of(&g, None).unwrap();
        let (_, h2) = homology_of(&r.graph, None).unwrap();
        prop_assert_eq!(h1.betti.iter().rev().skip_while(|&&b| b == 0).collect::<Vec<_>>(),
                        h2.betti.iter().rev().skip_while(|&&b| b == 0).collect::<Vec<_>>());
        prop_assert_eq!(h1.torsion.iter().rev().skip_while(|t| t.is_empty()).collect::<Vec<_>>(),
                        h2.torsion.iter().rev().skip_while(|t| t.is_empty()).collect::<Vec<_>>());
    }

    #[test]
    fn stable_families_pad_upwards(g in graph(8), d in 1usize..4) {
        prop_assume!(!g.is_edgeless());
        if let Some(f) = d_stable_family_exists(&g, d, Mode::Exact).unwrap() {
            f.verify(&g).unwrap();
            f.padded(d + 1).verify(&g).unwrap();
            prop_assert!(d_stable_family_exists(&g, d + 1, Mode::Exact).unwrap().is_some());
        }
    }

    #[test]
    fn heuristic_never_beats_exact(g in graph(9)) {
        prop_assume!(!g.is_edgeless());
        let ex = warmth(&g, &WarmthOptions::default()).unwrap().value;
        let he = warmth(&g, &WarmthOptions::with_mode(Mode::Heuristic)).unwrap().value;
        match (ex, he) {
            (WarmthValue::Exact(z), WarmthValue::Exact(h)) => prop_assert_eq!(z, h),
            (WarmthValue::Exact(z), WarmthValue::Interval { lo, hi }) => {
                prop_assert!(lo <= z);
                prop_assert!(hi.is_none_or(|h| z <= h));
            }
            (a, b) => prop_assert_eq!(a, b),
        }
    }

    #[test]
    fn complete_bipartite_search_matches_brute_force(g in graph(9), a in 1usize..4, b in 1usize..4) {
        let n = g.n();
        let mut exists = false;
        for sa in 0u64..1 << n {
            if sa.count_ones() as usize != a { continue; }
            let sa = mask_set(&g, sa);
            let common = g.common_neighborhood(&sa).difference(&sa);
            if common.len() >= b { exists = true; break; }
        }
        let found = find_complete_bipartite(&g, a, b);
        prop_assert_eq!(found.is_some(), exists);
        if let Some((x, y)) = found {
            prop_assert_eq!((x.len(), y.len()), (a, b));
            prop_assert!(x.is_disjoint(&y));
            prop_assert!(x.iter().all(|u| y.iter().all(|v| g.has_edge(u, v))));
        }
    }

    #[test]
    fn generated_by_matches_brute_force(g in graph(8), v in 0usize..8, k in 1usize..4) {
        prop_assume!(v < g.n());
        let target = VertexSet::singleton(v);
        let n = g.n();
        let exists = (1u64..1 << n).any(|m| {
            m.count_ones() as usize <= k && g.common_neighborhood(&mask_set(&g, m)) == target
        });
        let found = generated_by_at_most(&g, v, k);
        prop_assert_eq!(found.is_some(), exists);
        if let Some(u) = found {
            prop_assert!(u.len() <= k);
            prop_assert_eq!(g.common_neighborhood(&u), target);
        }
    }
}
