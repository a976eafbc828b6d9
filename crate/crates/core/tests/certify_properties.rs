use kneser_core::certify::{
    check_max_degree, check_p3_cover, complement, double_count_identity, find_x_matching, max_substrings,
    MatchingResult, OddExpansion,
};
use kneser_core::solver::{solve, SearchBudget};
use kneser_core::subset::enumerate_k_subsets;
use kneser_core::{GenericGraph, KSubset, KneserGraph, VertexSet};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn mask_set(order: usize, bits: u64) -> VertexSet {
    let mut s = VertexSet::with_capacity(order);
    for v in 0..order.min(64) {
        if bits >> v & 1 == 1 {
            s.insert(v);
        }
    }
    s
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn cover_and_degree_checks_agree(seed in any::<u64>(), order in 0usize..20, bits in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = GenericGraph::from_fn(order, |_, _| rng.gen_bool(0.35));
        let cover = mask_set(order, bits);
        prop_assert_eq!(check_p3_cover(&g, &cover), check_max_degree(&g, &complement(&g, &cover), 1));
    }

    #[test]
    fn matching_or_genuine_violator(seed in any::<u64>(), nx in 0usize..12, ny in 0usize..12, p in 0.05f64..0.6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let xs: Vec<usize> = (0..nx).collect();
        let ys: Vec<usize> = (100..100 + ny).collect();
        let edges: Vec<(usize, usize)> = xs
            .iter()
            .flat_map(|&x| ys.iter().map(move |&y| (x, y)))
            .filter(|_| rng.gen_bool(p))
            .collect();
        match find_x_matching(&xs, &ys, &edges) {
            MatchingResult::Matching(m) => {
                prop_assert_eq!(m.len(), nx);
                let mut used_y: Vec<usize> = m.iter().map(|e| e.1).collect();
                used_y.sort();
                used_y.dedup();
                prop_assert_eq!(used_y.len(), nx);
                prop_assert!(m.iter().all(|e| edges.contains(e)));
            }
            MatchingResult::Violator { set, .. } => {
                // recompute N(W) from the raw edges
                let mut nbrs: Vec<usize> = edges
                    .iter()
                    .filter(|(x, _)| set.contains(x))
                    .map(|e| e.1)
                    .collect();
                nbrs.sort();
                nbrs.dedup();
                prop_assert!(!set.is_empty());
                prop_assert!(nbrs.len() < set.len());
            }
        }
    }
}

#[test]
fn odd_graph_expansion_is_exhaustive_for_k2_and_k3() {
    for k in [2u32, 3] {
        let o = OddExpansion::new(k).unwrap();
        let c = o.center().len();
        let total = (1u64 << c) - 1;
        let passed = (1..=total).filter(|&m| o.check_mask(m).unwrap()).count() as u64;
        assert_eq!(passed, total, "O_{k}");
    }
}

#[test]
fn sampled_center_subsets_have_matchings() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for k in [2u32, 3] {
        let o = OddExpansion::new(k).unwrap();
        let c = o.center().len();
        for _ in 0..200 {
            let mask = rng.gen_range(1u64..(1 << c));
            let l: Vec<usize> = (0..c).filter(|b| mask >> b & 1 == 1).map(|b| o.center()[b]).collect();
            let mut lset = VertexSet::with_capacity(o.graph().order());
            l.iter().for_each(|&v| lset.insert(v));
            let ys: Vec<usize> = o.neighborhood(&lset).ones().collect();
            let r = find_x_matching(&l, &ys, &o.edges_from(&lset));
            assert!(r.is_matching(), "O_{k} mask {mask:#x}");
        }
    }
}

#[test]
fn maximum_dissociation_sets_of_pairs_graphs_fill_few_windows() {
    for n in [5u32, 6, 7] {
        let g = KneserGraph::build(n, 2).unwrap();
        let r = solve(g.graph(), 1, &SearchBudget::unlimited()).unwrap();
        assert!(r.optimal);
        let family: Vec<KSubset> = r.witness.ones().map(|v| g.vertex(v)).collect();
        let (best, _) = max_substrings(n, 2, &family).unwrap();
        assert!(best <= 3, "K({n},2): {best}");
    }
    let all = enumerate_k_subsets(4, 2).unwrap();
    assert_eq!(max_substrings(4, 2, &all).unwrap().0, 4);
}

#[test]
fn double_counting_on_random_families() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for i in 0..50 {
        let n = [5u32, 6, 7][i % 3];
        let k = [2u32, 3][i % 2];
        let family: Vec<KSubset> =
            enumerate_k_subsets(n, k).unwrap().into_iter().filter(|_| rng.gen_bool(0.4)).collect();
        assert!(double_count_identity(n, k, &family).unwrap(), "n={n} k={k}");
    }
}
