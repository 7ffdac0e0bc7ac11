mod common;

use std::collections::BTreeSet;

use num_rational::BigRational;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::*;
use kneser_core::bounds::{afl_lower, b_of_r, gek_lower, greedy_kneser_coloring, lz_upper};
use kneser_core::reductions::{pullback_coloring, ProjectionMap};
use kneser_core::solver::{chromatic_scan, ChiOutcome, Seeding, VertexOrder};
use kneser_core::sweeps::{evaluate, write_csv, SweepConfig};
use kneser_core::tverberg::{
    hulls_intersect, n_hat, radon_partition_by_kernel, radon_predicts, set_partitions, PointConfig, TverbergPartition,
};
use kneser_core::{
    build_minimal_supports, chromatic_number_with, is_proper, Coloring, Hypergraph, HypergraphSpec, KSubset, Partition,
    SVector, SolverConfig,
};

fn small_spec() -> impl Strategy<Value = HypergraphSpec> {
    prop_oneof![
        (2u32..=8, 1u32..=3, 2u32..=4).prop_filter_map("kneser", |(n, k, r)| HypergraphSpec::kneser(n, k, r).ok()),
        (2u32..=4, 1u32..=2, prop::collection::vec(1u32..=3, 2..=6)).prop_filter_map("capped", |(r, k, caps)| {
            let caps: Vec<u32> = caps.into_iter().map(|c| c.min(r - 1)).collect();
            let n = caps.len() as u32;
            HypergraphSpec::capped(n, k, r, SVector::new(caps, r).ok()?).ok()
        }),
        (2u32..=4, 1u32..=3, prop::collection::vec(1u32..=3, 1..=5)).prop_filter_map("transversal", |(r, k, sizes)| {
            let n = sizes.iter().sum();
            HypergraphSpec::transversal(n, k, r, Partition::consecutive(&sizes).ok()?).ok()
        }),
        (3u32..=9, 1u32..=3, 2u32..=3, 1u32..=3)
            .prop_filter_map("stable", |(n, k, r, s)| HypergraphSpec::stable(n, k, r, s).ok()),
        (2u32..=8, 1u32..=3, 2u32..=3, 1u32..=5)
            .prop_filter_map("wide", |(n, k, r, t)| HypergraphSpec::wide(n, k, r, t).ok()),
        (2u32..=8, 1u32..=3, 2u32..=3, any::<u8>()).prop_filter_map("avoiding", |(n, k, r, a)| {
            let set: Vec<u32> = (1..=n).filter(|e| a >> (e - 1) & 1 == 1).collect();
            HypergraphSpec::avoiding(n, k, r, &set).ok()
        }),
        (3u32..=6, 2u32..=3, prop::collection::vec(1u64..64, 1..=8)).prop_filter_map("sets", |(n, r, masks)| {
            let mut sets: Vec<KSubset> =
                masks.into_iter().filter_map(|m| KSubset::new(m & ((1 << n) - 1), n).ok()).collect();
            sets.sort_by_key(|s| s.mask());
            sets.dedup();
            HypergraphSpec::set_system(n, 1, r, sets).ok()
        }),
    ]
}

fn vertex_lists(hg: &Hypergraph) -> Vec<Vec<u32>> {
    hg.vertices().iter().map(|v| v.to_vec()).collect()
}

fn chi_of(hg: &Hypergraph, cfg: &SolverConfig) -> u32 {
    match chromatic_scan(hg, 1, cfg) {
        ChiOutcome::Exact(r) => r.chi,
        ChiOutcome::Inconclusive { .. } => panic!("budget exhausted"),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn supports_match_definition(spec in small_spec()) {
        let hg = build_minimal_supports(&spec).unwrap();
        prop_assume!(hg.num_vertices() <= 20);
        let verts = oracle_vertices(&spec);
        let got: BTreeSet<Vec<u32>> = vertex_lists(&hg).into_iter().collect();
        prop_assert_eq!(&got, &verts.iter().cloned().collect::<BTreeSet<_>>());
        let edges = oracle_edges(&spec, &verts);
        let mut built = BTreeSet::new();
        for s in hg.supports() {
            let mut sets: Vec<Vec<u32>> = s.iter().map(|&v| hg.vertices()[v as usize].to_vec()).collect();
            sets.sort();
            built.insert(sets);
        }
        prop_assert_eq!(built, minimal_supports(&verts, &edges));
    }

    #[test]
    fn chi_matches_brute_force(spec in small_spec()) {
        let hg = build_minimal_supports(&spec).unwrap();
        prop_assume!(hg.num_vertices() <= 10);
        let verts = vertex_lists(&hg);
        let edges = oracle_edges(&spec, &verts);
        let expect = brute_chi(verts.len(), &edges);
        for cfg in [SolverConfig::default(), SolverConfig::audit()] {
            let res = chromatic_number_with(&hg, &cfg).unwrap();
            prop_assert_eq!(res.chi, expect);
            prop_assert!(common::is_proper(res.witness.colors(), &edges));
        }
    }

    #[test]
    fn symmetry_breaking_and_order_do_not_change_chi(spec in small_spec()) {
        let hg = build_minimal_supports(&spec).unwrap();
        prop_assume!(hg.num_vertices() <= 10);
        let base = chi_of(&hg, &SolverConfig::audit());
        for order in [VertexOrder::Static, VertexOrder::Dynamic] {
            for symmetry_breaking in [true, false] {
                let cfg = SolverConfig { order, symmetry_breaking, seeding: Seeding::Audit, ..SolverConfig::default() };
                prop_assert_eq!(chi_of(&hg, &cfg), base);
            }
        }
    }

    #[test]
    fn solver_is_deterministic(spec in small_spec()) {
        let hg = build_minimal_supports(&spec).unwrap();
        prop_assume!(hg.num_vertices() <= 40);
        let cfg = SolverConfig::default().with_budget(2_000_000);
        let a = chromatic_number_with(&hg, &cfg);
        prop_assert_eq!(&a, &chromatic_number_with(&hg, &cfg));
        if let Ok(a) = a {
            let par = chromatic_number_with(&hg, &cfg.with_threads(3)).unwrap();
            prop_assert_eq!(par.chi, a.chi);
            prop_assert!(is_proper(&par.witness, &hg).unwrap());
        }
    }

    #[test]
    fn spec_json_roundtrip(spec in small_spec()) {
        prop_assert_eq!(HypergraphSpec::from_json(&spec.to_json()).unwrap(), spec);
    }

    #[test]
    fn coloring_json_roundtrip(colors in prop::collection::vec(1u32..6, 0..20)) {
        let c = Coloring::from_colors(colors).unwrap();
        prop_assert_eq!(Coloring::from_json(&c.to_json()).unwrap(), c);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn subfamilies_need_no_more_colors(
        n in 4u32..=9, k in 1u32..=3, r in 2u32..=3, param in 1u32..=4, which in 0usize..4
    ) {
        prop_assume!(n >= r * k && n <= 9);
        let sub = match which {
            0 => HypergraphSpec::stable(n, k, r, param),
            1 => HypergraphSpec::wide(n, k, r, param),
            2 => HypergraphSpec::avoiding(n, k, r, &(1..=param.min(n)).collect::<Vec<_>>()),
            _ => Partition::consecutive_max_blocks(n, param).and_then(|p| HypergraphSpec::transversal(n, k, r, p)),
        };
        let Ok(sub) = sub else { return Ok(()) };
        let full = build_minimal_supports(&HypergraphSpec::kneser(n, k, r).unwrap()).unwrap();
        let sub = build_minimal_supports(&sub).unwrap();
        let cfg = SolverConfig::default();
        prop_assert!(chi_of(&sub, &cfg) <= chi_of(&full, &cfg));
    }

    #[test]
    fn pullback_of_proper_coloring_is_proper(
        caps in prop::collection::vec(1u32..=2, 2..=4), k in 1u32..=2, seed in any::<u64>()
    ) {
        let r = 3;
        let n = caps.len() as u32;
        prop_assume!(k <= n);
        let sv = SVector::new(caps, r).unwrap();
        let spec = HypergraphSpec::capped(n, k, r, sv.clone()).unwrap();
        let hg = build_minimal_supports(&spec).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = 3;
        let colors: Vec<u32> = (0..hg.num_vertices()).map(|_| rand::Rng::gen_range(&mut rng, 1..=m)).collect();
        let c = Coloring::new(colors, m).unwrap();
        let pb = pullback_coloring(&c, &spec, &ProjectionMap::from_svector(&sv).unwrap()).unwrap();
        if is_proper(&c, &hg).unwrap() {
            prop_assert!(is_proper(&pb.coloring, &pb.target).unwrap());
        }
    }

    #[test]
    fn sweep_rows_recompute_from_serialized_spec(spec in small_spec()) {
        let cfg = SweepConfig { audit_budget: 200_000, node_budget: 200_000, ..SweepConfig::default() };
        let row = evaluate("p", &spec, &cfg);
        let again = evaluate("p", &HypergraphSpec::from_json(&spec.to_json()).unwrap(), &cfg);
        prop_assert_eq!(&row, &again);
        let (mut a, mut b) = (Vec::new(), Vec::new());
        write_csv(std::slice::from_ref(&row), &mut a).unwrap();
        write_csv(&[again], &mut b).unwrap();
        prop_assert_eq!(a, b);
    }
}

fn q(x: i64) -> BigRational {
    BigRational::from_integer(x.into())
}

fn random_config(d: usize, len: usize, seed: u64) -> PointConfig {
    PointConfig::random(d, len, &mut ChaCha8Rng::seed_from_u64(seed))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn hull_intersection_is_invariant(
        d in 1usize..=2, r in 2usize..=3, seed in any::<u64>(), pick in any::<prop::sample::Index>(),
        perm_seed in any::<u64>(), m in prop::collection::vec(-3i64..=3, 4), t in prop::collection::vec(-5i64..=5, 2)
    ) {
        let len = n_hat(r, d);
        let config = random_config(d, len, seed);
        let parts = set_partitions(len, r);
        let p = &parts[pick.index(parts.len())];
        let base = hulls_intersect(&config, p).unwrap();

        // Point j of the permuted sequence is point perm[j] of the original.
        let mut perm: Vec<usize> = (1..=len).collect();
        rand::seq::SliceRandom::shuffle(perm.as_mut_slice(), &mut ChaCha8Rng::seed_from_u64(perm_seed));
        let mut inv = vec![0; len];
        for (j, &i) in perm.iter().enumerate() {
            inv[i - 1] = j + 1;
        }
        prop_assert_eq!(hulls_intersect(&config.subsequence(&perm), &p.relabel(&inv)).unwrap(), base);

        let mat: Vec<Vec<BigRational>> = (0..d).map(|i| (0..d).map(|j| q(m[i * 2 + j])).collect()).collect();
        let det = if d == 1 { m[0] } else { m[0] * m[3] - m[1] * m[2] };
        prop_assume!(det != 0);
        let shift: Vec<BigRational> = (0..d).map(|i| q(t[i])).collect();
        prop_assert_eq!(hulls_intersect(&config.affine_image(&mat, &shift).unwrap(), p).unwrap(), base);
    }

    #[test]
    fn radon_kernel_signs_agree_with_lp(d in 1usize..=3, seed in any::<u64>()) {
        let config = random_config(d, d + 2, seed);
        prop_assume!(config.is_in_general_position());
        let (pos, neg, zero) = radon_partition_by_kernel(&config).unwrap();
        prop_assert!(zero.is_empty());
        let radon = TverbergPartition::new(vec![pos, neg]).unwrap();
        prop_assert!(hulls_intersect(&config, &radon).unwrap());
        for p in set_partitions(d + 2, 2) {
            prop_assert_eq!(Some(hulls_intersect(&config, &p).unwrap()), radon_predicts(&config, &p));
        }
    }
}

#[test]
fn b_of_r_matches_trial_division() {
    for r in 2..=10_000u64 {
        assert_eq!(b_of_r(r).unwrap(), b_oracle(r), "r={r}");
    }
}

proptest! {
    #[test]
    fn b_of_r_is_multiplicative(a in 2u64..=100, b in 2u64..=100) {
        prop_assume!(num_integer::gcd(a, b) == 1);
        prop_assert_eq!(b_of_r(a * b).unwrap(), b_of_r(a).unwrap() * b_of_r(b).unwrap());
    }
}

#[test]
fn unit_caps_reduce_to_kneser_bound() {
    for r in 2..=6 {
        for k in 1..=4 {
            for n in 1..=20 {
                let sv = SVector::uniform(n, 1, r).unwrap();
                let afl = afl_lower(n, k, r);
                assert_eq!(gek_lower(k, r, &sv), afl);
                assert_eq!(afl, ceil_div(n as i64 - (r * (k - 1)) as i64, r as i64 - 1));
            }
        }
    }
}

#[test]
fn cap_bound_below_lz_formula() {
    for r in 2..=4u32 {
        for s in 2..=r {
            if (r - 1) % (s - 1) != 0 {
                continue;
            }
            for k in 1..=3u32 {
                for n in (s * k)..=9 {
                    let sv = SVector::uniform(n, s - 1, r).unwrap();
                    let (lo, hi) = (gek_lower(k, r, &sv), lz_upper(n, k, r, s).unwrap());
                    assert!(lo <= hi, "n={n} k={k} r={r} s={s}: {lo} > {hi}");
                }
            }
        }
    }
}

/// With `(s-1)` not dividing `(r-1)` the upper formula, read with the inner
/// ceiling, drops below the proven lower bound. These are all such points of
/// the grid; the exact values confirm the lower bound.
#[test]
fn lz_formula_undershoots_when_s_minus_1_does_not_divide_r_minus_1() {
    let mut bad = Vec::new();
    for r in 2..=4u32 {
        for s in 2..=r {
            for k in 1..=3u32 {
                for n in (s * k)..=9 {
                    let sv = SVector::uniform(n, s - 1, r).unwrap();
                    let (lo, hi) = (gek_lower(k, r, &sv), lz_upper(n, k, r, s).unwrap());
                    if lo > hi {
                        bad.push((n, k, r, s, lo, hi));
                    }
                }
            }
        }
    }
    assert_eq!(
        bad,
        [
            (5, 1, 4, 3, 4, 3),
            (7, 1, 4, 3, 5, 4),
            (8, 1, 4, 3, 6, 5),
            (9, 1, 4, 3, 6, 5),
            (7, 2, 4, 3, 4, 3),
            (9, 2, 4, 3, 5, 4),
            (9, 3, 4, 3, 4, 3),
        ]
    );
    // k = 1: any two singletons form a hyperedge, so chi = n.
    for (n, k, chi) in [(5, 1, 5), (7, 1, 7), (7, 2, 5)] {
        let hg = build_minimal_supports(&HypergraphSpec::capped_uniform(n, k, 4, 3).unwrap()).unwrap();
        assert_eq!(chi_of(&hg, &SolverConfig::audit()), chi, "n={n} k={k}");
    }
}

#[test]
fn greedy_coloring_is_optimal_size_and_proper() {
    for r in 2..=4u32 {
        for k in 1..=4u32 {
            for n in r * k..=12 {
                if r == 4 && n > 10 {
                    continue;
                }
                let c = greedy_kneser_coloring(n, k, r).unwrap();
                assert_eq!(c.num_colors_used() as i64, afl_lower(n, k, r), "n={n} k={k} r={r}");
                let spec = HypergraphSpec::kneser(n, k, r).unwrap();
                if n <= 8 {
                    let verts = vertex_lists(&build_minimal_supports(&spec).unwrap());
                    assert!(common::is_proper(c.colors(), &oracle_edges(&spec, &verts)), "n={n} k={k} r={r}");
                } else {
                    assert!(is_proper(&c, &build_minimal_supports(&spec).unwrap()).unwrap());
                }
            }
        }
    }
}
