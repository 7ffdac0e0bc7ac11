//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so the lines always reach the output.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{brute_chi, ceil_div, oracle_edges, oracle_vertices};
use kneser_core::bounds::{afl_lower, b_of_r, gek_lower, greedy_kneser_coloring};
use kneser_core::hypergraph::{build_s_wise, same_support_sets};
use kneser_core::reductions::{
    prime_induction_refute, pullback_coloring, validate_induction_witness, InductionOutcome, InductionParams,
    ProjectionMap,
};
use kneser_core::solver::{chromatic_scan, ChiOutcome};
use kneser_core::sweeps::{
    full_default_sweep, sweep_cap_vector, sweep_transversal_prime, ClaimKind, SweepConfig, SweepGrid, SweepRow,
    SweepSummary, Verdict,
};
use kneser_core::tverberg::{
    check_bln_property, colorful_partitions, colorful_partitions_by_windows, has_tverberg_partition, OccurrenceOptions,
    PointConfig, TverbergPartition,
};
use kneser_core::{build_minimal_supports, is_proper, Coloring, Hypergraph, HypergraphSpec, Partition, SolverConfig};

type Outcome = Result<String, String>;

fn check(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(start: Instant, limit: Duration) -> Result<Duration, String> {
    let t = start.elapsed();
    check(t < limit, format!("took {t:.1?}, limit {limit:?}"))?;
    Ok(t)
}

/// Chromatic number with every smaller palette refuted by search.
fn audited_chi(hg: &Hypergraph) -> Result<u32, String> {
    match chromatic_scan(hg, 1, &SolverConfig::audit()) {
        ChiOutcome::Exact(r) => Ok(r.chi),
        ChiOutcome::Inconclusive { refuted_below, .. } => Err(format!("budget exhausted at m={refuted_below}")),
    }
}

fn kneser_baseline() -> Outcome {
    let start = Instant::now();
    for n in 5..=12 {
        let hg = build_minimal_supports(&HypergraphSpec::kneser(n, 2, 2).unwrap()).map_err(|e| e.to_string())?;
        let chi = audited_chi(&hg)?;
        check(chi == n - 2, format!("chi(KG^2({n},2)) = {chi}, expected {}", n - 2))?;
    }
    let t = within(start, Duration::from_secs(60))?;
    Ok(format!("chi(KG^2(n,2)) = n-2 for n=5..12, search-certified, {t:.1?}"))
}

fn afl_baseline() -> Outcome {
    let start = Instant::now();
    for n in 6..=10u32 {
        let hg = build_minimal_supports(&HypergraphSpec::kneser(n, 2, 3).unwrap()).map_err(|e| e.to_string())?;
        let chi = audited_chi(&hg)?;
        let expect = (n - 3).div_ceil(2);
        check(chi == expect, format!("chi(KG^3({n},2)) = {chi}, expected {expect}"))?;
    }
    let t = within(start, Duration::from_secs(300))?;
    Ok(format!("chi(KG^3(n,2)) = ceil((n-3)/2) for n=6..10, {t:.1?}"))
}

fn no_violations(rows: &[SweepRow]) -> Result<SweepSummary, String> {
    let s = SweepSummary::of(rows);
    if let Some(bad) = rows.iter().find(|r| r.verdict.is_failure() || r.verdict == Verdict::Inconclusive) {
        return Err(format!("{} on {} (chi={:?})", bad.verdict, bad.spec.label(), bad.chi));
    }
    Ok(s)
}

fn transversal_prime_sweep() -> Outcome {
    let grid = SweepGrid { r_values: vec![2, 3], k_values: vec![1, 2], n_max_r2: 9, n_max: 9, all_compositions: true };
    let rows = sweep_transversal_prime(&grid, &SweepConfig::default());
    no_violations(&rows)?;
    for row in &rows {
        let expect = ceil_div(row.spec.n as i64 - (row.spec.r * (row.spec.k - 1)) as i64, row.spec.r as i64 - 1);
        check(row.chi == Some(expect as u32), format!("{}: chi={:?}, expected {expect}", row.spec.label(), row.chi))?;
    }
    Ok(format!("{} partitions, all equal to the formula, 0 VIOLATION", rows.len()))
}

fn cap_vector_sweep() -> Outcome {
    let grid =
        SweepGrid { r_values: vec![2, 3, 4], k_values: vec![1, 2], n_max_r2: 9, n_max: 9, all_compositions: false };
    let rows = sweep_cap_vector(&grid, &SweepConfig::default());
    let s = no_violations(&rows)?;
    for row in &rows {
        let sv = row.spec.svector.as_ref().unwrap();
        let (chi, lo) = (row.chi.unwrap() as i64, gek_lower(row.spec.k, row.spec.r, sv));
        check(chi >= lo, format!("{}: chi={chi} < {lo}", row.spec.label()))?;
        check((sv.max_cap() as u64) < b_of_r(row.spec.r as u64).unwrap(), "s beyond b(r)")?;
    }
    let flagged: Vec<String> = rows
        .iter()
        .filter(|r| r.lz_ok == Some(false))
        .map(|r| format!("{}:chi={}>lz={}", r.spec.label(), r.chi.unwrap(), r.lz_upper.unwrap()))
        .collect();
    Ok(format!(
        "{} rows, chi >= lower bound on all, 0 VIOLATION; upper formula flags: {} [{}]",
        rows.len(),
        s.lz_flags,
        flagged.join(" ")
    ))
}

fn definitional_equivalence() -> Outcome {
    let mut cases = 0;
    for n in 1..=6u32 {
        for k in 1..=2u32.min(n) {
            for r in 2..=4u32 {
                for s in 2..=r {
                    let spec = HypergraphSpec::capped_uniform(n, k, r, s).unwrap();
                    let caps = build_minimal_supports(&spec).map_err(|e| e.to_string())?;
                    let swise = build_s_wise(n, k, r, s, u64::MAX).map_err(|e| e.to_string())?;
                    check(same_support_sets(&caps, &swise), format!("n={n} k={k} r={r} s={s}"))?;
                    cases += 1;
                }
            }
        }
    }
    Ok(format!("{cases} parameter points, identical minimal supports"))
}

/// Every coloring of `hg` with colors `1..=m`.
fn all_colorings(len: usize, m: u32) -> impl Iterator<Item = Coloring> {
    (0..(m as u64).pow(len as u32)).map(move |mut code| {
        let colors = (0..len)
            .map(|_| {
                let c = (code % m as u64) as u32 + 1;
                code /= m as u64;
                c
            })
            .collect();
        Coloring::new(colors, m).unwrap()
    })
}

fn pullback_property() -> Outcome {
    let mut summary = Vec::new();
    for (spec, pmap) in [
        (
            HypergraphSpec::capped(3, 2, 3, kneser_core::SVector::new(vec![2, 2, 2], 3).unwrap()).unwrap(),
            ProjectionMap::new(Partition::consecutive(&[2, 2, 2]).unwrap()),
        ),
        (
            HypergraphSpec::capped(4, 2, 2, kneser_core::SVector::new(vec![1, 1, 1, 1], 2).unwrap()).unwrap(),
            ProjectionMap::new(Partition::singletons(4).unwrap()),
        ),
    ] {
        let hg = build_minimal_supports(&spec).unwrap();
        let mut proper = 0;
        for m in 1..=3 {
            for c in all_colorings(hg.num_vertices(), m) {
                if !is_proper(&c, &hg).unwrap() {
                    continue;
                }
                proper += 1;
                let pb = pullback_coloring(&c, &spec, &pmap).map_err(|e| e.to_string())?;
                check(is_proper(&pb.coloring, &pb.target).unwrap(), format!("{}: {:?}", spec.label(), c.colors()))?;
            }
        }
        check(proper > 0, format!("{}: no proper coloring with <= 3 colors", spec.label()))?;
        summary.push(format!("{}: {proper} proper colorings", spec.label()));
    }
    Ok(format!("all pullbacks proper ({})", summary.join("; ")))
}

fn prime_induction_extraction() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut total = 0;
    for n in 8..=12u32 {
        let bound = n.div_ceil(3);
        let p = Partition::singletons(n).unwrap();
        let spec = HypergraphSpec::transversal(n, 1, 4, p.clone()).unwrap();
        let nv = build_minimal_supports(&spec).unwrap().num_vertices();
        for _ in 0..200 {
            let l = rng.gen_range(1..bound);
            let c = Coloring::new((0..nv).map(|_| rng.gen_range(1..=l)).collect(), l).unwrap();
            let params = InductionParams { n, k: 1, r1: 2, r2: 2, b1: 2, b2: 2, budget: 10_000_000 };
            match prime_induction_refute(&c, &p, params).map_err(|e| e.to_string())? {
                InductionOutcome::Witness(w) => {
                    let distinct: BTreeSet<&Vec<u32>> = w.sets.iter().collect();
                    check(w.sets.len() == 4 && distinct.len() == 4, format!("n={n}: {:?}", w.sets))?;
                    check(w.sets.iter().all(|s| s.len() == 1), format!("n={n}: not singletons"))?;
                    validate_induction_witness(&w, &c, n, 1, &p).map_err(|e| format!("n={n}: {e}"))?;
                }
                InductionOutcome::ColoringIsProper => return Err(format!("n={n} L={l}: no monochromatic hyperedge")),
            }
            total += 1;
        }
    }
    Ok(format!("{total}/{total} colorings yield 4 disjoint monochromatic singletons with a valid trace"))
}

fn greedy_optimality() -> Outcome {
    let mut cases = 0;
    for r in 2..=3u32 {
        for k in 1..=12 / r {
            for n in r * k..=12 {
                let c = greedy_kneser_coloring(n, k, r).map_err(|e| e.to_string())?;
                let spec = HypergraphSpec::kneser(n, k, r).unwrap();
                let hg = build_minimal_supports(&spec).unwrap();
                check(is_proper(&c, &hg).unwrap(), format!("KG^{r}({n},{k}): improper"))?;
                let used = c.num_colors_used() as i64;
                check(used == afl_lower(n, k, r), format!("KG^{r}({n},{k}): {used} colors"))?;
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} instances proper with exactly the lower-bound count"))
}

fn random_rational(rng: &mut ChaCha8Rng) -> BigRational {
    BigRational::new(BigInt::from(rng.gen_range(-1000..=1000)), BigInt::from(rng.gen_range(1..=50)))
}

fn random_rational_config(rng: &mut ChaCha8Rng, d: usize, len: usize) -> PointConfig {
    PointConfig::new(d, (0..len).map(|_| (0..d).map(|_| random_rational(rng)).collect()).collect()).unwrap()
}

fn tverberg_sweep() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let radon = (0..100).filter(|_| has_tverberg_partition(&random_rational_config(&mut rng, 2, 4), 2)).count();
    let mut generic = 0;
    let mut triples = 0;
    while generic < 100 {
        let c = random_rational_config(&mut rng, 2, 3);
        if c.is_in_general_position() {
            generic += 1;
            triples += has_tverberg_partition(&c, 2) as usize;
        }
    }
    let line = (0..100).filter(|_| has_tverberg_partition(&random_rational_config(&mut rng, 1, 5), 3)).count();
    check(radon == 100 && triples == 0 && line == 100, format!("{radon}/100, {triples}/100, {line}/100"))?;
    let t = within(start, Duration::from_secs(120))?;
    Ok(format!("Radon 4-point 100/100, generic 3-point 0/100, 3-Tverberg on a line 100/100, {t:.1?}"))
}

fn colorful_checker() -> Outcome {
    let hand: Vec<TverbergPartition> = [[[1, 4], [2, 5]], [[1, 5], [2, 4]]]
        .iter()
        .map(|[a, b]| TverbergPartition::new(vec![a.to_vec(), b.to_vec(), vec![3]]).unwrap())
        .collect();
    let hand: BTreeSet<_> = hand.into_iter().collect();
    let filtered: BTreeSet<_> = colorful_partitions(3, 1).into_iter().collect();
    let windows: BTreeSet<_> = colorful_partitions_by_windows(3, 1).into_iter().collect();
    check(filtered == hand && windows == hand, format!("{filtered:?} / {windows:?}"))?;
    let line = PointConfig::from_integers(1, &[vec![0], vec![1], vec![2]]).unwrap();
    let report = check_bln_property(&line, 2, OccurrenceOptions::default()).map_err(|e| e.to_string())?;
    check(report.verdict == "exactly_colorful", format!("verdict {}", report.verdict))?;
    Ok(format!("colorful partitions of [5] for (3,1): {hand:?}; points 0<1<2: exactly_colorful"))
}

fn schrijver_instance() -> Outcome {
    for n in 5..=10 {
        let spec = HypergraphSpec::stable(n, 2, 2, 2).unwrap();
        let hg = build_minimal_supports(&spec).unwrap();
        let chi = audited_chi(&hg)?;
        check(chi == n - 2, format!("n={n}: chi={chi}"))?;
        if hg.num_vertices() <= 10 {
            let verts = oracle_vertices(&spec);
            check(brute_chi(verts.len(), &oracle_edges(&spec, &verts)) == chi, format!("n={n}: brute force differs"))?;
        }
    }
    Ok("chi(stable KG^2(n,2)) = n-2 for n=5..10, search-certified".into())
}

fn master_regression() -> Outcome {
    let start = Instant::now();
    let rows = full_default_sweep(&SweepConfig { threads: 1, ..SweepConfig::default() });
    let t = within(start, Duration::from_secs(30 * 60))?;
    let s = SweepSummary::of(&rows);
    if let Some(bad) = rows.iter().find(|r| r.verdict == Verdict::Violation) {
        return Err(format!("VIOLATION on {} (chi={:?})", bad.spec.label(), bad.chi));
    }
    let conj: Vec<&SweepRow> =
        rows.iter().filter(|r| r.claim.as_ref().is_some_and(|c| c.kind == ClaimKind::ConjecturedEquality)).collect();
    check(!conj.is_empty(), "no conjecture rows")?;
    if let Some(bad) = conj.iter().find(|r| !matches!(r.verdict, Verdict::EqualityConfirmed | Verdict::WithinBounds)) {
        return Err(format!("conjecture row {} is {}", bad.spec.label(), bad.verdict));
    }
    Ok(format!("{s}; {} conjecture rows confirmed; {t:.1?} single-threaded", conj.len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("Kneser baseline", kneser_baseline),
        ("AFL baseline", afl_baseline),
        ("transversal sweep, prime r", transversal_prime_sweep),
        ("cap-vector sweep", cap_vector_sweep),
        ("definitional equivalence", definitional_equivalence),
        ("pullback property", pullback_property),
        ("prime-induction extraction", prime_induction_extraction),
        ("greedy optimality", greedy_optimality),
        ("Tverberg sweep", tverberg_sweep),
        ("colorful checker", colorful_checker),
        ("Schrijver instance", schrijver_instance),
        ("master regression", master_regression),
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        if !filter.is_empty() && !filter.iter().any(|f| name.contains(f.as_str())) {
            continue;
        }
        match run() {
            Ok(detail) => println!("acceptance {:>2} PASS {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("acceptance {:>2} FAIL {name}: {why}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
