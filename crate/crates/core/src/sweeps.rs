//! Parameter sweeps comparing exact chromatic numbers with the known and
//! conjectured formulas.
//!
//! Every row is evaluated from its spec alone: [`claim_for`] decides which
//! statement applies, and [`evaluate`] solves and grades. Each row first runs
//! an unseeded search under `audit_budget`; if that runs out and a proven
//! lower bound applies, it reruns from that bound and records the row as
//! seeded.

use std::fmt;
use std::io::Write;

use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::{
    afl_lower, avoiding_conjectured_value, avoiding_lower, b_of_r, factorize, gek_lower, lz_upper, max_wide_t,
    proven_lower_bound,
};
use crate::error::{Error, Result};
use crate::hypergraph::{build_minimal_supports_with, BuildOptions, Hypergraph, DEFAULT_SUPPORT_BUDGET};
use crate::sets::{elements_of, ground_mask, Partition, SVector};
use crate::solver::{chromatic_scan, is_proper, ChiOutcome, ChiResult, Coloring, SolverConfig, DEFAULT_NODE_BUDGET};
use crate::spec::{Family, HypergraphSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Verdict {
    #[serde(rename = "equality_confirmed")]
    EqualityConfirmed,
    #[serde(rename = "within_bounds")]
    WithinBounds,
    #[serde(rename = "VIOLATION")]
    Violation,
    #[serde(rename = "conjecture_refuted")]
    ConjectureRefuted,
    #[serde(rename = "inconclusive")]
    Inconclusive,
    #[serde(rename = "skipped")]
    Skipped,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::EqualityConfirmed => "equality_confirmed",
            Verdict::WithinBounds => "within_bounds",
            Verdict::Violation => "VIOLATION",
            Verdict::ConjectureRefuted => "conjecture_refuted",
            Verdict::Inconclusive => "inconclusive",
            Verdict::Skipped => "skipped",
        }
    }

    /// Rows that make a sweep exit nonzero.
    pub fn is_failure(self) -> bool {
        matches!(self, Verdict::Violation | Verdict::ConjectureRefuted)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClaimKind {
    /// Proven: `chi == value`.
    Equality,
    /// Proven: `chi >= value`.
    LowerBound,
    /// Conjectured: `chi == value`, with `proven_range` established.
    ConjecturedEquality,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Claim {
    pub kind: ClaimKind,
    pub value: i64,
    pub statement: &'static str,
    /// Proven `[lo, hi]` range for conjectured values; either end optional.
    pub proven_range: (Option<i64>, Option<i64>),
}

impl Claim {
    fn proven(kind: ClaimKind, value: i64, statement: &'static str) -> Self {
        Claim { kind, value, statement, proven_range: (None, None) }
    }

    fn conjecture(value: i64, statement: &'static str, lo: Option<i64>, hi: Option<i64>) -> Self {
        Claim { kind: ClaimKind::ConjecturedEquality, value, statement, proven_range: (lo, hi) }
    }

    pub fn grade(&self, chi: i64) -> Verdict {
        match self.kind {
            ClaimKind::Equality if chi == self.value => Verdict::EqualityConfirmed,
            ClaimKind::Equality => Verdict::Violation,
            ClaimKind::LowerBound if chi < self.value => Verdict::Violation,
            ClaimKind::LowerBound if chi == self.value => Verdict::EqualityConfirmed,
            ClaimKind::LowerBound => Verdict::WithinBounds,
            ClaimKind::ConjecturedEquality => {
                let (lo, hi) = self.proven_range;
                if lo.is_some_and(|l| chi < l) || hi.is_some_and(|h| chi > h) {
                    Verdict::Violation
                } else if chi == self.value {
                    Verdict::EqualityConfirmed
                } else {
                    Verdict::ConjectureRefuted
                }
            }
        }
    }
}

fn is_pow2(r: u32) -> bool {
    r.is_power_of_two()
}

fn is_prime(r: u32) -> bool {
    factorize(r as u64).map(|f| f.is_prime()).unwrap_or(false)
}

/// The statement this instance is tested against, if any.
pub fn claim_for(spec: &HypergraphSpec) -> Option<Claim> {
    use ClaimKind::*;
    let (n, k, r) = (spec.n, spec.k, spec.r);
    let afl = afl_lower(n, k, r);
    let b = b_of_r(r as u64).ok()?;
    match spec.family {
        Family::Kneser if n >= r * k => Some(Claim::proven(Equality, afl, "kneser_afl")),
        Family::Transversal if n >= r * k => {
            let max_part = spec.partition.as_ref()?.max_part_size();
            if is_prime(r) && max_part < r {
                Some(Claim::proven(Equality, afl, "transversal_prime"))
            } else if max_part as u64 <= b {
                Some(Claim::proven(Equality, afl, "transversal_br"))
            } else if max_part <= r {
                Some(Claim::conjecture(afl, "transversal_parts_at_most_r", None, Some(afl)))
            } else {
                None
            }
        }
        Family::Capped => {
            let sv = spec.svector.as_ref()?;
            ((sv.max_cap() as u64) < b).then(|| Claim::proven(LowerBound, gek_lower(k, r, sv), "cap_vector_gek"))
        }
        Family::Stable if n >= r * k && spec.stable_s? == r => {
            if is_pow2(r) {
                Some(Claim::proven(Equality, afl, "stable_power_of_two"))
            } else {
                Some(Claim::conjecture(afl, "stable_r", None, Some(afl)))
            }
        }
        Family::Wide => {
            let t = spec.wide_t?;
            match (&spec.svector, &spec.partition) {
                (None, p) => {
                    let max_part = p.as_ref().map(|p| p.max_part_size()).unwrap_or(1);
                    let t_max = r as i64 * (k as i64 - 3) + 2;
                    if n >= r * k && is_prime(r) && max_part < r && t as i64 <= t_max {
                        Some(Claim::proven(Equality, afl, "wide_prime"))
                    } else if n >= r * k && p.is_none() && t == 1 && k >= 2 {
                        Some(Claim::proven(Equality, afl, "wide_all"))
                    } else {
                        None
                    }
                }
                (Some(sv), None) => {
                    let tm = max_wide_t(sv, r, k);
                    (is_prime(r) && tm >= 1 && t <= tm)
                        .then(|| Claim::proven(LowerBound, gek_lower(k, r, sv), "wide_cap_vector_gek"))
                }
                _ => None,
            }
        }
        Family::AvoidA if n >= 2 * r * k => {
            let a = spec.avoid_a?.count_ones();
            let conj = avoiding_conjectured_value(n, k, r, a);
            if a <= 2 * (k - 1) || a + 1 >= r * k || a as u64 <= b * (k as u64 - 1) {
                Some(Claim::proven(Equality, conj, "avoiding_known"))
            } else {
                Some(Claim::conjecture(conj, "avoiding", Some(avoiding_lower(n, k, r, a)), Some(conj)))
            }
        }
        _ => None,
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SweepConfig {
    /// Node budget for the unseeded search of each row.
    pub audit_budget: u64,
    /// Node budget for the seeded fallback.
    pub node_budget: u64,
    pub support_budget: u64,
    /// Rows evaluated concurrently; each row's search is single-threaded.
    pub threads: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            audit_budget: 5_000_000,
            node_budget: DEFAULT_NODE_BUDGET,
            support_budget: DEFAULT_SUPPORT_BUDGET,
            threads: 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub sweep: String,
    pub spec: HypergraphSpec,
    pub vertices: usize,
    pub supports: usize,
    pub chi: Option<u32>,
    pub claim: Option<Claim>,
    /// Every palette below this size was excluded by exhaustive search.
    pub search_lower: u32,
    /// `search`, `seeded:<bound>`, or empty when unsolved.
    pub certification: String,
    pub nodes: u64,
    pub lz_upper: Option<i64>,
    /// `chi <= lz_upper`, when both are known. A `false` here questions the
    /// reading of that formula, not a proven statement.
    pub lz_ok: Option<bool>,
    pub verdict: Verdict,
    pub note: String,
    #[serde(skip)]
    pub witness: Option<Coloring>,
}

impl SweepRow {
    fn skipped(sweep: &str, spec: HypergraphSpec, note: &str) -> Self {
        SweepRow {
            sweep: sweep.into(),
            spec,
            vertices: 0,
            supports: 0,
            chi: None,
            claim: None,
            search_lower: 0,
            certification: String::new(),
            nodes: 0,
            lz_upper: None,
            lz_ok: None,
            verdict: Verdict::Skipped,
            note: note.into(),
            witness: None,
        }
    }
}

fn lz_for(spec: &HypergraphSpec) -> Option<i64> {
    let c = spec.svector.as_ref()?.uniform_cap()?;
    lz_upper(spec.n, spec.k, spec.r, c + 1).ok()
}

/// Solves one instance and grades it against [`claim_for`].
pub fn evaluate(sweep: &str, spec: &HypergraphSpec, cfg: &SweepConfig) -> SweepRow {
    let mut row = SweepRow::skipped(sweep, spec.clone(), "");
    row.claim = claim_for(spec);
    row.lz_upper = if spec.family == Family::Capped { lz_for(spec) } else { None };
    let hg = match build_minimal_supports_with(spec, BuildOptions { max_candidates: cfg.support_budget }) {
        Ok(hg) => hg,
        Err(e) => {
            row.verdict = if e.is_budget() { Verdict::Inconclusive } else { Verdict::Skipped };
            row.note = e.to_string();
            return row;
        }
    };
    row.vertices = hg.num_vertices();
    row.supports = hg.num_supports();

    let audit = SolverConfig::audit().with_budget(cfg.audit_budget);
    let result = match chromatic_scan(&hg, 1, &audit) {
        ChiOutcome::Exact(r) => {
            row.search_lower = r.chi;
            row.certification = "search".into();
            Some(r)
        }
        ChiOutcome::Inconclusive { refuted_below, nodes, .. } => {
            row.search_lower = refuted_below;
            row.nodes = nodes;
            // An explicit coloring at the refuted boundary settles the row.
            let cover = cover_coloring(&hg, spec).filter(|c| c.m() == refuted_below);
            if let Some(c) = cover {
                row.certification = "search+cover".into();
                Some(ChiResult { chi: c.m(), witness: c, nodes: 0, seeded_lower_bound: 1, seed_source: None })
            } else {
                match proven_lower_bound(spec) {
                    Some(seed) if seed.value >= refuted_below as i64 => {
                        let seeded = SolverConfig::default().with_budget(cfg.node_budget);
                        match chromatic_scan(&hg, seed.value as u32, &seeded) {
                            ChiOutcome::Exact(r) => {
                                // A witness at the refuted boundary is certified by search alone.
                                row.certification = if r.chi == refuted_below {
                                    "search".into()
                                } else {
                                    format!("seeded:{}", seed.source)
                                };
                                Some(r)
                            }
                            ChiOutcome::Inconclusive { nodes, .. } => {
                                row.nodes += nodes;
                                None
                            }
                        }
                    }
                    _ => None,
                }
            }
        }
    };
    let Some(res) = result else {
        row.verdict = Verdict::Inconclusive;
        row.note = "node budget exhausted".into();
        return row;
    };
    row.nodes += res.nodes;
    row.chi = Some(res.chi);
    row.lz_ok = row.lz_upper.map(|lz| res.chi as i64 <= lz);
    row.witness = Some(res.witness);
    row.verdict = match &row.claim {
        Some(c) => c.grade(res.chi as i64),
        None => {
            row.note = "no applicable statement".into();
            Verdict::Skipped
        }
    };
    row
}

/// Colors each vertex by the block of `r - 1` consecutive elements of `cover`
/// holding its smallest element in `cover`, where `cover` is the complement
/// of the avoided set (or all of `[n]`). `None` unless that is proper.
pub fn cover_coloring(hg: &Hypergraph, spec: &HypergraphSpec) -> Option<Coloring> {
    let cover = ground_mask(spec.n) & !spec.avoid_a.unwrap_or(0);
    let rank: Vec<u32> = elements_of(cover).collect();
    let block = spec.r.saturating_sub(1).max(1);
    let colors = hg
        .vertices()
        .iter()
        .map(|v| {
            let first = v.elements().find(|e| cover >> (e - 1) & 1 == 1)?;
            Some(rank.iter().position(|&e| e == first)? as u32 / block + 1)
        })
        .collect::<Option<Vec<u32>>>()?;
    let c = Coloring::from_colors(colors).ok()?;
    // Renumber so the palette has no gaps.
    let mut used: Vec<u32> = c.colors().to_vec();
    used.sort_unstable();
    used.dedup();
    let c = Coloring::new(
        c.colors().iter().map(|x| used.binary_search(x).unwrap() as u32 + 1).collect(),
        used.len() as u32,
    )
    .ok()?;
    is_proper(&c, hg).ok()?.then_some(c)
}

/// Parameter ranges for the sweeps.
#[derive(Clone, Debug)]
pub struct SweepGrid {
    pub r_values: Vec<u32>,
    pub k_values: Vec<u32>,
    /// Largest `n` for `r = 2`.
    pub n_max_r2: u32,
    /// Largest `n` for `r >= 3`.
    pub n_max: u32,
    /// Use every composition of `n` into consecutive blocks of size at most
    /// `r - 1` instead of only the maximal blocks.
    pub all_compositions: bool,
}

impl Default for SweepGrid {
    fn default() -> Self {
        SweepGrid { r_values: vec![2, 3, 4], k_values: vec![1, 2, 3], n_max_r2: 12, n_max: 10, all_compositions: false }
    }
}

impl SweepGrid {
    pub fn n_max_for(&self, r: u32) -> u32 {
        if r == 2 {
            self.n_max_r2
        } else {
            self.n_max
        }
    }
}

/// Compositions of `n` into parts of size at most `max`, in lex order.
pub fn compositions(n: u32, max: u32) -> Vec<Vec<u32>> {
    fn go(left: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for p in 1..=max.min(left) {
            cur.push(p);
            go(left - p, max, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, max, &mut Vec::new(), &mut out);
    out
}

fn run_rows(sweep: &str, specs: Vec<Result<HypergraphSpec>>, cfg: &SweepConfig) -> Vec<SweepRow> {
    let job = |s: &Result<HypergraphSpec>| match s {
        Ok(spec) => evaluate(sweep, spec, cfg),
        Err(e) => SweepRow::skipped(sweep, HypergraphSpec::kneser(1, 1, 2).unwrap(), &e.to_string()),
    };
    if cfg.threads <= 1 {
        return specs.iter().map(job).collect();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(cfg.threads).build() {
        Ok(pool) => pool.install(|| specs.par_iter().map(job).collect()),
        Err(_) => specs.iter().map(job).collect(),
    }
}

/// `KG^r(n,k;P)` for prime `r` and consecutive blocks of size at most `r-1`.
pub fn sweep_transversal_prime(grid: &SweepGrid, cfg: &SweepConfig) -> Vec<SweepRow> {
    let mut specs = Vec::new();
    for &r in grid.r_values.iter().filter(|&&r| is_prime(r)) {
        for &k in &grid.k_values {
            for n in r * k..=grid.n_max_for(r) {
                let blocks = if grid.all_compositions {
                    compositions(n, r - 1)
                } else {
                    let b = r - 1;
                    let mut v = vec![b; (n / b) as usize];
                    if n % b != 0 {
                        v.push(n % b);
                    }
                    vec![v]
                };
                for sizes in blocks {
                    specs.push(Partition::consecutive(&sizes).and_then(|p| HypergraphSpec::transversal(n, k, r, p)));
                }
            }
        }
    }
    run_rows("transversal_prime", specs, cfg)
}

/// `KG^r_{s-1}(n,k)` for `2 <= s <= min(b(r), r)`.
pub fn sweep_cap_vector(grid: &SweepGrid, cfg: &SweepConfig) -> Vec<SweepRow> {
    let mut specs = Vec::new();
    for &r in &grid.r_values {
        let b = b_of_r(r as u64).unwrap_or(1) as u32;
        for s in 2..=b.min(r) {
            for &k in &grid.k_values {
                for n in (s * k).max(k + 1)..=grid.n_max_for(r) {
                    specs.push(HypergraphSpec::capped_uniform(n, k, r, s));
                }
            }
        }
    }
    run_rows("cap_vector", specs, cfg)
}

/// Which conjecture family to sweep.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConjectureFamily {
    /// `r`-stable `k`-sets.
    Stable,
    /// Transversal to consecutive blocks of size `r`.
    Parts,
    /// `k`-sets not inside `A = {1, ..., a}`, `n >= 2rk`.
    Avoiding,
}

impl ConjectureFamily {
    pub fn name(self) -> &'static str {
        match self {
            ConjectureFamily::Stable => "stable",
            ConjectureFamily::Parts => "parts",
            ConjectureFamily::Avoiding => "avoiding",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "stable" | "stab" => Ok(ConjectureFamily::Stable),
            "parts" | "part" => Ok(ConjectureFamily::Parts),
            "avoiding" | "aa" => Ok(ConjectureFamily::Avoiding),
            _ => Err(Error::InvalidArgument(format!("unknown conjecture family {s:?}"))),
        }
    }
}

pub fn sweep_conjectures(grid: &SweepGrid, which: ConjectureFamily, cfg: &SweepConfig) -> Vec<SweepRow> {
    let mut specs = Vec::new();
    for &r in &grid.r_values {
        for &k in &grid.k_values {
            let n_min = if which == ConjectureFamily::Avoiding { 2 * r * k } else { r * k };
            for n in n_min..=grid.n_max_for(r) {
                match which {
                    ConjectureFamily::Stable => specs.push(HypergraphSpec::stable(n, k, r, r)),
                    ConjectureFamily::Parts => specs.push(
                        Partition::consecutive_max_blocks(n, r).and_then(|p| HypergraphSpec::transversal(n, k, r, p)),
                    ),
                    ConjectureFamily::Avoiding => {
                        for a in 0..=r * k {
                            let set: Vec<u32> = (1..=a).collect();
                            specs.push(HypergraphSpec::avoiding(n, k, r, &set));
                        }
                    }
                }
            }
        }
    }
    run_rows(which.name(), specs, cfg)
}

/// Wide transversal sets for prime `r` and every `t <= r(k-3)+2`, plus the
/// capped variant at the largest admissible window length.
pub fn sweep_wide(grid: &SweepGrid, k_values: &[u32], cfg: &SweepConfig) -> Vec<SweepRow> {
    let mut specs: Vec<(&str, Result<HypergraphSpec>)> = Vec::new();
    let mut skipped = Vec::new();
    for &r in grid.r_values.iter().filter(|&&r| is_prime(r)) {
        for &k in k_values {
            let t_max = r as i64 * (k as i64 - 3) + 2;
            if t_max < 1 {
                let spec = HypergraphSpec::wide(r * k, k, r, 1).expect("valid wide spec");
                skipped.push(SweepRow::skipped("wide_prime", spec, "t_max < 1"));
                continue;
            }
            for n in r * k..=grid.n_max_for(r) {
                for t in 1..=t_max as u32 {
                    let spec = if r == 2 {
                        HypergraphSpec::wide(n, k, r, t)
                    } else {
                        Partition::consecutive_max_blocks(n, r - 1)
                            .and_then(|p| HypergraphSpec::wide_transversal(n, k, r, t, p))
                    };
                    specs.push(("wide_prime", spec));
                }
                for s in 2..=r {
                    let Ok(sv) = SVector::uniform(n, s - 1, r) else { continue };
                    let t = max_wide_t(&sv, r, k);
                    if t >= 1 {
                        specs.push(("wide_cap_vector", HypergraphSpec::wide_capped(n, k, r, t, sv)));
                    }
                }
            }
        }
    }
    let mut rows = skipped;
    let (prime, capped): (Vec<_>, Vec<_>) = specs.into_iter().partition(|(name, _)| *name == "wide_prime");
    rows.extend(run_rows("wide_prime", prime.into_iter().map(|(_, s)| s).collect(), cfg));
    rows.extend(run_rows("wide_cap_vector", capped.into_iter().map(|(_, s)| s).collect(), cfg));
    rows
}

pub const DEFAULT_WIDE_K: [u32; 4] = [1, 2, 3, 4];

/// Every sweep over the default grid, in a fixed order.
pub fn full_default_sweep(cfg: &SweepConfig) -> Vec<SweepRow> {
    let grid = SweepGrid::default();
    let mut rows = sweep_transversal_prime(&grid, cfg);
    rows.extend(sweep_cap_vector(&grid, cfg));
    for which in [ConjectureFamily::Stable, ConjectureFamily::Parts, ConjectureFamily::Avoiding] {
        rows.extend(sweep_conjectures(&grid, which, cfg));
    }
    rows.extend(sweep_wide(&grid, &DEFAULT_WIDE_K, cfg));
    rows
}

#[derive(Serialize)]
struct CsvRecord<'a> {
    sweep: &'a str,
    instance: String,
    n: u32,
    k: u32,
    r: u32,
    vertices: usize,
    supports: usize,
    statement: &'a str,
    claim: &'a str,
    expected: Option<i64>,
    chi: Option<u32>,
    search_lower: u32,
    certification: &'a str,
    nodes: u64,
    lz_upper: Option<i64>,
    lz_ok: Option<bool>,
    verdict: &'a str,
    note: &'a str,
}

/// One CSV line per row, with a header.
pub fn write_csv<W: Write>(rows: &[SweepRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for row in rows {
        let claim = row.claim.as_ref();
        w.serialize(CsvRecord {
            sweep: &row.sweep,
            instance: row.spec.label(),
            n: row.spec.n,
            k: row.spec.k,
            r: row.spec.r,
            vertices: row.vertices,
            supports: row.supports,
            statement: claim.map(|c| c.statement).unwrap_or(""),
            claim: claim
                .map(|c| match c.kind {
                    ClaimKind::Equality => "equality",
                    ClaimKind::LowerBound => "lower_bound",
                    ClaimKind::ConjecturedEquality => "conjectured_equality",
                })
                .unwrap_or(""),
            expected: claim.map(|c| c.value),
            chi: row.chi,
            search_lower: row.search_lower,
            certification: &row.certification,
            nodes: row.nodes,
            lz_upper: row.lz_upper,
            lz_ok: row.lz_ok,
            verdict: row.verdict.as_str(),
            note: &row.note,
        })
        .map_err(|e| Error::Parse(e.to_string()))?;
    }
    w.flush().map_err(|e| Error::Parse(e.to_string()))?;
    Ok(())
}

/// One JSON object per line; witnesses included for refuted rows.
pub fn write_jsonl<W: Write>(rows: &[SweepRow], mut out: W) -> Result<()> {
    for row in rows {
        let mut v = serde_json::to_value(row)?;
        if row.verdict.is_failure() {
            v["witness"] = serde_json::to_value(&row.witness)?;
        }
        writeln!(out, "{v}").map_err(|e| Error::Parse(e.to_string()))?;
    }
    Ok(())
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub rows: usize,
    pub equality_confirmed: usize,
    pub within_bounds: usize,
    pub violations: usize,
    pub conjecture_refuted: usize,
    pub inconclusive: usize,
    pub skipped: usize,
    pub seeded: usize,
    pub lz_flags: usize,
}

impl SweepSummary {
    pub fn of(rows: &[SweepRow]) -> Self {
        let mut s = SweepSummary { rows: rows.len(), ..Default::default() };
        for r in rows {
            match r.verdict {
                Verdict::EqualityConfirmed => s.equality_confirmed += 1,
                Verdict::WithinBounds => s.within_bounds += 1,
                Verdict::Violation => s.violations += 1,
                Verdict::ConjectureRefuted => s.conjecture_refuted += 1,
                Verdict::Inconclusive => s.inconclusive += 1,
                Verdict::Skipped => s.skipped += 1,
            }
            s.seeded += r.certification.starts_with("seeded") as usize;
            s.lz_flags += (r.lz_ok == Some(false)) as usize;
        }
        s
    }

    pub fn has_failures(&self) -> bool {
        self.violations + self.conjecture_refuted > 0
    }
}

impl fmt::Display for SweepSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} rows: {} equality_confirmed, {} within_bounds, {} VIOLATION, {} conjecture_refuted, {} inconclusive, {} skipped ({} seeded, {} lz flags)",
            self.rows,
            self.equality_confirmed,
            self.within_bounds,
            self.violations,
            self.conjecture_refuted,
            self.inconclusive,
            self.skipped,
            self.seeded,
            self.lz_flags
        )
    }
}
