//! Closed-form chromatic bounds, the `b(r)` arithmetic, an explicit optimal
//! coloring of `KG^r(n,k)`, and the parameter calculators for wide sets.

use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypergraph::enum_vertices;
use crate::sets::{KSubset, SVector};
use crate::solver::Coloring;
use crate::spec::{Family, HypergraphSpec};

/// Prime factorization as `(prime, exponent)` pairs, primes increasing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeFactorization {
    pub pairs: Vec<(u64, u32)>,
}

impl PrimeFactorization {
    pub fn value(&self) -> u64 {
        self.pairs.iter().map(|&(p, a)| p.pow(a)).product()
    }

    pub fn is_prime(&self) -> bool {
        self.pairs.len() == 1 && self.pairs[0].1 == 1
    }

    pub fn is_power_of_two(&self) -> bool {
        self.pairs.len() == 1 && self.pairs[0].0 == 2
    }
}

pub fn factorize(r: u64) -> Result<PrimeFactorization> {
    if r < 2 {
        return Err(Error::InvalidArgument(format!("cannot factor {r}; need r >= 2")));
    }
    let mut pairs = Vec::new();
    let mut rest = r;
    let mut p = 2u64;
    while p * p <= rest {
        let mut a = 0;
        while rest % p == 0 {
            rest /= p;
            a += 1;
        }
        if a > 0 {
            pairs.push((p, a));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        pairs.push((rest, 1));
    }
    Ok(PrimeFactorization { pairs })
}

pub fn is_prime(r: u64) -> bool {
    r >= 2 && factorize(r).map(|f| f.is_prime()).unwrap_or(false)
}

/// `b(r) = 2^a0 * prod (p_i - 1)^a_i` over the odd prime powers `p_i^a_i || r`.
pub fn b_of_r(r: u64) -> Result<u64> {
    Ok(factorize(r)?.pairs.iter().map(|&(p, a)| if p == 2 { 2u64.pow(a) } else { (p - 1).pow(a) }).product())
}

#[inline]
fn ceil_div(a: i64, b: i64) -> i64 {
    Integer::div_ceil(&a, &b)
}

/// `ceil((n - r(k-1)) / (r-1))`, possibly nonpositive for small `n`.
pub fn afl_lower(n: u32, k: u32, r: u32) -> i64 {
    let (n, k, r) = (n as i64, k as i64, r as i64);
    ceil_div(n - r * (k - 1), r - 1)
}

/// `ceil((sum s_i - r(k-1)) / (r-1))`.
pub fn gek_lower(k: u32, r: u32, svector: &SVector) -> i64 {
    let (k, r) = (k as i64, r as i64);
    ceil_div(svector.sum() as i64 - r * (k - 1), r - 1)
}

/// `1 + ceil(((s-1)n - rk + 1) / (ceil((r-1)/(s-1)) * (s-1)))`.
pub fn lz_upper(n: u32, k: u32, r: u32, s: u32) -> Result<i64> {
    if s < 2 || s > r {
        return Err(Error::InvalidArgument(format!("need 2 <= s <= r, got s={s}, r={r}")));
    }
    let (n, k, r, s) = (n as i64, k as i64, r as i64, s as i64);
    let inner = ceil_div(r - 1, s - 1);
    Ok(1 + ceil_div((s - 1) * n - r * k + 1, inner * (s - 1)))
}

/// Color of `sigma` in the optimal coloring of `KG^r(n,k)`: blocks of `r-1`
/// consecutive minima share a color, and every set inside the last
/// `rk - 1` (or so) elements gets the final color.
pub fn greedy_kneser_color(sigma: &KSubset, n: u32, k: u32, r: u32) -> u32 {
    let m = afl_lower(n, k, r).max(1) as u32;
    let a = sigma.min_element();
    if a <= (m - 1) * (r - 1) {
        a.div_ceil(r - 1)
    } else {
        m
    }
}

/// The explicit coloring of `KG^r(n,k)` with `afl_lower(n,k,r)` colors,
/// indexed like the vertex list of the hypergraph.
pub fn greedy_kneser_coloring(n: u32, k: u32, r: u32) -> Result<Coloring> {
    if n < r * k {
        return Err(Error::InvalidArgument(format!("need n >= rk, got n={n}, r={r}, k={k}")));
    }
    let spec = HypergraphSpec::kneser(n, k, r)?;
    let colors = enum_vertices(&spec)?.iter().map(|s| greedy_kneser_color(s, n, k, r)).collect();
    Coloring::new(colors, afl_lower(n, k, r) as u32)
}

/// Parameters of the affine-map argument for wide sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct WideProofParams {
    pub d: i64,
    pub m: i64,
    pub t_max: i64,
}

impl WideProofParams {
    /// Size of a point sequence in `R^d` that is just large enough for an
    /// `r`-fold Tverberg partition.
    pub fn n_hat(&self, r: u32) -> i64 {
        (r as i64 - 1) * (self.d + 1) + 1
    }
}

/// The `d` with `r(k-1) - 1 >= (r-1)d > r(k-2)`, `m = (r-1)d - r(k-2) - 1`,
/// and `t_max = r(k-3) + 2`.
///
/// The window holds `r - 1` consecutive integers, so `d` always exists; it is
/// rejected when negative.
pub fn twide_proof_params(r: u32, k: u32) -> Result<WideProofParams> {
    if r < 2 || k < 1 {
        return Err(Error::InvalidArgument(format!("need r >= 2, k >= 1, got r={r}, k={k}")));
    }
    let (r, k) = (r as i64, k as i64);
    let d = Integer::div_floor(&(r * (k - 1) - 1), &(r - 1));
    debug_assert!((r - 1) * d > r * (k - 2));
    if d < 0 {
        return Err(Error::InvalidArgument(format!("no nonnegative dimension for r={r}, k={k} (d={d})")));
    }
    Ok(WideProofParams { d, m: (r - 1) * d - r * (k - 2) - 1, t_max: r * (k - 3) + 2 })
}

/// Largest `t <= n` such that every run of `t` consecutive caps sums to at
/// most `r(k-3) + 2`; 0 when even single caps exceed it.
pub fn max_wide_t(svector: &SVector, r: u32, k: u32) -> u32 {
    let limit = r as i64 * (k as i64 - 3) + 2;
    let caps = svector.caps();
    let fits = |t: usize| caps.windows(t).all(|w| w.iter().map(|&c| c as i64).sum::<i64>() <= limit);
    // Window sums grow with t, so the feasible lengths form a prefix.
    (1..=caps.len()).take_while(|&t| fits(t)).last().unwrap_or(0) as u32
}

/// Bound summary for a cap vector, one CSV row.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub n: u32,
    pub k: u32,
    pub r: u32,
    pub svector: SVector,
    pub b_r: u64,
    pub gek_lower: i64,
    /// Only defined for uniform caps `s - 1` with `2 <= s <= r`.
    pub lz_upper: Option<i64>,
    /// Every cap is at most `b(r) - 1`.
    pub applicable: bool,
}

pub const BOUND_CSV_HEADER: &str = "n,k,r,s_repr,b_r,gek_lower,lz_upper,applicable";

impl BoundReport {
    pub fn new(k: u32, r: u32, svector: SVector) -> Result<Self> {
        let b_r = b_of_r(r as u64)?;
        let n = svector.len() as u32;
        let lz = match svector.uniform_cap() {
            Some(c) if c < r => Some(lz_upper(n, k, r, c + 1)?),
            _ => None,
        };
        Ok(BoundReport {
            n,
            k,
            r,
            b_r,
            gek_lower: gek_lower(k, r, &svector),
            lz_upper: lz,
            applicable: (svector.max_cap() as u64) < b_r,
            svector,
        })
    }

    /// Uniform caps `s - 1` written as `s`, otherwise the caps joined by `:`.
    pub fn s_repr(&self) -> String {
        match self.svector.uniform_cap() {
            Some(c) => (c + 1).to_string(),
            None => format!("[{}]", self.svector.caps().iter().map(|c| c.to_string()).collect::<Vec<_>>().join(":")),
        }
    }

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{}",
            self.n,
            self.k,
            self.r,
            self.s_repr(),
            self.b_r,
            self.gek_lower,
            self.lz_upper.map(|v| v.to_string()).unwrap_or_default(),
            self.applicable
        )
    }
}

/// Which established result a lower bound comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundSource {
    /// `KG^r(n,k)` for any `r`.
    Afl,
    /// Transversal to a partition with parts of size at most `b(r)`.
    TransversalBr,
    /// Cap vector with every cap at most `b(r) - 1`.
    CapVector,
    /// `s`-stable sets with `s <= r` and `r` a power of two.
    StablePowerOfTwo,
    /// Wide transversal sets, `r` prime, parts at most `r - 1`, `t <= r(k-3)+2`.
    WidePrime,
    /// Wide sets under a cap vector, `r` prime, window sums within range.
    WideCapVector,
    /// 1-wide sets with `k >= 2`, which are all `k`-sets.
    WideAll,
    /// Avoiding sets, `n >= 2rk`, `|A| <= b(r)(k-1)`.
    AvoidingBr,
    /// Avoiding sets, `n >= 2rk`, `|A| <= 2(k-1)` or `|A| >= rk - 1`.
    AvoidingKnownRange,
    /// Avoiding sets, `n >= 2rk`, lower end of the general sandwich.
    AvoidingInequality,
}

impl BoundSource {
    pub fn name(self) -> &'static str {
        match self {
            BoundSource::Afl => "afl",
            BoundSource::TransversalBr => "transversal_br",
            BoundSource::CapVector => "cap_vector",
            BoundSource::StablePowerOfTwo => "stable_power_of_two",
            BoundSource::WidePrime => "wide_prime",
            BoundSource::WideCapVector => "wide_cap_vector",
            BoundSource::WideAll => "wide_all",
            BoundSource::AvoidingBr => "avoiding_br",
            BoundSource::AvoidingKnownRange => "avoiding_known_range",
            BoundSource::AvoidingInequality => "avoiding_inequality",
        }
    }
}

impl fmt::Display for BoundSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ProvenBound {
    pub value: i64,
    pub source: BoundSource,
}

/// Conjectured value for the `A`-avoiding family:
/// `ceil((n - max(r(k-1), |A|)) / (r-1))`.
pub fn avoiding_conjectured_value(n: u32, k: u32, r: u32, a_size: u32) -> i64 {
    let (n, k, r, a) = (n as i64, k as i64, r as i64, a_size as i64);
    ceil_div(n - (r * (k - 1)).max(a), r - 1)
}

/// Lower end of the general `A`-avoiding sandwich:
/// `ceil((n - r(k-1) - floor(|A|/k)) / (r-1))`.
pub fn avoiding_lower(n: u32, k: u32, r: u32, a_size: u32) -> i64 {
    let (n, k, r, a) = (n as i64, k as i64, r as i64, a_size as i64);
    ceil_div(n - r * (k - 1) - a / k, r - 1)
}

/// The strongest established lower bound on `chi` for this family instance,
/// or `None` when no established result covers it.
pub fn proven_lower_bound(spec: &HypergraphSpec) -> Option<ProvenBound> {
    let (n, k, r) = (spec.n, spec.k, spec.r);
    let b = b_of_r(r as u64).ok()?;
    let fact = factorize(r as u64).ok()?;
    let mut found: Vec<ProvenBound> = Vec::new();
    let mut push = |value: i64, source| found.push(ProvenBound { value, source });
    match spec.family {
        Family::Kneser if n >= r * k => push(afl_lower(n, k, r), BoundSource::Afl),
        Family::Transversal => {
            let p = spec.partition.as_ref()?;
            if n >= r * k && p.max_part_size() as u64 <= b {
                push(afl_lower(n, k, r), BoundSource::TransversalBr);
            }
        }
        Family::Capped => {
            let sv = spec.svector.as_ref()?;
            if (sv.max_cap() as u64) < b {
                push(gek_lower(k, r, sv), BoundSource::CapVector);
            }
        }
        Family::Stable => {
            if n >= r * k && fact.is_power_of_two() && spec.stable_s? <= r {
                push(afl_lower(n, k, r), BoundSource::StablePowerOfTwo);
            }
        }
        Family::Wide => {
            let t = spec.wide_t?;
            match (&spec.svector, &spec.partition) {
                (None, p) => {
                    let max_part = p.as_ref().map(|p| p.max_part_size()).unwrap_or(1);
                    if n >= r * k && fact.is_prime() && max_part < r && (t as i64) <= r as i64 * (k as i64 - 3) + 2 {
                        push(afl_lower(n, k, r), BoundSource::WidePrime);
                    }
                    if p.is_none() && t <= 1 && k >= 2 && n >= r * k {
                        push(afl_lower(n, k, r), BoundSource::WideAll);
                    }
                }
                (Some(sv), None) => {
                    let tm = max_wide_t(sv, r, k);
                    if fact.is_prime() && n >= k && tm >= 1 && t <= tm {
                        push(gek_lower(k, r, sv), BoundSource::WideCapVector);
                    }
                }
                (Some(_), Some(_)) => {}
            }
        }
        Family::AvoidA if n >= 2 * r * k => {
            let a = spec.avoid_a?.count_ones();
            if a as u64 <= b * (k as u64 - 1) {
                push(avoiding_conjectured_value(n, k, r, a), BoundSource::AvoidingBr);
            }
            if a <= 2 * (k - 1) || a + 1 >= r * k {
                push(avoiding_conjectured_value(n, k, r, a), BoundSource::AvoidingKnownRange);
            }
            push(avoiding_lower(n, k, r, a), BoundSource::AvoidingInequality);
        }
        _ => {}
    }
    // First source wins ties.
    found.into_iter().rev().max_by_key(|b| b.value)
}
