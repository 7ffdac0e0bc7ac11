//! Tverberg partitions of rational point sequences.
//!
//! Hull intersection is decided exactly by a phase-one LP in the convex
//! coefficients. Partitions are unlabeled and stored canonically: 1-based
//! indices, each part sorted, parts ordered by their minimum.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::lp::{feasible_point, Q};

pub const RANDOM_COORD_BOUND: i64 = 1000;

/// An ordered sequence of points in `Q^d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointConfig {
    d: usize,
    points: Vec<Vec<Q>>,
}

impl PointConfig {
    pub fn new(d: usize, points: Vec<Vec<Q>>) -> Result<Self> {
        if let Some(p) = points.iter().find(|p| p.len() != d) {
            return Err(Error::InvalidArgument(format!("point with {} coordinates in dimension {d}", p.len())));
        }
        Ok(PointConfig { d, points })
    }

    pub fn from_integers(d: usize, points: &[Vec<i64>]) -> Result<Self> {
        Self::new(d, points.iter().map(|p| p.iter().map(|&x| Q::from_integer(BigInt::from(x))).collect()).collect())
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Vec<Q>] {
        &self.points
    }

    /// Points at the given 1-based positions, in that order.
    pub fn subsequence(&self, positions: &[usize]) -> PointConfig {
        PointConfig { d: self.d, points: positions.iter().map(|&i| self.points[i - 1].clone()).collect() }
    }

    /// `x -> Mx + t` applied to every point.
    pub fn affine_image(&self, m: &[Vec<Q>], t: &[Q]) -> Result<PointConfig> {
        if m.len() != self.d || m.iter().any(|r| r.len() != self.d) || t.len() != self.d {
            return Err(Error::InvalidArgument("affine map has the wrong shape".into()));
        }
        let points = self
            .points
            .iter()
            .map(|p| (0..self.d).map(|i| m[i].iter().zip(p).map(|(a, x)| a * x).sum::<Q>() + &t[i]).collect())
            .collect();
        Ok(PointConfig { d: self.d, points })
    }

    /// Integer coordinates uniform in `[-1000, 1000]`.
    pub fn random<R: Rng>(d: usize, len: usize, rng: &mut R) -> PointConfig {
        let points = (0..len)
            .map(|_| {
                (0..d)
                    .map(|_| Q::from_integer(BigInt::from(rng.gen_range(-RANDOM_COORD_BOUND..=RANDOM_COORD_BOUND))))
                    .collect()
            })
            .collect();
        PointConfig { d, points }
    }

    /// Every set of at most `d + 1` points is affinely independent.
    pub fn is_in_general_position(&self) -> bool {
        let take = (self.d + 1).min(self.len());
        subsets(self.len(), take).all(|s| affine_rank(&self.subsequence(&s)) == take)
    }

    pub fn to_json(&self) -> String {
        let pts: Vec<Vec<String>> = self.points.iter().map(|p| p.iter().map(fmt_q).collect()).collect();
        serde_json::json!({ "d": self.d, "points": pts }).to_string()
    }

    /// Accepts coordinates as `"num/den"` strings, integer strings, or JSON
    /// integers.
    pub fn from_json(s: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(s)?;
        let d = v.get("d").and_then(Value::as_u64).ok_or_else(|| Error::Parse("missing \"d\"".into()))? as usize;
        let pts = v.get("points").and_then(Value::as_array).ok_or_else(|| Error::Parse("missing \"points\"".into()))?;
        let mut points = Vec::with_capacity(pts.len());
        for p in pts {
            let coords = p.as_array().ok_or_else(|| Error::Parse("point is not an array".into()))?;
            points.push(coords.iter().map(parse_q).collect::<Result<Vec<Q>>>()?);
        }
        Self::new(d, points)
    }
}

/// `"num/den"` in lowest terms, denominator positive.
pub fn fmt_q(q: &Q) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

fn parse_q(v: &Value) -> Result<Q> {
    match v {
        Value::String(s) => s.trim().parse::<Q>().map_err(|e| Error::Parse(format!("bad rational {s:?}: {e}"))),
        Value::Number(n) => n
            .as_i64()
            .map(|i| Q::from_integer(i.into()))
            .ok_or_else(|| Error::Parse(format!("non-integer number {n}; use a \"num/den\" string"))),
        other => Err(Error::Parse(format!("bad coordinate {other}"))),
    }
}

/// Rank of the points after lifting each `x` to `(x, 1)`.
fn affine_rank(c: &PointConfig) -> usize {
    let rows: Vec<Vec<Q>> = c.points.iter().map(|p| p.iter().cloned().chain([Q::one()]).collect()).collect();
    rank(rows)
}

fn rank(mut rows: Vec<Vec<Q>>) -> usize {
    let cols = rows.first().map(|r| r.len()).unwrap_or(0);
    let mut rk = 0;
    for c in 0..cols {
        let Some(p) = (rk..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(rk, p);
        let pivot = rows[rk].clone();
        for row in rows.iter_mut().skip(rk + 1) {
            if !row[c].is_zero() {
                let f = &row[c] / &pivot[c];
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x -= &f * y;
                }
            }
        }
        rk += 1;
    }
    rk
}

/// `k`-subsets of `[n]` as ascending 1-based position lists, in lex order.
fn subsets(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut cur: Option<Vec<usize>> = if k <= n { Some((1..=k).collect()) } else { None };
    std::iter::from_fn(move || {
        let out = cur.clone()?;
        let next = (0..k).rev().find(|&i| out[i] < n - k + i + 1).map(|i| {
            let mut nx = out.clone();
            nx[i] += 1;
            for j in i + 1..k {
                nx[j] = nx[j - 1] + 1;
            }
            nx
        });
        cur = next;
        Some(out)
    })
}

/// An unlabeled partition of an index set into nonempty parts.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct TverbergPartition {
    parts: Vec<Vec<usize>>,
}

impl TverbergPartition {
    pub fn new(mut parts: Vec<Vec<usize>>) -> Result<Self> {
        if parts.iter().any(|p| p.is_empty()) {
            return Err(Error::InvalidArgument("empty part".into()));
        }
        for p in parts.iter_mut() {
            p.sort_unstable();
        }
        parts.sort_by_key(|p| p[0]);
        let mut all: Vec<usize> = parts.iter().flatten().copied().collect();
        all.sort_unstable();
        if all.first() == Some(&0) || all.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidArgument("parts must be disjoint sets of 1-based indices".into()));
        }
        Ok(TverbergPartition { parts })
    }

    /// Decodes a restricted growth string (block labels from 0).
    pub fn from_rgs(rgs: &[usize]) -> Self {
        let blocks = rgs.iter().max().map(|m| m + 1).unwrap_or(0);
        let mut parts = vec![Vec::new(); blocks];
        for (i, &b) in rgs.iter().enumerate() {
            parts[b].push(i + 1);
        }
        TverbergPartition { parts }
    }

    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    pub fn r(&self) -> usize {
        self.parts.len()
    }

    pub fn ground_size(&self) -> usize {
        self.parts.iter().map(|p| p.len()).sum()
    }

    pub fn covers(&self, n: usize) -> bool {
        self.ground_size() == n && self.parts.iter().flatten().all(|&i| i <= n)
    }

    /// Replaces every index `i` by `positions[i - 1]`.
    pub fn relabel(&self, positions: &[usize]) -> TverbergPartition {
        TverbergPartition::new(self.parts.iter().map(|p| p.iter().map(|&i| positions[i - 1]).collect()).collect())
            .expect("relabeling by an injective map")
    }
}

impl fmt::Debug for TverbergPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self
            .parts
            .iter()
            .map(|p| format!("{{{}}}", p.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        f.write_str(&strs.join("|"))
    }
}

impl TryFrom<Vec<Vec<usize>>> for TverbergPartition {
    type Error = Error;
    fn try_from(v: Vec<Vec<usize>>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<TverbergPartition> for Vec<Vec<usize>> {
    fn from(p: TverbergPartition) -> Self {
        p.parts
    }
}

/// Restricted growth strings of length `n` with exactly `blocks` distinct
/// labels, in lexicographic order.
pub fn restricted_growth_strings(n: usize, blocks: usize) -> Vec<Vec<usize>> {
    fn go(i: usize, n: usize, blocks: usize, used: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == n {
            if used == blocks {
                out.push(cur.clone());
            }
            return;
        }
        // Not enough positions left to open the missing blocks.
        if blocks - used > n - i {
            return;
        }
        for b in 0..=used.min(blocks - 1) {
            cur.push(b);
            go(i + 1, n, blocks, used.max(b + 1), cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if blocks == 0 {
        if n == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(0, n, blocks, 0, &mut Vec::new(), &mut out);
    out
}

/// All partitions of `[n]` into exactly `r` parts.
pub fn set_partitions(n: usize, r: usize) -> Vec<TverbergPartition> {
    restricted_growth_strings(n, r).iter().map(|s| TverbergPartition::from_rgs(s)).collect()
}

fn lp_system(config: &PointConfig, partition: &TverbergPartition) -> (Vec<Vec<Q>>, Vec<Q>) {
    let d = config.dim();
    let parts = partition.parts();
    let nvars: usize = parts.iter().map(|p| p.len()).sum();
    let mut a = Vec::new();
    let mut b = Vec::new();
    let mut offsets = Vec::with_capacity(parts.len());
    let mut off = 0;
    for p in parts {
        offsets.push(off);
        off += p.len();
    }
    for (j, p) in parts.iter().enumerate() {
        let mut row = vec![Q::zero(); nvars];
        for v in &mut row[offsets[j]..offsets[j] + p.len()] {
            *v = Q::one();
        }
        a.push(row);
        b.push(Q::one());
    }
    for j in 1..parts.len() {
        for c in 0..d {
            let mut row = vec![Q::zero(); nvars];
            for (t, &i) in parts[0].iter().enumerate() {
                row[offsets[0] + t] = config.points[i - 1][c].clone();
            }
            for (t, &i) in parts[j].iter().enumerate() {
                row[offsets[j] + t] = -config.points[i - 1][c].clone();
            }
            a.push(row);
            b.push(Q::zero());
        }
    }
    (a, b)
}

fn check_indices(config: &PointConfig, partition: &TverbergPartition) -> Result<()> {
    if partition.r() == 0 {
        return Err(Error::InvalidArgument("partition has no parts".into()));
    }
    if let Some(&bad) = partition.parts().iter().flatten().find(|&&i| i > config.len()) {
        return Err(Error::InvalidArgument(format!("index {bad} beyond {} points", config.len())));
    }
    Ok(())
}

/// A point common to the convex hulls of all parts, if any.
pub fn common_point(config: &PointConfig, partition: &TverbergPartition) -> Result<Option<Vec<Q>>> {
    check_indices(config, partition)?;
    let (a, b) = lp_system(config, partition);
    Ok(feasible_point(&a, &b).map(|lambda| {
        let first = &partition.parts()[0];
        (0..config.dim()).map(|c| first.iter().zip(&lambda).map(|(&i, l)| l * &config.points[i - 1][c]).sum()).collect()
    }))
}

pub fn hulls_intersect(config: &PointConfig, partition: &TverbergPartition) -> Result<bool> {
    Ok(common_point(config, partition)?.is_some())
}

/// `N^ = (r-1)(d+1) + 1`.
pub fn n_hat(r: usize, d: usize) -> usize {
    (r - 1) * (d + 1) + 1
}

/// Window `Y_k = {(r-1)(k-1)+1, ..., (r-1)k+1}` for `k` in `1..=d+1`.
pub fn window(r: usize, k: usize) -> std::ops::RangeInclusive<usize> {
    (r - 1) * (k - 1) + 1..=(r - 1) * k + 1
}

/// Every window meets every part exactly once.
pub fn is_colorful(partition: &TverbergPartition, r: usize, d: usize) -> Result<bool> {
    let n = n_hat(r, d);
    if !partition.covers(n) {
        return Err(Error::InvalidArgument(format!("partition does not cover [{n}]")));
    }
    if partition.r() != r {
        return Ok(false);
    }
    Ok((1..=d + 1).all(|k| {
        let w = window(r, k);
        partition.parts().iter().all(|p| p.iter().filter(|i| w.contains(i)).count() == 1)
    }))
}

/// Colorful partitions by filtering all `r`-part partitions of `[N^]`,
/// sorted.
pub fn colorful_partitions(r: usize, d: usize) -> Vec<TverbergPartition> {
    let mut out: Vec<_> =
        set_partitions(n_hat(r, d), r).into_iter().filter(|p| is_colorful(p, r, d).unwrap()).collect();
    out.sort();
    out
}

/// Colorful partitions built window by window: the first window fixes one
/// element per part, and each later window assigns its `r - 1` new elements
/// bijectively to the parts missing its shared first element.
pub fn colorful_partitions_by_windows(r: usize, d: usize) -> Vec<TverbergPartition> {
    fn perms(items: &[usize]) -> Vec<Vec<usize>> {
        if items.len() <= 1 {
            return vec![items.to_vec()];
        }
        let mut out = Vec::new();
        for i in 0..items.len() {
            let mut rest = items.to_vec();
            let x = rest.remove(i);
            for mut p in perms(&rest) {
                p.insert(0, x);
                out.push(p);
            }
        }
        out
    }
    let mut states: Vec<Vec<usize>> = vec![(0..r).collect()]; // part label per element
    for k in 2..=d + 1 {
        let shared = (r - 1) * (k - 1) + 1;
        let mut next = Vec::new();
        for st in &states {
            let others: Vec<usize> = (0..r).filter(|&b| b != st[shared - 1]).collect();
            for p in perms(&others) {
                let mut s = st.clone();
                s.extend(p);
                next.push(s);
            }
        }
        states = next;
    }
    let mut out: Vec<TverbergPartition> = states
        .iter()
        .map(|labels| {
            let mut parts = vec![Vec::new(); r];
            for (i, &b) in labels.iter().enumerate() {
                parts[b].push(i + 1);
            }
            TverbergPartition::new(parts).unwrap()
        })
        .collect();
    out.sort();
    out
}

#[derive(Clone, Copy, Debug)]
pub struct OccurrenceOptions {
    /// Scan every subsequence of length `N^` instead of the first `N^` points.
    pub all_subsequences: bool,
    /// Maximum number of LP feasibility checks.
    pub budget: u64,
}

impl Default for OccurrenceOptions {
    fn default() -> Self {
        OccurrenceOptions { all_subsequences: false, budget: 10_000_000 }
    }
}

/// Partition patterns of `[N^]` realized as Tverberg partitions by some
/// scanned subsequence of length `N^`.
pub fn occurring_tverberg_partitions(
    config: &PointConfig,
    r: usize,
    opts: OccurrenceOptions,
) -> Result<BTreeSet<TverbergPartition>> {
    if r < 1 {
        return Err(Error::InvalidArgument("r must be at least 1".into()));
    }
    let n = n_hat(r, config.dim());
    if config.len() < n {
        return Err(Error::InvalidArgument(format!("{} points is fewer than (r-1)(d+1)+1 = {n}", config.len())));
    }
    let patterns = set_partitions(n, r);
    let subs: Vec<Vec<usize>> =
        if opts.all_subsequences { subsets(config.len(), n).collect() } else { vec![(1..=n).collect()] };
    let checks = subs.len() as u64 * patterns.len() as u64;
    if checks > opts.budget {
        return Err(Error::BudgetExceeded { what: "Tverberg occurrence", reached: checks });
    }
    let found: Vec<TverbergPartition> = subs
        .par_iter()
        .flat_map_iter(|sub| {
            let sc = config.subsequence(sub);
            patterns.iter().filter(move |p| hulls_intersect(&sc, p).unwrap()).cloned().collect::<Vec<_>>()
        })
        .collect();
    Ok(found.into_iter().collect())
}

/// Comparison of occurring partitions with the colorful ones.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlnReport {
    pub verdict: &'static str,
    /// Occurring but not colorful.
    pub extra: Vec<TverbergPartition>,
    /// Colorful but not occurring.
    pub missing: Vec<TverbergPartition>,
}

impl BlnReport {
    pub fn exactly_colorful(&self) -> bool {
        self.extra.is_empty() && self.missing.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

pub fn check_bln_property(config: &PointConfig, r: usize, opts: OccurrenceOptions) -> Result<BlnReport> {
    let occurring = occurring_tverberg_partitions(config, r, opts)?;
    let colorful: BTreeSet<TverbergPartition> = colorful_partitions(r, config.dim()).into_iter().collect();
    let extra: Vec<_> = occurring.difference(&colorful).cloned().collect();
    let missing: Vec<_> = colorful.difference(&occurring).cloned().collect();
    let verdict = if !extra.is_empty() {
        "extra"
    } else if !missing.is_empty() {
        "missing"
    } else {
        "exactly_colorful"
    };
    Ok(BlnReport { verdict, extra, missing })
}

/// Some partition of the whole sequence into `r` parts has intersecting
/// hulls.
pub fn has_tverberg_partition(config: &PointConfig, r: usize) -> bool {
    restricted_growth_strings(config.len(), r)
        .par_iter()
        .any(|s| hulls_intersect(config, &TverbergPartition::from_rgs(s)).unwrap())
}

/// Radon partition read off the affine dependence of `d + 2` points: the
/// positive and negative coefficients of the unique (up to scale) kernel
/// vector of the lifted points. `None` when the dependence is not unique.
pub fn radon_partition_by_kernel(config: &PointConfig) -> Option<(Vec<usize>, Vec<usize>, Vec<usize>)> {
    let m = config.len();
    let d = config.dim();
    // Rows are coordinates plus the all-ones row; columns are points.
    let mut rows: Vec<Vec<Q>> = (0..d).map(|c| config.points.iter().map(|p| p[c].clone()).collect()).collect();
    rows.push(vec![Q::one(); m]);
    // Reduced row echelon form.
    let mut pivots = Vec::new();
    let mut rk = 0;
    for c in 0..m {
        let Some(p) = (rk..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(rk, p);
        let inv = rows[rk][c].recip();
        for x in rows[rk].iter_mut() {
            *x *= &inv;
        }
        let prow = rows[rk].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != rk && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&prow) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        rk += 1;
    }
    let free: Vec<usize> = (0..m).filter(|c| !pivots.contains(c)).collect();
    if free.len() != 1 {
        return None;
    }
    let f = free[0];
    let mut mu = vec![Q::zero(); m];
    mu[f] = Q::one();
    for (i, &pc) in pivots.iter().enumerate() {
        mu[pc] = -rows[i][f].clone();
    }
    let pos = (0..m).filter(|&i| mu[i].is_positive()).map(|i| i + 1).collect();
    let neg = (0..m).filter(|&i| mu[i].is_negative()).map(|i| i + 1).collect();
    let zero = (0..m).filter(|&i| mu[i].is_zero()).map(|i| i + 1).collect();
    Some((pos, neg, zero))
}

/// Kernel-sign prediction for whether a 2-part partition of the whole
/// sequence is a Radon partition.
pub fn radon_predicts(config: &PointConfig, partition: &TverbergPartition) -> Option<bool> {
    if partition.r() != 2 || !partition.covers(config.len()) {
        return None;
    }
    let (pos, neg, _) = radon_partition_by_kernel(config)?;
    let contains = |part: &[usize], xs: &[usize]| xs.iter().all(|x| part.contains(x));
    let (a, b) = (&partition.parts()[0], &partition.parts()[1]);
    Some((contains(a, &pos) && contains(b, &neg)) || (contains(a, &neg) && contains(b, &pos)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExistenceReport {
    pub r: usize,
    pub d: usize,
    pub n_hat: usize,
    pub trials: usize,
    /// Random configurations of size `N^` with a Tverberg partition.
    pub full_partitionable: usize,
    /// Random configurations of size `N^ - 1` in general position with one.
    pub reduced_partitionable: usize,
    /// Draws rejected for not being in general position.
    pub resampled: usize,
}

impl ExistenceReport {
    pub fn holds(&self) -> bool {
        self.full_partitionable == self.trials && self.reduced_partitionable == 0
    }
}

/// Draws `trials` configurations of each size `N^` and `N^ - 1` in general
/// position and counts those admitting an `r`-part Tverberg partition.
pub fn tverberg_existence_sweep(r: usize, d: usize, trials: usize, seed: u64) -> ExistenceReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = n_hat(r, d);
    let mut resampled = 0;
    let mut draw = |len: usize, rng: &mut ChaCha8Rng| loop {
        let c = PointConfig::random(d, len, rng);
        if c.is_in_general_position() {
            return c;
        }
        resampled += 1;
    };
    let mut full = 0;
    let mut reduced = 0;
    for _ in 0..trials {
        let c = draw(n, &mut rng);
        full += has_tverberg_partition(&c, r) as usize;
        let c = draw(n - 1, &mut rng);
        reduced += (n > r && has_tverberg_partition(&c, r)) as usize;
    }
    ExistenceReport { r, d, n_hat: n, trials, full_partitionable: full, reduced_partitionable: reduced, resampled }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tp(parts: &[&[usize]]) -> TverbergPartition {
        TverbergPartition::new(parts.iter().map(|p| p.to_vec()).collect()).unwrap()
    }

    fn ints(d: usize, pts: &[&[i64]]) -> PointConfig {
        PointConfig::from_integers(d, &pts.iter().map(|p| p.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn square_diagonals_cross() {
        let sq = ints(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let p = common_point(&sq, &tp(&[&[1, 4], &[2, 3]])).unwrap().unwrap();
        let half = Q::new(1.into(), 2.into());
        assert_eq!(p, vec![half.clone(), half]);
        assert!(!hulls_intersect(&sq, &tp(&[&[1, 2], &[3, 4]])).unwrap());
    }

    #[test]
    fn trivial_cases() {
        let tri = ints(2, &[&[0, 0], &[1, 0], &[0, 1]]);
        assert!(!hulls_intersect(&tri, &tp(&[&[1], &[2], &[3]])).unwrap());
        assert!(hulls_intersect(&tri, &tp(&[&[1, 2, 3]])).unwrap());
        assert!(TverbergPartition::new(vec![vec![1], vec![]]).is_err());
        assert!(hulls_intersect(&tri, &tp(&[&[1], &[4]])).is_err());
    }

    #[test]
    fn colorful_examples() {
        assert!(is_colorful(&tp(&[&[1, 4], &[2, 5], &[3]]), 3, 1).unwrap());
        assert!(!is_colorful(&tp(&[&[1, 2], &[3, 4], &[5]]), 3, 1).unwrap());
        assert!(is_colorful(&tp(&[&[1, 2]]), 3, 1).is_err());
        assert_eq!(colorful_partitions(3, 1), vec![tp(&[&[1, 4], &[2, 5], &[3]]), tp(&[&[1, 5], &[2, 4], &[3]])]);
    }

    #[test]
    fn colorful_enumerations_agree() {
        for (r, d) in [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (4, 1)] {
            let a = colorful_partitions(r, d);
            let b = colorful_partitions_by_windows(r, d);
            assert_eq!(a, b, "r={r} d={d}");
            let fact: usize = (1..r).product();
            assert_eq!(a.len(), fact.pow(d as u32));
        }
    }

    #[test]
    fn partition_counts() {
        assert_eq!(set_partitions(7, 3).len(), 301);
        assert_eq!(set_partitions(4, 2).len(), 7);
        assert_eq!(restricted_growth_strings(0, 0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn three_points_on_a_line() {
        let c = ints(1, &[&[0], &[1], &[2]]);
        let occ = occurring_tverberg_partitions(&c, 2, OccurrenceOptions::default()).unwrap();
        assert_eq!(occ.into_iter().collect::<Vec<_>>(), vec![tp(&[&[1, 3], &[2]])]);
        assert!(check_bln_property(&c, 2, OccurrenceOptions::default()).unwrap().exactly_colorful());
    }

    #[test]
    fn five_points_on_a_line() {
        let c = ints(1, &[&[1], &[2], &[3], &[4], &[5]]);
        let occ = occurring_tverberg_partitions(&c, 3, OccurrenceOptions::default()).unwrap();
        assert!(occ.contains(&tp(&[&[1, 4], &[2, 5], &[3]])));
        assert!(occurring_tverberg_partitions(&ints(1, &[&[1], &[2]]), 3, OccurrenceOptions::default()).is_err());
    }

    #[test]
    fn radon_kernel_oracle() {
        let sq = ints(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let (pos, neg, zero) = radon_partition_by_kernel(&sq).unwrap();
        let mut pair = [pos, neg];
        pair.sort();
        assert_eq!(pair, [vec![1, 4], vec![2, 3]]);
        assert!(zero.is_empty());
    }

    #[test]
    fn json_round_trip() {
        let c = PointConfig::new(2, vec![vec![Q::new(1.into(), 2.into()), Q::from_integer((-3).into())]]).unwrap();
        assert_eq!(c.to_json(), r#"{"d":2,"points":[["1/2","-3/1"]]}"#);
        assert_eq!(PointConfig::from_json(&c.to_json()).unwrap(), c);
        assert_eq!(PointConfig::from_json(r#"{"d":2,"points":[["2/4",-3]]}"#).unwrap(), c);
        assert!(PointConfig::from_json(r#"{"d":2,"points":[["1/0",1]]}"#).is_err());
        assert!(PointConfig::from_json(r#"{"d":2,"points":[[1]]}"#).is_err());
        let p = tp(&[&[3], &[1, 2]]);
        assert_eq!(serde_json::to_string(&p).unwrap(), "[[1,2],[3]]");
    }

    #[test]
    fn small_existence_sweep() {
        let rep = tverberg_existence_sweep(2, 2, 10, 7);
        assert!(rep.holds(), "{rep:?}");
        assert_eq!(rep.n_hat, 4);
    }
}
