//! Vertex enumeration and inclusion-minimal hyperedge supports.
//!
//! Hyperedges are multisets of `r` vertices. Coloring only ever looks at the
//! set of distinct vertices underneath a hyperedge (its support), and a
//! superset of a support can never be monochromatic without the support
//! being monochromatic too, so a [`Hypergraph`] keeps only the
//! inclusion-minimal supports.

use std::collections::{BTreeSet, HashSet};
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::sets::{cyclic_distance, elements_of, k_subset_masks, KSubset, SVector};
use crate::spec::{Family, HypergraphSpec};

pub const DEFAULT_SUPPORT_BUDGET: u64 = 5_000_000;

/// True iff every pair of elements of `sigma` is at cyclic distance `>= s`
/// in `[n]`, where `n` is the ground set of `sigma`.
pub fn is_s_stable(sigma: &KSubset, s: u32) -> bool {
    let n = sigma.n();
    let elems = sigma.to_vec();
    for (i, &a) in elems.iter().enumerate() {
        for &b in &elems[i + 1..] {
            if cyclic_distance(a, b, n) < s {
                return false;
            }
        }
    }
    true
}

/// True iff `sigma` fits in no window `{i, ..., i + t - 1}`.
pub fn is_t_wide(sigma: &KSubset, t: u32) -> bool {
    sigma.max_element() - sigma.min_element() + 1 > t
}

/// Vertices of the family in increasing mask order.
pub fn enum_vertices(spec: &HypergraphSpec) -> Result<Vec<KSubset>> {
    spec.validate()?;
    let n = spec.n;
    let base: Vec<u64> = match &spec.set_system {
        Some(sys) => {
            let mut v = sys.clone();
            v.sort_unstable();
            v
        }
        None => k_subset_masks(n, spec.k).collect(),
    };
    let mut out = Vec::with_capacity(base.len());
    for mask in base {
        let sigma = KSubset::new(mask, n)?;
        if let Some(p) = &spec.partition {
            if !p.is_transversal(mask) {
                continue;
            }
        }
        if let Some(s) = spec.stable_s {
            if !is_s_stable(&sigma, s) {
                continue;
            }
        }
        if let Some(t) = spec.wide_t {
            if !is_t_wide(&sigma, t) {
                continue;
            }
        }
        if let Some(a) = spec.avoid_a {
            if sigma.is_subset_of_mask(a) {
                continue;
            }
        }
        out.push(sigma);
    }
    Ok(out)
}

/// Multiplicities `m_j >= 1` with `sum m_j = r` such that every ground element
/// `i` is covered at most `s_i` times, or `None`.
///
/// Compositions of `r` are tried in decreasing lexicographic order, so the
/// first part is as large as possible: two disjoint sets with `r = 3` and caps
/// 2 give `(2, 1)`.
pub fn support_feasible(support: &[KSubset], r: u32, svector: &SVector) -> Option<Vec<u32>> {
    let len = support.len() as u32;
    if len == 0 || len > r {
        return None;
    }
    let masks: Vec<u64> = support.iter().map(|s| s.mask()).collect();
    let union = masks.iter().fold(0u64, |a, &m| a | m);
    let elems: Vec<u32> = elements_of(union).collect();
    let mut mult = vec![0u32; support.len()];
    fn rec(j: usize, remaining: u32, mult: &mut [u32], masks: &[u64], elems: &[u32], sv: &SVector) -> bool {
        let parts_left = (mult.len() - j) as u32;
        if parts_left == 1 {
            mult[j] = remaining;
            return loads_ok(mult, masks, elems, sv);
        }
        let hi = remaining - (parts_left - 1);
        for m in (1..=hi).rev() {
            mult[j] = m;
            if rec(j + 1, remaining - m, mult, masks, elems, sv) {
                return true;
            }
        }
        false
    }
    rec(0, r, &mut mult, &masks, &elems, svector).then_some(mult)
}

fn loads_ok(mult: &[u32], masks: &[u64], elems: &[u32], sv: &SVector) -> bool {
    elems.iter().all(|&e| {
        let bit = 1u64 << (e - 1);
        let load: u32 = masks.iter().zip(mult).filter(|(m, _)| *m & bit != 0).map(|(_, &c)| c).sum();
        load <= sv.cap(e)
    })
}

/// Uniform-cap hyperedge rule: no `s` members (distinct positions, repeats
/// allowed) share a common element.
pub fn s_wise_hyperedge(multiset: &[KSubset], s: u32) -> bool {
    let s = s as usize;
    if s == 0 || s > multiset.len() {
        return true;
    }
    let mut idx: Vec<usize> = (0..s).collect();
    loop {
        let common = idx.iter().fold(u64::MAX, |a, &i| a & multiset[i].mask());
        if common != 0 {
            return false;
        }
        // next s-combination of positions
        let Some(i) = (0..s).rev().find(|&i| idx[i] < i + multiset.len() - s) else {
            return true;
        };
        idx[i] += 1;
        for j in i + 1..s {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Per-element cap hyperedge rule on an explicit multiset.
pub fn capped_hyperedge(multiset: &[KSubset], svector: &SVector) -> bool {
    let union = multiset.iter().fold(0u64, |a, m| a | m.mask());
    elements_of(union).all(|e| {
        let bit = 1u64 << (e - 1);
        multiset.iter().filter(|m| m.mask() & bit != 0).count() as u32 <= svector.cap(e)
    })
}

/// A materialized hypergraph: ordered vertices plus inclusion-minimal supports
/// given as sorted vertex-index lists, themselves sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    n: u32,
    k: u32,
    r: u32,
    spec: Option<HypergraphSpec>,
    vertices: Vec<KSubset>,
    supports: Vec<Vec<u32>>,
    incidence: Vec<Vec<u32>>,
}

impl Hypergraph {
    /// Assembles a hypergraph from explicit parts. Supports are normalized
    /// (sorted, deduplicated) but minimality is not re-checked here; see
    /// [`Hypergraph::is_minimal`].
    pub fn from_parts(
        n: u32,
        k: u32,
        r: u32,
        spec: Option<HypergraphSpec>,
        vertices: Vec<KSubset>,
        supports: Vec<Vec<u32>>,
    ) -> Result<Self> {
        let nv = vertices.len() as u32;
        let mut norm = Vec::with_capacity(supports.len());
        for mut s in supports {
            s.sort_unstable();
            s.dedup();
            if s.len() < 2 {
                return Err(Error::InvalidArgument("support with fewer than 2 vertices".into()));
            }
            if let Some(&bad) = s.iter().find(|&&v| v >= nv) {
                return Err(Error::InvalidArgument(format!("support vertex {bad} out of range")));
            }
            norm.push(s);
        }
        norm.sort();
        norm.dedup();
        let mut incidence = vec![Vec::new(); vertices.len()];
        for (i, s) in norm.iter().enumerate() {
            for &v in s {
                incidence[v as usize].push(i as u32);
            }
        }
        Ok(Hypergraph { n, k, r, spec, vertices, supports: norm, incidence })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn spec(&self) -> Option<&HypergraphSpec> {
        self.spec.as_ref()
    }

    pub fn vertices(&self) -> &[KSubset] {
        &self.vertices
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn supports(&self) -> &[Vec<u32>] {
        &self.supports
    }

    pub fn num_supports(&self) -> usize {
        self.supports.len()
    }

    /// Indices of the supports containing vertex `v`.
    pub fn incident(&self, v: usize) -> &[u32] {
        &self.incidence[v]
    }

    pub fn vertex_index(&self, sigma: &KSubset) -> Option<usize> {
        self.vertex_index_of_mask(sigma.mask())
    }

    pub fn vertex_index_of_mask(&self, mask: u64) -> Option<usize> {
        self.vertices.binary_search_by_key(&mask, |v| v.mask()).ok()
    }

    /// Multiplicities realizing `support` as a hyperedge.
    pub fn multiplicities(&self, support: &[u32]) -> Option<Vec<u32>> {
        match self.spec.as_ref().and_then(|s| s.caps()) {
            Some(sv) => {
                let sets: Vec<KSubset> = support.iter().map(|&v| self.vertices[v as usize]).collect();
                support_feasible(&sets, self.r, sv)
            }
            None if support.len() as u32 == self.r => Some(vec![1; support.len()]),
            None => None,
        }
    }

    /// Supports as sets of vertex masks, independent of vertex numbering.
    pub fn support_mask_sets(&self) -> BTreeSet<Vec<u64>> {
        self.supports.iter().map(|s| s.iter().map(|&v| self.vertices[v as usize].mask()).collect()).collect()
    }

    /// No support contains another.
    pub fn is_minimal(&self) -> bool {
        let set: HashSet<&[u32]> = self.supports.iter().map(|s| s.as_slice()).collect();
        self.supports.iter().all(|s| !has_proper_subsupport(s, &set))
    }

    /// The `hkg` text export: a header line, one line per vertex (1-based
    /// elements), one line per support (0-based vertex indices).
    pub fn to_hkg(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "hkg {} {} {} {} {}", self.n, self.k, self.r, self.vertices.len(), self.supports.len());
        for v in &self.vertices {
            let elems: Vec<String> = v.elements().map(|e| e.to_string()).collect();
            let _ = writeln!(out, "{}", elems.join(" "));
        }
        for s in &self.supports {
            let idx: Vec<String> = s.iter().map(|v| v.to_string()).collect();
            let _ = writeln!(out, "{}", idx.join(" "));
        }
        out
    }

    pub fn from_hkg(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        let header = lines.next().ok_or_else(|| Error::Parse("empty hkg input".into()))?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        if fields.len() != 6 || fields[0] != "hkg" {
            return Err(Error::Parse(format!("bad hkg header {header:?}")));
        }
        let num = |s: &str| s.parse::<u64>().map_err(|e| Error::Parse(format!("{s:?}: {e}")));
        let (n, k, r) = (num(fields[1])? as u32, num(fields[2])? as u32, num(fields[3])? as u32);
        let (nv, ns) = (num(fields[4])? as usize, num(fields[5])? as usize);
        let mut vertices = Vec::with_capacity(nv);
        for i in 0..nv {
            let line = lines.next().ok_or_else(|| Error::Parse(format!("missing vertex line {i}")))?;
            let elems = line.split_whitespace().map(|t| num(t).map(|x| x as u32)).collect::<Result<Vec<_>>>()?;
            vertices.push(KSubset::from_elements(n, &elems)?);
        }
        if vertices.windows(2).any(|w| w[0].mask() >= w[1].mask()) {
            return Err(Error::Parse("hkg vertices not in increasing mask order".into()));
        }
        let mut supports = Vec::with_capacity(ns);
        for i in 0..ns {
            let line = lines.next().ok_or_else(|| Error::Parse(format!("missing support line {i}")))?;
            let idx = line.split_whitespace().map(|t| num(t).map(|x| x as u32)).collect::<Result<Vec<_>>>()?;
            supports.push(idx);
        }
        if lines.any(|l| !l.trim().is_empty()) {
            return Err(Error::Parse("trailing content after hkg supports".into()));
        }
        Self::from_parts(n, k, r, None, vertices, supports)
    }
}

fn has_proper_subsupport(s: &[u32], set: &HashSet<&[u32]>) -> bool {
    let len = s.len();
    if len <= 2 {
        return false;
    }
    let full = (1u32 << len) - 1;
    let mut buf = Vec::with_capacity(len);
    for sub in 1..full {
        if sub.count_ones() < 2 {
            continue;
        }
        buf.clear();
        buf.extend((0..len).filter(|i| sub & (1 << i) != 0).map(|i| s[i]));
        if set.contains(buf.as_slice()) {
            return true;
        }
    }
    false
}

/// Drops every support that contains another one.
pub fn minimize_supports(mut supports: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
    for s in supports.iter_mut() {
        s.sort_unstable();
    }
    supports.sort();
    supports.dedup();
    let keep: Vec<bool> = {
        let set: HashSet<&[u32]> = supports.iter().map(|s| s.as_slice()).collect();
        supports.iter().map(|s| !has_proper_subsupport(s, &set)).collect()
    };
    supports.into_iter().zip(keep).filter_map(|(s, k)| k.then_some(s)).collect()
}

#[derive(Clone, Copy, Debug)]
pub struct BuildOptions {
    pub max_candidates: u64,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions { max_candidates: DEFAULT_SUPPORT_BUDGET }
    }
}

pub fn build_minimal_supports(spec: &HypergraphSpec) -> Result<Hypergraph> {
    build_minimal_supports_with(spec, BuildOptions::default())
}

pub fn build_minimal_supports_with(spec: &HypergraphSpec, opts: BuildOptions) -> Result<Hypergraph> {
    let vertices = enum_vertices(spec)?;
    let supports = match spec.caps() {
        None => disjoint_r_sets(&vertices, spec.r, opts.max_candidates)?,
        Some(sv) => capped_supports(&vertices, spec.r, sv, opts.max_candidates)?,
    };
    Hypergraph::from_parts(spec.n, spec.k, spec.r, Some(spec.clone()), vertices, supports)
}

/// All r-sets of pairwise disjoint vertices. They all have size r, so they are
/// automatically inclusion-minimal.
fn disjoint_r_sets(vertices: &[KSubset], r: u32, budget: u64) -> Result<Vec<Vec<u32>>> {
    let masks: Vec<u64> = vertices.iter().map(|v| v.mask()).collect();
    let mut out = Vec::new();
    let mut stack = Vec::with_capacity(r as usize);
    let mut count = 0u64;
    fn rec(
        start: usize,
        used: u64,
        r: usize,
        masks: &[u64],
        stack: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
        count: &mut u64,
        budget: u64,
    ) -> Result<()> {
        if stack.len() == r {
            *count += 1;
            if *count > budget {
                return Err(Error::BudgetExceeded { what: "support enumeration", reached: *count });
            }
            out.push(stack.clone());
            return Ok(());
        }
        let need = r - stack.len();
        if masks.len() < start + need {
            return Ok(());
        }
        for i in start..=masks.len() - need {
            if masks[i] & used == 0 {
                stack.push(i as u32);
                rec(i + 1, used | masks[i], r, masks, stack, out, count, budget)?;
                stack.pop();
            }
        }
        Ok(())
    }
    rec(0, 0, r as usize, &masks, &mut stack, &mut out, &mut count, budget)?;
    Ok(out)
}

/// Minimal supports under a cap vector: distinct-vertex sets of size 2..=r
/// carrying a feasible multiplicity assignment, minus supersets.
fn capped_supports(vertices: &[KSubset], r: u32, sv: &SVector, budget: u64) -> Result<Vec<Vec<u32>>> {
    let n = sv.len();
    let mut load = vec![0u32; n];
    let mut stack: Vec<u32> = Vec::with_capacity(r as usize);
    let mut found = Vec::new();
    let mut count = 0u64;

    struct Ctx<'a> {
        vertices: &'a [KSubset],
        r: usize,
        sv: &'a SVector,
        budget: u64,
    }

    // Extending a set only adds load, so a set whose all-ones load already
    // breaks a cap has no feasible superset; a feasible set's supersets are
    // never minimal. Both prune the walk.
    fn rec(
        ctx: &Ctx<'_>,
        start: usize,
        load: &mut [u32],
        stack: &mut Vec<u32>,
        found: &mut Vec<Vec<u32>>,
        count: &mut u64,
    ) -> Result<()> {
        if stack.len() >= 2 {
            *count += 1;
            if *count > ctx.budget {
                return Err(Error::BudgetExceeded { what: "support enumeration", reached: *count });
            }
            let sets: Vec<KSubset> = stack.iter().map(|&v| ctx.vertices[v as usize]).collect();
            if support_feasible(&sets, ctx.r as u32, ctx.sv).is_some() {
                found.push(stack.clone());
                return Ok(());
            }
        }
        if stack.len() == ctx.r {
            return Ok(());
        }
        for i in start..ctx.vertices.len() {
            let v = ctx.vertices[i];
            if v.elements().any(|e| load[(e - 1) as usize] + 1 > ctx.sv.cap(e)) {
                continue;
            }
            for e in v.elements() {
                load[(e - 1) as usize] += 1;
            }
            stack.push(i as u32);
            rec(ctx, i + 1, load, stack, found, count)?;
            stack.pop();
            for e in v.elements() {
                load[(e - 1) as usize] -= 1;
            }
        }
        Ok(())
    }

    let ctx = Ctx { vertices, r: r as usize, sv, budget };
    rec(&ctx, 0, &mut load, &mut stack, &mut found, &mut count)?;
    Ok(minimize_supports(found))
}

/// Minimal supports of every multiset of `r` vertices accepted by `rule`,
/// found by enumerating the multisets themselves.
pub fn supports_from_multiset_rule<F>(vertices: &[KSubset], r: u32, budget: u64, mut rule: F) -> Result<Vec<Vec<u32>>>
where
    F: FnMut(&[KSubset]) -> bool,
{
    let nv = vertices.len();
    let r = r as usize;
    if nv == 0 {
        return Ok(Vec::new());
    }
    let mut idx = vec![0usize; r];
    let mut supports = BTreeSet::new();
    let mut count = 0u64;
    let mut ms = vec![vertices[0]; r];
    loop {
        count += 1;
        if count > budget {
            return Err(Error::BudgetExceeded { what: "multiset enumeration", reached: count });
        }
        for (slot, &i) in ms.iter_mut().zip(&idx) {
            *slot = vertices[i];
        }
        if rule(&ms) {
            let mut s: Vec<u32> = idx.iter().map(|&i| i as u32).collect();
            s.dedup();
            if s.len() >= 2 {
                supports.insert(s);
            }
        }
        // next non-decreasing sequence
        let mut j = r;
        while j > 0 && idx[j - 1] == nv - 1 {
            j -= 1;
        }
        if j == 0 {
            break;
        }
        idx[j - 1] += 1;
        let v = idx[j - 1];
        for x in idx.iter_mut().skip(j) {
            *x = v;
        }
    }
    Ok(minimize_supports(supports.into_iter().collect()))
}

/// `KG^r_{s-1}(n,k)` built straight from the s-wise empty-intersection rule,
/// by enumerating every multiset of `r` vertices.
pub fn build_s_wise(n: u32, k: u32, r: u32, s: u32, budget: u64) -> Result<Hypergraph> {
    let spec = HypergraphSpec::kneser(n, k, r)?;
    let vertices = enum_vertices(&spec)?;
    let supports = supports_from_multiset_rule(&vertices, r, budget, |ms| s_wise_hyperedge(ms, s))?;
    Hypergraph::from_parts(n, k, r, None, vertices, supports)
}

/// Same vertex masks and same minimal supports (compared as sets of masks).
pub fn same_support_sets(a: &Hypergraph, b: &Hypergraph) -> bool {
    a.support_mask_sets() == b.support_mask_sets()
}

pub fn same_supports(spec1: &HypergraphSpec, spec2: &HypergraphSpec) -> Result<bool> {
    let a = build_minimal_supports(spec1)?;
    let b = build_minimal_supports(spec2)?;
    Ok(same_support_sets(&a, &b))
}

/// Whether the family's vertex set is made of k-subsets of `[n]` and its
/// edges are r pairwise disjoint vertices, i.e. it is an induced
/// subhypergraph of `KG^r(n,k)`.
pub fn is_kneser_subfamily(spec: &HypergraphSpec) -> bool {
    spec.caps().is_none() && spec.family != Family::SetSystem
}
