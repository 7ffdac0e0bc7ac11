//! Exact hypergraph coloring: a coloring is proper when no minimal support is
//! monochromatic.
//!
//! The search colors one vertex at a time with forward checking: once every
//! vertex of a support but one carries color `c`, the last vertex loses `c`.
//! Colors above the largest one used so far are interchangeable, so only the
//! next fresh color is ever tried.

use std::sync::atomic::{AtomicU64, Ordering};

use serde::{Deserialize, Serialize};

use crate::bounds::{proven_lower_bound, BoundSource};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

/// A total map from vertex index to a color in `1..=m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Coloring {
    colors: Vec<u32>,
    m: u32,
}

impl Coloring {
    pub fn new(colors: Vec<u32>, m: u32) -> Result<Self> {
        if let Some(&bad) = colors.iter().find(|&&c| c == 0 || c > m) {
            return Err(Error::InvalidArgument(format!("color {bad} outside 1..={m}")));
        }
        Ok(Coloring { colors, m })
    }

    /// Palette size taken as the largest color present.
    pub fn from_colors(colors: Vec<u32>) -> Result<Self> {
        let m = colors.iter().copied().max().unwrap_or(0);
        Self::new(colors, m)
    }

    pub fn constant(len: usize) -> Self {
        Coloring { colors: vec![1; len], m: if len == 0 { 0 } else { 1 } }
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> u32 {
        self.colors[v]
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn num_colors_used(&self) -> u32 {
        let mut seen = vec![false; self.m as usize + 1];
        self.colors.iter().for_each(|&c| seen[c as usize] = true);
        seen.iter().filter(|&&b| b).count() as u32
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("coloring serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}

impl TryFrom<Vec<u32>> for Coloring {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Coloring::from_colors(v)
    }
}

impl From<Coloring> for Vec<u32> {
    fn from(c: Coloring) -> Self {
        c.colors
    }
}

fn check_len(coloring: &Coloring, hg: &Hypergraph) -> Result<()> {
    if coloring.len() != hg.num_vertices() {
        return Err(Error::LengthMismatch { expected: hg.num_vertices(), found: coloring.len() });
    }
    Ok(())
}

fn is_mono(support: &[u32], colors: &[u32]) -> bool {
    let c = colors[support[0] as usize];
    support[1..].iter().all(|&v| colors[v as usize] == c)
}

pub fn is_proper(coloring: &Coloring, hg: &Hypergraph) -> Result<bool> {
    check_len(coloring, hg)?;
    Ok(!hg.supports().iter().any(|s| is_mono(s, coloring.colors())))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonochromaticSupport {
    pub support: Vec<u32>,
    pub multiplicities: Option<Vec<u32>>,
    pub color: u32,
}

/// The lexicographically first monochromatic minimal support, with a
/// multiplicity vector realizing it as a hyperedge.
pub fn find_monochromatic_support(coloring: &Coloring, hg: &Hypergraph) -> Result<Option<MonochromaticSupport>> {
    check_len(coloring, hg)?;
    Ok(hg.supports().iter().find(|s| is_mono(s, coloring.colors())).map(|s| MonochromaticSupport {
        support: s.clone(),
        multiplicities: hg.multiplicities(s),
        color: coloring.color(s[0] as usize),
    }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VertexOrder {
    /// Descending support degree, ties by vertex index.
    Static,
    /// Most forbidden colors first, ties by the static order.
    Dynamic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Seeding {
    /// Start at the best proven lower bound for the spec's family.
    Proven,
    /// Start at one, so every lower bound is certified by search.
    Audit,
}

#[derive(Clone, Copy, Debug)]
pub struct SolverConfig {
    pub node_budget: u64,
    pub threads: usize,
    pub symmetry_breaking: bool,
    pub order: VertexOrder,
    pub seeding: Seeding,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            node_budget: DEFAULT_NODE_BUDGET,
            threads: 1,
            symmetry_breaking: true,
            order: VertexOrder::Dynamic,
            seeding: Seeding::Proven,
        }
    }
}

impl SolverConfig {
    pub fn audit() -> Self {
        SolverConfig { seeding: Seeding::Audit, ..Default::default() }
    }

    pub fn with_budget(mut self, nodes: u64) -> Self {
        self.node_budget = nodes;
        self
    }

    pub fn with_threads(mut self, threads: usize) -> Self {
        self.threads = threads.max(1);
        self
    }
}

struct Search<'a> {
    hg: &'a Hypergraph,
    m: u32,
    symmetry: bool,
    order: VertexOrder,
    static_order: Vec<u32>,
    rank: Vec<u32>,
    color: Vec<u32>,
    forbid: Vec<u32>,
    nforb: Vec<u32>,
    trail: Vec<(u32, u32)>,
    max_used: u32,
    colored: usize,
    nodes: u64,
    budget: u64,
    shared: Option<&'a AtomicU64>,
}

impl<'a> Search<'a> {
    fn new(hg: &'a Hypergraph, m: u32, cfg: &SolverConfig, budget: u64, shared: Option<&'a AtomicU64>) -> Self {
        let nv = hg.num_vertices();
        let mut static_order: Vec<u32> = (0..nv as u32).collect();
        static_order.sort_by_key(|&v| (std::cmp::Reverse(hg.incident(v as usize).len()), v));
        let mut rank = vec![0u32; nv];
        for (i, &v) in static_order.iter().enumerate() {
            rank[v as usize] = i as u32;
        }
        Search {
            hg,
            m,
            symmetry: cfg.symmetry_breaking,
            order: cfg.order,
            static_order,
            rank,
            color: vec![0; nv],
            forbid: vec![0; nv * (m as usize + 1)],
            nforb: vec![0; nv],
            trail: Vec::new(),
            max_used: 0,
            colored: 0,
            nodes: 0,
            budget,
            shared,
        }
    }

    #[inline]
    fn forbidden(&self, v: usize, c: u32) -> bool {
        self.forbid[v * (self.m as usize + 1) + c as usize] != 0
    }

    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        let total = match self.shared {
            Some(a) => a.fetch_add(1, Ordering::Relaxed) + 1,
            None => self.nodes,
        };
        if total > self.budget {
            return Err(Error::BudgetExceeded { what: "coloring search", reached: total });
        }
        Ok(())
    }

    /// Colors `v` with `c` and propagates. Returns false on a domain wipeout;
    /// the caller undoes either way.
    fn assign(&mut self, v: usize, c: u32) -> bool {
        self.color[v] = c;
        self.colored += 1;
        self.max_used = self.max_used.max(c);
        let stride = self.m as usize + 1;
        let mut ok = true;
        for &si in self.hg.incident(v) {
            let support = &self.hg.supports()[si as usize];
            let mut open = None;
            let mut n_open = 0;
            let mut mono = true;
            for &u in support {
                let cu = self.color[u as usize];
                if cu == 0 {
                    n_open += 1;
                    open = Some(u as usize);
                } else if cu != c {
                    mono = false;
                    break;
                }
            }
            if mono && n_open == 1 {
                let u = open.unwrap();
                let slot = &mut self.forbid[u * stride + c as usize];
                *slot += 1;
                if *slot == 1 {
                    self.nforb[u] += 1;
                    if self.nforb[u] == self.m {
                        ok = false;
                    }
                }
                self.trail.push((u as u32, c));
            }
            debug_assert!(!(mono && n_open == 0), "monochromatic support slipped through");
        }
        ok
    }

    fn undo(&mut self, v: usize, mark: usize, old_max: u32) {
        let stride = self.m as usize + 1;
        while self.trail.len() > mark {
            let (u, c) = self.trail.pop().unwrap();
            let slot = &mut self.forbid[u as usize * stride + c as usize];
            *slot -= 1;
            if *slot == 0 {
                self.nforb[u as usize] -= 1;
            }
        }
        self.color[v] = 0;
        self.colored -= 1;
        self.max_used = old_max;
    }

    fn select(&self) -> usize {
        match self.order {
            VertexOrder::Static => self.static_order[self.colored] as usize,
            VertexOrder::Dynamic => {
                let mut best = usize::MAX;
                let mut key = (0u32, u32::MAX);
                for v in 0..self.color.len() {
                    if self.color[v] != 0 {
                        continue;
                    }
                    let k = (self.nforb[v], self.rank[v]);
                    if best == usize::MAX || k.0 > key.0 || (k.0 == key.0 && k.1 < key.1) {
                        best = v;
                        key = k;
                    }
                }
                best
            }
        }
    }

    fn candidates(&self, v: usize) -> impl Iterator<Item = u32> + '_ {
        let top = if self.symmetry { self.m.min(self.max_used + 1) } else { self.m };
        (1..=top).filter(move |&c| !self.forbidden(v, c))
    }

    fn dfs(&mut self) -> Result<bool> {
        if self.colored == self.color.len() {
            return Ok(true);
        }
        let v = self.select();
        let cands: Vec<u32> = self.candidates(v).collect();
        for c in cands {
            self.tick()?;
            let mark = self.trail.len();
            let old_max = self.max_used;
            if self.assign(v, c) && self.dfs()? {
                return Ok(true);
            }
            self.undo(v, mark, old_max);
        }
        Ok(false)
    }

    /// Partial assignments reached at `depth`, in DFS order.
    fn frontier(&mut self, depth: usize, prefix: &mut Vec<(u32, u32)>, out: &mut Vec<Vec<(u32, u32)>>) {
        if prefix.len() == depth || self.colored == self.color.len() {
            out.push(prefix.clone());
            return;
        }
        let v = self.select();
        let cands: Vec<u32> = self.candidates(v).collect();
        for c in cands {
            let mark = self.trail.len();
            let old_max = self.max_used;
            if self.assign(v, c) {
                prefix.push((v as u32, c));
                self.frontier(depth, prefix, out);
                prefix.pop();
            }
            self.undo(v, mark, old_max);
        }
    }

    fn replay(&mut self, prefix: &[(u32, u32)]) -> bool {
        prefix.iter().all(|&(v, c)| self.assign(v as usize, c))
    }

    fn coloring(&self) -> Coloring {
        Coloring { colors: self.color.clone(), m: self.m }
    }
}

#[derive(Clone, Debug)]
pub struct ColorSearch {
    pub coloring: Option<Coloring>,
    pub nodes: u64,
}

/// Complete search for a proper `m`-coloring under `cfg.node_budget`.
pub fn search_m_coloring(hg: &Hypergraph, m: u32, cfg: &SolverConfig) -> Result<ColorSearch> {
    if m == 0 {
        return Err(Error::InvalidArgument("m must be at least 1".into()));
    }
    if hg.num_vertices() == 0 {
        return Ok(ColorSearch { coloring: Some(Coloring::new(Vec::new(), m)?), nodes: 0 });
    }
    if cfg.threads <= 1 {
        let mut s = Search::new(hg, m, cfg, cfg.node_budget, None);
        let found = s.dfs()?;
        return Ok(ColorSearch { coloring: found.then(|| s.coloring()), nodes: s.nodes });
    }
    parallel_search(hg, m, cfg)
}

fn parallel_search(hg: &Hypergraph, m: u32, cfg: &SolverConfig) -> Result<ColorSearch> {
    use rayon::prelude::*;

    let target = 16 * cfg.threads;
    let mut prefixes = Vec::new();
    for depth in 1..=8 {
        let mut s = Search::new(hg, m, cfg, u64::MAX, None);
        let mut out = Vec::new();
        s.frontier(depth, &mut Vec::new(), &mut out);
        prefixes = out;
        if prefixes.len() >= target {
            break;
        }
    }
    let counter = AtomicU64::new(0);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.threads)
        .build()
        .map_err(|e| Error::InvalidArgument(e.to_string()))?;
    let outcome = pool.install(|| {
        prefixes.par_iter().find_map_first(|prefix| {
            let mut s = Search::new(hg, m, cfg, cfg.node_budget, Some(&counter));
            if !s.replay(prefix) {
                return None;
            }
            match s.dfs() {
                Ok(true) => Some(Ok(s.coloring())),
                Ok(false) => None,
                Err(e) => Some(Err(e)),
            }
        })
    });
    let nodes = counter.load(Ordering::Relaxed);
    match outcome {
        None => Ok(ColorSearch { coloring: None, nodes }),
        Some(Ok(c)) => Ok(ColorSearch { coloring: Some(c), nodes }),
        Some(Err(e)) => Err(e),
    }
}

pub fn is_m_colorable(hg: &Hypergraph, m: u32, cfg: &SolverConfig) -> Result<Option<Coloring>> {
    Ok(search_m_coloring(hg, m, cfg)?.coloring)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChiResult {
    pub chi: u32,
    pub witness: Coloring,
    pub nodes: u64,
    pub seeded_lower_bound: u32,
    #[serde(skip)]
    pub seed_source: Option<BoundSource>,
}

impl ChiResult {
    /// Whether `chi - 1` colors were excluded by exhaustive search rather
    /// than by a proven bound.
    pub fn search_certified(&self) -> bool {
        self.seeded_lower_bound <= 1 || self.seeded_lower_bound < self.chi
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("result serializes")
    }
}

/// Outcome of an upward scan over palette sizes.
#[derive(Clone, Debug)]
pub enum ChiOutcome {
    Exact(ChiResult),
    /// The budget ran out while testing `m = refuted_below`; every smaller
    /// palette from the starting point was shown infeasible.
    Inconclusive {
        start: u32,
        refuted_below: u32,
        nodes: u64,
    },
}

/// Scans `m = start, start + 1, ...` until a proper coloring appears.
pub fn chromatic_scan(hg: &Hypergraph, start: u32, cfg: &SolverConfig) -> ChiOutcome {
    let nv = hg.num_vertices() as u32;
    if nv == 0 {
        return ChiOutcome::Exact(ChiResult {
            chi: 0,
            witness: Coloring::constant(0),
            nodes: 0,
            seeded_lower_bound: 0,
            seed_source: None,
        });
    }
    let start = start.max(1);
    let mut nodes = 0u64;
    let mut m = start;
    loop {
        let left = SolverConfig { node_budget: cfg.node_budget.saturating_sub(nodes), ..*cfg };
        match search_m_coloring(hg, m, &left) {
            Ok(ColorSearch { coloring: Some(witness), nodes: used }) => {
                return ChiOutcome::Exact(ChiResult {
                    chi: m,
                    witness,
                    nodes: nodes + used,
                    seeded_lower_bound: start,
                    seed_source: None,
                });
            }
            Ok(ColorSearch { coloring: None, nodes: used }) => {
                nodes += used;
                // All-distinct colors is always proper, so this ends by m = |V|.
                debug_assert!(m < nv.max(start));
                m += 1;
            }
            Err(Error::BudgetExceeded { reached, .. }) => {
                return ChiOutcome::Inconclusive { start, refuted_below: m, nodes: nodes + reached };
            }
            Err(_) => unreachable!("search only fails on budget"),
        }
    }
}

pub fn chromatic_number(hg: &Hypergraph) -> Result<ChiResult> {
    chromatic_number_with(hg, &SolverConfig::default())
}

/// Exact chromatic number. With [`Seeding::Proven`] the scan starts at the
/// best proven lower bound for the originating family.
pub fn chromatic_number_with(hg: &Hypergraph, cfg: &SolverConfig) -> Result<ChiResult> {
    let seed = match cfg.seeding {
        Seeding::Audit => None,
        Seeding::Proven => hg.spec().and_then(proven_lower_bound),
    };
    let start = seed.map(|b| b.value.max(1) as u32).unwrap_or(1);
    match chromatic_scan(hg, start, cfg) {
        ChiOutcome::Exact(mut r) => {
            r.seed_source = seed.filter(|b| b.value > 1).map(|b| b.source);
            Ok(r)
        }
        ChiOutcome::Inconclusive { nodes, .. } => {
            Err(Error::BudgetExceeded { what: "coloring search", reached: nodes })
        }
    }
}
