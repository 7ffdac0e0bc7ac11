//! Executable reductions between hypergraph families.
//!
//! * Pulling a coloring of `KG^r_s(n,k)` back to the transversal hypergraph
//!   `KG^r(N,k;P)` along the projection `f: [N] -> [n]` that collapses part
//!   `P_i` to `i`.
//! * Extracting `r1*r2` disjoint monochromatic `k`-sets from a coloring of
//!   `KG^{r1 r2}(n,k;R)` with too few colors, in two stages over `r2` and `r1`.
//! * Embedding a transversal hypergraph inside the `A`-avoiding one.

use std::collections::HashMap;

use serde::Serialize;

use crate::bounds::afl_lower;
use crate::error::{Error, Result};
use crate::hypergraph::{build_minimal_supports, enum_vertices, Hypergraph};
use crate::sets::{elements_of, k_subset_masks, KSubset, Partition, SVector};
use crate::solver::Coloring;
use crate::spec::{Family, HypergraphSpec};

/// The projection `[N] -> [n]` sending every element of part `P_i` to `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectionMap {
    partition: Partition,
    image: Vec<u32>,
}

impl ProjectionMap {
    pub fn new(partition: Partition) -> Self {
        let mut image = vec![0u32; partition.n() as usize + 1];
        for (i, &p) in partition.parts().iter().enumerate() {
            for e in elements_of(p) {
                image[e as usize] = i as u32 + 1;
            }
        }
        ProjectionMap { partition, image }
    }

    /// Consecutive blocks `P_j` of sizes `s_1, ..., s_n`.
    pub fn from_svector(svector: &SVector) -> Result<Self> {
        Ok(Self::new(Partition::consecutive(svector.caps())?))
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn source_n(&self) -> u32 {
        self.partition.n()
    }

    pub fn target_n(&self) -> u32 {
        self.partition.len() as u32
    }

    pub fn apply(&self, x: u32) -> u32 {
        self.image[x as usize]
    }
}

/// `f(sigma)`; its size equals `|sigma|` exactly when `sigma` is transversal.
pub fn project_set(sigma: &KSubset, pmap: &ProjectionMap) -> KSubset {
    let mask = sigma.elements().fold(0u64, |m, x| m | 1u64 << (pmap.apply(x) - 1));
    KSubset::new(mask, pmap.target_n()).expect("image of a nonempty set is nonempty")
}

#[derive(Clone, Debug)]
pub struct Pullback {
    pub target: Hypergraph,
    pub coloring: Coloring,
}

/// Pulls a coloring `c` of the source hypergraph (all `k`-subsets of `[n]`
/// under a cap vector) back to `KG^r(N,k;P)` by `c'(A) = c(f(A))`.
///
/// The source spec may be `KG` (all caps 1) or `KG_s`; part sizes of `pmap`
/// must equal the caps.
pub fn pullback_coloring(c: &Coloring, source: &HypergraphSpec, pmap: &ProjectionMap) -> Result<Pullback> {
    let caps = match source.family {
        Family::Kneser => SVector::uniform(source.n, 1, source.r)?,
        Family::Capped => source.svector.clone().expect("validated capped spec"),
        other => return Err(Error::InvalidArgument(format!("pullback needs a KG or KG_s source, got {other}"))),
    };
    let sizes: Vec<u32> = pmap.partition().parts().iter().map(|p| p.count_ones()).collect();
    if sizes != caps.caps() {
        return Err(Error::InvalidArgument(format!(
            "part sizes {sizes:?} do not match the cap vector {:?}",
            caps.caps()
        )));
    }
    let src_vertices = enum_vertices(source)?;
    if c.len() != src_vertices.len() {
        return Err(Error::LengthMismatch { expected: src_vertices.len(), found: c.len() });
    }
    let index: HashMap<u64, usize> = src_vertices.iter().enumerate().map(|(i, v)| (v.mask(), i)).collect();
    let target_spec = HypergraphSpec::transversal(pmap.source_n(), source.k, source.r, pmap.partition().clone())?;
    let target = build_minimal_supports(&target_spec)?;
    let colors = target.vertices().iter().map(|a| c.color(index[&project_set(a, pmap).mask()])).collect();
    Ok(Pullback { coloring: Coloring::new(colors, c.m())?, target })
}

/// One block `A` of the second stage together with the monochromatic
/// disjoint `r2`-tuple that fixed its color.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockColor {
    pub block: Vec<u32>,
    pub color: u32,
    pub tuple: Vec<Vec<u32>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InductionTrace {
    pub r1: u32,
    pub r2: u32,
    pub b1: u32,
    pub b2: u32,
    pub colors: u32,
    pub k1: u32,
    pub refinement: Vec<Vec<u32>>,
    /// The monochromatic disjoint `r1`-tuple of `K1`-sets under the induced
    /// coloring, with the tuples found inside each.
    pub blocks: Vec<BlockColor>,
    /// Number of `K1`-sets whose induced color was computed.
    pub blocks_colored: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InductionWitness {
    pub color: u32,
    pub sets: Vec<Vec<u32>>,
    pub trace: InductionTrace,
}

impl InductionWitness {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("witness serializes")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InductionOutcome {
    Witness(InductionWitness),
    /// No monochromatic hyperedge exists at all.
    ColoringIsProper,
}

#[derive(Clone, Copy, Debug)]
pub struct InductionParams {
    pub n: u32,
    pub k: u32,
    pub r1: u32,
    pub r2: u32,
    pub b1: u32,
    pub b2: u32,
    pub budget: u64,
}

/// Refines each part into consecutive (in element order) chunks of size at
/// most `b`.
pub fn refine_partition(p: &Partition, b: u32) -> Result<Partition> {
    let mut parts = Vec::new();
    for &part in p.parts() {
        let elems: Vec<u32> = elements_of(part).collect();
        for chunk in elems.chunks(b as usize) {
            parts.push(chunk.iter().fold(0u64, |m, &e| m | 1u64 << (e - 1)));
        }
    }
    Partition::new(p.n(), parts)
}

struct Extractor<'a> {
    k: u32,
    r2: u32,
    part_r: &'a Partition,
    color_of: HashMap<u64, u32>,
    memo: HashMap<u64, Option<BlockColor>>,
    steps: u64,
    budget: u64,
}

impl Extractor<'_> {
    fn tick(&mut self) -> Result<()> {
        self.steps += 1;
        if self.steps > self.budget {
            return Err(Error::BudgetExceeded { what: "prime induction", reached: self.steps });
        }
        Ok(())
    }

    /// First pairwise disjoint monochromatic `r2`-tuple of `k`-sets inside
    /// `block`, each transversal to `R`, in lexicographic order of mask tuples.
    fn stage_one(&mut self, block: u64) -> Result<Option<BlockColor>> {
        if let Some(hit) = self.memo.get(&block) {
            return Ok(hit.clone());
        }
        let elems: Vec<u32> = elements_of(block).collect();
        let mut sets: Vec<u64> = Vec::new();
        for local in k_subset_masks(elems.len() as u32, self.k) {
            let mask = elements_of(local).fold(0u64, |m, i| m | 1u64 << (elems[i as usize - 1] - 1));
            if self.part_r.is_transversal(mask) {
                sets.push(mask);
            }
        }
        sets.sort_unstable();
        let found = self.first_tuple_any_color(&sets)?;
        let res = found.map(|(color, tuple)| BlockColor {
            block: elems.clone(),
            color,
            tuple: tuple.iter().map(|&m| elements_of(m).collect()).collect(),
        });
        self.memo.insert(block, res.clone());
        Ok(res)
    }

    fn first_tuple_any_color(&mut self, sets: &[u64]) -> Result<Option<(u32, Vec<u64>)>> {
        let mut chosen = Vec::new();
        for (i, &first) in sets.iter().enumerate() {
            let color = self.color_of[&first];
            let same: Vec<u64> = sets[i + 1..].iter().copied().filter(|s| self.color_of[s] == color).collect();
            chosen.clear();
            chosen.push(first);
            if self.disjoint_tuple(&same, 0, first, &mut chosen)? {
                return Ok(Some((color, chosen)));
            }
        }
        Ok(None)
    }

    fn disjoint_tuple(&mut self, pool: &[u64], from: usize, used: u64, chosen: &mut Vec<u64>) -> Result<bool> {
        if chosen.len() == self.r2 as usize {
            return Ok(true);
        }
        for i in from..pool.len() {
            self.tick()?;
            if pool[i] & used == 0 {
                chosen.push(pool[i]);
                if self.disjoint_tuple(pool, i + 1, used | pool[i], chosen)? {
                    return Ok(true);
                }
                chosen.pop();
            }
        }
        Ok(false)
    }
}

/// Follows the prime-divisor induction on a concrete coloring `c` of
/// `KG^{r1 r2}(n,k;R)` (indexed like that hypergraph's vertex list) using
/// fewer colors than `ceil((n - r1 r2 (k-1)) / (r1 r2 - 1))`.
///
/// Stage one colors every `K1`-set `A`, `K1 = L(r2-1) + r2(k-1) + 1`, by its
/// first monochromatic disjoint `r2`-tuple. Stage two finds the first
/// disjoint `r1`-tuple of `K1`-sets transversal to the refinement of `R` with
/// equal induced colors. "First" is lexicographic over tuples of set masks,
/// i.e. vertex order. The roles are oriented so that `r1 <= r2`.
pub fn prime_induction_refute(
    c: &Coloring,
    partition: &Partition,
    params: InductionParams,
) -> Result<InductionOutcome> {
    let InductionParams { n, k, budget, .. } = params;
    let (r1, b1, r2, b2) = if params.r1 <= params.r2 {
        (params.r1, params.b1, params.r2, params.b2)
    } else {
        (params.r2, params.b2, params.r1, params.b1)
    };
    if r1 < 2 || b1 < 1 || b2 < 1 {
        return Err(Error::InvalidArgument("need r1, r2 >= 2 and b1, b2 >= 1".into()));
    }
    let r = r1 * r2;
    let l = c.m();
    if partition.n() != n {
        return Err(Error::InvalidArgument(format!("partition is over [{}], expected [{n}]", partition.n())));
    }
    if n < r * k {
        return Err(Error::HypothesisViolated(format!("n={n} < r1*r2*k={}", r * k)));
    }
    let bound = afl_lower(n, k, r);
    if l < 1 || l as i64 >= bound {
        return Err(Error::HypothesisViolated(format!("L={l} is not below the bound {bound}")));
    }
    if let Some(big) = partition.parts().iter().find(|p| p.count_ones() > b1 * b2) {
        return Err(Error::HypothesisViolated(format!("part of size {} exceeds b1*b2={}", big.count_ones(), b1 * b2)));
    }
    let spec = HypergraphSpec::transversal(n, k, r, partition.clone())?;
    let vertices = enum_vertices(&spec)?;
    if vertices.len() != c.len() {
        return Err(Error::LengthMismatch { expected: vertices.len(), found: c.len() });
    }
    let color_of: HashMap<u64, u32> = vertices.iter().zip(c.colors()).map(|(v, &col)| (v.mask(), col)).collect();

    let k1 = l * (r2 - 1) + r2 * (k - 1) + 1;
    let refinement = refine_partition(partition, b1)?;
    let mut ex = Extractor { k, r2, part_r: partition, color_of, memo: HashMap::new(), steps: 0, budget };

    let blocks: Vec<u64> = k_subset_masks(n, k1).filter(|&a| refinement.is_transversal(a)).collect();
    let mut chosen: Vec<(u64, BlockColor)> = Vec::new();
    let found = stage_two(&mut ex, &blocks, 0, 0, r1 as usize, &mut chosen)?;
    if !found {
        return if direct_monochromatic_hyperedge(&vertices, c, r, budget)? {
            Err(Error::HypothesisViolated(
                "extraction found no hyperedge although one exists; a hypothesized bound fails on this instance".into(),
            ))
        } else {
            Ok(InductionOutcome::ColoringIsProper)
        };
    }
    let color = chosen[0].1.color;
    let sets: Vec<Vec<u32>> = chosen.iter().flat_map(|(_, b)| b.tuple.clone()).collect();
    Ok(InductionOutcome::Witness(InductionWitness {
        color,
        sets,
        trace: InductionTrace {
            r1,
            r2,
            b1,
            b2,
            colors: l,
            k1,
            refinement: refinement.to_lists(),
            blocks: chosen.into_iter().map(|(_, b)| b).collect(),
            blocks_colored: ex.memo.len(),
        },
    }))
}

fn stage_two(
    ex: &mut Extractor,
    blocks: &[u64],
    from: usize,
    used: u64,
    want: usize,
    chosen: &mut Vec<(u64, BlockColor)>,
) -> Result<bool> {
    if chosen.len() == want {
        return Ok(true);
    }
    for i in from..blocks.len() {
        ex.tick()?;
        let a = blocks[i];
        if a & used != 0 {
            continue;
        }
        let Some(bc) = ex.stage_one(a)? else {
            return Err(Error::HypothesisViolated(format!(
                "block {:?} holds no monochromatic disjoint {}-tuple",
                elements_of(a).collect::<Vec<_>>(),
                ex.r2
            )));
        };
        if chosen.first().is_some_and(|(_, first)| first.color != bc.color) {
            continue;
        }
        chosen.push((a, bc));
        if stage_two(ex, blocks, i + 1, used | a, want, chosen)? {
            return Ok(true);
        }
        chosen.pop();
    }
    Ok(false)
}

fn direct_monochromatic_hyperedge(vertices: &[KSubset], c: &Coloring, r: u32, budget: u64) -> Result<bool> {
    let mut steps = 0u64;
    fn go(pool: &[u64], from: usize, used: u64, left: u32, steps: &mut u64, budget: u64) -> Result<bool> {
        if left == 0 {
            return Ok(true);
        }
        for i in from..pool.len() {
            *steps += 1;
            if *steps > budget {
                return Err(Error::BudgetExceeded { what: "prime induction", reached: *steps });
            }
            if pool[i] & used == 0 && go(pool, i + 1, used | pool[i], left - 1, steps, budget)? {
                return Ok(true);
            }
        }
        Ok(false)
    }
    for color in 1..=c.m() {
        let pool: Vec<u64> =
            vertices.iter().zip(c.colors()).filter(|(_, &x)| x == color).map(|(v, _)| v.mask()).collect();
        if go(&pool, 0, 0, r, &mut steps, budget)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Re-checks a witness and its trace against the coloring. Returns a
/// description of the first inconsistency.
pub fn validate_induction_witness(
    w: &InductionWitness,
    c: &Coloring,
    n: u32,
    k: u32,
    partition: &Partition,
) -> std::result::Result<(), String> {
    let t = &w.trace;
    let r = t.r1 * t.r2;
    let spec = HypergraphSpec::transversal(n, k, r, partition.clone()).map_err(|e| e.to_string())?;
    let vertices = enum_vertices(&spec).map_err(|e| e.to_string())?;
    let color_of: HashMap<u64, u32> = vertices.iter().zip(c.colors()).map(|(v, &col)| (v.mask(), col)).collect();
    let mask = |s: &[u32]| s.iter().fold(0u64, |m, &e| m | 1u64 << (e - 1));

    if t.r1 > t.r2 {
        return Err("stages not oriented with r1 <= r2".into());
    }
    if t.colors != c.m() || t.k1 != t.colors * (t.r2 - 1) + t.r2 * (k - 1) + 1 {
        return Err(format!("K1={} inconsistent with L={} ", t.k1, t.colors));
    }
    let refinement = Partition::from_lists(n, &t.refinement).map_err(|e| e.to_string())?;
    for &rp in refinement.parts() {
        if rp.count_ones() > t.b1 || !partition.parts().iter().any(|&p| rp & !p == 0) {
            return Err("refinement part too large or straddles R".into());
        }
    }
    for &p in partition.parts() {
        if refinement.parts().iter().filter(|&&rp| rp & p != 0).count() as u32 > t.b2 {
            return Err("a part of R was split into more than b2 pieces".into());
        }
    }
    if t.blocks.len() != t.r1 as usize {
        return Err("stage two did not produce r1 blocks".into());
    }
    let mut used = 0u64;
    for b in &t.blocks {
        let a = mask(&b.block);
        if b.block.len() as u32 != t.k1 || !refinement.is_transversal(a) || a & used != 0 {
            return Err(format!("block {:?} is not a valid disjoint K1-set", b.block));
        }
        used |= a;
        if b.color != w.color || b.tuple.len() != t.r2 as usize {
            return Err(format!("block {:?} has wrong color or tuple length", b.block));
        }
        let mut inner = 0u64;
        for s in &b.tuple {
            let m = mask(s);
            if s.len() as u32 != k || m & !a != 0 || m & inner != 0 {
                return Err(format!("tuple set {s:?} not a disjoint k-subset of its block"));
            }
            inner |= m;
            if color_of.get(&m) != Some(&b.color) {
                return Err(format!("tuple set {s:?} is not a vertex of color {}", b.color));
            }
        }
    }
    let flat: Vec<Vec<u32>> = t.blocks.iter().flat_map(|b| b.tuple.clone()).collect();
    if flat != w.sets || w.sets.len() as u32 != r {
        return Err("assembled sets differ from the trace".into());
    }
    let mut all = 0u64;
    for s in &w.sets {
        let m = mask(s);
        if m & all != 0 || color_of.get(&m) != Some(&w.color) {
            return Err(format!("set {s:?} overlaps another or has the wrong color"));
        }
        all |= m;
    }
    Ok(())
}

/// A partition of `[n]` whose first `k-1` parts have size `b` and cover `A`
/// (elements of `A` first, then the smallest elements outside `A`), followed
/// by consecutive blocks of size at most `b` on the remaining elements.
///
/// Every `k`-set transversal to it has an element outside the first `k-1`
/// parts, hence is not contained in `A`.
pub fn avoid_a_embed(n: u32, k: u32, r: u32, a: &[u32], b: u32) -> Result<HypergraphSpec> {
    let a_mask = a.iter().try_fold(0u64, |m, &e| {
        if e == 0 || e > n {
            Err(Error::InvalidArgument(format!("element {e} of A outside [{n}]")))
        } else {
            Ok(m | 1u64 << (e - 1))
        }
    })?;
    let a_size = a_mask.count_ones();
    if b == 0 || a_size as u64 > b as u64 * (k as u64).saturating_sub(1) {
        return Err(Error::InvalidArgument(format!("|A|={a_size} exceeds b(k-1)={}", b * k.saturating_sub(1))));
    }
    let head_len = (b * (k - 1)) as usize;
    if head_len > n as usize {
        return Err(Error::InvalidArgument(format!("b(k-1)={head_len} exceeds n={n}")));
    }
    let mut order: Vec<u32> = elements_of(a_mask).collect();
    order.extend((1..=n).filter(|e| a_mask & 1u64 << (e - 1) == 0));
    let (head, tail) = order.split_at(head_len);
    let mut lists: Vec<Vec<u32>> = head.chunks(b as usize).map(|c| c.to_vec()).collect();
    let mut tail = tail.to_vec();
    tail.sort_unstable();
    lists.extend(tail.chunks(b as usize).map(|c| c.to_vec()));
    HypergraphSpec::transversal(n, k, r, Partition::from_lists(n, &lists)?)
}

/// `sub` is an induced subhypergraph of `sup` on the same ground set: every
/// vertex and every support of `sub` occurs in `sup`.
pub fn is_sub_hypergraph(sub: &Hypergraph, sup: &Hypergraph) -> bool {
    let sup_supports = sup.support_mask_sets();
    sub.vertices().iter().all(|v| sup.vertex_index(v).is_some())
        && sub.support_mask_sets().iter().all(|s| sup_supports.contains(s))
}
