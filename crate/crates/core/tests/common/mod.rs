//! Brute-force oracles written straight from the definitions, sharing no
//! code with the library beyond reading spec fields.
#![allow(dead_code)]

use std::collections::BTreeSet;

use kneser_core::sets::elements_of;
use kneser_core::HypergraphSpec;

pub fn combinations(n: u32, k: u32) -> Vec<Vec<u32>> {
    fn go(start: u32, n: u32, k: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == k as usize {
            out.push(cur.clone());
            return;
        }
        for x in start..=n {
            cur.push(x);
            go(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, n, k, &mut Vec::new(), &mut out);
    out
}

pub fn oracle_vertices(spec: &HypergraphSpec) -> Vec<Vec<u32>> {
    let n = spec.n;
    let base: Vec<Vec<u32>> = match &spec.set_system {
        Some(sys) => sys.iter().map(|&m| elements_of(m).collect()).collect(),
        None => combinations(n, spec.k),
    };
    let parts = spec.partition.as_ref().map(|p| p.to_lists());
    let avoid: Option<Vec<u32>> = spec.avoid_a.map(|m| elements_of(m).collect());
    base.into_iter()
        .filter(|v| match &parts {
            Some(ps) => ps.iter().all(|p| v.iter().filter(|x| p.contains(x)).count() <= 1),
            None => true,
        })
        .filter(|v| match spec.stable_s {
            Some(s) => v.iter().all(|&a| {
                v.iter().all(|&b| {
                    let d = a.abs_diff(b);
                    a == b || d.min(n - d) >= s
                })
            }),
            None => true,
        })
        .filter(|v| match spec.wide_t {
            Some(t) => v.iter().max().unwrap() - v.iter().min().unwrap() + 1 > t,
            None => true,
        })
        .filter(|v| match &avoid {
            Some(a) => !v.iter().all(|x| a.contains(x)),
            None => true,
        })
        .collect()
}

/// Supports of every multiset of `r` vertices in which element `i` occurs at
/// most `cap(i)` times (cap 1 everywhere unless the spec has caps).
pub fn oracle_edges(spec: &HypergraphSpec, vertices: &[Vec<u32>]) -> BTreeSet<Vec<usize>> {
    let cap = |e: u32| spec.svector.as_ref().map_or(1, |s| s.caps()[e as usize - 1]);
    let mut out = BTreeSet::new();
    let mut cur = Vec::new();
    fn go(
        start: usize,
        r: usize,
        vertices: &[Vec<u32>],
        cur: &mut Vec<usize>,
        ok: &dyn Fn(&[usize]) -> bool,
        out: &mut BTreeSet<Vec<usize>>,
    ) {
        if cur.len() == r {
            if ok(cur) {
                let mut s = cur.clone();
                s.dedup();
                out.insert(s);
            }
            return;
        }
        for v in start..vertices.len() {
            cur.push(v);
            go(v, r, vertices, cur, ok, out);
            cur.pop();
        }
    }
    let ok =
        |ms: &[usize]| (1..=spec.n).all(|e| ms.iter().filter(|&&v| vertices[v].contains(&e)).count() as u32 <= cap(e));
    go(0, spec.r as usize, vertices, &mut cur, &ok, &mut out);
    out
}

/// Inclusion-minimal members of `edges`, as sets of vertex element lists.
pub fn minimal_supports(vertices: &[Vec<u32>], edges: &BTreeSet<Vec<usize>>) -> BTreeSet<Vec<Vec<u32>>> {
    edges
        .iter()
        .filter(|e| !edges.iter().any(|f| f.len() < e.len() && f.iter().all(|x| e.contains(x))))
        .map(|e| {
            let mut s: Vec<Vec<u32>> = e.iter().map(|&v| vertices[v].clone()).collect();
            s.sort();
            s
        })
        .collect()
}

pub fn is_proper(colors: &[u32], edges: &BTreeSet<Vec<usize>>) -> bool {
    edges.iter().all(|e| e.iter().any(|&v| colors[v] != colors[e[0]]))
}

/// Smallest `m` with a proper `m`-coloring, by trying every assignment in
/// canonical form (color `c` appears only after `1..c`).
pub fn brute_chi(num_vertices: usize, edges: &BTreeSet<Vec<usize>>) -> u32 {
    if num_vertices == 0 {
        return 0;
    }
    fn go(i: usize, m: u32, used: u32, colors: &mut Vec<u32>, edges: &BTreeSet<Vec<usize>>) -> bool {
        if i == colors.len() {
            return is_proper(colors, edges);
        }
        for c in 1..=m.min(used + 1) {
            colors[i] = c;
            if go(i + 1, m, used.max(c), colors, edges) {
                return true;
            }
        }
        false
    }
    (1..=num_vertices as u32)
        .find(|&m| go(0, m, 0, &mut vec![0; num_vertices], edges))
        .expect("all-distinct coloring is proper")
}

pub fn ceil_div(a: i64, b: i64) -> i64 {
    a.div_euclid(b) + i64::from(a.rem_euclid(b) != 0)
}

/// `b(r)` by trial division.
pub fn b_oracle(r: u64) -> u64 {
    let mut out = 1;
    let mut x = r;
    let mut p = 2;
    while x > 1 {
        while x % p == 0 {
            out *= if p == 2 { 2 } else { p - 1 };
            x /= p;
        }
        p += 1;
    }
    out
}
