//! Bitmask-backed finite sets over a ground set `[n] = {1, ..., n}`.
//!
//! Element `i` is stored in bit `i - 1`, so masks order the same way as the
//! colex order on subsets. Ground sets are limited to 64 elements.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

pub const MAX_GROUND: u32 = 64;

#[inline]
pub fn ground_mask(n: u32) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Mask holding the 1-based elements of `elems`.
pub fn mask_of(elems: &[u32]) -> u64 {
    elems.iter().fold(0u64, |m, &e| m | (1u64 << (e - 1)))
}

/// 1-based elements of a mask in increasing order.
pub fn elements_of(mask: u64) -> impl Iterator<Item = u32> {
    let mut rest = mask;
    std::iter::from_fn(move || {
        if rest == 0 {
            None
        } else {
            let tz = rest.trailing_zeros();
            rest &= rest - 1;
            Some(tz + 1)
        }
    })
}

/// A nonempty subset of `[n]`. The cardinality is the popcount of the mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KSubset {
    mask: u64,
    n: u32,
}

impl KSubset {
    pub fn new(mask: u64, n: u32) -> Result<Self> {
        if n == 0 || n > MAX_GROUND {
            return Err(Error::InvalidArgument(format!("ground set size {n} out of range 1..=64")));
        }
        if mask == 0 {
            return Err(Error::InvalidArgument("empty subset".into()));
        }
        if mask & !ground_mask(n) != 0 {
            return Err(Error::InvalidArgument(format!("subset {mask:#x} leaves [{n}]")));
        }
        Ok(KSubset { mask, n })
    }

    /// Builds a subset from 1-based elements. Duplicates are rejected.
    pub fn from_elements(n: u32, elems: &[u32]) -> Result<Self> {
        let mut mask = 0u64;
        for &e in elems {
            if e == 0 || e > n {
                return Err(Error::InvalidArgument(format!("element {e} not in [{n}]")));
            }
            let bit = 1u64 << (e - 1);
            if mask & bit != 0 {
                return Err(Error::InvalidArgument(format!("element {e} repeated")));
            }
            mask |= bit;
        }
        Self::new(mask, n)
    }

    #[inline]
    pub fn mask(&self) -> u64 {
        self.mask
    }

    #[inline]
    pub fn n(&self) -> u32 {
        self.n
    }

    #[inline]
    pub fn k(&self) -> u32 {
        self.mask.count_ones()
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        elements_of(self.mask)
    }

    pub fn to_vec(&self) -> Vec<u32> {
        self.elements().collect()
    }

    #[inline]
    pub fn min_element(&self) -> u32 {
        self.mask.trailing_zeros() + 1
    }

    #[inline]
    pub fn max_element(&self) -> u32 {
        64 - self.mask.leading_zeros()
    }

    #[inline]
    pub fn contains(&self, e: u32) -> bool {
        e >= 1 && e <= self.n && self.mask & (1u64 << (e - 1)) != 0
    }

    #[inline]
    pub fn is_disjoint(&self, other: &KSubset) -> bool {
        self.mask & other.mask == 0
    }

    #[inline]
    pub fn is_subset_of_mask(&self, mask: u64) -> bool {
        self.mask & !mask == 0
    }
}

impl fmt::Debug for KSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elements().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// All `k`-subsets of `[n]` as masks, in increasing mask order (Gosper's hack).
pub fn k_subset_masks(n: u32, k: u32) -> impl Iterator<Item = u64> {
    let limit = if n >= 64 { None } else { Some(1u64 << n) };
    let mut next = if k == 0 || k > n {
        None
    } else if k == 64 {
        Some(u64::MAX)
    } else {
        Some((1u64 << k) - 1)
    };
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let (r, overflow) = cur.overflowing_add(c);
            if overflow || r == 0 {
                None
            } else {
                let nx = (((r ^ cur) >> 2) / c) | r;
                match limit {
                    Some(l) if nx >= l => None,
                    _ => Some(nx),
                }
            }
        };
        Some(cur)
    })
}

/// Cyclic distance between two 1-based elements of `[n]`.
#[inline]
pub fn cyclic_distance(a: u32, b: u32, n: u32) -> u32 {
    let d = a.abs_diff(b);
    d.min(n - d)
}

/// A partition of `[n]` into disjoint nonempty parts, kept in the given order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u64>,
    n: u32,
}

impl Partition {
    pub fn new(n: u32, parts: Vec<u64>) -> Result<Self> {
        if n == 0 || n > MAX_GROUND {
            return Err(Error::InvalidArgument(format!("ground set size {n} out of range 1..=64")));
        }
        let mut seen = 0u64;
        for &p in &parts {
            if p == 0 {
                return Err(Error::InvalidArgument("empty part".into()));
            }
            if p & !ground_mask(n) != 0 {
                return Err(Error::InvalidArgument(format!("part leaves [{n}]")));
            }
            if p & seen != 0 {
                return Err(Error::InvalidArgument("parts overlap".into()));
            }
            seen |= p;
        }
        if seen != ground_mask(n) {
            return Err(Error::InvalidArgument(format!("parts do not cover [{n}]")));
        }
        Ok(Partition { parts, n })
    }

    pub fn from_lists(n: u32, lists: &[Vec<u32>]) -> Result<Self> {
        let mut parts = Vec::with_capacity(lists.len());
        for l in lists {
            let s = KSubset::from_elements(n, l)?;
            parts.push(s.mask());
        }
        Self::new(n, parts)
    }

    /// Consecutive blocks with the given sizes: `{1..s1}, {s1+1..s1+s2}, ...`.
    pub fn consecutive(sizes: &[u32]) -> Result<Self> {
        let n: u32 = sizes.iter().sum();
        let mut parts = Vec::with_capacity(sizes.len());
        let mut start = 0u32;
        for &s in sizes {
            if s == 0 {
                return Err(Error::InvalidArgument("zero block size".into()));
            }
            parts.push(ground_mask(start + s) & !ground_mask(start));
            start += s;
        }
        Self::new(n, parts)
    }

    /// Consecutive blocks of size `block` with a shorter final block if needed.
    pub fn consecutive_max_blocks(n: u32, block: u32) -> Result<Self> {
        if block == 0 {
            return Err(Error::InvalidArgument("zero block size".into()));
        }
        let mut sizes = vec![block; (n / block) as usize];
        if n % block != 0 {
            sizes.push(n % block);
        }
        Self::consecutive(&sizes)
    }

    pub fn singletons(n: u32) -> Result<Self> {
        Self::consecutive(&vec![1; n as usize])
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn max_part_size(&self) -> u32 {
        self.parts.iter().map(|p| p.count_ones()).max().unwrap_or(0)
    }

    /// Index of the part holding the 1-based element `e`.
    pub fn part_of(&self, e: u32) -> Option<usize> {
        if e == 0 || e > self.n {
            return None;
        }
        let bit = 1u64 << (e - 1);
        self.parts.iter().position(|&p| p & bit != 0)
    }

    /// True when `mask` meets every part at most once.
    pub fn is_transversal(&self, mask: u64) -> bool {
        self.parts.iter().all(|&p| (p & mask).count_ones() <= 1)
    }

    pub fn to_lists(&self) -> Vec<Vec<u32>> {
        self.parts.iter().map(|&p| elements_of(p).collect()).collect()
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lists = self.to_lists();
        let strs: Vec<String> =
            lists.iter().map(|l| l.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(",")).collect();
        write!(f, "[{}]", strs.join(" | "))
    }
}

impl Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_lists().serialize(s)
    }
}

impl Serialize for SVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.caps.serialize(s)
    }
}

/// Per-element multiplicity caps `s = (s_1, ..., s_n)` with `1 <= s_i <= r - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SVector {
    caps: Vec<u32>,
    r: u32,
}

impl SVector {
    pub fn new(caps: Vec<u32>, r: u32) -> Result<Self> {
        if r < 2 {
            return Err(Error::InvalidArgument(format!("arity r={r} must be at least 2")));
        }
        if caps.is_empty() {
            return Err(Error::InvalidArgument("empty cap vector".into()));
        }
        if let Some(bad) = caps.iter().find(|&&c| c < 1 || c > r - 1) {
            return Err(Error::InvalidArgument(format!("cap {bad} outside [1, {}]", r - 1)));
        }
        Ok(SVector { caps, r })
    }

    pub fn uniform(n: u32, cap: u32, r: u32) -> Result<Self> {
        Self::new(vec![cap; n as usize], r)
    }

    pub fn caps(&self) -> &[u32] {
        &self.caps
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn len(&self) -> usize {
        self.caps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.caps.is_empty()
    }

    pub fn sum(&self) -> u64 {
        self.caps.iter().map(|&c| c as u64).sum()
    }

    pub fn max_cap(&self) -> u32 {
        self.caps.iter().copied().max().unwrap_or(0)
    }

    /// The common cap if all caps agree.
    pub fn uniform_cap(&self) -> Option<u32> {
        let first = *self.caps.first()?;
        self.caps.iter().all(|&c| c == first).then_some(first)
    }

    /// Cap of the 1-based element `e`.
    #[inline]
    pub fn cap(&self, e: u32) -> u32 {
        self.caps[(e - 1) as usize]
    }
}
