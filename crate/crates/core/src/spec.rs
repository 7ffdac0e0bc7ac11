//! Declarative description of a hypergraph family instance and its JSON form.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sets::{mask_of, KSubset, Partition, SVector, MAX_GROUND};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    /// All k-subsets, hyperedges are r pairwise disjoint sets.
    #[serde(rename = "KG")]
    Kneser,
    /// All k-subsets, multiset hyperedges under per-element caps.
    #[serde(rename = "KG_s")]
    Capped,
    /// k-subsets meeting each part of a partition at most once.
    #[serde(rename = "KG_partition")]
    Transversal,
    /// k-subsets whose elements are pairwise at cyclic distance >= s.
    #[serde(rename = "KG_stable")]
    Stable,
    /// k-subsets not contained in any window of t consecutive elements.
    #[serde(rename = "KG_wide")]
    Wide,
    /// k-subsets not contained in a fixed set A.
    #[serde(rename = "KG_avoidA")]
    AvoidA,
    /// An explicit system of subsets.
    #[serde(rename = "KG_setsystem")]
    SetSystem,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Kneser => "KG",
            Family::Capped => "KG_s",
            Family::Transversal => "KG_partition",
            Family::Stable => "KG_stable",
            Family::Wide => "KG_wide",
            Family::AvoidA => "KG_avoidA",
            Family::SetSystem => "KG_setsystem",
        }
    }

    pub fn parse(s: &str) -> Result<Family> {
        Ok(match s {
            "KG" => Family::Kneser,
            "KG_s" => Family::Capped,
            "KG_partition" => Family::Transversal,
            "KG_stable" => Family::Stable,
            "KG_wide" => Family::Wide,
            "KG_avoidA" => Family::AvoidA,
            "KG_setsystem" => Family::SetSystem,
            other => return Err(Error::InvalidSpec(format!("unknown family {other:?}"))),
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A validated hypergraph family instance.
///
/// Each family requires its own parameter. `Wide` additionally accepts an
/// optional partition and cap vector, and `SetSystem` an optional partition
/// and cap vector; every other optional field must be absent.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "SpecDoc", into = "SpecDoc")]
pub struct HypergraphSpec {
    pub family: Family,
    pub n: u32,
    pub k: u32,
    pub r: u32,
    pub svector: Option<SVector>,
    pub partition: Option<Partition>,
    pub stable_s: Option<u32>,
    pub wide_t: Option<u32>,
    pub avoid_a: Option<u64>,
    pub set_system: Option<Vec<u64>>,
}

impl HypergraphSpec {
    fn bare(family: Family, n: u32, k: u32, r: u32) -> Self {
        HypergraphSpec {
            family,
            n,
            k,
            r,
            svector: None,
            partition: None,
            stable_s: None,
            wide_t: None,
            avoid_a: None,
            set_system: None,
        }
    }

    pub fn kneser(n: u32, k: u32, r: u32) -> Result<Self> {
        Self::bare(Family::Kneser, n, k, r).validated()
    }

    pub fn capped(n: u32, k: u32, r: u32, svector: SVector) -> Result<Self> {
        let mut s = Self::bare(Family::Capped, n, k, r);
        s.svector = Some(svector);
        s.validated()
    }

    /// `KG^r_{s-1}(n,k)`: uniform caps `s - 1`.
    pub fn capped_uniform(n: u32, k: u32, r: u32, s: u32) -> Result<Self> {
        if s < 2 {
            return Err(Error::InvalidSpec(format!("s={s} must be at least 2")));
        }
        Self::capped(n, k, r, SVector::uniform(n, s - 1, r)?)
    }

    pub fn transversal(n: u32, k: u32, r: u32, partition: Partition) -> Result<Self> {
        let mut s = Self::bare(Family::Transversal, n, k, r);
        s.partition = Some(partition);
        s.validated()
    }

    pub fn stable(n: u32, k: u32, r: u32, stable_s: u32) -> Result<Self> {
        let mut s = Self::bare(Family::Stable, n, k, r);
        s.stable_s = Some(stable_s);
        s.validated()
    }

    pub fn wide(n: u32, k: u32, r: u32, t: u32) -> Result<Self> {
        let mut s = Self::bare(Family::Wide, n, k, r);
        s.wide_t = Some(t);
        s.validated()
    }

    pub fn wide_transversal(n: u32, k: u32, r: u32, t: u32, partition: Partition) -> Result<Self> {
        let mut s = Self::bare(Family::Wide, n, k, r);
        s.wide_t = Some(t);
        s.partition = Some(partition);
        s.validated()
    }

    pub fn wide_capped(n: u32, k: u32, r: u32, t: u32, svector: SVector) -> Result<Self> {
        let mut s = Self::bare(Family::Wide, n, k, r);
        s.wide_t = Some(t);
        s.svector = Some(svector);
        s.validated()
    }

    pub fn avoiding(n: u32, k: u32, r: u32, avoid: &[u32]) -> Result<Self> {
        let mut s = Self::bare(Family::AvoidA, n, k, r);
        if avoid.iter().any(|&e| e == 0 || e > n.min(MAX_GROUND)) {
            return Err(Error::InvalidSpec(format!("avoided set leaves [{n}]")));
        }
        s.avoid_a = Some(mask_of(avoid));
        s.validated()
    }

    pub fn set_system(n: u32, k: u32, r: u32, sets: Vec<KSubset>) -> Result<Self> {
        let mut s = Self::bare(Family::SetSystem, n, k, r);
        s.set_system = Some(sets.iter().map(|x| x.mask()).collect());
        s.validated()
    }

    pub fn with_svector(mut self, svector: SVector) -> Result<Self> {
        self.svector = Some(svector);
        self.validated()
    }

    pub fn with_partition(mut self, partition: Partition) -> Result<Self> {
        self.partition = Some(partition);
        self.validated()
    }

    pub fn validated(self) -> Result<Self> {
        self.validate()?;
        Ok(self)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidSpec(m));
        if self.r < 2 {
            return bad(format!("r={} must be at least 2", self.r));
        }
        if self.k < 1 || self.k > self.n {
            return bad(format!("need n >= k >= 1, got n={} k={}", self.n, self.k));
        }
        if self.n > MAX_GROUND {
            return bad(format!("n={} exceeds the 64-element limit", self.n));
        }
        let (req_sv, req_p, req_stab, req_wide, req_a, req_sys) = match self.family {
            Family::Kneser => (false, false, false, false, false, false),
            Family::Capped => (true, false, false, false, false, false),
            Family::Transversal => (false, true, false, false, false, false),
            Family::Stable => (false, false, true, false, false, false),
            Family::Wide => (false, false, false, true, false, false),
            Family::AvoidA => (false, false, false, false, true, false),
            Family::SetSystem => (false, false, false, false, false, true),
        };
        let opt_sv = matches!(self.family, Family::Wide | Family::SetSystem);
        let opt_p = opt_sv;
        let check = |present: bool, required: bool, optional: bool, name: &str| -> Result<()> {
            if required && !present {
                return Err(Error::InvalidSpec(format!("family {} requires {name}", self.family)));
            }
            if present && !required && !optional {
                return Err(Error::InvalidSpec(format!("family {} does not take {name}", self.family)));
            }
            Ok(())
        };
        check(self.svector.is_some(), req_sv, opt_sv, "svector")?;
        check(self.partition.is_some(), req_p, opt_p, "partition")?;
        check(self.stable_s.is_some(), req_stab, false, "stable_s")?;
        check(self.wide_t.is_some(), req_wide, false, "wide_t")?;
        check(self.avoid_a.is_some(), req_a, false, "avoid_A")?;
        check(self.set_system.is_some(), req_sys, false, "set_system")?;

        if let Some(sv) = &self.svector {
            if sv.len() != self.n as usize {
                return bad(format!("svector has length {}, expected {}", sv.len(), self.n));
            }
            if sv.r() != self.r {
                return bad(format!("svector built for r={}, spec has r={}", sv.r(), self.r));
            }
        }
        if let Some(p) = &self.partition {
            if p.n() != self.n {
                return bad(format!("partition is over [{}], expected [{}]", p.n(), self.n));
            }
        }
        if self.stable_s == Some(0) {
            return bad("stable_s must be at least 1".into());
        }
        if self.wide_t == Some(0) {
            return bad("wide_t must be at least 1".into());
        }
        if let Some(a) = self.avoid_a {
            if a & !crate::sets::ground_mask(self.n) != 0 {
                return bad("avoid_A leaves the ground set".into());
            }
        }
        if let Some(sys) = &self.set_system {
            let mut sorted = sys.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != sys.len() {
                return bad("set_system has repeated members".into());
            }
            for &m in sys {
                KSubset::new(m, self.n).map_err(|e| Error::InvalidSpec(e.to_string()))?;
            }
        }
        Ok(())
    }

    /// Cap vector for the edge rule: explicit caps if given, else none
    /// (edges are r pairwise disjoint distinct vertices).
    pub fn caps(&self) -> Option<&SVector> {
        self.svector.as_ref()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("spec serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    /// Short human label, e.g. `KG_partition(n=7,k=2,r=3,P=[1,2|3,4|5,6|7])`.
    pub fn label(&self) -> String {
        let mut out = format!("{}(n={},k={},r={}", self.family, self.n, self.k, self.r);
        if let Some(sv) = &self.svector {
            match sv.uniform_cap() {
                Some(c) => out.push_str(&format!(",caps={c}")),
                None => out.push_str(&format!(
                    ",caps={}",
                    sv.caps().iter().map(|c| c.to_string()).collect::<Vec<_>>().join(":")
                )),
            }
        }
        if let Some(p) = &self.partition {
            out.push_str(&format!(",P={p:?}"));
        }
        if let Some(s) = self.stable_s {
            out.push_str(&format!(",stable={s}"));
        }
        if let Some(t) = self.wide_t {
            out.push_str(&format!(",t={t}"));
        }
        if let Some(a) = self.avoid_a {
            let elems: Vec<String> = crate::sets::elements_of(a).map(|e| e.to_string()).collect();
            out.push_str(&format!(",A={{{}}}", elems.join(",")));
        }
        if let Some(sys) = &self.set_system {
            out.push_str(&format!(",|F|={}", sys.len()));
        }
        out.push(')');
        out
    }
}

impl fmt::Debug for HypergraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// Wire form of [`HypergraphSpec`].
#[derive(Serialize, Deserialize)]
struct SpecDoc {
    family: Family,
    n: u32,
    k: u32,
    r: u32,
    #[serde(default)]
    svector: Option<Vec<u32>>,
    #[serde(default)]
    partition: Option<Vec<Vec<u32>>>,
    #[serde(default)]
    stable_s: Option<u32>,
    #[serde(default)]
    wide_t: Option<u32>,
    #[serde(default, rename = "avoid_A")]
    avoid_a: Option<Vec<u32>>,
    #[serde(default)]
    set_system: Option<Vec<Vec<u32>>>,
}

impl TryFrom<SpecDoc> for HypergraphSpec {
    type Error = Error;

    fn try_from(d: SpecDoc) -> Result<Self> {
        let bad = |e: Error| Error::InvalidSpec(e.to_string());
        let svector = d.svector.map(|c| SVector::new(c, d.r)).transpose().map_err(bad)?;
        let partition = d.partition.map(|p| Partition::from_lists(d.n, &p)).transpose().map_err(bad)?;
        let avoid_a = match d.avoid_a {
            None => None,
            Some(a) if a.is_empty() => Some(0),
            Some(a) => Some(KSubset::from_elements(d.n, &a).map_err(bad)?.mask()),
        };
        let set_system = d
            .set_system
            .map(|sys| sys.iter().map(|s| KSubset::from_elements(d.n, s).map(|x| x.mask())).collect::<Result<Vec<_>>>())
            .transpose()
            .map_err(bad)?;
        HypergraphSpec {
            family: d.family,
            n: d.n,
            k: d.k,
            r: d.r,
            svector,
            partition,
            stable_s: d.stable_s,
            wide_t: d.wide_t,
            avoid_a,
            set_system,
        }
        .validated()
    }
}

impl From<HypergraphSpec> for SpecDoc {
    fn from(s: HypergraphSpec) -> Self {
        SpecDoc {
            family: s.family,
            n: s.n,
            k: s.k,
            r: s.r,
            svector: s.svector.map(|v| v.caps().to_vec()),
            partition: s.partition.map(|p| p.to_lists()),
            stable_s: s.stable_s,
            wide_t: s.wide_t,
            avoid_a: s.avoid_a.map(|a| crate::sets::elements_of(a).collect()),
            set_system: s.set_system.map(|sys| sys.iter().map(|&m| crate::sets::elements_of(m).collect()).collect()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_roundtrip_keeps_every_field() {
        let specs = vec![
            HypergraphSpec::kneser(5, 2, 2).unwrap(),
            HypergraphSpec::capped_uniform(6, 2, 3, 3).unwrap(),
            HypergraphSpec::transversal(7, 2, 3, Partition::consecutive_max_blocks(7, 2).unwrap()).unwrap(),
            HypergraphSpec::stable(6, 2, 2, 2).unwrap(),
            HypergraphSpec::wide_transversal(9, 3, 3, 2, Partition::consecutive_max_blocks(9, 2).unwrap()).unwrap(),
            HypergraphSpec::avoiding(8, 2, 2, &[1, 2, 3]).unwrap(),
            HypergraphSpec::avoiding(8, 2, 2, &[]).unwrap(),
            HypergraphSpec::set_system(
                5,
                2,
                2,
                vec![KSubset::from_elements(5, &[1, 2]).unwrap(), KSubset::from_elements(5, &[3]).unwrap()],
            )
            .unwrap(),
        ];
        for s in specs {
            let j = s.to_json();
            let back = HypergraphSpec::from_json(&j).unwrap();
            assert_eq!(back, s, "{j}");
        }
    }

    #[test]
    fn json_keys_match_wire_names() {
        let s = HypergraphSpec::avoiding(8, 2, 2, &[1, 2]).unwrap();
        let v: serde_json::Value = serde_json::from_str(&s.to_json()).unwrap();
        assert_eq!(v["family"], "KG_avoidA");
        assert_eq!(v["avoid_A"], serde_json::json!([1, 2]));
        for key in ["svector", "partition", "stable_s", "wide_t", "set_system"] {
            assert!(v[key].is_null(), "{key}");
        }
    }

    #[test]
    fn family_field_rules() {
        let mut s = HypergraphSpec::kneser(5, 2, 2).unwrap();
        s.stable_s = Some(2);
        assert!(s.validate().is_err());
        let j = r#"{"family":"KG_s","n":4,"k":2,"r":2}"#;
        assert!(HypergraphSpec::from_json(j).is_err());
        let j = r#"{"family":"KG_s","n":4,"k":2,"r":2,"svector":[1,1,1]}"#;
        assert!(HypergraphSpec::from_json(j).is_err());
        let j = r#"{"family":"KG_s","n":4,"k":2,"r":2,"svector":[1,1,1,1]}"#;
        assert!(HypergraphSpec::from_json(j).is_ok());
        assert!(HypergraphSpec::kneser(3, 4, 2).is_err());
        assert!(HypergraphSpec::kneser(3, 1, 1).is_err());
        assert!(HypergraphSpec::wide(5, 2, 2, 0).is_err());
        assert!(HypergraphSpec::avoiding(5, 2, 2, &[6]).is_err());
        assert!(HypergraphSpec::from_json(r#"{"family":"KG_x","n":4,"k":2,"r":2}"#).is_err());
    }
}
