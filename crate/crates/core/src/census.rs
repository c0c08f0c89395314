//! Census runs shared by the command-line tool and the browser demo:
//! single counts, per-degree tables, formula/oracle sweeps and circulant
//! tables.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use web_time::Instant;

use crate::circulant::{binomial_special_case, circulant_iso_count_prime, circulant_prime_weak_count};
use crate::error::{CensusError, Result};
use crate::formula::{class_count_with, CountOptions};
use crate::group::spec::build_group;
use crate::group::FiniteGroup;
use crate::lattice::SubgroupLattice;
use crate::morphism::{AutomorphismGroup, Mode};
use crate::numbers::gcd;
use crate::oracle::{enumerate_connection_sets, orbit_partition, stratified_orbit_counts, ConnectionSet};

/// Groups swept by `validate`: `Z_3..Z_16` and the small non-cyclic groups.
pub const ROSTER_EXTRA: [&str; 11] = ["Z2xZ2", "Z2xZ4", "Z2xZ2xZ2", "Z3xZ3", "D4", "D5", "D6", "D7", "Q8", "S3", "A4"];

pub fn roster() -> Vec<String> {
    (3..=16).map(|n| format!("Z{n}")).chain(ROSTER_EXTRA.iter().map(|s| s.to_string())).collect()
}

/// Largest degree swept per group.
pub const SWEEP_MAX_DEGREE: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Formula,
    Oracle,
    Both,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Formula => "formula",
            Method::Oracle => "oracle",
            Method::Both => "both",
        })
    }
}

impl std::str::FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "formula" => Ok(Method::Formula),
            "oracle" => Ok(Method::Oracle),
            "both" => Ok(Method::Both),
            other => Err(format!("unknown method `{other}` (expected formula, oracle or both)")),
        }
    }
}

/// Counts are written as JSON numbers when they fit in 64 bits and as
/// decimal strings otherwise.
mod count_format {
    use num_bigint::BigUint;
    use num_traits::ToPrimitive;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        match x.to_u64() {
            Some(v) => s.serialize_u64(v),
            None => s.serialize_str(&x.to_string()),
        }
    }

    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Repr {
        Num(u64),
        Str(String),
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        match Repr::deserialize(d)? {
            Repr::Num(v) => Ok(BigUint::from(v)),
            Repr::Str(s) => s.parse().map_err(serde::de::Error::custom),
        }
    }

    pub mod map {
        use std::collections::BTreeMap;

        use super::*;
        use serde::ser::SerializeMap;

        pub fn serialize<S: Serializer>(m: &BTreeMap<String, BigUint>, s: S) -> Result<S::Ok, S::Error> {
            let mut out = s.serialize_map(Some(m.len()))?;
            for (k, v) in m {
                match v.to_u64() {
                    Some(v) => out.serialize_entry(k, &v)?,
                    None => out.serialize_entry(k, &v.to_string())?,
                }
            }
            out.end()
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<String, BigUint>, D::Error> {
            let raw: BTreeMap<String, Repr> = BTreeMap::deserialize(d)?;
            raw.into_iter()
                .map(|(k, v)| match v {
                    Repr::Num(v) => Ok((k, BigUint::from(v))),
                    Repr::Str(s) => s.parse().map(|v| (k, v)).map_err(serde::de::Error::custom),
                })
                .collect()
        }
    }
}

/// One census result.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CensusReport {
    pub group: String,
    pub order: usize,
    pub degree: usize,
    pub mode: Mode,
    pub method: Method,
    #[serde(with = "count_format")]
    pub count: BigUint,
    /// Class count per `k`, keyed by `k` as a decimal string.
    #[serde(with = "count_format::map")]
    pub per_k: BTreeMap<String, BigUint>,
    /// Whether formula and oracle agree; present only for `Method::Both`.
    pub agreement: Option<bool>,
    pub elapsed_ms: f64,
}

impl CensusReport {
    /// Formula and oracle were both run and disagree.
    pub fn disagrees(&self) -> bool {
        self.agreement == Some(false)
    }
}

fn per_k_map(per_k: &[BigUint]) -> BTreeMap<String, BigUint> {
    per_k.iter().enumerate().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

/// Everything that only depends on the group and the mode.
pub struct Prepared<'a> {
    pub group: &'a FiniteGroup,
    pub mode: Mode,
    pub action: AutomorphismGroup,
    pub lattice: SubgroupLattice,
}

impl<'a> Prepared<'a> {
    pub fn new(group: &'a FiniteGroup, mode: Mode, opts: &CountOptions) -> Result<Self> {
        Ok(Prepared {
            group,
            mode,
            action: AutomorphismGroup::for_mode(group, mode, &opts.limits)?,
            lattice: SubgroupLattice::new(group, &opts.limits)?,
        })
    }

    pub fn formula(&self, m: usize, opts: &CountOptions) -> Result<Vec<BigUint>> {
        Ok(class_count_with(self.group, m, &self.action, &self.lattice, opts)?.per_k)
    }

    pub fn oracle(&self, m: usize, opts: &CountOptions) -> Result<Vec<BigUint>> {
        let bound = opts.limits.oracle_max_order;
        if self.group.order() > bound {
            return Err(CensusError::ScaleExceeded { order: self.group.order(), bound, what: "oracle enumeration" });
        }
        let family = enumerate_connection_sets(self.group, m);
        Ok(stratified_orbit_counts(&family, &self.action)?.into_iter().map(|c| BigUint::from(c as u64)).collect())
    }

    pub fn report(&self, m: usize, method: Method, opts: &CountOptions) -> Result<CensusReport> {
        if m == 0 {
            return Err(CensusError::Precondition("degree must be at least 1".into()));
        }
        let start = Instant::now();
        let (per_k, agreement) = match method {
            Method::Formula => (self.formula(m, opts)?, None),
            Method::Oracle => (self.oracle(m, opts)?, None),
            Method::Both => {
                let formula = self.formula(m, opts)?;
                let oracle = self.oracle(m, opts)?;
                let total = |v: &[BigUint]| v.iter().sum::<BigUint>();
                let agree = total(&formula) == total(&oracle);
                (formula, Some(agree))
            }
        };
        Ok(CensusReport {
            group: self.group.name().to_string(),
            order: self.group.order(),
            degree: m,
            mode: self.mode,
            method,
            count: per_k.iter().sum(),
            per_k: per_k_map(&per_k),
            agreement,
            elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
        })
    }
}

/// Runs one census for a group spec.
pub fn count(spec: &str, m: usize, mode: Mode, method: Method, opts: &CountOptions) -> Result<CensusReport> {
    let group = build_group(spec)?;
    let mut report = Prepared::new(&group, mode, opts)?.report(m, method, opts)?;
    report.group = spec.trim().to_string();
    Ok(report)
}

/// Reports for every degree `1..|A|`.
pub fn table(spec: &str, mode: Mode, method: Method, opts: &CountOptions) -> Result<Vec<CensusReport>> {
    let group = build_group(spec)?;
    let prepared = Prepared::new(&group, mode, opts)?;
    (1..group.order())
        .map(|m| {
            let mut r = prepared.report(m, method, opts)?;
            r.group = spec.trim().to_string();
            Ok(r)
        })
        .collect()
}

/// One row of a formula-versus-oracle sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationRow {
    pub group: String,
    pub order: usize,
    pub degree: usize,
    pub mode: Mode,
    #[serde(with = "count_format")]
    pub formula: BigUint,
    #[serde(with = "count_format")]
    pub oracle: BigUint,
    pub agree: bool,
    /// Error raised by either route, if any.
    pub error: Option<String>,
}

/// Formula against oracle for every roster group up to `max_order`, every
/// degree in `degrees` below the group order (default `1..=8`), both modes.
pub fn validate(max_order: usize, degrees: Option<(usize, usize)>, opts: &CountOptions) -> Result<Vec<ValidationRow>> {
    if max_order > opts.limits.oracle_max_order {
        return Err(CensusError::ScaleExceeded { order: max_order, bound: opts.limits.oracle_max_order, what: "validation sweep" });
    }
    let (lo, hi) = degrees.unwrap_or((1, SWEEP_MAX_DEGREE));
    let mut rows = Vec::new();
    for spec in roster() {
        let group = build_group(&spec)?;
        if group.order() > max_order {
            continue;
        }
        for mode in [Mode::Weak, Mode::Equiv] {
            let prepared = Prepared::new(&group, mode, opts)?;
            for m in lo.max(1)..=hi.min(group.order() - 1) {
                let formula = prepared.formula(m, opts);
                let oracle = prepared.oracle(m, opts);
                let row = match (formula, oracle) {
                    (Ok(f), Ok(o)) => ValidationRow {
                        group: spec.clone(),
                        order: group.order(),
                        degree: m,
                        mode,
                        formula: f.iter().sum(),
                        oracle: o.iter().sum(),
                        agree: f == o,
                        error: None,
                    },
                    (f, o) => ValidationRow {
                        group: spec.clone(),
                        order: group.order(),
                        degree: m,
                        mode,
                        formula: f.as_ref().map(|v| v.iter().sum()).unwrap_or_default(),
                        oracle: o.as_ref().map(|v| v.iter().sum()).unwrap_or_default(),
                        agree: false,
                        error: f.err().or(o.err()).map(|e| e.to_string()),
                    },
                };
                rows.push(row);
            }
        }
    }
    Ok(rows)
}

/// One row of a circulant table for a prime.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CirculantRow {
    pub prime: u64,
    pub degree: u64,
    #[serde(with = "count_format")]
    pub weak: BigUint,
    #[serde(with = "count_format")]
    pub isomorphism: BigUint,
    /// The binomial shortcut's value where it applies and disagrees.
    pub erratum: Option<String>,
}

/// Rows for every even degree up to `max_degree` (and at most `p - 1`).
pub fn circulant_table(p: u64, max_degree: u64) -> Result<Vec<CirculantRow>> {
    let mut rows = Vec::new();
    circulant_prime_weak_count(p, 2)?;
    for m in (2..=max_degree.min(p - 1)).step_by(2) {
        let weak = circulant_prime_weak_count(p, m)?;
        let isomorphism = circulant_iso_count_prime(p, m)?;
        let erratum = if gcd((p - 1) / 2, m / 2) == 1 {
            let claim = binomial_special_case(p, m)?;
            (!claim.agrees()).then(|| format!("binomial shortcut gives {}", claim.claimed))
        } else {
            None
        };
        rows.push(CirculantRow { prime: p, degree: m, weak, isomorphism, erratum });
    }
    Ok(rows)
}

/// One orbit of connection sets, for display.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ClassRepresentative {
    /// Connection set of the first member, as element indices.
    pub connection_set: Vec<usize>,
    pub labels: Vec<String>,
    pub orbit_size: usize,
    pub edges: Vec<(usize, usize)>,
}

/// One representative Cayley graph per class, from the oracle.
pub fn class_representatives(group: &FiniteGroup, m: usize, mode: Mode, opts: &CountOptions) -> Result<Vec<ClassRepresentative>> {
    if group.order() > opts.limits.oracle_max_order {
        return Err(CensusError::ScaleExceeded { order: group.order(), bound: opts.limits.oracle_max_order, what: "oracle enumeration" });
    }
    let action = AutomorphismGroup::for_mode(group, mode, &opts.limits)?;
    let sets: Vec<ConnectionSet> = enumerate_connection_sets(group, m).to_vec();
    orbit_partition(&sets, &action)?
        .into_iter()
        .map(|orbit| {
            let rep = sets[orbit[0]];
            let graph = crate::oracle::build_cayley_graph(group, &rep)?;
            Ok(ClassRepresentative {
                connection_set: rep.members().to_vec(),
                labels: rep.members().iter().map(|g| group.element_name(g).to_string()).collect(),
                orbit_size: orbit.len(),
                edges: graph.edges,
            })
        })
        .collect()
}
