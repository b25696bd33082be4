//! Parameters for Levi subgroups of exceptional groups, shipped as a
//! versioned JSON file.
//!
//! Each record lists, per orbit of simple roots of the relative root system,
//! the possible `(q_alpha, q_alpha*)` and the orbit of the dual system
//! (where labels live) that it feeds. Unknown entries are `open`.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::label_params::ParamPair;
use crate::mu_function::{mu_factor, sigma_o_mu, MuFactor};
use crate::param_catalog::table::match_label_function;
use crate::root_data::{parse_components, RootLength, RootSystem};
use crate::serde_rat;
use crate::Rat;

const CASES_JSON: &str = include_str!("../../data/cases.json");

pub const CASE_DB_VERSION: u32 = 1;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CaseDb {
    pub version: u32,
    pub records: Vec<CaseRecord>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CaseRecord {
    pub group: String,
    /// Simple roots (1-based) generating the Levi subgroup.
    pub levi: Vec<u8>,
    /// Other subsets conjugate to `levi` with the same answer.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub associates: Vec<Vec<u8>>,
    pub relative_system: String,
    pub dual_system: String,
    pub orbits: Vec<CaseOrbit>,
    /// The orbits are known separately but not how they combine.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub joint_open: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub citation: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CaseOrbit {
    #[serde(default)]
    pub simple: Vec<u8>,
    pub rel_length: RootLength,
    /// Index into the dual system's orbits.
    pub dual_orbit: usize,
    pub params: OrbitParams,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum OrbitParams {
    Fixed {
        choices: Vec<ParamPair>,
    },
    /// `q_F^{f t (a+1)/2}`, `q_F^{f t (a_-+1)/2}` over `a_max >= a >= a_- >= -1`,
    /// optionally with the Jordan-block bound against `bound`.
    Classical {
        t: Vec<u32>,
        f: Vec<u32>,
        a_max: i64,
        #[serde(default, with = "serde_rat::option", skip_serializing_if = "Option::is_none")]
        bound: Option<Rat>,
    },
    Open {
        note: String,
    },
}

impl OrbitParams {
    pub fn is_open(&self) -> bool {
        matches!(self, OrbitParams::Open { .. })
    }

    /// All pairs the entry allows, deduplicated in first-seen order; `None`
    /// for open entries.
    pub fn choices(&self) -> Option<Vec<ParamPair>> {
        match self {
            OrbitParams::Open { .. } => None,
            OrbitParams::Fixed { choices } => Some(choices.clone()),
            OrbitParams::Classical { t, f, a_max, bound } => {
                let mut out: Vec<ParamPair> = Vec::new();
                let fl = |x: i64| (x + 1) * (x + 1) / 4;
                for &t in t {
                    for &f in f {
                        let m = i64::from(t * f);
                        for a in -1..=*a_max {
                            for a_minus in -1..=a {
                                if bound.is_some_and(|b| Rat::from_integer(fl(a) + fl(a_minus)) > b) {
                                    continue;
                                }
                                let p = ParamPair {
                                    q_alpha: Rat::new(m * (a + 1), 2),
                                    q_alpha_star: Rat::new(m * (a_minus + 1), 2),
                                };
                                if !out.contains(&p) {
                                    out.push(p);
                                }
                            }
                        }
                    }
                }
                Some(out)
            }
        }
    }
}

impl CaseRecord {
    pub fn is_open(&self) -> bool {
        self.joint_open || self.orbits.iter().any(|o| o.params.is_open())
    }

    fn keys(&self) -> impl Iterator<Item = Vec<u8>> + '_ {
        std::iter::once(self.levi.clone()).chain(self.associates.iter().cloned()).map(|mut v| {
            v.sort_unstable();
            v
        })
    }
}

pub fn case_db() -> &'static CaseDb {
    static DB: OnceLock<CaseDb> = OnceLock::new();
    DB.get_or_init(|| serde_json::from_str(CASES_JSON).expect("shipped case database parses"))
}

/// Canonical spelling of a group name: `E7^(2)`, `e7(2)` and `E_7^{(2)}`
/// all become `E7(2)`; a leading `split` is dropped.
pub fn normalize_group(name: &str) -> String {
    let s: String = name
        .trim()
        .chars()
        .map(|c| match c {
            '²' => '2',
            '³' => '3',
            c => c,
        })
        .filter(|c| !matches!(c, '^' | '_' | '{' | '}' | ' '))
        .collect();
    let s = s.strip_prefix("split").unwrap_or(&s);
    s.to_ascii_uppercase().replace("-UNIPOTENT", "-unipotent")
}

/// `{2,3}`, `2,3`, `alpha_2 alpha_3`, `{}` or `empty`.
pub fn parse_levi(s: &str) -> Result<Vec<u8>> {
    let s = s.trim();
    if s.is_empty() || s == "empty" || s == "{}" {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for tok in s
        .split(|c: char| c == ',' || c.is_whitespace() || c == '{' || c == '}')
        .filter(|t| !t.is_empty())
    {
        let digits = tok.trim_start_matches(|c: char| !c.is_ascii_digit());
        let i: u8 = digits
            .parse()
            .map_err(|_| Error::Parse(format!("bad simple root `{tok}` in Levi subset")))?;
        out.push(i);
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

pub fn case_lookup(group: &str, levi: &[u8]) -> Result<&'static CaseRecord> {
    let g = normalize_group(group);
    let mut key = levi.to_vec();
    key.sort_unstable();
    case_db()
        .records
        .iter()
        .find(|r| r.group == g && r.keys().any(|k| k == key))
        .ok_or_else(|| Error::NotFound(format!("no case for {g} with Levi subset {key:?}")))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CaseStatus {
    Open,
    Checked,
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseConformance {
    pub group: String,
    pub levi: Vec<u8>,
    pub status: CaseStatus,
    /// Parameter combinations tried.
    pub combos: usize,
    /// Combinations where no orbit contributes.
    pub trivial: usize,
    pub failures: Vec<String>,
}

/// Runs every combination of orbit parameters through the mu-factor root
/// system and the unipotent table. Open records are reported, not checked.
pub fn case_conformance(rec: &CaseRecord) -> Result<CaseConformance> {
    let mut out = CaseConformance {
        group: rec.group.clone(),
        levi: rec.levi.clone(),
        status: CaseStatus::Open,
        combos: 0,
        trivial: 0,
        failures: Vec::new(),
    };
    if rec.is_open() {
        return Ok(out);
    }
    out.status = CaseStatus::Checked;
    let ambient = RootSystem::new(&parse_components(&rec.dual_system)?)?;
    let choices: Vec<Vec<MuFactor>> = rec
        .orbits
        .iter()
        .map(|o| {
            o.params
                .choices()
                .unwrap_or_default()
                .iter()
                .map(|p| mu_factor(p.q_alpha, p.q_alpha_star, Rat::from_integer(1)))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    let mut idx = vec![0usize; choices.len()];
    loop {
        let factors: BTreeMap<usize, MuFactor> = rec
            .orbits
            .iter()
            .zip(&idx)
            .zip(&choices)
            .map(|((o, &i), c)| (o.dual_orbit, c[i].clone()))
            .collect();
        out.combos += 1;
        if factors.values().all(|f| f.is_constant()) {
            out.trivial += 1;
        } else {
            let s = sigma_o_mu(&ambient, &factors)?;
            let ok = s.report.is_admissible()
                && match_label_function(&s.system, &s.labels)?.iter().all(|m| m.matched.is_some());
            if !ok {
                let desc: Vec<String> = factors.values().map(|f| f.pair().to_string()).collect();
                out.failures.push(format!("{} with {}", s.system.type_string(), desc.join(", ")));
            }
        }
        let mut k = 0;
        loop {
            if k == idx.len() {
                return Ok(out);
            }
            idx[k] += 1;
            if idx[k] < choices[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}
