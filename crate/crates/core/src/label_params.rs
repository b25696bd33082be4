//! q-parameters, label functions and the q-base.
//!
//! Exponents are relative to `q_F`: a [`ParamPair`] `(a, s)` means
//! `q_alpha = q_F^a`, `q_alpha* = q_F^s`. A [`QBase`] with exponent `b`
//! means labels are measured against `q_F^b`, so that
//! `lambda = (a + s) / b` and `lambda* = (a - s) / b`.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::root_data::{Family, RootLength, RootSystem};
use crate::serde_rat::{self, parse_rat, rat_to_string};
use crate::Rat;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QBase {
    /// This base is `q_F^exp`.
    #[serde(rename = "base_exp", with = "serde_rat::number")]
    pub exp: Rat,
    /// Concrete value of `q_F`, or `None` when `q_F` stays formal.
    #[serde(default, skip_serializing_if = "Option::is_none", with = "serde_rat::option")]
    pub q: Option<Rat>,
}

impl QBase {
    pub fn formal() -> Self {
        QBase {
            exp: Rat::one(),
            q: None,
        }
    }

    pub fn concrete(q: Rat) -> Result<Self> {
        if q <= Rat::one() {
            return Err(Error::InvalidParams(format!("q-base must exceed 1, got {q}")));
        }
        Ok(QBase {
            exp: Rat::one(),
            q: Some(q),
        })
    }

    pub fn with_exp(mut self, exp: Rat) -> Result<Self> {
        if !exp.is_positive() {
            return Err(Error::InvalidParams("base exponent must be positive".into()));
        }
        self.exp = exp;
        Ok(self)
    }

    pub fn is_formal(&self) -> bool {
        self.q.is_none()
    }
}

impl Default for QBase {
    fn default() -> Self {
        Self::formal()
    }
}

/// Exponents of `q_F` for `q_alpha` and `q_alpha*`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ParamPair {
    #[serde(with = "serde_rat")]
    pub q_alpha: Rat,
    #[serde(with = "serde_rat")]
    pub q_alpha_star: Rat,
}

impl ParamPair {
    /// Checks `q_alpha >= q_alpha* >= 0`.
    pub fn new(q_alpha: Rat, q_alpha_star: Rat) -> Result<Self> {
        if q_alpha_star.is_negative() || q_alpha_star > q_alpha {
            return Err(Error::InvalidParams(format!(
                "need q_alpha >= q_alpha* >= 1, got exponents ({}, {})",
                rat_to_string(&q_alpha),
                rat_to_string(&q_alpha_star)
            )));
        }
        Ok(ParamPair {
            q_alpha,
            q_alpha_star,
        })
    }

    pub fn ints(a: i64, s: i64) -> Result<Self> {
        Self::new(Rat::from_integer(a), Rat::from_integer(s))
    }

    /// `(1, 1)`: no reducibility.
    pub fn trivial() -> Self {
        ParamPair {
            q_alpha: Rat::zero(),
            q_alpha_star: Rat::zero(),
        }
    }

    /// Whether both exponents are half-integers.
    pub fn conforms(&self) -> bool {
        2 % *self.q_alpha.denom() == 0
            && 2 % *self.q_alpha_star.denom() == 0
    }
}

impl fmt::Display for ParamPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", q_power(&self.q_alpha), q_power(&self.q_alpha_star))
    }
}

/// `q^e` in the CLI's notation: `1`, `q`, `q^2`, `q^(1/2)`.
pub fn q_power(e: &Rat) -> String {
    if e.is_zero() {
        "1".into()
    } else if e.is_one() {
        "q".into()
    } else if e.is_integer() {
        format!("q^{}", e.numer())
    } else {
        format!("q^({})", rat_to_string(e))
    }
}

/// Labels on one W-orbit of simple roots.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitLabel {
    pub roots: Vec<usize>,
    #[serde(with = "serde_rat")]
    pub lambda: Rat,
    #[serde(with = "serde_rat")]
    pub lambda_star: Rat,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelFunction {
    #[serde(flatten)]
    pub base: QBase,
    pub orbits: Vec<OrbitLabel>,
}

impl LabelFunction {
    /// One `(lambda, lambda*)` per orbit of `rs`, in [`RootSystem::orbits`] order.
    pub fn from_orbit_values(rs: &RootSystem, values: &[(Rat, Rat)]) -> Result<Self> {
        let orbits = rs.orbits();
        if values.len() != orbits.len() {
            return Err(Error::InvalidLabels(format!(
                "{} has {} orbits of simple roots, got {} label pairs",
                rs,
                orbits.len(),
                values.len()
            )));
        }
        Ok(LabelFunction {
            base: QBase::formal(),
            orbits: orbits
                .into_iter()
                .zip(values)
                .map(|(o, &(lambda, lambda_star))| OrbitLabel {
                    roots: o.simple,
                    lambda,
                    lambda_star,
                })
                .collect(),
        })
    }

    /// The same label `lambda = lambda*` everywhere.
    pub fn uniform(rs: &RootSystem, lambda: Rat) -> Self {
        let n = rs.orbits().len();
        Self::from_orbit_values(rs, &vec![(lambda, lambda); n]).expect("orbit count matches")
    }

    /// Parses the CLI label syntax: one label per orbit (long before short,
    /// component by component), optionally followed by `lambda*` for the
    /// last orbit. So `B2` takes `long,short[,short_star]` and `A2` takes
    /// `lambda[,lambda*]`.
    pub fn parse(rs: &RootSystem, s: &str) -> Result<Self> {
        let toks: Vec<Rat> = s
            .split(',')
            .filter(|t| !t.trim().is_empty())
            .map(|t| parse_rat(t).map_err(Error::Parse))
            .collect::<Result<_>>()?;
        let n = rs.orbits().len();
        let mut values: Vec<(Rat, Rat)> = match toks.len() {
            k if k == n => toks.iter().map(|&l| (l, l)).collect(),
            k if k == n + 1 && n > 0 => toks[..n].iter().map(|&l| (l, l)).collect(),
            k => {
                return Err(Error::Parse(format!(
                    "{rs} needs {n} labels (plus an optional lambda* for the last orbit), got {k}"
                )))
            }
        };
        if toks.len() == n + 1 {
            values[n - 1].1 = toks[n];
        }
        Self::from_orbit_values(rs, &values)
    }

    /// `(lambda, lambda*)` on the simple root `i`.
    pub fn of_simple(&self, i: usize) -> Option<(Rat, Rat)> {
        self.orbits
            .iter()
            .find(|o| o.roots.contains(&i))
            .map(|o| (o.lambda, o.lambda_star))
    }

    pub fn with_base(mut self, base: QBase) -> Self {
        self.base = base;
        self
    }
}

pub fn labels_from_q(p: &ParamPair, base: &QBase) -> Result<(Rat, Rat)> {
    if p.q_alpha_star.is_negative() || p.q_alpha.is_negative() {
        return Err(Error::InvalidParams("negative exponent".into()));
    }
    let lambda = (p.q_alpha + p.q_alpha_star) / base.exp;
    let lambda_star = (p.q_alpha - p.q_alpha_star) / base.exp;
    if lambda_star.is_negative() {
        return Err(Error::InvalidParams(format!(
            "q_alpha* exceeds q_alpha in {p}; normalize so that q_alpha >= q_alpha*"
        )));
    }
    Ok((lambda, lambda_star))
}

pub fn q_from_labels(lf: &LabelFunction, orbit: usize) -> Result<ParamPair> {
    let o = lf
        .orbits
        .get(orbit)
        .ok_or_else(|| Error::NotFound(format!("orbit {orbit}")))?;
    pair_from_labels(o.lambda, o.lambda_star, &lf.base)
}

pub fn pair_from_labels(lambda: Rat, lambda_star: Rat, base: &QBase) -> Result<ParamPair> {
    if lambda_star.is_negative() || lambda_star > lambda {
        return Err(Error::InvalidLabels(format!(
            "need lambda >= lambda* >= 0, got ({}, {})",
            rat_to_string(&lambda),
            rat_to_string(&lambda_star)
        )));
    }
    let two = Rat::from_integer(2);
    ParamPair::new(
        base.exp * (lambda + lambda_star) / two,
        base.exp * (lambda - lambda_star) / two,
    )
}

pub fn rescale_base(lf: &LabelFunction, r: Rat) -> Result<LabelFunction> {
    if !r.is_positive() {
        return Err(Error::InvalidParams("rescaling factor must be positive".into()));
    }
    let mut out = lf.clone();
    out.base.exp *= r;
    for o in &mut out.orbits {
        o.lambda /= r;
        o.lambda_star /= r;
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    MissingRoot { root: usize },
    UnknownRoot { root: usize },
    DuplicateRoot { root: usize },
    MixedOrbits { entry: usize },
    NotWInvariant { root_a: usize, root_b: usize },
    Negative { entry: usize },
    StarExceedsLambda { entry: usize },
    UnequalOutsideTypeBShort { entry: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    /// Every orbit's q-exponents are half-integers.
    pub conforms: bool,
}

impl ValidationReport {
    pub fn is_admissible(&self) -> bool {
        self.violations.is_empty()
    }
}

/// True for the short orbit of a type-B component (including `B1`).
pub fn is_type_b_short(rs: &RootSystem, simple: usize) -> bool {
    let c = rs.components()[rs.component_of_simple(simple)];
    c.family == Family::B && rs.simple_length(simple) == RootLength::Short
}

pub fn validate(lf: &LabelFunction, rs: &RootSystem) -> ValidationReport {
    let mut v = Vec::new();
    let n = rs.rank();
    let orbits = rs.orbits();
    let orbit_of = |i: usize| orbits.iter().position(|o| o.simple.contains(&i)).unwrap();
    let mut owner: Vec<Option<usize>> = vec![None; n];
    for (e, o) in lf.orbits.iter().enumerate() {
        for &i in &o.roots {
            if i >= n {
                v.push(Violation::UnknownRoot { root: i });
                continue;
            }
            if owner[i].is_some() {
                v.push(Violation::DuplicateRoot { root: i });
            }
            owner[i] = Some(e);
        }
        let known: Vec<usize> = o.roots.iter().copied().filter(|&i| i < n).collect();
        if known.windows(2).any(|w| orbit_of(w[0]) != orbit_of(w[1])) {
            v.push(Violation::MixedOrbits { entry: e });
        }
        if o.lambda.is_negative() || o.lambda_star.is_negative() {
            v.push(Violation::Negative { entry: e });
        }
        if o.lambda_star > o.lambda {
            v.push(Violation::StarExceedsLambda { entry: e });
        }
        if o.lambda_star != o.lambda && known.iter().any(|&i| !is_type_b_short(rs, i)) {
            v.push(Violation::UnequalOutsideTypeBShort { entry: e });
        }
    }
    for (i, own) in owner.iter().enumerate() {
        if own.is_none() {
            v.push(Violation::MissingRoot { root: i });
        }
    }
    for a in 0..n {
        for b in a + 1..n {
            if let (Some(ea), Some(eb)) = (owner[a], owner[b]) {
                let (la, lb) = (&lf.orbits[ea], &lf.orbits[eb]);
                if orbit_of(a) == orbit_of(b)
                    && (la.lambda != lb.lambda || la.lambda_star != lb.lambda_star)
                {
                    v.push(Violation::NotWInvariant { root_a: a, root_b: b });
                }
            }
        }
    }
    let conforms = (0..lf.orbits.len()).all(|k| q_from_labels(lf, k).is_ok_and(|p| p.conforms()));
    ValidationReport {
        violations: v,
        conforms,
    }
}
