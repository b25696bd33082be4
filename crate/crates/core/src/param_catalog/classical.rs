//! Classical groups: label families from a supercuspidal's Jordan data,
//! the Jordan-block bound, the parity rule, and the divisibility constraint
//! for inner forms of `GL_n`.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::label_params::LabelFunction;
use crate::root_data::{CartanType, Family, RootSystem};
use crate::serde_rat;
use crate::Rat;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CaseTag {
    /// Long root of a type C component.
    A,
    /// Short root of a type B component.
    B,
    /// Everything else.
    C,
}

impl FromStr for CaseTag {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "a" => Ok(CaseTag::A),
            "b" => Ok(CaseTag::B),
            "c" => Ok(CaseTag::C),
            _ => Err(Error::Parse(format!("case tag `{s}` is not one of a, b, c"))),
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CaseTag::A => "a",
            CaseTag::B => "b",
            CaseTag::C => "c",
        })
    }
}

/// `t` is the torsion number, `f` the residue degree (2 for unramified
/// unitary groups). Only the integers relevant to `case_tag` are read:
/// `a_plus` for case a, `a >= a_minus >= -1` for case b.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassicalFamily {
    pub case_tag: CaseTag,
    pub t: u32,
    pub f: u32,
    #[serde(default)]
    pub a_plus: i64,
    #[serde(default)]
    pub a: i64,
    #[serde(default)]
    pub a_minus: i64,
    /// Dimension of the dual group's standard representation.
    #[serde(default)]
    pub n_dual: Option<u64>,
    /// Degree of the supercuspidal's L-parameter; `t` divides it.
    pub d_rho: u64,
}

impl ClassicalFamily {
    fn base(case_tag: CaseTag, f: u32, t: u32) -> Self {
        ClassicalFamily {
            case_tag,
            t,
            f,
            a_plus: 0,
            a: 0,
            a_minus: 0,
            n_dual: None,
            d_rho: t.into(),
        }
    }

    pub fn case_a(f: u32, t: u32, a_plus: i64) -> Self {
        ClassicalFamily {
            a_plus,
            ..Self::base(CaseTag::A, f, t)
        }
    }

    pub fn case_b(f: u32, t: u32, a: i64, a_minus: i64) -> Self {
        ClassicalFamily {
            a,
            a_minus,
            ..Self::base(CaseTag::B, f, t)
        }
    }

    pub fn case_c(f: u32, t: u32) -> Self {
        Self::base(CaseTag::C, f, t)
    }

    pub fn with_dims(mut self, n_dual: u64, d_rho: u64) -> Self {
        self.n_dual = Some(n_dual);
        self.d_rho = d_rho;
        self
    }

    pub fn check(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidParams(m));
        if !(1..=2).contains(&self.f) {
            return bad(format!("residue degree f = {} must be 1 or 2", self.f));
        }
        if self.t == 0 || self.d_rho == 0 || self.n_dual == Some(0) {
            return bad("t, d_rho and N must be positive".into());
        }
        if !self.d_rho.is_multiple_of(u64::from(self.t)) {
            return bad(format!("t = {} does not divide d_rho = {}", self.t, self.d_rho));
        }
        match self.case_tag {
            CaseTag::A if self.a_plus <= 0 => bad(format!("a_+ = {} must be positive", self.a_plus)),
            CaseTag::B if !(self.a >= self.a_minus && self.a_minus >= -1) => bad(format!(
                "need a >= a_- >= -1, got a = {}, a_- = {}",
                self.a, self.a_minus
            )),
            _ => Ok(()),
        }
    }

    /// A component carrying this family's labels at base `q_F`: `C_rank` for
    /// case a (long label from `a_plus`, short `f`), `B_rank` for case b
    /// (long `f`, short from `a, a_minus`), `A_rank` for case c.
    pub fn component(&self, rank: usize) -> Result<(RootSystem, LabelFunction)> {
        let l = classical_labels(self)?;
        let t = Rat::from_integer(self.t.into());
        let f = Rat::from_integer(self.f.into()) * t;
        let family = match self.case_tag {
            CaseTag::A => Family::C,
            CaseTag::B => Family::B,
            CaseTag::C => Family::A,
        };
        let rs = RootSystem::new(&[CartanType::new(family, rank)?])?;
        let mut values = Vec::new();
        for o in rs.orbits() {
            let long = o.length == crate::root_data::RootLength::Long;
            values.push(match (self.case_tag, long) {
                (CaseTag::A, true) | (CaseTag::B, false) | (CaseTag::C, _) => l.at_qf,
                _ => (f, f),
            });
        }
        Ok((rs.clone(), LabelFunction::from_orbit_values(&rs, &values)?))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassicalLabels {
    pub case_tag: CaseTag,
    /// Labels are first given against `q_F^t`.
    pub base_exp: u32,
    #[serde(with = "pair")]
    pub at_base: (Rat, Rat),
    /// The same labels against `q_F`.
    #[serde(with = "pair")]
    pub at_qf: (Rat, Rat),
}

mod pair {
    use super::*;
    use serde::Serializer;

    pub fn serialize<S: Serializer>(p: &(Rat, Rat), s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq([serde_rat::rat_to_string(&p.0), serde_rat::rat_to_string(&p.1)])
    }
}

/// `(lambda, lambda*)` of the family: `(f a_+, f a_+)`,
/// `(f (a + a_- + 2) / 2, f (a - a_-) / 2)` or `(f, f)` against `q_F^t`.
pub fn classical_labels(fam: &ClassicalFamily) -> Result<ClassicalLabels> {
    fam.check()?;
    let f = Rat::from_integer(fam.f.into());
    let at_base = match fam.case_tag {
        CaseTag::A => {
            let l = f * Rat::from_integer(fam.a_plus);
            (l, l)
        }
        CaseTag::B => (
            f * Rat::new(fam.a + fam.a_minus + 2, 2),
            f * Rat::new(fam.a - fam.a_minus, 2),
        ),
        CaseTag::C => (f, f),
    };
    let t = Rat::from_integer(fam.t.into());
    Ok(ClassicalLabels {
        case_tag: fam.case_tag,
        base_exp: fam.t,
        at_base,
        at_qf: (at_base.0 * t, at_base.1 * t),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundCheck {
    pub pass: bool,
    pub lhs: i64,
    #[serde(with = "serde_rat")]
    pub rhs: Rat,
    /// `rhs - lhs`; negative on failure.
    #[serde(with = "serde_rat")]
    pub slack: Rat,
}

/// The Jordan-block bound: `floor(((a+1)/2)^2) + floor(((a_-+1)/2)^2) <= N / d_rho`
/// in case b, `a_+^2 <= 2 N / d_rho + 1` in case a.
pub fn classical_bound_check(fam: &ClassicalFamily) -> Result<BoundCheck> {
    fam.check()?;
    let n = fam.n_dual.ok_or_else(|| {
        Error::Precondition("the bound needs N (the dual dimension)".into())
    })?;
    let ratio = Rat::new(n as i64, fam.d_rho as i64);
    let (lhs, rhs) = match fam.case_tag {
        CaseTag::B => {
            let fl = |x: i64| (x + 1) * (x + 1) / 4;
            (fl(fam.a) + fl(fam.a_minus), ratio)
        }
        CaseTag::A => (fam.a_plus * fam.a_plus, ratio * 2 + 1),
        CaseTag::C => {
            return Err(Error::Precondition("case c has no bound".into()));
        }
    };
    let slack = rhs - Rat::from_integer(lhs);
    Ok(BoundCheck {
        pass: slack >= Rat::from_integer(0),
        lhs,
        rhs,
        slack,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GroupFamily {
    UnramifiedSu,
    OtherClassical,
}

impl FromStr for GroupFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase().replace('_', "-");
        Ok(match s.as_str() {
            "unramified-su" | "unramified-u" | "su-unramified" => GroupFamily::UnramifiedSu,
            "other" | "other-classical" | "split-so" | "so" | "sp" | "split-sp"
            | "ramified-su" | "ramified-u" | "quasi-split-so" => GroupFamily::OtherClassical,
            _ => return Err(Error::Parse(format!("unknown group family `{s}`"))),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Different,
    Same,
    Unconstrained,
}

impl Parity {
    pub fn admits(self, a: i64, a_minus: i64) -> bool {
        let same = (a - a_minus).is_even();
        match self {
            Parity::Different => !same,
            Parity::Same => same,
            Parity::Unconstrained => true,
        }
    }
}

/// How the parities of `a` and `a_-` relate.
pub fn parity_rule(group: GroupFamily, t_rho: u32) -> Result<Parity> {
    if t_rho == 0 {
        return Err(Error::InvalidParams("t_rho must be positive".into()));
    }
    Ok(match group {
        GroupFamily::UnramifiedSu => Parity::Different,
        GroupFamily::OtherClassical if t_rho % 2 == 1 => Parity::Same,
        GroupFamily::OtherClassical => Parity::Unconstrained,
    })
}

/// Inner form of `GL_n` over a division algebra of degree `m`: a type
/// `GL_e` block from a supercuspidal of `GL_{m'/e}(D)` with reducibility
/// number `s` and torsion number `t`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypeAData {
    pub n: u64,
    pub m: u64,
    pub m_prime: u64,
    pub e: u64,
    pub s: u64,
    pub t: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TypeACheck {
    /// The label `f = s t` on the `A_{e-1}` component.
    pub f: u64,
    /// `n m' / (m e)`, which `f` divides.
    pub bound: u64,
}

/// `s` divides `n m' / (m e)`, `t` divides `n m' / (m e s)`, hence
/// `f = s t` divides `n m' / (m e) <= n / e`.
pub fn type_a_check(d: &TypeAData) -> Result<TypeACheck> {
    let bad = |m: String| Err(Error::InvalidParams(m));
    if [d.n, d.m, d.m_prime, d.e, d.s, d.t].contains(&0) {
        return bad("all of n, m, m', e, s, t must be positive".into());
    }
    if d.m_prime > d.m {
        return bad(format!("m' = {} exceeds m = {}", d.m_prime, d.m));
    }
    if !d.m_prime.is_multiple_of(d.e) {
        return bad(format!("e = {} does not divide m' = {}", d.e, d.m_prime));
    }
    let (num, den) = (d.n * d.m_prime, d.m * d.e);
    if num % den != 0 {
        return bad(format!("n m' / (m e) = {num}/{den} is not an integer"));
    }
    let k = num / den;
    if k % d.s != 0 {
        return bad(format!("s = {} does not divide n m' / (m e) = {k}", d.s));
    }
    if !(k / d.s).is_multiple_of(d.t) {
        return bad(format!("t = {} does not divide n m' / (m e s) = {}", d.t, k / d.s));
    }
    Ok(TypeACheck { f: d.s * d.t, bound: k })
}
