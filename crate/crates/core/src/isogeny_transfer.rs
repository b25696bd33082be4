//! How labels of one irreducible component change along an isogeny from a
//! cover `G~` to `G`: the lattice index `N_alpha` of `h_alpha` over the image
//! of `h_alpha~` is `1/2`, `1` or `2`, and away from `N = 1` this swaps
//! types `B_n` and `C_n`.
//!
//! Case ii: `C_n (long l, short m)` on the cover becomes `B_n (long m,
//! short (l, 0))`. Case iii: `B_n (long m, short (l, 0))` on the cover
//! becomes `C_n (long l, short m)`. The two moves are inverse to each other.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::label_params::LabelFunction;
use crate::param_catalog::table::{table1_match, Table1Labels, Table1Match};
use crate::root_data::{CartanType, Family, RootLength, RootSystem};
use crate::Rat;

/// The only possible indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum NAlpha {
    #[serde(rename = "1/2")]
    Half,
    #[serde(rename = "1")]
    One,
    #[serde(rename = "2")]
    Two,
}

impl NAlpha {
    pub fn value(self) -> Rat {
        match self {
            NAlpha::Half => Rat::new(1, 2),
            NAlpha::One => Rat::from_integer(1),
            NAlpha::Two => Rat::from_integer(2),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CaseKind {
    I,
    Ii,
    Iii,
}

impl FromStr for CaseKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "i" | "1" => Ok(CaseKind::I),
            "ii" | "2" => Ok(CaseKind::Ii),
            "iii" | "3" => Ok(CaseKind::Iii),
            _ => Err(Error::Parse(format!("transfer case `{s}` is not i, ii or iii"))),
        }
    }
}

impl fmt::Display for CaseKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CaseKind::I => "i",
            CaseKind::Ii => "ii",
            CaseKind::Iii => "iii",
        })
    }
}

/// `N_alpha` on the long and short roots of the component on the `G` side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransferCase {
    pub tag: CaseKind,
    pub n_alpha_long: NAlpha,
    pub n_alpha_short: NAlpha,
}

impl TransferCase {
    pub fn new(tag: CaseKind, n_alpha_long: NAlpha, n_alpha_short: NAlpha) -> Result<Self> {
        let expected = match tag {
            CaseKind::I => (NAlpha::One, NAlpha::One),
            CaseKind::Ii => (NAlpha::One, NAlpha::Half),
            CaseKind::Iii => (NAlpha::Two, NAlpha::One),
        };
        if (n_alpha_long, n_alpha_short) != expected {
            return Err(Error::InvalidParams(format!(
                "case {tag} needs N_alpha = ({:?}, {:?}) on (long, short)",
                expected.0, expected.1
            )));
        }
        Ok(TransferCase {
            tag,
            n_alpha_long,
            n_alpha_short,
        })
    }

    pub fn of(tag: CaseKind) -> Self {
        match tag {
            CaseKind::I => TransferCase::new(tag, NAlpha::One, NAlpha::One),
            CaseKind::Ii => TransferCase::new(tag, NAlpha::One, NAlpha::Half),
            CaseKind::Iii => TransferCase::new(tag, NAlpha::Two, NAlpha::One),
        }
        .expect("canonical indices")
    }
}

/// Which way to move: from the cover to `G` (the stated direction) or back.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Direction {
    #[default]
    ToQuotient,
    ToCover,
}

impl Direction {
    pub fn reverse(self) -> Self {
        match self {
            Direction::ToQuotient => Direction::ToCover,
            Direction::ToCover => Direction::ToQuotient,
        }
    }
}

impl FromStr for Direction {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "to-quotient" | "down" => Ok(Direction::ToQuotient),
            "to-cover" | "up" => Ok(Direction::ToCover),
            _ => Err(Error::Parse(format!("direction `{s}` is not to-quotient or to-cover"))),
        }
    }
}

/// An irreducible labelled component.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Component {
    #[serde(rename = "type")]
    pub cartan: CartanType,
    #[serde(flatten)]
    pub labels: Table1Labels,
}

impl Component {
    /// A short `lambda*` equal to the short label is stored as `None`.
    pub fn new(cartan: CartanType, mut labels: Table1Labels) -> Result<Self> {
        if labels.star.is_some() && labels.star == labels.short {
            labels.star = None;
        }
        let c = Component { cartan, labels };
        c.to_label_function()?;
        Ok(c)
    }

    /// Reads the labels of an irreducible `(rs, lf)`.
    pub fn from_label_function(rs: &RootSystem, lf: &LabelFunction) -> Result<Self> {
        if rs.components().len() != 1 {
            return Err(Error::Precondition(format!("{rs} is not irreducible")));
        }
        let mut labels = Table1Labels::default();
        for i in 0..rs.rank() {
            let (lam, star) = lf
                .of_simple(i)
                .ok_or_else(|| Error::InvalidLabels(format!("no label on simple root {i}")))?;
            match rs.simple_length(i) {
                RootLength::Long if lam != star => {
                    return Err(Error::InvalidLabels("lambda* != lambda on a long root".into()))
                }
                RootLength::Long => labels.long = Some(lam),
                RootLength::Short => {
                    labels.short = Some(lam);
                    labels.star = Some(star);
                }
            }
        }
        Component::new(rs.components()[0], labels)
    }

    pub fn to_label_function(&self) -> Result<(RootSystem, LabelFunction)> {
        let rs = RootSystem::new(&[self.cartan])?;
        let values = rs
            .orbits()
            .iter()
            .map(|o| match o.length {
                RootLength::Long => self.labels.long.map(|l| (l, l)),
                RootLength::Short => self.labels.short.map(|l| (l, self.labels.star().unwrap_or(l))),
            })
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| {
                Error::InvalidLabels(format!("{} needs a label on every orbit, got {}", self.cartan, self.labels))
            })?;
        if values.len() != [self.labels.long, self.labels.short].iter().flatten().count() {
            return Err(Error::InvalidLabels(format!(
                "{} has {} orbits, got labels {}",
                self.cartan,
                values.len(),
                self.labels
            )));
        }
        let lf = LabelFunction::from_orbit_values(&rs, &values)?;
        Ok((rs, lf))
    }
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.cartan, self.labels)
    }
}

/// `C_n (long l, short m)` to `B_n (long m, short (l, 0))`.
fn c_to_b(c: &Component) -> Result<Component> {
    if c.cartan.family != Family::C {
        return Err(incompatible(c, "a C_n component"));
    }
    let long = c.labels.long.expect("C_n has long roots");
    if let Some(m) = c.labels.short {
        if c.labels.star() != Some(m) {
            return Err(Error::InvalidLabels(format!("{c}: lambda* != lambda on a C_n short root")));
        }
    }
    Component::new(
        CartanType::new(Family::B, c.cartan.rank)?,
        Table1Labels::new(c.labels.short, Some(long), Some(Rat::zero())),
    )
}

/// `B_n (long m, short (l, 0))` to `C_n (long l, short m)`.
fn b_to_c(c: &Component) -> Result<Component> {
    if c.cartan.family != Family::B {
        return Err(incompatible(c, "a B_n component"));
    }
    let (lam, star) = (c.labels.short.expect("B_n has short roots"), c.labels.star().unwrap_or_default());
    if !star.is_zero() {
        return Err(Error::Incompatible(format!(
            "{c}: the short roots need lambda* = 0 to come from N_alpha = 2"
        )));
    }
    Component::new(
        CartanType::new(Family::C, c.cartan.rank)?,
        Table1Labels::new(Some(lam + star), c.labels.long, None),
    )
}

fn incompatible(c: &Component, need: &str) -> Error {
    Error::Incompatible(format!("{c}: this transfer case needs {need}"))
}

/// Applies the case to a component. Case i is the identity on any type;
/// cases ii and iii only move between `B_n` and `C_n`.
pub fn transfer(c: &Component, case: &TransferCase, dir: Direction) -> Result<Component> {
    match (case.tag, dir) {
        (CaseKind::I, _) => Ok(c.clone()),
        (CaseKind::Ii, Direction::ToQuotient) | (CaseKind::Iii, Direction::ToCover) => c_to_b(c),
        (CaseKind::Iii, Direction::ToQuotient) | (CaseKind::Ii, Direction::ToCover) => b_to_c(c),
    }
}

/// Case ii followed by case iii (or iii then ii, or i twice) gives back `c`.
pub fn roundtrip_check(c: &Component, case: &TransferCase) -> Result<bool> {
    let other = TransferCase::of(match case.tag {
        CaseKind::I => CaseKind::I,
        CaseKind::Ii => CaseKind::Iii,
        CaseKind::Iii => CaseKind::Ii,
    });
    let there = transfer(c, case, Direction::ToQuotient)?;
    let back = transfer(&there, &other, Direction::ToQuotient)?;
    Ok(back == *c)
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassCheck {
    pub before: Option<Table1Match>,
    pub after: Option<Table1Match>,
    /// Both sides match and the rows agree, or are the `B_n`/`C_n` pair.
    pub preserved: bool,
    /// Matching or not matching, the two sides agree.
    pub status_invariant: bool,
}

const ROW_B: usize = 1;
const ROW_C: usize = 2;

pub fn class_preserved(before: &Component, after: &Component) -> Result<ClassCheck> {
    let b = table1_match(&before.cartan, &before.labels)?;
    let a = table1_match(&after.cartan, &after.labels)?;
    let preserved = match (&b, &a) {
        (Some(x), Some(y)) => {
            x.row == y.row || (x.row.min(y.row), x.row.max(y.row)) == (ROW_B, ROW_C)
        }
        _ => false,
    };
    Ok(ClassCheck {
        status_invariant: b.is_some() == a.is_some(),
        before: b,
        after: a,
        preserved,
    })
}
