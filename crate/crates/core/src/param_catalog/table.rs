//! The table of label functions realised by unipotent representations, and
//! matching of arbitrary labels against it up to rescaling of the q-base.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::label_params::{q_from_labels, LabelFunction};
use crate::mu_function::{sigma_o_mu, MuFactor};
use crate::root_data::{CartanType, Family, RootLength, RootSystem};
use crate::serde_rat::{self, rat_to_string};
use crate::Rat;

/// Allowed values for one column of a row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Constraint {
    /// The type has no roots of this length.
    Absent,
    PosInt,
    NonNegInt,
    OneOf(Vec<i64>),
    /// `lambda* = lambda` on short roots.
    EqualsLambda,
}

impl Constraint {
    /// `lambda` is the short label, for [`Constraint::EqualsLambda`].
    /// A missing value is accepted; the caller checks which lengths exist.
    pub fn admits(&self, x: Option<Rat>, lambda: Option<Rat>) -> bool {
        let Some(x) = x else {
            return true;
        };
        match self {
            Constraint::Absent => false,
            Constraint::PosInt => x.is_integer() && x.is_positive(),
            Constraint::NonNegInt => x.is_integer() && !x.is_negative(),
            Constraint::OneOf(vals) => x.is_integer() && vals.contains(x.numer()),
            Constraint::EqualsLambda => Some(x) == lambda,
        }
    }
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Constraint::Absent => f.write_str("-"),
            Constraint::PosInt => f.write_str("Z>0"),
            Constraint::NonNegInt => f.write_str("Z>=0"),
            Constraint::OneOf(v) if v.len() == 1 => write!(f, "{}", v[0]),
            Constraint::OneOf(v) => {
                let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                write!(f, "{{{}}}", parts.join(","))
            }
            Constraint::EqualsLambda => f.write_str("=lambda"),
        }
    }
}

impl Serialize for Constraint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Pattern {
    Ade,
    B,
    C,
    F4,
    G2,
    B2,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Table1Row {
    pub component_type: &'static str,
    pub lambda_long: Constraint,
    pub lambda_short: Constraint,
    pub lambda_star_short: Constraint,
    #[serde(skip)]
    pattern: Pattern,
}

impl Table1Row {
    pub const CSV_HEADER: [&'static str; 4] =
        ["component_type", "lambda_long", "lambda_short", "lambda_star_short"];

    pub fn csv_record(&self) -> [String; 4] {
        [
            self.component_type.to_string(),
            self.lambda_long.to_string(),
            self.lambda_short.to_string(),
            self.lambda_star_short.to_string(),
        ]
    }

    /// Rows are selected by type name: `B2` and `C2` are not identified,
    /// and neither are `A1`, `B1`, `C1`.
    pub fn applies_to(&self, ct: &CartanType) -> bool {
        match self.pattern {
            Pattern::Ade => matches!(ct.family, Family::A | Family::D | Family::E),
            Pattern::B => ct.family == Family::B,
            Pattern::C => ct.family == Family::C,
            Pattern::F4 => ct.family == Family::F,
            Pattern::G2 => ct.family == Family::G,
            Pattern::B2 => ct.family == Family::B && ct.rank == 2,
        }
    }

    fn admits(&self, l: &Table1Labels) -> bool {
        self.lambda_long.admits(l.long, None)
            && self.lambda_short.admits(l.short, None)
            && self.lambda_star_short.admits(l.star(), l.short)
    }
}

fn row(
    component_type: &'static str,
    pattern: Pattern,
    lambda_long: Constraint,
    lambda_short: Constraint,
    lambda_star_short: Constraint,
) -> Table1Row {
    Table1Row {
        component_type,
        lambda_long,
        lambda_short,
        lambda_star_short,
        pattern,
    }
}

/// The ten rows, in the printed order. Labels live on the roots of the
/// coroot system; simply-laced types carry theirs in the short column.
pub fn table1() -> Vec<Table1Row> {
    use Constraint::*;
    let one = || OneOf(vec![1]);
    vec![
        row("A_n, D_n, E_n", Pattern::Ade, Absent, PosInt, EqualsLambda),
        row("B_n", Pattern::B, OneOf(vec![1, 2]), PosInt, NonNegInt),
        row("C_n", Pattern::C, PosInt, OneOf(vec![1, 2]), EqualsLambda),
        row("F_4", Pattern::F4, OneOf(vec![1, 2]), one(), one()),
        row("F_4", Pattern::F4, one(), OneOf(vec![2]), OneOf(vec![2])),
        row("F_4", Pattern::F4, OneOf(vec![4]), one(), one()),
        row("G_2", Pattern::G2, OneOf(vec![1, 3]), one(), one()),
        row("G_2", Pattern::G2, one(), OneOf(vec![3]), OneOf(vec![3])),
        row("G_2", Pattern::G2, OneOf(vec![9]), one(), one()),
        row("B_2", Pattern::B2, OneOf(vec![3]), OneOf(vec![3]), one()),
    ]
}

/// Labels of one irreducible component: `long` on long roots (where
/// `lambda* = lambda`), `short` and `star` on short roots. `star` defaults
/// to `short`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Table1Labels {
    #[serde(with = "serde_rat::option", skip_serializing_if = "Option::is_none")]
    pub long: Option<Rat>,
    #[serde(with = "serde_rat::option", skip_serializing_if = "Option::is_none")]
    pub short: Option<Rat>,
    #[serde(with = "serde_rat::option", skip_serializing_if = "Option::is_none")]
    pub star: Option<Rat>,
}

impl Table1Labels {
    pub fn new(long: Option<Rat>, short: Option<Rat>, star: Option<Rat>) -> Self {
        Table1Labels { long, short, star }
    }

    pub fn ints(long: Option<i64>, short: Option<i64>, star: Option<i64>) -> Self {
        let r = |x: Option<i64>| x.map(Rat::from_integer);
        Self::new(r(long), r(short), r(star))
    }

    pub fn star(&self) -> Option<Rat> {
        self.star.or(self.short)
    }

    fn values(&self) -> impl Iterator<Item = Rat> {
        [self.long, self.short, self.star()].into_iter().flatten()
    }

    fn scaled(&self, r: Rat) -> Self {
        Table1Labels {
            long: self.long.map(|x| x / r),
            short: self.short.map(|x| x / r),
            star: self.star().map(|x| x / r),
        }
    }
}

impl fmt::Display for Table1Labels {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = |x: Option<Rat>| x.map_or("-".to_string(), |x| rat_to_string(&x));
        write!(f, "({}, {}, {})", s(self.long), s(self.short), s(self.star()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Table1Match {
    /// Index into [`table1`].
    pub row: usize,
    pub row_type: &'static str,
    /// The labels were divided by this.
    #[serde(with = "serde_rat")]
    pub scale: Rat,
    pub scaled: Table1Labels,
}

/// Largest label value in any finite row; bounds the rescaling search.
const MAX_ROW_VALUE: i64 = 9;

fn rat_gcd(vals: impl Iterator<Item = Rat>) -> Option<Rat> {
    vals.filter(|x| !x.is_zero()).map(|x| x.abs()).reduce(|a, b| {
        let den = a.denom().lcm(b.denom());
        let num = (a.numer() * (den / a.denom())).gcd(&(b.numer() * (den / b.denom())));
        Rat::new(num, den)
    })
}

/// First row (in table order) for `ct` that admits the labels after
/// dividing by some positive rational `r`. Matching labels are integers
/// after rescaling, so `r = g / k` with `g` the gcd of the labels; the
/// finite rows cap `k` at 9 and the infinite rows are closed under integer
/// multiples, so `k <= 9` is exhaustive.
pub fn table1_match(ct: &CartanType, labels: &Table1Labels) -> Result<Option<Table1Match>> {
    if ct.family == Family::D && ct.rank == 2 {
        return Err(Error::UnsupportedType(
            "D2 is reducible; match its two A1 factors".into(),
        ));
    }
    let has_long = !ct.is_simply_laced() && !(ct.rank == 1 && ct.family == Family::B);
    let has_short = !(ct.rank == 1 && ct.family == Family::C);
    if labels.long.is_some() != has_long || labels.short.is_some() != has_short {
        return Err(Error::InvalidLabels(format!(
            "{ct} takes {} labels, got {labels}",
            match (has_long, has_short) {
                (true, true) => "long and short",
                (true, false) => "long",
                _ => "short",
            }
        )));
    }
    if labels.values().any(|x| x.is_negative()) {
        return Ok(None);
    }
    let Some(g) = rat_gcd(labels.values()) else {
        return Ok(None);
    };
    for (i, row) in table1().iter().enumerate() {
        if !row.applies_to(ct) {
            continue;
        }
        for k in 1..=MAX_ROW_VALUE {
            let r = g / Rat::from_integer(k);
            let scaled = labels.scaled(r);
            if row.admits(&scaled) {
                return Ok(Some(Table1Match {
                    row: i,
                    row_type: row.component_type,
                    scale: r,
                    scaled,
                }));
            }
        }
    }
    Ok(None)
}

/// One irreducible piece of a labelled root system and its match.
#[derive(Clone, Debug, Serialize)]
pub struct ComponentMatch {
    pub component: CartanType,
    /// Simple roots of the piece.
    pub simple: Vec<usize>,
    pub labels: Table1Labels,
    pub matched: Option<Table1Match>,
}

/// Matches every irreducible component of `rs` against the table. `D2` is
/// split into its two `A1` factors. A long root with `lambda* != lambda`
/// never matches.
pub fn match_label_function(rs: &RootSystem, lf: &LabelFunction) -> Result<Vec<ComponentMatch>> {
    let mut out = Vec::new();
    for (c, ct) in rs.components().iter().enumerate() {
        let range: Vec<usize> = rs.component_range(c).collect();
        let pieces: Vec<(CartanType, Vec<usize>)> = if ct.family == Family::D && ct.rank == 2 {
            let a1 = CartanType::new(Family::A, 1)?;
            range.iter().map(|&i| (a1, vec![i])).collect()
        } else {
            vec![(*ct, range)]
        };
        for (piece, simple) in pieces {
            let mut labels = Table1Labels::default();
            let mut long_ok = true;
            for &i in &simple {
                let (lam, star) = lf.of_simple(i).ok_or_else(|| {
                    Error::InvalidLabels(format!("no label on simple root {i}"))
                })?;
                match rs.simple_length(i) {
                    RootLength::Long => {
                        long_ok &= lam == star;
                        labels.long = Some(lam);
                    }
                    RootLength::Short => {
                        labels.short = Some(lam);
                        labels.star = Some(star);
                    }
                }
            }
            let matched = if long_ok {
                table1_match(&piece, &labels)?
            } else {
                None
            };
            out.push(ComponentMatch {
                component: piece,
                simple,
                labels,
                matched,
            });
        }
    }
    Ok(out)
}

/// Whether every component of `(rs, lf)` matches some row.
pub fn conforms_to_table1(rs: &RootSystem, lf: &LabelFunction) -> Result<bool> {
    Ok(match_label_function(rs, lf)?.iter().all(|m| m.matched.is_some()))
}

/// Like [`match_label_function`], after removing the orbits labelled 0:
/// their roots have constant mu-factor and are not in the root system of
/// the algebra. The remaining roots are regrouped by [`sigma_o_mu`], so
/// `B_n` without its short roots is matched as `D_n`.
pub fn reduced_match(rs: &RootSystem, lf: &LabelFunction) -> Result<(RootSystem, Vec<ComponentMatch>)> {
    if lf.orbits.iter().all(|o| !o.lambda.is_zero()) {
        return Ok((rs.clone(), match_label_function(rs, lf)?));
    }
    let factors = (0..lf.orbits.len())
        .map(|i| Ok((i, MuFactor::from_pair(&q_from_labels(lf, i)?)?)))
        .collect::<Result<BTreeMap<_, _>>>()?;
    let sigma = sigma_o_mu(rs, &factors)?;
    if sigma.system.is_empty() {
        return Ok((sigma.system, Vec::new()));
    }
    let m = match_label_function(&sigma.system, &sigma.labels)?;
    Ok((sigma.system, m))
}
