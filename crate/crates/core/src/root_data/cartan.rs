//! Cartan types and their Cartan matrices (Bourbaki numbering, 0-based).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest rank accepted when building root systems.
pub const MAX_RANK: usize = 8;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Result<Self> {
        Ok(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return Err(Error::UnsupportedType(c.to_string())),
        })
    }
}

/// An irreducible Cartan type. `B1` and `C1` are allowed as names for a
/// rank-one system whose root is tagged short resp. long; `D2` and `D3`
/// are the usual `A1xA1` and `A3`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct CartanType {
    pub family: Family,
    pub rank: usize,
}

/// Length tag of a root inside its irreducible component. Simply-laced
/// components tag every root short, which is where their labels sit in the
/// unipotent label table.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RootLength {
    Long,
    Short,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A | Family::B | Family::C => rank >= 1,
            Family::D => rank >= 2,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if !ok {
            return Err(Error::UnsupportedType(format!("{}{}", family.letter(), rank)));
        }
        if rank > MAX_RANK {
            return Err(Error::RankTooLarge {
                rank,
                limit: MAX_RANK,
                what: "root system construction",
            });
        }
        Ok(CartanType { family, rank })
    }

    pub fn is_simply_laced(&self) -> bool {
        matches!(self.family, Family::A | Family::D | Family::E)
    }

    /// B and C swap; everything else is self-dual up to relabelling.
    pub fn dual(&self) -> CartanType {
        let family = match self.family {
            Family::B => Family::C,
            Family::C => Family::B,
            f => f,
        };
        CartanType { family, rank: self.rank }
    }

    /// `A[i][j] = <alpha_i^vee, alpha_j>`.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize| {
            a[i][j] = -1;
            a[j][i] = -1;
        };
        match self.family {
            Family::A | Family::B | Family::C => {
                for i in 1..n {
                    link(i - 1, i);
                }
            }
            Family::D => {
                for i in 1..n.saturating_sub(1) {
                    link(i - 1, i);
                }
                if n >= 3 {
                    link(n - 3, n - 1);
                }
            }
            Family::E => {
                link(0, 2);
                link(1, 3);
                for i in 3..n {
                    link(i - 1, i);
                }
            }
            Family::F => {
                link(0, 1);
                link(1, 2);
                link(2, 3);
            }
            Family::G => link(0, 1),
        }
        match self.family {
            Family::B if n >= 2 => a[n - 1][n - 2] = -2,
            Family::C if n >= 2 => a[n - 2][n - 1] = -2,
            Family::F => a[2][1] = -2,
            Family::G => a[0][1] = -3,
            _ => {}
        }
        a
    }

    /// Squared lengths of the simple roots up to a common factor, chosen so
    /// that `d_i A_ij` is symmetric.
    pub fn symmetrizer(&self) -> Vec<i64> {
        let n = self.rank;
        match self.family {
            Family::B => (0..n).map(|i| if i + 1 == n { 1 } else { 2 }).collect(),
            Family::C => (0..n).map(|i| if i + 1 == n { 2 } else { 1 }).collect(),
            Family::F => vec![2, 2, 1, 1],
            Family::G => vec![1, 3],
            _ => vec![1; n],
        }
    }

    /// Length tag of a root with the given symmetrizer value.
    pub fn length_of_norm(&self, norm: i64) -> RootLength {
        match self.family {
            Family::B | Family::C if self.rank == 1 => {
                if self.family == Family::B {
                    RootLength::Short
                } else {
                    RootLength::Long
                }
            }
            Family::A | Family::D | Family::E => RootLength::Short,
            _ => {
                let max = *self.symmetrizer().iter().max().unwrap();
                if norm == max {
                    RootLength::Long
                } else {
                    RootLength::Short
                }
            }
        }
    }

    /// Number of roots by the classification.
    pub fn root_count(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1),
            Family::B | Family::C => 2 * n * n,
            Family::D => 2 * n * (n - 1),
            Family::E => match n {
                6 => 72,
                7 => 126,
                _ => 240,
            },
            Family::F => 48,
            Family::G => 12,
        }
    }

    /// Orders of the Weyl group by the classification.
    pub fn weyl_order(&self) -> u128 {
        let n = self.rank as u128;
        let fact = |k: u128| (1..=k).product::<u128>();
        match self.family {
            Family::A => fact(n + 1),
            Family::B | Family::C => (1u128 << n) * fact(n),
            Family::D => (1u128 << (n - 1)) * fact(n),
            Family::E => match n {
                6 => 51840,
                7 => 2903040,
                _ => 696729600,
            },
            Family::F => 1152,
            Family::G => 12,
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().replace('_', "");
        let mut chars = s.chars();
        let c = chars
            .next()
            .ok_or_else(|| Error::Parse("empty Cartan type".into()))?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::Parse(format!("bad Cartan type `{s}`")))?;
        CartanType::new(Family::from_letter(c)?, rank)
    }
}

impl Serialize for CartanType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for CartanType {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
