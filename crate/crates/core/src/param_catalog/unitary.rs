//! Principal series of quasi-split unitary groups `U_N`: the root system
//! and labels per class of the inducing character, and the split-field
//! exponent for roots of quasi-split groups.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::label_params::LabelFunction;
use crate::root_data::{CartanType, Family, RootLength, RootSystem};
use crate::serde_rat;
use crate::Rat;

/// How a class of characters of `E^x` pairs with its conjugate-inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassTag {
    NonSkew,
    /// Skew, but nontrivial on the norm-one units; only for ramified `E/F`.
    SkewNontrivial,
    SkewTrivial,
}

impl ClassTag {
    fn short(self) -> &'static str {
        match self {
            ClassTag::NonSkew => "ns",
            ClassTag::SkewNontrivial => "sn",
            ClassTag::SkewTrivial => "st",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnitarySignature {
    /// `(tag, N_i)` with `N_i >= 1`.
    pub classes: Vec<(ClassTag, usize)>,
    /// Coordinates where the character is trivial; only for odd `N`.
    pub n0: usize,
}

impl UnitarySignature {
    pub fn total(&self) -> usize {
        self.classes.iter().map(|c| c.1).sum::<usize>() + self.n0
    }

    /// Every signature for `U_N`, in a fixed order: class sizes as
    /// non-increasing runs within each tag.
    pub fn all(n: usize, ramified: bool) -> Vec<UnitarySignature> {
        let half = n / 2;
        let tags: &[ClassTag] = if ramified {
            &[ClassTag::NonSkew, ClassTag::SkewNontrivial, ClassTag::SkewTrivial]
        } else {
            &[ClassTag::NonSkew, ClassTag::SkewTrivial]
        };
        let n0s: Vec<usize> = if n % 2 == 1 { (0..=half).collect() } else { vec![0] };
        let mut out = Vec::new();
        for n0 in n0s {
            let mut acc = Vec::new();
            fill(half - n0, tags, usize::MAX, &mut acc, &mut |classes| {
                out.push(UnitarySignature {
                    classes: classes.to_vec(),
                    n0,
                })
            });
        }
        out
    }
}

fn fill(
    left: usize,
    tags: &[ClassTag],
    cap: usize,
    acc: &mut Vec<(ClassTag, usize)>,
    emit: &mut dyn FnMut(&[(ClassTag, usize)]),
) {
    if left == 0 {
        emit(acc);
        return;
    }
    let Some((&tag, rest)) = tags.split_first() else {
        return;
    };
    for size in (1..=left.min(cap)).rev() {
        acc.push((tag, size));
        fill(left - size, tags, size, acc, emit);
        acc.pop();
    }
    fill(left, rest, usize::MAX, acc, emit);
}

impl fmt::Display for UnitarySignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> =
            self.classes.iter().map(|(t, k)| format!("{}:{k}", t.short())).collect();
        if self.n0 > 0 {
            parts.push(format!("n0:{}", self.n0));
        }
        f.write_str(&parts.join(","))
    }
}

/// `ns:2,st:1,n0:1` and so on; `sn` is skew-nontrivial.
impl FromStr for UnitarySignature {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut sig = UnitarySignature {
            classes: Vec::new(),
            n0: 0,
        };
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (tag, k) = part
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("`{part}` is not tag:size")))?;
            let k: usize = k
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad class size in `{part}`")))?;
            let tag = match tag.trim() {
                "n0" => {
                    sig.n0 += k;
                    continue;
                }
                "ns" => ClassTag::NonSkew,
                "sn" => ClassTag::SkewNontrivial,
                "st" => ClassTag::SkewTrivial,
                t => return Err(Error::Parse(format!("unknown class tag `{t}`"))),
            };
            sig.classes.push((tag, k));
        }
        Ok(sig)
    }
}

/// One factor of the principal-series Hecke algebra.
#[derive(Clone, Debug, Serialize)]
pub struct PsComponent {
    /// `None` for the `N_0` block.
    pub class: Option<ClassTag>,
    pub size: usize,
    /// `None` when the root system is empty (`A_0`, `D_1`).
    pub cartan: Option<CartanType>,
    #[serde(skip)]
    pub system: RootSystem,
    pub labels: Option<LabelFunction>,
    /// The factor is crossed with the reflection in `2 beta`.
    pub crossed_product: bool,
    /// Exponent of the extra affine quadratic relation on the `B_{N_0}` block.
    #[serde(with = "serde_rat::option", skip_serializing_if = "Option::is_none")]
    pub affine_extra: Option<Rat>,
    pub lattice_offset: usize,
    pub lattice_rank: usize,
}

impl PsComponent {
    pub const CSV_HEADER: [&'static str; 7] = [
        "class",
        "size",
        "type",
        "labels",
        "crossed_product",
        "affine_extra",
        "lattice_offset",
    ];

    pub fn csv_record(&self) -> [String; 7] {
        let labels = self.labels.as_ref().map_or(String::new(), |lf| {
            lf.orbits
                .iter()
                .map(|o| {
                    if o.lambda == o.lambda_star {
                        serde_rat::rat_to_string(&o.lambda)
                    } else {
                        format!(
                            "{}/{}",
                            serde_rat::rat_to_string(&o.lambda),
                            serde_rat::rat_to_string(&o.lambda_star)
                        )
                    }
                })
                .collect::<Vec<_>>()
                .join(" ")
        });
        [
            self.class.map_or("n0".into(), |c| c.short().into()),
            self.size.to_string(),
            self.cartan.map_or("empty".into(), |c| c.to_string()),
            labels,
            self.crossed_product.to_string(),
            self.affine_extra.map_or(String::new(), |e| serde_rat::rat_to_string(&e)),
            self.lattice_offset.to_string(),
        ]
    }
}

fn component(
    class: Option<ClassTag>,
    size: usize,
    cartan: Option<(Family, usize)>,
    long: i64,
    short: (i64, i64),
    offset: usize,
) -> Result<PsComponent> {
    let cartan = match cartan {
        Some((fam, r)) if r >= 1 && !(fam == Family::D && r < 2) => {
            Some(CartanType::new(fam, r)?)
        }
        _ => None,
    };
    let system = match cartan {
        Some(c) => RootSystem::new(&[c])?,
        None => RootSystem::empty(),
    };
    let labels = match cartan {
        Some(_) => {
            let values: Vec<(Rat, Rat)> = system
                .orbits()
                .iter()
                .map(|o| match o.length {
                    RootLength::Long => (Rat::from_integer(long), Rat::from_integer(long)),
                    RootLength::Short => (Rat::from_integer(short.0), Rat::from_integer(short.1)),
                })
                .collect();
            Some(LabelFunction::from_orbit_values(&system, &values)?)
        }
        None => None,
    };
    Ok(PsComponent {
        class,
        size,
        cartan,
        system,
        labels,
        crossed_product: false,
        affine_extra: None,
        lattice_offset: offset,
        lattice_rank: size,
    })
}

/// Factors of the Hecke algebra for the principal series of `U_N` over a
/// quadratic `E/F`, one per class and one for `N_0`, labels against `q_F`.
pub fn unitary_ps_descriptor(
    n: usize,
    ramified: bool,
    sig: &UnitarySignature,
) -> Result<Vec<PsComponent>> {
    let bad = |m: String| Err(Error::InvalidParams(m));
    if n < 2 {
        return bad(format!("U_{n} has no principal series roots"));
    }
    if sig.total() != n / 2 {
        return bad(format!(
            "signature sizes sum to {}, need floor({n}/2) = {}",
            sig.total(),
            n / 2
        ));
    }
    if n.is_multiple_of(2) && sig.n0 > 0 {
        return bad("an N_0 block needs odd N".into());
    }
    if sig.classes.iter().any(|c| c.1 == 0) {
        return bad("class sizes must be positive".into());
    }
    if !ramified && sig.classes.iter().any(|c| c.0 == ClassTag::SkewNontrivial) {
        return bad("skew-nontrivial classes need a ramified extension".into());
    }
    let odd = n % 2 == 1;
    let mut out = Vec::new();
    let mut offset = 0;
    for &(tag, k) in &sig.classes {
        let mut c = match (ramified, tag, odd) {
            (false, ClassTag::NonSkew, _) => component(Some(tag), k, Some((Family::A, k - 1)), 2, (2, 2), offset)?,
            (false, _, _) => component(Some(tag), k, Some((Family::B, k)), 2, (1, 1), offset)?,
            (true, ClassTag::NonSkew, _) => component(Some(tag), k, Some((Family::A, k - 1)), 1, (1, 1), offset)?,
            (true, ClassTag::SkewNontrivial, false) | (true, ClassTag::SkewTrivial, true) => {
                let mut c = component(Some(tag), k, Some((Family::D, k)), 1, (1, 1), offset)?;
                c.crossed_product = true;
                c
            }
            (true, _, _) => component(Some(tag), k, Some((Family::C, k)), 1, (1, 1), offset)?,
        };
        c.lattice_rank = k;
        offset += k;
        out.push(c);
    }
    if sig.n0 > 0 {
        let (long, short) = if ramified { (1, (1, 1)) } else { (2, (3, 1)) };
        let mut c = component(None, sig.n0, Some((Family::B, sig.n0)), long, short, offset)?;
        c.affine_extra = Some(Rat::from_integer(1));
        out.push(c);
    }
    Ok(out)
}

/// `q_alpha = q_F^{|W_F alpha| / |I_F alpha|}` for a root of a quasi-split
/// group in the principal series; `q_alpha* = 1`.
pub fn quasisplit_ps_q(orbit_wf: u64, orbit_if: u64) -> Result<Rat> {
    if orbit_if == 0 || !orbit_wf.is_multiple_of(orbit_if) {
        return Err(Error::InvalidParams(format!(
            "inertia orbit size {orbit_if} does not divide Weil orbit size {orbit_wf}"
        )));
    }
    Ok(Rat::from_integer((orbit_wf / orbit_if) as i64))
}

/// The three rank-one possibilities for `U_3` at the non-orthogonal pair of
/// simple roots: exponents of `q_alpha`, `q_{F_alpha}`, `q_alpha*`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct U3Outcome {
    pub tag: &'static str,
    pub q_alpha: i64,
    pub q_f_alpha: i64,
    pub q_alpha_star: i64,
}

pub fn u3_outcomes() -> [U3Outcome; 3] {
    [
        U3Outcome { tag: "i", q_alpha: 1, q_f_alpha: 1, q_alpha_star: 0 },
        U3Outcome { tag: "ii", q_alpha: 1, q_f_alpha: 2, q_alpha_star: 0 },
        U3Outcome { tag: "iii", q_alpha: 2, q_f_alpha: 2, q_alpha_star: 1 },
    ]
}
