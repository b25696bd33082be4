//! Rank-one intertwining operators on Iwahori-fixed vectors, with entries in
//! `Q(v)(z)`, `v^2 = q_F`, plus a finite model of the ramified case: sums of
//! a character over the unit group of `Z/p^k`, computed in `Z[zeta_m]`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::label_params::ParamPair;
use crate::mu_function::{profile_of, signed_v_roots, PoleZeroProfile};
use crate::poly::Poly;
use crate::{Coeff, Coeff2, CoeffF64, Rat, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Direction {
    /// From the induced module along `P` to the one along the opposite parabolic.
    POp,
    /// Back again.
    P,
}

impl std::str::FromStr for Direction {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "p-op" | "P->Pop" | "forward" => Ok(Direction::POp),
            "p" | "Pop->P" | "backward" => Ok(Direction::P),
            _ => Err(Error::Parse(format!("direction `{s}`: use forward or backward"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JMatrix {
    pub direction: Direction,
    pub entries: [[Coeff2; 2]; 2],
}

fn q_inv() -> Coeff2 {
    Coeff2::constant(Coeff::var_pow(-2))
}

fn z() -> Coeff2 {
    Coeff2::var()
}

fn one() -> Coeff2 {
    Coeff2::one()
}

/// The matrix in the bases supported on `P I` and `P s I`.
pub fn j_matrix(direction: Direction) -> JMatrix {
    let c = one() - q_inv();
    let zi = Coeff2::var_pow(-1);
    let entries = match direction {
        Direction::POp => [
            [q_inv(), c.clone() / (one() - z())],
            [c / (zi - one()), one()],
        ],
        Direction::P => [
            [one(), c.clone() / (z() - one())],
            [c / (one() - zi), q_inv()],
        ],
    };
    JMatrix { direction, entries }
}

impl JMatrix {
    pub fn mul(&self, o: &JMatrix) -> [[Coeff2; 2]; 2] {
        let e = |i: usize, j: usize| {
            self.entries[i][0].clone() * o.entries[0][j].clone()
                + self.entries[i][1].clone() * o.entries[1][j].clone()
        };
        [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
    }

    /// Every denominator is a power of `z` times a power of `z - 1`.
    pub fn poles_only_at_one(&self) -> bool {
        let zm1 = Poly::from_coeffs(vec![-Coeff::one(), Coeff::one()]);
        self.entries.iter().flatten().all(|e| {
            let mut d = e.den().clone();
            d = d.unshift(d.valuation().unwrap_or(0));
            while d.degree().unwrap_or(0) > 0 {
                match d.exact_div(&zm1) {
                    Some(q) => d = q,
                    None => return false,
                }
            }
            true
        })
    }

    pub fn to_strings(&self) -> [[String; 2]; 2] {
        let s = |i: usize, j: usize| self.entries[i][j].to_string();
        [[s(0, 0), s(0, 1)], [s(1, 0), s(1, 1)]]
    }
}

/// `q^-1 + (1 - q^-1)^2 / ((1 - z)(1 - z^-1))`, built as written.
pub fn composite_scalar() -> Coeff2 {
    let c = one() - q_inv();
    q_inv() + c.clone() * c / ((one() - z()) * (one() - Coeff2::var_pow(-1)))
}

/// `J_back * J_fwd == composite_scalar * id` exactly.
pub fn verify_composite() -> bool {
    let p = j_matrix(Direction::P).mul(&j_matrix(Direction::POp));
    let s = composite_scalar();
    p[0][0] == s && p[1][1] == s && p[0][1].is_zero() && p[1][0].is_zero()
}

/// Zeros and poles of `1 / composite_scalar` in `z`.
pub fn reciprocal_profile() -> PoleZeroProfile {
    let s = composite_scalar();
    profile_of(&(one() / s)).expect("composite scalar splits into z -+ v^k")
}

/// `(q_alpha, q_alpha*)` from the zeros of the composite scalar: the largest
/// positive zero gives `q_alpha`, a negative zero would give `q_alpha*`.
pub fn reducibility_points() -> Result<ParamPair> {
    let s = composite_scalar();
    let (roots, rest) = signed_v_roots(s.num());
    if rest.degree().unwrap_or(0) > 0 {
        return Err(Error::Precondition("composite scalar has other zeros".into()));
    }
    let top = |sign: i8| {
        roots
            .iter()
            .filter(|r| r.0 == sign)
            .map(|r| Rat::new(r.1, 2))
            .max()
            .unwrap_or_else(Rat::zero)
    };
    ParamPair::new(top(1), top(-1))
}

/// Real zeros of the composite scalar at a concrete `q_F`.
pub fn numeric_zeros(q: f64) -> Vec<f64> {
    let s = composite_scalar();
    let v = q.sqrt();
    let num: CoeffF64 = Poly::from_coeffs(
        s.num()
            .coeffs()
            .iter()
            .map(|c| c.map(|a| Scalar::to_f64(a).expect("finite")).eval(&v).expect("no pole at v > 0"))
            .collect(),
    );
    let c = num.coeffs();
    assert_eq!(c.len(), 3, "numerator is quadratic in z");
    let (a, b, c0) = (c[2], c[1], c[0]);
    let disc = b * b - 4.0 * a * c0;
    if disc < 0.0 {
        return Vec::new();
    }
    let mut r = vec![(-b - disc.sqrt()) / (2.0 * a), (-b + disc.sqrt()) / (2.0 * a)];
    r.sort_by(f64::total_cmp);
    r
}

/// Whether `alpha` survives in the unramified case and what its parameters are;
/// a ramified restriction to the units removes it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum RankOneOutcome {
    InSigma { params: ParamPair },
    NotInSigma { reason: String },
}

pub fn rank_one_outcome(restriction_to_units: &FiniteCharacter) -> Result<RankOneOutcome> {
    if restriction_to_units.is_trivial() {
        Ok(RankOneOutcome::InSigma {
            params: reducibility_points()?,
        })
    } else {
        Ok(RankOneOutcome::NotInSigma {
            reason: format!(
                "ramified: character mod {} of order {} is nontrivial on units",
                restriction_to_units.modulus,
                restriction_to_units.order()
            ),
        })
    }
}

/// A character of `(Z/n)^x` with values `zeta_m^e`, stored as exponents `e`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteCharacter {
    pub modulus: u64,
    pub m: u64,
    pub values: BTreeMap<u64, u64>,
}

pub const MAX_MODULUS: u64 = 10_000;

fn units(n: u64) -> Vec<u64> {
    (1..n.max(2)).filter(|&a| a.gcd(&n) == 1).collect()
}

fn mul_order(g: u64, n: u64) -> u64 {
    let mut x = g % n;
    let mut k = 1;
    while x != 1 % n {
        x = x * g % n;
        k += 1;
    }
    k
}

/// A generator of `(Z/n)^x` when that group is cyclic.
pub fn primitive_root(n: u64) -> Option<u64> {
    let u = units(n);
    let phi = u.len() as u64;
    u.into_iter().find(|&g| mul_order(g, n) == phi)
}

impl FiniteCharacter {
    /// Validates a table of exponents.
    pub fn from_table(modulus: u64, m: u64, values: BTreeMap<u64, u64>) -> Result<Self> {
        if !(2..=MAX_MODULUS).contains(&modulus) {
            return Err(Error::InvalidParams(format!("modulus must be in 2..={MAX_MODULUS}")));
        }
        if m == 0 {
            return Err(Error::InvalidParams("root of unity order must be positive".into()));
        }
        let u = units(modulus);
        if values.keys().copied().collect::<Vec<_>>() != u {
            return Err(Error::InvalidParams(format!(
                "table must list exactly the units mod {modulus}"
            )));
        }
        let values: BTreeMap<u64, u64> = values.into_iter().map(|(k, e)| (k, e % m)).collect();
        for &a in &u {
            for &b in &u {
                if values[&(a * b % modulus)] != (values[&a] + values[&b]) % m {
                    return Err(Error::InvalidParams(format!(
                        "not multiplicative: chi({a}) chi({b}) != chi({})",
                        a * b % modulus
                    )));
                }
            }
        }
        Ok(FiniteCharacter { modulus, m, values })
    }

    /// The character sending a fixed generator to `zeta_m^k`, `m = phi(n)`;
    /// needs a cyclic unit group.
    pub fn from_generator(modulus: u64, k: u64) -> Result<Self> {
        if !(2..=MAX_MODULUS).contains(&modulus) {
            return Err(Error::InvalidParams(format!("modulus must be in 2..={MAX_MODULUS}")));
        }
        let g = primitive_root(modulus)
            .ok_or_else(|| Error::InvalidParams(format!("(Z/{modulus})^x is not cyclic")))?;
        let m = units(modulus).len() as u64;
        let mut values = BTreeMap::new();
        let mut x = 1 % modulus;
        for i in 0..m {
            values.insert(x, i * k % m);
            x = x * g % modulus;
        }
        Ok(FiniteCharacter { modulus, m, values })
    }

    /// All characters of a cyclic unit group, the trivial one first.
    pub fn all(modulus: u64) -> Result<Vec<Self>> {
        let m = units(modulus).len() as u64;
        (0..m).map(|k| Self::from_generator(modulus, k)).collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.values.values().all(|&e| e == 0)
    }

    /// Order of the character in the character group.
    pub fn order(&self) -> u64 {
        self.values
            .values()
            .fold(1, |acc, &e| acc.lcm(&(self.m / self.m.gcd(&e))))
    }
}

/// An element of `Z[zeta_m]`, reduced modulo the `m`-th cyclotomic polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cyclotomic {
    pub m: u64,
    pub poly: Poly<BigInt>,
}

impl Cyclotomic {
    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.poly.fmt_var("zeta"))
    }
}

impl Serialize for Cyclotomic {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Cyclotomic", 2)?;
        st.serialize_field("m", &self.m)?;
        st.serialize_field("value", &self.to_string())?;
        st.end()
    }
}

/// `Phi_m` over `Z`.
pub fn cyclotomic_poly(m: u64) -> Poly<BigInt> {
    let mut p = Poly::monomial(BigInt::one(), m as usize) - Poly::one();
    for d in 1..m {
        if m.is_multiple_of(d) {
            p = p.exact_div(&cyclotomic_poly(d)).expect("Phi_d divides x^m - 1");
        }
    }
    p
}

/// `sum_{u in (Z/n)^x} chi(u)` in `Z[zeta_m]`.
pub fn char_sum(chi: &FiniteCharacter) -> Cyclotomic {
    let m = chi.m as usize;
    let mut c = vec![BigInt::zero(); m];
    for &e in chi.values.values() {
        c[e as usize] += 1;
    }
    let (_, r) = Poly::from_coeffs(c).div_rem(&cyclotomic_poly(chi.m));
    Cyclotomic { m: chi.m, poly: r }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mu_function::{q_from_poles, PzEntry};
    use crate::Rational;

    fn cv(n: i64) -> Coeff2 {
        Coeff2::constant(Coeff::constant(Rational::from_integer(n.into())))
    }

    #[test]
    fn displayed_entries() {
        let f = j_matrix(Direction::POp);
        assert_eq!(f.entries[0][0], q_inv());
        assert_eq!(f.entries[1][1], one());
        assert_eq!(f.entries[0][1].limit_at_infinity(), Some(Coeff::zero()));
        let b = j_matrix(Direction::P);
        assert_eq!(b.entries[1][1], q_inv());
        assert!(f.poles_only_at_one() && b.poles_only_at_one());
    }

    #[test]
    fn composite_identity() {
        assert!(verify_composite());
        let s = composite_scalar();
        assert_eq!(s.invert_var(), s);
        // closed form: -q^-1 (z - q)(z - q^-1) / -(1 - z)^2
        let q = cv(1) * Coeff2::constant(Coeff::var_pow(2));
        let closed = q_inv() * (z() - q.clone()) * (z() - q_inv()) / ((one() - z()) * (one() - z()));
        assert_eq!(s, closed);
    }

    #[test]
    fn values() {
        let s = composite_scalar();
        let q = Coeff::var_pow(2);
        assert_eq!(s.eval(&q), Some(Coeff::zero()));
        assert_eq!(s.eval(&Coeff::var_pow(-2)), Some(Coeff::zero()));
        assert_eq!(s.eval(&Coeff::one()), None);
        let qi = Coeff::var_pow(-2);
        let c = Coeff::one() - qi.clone();
        let four = Coeff::constant(Rational::from_integer(4.into()));
        assert_eq!(s.eval(&-Coeff::one()), Some(qi + c.clone() * c / four));
    }

    #[test]
    fn reducibility() {
        assert_eq!(reducibility_points().unwrap(), ParamPair::ints(1, 0).unwrap());
        let p = reciprocal_profile();
        assert_eq!(
            p.poles,
            vec![
                PzEntry { sign: 1, exp: Rat::from_integer(-1), ord: 1 },
                PzEntry { sign: 1, exp: Rat::from_integer(1), ord: 1 }
            ]
        );
        assert_eq!(q_from_poles(&p).unwrap(), reducibility_points().unwrap());
        let z = numeric_zeros(2.0);
        assert!((z[0] - 0.5).abs() < 1e-12 && (z[1] - 2.0).abs() < 1e-12, "{z:?}");
    }

    #[test]
    fn char_sums() {
        let quad5 = FiniteCharacter::from_generator(5, 2).unwrap();
        assert_eq!(quad5.order(), 2);
        assert!(char_sum(&quad5).is_zero());
        let triv = FiniteCharacter::from_generator(5, 0).unwrap();
        assert_eq!(char_sum(&triv).to_string(), "4");
        let quad9 = FiniteCharacter::from_generator(9, 3).unwrap();
        assert_eq!(quad9.order(), 2);
        assert!(char_sum(&quad9).is_zero());
        for n in [3, 5, 7, 9, 25, 49, 2, 4] {
            let all = FiniteCharacter::all(n).unwrap();
            assert_eq!(char_sum(&all[0]).to_string(), units(n).len().to_string());
            assert!(all[1..].iter().all(|c| char_sum(c).is_zero()));
        }
        assert!(FiniteCharacter::from_generator(8, 1).is_err());
    }

    #[test]
    fn tables() {
        // Legendre symbol mod 7 as exponents of -1
        let t: BTreeMap<u64, u64> = [(1, 0), (2, 0), (3, 1), (4, 0), (5, 1), (6, 1)].into();
        let chi = FiniteCharacter::from_table(7, 2, t.clone()).unwrap();
        assert!(char_sum(&chi).is_zero());
        let mut bad = t;
        bad.insert(2, 1);
        assert!(FiniteCharacter::from_table(7, 2, bad).is_err());
        assert!(matches!(rank_one_outcome(&chi).unwrap(), RankOneOutcome::NotInSigma { .. }));
        let triv = FiniteCharacter::from_generator(7, 0).unwrap();
        assert_eq!(
            rank_one_outcome(&triv).unwrap(),
            RankOneOutcome::InSigma { params: ParamPair::ints(1, 0).unwrap() }
        );
    }

    #[test]
    fn cyclotomic_polys() {
        assert_eq!(cyclotomic_poly(1).fmt_var("x"), "x-1");
        assert_eq!(cyclotomic_poly(6).fmt_var("x"), "x^2-x+1");
        assert_eq!(cyclotomic_poly(12).fmt_var("x"), "x^4-x^2+1");
    }
}
