//! Rational functions in one variable over a [`Scalar`] field.
//!
//! `RatFunc<T>` is itself a `Scalar`, so `RatFunc<RatFunc<Q>>` gives the
//! two-variable field `Q(v)(z)`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Rem, Sub};

use num_traits::{Num, One, Zero};

use crate::poly::Poly;
use crate::scalar::{var_name, Scalar};

/// Reduced fraction with a monic denominator.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc<T> {
    num: Poly<T>,
    den: Poly<T>,
}

impl<T: Scalar> RatFunc<T> {
    pub fn new(num: Poly<T>, den: Poly<T>) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        let mut r = RatFunc { num, den };
        r.reduce();
        r
    }

    /// Skips the gcd; the caller knows `num` and `den` are coprime.
    pub fn from_coprime(num: Poly<T>, den: Poly<T>) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        let mut r = RatFunc { num, den };
        if r.num.is_zero() {
            r.den = Poly::one();
        } else {
            r.normalize_lead();
        }
        r
    }

    pub fn from_poly(p: Poly<T>) -> Self {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn constant(a: T) -> Self {
        Self::from_poly(Poly::constant(a))
    }

    /// The variable itself.
    pub fn var() -> Self {
        Self::from_poly(Poly::x())
    }

    /// `x^n` for any integer `n`.
    pub fn var_pow(n: i64) -> Self {
        let k = n.unsigned_abs() as usize;
        if n >= 0 {
            Self::from_poly(Poly::monomial(T::one(), k))
        } else {
            RatFunc {
                num: Poly::one(),
                den: Poly::monomial(T::one(), k),
            }
        }
    }

    pub fn num(&self) -> &Poly<T> {
        &self.num
    }

    pub fn den(&self) -> &Poly<T> {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn as_constant(&self) -> Option<T> {
        (self.num.is_constant() && self.den.is_constant()).then(|| self.num.coeff(0))
    }

    pub fn inv(&self) -> Option<Self> {
        (!self.num.is_zero()).then(|| Self::new(self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 {
            self.inv().expect("negative power of zero")
        } else {
            self.clone()
        };
        let mut r = Self::one();
        for _ in 0..e.unsigned_abs() {
            r = r * base.clone();
        }
        r
    }

    /// Value at `x`, or `None` at a pole.
    pub fn eval(&self, x: &T) -> Option<T> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(x) / d)
    }

    /// Limit as the variable goes to infinity; `None` when it diverges.
    pub fn limit_at_infinity(&self) -> Option<T> {
        let dn = self.num.degree();
        let dd = self.den.degree().unwrap();
        match dn {
            None => Some(T::zero()),
            Some(n) if n < dd => Some(T::zero()),
            Some(n) if n == dd => Some(self.num.lead().unwrap().clone() / self.den.lead().unwrap().clone()),
            _ => None,
        }
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> RatFunc<U> {
        RatFunc::new(self.num.map(&f), self.den.map(&f))
    }

    /// Replaces the variable by `x^-1`.
    pub fn invert_var(&self) -> Self {
        let dn = self.num.degree().unwrap_or(0);
        let dd = self.den.degree().unwrap_or(0);
        let rev = |p: &Poly<T>, d: usize| {
            let mut c: Vec<T> = (0..=d).map(|k| p.coeff(k)).collect();
            c.reverse();
            Poly::from_coeffs(c)
        };
        let n = rev(&self.num, dn);
        let d = rev(&self.den, dd);
        // num(1/x)/den(1/x) = x^dd num_rev / (x^dn den_rev)
        if dd >= dn {
            Self::new(n.shift(dd - dn), d)
        } else {
            Self::new(n, d.shift(dn - dd))
        }
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = Poly::one();
            return;
        }
        if !T::is_exact() {
            self.normalize_lead();
            return;
        }
        if self.den.is_monomial() || self.num.is_monomial() {
            let k = self
                .num
                .valuation()
                .unwrap()
                .min(self.den.valuation().unwrap());
            if k > 0 {
                self.num = self.num.unshift(k);
                self.den = self.den.unshift(k);
            }
        } else if !self.den.is_constant() {
            let g = Poly::gcd(&self.num, &self.den);
            if !g.is_constant() {
                self.num = self.num.exact_div(&g).expect("gcd divides");
                self.den = self.den.exact_div(&g).expect("gcd divides");
            }
        }
        self.normalize_lead();
    }

    fn normalize_lead(&mut self) {
        let l = self.den.lead().unwrap().clone();
        if !l.is_one() {
            let inv = T::one() / l;
            self.num = self.num.scale(&inv);
            self.den = self.den.scale(&inv);
        }
    }

    pub fn fmt_var(&self, var: &str) -> String {
        format!("({})/({})", self.num.fmt_var(var), self.den.fmt_var(var))
    }

    /// Accepts `(p)/(q)`, `(p)` or a bare polynomial.
    pub fn parse_var(s: &str, var: &str) -> Result<Self, String> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let (n, d) = split_fraction(&s);
        let num = Poly::parse_var(strip_parens(n), var)?;
        let den = match d {
            Some(d) => Poly::parse_var(strip_parens(d), var)?,
            None => Poly::one(),
        };
        if den.is_zero() {
            return Err(format!("zero denominator in `{s}`"));
        }
        Ok(Self::new(num, den))
    }
}

fn strip_parens(s: &str) -> &str {
    if s.starts_with('(') && s.ends_with(')') {
        // only strip when the outer pair matches
        let mut depth = 0;
        for (i, ch) in s.char_indices() {
            match ch {
                '(' => depth += 1,
                ')' => {
                    depth -= 1;
                    if depth == 0 && i != s.len() - 1 {
                        return s;
                    }
                }
                _ => {}
            }
        }
        &s[1..s.len() - 1]
    } else {
        s
    }
}

/// Splits `(p)/(q)` at the top-level slash following a closing paren.
fn split_fraction(s: &str) -> (&str, Option<&str>) {
    let mut depth = 0i32;
    let bytes = s.as_bytes();
    for (i, ch) in s.char_indices() {
        match ch {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            '/' if depth == 0 && i > 0 && bytes[i - 1] == b')' => {
                return (&s[..i], Some(&s[i + 1..]));
            }
            _ => {}
        }
    }
    (s, None)
}

impl<T: Scalar> fmt::Display for RatFunc<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_var(var_name(T::LEVEL)))
    }
}

impl<T: Scalar> Zero for RatFunc<T> {
    fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl<T: Scalar> One for RatFunc<T> {
    fn one() -> Self {
        Self::from_poly(Poly::one())
    }
    fn is_one(&self) -> bool {
        self.den.is_constant() && self.num.is_constant() && self.num.coeff(0).is_one()
    }
}

impl<T: Scalar> Add for RatFunc<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        if self.is_zero() {
            return o;
        }
        if o.is_zero() {
            return self;
        }
        if self.den == o.den {
            return Self::new(&self.num + &o.num, self.den);
        }
        if self.den.is_monomial() && o.den.is_monomial() {
            // both are c x^k with c = 1 after reduction
            let (a, b) = (self.den.degree().unwrap(), o.den.degree().unwrap());
            let k = a.max(b);
            let num = &self.num.shift(k - a) + &o.num.shift(k - b);
            return Self::new(num, Poly::monomial(T::one(), k));
        }
        Self::new(
            &(&self.num * &o.den) + &(&o.num * &self.den),
            &self.den * &o.den,
        )
    }
}

impl<T: Scalar> Sub for RatFunc<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl<T: Scalar> Mul for RatFunc<T> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if self.den.is_constant() && o.den.is_constant() {
            return RatFunc {
                num: &self.num * &o.num,
                den: Poly::one(),
            };
        }
        Self::new(&self.num * &o.num, &self.den * &o.den)
    }
}

impl<T: Scalar> Div for RatFunc<T> {
    type Output = Self;
    fn div(self, o: Self) -> Self {
        self * o.inv().expect("division by zero rational function")
    }
}

/// Fields have zero remainder.
impl<T: Scalar> Rem for RatFunc<T> {
    type Output = Self;
    fn rem(self, o: Self) -> Self {
        assert!(!o.is_zero(), "remainder by zero");
        Self::zero()
    }
}

impl<T: Scalar> Neg for RatFunc<T> {
    type Output = Self;
    fn neg(self) -> Self {
        RatFunc {
            num: -self.num,
            den: self.den,
        }
    }
}

impl<T: Scalar> Num for RatFunc<T> {
    type FromStrRadixErr = String;
    fn from_str_radix(s: &str, radix: u32) -> Result<Self, String> {
        if radix != 10 {
            return Err("only radix 10".into());
        }
        Self::parse_var(s, var_name(T::LEVEL))
    }
}

impl<T: Scalar> Scalar for RatFunc<T> {
    const LEVEL: usize = T::LEVEL + 1;

    fn from_i64(n: i64) -> Self {
        Self::constant(T::from_i64(n))
    }

    fn is_exact() -> bool {
        T::is_exact()
    }

    fn to_f64(&self) -> Option<f64> {
        self.as_constant().and_then(|c| c.to_f64())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Coeff, Rational};
    use proptest::prelude::*;

    fn c(n: i64) -> Coeff {
        Coeff::from_i64(n)
    }

    fn v() -> Coeff {
        Coeff::var()
    }

    #[test]
    fn reduces_common_factors() {
        // (v^2 - 1)/(v - 1) = v + 1
        let a = Coeff::new(
            (v() * v() - c(1)).num().clone(),
            (v() - c(1)).num().clone(),
        );
        assert_eq!(a, v() + c(1));
        assert_eq!(a.to_string(), "(v+1)/(1)");
    }

    #[test]
    fn negative_powers() {
        let a = Coeff::var_pow(-2) * Coeff::var_pow(3);
        assert_eq!(a, v());
        assert_eq!(Coeff::var_pow(-1).to_string(), "(1)/(v)");
    }

    #[test]
    fn parse_spec_style() {
        let a = Coeff::parse_var("(v^2-1)/(1)", "v").unwrap();
        assert_eq!(a, v() * v() - c(1));
        let b = Coeff::parse_var("(1/2*v-3)/(v^3+v)", "v").unwrap();
        assert_eq!(Coeff::parse_var(&b.to_string(), "v").unwrap(), b);
    }

    #[test]
    fn nested_display_round_trip() {
        type Z = RatFunc<Coeff>;
        let q = Coeff::var_pow(2);
        let z = Z::var();
        let e = (Z::constant(c(1) - q.inv().unwrap())) / (Z::one() - z);
        let s = e.to_string();
        assert!(s.contains('z') && s.contains('v'), "{s}");
        assert_eq!(Z::from_str_radix(&s, 10).unwrap(), e);
    }

    #[test]
    fn limits() {
        let a = Coeff::new(Poly::x(), &Poly::x() * &Poly::x() + Poly::one());
        assert_eq!(a.limit_at_infinity(), Some(Rational::zero()));
        assert_eq!(v().limit_at_infinity(), None);
    }

    fn small() -> impl Strategy<Value = Coeff> {
        (prop::collection::vec(-4i64..5, 1..4), prop::collection::vec(-4i64..5, 1..3), 0u32..3).prop_filter_map(
            "nonzero denominator",
            |(n, d, k)| {
                let n = Poly::from_coeffs(n.into_iter().map(Rational::from_i64).collect());
                let d = Poly::from_coeffs(d.into_iter().map(Rational::from_i64).collect()).shift(k as usize);
                (!d.is_zero()).then(|| Coeff::new(n, d))
            },
        )
    }

    proptest! {
        #[test]
        fn field_axioms(a in small(), b in small(), d in small()) {
            prop_assert_eq!(a.clone() + b.clone(), b.clone() + a.clone());
            prop_assert_eq!((a.clone() * b.clone()) * d.clone(), a.clone() * (b.clone() * d.clone()));
            prop_assert_eq!(a.clone() * (b.clone() + d.clone()), a.clone() * b.clone() + a.clone() * d.clone());
            if !b.is_zero() {
                prop_assert_eq!((a.clone() / b.clone()) * b.clone(), a.clone());
            }
        }

        #[test]
        fn display_parses_back(a in small()) {
            prop_assert_eq!(Coeff::parse_var(&a.to_string(), "v").unwrap(), a);
        }

        #[test]
        fn invert_var_is_involution(a in small()) {
            prop_assert_eq!(a.invert_var().invert_var(), a);
        }
    }
}
