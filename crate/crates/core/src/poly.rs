//! Dense univariate polynomials over a [`Scalar`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::scalar::{var_name, Scalar};

/// Coefficients are stored low degree first with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly<T> {
    c: Vec<T>,
}

impl<T: Scalar> Poly<T> {
    pub fn zero() -> Self {
        Poly { c: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(a: T) -> Self {
        Self::from_coeffs(vec![a])
    }

    /// `a * x^k`
    pub fn monomial(a: T, k: usize) -> Self {
        let mut c = vec![T::zero(); k];
        c.push(a);
        Self::from_coeffs(c)
    }

    pub fn x() -> Self {
        Self::monomial(T::one(), 1)
    }

    pub fn from_coeffs(mut c: Vec<T>) -> Self {
        while c.last().is_some_and(|a| a.is_zero()) {
            c.pop();
        }
        Poly { c }
    }

    pub fn coeffs(&self) -> &[T] {
        &self.c
    }

    pub fn coeff(&self, k: usize) -> T {
        self.c.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&T> {
        self.c.last()
    }

    /// Lowest power with nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.c.iter().position(|a| !a.is_zero())
    }

    pub fn is_monomial(&self) -> bool {
        self.c.iter().filter(|a| !a.is_zero()).count() == 1
    }

    pub fn is_constant(&self) -> bool {
        self.c.len() <= 1
    }

    pub fn scale(&self, a: &T) -> Self {
        Self::from_coeffs(self.c.iter().map(|b| b.clone() * a.clone()).collect())
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = vec![T::zero(); k];
        c.extend(self.c.iter().cloned());
        Poly { c }
    }

    /// Divide by `x^k`, dropping lower terms.
    pub fn unshift(&self, k: usize) -> Self {
        Self::from_coeffs(self.c.iter().skip(k).cloned().collect())
    }

    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for a in self.c.iter().rev() {
            acc = acc * x.clone() + a.clone();
        }
        acc
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Poly<U> {
        Poly::from_coeffs(self.c.iter().map(f).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, a)| a.clone() * T::from_i64(k as i64))
                .collect(),
        )
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut r = Self::one();
        for _ in 0..e {
            r = &r * self;
        }
        r
    }

    /// Quotient and remainder. Needs the leading coefficient of `d` to be
    /// invertible in `T`; over a field that is any nonzero `d`.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("polynomial division by zero");
        let lead = d.lead().unwrap().clone();
        let mut r = self.c.clone();
        if r.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut q = vec![T::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let a = r[k + dd].clone();
            if a.is_zero() {
                continue;
            }
            let f = a / lead.clone();
            for (j, b) in d.c.iter().enumerate() {
                r[k + j] = r[k + j].clone() - f.clone() * b.clone();
            }
            q[k] = f;
        }
        r.truncate(dd);
        (Self::from_coeffs(q), Self::from_coeffs(r))
    }

    /// `self / d` when the division is exact.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    pub fn monic(&self) -> Self {
        match self.lead() {
            Some(l) if !l.is_one() => {
                let inv = T::one() / l.clone();
                self.scale(&inv)
            }
            _ => self.clone(),
        }
    }

    /// Monic gcd over a field. Remainders are kept monic, which stops the
    /// coefficients from swelling over `Q` and `Q(v)`.
    pub fn gcd(a: &Self, b: &Self) -> Self {
        let (mut a, mut b) = (a.monic(), b.monic());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a
    }

    /// Formats with an explicit variable name.
    pub fn fmt_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, a) in self.c.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            let t = term_string(a, k, var);
            if !out.is_empty() && !t.starts_with('-') {
                out.push('+');
            }
            out.push_str(&t);
        }
        out
    }

    /// Parses the output of [`Poly::fmt_var`].
    pub fn parse_var(s: &str, var: &str) -> Result<Self, String> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err("empty polynomial".into());
        }
        let mut c: Vec<T> = Vec::new();
        for term in split_terms(&s) {
            let (a, k) = parse_term::<T>(&term, var)?;
            if c.len() <= k {
                c.resize(k + 1, T::zero());
            }
            c[k] = c[k].clone() + a;
        }
        Ok(Self::from_coeffs(c))
    }
}

fn coeff_string<T: Scalar>(a: &T) -> String {
    if T::LEVEL == 0 {
        a.to_string()
    } else {
        format!("[{a}]")
    }
}

fn term_string<T: Scalar>(a: &T, k: usize, var: &str) -> String {
    let mono = match k {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{k}"),
    };
    if k == 0 {
        return coeff_string(a);
    }
    if a.is_one() {
        mono
    } else if (-a.clone()).is_one() {
        format!("-{mono}")
    } else {
        format!("{}*{mono}", coeff_string(a))
    }
}

/// Splits at top-level `+`/`-`, keeping the sign with each term.
fn split_terms(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut depth = 0i32;
    let mut prev: Option<char> = None;
    for ch in s.chars() {
        match ch {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            _ => {}
        }
        let splits = depth == 0
            && (ch == '+' || ch == '-')
            && !cur.is_empty()
            && !matches!(prev, Some('^') | Some('*') | Some('/') | Some('e') | Some('E'));
        if splits {
            out.push(std::mem::take(&mut cur));
        }
        if !(splits && ch == '+') {
            cur.push(ch);
        }
        prev = Some(ch);
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    out
}

fn parse_coeff<T: Scalar>(s: &str) -> Result<T, String> {
    let inner = s
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .unwrap_or(s);
    // rationals only parse in `n/d` form, so retry with a unit denominator
    T::from_str_radix(inner, 10)
        .or_else(|_| T::from_str_radix(&format!("{inner}/1"), 10))
        .map_err(|_| format!("bad coefficient `{s}`"))
}

fn parse_term<T: Scalar>(t: &str, var: &str) -> Result<(T, usize), String> {
    let (neg, body) = match t.strip_prefix('-') {
        Some(r) => (true, r),
        None => (false, t.strip_prefix('+').unwrap_or(t)),
    };
    let mut depth = 0i32;
    let mut pos = None;
    for (i, ch) in body.char_indices() {
        match ch {
            '[' | '(' => depth += 1,
            ']' | ')' => depth -= 1,
            _ => {}
        }
        if depth == 0 && body[i..].starts_with(var) {
            pos = Some(i);
            break;
        }
    }
    let (coef, mono) = match pos {
        Some(i) => {
            let (c, m) = body.split_at(i);
            (c.strip_suffix('*').unwrap_or(c), Some(m))
        }
        None => (body, None),
    };
    let k = match mono {
        None => 0,
        Some(m) => {
            let rest = &m[var.len()..];
            if rest.is_empty() {
                1
            } else {
                rest.strip_prefix('^')
                    .and_then(|e| e.parse::<usize>().ok())
                    .ok_or_else(|| format!("bad exponent in `{t}`"))?
            }
        }
    };
    let mut a = if coef.is_empty() {
        T::one()
    } else {
        parse_coeff::<T>(coef)?
    };
    if neg {
        a = -a;
    }
    Ok((a, k))
}

impl<T: Scalar> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_var(var_name(T::LEVEL)))
    }
}

impl<'a, T: Scalar> Add<&'a Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;
    fn add(self, o: &Poly<T>) -> Poly<T> {
        let (long, short) = if self.c.len() >= o.c.len() { (self, o) } else { (o, self) };
        let mut c = long.c.clone();
        for (x, y) in c.iter_mut().zip(&short.c) {
            *x = T::add_ref(x, y);
        }
        Poly::from_coeffs(c)
    }
}

impl<'a, T: Scalar> Sub<&'a Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;
    fn sub(self, o: &Poly<T>) -> Poly<T> {
        let n = self.c.len().max(o.c.len());
        Poly::from_coeffs((0..n).map(|k| self.coeff(k) - o.coeff(k)).collect())
    }
}

impl<'a, T: Scalar> Mul<&'a Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;
    fn mul(self, o: &Poly<T>) -> Poly<T> {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![T::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                T::add_mul(&mut c[i + j], a, b);
            }
        }
        Poly::from_coeffs(c)
    }
}

impl<T: Scalar> Neg for &Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        Poly {
            c: self.c.iter().map(|a| -a.clone()).collect(),
        }
    }
}

macro_rules! forward_by_value {
    ($tr:ident, $m:ident) => {
        impl<T: Scalar> $tr for Poly<T> {
            type Output = Poly<T>;
            fn $m(self, o: Poly<T>) -> Poly<T> {
                (&self).$m(&o)
            }
        }
    };
}
forward_by_value!(Add, add);
forward_by_value!(Sub, sub);
forward_by_value!(Mul, mul);

impl<T: Scalar> Neg for Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;
    use proptest::prelude::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn p(c: &[i64]) -> Poly<Rational> {
        Poly::from_coeffs(c.iter().map(|&n| q(n)).collect())
    }

    #[test]
    fn display_and_parse() {
        let a = p(&[-1, 0, 1]);
        assert_eq!(a.to_string(), "v^2-1");
        let b = Poly::from_coeffs(vec![Rational::new(3.into(), 2.into()), q(-1), q(0), q(2)]);
        assert_eq!(b.to_string(), "2*v^3-v+3/2");
        assert_eq!(Poly::<Rational>::parse_var(&b.to_string(), "v").unwrap(), b);
        assert_eq!(Poly::<Rational>::parse_var("-v + 1", "v").unwrap(), p(&[1, -1]));
    }

    #[test]
    fn division_by_one_minus_square() {
        // (1 - Y^4) / (1 - Y^2) = 1 + Y^2
        let (qq, r) = p(&[1, 0, 0, 0, -1]).div_rem(&p(&[1, 0, -1]));
        assert!(r.is_zero());
        assert_eq!(qq, p(&[1, 0, 1]));
    }

    #[test]
    fn gcd_is_monic() {
        let a = &p(&[-1, 1]) * &p(&[2, 1]);
        let b = &p(&[-1, 1]) * &p(&[3, 0, 1]);
        assert_eq!(Poly::gcd(&a.scale(&q(5)), &b), p(&[-1, 1]));
    }

    proptest! {
        #[test]
        fn div_rem_reconstructs(a in prop::collection::vec(-9i64..9, 0..7), d in prop::collection::vec(-9i64..9, 1..4)) {
            let a = p(&a);
            let d = p(&d);
            prop_assume!(!d.is_zero());
            let (qq, r) = a.div_rem(&d);
            prop_assert_eq!(&(&qq * &d) + &r, a);
            prop_assert!(r.degree().is_none_or(|k| k < d.degree().unwrap()));
        }

        #[test]
        fn parse_inverts_display(a in prop::collection::vec(-9i64..9, 0..7)) {
            let a = p(&a);
            prop_assert_eq!(Poly::<Rational>::parse_var(&a.to_string(), "v").unwrap(), a);
        }
    }
}
