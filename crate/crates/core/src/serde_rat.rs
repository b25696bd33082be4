//! Serde helpers for [`Rat`]: written as strings like `"3/2"`, read from
//! strings or JSON numbers.

use serde::de::{self, Deserializer, Visitor};
use serde::Serializer;

use crate::Rat;

pub fn parse_rat(s: &str) -> Result<Rat, String> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: i64 = n.parse().map_err(|_| format!("bad rational `{s}`"))?;
    let d: i64 = d.parse().map_err(|_| format!("bad rational `{s}`"))?;
    if d == 0 {
        return Err(format!("zero denominator in `{s}`"));
    }
    Ok(Rat::new(n, d))
}

pub fn rat_to_string(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn serialize<S: Serializer>(r: &Rat, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&rat_to_string(r))
}

struct RatVisitor;

impl<'de> Visitor<'de> for RatVisitor {
    type Value = Rat;
    fn expecting(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
        f.write_str("a rational as a string like \"3/2\" or an integer")
    }
    fn visit_str<E: de::Error>(self, v: &str) -> Result<Rat, E> {
        parse_rat(v).map_err(E::custom)
    }
    fn visit_i64<E: de::Error>(self, v: i64) -> Result<Rat, E> {
        Ok(Rat::from_integer(v))
    }
    fn visit_u64<E: de::Error>(self, v: u64) -> Result<Rat, E> {
        i64::try_from(v).map(Rat::from_integer).map_err(E::custom)
    }
    fn visit_f64<E: de::Error>(self, v: f64) -> Result<Rat, E> {
        let twice = v * 2.0;
        if twice.fract() == 0.0 && twice.abs() < 1e15 {
            Ok(Rat::new(twice as i64, 2))
        } else {
            Err(E::custom(format!("{v} is not a half-integer; pass it as a string")))
        }
    }
}

pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rat, D::Error> {
    d.deserialize_any(RatVisitor)
}

/// Integers and half-integers as JSON numbers, anything else as a string.
pub mod number {
    use super::*;

    pub fn serialize<S: Serializer>(r: &Rat, s: S) -> Result<S::Ok, S::Error> {
        if r.is_integer() {
            s.serialize_i64(*r.numer())
        } else if *r.denom() == 2 {
            s.serialize_f64(*r.numer() as f64 / 2.0)
        } else {
            s.serialize_str(&rat_to_string(r))
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rat, D::Error> {
        super::deserialize(d)
    }
}

pub mod option {
    use super::*;
    use serde::Deserialize;

    pub fn serialize<S: Serializer>(r: &Option<Rat>, s: S) -> Result<S::Ok, S::Error> {
        match r {
            Some(r) => super::serialize(r, s),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Rat>, D::Error> {
        #[derive(Deserialize)]
        struct W(#[serde(with = "super")] Rat);
        Ok(Option::<W>::deserialize(d)?.map(|w| w.0))
    }
}
