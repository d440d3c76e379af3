//! Serde helpers that render exact numbers as decimal strings.

use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serializer};

use crate::exactnum::{BigInt, BigRat};

pub(crate) fn parse_int<E: serde::de::Error>(s: &str) -> Result<BigInt, E> {
    BigInt::from_str(s.trim()).map_err(|_| E::custom(format!("invalid integer `{s}`")))
}

pub(crate) fn parse_rat<E: serde::de::Error>(s: &str) -> Result<BigRat, E> {
    match s.split_once('/') {
        Some((n, d)) => {
            let n = parse_int::<E>(n)?;
            let d = parse_int::<E>(d)?;
            if d == 0 {
                return Err(E::custom(format!("zero denominator in `{s}`")));
            }
            Ok(BigRat::from_integers(n, d))
        }
        None => Ok(BigRat::from(parse_int::<E>(s)?)),
    }
}

pub mod int {
    use super::*;

    pub fn serialize<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&x.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let s = String::deserialize(d)?;
        parse_int(&s)
    }
}

pub mod rat {
    use super::*;

    pub fn serialize<S: Serializer>(x: &BigRat, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&x.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRat, D::Error> {
        let s = String::deserialize(d)?;
        parse_rat(&s)
    }
}

pub mod int_vec {
    use super::*;
    use serde::ser::SerializeSeq;

    pub fn serialize<S: Serializer>(xs: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(xs.len()))?;
        for x in xs {
            seq.serialize_element(&x.to_string())?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        raw.iter().map(|s| parse_int(s)).collect()
    }
}
