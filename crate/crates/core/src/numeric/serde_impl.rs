//! JSON encoding of scalars:
//! `{"rat": "p/q"}` | `{"quad": {"a": "p/q", "b": "p/q", "n": 3}}` |
//! `{"float": 0.123, "tol": 1e-12}`.

use serde::de::Error as DeError;
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::quad::QuadExt;
use super::rational::Rational;
use super::scalar::{Scalar, DEFAULT_FLOAT_TOL};

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format!("{}/{}", self.numer(), self.denom()))
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = String::deserialize(d)?;
        raw.parse().map_err(|e| D::Error::custom(format!("{e}")))
    }
}

#[derive(Serialize, Deserialize)]
struct QuadRepr {
    a: Rational,
    b: Rational,
    n: u64,
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(None)?;
        match self {
            Scalar::Rat(r) => map.serialize_entry("rat", r)?,
            Scalar::Quad(q) => map.serialize_entry(
                "quad",
                &QuadRepr {
                    a: q.a().clone(),
                    b: q.b().clone(),
                    n: q.radicand(),
                },
            )?,
            Scalar::Float { value, tol } => {
                map.serialize_entry("float", value)?;
                map.serialize_entry("tol", tol)?;
            }
        }
        map.end()
    }
}

#[derive(Deserialize)]
struct ScalarRepr {
    #[serde(default)]
    rat: Option<Rational>,
    #[serde(default)]
    quad: Option<QuadRepr>,
    #[serde(default)]
    float: Option<f64>,
    #[serde(default)]
    tol: Option<f64>,
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = ScalarRepr::deserialize(d)?;
        match (repr.rat, repr.quad, repr.float) {
            (Some(r), None, None) => Ok(Scalar::Rat(r)),
            (None, Some(q), None) => Ok(Scalar::quad(q.a, q.b, q.n)),
            (None, None, Some(v)) => Ok(Scalar::Float {
                value: v,
                tol: repr.tol.unwrap_or(DEFAULT_FLOAT_TOL),
            }),
            _ => Err(D::Error::custom(
                "scalar must be exactly one of rat | quad | float",
            )),
        }
    }
}

impl Serialize for QuadExt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        QuadRepr {
            a: self.a().clone(),
            b: self.b().clone(),
            n: self.radicand(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for QuadExt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = QuadRepr::deserialize(d)?;
        Ok(QuadExt::new(repr.a, repr.b, repr.n))
    }
}
