//! JSON encoding of filtrations:
//! `{"dim":2,"kind":"adic","gens":[[1,0],[0,1]]}` |
//! `{"kind":"divtoric","terms":[{"w":[1,2],"a":{"rat":"1/1"}}]}` |
//! `{"kind":"product"|"rescale"|"truncate"|"closure"|"table", ...}`.

use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::filtration::{Filtration, WeightValuation};
use super::ideal::{ExponentVector, MonomialIdeal};
use crate::numeric::Scalar;

impl Serialize for MonomialIdeal {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let gens: Vec<&[u64]> = self.generators().iter().map(|g| g.coords()).collect();
        gens.serialize(s)
    }
}

impl<'de> Deserialize<'de> for MonomialIdeal {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let gens: Vec<Vec<u64>> = Vec::deserialize(d)?;
        if gens.is_empty() {
            return Err(D::Error::custom("ideal needs at least one generator"));
        }
        let dim = gens[0].len();
        MonomialIdeal::new(dim, gens.into_iter().map(ExponentVector).collect())
            .map_err(|e| D::Error::custom(format!("{e}")))
    }
}

#[derive(Serialize, Deserialize)]
struct DivTerm {
    w: Vec<u64>,
    a: Scalar,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum FiltrationRepr {
    Adic {
        #[serde(skip_serializing_if = "Option::is_none")]
        dim: Option<usize>,
        gens: MonomialIdeal,
    },
    Divtoric {
        #[serde(skip_serializing_if = "Option::is_none")]
        dim: Option<usize>,
        terms: Vec<DivTerm>,
    },
    Product {
        f: Box<FiltrationRepr>,
        g: Box<FiltrationRepr>,
    },
    Rescale {
        f: Box<FiltrationRepr>,
        l: u64,
    },
    Truncate {
        f: Box<FiltrationRepr>,
        a: u64,
    },
    Closure {
        f: Box<FiltrationRepr>,
        r_max: u64,
    },
    Table {
        levels: Vec<MonomialIdeal>,
        tail: MonomialIdeal,
    },
}

impl FiltrationRepr {
    fn build(self) -> crate::error::Result<Filtration> {
        match self {
            FiltrationRepr::Adic { gens, .. } => Ok(Filtration::adic(gens)),
            FiltrationRepr::Divtoric { dim, terms } => {
                let dim = dim
                    .or_else(|| terms.first().map(|t| t.w.len()))
                    .ok_or_else(|| crate::error::Error::InvalidInput("no terms".into()))?;
                Filtration::divisorial_toric(
                    dim,
                    terms
                        .into_iter()
                        .map(|t| Ok((WeightValuation::new(t.w)?, t.a)))
                        .collect::<crate::error::Result<_>>()?,
                )
            }
            FiltrationRepr::Product { f, g } => Filtration::product(f.build()?, g.build()?),
            FiltrationRepr::Rescale { f, l } => Filtration::rescale(f.build()?, l),
            FiltrationRepr::Truncate { f, a } => Filtration::truncate(f.build()?, a),
            FiltrationRepr::Closure { f, r_max } => Filtration::closure(f.build()?, r_max),
            FiltrationRepr::Table { levels, tail } => Filtration::table(levels, tail),
        }
    }

    fn of(f: &Filtration) -> FiltrationRepr {
        if let Some(i) = f.adic_ideal() {
            return FiltrationRepr::Adic {
                dim: Some(f.dim()),
                gens: i.clone(),
            };
        }
        if let Some(terms) = f.divisorial_terms() {
            return FiltrationRepr::Divtoric {
                dim: Some(f.dim()),
                terms: terms
                    .iter()
                    .map(|(w, a)| DivTerm {
                        w: w.weights().to_vec(),
                        a: a.clone(),
                    })
                    .collect(),
            };
        }
        if let Some((a, b)) = f.as_product() {
            return FiltrationRepr::Product {
                f: Box::new(FiltrationRepr::of(a)),
                g: Box::new(FiltrationRepr::of(b)),
            };
        }
        if let Some((inner, l)) = f.as_rescale() {
            return FiltrationRepr::Rescale {
                f: Box::new(FiltrationRepr::of(inner)),
                l,
            };
        }
        if let Some((inner, r_max)) = f.as_closure() {
            return FiltrationRepr::Closure {
                f: Box::new(FiltrationRepr::of(inner)),
                r_max,
            };
        }
        if let Some((inner, a)) = f.as_truncate() {
            return FiltrationRepr::Truncate {
                f: Box::new(FiltrationRepr::of(inner)),
                a,
            };
        }
        let (levels, tail) = f.as_table().expect("exhaustive filtration kinds");
        FiltrationRepr::Table {
            levels: levels.to_vec(),
            tail: tail.clone(),
        }
    }
}

impl Serialize for Filtration {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        FiltrationRepr::of(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Filtration {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        FiltrationRepr::deserialize(d)?
            .build()
            .map_err(|e| D::Error::custom(format!("{e}")))
    }
}
