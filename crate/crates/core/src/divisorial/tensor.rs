use std::collections::BTreeMap;

use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::numeric::Scalar;

use super::envelope::DivisorCoeffs;

/// Symmetric d-linear intersection form on divisor classes, stored by
/// sorted index multiset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionTensor {
    dim: usize,
    labels: Vec<String>,
    entries: BTreeMap<Vec<usize>, i64>,
}

impl IntersectionTensor {
    pub fn new(
        dim: usize,
        labels: Vec<String>,
        entries: Vec<(Vec<usize>, i64)>,
    ) -> Result<IntersectionTensor> {
        let r = labels.len();
        let mut map = BTreeMap::new();
        for (mut key, value) in entries {
            if key.len() != dim {
                return Err(Error::InvalidInput(format!(
                    "entry key of degree {} in a degree-{dim} tensor",
                    key.len()
                )));
            }
            if key.iter().any(|&i| i >= r) {
                return Err(Error::InvalidInput("label index out of range".into()));
            }
            key.sort_unstable();
            map.insert(key, value);
        }
        let expected = binomial(r + dim - 1, dim);
        if map.len() != expected {
            return Err(Error::InvalidInput(format!(
                "expected {expected} entries, got {}",
                map.len()
            )));
        }
        Ok(IntersectionTensor {
            dim,
            labels,
            entries: map,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn entry(&self, indices: &[usize]) -> i64 {
        let mut key = indices.to_vec();
        key.sort_unstable();
        self.entries[&key]
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Vec<usize>, &i64)> {
        self.entries.iter()
    }

    /// Full multilinear expansion over `dim` divisor arguments.
    pub fn product(&self, divisors: &[&DivisorCoeffs]) -> Result<Scalar> {
        if divisors.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: divisors.len(),
            });
        }
        let r = self.rank();
        for d in divisors {
            if d.0.len() != r {
                return Err(Error::DimensionMismatch {
                    expected: r,
                    got: d.0.len(),
                });
            }
        }
        let mut total = Scalar::zero();
        let mut idx = vec![0usize; self.dim];
        loop {
            let mut term = Scalar::Rat(crate::numeric::Rational::from_int(self.entry(&idx)));
            for (k, &i) in idx.iter().enumerate() {
                term = term * &divisors[k].0[i];
            }
            total = total + term;
            // Odometer over label tuples.
            let mut pos = self.dim;
            let mut advanced = false;
            while pos > 0 {
                pos -= 1;
                if idx[pos] + 1 < r {
                    idx[pos] += 1;
                    for p in idx.iter_mut().skip(pos + 1) {
                        *p = 0;
                    }
                    advanced = true;
                    break;
                }
            }
            if !advanced {
                break;
            }
        }
        Ok(total)
    }
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut acc = 1usize;
    for i in 0..k.min(n - k) {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

#[derive(Serialize, Deserialize)]
struct TensorRepr {
    d: usize,
    labels: Vec<String>,
    entries: BTreeMap<String, i64>,
}

impl Serialize for IntersectionTensor {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let entries = self
            .entries
            .iter()
            .map(|(key, &v)| {
                let name = key
                    .iter()
                    .map(|&i| self.labels[i].clone())
                    .collect::<Vec<_>>()
                    .join(",");
                (name, v)
            })
            .collect();
        TensorRepr {
            d: self.dim,
            labels: self.labels.clone(),
            entries,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntersectionTensor {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = TensorRepr::deserialize(d)?;
        let index_of = |name: &str| {
            repr.labels
                .iter()
                .position(|l| l == name.trim())
                .ok_or_else(|| D::Error::custom(format!("unknown label {name:?}")))
        };
        let mut entries = vec![];
        for (key, value) in &repr.entries {
            let indices = key
                .split(',')
                .map(index_of)
                .collect::<std::result::Result<Vec<_>, _>>()?;
            entries.push((indices, *value));
        }
        IntersectionTensor::new(repr.d, repr.labels, entries)
            .map_err(|e| D::Error::custom(format!("{e}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::Rational;

    fn builtin_tensor() -> IntersectionTensor {
        IntersectionTensor::new(
            3,
            vec!["E1".into(), "E2".into()],
            vec![
                (vec![0, 0, 0], 468),
                (vec![0, 0, 1], -162),
                (vec![0, 1, 1], 54),
                (vec![1, 1, 1], 54),
            ],
        )
        .unwrap()
    }

    #[test]
    fn symmetric_storage_and_lookup() {
        let t = builtin_tensor();
        assert_eq!(t.entry(&[0, 1, 0]), -162);
        assert_eq!(t.entry(&[1, 1, 1]), 54);
    }

    #[test]
    fn cube_of_sum() {
        let t = builtin_tensor();
        let d = DivisorCoeffs(vec![Scalar::one(), Scalar::one()]);
        // (E1+E2)^3 = 468 - 3*162 + 3*54 + 54 = 198.
        assert_eq!(t.product(&[&d, &d, &d]).unwrap(), Scalar::from_int(198));
    }

    #[test]
    fn multilinearity_and_symmetry_randomized() {
        let t = builtin_tensor();
        let mk = |a: i64, b: i64| DivisorCoeffs(vec![Scalar::from_int(a), Scalar::from_int(b)]);
        let (x, y, z) = (mk(2, 1), mk(1, 3), mk(5, 2));
        // Symmetry under permutation.
        let p1 = t.product(&[&x, &y, &z]).unwrap();
        let p2 = t.product(&[&z, &x, &y]).unwrap();
        assert_eq!(p1, p2);
        // Linearity in the first slot.
        let sum = DivisorCoeffs(vec![
            &x.0[0] + &y.0[0],
            &x.0[1] + &y.0[1],
        ]);
        let lhs = t.product(&[&sum, &z, &z]).unwrap();
        let rhs = t.product(&[&x, &z, &z]).unwrap() + t.product(&[&y, &z, &z]).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn quadratic_coefficient_expansion() {
        // (c E1 + E2)^3 with c = 3/(9 - sqrt 3) equals
        // (12042 - 27 sqrt 3)/169.
        let t = builtin_tensor();
        let c = Scalar::quad(Rational::new(9, 26), Rational::new(1, 26), 3);
        let d = DivisorCoeffs(vec![c, Scalar::one()]);
        let expect = Scalar::quad(
            Rational::new(12042, 169),
            Rational::new(-27, 169),
            3,
        );
        assert_eq!(t.product(&[&d, &d, &d]).unwrap(), expect);
    }

    #[test]
    fn json_round_trip() {
        let t = builtin_tensor();
        let j = serde_json::to_string(&t).unwrap();
        let back: IntersectionTensor = serde_json::from_str(&j).unwrap();
        assert_eq!(t, back);
    }
}
