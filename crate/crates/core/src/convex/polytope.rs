use std::cmp::Ordering;

use itertools::Itertools;

use super::lp;
use crate::error::{Error, Result};
use crate::numeric::{Rational, Scalar};

/// Point with scalar coordinates.
pub type Point = Vec<Scalar>;

/// Convex polytope stored as its extreme points, canonically ordered.
/// The empty polytope is allowed.
#[derive(Clone, Debug)]
pub struct Polytope {
    dim: usize,
    verts: Vec<Point>,
}

fn cmp_scalar(a: &Scalar, b: &Scalar) -> Ordering {
    a.compare(b)
}

fn cmp_point(a: &Point, b: &Point) -> Ordering {
    for (x, y) in a.iter().zip(b.iter()) {
        match cmp_scalar(x, y) {
            Ordering::Equal => continue,
            ord => return ord,
        }
    }
    Ordering::Equal
}

fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    a.iter()
        .zip(b.iter())
        .fold(Scalar::zero(), |acc, (x, y)| acc + x * y)
}

impl Polytope {
    pub fn empty(dim: usize) -> Self {
        Polytope { dim, verts: vec![] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Point] {
        &self.verts
    }

    pub fn is_empty(&self) -> bool {
        self.verts.is_empty()
    }

    /// Hull of a point set: keeps exactly the extreme points.
    pub fn hull(dim: usize, points: Vec<Point>) -> Result<Polytope> {
        for p in &points {
            if p.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: p.len(),
                });
            }
            if p.iter().any(|c| !c.is_exact()) {
                return Err(Error::InexactCoordinates);
            }
        }
        let mut pts = points;
        pts.sort_by(cmp_point);
        pts.dedup_by(|a, b| cmp_point(a, b) == Ordering::Equal);
        if pts.len() <= 1 {
            return Ok(Polytope { dim, verts: pts });
        }
        let verts = match dim {
            1 => vec![pts[0].clone(), pts[pts.len() - 1].clone()],
            2 => hull2d(&pts),
            _ => hull_by_lp(&pts),
        };
        let mut verts = verts;
        verts.sort_by(cmp_point);
        Ok(Polytope { dim, verts })
    }

    /// Wraps a set already known to consist of extreme points (images of a
    /// polytope under an invertible affine map). No exactness requirement.
    fn from_extreme(dim: usize, mut verts: Vec<Point>) -> Polytope {
        verts.sort_by(cmp_point);
        Polytope { dim, verts }
    }

    pub fn scale(&self, c: &Scalar) -> Result<Polytope> {
        if c.is_negative() {
            return Err(Error::NonPositiveInput(format!("scale factor {c}")));
        }
        if c.is_zero() && !self.is_empty() {
            return Ok(Polytope {
                dim: self.dim,
                verts: vec![vec![Scalar::zero(); self.dim]],
            });
        }
        Ok(Polytope::from_extreme(
            self.dim,
            self.verts
                .iter()
                .map(|v| v.iter().map(|x| x * c).collect())
                .collect(),
        ))
    }

    pub fn translate(&self, t: &[Scalar]) -> Result<Polytope> {
        if t.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: t.len(),
            });
        }
        Ok(Polytope::from_extreme(
            self.dim,
            self.verts
                .iter()
                .map(|v| v.iter().zip(t.iter()).map(|(x, s)| x + s).collect())
                .collect(),
        ))
    }

    /// Minkowski sum via the hull of pairwise vertex sums.
    pub fn minkowski_sum(&self, other: &Polytope) -> Result<Polytope> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: other.dim,
            });
        }
        if self.is_empty() || other.is_empty() {
            return Ok(Polytope::empty(self.dim));
        }
        let sums = self
            .verts
            .iter()
            .cartesian_product(other.verts.iter())
            .map(|(a, b)| a.iter().zip(b.iter()).map(|(x, y)| x + y).collect())
            .collect();
        Polytope::hull(self.dim, sums)
    }

    /// Exact membership test (requires exact data).
    pub fn contains(&self, x: &[Scalar]) -> Result<bool> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: x.len(),
            });
        }
        if self.verts.iter().flatten().any(|c| !c.is_exact()) || x.iter().any(|c| !c.is_exact()) {
            return Err(Error::InexactCoordinates);
        }
        if self.is_empty() {
            return Ok(false);
        }
        Ok(point_in_hull(x, &self.verts))
    }

    /// Vertex-set equality. Exact sets compare exactly; floating data is
    /// matched within the combined tolerances.
    pub fn equals(&self, other: &Polytope) -> bool {
        if self.dim != other.dim || self.verts.len() != other.verts.len() {
            return false;
        }
        let all_exact = self
            .verts
            .iter()
            .chain(other.verts.iter())
            .flatten()
            .all(Scalar::is_exact);
        if all_exact {
            self.verts
                .iter()
                .zip(other.verts.iter())
                .all(|(a, b)| cmp_point(a, b) == Ordering::Equal)
        } else {
            // Greedy matching within tolerance.
            let mut used = vec![false; other.verts.len()];
            'outer: for v in &self.verts {
                for (j, w) in other.verts.iter().enumerate() {
                    if !used[j] && cmp_point(v, w) == Ordering::Equal {
                        used[j] = true;
                        continue 'outer;
                    }
                }
                return false;
            }
            true
        }
    }

    /// Largest pairwise coordinate deviation under optimal greedy matching,
    /// as a plain float. Useful for reporting near-equality.
    pub fn max_vertex_deviation(&self, other: &Polytope) -> f64 {
        if self.verts.len() != other.verts.len() {
            return f64::INFINITY;
        }
        let mut used = vec![false; other.verts.len()];
        let mut worst: f64 = 0.0;
        for v in &self.verts {
            let mut best: Option<(usize, f64)> = None;
            for (j, w) in other.verts.iter().enumerate() {
                if used[j] {
                    continue;
                }
                let dist = v
                    .iter()
                    .zip(w.iter())
                    .map(|(a, b)| (a.to_f64() - b.to_f64()).abs())
                    .fold(0.0f64, f64::max);
                if best.map_or(true, |(_, d)| dist < d) {
                    best = Some((j, dist));
                }
            }
            match best {
                Some((j, d)) => {
                    used[j] = true;
                    worst = worst.max(d);
                }
                None => return f64::INFINITY,
            }
        }
        worst
    }

    /// Exact Euclidean volume (d-dimensional measure).
    pub fn volume(&self) -> Result<Rational> {
        if self.verts.iter().flatten().any(|c| !c.is_exact()) {
            return Err(Error::InexactCoordinates);
        }
        let v = volume_scalar(self.dim, &self.verts);
        v.as_rational().ok_or(Error::InexactCoordinates)
    }

    /// Volume as a scalar, staying in the quadratic field when coordinates
    /// do.
    pub fn volume_exact(&self) -> Result<Scalar> {
        if self.verts.iter().flatten().any(|c| !c.is_exact()) {
            return Err(Error::InexactCoordinates);
        }
        Ok(volume_scalar(self.dim, &self.verts))
    }

    /// Average of the vertices; equivariant under scaling and translation.
    pub fn vertex_centroid(&self) -> Option<Point> {
        if self.is_empty() {
            return None;
        }
        let n = Scalar::from_int(self.verts.len() as i64);
        Some(
            (0..self.dim)
                .map(|j| {
                    self.verts
                        .iter()
                        .fold(Scalar::zero(), |acc, v| acc + &v[j])
                        / &n
                })
                .collect(),
        )
    }
}

/// Monotone chain on deduped, lexicographically sorted points. Strict turns
/// only, so collinear interior points are dropped.
fn hull2d(pts: &[Point]) -> Vec<Point> {
    let cross = |o: &Point, a: &Point, b: &Point| -> Scalar {
        let oa0 = &a[0] - &o[0];
        let oa1 = &a[1] - &o[1];
        let ob0 = &b[0] - &o[0];
        let ob1 = &b[1] - &o[1];
        &oa0 * &ob1 - &oa1 * &ob0
    };
    let build = |iter: &mut dyn Iterator<Item = &Point>| {
        let mut chain: Vec<Point> = Vec::new();
        for p in iter {
            while chain.len() >= 2
                && !cross(&chain[chain.len() - 2], &chain[chain.len() - 1], p).is_positive()
            {
                chain.pop();
            }
            chain.push(p.clone());
        }
        chain
    };
    let mut lower = build(&mut pts.iter());
    let mut upper = build(&mut pts.iter().rev());
    lower.pop();
    upper.pop();
    lower.append(&mut upper);
    if lower.is_empty() {
        // All points collinear: keep the two endpoints.
        vec![pts[0].clone(), pts[pts.len() - 1].clone()]
    } else {
        lower
    }
}

/// Counterclockwise boundary order of a 2d polytope's vertex set.
fn ccw_order(pts: &[Point]) -> Vec<Point> {
    let mut sorted = pts.to_vec();
    sorted.sort_by(cmp_point);
    hull2d(&sorted)
}

fn hull_by_lp(pts: &[Point]) -> Vec<Point> {
    let mut keep: Vec<bool> = vec![true; pts.len()];
    for i in 0..pts.len() {
        let others: Vec<Point> = pts
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i && keep[j])
            .map(|(_, p)| p.clone())
            .collect();
        if !others.is_empty() && point_in_hull(&pts[i], &others) {
            keep[i] = false;
        }
    }
    pts.iter()
        .zip(keep)
        .filter_map(|(p, k)| k.then(|| p.clone()))
        .collect()
}

/// Is `x` a convex combination of `pts`?
pub fn point_in_hull(x: &[Scalar], pts: &[Point]) -> bool {
    let d = x.len();
    let mut a: Vec<Vec<Scalar>> = Vec::with_capacity(d + 1);
    for j in 0..d {
        a.push(pts.iter().map(|p| p[j].clone()).collect());
    }
    a.push(vec![Scalar::one(); pts.len()]);
    let mut b: Vec<Scalar> = x.to_vec();
    b.push(Scalar::one());
    lp::feasible(&a, &b)
}

/// Is `x` in `hull(pts) + R_{>=0}^d` (the Newton-polyhedron style upset)?
pub fn point_in_upset_hull(x: &[Scalar], pts: &[Point]) -> bool {
    let d = x.len();
    let cols = pts.len() + d;
    let mut a: Vec<Vec<Scalar>> = Vec::with_capacity(d + 1);
    for j in 0..d {
        let mut row: Vec<Scalar> = pts.iter().map(|p| p[j].clone()).collect();
        for i in 0..d {
            row.push(if i == j { Scalar::one() } else { Scalar::zero() });
        }
        a.push(row);
    }
    let mut last = vec![Scalar::one(); pts.len()];
    last.resize(cols, Scalar::zero());
    a.push(last);
    let mut b: Vec<Scalar> = x.to_vec();
    b.push(Scalar::one());
    lp::feasible(&a, &b)
}

fn volume_scalar(dim: usize, verts: &[Point]) -> Scalar {
    if verts.len() < dim + 1 {
        return Scalar::zero();
    }
    match dim {
        0 => Scalar::zero(),
        1 => {
            let mut vals: Vec<Scalar> = verts.iter().map(|v| v[0].clone()).collect();
            vals.sort_by(cmp_scalar);
            &vals[vals.len() - 1] - &vals[0]
        }
        2 => {
            let ring = ccw_order(verts);
            let mut acc = Scalar::zero();
            for i in 0..ring.len() {
                let a = &ring[i];
                let b = &ring[(i + 1) % ring.len()];
                acc = acc + &a[0] * &b[1] - &a[1] * &b[0];
            }
            (acc / Scalar::from_int(2)).abs()
        }
        _ => volume_by_facets(dim, verts),
    }
}

/// Divergence-theorem volume: sum h * Vol_{d-1}(projected facet) / |n_k|
/// over outward-oriented facet hyperplanes, divided by d. The projection
/// drops a coordinate with a nonzero normal entry, which keeps every
/// quantity inside the scalar field.
fn volume_by_facets(dim: usize, verts: &[Point]) -> Scalar {
    let planes = facet_hyperplanes(dim, verts);
    // Degenerate (not full-dimensional) polytopes have a hyperplane
    // containing every vertex.
    for (n, h, incident) in &planes {
        if incident.len() == verts.len() {
            let _ = (n, h);
            return Scalar::zero();
        }
    }
    let mut total = Scalar::zero();
    for (n, h, incident) in &planes {
        let k = n
            .iter()
            .position(|c| !c.is_zero())
            .expect("nonzero normal");
        let proj: Vec<Point> = incident
            .iter()
            .map(|&i| {
                verts[i]
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != k)
                    .map(|(_, c)| c.clone())
                    .collect()
            })
            .collect();
        let sub = volume_scalar(dim - 1, &proj);
        total = total + h * &sub / n[k].abs();
    }
    total / Scalar::from_int(dim as i64)
}

pub(crate) type Hyperplane = (Vec<Scalar>, Scalar, Vec<usize>);

/// All supporting hyperplanes spanned by d vertices with the whole set on
/// one side, oriented outward and deduplicated.
pub(crate) fn facet_hyperplanes(dim: usize, verts: &[Point]) -> Vec<Hyperplane> {
    let mut planes: Vec<(Vec<Scalar>, Scalar)> = Vec::new();
    for subset in (0..verts.len()).combinations(dim) {
        let base = &verts[subset[0]];
        let rows: Vec<Vec<Scalar>> = subset[1..]
            .iter()
            .map(|&i| {
                verts[i]
                    .iter()
                    .zip(base.iter())
                    .map(|(a, b)| a - b)
                    .collect()
            })
            .collect();
        let Some(normal) = null_normal(dim, &rows) else {
            continue;
        };
        let h = dot(&normal, base);
        let mut above = false;
        let mut below = false;
        for v in verts {
            match cmp_scalar(&dot(&normal, v), &h) {
                Ordering::Greater => above = true,
                Ordering::Less => below = true,
                Ordering::Equal => {}
            }
            if above && below {
                break;
            }
        }
        if above && below {
            continue;
        }
        // Orient outward: polytope on the <= side.
        let (mut n, mut hh) = (normal, h);
        if above {
            n = n.iter().map(|c| -c).collect();
            hh = -hh;
        }
        // Canonical form: first nonzero coefficient has absolute value 1.
        let lead = n.iter().find(|c| !c.is_zero()).expect("nonzero").abs();
        n = n.iter().map(|c| c / &lead).collect();
        hh = hh / &lead;
        planes.push((n, hh));
    }
    planes.sort_by(|a, b| {
        cmp_point(&a.0, &b.0).then_with(|| cmp_scalar(&a.1, &b.1))
    });
    planes.dedup_by(|a, b| {
        cmp_point(&a.0, &b.0) == Ordering::Equal && cmp_scalar(&a.1, &b.1) == Ordering::Equal
    });
    planes
        .into_iter()
        .map(|(n, h)| {
            let incident: Vec<usize> = verts
                .iter()
                .enumerate()
                .filter(|(_, v)| cmp_scalar(&dot(&n, v), &h) == Ordering::Equal)
                .map(|(i, _)| i)
                .collect();
            (n, h, incident)
        })
        .collect()
}

/// Normal of the hyperplane spanned by `dim - 1` row vectors, by cofactor
/// expansion; `None` when the rows are dependent.
fn null_normal(dim: usize, rows: &[Vec<Scalar>]) -> Option<Vec<Scalar>> {
    debug_assert_eq!(rows.len(), dim - 1);
    let mut normal = Vec::with_capacity(dim);
    let mut sign = Scalar::one();
    for j in 0..dim {
        let minor: Vec<Vec<Scalar>> = rows
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        normal.push(&sign * &det(&minor));
        sign = -sign;
    }
    normal.iter().any(|c| !c.is_zero()).then_some(normal)
}

fn det(m: &[Vec<Scalar>]) -> Scalar {
    match m.len() {
        0 => Scalar::one(),
        1 => m[0][0].clone(),
        2 => &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0]),
        n => {
            let mut acc = Scalar::zero();
            let mut sign = Scalar::one();
            for j in 0..n {
                let minor: Vec<Vec<Scalar>> = m[1..]
                    .iter()
                    .map(|r| {
                        r.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != j)
                            .map(|(_, v)| v.clone())
                            .collect()
                    })
                    .collect();
                acc = acc + &sign * &m[0][j] * det(&minor);
                sign = -sign;
            }
            acc
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(coords: &[i64]) -> Point {
        coords.iter().map(|&c| Scalar::from_int(c)).collect()
    }

    fn rat_pt(coords: &[(i64, i64)]) -> Point {
        coords.iter().map(|&(n, d)| Scalar::rat(n, d)).collect()
    }

    fn square() -> Polytope {
        Polytope::hull(2, vec![pt(&[0, 0]), pt(&[1, 0]), pt(&[0, 1]), pt(&[1, 1])]).unwrap()
    }

    #[test]
    fn hull_drops_interior_and_collinear_points() {
        let p = Polytope::hull(
            2,
            vec![
                pt(&[0, 0]),
                pt(&[2, 0]),
                pt(&[0, 2]),
                pt(&[1, 0]),
                rat_pt(&[(1, 2), (1, 2)]),
            ],
        )
        .unwrap();
        assert_eq!(p.vertices().len(), 3);
    }

    #[test]
    fn unit_square_volume() {
        assert_eq!(square().volume().unwrap(), Rational::from_int(1));
    }

    #[test]
    fn pentagon_volume_is_seven() {
        let p = Polytope::hull(
            2,
            vec![pt(&[0, 0]), pt(&[3, 0]), pt(&[3, 1]), pt(&[1, 3]), pt(&[0, 3])],
        )
        .unwrap();
        assert_eq!(p.volume().unwrap(), Rational::from_int(7));
    }

    #[test]
    fn standard_simplex_3d() {
        let p = Polytope::hull(
            3,
            vec![pt(&[0, 0, 0]), pt(&[1, 0, 0]), pt(&[0, 1, 0]), pt(&[0, 0, 1])],
        )
        .unwrap();
        assert_eq!(p.volume().unwrap(), Rational::new(1, 6));
    }

    #[test]
    fn cube_with_interior_points_3d() {
        let mut pts = vec![];
        for x in 0..=1 {
            for y in 0..=1 {
                for z in 0..=1 {
                    pts.push(pt(&[x, y, z]));
                }
            }
        }
        pts.push(rat_pt(&[(1, 2), (1, 2), (1, 2)]));
        let p = Polytope::hull(3, pts).unwrap();
        assert_eq!(p.vertices().len(), 8);
        assert_eq!(p.volume().unwrap(), Rational::from_int(1));
    }

    #[test]
    fn minkowski_square_plus_triangle() {
        let tri = Polytope::hull(2, vec![pt(&[0, 0]), pt(&[2, 0]), pt(&[0, 2])]).unwrap();
        let sum = square().minkowski_sum(&tri).unwrap();
        assert_eq!(sum.volume().unwrap(), Rational::from_int(7));
        let expect = Polytope::hull(
            2,
            vec![pt(&[0, 0]), pt(&[3, 0]), pt(&[3, 1]), pt(&[1, 3]), pt(&[0, 3])],
        )
        .unwrap();
        assert!(sum.equals(&expect));
    }

    #[test]
    fn translate_is_minkowski_with_a_point() {
        let p = square();
        let shifted = p.translate(&[Scalar::from_int(5), Scalar::from_int(7)]).unwrap();
        let point = Polytope::hull(2, vec![pt(&[5, 7])]).unwrap();
        assert!(p.minkowski_sum(&point).unwrap().equals(&shifted));
    }

    #[test]
    fn quad_coordinates_volume() {
        // Triangle with legs sqrt(2): area = 1, exactly in Q(sqrt 2).
        let r2 = Scalar::sqrt_of(2);
        let p = Polytope::hull(
            2,
            vec![
                vec![Scalar::zero(), Scalar::zero()],
                vec![r2.clone(), Scalar::zero()],
                vec![Scalar::zero(), r2],
            ],
        )
        .unwrap();
        assert_eq!(p.volume_exact().unwrap(), Scalar::from_int(1));
    }

    #[test]
    fn degenerate_volume_is_zero() {
        let p = Polytope::hull(3, vec![pt(&[0, 0, 0]), pt(&[1, 0, 0]), pt(&[0, 1, 0])]).unwrap();
        assert_eq!(p.volume().unwrap(), Rational::from_int(0));
        let seg = Polytope::hull(2, vec![pt(&[0, 0]), pt(&[2, 2]), pt(&[1, 1])]).unwrap();
        assert_eq!(seg.vertices().len(), 2);
        assert_eq!(seg.volume().unwrap(), Rational::from_int(0));
    }

    #[test]
    fn octahedron_volume() {
        let p = Polytope::hull(
            3,
            vec![
                pt(&[1, 0, 0]),
                pt(&[-1, 0, 0]),
                pt(&[0, 1, 0]),
                pt(&[0, -1, 0]),
                pt(&[0, 0, 1]),
                pt(&[0, 0, -1]),
            ],
        )
        .unwrap();
        assert_eq!(p.volume().unwrap(), Rational::new(4, 3));
    }

    #[test]
    fn contains_and_upset() {
        let tri = Polytope::hull(2, vec![pt(&[0, 0]), pt(&[2, 0]), pt(&[0, 2])]).unwrap();
        assert!(tri.contains(&[Scalar::rat(1, 2), Scalar::rat(1, 2)]).unwrap());
        assert!(!tri.contains(&[Scalar::from_int(2), Scalar::from_int(2)]).unwrap());
        // (1,1) is on the segment (2,0)-(0,2), hence in the upset hull.
        let gens = vec![pt(&[2, 0]), pt(&[0, 2])];
        assert!(point_in_upset_hull(&pt(&[1, 1]), &gens));
        assert!(!point_in_upset_hull(&pt(&[0, 1]), &gens));
        assert!(point_in_upset_hull(&pt(&[5, 0]), &gens));
    }
}

mod serde_impl {
    //! JSON encoding: `{"dim":2, "verts":[["0/1","0/1"], ...]}`. Rational
    //! coordinates serialize as "p/q" strings; quadratic or floating ones
    //! fall back to the full scalar object.

    use serde::de::Error as DeError;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use super::{Point, Polytope};
    use crate::numeric::{Rational, Scalar};

    #[derive(Serialize, Deserialize)]
    #[serde(untagged)]
    enum CoordRepr {
        Plain(String),
        Full(Scalar),
    }

    #[derive(Serialize, Deserialize)]
    struct PolytopeRepr {
        dim: usize,
        verts: Vec<Vec<CoordRepr>>,
    }

    impl Serialize for Polytope {
        fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
            let verts = self
                .vertices()
                .iter()
                .map(|v| {
                    v.iter()
                        .map(|c| match c {
                            Scalar::Rat(r) => {
                                CoordRepr::Plain(format!("{}/{}", r.numer(), r.denom()))
                            }
                            other => CoordRepr::Full(other.clone()),
                        })
                        .collect()
                })
                .collect();
            PolytopeRepr {
                dim: self.dim(),
                verts,
            }
            .serialize(s)
        }
    }

    impl<'de> Deserialize<'de> for Polytope {
        fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
            let repr = PolytopeRepr::deserialize(d)?;
            let mut points: Vec<Point> = Vec::with_capacity(repr.verts.len());
            for v in repr.verts {
                let mut point = Vec::with_capacity(v.len());
                for c in v {
                    point.push(match c {
                        CoordRepr::Plain(s) => Scalar::Rat(
                            s.parse::<Rational>()
                                .map_err(|e| D::Error::custom(format!("{e}")))?,
                        ),
                        CoordRepr::Full(s) => s,
                    });
                }
                points.push(point);
            }
            Polytope::hull(repr.dim, points).map_err(|e| D::Error::custom(format!("{e}")))
        }
    }
}
