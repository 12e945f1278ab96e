use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::convex::{point_in_upset_hull, Point, Polytope};
use crate::error::{Error, Result};
use crate::numeric::Scalar;

/// Exponent vector of a monomial; the lattice model of ring elements.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentVector(pub Vec<u64>);

impl ExponentVector {
    pub fn zero(dim: usize) -> Self {
        ExponentVector(vec![0; dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[u64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }

    /// Componentwise `<=` (divisibility of monomials).
    pub fn leq(&self, other: &ExponentVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn add(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn lcm(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn scale(&self, k: u64) -> ExponentVector {
        ExponentVector(self.0.iter().map(|c| c * k).collect())
    }

    pub fn to_point(&self) -> Point {
        self.0.iter().map(|&c| Scalar::from_int(c as i64)).collect()
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Monomial ideal given by its minimal generators (an antichain under
/// componentwise order), kept sorted for determinism.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    dim: usize,
    gens: Vec<ExponentVector>,
}

impl MonomialIdeal {
    /// Builds the ideal generated by `gens`, reducing to the minimal
    /// antichain.
    pub fn new(dim: usize, gens: Vec<ExponentVector>) -> Result<MonomialIdeal> {
        for g in &gens {
            if g.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: g.dim(),
                });
            }
        }
        Ok(MonomialIdeal {
            dim,
            gens: minimalize(dim, gens),
        })
    }

    pub fn from_coords(dim: usize, gens: &[&[u64]]) -> Result<MonomialIdeal> {
        MonomialIdeal::new(
            dim,
            gens.iter().map(|g| ExponentVector(g.to_vec())).collect(),
        )
    }

    pub fn unit(dim: usize) -> MonomialIdeal {
        MonomialIdeal {
            dim,
            gens: vec![ExponentVector::zero(dim)],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[ExponentVector] {
        &self.gens
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_zero()
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn contains(&self, v: &ExponentVector) -> Result<bool> {
        if v.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: v.dim(),
            });
        }
        Ok(self.gens.iter().any(|g| g.leq(v)))
    }

    /// The pure power of x_i contained in the ideal, if any.
    pub fn pure_power(&self, axis: usize) -> Option<u64> {
        self.gens
            .iter()
            .filter(|g| {
                g.coords()
                    .iter()
                    .enumerate()
                    .all(|(j, &c)| j == axis || c == 0)
            })
            .map(|g| g.coords()[axis])
            .min()
    }

    /// An ideal is primary to the maximal ideal exactly when it contains a
    /// pure power of every variable.
    pub fn is_m_primary(&self) -> bool {
        (0..self.dim).all(|i| self.pure_power(i).is_some())
    }

    fn require_m_primary(&self) -> Result<()> {
        if self.is_m_primary() {
            Ok(())
        } else {
            Err(Error::NotPrimary(format!("{self:?}")))
        }
    }

    /// `Some(t)` when the ideal is the t-th power of the maximal ideal
    /// (all monomials of degree t).
    pub fn as_power_of_max(&self) -> Option<u64> {
        let t = self.gens.first()?.total();
        if self.gens.iter().any(|g| g.total() != t) {
            return None;
        }
        (self.gens.len() as u64 == simplex_shell_count(self.dim, t)).then_some(t)
    }

    /// All monomials of total degree t: the t-th power of the maximal
    /// ideal.
    pub fn power_of_max(dim: usize, t: u64) -> MonomialIdeal {
        if t == 0 {
            return MonomialIdeal::unit(dim);
        }
        let mut gens = vec![];
        let mut cur = vec![0u64; dim];
        fn rec(dim: usize, left: u64, pos: usize, cur: &mut Vec<u64>, out: &mut Vec<ExponentVector>) {
            if pos == dim - 1 {
                cur[pos] = left;
                out.push(ExponentVector(cur.clone()));
                return;
            }
            for v in 0..=left {
                cur[pos] = v;
                rec(dim, left - v, pos + 1, cur, out);
            }
        }
        rec(dim, t, 0, &mut cur, &mut gens);
        gens.sort();
        MonomialIdeal { dim, gens }
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: other.dim,
            });
        }
        if let (Some(a), Some(b)) = (self.as_power_of_max(), other.as_power_of_max()) {
            return Ok(MonomialIdeal::power_of_max(self.dim, a + b));
        }
        let mut sums = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                sums.push(a.add(b));
            }
        }
        MonomialIdeal::new(self.dim, sums)
    }

    pub fn power(&self, k: u64) -> Result<MonomialIdeal> {
        if k == 0 {
            return Ok(MonomialIdeal::unit(self.dim));
        }
        if let Some(t) = self.as_power_of_max() {
            return Ok(MonomialIdeal::power_of_max(self.dim, t * k));
        }
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: other.dim,
            });
        }
        let mut lcms = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                lcms.push(a.lcm(b));
            }
        }
        MonomialIdeal::new(self.dim, lcms)
    }

    /// Sum of ideals: union of the generating sets.
    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: other.dim,
            });
        }
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        MonomialIdeal::new(self.dim, gens)
    }

    /// Number of standard monomials (lattice points outside the ideal);
    /// finite exactly when the ideal is m-primary.
    pub fn colength(&self) -> Result<u64> {
        self.require_m_primary()?;
        Ok(colength_rec(self.dim, &self.gens))
    }

    /// Newton polyhedron `hull(generators) + R_{>=0}^d`, reported by the
    /// vertices of its bounded face complex.
    pub fn newton_polyhedron(&self) -> Result<NewtonPolyhedron> {
        self.require_m_primary()?;
        let verts: Vec<ExponentVector> = if self.dim == 2 {
            lower_hull_2d(&self.gens)
                .into_iter()
                .map(|(x, y)| ExponentVector(vec![x as u64, y as u64]))
                .collect()
        } else {
            self.gens
                .iter()
                .enumerate()
                .filter(|(i, g)| {
                    let others: Vec<Point> = self
                        .gens
                        .iter()
                        .enumerate()
                        .filter(|&(j, _)| j != *i)
                        .map(|(_, h)| h.to_point())
                        .collect();
                    others.is_empty() || !point_in_upset_hull(&g.to_point(), &others)
                })
                .map(|(_, g)| g.clone())
                .collect()
        };
        Ok(NewtonPolyhedron {
            dim: self.dim,
            vertices: verts,
        })
    }

    /// Integral closure: the ideal of all lattice points inside the Newton
    /// polyhedron.
    pub fn integral_closure(&self) -> Result<MonomialIdeal> {
        self.closure_dilation(1)
    }

    /// Minimal generators of `{v : r v inside the Newton polyhedron}`, the
    /// r-th dilation slice used by graded integral closures.
    pub fn closure_dilation(&self, r: u64) -> Result<MonomialIdeal> {
        assert!(r >= 1);
        // Powers of the maximal ideal are integrally closed; the dilation
        // is the rounded-up power.
        if let Some(t) = self.as_power_of_max() {
            return Ok(MonomialIdeal::power_of_max(self.dim, t.div_ceil(r)));
        }
        self.require_m_primary()?;
        let oracle = self.np_membership()?;
        let caps: Vec<u64> = (0..self.dim)
            .map(|i| self.pure_power(i).expect("m-primary").div_ceil(r))
            .collect();
        let mut minimal: Vec<ExponentVector> = Vec::new();
        for v in box_points_graded(&caps) {
            if minimal.iter().any(|g| g.leq(&v)) {
                continue;
            }
            if oracle.contains_scaled(&v, r) {
                minimal.push(v);
            }
        }
        MonomialIdeal::new(self.dim, minimal)
    }

    /// Fast membership oracle for the Newton polyhedron.
    pub fn np_membership(&self) -> Result<NpMembership> {
        self.require_m_primary()?;
        if self.dim == 2 {
            return Ok(NpMembership::Chain(lower_hull_2d(&self.gens)));
        }
        // Cut the polyhedron beyond every candidate of interest and keep
        // the facet inequalities.
        let c: u64 = (0..self.dim)
            .map(|i| self.pure_power(i).expect("m-primary"))
            .sum::<u64>()
            + 1;
        let cut = self.newton_polyhedron()?.cut(&Scalar::from_int(c as i64))?;
        let facets = crate::convex::facet_hyperplanes(self.dim, cut.vertices())
            .into_iter()
            .map(|(n, h, _)| (n, h))
            .collect();
        Ok(NpMembership::Facets {
            facets,
            valid_below: c,
        })
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ideal(dim {}; ", self.dim)?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g:?}")?;
        }
        write!(f, ")")
    }
}

/// Membership test for a Newton polyhedron: an integer lower-hull walk in
/// two variables, facet inequalities otherwise.
pub enum NpMembership {
    Chain(Vec<(i128, i128)>),
    Facets {
        facets: Vec<(Vec<Scalar>, Scalar)>,
        valid_below: u64,
    },
}

impl NpMembership {
    /// Does `r * v` lie in the polyhedron?
    pub fn contains_scaled(&self, v: &ExponentVector, r: u64) -> bool {
        match self {
            NpMembership::Chain(chain) => {
                let x = v.coords()[0] as i128 * r as i128;
                let y = v.coords()[1] as i128 * r as i128;
                let last = chain.last().expect("nonempty chain");
                if x >= last.0 {
                    return true;
                }
                // Segment with x_i <= x < x_{i+1}.
                let i = chain.partition_point(|&(cx, _)| cx <= x) - 1;
                let (x0, y0) = chain[i];
                let (x1, y1) = chain[i + 1];
                (y - y0) * (x1 - x0) >= (y1 - y0) * (x - x0)
            }
            NpMembership::Facets {
                facets,
                valid_below,
            } => {
                debug_assert!(v.total() * r < *valid_below);
                let point: Vec<Scalar> = v
                    .coords()
                    .iter()
                    .map(|&c| Scalar::from_int((c * r) as i64))
                    .collect();
                facets.iter().all(|(n, h)| {
                    let lhs = n
                        .iter()
                        .zip(&point)
                        .fold(Scalar::zero(), |acc, (a, x)| acc + a * x);
                    !(&lhs - h).is_positive()
                })
            }
        }
    }
}

/// Lower convex chain of a two-variable staircase (vertices of the Newton
/// polyhedron), x ascending.
fn lower_hull_2d(gens: &[ExponentVector]) -> Vec<(i128, i128)> {
    let mut pts: Vec<(i128, i128)> = gens
        .iter()
        .map(|g| (g.coords()[0] as i128, g.coords()[1] as i128))
        .collect();
    pts.sort();
    let mut chain: Vec<(i128, i128)> = Vec::new();
    for p in pts {
        while chain.len() >= 2 {
            let a = chain[chain.len() - 2];
            let b = chain[chain.len() - 1];
            let cross = (b.0 - a.0) * (p.1 - a.1) - (b.1 - a.1) * (p.0 - a.0);
            if cross <= 0 {
                chain.pop();
            } else {
                break;
            }
        }
        chain.push(p);
    }
    chain
}

/// Newton polyhedron carrier: vertex list of the bounded faces plus the
/// implicit recession cone R_{>=0}^d.
#[derive(Clone, Debug)]
pub struct NewtonPolyhedron {
    dim: usize,
    vertices: Vec<ExponentVector>,
}

impl NewtonPolyhedron {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[ExponentVector] {
        &self.vertices
    }

    pub fn contains(&self, p: &Point) -> bool {
        let verts: Vec<Point> = self.vertices.iter().map(|v| v.to_point()).collect();
        point_in_upset_hull(p, &verts)
    }

    /// The compact cut `NP /\ {sum x <= c}`; valid for `c` at least the
    /// largest vertex degree.
    pub fn cut(&self, c: &Scalar) -> Result<Polytope> {
        let max_deg = self
            .vertices
            .iter()
            .map(ExponentVector::total)
            .max()
            .unwrap_or(0);
        if c < &Scalar::from_int(max_deg as i64) {
            return Err(Error::TruncationTooLow {
                c: format!("{c}"),
                lambda: format!("{max_deg}"),
            });
        }
        let mut pts: Vec<Point> = Vec::new();
        for v in &self.vertices {
            pts.push(v.to_point());
            let total = Scalar::from_int(v.total() as i64);
            for i in 0..self.dim {
                let mut capped = v.to_point();
                capped[i] = &capped[i] + &(c - &total);
                pts.push(capped);
            }
        }
        Polytope::hull(self.dim, pts)
    }
}

/// Reduces a generating set to the minimal antichain, sorted.
fn minimalize(dim: usize, mut gens: Vec<ExponentVector>) -> Vec<ExponentVector> {
    gens.sort();
    gens.dedup();
    match dim {
        0 | 1 => gens.into_iter().take(1).collect(),
        2 => {
            // Sorted by (x asc, y asc): keep strictly descending y.
            let mut out: Vec<ExponentVector> = Vec::new();
            for g in gens {
                match out.last() {
                    Some(last) => {
                        if g.0[1] < last.0[1] {
                            out.push(g);
                        }
                    }
                    None => out.push(g),
                }
            }
            out
        }
        3 => minimalize3(gens),
        _ => {
            let mut out: Vec<ExponentVector> = Vec::new();
            for g in &gens {
                if !gens.iter().any(|h| h != g && h.leq(g)) {
                    out.push(g.clone());
                }
            }
            out
        }
    }
}

/// Skyline sweep for three variables: process by z ascending, keeping a 2d
/// staircase of already-dominating (x, y) pairs.
fn minimalize3(gens: Vec<ExponentVector>) -> Vec<ExponentVector> {
    let mut by_z: BTreeMap<u64, Vec<(u64, u64)>> = BTreeMap::new();
    for g in &gens {
        by_z.entry(g.0[2]).or_default().push((g.0[0], g.0[1]));
    }
    // staircase: x -> y, with y strictly decreasing as x increases.
    let mut stair: BTreeMap<u64, u64> = BTreeMap::new();
    let dominated = |stair: &BTreeMap<u64, u64>, x: u64, y: u64| -> bool {
        stair.range(..=x).next_back().is_some_and(|(_, &sy)| sy <= y)
    };
    let mut out: Vec<ExponentVector> = Vec::new();
    for (z, mut group) in by_z {
        // 2d-minimalize the group itself.
        group.sort();
        let mut reduced: Vec<(u64, u64)> = Vec::new();
        for (x, y) in group {
            if !reduced.last().is_some_and(|&(_, ly)| ly <= y) {
                reduced.push((x, y));
            }
        }
        let survivors: Vec<(u64, u64)> = reduced
            .into_iter()
            .filter(|&(x, y)| !dominated(&stair, x, y))
            .collect();
        for &(x, y) in &survivors {
            out.push(ExponentVector(vec![x, y, z]));
            // Insert into the staircase, evicting dominated entries.
            if dominated(&stair, x, y) {
                continue;
            }
            let evict: Vec<u64> = stair
                .range(x..)
                .take_while(|(_, &sy)| sy >= y)
                .map(|(&sx, _)| sx)
                .collect();
            for sx in evict {
                stair.remove(&sx);
            }
            stair.insert(x, y);
        }
    }
    out.sort();
    out
}

/// Recursive lattice count of the staircase complement.
fn colength_rec(dim: usize, gens: &[ExponentVector]) -> u64 {
    if gens.iter().any(|g| g.is_zero()) {
        return 0;
    }
    match dim {
        0 => 0,
        1 => gens.iter().map(|g| g.0[0]).min().expect("m-primary"),
        2 => {
            // Antichain sorted by x asc has y strictly descending.
            let mut pairs: Vec<(u64, u64)> = gens.iter().map(|g| (g.0[0], g.0[1])).collect();
            pairs.sort();
            let mut total = 0u64;
            for i in 0..pairs.len() - 1 {
                total += (pairs[i + 1].0 - pairs[i].0) * pairs[i].1;
            }
            total
        }
        _ => {
            // Slice along the last axis; the slice ideal only changes at
            // generator values.
            let axis = dim - 1;
            let top = gens
                .iter()
                .filter(|g| (0..axis).all(|j| g.0[j] == 0))
                .map(|g| g.0[axis])
                .min()
                .expect("m-primary");
            let mut breaks: Vec<u64> = gens.iter().map(|g| g.0[axis]).collect();
            breaks.push(0);
            breaks.push(top);
            breaks.sort();
            breaks.dedup();
            let mut total = 0u64;
            for w in breaks.windows(2) {
                let (t, next) = (w[0], w[1]);
                if t >= top {
                    break;
                }
                let span = next.min(top) - t;
                let slice: Vec<ExponentVector> = gens
                    .iter()
                    .filter(|g| g.0[axis] <= t)
                    .map(|g| ExponentVector(g.0[..axis].to_vec()))
                    .collect();
                let slice = minimalize(dim - 1, slice);
                total += span * colength_rec(dim - 1, &slice);
            }
            total
        }
    }
}

/// Number of lattice points on the simplex shell `sum(v) = t` in `dim`
/// coordinates.
fn simplex_shell_count(dim: usize, t: u64) -> u64 {
    // C(t + dim - 1, dim - 1)
    let mut acc: u128 = 1;
    for i in 0..(dim as u64 - 1) {
        acc = acc * (t + i + 1) as u128 / (i + 1) as u128;
    }
    acc as u64
}

/// Lattice points of the box `prod [0, caps_i]` in graded (total degree,
/// then lex) order, so dominance pruning sees small points first.
pub(crate) fn box_points_graded_pub(caps: &[u64]) -> Vec<ExponentVector> {
    box_points_graded(caps)
}

fn box_points_graded(caps: &[u64]) -> Vec<ExponentVector> {
    let mut pts = vec![];
    let mut cur = vec![0u64; caps.len()];
    'outer: loop {
        pts.push(ExponentVector(cur.clone()));
        let mut i = caps.len();
        while i > 0 {
            i -= 1;
            if cur[i] < caps[i] {
                cur[i] += 1;
                for c in cur.iter_mut().skip(i + 1) {
                    *c = 0;
                }
                continue 'outer;
            }
        }
        break;
    }
    pts.sort_by_key(|v: &ExponentVector| (v.total(), v.0.clone()));
    pts
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(gens: &[&[u64]]) -> MonomialIdeal {
        MonomialIdeal::from_coords(gens[0].len(), gens).unwrap()
    }

    /// Brute-force staircase complement count on the bounding box.
    fn colength_brute(i: &MonomialIdeal) -> u64 {
        let caps: Vec<u64> = (0..i.dim()).map(|a| i.pure_power(a).unwrap()).collect();
        box_points_graded(&caps)
            .into_iter()
            .filter(|v| !i.contains(v).unwrap())
            .count() as u64
    }

    #[test]
    fn minimality_enforced() {
        let i = ideal(&[&[2, 0], &[0, 2], &[1, 1], &[3, 3]]);
        assert_eq!(i.generators().len(), 3);
        let j = ideal(&[&[1, 2, 3], &[2, 2, 3], &[0, 0, 4], &[1, 2, 2]]);
        assert_eq!(
            j.generators(),
            &[
                ExponentVector(vec![0, 0, 4]),
                ExponentVector(vec![1, 2, 2]),
            ]
        );
    }

    #[test]
    fn colength_examples() {
        // (x,y)^2 -> 3 standard monomials.
        assert_eq!(ideal(&[&[2, 0], &[1, 1], &[0, 2]]).colength().unwrap(), 3);
        // (x^2, y^3) -> 6.
        assert_eq!(ideal(&[&[2, 0], &[0, 3]]).colength().unwrap(), 6);
        // Staircase complement of (x^3, x^2 y, x y^3, y^4), frozen from the
        // brute-force oracle below.
        let i = ideal(&[&[3, 0], &[2, 1], &[1, 3], &[0, 4]]);
        assert_eq!(colength_brute(&i), 8);
        assert_eq!(i.colength().unwrap(), 8);
    }

    #[test]
    fn colength_matches_brute_force_in_3d() {
        let i = ideal(&[&[2, 0, 0], &[0, 3, 0], &[0, 0, 4], &[1, 1, 1]]);
        assert_eq!(i.colength().unwrap(), colength_brute(&i));
        let j = ideal(&[&[2, 0, 0], &[1, 1, 0], &[0, 2, 0], &[0, 1, 1], &[1, 0, 1], &[0, 0, 2]]);
        assert_eq!(j.colength().unwrap(), colength_brute(&j));
        assert_eq!(j.colength().unwrap(), 4); // (x,y,z)^2
    }

    #[test]
    fn colength_not_primary_errors() {
        let i = ideal(&[&[2, 1]]);
        assert!(matches!(i.colength(), Err(Error::NotPrimary(_))));
    }

    #[test]
    fn product_and_intersection() {
        let m = ideal(&[&[1, 0], &[0, 1]]);
        let sq = m.product(&m).unwrap();
        assert_eq!(sq, ideal(&[&[2, 0], &[1, 1], &[0, 2]]));
        let i = ideal(&[&[2, 0], &[0, 3]]);
        let prod = m.product(&i).unwrap();
        assert_eq!(prod, ideal(&[&[3, 0], &[2, 1], &[1, 3], &[0, 4]]));
        let x2 = ideal(&[&[2, 0]]);
        let y3 = ideal(&[&[0, 3]]);
        assert_eq!(x2.intersect(&y3).unwrap(), ideal(&[&[2, 3]]));
    }

    #[test]
    fn power_matches_repeated_product() {
        let i = ideal(&[&[2, 0], &[0, 3]]);
        let p3 = i.power(3).unwrap();
        let manual = i.product(&i).unwrap().product(&i).unwrap();
        assert_eq!(p3, manual);
        assert!(i.power(0).unwrap().is_unit());
    }

    #[test]
    fn newton_polyhedron_vertices() {
        let i = ideal(&[&[2, 0], &[0, 2]]);
        let np = i.newton_polyhedron().unwrap();
        assert_eq!(np.vertices().len(), 2);
        let j = ideal(&[&[3, 0], &[2, 1], &[1, 3], &[0, 4]]);
        let np = j.newton_polyhedron().unwrap();
        let verts: Vec<_> = np.vertices().to_vec();
        assert_eq!(
            verts,
            vec![
                ExponentVector(vec![0, 4]),
                ExponentVector(vec![2, 1]),
                ExponentVector(vec![3, 0]),
            ]
        );
        let k = ideal(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(k.newton_polyhedron().unwrap().vertices().len(), 3);
    }

    #[test]
    fn integral_closure_examples() {
        let i = ideal(&[&[2, 0], &[0, 2]]);
        assert_eq!(
            i.integral_closure().unwrap(),
            ideal(&[&[2, 0], &[1, 1], &[0, 2]])
        );
        let m = ideal(&[&[1, 0], &[0, 1]]);
        assert_eq!(m.integral_closure().unwrap(), m);
        let j = ideal(&[&[4, 0], &[0, 2]]);
        assert_eq!(
            j.integral_closure().unwrap(),
            ideal(&[&[4, 0], &[2, 1], &[0, 2]])
        );
    }

    #[test]
    fn integral_closure_idempotent_and_contains() {
        for gens in [vec![&[3u64, 0][..], &[0, 5]], vec![&[2, 0], &[1, 2], &[0, 4]]] {
            let i = MonomialIdeal::from_coords(2, &gens).unwrap();
            let c = i.integral_closure().unwrap();
            for g in i.generators() {
                assert!(c.contains(g).unwrap());
            }
            assert_eq!(c.integral_closure().unwrap(), c);
        }
    }

    #[test]
    fn np_cut_volume() {
        // (x^2,y^2): cut at c=4 is the quadrilateral (2,0),(4,0),(0,4),(0,2).
        let i = ideal(&[&[2, 0], &[0, 2]]);
        let cut = i.newton_polyhedron().unwrap().cut(&Scalar::from_int(4)).unwrap();
        assert_eq!(cut.volume().unwrap(), crate::numeric::Rational::from_int(6));
    }
}
