//! Min-plus arithmetic, sectors, covector types and tropical segments.
//!
//! The convention is min-plus throughout: `a ⊕ b = min(a, b)`, `a ⊙ b = a + b`.
//! The max-plus picture is obtained through `x ↦ -x`.
//!
//! In `R^n` the sectors are `S_0 = {x : x_i <= 0}` and, for `j >= 1`,
//! `S_j = {x : x_j >= 0, x_j >= x_i}`; a point `x` lies in the tropical hull of a
//! finite set `V` iff every sector `j` has some `v ∈ V` with `x ∈ v + S_j`.

use std::collections::BTreeSet;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize};

use crate::error::{check_dim, Error, Result};
use crate::polyhedron::Polyhedron;
use crate::rational::{RatVector, Rational};

/// Whether a tropical combination lives in affine `R^n` or in the projective torus.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CombineMode {
    /// Coefficients must satisfy `min = 0`.
    Affine,
    /// Coefficients are unconstrained; results are taken modulo `R·1`.
    Projective,
}

/// `coeffs[0] ⊙ points[0] ⊕ … ⊕ coeffs[k] ⊙ points[k]`, coordinatewise.
pub fn trop_combine(coeffs: &[Rational], points: &[RatVector], mode: CombineMode) -> Result<RatVector> {
    if coeffs.is_empty() || points.is_empty() {
        return Err(Error::EmptyInput);
    }
    check_dim(coeffs.len(), points.len())?;
    let dim = points[0].dim();
    for p in points {
        check_dim(dim, p.dim())?;
    }
    if mode == CombineMode::Affine {
        let min = coeffs.iter().min().expect("nonempty");
        if !min.is_zero() {
            return Err(Error::CoefficientNormalization { min: min.to_string() });
        }
    }
    let out = (0..dim)
        .map(|k| {
            coeffs
                .iter()
                .zip(points)
                .map(|(a, p)| a + &p[k])
                .min()
                .expect("nonempty")
        })
        .collect::<Vec<_>>();
    Ok(RatVector::new(out))
}

/// Generators of `S_j` in `R^n`: `-e_i` for `j = 0`; `e_0 = (1,…,1)` and `-e_i` (`i ≠ j`) otherwise.
pub fn sector_generators(j: usize, n: usize) -> Result<Vec<RatVector>> {
    if j > n {
        return Err(Error::IndexOutOfRange { index: j, max: n });
    }
    let neg_unit = |i: usize| -&RatVector::unit(n, i);
    Ok(if j == 0 {
        (0..n).map(neg_unit).collect()
    } else {
        std::iter::once(RatVector::ones(n))
            .chain((0..n).filter(|&i| i + 1 != j).map(neg_unit))
            .collect()
    })
}

/// The sector `S_j ⊂ R^n` with both representations.
pub fn sector(j: usize, n: usize) -> Result<Polyhedron> {
    if n == 0 {
        return Err(Error::EmptyInput);
    }
    let gens = sector_generators(j, n)?;
    Ok(Polyhedron::cone(n, gens)?.canonical())
}

/// Membership `y ∈ S_j` from the inequality description of the sector.
pub fn in_sector(y: &RatVector, j: usize) -> bool {
    if j == 0 {
        y.iter().all(|c| !c.is_positive())
    } else {
        let top = &y[j - 1];
        !top.is_negative() && y.iter().all(|c| c <= top)
    }
}

/// The type of a point relative to a finite set: `entries[j]` holds the indices `i`
/// (0-based) with `x ∈ V[i] + S_j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CovectorType {
    pub entries: Vec<BTreeSet<usize>>,
}

impl CovectorType {
    /// Tropical Farkas: every sector is witnessed.
    pub fn is_covering(&self) -> bool {
        self.entries.iter().all(|t| !t.is_empty())
    }
}

pub fn covector(x: &RatVector, v: &[RatVector]) -> Result<CovectorType> {
    if v.is_empty() {
        return Err(Error::EmptyInput);
    }
    let n = x.dim();
    for p in v {
        check_dim(n, p.dim())?;
    }
    let diffs: Vec<RatVector> = v.iter().map(|p| x - p).collect();
    let entries = (0..=n)
        .map(|j| (0..v.len()).filter(|&i| in_sector(&diffs[i], j)).collect())
        .collect();
    Ok(CovectorType { entries })
}

pub fn in_tconv_finite(x: &RatVector, v: &[RatVector]) -> Result<bool> {
    Ok(covector(x, v)?.is_covering())
}

/// Pseudovertices of the tropical segment from `a` to `b`, in order, without repeats.
///
/// Points of the segment are `min(α + a, β + b)` with `min(α, β) = 0`. With
/// `d = b - a`, breakpoints occur at `β = -d_k` for `d_k < 0`, at `α = β = 0`
/// (the point `min(a, b)`), and at `α = d_k` for `d_k > 0`.
pub fn trop_segment(a: &RatVector, b: &RatVector) -> Result<Vec<RatVector>> {
    check_dim(a.dim(), b.dim())?;
    let d = b - a;
    let mut neg: Vec<Rational> = d.iter().filter(|c| c.is_negative()).cloned().collect();
    let mut pos: Vec<Rational> = d.iter().filter(|c| c.is_positive()).cloned().collect();
    neg.sort();
    pos.sort();

    let mut out = vec![a.clone()];
    // α = 0, β decreasing from -d_min to 0
    for dk in &neg {
        let beta = -dk;
        out.push(RatVector::new(
            a.iter().zip(b).map(|(x, y)| x.min(&(&beta + y)).clone()).collect(),
        ));
    }
    out.push(RatVector::new(a.iter().zip(b).map(|(x, y)| x.min(y).clone()).collect()));
    // β = 0, α increasing up to d_max
    for alpha in &pos {
        out.push(RatVector::new(
            a.iter().zip(b).map(|(x, y)| (alpha + x).min(y.clone())).collect(),
        ));
    }
    out.push(b.clone());
    out.dedup();
    Ok(out)
}

/// A point of the projective torus `R^{n+1} / R·1`.
#[derive(Clone, Debug, Serialize)]
pub struct TropPoint {
    coords: RatVector,
    #[serde(skip)]
    normalized: RatVector,
}

impl TropPoint {
    pub fn new(coords: RatVector) -> Result<Self> {
        let first = coords.coords().first().ok_or(Error::EmptyInput)?.clone();
        let normalized = coords.shift(&-first);
        Ok(TropPoint { coords, normalized })
    }

    pub fn coords(&self) -> &RatVector {
        &self.coords
    }

    /// Representative with first coordinate 0.
    pub fn normalized(&self) -> &RatVector {
        &self.normalized
    }

    /// Affine chart `R^n`: drop the (zero) first coordinate of the normalized representative.
    pub fn chart(&self) -> RatVector {
        RatVector::new(self.normalized.coords()[1..].to_vec())
    }
}

impl PartialEq for TropPoint {
    fn eq(&self, other: &Self) -> bool {
        self.normalized == other.normalized
    }
}

impl Eq for TropPoint {}

impl<'de> Deserialize<'de> for TropPoint {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Raw {
            coords: RatVector,
        }
        let raw = Raw::deserialize(d)?;
        TropPoint::new(raw.coords).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn v(x: &[i64]) -> RatVector {
        RatVector::from_ints(x)
    }

    #[test]
    fn combine_examples() {
        let got = trop_combine(&[rat(0)], &[v(&[1, 2])], CombineMode::Affine).unwrap();
        assert_eq!(got, v(&[1, 2]));
        let got = trop_combine(&[rat(0), rat(0)], &[v(&[0, 0]), v(&[1, 2])], CombineMode::Affine).unwrap();
        assert_eq!(got, v(&[0, 0]));
        let got = trop_combine(&[rat(0), rat(-1)], &[v(&[0, 1, 2]), v(&[0, 0, 3])], CombineMode::Projective).unwrap();
        assert_eq!(got, v(&[-1, -1, 2]));
    }

    #[test]
    fn combine_errors() {
        assert_eq!(trop_combine(&[], &[], CombineMode::Affine), Err(Error::EmptyInput));
        assert!(matches!(
            trop_combine(&[rat(1)], &[v(&[0])], CombineMode::Affine),
            Err(Error::CoefficientNormalization { .. })
        ));
        assert!(matches!(
            trop_combine(&[rat(0), rat(0)], &[v(&[0]), v(&[0, 1])], CombineMode::Affine),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn sectors_in_the_plane() {
        let s0 = sector(0, 2).unwrap();
        assert_eq!(s0.vrep().unwrap().rays, vec![v(&[-1, 0]), v(&[0, -1])]);
        let s1 = sector(1, 2).unwrap();
        assert_eq!(s1.vrep().unwrap().rays, vec![v(&[0, -1]), v(&[1, 1])]);
        assert!(matches!(sector(3, 2), Err(Error::IndexOutOfRange { .. })));
        let all = crate::polyhedron::intersect(&[s0, s1, sector(2, 2).unwrap()]).unwrap();
        assert!(crate::polyhedron::poly_equal(&all, &Polyhedron::point(v(&[0, 0]))).unwrap());
    }

    #[test]
    fn sector_membership_matches_hrep() {
        for j in 0..=3 {
            let s = sector(j, 3).unwrap();
            for x in -2..=2 {
                for y in -2..=2 {
                    for z in -2..=2 {
                        let p = v(&[x, y, z]);
                        assert_eq!(in_sector(&p, j), s.contains(&p), "j={j} p={p}");
                    }
                }
            }
        }
    }

    #[test]
    fn covector_of_apex_ties_everywhere() {
        let c = covector(&v(&[3, 1]), &[v(&[3, 1])]).unwrap();
        assert!(c.entries.iter().all(|t| t.contains(&0)));
    }

    #[test]
    fn covector_tables() {
        let vs = [v(&[0, 0]), v(&[1, 2])];
        // x - v0 = (0,0): every sector; x - v1 = (-1,-2): only S_0.
        let c = covector(&v(&[0, 0]), &vs).unwrap();
        let expect: Vec<BTreeSet<usize>> = vec![[0, 1].into(), [0].into(), [0].into()];
        assert_eq!(c.entries, expect);
        // x - v0 = (2,2): S_1 and S_2 tie; x - v1 = (1,0): S_1 only.
        let c = covector(&v(&[2, 2]), &vs).unwrap();
        let expect: Vec<BTreeSet<usize>> = vec![[].into(), [0, 1].into(), [0].into()];
        assert_eq!(c.entries, expect);
        assert!(!c.is_covering());
    }

    #[test]
    fn farkas_membership() {
        let vs = [v(&[0, 0]), v(&[1, 2])];
        assert!(in_tconv_finite(&v(&[0, 0]), &vs).unwrap());
        assert!(in_tconv_finite(&v(&[1, 1]), &vs).unwrap());
        assert!(!in_tconv_finite(&v(&[2, 0]), &vs).unwrap());
    }

    #[test]
    fn segment_examples() {
        let s = trop_segment(&v(&[0, 0, 0]), &v(&[1, 2, 3])).unwrap();
        assert_eq!(s, vec![v(&[0, 0, 0]), v(&[1, 1, 1]), v(&[1, 2, 2]), v(&[1, 2, 3])]);
        let s = trop_segment(&v(&[0, 0, 0]), &v(&[4, 1, 7])).unwrap();
        assert_eq!(s, vec![v(&[0, 0, 0]), v(&[1, 1, 1]), v(&[4, 1, 4]), v(&[4, 1, 7])]);
        assert_eq!(trop_segment(&v(&[5, 5]), &v(&[5, 5])).unwrap(), vec![v(&[5, 5])]);
    }

    #[test]
    fn mixed_sign_segment_passes_through_min() {
        let s = trop_segment(&v(&[0, 0]), &v(&[1, -1])).unwrap();
        assert_eq!(s, vec![v(&[0, 0]), v(&[0, -1]), v(&[1, -1])]);
    }

    #[test]
    fn trop_point_normalizes() {
        let p: TropPoint = serde_json::from_str(r#"{"coords":[2,3,5]}"#).unwrap();
        assert_eq!(p.normalized(), &v(&[0, 1, 3]));
        assert_eq!(p, TropPoint::new(v(&[-1, 0, 2])).unwrap());
        assert_eq!(p.chart(), v(&[1, 3]));
    }
}
