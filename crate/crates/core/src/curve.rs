//! Fan tropical curves in `PT^n`.
//!
//! A ray is stored by its minimal nonnegative integer generator (entries `>= 0`, at
//! least one zero, gcd 1). Hulls are computed in the chart `R^n` obtained by
//! subtracting one coordinate (coordinate 0 unless asked otherwise) and deleting it.

use num_bigint::BigInt;
use num_integer::Integer;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hull::{dim_tconv_segment, tconv_complex, PolyhedralComplex};
use crate::polyhedron::Polyhedron;
use crate::rational::{primitive_integer, RatVector, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveRay {
    pub v: Vec<i64>,
    pub m: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FanCurve {
    ambient: usize,
    rays: Vec<CurveRay>,
}

/// Subtract the minimum entry and divide by the gcd.
pub fn minimal_generator(v: &[i64]) -> Result<Vec<i64>> {
    let min = *v.iter().min().ok_or(Error::EmptyInput)?;
    let shifted: Vec<i64> = v.iter().map(|x| x - min).collect();
    let g = shifted.iter().fold(0i64, |acc, x| acc.gcd(x));
    if g == 0 {
        return Err(Error::LinealityDirection(v.to_vec()));
    }
    Ok(shifted.into_iter().map(|x| x / g).collect())
}

impl FanCurve {
    /// Rays are replaced by their minimal generators. Balancing is not required
    /// here; operations that need it report `NotBalanced`.
    pub fn new(ambient: usize, rays: Vec<CurveRay>) -> Result<Self> {
        if rays.is_empty() {
            return Err(Error::EmptyInput);
        }
        let mut out = Vec::with_capacity(rays.len());
        for r in rays {
            crate::error::check_dim(ambient + 1, r.v.len())?;
            if r.m == 0 {
                return Err(Error::Parse("multiplicity must be positive".to_string()));
            }
            out.push(CurveRay {
                v: minimal_generator(&r.v)?,
                m: r.m,
            });
        }
        Ok(FanCurve { ambient, rays: out })
    }

    /// All multiplicities 1.
    pub fn from_generators(ambient: usize, gens: &[Vec<i64>]) -> Result<Self> {
        FanCurve::new(ambient, gens.iter().map(|v| CurveRay { v: v.clone(), m: 1 }).collect())
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn rays(&self) -> &[CurveRay] {
        &self.rays
    }

    /// `Σ m_i v_i`.
    pub fn weighted_sum(&self) -> Vec<i64> {
        let mut s = vec![0i64; self.ambient + 1];
        for r in &self.rays {
            for (si, vi) in s.iter_mut().zip(&r.v) {
                *si += r.m as i64 * vi;
            }
        }
        s
    }
}

impl<'de> Deserialize<'de> for FanCurve {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Raw {
            ambient: usize,
            rays: Vec<CurveRay>,
        }
        let raw = Raw::deserialize(d)?;
        FanCurve::new(raw.ambient, raw.rays).map_err(serde::de::Error::custom)
    }
}

/// The `d` with `Σ m_i v_i = d·1`.
pub fn degree(c: &FanCurve) -> Result<u64> {
    let s = c.weighted_sum();
    if s.iter().any(|x| *x != s[0]) {
        return Err(Error::NotBalanced(s));
    }
    Ok(s[0] as u64)
}

/// Image of a `PT^n` representative in the chart that zeroes coordinate `k`.
pub fn chart_point(v: &[i64], k: usize) -> RatVector {
    RatVector::new(
        v.iter()
            .enumerate()
            .filter(|&(i, _)| i != k)
            .map(|(_, x)| Rational::from_integer(BigInt::from(x - v[k])))
            .collect(),
    )
}

pub fn tconv_curve(c: &FanCurve) -> Result<PolyhedralComplex> {
    tconv_curve_in_chart(c, 0)
}

/// `tconv` of the fan whose cells are the rays of `c`, in the chart zeroing
/// coordinate `k`. The result is a fan.
pub fn tconv_curve_in_chart(c: &FanCurve, k: usize) -> Result<PolyhedralComplex> {
    degree(c)?;
    let n = c.ambient();
    if k > n {
        return Err(Error::IndexOutOfRange { index: k, max: n });
    }
    let cells = c
        .rays()
        .iter()
        .map(|r| Polyhedron::cone(n, vec![chart_point(&r.v, k)]))
        .collect::<Result<Vec<_>>>()?;
    tconv_complex(&PolyhedralComplex::new(n, cells)?)
}

pub fn dim_tconv_curve(c: &FanCurve) -> Result<usize> {
    let hull = tconv_curve(c)?;
    let d = hull.dim().max(0) as usize;
    debug_assert_eq!(d, diff_coord_dim(&hull));
    Ok(d)
}

/// Largest number of distinct nonzero coordinates at a relative-interior point of a
/// cell. For a tropically convex fan this is its dimension.
///
/// The point used is `Σ B^i g_i` over the integer generators `g_i` of the cell with
/// `B` larger than twice their largest entry, so two coordinates (or a coordinate
/// and 0) agree at the point only if they agree on every generator.
pub fn diff_coord_dim(c: &PolyhedralComplex) -> usize {
    let mut best = 0;
    for cell in c.cells() {
        let v = cell.vrep_or_compute();
        if v.is_empty() {
            continue;
        }
        let gens: Vec<Vec<BigInt>> = v
            .vertices
            .iter()
            .chain(&v.rays)
            .chain(&v.lineality)
            .filter(|g| !g.is_zero())
            .map(|g| primitive_integer(g.coords()))
            .collect();
        let max = gens
            .iter()
            .flatten()
            .map(|x| if x < &BigInt::from(0) { -x } else { x.clone() })
            .max()
            .unwrap_or_default();
        let base = max * 2 + 2;
        let mut point = vec![BigInt::from(0); c.ambient_dim()];
        let mut w = BigInt::from(1);
        for g in &gens {
            for (p, x) in point.iter_mut().zip(g) {
                *p += &w * x;
            }
            w *= &base;
        }
        let point = RatVector::new(point.into_iter().map(Rational::from_integer).collect());
        best = best.max(point.distinct_nonzero());
    }
    best
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DegreeReport {
    pub dim: usize,
    pub deg: u64,
    pub holds: bool,
    pub ray_max: usize,
    pub prop_applicable: bool,
}

/// `dim tconv Γ <= deg Γ`, together with the largest single-ray hull dimension.
pub fn check_degree_bound(c: &FanCurve) -> Result<DegreeReport> {
    let deg = degree(c)?;
    let dim = dim_tconv_curve(c)?;
    let ray_max = c
        .rays()
        .iter()
        .map(|r| {
            let v = chart_point(&r.v, 0);
            dim_tconv_segment(&RatVector::zeros(v.dim()), &v)
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .max()
        .unwrap_or(0);
    Ok(DegreeReport {
        dim,
        deg,
        holds: dim as u64 <= deg,
        ray_max,
        prop_applicable: dim == ray_max,
    })
}

/// A random balanced fan in `PT^n` with at most `max_rays` rays and generator
/// entries at most `max_entry`. All but the last ray are drawn at random; the last
/// one is `max(S)·1 - S` for the weighted sum `S`, divided by its gcd which becomes
/// its multiplicity. Draws whose closing ray is too large are rejected.
pub fn random_balanced_fan<R: Rng>(rng: &mut R, n: usize, max_rays: usize, max_entry: i64) -> FanCurve {
    assert!(n >= 1 && max_rays >= 2 && max_entry >= 1);
    loop {
        let k = rng.gen_range(2..=max_rays);
        let mut rays = Vec::with_capacity(k);
        while rays.len() < k - 1 {
            let v: Vec<i64> = (0..=n).map(|_| rng.gen_range(0..=max_entry)).collect();
            if let Ok(v) = minimal_generator(&v) {
                rays.push(CurveRay { v, m: rng.gen_range(1..=2) });
            }
        }
        let partial = FanCurve { ambient: n, rays: rays.clone() };
        let s = partial.weighted_sum();
        let top = *s.iter().max().expect("n >= 1");
        let w: Vec<i64> = s.iter().map(|x| top - x).collect();
        let g = w.iter().fold(0i64, |acc, x| acc.gcd(x));
        if g == 0 {
            if rays.len() >= 2 {
                return partial;
            }
            continue;
        }
        let v: Vec<i64> = w.iter().map(|x| x / g).collect();
        if v.iter().any(|x| *x > max_entry) {
            continue;
        }
        rays.push(CurveRay { v, m: g as u64 });
        return FanCurve::new(n, rays).expect("valid rays");
    }
}

/// The curve whose rays are the columns of a 0/1 matrix given by rows.
pub fn curve_from_columns(rows: &[&[i64]]) -> Result<FanCurve> {
    let n = rows.len().checked_sub(1).ok_or(Error::EmptyInput)?;
    let k = rows[0].len();
    let gens: Vec<Vec<i64>> = (0..k).map(|j| rows.iter().map(|r| r[j]).collect()).collect();
    FanCurve::from_generators(n, &gens)
}
