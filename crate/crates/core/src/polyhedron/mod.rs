//! Exact rational polyhedra in dual representation.
//!
//! A [`Polyhedron`] carries an H-representation (inequalities `a·x >= c` and
//! equations `a·x = c`), a V-representation (vertices, rays, lineality), or both.
//! Conversion goes through a homogenized cone in `Q^{n+1}` and the double
//! description method in [`dd`]. Results of every operation are canonical:
//! irredundant inequalities, vertices and rays reduced modulo the lineality space,
//! lineality and equations in reduced echelon form, everything sorted. Two
//! canonical polyhedra describe the same set iff their V-representations are equal.

mod dd;

use std::borrow::Cow;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{check_dim, Error, Result};
use crate::linalg::{self, int_rank, orthogonal_basis, project_out};
use crate::rational::{primitive_integer, RatVector, Rational};

use dd::IntVec;

/// The halfspace `{x : normal · x >= offset}` (or the hyperplane with `=` when used as an equation).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Halfspace {
    #[serde(rename = "a")]
    pub normal: RatVector,
    #[serde(rename = "c", with = "crate::rational::serde_rational")]
    pub offset: Rational,
}

impl Halfspace {
    pub fn new(normal: RatVector, offset: Rational) -> Self {
        Halfspace { normal, offset }
    }

    pub fn from_ints(normal: &[i64], offset: i64) -> Self {
        Halfspace::new(RatVector::from_ints(normal), crate::rational::rat(offset))
    }

    pub fn dim(&self) -> usize {
        self.normal.dim()
    }

    /// Slack `normal·x - offset`.
    pub fn eval(&self, x: &RatVector) -> Rational {
        self.normal.dot(x) - &self.offset
    }

    pub fn contains(&self, x: &RatVector) -> bool {
        !self.eval(x).is_negative()
    }

    fn homogenized(&self) -> IntVec {
        let mut v = Vec::with_capacity(self.dim() + 1);
        v.push(-self.offset.clone());
        v.extend(self.normal.iter().cloned());
        primitive_integer(&v)
    }

    fn from_homogeneous(h: &[BigInt]) -> Self {
        Halfspace {
            normal: RatVector::new(h[1..].iter().map(|c| Rational::from_integer(c.clone())).collect()),
            offset: Rational::from_integer(-h[0].clone()),
        }
    }
}

impl fmt::Display for Halfspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}·x >= {}", self.normal, self.offset)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct HRep {
    pub ineqs: Vec<Halfspace>,
    pub eqs: Vec<Halfspace>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VRep {
    pub vertices: Vec<RatVector>,
    pub rays: Vec<RatVector>,
    pub lineality: Vec<RatVector>,
}

impl VRep {
    /// A V-representation without vertices describes the empty set.
    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// A convex polyhedron in `Q^n`; see the module docs.
#[derive(Clone, Debug)]
pub struct Polyhedron {
    dim: usize,
    hrep: Option<HRep>,
    vrep: Option<VRep>,
}

impl Polyhedron {
    pub fn from_hrep(dim: usize, ineqs: Vec<Halfspace>, eqs: Vec<Halfspace>) -> Result<Self> {
        for h in ineqs.iter().chain(&eqs) {
            check_dim(dim, h.dim())?;
        }
        Ok(Polyhedron {
            dim,
            hrep: Some(HRep { ineqs, eqs }),
            vrep: None,
        })
    }

    pub fn from_vrep(
        dim: usize,
        vertices: Vec<RatVector>,
        rays: Vec<RatVector>,
        lineality: Vec<RatVector>,
    ) -> Result<Self> {
        for v in vertices.iter().chain(&rays).chain(&lineality) {
            check_dim(dim, v.dim())?;
        }
        Ok(Polyhedron {
            dim,
            hrep: None,
            vrep: Some(VRep {
                vertices,
                rays,
                lineality,
            }),
        })
    }

    /// Ordinary convex hull of finitely many points.
    pub fn from_points(points: &[RatVector]) -> Result<Self> {
        let first = points.first().ok_or(Error::EmptyInput)?;
        Polyhedron::from_vrep(first.dim(), points.to_vec(), vec![], vec![])
    }

    pub fn point(x: RatVector) -> Self {
        Polyhedron {
            dim: x.dim(),
            hrep: None,
            vrep: Some(VRep {
                vertices: vec![x],
                ..VRep::default()
            }),
        }
    }

    /// The cone positively spanned by `rays` with apex at the origin.
    pub fn cone(dim: usize, rays: Vec<RatVector>) -> Result<Self> {
        Polyhedron::from_vrep(dim, vec![RatVector::zeros(dim)], rays, vec![])
    }

    pub fn empty(dim: usize) -> Self {
        Polyhedron {
            dim,
            hrep: Some(HRep {
                ineqs: vec![Halfspace::new(RatVector::zeros(dim), Rational::one())],
                eqs: vec![],
            }),
            vrep: Some(VRep::default()),
        }
    }

    pub fn universe(dim: usize) -> Self {
        Polyhedron {
            dim,
            hrep: Some(HRep::default()),
            vrep: Some(VRep {
                vertices: vec![RatVector::zeros(dim)],
                rays: vec![],
                lineality: (0..dim).map(|i| RatVector::unit(dim, i)).collect(),
            }),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn hrep(&self) -> Option<&HRep> {
        self.hrep.as_ref()
    }

    pub fn vrep(&self) -> Option<&VRep> {
        self.vrep.as_ref()
    }

    pub fn has_both(&self) -> bool {
        self.hrep.is_some() && self.vrep.is_some()
    }

    /// The H-representation, converting if only generators are stored.
    pub fn hrep_or_compute(&self) -> Cow<'_, HRep> {
        match (&self.hrep, &self.vrep) {
            (Some(h), _) => Cow::Borrowed(h),
            (None, Some(v)) => Cow::Owned(hrep_from_vrep(self.dim, v)),
            (None, None) => unreachable!("polyhedron without representation"),
        }
    }

    /// The V-representation, converting if only inequalities are stored.
    pub fn vrep_or_compute(&self) -> Cow<'_, VRep> {
        match (&self.vrep, &self.hrep) {
            (Some(v), _) => Cow::Borrowed(v),
            (None, Some(h)) => Cow::Owned(vrep_from_hrep(self.dim, h)),
            (None, None) => unreachable!("polyhedron without representation"),
        }
    }

    pub fn vertices(&self) -> Vec<RatVector> {
        self.vrep_or_compute().vertices.clone()
    }

    pub fn is_empty(&self) -> bool {
        self.vrep_or_compute().is_empty()
    }

    pub fn is_bounded(&self) -> bool {
        let v = self.vrep_or_compute();
        v.rays.is_empty() && v.lineality.is_empty()
    }

    /// True when the polyhedron is invariant under positive scaling.
    pub fn is_cone(&self) -> bool {
        if self.is_empty() || !self.contains(&RatVector::zeros(self.dim)) {
            return false;
        }
        let h = self.hrep_or_compute();
        self.vrep_or_compute().vertices.iter().all(|v| {
            h.ineqs.iter().all(|c| !c.normal.dot(v).is_negative())
                && h.eqs.iter().all(|c| c.normal.dot(v).is_zero())
        })
    }

    pub fn contains(&self, x: &RatVector) -> bool {
        if x.dim() != self.dim {
            return false;
        }
        let h = self.hrep_or_compute();
        h.ineqs.iter().all(|c| c.contains(x)) && h.eqs.iter().all(|c| c.eval(x).is_zero())
    }

    /// Canonical form with both representations (see the module docs).
    pub fn canonical(&self) -> Polyhedron {
        let vrep = match &self.hrep {
            Some(h) => vrep_from_hrep(self.dim, h),
            None => {
                let h = hrep_from_vrep(self.dim, self.vrep.as_ref().expect("representation"));
                vrep_from_hrep(self.dim, &h)
            }
        };
        let hrep = hrep_from_vrep(self.dim, &vrep);
        Polyhedron {
            dim: self.dim,
            hrep: Some(hrep),
            vrep: Some(vrep),
        }
    }

    /// Translate by `t`.
    pub fn translate(&self, t: &RatVector) -> Result<Polyhedron> {
        check_dim(self.dim, t.dim())?;
        let hrep = self.hrep.as_ref().map(|h| HRep {
            ineqs: h.ineqs.iter().map(|c| Halfspace::new(c.normal.clone(), &c.offset + c.normal.dot(t))).collect(),
            eqs: h.eqs.iter().map(|c| Halfspace::new(c.normal.clone(), &c.offset + c.normal.dot(t))).collect(),
        });
        let vrep = self.vrep.as_ref().map(|v| VRep {
            vertices: v.vertices.iter().map(|x| x + t).collect(),
            rays: v.rays.clone(),
            lineality: v.lineality.clone(),
        });
        Ok(Polyhedron { dim: self.dim, hrep, vrep })
    }
}

/// Equality of point sets.
impl PartialEq for Polyhedron {
    fn eq(&self, other: &Self) -> bool {
        poly_equal(self, other).unwrap_or(false)
    }
}

// ---------------------------------------------------------------------------
// Conversion through the homogenized cone.

fn homogenize_point(v: &RatVector, t: i64) -> IntVec {
    let mut h = Vec::with_capacity(v.dim() + 1);
    h.push(Rational::from_integer(BigInt::from(t)));
    h.extend(v.iter().cloned());
    primitive_integer(&h)
}

fn int_to_ratvec(v: &[BigInt]) -> RatVector {
    RatVector::new(v.iter().map(|c| Rational::from_integer(c.clone())).collect())
}

fn int_rows_rref(rows: &[IntVec]) -> Vec<IntVec> {
    if rows.is_empty() {
        return Vec::new();
    }
    let (red, _) = linalg::rref(linalg::int_rows_to_rat(rows));
    red.iter().map(|r| primitive_integer(r)).collect()
}

fn reduce_modulo(v: &[Rational], orth: &[Vec<Rational>]) -> Vec<Rational> {
    if orth.is_empty() {
        v.to_vec()
    } else {
        project_out(v, orth)
    }
}

pub(crate) fn vrep_from_hrep(dim: usize, h: &HRep) -> VRep {
    let mut ineqs: Vec<IntVec> = Vec::with_capacity(h.ineqs.len() + 1);
    let mut t_nonneg = vec![BigInt::zero(); dim + 1];
    t_nonneg[0] = BigInt::one();
    ineqs.push(t_nonneg);
    ineqs.extend(h.ineqs.iter().map(Halfspace::homogenized));
    let eqs: Vec<IntVec> = h.eqs.iter().map(Halfspace::homogenized).collect();
    let cone = dd::generators(dim + 1, &ineqs, &eqs);

    if !cone.rays.iter().any(|r| r[0].is_positive()) {
        return VRep::default();
    }
    let lineality_int: Vec<IntVec> = int_rows_rref(&cone.lineality.iter().map(|l| l[1..].to_vec()).collect::<Vec<_>>());
    let lineality: Vec<RatVector> = lineality_int.iter().map(|l| int_to_ratvec(l)).collect();
    let orth = orthogonal_basis(&lineality.iter().map(|l| l.coords().to_vec()).collect::<Vec<_>>());

    let mut vertices = Vec::new();
    let mut rays = Vec::new();
    for r in &cone.rays {
        let t = Rational::from_integer(r[0].clone());
        let x: Vec<Rational> = r[1..].iter().map(|c| Rational::from_integer(c.clone())).collect();
        if r[0].is_positive() {
            let x: Vec<Rational> = x.iter().map(|c| c / &t).collect();
            vertices.push(RatVector::new(reduce_modulo(&x, &orth)));
        } else {
            rays.push(int_to_ratvec(&primitive_integer(&reduce_modulo(&x, &orth))));
        }
    }
    vertices.sort();
    vertices.dedup();
    rays.sort();
    rays.dedup();
    VRep {
        vertices,
        rays,
        lineality,
    }
}

pub(crate) fn hrep_from_vrep(dim: usize, v: &VRep) -> HRep {
    if v.vertices.is_empty() {
        return HRep {
            ineqs: vec![Halfspace::new(RatVector::zeros(dim), Rational::one())],
            eqs: vec![],
        };
    }
    let points: Vec<IntVec> = v.vertices.iter().map(|x| homogenize_point(x, 1)).collect();
    let mut gens = points.clone();
    gens.extend(v.rays.iter().map(|r| homogenize_point(r, 0)));
    let lin: Vec<IntVec> = v.lineality.iter().map(|l| homogenize_point(l, 0)).collect();
    let dual = dd::generators(dim + 1, &gens, &lin);

    let eqs_int = int_rows_rref(&dual.lineality);
    let orth = orthogonal_basis(&linalg::int_rows_to_rat(&eqs_int));
    let mut ineqs: Vec<Halfspace> = dual
        .rays
        .iter()
        .filter(|h| points.iter().any(|p| linalg::int_dot(h, p).is_zero()))
        .map(|h| {
            let hr: Vec<Rational> = h.iter().map(|c| Rational::from_integer(c.clone())).collect();
            Halfspace::from_homogeneous(&primitive_integer(&reduce_modulo(&hr, &orth)))
        })
        .collect();
    ineqs.sort();
    ineqs.dedup();
    HRep {
        ineqs,
        eqs: eqs_int.iter().map(|e| Halfspace::from_homogeneous(e)).collect(),
    }
}

// ---------------------------------------------------------------------------
// Operations.

/// Both representations populated and canonical. Empty input yields the empty value.
pub fn dd_convert(p: &Polyhedron) -> Polyhedron {
    p.canonical()
}

pub fn minkowski_sum(p: &Polyhedron, q: &Polyhedron) -> Result<Polyhedron> {
    check_dim(p.dim, q.dim)?;
    let (pv, qv) = (p.vrep_or_compute(), q.vrep_or_compute());
    if pv.is_empty() || qv.is_empty() {
        return Ok(Polyhedron::empty(p.dim));
    }
    let mut vertices = Vec::with_capacity(pv.vertices.len() * qv.vertices.len());
    for a in &pv.vertices {
        for b in &qv.vertices {
            vertices.push(a + b);
        }
    }
    let rays = pv.rays.iter().chain(&qv.rays).cloned().collect();
    let lineality = pv.lineality.iter().chain(&qv.lineality).cloned().collect();
    Ok(Polyhedron::from_vrep(p.dim, vertices, rays, lineality)?.canonical())
}

pub fn intersect(ps: &[Polyhedron]) -> Result<Polyhedron> {
    let first = ps.first().ok_or(Error::EmptyInput)?;
    let dim = first.dim;
    let mut all = HRep::default();
    for p in ps {
        check_dim(dim, p.dim)?;
        let h = p.hrep_or_compute();
        all.ineqs.extend(h.ineqs.iter().cloned());
        all.eqs.extend(h.eqs.iter().cloned());
    }
    Ok(Polyhedron::from_hrep(dim, all.ineqs, all.eqs)?.canonical())
}

/// Affine dimension; `-1` for the empty set.
pub fn dim(p: &Polyhedron) -> i64 {
    let v = p.vrep_or_compute();
    if v.is_empty() {
        return -1;
    }
    let mut gens: Vec<IntVec> = v.vertices.iter().map(|x| homogenize_point(x, 1)).collect();
    gens.extend(v.rays.iter().chain(&v.lineality).map(|r| homogenize_point(r, 0)));
    int_rank(&gens) as i64 - 1
}

/// Irredundant H-representation; implicit equalities become equations.
pub fn remove_redundancy(p: &Polyhedron) -> Polyhedron {
    p.canonical()
}

/// `inner ⊆ outer`, checked generator by generator against the H-representation of `outer`.
pub fn contains_polyhedron(outer: &Polyhedron, inner: &Polyhedron) -> Result<bool> {
    check_dim(outer.dim, inner.dim)?;
    let iv = inner.vrep_or_compute();
    if iv.is_empty() {
        return Ok(true);
    }
    if outer.is_empty() {
        return Ok(false);
    }
    let h = outer.hrep_or_compute();
    let points_ok = iv.vertices.iter().all(|x| {
        h.ineqs.iter().all(|c| c.contains(x)) && h.eqs.iter().all(|c| c.eval(x).is_zero())
    });
    let rays_ok = iv.rays.iter().all(|r| {
        h.ineqs.iter().all(|c| !c.normal.dot(r).is_negative())
            && h.eqs.iter().all(|c| c.normal.dot(r).is_zero())
    });
    let lin_ok = iv
        .lineality
        .iter()
        .all(|l| h.ineqs.iter().chain(&h.eqs).all(|c| c.normal.dot(l).is_zero()));
    Ok(points_ok && rays_ok && lin_ok)
}

/// Same point set, decided by mutual containment.
pub fn poly_equal(p: &Polyhedron, q: &Polyhedron) -> Result<bool> {
    Ok(contains_polyhedron(p, q)? && contains_polyhedron(q, p)?)
}

// ---------------------------------------------------------------------------
// JSON.

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PolyhedronJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    dim: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    ineqs: Option<Vec<Halfspace>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    eqs: Option<Vec<Halfspace>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    vertices: Option<Vec<RatVector>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    rays: Option<Vec<RatVector>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    lineality: Option<Vec<RatVector>>,
}

impl Serialize for Polyhedron {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let json = PolyhedronJson {
            dim: Some(self.dim),
            ineqs: self.hrep.as_ref().map(|h| h.ineqs.clone()),
            eqs: self.hrep.as_ref().map(|h| h.eqs.clone()),
            vertices: self.vrep.as_ref().map(|v| v.vertices.clone()),
            rays: self.vrep.as_ref().map(|v| v.rays.clone()),
            lineality: self.vrep.as_ref().map(|v| v.lineality.clone()),
        };
        json.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Polyhedron {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let json = PolyhedronJson::deserialize(d)?;
        Polyhedron::try_from(json).map_err(serde::de::Error::custom)
    }
}

impl TryFrom<PolyhedronJson> for Polyhedron {
    type Error = Error;

    fn try_from(j: PolyhedronJson) -> Result<Self> {
        let inferred = j
            .ineqs
            .iter()
            .chain(&j.eqs)
            .flatten()
            .map(Halfspace::dim)
            .chain(j.vertices.iter().chain(&j.rays).chain(&j.lineality).flatten().map(RatVector::dim))
            .next();
        let dim = j
            .dim
            .or(inferred)
            .ok_or_else(|| Error::Parse("cannot infer ambient dimension; add \"dim\"".into()))?;
        if dim == 0 {
            return Err(Error::Parse("ambient dimension must be positive".into()));
        }
        let has_h = j.ineqs.is_some() || j.eqs.is_some();
        let has_v = j.vertices.is_some() || j.rays.is_some() || j.lineality.is_some();
        if !has_h && !has_v {
            return Err(Error::Parse("polyhedron needs an H- or V-representation".into()));
        }
        if has_v && j.vertices.is_none() {
            return Err(Error::Parse("V-representation needs \"vertices\"".into()));
        }
        let hrep = if has_h {
            let h = HRep {
                ineqs: j.ineqs.unwrap_or_default(),
                eqs: j.eqs.unwrap_or_default(),
            };
            for c in h.ineqs.iter().chain(&h.eqs) {
                check_dim(dim, c.dim())?;
            }
            Some(h)
        } else {
            None
        };
        let vrep = if has_v {
            let v = VRep {
                vertices: j.vertices.unwrap_or_default(),
                rays: j.rays.unwrap_or_default(),
                lineality: j.lineality.unwrap_or_default(),
            };
            for x in v.vertices.iter().chain(&v.rays).chain(&v.lineality) {
                check_dim(dim, x.dim())?;
            }
            Some(v)
        } else {
            None
        };
        Ok(Polyhedron { dim, hrep, vrep })
    }
}
