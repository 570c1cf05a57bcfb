//! Tropical convexity of halfspaces, linear spaces and polyhedra.
//!
//! Min-plus combinations commute with translation, so an affine halfspace
//! `{a·x >= c}` is tropically convex exactly when `{a·x >= 0}` is; only the normal
//! is inspected.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hull::tconv_polyhedron;
use crate::linalg::{nullspace, rref};
use crate::polyhedron::{dim, poly_equal, Halfspace, Polyhedron};
use crate::rational::{primitive_integer, RatVector, Rational};
use crate::tropical::{sector_generators, trop_segment};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SectorSum {
    Unchanged,
    AllOfSpace,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum HalfspaceCase {
    #[serde(rename = "I")]
    CaseI,
    #[serde(rename = "II")]
    CaseII,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfspaceVerdict {
    pub convex: bool,
    pub witness_sector: Option<usize>,
    pub case: Option<HalfspaceCase>,
}

/// `{a·x >= 0} + S_j`: either the halfspace itself or all of space.
pub fn halfspace_plus_sector(a: &RatVector, j: usize) -> Result<SectorSum> {
    if a.is_zero() {
        return Err(Error::ZeroNormal);
    }
    let gens = sector_generators(j, a.dim())?;
    Ok(if gens.iter().all(|g| !a.dot(g).is_negative()) {
        SectorSum::Unchanged
    } else {
        SectorSum::AllOfSpace
    })
}

/// Generator check over all sectors; this is the authoritative verdict.
pub fn classify_halfspace(a: &RatVector, _c: &Rational) -> Result<HalfspaceVerdict> {
    if a.is_zero() {
        return Err(Error::ZeroNormal);
    }
    for j in 0..=a.dim() {
        if halfspace_plus_sector(a, j)? == SectorSum::Unchanged {
            let case = if j == 0 { HalfspaceCase::CaseI } else { HalfspaceCase::CaseII };
            return Ok(HalfspaceVerdict {
                convex: true,
                witness_sector: Some(j),
                case: Some(case),
            });
        }
    }
    Ok(HalfspaceVerdict {
        convex: false,
        witness_sector: None,
        case: None,
    })
}

/// The same verdict from sign conditions alone: case I when no entry is positive,
/// case II when exactly one entry `a_j` is positive and `Σ_k a_k >= 0`.
pub fn classify_halfspace_closed_form(a: &RatVector) -> Result<HalfspaceVerdict> {
    if a.is_zero() {
        return Err(Error::ZeroNormal);
    }
    let positive: Vec<usize> = (0..a.dim()).filter(|&i| a[i].is_positive()).collect();
    let total: Rational = a.iter().sum();
    let (convex, witness_sector, case) = match positive.as_slice() {
        [] => (true, Some(0), Some(HalfspaceCase::CaseI)),
        [j] if !total.is_negative() => (true, Some(j + 1), Some(HalfspaceCase::CaseII)),
        _ => (false, None, None),
    };
    Ok(HalfspaceVerdict {
        convex,
        witness_sector,
        case,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinearSpaceVerdict {
    /// Equations `x_i - x_j = 0` and `x_k = 0` cutting out exactly the space.
    Yes { certificate: Vec<Halfspace> },
    /// A point of the space with more distinct nonzero coordinates than its dimension.
    No { witness: RatVector },
}

impl LinearSpaceVerdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, LinearSpaceVerdict::Yes { .. })
    }
}

/// Partition of `[n]_0` (coordinate 0 standing for the constant 0) into classes of
/// coordinates that agree on every basis vector. Classes are sorted and the class
/// of 0 comes first.
fn coordinate_classes(basis: &[Vec<Rational>], n: usize) -> Vec<Vec<usize>> {
    let value = |v: &Vec<Rational>, i: usize| if i == 0 { Rational::zero() } else { v[i - 1].clone() };
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for i in 0..=n {
        match classes
            .iter_mut()
            .find(|c| basis.iter().all(|v| value(v, c[0]) == value(v, i)))
        {
            Some(c) => c.push(i),
            None => classes.push(vec![i]),
        }
    }
    classes
}

fn linear_basis(l: &Polyhedron) -> Result<(Vec<Vec<Rational>>, usize)> {
    let n = l.ambient_dim();
    let h = l.hrep_or_compute();
    if !h.ineqs.is_empty() || h.eqs.iter().any(|e| !e.offset.is_zero()) {
        let c = l.canonical();
        let ch = c.hrep().expect("canonical");
        if !ch.ineqs.is_empty() || ch.eqs.iter().any(|e| !e.offset.is_zero()) || c.is_empty() {
            return Err(Error::NotLinear(
                "expected homogeneous equations only".to_string(),
            ));
        }
        return linear_basis(&c);
    }
    let rows: Vec<Vec<Rational>> = h.eqs.iter().map(|e| e.normal.coords().to_vec()).collect();
    Ok((nullspace(&rows, n), n))
}

pub fn is_tconvex_linear_space(l: &Polyhedron) -> Result<LinearSpaceVerdict> {
    let (basis, n) = linear_basis(l)?;
    let classes = coordinate_classes(&basis, n);
    if classes.len() - 1 == basis.len() {
        let mut certificate = Vec::new();
        for class in &classes {
            for &i in &class[1..] {
                let mut normal = vec![Rational::zero(); n];
                normal[i - 1] = Rational::from_integer(BigInt::from(1));
                if class[0] > 0 {
                    normal[class[0] - 1] = Rational::from_integer(BigInt::from(-1));
                }
                certificate.push(Halfspace::new(RatVector::new(normal), Rational::zero()));
            }
        }
        return Ok(LinearSpaceVerdict::Yes { certificate });
    }
    Ok(LinearSpaceVerdict::No {
        witness: generic_point(&basis, n, classes.len() - 1),
    })
}

/// A primitive integer point `Σ B^i b_i` of the span realizing `target` distinct nonzero coordinates.
fn generic_point(basis: &[Vec<Rational>], n: usize, target: usize) -> RatVector {
    let mut base = BigInt::from(2);
    loop {
        let mut x = vec![Rational::zero(); n];
        let mut w = Rational::from_integer(BigInt::from(1));
        for b in basis {
            for (xi, bi) in x.iter_mut().zip(b) {
                *xi += &w * bi;
            }
            w *= Rational::from_integer(base.clone());
        }
        let x = RatVector::new(x);
        if x.distinct_nonzero() >= target {
            return RatVector::new(
                primitive_integer(x.coords()).into_iter().map(Rational::from_integer).collect(),
            );
        }
        base += 1;
    }
}

#[derive(Clone, Debug)]
pub enum ConvexityVerdict {
    Yes,
    /// `x, y` in the polyhedron with a pseudovertex of `tconv(x, y)` outside it.
    NoPair {
        x: RatVector,
        y: RatVector,
        pseudovertex: RatVector,
    },
    /// No pair found within the search budget; the tropical hull differs from the input.
    NoHull { hull: Polyhedron },
}

impl ConvexityVerdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, ConvexityVerdict::Yes)
    }
}

/// Number of point pairs tried before falling back to the hull certificate.
const PAIR_BUDGET: usize = 2000;

pub fn is_tconvex_polyhedron(p: &Polyhedron) -> Result<ConvexityVerdict> {
    if p.is_empty() {
        return Ok(ConvexityVerdict::Yes);
    }
    let p = p.canonical();
    if halfspaces_decide(&p)? {
        return Ok(ConvexityVerdict::Yes);
    }
    if let Some((x, y, pv)) = search_pair(&p) {
        return Ok(ConvexityVerdict::NoPair { x, y, pseudovertex: pv });
    }
    let hull = tconv_polyhedron(&p)?;
    debug_assert!(!poly_equal(&hull, &p)?);
    Ok(ConvexityVerdict::NoHull { hull })
}

/// Halfspace criterion. Lower-dimensional polyhedra are moved to the origin, the
/// spanning linear space is tested, and the halfspaces are classified after the
/// coordinate-deleting projection onto that space.
fn halfspaces_decide(p: &Polyhedron) -> Result<bool> {
    let n = p.ambient_dim();
    let h = p.hrep().expect("canonical");
    if h.eqs.is_empty() {
        for c in &h.ineqs {
            if !classify_halfspace(&c.normal, &c.offset)?.convex {
                return Ok(false);
            }
        }
        return Ok(true);
    }
    let eq_rows: Vec<Vec<Rational>> = h.eqs.iter().map(|e| e.normal.coords().to_vec()).collect();
    let basis = nullspace(&eq_rows, n);
    let classes = coordinate_classes(&basis, n);
    if classes.len() - 1 != basis.len() {
        return Ok(false);
    }
    // Coordinates on the space: one representative per class not tied to 0.
    let reps: Vec<usize> = classes.iter().filter(|c| c[0] != 0).map(|c| c[0] - 1).collect();
    let d = reps.len();
    let origin = p.vertices()[0].clone();
    let project = |v: &RatVector| RatVector::new(reps.iter().map(|&i| v[i].clone()).collect());
    let vrep = p.vrep().expect("canonical");
    if d == 0 {
        return Ok(true);
    }
    let image = Polyhedron::from_vrep(
        d,
        vrep.vertices.iter().map(|v| project(&(v - &origin))).collect(),
        vrep.rays.iter().map(project).collect(),
        vrep.lineality.iter().map(project).collect(),
    )?
    .canonical();
    debug_assert_eq!(dim(&image) as usize, d);
    for c in &image.hrep().expect("canonical").ineqs {
        if !classify_halfspace(&c.normal, &c.offset)?.convex {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Candidate points: vertices, vertices moved along rays and lineality at two
/// scales, and midpoints of vertex pairs.
fn search_pair(p: &Polyhedron) -> Option<(RatVector, RatVector, RatVector)> {
    let v = p.vrep().expect("canonical");
    let mut pts: Vec<RatVector> = v.vertices.clone();
    let scales = [Rational::from_integer(BigInt::from(1)), Rational::from_integer(BigInt::from(16))];
    for x in &v.vertices {
        for r in &v.rays {
            for s in &scales {
                pts.push(x + &r.scale(s));
            }
        }
        for l in &v.lineality {
            for s in &scales {
                pts.push(x + &l.scale(s));
                pts.push(x - &l.scale(s));
            }
        }
    }
    let half = Rational::new(BigInt::from(1), BigInt::from(2));
    for (i, a) in v.vertices.iter().enumerate() {
        for b in &v.vertices[i + 1..] {
            pts.push((a + b).scale(&half));
        }
    }
    let mut tried = 0;
    for (i, x) in pts.iter().enumerate() {
        for y in &pts[i + 1..] {
            tried += 1;
            if tried > PAIR_BUDGET {
                return None;
            }
            let segment = trop_segment(x, y).ok()?;
            if let Some(pv) = segment.into_iter().find(|q| !p.contains(q)) {
                return Some((x.clone(), y.clone(), pv));
            }
        }
    }
    None
}

/// Reduced row echelon form of the equations of a linear space; handy for comparing
/// certificates.
pub fn equations_rref(eqs: &[Halfspace]) -> Vec<Vec<Rational>> {
    if eqs.is_empty() {
        return Vec::new();
    }
    rref(eqs.iter().map(|e| e.normal.coords().to_vec()).collect()).0
}
