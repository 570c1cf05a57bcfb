//! Tropical convex hulls of polyhedra, finite sets and polyhedral complexes.
//!
//! Everything rests on `tconv U = ⋂_j (U + S_j)`. For a single polyhedron this is
//! one intersection of `n + 1` Minkowski sums. For a union of cells
//! `P_1 ∪ … ∪ P_N` the intersection distributes over the unions, giving one cell
//! `(P_{i_0} + S_0) ∩ … ∩ (P_{i_n} + S_n)` per tuple in `[N]^{n+1}`.

use std::collections::{BTreeMap, HashSet};

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{check_dim, Error, Result};
use crate::polyhedron::{
    contains_polyhedron, dim, intersect, minkowski_sum, poly_equal, Halfspace, Polyhedron, VRep,
};
use crate::rational::{RatVector, Rational};
use crate::tropical::{sector, trop_segment};

/// A finite union of polyhedra (not necessarily meeting face to face).
#[derive(Clone, Debug)]
pub struct PolyhedralComplex {
    dim: usize,
    cells: Vec<Polyhedron>,
}

impl PolyhedralComplex {
    pub fn new(dim: usize, cells: Vec<Polyhedron>) -> Result<Self> {
        for c in &cells {
            check_dim(dim, c.ambient_dim())?;
        }
        Ok(PolyhedralComplex { dim, cells })
    }

    /// The 0-dimensional complex whose cells are the given points.
    pub fn from_points(points: &[RatVector]) -> Result<Self> {
        let first = points.first().ok_or(Error::EmptyInput)?;
        let cells = points.iter().map(|p| Polyhedron::point(p.clone())).collect();
        PolyhedralComplex::new(first.dim(), cells)
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn cells(&self) -> &[Polyhedron] {
        &self.cells
    }

    pub fn into_cells(self) -> Vec<Polyhedron> {
        self.cells
    }

    pub fn is_empty(&self) -> bool {
        self.cells.iter().all(Polyhedron::is_empty)
    }

    /// Maximum cell dimension, `-1` when empty.
    pub fn dim(&self) -> i64 {
        self.cells.iter().map(dim).max().unwrap_or(-1)
    }

    pub fn contains(&self, x: &RatVector) -> bool {
        self.cells.iter().any(|c| c.contains(x))
    }

    /// True when every cell is a cone with apex at the origin.
    pub fn is_fan(&self) -> bool {
        self.cells.iter().all(Polyhedron::is_cone)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ComplexJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    dim: Option<usize>,
    cells: Vec<Polyhedron>,
}

impl Serialize for PolyhedralComplex {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ComplexJson {
            dim: Some(self.dim),
            cells: self.cells.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for PolyhedralComplex {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = ComplexJson::deserialize(d)?;
        let dim = j
            .dim
            .or_else(|| j.cells.first().map(Polyhedron::ambient_dim))
            .ok_or_else(|| serde::de::Error::custom("empty complex needs \"dim\""))?;
        PolyhedralComplex::new(dim, j.cells).map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct HullOptions {
    /// Split overlapping output cells along each other's facet hyperplanes.
    pub refine: bool,
}

/// `tconv P` for a polyhedron `P`; the result is again a polyhedron.
pub fn tconv_polyhedron(p: &Polyhedron) -> Result<Polyhedron> {
    let n = p.ambient_dim();
    if p.is_empty() {
        return Ok(Polyhedron::empty(n));
    }
    let sums = (0..=n)
        .map(|j| minkowski_sum(p, &sector(j, n)?))
        .collect::<Result<Vec<_>>>()?;
    intersect(&sums)
}

pub fn tconv_complex(c: &PolyhedralComplex) -> Result<PolyhedralComplex> {
    tconv_complex_with(c, &HullOptions::default())
}

/// Tuple enumeration over `[N]^{n+1}` with three prunings that do not change the
/// union: per-sector dominance (a summand contained in another summand for the
/// same sector only yields contained cells), deduplication of partial
/// intersections, and dropping empty partial intersections. Output cells are
/// canonical, sorted, and no cell is contained in another.
pub fn tconv_complex_with(c: &PolyhedralComplex, opts: &HullOptions) -> Result<PolyhedralComplex> {
    let n = c.ambient_dim();
    let cells: Vec<Polyhedron> = c.cells().iter().filter(|p| !p.is_empty()).cloned().collect();
    if cells.is_empty() {
        return PolyhedralComplex::new(n, vec![]);
    }

    let mut summands: Vec<Vec<Polyhedron>> = Vec::with_capacity(n + 1);
    for j in 0..=n {
        let s = sector(j, n)?;
        let sums = cells.iter().map(|p| minkowski_sum(p, &s)).collect::<Result<Vec<_>>>()?;
        summands.push(maximal_only(sums)?);
    }

    let mut found: BTreeMap<VRep, Polyhedron> = BTreeMap::new();
    let mut seen: Vec<HashSet<VRep>> = vec![HashSet::new(); n + 1];
    let mut stack: Vec<(usize, Polyhedron)> = Vec::new();
    for p in &summands[0] {
        if seen[0].insert(key(p)) {
            stack.push((0, p.clone()));
        }
    }
    while let Some((level, partial)) = stack.pop() {
        if level == n {
            found.entry(key(&partial)).or_insert(partial);
            continue;
        }
        for s in &summands[level + 1] {
            let next = intersect(&[partial.clone(), s.clone()])?;
            if next.is_empty() {
                continue;
            }
            if seen[level + 1].insert(key(&next)) {
                stack.push((level + 1, next));
            }
        }
    }

    let mut out = drop_contained(found.into_values().collect())?;
    if opts.refine {
        out = refine_cells(&out)?;
    }
    PolyhedralComplex::new(n, out)
}

fn key(p: &Polyhedron) -> VRep {
    p.vrep().cloned().unwrap_or_else(|| p.canonical().vrep().cloned().expect("canonical"))
}

/// Keeps one representative of each containment-maximal polyhedron.
fn maximal_only(ps: Vec<Polyhedron>) -> Result<Vec<Polyhedron>> {
    let mut keep = Vec::new();
    'outer: for (i, p) in ps.iter().enumerate() {
        for (k, q) in ps.iter().enumerate() {
            if i == k || !contains_polyhedron(q, p)? {
                continue;
            }
            // q ⊇ p: drop p unless they are equal and p comes first
            if !contains_polyhedron(p, q)? || k < i {
                continue 'outer;
            }
        }
        keep.push(p.clone());
    }
    Ok(keep)
}

/// Removes cells contained in another cell. Input cells must be pairwise distinct.
fn drop_contained(cells: Vec<Polyhedron>) -> Result<Vec<Polyhedron>> {
    let mut keep = Vec::with_capacity(cells.len());
    'outer: for (i, p) in cells.iter().enumerate() {
        for (k, q) in cells.iter().enumerate() {
            if i != k && dim(q) >= dim(p) && contains_polyhedron(q, p)? {
                continue 'outer;
            }
        }
        keep.push(p.clone());
    }
    Ok(keep)
}

/// Common refinement: every cell is cut by the facet hyperplanes of all cells and
/// the pieces of full relative dimension are kept, deduplicated.
pub fn refine(c: &PolyhedralComplex) -> Result<PolyhedralComplex> {
    PolyhedralComplex::new(c.ambient_dim(), refine_cells(c.cells())?)
}

fn refine_cells(cells: &[Polyhedron]) -> Result<Vec<Polyhedron>> {
    let mut planes: Vec<Halfspace> = Vec::new();
    for c in cells {
        let h = c.hrep_or_compute();
        planes.extend(h.ineqs.iter().cloned());
    }
    planes.sort();
    planes.dedup();

    let mut pieces: BTreeMap<VRep, Polyhedron> = BTreeMap::new();
    for c in cells {
        let d = dim(c);
        let mut current = vec![c.canonical()];
        for h in &planes {
            let opposite = Halfspace::new(-&h.normal, -h.offset.clone());
            let mut next = Vec::new();
            for piece in current {
                for side in [h, &opposite] {
                    let hs = Polyhedron::from_hrep(c.ambient_dim(), vec![side.clone()], vec![])?;
                    let cut = intersect(&[piece.clone(), hs])?;
                    if dim(&cut) == d {
                        next.push(cut);
                    }
                }
            }
            current = next;
        }
        for p in current {
            pieces.entry(key(&p)).or_insert(p);
        }
    }
    Ok(pieces.into_values().collect())
}

/// `tconv V` for a finite point set, as a union of convex cells.
pub fn tconv_finite(points: &[RatVector]) -> Result<PolyhedralComplex> {
    tconv_complex(&PolyhedralComplex::from_points(points)?)
}

/// Ordinary convex hull of the union of the cells.
pub fn conv_of_complex(c: &PolyhedralComplex) -> Result<Polyhedron> {
    let mut vertices = Vec::new();
    let mut rays = Vec::new();
    let mut lineality = Vec::new();
    for cell in c.cells() {
        let v = cell.vrep_or_compute();
        if v.is_empty() {
            continue;
        }
        vertices.extend(v.vertices.iter().cloned());
        rays.extend(v.rays.iter().cloned());
        lineality.extend(v.lineality.iter().cloned());
    }
    if vertices.is_empty() {
        return Ok(Polyhedron::empty(c.ambient_dim()));
    }
    Ok(Polyhedron::from_vrep(c.ambient_dim(), vertices, rays, lineality)?.canonical())
}

/// Affine functional `g·x + h` on `R^n`.
#[derive(Clone)]
struct Affine {
    g: Vec<Rational>,
    h: Rational,
}

impl Affine {
    fn zero(n: usize) -> Self {
        Affine {
            g: vec![Rational::zero(); n],
            h: Rational::zero(),
        }
    }

    fn axpy(&mut self, coef: &Rational, other: &Affine) {
        for (a, b) in self.g.iter_mut().zip(&other.g) {
            *a += coef * b;
        }
        self.h += coef * &other.h;
    }

    fn sub(&self, other: &Affine) -> Affine {
        let mut out = self.clone();
        out.axpy(&Rational::from_integer(BigInt::from(-1)), other);
        out
    }

    /// `self >= 0` as a halfspace.
    fn nonneg(self) -> Halfspace {
        Halfspace::new(RatVector::new(self.g), -self.h)
    }
}

/// `conv tconv(a, b)` from the closed-form simplex description.
///
/// In homogeneous coordinates `X = (0, x - a)` the difference `D = (0, b - a)`
/// takes distinct values `w_0 < … < w_r`. Taking the coordinate holding `w_0` as
/// base and one representative coordinate per remaining value gives reduced
/// coordinates `z_1, …, z_r` in which `b` becomes `0 < b'_1 < … < b'_r`. There the
/// hull is the simplex
///
/// ```text
/// b'_1 - z_1 >= 0
/// -(b'_{j+1} - b'_j) z_{j-1} + (b'_{j+1} - b'_{j-1}) z_j - (b'_j - b'_{j-1}) z_{j+1} >= 0,  j = 1..r-1
/// -z_{r-1} + z_r >= 0
/// ```
///
/// with `z_0 = b'_0 = 0`. Coordinates sharing a value are tied by equations.
/// For `a = b` the result is the point.
pub fn segment_hull_simplex(a: &RatVector, b: &RatVector) -> Result<Polyhedron> {
    check_dim(a.dim(), b.dim())?;
    let n = a.dim();
    if a == b {
        return Ok(Polyhedron::point(a.clone()));
    }
    // homogeneous coordinate functionals X_0 = 0, X_i = x_i - a_i
    let coord: Vec<Affine> = (0..=n)
        .map(|i| {
            let mut f = Affine::zero(n);
            if i > 0 {
                f.g[i - 1] = Rational::from_integer(BigInt::from(1));
                f.h = -a[i - 1].clone();
            }
            f
        })
        .collect();
    let diff: Vec<Rational> = std::iter::once(Rational::zero()).chain((b - a).into_inner()).collect();
    let mut levels: Vec<Rational> = diff.clone();
    levels.sort();
    levels.dedup();
    let rep = |w: &Rational| diff.iter().position(|d| d == w).expect("level value occurs");
    let base = rep(&levels[0]);

    let mut eqs = Vec::new();
    for (i, d) in diff.iter().enumerate() {
        let r = rep(d);
        if i != r {
            eqs.push(coord[i].sub(&coord[r]).nonneg());
        }
    }

    let r = levels.len() - 1;
    let bp: Vec<Rational> = levels.iter().map(|w| w - &levels[0]).collect(); // bp[0] = 0
    let z: Vec<Affine> = levels
        .iter()
        .enumerate()
        .map(|(l, w)| if l == 0 { Affine::zero(n) } else { coord[rep(w)].sub(&coord[base]) })
        .collect();

    let mut ineqs = Vec::with_capacity(r + 1);
    let mut first = Affine::zero(n);
    first.h = bp[1].clone();
    first.axpy(&Rational::from_integer(BigInt::from(-1)), &z[1]);
    ineqs.push(first.nonneg());
    for j in 1..r {
        let mut f = Affine::zero(n);
        f.axpy(&-(&bp[j + 1] - &bp[j]), &z[j - 1]);
        f.axpy(&(&bp[j + 1] - &bp[j - 1]), &z[j]);
        f.axpy(&-(&bp[j] - &bp[j - 1]), &z[j + 1]);
        ineqs.push(f.nonneg());
    }
    let mut last = z[r].clone();
    last.axpy(&Rational::from_integer(BigInt::from(-1)), &z[r - 1]);
    ineqs.push(last.nonneg());

    Polyhedron::from_hrep(n, ineqs, eqs)
}

/// Dimension of `tconv conv(a, b)`: the number of distinct nonzero coordinates of `a - b`.
pub fn dim_tconv_segment(a: &RatVector, b: &RatVector) -> Result<usize> {
    check_dim(a.dim(), b.dim())?;
    Ok((a - b).distinct_nonzero())
}

/// `tconv pos(v) = pos tconv(0, v)`: the cone over the pseudovertices of `tconv(0, v)`.
pub fn tconv_ray(v: &RatVector) -> Result<Polyhedron> {
    if v.is_zero() {
        return Err(Error::ZeroVector);
    }
    let origin = RatVector::zeros(v.dim());
    let rays: Vec<RatVector> = trop_segment(&origin, v)?.into_iter().filter(|p| !p.is_zero()).collect();
    Ok(Polyhedron::cone(v.dim(), rays)?.canonical())
}

/// Same cells up to order, compared as point sets.
pub fn cells_equal_as_sets(a: &[Polyhedron], b: &[Polyhedron]) -> Result<bool> {
    if a.len() != b.len() {
        return Ok(false);
    }
    for p in a {
        let mut hit = false;
        for q in b {
            if poly_equal(p, q)? {
                hit = true;
                break;
            }
        }
        if !hit {
            return Ok(false);
        }
    }
    Ok(true)
}
