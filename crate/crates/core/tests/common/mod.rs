//! Independent oracles and random generators shared by the integration tests.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use tropconv::matrix::TropMatrix;
use tropconv::{Halfspace, Polyhedron, RatVector, Rational};

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn v(x: &[i64]) -> RatVector {
    RatVector::from_ints(x)
}

/// Small rationals with denominators 1, 2 or 3.
pub fn random_rational<R: Rng>(rng: &mut R, bound: i64) -> Rational {
    let q: i64 = rng.gen_range(1..=3);
    Rational::new(BigInt::from(rng.gen_range(-bound * q..=bound * q)), BigInt::from(q))
}

pub fn random_point<R: Rng>(rng: &mut R, n: usize, bound: i64) -> RatVector {
    RatVector::new((0..n).map(|_| random_rational(rng, bound)).collect())
}

pub fn random_int_point<R: Rng>(rng: &mut R, n: usize, bound: i64) -> RatVector {
    RatVector::new((0..n).map(|_| rat(rng.gen_range(-bound..=bound))).collect())
}

/// Random point pair where coordinates of `b - a` often tie or vanish.
pub fn random_pair<R: Rng>(rng: &mut R, n: usize) -> (RatVector, RatVector) {
    let a = random_point(rng, n, 4);
    let palette: Vec<Rational> = (0..3).map(|_| random_rational(rng, 3)).collect();
    let d: Vec<Rational> = (0..n)
        .map(|_| match rng.gen_range(0..4) {
            0 => Rational::zero(),
            1 => palette[rng.gen_range(0..3)].clone(),
            _ => random_rational(rng, 4),
        })
        .collect();
    let b = &a + &RatVector::new(d);
    (a, b)
}

/// Solves a square system exactly; `None` when singular.
pub fn solve(mut m: Vec<Vec<Rational>>, mut rhs: Vec<Rational>) -> Option<Vec<Rational>> {
    let n = m.len();
    for c in 0..n {
        let p = (c..n).find(|&r| !m[r][c].is_zero())?;
        m.swap(c, p);
        rhs.swap(c, p);
        for r in 0..n {
            if r != c && !m[r][c].is_zero() {
                let f = &m[r][c] / &m[c][c];
                let pivot = m[c].clone();
                for (x, p) in m[r][c..].iter_mut().zip(&pivot[c..]) {
                    *x -= &f * p;
                }
                let t = &f * &rhs[c];
                rhs[r] -= t;
            }
        }
    }
    Some((0..n).map(|i| &rhs[i] / &m[i][i]).collect())
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut with_last = subsets(n - 1, k - 1);
    for s in &mut with_last {
        s.push(n - 1);
    }
    let mut out = subsets(n - 1, k);
    out.extend(with_last);
    out
}

/// Vertices of `{x : a·x >= c}` by solving every `n`-subset of constraints at
/// equality and keeping the feasible solutions. Sorted, deduplicated.
pub fn brute_force_vertices(n: usize, ineqs: &[Halfspace]) -> Vec<RatVector> {
    let mut out = Vec::new();
    for s in subsets(ineqs.len(), n) {
        let m = s.iter().map(|&i| ineqs[i].normal.coords().to_vec()).collect();
        let rhs = s.iter().map(|&i| ineqs[i].offset.clone()).collect();
        if let Some(x) = solve(m, rhs) {
            let x = RatVector::new(x);
            if ineqs.iter().all(|h| h.contains(&x)) {
                out.push(x);
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Minimum over all permutations and the number of permutations attaining it.
pub fn brute_force_det(m: &TropMatrix) -> (Rational, usize, Vec<Vec<usize>>) {
    let n = m.rows();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Rational> = None;
    let mut argmins: Vec<Vec<usize>> = Vec::new();
    loop {
        let val: Rational = perm.iter().enumerate().map(|(i, &j)| m.get(i, j).clone()).sum();
        match &best {
            Some(b) if &val > b => {}
            Some(b) if &val == b => argmins.push(perm.clone()),
            _ => {
                best = Some(val);
                argmins = vec![perm.clone()];
            }
        }
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| perm[i] < perm[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).unwrap();
        perm.swap(i, j);
        perm[i + 1..].reverse();
    }
    let count = argmins.len();
    (best.unwrap(), count, argmins)
}

/// Pseudovertices of `tconv(a, b)` from the two one-parameter families
/// `min(λ + a, b)` and `min(a, μ + b)`, evaluated at every breakpoint of either.
/// Returned in the order met when walking from `a` to `b`.
pub fn segment_oracle(a: &RatVector, b: &RatVector) -> Vec<RatVector> {
    let n = a.dim();
    let min_pt = |x: &RatVector, y: &RatVector| {
        RatVector::new((0..n).map(|k| x[k].clone().min(y[k].clone())).collect())
    };
    let shift = |x: &RatVector, t: &Rational| x.shift(t);
    let mut params: Vec<(Rational, RatVector)> = Vec::new();
    // walk parameter s: s <= 0 uses min(a, -s + b), s >= 0 uses min(s + a, b)
    let mut breaks: Vec<Rational> = vec![Rational::zero()];
    for k in 0..n {
        let d = &b[k] - &a[k];
        breaks.push(d.clone());
        breaks.push(-d);
    }
    for t in breaks {
        if t.is_negative() {
            // μ = -t > 0 on the a side
            let p = min_pt(a, &shift(b, &-t.clone()));
            params.push((t, p));
        } else {
            let p = min_pt(&shift(a, &t), b);
            params.push((t, p));
        }
    }
    params.sort_by(|x, y| x.0.cmp(&y.0));
    let mut pts: Vec<RatVector> = vec![a.clone()];
    for (_, p) in params {
        if pts.last() != Some(&p) {
            pts.push(p);
        }
    }
    if pts.last() != Some(b) {
        pts.push(b.clone());
    }
    // drop points that are not breakpoints (collinear with their neighbours)
    let mut out: Vec<RatVector> = Vec::new();
    for p in pts {
        while out.len() >= 2 {
            let q = &out[out.len() - 1];
            let r = &out[out.len() - 2];
            if collinear(r, q, &p) {
                out.pop();
            } else {
                break;
            }
        }
        out.push(p);
    }
    out
}

fn collinear(a: &RatVector, b: &RatVector, c: &RatVector) -> bool {
    let u = b - a;
    let w = c - b;
    // w = t u with t > 0
    let Some(i) = (0..u.dim()).find(|&i| !u[i].is_zero()) else {
        return true;
    };
    let t = &w[i] / &u[i];
    t.is_positive() && (0..u.dim()).all(|k| w[k] == &t * &u[k])
}

/// Box `[lo, hi]^n` as an H-representation.
pub fn box_ineqs(n: usize, lo: i64, hi: i64) -> Vec<Halfspace> {
    let mut out = Vec::new();
    for i in 0..n {
        let mut e = vec![0i64; n];
        e[i] = 1;
        out.push(Halfspace::from_ints(&e, lo));
        e[i] = -1;
        out.push(Halfspace::from_ints(&e, -hi));
    }
    out
}

/// Random full-dimensional polyhedron in `R^n` drawn from a mix of families:
/// hulls of random points, their tropical hulls, intersections of random
/// halfspaces with a box, and unbounded intersections of random halfspaces.
pub fn random_full_dim_polyhedron<R: Rng>(rng: &mut R, n: usize) -> Polyhedron {
    loop {
        let p = match rng.gen_range(0..4) {
            0 => {
                let k = rng.gen_range(n + 1..=n + 4);
                let pts: Vec<RatVector> = (0..k).map(|_| random_int_point(rng, n, 4)).collect();
                Polyhedron::from_points(&pts).unwrap()
            }
            1 => {
                let k = rng.gen_range(n + 1..=n + 3);
                let pts: Vec<RatVector> = (0..k).map(|_| random_int_point(rng, n, 4)).collect();
                tropconv::hull::tconv_polyhedron(&Polyhedron::from_points(&pts).unwrap()).unwrap()
            }
            2 => {
                let mut ineqs = box_ineqs(n, -5, 5);
                for _ in 0..rng.gen_range(1..=3) {
                    ineqs.push(Halfspace::new(random_normal(rng, n), random_rational(rng, 2)));
                }
                Polyhedron::from_hrep(n, ineqs, vec![]).unwrap()
            }
            _ => {
                let ineqs = (0..rng.gen_range(1..=n + 1))
                    .map(|_| Halfspace::new(random_normal(rng, n), random_rational(rng, 2)))
                    .collect();
                Polyhedron::from_hrep(n, ineqs, vec![]).unwrap()
            }
        };
        let p = p.canonical();
        if tropconv::polyhedron::dim(&p) == n as i64 {
            return p;
        }
    }
}

/// Random nonzero integer normal with entries in `[-3, 3]`, biased towards the
/// sign patterns that give tropically convex halfspaces.
pub fn random_normal<R: Rng>(rng: &mut R, n: usize) -> RatVector {
    loop {
        let mut a: Vec<i64> = (0..n).map(|_| rng.gen_range(-3..=3)).collect();
        match rng.gen_range(0..3) {
            0 => a.iter_mut().for_each(|x| *x = -x.abs()),
            1 => {
                a.iter_mut().for_each(|x| *x = -x.abs());
                let j = rng.gen_range(0..n);
                let rest: i64 = a.iter().enumerate().filter(|&(i, _)| i != j).map(|(_, x)| -x).sum();
                a[j] = rest + rng.gen_range(-1..=2);
            }
            _ => {}
        }
        if a.iter().any(|x| *x != 0) {
            return v(&a);
        }
    }
}

/// Sector generators written out from the definition.
pub fn sector_gens(j: usize, n: usize) -> Vec<RatVector> {
    let mut out = Vec::new();
    if j > 0 {
        out.push(RatVector::new(vec![Rational::one(); n]));
    }
    for i in 1..=n {
        if i != j {
            let mut e = vec![Rational::zero(); n];
            e[i - 1] = -Rational::one();
            out.push(RatVector::new(e));
        }
    }
    out
}

pub fn random_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize, bound: i64) -> TropMatrix {
    TropMatrix::new(
        (0..rows)
            .map(|_| (0..cols).map(|_| random_rational(rng, bound)).collect())
            .collect(),
    )
    .unwrap()
}

/// Integer matrix with many ties.
pub fn random_tie_matrix<R: Rng>(rng: &mut R, n: usize) -> TropMatrix {
    TropMatrix::new(
        (0..n)
            .map(|_| (0..n).map(|_| rat(rng.gen_range(0..=3))).collect())
            .collect(),
    )
    .unwrap()
}
