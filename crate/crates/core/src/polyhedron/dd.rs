//! Double description method on homogeneous integer cones.
//!
//! Given `{y : A y >= 0, E y = 0}` this computes a lineality basis and the extreme
//! rays of the pointed quotient, inserting one constraint at a time. Adjacency of
//! rays is decided combinatorially from their sets of tight constraints.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::linalg::int_dot;
use crate::rational::{int_sign, make_primitive};

pub(crate) type IntVec = Vec<BigInt>;

#[derive(Clone, Debug, Default)]
pub(crate) struct ConeGenerators {
    pub rays: Vec<IntVec>,
    pub lineality: Vec<IntVec>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(len: usize) -> Self {
        Bits(vec![0; len.div_ceil(64).max(1)])
    }

    fn full(upto: usize, len: usize) -> Self {
        let mut b = Bits::new(len);
        for i in 0..upto {
            b.set(i);
        }
        b
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn contains_all(&self, other: &Bits) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| b & !a == 0)
    }
}

struct Ray {
    v: IntVec,
    tight: Bits,
}

/// Combination `a*x - b*y` reduced to a primitive vector.
fn combine(a: &BigInt, x: &[BigInt], b: &BigInt, y: &[BigInt]) -> IntVec {
    make_primitive(x.iter().zip(y).map(|(xi, yi)| a * xi - b * yi).collect())
}

pub(crate) fn generators(dim: usize, ineqs: &[IntVec], eqs: &[IntVec]) -> ConeGenerators {
    let mut lineality: Vec<IntVec> = (0..dim)
        .map(|i| {
            let mut e = vec![BigInt::zero(); dim];
            e[i] = BigInt::from(1);
            e
        })
        .collect();
    let mut rays: Vec<Ray> = Vec::new();
    let nbits = ineqs.len();

    for h in eqs {
        if let Some(pos) = lineality.iter().position(|l| !int_dot(h, l).is_zero()) {
            let l0 = lineality.swap_remove(pos);
            let s = int_dot(h, &l0);
            let sgn = BigInt::from(int_sign(&s));
            let abs = s.abs();
            for l in lineality.iter_mut() {
                let hl = int_dot(h, l);
                if !hl.is_zero() {
                    *l = combine(&abs, l, &(&sgn * hl), &l0);
                }
            }
            for r in rays.iter_mut() {
                let hr = int_dot(h, &r.v);
                if !hr.is_zero() {
                    r.v = combine(&abs, &r.v, &(&sgn * hr), &l0);
                }
            }
        } else {
            // Lineality already satisfies h; intersect the pointed part with h = 0.
            let vals: Vec<BigInt> = rays.iter().map(|r| int_dot(h, &r.v)).collect();
            rays = split(rays, &vals, None, true);
        }
    }

    for (k, h) in ineqs.iter().enumerate() {
        if let Some(pos) = lineality.iter().position(|l| !int_dot(h, l).is_zero()) {
            let mut l0 = lineality.swap_remove(pos);
            let mut s = int_dot(h, &l0);
            if s.is_negative() {
                l0.iter_mut().for_each(|c| *c = -c.clone());
                s = -s;
            }
            for l in lineality.iter_mut() {
                let hl = int_dot(h, l);
                if !hl.is_zero() {
                    *l = combine(&s, l, &hl, &l0);
                }
            }
            for r in rays.iter_mut() {
                let hr = int_dot(h, &r.v);
                if !hr.is_zero() {
                    r.v = combine(&s, &r.v, &hr, &l0);
                }
                r.tight.set(k);
            }
            rays.push(Ray {
                v: l0,
                tight: Bits::full(k, nbits),
            });
        } else {
            let vals: Vec<BigInt> = rays.iter().map(|r| int_dot(h, &r.v)).collect();
            rays = split(rays, &vals, Some(k), false);
        }
    }

    ConeGenerators {
        rays: rays.into_iter().map(|r| r.v).collect(),
        lineality,
    }
}

/// One DD step on the pointed part: keep rays on the feasible side, add
/// combinations of adjacent (positive, negative) pairs.
fn split(rays: Vec<Ray>, vals: &[BigInt], k: Option<usize>, equality: bool) -> Vec<Ray> {
    let pos: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_positive()).collect();
    let neg: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_negative()).collect();
    if neg.is_empty() && (!equality || pos.is_empty()) {
        let mut rays = rays;
        if let Some(k) = k {
            for (r, v) in rays.iter_mut().zip(vals) {
                if v.is_zero() {
                    r.tight.set(k);
                }
            }
        }
        return rays;
    }

    let mut created = Vec::new();
    for &p in &pos {
        for &n in &neg {
            let common = rays[p].tight.and(&rays[n].tight);
            let adjacent = !rays
                .iter()
                .enumerate()
                .any(|(i, r)| i != p && i != n && r.tight.contains_all(&common));
            if adjacent {
                let v = combine(&vals[p], &rays[n].v, &vals[n], &rays[p].v);
                let mut tight = common;
                if let Some(k) = k {
                    tight.set(k);
                }
                created.push(Ray { v, tight });
            }
        }
    }

    let mut out: Vec<Ray> = Vec::with_capacity(rays.len() + created.len());
    for (i, mut r) in rays.into_iter().enumerate() {
        if vals[i].is_zero() {
            if let Some(k) = k {
                r.tight.set(k);
            }
            out.push(r);
        } else if vals[i].is_positive() && !equality {
            out.push(r);
        }
    }
    out.extend(created);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(v: &[i64]) -> IntVec {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn positive_orthant() {
        let g = generators(3, &[iv(&[1, 0, 0]), iv(&[0, 1, 0]), iv(&[0, 0, 1])], &[]);
        assert!(g.lineality.is_empty());
        let mut rays = g.rays.clone();
        rays.sort();
        assert_eq!(rays, vec![iv(&[0, 0, 1]), iv(&[0, 1, 0]), iv(&[1, 0, 0])]);
    }

    #[test]
    fn halfspace_has_lineality() {
        let g = generators(3, &[iv(&[1, 1, 0])], &[]);
        assert_eq!(g.lineality.len(), 2);
        assert_eq!(g.rays.len(), 1);
    }

    #[test]
    fn square_cone_has_four_rays() {
        // homogenized unit square: t>=0, x>=0, y>=0, t-x>=0, t-y>=0
        let ineqs = [
            iv(&[1, 0, 0]),
            iv(&[0, 1, 0]),
            iv(&[0, 0, 1]),
            iv(&[1, -1, 0]),
            iv(&[1, 0, -1]),
        ];
        let g = generators(3, &ineqs, &[]);
        let mut rays = g.rays.clone();
        rays.sort();
        assert_eq!(
            rays,
            vec![iv(&[1, 0, 0]), iv(&[1, 0, 1]), iv(&[1, 1, 0]), iv(&[1, 1, 1])]
        );
    }

    #[test]
    fn equation_cuts_lineality() {
        let g = generators(3, &[], &[iv(&[1, -1, 0])]);
        assert_eq!(g.lineality.len(), 2);
        assert!(g.rays.is_empty());
        for l in &g.lineality {
            assert!(int_dot(&iv(&[1, -1, 0]), l).is_zero());
        }
    }
}
