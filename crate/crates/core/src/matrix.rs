//! Tropical determinant, singularity and rank.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{RatStr, RatVector, Rational};

/// Largest square size accepted by `trop_det`.
pub const DET_SIZE_LIMIT: usize = 64;
/// Largest `min(rows, cols)` accepted by `trop_rank`.
pub const RANK_SIZE_LIMIT: usize = 10;

/// A rectangular matrix of finite rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TropMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl TropMatrix {
    pub fn new(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let cols = rows.first().map(Vec::len).ok_or(Error::EmptyInput)?;
        if cols == 0 {
            return Err(Error::EmptyInput);
        }
        for r in &rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
        }
        Ok(TropMatrix {
            rows: rows.len(),
            cols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_ints(rows: &[&[i64]]) -> Result<Self> {
        TropMatrix::new(
            rows.iter()
                .map(|r| r.iter().map(|&x| Rational::from_integer(BigInt::from(x))).collect())
                .collect(),
        )
    }

    /// The matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[RatVector]) -> Result<Self> {
        let n = cols.first().ok_or(Error::EmptyInput)?.dim();
        for c in cols {
            crate::error::check_dim(n, c.dim())?;
        }
        TropMatrix::new((0..n).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> RatVector {
        RatVector::new((0..self.rows).map(|i| self.get(i, j).clone()).collect())
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> TropMatrix {
        TropMatrix::new((0..self.cols).map(|j| self.column(j).into_inner()).collect())
            .expect("nonempty")
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> TropMatrix {
        TropMatrix::new(
            rows.iter()
                .map(|&i| cols.iter().map(|&j| self.get(i, j).clone()).collect())
                .collect(),
        )
        .expect("nonempty selection")
    }
}

impl fmt::Display for TropMatrix {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

impl Serialize for TropMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<RatStr>> = (0..self.rows)
            .map(|i| self.row(i).iter().cloned().map(RatStr).collect())
            .collect();
        rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for TropMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<RatStr>>::deserialize(d)?;
        TropMatrix::new(rows.into_iter().map(|r| r.into_iter().map(|x| x.0).collect()).collect())
            .map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TropDet {
    pub value: Rational,
    pub unique_min: bool,
    /// `argmin[i]` is the column matched to row `i`.
    pub argmin: Vec<usize>,
}

/// Min-cost perfect assignment (Hungarian method with potentials). `forbidden`
/// cells may not be used; `None` when no assignment avoids them.
fn assignment(m: &TropMatrix, forbidden: &[(usize, usize)]) -> Option<(Rational, Vec<usize>)> {
    let n = m.rows;
    // Forbidden cells get a cost no allowed assignment can reach.
    let total: Rational = m.entries.iter().map(|x| x.abs()).sum();
    let big = &total + &total + Rational::from_integer(BigInt::from(1));
    let cost = |i: usize, j: usize| -> Rational {
        if forbidden.contains(&(i, j)) {
            big.clone()
        } else {
            m.get(i, j).clone()
        }
    };

    // 1-based arrays; p[j] is the row matched to column j, column 0 is virtual.
    let mut u = vec![Rational::zero(); n + 1];
    let mut v = vec![Rational::zero(); n + 1];
    let mut p = vec![0usize; n + 1];
    let mut way = vec![0usize; n + 1];
    for i in 1..=n {
        p[0] = i;
        let mut j0 = 0;
        let mut minv: Vec<Option<Rational>> = vec![None; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = p[j0];
            let mut delta: Option<Rational> = None;
            let mut j1 = 0;
            for j in 1..=n {
                if used[j] {
                    continue;
                }
                let cur = cost(i0 - 1, j - 1) - &u[i0] - &v[j];
                if minv[j].as_ref().is_none_or(|mv| cur < *mv) {
                    minv[j] = Some(cur);
                    way[j] = j0;
                }
                let mj = minv[j].as_ref().expect("set above");
                if delta.as_ref().is_none_or(|d| mj < d) {
                    delta = Some(mj.clone());
                    j1 = j;
                }
            }
            let delta = delta.expect("an unused column remains");
            for j in 0..=n {
                if used[j] {
                    u[p[j]] += &delta;
                    v[j] -= &delta;
                } else if let Some(mv) = minv[j].as_mut() {
                    *mv -= &delta;
                }
            }
            j0 = j1;
            if p[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }
    let mut perm = vec![0; n];
    for j in 1..=n {
        perm[p[j] - 1] = j - 1;
    }
    let value: Rational = perm.iter().enumerate().map(|(i, &j)| cost(i, j)).sum();
    if value > total {
        return None;
    }
    Some((value, perm))
}

/// `min_σ Σ_i M[i, σ(i)]` by optimal assignment. Uniqueness is decided by forbidding
/// each matched cell in turn: another optimal permutation must avoid one of them.
pub fn trop_det(m: &TropMatrix) -> Result<TropDet> {
    if m.rows != m.cols {
        return Err(Error::NotSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    if m.rows > DET_SIZE_LIMIT {
        return Err(Error::TooLarge {
            size: m.rows,
            limit: DET_SIZE_LIMIT,
        });
    }
    let (value, argmin) = assignment(m, &[]).expect("unconstrained assignment exists");
    let mut unique_min = true;
    for (i, &j) in argmin.iter().enumerate() {
        if let Some((other, _)) = assignment(m, &[(i, j)]) {
            if other == value {
                unique_min = false;
                break;
            }
        }
    }
    Ok(TropDet {
        value,
        unique_min,
        argmin,
    })
}

pub fn is_trop_singular(m: &TropMatrix) -> Result<bool> {
    Ok(!trop_det(m)?.unique_min)
}

/// Seed for the order in which minors are visited.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RankConfig {
    pub seed: u64,
}

pub fn trop_rank(m: &TropMatrix) -> Result<usize> {
    trop_rank_with(m, &RankConfig::default())
}

/// Largest `r` with a tropically nonsingular `r x r` minor. Sizes are tried from
/// `min(rows, cols)` down; within a size the minors are visited in a seeded
/// random order and the search stops at the first nonsingular one.
pub fn trop_rank_with(m: &TropMatrix, cfg: &RankConfig) -> Result<usize> {
    let k = m.rows.min(m.cols);
    if k > RANK_SIZE_LIMIT {
        return Err(Error::TooLarge {
            size: k,
            limit: RANK_SIZE_LIMIT,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for r in (2..=k).rev() {
        let row_sets = subsets(m.rows, r);
        let col_sets = subsets(m.cols, r);
        let mut minors: Vec<(usize, usize)> = (0..row_sets.len())
            .flat_map(|a| (0..col_sets.len()).map(move |b| (a, b)))
            .collect();
        minors.shuffle(&mut rng);
        for (a, b) in minors {
            if trop_det(&m.submatrix(&row_sets[a], &col_sets[b]))?.unique_min {
                return Ok(r);
            }
        }
    }
    Ok(1)
}

/// Dimension of the tropical hull of the columns, as points of `R^rows / R·1`.
pub fn dim_tconv_columns(m: &TropMatrix) -> Result<usize> {
    Ok(trop_rank(m)? - 1)
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub(crate) fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] < n - k + i) else {
            return out;
        };
        cur[i] += 1;
        for t in i + 1..k {
            cur[t] = cur[t - 1] + 1;
        }
    }
}
