//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
//! exits non-zero when any of them fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use common::*;
use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tropconv::classify::{classify_halfspace, classify_halfspace_closed_form, is_tconvex_polyhedron};
use tropconv::curve::{
    check_degree_bound, curve_from_columns, degree, dim_tconv_curve, random_balanced_fan, FanCurve,
};
use tropconv::hull::{conv_of_complex, dim_tconv_segment, segment_hull_simplex, tconv_finite, tconv_polyhedron};
use tropconv::matrix::{dim_tconv_columns, trop_det, trop_rank, TropMatrix};
use tropconv::polyhedron::{contains_polyhedron, dim, intersect, poly_equal};
use tropconv::render::figure_panels;
use tropconv::{Polyhedron, RatVector, Rational};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn pair_corpus() -> Vec<(RatVector, RatVector)> {
    let mut rng = ChaCha8Rng::seed_from_u64(1001);
    (0..200)
        .map(|_| {
            let n = rng.gen_range(2..=5);
            random_pair(&mut rng, n)
        })
        .collect()
}

fn two_point_commutation() -> Outcome {
    for (a, b) in pair_corpus() {
        let r1 = tconv_polyhedron(&Polyhedron::from_points(&[a.clone(), b.clone()]).unwrap()).unwrap();
        let r2 = conv_of_complex(&tconv_finite(&[a.clone(), b.clone()]).unwrap()).unwrap();
        let r3 = segment_hull_simplex(&a, &b).unwrap();
        ensure(
            poly_equal(&r1, &r2).unwrap() && poly_equal(&r2, &r3).unwrap() && poly_equal(&r1, &r3).unwrap(),
            || format!("routes differ for a={a:?} b={b:?}"),
        )?;
    }
    Ok("200 pairs, three routes equal".into())
}

fn dimension_formula() -> Outcome {
    for (a, b) in pair_corpus() {
        let r1 = tconv_polyhedron(&Polyhedron::from_points(&[a.clone(), b.clone()]).unwrap()).unwrap();
        let expect = dim_tconv_segment(&a, &b).unwrap() as i64;
        ensure(dim(&r1) == expect, || format!("dim {} != {expect} for a={a:?} b={b:?}", dim(&r1)))?;
    }
    Ok("200 pairs".into())
}

fn planar_commutation() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1003);
    for _ in 0..200 {
        let k = rng.gen_range(1..=8);
        let pts: Vec<RatVector> = (0..k).map(|_| random_point(&mut rng, 2, 4)).collect();
        let lhs = tconv_polyhedron(&Polyhedron::from_points(&pts).unwrap()).unwrap();
        let rhs = conv_of_complex(&tconv_finite(&pts).unwrap()).unwrap();
        ensure(poly_equal(&lhs, &rhs).unwrap(), || format!("differ for {pts:?}"))?;
    }
    Ok("200 point sets".into())
}

fn space_counterexample() -> Outcome {
    let vs = vec![v(&[0, 0, 0]), v(&[1, 2, 3]), v(&[4, 1, 7])];
    let small = conv_of_complex(&tconv_finite(&vs).unwrap()).unwrap().canonical();
    let big = tconv_polyhedron(&Polyhedron::from_points(&vs).unwrap()).unwrap().canonical();
    ensure(small.vertices().len() == 7, || format!("conv tconv has {} vertices", small.vertices().len()))?;
    ensure(big.vertices().len() == 7, || format!("tconv conv has {} vertices", big.vertices().len()))?;
    ensure(contains_polyhedron(&big, &small).unwrap(), || "not contained".into())?;
    let ineqs = &small.hrep().unwrap().ineqs;
    let eqs = &small.hrep().unwrap().eqs;
    let witness = big.vertices().into_iter().find(|x| {
        ineqs.iter().any(|h| !h.contains(x)) || eqs.iter().any(|h| h.normal.dot(x) != h.offset)
    });
    let w = witness.ok_or("no vertex of tconv conv violates conv tconv")?;
    Ok(format!("7 and 7 vertices, witness {w}"))
}

fn polyhedron_classification() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1005);
    let mut yes = 0;
    for _ in 0..200 {
        let n = rng.gen_range(1..=4);
        let p = random_full_dim_polyhedron(&mut rng, n);
        let verdict = is_tconvex_polyhedron(&p).unwrap().is_yes();
        let fixed = poly_equal(&tconv_polyhedron(&p).unwrap(), &p).unwrap();
        ensure(verdict == fixed, || format!("verdict {verdict} but fixed point {fixed}: {p:?}"))?;
        yes += verdict as usize;
    }
    Ok(format!("200 polyhedra, {yes} convex"))
}

fn halfspace_dichotomy() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1006);
    let zero = rat(0);
    let mut convex = 0;
    for _ in 0..500 {
        let n = rng.gen_range(1..=5);
        let a = random_normal(&mut rng, n);
        // H + S_j = H exactly when every generator of S_j points into H
        let by_generators = (0..=n).any(|j| sector_gens(j, n).iter().all(|g| a.dot(g) >= zero));
        let c = random_rational(&mut rng, 3);
        let verdict = classify_halfspace(&a, &c).unwrap().convex;
        let closed = classify_halfspace_closed_form(&a).unwrap().convex;
        ensure(verdict == by_generators && closed == by_generators, || {
            format!("a={a:?}: classify {verdict}, closed form {closed}, generators {by_generators}")
        })?;
        convex += by_generators as usize;
    }
    Ok(format!("500 normals, {convex} convex"))
}

fn determinant_oracle() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1007);
    for _ in 0..500 {
        let n = rng.gen_range(1..=7);
        let m = if rng.gen_bool(0.5) { random_tie_matrix(&mut rng, n) } else { random_matrix(&mut rng, n, n, 4) };
        let d = trop_det(&m).unwrap();
        let (value, count, _) = brute_force_det(&m);
        ensure(d.value == value && d.unique_min == (count == 1), || {
            format!("{m}: got ({:?}, {}), brute force ({value:?}, {count})", d.value, d.unique_min)
        })?;
    }
    Ok("500 matrices".into())
}

const M_F: [&[i64]; 7] = [
    &[1, 1, 1, 0, 0, 0, 0],
    &[1, 0, 0, 1, 1, 0, 0],
    &[1, 0, 0, 0, 0, 1, 1],
    &[0, 1, 0, 1, 0, 1, 0],
    &[0, 0, 1, 0, 1, 1, 0],
    &[0, 0, 1, 1, 0, 0, 1],
    &[0, 1, 0, 0, 1, 0, 1],
];

fn fano_facts() -> Outcome {
    let m = TropMatrix::from_ints(&M_F).unwrap();
    let c = curve_from_columns(&M_F).unwrap();
    let rank = trop_rank(&m).unwrap();
    let cols = dim_tconv_columns(&m).unwrap();
    let deg = degree(&c).unwrap();
    let dim = dim_tconv_curve(&c).unwrap();
    let report = check_degree_bound(&c).unwrap();
    ensure((rank, cols, deg, dim, report.holds) == (3, 2, 3, 2, true), || {
        format!("rank {rank}, columns {cols}, degree {deg}, dim {dim}, holds {}", report.holds)
    })?;
    Ok("rank 3, columns 2, degree 3, dim 2".into())
}

fn finite_subset(rng: &mut ChaCha8Rng, c: &FanCurve) -> Vec<RatVector> {
    (0..rng.gen_range(1..=6))
        .map(|_| {
            let ray = &c.rays()[rng.gen_range(0..c.rays().len())];
            let l = random_rational(rng, 4).abs();
            RatVector::new(ray.v.iter().map(|&x| rat(x) * &l).collect())
        })
        .collect()
}

fn degree_bound_corpus() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1009);
    let mut tight = 0;
    for _ in 0..100 {
        let n = rng.gen_range(1..=4);
        let c = random_balanced_fan(&mut rng, n, 6, 4);
        let r = check_degree_bound(&c).unwrap();
        ensure(r.holds, || format!("bound fails: {c:?} {r:?}"))?;
        tight += (r.dim as u64 == r.deg) as usize;
        for _ in 0..10 {
            let w = finite_subset(&mut rng, &c);
            let d = dim_tconv_columns(&TropMatrix::from_columns(&w).unwrap()).unwrap() as u64;
            ensure(d <= r.deg, || format!("subset {w:?} of {c:?} has dim {d} > {}", r.deg))?;
        }
    }
    Ok(format!("100 curves, 1000 subsets, {tight} tight"))
}

fn strictly_increasing(rng: &mut ChaCha8Rng, len: usize, start: Rational) -> Vec<Rational> {
    let mut out = vec![start];
    while out.len() < len {
        let step = random_rational(rng, 2).abs() + Rational::new(1.into(), 3.into());
        out.push(out.last().unwrap() + step);
    }
    out
}

fn antidiagonal() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1010);
    for _ in 0..50 {
        let d = rng.gen_range(1..=4);
        // p_0 = 0 < p_1 < ... < p_{d+1}; the minors only decrease for positive p
        let p = strictly_increasing(&mut rng, d + 2, rat(0));
        let start = random_rational(&mut rng, 2);
        let lambda = strictly_increasing(&mut rng, d + 2, start);
        let dm = TropMatrix::new((0..d + 2).map(|i| lambda.iter().map(|l| l * &p[i]).collect()).collect()).unwrap();
        let det = trop_det(&dm).unwrap();
        let (value, count, argmins) = brute_force_det(&dm);
        let anti: Vec<usize> = (0..d + 2).rev().collect();
        ensure(det.unique_min && count == 1 && det.value == value, || format!("not unique: {dm}"))?;
        ensure(det.argmin == anti && argmins[0] == anti, || format!("argmin {:?} for {dm}", det.argmin))?;
        let rows: Vec<usize> = (1..d + 2).collect();
        let minors: Vec<Rational> = (0..d + 2)
            .map(|i| {
                let cols: Vec<usize> = (0..d + 2).filter(|&j| j != i).collect();
                brute_force_det(&dm.submatrix(&rows, &cols)).0
            })
            .collect();
        ensure(minors.windows(2).all(|w| w[1] < w[0]), || format!("minors {minors:?} for {dm}"))?;
    }
    Ok("50 matrices".into())
}

fn figure() -> Outcome {
    let quad = Polyhedron::from_points(&[v(&[0, 2]), v(&[1, 0]), v(&[3, 3]), v(&[1, 5])]).unwrap();
    let f = figure_panels(&quad, None).unwrap();
    ensure(f.svgs.len() == 5, || format!("{} panels", f.svgs.len()))?;
    ensure(f.svgs.iter().all(|(_, s)| s.contains("<svg") && s.contains("</svg>")), || "bad svg".into())?;
    let mut hex = f.hull.vertices();
    hex.sort();
    let mut expect = vec![v(&[0, 0]), v(&[1, 0]), v(&[3, 2]), v(&[3, 3]), v(&[1, 5]), v(&[0, 2])];
    expect.sort();
    ensure(hex == expect, || format!("hull vertices {hex:?}"))?;
    ensure(f.sums.len() == 3, || format!("{} sums", f.sums.len()))?;
    for s in &f.sums {
        ensure(contains_polyhedron(s, &quad).unwrap(), || "quadrilateral not in a sum".into())?;
    }
    ensure(poly_equal(&intersect(&f.sums).unwrap(), &f.hull).unwrap(), || "hull is not the intersection".into())?;
    ensure(poly_equal(&tconv_polyhedron(&quad).unwrap(), &f.hull).unwrap(), || "hull differs".into())?;
    Ok("5 panels, hexagon".into())
}

fn main() -> ExitCode {
    let criteria: Vec<Criterion> = vec![
        ("two-point commutation", two_point_commutation),
        ("segment dimension formula", dimension_formula),
        ("planar commutation", planar_commutation),
        ("seven-vertex counterexample", space_counterexample),
        ("polyhedron classification", polyhedron_classification),
        ("halfspace dichotomy", halfspace_dichotomy),
        ("determinant vs permutations", determinant_oracle),
        ("M_F facts", fano_facts),
        ("degree bound corpus", degree_bound_corpus),
        ("antidiagonal minimum", antidiagonal),
        ("figure pipeline", figure),
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    for (i, (name, f)) in criteria.into_iter().enumerate() {
        if !filter.is_empty() && !filter.iter().any(|s| name.contains(s.as_str())) {
            continue;
        }
        let t = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panic: {msg}"))
        });
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} ({secs:.1}s)", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail} ({secs:.1}s)", i + 1);
            }
        }
    }
    if failed > 0 {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
