mod common;

use common::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tropconv::curve::{
    check_degree_bound, curve_from_columns, degree, diff_coord_dim, dim_tconv_curve, random_balanced_fan,
    tconv_curve, tconv_curve_in_chart, FanCurve,
};
use tropconv::matrix::{dim_tconv_columns, TropMatrix};
use tropconv::RatVector;

const M_F: [&[i64]; 7] = [
    &[1, 1, 1, 0, 0, 0, 0],
    &[1, 0, 0, 1, 1, 0, 0],
    &[1, 0, 0, 0, 0, 1, 1],
    &[0, 1, 0, 1, 0, 1, 0],
    &[0, 0, 1, 0, 1, 1, 0],
    &[0, 0, 1, 1, 0, 0, 1],
    &[0, 1, 0, 0, 1, 0, 1],
];

#[test]
fn gamma_f_routes_agree() {
    let c = curve_from_columns(&M_F).unwrap();
    let m = TropMatrix::from_ints(&M_F).unwrap();
    assert_eq!(dim_tconv_curve(&c).unwrap(), 2);
    assert_eq!(dim_tconv_columns(&m).unwrap(), 2);
    // no point of the hull has four distinct coordinates in PT^6
    let hull = tconv_curve(&c).unwrap();
    assert!(diff_coord_dim(&hull) < 3);
}

#[test]
fn random_corpus_respects_the_bound() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for _ in 0..15 {
        let n = rng.gen_range(1..=3);
        let c = random_balanced_fan(&mut rng, n, 5, 4);
        let r = check_degree_bound(&c).unwrap();
        assert!(r.holds, "{c:?}");
        let d = degree(&c).unwrap();
        assert!(c.rays().iter().all(|ray| ray.v.iter().all(|&x| x as u64 <= d)));
        assert_eq!(diff_coord_dim(&tconv_curve(&c).unwrap()), r.dim);
        let other = rng.gen_range(1..=n);
        assert_eq!(tconv_curve_in_chart(&c, other).unwrap().dim(), r.dim as i64);
    }
}

#[test]
fn finite_subsets_respect_the_bound() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for _ in 0..10 {
        let c = random_balanced_fan(&mut rng, 3, 5, 4);
        let d = degree(&c).unwrap() as usize;
        let w = finite_subset(&mut rng, &c);
        assert!(dim_tconv_columns(&TropMatrix::from_columns(&w).unwrap()).unwrap() <= d);
    }
}

fn finite_subset(rng: &mut ChaCha8Rng, c: &FanCurve) -> Vec<RatVector> {
    (0..rng.gen_range(1..=5))
        .map(|_| {
            let ray = &c.rays()[rng.gen_range(0..c.rays().len())];
            let l = rat(rng.gen_range(1..=5));
            RatVector::new(ray.v.iter().map(|&x| rat(x) * &l).collect())
        })
        .collect()
}
