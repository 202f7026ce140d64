use num_rational::BigRational;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::samples;
use crate::semifield::{MaxPlusExact, RootedRational};

type M = Matrix<RootedRational>;
type V = Vector<RootedRational>;

fn r(text: &str) -> RootedRational {
    RootedRational::parse(text).unwrap()
}

fn v(entries: &[&str]) -> V {
    Vector::parse(entries).unwrap()
}

/// A rational close to `10^t` for `t` uniform in [-1, 1].
fn log_uniform(rng: &mut impl Rng) -> BigRational {
    let t: f64 = rng.gen_range(-1.0..=1.0);
    let scaled = (10f64.powf(t) * 1000.0).round() as i64;
    BigRational::new(scaled.into(), 1000.into())
}

fn random_vector(rng: &mut impl Rng, n: usize) -> V {
    Vector::new((0..n).map(|_| RootedRational::from_rational(&log_uniform(rng)).unwrap()).collect()).unwrap()
}

fn random_matrix(rng: &mut impl Rng, n: usize) -> M {
    Matrix::from_fn(n, n, |_, _| RootedRational::from_rational(&log_uniform(rng)).unwrap()).unwrap()
}

fn float_rayleigh(a: &M, x: &V) -> f64 {
    let n = x.dim();
    let mut best = 0f64;
    for i in 0..n {
        for j in 0..n {
            best = best.max(a.get(i, j).to_f64() * x.get(j).to_f64() / x.get(i).to_f64());
        }
    }
    best
}

/// `x⁻Ax >= bound`, screened in floating point and settled exactly when close.
fn at_least(a: &M, x: &V, bound: &RootedRational) -> bool {
    if float_rayleigh(a, x) > bound.to_f64() * (1.0 + 1e-9) {
        return true;
    }
    bound.leq(&a.rayleigh(x).unwrap())
}

#[test]
fn vector_distance_examples() {
    let x = v(&["1", "1/6", "1/4"]);
    assert_eq!(vec_distance(&x, &x).unwrap(), RootedRational::one());
    let c = r("3/2");
    assert_eq!(vec_distance(&x, &x.scale(&c)).unwrap(), c.add(&c.inv().unwrap()));
    let p = Vector::<MaxPlusExact>::parse(&["0", "2"]).unwrap();
    let q = Vector::<MaxPlusExact>::parse(&["1", "-1"]).unwrap();
    assert_eq!(vec_distance(&p, &q).unwrap(), MaxPlusExact::parse("3").unwrap());
    assert!(matches!(vec_distance(&x, &v(&["1", "0", "1"])), Err(Error::Domain(_))));
}

#[test]
fn matrix_distance_of_the_sample_to_its_best_rank_one() {
    let a = samples::four_alternatives();
    let x = v(&["1", "1/6", "1/4", "1/2"]);
    let xx = M::rank_one(&x).unwrap();
    assert_eq!(mat_distance(&a, &a).unwrap(), RootedRational::one());
    assert_eq!(mat_distance(&a, &xx).unwrap(), r("2"));
    assert!(matches!(mat_distance(&a, &samples::tied_tail_constraints()), Err(Error::Domain(_))));
    assert!(matches!(mat_distance(&a, &M::identity(3).unwrap()), Err(Error::Dimension(_))));
}

#[test]
fn rayleigh_minimum_of_the_sample() {
    let space = minimize_rayleigh(&samples::four_alternatives()).unwrap();
    assert_eq!(space.optimum, r("2"));
    assert_eq!(space.kind, ObjectiveKind::Unconstrained);
    let expected = Matrix::parse(&[
        &["1", "6", "4", "2"],
        &["1/6", "1", "2/3", "1/3"],
        &["1/4", "3/2", "1", "1/2"],
        &["1/2", "3", "2", "1"],
    ])
    .unwrap();
    assert_eq!(space.generator, expected);
}

#[test]
fn rayleigh_minimum_of_identity() {
    let space = minimize_rayleigh(&M::identity(3).unwrap()).unwrap();
    assert_eq!(space.optimum, RootedRational::one());
    assert_eq!(space.generator, M::identity(3).unwrap());
}

#[test]
fn rayleigh_needs_a_cycle() {
    let nilpotent = Matrix::parse(&[&["0", "1"], &["0", "0"]]).unwrap();
    assert!(matches!(minimize_rayleigh::<RootedRational>(&nilpotent), Err(Error::Domain(_))));
}

#[test]
fn exponent_tuples() {
    assert_eq!(enumerate_exponents(4, 3).unwrap(), vec![vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]]);
    assert_eq!(enumerate_exponents(4, 1).unwrap(), vec![vec![1], vec![2], vec![3]]);
    let total: usize = (1..4).map(|k| enumerate_exponents(4, k).unwrap().len()).sum();
    assert_eq!(total, 11);
    assert!(enumerate_exponents(4, 0).unwrap_err().is_usage());
    assert!(enumerate_exponents(4, 4).unwrap_err().is_usage());
}

/// Tuples with `1 <= sum <= n - k` counted by brute force over `0..n` per slot.
fn brute_force_count(n: usize, k: usize) -> usize {
    let mut count = 0;
    let mut digits = vec![0usize; k];
    loop {
        let s: usize = digits.iter().sum();
        if s >= 1 && s + k <= n {
            count += 1;
        }
        let mut pos = 0;
        loop {
            if pos == k {
                return count;
            }
            digits[pos] += 1;
            if digits[pos] < n {
                break;
            }
            digits[pos] = 0;
            pos += 1;
        }
    }
}

#[test]
fn exponent_tuples_match_brute_force() {
    for n in 2..=6 {
        for k in 1..n {
            let tuples = enumerate_exponents(n, k).unwrap();
            assert_eq!(tuples.len(), brute_force_count(n, k), "n={n} k={k}");
            let mut sorted = tuples.clone();
            sorted.dedup();
            assert_eq!(sorted.len(), tuples.len());
        }
    }
}

#[test]
fn constrained_minimum_of_the_sample() {
    let b = samples::four_alternatives();
    let c = samples::tied_tail_constraints();
    let space = minimize_constrained(&b, &c).unwrap();
    assert_eq!(space.optimum, r("4"));
    assert_eq!(space.spectral_radius, r("2"));
    assert_eq!(space.kind, ObjectiveKind::Constrained);
    assert_eq!(space.terms.len(), 11);
    assert_eq!(space.terms_of_length(1), r("4"));
    assert_eq!(space.terms_of_length(2), r("12^(1/2)"));
    assert_eq!(space.terms_of_length(3), r("12^(1/3)"));
    let mut listed: Vec<Vec<u32>> = space.terms.iter().map(|t| t.exponents.clone()).collect();
    listed.sort();
    let mut expected: Vec<Vec<u32>> = (1..4).flat_map(|k| enumerate_exponents(4, k).unwrap()).collect();
    expected.sort();
    assert_eq!(listed, expected);
    for u in space.generator.columns() {
        assert!(c.mul_vec(&u).unwrap().leq(&u).unwrap());
        assert_eq!(b.rayleigh(&u).unwrap(), r("4"));
    }
}

#[test]
fn each_term_matches_a_direct_product() {
    let b = samples::four_alternatives();
    let c = samples::tied_tail_constraints();
    let space = minimize_constrained(&b, &c).unwrap();
    for term in &space.terms {
        let mut product = M::identity(4).unwrap();
        for &i in &term.exponents {
            product = product.mul(&b).unwrap().mul(&c.pow(i).unwrap()).unwrap();
        }
        let k = term.exponents.len() as u32;
        assert_eq!(term.value, product.trace().unwrap().nth_root(k), "{:?}", term.exponents);
    }
}

#[test]
fn infeasible_constraints_report_a_cycle() {
    let b = samples::four_alternatives();
    let mut c = samples::tied_tail_constraints();
    c.set(1, 3, r("2"));
    match minimize_constrained(&b, &c) {
        Err(Error::Infeasible { cycle, cycle_value, .. }) => {
            assert_eq!(cycle.len(), 3);
            assert_eq!(cycle_value, "2");
        }
        other => panic!("expected infeasibility, got {other:?}"),
    }
}

#[test]
fn constrained_shape_errors() {
    let b = samples::four_alternatives();
    assert!(matches!(minimize_constrained(&b, &M::zeros(3, 3).unwrap()), Err(Error::Dimension(_))));
    assert!(matches!(minimize_constrained(&M::zeros(2, 3).unwrap(), &M::zeros(2, 3).unwrap()), Err(Error::NotSquare { .. })));
}

#[test]
fn one_by_one_constrained_problem() {
    let a: M = Matrix::parse(&[&["3"]]).unwrap();
    let space = minimize_constrained(&a, &Matrix::parse(&[&["1"]]).unwrap()).unwrap();
    assert_eq!(space.optimum, r("3"));
    assert!(space.terms.is_empty());
}

#[test]
fn sampled_vectors_never_beat_the_optimum() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let c = samples::tied_tail_constraints();
    for _ in 0..5 {
        let a = random_matrix(&mut rng, 4);
        let free = minimize_rayleigh(&a).unwrap();
        let bound = minimize_constrained(&a, &c).unwrap();
        for _ in 0..2000 {
            let x = random_vector(&mut rng, 4);
            assert!(at_least(&a, &x, &free.optimum));
            let feasible = c.kleene_star().unwrap().mul_vec(&x).unwrap();
            assert!(c.mul_vec(&feasible).unwrap().leq(&feasible).unwrap());
            assert!(at_least(&a, &feasible, &bound.optimum));
        }
        for col in free.generator.columns() {
            assert_eq!(a.rayleigh(&col).unwrap(), free.optimum);
        }
        for col in bound.generator.columns() {
            assert_eq!(a.rayleigh(&col).unwrap(), bound.optimum);
        }
    }
}

fn entry() -> impl Strategy<Value = RootedRational> + Clone {
    (1i64..30, 1i64..30).prop_map(|(p, q)| RootedRational::from_ratio(p, q).unwrap())
}

fn small_entry_or_zero() -> impl Strategy<Value = RootedRational> + Clone {
    prop_oneof![
        2 => Just(RootedRational::zero()),
        1 => (1i64..6, 2i64..12).prop_map(|(p, q)| RootedRational::from_ratio(p, q).unwrap()),
    ]
}

fn square(n: usize, cell: impl Strategy<Value = RootedRational> + Clone) -> impl Strategy<Value = M> {
    prop::collection::vec(cell, n * n).prop_map(move |d| Matrix::new(n, n, d).unwrap())
}

fn feasible_constraints(n: usize) -> impl Strategy<Value = M> {
    square(n, small_entry_or_zero()).prop_filter("Tr(C) <= 1", |c| c.heavy_cycle().unwrap().is_none())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn scaled_solutions_stay_optimal(a in square(3, entry()), u in prop::collection::vec(entry(), 3), c in entry()) {
        let space = minimize_rayleigh(&a).unwrap();
        let x = space.solution(&Vector::new(u).unwrap()).unwrap();
        prop_assert_eq!(a.rayleigh(&x).unwrap(), space.optimum.clone());
        prop_assert_eq!(a.rayleigh(&x.scale(&c)).unwrap(), space.optimum);
    }

    #[test]
    fn distance_to_rank_one_is_symmetrized_rayleigh(a in square(4, entry()), x in prop::collection::vec(entry(), 4)) {
        let x = Vector::new(x).unwrap();
        let lhs = mat_distance(&a, &M::rank_one(&x).unwrap()).unwrap();
        let b = a.add(&a.conjugate_transpose().unwrap()).unwrap();
        prop_assert_eq!(lhs, b.rayleigh(&x).unwrap());
    }

    #[test]
    fn matrix_distance_is_the_largest_ratio(a in square(3, entry()), b in square(3, entry())) {
        let mut best = RootedRational::one();
        for (x, y) in a.entries().zip(b.entries()) {
            let ratio = x.div(y).unwrap();
            best = best.add(&ratio).add(&ratio.inv().unwrap());
        }
        prop_assert_eq!(mat_distance(&a, &b).unwrap(), best.clone());
        prop_assert_eq!(mat_distance(&b, &a).unwrap(), best);
    }

    #[test]
    fn zero_constraints_reduce_to_the_unconstrained_problem(a in square(4, entry())) {
        let free = minimize_rayleigh(&a).unwrap();
        let bound = minimize_constrained(&a, &M::zeros(4, 4).unwrap()).unwrap();
        prop_assert_eq!(bound.optimum, free.optimum);
        prop_assert_eq!(bound.generator, free.generator);
    }

    #[test]
    fn constrained_solutions_are_feasible_and_optimal(a in square(4, entry()), c in feasible_constraints(4)) {
        let space = minimize_constrained(&a, &c).unwrap();
        prop_assert!(space.spectral_radius.leq(&space.optimum));
        for x in space.generator.columns() {
            prop_assert!(c.mul_vec(&x).unwrap().leq(&x).unwrap());
            prop_assert_eq!(a.rayleigh(&x).unwrap(), space.optimum.clone());
        }
        for i in 0..4 {
            prop_assert_eq!(space.generator.get(i, i), &RootedRational::one());
        }
    }

    #[test]
    fn more_constraints_never_lower_theta(a in square(4, entry()), c in feasible_constraints(4), d in feasible_constraints(4)) {
        let joined = c.add(&d).unwrap();
        prop_assume!(joined.heavy_cycle().unwrap().is_none());
        let smaller = minimize_constrained(&a, &c).unwrap().optimum;
        let larger = minimize_constrained(&a, &joined).unwrap().optimum;
        prop_assert!(smaller.leq(&larger));
    }
}
