//! Acceptance checks, one test per criterion. Every comparison is exact
//! unless a tolerance is stated next to it.

use std::time::{Duration, Instant};

use num_rational::BigRational;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tropical_rating::approx::{enumerate_exponents, minimize_constrained, minimize_rayleigh};
use tropical_rating::rating::{normalize, rate_constrained, rate_multi, rate_single, symmetrize_all, NormalizeMode};
use tropical_rating::{samples, Matrix, MaxPlusExact, RootedRational, Semifield, Vector};

type M = Matrix<RootedRational>;
type V = Vector<RootedRational>;

const END_TO_END_BUDGET: Duration = Duration::from_secs(1);
const SAMPLING_BUDGET: Duration = Duration::from_secs(60);

fn r(text: &str) -> RootedRational {
    RootedRational::parse(text).unwrap()
}

fn m(rows: &[&[&str]]) -> M {
    Matrix::parse(rows).unwrap()
}

fn v(entries: &[&str]) -> V {
    Vector::parse(entries).unwrap()
}

fn report(name: &str, started: Instant) {
    eprintln!("acceptance: PASS {name} ({:.3}s)", started.elapsed().as_secs_f64());
}

#[test]
fn single_matrix_end_to_end() {
    let started = Instant::now();
    let a = samples::four_alternatives();
    let result = rate_single(&a).unwrap();
    assert_eq!(result.symmetrized, a);
    assert_eq!(result.minimum, r("2"));
    let scaled = a.scale(&r("1/2"));
    assert_eq!(
        scaled.pow(2).unwrap(),
        m(&[
            &["1/4", "2", "4", "1"],
            &["1/12", "1/4", "1/2", "1/3"],
            &["1/4", "3/4", "1/4", "1/2"],
            &["1/2", "3", "1", "1/4"],
        ])
    );
    assert_eq!(
        scaled.pow(3).unwrap(),
        m(&[
            &["1", "6", "2", "1/2"],
            &["1/8", "3/4", "2/3", "1/6"],
            &["1/8", "1/2", "1", "1/2"],
            &["1/2", "3/2", "1/2", "1"],
        ])
    );
    assert_eq!(
        result.solution_space.generator,
        m(&[
            &["1", "6", "4", "2"],
            &["1/6", "1", "2/3", "1/3"],
            &["1/4", "3/2", "1", "1/2"],
            &["1/2", "3", "2", "1"],
        ])
    );
    assert_eq!(result.candidates.len(), 1);
    let best = &result.candidates[0];
    assert_eq!(best.scores, v(&["1", "1/6", "1/4", "1/2"]));
    assert_eq!(
        normalize(&best.scores, NormalizeMode::SumToOne).unwrap(),
        v(&["12/23", "2/23", "3/23", "6/23"])
    );
    assert!(started.elapsed() < END_TO_END_BUDGET, "took {:?}", started.elapsed());
    report("single matrix end to end", started);
}

#[test]
fn constrained_end_to_end() {
    let started = Instant::now();
    let b = samples::four_alternatives();
    let c = samples::tied_tail_constraints();
    let i = M::identity(4).unwrap();
    let c2 = c.pow(2).unwrap();
    let bc = b.mul(&c).unwrap();
    let first = bc.mul(&i.add(&c).unwrap().add(&c2).unwrap()).unwrap().trace().unwrap();
    let second = bc.mul(&b).unwrap().mul(&i.add(&c).unwrap()).unwrap().trace().unwrap().nth_root(2);
    let third = bc.mul(&b.pow(2).unwrap()).unwrap().trace().unwrap().nth_root(3);
    assert_eq!(first, r("4"));
    assert_eq!(second, r("12^(1/2)"));
    assert_eq!(third, r("12^(1/3)"));

    let result = rate_constrained(&b, &c).unwrap();
    let space = &result.solution_space;
    let tuples: usize = (1..4).map(|k| enumerate_exponents(4, k).unwrap().len()).sum();
    assert_eq!(space.terms.len(), tuples);
    assert_eq!(tuples, 11);
    assert_eq!(space.spectral_radius, r("2"));
    assert_eq!(space.terms_of_length(1), first);
    assert_eq!(space.terms_of_length(2), second);
    assert_eq!(space.terms_of_length(3), third);
    assert_eq!(result.minimum, r("4"));

    assert_eq!(space.generator.row(0), v(&["1", "1", "1", "1"]).entries());
    for row in 1..4 {
        assert_eq!(space.generator.row(row), v(&["1/8", "1", "1", "1"]).entries());
    }
    let scores: Vec<&V> = result.candidates.iter().map(|c| &c.scores).collect();
    assert_eq!(scores, vec![&v(&["1", "1/8", "1/8", "1/8"]), &v(&["1", "1", "1", "1"])]);
    assert!(!result.candidates[0].uniform);
    assert!(result.candidates[1].uniform);
    for candidate in &result.candidates {
        let x = candidate.scores.entries();
        assert!(x[1] == x[2] && x[2] == x[3]);
    }
    assert!(started.elapsed() < END_TO_END_BUDGET, "took {:?}", started.elapsed());
    report("constrained end to end", started);
}

#[test]
fn two_judges_end_to_end() {
    let started = Instant::now();
    let judges = samples::two_judges();
    let b = symmetrize_all(&judges).unwrap();
    assert_eq!(
        b,
        m(&[
            &["1", "4", "2", "4"],
            &["1/3", "1", "1/2", "1/2"],
            &["1/2", "3", "1", "1/3"],
            &["1/3", "2", "4", "1"],
        ])
    );
    // This B is not the single-judge matrix: four entries differ.
    let single = samples::four_alternatives();
    let differing: Vec<(usize, usize)> = (0..4)
        .flat_map(|i| (0..4).map(move |j| (i, j)))
        .filter(|&(i, j)| b.get(i, j) != single.get(i, j))
        .map(|(i, j)| (i + 1, j + 1))
        .collect();
    assert_eq!(differing, vec![(1, 2), (2, 3), (3, 4), (4, 1)]);
    // Both matrices still have radius 2 and the same Kleene star, so the
    // candidate computed independently here equals the single-judge one.
    let result = rate_multi(&judges).unwrap();
    let alone = rate_single(&single).unwrap();
    assert_eq!(result.minimum, r("2"));
    assert_eq!(result.solution_space.generator, alone.solution_space.generator);
    assert_eq!(result.candidates.len(), 1);
    let computed = &result.candidates[0].scores;
    eprintln!("acceptance: two judges candidate = {computed}");
    assert_eq!(computed, &v(&["1", "1/6", "1/4", "1/2"]));
    report("two judges end to end", started);
}

/// A rational near `10^t`, `t` uniform in [-1, 1].
fn log_uniform(rng: &mut impl Rng) -> RootedRational {
    let t: f64 = rng.gen_range(-1.0..=1.0);
    let scaled = (10f64.powf(t) * 1000.0).round() as i64;
    RootedRational::from_ratio(scaled, 1000).unwrap()
}

fn random_matrix(rng: &mut impl Rng, n: usize) -> M {
    Matrix::from_fn(n, n, |_, _| log_uniform(rng)).unwrap()
}

/// Maximum of `(cycle product)^(1/length)` over every simple cycle.
fn max_cycle_mean_by_enumeration(a: &M) -> RootedRational {
    fn walk(a: &M, path: &mut Vec<usize>, best: &mut RootedRational) {
        let (start, last) = (path[0], *path.last().unwrap());
        let mut product = BigRational::one();
        for w in path.windows(2) {
            product *= a.get(w[0], w[1]).as_rational().unwrap();
        }
        product *= a.get(last, start).as_rational().unwrap();
        *best = best.add(&RootedRational::new(product, path.len() as u32).unwrap());
        for next in start + 1..a.rows() {
            if !path.contains(&next) {
                path.push(next);
                walk(a, path, best);
                path.pop();
            }
        }
    }
    let mut best = RootedRational::zero();
    for start in 0..a.rows() {
        walk(a, &mut vec![start], &mut best);
    }
    best
}

#[test]
fn spectral_radius_matches_cycle_enumeration() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for case in 0..200 {
        let n = 2 + case % 4;
        let a = random_matrix(&mut rng, n);
        assert_eq!(a.spectral_radius().unwrap(), max_cycle_mean_by_enumeration(&a), "case {case}: {a}");
    }
    report("spectral radius equals enumerated max cycle mean (200 matrices)", started);
}

fn to_floats(a: &M) -> Vec<f64> {
    a.entries().map(|x| x.to_f64()).collect()
}

fn float_rayleigh(a: &[f64], x: &[f64]) -> f64 {
    let n = x.len();
    let mut best = 0f64;
    for i in 0..n {
        for j in 0..n {
            best = best.max(a[i * n + j] * x[j] / x[i]);
        }
    }
    best
}

/// Samples `x_i = k_i / 1000` with `k_i` near `1000 * 10^t`, `t` uniform in
/// [-1, 1], returning the numerators and the float values.
fn sample_vector(rng: &mut impl Rng, numerators: &mut [i64; 4], floats: &mut [f64; 4]) {
    for (k, f) in numerators.iter_mut().zip(floats.iter_mut()) {
        *k = (10f64.powf(rng.gen_range(-1.0..=1.0)) * 1000.0).round() as i64;
        *f = *k as f64 / 1000.0;
    }
}

fn exact_sample(numerators: &[i64; 4]) -> V {
    Vector::new(numerators.iter().map(|&k| RootedRational::from_ratio(k, 1000).unwrap()).collect()).unwrap()
}

/// Float screen: true when `x⁻Ax` clearly exceeds `bound`.
fn clearly_above(af: &[f64], x: &[f64], bound: f64) -> bool {
    float_rayleigh(af, x) > bound * (1.0 + 1e-9)
}

fn float_feasible(c: &[f64], x: &[f64]) -> bool {
    let n = x.len();
    (0..n).all(|i| (0..n).all(|j| c[i * n + j] * x[j] <= x[i]))
}

fn random_constraints(rng: &mut impl Rng, n: usize) -> M {
    loop {
        let c = Matrix::from_fn(n, n, |i, j| {
            if i != j && rng.gen_bool(0.25) {
                let t: f64 = rng.gen_range(-1.0..=0.0);
                RootedRational::from_ratio((10f64.powf(t) * 100.0).round() as i64, 100).unwrap()
            } else {
                RootedRational::zero()
            }
        })
        .unwrap();
        if !c.is_zero() && c.heavy_cycle().unwrap().is_none() {
            return c;
        }
    }
}

#[test]
fn optimality_by_sampling() {
    const INSTANCES: usize = 50;
    const SAMPLES: usize = 100_000;
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let mut feasible_total = 0usize;
    for _ in 0..INSTANCES {
        let a = random_matrix(&mut rng, 4);
        let b = a.add(&a.conjugate_transpose().unwrap()).unwrap();
        let bf = to_floats(&b);
        let c = random_constraints(&mut rng, 4);
        let cf = to_floats(&c);
        let cstar = c.kleene_star().unwrap();
        let cstar_f = to_floats(&cstar);

        let free = minimize_rayleigh(&b).unwrap();
        let bound = minimize_constrained(&b, &c).unwrap();
        assert!(free.optimum.leq(&bound.optimum));
        for col in free.generator.columns() {
            assert_eq!(b.rayleigh(&col).unwrap(), free.optimum);
        }
        for col in bound.generator.columns() {
            assert!(c.mul_vec(&col).unwrap().leq(&col).unwrap());
            assert_eq!(b.rayleigh(&col).unwrap(), bound.optimum);
        }

        let (free_f, bound_f) = (free.optimum.to_f64(), bound.optimum.to_f64());
        let mut numerators = [0i64; 4];
        let mut x = [0f64; 4];
        let mut projected = [0f64; 4];
        for _ in 0..SAMPLES {
            sample_vector(&mut rng, &mut numerators, &mut x);
            if !clearly_above(&bf, &x, free_f) {
                let exact = exact_sample(&numerators);
                assert!(free.optimum.leq(&b.rayleigh(&exact).unwrap()), "{exact}");
            }
            // float feasibility picks candidates; close calls are settled exactly
            if float_feasible(&cf, &x) && !clearly_above(&bf, &x, bound_f) {
                let exact = exact_sample(&numerators);
                if c.mul_vec(&exact).unwrap().leq(&exact).unwrap() {
                    assert!(bound.optimum.leq(&b.rayleigh(&exact).unwrap()), "{exact}");
                }
            }
            if float_feasible(&cf, &x) {
                feasible_total += 1;
            }
            // C*x satisfies Cx <= x exactly, so every projection is a sample
            for i in 0..4 {
                projected[i] = (0..4).map(|j| cstar_f[i * 4 + j] * x[j]).fold(0.0, f64::max);
            }
            feasible_total += 1;
            if !clearly_above(&bf, &projected, bound_f) {
                let exact = cstar.mul_vec(&exact_sample(&numerators)).unwrap();
                assert!(c.mul_vec(&exact).unwrap().leq(&exact).unwrap());
                assert!(bound.optimum.leq(&b.rayleigh(&exact).unwrap()), "{exact}");
            }
        }
    }
    eprintln!("acceptance: {feasible_total} feasible samples checked against theta");
    assert!(feasible_total >= INSTANCES * SAMPLES);
    assert!(started.elapsed() < SAMPLING_BUDGET, "took {:?}", started.elapsed());
    report("optimality sampling (50 instances x 100000 vectors)", started);
}

fn reciprocal_matrix(rng: &mut impl Rng, n: usize) -> M {
    let mut a = M::identity(n).unwrap();
    for i in 0..n {
        for j in i + 1..n {
            let x = log_uniform(rng);
            a.set(j, i, x.inv().unwrap());
            a.set(i, j, x);
        }
    }
    a
}

#[test]
fn identity_and_property_suite() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for case in 0..40 {
        let n = 2 + case % 4;
        let a = random_matrix(&mut rng, n);
        let other = random_matrix(&mut rng, n);
        let i = M::identity(n).unwrap();

        // star fixed point: A* = I ⊕ A A* for A scaled below its radius
        let lambda = a.spectral_radius().unwrap();
        let scaled = a.scale(&lambda.inv().unwrap());
        let star = scaled.kleene_star().unwrap();
        assert_eq!(star, i.add(&scaled.mul(&star).unwrap()).unwrap());

        // trace cyclicity
        assert_eq!(a.mul(&other).unwrap().trace().unwrap(), other.mul(&a).unwrap().trace().unwrap());

        // (A⁻)⁻ = A
        assert_eq!(a.conjugate_transpose().unwrap().conjugate_transpose().unwrap(), a);

        // B reciprocity: reciprocal inputs give a reciprocal B = A; for any
        // positive input B dominates its conjugate, with equality only when
        // the input is reciprocal
        let recip = reciprocal_matrix(&mut rng, n);
        let b_recip = recip.add(&recip.conjugate_transpose().unwrap()).unwrap();
        assert_eq!(b_recip.conjugate_transpose().unwrap(), b_recip);
        assert_eq!(b_recip, recip);
        let b = a.add(&a.conjugate_transpose().unwrap()).unwrap();
        let bt = b.conjugate_transpose().unwrap();
        assert_eq!(b.add(&bt).unwrap(), b);
        assert_eq!(bt == b, a.is_reciprocal());

        // consistent input is recovered with minimum one
        let x = Vector::new((0..n).map(|_| log_uniform(&mut rng)).collect()).unwrap();
        let consistent = rate_single(&M::rank_one(&x).unwrap()).unwrap();
        assert_eq!(consistent.minimum, RootedRational::one());
        assert_eq!(consistent.candidates.len(), 1);
        assert!(x.collinear_factor(&consistent.candidates[0].scores).is_some());

        // C = 0 reduces to the unconstrained problem
        let zero = M::zeros(n, n).unwrap();
        let reduced = minimize_constrained(&b, &zero).unwrap();
        let plain = minimize_rayleigh(&b).unwrap();
        assert_eq!(reduced.optimum, plain.optimum);
        assert_eq!(reduced.generator, plain.generator);

        // every constrained candidate satisfies Cx <= x
        let c = random_constraints(&mut rng, n);
        let result = rate_constrained(&a, &c).unwrap();
        for candidate in &result.candidates {
            let y = &candidate.scores;
            assert!(c.mul_vec(y).unwrap().leq(y).unwrap());
        }
    }
    report("identity and property suite", started);
}

fn to_log2(a: &M) -> Matrix<MaxPlusExact> {
    Matrix::from_fn(a.rows(), a.cols(), |i, j| MaxPlusExact::log2_of(a.get(i, j))).unwrap()
}

fn vector_to_log2(x: &V) -> Vector<MaxPlusExact> {
    Vector::new(x.entries().iter().map(MaxPlusExact::log2_of).collect()).unwrap()
}

#[test]
fn max_plus_parity() {
    let started = Instant::now();
    let a = samples::four_alternatives();
    let c = samples::tied_tail_constraints();
    let log_a = to_log2(&a);
    assert_eq!(log_a.get(0, 2), &MaxPlusExact::parse("1").unwrap());
    assert_eq!(log_a.get(0, 1), &MaxPlusExact::parse("log2(3)").unwrap());

    let times = rate_single(&a).unwrap();
    let plus = rate_single(&log_a).unwrap();
    assert_eq!(plus.minimum, MaxPlusExact::log2_of(&times.minimum));
    assert_eq!(plus.minimum, MaxPlusExact::parse("1").unwrap());
    assert_eq!(plus.solution_space.generator, to_log2(&times.solution_space.generator));
    assert_eq!(plus.candidates.len(), times.candidates.len());
    for (p, t) in plus.candidates.iter().zip(&times.candidates) {
        assert_eq!(p.scores, vector_to_log2(&t.scores));
        assert_eq!(p.ranking, t.ranking);
    }
    let expected = Vector::new(vec![
        MaxPlusExact::parse("0").unwrap(),
        MaxPlusExact::parse("-1").unwrap().mul(&MaxPlusExact::parse("-log2(3)").unwrap()),
        MaxPlusExact::parse("-2").unwrap(),
        MaxPlusExact::parse("-1").unwrap(),
    ])
    .unwrap();
    assert_eq!(plus.candidates[0].scores, expected);

    let times = rate_constrained(&a, &c).unwrap();
    let plus = rate_constrained(&log_a, &to_log2(&c)).unwrap();
    assert_eq!(plus.minimum, MaxPlusExact::parse("2").unwrap());
    assert_eq!(plus.minimum, MaxPlusExact::log2_of(&times.minimum));
    for (p, t) in plus.solution_space.terms.iter().zip(&times.solution_space.terms) {
        assert_eq!(p.exponents, t.exponents);
        assert_eq!(p.value, MaxPlusExact::log2_of(&t.value));
    }
    assert_eq!(plus.solution_space.generator, to_log2(&times.solution_space.generator));
    for (p, t) in plus.candidates.iter().zip(&times.candidates) {
        assert_eq!(p.scores, vector_to_log2(&t.scores));
        assert_eq!(p.uniform, t.uniform);
    }
    let third = plus.solution_space.terms_of_length(3);
    let approx = third.to_f64();
    assert!((approx - 12f64.log2() / 3.0).abs() < 1e-12);
    report("max-plus parity through the log2 isomorphism", started);
}
