//! The acceptance gate: eleven criteria, one test and one printed
//! pass/fail line each (run with `-- --nocapture` to watch them). Every
//! numeric claim is asserted exactly; failures name the instance.

mod common;

use cmreg::monomial::monomials_of_degree;
use cmreg::{
    betti_regularity, buchberger, divide, hyperplane_regularity, ideal_membership,
    minimal_resolution, random_arrangement, regularity, sharp_example, verify_hyperplane_lemma,
    verify_prop_aux, verify_ses_bounds, verify_sharp, verify_theorem, Arrangement, FieldDescriptor,
    HomogeneousIdeal, Polynomial, RingContext, Strategy, Subspace,
};
use common::{koszul_betti, random_homogeneous, PieceOracle};
use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;
use std::time::Instant;

fn conclude(criterion: u32, ok: bool, summary: &str) {
    let verdict = if ok { "PASS" } else { "FAIL" };
    println!("[criterion {criterion:2}] {verdict} - {summary}");
    assert!(ok, "criterion {criterion} failed: {summary}");
}

fn prime_ring(num_vars: usize) -> RingContext {
    RingContext::new(num_vars, FieldDescriptor::default_prime()).unwrap()
}

fn parse_ideal(r: RingContext, gens: &[&str]) -> HomogeneousIdeal {
    HomogeneousIdeal::new(
        r,
        gens.iter()
            .map(|s| cmreg::parse_polynomial(r, s).unwrap())
            .collect(),
    )
    .unwrap()
}

/// Shape used by criteria 1, 4, 7, and 10: n in {2,3,4}, d in {2,3,4},
/// codimensions mixed in 1..=n, all drawn from the trial seed.
fn random_shape(seed: u64) -> (usize, usize, Vec<usize>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(2..=4);
    let d = rng.gen_range(2..=4);
    let codims = (0..d).map(|_| rng.gen_range(1..=n)).collect();
    (n, d, codims)
}

fn theorem_arrangement(seed: u64) -> Arrangement {
    let (n, d, codims) = random_shape(seed);
    random_arrangement(n, d, &codims, FieldDescriptor::default_prime(), seed).unwrap()
}

/// The pool backing criterion 3 (and reused by 10): ideals with known
/// proper saturation, alternating saturated arrangement ideals, their
/// products, and visibly unsaturated constructions.
fn lemma_instance(k: u64) -> (HomogeneousIdeal, String) {
    match k % 4 {
        0 => {
            let x = theorem_arrangement(3000 + k);
            (x.intersection_ideal().unwrap(), format!("arrangement({k})"))
        }
        1 => {
            let x = theorem_arrangement(3000 + k);
            (x.product_ideal().unwrap(), format!("product({k})"))
        }
        2 => {
            // m * J is never saturated: its saturation is J itself.
            let mut rng = ChaCha8Rng::seed_from_u64(7000 + k);
            let n = rng.gen_range(2..=3);
            let d = rng.gen_range(1..=2);
            let codims: Vec<usize> = (0..d).map(|_| rng.gen_range(1..=n)).collect();
            let x = random_arrangement(n, d, &codims, FieldDescriptor::default_prime(), 7000 + k)
                .unwrap();
            let j = x.intersection_ideal().unwrap();
            let m = HomogeneousIdeal::irrelevant(x.ring());
            (m.product(&j).unwrap(), format!("m*arrangement({k})"))
        }
        _ => {
            let r = prime_ring(2 + (k as usize % 2));
            (
                parse_ideal(r, &["x0^2", "x0*x1"]),
                format!("(x0^2, x0*x1) in {} vars", r.num_vars()),
            )
        }
    }
}

#[test]
fn criterion_01_theorem_bound_on_200_random_arrangements() {
    let start = Instant::now();
    let mut max_reg = 0;
    let mut passes = 0;
    for trial in 0..200u64 {
        let seed = 1000 + trial;
        let x = theorem_arrangement(seed);
        let report = verify_theorem(&x, seed);
        assert!(report.passed, "trial {trial}: {}", report.render_line());
        max_reg = max_reg.max(report.computed_regularity.unwrap());
        passes += 1;
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs() < 300,
        "wall time budget exceeded: {elapsed:?}"
    );
    conclude(
        1,
        passes == 200,
        &format!("reg <= d on {passes}/200 random arrangements, max reg {max_reg}, {elapsed:?}"),
    );
}

#[test]
fn criterion_02_sharp_examples_hit_the_bound() {
    let start = Instant::now();
    let mut lines = vec![];
    for d in 2..=5usize {
        let report = verify_sharp(d, d as u64);
        assert!(report.passed, "{}", report.render_line());
        assert_eq!(report.computed_regularity, Some(d as i64));
        lines.push(format!("reg(sharp({d}))={d}"));
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs() < 180,
        "wall time budget exceeded: {elapsed:?}"
    );
    conclude(
        2,
        true,
        &format!(
            "{} with a degree-d minimal generator each, {elapsed:?}",
            lines.join(", ")
        ),
    );
}

#[test]
fn criterion_03_saturation_equality_on_50_instances() {
    let mut passes = 0;
    for k in 0..50u64 {
        let (ideal, label) = lemma_instance(k);
        let report = verify_hyperplane_lemma(&ideal, 5000 + k);
        assert!(report.passed, "{label}: {}", report.render_line());
        passes += 1;
    }
    conclude(
        3,
        passes == 50,
        &format!("reg(I) = max(reg(I+(x)), satdeg I) exactly on {passes}/50 instances"),
    );
}

/// The 20 non-arrangement ideals of criterion 4, also revisited by
/// criterion 10: structured cases with known tables plus random ideals.
fn cross_agreement_extras() -> Vec<(HomogeneousIdeal, String)> {
    let r3 = prime_ring(3);
    let r4 = prime_ring(4);
    let mut extras: Vec<(HomogeneousIdeal, String)> = vec![
        (
            parse_ideal(r4, &["x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"]),
            "twisted cubic".into(),
        ),
        (parse_ideal(r3, &["x0^2", "x0*x1", "x0*x2"]), "x0*m".into()),
        (
            parse_ideal(prime_ring(2), &["x0^2", "x0*x1"]),
            "plane curve with embedded point".into(),
        ),
        (
            HomogeneousIdeal::irrelevant(r3)
                .product(&HomogeneousIdeal::irrelevant(r3))
                .unwrap(),
            "m^2".into(),
        ),
        (
            parse_ideal(r4, &["x0^3 - x1*x2*x3"]),
            "cubic surface".into(),
        ),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(12_000);
    while extras.len() < 20 {
        let r = prime_ring(rng.gen_range(3..=4));
        let count = rng.gen_range(1..=3);
        let gens: Vec<Polynomial> = (0..count)
            .map(|_| loop {
                let f = random_homogeneous(r, rng.gen_range(1..=2), &mut rng);
                if !f.is_zero() {
                    break f;
                }
            })
            .collect();
        extras.push((
            HomogeneousIdeal::new(r, gens).unwrap(),
            format!("random ideal {}", extras.len()),
        ));
    }
    extras
}

#[test]
fn criterion_04_both_routes_agree_on_50_instances() {
    let mut passes = 0;
    // 30 random arrangements plus 20 structured and random ideals that
    // are not arrangement intersections.
    for trial in 0..30u64 {
        let seed = 11_000 + trial;
        let ideal = theorem_arrangement(seed).intersection_ideal().unwrap();
        let out = regularity(&ideal, Strategy::Both, seed).unwrap();
        assert_eq!(out.betti, out.hyperplane, "seed {seed}");
        passes += 1;
    }
    for (k, (ideal, label)) in cross_agreement_extras().iter().enumerate() {
        let betti = betti_regularity(ideal).unwrap();
        let mut route_rng = ChaCha8Rng::seed_from_u64(13_000 + k as u64);
        let (hyper, _) = hyperplane_regularity(ideal, &mut route_rng).unwrap();
        assert_eq!(betti, hyper, "{label}");
        passes += 1;
    }
    conclude(
        4,
        passes == 50,
        &format!("betti and hyperplane routes agree on {passes}/50 instances"),
    );
}

#[test]
fn criterion_05_koszul_tables_are_binomial() {
    fn choose(n: u64, k: u64) -> u64 {
        if k > n {
            return 0;
        }
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }
    for v in 2..=5usize {
        let r = prime_ring(v);
        let table = minimal_resolution(&HomogeneousIdeal::irrelevant(r))
            .unwrap()
            .betti_table();
        let got: BTreeMap<(usize, i64), u64> = table
            .rows()
            .into_iter()
            .map(|(i, j, b)| ((i, j), b))
            .collect();
        let expected: BTreeMap<(usize, i64), u64> = (0..v)
            .map(|i| ((i, i as i64 + 1), choose(v as u64, i as u64 + 1)))
            .collect();
        assert_eq!(got, expected, "v = {v}");
        assert_eq!(table.regularity().unwrap(), 1, "v = {v}");
    }
    conclude(
        5,
        true,
        "Koszul tables for v = 2..5 match the binomial coefficients; reg(m) = 1",
    );
}

fn skew_lines_ideal() -> HomogeneousIdeal {
    let r = prime_ring(4);
    let a = Subspace::new(
        r,
        vec![
            Polynomial::variable(r, 0).unwrap(),
            Polynomial::variable(r, 1).unwrap(),
        ],
    )
    .unwrap();
    let b = Subspace::new(
        r,
        vec![
            Polynomial::variable(r, 2).unwrap(),
            Polynomial::variable(r, 3).unwrap(),
        ],
    )
    .unwrap();
    Arrangement::new(vec![a, b])
        .unwrap()
        .intersection_ideal()
        .unwrap()
}

#[test]
fn criterion_06_skew_lines_match_the_independent_oracle() {
    let ideal = skew_lines_ideal();
    let r = ideal.ring();
    let table = minimal_resolution(&ideal).unwrap().betti_table();
    let engine: BTreeMap<(usize, i64), u64> = table
        .rows()
        .into_iter()
        .map(|(i, j, b)| ((i, j), b))
        .collect();
    let golden: BTreeMap<(usize, i64), u64> = [((0, 2), 4), ((1, 3), 4), ((2, 4), 1)]
        .into_iter()
        .collect();
    assert_eq!(engine, golden);
    assert_eq!(koszul_betti(r, ideal.generators(), 5), golden);
    assert_eq!(table.regularity().unwrap(), 2);
    conclude(
        6,
        true,
        "skew lines: beta = {4, 4, 1} along the reg-2 strand, equal to the Koszul homology oracle",
    );
}

/// Criterion 7's population, revisited by criterion 10: a random
/// arrangement paired with a random linear ideal of height up to n.
fn prop_aux_pair(trial: u64) -> (Arrangement, HomogeneousIdeal) {
    let seed = 21_000 + trial;
    let x = theorem_arrangement(seed);
    let ring = x.ring();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xabcd_ef01);
    let height = rng.gen_range(1..=ring.projective_dim());
    let gens: Vec<Polynomial> = (0..height)
        .map(|_| loop {
            let f = random_homogeneous(ring, 1, &mut rng);
            if !f.is_zero() {
                break f;
            }
        })
        .collect();
    (x, HomogeneousIdeal::new(ring, gens).unwrap())
}

#[test]
fn criterion_07_linear_ideal_variant_on_50_pairs() {
    let mut passes = 0;
    for trial in 0..50u64 {
        let seed = 21_000 + trial;
        let (x, l) = prop_aux_pair(trial);
        let report = verify_prop_aux(&x, &l, seed);
        assert!(report.passed, "trial {trial}: {}", report.render_line());
        passes += 1;
    }
    // The irrelevant-ideal smoke case: reg is exactly 1.
    let x = theorem_arrangement(42);
    let smoke = verify_prop_aux(&x, &HomogeneousIdeal::irrelevant(x.ring()), 42);
    assert!(smoke.passed, "{}", smoke.render_line());
    assert_eq!(smoke.computed_regularity, Some(1));
    conclude(
        7,
        passes == 50,
        &format!("reg(I(X) + L) <= d on {passes}/50 pairs; the L = m case is 1-regular"),
    );
}

#[test]
fn criterion_08_ses_bounds_on_25_instances() {
    let mut passes = 0;
    for trial in 0..25u64 {
        let seed = 31_000 + trial;
        let ideal = theorem_arrangement(seed).intersection_ideal().unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x55aa);
        let x = loop {
            let f = random_homogeneous(ideal.ring(), 1, &mut rng);
            if !f.is_zero() {
                break f;
            }
        };
        let report = verify_ses_bounds(&ideal, &x);
        assert!(report.passed, "trial {trial}: {}", report.render_line());
        passes += 1;
    }
    conclude(
        8,
        passes == 25,
        &format!("all three regularity bounds hold on {passes}/25 sequences"),
    );
}

#[test]
fn criterion_09_groebner_layer_properties() {
    // 1000 division re-expansions.
    let mut rng = ChaCha8Rng::seed_from_u64(41_000);
    for trial in 0..1000 {
        let field = if trial % 10 == 0 {
            FieldDescriptor::Rationals
        } else {
            FieldDescriptor::default_prime()
        };
        let r = RingContext::new(rng.gen_range(2..=4), field).unwrap();
        let divisors: Vec<Polynomial> = (0..rng.gen_range(1..=3))
            .map(|_| loop {
                let f = random_homogeneous(r, rng.gen_range(1..=3), &mut rng);
                if !f.is_zero() {
                    break f;
                }
            })
            .collect();
        let f = random_homogeneous(r, rng.gen_range(1..=4), &mut rng);
        let division = divide(&f, &divisors).unwrap();
        let mut rebuilt = division.remainder.clone();
        for (q, g) in division.quotients.iter().zip(&divisors) {
            rebuilt = rebuilt.add(&q.mul(g).unwrap()).unwrap();
        }
        assert_eq!(rebuilt, f, "re-expansion failed at trial {trial}");
        for t in division.remainder.terms() {
            for g in &divisors {
                assert!(
                    t.mono.try_div(g.leading_monomial().unwrap()).is_none(),
                    "reducible remainder at trial {trial}"
                );
            }
        }
    }

    // 20 pairs of presentations of one ideal: identical reduced bases.
    for pair in 0..20u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(42_000 + pair);
        let r = prime_ring(rng.gen_range(2..=3));
        let gens: Vec<Polynomial> = (0..rng.gen_range(1..=3))
            .map(|_| loop {
                let f = random_homogeneous(r, rng.gen_range(1..=2), &mut rng);
                if !f.is_zero() {
                    break f;
                }
            })
            .collect();
        let first = buchberger(r, &gens).unwrap();
        let target = gens.iter().map(|g| g.degree().unwrap()).max().unwrap() + 1;
        let mut other = gens.clone();
        let mut extra = Polynomial::zero(r);
        for g in &gens {
            let c = r.field().sample(&mut rng);
            let m = monomials_of_degree(r.num_vars(), target - g.degree().unwrap())
                .choose(&mut rng)
                .cloned()
                .unwrap();
            extra = extra
                .add(
                    &g.mul(&Polynomial::from_terms(r, vec![(c, m)]).unwrap())
                        .unwrap(),
                )
                .unwrap();
        }
        if !extra.is_zero() {
            other.push(extra);
        }
        other.shuffle(&mut rng);
        let second = buchberger(r, &other).unwrap();
        assert_eq!(first.generators(), second.generators(), "pair {pair}");
    }

    // 200 membership queries against the graded linear-algebra oracle.
    let mut rng = ChaCha8Rng::seed_from_u64(43_000);
    let mut agreements = 0;
    while agreements < 200 {
        let r = prime_ring(rng.gen_range(2..=3));
        let gens: Vec<Polynomial> = (0..rng.gen_range(1..=2))
            .map(|_| loop {
                let f = random_homogeneous(r, rng.gen_range(1..=3), &mut rng);
                if !f.is_zero() {
                    break f;
                }
            })
            .collect();
        let basis = buchberger(r, &gens).unwrap();
        let mut oracle = PieceOracle::new(r, gens.clone());
        for _ in 0..10 {
            let f = random_homogeneous(r, rng.gen_range(1..=4), &mut rng);
            if f.is_zero() {
                continue;
            }
            assert_eq!(
                ideal_membership(&f, &basis).unwrap(),
                oracle.contains(&f),
                "membership mismatch on {f}"
            );
            agreements += 1;
        }
    }
    conclude(
        9,
        true,
        "1000 division re-expansions, 20 reduced-basis pairs, 200 membership queries",
    );
}

#[test]
fn criterion_10_saturation_properties_on_every_instance() {
    // Every ideal criteria 1-8 ran on, rebuilt from the same seeds: the
    // 200 theorem arrangements, the sharp family, the 50 mixed lemma
    // instances, the 30 + 20 cross-agreement ideals, the irrelevant
    // ideals, the skew lines, the 50 + 1 linear-sum ideals, and the 25
    // sequence ideals. Sums against high-codimension linear ideals can
    // cut out the empty set, so the saturation degree runs under the
    // unit convention (first degree where the ideal fills the ring).
    let start = Instant::now();
    let mut pool: Vec<(HomogeneousIdeal, String)> = vec![];
    for trial in 0..200u64 {
        let seed = 1000 + trial;
        pool.push((
            theorem_arrangement(seed).intersection_ideal().unwrap(),
            format!("criterion-1 arrangement seed {seed}"),
        ));
    }
    for d in 2..=5usize {
        let ideal = sharp_example(d, d as u64)
            .unwrap()
            .intersection_ideal()
            .unwrap();
        let satdeg = ideal.saturation_degree(None, false).unwrap();
        assert_eq!(satdeg, 0, "sharp({d}) must be saturated");
        pool.push((ideal, format!("sharp({d})")));
    }
    for k in 0..50u64 {
        let (ideal, label) = lemma_instance(k);
        pool.push((ideal, label));
    }
    for trial in 0..30u64 {
        let seed = 11_000 + trial;
        pool.push((
            theorem_arrangement(seed).intersection_ideal().unwrap(),
            format!("criterion-4 arrangement seed {seed}"),
        ));
    }
    pool.extend(cross_agreement_extras());
    for v in 2..=5usize {
        pool.push((
            HomogeneousIdeal::irrelevant(prime_ring(v)),
            format!("m in {v} vars"),
        ));
    }
    pool.push((skew_lines_ideal(), "skew lines".into()));
    for trial in 0..50u64 {
        let (x, l) = prop_aux_pair(trial);
        pool.push((
            x.intersection_ideal().unwrap().sum(&l).unwrap(),
            format!("criterion-7 sum trial {trial}"),
        ));
    }
    let smoke = theorem_arrangement(42);
    pool.push((
        smoke
            .intersection_ideal()
            .unwrap()
            .sum(&HomogeneousIdeal::irrelevant(smoke.ring()))
            .unwrap(),
        "criterion-7 smoke sum".into(),
    ));
    for trial in 0..25u64 {
        let seed = 31_000 + trial;
        pool.push((
            theorem_arrangement(seed).intersection_ideal().unwrap(),
            format!("criterion-8 arrangement seed {seed}"),
        ));
    }
    assert_eq!(pool.len(), 385);

    let mut checked = 0;
    for (ideal, label) in &pool {
        let sat = ideal.saturate().unwrap();
        for g in ideal.generators() {
            assert!(sat.contains(g).unwrap(), "{label}: I not inside sat(I)");
        }
        assert!(
            sat.saturate().unwrap().equals(&sat).unwrap(),
            "{label}: saturation not idempotent"
        );
        let satdeg = i64::from(ideal.saturation_degree(None, true).unwrap());
        let reg = betti_regularity(ideal).unwrap();
        assert!(
            reg >= satdeg,
            "{label}: reg {reg} below saturation degree {satdeg}"
        );
        checked += 1;
    }
    conclude(
        10,
        checked == pool.len(),
        &format!(
            "containment, idempotence, and reg >= satdeg on all {checked} instances from criteria 1-8, {:?}",
            start.elapsed()
        ),
    );
}

#[test]
fn criterion_11_verify_all_is_byte_identical() {
    let run = || {
        std::process::Command::new(env!("CARGO_BIN_EXE_cmreg"))
            .args(["verify", "all", "--seed", "7"])
            .output()
            .expect("binary runs")
    };
    let first = run();
    let second = run();
    assert_eq!(first.status.code(), Some(0), "suite must pass");
    assert_eq!(second.status.code(), Some(0));
    assert_eq!(
        first.stdout, second.stdout,
        "reports differ between identically seeded runs"
    );
    conclude(
        11,
        !first.stdout.is_empty(),
        "verify all --seed 7 twice: byte-identical reports",
    );
}
