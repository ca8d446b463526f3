//! Verification suites: the d-regularity bound on arrangement ideals, its
//! sharpness, the linear-ideal variant, the saturation/hyperplane-section
//! equality, and the short-exact-sequence regularity bounds, all run over
//! seeded batches with one report per trial. Reports never include wall
//! time in their rendered or serialized form, so identical seeds give
//! byte-identical output.

use crate::arrangement::{random_arrangement, sharp_example, Arrangement};
use crate::error::{Error, Result};
use crate::field::FieldDescriptor;
use crate::ideal::{generic_nonzerodivisor, random_linear_form, HomogeneousIdeal};
use crate::regularity::{betti_regularity, regularity, Strategy};
use crate::resolution::minimal_resolution;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

/// One verified predicate on one instance. `passed` records the check
/// named in `check`; for bound checks that is computed <= bound, for
/// equality checks computed == bound, with the reading spelled out in
/// `detail`. Wall time is measured but deliberately left out of the
/// serialized record.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub check: String,
    pub instance: String,
    pub computed_regularity: Option<i64>,
    pub bound: Option<i64>,
    pub passed: bool,
    pub strategy_agreement: Option<bool>,
    pub genericity_retries: u32,
    pub detail: String,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl VerificationReport {
    fn failure(check: &str, instance: String, bound: Option<i64>, err: &Error) -> Self {
        VerificationReport {
            check: check.to_string(),
            instance,
            computed_regularity: None,
            bound,
            passed: false,
            strategy_agreement: None,
            genericity_retries: 0,
            detail: format!("error: {err}"),
            wall_time: Duration::ZERO,
        }
    }

    /// One stable line per report; wall time never appears.
    pub fn render_line(&self) -> String {
        let verdict = if self.passed { "pass" } else { "FAIL" };
        let reg = match self.computed_regularity {
            Some(r) => r.to_string(),
            None => "-".to_string(),
        };
        let bound = match self.bound {
            Some(b) => b.to_string(),
            None => "-".to_string(),
        };
        let agreement = match self.strategy_agreement {
            Some(true) => " agree",
            Some(false) => " DISAGREE",
            None => "",
        };
        format!(
            "[{verdict}] {} {} reg={reg} bound={bound}{agreement} retries={} {}",
            self.check, self.instance, self.genericity_retries, self.detail
        )
    }
}

fn arrangement_descriptor(x: &Arrangement, seed: u64) -> String {
    let codims: Vec<usize> = x.subspaces().iter().map(|s| s.codim()).collect();
    format!(
        "n={} d={} codims={:?} seed={}",
        x.ring().projective_dim(),
        x.d(),
        codims,
        seed
    )
}

/// The main bound: the intersection ideal of d subspaces is d-regular.
/// Both regularity routes run; `passed` is reg <= d with exact integers.
pub fn verify_theorem(x: &Arrangement, seed: u64) -> VerificationReport {
    let start = Instant::now();
    let check = "theorem";
    let instance = arrangement_descriptor(x, seed);
    let d = x.d() as i64;
    let outcome = x
        .intersection_ideal()
        .and_then(|ideal| regularity(&ideal, Strategy::Both, seed));
    match outcome {
        Err(e) => VerificationReport::failure(check, instance, Some(d), &e),
        Ok(out) => VerificationReport {
            check: check.to_string(),
            instance,
            computed_regularity: Some(out.regularity),
            bound: Some(d),
            passed: out.regularity <= d,
            strategy_agreement: Some(out.betti == out.hyperplane),
            genericity_retries: out.genericity_retries,
            detail: format!(
                "reg <= d wanted; betti={:?} hyperplane={:?}",
                out.betti, out.hyperplane
            ),
            wall_time: start.elapsed(),
        },
    }
}

/// Sharpness: the d-lines configuration has regularity exactly d and a
/// minimal generator in degree d.
pub fn verify_sharp(d: usize, seed: u64) -> VerificationReport {
    let start = Instant::now();
    let check = "sharp";
    let instance = format!("sharp({d}) seed={seed}");
    let bound = Some(d as i64);
    let run = || -> Result<(i64, i64, u32, u64)> {
        let x = sharp_example(d, seed)?;
        let ideal = x.intersection_ideal()?;
        let table = minimal_resolution(&ideal)?.betti_table();
        let betti_route = table.regularity()?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (hyper_route, retries) = crate::regularity::hyperplane_regularity(&ideal, &mut rng)?;
        let degree_d_generators = table.entry(0, d as i64);
        Ok((betti_route, hyper_route, retries, degree_d_generators))
    };
    match run() {
        Err(e) => VerificationReport::failure(check, instance, bound, &e),
        Ok((betti, hyper, retries, beta0d)) => VerificationReport {
            check: check.to_string(),
            instance,
            computed_regularity: Some(betti),
            bound,
            passed: betti == hyper && betti == d as i64 && beta0d >= 1,
            strategy_agreement: Some(betti == hyper),
            genericity_retries: retries,
            detail: format!("reg == d wanted; beta_{{0,{d}}}={beta0d}"),
            wall_time: start.elapsed(),
        },
    }
}

/// The linear-ideal variant: reg(I(X) + L) <= d for any linear ideal L.
pub fn verify_prop_aux(x: &Arrangement, l: &HomogeneousIdeal, seed: u64) -> VerificationReport {
    let start = Instant::now();
    let check = "prop-aux";
    let l_gens: Vec<String> = l.generators().iter().map(|g| g.to_string()).collect();
    let instance = format!(
        "{} L=({})",
        arrangement_descriptor(x, seed),
        l_gens.join("; ")
    );
    let d = x.d() as i64;
    let outcome = (|| -> Result<_> {
        let height = l.height_linear()?;
        let sum = x.intersection_ideal()?.sum(l)?;
        let out = regularity(&sum, Strategy::Both, seed)?;
        Ok((height, out))
    })();
    match outcome {
        Err(e) => VerificationReport::failure(check, instance, Some(d), &e),
        Ok((height, out)) => VerificationReport {
            check: check.to_string(),
            instance,
            computed_regularity: Some(out.regularity),
            bound: Some(d),
            passed: out.regularity <= d,
            strategy_agreement: Some(out.betti == out.hyperplane),
            genericity_retries: out.genericity_retries,
            detail: format!("reg(I(X) + L) <= d wanted; height(L)={height}"),
            wall_time: start.elapsed(),
        },
    }
}

/// The saturation/hyperplane equality: for x a generic linear form that is
/// a nonzerodivisor modulo I^sat,
/// reg(I) = max(reg(I + (x)), satdeg(I)), with I + (x) resolved in the
/// full ring. Both sides are computed independently via resolutions.
pub fn verify_hyperplane_lemma(ideal: &HomogeneousIdeal, seed: u64) -> VerificationReport {
    let start = Instant::now();
    let check = "hyperplane-lemma";
    let instance = format!("I={ideal} seed={seed}");
    let outcome = (|| -> Result<(i64, i64, u32, u32)> {
        let sat = ideal.saturate()?;
        if sat.is_unit()? {
            return Err(Error::UnitSaturationDegree);
        }
        let satdeg = ideal.saturation_degree(None, false)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (x, draws) = generic_nonzerodivisor(&sat, &mut rng)?;
        let lhs = betti_regularity(ideal)?;
        let principal = HomogeneousIdeal::new(ideal.ring(), vec![x])?;
        let rhs = betti_regularity(&ideal.sum(&principal)?)?;
        Ok((lhs, rhs, satdeg, draws - 1))
    })();
    match outcome {
        Err(e) => VerificationReport::failure(check, instance, None, &e),
        Ok((lhs, rhs, satdeg, retries)) => {
            let expected = rhs.max(i64::from(satdeg));
            VerificationReport {
                check: check.to_string(),
                instance,
                computed_regularity: Some(lhs),
                bound: Some(expected),
                passed: lhs == expected,
                strategy_agreement: None,
                genericity_retries: retries,
                detail: format!("equality wanted; reg(I)={lhs} reg(I+(x))={rhs} satdeg={satdeg}"),
                wall_time: start.elapsed(),
            }
        }
    }
}

/// Regularity bounds along 0 -> I cap (x) -> I (+) (x) -> I + (x) -> 0:
/// with A, B, C the three modules, checks reg(A) <= max(reg B, reg C + 1),
/// reg(B) <= max(reg A, reg C), and, in corrected form,
/// reg(C) <= max(reg A - 1, reg B). Also crosschecks A = (I : x) x.
pub fn verify_ses_bounds(
    ideal: &HomogeneousIdeal,
    x: &crate::poly::Polynomial,
) -> VerificationReport {
    let start = Instant::now();
    let check = "ses";
    let instance = format!("I={ideal} x={x}");
    let outcome = (|| -> Result<(i64, i64, i64, i64, i64, String, bool)> {
        let ring = ideal.ring();
        let principal = HomogeneousIdeal::new(ring, vec![x.clone()])?;
        let a = ideal.intersect(&principal)?;
        let colon = ideal.quotient_by_form(x)?;
        let a_is_colon_product = a.equals(&colon.product(&principal)?)?;
        let reg_a = betti_regularity(&a)?;
        let reg_i = betti_regularity(ideal)?;
        let reg_x = betti_regularity(&principal)?;
        let reg_b = reg_i.max(reg_x);
        let c = ideal.sum(&principal)?;
        if c.is_unit()? {
            return Err(Error::ProperIdealRequired);
        }
        let reg_c = betti_regularity(&c)?;
        // Sixth recorded value: reg(I : x), with A = (I:x)(-1) behind it;
        // "unit" when x already lies in I.
        let reg_colon = if colon.is_unit()? {
            "unit".to_string()
        } else {
            betti_regularity(&colon)?.to_string()
        };
        Ok((
            reg_a,
            reg_i,
            reg_x,
            reg_b,
            reg_c,
            reg_colon,
            a_is_colon_product,
        ))
    })();
    match outcome {
        Err(e) => VerificationReport::failure(check, instance, None, &e),
        Ok((reg_a, reg_i, reg_x, reg_b, reg_c, reg_colon, a_is_colon_product)) => {
            let bound_a = reg_a <= reg_b.max(reg_c + 1);
            let bound_b = reg_b <= reg_a.max(reg_c);
            let bound_c = reg_c <= (reg_a - 1).max(reg_b);
            VerificationReport {
                check: check.to_string(),
                instance,
                computed_regularity: Some(reg_b),
                bound: Some(reg_a.max(reg_c)),
                passed: bound_a && bound_b && bound_c && a_is_colon_product,
                strategy_agreement: None,
                genericity_retries: 0,
                detail: format!(
                    "regA={reg_a} regI={reg_i} regX={reg_x} regB={reg_b} regC={reg_c} \
                     regColon={reg_colon} A=(I:x)x={a_is_colon_product} \
                     boundC-as-corrected={bound_c}"
                ),
                wall_time: start.elapsed(),
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    TheoremRandom,
    Sharp,
    PropAux,
    HyperplaneLemma,
    Ses,
    All,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "theorem-random" => Ok(Suite::TheoremRandom),
            "sharp" => Ok(Suite::Sharp),
            "prop-aux" => Ok(Suite::PropAux),
            "hyperplane-lemma" => Ok(Suite::HyperplaneLemma),
            "ses" => Ok(Suite::Ses),
            "all" => Ok(Suite::All),
            _ => Err(Error::Parse {
                line: 0,
                message: format!(
                    "unknown suite '{s}' (theorem-random, sharp, prop-aux, hyperplane-lemma, ses, all)"
                ),
            }),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::TheoremRandom => "theorem-random",
            Suite::Sharp => "sharp",
            Suite::PropAux => "prop-aux",
            Suite::HyperplaneLemma => "hyperplane-lemma",
            Suite::Ses => "ses",
            Suite::All => "all",
        })
    }
}

/// Batch configuration. Randomized suites run `trials` instances with
/// per-trial seeds base_seed + index; instance shapes (n, d, codimensions)
/// are drawn from those seeds within the configured ceilings, or pinned by
/// `codims` when given. The sharp suite runs d = 2..=max_d.
#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub suite: Suite,
    pub trials: usize,
    pub base_seed: u64,
    pub max_n: usize,
    pub max_d: usize,
    pub codims: Option<Vec<usize>>,
    pub field: FieldDescriptor,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            suite: Suite::All,
            trials: 10,
            base_seed: 0,
            max_n: 3,
            max_d: 3,
            codims: None,
            field: FieldDescriptor::default_prime(),
        }
    }
}

/// Aggregate over one run: every report in trial order plus the counts the
/// exit status is decided by.
#[derive(Debug, Clone)]
pub struct SuiteOutcome {
    pub reports: Vec<VerificationReport>,
    pub passed: usize,
    pub failed: usize,
    pub max_regularity: Option<i64>,
    pub total_wall: Duration,
}

impl SuiteOutcome {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    /// Stable aggregate line (no timing).
    pub fn render_summary(&self) -> String {
        let max_reg = match self.max_regularity {
            Some(m) => m.to_string(),
            None => "-".to_string(),
        };
        format!(
            "{}/{} passed, max regularity {}",
            self.passed,
            self.passed + self.failed,
            max_reg
        )
    }
}

fn trial_shape(config: &SuiteConfig, seed: u64) -> (usize, usize, Vec<usize>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(2..=config.max_n.max(2));
    let d = rng.gen_range(2..=config.max_d.max(2));
    let codims = match &config.codims {
        Some(fixed) => fixed.clone(),
        None => (0..d).map(|_| rng.gen_range(1..=n)).collect(),
    };
    (n, d, codims)
}

fn theorem_trial(config: &SuiteConfig, index: usize) -> VerificationReport {
    let seed = config.base_seed + index as u64;
    let (n, d, codims) = trial_shape(config, seed);
    match random_arrangement(n, d, &codims, config.field, seed) {
        Err(e) => VerificationReport::failure(
            "theorem",
            format!("n={n} d={d} codims={codims:?} seed={seed}"),
            Some(d as i64),
            &e,
        ),
        Ok(x) => verify_theorem(&x, seed),
    }
}

fn prop_aux_trial(config: &SuiteConfig, index: usize) -> VerificationReport {
    let seed = config.base_seed + index as u64;
    let (n, d, codims) = trial_shape(config, seed);
    let build = random_arrangement(n, d, &codims, config.field, seed);
    let x = match build {
        Err(e) => {
            return VerificationReport::failure(
                "prop-aux",
                format!("n={n} d={d} codims={codims:?} seed={seed}"),
                Some(d as i64),
                &e,
            )
        }
        Ok(x) => x,
    };
    let ring = x.ring();
    // Trial 0 is the irrelevant-ideal smoke case (reg exactly 1); later
    // trials draw a random linear ideal, sometimes zero.
    let l = if index == 0 {
        HomogeneousIdeal::irrelevant(ring)
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e3779b97f4a7c15);
        let height = rng.gen_range(0..=ring.num_vars());
        let forms: Result<Vec<_>> = (0..height)
            .map(|_| random_linear_form(ring, &mut rng))
            .collect();
        match forms.and_then(|f| {
            HomogeneousIdeal::new(ring, f.into_iter().filter(|p| !p.is_zero()).collect())
        }) {
            Err(e) => {
                return VerificationReport::failure(
                    "prop-aux",
                    format!("n={n} d={d} codims={codims:?} seed={seed}"),
                    Some(d as i64),
                    &e,
                )
            }
            Ok(l) => l,
        }
    };
    verify_prop_aux(&x, &l, seed)
}

fn hyperplane_trial(config: &SuiteConfig, index: usize) -> VerificationReport {
    let seed = config.base_seed + index as u64;
    let (n, d, codims) = trial_shape(config, seed);
    let outcome = random_arrangement(n, d, &codims, config.field, seed).and_then(|x| {
        // Intersection ideals arrive saturated; odd trials take the
        // product ideal instead, which usually is not, so the satdeg term
        // of the equality is exercised from both sides.
        if index % 2 == 1 {
            x.product_ideal()
        } else {
            x.intersection_ideal()
        }
    });
    match outcome {
        Err(e) => VerificationReport::failure(
            "hyperplane-lemma",
            format!("n={n} d={d} codims={codims:?} seed={seed}"),
            None,
            &e,
        ),
        Ok(ideal) => verify_hyperplane_lemma(&ideal, seed),
    }
}

fn ses_trial(config: &SuiteConfig, index: usize) -> VerificationReport {
    let seed = config.base_seed + index as u64;
    let (n, d, codims) = trial_shape(config, seed);
    let outcome = random_arrangement(n, d, &codims, config.field, seed).and_then(|x| {
        let ideal = x.intersection_ideal()?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x517cc1b727220a95);
        let form = loop {
            let f = random_linear_form(x.ring(), &mut rng)?;
            if !f.is_zero() {
                break f;
            }
        };
        Ok((ideal, form))
    });
    match outcome {
        Err(e) => VerificationReport::failure(
            "ses",
            format!("n={n} d={d} codims={codims:?} seed={seed}"),
            None,
            &e,
        ),
        Ok((ideal, form)) => verify_ses_bounds(&ideal, &form),
    }
}

fn run_one_suite(suite: Suite, config: &SuiteConfig) -> Vec<VerificationReport> {
    match suite {
        Suite::TheoremRandom => (0..config.trials)
            .map(|i| theorem_trial(config, i))
            .collect(),
        Suite::Sharp => (2..=config.max_d)
            .enumerate()
            .map(|(i, d)| verify_sharp(d, config.base_seed + i as u64))
            .collect(),
        Suite::PropAux => (0..config.trials)
            .map(|i| prop_aux_trial(config, i))
            .collect(),
        Suite::HyperplaneLemma => (0..config.trials)
            .map(|i| hyperplane_trial(config, i))
            .collect(),
        Suite::Ses => (0..config.trials).map(|i| ses_trial(config, i)).collect(),
        Suite::All => {
            let mut reports = vec![];
            for s in [
                Suite::TheoremRandom,
                Suite::Sharp,
                Suite::PropAux,
                Suite::HyperplaneLemma,
                Suite::Ses,
            ] {
                reports.extend(run_one_suite(s, config));
            }
            reports
        }
    }
}

/// Runs the configured suite; reports appear in trial order.
pub fn run_suite(config: &SuiteConfig) -> SuiteOutcome {
    let start = Instant::now();
    let reports = run_one_suite(config.suite, config);
    let passed = reports.iter().filter(|r| r.passed).count();
    let failed = reports.len() - passed;
    let max_regularity = reports.iter().filter_map(|r| r.computed_regularity).max();
    SuiteOutcome {
        reports,
        passed,
        failed,
        max_regularity,
        total_wall: start.elapsed(),
    }
}
