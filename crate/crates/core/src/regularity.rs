//! Castelnuovo-Mumford regularity of a homogeneous ideal by two
//! independent routes. The betti route reads max(j - i) off the graded
//! Betti numbers of a minimal free resolution of I. The hyperplane route
//! never resolves anything: reg I = max(satdeg I, reg I^sat), and for a
//! linear form h that is a nonzerodivisor on S/I^sat the regularity of
//! I^sat survives restriction to the hyperplane h = 0, so the recursion
//! walks down to rings with fewer variables until the saturation becomes
//! the unit ideal. Running both and comparing is the point: the routes
//! share no machinery beyond Groebner division.
//!
//! All values are regularities of the ideal itself, one more than the
//! regularity of the quotient module S/I it cuts out.

use crate::error::{Error, Result};
use crate::ideal::{generic_nonzerodivisor, HomogeneousIdeal};
use crate::resolution::minimal_resolution;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Betti,
    Hyperplane,
    Both,
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "betti" => Ok(Strategy::Betti),
            "hyperplane" => Ok(Strategy::Hyperplane),
            "both" => Ok(Strategy::Both),
            _ => Err(Error::Parse {
                line: 0,
                message: format!("unknown strategy '{s}' (betti, hyperplane, both)"),
            }),
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::Betti => "betti",
            Strategy::Hyperplane => "hyperplane",
            Strategy::Both => "both",
        })
    }
}

/// What a regularity computation reported: the agreed value, the value per
/// route that ran, and how many extra random draws the hyperplane route
/// needed for its generic forms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularityOutcome {
    pub regularity: i64,
    pub betti: Option<i64>,
    pub hyperplane: Option<i64>,
    pub genericity_retries: u32,
}

/// Regularity read off the minimal free resolution of I.
pub fn betti_regularity(ideal: &HomogeneousIdeal) -> Result<i64> {
    minimal_resolution(ideal)?.betti_table().regularity()
}

/// Regularity by the saturation/hyperplane-section recursion. Returns the
/// value and the number of rejected random linear forms across all levels.
pub fn hyperplane_regularity<R: Rng + ?Sized>(
    ideal: &HomogeneousIdeal,
    rng: &mut R,
) -> Result<(i64, u32)> {
    if ideal.is_zero()? {
        return Err(Error::ZeroIdeal);
    }
    if ideal.is_unit()? {
        return Err(Error::ProperIdealRequired);
    }
    let mut retries = 0u32;
    let value = recurse(ideal, rng, &mut retries)?;
    Ok((value, retries))
}

fn recurse<R: Rng + ?Sized>(
    ideal: &HomogeneousIdeal,
    rng: &mut R,
    retries: &mut u32,
) -> Result<i64> {
    let sat = ideal.saturate()?;
    if sat.is_unit()? {
        // S/I has finite length, so only the saturation gap contributes:
        // the regularity is the first degree where I fills all of S.
        return Ok(i64::from(ideal.saturation_degree_with(&sat, None, true)?));
    }
    let satdeg = i64::from(ideal.saturation_degree_with(&sat, None, false)?);
    let (h, draws) = generic_nonzerodivisor(&sat, rng)?;
    *retries += draws - 1;
    let plus_h = sat.sum(&HomogeneousIdeal::new(ideal.ring(), vec![h.clone()])?)?;
    let section = plus_h.hyperplane_section(&h)?;
    if section.is_zero()? || section.is_unit()? {
        // h a nonzerodivisor forces a nonzero proper section.
        return Err(Error::Internal("degenerate hyperplane section"));
    }
    Ok(satdeg.max(recurse(&section, rng, retries)?))
}

/// Computes regularity by the requested strategy, erroring when both run
/// and disagree. The seed drives every random choice; equal seeds give
/// equal outcomes.
pub fn regularity(
    ideal: &HomogeneousIdeal,
    strategy: Strategy,
    seed: u64,
) -> Result<RegularityOutcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let betti = match strategy {
        Strategy::Betti | Strategy::Both => Some(betti_regularity(ideal)?),
        Strategy::Hyperplane => None,
    };
    let (hyperplane, genericity_retries) = match strategy {
        Strategy::Hyperplane | Strategy::Both => {
            let (v, r) = hyperplane_regularity(ideal, &mut rng)?;
            (Some(v), r)
        }
        Strategy::Betti => (None, 0),
    };
    let regularity = match (betti, hyperplane) {
        (Some(b), Some(h)) if b != h => {
            return Err(Error::StrategyDisagreement {
                betti: b,
                hyperplane: h,
                instance: ideal.to_string(),
            });
        }
        (Some(b), _) => b,
        (None, Some(h)) => h,
        (None, None) => unreachable!("some strategy always runs"),
    };
    Ok(RegularityOutcome {
        regularity,
        betti,
        hyperplane,
        genericity_retries,
    })
}
