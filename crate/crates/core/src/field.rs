//! Exact coefficient arithmetic: prime fields F_p and the rationals.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Characteristic used when nothing else is requested.
pub const DEFAULT_PRIME: u32 = 32003;

/// Names a coefficient field: F_p for a prime p < 2^31, or Q.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldDescriptor {
    Prime(u32),
    Rationals,
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    if p.is_multiple_of(2) {
        return p == 2;
    }
    let mut d = 3u64;
    let p = p as u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

impl FieldDescriptor {
    /// Validates that `p` is prime and below 2^31.
    pub fn prime(p: u32) -> Result<Self> {
        if p > (1 << 31) - 1 {
            return Err(Error::CharacteristicTooLarge(p as u64));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldDescriptor::Prime(p))
    }

    pub fn default_prime() -> Self {
        FieldDescriptor::Prime(DEFAULT_PRIME)
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldDescriptor::Prime(p) => *p as u64,
            FieldDescriptor::Rationals => 0,
        }
    }

    pub fn zero(&self) -> FieldElement {
        match self {
            FieldDescriptor::Prime(p) => FieldElement::Fp { val: 0, p: *p },
            FieldDescriptor::Rationals => FieldElement::Rat(BigRational::zero()),
        }
    }

    pub fn one(&self) -> FieldElement {
        match self {
            FieldDescriptor::Prime(p) => FieldElement::Fp { val: 1, p: *p },
            FieldDescriptor::Rationals => FieldElement::Rat(BigRational::one()),
        }
    }

    /// Canonical image of an integer.
    pub fn from_i64(&self, v: i64) -> FieldElement {
        match self {
            FieldDescriptor::Prime(p) => {
                let m = *p as i64;
                FieldElement::Fp {
                    val: v.rem_euclid(m) as u64,
                    p: *p,
                }
            }
            FieldDescriptor::Rationals => FieldElement::Rat(BigRational::from(BigInt::from(v))),
        }
    }

    /// Exact quotient of two integers; errors when `den` maps to zero.
    pub fn from_fraction(&self, num: i64, den: i64) -> Result<FieldElement> {
        self.from_i64(num).div(&self.from_i64(den))
    }

    /// Uniform draw from F_p; over Q a small integer, which is all the
    /// genericity arguments here need.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> FieldElement {
        match self {
            FieldDescriptor::Prime(p) => FieldElement::Fp {
                val: rng.gen_range(0..*p as u64),
                p: *p,
            },
            FieldDescriptor::Rationals => self.from_i64(rng.gen_range(-50..=50)),
        }
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptor::Prime(p) => write!(f, "{p}"),
            FieldDescriptor::Rationals => write!(f, "Q"),
        }
    }
}

impl std::str::FromStr for FieldDescriptor {
    type Err = Error;

    /// Accepts `Q` or a prime, matching `Display`.
    fn from_str(s: &str) -> Result<Self> {
        if s == "Q" {
            return Ok(FieldDescriptor::Rationals);
        }
        let p: u32 = s.parse().map_err(|_| Error::Parse {
            line: 0,
            message: format!("bad field '{s}' (a prime or Q)"),
        })?;
        FieldDescriptor::prime(p)
    }
}

/// An element of a named field. F_p values keep the canonical
/// representative in [0, p); rationals stay reduced with positive
/// denominator (num-rational maintains both).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FieldElement {
    Fp { val: u64, p: u32 },
    Rat(BigRational),
}

/// val * inverse of other mod p via extended Euclid.
fn fp_inv(val: u64, p: u32) -> Result<u64> {
    if val == 0 {
        return Err(Error::ZeroDivisor);
    }
    let (mut r0, mut r1) = (p as i64, val as i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1, "p must be prime");
    Ok(t0.rem_euclid(p as i64) as u64)
}

impl FieldElement {
    pub fn descriptor(&self) -> FieldDescriptor {
        match self {
            FieldElement::Fp { p, .. } => FieldDescriptor::Prime(*p),
            FieldElement::Rat(_) => FieldDescriptor::Rationals,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElement::Fp { val, .. } => *val == 0,
            FieldElement::Rat(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElement::Fp { val, .. } => *val == 1,
            FieldElement::Rat(r) => r.is_one(),
        }
    }

    pub fn add(&self, other: &FieldElement) -> FieldElement {
        match (self, other) {
            (FieldElement::Fp { val: a, p }, FieldElement::Fp { val: b, p: q }) if p == q => {
                FieldElement::Fp {
                    val: (a + b) % *p as u64,
                    p: *p,
                }
            }
            (FieldElement::Rat(a), FieldElement::Rat(b)) => FieldElement::Rat(a + b),
            _ => panic!("field mismatch in add"),
        }
    }

    pub fn sub(&self, other: &FieldElement) -> FieldElement {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> FieldElement {
        match self {
            FieldElement::Fp { val, p } => FieldElement::Fp {
                val: if *val == 0 { 0 } else { *p as u64 - val },
                p: *p,
            },
            FieldElement::Rat(r) => FieldElement::Rat(-r),
        }
    }

    pub fn mul(&self, other: &FieldElement) -> FieldElement {
        match (self, other) {
            (FieldElement::Fp { val: a, p }, FieldElement::Fp { val: b, p: q }) if p == q => {
                FieldElement::Fp {
                    val: (a * b) % *p as u64,
                    p: *p,
                }
            }
            (FieldElement::Rat(a), FieldElement::Rat(b)) => FieldElement::Rat(a * b),
            _ => panic!("field mismatch in mul"),
        }
    }

    pub fn inv(&self) -> Result<FieldElement> {
        match self {
            FieldElement::Fp { val, p } => Ok(FieldElement::Fp {
                val: fp_inv(*val, *p)?,
                p: *p,
            }),
            FieldElement::Rat(r) => {
                if r.is_zero() {
                    Err(Error::ZeroDivisor)
                } else {
                    Ok(FieldElement::Rat(r.recip()))
                }
            }
        }
    }

    pub fn div(&self, other: &FieldElement) -> Result<FieldElement> {
        Ok(self.mul(&other.inv()?))
    }
}

/// Prime-field values print their canonical representative, rationals
/// print `a/b` (or just `a` when integral).
impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Fp { val, .. } => write!(f, "{val}"),
            FieldElement::Rat(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
        }
    }
}

/// Binary operations exposed through the dynamic entry point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Checked arithmetic over a named field. Mixed operands error instead of
/// panicking, which makes this the safe entry point for foreign callers.
pub fn field_arithmetic(
    field: FieldDescriptor,
    a: &FieldElement,
    b: &FieldElement,
    op: FieldOp,
) -> Result<FieldElement> {
    if a.descriptor() != field || b.descriptor() != field {
        return Err(Error::FieldMismatch);
    }
    match op {
        FieldOp::Add => Ok(a.add(b)),
        FieldOp::Sub => Ok(a.sub(b)),
        FieldOp::Mul => Ok(a.mul(b)),
        FieldOp::Div => a.div(b),
    }
}

/// True when the element is the canonical representative for its field.
/// Always true for values built through this module; exists so tests can
/// state the invariant.
pub fn is_canonical(e: &FieldElement) -> bool {
    match e {
        FieldElement::Fp { val, p } => *val < *p as u64,
        FieldElement::Rat(r) => {
            r.denom().is_positive() && num_integer::Integer::gcd(r.numer(), r.denom()).is_one()
        }
    }
}
