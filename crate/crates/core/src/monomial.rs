//! Monomials with cached total degree, and the monomial orders used by the
//! Groebner machinery.

use crate::error::{Error, Result};
use std::cmp::Ordering;
use std::fmt;

/// Exponent vector with cached total degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
    degree: u32,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        let degree = exps.iter().sum();
        Monomial { exps, degree }
    }

    pub fn one(num_vars: usize) -> Self {
        Monomial {
            exps: vec![0; num_vars],
            degree: 0,
        }
    }

    pub fn variable(index: usize, num_vars: usize) -> Self {
        assert!(index < num_vars, "variable index out of range");
        let mut exps = vec![0; num_vars];
        exps[index] = 1;
        Monomial { exps, degree: 1 }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.exps[var]
    }

    pub fn num_vars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.exps.len(), other.exps.len(), "variable count mismatch");
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a + b)
            .collect();
        Monomial {
            exps,
            degree: self.degree + other.degree,
        }
    }

    /// `self / other` when `other` divides `self`.
    pub fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        assert_eq!(self.exps.len(), other.exps.len(), "variable count mismatch");
        if self.degree < other.degree {
            return None;
        }
        let mut exps = Vec::with_capacity(self.exps.len());
        for (a, b) in self.exps.iter().zip(&other.exps) {
            if a < b {
                return None;
            }
            exps.push(a - b);
        }
        Some(Monomial {
            exps,
            degree: self.degree - other.degree,
        })
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        other.try_div(self).is_some()
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.exps.len(), other.exps.len(), "variable count mismatch");
        Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    /// True when the supports are disjoint, i.e. gcd = 1.
    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Total order given by `order`; errors on mismatched variable counts.
    pub fn compare(&self, other: &Monomial, order: MonomialOrder) -> Result<Ordering> {
        if self.exps.len() != other.exps.len() {
            return Err(Error::VariableCountMismatch(
                self.exps.len(),
                other.exps.len(),
            ));
        }
        Ok(self.cmp_by(other, order))
    }

    /// Internal comparison; callers guarantee equal variable counts.
    pub(crate) fn cmp_by(&self, other: &Monomial, order: MonomialOrder) -> Ordering {
        match order {
            MonomialOrder::Grevlex => {
                grevlex_slice(&self.exps, &other.exps, self.degree, other.degree)
            }
            MonomialOrder::Lex => self.exps.cmp(&other.exps),
            MonomialOrder::EliminationBlock(k) => {
                let da: u32 = self.exps[..k].iter().sum();
                let db: u32 = other.exps[..k].iter().sum();
                grevlex_slice(&self.exps[..k], &other.exps[..k], da, db).then_with(|| {
                    grevlex_slice(
                        &self.exps[k..],
                        &other.exps[k..],
                        self.degree - da,
                        other.degree - db,
                    )
                })
            }
        }
    }
}

/// Graded reverse lexicographic comparison of two exponent slices whose
/// total degrees are already known: higher degree wins; on ties the
/// monomial with the *smaller* exponent at the last differing position is
/// the larger one.
fn grevlex_slice(a: &[u32], b: &[u32], da: u32, db: u32) -> Ordering {
    match da.cmp(&db) {
        Ordering::Equal => {}
        ord => return ord,
    }
    for (x, y) in a.iter().zip(b).rev() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{i}")?;
            } else {
                write!(f, "x{i}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Term orders. `EliminationBlock(k)` compares the first `k` variables by
/// grevlex and breaks ties with grevlex on the rest, so the first block is
/// eliminated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Grevlex,
    Lex,
    EliminationBlock(usize),
}

/// All monomials of the given total degree in `num_vars` variables, in a
/// fixed deterministic order (lexicographic on exponent vectors).
pub fn monomials_of_degree(num_vars: usize, degree: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut current = vec![0u32; num_vars];
    fill(&mut out, &mut current, 0, degree);
    out
}

fn fill(out: &mut Vec<Monomial>, current: &mut Vec<u32>, var: usize, remaining: u32) {
    if var + 1 == current.len() {
        current[var] = remaining;
        out.push(Monomial::new(current.clone()));
        current[var] = 0;
        return;
    }
    for e in (0..=remaining).rev() {
        current[var] = e;
        fill(out, current, var + 1, remaining - e);
        current[var] = 0;
    }
}
