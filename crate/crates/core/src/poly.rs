//! Multivariate polynomials in canonical form: terms sorted strictly
//! decreasing under the ring's order, no zero coefficients, coefficients
//! canonical for the field.

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::monomial::Monomial;
use crate::ring::RingContext;
use std::cmp::Ordering;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub coeff: FieldElement,
    pub mono: Monomial,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: RingContext,
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero(ring: RingContext) -> Self {
        Polynomial {
            ring,
            terms: vec![],
        }
    }

    pub fn one(ring: RingContext) -> Self {
        Polynomial {
            ring,
            terms: vec![Term {
                coeff: ring.field().one(),
                mono: Monomial::one(ring.num_vars()),
            }],
        }
    }

    pub fn variable(ring: RingContext, index: usize) -> Result<Self> {
        if index >= ring.num_vars() {
            return Err(Error::VariableOutOfRange {
                index,
                num_vars: ring.num_vars(),
            });
        }
        Ok(Polynomial {
            ring,
            terms: vec![Term {
                coeff: ring.field().one(),
                mono: Monomial::variable(index, ring.num_vars()),
            }],
        })
    }

    pub fn constant(ring: RingContext, c: FieldElement) -> Result<Self> {
        if c.descriptor() != ring.field() {
            return Err(Error::FieldMismatch);
        }
        let mut p = Polynomial::zero(ring);
        if !c.is_zero() {
            p.terms.push(Term {
                coeff: c,
                mono: Monomial::one(ring.num_vars()),
            });
        }
        Ok(p)
    }

    /// Builds from arbitrary (coefficient, monomial) pairs: validates them
    /// against the ring, then sorts, merges and drops zeros.
    pub fn from_terms(ring: RingContext, pairs: Vec<(FieldElement, Monomial)>) -> Result<Self> {
        let mut terms = Vec::with_capacity(pairs.len());
        for (coeff, mono) in pairs {
            if coeff.descriptor() != ring.field() {
                return Err(Error::FieldMismatch);
            }
            if mono.num_vars() != ring.num_vars() {
                return Err(Error::VariableCountMismatch(
                    mono.num_vars(),
                    ring.num_vars(),
                ));
            }
            terms.push(Term { coeff, mono });
        }
        let mut p = Polynomial { ring, terms };
        p.normalize();
        Ok(p)
    }

    /// Single-term polynomial; internal because it trusts its inputs.
    pub(crate) fn term(ring: RingContext, coeff: FieldElement, mono: Monomial) -> Self {
        let mut p = Polynomial {
            ring,
            terms: vec![],
        };
        if !coeff.is_zero() {
            p.terms.push(Term { coeff, mono });
        }
        p
    }

    fn normalize(&mut self) {
        let order = self.ring.order();
        self.terms.sort_by(|a, b| b.mono.cmp_by(&a.mono, order));
        let mut merged: Vec<Term> = Vec::with_capacity(self.terms.len());
        for t in self.terms.drain(..) {
            match merged.last_mut() {
                Some(last) if last.mono == t.mono => {
                    last.coeff = last.coeff.add(&t.coeff);
                }
                _ => merged.push(t),
            }
        }
        merged.retain(|t| !t.coeff.is_zero());
        self.terms = merged;
    }

    pub fn ring(&self) -> RingContext {
        self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.mono)
    }

    pub fn leading_coeff(&self) -> Option<&FieldElement> {
        self.terms.first().map(|t| &t.coeff)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.mono.degree()).max()
    }

    /// Zero counts as homogeneous of every degree.
    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some(first) => {
                let d = first.mono.degree();
                self.terms.iter().all(|t| t.mono.degree() == d)
            }
        }
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].mono.is_one()
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.merged(other, false))
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.merged(other, true))
    }

    /// Merge of two canonically sorted term lists.
    pub(crate) fn merged(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let a = &self.terms[i];
            let b = &other.terms[j];
            match a.mono.cmp_by(&b.mono, order) {
                Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                Ordering::Less => {
                    let coeff = if negate {
                        b.coeff.neg()
                    } else {
                        b.coeff.clone()
                    };
                    out.push(Term {
                        coeff,
                        mono: b.mono.clone(),
                    });
                    j += 1;
                }
                Ordering::Equal => {
                    let coeff = if negate {
                        a.coeff.sub(&b.coeff)
                    } else {
                        a.coeff.add(&b.coeff)
                    };
                    if !coeff.is_zero() {
                        out.push(Term {
                            coeff,
                            mono: a.mono.clone(),
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        for b in &other.terms[j..] {
            out.push(Term {
                coeff: if negate {
                    b.coeff.neg()
                } else {
                    b.coeff.clone()
                },
                mono: b.mono.clone(),
            });
        }
        Polynomial {
            ring: self.ring,
            terms: out,
        }
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            ring: self.ring,
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: t.coeff.neg(),
                    mono: t.mono.clone(),
                })
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let mut acc = Polynomial::zero(self.ring);
        for t in &other.terms {
            acc = acc.merged(&self.mul_term(&t.coeff, &t.mono), false);
        }
        Ok(acc)
    }

    /// Multiplication by a single term keeps the sorted invariant because
    /// monomial orders are multiplicative.
    pub(crate) fn mul_term(&self, coeff: &FieldElement, mono: &Monomial) -> Polynomial {
        if coeff.is_zero() {
            return Polynomial::zero(self.ring);
        }
        Polynomial {
            ring: self.ring,
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: t.coeff.mul(coeff),
                    mono: t.mono.mul(mono),
                })
                .collect(),
        }
    }

    pub fn scale(&self, c: &FieldElement) -> Result<Polynomial> {
        if c.descriptor() != self.ring.field() {
            return Err(Error::FieldMismatch);
        }
        Ok(self.mul_term(c, &Monomial::one(self.ring.num_vars())))
    }

    /// Leading coefficient scaled to 1; zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) => {
                if lc.is_one() {
                    self.clone()
                } else {
                    let inv = lc.inv().expect("nonzero leading coefficient");
                    self.mul_term(&inv, &Monomial::one(self.ring.num_vars()))
                }
            }
        }
    }

    /// Appends a term the caller guarantees to be nonzero and strictly
    /// smaller than the current last term, preserving canonical form.
    /// Division algorithms produce terms in exactly that order.
    pub(crate) fn push_term_unchecked(&mut self, coeff: FieldElement, mono: Monomial) {
        debug_assert!(!coeff.is_zero());
        debug_assert!(self
            .terms
            .last()
            .is_none_or(|t| t.mono.cmp_by(&mono, self.ring.order()) == Ordering::Greater));
        self.terms.push(Term { coeff, mono });
    }

    pub(crate) fn drop_leading_term(&mut self) {
        if !self.terms.is_empty() {
            self.terms.remove(0);
        }
    }

    /// Applies the ring map x_i -> images[i] into `target`, where every
    /// image is a linear form or zero. Degree-preserving on homogeneous
    /// input up to cancellation, which is exactly what hyperplane sections
    /// need.
    pub fn substitute(&self, target: RingContext, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.ring.num_vars() {
            return Err(Error::SubstitutionArity {
                expected: self.ring.num_vars(),
                got: images.len(),
            });
        }
        for img in images {
            if img.ring() != target {
                return Err(Error::RingMismatch);
            }
            if !(img.is_zero() || (img.is_homogeneous() && img.degree() == Some(1))) {
                return Err(Error::NonLinearImage);
            }
        }
        if target.field() != self.ring.field() {
            return Err(Error::FieldMismatch);
        }
        let mut acc = Polynomial::zero(target);
        for t in &self.terms {
            let mut factor = Polynomial::constant(target, t.coeff.clone())?;
            for (var, &e) in t.mono.exponents().iter().enumerate() {
                for _ in 0..e {
                    if factor.is_zero() {
                        break;
                    }
                    factor = factor.mul(&images[var])?;
                }
            }
            acc = acc.merged(&factor, false);
        }
        Ok(acc)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            // Rational coefficients can be negative; print them with a
            // binary minus so the output parses back.
            let coeff_str = t.coeff.to_string();
            let (sign, magnitude) = match coeff_str.strip_prefix('-') {
                Some(rest) => (" - ", rest.to_string()),
                None => (" + ", coeff_str),
            };
            if i > 0 {
                write!(f, "{sign}")?;
            } else if sign == " - " {
                write!(f, "-")?;
            }
            if t.mono.is_one() {
                write!(f, "{magnitude}")?;
            } else if magnitude == "1" {
                write!(f, "{}", t.mono)?;
            } else {
                write!(f, "{magnitude}*{}", t.mono)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldDescriptor;
    use crate::textio::parse_polynomial;

    fn ring3() -> RingContext {
        RingContext::new(3, FieldDescriptor::default_prime()).unwrap()
    }

    fn p(ring: RingContext, s: &str) -> Polynomial {
        parse_polynomial(ring, s).unwrap()
    }

    #[test]
    fn canonical_form_merges_and_sorts() {
        let r = ring3();
        let f = Polynomial::from_terms(
            r,
            vec![
                (r.field().from_i64(1), Monomial::new(vec![0, 2, 0])),
                (r.field().from_i64(2), Monomial::new(vec![2, 0, 0])),
                (r.field().from_i64(-1), Monomial::new(vec![0, 2, 0])),
            ],
        )
        .unwrap();
        // The two x1^2 terms cancel; only 2*x0^2 survives.
        assert_eq!(f.terms().len(), 1);
        assert_eq!(f.leading_monomial().unwrap(), &Monomial::new(vec![2, 0, 0]));
    }

    #[test]
    fn arithmetic_round_trip() {
        let r = ring3();
        let f = p(r, "x0 + x1");
        let g = p(r, "x0 - x1");
        let prod = f.mul(&g).unwrap();
        assert_eq!(prod, p(r, "x0^2 - x1^2"));
        assert!(f.sub(&f).unwrap().is_zero());
        assert_eq!(f.add(&g).unwrap(), p(r, "2*x0"));
    }

    #[test]
    fn homogeneity_and_degree() {
        let r = ring3();
        assert!(p(r, "x0^2 + x1*x2").is_homogeneous());
        assert!(!p(r, "x0^2 + x1").is_homogeneous());
        assert!(Polynomial::zero(r).is_homogeneous());
        assert_eq!(Polynomial::zero(r).degree(), None);
        assert_eq!(p(r, "x0^3 + x1").degree(), Some(3));
    }

    #[test]
    fn ring_mismatch_rejected() {
        let r = ring3();
        let s = RingContext::new(2, FieldDescriptor::default_prime()).unwrap();
        let f = Polynomial::one(r);
        let g = Polynomial::one(s);
        assert_eq!(f.add(&g), Err(Error::RingMismatch));
    }

    #[test]
    fn monic_divides_by_leading_coefficient() {
        let r = ring3();
        let f = p(r, "2*x0^2 + 4*x1^2");
        let m = f.monic();
        assert!(m.leading_coeff().unwrap().is_one());
        assert_eq!(m, p(r, "x0^2 + 2*x1^2"));
    }

    #[test]
    fn substitution_specializes_a_variable() {
        let r = ring3();
        let s = RingContext::new(2, FieldDescriptor::default_prime()).unwrap();
        // x0 -> y0, x1 -> y1, x2 -> y0 + y1 (drop into two variables).
        let images = vec![
            Polynomial::variable(s, 0).unwrap(),
            Polynomial::variable(s, 1).unwrap(),
            parse_polynomial(s, "x0 + x1").unwrap(),
        ];
        let f = p(r, "x0*x2 - x1^2");
        let g = f.substitute(s, &images).unwrap();
        assert_eq!(g, parse_polynomial(s, "x0^2 + x0*x1 - x1^2").unwrap());
        // Zero image is allowed: x2 -> 0 kills the first product.
        let images0 = vec![
            Polynomial::variable(s, 0).unwrap(),
            Polynomial::variable(s, 1).unwrap(),
            Polynomial::zero(s),
        ];
        assert_eq!(
            f.substitute(s, &images0).unwrap(),
            parse_polynomial(s, "-x1^2").unwrap()
        );
        // Arity and linearity are enforced.
        assert!(matches!(
            f.substitute(s, &images[..2]),
            Err(Error::SubstitutionArity { .. })
        ));
        let quad = parse_polynomial(s, "x0^2").unwrap();
        assert_eq!(
            f.substitute(s, &[images[0].clone(), images[1].clone(), quad]),
            Err(Error::NonLinearImage)
        );
    }
}
