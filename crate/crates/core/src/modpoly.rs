//! Elements of graded free modules S^r with term-over-position and
//! Schreyer orders, module division, and interreduction. Crate-internal:
//! the public resolution API speaks matrices, this file does the work.

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::monomial::{Monomial, MonomialOrder};
use crate::ring::RingContext;
use std::cmp::Ordering;
use std::sync::Arc;

/// coeff * mono * e_comp.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct ModuleTerm {
    pub coeff: FieldElement,
    pub comp: usize,
    pub mono: Monomial,
}

/// Order on module monomials (comp, mono).
///
/// `Top` is term-over-position: the ring order on monomials, lower
/// component index breaking ties. `Schreyer` compares the images
/// mono * lead(g_comp) under the previous level's order, again breaking
/// ties by lower component; by Schreyer's theorem the S-pair syzygies of a
/// basis are a Groebner basis for exactly this induced order.
#[derive(Debug, Clone)]
pub(crate) enum ModuleOrder {
    Top(MonomialOrder),
    Schreyer(Arc<SchreyerLevel>),
}

#[derive(Debug)]
pub(crate) struct SchreyerLevel {
    pub leads: Vec<(usize, Monomial)>,
    pub prev: ModuleOrder,
}

impl ModuleOrder {
    pub fn schreyer_over(basis: &[ModuleElement], prev: &ModuleOrder) -> ModuleOrder {
        let leads = basis
            .iter()
            .map(|b| {
                let lt = b.leading().expect("basis elements are nonzero");
                (lt.comp, lt.mono.clone())
            })
            .collect();
        ModuleOrder::Schreyer(Arc::new(SchreyerLevel {
            leads,
            prev: prev.clone(),
        }))
    }

    pub fn cmp(&self, a: (usize, &Monomial), b: (usize, &Monomial)) -> Ordering {
        match self {
            ModuleOrder::Top(ring_order) => {
                a.1.cmp_by(b.1, *ring_order).then_with(|| b.0.cmp(&a.0))
            }
            ModuleOrder::Schreyer(level) => {
                let (ca, ma) = &level.leads[a.0];
                let (cb, mb) = &level.leads[b.0];
                let image_a = ma.mul(a.1);
                let image_b = mb.mul(b.1);
                level
                    .prev
                    .cmp((*ca, &image_a), (*cb, &image_b))
                    .then_with(|| b.0.cmp(&a.0))
            }
        }
    }
}

/// Element of a free module, terms sorted strictly decreasing under the
/// order it was normalized with.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct ModuleElement {
    ring: RingContext,
    terms: Vec<ModuleTerm>,
}

impl ModuleElement {
    pub fn zero(ring: RingContext) -> Self {
        ModuleElement {
            ring,
            terms: vec![],
        }
    }

    pub fn new(ring: RingContext, terms: Vec<ModuleTerm>, order: &ModuleOrder) -> Self {
        let mut e = ModuleElement { ring, terms };
        e.normalize(order);
        e
    }

    fn normalize(&mut self, order: &ModuleOrder) {
        self.terms
            .sort_by(|a, b| order.cmp((b.comp, &b.mono), (a.comp, &a.mono)));
        let mut merged: Vec<ModuleTerm> = Vec::with_capacity(self.terms.len());
        for t in self.terms.drain(..) {
            match merged.last_mut() {
                Some(last) if last.comp == t.comp && last.mono == t.mono => {
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

    pub fn terms(&self) -> &[ModuleTerm] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&ModuleTerm> {
        self.terms.first()
    }

    /// Merge of two lists sorted under the same order.
    pub fn merged(
        &self,
        other: &ModuleElement,
        negate: bool,
        order: &ModuleOrder,
    ) -> ModuleElement {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let a = &self.terms[i];
            let b = &other.terms[j];
            match order.cmp((a.comp, &a.mono), (b.comp, &b.mono)) {
                Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(ModuleTerm {
                        coeff: if negate {
                            b.coeff.neg()
                        } else {
                            b.coeff.clone()
                        },
                        comp: b.comp,
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
                        out.push(ModuleTerm {
                            coeff,
                            comp: a.comp,
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
            out.push(ModuleTerm {
                coeff: if negate {
                    b.coeff.neg()
                } else {
                    b.coeff.clone()
                },
                comp: b.comp,
                mono: b.mono.clone(),
            });
        }
        ModuleElement {
            ring: self.ring,
            terms: out,
        }
    }

    /// Multiplication by a ring term; sortedness survives because every
    /// order here is multiplicative.
    pub fn mul_term(&self, coeff: &FieldElement, mono: &Monomial) -> ModuleElement {
        if coeff.is_zero() {
            return ModuleElement::zero(self.ring);
        }
        ModuleElement {
            ring: self.ring,
            terms: self
                .terms
                .iter()
                .map(|t| ModuleTerm {
                    coeff: t.coeff.mul(coeff),
                    comp: t.comp,
                    mono: t.mono.mul(mono),
                })
                .collect(),
        }
    }

    pub fn monic(&self) -> ModuleElement {
        match self.leading() {
            None => self.clone(),
            Some(lt) => {
                if lt.coeff.is_one() {
                    self.clone()
                } else {
                    let inv = lt.coeff.inv().expect("nonzero leading coefficient");
                    self.mul_term(&inv, &Monomial::one(self.ring.num_vars()))
                }
            }
        }
    }

    /// Degree with respect to the ambient twists; `None` when zero,
    /// `Err` when inhomogeneous.
    pub fn degree(&self, twists: &[i64]) -> Result<Option<i64>> {
        let mut degree = None;
        for t in &self.terms {
            let d = t.mono.degree() as i64 + twists[t.comp];
            match degree {
                None => degree = Some(d),
                Some(existing) if existing != d => {
                    return Err(Error::Internal("inhomogeneous module element"))
                }
                _ => {}
            }
        }
        Ok(degree)
    }
}

/// Module division: f = sum quotients[i] * divisors[i] + remainder, where
/// a term is reducible when its component matches a divisor's leading
/// component and the leading monomial divides it.
pub(crate) fn divide_module(
    f: &ModuleElement,
    divisors: &[ModuleElement],
    order: &ModuleOrder,
) -> (Vec<crate::poly::Polynomial>, ModuleElement) {
    use crate::poly::Polynomial;
    let ring = f.ring();
    let mut quotients = vec![Polynomial::zero(ring); divisors.len()];
    let mut remainder_terms: Vec<ModuleTerm> = vec![];
    let mut work = f.clone();
    'next: while let Some(lt) = work.leading() {
        let (lc, comp, lm) = (lt.coeff.clone(), lt.comp, lt.mono.clone());
        for (idx, d) in divisors.iter().enumerate() {
            let dl = d.leading().expect("divisors are nonzero");
            if dl.comp != comp {
                continue;
            }
            if let Some(q) = lm.try_div(&dl.mono) {
                let c = lc.div(&dl.coeff).expect("leading coefficients invert");
                work = work.merged(&d.mul_term(&c, &q), true, order);
                // Same-component module comparisons restrict to the ring
                // order on the monomial part, so quotient terms arrive in
                // strictly decreasing ring order.
                quotients[idx].push_term_unchecked(c, q);
                continue 'next;
            }
        }
        remainder_terms.push(ModuleTerm {
            coeff: lc,
            comp,
            mono: lm,
        });
        work.terms.remove(0);
    }
    (
        quotients,
        ModuleElement {
            ring,
            terms: remainder_terms,
        },
    )
}

/// Minimalizes and tail-reduces a set of nonzero elements into a reduced
/// basis of the same submodule: monic, pairwise-indivisible leads, no term
/// reducible by another element. Output is sorted ascending by lead; the
/// caller applies its own canonical sort.
pub(crate) fn interreduce(elems: Vec<ModuleElement>, order: &ModuleOrder) -> Vec<ModuleElement> {
    let mut sorted: Vec<ModuleElement> = elems
        .into_iter()
        .filter(|e| !e.is_zero())
        .map(|e| e.monic())
        .collect();
    sorted.sort_by(|a, b| {
        let la = a.leading().expect("nonzero");
        let lb = b.leading().expect("nonzero");
        order.cmp((la.comp, &la.mono), (lb.comp, &lb.mono))
    });
    let mut kept: Vec<ModuleElement> = vec![];
    for e in sorted {
        let le = e.leading().expect("nonzero");
        let redundant = kept.iter().any(|k| {
            let lk = k.leading().expect("nonzero");
            lk.comp == le.comp && lk.mono.divides(&le.mono)
        });
        if !redundant {
            kept.push(e);
        }
    }
    // One full normal-form pass per element: reducibility depends only on
    // the other leads, which tail reduction leaves alone.
    for i in 0..kept.len() {
        let others: Vec<ModuleElement> = kept
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != i)
            .map(|(_, e)| e.clone())
            .collect();
        if others.is_empty() {
            break;
        }
        let (_, r) = divide_module(&kept[i], &others, order);
        kept[i] = r;
    }
    kept
}

/// The S-pair syzygies of a monic module Groebner basis, normalized under
/// the induced Schreyer order, together with that order. Errors when some
/// S-pair fails to reduce to zero, i.e. the input was not a basis.
pub(crate) fn syzygy_basis(
    basis: &[ModuleElement],
    order: &ModuleOrder,
    ring: RingContext,
) -> Result<(Vec<ModuleElement>, ModuleOrder)> {
    let next_order = ModuleOrder::schreyer_over(basis, order);
    let one = ring.field().one();
    let mut syzygies = vec![];
    for j in 1..basis.len() {
        for i in 0..j {
            let li = basis[i].leading().expect("nonzero");
            let lj = basis[j].leading().expect("nonzero");
            if li.comp != lj.comp {
                continue;
            }
            let lcm = li.mono.lcm(&lj.mono);
            let a = lcm.try_div(&li.mono).expect("lcm divides");
            let b = lcm.try_div(&lj.mono).expect("lcm divides");
            let s = basis[i]
                .mul_term(&one, &a)
                .merged(&basis[j].mul_term(&one, &b), true, order);
            let (q, r) = divide_module(&s, basis, order);
            if !r.is_zero() {
                return Err(Error::NotAModuleBasis);
            }
            // sigma = a e_i - b e_j - sum q_k e_k maps to the S-pair, so
            // it is a syzygy; Schreyer: these generate, with lead a e_i.
            let mut terms = vec![
                ModuleTerm {
                    coeff: one.clone(),
                    comp: i,
                    mono: a,
                },
                ModuleTerm {
                    coeff: one.neg(),
                    comp: j,
                    mono: b,
                },
            ];
            for (k, qk) in q.iter().enumerate() {
                for t in qk.terms() {
                    terms.push(ModuleTerm {
                        coeff: t.coeff.neg(),
                        comp: k,
                        mono: t.mono.clone(),
                    });
                }
            }
            syzygies.push(ModuleElement::new(ring, terms, &next_order));
        }
    }
    Ok((syzygies, next_order))
}
