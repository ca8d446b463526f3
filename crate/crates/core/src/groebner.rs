//! Division with remainder and Buchberger's algorithm with normal pair
//! selection, the coprime and chain criteria, and full reduction to the
//! unique reduced Groebner basis.

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Polynomial;
use crate::ring::RingContext;
use std::cmp::Ordering;

/// Outcome of multivariate division: `f` equals `sum quotients[i] *
/// divisors[i] + remainder`, and no remainder term is divisible by any
/// divisor's leading monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Division {
    pub quotients: Vec<Polynomial>,
    pub remainder: Polynomial,
}

pub fn divide(f: &Polynomial, divisors: &[Polynomial]) -> Result<Division> {
    for d in divisors {
        if d.ring() != f.ring() {
            return Err(Error::RingMismatch);
        }
        if d.is_zero() {
            return Err(Error::ZeroDivisorPolynomial);
        }
    }
    let refs: Vec<&Polynomial> = divisors.iter().collect();
    let (quotients, remainder) = divide_refs(f, &refs);
    Ok(Division {
        quotients,
        remainder,
    })
}

/// Unchecked core; callers guarantee a common ring and nonzero divisors.
/// Always picks the first divisor whose leading monomial divides, which
/// makes the outcome deterministic in the divisor order.
pub(crate) fn divide_refs(
    f: &Polynomial,
    divisors: &[&Polynomial],
) -> (Vec<Polynomial>, Polynomial) {
    let ring = f.ring();
    let mut quotients = vec![Polynomial::zero(ring); divisors.len()];
    let mut remainder = Polynomial::zero(ring);
    let mut work = f.clone();
    'next_term: while let Some(lt) = work.leading_term() {
        let lc = lt.coeff.clone();
        let lm = lt.mono.clone();
        for (idx, d) in divisors.iter().enumerate() {
            let dlm = d.leading_monomial().expect("divisors are nonzero");
            if let Some(q) = lm.try_div(dlm) {
                let c = lc
                    .div(d.leading_coeff().expect("divisors are nonzero"))
                    .expect("leading coefficients are invertible");
                work = work.merged(&d.mul_term(&c, &q), true);
                quotients[idx].push_term_unchecked(c, q);
                continue 'next_term;
            }
        }
        remainder.push_term_unchecked(lc, lm);
        work.drop_leading_term();
    }
    (quotients, remainder)
}

/// A Groebner basis tied to its ring. Produced reduced: monic elements,
/// pairwise indivisible leading monomials, fully tail-reduced, sorted by
/// ascending degree then descending leading monomial. That form is unique
/// for the ideal and the order, so two ideals are equal exactly when these
/// generator lists are equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: RingContext,
    gens: Vec<Polynomial>,
}

impl GroebnerBasis {
    /// Wraps generators already known to be a reduced basis in canonical
    /// order, e.g. the eliminated block of an intersection computation.
    pub(crate) fn from_reduced_parts(ring: RingContext, gens: Vec<Polynomial>) -> Self {
        GroebnerBasis { ring, gens }
    }

    pub fn ring(&self) -> RingContext {
        self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_constant()
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.gens.iter().filter_map(|g| g.degree()).max()
    }

    /// Normal form of `f` modulo the basis; zero exactly on ideal members.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        if f.ring() != self.ring {
            return Err(Error::RingMismatch);
        }
        let refs: Vec<&Polynomial> = self.gens.iter().collect();
        Ok(divide_refs(f, &refs).1)
    }
}

/// True when `f` lies in the ideal the basis generates.
pub fn ideal_membership(f: &Polynomial, basis: &GroebnerBasis) -> Result<bool> {
    Ok(basis.normal_form(f)?.is_zero())
}

/// Reduced Groebner basis of the ideal the (homogeneous) generators span.
pub fn buchberger(ring: RingContext, gens: &[Polynomial]) -> Result<GroebnerBasis> {
    for g in gens {
        if g.ring() != ring {
            return Err(Error::RingMismatch);
        }
        if !g.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
    }
    buchberger_unchecked(ring, gens)
}

/// Same engine without the homogeneity gate. Ideal intersection runs this
/// on generators that are only homogeneous for a weighting in which the
/// auxiliary variable has degree zero; termination and correctness do not
/// depend on grading, only the degree cap semantics do, and the cap is
/// still enforced on S-pair lcm degrees.
pub(crate) fn buchberger_unchecked(
    ring: RingContext,
    gens: &[Polynomial],
) -> Result<GroebnerBasis> {
    for g in gens {
        if g.ring() != ring {
            return Err(Error::RingMismatch);
        }
    }
    let mut basis: Vec<Polynomial> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.monic())
        .collect();
    let order = ring.order();

    let mut pairs: Vec<Pair> = vec![];
    for j in 1..basis.len() {
        for i in 0..j {
            pairs.push(Pair::new(i, j, &basis));
        }
    }

    while !pairs.is_empty() {
        let mut best = 0;
        for idx in 1..pairs.len() {
            if pairs[idx].precedes(&pairs[best], order) {
                best = idx;
            }
        }
        let pair = pairs.swap_remove(best);

        let lm_i = basis[pair.i].leading_monomial().expect("basis is nonzero");
        let lm_j = basis[pair.j].leading_monomial().expect("basis is nonzero");
        if lm_i.is_coprime(lm_j) {
            continue;
        }
        let chain = (0..basis.len()).any(|k| {
            k != pair.i
                && k != pair.j
                && basis[k]
                    .leading_monomial()
                    .expect("basis is nonzero")
                    .divides(&pair.lcm)
                && !pending(&pairs, pair.i, k)
                && !pending(&pairs, pair.j, k)
        });
        if chain {
            continue;
        }
        if pair.degree > ring.degree_cap() {
            return Err(Error::DegreeCapExceeded {
                degree: pair.degree,
                cap: ring.degree_cap(),
            });
        }

        let a = pair
            .lcm
            .try_div(lm_i)
            .expect("lcm is divisible by both leading monomials");
        let b = pair.lcm.try_div(lm_j).expect("lcm divides");
        let one = ring.field().one();
        let s = basis[pair.i]
            .mul_term(&one, &a)
            .merged(&basis[pair.j].mul_term(&one, &b), true);
        let refs: Vec<&Polynomial> = basis.iter().collect();
        let (_, r) = divide_refs(&s, &refs);
        if !r.is_zero() {
            let t = basis.len();
            basis.push(r.monic());
            for k in 0..t {
                pairs.push(Pair::new(k, t, &basis));
            }
        }
    }

    Ok(GroebnerBasis {
        ring,
        gens: reduce_basis(ring, basis),
    })
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    degree: u32,
}

impl Pair {
    fn new(i: usize, j: usize, basis: &[Polynomial]) -> Self {
        let lcm = basis[i]
            .leading_monomial()
            .expect("basis is nonzero")
            .lcm(basis[j].leading_monomial().expect("basis is nonzero"));
        let degree = lcm.degree();
        Pair { i, j, lcm, degree }
    }

    /// Normal selection: lowest lcm degree first, ties broken by the term
    /// order on the lcm and then by index, keeping runs deterministic.
    fn precedes(&self, other: &Pair, order: MonomialOrder) -> bool {
        self.degree
            .cmp(&other.degree)
            .then_with(|| self.lcm.cmp_by(&other.lcm, order))
            .then_with(|| (self.i, self.j).cmp(&(other.i, other.j)))
            == Ordering::Less
    }
}

fn pending(pairs: &[Pair], a: usize, b: usize) -> bool {
    pairs
        .iter()
        .any(|p| (p.i == a && p.j == b) || (p.i == b && p.j == a))
}

/// Minimalizes (drops elements whose leading monomial another element's
/// divides), tail-reduces each survivor against the others, and sorts
/// canonically.
fn reduce_basis(ring: RingContext, mut basis: Vec<Polynomial>) -> Vec<Polynomial> {
    let order = ring.order();
    basis.sort_by(|a, b| {
        a.leading_monomial()
            .expect("nonzero")
            .cmp_by(b.leading_monomial().expect("nonzero"), order)
    });
    let mut kept: Vec<Polynomial> = vec![];
    for g in basis {
        let lm = g.leading_monomial().expect("nonzero");
        if !kept
            .iter()
            .any(|h| h.leading_monomial().expect("nonzero").divides(lm))
        {
            kept.push(g);
        }
    }
    // One pass of full normal forms suffices: reducibility of a term only
    // depends on the other leading monomials, which no longer change.
    for i in 0..kept.len() {
        let others: Vec<&Polynomial> = kept
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != i)
            .map(|(_, g)| g)
            .collect();
        if others.is_empty() {
            break;
        }
        let (_, r) = divide_refs(&kept[i], &others);
        kept[i] = r;
    }
    kept.sort_by(|a, b| {
        let da = a.degree().expect("nonzero");
        let db = b.degree().expect("nonzero");
        da.cmp(&db).then_with(|| {
            b.leading_monomial()
                .expect("nonzero")
                .cmp_by(a.leading_monomial().expect("nonzero"), order)
        })
    });
    kept
}
