//! Homogeneous ideals with a memoized reduced Groebner basis, and the
//! ideal-theoretic operations the regularity algorithms are made of: sums,
//! products, intersections, colon by a form, saturation, Hilbert function
//! pieces, genericity tests and hyperplane sections.

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::groebner::{buchberger, buchberger_unchecked, divide, GroebnerBasis};
use crate::linalg::DenseMatrix;
use crate::monomial::{monomials_of_degree, Monomial, MonomialOrder};
use crate::poly::Polynomial;
use crate::ring::RingContext;
use rand::Rng;
use std::fmt;
use std::sync::OnceLock;

/// A homogeneous ideal of S, carrying its generators and, once computed,
/// its reduced Groebner basis. The basis is the canonical form: ideal
/// equality, membership and Hilbert data all go through it.
#[derive(Debug)]
pub struct HomogeneousIdeal {
    ring: RingContext,
    gens: Vec<Polynomial>,
    gb: OnceLock<Result<GroebnerBasis>>,
}

impl Clone for HomogeneousIdeal {
    fn clone(&self) -> Self {
        HomogeneousIdeal {
            ring: self.ring,
            gens: self.gens.clone(),
            gb: self.gb.clone(),
        }
    }
}

impl HomogeneousIdeal {
    /// Validates that every generator lives in `ring` and is homogeneous;
    /// zero generators are dropped.
    pub fn new(ring: RingContext, gens: Vec<Polynomial>) -> Result<Self> {
        let mut kept = Vec::with_capacity(gens.len());
        for g in gens {
            if g.ring() != ring {
                return Err(Error::RingMismatch);
            }
            if !g.is_homogeneous() {
                return Err(Error::NotHomogeneous);
            }
            if !g.is_zero() {
                kept.push(g);
            }
        }
        Ok(HomogeneousIdeal {
            ring,
            gens: kept,
            gb: OnceLock::new(),
        })
    }

    pub fn zero(ring: RingContext) -> Self {
        HomogeneousIdeal {
            ring,
            gens: vec![],
            gb: OnceLock::new(),
        }
    }

    pub fn unit(ring: RingContext) -> Self {
        HomogeneousIdeal {
            ring,
            gens: vec![Polynomial::one(ring)],
            gb: OnceLock::new(),
        }
    }

    /// The irrelevant maximal ideal (x_0, ..., x_n).
    pub fn irrelevant(ring: RingContext) -> Self {
        let gens = (0..ring.num_vars())
            .map(|i| Polynomial::variable(ring, i).expect("index in range"))
            .collect();
        HomogeneousIdeal {
            ring,
            gens,
            gb: OnceLock::new(),
        }
    }

    /// Adopts an already-computed reduced basis as both generators and
    /// cached basis.
    pub(crate) fn from_groebner(gb: GroebnerBasis) -> Self {
        let ideal = HomogeneousIdeal {
            ring: gb.ring(),
            gens: gb.generators().to_vec(),
            gb: OnceLock::new(),
        };
        ideal.gb.set(Ok(gb)).expect("fresh cell");
        ideal
    }

    pub fn ring(&self) -> RingContext {
        self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn max_generator_degree(&self) -> Option<u32> {
        self.gens.iter().filter_map(|g| g.degree()).max()
    }

    /// The reduced Groebner basis, computed once and cached. Errors (for
    /// example a degree-cap overflow) are cached too.
    pub fn groebner(&self) -> Result<&GroebnerBasis> {
        self.gb
            .get_or_init(|| buchberger(self.ring, &self.gens))
            .as_ref()
            .map_err(|e| e.clone())
    }

    pub fn is_zero(&self) -> Result<bool> {
        if self.gens.is_empty() {
            return Ok(true);
        }
        Ok(self.groebner()?.is_zero_ideal())
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(self.groebner()?.is_unit_ideal())
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.groebner()?.normal_form(f)?.is_zero())
    }

    pub fn contains_ideal(&self, other: &HomogeneousIdeal) -> Result<bool> {
        for g in &other.gens {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Ideal equality through the canonical reduced bases.
    pub fn equals(&self, other: &HomogeneousIdeal) -> Result<bool> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        Ok(self.groebner()?.generators() == other.groebner()?.generators())
    }

    pub fn sum(&self, other: &HomogeneousIdeal) -> Result<HomogeneousIdeal> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        HomogeneousIdeal::new(self.ring, gens)
    }

    pub fn product(&self, other: &HomogeneousIdeal) -> Result<HomogeneousIdeal> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for f in &self.gens {
            for g in &other.gens {
                gens.push(f.mul(g)?);
            }
        }
        HomogeneousIdeal::new(self.ring, gens)
    }

    /// Intersection by the auxiliary-variable trick: I n J is the
    /// eliminated block of t*I + (1-t)*J under an order eliminating t.
    /// The lifted generators are not homogeneous in the total degree, but
    /// they are for the weighting deg t = 0, so every basis element, and
    /// in particular every t-free one, is homogeneous again.
    pub fn intersect(&self, other: &HomogeneousIdeal) -> Result<HomogeneousIdeal> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        let base = self.ring;
        let aux = RingContext::new(base.num_vars() + 1, base.field())?
            .with_order(MonomialOrder::EliminationBlock(1))
            .with_degree_cap(base.degree_cap().saturating_add(2));

        let mut lifted = Vec::new();
        for f in &self.gens {
            lifted.push(lift(aux, f, LiftKind::TimesT)?);
        }
        for g in &other.gens {
            lifted.push(lift(aux, g, LiftKind::TimesOneMinusT)?);
        }
        let gb_aux = buchberger_unchecked(aux, &lifted)?;

        let mut eliminated = Vec::new();
        for g in gb_aux.generators() {
            if g.terms().iter().all(|t| t.mono.exponent(0) == 0) {
                eliminated.push(project(base, g)?);
            }
        }
        // Restricted to t-free monomials the elimination order is grevlex
        // on the remaining block, so when the base ring is grevlex the
        // surviving elements are already its reduced basis.
        if base.order() == MonomialOrder::Grevlex {
            eliminated.sort_by(|a, b| {
                let da = a.degree().expect("nonzero");
                let db = b.degree().expect("nonzero");
                da.cmp(&db).then_with(|| {
                    b.leading_monomial()
                        .expect("nonzero")
                        .cmp_by(a.leading_monomial().expect("nonzero"), base.order())
                })
            });
            Ok(HomogeneousIdeal::from_groebner(
                GroebnerBasis::from_reduced_parts(base, eliminated),
            ))
        } else {
            HomogeneousIdeal::new(base, eliminated)
        }
    }

    pub fn intersect_many(ideals: &[HomogeneousIdeal]) -> Result<HomogeneousIdeal> {
        let mut iter = ideals.iter();
        let Some(first) = iter.next() else {
            return Err(Error::EmptyArrangement);
        };
        let mut acc = first.clone();
        for next in iter {
            acc = acc.intersect(next)?;
        }
        Ok(acc)
    }

    /// The colon ideal (I : f) for a nonzero homogeneous f, computed as
    /// (I n (f)) / f; the division is exact because every generator of the
    /// intersection is a multiple of f.
    pub fn quotient_by_form(&self, f: &Polynomial) -> Result<HomogeneousIdeal> {
        if f.ring() != self.ring {
            return Err(Error::RingMismatch);
        }
        if f.is_zero() {
            return Err(Error::ZeroDivisorPolynomial);
        }
        if !f.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        let principal = HomogeneousIdeal::new(self.ring, vec![f.clone()])?;
        let meet = self.intersect(&principal)?;
        let mut qgens = Vec::with_capacity(meet.gens.len());
        for g in &meet.gens {
            let div = divide(g, std::slice::from_ref(f))?;
            if !div.remainder.is_zero() {
                return Err(Error::Internal("colon division was not exact"));
            }
            qgens.push(div.quotients[0].clone());
        }
        HomogeneousIdeal::new(self.ring, qgens)
    }

    /// Saturation with respect to the irrelevant ideal: iterate
    /// J -> (J : m) = intersection of the (J : x_i) until stable. The
    /// chain is strictly increasing before the fixpoint, so this
    /// terminates.
    pub fn saturate(&self) -> Result<HomogeneousIdeal> {
        let mut current = self.clone();
        loop {
            let mut parts = Vec::with_capacity(self.ring.num_vars());
            for i in 0..self.ring.num_vars() {
                let xi = Polynomial::variable(self.ring, i)?;
                parts.push(current.quotient_by_form(&xi)?);
            }
            let next = HomogeneousIdeal::intersect_many(&parts)?;
            if next.equals(&current)? {
                return Ok(current);
            }
            current = next;
        }
    }

    /// dim_k of the degree-j piece of the ideal, read off the initial
    /// ideal: a monomial is in in(I) exactly when some basis leading
    /// monomial divides it, and dim I_j = dim in(I)_j.
    pub fn graded_piece_dim(&self, degree: u32) -> Result<u64> {
        let leads: Vec<&Monomial> = self
            .groebner()?
            .generators()
            .iter()
            .map(|g| g.leading_monomial().expect("basis is nonzero"))
            .collect();
        let mut count = 0;
        for m in monomials_of_degree(self.ring.num_vars(), degree) {
            if leads.iter().any(|l| l.divides(&m)) {
                count += 1;
            }
        }
        Ok(count)
    }

    /// Hilbert function of the quotient, dim_k (S/I)_j.
    pub fn quotient_piece_dim(&self, degree: u32) -> Result<u64> {
        Ok(self.ring.full_piece_dim(degree) - self.graded_piece_dim(degree)?)
    }

    /// Least degree from which I agrees with its saturation: the least D
    /// with I_j = (I^sat)_j for all j >= D. When the saturation is the
    /// unit ideal that definition would compare against S itself, which
    /// the projective reading of this engine treats as out of scope unless
    /// `unit_convention` opts in; the convention returns the least k with
    /// I_k = S_k.
    ///
    /// `reg_hint`, when the caller already knows the regularity, only
    /// raises the scan ceiling; correctness never depends on it. Once the
    /// piece dimensions agree at a ceiling above every generator degree of
    /// both ideals they agree everywhere above (the quotient I^sat/I is
    /// generated below the ceiling), so the downward scan from a verified
    /// ceiling is exact.
    pub fn saturation_degree(&self, reg_hint: Option<i64>, unit_convention: bool) -> Result<u32> {
        let sat = self.saturate()?;
        self.saturation_degree_with(&sat, reg_hint, unit_convention)
    }

    /// As `saturation_degree`, reusing a saturation the caller has already
    /// computed.
    pub(crate) fn saturation_degree_with(
        &self,
        sat: &HomogeneousIdeal,
        reg_hint: Option<i64>,
        unit_convention: bool,
    ) -> Result<u32> {
        let cap = self.ring.degree_cap();
        if sat.is_unit()? {
            if !unit_convention {
                return Err(Error::UnitSaturationDegree);
            }
            for j in 0..=cap {
                if self.graded_piece_dim(j)? == self.ring.full_piece_dim(j) {
                    return Ok(j);
                }
            }
            return Err(Error::SaturationScanExceeded(cap));
        }

        let hint = reg_hint.unwrap_or(0).max(0) as u32;
        let base = 1 + self
            .max_generator_degree()
            .unwrap_or(0)
            .max(sat.max_generator_degree().unwrap_or(0))
            .max(hint);
        let mut ceiling = base;
        loop {
            if self.graded_piece_dim(ceiling)? == sat.graded_piece_dim(ceiling)? {
                break;
            }
            ceiling += 1;
            if ceiling > base + 2 * cap {
                return Err(Error::SaturationScanExceeded(ceiling));
            }
        }
        debug_assert_eq!(
            self.graded_piece_dim(ceiling + 1)?,
            sat.graded_piece_dim(ceiling + 1)?,
            "agreement at the ceiling must propagate upward"
        );
        for j in (0..ceiling).rev() {
            if self.graded_piece_dim(j)? != sat.graded_piece_dim(j)? {
                return Ok(j + 1);
            }
        }
        Ok(0)
    }

    /// True when the linear form x is a nonzerodivisor on S/I, i.e.
    /// (I : x) = I. Requires I proper.
    pub fn is_nonzerodivisor(&self, x: &Polynomial) -> Result<bool> {
        require_linear_form(self.ring, x)?;
        if self.is_unit()? {
            return Err(Error::ProperIdealRequired);
        }
        self.quotient_by_form(x)?.equals(self)
    }

    /// The image of I in S/(x) under a variable-eliminating change of
    /// coordinates, as an ideal in a ring with one variable fewer. `x`
    /// must be a nonzero linear form. The last variable with a nonzero
    /// coefficient is solved for, which keeps the map deterministic.
    pub fn hyperplane_section(&self, x: &Polynomial) -> Result<HomogeneousIdeal> {
        require_linear_form(self.ring, x)?;
        if self.ring.num_vars() < 2 {
            return Err(Error::RingTooSmall);
        }
        let target_order = match self.ring.order() {
            MonomialOrder::EliminationBlock(_) => MonomialOrder::Grevlex,
            keep => keep,
        };
        let target = RingContext::new(self.ring.num_vars() - 1, self.ring.field())?
            .with_order(target_order)
            .with_degree_cap(self.ring.degree_cap());

        let coeffs = linear_form_coefficients(self.ring, x);
        let pivot = coeffs
            .iter()
            .rposition(|c| !c.is_zero())
            .expect("x is nonzero");
        // Variables other than the pivot map to the target variables in
        // order; the pivot maps to -(1/c_pivot) * sum of the rest.
        let mut images: Vec<Polynomial> = Vec::with_capacity(self.ring.num_vars());
        let mut target_index = 0usize;
        let mut positions = vec![0usize; self.ring.num_vars()];
        for (i, slot) in positions.iter_mut().enumerate() {
            if i != pivot {
                *slot = target_index;
                target_index += 1;
            }
        }
        let inv = coeffs[pivot].inv().expect("pivot coefficient is nonzero");
        for i in 0..self.ring.num_vars() {
            if i == pivot {
                let mut acc = Polynomial::zero(target);
                for (k, c) in coeffs.iter().enumerate() {
                    if k == pivot || c.is_zero() {
                        continue;
                    }
                    let scaled =
                        Polynomial::variable(target, positions[k])?.scale(&c.mul(&inv).neg())?;
                    acc = acc.add(&scaled)?;
                }
                images.push(acc);
            } else {
                images.push(Polynomial::variable(target, positions[i])?);
            }
        }

        let mut gens = Vec::with_capacity(self.gens.len());
        for g in &self.gens {
            gens.push(g.substitute(target, &images)?);
        }
        HomogeneousIdeal::new(target, gens)
    }

    /// Height (codimension) of an ideal generated by linear forms: the
    /// rank of the coefficient matrix. Errors on any nonlinear generator.
    pub fn height_linear(&self) -> Result<usize> {
        let mut mat = DenseMatrix::new(self.ring.field(), self.ring.num_vars());
        for g in &self.gens {
            if g.degree() != Some(1) {
                return Err(Error::NotLinear);
            }
            mat.push_row(linear_form_coefficients(self.ring, g));
        }
        Ok(mat.rank())
    }
}

impl fmt::Display for HomogeneousIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        if self.gens.is_empty() {
            write!(f, "0")?;
        }
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

enum LiftKind {
    TimesT,
    TimesOneMinusT,
}

/// Maps f into the auxiliary ring with the new variable t in front,
/// multiplied by t or by (1 - t).
fn lift(aux: RingContext, f: &Polynomial, kind: LiftKind) -> Result<Polynomial> {
    let mut pairs = Vec::new();
    for term in f.terms() {
        let mut with_t = vec![1u32];
        with_t.extend_from_slice(term.mono.exponents());
        match kind {
            LiftKind::TimesT => {
                pairs.push((term.coeff.clone(), Monomial::new(with_t)));
            }
            LiftKind::TimesOneMinusT => {
                let mut plain = vec![0u32];
                plain.extend_from_slice(term.mono.exponents());
                pairs.push((term.coeff.clone(), Monomial::new(plain)));
                pairs.push((term.coeff.neg(), Monomial::new(with_t)));
            }
        }
    }
    Polynomial::from_terms(aux, pairs)
}

/// Drops the auxiliary first variable from a t-free polynomial.
fn project(base: RingContext, g: &Polynomial) -> Result<Polynomial> {
    let mut pairs = Vec::with_capacity(g.terms().len());
    for term in g.terms() {
        debug_assert_eq!(term.mono.exponent(0), 0);
        pairs.push((
            term.coeff.clone(),
            Monomial::new(term.mono.exponents()[1..].to_vec()),
        ));
    }
    Polynomial::from_terms(base, pairs)
}

pub(crate) fn require_linear_form(ring: RingContext, x: &Polynomial) -> Result<()> {
    if x.ring() != ring {
        return Err(Error::RingMismatch);
    }
    if x.is_zero() || !x.is_homogeneous() || x.degree() != Some(1) {
        return Err(Error::NotLinearForm);
    }
    Ok(())
}

/// Coefficient vector of a form of degree <= 1 (constant part ignored).
pub(crate) fn linear_form_coefficients(ring: RingContext, f: &Polynomial) -> Vec<FieldElement> {
    let mut coeffs = vec![ring.field().zero(); ring.num_vars()];
    for term in f.terms() {
        if term.mono.degree() != 1 {
            continue;
        }
        let var = term
            .mono
            .exponents()
            .iter()
            .position(|&e| e == 1)
            .expect("degree-one monomial");
        coeffs[var] = term.coeff.clone();
    }
    coeffs
}

/// Draws random linear forms until one avoids every listed ideal, with a
/// fixed attempt budget. Returns the form and the number of draws used.
pub fn generic_linear_form<R: Rng + ?Sized>(
    ring: RingContext,
    avoid: &[&HomogeneousIdeal],
    rng: &mut R,
) -> Result<(Polynomial, u32)> {
    const BUDGET: u32 = 100;
    for attempt in 1..=BUDGET {
        let x = random_linear_form(ring, rng)?;
        if x.is_zero() {
            continue;
        }
        let mut good = true;
        for ideal in avoid {
            if ideal.contains(&x)? {
                good = false;
                break;
            }
        }
        if good {
            return Ok((x, attempt));
        }
    }
    Err(Error::GenericityExhausted { attempts: BUDGET })
}

/// Draws random linear forms until one is a nonzerodivisor on S/I, with a
/// fixed attempt budget. Returns the form and the number of draws used.
pub fn generic_nonzerodivisor<R: Rng + ?Sized>(
    ideal: &HomogeneousIdeal,
    rng: &mut R,
) -> Result<(Polynomial, u32)> {
    const BUDGET: u32 = 100;
    for attempt in 1..=BUDGET {
        let x = random_linear_form(ideal.ring(), rng)?;
        if x.is_zero() {
            continue;
        }
        if ideal.is_nonzerodivisor(&x)? {
            return Ok((x, attempt));
        }
    }
    Err(Error::GenericityExhausted { attempts: BUDGET })
}

pub fn random_linear_form<R: Rng + ?Sized>(ring: RingContext, rng: &mut R) -> Result<Polynomial> {
    let field = ring.field();
    let mut pairs = Vec::with_capacity(ring.num_vars());
    for i in 0..ring.num_vars() {
        pairs.push((field.sample(rng), Monomial::variable(i, ring.num_vars())));
    }
    Polynomial::from_terms(ring, pairs)
}
