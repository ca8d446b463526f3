//! Subspace arrangements in projective space. A subspace is the row space
//! of its defining linear forms; an arrangement is a duplicate-free family
//! of subspaces whose union the intersection ideal cuts out. Also here:
//! seeded random families for batch trials, and the d-lines-through-a-line
//! configuration whose ideal cannot be generated below degree d.

use crate::error::{Error, Result};
use crate::field::FieldDescriptor;
use crate::ideal::{linear_form_coefficients, require_linear_form, HomogeneousIdeal};
use crate::linalg::DenseMatrix;
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::RingContext;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const REDRAW_BUDGET: u32 = 100;

/// A nonempty proper linear subspace of P^n, held as the reduced row
/// echelon basis of the span of its defining forms. Equality is equality
/// of spans, not of presentations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ring: RingContext,
    forms: Vec<Polynomial>,
}

impl Subspace {
    /// Builds the subspace cut out by `forms`, which may be redundant;
    /// the stored basis is canonical. The span's rank (the codimension)
    /// must be between 1 and n for the subspace to be a nonempty proper
    /// subset of P^n.
    pub fn new(ring: RingContext, forms: Vec<Polynomial>) -> Result<Self> {
        for f in &forms {
            require_linear_form(ring, f)?;
        }
        let mut mat = DenseMatrix::new(ring.field(), ring.num_vars());
        for f in &forms {
            mat.push_row(linear_form_coefficients(ring, f));
        }
        let rank = mat.rref();
        let max = ring.projective_dim();
        if rank == 0 || rank > max {
            return Err(Error::BadSubspace { rank, max });
        }
        let forms = mat
            .rows
            .iter()
            .map(|row| coefficients_to_form(ring, row))
            .collect::<Result<Vec<_>>>()?;
        Ok(Subspace { ring, forms })
    }

    pub fn ring(&self) -> RingContext {
        self.ring
    }

    /// The canonical independent forms; their count is the codimension.
    pub fn forms(&self) -> &[Polynomial] {
        &self.forms
    }

    pub fn codim(&self) -> usize {
        self.forms.len()
    }

    /// Dimension as a projective subspace.
    pub fn projective_dim(&self) -> usize {
        self.ring.projective_dim() - self.codim()
    }

    /// The prime linear ideal of the subspace; always saturated, always
    /// 1-regular.
    pub fn ideal(&self) -> HomogeneousIdeal {
        HomogeneousIdeal::new(self.ring, self.forms.clone())
            .expect("canonical forms generate a valid ideal")
    }
}

fn coefficients_to_form(
    ring: RingContext,
    coeffs: &[crate::field::FieldElement],
) -> Result<Polynomial> {
    let pairs = coeffs
        .iter()
        .enumerate()
        .map(|(i, c)| (c.clone(), Monomial::variable(i, ring.num_vars())))
        .collect();
    Polynomial::from_terms(ring, pairs)
}

/// A finite family of pairwise-distinct subspaces of one projective space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrangement {
    ring: RingContext,
    subspaces: Vec<Subspace>,
}

impl Arrangement {
    pub fn new(subspaces: Vec<Subspace>) -> Result<Self> {
        let Some(first) = subspaces.first() else {
            return Err(Error::EmptyArrangement);
        };
        let ring = first.ring();
        for s in &subspaces {
            if s.ring() != ring {
                return Err(Error::RingMismatch);
            }
        }
        for (i, s) in subspaces.iter().enumerate() {
            if subspaces[..i].contains(s) {
                return Err(Error::DuplicateSubspace);
            }
        }
        Ok(Arrangement { ring, subspaces })
    }

    pub fn ring(&self) -> RingContext {
        self.ring
    }

    pub fn subspaces(&self) -> &[Subspace] {
        &self.subspaces
    }

    /// Number of subspaces, the d of the regularity bound.
    pub fn d(&self) -> usize {
        self.subspaces.len()
    }

    /// The defining ideal of the union: the intersection of the
    /// subspaces' prime linear ideals.
    pub fn intersection_ideal(&self) -> Result<HomogeneousIdeal> {
        let ideals: Vec<HomogeneousIdeal> = self.subspaces.iter().map(|s| s.ideal()).collect();
        HomogeneousIdeal::intersect_many(&ideals)
    }

    /// The product of the subspace ideals, contained in the intersection.
    pub fn product_ideal(&self) -> Result<HomogeneousIdeal> {
        let mut iter = self.subspaces.iter();
        let mut acc = iter.next().expect("arrangements are nonempty").ideal();
        for s in iter {
            acc = acc.product(&s.ideal())?;
        }
        Ok(acc)
    }
}

/// A seeded random arrangement of `d` subspaces of P^n. `codims` supplies
/// each subspace's codimension, cycled when shorter than `d`; every entry
/// must lie in 1..=n. Coefficients are drawn uniformly; a subspace is
/// redrawn until its forms are independent with the requested rank and it
/// differs from every earlier one.
pub fn random_arrangement(
    n: usize,
    d: usize,
    codims: &[usize],
    field: FieldDescriptor,
    seed: u64,
) -> Result<Arrangement> {
    let ring = RingContext::new(n + 1, field)?;
    if d == 0 || codims.is_empty() {
        return Err(Error::EmptyArrangement);
    }
    for &c in codims {
        if c == 0 || c > n {
            return Err(Error::BadSubspace { rank: c, max: n });
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut subspaces: Vec<Subspace> = Vec::with_capacity(d);
    for i in 0..d {
        let codim = codims[i % codims.len()];
        let mut found = false;
        for _ in 0..REDRAW_BUDGET {
            let forms = (0..codim)
                .map(|_| random_form(ring, &mut rng))
                .collect::<Result<Vec<_>>>()?;
            let Ok(candidate) = Subspace::new(ring, forms) else {
                continue;
            };
            if candidate.codim() != codim || subspaces.contains(&candidate) {
                continue;
            }
            subspaces.push(candidate);
            found = true;
            break;
        }
        if !found {
            return Err(Error::GenericityExhausted {
                attempts: REDRAW_BUDGET,
            });
        }
    }
    Arrangement::new(subspaces)
}

fn random_form<R: Rng + ?Sized>(ring: RingContext, rng: &mut R) -> Result<Polynomial> {
    let field = ring.field();
    let coeffs: Vec<_> = (0..ring.num_vars()).map(|_| field.sample(rng)).collect();
    coefficients_to_form(ring, &coeffs)
}

/// The line x2 = x3 = 0 in P^3 that the sharp configuration's lines all
/// meet.
pub fn auxiliary_line(ring: RingContext) -> Result<Subspace> {
    let x2 = Polynomial::variable(ring, 2)?;
    let x3 = Polynomial::variable(ring, 3)?;
    Subspace::new(ring, vec![x2, x3])
}

/// An arrangement of `d` lines in P^3 over the default prime field, each
/// meeting the fixed line L = {x2 = x3 = 0} in one of the distinct points
/// [1 : k : 0 : 0], k = 1..=d, with seeded generic directions. L itself is
/// never a member. The union's ideal has regularity exactly d: it needs a
/// minimal generator of degree d, because any form of lower degree
/// vanishing on all the lines restricts to a binary form on L with d roots
/// and so vanishes on L too.
pub fn sharp_example(d: usize, seed: u64) -> Result<Arrangement> {
    let field = FieldDescriptor::default_prime();
    let FieldDescriptor::Prime(p) = field else {
        return Err(Error::Internal("default field is a prime field"));
    };
    if (p as usize) < d {
        return Err(Error::FieldTooSmall {
            d,
            size: u64::from(p),
        });
    }
    let ring = RingContext::new(4, field)?;
    let ell = auxiliary_line(ring)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut lines: Vec<Subspace> = Vec::with_capacity(d);
    for k in 1..=d {
        let point = [
            field.one(),
            field.from_i64(k as i64),
            field.zero(),
            field.zero(),
        ];
        let mut found = false;
        for _ in 0..REDRAW_BUDGET {
            let direction: Vec<_> = (0..4).map(|_| field.sample(&mut rng)).collect();
            let mut mat = DenseMatrix::new(field, 4);
            mat.push_row(point.to_vec());
            mat.push_row(direction);
            let vanishing = mat.nullspace();
            if vanishing.len() != 2 {
                // The direction was proportional to the point.
                continue;
            }
            let forms = vanishing
                .iter()
                .map(|v| coefficients_to_form(ring, v))
                .collect::<Result<Vec<_>>>()?;
            let line = Subspace::new(ring, forms)?;
            if line == ell || lines.contains(&line) {
                continue;
            }
            lines.push(line);
            found = true;
            break;
        }
        if !found {
            return Err(Error::GenericityExhausted {
                attempts: REDRAW_BUDGET,
            });
        }
    }
    Arrangement::new(lines)
}
