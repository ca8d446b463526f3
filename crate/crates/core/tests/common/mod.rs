//! Shared test oracle: graded pieces of a homogeneous ideal worked out
//! degree by degree over the monomial basis, and graded Betti numbers
//! read off the Koszul complex. Deliberately written against the public
//! polynomial layer only, sharing none of the division, Groebner, or
//! syzygy machinery it is used to check.

// Each integration test binary compiles this module and uses its own slice.
#![allow(dead_code)]

use cmreg::monomial::monomials_of_degree;
use cmreg::{FieldElement, Monomial, Polynomial, RingContext};
use rand::Rng;
use std::collections::{BTreeMap, HashMap};

/// Row-reduced span with unit pivots and zeros above them, so membership
/// and coordinates are pivot reads.
pub struct Span {
    width: usize,
    rows: Vec<Vec<FieldElement>>,
    pivots: Vec<usize>,
}

impl Span {
    pub fn new(width: usize) -> Self {
        Span {
            width,
            rows: vec![],
            pivots: vec![],
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &mut [FieldElement]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let c = v[p].clone();
                for (x, r) in v.iter_mut().zip(row) {
                    *x = x.sub(&c.mul(r));
                }
            }
        }
    }

    /// Adds a vector to the span; false when it was already in it.
    pub fn insert(&mut self, mut v: Vec<FieldElement>) -> bool {
        assert_eq!(v.len(), self.width);
        self.reduce(&mut v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].inv().unwrap();
        for x in v.iter_mut() {
            *x = x.mul(&inv);
        }
        for row in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let c = row[p].clone();
                for (x, n) in row.iter_mut().zip(&v) {
                    *x = x.sub(&c.mul(n));
                }
            }
        }
        let at = self
            .pivots
            .iter()
            .position(|&q| q > p)
            .unwrap_or(self.rows.len());
        self.rows.insert(at, v);
        self.pivots.insert(at, p);
        true
    }

    pub fn contains(&self, v: &[FieldElement]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|x| x.is_zero())
    }

    /// Coordinates of `v` in the row basis; None when outside the span.
    pub fn coordinates(&self, v: &[FieldElement]) -> Option<Vec<FieldElement>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn rows(&self) -> &[Vec<FieldElement>] {
        &self.rows
    }
}

/// One graded piece: the monomial basis of S_e and the subspace the
/// generators span there.
pub struct Piece {
    pub monomials: Vec<Monomial>,
    pub index: HashMap<Monomial, usize>,
    pub span: Span,
    pub basis: Vec<Polynomial>,
}

fn poly_vector(
    f: &Polynomial,
    index: &HashMap<Monomial, usize>,
    width: usize,
) -> Vec<FieldElement> {
    let zero = f.ring().field().zero();
    let mut v = vec![zero; width];
    for t in f.terms() {
        v[index[&t.mono]] = t.coeff.clone();
    }
    v
}

fn vector_poly(ring: RingContext, v: &[FieldElement], monomials: &[Monomial]) -> Polynomial {
    let pairs = v
        .iter()
        .zip(monomials)
        .filter(|(c, _)| !c.is_zero())
        .map(|(c, m)| (c.clone(), m.clone()))
        .collect();
    Polynomial::from_terms(ring, pairs).unwrap()
}

/// Degree-by-degree view of the ideal generated by homogeneous `gens`.
pub struct PieceOracle {
    ring: RingContext,
    gens: Vec<Polynomial>,
    pieces: BTreeMap<u32, Piece>,
}

impl PieceOracle {
    pub fn new(ring: RingContext, gens: Vec<Polynomial>) -> Self {
        for g in &gens {
            assert!(g.is_homogeneous() && !g.is_zero());
        }
        PieceOracle {
            ring,
            gens,
            pieces: BTreeMap::new(),
        }
    }

    pub fn ring(&self) -> RingContext {
        self.ring
    }

    pub fn piece(&mut self, e: u32) -> &Piece {
        if !self.pieces.contains_key(&e) {
            let monomials = monomials_of_degree(self.ring.num_vars(), e);
            let index: HashMap<Monomial, usize> = monomials
                .iter()
                .cloned()
                .enumerate()
                .map(|(i, m)| (m, i))
                .collect();
            let mut span = Span::new(monomials.len());
            for g in &self.gens {
                let dg = g.degree().unwrap();
                if dg > e {
                    continue;
                }
                for m in monomials_of_degree(self.ring.num_vars(), e - dg) {
                    let shifted = g
                        .mul(
                            &Polynomial::from_terms(self.ring, vec![(self.ring.field().one(), m)])
                                .unwrap(),
                        )
                        .unwrap();
                    span.insert(poly_vector(&shifted, &index, monomials.len()));
                }
            }
            let basis = span
                .rows()
                .iter()
                .map(|row| vector_poly(self.ring, row, &monomials))
                .collect();
            self.pieces.insert(
                e,
                Piece {
                    monomials,
                    index,
                    span,
                    basis,
                },
            );
        }
        &self.pieces[&e]
    }

    pub fn dim(&mut self, e: u32) -> usize {
        self.piece(e).span.rank()
    }

    /// Membership of a homogeneous polynomial, by linear algebra alone.
    pub fn contains(&mut self, f: &Polynomial) -> bool {
        if f.is_zero() {
            return true;
        }
        assert!(f.is_homogeneous());
        let e = f.degree().unwrap();
        let piece = self.piece(e);
        let v = poly_vector(f, &piece.index, piece.monomials.len());
        piece.span.contains(&v)
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if k > n {
        return vec![];
    }
    let mut out = vec![];
    let mut current: Vec<usize> = (0..k).collect();
    loop {
        out.push(current.clone());
        // Advance to the next k-subset of {0..n-1} in lexicographic order.
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if current[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        current[i] += 1;
        for j in i + 1..k {
            current[j] = current[j - 1] + 1;
        }
    }
}

/// Rank of the Koszul differential from homological level i into level
/// i-1 at internal degree j, for the complex K(x0..x_{nv-1}) (x) I.
fn koszul_rank(oracle: &mut PieceOracle, i: usize, j: i64) -> usize {
    let ring = oracle.ring();
    let nv = ring.num_vars();
    if i == 0 || i > nv {
        return 0;
    }
    let source_piece = j - i as i64;
    let target_piece = source_piece + 1;
    if source_piece < 0 {
        return 0;
    }
    let target_sets = subsets(nv, i - 1);
    let target_pos: HashMap<Vec<usize>, usize> = target_sets
        .iter()
        .cloned()
        .enumerate()
        .map(|(p, s)| (s, p))
        .collect();
    let source_dim = oracle.dim(source_piece as u32);
    let target_dim = oracle.dim(target_piece as u32);
    if source_dim == 0 || target_dim == 0 {
        return 0;
    }
    let source_basis = oracle.piece(source_piece as u32).basis.clone();
    let variables: Vec<Polynomial> = (0..nv)
        .map(|k| Polynomial::variable(ring, k).unwrap())
        .collect();
    let width = target_sets.len() * target_dim;
    let mut image = Span::new(width);
    for set in &subsets(nv, i) {
        for b in &source_basis {
            let mut column = vec![ring.field().zero(); width];
            for (s, &var) in set.iter().enumerate() {
                let product = variables[var].mul(b).unwrap();
                let mut rest = set.clone();
                rest.remove(s);
                let block = target_pos[&rest];
                let target = oracle.piece(target_piece as u32);
                let v = poly_vector(&product, &target.index, target.monomials.len());
                let coords = target
                    .span
                    .coordinates(&v)
                    .expect("multiple of an ideal element stays in the ideal");
                let sign_flip = s % 2 == 1;
                for (t, c) in coords.into_iter().enumerate() {
                    let c = if sign_flip { c.neg() } else { c };
                    let slot = &mut column[block * target_dim + t];
                    *slot = slot.add(&c);
                }
            }
            image.insert(column);
        }
    }
    image.rank()
}

/// Graded Betti numbers of the ideal as a module, from the homology of
/// the Koszul complex tensored with it: beta_{i,j} = dim H_i(K (x) I)_j.
/// Exact but exponential in the variable count; test-scale only.
pub fn koszul_betti(
    ring: RingContext,
    gens: &[Polynomial],
    max_twist: i64,
) -> BTreeMap<(usize, i64), u64> {
    let nv = ring.num_vars();
    let mut oracle = PieceOracle::new(ring, gens.to_vec());
    let mut betti = BTreeMap::new();
    for i in 0..=nv {
        let choose = subsets(nv, i).len();
        for j in 0..=max_twist {
            let piece = j - i as i64;
            if piece < 0 {
                continue;
            }
            let dim_m = oracle.dim(piece as u32);
            let domain = choose * dim_m;
            if domain == 0 {
                continue;
            }
            let kernel = domain - koszul_rank(&mut oracle, i, j);
            let boundary = koszul_rank(&mut oracle, i + 1, j);
            let b = kernel - boundary;
            if b > 0 {
                betti.insert((i, j), b as u64);
            }
        }
    }
    betti
}

/// Random homogeneous polynomial of the given degree; may be zero.
pub fn random_homogeneous<R: Rng + ?Sized>(
    ring: RingContext,
    degree: u32,
    rng: &mut R,
) -> Polynomial {
    let field = ring.field();
    let pairs = monomials_of_degree(ring.num_vars(), degree)
        .into_iter()
        .map(|m| (field.sample(rng), m))
        .collect();
    Polynomial::from_terms(ring, pairs).unwrap()
}
