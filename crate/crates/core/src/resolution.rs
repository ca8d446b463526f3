//! Graded free resolutions. Schreyer's construction needs one ring-level
//! Groebner basis: each level's S-pair syzygies are automatically a basis
//! for the induced order, so the tower is division work only. Explicit
//! unit cancellation then minimalizes, and the twists of the minimal
//! resolution are the graded Betti numbers.

use crate::error::{Error, Result};
use crate::ideal::HomogeneousIdeal;
use crate::modpoly::{interreduce, syzygy_basis, ModuleElement, ModuleOrder, ModuleTerm};
use crate::monomial::MonomialOrder;
use crate::poly::Polynomial;
use crate::ring::RingContext;
use std::collections::BTreeMap;
use std::fmt;

/// A graded free module, recorded as the degrees of its generators:
/// twists [d_0, ..., d_{r-1}] is S(-d_0) + ... + S(-d_{r-1}).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeModuleSpec {
    twists: Vec<i64>,
}

impl FreeModuleSpec {
    pub fn new(twists: Vec<i64>) -> Self {
        FreeModuleSpec { twists }
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    pub fn twists(&self) -> &[i64] {
        &self.twists
    }
}

/// A degree-zero map between graded free modules. Columns are the images
/// of the source generators: entry (i, j) is the e_i coordinate of the
/// image of the j-th source generator, homogeneous of degree
/// source[j] - target[i].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedMatrix {
    ring: RingContext,
    source: FreeModuleSpec,
    target: FreeModuleSpec,
    entries: Vec<Vec<Polynomial>>,
}

impl GradedMatrix {
    pub fn new(
        ring: RingContext,
        source: FreeModuleSpec,
        target: FreeModuleSpec,
        entries: Vec<Vec<Polynomial>>,
    ) -> Result<Self> {
        if entries.len() != target.rank() {
            return Err(Error::Internal("graded matrix has wrong row count"));
        }
        for (i, row) in entries.iter().enumerate() {
            if row.len() != source.rank() {
                return Err(Error::Internal("graded matrix has a ragged row"));
            }
            for (j, entry) in row.iter().enumerate() {
                if entry.ring() != ring {
                    return Err(Error::RingMismatch);
                }
                if entry.is_zero() {
                    continue;
                }
                let expected = source.twists[j] - target.twists[i];
                if !entry.is_homogeneous() || entry.degree().map(i64::from) != Some(expected) {
                    return Err(Error::DegreeIncompatible {
                        row: i,
                        col: j,
                        expected,
                    });
                }
            }
        }
        Ok(GradedMatrix {
            ring,
            source,
            target,
            entries,
        })
    }

    pub fn ring(&self) -> RingContext {
        self.ring
    }

    pub fn source(&self) -> &FreeModuleSpec {
        &self.source
    }

    pub fn target(&self) -> &FreeModuleSpec {
        &self.target
    }

    pub fn entries(&self) -> &[Vec<Polynomial>] {
        &self.entries
    }

    pub fn entry(&self, row: usize, col: usize) -> &Polynomial {
        &self.entries[row][col]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(|e| e.is_zero())
    }

    /// self after other: for self: F -> G and other: E -> F this is the
    /// composite E -> G.
    pub fn compose(&self, other: &GradedMatrix) -> Result<GradedMatrix> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        if self.source != other.target {
            return Err(Error::Internal("composition shape mismatch"));
        }
        let rows = self.target.rank();
        let cols = other.source.rank();
        let mut entries = vec![vec![Polynomial::zero(self.ring); cols]; rows];
        for (i, row) in entries.iter_mut().enumerate() {
            for (j, slot) in row.iter_mut().enumerate() {
                let mut acc = Polynomial::zero(self.ring);
                for k in 0..self.source.rank() {
                    acc = acc.add(&self.entries[i][k].mul(&other.entries[k][j])?)?;
                }
                *slot = acc;
            }
        }
        GradedMatrix::new(
            self.ring,
            other.source.clone(),
            self.target.clone(),
            entries,
        )
    }
}

/// A free resolution of an ideal I: the augmentation maps F_0 onto I
/// inside S, and differentials[k] is d_{k+1}: F_{k+1} -> F_k. Columns of
/// every matrix generate the kernel of the previous map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Resolution {
    ring: RingContext,
    augmentation: GradedMatrix,
    differentials: Vec<GradedMatrix>,
}

impl Resolution {
    pub fn ring(&self) -> RingContext {
        self.ring
    }

    pub fn augmentation(&self) -> &GradedMatrix {
        &self.augmentation
    }

    pub fn differentials(&self) -> &[GradedMatrix] {
        &self.differentials
    }

    /// Length = index of the last free module F_length.
    pub fn length(&self) -> usize {
        self.differentials.len()
    }

    /// F_0, F_1, ..., F_length.
    pub fn modules(&self) -> Vec<&FreeModuleSpec> {
        let mut out = vec![self.augmentation.source()];
        for d in &self.differentials {
            out.push(d.source());
        }
        out
    }

    /// Minimal means no differential has a unit entry; the augmentation
    /// never does (its entries generate a proper ideal).
    pub fn is_minimal(&self) -> bool {
        self.differentials
            .iter()
            .flat_map(|d| d.entries().iter().flatten())
            .all(|e| !e.is_constant())
    }

    /// Checks d_k compose d_{k+1} = 0 for every consecutive pair,
    /// including the augmentation.
    pub fn verify_complex(&self) -> Result<bool> {
        let mut prev = &self.augmentation;
        for d in &self.differentials {
            if !prev.compose(d)?.is_zero() {
                return Ok(false);
            }
            prev = d;
        }
        Ok(true)
    }

    pub fn betti_table(&self) -> BettiTable {
        let mut entries = BTreeMap::new();
        for (i, module) in self.modules().iter().enumerate() {
            for &j in module.twists() {
                *entries.entry((i, j)).or_insert(0u64) += 1;
            }
        }
        BettiTable { entries }
    }
}

fn poly_to_element(
    ring: RingContext,
    p: &Polynomial,
    comp: usize,
    order: &ModuleOrder,
) -> ModuleElement {
    ModuleElement::new(
        ring,
        p.terms()
            .iter()
            .map(|t| ModuleTerm {
                coeff: t.coeff.clone(),
                comp,
                mono: t.mono.clone(),
            })
            .collect(),
        order,
    )
}

/// Splits elements of S^r into a matrix over the ambient twists, reading
/// each element's degree off its terms.
fn element_matrix(
    ring: RingContext,
    elements: &[ModuleElement],
    ambient: &[i64],
) -> Result<GradedMatrix> {
    let mut source = Vec::with_capacity(elements.len());
    for e in elements {
        let d = e
            .degree(ambient)?
            .ok_or(Error::Internal("zero column in differential"))?;
        source.push(d);
    }
    let mut entries = vec![vec![Polynomial::zero(ring); elements.len()]; ambient.len()];
    for (j, e) in elements.iter().enumerate() {
        let mut per_comp: BTreeMap<usize, Vec<_>> = BTreeMap::new();
        for t in e.terms() {
            per_comp
                .entry(t.comp)
                .or_default()
                .push((t.coeff.clone(), t.mono.clone()));
        }
        for (comp, pairs) in per_comp {
            entries[comp][j] = Polynomial::from_terms(ring, pairs)?;
        }
    }
    GradedMatrix::new(
        ring,
        FreeModuleSpec::new(source),
        FreeModuleSpec::new(ambient.to_vec()),
        entries,
    )
}

/// Sort for Schreyer termination: descending lexicographic on the leading
/// monomial, component index breaking ties. Keeping each level in this
/// order makes the tower stop within the variable count.
fn schreyer_sort(elements: &mut [ModuleElement]) {
    elements.sort_by(|a, b| {
        let la = a.leading().expect("nonzero");
        let lb = b.leading().expect("nonzero");
        lb.mono
            .cmp_by(&la.mono, MonomialOrder::Lex)
            .then_with(|| la.comp.cmp(&lb.comp))
    });
}

/// The (generally non-minimal) Schreyer resolution of a nonzero proper
/// homogeneous ideal.
pub fn schreyer_resolution(ideal: &HomogeneousIdeal) -> Result<Resolution> {
    let gb = ideal.groebner()?;
    if gb.is_zero_ideal() {
        return Err(Error::ZeroIdeal);
    }
    if gb.is_unit_ideal() {
        return Err(Error::ProperIdealRequired);
    }
    let ring = ideal.ring();
    let order0 = ModuleOrder::Top(ring.order());
    let mut level: Vec<ModuleElement> = gb
        .generators()
        .iter()
        .map(|g| poly_to_element(ring, g, 0, &order0))
        .collect();
    schreyer_sort(&mut level);
    let ambient0 = vec![0i64];
    let augmentation = element_matrix(ring, &level, &ambient0)?;
    let mut ambient = augmentation.source().twists().to_vec();
    let mut order = order0;
    let mut differentials = vec![];

    for _ in 0..ring.num_vars() + 2 {
        let (raw, next_order) = syzygy_basis(&level, &order, ring)?;
        let mut reduced = interreduce(raw, &next_order);
        if reduced.is_empty() {
            return Ok(Resolution {
                ring,
                augmentation,
                differentials,
            });
        }
        schreyer_sort(&mut reduced);
        let matrix = element_matrix(ring, &reduced, &ambient)?;
        ambient = matrix.source().twists().to_vec();
        differentials.push(matrix);
        level = reduced;
        order = next_order;
    }
    Err(Error::Internal("syzygy tower failed to terminate"))
}

/// Syzygies of the columns of `basis`, which must be a Groebner basis of
/// the submodule they generate for the term-over-position order (ring
/// order first, lower component on ties). Returns the interreduced
/// Schreyer generators of the full syzygy module as a matrix into the
/// source of `basis`; errors when the columns are not such a basis.
pub fn schreyer_syzygies(basis: &GradedMatrix) -> Result<GradedMatrix> {
    let ring = basis.ring();
    let order = ModuleOrder::Top(ring.order());
    let mut elements = Vec::with_capacity(basis.source().rank());
    for j in 0..basis.source().rank() {
        let mut terms = vec![];
        for (i, row) in basis.entries().iter().enumerate() {
            for t in row[j].terms() {
                terms.push(ModuleTerm {
                    coeff: t.coeff.clone(),
                    comp: i,
                    mono: t.mono.clone(),
                });
            }
        }
        let e = ModuleElement::new(ring, terms, &order);
        if e.is_zero() {
            return Err(Error::NotAModuleBasis);
        }
        elements.push(e.monic());
    }
    let (raw, next_order) = syzygy_basis(&elements, &order, ring)?;
    let mut reduced = interreduce(raw, &next_order);
    schreyer_sort(&mut reduced);
    element_matrix(ring, &reduced, basis.source().twists())
}

/// Cancels unit entries until none remain. Each unit at (r, c) of d_k is
/// a Schur-complement step: subtract multiples of column c to clear row r,
/// drop row r and column c, drop column r of d_{k-1} and row c of
/// d_{k+1}. Both neighbouring compositions stay zero, and the result is a
/// minimal resolution of the same module.
pub fn minimalize(res: &Resolution) -> Result<Resolution> {
    let ring = res.ring;
    let mut mats: Vec<Vec<Vec<Polynomial>>> = Vec::with_capacity(res.differentials.len() + 1);
    let mut twists: Vec<Vec<i64>> = vec![];
    mats.push(res.augmentation.entries().to_vec());
    twists.push(res.augmentation.source().twists().to_vec());
    for d in &res.differentials {
        mats.push(d.entries().to_vec());
        twists.push(d.source().twists().to_vec());
    }
    // twists[k] describes F_k = source of mats[k]; target of mats[0] is S.

    'scan: loop {
        for k in 1..mats.len() {
            let rows = mats[k].len();
            let cols = mats[k].first().map_or(0, |r| r.len());
            for r in 0..rows {
                for c in 0..cols {
                    if !mats[k][r][c].is_constant() {
                        continue;
                    }
                    let u = mats[k][r][c]
                        .leading_coeff()
                        .expect("constant entry is nonzero")
                        .clone();
                    let u_inv = u.inv().expect("nonzero constant");
                    let pivot_col: Vec<Polynomial> =
                        (0..rows).map(|i| mats[k][i][c].clone()).collect();
                    // Column updates never touch column c2 before its own
                    // turn, so the pivot row can be snapshotted up front.
                    let pivot_row: Vec<Polynomial> = mats[k][r].clone();
                    for (c2, row_entry) in pivot_row.iter().enumerate() {
                        if c2 == c || row_entry.is_zero() {
                            continue;
                        }
                        let factor = row_entry.scale(&u_inv)?;
                        for (i, pivot_entry) in pivot_col.iter().enumerate() {
                            if pivot_entry.is_zero() {
                                continue;
                            }
                            let delta = pivot_entry.mul(&factor)?;
                            mats[k][i][c2] = mats[k][i][c2].sub(&delta)?;
                        }
                    }
                    // Drop row r and column c of d_k.
                    mats[k].remove(r);
                    for row in mats[k].iter_mut() {
                        row.remove(c);
                    }
                    twists[k].remove(c);
                    twists[k - 1].remove(r);
                    // Source generator c of F_k is gone: row c of d_{k+1}.
                    if k + 1 < mats.len() {
                        mats[k + 1].remove(c);
                    }
                    // Target generator r of F_{k-1} is gone: column r of
                    // d_{k-1} (or of the augmentation).
                    for row in mats[k - 1].iter_mut() {
                        row.remove(r);
                    }
                    continue 'scan;
                }
            }
        }
        break;
    }

    while mats.len() > 1 && twists.last().expect("nonempty").is_empty() {
        mats.pop();
        twists.pop();
    }
    if twists[0].is_empty() {
        return Err(Error::Internal("minimalization emptied the presentation"));
    }

    let augmentation = GradedMatrix::new(
        ring,
        FreeModuleSpec::new(twists[0].clone()),
        FreeModuleSpec::new(vec![0]),
        mats[0].clone(),
    )?;
    let mut differentials = vec![];
    for k in 1..mats.len() {
        differentials.push(GradedMatrix::new(
            ring,
            FreeModuleSpec::new(twists[k].clone()),
            FreeModuleSpec::new(twists[k - 1].clone()),
            mats[k].clone(),
        )?);
    }
    let out = Resolution {
        ring,
        augmentation,
        differentials,
    };
    debug_assert!(out.verify_complex()?);
    debug_assert!(out.is_minimal());
    Ok(out)
}

/// Minimal free resolution of a nonzero proper homogeneous ideal.
pub fn minimal_resolution(ideal: &HomogeneousIdeal) -> Result<Resolution> {
    minimalize(&schreyer_resolution(ideal)?)
}

/// Graded Betti numbers beta_{i,j}: entry (i, j) counts generators of F_i
/// in degree j for the minimal resolution this was read from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, i64), u64>,
}

impl BettiTable {
    pub fn from_entries(entries: impl IntoIterator<Item = ((usize, i64), u64)>) -> Self {
        BettiTable {
            entries: entries.into_iter().filter(|&(_, v)| v != 0).collect(),
        }
    }

    pub fn entry(&self, i: usize, j: i64) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Nonzero entries as (i, j, beta_{i,j}), ordered.
    pub fn rows(&self) -> Vec<(usize, i64, u64)> {
        self.entries.iter().map(|(&(i, j), &v)| (i, j, v)).collect()
    }

    /// max (j - i) over nonzero entries; the regularity of the resolved
    /// module.
    pub fn regularity(&self) -> Result<i64> {
        self.entries
            .keys()
            .map(|&(i, j)| j - i as i64)
            .max()
            .ok_or(Error::EmptyBettiTable)
    }

    /// Macaulay2-style layout: column i, row j - i.
    pub fn render(&self) -> String {
        if self.entries.is_empty() {
            return "(empty)\n".to_string();
        }
        let imax = self
            .entries
            .keys()
            .map(|&(i, _)| i)
            .max()
            .expect("nonempty");
        let rmin = self
            .entries
            .keys()
            .map(|&(i, j)| j - i as i64)
            .min()
            .expect("nonempty");
        let rmax = self
            .entries
            .keys()
            .map(|&(i, j)| j - i as i64)
            .max()
            .expect("nonempty");
        let cell = |i: usize, r: i64| -> String {
            let v = self.entry(i, r + i as i64);
            if v == 0 {
                ".".to_string()
            } else {
                v.to_string()
            }
        };
        let label_width = (rmin..=rmax)
            .map(|r| format!("{r}:").len())
            .max()
            .expect("nonempty");
        let mut col_widths = vec![];
        for i in 0..=imax {
            let mut w = i.to_string().len();
            for r in rmin..=rmax {
                w = w.max(cell(i, r).len());
            }
            col_widths.push(w);
        }
        let mut out = String::new();
        out.push_str(&" ".repeat(label_width));
        for (i, w) in col_widths.iter().enumerate() {
            out.push_str(&format!("  {:>w$}", i, w = w));
        }
        out.push('\n');
        for r in rmin..=rmax {
            out.push_str(&format!("{:>label_width$}", format!("{r}:")));
            for (i, w) in col_widths.iter().enumerate() {
                out.push_str(&format!("  {:>w$}", cell(i, r), w = w));
            }
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}
