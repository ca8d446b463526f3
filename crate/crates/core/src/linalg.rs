//! Dense exact linear algebra, just enough for linear-form bookkeeping:
//! reduced row echelon form, rank, and nullspace bases.

use crate::field::{FieldDescriptor, FieldElement};

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct DenseMatrix {
    pub field: FieldDescriptor,
    pub rows: Vec<Vec<FieldElement>>,
    pub cols: usize,
}

impl DenseMatrix {
    pub fn new(field: FieldDescriptor, cols: usize) -> Self {
        DenseMatrix {
            field,
            rows: vec![],
            cols,
        }
    }

    pub fn push_row(&mut self, row: Vec<FieldElement>) {
        debug_assert_eq!(row.len(), self.cols);
        self.rows.push(row);
    }

    /// In-place reduced row echelon form with leftmost-pivot selection;
    /// returns the rank. Zero rows are dropped, so the result is the
    /// canonical basis of the row space.
    pub fn rref(&mut self) -> usize {
        let mut pivot_row = 0;
        for col in 0..self.cols {
            let Some(src) = (pivot_row..self.rows.len()).find(|&r| !self.rows[r][col].is_zero())
            else {
                continue;
            };
            self.rows.swap(pivot_row, src);
            let inv = self.rows[pivot_row][col].inv().expect("pivot is nonzero");
            for c in col..self.cols {
                self.rows[pivot_row][c] = self.rows[pivot_row][c].mul(&inv);
            }
            for r in 0..self.rows.len() {
                if r == pivot_row || self.rows[r][col].is_zero() {
                    continue;
                }
                let factor = self.rows[r][col].clone();
                for c in col..self.cols {
                    let delta = factor.mul(&self.rows[pivot_row][c]);
                    self.rows[r][c] = self.rows[r][c].sub(&delta);
                }
            }
            pivot_row += 1;
            if pivot_row == self.rows.len() {
                break;
            }
        }
        self.rows.truncate(pivot_row);
        pivot_row
    }

    pub fn rank(mut self) -> usize {
        self.rref()
    }

    /// Basis of the right nullspace, computed from the RREF. Deterministic:
    /// one vector per free column in ascending column order.
    pub fn nullspace(mut self) -> Vec<Vec<FieldElement>> {
        let rank = self.rref();
        let mut pivot_of_row = Vec::with_capacity(rank);
        for row in &self.rows {
            let col = row.iter().position(|e| !e.is_zero()).expect("no zero rows");
            pivot_of_row.push(col);
        }
        let pivots: Vec<usize> = pivot_of_row.clone();
        let mut basis = vec![];
        for free in 0..self.cols {
            if pivots.contains(&free) {
                continue;
            }
            let mut v = vec![self.field.zero(); self.cols];
            v[free] = self.field.one();
            for (r, &pc) in pivot_of_row.iter().enumerate() {
                // Row says x_pc + sum coeff * x_free = 0.
                v[pc] = self.rows[r][free].neg();
            }
            basis.push(v);
        }
        basis
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fd() -> FieldDescriptor {
        FieldDescriptor::default_prime()
    }

    fn mat(rows: &[&[i64]]) -> DenseMatrix {
        let field = fd();
        let cols = rows[0].len();
        let mut m = DenseMatrix::new(field, cols);
        for r in rows {
            m.push_row(r.iter().map(|&v| field.from_i64(v)).collect());
        }
        m
    }

    #[test]
    fn rank_and_rref() {
        let mut m = mat(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(m.rref(), 2);
        assert_eq!(m.rows.len(), 2);
        // Canonical: same row space gives identical RREF.
        let mut m2 = mat(&[&[0, 1, 1], &[1, 3, 4]]);
        m2.rref();
        assert_eq!(m, m2);
    }

    #[test]
    fn nullspace_dimension_and_membership() {
        let m = mat(&[&[1, 0, 1, 0], &[0, 1, 0, 1]]);
        let ns = mat(&[&[1, 0, 1, 0], &[0, 1, 0, 1]]).nullspace();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            for row in &m.rows {
                let mut dot = fd().zero();
                for (a, b) in row.iter().zip(v) {
                    dot = dot.add(&a.mul(b));
                }
                assert!(dot.is_zero());
            }
        }
    }

    #[test]
    fn full_rank_has_empty_nullspace() {
        assert!(mat(&[&[1, 0], &[1, 1]]).nullspace().is_empty());
        assert_eq!(mat(&[&[1, 0], &[1, 1]]).rank(), 2);
    }
}
