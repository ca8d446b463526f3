//! The ambient graded polynomial ring: variable count, coefficient field,
//! term order, and the degree cap that keeps Groebner runs from walking off.

use crate::error::{Error, Result};
use crate::field::FieldDescriptor;
use crate::monomial::MonomialOrder;
use std::fmt;
use std::hash::{Hash, Hasher};

pub const DEFAULT_DEGREE_CAP: u32 = 40;

/// Describes S = k[x_0, ..., x_{n}] with a term order. Cheap to copy; two
/// contexts are interchangeable when variables, field and order agree (the
/// degree cap is an execution limit, not part of the ring's identity).
#[derive(Debug, Clone, Copy)]
pub struct RingContext {
    num_vars: usize,
    field: FieldDescriptor,
    order: MonomialOrder,
    degree_cap: u32,
}

impl PartialEq for RingContext {
    fn eq(&self, other: &Self) -> bool {
        self.num_vars == other.num_vars && self.field == other.field && self.order == other.order
    }
}

impl Eq for RingContext {}

impl Hash for RingContext {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.num_vars.hash(state);
        self.field.hash(state);
        self.order.hash(state);
    }
}

impl RingContext {
    /// Grevlex and the default cap; the common case.
    pub fn new(num_vars: usize, field: FieldDescriptor) -> Result<Self> {
        if num_vars == 0 {
            return Err(Error::EmptyRing);
        }
        Ok(RingContext {
            num_vars,
            field,
            order: MonomialOrder::Grevlex,
            degree_cap: DEFAULT_DEGREE_CAP,
        })
    }

    pub fn with_order(mut self, order: MonomialOrder) -> Self {
        if let MonomialOrder::EliminationBlock(k) = order {
            assert!(k <= self.num_vars, "elimination block exceeds ring");
        }
        self.order = order;
        self
    }

    pub fn with_degree_cap(mut self, cap: u32) -> Self {
        self.degree_cap = cap;
        self
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn field(&self) -> FieldDescriptor {
        self.field
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn degree_cap(&self) -> u32 {
        self.degree_cap
    }

    /// Dimension of the projective space Proj S.
    pub fn projective_dim(&self) -> usize {
        self.num_vars - 1
    }

    /// dim_k S_d = C(d + n - 1, n - 1) for n variables.
    pub fn full_piece_dim(&self, degree: u32) -> u64 {
        let n = self.num_vars as u64 - 1;
        let d = degree as u64;
        // Binomial C(d + n, n) computed multiplicatively; sizes here stay
        // far below overflow for the degrees this engine touches.
        let mut acc: u64 = 1;
        for i in 1..=n {
            acc = acc * (d + i) / i;
        }
        acc
    }
}

impl fmt::Display for RingContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let field = match self.field {
            FieldDescriptor::Prime(p) => format!("F{p}"),
            FieldDescriptor::Rationals => "Q".to_string(),
        };
        write!(f, "{field}[x0..x{}]", self.num_vars - 1)
    }
}
