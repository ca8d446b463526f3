//! Exact commutative algebra over F_p and Q, built around one question:
//! the Castelnuovo-Mumford regularity of ideals of subspace arrangements.
//!
//! The engine computes regularity two independent ways, by minimal free
//! resolution (Schreyer syzygies plus minimalization) and by generic
//! hyperplane section recursion, and ships a verification harness that
//! exercises both on random and structured arrangements.

pub mod arrangement;
pub mod error;
pub mod field;
pub mod groebner;
pub mod harness;
pub mod ideal;
mod linalg;
mod modpoly;
pub mod monomial;
pub mod poly;
pub mod regularity;
pub mod resolution;
pub mod ring;
pub mod textio;

pub use arrangement::{auxiliary_line, random_arrangement, sharp_example, Arrangement, Subspace};
pub use error::{Error, Result};
pub use field::{field_arithmetic, FieldDescriptor, FieldElement, FieldOp, DEFAULT_PRIME};
pub use groebner::{buchberger, divide, ideal_membership, Division, GroebnerBasis};
pub use harness::{
    run_suite, verify_hyperplane_lemma, verify_prop_aux, verify_ses_bounds, verify_sharp,
    verify_theorem, Suite, SuiteConfig, SuiteOutcome, VerificationReport,
};
pub use ideal::{
    generic_linear_form, generic_nonzerodivisor, random_linear_form, HomogeneousIdeal,
};
pub use monomial::{Monomial, MonomialOrder};
pub use poly::{Polynomial, Term};
pub use regularity::{
    betti_regularity, hyperplane_regularity, regularity, RegularityOutcome, Strategy,
};
pub use resolution::{
    minimal_resolution, minimalize, schreyer_resolution, schreyer_syzygies, BettiTable,
    FreeModuleSpec, GradedMatrix, Resolution,
};
pub use ring::RingContext;
pub use textio::{arrangement_to_string, parse_arrangement, parse_polynomial};
