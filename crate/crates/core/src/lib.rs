//! Exact finite-field arithmetic and stability analysis of iterated
//! binomials x^d - a.
//!
//! A binomial is stable when every iterate under self-composition stays
//! irreducible. The [`stability`] module decides this from the critical
//! orbit of a by power-residue tests alone; the [`oracle`] module builds
//! the iterates explicitly and tests their irreducibility generically,
//! serving as independent ground truth.

pub mod arith;
pub mod error;
pub mod field;
pub mod oracle;
pub mod poly;
pub mod stability;

pub use error::{Error, Result};
pub use field::{Field, FieldElement};
pub use oracle::{constant_term_identity, cross_check, oracle_first_reducible, CrossCheckReport};
pub use poly::{Poly, DEFAULT_DEGREE_CAP};
pub use stability::{
    binomial_irreducible_lang, binomial_irreducible_order, critical_orbit, early_stable_bound,
    mersenne_report, normalize_nonmonic, stability_verdict, transform_suite, MersenneReport,
    OrbitReport, ReducibleCause, StabilityVerdict, TransformItem, VerdictKind,
};
