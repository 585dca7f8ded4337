//! Independent domination polynomials of zero-divisor graphs Γ(ℤ_n).
//!
//! Three routes to `D_i(Γ(ℤ_n), x)`: maximal independent set enumeration on
//! the explicit graph, support enumeration on the divisor-class quotient, and
//! published closed forms for special families of `n`. Shape checks
//! (unimodality, log-concavity, Newton's inequalities, oscillation) and zero
//! certification operate on the resulting [`DomPolynomial`].

pub mod analysis;
pub mod bitset;
pub mod closed;
pub mod driver;
pub mod engines;
pub mod error;
pub mod graph;
pub mod intpoly;
pub mod numtheory;
pub mod plot;
pub mod poly;
pub mod polyfile;
pub mod roots;

pub use analysis::{analyze, PropertyReport};
pub use closed::{audit_family, dipoly_closed, AuditRecord};
pub use driver::{compute, Engine};
pub use engines::{dipoly_bruteforce, dipoly_compressed, domination_number, gamma_i_alpha};
pub use error::{Error, Result};
pub use graph::{build_class_graph, expand_graph, ClassGraph, ExplicitGraph};
pub use numtheory::{
    classify_family, euler_phi, factorize, proper_divisors, Factorization, FamilyClass,
};
pub use poly::{DomPolynomial, SignedPolynomial};
pub use polyfile::PolynomialFile;
pub use roots::{count_real_roots_exact, find_roots, roots_report, RootsReport};
