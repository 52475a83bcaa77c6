//! Factoring bi-primes by compiling M = p*q into positive quadratic binary
//! cost functions.
//!
//! The pipeline: encode M as a polynomial system (column or cell
//! decomposition of the long multiplication), synthesize a positive
//! quadratic surrogate via Groebner bases, preprocess with a cutoff basis,
//! convert to QUBO, and solve classically (exhaustive search or simulated
//! annealing). An independent eigenvalue-based minimizer over the residue
//! algebra doubles as a correctness oracle.
//!
//! # Modules
//!
//! - [`vars`] - interned binary variables and registries
//! - [`poly`] - sparse multivariate polynomials over exact rationals
//! - [`order`] - term orders (plex, grevlex)
//! - [`groebner`] - multivariate division, S-polynomials, Buchberger
//! - [`encode`] - column and cell systems for a factoring instance
//! - [`reduce`] - positive quadratic surrogates and penalty synthesis
//! - [`preprocess`] - cutoff bases, normal-form reduction, W-substitution
//! - [`qubo`] - QUBO conversion, range diagnostics, serialization
//! - [`solver`] - exhaustive and annealing ground-state search, decoding
//! - [`eigen`] - minimization via multiplication-matrix eigenvalues
//! - [`pipeline`] - end-to-end factoring orchestration

pub mod eigen;
pub mod encode;
pub mod groebner;
pub mod order;
pub mod pipeline;
pub mod poly;
pub mod preprocess;
pub mod qubo;
pub mod reduce;
pub mod solver;
pub mod vars;

pub use order::{OrderKind, TermOrder};
pub use poly::{Monomial, Polynomial, Rational};
pub use vars::{VarRole, Variable, VariableRegistry};
