//! Exact computations on moduli of twisted cyclic quiver representations
//! (cyclic Higgs bundles) over the projective line.
//!
//! All arithmetic is over the rationals. Sections that split completely over
//! `ℚ` are represented by their zero divisors, so fibre enumeration is a
//! question of distributing points between the maps of the quiver.

pub mod divisor;
pub mod error;
pub mod fibre;
pub mod form;
pub mod json;
pub mod k1;
mod poly;
pub mod quiver;
pub mod rep;

pub use divisor::{divisor_contains, Divisor, ProjPoint, Section};
pub use error::{Error, Result};
pub use fibre::{count_fibre, enumerate_fibre, fibre_or_nilcone, nilcone_fibre, FibreSet, NilconeDescriptor};
pub use form::{from_coeffs, reduce_top, to_coeffs, CoeffForm};
pub use json::to_canonical_json;
pub use k1::{
    decompose, k1_fibre_count, reduction_amounts, residual_profile, AdjustedQuiver, CharPolyReport,
    DecompositionDescriptor, K1FibreCount, K1Quiver, K1Rep, Reduction, Residual,
};
pub use quiver::{binomial, multinomial, ATypeQuiver, CyclicQuiver, ModuliDescriptor};
pub use rep::{CanonicalRep, CyclicRep, StabilityReport};

/// Arbitrary-precision rational numbers.
pub type Rational = num_rational::BigRational;
