//! Fano schemes of k-planes on complete intersections.
//!
//! Two halves:
//!
//! * [`classifier`] evaluates the closed-form numerology of `F_k(X)` for a
//!   general complete intersection `X ⊂ P^n` of multi-degree `d`: expected
//!   dimension, emptiness, components, canonical degree, rational
//!   connectedness, general type, and the curve-free certificate.
//! * [`verifier`] computes `F_k(X)(F_p)` exactly for explicit instances over
//!   small prime fields, on top of [`multipoly`] and [`grassmann`].

pub mod arith;
pub mod classifier;
pub mod exec;
pub mod grassmann;
pub mod multipoly;
pub mod verifier;

pub use arith::{binomial, gaussian_binomial, is_prime, ArithError, Fp, Integers, PrimeField};
pub use classifier::{
    classify, ClassifyError, ComponentCount, FanoClassification, FanoSetup, ScopeNote, Status,
};
pub use exec::Exec;
pub use grassmann::{PivotSet, PlaneRref, DEFAULT_BUDGET};
pub use multipoly::{MPoly, Monomial, PolyError};
pub use verifier::{CompleteIntersection, FanoPointSet, Strategy, VerifyError};
