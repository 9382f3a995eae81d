//! Exact support calculus for graded rings.
//!
//! The crate provides, bottom to top: prime-field and graded polynomial
//! arithmetic, Buchberger-based ideal and module computations (normal forms,
//! radicals, colons, annihilators, syzygies), bounded complexes of twisted
//! graded free modules with cones/shifts/tensor/Hom and homology presented
//! as graded modules, Koszul objects and support sets over a finite declared
//! spectrum, poset-level classification checks, and a totalization functor
//! into differential graded modules.

pub mod arith;
pub mod cache;
pub mod complex;
pub mod dg;
pub mod dims;
pub mod error;
pub mod field;
pub mod fplinalg;
pub mod gbcore;
pub mod groebner;
pub mod homology;
pub mod ideal;
pub mod input;
pub mod koszul;
pub mod matrix;
pub mod module;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod poset;
pub mod ring;
pub mod sampler;
pub mod spec_model;
pub mod support;

pub use error::{Error, Result};
pub use field::PrimeField;
pub use ideal::Ideal;
pub use monomial::{Monomial, OrderKind, TermOrder};
pub use poly::Poly;
pub use ring::Ring;
