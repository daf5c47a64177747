//! Exact computer algebra for the algebra of polynomial integro-differential
//! operators `K<x, d/dx, ∫>` over the rationals.
//!
//! The crate is organised bottom-up:
//!
//! * [`rational`] and [`hpoly`]: exact scalars, polynomials in `H = ∂x`, and
//!   weight classes modulo the integers.
//! * [`operator`]: canonical forms, multiplication, and the action on `K[x]`.
//! * [`oracle`]: truncated matrices of the action, used to cross-check
//!   operator arithmetic independently of the rewriting rules.
//! * [`module`]: finite windows of generalized weight modules, with the
//!   `FM` submodule, splitting, decomposition, and Hom/Ext dimensions.
//! * [`expr`] and [`cli`]: the expression language and command-line front end.

pub mod cli;
pub mod error;
pub mod expr;
pub mod hpoly;
pub mod matrix;
pub mod module;
pub mod operator;
pub mod oracle;
pub mod rational;
pub mod suite;

pub use error::{Error, Result};
pub use hpoly::HPoly;
pub use matrix::Matrix;
pub use operator::{B1Element, CanonicalOperator, Generator, Word, XPoly};
pub use rational::{Rational, WeightClass};
