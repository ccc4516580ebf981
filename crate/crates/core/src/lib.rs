//! Exact calculus of finitely generated abelian groups and the rim tori
//! constructions built on it.
//!
//! Every group is presented as `Z^n` modulo a lattice spanned by the columns
//! of an integer matrix. Subgroups carry generators in ambient coordinates,
//! homomorphisms carry an integer matrix acting on ambient coordinates.
//! All arithmetic is arbitrary precision; nothing here touches floating point.
//!
//! Module map:
//!
//! * [`matrix`], [`smith`], [`hermite`]: integer linear algebra.
//! * [`group`]: groups, subgroups, homomorphisms and their calculus.
//! * [`rimtori`]: rim tori modules, contact profiles, deck groups,
//!   vanishing cycles, threshold and invariance criteria, the deck action.
//! * [`squares`]: commutative 3x3 squares of short exact sequences.
//! * [`torus`]: the explicit rational model of covers of `T^2` products.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

mod error;
pub mod group;
pub mod hermite;
pub mod matrix;
pub mod rimtori;
pub mod smith;
pub mod squares;
pub mod torus;

pub use error::{Error, Result};
pub use group::{CanonicalForm, FgAbGroup, Homomorphism, Order, Subgroup};
pub use matrix::IntMatrix;
pub use num_bigint::BigInt;
pub use smith::SmithDecomposition;
