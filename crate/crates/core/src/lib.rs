//! Finite semigroups, Brandt λ⁰-extensions and their homomorphisms.
//!
//! Semigroups are stored as Cayley tables over `0..n`; element identity is
//! the index, labels are for display only.

pub mod analysis;
pub mod brandt;
pub mod catalog;
pub mod congruence;
pub mod embed;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod function;
pub mod hom;
pub mod iso;
pub mod order;
pub mod props;
pub mod semigroup;
pub mod triple;

pub use brandt::{brandt_extension, matrix_units, BrandtExtension, Cell};
pub use error::{Error, Result};
pub use hom::{check_homomorphism, enumerate_homs, enumerate_homs_with, Homomorphism, SearchConfig};
pub use semigroup::FiniteSemigroup;
