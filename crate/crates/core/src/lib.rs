//! Exact products in universal enveloping algebras of small nilpotent Lie
//! algebras.
//!
//! Two engines compute the PBW expansion of a product of basis monomials:
//! a generic rewriting [`oracle`] driven by the bracket table, and the
//! explicit formulas in [`closed_form`] for the catalog algebras `n3_1`,
//! `n4_1` and `n5_1` through `n5_6`.

pub mod cli;
pub mod closed_form;
pub mod error;
pub mod lie;
pub mod oracle;
pub mod poly;
pub mod table;

pub use closed_form::{product, product_checked, AlgebraId};
pub use error::{Error, Result};
pub use lie::{builtin, LieAlgebra, LieAlgebraSpec};
pub use oracle::{oracle_product, straighten_word};
pub use poly::{Monomial, Polynomial, Rational};
