//! Exact-arithmetic toolkit for degree-six symplectic hypergeometric groups.
//!
//! A hypergeometric group `Γ(f,g)` is generated by the companion matrices of a
//! pair of integer polynomials `f`, `g` whose roots lie on the unit circle.
//! When the pair is primitive, has no common root, and `f(0) = g(0) = 1` in
//! even degree, the group preserves an integral symplectic form and embeds in
//! `Sp_6(Z)`. This crate builds such groups from their cyclotomic data and
//! checks *word certificates*: word programs over the conjugated generators
//! whose values land in the highest and second-highest root groups of `Sp_6`,
//! which proves the group has finite index (arithmeticity) by the standard
//! criterion for Zariski-dense subgroups.
//!
//! Everything is computed over exact rationals; no floating point is used
//! anywhere.
//!
//! ## Capabilities
//!
//! - [`cyclotomic`] — parameter vectors, cyclotomic products, and the
//!   finite / symplectic / orthogonal closure classification.
//! - [`exactmat`] — exact rational matrices, companion matrices, and the
//!   word-expression language with its textual grammar.
//! - [`invariant_form`] — the invariant symplectic form by two independent
//!   methods (orbit pairing and linear solve), cross-checked.
//! - [`hyperbolic`] — hyperbolic (anti-diagonalizing) bases and generator
//!   conjugation.
//! - [`rootgroups`] — membership tests for the highest and second-highest
//!   root groups of `Sp_6`.
//! - [`certify`] — certificate files, the end-to-end verification pipeline,
//!   and the four built-in certified cases.
//! - [`search`] — bounded deterministic search for root-group unipotents.
//! - [`catalog`] — the full degree-six enumeration with scalar-shift
//!   deduplication (458 classes, 211 of them with small leading difference).
//! - [`cli`] — the `hgg` command-line front end.
//!
//! ## Examples
//!
//! Each major capability has a runnable example:
//!
//! ```text
//! cargo run --example classify_pair
//! cargo run --example invariant_form
//! cargo run --example hyperbolic_basis
//! cargo run --example word_programs
//! cargo run --example verify_fixtures
//! cargo run --example search_unipotents
//! cargo run --example build_catalog
//! ```

pub mod catalog;
pub mod certify;
pub mod cli;
pub mod cyclotomic;
pub mod exactmat;
pub mod hyperbolic;
pub mod invariant_form;
pub mod rootgroups;
pub mod search;

mod error;

pub use error::{Error, Result};
