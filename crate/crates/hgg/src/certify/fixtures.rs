//! The four built-in certified cases, embedded as certificate files.
//!
//! Each fixture carries the published hyperbolic basis `X` and the expected
//! `q1`/`q2` matrices, so verification checks the evaluated words
//! entry-for-entry. The commutator convention was fixed empirically: of the
//! two bracket orders, only `comm(x, y) = x y x⁻¹ y⁻¹` reproduces the
//! expected `q2` in all four cases (see the crate tests).

use super::{certificate_from_str, Certificate};

const C1: &str = include_str!("../../fixtures/C-1.cert");
const C10: &str = include_str!("../../fixtures/C-10.cert");
const C42: &str = include_str!("../../fixtures/C-42.cert");
const C59: &str = include_str!("../../fixtures/C-59.cert");

/// The four built-in certificates: C-1, C-10, C-42, C-59.
pub fn builtin_fixtures() -> Vec<Certificate> {
    [C1, C10, C42, C59]
        .iter()
        .map(|src| certificate_from_str(src).expect("built-in fixture parses"))
        .collect()
}

/// Looks up a built-in fixture by label.
pub fn builtin_fixture(label: &str) -> Option<Certificate> {
    builtin_fixtures().into_iter().find(|c| c.label == label)
}
