//! The `Sp_6` root datum relative to the diagonal torus in a hyperbolic
//! basis, and exact membership tests for the highest and second-highest root
//! groups.
//!
//! With the form anti-diagonal and the torus `diag(t₁, t₂, t₃, t₃⁻¹, t₂⁻¹,
//! t₁⁻¹)`, the entry `(i, j)` of a matrix carries the character `t_i / t_j`.
//! The highest root `t₁²` lives at entry `(1,6)` alone; the second-highest
//! root `t₁t₂` lives at entries `(1,5)` and `(2,6)`, tied together by the
//! ratio `λ₁/λ₂` of the pairing values.

use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;

use crate::exactmat::RationalMatrix;
use crate::invariant_form::SymplecticForm;

/// A character of the diagonal torus, as exponents over `(t₁, t₂, t₃)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Root {
    pub exponents: [i8; 3],
}

impl Root {
    pub const fn new(e1: i8, e2: i8, e3: i8) -> Self {
        Root {
            exponents: [e1, e2, e3],
        }
    }

    pub fn negated(&self) -> Self {
        Root {
            exponents: [
                -self.exponents[0],
                -self.exponents[1],
                -self.exponents[2],
            ],
        }
    }

    /// Matrix positions (0-indexed) whose torus character equals this root.
    pub fn support_positions(&self) -> Vec<(usize, usize)> {
        let weights: [[i8; 3]; 6] = [
            [1, 0, 0],
            [0, 1, 0],
            [0, 0, 1],
            [0, 0, -1],
            [0, -1, 0],
            [-1, 0, 0],
        ];
        let mut out = Vec::new();
        for i in 0..6 {
            for j in 0..6 {
                if i == j {
                    continue;
                }
                let diff = [
                    weights[i][0] - weights[j][0],
                    weights[i][1] - weights[j][1],
                    weights[i][2] - weights[j][2],
                ];
                if diff == self.exponents {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (idx, &e) in self.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let base = format!("t{}", idx + 1);
            if e == 1 {
                parts.push(base);
            } else {
                parts.push(format!("{base}^{e}"));
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// The nine positive roots of `Sp_6` (type C₃) with simple roots
/// `t₁t₂⁻¹, t₂t₃⁻¹, t₃²`, ordered with the highest root first.
pub const POSITIVE_ROOTS: [Root; 9] = [
    Root::new(2, 0, 0),  // highest
    Root::new(1, 1, 0),  // second highest
    Root::new(1, 0, 1),
    Root::new(1, 0, -1),
    Root::new(1, -1, 0),
    Root::new(0, 2, 0),
    Root::new(0, 1, 1),
    Root::new(0, 1, -1),
    Root::new(0, 0, 2),
];

/// The `Sp_6` root datum carrying the pairing values of the basis in use.
/// `λ₃` is carried for completeness although only the `λ₁/λ₂` ratio enters
/// the two membership tests used by the certification criterion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootDatum {
    pub lambdas: Vec<BigRational>,
}

impl RootDatum {
    pub fn new(lambdas: Vec<BigRational>) -> Self {
        assert_eq!(lambdas.len(), 3, "Sp_6 root datum carries three lambdas");
        RootDatum { lambdas }
    }

    pub fn positive_roots(&self) -> &'static [Root; 9] {
        &POSITIVE_ROOTS
    }

    /// All 18 roots: positives then their negatives.
    pub fn all_roots(&self) -> Vec<Root> {
        POSITIVE_ROOTS
            .iter()
            .copied()
            .chain(POSITIVE_ROOTS.iter().map(Root::negated))
            .collect()
    }

    pub fn highest(&self) -> Root {
        POSITIVE_ROOTS[0]
    }

    pub fn second_highest(&self) -> Root {
        POSITIVE_ROOTS[1]
    }
}

/// Returns `y` iff `M = I + y·E_{1,6}` with `y ≠ 0`.
pub fn in_highest_root_group(m: &RationalMatrix) -> Option<BigRational> {
    if m.dim() != 6 {
        return None;
    }
    let id = RationalMatrix::identity(6);
    let y = m.at(0, 5).clone();
    if y.is_zero() {
        return None;
    }
    for i in 0..6 {
        for j in 0..6 {
            if (i, j) == (0, 5) {
                continue;
            }
            if m.at(i, j) != id.at(i, j) {
                return None;
            }
        }
    }
    Some(y)
}

/// Returns `x` iff `M = I + x·E_{1,5} + (λ₁/λ₂)·x·E_{2,6}` with `x ≠ 0`.
pub fn in_second_highest_root_group(
    m: &RationalMatrix,
    lambda1: &BigRational,
    lambda2: &BigRational,
) -> Option<BigRational> {
    if m.dim() != 6 || lambda1.is_zero() || lambda2.is_zero() {
        return None;
    }
    let x = m.at(0, 4).clone();
    if x.is_zero() {
        return None;
    }
    let expected_26 = lambda1 / lambda2 * &x;
    if m.at(1, 5) != &expected_26 {
        return None;
    }
    let id = RationalMatrix::identity(6);
    for i in 0..6 {
        for j in 0..6 {
            if (i, j) == (0, 4) || (i, j) == (1, 5) {
                continue;
            }
            if m.at(i, j) != id.at(i, j) {
                return None;
            }
        }
    }
    Some(x)
}

/// True iff `MᵗΩM = Ω` exactly.
pub fn preserves_form(m: &RationalMatrix, form: &SymplecticForm) -> bool {
    form.preserved_by(m)
}

/// Support-pattern classification of a unipotent element against the 18 root
/// groups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RootGroupClass {
    Identity,
    PositiveRoot(Root),
    NegativeRoot(Root),
    OtherUnipotent,
}

impl fmt::Display for RootGroupClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootGroupClass::Identity => write!(f, "identity"),
            RootGroupClass::PositiveRoot(r) => write!(f, "root {r}"),
            RootGroupClass::NegativeRoot(r) => write!(f, "root {}", r),
            RootGroupClass::OtherUnipotent => write!(f, "other unipotent"),
        }
    }
}

/// Classifies by off-diagonal support: if every nonzero off-diagonal entry of
/// `M - I` sits inside one root's support, that root wins (positives first,
/// in the fixed order); otherwise the element is some other unipotent.
pub fn classify_unipotent_support(m: &RationalMatrix) -> RootGroupClass {
    if m.dim() != 6 {
        return RootGroupClass::OtherUnipotent;
    }
    let id = RationalMatrix::identity(6);
    let mut support = Vec::new();
    for i in 0..6 {
        for j in 0..6 {
            if m.at(i, j) != id.at(i, j) {
                support.push((i, j));
            }
        }
    }
    if support.is_empty() {
        return RootGroupClass::Identity;
    }
    for root in POSITIVE_ROOTS {
        let positions = root.support_positions();
        if support.iter().all(|p| positions.contains(p)) {
            return RootGroupClass::PositiveRoot(root);
        }
    }
    for root in POSITIVE_ROOTS.iter().map(Root::negated) {
        let positions = root.support_positions();
        if support.iter().all(|p| positions.contains(p)) {
            return RootGroupClass::NegativeRoot(root);
        }
    }
    RootGroupClass::OtherUnipotent
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn highest_element(y: i64) -> RationalMatrix {
        let mut m = RationalMatrix::identity(6);
        m.set(0, 5, rat(y, 1));
        m
    }

    fn second_element(x: &BigRational, l1: &BigRational, l2: &BigRational) -> RationalMatrix {
        let mut m = RationalMatrix::identity(6);
        m.set(0, 4, x.clone());
        m.set(1, 5, l1 / l2 * x);
        m
    }

    #[test]
    fn root_system_has_nine_positive_roots_with_expected_supports() {
        assert_eq!(POSITIVE_ROOTS.len(), 9);
        let datum = RootDatum::new(vec![rat(1, 1), rat(1, 1), rat(-1, 1)]);
        assert_eq!(datum.all_roots().len(), 18);
        assert_eq!(datum.highest().support_positions(), vec![(0, 5)]);
        let second = datum.second_highest().support_positions();
        assert_eq!(second, vec![(0, 4), (1, 5)]);
        // long roots have singleton support, short roots two positions
        for root in POSITIVE_ROOTS {
            let len = root.support_positions().len();
            let is_long = root.exponents.iter().any(|&e| e.abs() == 2);
            assert_eq!(len, if is_long { 1 } else { 2 }, "root {root}");
        }
    }

    #[test]
    fn highest_membership() {
        assert_eq!(
            in_highest_root_group(&highest_element(3)),
            Some(rat(3, 1))
        );
        assert_eq!(in_highest_root_group(&RationalMatrix::identity(6)), None);
        let mut off = highest_element(3);
        off.set(2, 3, rat(1, 1));
        assert_eq!(in_highest_root_group(&off), None);
    }

    #[test]
    fn second_highest_membership_and_ratio_sensitivity() {
        // C-1 values: (λ₁, λ₂) = (81, -162), q₂ entries 52488 / -26244
        let l1 = rat(81, 1);
        let l2 = rat(-162, 1);
        let q2 = second_element(&rat(52488, 1), &l1, &l2);
        assert_eq!(q2.at(1, 5), &rat(-26244, 1));
        assert_eq!(
            in_second_highest_root_group(&q2, &l1, &l2),
            Some(rat(52488, 1))
        );
        // perturbing λ₂ changes the required ratio and rejects a genuine q₂
        assert_eq!(in_second_highest_root_group(&q2, &l1, &rat(162, 1)), None);
        // but the same ratio with rescaled lambdas still accepts
        assert_eq!(
            in_second_highest_root_group(&q2, &rat(-81, 1), &rat(162, 1)),
            Some(rat(52488, 1))
        );
        // an element missing the compensating (2,6) entry is rejected
        let mut lone = RationalMatrix::identity(6);
        lone.set(0, 4, rat(1, 1));
        assert_eq!(in_second_highest_root_group(&lone, &l1, &l2), None);
    }

    #[test]
    fn membership_implies_unipotent_and_parameters_add() {
        let m1 = highest_element(3);
        let m2 = highest_element(5);
        assert!(crate::exactmat::is_unipotent(&m1));
        let prod = m1.mul(&m2);
        assert_eq!(in_highest_root_group(&prod), Some(rat(8, 1)));

        let l1 = rat(-36, 1);
        let l2 = rat(72, 1);
        let s1 = second_element(&rat(-1080, 1), &l1, &l2);
        let s2 = second_element(&rat(40, 1), &l1, &l2);
        assert_eq!(
            in_second_highest_root_group(&s1.mul(&s2), &l1, &l2),
            Some(rat(-1040, 1))
        );
    }

    #[test]
    fn support_classification() {
        let mut c = RationalMatrix::identity(6);
        c.set(5, 0, rat(-3, 1));
        // support (6,1): the negative of the highest root
        assert_eq!(
            classify_unipotent_support(&c),
            RootGroupClass::NegativeRoot(Root::new(-2, 0, 0))
        );
        assert_eq!(
            classify_unipotent_support(&RationalMatrix::identity(6)),
            RootGroupClass::Identity
        );
        let mut messy = RationalMatrix::identity(6);
        messy.set(0, 5, rat(1, 1));
        messy.set(1, 2, rat(1, 1));
        assert_eq!(
            classify_unipotent_support(&messy),
            RootGroupClass::OtherUnipotent
        );
    }
}
