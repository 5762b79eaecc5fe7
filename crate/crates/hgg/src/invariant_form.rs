//! The invariant symplectic form of a symplectic hypergeometric pair,
//! computed in the standard basis by two independent methods.
//!
//! Both methods return the same canonical representative: the primitive
//! integer matrix (entries share no common factor) whose first nonzero entry
//! in row 1 is positive. The two routes are:
//!
//! - **orbit pairing** ([`form_via_orbit`]): normalize `Ω(v, e_n) = 1` for
//!   `v = (A^{-1}B - I)e_n`, read the Gram matrix on the orbit basis
//!   `{v, Bv, …, B^{n-1}v}` off the `e_n`-coefficients, and change basis back;
//! - **linear solve** ([`form_via_linear_solve`]): since the companion matrix
//!   shifts `e_i ↦ e_{i+1}`, the form is constant along diagonals. Solve the
//!   banded skew ansatz against invariance under both generators and insist
//!   the solution space is a line.
//!
//! The banded ansatz names its unknowns `ω₁…ω₅` for the first-row entries
//! `Ω(e_1, e_2), …, Ω(e_1, e_6)` (the literature letters b…f collide with the
//! polynomial names f, g).

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::exactmat::{primitive_integer_scaling, RationalMatrix};
use crate::{Error, Result};

/// Which basis a form matrix is expressed in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BasisTag {
    Standard,
    OrbitBasis,
    HyperbolicBasis,
}

/// A non-degenerate skew-symmetric bilinear form together with its basis tag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymplecticForm {
    matrix: RationalMatrix,
    basis_tag: BasisTag,
}

impl SymplecticForm {
    /// Wraps a matrix after checking skew-symmetry and non-degeneracy.
    pub fn new(matrix: RationalMatrix, basis_tag: BasisTag) -> Result<Self> {
        if matrix != matrix.transpose().neg() {
            return Err(Error::NotSkewSymmetric);
        }
        if matrix.determinant().is_zero() {
            return Err(Error::Degenerate);
        }
        Ok(SymplecticForm { matrix, basis_tag })
    }

    pub fn matrix(&self) -> &RationalMatrix {
        &self.matrix
    }

    pub fn basis_tag(&self) -> BasisTag {
        self.basis_tag
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    /// Evaluates `Ω(u, w) = uᵗ Ω w`.
    pub fn apply(&self, u: &[BigRational], w: &[BigRational]) -> BigRational {
        let ow = self.matrix.mul_vec(w);
        u.iter()
            .zip(&ow)
            .map(|(a, b)| a * b)
            .fold(BigRational::zero(), |acc, t| acc + t)
    }

    /// True iff `MᵗΩM = Ω` exactly.
    pub fn preserved_by(&self, m: &RationalMatrix) -> bool {
        m.transpose().mul(&self.matrix).mul(m) == self.matrix
    }
}

/// `v = (A^{-1}B - I) e_n`, the fixed direction of the unipotent `A^{-1}B`.
pub fn v_vector(a: &RationalMatrix, b: &RationalMatrix) -> Result<Vec<BigRational>> {
    let n = a.dim();
    let c = a.inverse()?.mul(b);
    let mut v = c.column(n - 1);
    v[n - 1] -= BigRational::one();
    Ok(v)
}

/// Which generator's orbit of `v` to use as the intermediate basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrbitSide {
    A,
    B,
}

/// The orbit basis `Y = [v | Mv | … | M^{n-1}v]` and the Gram matrix of the
/// form on it, normalized by `Ω(v, e_n) = 1`.
pub struct OrbitData {
    pub v: Vec<BigRational>,
    /// Columns are the orbit vectors.
    pub basis: RationalMatrix,
    /// Gram matrix of the form on the orbit basis.
    pub gram: SymplecticForm,
}

/// Builds the orbit data for one side. With `Ω(v, e_n) = 1` and `v` orthogonal
/// to `e_1…e_{n-1}`, the pairing `Ω(v, w)` is the `e_n`-coefficient of `w`,
/// so the Gram entry `(i, j)` is the `e_n`-coefficient of `M^{j-i} v`.
pub fn orbit_data(a: &RationalMatrix, b: &RationalMatrix, side: OrbitSide) -> Result<OrbitData> {
    let n = a.dim();
    if b.dim() != n {
        return Err(Error::DimensionMismatch(
            "generators have different dimensions".into(),
        ));
    }
    let v = v_vector(a, b)?;
    let m = match side {
        OrbitSide::A => a,
        OrbitSide::B => b,
    };
    let mut orbit: Vec<Vec<BigRational>> = Vec::with_capacity(n);
    orbit.push(v.clone());
    for _ in 1..n {
        let prev = orbit.last().expect("orbit nonempty");
        orbit.push(m.mul_vec(prev));
    }
    let mut basis = RationalMatrix::zero(n);
    for (j, col) in orbit.iter().enumerate() {
        for i in 0..n {
            basis.set(i, j, col[i].clone());
        }
    }
    if basis.determinant().is_zero() {
        return Err(Error::OrbitDegenerate);
    }
    // pairing value m(k) = e_n-coefficient of M^k v, for k = -(n-1)..n-1
    let minv = m.inverse()?;
    let mut fwd = vec![BigRational::zero(); n];
    let mut cur = v.clone();
    for k in 1..n {
        cur = m.mul_vec(&cur);
        fwd[k] = cur[n - 1].clone();
    }
    let mut bwd = vec![BigRational::zero(); n];
    let mut cur = v.clone();
    for k in 1..n {
        cur = minv.mul_vec(&cur);
        bwd[k] = cur[n - 1].clone();
    }
    let mut gram = RationalMatrix::zero(n);
    for i in 0..n {
        for j in 0..n {
            let entry = if j >= i {
                fwd[j - i].clone()
            } else {
                bwd[i - j].clone()
            };
            gram.set(i, j, entry);
        }
    }
    let gram = SymplecticForm::new(gram, BasisTag::OrbitBasis)
        .map_err(|_| Error::OrbitDegenerate)?;
    Ok(OrbitData { v, basis, gram })
}

fn orbit_form(a: &RationalMatrix, b: &RationalMatrix, side: OrbitSide) -> Result<SymplecticForm> {
    let data = orbit_data(a, b, side)?;
    // standard-basis form: Ω_std = Y^{-t} · Gram · Y^{-1}
    let yinv = data.basis.inverse().map_err(|_| Error::OrbitDegenerate)?;
    let std = yinv.transpose().mul(data.gram.matrix()).mul(&yinv);
    let canonical = primitive_integer_scaling(&std);
    let form = SymplecticForm::new(canonical, BasisTag::Standard)?;
    if !form.preserved_by(a) || !form.preserved_by(b) {
        return Err(Error::InvarianceFailed);
    }
    Ok(form)
}

/// Invariant form via the `B`-orbit of `v` (the `A`-orbit gives the same
/// canonical form; see [`form_via_orbit_a_side`]).
pub fn form_via_orbit(a: &RationalMatrix, b: &RationalMatrix) -> Result<SymplecticForm> {
    orbit_form(a, b, OrbitSide::B)
}

/// Cross-check path: the same computation on the `A`-orbit of `v`.
pub fn form_via_orbit_a_side(
    a: &RationalMatrix,
    b: &RationalMatrix,
) -> Result<SymplecticForm> {
    orbit_form(a, b, OrbitSide::A)
}

/// Invariant form via the banded skew ansatz and a homogeneous linear solve.
///
/// The ansatz has first row `(0, ω₁, …, ω₅)` and is constant along diagonals;
/// `AᵗΩA = Ω` and `BᵗΩB = Ω` become linear conditions on `ω`. The solution
/// space must be exactly a line.
pub fn form_via_linear_solve(
    a: &RationalMatrix,
    b: &RationalMatrix,
) -> Result<SymplecticForm> {
    let n = a.dim();
    if b.dim() != n {
        return Err(Error::DimensionMismatch(
            "generators have different dimensions".into(),
        ));
    }
    let unknowns = n - 1;
    // basis matrices of the banded skew ansatz: T_k has +1 on the k-th upper
    // diagonal and -1 on the k-th lower diagonal
    let mut templates = Vec::with_capacity(unknowns);
    for k in 1..=unknowns {
        let mut t = RationalMatrix::zero(n);
        for i in 0..n {
            if i + k < n {
                t.set(i, i + k, BigRational::one());
                t.set(i + k, i, -BigRational::one());
            }
        }
        templates.push(t);
    }
    // rows of the homogeneous system, one per upper-triangle entry per generator
    let mut rows: Vec<Vec<BigRational>> = Vec::new();
    for m in [a, b] {
        let transformed: Vec<RationalMatrix> = templates
            .iter()
            .map(|t| m.transpose().mul(t).mul(m).sub(t))
            .collect();
        for i in 0..n {
            for j in i + 1..n {
                let row: Vec<BigRational> =
                    transformed.iter().map(|t| t.at(i, j).clone()).collect();
                if row.iter().any(|c| !c.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let null = null_space(&rows, unknowns);
    if null.len() != 1 {
        return Err(Error::SolutionSpaceNotLine(null.len()));
    }
    let omega = &null[0];
    let mut matrix = RationalMatrix::zero(n);
    for (k, t) in templates.iter().enumerate() {
        matrix = matrix.add(&t.scale(&omega[k]));
    }
    let canonical = primitive_integer_scaling(&matrix);
    let form = SymplecticForm::new(canonical, BasisTag::Standard)?;
    if !form.preserved_by(a) || !form.preserved_by(b) {
        return Err(Error::InvarianceFailed);
    }
    Ok(form)
}

/// Basis of the null space of the row system (RREF back-substitution).
fn null_space(rows: &[Vec<BigRational>], width: usize) -> Vec<Vec<BigRational>> {
    let mut m: Vec<Vec<BigRational>> = rows.to_vec();
    let mut pivot_cols = Vec::new();
    let mut rank = 0usize;
    for col in 0..width {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let lead = m[rank][col].clone();
        for x in &mut m[rank] {
            *x /= &lead;
        }
        for r in 0..m.len() {
            if r != rank && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for j in 0..width {
                    let t = &factor * &m[rank][j];
                    m[r][j] -= t;
                }
            }
        }
        pivot_cols.push(col);
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    let free_cols: Vec<usize> = (0..width).filter(|c| !pivot_cols.contains(c)).collect();
    let mut basis = Vec::new();
    for &free in &free_cols {
        let mut vec = vec![BigRational::zero(); width];
        vec[free] = BigRational::one();
        for (r, &pc) in pivot_cols.iter().enumerate() {
            vec[pc] = -m[r][free].clone();
        }
        basis.push(vec);
    }
    basis
}

/// True iff `Ω₁ = q · Ω₂` for some nonzero rational `q`.
pub fn forms_agree(f1: &SymplecticForm, f2: &SymplecticForm) -> bool {
    if f1.dim() != f2.dim() || f1.basis_tag() != f2.basis_tag() {
        return false;
    }
    let m1 = f1.matrix();
    let m2 = f2.matrix();
    let Some(idx) = m2.entries().iter().position(|e| !e.is_zero()) else {
        return m1.is_zero();
    };
    let q = &m1.entries()[idx] / &m2.entries()[idx];
    if q.is_zero() {
        return false;
    }
    m1 == &m2.scale(&q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::IntPolynomial;
    use crate::exactmat::companion;
    use num_bigint::BigInt;

    fn companions(f: &[i64], g: &[i64]) -> (RationalMatrix, RationalMatrix) {
        (
            companion(&IntPolynomial::from_i64(f)).unwrap(),
            companion(&IntPolynomial::from_i64(g)).unwrap(),
        )
    }

    fn c1() -> (RationalMatrix, RationalMatrix) {
        companions(&[1, -2, -1, 4, -1, -2, 1], &[1, 1, 2, 1, 2, 1, 1])
    }

    fn c10() -> (RationalMatrix, RationalMatrix) {
        companions(&[1, -3, 3, -2, 3, -3, 1], &[1, 0, 0, 1, 0, 0, 1])
    }

    fn c42() -> (RationalMatrix, RationalMatrix) {
        companions(&[1, -2, 3, -4, 3, -2, 1], &[1, 1, 0, -1, 0, 1, 1])
    }

    fn c59() -> (RationalMatrix, RationalMatrix) {
        companions(&[1, -2, 0, 2, 0, -2, 1], &[1, 1, 3, 2, 3, 1, 1])
    }

    #[test]
    fn orbit_gram_first_row_c1() {
        let (a, b) = c1();
        let data = orbit_data(&a, &b, OrbitSide::B).unwrap();
        let first: Vec<i64> = (0..6)
            .map(|j| {
                let e = data.gram.matrix().at(0, j);
                assert!(e.is_integer());
                i64::try_from(e.numer().clone()).unwrap()
            })
            .collect();
        assert_eq!(first, vec![0, -3, 0, 9, -9, -6]);
    }

    #[test]
    fn orbit_form_c1_matches_printed_first_row() {
        let (a, b) = c1();
        let form = form_via_orbit(&a, &b).unwrap();
        let expected = RationalMatrix::from_i64_rows(&[
            &[0, 2, 1, 3, -4, -5],
            &[-2, 0, 2, 1, 3, -4],
            &[-1, -2, 0, 2, 1, 3],
            &[-3, -1, -2, 0, 2, 1],
            &[4, -3, -1, -2, 0, 2],
            &[5, 4, -3, -1, -2, 0],
        ]);
        assert_eq!(form.matrix(), &expected);
    }

    #[test]
    fn orbit_form_c10_matches_printed_first_row() {
        let (a, b) = c10();
        let form = form_via_orbit(&a, &b).unwrap();
        let row: Vec<BigRational> = (0..6).map(|j| form.matrix().at(0, j).clone()).collect();
        let expected: Vec<BigRational> = [0i64, 1, 2, 2, 1, -1]
            .iter()
            .map(|&x| BigRational::from_integer(BigInt::from(x)))
            .collect();
        assert_eq!(row, expected);
    }

    #[test]
    fn solve_form_c42_is_sign_canonical() {
        let (a, b) = c42();
        let form = form_via_linear_solve(&a, &b).unwrap();
        let row: Vec<i64> = (0..6)
            .map(|j| i64::try_from(form.matrix().at(0, j).numer().clone()).unwrap())
            .collect();
        // printed first row is (0,0,-1,-1,0,-1); the canonical sign flips it
        assert_eq!(row, vec![0, 0, 1, 1, 0, 1]);
    }

    #[test]
    fn solve_form_c59_matches_printed() {
        let (a, b) = c59();
        let form = form_via_linear_solve(&a, &b).unwrap();
        let row: Vec<i64> = (0..6)
            .map(|j| i64::try_from(form.matrix().at(0, j).numer().clone()).unwrap())
            .collect();
        assert_eq!(row, vec![0, 1, 0, 1, -2, -3]);
    }

    #[test]
    fn degenerate_inputs_are_rejected() {
        let id = RationalMatrix::identity(6);
        assert!(matches!(
            form_via_linear_solve(&id, &id),
            Err(Error::SolutionSpaceNotLine(5))
        ));
        assert!(matches!(
            form_via_orbit(&id, &id),
            Err(Error::OrbitDegenerate)
        ));
    }

    #[test]
    fn both_methods_agree_on_fixture_pairs() {
        for (a, b) in [c1(), c10(), c42(), c59()] {
            let orbital = form_via_orbit(&a, &b).unwrap();
            let solved = form_via_linear_solve(&a, &b).unwrap();
            assert!(forms_agree(&orbital, &solved));
            // canonicalization makes them literally equal
            assert_eq!(orbital.matrix(), solved.matrix());
            let a_side = form_via_orbit_a_side(&a, &b).unwrap();
            assert_eq!(a_side.matrix(), orbital.matrix());
        }
    }

    #[test]
    fn forms_agree_handles_scaling_and_rejects_different_forms() {
        let (a, b) = c1();
        let f1 = form_via_orbit(&a, &b).unwrap();
        let negated =
            SymplecticForm::new(f1.matrix().neg(), BasisTag::Standard).unwrap();
        assert!(forms_agree(&f1, &negated));

        let (a2, b2) = c10();
        let f2 = form_via_orbit(&a2, &b2).unwrap();
        assert!(!forms_agree(&f1, &f2));
    }

    #[test]
    fn v_is_orthogonal_to_standard_vectors() {
        let (a, b) = c1();
        let form = form_via_orbit(&a, &b).unwrap();
        let v = v_vector(&a, &b).unwrap();
        for j in 0..5 {
            let mut e = vec![BigRational::zero(); 6];
            e[j] = BigRational::one();
            assert!(form.apply(&v, &e).is_zero(), "v should be orthogonal to e_{j}");
        }
        let mut e6 = vec![BigRational::zero(); 6];
        e6[5] = BigRational::one();
        assert!(!form.apply(&v, &e6).is_zero());
    }

    #[test]
    fn random_words_preserve_form() {
        let (a, b) = c1();
        let form = form_via_orbit(&a, &b).unwrap();
        // deterministic pseudo-random words in {A^{±1}, B^{±1}} of length <= 8
        let mut state = 0x9e3779b97f4a7c15u64;
        let ai = a.inverse().unwrap();
        let bi = b.inverse().unwrap();
        for _ in 0..100 {
            let mut w = RationalMatrix::identity(6);
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let len = (state >> 33) % 8 + 1;
            for k in 0..len {
                let pick = (state >> (2 * k)) & 3;
                let gen = match pick {
                    0 => &a,
                    1 => &ai,
                    2 => &b,
                    _ => &bi,
                };
                w = w.mul(gen);
            }
            assert!(form.preserved_by(&w));
        }
    }

    #[test]
    fn determinant_is_a_perfect_square() {
        for (a, b) in [c1(), c10(), c42(), c59()] {
            let form = form_via_orbit(&a, &b).unwrap();
            let det = form.matrix().determinant();
            assert!(det.is_integer());
            assert!(crate::exactmat::bigint_is_perfect_square(&det.to_integer()));
        }
    }
}
